//! Rectilinear lines and planes of `Z_q^d`.

use serde::{Deserialize, Serialize};

use super::{HammingParams, Point, PointSet};
use crate::error::{Error, Result};

/// The `q` vertices that agree everywhere except in `free_coord`.
/// `fixed` lists the other `d - 1` coordinates in their natural order.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Line {
    pub free_coord: usize,
    pub fixed: Vec<u32>,
}

impl Line {
    pub fn through(p: &Point, free_coord: usize) -> Self {
        Self {
            free_coord,
            fixed: drop_positions(p.coords(), &[free_coord]),
        }
    }

    /// The line's vertex whose free coordinate equals `value`.
    pub fn point_at(&self, value: u32) -> Point {
        let mut coords = self.fixed.clone();
        coords.insert(self.free_coord, value);
        Point::from_coords_unchecked(coords)
    }

    pub fn points(&self, params: &HammingParams) -> Vec<Point> {
        (0..params.q()).map(|v| self.point_at(v)).collect()
    }

    pub fn contains(&self, p: &Point) -> bool {
        p.dim() == self.fixed.len() + 1 && drop_positions(p.coords(), &[self.free_coord]) == self.fixed
    }

    /// Members of `u` on this line, in order of the free coordinate.
    pub fn members(&self, u: &PointSet) -> Vec<Point> {
        let params = u.params();
        self.points(&params).into_iter().filter(|p| u.contains(p)).collect()
    }

    /// Every line of the ambient space: by free coordinate, then fixed values
    /// in lexicographic order.
    pub fn all(params: &HammingParams) -> impl Iterator<Item = Line> + '_ {
        let per_coord = params.vertex_count() / params.q() as usize;
        (0..params.d()).flat_map(move |free| {
            (0..per_coord).map(move |key| Line {
                free_coord: free,
                fixed: digits(key, params.q(), params.d() - 1),
            })
        })
    }
}

/// The `q^2` vertices that agree everywhere except in two coordinates.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Plane {
    pub free_coords: (usize, usize),
    pub fixed: Vec<u32>,
}

impl Plane {
    pub fn new(params: &HammingParams, free_coords: (usize, usize), fixed: Vec<u32>) -> Result<Self> {
        let (i, j) = free_coords;
        let d = params.d();
        if d < 2 || i == j || i >= d || j >= d {
            return Err(Error::InvalidParams(format!(
                "plane free coordinates ({i},{j}) invalid for d = {d}"
            )));
        }
        if fixed.len() != d - 2 {
            return Err(Error::DimensionMismatch {
                expected: d - 2,
                found: fixed.len(),
            });
        }
        if let Some(&v) = fixed.iter().find(|&&v| v >= params.q()) {
            return Err(Error::CoordinateOutOfRange {
                position: 0,
                value: v as i64,
                q: params.q(),
            });
        }
        Ok(Self { free_coords, fixed })
    }

    pub fn through(p: &Point, free_coords: (usize, usize)) -> Self {
        Self {
            free_coords,
            fixed: drop_positions(p.coords(), &[free_coords.0, free_coords.1]),
        }
    }

    pub fn contains(&self, p: &Point) -> bool {
        let (i, j) = self.free_coords;
        p.dim() == self.fixed.len() + 2 && drop_positions(p.coords(), &[i, j]) == self.fixed
    }

    /// Number of vertices, `q^2`.
    pub fn size(params: &HammingParams) -> usize {
        (params.q() as usize).pow(2)
    }

    /// Vertex of the plane with the free coordinates set to `(a, b)`.
    pub fn point_at(&self, a: u32, b: u32) -> Point {
        let (i, j) = self.free_coords;
        let d = self.fixed.len() + 2;
        let mut rest = self.fixed.iter();
        let coords = (0..d)
            .map(|k| {
                if k == i {
                    a
                } else if k == j {
                    b
                } else {
                    *rest.next().expect("fixed has d - 2 entries")
                }
            })
            .collect();
        Point::from_coords_unchecked(coords)
    }
}

/// The `d` lines through `x`, ordered by free coordinate.
pub fn lines_through(x: &Point) -> Vec<Line> {
    (0..x.dim()).map(|j| Line::through(x, j)).collect()
}

/// True iff `x` and `y` share a rectilinear line.
pub fn collinear(x: &Point, y: &Point) -> bool {
    x.dim() == y.dim() && super::point::distance(x.coords(), y.coords()) <= 1
}

/// Members of `u` inside `plane`, re-indexed as a subset of `H(2, q, t)` with
/// the plane's two free coordinates (in the plane's order).
pub fn slice(u: &PointSet, plane: &Plane) -> Result<PointSet> {
    let params = u.params();
    let target = HammingParams::new(2, params.q(), params.t())?;
    let (i, j) = plane.free_coords;
    let points = u
        .points()
        .filter(|p| plane.contains(p))
        .map(|p| Point::from_coords_unchecked(vec![p.coords()[i], p.coords()[j]]));
    PointSet::from_points(target, points)
}

fn drop_positions(coords: &[u32], skip: &[usize]) -> Vec<u32> {
    coords
        .iter()
        .enumerate()
        .filter(|(k, _)| !skip.contains(k))
        .map(|(_, &c)| c)
        .collect()
}

/// Base-`q` digits of `value`, most significant first, zero padded to `len`.
pub(crate) fn digits(mut value: usize, q: u32, len: usize) -> Vec<u32> {
    let q = q as usize;
    let mut out = vec![0u32; len];
    for c in out.iter_mut().rev() {
        *c = (value % q) as u32;
        value /= q;
    }
    out
}

/// Inverse of [`digits`].
pub(crate) fn undigits(values: impl IntoIterator<Item = u32>, q: u32) -> usize {
    values
        .into_iter()
        .fold(0usize, |acc, v| acc * q as usize + v as usize)
}

/// Lexicographic key of the coordinates outside `skip`.
pub(crate) fn key_without(coords: &[u32], skip: &[usize], q: u32) -> usize {
    undigits(
        coords
            .iter()
            .enumerate()
            .filter(|(k, _)| !skip.contains(k))
            .map(|(_, &c)| c),
        q,
    )
}
