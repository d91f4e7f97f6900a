use std::fmt;

use serde::{Deserialize, Serialize};

use super::HammingParams;
use crate::error::{Error, Result};

/// A vertex of `H(d, q, t)`: a `d`-tuple over `Z_q`.
///
/// Ordering is lexicographic on coordinates, which agrees with the order of
/// vertex indices (coordinate 0 is the most significant digit).
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Point {
    coords: Vec<u32>,
}

impl Point {
    /// Validating constructor: exactly `d` coordinates, each in `[0, q)`.
    pub fn new(params: &HammingParams, coords: Vec<u32>) -> Result<Self> {
        params.require_dimension(coords.len())?;
        if let Some((position, &value)) = coords.iter().enumerate().find(|(_, &c)| c >= params.q()) {
            return Err(Error::CoordinateOutOfRange {
                position,
                value: value as i64,
                q: params.q(),
            });
        }
        Ok(Self { coords })
    }

    /// Builds a point from arbitrary integers, reducing each modulo `q`.
    pub fn wrapping(params: &HammingParams, coords: &[i64]) -> Result<Self> {
        params.require_dimension(coords.len())?;
        let q = params.q() as i64;
        Ok(Self {
            coords: coords.iter().map(|c| c.rem_euclid(q) as u32).collect(),
        })
    }

    /// Decodes a mixed-radix vertex index.
    pub fn from_index(params: &HammingParams, mut index: usize) -> Self {
        debug_assert!(index < params.vertex_count());
        let q = params.q() as usize;
        let mut coords = vec![0u32; params.d()];
        for c in coords.iter_mut().rev() {
            *c = (index % q) as u32;
            index /= q;
        }
        Self { coords }
    }

    /// Mixed-radix index, coordinate 0 most significant.
    pub fn index(&self, params: &HammingParams) -> usize {
        let q = params.q() as usize;
        self.coords.iter().fold(0, |acc, &c| acc * q + c as usize)
    }

    pub fn coords(&self) -> &[u32] {
        &self.coords
    }

    pub fn dim(&self) -> usize {
        self.coords.len()
    }

    /// Checks that the point is a valid vertex under `params`.
    pub fn check(&self, params: &HammingParams) -> Result<()> {
        Self::new(params, self.coords.clone()).map(|_| ())
    }

    pub(crate) fn from_coords_unchecked(coords: Vec<u32>) -> Self {
        Self { coords }
    }
}

impl fmt::Display for Point {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (i, c) in self.coords.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{c}")?;
        }
        f.write_str(")")
    }
}

/// Number of coordinates in which `x` and `y` differ.
pub fn hamming_distance(x: &Point, y: &Point) -> Result<usize> {
    if x.dim() != y.dim() {
        return Err(Error::DimensionMismatch {
            expected: x.dim(),
            found: y.dim(),
        });
    }
    Ok(distance(x.coords(), y.coords()))
}

pub(crate) fn distance(x: &[u32], y: &[u32]) -> usize {
    x.iter().zip(y).filter(|(a, b)| a != b).count()
}

/// Adjacency in `H(d, q, t)`. With `t = 0` every vertex carries a loop and
/// nothing else.
pub fn adjacent(x: &Point, y: &Point, params: &HammingParams) -> Result<bool> {
    x.check(params)?;
    y.check(params)?;
    Ok(distance(x.coords(), y.coords()) == params.t())
}
