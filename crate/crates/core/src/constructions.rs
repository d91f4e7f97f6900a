//! Explicit extremal point sets.
//!
//! | name    | ambient     | size          |
//! |---------|-------------|---------------|
//! | `u1`    | `H(2,q,1)`  | `2q` (even q), `2q - 1` (odd q) |
//! | `u2`    | `H(2,q,1)`  | `3q`          |
//! | `u3`    | `H(3,q,1)`  | `5q^2 / 4`    |
//! | `diag`  | `H(d,q,1)`  | `q^(d-1)`     |
//! | `band3` | `H(d,q,1)`  | `3 q^(d-1)`   |
//! | `ustar` | `H(2,q,2)`  | `2q - 1`      |

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::hamming::{digits, HammingParams, Point, PointSet};

/// The unit square `{0,1}^2` whose diagonal translates make up `u1`.
const UNIT_SQUARE: [(u32, u32); 4] = [(0, 0), (0, 1), (1, 0), (1, 1)];

/// Offsets `{-1, 0, 2}` of the three diagonal hyperplanes in `band3`.
const BAND_OFFSETS: [i64; 3] = [-1, 0, 2];

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(tag = "name", rename_all = "lowercase")]
pub enum ConstructionSpec {
    U1 { q: u32 },
    U2 { q: u32 },
    U3 { q: u32 },
    Diag { d: usize, q: u32 },
    Band3 { d: usize, q: u32 },
    UStar { q: u32 },
}

impl ConstructionSpec {
    pub const NAMES: [&'static str; 6] = ["u1", "u2", "u3", "diag", "band3", "ustar"];

    /// Builds a spec from a CLI-style name. `d` is only read by `diag` and
    /// `band3`, where it defaults to 3.
    pub fn from_name(name: &str, d: Option<usize>, q: u32) -> Result<Self> {
        let d = d.unwrap_or(3);
        Ok(match name.to_ascii_lowercase().as_str() {
            "u1" => Self::U1 { q },
            "u2" => Self::U2 { q },
            "u3" => Self::U3 { q },
            "diag" => Self::Diag { d, q },
            "band3" => Self::Band3 { d, q },
            "ustar" => Self::UStar { q },
            _ => return Err(Error::UnknownConstruction(name.to_string())),
        })
    }

    pub fn name(&self) -> &'static str {
        match self {
            Self::U1 { .. } => "u1",
            Self::U2 { .. } => "u2",
            Self::U3 { .. } => "u3",
            Self::Diag { .. } => "diag",
            Self::Band3 { .. } => "band3",
            Self::UStar { .. } => "ustar",
        }
    }

    pub fn q(&self) -> u32 {
        match *self {
            Self::U1 { q }
            | Self::U2 { q }
            | Self::U3 { q }
            | Self::Diag { q, .. }
            | Self::Band3 { q, .. }
            | Self::UStar { q } => q,
        }
    }

    /// `(d, t)` of the ambient graph.
    pub fn ambient(&self) -> (usize, usize) {
        match *self {
            Self::U1 { .. } | Self::U2 { .. } => (2, 1),
            Self::U3 { .. } => (3, 1),
            Self::Diag { d, .. } | Self::Band3 { d, .. } => (d, 1),
            Self::UStar { .. } => (2, 2),
        }
    }

    /// Size the construction has by design.
    pub fn expected_size(&self) -> usize {
        match *self {
            Self::U1 { q } => 2 * q as usize - (q as usize % 2),
            Self::U2 { q } => 3 * q as usize,
            Self::U3 { q } => 5 * (q as usize).pow(2) / 4,
            Self::Diag { d, q } => (q as usize).pow(d as u32 - 1),
            Self::Band3 { d, q } => 3 * (q as usize).pow(d as u32 - 1),
            Self::UStar { q } => 2 * q as usize - 1,
        }
    }
}

impl fmt::Display for ConstructionSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            Self::Diag { d, q } | Self::Band3 { d, q } => write!(f, "{} d={d} q={q}", self.name()),
            _ => write!(f, "{} q={}", self.name(), self.q()),
        }
    }
}

impl FromStr for ConstructionSpec {
    type Err = Error;

    /// Parses `name:q` or `name:d:q`.
    fn from_str(s: &str) -> Result<Self> {
        let parts: Vec<&str> = s.split(':').collect();
        let num = |v: &str| {
            v.parse::<u32>()
                .map_err(|_| Error::InvalidParams(format!("bad number {v:?} in {s:?}")))
        };
        match parts[..] {
            [name, q] => Self::from_name(name, None, num(q)?),
            [name, d, q] => Self::from_name(name, Some(num(d)? as usize), num(q)?),
            _ => Err(Error::UnknownConstruction(s.to_string())),
        }
    }
}

fn invalid(msg: impl Into<String>) -> Error {
    Error::InvalidParams(msg.into())
}

fn collect(params: HammingParams, coords: impl IntoIterator<Item = Vec<u32>>) -> Result<PointSet> {
    PointSet::from_points(params, coords.into_iter().map(Point::from_coords_unchecked))
}

fn u1_coords(q: u32) -> Vec<Vec<u32>> {
    let even = q - q % 2;
    let mut out: Vec<Vec<u32>> = (0..even / 2)
        .flat_map(|i| UNIT_SQUARE.iter().map(move |&(a, b)| vec![2 * i + a, 2 * i + b]))
        .collect();
    if q % 2 == 1 {
        out.push(vec![q - 1, q - 1]);
    }
    out
}

/// Diagonal translates of the unit square; odd `q` adds the corner `(q-1, q-1)`.
pub fn construct_u1(q: u32) -> Result<PointSet> {
    if q < 2 {
        return Err(invalid("u1 needs q >= 2"));
    }
    collect(HammingParams::new(2, q, 1)?, u1_coords(q))
}

/// Three consecutive columns (cyclically) per row: `{(c, r) : c - r in {0,1,2} mod q}`.
pub fn construct_u2(q: u32) -> Result<PointSet> {
    if q < 3 {
        return Err(invalid("u2 needs q >= 3"));
    }
    let coords = (0..q).flat_map(|r| (0..3).map(move |s| vec![(r + s) % q, r]));
    collect(HammingParams::new(2, q, 1)?, coords)
}

/// `q/2` layers of two sheets each. Layer `l` places, for every `i < q/2`,
/// the unit square at `(2(i+l) mod q, 2i)` in sheet `2l` and one apex above
/// its anchor corner in sheet `2l+1`.
pub fn construct_u3(q: u32) -> Result<PointSet> {
    if q % 2 == 1 {
        return Err(invalid("u3: q must be even"));
    }
    if q < 4 {
        return Err(invalid("u3 needs q >= 4"));
    }
    let half = q / 2;
    let mut coords = Vec::with_capacity(5 * (half * half) as usize);
    for layer in 0..half {
        for i in 0..half {
            let x = (2 * (i + layer)) % q;
            let y = 2 * i;
            for &(a, b) in &UNIT_SQUARE {
                coords.push(vec![x + a, y + b, 2 * layer]);
            }
            coords.push(vec![x, y, 2 * layer + 1]);
        }
    }
    collect(HammingParams::new(3, q, 1)?, coords)
}

fn hyperplane_points(d: usize, q: u32, offsets: &[i64]) -> Vec<Vec<u32>> {
    let base = (q as usize).pow(d as u32 - 1);
    let mut out = Vec::with_capacity(base * offsets.len());
    for key in 0..base {
        let head = digits(key, q, d - 1);
        let sum: i64 = head.iter().map(|&c| c as i64).sum();
        for &eps in offsets {
            let mut coords = head.clone();
            coords.push((sum + eps).rem_euclid(q as i64) as u32);
            out.push(coords);
        }
    }
    out
}

/// `{x : x_last = x_0 + ... + x_{d-2} mod q}`; edge-free at `t = 1`.
pub fn construct_diag(d: usize, q: u32) -> Result<PointSet> {
    if d < 2 || q < 2 {
        return Err(invalid("diag needs d >= 2 and q >= 2"));
    }
    let params = HammingParams::new(d, q, 1)?;
    collect(params, hyperplane_points(d, q, &[0]))
}

/// Union of the shifted hyperplanes `x_last = eps + sum(others)` for
/// `eps in {-1, 0, 2}` (mod q).
pub fn construct_band3(d: usize, q: u32) -> Result<PointSet> {
    if d < 3 {
        return Err(invalid("band3 needs d >= 3"));
    }
    if q <= 3 {
        return Err(invalid("band3 needs q >= 4 so that the offsets -1, 0, 2 stay distinct"));
    }
    if q < 7 {
        log::warn!("band3 with q = {q} contains rectangles; VC < 3 is only guaranteed for q >= 7");
    }
    let params = HammingParams::new(d, q, 1)?;
    collect(params, hyperplane_points(d, q, &BAND_OFFSETS))
}

/// Axis cross `{(a, 0)} ∪ {(0, b)}` in `H(2, q, 2)`.
pub fn construct_ustar(q: u32) -> Result<PointSet> {
    if q < 2 {
        return Err(invalid("ustar needs q >= 2"));
    }
    let coords = (0..q).map(|a| vec![a, 0]).chain((1..q).map(|b| vec![0, b]));
    collect(HammingParams::new(2, q, 2)?, coords)
}

pub fn construct(spec: &ConstructionSpec) -> Result<PointSet> {
    match *spec {
        ConstructionSpec::U1 { q } => construct_u1(q),
        ConstructionSpec::U2 { q } => construct_u2(q),
        ConstructionSpec::U3 { q } => construct_u3(q),
        ConstructionSpec::Diag { d, q } => construct_diag(d, q),
        ConstructionSpec::Band3 { d, q } => construct_band3(d, q),
        ConstructionSpec::UStar { q } => construct_ustar(q),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hamming::{slice, Line, Plane};

    fn coords(set: &PointSet) -> Vec<Vec<u32>> {
        set.points().map(|p| p.coords().to_vec()).collect()
    }

    #[test]
    fn u1_small_cases() {
        assert_eq!(
            coords(&construct_u1(4).unwrap()),
            vec![
                vec![0, 0],
                vec![0, 1],
                vec![1, 0],
                vec![1, 1],
                vec![2, 2],
                vec![2, 3],
                vec![3, 2],
                vec![3, 3]
            ]
        );
        assert_eq!(
            coords(&construct_u1(3).unwrap()),
            vec![vec![0, 0], vec![0, 1], vec![1, 0], vec![1, 1], vec![2, 2]]
        );
        assert_eq!(construct_u1(2).unwrap().len(), 4);
        assert!(construct_u1(1).is_err());
    }

    #[test]
    fn u2_rows_and_wraparound() {
        let u = construct_u2(4).unwrap();
        assert_eq!(u.len(), 12);
        let row0: Vec<u32> = u.points().filter(|p| p.coords()[1] == 0).map(|p| p.coords()[0]).collect();
        assert_eq!(row0, vec![0, 1, 2]);
        assert_eq!(construct_u2(3).unwrap(), PointSet::full(HammingParams::new(2, 3, 1).unwrap()));
        let u5 = construct_u2(5).unwrap();
        let row4: Vec<u32> = u5.points().filter(|p| p.coords()[1] == 4).map(|p| p.coords()[0]).collect();
        assert_eq!(row4, vec![0, 1, 4]);
        assert!(construct_u2(2).is_err());
    }

    #[test]
    fn u2_has_three_points_on_every_line() {
        for q in 4..=9 {
            let u = construct_u2(q).unwrap();
            let params = u.params();
            for line in Line::all(&params) {
                assert_eq!(line.members(&u).len(), 3, "q={q} line={line:?}");
            }
        }
    }

    #[test]
    fn u3_sizes_and_preconditions() {
        assert_eq!(construct_u3(4).unwrap().len(), 20);
        assert_eq!(construct_u3(6).unwrap().len(), 45);
        assert!(matches!(construct_u3(5), Err(Error::InvalidParams(m)) if m.contains("even")));
        assert!(construct_u3(2).is_err());
    }

    #[test]
    fn diag_examples() {
        assert_eq!(coords(&construct_diag(2, 3).unwrap()), vec![vec![0, 0], vec![1, 1], vec![2, 2]]);
        assert_eq!(
            coords(&construct_diag(3, 2).unwrap()),
            vec![vec![0, 0, 0], vec![0, 1, 1], vec![1, 0, 1], vec![1, 1, 0]]
        );
        for (d, q) in [(2, 5), (3, 4), (4, 3), (5, 2)] {
            let u = construct_diag(d, q).unwrap();
            assert_eq!(u.len(), (q as usize).pow(d as u32 - 1));
            assert_eq!(u.edge_count(), 0);
        }
    }

    #[test]
    fn band3_size_and_slices() {
        let u = construct_band3(3, 6).unwrap();
        assert_eq!(u.len(), 108);
        let params = u.params();
        let plane = Plane::new(&params, (1, 2), vec![0]).unwrap();
        let s = slice(&u, &plane).unwrap();
        assert_eq!(s.len(), 18);
        for c in 0..6 {
            assert_eq!(s.points().filter(|p| p.coords()[0] == c).count(), 3);
        }
        assert!(construct_band3(3, 3).is_err());
        assert!(construct_band3(2, 6).is_err());
        assert_eq!(construct_band3(3, 4).unwrap().len(), 48);
    }

    #[test]
    fn band3_slices_show_two_diagonals_a_gap_and_a_diagonal() {
        // Along every row of a slice fixing one of the first d-1 coordinates,
        // the occupied offsets relative to the main diagonal are {-1, 0, 2}.
        let u = construct_band3(3, 6).unwrap();
        let params = u.params();
        for fixed_coord in 0..2 {
            let free = if fixed_coord == 0 { (1, 2) } else { (0, 2) };
            for v in 0..6 {
                let plane = Plane::new(&params, free, vec![v]).unwrap();
                let s = slice(&u, &plane).unwrap();
                for a in 0..6u32 {
                    let mut offs: Vec<i64> = s
                        .points()
                        .filter(|p| p.coords()[0] == a)
                        .map(|p| (p.coords()[1] as i64 - a as i64 - v as i64).rem_euclid(6))
                        .collect();
                    offs.sort();
                    assert_eq!(offs, vec![0, 2, 5]);
                }
            }
        }
    }

    #[test]
    fn ustar_examples() {
        assert_eq!(
            coords(&construct_ustar(3).unwrap()),
            vec![vec![0, 0], vec![0, 1], vec![0, 2], vec![1, 0], vec![2, 0]]
        );
        assert_eq!(construct_ustar(2).unwrap().len(), 3);
        let u = construct_ustar(4).unwrap();
        assert_eq!(u.params().t(), 2);
        let origin = Point::new(&u.params(), vec![0, 0]).unwrap();
        assert!(u.neighborhood(&origin).unwrap().is_empty());
    }

    #[test]
    fn dispatcher() {
        let cases = [("U1", None, 4, 8), ("USTAR", None, 3, 5), ("DIAG", Some(4), 3, 27)];
        for (name, d, q, size) in cases {
            let spec = ConstructionSpec::from_name(name, d, q).unwrap();
            let set = construct(&spec).unwrap();
            assert_eq!(set.len(), size);
            assert_eq!(spec.expected_size(), size);
        }
        assert!(matches!(
            ConstructionSpec::from_name("u9", None, 3),
            Err(Error::UnknownConstruction(_))
        ));
        assert_eq!("band3:3:6".parse::<ConstructionSpec>().unwrap(), ConstructionSpec::Band3 { d: 3, q: 6 });
        assert_eq!("u2:5".parse::<ConstructionSpec>().unwrap(), ConstructionSpec::U2 { q: 5 });
    }

    #[test]
    fn size_formulas_hold() {
        for q in 2..=16 {
            let mut specs = vec![ConstructionSpec::U1 { q }, ConstructionSpec::UStar { q }];
            if q >= 3 {
                specs.push(ConstructionSpec::U2 { q });
            }
            if q >= 4 && q % 2 == 0 {
                specs.push(ConstructionSpec::U3 { q });
            }
            for d in 2..=4 {
                if (q as u64).pow(d as u32) <= 1 << 16 {
                    specs.push(ConstructionSpec::Diag { d, q });
                    if d >= 3 && q >= 4 {
                        specs.push(ConstructionSpec::Band3 { d, q });
                    }
                }
            }
            for spec in specs {
                let set = construct(&spec).unwrap();
                assert_eq!(set.len(), spec.expected_size(), "{spec}");
                let (d, t) = spec.ambient();
                assert_eq!((set.params().d(), set.params().t()), (d, t));
            }
        }
    }
}
