use std::fmt;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::hamming::{distance, Point, PointSet};

/// Certificate that `w` is shattered: `assignments[mask]` is a member of `U`
/// whose neighborhood meets `w` in exactly the points selected by `mask`
/// (bit `i` stands for `w[i]`).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ShatterWitness {
    pub w: Vec<Point>,
    pub assignments: Vec<Point>,
}

/// First reason a witness fails to certify shattering.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum WitnessDefect {
    AssignmentCount { expected: usize, found: usize },
    RepeatedPoint(Point),
    NotInSet(Point),
    Mismatch {
        subset: Vec<Point>,
        u: Point,
        realized: Vec<Point>,
    },
}

impl fmt::Display for WitnessDefect {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::AssignmentCount { expected, found } => {
                write!(f, "expected {expected} assignments, found {found}")
            }
            Self::RepeatedPoint(p) => write!(f, "shattered set repeats {p}"),
            Self::NotInSet(p) => write!(f, "{p} is not a member of U"),
            Self::Mismatch { subset, u, realized } => write!(
                f,
                "u = {u} should realize {} but realizes {}",
                fmt_points(subset),
                fmt_points(realized)
            ),
        }
    }
}

pub(crate) fn fmt_points(points: &[Point]) -> String {
    let inner: Vec<String> = points.iter().map(Point::to_string).collect();
    format!("{{{}}}", inner.join(", "))
}

impl ShatterWitness {
    pub fn size(&self) -> usize {
        self.w.len()
    }

    /// Points of `w` selected by `mask`.
    pub fn subset(&self, mask: usize) -> Vec<Point> {
        self.w
            .iter()
            .enumerate()
            .filter(|(i, _)| mask >> i & 1 == 1)
            .map(|(_, p)| p.clone())
            .collect()
    }

    pub fn validate(&self, u: &PointSet) -> Result<(), WitnessDefect> {
        let expected = 1usize << self.w.len();
        if self.assignments.len() != expected {
            return Err(WitnessDefect::AssignmentCount {
                expected,
                found: self.assignments.len(),
            });
        }
        for (i, p) in self.w.iter().enumerate() {
            if self.w[..i].contains(p) {
                return Err(WitnessDefect::RepeatedPoint(p.clone()));
            }
            if !u.contains(p) {
                return Err(WitnessDefect::NotInSet(p.clone()));
            }
        }
        let t = u.params().t();
        for (mask, point) in self.assignments.iter().enumerate() {
            if !u.contains(point) {
                return Err(WitnessDefect::NotInSet(point.clone()));
            }
            let realized = self
                .w
                .iter()
                .enumerate()
                .filter(|(_, x)| distance(x.coords(), point.coords()) == t)
                .fold(0usize, |m, (i, _)| m | 1 << i);
            if realized != mask {
                return Err(WitnessDefect::Mismatch {
                    subset: self.subset(mask),
                    u: point.clone(),
                    realized: self.subset(realized),
                });
            }
        }
        Ok(())
    }
}

/// True iff the witness certifies that its `w` is shattered by `n(U)`.
pub fn validate_witness(witness: &ShatterWitness, u: &PointSet) -> bool {
    witness.validate(u).is_ok()
}

#[derive(Serialize, Deserialize)]
struct WitnessRecord {
    #[serde(rename = "W")]
    w: Vec<Point>,
    assignments: Vec<AssignmentRecord>,
}

#[derive(Serialize, Deserialize)]
struct AssignmentRecord {
    #[serde(rename = "S")]
    s: Vec<usize>,
    u: Point,
}

impl Serialize for ShatterWitness {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let assignments = self
            .assignments
            .iter()
            .enumerate()
            .map(|(mask, u)| AssignmentRecord {
                s: (0..self.w.len()).filter(|i| mask >> i & 1 == 1).collect(),
                u: u.clone(),
            })
            .collect();
        WitnessRecord {
            w: self.w.clone(),
            assignments,
        }
        .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for ShatterWitness {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        use serde::de::Error;
        let record = WitnessRecord::deserialize(deserializer)?;
        let k = record.w.len();
        if k >= usize::BITS as usize {
            return Err(D::Error::custom("shattered set too large"));
        }
        let mut slots: Vec<Option<Point>> = vec![None; 1 << k];
        for a in record.assignments {
            if let Some(&bad) = a.s.iter().find(|&&i| i >= k) {
                return Err(D::Error::custom(format!("subset index {bad} out of range")));
            }
            let mask = a.s.iter().fold(0usize, |m, &i| m | 1 << i);
            if slots[mask].replace(a.u).is_some() {
                return Err(D::Error::custom(format!("subset {:?} assigned twice", a.s)));
            }
        }
        let assignments = slots
            .into_iter()
            .enumerate()
            .map(|(mask, u)| u.ok_or_else(|| D::Error::custom(format!("no assignment for subset mask {mask}"))))
            .collect::<Result<_, _>>()?;
        Ok(Self {
            w: record.w,
            assignments,
        })
    }
}
