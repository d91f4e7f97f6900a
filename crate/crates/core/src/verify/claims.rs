use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize, Serializer};

use crate::constructions::ConstructionSpec;
use crate::error::{Error, Result};
use crate::hamming::HammingParams;

/// Identifier of a checkable size bound, extremal construction, or
/// configuration implication.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum ClaimId {
    /// `|U| >= 2q^(d-1) + 1` forces vc >= 2 in `H(d,q,1)`.
    #[serde(rename = "P1.1")]
    PairBound,
    /// Odd `q`: `|U| >= 2q` forces vc >= 2 in `H(2,q,1)`.
    #[serde(rename = "T1.2")]
    PairBoundOdd,
    /// `|U| >= 3q + 1` forces vc = 3 in `H(2,q,1)`.
    #[serde(rename = "T1.3")]
    TripleBound,
    /// `|U| >= 3q^(d-1) + 1` forces vc = 3 in `H(d,q,1)`.
    #[serde(rename = "C1.4")]
    TripleBoundHigher,
    /// A set of size `5q^2/4` in `H(3,q,1)` with vc = 1.
    #[serde(rename = "P1.5")]
    SparseCube,
    /// The diagonal hyperplane of size `q^(d-1)`.
    #[serde(rename = "P1.6")]
    Diagonal,
    /// A set of size `3q^(d-1)` with vc <= 2.
    #[serde(rename = "P1.8")]
    Band,
    /// `|U| >= 2q` forces vc >= 2 in `H(2,q,2)`.
    #[serde(rename = "T1.8t2")]
    PairBoundDistanceTwo,
    /// vc = 3 in `H(2,q,1)` forces four points on a line.
    #[serde(rename = "L3.1")]
    FourOnLine,
    /// vc = 3 in `H(d,q,1)` forces four points on a line or a rectangle.
    #[serde(rename = "L4.1")]
    FourOnLineOrRectangle,
}

impl ClaimId {
    pub const ALL: [ClaimId; 10] = [
        Self::PairBound,
        Self::PairBoundOdd,
        Self::TripleBound,
        Self::TripleBoundHigher,
        Self::SparseCube,
        Self::Diagonal,
        Self::Band,
        Self::PairBoundDistanceTwo,
        Self::FourOnLine,
        Self::FourOnLineOrRectangle,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            Self::PairBound => "P1.1",
            Self::PairBoundOdd => "T1.2",
            Self::TripleBound => "T1.3",
            Self::TripleBoundHigher => "C1.4",
            Self::SparseCube => "P1.5",
            Self::Diagonal => "P1.6",
            Self::Band => "P1.8",
            Self::PairBoundDistanceTwo => "T1.8t2",
            Self::FourOnLine => "L3.1",
            Self::FourOnLineOrRectangle => "L4.1",
        }
    }

    pub fn quantifier(self) -> Quantifier {
        match self {
            Self::SparseCube | Self::Diagonal | Self::Band => Quantifier::Exists,
            _ => Quantifier::ForAll,
        }
    }

    /// Ambient dimension used when none is given.
    pub fn default_d(self) -> usize {
        match self {
            Self::SparseCube | Self::TripleBoundHigher | Self::Band | Self::FourOnLineOrRectangle => 3,
            _ => 2,
        }
    }

    fn takes_d(self) -> bool {
        matches!(
            self,
            Self::PairBound | Self::TripleBoundHigher | Self::Diagonal | Self::Band | Self::FourOnLineOrRectangle
        )
    }
}

impl fmt::Display for ClaimId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for ClaimId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Self::ALL
            .into_iter()
            .find(|id| id.as_str().eq_ignore_ascii_case(s))
            .ok_or_else(|| Error::UnknownClaim(s.to_string()))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Quantifier {
    ForAll,
    Exists,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Relation {
    AtLeast(usize),
    Exactly(usize),
    AtMost(usize),
}

impl Relation {
    /// Decides the relation from "some `j`-set is shattered" queries.
    pub fn holds(self, has: impl Fn(usize) -> bool) -> bool {
        match self {
            Self::AtLeast(k) => has(k),
            Self::Exactly(k) => has(k) && !has(k + 1),
            Self::AtMost(k) => !has(k + 1),
        }
    }

    pub fn holds_for(self, vc: i32) -> bool {
        match self {
            Self::AtLeast(k) => vc >= k as i32,
            Self::Exactly(k) => vc == k as i32,
            Self::AtMost(k) => vc <= k as i32,
        }
    }

    /// The part implied for every subset once it holds for the full vertex
    /// set: vc never grows when points are removed.
    pub fn upper(self) -> Option<usize> {
        match self {
            Self::AtLeast(_) => None,
            Self::Exactly(k) | Self::AtMost(k) => Some(k),
        }
    }

    pub fn lower(self) -> Option<usize> {
        match self {
            Self::AtLeast(k) | Self::Exactly(k) => Some(k),
            Self::AtMost(_) => None,
        }
    }
}

impl fmt::Display for Relation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::AtLeast(k) => write!(f, "vc >= {k}"),
            Self::Exactly(k) => write!(f, "vc = {k}"),
            Self::AtMost(k) => write!(f, "vc <= {k}"),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Consequent {
    FourOnLine,
    FourOnLineOrRectangle,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Assertion {
    Vc(Relation),
    /// vc >= 3 implies the configuration.
    Implies(Consequent),
}

impl fmt::Display for Assertion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::Vc(r) => r.fmt(f),
            Self::Implies(Consequent::FourOnLine) => f.write_str("vc = 3 implies four points on a line"),
            Self::Implies(Consequent::FourOnLineOrRectangle) => {
                f.write_str("vc = 3 implies four points on a line or a rectangle")
            }
        }
    }
}

/// A single checkable statement: for all (or for some) `U` in `params`
/// with `|U| >= m` (or `|U| = m`), the assertion holds.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ClaimSpec {
    pub id: ClaimId,
    pub params: HammingParams,
    pub m: usize,
    pub assertion: Assertion,
}

fn need(ok: bool, id: ClaimId, what: &str) -> Result<()> {
    if ok {
        Ok(())
    } else {
        Err(Error::InvalidParams(format!("{id} needs {what}")))
    }
}

impl ClaimSpec {
    /// The claim as stated for dimension `d` (or the claim's default) and `q`.
    pub fn standard(id: ClaimId, d: Option<usize>, q: u32) -> Result<Self> {
        use ClaimId::*;
        let d = match d {
            Some(d) if id.takes_d() => d,
            Some(d) if d != id.default_d() => {
                return Err(Error::InvalidParams(format!("{id} is only stated for d = {}", id.default_d())))
            }
            _ => id.default_d(),
        };
        let qs = q as usize;
        let pow = |e: usize| qs.checked_pow(e as u32).unwrap_or(usize::MAX);
        let t = if id == PairBoundDistanceTwo { 2 } else { 1 };
        let (m, assertion) = match id {
            PairBound => {
                need(d >= 2 && q >= 3, id, "d >= 2 and q >= 3")?;
                (2 * pow(d - 1) + 1, Assertion::Vc(Relation::AtLeast(2)))
            }
            PairBoundOdd => {
                need(q >= 3, id, "q >= 3")?;
                // even q falls back to the general bound, whose d = 2 case is tight
                let m = if q % 2 == 1 { 2 * qs } else { 2 * qs + 1 };
                (m, Assertion::Vc(Relation::AtLeast(2)))
            }
            TripleBound => {
                need(q >= 4, id, "q >= 4")?;
                (3 * qs + 1, Assertion::Vc(Relation::Exactly(3)))
            }
            TripleBoundHigher => {
                need(d >= 2 && q >= 4, id, "d >= 2 and q >= 4")?;
                (3 * pow(d - 1) + 1, Assertion::Vc(Relation::Exactly(3)))
            }
            SparseCube => {
                need(q >= 4 && q.is_multiple_of(2), id, "q even and q >= 4")?;
                (5 * qs * qs / 4, Assertion::Vc(Relation::Exactly(1)))
            }
            Diagonal => {
                need(d >= 2 && q >= 2, id, "d >= 2 and q >= 2")?;
                (pow(d - 1), Assertion::Vc(Relation::AtMost(1)))
            }
            Band => {
                need(d >= 3 && q >= 4, id, "d >= 3 and q >= 4")?;
                (3 * pow(d - 1), Assertion::Vc(Relation::AtMost(2)))
            }
            PairBoundDistanceTwo => {
                need(q >= 3, id, "q >= 3")?;
                (2 * qs, Assertion::Vc(Relation::AtLeast(2)))
            }
            FourOnLine => {
                need(q >= 4, id, "q >= 4")?;
                (0, Assertion::Implies(Consequent::FourOnLine))
            }
            FourOnLineOrRectangle => {
                need(d >= 2 && q >= 2, id, "d >= 2 and q >= 2")?;
                (0, Assertion::Implies(Consequent::FourOnLineOrRectangle))
            }
        };
        Ok(Self {
            id,
            params: HammingParams::new(d, q, t)?,
            m,
            assertion,
        })
    }

    pub fn quantifier(&self) -> Quantifier {
        self.id.quantifier()
    }

    /// Construction behind an existence claim, or the extremal set of size
    /// `m - 1` showing a universal bound cannot be lowered.
    pub fn construction(&self) -> Result<ConstructionSpec> {
        use ClaimId::*;
        let (d, q) = (self.params.d(), self.params.q());
        match self.id {
            PairBound if d == 2 && q % 2 == 0 => Ok(ConstructionSpec::U1 { q }),
            PairBound => Err(Error::InvalidParams(
                "P1.1 has a matching construction only for d = 2 and even q".into(),
            )),
            PairBoundOdd => Ok(ConstructionSpec::U1 { q }),
            TripleBound => Ok(ConstructionSpec::U2 { q }),
            TripleBoundHigher | Band => Ok(ConstructionSpec::Band3 { d, q }),
            SparseCube => Ok(ConstructionSpec::U3 { q }),
            Diagonal => Ok(ConstructionSpec::Diag { d, q }),
            PairBoundDistanceTwo => Ok(ConstructionSpec::UStar { q }),
            FourOnLine | FourOnLineOrRectangle => {
                Err(Error::InvalidParams(format!("{} has no extremal construction", self.id)))
            }
        }
    }
}

impl fmt::Display for ClaimSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let size = match self.quantifier() {
            Quantifier::ForAll => format!("|U| >= {}", self.m),
            Quantifier::Exists => format!("|U| = {}", self.m),
        };
        let q = match self.quantifier() {
            Quantifier::ForAll => "forall",
            Quantifier::Exists => "exists",
        };
        write!(f, "{} {} {q} {size}: {}", self.id, self.params, self.assertion)
    }
}

#[derive(Serialize)]
struct ClaimRecord {
    id: ClaimId,
    d: usize,
    q: u32,
    t: usize,
    quantifier: Quantifier,
    m: usize,
    assertion: String,
}

impl Serialize for ClaimSpec {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        ClaimRecord {
            id: self.id,
            d: self.params.d(),
            q: self.params.q(),
            t: self.params.t(),
            quantifier: self.quantifier(),
            m: self.m,
            assertion: self.assertion.to_string(),
        }
        .serialize(serializer)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ids_round_trip() {
        for id in ClaimId::ALL {
            assert_eq!(id.as_str().parse::<ClaimId>().unwrap(), id);
            assert_eq!(serde_json::to_string(&id).unwrap(), format!("\"{id}\""));
        }
        assert_eq!("t1.8T2".parse::<ClaimId>().unwrap(), ClaimId::PairBoundDistanceTwo);
        assert!(matches!("X9".parse::<ClaimId>(), Err(Error::UnknownClaim(_))));
    }

    #[test]
    fn standard_bounds() {
        let m = |id, d, q| ClaimSpec::standard(id, d, q).unwrap().m;
        assert_eq!(m(ClaimId::PairBound, None, 4), 9);
        assert_eq!(m(ClaimId::PairBound, Some(3), 3), 19);
        assert_eq!(m(ClaimId::PairBoundOdd, None, 3), 6);
        assert_eq!(m(ClaimId::PairBoundOdd, None, 4), 9);
        assert_eq!(m(ClaimId::TripleBound, None, 4), 13);
        assert_eq!(m(ClaimId::TripleBoundHigher, None, 4), 49);
        assert_eq!(m(ClaimId::SparseCube, None, 4), 20);
        assert_eq!(m(ClaimId::Diagonal, Some(3), 3), 9);
        assert_eq!(m(ClaimId::Band, None, 6), 108);
        assert_eq!(m(ClaimId::PairBoundDistanceTwo, None, 3), 6);
        let t2 = ClaimSpec::standard(ClaimId::PairBoundDistanceTwo, None, 3).unwrap();
        assert_eq!(t2.params.t(), 2);
    }

    #[test]
    fn preconditions() {
        assert!(ClaimSpec::standard(ClaimId::TripleBound, None, 3).is_err());
        assert!(ClaimSpec::standard(ClaimId::SparseCube, None, 5).is_err());
        assert!(ClaimSpec::standard(ClaimId::TripleBound, Some(3), 4).is_err());
        assert!(ClaimSpec::standard(ClaimId::TripleBound, Some(2), 4).is_ok());
        assert!(ClaimSpec::standard(ClaimId::Band, Some(2), 6).is_err());
    }

    #[test]
    fn relations() {
        let has = |vc: usize| move |k: usize| k <= vc;
        assert!(Relation::AtLeast(2).holds(has(3)));
        assert!(!Relation::Exactly(2).holds(has(3)));
        assert!(Relation::AtMost(2).holds(has(1)));
        assert!(Relation::Exactly(1).holds_for(1));
        assert!(!Relation::AtMost(1).holds_for(2));
    }

    #[test]
    fn constructions_for_claims() {
        let c = |id, q| ClaimSpec::standard(id, None, q).unwrap().construction();
        assert_eq!(c(ClaimId::TripleBound, 5).unwrap(), ConstructionSpec::U2 { q: 5 });
        assert_eq!(c(ClaimId::PairBound, 4).unwrap(), ConstructionSpec::U1 { q: 4 });
        assert!(c(ClaimId::PairBound, 5).is_err());
        assert!(c(ClaimId::FourOnLine, 4).is_err());
    }
}
