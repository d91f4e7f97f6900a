use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Default bound on `q^d`.
pub const DEFAULT_VERTEX_CAP: u64 = 1 << 24;

/// The triple `(d, q, t)` describing the graph `H(d, q, t)`: vertices are
/// `d`-tuples over `Z_q`, adjacent when they differ in exactly `t` places.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct HammingParams {
    d: usize,
    q: u32,
    t: usize,
}

impl HammingParams {
    pub fn new(d: usize, q: u32, t: usize) -> Result<Self> {
        Self::with_cap(d, q, t, DEFAULT_VERTEX_CAP)
    }

    pub fn with_cap(d: usize, q: u32, t: usize, cap: u64) -> Result<Self> {
        if d == 0 {
            return Err(Error::InvalidParams("d must be at least 1".into()));
        }
        if q == 0 {
            return Err(Error::InvalidParams("q must be at least 1".into()));
        }
        let count = (q as u128).checked_pow(d as u32).unwrap_or(u128::MAX);
        if count > cap as u128 {
            return Err(Error::VertexCap { count, cap });
        }
        Ok(Self { d, q, t })
    }

    pub fn d(&self) -> usize {
        self.d
    }

    pub fn q(&self) -> u32 {
        self.q
    }

    pub fn t(&self) -> usize {
        self.t
    }

    pub fn vertex_count(&self) -> usize {
        (self.q as usize).pow(self.d as u32)
    }

    /// Same `(d, q)` with a different adjacency distance.
    pub fn with_t(&self, t: usize) -> Self {
        Self { t, ..*self }
    }

    pub(crate) fn require_dimension(&self, found: usize) -> Result<()> {
        if found != self.d {
            return Err(Error::DimensionMismatch {
                expected: self.d,
                found,
            });
        }
        Ok(())
    }
}

impl fmt::Display for HammingParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "H({},{},{})", self.d, self.q, self.t)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_degenerate_parameters() {
        assert!(HammingParams::new(0, 3, 1).is_err());
        assert!(HammingParams::new(2, 0, 1).is_err());
        assert!(HammingParams::new(1, 1, 0).is_ok());
    }

    #[test]
    fn vertex_cap_is_enforced() {
        let err = HammingParams::new(25, 2, 1).unwrap_err();
        assert_eq!(
            err,
            Error::VertexCap {
                count: 1 << 25,
                cap: DEFAULT_VERTEX_CAP
            }
        );
        assert!(HammingParams::new(24, 2, 1).is_ok());
        assert!(HammingParams::with_cap(3, 4, 1, 63).is_err());
        assert!(HammingParams::with_cap(3, 4, 1, 64).is_ok());
    }

    #[test]
    fn huge_exponents_do_not_overflow() {
        assert!(matches!(
            HammingParams::new(200, 1000, 1),
            Err(Error::VertexCap { .. })
        ));
    }
}
