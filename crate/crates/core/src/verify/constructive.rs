use std::time::Instant;

use super::{Assertion, ClaimId, ClaimSpec, Evidence, Mode, Outcome, Quantifier, Relation, VerificationReport};
use crate::constructions::construct;
use crate::error::{Error, Result};
use crate::shatter::vc_dimension;

/// Annotation attached to every diagonal-hyperplane report.
pub const DIAGONAL_NOTE: &str = "stated value vc = 1; the set is edge-free, so every trace on a nonempty W is empty \
                                 and the value from the definition is vc = 0. Checked as vc <= 1 and edge-free.";

/// Builds the claim's construction and checks it: for an existence claim,
/// that it has size `m` and satisfies the assertion; for a universal claim,
/// that it has size `m - 1` and violates it, so `m` cannot be lowered.
pub fn check_constructive(claim: &ClaimSpec) -> Result<VerificationReport> {
    let start = Instant::now();
    let spec = claim.construction()?;
    let set = construct(&spec)?;
    if set.params() != claim.params {
        return Err(Error::InvalidParams(format!(
            "{spec} lives in {}, the claim in {}",
            set.params(),
            claim.params
        )));
    }
    let Assertion::Vc(rel) = claim.assertion else {
        return Err(Error::InvalidParams(format!("{} has no construction", claim.id)));
    };
    let probe = match rel {
        Relation::AtLeast(k) | Relation::Exactly(k) | Relation::AtMost(k) => k + 1,
    };
    let vc = vc_dimension(&set, Some(probe));
    let mut notes = Vec::new();

    let (target, ok) = match claim.quantifier() {
        Quantifier::Exists => (claim.m, rel.holds_for(vc.dimension)),
        Quantifier::ForAll => (claim.m - 1, !rel.holds_for(vc.dimension)),
    };
    let mut ok = ok && set.len() == target;
    if set.len() != target {
        notes.push(format!("expected size {target}, construction has {}", set.len()));
    }
    if claim.id == ClaimId::Diagonal {
        let edges = set.edge_count();
        ok &= edges == 0;
        notes.push(format!("edges inside U: {edges}"));
        notes.push(DIAGONAL_NOTE.to_string());
    }
    let evidence = Evidence {
        construction: Some(spec.to_string()),
        set,
        vc,
    };
    Ok(VerificationReport {
        claim: *claim,
        mode: Mode::Constructive,
        outcome: if ok { Outcome::Verified } else { Outcome::Refuted },
        work: 1,
        counterexample: (!ok).then(|| evidence.clone()),
        certificate: Some(evidence),
        notes,
        elapsed: start.elapsed(),
    })
}

/// Tightness of a bound (or the existence statement) at `q`, with `d`
/// defaulting per claim.
pub fn check_tightness(id: ClaimId, d: Option<usize>, q: u32) -> Result<VerificationReport> {
    check_constructive(&ClaimSpec::standard(id, d, q)?)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn pair_bound_tight_at_even_q() {
        let r = check_tightness(ClaimId::PairBoundOdd, None, 4).unwrap();
        assert!(r.is_verified());
        let c = r.certificate.unwrap();
        assert_eq!((c.set.len(), c.vc.dimension), (8, 1));
    }

    #[test]
    fn triple_bound_tight_at_q5() {
        let r = check_tightness(ClaimId::TripleBound, None, 5).unwrap();
        assert!(r.is_verified());
        let c = r.certificate.unwrap();
        assert_eq!(c.set.len(), 15);
        assert!(c.vc.dimension <= 2);
    }

    #[test]
    fn distance_two_tight_at_q3() {
        let r = check_tightness(ClaimId::PairBoundDistanceTwo, None, 3).unwrap();
        assert!(r.is_verified());
        let c = r.certificate.unwrap();
        assert_eq!(c.set.len(), 5);
        assert!(c.vc.dimension <= 1);
    }

    #[test]
    fn diagonal_carries_the_annotation() {
        let r = check_tightness(ClaimId::Diagonal, Some(3), 3).unwrap();
        assert!(r.is_verified());
        assert_eq!(r.certificate.as_ref().unwrap().vc.dimension, 0);
        assert!(r.notes.iter().any(|n| n.contains("stated value vc = 1")));
    }

    #[test]
    fn sparse_cube() {
        let r = check_tightness(ClaimId::SparseCube, None, 4).unwrap();
        assert!(r.is_verified());
        assert_eq!(r.certificate.unwrap().vc.dimension, 1);
    }

    #[test]
    fn band_holds_from_seven_and_fails_below() {
        assert!(check_tightness(ClaimId::Band, None, 7).unwrap().is_verified());
        let r = check_tightness(ClaimId::Band, None, 6).unwrap();
        assert!(r.is_refuted());
        assert_eq!(r.counterexample.unwrap().vc.dimension, 3);
    }

    #[test]
    fn implications_have_no_construction() {
        assert!(check_tightness(ClaimId::FourOnLine, None, 4).is_err());
    }
}
