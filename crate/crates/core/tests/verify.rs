mod common;

use common::{coords, h, naive_vc};
use hamming_vc::verify::{
    check_tightness, check_universal, default_suite, exit_code, run_suite, suite_for, suite_report, threshold_search,
    threshold_search_unpruned, Assertion, Budget, ClaimId, ClaimSpec, Mode, Outcome, Relation, Strategy,
    DEFAULT_WORK_CAP,
};

fn at_least(params: hamming_vc::hamming::HammingParams, k: usize, m: usize) -> ClaimSpec {
    ClaimSpec {
        id: ClaimId::PairBound,
        params,
        m,
        assertion: Assertion::Vc(Relation::AtLeast(k)),
    }
}

#[test]
fn thresholds_agree_with_universal_checks() {
    for (params, k) in [(h(2, 3, 1), 2), (h(2, 4, 1), 2), (h(2, 4, 1), 3), (h(2, 3, 2), 2), (h(3, 2, 1), 2)] {
        let t = threshold_search(params, k, DEFAULT_WORK_CAP).unwrap();
        assert!(naive_vc(&coords(&t.certificate), params.t()) < k as i32);
        let budget = Budget::default();
        let at = check_universal(&at_least(params, k, t.m_star), Strategy::Exhaustive, &budget).unwrap();
        assert!(at.is_verified(), "{params} k={k}: {at}");
        let below = check_universal(&at_least(params, k, t.m_star - 1), Strategy::Exhaustive, &budget).unwrap();
        assert!(below.is_refuted(), "{params} k={k}: {below}");
        assert!(below.counterexample_revalidates());
    }
}

#[test]
fn pruned_and_unpruned_thresholds_match() {
    for k in 1..=3 {
        let a = threshold_search(h(2, 4, 1), k, DEFAULT_WORK_CAP).unwrap();
        let b = threshold_search_unpruned(h(2, 4, 1), k, DEFAULT_WORK_CAP).unwrap();
        assert_eq!(a.m_star, b.m_star, "k={k}");
        assert!(a.work <= b.work);
    }
}

#[test]
fn tightness_reports() {
    let r = check_tightness(ClaimId::PairBoundOdd, None, 4).unwrap();
    assert_eq!(r.mode, Mode::Constructive);
    let cert = r.certificate.as_ref().unwrap();
    assert_eq!((cert.set.len(), cert.vc.dimension), (8, 1));
    let r = check_tightness(ClaimId::Band, Some(3), 6).unwrap();
    assert!(r.is_refuted());
    assert!(r.counterexample_revalidates());
    assert_eq!(r.counterexample.unwrap().vc.dimension, 3);
}

#[test]
fn reports_serialize_with_stable_fields() {
    let (items, notes) = suite_for(&[ClaimId::PairBoundOdd, ClaimId::Diagonal], None, &[3]);
    let budget = Budget {
        seed: 11,
        ..Budget::default()
    };
    let reports = run_suite(&items, &budget).unwrap();
    assert_eq!(exit_code(&reports), 0);
    let json = serde_json::to_value(suite_report(&reports, &notes)).unwrap();
    let first = &json["reports"][0];
    assert_eq!(first["claim"]["id"], "T1.2");
    assert_eq!(first["outcome"], "verified");
    assert_eq!(first["work"], 84);
    assert!(first["counterexample"].is_null());
    assert_eq!(json["summary"]["verified"], reports.len());
    let text: Vec<String> = reports.iter().map(|r| r.to_string()).collect();
    let again: Vec<String> = run_suite(&items, &budget).unwrap().iter().map(|r| r.to_string()).collect();
    assert_eq!(text, again);
}

#[test]
fn sampled_suites_are_reproducible() {
    let (items, _) = default_suite(&[5]);
    let budget = Budget {
        cap: 1000,
        samples: 500,
        seed: 3,
        ..Budget::default()
    };
    let a = run_suite(&items, &budget).unwrap();
    let b = run_suite(&items, &budget).unwrap();
    assert_eq!(a.len(), b.len());
    for (x, y) in a.iter().zip(&b) {
        assert_eq!((&x.outcome, x.work, &x.notes), (&y.outcome, y.work, &y.notes));
        assert_ne!(x.outcome.name(), "refuted", "{x}");
    }
    assert!(a.iter().any(|r| matches!(r.mode, Mode::Sampled { samples: 500, seed: 3 })));
    assert!(!a.iter().any(|r| matches!(r.outcome, Outcome::Infeasible { .. })));
}
