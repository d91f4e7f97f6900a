use serde::Serialize;

use super::{
    check_constructive, check_universal, exhaustive_count, default_scope, Budget, ClaimId, ClaimSpec, Outcome,
    Quantifier, RequestedMode, Strategy, VerificationReport, DIAGONAL_NOTE,
};
use crate::error::Result;

/// Smallest `q` at which the band construction has no shattered 3-set.
pub const BAND_MIN_Q: u32 = 7;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CheckKind {
    /// The universal statement itself.
    Universal,
    /// The construction showing the bound (or existence statement) is sharp.
    Constructive,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SuiteItem {
    pub claim: ClaimSpec,
    pub check: CheckKind,
}

/// Items for the requested claims at each `q`. Universal claims get both
/// checks when a construction exists. Combinations that fail a claim's
/// preconditions are returned as skip notes.
pub fn suite_for(ids: &[ClaimId], d: Option<usize>, qs: &[u32]) -> (Vec<SuiteItem>, Vec<String>) {
    let mut items = Vec::new();
    let mut skipped = Vec::new();
    for &id in ids {
        for &q in qs {
            match ClaimSpec::standard(id, d, q) {
                Ok(claim) => push_checks(&mut items, claim),
                Err(e) => skipped.push(format!("{id} at q = {q} skipped: {e}")),
            }
        }
    }
    (items, skipped)
}

fn push_checks(items: &mut Vec<SuiteItem>, claim: ClaimSpec) {
    if claim.quantifier() == Quantifier::ForAll {
        items.push(SuiteItem {
            claim,
            check: CheckKind::Universal,
        });
    }
    if claim.construction().is_ok() {
        items.push(SuiteItem {
            claim,
            check: CheckKind::Constructive,
        });
    }
}

/// Every claim at every `q` where it applies, in both ambient dimensions
/// 2 and 3 for the claims that take one. The band construction is checked
/// at the listed `q >= 7`, or at `q = 7` when none is listed.
pub fn default_suite(qs: &[u32]) -> (Vec<SuiteItem>, Vec<String>) {
    let mut items = Vec::new();
    let mut notes = Vec::new();
    let band_qs: Vec<u32> = match qs.iter().copied().filter(|&q| q >= BAND_MIN_Q).collect::<Vec<_>>() {
        v if v.is_empty() => {
            notes.push(format!("band construction checked at q = {BAND_MIN_Q}; it has vc = 3 for q in 4..=6"));
            vec![BAND_MIN_Q]
        }
        v => v,
    };
    for &q in qs {
        let mut add = |id: ClaimId, d: Option<usize>, check: Option<CheckKind>| {
            if let Ok(claim) = ClaimSpec::standard(id, d, q) {
                match check {
                    Some(check) => items.push(SuiteItem { claim, check }),
                    None => push_checks(&mut items, claim),
                }
            }
        };
        add(ClaimId::PairBound, Some(2), None);
        add(ClaimId::PairBound, Some(3), Some(CheckKind::Universal));
        add(ClaimId::PairBoundOdd, None, None);
        add(ClaimId::TripleBound, None, None);
        add(ClaimId::TripleBoundHigher, Some(3), Some(CheckKind::Universal));
        add(ClaimId::SparseCube, None, None);
        add(ClaimId::Diagonal, Some(2), None);
        add(ClaimId::Diagonal, Some(3), None);
        add(ClaimId::PairBoundDistanceTwo, None, None);
        add(ClaimId::FourOnLine, None, None);
        add(ClaimId::FourOnLineOrRectangle, Some(3), None);
    }
    for q in band_qs {
        for id in [ClaimId::TripleBoundHigher, ClaimId::Band] {
            if let Ok(claim) = ClaimSpec::standard(id, Some(3), q) {
                items.push(SuiteItem {
                    claim,
                    check: CheckKind::Constructive,
                });
            }
        }
    }
    (items, notes)
}

/// Runs the items in order. Exhaustive checks whose subset count exceeds
/// the cap are downgraded to sampling with `min(samples, cap)` draws.
pub fn run_suite(items: &[SuiteItem], budget: &Budget) -> Result<Vec<VerificationReport>> {
    items.iter().map(|item| run_item(item, budget)).collect()
}

fn run_item(item: &SuiteItem, budget: &Budget) -> Result<VerificationReport> {
    let claim = &item.claim;
    if item.check == CheckKind::Constructive {
        return check_constructive(claim);
    }
    let count = exhaustive_count(claim, default_scope(claim));
    let sampled = Strategy::Sampled {
        samples: budget.samples.min(budget.cap),
        seed: budget.seed,
    };
    let over_cap = count > budget.cap as u128;
    let strategy = match budget.mode {
        RequestedMode::Sampled => sampled,
        RequestedMode::Auto | RequestedMode::Exhaustive if over_cap => sampled,
        _ => Strategy::Exhaustive,
    };
    let mut report = check_universal(claim, strategy, budget)?;
    if over_cap && budget.mode != RequestedMode::Sampled {
        report
            .notes
            .push(format!("exhaustive enumeration of {count} subsets exceeds the cap of {}; sampled", budget.cap));
    }
    Ok(report)
}

/// 1 if anything was refuted, else 2 if anything was infeasible, else 0.
pub fn exit_code(reports: &[VerificationReport]) -> i32 {
    if reports.iter().any(VerificationReport::is_refuted) {
        1
    } else if reports.iter().any(|r| matches!(r.outcome, Outcome::Infeasible { .. })) {
        2
    } else {
        0
    }
}

#[derive(Serialize)]
struct Summary {
    verified: usize,
    refuted: usize,
    infeasible: usize,
}

#[derive(Serialize)]
pub struct SuiteReport<'a> {
    reports: &'a [VerificationReport],
    summary: Summary,
    notes: Vec<String>,
    exit_code: i32,
}

/// Consolidated report; the diagonal annotation is repeated at the top
/// level whenever a diagonal claim was checked.
pub fn suite_report<'a>(reports: &'a [VerificationReport], extra_notes: &[String]) -> SuiteReport<'a> {
    let count = |name: &str| reports.iter().filter(|r| r.outcome.name() == name).count();
    let mut notes = extra_notes.to_vec();
    if reports.iter().any(|r| r.claim.id == ClaimId::Diagonal) {
        notes.push(format!("P1.6: {DIAGONAL_NOTE}"));
    }
    SuiteReport {
        reports,
        summary: Summary {
            verified: count("verified"),
            refuted: count("refuted"),
            infeasible: count("infeasible"),
        },
        notes,
        exit_code: exit_code(reports),
    }
}
