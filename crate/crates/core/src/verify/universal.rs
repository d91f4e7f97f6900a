use std::sync::atomic::{AtomicU64, Ordering};
use std::time::Instant;

use rand::seq::IteratorRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use super::combin::{binomial, next_subset, subsets_from, unrank};
use super::kernel::Evaluator;
use super::{Assertion, Budget, ClaimSpec, Consequent, Evidence, Mode, Outcome, Quantifier, VerificationReport};
use crate::constructions::{construct, ConstructionSpec};
use crate::detect::{find_four_on_line, find_rectangle};
use crate::error::{Error, Result};
use crate::hamming::PointSet;
use crate::shatter::{vc_dimension, MAX_SHATTER_SIZE};

/// Subsets per unit of parallel work in exhaustive mode.
const CHUNK: u128 = 1 << 12;

/// Which subset sizes a universal check ranges over.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Scope {
    /// Only `|U| = m`; larger sets follow because vc never drops when
    /// points are added.
    ExactSize,
    /// Every `|U| >= m`.
    AtLeastSize,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Strategy {
    Exhaustive,
    Sampled { samples: u64, seed: u64 },
}

/// Size-monotone claims need only `|U| = m`; implications are checked at
/// every size.
pub fn default_scope(claim: &ClaimSpec) -> Scope {
    match claim.assertion {
        Assertion::Vc(_) => Scope::ExactSize,
        Assertion::Implies(_) => Scope::AtLeastSize,
    }
}

pub fn exhaustive_count(claim: &ClaimSpec, scope: Scope) -> u128 {
    let n = claim.params.vertex_count();
    match scope {
        Scope::ExactSize => binomial(n, claim.m),
        Scope::AtLeastSize => subsets_from(n, claim.m),
    }
}

pub fn check_universal(claim: &ClaimSpec, strategy: Strategy, budget: &Budget) -> Result<VerificationReport> {
    check_universal_scoped(claim, strategy, default_scope(claim), budget)
}

struct Checker<'a> {
    claim: &'a ClaimSpec,
    eval: Evaluator,
}

impl Checker<'_> {
    /// True when `U` breaks the lower half of a VC relation or the
    /// implication. Upper halves are settled once on the full vertex set.
    fn violates(&self, indices: &[usize]) -> bool {
        match self.claim.assertion {
            Assertion::Vc(rel) => rel.lower().is_some_and(|k| !self.eval.has(indices, k)),
            Assertion::Implies(consequent) => {
                if !self.eval.has(indices, 3) {
                    return false;
                }
                let set = self.eval.set(indices);
                let hit = |found: Result<Option<_>>| found.ok().flatten().is_some();
                let line = hit(find_four_on_line(&set));
                match consequent {
                    Consequent::FourOnLine => !line,
                    Consequent::FourOnLineOrRectangle => !line && !hit(find_rectangle(&set)),
                }
            }
        }
    }

    fn evidence(&self, set: PointSet, construction: Option<String>) -> Evidence {
        let vc = vc_dimension(&set, Some(MAX_SHATTER_SIZE));
        Evidence { construction, set, vc }
    }

    /// Known constructions of an admissible size in the same graph.
    fn probes(&self, scope: Scope) -> Vec<ConstructionSpec> {
        let p = self.claim.params;
        ConstructionSpec::NAMES
            .iter()
            .filter_map(|name| ConstructionSpec::from_name(name, Some(p.d()), p.q()).ok())
            .filter(|spec| spec.ambient() == (p.d(), p.t()))
            .filter(|spec| match scope {
                Scope::ExactSize => spec.expected_size() == self.claim.m,
                Scope::AtLeastSize => spec.expected_size() >= self.claim.m,
            })
            .collect()
    }
}

pub fn check_universal_scoped(
    claim: &ClaimSpec,
    strategy: Strategy,
    scope: Scope,
    budget: &Budget,
) -> Result<VerificationReport> {
    if claim.quantifier() != Quantifier::ForAll {
        return Err(Error::InvalidParams(format!("{} is an existence claim", claim.id)));
    }
    let start = Instant::now();
    let params = claim.params;
    let n = params.vertex_count();
    let mode = match strategy {
        Strategy::Exhaustive => Mode::Exhaustive,
        Strategy::Sampled { samples, seed } => Mode::Sampled { samples, seed },
    };
    let mut report = VerificationReport {
        claim: *claim,
        mode,
        outcome: Outcome::Verified,
        work: 0,
        counterexample: None,
        certificate: None,
        notes: Vec::new(),
        elapsed: Default::default(),
    };
    let finish = |mut r: VerificationReport| {
        r.elapsed = start.elapsed();
        Ok(r)
    };

    if claim.m > n {
        report.notes.push(format!("no subset of H has {} points", claim.m));
        return finish(report);
    }
    let count = exhaustive_count(claim, scope);
    if strategy == Strategy::Exhaustive && count > budget.cap as u128 {
        report.outcome = Outcome::Infeasible {
            reason: format!("{count} subsets exceed the work cap of {}", budget.cap),
        };
        return finish(report);
    }

    let checker = Checker {
        claim,
        eval: Evaluator::new(params),
    };

    if let Assertion::Vc(rel) = claim.assertion {
        if let Some(k) = rel.upper() {
            let all: Vec<usize> = (0..n).collect();
            if checker.eval.has(&all, k + 1) {
                report.outcome = Outcome::Refuted;
                report.work = 1;
                report.counterexample = Some(checker.evidence(PointSet::full(params), None));
                return finish(report);
            }
            report.notes.push(format!("vc <= {k} for every subset: the full vertex set has vc <= {k}"));
        }
        if scope == Scope::ExactSize && rel.lower().is_some() {
            report.notes.push(format!("sizes above {} follow by monotonicity", claim.m));
        }
    }

    for (tried, spec) in checker.probes(scope).into_iter().enumerate() {
        let Ok(set) = construct(&spec) else { continue };
        let indices: Vec<usize> = set.indices().collect();
        if checker.violates(&indices) {
            report.work = tried as u64 + 1;
            report.outcome = Outcome::Refuted;
            report.counterexample = Some(checker.evidence(set, Some(spec.to_string())));
            return finish(report);
        }
    }

    let found = match strategy {
        Strategy::Exhaustive => exhaustive(&checker, scope, count, budget),
        Strategy::Sampled { samples, seed } => sampled(&checker, scope, samples, seed, budget),
    };
    match found {
        Ok(examined) => report.work = examined,
        Err((examined, indices)) => {
            report.work = examined;
            report.outcome = Outcome::Refuted;
            report.counterexample = Some(checker.evidence(checker.eval.set(&indices), None));
        }
    }
    finish(report)
}

type Found = std::result::Result<u64, (u64, Vec<usize>)>;

fn sizes(claim: &ClaimSpec, scope: Scope) -> std::ops::RangeInclusive<usize> {
    match scope {
        Scope::ExactSize => claim.m..=claim.m,
        Scope::AtLeastSize => claim.m..=claim.params.vertex_count(),
    }
}

/// Walks every subset in (size, lexicographic rank) order. On a violation
/// returns the number of subsets up to and including the first one.
fn exhaustive(checker: &Checker, scope: Scope, count: u128, budget: &Budget) -> Found {
    let n = checker.claim.params.vertex_count();
    let done = AtomicU64::new(0);
    let mut offset: u128 = 0;
    for size in sizes(checker.claim, scope) {
        let total = binomial(n, size);
        let chunks = total.div_ceil(CHUNK) as u64;
        let hit = (0..chunks).into_par_iter().find_map_first(|chunk| {
            let first = chunk as u128 * CHUNK;
            let len = CHUNK.min(total - first);
            let mut comb = unrank(n, size, first);
            for step in 0..len {
                if checker.violates(&comb) {
                    return Some((first + step, comb));
                }
                next_subset(&mut comb, n);
            }
            let so_far = done.fetch_add(len as u64, Ordering::Relaxed) + len as u64;
            if let Some(progress) = &budget.progress {
                progress(so_far, count as u64);
            }
            None
        });
        if let Some((rank, comb)) = hit {
            return Err(((offset + rank + 1) as u64, comb));
        }
        offset += total;
    }
    Ok(offset as u64)
}

/// Sample `i` draws from its own ChaCha stream, so the result does not
/// depend on scheduling.
pub fn sample_subset(n: usize, sizes: std::ops::RangeInclusive<usize>, seed: u64, i: u64) -> Vec<usize> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(i);
    let size = rng.random_range(sizes);
    let mut chosen = (0..n).choose_multiple(&mut rng, size);
    chosen.sort_unstable();
    chosen
}

fn sampled(checker: &Checker, scope: Scope, samples: u64, seed: u64, budget: &Budget) -> Found {
    let n = checker.claim.params.vertex_count();
    let range = sizes(checker.claim, scope);
    let done = AtomicU64::new(0);
    let hit = (0..samples).into_par_iter().find_map_first(|i| {
        let subset = sample_subset(n, range.clone(), seed, i);
        if checker.violates(&subset) {
            return Some((i, subset));
        }
        let so_far = done.fetch_add(1, Ordering::Relaxed) + 1;
        if let Some(progress) = &budget.progress {
            if so_far.is_multiple_of(1024) || so_far == samples {
                progress(so_far, samples);
            }
        }
        None
    });
    match hit {
        Some((i, subset)) => Err((i + 1, subset)),
        None => Ok(samples),
    }
}
