use super::kernel::{mask_of, Universe};
use crate::error::{Error, Result};
use crate::hamming::{HammingParams, PointSet};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ThresholdResult {
    pub params: HammingParams,
    pub k: usize,
    /// Smallest `m` such that every `m`-subset has vc >= k.
    pub m_star: usize,
    /// A largest subset with vc < k; it has `m_star - 1` points.
    pub certificate: PointSet,
    /// Search nodes visited (pruned) or subsets examined (unpruned).
    pub work: u64,
}

fn guard(params: &HammingParams, cap: u64) -> Result<(usize, Universe)> {
    let n = params.vertex_count();
    let fits = n < 64 && (1u64 << n) <= cap;
    match Universe::new(params) {
        Some(u) if fits => Ok((n, u)),
        _ => Err(Error::WorkCap {
            required: format!("2^{n}"),
            cap,
        }),
    }
}

/// Exact universal threshold for "vc >= k", by a depth-first search over
/// the sets with vc < k. That family is closed under taking subsets, so
/// each set is reached once by adding vertices in increasing order, and a
/// branch stops as soon as it gains a shattered `k`-set. Requires `2^N`
/// to fit the cap.
pub fn threshold_search(params: HammingParams, k: usize, cap: u64) -> Result<ThresholdResult> {
    let (n, universe) = guard(&params, cap)?;
    struct Search<'a> {
        universe: &'a Universe,
        n: usize,
        k: usize,
        best: u128,
        nodes: u64,
    }
    impl Search<'_> {
        fn grow(&mut self, set: u128, next: usize) {
            self.nodes += 1;
            if set.count_ones() > self.best.count_ones() {
                self.best = set;
            }
            for v in next..self.n {
                // bound: even taking every remaining vertex cannot beat best
                if set.count_ones() as usize + (self.n - v) <= self.best.count_ones() as usize {
                    return;
                }
                let grown = set | 1 << v;
                if !self.universe.has(grown, self.k) {
                    self.grow(grown, v + 1);
                }
            }
        }
    }
    let mut search = Search {
        universe: &universe,
        n,
        k,
        best: 0,
        nodes: 0,
    };
    if !universe.has(0, k) {
        search.grow(0, 0);
    }
    finish(params, k, search.best, search.nodes)
}

/// Same answer by testing all `2^N` subsets.
pub fn threshold_search_unpruned(params: HammingParams, k: usize, cap: u64) -> Result<ThresholdResult> {
    let (n, universe) = guard(&params, cap)?;
    let mut best: Option<u128> = None;
    for set in 0u128..1 << n {
        if best.is_some_and(|b| set.count_ones() <= b.count_ones()) {
            continue;
        }
        if !universe.has(set, k) {
            best = Some(set);
        }
    }
    let best = best.expect("k = 0 is the only case with no low set, and the empty set is low for every k");
    finish(params, k, best, 1 << n)
}

fn finish(params: HammingParams, k: usize, best: u128, work: u64) -> Result<ThresholdResult> {
    let indices = (0..128).filter(|i| best >> i & 1 == 1);
    let certificate = PointSet::from_indices(params, indices)?;
    debug_assert_eq!(mask_of(&certificate.indices().collect::<Vec<_>>()), best);
    Ok(ThresholdResult {
        params,
        k,
        m_star: certificate.len() + 1,
        certificate,
        work,
    })
}
