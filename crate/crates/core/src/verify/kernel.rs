//! Shatter test for subsets of a small graph (at most 128 vertices), with
//! subsets and neighborhoods packed into `u128` masks.

use crate::hamming::{digits, distance, HammingParams, PointSet};
use crate::shatter::{has_shattered_set, ShatterEngine, MAX_SHATTER_SIZE};

pub const KERNEL_LIMIT: usize = 128;

pub struct Universe {
    adj: Vec<u128>,
}

impl Universe {
    pub fn new(params: &HammingParams) -> Option<Self> {
        let n = params.vertex_count();
        if n > KERNEL_LIMIT {
            return None;
        }
        let coords: Vec<Vec<u32>> = (0..n).map(|i| digits(i, params.q(), params.d())).collect();
        let adj = coords
            .iter()
            .map(|x| {
                coords
                    .iter()
                    .enumerate()
                    .filter(|(_, y)| distance(x, y) == params.t())
                    .fold(0u128, |m, (j, _)| m | 1 << j)
            })
            .collect();
        Some(Self { adj })
    }

    /// Lexicographically first `k`-subset of `u` shattered by the
    /// neighborhoods of members of `u`.
    pub fn find(&self, u: u128, k: usize) -> Option<Vec<usize>> {
        if k > MAX_SHATTER_SIZE || (u.count_ones() as usize) < (1 << k).max(k) {
            return None;
        }
        let mut chosen = Vec::with_capacity(k);
        self.extend(&[u], k, u, &mut chosen).then_some(chosen)
    }

    pub fn has(&self, u: u128, k: usize) -> bool {
        self.find(u, k).is_some()
    }

    /// `cells` holds, for each trace pattern on the chosen prefix, the
    /// members of `U` realizing it.
    fn extend(&self, cells: &[u128], k: usize, candidates: u128, chosen: &mut Vec<usize>) -> bool {
        let depth = chosen.len();
        if depth == k {
            return true;
        }
        let mut next = [0u128; 1 << MAX_SHATTER_SIZE];
        let mut rest = candidates;
        while rest != 0 {
            let w = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            if (rest.count_ones() as usize) < k - depth - 1 {
                break;
            }
            let nb = self.adj[w];
            let split = cells.iter().enumerate().all(|(i, &c)| {
                next[2 * i] = c & !nb;
                next[2 * i + 1] = c & nb;
                next[2 * i] != 0 && next[2 * i + 1] != 0
            });
            if !split {
                continue;
            }
            chosen.push(w);
            if self.extend(&next[..2 * cells.len()], k, rest, chosen) {
                return true;
            }
            chosen.pop();
        }
        false
    }
}

pub fn mask_of(indices: &[usize]) -> u128 {
    indices.iter().fold(0u128, |m, &i| m | 1 << i)
}

/// Answers "does `U` shatter some `k`-set" for subsets given by vertex
/// index, through the mask kernel when the graph is small enough.
pub struct Evaluator {
    params: HammingParams,
    universe: Option<Universe>,
}

impl Evaluator {
    pub fn new(params: HammingParams) -> Self {
        Self {
            universe: Universe::new(&params),
            params,
        }
    }

    pub fn params(&self) -> HammingParams {
        self.params
    }

    pub fn has(&self, indices: &[usize], k: usize) -> bool {
        match &self.universe {
            Some(universe) => universe.has(mask_of(indices), k),
            None => {
                let set = self.set(indices);
                k <= MAX_SHATTER_SIZE && has_shattered_set(&ShatterEngine::from_set(&set), k)
            }
        }
    }

    pub fn set(&self, indices: &[usize]) -> PointSet {
        PointSet::from_indices(self.params, indices.iter().copied()).expect("indices come from the vertex range")
    }
}
