//! Bitset search for shattered subsets.
//!
//! Members of `U` get local indices `0..n`. Each member `w` has a row: the
//! bitset of local indices adjacent to `w`. For a candidate `W` the members
//! of `U` fall into `2^|W|` cells according to their trace `n(u) ∩ W`; `W`
//! is shattered iff no cell is empty. Adding a point to `W` splits every
//! cell in two, so the search extends only prefixes that are themselves
//! shattered (subsets of shattered sets are shattered), which subsumes the
//! common-neighbor pruning of pairs and triples.

use std::borrow::Cow;

use rayon::prelude::*;

use crate::hamming::{distance, PointSet};

/// Dense adjacency rows are kept while `n` stays at or below this.
const DENSE_LIMIT: usize = 1 << 14;
/// Below this many members the top level of the search stays sequential.
const PARALLEL_THRESHOLD: usize = 96;

pub struct ShatterEngine {
    n: usize,
    d: usize,
    t: usize,
    words: usize,
    coords: Vec<u32>,
    dense: Option<Vec<u64>>,
    parallel: bool,
}

/// A shattered set in local indices with the realizing member per cell.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LocalWitness {
    pub w: Vec<usize>,
    pub assignments: Vec<usize>,
}

impl ShatterEngine {
    /// `coords` holds `n` points of dimension `d`, back to back, in the
    /// order that defines local indices.
    pub fn new(coords: Vec<u32>, d: usize, t: usize) -> Self {
        let n = coords.len().checked_div(d).unwrap_or(0);
        let words = n.div_ceil(64).max(1);
        let mut engine = Self {
            n,
            d,
            t,
            words,
            coords,
            dense: None,
            parallel: n >= PARALLEL_THRESHOLD,
        };
        if n <= DENSE_LIMIT {
            let mut rows = vec![0u64; n * words];
            for a in 0..n {
                for b in a + 1..n {
                    if distance(engine.point(a), engine.point(b)) == t {
                        rows[a * words + b / 64] |= 1 << (b % 64);
                        rows[b * words + a / 64] |= 1 << (a % 64);
                    }
                }
                if t == 0 {
                    rows[a * words + a / 64] |= 1 << (a % 64);
                }
            }
            engine.dense = Some(rows);
        }
        engine
    }

    pub fn from_set(set: &PointSet) -> Self {
        let params = set.params();
        let coords = set.points().flat_map(|p| p.coords().to_vec()).collect();
        Self::new(coords, params.d(), params.t())
    }

    /// Forces the top-level search to run sequentially (or not).
    pub fn with_parallel(mut self, parallel: bool) -> Self {
        self.parallel = parallel;
        self
    }

    pub fn len(&self) -> usize {
        self.n
    }

    pub fn is_empty(&self) -> bool {
        self.n == 0
    }

    pub fn point(&self, i: usize) -> &[u32] {
        &self.coords[i * self.d..(i + 1) * self.d]
    }

    fn row(&self, i: usize) -> Cow<'_, [u64]> {
        match &self.dense {
            Some(rows) => Cow::Borrowed(&rows[i * self.words..(i + 1) * self.words]),
            None => {
                let mut row = vec![0u64; self.words];
                let p = self.point(i);
                for b in 0..self.n {
                    if distance(p, self.point(b)) == self.t {
                        row[b / 64] |= 1 << (b % 64);
                    }
                }
                Cow::Owned(row)
            }
        }
    }

    fn all_members(&self) -> Vec<u64> {
        let mut mask = vec![u64::MAX; self.words];
        let tail = self.n % 64;
        if tail != 0 {
            mask[self.words - 1] = (1u64 << tail) - 1;
        }
        if self.n == 0 {
            mask[0] = 0;
        }
        mask
    }

    fn fresh_cells(&self, k: usize) -> Vec<Vec<u64>> {
        let mut cells: Vec<Vec<u64>> = (0..=k).map(|j| vec![0u64; (1 << j) * self.words]).collect();
        cells[0] = self.all_members();
        cells
    }

    /// Splits the `2^depth` cells of `src` by `row` into `dst`; false as soon
    /// as one half is empty.
    fn split(&self, src: &[u64], dst: &mut [u64], row: &[u64], depth: usize) -> bool {
        let words = self.words;
        let half = (1 << depth) * words;
        for c in 0..1 << depth {
            let cell = &src[c * words..(c + 1) * words];
            let (mut any_in, mut any_out) = (0u64, 0u64);
            for (w, (&bits, &adj)) in cell.iter().zip(row).enumerate() {
                let inside = bits & adj;
                let outside = bits & !adj;
                dst[c * words + w] = outside;
                dst[half + c * words + w] = inside;
                any_in |= inside;
                any_out |= outside;
            }
            if any_in == 0 || any_out == 0 {
                return false;
            }
        }
        true
    }

    fn extend(
        &self,
        k: usize,
        depth: usize,
        candidates: std::ops::Range<usize>,
        w: &mut Vec<usize>,
        cells: &mut [Vec<u64>],
    ) -> bool {
        let last = self.n - (k - depth);
        for cand in candidates.start..candidates.end.min(last + 1) {
            let row = self.row(cand);
            let (lo, hi) = cells.split_at_mut(depth + 1);
            if !self.split(&lo[depth], &mut hi[0], &row, depth) {
                continue;
            }
            w.push(cand);
            if depth + 1 == k || self.extend(k, depth + 1, cand + 1..self.n, w, cells) {
                return true;
            }
            w.pop();
        }
        false
    }

    fn witness_from_cells(&self, w: Vec<usize>, cells: &[u64]) -> LocalWitness {
        let assignments = cells
            .chunks(self.words)
            .map(|cell| {
                let (word, bits) = cell
                    .iter()
                    .enumerate()
                    .find(|(_, &b)| b != 0)
                    .expect("every cell of a shattered set is nonempty");
                word * 64 + bits.trailing_zeros() as usize
            })
            .collect();
        LocalWitness { w, assignments }
    }

    fn search_range(&self, k: usize, first: std::ops::Range<usize>) -> Option<LocalWitness> {
        let mut cells = self.fresh_cells(k);
        let mut w = Vec::with_capacity(k);
        if self.extend(k, 0, first, &mut w, &mut cells) {
            Some(self.witness_from_cells(w, &cells[k]))
        } else {
            None
        }
    }

    /// Lexicographically least shattered set of size `k` (in local index
    /// order), with the lowest-index realizer for every subset.
    pub fn find_shattered(&self, k: usize) -> Option<LocalWitness> {
        if k == 0 {
            return (self.n > 0).then(|| LocalWitness {
                w: Vec::new(),
                assignments: vec![0],
            });
        }
        if k > self.n || (k < usize::BITS as usize && 1usize << k > self.n) {
            return None;
        }
        if self.parallel {
            (0..=self.n - k)
                .into_par_iter()
                .find_map_first(|x| self.search_range(k, x..x + 1))
        } else {
            self.search_range(k, 0..self.n)
        }
    }

    /// Realizer per cell if the local set `w` is shattered.
    pub fn check(&self, w: &[usize]) -> Option<LocalWitness> {
        let mut cells = self.fresh_cells(w.len());
        if self.n == 0 {
            return None;
        }
        for (depth, &x) in w.iter().enumerate() {
            let row = self.row(x);
            let (lo, hi) = cells.split_at_mut(depth + 1);
            if !self.split(&lo[depth], &mut hi[0], &row, depth) {
                return None;
            }
        }
        Some(self.witness_from_cells(w.to_vec(), &cells[w.len()]))
    }
}
