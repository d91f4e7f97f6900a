//! Reference implementations used only by tests: direct chases of the
//! definitions over coordinate vectors, with no bitsets and no pruning.
#![allow(dead_code)]

use std::collections::HashSet;

use hamming_vc::hamming::{HammingParams, PointSet};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub fn dist(a: &[u32], b: &[u32]) -> usize {
    a.iter().zip(b).filter(|(x, y)| x != y).count()
}

pub fn coords(set: &PointSet) -> Vec<Vec<u32>> {
    set.points().map(|p| p.coords().to_vec()).collect()
}

fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    if k == 0 {
        return vec![vec![]];
    }
    if n < k {
        return vec![];
    }
    let mut out = combinations(n - 1, k);
    for mut c in combinations(n - 1, k - 1) {
        c.push(n - 1);
        out.push(c);
    }
    out
}

/// `W` (as indices into `points`) is shattered when the traces
/// `{w in W : dist(u, w) = t}` over all `u` hit every subset of `W`.
pub fn naive_shatters(points: &[Vec<u32>], w: &[usize], t: usize) -> bool {
    let mut seen = vec![false; 1 << w.len()];
    let mut missing = seen.len();
    for u in points {
        let trace = w
            .iter()
            .enumerate()
            .filter(|&(_, &i)| dist(u, &points[i]) == t)
            .fold(0, |acc, (bit, _)| acc | 1 << bit);
        if !seen[trace] {
            seen[trace] = true;
            missing -= 1;
            if missing == 0 {
                return true;
            }
        }
    }
    false
}

/// Some `k`-subset of `points` is shattered.
pub fn naive_has(points: &[Vec<u32>], t: usize, k: usize) -> bool {
    k == 0 && !points.is_empty() || combinations(points.len(), k).iter().any(|w| naive_shatters(points, w, t))
}

pub fn naive_vc(points: &[Vec<u32>], t: usize) -> i32 {
    naive_vc_capped(points, t, points.len())
}

/// VC dimension, but never looking past `cap`.
pub fn naive_vc_capped(points: &[Vec<u32>], t: usize, cap: usize) -> i32 {
    if points.is_empty() {
        return -1;
    }
    let mut best = 0;
    for k in 1..=cap.min(points.len()) {
        if naive_has(points, t, k) {
            best = k as i32;
        } else {
            break;
        }
    }
    best
}

/// Sorted degree sequence of every connected component of the distance-1
/// graph on `points`.
pub fn component_degrees(points: &[Vec<u32>]) -> Vec<Vec<usize>> {
    let n = points.len();
    let adj: Vec<Vec<usize>> = (0..n)
        .map(|i| (0..n).filter(|&j| dist(&points[i], &points[j]) == 1).collect())
        .collect();
    let mut seen = vec![false; n];
    let mut components = Vec::new();
    for s in 0..n {
        if seen[s] {
            continue;
        }
        seen[s] = true;
        let mut stack = vec![s];
        let mut degrees = Vec::new();
        while let Some(v) = stack.pop() {
            degrees.push(adj[v].len());
            for &w in &adj[v] {
                if !seen[w] {
                    seen[w] = true;
                    stack.push(w);
                }
            }
        }
        degrees.sort();
        components.push(degrees);
    }
    components
}

pub fn naive_four_on_line(points: &[Vec<u32>]) -> bool {
    points.iter().any(|x| {
        (0..x.len()).any(|free| {
            points
                .iter()
                .filter(|y| (0..x.len()).all(|c| c == free || x[c] == y[c]))
                .count()
                >= 4
        })
    })
}

pub fn naive_rectangle(points: &[Vec<u32>]) -> bool {
    let set: HashSet<&Vec<u32>> = points.iter().collect();
    points.iter().any(|x| {
        points.iter().any(|y| {
            let diff: Vec<usize> = (0..x.len()).filter(|&c| x[c] != y[c]).collect();
            if diff.len() != 2 {
                return false;
            }
            let mut a = x.clone();
            a[diff[0]] = y[diff[0]];
            let mut b = x.clone();
            b[diff[1]] = y[diff[1]];
            set.contains(&a) && set.contains(&b)
        })
    })
}

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Uniform size in `0..=N`, then each vertex kept independently with that
/// density: covers sparse and dense sets alike.
pub fn random_subset(params: HammingParams, rng: &mut ChaCha8Rng) -> PointSet {
    let n = params.vertex_count();
    let density = rng.random_range(0..=n) as f64 / n as f64;
    let indices: Vec<usize> = (0..n).filter(|_| rng.random_bool(density)).collect();
    PointSet::from_indices(params, indices).unwrap()
}

pub fn h(d: usize, q: u32, t: usize) -> HammingParams {
    HammingParams::new(d, q, t).unwrap()
}
