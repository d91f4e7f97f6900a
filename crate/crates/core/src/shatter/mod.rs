//! Shattering checks, witness certificates and exact VC-dimension of
//! `(U, n(U))`.

mod engine;
mod witness;

use serde::{Deserialize, Serialize};

pub use engine::{LocalWitness, ShatterEngine};
pub use witness::{validate_witness, ShatterWitness, WitnessDefect};


use crate::error::{Error, Result};
use crate::hamming::{distance, Point, PointSet};

/// Largest `|W|` accepted by [`shatters`].
pub const MAX_SHATTER_SIZE: usize = 5;

/// Default search depth of [`vc_dimension`].
pub const DEFAULT_MAX_K: usize = 4;

/// Outcome of an exact VC-dimension computation.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VcResult {
    /// `-1` for the empty set, which realizes nothing.
    pub dimension: i32,
    pub witness: Option<ShatterWitness>,
    /// Smallest size proven to admit no shattered set, when known.
    pub refuted_at: Option<usize>,
}

impl VcResult {
    /// Re-checks the attached witness against `u`.
    pub fn validate(&self, u: &PointSet) -> bool {
        match &self.witness {
            Some(w) => w.size() as i32 == self.dimension && w.validate(u).is_ok(),
            None => self.dimension < 0,
        }
    }
}

/// Result of testing one candidate set.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ShatterCheck {
    Shattered(ShatterWitness),
    /// The first subset (in bitmask order) no member of `U` realizes.
    Unrealized(Vec<Point>),
}

impl ShatterCheck {
    pub fn witness(&self) -> Option<&ShatterWitness> {
        match self {
            Self::Shattered(w) => Some(w),
            Self::Unrealized(_) => None,
        }
    }

    pub fn into_witness(self) -> Option<ShatterWitness> {
        match self {
            Self::Shattered(w) => Some(w),
            Self::Unrealized(_) => None,
        }
    }
}

/// Checks whether `n(U)` shatters `w`, scanning `U` in order and keeping the
/// first realizer of every subset.
pub fn shatters(w: &[Point], u: &PointSet) -> Result<ShatterCheck> {
    shatters_with_limit(w, u, MAX_SHATTER_SIZE)
}

pub fn shatters_with_limit(w: &[Point], u: &PointSet, limit: usize) -> Result<ShatterCheck> {
    if w.len() > limit {
        return Err(Error::TooManyPoints {
            size: w.len(),
            limit,
        });
    }
    for (i, p) in w.iter().enumerate() {
        if w[..i].contains(p) {
            return Err(Error::RepeatedPoint(p.to_string()));
        }
        if !u.contains(p) {
            return Err(Error::NotInSet(p.to_string()));
        }
    }
    let t = u.params().t();
    let mut realizers: Vec<Option<Point>> = vec![None; 1 << w.len()];
    for candidate in u.points() {
        let mask = w
            .iter()
            .enumerate()
            .filter(|(_, x)| distance(x.coords(), candidate.coords()) == t)
            .fold(0usize, |m, (i, _)| m | 1 << i);
        realizers[mask].get_or_insert(candidate);
    }
    if let Some(missing) = realizers.iter().position(Option::is_none) {
        let subset = w
            .iter()
            .enumerate()
            .filter(|(i, _)| missing >> i & 1 == 1)
            .map(|(_, p)| p.clone())
            .collect();
        return Ok(ShatterCheck::Unrealized(subset));
    }
    Ok(ShatterCheck::Shattered(ShatterWitness {
        w: w.to_vec(),
        assignments: realizers.into_iter().map(Option::unwrap).collect(),
    }))
}

/// Exact neighborhood VC-dimension of `U`, searching sizes up to
/// `min(max_k, floor(log2 |U|))`. Among maximum shattered sets the
/// lexicographically least one is reported.
pub fn vc_dimension(u: &PointSet, max_k: Option<usize>) -> VcResult {
    let engine = ShatterEngine::from_set(u);
    let points = u.to_vec();
    vc_with_engine(&engine, max_k.unwrap_or(DEFAULT_MAX_K), |i| points[i].clone())
}

/// VC-dimension for an engine whose local index `i` maps to `point_of(i)`.
pub fn vc_with_engine(
    engine: &ShatterEngine,
    max_k: usize,
    point_of: impl Fn(usize) -> Point,
) -> VcResult {
    let n = engine.len();
    if n == 0 {
        return VcResult {
            dimension: -1,
            witness: None,
            refuted_at: Some(0),
        };
    }
    let log_bound = (usize::BITS - 1 - n.leading_zeros()) as usize;
    let bound = max_k.min(log_bound).min(n);

    let to_witness = |local: LocalWitness| ShatterWitness {
        w: local.w.iter().map(|&i| point_of(i)).collect(),
        assignments: local.assignments.iter().map(|&i| point_of(i)).collect(),
    };

    let mut best = engine
        .find_shattered(0)
        .map(to_witness)
        .expect("nonempty U realizes the empty set");
    for k in 1..=bound {
        match engine.find_shattered(k) {
            Some(found) => best = to_witness(found),
            None => {
                return VcResult {
                    dimension: (k - 1) as i32,
                    witness: Some(best),
                    refuted_at: Some(k),
                }
            }
        }
    }
    VcResult {
        dimension: bound as i32,
        witness: Some(best),
        refuted_at: (bound < max_k).then_some(bound + 1),
    }
}

/// True iff some subset of size `k` is shattered; skips witness assembly.
pub fn has_shattered_set(engine: &ShatterEngine, k: usize) -> bool {
    engine.find_shattered(k).is_some()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hamming::HammingParams;

    fn h(d: usize, q: u32, t: usize) -> HammingParams {
        HammingParams::new(d, q, t).unwrap()
    }

    fn pts(params: HammingParams, c: &[[u32; 2]]) -> Vec<Point> {
        c.iter().map(|c| Point::new(&params, c.to_vec()).unwrap()).collect()
    }

    #[test]
    fn line_triple_witness_roles() {
        let params = h(2, 3, 1);
        let u = PointSet::from_coords(params, &[[0, 0], [0, 1], [0, 2], [1, 2]]).unwrap();
        let w = pts(params, &[[0, 0], [0, 1]]);
        let witness = shatters(&w, &u).unwrap().into_witness().unwrap();
        assert_eq!(witness.assignments, pts(params, &[[1, 2], [0, 1], [0, 0], [0, 2]]));
        assert!(validate_witness(&witness, &u));
    }

    #[test]
    fn empty_w_is_shattered_by_nonempty_u() {
        let params = h(2, 3, 1);
        let u = PointSet::from_coords(params, &[[2, 1]]).unwrap();
        let witness = shatters(&[], &u).unwrap().into_witness().unwrap();
        assert_eq!(witness.assignments, pts(params, &[[2, 1]]));
        assert!(matches!(
            shatters(&[], &PointSet::empty(params)).unwrap(),
            ShatterCheck::Unrealized(s) if s.is_empty()
        ));
    }

    #[test]
    fn isolated_singleton_is_not_shattered() {
        let params = h(2, 3, 1);
        let u = PointSet::from_coords(params, &[[0, 0], [1, 1]]).unwrap();
        let check = shatters(&pts(params, &[[0, 0]]), &u).unwrap();
        assert_eq!(check, ShatterCheck::Unrealized(pts(params, &[[0, 0]])));
    }

    #[test]
    fn precondition_errors() {
        let params = h(2, 3, 1);
        let u = PointSet::from_coords(params, &[[0, 0], [1, 1]]).unwrap();
        assert!(matches!(
            shatters(&pts(params, &[[0, 1]]), &u),
            Err(Error::NotInSet(_))
        ));
        assert!(matches!(
            shatters(&pts(params, &[[0, 0], [0, 0]]), &u),
            Err(Error::RepeatedPoint(_))
        ));
        let full = PointSet::full(params);
        let six: Vec<Point> = full.points().take(6).collect();
        assert!(matches!(shatters(&six, &full), Err(Error::TooManyPoints { .. })));
    }

    #[test]
    fn full_h241_has_dimension_three() {
        let u = PointSet::full(h(2, 4, 1));
        let result = vc_dimension(&u, None);
        assert_eq!(result.dimension, 3);
        assert_eq!(result.refuted_at, Some(4));
        assert!(result.validate(&u));
    }

    #[test]
    fn single_vertex_has_dimension_zero() {
        let params = h(2, 4, 1);
        let u = PointSet::from_coords(params, &[[1, 1]]).unwrap();
        let result = vc_dimension(&u, None);
        assert_eq!(result.dimension, 0);
        assert_eq!(result.refuted_at, Some(1));
        assert!(result.validate(&u));
    }

    #[test]
    fn empty_set_convention() {
        let result = vc_dimension(&PointSet::empty(h(2, 3, 1)), None);
        assert_eq!(result.dimension, -1);
        assert!(result.witness.is_none());
        assert_eq!(result.refuted_at, Some(0));
    }

    #[test]
    fn edge_free_diagonal_has_dimension_zero() {
        let params = h(2, 3, 1);
        let u = PointSet::from_coords(params, &[[0, 0], [1, 1], [2, 2]]).unwrap();
        assert_eq!(vc_dimension(&u, None).dimension, 0);
    }

    #[test]
    fn max_k_caps_the_search() {
        let u = PointSet::full(h(2, 4, 1));
        let result = vc_dimension(&u, Some(2));
        assert_eq!(result.dimension, 2);
        assert_eq!(result.refuted_at, None);
    }

    #[test]
    fn loops_give_dimension_one() {
        let u = PointSet::full(h(2, 3, 0));
        let result = vc_dimension(&u, None);
        assert_eq!(result.dimension, 1);
        assert!(result.validate(&u));
    }

    #[test]
    fn witness_perturbation_is_caught() {
        let params = h(2, 3, 1);
        let u = PointSet::from_coords(params, &[[0, 0], [0, 1], [0, 2], [1, 2]]).unwrap();
        let mut witness = vc_dimension(&u, None).witness.unwrap();
        assert!(validate_witness(&witness, &u));
        // u for {x} replaced by the realizer of {} (adjacent to neither)
        witness.assignments[1] = witness.assignments[0].clone();
        assert!(matches!(witness.validate(&u), Err(WitnessDefect::Mismatch { .. })));
    }

    #[test]
    fn witness_with_foreign_point_fails() {
        let params = h(2, 3, 1);
        let u = PointSet::from_coords(params, &[[0, 0], [0, 1], [0, 2], [1, 2]]).unwrap();
        let mut witness = vc_dimension(&u, None).witness.unwrap();
        witness.w[0] = Point::new(&params, vec![2, 2]).unwrap();
        assert!(matches!(witness.validate(&u), Err(WitnessDefect::NotInSet(_))));
    }

    #[test]
    fn witness_json_shape() {
        let params = h(2, 3, 1);
        let u = PointSet::from_coords(params, &[[0, 0], [0, 1], [0, 2], [1, 2]]).unwrap();
        let witness = vc_dimension(&u, None).witness.unwrap();
        let json = serde_json::to_value(&witness).unwrap();
        assert_eq!(
            json,
            serde_json::json!({
                "W": [[0, 0], [0, 1]],
                "assignments": [
                    {"S": [], "u": [1, 2]},
                    {"S": [0], "u": [0, 1]},
                    {"S": [1], "u": [0, 0]},
                    {"S": [0, 1], "u": [0, 2]}
                ]
            })
        );
        let back: ShatterWitness = serde_json::from_value(json).unwrap();
        assert_eq!(back, witness);
    }

    #[test]
    fn witness_json_rejects_gaps() {
        let json = serde_json::json!({"W": [[0, 0]], "assignments": [{"S": [], "u": [1, 1]}]});
        assert!(serde_json::from_value::<ShatterWitness>(json).is_err());
    }
}
