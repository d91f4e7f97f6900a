use fixedbitset::FixedBitSet;

use super::point::distance;
use super::{HammingParams, Point};
use crate::error::{Error, Result};

/// An immutable subset `U` of the vertices of `H(d, q, t)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PointSet {
    params: HammingParams,
    members: FixedBitSet,
    size: usize,
}

impl PointSet {
    pub fn empty(params: HammingParams) -> Self {
        Self {
            params,
            members: FixedBitSet::with_capacity(params.vertex_count()),
            size: 0,
        }
    }

    /// Every vertex of the ambient graph.
    pub fn full(params: HammingParams) -> Self {
        let n = params.vertex_count();
        let mut members = FixedBitSet::with_capacity(n);
        members.insert_range(..);
        Self {
            params,
            members,
            size: n,
        }
    }

    /// Collects validated points; repeated points collapse.
    pub fn from_points<I>(params: HammingParams, points: I) -> Result<Self>
    where
        I: IntoIterator<Item = Point>,
    {
        let mut members = FixedBitSet::with_capacity(params.vertex_count());
        for p in points {
            p.check(&params)?;
            members.insert(p.index(&params));
        }
        Ok(Self::from_bits(params, members))
    }

    /// Convenience for literal coordinate lists.
    pub fn from_coords<C: AsRef<[u32]>>(params: HammingParams, coords: &[C]) -> Result<Self> {
        Self::from_points(
            params,
            coords
                .iter()
                .map(|c| Point::new(&params, c.as_ref().to_vec()))
                .collect::<Result<Vec<_>>>()?,
        )
    }

    pub fn from_indices<I>(params: HammingParams, indices: I) -> Result<Self>
    where
        I: IntoIterator<Item = usize>,
    {
        let n = params.vertex_count();
        let mut members = FixedBitSet::with_capacity(n);
        for i in indices {
            if i >= n {
                return Err(Error::InvalidParams(format!(
                    "vertex index {i} out of range for {params}"
                )));
            }
            members.insert(i);
        }
        Ok(Self::from_bits(params, members))
    }

    pub(crate) fn from_bits(params: HammingParams, members: FixedBitSet) -> Self {
        let size = members.count_ones(..);
        Self {
            params,
            members,
            size,
        }
    }

    pub fn params(&self) -> HammingParams {
        self.params
    }

    pub fn len(&self) -> usize {
        self.size
    }

    pub fn is_empty(&self) -> bool {
        self.size == 0
    }

    /// False for points that are not valid vertices of the ambient graph.
    pub fn contains(&self, p: &Point) -> bool {
        p.check(&self.params).is_ok() && self.members.contains(p.index(&self.params))
    }

    pub fn contains_index(&self, index: usize) -> bool {
        self.members.contains(index)
    }

    /// Member indices in increasing order.
    pub fn indices(&self) -> impl Iterator<Item = usize> + '_ {
        self.members.ones()
    }

    /// Members in lexicographic order.
    pub fn points(&self) -> impl Iterator<Item = Point> + '_ {
        let params = self.params;
        self.members.ones().map(move |i| Point::from_index(&params, i))
    }

    pub fn to_vec(&self) -> Vec<Point> {
        self.points().collect()
    }

    pub fn with_point(&self, p: &Point) -> Result<Self> {
        p.check(&self.params)?;
        let mut members = self.members.clone();
        members.insert(p.index(&self.params));
        Ok(Self::from_bits(self.params, members))
    }

    pub fn without_point(&self, p: &Point) -> Self {
        let mut members = self.members.clone();
        if p.check(&self.params).is_ok() {
            members.set(p.index(&self.params), false);
        }
        Self::from_bits(self.params, members)
    }

    pub fn union(&self, other: &PointSet) -> Result<Self> {
        self.require_same_ambient(other)?;
        let mut members = self.members.clone();
        members.union_with(&other.members);
        Ok(Self::from_bits(self.params, members))
    }

    pub fn is_subset(&self, other: &PointSet) -> bool {
        self.params.d() == other.params.d()
            && self.params.q() == other.params.q()
            && self.members.is_subset(&other.members)
    }

    /// `{ u in U : u adjacent to x }`.
    pub fn neighborhood(&self, x: &Point) -> Result<PointSet> {
        x.check(&self.params)?;
        let t = self.params.t();
        let mut members = FixedBitSet::with_capacity(self.params.vertex_count());
        for (i, u) in self.indices().zip(self.points()) {
            if distance(u.coords(), x.coords()) == t {
                members.insert(i);
            }
        }
        Ok(Self::from_bits(self.params, members))
    }

    /// Number of adjacent pairs inside `U`.
    pub fn edge_count(&self) -> usize {
        let pts = self.to_vec();
        let t = self.params.t();
        let mut edges = 0;
        for (i, a) in pts.iter().enumerate() {
            for b in &pts[i + 1..] {
                if distance(a.coords(), b.coords()) == t {
                    edges += 1;
                }
            }
        }
        edges
    }

    fn require_same_ambient(&self, other: &PointSet) -> Result<()> {
        if self.params != other.params {
            return Err(Error::InvalidParams(format!(
                "point sets live in different graphs: {} vs {}",
                self.params, other.params
            )));
        }
        Ok(())
    }
}

/// Free-function form of [`PointSet::neighborhood`].
pub fn neighborhood(x: &Point, u: &PointSet) -> Result<PointSet> {
    u.neighborhood(x)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn h(d: usize, q: u32, t: usize) -> HammingParams {
        HammingParams::new(d, q, t).unwrap()
    }

    fn coords(set: &PointSet) -> Vec<Vec<u32>> {
        set.points().map(|p| p.coords().to_vec()).collect()
    }

    #[test]
    fn neighborhood_in_full_h231() {
        let params = h(2, 3, 1);
        let full = PointSet::full(params);
        let x = Point::new(&params, vec![0, 0]).unwrap();
        assert_eq!(
            coords(&full.neighborhood(&x).unwrap()),
            vec![vec![0, 1], vec![0, 2], vec![1, 0], vec![2, 0]]
        );
    }

    #[test]
    fn neighborhood_in_full_h232() {
        let params = h(2, 3, 2);
        let full = PointSet::full(params);
        let x = Point::new(&params, vec![0, 0]).unwrap();
        assert_eq!(
            coords(&full.neighborhood(&x).unwrap()),
            vec![vec![1, 1], vec![1, 2], vec![2, 1], vec![2, 2]]
        );
    }

    #[test]
    fn no_loop_at_distance_one() {
        let params = h(2, 3, 1);
        let u = PointSet::from_coords(params, &[[0, 0]]).unwrap();
        let x = Point::new(&params, vec![0, 0]).unwrap();
        assert!(u.neighborhood(&x).unwrap().is_empty());
    }

    #[test]
    fn loop_at_distance_zero() {
        let params = h(2, 3, 0);
        let u = PointSet::from_coords(params, &[[0, 0], [1, 1]]).unwrap();
        let x = Point::new(&params, vec![0, 0]).unwrap();
        assert_eq!(coords(&u.neighborhood(&x).unwrap()), vec![vec![0, 0]]);
        let y = Point::new(&params, vec![2, 2]).unwrap();
        assert!(u.neighborhood(&y).unwrap().is_empty());
    }

    #[test]
    fn size_tracks_population() {
        let params = h(2, 4, 1);
        let u = PointSet::from_coords(params, &[[0, 0], [1, 1], [0, 0]]).unwrap();
        assert_eq!(u.len(), 2);
        let v = u.with_point(&Point::new(&params, vec![3, 3]).unwrap()).unwrap();
        assert_eq!(v.len(), 3);
        assert_eq!(u.len(), 2);
        assert_eq!(v.without_point(&Point::new(&params, vec![0, 0]).unwrap()).len(), 2);
        assert!(u.is_subset(&v));
        assert!(!v.is_subset(&u));
    }

    #[test]
    fn contains_rejects_foreign_points() {
        let params = h(2, 3, 1);
        let u = PointSet::full(params);
        assert!(!u.contains(&Point::from_coords_unchecked(vec![0, 3])));
        assert!(!u.contains(&Point::from_coords_unchecked(vec![0, 0, 0])));
    }

    #[test]
    fn degree_in_full_graph_is_d_times_q_minus_one() {
        for (d, q) in [(2, 3), (3, 3), (2, 5), (3, 4)] {
            let params = h(d, q, 1);
            let full = PointSet::full(params);
            for x in full.points() {
                assert_eq!(full.neighborhood(&x).unwrap().len(), d * (q as usize - 1));
            }
        }
    }

    #[test]
    fn no_edges_when_t_exceeds_d() {
        for (d, q) in [(1, 4), (2, 3), (3, 2)] {
            let params = h(d, q, d + 1);
            assert_eq!(PointSet::full(params).edge_count(), 0);
        }
    }
}
