//! The generalized Hamming graph `H(d, q, t)` and subsets of its vertices.

mod format;
mod geometry;
mod params;
mod point;
mod set;

pub use format::{parse_point_set, parse_point_set_with_cap, write_point_set};
pub use geometry::{collinear, lines_through, slice, Line, Plane};
pub use params::{HammingParams, DEFAULT_VERTEX_CAP};
pub use point::{adjacent, hamming_distance, Point};
pub use set::{neighborhood, PointSet};

pub(crate) use geometry::{digits, key_without};
pub(crate) use point::distance;
