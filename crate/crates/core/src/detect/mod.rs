//! Detection of the point configurations that force (or rule out) shattered
//! sets, and conversion of detector hits into explicit witnesses.

mod config;
mod detectors;

pub use config::{ConfigKind, Configuration, Orientation};
pub use detectors::{find_corner, find_fist, find_four_on_line, find_line_triple, find_pluck, find_rectangle};

use crate::error::{Error, Result};
use crate::hamming::{distance, key_without, slice, HammingParams, Plane, Point, PointSet};
use crate::shatter::ShatterWitness;

/// Runs the detector for `kind`.
pub fn detect(kind: ConfigKind, u: &PointSet) -> Result<Option<Configuration>> {
    match kind {
        ConfigKind::LineTriple => find_line_triple(u),
        ConfigKind::Corner => find_corner(u),
        ConfigKind::Fist => find_fist(u),
        ConfigKind::Rectangle => find_rectangle(u),
        ConfigKind::Pluck => find_pluck(u),
        ConfigKind::FourOnALine => find_four_on_line(u),
    }
}

/// Builds the shatter witness that the configuration guarantees, assigning
/// realizers role by role, then validates it against `U`.
///
/// | kind       | `W`       | realizers (by subset)                                   |
/// |------------|-----------|---------------------------------------------------------|
/// | LineTriple | `{x, y}`  | `{}: u0, {x}: y, {y}: x, {x,y}: z`                       |
/// | Corner     | `{x, y}`  | `{x,y}: apex`, the rest by adjacency pattern           |
/// | Fist       | `{x,y,z}` | `{}: u0`, singletons: supports, pairs: third point, all: `u3` |
/// | Pluck      | `{x, y}`  | `{}: x, {x}: ux, {y}: uy, {x,y}: unrelated`              |
pub fn witness_from_config(c: &Configuration, u: &PointSet) -> Result<ShatterWitness> {
    for (role, p) in c.roles() {
        if !u.contains(p) {
            return Err(Error::MissingRole { role });
        }
    }
    let witness = match c {
        Configuration::LineTriple { x, y, z, u0, .. } => ShatterWitness {
            w: vec![x.clone(), y.clone()],
            assignments: vec![u0.clone(), y.clone(), x.clone(), z.clone()],
        },
        Configuration::Corner { x, y, apex, .. } => corner_witness(x, y, apex, u)?,
        Configuration::Fist {
            x,
            y,
            z,
            u3,
            ux,
            uy,
            uz,
            u0,
            ..
        } => ShatterWitness {
            w: vec![x.clone(), y.clone(), z.clone()],
            // masks: {}, {x}, {y}, {x,y}, {z}, {x,z}, {y,z}, {x,y,z}
            assignments: vec![
                u0.clone(),
                ux.clone(),
                uy.clone(),
                z.clone(),
                uz.clone(),
                y.clone(),
                x.clone(),
                u3.clone(),
            ],
        },
        Configuration::Pluck {
            x,
            y,
            ux,
            uy,
            unrelated,
            ..
        } => ShatterWitness {
            w: vec![x.clone(), y.clone()],
            assignments: vec![x.clone(), ux.clone(), uy.clone(), unrelated.clone()],
        },
        Configuration::Rectangle { .. } => return Err(Error::NoWitnessConstruction("Rectangle")),
        Configuration::FourOnALine { .. } => return Err(Error::NoWitnessConstruction("FourOnALine")),
    };
    witness
        .validate(u)
        .map_err(|defect| Error::InvalidWitness(defect.to_string()))?;
    Ok(witness)
}

/// `W = {x, y}` with `x = (a, d)`, `y = (b, c)`; the apex `(b, d)` realizes
/// `{x, y}`. The other realizers are the first members adjacent to exactly
/// `x`, exactly `y`, and to neither.
fn corner_witness(x: &Point, y: &Point, apex: &Point, u: &PointSet) -> Result<ShatterWitness> {
    let trace = |p: &Point| {
        (
            distance(p.coords(), x.coords()) == 1,
            distance(p.coords(), y.coords()) == 1,
        )
    };
    let find = |want: (bool, bool), role: &'static str| {
        u.points()
            .find(|p| trace(p) == want)
            .ok_or(Error::MissingRole { role })
    };
    Ok(ShatterWitness {
        w: vec![x.clone(), y.clone()],
        assignments: vec![
            find((false, false), "u_0")?,
            find((true, false), "u_x")?,
            find((false, true), "u_y")?,
            apex.clone(),
        ],
    })
}

/// Scans the axis planes of `H(d, q, 1)` for one holding at least
/// `threshold` members: first the `q^(d-2)` planes freeing the last two
/// coordinates, then every other coordinate pair in lexicographic order.
/// Returns the plane and its slice as a subset of `H(2, q, 1)`.
pub fn pigeonhole_slice(u: &PointSet, threshold: usize) -> Result<Option<(Plane, PointSet)>> {
    let params = u.params();
    let d = params.d();
    if d < 3 || params.t() != 1 {
        return Err(Error::AmbientMismatch {
            detector: "pigeonhole slice",
            requirement: "d >= 3 and t = 1",
            d,
            q: params.q(),
            t: params.t(),
        });
    }
    for pair in coordinate_pairs(d) {
        let counts = plane_counts(u, pair);
        if let Some(key) = counts.iter().position(|&c| c >= threshold) {
            let fixed = crate::hamming::digits(key, params.q(), d - 2);
            let plane = Plane::new(&params, pair, fixed)?;
            let s = slice(u, &plane)?;
            return Ok(Some((plane, s)));
        }
    }
    Ok(None)
}

/// `(d-2, d-1)` first, then all other pairs `i < j`.
pub fn coordinate_pairs(d: usize) -> Vec<(usize, usize)> {
    let last = (d - 2, d - 1);
    std::iter::once(last)
        .chain((0..d).flat_map(|i| (i + 1..d).map(move |j| (i, j))).filter(move |&p| p != last))
        .collect()
}

/// Members per plane for the coordinate pair `pair`, indexed by the
/// lexicographic key of the fixed coordinates.
pub fn plane_counts(u: &PointSet, pair: (usize, usize)) -> Vec<usize> {
    let params: HammingParams = u.params();
    let planes = params.vertex_count() / (params.q() as usize).pow(2);
    let mut counts = vec![0usize; planes];
    for p in u.points() {
        counts[key_without(p.coords(), &[pair.0, pair.1], params.q())] += 1;
    }
    counts
}
