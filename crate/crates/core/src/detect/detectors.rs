use std::collections::hash_map::Entry;
use std::collections::{BTreeMap, HashMap};

use super::{Configuration, Orientation};
use crate::error::{Error, Result};
use crate::hamming::{distance, key_without, Line, Plane, Point, PointSet};

fn require(u: &PointSet, detector: &'static str, requirement: &'static str, ok: bool) -> Result<()> {
    if ok {
        return Ok(());
    }
    let p = u.params();
    Err(Error::AmbientMismatch {
        detector,
        requirement,
        d: p.d(),
        q: p.q(),
        t: p.t(),
    })
}

/// Members of `u` grouped by the line with free coordinate `free`, keyed in
/// lexicographic order of the fixed coordinates. Points within a line are
/// ordered by their free coordinate.
fn members_by_line(u: &PointSet, free: usize) -> BTreeMap<usize, Vec<Point>> {
    let q = u.params().q();
    let mut out: BTreeMap<usize, Vec<Point>> = BTreeMap::new();
    for p in u.points() {
        out.entry(key_without(p.coords(), &[free], q)).or_default().push(p);
    }
    out
}

/// Members of `u` on the line through `p` with free coordinate `free`,
/// other than `p`.
fn others_on_line(u: &PointSet, p: &Point, free: usize) -> Vec<Point> {
    Line::through(p, free)
        .members(u)
        .into_iter()
        .filter(|m| m != p)
        .collect()
}

/// Three members on a line plus a member off it that shares no line with
/// two of the three.
pub fn find_line_triple(u: &PointSet) -> Result<Option<Configuration>> {
    require(u, "line-triple detector", "t = 1", u.params().t() == 1)?;
    for free in 0..u.params().d() {
        for members in members_by_line(u, free).values() {
            if members.len() < 3 {
                continue;
            }
            let line = Line::through(&members[0], free);
            let Some(u0) = u.points().find(|p| !line.contains(p)) else {
                // U lies on this line; no other line holds more than one point.
                return Ok(None);
            };
            let mut three: Vec<Point> = members[..3].to_vec();
            // At most one point of the line shares a line with u0; it becomes z.
            if let Some(pos) = three.iter().position(|p| distance(p.coords(), u0.coords()) == 1) {
                let shared = three.remove(pos);
                three.push(shared);
            }
            let [x, y, z]: [Point; 3] = three.try_into().expect("three points");
            return Ok(Some(Configuration::LineTriple { line, x, y, z, u0 }));
        }
    }
    Ok(None)
}

/// First hole `(a, c)` outside `U` (lexicographic) that completes three
/// members `(a, d), (b, c), (b, d)` to a rectangle.
pub fn find_corner(u: &PointSet) -> Result<Option<Configuration>> {
    let params = u.params();
    require(u, "corner detector", "d = 2 and t = 1", params.d() == 2 && params.t() == 1)?;
    let q = params.q();
    let members = u.to_vec();
    for a in 0..q {
        for c in 0..q {
            let hole = Point::from_coords_unchecked(vec![a, c]);
            if u.contains(&hole) {
                continue;
            }
            for apex in &members {
                let (b, d) = (apex.coords()[0], apex.coords()[1]);
                if b == a || d == c {
                    continue;
                }
                let x = Point::from_coords_unchecked(vec![a, d]);
                let y = Point::from_coords_unchecked(vec![b, c]);
                if u.contains(&x) && u.contains(&y) {
                    return Ok(Some(Configuration::Corner {
                        x,
                        y,
                        apex: apex.clone(),
                        hole,
                    }));
                }
            }
        }
    }
    Ok(None)
}

/// Vertical fists (principal column) by column index, then horizontal ones.
pub fn find_fist(u: &PointSet) -> Result<Option<Configuration>> {
    let params = u.params();
    require(u, "fist detector", "d = 2 and t = 1", params.d() == 2 && params.t() == 1)?;
    for orientation in [Orientation::Column, Orientation::Row] {
        let free = orientation.free_coord();
        let cross = 1 - free;
        for members in members_by_line(u, free).values() {
            if members.len() < 4 {
                continue;
            }
            let line = Line::through(&members[0], free);
            let supported: Vec<(Point, Point)> = members
                .iter()
                .filter_map(|p| {
                    others_on_line(u, p, cross)
                        .into_iter()
                        .next()
                        .map(|s| (p.clone(), s))
                })
                .collect();
            let n = supported.len();
            for i in 0..n {
                for j in i + 1..n {
                    for k in j + 1..n {
                        let chosen = [&supported[i], &supported[j], &supported[k]];
                        let crossing: Vec<Line> = chosen.iter().map(|(p, _)| Line::through(p, cross)).collect();
                        let Some(u3) = members.iter().find(|m| chosen.iter().all(|(p, _)| p != *m)) else {
                            continue;
                        };
                        let Some(u0) = u
                            .points()
                            .find(|m| !line.contains(m) && crossing.iter().all(|l| !l.contains(m)))
                        else {
                            continue;
                        };
                        let [(x, ux), (y, uy), (z, uz)] = chosen.map(Clone::clone);
                        return Ok(Some(Configuration::Fist {
                            orientation,
                            line,
                            x,
                            y,
                            z,
                            u3: u3.clone(),
                            ux,
                            uy,
                            uz,
                            u0,
                        }));
                    }
                }
            }
        }
    }
    Ok(None)
}

/// Pairs at distance two are diagonals of a potential rectangle; a second
/// pair with the same plane and value sets closes it.
pub fn find_rectangle(u: &PointSet) -> Result<Option<Configuration>> {
    let params = u.params();
    require(u, "rectangle detector", "d >= 2 and t = 1", params.d() >= 2 && params.t() == 1)?;
    let q = params.q();
    let members = u.to_vec();
    type Key = (usize, usize, usize, (u32, u32), (u32, u32));
    let mut diagonals: HashMap<Key, (usize, usize)> = HashMap::new();
    for (ia, a) in members.iter().enumerate() {
        for (ib, b) in members.iter().enumerate().skip(ia + 1) {
            if distance(a.coords(), b.coords()) != 2 {
                continue;
            }
            let mut diff = (0..params.d()).filter(|&k| a.coords()[k] != b.coords()[k]);
            let (i, j) = (diff.next().unwrap(), diff.next().unwrap());
            let span = |k: usize| {
                let (s, t) = (a.coords()[k], b.coords()[k]);
                (s.min(t), s.max(t))
            };
            let key = (i, j, key_without(a.coords(), &[i, j], q), span(i), span(j));
            match diagonals.entry(key) {
                Entry::Vacant(e) => {
                    e.insert((ia, ib));
                }
                Entry::Occupied(e) => {
                    let (oa, ob) = *e.get();
                    let mut corners = [members[oa].clone(), members[ob].clone(), a.clone(), b.clone()];
                    corners.sort();
                    return Ok(Some(Configuration::Rectangle {
                        plane: Plane::through(a, (i, j)),
                        corners,
                    }));
                }
            }
        }
    }
    Ok(None)
}

/// First line (by free coordinate, then fixed values) holding four members.
pub fn find_four_on_line(u: &PointSet) -> Result<Option<Configuration>> {
    require(u, "four-on-a-line detector", "t = 1", u.params().t() == 1)?;
    for free in 0..u.params().d() {
        for members in members_by_line(u, free).values() {
            if members.len() >= 4 {
                let points: [Point; 4] = members[..4].to_vec().try_into().expect("four points");
                return Ok(Some(Configuration::FourOnALine {
                    line: Line::through(&members[0], free),
                    points,
                }));
            }
        }
    }
    Ok(None)
}

/// Row-plucks by row index, then column-plucks, each with an unrelated
/// member.
pub fn find_pluck(u: &PointSet) -> Result<Option<Configuration>> {
    let params = u.params();
    require(u, "pluck detector", "d = 2 and t = 2", params.d() == 2 && params.t() == 2)?;
    for orientation in [Orientation::Row, Orientation::Column] {
        let free = orientation.free_coord();
        let cross = 1 - free;
        for members in members_by_line(u, free).values() {
            let pivots: Vec<(Point, Point)> = members
                .iter()
                .filter_map(|p| {
                    others_on_line(u, p, cross)
                        .into_iter()
                        .next()
                        .map(|s| (p.clone(), s))
                })
                .collect();
            if pivots.len() < 2 {
                continue;
            }
            let principal = Line::through(&members[0], free);
            for i in 0..pivots.len() {
                for j in i + 1..pivots.len() {
                    let (x, uy) = &pivots[i];
                    let (y, ux) = &pivots[j];
                    let (lx, ly) = (Line::through(x, cross), Line::through(y, cross));
                    let unrelated = u
                        .points()
                        .find(|m| !principal.contains(m) && !lx.contains(m) && !ly.contains(m));
                    if let Some(unrelated) = unrelated {
                        return Ok(Some(Configuration::Pluck {
                            orientation,
                            principal,
                            x: x.clone(),
                            y: y.clone(),
                            ux: ux.clone(),
                            uy: uy.clone(),
                            unrelated,
                        }));
                    }
                }
            }
        }
    }
    Ok(None)
}
