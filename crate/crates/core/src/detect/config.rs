use std::collections::BTreeMap;
use std::fmt;

use serde::{Serialize, Serializer};

use crate::hamming::{distance, Line, Plane, Point, PointSet};

/// Which kind of line plays the principal role. In `H(2, q)` a row varies
/// the first coordinate and a column the second, so a "vertical" fist has
/// `Orientation::Column`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Orientation {
    Row,
    Column,
}

impl Orientation {
    /// Free coordinate of a principal line with this orientation.
    pub fn free_coord(self) -> usize {
        match self {
            Self::Row => 0,
            Self::Column => 1,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum ConfigKind {
    LineTriple,
    Corner,
    Fist,
    Rectangle,
    Pluck,
    FourOnALine,
}

impl ConfigKind {
    pub fn as_str(self) -> &'static str {
        match self {
            Self::LineTriple => "LineTriple",
            Self::Corner => "Corner",
            Self::Fist => "Fist",
            Self::Rectangle => "Rectangle",
            Self::Pluck => "Pluck",
            Self::FourOnALine => "FourOnALine",
        }
    }
}

impl fmt::Display for ConfigKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// A geometric pattern found in `U`, with its distinguished points.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Configuration {
    /// `x, y, z` on `line`, `u0` off it and on no common line with `x` or `y`.
    LineTriple {
        line: Line,
        x: Point,
        y: Point,
        z: Point,
        u0: Point,
    },
    /// `x = (a, d)`, `y = (b, c)` and `apex = (b, d)` in `U`; `hole = (a, c)` not.
    Corner {
        x: Point,
        y: Point,
        apex: Point,
        hole: Point,
    },
    /// `x, y, z, u3` on `line`; `ux, uy, uz` share a crossing line with
    /// `x, y, z` respectively; `u0` avoids all four lines.
    Fist {
        orientation: Orientation,
        line: Line,
        x: Point,
        y: Point,
        z: Point,
        u3: Point,
        ux: Point,
        uy: Point,
        uz: Point,
        u0: Point,
    },
    /// Four corners of a combinatorial rectangle inside `plane`, sorted.
    Rectangle { plane: Plane, corners: [Point; 4] },
    /// Pivots `x, y` on the principal line; `uy` shares the crossing line of
    /// `x`, `ux` that of `y`; `unrelated` avoids all three lines.
    Pluck {
        orientation: Orientation,
        principal: Line,
        x: Point,
        y: Point,
        ux: Point,
        uy: Point,
        unrelated: Point,
    },
    FourOnALine { line: Line, points: [Point; 4] },
}

impl Configuration {
    pub fn kind(&self) -> ConfigKind {
        match self {
            Self::LineTriple { .. } => ConfigKind::LineTriple,
            Self::Corner { .. } => ConfigKind::Corner,
            Self::Fist { .. } => ConfigKind::Fist,
            Self::Rectangle { .. } => ConfigKind::Rectangle,
            Self::Pluck { .. } => ConfigKind::Pluck,
            Self::FourOnALine { .. } => ConfigKind::FourOnALine,
        }
    }

    /// Named points that must belong to `U`.
    pub fn roles(&self) -> Vec<(&'static str, &Point)> {
        match self {
            Self::LineTriple { x, y, z, u0, .. } => vec![("x", x), ("y", y), ("z", z), ("u_0", u0)],
            Self::Corner { x, y, apex, .. } => vec![("x", x), ("y", y), ("u_xy", apex)],
            Self::Fist {
                x,
                y,
                z,
                u3,
                ux,
                uy,
                uz,
                u0,
                ..
            } => vec![
                ("x", x),
                ("y", y),
                ("z", z),
                ("u_3", u3),
                ("u_x", ux),
                ("u_y", uy),
                ("u_z", uz),
                ("u_0", u0),
            ],
            Self::Rectangle { corners, .. } => corners
                .iter()
                .zip(["corner_0", "corner_1", "corner_2", "corner_3"])
                .map(|(p, n)| (n, p))
                .collect(),
            Self::Pluck {
                x,
                y,
                ux,
                uy,
                unrelated,
                ..
            } => vec![("x", x), ("y", y), ("u_x", ux), ("u_y", uy), ("u_xy", unrelated)],
            Self::FourOnALine { points, .. } => points
                .iter()
                .zip(["p0", "p1", "p2", "p3"])
                .map(|(p, n)| (n, p))
                .collect(),
        }
    }

    pub fn lines(&self) -> Vec<Line> {
        match self {
            Self::LineTriple { line, .. } | Self::FourOnALine { line, .. } => vec![line.clone()],
            Self::Corner { x, y, apex, .. } => vec![Line::through(apex, 0), Line::through(apex, 1), Line::through(x, 1), Line::through(y, 0)],
            Self::Fist {
                orientation, line, x, y, z, ..
            } => {
                let cross = 1 - orientation.free_coord();
                vec![line.clone(), Line::through(x, cross), Line::through(y, cross), Line::through(z, cross)]
            }
            Self::Rectangle { plane, corners } => {
                let (i, j) = plane.free_coords;
                let [a, _, _, d] = corners;
                vec![Line::through(a, i), Line::through(a, j), Line::through(d, i), Line::through(d, j)]
            }
            Self::Pluck {
                orientation,
                principal,
                x,
                y,
                ..
            } => {
                let cross = 1 - orientation.free_coord();
                vec![principal.clone(), Line::through(x, cross), Line::through(y, cross)]
            }
        }
    }

    pub fn hole(&self) -> Option<&Point> {
        match self {
            Self::Corner { hole, .. } => Some(hole),
            _ => None,
        }
    }

    /// Checks the membership and incidence relations of the pattern against
    /// `U` using coordinates only.
    pub fn check(&self, u: &PointSet) -> Result<(), String> {
        for (name, p) in self.roles() {
            if !u.contains(p) {
                return Err(format!("role {name} = {p} is not in U"));
            }
        }
        if let Some(h) = self.hole() {
            if u.contains(h) {
                return Err(format!("hole {h} is in U"));
            }
        }
        let dist = |a: &Point, b: &Point| distance(a.coords(), b.coords());
        let ensure = |ok: bool, what: &str| if ok { Ok(()) } else { Err(what.to_string()) };
        match self {
            Self::LineTriple { line, x, y, z, u0 } => {
                ensure([x, y, z].iter().all(|p| line.contains(p)), "x, y, z must lie on the line")?;
                ensure(x != y && y != z && x != z, "x, y, z must be distinct")?;
                ensure(!line.contains(u0), "u_0 must be off the line")?;
                ensure(dist(x, u0) > 1 && dist(y, u0) > 1, "u_0 shares a line with x or y")
            }
            Self::Corner { x, y, apex, hole } => {
                let (xa, xd) = (x.coords()[0], x.coords()[1]);
                let (yb, yc) = (y.coords()[0], y.coords()[1]);
                ensure(xa != yb && xd != yc, "x and y must differ in both coordinates")?;
                ensure(apex.coords() == [yb, xd], "apex must be (b, d)")?;
                ensure(hole.coords() == [xa, yc], "hole must be (a, c)")
            }
            Self::Fist {
                orientation,
                line,
                x,
                y,
                z,
                u3,
                ux,
                uy,
                uz,
                u0,
            } => {
                let on = [x, y, z, u3];
                ensure(line.free_coord == orientation.free_coord(), "orientation disagrees with line")?;
                ensure(on.iter().all(|p| line.contains(p)), "x, y, z, u_3 must lie on the line")?;
                for (i, a) in on.iter().enumerate() {
                    for b in &on[i + 1..] {
                        ensure(a != b, "line points must be distinct")?;
                    }
                }
                let cross = 1 - orientation.free_coord();
                for (p, s) in [(x, ux), (y, uy), (z, uz)] {
                    ensure(!line.contains(s), "support must be off the line")?;
                    ensure(Line::through(p, cross).contains(s), "support must share the crossing line")?;
                }
                ensure(!line.contains(u0), "u_0 must be off the line")?;
                ensure(
                    [x, y, z].iter().all(|p| !Line::through(p, cross).contains(u0)),
                    "u_0 must avoid the crossing lines",
                )
            }
            Self::Rectangle { plane, corners } => {
                ensure(corners.iter().all(|p| plane.contains(p)), "corners must lie in the plane")?;
                let (i, j) = plane.free_coords;
                let mut is: Vec<u32> = corners.iter().map(|p| p.coords()[i]).collect();
                let mut js: Vec<u32> = corners.iter().map(|p| p.coords()[j]).collect();
                is.sort();
                is.dedup();
                js.sort();
                js.dedup();
                ensure(is.len() == 2 && js.len() == 2, "corners must span two values per free coordinate")?;
                let mut all: Vec<&Point> = corners.iter().collect();
                all.sort();
                all.dedup();
                ensure(all.len() == 4, "corners must be distinct")
            }
            Self::Pluck {
                orientation,
                principal,
                x,
                y,
                ux,
                uy,
                unrelated,
            } => {
                let cross = 1 - orientation.free_coord();
                ensure(principal.free_coord == orientation.free_coord(), "orientation disagrees with line")?;
                ensure(principal.contains(x) && principal.contains(y) && x != y, "pivots must lie on the principal line")?;
                ensure(Line::through(x, cross).contains(uy) && uy != x, "u_y must share the crossing line of x")?;
                ensure(Line::through(y, cross).contains(ux) && ux != y, "u_x must share the crossing line of y")?;
                ensure(
                    !principal.contains(unrelated)
                        && !Line::through(x, cross).contains(unrelated)
                        && !Line::through(y, cross).contains(unrelated),
                    "unrelated point must avoid the principal and pivot lines",
                )
            }
            Self::FourOnALine { line, points } => {
                ensure(points.iter().all(|p| line.contains(p)), "points must lie on the line")?;
                ensure(points.windows(2).all(|w| w[0] < w[1]), "points must be distinct and sorted")
            }
        }
    }
}

#[derive(Serialize)]
struct ConfigurationRecord<'a> {
    kind: ConfigKind,
    #[serde(skip_serializing_if = "Option::is_none")]
    orientation: Option<Orientation>,
    roles: BTreeMap<&'static str, &'a Point>,
    lines: Vec<Line>,
    hole: Option<&'a Point>,
    #[serde(skip_serializing_if = "Option::is_none")]
    plane: Option<&'a Plane>,
}

impl Serialize for Configuration {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let orientation = match self {
            Self::Fist { orientation, .. } | Self::Pluck { orientation, .. } => Some(*orientation),
            _ => None,
        };
        let plane = match self {
            Self::Rectangle { plane, .. } => Some(plane),
            _ => None,
        };
        ConfigurationRecord {
            kind: self.kind(),
            orientation,
            roles: self.roles().into_iter().collect(),
            lines: self.lines(),
            hole: self.hole(),
            plane,
        }
        .serialize(serializer)
    }
}
