//! Plain-text point-set files.
//!
//! ```text
//! # optional comments
//! 2 4 1
//! 0 0
//! 0 1
//! ```
//!
//! The first significant line holds `d q t`; every following line one point
//! as `d` integers in `[0, q)`. Blank lines and `#` comments are ignored.

use std::collections::HashMap;
use std::fmt::Write as _;

use super::{HammingParams, Point, PointSet};
use crate::error::{Error, Result};

pub fn parse_point_set(text: &str) -> Result<PointSet> {
    parse_point_set_with_cap(text, super::DEFAULT_VERTEX_CAP)
}

pub fn parse_point_set_with_cap(text: &str, cap: u64) -> Result<PointSet> {
    let mut params: Option<HammingParams> = None;
    let mut seen: HashMap<Point, usize> = HashMap::new();
    let mut points = Vec::new();

    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let content = raw.split('#').next().unwrap_or("").trim();
        if content.is_empty() {
            continue;
        }
        let fields = content
            .split_whitespace()
            .map(|tok| {
                tok.parse::<i64>().map_err(|_| Error::Parse {
                    line,
                    message: format!("expected an integer, found {tok:?}"),
                })
            })
            .collect::<Result<Vec<i64>>>()?;

        let Some(params) = params else {
            let [d, q, t] = fields[..] else {
                return Err(Error::Parse {
                    line,
                    message: format!("header must be `d q t`, found {} fields", fields.len()),
                });
            };
            if d < 1 || q < 1 || t < 0 || q > u32::MAX as i64 {
                return Err(Error::Parse {
                    line,
                    message: format!("invalid header values d={d} q={q} t={t}"),
                });
            }
            params = Some(
                HammingParams::with_cap(d as usize, q as u32, t as usize, cap).map_err(|e| {
                    Error::Parse {
                        line,
                        message: e.to_string(),
                    }
                })?,
            );
            continue;
        };

        if fields.len() != params.d() {
            return Err(Error::Parse {
                line,
                message: format!("expected {} coordinates, found {}", params.d(), fields.len()),
            });
        }
        if let Some(&bad) = fields.iter().find(|&&c| c < 0 || c >= params.q() as i64) {
            return Err(Error::Parse {
                line,
                message: format!("coordinate {bad} outside [0, {})", params.q()),
            });
        }
        let point = Point::from_coords_unchecked(fields.iter().map(|&c| c as u32).collect());
        if let Some(&first) = seen.get(&point) {
            return Err(Error::DuplicatePoint {
                line,
                first,
                point: point.to_string(),
            });
        }
        seen.insert(point.clone(), line);
        points.push(point);
    }

    let params = params.ok_or(Error::Parse {
        line: text.lines().count().max(1),
        message: "missing `d q t` header".into(),
    })?;
    PointSet::from_points(params, points)
}

/// Renders a point set; each header line is emitted as a `#` comment.
pub fn write_point_set(set: &PointSet, header: &[String]) -> String {
    let params = set.params();
    let mut out = String::new();
    for h in header {
        let _ = writeln!(out, "# {h}");
    }
    let _ = writeln!(out, "{} {} {}", params.d(), params.q(), params.t());
    for p in set.points() {
        let coords: Vec<String> = p.coords().iter().map(u32::to_string).collect();
        let _ = writeln!(out, "{}", coords.join(" "));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_with_comments_and_blanks() {
        let text = "# header comment\n\n2 3 1\n0 0   # origin\n\n1 2\n";
        let set = parse_point_set(text).unwrap();
        assert_eq!(set.params(), HammingParams::new(2, 3, 1).unwrap());
        assert_eq!(set.len(), 2);
    }

    #[test]
    fn duplicate_names_line_numbers() {
        let text = "2 3 1\n0 0\n1 1\n0 0\n";
        assert_eq!(
            parse_point_set(text).unwrap_err(),
            Error::DuplicatePoint {
                line: 4,
                first: 2,
                point: "(0,0)".into()
            }
        );
    }

    #[test]
    fn out_of_range_and_arity_errors_carry_line() {
        assert!(matches!(
            parse_point_set("2 3 1\n0 3\n"),
            Err(Error::Parse { line: 2, .. })
        ));
        assert!(matches!(
            parse_point_set("2 3 1\n\n0 1 2\n"),
            Err(Error::Parse { line: 3, .. })
        ));
        assert!(matches!(
            parse_point_set("2 3 1\n0 -1\n"),
            Err(Error::Parse { line: 2, .. })
        ));
        assert!(matches!(parse_point_set("2 x 1\n"), Err(Error::Parse { line: 1, .. })));
    }

    #[test]
    fn header_required() {
        assert!(matches!(parse_point_set("# nothing\n"), Err(Error::Parse { .. })));
        assert!(matches!(parse_point_set("2 3\n"), Err(Error::Parse { line: 1, .. })));
    }

    #[test]
    fn header_only_gives_empty_set() {
        let set = parse_point_set("3 2 1\n").unwrap();
        assert!(set.is_empty());
    }

    #[test]
    fn write_then_parse() {
        let params = HammingParams::new(3, 3, 2).unwrap();
        let set = PointSet::from_coords(params, &[[0, 1, 2], [2, 2, 2], [1, 0, 0]]).unwrap();
        let text = write_point_set(&set, &["demo".to_string()]);
        assert_eq!(text, "# demo\n3 3 2\n0 1 2\n1 0 0\n2 2 2\n");
        assert_eq!(parse_point_set(&text).unwrap(), set);
    }
}
