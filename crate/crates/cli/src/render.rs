//! Text renderings. Points always appear as coordinates.

use std::fmt::Write as _;

use hamming_vc::detect::{ConfigKind, Configuration};
use hamming_vc::hamming::{Point, PointSet};
use hamming_vc::shatter::{ShatterWitness, VcResult};
use hamming_vc::verify::{ThresholdResult, VerificationReport};
use hamming_vc::Error;

fn join(points: &[Point]) -> String {
    points.iter().map(Point::to_string).collect::<Vec<_>>().join(" ")
}

fn witness(out: &mut String, w: &ShatterWitness) {
    let _ = writeln!(out, "W = {{{}}}", join(&w.w));
    for (mask, u) in w.assignments.iter().enumerate() {
        let _ = writeln!(out, "  {{{}}} <- {u}", join(&w.subset(mask)));
    }
}

pub fn compute(u: &PointSet, r: &VcResult, max_k: usize) -> String {
    let mut out = format!("{}, {} points\n", u.params(), u.len());
    match r.refuted_at {
        None if r.dimension >= 0 => {
            let _ = writeln!(out, "vc >= {} (search stopped at max_k = {max_k})", r.dimension);
        }
        _ => {
            let _ = writeln!(out, "vc = {}", r.dimension);
        }
    }
    if let Some(w) = &r.witness {
        witness(&mut out, w);
    }
    out
}

pub fn detect(
    kind: ConfigKind,
    u: &PointSet,
    found: Option<&Configuration>,
    emitted: Option<&Result<ShatterWitness, Error>>,
) -> String {
    let mut out = format!("{}, {} points\n", u.params(), u.len());
    let Some(c) = found else {
        let _ = writeln!(out, "no {kind} found");
        return out;
    };
    let _ = writeln!(out, "{kind} found");
    for (role, p) in c.roles() {
        let _ = writeln!(out, "  {role:<10} {p}");
    }
    if let Some(hole) = c.hole() {
        let _ = writeln!(out, "  missing    {hole}");
    }
    match emitted {
        Some(Ok(w)) => {
            let _ = writeln!(out, "witness (validated):");
            witness(&mut out, w);
        }
        Some(Err(e)) => {
            let _ = writeln!(out, "no witness: {e}");
        }
        None => {}
    }
    out
}

pub fn verify(reports: &[VerificationReport], notes: &[String]) -> String {
    let mut out = String::new();
    for r in reports {
        let _ = writeln!(out, "{r}");
    }
    for note in notes {
        let _ = writeln!(out, "note: {note}");
    }
    let count = |name: &str| reports.iter().filter(|r| r.outcome.name() == name).count();
    let _ = writeln!(
        out,
        "{} verified, {} refuted, {} infeasible",
        count("verified"),
        count("refuted"),
        count("infeasible")
    );
    out
}

pub fn threshold(r: &ThresholdResult, vc: &VcResult) -> String {
    let mut out = format!("{}, k = {}\n", r.params, r.k);
    let _ = writeln!(out, "m* = {}", r.m_star);
    let _ = writeln!(out, "certificate: {} points, vc = {}", r.certificate.len(), vc.dimension);
    let _ = writeln!(out, "  {}", join(&r.certificate.to_vec()));
    let _ = writeln!(out, "search nodes: {}", r.work);
    out
}
