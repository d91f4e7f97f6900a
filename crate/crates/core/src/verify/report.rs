use std::fmt;
use std::time::Duration;

use serde::{Serialize, Serializer};

use super::ClaimSpec;
use crate::hamming::{Point, PointSet};
use crate::shatter::VcResult;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Mode {
    Exhaustive,
    Sampled { samples: u64, seed: u64 },
    Constructive,
}

impl Mode {
    pub fn name(&self) -> &'static str {
        match self {
            Self::Exhaustive => "exhaustive",
            Self::Sampled { .. } => "sampled",
            Self::Constructive => "constructive",
        }
    }

    pub fn seed(&self) -> Option<u64> {
        match self {
            Self::Sampled { seed, .. } => Some(*seed),
            _ => None,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Outcome {
    Verified,
    Refuted,
    Infeasible { reason: String },
}

impl Outcome {
    pub fn name(&self) -> &'static str {
        match self {
            Self::Verified => "verified",
            Self::Refuted => "refuted",
            Self::Infeasible { .. } => "infeasible",
        }
    }
}

/// A concrete point set together with its recomputed VC value.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Evidence {
    pub construction: Option<String>,
    pub set: PointSet,
    pub vc: VcResult,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VerificationReport {
    pub claim: ClaimSpec,
    pub mode: Mode,
    pub outcome: Outcome,
    /// Subsets enumerated or sampled up to the verdict; a refutation by a
    /// known construction counts the constructions tried.
    pub work: u64,
    pub counterexample: Option<Evidence>,
    /// For constructive checks, the construction that was examined.
    pub certificate: Option<Evidence>,
    pub notes: Vec<String>,
    pub elapsed: Duration,
}

impl VerificationReport {
    pub fn is_verified(&self) -> bool {
        self.outcome == Outcome::Verified
    }

    pub fn is_refuted(&self) -> bool {
        self.outcome == Outcome::Refuted
    }

    /// Re-runs the VC computation on the counterexample and compares it
    /// with the recorded value.
    pub fn counterexample_revalidates(&self) -> bool {
        self.counterexample.as_ref().is_some_and(|e| {
            crate::shatter::vc_dimension(&e.set, Some(crate::shatter::MAX_SHATTER_SIZE)).dimension == e.vc.dimension
                && e.vc.validate(&e.set)
        })
    }
}

#[derive(Serialize)]
struct EvidenceRecord<'a> {
    #[serde(skip_serializing_if = "Option::is_none")]
    construction: Option<&'a str>,
    size: usize,
    points: Vec<Point>,
    vc: &'a VcResult,
}

impl<'a> From<&'a Evidence> for EvidenceRecord<'a> {
    fn from(e: &'a Evidence) -> Self {
        Self {
            construction: e.construction.as_deref(),
            size: e.set.len(),
            points: e.set.to_vec(),
            vc: &e.vc,
        }
    }
}

#[derive(Serialize)]
struct ReportRecord<'a> {
    claim: &'a ClaimSpec,
    mode: &'static str,
    #[serde(skip_serializing_if = "Option::is_none")]
    samples: Option<u64>,
    seed: Option<u64>,
    outcome: &'static str,
    #[serde(skip_serializing_if = "Option::is_none")]
    reason: Option<&'a str>,
    work: u64,
    counterexample: Option<Vec<Point>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    counterexample_vc: Option<&'a VcResult>,
    #[serde(skip_serializing_if = "Option::is_none")]
    certificate: Option<EvidenceRecord<'a>>,
    notes: &'a [String],
    elapsed_ms: u64,
}

impl Serialize for VerificationReport {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        ReportRecord {
            claim: &self.claim,
            mode: self.mode.name(),
            samples: match self.mode {
                Mode::Sampled { samples, .. } => Some(samples),
                _ => None,
            },
            seed: self.mode.seed(),
            outcome: self.outcome.name(),
            reason: match &self.outcome {
                Outcome::Infeasible { reason } => Some(reason),
                _ => None,
            },
            work: self.work,
            counterexample: self.counterexample.as_ref().map(|e| e.set.to_vec()),
            counterexample_vc: self.counterexample.as_ref().map(|e| &e.vc),
            certificate: self.certificate.as_ref().map(EvidenceRecord::from),
            notes: &self.notes,
            elapsed_ms: self.elapsed.as_millis() as u64,
        }
        .serialize(serializer)
    }
}

/// One summary line plus indented details; timing is left out so the text
/// is stable for fixed inputs and seeds.
impl fmt::Display for VerificationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mode = match self.mode {
            Mode::Sampled { samples, seed } => format!("sampled n={samples} seed={seed}"),
            other => other.name().to_string(),
        };
        write!(f, "[{}] {} ({mode}, work {})", self.outcome.name(), self.claim, self.work)?;
        if let Outcome::Infeasible { reason } = &self.outcome {
            write!(f, "\n  reason: {reason}")?;
        }
        if let Some(c) = &self.certificate {
            let name = c.construction.as_deref().unwrap_or("set");
            write!(f, "\n  {name}: size {}, vc = {}", c.set.len(), c.vc.dimension)?;
        }
        if let Some(c) = &self.counterexample {
            let points: Vec<String> = c.set.points().map(|p| p.to_string()).collect();
            write!(f, "\n  counterexample (vc = {}): {}", c.vc.dimension, points.join(" "))?;
        }
        for note in &self.notes {
            write!(f, "\n  note: {note}")?;
        }
        Ok(())
    }
}
