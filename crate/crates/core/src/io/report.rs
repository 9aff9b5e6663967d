use std::fmt::Write;
use std::time::Duration;

use serde::Serialize;

use crate::checker::{CheckOutcome, CornerStatus, FailureReason, Verdict};
use crate::complex::{CellId, FaceCounts};

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ReportWitness {
    pub corner: CellId,
    pub reason: FailureReason,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ReportCounts {
    #[serde(flatten)]
    pub faces: Option<FaceCounts>,
    pub corners_checked: usize,
}

/// Machine-readable result of a check, versioned by `schema`.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Report {
    pub schema: u32,
    pub tool: &'static str,
    pub version: &'static str,
    pub verdict: &'static str,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub reason: Option<FailureReason>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<ReportWitness>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub message: Option<String>,
    pub counts: ReportCounts,
    pub elapsed_ms: f64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub failing_corners: Option<Vec<(usize, CornerStatus)>>,
}

impl Report {
    pub fn new(outcome: &CheckOutcome, elapsed: Duration) -> Self {
        let (verdict, reason, witness, message) = match &outcome.verdict {
            Verdict::Convex => ("convex", None, None, None),
            Verdict::NotConvex { witness, reason } => (
                "not_convex",
                Some(*reason),
                witness.map(|c| ReportWitness { corner: CellId::corner(c), reason: *reason }),
                None,
            ),
            Verdict::InvalidInput(m) => ("invalid_input", None, None, Some(m.clone())),
        };
        Report {
            schema: 1,
            tool: env!("CARGO_PKG_NAME"),
            version: env!("CARGO_PKG_VERSION"),
            verdict,
            reason,
            witness,
            message,
            counts: ReportCounts { faces: outcome.counts.clone(), corners_checked: outcome.corners_checked },
            elapsed_ms: elapsed.as_secs_f64() * 1000.0,
            failing_corners: None,
        }
    }

    pub fn with_failures(mut self, failures: Vec<(usize, CornerStatus)>) -> Self {
        self.failing_corners = Some(failures);
        self
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        writeln!(out, "verdict: {}", self.verdict).unwrap();
        if let Some(w) = &self.witness {
            writeln!(out, "witness: {} ({:?})", w.corner, w.reason).unwrap();
        } else if let Some(r) = &self.reason {
            writeln!(out, "reason: {r:?}").unwrap();
        }
        if let Some(m) = &self.message {
            writeln!(out, "message: {m}").unwrap();
        }
        if let Some(f) = &self.counts.faces {
            writeln!(
                out,
                "faces: dim {} corners {} ridges {} facets {}",
                f.dim, f.corners, f.ridges, f.facets
            )
            .unwrap();
            writeln!(out, "corner-ridge incidences: {}", f.corner_ridge).unwrap();
        }
        writeln!(out, "corners checked: {}", self.counts.corners_checked).unwrap();
        if let Some(fails) = &self.failing_corners {
            writeln!(out, "failing corners: {}", fails.len()).unwrap();
            for (c, s) in fails {
                writeln!(out, "  corner {c}: {s:?}").unwrap();
            }
        }
        writeln!(out, "elapsed: {:.3} ms", self.elapsed_ms).unwrap();
        out
    }
}

/// 0 convex, 1 not convex, 2 invalid input.
pub fn exit_code(verdict: &Verdict) -> i32 {
    match verdict {
        Verdict::Convex => 0,
        Verdict::NotConvex { .. } => 1,
        Verdict::InvalidInput(_) => 2,
    }
}
