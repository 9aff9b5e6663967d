//! Global convexity check: run the local test at every corner.

use rayon::prelude::*;
use serde::Serialize;

use crate::complex::{validate_standard, FaceCounts, PreparedComplex, StandardComplex};
use crate::local::{check_cone_convex, reduce_to_3d, LocalError, LocalVerdict};
use crate::normals::{to_standard, TraditionalComplex};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum FailureReason {
    Inconsistent,
    NonConvexCone,
    EdgeCountExceeded,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Verdict {
    Convex,
    /// `witness` is a failing corner; it is `None` only for global reasons.
    NotConvex { witness: Option<usize>, reason: FailureReason },
    InvalidInput(String),
}

impl Verdict {
    pub fn is_convex(&self) -> bool {
        matches!(self, Verdict::Convex)
    }

    pub fn witness(&self) -> Option<usize> {
        match self {
            Verdict::NotConvex { witness, .. } => *witness,
            _ => None,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CheckOptions {
    pub parallel: bool,
    /// Walk every rim in the opposite direction.
    pub reverse_rims: bool,
}

impl Default for CheckOptions {
    fn default() -> Self {
        CheckOptions { parallel: true, reverse_rims: false }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CheckOutcome {
    pub verdict: Verdict,
    pub corners_checked: usize,
    pub counts: Option<FaceCounts>,
}

/// Local result at one corner.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum CornerStatus {
    FlatPass,
    ConvexCone,
    Inconsistent,
    NonConvexCone,
}

impl CornerStatus {
    pub fn passes(self) -> bool {
        matches!(self, CornerStatus::FlatPass | CornerStatus::ConvexCone)
    }

    pub fn failure(self) -> Option<FailureReason> {
        match self {
            CornerStatus::Inconsistent => Some(FailureReason::Inconsistent),
            CornerStatus::NonConvexCone => Some(FailureReason::NonConvexCone),
            _ => None,
        }
    }
}

fn check_corner(prepared: &PreparedComplex, corner: usize, options: &CheckOptions) -> CornerStatus {
    let mut star = prepared.wheel_star(corner);
    if options.reverse_rims {
        star = star.reversed();
    }
    match reduce_to_3d(&star) {
        LocalVerdict::Inconsistent => CornerStatus::Inconsistent,
        LocalVerdict::FlatPass => CornerStatus::FlatPass,
        LocalVerdict::Cone(cone) => match check_cone_convex(&cone) {
            Ok(true) => CornerStatus::ConvexCone,
            Ok(false) | Err(LocalError::DegenerateCone) => CornerStatus::NonConvexCone,
            Err(_) => CornerStatus::Inconsistent,
        },
    }
}

/// Checks a validated complex, stopping at the lowest-indexed failing corner.
pub fn check_prepared(prepared: &PreparedComplex, options: &CheckOptions) -> CheckOutcome {
    let n = prepared.num_corners();
    let fail = |c: usize| check_corner(prepared, c, options).failure().map(|r| (c, r));
    let first = if options.parallel {
        (0..n).into_par_iter().find_map_first(fail)
    } else {
        (0..n).find_map(fail)
    };
    let counts = Some(prepared.face_counts());
    match first {
        None => CheckOutcome { verdict: Verdict::Convex, corners_checked: n, counts },
        Some((corner, reason)) => CheckOutcome {
            verdict: Verdict::NotConvex { witness: Some(corner), reason },
            corners_checked: corner + 1,
            counts,
        },
    }
}

/// Validates and checks a standard-form complex.
pub fn check_convexity(complex: StandardComplex, options: &CheckOptions) -> CheckOutcome {
    match validate_standard(complex) {
        Ok(prepared) => check_prepared(&prepared, options),
        Err(e) => invalid(e.to_string()),
    }
}

fn invalid(reason: String) -> CheckOutcome {
    CheckOutcome { verdict: Verdict::InvalidInput(reason), corners_checked: 0, counts: None }
}

/// Status of every corner, in corner order.
pub fn corner_report(prepared: &PreparedComplex, options: &CheckOptions) -> Vec<(usize, CornerStatus)> {
    let n = prepared.num_corners();
    if options.parallel {
        (0..n).into_par_iter().map(|c| (c, check_corner(prepared, c, options))).collect()
    } else {
        (0..n).map(|c| (c, check_corner(prepared, c, options))).collect()
    }
}

/// Edge-count bound for surfaces in `R^3`: a sphere has `f_1 <= 3 f_0 - 6`.
pub fn precheck_edge_count(t: &TraditionalComplex) -> Result<(), Verdict> {
    let f0 = t.vertices.len();
    if t.dim != 3 || f0 < 4 {
        return Ok(());
    }
    if t.num_ridges() > 3 * f0 - 6 {
        return Err(Verdict::NotConvex { witness: None, reason: FailureReason::EdgeCountExceeded });
    }
    Ok(())
}

/// Converts a traditional-form complex and prepares it for checking.
pub fn prepare_traditional(t: &TraditionalComplex) -> Result<PreparedComplex, String> {
    let standard = to_standard(t).map_err(|e| e.to_string())?;
    validate_standard(standard).map_err(|e| e.to_string())
}

/// Edge-count precheck, conversion to standard form, then the corner test.
pub fn check_traditional(t: &TraditionalComplex, options: &CheckOptions) -> CheckOutcome {
    if let Err(verdict) = precheck_edge_count(t) {
        return CheckOutcome { verdict, corners_checked: 0, counts: None };
    }
    match prepare_traditional(t) {
        Ok(prepared) => check_prepared(&prepared, options),
        Err(e) => invalid(e),
    }
}
