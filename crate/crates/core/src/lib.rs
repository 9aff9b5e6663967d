//! Exact local convexity checking for piecewise-linear hypersurfaces.
//!
//! A closed, connected PL `(n-1)`-manifold immersed in `R^n` (`n >= 3`) bounds
//! a convex body iff the star of every codimension-3 face is convex. The
//! crate checks that condition one corner at a time with exact rational
//! arithmetic.
//!
//! ```
//! use plconvex::{check_traditional, oracle::cube, CheckOptions, Verdict};
//!
//! let verdict = check_traditional(&cube(), &CheckOptions::default());
//! assert_eq!(verdict.verdict, Verdict::Convex);
//! ```

pub mod checker;
pub mod complex;
pub mod exact;
pub mod io;
pub mod local;
pub mod normals;
pub mod oracle;

pub use checker::{
    check_convexity, check_traditional, corner_report, precheck_edge_count, CheckOptions,
    CheckOutcome, CornerStatus, FailureReason, Verdict,
};
pub use complex::{
    face_counts, validate_standard, wheel_star, CellId, CellKind, ComplexError, FaceCounts,
    NormalRecord, PreparedComplex, StandardComplex, WheelStar,
};
pub use exact::{KernelError, PlaneFrame, Point3, Scalar, Sign, Vector};
pub use local::{
    check_cone_convex, is_folded, predicate_p, reduce_to_3d, ConeRealization3D, LocalError,
    LocalVerdict,
};
pub use normals::{to_standard, DerivationError, TraditionalComplex};
