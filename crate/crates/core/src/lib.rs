//! Single-qubit projective measurement, Schmidt analysis and link cut-profile
//! classification for small pure qubit registers.
//!
//! The pipeline is: build a [`PureState`], measure every qubit in the
//! computational basis ([`build_profile`]), compute the Schmidt rank of each
//! post-measurement register, then compare the resulting splitting pattern
//! with the cut behaviour of three-component links ([`classify`]).
//!
//! ```
//! use entsplit::{build_profile, classify, CanonicalState, LinkKind};
//!
//! let star = CanonicalState::Star.construct();
//! let profile = build_profile(&star, "star").unwrap();
//! let verdict = classify(&profile).unwrap();
//! assert_eq!(verdict.primary_analogue, LinkKind::Chain3.into());
//! assert_eq!(verdict.center, Some(2));
//! ```

pub mod classify;
mod eigen;
pub mod error;
pub mod io;
pub mod links;
pub mod measure;
pub mod profile;
pub mod schmidt;
pub mod state;

pub use classify::{
    classify, consistency_check, Analogue, ClassificationResult, ConsistencyReport, CutMismatch, CutSemantics,
};
pub use error::{Error, Result};
pub use io::{parse_report, parse_state, read_state_file, render_report, ReportDocument, ReportFormat};
pub use links::{cut, standard_models, LinkKind, LinkModel};
pub use measure::{measure_computational, project_arbitrary, MeasurementRecord, SingleQubitBasis, PROB_TOL};
pub use profile::{build_profile, SplittingEntry, SplittingProfile};
pub use schmidt::{
    coefficient_matrix, schmidt_decompose, schmidt_rank, Bipartition, CoefficientMatrix, SchmidtResult, RANK_TOL,
};
pub use state::{
    fidelity, parse_qubit_label, qubit_label, random_unitary, Amplitude, CanonicalState, PureState, MAX_QUBITS,
    NORM_TOL,
};

/// Version string embedded in reports.
pub const TOOL_VERSION: &str = env!("CARGO_PKG_VERSION");
