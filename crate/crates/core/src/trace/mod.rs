//! The Dennis trace `K_0 -> HH_0` for rational group algebras, its
//! compatibility with the Burnside ring action, and the degree-zero Chern
//! character of a finite group.

mod chern;
mod dennis;
mod projective;

pub use chern::{chern_finite_check, ChernReport, ChernRow};
pub use dennis::{
    character_crosscheck, dennis_trace_matrix, hh0_burnside_action, image_containment, theta_trace_check,
    ContainmentReport, CrosscheckReport, CrosscheckRow, ThetaTraceReport, TraceMatrix,
};
pub use projective::{hs_trace, induced_projectives, ProjectiveIdem};
