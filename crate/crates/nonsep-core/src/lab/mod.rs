//! Executable checks for the covering bounds that hold for non-separable
//! and impassable families, plus the extremal-system solver and a
//! stochastic search for large covering ratios.

use alloc::string::String;

use thiserror::Error;

mod extremal;
mod lemmas;
mod search;
mod theorems;

pub use extremal::{
    extremal_residual, solve_extremal_system, symmetric_roots, ExtremalSolution,
    ExtremalVariables,
};
pub use lemmas::{sandwich, verify_width_lemma, SandwichResult, WidthReport};
pub use search::{search_sup_lambda, SearchOutcome};
pub use theorems::{
    check_summand, cover_with_ratio_d, scene_lambda, verify_kip_theorem, verify_strictly_convex,
    KipReport, StrictReport,
};

#[derive(Debug, Clone, PartialEq, Error)]
pub enum LabError {
    #[error("scene is separable, contradicting the non-separability precondition: {0}")]
    NSViolated(String),
    #[error("verification failed: {0}")]
    VerificationFailed(String),
    #[error("construction step failed: {0}")]
    StepFailed(&'static str),
    #[error("theorem check violated: {0}")]
    TheoremViolated(String),
    #[error("precondition not met: {0}")]
    PreconditionFailed(String),
}
