//! Exact verification kit for relativistic wave equations.
//!
//! The crate mechanizes a family of by-hand derivations for spin 0, 1 and 2
//! fields: matrix representations of the (1/2,1/2) wave operator and its
//! mass spectrum, Dirac-algebra objects of the multispinor expansions,
//! polarization bases, the spin-1 and spin-2 constraint systems, and the
//! field-operator and propagator identities. Everything runs over exact
//! complex rationals unless a result inherently contains radicals, in which
//! case a float path (default tolerance 1e-12 relative) is used and flagged.

pub mod scalar;
pub mod matrix;
pub mod poly;
pub mod momentum;
pub mod spinor;
pub mod vector_rep;
pub mod polarization;
pub mod bw_spin1;
pub mod spin2;
pub mod quanta;
pub mod report;
pub mod checks;
pub mod scenario;

use thiserror::Error as ThisError;

#[derive(Debug, ThisError)]
pub enum Error {
    #[error("shape error: {0}")]
    Shape(String),
    #[error("domain error: {0}")]
    Domain(String),
    #[error("degenerate input: {0}")]
    Degenerate(String),
    #[error("representation construction error: {0}")]
    Representation(String),
    #[error("internal invariant violated: {0}")]
    Internal(String),
}
