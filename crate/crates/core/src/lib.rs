//! Exact computations for the quantum supergroup U_q(gl(m|n)), its
//! coordinate superalgebra and the quantum superspace it acts on.
//!
//! Coefficients live in Q(q) ([`coeff::RatFunc`]); every identity is checked
//! symbolically, with specialization at a rational point only for
//! positivity questions.

pub mod coeff;
pub mod expr;
pub mod graded;
pub mod induction;
pub mod coords;
pub mod linalg;
pub mod report;
pub mod reps;
pub mod rmatrix;
pub mod sparse;
pub mod suites;
pub mod superspace;
pub mod uq;
