//! P1 finite element infrastructure on a partition of [0,1]: mass/stiffness
//! assembly, L² and Ritz projections, the discrete operator `A_h` through its
//! generalized eigenproblem, trace diagnostics and the semi-implicit solve.

mod mesh;
mod operator;
mod tridiag;

pub use mesh::Mesh;
pub use operator::{FemOperator, GeneralizedEigen, NodalField};
pub use tridiag::{BidiagonalCholesky, TridiagonalMatrix};

use thiserror::Error;

#[derive(Clone, Debug, Error, PartialEq)]
pub enum FemError {
    #[error("partition nodes are not strictly increasing inside (0,1): {0}")]
    NonMonotonePartition(String),
    #[error("partition has no interior node")]
    EmptyPartition,
    #[error("Cholesky factorization failed at row {row}: matrix not positive definite")]
    CholeskyFailure { row: usize },
    #[error("generalized eigensolve did not converge: {0}")]
    ConvergenceFailure(String),
    #[error("tridiagonal solver pivot underflow at row {row}")]
    SolverBreakdown { row: usize },
}
