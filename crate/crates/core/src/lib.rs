//! Lie-Yamaguti algebras over exact fields.
//!
//! An algebra is given by structure constants of its binary bracket `[·,·]`
//! and ternary bracket `{·,·,·}`. On top of that this crate provides
//!
//! * exhaustive axiom and representation checkers with witnesses,
//! * the `(2n, 2n+1)` cochain complex, its coboundary and cohomology,
//! * finite group actions, fixed-point subalgebras and equivariant cohomology,
//! * truncated one-parameter formal deformations: verification, gauge
//!   equivalence, first-order comparison and order-by-order trivialisation.
//!
//! All arithmetic is exact (see [`lyalg_linalg`]).

pub mod algebra;
pub mod coboundary;
pub mod cochain;
pub mod cohomology;
pub mod deformation;
pub mod equivariant;
pub mod fixtures;
pub mod multilinear;
pub mod representation;

pub use lyalg_linalg as linalg;
pub use lyalg_linalg::{Field, Matrix, Scalar, Subspace};

pub use algebra::{check_lya, check_morphism, leibniz_to_lya, LeibnizAlgebra, LyAlgebra};
pub use coboundary::{delta1, delta23, delta_general, CoboundaryOperator, Delta23Residual};
pub use cochain::{Cochain, CochainPair, CochainSpace};
pub use cohomology::{cohomology, same_class, CohomologyResult};
pub use equivariant::{
    check_action, check_equivariant_compat, check_group, equivariant_cohomology,
    equivariant_subspace, fixed_subalgebra, EquivariantCochainSpace, EquivariantModuleAction,
    FiniteGroup, FixedSubalgebra, GroupAction,
};
pub use representation::{adjoint_rep, check_representation, Representation};

use std::fmt;

use thiserror::Error;

/// A failed identity: which rule, on which basis tuple, and the nonzero
/// left-minus-right residual. Matrix-valued residuals are flattened
/// row-major.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Violation {
    pub rule: String,
    pub witness: Vec<String>,
    pub residual: Vec<Scalar>,
}

impl Violation {
    pub fn new(rule: impl Into<String>, witness: Vec<String>, residual: Vec<Scalar>) -> Self {
        Violation { rule: rule.into(), witness, residual }
    }
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} violated at ({}), residual {}",
            self.rule,
            self.witness.join(", "),
            linalg::format_vector(&self.residual)
        )
    }
}

/// Outcome of an exhaustive check.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Verdict {
    Pass,
    Fail(Violation),
}

impl Verdict {
    pub fn is_pass(&self) -> bool {
        matches!(self, Verdict::Pass)
    }

    pub fn violation(&self) -> Option<&Violation> {
        match self {
            Verdict::Pass => None,
            Verdict::Fail(v) => Some(v),
        }
    }

    pub(crate) fn from_first(v: Option<Violation>) -> Self {
        v.map_or(Verdict::Pass, Verdict::Fail)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LyaError {
    #[error(transparent)]
    Linalg(#[from] linalg::LinalgError),
    #[error("malformed input: {0}")]
    Malformed(String),
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("{0} must be verified first")]
    Unverified(&'static str),
    #[error("unsupported configuration: {0}")]
    Unsupported(String),
    #[error("{0}")]
    Violation(Violation),
    #[error("representation incompatible with the cochain condition at ({}): residual {}", .witness.join(", "), linalg::format_vector(.residual))]
    IncompatibleRepresentation { witness: Vec<String>, residual: Vec<Scalar> },
    #[error("coboundaries not contained in cocycles; witness {}", linalg::format_vector(.witness))]
    ComplexBroken { witness: Vec<Scalar> },
    #[error("input is not a cocycle; residual {}", linalg::format_vector(.residual))]
    NotCocycle { residual: Vec<Scalar> },
    #[error("equivariant closure fails: {0}")]
    ClosureViolation(String),
}

pub type Result<T, E = LyaError> = std::result::Result<T, E>;
