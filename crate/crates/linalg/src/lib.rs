//! Exact linear algebra over `Q` and prime fields.
//!
//! Everything downstream (cocycle spaces, coboundary images, fixed points,
//! equivariant subspaces) is reduced to the handful of operations here:
//! reduced row echelon form, kernels, particular solutions and subspace
//! arithmetic. Rational elimination is fraction-free; see [`Matrix::rref`].

mod matrix;
mod scalar;
mod subspace;

pub use matrix::{Matrix, Rref};
pub use scalar::{Field, Scalar};
pub use subspace::{Quotient, Subspace};

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LinalgError {
    #[error("field mismatch: expected {expected}, found {found}")]
    FieldMismatch { expected: Field, found: Field },
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("subspace not contained in ambient space; witness {}", format_vector(.witness))]
    NotContained { witness: Vec<Scalar> },
    #[error("invalid prime modulus {0} (need a prime p > 3)")]
    InvalidModulus(u64),
    #[error("parse error: {0}")]
    Parse(String),
}

/// Formats a vector as `(a, b, c)`.
pub fn format_vector(v: &[Scalar]) -> String {
    let parts: Vec<String> = v.iter().map(ToString::to_string).collect();
    format!("({})", parts.join(", "))
}

/// Checks that every scalar lives in `field`.
pub fn check_field<'a>(
    field: Field,
    items: impl IntoIterator<Item = &'a Scalar>,
) -> Result<(), LinalgError> {
    for s in items {
        if s.field() != field {
            return Err(LinalgError::FieldMismatch { expected: field, found: s.field() });
        }
    }
    Ok(())
}

/// Dot product of two equally long vectors.
pub fn dot(field: Field, a: &[Scalar], b: &[Scalar]) -> Scalar {
    let mut acc = field.zero();
    for (x, y) in a.iter().zip(b) {
        acc.add_mul(x, y);
    }
    acc
}

/// `a + c * b`, componentwise.
pub fn axpy(a: &mut [Scalar], c: &Scalar, b: &[Scalar]) {
    if c.is_zero() {
        return;
    }
    for (x, y) in a.iter_mut().zip(b) {
        x.add_mul(c, y);
    }
}

pub fn is_zero_vector(v: &[Scalar]) -> bool {
    v.iter().all(Scalar::is_zero)
}
