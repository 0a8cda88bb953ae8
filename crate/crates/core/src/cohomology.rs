//! Cocycles, coboundaries and cohomology of the pair complex.
//!
//! Level `n` works in `C^{2n} × C^{2n+1}` with stacked coordinates (even
//! block first). Level 1 is the adjoint `(2,3)` case: cocycles are the kernel
//! of [`delta23`](crate::coboundary::delta23) and coboundaries the image of
//! [`delta1`](crate::coboundary::delta1). From level 2 on both come from the
//! general coboundary.

use lyalg_linalg::{Matrix, Scalar, Subspace};

use crate::algebra::LyAlgebra;
use crate::coboundary::{delta1_matrix, delta23_matrix, CoboundaryOperator};
use crate::cochain::{pair_spaces, CochainPair, CochainSpace};
use crate::representation::{is_adjoint, Representation};
use crate::{LyaError, Result};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CohomologyResult {
    pub level: usize,
    pub spaces: (CochainSpace, CochainSpace),
    pub cocycles: Subspace,
    pub coboundaries: Subspace,
    /// `(even, odd)`: the even part is the projection to `C^{2n}`, the odd
    /// part the intersection with `0 × C^{2n+1}`; the two add up to the
    /// total dimension.
    pub z_dims: (usize, usize),
    pub b_dims: (usize, usize),
    pub h_dims: (usize, usize),
    /// Canonical coset representatives of a basis of `Z / B`.
    pub representatives: Vec<Vec<Scalar>>,
    /// Equations whose common kernel (intersected with the ambient
    /// subcomplex, if any) is the cocycle space.
    pub cocycle_equations: Matrix,
    /// Level 1 only: whether the kernel of the general coboundary on
    /// `C^2 × C^3` equals the `(2,3)`-cocycle space.
    pub general_kernel_agrees: Option<bool>,
}

impl CohomologyResult {
    pub fn h_total(&self) -> usize {
        self.h_dims.0 + self.h_dims.1
    }

    /// Canonical representative of the class of a cocycle: its residue
    /// modulo the coboundaries.
    pub fn class_of(&self, p: &CochainPair) -> Result<CochainPair> {
        self.require_cocycle(p)?;
        let v = self.coboundaries.reduce(&p.stacked())?;
        CochainPair::from_stacked(self.spaces.0, self.spaces.1, &v)
    }

    fn require_cocycle(&self, p: &CochainPair) -> Result<()> {
        if p.spaces() != self.spaces {
            return Err(LyaError::DimensionMismatch(format!(
                "pair of level {} compared in level-{} cohomology",
                p.level(),
                self.level
            )));
        }
        let v = p.stacked();
        let residual = self.cocycle_equations.mul_vec(&v)?;
        if residual.iter().any(|c| !c.is_zero()) {
            return Err(LyaError::NotCocycle { residual });
        }
        if !self.cocycles.contains(&v)? {
            return Err(LyaError::NotCocycle { residual: self.cocycles.reduce(&v)? });
        }
        Ok(())
    }
}

fn split(s: &Subspace, even: usize) -> (usize, usize) {
    let e = s.project(0..even).dim();
    (e, s.dim() - e)
}

fn intersect(a: Subspace, b: &Subspace) -> Result<Subspace> {
    if b.dim() == b.ambient() {
        return Ok(a);
    }
    Ok(a.intersection(b)?)
}

/// `H^{2n}(L,V) × H^{2n+1}(L,V)`. Level 1 requires the adjoint
/// representation.
pub fn cohomology(a: &LyAlgebra, r: &Representation, level: usize) -> Result<CohomologyResult> {
    a.require_verified()?;
    let (even, odd) = pair_spaces(a.field(), level, a.dim(), r.dim())?;
    let here = Subspace::full(a.field(), even.dim() + odd.dim());
    let below = if level == 1 {
        Subspace::full(a.field(), a.dim() * r.dim())
    } else {
        let (e, o) = pair_spaces(a.field(), level - 1, a.dim(), r.dim())?;
        Subspace::full(a.field(), e.dim() + o.dim())
    };
    restricted(a, r, level, &here, &below)
}

/// Cohomology of the subcomplex cut out by `here` (at `level`) and `below`
/// (one level down, or inside `C^1` for level 1).
pub(crate) fn restricted(
    a: &LyAlgebra,
    r: &Representation,
    level: usize,
    here: &Subspace,
    below: &Subspace,
) -> Result<CohomologyResult> {
    a.require_verified()?;
    let spaces = pair_spaces(a.field(), level, a.dim(), r.dim())?;
    let (cocycle_equations, cocycles, coboundaries, general_kernel_agrees) = if level == 1 {
        if !is_adjoint(a, r) {
            return Err(LyaError::Unsupported(
                "level-1 cohomology is defined for adjoint coefficients only".into(),
            ));
        }
        let eqs = delta23_matrix(a)?;
        let z = intersect(eqs.nullspace(), here)?;
        let b = below.map(&delta1_matrix(a)?)?;
        let general = CoboundaryOperator::new(a, r, 1)?;
        let agrees = intersect(general.kernel(), here)? == z;
        (eqs, z, b, Some(agrees))
    } else {
        let op = CoboundaryOperator::new(a, r, level)?;
        let eqs = if op.is_defect_free() {
            op.matrix().clone()
        } else {
            op.matrix().vstack(&op.defect_forms())?
        };
        let z = intersect(op.kernel(), here)?;
        let prev = CoboundaryOperator::new(a, r, level - 1)?;
        let domain = intersect(prev.admissible_domain(), below)?;
        let b = domain.map(prev.matrix())?;
        (eqs, z, b, None)
    };
    if let Err(e) = coboundaries.is_subspace_of(here) {
        return Err(LyaError::ClosureViolation(format!(
            "a coboundary of the subcomplex leaves it at level {level}: {e}"
        )));
    }
    if let Err(lyalg_linalg::LinalgError::NotContained { witness }) = coboundaries.is_subspace_of(&cocycles) {
        return Err(LyaError::ComplexBroken { witness });
    }
    let q = Subspace::quotient(&cocycles, &coboundaries)?;
    let even = spaces.0.dim();
    let z_dims = split(&cocycles, even);
    let b_dims = split(&coboundaries, even);
    Ok(CohomologyResult {
        level,
        spaces,
        h_dims: (z_dims.0 - b_dims.0, z_dims.1 - b_dims.1),
        z_dims,
        b_dims,
        cocycles,
        coboundaries,
        representatives: q.representatives,
        cocycle_equations,
        general_kernel_agrees,
    })
}

/// Whether two cocycles differ by a coboundary.
pub fn same_class(p1: &CochainPair, p2: &CochainPair, result: &CohomologyResult) -> Result<bool> {
    result.require_cocycle(p1)?;
    result.require_cocycle(p2)?;
    Ok(result.coboundaries.contains(&p1.sub(p2)?.stacked())?)
}
