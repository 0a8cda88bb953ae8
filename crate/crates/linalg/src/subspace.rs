use crate::{check_field, is_zero_vector, Field, LinalgError, Matrix, Scalar};

/// A linear subspace of `field^ambient`, stored as the nonzero rows of its
/// reduced row echelon basis. Two equal subspaces compare equal.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Subspace {
    ambient: usize,
    basis: Matrix,
    pivots: Vec<usize>,
}

/// Result of `big / small`: the quotient dimension and canonical coset
/// representatives completing `small` inside `big`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Quotient {
    pub dim: usize,
    pub representatives: Vec<Vec<Scalar>>,
}

impl Subspace {
    pub fn zero(field: Field, ambient: usize) -> Self {
        Subspace { ambient, basis: Matrix::zeros(field, 0, ambient), pivots: Vec::new() }
    }

    pub fn full(field: Field, ambient: usize) -> Self {
        Self::from_echelon(Matrix::identity(field, ambient).rref(), ambient)
    }

    /// Span of arbitrary vectors.
    pub fn span(field: Field, ambient: usize, vectors: Vec<Vec<Scalar>>) -> Result<Self, LinalgError> {
        let m = Matrix::from_rows(field, ambient, vectors)?;
        Ok(Self::from_echelon(m.rref(), ambient))
    }

    /// Row space of a matrix.
    pub fn row_space(m: &Matrix) -> Self {
        Self::from_echelon(m.rref(), m.cols())
    }

    fn from_echelon(rref: crate::Rref, ambient: usize) -> Self {
        let rank = rref.rank();
        let field = rref.matrix.field();
        let rows = (0..rank).map(|i| rref.matrix.row(i).to_vec()).collect();
        let basis = Matrix::from_rows(field, ambient, rows).expect("echelon rows");
        Subspace { ambient, basis, pivots: rref.pivots }
    }

    pub fn field(&self) -> Field {
        self.basis.field()
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.pivots.len()
    }

    /// Basis rows in RREF.
    pub fn basis(&self) -> &Matrix {
        &self.basis
    }

    pub fn basis_vectors(&self) -> Vec<Vec<Scalar>> {
        self.basis.row_vecs()
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    fn check_vector(&self, v: &[Scalar]) -> Result<(), LinalgError> {
        if v.len() != self.ambient {
            return Err(LinalgError::DimensionMismatch(format!(
                "vector of length {} in ambient dimension {}",
                v.len(),
                self.ambient
            )));
        }
        check_field(self.field(), v)
    }

    /// `v` minus its component along the pivot coordinates. The residue is
    /// zero exactly when `v` lies in the subspace, and depends only on the
    /// coset `v + self`.
    pub fn reduce(&self, v: &[Scalar]) -> Result<Vec<Scalar>, LinalgError> {
        self.check_vector(v)?;
        let mut out = v.to_vec();
        for (i, &p) in self.pivots.iter().enumerate() {
            if out[p].is_zero() {
                continue;
            }
            let c = -&out[p];
            crate::axpy(&mut out, &c, self.basis.row(i));
        }
        Ok(out)
    }

    pub fn contains(&self, v: &[Scalar]) -> Result<bool, LinalgError> {
        Ok(is_zero_vector(&self.reduce(v)?))
    }

    /// Coordinates of `v` in the RREF basis, `None` if `v` is outside.
    pub fn coordinates(&self, v: &[Scalar]) -> Result<Option<Vec<Scalar>>, LinalgError> {
        if !self.contains(v)? {
            return Ok(None);
        }
        Ok(Some(self.pivots.iter().map(|&p| v[p].clone()).collect()))
    }

    /// Linear combination of the basis rows.
    pub fn combine(&self, coords: &[Scalar]) -> Vec<Scalar> {
        let mut out = vec![self.field().zero(); self.ambient];
        for (i, c) in coords.iter().enumerate() {
            crate::axpy(&mut out, c, self.basis.row(i));
        }
        out
    }

    /// Checks `self ⊆ other`, returning the first basis vector of `self`
    /// outside `other` as a witness.
    pub fn is_subspace_of(&self, other: &Subspace) -> Result<(), LinalgError> {
        for i in 0..self.dim() {
            let v = self.basis.row(i);
            if !other.contains(v)? {
                return Err(LinalgError::NotContained { witness: v.to_vec() });
            }
        }
        Ok(())
    }

    pub fn sum(&self, other: &Subspace) -> Result<Subspace, LinalgError> {
        let stacked = self.basis.vstack(&other.basis)?;
        Ok(Subspace::row_space(&stacked))
    }

    /// Vectors `y` with `b · y = 0` for every basis vector `b`.
    pub fn annihilator(&self) -> Subspace {
        self.basis.nullspace()
    }

    pub fn intersection(&self, other: &Subspace) -> Result<Subspace, LinalgError> {
        if self.ambient != other.ambient {
            return Err(LinalgError::DimensionMismatch(format!(
                "intersection of subspaces in dimensions {} and {}",
                self.ambient, other.ambient
            )));
        }
        // x ∈ A ∩ B  iff  x is killed by both annihilators.
        let eqs = self.annihilator().basis.vstack(other.annihilator().basis())?;
        Ok(eqs.nullspace())
    }

    /// Image of the subspace under `m` (vectors as columns: `m * v`).
    pub fn map(&self, m: &Matrix) -> Result<Subspace, LinalgError> {
        let images = self
            .basis_vectors()
            .iter()
            .map(|v| m.mul_vec(v))
            .collect::<Result<Vec<_>, _>>()?;
        Subspace::span(self.field(), m.rows(), images)
    }

    /// Projection onto the coordinate range `range`.
    pub fn project(&self, range: std::ops::Range<usize>) -> Subspace {
        let width = range.len();
        let rows = self.basis_vectors().into_iter().map(|v| v[range.clone()].to_vec()).collect();
        Subspace::span(self.field(), width, rows).expect("projected rows")
    }

    /// Vectors of the subspace supported inside `range`, restricted to it.
    pub fn slice_within(&self, range: std::ops::Range<usize>) -> Subspace {
        let mut eqs = Vec::new();
        for j in (0..self.ambient).filter(|j| !range.contains(j)) {
            let mut e = vec![self.field().zero(); self.ambient];
            e[j] = self.field().one();
            eqs.push(e);
        }
        let cut = Subspace::span(self.field(), self.ambient, eqs)
            .expect("coordinate vectors")
            .annihilator();
        let inter = self.intersection(&cut).expect("same ambient");
        inter.project(range)
    }

    /// `big / small`, with `small ⊆ big` verified first.
    pub fn quotient(big: &Subspace, small: &Subspace) -> Result<Quotient, LinalgError> {
        small.is_subspace_of(big)?;
        let residues = big
            .basis_vectors()
            .iter()
            .map(|v| small.reduce(v))
            .collect::<Result<Vec<_>, _>>()?;
        let reps = Subspace::span(big.field(), big.ambient, residues)?;
        debug_assert_eq!(reps.dim() + small.dim(), big.dim());
        Ok(Quotient { dim: big.dim() - small.dim(), representatives: reps.basis_vectors() })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    const Q: Field = Field::Rational;

    fn v(xs: &[i64]) -> Vec<Scalar> {
        xs.iter().map(|&x| Q.from_i64(x)).collect()
    }

    #[test]
    fn quotient_examples() {
        let full = Subspace::full(Q, 2);
        let q = Subspace::quotient(&full, &full).unwrap();
        assert_eq!((q.dim, q.representatives.len()), (0, 0));

        let q = Subspace::quotient(&full, &Subspace::zero(Q, 2)).unwrap();
        assert_eq!(q.dim, 2);

        let line = Subspace::span(Q, 2, vec![v(&[1, 1])]).unwrap();
        let q = Subspace::quotient(&full, &line).unwrap();
        assert_eq!(q.dim, 1);
        assert_eq!(q.representatives, vec![v(&[0, 1])]);
    }

    #[test]
    fn quotient_requires_containment() {
        let a = Subspace::span(Q, 2, vec![v(&[1, 0])]).unwrap();
        let b = Subspace::span(Q, 2, vec![v(&[0, 1])]).unwrap();
        match Subspace::quotient(&a, &b) {
            Err(LinalgError::NotContained { witness }) => assert_eq!(witness, v(&[0, 1])),
            other => panic!("expected containment failure, got {other:?}"),
        }
    }

    #[test]
    fn intersection_of_planes() {
        let a = Subspace::span(Q, 3, vec![v(&[1, 0, 0]), v(&[0, 1, 0])]).unwrap();
        let b = Subspace::span(Q, 3, vec![v(&[0, 1, 0]), v(&[0, 0, 1])]).unwrap();
        let c = a.intersection(&b).unwrap();
        assert_eq!(c, Subspace::span(Q, 3, vec![v(&[0, 1, 0])]).unwrap());
        assert_eq!(a.sum(&b).unwrap(), Subspace::full(Q, 3));
    }

    #[test]
    fn projection_and_slice() {
        let s = Subspace::span(Q, 3, vec![v(&[1, 1, 0]), v(&[0, 0, 1])]).unwrap();
        assert_eq!(s.project(0..2).dim(), 1);
        assert_eq!(s.slice_within(2..3).dim(), 1);
        assert_eq!(s.slice_within(0..1).dim(), 0);
    }

    #[test]
    fn coordinates_roundtrip() {
        let s = Subspace::span(Q, 3, vec![v(&[1, 2, 3]), v(&[0, 1, 1])]).unwrap();
        let x = v(&[2, 5, 7]);
        let c = s.coordinates(&x).unwrap().unwrap();
        assert_eq!(s.combine(&c), x);
        assert!(s.coordinates(&v(&[0, 0, 1])).unwrap().is_none());
    }
}
