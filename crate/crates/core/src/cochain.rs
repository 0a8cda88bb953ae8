//! Cochain spaces `C^n(L, V)`.
//!
//! An `n`-cochain is an `n`-linear map `L^{×n} → V` vanishing whenever the
//! arguments in a slot pair `(2i−1, 2i)` coincide. Such a map is alternating
//! in each pair, so it is determined by its values on tuples
//! `(a_1 < b_1, …, a_m < b_m, r)` where `m = ⌊n/2⌋` and the free slot `r`
//! exists only for odd `n`. Coordinates are ordered lexicographically in
//! `(P_1, …, P_m, r, v)`, with `v` the component in `V`.

use lyalg_linalg::{check_field, Field, LinalgError, Scalar};

use crate::multilinear::{tuples, Multilinear};
use crate::{LyaError, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct CochainSpace {
    field: Field,
    arity: usize,
    alg_dim: usize,
    dim_v: usize,
}

impl CochainSpace {
    pub fn new(field: Field, arity: usize, alg_dim: usize, dim_v: usize) -> Result<Self> {
        if arity == 0 {
            return Err(LyaError::Malformed("cochain arity must be at least 1".into()));
        }
        Ok(CochainSpace { field, arity, alg_dim, dim_v })
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    pub fn alg_dim(&self) -> usize {
        self.alg_dim
    }

    pub fn dim_v(&self) -> usize {
        self.dim_v
    }

    fn pair_slots(&self) -> usize {
        self.arity / 2
    }

    fn has_free_slot(&self) -> bool {
        self.arity % 2 == 1
    }

    fn pair_count(&self) -> usize {
        self.alg_dim * self.alg_dim.saturating_sub(1) / 2
    }

    /// Number of canonical argument tuples (coordinates divided by `dim V`).
    pub fn tuple_count(&self) -> usize {
        let free = if self.has_free_slot() { self.alg_dim } else { 1 };
        self.pair_count().pow(self.pair_slots() as u32) * free
    }

    pub fn dim(&self) -> usize {
        self.tuple_count() * self.dim_v
    }

    fn pair_index(&self, a: usize, b: usize) -> usize {
        debug_assert!(a < b);
        let d = self.alg_dim;
        a * (2 * d - a - 1) / 2 + (b - a - 1)
    }

    /// Canonical tuple index of a basis argument tuple and the sign relating
    /// them, or `None` when some slot pair is diagonal.
    pub fn locate(&self, tuple: &[usize]) -> Option<(usize, bool)> {
        debug_assert_eq!(tuple.len(), self.arity);
        let mut idx = 0usize;
        let mut positive = true;
        for k in 0..self.pair_slots() {
            let (a, b) = (tuple[2 * k], tuple[2 * k + 1]);
            let p = match a.cmp(&b) {
                std::cmp::Ordering::Equal => return None,
                std::cmp::Ordering::Less => self.pair_index(a, b),
                std::cmp::Ordering::Greater => {
                    positive = !positive;
                    self.pair_index(b, a)
                }
            };
            idx = idx * self.pair_count() + p;
        }
        if self.has_free_slot() {
            idx = idx * self.alg_dim + tuple[self.arity - 1];
        }
        Some((idx, positive))
    }

    /// Coordinate of component `v` at a canonical tuple index.
    pub fn coordinate(&self, tuple_index: usize, v: usize) -> usize {
        tuple_index * self.dim_v + v
    }

    /// Canonical argument tuples in coordinate order.
    pub fn canonical_tuples(&self) -> Vec<Vec<usize>> {
        let d = self.alg_dim;
        let pairs: Vec<(usize, usize)> =
            (0..d).flat_map(|a| (a + 1..d).map(move |b| (a, b))).collect();
        let mut out = Vec::with_capacity(self.tuple_count());
        let slots = self.pair_slots();
        let pair_choices = tuples(pairs.len(), slots);
        for choice in pair_choices {
            let mut base = Vec::with_capacity(self.arity);
            for &p in &choice {
                base.push(pairs[p].0);
                base.push(pairs[p].1);
            }
            if self.has_free_slot() {
                for r in 0..d {
                    let mut t = base.clone();
                    t.push(r);
                    out.push(t);
                }
            } else {
                out.push(base);
            }
        }
        out
    }

    /// Basis labels `(tuple, v)` in coordinate order.
    pub fn basis(&self) -> Vec<(Vec<usize>, usize)> {
        self.canonical_tuples()
            .into_iter()
            .flat_map(|t| (0..self.dim_v).map(move |v| (t.clone(), v)))
            .collect()
    }

    pub fn zero(&self) -> Cochain {
        Cochain { space: *self, coeffs: vec![self.field.zero(); self.dim()] }
    }

    pub fn basis_cochain(&self, coordinate: usize) -> Cochain {
        let mut c = self.zero();
        c.coeffs[coordinate] = self.field.one();
        c
    }

    pub(crate) fn same_shape(&self, other: &CochainSpace) -> bool {
        self.field == other.field && self.alg_dim == other.alg_dim && self.dim_v == other.dim_v
    }
}

/// Coordinates of a cochain against its space's canonical basis.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Cochain {
    space: CochainSpace,
    coeffs: Vec<Scalar>,
}

impl Cochain {
    pub fn new(space: CochainSpace, coeffs: Vec<Scalar>) -> Result<Self> {
        if coeffs.len() != space.dim() {
            return Err(LyaError::DimensionMismatch(format!(
                "{} coefficients for a cochain space of dimension {}",
                coeffs.len(),
                space.dim()
            )));
        }
        check_field(space.field, &coeffs)?;
        Ok(Cochain { space, coeffs })
    }

    pub fn space(&self) -> &CochainSpace {
        &self.space
    }

    pub fn coeffs(&self) -> &[Scalar] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<Scalar> {
        self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Scalar::is_zero)
    }

    /// Value on a basis tuple.
    pub fn eval_basis(&self, tuple: &[usize]) -> Vec<Scalar> {
        let s = &self.space;
        match s.locate(tuple) {
            None => vec![s.field.zero(); s.dim_v],
            Some((t, positive)) => self.coeffs[t * s.dim_v..(t + 1) * s.dim_v]
                .iter()
                .map(|c| c.signed(positive))
                .collect(),
        }
    }

    /// Full multilinear evaluation on coordinate vectors.
    pub fn evaluate(&self, args: &[Vec<Scalar>]) -> Result<Vec<Scalar>> {
        let s = &self.space;
        if args.len() != s.arity {
            return Err(LyaError::DimensionMismatch(format!(
                "{}-cochain evaluated on {} arguments",
                s.arity,
                args.len()
            )));
        }
        for a in args {
            if a.len() != s.alg_dim {
                return Err(LyaError::DimensionMismatch(format!(
                    "argument of length {} for a {}-dimensional algebra",
                    a.len(),
                    s.alg_dim
                )));
            }
            check_field(s.field, a)?;
        }
        let args: Vec<crate::multilinear::Arg<'_>> =
            args.iter().map(|a| crate::multilinear::Arg::Vector(a)).collect();
        Ok(self.to_multilinear().apply(&args))
    }

    /// The full table of values on every basis tuple.
    pub fn to_multilinear(&self) -> Multilinear {
        let s = &self.space;
        Multilinear::from_fn(s.field, s.arity, s.alg_dim, s.dim_v, |t| self.eval_basis(t))
    }

    /// Reads canonical coordinates off a multilinear map, rejecting maps that
    /// do not vanish on the slot-pair diagonals. The error carries the first
    /// offending tuple.
    pub fn from_multilinear(space: CochainSpace, m: &Multilinear) -> std::result::Result<Self, (Vec<usize>, Vec<Scalar>)> {
        let mut coeffs = vec![space.field.zero(); space.dim()];
        for (t, tuple) in space.canonical_tuples().iter().enumerate() {
            coeffs[t * space.dim_v..(t + 1) * space.dim_v].clone_from_slice(m.at(tuple));
        }
        let c = Cochain { space, coeffs };
        for tuple in tuples(space.alg_dim, space.arity) {
            let expect = c.eval_basis(&tuple);
            let got = m.at(&tuple);
            if got != expect.as_slice() {
                let diff = got.iter().zip(&expect).map(|(a, b)| a - b).collect();
                return Err((tuple, diff));
            }
        }
        Ok(c)
    }

    pub fn add(&self, other: &Cochain) -> Result<Cochain> {
        self.check_same(other)?;
        let coeffs = self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a + b).collect();
        Ok(Cochain { space: self.space, coeffs })
    }

    pub fn sub(&self, other: &Cochain) -> Result<Cochain> {
        self.check_same(other)?;
        let coeffs = self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a - b).collect();
        Ok(Cochain { space: self.space, coeffs })
    }

    pub fn scale(&self, c: &Scalar) -> Cochain {
        Cochain { space: self.space, coeffs: self.coeffs.iter().map(|x| x * c).collect() }
    }

    fn check_same(&self, other: &Cochain) -> Result<()> {
        if self.space != other.space {
            return Err(LyaError::DimensionMismatch(format!(
                "cochains from different spaces ({:?} vs {:?})",
                self.space, other.space
            )));
        }
        Ok(())
    }
}

/// `(f, g) ∈ C^{2n}(L, V) × C^{2n+1}(L, V)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CochainPair {
    pub f: Cochain,
    pub g: Cochain,
}

impl CochainPair {
    pub fn new(f: Cochain, g: Cochain) -> Result<Self> {
        let (fs, gs) = (f.space, g.space);
        if fs.arity % 2 != 0 || gs.arity != fs.arity + 1 || !fs.same_shape(&gs) {
            return Err(LyaError::Malformed(format!(
                "cochain pair needs arities (2n, 2n+1) over the same spaces, got ({}, {})",
                fs.arity, gs.arity
            )));
        }
        Ok(CochainPair { f, g })
    }

    /// The zero pair at level `n`, i.e. in `C^{2n} × C^{2n+1}`.
    pub fn zero(field: Field, level: usize, alg_dim: usize, dim_v: usize) -> Result<Self> {
        let (e, o) = pair_spaces(field, level, alg_dim, dim_v)?;
        Ok(CochainPair { f: e.zero(), g: o.zero() })
    }

    pub fn level(&self) -> usize {
        self.f.space.arity / 2
    }

    pub fn spaces(&self) -> (CochainSpace, CochainSpace) {
        (self.f.space, self.g.space)
    }

    pub fn is_zero(&self) -> bool {
        self.f.is_zero() && self.g.is_zero()
    }

    /// Even block followed by odd block.
    pub fn stacked(&self) -> Vec<Scalar> {
        let mut v = self.f.coeffs.clone();
        v.extend(self.g.coeffs.iter().cloned());
        v
    }

    pub fn from_stacked(even: CochainSpace, odd: CochainSpace, v: &[Scalar]) -> Result<Self> {
        if v.len() != even.dim() + odd.dim() {
            return Err(LyaError::Linalg(LinalgError::DimensionMismatch(format!(
                "stacked vector of length {} for blocks {} + {}",
                v.len(),
                even.dim(),
                odd.dim()
            ))));
        }
        let (a, b) = v.split_at(even.dim());
        CochainPair::new(Cochain::new(even, a.to_vec())?, Cochain::new(odd, b.to_vec())?)
    }

    pub fn add(&self, other: &CochainPair) -> Result<CochainPair> {
        Ok(CochainPair { f: self.f.add(&other.f)?, g: self.g.add(&other.g)? })
    }

    pub fn sub(&self, other: &CochainPair) -> Result<CochainPair> {
        Ok(CochainPair { f: self.f.sub(&other.f)?, g: self.g.sub(&other.g)? })
    }

    pub fn scale(&self, c: &Scalar) -> CochainPair {
        CochainPair { f: self.f.scale(c), g: self.g.scale(c) }
    }
}

/// `(C^{2n}, C^{2n+1})` for level `n ≥ 1`.
pub fn pair_spaces(
    field: Field,
    level: usize,
    alg_dim: usize,
    dim_v: usize,
) -> Result<(CochainSpace, CochainSpace)> {
    if level == 0 {
        return Err(LyaError::Malformed("cochain pairs start at level 1".into()));
    }
    Ok((
        CochainSpace::new(field, 2 * level, alg_dim, dim_v)?,
        CochainSpace::new(field, 2 * level + 1, alg_dim, dim_v)?,
    ))
}

#[cfg(test)]
mod tests {
    use super::*;

    const Q: Field = Field::Rational;

    #[test]
    fn dimensions_small() {
        let s = CochainSpace::new(Q, 2, 2, 2).unwrap();
        assert_eq!(s.dim(), 2);
        let s = CochainSpace::new(Q, 3, 2, 2).unwrap();
        assert_eq!(s.dim(), 4);
        let s = CochainSpace::new(Q, 5, 3, 1).unwrap();
        assert_eq!(s.dim(), 27);
        let s = CochainSpace::new(Q, 4, 1, 1).unwrap();
        assert_eq!(s.dim(), 0);
        let s = CochainSpace::new(Q, 1, 3, 2).unwrap();
        assert_eq!(s.dim(), 6);
    }

    #[test]
    fn locate_agrees_with_enumeration() {
        let s = CochainSpace::new(Q, 5, 3, 1).unwrap();
        for (i, t) in s.canonical_tuples().iter().enumerate() {
            assert_eq!(s.locate(t), Some((i, true)));
        }
        assert_eq!(s.locate(&[1, 0, 0, 2, 1]).map(|x| x.1), Some(false));
        assert_eq!(s.locate(&[1, 0, 2, 0, 1]).map(|x| x.1), Some(true));
        assert_eq!(s.locate(&[1, 1, 0, 2, 1]), None);
    }

    #[test]
    fn diagonal_vanishes_and_swap_negates() {
        let s = CochainSpace::new(Q, 3, 2, 2).unwrap();
        let c = Cochain::new(s, (1..=4).map(|i| Q.from_i64(i)).collect()).unwrap();
        let e = |i: usize| {
            let mut v = vec![Q.zero(); 2];
            v[i] = Q.one();
            v
        };
        let x = vec![Q.from_i64(2), Q.from_i64(-3)];
        let z = vec![Q.zero(), Q.zero()];
        assert_eq!(c.evaluate(&[x.clone(), x.clone(), e(1)]).unwrap(), z);
        let a = c.evaluate(&[e(0), e(1), e(1)]).unwrap();
        let b = c.evaluate(&[e(1), e(0), e(1)]).unwrap();
        assert_eq!(a, b.iter().map(|s| -s).collect::<Vec<_>>());
        assert!(c.evaluate(&[e(0), e(1)]).is_err());
    }

    #[test]
    fn multilinear_roundtrip() {
        let s = CochainSpace::new(Q, 4, 3, 1).unwrap();
        let c = Cochain::new(s, (0..9).map(|i| Q.from_i64(i - 4)).collect()).unwrap();
        let m = c.to_multilinear();
        assert_eq!(Cochain::from_multilinear(s, &m).unwrap(), c);
        let mut bad = m.clone();
        bad.at_mut(&[0, 0, 1, 2])[0] = Q.one();
        assert_eq!(Cochain::from_multilinear(s, &bad).unwrap_err().0, vec![0, 0, 1, 2]);
    }

    #[test]
    fn pair_shapes() {
        let p = CochainPair::zero(Q, 2, 2, 2).unwrap();
        assert_eq!(p.level(), 2);
        assert_eq!(p.stacked().len(), 2 + 4);
        let (e, _) = pair_spaces(Q, 1, 2, 2).unwrap();
        assert!(CochainPair::new(e.zero(), e.zero()).is_err());
        assert!(pair_spaces(Q, 0, 2, 2).is_err());
    }
}
