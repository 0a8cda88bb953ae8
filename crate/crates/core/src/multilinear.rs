//! Dense multilinear maps `L^{×n} → W` stored on basis tuples.

use lyalg_linalg::{Field, Matrix, Scalar};

/// Values of an `arity`-linear map on every basis tuple, tuples ordered
/// lexicographically, each value a vector of length `target`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Multilinear {
    field: Field,
    arity: usize,
    dim: usize,
    target: usize,
    values: Vec<Scalar>,
}

/// An argument slot: a basis vector or an arbitrary coordinate vector.
#[derive(Clone, Copy, Debug)]
pub enum Arg<'a> {
    Basis(usize),
    Vector(&'a [Scalar]),
}

impl Multilinear {
    pub fn zero(field: Field, arity: usize, dim: usize, target: usize) -> Self {
        let len = dim.pow(arity as u32) * target;
        Multilinear { field, arity, dim, target, values: vec![field.zero(); len] }
    }

    pub fn from_fn(
        field: Field,
        arity: usize,
        dim: usize,
        target: usize,
        mut f: impl FnMut(&[usize]) -> Vec<Scalar>,
    ) -> Self {
        let mut out = Self::zero(field, arity, dim, target);
        for (t, tuple) in tuples(dim, arity).enumerate() {
            let v = f(&tuple);
            debug_assert_eq!(v.len(), target);
            out.values[t * target..(t + 1) * target].clone_from_slice(&v);
        }
        out
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn target(&self) -> usize {
        self.target
    }

    pub fn is_zero(&self) -> bool {
        self.values.iter().all(Scalar::is_zero)
    }

    fn offset(&self, tuple: &[usize]) -> usize {
        debug_assert_eq!(tuple.len(), self.arity);
        let t = tuple.iter().fold(0, |acc, &i| acc * self.dim + i);
        t * self.target
    }

    pub fn at(&self, tuple: &[usize]) -> &[Scalar] {
        let o = self.offset(tuple);
        &self.values[o..o + self.target]
    }

    pub fn at_mut(&mut self, tuple: &[usize]) -> &mut [Scalar] {
        let o = self.offset(tuple);
        &mut self.values[o..o + self.target]
    }

    /// Evaluates on mixed basis/vector arguments by multilinear expansion,
    /// skipping zero coordinates.
    pub fn apply(&self, args: &[Arg<'_>]) -> Vec<Scalar> {
        assert_eq!(args.len(), self.arity, "arity mismatch");
        let slots: Vec<Vec<(usize, Option<&Scalar>)>> = args
            .iter()
            .map(|a| match a {
                Arg::Basis(i) => vec![(*i, None)],
                Arg::Vector(v) => v
                    .iter()
                    .enumerate()
                    .filter(|(_, c)| !c.is_zero())
                    .map(|(i, c)| (i, Some(c)))
                    .collect(),
            })
            .collect();
        let mut out = vec![self.field.zero(); self.target];
        if slots.iter().any(Vec::is_empty) {
            return out;
        }
        let mut idx = vec![0usize; self.arity];
        let mut tuple = vec![0usize; self.arity];
        loop {
            let mut coeff: Option<Scalar> = None;
            for (s, &k) in idx.iter().enumerate() {
                let (i, c) = slots[s][k];
                tuple[s] = i;
                if let Some(c) = c {
                    coeff = Some(match coeff {
                        None => c.clone(),
                        Some(acc) => &acc * c,
                    });
                }
            }
            let vals = self.at(&tuple);
            match &coeff {
                None => {
                    for (o, v) in out.iter_mut().zip(vals) {
                        *o += v;
                    }
                }
                Some(c) => {
                    for (o, v) in out.iter_mut().zip(vals) {
                        o.add_mul(c, v);
                    }
                }
            }
            // odometer
            let mut s = self.arity;
            loop {
                if s == 0 {
                    return out;
                }
                s -= 1;
                idx[s] += 1;
                if idx[s] < slots[s].len() {
                    break;
                }
                idx[s] = 0;
            }
        }
    }

    pub fn apply_basis(&self, tuple: &[usize]) -> Vec<Scalar> {
        self.at(tuple).to_vec()
    }

    /// `(x_1, …, x_n) ↦ m · self(x_1, …, x_n)`.
    pub fn postcompose(&self, m: &Matrix) -> Multilinear {
        assert_eq!(m.cols(), self.target);
        let target = m.rows();
        let mut out = Multilinear::zero(self.field, self.arity, self.dim, target);
        let blocks = self.values.len() / self.target.max(1);
        if self.target == 0 {
            return out;
        }
        for t in 0..blocks {
            let src = &self.values[t * self.target..(t + 1) * self.target];
            let v = m.mul_vec(src).expect("dimensions checked");
            out.values[t * target..(t + 1) * target].clone_from_slice(&v);
        }
        out
    }

    /// Replaces slot `slot` by `m x`: the result sends `(…, e_i, …)` to
    /// `self(…, m e_i, …)`.
    pub fn precompose(&self, slot: usize, m: &Matrix) -> Multilinear {
        assert_eq!((m.rows(), m.cols()), (self.dim, self.dim));
        let mut out = Multilinear::zero(self.field, self.arity, self.dim, self.target);
        for tuple in tuples(self.dim, self.arity) {
            let i = tuple[slot];
            let mut acc = vec![self.field.zero(); self.target];
            let mut src = tuple.clone();
            for k in 0..self.dim {
                let c = &m[(k, i)];
                if c.is_zero() {
                    continue;
                }
                src[slot] = k;
                lyalg_linalg::axpy(&mut acc, c, self.at(&src));
            }
            out.at_mut(&tuple).clone_from_slice(&acc);
        }
        out
    }

    /// Precomposes every slot with the same map.
    pub fn precompose_all(&self, m: &Matrix) -> Multilinear {
        (0..self.arity).fold(self.clone(), |acc, s| acc.precompose(s, m))
    }

    pub fn add(&self, other: &Multilinear) -> Multilinear {
        assert_eq!(
            (self.arity, self.dim, self.target),
            (other.arity, other.dim, other.target)
        );
        let values = self.values.iter().zip(&other.values).map(|(a, b)| a + b).collect();
        Multilinear { values, ..*self }
    }

    pub fn add_assign(&mut self, other: &Multilinear) {
        for (a, b) in self.values.iter_mut().zip(&other.values) {
            *a += b;
        }
    }

    pub fn scale(&self, c: &Scalar) -> Multilinear {
        let values = self.values.iter().map(|a| a * c).collect();
        Multilinear { values, ..*self }
    }

    pub fn values(&self) -> &[Scalar] {
        &self.values
    }
}

/// All basis tuples of length `arity` over `0..dim`, lexicographically.
pub fn tuples(dim: usize, arity: usize) -> impl Iterator<Item = Vec<usize>> {
    let total = if dim == 0 && arity > 0 { 0 } else { dim.pow(arity as u32) };
    (0..total).map(move |mut t| {
        let mut v = vec![0; arity];
        for s in (0..arity).rev() {
            v[s] = t % dim;
            t /= dim;
        }
        v
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    const Q: Field = Field::Rational;

    #[test]
    fn tuple_enumeration_is_lexicographic() {
        let all: Vec<_> = tuples(2, 2).collect();
        assert_eq!(all, vec![vec![0, 0], vec![0, 1], vec![1, 0], vec![1, 1]]);
        assert_eq!(tuples(0, 2).count(), 0);
        assert_eq!(tuples(3, 0).count(), 1);
    }

    #[test]
    fn apply_expands_multilinearly() {
        // m(e_i, e_j) = (i*2 + j) e_0
        let m = Multilinear::from_fn(Q, 2, 2, 1, |t| vec![Q.from_i64((t[0] * 2 + t[1]) as i64)]);
        let x = [Q.from_i64(1), Q.from_i64(2)];
        let y = [Q.from_i64(3), Q.from_i64(-1)];
        // Σ x_i y_j (2i + j) = 1*3*0 + 1*(-1)*1 + 2*3*2 + 2*(-1)*3 = -1 + 12 - 6
        let v = m.apply(&[Arg::Vector(&x), Arg::Vector(&y)]);
        assert_eq!(v, vec![Q.from_i64(5)]);
        assert_eq!(m.apply(&[Arg::Basis(1), Arg::Vector(&y)]), vec![Q.from_i64(3 * 2 - 3)]);
    }

    #[test]
    fn precompose_matches_apply() {
        let m = Multilinear::from_fn(Q, 2, 2, 2, |t| {
            vec![Q.from_i64(t[0] as i64 + 1), Q.from_i64(t[1] as i64 * 3 - 1)]
        });
        let a = Matrix::from_i64(Q, &[&[1, 2], &[3, 4]]);
        let p = m.precompose(1, &a);
        for t in tuples(2, 2) {
            let col = a.column(t[1]);
            assert_eq!(p.apply_basis(&t), m.apply(&[Arg::Basis(t[0]), Arg::Vector(&col)]));
        }
    }
}
