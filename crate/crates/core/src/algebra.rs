//! Structure constants, the six Lie-Yamaguti axioms, morphisms, and the
//! Leibniz construction.

use lyalg_linalg::{is_zero_vector, Field, Matrix, Scalar};

use crate::multilinear::{tuples, Arg, Multilinear};
use crate::{LyaError, Result, Verdict, Violation};

/// A finite-dimensional algebra with a binary bracket `[e_i, e_j] = Σ b_ijk e_k`
/// and a ternary bracket `{e_i, e_j, e_k} = Σ t_ijkl e_l`.
///
/// Values built with [`LyAlgebra::new`] are antisymmetric in the first two
/// slots of both brackets by construction. [`LyAlgebra::from_raw`] stores a
/// table verbatim, which is the only way to observe LY1/LY2 failures.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LyAlgebra {
    labels: Vec<String>,
    binary: Multilinear,
    ternary: Multilinear,
    verified: bool,
}

pub type BinaryEntry = (usize, usize, usize, Scalar);
pub type TernaryEntry = (usize, usize, usize, usize, Scalar);

fn check_labels(labels: &[String]) -> Result<()> {
    for (i, l) in labels.iter().enumerate() {
        if l.is_empty() {
            return Err(LyaError::Malformed(format!("basis label {i} is empty")));
        }
        if labels[..i].contains(l) {
            return Err(LyaError::Malformed(format!("duplicate basis label {l:?}")));
        }
    }
    Ok(())
}

fn check_entry(field: Field, d: usize, idx: &[usize], value: &Scalar) -> Result<()> {
    if let Some(&bad) = idx.iter().find(|&&i| i >= d) {
        return Err(LyaError::Malformed(format!("index {bad} out of range for dimension {d}")));
    }
    if value.field() != field {
        return Err(LyaError::Linalg(lyalg_linalg::LinalgError::FieldMismatch {
            expected: field,
            found: value.field(),
        }));
    }
    Ok(())
}

impl LyAlgebra {
    /// Builds an algebra from its independent constants (`i < j` in the first
    /// two slots); the antisymmetric partners are filled in.
    pub fn new(
        field: Field,
        labels: Vec<String>,
        binary: Vec<BinaryEntry>,
        ternary: Vec<TernaryEntry>,
    ) -> Result<Self> {
        check_labels(&labels)?;
        let d = labels.len();
        let mut b = Multilinear::zero(field, 2, d, d);
        let mut t = Multilinear::zero(field, 3, d, d);
        let mut seen_b = std::collections::BTreeSet::new();
        for (i, j, k, c) in binary {
            check_entry(field, d, &[i, j, k], &c)?;
            if i >= j {
                return Err(LyaError::Malformed(format!(
                    "binary constant ({i},{j},{k}) is not independent (need i < j)"
                )));
            }
            if !seen_b.insert((i, j, k)) {
                return Err(LyaError::Malformed(format!("duplicate binary constant ({i},{j},{k})")));
            }
            b.at_mut(&[j, i])[k] = -&c;
            b.at_mut(&[i, j])[k] = c;
        }
        let mut seen_t = std::collections::BTreeSet::new();
        for (i, j, k, l, c) in ternary {
            check_entry(field, d, &[i, j, k, l], &c)?;
            if i >= j {
                return Err(LyaError::Malformed(format!(
                    "ternary constant ({i},{j},{k},{l}) is not independent (need i < j)"
                )));
            }
            if !seen_t.insert((i, j, k, l)) {
                return Err(LyaError::Malformed(format!(
                    "duplicate ternary constant ({i},{j},{k},{l})"
                )));
            }
            t.at_mut(&[j, i, k])[l] = -&c;
            t.at_mut(&[i, j, k])[l] = c;
        }
        Ok(LyAlgebra { labels, binary: b, ternary: t, verified: false })
    }

    /// Stores full constant tables as given, without antisymmetrisation.
    pub fn from_raw(
        field: Field,
        labels: Vec<String>,
        binary: Vec<BinaryEntry>,
        ternary: Vec<TernaryEntry>,
    ) -> Result<Self> {
        check_labels(&labels)?;
        let d = labels.len();
        let mut b = Multilinear::zero(field, 2, d, d);
        let mut t = Multilinear::zero(field, 3, d, d);
        for (i, j, k, c) in binary {
            check_entry(field, d, &[i, j, k], &c)?;
            b.at_mut(&[i, j])[k] += &c;
        }
        for (i, j, k, l, c) in ternary {
            check_entry(field, d, &[i, j, k, l], &c)?;
            t.at_mut(&[i, j, k])[l] += &c;
        }
        Ok(LyAlgebra { labels, binary: b, ternary: t, verified: false })
    }

    pub(crate) fn from_tables(labels: Vec<String>, binary: Multilinear, ternary: Multilinear) -> Self {
        LyAlgebra { labels, binary, ternary, verified: false }
    }

    /// The abelian algebra (both brackets zero) with basis `e1, …, ed`.
    pub fn abelian(field: Field, d: usize) -> Self {
        Self::new(field, default_labels(d), vec![], vec![]).expect("abelian algebra")
    }

    /// Runs [`check_lya`] and tags the algebra as verified on success.
    pub fn verify(mut self) -> std::result::Result<Self, Violation> {
        match check_lya(&self) {
            Verdict::Pass => {
                self.verified = true;
                Ok(self)
            }
            Verdict::Fail(v) => Err(v),
        }
    }

    pub fn is_verified(&self) -> bool {
        self.verified
    }

    pub(crate) fn require_verified(&self) -> Result<()> {
        if self.verified {
            Ok(())
        } else {
            Err(LyaError::Unverified("Lie-Yamaguti algebra"))
        }
    }

    pub fn field(&self) -> Field {
        self.binary.field()
    }

    pub fn dim(&self) -> usize {
        self.labels.len()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, i: usize) -> &str {
        &self.labels[i]
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }

    pub fn binary(&self) -> &Multilinear {
        &self.binary
    }

    pub fn ternary(&self) -> &Multilinear {
        &self.ternary
    }

    pub fn bracket(&self, x: Arg<'_>, y: Arg<'_>) -> Vec<Scalar> {
        self.binary.apply(&[x, y])
    }

    pub fn triple(&self, x: Arg<'_>, y: Arg<'_>, z: Arg<'_>) -> Vec<Scalar> {
        self.ternary.apply(&[x, y, z])
    }

    /// Nonzero independent constants, lexicographically (`i < j` only).
    pub fn independent_constants(&self) -> (Vec<BinaryEntry>, Vec<TernaryEntry>) {
        let d = self.dim();
        let mut b = Vec::new();
        for t in tuples(d, 2).filter(|t| t[0] < t[1]) {
            for (k, c) in self.binary.at(&t).iter().enumerate() {
                if !c.is_zero() {
                    b.push((t[0], t[1], k, c.clone()));
                }
            }
        }
        let mut tr = Vec::new();
        for t in tuples(d, 3).filter(|t| t[0] < t[1]) {
            for (l, c) in self.ternary.at(&t).iter().enumerate() {
                if !c.is_zero() {
                    tr.push((t[0], t[1], t[2], l, c.clone()));
                }
            }
        }
        (b, tr)
    }

    /// Every nonzero table entry, lexicographically.
    pub fn raw_constants(&self) -> (Vec<BinaryEntry>, Vec<TernaryEntry>) {
        let d = self.dim();
        let mut b = Vec::new();
        for t in tuples(d, 2) {
            for (k, c) in self.binary.at(&t).iter().enumerate() {
                if !c.is_zero() {
                    b.push((t[0], t[1], k, c.clone()));
                }
            }
        }
        let mut tr = Vec::new();
        for t in tuples(d, 3) {
            for (l, c) in self.ternary.at(&t).iter().enumerate() {
                if !c.is_zero() {
                    tr.push((t[0], t[1], t[2], l, c.clone()));
                }
            }
        }
        (b, tr)
    }

    pub(crate) fn witness(&self, idx: &[usize]) -> Vec<String> {
        idx.iter().map(|&i| self.labels[i].clone()).collect()
    }
}

/// `e1, e2, …, ed`.
pub fn default_labels(d: usize) -> Vec<String> {
    (1..=d).map(|i| format!("e{i}")).collect()
}

fn sum(field: Field, len: usize, parts: &[(i64, Vec<Scalar>)]) -> Vec<Scalar> {
    let mut out = vec![field.zero(); len];
    for (sign, v) in parts {
        let c = field.from_i64(*sign);
        lyalg_linalg::axpy(&mut out, &c, v);
    }
    out
}

fn first_violation(
    a: &LyAlgebra,
    rule: &str,
    arity: usize,
    mut residual: impl FnMut(&[usize]) -> Vec<Scalar>,
) -> Option<Violation> {
    tuples(a.dim(), arity).find_map(|t| {
        let r = residual(&t);
        (!is_zero_vector(&r)).then(|| Violation::new(rule, a.witness(&t), r))
    })
}

/// Checks LY1–LY6 on every basis tuple, in that order, returning the first
/// violation in lexicographic tuple order.
pub fn check_lya(a: &LyAlgebra) -> Verdict {
    use Arg::{Basis as B, Vector as V};
    let f = a.field();
    let d = a.dim();
    let br = |x: Arg<'_>, y: Arg<'_>| a.bracket(x, y);
    let tr = |x: Arg<'_>, y: Arg<'_>, z: Arg<'_>| a.triple(x, y, z);

    let ly1 = |t: &[usize]| sum(f, d, &[(1, br(B(t[0]), B(t[1]))), (1, br(B(t[1]), B(t[0])))]);
    let ly2 = |t: &[usize]| {
        sum(f, d, &[(1, tr(B(t[0]), B(t[1]), B(t[2]))), (1, tr(B(t[1]), B(t[0]), B(t[2])))])
    };
    let ly3 = |t: &[usize]| {
        let mut parts = Vec::new();
        for (x, y, z) in cyclic(t[0], t[1], t[2]) {
            let xy = br(B(x), B(y));
            parts.push((1, br(V(&xy), B(z))));
            parts.push((1, tr(B(x), B(y), B(z))));
        }
        sum(f, d, &parts)
    };
    let ly4 = |t: &[usize]| {
        let u = t[3];
        let parts: Vec<_> = cyclic(t[0], t[1], t[2])
            .into_iter()
            .map(|(x, y, z)| {
                let xy = br(B(x), B(y));
                (1, tr(V(&xy), B(z), B(u)))
            })
            .collect();
        sum(f, d, &parts)
    };
    let ly5 = |t: &[usize]| {
        let (x, y, u, v) = (t[0], t[1], t[2], t[3]);
        let uv = br(B(u), B(v));
        let xyu = tr(B(x), B(y), B(u));
        let xyv = tr(B(x), B(y), B(v));
        sum(
            f,
            d,
            &[
                (1, tr(B(x), B(y), V(&uv))),
                (-1, br(V(&xyu), B(v))),
                (-1, br(B(u), V(&xyv))),
            ],
        )
    };
    let ly6 = |t: &[usize]| {
        let (x, y, u, v, w) = (t[0], t[1], t[2], t[3], t[4]);
        let uvw = tr(B(u), B(v), B(w));
        let xyu = tr(B(x), B(y), B(u));
        let xyv = tr(B(x), B(y), B(v));
        let xyw = tr(B(x), B(y), B(w));
        sum(
            f,
            d,
            &[
                (1, tr(B(x), B(y), V(&uvw))),
                (-1, tr(V(&xyu), B(v), B(w))),
                (-1, tr(B(u), V(&xyv), B(w))),
                (-1, tr(B(u), B(v), V(&xyw))),
            ],
        )
    };

    let found = first_violation(a, "LY1", 2, ly1)
        .or_else(|| first_violation(a, "LY2", 3, ly2))
        .or_else(|| first_violation(a, "LY3", 3, ly3))
        .or_else(|| first_violation(a, "LY4", 4, ly4))
        .or_else(|| first_violation(a, "LY5", 4, ly5))
        .or_else(|| first_violation(a, "LY6", 5, ly6));
    Verdict::from_first(found)
}

/// The three cyclic rotations of `(x, y, z)`.
pub(crate) fn cyclic(x: usize, y: usize, z: usize) -> [(usize, usize, usize); 3] {
    [(x, y, z), (y, z, x), (z, x, y)]
}

/// Checks that the linear map with matrix `m` (columns are images of the
/// source basis) intertwines both brackets.
pub fn check_morphism(source: &LyAlgebra, target: &LyAlgebra, m: &Matrix) -> Result<Verdict> {
    if (m.rows(), m.cols()) != (target.dim(), source.dim()) {
        return Err(LyaError::DimensionMismatch(format!(
            "morphism matrix is {}x{}, expected {}x{}",
            m.rows(),
            m.cols(),
            target.dim(),
            source.dim()
        )));
    }
    if m.field() != source.field() || m.field() != target.field() {
        return Err(LyaError::Linalg(lyalg_linalg::LinalgError::FieldMismatch {
            expected: source.field(),
            found: m.field(),
        }));
    }
    let f = source.field();
    let n = target.dim();
    let images: Vec<Vec<Scalar>> = (0..source.dim()).map(|i| m.column(i)).collect();
    let apply = |v: &[Scalar]| m.mul_vec(v).expect("shape checked");
    let bin = first_violation(source, "binary bracket", 2, |t| {
        let lhs = apply(&source.bracket(Arg::Basis(t[0]), Arg::Basis(t[1])));
        let rhs = target.bracket(Arg::Vector(&images[t[0]]), Arg::Vector(&images[t[1]]));
        sum(f, n, &[(1, lhs), (-1, rhs)])
    });
    let ter = || {
        first_violation(source, "ternary bracket", 3, |t| {
            let lhs = apply(&source.triple(Arg::Basis(t[0]), Arg::Basis(t[1]), Arg::Basis(t[2])));
            let rhs = target.triple(
                Arg::Vector(&images[t[0]]),
                Arg::Vector(&images[t[1]]),
                Arg::Vector(&images[t[2]]),
            );
            sum(f, n, &[(1, lhs), (-1, rhs)])
        })
    };
    Ok(Verdict::from_first(bin.or_else(ter)))
}

/// A left Leibniz algebra `e_i · e_j = Σ c_ijk e_k`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LeibnizAlgebra {
    labels: Vec<String>,
    product: Multilinear,
}

impl LeibnizAlgebra {
    pub fn new(field: Field, labels: Vec<String>, product: Vec<BinaryEntry>) -> Result<Self> {
        check_labels(&labels)?;
        let d = labels.len();
        let mut p = Multilinear::zero(field, 2, d, d);
        for (i, j, k, c) in product {
            check_entry(field, d, &[i, j, k], &c)?;
            p.at_mut(&[i, j])[k] += &c;
        }
        Ok(LeibnizAlgebra { labels, product: p })
    }

    pub fn dim(&self) -> usize {
        self.labels.len()
    }

    pub fn field(&self) -> Field {
        self.product.field()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn mul(&self, a: Arg<'_>, b: Arg<'_>) -> Vec<Scalar> {
        self.product.apply(&[a, b])
    }

    /// Nonzero structure constants, lexicographically.
    pub fn constants(&self) -> Vec<BinaryEntry> {
        let mut out = Vec::new();
        for t in tuples(self.dim(), 2) {
            for (k, c) in self.product.at(&t).iter().enumerate() {
                if !c.is_zero() {
                    out.push((t[0], t[1], k, c.clone()));
                }
            }
        }
        out
    }

    /// `a·(b·c) = (a·b)·c + b·(a·c)` on every basis triple.
    pub fn check(&self) -> Verdict {
        use Arg::{Basis as B, Vector as V};
        let f = self.field();
        let d = self.dim();
        let found = tuples(d, 3).find_map(|t| {
            let (a, b, c) = (t[0], t[1], t[2]);
            let bc = self.mul(B(b), B(c));
            let ab = self.mul(B(a), B(b));
            let ac = self.mul(B(a), B(c));
            let r = sum(
                f,
                d,
                &[
                    (1, self.mul(B(a), V(&bc))),
                    (-1, self.mul(V(&ab), B(c))),
                    (-1, self.mul(B(b), V(&ac))),
                ],
            );
            (!is_zero_vector(&r)).then(|| {
                Violation::new(
                    "left Leibniz identity",
                    t.iter().map(|&i| self.labels[i].clone()).collect(),
                    r,
                )
            })
        });
        Verdict::from_first(found)
    }
}

/// `[a, b] = a·b − b·a`, `{a, b, c} = −(a·b)·c`. The result is verified before
/// it is returned.
pub fn leibniz_to_lya(lz: &LeibnizAlgebra) -> Result<LyAlgebra> {
    use Arg::{Basis as B, Vector as V};
    if let Verdict::Fail(v) = lz.check() {
        return Err(LyaError::Violation(v));
    }
    let f = lz.field();
    let d = lz.dim();
    let binary = Multilinear::from_fn(f, 2, d, d, |t| {
        sum(f, d, &[(1, lz.mul(B(t[0]), B(t[1]))), (-1, lz.mul(B(t[1]), B(t[0])))])
    });
    let ternary = Multilinear::from_fn(f, 3, d, d, |t| {
        let ab = lz.mul(B(t[0]), B(t[1]));
        sum(f, d, &[(-1, lz.mul(V(&ab), B(t[2])))])
    });
    LyAlgebra::from_tables(lz.labels.clone(), binary, ternary)
        .verify()
        .map_err(LyaError::Violation)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    const Q: Field = Field::Rational;

    #[test]
    fn example_algebra_passes() {
        assert!(check_lya(&fixtures::ex33()).is_pass());
        assert!(check_lya(&LyAlgebra::abelian(Q, 3)).is_pass());
        assert!(check_lya(&fixtures::sl2()).is_pass());
        assert!(check_lya(&fixtures::l0()).is_pass());
    }

    #[test]
    fn degenerate_dimensions_pass() {
        assert!(LyAlgebra::abelian(Q, 0).verify().is_ok());
        assert!(LyAlgebra::abelian(Q, 1).verify().is_ok());
    }

    #[test]
    fn swapped_bracket_variant_fails_ly5() {
        // [e1,e2] = e2, {e1,e2,e2} = e1. In dimension 2 every cyclic sum of
        // LY3/LY4 vanishes identically; the first failure is LY5.
        let v = check_lya(&fixtures::ex33_swapped()).violation().cloned().unwrap();
        assert_eq!(v.rule, "LY5");
        assert_eq!(v.witness, vec!["e1", "e2", "e1", "e2"]);
        assert_eq!(v.residual, vec![Q.one(), Q.zero()]);
    }

    #[test]
    fn raw_table_reports_ly1() {
        let a = LyAlgebra::from_raw(Q, default_labels(2), vec![(0, 0, 0, Q.one())], vec![]).unwrap();
        let v = check_lya(&a).violation().cloned().unwrap();
        assert_eq!(v.rule, "LY1");
        assert_eq!(v.witness, vec!["e1", "e1"]);
        assert_eq!(v.residual, vec![Q.from_i64(2), Q.zero()]);
    }

    #[test]
    fn independent_input_rejects_bad_slots() {
        let e = LyAlgebra::new(Q, default_labels(2), vec![(1, 0, 0, Q.one())], vec![]);
        assert!(matches!(e, Err(LyaError::Malformed(_))));
        let e = LyAlgebra::new(Q, default_labels(2), vec![(0, 1, 2, Q.one())], vec![]);
        assert!(matches!(e, Err(LyaError::Malformed(_))));
        let p = Field::prime(5).unwrap();
        let e = LyAlgebra::new(Q, default_labels(2), vec![(0, 1, 0, p.one())], vec![]);
        assert!(matches!(e, Err(LyaError::Linalg(_))));
    }

    #[test]
    fn antisymmetric_partners_filled() {
        let a = fixtures::ex33();
        assert_eq!(a.bracket(Arg::Basis(1), Arg::Basis(0)), vec![Q.from_i64(-1), Q.zero()]);
        assert_eq!(
            a.triple(Arg::Basis(1), Arg::Basis(0), Arg::Basis(1)),
            vec![Q.from_i64(-1), Q.zero()]
        );
    }

    #[test]
    fn morphism_examples() {
        let a = fixtures::ex33();
        let id = Matrix::identity(Q, 2);
        assert!(check_morphism(&a, &a, &id).unwrap().is_pass());
        assert!(check_morphism(&a, &a, &Matrix::zeros(Q, 2, 2)).unwrap().is_pass());
        let swap = Matrix::from_i64(Q, &[&[0, 1], &[1, 0]]);
        let v = check_morphism(&a, &a, &swap).unwrap().violation().cloned().unwrap();
        assert_eq!(v.rule, "binary bracket");
        assert_eq!(v.witness, vec!["e1", "e2"]);
        // φ([e1,e2]) − [φe1, φe2] = e2 − (−e1)
        assert_eq!(v.residual, vec![Q.one(), Q.one()]);
        assert!(check_morphism(&a, &a, &Matrix::identity(Q, 3)).is_err());
    }

    #[test]
    fn leibniz_examples() {
        let lz = LeibnizAlgebra::new(Q, default_labels(2), vec![(0, 0, 1, Q.one())]).unwrap();
        let a = leibniz_to_lya(&lz).unwrap();
        assert!(a.binary().is_zero() && a.ternary().is_zero());

        let lz = LeibnizAlgebra::new(Q, default_labels(2), vec![(0, 1, 1, Q.one())]).unwrap();
        let a = leibniz_to_lya(&lz).unwrap();
        assert_eq!(a.bracket(Arg::Basis(0), Arg::Basis(1)), vec![Q.zero(), Q.one()]);
        assert!(a.ternary().is_zero());

        let lz = LeibnizAlgebra::new(Q, default_labels(3), vec![]).unwrap();
        assert!(leibniz_to_lya(&lz).unwrap().binary().is_zero());
    }

    #[test]
    fn leibniz_violation_has_witness() {
        // e1·e1 = e1 is not left Leibniz: e1·(e1·e1) = e1 but
        // (e1·e1)·e1 + e1·(e1·e1) = 2 e1.
        let lz = LeibnizAlgebra::new(Q, default_labels(1), vec![(0, 0, 0, Q.one())]).unwrap();
        match leibniz_to_lya(&lz) {
            Err(LyaError::Violation(v)) => {
                assert_eq!(v.witness, vec!["e1", "e1", "e1"]);
                assert_eq!(v.residual, vec![Q.from_i64(-1)]);
            }
            other => panic!("expected violation, got {other:?}"),
        }
    }
}
