//! Brute-force reference implementations shared by the integration tests.
//! Everything here works from explicit structure-constant tables and plain
//! vectors, independently of the library's matrix assemblies.

#![allow(dead_code, clippy::needless_range_loop)]

pub mod criteria;

use lyalg::algebra::default_labels;
use lyalg::{Cochain, CochainSpace, Field, GroupAction, LyAlgebra, Matrix, Representation, Scalar};
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

pub fn rng(seed: u64) -> StdRng {
    StdRng::seed_from_u64(seed)
}

/// Small rationals `p/q` with `|p| ≤ 5`, `1 ≤ q ≤ 4`, or uniform residues.
pub fn scalar(rng: &mut StdRng, field: Field) -> Scalar {
    match field {
        Field::Rational => {
            let p: i64 = rng.gen_range(-5..=5);
            let q: i64 = rng.gen_range(1..=4);
            &field.from_i64(p) * &field.from_i64(q).inv().unwrap()
        }
        Field::Prime(p) => field.from_i64(rng.gen_range(0..p as i64)),
    }
}

pub fn vector(rng: &mut StdRng, field: Field, n: usize) -> Vec<Scalar> {
    (0..n).map(|_| scalar(rng, field)).collect()
}

pub fn matrix(rng: &mut StdRng, field: Field, rows: usize, cols: usize) -> Matrix {
    Matrix::from_fn(field, rows, cols, |_, _| scalar(rng, field))
}

pub fn unit(field: Field, d: usize, i: usize) -> Vec<Scalar> {
    (0..d).map(|j| if i == j { field.one() } else { field.zero() }).collect()
}

pub fn is_zero(v: &[Scalar]) -> bool {
    v.iter().all(Scalar::is_zero)
}

fn axpy(acc: &mut [Scalar], c: &Scalar, v: &[Scalar]) {
    for (a, x) in acc.iter_mut().zip(v) {
        *a = &*a + &(c * x);
    }
}

fn combo(field: Field, n: usize, parts: &[(i64, Vec<Scalar>)]) -> Vec<Scalar> {
    let mut out = vec![field.zero(); n];
    for (s, v) in parts {
        axpy(&mut out, &field.from_i64(*s), v);
    }
    out
}

pub fn sub(a: &[Scalar], b: &[Scalar]) -> Vec<Scalar> {
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

/// Full structure-constant tables: `b[i][j]` is `[e_i, e_j]`, `t[i][j][k]`
/// is `{e_i, e_j, e_k}`.
#[derive(Clone, Debug)]
pub struct Tables {
    pub field: Field,
    pub d: usize,
    pub b: Vec<Vec<Vec<Scalar>>>,
    pub t: Vec<Vec<Vec<Vec<Scalar>>>>,
}

impl Tables {
    pub fn zero(field: Field, d: usize) -> Self {
        Tables {
            field,
            d,
            b: vec![vec![vec![field.zero(); d]; d]; d],
            t: vec![vec![vec![vec![field.zero(); d]; d]; d]; d],
        }
    }

    pub fn of(a: &LyAlgebra) -> Self {
        let mut out = Tables::zero(a.field(), a.dim());
        let (b, t) = a.raw_constants();
        for (i, j, k, c) in b {
            out.b[i][j][k] = c;
        }
        for (i, j, k, l, c) in t {
            out.t[i][j][k][l] = c;
        }
        out
    }

    /// Tables of the pair `(f, g)` of 2- and 3-cochains with values in `L`.
    pub fn of_cochains(f: &Cochain, g: &Cochain) -> Self {
        let d = f.space().alg_dim();
        let mut out = Tables::zero(f.space().field(), d);
        for i in 0..d {
            for j in 0..d {
                out.b[i][j] = f.eval_basis(&[i, j]);
                for k in 0..d {
                    out.t[i][j][k] = g.eval_basis(&[i, j, k]);
                }
            }
        }
        out
    }

    /// `self + s·other`.
    pub fn plus(&self, s: &Scalar, other: &Tables) -> Tables {
        let mut out = self.clone();
        for i in 0..self.d {
            for j in 0..self.d {
                axpy(&mut out.b[i][j], s, &other.b[i][j]);
                for k in 0..self.d {
                    axpy(&mut out.t[i][j][k], s, &other.t[i][j][k]);
                }
            }
        }
        out
    }

    pub fn br(&self, x: &[Scalar], y: &[Scalar]) -> Vec<Scalar> {
        let mut out = vec![self.field.zero(); self.d];
        for i in 0..self.d {
            if x[i].is_zero() {
                continue;
            }
            for j in 0..self.d {
                if !y[j].is_zero() {
                    axpy(&mut out, &(&x[i] * &y[j]), &self.b[i][j]);
                }
            }
        }
        out
    }

    pub fn tr(&self, x: &[Scalar], y: &[Scalar], z: &[Scalar]) -> Vec<Scalar> {
        let mut out = vec![self.field.zero(); self.d];
        for i in 0..self.d {
            if x[i].is_zero() {
                continue;
            }
            for j in 0..self.d {
                if y[j].is_zero() {
                    continue;
                }
                let c = &x[i] * &y[j];
                for k in 0..self.d {
                    if !z[k].is_zero() {
                        axpy(&mut out, &(&c * &z[k]), &self.t[i][j][k]);
                    }
                }
            }
        }
        out
    }

    fn e(&self, i: usize) -> Vec<Scalar> {
        unit(self.field, self.d, i)
    }

    /// Left minus right side of an axiom on basis vectors.
    pub fn ly_residual(&self, rule: usize, idx: &[usize]) -> Vec<Scalar> {
        let v: Vec<Vec<Scalar>> = idx.iter().map(|&i| self.e(i)).collect();
        let (f, n) = (self.field, self.d);
        match rule {
            1 => combo(f, n, &[(1, self.br(&v[0], &v[1])), (1, self.br(&v[1], &v[0]))]),
            2 => combo(f, n, &[(1, self.tr(&v[0], &v[1], &v[2])), (1, self.tr(&v[1], &v[0], &v[2]))]),
            3 => {
                let mut parts = Vec::new();
                for (x, y, z) in [(0, 1, 2), (1, 2, 0), (2, 0, 1)] {
                    parts.push((1, self.br(&self.br(&v[x], &v[y]), &v[z])));
                    parts.push((1, self.tr(&v[x], &v[y], &v[z])));
                }
                combo(f, n, &parts)
            }
            4 => {
                let parts: Vec<_> = [(0, 1, 2), (1, 2, 0), (2, 0, 1)]
                    .iter()
                    .map(|&(x, y, z)| (1, self.tr(&self.br(&v[x], &v[y]), &v[z], &v[3])))
                    .collect();
                combo(f, n, &parts)
            }
            5 => {
                let (x, y, u, w) = (&v[0], &v[1], &v[2], &v[3]);
                combo(
                    f,
                    n,
                    &[
                        (1, self.tr(x, y, &self.br(u, w))),
                        (-1, self.br(&self.tr(x, y, u), w)),
                        (-1, self.br(u, &self.tr(x, y, w))),
                    ],
                )
            }
            6 => {
                let (x, y, u, w, z) = (&v[0], &v[1], &v[2], &v[3], &v[4]);
                combo(
                    f,
                    n,
                    &[
                        (1, self.tr(x, y, &self.tr(u, w, z))),
                        (-1, self.tr(&self.tr(x, y, u), w, z)),
                        (-1, self.tr(u, &self.tr(x, y, w), z)),
                        (-1, self.tr(u, w, &self.tr(x, y, z))),
                    ],
                )
            }
            _ => panic!("no axiom LY{rule}"),
        }
    }

    /// The first violated axiom, scanning LY1..LY6 and tuples in
    /// lexicographic order.
    pub fn ly_first_violation(&self) -> Option<(String, Vec<usize>, Vec<Scalar>)> {
        for (rule, arity) in [(1, 2), (2, 3), (3, 3), (4, 4), (5, 4), (6, 5)] {
            for idx in all_tuples(self.d, arity) {
                let r = self.ly_residual(rule, &idx);
                if !is_zero(&r) {
                    return Some((format!("LY{rule}"), idx, r));
                }
            }
        }
        None
    }
}

/// `[d]^k` in lexicographic order.
pub fn all_tuples(d: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = vec![vec![]];
    for _ in 0..k {
        out = out
            .into_iter()
            .flat_map(|t| {
                (0..d).map(move |i| {
                    let mut u = t.clone();
                    u.push(i);
                    u
                })
            })
            .collect();
    }
    out
}

/// Labels of a witness tuple.
pub fn names(idx: &[usize]) -> Vec<String> {
    let l = default_labels(idx.iter().max().map_or(0, |m| m + 1));
    idx.iter().map(|&i| l[i].clone()).collect()
}

fn apply(m: &Matrix, v: &[Scalar]) -> Vec<Scalar> {
    (0..m.rows())
        .map(|i| {
            let mut acc = m.field().zero();
            for (a, b) in m.row(i).iter().zip(v) {
                acc = &acc + &(a * b);
            }
            acc
        })
        .collect()
}

fn rho(r: &Representation, x: &[Scalar], v: &[Scalar]) -> Vec<Scalar> {
    let mut out = vec![r.field().zero(); r.dim()];
    for (i, c) in x.iter().enumerate() {
        if !c.is_zero() {
            axpy(&mut out, c, &apply(r.rho(i), v));
        }
    }
    out
}

fn bilinear(r: &Representation, theta: bool, x: &[Scalar], y: &[Scalar], v: &[Scalar]) -> Vec<Scalar> {
    let mut out = vec![r.field().zero(); r.dim()];
    for (i, a) in x.iter().enumerate() {
        for (j, b) in y.iter().enumerate() {
            if a.is_zero() || b.is_zero() {
                continue;
            }
            let m = if theta { r.theta(i, j) } else { r.d(i, j) };
            axpy(&mut out, &(a * b), &apply(m, v));
        }
    }
    out
}

fn without_pair(xs: &[Vec<Scalar>], k: usize) -> Vec<Vec<Scalar>> {
    xs.iter().enumerate().filter(|(i, _)| *i != 2 * k && *i != 2 * k + 1).map(|(_, x)| x.clone()).collect()
}

/// The two hatted sums of the coboundary, for a cochain `c` and
/// `pairs` skew pairs of arguments; `sign(k)` is `(−1)^{n+k}` with 1-based
/// `k`.
fn hatted(tb: &Tables, r: &Representation, c: &Cochain, xs: &[Vec<Scalar>], pairs: usize, n: usize) -> Vec<Scalar> {
    let f = tb.field;
    let mut out = vec![f.zero(); r.dim()];
    for k in 1..=pairs {
        let s = if (n + k).is_multiple_of(2) { f.one() } else { -&f.one() };
        let (a, b) = (&xs[2 * k - 2], &xs[2 * k - 1]);
        let rest = without_pair(xs, k - 1);
        let dv = bilinear(r, false, a, b, &c.evaluate(&rest).unwrap());
        axpy(&mut out, &(-&s), &dv);
        for j in (2 * k + 1)..=xs.len() {
            let mut args = rest.clone();
            let pos = j - 3;
            args[pos] = tb.tr(a, b, &xs[j - 1]);
            axpy(&mut out, &s, &c.evaluate(&args).unwrap());
        }
    }
    out
}

/// `δ_I` on `2n+2` vectors, straight from the defining formula.
pub fn delta_i(tb: &Tables, r: &Representation, f: &Cochain, g: &Cochain, n: usize, xs: &[Vec<Scalar>]) -> Vec<Scalar> {
    assert_eq!(xs.len(), 2 * n + 2);
    let m = 2 * n;
    let head = &xs[..m];
    let with = |last: &Vec<Scalar>| {
        let mut a = head.to_vec();
        a.push(last.clone());
        g.evaluate(&a).unwrap()
    };
    let mut out = rho(r, &xs[m], &with(&xs[m + 1]));
    out = sub(&out, &rho(r, &xs[m + 1], &with(&xs[m])));
    out = sub(&out, &with(&tb.br(&xs[m], &xs[m + 1])));
    let h = hatted(tb, r, f, xs, n, n);
    out.iter().zip(&h).map(|(a, b)| a + b).collect()
}

/// `δ_II` on `2n+3` vectors; the second θ term feeds `x_{2n+2}` to `g`.
pub fn delta_ii(tb: &Tables, r: &Representation, g: &Cochain, n: usize, xs: &[Vec<Scalar>]) -> Vec<Scalar> {
    assert_eq!(xs.len(), 2 * n + 3);
    let m = 2 * n;
    let first = g.evaluate(&xs[..m + 1]).unwrap();
    let mut second_args = xs[..m].to_vec();
    second_args.push(xs[m + 1].clone());
    let second = g.evaluate(&second_args).unwrap();
    let mut out = bilinear(r, true, &xs[m + 1], &xs[m + 2], &first);
    out = sub(&out, &bilinear(r, true, &xs[m], &xs[m + 2], &second));
    let h = hatted(tb, r, g, xs, n + 1, n);
    out.iter().zip(&h).map(|(a, b)| a + b).collect()
}

/// `(T_g c)(x…) = M_g c(ψ_{g⁻¹} x, …)` compared with `c` on every basis tuple.
pub fn is_invariant(c: &Cochain, act: &GroupAction, module: &[Matrix]) -> bool {
    let s = c.space();
    let field = s.field();
    let d = s.alg_dim();
    let grp = act.group();
    (0..grp.order()).all(|g| {
        let inv = grp.inverse(g).unwrap();
        let psi = act.matrix(inv);
        all_tuples(d, s.arity()).iter().all(|t| {
            let args: Vec<Vec<Scalar>> = t.iter().map(|&i| apply(psi, &unit(field, d, i))).collect();
            let moved = apply(&module[g], &c.evaluate(&args).unwrap());
            moved == c.eval_basis(t)
        })
    })
}

/// Random element of the span of `basis` (coordinate vectors in `space`).
pub fn random_in(rng: &mut StdRng, space: CochainSpace, basis: &[Vec<Scalar>]) -> Cochain {
    let f = space.field();
    let mut v = vec![f.zero(); space.dim()];
    for b in basis {
        axpy(&mut v, &scalar(rng, f), b);
    }
    Cochain::new(space, v).unwrap()
}
