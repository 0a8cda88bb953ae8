//! Representations `(ρ, D, θ)` of a Lie-Yamaguti algebra on a space `V`.

use lyalg_linalg::{Field, Matrix, Scalar};

use crate::algebra::LyAlgebra;
use crate::multilinear::{tuples, Arg};
use crate::{LyaError, Result, Verdict, Violation};

/// `ρ(e_i)` for each basis index, `D(e_i, e_j)` and `θ(e_i, e_j)` for each
/// ordered pair (stored at `i * d + j`). `D` and `θ` are stored without any
/// symmetry constraint; the conditions R1–R7 decide what is admissible.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Representation {
    field: Field,
    alg_dim: usize,
    dim: usize,
    rho: Vec<Matrix>,
    d_op: Vec<Matrix>,
    theta: Vec<Matrix>,
}

impl Representation {
    pub fn new(
        field: Field,
        alg_dim: usize,
        dim: usize,
        rho: Vec<Matrix>,
        d_op: Vec<Matrix>,
        theta: Vec<Matrix>,
    ) -> Result<Self> {
        if rho.len() != alg_dim || d_op.len() != alg_dim * alg_dim || theta.len() != alg_dim * alg_dim {
            return Err(LyaError::DimensionMismatch(format!(
                "representation of a {alg_dim}-dimensional algebra needs {alg_dim} ρ and {} D/θ matrices",
                alg_dim * alg_dim
            )));
        }
        for m in rho.iter().chain(&d_op).chain(&theta) {
            if (m.rows(), m.cols()) != (dim, dim) {
                return Err(LyaError::DimensionMismatch(format!(
                    "operator is {}x{}, expected {dim}x{dim}",
                    m.rows(),
                    m.cols()
                )));
            }
            if m.field() != field {
                return Err(LyaError::Linalg(lyalg_linalg::LinalgError::FieldMismatch {
                    expected: field,
                    found: m.field(),
                }));
            }
        }
        Ok(Representation { field, alg_dim, dim, rho, d_op, theta })
    }

    /// The zero representation on `field^dim`.
    pub fn zero(field: Field, alg_dim: usize, dim: usize) -> Self {
        let z = Matrix::zeros(field, dim, dim);
        Representation {
            field,
            alg_dim,
            dim,
            rho: vec![z.clone(); alg_dim],
            d_op: vec![z.clone(); alg_dim * alg_dim],
            theta: vec![z; alg_dim * alg_dim],
        }
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn alg_dim(&self) -> usize {
        self.alg_dim
    }

    /// Dimension of `V`.
    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn rho(&self, i: usize) -> &Matrix {
        &self.rho[i]
    }

    pub fn d(&self, i: usize, j: usize) -> &Matrix {
        &self.d_op[i * self.alg_dim + j]
    }

    pub fn theta(&self, i: usize, j: usize) -> &Matrix {
        &self.theta[i * self.alg_dim + j]
    }

    pub fn rho_mut(&mut self, i: usize) -> &mut Matrix {
        &mut self.rho[i]
    }

    pub fn d_mut(&mut self, i: usize, j: usize) -> &mut Matrix {
        &mut self.d_op[i * self.alg_dim + j]
    }

    pub fn theta_mut(&mut self, i: usize, j: usize) -> &mut Matrix {
        &mut self.theta[i * self.alg_dim + j]
    }

    /// `ρ(x)` for a coordinate vector `x`.
    pub fn rho_of(&self, x: &[Scalar]) -> Matrix {
        let mut out = Matrix::zeros(self.field, self.dim, self.dim);
        for (i, c) in x.iter().enumerate() {
            if !c.is_zero() {
                out = out.add(&self.rho[i].scale(c)).expect("same shape");
            }
        }
        out
    }

    fn bilinear(&self, ops: &[Matrix], x: &[Scalar], y: &[Scalar]) -> Matrix {
        let mut out = Matrix::zeros(self.field, self.dim, self.dim);
        for (i, a) in x.iter().enumerate().filter(|(_, a)| !a.is_zero()) {
            for (j, b) in y.iter().enumerate().filter(|(_, b)| !b.is_zero()) {
                let c = a * b;
                out = out.add(&ops[i * self.alg_dim + j].scale(&c)).expect("same shape");
            }
        }
        out
    }

    pub fn d_of(&self, x: &[Scalar], y: &[Scalar]) -> Matrix {
        self.bilinear(&self.d_op, x, y)
    }

    pub fn theta_of(&self, x: &[Scalar], y: &[Scalar]) -> Matrix {
        self.bilinear(&self.theta, x, y)
    }

    pub fn all_matrices(&self) -> impl Iterator<Item = &Matrix> {
        self.rho.iter().chain(&self.d_op).chain(&self.theta)
    }
}

/// `ρ(x)y = [x, y]`, `D(x, y)z = {x, y, z}`, `θ(x, y)z = {z, x, y}`.
pub fn adjoint_rep(a: &LyAlgebra) -> Result<Representation> {
    a.require_verified()?;
    Ok(adjoint_unchecked(a))
}

pub(crate) fn adjoint_unchecked(a: &LyAlgebra) -> Representation {
    let f = a.field();
    let d = a.dim();
    let col_matrix = |cols: Vec<Vec<Scalar>>| Matrix::from_fn(f, d, d, |r, c| cols[c][r].clone());
    let rho = (0..d)
        .map(|i| col_matrix((0..d).map(|j| a.binary().apply_basis(&[i, j])).collect()))
        .collect();
    let mut d_op = Vec::with_capacity(d * d);
    let mut theta = Vec::with_capacity(d * d);
    for i in 0..d {
        for j in 0..d {
            d_op.push(col_matrix((0..d).map(|k| a.ternary().apply_basis(&[i, j, k])).collect()));
            theta.push(col_matrix((0..d).map(|k| a.ternary().apply_basis(&[k, i, j])).collect()));
        }
    }
    Representation { field: f, alg_dim: d, dim: d, rho, d_op, theta }
}

/// Whether `r` is exactly the adjoint representation of `a`.
pub fn is_adjoint(a: &LyAlgebra, r: &Representation) -> bool {
    r.alg_dim == a.dim() && r.dim == a.dim() && *r == adjoint_unchecked(a)
}

fn lin(parts: &[(i64, Matrix)], field: Field, n: usize) -> Matrix {
    let mut out = Matrix::zeros(field, n, n);
    for (s, m) in parts {
        out = out.add(&m.scale(&field.from_i64(*s))).expect("same shape");
    }
    out
}

fn mm(a: &Matrix, b: &Matrix) -> Matrix {
    a.mul(b).expect("square operators of equal size")
}

/// Checks R1–R7 as matrix identities on all basis tuples.
pub fn check_representation(a: &LyAlgebra, r: &Representation) -> Result<Verdict> {
    if r.alg_dim != a.dim() {
        return Err(LyaError::DimensionMismatch(format!(
            "representation is for a {}-dimensional algebra, algebra has dimension {}",
            r.alg_dim,
            a.dim()
        )));
    }
    if r.field != a.field() {
        return Err(LyaError::Linalg(lyalg_linalg::LinalgError::FieldMismatch {
            expected: a.field(),
            found: r.field,
        }));
    }
    let f = a.field();
    let n = r.dim;
    let d = a.dim();
    let unit = |i: usize| {
        let mut v = vec![f.zero(); d];
        v[i] = f.one();
        v
    };
    let br = |x: usize, y: usize| a.bracket(Arg::Basis(x), Arg::Basis(y));
    let tr = |x: usize, y: usize, z: usize| a.triple(Arg::Basis(x), Arg::Basis(y), Arg::Basis(z));
    let rho = |i: usize| r.rho(i).clone();
    let dd = |i: usize, j: usize| r.d(i, j).clone();
    let th = |i: usize, j: usize| r.theta(i, j).clone();

    type Rule<'a> = (&'static str, usize, Box<dyn Fn(&[usize]) -> Matrix + 'a>);
    let rules: Vec<Rule<'_>> = vec![
        (
            "R1",
            2,
            Box::new(|t: &[usize]| {
                let (x, y) = (t[0], t[1]);
                lin(
                    &[
                        (1, dd(x, y)),
                        (-1, th(y, x)),
                        (1, th(x, y)),
                        (1, r.rho_of(&br(x, y))),
                        (-1, mm(&rho(x), &rho(y))),
                        (1, mm(&rho(y), &rho(x))),
                    ],
                    f,
                    n,
                )
            }),
        ),
        (
            "R2",
            3,
            Box::new(|t: &[usize]| {
                let (x, y, z) = (t[0], t[1], t[2]);
                lin(
                    &[
                        (1, r.d_of(&br(x, y), &unit(z))),
                        (1, r.d_of(&br(y, z), &unit(x))),
                        (1, r.d_of(&br(z, x), &unit(y))),
                    ],
                    f,
                    n,
                )
            }),
        ),
        (
            "R3",
            3,
            Box::new(|t: &[usize]| {
                let (x, y, z) = (t[0], t[1], t[2]);
                lin(
                    &[
                        (1, r.theta_of(&br(x, y), &unit(z))),
                        (-1, mm(&th(x, z), &rho(y))),
                        (1, mm(&th(y, z), &rho(x))),
                    ],
                    f,
                    n,
                )
            }),
        ),
        (
            "R4",
            3,
            Box::new(|t: &[usize]| {
                let (x, y, z) = (t[0], t[1], t[2]);
                lin(
                    &[
                        (1, mm(&dd(x, y), &rho(z))),
                        (-1, mm(&rho(z), &dd(x, y))),
                        (-1, r.rho_of(&tr(x, y, z))),
                    ],
                    f,
                    n,
                )
            }),
        ),
        (
            "R5",
            3,
            Box::new(|t: &[usize]| {
                let (x, y, z) = (t[0], t[1], t[2]);
                lin(
                    &[
                        (1, r.theta_of(&unit(x), &br(y, z))),
                        (-1, mm(&rho(y), &th(x, z))),
                        (1, mm(&rho(z), &th(x, y))),
                    ],
                    f,
                    n,
                )
            }),
        ),
        (
            "R6",
            4,
            Box::new(|t: &[usize]| {
                let (x, y, u, v) = (t[0], t[1], t[2], t[3]);
                lin(
                    &[
                        (1, mm(&dd(x, y), &th(u, v))),
                        (-1, mm(&th(u, v), &dd(x, y))),
                        (-1, r.theta_of(&tr(x, y, u), &unit(v))),
                        (-1, r.theta_of(&unit(u), &tr(x, y, v))),
                    ],
                    f,
                    n,
                )
            }),
        ),
        (
            "R7",
            4,
            Box::new(|t: &[usize]| {
                let (x, y, z, u) = (t[0], t[1], t[2], t[3]);
                lin(
                    &[
                        (1, r.theta_of(&unit(x), &tr(y, z, u))),
                        (-1, mm(&th(z, u), &th(x, y))),
                        (1, mm(&th(y, u), &th(x, z))),
                        (-1, mm(&dd(y, z), &th(x, u))),
                    ],
                    f,
                    n,
                )
            }),
        ),
    ];

    for (name, arity, rule) in &rules {
        for t in tuples(d, *arity) {
            let m = rule(&t);
            if !m.is_zero() {
                return Ok(Verdict::Fail(Violation::new(*name, a.witness(&t), m.entries().to_vec())));
            }
        }
    }
    Ok(Verdict::Pass)
}
