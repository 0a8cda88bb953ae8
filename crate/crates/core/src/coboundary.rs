//! Coboundary operators.
//!
//! * [`delta1`]: `C^1(L,L) → C^2(L,L) × C^3(L,L)`.
//! * [`delta23`]: the order-one linearisation of the deformation equations,
//!   whose kernel is the space of `(2,3)`-cocycles.
//! * [`CoboundaryOperator`] / [`delta_general`]: the pair coboundary
//!   `C^{2n} × C^{2n+1} → C^{2n+2} × C^{2n+3}` with coefficients in a
//!   representation.

use lyalg_linalg::{dot, Field, Matrix, Scalar, Subspace};

use crate::algebra::{cyclic, LyAlgebra};
use crate::cochain::{pair_spaces, Cochain, CochainPair, CochainSpace};
use crate::multilinear::{tuples, Arg, Multilinear};
use crate::representation::{check_representation, Representation};
use crate::{LyaError, Result, Verdict};

/// The matrix of a linear map `L → L` stored as a 1-cochain: coordinate
/// `r·d + v` is the `v`-component of `φ(e_r)`.
pub fn cochain_to_matrix(phi: &Cochain) -> Matrix {
    let s = phi.space();
    let d = s.alg_dim();
    Matrix::from_fn(s.field(), d, d, |v, r| phi.coeffs()[r * d + v].clone())
}

pub fn matrix_to_cochain(m: &Matrix) -> Cochain {
    let d = m.rows();
    let space = CochainSpace::new(m.field(), 1, d, d).expect("arity 1");
    let coeffs = (0..d * d).map(|c| m[(c % d, c / d)].clone()).collect();
    Cochain::new(space, coeffs).expect("d² coefficients")
}

fn check_adjoint_space(a: &LyAlgebra, s: &CochainSpace, arity: usize) -> Result<()> {
    if s.arity() != arity || s.alg_dim() != a.dim() || s.dim_v() != a.dim() || s.field() != a.field() {
        return Err(LyaError::DimensionMismatch(format!(
            "expected an adjoint {arity}-cochain on a {}-dimensional algebra, got arity {} with d = {}, dim V = {}",
            a.dim(),
            s.arity(),
            s.alg_dim(),
            s.dim_v()
        )));
    }
    Ok(())
}

/// `δ¹φ = ([φx,y] + [x,φy] − φ[x,y], {φx,y,z} + {x,φy,z} + {x,y,φz} − φ{x,y,z})`.
pub fn delta1(phi: &Cochain, a: &LyAlgebra) -> Result<CochainPair> {
    a.require_verified()?;
    check_adjoint_space(a, phi.space(), 1)?;
    let m = cochain_to_matrix(phi);
    let col = |i: usize| m.column(i);
    let (even, odd) = pair_spaces(a.field(), 1, a.dim(), a.dim())?;
    let mut f = Vec::with_capacity(even.dim());
    for t in even.canonical_tuples() {
        let (x, y) = (t[0], t[1]);
        let mut v = a.bracket(Arg::Vector(&col(x)), Arg::Basis(y));
        add_into(&mut v, &a.bracket(Arg::Basis(x), Arg::Vector(&col(y))));
        sub_into(&mut v, &m.mul_vec(&a.bracket(Arg::Basis(x), Arg::Basis(y)))?);
        f.extend(v);
    }
    let mut g = Vec::with_capacity(odd.dim());
    for t in odd.canonical_tuples() {
        let (x, y, z) = (t[0], t[1], t[2]);
        let mut v = a.triple(Arg::Vector(&col(x)), Arg::Basis(y), Arg::Basis(z));
        add_into(&mut v, &a.triple(Arg::Basis(x), Arg::Vector(&col(y)), Arg::Basis(z)));
        add_into(&mut v, &a.triple(Arg::Basis(x), Arg::Basis(y), Arg::Vector(&col(z))));
        sub_into(&mut v, &m.mul_vec(&a.triple(Arg::Basis(x), Arg::Basis(y), Arg::Basis(z)))?);
        g.extend(v);
    }
    CochainPair::new(Cochain::new(even, f)?, Cochain::new(odd, g)?)
}

/// Matrix of [`delta1`]: columns indexed by `C^1` coordinates, rows by the
/// stacked `C^2 × C^3` coordinates.
pub fn delta1_matrix(a: &LyAlgebra) -> Result<Matrix> {
    let s = CochainSpace::new(a.field(), 1, a.dim(), a.dim())?;
    let cols = (0..s.dim())
        .map(|c| delta1(&s.basis_cochain(c), a).map(|p| p.stacked()))
        .collect::<Result<Vec<_>>>()?;
    let (even, odd) = pair_spaces(a.field(), 1, a.dim(), a.dim())?;
    Ok(columns_to_matrix(a.field(), even.dim() + odd.dim(), &cols))
}

fn columns_to_matrix(field: Field, rows: usize, cols: &[Vec<Scalar>]) -> Matrix {
    Matrix::from_fn(field, rows, cols.len(), |i, j| cols[j][i].clone())
}

fn add_into(acc: &mut [Scalar], v: &[Scalar]) {
    for (a, b) in acc.iter_mut().zip(v) {
        *a += b;
    }
}

fn sub_into(acc: &mut [Scalar], v: &[Scalar]) {
    for (a, b) in acc.iter_mut().zip(v) {
        *a -= b;
    }
}

pub const BLOCK_TAGS: [&str; 4] =
    ["cyclic-binary", "cyclic-ternary", "derivation-binary", "derivation-ternary"];

/// Residual of the four deformation-equation blocks, each a full
/// multilinear map into `L`:
///
/// * `cyclic-binary` (3-linear): `↺(Σ f_i(f_j(x,y),z) + g_n(x,y,z))`
/// * `cyclic-ternary` (4-linear): `↺_{xyz} Σ g_i(f_j(x,y),z,u)`
/// * `derivation-binary` (4-linear):
///   `Σ g_i(x,y,f_j(u,v)) − f_i(g_j(x,y,u),v) − f_i(u,g_j(x,y,v))`
/// * `derivation-ternary` (5-linear):
///   `Σ g_i(x,y,g_j(u,v,w)) − g_i(g_j(x,y,u),v,w) − g_i(u,g_j(x,y,v),w) − g_i(u,v,g_j(x,y,w))`
///
/// with all sums over `i + j = n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Delta23Residual {
    pub blocks: [Multilinear; 4],
}

impl Delta23Residual {
    pub fn is_zero(&self) -> bool {
        self.blocks.iter().all(Multilinear::is_zero)
    }

    /// All four blocks concatenated.
    pub fn stacked(&self) -> Vec<Scalar> {
        self.blocks.iter().flat_map(|b| b.values().iter().cloned()).collect()
    }

    /// First nonzero entry: block tag, basis tuple and residual vector.
    pub fn first_violation(&self) -> Option<(&'static str, Vec<usize>, Vec<Scalar>)> {
        for (tag, b) in BLOCK_TAGS.iter().zip(&self.blocks) {
            for t in tuples(b.dim(), b.arity()) {
                let v = b.at(&t);
                if v.iter().any(|c| !c.is_zero()) {
                    return Some((tag, t, v.to_vec()));
                }
            }
        }
        None
    }

    pub fn add(&self, other: &Delta23Residual) -> Delta23Residual {
        let mut blocks = self.blocks.clone();
        for (a, b) in blocks.iter_mut().zip(&other.blocks) {
            a.add_assign(b);
        }
        Delta23Residual { blocks }
    }
}

/// Order-`n` residual of a jet given as full tables `fs[0..=n]`,
/// `gs[0..=n]`, where index 0 holds the algebra's own brackets.
pub(crate) fn order_residual(fs: &[&Multilinear], gs: &[&Multilinear], n: usize) -> Delta23Residual {
    let field = fs[0].field();
    let d = fs[0].dim();
    let pairs: Vec<(usize, usize)> = (0..=n).map(|i| (i, n - i)).collect();
    let bin = |m: &Multilinear, x: Arg<'_>, y: Arg<'_>| m.apply(&[x, y]);
    let ter = |m: &Multilinear, x: Arg<'_>, y: Arg<'_>, z: Arg<'_>| m.apply(&[x, y, z]);
    use Arg::Basis as B;

    let a_block = Multilinear::from_fn(field, 3, d, d, |t| {
        let mut acc = vec![field.zero(); d];
        for (x, y, z) in cyclic(t[0], t[1], t[2]) {
            for &(i, j) in &pairs {
                let inner = fs[j].at(&[x, y]);
                add_into(&mut acc, &bin(fs[i], Arg::Vector(inner), B(z)));
            }
            add_into(&mut acc, gs[n].at(&[x, y, z]));
        }
        acc
    });

    let b_block = Multilinear::from_fn(field, 4, d, d, |t| {
        let mut acc = vec![field.zero(); d];
        let u = t[3];
        for (x, y, z) in cyclic(t[0], t[1], t[2]) {
            for &(i, j) in &pairs {
                let inner = fs[j].at(&[x, y]);
                add_into(&mut acc, &ter(gs[i], Arg::Vector(inner), B(z), B(u)));
            }
        }
        acc
    });

    let c_block = Multilinear::from_fn(field, 4, d, d, |t| {
        let (x, y, u, v) = (t[0], t[1], t[2], t[3]);
        let mut acc = vec![field.zero(); d];
        for &(i, j) in &pairs {
            add_into(&mut acc, &ter(gs[i], B(x), B(y), Arg::Vector(fs[j].at(&[u, v]))));
            sub_into(&mut acc, &bin(fs[i], Arg::Vector(gs[j].at(&[x, y, u])), B(v)));
            sub_into(&mut acc, &bin(fs[i], B(u), Arg::Vector(gs[j].at(&[x, y, v]))));
        }
        acc
    });

    let d_block = Multilinear::from_fn(field, 5, d, d, |t| {
        let (x, y, u, v, w) = (t[0], t[1], t[2], t[3], t[4]);
        let mut acc = vec![field.zero(); d];
        for &(i, j) in &pairs {
            add_into(&mut acc, &ter(gs[i], B(x), B(y), Arg::Vector(gs[j].at(&[u, v, w]))));
            sub_into(&mut acc, &ter(gs[i], Arg::Vector(gs[j].at(&[x, y, u])), B(v), B(w)));
            sub_into(&mut acc, &ter(gs[i], B(u), Arg::Vector(gs[j].at(&[x, y, v])), B(w)));
            sub_into(&mut acc, &ter(gs[i], B(u), B(v), Arg::Vector(gs[j].at(&[x, y, w]))));
        }
        acc
    });

    Delta23Residual { blocks: [a_block, b_block, c_block, d_block] }
}

/// The `(2,3)`-cocycle residual of an adjoint pair `(f, g) ∈ C^2 × C^3`.
pub fn delta23(a: &LyAlgebra, p: &CochainPair) -> Result<Delta23Residual> {
    a.require_verified()?;
    check_adjoint_space(a, &p.f.space().clone(), 2)?;
    check_adjoint_space(a, &p.g.space().clone(), 3)?;
    let f1 = p.f.to_multilinear();
    let g1 = p.g.to_multilinear();
    Ok(order_residual(&[a.binary(), &f1], &[a.ternary(), &g1], 1))
}

/// Matrix of [`delta23`] against the stacked `C^2 × C^3` basis.
pub fn delta23_matrix(a: &LyAlgebra) -> Result<Matrix> {
    a.require_verified()?;
    let (even, odd) = pair_spaces(a.field(), 1, a.dim(), a.dim())?;
    let total = even.dim() + odd.dim();
    let mut cols = Vec::with_capacity(total);
    for c in 0..total {
        let mut v = vec![a.field().zero(); total];
        v[c] = a.field().one();
        let p = CochainPair::from_stacked(even, odd, &v)?;
        cols.push(delta23(a, &p)?.stacked());
    }
    let rows = cols.first().map_or_else(|| residual_len(a.dim()), Vec::len);
    Ok(columns_to_matrix(a.field(), rows, &cols))
}

fn residual_len(d: usize) -> usize {
    d.pow(4) + 2 * d.pow(5) + d.pow(6)
}

/// A nonzero value of `δ(p)` forced at a tuple where a cochain must vanish
/// (diagonal pair) or be antisymmetric (reversed pair), as a linear form in
/// the stacked source coordinates, one form per component of `V`.
#[derive(Clone, Debug, PartialEq, Eq)]
struct Defect {
    odd: bool,
    tuple: Vec<usize>,
    forms: Vec<Vec<Scalar>>,
}

/// The pair coboundary at a fixed level, assembled once as an exact matrix.
#[derive(Clone, Debug)]
pub struct CoboundaryOperator {
    level: usize,
    source: (CochainSpace, CochainSpace),
    target: (CochainSpace, CochainSpace),
    matrix: Matrix,
    defects: Vec<Defect>,
    labels: Vec<String>,
}

struct Builder<'a> {
    a: &'a LyAlgebra,
    r: &'a Representation,
    source: (CochainSpace, CochainSpace),
    cols: usize,
}

type Sparse = Vec<(usize, Scalar)>;

enum Op<'a> {
    Id,
    M(&'a Matrix),
}

impl Builder<'_> {
    fn basis(&self, i: usize) -> Sparse {
        vec![(i, self.a.field().one())]
    }

    fn sparse(v: &[Scalar]) -> Sparse {
        v.iter().enumerate().filter(|(_, c)| !c.is_zero()).map(|(i, c)| (i, c.clone())).collect()
    }

    fn bracket(&self, x: usize, y: usize) -> Sparse {
        Self::sparse(self.a.binary().at(&[x, y]))
    }

    fn triple(&self, x: usize, y: usize, z: usize) -> Sparse {
        Self::sparse(self.a.ternary().at(&[x, y, z]))
    }

    /// `acc += sign · op(h(args))` where `h` is the even (`f`) or odd (`g`)
    /// source component, as linear forms in the source coordinates.
    fn add(&self, acc: &mut [Vec<Scalar>], sign: i64, op: Op<'_>, odd: bool, args: &[Sparse]) {
        if args.iter().any(Vec::is_empty) {
            return;
        }
        let field = self.a.field();
        let (space, offset) =
            if odd { (&self.source.1, self.source.0.dim()) } else { (&self.source.0, 0) };
        let dv = space.dim_v();
        let sign = field.from_i64(sign);
        let mut idx = vec![0usize; args.len()];
        let mut tuple = vec![0usize; args.len()];
        loop {
            let mut c = sign.clone();
            for (s, &k) in idx.iter().enumerate() {
                let (i, ref x) = args[s][k];
                tuple[s] = i;
                c = &c * x;
            }
            if let Some((t, positive)) = space.locate(&tuple) {
                let c = c.signed(positive);
                let base = offset + space.coordinate(t, 0);
                for v in 0..dv {
                    match op {
                        Op::Id => acc[v][base + v] += &c,
                        Op::M(m) => {
                            for (w, row) in acc.iter_mut().enumerate() {
                                let e = &m[(w, v)];
                                if !e.is_zero() {
                                    row[base + v].add_mul(&c, e);
                                }
                            }
                        }
                    }
                }
            }
            let mut s = args.len();
            loop {
                if s == 0 {
                    return;
                }
                s -= 1;
                idx[s] += 1;
                if idx[s] < args[s].len() {
                    break;
                }
                idx[s] = 0;
            }
        }
    }

    fn zero_forms(&self) -> Vec<Vec<Scalar>> {
        vec![vec![self.a.field().zero(); self.cols]; self.r.dim()]
    }

    fn hat(&self, x: &[usize], k: usize) -> Vec<Sparse> {
        x.iter()
            .enumerate()
            .filter(|&(i, _)| i != 2 * k && i != 2 * k + 1)
            .map(|(_, &i)| self.basis(i))
            .collect()
    }

    /// Shared hatted sums of both components: `k` runs over the leading
    /// `pairs` slot pairs of `x`.
    fn hatted(&self, acc: &mut [Vec<Scalar>], x: &[usize], n: usize, pairs: usize, odd: bool) {
        for k in 0..pairs {
            // 1-based k' = k + 1: sign (−1)^{n+k'+1} = (−1)^{n+k}
            let s_d = if (n + k).is_multiple_of(2) { 1 } else { -1 };
            let (p, q) = (x[2 * k], x[2 * k + 1]);
            let hat = self.hat(x, k);
            self.add(acc, s_d, Op::M(self.r.d(p, q)), odd, &hat);
            for j in 2 * k + 2..x.len() {
                let mut args = hat.clone();
                // x_j sits at position j − 2 once the pair is removed
                args[j - 2] = self.triple(p, q, x[j]);
                self.add(acc, -s_d, Op::Id, odd, &args);
            }
        }
    }

    fn delta_i(&self, x: &[usize], n: usize) -> Vec<Vec<Scalar>> {
        let mut acc = self.zero_forms();
        let m = 2 * n;
        let head: Vec<Sparse> = x[..m].iter().map(|&i| self.basis(i)).collect();
        let with = |last: Sparse| {
            let mut v = head.clone();
            v.push(last);
            v
        };
        self.add(&mut acc, 1, Op::M(self.r.rho(x[m])), true, &with(self.basis(x[m + 1])));
        self.add(&mut acc, -1, Op::M(self.r.rho(x[m + 1])), true, &with(self.basis(x[m])));
        self.add(&mut acc, -1, Op::Id, true, &with(self.bracket(x[m], x[m + 1])));
        self.hatted(&mut acc, x, n, n, false);
        acc
    }

    fn delta_ii(&self, x: &[usize], n: usize) -> Vec<Vec<Scalar>> {
        let mut acc = self.zero_forms();
        let m = 2 * n;
        let basis = |xs: &[usize]| xs.iter().map(|&i| self.basis(i)).collect::<Vec<_>>();
        self.add(&mut acc, 1, Op::M(self.r.theta(x[m + 1], x[m + 2])), true, &basis(&x[..m + 1]));
        let mut args = basis(&x[..m]);
        args.push(self.basis(x[m + 1]));
        self.add(&mut acc, -1, Op::M(self.r.theta(x[m], x[m + 2])), true, &args);
        self.hatted(&mut acc, x, n, n + 1, true);
        acc
    }
}

fn is_canonical(t: &[usize]) -> bool {
    t.chunks_exact(2).all(|p| p[0] < p[1])
}

impl CoboundaryOperator {
    /// Assembles `δ` at level `n` (source `C^{2n} × C^{2n+1}`). Requires a
    /// verified algebra and a representation passing R1–R7.
    pub fn new(a: &LyAlgebra, r: &Representation, level: usize) -> Result<Self> {
        a.require_verified()?;
        if let Verdict::Fail(v) = check_representation(a, r)? {
            return Err(LyaError::Violation(v));
        }
        Self::assemble(a, r, level)
    }

    pub(crate) fn assemble(a: &LyAlgebra, r: &Representation, level: usize) -> Result<Self> {
        let field = a.field();
        let source = pair_spaces(field, level, a.dim(), r.dim())?;
        let target = pair_spaces(field, level + 1, a.dim(), r.dim())?;
        let cols = source.0.dim() + source.1.dim();
        let b = Builder { a, r, source, cols };
        let dv = r.dim();

        let mut matrix = Matrix::zeros(field, target.0.dim() + target.1.dim(), cols);
        let mut defects = Vec::new();
        for (odd, space, offset) in [(false, target.0, 0), (true, target.1, target.0.dim())] {
            let eval = |x: &[usize]| if odd { b.delta_ii(x, level) } else { b.delta_i(x, level) };
            for (t, x) in space.canonical_tuples().iter().enumerate() {
                let forms = eval(x);
                for (w, form) in forms.into_iter().enumerate() {
                    matrix.row_mut(offset + space.coordinate(t, w)).clone_from_slice(&form);
                }
            }
            for x in tuples(a.dim(), space.arity()).filter(|x| !is_canonical(x)) {
                let mut forms = eval(&x);
                if let Some((t, positive)) = space.locate(&x) {
                    for (w, form) in forms.iter_mut().enumerate() {
                        let row = matrix.row(offset + space.coordinate(t, w));
                        for (c, e) in form.iter_mut().zip(row) {
                            if positive {
                                *c -= e;
                            } else {
                                *c += e;
                            }
                        }
                    }
                }
                if forms.iter().flatten().any(|c| !c.is_zero()) {
                    defects.push(Defect { odd, tuple: x, forms });
                }
            }
        }
        debug_assert!(dv == 0 || matrix.cols() == cols);
        Ok(CoboundaryOperator { level, source, target, matrix, defects, labels: a.labels().to_vec() })
    }

    pub fn level(&self) -> usize {
        self.level
    }

    pub fn source(&self) -> (CochainSpace, CochainSpace) {
        self.source
    }

    pub fn target(&self) -> (CochainSpace, CochainSpace) {
        self.target
    }

    /// Rows: stacked target coordinates. Columns: stacked source coordinates.
    pub fn matrix(&self) -> &Matrix {
        &self.matrix
    }

    /// Whether every output is automatically a cochain.
    pub fn is_defect_free(&self) -> bool {
        self.defects.is_empty()
    }

    /// Span of the defect forms; `δ(p)` is a cochain iff `p` is annihilated
    /// by all of them.
    pub fn defect_forms(&self) -> Matrix {
        let rows: Vec<Vec<Scalar>> = self.defects.iter().flat_map(|d| d.forms.iter().cloned()).collect();
        Matrix::from_rows(self.matrix.field(), self.matrix.cols(), rows).expect("uniform width")
    }

    /// Source pairs whose image is a cochain.
    pub fn admissible_domain(&self) -> Subspace {
        if self.defects.is_empty() {
            return Subspace::full(self.matrix.field(), self.matrix.cols());
        }
        self.defect_forms().nullspace()
    }

    /// `ker δ`, including the vanishing of every defect form.
    pub fn kernel(&self) -> Subspace {
        if self.defects.is_empty() {
            return self.matrix.nullspace();
        }
        self.matrix.vstack(&self.defect_forms()).expect("same width").nullspace()
    }

    /// `δ` applied to the admissible domain.
    pub fn image(&self) -> Subspace {
        if self.defects.is_empty() {
            return self.matrix.image();
        }
        self.admissible_domain().map(&self.matrix).expect("same width")
    }

    /// Applies `δ`, failing with the first tuple at which the output would
    /// not be a cochain.
    pub fn apply(&self, p: &CochainPair) -> Result<CochainPair> {
        if p.spaces() != self.source {
            return Err(LyaError::DimensionMismatch(format!(
                "pair of level {} given to the level-{} coboundary",
                p.level(),
                self.level
            )));
        }
        let v = p.stacked();
        let field = self.matrix.field();
        for d in &self.defects {
            let residual: Vec<Scalar> = d.forms.iter().map(|f| dot(field, f, &v)).collect();
            if residual.iter().any(|c| !c.is_zero()) {
                let mut witness: Vec<String> = d.tuple.iter().map(|&i| self.labels[i].clone()).collect();
                witness.insert(0, if d.odd { "δ_II".into() } else { "δ_I".into() });
                return Err(LyaError::IncompatibleRepresentation { witness, residual });
            }
        }
        let out = self.matrix.mul_vec(&v)?;
        CochainPair::from_stacked(self.target.0, self.target.1, &out)
    }

    /// Applies the matrix to a stacked coordinate vector without the defect
    /// check.
    pub fn apply_stacked(&self, v: &[Scalar]) -> Result<Vec<Scalar>> {
        Ok(self.matrix.mul_vec(v)?)
    }
}

/// `δ(p)` for `p ∈ C^{2n}(L,V) × C^{2n+1}(L,V)`.
pub fn delta_general(a: &LyAlgebra, r: &Representation, p: &CochainPair) -> Result<CochainPair> {
    CoboundaryOperator::new(a, r, p.level())?.apply(p)
}
