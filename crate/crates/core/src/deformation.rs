//! Truncated one-parameter deformations.
//!
//! A jet of order `N` stores `f_1..f_N ∈ C^2(L,L)` and `g_1..g_N ∈ C^3(L,L)`;
//! `f_0`, `g_0` are the algebra's own brackets. Isomorphism jets store
//! `φ_0 = id, φ_1, …, φ_N` as matrices. Gauge transformation uses
//! `f'_t = φ_t⁻¹ f_t(φ_t ·, φ_t ·)` and likewise for `g_t`.

use lyalg_linalg::{Field, Matrix, Scalar, Subspace};

use crate::algebra::LyAlgebra;
use crate::coboundary::{delta1_matrix, delta23_matrix, matrix_to_cochain, order_residual, Delta23Residual};
use crate::cochain::{pair_spaces, Cochain, CochainPair, CochainSpace};
use crate::cohomology::{self, CohomologyResult};
use crate::equivariant::{equivariant_subspace, induced_action, EquivariantModuleAction, GroupAction};
use crate::multilinear::Multilinear;
use crate::representation::adjoint_rep;
use crate::{LyaError, Result};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DeformationJet {
    algebra: LyAlgebra,
    f: Vec<Cochain>,
    g: Vec<Cochain>,
}

impl DeformationJet {
    /// `f[i]`, `g[i]` hold the order-`i+1` terms.
    pub fn new(algebra: LyAlgebra, f: Vec<Cochain>, g: Vec<Cochain>) -> Result<Self> {
        algebra.require_verified()?;
        if f.is_empty() || f.len() != g.len() {
            return Err(LyaError::Malformed(format!(
                "a jet needs the same positive number of binary and ternary terms, got {} and {}",
                f.len(),
                g.len()
            )));
        }
        let (even, odd) = pair_spaces(algebra.field(), 1, algebra.dim(), algebra.dim())?;
        for (i, (fi, gi)) in f.iter().zip(&g).enumerate() {
            if *fi.space() != even || *gi.space() != odd {
                return Err(LyaError::DimensionMismatch(format!(
                    "order-{} terms are not adjoint 2- and 3-cochains",
                    i + 1
                )));
            }
        }
        Ok(DeformationJet { algebra, f, g })
    }

    pub fn null(algebra: LyAlgebra, order: usize) -> Result<Self> {
        let (even, odd) = pair_spaces(algebra.field(), 1, algebra.dim(), algebra.dim())?;
        Self::new(algebra, vec![even.zero(); order], vec![odd.zero(); order])
    }

    pub fn algebra(&self) -> &LyAlgebra {
        &self.algebra
    }

    pub fn order(&self) -> usize {
        self.f.len()
    }

    /// Order-`i` binary term, `1 ≤ i ≤ N`.
    pub fn f(&self, i: usize) -> &Cochain {
        &self.f[i - 1]
    }

    pub fn g(&self, i: usize) -> &Cochain {
        &self.g[i - 1]
    }

    pub fn term(&self, i: usize) -> CochainPair {
        CochainPair { f: self.f[i - 1].clone(), g: self.g[i - 1].clone() }
    }

    /// The first `order` terms.
    pub fn truncate(&self, order: usize) -> Result<Self> {
        if order == 0 || order > self.order() {
            return Err(LyaError::Malformed(format!(
                "cannot truncate a jet of order {} to order {order}",
                self.order()
            )));
        }
        Self::new(self.algebra.clone(), self.f[..order].to_vec(), self.g[..order].to_vec())
    }

    pub fn is_null(&self) -> bool {
        self.f.iter().chain(&self.g).all(Cochain::is_zero)
    }

    fn tables(&self) -> (Vec<Multilinear>, Vec<Multilinear>) {
        let mut fs = vec![self.algebra.binary().clone()];
        let mut gs = vec![self.algebra.ternary().clone()];
        fs.extend(self.f.iter().map(Cochain::to_multilinear));
        gs.extend(self.g.iter().map(Cochain::to_multilinear));
        (fs, gs)
    }

    fn residual(&self, fs: &[Multilinear], gs: &[Multilinear], n: usize) -> Delta23Residual {
        let fr: Vec<&Multilinear> = fs[..=n].iter().collect();
        let gr: Vec<&Multilinear> = gs[..=n].iter().collect();
        order_residual(&fr, &gr, n)
    }
}

/// `φ_t = id + φ_1 t + … + φ_N t^N`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IsomorphismJet {
    phi: Vec<Matrix>,
}

impl IsomorphismJet {
    /// `phi[0]` must be the identity.
    pub fn new(phi: Vec<Matrix>) -> Result<Self> {
        let Some(first) = phi.first() else {
            return Err(LyaError::Malformed("an isomorphism jet needs φ_0".into()));
        };
        if !first.is_identity() {
            return Err(LyaError::Malformed("φ_0 must be the identity".into()));
        }
        let (f, d) = (first.field(), first.rows());
        if phi.iter().any(|m| m.field() != f || (m.rows(), m.cols()) != (d, d)) {
            return Err(LyaError::DimensionMismatch(format!("every φ_i must be a {d}x{d} matrix over {f}")));
        }
        Ok(IsomorphismJet { phi })
    }

    pub fn identity(field: Field, dim: usize, order: usize) -> Self {
        let mut phi = vec![Matrix::zeros(field, dim, dim); order + 1];
        phi[0] = Matrix::identity(field, dim);
        IsomorphismJet { phi }
    }

    /// `id − h t^r`, truncated at `order`.
    pub fn elementary(h: &Matrix, r: usize, order: usize) -> Self {
        let mut j = Self::identity(h.field(), h.rows(), order);
        if r <= order {
            j.phi[r] = h.scale(&h.field().from_i64(-1));
        }
        j
    }

    pub fn order(&self) -> usize {
        self.phi.len() - 1
    }

    pub fn phi(&self, i: usize) -> &Matrix {
        &self.phi[i]
    }

    pub fn terms(&self) -> &[Matrix] {
        &self.phi
    }

    pub fn is_identity(&self) -> bool {
        self.phi[1..].iter().all(Matrix::is_zero)
    }

    /// Coefficients of `φ_t⁻¹`: `ψ_0 = id`, `ψ_n = −Σ_{k=1..n} φ_k ψ_{n−k}`.
    pub fn inverse(&self) -> IsomorphismJet {
        let mut psi = vec![self.phi[0].clone()];
        for n in 1..self.phi.len() {
            let mut acc = Matrix::zeros(self.phi[0].field(), self.phi[0].rows(), self.phi[0].rows());
            for k in 1..=n {
                acc = acc.sub(&self.phi[k].mul(&psi[n - k]).expect("square")).expect("square");
            }
            psi.push(acc);
        }
        IsomorphismJet { phi: psi }
    }

    /// `(φ ∘ ψ)_t = φ_t ψ_t`, truncated.
    pub fn compose(&self, other: &IsomorphismJet) -> Result<IsomorphismJet> {
        if self.order() != other.order() || self.phi[0].rows() != other.phi[0].rows() {
            return Err(LyaError::DimensionMismatch("isomorphism jets of different shapes".into()));
        }
        let z = Matrix::zeros(self.phi[0].field(), self.phi[0].rows(), self.phi[0].rows());
        let phi = (0..=self.order())
            .map(|n| {
                (0..=n).fold(z.clone(), |acc, a| {
                    acc.add(&self.phi[a].mul(&other.phi[n - a]).expect("square")).expect("square")
                })
            })
            .collect();
        Ok(IsomorphismJet { phi })
    }
}

/// First failure of the deformation equations.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct JetFailure {
    pub order: usize,
    pub tag: String,
    pub witness: Vec<String>,
    pub residual: Vec<Scalar>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct JetReport {
    pub failure: Option<JetFailure>,
}

impl JetReport {
    pub fn is_pass(&self) -> bool {
        self.failure.is_none()
    }
}

fn failure_at(a: &LyAlgebra, order: usize, res: &Delta23Residual) -> Option<JetFailure> {
    res.first_violation().map(|(tag, t, residual)| JetFailure {
        order,
        tag: tag.to_string(),
        witness: t.iter().map(|&i| a.label(i).to_string()).collect(),
        residual,
    })
}

/// Checks the deformation equations at every order `1..=N`.
pub fn check_jet(j: &DeformationJet) -> JetReport {
    let (fs, gs) = j.tables();
    for n in 1..=j.order() {
        if let Some(f) = failure_at(&j.algebra, n, &j.residual(&fs, &gs, n)) {
            return JetReport { failure: Some(f) };
        }
    }
    JetReport { failure: None }
}

/// `(f_1, g_1)`, after confirming it is a `(2,3)`-cocycle.
pub fn infinitesimal(j: &DeformationJet) -> Result<CochainPair> {
    let p = j.term(1);
    let res = crate::coboundary::delta23(&j.algebra, &p)?;
    if !res.is_zero() {
        return Err(LyaError::NotCocycle { residual: res.stacked() });
    }
    Ok(p)
}

fn transform(table: &Multilinear, phi: &[Matrix], psi: &[Matrix], n: usize, b: usize) -> Multilinear {
    // Σ_{a + Σc = n − b} ψ_a table(φ_{c_1}·, …, φ_{c_k}·)
    let arity = table.arity();
    let budget = n - b;
    let mut out = Multilinear::zero(table.field(), arity, table.dim(), table.target());
    let mut cs = vec![0usize; arity];
    loop {
        let used: usize = cs.iter().sum();
        if used <= budget {
            let mut m = table.clone();
            for (slot, &c) in cs.iter().enumerate() {
                if c > 0 {
                    m = m.precompose(slot, &phi[c]);
                }
            }
            let a = budget - used;
            let m = if a == 0 { m } else { m.postcompose(&psi[a]) };
            out.add_assign(&m);
        }
        let mut s = arity;
        loop {
            if s == 0 {
                return out;
            }
            s -= 1;
            cs[s] += 1;
            if cs[s] <= budget {
                break;
            }
            cs[s] = 0;
        }
    }
}

/// `φ_t⁻¹ (f_t, g_t)(φ_t ·, …)` through the jet's order.
pub fn gauge_transform(j: &DeformationJet, iso: &IsomorphismJet) -> Result<DeformationJet> {
    if iso.order() != j.order() || iso.phi[0].rows() != j.algebra.dim() || iso.phi[0].field() != j.algebra.field() {
        return Err(LyaError::DimensionMismatch(format!(
            "isomorphism jet of order {} on dimension {} for a jet of order {} on dimension {}",
            iso.order(),
            iso.phi[0].rows(),
            j.order(),
            j.algebra.dim()
        )));
    }
    let psi = iso.inverse();
    let (fs, gs) = j.tables();
    let (even, odd) = pair_spaces(j.algebra.field(), 1, j.algebra.dim(), j.algebra.dim())?;
    let mut f = Vec::with_capacity(j.order());
    let mut g = Vec::with_capacity(j.order());
    for n in 1..=j.order() {
        let mut fm = Multilinear::zero(j.algebra.field(), 2, j.algebra.dim(), j.algebra.dim());
        let mut gm = Multilinear::zero(j.algebra.field(), 3, j.algebra.dim(), j.algebra.dim());
        for b in 0..=n {
            fm.add_assign(&transform(&fs[b], &iso.phi, &psi.phi, n, b));
            gm.add_assign(&transform(&gs[b], &iso.phi, &psi.phi, n, b));
        }
        let bad = |_| LyaError::Malformed(format!("gauge-transformed order-{n} term is not a cochain"));
        f.push(Cochain::from_multilinear(even, &fm).map_err(bad)?);
        g.push(Cochain::from_multilinear(odd, &gm).map_err(bad)?);
    }
    DeformationJet::new(j.algebra.clone(), f, g)
}

/// A `φ_1` with `δ¹φ_1 = (f_1 − f'_1, g_1 − g'_1)`, or `None`.
pub fn equivalent_first_order(j1: &DeformationJet, j2: &DeformationJet) -> Result<Option<Cochain>> {
    if j1.algebra.binary() != j2.algebra.binary() || j1.algebra.ternary() != j2.algebra.ternary() {
        return Err(LyaError::DimensionMismatch("jets over different algebras".into()));
    }
    let p1 = infinitesimal(j1)?;
    let p2 = infinitesimal(j2)?;
    let target = p1.sub(&p2)?.stacked();
    let sol = delta1_matrix(&j1.algebra)?.solve(&target)?;
    let s = CochainSpace::new(j1.algebra.field(), 1, j1.algebra.dim(), j1.algebra.dim())?;
    sol.map(|v| Cochain::new(s, v)).transpose()
}

/// Outcome of [`trivialize`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Trivialization {
    /// `gauge_transform(j, iso)` is the null jet; `steps` lists each order
    /// `r` and the `h_r` removed there.
    Trivial { iso: IsomorphismJet, steps: Vec<(usize, Cochain)> },
    /// The order-`order` term is a cocycle that is not a coboundary; `class`
    /// is its canonical representative modulo coboundaries. `iso` is the
    /// gauge accumulated before the failure.
    Obstructed { order: usize, class: CochainPair, iso: IsomorphismJet },
}

/// Equivariant context for [`trivialize`] and [`rigidity_probe`]; the
/// coefficients are adjoint, so `V = L` is acted on as the algebra.
#[derive(Clone, Copy, Debug)]
pub struct Equivariance<'a> {
    pub action: &'a GroupAction,
}

impl Equivariance<'_> {
    fn module(&self) -> EquivariantModuleAction {
        EquivariantModuleAction::adjoint(self.action)
    }

    fn subspace(&self, space: &CochainSpace) -> Result<Subspace> {
        Ok(equivariant_subspace(space, self.action, &self.module())?.subspace)
    }
}

/// Removes the lowest nonzero order by `id − h_r t^r` until the jet is null
/// through its order or an order cannot be removed.
pub fn trivialize(j: &DeformationJet, equivariant: Option<Equivariance<'_>>) -> Result<Trivialization> {
    let report = check_jet(j);
    if let Some(f) = report.failure {
        return Err(LyaError::Violation(crate::Violation::new(
            format!("deformation equation {} at order {}", f.tag, f.order),
            f.witness,
            f.residual,
        )));
    }
    let a = &j.algebra;
    let d1 = delta1_matrix(a)?;
    let c1 = CochainSpace::new(a.field(), 1, a.dim(), a.dim())?;
    let allowed = match &equivariant {
        Some(eq) => {
            let r = check_equivariant_jet(j, eq.action)?;
            if let Some(f) = r.failure {
                return Err(LyaError::Violation(crate::Violation::new(
                    format!("{} at order {}", f.tag, f.order),
                    f.witness,
                    f.residual,
                )));
            }
            eq.subspace(&c1)?
        }
        None => Subspace::full(a.field(), c1.dim()),
    };
    // δ¹ restricted to the allowed h: columns are images of a basis of `allowed`
    let basis = allowed.basis_vectors();
    let restricted = Matrix::from_fn(a.field(), d1.rows(), basis.len(), |i, k| {
        lyalg_linalg::dot(a.field(), d1.row(i), &basis[k])
    });
    let mut current = j.clone();
    let mut iso = IsomorphismJet::identity(a.field(), a.dim(), j.order());
    let mut steps = Vec::new();
    while let Some(r) = (1..=current.order()).find(|&r| !current.f(r).is_zero() || !current.g(r).is_zero()) {
        let term = current.term(r);
        let res = crate::coboundary::delta23(a, &term)?;
        if !res.is_zero() {
            return Err(LyaError::NotCocycle { residual: res.stacked() });
        }
        let target = term.stacked();
        match restricted.solve(&target)? {
            Some(coords) => {
                let h = allowed.combine(&coords);
                let h = Cochain::new(c1, h)?;
                let hm = crate::coboundary::cochain_to_matrix(&h);
                let step = IsomorphismJet::elementary(&hm, r, j.order());
                current = gauge_transform(&current, &step)?;
                iso = iso.compose(&step)?;
                steps.push((r, h));
            }
            None => {
                let b = allowed.map(&d1)?;
                let class = b.reduce(&target)?;
                let (even, odd) = term.spaces();
                let class = CochainPair::from_stacked(even, odd, &class)?;
                return Ok(Trivialization::Obstructed { order: r, class, iso });
            }
        }
    }
    Ok(Trivialization::Trivial { iso, steps })
}

/// Every `f_i`, `g_i` must be equivariant; the infinitesimal then lies in
/// `Z_G^2 × Z_G^3`.
pub fn check_equivariant_jet(j: &DeformationJet, act: &GroupAction) -> Result<JetReport> {
    let base = check_jet(j);
    if !base.is_pass() {
        return Ok(base);
    }
    let a = &j.algebra;
    if act.algebra().binary() != a.binary() || act.algebra().ternary() != a.ternary() {
        return Err(LyaError::DimensionMismatch("action is defined on a different algebra".into()));
    }
    let module = EquivariantModuleAction::adjoint(act);
    let grp = act.group();
    for n in 1..=j.order() {
        for c in [j.f(n), j.g(n)] {
            let s = c.space();
            for g in 0..grp.order() {
                let t = induced_action(s, act, &module, g)?;
                let moved = t.mul_vec(c.coeffs())?;
                if moved.as_slice() != c.coeffs() {
                    let tuples = s.canonical_tuples();
                    let dv = s.dim_v();
                    let k = (0..s.dim()).find(|&k| moved[k] != c.coeffs()[k]).expect("differs");
                    let tuple = &tuples[k / dv];
                    let residual: Vec<Scalar> = (0..dv)
                        .map(|v| &moved[(k / dv) * dv + v] - &c.coeffs()[(k / dv) * dv + v])
                        .collect();
                    let mut witness = vec![grp.label(g).to_string()];
                    witness.extend(tuple.iter().map(|&i| a.label(i).to_string()));
                    return Ok(JetReport {
                        failure: Some(JetFailure { order: n, tag: "equivariance".into(), witness, residual }),
                    });
                }
            }
        }
    }
    Ok(JetReport { failure: None })
}

/// `H^2 × H^3` (or its equivariant version) and whether it vanishes.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RigidityReport {
    pub h_dims: (usize, usize),
    pub rigid: bool,
    pub cohomology: CohomologyResult,
}

pub fn rigidity_probe(a: &LyAlgebra, equivariant: Option<Equivariance<'_>>) -> Result<RigidityReport> {
    let r = adjoint_rep(a)?;
    let h = match equivariant {
        None => cohomology::cohomology(a, &r, 1)?,
        Some(eq) => crate::equivariant::equivariant_cohomology(a, &r, eq.action, &eq.module(), 1)?,
    };
    Ok(RigidityReport { h_dims: h.h_dims, rigid: h.h_total() == 0, cohomology: h })
}

/// Solves the order-`N+1` equations for `(f_{N+1}, g_{N+1})`, returning the
/// canonical solution or `None` if the jet does not extend.
pub fn extend(j: &DeformationJet) -> Result<Option<CochainPair>> {
    let report = check_jet(j);
    if let Some(f) = report.failure {
        return Err(LyaError::Violation(crate::Violation::new(
            format!("deformation equation {} at order {}", f.tag, f.order),
            f.witness,
            f.residual,
        )));
    }
    let a = &j.algebra;
    let (mut fs, mut gs) = j.tables();
    fs.push(Multilinear::zero(a.field(), 2, a.dim(), a.dim()));
    gs.push(Multilinear::zero(a.field(), 3, a.dim(), a.dim()));
    let inhom = j.residual(&fs, &gs, j.order() + 1).stacked();
    let target: Vec<Scalar> = inhom.iter().map(|c| -c).collect();
    let (even, odd) = pair_spaces(a.field(), 1, a.dim(), a.dim())?;
    match delta23_matrix(a)?.solve(&target)? {
        None => Ok(None),
        Some(v) => Ok(Some(CochainPair::from_stacked(even, odd, &v)?)),
    }
}

/// Appends an order-`N+1` term.
pub fn with_term(j: &DeformationJet, p: &CochainPair) -> Result<DeformationJet> {
    let mut f = j.f.clone();
    let mut g = j.g.clone();
    f.push(p.f.clone());
    g.push(p.g.clone());
    DeformationJet::new(j.algebra.clone(), f, g)
}

/// The jet `gauge_transform(null, iso)` for an isomorphism jet built from
/// the given `φ_1..φ_N`.
pub fn gauge_of_null(a: &LyAlgebra, phis: &[Matrix]) -> Result<(DeformationJet, IsomorphismJet)> {
    let mut all = vec![Matrix::identity(a.field(), a.dim())];
    all.extend(phis.iter().cloned());
    let iso = IsomorphismJet::new(all)?;
    let j = gauge_transform(&DeformationJet::null(a.clone(), phis.len())?, &iso)?;
    Ok((j, iso))
}

/// `φ` as a 1-cochain.
pub fn phi_cochain(iso: &IsomorphismJet, i: usize) -> Cochain {
    matrix_to_cochain(&iso.phi[i])
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coboundary::delta1;
    use crate::fixtures;

    const Q: Field = Field::Rational;

    fn m(rows: &[&[i64]]) -> Matrix {
        Matrix::from_i64(Q, rows)
    }

    #[test]
    fn null_jet_passes() {
        for a in fixtures::all_algebras() {
            let j = DeformationJet::null(a, 3).unwrap();
            assert!(check_jet(&j).is_pass());
            assert!(infinitesimal(&j).unwrap().is_zero());
        }
    }

    #[test]
    fn abelian_first_order_jets_pass() {
        let a = fixtures::abelian(2);
        let (even, odd) = pair_spaces(Q, 1, 2, 2).unwrap();
        let f1 = Cochain::new(even, vec![Q.from_i64(3), Q.from_i64(-7)]).unwrap();
        let j = DeformationJet::new(a, vec![f1], vec![odd.zero()]).unwrap();
        assert!(check_jet(&j).is_pass());
    }

    #[test]
    fn l0_scaled_ternary_passes() {
        let a = fixtures::l0();
        let (even, odd) = pair_spaces(Q, 1, 2, 2).unwrap();
        let g1 = Cochain::from_multilinear(odd, a.ternary()).unwrap();
        let j = DeformationJet::new(a.clone(), vec![even.zero()], vec![g1.clone()]).unwrap();
        assert!(check_jet(&j).is_pass());
        let p = infinitesimal(&j).unwrap();
        assert!(p.f.is_zero());
        assert_eq!(p.g, g1);
    }

    #[test]
    fn inverse_series() {
        let iso = IsomorphismJet::new(vec![Matrix::identity(Q, 2), m(&[&[1, 2], &[0, 1]]), m(&[&[0, 0], &[3, 0]])])
            .unwrap();
        let prod = iso.compose(&iso.inverse()).unwrap();
        assert!(prod.is_identity());
        let prod = iso.inverse().compose(&iso).unwrap();
        assert!(prod.is_identity());
    }

    #[test]
    fn gauge_identity_is_trivial() {
        let a = fixtures::ex33();
        let (j, _) = gauge_of_null(&a, &[m(&[&[1, 0], &[2, -1]]), m(&[&[0, 1], &[1, 0]])]).unwrap();
        let id = IsomorphismJet::identity(Q, 2, 2);
        assert_eq!(gauge_transform(&j, &id).unwrap(), j);
    }

    #[test]
    fn gauge_of_null_infinitesimal_is_delta1() {
        for a in fixtures::all_algebras() {
            let d = a.dim();
            let phi1 = Matrix::from_fn(Q, d, d, |i, k| Q.from_i64((i * 3 + k) as i64 - 2));
            let (j, _) = gauge_of_null(&a, std::slice::from_ref(&phi1)).unwrap();
            assert!(check_jet(&j).is_pass());
            let p = infinitesimal(&j).unwrap();
            assert_eq!(p, delta1(&matrix_to_cochain(&phi1), &a).unwrap());
        }
    }

    #[test]
    fn trivialize_gauge_of_null() {
        let a = fixtures::ex33();
        let (j, _) = gauge_of_null(&a, &[m(&[&[1, 1], &[0, 2]]), m(&[&[0, 3], &[1, 0]]), m(&[&[2, 0], &[0, -1]])])
            .unwrap();
        match trivialize(&j, None).unwrap() {
            Trivialization::Trivial { iso, .. } => assert!(gauge_transform(&j, &iso).unwrap().is_null()),
            other => panic!("expected trivial, got {other:?}"),
        }
    }

    #[test]
    fn abelian_obstruction() {
        let a = fixtures::abelian(2);
        let (even, odd) = pair_spaces(Q, 1, 2, 2).unwrap();
        let f1 = Cochain::new(even, vec![Q.one(), Q.zero()]).unwrap();
        let j = DeformationJet::new(a.clone(), vec![f1.clone()], vec![odd.zero()]).unwrap();
        match trivialize(&j, None).unwrap() {
            Trivialization::Obstructed { order, class, .. } => {
                assert_eq!(order, 1);
                assert_eq!(class.f, f1);
            }
            other => panic!("expected obstruction, got {other:?}"),
        }
        let null = DeformationJet::null(a, 1).unwrap();
        assert_eq!(equivalent_first_order(&null, &j).unwrap(), None);
        assert!(equivalent_first_order(&j, &j).unwrap().unwrap().is_zero());
    }

    #[test]
    fn equivariant_jets_on_l0() {
        let act = fixtures::l0_neg_action();
        let a = fixtures::l0();
        let (even, odd) = pair_spaces(Q, 1, 2, 2).unwrap();
        let g1 = Cochain::from_multilinear(odd, a.ternary()).unwrap();
        let j = DeformationJet::new(a.clone(), vec![even.zero()], vec![g1]).unwrap();
        assert!(check_equivariant_jet(&j, &act).unwrap().is_pass());

        let f1 = Cochain::new(even, vec![Q.one(), Q.zero()]).unwrap();
        let j = DeformationJet::new(a, vec![f1], vec![odd.zero()]).unwrap();
        if check_jet(&j).is_pass() {
            let r = check_equivariant_jet(&j, &act).unwrap();
            let f = r.failure.unwrap();
            assert_eq!((f.order, f.tag.as_str()), (1, "equivariance"));
        }
    }

    #[test]
    fn rigidity_examples() {
        let r = rigidity_probe(&fixtures::abelian(1), None).unwrap();
        assert!(r.rigid);
        let r = rigidity_probe(&fixtures::abelian(2), None).unwrap();
        assert_eq!((r.h_dims, r.rigid), ((2, 4), false));
        let act = fixtures::l0_neg_action();
        let r = rigidity_probe(&fixtures::l0(), Some(Equivariance { action: &act })).unwrap();
        assert_eq!(r.h_dims.0, 0);
    }

    #[test]
    fn extension_of_gauge_jet() {
        let a = fixtures::ex33();
        let (j, _) = gauge_of_null(&a, &[m(&[&[1, 0], &[1, 1]])]).unwrap();
        let next = extend(&j).unwrap().expect("gauge jets extend");
        let j2 = with_term(&j, &next).unwrap();
        assert!(check_jet(&j2).is_pass());
    }
}
