//! Finite group actions, fixed-point subalgebras and equivariant cochains.

use lyalg_linalg::{Field, Matrix, Scalar, Subspace};

use crate::algebra::{check_morphism, LyAlgebra};
use crate::cochain::{pair_spaces, CochainSpace};
use crate::cohomology::{self, CohomologyResult};
use crate::multilinear::tuples;
use crate::representation::Representation;
use crate::{LyaError, Result, Verdict, Violation};

/// A finite group given by its Cayley table: `table[g][h]` is the index of
/// `g·h`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiniteGroup {
    labels: Vec<String>,
    table: Vec<Vec<usize>>,
    identity: Option<usize>,
}

impl FiniteGroup {
    /// Checks only the shape of the table; the group laws are left to
    /// [`check_group`].
    pub fn new(labels: Vec<String>, table: Vec<Vec<usize>>) -> Result<Self> {
        let n = labels.len();
        if n == 0 {
            return Err(LyaError::Malformed("a group needs at least one element".into()));
        }
        let mut seen = std::collections::BTreeSet::new();
        for l in &labels {
            if !seen.insert(l) {
                return Err(LyaError::Malformed(format!("duplicate group element label {l:?}")));
            }
        }
        if table.len() != n || table.iter().any(|r| r.len() != n) {
            return Err(LyaError::Malformed(format!("Cayley table must be {n}x{n}")));
        }
        if let Some(bad) = table.iter().flatten().find(|&&x| x >= n) {
            return Err(LyaError::Malformed(format!("Cayley table entry {bad} out of range")));
        }
        let identity = (0..n).find(|&e| (0..n).all(|x| table[e][x] == x && table[x][e] == x));
        Ok(FiniteGroup { labels, table, identity })
    }

    pub fn order(&self) -> usize {
        self.labels.len()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, g: usize) -> &str {
        &self.labels[g]
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }

    pub fn table(&self) -> &[Vec<usize>] {
        &self.table
    }

    pub fn mul(&self, g: usize, h: usize) -> usize {
        self.table[g][h]
    }

    /// The two-sided identity, if the table has one.
    pub fn identity(&self) -> Option<usize> {
        self.identity
    }

    pub fn inverse(&self, g: usize) -> Option<usize> {
        let e = self.identity?;
        (0..self.order()).find(|&h| self.table[g][h] == e && self.table[h][g] == e)
    }

    fn require_identity(&self) -> Result<usize> {
        self.identity.ok_or_else(|| LyaError::Malformed("group table has no identity".into()))
    }

    /// Whether `subset` is closed under the product (hence a subgroup, the
    /// group being finite).
    pub fn is_subgroup(&self, subset: &[usize]) -> bool {
        !subset.is_empty()
            && subset.iter().all(|&g| g < self.order())
            && subset.iter().all(|&g| subset.iter().all(|&h| subset.contains(&self.mul(g, h))))
    }

    /// The subgroup on `subset` (in the given order) with its own table.
    pub fn subgroup(&self, subset: &[usize]) -> Result<FiniteGroup> {
        if !self.is_subgroup(subset) {
            return Err(LyaError::Malformed(format!("{{{}}} is not a subgroup", self.names(subset))));
        }
        let pos = |g: usize| subset.iter().position(|&h| h == g).expect("closed");
        let labels = subset.iter().map(|&g| self.labels[g].clone()).collect();
        let table = subset.iter().map(|&g| subset.iter().map(|&h| pos(self.mul(g, h))).collect()).collect();
        FiniteGroup::new(labels, table)
    }

    fn names(&self, subset: &[usize]) -> String {
        subset
            .iter()
            .map(|&g| self.labels.get(g).cloned().unwrap_or_else(|| g.to_string()))
            .collect::<Vec<_>>()
            .join(", ")
    }
}

/// Identity, inverses and associativity on all triples.
pub fn check_group(g: &FiniteGroup) -> Verdict {
    let n = g.order();
    let lbl = |xs: &[usize]| xs.iter().map(|&x| g.labels[x].clone()).collect::<Vec<_>>();
    let Some(_) = g.identity else {
        return Verdict::Fail(Violation::new("identity", vec![], vec![]));
    };
    for x in 0..n {
        if g.inverse(x).is_none() {
            return Verdict::Fail(Violation::new("inverse", lbl(&[x]), vec![]));
        }
    }
    for t in tuples(n, 3) {
        let (a, b, c) = (t[0], t[1], t[2]);
        if g.mul(g.mul(a, b), c) != g.mul(a, g.mul(b, c)) {
            return Verdict::Fail(Violation::new("associativity", lbl(&t), vec![]));
        }
    }
    Verdict::Pass
}

/// `ψ_g` for every element, as matrices whose columns are images of the
/// algebra basis.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroupAction {
    group: FiniteGroup,
    algebra: LyAlgebra,
    mats: Vec<Matrix>,
}

impl GroupAction {
    pub fn new(group: FiniteGroup, algebra: LyAlgebra, mats: Vec<Matrix>) -> Result<Self> {
        check_matrices(&group, algebra.field(), algebra.dim(), &mats)?;
        Ok(GroupAction { group, algebra, mats })
    }

    pub fn group(&self) -> &FiniteGroup {
        &self.group
    }

    pub fn algebra(&self) -> &LyAlgebra {
        &self.algebra
    }

    pub fn matrix(&self, g: usize) -> &Matrix {
        &self.mats[g]
    }

    pub fn matrices(&self) -> &[Matrix] {
        &self.mats
    }

    /// The action restricted to a subgroup.
    pub fn restrict(&self, subset: &[usize]) -> Result<GroupAction> {
        let group = self.group.subgroup(subset)?;
        let mats = subset.iter().map(|&g| self.mats[g].clone()).collect();
        GroupAction::new(group, self.algebra.clone(), mats)
    }
}

fn check_matrices(group: &FiniteGroup, field: Field, dim: usize, mats: &[Matrix]) -> Result<()> {
    if mats.len() != group.order() {
        return Err(LyaError::DimensionMismatch(format!(
            "{} matrices for a group of order {}",
            mats.len(),
            group.order()
        )));
    }
    for m in mats {
        if (m.rows(), m.cols()) != (dim, dim) {
            return Err(LyaError::DimensionMismatch(format!(
                "action matrix is {}x{}, expected {dim}x{dim}",
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
    Ok(())
}

fn flat(m: &Matrix) -> Vec<Scalar> {
    m.entries().to_vec()
}

/// Identity and homomorphism laws for matrices indexed by group elements.
fn check_linear_action(group: &FiniteGroup, mats: &[Matrix], rules: [&str; 2]) -> Result<Option<Violation>> {
    let e = group.require_identity()?;
    if !mats[e].is_identity() {
        let id = Matrix::identity(mats[e].field(), mats[e].rows());
        let res = flat(&mats[e].sub(&id)?);
        return Ok(Some(Violation::new(rules[0], vec![group.label(e).into()], res)));
    }
    for g in 0..group.order() {
        for h in 0..group.order() {
            let lhs = mats[g].mul(&mats[h])?;
            let rhs = &mats[group.mul(g, h)];
            if &lhs != rhs {
                let res = flat(&lhs.sub(rhs)?);
                let w = vec![group.label(g).into(), group.label(h).into()];
                return Ok(Some(Violation::new(rules[1], w, res)));
            }
        }
    }
    Ok(None)
}

fn require_pass(v: Verdict) -> Result<()> {
    match v {
        Verdict::Pass => Ok(()),
        Verdict::Fail(v) => Err(LyaError::Violation(v)),
    }
}

/// The action axioms: `ψ_e = id`, `ψ_g ψ_h = ψ_{gh}`, and every `ψ_g` an
/// automorphism of both brackets. Linearity holds by construction.
pub fn check_action(act: &GroupAction) -> Result<Verdict> {
    require_pass(check_group(&act.group))?;
    act.algebra.require_verified()?;
    for (g, m) in act.mats.iter().enumerate() {
        if m.inverse().is_none() {
            return Err(LyaError::Malformed(format!(
                "action matrix of {} is not invertible",
                act.group.label(g)
            )));
        }
    }
    if let Some(v) = check_linear_action(&act.group, &act.mats, ["axiom 2 (identity acts trivially)", "axiom 3 (compatibility with the product)"])? {
        return Ok(Verdict::Fail(v));
    }
    for (g, m) in act.mats.iter().enumerate() {
        if let Verdict::Fail(v) = check_morphism(&act.algebra, &act.algebra, m)? {
            let mut witness = vec![act.group.label(g).to_string()];
            witness.extend(v.witness);
            let rule = format!("axiom 4 ({})", v.rule);
            return Ok(Verdict::Fail(Violation::new(rule, witness, v.residual)));
        }
    }
    Ok(Verdict::Pass)
}

/// `L^H` with its induced structure and the inclusion `L^H → L`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FixedSubalgebra {
    pub algebra: LyAlgebra,
    pub inclusion: Matrix,
    pub subspace: Subspace,
}

/// `L^H = ∩_{h ∈ H} ker(ψ_h − id)` for a subgroup `H` given by element
/// indices. Basis vectors that are unit vectors keep their labels.
pub fn fixed_subalgebra(act: &GroupAction, subgroup: &[usize]) -> Result<FixedSubalgebra> {
    if !act.group.is_subgroup(subgroup) {
        return Err(LyaError::Malformed(format!("{{{}}} is not a subgroup", act.group.names(subgroup))));
    }
    require_pass(check_action(act)?)?;
    let a = &act.algebra;
    let field = a.field();
    let d = a.dim();
    let id = Matrix::identity(field, d);
    let mut eqs = Matrix::zeros(field, 0, d);
    for &h in subgroup {
        eqs = eqs.vstack(&act.mats[h].sub(&id)?)?;
    }
    let sub = eqs.nullspace();
    let basis = sub.basis_vectors();
    let k = basis.len();
    let inclusion = Matrix::from_fn(field, d, k, |r, c| basis[c][r].clone());
    let labels: Vec<String> = basis
        .iter()
        .enumerate()
        .map(|(i, v)| {
            let nz: Vec<usize> = (0..d).filter(|&j| !v[j].is_zero()).collect();
            match nz.as_slice() {
                [j] if v[*j].is_one() => a.label(*j).to_string(),
                _ => format!("u{}", i + 1),
            }
        })
        .collect();
    let coords = |v: Vec<Scalar>, what: String| -> Result<Vec<Scalar>> {
        sub.coordinates(&v)?.ok_or(LyaError::ClosureViolation(what))
    };
    let mut bin = Vec::new();
    let mut ter = Vec::new();
    use crate::multilinear::Arg::Vector as V;
    for t in tuples(k, 2) {
        let v = a.bracket(V(&basis[t[0]]), V(&basis[t[1]]));
        let what = format!("[{}, {}] leaves the fixed subspace", labels[t[0]], labels[t[1]]);
        for (l, c) in coords(v, what)?.into_iter().enumerate() {
            if !c.is_zero() {
                bin.push((t[0], t[1], l, c));
            }
        }
    }
    for t in tuples(k, 3) {
        let v = a.triple(V(&basis[t[0]]), V(&basis[t[1]]), V(&basis[t[2]]));
        let what = format!(
            "{{{}, {}, {}}} leaves the fixed subspace",
            labels[t[0]], labels[t[1]], labels[t[2]]
        );
        for (l, c) in coords(v, what)?.into_iter().enumerate() {
            if !c.is_zero() {
                ter.push((t[0], t[1], t[2], l, c));
            }
        }
    }
    let algebra = LyAlgebra::from_raw(field, labels, bin, ter)?
        .verify()
        .map_err(LyaError::Violation)?;
    Ok(FixedSubalgebra { algebra, inclusion, subspace: sub })
}

/// One matrix per group element acting on the representation space `V`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EquivariantModuleAction {
    group: FiniteGroup,
    mats: Vec<Matrix>,
}

impl EquivariantModuleAction {
    pub fn new(group: FiniteGroup, field: Field, dim_v: usize, mats: Vec<Matrix>) -> Result<Self> {
        check_matrices(&group, field, dim_v, &mats)?;
        Ok(EquivariantModuleAction { group, mats })
    }

    /// `V = L` acted on exactly as the algebra.
    pub fn adjoint(act: &GroupAction) -> Self {
        EquivariantModuleAction { group: act.group.clone(), mats: act.mats.clone() }
    }

    pub fn group(&self) -> &FiniteGroup {
        &self.group
    }

    pub fn matrix(&self, g: usize) -> &Matrix {
        &self.mats[g]
    }

    pub fn matrices(&self) -> &[Matrix] {
        &self.mats
    }

    pub fn dim_v(&self) -> usize {
        self.mats.first().map_or(0, Matrix::rows)
    }

    pub fn restrict(&self, subset: &[usize]) -> Result<EquivariantModuleAction> {
        let group = self.group.subgroup(subset)?;
        let mats = subset.iter().map(|&g| self.mats[g].clone()).collect();
        Ok(EquivariantModuleAction { group, mats })
    }
}

/// Conditions 1, 2 and 4–6: the module action is a group action, and
/// `ρ(gx) = g ρ(x) g⁻¹`, `D(gx,gy) = g D(x,y) g⁻¹`, `θ(gx,gy) = g θ(x,y) g⁻¹`
/// on basis elements.
pub fn check_equivariant_compat(
    act: &GroupAction,
    r: &Representation,
    modact: &EquivariantModuleAction,
) -> Result<Verdict> {
    if modact.group != act.group {
        return Err(LyaError::DimensionMismatch("module action is for a different group".into()));
    }
    if r.alg_dim() != act.algebra.dim() || modact.dim_v() != r.dim() {
        return Err(LyaError::DimensionMismatch(format!(
            "representation on a {}-dimensional space over a {}-dimensional algebra, module action on dimension {}",
            r.dim(),
            r.alg_dim(),
            modact.dim_v()
        )));
    }
    let group = &act.group;
    if let Some(v) = check_linear_action(group, &modact.mats, ["condition 1 (identity acts trivially)", "condition 2 (compatibility with the product)"])? {
        return Ok(Verdict::Fail(v));
    }
    let d = act.algebra.dim();
    let conj = |g: usize, m: &Matrix| -> Result<Matrix> {
        let ginv = group.inverse(g).expect("group verified");
        Ok(modact.mats[g].mul(m)?.mul(&modact.mats[ginv])?)
    };
    let labels = |g: usize, xs: &[usize]| {
        let mut w = vec![group.label(g).to_string()];
        w.extend(xs.iter().map(|&x| act.algebra.label(x).to_string()));
        w
    };
    for g in 0..group.order() {
        let psi = &act.mats[g];
        for x in 0..d {
            let lhs = r.rho_of(&psi.column(x));
            let res = lhs.sub(&conj(g, r.rho(x))?)?;
            if !res.is_zero() {
                return Ok(Verdict::Fail(Violation::new("condition 4 (ρ)", labels(g, &[x]), flat(&res))));
            }
        }
    }
    for (rule, pick) in [("condition 5 (D)", 0), ("condition 6 (θ)", 1)] {
        for g in 0..group.order() {
            let psi = &act.mats[g];
            for t in tuples(d, 2) {
                let (gx, gy) = (psi.column(t[0]), psi.column(t[1]));
                let (lhs, base) = if pick == 0 {
                    (r.d_of(&gx, &gy), r.d(t[0], t[1]))
                } else {
                    (r.theta_of(&gx, &gy), r.theta(t[0], t[1]))
                };
                let res = lhs.sub(&conj(g, base)?)?;
                if !res.is_zero() {
                    return Ok(Verdict::Fail(Violation::new(rule, labels(g, &t), flat(&res))));
                }
            }
        }
    }
    Ok(Verdict::Pass)
}

/// Matrix of `T_g f = g · f(g⁻¹·, …, g⁻¹·)` on the coordinates of `space`.
pub fn induced_action(
    space: &CochainSpace,
    act: &GroupAction,
    modact: &EquivariantModuleAction,
    g: usize,
) -> Result<Matrix> {
    let ginv = act
        .group
        .inverse(g)
        .ok_or_else(|| LyaError::Malformed("group element without inverse".into()))?;
    if space.alg_dim() != act.algebra.dim() || space.dim_v() != modact.dim_v() {
        return Err(LyaError::DimensionMismatch("cochain space does not match the action".into()));
    }
    let field = space.field();
    let psi = &act.mats[ginv];
    let mg = &modact.mats[g];
    let dv = space.dim_v();
    let cols: Vec<Vec<(usize, Scalar)>> = (0..space.alg_dim())
        .map(|i| {
            psi.column(i).into_iter().enumerate().filter(|(_, c)| !c.is_zero()).collect()
        })
        .collect();
    let mut out = Matrix::zeros(field, space.dim(), space.dim());
    for (t, tuple) in space.canonical_tuples().iter().enumerate() {
        let slots: Vec<&Vec<(usize, Scalar)>> = tuple.iter().map(|&i| &cols[i]).collect();
        // value at `tuple` = M_g Σ (Π coeffs) f(e_{j1}, …, e_{jn})
        let mut acc: Vec<Vec<Scalar>> = vec![vec![field.zero(); space.dim()]; dv];
        if slots.iter().all(|s| !s.is_empty()) {
            let mut idx = vec![0usize; slots.len()];
            let mut src = vec![0usize; slots.len()];
            'odometer: loop {
                let mut c = field.one();
                for (s, &k) in idx.iter().enumerate() {
                    src[s] = slots[s][k].0;
                    c = &c * &slots[s][k].1;
                }
                if let Some((u, positive)) = space.locate(&src) {
                    let c = c.signed(positive);
                    for v in 0..dv {
                        let col = space.coordinate(u, v);
                        for (w, row) in acc.iter_mut().enumerate() {
                            let e = &mg[(w, v)];
                            if !e.is_zero() {
                                row[col].add_mul(&c, e);
                            }
                        }
                    }
                }
                let mut s = slots.len();
                loop {
                    if s == 0 {
                        break 'odometer;
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
        for (w, row) in acc.into_iter().enumerate() {
            out.row_mut(space.coordinate(t, w)).clone_from_slice(&row);
        }
    }
    Ok(out)
}

/// `C^n_G(L, V)` inside `C^n(L, V)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EquivariantCochainSpace {
    pub space: CochainSpace,
    pub subspace: Subspace,
}

impl EquivariantCochainSpace {
    pub fn dim(&self) -> usize {
        self.subspace.dim()
    }

    pub fn contains(&self, coeffs: &[Scalar]) -> Result<bool> {
        Ok(self.subspace.contains(coeffs)?)
    }
}

fn check_characteristic(field: Field, order: usize) -> Result<()> {
    let p = field.characteristic();
    if p != 0 && (order as u64).is_multiple_of(p) {
        return Err(LyaError::Unsupported(format!(
            "characteristic {p} divides the group order {order}"
        )));
    }
    Ok(())
}

/// `∩_{g ≠ e} ker(T_g − id)`.
pub fn equivariant_subspace(
    space: &CochainSpace,
    act: &GroupAction,
    modact: &EquivariantModuleAction,
) -> Result<EquivariantCochainSpace> {
    check_characteristic(space.field(), act.group.order())?;
    if modact.group != act.group {
        return Err(LyaError::DimensionMismatch("module action is for a different group".into()));
    }
    let e = act.group.require_identity()?;
    let id = Matrix::identity(space.field(), space.dim());
    let mut eqs = Matrix::zeros(space.field(), 0, space.dim());
    for g in (0..act.group.order()).filter(|&g| g != e) {
        eqs = eqs.vstack(&induced_action(space, act, modact, g)?.sub(&id)?)?;
    }
    Ok(EquivariantCochainSpace { space: *space, subspace: eqs.nullspace() })
}

/// `C_G^{2n} × C_G^{2n+1}` in stacked coordinates.
pub(crate) fn stacked_equivariant(
    field: Field,
    level: usize,
    act: &GroupAction,
    modact: &EquivariantModuleAction,
) -> Result<Subspace> {
    let (even, odd) = pair_spaces(field, level, act.algebra.dim(), modact.dim_v())?;
    let ce = equivariant_subspace(&even, act, modact)?;
    let co = equivariant_subspace(&odd, act, modact)?;
    Ok(stack_subspaces(&ce.subspace, &co.subspace))
}

pub(crate) fn stack_subspaces(even: &Subspace, odd: &Subspace) -> Subspace {
    let field = even.field();
    let (ne, no) = (even.ambient(), odd.ambient());
    let mut vecs = Vec::with_capacity(even.dim() + odd.dim());
    for v in even.basis_vectors() {
        let mut w = v;
        w.extend(std::iter::repeat_n(field.zero(), no));
        vecs.push(w);
    }
    for v in odd.basis_vectors() {
        let mut w = vec![field.zero(); ne];
        w.extend(v);
        vecs.push(w);
    }
    Subspace::span(field, ne + no, vecs).expect("stacked vectors")
}

pub(crate) fn require_compatible(
    a: &LyAlgebra,
    r: &Representation,
    act: &GroupAction,
    modact: &EquivariantModuleAction,
) -> Result<()> {
    if act.algebra.labels() != a.labels()
        || act.algebra.binary() != a.binary()
        || act.algebra.ternary() != a.ternary()
    {
        return Err(LyaError::DimensionMismatch("action is defined on a different algebra".into()));
    }
    require_pass(check_action(act)?)?;
    require_pass(check_equivariant_compat(act, r, modact)?)
}

/// `Z_G = Z ∩ C_G`, `B_G = δ(C_G)` one level down; the image of every
/// equivariant generator is checked to be equivariant.
pub fn equivariant_cohomology(
    a: &LyAlgebra,
    r: &Representation,
    act: &GroupAction,
    modact: &EquivariantModuleAction,
    level: usize,
) -> Result<CohomologyResult> {
    require_compatible(a, r, act, modact)?;
    check_characteristic(a.field(), act.group.order())?;
    let here = stacked_equivariant(a.field(), level, act, modact)?;
    let below = if level == 1 {
        let s = CochainSpace::new(a.field(), 1, a.dim(), r.dim())?;
        equivariant_subspace(&s, act, modact)?.subspace
    } else {
        stacked_equivariant(a.field(), level - 1, act, modact)?
    };
    cohomology::restricted(a, r, level, &here, &below)
}

/// Checks that `δ` maps equivariant pairs at `level` to equivariant pairs
/// one level up, on a basis of `C_G^{2n} × C_G^{2n+1}`.
pub fn check_closure(
    a: &LyAlgebra,
    r: &Representation,
    act: &GroupAction,
    modact: &EquivariantModuleAction,
    level: usize,
) -> Result<()> {
    require_compatible(a, r, act, modact)?;
    let op = crate::coboundary::CoboundaryOperator::new(a, r, level)?;
    let src = stacked_equivariant(a.field(), level, act, modact)?;
    let dst = stacked_equivariant(a.field(), level + 1, act, modact)?;
    for v in src.intersection(&op.admissible_domain())?.basis_vectors() {
        let w = op.apply_stacked(&v)?;
        if !dst.contains(&w)? {
            return Err(LyaError::ClosureViolation(format!(
                "δ of an equivariant pair at level {level} is not equivariant: {}",
                lyalg_linalg::format_vector(&w)
            )));
        }
    }
    Ok(())
}
