//! JSON manifests.
//!
//! [`Manifest`] mirrors the file layout; [`Config`] is the parsed, typed
//! configuration. Scalars are strings (`"3/7"`) so nothing is lost, and
//! indices into the basis are 0-based. `normalize` is `to_manifest ∘
//! from_manifest`; the shipped fixtures are stored in normal form.

use std::collections::BTreeSet;
use std::fmt;

use lyalg::algebra::default_labels;
use lyalg::{Cochain, CochainSpace, Field, FiniteGroup, LeibnizAlgebra, LyAlgebra, Matrix, Representation, Scalar};
use serde::{Deserialize, Serialize};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InputError(pub String);

impl fmt::Display for InputError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl std::error::Error for InputError {}

fn err<T>(msg: impl Into<String>) -> Result<T, InputError> {
    Err(InputError(msg.into()))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Manifest {
    pub field: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub algebra: Option<AlgebraBlock>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub leibniz: Option<LeibnizBlock>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub representation: Option<RepresentationBlock>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub group: Option<GroupBlock>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub action: Option<Vec<ElementMatrix>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub module_action: Option<Vec<ElementMatrix>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub jet: Option<JetBlock>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub jet2: Option<JetBlock>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub options: Option<Options>,
}

/// One structure constant or cochain value: `f(e_args)` has `value` in
/// coordinate `term`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Entry {
    pub args: Vec<usize>,
    pub term: usize,
    pub value: String,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum ConstantsMode {
    /// Only `i < j` in the first two slots; partners filled in by skew
    /// symmetry.
    #[default]
    Independent,
    /// Every table entry as given.
    Raw,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct AlgebraBlock {
    pub dim: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub labels: Option<Vec<String>>,
    #[serde(default)]
    pub constants: ConstantsMode,
    #[serde(default)]
    pub binary: Vec<Entry>,
    #[serde(default)]
    pub ternary: Vec<Entry>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct LeibnizBlock {
    pub dim: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub labels: Option<Vec<String>>,
    #[serde(default)]
    pub product: Vec<Entry>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum RepresentationKind {
    Adjoint,
    Explicit,
}

pub type Rows = Vec<Vec<String>>;

/// For `explicit`: `rho[i]`, `d[i*dim+j]` and `theta[i*dim+j]` are
/// `dim_v x dim_v` matrices, row-major.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RepresentationBlock {
    pub kind: RepresentationKind,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub dim: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub rho: Option<Vec<Rows>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub d: Option<Vec<Rows>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub theta: Option<Vec<Rows>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GroupBlock {
    pub elements: Vec<String>,
    /// `table[g][h]` is the label of `gh`.
    pub table: Vec<Vec<String>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ElementMatrix {
    pub element: String,
    pub matrix: Rows,
}

/// `f[i]` and `g[i]` are the order-`i+1` terms, listed at canonical
/// argument tuples only (`a < b` in each skew pair).
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct JetBlock {
    pub order: usize,
    pub f: Vec<Vec<Entry>>,
    pub g: Vec<Vec<Entry>>,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Options {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub level: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub order: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub subgroup: Option<Vec<String>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub equivariant: Option<bool>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub representatives: Option<bool>,
}

impl Options {
    fn is_empty(&self) -> bool {
        *self == Options::default()
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum AlgebraSource {
    /// Unverified; `raw` records how the constants were given.
    Lya { algebra: LyAlgebra, raw: bool },
    Leibniz(LeibnizAlgebra),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum RepresentationSpec {
    Adjoint,
    Explicit(Representation),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct JetSpec {
    pub f: Vec<Cochain>,
    pub g: Vec<Cochain>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Config {
    pub field: Field,
    pub algebra: AlgebraSource,
    pub representation: Option<RepresentationSpec>,
    pub group: Option<FiniteGroup>,
    /// One matrix per group element, in group order.
    pub action: Option<Vec<Matrix>>,
    pub module_action: Option<Vec<Matrix>>,
    pub jet: Option<JetSpec>,
    pub jet2: Option<JetSpec>,
    pub options: Options,
}

impl Config {
    pub fn dim(&self) -> usize {
        self.labels().len()
    }

    pub fn labels(&self) -> &[String] {
        match &self.algebra {
            AlgebraSource::Lya { algebra, .. } => algebra.labels(),
            AlgebraSource::Leibniz(l) => l.labels(),
        }
    }
}

/// Parses the JSON text; syntax and schema errors carry line and column.
pub fn parse(text: &str) -> Result<Manifest, InputError> {
    serde_json::from_str(text)
        .map_err(|e| InputError(format!("line {}, column {}: {}", e.line(), e.column(), strip_position(&e))))
}

fn strip_position(e: &serde_json::Error) -> String {
    let s = e.to_string();
    match s.rfind(" at line ") {
        Some(i) => s[..i].to_string(),
        None => s,
    }
}

/// Pretty JSON with a trailing newline.
pub fn to_json(m: &Manifest) -> String {
    crate::json::pretty(&serde_json::to_value(m).expect("manifest serializes"))
}

impl Manifest {
    pub fn normalize(&self) -> Result<Manifest, InputError> {
        Ok(Config::from_manifest(self)?.to_manifest())
    }
}

pub fn parse_field(s: &str) -> Result<Field, InputError> {
    let t = s.trim();
    if t == "Q" {
        return Ok(Field::Rational);
    }
    if let Some(p) = t.strip_prefix("GF(").and_then(|r| r.strip_suffix(')')) {
        let p: u64 = p.trim().parse().map_err(|_| InputError(format!("invalid field descriptor {s:?}")))?;
        return Field::prime(p).map_err(|e| InputError(format!("field: {e}")));
    }
    err(format!("invalid field descriptor {s:?} (expected \"Q\" or \"GF(p)\")"))
}

fn scalar(field: Field, s: &str, at: &str) -> Result<Scalar, InputError> {
    field.parse(s).map_err(|e| InputError(format!("{at}: {e}")))
}

fn labels_of(dim: usize, labels: &Option<Vec<String>>, at: &str) -> Result<Vec<String>, InputError> {
    match labels {
        None => Ok(default_labels(dim)),
        Some(l) if l.len() != dim => err(format!("{at}: {} labels for dimension {dim}", l.len())),
        Some(l) => Ok(l.clone()),
    }
}

fn matrix(field: Field, n: usize, rows: &Rows, at: &str) -> Result<Matrix, InputError> {
    if rows.len() != n || rows.iter().any(|r| r.len() != n) {
        return err(format!("{at}: expected a {n}x{n} matrix"));
    }
    let mut out = Vec::with_capacity(n);
    for (i, r) in rows.iter().enumerate() {
        let row = r
            .iter()
            .enumerate()
            .map(|(j, s)| scalar(field, s, &format!("{at}[{i}][{j}]")))
            .collect::<Result<Vec<_>, _>>()?;
        out.push(row);
    }
    Matrix::from_rows(field, n, out).map_err(|e| InputError(format!("{at}: {e}")))
}

pub fn rows_of(m: &Matrix) -> Rows {
    (0..m.rows()).map(|i| m.row(i).iter().map(ToString::to_string).collect()).collect()
}

fn entry_tuple(e: &Entry, arity: usize, dim: usize, at: &str) -> Result<(), InputError> {
    if e.args.len() != arity {
        return err(format!("{at}: expected {arity} arguments, got {}", e.args.len()));
    }
    if let Some(&bad) = e.args.iter().chain([&e.term]).find(|&&i| i >= dim) {
        return err(format!("{at}: index {bad} out of range for dimension {dim}"));
    }
    Ok(())
}

/// Sparse canonical-tuple entries of a cochain.
pub fn cochain_entries(c: &Cochain) -> Vec<Entry> {
    let s = c.space();
    let mut out = Vec::new();
    for (k, t) in s.canonical_tuples().into_iter().enumerate() {
        for v in 0..s.dim_v() {
            let x = &c.coeffs()[s.coordinate(k, v)];
            if !x.is_zero() {
                out.push(Entry { args: t.clone(), term: v, value: x.to_string() });
            }
        }
    }
    out
}

fn cochain_from_entries(space: CochainSpace, entries: &[Entry], at: &str) -> Result<Cochain, InputError> {
    let field = space.field();
    let mut coeffs = vec![field.zero(); space.dim()];
    let mut seen = BTreeSet::new();
    for (n, e) in entries.iter().enumerate() {
        let at = format!("{at}[{n}]");
        entry_tuple(e, space.arity(), space.alg_dim(), &at)?;
        match space.locate(&e.args) {
            Some((k, true)) if space.canonical_tuples()[k] == e.args => {
                if !seen.insert((e.args.clone(), e.term)) {
                    return err(format!("{at}: duplicate entry"));
                }
                coeffs[space.coordinate(k, e.term)] = scalar(field, &e.value, &at)?;
            }
            Some(_) => return err(format!("{at}: arguments {:?} are not a canonical tuple", e.args)),
            None => return err(format!("{at}: arguments {:?} repeat inside a skew pair", e.args)),
        }
    }
    Cochain::new(space, coeffs).map_err(|e| InputError(format!("{at}: {e}")))
}

fn jet_from_block(field: Field, dim: usize, b: &JetBlock, at: &str) -> Result<JetSpec, InputError> {
    if b.order == 0 || b.f.len() != b.order || b.g.len() != b.order {
        return err(format!(
            "{at}: order {} with {} binary and {} ternary terms",
            b.order,
            b.f.len(),
            b.g.len()
        ));
    }
    let even = CochainSpace::new(field, 2, dim, dim).map_err(|e| InputError(format!("{at}: {e}")))?;
    let odd = CochainSpace::new(field, 3, dim, dim).map_err(|e| InputError(format!("{at}: {e}")))?;
    let f = b
        .f
        .iter()
        .enumerate()
        .map(|(i, es)| cochain_from_entries(even, es, &format!("{at}.f[{i}]")))
        .collect::<Result<_, _>>()?;
    let g = b
        .g
        .iter()
        .enumerate()
        .map(|(i, es)| cochain_from_entries(odd, es, &format!("{at}.g[{i}]")))
        .collect::<Result<_, _>>()?;
    Ok(JetSpec { f, g })
}

fn jet_to_block(j: &JetSpec) -> JetBlock {
    JetBlock {
        order: j.f.len(),
        f: j.f.iter().map(cochain_entries).collect(),
        g: j.g.iter().map(cochain_entries).collect(),
    }
}

fn element_matrices(
    field: Field,
    n: usize,
    group: &FiniteGroup,
    list: &[ElementMatrix],
    at: &str,
) -> Result<Vec<Matrix>, InputError> {
    let mut out: Vec<Option<Matrix>> = vec![None; group.order()];
    for (i, em) in list.iter().enumerate() {
        let g = group
            .index_of(&em.element)
            .ok_or_else(|| InputError(format!("{at}[{i}]: unknown group element {:?}", em.element)))?;
        if out[g].is_some() {
            return err(format!("{at}[{i}]: element {:?} listed twice", em.element));
        }
        out[g] = Some(matrix(field, n, &em.matrix, &format!("{at}[{i}].matrix"))?);
    }
    out.into_iter()
        .enumerate()
        .map(|(g, m)| m.ok_or_else(|| InputError(format!("{at}: no matrix for element {:?}", group.label(g)))))
        .collect()
}

fn element_list(group: &FiniteGroup, mats: &[Matrix]) -> Vec<ElementMatrix> {
    mats.iter()
        .enumerate()
        .map(|(g, m)| ElementMatrix { element: group.label(g).to_string(), matrix: rows_of(m) })
        .collect()
}

fn binary_entries(list: &[Entry], field: Field, dim: usize, at: &str) -> Result<Vec<(usize, usize, usize, Scalar)>, InputError> {
    list.iter()
        .enumerate()
        .map(|(n, e)| {
            let at = format!("{at}[{n}]");
            entry_tuple(e, 2, dim, &at)?;
            Ok((e.args[0], e.args[1], e.term, scalar(field, &e.value, &at)?))
        })
        .collect()
}

fn binary_list(entries: Vec<(usize, usize, usize, Scalar)>) -> Vec<Entry> {
    entries
        .into_iter()
        .map(|(i, j, k, c)| Entry { args: vec![i, j], term: k, value: c.to_string() })
        .collect()
}

impl Config {
    pub fn from_manifest(m: &Manifest) -> Result<Config, InputError> {
        let field = parse_field(&m.field)?;
        let algebra = match (&m.algebra, &m.leibniz) {
            (Some(a), None) => {
                let labels = labels_of(a.dim, &a.labels, "algebra.labels")?;
                let binary = binary_entries(&a.binary, field, a.dim, "algebra.binary")?;
                let ternary = a
                    .ternary
                    .iter()
                    .enumerate()
                    .map(|(n, e)| {
                        let at = format!("algebra.ternary[{n}]");
                        entry_tuple(e, 3, a.dim, &at)?;
                        Ok((e.args[0], e.args[1], e.args[2], e.term, scalar(field, &e.value, &at)?))
                    })
                    .collect::<Result<Vec<_>, InputError>>()?;
                let raw = a.constants == ConstantsMode::Raw;
                let built = if raw {
                    LyAlgebra::from_raw(field, labels, binary, ternary)
                } else {
                    LyAlgebra::new(field, labels, binary, ternary)
                };
                AlgebraSource::Lya { algebra: built.map_err(|e| InputError(format!("algebra: {e}")))?, raw }
            }
            (None, Some(l)) => {
                let labels = labels_of(l.dim, &l.labels, "leibniz.labels")?;
                let product = binary_entries(&l.product, field, l.dim, "leibniz.product")?;
                AlgebraSource::Leibniz(
                    LeibnizAlgebra::new(field, labels, product).map_err(|e| InputError(format!("leibniz: {e}")))?,
                )
            }
            (Some(_), Some(_)) => return err("give either an algebra or a leibniz block, not both"),
            (None, None) => return err("missing algebra block"),
        };
        let d = match &algebra {
            AlgebraSource::Lya { algebra, .. } => algebra.dim(),
            AlgebraSource::Leibniz(l) => l.dim(),
        };
        let representation = match &m.representation {
            None => None,
            Some(r) => Some(representation(field, d, r)?),
        };
        let group = match &m.group {
            None => None,
            Some(g) => Some(group(g)?),
        };
        let action = match (&m.action, &group) {
            (None, _) => None,
            (Some(_), None) => return err("action given without a group"),
            (Some(list), Some(g)) => Some(element_matrices(field, d, g, list, "action")?),
        };
        let module_action = match (&m.module_action, &group) {
            (None, _) => None,
            (Some(_), None) => return err("module_action given without a group"),
            (Some(list), Some(g)) => {
                let dv = match &representation {
                    Some(RepresentationSpec::Explicit(r)) => r.dim(),
                    _ => d,
                };
                Some(element_matrices(field, dv, g, list, "module_action")?)
            }
        };
        let jet = m.jet.as_ref().map(|b| jet_from_block(field, d, b, "jet")).transpose()?;
        let jet2 = m.jet2.as_ref().map(|b| jet_from_block(field, d, b, "jet2")).transpose()?;
        if jet2.is_some() && jet.is_none() {
            return err("jet2 given without jet");
        }
        let options = m.options.clone().unwrap_or_default();
        if options.level == Some(0) {
            return err("options.level must be at least 1");
        }
        if options.order == Some(0) {
            return err("options.order must be at least 1");
        }
        if let (Some(sub), Some(g)) = (&options.subgroup, &group) {
            if let Some(bad) = sub.iter().find(|s| g.index_of(s).is_none()) {
                return err(format!("options.subgroup: unknown group element {bad:?}"));
            }
        } else if options.subgroup.is_some() {
            return err("options.subgroup given without a group");
        }
        Ok(Config { field, algebra, representation, group, action, module_action, jet, jet2, options })
    }

    pub fn to_manifest(&self) -> Manifest {
        let (algebra, leibniz) = match &self.algebra {
            AlgebraSource::Lya { algebra, raw } => {
                let (b, t) = if *raw { algebra.raw_constants() } else { algebra.independent_constants() };
                let block = AlgebraBlock {
                    dim: algebra.dim(),
                    labels: Some(algebra.labels().to_vec()),
                    constants: if *raw { ConstantsMode::Raw } else { ConstantsMode::Independent },
                    binary: binary_list(b),
                    ternary: t
                        .into_iter()
                        .map(|(i, j, k, l, c)| Entry { args: vec![i, j, k], term: l, value: c.to_string() })
                        .collect(),
                };
                (Some(block), None)
            }
            AlgebraSource::Leibniz(l) => (
                None,
                Some(LeibnizBlock {
                    dim: l.dim(),
                    labels: Some(l.labels().to_vec()),
                    product: binary_list(l.constants()),
                }),
            ),
        };
        let representation = self.representation.as_ref().map(|r| match r {
            RepresentationSpec::Adjoint => RepresentationBlock {
                kind: RepresentationKind::Adjoint,
                dim: None,
                rho: None,
                d: None,
                theta: None,
            },
            RepresentationSpec::Explicit(r) => {
                let n = r.alg_dim();
                RepresentationBlock {
                    kind: RepresentationKind::Explicit,
                    dim: Some(r.dim()),
                    rho: Some((0..n).map(|i| rows_of(r.rho(i))).collect()),
                    d: Some((0..n * n).map(|k| rows_of(r.d(k / n, k % n))).collect()),
                    theta: Some((0..n * n).map(|k| rows_of(r.theta(k / n, k % n))).collect()),
                }
            }
        });
        let group = self.group.as_ref().map(|g| GroupBlock {
            elements: g.labels().to_vec(),
            table: g.table().iter().map(|row| row.iter().map(|&h| g.label(h).to_string()).collect()).collect(),
        });
        let action = match (&self.action, &self.group) {
            (Some(m), Some(g)) => Some(element_list(g, m)),
            _ => None,
        };
        let module_action = match (&self.module_action, &self.group) {
            (Some(m), Some(g)) => Some(element_list(g, m)),
            _ => None,
        };
        Manifest {
            field: self.field.to_string(),
            algebra,
            leibniz,
            representation,
            group,
            action,
            module_action,
            jet: self.jet.as_ref().map(jet_to_block),
            jet2: self.jet2.as_ref().map(jet_to_block),
            options: (!self.options.is_empty()).then(|| self.options.clone()),
        }
    }
}

fn representation(field: Field, d: usize, r: &RepresentationBlock) -> Result<RepresentationSpec, InputError> {
    match r.kind {
        RepresentationKind::Adjoint => {
            if r.dim.is_some() || r.rho.is_some() || r.d.is_some() || r.theta.is_some() {
                return err("representation: an adjoint representation takes no dim or matrices");
            }
            Ok(RepresentationSpec::Adjoint)
        }
        RepresentationKind::Explicit => {
            let (Some(dv), Some(rho), Some(dd), Some(theta)) = (r.dim, &r.rho, &r.d, &r.theta) else {
                return err("representation: explicit needs dim, rho, d and theta");
            };
            let list = |ms: &[Rows], name: &str, count: usize| -> Result<Vec<Matrix>, InputError> {
                if ms.len() != count {
                    return err(format!("representation.{name}: expected {count} matrices, got {}", ms.len()));
                }
                ms.iter()
                    .enumerate()
                    .map(|(i, m)| matrix(field, dv, m, &format!("representation.{name}[{i}]")))
                    .collect()
            };
            let rep = Representation::new(
                field,
                d,
                dv,
                list(rho, "rho", d)?,
                list(dd, "d", d * d)?,
                list(theta, "theta", d * d)?,
            )
            .map_err(|e| InputError(format!("representation: {e}")))?;
            Ok(RepresentationSpec::Explicit(rep))
        }
    }
}

fn group(g: &GroupBlock) -> Result<FiniteGroup, InputError> {
    let n = g.elements.len();
    let mut seen = BTreeSet::new();
    if let Some(dup) = g.elements.iter().find(|e| !seen.insert(e.as_str())) {
        return err(format!("group.elements: {dup:?} listed twice"));
    }
    let index = |s: &str, at: String| {
        g.elements
            .iter()
            .position(|e| e == s)
            .ok_or_else(|| InputError(format!("{at}: unknown group element {s:?}")))
    };
    if g.table.len() != n {
        return err(format!("group.table: expected {n} rows"));
    }
    let mut table = Vec::with_capacity(n);
    for (i, row) in g.table.iter().enumerate() {
        if row.len() != n {
            return err(format!("group.table[{i}]: expected {n} entries"));
        }
        table.push(
            row.iter()
                .enumerate()
                .map(|(j, s)| index(s, format!("group.table[{i}][{j}]")))
                .collect::<Result<Vec<_>, _>>()?,
        );
    }
    FiniteGroup::new(g.elements.clone(), table).map_err(|e| InputError(format!("group: {e}")))
}
