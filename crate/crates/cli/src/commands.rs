//! Command implementations. Each one fills a [`Report`]; mathematical
//! failures raise the status to `Violation`, bad input to `InputError`.

use lyalg::coboundary::cochain_to_matrix;
use lyalg::deformation::{
    check_equivariant_jet, check_jet, equivalent_first_order, gauge_transform, trivialize, DeformationJet,
    Equivariance, JetReport, Trivialization,
};
use lyalg::equivariant::check_closure;
use lyalg::{
    adjoint_rep, check_action, check_equivariant_compat, check_group, check_lya, check_morphism,
    check_representation, cohomology, equivariant_cohomology, equivariant_subspace, fixed_subalgebra,
    leibniz_to_lya, CochainPair, CohomologyResult, EquivariantModuleAction, GroupAction, LyAlgebra, LyaError,
    Representation, Verdict,
};
use serde_json::{json, Value};

use crate::manifest::{cochain_entries, AlgebraSource, Config, InputError, JetSpec, RepresentationSpec};
use crate::report::{matrix, scalars, Report, Section, Status};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Verb {
    Check,
    Cohomology,
    EquivariantCohomology,
    FixedSubalgebra,
    DeformationCheck,
    DeformationTrivialize,
    DeformationCompare,
}

/// Flag values; each overrides the matching manifest option.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Flags {
    pub level: Option<usize>,
    pub order: Option<usize>,
    pub subgroup: Option<Vec<String>>,
    pub equivariant: bool,
    pub representatives: bool,
}

/// The command stopped early; the reason is already in the report.
struct Stop;

type Step<T> = Result<T, Stop>;

fn input(report: &mut Report, msg: impl Into<String>) -> Stop {
    report.section("error").set("kind", "input").set("message", msg.into());
    report.mark(Status::InputError);
    Stop
}

fn core(report: &mut Report, e: LyaError) -> Stop {
    let status = match &e {
        LyaError::Linalg(_)
        | LyaError::Malformed(_)
        | LyaError::DimensionMismatch(_)
        | LyaError::Unverified(_)
        | LyaError::Unsupported(_) => Status::InputError,
        LyaError::Violation(_)
        | LyaError::IncompatibleRepresentation { .. }
        | LyaError::ComplexBroken { .. }
        | LyaError::NotCocycle { .. }
        | LyaError::ClosureViolation(_) => Status::Violation,
    };
    let s = report.section("error");
    s.set("kind", if status == Status::InputError { "input" } else { "violation" });
    s.set("message", e.to_string());
    match &e {
        LyaError::Violation(v) => {
            s.verdict(&Verdict::Fail(v.clone()));
        }
        LyaError::IncompatibleRepresentation { witness, residual } => {
            s.set("witness", witness.clone()).set("residual", scalars(residual));
        }
        LyaError::NotCocycle { residual } => {
            s.set("residual", scalars(residual));
        }
        LyaError::ComplexBroken { witness } => {
            s.set("witness", scalars(witness));
        }
        _ => {}
    }
    report.mark(status);
    Stop
}

trait OrStop<T> {
    fn or_stop(self, report: &mut Report) -> Step<T>;
}

impl<T> OrStop<T> for lyalg::Result<T> {
    fn or_stop(self, report: &mut Report) -> Step<T> {
        self.map_err(|e| core(report, e))
    }
}

impl<T> OrStop<T> for Result<T, InputError> {
    fn or_stop(self, report: &mut Report) -> Step<T> {
        self.map_err(|e| input(report, e.0))
    }
}

pub fn run(verb: Verb, cfg: &Config, flags: &Flags, report: &mut Report) {
    let _ = match verb {
        Verb::Check => check(cfg, flags, report),
        Verb::Cohomology => cohomology_cmd(cfg, flags, report),
        Verb::EquivariantCohomology => equivariant_cmd(cfg, flags, report),
        Verb::FixedSubalgebra => fixed_cmd(cfg, flags, report),
        Verb::DeformationCheck => deformation_check(cfg, flags, report),
        Verb::DeformationTrivialize => deformation_trivialize(cfg, flags, report),
        Verb::DeformationCompare => deformation_compare(cfg, flags, report),
    };
}

fn fail_on(report: &mut Report, v: &Verdict) {
    if !v.is_pass() {
        report.mark(Status::Violation);
    }
}

/// Checks the algebra block and returns it verified.
fn algebra(cfg: &Config, report: &mut Report) -> Step<LyAlgebra> {
    let a = match &cfg.algebra {
        AlgebraSource::Lya { algebra, .. } => algebra.clone(),
        AlgebraSource::Leibniz(lz) => {
            let v = lz.check();
            report
                .section("leibniz")
                .set("dim", lz.dim())
                .set("labels", lz.labels().to_vec())
                .verdict(&v);
            if !v.is_pass() {
                report.mark(Status::Violation);
                return Err(Stop);
            }
            leibniz_to_lya(lz).or_stop(report)?
        }
    };
    let v = check_lya(&a);
    let s = report.section("algebra");
    s.set("field", cfg.field.to_string()).set("dim", a.dim()).set("labels", a.labels().to_vec());
    if matches!(cfg.algebra, AlgebraSource::Leibniz(_)) {
        let (b, t) = a.independent_constants();
        s.set("binary", constants(b.into_iter().map(|(i, j, k, c)| (vec![i, j], k, c))));
        s.set("ternary", constants(t.into_iter().map(|(i, j, k, l, c)| (vec![i, j, k], l, c))));
    }
    s.verdict(&v);
    match a.verify() {
        Ok(a) => Ok(a),
        Err(_) => {
            report.mark(Status::Violation);
            Err(Stop)
        }
    }
}

fn constants(it: impl Iterator<Item = (Vec<usize>, usize, lyalg::Scalar)>) -> Value {
    Value::Array(it.map(|(args, term, c)| json!({"args": args, "term": term, "value": c.to_string()})).collect())
}

fn representation(cfg: &Config, a: &LyAlgebra, report: &mut Report) -> Step<(Representation, bool)> {
    match &cfg.representation {
        None | Some(RepresentationSpec::Adjoint) => Ok((adjoint_rep(a).or_stop(report)?, true)),
        Some(RepresentationSpec::Explicit(r)) => Ok((r.clone(), false)),
    }
}

fn subgroup(cfg: &Config, flags: &Flags, report: &mut Report) -> Step<Option<Vec<usize>>> {
    let Some(names) = flags.subgroup.as_ref().or(cfg.options.subgroup.as_ref()) else {
        return Ok(None);
    };
    let Some(g) = &cfg.group else {
        return Err(input(report, "a subgroup needs a group block"));
    };
    let mut idx = Vec::with_capacity(names.len());
    for n in names {
        match g.index_of(n) {
            Some(i) if !idx.contains(&i) => idx.push(i),
            Some(_) => return Err(input(report, format!("subgroup lists {n:?} twice"))),
            None => return Err(input(report, format!("unknown group element {n:?}"))),
        }
    }
    Ok(Some(idx))
}

/// The group and action blocks, checked. Returns the full action.
fn action(cfg: &Config, a: &LyAlgebra, report: &mut Report) -> Step<GroupAction> {
    let (Some(g), Some(mats)) = (&cfg.group, &cfg.action) else {
        return Err(input(report, "this command needs group and action blocks"));
    };
    let gv = check_group(g);
    report.section("group").set("order", g.order()).set("elements", g.labels().to_vec()).verdict(&gv);
    if !gv.is_pass() {
        report.mark(Status::Violation);
        return Err(Stop);
    }
    let act = GroupAction::new(g.clone(), a.clone(), mats.clone()).or_stop(report)?;
    let av = check_action(&act).or_stop(report)?;
    report.section("action").verdict(&av);
    if !av.is_pass() {
        report.mark(Status::Violation);
        return Err(Stop);
    }
    Ok(act)
}

fn module_action(
    cfg: &Config,
    act: &GroupAction,
    r: &Representation,
    adjoint: bool,
    report: &mut Report,
) -> Step<EquivariantModuleAction> {
    match &cfg.module_action {
        Some(mats) => EquivariantModuleAction::new(act.group().clone(), cfg.field, r.dim(), mats.clone()).or_stop(report),
        None if adjoint => Ok(EquivariantModuleAction::adjoint(act)),
        None => Err(input(report, "an explicit representation needs a module_action block")),
    }
}

fn jet_section(s: &mut Section, order: usize, r: &JetReport) {
    s.set("order", order);
    match &r.failure {
        None => {
            s.set("verdict", "pass");
        }
        Some(f) => {
            s.set("verdict", "fail")
                .set("failed_order", f.order)
                .set("rule", f.tag.as_str())
                .set("witness", f.witness.clone())
                .set("residual", scalars(&f.residual));
        }
    }
}

fn jet(a: &LyAlgebra, spec: &JetSpec, flags: &Flags, cfg: &Config, report: &mut Report) -> Step<DeformationJet> {
    let j = DeformationJet::new(a.clone(), spec.f.clone(), spec.g.clone()).or_stop(report)?;
    match flags.order.or(cfg.options.order) {
        Some(n) if n > j.order() => {
            Err(input(report, format!("requested order {n} exceeds the jet order {}", j.order())))
        }
        Some(n) => j.truncate(n).or_stop(report),
        None => Ok(j),
    }
}

fn equivariant(cfg: &Config, flags: &Flags) -> bool {
    flags.equivariant || cfg.options.equivariant.unwrap_or(false)
}

fn check(cfg: &Config, flags: &Flags, report: &mut Report) -> Step<()> {
    let a = algebra(cfg, report)?;
    let (r, adjoint) = representation(cfg, &a, report)?;
    if cfg.representation.is_some() {
        let v = check_representation(&a, &r).or_stop(report)?;
        report
            .section("representation")
            .set("kind", if adjoint { "adjoint" } else { "explicit" })
            .set("dim", r.dim())
            .verdict(&v);
        fail_on(report, &v);
    }
    let mut act = None;
    if let Some(g) = &cfg.group {
        let gv = check_group(g);
        report.section("group").set("order", g.order()).set("elements", g.labels().to_vec()).verdict(&gv);
        fail_on(report, &gv);
        if let (true, Some(mats)) = (gv.is_pass(), &cfg.action) {
            let candidate = GroupAction::new(g.clone(), a.clone(), mats.clone()).or_stop(report)?;
            let av = check_action(&candidate).or_stop(report)?;
            report.section("action").verdict(&av);
            fail_on(report, &av);
            if av.is_pass() {
                act = Some(candidate);
            }
        }
    }
    if let Some(act) = &act {
        if cfg.representation.is_some() || cfg.module_action.is_some() {
            let m = module_action(cfg, act, &r, adjoint, report)?;
            let v = check_equivariant_compat(act, &r, &m).or_stop(report)?;
            report.section("compatibility").verdict(&v);
            fail_on(report, &v);
        }
    }
    for (name, spec) in [("jet", &cfg.jet), ("jet2", &cfg.jet2)] {
        let Some(spec) = spec else { continue };
        let j = jet(&a, spec, flags, cfg, report)?;
        let rep = match (&act, equivariant(cfg, flags)) {
            (Some(act), true) => check_equivariant_jet(&j, act).or_stop(report)?,
            (None, true) => return Err(input(report, "equivariant jet check needs a valid group action")),
            _ => check_jet(&j),
        };
        let s = report.section(name);
        jet_section(s, j.order(), &rep);
        s.set("equivariant", equivariant(cfg, flags));
        if !rep.is_pass() {
            report.mark(Status::Violation);
        }
    }
    Ok(())
}

fn level(cfg: &Config, flags: &Flags, report: &mut Report) -> Step<usize> {
    match flags.level.or(cfg.options.level).unwrap_or(1) {
        0 => Err(input(report, "level must be at least 1")),
        n => Ok(n),
    }
}

fn pair_json(p: &CochainPair) -> Value {
    json!({"even": entries_json(&p.f), "odd": entries_json(&p.g)})
}

fn entries_json(c: &lyalg::Cochain) -> Value {
    serde_json::to_value(cochain_entries(c)).expect("entries serialize")
}

fn cohomology_section(s: &mut Section, h: &CohomologyResult, reps: bool) {
    s.set("level", h.level)
        .set("degrees", json!([2 * h.level, 2 * h.level + 1]))
        .set("dim_v", h.spaces.0.dim_v())
        .set("cochain_dims", json!([h.spaces.0.dim(), h.spaces.1.dim()]))
        .set("z_dims", json!([h.z_dims.0, h.z_dims.1]))
        .set("b_dims", json!([h.b_dims.0, h.b_dims.1]))
        .set("h_dims", json!([h.h_dims.0, h.h_dims.1]));
    if let Some(agree) = h.general_kernel_agrees {
        s.set("general_kernel_agrees", agree);
    }
    if reps {
        let list: Vec<Value> = h
            .representatives
            .iter()
            .map(|v| pair_json(&CochainPair::from_stacked(h.spaces.0, h.spaces.1, v).expect("stacked")))
            .collect();
        s.set("representatives", list);
    }
}

fn cohomology_cmd(cfg: &Config, flags: &Flags, report: &mut Report) -> Step<()> {
    let a = algebra(cfg, report)?;
    let n = level(cfg, flags, report)?;
    let (r, _) = representation(cfg, &a, report)?;
    let v = check_representation(&a, &r).or_stop(report)?;
    if !v.is_pass() {
        report.section("representation").verdict(&v);
        report.mark(Status::Violation);
        return Err(Stop);
    }
    let h = cohomology(&a, &r, n).or_stop(report)?;
    let reps = flags.representatives || cfg.options.representatives.unwrap_or(false);
    cohomology_section(report.section("cohomology"), &h, reps);
    Ok(())
}

fn restricted_action(
    cfg: &Config,
    flags: &Flags,
    act: GroupAction,
    m: EquivariantModuleAction,
    report: &mut Report,
) -> Step<(GroupAction, EquivariantModuleAction)> {
    match subgroup(cfg, flags, report)? {
        None => Ok((act, m)),
        Some(h) => {
            let names: Vec<String> = h.iter().map(|&g| act.group().label(g).to_string()).collect();
            report.section("subgroup").set("elements", names);
            Ok((act.restrict(&h).or_stop(report)?, m.restrict(&h).or_stop(report)?))
        }
    }
}

fn equivariant_cmd(cfg: &Config, flags: &Flags, report: &mut Report) -> Step<()> {
    let a = algebra(cfg, report)?;
    let n = level(cfg, flags, report)?;
    let (r, adjoint) = representation(cfg, &a, report)?;
    let v = check_representation(&a, &r).or_stop(report)?;
    if !v.is_pass() {
        report.section("representation").verdict(&v);
        report.mark(Status::Violation);
        return Err(Stop);
    }
    let act = action(cfg, &a, report)?;
    let m = module_action(cfg, &act, &r, adjoint, report)?;
    let (act, m) = restricted_action(cfg, flags, act, m, report)?;
    let cv = check_equivariant_compat(&act, &r, &m).or_stop(report)?;
    report.section("compatibility").verdict(&cv);
    if !cv.is_pass() {
        report.mark(Status::Violation);
        return Err(Stop);
    }
    let h = equivariant_cohomology(&a, &r, &act, &m, n).or_stop(report)?;
    let ce = equivariant_subspace(&h.spaces.0, &act, &m).or_stop(report)?;
    let co = equivariant_subspace(&h.spaces.1, &act, &m).or_stop(report)?;
    let reps = flags.representatives || cfg.options.representatives.unwrap_or(false);
    let s = report.section("equivariant_cohomology");
    s.set("equivariant_cochain_dims", json!([ce.dim(), co.dim()]));
    cohomology_section(s, &h, reps);
    check_closure(&a, &r, &act, &m, n).or_stop(report)?;
    report.section("closure").set("level", n).set("verdict", "pass");
    Ok(())
}

fn fixed_cmd(cfg: &Config, flags: &Flags, report: &mut Report) -> Step<()> {
    let a = algebra(cfg, report)?;
    let act = action(cfg, &a, report)?;
    let h = subgroup(cfg, flags, report)?.unwrap_or_else(|| (0..act.group().order()).collect());
    let fix = fixed_subalgebra(&act, &h).or_stop(report)?;
    let lv = check_lya(&fix.algebra);
    let mv = check_morphism(&fix.algebra, &a, &fix.inclusion).or_stop(report)?;
    let (b, t) = fix.algebra.independent_constants();
    let names: Vec<String> = h.iter().map(|&g| act.group().label(g).to_string()).collect();
    let s = report.section("fixed_subalgebra");
    s.set("subgroup", names)
        .set("dim", fix.algebra.dim())
        .set("labels", fix.algebra.labels().to_vec())
        .set("binary", constants(b.into_iter().map(|(i, j, k, c)| (vec![i, j], k, c))))
        .set("ternary", constants(t.into_iter().map(|(i, j, k, l, c)| (vec![i, j, k], l, c))))
        .set("inclusion", matrix(&fix.inclusion));
    report.section("fixed_subalgebra_axioms").verdict(&lv);
    report.section("inclusion_morphism").verdict(&mv);
    fail_on(report, &lv);
    fail_on(report, &mv);
    Ok(())
}

fn require_jet<'c>(name: &str, spec: &'c Option<JetSpec>, report: &mut Report) -> Step<&'c JetSpec> {
    spec.as_ref().ok_or_else(|| input(report, format!("missing {name} block")))
}

fn deformation_check(cfg: &Config, flags: &Flags, report: &mut Report) -> Step<()> {
    let a = algebra(cfg, report)?;
    let spec = require_jet("jet", &cfg.jet, report)?;
    let j = jet(&a, spec, flags, cfg, report)?;
    let eq = equivariant(cfg, flags);
    let rep = if eq {
        let act = action(cfg, &a, report)?;
        check_equivariant_jet(&j, &act).or_stop(report)?
    } else {
        check_jet(&j)
    };
    let s = report.section("jet");
    jet_section(s, j.order(), &rep);
    s.set("equivariant", eq).set("null", j.is_null());
    if !rep.is_pass() {
        report.mark(Status::Violation);
    }
    Ok(())
}

fn deformation_trivialize(cfg: &Config, flags: &Flags, report: &mut Report) -> Step<()> {
    let a = algebra(cfg, report)?;
    let spec = require_jet("jet", &cfg.jet, report)?;
    let j = jet(&a, spec, flags, cfg, report)?;
    let eq = equivariant(cfg, flags);
    let act = if eq { Some(action(cfg, &a, report)?) } else { None };
    let context = act.as_ref().map(|action| Equivariance { action });
    let result = trivialize(&j, context).or_stop(report)?;
    let terms = |iso: &lyalg::deformation::IsomorphismJet| -> Value {
        Value::Array(iso.terms()[1..].iter().map(matrix).collect())
    };
    match result {
        Trivialization::Trivial { iso, steps } => {
            let steps: Vec<Value> =
                steps.iter().map(|(r, h)| json!({"order": r, "h": matrix(&cochain_to_matrix(h))})).collect();
            report
                .section("trivialization")
                .set("result", "trivial")
                .set("order", j.order())
                .set("equivariant", eq)
                .set("iso", terms(&iso))
                .set("steps", steps);
            let t = gauge_transform(&j, &iso).or_stop(report)?;
            let rep = check_jet(&t);
            let s = report.section("transformed_jet");
            jet_section(s, t.order(), &rep);
            s.set("null", t.is_null());
            if !rep.is_pass() || !t.is_null() {
                report.mark(Status::Violation);
            }
        }
        Trivialization::Obstructed { order, class, iso } => {
            report
                .section("trivialization")
                .set("result", "obstructed")
                .set("order", j.order())
                .set("equivariant", eq)
                .set("obstructed_at", order)
                .set("class", pair_json(&class))
                .set("iso", terms(&iso));
            report.mark(Status::Violation);
        }
    }
    Ok(())
}

fn deformation_compare(cfg: &Config, flags: &Flags, report: &mut Report) -> Step<()> {
    let a = algebra(cfg, report)?;
    let s1 = require_jet("jet", &cfg.jet, report)?;
    let s2 = require_jet("jet2", &cfg.jet2, report)?;
    let j1 = jet(&a, s1, flags, cfg, report)?;
    let j2 = jet(&a, s2, flags, cfg, report)?;
    match equivalent_first_order(&j1, &j2).or_stop(report)? {
        Some(phi) => {
            report
                .section("first_order")
                .set("equivalent", true)
                .set("phi_1", matrix(&cochain_to_matrix(&phi)));
        }
        None => {
            report.section("first_order").set("equivalent", false);
            report.mark(Status::Violation);
        }
    }
    Ok(())
}
