//! The shipped manifests under `fixtures/`, generated from the algebras in
//! [`lyalg::fixtures`]. `lyalg-gen-fixtures` writes them; a test keeps the
//! files in sync with this module.

use lyalg::algebra::default_labels;
use lyalg::deformation::{gauge_of_null, gauge_transform, DeformationJet, IsomorphismJet};
use lyalg::fixtures as fx;
use lyalg::{adjoint_rep, cohomology, CochainPair, CochainSpace, Field, GroupAction, LeibnizAlgebra, LyAlgebra, Matrix};

use crate::manifest::{to_json, AlgebraSource, Config, JetSpec, Options, RepresentationSpec};

const Q: Field = Field::Rational;

fn base(a: &LyAlgebra) -> Config {
    Config {
        field: a.field(),
        algebra: AlgebraSource::Lya { algebra: a.clone(), raw: false },
        representation: None,
        group: None,
        action: None,
        module_action: None,
        jet: None,
        jet2: None,
        options: Options::default(),
    }
}

fn with_action(act: &GroupAction) -> Config {
    let mut c = base(act.algebra());
    c.representation = Some(RepresentationSpec::Adjoint);
    c.group = Some(act.group().clone());
    c.action = Some(act.matrices().to_vec());
    c
}

fn spec(j: &DeformationJet) -> JetSpec {
    JetSpec {
        f: (1..=j.order()).map(|i| j.f(i).clone()).collect(),
        g: (1..=j.order()).map(|i| j.g(i).clone()).collect(),
    }
}

fn single(a: &LyAlgebra, p: &CochainPair) -> DeformationJet {
    DeformationJet::new(a.clone(), vec![p.f.clone()], vec![p.g.clone()]).expect("order-1 jet")
}

fn leibniz(product: Vec<(usize, usize, usize)>) -> Config {
    let lz = LeibnizAlgebra::new(Q, default_labels(2), product.into_iter().map(|(i, j, k)| (i, j, k, Q.one())).collect())
        .expect("constants in range");
    let mut c = base(&fx::abelian(2));
    c.algebra = AlgebraSource::Leibniz(lz);
    c
}

/// `(file name, configuration)` for every shipped manifest.
pub fn configs() -> Vec<(&'static str, Config)> {
    let mut out = Vec::new();
    out.push(("ex33.json", base(&fx::ex33())));
    out.push(("ex33_literal_action.json", with_action(&fx::ex33_literal_action())));
    let mut l0 = with_action(&fx::l0_neg_action());
    l0.options.level = Some(1);
    out.push(("l0_neg_action.json", l0));

    let p7 = Field::Prime(7);
    let l0_7 = LyAlgebra::new(p7, default_labels(2), vec![], vec![(0, 1, 1, 0, p7.one())])
        .and_then(|a| a.verify().map_err(lyalg::LyaError::Violation))
        .expect("L0 over GF(7)");
    let neg = Matrix::identity(p7, 2).scale(&p7.from_i64(-1));
    let act7 = GroupAction::new(fx::z2(), l0_7, vec![Matrix::identity(p7, 2), neg]).expect("shapes agree");
    out.push(("l0_neg_action_gf7.json", with_action(&act7)));

    for d in 1..=2 {
        let mut c = base(&fx::abelian(d));
        c.representation = Some(RepresentationSpec::Adjoint);
        out.push((["abelian1.json", "abelian2.json"][d - 1], c));
    }
    out.push(("abelian3_diag_action.json", with_action(&fx::abelian3_diag_action())));
    out.push(("abelian3_cyclic_action.json", with_action(&fx::abelian3_cyclic_action())));
    out.push(("sl2.json", base(&fx::sl2())));
    out.push(("sl2_chevalley_action.json", with_action(&fx::sl2_chevalley_action())));

    let (b, t) = fx::ex33().raw_constants();
    let mut b = b;
    b.push((0, 0, 0, Q.one()));
    b.sort_by_key(|e| (e.0, e.1, e.2));
    let bad = LyAlgebra::from_raw(Q, default_labels(2), b, t).expect("constants in range");
    let mut raw = base(&bad);
    raw.algebra = AlgebraSource::Lya { algebra: bad, raw: true };
    out.push(("raw_ly1_violation.json", raw));

    out.push(("leibniz_square.json", leibniz(vec![(0, 0, 1)])));
    out.push(("leibniz_e1e2.json", leibniz(vec![(0, 1, 1)])));

    let ex = fx::ex33();
    let mut c = base(&ex);
    c.jet = Some(spec(&DeformationJet::null(ex.clone(), 2).expect("null jet")));
    out.push(("jet_null_ex33.json", c));

    let phis = [
        Matrix::from_i64(Q, &[&[1, 2], &[0, -1]]),
        Matrix::from_i64(Q, &[&[0, 1], &[1, 0]]),
        Matrix::from_i64(Q, &[&[2, 0], &[3, 1]]),
    ];
    let (j, _) = gauge_of_null(&ex, &phis).expect("gauge of null");
    let mut c = base(&ex);
    c.jet = Some(spec(&j));
    out.push(("jet_gauge_of_null_ex33.json", c));

    let ab = fx::abelian(2);
    let (even, odd) = (CochainSpace::new(Q, 2, 2, 2).unwrap(), CochainSpace::new(Q, 3, 2, 2).unwrap());
    let p = CochainPair::new(even.basis_cochain(0), odd.zero()).expect("pair");
    let mut c = base(&ab);
    c.jet = Some(spec(&single(&ab, &p)));
    out.push(("jet_abelian2_obstructed.json", c));

    let l0a = fx::l0_neg_action();
    let l0 = l0a.algebra().clone();
    let g1 = lyalg::Cochain::from_multilinear(odd, l0.ternary()).expect("ternary bracket is a cochain");
    let j = DeformationJet::new(l0.clone(), vec![even.zero(), even.zero()], vec![g1, odd.zero()]).expect("jet");
    let mut c = with_action(&l0a);
    c.jet = Some(spec(&j));
    c.options.equivariant = Some(true);
    out.push(("jet_l0_equivariant.json", c));

    let h = cohomology(&ex, &adjoint_rep(&ex).expect("adjoint"), 1).expect("cohomology");
    let rep = CochainPair::from_stacked(h.spaces.0, h.spaces.1, &h.representatives[0]).expect("representative");
    let j1 = single(&ex, &rep);
    let iso = IsomorphismJet::new(vec![Matrix::identity(Q, 2), phis[0].clone()]).expect("iso");
    let j2 = gauge_transform(&j1, &iso).expect("gauge");
    let mut c = base(&ex);
    c.jet = Some(spec(&j1));
    c.jet2 = Some(spec(&j2));
    out.push(("jet_compare_equivalent.json", c));

    let mut c = base(&ex);
    c.jet = Some(spec(&j1));
    c.jet2 = Some(spec(&DeformationJet::null(ex.clone(), 1).expect("null jet")));
    out.push(("jet_compare_inequivalent.json", c));
    out
}

/// `(file name, normalized JSON)`.
pub fn generate() -> Vec<(&'static str, String)> {
    configs().into_iter().map(|(n, c)| (n, to_json(&c.to_manifest()))).collect()
}
