//! Small algebras, groups and actions used throughout the tests and the
//! shipped manifests.

use lyalg_linalg::{Field, Matrix};

use crate::algebra::{default_labels, LyAlgebra};
use crate::equivariant::{FiniteGroup, GroupAction};

const Q: Field = Field::Rational;

fn verified(a: LyAlgebra) -> LyAlgebra {
    a.verify().expect("fixture algebra satisfies the axioms")
}

/// `[e1,e2] = e1`, `{e1,e2,e2} = e1`.
pub fn ex33() -> LyAlgebra {
    verified(ex33_unverified())
}

fn ex33_unverified() -> LyAlgebra {
    LyAlgebra::new(Q, default_labels(2), vec![(0, 1, 0, Q.one())], vec![(0, 1, 1, 0, Q.one())])
        .expect("constants in range")
}

/// `[e1,e2] = e2`, `{e1,e2,e2} = e1`; not a Lie-Yamaguti algebra.
pub fn ex33_swapped() -> LyAlgebra {
    LyAlgebra::new(Q, default_labels(2), vec![(0, 1, 1, Q.one())], vec![(0, 1, 1, 0, Q.one())])
        .expect("constants in range")
}

/// Zero binary bracket, `{e1,e2,e2} = e1`.
pub fn l0() -> LyAlgebra {
    verified(
        LyAlgebra::new(Q, default_labels(2), vec![], vec![(0, 1, 1, 0, Q.one())])
            .expect("constants in range"),
    )
}

pub fn abelian(d: usize) -> LyAlgebra {
    verified(LyAlgebra::abelian(Q, d))
}

/// `sl2` with its Lie bracket and zero ternary bracket, basis `h, e, f`.
pub fn sl2() -> LyAlgebra {
    let labels = ["h", "e", "f"].iter().map(|s| s.to_string()).collect();
    verified(
        LyAlgebra::new(
            Q,
            labels,
            vec![(0, 1, 1, Q.from_i64(2)), (0, 2, 2, Q.from_i64(-2)), (1, 2, 0, Q.one())],
            vec![],
        )
        .expect("constants in range"),
    )
}

pub fn all_algebras() -> Vec<LyAlgebra> {
    vec![ex33(), l0(), abelian(2), abelian(3), sl2()]
}

pub fn z2() -> FiniteGroup {
    FiniteGroup::new(vec!["e".into(), "g".into()], vec![vec![0, 1], vec![1, 0]])
        .expect("well-formed table")
}

pub fn z3() -> FiniteGroup {
    let table = (0..3).map(|i| (0..3).map(|j| (i + j) % 3).collect()).collect();
    FiniteGroup::new(vec!["e".into(), "r".into(), "r2".into()], table).expect("well-formed table")
}

fn neg_identity(d: usize) -> Matrix {
    Matrix::identity(Q, d).scale(&Q.from_i64(-1))
}

/// `g` acting by `−id` on the algebra of [`ex33`]. Fails the automorphism
/// condition on `[e1,e2]`.
pub fn ex33_literal_action() -> GroupAction {
    GroupAction::new(z2(), ex33(), vec![Matrix::identity(Q, 2), neg_identity(2)])
        .expect("shapes agree")
}

/// `g` acting by `−id` on [`l0`].
pub fn l0_neg_action() -> GroupAction {
    GroupAction::new(z2(), l0(), vec![Matrix::identity(Q, 2), neg_identity(2)]).expect("shapes agree")
}

/// Every element of `group` acting by the identity.
pub fn trivial_action(group: FiniteGroup, a: LyAlgebra) -> GroupAction {
    let id = Matrix::identity(a.field(), a.dim());
    let mats = vec![id; group.order()];
    GroupAction::new(group, a, mats).expect("shapes agree")
}

/// `g = diag(1, 1, −1)` on the abelian algebra of dimension 3.
pub fn abelian3_diag_action() -> GroupAction {
    let g = Matrix::from_i64(Q, &[&[1, 0, 0], &[0, 1, 0], &[0, 0, -1]]);
    GroupAction::new(z2(), abelian(3), vec![Matrix::identity(Q, 3), g]).expect("shapes agree")
}

/// The Chevalley involution `h ↦ −h, e ↦ −f, f ↦ −e` on [`sl2`].
pub fn sl2_chevalley_action() -> GroupAction {
    let g = Matrix::from_i64(Q, &[&[-1, 0, 0], &[0, 0, -1], &[0, -1, 0]]);
    GroupAction::new(z2(), sl2(), vec![Matrix::identity(Q, 3), g]).expect("shapes agree")
}

/// `Z/3` permuting the basis of the abelian algebra of dimension 3.
pub fn abelian3_cyclic_action() -> GroupAction {
    let r = Matrix::from_i64(Q, &[&[0, 0, 1], &[1, 0, 0], &[0, 1, 0]]);
    let r2 = r.mul(&r).expect("square");
    GroupAction::new(z3(), abelian(3), vec![Matrix::identity(Q, 3), r, r2]).expect("shapes agree")
}

/// Actions satisfying every axiom.
pub fn valid_actions() -> Vec<GroupAction> {
    let mut out = vec![
        l0_neg_action(),
        abelian3_diag_action(),
        sl2_chevalley_action(),
        abelian3_cyclic_action(),
    ];
    out.extend(all_algebras().into_iter().map(|a| trivial_action(z2(), a)));
    out
}
