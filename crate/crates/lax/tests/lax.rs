use group_kernel::{Element, Hom, ProbeConfig, Word};
use homotopy_2groupoid::{concat_homotopies, morphisms_agree};
use lax::{
    asymmetry_lax, asymmetry_lax_report, check_equivalence, compose_equivalences, is_lax_equivalence,
    kernel_relations_check, lax_compose_strict, lax_concat, lax_invert, lax_invert_twofold,
    lax_target, lax_to_strict, lax_twofold_validate, lax_validate, lax_vertical, q1,
    strict_to_lax, LaxEquivalence, LaxHomotopy, LaxTwoFold, SearchBounds, Side, Strictifier,
};
use proptest::prelude::*;
use xmod_core::{fixtures, verify_two_crossed, xmod_map_verify, XModMorphism};

fn cfg() -> ProbeConfig {
    ProbeConfig::default()
}

fn small_cfg() -> ProbeConfig {
    ProbeConfig::default().with_word_len(2).with_max_tuples(400)
}

/// The trivial morphism FIX-C(Z2) -> FIX-D.
fn base_c2_to_d() -> XModMorphism {
    let a = fixtures::fix_c(&group_kernel::Group::cyclic(2));
    let d = fixtures::fix_d();
    XModMorphism::new(
        &a,
        &d,
        Hom::trivial(&a.l, &d.l),
        Hom::trivial(&a.e, &d.e),
        Hom::trivial(&a.g, &d.g),
    )
}

/// A nontrivial valid lax homotopy out of the trivial morphism: ŝ sends the
/// generator of Z2 to a transposition, t̂ and Π trivial.
fn transposition_cell() -> LaxHomotopy {
    let f = base_c2_to_d();
    let d = f.target.clone();
    let swap = d.e.by_name("1032").map_or_else(
        || d.e.elements().unwrap().into_iter().find(|x| !x.is_identity() && x.mul(x).is_identity()).unwrap(),
        |x| x,
    );
    LaxHomotopy::from_fn(
        &f,
        move |g| if g.is_identity() { swap.group().id() } else { swap.clone() },
        {
            let l = f.target.l.clone();
            move |_| l.id()
        },
        {
            let l = f.target.l.clone();
            move |_, _| l.id()
        },
    )
    .unwrap()
}

#[test]
fn q1_of_fix_c_z2_has_two_basis_symbols_and_verifies() {
    let a = fixtures::fix_c(&group_kernel::Group::cyclic(2));
    let b = q1(&a).unwrap();
    assert_eq!(b.basis_elements().len(), 2);
    assert_eq!(b.fg.free_basis().len(), 2);
    let report = b.verify(&small_cfg());
    assert!(report.passed(), "{}", report.summary());
}

#[test]
fn q1_of_fix_d_verifies_on_word_probes() {
    let b = q1(&fixtures::fix_d()).unwrap();
    let report = b.verify(&small_cfg());
    assert!(report.passed(), "{}", report.summary());
}

#[test]
fn q1_section_retracts_to_identity() {
    let a = fixtures::fix_d();
    let b = q1(&a).unwrap();
    for g in a.g.elements().unwrap() {
        assert_eq!(b.p.apply(&b.bracket(&g)), g);
    }
    for e in a.e.elements().unwrap() {
        let lifted = b.gen_e(&e);
        assert_eq!(b.proj.psi.apply(&lifted), e);
    }
}

#[test]
fn bracket_of_identity_is_not_empty_word() {
    let b = q1(&fixtures::fix_c(&group_kernel::Group::cyclic(2))).unwrap();
    let one = b.base.g.id();
    assert!(!b.bracket(&one).is_identity());
}

#[test]
fn kernel_relations_exhaustive_z2() {
    let a = fixtures::fix_c(&group_kernel::Group::cyclic(2));
    let report = kernel_relations_check(&a, &cfg()).unwrap();
    assert!(report.passed(), "{}", report.summary());
}

#[test]
fn kernel_relations_sampled_s3() {
    let a = fixtures::fix_c(&fixtures::s3());
    let report = kernel_relations_check(&a, &small_cfg().with_max_tuples(150)).unwrap();
    assert!(report.passed(), "{}", report.summary());
}

#[test]
fn kernel_decompose_recompose_roundtrip() {
    let b = q1(&fixtures::fix_d()).unwrap();
    for u in b.fg.probe(&small_cfg()) {
        let w = u.mul(&b.bracket(&b.p.apply(&u)).inv());
        let factors = b.kernel_decompose(&w);
        assert_eq!(b.kernel_recompose(&factors), w);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]
    #[test]
    fn kernel_decompose_recompose_random_words(letters in proptest::collection::vec((0u32..6, prop::bool::ANY), 0..6)) {
        let b = q1(&fixtures::fix_c(&fixtures::s3())).unwrap();
        let mut w = Word::empty();
        for (sym, pos) in letters {
            w = w.concat(&Word::letter(sym, if pos { 1 } else { -1 }));
        }
        let u = b.fg.word(w);
        let k = u.mul(&b.bracket(&b.p.apply(&u)).inv());
        let factors = b.kernel_decompose(&k);
        prop_assert_eq!(b.kernel_recompose(&factors), k);
    }
}

#[test]
fn trivial_lax_homotopy_validates_with_same_target() {
    let f = base_c2_to_d();
    let lh = LaxHomotopy::trivial(&f).unwrap();
    let report = lax_validate(&lh, &small_cfg());
    assert!(report.passed(), "{}", report.summary());
    assert!(morphisms_agree(&lax_target(&lh), &f, &cfg()));
}

#[test]
fn trivial_lax_homotopy_strictifies_to_unit() {
    let f = base_c2_to_d();
    let lh = LaxHomotopy::trivial(&f).unwrap();
    let h = lax_to_strict(&lh).unwrap();
    let ctx = Strictifier::new(&f.source, &f.target).unwrap();
    for g in ctx.bundle.basis_elements() {
        assert!(h.s().eval(&ctx.bundle.bracket(g)).is_identity());
    }
    for e in f.source.e.elements().unwrap() {
        assert!(h.t().eval(&ctx.bundle.gen_e(&e)).is_identity());
    }
}

#[test]
fn transposition_cell_validates_and_has_nontrivial_target() {
    let lh = transposition_cell();
    let report = lax_validate(&lh, &small_cfg());
    assert!(report.passed(), "{}", report.summary());
    let t = lax_target(&lh);
    assert!(!morphisms_agree(&t, &lh.base, &cfg()));
    assert!(xmod_map_verify(&t, &small_cfg()).passed());
}

#[test]
fn strict_side_s_of_bracket2_is_delta_pi_inverse() {
    let lh = transposition_cell();
    let ctx = Strictifier::new(&lh.base.source, &lh.base.target).unwrap();
    let h = ctx.strict_homotopy(&lh).unwrap();
    let d = &lh.base.target;
    for g in lh.base.source.g.elements().unwrap() {
        for k in lh.base.source.g.elements().unwrap() {
            let lhs = h.s().eval(&ctx.bundle.bracket2(&g, &k));
            let rhs = d.delta.apply(&lh.pi(&g, &k)).inv();
            assert_eq!(lhs, rhs);
        }
    }
}

#[test]
fn lax_strict_roundtrip_is_identity() {
    for lh in [LaxHomotopy::trivial(&base_c2_to_d()).unwrap(), transposition_cell()] {
        let h = lax_to_strict(&lh).unwrap();
        let back = strict_to_lax(&lh.base.source, &h, &small_cfg()).unwrap();
        assert!(back.same_as(&lh, &small_cfg()));
    }
}

#[test]
fn concat_with_trivial_is_identity() {
    let lh = transposition_cell();
    let trivial = LaxHomotopy::trivial(&lax_target(&lh)).unwrap();
    let out = lax_concat(&lh, &trivial, &small_cfg()).unwrap();
    assert!(out.same_as(&lh, &small_cfg()));
}

#[test]
fn concat_with_inverse_is_trivial() {
    let lh = transposition_cell();
    let inv = lax_invert(&lh).unwrap();
    assert!(lax_validate(&inv, &small_cfg()).passed());
    let out = lax_concat(&lh, &inv, &small_cfg()).unwrap();
    let trivial = LaxHomotopy::trivial(&lh.base).unwrap();
    assert!(out.same_as(&trivial, &small_cfg()));
}

#[test]
fn concat_commutes_with_strictification_on_basis_tables() {
    let lh = transposition_cell();
    let inv = lax_invert(&lh).unwrap();
    let both = lax_concat(&lh, &inv, &small_cfg()).unwrap();
    let ctx = Strictifier::new(&lh.base.source, &lh.base.target).unwrap();
    let strict_both = ctx.strict_homotopy(&both).unwrap();
    let strict_cat = concat_homotopies(
        &ctx.strict_homotopy(&lh).unwrap(),
        &ctx.strict_homotopy(&inv).unwrap(),
        &small_cfg(),
    )
    .unwrap();
    let src = &lh.base.source;
    for g in src.g.elements().unwrap() {
        assert_eq!(
            strict_both.s().eval(&ctx.bundle.bracket(&g)),
            strict_cat.s().eval(&ctx.bundle.bracket(&g))
        );
        for h in src.g.elements().unwrap() {
            assert_eq!(
                strict_both.t().eval(&ctx.bundle.gen_pair(&g, &h)),
                strict_cat.t().eval(&ctx.bundle.gen_pair(&g, &h))
            );
        }
    }
    for e in src.e.elements().unwrap() {
        assert_eq!(
            strict_both.t().eval(&ctx.bundle.gen_e(&e)),
            strict_cat.t().eval(&ctx.bundle.gen_e(&e))
        );
    }
}

#[test]
fn twofold_trivial_k_fixes_target() {
    let lh = transposition_cell();
    let tf = LaxTwoFold::trivial(&lh).unwrap();
    assert!(tf.target().unwrap().same_as(&lh, &small_cfg()));
    assert!(lax_twofold_validate(&tf, &small_cfg()).passed());
}

#[test]
fn twofold_nontrivial_k_validates_and_satisfies_pi11_law() {
    let lh = transposition_cell();
    let d = lh.base.target.clone();
    let rot = d.l.elements().unwrap().into_iter().find(|x| !x.is_identity()).unwrap();
    let tf = LaxTwoFold::from_fn(&lh, move |_| rot.clone()).unwrap();
    let report = lax_twofold_validate(&tf, &small_cfg());
    assert!(report.passed(), "{}", report.summary());
    let one = lh.base.source.g.id();
    let t = tf.target().unwrap();
    assert_eq!(t.pi(&one, &one), tf.k_hat(&one).inv().mul(&lh.pi(&one, &one)));
}

#[test]
fn twofold_vertical_with_inverse_is_trivial() {
    let lh = transposition_cell();
    let d = lh.base.target.clone();
    let rot = d.l.elements().unwrap().into_iter().find(|x| !x.is_identity()).unwrap();
    let tf = LaxTwoFold::from_fn(&lh, move |_| rot.clone()).unwrap();
    let inv = lax_invert_twofold(&tf).unwrap();
    let both = lax_vertical(&tf, &inv, &small_cfg()).unwrap();
    assert!(both.same_as(&LaxTwoFold::trivial(&lh).unwrap(), &small_cfg()));
    // Round trip of the target: applying k then k^-1 lands back at the base.
    assert!(inv.target().unwrap().same_as(&lh, &small_cfg()));
}

#[test]
fn compose_with_identity_morphisms_is_identity() {
    let lh = transposition_cell();
    let id_tgt = XModMorphism::identity(&lh.base.target);
    let id_src = XModMorphism::identity(&lh.base.source);
    assert!(lax_compose_strict(&id_tgt, &lh, Side::Left).unwrap().same_as(&lh, &small_cfg()));
    assert!(lax_compose_strict(&id_src, &lh, Side::Right).unwrap().same_as(&lh, &small_cfg()));
}

#[test]
fn left_composition_preserves_concatenation() {
    let lh = transposition_cell();
    let inv = lax_invert(&lh).unwrap();
    let id_tgt = XModMorphism::identity(&lh.base.target);
    let lhs = lax_compose_strict(&id_tgt, &lax_concat(&lh, &inv, &small_cfg()).unwrap(), Side::Left)
        .unwrap();
    let rhs = lax_concat(
        &lax_compose_strict(&id_tgt, &lh, Side::Left).unwrap(),
        &lax_compose_strict(&id_tgt, &inv, Side::Left).unwrap(),
        &small_cfg(),
    )
    .unwrap();
    assert!(lhs.same_as(&rhs, &small_cfg()));
}

#[test]
fn asymmetry_expressed_laxly() {
    let report = asymmetry_lax_report(&small_cfg()).unwrap();
    assert!(report.passed(), "{}", report.summary());
    // The target really is the trivial morphism at the base level.
    let lh = asymmetry_lax().unwrap();
    let t = lax_target(&lh);
    let one = lh.base.source.g.elements().unwrap().into_iter().find(|g| !g.is_identity()).unwrap();
    assert!(t.phi.apply(&one).is_identity());
}

#[test]
fn mu2_correction_regression_when_pi11_is_nontrivial() {
    // Over FIX-C(Z2) -> FIX-D take a 2-fold cell with k̂(1) ≠ 1 so that the
    // target has Π(1,1) ≠ 1; the bottom-level target must then carry the
    // Π(1,1)^-1 factor, and must agree with the strict-side target.
    let lh = transposition_cell();
    let d = lh.base.target.clone();
    let rot = d.l.elements().unwrap().into_iter().find(|x| !x.is_identity()).unwrap();
    let tf = LaxTwoFold::from_fn(&lh, move |_| rot.clone()).unwrap();
    let shifted = tf.target().unwrap();
    let one = lh.base.source.g.id();
    assert!(!shifted.pi(&one, &one).is_identity());
    let report = lax_validate(&shifted, &small_cfg());
    assert!(report.passed(), "{}", report.summary());
}

#[test]
fn identity_is_a_lax_equivalence_with_trivial_witness() {
    let a = fixtures::fix_d();
    let id = XModMorphism::identity(&a);
    let w = LaxEquivalence::trivial(&id, &id).unwrap();
    let report = check_equivalence(&w, &small_cfg());
    assert!(report.passed(), "{}", report.summary());
}

#[test]
fn search_finds_inverse_for_identity_within_bounds() {
    let a = fixtures::fix_a();
    let id = XModMorphism::identity(&a);
    let bounds = SearchBounds { max_morphisms: 16, max_tuples: 5_000 };
    let report = is_lax_equivalence(&id, None, &bounds, &small_cfg());
    assert!(report.passed(), "{}", report.summary());
}

#[test]
fn composed_equivalences_are_witnessed() {
    let a = fixtures::fix_c(&group_kernel::Group::cyclic(2));
    let id = XModMorphism::identity(&a);
    let w = LaxEquivalence::trivial(&id, &id).unwrap();
    let composed = compose_equivalences(&w, &w, &small_cfg()).unwrap();
    let report = check_equivalence(&composed, &small_cfg());
    assert!(report.passed(), "{}", report.summary());
}

#[test]
fn verify_module_smoke() {
    // Q1 totals are genuine 2-crossed modules for the finite corpus.
    for a in [fixtures::fix_c(&group_kernel::Group::cyclic(2)), fixtures::fix_d()] {
        let b = q1(&a).unwrap();
        assert!(verify_two_crossed(&b.total, &small_cfg()).passed());
    }
}

#[test]
fn elements_embed_into_q1_consistently() {
    let a = fixtures::fix_d();
    let b = q1(&a).unwrap();
    // [e][f] = [ef](∂e,∂f) spot check in the pullback.
    let es: Vec<Element> = a.e.elements().unwrap();
    for e in es.iter().take(4) {
        for f in es.iter().take(4) {
            let lhs = b.gen_e(e).mul(&b.gen_e(f));
            let rhs = b
                .gen_e(&e.mul(f))
                .mul(&b.gen_pair(&a.bdry.apply(e), &a.bdry.apply(f)));
            assert_eq!(lhs, rhs);
        }
    }
}
