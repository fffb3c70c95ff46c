//! Integration suite for the path, triangle, disk, and tetrahedron spaces.

use group_kernel::{Element, ProbeConfig};
use path_spaces::{
    derived_action, disk_space, double_faces, is_triangle0, is_triangle1, path_space,
    path_space_map, techlemma_bijection, tetra_check, tetra_group, triangle_space, PathCarriers,
};
use xmod_core::{fixtures, verify_two_crossed, xmod_map_verify, TwoCrossedModule, XModMorphism};

fn cfg() -> ProbeConfig {
    ProbeConfig::default()
}

/// A tighter probe for checks at the double-path-space level.
fn small() -> ProbeConfig {
    ProbeConfig::default().with_max_tuples(1200)
}

// ---------------------------------------------------------------------------
// Derived and lifted actions
// ---------------------------------------------------------------------------

#[test]
fn derived_action_is_an_action_on_the_corpus() {
    for a in fixtures::corpus() {
        let c = PathCarriers::new(&a);
        derived_action(&a, &c.esl).check_laws(&cfg()).unwrap();
    }
}

#[test]
fn derived_action_preserves_boundary_pairs() {
    // b * (δ(k), k⁻¹) = (δ(∂(b) ▷ k), ∂(b) ▷ k⁻¹).
    for a in fixtures::corpus() {
        let c = PathCarriers::new(&a);
        let act = derived_action(&a, &c.esl);
        for (b, k) in cfg().pairs2(&a.e.probe(&cfg()), &a.l.probe(&cfg())) {
            let got = act.act(&b, &c.esl.pair(&a.delta.apply(&k), &k.inv()));
            let bk = a.act_l.act(&a.bdry.apply(&b), &k);
            let want = c.esl.pair(&a.delta.apply(&bk), &bk.inv());
            assert_eq!(got, want, "fixture {}", a.name);
        }
    }
}

#[test]
fn lifted_actions_satisfy_the_action_laws() {
    for a in fixtures::corpus() {
        let c = PathCarriers::new(&a);
        c.first_lifted_action().check_laws(&cfg()).unwrap();
        c.second_lifted_action().check_laws(&cfg()).unwrap();
    }
}

#[test]
fn first_lifted_action_of_base_elements_is_componentwise() {
    // (g, 1) • (a, e, k) = (g ▷ a, g ▷ e, g ▷ k).
    for xm in fixtures::corpus() {
        let c = PathCarriers::new(&xm);
        let act = c.first_lifted_action();
        for (g, (a, (e, k))) in cfg().pairs2(
            &xm.g.probe(&cfg()),
            &cfg().pairs2(&xm.e.probe(&cfg()), &cfg().pairs2(&xm.e.probe(&cfg()), &xm.l.probe(&cfg()))),
        ) {
            let got = act.act(&c.pk0(&g, &xm.e.id()), &c.pk1(&a, &e, &k));
            let want = c.pk1(
                &xm.act_e.act(&g, &a),
                &xm.act_e.act(&g, &e),
                &xm.act_l.act(&g, &k),
            );
            assert_eq!(got, want, "fixture {}", xm.name);
        }
    }
}

#[test]
fn first_lifted_action_on_alpha_image() {
    // (1, x) • (δ(k), 1, l) = (δ(k), 1, k⁻¹ · ∂(x) ▷ (k l)).
    for xm in fixtures::corpus() {
        let c = PathCarriers::new(&xm);
        let act = c.first_lifted_action();
        for (x, (k, l)) in
            cfg().pairs2(&xm.e.probe(&cfg()), &cfg().pairs(&xm.l.probe(&cfg())))
        {
            let got = act.act(&c.pk0(&xm.g.id(), &x), &c.pk1(&xm.delta.apply(&k), &xm.e.id(), &l));
            let want = c.pk1(
                &xm.delta.apply(&k),
                &xm.e.id(),
                &k.inv().mul(&xm.act_l.act(&xm.bdry.apply(&x), &k.mul(&l))),
            );
            assert_eq!(got, want, "fixture {}", xm.name);
        }
    }
}

#[test]
fn first_lifted_action_on_boundary_pairs() {
    // (1, x) • (1, δ(k), k⁻¹) = (1, x δ(k) x⁻¹, x ▷′ k⁻¹), and with a base
    // component, (g, x) • (1, δ(k), k⁻¹) = (1, g ▷ δ(x ▷′ k), g ▷ (x ▷′ k⁻¹)).
    for xm in fixtures::corpus() {
        let c = PathCarriers::new(&xm);
        let act = c.first_lifted_action();
        for (g, (x, k)) in
            cfg().pairs2(&xm.g.probe(&cfg()), &cfg().pairs2(&xm.e.probe(&cfg()), &xm.l.probe(&cfg())))
        {
            let arg = c.pk1(&xm.e.id(), &xm.delta.apply(&k), &k.inv());
            let got = act.act(&c.pk0(&xm.g.id(), &x), &arg);
            let want = c.pk1(
                &xm.e.id(),
                &x.conj(&xm.delta.apply(&k)),
                &xm.secondary_action(&x, &k.inv()),
            );
            assert_eq!(got, want, "fixture {}", xm.name);

            let got = act.act(&c.pk0(&g, &x), &arg);
            let xk = xm.secondary_action(&x, &k);
            let want = c.pk1(
                &xm.e.id(),
                &xm.act_e.act(&g, &xm.delta.apply(&xk)),
                &xm.act_l.act(&g, &xk.inv()),
            );
            assert_eq!(got, want, "fixture {}", xm.name);
        }
    }
}

#[test]
fn first_lifted_action_simplifies_for_central_lifting_arguments() {
    // When {x, ·} = {·, x} = 1 for every argument (as in FIX-C, where the
    // lifting is trivial): (1, x) • (a, e, k) = (a, (∂(a)⁻¹ ▷ x) e x⁻¹, ∂(x) ▷ k).
    let xm = fixtures::fix_c(&fixtures::s3());
    let c = PathCarriers::new(&xm);
    let act = c.first_lifted_action();
    for (x, (a, (e, k))) in cfg().pairs2(
        &xm.e.probe(&cfg()),
        &cfg().pairs2(&xm.e.probe(&cfg()), &cfg().pairs2(&xm.e.probe(&cfg()), &xm.l.probe(&cfg()))),
    ) {
        let got = act.act(&c.pk0(&xm.g.id(), &x), &c.pk1(&a, &e, &k));
        let want = c.pk1(
            &a,
            &xm.act_e.act(&xm.bdry.apply(&a).inv(), &x).mul(&e).mul(&x.inv()),
            &xm.act_l.act(&xm.bdry.apply(&x), &k),
        );
        assert_eq!(got, want);
    }
}

#[test]
fn second_lifted_action_formulas() {
    // (1, x) • (k, l) = (k, k⁻¹ ∂(x) ▷ (k l)) and (g, 1) • (k, l) = (g▷k, g▷l).
    for xm in fixtures::corpus() {
        let c = PathCarriers::new(&xm);
        let act = c.second_lifted_action();
        for (g, (x, (k, l))) in cfg().pairs2(
            &xm.g.probe(&cfg()),
            &cfg().pairs2(&xm.e.probe(&cfg()), &cfg().pairs(&xm.l.probe(&cfg()))),
        ) {
            let got = act.act(&c.pk0(&xm.g.id(), &x), &c.pk2(&k, &l));
            let want = c.pk2(&k, &k.inv().mul(&xm.act_l.act(&xm.bdry.apply(&x), &k.mul(&l))));
            assert_eq!(got, want, "fixture {}", xm.name);

            let got = act.act(&c.pk0(&g, &xm.e.id()), &c.pk2(&k, &l));
            let want = c.pk2(&xm.act_l.act(&g, &k), &xm.act_l.act(&g, &l));
            assert_eq!(got, want, "fixture {}", xm.name);
        }
    }
}

// ---------------------------------------------------------------------------
// The path space as a 2-crossed module
// ---------------------------------------------------------------------------

#[test]
fn path_space_is_a_two_crossed_module_on_the_corpus() {
    for a in fixtures::corpus() {
        let p = path_space(&a);
        let rep = verify_two_crossed(&p.total, &cfg());
        assert!(rep.passed(), "{}", rep.summary());
    }
}

#[test]
fn path_space_projections_and_inclusion_are_morphisms() {
    for a in fixtures::corpus() {
        let p = path_space(&a);
        for (label, m) in [("pr0", &p.pr0), ("pr1", &p.pr1), ("incl", &p.incl)] {
            let rep = xmod_map_verify(m, &cfg());
            assert!(rep.passed(), "{label} on {}: {}", a.name, rep.summary());
        }
    }
}

#[test]
fn both_projections_retract_the_inclusion() {
    for a in fixtures::corpus() {
        let p = path_space(&a);
        for pr in [&p.pr0, &p.pr1] {
            for g in a.g.probe(&cfg()) {
                assert_eq!(pr.phi.apply(&p.incl.phi.apply(&g)), g);
            }
            for e in a.e.probe(&cfg()) {
                assert_eq!(pr.psi.apply(&p.incl.psi.apply(&e)), e);
            }
            for k in a.l.probe(&cfg()) {
                assert_eq!(pr.mu.apply(&p.incl.mu.apply(&k)), k);
            }
        }
    }
}

#[test]
fn projections_are_fibrations_on_finite_fixtures() {
    for a in [fixtures::fix_d(), fixtures::fix_c(&fixtures::s3()), fixtures::fix_a()] {
        let p = path_space(&a);
        for pr in [&p.pr0, &p.pr1] {
            assert!(pr.phi.surjective_on_probe(&cfg()), "level 0 of {}", a.name);
            assert!(pr.psi.surjective_on_probe(&cfg()), "level 1 of {}", a.name);
        }
    }
}

#[test]
fn path_space_peiffer_pairing_has_the_coordinate_form() {
    // ⟨(a,e,k), (a′,e′,k′)⟩ = (⟨a,a′⟩, 1, {a,a′}⁻¹ · {aeδ(k), a′e′δ(k′)}).
    for xm in fixtures::corpus() {
        let p = path_space(&xm);
        let c = &p.carriers;
        let pre = p.total.underlying_precrossed();
        let base = xm.underlying_precrossed();
        for (s, t) in cfg().pairs(&c.gr1.probe(&small())) {
            let got = pre.peiffer_commutator(&s, &t);
            let (a, e, k) = c.un1(&s);
            let (a2, e2, k2) = c.un1(&t);
            let long = |a: &Element, e: &Element, k: &Element| {
                a.mul(e).mul(&xm.delta.apply(k))
            };
            let head = xm.lift.lift(&a, &a2);
            let want = c.pk1(
                &base.peiffer_commutator(&a, &a2),
                &xm.e.id(),
                &head.inv().mul(&xm.lift.lift(&long(&a, &e, &k), &long(&a2, &e2, &k2))),
            );
            assert_eq!(got, want, "fixture {}", xm.name);
            assert_eq!(
                p.total.delta.apply(&p.total.lift.lift(&s, &t)),
                got,
                "axiom 2 for {}",
                xm.name
            );
        }
    }
}

#[test]
fn path_space_functor_preserves_identity_and_inclusions() {
    let b = fixtures::fix_b();
    let idm = XModMorphism::identity(&b);
    let pid = path_space_map(&idm);
    let p = path_space(&b);
    for t in p.carriers.gr1.probe(&small()) {
        assert_eq!(pid.psi.apply(&t), t);
    }
    for t in p.carriers.gr0.probe(&small()) {
        assert_eq!(pid.phi.apply(&t), t);
    }

    let (a_mod, b_mod) = (fixtures::fix_a(), fixtures::fix_b());
    let f = XModMorphism::new(
        &a_mod,
        &b_mod,
        group_kernel::Hom::trivial(&a_mod.l, &b_mod.l),
        group_kernel::Hom::trivial(&a_mod.e, &b_mod.e),
        group_kernel::Hom::identity(&a_mod.g),
    );
    let pf = path_space_map(&f);
    let rep = xmod_map_verify(&pf, &cfg());
    assert!(rep.passed(), "{}", rep.summary());
    // Naturality with the constant-path inclusion: 𝒫(f) ∘ incl = incl ∘ f.
    let (pa, pb) = (path_space(&a_mod), path_space(&b_mod));
    for g in a_mod.g.probe(&cfg()) {
        assert_eq!(pf.phi.apply(&pa.incl.phi.apply(&g)), pb.incl.phi.apply(&f.phi.apply(&g)));
    }
    for e in a_mod.e.probe(&cfg()) {
        assert_eq!(pf.psi.apply(&pa.incl.psi.apply(&e)), pb.incl.psi.apply(&f.psi.apply(&e)));
    }
}

#[test]
fn path_space_level_zero_order_doubles_fix_c() {
    let z2 = group_kernel::Group::cyclic(2);
    let p = path_space(&fixtures::fix_c(&z2));
    assert_eq!(p.carriers.gr0.order(), Some(4));
}

// ---------------------------------------------------------------------------
// Double path space and faces
// ---------------------------------------------------------------------------

#[test]
fn double_faces_match_their_coordinate_forms() {
    // `double_faces` hard-fails on any disagreement between the generic
    // structure maps and the explicit coordinate formulas.
    let z2 = group_kernel::Group::cyclic(2);
    for a in [fixtures::fix_c(&z2), fixtures::fix_d(), fixtures::fix_b()] {
        double_faces(&a, &small()).unwrap_or_else(|e| panic!("{}: {e}", a.name));
    }
}

#[test]
fn double_faces_are_morphisms() {
    let z2 = group_kernel::Group::cyclic(2);
    let df = double_faces(&fixtures::fix_c(&z2), &cfg()).unwrap();
    for (i, f) in df.faces.iter().enumerate() {
        let rep = xmod_map_verify(f, &cfg());
        assert!(rep.passed(), "face d{i}: {}", rep.summary());
    }
}

#[test]
fn outer_faces_agree_with_inner_projections_on_constant_paths() {
    // dᵢ ∘ incl_{𝒫(A)} recovers the identity (i = 1, 2) or the inner
    // projections (i = 0, 3).
    let df = double_faces(&fixtures::fix_d(), &small()).unwrap();
    let inner = &df.inner;
    for t in inner.carriers.gr1.probe(&small()) {
        let c = df.outer.incl.psi.apply(&t);
        assert_eq!(df.faces[1].psi.apply(&c), t);
        assert_eq!(df.faces[2].psi.apply(&c), t);
        assert_eq!(
            df.faces[0].psi.apply(&c),
            inner.incl.psi.apply(&inner.pr1.psi.apply(&t))
        );
        assert_eq!(
            df.faces[3].psi.apply(&c),
            inner.incl.psi.apply(&inner.pr0.psi.apply(&t))
        );
    }
}

// ---------------------------------------------------------------------------
// Triangle space
// ---------------------------------------------------------------------------

#[test]
fn triangle_space_carriers_close_and_products_match() {
    let ts = triangle_space(&fixtures::fix_d(), &small()).unwrap();
    assert_eq!(ts.t0.order(), Some(108));
    assert_eq!(ts.t1.order(), Some(5832));
    for note in &ts.findings {
        eprintln!("finding: {note}");
    }
}

#[test]
fn triangle_space_of_conjugation_fixture() {
    let z2 = group_kernel::Group::cyclic(2);
    let ts = triangle_space(&fixtures::fix_c(&z2), &cfg()).unwrap();
    assert_eq!(ts.t0.order(), Some(8));
    assert_eq!(ts.t1.order(), Some(8));
    assert!(ts.findings.is_empty(), "{:?}", ts.findings);
}

#[test]
fn triangle_carrier_as_pullback() {
    let ts = triangle_space(&fixtures::fix_d(), &small()).unwrap();
    techlemma_bijection(&ts, &small()).unwrap();
    let z2 = group_kernel::Group::cyclic(2);
    let ts = triangle_space(&fixtures::fix_c(&z2), &cfg()).unwrap();
    techlemma_bijection(&ts, &cfg()).unwrap();
}

#[test]
fn triangle_boundary_lands_in_t0() {
    let ts = triangle_space(&fixtures::fix_d(), &small()).unwrap();
    for t in ts.t1.probe(&small()) {
        let b = path_spaces::beta_prime(&ts, &t);
        assert!(ts.t0.contains(&b));
    }
}

// ---------------------------------------------------------------------------
// Disk space
// ---------------------------------------------------------------------------

#[test]
fn disk_space_is_a_two_crossed_module() {
    for a in [fixtures::fix_d(), fixtures::fix_c(&fixtures::s3())] {
        let ds = disk_space(&a, &small()).unwrap();
        let rep = verify_two_crossed(&ds.total, &small());
        assert!(rep.passed(), "{}: {}", a.name, rep.summary());
    }
}

#[test]
fn disk_embedding_is_a_morphism_into_the_double_path_space() {
    let ds = disk_space(&fixtures::fix_d(), &small()).unwrap();
    let rep = xmod_map_verify(&ds.embed, &small());
    assert!(rep.passed(), "{}", rep.summary());
}

#[test]
fn disk_embedding_lands_in_the_triangle_space() {
    let a = fixtures::fix_d();
    let ds = disk_space(&a, &small()).unwrap();
    let df = double_faces(&a, &small()).unwrap();
    for t in ds.total.g.probe(&small()) {
        assert!(is_triangle0(&df, &ds.embed.phi.apply(&t)));
    }
    for t in ds.total.e.probe(&small()) {
        assert!(is_triangle1(&df, &ds.embed.psi.apply(&t)));
    }
}

#[test]
fn disk_faces_are_morphisms() {
    let ds = disk_space(&fixtures::fix_d(), &small()).unwrap();
    for (label, f) in [("d2", &ds.d2), ("d1", &ds.d1)] {
        let rep = xmod_map_verify(f, &small());
        assert!(rep.passed(), "{label}: {}", rep.summary());
    }
}

#[test]
fn lifting_vanishes_on_boundary_factors() {
    // |(a,e,k), (1,δ(l),l⁻¹)| = (1,1) = |(1,δ(l),l⁻¹), (a,e,k)|.
    for xm in fixtures::corpus() {
        let p = path_space(&xm);
        let c = &p.carriers;
        for (s, l) in cfg().pairs2(&c.gr1.probe(&small()), &xm.l.probe(&cfg())) {
            let b = c.pk1(&xm.e.id(), &xm.delta.apply(&l), &l.inv());
            let id = c.pk2(&xm.l.id(), &xm.l.id());
            assert_eq!(p.total.lift.lift(&s, &b), id, "fixture {}", xm.name);
            assert_eq!(p.total.lift.lift(&b, &s), id, "fixture {}", xm.name);
        }
    }
}

// ---------------------------------------------------------------------------
// Tetrahedron carrier
// ---------------------------------------------------------------------------

#[test]
fn tetra_faces_and_closure() {
    let a = fixtures::fix_d();
    let ts = triangle_space(&a, &small()).unwrap();
    let tg = tetra_group(&ts.df);
    tetra_check(&a, &ts, &tg, &small()).unwrap();

    let z2 = group_kernel::Group::cyclic(2);
    let a = fixtures::fix_c(&z2);
    let ts = triangle_space(&a, &cfg()).unwrap();
    let tg = tetra_group(&ts.df);
    tetra_check(&a, &ts, &tg, &cfg()).unwrap();
}

// ---------------------------------------------------------------------------
// The suite keeps the infinite fixture honest too
// ---------------------------------------------------------------------------

#[test]
fn triangle_space_requires_enumerable_carriers() {
    assert!(triangle_space(&fixtures::fix_b(), &small()).is_err());
}

#[test]
fn disk_space_over_integers_verifies_on_probes() {
    let ds = disk_space(&fixtures::fix_b(), &small()).unwrap();
    let rep = verify_two_crossed(&ds.total, &small());
    assert!(rep.passed(), "{}", rep.summary());
}

#[test]
fn zero_lifting_variant_breaks_the_path_space() {
    // The path space construction inherits failures of the base: with the
    // broken lifting on the integer fixture, axiom 2 fails upstairs as well.
    let broken = broken_path_space();
    let rep = verify_two_crossed(&broken, &small());
    assert!(!rep.passed());
}

fn broken_path_space() -> TwoCrossedModule {
    let b = fixtures::fix_b_zero_lift();
    path_space(&b).total
}
