//! Law suites for homotopies, 2-derivations, and the cell 2-groupoid.
//!
//! Two small sources with free bases are used throughout:
//! `SRC = (1 → F(e) → F(a))` with `∂(e) = a` (nontrivial middle level, so
//! the `t` components matter), and `SRC2 = (1 → 1 → F(a,b))` (rank-two base,
//! so correction terms and whiskers are exercised on genuinely
//! non-commuting data). Targets are the commutator-lifting modules
//! `A3 → S3 → 1` and `V4 → A4 → 1`; in the latter the secondary action has
//! order-3 behaviour, which is what distinguishes many of the closed forms.

use group_kernel::{Element, Group, Hom, LeftAction, ProbeConfig};
use homotopy_2groupoid::*;
use proptest::prelude::*;
use xmod_core::{fixtures, verify_two_crossed, xmod_map_verify, Lifting, TwoCrossedModule, XModMorphism};

fn lite() -> ProbeConfig {
    ProbeConfig::default().with_max_tuples(48)
}

/// `(1 → F(e) → F(a))`, `∂(e) = a`, all structure otherwise trivial.
fn src_e() -> TwoCrossedModule {
    let l = Group::cyclic(1);
    let e = Group::free("Efree", vec!["e".into()]);
    let g = Group::free("Ffree", vec!["a".into()]);
    TwoCrossedModule::new(
        "SRC",
        Hom::trivial(&l, &e),
        Hom::extend_free(&e, &g, vec![g.generator(0)]),
        LeftAction::trivial(&g, &e),
        LeftAction::trivial(&g, &l),
        Lifting::trivial(&e, &l),
    )
}

/// `(1 → 1 → F(a,b))`, all structure trivial.
fn src2() -> TwoCrossedModule {
    let l = Group::cyclic(1);
    let e = Group::trivial();
    let g = Group::free("F2", vec!["a".into(), "b".into()]);
    TwoCrossedModule::new(
        "SRC2",
        Hom::trivial(&l, &e),
        Hom::trivial(&e, &g),
        LeftAction::trivial(&g, &e),
        LeftAction::trivial(&g, &l),
        Lifting::trivial(&e, &l),
    )
}

/// `V4 → A4 → 1` with the commutator lifting.
fn dv() -> TwoCrossedModule {
    let e = fixtures::perm_group("A4", 4, &[vec![1, 2, 0, 3], vec![0, 2, 3, 1]]);
    let v = vec![
        e.id(),
        e.by_name("1032").unwrap(),
        e.by_name("2301").unwrap(),
        e.by_name("3210").unwrap(),
    ];
    let l = Group::sub_from_elements("V4", &e, v).unwrap();
    let g = Group::trivial();
    let lift = Lifting::from_fn(&e, &l, {
        let l = l.clone();
        move |a, b| l.from_parent(&a.commutator(b))
    });
    TwoCrossedModule::new(
        "DV",
        Hom::inclusion(&l),
        Hom::trivial(&e, &g),
        LeftAction::trivial(&g, &e),
        LeftAction::trivial(&g, &l),
        lift,
    )
}

/// Morphism `SRC → target` sending the middle generator to `psi_e`.
fn morphism_src_e(a: &TwoCrossedModule, d: &TwoCrossedModule, psi_e: &Element) -> XModMorphism {
    XModMorphism::new(
        a,
        d,
        Hom::trivial(&a.l, &d.l),
        Hom::extend_free(&a.e, &d.e, vec![psi_e.clone()]),
        Hom::trivial(&a.g, &d.g),
    )
}

/// The (unique) morphism `SRC2 → target`.
fn morphism_src2(a: &TwoCrossedModule, d: &TwoCrossedModule) -> XModMorphism {
    XModMorphism::new(
        a,
        d,
        Hom::trivial(&a.l, &d.l),
        Hom::trivial(&a.e, &d.e),
        Hom::trivial(&a.g, &d.g),
    )
}

/// Homotopy over `SRC2` with basis images `(x, y)` and trivial `t`.
fn hom_src2(f0: &XModMorphism, x: &Element, y: &Element) -> Homotopy {
    let s = extend_derivation(f0, vec![x.clone(), y.clone()]).unwrap();
    let t = PointMap::trivial(&f0.source.e, &f0.target.l);
    Homotopy::new(f0, s, t)
}

/// 2-cell over a `SRC2` homotopy with `k` basis images `(kx, ky)`.
fn cell_src2(h: &Homotopy, kx: &Element, ky: &Element) -> Quadratic2Derivation {
    let k = extend_2derivation(&h.base, h.s(), vec![kx.clone(), ky.clone()]).unwrap();
    Quadratic2Derivation::new(h, k).unwrap()
}

#[test]
fn sources_and_targets_are_two_crossed_modules() {
    let cfg = lite();
    for m in [src_e(), src2(), dv()] {
        let report = verify_two_crossed(&m, &cfg);
        assert!(report.passed(), "{}", report.summary());
    }
}

#[test]
fn asymmetry_example_forward_and_reverse() {
    let cfg = ProbeConfig::default();
    let forward = asymmetry_forward_report(&cfg).unwrap();
    assert!(forward.passed(), "{}", forward.summary());
    let reverse = asymmetry_reverse_search(100, &cfg).unwrap();
    assert!(reverse.passed(), "{}", reverse.summary());
}

#[test]
fn extension_requires_a_free_base() {
    let h = asymmetry_homotopy().unwrap();
    match extend_derivation(&h.base, vec![]) {
        Err(HomotopyError::SourceNotFree(_)) => {}
        Err(other) => panic!("expected a source-not-free error, got {other}"),
        Ok(_) => panic!("expected a source-not-free error, got a derivation"),
    }
}

#[test]
fn enumerated_cells_with_nontrivial_t_are_valid() {
    let cfg = lite();
    let a = src_e();
    let d = fixtures::fix_d();
    let s3 = d.e.elements().unwrap();
    let a3 = d.l.elements().unwrap();
    let mut checked = 0;
    for psi_e in s3.iter().step_by(2) {
        let f = morphism_src_e(&a, &d, psi_e);
        let fr = xmod_map_verify(&f, &cfg);
        assert!(fr.passed(), "{}", fr.summary());
        for sa in s3.iter().step_by(3) {
            let s = extend_derivation(&f, vec![sa.clone()]).unwrap();
            for ta in a3.iter() {
                let t = extend_t_free(&f, &s, vec![ta.clone()]).unwrap();
                let report = is_quadratic_derivation(&f, &s, &t, &cfg);
                assert!(report.passed(), "{}", report.summary());
                checked += 1;
            }
        }
    }
    assert!(checked >= 12, "expected a meaningful enumeration, got {checked}");

    // A corrupted `t` (constant at a nontrivial value) must fail.
    let f = morphism_src_e(&a, &d, &s3[1]);
    let s = extend_derivation(&f, vec![s3[2].clone()]).unwrap();
    let bad_value = a3[1].clone();
    let bad_t = PointMap::from_fn(&a.e, &d.l, move |_| bad_value.clone());
    assert!(!is_quadratic_derivation(&f, &s, &bad_t, &cfg).passed());
}

#[test]
fn omega_dual_computation_and_closed_forms() {
    let cfg = lite();
    let a = src2();
    let d = dv();
    let f0 = morphism_src2(&a, &d);
    let e = d.e.elements().unwrap();
    let r = &e[1]; // a 3-cycle
    let u = &e[4];
    let v = &e[7];
    let w = &e[10];

    let h1 = hom_src2(&f0, r, u);
    let h2 = hom_src2(&f0, v, w);
    let om = omega(h1.s(), h2.s(), &cfg).unwrap();

    let words = probe_words(&a.g, &cfg).unwrap();
    let s12 = concat_derivations(h1.s(), h2.s()).unwrap();
    for g in &words {
        // Fourth coordinate of the extension.
        assert_eq!(om.zeta(g), h2.s().eval(g).mul(&d.delta.apply(&om.eval(g)).inv()));
        // Closed form of the concatenated derivation.
        assert_eq!(
            s12.eval(g),
            h1.s().eval(g).mul(&h2.s().eval(g)).mul(&d.delta.apply(&om.eval(g)).inv())
        );
    }

    // Theta agrees with omega on basis triples.
    let basis = [a.g.generator(0), a.g.generator(1)];
    for b in &basis {
        for bp in &basis {
            for bpp in &basis {
                let th = theta(h1.s(), h2.s(), b, bp, bpp);
                let direct = om.eval(&b.inv().mul(bp).mul(bpp));
                assert_eq!(th, direct, "theta mismatch");
            }
        }
    }
}

#[test]
fn omega_units_and_composition_law() {
    let cfg = lite();
    let a = src2();
    let d = dv();
    let f0 = morphism_src2(&a, &d);
    let e = d.e.elements().unwrap();

    let h = hom_src2(&f0, &e[2], &e[5]);
    let unit_before = Homotopy::unit(&f0).unwrap();
    let unit_after = Homotopy::unit(&h.target).unwrap();
    let om_left = omega(unit_before.s(), h.s(), &cfg).unwrap();
    let om_right = omega(h.s(), unit_after.s(), &cfg).unwrap();
    for g in probe_words(&a.g, &cfg).unwrap() {
        assert!(om_left.eval(&g).is_identity(), "unit omega (left) not trivial");
        assert!(om_right.eval(&g).is_identity(), "unit omega (right) not trivial");
    }

    let s2 = hom_src2(&f0, &e[3], &e[9]);
    let s3 = hom_src2(&f0, &e[6], &e[11]);
    let report = omega_composition_report(h.s(), s2.s(), s3.s(), &cfg).unwrap();
    assert!(report.passed(), "{}", report.summary());
}

#[test]
fn concat_and_invert_with_nontrivial_t() {
    let cfg = lite();
    let a = src_e();
    let d = dv();
    let ae = d.e.elements().unwrap();
    let vl = d.l.elements().unwrap();

    let f = morphism_src_e(&a, &d, &ae[1]);
    let s1 = extend_derivation(&f, vec![ae[2].clone()]).unwrap();
    let t1 = extend_t_free(&f, &s1, vec![vl[1].clone()]).unwrap();
    let h1 = Homotopy::new(&f, s1, t1);

    let s2 = extend_derivation(&h1.target, vec![ae[5].clone()]).unwrap();
    let t2 = extend_t_free(&h1.target, &s2, vec![vl[2].clone()]).unwrap();
    let h2 = Homotopy::new(&h1.target, s2, t2);

    let h12 = concat_homotopies(&h1, &h2, &cfg).unwrap();
    let r = h12.validate(&cfg);
    assert!(r.passed(), "{}", r.summary());
    assert!(morphisms_agree(&h12.target, &h2.target, &cfg), "concat target mismatch");

    // Associativity with a third leg.
    let s3 = extend_derivation(&h2.target, vec![ae[7].clone()]).unwrap();
    let t3 = extend_t_free(&h2.target, &s3, vec![vl[3].clone()]).unwrap();
    let h3 = Homotopy::new(&h2.target, s3, t3);
    let left = concat_homotopies(&h12, &h3, &cfg).unwrap();
    let right = concat_homotopies(&h1, &concat_homotopies(&h2, &h3, &cfg).unwrap(), &cfg).unwrap();
    assert!(left.agrees_with(&right, &cfg), "concatenation not associative");

    // Units.
    let unit = Homotopy::unit(&f).unwrap();
    assert!(concat_homotopies(&unit, &h1, &cfg).unwrap().agrees_with(&h1, &cfg));
    let unit_t = Homotopy::unit(&h1.target).unwrap();
    assert!(concat_homotopies(&h1, &unit_t, &cfg).unwrap().agrees_with(&h1, &cfg));

    // Inversion: round trips vanish and the inverse validates.
    let inv = invert_homotopy(&h1, &cfg).unwrap();
    let ir = inv.validate(&cfg);
    assert!(ir.passed(), "{}", ir.summary());
    assert!(concat_homotopies(&h1, &inv, &cfg).unwrap().agrees_with(&unit, &cfg));
    assert!(concat_homotopies(&inv, &h1, &cfg).unwrap().agrees_with(&unit_t, &cfg));
    let pair = inverse_pair_report(&h1, &cfg).unwrap();
    assert!(pair.passed(), "{}", pair.summary());
}

#[test]
fn twofold_laws_and_dual_evaluation() {
    let cfg = lite();
    let a = src2();
    let d = dv();
    let f0 = morphism_src2(&a, &d);
    let e = d.e.elements().unwrap();
    let vl = d.l.elements().unwrap();

    let h = hom_src2(&f0, &e[1], &e[6]);
    let c = cell_src2(&h, &vl[1], &vl[3]);
    let report = c.validate(&cfg);
    assert!(report.passed(), "{}", report.summary());

    // Endpoints are preserved by the deformation.
    assert!(morphisms_agree(&c.target.base, &h.base, &cfg));
    assert!(morphisms_agree(&c.target.target, &h.target, &cfg));
    let tr = c.target.validate(&cfg);
    assert!(tr.passed(), "{}", tr.summary());

    // The closed form of k on a left quotient agrees with direct evaluation.
    let words = probe_words(&a.g, &cfg).unwrap();
    for chunk in words.chunks(3).take(24) {
        if let [g, hh, i] = chunk {
            assert_eq!(xi(&c.k, g, hh, i), c.k.eval(&g.inv().mul(hh).mul(i)), "xi mismatch");
        }
    }

    // Vertical category structure.
    let c2 = {
        let k2 = extend_2derivation(&c.target.base, c.target.s(), vec![vl[2].clone(), vl[1].clone()]).unwrap();
        Quadratic2Derivation::new(&c.target, k2).unwrap()
    };
    let composed = vertical_compose(&c, &c2, &cfg).unwrap();
    let cr = composed.validate(&cfg);
    assert!(cr.passed(), "{}", cr.summary());
    assert!(composed.target.agrees_with(&c2.target, &cfg));

    let unit = Quadratic2Derivation::unit(&h).unwrap();
    assert!(vertical_compose(&unit, &c, &cfg).unwrap().agrees_with(&c, &cfg));
    let inv = invert_twofold(&c).unwrap();
    assert!(vertical_compose(&c, &inv, &cfg).unwrap().agrees_with(&unit, &cfg));

    // A non-derivation table over a finite base is rejected by the law suite.
    let hfail = asymmetry_homotopy().unwrap();
    let afin = hfail.base.source.clone();
    let b = hfail.base.target.clone();
    // Along the collapsed base (trivial action) the law forces 2·k(1) = 0.
    let s_triv = DerivationMap::trivial(&hfail.target.phi, &b).unwrap();
    let bad = TwoDerivationMap::from_table(
        &s_triv,
        vec![(afin.g.int(0), b.l.int(0)), (afin.g.int(1), b.l.int(1))],
    )
    .unwrap();
    assert!(!is_quadratic_2derivation(&bad, &cfg).passed());
}

#[test]
fn whisker_laws_functoriality_and_interchange() {
    let cfg = lite();
    let a = src2();
    let d = dv();
    let f0 = morphism_src2(&a, &d);
    let e = d.e.elements().unwrap();
    let vl = d.l.elements().unwrap();

    let h = hom_src2(&f0, &e[1], &e[6]);
    let c = cell_src2(&h, &vl[1], &vl[3]);
    let after = hom_src2(&h.target, &e[4], &e[8]);
    let before = hom_src2(&f0, &e[10], &e[2]);

    let wr = whisker_right_report(&c, &after, &cfg).unwrap();
    assert!(wr.passed(), "{}", wr.summary());
    let c_on_before_target = {
        // A 2-cell sitting at the end of `before`.
        let h2 = hom_src2(&before.target, &e[1], &e[6]);
        let k = extend_2derivation(&h2.base, h2.s(), vec![vl[1].clone(), vl[3].clone()]).unwrap();
        Quadratic2Derivation::new(&h2, k).unwrap()
    };
    let wl = whisker_left_report(&before, &c_on_before_target, &cfg).unwrap();
    assert!(wl.passed(), "{}", wl.summary());

    // Functoriality in the 2-cell: (k . k') whiskered = whiskered composed.
    let c2 = {
        let k2 = extend_2derivation(&c.target.base, c.target.s(), vec![vl[2].clone(), vl[1].clone()]).unwrap();
        Quadratic2Derivation::new(&c.target, k2).unwrap()
    };
    let lhs = whisker_right(&vertical_compose(&c, &c2, &cfg).unwrap(), &after, &cfg).unwrap();
    let rhs = vertical_compose(
        &whisker_right(&c, &after, &cfg).unwrap(),
        &whisker_right(&c2, &after, &cfg).unwrap(),
        &cfg,
    )
    .unwrap();
    assert!(lhs.agrees_with(&rhs, &cfg), "right whisker not functorial in the 2-cell");

    // Functoriality in the homotopy: k (x) (u (x) u') = (k (x) u) (x) u'.
    let after2 = hom_src2(&after.target, &e[9], &e[3]);
    let lhs = whisker_right(&c, &concat_homotopies(&after, &after2, &cfg).unwrap(), &cfg).unwrap();
    let rhs = whisker_right(&whisker_right(&c, &after, &cfg).unwrap(), &after2, &cfg).unwrap();
    assert!(lhs.agrees_with(&rhs, &cfg), "right whisker not functorial in the homotopy");

    // Left and right whiskers commute.
    let lhs = whisker_left(&before, &whisker_right(&c_on_before_target, &after, &cfg).unwrap(), &cfg);
    let rhs = whisker_right(&whisker_left(&before, &c_on_before_target, &cfg).unwrap(), &after, &cfg);
    assert!(lhs.unwrap().agrees_with(&rhs.unwrap(), &cfg), "whiskers do not commute");

    // Interchange for a horizontally composable pair.
    let c_next = {
        let h2 = hom_src2(&h.target, &e[4], &e[8]);
        let k = extend_2derivation(&h2.base, h2.s(), vec![vl[3].clone(), vl[2].clone()]).unwrap();
        Quadratic2Derivation::new(&h2, k).unwrap()
    };
    let ic = interchange_check(&c, &c_next, &cfg).unwrap();
    assert!(ic.passed(), "{}", ic.summary());
}

#[test]
fn strict_composition_preserves_homotopies() {
    let cfg = lite();
    let a = src2();
    let d = fixtures::fix_d();
    let f0 = morphism_src2(&a, &d);
    let e = d.e.elements().unwrap();
    let h = hom_src2(&f0, &e[1], &e[4]);

    // Conjugation by a fixed element of S3 is a strict endomorphism of D.
    let u = e[3].clone();
    let psi = Hom::from_fn(&d.e, &d.e, {
        let u = u.clone();
        move |x| u.conj(x)
    });
    let mu = Hom::from_fn(&d.l, &d.l, {
        let (u, l, parent) = (u.clone(), d.l.clone(), d.e.clone());
        move |x| l.from_parent(&u.conj(&Element::new(parent.clone(), x.payload().clone())))
    });
    let strict = XModMorphism::new(&d, &d, mu, psi, Hom::identity(&d.g));
    let sr = xmod_map_verify(&strict, &cfg);
    assert!(sr.passed(), "{}", sr.summary());

    let left = compose_strict_left(&strict, &h).unwrap();
    let lr = left.validate(&cfg);
    assert!(lr.passed(), "{}", lr.summary());
    assert!(morphisms_agree(&left.target, &strict.compose(&h.target), &cfg));

    // Swapping the two base generators is a strict endomorphism of SRC2.
    let swap_phi = Hom::extend_free(&a.g, &a.g, vec![a.g.generator(1), a.g.generator(0)]);
    let swap = XModMorphism::new(&a, &a, Hom::identity(&a.l), Hom::identity(&a.e), swap_phi);
    let right = compose_strict_right(&h, &swap).unwrap();
    let rr = right.validate(&cfg);
    assert!(rr.passed(), "{}", rr.summary());
    assert!(morphisms_agree(&right.base, &h.base.compose(&swap), &cfg));
}

#[test]
fn hom2groupoid_laws_over_enumerated_cells() {
    let cfg = ProbeConfig::default().with_max_tuples(24);
    let a = src2();
    let d = fixtures::fix_d();
    let f0 = morphism_src2(&a, &d);
    let e = d.e.elements().unwrap();
    let vl = d.l.elements().unwrap();

    // One object (every homotopy over SRC2 into D is a loop at f0).
    let objects = vec![f0.clone()];
    let mut cells1 = Vec::new();
    for x in &e {
        for y in &e {
            cells1.push(Cell1 { src: 0, tgt: 0, hom: hom_src2(&f0, x, y) });
        }
    }
    let find_cell1 = |s: &DerivationMap| -> usize {
        cells1
            .iter()
            .position(|c| c.hom.s().same_as(s))
            .expect("every derivation image pair is enumerated")
    };
    let mut cells2 = Vec::new();
    for (i, x, y) in [(1usize, 1usize, 2usize), (8, 2, 1), (14, 1, 1), (22, 2, 2), (30, 1, 2)] {
        let h = &cells1[i].hom;
        let k = extend_2derivation(&h.base, h.s(), vec![vl[x].clone(), vl[y].clone()]).unwrap();
        let cell = Quadratic2Derivation::new(h, k).unwrap();
        let tgt = find_cell1(cell.target.s());
        cells2.push(Cell2 { src: i, tgt, cell });
    }
    let groupoid = build_hom2groupoid(objects, cells1, cells2, &cfg).unwrap();
    let report = groupoid.verify_laws(&cfg);
    assert!(report.passed(), "{}", report.summary());
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(12))]

    #[test]
    fn random_derivations_validate_and_satisfy_closed_forms(
        sx in 0usize..12, sy in 0usize..12, ux in 0usize..12, uy in 0usize..12,
        kx in 0usize..4, ky in 0usize..4,
    ) {
        let cfg = ProbeConfig::default().with_max_tuples(16);
        let a = src2();
        let d = dv();
        let f0 = morphism_src2(&a, &d);
        let e = d.e.elements().unwrap();
        let vl = d.l.elements().unwrap();

        let h = hom_src2(&f0, &e[sx], &e[sy]);
        prop_assert!(h.validate(&cfg).passed());
        let h2 = hom_src2(&h.target, &e[ux], &e[uy]);
        let om = omega(h.s(), h2.s(), &cfg).unwrap();
        let s12 = concat_derivations(h.s(), h2.s()).unwrap();
        for g in probe_words(&a.g, &cfg).unwrap() {
            prop_assert_eq!(
                s12.eval(&g),
                h.s().eval(&g).mul(&h2.s().eval(&g)).mul(&d.delta.apply(&om.eval(&g)).inv())
            );
        }

        let c = cell_src2(&h, &vl[kx], &vl[ky]);
        prop_assert!(c.validate(&cfg).passed());
        let ws = probe_words(&a.g, &cfg).unwrap();
        for chunk in ws.chunks(3).take(8) {
            if let [g, hh, i] = chunk {
                prop_assert_eq!(xi(&c.k, g, hh, i), c.k.eval(&g.inv().mul(hh).mul(i)));
            }
        }
    }
}
