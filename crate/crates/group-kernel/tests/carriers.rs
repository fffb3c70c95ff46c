//! Carrier construction and law checks for the group kernel.

use group_kernel::{
    hom_extend_free, words_up_to, Group, Hom, LeftAction, Letter, ProbeConfig, Word,
};
use proptest::prelude::*;

/// S3 as a Cayley table, built from permutation composition so the table is
/// produced by an independent oracle rather than written by hand.
///
/// Elements are named by their one-line notation on {0,1,2}.
fn s3() -> Group {
    let perms: Vec<[usize; 3]> = vec![
        [0, 1, 2],
        [1, 2, 0],
        [2, 0, 1],
        [1, 0, 2],
        [0, 2, 1],
        [2, 1, 0],
    ];
    let names: Vec<String> = perms.iter().map(|p| format!("{}{}{}", p[0], p[1], p[2])).collect();
    let compose = |a: &[usize; 3], b: &[usize; 3]| [a[b[0]], a[b[1]], a[b[2]]];
    let rows = perms
        .iter()
        .map(|a| {
            perms
                .iter()
                .map(|b| {
                    let c = compose(a, b);
                    perms.iter().position(|p| *p == c).unwrap()
                })
                .collect::<Vec<_>>()
        })
        .collect();
    Group::table("S3", names, rows).unwrap()
}

#[test]
fn semidirect_inverse_law_and_trivial_action_order() {
    let z2 = Group::cyclic(2);
    let v4 = Group::semidirect(&LeftAction::trivial(&z2, &z2)).unwrap();
    assert_eq!(v4.order(), Some(4));
    // All 16 products land back in the carrier and every element is
    // self-inverse (the derived oracle: elementwise enumeration).
    let els = v4.elements().unwrap();
    for x in &els {
        assert_eq!(x.inv(), *x);
        for y in &els {
            assert!(v4.contains(&x.mul(y)));
        }
    }
    v4.check_axioms(&ProbeConfig::default()).unwrap();
}

#[test]
fn semidirect_inverse_is_twisted_pair() {
    // (g,e)·(g⁻¹, g▷e⁻¹) = identity, exhaustively, on S3 ⋉ S3 (conjugation).
    let s3 = s3();
    let g = Group::semidirect(&LeftAction::conjugation(&s3)).unwrap();
    let (actor, target, action) = g.semidirect_parts();
    let (actor, target, action) = (actor.clone(), target.clone(), action.clone());
    for x in g.elements().unwrap() {
        let gc = x.first(&actor);
        let ec = x.second(&target);
        let manual = g.pair(&gc.inv(), &action.act(&gc, &ec.inv()));
        assert_eq!(x.inv(), manual);
        assert!(x.mul(&manual).is_identity());
    }
    // Identity behaves: (1,1)·(g,e) = (g,e).
    let id = g.id();
    for x in g.elements().unwrap() {
        assert_eq!(id.mul(&x), x);
        assert_eq!(x.mul(&id), x);
    }
}

#[test]
fn semidirect_axioms_exhaustive_on_s3_conjugation() {
    let s3 = s3();
    let g = Group::semidirect(&LeftAction::conjugation(&s3)).unwrap();
    g.check_axioms(&ProbeConfig::default().with_max_tuples(50_000)).unwrap();
}

#[test]
fn pullback_diagonal_and_counting() {
    let z2 = Group::cyclic(2);
    let diag = Group::pullback(&Hom::identity(&z2), &Hom::identity(&z2)).unwrap();
    assert_eq!(diag.order(), Some(2));

    // |pullback| = Σ_x |φ⁻¹(x)|·|∂⁻¹(x)| for G = M = Z4 over P = Z2: each
    // fiber has 2 elements on both sides, so 2·(2·2) = 8.
    let z4 = Group::cyclic(4);
    let mod2 = Hom::from_fn(&z4, &z2, {
        let z2 = z2.clone();
        move |x| match x.payload() {
            group_kernel::Payload::Int(n) => z2.int(*n),
            _ => unreachable!(),
        }
    });
    let pb = Group::pullback(&mod2, &mod2).unwrap();
    assert_eq!(pb.order(), Some(8));
    pb.check_axioms(&ProbeConfig::default()).unwrap();
}

#[test]
fn pullback_free_over_integers_probe() {
    // ∂: Z → Z2 (mod 2) against p: F({[0],[1]}) → Z2 ([g] ↦ g): the carrier
    // is infinite but its probe is the filtered pair set.
    let z = Group::integers();
    let z2 = Group::cyclic(2);
    let f = Group::free("F(Z2)", vec!["[0]".into(), "[1]".into()]);
    let modm = Hom::from_fn(&z, &z2, {
        let z2 = z2.clone();
        move |x| match x.payload() {
            group_kernel::Payload::Int(n) => z2.int(*n),
            _ => unreachable!(),
        }
    });
    let p = hom_extend_free(&f, &z2, vec![z2.int(0), z2.int(1)]);
    let pb = Group::pullback(&modm, &p).unwrap();
    assert!(!pb.enumerable());
    let cfg = ProbeConfig { word_len: 3, ..ProbeConfig::default() };
    let probe = pb.probe(&cfg);
    assert!(!probe.is_empty());
    for e in &probe {
        assert!(pb.contains(e));
    }
    pb.check_axioms(&cfg).unwrap();
}

#[test]
fn free_reduction_examples() {
    let f = Group::free("F", vec!["g".into(), "h".into()]);
    let g = f.generator(0);
    let h = f.generator(1);
    // [g][h][h]⁻¹ reduces to [g].
    assert_eq!(g.mul(&h).mul(&h.inv()), g);
    // [g]⁻¹[g][h][g][g]⁻¹ reduces to [h] (stack oracle below agrees).
    let w = g.inv().mul(&g).mul(&h).mul(&g).mul(&g.inv());
    assert_eq!(w, h);
}

#[test]
fn basis_symbols_from_a_group_are_opaque() {
    // With the basis {[0],[1]} borrowed from Z2's underlying set, the word
    // [1][1] is a length-2 word, not the identity.
    let f = Group::free("F(Z2)", vec!["[0]".into(), "[1]".into()]);
    let one = f.generator(1);
    let w = one.mul(&one);
    assert!(!w.is_identity());
    match w.payload() {
        group_kernel::Payload::Word(w) => assert_eq!(w.len(), 2),
        _ => unreachable!(),
    }
}

#[test]
fn hom_extension_examples() {
    let f = Group::free("F", vec!["a".into()]);
    let z = Group::integers();
    // All basis images = identity gives the trivial hom.
    let triv = hom_extend_free(&f, &z, vec![z.id()]);
    let a = f.generator(0);
    assert_eq!(triv.apply(&a.mul(&a)), z.id());
    // a ↦ 1 counts signed letters: a³a⁻¹ ↦ 2.
    let count = hom_extend_free(&f, &z, vec![z.int(1)]);
    assert_eq!(count.apply(&a.mul(&a).mul(&a).mul(&a.inv())), z.int(2));

    // Projection p: F(Z2) → Z2, [g] ↦ g, with p([1][1]) = 0.
    let z2 = Group::cyclic(2);
    let fz2 = Group::free("F(Z2)", vec!["[0]".into(), "[1]".into()]);
    let p = hom_extend_free(&fz2, &z2, vec![z2.int(0), z2.int(1)]);
    let one = fz2.generator(1);
    assert_eq!(p.apply(&one.mul(&one)), z2.int(0));
    p.check(&ProbeConfig::default().with_word_len(3)).unwrap();
}

#[test]
fn closure_and_quotients_on_s3() {
    let s3 = s3();
    // A 3-cycle generates A3.
    let r = s3.by_name("120").unwrap();
    let a3 = Group::subgroup_closure(&s3, &[r]).unwrap();
    assert_eq!(a3.order(), Some(3));
    // S3 / A3 has order 2.
    let q = Group::quotient(&s3, &a3).unwrap();
    assert_eq!(q.order(), Some(2));
    q.check_axioms(&ProbeConfig::default()).unwrap();
    // G / {1} is G again (same table up to renaming).
    let one = Group::subgroup_closure(&s3, &[]).unwrap();
    let q1 = Group::quotient(&s3, &one).unwrap();
    assert_eq!(q1.order(), Some(6));
    q1.check_axioms(&ProbeConfig::default()).unwrap();
}

#[test]
fn quotient_rejects_non_normal_subgroups() {
    let s3 = s3();
    // A transposition generates a non-normal order-2 subgroup.
    let t = s3.by_name("102").unwrap();
    let h = Group::subgroup_closure(&s3, &[t]).unwrap();
    assert_eq!(h.order(), Some(2));
    assert!(Group::quotient(&s3, &h).is_err());
}

#[test]
fn closures_refuse_infinite_parents() {
    let z = Group::integers();
    assert!(Group::subgroup_closure(&z, &[z.int(2)]).is_err());
}

#[test]
fn word_probe_enumerates_reduced_words_only() {
    for w in words_up_to(2, 4) {
        // Reduction is idempotent on everything the enumerator produces.
        assert_eq!(Word::from_letters(w.letters().iter().copied()), w);
    }
    // 1 + 4 + 4·3 + 4·3² + 4·3³ reduced words over two symbols.
    assert_eq!(words_up_to(2, 4).len(), 1 + 4 + 12 + 36 + 108);
}

fn arb_letters(max_len: usize) -> impl Strategy<Value = Vec<Letter>> {
    prop::collection::vec(
        (0u32..3, prop::bool::ANY).prop_map(|(sym, pos)| Letter { sym, exp: if pos { 1 } else { -1 } }),
        0..=max_len,
    )
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1000))]

    /// Free reduction is idempotent and cancels inverses, for random words
    /// of length ≤ 16.
    #[test]
    fn free_reduction_idempotent_and_confluent(letters in arb_letters(16)) {
        let w = Word::from_letters(letters.iter().copied());
        prop_assert_eq!(Word::from_letters(w.letters().iter().copied()), w.clone());
        prop_assert!(w.concat(&w.inverse()).is_empty());
        prop_assert!(w.inverse().concat(&w).is_empty());
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(500))]

    /// Free extension is multiplicative on random word pairs.
    #[test]
    fn free_extension_is_multiplicative(u in arb_letters(8), v in arb_letters(8)) {
        let f = Group::free("F3", vec!["a".into(), "b".into(), "c".into()]);
        let z = Group::integers();
        let h = hom_extend_free(&f, &z, vec![z.int(1), z.int(-2), z.int(5)]);
        let uw = f.word(Word::from_letters(u.iter().copied()));
        let vw = f.word(Word::from_letters(v.iter().copied()));
        prop_assert_eq!(h.apply(&uw.mul(&vw)), h.apply(&uw).mul(&h.apply(&vw)));
    }
}
