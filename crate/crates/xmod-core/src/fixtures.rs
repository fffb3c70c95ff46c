//! Shared example modules used across the workspace test suites and the
//! command-line corpus. Names follow the convention `fix_a` … `fix_d`.
//!
//! * `fix_a`: the complex `1 → 1 → ℤ2` with everything trivial.
//! * `fix_b`: `2ℤ → ℤ → ℤ2`, where `L ≅ ℤ` maps in by `δ(l) = 2l`, the
//!   boundary is reduction mod 2, the nontrivial base element acts by
//!   negation, and the lifting is `{m,n} = n` when `m` is odd, else `0`.
//! * `fix_c(G)`: `1 → G → G` with the identity boundary, conjugation action
//!   and trivial lifting, for any finite `G`.
//! * `fix_d`: `A3 → S3 → 1` with inclusion, trivial base action and the
//!   commutator lifting `{a,b} = [a,b]`.

use group_kernel::{Element, Group, Hom, LeftAction};

use crate::types::{Lifting, PreCrossedModule, TwoCrossedModule};

/// Composition of permutations in one-line notation: `(a∘b)(i) = a(b(i))`.
fn compose(a: &[usize], b: &[usize]) -> Vec<usize> {
    b.iter().map(|&i| a[i]).collect()
}

fn perm_name(p: &[usize]) -> String {
    p.iter().map(|d| d.to_string()).collect()
}

/// Finite permutation group generated by `gens` (one-line notation) inside
/// the symmetric group on `degree` points, as a validated Cayley table.
pub fn perm_group(name: &str, degree: usize, gens: &[Vec<usize>]) -> Group {
    let id: Vec<usize> = (0..degree).collect();
    let mut elems: Vec<Vec<usize>> = vec![id];
    let mut i = 0;
    while i < elems.len() {
        let current = elems[i].clone();
        for g in gens {
            let next = compose(g, &current);
            if !elems.contains(&next) {
                elems.push(next);
            }
        }
        i += 1;
    }
    elems.sort();
    let index =
        |p: &[usize]| elems.iter().position(|q| q == p).expect("closure contains all products");
    let names: Vec<String> = elems.iter().map(|p| perm_name(p)).collect();
    let rows: Vec<Vec<usize>> =
        elems.iter().map(|a| elems.iter().map(|b| index(&compose(a, b))).collect()).collect();
    Group::table(name, names, rows).expect("permutation composition is a group law")
}

/// The symmetric group on three points.
pub fn s3() -> Group {
    perm_group("S3", 3, &[vec![1, 2, 0], vec![1, 0, 2]])
}

/// The alternating group on three points, as a subgroup of [`s3`].
pub fn a3(s3: &Group) -> Group {
    let r = s3.by_name("120").expect("3-cycle present");
    Group::sub_from_elements("A3", s3, vec![s3.id(), r.clone(), r.mul(&r)])
        .expect("A3 is closed")
}

/// The dihedral group of the square, acting on its corners.
pub fn d4() -> Group {
    perm_group("D4", 4, &[vec![1, 2, 3, 0], vec![3, 2, 1, 0]])
}

/// `1 → 1 → ℤ2` with all structure trivial.
pub fn fix_a() -> TwoCrossedModule {
    let one = Group::trivial();
    let z2 = Group::cyclic(2);
    TwoCrossedModule::new(
        "A",
        Hom::identity(&one),
        Hom::trivial(&one, &z2),
        LeftAction::trivial(&z2, &one),
        LeftAction::trivial(&z2, &one),
        Lifting::trivial(&one, &one),
    )
}

/// `2ℤ → ℤ → ℤ2`: `δ(l) = 2l`, `∂ = mod 2`, negation action, lifting
/// `{m,n} = n` for odd `m` and `0` otherwise.
pub fn fix_b() -> TwoCrossedModule {
    let (delta, bdry, act_e, act_l) = fix_b_parts();
    let l = delta.domain().clone();
    let e = delta.codomain().clone();
    let lift = Lifting::from_fn(&e, &l, {
        let l = l.clone();
        move |m, n| {
            if int_of(m) % 2 != 0 {
                l.int(int_of(n))
            } else {
                l.id()
            }
        }
    });
    TwoCrossedModule::new("B", delta, bdry, act_e, act_l, lift)
}

/// The same carriers and maps as [`fix_b`] but with the lifting forced to
/// zero — this candidate fails axiom 2 (witness `(1,1)`).
pub fn fix_b_zero_lift() -> TwoCrossedModule {
    let (delta, bdry, act_e, act_l) = fix_b_parts();
    let lift = Lifting::trivial(delta.codomain(), delta.domain());
    TwoCrossedModule::new("B0", delta, bdry, act_e, act_l, lift)
}

fn int_of(e: &Element) -> i64 {
    match e.payload() {
        group_kernel::Payload::Int(v) => *v,
        _ => unreachable!("integer carrier"),
    }
}

fn fix_b_parts() -> (Hom, Hom, LeftAction, LeftAction) {
    let l = Group::integers();
    let e = Group::integers();
    let z2 = Group::cyclic(2);
    let delta = Hom::from_fn(&l, &e, {
        let e = e.clone();
        move |x| e.int(2 * int_of(x))
    });
    let bdry = Hom::from_fn(&e, &z2, {
        let z2 = z2.clone();
        move |x| z2.int(int_of(x).rem_euclid(2))
    });
    let negate = |carrier: &Group| {
        let c = carrier.clone();
        LeftAction::from_fn(&z2, carrier, move |g, x| {
            if int_of(g) % 2 != 0 {
                c.int(-int_of(x))
            } else {
                x.clone()
            }
        })
    };
    let act_e = negate(&e);
    let act_l = negate(&l);
    (delta, bdry, act_e, act_l)
}

/// `1 → G → G` with identity boundary, conjugation and trivial lifting.
pub fn fix_c(g: &Group) -> TwoCrossedModule {
    let one = Group::trivial();
    TwoCrossedModule::new(
        &format!("C({})", g.name()),
        Hom::trivial(&one, g),
        Hom::identity(g),
        LeftAction::conjugation(g),
        LeftAction::trivial(g, &one),
        Lifting::trivial(g, &one),
    )
}

/// `A3 → S3 → 1` with inclusion, trivial base action and commutator lifting.
pub fn fix_d() -> TwoCrossedModule {
    let e = s3();
    let l = a3(&e);
    let g = Group::trivial();
    let lift = Lifting::from_fn(&e, &l, {
        let l = l.clone();
        move |a, b| l.from_parent(&a.commutator(b))
    });
    TwoCrossedModule::new(
        "D",
        Hom::inclusion(&l),
        Hom::trivial(&e, &g),
        LeftAction::trivial(&g, &e),
        LeftAction::trivial(&g, &l),
        lift,
    )
}

/// The pre-crossed module `∂: ℤ → ℤ2` underlying [`fix_b`] (reduction mod 2
/// with the negation action).
pub fn precrossed_b() -> PreCrossedModule {
    let (_, bdry, act_e, _) = fix_b_parts();
    PreCrossedModule::new("B~pre", bdry, act_e)
}

/// The crossed module `(G = G, ∂ = id, conjugation)` for any group `G`.
pub fn precrossed_conj(g: &Group) -> PreCrossedModule {
    PreCrossedModule::new(
        &format!("conj({})", g.name()),
        Hom::identity(g),
        LeftAction::conjugation(g),
    )
}

/// The pre-crossed module `∂: S3 → 1` underlying [`fix_d`].
pub fn precrossed_d() -> PreCrossedModule {
    let e = s3();
    let g = Group::trivial();
    PreCrossedModule::new("D~pre", Hom::trivial(&e, &g), LeftAction::trivial(&g, &e))
}

/// Every 2-crossed module fixture in one list, for corpus-wide properties.
pub fn corpus() -> Vec<TwoCrossedModule> {
    vec![fix_a(), fix_b(), fix_c(&Group::cyclic(2)), fix_c(&s3()), fix_d()]
}
