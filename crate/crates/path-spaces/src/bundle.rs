//! The path space of a 2-crossed module: total module, the two projections,
//! the inclusion, and functoriality on morphisms.

use group_kernel::Hom;
use xmod_core::{Lifting, TwoCrossedModule, XModMorphism};

use crate::carriers::PathCarriers;

/// The path space `𝒫(A)` together with its structure maps.
#[derive(Clone)]
pub struct PathSpaceBundle {
    /// The carriers and structural actions.
    pub carriers: PathCarriers,
    /// The total 2-crossed module `L⋉L → E⋉(E⋉L) → G⋉E`.
    pub total: TwoCrossedModule,
    /// First-coordinate projection `(p, q, r)` onto the base module.
    pub pr0: XModMorphism,
    /// Endpoint projection `(p′, q′, r′): (k,l) ↦ kl, (a,e,k) ↦ aeδ(k),
    /// (g,e) ↦ g∂(e)`.
    pub pr1: XModMorphism,
    /// Constant-path inclusion `g ↦ (g,1), e ↦ (e,1,1), k ↦ (k,1)`.
    pub incl: XModMorphism,
}

/// Assembles the path space of a verified 2-crossed module.
///
/// The boundary maps are `α(k,l) = (δ(k), 1, l)` and `β(a,e,k) = (∂(a), e)`;
/// the actions are the first and second lifted actions, and the Peiffer
/// lifting is
/// `|(a,e,k),(a′,e′,k′)| = ({a,a′}, {a,a′}⁻¹ · {aeδ(k), a′e′δ(k′)})`.
pub fn path_space(a: &TwoCrossedModule) -> PathSpaceBundle {
    let c = PathCarriers::new(a);

    let alpha = Hom::from_fn(&c.gr2, &c.gr1, {
        let c = c.clone();
        move |kl| {
            let (k, l) = c.un2(kl);
            c.pk1(&c.base.delta.apply(&k), &c.base.e.id(), &l)
        }
    });
    let beta = Hom::from_fn(&c.gr1, &c.gr0, {
        let c = c.clone();
        move |aek| {
            let (a, e, _) = c.un1(aek);
            c.pk0(&c.base.bdry.apply(&a), &e)
        }
    });
    let lift = Lifting::from_fn(&c.gr1, &c.gr2, {
        let c = c.clone();
        move |x, y| {
            let (a, e, k) = c.un1(x);
            let (a2, e2, k2) = c.un1(y);
            let xm = &c.base;
            let long = |a: &group_kernel::Element,
                        e: &group_kernel::Element,
                        k: &group_kernel::Element| {
                a.mul(e).mul(&xm.delta.apply(k))
            };
            let head = xm.lift.lift(&a, &a2);
            let tail = head.inv().mul(&xm.lift.lift(&long(&a, &e, &k), &long(&a2, &e2, &k2)));
            c.pk2(&head, &tail)
        }
    });
    let total = TwoCrossedModule::new(
        &format!("P({})", a.name),
        alpha,
        beta,
        c.first_lifted_action(),
        c.second_lifted_action(),
        lift,
    );

    let pr0 = XModMorphism::new(
        &total,
        a,
        Hom::from_fn(&c.gr2, &a.l, {
            let c = c.clone();
            move |kl| c.un2(kl).0
        }),
        Hom::from_fn(&c.gr1, &a.e, {
            let c = c.clone();
            move |aek| c.un1(aek).0
        }),
        Hom::from_fn(&c.gr0, &a.g, {
            let c = c.clone();
            move |gx| c.un0(gx).0
        }),
    );
    let pr1 = XModMorphism::new(
        &total,
        a,
        Hom::from_fn(&c.gr2, &a.l, {
            let c = c.clone();
            move |kl| {
                let (k, l) = c.un2(kl);
                k.mul(&l)
            }
        }),
        Hom::from_fn(&c.gr1, &a.e, {
            let c = c.clone();
            move |aek| {
                let (a, e, k) = c.un1(aek);
                a.mul(&e).mul(&c.base.delta.apply(&k))
            }
        }),
        Hom::from_fn(&c.gr0, &a.g, {
            let c = c.clone();
            move |gx| {
                let (g, x) = c.un0(gx);
                g.mul(&c.base.bdry.apply(&x))
            }
        }),
    );
    let incl = XModMorphism::new(
        a,
        &total,
        Hom::from_fn(&a.l, &c.gr2, {
            let c = c.clone();
            move |k| c.pk2(k, &c.base.l.id())
        }),
        Hom::from_fn(&a.e, &c.gr1, {
            let c = c.clone();
            move |e| c.pk1(e, &c.base.e.id(), &c.base.l.id())
        }),
        Hom::from_fn(&a.g, &c.gr0, {
            let c = c.clone();
            move |g| c.pk0(g, &c.base.e.id())
        }),
    );

    PathSpaceBundle { carriers: c, total, pr0, pr1, incl }
}

/// Functoriality: a morphism `f: A → B` induces `𝒫(f): 𝒫(A) → 𝒫(B)` by
/// applying `(μ, ψ, φ)` coordinatewise.
pub fn path_space_map(f: &XModMorphism) -> XModMorphism {
    let src = path_space(&f.source);
    let tgt = path_space(&f.target);
    let (sc, tc) = (src.carriers.clone(), tgt.carriers.clone());

    let mu = Hom::from_fn(&sc.gr2, &tc.gr2, {
        let (sc, tc, f) = (sc.clone(), tc.clone(), f.clone());
        move |kl| {
            let (k, l) = sc.un2(kl);
            tc.pk2(&f.mu.apply(&k), &f.mu.apply(&l))
        }
    });
    let psi = Hom::from_fn(&sc.gr1, &tc.gr1, {
        let (sc, tc, f) = (sc.clone(), tc.clone(), f.clone());
        move |aek| {
            let (a, e, k) = sc.un1(aek);
            tc.pk1(&f.psi.apply(&a), &f.psi.apply(&e), &f.mu.apply(&k))
        }
    });
    let phi = Hom::from_fn(&sc.gr0, &tc.gr0, {
        let (sc, tc, f) = (sc.clone(), tc.clone(), f.clone());
        move |gx| {
            let (g, x) = sc.un0(gx);
            tc.pk0(&f.phi.apply(&g), &f.psi.apply(&x))
        }
    });
    XModMorphism::new(&src.total, &tgt.total, mu, psi, phi)
}
