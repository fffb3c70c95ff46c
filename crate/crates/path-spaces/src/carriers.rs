//! Semidirect-product carriers of the path space of a 2-crossed module, the
//! derived action, and the two lifted actions.
//!
//! For a 2-crossed module `L → E → G` the path-space carriers are
//!
//! * level 0: `G ⋉ E` along the base action,
//! * level 1: `E ⋉ (E ⋉ L)`, built from the secondary action `▷′` of `E` on
//!   `L` and the *derived action* `*` of `E` on `E ⋉ L`,
//! * level 2: `L ⋉ L` along the adjoint action.
//!
//! All products follow the semidirect convention
//! `(g,e)(g′,e′) = (gg′, (g′⁻¹ ▷ e) e′)`.

use group_kernel::{Element, Group, LeftAction};
use xmod_core::TwoCrossedModule;

pub(crate) fn sd(tag: &str, action: &LeftAction) -> Group {
    let name = format!("({}{}{})", action.actor().name(), tag, action.target().name());
    Group::semidirect_named(&name, action).expect("action laws hold on the sample")
}

/// The derived action `*` of `E` on `E ⋉ L`:
/// `b * (e,k) = (∂(b) ▷ e, {b, e⁻¹}⁻¹ · (b ▷′ k))`.
pub fn derived_action(a: &TwoCrossedModule, esl: &Group) -> LeftAction {
    let (xm, esl2) = (a.clone(), esl.clone());
    LeftAction::from_fn(&a.e, esl, move |b, ek| {
        let e = ek.first(&xm.e);
        let k = ek.second(&xm.l);
        let e1 = xm.act_e.act(&xm.bdry.apply(b), &e);
        let k1 = xm.lift.lift(b, &e.inv()).inv().mul(&xm.secondary_action(b, &k));
        esl2.pair(&e1, &k1)
    })
}

/// Carriers and structural actions of the path space of one 2-crossed module.
#[derive(Clone)]
pub struct PathCarriers {
    /// The base module.
    pub base: TwoCrossedModule,
    /// `E ⋉ L` along the secondary action.
    pub esl: Group,
    /// Level-2 carrier `L ⋉ L` (adjoint action).
    pub gr2: Group,
    /// Level-1 carrier `E ⋉ (E ⋉ L)` (derived action).
    pub gr1: Group,
    /// Level-0 carrier `G ⋉ E` (base action).
    pub gr0: Group,
}

impl PathCarriers {
    /// Builds the three carriers for `a`.
    pub fn new(a: &TwoCrossedModule) -> PathCarriers {
        let esl = sd("⋉'", &a.secondary_as_action());
        let gr2 = sd("⋉ad", &LeftAction::conjugation(&a.l));
        let gr1 = sd("⋉*", &derived_action(a, &esl));
        let gr0 = sd("⋉", &a.act_e);
        PathCarriers { base: a.clone(), esl, gr2, gr1, gr0 }
    }

    // ---- element packing ------------------------------------------------

    /// `(g, x) ∈ G ⋉ E`.
    pub fn pk0(&self, g: &Element, x: &Element) -> Element {
        self.gr0.pair(g, x)
    }

    /// `(a, e, k) ∈ E ⋉ (E ⋉ L)`.
    pub fn pk1(&self, a: &Element, e: &Element, k: &Element) -> Element {
        self.gr1.pair(a, &self.esl.pair(e, k))
    }

    /// `(k, l) ∈ L ⋉ L`.
    pub fn pk2(&self, k: &Element, l: &Element) -> Element {
        self.gr2.pair(k, l)
    }

    /// Components of `(g, x)`.
    pub fn un0(&self, t: &Element) -> (Element, Element) {
        (t.first(&self.base.g), t.second(&self.base.e))
    }

    /// Components of `(a, e, k)`.
    pub fn un1(&self, t: &Element) -> (Element, Element, Element) {
        let inner = t.second(&self.esl);
        (t.first(&self.base.e), inner.first(&self.base.e), inner.second(&self.base.l))
    }

    /// Components of `(k, l)`.
    pub fn un2(&self, t: &Element) -> (Element, Element) {
        (t.first(&self.base.l), t.second(&self.base.l))
    }

    // ---- lifted actions --------------------------------------------------

    /// The first lifted action of `G ⋉ E` on `E ⋉ (E ⋉ L)`:
    ///
    /// `(g,x) • (a,e,k) = g ▷ (a, (∂(a)⁻¹ ▷ x) e x⁻¹,
    ///   ((x e⁻¹) ▷′ {a⁻¹, x⁻¹}⁻¹) · {x, e⁻¹ a⁻¹} · ∂(x) ▷ k)`.
    pub fn first_lifted_action(&self) -> LeftAction {
        let this = self.clone();
        LeftAction::from_fn(&self.gr0, &self.gr1, move |gx, aek| {
            let (g, x) = this.un0(gx);
            let (a, e, k) = this.un1(aek);
            let xm = &this.base;
            let e1 = xm.act_e.act(&xm.bdry.apply(&a.inv()), &x).mul(&e).mul(&x.inv());
            let k1 = xm
                .secondary_action(&x.mul(&e.inv()), &xm.lift.lift(&a.inv(), &x.inv()).inv())
                .mul(&xm.lift.lift(&x, &e.inv().mul(&a.inv())))
                .mul(&xm.act_l.act(&xm.bdry.apply(&x), &k));
            this.pk1(
                &xm.act_e.act(&g, &a),
                &xm.act_e.act(&g, &e1),
                &xm.act_l.act(&g, &k1),
            )
        })
    }

    /// The second lifted action of `G ⋉ E` on `L ⋉ L`:
    /// `(g,x) • (k,l) = (g ▷ k, g ▷ (k⁻¹ · ∂(x) ▷ (kl)))`.
    pub fn second_lifted_action(&self) -> LeftAction {
        let this = self.clone();
        LeftAction::from_fn(&self.gr0, &self.gr2, move |gx, kl| {
            let (g, x) = this.un0(gx);
            let (k, l) = this.un2(kl);
            let xm = &this.base;
            let l1 = k.inv().mul(&xm.act_l.act(&xm.bdry.apply(&x), &k.mul(&l)));
            this.pk2(&xm.act_l.act(&g, &k), &xm.act_l.act(&g, &l1))
        })
    }
}
