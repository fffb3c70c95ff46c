//! The module types: Peiffer liftings, pre-crossed and 2-crossed modules,
//! and their morphisms.

use std::fmt;
use std::sync::Arc;

use group_kernel::{Element, Group, Hom, LeftAction};

type LiftFn = dyn Fn(&Element, &Element) -> Element + Send + Sync;

/// A Peiffer lifting `{,}: E × E → L`.
#[derive(Clone)]
pub struct Lifting {
    e: Group,
    l: Group,
    rule: Arc<LiftFn>,
}

impl Lifting {
    /// Lifting from an arithmetic rule.
    pub fn from_fn<F>(e: &Group, l: &Group, f: F) -> Lifting
    where
        F: Fn(&Element, &Element) -> Element + Send + Sync + 'static,
    {
        Lifting { e: e.clone(), l: l.clone(), rule: Arc::new(f) }
    }

    /// The lifting that is constantly the identity of `L`.
    pub fn trivial(e: &Group, l: &Group) -> Lifting {
        let l2 = l.clone();
        Lifting::from_fn(e, l, move |_, _| l2.id())
    }

    /// Evaluates `{x, y}`.
    pub fn lift(&self, x: &Element, y: &Element) -> Element {
        debug_assert!(x.group() == &self.e && y.group() == &self.e, "lifting carrier mismatch");
        let out = (self.rule)(x, y);
        debug_assert!(out.group() == &self.l, "lifting left its codomain");
        out
    }

    /// The domain carrier `E`.
    pub fn domain(&self) -> &Group {
        &self.e
    }

    /// The codomain carrier `L`.
    pub fn codomain(&self) -> &Group {
        &self.l
    }
}

impl fmt::Debug for Lifting {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Lifting({}×{} -> {})", self.e.name(), self.e.name(), self.l.name())
    }
}

/// A pre-crossed module: `∂: E → G` with a left action of `G` on `E`
/// satisfying the first Peiffer relation `∂(g ▷ e) = g ∂(e) g⁻¹`.
#[derive(Clone)]
pub struct PreCrossedModule {
    /// Display name.
    pub name: String,
    /// The top group `E`.
    pub e: Group,
    /// The base group `G`.
    pub g: Group,
    /// The boundary `∂: E → G`.
    pub bdry: Hom,
    /// The action `▷` of `G` on `E`.
    pub act: LeftAction,
}

impl PreCrossedModule {
    /// Bundles the data (laws are checked by the verification functions).
    pub fn new(name: &str, bdry: Hom, act: LeftAction) -> PreCrossedModule {
        assert!(act.actor() == bdry.codomain() && act.target() == bdry.domain());
        PreCrossedModule {
            name: name.to_string(),
            e: bdry.domain().clone(),
            g: bdry.codomain().clone(),
            bdry,
            act,
        }
    }

    /// The Peiffer commutator `⟨x,y⟩ = (xyx⁻¹)(∂(x) ▷ y⁻¹)`, the defect of
    /// the second Peiffer relation. Satisfies `∂⟨x,y⟩ = 1`.
    pub fn peiffer_commutator(&self, x: &Element, y: &Element) -> Element {
        x.mul(y).mul(&x.inv()).mul(&self.act.act(&self.bdry.apply(x), &y.inv()))
    }
}

impl fmt::Debug for PreCrossedModule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "PreCrossedModule({}: {} -> {})", self.name, self.e.name(), self.g.name())
    }
}

/// A 2-crossed module: complex `L → E → G` with `G`-actions on `L` and `E`
/// and a Peiffer lifting `{,}: E × E → L`.
///
/// The six axioms plus `G`-equivariance of the lifting are checked by
/// [`verify_two_crossed`](crate::verify_two_crossed); constructing the value
/// does not imply they hold.
#[derive(Clone)]
pub struct TwoCrossedModule {
    /// Display name.
    pub name: String,
    /// Bottom-of-complex group `L`.
    pub l: Group,
    /// Middle group `E`.
    pub e: Group,
    /// Base group `G`.
    pub g: Group,
    /// Boundary `δ: L → E`.
    pub delta: Hom,
    /// Boundary `∂: E → G`.
    pub bdry: Hom,
    /// Action of `G` on `E`.
    pub act_e: LeftAction,
    /// Action of `G` on `L`.
    pub act_l: LeftAction,
    /// The Peiffer lifting.
    pub lift: Lifting,
}

impl TwoCrossedModule {
    /// Bundles the data after shape checks.
    pub fn new(
        name: &str,
        delta: Hom,
        bdry: Hom,
        act_e: LeftAction,
        act_l: LeftAction,
        lift: Lifting,
    ) -> TwoCrossedModule {
        assert!(delta.codomain() == bdry.domain(), "δ codomain must be ∂ domain");
        assert!(act_e.actor() == bdry.codomain() && act_e.target() == bdry.domain());
        assert!(act_l.actor() == bdry.codomain() && act_l.target() == delta.domain());
        assert!(lift.domain() == bdry.domain() && lift.codomain() == delta.domain());
        TwoCrossedModule {
            name: name.to_string(),
            l: delta.domain().clone(),
            e: delta.codomain().clone(),
            g: bdry.codomain().clone(),
            delta,
            bdry,
            act_e,
            act_l,
            lift,
        }
    }

    /// The secondary action `e ▷′ l = l · {δ(l)⁻¹, e}` of `E` on `L`.
    ///
    /// Together with `δ` it forms a crossed module (a verified property, see
    /// the identity suites).
    pub fn secondary_action(&self, e: &Element, l: &Element) -> Element {
        l.mul(&self.lift.lift(&self.delta.apply(&l.inv()), e))
    }

    /// The secondary action packaged as a [`LeftAction`] of `E` on `L`.
    pub fn secondary_as_action(&self) -> LeftAction {
        let this = self.clone();
        LeftAction::from_fn(&self.e, &self.l, move |e, l| this.secondary_action(e, l))
    }

    /// The underlying pre-crossed module `∂: E → G`.
    pub fn underlying_precrossed(&self) -> PreCrossedModule {
        PreCrossedModule::new(
            &format!("{}~pre", self.name),
            self.bdry.clone(),
            self.act_e.clone(),
        )
    }

    /// Peiffer commutator of the underlying pre-crossed module.
    pub fn peiffer_commutator(&self, x: &Element, y: &Element) -> Element {
        x.mul(y).mul(&x.inv()).mul(&self.act_e.act(&self.bdry.apply(x), &y.inv()))
    }
}

impl PartialEq for TwoCrossedModule {
    fn eq(&self, other: &TwoCrossedModule) -> bool {
        self.name == other.name
    }
}

impl fmt::Debug for TwoCrossedModule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "TwoCrossedModule({}: {} -> {} -> {})",
            self.name,
            self.l.name(),
            self.e.name(),
            self.g.name()
        )
    }
}

/// A morphism of 2-crossed modules: level-wise homomorphisms `(μ, ψ, φ)`
/// commuting with boundaries, actions and liftings.
#[derive(Clone)]
pub struct XModMorphism {
    /// Source module.
    pub source: TwoCrossedModule,
    /// Target module.
    pub target: TwoCrossedModule,
    /// Bottom-level map `μ: L → L′`.
    pub mu: Hom,
    /// Middle-level map `ψ: E → E′`.
    pub psi: Hom,
    /// Base-level map `φ: G → G′`.
    pub phi: Hom,
}

impl XModMorphism {
    /// Bundles the maps after shape checks.
    pub fn new(
        source: &TwoCrossedModule,
        target: &TwoCrossedModule,
        mu: Hom,
        psi: Hom,
        phi: Hom,
    ) -> XModMorphism {
        assert!(mu.domain() == &source.l && mu.codomain() == &target.l);
        assert!(psi.domain() == &source.e && psi.codomain() == &target.e);
        assert!(phi.domain() == &source.g && phi.codomain() == &target.g);
        XModMorphism {
            source: source.clone(),
            target: target.clone(),
            mu,
            psi,
            phi,
        }
    }

    /// The identity morphism of a module.
    pub fn identity(a: &TwoCrossedModule) -> XModMorphism {
        XModMorphism::new(a, a, Hom::identity(&a.l), Hom::identity(&a.e), Hom::identity(&a.g))
    }

    /// Composition `self ∘ other` (apply `other` first).
    pub fn compose(&self, other: &XModMorphism) -> XModMorphism {
        assert!(other.target == self.source, "non-composable morphisms");
        XModMorphism::new(
            &other.source,
            &self.target,
            self.mu.compose(&other.mu),
            self.psi.compose(&other.psi),
            self.phi.compose(&other.phi),
        )
    }
}

impl fmt::Debug for XModMorphism {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "XModMorphism({} -> {})", self.source.name, self.target.name)
    }
}
