//! The lax homotopy calculus: concatenation, inverses, lax 2-fold
//! homotopies with their vertical composition and whiskering, and
//! composition of lax homotopies with strict morphisms.

use group_kernel::{Element, ProbeConfig};
use homotopy_2groupoid::{
    is_quadratic_2derivation, morphisms_agree, theta, xi, DerivationMap, TwoDerivationMap,
};
use xmod_core::{xmod_map_verify, VerificationReport, XModMorphism};

use crate::error::{LaxError, Result};
use crate::laxhom::{lax_equations, lax_target, LaxHomotopy, Strictifier};

/// The derivation extending `ŝ` over the basis `[G]` along `φ ∘ p`, for a
/// caller-supplied bottom map `φ` (the base or target component, depending
/// on which end of a concatenation the homotopy sits at).
fn extend_along(ctx: &Strictifier, phi: &group_kernel::Hom, lh: &LaxHomotopy) -> Result<DerivationMap> {
    let phi_q = phi.compose(&ctx.bundle.p);
    let images = ctx.bundle.basis_elements().iter().map(|g| lh.s_hat(g)).collect();
    Ok(DerivationMap::extend(&phi_q, &ctx.target, images)?)
}

// ---------------------------------------------------------------------------
// Concatenation and inverse
// ---------------------------------------------------------------------------

/// Concatenation `lh ⊗̂ lh′` of lax homotopies `f₁ → f₂ → f₃`:
///
/// ```text
/// (ŝ ⊗̂ ŝ′)(g)   = ŝ(g)·ŝ′(g)
/// (t̂ ⊗̂ t̂′)(e)   = ŝ′(∂e)⁻¹ ▷′ t̂(e) · t̂′(e)
/// (Π ⊗̂ Π′)(g,h) = Θ^{(ŝ,ŝ′)}([gh],[g],[h]) · Π′(g,h) · Π(g,h)
/// ```
///
/// where `Θ` is evaluated on the derivations extending `ŝ`, `ŝ′` over the
/// resolution basis. Endpoints must match on probes.
pub fn lax_concat(lh: &LaxHomotopy, lh2: &LaxHomotopy, cfg: &ProbeConfig) -> Result<LaxHomotopy> {
    let mid = lax_target(lh);
    if !morphisms_agree(&mid, &lh2.base, cfg) {
        return Err(LaxError::EndpointMismatch(format!(
            "target of the first homotopy disagrees with the base of the second ({} -> {})",
            lh.base.source.name, lh.base.target.name
        )));
    }
    let ctx = Strictifier::new(&lh.base.source, &lh.base.target)?;
    let s = extend_along(&ctx, &lh.base.phi, lh)?;
    let s2 = extend_along(&ctx, &lh2.base.phi, lh2)?;

    let a = &lh.base.source;
    let a2 = &lh.base.target;
    LaxHomotopy::from_fn(
        &lh.base,
        |g| lh.s_hat(g).mul(&lh2.s_hat(g)),
        |e| {
            let de = a.bdry.apply(e);
            a2.secondary_action(&lh2.s_hat(&de).inv(), &lh.t_hat(e)).mul(&lh2.t_hat(e))
        },
        |g, h| {
            let th = theta(
                &s,
                &s2,
                &ctx.bundle.bracket(&g.mul(h)),
                &ctx.bundle.bracket(g),
                &ctx.bundle.bracket(h),
            );
            th.mul(&lh2.pi(g, h)).mul(&lh.pi(g, h))
        },
    )
}

/// The inverse lax homotopy `f₂ → f₁`:
///
/// ```text
/// s̄̂(g) = ŝ(g)⁻¹,  t̄̂(e) = ŝ(∂e) ▷′ t̂(e)⁻¹,
/// Π̄(g,h) = Θ^{(ŝ,s̄̂)}([gh],[g],[h])⁻¹ · Π(g,h)⁻¹.
/// ```
pub fn lax_invert(lh: &LaxHomotopy) -> Result<LaxHomotopy> {
    let target = lax_target(lh);
    let ctx = Strictifier::new(&lh.base.source, &lh.base.target)?;
    let s = extend_along(&ctx, &lh.base.phi, lh)?;
    let inv_images = ctx.bundle.basis_elements().iter().map(|g| lh.s_hat(g).inv()).collect();
    let s_bar = DerivationMap::extend(&target.phi.compose(&ctx.bundle.p), &ctx.target, inv_images)?;

    let a = &lh.base.source;
    let a2 = &lh.base.target;
    LaxHomotopy::from_fn(
        &target,
        |g| lh.s_hat(g).inv(),
        |e| a2.secondary_action(&lh.s_hat(&a.bdry.apply(e)), &lh.t_hat(e).inv()),
        |g, h| {
            let th = theta(
                &s,
                &s_bar,
                &ctx.bundle.bracket(&g.mul(h)),
                &ctx.bundle.bracket(g),
                &ctx.bundle.bracket(h),
            );
            th.inv().mul(&lh.pi(g, h).inv())
        },
    )
}

// ---------------------------------------------------------------------------
// Lax 2-fold homotopies
// ---------------------------------------------------------------------------

/// A lax 2-fold homotopy out of a lax homotopy: a plain map `k̂ : G → L′`
/// (no equations are imposed on `k̂` itself).
#[derive(Clone)]
pub struct LaxTwoFold {
    /// The lax homotopy the 2-fold cell starts from.
    pub base: LaxHomotopy,
    k_hat: Vec<Element>,
}

impl LaxTwoFold {
    /// Bundles the table (over the enumeration order of `G`).
    pub fn new(base: &LaxHomotopy, k_hat: Vec<Element>) -> Result<LaxTwoFold> {
        let n = base.basis_elements().len();
        if k_hat.len() != n {
            return Err(LaxError::ShapeMismatch(format!(
                "k̂ table has {} entries, expected {}",
                k_hat.len(),
                n
            )));
        }
        for v in &k_hat {
            if v.group() != &base.base.target.l {
                return Err(LaxError::ShapeMismatch(format!(
                    "k̂ image lies in `{}`, expected `{}`",
                    v.group().name(),
                    base.base.target.l.name()
                )));
            }
        }
        Ok(LaxTwoFold { base: base.clone(), k_hat })
    }

    /// Builds the table with a closure.
    pub fn from_fn(base: &LaxHomotopy, f: impl Fn(&Element) -> Element) -> Result<LaxTwoFold> {
        let k_hat = base.basis_elements().iter().map(f).collect();
        LaxTwoFold::new(base, k_hat)
    }

    /// `k̂ ≡ 1`.
    pub fn trivial(base: &LaxHomotopy) -> Result<LaxTwoFold> {
        let one = base.base.target.l.id();
        LaxTwoFold::from_fn(base, |_| one.clone())
    }

    /// `k̂(g)`.
    pub fn k_hat(&self, g: &Element) -> Element {
        let i = self
            .base
            .basis_elements()
            .iter()
            .position(|x| x == g)
            .unwrap_or_else(|| panic!("{} not in the base carrier", g.group().describe_element(g)));
        self.k_hat[i].clone()
    }

    /// The target lax homotopy:
    ///
    /// ```text
    /// ŝ′(g) = ŝ(g)·δ(k̂(g)),  t̂′(e) = k̂(∂e)⁻¹·t̂(e),
    /// Π′(g,h) = Ξ^{(φ,s,k)}([gh],[g],[h])⁻¹ · Π(g,h),
    /// ```
    ///
    /// with `Ξ` evaluated on the 2-derivation extending `k̂` over the
    /// resolution basis.
    pub fn target(&self) -> Result<LaxHomotopy> {
        let lh = &self.base;
        let ctx = Strictifier::new(&lh.base.source, &lh.base.target)?;
        let s = extend_along(&ctx, &lh.base.phi, lh)?;
        let k = TwoDerivationMap::extend(&s, self.k_hat.clone())?;
        let a = &lh.base.source;
        let a2 = &lh.base.target;
        LaxHomotopy::from_fn(
            &lh.base,
            |g| lh.s_hat(g).mul(&a2.delta.apply(&self.k_hat(g))),
            |e| self.k_hat(&a.bdry.apply(e)).inv().mul(&lh.t_hat(e)),
            |g, h| {
                let x = xi(
                    &k,
                    &ctx.bundle.bracket(&g.mul(h)),
                    &ctx.bundle.bracket(g),
                    &ctx.bundle.bracket(h),
                );
                x.inv().mul(&lh.pi(g, h))
            },
        )
    }

    /// Exact table equality plus agreement of the underlying lax homotopies.
    pub fn same_as(&self, other: &LaxTwoFold, cfg: &ProbeConfig) -> bool {
        self.k_hat == other.k_hat && self.base.same_as(&other.base, cfg)
    }
}

/// Law suite for a lax 2-fold homotopy: the base and the induced target are
/// valid lax homotopies, `Π′(1,1) = k̂(1)⁻¹·Π(1,1)`, and the extended
/// 2-derivation passes the strict-side oracle.
pub fn lax_twofold_validate(tf: &LaxTwoFold, cfg: &ProbeConfig) -> VerificationReport {
    let lh = &tf.base;
    let mut report = VerificationReport::new(
        format!("lax 2-fold homotopy over {} -> {}", lh.base.source.name, lh.base.target.name),
        cfg.describe(),
    );
    report.absorb("base lax homotopy", lax_equations(lh, cfg));
    match tf.target() {
        Ok(t) => {
            report.absorb("target lax homotopy", lax_equations(&t, cfg));
            report.absorb("target of the target", xmod_map_verify(&lax_target(&t), cfg));
            let one = lh.base.source.g.id();
            let expect = tf.k_hat(&one).inv().mul(&lh.pi(&one, &one));
            report.law_outcome(
                "Π'(1,1) = k̂(1)^-1 · Π(1,1)",
                (t.pi(&one, &one) != expect).then(|| {
                    format!(
                        "got {}, expected {}",
                        lh.base.target.l.describe_element(&t.pi(&one, &one)),
                        lh.base.target.l.describe_element(&expect)
                    )
                }),
            );
        }
        Err(e) => report.law_outcome("target lax homotopy", Some(e.to_string())),
    }
    match strict_twofold(tf) {
        Ok(k) => report.absorb("strict-side oracle", is_quadratic_2derivation(&k, cfg)),
        Err(e) => report.law_outcome("strict-side oracle", Some(e.to_string())),
    }
    report
}

/// The 2-derivation on the resolution extending `k̂` over the basis.
pub fn strict_twofold(tf: &LaxTwoFold) -> Result<TwoDerivationMap> {
    let lh = &tf.base;
    let ctx = Strictifier::new(&lh.base.source, &lh.base.target)?;
    let s = extend_along(&ctx, &lh.base.phi, lh)?;
    Ok(TwoDerivationMap::extend(&s, tf.k_hat.clone())?)
}

/// Vertical composition `(k̂ ⋄̂ k̂′)(g) = k̂(g)·k̂′(g)`; the base of `tf2`
/// must agree with the target of `tf`.
pub fn lax_vertical(tf: &LaxTwoFold, tf2: &LaxTwoFold, cfg: &ProbeConfig) -> Result<LaxTwoFold> {
    let mid = tf.target()?;
    if !mid.same_as(&tf2.base, cfg) {
        return Err(LaxError::EndpointMismatch(
            "target of the first 2-fold cell is not the base of the second".into(),
        ));
    }
    LaxTwoFold::from_fn(&tf.base, |g| tf.k_hat(g).mul(&tf2.k_hat(g)))
}

/// Right whiskering of a 2-fold cell with a lax homotopy on the right:
/// `(k̂ ⊗̂ ŝ″)(g) = ŝ″(g)⁻¹ ▷′ k̂(g)` over `lh ⊗̂ lh″`.
pub fn lax_whisker_right(
    tf: &LaxTwoFold,
    lh2: &LaxHomotopy,
    cfg: &ProbeConfig,
) -> Result<LaxTwoFold> {
    let base = lax_concat(&tf.base, lh2, cfg)?;
    let a2 = &tf.base.base.target;
    LaxTwoFold::from_fn(&base, |g| a2.secondary_action(&lh2.s_hat(g).inv(), &tf.k_hat(g)))
}

/// Left whiskering with a lax homotopy on the left:
/// `(ŝ″ ⊗̂ k̂)(g) = k̂(g)` over `lh″ ⊗̂ lh`.
pub fn lax_whisker_left(
    lh2: &LaxHomotopy,
    tf: &LaxTwoFold,
    cfg: &ProbeConfig,
) -> Result<LaxTwoFold> {
    let base = lax_concat(lh2, &tf.base, cfg)?;
    LaxTwoFold::from_fn(&base, |g| tf.k_hat(g))
}

/// The vertical inverse: `k̄̂(g) = k̂(g)⁻¹` based at the target of `tf`.
pub fn lax_invert_twofold(tf: &LaxTwoFold) -> Result<LaxTwoFold> {
    let target = tf.target()?;
    LaxTwoFold::from_fn(&target, |g| tf.k_hat(g).inv())
}

// ---------------------------------------------------------------------------
// Composition with strict morphisms
// ---------------------------------------------------------------------------

/// Which side the strict morphism is composed on.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Side {
    /// Post-compose: `h ∘ lh` for `h : A′ → A″`.
    Left,
    /// Pre-compose: `lh ∘ h′` for `h′ : A″ → A`.
    Right,
}

/// Composes a lax homotopy with a strict morphism:
///
/// * left (`h = (μ,ψ,φ)` out of the target module):
///   `(h∘f₁, ψ∘ŝ, μ∘t̂, μ∘Π)`;
/// * right (`h′ = (μ′,ψ′,φ′)` into the source module):
///   `(f₁∘h′, ŝ∘φ′, t̂∘ψ′, Π∘(φ′×φ′))`.
pub fn lax_compose_strict(h: &XModMorphism, lh: &LaxHomotopy, side: Side) -> Result<LaxHomotopy> {
    match side {
        Side::Left => {
            if h.source != lh.base.target {
                return Err(LaxError::EndpointMismatch(format!(
                    "strict morphism starts at {}, lax homotopy ends at {}",
                    h.source.name, lh.base.target.name
                )));
            }
            let base = h.compose(&lh.base);
            LaxHomotopy::from_fn(
                &base,
                |g| h.psi.apply(&lh.s_hat(g)),
                |e| h.mu.apply(&lh.t_hat(e)),
                |g, h2| h.mu.apply(&lh.pi(g, h2)),
            )
        }
        Side::Right => {
            if h.target != lh.base.source {
                return Err(LaxError::EndpointMismatch(format!(
                    "strict morphism ends at {}, lax homotopy starts at {}",
                    h.target.name, lh.base.source.name
                )));
            }
            let base = lh.base.compose(h);
            LaxHomotopy::from_fn(
                &base,
                |g| lh.s_hat(&h.phi.apply(g)),
                |e| lh.t_hat(&h.psi.apply(e)),
                |g, h2| lh.pi(&h.phi.apply(g), &h.phi.apply(h2)),
            )
        }
    }
}
