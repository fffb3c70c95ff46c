//! Concatenation and inversion of homotopies over a free base.
//!
//! For consecutive homotopies `(s, t) : f → f′` and `(s′, t′) : f′ → f″`
//! the concatenation has components
//!
//! ```text
//! (s ⊗ s′)(b) = s(b) s′(b)   (on basis elements; in general
//!                             (s ⊗ s′)(g) = s(g) s′(g) δ(ω(g))⁻¹),
//! (t ⊗ t′)(e) = ω(∂e) · (s′(∂e)⁻¹ ▷′ t(e)) · t′(e),
//! ```
//!
//! with `ω` the correction term of the pair. The inverse of `(s, t)` has
//! `s̄(b) = s(b)⁻¹` (a derivation along the target base level) and
//! `t̄(e) = ω^(s,s̄)(∂e)⁻¹ · (s(∂e) ▷′ t(e)⁻¹)`.

use group_kernel::ProbeConfig;
use xmod_core::VerificationReport;

use crate::derivation::{DerivationMap, Homotopy, PointMap};
use crate::error::{HomotopyError, Result};
use crate::omega::{concat_derivations, omega};
use crate::util::{morphisms_agree, probe_words};

/// Concatenates consecutive homotopies. Requires a free base (the result is
/// assembled from basis images) and matching endpoints.
pub fn concat_homotopies(h1: &Homotopy, h2: &Homotopy, cfg: &ProbeConfig) -> Result<Homotopy> {
    if !morphisms_agree(&h1.target, &h2.base, cfg) {
        return Err(HomotopyError::EndpointMismatch(format!(
            "target of the first homotopy differs from base of the second ({} -> {})",
            h1.base.source.name, h1.base.target.name
        )));
    }
    let s12 = concat_derivations(h1.s(), h2.s())?;
    let om = omega(h1.s(), h2.s(), cfg)?;
    let a2 = h1.base.target.clone();
    let bdry = h1.base.source.bdry.clone();
    let s2 = h2.s().clone();
    let t1 = h1.t().clone();
    let t2 = h2.t().clone();
    let l2 = a2.l.clone();
    let t12 = PointMap::from_fn(&h1.base.source.e, &l2, move |x| {
        let b = bdry.apply(x);
        om.eval(&b)
            .mul(&a2.secondary_action(&s2.eval(&b).inv(), &t1.eval(x)))
            .mul(&t2.eval(x))
    });
    Ok(Homotopy::new(&h1.base, s12, t12))
}

/// Inverts a homotopy: the result runs from its target back to its base.
pub fn invert_homotopy(h: &Homotopy, cfg: &ProbeConfig) -> Result<Homotopy> {
    let images = h
        .s()
        .basis_images()
        .ok_or_else(|| HomotopyError::SourceNotFree(h.base.source.g.name().to_string()))?
        .iter()
        .map(|e| e.inv())
        .collect();
    let sbar = DerivationMap::extend(&h.target.phi, &h.base.target, images)?;
    let om = omega(h.s(), &sbar, cfg)?;
    let a2 = h.base.target.clone();
    let bdry = h.base.source.bdry.clone();
    let s = h.s().clone();
    let t = h.t().clone();
    let l2 = a2.l.clone();
    let tbar = PointMap::from_fn(&h.base.source.e, &l2, move |x| {
        let b = bdry.apply(x);
        om.eval(&b)
            .inv()
            .mul(&a2.secondary_action(&s.eval(&b), &t.eval(x).inv()))
    });
    Ok(Homotopy::new(&h.target, sbar, tbar))
}

/// Checks the swap law relating the two correction terms of an
/// inverse pair: `s(g) ▷′ ω^(s,s̄)(g) = ω^(s̄,s)(g)` on probe words,
/// together with the closed form `s̄(g) = s(g)⁻¹ · δ(ω^(s,s̄)(g))`.
pub fn inverse_pair_report(h: &Homotopy, cfg: &ProbeConfig) -> Result<VerificationReport> {
    let hbar = invert_homotopy(h, cfg)?;
    let om_fwd = omega(h.s(), hbar.s(), cfg)?;
    let om_bwd = omega(hbar.s(), h.s(), cfg)?;
    let a2 = h.base.target.clone();
    let f = h.base.source.g.clone();
    let mut report = VerificationReport::new(
        format!("inverse homotopy pair out of {}", h.base.source.name),
        cfg.describe(),
    );
    let words = probe_words(&f, cfg)?;
    // Both placements of the secondary action hold (the correction term is
    // invariant under the square), and both are checked.
    report.law("swap law for the inverse correction term", words.iter().cloned(), |g| {
        let fwd = om_fwd.eval(g);
        let rhs = om_bwd.eval(g);
        let by_s = a2.secondary_action(&h.s().eval(g), &fwd);
        let by_s_inv = a2.secondary_action(&h.s().eval(g).inv(), &fwd);
        (by_s != rhs || by_s_inv != rhs).then(|| format!("g = {}", f.describe_element(g)))
    });
    report.law("closed form of the inverse derivation", words.iter().cloned(), |g| {
        let lhs = hbar.s().eval(g);
        let rhs = h.s().eval(g).inv().mul(&a2.delta.apply(&om_fwd.eval(g)));
        let rhs2 = a2.delta.apply(&om_bwd.eval(g)).mul(&h.s().eval(g).inv());
        (lhs != rhs || lhs != rhs2).then(|| format!("g = {}", f.describe_element(g)))
    });
    report.law("both round trips of t vanish", h.base.source.e.probe(cfg), |x| {
        let fwd = {
            // (t ⊗ t̄)(e) must be trivial.
            let b = h.base.source.bdry.apply(x);
            om_fwd
                .eval(&b)
                .mul(&a2.secondary_action(&hbar.s().eval(&b).inv(), &h.t().eval(x)))
                .mul(&hbar.t().eval(x))
        };
        let bwd = {
            let b = h.base.source.bdry.apply(x);
            om_bwd
                .eval(&b)
                .mul(&a2.secondary_action(&h.s().eval(&b).inv(), &hbar.t().eval(x)))
                .mul(&h.t().eval(x))
        };
        (!fwd.is_identity() || !bwd.is_identity())
            .then(|| format!("e = {}", h.base.source.e.describe_element(x)))
    });
    Ok(report)
}
