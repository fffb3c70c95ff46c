//! The asymmetry counterexample expressed laxly.
//!
//! The one-way homotopy between `(0 → 0 → Z2)` and `(2Z → Z → Z2)` is a lax
//! homotopy with `ŝ(0) = 0`, `ŝ(1) = 1`, trivial `t̂`, and `Π ≡ 0` — the
//! defining equations force `Π` to vanish once `ŝ` is fixed. Its target is
//! the trivial morphism, and no lax homotopy goes back: the reverse would
//! need `s′(1)` odd with `2·s′(1) = 0` in the integers.

use group_kernel::ProbeConfig;
use homotopy_2groupoid::{asymmetry_homotopy, morphisms_agree};
use xmod_core::VerificationReport;

use crate::error::Result;
use crate::laxhom::{lax_target, lax_validate, LaxHomotopy};

/// The forward lax homotopy of the counterexample.
pub fn asymmetry_lax() -> Result<LaxHomotopy> {
    let h = asymmetry_homotopy()?;
    let b = h.base.target.clone();
    LaxHomotopy::from_fn(
        &h.base,
        move |g| b.e.int(if g.is_identity() { 0 } else { 1 }),
        {
            let b = h.base.target.clone();
            move |_| b.l.id()
        },
        {
            let b = h.base.target.clone();
            move |_, _| b.l.id()
        },
    )
}

/// Validates the forward lax homotopy and checks that its target is the
/// trivial morphism (base level collapses).
pub fn asymmetry_lax_report(cfg: &ProbeConfig) -> Result<VerificationReport> {
    let lh = asymmetry_lax()?;
    let mut report = lax_validate(&lh, cfg);
    let strict = asymmetry_homotopy()?;
    report.law_outcome(
        "lax target is the trivial morphism",
        (!morphisms_agree(&lax_target(&lh), &strict.target, cfg))
            .then(|| "target differs from the strict-side trivial morphism".into()),
    );
    Ok(report)
}
