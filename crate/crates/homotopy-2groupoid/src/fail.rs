//! The asymmetry counterexample: a homotopy with no reverse.
//!
//! Between the modules `(0 → 0 → Z2)` and `(2Z → Z → Z2)` there is a valid
//! homotopy from the morphism `(0, 0, id)` to the trivial morphism, given by
//! `s(0) = 0, s(1) = 1` and trivial `t`. No homotopy exists in the other
//! direction: the base level of the trivial morphism is trivial, so a
//! reverse `s′` would have to be an honest homomorphism `Z2 → Z` whose value
//! at `1` is odd — but `2·s′(1) = 0` forces `s′(1) = 0` in `Z`, exactly
//! because doubling is injective there. The reverse search below verifies
//! this with exact integer arithmetic over a window of candidate values.

use group_kernel::{Element, Hom, ProbeConfig};
use xmod_core::{fixtures, VerificationReport, XModMorphism};

use crate::derivation::{
    homotopy_target, is_quadratic_derivation, DerivationMap, Homotopy, PointMap,
};
use crate::error::Result;
use crate::util::morphisms_agree;

/// The forward homotopy of the counterexample, together with its base
/// morphism `(0, 0, id)`.
pub fn asymmetry_homotopy() -> Result<Homotopy> {
    let a = fixtures::fix_a();
    let b = fixtures::fix_b();
    let bg = b.g.clone();
    let phi = Hom::from_fn(&a.g, &b.g, move |g| Element::new(bg.clone(), g.payload().clone()));
    let f = XModMorphism::new(
        &a,
        &b,
        Hom::trivial(&a.l, &b.l),
        Hom::trivial(&a.e, &b.e),
        phi,
    );
    let s = DerivationMap::from_table(
        &f.phi,
        &b,
        vec![(a.g.int(0), b.e.int(0)), (a.g.int(1), b.e.int(1))],
    )?;
    let t = PointMap::trivial(&a.e, &b.l);
    Ok(Homotopy::new(&f, s, t))
}

/// Validates the forward homotopy, spelling out the four instances of the
/// derivation law and the collapse of the base level in the target.
pub fn asymmetry_forward_report(cfg: &ProbeConfig) -> Result<VerificationReport> {
    let h = asymmetry_homotopy()?;
    let a = h.base.source.clone();
    let b = h.base.target.clone();
    let mut report = h.validate(cfg);
    report.law("derivation law, all four cases", {
        let zero = a.g.int(0);
        let one = a.g.int(1);
        vec![(zero.clone(), zero.clone()), (zero.clone(), one.clone()), (one.clone(), zero), (one.clone(), one)]
    }, |(g, k)| {
        let lhs = h.s().eval(&g.mul(k));
        let rhs = b
            .act_e
            .act(&h.base.phi.apply(k).inv(), &h.s().eval(g))
            .mul(&h.s().eval(k));
        (lhs != rhs).then(|| format!("g = {}, h = {}", a.g.describe_element(g), a.g.describe_element(k)))
    });
    report.law_outcome(
        "target base level is trivial",
        if h.target.phi.apply(&a.g.int(1)).is_identity() {
            None
        } else {
            Some("phi'(1) is nontrivial".into())
        },
    );
    Ok(report)
}

/// Searches exhaustively for a reverse homotopy with `|s′(1)| ≤ bound`;
/// every candidate must fail, so a passing candidate is a witness of
/// failure of this report.
pub fn asymmetry_reverse_search(bound: i64, cfg: &ProbeConfig) -> Result<VerificationReport> {
    let h = asymmetry_homotopy()?;
    let a = h.base.source.clone();
    let b = h.base.target.clone();
    let forward_base = h.base.clone();
    let reverse_base = h.target.clone();
    let mut report = VerificationReport::new(
        format!("no reverse homotopy with |s'(1)| <= {bound}"),
        cfg.describe(),
    );
    report.law("every candidate value fails", -bound..=bound, |&x| {
        let s = DerivationMap::from_table(
            &reverse_base.phi,
            &b,
            vec![(a.g.int(0), b.e.int(0)), (a.g.int(1), b.e.int(x))],
        )
        .expect("finite table");
        let t = PointMap::trivial(&a.e, &b.l);
        let valid = is_quadratic_derivation(&reverse_base, &s, &t, cfg).passed();
        let lands_back = morphisms_agree(&homotopy_target(&reverse_base, &s, &t), &forward_base, cfg);
        (valid && lands_back).then(|| format!("s'(1) = {x} gives a reverse homotopy"))
    });
    // The obstruction, stated exactly: the derivation law at (1, 1) forces
    // 2·s′(1) = s′(0) = 0, while landing back on the original morphism
    // forces s′(1) to be odd.
    report.law("the doubling obstruction", -bound..=bound, |&x| {
        let doubling_ok = 2 * x == 0;
        let parity_needed = x.rem_euclid(2) == 1;
        (doubling_ok && parity_needed).then(|| format!("x = {x} satisfies both constraints"))
    });
    Ok(report)
}
