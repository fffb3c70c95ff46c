//! Whiskering 2-cells by homotopies, and the interchange law.
//!
//! Right whisker: a 2-cell `k : (s,t) ⇛ (s′,t′)` over `f → f′` followed by a
//! homotopy `(s″,t″) : f′ → f″` gives the 2-cell with basis images
//! `(k ⊗ s″)(b) = s″(b)⁻¹ ▷′ k(b)` between the concatenations. Left
//! whisker: a homotopy `(s″,t″) : f₀ → f` in front of the 2-cell keeps the
//! basis images, `(s″ ⊗ k)(b) = k(b)`.

use group_kernel::ProbeConfig;
use xmod_core::VerificationReport;

use crate::concat::concat_homotopies;
use crate::derivation::Homotopy;
use crate::error::{HomotopyError, Result};
use crate::omega::omega;
use crate::twofold::{Quadratic2Derivation, TwoDerivationMap};
use crate::util::{morphisms_agree, probe_words};

fn require_basis<'a>(c: &'a Quadratic2Derivation) -> Result<&'a [group_kernel::Element]> {
    c.k
        .basis_images()
        .ok_or_else(|| HomotopyError::SourceNotFree(c.base.base.source.g.name().to_string()))
}

/// Whiskers a 2-cell on the right by a following homotopy.
pub fn whisker_right(
    c: &Quadratic2Derivation,
    after: &Homotopy,
    cfg: &ProbeConfig,
) -> Result<Quadratic2Derivation> {
    if !morphisms_agree(&c.base.target, &after.base, cfg) {
        return Err(HomotopyError::EndpointMismatch(
            "whiskering homotopy does not start at the 2-cell's target morphism".into(),
        ));
    }
    let a2 = c.base.base.target.clone();
    let f = c.base.base.source.g.clone();
    let images = require_basis(c)?
        .iter()
        .enumerate()
        .map(|(i, k_b)| a2.secondary_action(&after.s().eval(&f.generator(i)).inv(), k_b))
        .collect();
    let base = concat_homotopies(&c.base, after, cfg)?;
    let k = TwoDerivationMap::extend(base.s(), images)?;
    Quadratic2Derivation::new(&base, k)
}

/// Whiskers a 2-cell on the left by a preceding homotopy.
pub fn whisker_left(
    before: &Homotopy,
    c: &Quadratic2Derivation,
    cfg: &ProbeConfig,
) -> Result<Quadratic2Derivation> {
    if !morphisms_agree(&before.target, &c.base.base, cfg) {
        return Err(HomotopyError::EndpointMismatch(
            "whiskering homotopy does not land at the 2-cell's base morphism".into(),
        ));
    }
    let images = require_basis(c)?.to_vec();
    let base = concat_homotopies(before, &c.base, cfg)?;
    let k = TwoDerivationMap::extend(base.s(), images)?;
    Quadratic2Derivation::new(&base, k)
}

/// Law suite for the right whisker: the whiskered 2-cell lands on the
/// concatenated target, pointwise on `s`, on `t`, and on the correction
/// terms.
pub fn whisker_right_report(
    c: &Quadratic2Derivation,
    after: &Homotopy,
    cfg: &ProbeConfig,
) -> Result<VerificationReport> {
    let a2 = c.base.base.target.clone();
    let f = c.base.base.source.g.clone();
    let cell = whisker_right(c, after, cfg)?;
    let expected_target = concat_homotopies(&c.target, after, cfg)?;
    let mut report = VerificationReport::new(
        format!("right whisker laws out of {}", c.base.base.source.name),
        cfg.describe(),
    );
    let words = probe_words(&f, cfg)?;

    report.law("deformed concatenation matches the target concatenation on s", words.iter().cloned(), |g| {
        let lhs = cell.base.s().eval(g).mul(&a2.delta.apply(&cell.k.eval(g)));
        let rhs = expected_target.s().eval(g);
        (lhs != rhs).then(|| format!("g = {}", f.describe_element(g)))
    });

    let eprobe = c.base.base.source.e.probe(cfg);
    report.law("deformed concatenation matches the target concatenation on t", eprobe.iter().cloned(), |x| {
        let b = c.base.base.source.bdry.apply(x);
        let lhs = cell.k.eval(&b).inv().mul(&cell.base.t().eval(x));
        let rhs = expected_target.t().eval(x);
        (lhs != rhs).then(|| format!("e = {}", c.base.base.source.e.describe_element(x)))
    });

    let om_base = omega(c.base.s(), after.s(), cfg)?;
    let om_target = omega(c.target.s(), after.s(), cfg)?;
    report.law("correction terms of the two concatenations", words.iter().cloned(), |g| {
        let lhs = cell.k.eval(g).inv().mul(&om_base.eval(g));
        let rhs = om_target
            .eval(g)
            .mul(&a2.secondary_action(&after.s().eval(g).inv(), &c.k.eval(g).inv()));
        (lhs != rhs).then(|| format!("g = {}", f.describe_element(g)))
    });
    Ok(report)
}

/// Law suite for the left whisker, mirroring the right-whisker laws.
pub fn whisker_left_report(
    before: &Homotopy,
    c: &Quadratic2Derivation,
    cfg: &ProbeConfig,
) -> Result<VerificationReport> {
    let a2 = c.base.base.target.clone();
    let f = c.base.base.source.g.clone();
    let cell = whisker_left(before, c, cfg)?;
    let expected_target = concat_homotopies(before, &c.target, cfg)?;
    let mut report = VerificationReport::new(
        format!("left whisker laws out of {}", c.base.base.source.name),
        cfg.describe(),
    );
    let words = probe_words(&f, cfg)?;

    report.law("deformed concatenation matches the target concatenation on s", words.iter().cloned(), |g| {
        let lhs = cell.base.s().eval(g).mul(&a2.delta.apply(&cell.k.eval(g)));
        let rhs = expected_target.s().eval(g);
        (lhs != rhs).then(|| format!("g = {}", f.describe_element(g)))
    });

    let eprobe = c.base.base.source.e.probe(cfg);
    report.law("deformed concatenation matches the target concatenation on t", eprobe.iter().cloned(), |x| {
        let b = c.base.base.source.bdry.apply(x);
        let lhs = cell.k.eval(&b).inv().mul(&cell.base.t().eval(x));
        let rhs = expected_target.t().eval(x);
        (lhs != rhs).then(|| format!("e = {}", c.base.base.source.e.describe_element(x)))
    });

    let om_base = omega(before.s(), c.base.s(), cfg)?;
    let om_target = omega(before.s(), c.target.s(), cfg)?;
    report.law("correction terms of the two concatenations", words.iter().cloned(), |g| {
        let lhs = cell.k.eval(g).inv().mul(&om_base.eval(g));
        let rhs = om_target.eval(g).mul(&c.k.eval(g).inv());
        (lhs != rhs).then(|| format!("g = {}", f.describe_element(g)))
    });
    Ok(report)
}

/// The interchange law for a horizontally composable pair of 2-cells:
/// whisker-then-compose agrees in both orders, and the pointwise exchange
/// identity holds.
pub fn interchange_check(
    c1: &Quadratic2Derivation,
    c2: &Quadratic2Derivation,
    cfg: &ProbeConfig,
) -> Result<VerificationReport> {
    if !morphisms_agree(&c1.base.target, &c2.base.base, cfg) {
        return Err(HomotopyError::EndpointMismatch(
            "2-cells are not horizontally composable".into(),
        ));
    }
    let a2 = c1.base.base.target.clone();
    let f = c1.base.base.source.g.clone();
    let mut report = VerificationReport::new(
        format!("interchange out of {}", c1.base.base.source.name),
        cfg.describe(),
    );

    let u = c2.base.s();
    let u2 = c2.target.s();
    report.law("pointwise exchange identity", probe_words(&f, cfg)?, |g| {
        let kg = c1.k.eval(g);
        let kg2 = c2.k.eval(g);
        let lhs = a2.secondary_action(&u.eval(g).inv(), &kg).mul(&kg2);
        let rhs = kg2.mul(&a2.secondary_action(&u2.eval(g).inv(), &kg));
        (lhs != rhs).then(|| format!("g = {}", f.describe_element(g)))
    });

    let left = crate::twofold::vertical_compose(
        &whisker_right(c1, &c2.base, cfg)?,
        &whisker_left(&c1.target, c2, cfg)?,
        cfg,
    )?;
    let right = crate::twofold::vertical_compose(
        &whisker_left(&c1.base, c2, cfg)?,
        &whisker_right(c1, &c2.target, cfg)?,
        cfg,
    )?;
    report.law_outcome(
        "the two whiskered composites agree",
        if left.agrees_with(&right, cfg) { None } else { Some("composite 2-cells differ".into()) },
    );
    Ok(report)
}
