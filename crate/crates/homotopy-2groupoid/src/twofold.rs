//! Quadratic 2-derivations: the 2-cells between parallel homotopies.
//!
//! A 2-derivation `k : G → L′` relative to a homotopy with components
//! `(s, t)` out of `f` satisfies
//!
//! ```text
//! k(gh) = (s(h)⁻¹ ▷′ (φ(h)⁻¹ ▷ k(g))) · k(h),
//! ```
//!
//! equivalently `g ↦ ((φ(g), s(g)), k(g))` is a homomorphism into level 0 of
//! the disk space of the target — which is how the free-base extension is
//! evaluated here. The deformed homotopy has components
//! `s′(g) = s(g)·δ(k(g))` and `t′(e) = k(∂e)⁻¹·t(e)` with the same
//! endpoints.

use group_kernel::{Element, Hom, ProbeConfig};
use xmod_core::VerificationReport;

use crate::ctx::context_for;
use crate::derivation::{DerivationMap, Homotopy, PointMap};
use crate::error::{HomotopyError, Result};
use crate::util::{is_free, probe_words};

#[derive(Clone)]
enum KRep {
    Table(Vec<(Element, Element)>),
    Basis { images: Vec<Element>, ext: Hom },
}

/// A map `k : G → L′` twisted-multiplicative relative to `(φ, s)`.
#[derive(Clone)]
pub struct TwoDerivationMap {
    s: DerivationMap,
    rep: KRep,
}

impl TwoDerivationMap {
    /// Extends basis images over a free domain via the disk-space carrier.
    pub fn extend(s: &DerivationMap, images: Vec<Element>) -> Result<TwoDerivationMap> {
        let f = s.phi().domain().clone();
        let n = crate::util::require_free(&f)?;
        if images.len() != n {
            return Err(HomotopyError::ShapeMismatch(format!(
                "expected {n} basis images for `{}`, got {}",
                f.name(),
                images.len()
            )));
        }
        let a2 = s.target();
        let ctx = context_for(a2)?;
        let ext_images: Vec<Element> = images
            .iter()
            .enumerate()
            .map(|(i, k_b)| {
                let b = f.generator(i);
                let level0 = ctx.p.carriers.pk0(&s.phi().apply(&b), &s.eval(&b));
                ctx.disk0.pair(&level0, k_b)
            })
            .collect();
        let ext = Hom::extend_free(&f, &ctx.disk0, ext_images);
        Ok(TwoDerivationMap { s: s.clone(), rep: KRep::Basis { images, ext } })
    }

    /// Wraps an explicit graph over a finite domain.
    pub fn from_table(s: &DerivationMap, entries: Vec<(Element, Element)>) -> Result<TwoDerivationMap> {
        let f = s.phi().domain();
        let all = f.elements_opt().ok_or_else(|| {
            HomotopyError::ShapeMismatch(format!("table representation needs a finite domain, `{}` is not", f.name()))
        })?;
        for g in &all {
            if !entries.iter().any(|(key, _)| key == g) {
                return Err(HomotopyError::ShapeMismatch(format!(
                    "table misses domain element {}",
                    f.describe_element(g)
                )));
            }
        }
        Ok(TwoDerivationMap { s: s.clone(), rep: KRep::Table(entries) })
    }

    /// The constant-identity 2-derivation.
    pub fn trivial(s: &DerivationMap) -> Result<TwoDerivationMap> {
        let f = s.phi().domain();
        if is_free(f) {
            let n = f.free_basis().len();
            TwoDerivationMap::extend(s, vec![s.target().l.id(); n])
        } else if let Some(all) = f.elements_opt() {
            let l_id = s.target().l.id();
            TwoDerivationMap::from_table(s, all.into_iter().map(|g| (g, l_id.clone())).collect())
        } else {
            Err(HomotopyError::SourceNotFree(f.name().to_string()))
        }
    }

    /// Evaluates `k(g)`.
    pub fn eval(&self, g: &Element) -> Element {
        match &self.rep {
            KRep::Table(entries) => entries
                .iter()
                .find(|(key, _)| key == g)
                .map(|(_, v)| v.clone())
                .unwrap_or_else(|| panic!("2-derivation table misses {}", g.group().describe_element(g))),
            KRep::Basis { ext, .. } => ext.apply(g).second(&self.s.target().l),
        }
    }

    /// The underlying derivation `(φ, s)`.
    pub fn along(&self) -> &DerivationMap {
        &self.s
    }

    /// Basis images when stored over a free domain.
    pub fn basis_images(&self) -> Option<&[Element]> {
        match &self.rep {
            KRep::Basis { images, .. } => Some(images),
            KRep::Table(_) => None,
        }
    }

    /// Exact equality where decidable.
    pub fn same_as(&self, other: &TwoDerivationMap) -> bool {
        match (&self.rep, &other.rep) {
            (KRep::Basis { images: a, .. }, KRep::Basis { images: b, .. }) => a == b,
            (KRep::Table(a), KRep::Table(_)) => a.iter().all(|(key, v)| &other.eval(key) == v),
            _ => false,
        }
    }
}

/// Extends basis images into a 2-derivation relative to `(φ, s)` where `φ`
/// is the base level of `f` (free source only).
pub fn extend_2derivation(
    f: &xmod_core::XModMorphism,
    s: &DerivationMap,
    images: Vec<Element>,
) -> Result<TwoDerivationMap> {
    let n = crate::util::require_free(&f.source.g)?;
    for i in 0..n {
        let b = f.source.g.generator(i);
        if s.phi().apply(&b) != f.phi.apply(&b) {
            return Err(HomotopyError::EndpointMismatch(
                "derivation is not based at the given morphism".into(),
            ));
        }
    }
    TwoDerivationMap::extend(s, images)
}

/// Checks the defining laws of a quadratic 2-derivation over the probe
/// words, including a second, independent evaluation through the double
/// path space.
pub fn is_quadratic_2derivation(k: &TwoDerivationMap, cfg: &ProbeConfig) -> VerificationReport {
    let s = k.along();
    let a2 = s.target().clone();
    let f = s.phi().domain().clone();
    let mut report = VerificationReport::new(
        format!("quadratic 2-derivation over `{}` into {}", f.name(), a2.name),
        cfg.describe(),
    );
    let probe: Vec<Element> = if is_free(&f) {
        match probe_words(&f, cfg) {
            Ok(ws) => ws,
            Err(e) => {
                report.law_outcome("probe words exist", Some(e.to_string()));
                return report;
            }
        }
    } else {
        f.probe(cfg)
    };

    report.law_outcome(
        "k(1) = 1",
        if k.eval(&f.id()).is_identity() { None } else { Some("k(1) != 1".into()) },
    );
    report.law("k(gh) twisted-derivation law", cfg.pairs(&probe), |(g, h)| {
        let lhs = k.eval(&g.mul(h));
        let rhs = a2
            .secondary_action(&s.eval(h).inv(), &a2.act_l.act(&s.phi().apply(h).inv(), &k.eval(g)))
            .mul(&k.eval(h));
        (lhs != rhs).then(|| format!("g = {}, h = {}", f.describe_element(g), f.describe_element(h)))
    });
    report.law("k(g^-1) closed form", probe.iter().cloned(), |g| {
        let lhs = k.eval(&g.inv());
        let rhs = a2.act_l.act(
            &s.phi().apply(g),
            &a2.secondary_action(&s.eval(g), &k.eval(g).inv()),
        );
        (lhs != rhs).then(|| format!("g = {}", f.describe_element(g)))
    });

    // Independent evaluation: g ↦ (φ(g), s(g), 1, δ(k(g)), k(g)⁻¹) extends
    // to a homomorphism into level 0 of the double path space whose last
    // coordinate recovers k(g)⁻¹.
    if let (Some(images), Ok(ctx)) = (k.basis_images(), context_for(&a2)) {
        let ext_images: Vec<Element> = images
            .iter()
            .enumerate()
            .map(|(i, k_b)| {
                let b = f.generator(i);
                let level0 = ctx.p.carriers.pk0(&s.phi().apply(&b), &s.eval(&b));
                let level1 = ctx.p.carriers.pk1(&a2.e.id(), &a2.delta.apply(k_b), &k_b.inv());
                ctx.pp.carriers.pk0(&level0, &level1)
            })
            .collect();
        let ext = Hom::extend_free(&f, &ctx.pp.total.g, ext_images);
        report.law("dual evaluation through the double path space", probe.iter().cloned(), |g| {
            let (_, level1) = ctx.pp.carriers.un0(&ext.apply(g));
            let (_, z, w) = ctx.p.carriers.un1(&level1);
            let expect_w = k.eval(g).inv();
            let expect_z = a2.delta.apply(&k.eval(g));
            (w != expect_w || z != expect_z).then(|| format!("g = {}", f.describe_element(g)))
        });
    }
    report
}

/// The closed form `Ξ(g, h, i)` equal to `k(g⁻¹ h i)`.
pub fn xi(k: &TwoDerivationMap, g: &Element, h: &Element, i: &Element) -> Element {
    let s = k.along();
    let a2 = s.target();
    let phi = |x: &Element| s.phi().apply(x);
    let sec = |e: &Element, l: &Element| a2.secondary_action(e, l);
    let actl = |x: &Element, l: &Element| a2.act_l.act(x, l);

    let core = actl(
        &phi(h).inv().mul(&phi(g)),
        &sec(&s.eval(g), &k.eval(g).inv()),
    );
    let inner = sec(&s.eval(h).inv(), &core).mul(&k.eval(h));
    sec(&s.eval(i).inv(), &actl(&phi(i).inv(), &inner)).mul(&k.eval(i))
}

/// A 2-cell: a 2-derivation together with the parallel homotopies it
/// connects.
#[derive(Clone)]
pub struct Quadratic2Derivation {
    /// The homotopy the 2-cell starts from.
    pub base: Homotopy,
    /// The 2-derivation.
    pub k: TwoDerivationMap,
    /// The deformed homotopy.
    pub target: Homotopy,
}

impl Quadratic2Derivation {
    /// Bundles the data, computing the deformed homotopy.
    pub fn new(base: &Homotopy, k: TwoDerivationMap) -> Result<Quadratic2Derivation> {
        if !k.along().same_as(base.s()) {
            return Err(HomotopyError::EndpointMismatch(
                "2-derivation is not relative to the base homotopy's derivation".into(),
            ));
        }
        let target = twofold_target(base, &k)?;
        Ok(Quadratic2Derivation { base: base.clone(), k, target: target.clone() })
    }

    /// The identity 2-cell on a homotopy.
    pub fn unit(h: &Homotopy) -> Result<Quadratic2Derivation> {
        Quadratic2Derivation::new(h, TwoDerivationMap::trivial(h.s())?)
    }

    /// Runs the 2-derivation law suite.
    pub fn validate(&self, cfg: &ProbeConfig) -> VerificationReport {
        is_quadratic_2derivation(&self.k, cfg)
    }

    /// Approximate equality: same 2-derivation and agreeing base homotopies.
    pub fn agrees_with(&self, other: &Quadratic2Derivation, cfg: &ProbeConfig) -> bool {
        self.k.same_as(&other.k) && self.base.agrees_with(&other.base, cfg)
    }
}

/// The homotopy deformed by a 2-derivation: `s′(g) = s(g)·δ(k(g))` and
/// `t′(e) = k(∂e)⁻¹·t(e)`, with the same endpoints.
pub fn twofold_target(h: &Homotopy, k: &TwoDerivationMap) -> Result<Homotopy> {
    let a2 = h.base.target.clone();
    let s2 = match h.s().basis_images() {
        Some(images) => {
            let n = images.len();
            let f = h.base.source.g.clone();
            let new_images = (0..n)
                .map(|i| images[i].mul(&a2.delta.apply(&k.eval(&f.generator(i)))))
                .collect();
            DerivationMap::extend(h.s().phi(), &a2, new_images)?
        }
        None => {
            let all = h
                .base
                .source
                .g
                .elements_opt()
                .ok_or_else(|| HomotopyError::SourceNotFree(h.base.source.g.name().to_string()))?;
            let entries = all
                .into_iter()
                .map(|g| {
                    let v = h.s().eval(&g).mul(&a2.delta.apply(&k.eval(&g)));
                    (g, v)
                })
                .collect();
            DerivationMap::from_table(h.s().phi(), &a2, entries)?
        }
    };
    let bdry = h.base.source.bdry.clone();
    let t_old = h.t().clone();
    let k_c = k.clone();
    let t2 = PointMap::from_fn(&h.base.source.e, &a2.l, move |x| {
        k_c.eval(&bdry.apply(x)).inv().mul(&t_old.eval(x))
    });
    Ok(Homotopy::new(&h.base, s2, t2))
}

/// Vertical composition of 2-cells sharing a middle homotopy.
pub fn vertical_compose(
    c1: &Quadratic2Derivation,
    c2: &Quadratic2Derivation,
    cfg: &ProbeConfig,
) -> Result<Quadratic2Derivation> {
    if !c1.target.agrees_with(&c2.base, cfg) {
        return Err(HomotopyError::EndpointMismatch(
            "2-cells do not share a middle homotopy".into(),
        ));
    }
    let k = match (c1.k.basis_images(), c2.k.basis_images()) {
        (Some(a), Some(b)) => {
            let images = a.iter().zip(b).map(|(x, y)| x.mul(y)).collect();
            TwoDerivationMap::extend(c1.base.s(), images)?
        }
        _ => {
            let f = c1.base.base.source.g.clone();
            let all = f
                .elements_opt()
                .ok_or_else(|| HomotopyError::SourceNotFree(f.name().to_string()))?;
            let entries = all
                .into_iter()
                .map(|g| {
                    let v = c1.k.eval(&g).mul(&c2.k.eval(&g));
                    (g, v)
                })
                .collect();
            TwoDerivationMap::from_table(c1.base.s(), entries)?
        }
    };
    Quadratic2Derivation::new(&c1.base, k)
}

/// Vertical inverse of a 2-cell.
pub fn invert_twofold(c: &Quadratic2Derivation) -> Result<Quadratic2Derivation> {
    let k = match c.k.basis_images() {
        Some(images) => {
            TwoDerivationMap::extend(c.target.s(), images.iter().map(|x| x.inv()).collect())?
        }
        None => {
            let f = c.base.base.source.g.clone();
            let all = f
                .elements_opt()
                .ok_or_else(|| HomotopyError::SourceNotFree(f.name().to_string()))?;
            let entries = all
                .into_iter()
                .map(|g| {
                    let v = c.k.eval(&g).inv();
                    (g, v)
                })
                .collect();
            TwoDerivationMap::from_table(c.target.s(), entries)?
        }
    };
    Quadratic2Derivation::new(&c.target, k)
}
