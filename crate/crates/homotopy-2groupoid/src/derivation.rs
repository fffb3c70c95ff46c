//! Quadratic derivations and the homotopies they induce.
//!
//! A homotopy between morphisms `f, f′ : A → A′` of 2-crossed modules is a
//! pair of maps `s : G → E′` and `t : E → L′` subject to a derivation law
//! for `s`, two equivalent twisted-derivation laws for `t`, an equivariance
//! law, and a compatibility with the Peiffer lifting. Equivalently, the
//! triple
//!
//! ```text
//! i₁(g) = (φ(g), s(g)),   i₂(a) = (ψ(a), s(∂a), t(a)),   i₃(l) = (μ(l), t(δl))
//! ```
//!
//! is a morphism `A → P(A′)` into the path space, which is how validity is
//! cross-checked here. The target morphism is read off levelwise:
//! `φ′ = φ·(∂∘s)`, `ψ′ = ψ·(s∘∂)·(δ∘t)`, `μ′ = μ·(t∘δ)`.

use std::sync::Arc;

use group_kernel::{Element, Group, Hom, ProbeConfig};
use xmod_core::{xmod_map_verify, TwoCrossedModule, VerificationReport, XModMorphism};

use crate::ctx::context_for;
use crate::error::{HomotopyError, Result};
use crate::util::{is_free, require_free};

// ---------------------------------------------------------------------------
// Plain pointwise maps (no algebraic structure assumed)
// ---------------------------------------------------------------------------

/// A pointwise map between carriers, used for the level-1 component `t` of a
/// homotopy, whose domain need be neither finite nor free.
#[derive(Clone)]
pub struct PointMap {
    domain: Group,
    codomain: Group,
    rule: Arc<dyn Fn(&Element) -> Element + Send + Sync>,
}

impl PointMap {
    /// Wraps a closure.
    pub fn from_fn<F>(domain: &Group, codomain: &Group, f: F) -> PointMap
    where
        F: Fn(&Element) -> Element + Send + Sync + 'static,
    {
        PointMap { domain: domain.clone(), codomain: codomain.clone(), rule: Arc::new(f) }
    }

    /// The constant-identity map.
    pub fn trivial(domain: &Group, codomain: &Group) -> PointMap {
        let cod = codomain.clone();
        PointMap::from_fn(domain, codomain, move |_| cod.id())
    }

    /// Evaluates the map.
    pub fn eval(&self, x: &Element) -> Element {
        (self.rule)(x)
    }

    /// The domain carrier.
    pub fn domain(&self) -> &Group {
        &self.domain
    }

    /// The codomain carrier.
    pub fn codomain(&self) -> &Group {
        &self.codomain
    }
}

// ---------------------------------------------------------------------------
// Derivation maps s : G → E′
// ---------------------------------------------------------------------------

#[derive(Clone)]
enum Rep {
    /// Explicit graph over a finite domain.
    Table(Vec<(Element, Element)>),
    /// Basis images over a free domain, together with the induced
    /// homomorphism `g ↦ (φ(g), s(g))` into `G′ ⋉ E′` that evaluates the
    /// extension.
    Basis { images: Vec<Element>, ext: Hom },
}

/// A map `s : G → E′` twisted-multiplicative along a homomorphism `φ`:
/// `s(gh) = (φ(h)⁻¹ ▷ s(g)) · s(h)`.
///
/// Stored either as an explicit table (finite `G`) or as basis images over a
/// free `G`; in the free case evaluation goes through the unique
/// homomorphism `G → G′ ⋉ E′` with `g ↦ (φ(g), s(g))`, whose existence is
/// precisely the derivation law.
#[derive(Clone)]
pub struct DerivationMap {
    phi: Hom,
    target: TwoCrossedModule,
    rep: Rep,
}

impl DerivationMap {
    /// Extends basis images `s(bᵢ)` over a free domain along `φ`.
    pub fn extend(phi: &Hom, target: &TwoCrossedModule, images: Vec<Element>) -> Result<DerivationMap> {
        let f = phi.domain();
        let n = require_free(f)?;
        if images.len() != n {
            return Err(HomotopyError::ShapeMismatch(format!(
                "expected {n} basis images for `{}`, got {}",
                f.name(),
                images.len()
            )));
        }
        for img in &images {
            if img.group() != &target.e {
                return Err(HomotopyError::ShapeMismatch(format!(
                    "derivation image `{}` lies in `{}`, expected `{}`",
                    img.group().describe_element(img),
                    img.group().name(),
                    target.e.name()
                )));
            }
        }
        let ctx = context_for(target)?;
        let gr0 = &ctx.p.carriers.gr0;
        let ext_images: Vec<Element> = images
            .iter()
            .enumerate()
            .map(|(i, s_b)| ctx.p.carriers.pk0(&phi.apply(&f.generator(i)), s_b))
            .collect();
        let ext = Hom::extend_free(f, gr0, ext_images);
        Ok(DerivationMap { phi: phi.clone(), target: target.clone(), rep: Rep::Basis { images, ext } })
    }

    /// Wraps an explicit graph over a finite domain. The table must cover
    /// every element of the domain.
    pub fn from_table(
        phi: &Hom,
        target: &TwoCrossedModule,
        entries: Vec<(Element, Element)>,
    ) -> Result<DerivationMap> {
        let f = phi.domain();
        let all = f.elements_opt().ok_or_else(|| {
            HomotopyError::ShapeMismatch(format!("table representation needs a finite domain, `{}` is not", f.name()))
        })?;
        for g in &all {
            if !entries.iter().any(|(k, _)| k == g) {
                return Err(HomotopyError::ShapeMismatch(format!(
                    "table misses domain element {}",
                    f.describe_element(g)
                )));
            }
        }
        Ok(DerivationMap { phi: phi.clone(), target: target.clone(), rep: Rep::Table(entries) })
    }

    /// The constant-identity derivation along `φ`.
    pub fn trivial(phi: &Hom, target: &TwoCrossedModule) -> Result<DerivationMap> {
        let f = phi.domain();
        if is_free(f) {
            let n = f.free_basis().len();
            DerivationMap::extend(phi, target, vec![target.e.id(); n])
        } else if let Some(all) = f.elements_opt() {
            let entries = all.into_iter().map(|g| (g, target.e.id())).collect();
            DerivationMap::from_table(phi, target, entries)
        } else {
            Err(HomotopyError::SourceNotFree(f.name().to_string()))
        }
    }

    /// Evaluates `s(g)`.
    pub fn eval(&self, g: &Element) -> Element {
        match &self.rep {
            Rep::Table(entries) => entries
                .iter()
                .find(|(k, _)| k == g)
                .map(|(_, v)| v.clone())
                .unwrap_or_else(|| panic!("derivation table misses {}", g.group().describe_element(g))),
            Rep::Basis { ext, .. } => ext.apply(g).second(&self.target.e),
        }
    }

    /// The homomorphism the derivation is twisted along.
    pub fn phi(&self) -> &Hom {
        &self.phi
    }

    /// The target module, whose middle carrier is the codomain.
    pub fn target(&self) -> &TwoCrossedModule {
        &self.target
    }

    /// Basis images when stored over a free domain.
    pub fn basis_images(&self) -> Option<&[Element]> {
        match &self.rep {
            Rep::Basis { images, .. } => Some(images),
            Rep::Table(_) => None,
        }
    }

    /// Whether the domain is free (so basis images are available).
    pub fn is_basis(&self) -> bool {
        matches!(self.rep, Rep::Basis { .. })
    }

    /// The shifted homomorphism `φ′ = φ · (∂ ∘ s)`, the base level of the
    /// target morphism.
    pub fn phi_shifted(&self) -> Hom {
        let phi = self.phi.clone();
        let bdry = self.target.bdry.clone();
        let this = self.clone();
        let (dom, cod) = (phi.domain().clone(), phi.codomain().clone());
        Hom::from_fn(&dom, &cod, move |g| {
            phi.apply(g).mul(&bdry.apply(&this.eval(g)))
        })
    }

    /// Exact equality where decidable: identical basis images (free case) or
    /// agreement on the full table.
    pub fn same_as(&self, other: &DerivationMap) -> bool {
        match (&self.rep, &other.rep) {
            (Rep::Basis { images: a, .. }, Rep::Basis { images: b, .. }) => a == b,
            (Rep::Table(a), Rep::Table(_)) => a.iter().all(|(k, v)| &other.eval(k) == v),
            _ => false,
        }
    }
}

/// The pair `(s, t)` of components of a homotopy.
#[derive(Clone)]
pub struct QuadraticDerivation {
    /// The level-0 component `s : G → E′`.
    pub s: DerivationMap,
    /// The level-1 component `t : E → L′`.
    pub t: PointMap,
}

// ---------------------------------------------------------------------------
// Spec-level operations
// ---------------------------------------------------------------------------

/// Extends basis images into a derivation along the base level of `f`
/// (free source only).
pub fn extend_derivation(f: &XModMorphism, images: Vec<Element>) -> Result<DerivationMap> {
    DerivationMap::extend(&f.phi, &f.target, images)
}

/// Builds the `t` component from basis images over a *free* middle carrier:
/// the unique extension making `a ↦ (ψ(a), s(∂a), t(a))` a homomorphism into
/// level 1 of the path space.
pub fn extend_t_free(f: &XModMorphism, s: &DerivationMap, images: Vec<Element>) -> Result<PointMap> {
    let e = &f.source.e;
    let n = require_free(e)?;
    if images.len() != n {
        return Err(HomotopyError::ShapeMismatch(format!(
            "expected {n} basis images for `{}`, got {}",
            e.name(),
            images.len()
        )));
    }
    let a2 = &f.target;
    let ctx = context_for(a2)?;
    let carriers = ctx.p.carriers.clone();
    let ext_images: Vec<Element> = images
        .iter()
        .enumerate()
        .map(|(i, t_b)| {
            let b = e.generator(i);
            carriers.pk1(&f.psi.apply(&b), &s.eval(&f.source.bdry.apply(&b)), t_b)
        })
        .collect();
    let ext = Hom::extend_free(e, &ctx.p.total.e, ext_images);
    let l2 = a2.l.clone();
    let carriers = ctx.p.carriers.clone();
    Ok(PointMap::from_fn(e, &a2.l, move |a| {
        let (_, _, t) = carriers.un1(&ext.apply(a));
        Element::new(l2.clone(), t.into_payload())
    }))
}

/// The target morphism of the homotopy `(s, t)` out of `f`: levelwise
/// `φ′ = φ·(∂∘s)`, `ψ′ = ψ·(s∘∂)·(δ∘t)`, `μ′ = μ·(t∘δ)`.
pub fn homotopy_target(f: &XModMorphism, s: &DerivationMap, t: &PointMap) -> XModMorphism {
    let a = f.source.clone();
    let a2 = f.target.clone();

    let phi2 = s.phi_shifted();

    let psi = f.psi.clone();
    let bdry = a.bdry.clone();
    let s_c = s.clone();
    let t_c = t.clone();
    let delta2 = a2.delta.clone();
    let psi2 = Hom::from_fn(&a.e, &a2.e, move |x| {
        psi.apply(x)
            .mul(&s_c.eval(&bdry.apply(x)))
            .mul(&delta2.apply(&t_c.eval(x)))
    });

    let mu = f.mu.clone();
    let delta = a.delta.clone();
    let t_c = t.clone();
    let mu2 = Hom::from_fn(&a.l, &a2.l, move |l| mu.apply(l).mul(&t_c.eval(&delta.apply(l))));

    XModMorphism::new(&a, &a2, mu2, psi2, phi2)
}

/// Checks every defining law of a quadratic derivation `(s, t)` out of `f`
/// over the probe sets, including the packaged form: the triple
/// `(i₃, i₂, i₁)` must be a morphism into the path space of the target.
pub fn is_quadratic_derivation(
    f: &XModMorphism,
    s: &DerivationMap,
    t: &PointMap,
    cfg: &ProbeConfig,
) -> VerificationReport {
    let a = &f.source;
    let a2 = &f.target;
    let mut report = VerificationReport::new(
        format!("quadratic derivation out of {} -> {}", a.name, a2.name),
        cfg.describe(),
    );

    let gp = a.g.probe(cfg);
    let ep = a.e.probe(cfg);

    let phi = |g: &Element| f.phi.apply(g);
    let psi = |x: &Element| f.psi.apply(x);
    let bd = |x: &Element| a.bdry.apply(x);
    let bd2 = |x: &Element| a2.bdry.apply(x);
    let de2 = |l: &Element| a2.delta.apply(l);
    let acte = |g: &Element, e: &Element| a2.act_e.act(g, e);
    let actl = |g: &Element, l: &Element| a2.act_l.act(g, l);
    let sec = |e: &Element, l: &Element| a2.secondary_action(e, l);
    let lift = |x: &Element, y: &Element| a2.lift.lift(x, y);
    let sv = |g: &Element| s.eval(g);
    let tv = |x: &Element| t.eval(x);

    report.law_outcome(
        "s(1) = 1",
        if sv(&a.g.id()).is_identity() { None } else { Some(format!("s(1) = {}", a2.e.describe_element(&sv(&a.g.id())))) },
    );
    report.law_outcome(
        "t(1) = 1",
        if tv(&a.e.id()).is_identity() { None } else { Some(format!("t(1) = {}", a2.l.describe_element(&tv(&a.e.id())))) },
    );

    report.law("s(gh) = (phi(h)^-1 |> s(g)) s(h)", cfg.pairs(&gp), |(g, h)| {
        let lhs = sv(&g.mul(h));
        let rhs = acte(&phi(h).inv(), &sv(g)).mul(&sv(h));
        (lhs != rhs).then(|| format!("g = {}, h = {}", a.g.describe_element(g), a.g.describe_element(h)))
    });

    report.law("s(g^-1) = phi(g) |> s(g)^-1", gp.iter().cloned(), |g| {
        let lhs = sv(&g.inv());
        let rhs = acte(&phi(g), &sv(g).inv());
        (lhs != rhs).then(|| format!("g = {}", a.g.describe_element(g)))
    });

    // Twisted derivation law for t, first form.
    report.law("t(ab) twisted-derivation (first form)", cfg.pairs(&ep), |(x, y)| {
        let lhs = tv(&x.mul(y));
        let prefix = psi(y).mul(&sv(&bd(y)));
        let brace = lift(&psi(y), &acte(&phi(&bd(y).inv()), &sv(&bd(x)).inv()));
        let rhs = sec(&prefix.inv(), &brace.mul(&tv(x))).mul(&tv(y));
        (lhs != rhs).then(|| format!("a = {}, b = {}", a.e.describe_element(x), a.e.describe_element(y)))
    });

    // Twisted derivation law for t, second form.
    report.law("t(ab) twisted-derivation (second form)", cfg.pairs(&ep), |(x, y)| {
        let lhs = tv(&x.mul(y));
        let brace = lift(&psi(y).inv(), &sv(&bd(x)).inv()).inv();
        let rhs = sec(&sv(&bd(y)).inv(), &brace.mul(&sec(&psi(y).inv(), &tv(x)))).mul(&tv(y));
        (lhs != rhs).then(|| format!("a = {}, b = {}", a.e.describe_element(x), a.e.describe_element(y)))
    });

    // Equivariance of t.
    report.law("t(g |> a) equivariance", cfg.pairs2(&gp, &ep), |(g, x)| {
        let lhs = tv(&a.act_e.act(g, x));
        let term1 = actl(
            &phi(g),
            &sec(&sv(g).mul(&sv(&bd(x)).inv()), &lift(&psi(x).inv(), &sv(g).inv()).inv()),
        );
        let term2 = actl(&phi(g), &lift(&sv(g), &sv(&bd(x)).inv().mul(&psi(x).inv())));
        let term3 = actl(&phi(g).mul(&bd2(&sv(g))), &tv(x));
        let rhs = term1.mul(&term2).mul(&term3);
        (lhs != rhs).then(|| format!("g = {}, a = {}", a.g.describe_element(g), a.e.describe_element(x)))
    });

    // Compatibility of t with the Peiffer lifting at the commutator level.
    report.law("t of the Peiffer commutator", cfg.pairs(&ep), |(x, y)| {
        let lhs = tv(&a.peiffer_commutator(x, y));
        let xa = psi(x).mul(&sv(&bd(x))).mul(&de2(&tv(x)));
        let yb = psi(y).mul(&sv(&bd(y))).mul(&de2(&tv(y)));
        let rhs = lift(&psi(x), &psi(y)).inv().mul(&lift(&xa, &yb));
        (lhs != rhs).then(|| format!("a = {}, b = {}", a.e.describe_element(x), a.e.describe_element(y)))
    });

    // Packaged form: (i3, i2, i1) is a morphism into the path space.
    match context_for(a2) {
        Ok(ctx) => {
            let carriers = ctx.p.carriers.clone();
            let f_c = f.clone();
            let s_c = s.clone();
            let t_c = t.clone();
            let c1 = carriers.clone();
            let i1 = Hom::from_fn(&a.g, &ctx.p.total.g, move |g| c1.pk0(&f_c.phi.apply(g), &s_c.eval(g)));
            let f_c = f.clone();
            let s_c = s.clone();
            let t_c2 = t.clone();
            let c2 = carriers.clone();
            let bdry = a.bdry.clone();
            let i2 = Hom::from_fn(&a.e, &ctx.p.total.e, move |x| {
                c2.pk1(&f_c.psi.apply(x), &s_c.eval(&bdry.apply(x)), &t_c2.eval(x))
            });
            let f_c = f.clone();
            let c3 = carriers.clone();
            let delta = a.delta.clone();
            let i3 = Hom::from_fn(&a.l, &ctx.p.total.l, move |l| {
                c3.pk2(&f_c.mu.apply(l), &t_c.eval(&delta.apply(l)))
            });
            let packaged = XModMorphism::new(a, &ctx.p.total, i3, i2, i1);
            report.absorb("packaged into the path space", xmod_map_verify(&packaged, cfg));
        }
        Err(e) => report.law_outcome("path space of the target exists", Some(e.to_string())),
    }

    // The induced target must itself be a morphism.
    let target = homotopy_target(f, s, t);
    report.absorb("induced target morphism", xmod_map_verify(&target, cfg));

    report
}

// ---------------------------------------------------------------------------
// Homotopies
// ---------------------------------------------------------------------------

/// A homotopy: a base morphism, its quadratic derivation, and the induced
/// target morphism.
#[derive(Clone)]
pub struct Homotopy {
    /// The morphism the homotopy starts from.
    pub base: XModMorphism,
    /// The components `(s, t)`.
    pub derivation: QuadraticDerivation,
    /// The induced target morphism.
    pub target: XModMorphism,
}

impl Homotopy {
    /// Bundles the data, computing the target. Validity is *not* implied;
    /// call [`Homotopy::validate`].
    pub fn new(base: &XModMorphism, s: DerivationMap, t: PointMap) -> Homotopy {
        let target = homotopy_target(base, &s, &t);
        Homotopy { base: base.clone(), derivation: QuadraticDerivation { s, t }, target }
    }

    /// The constant homotopy at `f` (trivial `s` and `t`).
    pub fn unit(f: &XModMorphism) -> Result<Homotopy> {
        let s = DerivationMap::trivial(&f.phi, &f.target)?;
        let t = PointMap::trivial(&f.source.e, &f.target.l);
        Ok(Homotopy::new(f, s, t))
    }

    /// The `s` component.
    pub fn s(&self) -> &DerivationMap {
        &self.derivation.s
    }

    /// The `t` component.
    pub fn t(&self) -> &PointMap {
        &self.derivation.t
    }

    /// Runs the full law suite for the underlying quadratic derivation.
    pub fn validate(&self, cfg: &ProbeConfig) -> VerificationReport {
        is_quadratic_derivation(&self.base, &self.derivation.s, &self.derivation.t, cfg)
    }

    /// Approximate equality: identical `s` representation and agreement of
    /// `t` and of the endpoint morphisms on probe sets.
    pub fn agrees_with(&self, other: &Homotopy, cfg: &ProbeConfig) -> bool {
        self.derivation.s.same_as(&other.derivation.s)
            && crate::util::morphisms_agree(&self.base, &other.base, cfg)
            && self
                .base
                .source
                .e
                .probe(cfg)
                .iter()
                .all(|x| self.derivation.t.eval(x) == other.derivation.t.eval(x))
    }
}

/// Whiskers a homotopy by a strict morphism on the left: `h ∘ (s, t)` has
/// components `(ψ_h ∘ s, μ_h ∘ t)` and runs from `h ∘ f` to `h ∘ f′`.
pub fn compose_strict_left(h: &XModMorphism, hom: &Homotopy) -> Result<Homotopy> {
    if h.source != hom.base.target {
        return Err(HomotopyError::EndpointMismatch(format!(
            "strict map starts at {}, homotopy lands in {}",
            h.source.name, hom.base.target.name
        )));
    }
    let base = h.compose(&hom.base);
    let s = match hom.derivation.s.basis_images() {
        Some(images) => DerivationMap::extend(
            &base.phi,
            &h.target,
            images.iter().map(|e| h.psi.apply(e)).collect(),
        )?,
        None => {
            let all = hom.base.source.g.elements_opt().ok_or_else(|| {
                HomotopyError::SourceNotFree(hom.base.source.g.name().to_string())
            })?;
            let entries = all
                .into_iter()
                .map(|g| {
                    let v = h.psi.apply(&hom.derivation.s.eval(&g));
                    (g, v)
                })
                .collect();
            DerivationMap::from_table(&base.phi, &h.target, entries)?
        }
    };
    let mu = h.mu.clone();
    let t0 = hom.derivation.t.clone();
    let t = PointMap::from_fn(&hom.base.source.e, &h.target.l, move |x| mu.apply(&t0.eval(x)));
    Ok(Homotopy::new(&base, s, t))
}

/// Whiskers a homotopy by a strict morphism on the right: `(s, t) ∘ h` has
/// components `(s ∘ φ_h, t ∘ ψ_h)` and runs from `f ∘ h` to `f′ ∘ h`.
pub fn compose_strict_right(hom: &Homotopy, h: &XModMorphism) -> Result<Homotopy> {
    if h.target != hom.base.source {
        return Err(HomotopyError::EndpointMismatch(format!(
            "strict map lands in {}, homotopy starts at {}",
            h.target.name, hom.base.source.name
        )));
    }
    let base = hom.base.compose(h);
    let s = if is_free(&h.source.g) {
        let n = h.source.g.free_basis().len();
        let images = (0..n)
            .map(|i| hom.derivation.s.eval(&h.phi.apply(&h.source.g.generator(i))))
            .collect();
        DerivationMap::extend(&base.phi, &hom.base.target, images)?
    } else {
        let all = h
            .source
            .g
            .elements_opt()
            .ok_or_else(|| HomotopyError::SourceNotFree(h.source.g.name().to_string()))?;
        let entries = all
            .into_iter()
            .map(|g| {
                let v = hom.derivation.s.eval(&h.phi.apply(&g));
                (g, v)
            })
            .collect();
        DerivationMap::from_table(&base.phi, &hom.base.target, entries)?
    };
    let psi = h.psi.clone();
    let t0 = hom.derivation.t.clone();
    let t = PointMap::from_fn(&h.source.e, &hom.base.target.l, move |x| t0.eval(&psi.apply(x)));
    Ok(Homotopy::new(&base, s, t))
}
