//! Lax homotopies between strict morphisms and the strict/lax
//! correspondence through the resolution.
//!
//! A lax homotopy out of `f₁ = (μ₁,ψ₁,φ₁) : A → A′` is a triple of set maps
//! `ŝ : G → E′`, `t̂ : E → L′`, `Π : G×G → L′` subject to five equations
//! (checked by [`lax_validate`]); its target morphism is
//!
//! ```text
//! φ₂(g) = φ₁(g)·∂(ŝ(g)),  ψ₂(e) = ψ₁(e)·ŝ(∂e)·δ(t̂(e)),
//! μ₂(l) = μ₁(l)·Π(1,1)⁻¹·t̂(δl).
//! ```
//!
//! Equivalently, a lax homotopy is an ordinary homotopy on the resolution
//! between the strictified maps `fᵢ ∘ proj`: the `s` component is the unique
//! derivation with `s([g]) = ŝ(g)`, and `t` is fixed on the level-1
//! generators by `t(e,[∂e]) = t̂(e)` and `t(1,[g,h]) = Π(g,h)`; elsewhere `t`
//! is evaluated by rewriting through the kernel presentation. The
//! [`Strictifier`] owns the machinery for both directions.

use group_kernel::{Element, LeftAction, ProbeConfig};
use homotopy_2groupoid::{
    is_quadratic_derivation, morphisms_agree, DerivationMap, Homotopy, PointMap,
};
use path_spaces::PathCarriers;
use xmod_core::{xmod_map_verify, TwoCrossedModule, VerificationReport, XModMorphism};

use crate::error::{LaxError, Result};
use crate::q1::{q1, Q1Bundle};

// ---------------------------------------------------------------------------
// The lax homotopy data
// ---------------------------------------------------------------------------

/// A lax homotopy `(f₁, ŝ, t̂, Π)`. The tables are total over the finite
/// carriers `G`, `E` and `G × G` of the source module.
#[derive(Clone)]
pub struct LaxHomotopy {
    /// The morphism the homotopy starts from.
    pub base: XModMorphism,
    elems_g: Vec<Element>,
    elems_e: Vec<Element>,
    s_hat: Vec<Element>,
    t_hat: Vec<Element>,
    pi: Vec<Element>,
}

impl LaxHomotopy {
    /// Bundles tables given in the enumeration order of `G` and `E`
    /// (`Π` row-major over `G × G`). Shapes are checked; validity is not.
    pub fn new(
        base: &XModMorphism,
        s_hat: Vec<Element>,
        t_hat: Vec<Element>,
        pi: Vec<Element>,
    ) -> Result<LaxHomotopy> {
        let a = &base.source;
        let a2 = &base.target;
        let elems_g = a
            .g
            .elements()
            .map_err(|_| LaxError::NotEnumerable(a.g.name().to_string()))?;
        let elems_e = a
            .e
            .elements()
            .map_err(|_| LaxError::NotEnumerable(a.e.name().to_string()))?;
        let n = elems_g.len();
        if s_hat.len() != n || t_hat.len() != elems_e.len() || pi.len() != n * n {
            return Err(LaxError::ShapeMismatch(format!(
                "expected tables of sizes {}/{}/{}, got {}/{}/{}",
                n,
                elems_e.len(),
                n * n,
                s_hat.len(),
                t_hat.len(),
                pi.len()
            )));
        }
        for v in &s_hat {
            if v.group() != &a2.e {
                return Err(LaxError::ShapeMismatch(format!(
                    "ŝ image lies in `{}`, expected `{}`",
                    v.group().name(),
                    a2.e.name()
                )));
            }
        }
        for v in t_hat.iter().chain(pi.iter()) {
            if v.group() != &a2.l {
                return Err(LaxError::ShapeMismatch(format!(
                    "t̂/Π image lies in `{}`, expected `{}`",
                    v.group().name(),
                    a2.l.name()
                )));
            }
        }
        Ok(LaxHomotopy { base: base.clone(), elems_g, elems_e, s_hat, t_hat, pi })
    }

    /// Builds the tables by evaluating closures.
    pub fn from_fn(
        base: &XModMorphism,
        fs: impl Fn(&Element) -> Element,
        ft: impl Fn(&Element) -> Element,
        fpi: impl Fn(&Element, &Element) -> Element,
    ) -> Result<LaxHomotopy> {
        let gs = base
            .source
            .g
            .elements()
            .map_err(|_| LaxError::NotEnumerable(base.source.g.name().to_string()))?;
        let es = base
            .source
            .e
            .elements()
            .map_err(|_| LaxError::NotEnumerable(base.source.e.name().to_string()))?;
        let s_hat = gs.iter().map(&fs).collect();
        let t_hat = es.iter().map(&ft).collect();
        let mut pi = Vec::with_capacity(gs.len() * gs.len());
        for g in &gs {
            for h in &gs {
                pi.push(fpi(g, h));
            }
        }
        LaxHomotopy::new(base, s_hat, t_hat, pi)
    }

    /// The trivial lax homotopy at `f` (`ŝ ≡ 1`, `t̂ ≡ 1`, `Π ≡ 1`).
    pub fn trivial(f: &XModMorphism) -> Result<LaxHomotopy> {
        let e1 = f.target.e.id();
        let l1 = f.target.l.id();
        LaxHomotopy::from_fn(f, |_| e1.clone(), |_| l1.clone(), |_, _| l1.clone())
    }

    fn gi(&self, g: &Element) -> usize {
        self.elems_g
            .iter()
            .position(|x| x == g)
            .unwrap_or_else(|| panic!("{} not in the base carrier", g.group().describe_element(g)))
    }

    /// `ŝ(g)`.
    pub fn s_hat(&self, g: &Element) -> Element {
        self.s_hat[self.gi(g)].clone()
    }

    /// `t̂(e)`.
    pub fn t_hat(&self, e: &Element) -> Element {
        let i = self
            .elems_e
            .iter()
            .position(|x| x == e)
            .unwrap_or_else(|| panic!("{} not in the middle carrier", e.group().describe_element(e)));
        self.t_hat[i].clone()
    }

    /// `Π(g,h)`.
    pub fn pi(&self, g: &Element, h: &Element) -> Element {
        self.pi[self.gi(g) * self.elems_g.len() + self.gi(h)].clone()
    }

    /// The enumeration of `G` the tables are indexed by.
    pub fn basis_elements(&self) -> &[Element] {
        &self.elems_g
    }

    /// Exact table equality plus agreement of the base morphisms on probes.
    pub fn same_as(&self, other: &LaxHomotopy, cfg: &ProbeConfig) -> bool {
        self.s_hat == other.s_hat
            && self.t_hat == other.t_hat
            && self.pi == other.pi
            && morphisms_agree(&self.base, &other.base, cfg)
    }
}

/// The target morphism of a lax homotopy: `φ₂ = φ₁·(∂∘ŝ)`,
/// `ψ₂ = ψ₁·(ŝ∘∂)·(δ∘t̂)`, `μ₂ = μ₁ · Π(1,1)⁻¹ · (t̂∘δ)`.
pub fn lax_target(lh: &LaxHomotopy) -> XModMorphism {
    let a = lh.base.source.clone();
    let a2 = lh.base.target.clone();

    let (f, lh2) = (lh.base.clone(), lh.clone());
    let phi2 = group_kernel::Hom::from_fn(&a.g, &a2.g, move |g| {
        f.phi.apply(g).mul(&lh2.base.target.bdry.apply(&lh2.s_hat(g)))
    });

    let (f, lh2, bd) = (lh.base.clone(), lh.clone(), a.bdry.clone());
    let psi2 = group_kernel::Hom::from_fn(&a.e, &a2.e, move |e| {
        f.psi
            .apply(e)
            .mul(&lh2.s_hat(&bd.apply(e)))
            .mul(&lh2.base.target.delta.apply(&lh2.t_hat(e)))
    });

    let (f, lh2, de) = (lh.base.clone(), lh.clone(), a.delta.clone());
    let pi11 = lh.pi(&a.g.id(), &a.g.id());
    let mu2 = group_kernel::Hom::from_fn(&a.l, &a2.l, move |l| {
        f.mu.apply(l).mul(&pi11.inv()).mul(&lh2.t_hat(&de.apply(l)))
    });

    XModMorphism::new(&a, &a2, mu2, psi2, phi2)
}

// ---------------------------------------------------------------------------
// Strict/lax correspondence
// ---------------------------------------------------------------------------

/// Shared machinery for translating between lax homotopies `A → A′` and
/// strict homotopies `Q¹(A) → A′`: the resolution, the path-space carriers
/// of the target, and the lifted action used to evaluate `t` through the
/// kernel rewriting.
#[derive(Clone)]
pub struct Strictifier {
    /// The resolution of the source.
    pub bundle: Q1Bundle,
    /// The target module.
    pub target: TwoCrossedModule,
    carriers: PathCarriers,
    bullet: LeftAction,
}

impl Strictifier {
    /// Builds the machinery for homotopies `A → A′`.
    pub fn new(a: &TwoCrossedModule, a2: &TwoCrossedModule) -> Result<Strictifier> {
        let bundle = q1(a)?;
        let carriers = PathCarriers::new(a2);
        let bullet = carriers.first_lifted_action();
        Ok(Strictifier { bundle, target: a2.clone(), carriers, bullet })
    }

    /// `f ∘ proj : Q¹(A) → A′` for a strict `f : A → A′`.
    pub fn strictify(&self, f: &XModMorphism) -> XModMorphism {
        f.compose(&self.bundle.proj)
    }

    /// The strict homotopy on the resolution corresponding to a lax one:
    /// `s` extends `ŝ` over the basis `[G]`, and `t` is evaluated from
    /// `t(e,[∂e]) = t̂(e)`, `t(1,[g,h]) = Π(g,h)` by rewriting the kernel
    /// part of each element through the Schreier decomposition and acting
    /// with `(φ′(u), s(u))` on the conjugated generators.
    pub fn strict_homotopy(&self, lh: &LaxHomotopy) -> Result<Homotopy> {
        if lh.base.target != self.target || lh.base.source != self.bundle.base {
            return Err(LaxError::EndpointMismatch(format!(
                "lax homotopy is {} -> {}, strictifier is for {} -> {}",
                lh.base.source.name, lh.base.target.name, self.bundle.base.name, self.target.name
            )));
        }
        let strict_base = self.strictify(&lh.base);
        let images: Vec<Element> =
            self.bundle.basis_elements().iter().map(|g| lh.s_hat(g)).collect();
        let s = DerivationMap::extend(&strict_base.phi, &self.target, images)?;

        let (bundle, carriers, bullet) =
            (self.bundle.clone(), self.carriers.clone(), self.bullet.clone());
        let (lh2, s2, phi_q) = (lh.clone(), s.clone(), strict_base.phi.clone());
        let a2 = self.target.clone();
        let src = self.bundle.base.clone();
        let fg = self.bundle.fg.clone();
        let psi1 = lh.base.psi.clone();
        let t = PointMap::from_fn(&self.bundle.total.e, &self.target.l, move |eu| {
            let e = eu.first(&src.e);
            let u = eu.second(&fg);
            let de = src.bdry.apply(&e);
            // Y(e,[∂e]) = (ψ₁(e), ŝ(∂e), t̂(e)) in E′ ⋉ (E′ ⋉ L′).
            let mut acc = carriers.pk1(&psi1.apply(&e), &lh2.s_hat(&de), &lh2.t_hat(&e));
            // (e,u) = (e,[∂e]) · (1, w) with w = [∂e]⁻¹u ∈ ker(p).
            let w = bundle.bracket(&de).inv().mul(&u);
            for (conj, (g, h), sign) in bundle.kernel_decompose(&w) {
                // Y(conj ▷ (g,h)) = (φ′(conj), s(conj)) • Y(g,h), with
                // Y(g,h) = (1, s([g,h]), Π(g,h)).
                let x = carriers.pk0(&phi_q.apply(&conj), &s2.eval(&conj));
                let pi = lh2.pi(&g, &h);
                let y = carriers.pk1(&a2.e.id(), &s2.eval(&bundle.bracket2(&g, &h)), &pi);
                let y = if sign < 0 { y.inv() } else { y };
                acc = acc.mul(&bullet.act(&x, &y));
            }
            let (_, _, tval) = carriers.un1(&acc);
            tval
        });
        Ok(Homotopy::new(&strict_base, s, t))
    }

    /// Reads a lax homotopy off a strict homotopy on the resolution:
    /// `ŝ(g) = s([g])`, `t̂(e) = t(e,[∂e])`, `Π(g,h) = t(1,[g,h])`. Errors
    /// with [`LaxError::NotStrict`] when the base of the homotopy does not
    /// factor through the projection.
    pub fn lax_from_strict(&self, h: &Homotopy, cfg: &ProbeConfig) -> Result<LaxHomotopy> {
        if h.base.source != self.bundle.total || h.base.target != self.target {
            return Err(LaxError::EndpointMismatch(format!(
                "homotopy is {} -> {}, strictifier resolves {}",
                h.base.source.name, h.base.target.name, self.bundle.base.name
            )));
        }
        let b = &self.bundle;
        let a = &b.base;
        // The base must kill the kernel at both levels.
        for g in a.g.probe(cfg) {
            for h2 in a.g.probe(cfg) {
                if !h.base.phi.apply(&b.bracket2(&g, &h2)).is_identity() {
                    return Err(LaxError::NotStrict(format!(
                        "φ([{},{}]) ≠ 1",
                        a.g.describe_element(&g),
                        a.g.describe_element(&h2)
                    )));
                }
                if !h.base.psi.apply(&b.gen_pair(&g, &h2)).is_identity() {
                    return Err(LaxError::NotStrict(format!(
                        "ψ(1,[{},{}]) ≠ 1",
                        a.g.describe_element(&g),
                        a.g.describe_element(&h2)
                    )));
                }
            }
        }
        // Descend the base to a morphism A → A′ along the section.
        let (hb, b2) = (h.base.clone(), b.clone());
        let phi1 = group_kernel::Hom::from_fn(&a.g, &self.target.g, move |g| {
            hb.phi.apply(&b2.bracket(g))
        });
        let (hb, b2) = (h.base.clone(), b.clone());
        let psi1 = group_kernel::Hom::from_fn(&a.e, &self.target.e, move |e| {
            hb.psi.apply(&b2.gen_e(e))
        });
        let f1 = XModMorphism::new(a, &self.target, h.base.mu.clone(), psi1, phi1);
        if !morphisms_agree(&self.strictify(&f1), &h.base, cfg) {
            return Err(LaxError::NotStrict(
                "base does not factor through the projection on probes".into(),
            ));
        }
        LaxHomotopy::from_fn(
            &f1,
            |g| h.s().eval(&b.bracket(g)),
            |e| h.t().eval(&b.gen_e(e)),
            |g, h2| h.t().eval(&b.gen_pair(g, h2)),
        )
    }
}

/// One-shot strictification of a morphism: `f ∘ proj` on a freshly built
/// resolution of its source.
pub fn strictify(f: &XModMorphism) -> Result<XModMorphism> {
    Ok(q1(&f.source)?.proj.compose_with(f))
}

/// One-shot version of [`Strictifier::strict_homotopy`].
pub fn lax_to_strict(lh: &LaxHomotopy) -> Result<Homotopy> {
    Strictifier::new(&lh.base.source, &lh.base.target)?.strict_homotopy(lh)
}

/// One-shot version of [`Strictifier::lax_from_strict`]; the resolved module
/// must be supplied since it is not recoverable from the homotopy.
pub fn strict_to_lax(a: &TwoCrossedModule, h: &Homotopy, cfg: &ProbeConfig) -> Result<LaxHomotopy> {
    Strictifier::new(a, &h.base.target)?.lax_from_strict(h, cfg)
}

trait ComposeWith {
    fn compose_with(&self, f: &XModMorphism) -> XModMorphism;
}

impl ComposeWith for XModMorphism {
    /// `f ∘ self` (apply `self` first).
    fn compose_with(&self, f: &XModMorphism) -> XModMorphism {
        f.compose(self)
    }
}

// ---------------------------------------------------------------------------
// Validation
// ---------------------------------------------------------------------------

/// Checks the five defining equations of a lax homotopy only (no strict
/// cross-check); used as the fast filter in exhaustive searches.
pub fn lax_equations(lh: &LaxHomotopy, cfg: &ProbeConfig) -> VerificationReport {
    let a = &lh.base.source;
    let a2 = &lh.base.target;
    let mut report = VerificationReport::new(
        format!("lax homotopy equations out of {} -> {}", a.name, a2.name),
        cfg.describe(),
    );
    let gp = a.g.probe(cfg);
    let ep = a.e.probe(cfg);
    let one = a.g.id();

    let phi = |g: &Element| lh.base.phi.apply(g);
    let psi = |x: &Element| lh.base.psi.apply(x);
    let bd = |x: &Element| a.bdry.apply(x);
    let bd2 = |x: &Element| a2.bdry.apply(x);
    let de2 = |l: &Element| a2.delta.apply(l);
    let acte = |g: &Element, e: &Element| a2.act_e.act(g, e);
    let actl = |g: &Element, l: &Element| a2.act_l.act(g, l);
    let sec = |e: &Element, l: &Element| a2.secondary_action(e, l);
    let lift = |x: &Element, y: &Element| a2.lift.lift(x, y);
    let sv = |g: &Element| lh.s_hat(g);
    let tv = |x: &Element| lh.t_hat(x);
    let pv = |g: &Element, h: &Element| lh.pi(g, h);

    report.law("∂(ŝ(gh)) = ∂(φ(h)^-1 |> ŝ(g) · ŝ(h))", cfg.pairs(&gp), |(g, h)| {
        let lhs = bd2(&sv(&g.mul(h)));
        let rhs = bd2(&acte(&phi(h).inv(), &sv(g)).mul(&sv(h)));
        (lhs != rhs)
            .then(|| format!("g = {}, h = {}", a.g.describe_element(g), a.g.describe_element(h)))
    });

    report.law("ŝ(gh) = φ(h)^-1 |> ŝ(g) · ŝ(h) · δ(Π(g,h))", cfg.pairs(&gp), |(g, h)| {
        let lhs = sv(&g.mul(h));
        let rhs = acte(&phi(h).inv(), &sv(g)).mul(&sv(h)).mul(&de2(&pv(g, h)));
        (lhs != rhs)
            .then(|| format!("g = {}, h = {}", a.g.describe_element(g), a.g.describe_element(h)))
    });

    report.law("Π(∂a,∂b) · t̂(ab) twisted-derivation", cfg.pairs(&ep), |(x, y)| {
        let lhs = pv(&bd(x), &bd(y)).mul(&tv(&x.mul(y)));
        let brace = lift(&psi(y).inv(), &sv(&bd(x)).inv()).inv();
        let rhs = sec(&sv(&bd(y)).inv(), &brace.mul(&sec(&psi(y).inv(), &tv(x)))).mul(&tv(y));
        (lhs != rhs)
            .then(|| format!("a = {}, b = {}", a.e.describe_element(x), a.e.describe_element(y)))
    });

    report.law("t̂(g |> a) equivariance with Π corrections", cfg.pairs2(&gp, &ep), |(g, x)| {
        let term1 = actl(
            &phi(g),
            &sec(&sv(g).mul(&sv(&bd(x)).inv()), &lift(&psi(x).inv(), &sv(g).inv()).inv()),
        );
        let term2 = actl(&phi(g), &lift(&sv(g), &sv(&bd(x)).inv().mul(&psi(x).inv())));
        let term3 = actl(&phi(g).mul(&bd2(&sv(g))), &tv(x));
        let lhs = term1.mul(&term2).mul(&term3);
        let dx = bd(x);
        let rhs = pv(&one, &one)
            .inv()
            .mul(&pv(g, &g.inv()).inv())
            .mul(&pv(&dx, &g.inv()))
            .mul(&pv(g, &dx.mul(&g.inv())))
            .mul(&tv(&a.act_e.act(g, x)));
        (lhs != rhs)
            .then(|| format!("g = {}, a = {}", a.g.describe_element(g), a.e.describe_element(x)))
    });

    report.law("ŝ(i) |>' (φ(i)^-1 |> Π(g,h)) · Π(gh,i) = Π(h,i) · Π(g,hi)", cfg.triples(&gp), |(g, h, i)| {
        let lhs = sec(&sv(i), &actl(&phi(i).inv(), &pv(g, h))).mul(&pv(&g.mul(h), i));
        let rhs = pv(h, i).mul(&pv(g, &h.mul(i)));
        (lhs != rhs).then(|| {
            format!(
                "g = {}, h = {}, i = {}",
                a.g.describe_element(g),
                a.g.describe_element(h),
                a.g.describe_element(i)
            )
        })
    });

    report
}

/// The full law suite: the five equations, the induced target morphism, the
/// strict-side oracle on the resolution, and the dual-path comparison of the
/// bottom-level target formula (both values are reported on disagreement).
pub fn lax_validate(lh: &LaxHomotopy, cfg: &ProbeConfig) -> VerificationReport {
    let mut report = lax_equations(lh, cfg);
    let target = lax_target(lh);
    report.absorb("induced target morphism", xmod_map_verify(&target, cfg));

    let strict = Strictifier::new(&lh.base.source, &lh.base.target)
        .and_then(|ctx| ctx.strict_homotopy(lh).map(|h| (ctx, h)));
    match strict {
        Ok((ctx, h)) => {
            report.absorb(
                "strict-side oracle on the resolution",
                is_quadratic_derivation(&h.base, h.s(), h.t(), cfg),
            );
            // Dual-path target comparison (the bottom level carries the
            // Π(1,1)-correction; the two computations must agree).
            let a = &lh.base.source;
            report.law("bottom-level target agrees with the strict side", a.l.probe(cfg), |l| {
                let lax_v = target.mu.apply(l);
                let strict_v = h.target.mu.apply(l);
                (lax_v != strict_v).then(|| {
                    format!(
                        "l = {}: lax path gives {}, strict path gives {}",
                        a.l.describe_element(l),
                        lh.base.target.l.describe_element(&lax_v),
                        lh.base.target.l.describe_element(&strict_v)
                    )
                })
            });
            report.law("middle-level target agrees with the strict side", a.e.probe(cfg), |e| {
                let lax_v = target.psi.apply(e);
                let strict_v = h.target.psi.apply(&ctx.bundle.gen_e(e));
                (lax_v != strict_v).then(|| format!("e = {}", a.e.describe_element(e)))
            });
            report.law("base-level target agrees with the strict side", a.g.probe(cfg), |g| {
                let lax_v = target.phi.apply(g);
                let strict_v = h.target.phi.apply(&ctx.bundle.bracket(g));
                (lax_v != strict_v).then(|| format!("g = {}", a.g.describe_element(g)))
            });
        }
        Err(e) => report.law_outcome("strict-side oracle on the resolution", Some(e.to_string())),
    }
    report
}
