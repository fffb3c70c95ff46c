//! The correction term `ω` of two consecutive homotopies, its closed form
//! `Θ` on triples, and the composition law for three consecutive homotopies.
//!
//! Given homotopies `(s, t) : f → f′` and `(s′, t′) : f′ → f″` over a free
//! base `F`, the assignment
//!
//! ```text
//! X(b) = (φ(b), s(b), 1, s′(b), 1)
//! ```
//!
//! on basis elements extends to a unique homomorphism `F → Gr₀(P(P(A′)))`
//! into level 0 of the double path space, and `ω(g)` is the last coordinate
//! of `X(g)`. That homomorphic extension is the *authoritative* computation.
//! It is cross-checked against an independent recursion,
//!
//! ```text
//! ω(1) = 1,   ω(b) = 1,   ω(b⁻¹) = φ(b) ▷ {s(b), s′(b)},
//! ω(gh) = ω(h) · s′(h)⁻¹ ▷′ ( φ(h)⁻¹ ▷ {φ(h) ▷ s(h)⁻¹, δ(ω(g)) s′(g)⁻¹}
//!                             · φ′(h)⁻¹ ▷ ω(g) )
//! ```
//!
//! on every probe word; disagreement is a hard error, never a warning.

use group_kernel::{Element, Group, Hom, ProbeConfig, Word};
use path_spaces::PathCarriers;
use xmod_core::{TwoCrossedModule, VerificationReport};

use crate::ctx::context_for;
use crate::derivation::DerivationMap;
use crate::error::{HomotopyError, Result};
use crate::util::probe_words;

/// The correction term of a consecutive pair of derivations, evaluable at
/// any element of the free base.
#[derive(Clone)]
pub struct OmegaData {
    /// First derivation `s : F → E′` (along `φ`).
    pub s: DerivationMap,
    /// Second derivation `s′ : F → E′` (along `φ′ = φ·(∂∘s)`).
    pub s2: DerivationMap,
    ext: Hom,
    inner: PathCarriers,
    outer: PathCarriers,
}

/// Checks the compatibility required of consecutive derivations: same free
/// domain and `φ` of the second equal to `φ·(∂∘s)` of the first on the
/// basis.
fn check_consecutive(s: &DerivationMap, s2: &DerivationMap) -> Result<()> {
    let f = s.phi().domain();
    if s2.phi().domain() != f {
        return Err(HomotopyError::EndpointMismatch(format!(
            "derivations live over different bases `{}` and `{}`",
            f.name(),
            s2.phi().domain().name()
        )));
    }
    if s.target() != s2.target() {
        return Err(HomotopyError::EndpointMismatch(format!(
            "derivations land in different modules {} and {}",
            s.target().name,
            s2.target().name
        )));
    }
    if !(s.is_basis() && s2.is_basis()) {
        return Err(HomotopyError::SourceNotFree(f.name().to_string()));
    }
    let shifted = s.phi_shifted();
    for i in 0..f.free_basis().len() {
        let b = f.generator(i);
        if s2.phi().apply(&b) != shifted.apply(&b) {
            return Err(HomotopyError::EndpointMismatch(format!(
                "second derivation is not based at the target of the first (basis element {})",
                f.describe_element(&b)
            )));
        }
    }
    Ok(())
}

/// Concatenation of consecutive derivations: basis images `s(b)·s′(b)`,
/// extended along the `φ` of the first.
pub fn concat_derivations(s: &DerivationMap, s2: &DerivationMap) -> Result<DerivationMap> {
    check_consecutive(s, s2)?;
    let images = s
        .basis_images()
        .unwrap()
        .iter()
        .zip(s2.basis_images().unwrap())
        .map(|(a, b)| a.mul(b))
        .collect();
    DerivationMap::extend(s.phi(), s.target(), images)
}

impl OmegaData {
    /// The target module of both derivations.
    fn a2(&self) -> &TwoCrossedModule {
        &self.inner.base
    }

    /// Evaluates `ω(g)` through the homomorphic extension (authoritative).
    pub fn eval(&self, g: &Element) -> Element {
        let v = self.ext.apply(g);
        let (_, level1) = self.outer.un0(&v);
        let (_, _, w) = self.inner.un1(&level1);
        w
    }

    /// The fourth coordinate `ζ(g)` of the extension, which the closed form
    /// predicts to be `s′(g)·δ(ω(g))⁻¹`.
    pub fn zeta(&self, g: &Element) -> Element {
        let v = self.ext.apply(g);
        let (_, level1) = self.outer.un0(&v);
        let (_, z, _) = self.inner.un1(&level1);
        z
    }

    /// Evaluates `ω(g)` by the independent recursion over the letters of the
    /// word.
    pub fn eval_recursive(&self, g: &Element) -> Element {
        let f = self.s.phi().domain().clone();
        let a2 = self.a2().clone();
        let word = match g.payload() {
            group_kernel::Payload::Word(w) => w.clone(),
            other => panic!("free-group element expected, got {other:?}"),
        };
        let phi = |x: &Element| self.s.phi().apply(x);
        let phi_shift = self.s.phi_shifted();
        let sv = |x: &Element| self.s.eval(x);
        let s2v = |x: &Element| self.s2.eval(x);

        let mut acc = f.id();
        let mut om = a2.l.id();
        for letter in word.letters() {
            let sign: i8 = if letter.exp >= 0 { 1 } else { -1 };
            for _ in 0..letter.exp.unsigned_abs() {
                let h = f.word(Word::letter(letter.sym, sign));
                let om_h = if sign > 0 {
                    a2.l.id()
                } else {
                    let b = h.inv();
                    a2.act_l.act(&phi(&b), &a2.lift.lift(&sv(&b), &s2v(&b)))
                };
                let brace = a2.lift.lift(
                    &a2.act_e.act(&phi(&h), &sv(&h).inv()),
                    &a2.delta.apply(&om).mul(&s2v(&acc).inv()),
                );
                let inside = a2
                    .act_l
                    .act(&phi(&h).inv(), &brace)
                    .mul(&a2.act_l.act(&phi_shift.apply(&h).inv(), &om));
                om = om_h.mul(&a2.secondary_action(&s2v(&h).inv(), &inside));
                acc = acc.mul(&h);
            }
        }
        om
    }
}

/// Builds the correction term of a consecutive pair, cross-checking the
/// homomorphic extension against the recursion on every probe word. A
/// disagreement aborts with [`HomotopyError::DualComputationMismatch`].
pub fn omega(s: &DerivationMap, s2: &DerivationMap, cfg: &ProbeConfig) -> Result<OmegaData> {
    check_consecutive(s, s2)?;
    let a2 = s.target();
    let ctx = context_for(a2)?;
    let f = s.phi().domain().clone();
    let n = f.free_basis().len();
    let images: Vec<Element> = (0..n)
        .map(|i| {
            let b = f.generator(i);
            let level0 = ctx.p.carriers.pk0(&s.phi().apply(&b), &s.basis_images().unwrap()[i].clone());
            let level1 = ctx.p.carriers.pk1(&a2.e.id(), &s2.basis_images().unwrap()[i].clone(), &a2.l.id());
            ctx.pp.carriers.pk0(&level0, &level1)
        })
        .collect();
    let ext = Hom::extend_free(&f, &ctx.pp.total.g, images);
    let data = OmegaData {
        s: s.clone(),
        s2: s2.clone(),
        ext,
        inner: ctx.p.carriers.clone(),
        outer: ctx.pp.carriers.clone(),
    };
    for g in probe_words(&f, cfg)? {
        let hom_val = data.eval(&g);
        let rec_val = data.eval_recursive(&g);
        if hom_val != rec_val {
            return Err(HomotopyError::DualComputationMismatch(format!(
                "omega at {}: extension gives {}, recursion gives {}",
                f.describe_element(&g),
                a2.l.describe_element(&hom_val),
                a2.l.describe_element(&rec_val)
            )));
        }
    }
    Ok(data)
}

/// The closed form `Θ(b, b′, b″)` equal to `ω(b⁻¹ b′ b″)` on basis
/// elements.
pub fn theta(s: &DerivationMap, s2: &DerivationMap, b: &Element, bp: &Element, bpp: &Element) -> Element {
    let a2 = s.target();
    let phi = |x: &Element| s.phi().apply(x);
    let phi2 = s.phi_shifted();
    let sv = |x: &Element| s.eval(x);
    let s2v = |x: &Element| s2.eval(x);
    let acte = |g: &Element, e: &Element| a2.act_e.act(g, e);
    let actl = |g: &Element, l: &Element| a2.act_l.act(g, l);
    let sec = |e: &Element, l: &Element| a2.secondary_action(e, l);
    let lift = |x: &Element, y: &Element| a2.lift.lift(x, y);

    let first = sec(
        &s2v(bpp).inv(),
        &lift(&sv(bpp).inv(), &acte(&phi(bpp).inv(), &s2v(bp).inv())),
    );
    let prefix = acte(&phi2.apply(bpp).inv(), &s2v(bp)).mul(&s2v(bpp));
    let bpbpp = bp.mul(bpp);
    let x = lift(
        &acte(&phi(bpp).inv(), &sv(bp)).mul(&sv(bpp)).inv(),
        &acte(
            &phi(&bpbpp).inv().mul(&phi(b)),
            &sv(b).mul(&s2v(b)).mul(&sv(b).inv()),
        ),
    );
    let y = actl(&phi2.apply(&bpbpp).inv().mul(&phi(b)), &lift(&sv(b), &s2v(b)));
    first.mul(&sec(&prefix.inv(), &x.mul(&y)))
}

/// Checks the composition law of correction terms for three consecutive
/// derivations over the probe words:
///
/// ```text
/// ω^(s, s′⊗s″)(g) = ω^(s⊗s′, s″)(g) · (s″(g)⁻¹ ▷′ ω^(s,s′)(g)) · ω^(s′,s″)(g)⁻¹
/// ```
pub fn omega_composition_report(
    s: &DerivationMap,
    s2: &DerivationMap,
    s3: &DerivationMap,
    cfg: &ProbeConfig,
) -> Result<VerificationReport> {
    let a2 = s.target().clone();
    let s12 = concat_derivations(s, s2)?;
    let s23 = concat_derivations(s2, s3)?;
    let om_s_s23 = omega(s, &s23, cfg)?;
    let om_s12_s3 = omega(&s12, s3, cfg)?;
    let om_s_s2 = omega(s, s2, cfg)?;
    let om_s2_s3 = omega(s2, s3, cfg)?;

    let mut report = VerificationReport::new(
        format!("omega composition law into {}", a2.name),
        cfg.describe(),
    );
    let f = s.phi().domain().clone();
    report.law("omega of a double concatenation", probe_words(&f, cfg)?, |g| {
        let lhs = om_s_s23.eval(g);
        let rhs = om_s12_s3
            .eval(g)
            .mul(&a2.secondary_action(&s3.eval(g).inv(), &om_s_s2.eval(g)))
            .mul(&om_s2_s3.eval(g).inv());
        (lhs != rhs).then(|| format!("g = {}", f.describe_element(g)))
    });
    Ok(report)
}

/// Exposes the free base group of an omega datum (convenience for callers).
pub fn omega_base(data: &OmegaData) -> Group {
    data.s.phi().domain().clone()
}
