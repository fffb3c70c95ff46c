//! Lax homotopy equivalences: witnessed checks, bounded deterministic
//! searches, and composition of witnessed equivalences.
//!
//! A morphism `f : A → A′` is a lax homotopy equivalence when some
//! `g : A′ → A` admits lax homotopies `id_A → g∘f` and `id_{A′} → f∘g`.
//! Searches here are exhaustive within declared finite bounds; a miss is
//! always reported as "not found within bounds", never as nonexistence.

use group_kernel::{Element, Group, ProbeConfig};
use homotopy_2groupoid::morphisms_agree;
use itertools::Itertools;
use xmod_core::{xmod_map_verify, TwoCrossedModule, VerificationReport, XModMorphism};

use crate::error::{LaxError, Result};
use crate::laxhom::{lax_equations, lax_target, lax_validate, LaxHomotopy};
use crate::ops::{lax_compose_strict, lax_concat, Side};

/// Caps for the deterministic searches.
#[derive(Clone, Copy, Debug)]
pub struct SearchBounds {
    /// Maximum number of candidate morphisms `A′ → A` to try.
    pub max_morphisms: usize,
    /// Maximum number of raw `(ŝ, t̂, Π)` (or level-map) tables examined
    /// per enumeration.
    pub max_tuples: usize,
}

impl Default for SearchBounds {
    fn default() -> SearchBounds {
        SearchBounds { max_morphisms: 256, max_tuples: 200_000 }
    }
}

/// A witnessed lax homotopy equivalence.
#[derive(Clone)]
pub struct LaxEquivalence {
    /// The equivalence `f : A → A′`.
    pub fwd: XModMorphism,
    /// The homotopy inverse `g : A′ → A`.
    pub inv: XModMorphism,
    /// A lax homotopy `id_A → g∘f`.
    pub lh_src: LaxHomotopy,
    /// A lax homotopy `id_{A′} → f∘g`.
    pub lh_tgt: LaxHomotopy,
}

impl LaxEquivalence {
    /// The trivial witness for an identity (or any morphism with a strict
    /// two-sided inverse `g` with `g∘f = id` and `f∘g = id`).
    pub fn trivial(fwd: &XModMorphism, inv: &XModMorphism) -> Result<LaxEquivalence> {
        Ok(LaxEquivalence {
            fwd: fwd.clone(),
            inv: inv.clone(),
            lh_src: LaxHomotopy::trivial(&XModMorphism::identity(&fwd.source))?,
            lh_tgt: LaxHomotopy::trivial(&XModMorphism::identity(&fwd.target))?,
        })
    }
}

/// Law suite for a witnessed equivalence: both morphisms verify, both lax
/// homotopies validate, the bases are the identities, and the targets are
/// the two composites.
pub fn check_equivalence(w: &LaxEquivalence, cfg: &ProbeConfig) -> VerificationReport {
    let mut report = VerificationReport::new(
        format!("lax homotopy equivalence {} -> {}", w.fwd.source.name, w.fwd.target.name),
        cfg.describe(),
    );
    report.absorb("forward morphism", xmod_map_verify(&w.fwd, cfg));
    report.absorb("inverse morphism", xmod_map_verify(&w.inv, cfg));
    report.law_outcome(
        "source witness starts at the identity",
        (!morphisms_agree(&w.lh_src.base, &XModMorphism::identity(&w.fwd.source), cfg))
            .then(|| "base of lh_src is not id".into()),
    );
    report.law_outcome(
        "target witness starts at the identity",
        (!morphisms_agree(&w.lh_tgt.base, &XModMorphism::identity(&w.fwd.target), cfg))
            .then(|| "base of lh_tgt is not id".into()),
    );
    report.law_outcome(
        "source witness ends at g∘f",
        (!morphisms_agree(&lax_target(&w.lh_src), &w.inv.compose(&w.fwd), cfg))
            .then(|| "target of lh_src is not g∘f".into()),
    );
    report.law_outcome(
        "target witness ends at f∘g",
        (!morphisms_agree(&lax_target(&w.lh_tgt), &w.fwd.compose(&w.inv), cfg))
            .then(|| "target of lh_tgt is not f∘g".into()),
    );
    report.absorb("source witness laws", lax_validate(&w.lh_src, cfg));
    report.absorb("target witness laws", lax_validate(&w.lh_tgt, cfg));
    report
}

/// Checks whether `f` is a lax homotopy equivalence. With a witness, runs
/// [`check_equivalence`]. Without one, searches for an inverse and the two
/// lax homotopies within `bounds`; a failed search is reported as
/// "not found within bounds" (bounded search cannot certify nonexistence).
pub fn is_lax_equivalence(
    f: &XModMorphism,
    witness: Option<&LaxEquivalence>,
    bounds: &SearchBounds,
    cfg: &ProbeConfig,
) -> VerificationReport {
    if let Some(w) = witness {
        return check_equivalence(w, cfg);
    }
    let mut report = VerificationReport::new(
        format!("lax homotopy equivalence search {} -> {}", f.source.name, f.target.name),
        format!("{}; bounds: {} morphisms, {} tables", cfg.describe(), bounds.max_morphisms, bounds.max_tuples),
    );
    report.absorb("forward morphism", xmod_map_verify(f, cfg));
    match search_equivalence(f, bounds, cfg) {
        Ok(Some(w)) => {
            report.law_outcome("homotopy inverse found within bounds", None);
            report.absorb("witness", check_equivalence(&w, cfg));
        }
        Ok(None) => report.law_outcome(
            "homotopy inverse found within bounds",
            Some("not found within bounds".into()),
        ),
        Err(e) => report.law_outcome("homotopy inverse found within bounds", Some(e.to_string())),
    }
    report
}

/// The bounded deterministic search behind [`is_lax_equivalence`].
pub fn search_equivalence(
    f: &XModMorphism,
    bounds: &SearchBounds,
    cfg: &ProbeConfig,
) -> Result<Option<LaxEquivalence>> {
    let id_src = XModMorphism::identity(&f.source);
    let id_tgt = XModMorphism::identity(&f.target);
    for g in enumerate_morphisms(&f.target, &f.source, bounds, cfg)? {
        let gf = g.compose(f);
        let fg = f.compose(&g);
        let Some(lh_src) = find_lax_homotopy(&id_src, &gf, bounds, cfg)? else { continue };
        let Some(lh_tgt) = find_lax_homotopy(&id_tgt, &fg, bounds, cfg)? else { continue };
        return Ok(Some(LaxEquivalence { fwd: f.clone(), inv: g, lh_src, lh_tgt }));
    }
    Ok(None)
}

/// Searches for a lax homotopy with base `from` and target `to` within the
/// bounds, in deterministic table order.
pub fn find_lax_homotopy(
    from: &XModMorphism,
    to: &XModMorphism,
    bounds: &SearchBounds,
    cfg: &ProbeConfig,
) -> Result<Option<LaxHomotopy>> {
    let a = &from.source;
    let a2 = &from.target;
    let gs = elements_of(&a.g)?;
    let es = elements_of(&a.e)?;
    let e2 = elements_of(&a2.e)?;
    let l2 = elements_of(&a2.l)?;
    let n = gs.len();

    let mut examined = 0usize;
    let dims: Vec<&[Element]> = std::iter::repeat(&e2[..])
        .take(n)
        .chain(std::iter::repeat(&l2[..]).take(es.len()))
        .chain(std::iter::repeat(&l2[..]).take(n * n))
        .collect();
    for table in dims.iter().map(|d| d.iter().cloned()).multi_cartesian_product() {
        examined += 1;
        if examined > bounds.max_tuples {
            return Ok(None);
        }
        let s_hat = table[..n].to_vec();
        let t_hat = table[n..n + es.len()].to_vec();
        let pi = table[n + es.len()..].to_vec();
        let lh = LaxHomotopy::new(from, s_hat, t_hat, pi)?;
        if !lax_equations(&lh, cfg).passed() {
            continue;
        }
        if morphisms_agree(&lax_target(&lh), to, cfg) {
            return Ok(Some(lh));
        }
    }
    Ok(None)
}

/// Enumerates verified morphisms `A → A′` by level-wise function tables
/// (identity fixed to identity), in deterministic order, within the bounds.
pub fn enumerate_morphisms(
    a: &TwoCrossedModule,
    a2: &TwoCrossedModule,
    bounds: &SearchBounds,
    cfg: &ProbeConfig,
) -> Result<Vec<XModMorphism>> {
    let found_l = enumerate_homs(&a.l, &a2.l, bounds)?;
    let found_e = enumerate_homs(&a.e, &a2.e, bounds)?;
    let found_g = enumerate_homs(&a.g, &a2.g, bounds)?;
    let mut out = Vec::new();
    for mu in &found_l {
        for psi in &found_e {
            for phi in &found_g {
                if out.len() >= bounds.max_morphisms {
                    return Ok(out);
                }
                let cand = XModMorphism::new(a, a2, mu.clone(), psi.clone(), phi.clone());
                if xmod_map_verify(&cand, cfg).passed() {
                    out.push(cand);
                }
            }
        }
    }
    Ok(out)
}

/// All homomorphisms between two finite groups, by table enumeration.
fn enumerate_homs(
    src: &Group,
    tgt: &Group,
    bounds: &SearchBounds,
) -> Result<Vec<group_kernel::Hom>> {
    let xs = elements_of(src)?;
    let ys = elements_of(tgt)?;
    let non_id: Vec<&Element> = xs.iter().filter(|x| !x.is_identity()).collect();
    let mut out = Vec::new();
    let mut examined = 0usize;
    for images in std::iter::repeat(&ys[..])
        .take(non_id.len())
        .map(|d| d.iter().cloned())
        .multi_cartesian_product()
        .chain(non_id.is_empty().then(Vec::new))
    {
        examined += 1;
        if examined > bounds.max_tuples {
            break;
        }
        let mut entries: Vec<(Element, Element)> = vec![(src.id(), tgt.id())];
        entries.extend(non_id.iter().map(|x| (*x).clone()).zip(images.iter().cloned()));
        let h = group_kernel::Hom::from_table(src, tgt, &entries)?;
        let ok = xs
            .iter()
            .all(|x| xs.iter().all(|y| h.apply(&x.mul(y)) == h.apply(x).mul(&h.apply(y))));
        if ok {
            out.push(h);
        }
    }
    Ok(out)
}

fn elements_of(g: &Group) -> Result<Vec<Element>> {
    g.elements().map_err(|_| LaxError::NotEnumerable(g.name().to_string()))
}

/// Composes two witnessed equivalences `f : A → A′`, `f′ : A′ → A″` into a
/// witness for `f′∘f` with inverse `g∘g′`: the source witness is
/// `lh_src(f) ⊗̂ (g ∘ lh_src(f′) ∘ f)` and the target witness is
/// `lh_tgt(f′) ⊗̂ (f′ ∘ lh_tgt(f) ∘ g′)`.
pub fn compose_equivalences(
    w1: &LaxEquivalence,
    w2: &LaxEquivalence,
    cfg: &ProbeConfig,
) -> Result<LaxEquivalence> {
    if w1.fwd.target != w2.fwd.source {
        return Err(LaxError::EndpointMismatch(format!(
            "equivalences do not compose: {} -> {} then {} -> {}",
            w1.fwd.source.name, w1.fwd.target.name, w2.fwd.source.name, w2.fwd.target.name
        )));
    }
    let fwd = w2.fwd.compose(&w1.fwd);
    let inv = w1.inv.compose(&w2.inv);

    // id_A → g∘f → g∘(g′∘f′)∘f: whisker w2's source witness by g on the
    // left and f on the right, then concatenate.
    let mid_src = lax_compose_strict(
        &w1.inv,
        &lax_compose_strict(&w1.fwd, &w2.lh_src, Side::Right)?,
        Side::Left,
    )?;
    let lh_src = lax_concat(&w1.lh_src, &mid_src, cfg)?;

    // id_{A″} → f′∘g′ → f′∘(f∘g)∘g′ symmetrically.
    let mid_tgt = lax_compose_strict(
        &w2.fwd,
        &lax_compose_strict(&w2.inv, &w1.lh_tgt, Side::Right)?,
        Side::Left,
    )?;
    let lh_tgt = lax_concat(&w2.lh_tgt, &mid_tgt, cfg)?;

    Ok(LaxEquivalence { fwd, inv, lh_src, lh_tgt })
}
