//! Law suites: pre-crossed / crossed module checks, the six 2-crossed module
//! axioms, derived-identity suites for the secondary action, and morphism
//! verification. Every suite quantifies over probe sets and returns a
//! [`VerificationReport`] with rendered witnesses for any failure.

use group_kernel::{Element, ProbeConfig};

use crate::report::VerificationReport;
use crate::types::{PreCrossedModule, TwoCrossedModule, XModMorphism};

fn show(e: &Element) -> String {
    e.group().describe_element(e)
}

fn mismatch(law: &str, inputs: &[&Element], lhs: &Element, rhs: &Element) -> Option<String> {
    if lhs == rhs {
        None
    } else {
        let ins = inputs.iter().map(|e| show(e)).collect::<Vec<_>>().join(", ");
        Some(format!("{law} at ({ins}): {} != {}", show(lhs), show(rhs)))
    }
}

/// Checks that `∂: E → G` with the action `▷` is a pre-crossed module:
/// `∂` is a homomorphism, `▷` is an action by automorphisms, and the first
/// Peiffer relation `∂(g ▷ e) = g ∂(e) g⁻¹` holds on the probe set.
pub fn verify_precrossed(m: &PreCrossedModule, cfg: &ProbeConfig) -> VerificationReport {
    let mut rep = VerificationReport::new(format!("precrossed {}", m.name), cfg.describe());
    rep.law_outcome("bdry-hom", m.bdry.check(cfg).err().map(|e| e.to_string()));
    rep.law_outcome("action-laws", m.act.check_laws(cfg).err().map(|e| e.to_string()));
    let es = m.e.probe(cfg);
    let gs = m.g.probe(cfg);
    rep.law("first-peiffer", cfg.pairs2(&gs, &es), |(g, e)| {
        let lhs = m.bdry.apply(&m.act.act(g, e));
        let rhs = g.conj(&m.bdry.apply(e));
        mismatch("∂(g▷e) = g∂(e)g⁻¹", &[g, e], &lhs, &rhs)
    });
    rep
}

/// Checks that a pre-crossed module is a crossed module: additionally the
/// second Peiffer relation `∂(e) ▷ f = e f e⁻¹` holds.
pub fn verify_crossed(m: &PreCrossedModule, cfg: &ProbeConfig) -> VerificationReport {
    let mut rep = verify_precrossed(m, cfg);
    rep.subject = format!("crossed {}", m.name);
    let es = m.e.probe(cfg);
    rep.law("second-peiffer", cfg.pairs(&es), |(e, f)| {
        let lhs = m.act.act(&m.bdry.apply(e), f);
        let rhs = e.conj(f);
        mismatch("∂(e)▷f = efe⁻¹", &[e, f], &lhs, &rhs)
    });
    rep
}

/// Checks all defining laws of a 2-crossed module:
///
/// 1. `L → E → G` is a chain complex of `G`-groups: `∂δ = 1`, both actions
///    satisfy the action laws, `δ` is `G`-equivariant, and `∂` makes `E` a
///    pre-crossed module.
/// 2. `δ{e,f} = ⟨e,f⟩` (the lifting bounds the Peiffer commutator).
/// 3. `{δl, δk} = [l, k]`.
/// 4. `{δl, e}·{e, δl} = l·(∂(e) ▷ l⁻¹)`.
/// 5. `{ef, g} = {e, fgf⁻¹}·(∂(e) ▷ {f, g})`.
/// 6. `{e, fg} = {e, f}·((∂(e)▷f) ▷′ {e, g})`.
///
/// plus `G`-equivariance of the lifting, `{g▷e, g▷f} = g ▷ {e,f}`.
pub fn verify_two_crossed(xm: &TwoCrossedModule, cfg: &ProbeConfig) -> VerificationReport {
    let mut rep = VerificationReport::new(format!("2-crossed {}", xm.name), cfg.describe());
    rep.law_outcome("delta-hom", xm.delta.check(cfg).err().map(|e| e.to_string()));
    rep.law_outcome("bdry-hom", xm.bdry.check(cfg).err().map(|e| e.to_string()));
    rep.law_outcome("action-e-laws", xm.act_e.check_laws(cfg).err().map(|e| e.to_string()));
    rep.law_outcome("action-l-laws", xm.act_l.check_laws(cfg).err().map(|e| e.to_string()));

    let ls = xm.l.probe(cfg);
    let es = xm.e.probe(cfg);
    let gs = xm.g.probe(cfg);

    rep.law("complex", ls.iter(), |l| {
        let out = xm.bdry.apply(&xm.delta.apply(l));
        if out.is_identity() {
            None
        } else {
            Some(format!("∂δ({}) = {} != 1", show(l), show(&out)))
        }
    });
    rep.law("delta-equivariant", cfg.pairs2(&gs, &ls), |(g, l)| {
        let lhs = xm.delta.apply(&xm.act_l.act(g, l));
        let rhs = xm.act_e.act(g, &xm.delta.apply(l));
        mismatch("δ(g▷l) = g▷δ(l)", &[g, l], &lhs, &rhs)
    });
    rep.law("first-peiffer", cfg.pairs2(&gs, &es), |(g, e)| {
        let lhs = xm.bdry.apply(&xm.act_e.act(g, e));
        let rhs = g.conj(&xm.bdry.apply(e));
        mismatch("∂(g▷e) = g∂(e)g⁻¹", &[g, e], &lhs, &rhs)
    });
    rep.law("axiom-2", cfg.pairs(&es), |(e, f)| {
        let lhs = xm.delta.apply(&xm.lift.lift(e, f));
        let rhs = xm.peiffer_commutator(e, f);
        mismatch("δ{e,f} = ⟨e,f⟩", &[e, f], &lhs, &rhs)
    });
    rep.law("axiom-3", cfg.pairs(&ls), |(l, k)| {
        let lhs = xm.lift.lift(&xm.delta.apply(l), &xm.delta.apply(k));
        let rhs = l.commutator(k);
        mismatch("{δl,δk} = [l,k]", &[l, k], &lhs, &rhs)
    });
    rep.law("axiom-4", cfg.pairs2(&ls, &es), |(l, e)| {
        let dl = xm.delta.apply(l);
        let lhs = xm.lift.lift(&dl, e).mul(&xm.lift.lift(e, &dl));
        let rhs = l.mul(&xm.act_l.act(&xm.bdry.apply(e), &l.inv()));
        mismatch("{δl,e}{e,δl} = l(∂(e)▷l⁻¹)", &[l, e], &lhs, &rhs)
    });
    rep.law("axiom-5", cfg.triples(&es), |(e, f, g)| {
        let lhs = xm.lift.lift(&e.mul(f), g);
        let rhs = xm
            .lift
            .lift(e, &f.conj(g))
            .mul(&xm.act_l.act(&xm.bdry.apply(e), &xm.lift.lift(f, g)));
        mismatch("{ef,g} = {e,fgf⁻¹}·∂(e)▷{f,g}", &[e, f, g], &lhs, &rhs)
    });
    rep.law("axiom-6", cfg.triples(&es), |(e, f, g)| {
        let lhs = xm.lift.lift(e, &f.mul(g));
        let twisted = xm.secondary_action(&xm.act_e.act(&xm.bdry.apply(e), f), &xm.lift.lift(e, g));
        let rhs = xm.lift.lift(e, f).mul(&twisted);
        mismatch("{e,fg} = {e,f}·(∂(e)▷f)▷′{e,g}", &[e, f, g], &lhs, &rhs)
    });
    rep.law("lift-equivariant", cfg.triples3(&gs, &es, &es), |(g, e, f)| {
        let lhs = xm.lift.lift(&xm.act_e.act(g, e), &xm.act_e.act(g, f));
        let rhs = xm.act_l.act(g, &xm.lift.lift(e, f));
        mismatch("{g▷e,g▷f} = g▷{e,f}", &[g, e, f], &lhs, &rhs)
    });
    rep
}

/// Consequences of the axioms: identities for the secondary action `▷′` and
/// the lifting that every valid 2-crossed module must satisfy. These are
/// checked independently of [`verify_two_crossed`], so a bug in either the
/// lifting or the verification code shows up as a disagreement here.
pub fn rnn_suite(xm: &TwoCrossedModule, cfg: &ProbeConfig) -> VerificationReport {
    let mut rep = VerificationReport::new(format!("identities {}", xm.name), cfg.describe());
    let ls = xm.l.probe(cfg);
    let es = xm.e.probe(cfg);
    let gs = xm.g.probe(cfg);
    let bdry = |e: &Element| xm.bdry.apply(e);
    let delta = |l: &Element| xm.delta.apply(l);
    let lift = |x: &Element, y: &Element| xm.lift.lift(x, y);
    let acte = |g: &Element, e: &Element| xm.act_e.act(g, e);
    let actl = |g: &Element, l: &Element| xm.act_l.act(g, l);
    let sec = |e: &Element, l: &Element| xm.secondary_action(e, l);

    rep.law("unit", es.iter(), |e| {
        let one = xm.e.id();
        let a = lift(e, &one);
        let b = lift(&one, e);
        if a.is_identity() && b.is_identity() {
            None
        } else {
            Some(format!("{{e,1}} or {{1,e}} != 1 at e = {}", show(e)))
        }
    });
    rep.law("sec-equivariant", cfg.triples3(&gs, &es, &ls), |(a, e, k)| {
        let lhs = actl(a, &sec(e, k));
        let rhs = sec(&acte(a, e), &actl(a, k));
        mismatch("a▷(e▷′k) = (a▷e)▷′(a▷k)", &[a, e, k], &lhs, &rhs)
    });
    rep.law("product-left", cfg.triples(&es), |(e, f, g)| {
        let lhs = lift(&e.mul(f), g);
        let rhs = sec(e, &lift(f, g)).mul(&lift(e, &acte(&bdry(f), g)));
        mismatch("{ef,g} = (e▷′{f,g})·{e,∂(f)▷g}", &[e, f, g], &lhs, &rhs)
    });
    rep.law("product-right", cfg.triples(&es), |(e, f, g)| {
        let lhs = lift(e, &f.mul(g));
        let rhs = sec(&e.conj(f), &lift(e, g)).mul(&lift(e, f));
        mismatch("{e,fg} = ((efe⁻¹)▷′{e,g})·{e,f}", &[e, f, g], &lhs, &rhs)
    });
    rep.law("inverse-1", cfg.pairs(&es), |(e, f)| {
        let lhs = lift(e, f).inv();
        let rhs = actl(&bdry(e), &lift(&e.inv(), &e.conj(f)));
        mismatch("{e,f}⁻¹ = ∂(e)▷{e⁻¹,efe⁻¹}", &[e, f], &lhs, &rhs)
    });
    rep.law("inverse-2", cfg.pairs(&es), |(e, f)| {
        let lhs = lift(e, f).inv();
        let rhs = sec(&e.conj(f), &lift(e, &f.inv()));
        mismatch("{e,f}⁻¹ = (efe⁻¹)▷′{e,f⁻¹}", &[e, f], &lhs, &rhs)
    });
    rep.law("inverse-3", cfg.pairs(&es), |(e, f)| {
        let lhs = lift(e, f).inv();
        let rhs = sec(&acte(&bdry(e), f), &lift(e, &f.inv()));
        mismatch("{e,f}⁻¹ = (∂(e)▷f)▷′{e,f⁻¹}", &[e, f], &lhs, &rhs)
    });
    rep.law("inverse-4", cfg.pairs(&es), |(e, f)| {
        let lhs = lift(e, f).inv();
        let rhs = sec(e, &lift(&e.inv(), &acte(&bdry(e), f)));
        mismatch("{e,f}⁻¹ = e▷′{e⁻¹,∂(e)▷f}", &[e, f], &lhs, &rhs)
    });
    // Links between the secondary action and the base action.
    rep.law("sec-alt", cfg.pairs2(&es, &ls), |(e, l)| {
        let lhs = sec(e, l);
        let rhs = lift(&delta(l), e).inv().mul(l);
        mismatch("e▷′l = {δ(l),e}⁻¹·l", &[e, l], &lhs, &rhs)
    });
    rep.law("base-sec-1", cfg.pairs2(&es, &ls), |(e, l)| {
        let lhs = actl(&bdry(e), l);
        let rhs = sec(e, l).mul(&lift(e, &delta(&l.inv())));
        mismatch("∂(e)▷l = (e▷′l)·{e,δ(l)⁻¹}", &[e, l], &lhs, &rhs)
    });
    rep.law("base-sec-2", cfg.pairs2(&es, &ls), |(e, l)| {
        let lhs = actl(&bdry(e), l);
        let rhs = lift(e, &delta(l)).inv().mul(&sec(e, l));
        mismatch("∂(e)▷l = {e,δ(l)}⁻¹·(e▷′l)", &[e, l], &lhs, &rhs)
    });
    rep.law("base-sec-kernel", cfg.pairs2(&es, &ls), |(e, l)| {
        if !delta(l).is_identity() {
            return None;
        }
        let lhs = actl(&bdry(e), l);
        let rhs = sec(e, l);
        mismatch("∂(a)▷l = a▷′l on ker δ", &[e, l], &lhs, &rhs)
    });
    // The secondary action makes δ: L → E a crossed module.
    let secact = xm.secondary_as_action();
    rep.law_outcome("sec-action-laws", secact.check_laws(cfg).err().map(|e| e.to_string()));
    rep.law("sec-first-peiffer", cfg.pairs2(&es, &ls), |(e, l)| {
        let lhs = delta(&sec(e, l));
        let rhs = e.conj(&delta(l));
        mismatch("δ(e▷′l) = eδ(l)e⁻¹", &[e, l], &lhs, &rhs)
    });
    rep.law("sec-second-peiffer", cfg.pairs(&ls), |(l, k)| {
        let lhs = sec(&delta(l), k);
        let rhs = l.conj(k);
        mismatch("δ(l)▷′k = lkl⁻¹", &[l, k], &lhs, &rhs)
    });
    rep
}

/// Verifies a morphism of 2-crossed modules: each level is a homomorphism,
/// the two boundary squares commute, both actions and the lifting are
/// preserved.
pub fn xmod_map_verify(m: &XModMorphism, cfg: &ProbeConfig) -> VerificationReport {
    let mut rep = VerificationReport::new(
        format!("morphism {} -> {}", m.source.name, m.target.name),
        cfg.describe(),
    );
    rep.law_outcome("mu-hom", m.mu.check(cfg).err().map(|e| e.to_string()));
    rep.law_outcome("psi-hom", m.psi.check(cfg).err().map(|e| e.to_string()));
    rep.law_outcome("phi-hom", m.phi.check(cfg).err().map(|e| e.to_string()));

    let ls = m.source.l.probe(cfg);
    let es = m.source.e.probe(cfg);
    let gs = m.source.g.probe(cfg);

    rep.law("square-delta", ls.iter(), |l| {
        let lhs = m.psi.apply(&m.source.delta.apply(l));
        let rhs = m.target.delta.apply(&m.mu.apply(l));
        mismatch("ψδ = δ′μ", &[l], &lhs, &rhs)
    });
    rep.law("square-bdry", es.iter(), |e| {
        let lhs = m.phi.apply(&m.source.bdry.apply(e));
        let rhs = m.target.bdry.apply(&m.psi.apply(e));
        mismatch("φ∂ = ∂′ψ", &[e], &lhs, &rhs)
    });
    rep.law("action-e", cfg.pairs2(&gs, &es), |(g, e)| {
        let lhs = m.psi.apply(&m.source.act_e.act(g, e));
        let rhs = m.target.act_e.act(&m.phi.apply(g), &m.psi.apply(e));
        mismatch("ψ(g▷e) = φ(g)▷ψ(e)", &[g, e], &lhs, &rhs)
    });
    rep.law("action-l", cfg.pairs2(&gs, &ls), |(g, l)| {
        let lhs = m.mu.apply(&m.source.act_l.act(g, l));
        let rhs = m.target.act_l.act(&m.phi.apply(g), &m.mu.apply(l));
        mismatch("μ(g▷l) = φ(g)▷μ(l)", &[g, l], &lhs, &rhs)
    });
    rep.law("lifting", cfg.pairs(&es), |(e, f)| {
        let lhs = m.mu.apply(&m.source.lift.lift(e, f));
        let rhs = m.target.lift.lift(&m.psi.apply(e), &m.psi.apply(f));
        mismatch("μ{e,f} = {ψe,ψf}", &[e, f], &lhs, &rhs)
    });
    rep
}
