//! Constructions on (pre-)crossed and 2-crossed modules: the canonical
//! 2-crossed module generated by Peiffer commutators, and homotopy groups.

use group_kernel::{Element, Group, GroupError, GroupKind, Hom, LeftAction, ProbeConfig, Result};

use crate::types::{Lifting, PreCrossedModule, TwoCrossedModule};

/// Builds the 2-crossed module canonically attached to a pre-crossed module:
/// `L` is the subgroup of `E` generated by all Peiffer commutators `⟨a,b⟩`,
/// `δ` is the inclusion, and the lifting is `{a,b} = ⟨a,b⟩` itself.
///
/// Requires `E` (and `G`, for the restricted action check) to be enumerable.
/// When the input is already a crossed module, all Peiffer commutators
/// vanish and `L` is trivial.
pub fn peiffer_lift_from_precrossed(m: &PreCrossedModule) -> Result<TwoCrossedModule> {
    let es = m.e.elements()?;
    let mut gens = Vec::new();
    for a in &es {
        for b in &es {
            gens.push(m.peiffer_commutator(a, b));
        }
    }
    let l = Group::subgroup_closure(&m.e, &gens)?;
    let delta = Hom::inclusion(&l);

    // g ▷ ⟨a,b⟩ = ⟨g▷a, g▷b⟩ by the first Peiffer relation, so the base
    // action restricts to L; `from_parent` enforces membership.
    let (lg, eg, act) = (l.clone(), m.e.clone(), m.act.clone());
    let act_l = LeftAction::from_fn(&m.g, &l, move |g, k| {
        let in_e = Element::new(eg.clone(), k.payload().clone());
        lg.from_parent(&act.act(g, &in_e))
    });

    let (lg, pcm) = (l.clone(), m.clone());
    let lift = Lifting::from_fn(&m.e, &l, move |a, b| lg.from_parent(&pcm.peiffer_commutator(a, b)));

    Ok(TwoCrossedModule::new(
        &format!("{}~peiffer", m.name),
        delta,
        m.bdry.clone(),
        m.act.clone(),
        act_l,
        lift,
    ))
}

/// The homotopy groups of a 2-crossed module.
#[derive(Clone, Debug)]
pub struct HomotopyGroups {
    /// `π1 = G / im ∂`.
    pub pi1: Group,
    /// `π2 = ker ∂ / δ(L)`.
    pub pi2: Group,
    /// `π3 = ker δ`.
    pub pi3: Group,
}

impl HomotopyGroups {
    /// Orders of the three groups (`None` for infinite).
    pub fn orders(&self) -> (Option<usize>, Option<usize>, Option<usize>) {
        (self.pi1.order(), self.pi2.order(), self.pi3.order())
    }

    /// Short rendering such as `(1, Z2, 1)` by order.
    pub fn describe(&self) -> String {
        let one = |g: &Group| match g.order() {
            Some(1) => "1".to_string(),
            Some(n) => format!("{} (order {n})", g.name()),
            None => format!("{} (infinite)", g.name()),
        };
        format!("π1 = {}, π2 = {}, π3 = {}", one(&self.pi1), one(&self.pi2), one(&self.pi3))
    }
}

/// Computes `π1 = G/im ∂`, `π2 = ker ∂ / δ(L)`, `π3 = ker δ`.
///
/// Two computation paths are supported:
/// - all three carriers enumerable: kernels and images by enumeration,
///   quotients with explicit normality checks (a non-normal image is an
///   error, never silently coerced);
/// - `L` and `E` both the integers with `G` finite: `δ` and `∂` are then
///   determined by `δ(1)` and `∂(1)`, and kernels/images are computed by
///   exact arithmetic.
///
/// Anything else is rejected as not computable.
pub fn homotopy_groups(xm: &TwoCrossedModule) -> Result<HomotopyGroups> {
    if xm.l.enumerable() && xm.e.enumerable() && xm.g.enumerable() {
        return homotopy_groups_finite(xm);
    }
    if matches!(xm.l.kind(), GroupKind::Integers)
        && matches!(xm.e.kind(), GroupKind::Integers)
        && xm.g.enumerable()
    {
        return homotopy_groups_integer(xm);
    }
    Err(GroupError::NotEnumerable(format!(
        "homotopy groups not computable for carriers ({}, {}, {})",
        xm.l.name(),
        xm.e.name(),
        xm.g.name()
    )))
}

fn homotopy_groups_finite(xm: &TwoCrossedModule) -> Result<HomotopyGroups> {
    let ls = xm.l.elements()?;
    let es = xm.e.elements()?;

    let im_bdry: Vec<Element> = es.iter().map(|e| xm.bdry.apply(e)).collect();
    let im_bdry = Group::subgroup_closure(&xm.g, &im_bdry)?;
    let pi1 = Group::quotient(&xm.g, &im_bdry)?;

    let ker_bdry: Vec<Element> =
        es.iter().filter(|e| xm.bdry.apply(e).is_identity()).cloned().collect();
    let ker_bdry = Group::sub_from_elements("ker∂", &xm.e, ker_bdry)?;
    let im_delta: Vec<Element> =
        ls.iter().map(|l| ker_bdry.from_parent(&xm.delta.apply(l))).collect();
    let im_delta = Group::subgroup_closure(&ker_bdry, &im_delta)?;
    let pi2 = Group::quotient(&ker_bdry, &im_delta)?;

    let ker_delta: Vec<Element> =
        ls.iter().filter(|l| xm.delta.apply(l).is_identity()).cloned().collect();
    let pi3 = Group::sub_from_elements("kerδ", &xm.l, ker_delta)?;

    Ok(HomotopyGroups { pi1, pi2, pi3 })
}

/// Exact-arithmetic path for `L = E = ℤ` with finite `G`. The homomorphisms
/// are linear, so `δ(l) = m·l` with `m = δ(1)` and `im ∂ = ⟨∂(1)⟩`.
fn homotopy_groups_integer(xm: &TwoCrossedModule) -> Result<HomotopyGroups> {
    let im_gen = xm.bdry.apply(&xm.e.int(1));
    let im_bdry = Group::subgroup_closure(&xm.g, &[im_gen.clone()])?;
    let pi1 = Group::quotient(&xm.g, &im_bdry)?;

    // ker ∂ = dℤ where d is the order of ∂(1) in the finite group G.
    let mut d: i64 = 1;
    let mut acc = im_gen.clone();
    while !acc.is_identity() {
        acc = acc.mul(&im_gen);
        d += 1;
    }
    let m = match xm.delta.apply(&xm.l.int(1)).payload() {
        group_kernel::Payload::Int(v) => v.abs(),
        _ => unreachable!("integer carrier"),
    };
    // ∂δ = 1 forces d | m, so dℤ/mℤ ≅ ℤ_{m/d} for m ≠ 0.
    let (pi2, pi3) = if m == 0 {
        (Group::integers(), Group::integers())
    } else {
        if m % d != 0 {
            return Err(GroupError::MapMismatch(format!(
                "im δ = {m}ℤ not contained in ker ∂ = {d}ℤ"
            )));
        }
        // δ injective for m ≠ 0, so ker δ is trivial.
        (Group::cyclic(m / d), Group::trivial())
    };
    Ok(HomotopyGroups { pi1, pi2, pi3 })
}

/// Checks that `ker ∂` is central in `E` (needs `E` enumerable); returns a
/// witness pair on failure. A consequence of the crossed-module laws.
pub fn kernel_central_witness(m: &PreCrossedModule, _cfg: &ProbeConfig) -> Result<Option<String>> {
    let es = m.e.elements()?;
    for k in es.iter().filter(|e| m.bdry.apply(e).is_identity()) {
        for x in &es {
            if k.mul(x) != x.mul(k) {
                return Ok(Some(format!(
                    "ker ∂ not central: [{}, {}] != 1",
                    m.e.describe_element(k),
                    m.e.describe_element(x)
                )));
            }
        }
    }
    Ok(None)
}
