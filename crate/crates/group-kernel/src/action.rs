//! Left actions of one group on another by automorphisms.

use std::collections::HashMap;
use std::fmt;
use std::sync::Arc;

use crate::element::{Element, Payload};
use crate::error::{GroupError, Result};
use crate::group::Group;
use crate::probe::ProbeConfig;

type ActFn = dyn Fn(&Element, &Element) -> Element + Send + Sync;

/// A left action `▷` of `actor` on `target` by automorphisms:
/// `g ▷ (hh′) = (g▷h)(g▷h′)`, `(gg′) ▷ h = g ▷ (g′ ▷ h)` and `1 ▷ h = h`.
#[derive(Clone)]
pub struct LeftAction {
    actor: Group,
    target: Group,
    rule: Arc<ActFn>,
}

impl LeftAction {
    /// Action from an arithmetic rule.
    pub fn from_fn<F>(actor: &Group, target: &Group, f: F) -> LeftAction
    where
        F: Fn(&Element, &Element) -> Element + Send + Sync + 'static,
    {
        LeftAction { actor: actor.clone(), target: target.clone(), rule: Arc::new(f) }
    }

    /// The trivial action `g ▷ h = h`.
    pub fn trivial(actor: &Group, target: &Group) -> LeftAction {
        LeftAction::from_fn(actor, target, |_, h| h.clone())
    }

    /// Conjugation of a group on itself: `g ▷ h = g h g⁻¹`.
    pub fn conjugation(g: &Group) -> LeftAction {
        LeftAction::from_fn(g, g, |a, b| a.conj(b))
    }

    /// Action from a total table over finite carriers, keyed by payload
    /// pairs. Totality is checked.
    pub fn from_table(
        actor: &Group,
        target: &Group,
        entries: &[(Element, Element, Element)],
    ) -> Result<LeftAction> {
        let mut map: HashMap<(Payload, Payload), Payload> = HashMap::new();
        for (g, h, out) in entries {
            map.insert((g.payload().clone(), h.payload().clone()), out.payload().clone());
        }
        for g in actor.elements()? {
            for h in target.elements()? {
                if !map.contains_key(&(g.payload().clone(), h.payload().clone())) {
                    return Err(GroupError::ActionLawViolation(format!(
                        "table not total: missing ({g:?}, {h:?})"
                    )));
                }
            }
        }
        let map = Arc::new(map);
        let t = target.clone();
        Ok(LeftAction::from_fn(actor, target, move |g, h| {
            Element::new(t.clone(), map[&(g.payload().clone(), h.payload().clone())].clone())
        }))
    }

    /// The acting group.
    pub fn actor(&self) -> &Group {
        &self.actor
    }

    /// The group acted on.
    pub fn target(&self) -> &Group {
        &self.target
    }

    /// Applies the action: `g ▷ h`.
    pub fn act(&self, g: &Element, h: &Element) -> Element {
        debug_assert!(g.group() == &self.actor && h.group() == &self.target, "action carrier mismatch");
        let out = (self.rule)(g, h);
        debug_assert!(out.group() == &self.target, "action left its target");
        out
    }

    /// Checks the three action laws over the probe sets (capped per the
    /// probe configuration).
    pub fn check_laws(&self, cfg: &ProbeConfig) -> Result<()> {
        let gs = self.actor.probe(cfg);
        let hs = self.target.probe(cfg);
        let one = self.actor.id();
        for h in &hs {
            if self.act(&one, h) != *h {
                return Err(GroupError::ActionLawViolation(format!("1 ▷ {h:?} ≠ {h:?}")));
            }
        }
        for (g, h, h2) in cfg.triples3(&gs, &hs, &hs) {
            if self.act(&g, &h.mul(&h2)) != self.act(&g, &h).mul(&self.act(&g, &h2)) {
                return Err(GroupError::ActionLawViolation(format!(
                    "{g:?} ▷ product fails at ({h:?}, {h2:?})"
                )));
            }
        }
        for (g, g2, h) in cfg.triples3(&gs, &gs, &hs) {
            if self.act(&g.mul(&g2), &h) != self.act(&g, &self.act(&g2, &h)) {
                return Err(GroupError::ActionLawViolation(format!(
                    "composition fails at ({g:?}, {g2:?}, {h:?})"
                )));
            }
        }
        Ok(())
    }

    /// Cheap seeded spot check run by semidirect construction; the full
    /// suite is [`LeftAction::check_laws`].
    pub fn spot_check(&self, cfg: &ProbeConfig) -> Result<()> {
        self.check_laws(&cfg.with_max_tuples(256))
    }
}

impl fmt::Debug for LeftAction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "LeftAction({} ▷ {})", self.actor.name(), self.target.name())
    }
}
