//! Group homomorphisms with rule-, table- and basis-backed evaluation.

use std::collections::HashMap;
use std::fmt;
use std::sync::Arc;

use crate::element::{Element, Payload};
use crate::error::{GroupError, Result};
use crate::group::{Group, GroupKind};
use crate::probe::ProbeConfig;

type RuleFn = dyn Fn(&Element) -> Element + Send + Sync;

#[derive(Clone)]
enum HomRule {
    /// Arbitrary arithmetic rule (projections, inclusions, coordinatewise maps).
    Fn(Arc<RuleFn>),
    /// Total table over a finite domain, keyed by payload.
    Table(Arc<HashMap<Payload, Payload>>),
    /// Images of the basis of a free domain; evaluation is letter-by-letter,
    /// inverse letters mapping to inverse images (universal property).
    FreeImages(Arc<Vec<Element>>),
}

/// A homomorphism between two carriers.
///
/// The homomorphism law is not implied by construction for `Fn` and `Table`
/// rules; [`Hom::check`] verifies it over the probe sets.
#[derive(Clone)]
pub struct Hom {
    domain: Group,
    codomain: Group,
    rule: HomRule,
}

impl Hom {
    /// Homomorphism from an arithmetic rule.
    pub fn from_fn<F>(domain: &Group, codomain: &Group, f: F) -> Hom
    where
        F: Fn(&Element) -> Element + Send + Sync + 'static,
    {
        Hom { domain: domain.clone(), codomain: codomain.clone(), rule: HomRule::Fn(Arc::new(f)) }
    }

    /// The identity map of a carrier.
    pub fn identity(g: &Group) -> Hom {
        Hom::from_fn(g, g, |x| x.clone())
    }

    /// The map sending everything to the identity of the codomain.
    pub fn trivial(domain: &Group, codomain: &Group) -> Hom {
        let cod = codomain.clone();
        Hom::from_fn(domain, codomain, move |_| cod.id())
    }

    /// Total table over a finite domain. Totality is checked; the
    /// homomorphism law is left to [`Hom::check`].
    pub fn from_table(domain: &Group, codomain: &Group, entries: &[(Element, Element)]) -> Result<Hom> {
        let mut map = HashMap::new();
        for (x, y) in entries {
            map.insert(x.payload().clone(), y.payload().clone());
        }
        for x in domain.elements()? {
            if !map.contains_key(x.payload()) {
                return Err(GroupError::MapMismatch(format!("table not total: missing {x:?}")));
            }
        }
        Ok(Hom {
            domain: domain.clone(),
            codomain: codomain.clone(),
            rule: HomRule::Table(Arc::new(map)),
        })
    }

    /// Unique extension of basis images along the universal property of a
    /// free domain. Always a homomorphism.
    pub fn extend_free(domain: &Group, codomain: &Group, images: Vec<Element>) -> Hom {
        match domain.kind() {
            GroupKind::Free { basis } => {
                assert_eq!(basis.len(), images.len(), "one image per basis symbol");
            }
            _ => panic!("`extend_free` requires a free domain"),
        }
        Hom {
            domain: domain.clone(),
            codomain: codomain.clone(),
            rule: HomRule::FreeImages(Arc::new(images)),
        }
    }

    /// Inclusion of a subgroup carrier into its parent.
    pub fn inclusion(sub: &Group) -> Hom {
        let parent = sub.parent().clone();
        let p2 = parent.clone();
        Hom::from_fn(sub, &parent, move |x| Element::new(p2.clone(), x.payload().clone()))
    }

    /// Canonical projection of a finite parent onto a quotient carrier.
    pub fn projection(quotient: &Group) -> Hom {
        let parent = quotient.parent().clone();
        let q = quotient.clone();
        Hom::from_fn(&parent, quotient, move |x| q.from_parent(&Element::new(x.group().clone(), x.payload().clone())))
    }

    /// The domain carrier.
    pub fn domain(&self) -> &Group {
        &self.domain
    }

    /// The codomain carrier.
    pub fn codomain(&self) -> &Group {
        &self.codomain
    }

    /// Applies the map.
    pub fn apply(&self, x: &Element) -> Element {
        debug_assert!(x.group() == &self.domain, "hom applied outside its domain");
        match &self.rule {
            HomRule::Fn(f) => {
                let y = f(x);
                debug_assert!(y.group() == &self.codomain, "hom rule left its codomain");
                y
            }
            HomRule::Table(t) => Element::new(self.codomain.clone(), t[x.payload()].clone()),
            HomRule::FreeImages(images) => match x.payload() {
                Payload::Word(w) => {
                    let mut acc = self.codomain.id();
                    for l in w.letters() {
                        let img = &images[l.sym as usize];
                        acc = acc.mul(&if l.exp == 1 { img.clone() } else { img.inv() });
                    }
                    acc
                }
                _ => unreachable!("free payloads are words"),
            },
        }
    }

    /// Composition `self ∘ other` (apply `other` first).
    pub fn compose(&self, other: &Hom) -> Hom {
        assert!(other.codomain == self.domain, "non-composable homs");
        let f = self.clone();
        let g = other.clone();
        Hom::from_fn(&other.domain, &self.codomain, move |x| f.apply(&g.apply(x)))
    }

    /// Checks `rule(xy) = rule(x) rule(y)` over probe pairs (exhaustive for
    /// finite domains, capped/sampled otherwise), plus identity preservation.
    pub fn check(&self, cfg: &ProbeConfig) -> Result<()> {
        if self.apply(&self.domain.id()) != self.codomain.id() {
            return Err(GroupError::MapMismatch("identity not preserved".into()));
        }
        let probe = self.domain.probe(cfg);
        for (x, y) in cfg.pairs(&probe) {
            if self.apply(&x.mul(&y)) != self.apply(&x).mul(&self.apply(&y)) {
                return Err(GroupError::MapMismatch(format!(
                    "multiplicativity fails at ({x:?}, {y:?})"
                )));
            }
        }
        Ok(())
    }

    /// Whether the map hits every codomain element (finite codomain), using
    /// the domain probe as the source of images.
    pub fn surjective_on_probe(&self, cfg: &ProbeConfig) -> bool {
        let Some(cod) = self.codomain.elements_opt() else { return false };
        let images: std::collections::HashSet<Payload> =
            self.domain.probe(cfg).iter().map(|x| self.apply(x).into_payload()).collect();
        cod.iter().all(|y| images.contains(y.payload()))
    }
}

impl fmt::Debug for Hom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Hom({} -> {})", self.domain.name(), self.codomain.name())
    }
}
