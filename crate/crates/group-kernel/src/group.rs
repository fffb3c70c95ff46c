//! Group carriers with exact arithmetic.
//!
//! A [`Group`] is a cheaply clonable handle (an `Arc`) to one of the carrier
//! kinds:
//!
//! * `Table` — finite group given by a Cayley table,
//! * `Cyclic(n)` — integers modulo `n`,
//! * `Integers` — the additive integers,
//! * `Free` — the free group on a finite ordered symbol basis,
//! * `Semidirect` — `G ⋉ H` for a left action of `G` on `H`, with the
//!   multiplication `(g,e)(g′,e′) = (gg′, (g′⁻¹ ▷ e) e′)` and inverse
//!   `(g,e)⁻¹ = (g⁻¹, g ▷ e⁻¹)`,
//! * `Pullback` — pairs `(g,m)` with `φ(g) = ∂(m)` under componentwise
//!   multiplication,
//! * `Sub` — an enumerated subgroup of a finite parent,
//! * `Quotient` — cosets of a normal subgroup of a finite parent, stored as
//!   canonical representatives.
//!
//! Two handles compare equal when they carry the same name; constructors
//! derive descriptive names deterministically, so rebuilding the same
//! carrier yields an equal handle.
//!
//! Infinite carriers expose a *probe set* (integers in a symmetric interval,
//! words up to a length bound) used whenever a law quantified over the
//! carrier has to be checked.

use std::collections::{HashMap, HashSet, VecDeque};
use std::fmt;
use std::sync::Arc;

use itertools::Itertools;

use crate::action::LeftAction;
use crate::element::{Element, Payload};
use crate::error::{GroupError, Result};
use crate::hom::Hom;
use crate::probe::ProbeConfig;
use crate::word::{Letter, Word};

/// The carrier variants. See the module docs for the catalogue.
pub enum GroupKind {
    /// Finite group presented by a Cayley table.
    Table {
        /// Display names of the elements, indexed by payload.
        names: Vec<String>,
        /// Row-major multiplication table: `mul[i * n + j] = i * j`.
        mul: Vec<usize>,
        /// Inverse of each element.
        inv: Vec<usize>,
        /// Index of the identity.
        id: usize,
    },
    /// Integers modulo `n`, additively.
    Cyclic {
        /// The modulus (≥ 1).
        n: i64,
    },
    /// The additive integers.
    Integers,
    /// Free group on an ordered symbol basis.
    Free {
        /// Symbol names, indexed by letter symbol.
        basis: Vec<String>,
    },
    /// Semidirect product `actor ⋉ target` along `action`.
    Semidirect {
        /// The acting group `G` (first pair component).
        actor: Group,
        /// The group acted on, `H` (second pair component).
        target: Group,
        /// The left action `▷` of `actor` on `target`.
        action: LeftAction,
    },
    /// Pullback `{(g,m) : left(g) = right(m)}` with componentwise product.
    Pullback {
        /// Map out of the first component.
        left: Hom,
        /// Map out of the second component.
        right: Hom,
        /// Enumerated pairs when both components are finite.
        pairs: Option<Vec<Payload>>,
    },
    /// Enumerated subgroup of a finite parent; payloads are parent payloads.
    Sub {
        /// The ambient group.
        parent: Group,
        /// All subgroup elements, sorted for determinism.
        elems: Vec<Payload>,
        /// The same elements as a set, for membership tests.
        set: HashSet<Payload>,
    },
    /// Quotient of a finite parent by a normal subgroup; payloads are the
    /// canonical (minimal) coset representatives in the parent.
    Quotient {
        /// The ambient group.
        parent: Group,
        /// Canonical representative of every parent element's coset.
        canon: HashMap<Payload, Payload>,
        /// The distinct representatives, sorted for determinism.
        reps: Vec<Payload>,
    },
}

struct GroupInner {
    name: String,
    kind: GroupKind,
}

/// Handle to a group carrier. Clones share the carrier.
#[derive(Clone)]
pub struct Group {
    inner: Arc<GroupInner>,
}

impl PartialEq for Group {
    fn eq(&self, other: &Group) -> bool {
        Arc::ptr_eq(&self.inner, &other.inner) || self.inner.name == other.inner.name
    }
}

impl Eq for Group {}

impl fmt::Debug for Group {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Group({})", self.inner.name)
    }
}

impl Group {
    fn from_kind(name: String, kind: GroupKind) -> Group {
        Group { inner: Arc::new(GroupInner { name, kind }) }
    }

    /// The carrier's (unique, descriptive) name.
    pub fn name(&self) -> &str {
        &self.inner.name
    }

    /// The underlying carrier kind.
    pub fn kind(&self) -> &GroupKind {
        &self.inner.kind
    }

    // ------------------------------------------------------------------
    // Constructors
    // ------------------------------------------------------------------

    /// Finite group from a row-major Cayley table over named elements.
    ///
    /// The table is validated: it must be a Latin square with a two-sided
    /// identity, two-sided inverses, and associative multiplication
    /// (checked exhaustively).
    pub fn table(name: &str, names: Vec<String>, rows: Vec<Vec<usize>>) -> Result<Group> {
        let n = names.len();
        if rows.len() != n || rows.iter().any(|r| r.len() != n) {
            return Err(GroupError::AxiomFailure {
                axiom: "table-shape".into(),
                witness: format!("{} names vs {} rows", n, rows.len()),
            });
        }
        let mul: Vec<usize> = rows.into_iter().flatten().collect();
        if mul.iter().any(|&x| x >= n) {
            return Err(GroupError::AxiomFailure {
                axiom: "table-range".into(),
                witness: "entry out of range".into(),
            });
        }
        // Identity: a two-sided unit must exist.
        let id = (0..n)
            .find(|&e| (0..n).all(|i| mul[e * n + i] == i && mul[i * n + e] == i))
            .ok_or_else(|| GroupError::AxiomFailure {
                axiom: "identity".into(),
                witness: "no two-sided identity".into(),
            })?;
        // Inverses.
        let mut inv = vec![usize::MAX; n];
        for i in 0..n {
            match (0..n).find(|&j| mul[i * n + j] == id && mul[j * n + i] == id) {
                Some(j) => inv[i] = j,
                None => {
                    return Err(GroupError::AxiomFailure {
                        axiom: "inverse".into(),
                        witness: names[i].clone(),
                    })
                }
            }
        }
        // Associativity, exhaustively.
        for (i, j, k) in (0..n).cartesian_product(0..n).cartesian_product(0..n).map(|((i, j), k)| (i, j, k)) {
            if mul[mul[i * n + j] * n + k] != mul[i * n + mul[j * n + k]] {
                return Err(GroupError::AxiomFailure {
                    axiom: "associativity".into(),
                    witness: format!("({}, {}, {})", names[i], names[j], names[k]),
                });
            }
        }
        Ok(Group::from_kind(name.to_string(), GroupKind::Table { names, mul, inv, id }))
    }

    /// The integers modulo `n` (additive), named `Z{n}`.
    pub fn cyclic(n: i64) -> Group {
        assert!(n >= 1, "cyclic modulus must be positive");
        Group::from_kind(format!("Z{n}"), GroupKind::Cyclic { n })
    }

    /// The additive integers, named `Z`.
    pub fn integers() -> Group {
        Group::from_kind("Z".into(), GroupKind::Integers)
    }

    /// The trivial group, as a one-element table.
    pub fn trivial() -> Group {
        Group::table("1", vec!["1".into()], vec![vec![0]]).expect("trivial table is a group")
    }

    /// Free group on distinct symbols.
    pub fn free(name: &str, basis: Vec<String>) -> Group {
        let mut seen = HashSet::new();
        for b in &basis {
            assert!(seen.insert(b.clone()), "duplicate basis symbol `{b}`");
        }
        Group::from_kind(name.to_string(), GroupKind::Free { basis })
    }

    /// Semidirect product `actor ⋉ target` along the given action.
    ///
    /// The action laws are spot-checked on a small seeded sample of the
    /// probe sets; a violation is reported as
    /// [`GroupError::ActionLawViolation`]. Full action-law suites belong to
    /// the verification layer.
    pub fn semidirect(action: &LeftAction) -> Result<Group> {
        action.spot_check(&ProbeConfig::default())?;
        let actor = action.actor().clone();
        let target = action.target().clone();
        let name = format!("({}⋉{})", actor.name(), target.name());
        Ok(Group::from_kind(name, GroupKind::Semidirect { actor, target, action: action.clone() }))
    }

    /// Like [`Group::semidirect`] but with an explicit carrier name, for
    /// constructions that build the same component groups repeatedly.
    pub fn semidirect_named(name: &str, action: &LeftAction) -> Result<Group> {
        action.spot_check(&ProbeConfig::default())?;
        Ok(Group::from_kind(
            name.to_string(),
            GroupKind::Semidirect {
                actor: action.actor().clone(),
                target: action.target().clone(),
                action: action.clone(),
            },
        ))
    }

    /// Pullback of `left: G → P` and `right: M → P`: pairs `(g,m)` with
    /// `left(g) = right(m)` under componentwise multiplication.
    pub fn pullback(left: &Hom, right: &Hom) -> Result<Group> {
        if left.codomain() != right.codomain() {
            return Err(GroupError::MapMismatch(format!(
                "pullback codomains differ: `{}` vs `{}`",
                left.codomain().name(),
                right.codomain().name()
            )));
        }
        let g = left.domain();
        let m = right.domain();
        let pairs = match (g.elements_opt(), m.elements_opt()) {
            (Some(gs), Some(ms)) => {
                let mut v = Vec::new();
                for ge in &gs {
                    let lg = left.apply(ge);
                    for me in &ms {
                        if left.codomain().mul_eq(&lg, &right.apply(me)) {
                            v.push(Payload::pair(ge.payload().clone(), me.payload().clone()));
                        }
                    }
                }
                v.sort();
                Some(v)
            }
            _ => None,
        };
        let name = format!("pb({},{})", g.name(), m.name());
        Ok(Group::from_kind(name, GroupKind::Pullback { left: left.clone(), right: right.clone(), pairs }))
    }

    /// Subgroup generated by `gens` inside a finite parent, computed as the
    /// orbit of the identity under multiplication by generators and their
    /// inverses.
    pub fn subgroup_closure(parent: &Group, gens: &[Element]) -> Result<Group> {
        parent.require_enumerable()?;
        let mut step: Vec<Element> = vec![parent.id()];
        for g in gens {
            step.push(g.clone());
            step.push(g.inv());
        }
        let mut set: HashSet<Payload> = HashSet::new();
        let mut queue: VecDeque<Element> = VecDeque::new();
        set.insert(parent.id().payload().clone());
        queue.push_back(parent.id());
        while let Some(x) = queue.pop_front() {
            for s in &step {
                let y = x.mul(s);
                if set.insert(y.payload().clone()) {
                    queue.push_back(y);
                }
            }
        }
        let mut elems: Vec<Payload> = set.iter().cloned().collect();
        elems.sort();
        let name = format!("⟨{} gens⟩≤{}", gens.len(), parent.name());
        Ok(Group::from_kind(name, GroupKind::Sub { parent: parent.clone(), elems, set }))
    }

    /// An enumerated subgroup from an explicit element list (validated to be
    /// closed under products and inverses).
    pub fn sub_from_elements(name: &str, parent: &Group, elems: Vec<Element>) -> Result<Group> {
        parent.require_enumerable()?;
        let set: HashSet<Payload> = elems.iter().map(|e| e.payload().clone()).collect();
        for x in &elems {
            if !set.contains(x.inv().payload()) {
                return Err(GroupError::AxiomFailure {
                    axiom: "subgroup-inverse".into(),
                    witness: format!("{x:?}"),
                });
            }
            for y in &elems {
                if !set.contains(x.mul(y).payload()) {
                    return Err(GroupError::AxiomFailure {
                        axiom: "subgroup-closure".into(),
                        witness: format!("({x:?}, {y:?})"),
                    });
                }
            }
        }
        let mut elems: Vec<Payload> = set.iter().cloned().collect();
        elems.sort();
        Ok(Group::from_kind(name.to_string(), GroupKind::Sub { parent: parent.clone(), elems, set }))
    }

    /// Quotient of a finite parent by a normal subgroup. Cosets are stored
    /// through their minimal representative; normality is checked.
    pub fn quotient(parent: &Group, normal: &Group) -> Result<Group> {
        parent.require_enumerable()?;
        let (nparent, nset) = match normal.kind() {
            GroupKind::Sub { parent: p, set, .. } => (p, set),
            _ => {
                return Err(GroupError::MapMismatch(
                    "quotient requires a subgroup carrier for the normal subgroup".into(),
                ))
            }
        };
        if nparent != parent {
            return Err(GroupError::CarrierMismatch {
                expected: parent.name().into(),
                got: nparent.name().into(),
            });
        }
        let all = parent.elements_opt().expect("enumerable parent");
        // Normality: g n g⁻¹ stays inside for every parent g and subgroup n.
        for g in &all {
            for npay in nset {
                let n = Element::new(parent.clone(), npay.clone());
                if !nset.contains(g.conj(&n).payload()) {
                    return Err(GroupError::NotNormal { witness: format!("({g:?}, {n:?})") });
                }
            }
        }
        // Canonical representative: minimal payload within each left coset.
        let mut canon: HashMap<Payload, Payload> = HashMap::new();
        let mut reps: Vec<Payload> = Vec::new();
        for g in &all {
            if canon.contains_key(g.payload()) {
                continue;
            }
            let coset: Vec<Payload> = nset
                .iter()
                .map(|npay| g.mul(&Element::new(parent.clone(), npay.clone())).into_payload())
                .collect();
            let rep = coset.iter().min().expect("nonempty coset").clone();
            for c in coset {
                canon.insert(c, rep.clone());
            }
            reps.push(rep);
        }
        reps.sort();
        reps.dedup();
        let name = format!("{}/{}", parent.name(), normal.name());
        Ok(Group::from_kind(name, GroupKind::Quotient { parent: parent.clone(), canon, reps }))
    }

    // ------------------------------------------------------------------
    // Element constructors
    // ------------------------------------------------------------------

    /// The identity element.
    pub fn id(&self) -> Element {
        let payload = match self.kind() {
            GroupKind::Table { id, .. } => Payload::Idx(*id),
            GroupKind::Cyclic { .. } | GroupKind::Integers => Payload::Int(0),
            GroupKind::Free { .. } => Payload::Word(Word::empty()),
            GroupKind::Semidirect { actor, target, .. } => {
                Payload::pair(actor.id().into_payload(), target.id().into_payload())
            }
            GroupKind::Pullback { left, right, .. } => Payload::pair(
                left.domain().id().into_payload(),
                right.domain().id().into_payload(),
            ),
            GroupKind::Sub { parent, .. } | GroupKind::Quotient { parent, .. } => {
                parent.id().into_payload()
            }
        };
        Element::new(self.clone(), payload)
    }

    /// Element of an integer-like carrier (`Integers` or `Cyclic`).
    pub fn int(&self, value: i64) -> Element {
        let payload = match self.kind() {
            GroupKind::Integers => Payload::Int(value),
            GroupKind::Cyclic { n } => Payload::Int(value.rem_euclid(*n)),
            _ => panic!("`int` on non-integer carrier `{}`", self.name()),
        };
        Element::new(self.clone(), payload)
    }

    /// Table element by display name.
    pub fn by_name(&self, name: &str) -> Option<Element> {
        match self.kind() {
            GroupKind::Table { names, .. } => names
                .iter()
                .position(|n| n == name)
                .map(|i| Element::new(self.clone(), Payload::Idx(i))),
            GroupKind::Sub { parent, set, .. } => {
                let e = parent.by_name(name)?;
                set.contains(e.payload()).then(|| Element::new(self.clone(), e.into_payload()))
            }
            _ => None,
        }
    }

    /// Free-carrier generator by basis index (exponent `+1`).
    pub fn generator(&self, index: usize) -> Element {
        match self.kind() {
            GroupKind::Free { basis } => {
                assert!(index < basis.len(), "generator index out of range");
                Element::new(self.clone(), Payload::Word(Word::letter(index as u32, 1)))
            }
            _ => panic!("`generator` on non-free carrier `{}`", self.name()),
        }
    }

    /// Free-carrier element from a reduced word.
    pub fn word(&self, w: Word) -> Element {
        match self.kind() {
            GroupKind::Free { basis } => {
                debug_assert!(w.letters().iter().all(|l| (l.sym as usize) < basis.len()));
                Element::new(self.clone(), Payload::Word(w))
            }
            _ => panic!("`word` on non-free carrier `{}`", self.name()),
        }
    }

    /// Pair element of a semidirect or pullback carrier.
    pub fn pair(&self, a: &Element, b: &Element) -> Element {
        match self.kind() {
            GroupKind::Semidirect { .. } => {
                Element::new(self.clone(), Payload::pair(a.payload().clone(), b.payload().clone()))
            }
            GroupKind::Pullback { left, right, .. } => {
                debug_assert!(
                    left.codomain().mul_eq(&left.apply(a), &right.apply(b)),
                    "pair not in pullback carrier `{}`",
                    self.name()
                );
                Element::new(self.clone(), Payload::pair(a.payload().clone(), b.payload().clone()))
            }
            _ => panic!("`pair` on non-pair carrier `{}`", self.name()),
        }
    }

    /// Re-tags a parent element into a `Sub` or `Quotient` carrier
    /// (canonicalizing for quotients, membership-checked for subgroups).
    pub fn from_parent(&self, e: &Element) -> Element {
        match self.kind() {
            GroupKind::Sub { set, .. } => {
                assert!(set.contains(e.payload()), "element not in subgroup `{}`", self.name());
                Element::new(self.clone(), e.payload().clone())
            }
            GroupKind::Quotient { canon, .. } => {
                Element::new(self.clone(), canon[e.payload()].clone())
            }
            _ => panic!("`from_parent` on non-derived carrier `{}`", self.name()),
        }
    }

    // ------------------------------------------------------------------
    // Arithmetic
    // ------------------------------------------------------------------

    /// Product of two elements of this carrier.
    pub fn mul(&self, a: &Element, b: &Element) -> Element {
        debug_assert!(a.group() == self && b.group() == self, "carrier mismatch in mul");
        let payload = self.mul_payload(a.payload(), b.payload());
        Element::new(self.clone(), payload)
    }

    fn mul_payload(&self, a: &Payload, b: &Payload) -> Payload {
        match self.kind() {
            GroupKind::Table { names: _, mul, .. } => {
                let n = self.order_usize();
                match (a, b) {
                    (Payload::Idx(i), Payload::Idx(j)) => Payload::Idx(mul[i * n + j]),
                    _ => unreachable!("table payloads are indices"),
                }
            }
            GroupKind::Cyclic { n } => match (a, b) {
                (Payload::Int(x), Payload::Int(y)) => Payload::Int((x + y).rem_euclid(*n)),
                _ => unreachable!("cyclic payloads are integers"),
            },
            GroupKind::Integers => match (a, b) {
                (Payload::Int(x), Payload::Int(y)) => Payload::Int(x + y),
                _ => unreachable!("integer payloads are integers"),
            },
            GroupKind::Free { .. } => match (a, b) {
                (Payload::Word(u), Payload::Word(v)) => Payload::Word(u.concat(v)),
                _ => unreachable!("free payloads are words"),
            },
            GroupKind::Semidirect { actor, target, action } => {
                let (g, e) = a.unpair();
                let (g2, e2) = b.unpair();
                let g = Element::new(actor.clone(), g.clone());
                let e = Element::new(target.clone(), e.clone());
                let g2 = Element::new(actor.clone(), g2.clone());
                let e2 = Element::new(target.clone(), e2.clone());
                // (g,e)(g′,e′) = (gg′, (g′⁻¹ ▷ e) e′)
                let gg = g.mul(&g2);
                let twisted = action.act(&g2.inv(), &e).mul(&e2);
                Payload::pair(gg.into_payload(), twisted.into_payload())
            }
            GroupKind::Pullback { left, right, .. } => {
                let (g, m) = a.unpair();
                let (g2, m2) = b.unpair();
                let gd = left.domain();
                let md = right.domain();
                Payload::pair(
                    gd.mul_payload(g, g2),
                    md.mul_payload(m, m2),
                )
            }
            GroupKind::Sub { parent, .. } => parent.mul_payload(a, b),
            GroupKind::Quotient { parent, canon, .. } => canon[&parent.mul_payload(a, b)].clone(),
        }
    }

    /// Inverse of an element of this carrier.
    pub fn inv(&self, a: &Element) -> Element {
        debug_assert!(a.group() == self, "carrier mismatch in inv");
        let payload = self.inv_payload(a.payload());
        Element::new(self.clone(), payload)
    }

    fn inv_payload(&self, a: &Payload) -> Payload {
        match self.kind() {
            GroupKind::Table { inv, .. } => match a {
                Payload::Idx(i) => Payload::Idx(inv[*i]),
                _ => unreachable!("table payloads are indices"),
            },
            GroupKind::Cyclic { n } => match a {
                Payload::Int(x) => Payload::Int((-x).rem_euclid(*n)),
                _ => unreachable!("cyclic payloads are integers"),
            },
            GroupKind::Integers => match a {
                Payload::Int(x) => Payload::Int(-x),
                _ => unreachable!("integer payloads are integers"),
            },
            GroupKind::Free { .. } => match a {
                Payload::Word(w) => Payload::Word(w.inverse()),
                _ => unreachable!("free payloads are words"),
            },
            GroupKind::Semidirect { actor, target, action } => {
                let (g, e) = a.unpair();
                let g = Element::new(actor.clone(), g.clone());
                let e = Element::new(target.clone(), e.clone());
                // (g,e)⁻¹ = (g⁻¹, g ▷ e⁻¹)
                Payload::pair(g.inv().into_payload(), action.act(&g, &e.inv()).into_payload())
            }
            GroupKind::Pullback { left, right, .. } => {
                let (g, m) = a.unpair();
                Payload::pair(left.domain().inv_payload(g), right.domain().inv_payload(m))
            }
            GroupKind::Sub { parent, .. } => parent.inv_payload(a),
            GroupKind::Quotient { parent, canon, .. } => canon[&parent.inv_payload(a)].clone(),
        }
    }

    /// Equality shortcut used in hot paths (payload comparison).
    pub fn mul_eq(&self, a: &Element, b: &Element) -> bool {
        a.payload() == b.payload()
    }

    // ------------------------------------------------------------------
    // Enumeration & probes
    // ------------------------------------------------------------------

    /// Whether the carrier is finite (and may therefore be enumerated).
    pub fn enumerable(&self) -> bool {
        match self.kind() {
            GroupKind::Table { .. } | GroupKind::Cyclic { .. } => true,
            GroupKind::Integers | GroupKind::Free { .. } => false,
            GroupKind::Semidirect { actor, target, .. } => {
                actor.enumerable() && target.enumerable()
            }
            GroupKind::Pullback { pairs, .. } => pairs.is_some(),
            GroupKind::Sub { .. } | GroupKind::Quotient { .. } => true,
        }
    }

    /// Number of elements for finite carriers.
    pub fn order(&self) -> Option<usize> {
        self.elements_opt().map(|v| v.len())
    }

    fn order_usize(&self) -> usize {
        match self.kind() {
            GroupKind::Table { names, .. } => names.len(),
            _ => unreachable!(),
        }
    }

    fn require_enumerable(&self) -> Result<()> {
        if self.enumerable() {
            Ok(())
        } else {
            Err(GroupError::NotEnumerable(self.name().into()))
        }
    }

    /// All elements of a finite carrier, in a deterministic order; `None`
    /// for infinite carriers.
    pub fn elements_opt(&self) -> Option<Vec<Element>> {
        let payloads: Option<Vec<Payload>> = match self.kind() {
            GroupKind::Table { names, .. } => {
                Some((0..names.len()).map(Payload::Idx).collect())
            }
            GroupKind::Cyclic { n } => Some((0..*n).map(Payload::Int).collect()),
            GroupKind::Integers | GroupKind::Free { .. } => None,
            GroupKind::Semidirect { actor, target, .. } => {
                let a = actor.elements_opt()?;
                let b = target.elements_opt()?;
                Some(
                    a.iter()
                        .cartesian_product(b.iter())
                        .map(|(x, y)| Payload::pair(x.payload().clone(), y.payload().clone()))
                        .collect(),
                )
            }
            GroupKind::Pullback { pairs, .. } => pairs.clone(),
            GroupKind::Sub { elems, .. } => Some(elems.clone()),
            GroupKind::Quotient { reps, .. } => Some(reps.clone()),
        };
        payloads.map(|ps| ps.into_iter().map(|p| Element::new(self.clone(), p)).collect())
    }

    /// All elements of a finite carrier; errors on infinite carriers.
    pub fn elements(&self) -> Result<Vec<Element>> {
        self.elements_opt().ok_or_else(|| GroupError::NotEnumerable(self.name().into()))
    }

    /// The probe set: all elements when finite, otherwise the declared
    /// finite sample (integer interval, bounded-length words, componentwise
    /// products / filtered pairs for composite carriers).
    pub fn probe(&self, cfg: &ProbeConfig) -> Vec<Element> {
        if let Some(all) = self.elements_opt() {
            return all;
        }
        let payloads: Vec<Payload> = match self.kind() {
            GroupKind::Integers => (-cfg.int_bound..=cfg.int_bound).map(Payload::Int).collect(),
            GroupKind::Free { basis } => {
                words_up_to(basis.len(), cfg.word_len).into_iter().map(Payload::Word).collect()
            }
            GroupKind::Semidirect { actor, target, .. } => {
                // Nested composite carriers multiply probe sizes, so cap the
                // cartesian product with a seeded sample beyond the tuple
                // budget (mirrors the sampling policy of `ProbeConfig`).
                let a = actor.probe(cfg);
                let b = target.probe(cfg);
                if a.len().saturating_mul(b.len()) <= cfg.max_tuples {
                    a.iter()
                        .cartesian_product(b.iter())
                        .map(|(x, y)| Payload::pair(x.payload().clone(), y.payload().clone()))
                        .collect()
                } else {
                    use rand::{Rng, SeedableRng};
                    let mut rng =
                        rand_chacha::ChaCha8Rng::seed_from_u64(cfg.seed.wrapping_add(5));
                    (0..cfg.max_tuples)
                        .map(|_| {
                            Payload::pair(
                                a[rng.gen_range(0..a.len())].payload().clone(),
                                b[rng.gen_range(0..b.len())].payload().clone(),
                            )
                        })
                        .collect()
                }
            }
            GroupKind::Pullback { left, right, .. } => {
                let mut v = Vec::new();
                for g in left.domain().probe(cfg) {
                    let lg = left.apply(&g);
                    for m in right.domain().probe(cfg) {
                        if lg.payload() == right.apply(&m).payload() {
                            v.push(Payload::pair(g.payload().clone(), m.payload().clone()));
                        }
                    }
                }
                v
            }
            _ => unreachable!("finite carriers already handled"),
        };
        payloads.into_iter().map(|p| Element::new(self.clone(), p)).collect()
    }

    /// Membership check (payload validity for this carrier).
    pub fn contains(&self, e: &Element) -> bool {
        if e.group() != self {
            return false;
        }
        match (self.kind(), e.payload()) {
            (GroupKind::Table { names, .. }, Payload::Idx(i)) => *i < names.len(),
            (GroupKind::Cyclic { n }, Payload::Int(x)) => (0..*n).contains(x),
            (GroupKind::Integers, Payload::Int(_)) => true,
            (GroupKind::Free { basis }, Payload::Word(w)) => {
                w.letters().iter().all(|l| (l.sym as usize) < basis.len())
            }
            (GroupKind::Semidirect { actor, target, .. }, Payload::Pair(a, b)) => {
                actor.contains(&Element::new(actor.clone(), (**a).clone()))
                    && target.contains(&Element::new(target.clone(), (**b).clone()))
            }
            (GroupKind::Pullback { left, right, .. }, Payload::Pair(a, b)) => {
                let g = Element::new(left.domain().clone(), (**a).clone());
                let m = Element::new(right.domain().clone(), (**b).clone());
                left.apply(&g).payload() == right.apply(&m).payload()
            }
            (GroupKind::Sub { set, .. }, p) => set.contains(p),
            (GroupKind::Quotient { canon, .. }, p) => canon.get(p) == Some(p),
            _ => false,
        }
    }

    /// Display form of an element of this carrier.
    pub fn describe_element(&self, e: &Element) -> String {
        match (self.kind(), e.payload()) {
            (GroupKind::Table { names, .. }, Payload::Idx(i)) => names[*i].clone(),
            (GroupKind::Free { basis }, Payload::Word(w)) => {
                if w.is_empty() {
                    "ε".to_string()
                } else {
                    w.letters()
                        .iter()
                        .map(|l| {
                            let s = &basis[l.sym as usize];
                            if l.exp == 1 { s.clone() } else { format!("{s}⁻¹") }
                        })
                        .collect::<Vec<_>>()
                        .join("")
                }
            }
            (GroupKind::Semidirect { actor, target, .. }, Payload::Pair(a, b)) => format!(
                "({},{})",
                actor.describe_element(&Element::new(actor.clone(), (**a).clone())),
                target.describe_element(&Element::new(target.clone(), (**b).clone()))
            ),
            (GroupKind::Pullback { left, right, .. }, Payload::Pair(a, b)) => format!(
                "({},{})",
                left.domain().describe_element(&Element::new(left.domain().clone(), (**a).clone())),
                right
                    .domain()
                    .describe_element(&Element::new(right.domain().clone(), (**b).clone()))
            ),
            (GroupKind::Sub { parent, .. }, _) | (GroupKind::Quotient { parent, .. }, _) => {
                parent.describe_element(&Element::new(parent.clone(), e.payload().clone()))
            }
            (_, p) => format!("{p:?}"),
        }
    }

    /// Component groups of a semidirect carrier: `(actor, target, action)`.
    pub fn semidirect_parts(&self) -> (&Group, &Group, &LeftAction) {
        match self.kind() {
            GroupKind::Semidirect { actor, target, action } => (actor, target, action),
            _ => panic!("`semidirect_parts` on non-semidirect carrier `{}`", self.name()),
        }
    }

    /// Component maps of a pullback carrier: `(left, right)`.
    pub fn pullback_parts(&self) -> (&Hom, &Hom) {
        match self.kind() {
            GroupKind::Pullback { left, right, .. } => (left, right),
            _ => panic!("`pullback_parts` on non-pullback carrier `{}`", self.name()),
        }
    }

    /// The parent of a `Sub` or `Quotient` carrier.
    pub fn parent(&self) -> &Group {
        match self.kind() {
            GroupKind::Sub { parent, .. } | GroupKind::Quotient { parent, .. } => parent,
            _ => panic!("`parent` on underived carrier `{}`", self.name()),
        }
    }

    /// Basis symbol names of a free carrier.
    pub fn free_basis(&self) -> &[String] {
        match self.kind() {
            GroupKind::Free { basis } => basis,
            _ => panic!("`free_basis` on non-free carrier `{}`", self.name()),
        }
    }

    /// Exhaustive group-axiom suite over the probe set (associativity,
    /// identity, inverses), capped by `cfg.max_tuples` seeded samples when
    /// the triple product is too large.
    pub fn check_axioms(&self, cfg: &ProbeConfig) -> Result<()> {
        let probe = self.probe(cfg);
        let id = self.id();
        for x in &probe {
            if !(x.mul(&id) == *x && id.mul(x) == *x) {
                return Err(GroupError::AxiomFailure {
                    axiom: "identity".into(),
                    witness: format!("{x:?}"),
                });
            }
            let xi = x.inv();
            if !(x.mul(&xi) == id && xi.mul(x) == id) {
                return Err(GroupError::AxiomFailure {
                    axiom: "inverse".into(),
                    witness: format!("{x:?}"),
                });
            }
        }
        for (x, y, z) in cfg.triples(&probe) {
            if x.mul(&y.mul(&z)) != x.mul(&y).mul(&z) {
                return Err(GroupError::AxiomFailure {
                    axiom: "associativity".into(),
                    witness: format!("({x:?}, {y:?}, {z:?})"),
                });
            }
        }
        Ok(())
    }
}

/// All freely reduced words of length ≤ `max_len` over `n_syms` symbols,
/// shortest first, deterministic order.
pub fn words_up_to(n_syms: usize, max_len: usize) -> Vec<Word> {
    let mut out = vec![Word::empty()];
    let mut frontier = vec![Word::empty()];
    for _ in 0..max_len {
        let mut next = Vec::new();
        for w in &frontier {
            for sym in 0..n_syms as u32 {
                for exp in [1i8, -1] {
                    let l = Letter { sym, exp };
                    if w.letters().last().map(|t| t.sym == sym && t.exp == -exp).unwrap_or(false) {
                        continue;
                    }
                    let mut ls: Vec<Letter> = w.letters().to_vec();
                    ls.push(l);
                    next.push(Word::from_letters(ls));
                }
            }
        }
        out.extend(next.iter().cloned());
        frontier = next;
    }
    out
}
