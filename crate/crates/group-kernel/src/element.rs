//! Element payloads and carrier-tagged group elements.
//!
//! Every element stores its owning [`Group`](crate::Group) together with a
//! [`Payload`] that is kept in normal form for that carrier:
//!
//! * finite-table carriers use an index into the element table,
//! * integer and cyclic carriers use an integer (reduced modulo `n` for
//!   cyclic carriers),
//! * free carriers use a freely reduced word,
//! * product-style carriers (semidirect products, pullbacks) use nested
//!   pairs, with longer tuples associated to the right.
//!
//! Because payloads are always normalized on construction, element equality
//! is plain payload equality, which keeps every law check syntactic.

use std::fmt;

use crate::word::Word;
use crate::Group;

/// Carrier-specific value of a group element, always in normal form.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Payload {
    /// Index into a finite element table.
    Idx(usize),
    /// Integer, used by the integer carrier and (reduced) cyclic carriers.
    Int(i64),
    /// Freely reduced word over an ordered symbol basis.
    Word(Word),
    /// Pair of component payloads (semidirect products, pullbacks).
    Pair(Box<Payload>, Box<Payload>),
}

impl Payload {
    /// Builds a pair payload.
    pub fn pair(a: Payload, b: Payload) -> Payload {
        Payload::Pair(Box::new(a), Box::new(b))
    }

    /// Splits a pair payload; panics on non-pair payloads, which indicates a
    /// carrier mix-up upstream.
    pub fn unpair(&self) -> (&Payload, &Payload) {
        match self {
            Payload::Pair(a, b) => (a, b),
            other => panic!("expected pair payload, found {other:?}"),
        }
    }
}

impl fmt::Debug for Payload {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Payload::Idx(i) => write!(f, "#{i}"),
            Payload::Int(n) => write!(f, "{n}"),
            Payload::Word(w) => write!(f, "{w:?}"),
            Payload::Pair(a, b) => write!(f, "({a:?},{b:?})"),
        }
    }
}

/// An element of a [`Group`], tagged with its carrier.
#[derive(Clone)]
pub struct Element {
    group: Group,
    payload: Payload,
}

impl Element {
    /// Wraps a payload that is already in normal form for `group`.
    ///
    /// Callers outside the crate should prefer the constructors on
    /// [`Group`]; this is the raw assembly step used by carrier
    /// implementations after normalization.
    pub fn new(group: Group, payload: Payload) -> Element {
        Element { group, payload }
    }

    /// The carrier that owns this element.
    pub fn group(&self) -> &Group {
        &self.group
    }

    /// The normal-form payload.
    pub fn payload(&self) -> &Payload {
        &self.payload
    }

    /// Consumes the element, returning its payload.
    pub fn into_payload(self) -> Payload {
        self.payload
    }

    /// Product `self * rhs` in the owning group.
    pub fn mul(&self, rhs: &Element) -> Element {
        self.group.mul(self, rhs)
    }

    /// Inverse in the owning group.
    pub fn inv(&self) -> Element {
        self.group.inv(self)
    }

    /// Conjugate `self * x * self⁻¹`.
    pub fn conj(&self, x: &Element) -> Element {
        self.mul(x).mul(&self.inv())
    }

    /// Commutator `[self, x] = self · x · self⁻¹ · x⁻¹`.
    pub fn commutator(&self, x: &Element) -> Element {
        self.mul(x).mul(&self.inv()).mul(&x.inv())
    }

    /// Whether this is the identity of its carrier.
    pub fn is_identity(&self) -> bool {
        self.payload == self.group.id().payload
    }

    /// First component of a pair-carrier element, re-tagged with the given
    /// component group.
    pub fn first(&self, component: &Group) -> Element {
        Element::new(component.clone(), self.payload.unpair().0.clone())
    }

    /// Second component of a pair-carrier element, re-tagged with the given
    /// component group.
    pub fn second(&self, component: &Group) -> Element {
        Element::new(component.clone(), self.payload.unpair().1.clone())
    }
}

impl PartialEq for Element {
    fn eq(&self, other: &Element) -> bool {
        self.payload == other.payload && self.group == other.group
    }
}

impl Eq for Element {}

impl std::hash::Hash for Element {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.payload.hash(state);
    }
}

impl fmt::Debug for Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.group.describe_element(self))
    }
}
