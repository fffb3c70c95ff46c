//! Exact computational groups.
//!
//! This crate is the arithmetic bedrock of the workspace: finite groups
//! given by Cayley tables, cyclic and integer carriers, free groups on a
//! finite symbol basis, and the closed constructions everything upstream is
//! assembled from — semidirect products, pullbacks, subgroup closures and
//! quotients.
//!
//! Design points:
//!
//! * every element is stored in a canonical normal form for its carrier, so
//!   equality is syntactic payload equality;
//! * all values are immutable after construction and safe to share across
//!   threads; operations are pure functions;
//! * infinite carriers (integers, free groups) expose declared finite probe
//!   sets used when checking universally quantified laws, with seeded
//!   sampling once tuple products grow past a cap (see [`ProbeConfig`]).
//!
//! The semidirect product follows the convention
//! `(g,e)(g′,e′) = (gg′, (g′⁻¹ ▷ e) e′)`, giving the inverse
//! `(g,e)⁻¹ = (g⁻¹, g ▷ e⁻¹)`.
//!
//! ```
//! use group_kernel::{Group, LeftAction, ProbeConfig};
//!
//! // Z2 acting trivially on Z2 gives a group of order 4 in which every
//! // element is its own inverse.
//! let z2 = Group::cyclic(2);
//! let v4 = Group::semidirect(&LeftAction::trivial(&z2, &z2)).unwrap();
//! assert_eq!(v4.order(), Some(4));
//! for x in v4.elements().unwrap() {
//!     assert_eq!(x.inv(), x);
//! }
//! v4.check_axioms(&ProbeConfig::default()).unwrap();
//! ```

mod action;
mod element;
mod error;
mod group;
mod hom;
mod probe;
pub mod word;

pub use action::LeftAction;
pub use element::{Element, Payload};
pub use error::{GroupError, Result};
pub use group::{words_up_to, Group, GroupKind};
pub use hom::Hom;
pub use probe::{ProbeConfig, DEFAULT_SEED};
pub use word::{Letter, Word};

/// Unique homomorphism out of a free carrier agreeing with the given basis
/// images (the universal property; evaluation is letter-by-letter with
/// inverse letters mapped to inverse images).
///
/// ```
/// use group_kernel::{hom_extend_free, Group};
///
/// let f = Group::free("F", vec!["a".into()]);
/// let z = Group::integers();
/// let h = hom_extend_free(&f, &z, vec![z.int(1)]);
/// // a³·a⁻¹ maps to 2.
/// let a = f.generator(0);
/// let w = a.mul(&a).mul(&a).mul(&a.inv());
/// assert_eq!(h.apply(&w), z.int(2));
/// ```
pub fn hom_extend_free(domain: &Group, codomain: &Group, images: Vec<Element>) -> Hom {
    Hom::extend_free(domain, codomain, images)
}
