//! Homotopies between morphisms of 2-crossed modules and the 2-groupoid
//! they generate.
//!
//! A homotopy from `f` to `f′` is a *quadratic derivation*: a pair of maps
//! `s : G → E′`, `t : E → L′` twisted-multiplicative along `f`, packaged
//! equivalently as a morphism into the path space of the target. This crate
//! provides:
//!
//! * [`DerivationMap`] / [`PointMap`] — dual representations of `s` and `t`
//!   (explicit tables over finite carriers, basis images over free ones,
//!   with evaluation through unique homomorphic extensions);
//! * [`is_quadratic_derivation`] / [`homotopy_target`] — the law suite and
//!   the induced target morphism;
//! * [`omega`] — the correction term of two consecutive homotopies,
//!   computed homomorphically through the double path space and *always*
//!   cross-checked against an independent recursion (disagreement is a hard
//!   error);
//! * [`concat_homotopies`], [`invert_homotopy`] — groupoid structure on
//!   homotopies over a free base;
//! * [`Quadratic2Derivation`] and friends — 2-cells, their vertical
//!   category, whiskering, and interchange;
//! * [`build_hom2groupoid`] — law verification over enumerated cells;
//! * [`asymmetry_homotopy`] — the counterexample showing the homotopy
//!   relation is not symmetric over non-free bases.

mod concat;
mod ctx;
mod derivation;
mod error;
mod fail;
mod groupoid;
mod omega;
mod twofold;
mod util;
mod whisker;

pub use concat::{concat_homotopies, inverse_pair_report, invert_homotopy};
pub use derivation::{
    compose_strict_left, compose_strict_right, extend_derivation, extend_t_free, homotopy_target,
    is_quadratic_derivation, DerivationMap, Homotopy, PointMap, QuadraticDerivation,
};
pub use error::{HomotopyError, Result};
pub use fail::{asymmetry_forward_report, asymmetry_homotopy, asymmetry_reverse_search};
pub use groupoid::{build_hom2groupoid, Cell1, Cell2, Hom2Groupoid};
pub use omega::{
    concat_derivations, omega, omega_base, omega_composition_report, theta, OmegaData,
};
pub use twofold::{
    extend_2derivation, invert_twofold, is_quadratic_2derivation, twofold_target,
    vertical_compose, xi, Quadratic2Derivation, TwoDerivationMap,
};
pub use util::{morphisms_agree, probe_words};
pub use whisker::{
    interchange_check, whisker_left, whisker_left_report, whisker_right, whisker_right_report,
};
