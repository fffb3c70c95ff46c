//! The free-group resolution of a 2-crossed module, the presentation of its
//! kernel, and the unpacked lax homotopy calculus.
//!
//! The resolution `Q¹(A)` replaces the bottom group of `A = (L → E → G)` by
//! the free group on the underlying set of `G` and the middle group by the
//! pullback `E ×_{∂,p} F(G)`; the result surjects back onto `A` and is free
//! up to order one with basis `[G]`. Homotopies out of `Q¹(A)` correspond to
//! *lax homotopies* out of `A` — finite tables `(ŝ, t̂, Π)` subject to five
//! equations — and this crate implements that correspondence in both
//! directions together with the calculus of lax cells: concatenation,
//! inverses, 2-fold cells, whiskering by strict morphisms, and lax homotopy
//! equivalences with bounded searches.

mod error;
mod equiv;
mod fail;
mod kernel;
mod laxhom;
mod ops;
mod q1;

pub use error::{LaxError, Result};
pub use equiv::{
    check_equivalence, compose_equivalences, enumerate_morphisms, find_lax_homotopy,
    is_lax_equivalence, search_equivalence, LaxEquivalence, SearchBounds,
};
pub use fail::{asymmetry_lax, asymmetry_lax_report};
pub use kernel::{kernel_relations_check, kernel_relations_report};
pub use laxhom::{
    lax_equations, lax_target, lax_to_strict, lax_validate, strict_to_lax, strictify, LaxHomotopy,
    Strictifier,
};
pub use ops::{
    lax_compose_strict, lax_concat, lax_invert, lax_invert_twofold, lax_twofold_validate,
    lax_vertical, lax_whisker_left, lax_whisker_right, strict_twofold, LaxTwoFold, Side,
};
pub use q1::{q1, Q1Bundle};
