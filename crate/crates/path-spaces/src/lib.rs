//! Path, triangle, disk, and tetrahedron spaces over a 2-crossed module.
//!
//! Given a 2-crossed module `A = (L → E → G)`, this crate builds:
//!
//! * the path space `𝒫(A)`, a new 2-crossed module on semidirect-product
//!   carriers, together with its two projections and inclusion
//!   ([`path_space`]);
//! * the induced morphism `𝒫(f)` of path spaces ([`path_space_map`]);
//! * the double path space `𝒫(𝒫(A))` with its four faces, cross-checked
//!   against explicit coordinate formulas ([`double_faces`]);
//! * the triangle space, the constrained sub-carriers of the double path
//!   space ([`triangle_space`]);
//! * the disk space, a 2-crossed module embedding into the double path
//!   space ([`disk_space`]);
//! * the tetrahedron carrier over the triangle space ([`tetra_group`]).
//!
//! ```
//! use group_kernel::ProbeConfig;
//! use xmod_core::{fixtures, verify_two_crossed};
//! use path_spaces::path_space;
//!
//! let a = fixtures::fix_d();
//! let p = path_space(&a);
//! let cfg = ProbeConfig::default();
//! assert!(verify_two_crossed(&p.total, &cfg).passed());
//! // Both projections retract the inclusion of constant paths.
//! for g in a.g.elements().unwrap() {
//!     let c = p.incl.phi.apply(&g);
//!     assert_eq!(p.pr0.phi.apply(&c), g);
//!     assert_eq!(p.pr1.phi.apply(&c), g);
//! }
//! ```

pub mod bundle;
pub mod carriers;
pub mod disk;
pub mod faces;
pub mod tetra;
pub mod triangle;

pub use bundle::{path_space, path_space_map, PathSpaceBundle};
pub use carriers::{derived_action, PathCarriers};
pub use disk::{disk_space, DiskSpace};
pub use faces::{double_faces, DoubleFaces};
pub use tetra::{tetra_check, tetra_group, TetraGroup};
pub use triangle::{
    beta_prime, face0, face1, is_triangle0, is_triangle1, techlemma_bijection, triangle_space,
    TriangleSpace,
};
