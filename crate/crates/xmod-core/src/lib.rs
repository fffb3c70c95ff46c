//! Pre-crossed, crossed, and 2-crossed modules over the carriers of
//! `group-kernel`, together with law verification and homotopy groups.
//!
//! A 2-crossed module is a length-two complex of groups `L → E → G` in which
//! `G` acts on everything, with a *Peiffer lifting* `{,}: E × E → L` that
//! witnesses the failure of the second Peiffer relation at the top level.
//! The six defining axioms and a battery of derived identities are checked
//! over finite probe sets, producing [`VerificationReport`]s with explicit
//! witnesses on failure.
//!
//! ```
//! use group_kernel::ProbeConfig;
//! use xmod_core::{fixtures, verify_two_crossed, rnn_suite};
//!
//! let cfg = ProbeConfig::default();
//! let d = fixtures::fix_d(); // A3 → S3 → 1 with the commutator lifting
//! assert!(verify_two_crossed(&d, &cfg).passed());
//! assert!(rnn_suite(&d, &cfg).passed());
//! ```
//!
//! Homotopy groups are computed where the carriers allow it:
//!
//! ```
//! use xmod_core::{fixtures, homotopy_groups};
//!
//! let pis = homotopy_groups(&fixtures::fix_d()).unwrap();
//! assert_eq!(pis.orders(), (Some(1), Some(2), Some(1)));
//! ```

pub mod fixtures;
mod ops;
mod report;
mod types;
mod verify;

pub use ops::{homotopy_groups, kernel_central_witness, peiffer_lift_from_precrossed, HomotopyGroups};
pub use report::{Failure, VerificationReport};
pub use types::{Lifting, PreCrossedModule, TwoCrossedModule, XModMorphism};
pub use verify::{rnn_suite, verify_crossed, verify_precrossed, verify_two_crossed, xmod_map_verify};
