//! Subgroup-lattice computations for finite permutation groups: normalizers,
//! central series, subgroup embedding properties and Ω-norms (intersections
//! of normalizers over a property-defined class of subgroups), together with
//! a harness that checks identities relating them over a catalog of groups.

pub mod catalog;
pub mod cli;
pub mod context;
pub mod embedding;
pub mod error;
pub mod group;
pub mod harness;
pub mod lattice;
pub mod norms;
pub mod perm;
pub mod primes;
pub mod series;
pub mod subgroup;
pub mod sylow;

pub use context::GroupContext;
pub use embedding::Property;
pub use error::{Error, Result};
pub use group::{group_from_generators, FiniteGroup};
pub use perm::Permutation;
pub use subgroup::Subgroup;
