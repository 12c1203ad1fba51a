//! Finite-group computation library: permutation groups, complete subgroup
//! lattices, the solvability hierarchy, subgroup-count classification, and
//! comaximal subgroup graphs.

pub mod catalog;
pub mod comaximal;
pub mod construct;
pub mod enforcing;
pub mod error;
pub mod group;
pub mod lattice;
pub mod perm;
pub mod props;

pub use error::{Error, Result};
pub use group::{FiniteGroup, DEFAULT_CAP};
pub use lattice::{all_subgroups, sub_count, Subgroup, SubgroupLattice};
pub use perm::Permutation;
