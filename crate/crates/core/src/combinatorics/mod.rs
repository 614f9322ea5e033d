//! Enumerative side of the crate: partitions, permutation statistics,
//! subgroup counts of free groups and the census of permutation
//! representations.

pub mod census;
pub mod partitions;
pub mod perms;
pub mod subgroups;

pub use census::{perm_rep_census, verify_census_identities, CensusIdentities, CensusRow};
pub use partitions::{partitions, Partition};
pub use perms::{
    a_n_via_inversion, a_n_via_tuples, check_unique_factorization, connected_tuples,
    inversion_polynomial, q_factorial, Perm, PermTuple,
};
pub use subgroups::{
    hall_recursion_oracle, limit_transform, subgroup_counts, weighted_subgroup_counts,
    SubgroupCountRow,
};
