//! Finite groups as multiplication tables: conjugacy classes, subgroup
//! lattices, centralizers, normalizers and Weyl groups.

mod group;
mod ring;
mod subgroups;
mod weyl;

pub use group::{FiniteGroup, GroupDescriptor, DEFAULT_CLOSURE_BOUND};
pub use ring::{GroupRingElem, GroupRingMatrix};
pub use subgroups::{SubgroupLattice, SubgroupRec, SUBGROUP_ORDER_BOUND};
pub use weyl::{weyl, SubgroupAutomorphism, WeylData};
