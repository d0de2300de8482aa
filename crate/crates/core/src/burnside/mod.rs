//! The rational Burnside ring through its table of marks, the idempotents
//! `θ_C` of cyclic groups, Mackey functors as explicit matrices, and Artin
//! defects.

mod defect;
mod mackey;
mod ring;

pub use defect::{artin_defect, induction_from_proper, theta_image, DefectReport};
pub use mackey::{
    burnside_mackey, ActionJson, ConjJson, MackeyDomain, MackeyJson, MackeyModule, MackeyParts, MapJson, ValueJson,
};
pub use ring::{theta, BurnsideElem, BurnsideRing, Inclusion, TableOfMarks};
