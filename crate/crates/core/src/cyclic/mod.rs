//! Hochschild, cyclic, periodic and negative cyclic homology of finite
//! dimensional algebras in a window of degrees.

mod algebra;
mod group;
mod homology;
mod tsygan;
mod window;

pub use algebra::{AlgebraJson, AlgebraPresentation, FieldJson, ScalarJson};
pub use group::{conjugacy_split_hh, decomposition_check, group_homology, DecompositionReport, DecompositionRow};
pub use homology::{
    cyclic_homology, hn0_image, hochschild, hp_hn, Certificate, ClassDims, ConnesRow, CyclicReport, Hn0Image,
    HomologyReport, Theory,
};
pub use window::{Budget, CyclicWindow, Normalization};
pub use tsygan::{tsygan_hc, TSYGAN_DIM_BOUND};
