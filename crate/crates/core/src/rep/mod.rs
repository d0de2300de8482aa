//! Rational representation rings as spaces of class functions, induction
//! and restriction, Galois orbits, and central idempotents of `QC`.

mod characters;
mod galois;
mod mackey;

pub use characters::{
    class_sizes, induce, inner_product, k0_cyclic, k0_group, on_elements, ramanujan_sum, restrict, ClassFunction,
    ClassFunctionSpace, Provenance,
};
pub use galois::{central_idempotents, galois_orbits, GaloisAction, IDEMPOTENT_ORDER_BOUND};
pub use mackey::{permutation_character, rep_mackey, theta_k0_check, ThetaK0Report};
