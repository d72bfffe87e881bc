//! Exact computations around vacuum modules: Shapovalov-form determinants
//! for generalized Verma and vacuum modules over contragredient Lie
//! (super)algebras, Virasoro and Neveu-Schwarz vacuum determinants,
//! simplicity criteria for vacuum modules and minimal W-algebras, and
//! Kazhdan-Lusztig polynomials over crystallographic Coxeter groups.
//!
//! Everything is exact: scalars are arbitrary-precision rationals,
//! infinite products are truncated by lattice height with the cutoff
//! carried in the types, and every closed-form determinant can be checked
//! against a brute-force enveloping-algebra computation.

pub mod bareiss;
pub mod lattice;
pub mod poly;
pub mod rat;

pub use bareiss::{cofactor_det, divide_linear_factors, poly_det};
pub use lattice::{FormalCharacter, LatticeVector, SeriesError};
pub use poly::Poly;
pub use rat::{parse_rat, rat, ratz, Rat};
