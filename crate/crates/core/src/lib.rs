//! Heegaard genus and irreducible Heegaard splittings of torus bundles over
//! the circle with Anosov monodromy, decided in exact integer arithmetic.

pub mod algebra;
pub mod centralizer;
pub mod classification;
pub mod commensurability;
pub mod conjugacy;
pub mod error;
pub mod figure;
pub mod forms;
pub mod geometry;

pub use algebra::{
    apply, intersection_number, is_anosov, mat_pow, monodromy_form, power_trace, IntMatrix2,
    MonodromyForm, PrimitiveSlope,
};
pub use error::{Error, Result};
