//! Exact elimination theory over the rationals.

pub type Rational = num_rational::BigRational;

pub mod discriminant;
pub mod enumerative;
pub mod error;
pub mod instances;
pub mod interp;
pub mod linalg;
pub mod poly;
pub mod random;
pub mod rational;
pub mod reduced;
pub mod report;
pub mod resultant;
pub mod salmon;
pub mod verify;

pub use error::{ElimError, Result};
pub use poly::{ExponentVector, Polynomial};
