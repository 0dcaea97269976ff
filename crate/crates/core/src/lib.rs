//! Exceptional orthogonal polynomials: exact Wronskian constructions,
//! multiprecision zeros, and numerical checks of exceptional-zero asymptotics.

pub mod algebra;
pub mod asymptotics;
pub mod cli;
pub mod classical;
pub mod construct;
pub mod error;
pub mod roots;

pub use algebra::{MpComplex, Partition, RatPoly, Rational};
pub use error::{AlgebraError, ConstructionError, RootError, VerifyError};
