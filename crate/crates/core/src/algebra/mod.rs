//! Exact algebra: scalars, dense polynomials, quasi-functions and partitions.

pub mod partition;
pub mod poly;
pub mod quasi;
pub mod scalar;

pub use partition::Partition;
pub use poly::{poly_arith, ComplexPoly, DensePoly, PolyOp, RatPoly, ScalarPoly};
pub use quasi::{extract_polynomial, quasi_derivative, wronskian_det, Carrier, QuasiFunction};
pub use scalar::{parse_complex, parse_rational, MpComplex, Rational};
