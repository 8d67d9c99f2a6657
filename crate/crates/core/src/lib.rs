//! Jack polynomials, closed-form eigenvalues of the determinant kernels
//! `det(1 - z u*)^{σ|τ}` on the compact symmetric spaces `U(n)`, `U(n)/O(n)`
//! and `U(2n)/Sp(n)`, and certification of definiteness of the associated
//! invariant Hermitian forms.
//!
//! The exact algebra (signatures, symmetric Laurent polynomials, Jack
//! polynomials) is generic over the coefficient field through [`Scalar`];
//! the numerical oracles are generic over [`num_traits::Float`]. The aliases
//! below fix the instantiations used throughout the crate.

pub mod error;
pub mod gammaval;
pub mod jack;
pub mod kernel;
pub mod oracle;
pub mod partitions;
pub mod positivity;
pub mod scalar;
pub mod sobolev;
pub mod sympoly;

pub use error::{Error, Result};
pub use gammaval::{ExactValue, SignedValue};
pub use kernel::{KernelSpec, Space};
pub use partitions::Signature;
pub use scalar::{Rational, Real, Scalar};

/// Exact symmetric Laurent polynomial.
pub type SymPoly = sympoly::LaurentSymPoly<Rational>;
/// Exact Laurent polynomial in `n` variables.
pub type Poly = sympoly::LaurentPoly<Rational>;
/// Jack polynomial with exact rational coefficients.
pub type Jack = jack::JackPolynomial<Rational>;
/// Double-precision symmetric Laurent polynomial.
pub type SymPoly64 = sympoly::LaurentSymPoly<f64>;
/// Double-precision Laurent polynomial.
pub type Poly64 = sympoly::LaurentPoly<f64>;
/// Jack polynomial with double-precision coefficients.
pub type Jack64 = jack::JackPolynomial<f64>;
/// Complex double used by the quadrature oracles.
pub type Complex64 = num_complex::Complex<f64>;
