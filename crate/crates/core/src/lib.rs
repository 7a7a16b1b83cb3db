//! Exact symbolic computation around Yangians of `gl(n)` realized inside
//! enveloping algebras.
//!
//! Everything is exact: coefficients are arbitrary-precision rationals and
//! series in `u^{-1}` are carried as polynomial numerators over explicit
//! scalar denominators.
//!
//! * [`pbw`]: PBW normal ordering in `U(gl(N))` and polynomials in a central
//!   variable.
//! * [`rmatrix`]: permutation operators, R-matrices, fused products and
//!   antisymmetrizers on tensor powers of `C^n`.
//! * [`minor`]: quantum minors of `u + E`, the quantum comatrix and the
//!   bordered-minor homomorphism.
//! * [`centralizer`]: Capelli coefficients, the projection `π_n` and the
//!   bordered determinants `Φ_n`.
//! * [`glrep`]: concrete irreducible `gl(N)`-modules inside tensor powers.
//! * [`transvector`]: raising/lowering operators and the extremal projector
//!   acting on module vectors.
//! * [`elementary`]: skew diagrams, highest vectors and Drinfeld polynomials
//!   of elementary Yangian modules.
//! * [`report`]: command dispatch and machine-readable verification reports.

pub mod centralizer;
pub mod elementary;
pub mod error;
pub mod glrep;
pub mod linalg;
pub mod minor;
pub mod pbw;
pub mod report;
pub mod rmatrix;
pub mod transvector;

pub use error::{Error, Result};
pub use pbw::{GenIdx, GenOrder, PbwMonomial, UPoly, UeaElement};

/// Exact rational scalars used throughout.
pub type Rational = num_rational::BigRational;

/// Shorthand for an integer-valued rational.
pub fn q(n: i64) -> Rational {
    Rational::from_integer(n.into())
}

/// Shorthand for `num/den`.
pub fn frac(num: i64, den: i64) -> Rational {
    Rational::new(num.into(), den.into())
}
