//! Exact arithmetic: arbitrary-precision rationals, determinants and
//! univariate polynomials over the rationals.
//!
//! Nothing in the core crate touches floating point; every identity checked
//! downstream is an equality of canonical rationals or of coefficient
//! sequences.

mod det;
mod poly;
mod rational;

pub use det::det;
pub use poly::{poly_eval, poly_interpolate, Poly};
pub use rational::Rational;

/// `n!` as a rational.
pub fn factorial(n: usize) -> Rational {
    (1..=n as i64).fold(Rational::one(), |acc, k| acc * Rational::from(k))
}
