//! Exact arithmetic over `Z[q^{±1}, s^{±1}]` and its fraction field.
//!
//! Type A quantities embed with every `s`-exponent zero, so a single
//! [`Scalar`] type carries the coefficients of both flavors.

mod json;
mod poly;
mod qint;
mod rational;
mod render;

pub use poly::{Exponent, LaurentPoly};
pub use qint::{dotted_loop_value, qint, qint_b};
pub use rational::Scalar;
pub use render::{QFactor, QForm};

pub(crate) use qint::{quantum, quantum_b};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ScalarError {
    #[error("quantum integers are undefined for negative index {0}")]
    NegativeIndex(i64),
    #[error("division by zero")]
    DivisionByZero,
    #[error("zero denominator")]
    ZeroDenominator,
}

/// `[a]/[b]`.
pub fn qratio(a: usize, b: usize) -> Scalar {
    Scalar::ratio(quantum(a), &quantum(b)).expect("[b] is nonzero for b >= 1")
}

/// `[a]_s/[b]_s`.
pub fn qratio_b(a: usize, b: usize) -> Scalar {
    Scalar::ratio(quantum_b(a), &quantum_b(b)).expect("[b]_s is never zero")
}
