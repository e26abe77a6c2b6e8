use super::{LaurentPoly, ScalarError};

/// Balanced quantum integer `[n] = q^{n-1} + q^{n-3} + ... + q^{1-n}`.
pub fn qint(n: i64) -> Result<LaurentPoly, ScalarError> {
    let n = usize::try_from(n).map_err(|_| ScalarError::NegativeIndex(n))?;
    Ok(quantum(n))
}

/// Type-B quantum integer: `[0]_s = 1`, `[n]_s = q^{n-1}s + q^{1-n}s^{-1}`.
pub fn qint_b(n: i64) -> Result<LaurentPoly, ScalarError> {
    let n = usize::try_from(n).map_err(|_| ScalarError::NegativeIndex(n))?;
    Ok(quantum_b(n))
}

pub(crate) fn quantum(n: usize) -> LaurentPoly {
    let n = n as i32;
    LaurentPoly::from_terms((0..n).map(|k| (1, n - 1 - 2 * k, 0)))
}

pub(crate) fn quantum_b(n: usize) -> LaurentPoly {
    if n == 0 {
        return LaurentPoly::one();
    }
    let e = n as i32 - 1;
    LaurentPoly::from_terms([(1, e, 1), (1, -e, -1)])
}

/// Factor carried by a closed loop with a dot: `q s^{-1} + q^{-1} s`.
pub fn dotted_loop_value() -> LaurentPoly {
    LaurentPoly::from_terms([(1, 1, -1), (1, -1, 1)])
}
