use std::fmt::Write as _;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed};

use super::qint::{quantum, quantum_b};
use super::{LaurentPoly, Scalar};

/// A quantum-integer factor `[k]` or `[k]_s`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum QFactor {
    A(usize),
    B(usize),
}

impl QFactor {
    fn poly(self) -> LaurentPoly {
        match self {
            QFactor::A(k) => quantum(k),
            QFactor::B(k) => quantum_b(k),
        }
    }

    fn label(self) -> String {
        match self {
            QFactor::A(k) => format!("[{k}]"),
            QFactor::B(k) => format!("[{k}]_s"),
        }
    }
}

/// A scalar written as `c * prod [k]^a / prod [k]^b`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QForm {
    pub sign_negative: bool,
    pub const_num: BigInt,
    pub const_den: BigInt,
    pub num: Vec<(QFactor, u32)>,
    pub den: Vec<(QFactor, u32)>,
}

type Stripped = (BigInt, (i32, i32), Vec<(QFactor, u32)>);

/// Greedily divides out quantum integers, largest first. Returns the
/// leftover monomial `(c, eq, es)` and the factors found.
fn strip(p: &LaurentPoly) -> Option<Stripped> {
    let (lo, hi) = (p.min_exponents()?, p.max_exponents()?);
    let kmax = ((hi.0 - lo.0) / 2 + 2) as usize;
    let mut rest = p.clone();
    let mut found = Vec::new();
    let candidates = (1..=kmax)
        .rev()
        .map(QFactor::B)
        .chain((2..=kmax).rev().map(QFactor::A));
    for f in candidates {
        if rest.as_monomial().is_some() {
            break;
        }
        let fp = f.poly();
        let mut k = 0;
        while let Some(quot) = rest.div_exact(&fp) {
            rest = quot;
            k += 1;
        }
        if k > 0 {
            found.push((f, k));
        }
    }
    let (c, e) = rest.as_monomial()?;
    found.sort();
    Some((c.clone(), e, found))
}

impl QForm {
    /// Expresses `x` through quantum integers when its numerator and
    /// denominator both factor completely over them.
    pub fn of(x: &Scalar) -> Option<QForm> {
        if x.is_zero() {
            return None;
        }
        let (num, den) = x.canonical();
        let (cn, en, fnum) = strip(&num)?;
        let (cd, ed, fden) = strip(&den)?;
        if en != ed {
            return None;
        }
        let g = cn.gcd(&cd);
        let (mut a, mut b) = (cn / &g, cd / &g);
        let negative = a.is_negative() != b.is_negative();
        a = a.abs();
        b = b.abs();
        Some(QForm {
            sign_negative: negative,
            const_num: a,
            const_den: b,
            num: fnum,
            den: fden,
        })
    }

    fn product(factors: &[(QFactor, u32)], latex: bool) -> String {
        let mut out = String::new();
        for &(f, k) in factors {
            out.push_str(&f.label());
            if k > 1 {
                if latex {
                    let _ = write!(out, "^{{{k}}}");
                } else {
                    let _ = write!(out, "^{k}");
                }
            }
        }
        out
    }

    fn parts(&self, latex: bool) -> (String, String) {
        let mut num = String::new();
        if !self.const_num.is_one() || self.num.is_empty() {
            num.push_str(&self.const_num.to_string());
        }
        num.push_str(&Self::product(&self.num, latex));
        let mut den = String::new();
        if !self.const_den.is_one() {
            den.push_str(&self.const_den.to_string());
        }
        den.push_str(&Self::product(&self.den, latex));
        (num, den)
    }

    pub fn to_latex(&self) -> String {
        let sign = if self.sign_negative { "-" } else { "" };
        let (num, den) = self.parts(true);
        if den.is_empty() {
            format!("{sign}{num}")
        } else {
            format!("{sign}\\frac{{{num}}}{{{den}}}")
        }
    }

    pub fn to_text(&self) -> String {
        let sign = if self.sign_negative { "-" } else { "" };
        let (num, den) = self.parts(false);
        let multi = self.den.len() + usize::from(!self.const_den.is_one()) > 1
            || self.den.iter().any(|&(_, k)| k > 1);
        match (den.is_empty(), multi) {
            (true, _) => format!("{sign}{num}"),
            (false, false) => format!("{sign}{num}/{den}"),
            (false, true) => format!("{sign}{num}/({den})"),
        }
    }
}

impl Scalar {
    /// Quantum-integer form when available, else `\frac{num}{den}` with raw
    /// polynomials.
    pub fn to_latex(&self) -> String {
        if let Some(form) = QForm::of(self) {
            return form.to_latex();
        }
        let (num, den) = self.canonical();
        if den.is_one() {
            format!("{num}")
        } else {
            format!("\\frac{{{num}}}{{{den}}}")
        }
    }

    /// Quantum-integer form when available, else the raw fraction.
    pub fn to_text(&self) -> String {
        match QForm::of(self) {
            Some(form) => form.to_text(),
            None => self.to_raw_string(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{qratio, qratio_b};

    #[test]
    fn recognizes_quantum_fractions() {
        assert_eq!(qratio(2, 3).to_text(), "[2]/[3]");
        assert_eq!(qratio(1, 2).to_latex(), "\\frac{1}{[2]}");
        let ex = &(&Scalar::from_poly(quantum(2)) * &qratio_b(1, 4)) * &qratio_b(0, 2);
        assert_eq!(ex.to_text(), "[2][1]_s/([2]_s[4]_s)");
        assert_eq!(ex.to_latex(), "\\frac{[2][1]_s}{[2]_s[4]_s}");
        assert_eq!(Scalar::one().to_text(), "1");
        assert_eq!((-&qratio(1, 2)).to_text(), "-1/[2]");
        let two = &qratio(1, 2) + &qratio(1, 2);
        assert_eq!(two.to_text(), "2/[2]");
    }

    #[test]
    fn falls_back_to_raw() {
        let odd = Scalar::ratio(LaurentPoly::one(), &LaurentPoly::from_terms([(1, 1, 0), (2, 0, 0)])).unwrap();
        assert_eq!(odd.to_text(), "(1)/(q + 2)");
        assert_eq!(odd.to_latex(), "\\frac{1}{q + 2}");
    }
}
