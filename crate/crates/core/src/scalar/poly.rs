use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

/// Exponent pair `(power of q, power of s)`.
pub type Exponent = (i32, i32);

/// Integer Laurent polynomial in `q` and `s`.
///
/// Terms are kept in a sorted map with no zero coefficients, so the zero
/// polynomial is the empty map and structural equality is polynomial equality.
#[derive(Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LaurentPoly {
    terms: BTreeMap<Exponent, BigInt>,
}

impl LaurentPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::constant(1)
    }

    pub fn constant(c: impl Into<BigInt>) -> Self {
        Self::monomial(c, 0, 0)
    }

    pub fn monomial(c: impl Into<BigInt>, eq: i32, es: i32) -> Self {
        let c = c.into();
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert((eq, es), c);
        }
        Self { terms }
    }

    pub fn q() -> Self {
        Self::monomial(1, 1, 0)
    }

    pub fn s() -> Self {
        Self::monomial(1, 0, 1)
    }

    /// Builds a polynomial from `(coefficient, q-exponent, s-exponent)` triples,
    /// summing repeated exponents.
    pub fn from_terms<I, C>(terms: I) -> Self
    where
        I: IntoIterator<Item = (C, i32, i32)>,
        C: Into<BigInt>,
    {
        let mut p = Self::zero();
        for (c, eq, es) in terms {
            p.add_term((eq, es), c.into());
        }
        p
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms.get(&(0, 0)).is_some_and(|c| c.is_one())
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in lexicographic exponent order.
    pub fn terms(&self) -> impl Iterator<Item = (&Exponent, &BigInt)> {
        self.terms.iter()
    }

    pub fn coeff(&self, e: Exponent) -> BigInt {
        self.terms.get(&e).cloned().unwrap_or_default()
    }

    /// Returns the single term if this polynomial is a monomial.
    pub fn as_monomial(&self) -> Option<(&BigInt, Exponent)> {
        if self.terms.len() == 1 {
            self.terms.iter().next().map(|(e, c)| (c, *e))
        } else {
            None
        }
    }

    /// Lexicographically smallest term.
    pub fn lowest_term(&self) -> Option<(Exponent, &BigInt)> {
        self.terms.iter().next().map(|(e, c)| (*e, c))
    }

    /// Lexicographically largest term.
    pub fn leading_term(&self) -> Option<(Exponent, &BigInt)> {
        self.terms.iter().next_back().map(|(e, c)| (*e, c))
    }

    /// Componentwise minimum exponents, `None` for zero.
    pub fn min_exponents(&self) -> Option<Exponent> {
        let mut it = self.terms.keys();
        let first = *it.next()?;
        Some(it.fold(first, |(a, b), &(x, y)| (a.min(x), b.min(y))))
    }

    /// Componentwise maximum exponents, `None` for zero.
    pub fn max_exponents(&self) -> Option<Exponent> {
        let mut it = self.terms.keys();
        let first = *it.next()?;
        Some(it.fold(first, |(a, b), &(x, y)| (a.max(x), b.max(y))))
    }

    /// Non-negative gcd of all coefficients (zero for the zero polynomial).
    pub fn content(&self) -> BigInt {
        self.terms
            .values()
            .fold(BigInt::zero(), |g, c| g.gcd(c))
    }

    /// Multiplies by the monomial `q^dq s^ds`.
    pub fn shift(&self, dq: i32, ds: i32) -> Self {
        Self {
            terms: self
                .terms
                .iter()
                .map(|(&(a, b), c)| ((a + dq, b + ds), c.clone()))
                .collect(),
        }
    }

    pub fn scale(&self, k: &BigInt) -> Self {
        if k.is_zero() {
            return Self::zero();
        }
        Self {
            terms: self.terms.iter().map(|(e, c)| (*e, c * k)).collect(),
        }
    }

    /// Divides every coefficient by `k`; caller guarantees divisibility.
    pub(crate) fn div_integer(&self, k: &BigInt) -> Self {
        Self {
            terms: self.terms.iter().map(|(e, c)| (*e, c / k)).collect(),
        }
    }

    /// The substitution `q -> q^{-1}`.
    pub fn invert_q(&self) -> Self {
        Self {
            terms: self
                .terms
                .iter()
                .map(|(&(a, b), c)| ((-a, b), c.clone()))
                .collect(),
        }
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..k {
            acc = &acc * self;
        }
        acc
    }

    fn add_term(&mut self, e: Exponent, c: BigInt) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(e) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    /// Exact quotient `self / divisor` in the Laurent ring, or `None` when
    /// the division leaves a remainder.
    ///
    /// Lex-order long division; quotient exponents are confined to the box
    /// forced by the degree bounds of both operands, which guarantees
    /// termination when the divisor does not divide.
    pub fn div_exact(&self, divisor: &LaurentPoly) -> Option<LaurentPoly> {
        let (dlead_e, dlead_c) = divisor.leading_term()?;
        if self.is_zero() {
            return Some(Self::zero());
        }
        if let Some((c, (eq, es))) = divisor.as_monomial() {
            let mut out = BTreeMap::new();
            for (&(a, b), v) in &self.terms {
                let (quo, rem) = v.div_rem(c);
                if !rem.is_zero() {
                    return None;
                }
                out.insert((a - eq, b - es), quo);
            }
            return Some(Self { terms: out });
        }
        let (smin, smax) = (self.min_exponents()?, self.max_exponents()?);
        let (dmin, dmax) = (divisor.min_exponents()?, divisor.max_exponents()?);
        let lo = (smin.0 - dmin.0, smin.1 - dmin.1);
        let hi = (smax.0 - dmax.0, smax.1 - dmax.1);
        if lo.0 > hi.0 || lo.1 > hi.1 {
            return None;
        }
        let mut rem = self.clone();
        let mut quot = Self::zero();
        while let Some((re, rc)) = rem.leading_term() {
            let e = (re.0 - dlead_e.0, re.1 - dlead_e.1);
            if e.0 < lo.0 || e.0 > hi.0 || e.1 < lo.1 || e.1 > hi.1 {
                return None;
            }
            let (c, r) = rc.div_rem(dlead_c);
            if !r.is_zero() {
                return None;
            }
            for (&(a, b), dc) in &divisor.terms {
                rem.add_term((a + e.0, b + e.1), -(dc * &c));
            }
            quot.add_term(e, c);
        }
        Some(quot)
    }
}

impl fmt::Debug for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

fn write_power(f: &mut fmt::Formatter<'_>, var: char, e: i32) -> fmt::Result {
    match e {
        0 => Ok(()),
        1 => write!(f, "{var}"),
        _ => write!(f, "{var}^{{{e}}}"),
    }
}

/// Writes the polynomial in descending term order, e.g. `q^{2}s + q^{-2}s^{-1}`.
/// The braces make the output valid inline LaTeX.
impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (k, (&(eq, es), c)) in self.terms.iter().rev().enumerate() {
            let neg = c.is_negative();
            let abs = c.abs();
            match (k, neg) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            let unit_monomial = eq != 0 || es != 0;
            if !(abs.is_one() && unit_monomial) {
                write!(f, "{abs}")?;
            }
            write_power(f, 'q', eq)?;
            write_power(f, 's', es)?;
        }
        Ok(())
    }
}

impl Add<&LaurentPoly> for &LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Add for LaurentPoly {
    type Output = LaurentPoly;
    fn add(mut self, rhs: LaurentPoly) -> LaurentPoly {
        self += &rhs;
        self
    }
}

impl AddAssign<&LaurentPoly> for LaurentPoly {
    fn add_assign(&mut self, rhs: &LaurentPoly) {
        for (e, c) in &rhs.terms {
            self.add_term(*e, c.clone());
        }
    }
}

impl Sub<&LaurentPoly> for &LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.add_term(*e, -c);
        }
        out
    }
}

impl Sub for LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: LaurentPoly) -> LaurentPoly {
        &self - &rhs
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        LaurentPoly {
            terms: self.terms.iter().map(|(e, c)| (*e, -c)).collect(),
        }
    }
}

impl Neg for LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        -&self
    }
}

impl Mul<&LaurentPoly> for &LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = LaurentPoly::zero();
        for (&(a, b), c) in &self.terms {
            for (&(x, y), d) in &rhs.terms {
                out.add_term((a + x, b + y), c * d);
            }
        }
        out
    }
}

impl Mul for LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: LaurentPoly) -> LaurentPoly {
        &self * &rhs
    }
}

impl From<i64> for LaurentPoly {
    fn from(c: i64) -> Self {
        Self::constant(c)
    }
}
