use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::OnceLock;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed};

use super::{LaurentPoly, ScalarError};

/// Element of the fraction field of `Z[q^{±1}, s^{±1}]`.
///
/// The denominator is held as a positive integer times a multiset of
/// normalized polynomial factors (shifted to minimal exponents zero,
/// primitive, positive lowest coefficient). Monomials and signs live in the
/// numerator. Every operation cancels denominator factors that divide the
/// numerator exactly, so sums of quantum-integer fractions stay small without
/// a multivariate gcd.
///
/// Equality is by cross-multiplication.
#[derive(Clone)]
pub struct Scalar {
    num: LaurentPoly,
    den_const: BigInt,
    den: BTreeMap<LaurentPoly, u32>,
}

/// `p = unit * q^a s^b * prim` with `prim` normalized.
struct Normalized {
    unit: BigInt,
    shift: (i32, i32),
    prim: LaurentPoly,
}

fn normalize(p: &LaurentPoly) -> Normalized {
    let (mq, ms) = p.min_exponents().expect("normalize of zero polynomial");
    let shifted = p.shift(-mq, -ms);
    let mut unit = shifted.content();
    if shifted.lowest_term().is_some_and(|(_, c)| c.is_negative()) {
        unit = -unit;
    }
    let prim = shifted.div_integer(&unit);
    Normalized {
        unit,
        shift: (mq, ms),
        prim,
    }
}

/// `Phi_m(q)` from `q^m - 1` divided by every `Phi_d` with `d | m`, `d < m`.
fn cyclotomic_from(m: usize, lower: &dyn Fn(usize) -> LaurentPoly) -> LaurentPoly {
    let mut p = LaurentPoly::from_terms([(1, m as i32, 0), (-1, 0, 0)]);
    for d in (1..m).filter(|d| m.is_multiple_of(*d)) {
        p = p.div_exact(&lower(d)).expect("cyclotomic division");
    }
    normalize(&p).prim
}

const CYCLOTOMIC_TABLE: usize = 64;

/// `Phi_m(q)`, normalized. Indices up to a fixed bound come from a table
/// built once and never modified.
fn cyclotomic(m: usize) -> LaurentPoly {
    static TABLE: OnceLock<Vec<LaurentPoly>> = OnceLock::new();
    let table = TABLE.get_or_init(|| {
        let mut t: Vec<LaurentPoly> = vec![LaurentPoly::zero()];
        for k in 1..=CYCLOTOMIC_TABLE {
            let p = cyclotomic_from(k, &|d| t[d].clone());
            t.push(p);
        }
        t
    });
    match table.get(m) {
        Some(p) => p.clone(),
        None => cyclotomic_from(m, &cyclotomic),
    }
}

fn euler_phi(m: usize) -> usize {
    (1..=m).filter(|k| k.gcd(&m) == 1).count()
}

/// Candidate irreducible factors tried before a leftover factor is kept as
/// is: cyclotomic polynomials in `q` and the binomials `q^a s^2 + 1`,
/// `s^2 + q^b` that normalize `[n]_s` and the dotted-loop value.
fn atom_candidates(prim: &LaurentPoly) -> Vec<LaurentPoly> {
    let Some((dq, ds)) = prim.max_exponents() else {
        return Vec::new();
    };
    let mut out = Vec::new();
    if ds >= 2 {
        for a in 0..=dq {
            out.push(LaurentPoly::from_terms([(1, a, 2), (1, 0, 0)]));
        }
        for b in 1..=dq {
            out.push(LaurentPoly::from_terms([(1, 0, 2), (1, b, 0)]));
        }
    }
    let bound = dq as usize + 2;
    for m in 1..=bound {
        if euler_phi(m) <= dq as usize {
            out.push(cyclotomic(m));
        }
    }
    out
}

/// Splits a nonzero polynomial into `unit * monomial * prod(factors)`.
fn factorize(p: &LaurentPoly) -> (BigInt, (i32, i32), BTreeMap<LaurentPoly, u32>) {
    let Normalized { unit, shift, prim } = normalize(p);
    let mut factors = BTreeMap::new();
    let mut rest = prim;
    if rest.is_one() {
        return (unit, shift, factors);
    }
    for atom in atom_candidates(&rest) {
        while let Some(quot) = rest.div_exact(&atom) {
            *factors.entry(atom.clone()).or_insert(0) += 1;
            rest = quot;
        }
        if rest.is_one() {
            break;
        }
    }
    if !rest.is_one() {
        let Normalized {
            unit: u,
            shift: (a, b),
            prim,
        } = normalize(&rest);
        debug_assert!(u.is_one() && a == 0 && b == 0);
        *factors.entry(prim).or_insert(0) += 1;
    }
    (unit, shift, factors)
}

fn expand(factors: &BTreeMap<LaurentPoly, u32>, skip: Option<&BTreeMap<LaurentPoly, u32>>) -> LaurentPoly {
    let mut acc = LaurentPoly::one();
    for (f, &k) in factors {
        let have = skip.and_then(|s| s.get(f)).copied().unwrap_or(0);
        for _ in have..k {
            acc = &acc * f;
        }
    }
    acc
}

impl Scalar {
    pub fn zero() -> Self {
        Self::from_poly(LaurentPoly::zero())
    }

    pub fn one() -> Self {
        Self::from_poly(LaurentPoly::one())
    }

    pub fn from_int(c: i64) -> Self {
        Self::from_poly(LaurentPoly::constant(c))
    }

    pub fn from_poly(num: LaurentPoly) -> Self {
        Self {
            num,
            den_const: BigInt::one(),
            den: BTreeMap::new(),
        }
    }

    /// `num / den`; fails with [`ScalarError::ZeroDenominator`] when `den = 0`.
    pub fn ratio(num: LaurentPoly, den: &LaurentPoly) -> Result<Self, ScalarError> {
        if den.is_zero() {
            return Err(ScalarError::ZeroDenominator);
        }
        Ok(&Self::from_poly(num) * &Self::from_poly(den.clone()).inv()?)
    }

    /// Rebuilds a scalar from a serialized `(num, den)` pair.
    pub fn from_parts(num: LaurentPoly, den: LaurentPoly) -> Result<Self, ScalarError> {
        Self::ratio(num, &den)
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.den.is_empty() && self.den_const.is_one() && self.num.is_one()
    }

    /// Numerator of the canonical form.
    pub fn numerator(&self) -> &LaurentPoly {
        &self.num
    }

    /// Denominator of the canonical form, multiplied out.
    pub fn denominator(&self) -> LaurentPoly {
        expand(&self.den, None).scale(&self.den_const)
    }

    /// Canonical `(num, den)`: `den` has minimal q- and s-exponents zero and
    /// a positive coefficient at its lexicographically smallest exponent,
    /// and the joint integer content of `num` and `den` is one.
    pub fn canonical(&self) -> (LaurentPoly, LaurentPoly) {
        (self.num.clone(), self.denominator())
    }

    pub fn inv(&self) -> Result<Self, ScalarError> {
        if self.num.is_zero() {
            return Err(ScalarError::DivisionByZero);
        }
        let (unit, (a, b), factors) = factorize(&self.num);
        let mut num = expand(&self.den, None).scale(&self.den_const).shift(-a, -b);
        let mut den_const = unit;
        if den_const.is_negative() {
            den_const = -den_const;
            num = -num;
        }
        Ok(Self {
            num,
            den_const,
            den: factors,
        }
        .reduced())
    }

    pub fn div(&self, rhs: &Scalar) -> Result<Self, ScalarError> {
        Ok(self * &rhs.inv()?)
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..k {
            acc = &acc * self;
        }
        acc
    }

    fn reduced(mut self) -> Self {
        if self.num.is_zero() {
            return Self::zero();
        }
        for (f, k) in self.den.iter_mut() {
            while *k > 0 {
                match self.num.div_exact(f) {
                    Some(quot) => {
                        self.num = quot;
                        *k -= 1;
                    }
                    None => break,
                }
            }
        }
        self.den.retain(|_, k| *k > 0);
        let g = self.num.content().gcd(&self.den_const);
        if !g.is_one() {
            self.num = self.num.div_integer(&g);
            self.den_const /= g;
        }
        self
    }

    fn same_denominator(&self, other: &Scalar) -> bool {
        self.den_const == other.den_const && self.den == other.den
    }

    /// Renders `num/den` with raw polynomials.
    pub fn to_raw_string(&self) -> String {
        let (n, d) = self.canonical();
        if d.is_one() {
            format!("{n}")
        } else {
            format!("({n})/({d})")
        }
    }
}

impl Default for Scalar {
    fn default() -> Self {
        Self::zero()
    }
}

impl From<LaurentPoly> for Scalar {
    fn from(p: LaurentPoly) -> Self {
        Self::from_poly(p)
    }
}

impl From<i64> for Scalar {
    fn from(c: i64) -> Self {
        Self::from_int(c)
    }
}

impl PartialEq for Scalar {
    fn eq(&self, other: &Self) -> bool {
        if self.same_denominator(other) {
            return self.num == other.num;
        }
        if self.num.is_zero() || other.num.is_zero() {
            return self.num.is_zero() && other.num.is_zero();
        }
        let lhs = (&self.num * &expand(&other.den, None)).scale(&other.den_const);
        let rhs = (&other.num * &expand(&self.den, None)).scale(&self.den_const);
        lhs == rhs
    }
}

impl Eq for Scalar {}

impl fmt::Debug for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_raw_string())
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_raw_string())
    }
}

impl Add<&Scalar> for &Scalar {
    type Output = Scalar;
    fn add(self, rhs: &Scalar) -> Scalar {
        if self.is_zero() {
            return rhs.clone();
        }
        if rhs.is_zero() {
            return self.clone();
        }
        if self.same_denominator(rhs) {
            return Scalar {
                num: &self.num + &rhs.num,
                den_const: self.den_const.clone(),
                den: self.den.clone(),
            }
            .reduced();
        }
        let mut den = self.den.clone();
        for (f, &k) in &rhs.den {
            let e = den.entry(f.clone()).or_insert(0);
            *e = (*e).max(k);
        }
        let den_const = self.den_const.lcm(&rhs.den_const);
        let left = (&self.num * &expand(&den, Some(&self.den))).scale(&(&den_const / &self.den_const));
        let right = (&rhs.num * &expand(&den, Some(&rhs.den))).scale(&(&den_const / &rhs.den_const));
        Scalar {
            num: left + right,
            den_const,
            den,
        }
        .reduced()
    }
}

impl Add for Scalar {
    type Output = Scalar;
    fn add(self, rhs: Scalar) -> Scalar {
        &self + &rhs
    }
}

impl Sub<&Scalar> for &Scalar {
    type Output = Scalar;
    fn sub(self, rhs: &Scalar) -> Scalar {
        self + &(-rhs)
    }
}

impl Sub for Scalar {
    type Output = Scalar;
    fn sub(self, rhs: Scalar) -> Scalar {
        &self - &rhs
    }
}

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        Scalar {
            num: -&self.num,
            den_const: self.den_const.clone(),
            den: self.den.clone(),
        }
    }
}

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        -&self
    }
}

impl Mul<&Scalar> for &Scalar {
    type Output = Scalar;
    fn mul(self, rhs: &Scalar) -> Scalar {
        if self.is_zero() || rhs.is_zero() {
            return Scalar::zero();
        }
        let mut den = self.den.clone();
        for (f, &k) in &rhs.den {
            *den.entry(f.clone()).or_insert(0) += k;
        }
        Scalar {
            num: &self.num * &rhs.num,
            den_const: &self.den_const * &rhs.den_const,
            den,
        }
        .reduced()
    }
}

impl Mul for Scalar {
    type Output = Scalar;
    fn mul(self, rhs: Scalar) -> Scalar {
        &self * &rhs
    }
}

impl Mul<&LaurentPoly> for &Scalar {
    type Output = Scalar;
    fn mul(self, rhs: &LaurentPoly) -> Scalar {
        if rhs.is_zero() || self.is_zero() {
            return Scalar::zero();
        }
        Scalar {
            num: &self.num * rhs,
            den_const: self.den_const.clone(),
            den: self.den.clone(),
        }
        .reduced()
    }
}
