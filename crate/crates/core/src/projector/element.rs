use std::collections::BTreeMap;

use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::ProjectorError;
use crate::diagram::{compose_raw, Diagram, Flavor};
use crate::scalar::{LaurentPoly, Scalar};

/// A formal combination of `n`-strand basis diagrams. Zero coefficients are
/// never stored, so equality is key-wise scalar equality.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Element {
    flavor: Flavor,
    n: usize,
    terms: BTreeMap<Diagram, Scalar>,
}

impl Element {
    pub fn zero(flavor: Flavor, n: usize) -> Self {
        Self {
            flavor,
            n,
            terms: BTreeMap::new(),
        }
    }

    pub fn identity(flavor: Flavor, n: usize) -> Self {
        Self::basis(flavor, Diagram::identity(n))
    }

    pub fn generator(flavor: Flavor, n: usize, i: usize) -> Result<Self, ProjectorError> {
        Ok(Self::basis(flavor, Diagram::generator(flavor, n, i)?))
    }

    /// The single diagram `d` with coefficient one.
    pub fn from_diagram(flavor: Flavor, d: Diagram) -> Result<Self, ProjectorError> {
        d.check_flavor(flavor)?;
        Ok(Self::basis(flavor, d))
    }

    /// Builds an element from `(diagram, coefficient)` pairs, summing repeats.
    pub fn from_terms<I>(flavor: Flavor, n: usize, terms: I) -> Result<Self, ProjectorError>
    where
        I: IntoIterator<Item = (Diagram, Scalar)>,
    {
        let mut out = Self::zero(flavor, n);
        for (d, c) in terms {
            d.check_flavor(flavor)?;
            if d.n() != n {
                return Err(ProjectorError::SizeMismatch(n, d.n()));
            }
            out.accumulate(d, c);
        }
        out.prune();
        Ok(out)
    }

    fn basis(flavor: Flavor, d: Diagram) -> Self {
        let n = d.n();
        Self {
            flavor,
            n,
            terms: BTreeMap::from([(d, Scalar::one())]),
        }
    }

    pub fn flavor(&self) -> Flavor {
        self.flavor
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Terms in canonical diagram order.
    pub fn terms(&self) -> &BTreeMap<Diagram, Scalar> {
        &self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Coefficient of `d`, zero when absent.
    pub fn coeff(&self, d: &Diagram) -> Result<Scalar, ProjectorError> {
        d.check_flavor(self.flavor)?;
        if d.n() != self.n {
            return Err(ProjectorError::SizeMismatch(self.n, d.n()));
        }
        Ok(self.terms.get(d).cloned().unwrap_or_default())
    }

    fn check_same(&self, other: &Element) -> Result<(), ProjectorError> {
        if self.flavor != other.flavor {
            return Err(ProjectorError::FlavorMismatch(self.flavor, other.flavor));
        }
        if self.n != other.n {
            return Err(ProjectorError::SizeMismatch(self.n, other.n));
        }
        Ok(())
    }

    fn accumulate(&mut self, d: Diagram, c: Scalar) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&d) {
            Some(slot) => *slot = &*slot + &c,
            None => {
                self.terms.insert(d, c);
            }
        }
    }

    fn prune(&mut self) {
        self.terms.retain(|_, c| !c.is_zero());
    }

    pub fn add(&self, other: &Element) -> Result<Element, ProjectorError> {
        self.check_same(other)?;
        let mut out = self.clone();
        for (d, c) in &other.terms {
            out.accumulate(d.clone(), c.clone());
        }
        out.prune();
        Ok(out)
    }

    pub fn sub(&self, other: &Element) -> Result<Element, ProjectorError> {
        self.add(&other.scalar_mul(&Scalar::from_int(-1)))
    }

    pub fn scalar_mul(&self, k: &Scalar) -> Element {
        let mut out = Self::zero(self.flavor, self.n);
        if k.is_zero() {
            return out;
        }
        out.terms = self.terms.iter().map(|(d, c)| (d.clone(), c * k)).collect();
        out
    }

    /// Product `self * other`, with `self` stacked on top.
    pub fn mul(&self, other: &Element) -> Result<Element, ProjectorError> {
        self.check_same(other)?;
        // Group by result diagram first so each coefficient is assembled
        // from polynomial factors before any rational addition.
        let mut buckets: BTreeMap<Diagram, Vec<(&Scalar, &Scalar, LaurentPoly)>> = BTreeMap::new();
        for (d1, c1) in &self.terms {
            for (d2, c2) in &other.terms {
                let (factor, d) = compose_raw(d1, d2)?;
                buckets.entry(d).or_default().push((c1, c2, factor));
            }
        }
        let mut out = Self::zero(self.flavor, self.n);
        for (d, parts) in buckets {
            let mut acc = Scalar::zero();
            for (c1, c2, f) in parts {
                acc = &acc + &(&(c1 * c2) * &f);
            }
            out.accumulate(d, acc);
        }
        out.prune();
        Ok(out)
    }

    /// Adds vertical strands on the right up to `m` strands.
    pub fn extend(&self, m: usize) -> Result<Element, ProjectorError> {
        if m < self.n {
            return Err(ProjectorError::SizeMismatch(self.n, m));
        }
        let mut out = Self::zero(self.flavor, m);
        for (d, c) in &self.terms {
            out.terms.insert(d.extend(m)?, c.clone());
        }
        Ok(out)
    }
}

#[derive(Serialize, Deserialize)]
struct TermRepr {
    arcs: Vec<(u32, u32)>,
    dots: Vec<(u32, u32)>,
    coeff: Scalar,
}

#[derive(Serialize, Deserialize)]
struct ElementRepr {
    flavor: String,
    n: usize,
    terms: Vec<TermRepr>,
}

impl Serialize for Element {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        ElementRepr {
            flavor: self.flavor.to_string(),
            n: self.n,
            terms: self
                .terms
                .iter()
                .map(|(d, c)| TermRepr {
                    arcs: d.arcs().to_vec(),
                    dots: d.dots().to_vec(),
                    coeff: c.clone(),
                })
                .collect(),
        }
        .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for Element {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let raw = ElementRepr::deserialize(deserializer)?;
        let flavor = match raw.flavor.as_str() {
            "A" => Flavor::A,
            "B" => Flavor::B,
            other => return Err(D::Error::custom(format!("unknown flavor {other:?}"))),
        };
        let mut terms = Vec::with_capacity(raw.terms.len());
        for t in raw.terms {
            let d = Diagram::new(raw.n, t.arcs, t.dots).map_err(D::Error::custom)?;
            terms.push((d, t.coeff));
        }
        Element::from_terms(flavor, raw.n, terms).map_err(D::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::qratio;

    fn e(n: usize, i: usize) -> Element {
        Element::generator(Flavor::A, n, i).unwrap()
    }

    #[test]
    fn generator_squares() {
        let e1 = e(2, 1);
        let minus_two = Scalar::from_poly(-LaurentPoly::from_terms([(1, 1, 0), (1, -1, 0)]));
        assert_eq!(e1.mul(&e1).unwrap(), e1.scalar_mul(&minus_two));
    }

    #[test]
    fn additive_inverse_and_unit() {
        let x = Element::identity(Flavor::A, 3)
            .add(&e(3, 1).scalar_mul(&qratio(1, 2)))
            .unwrap();
        assert!(x.sub(&x).unwrap().is_zero());
        assert_eq!(Element::identity(Flavor::A, 3).mul(&x).unwrap(), x);
    }

    #[test]
    fn extend_generator() {
        assert_eq!(e(2, 1).extend(3).unwrap(), e(3, 1));
        assert_eq!(Element::identity(Flavor::B, 2).extend(3).unwrap(), Element::identity(Flavor::B, 3));
        assert!(e(3, 1).extend(2).is_err());
    }

    #[test]
    fn mismatches() {
        let a = Element::identity(Flavor::A, 2);
        assert_eq!(a.add(&Element::identity(Flavor::A, 3)), Err(ProjectorError::SizeMismatch(2, 3)));
        assert_eq!(
            a.mul(&Element::identity(Flavor::B, 2)),
            Err(ProjectorError::FlavorMismatch(Flavor::A, Flavor::B))
        );
    }

    #[test]
    fn json_round_trip() {
        let x = Element::identity(Flavor::B, 2)
            .add(&Element::generator(Flavor::B, 2, 0).unwrap().scalar_mul(&qratio(2, 3)))
            .unwrap();
        let json = serde_json::to_string(&x).unwrap();
        assert!(json.starts_with(r#"{"flavor":"B","n":2,"terms":[{"arcs":[[1,4],[2,3]],"dots":[],"coeff""#));
        let back: Element = serde_json::from_str(&json).unwrap();
        assert_eq!(back, x);
    }
}
