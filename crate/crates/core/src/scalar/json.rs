use num_bigint::BigInt;
use serde::de::Error as _;
use serde::ser::SerializeSeq;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::{LaurentPoly, Scalar};

// Polynomials serialize as `[[c, eq, es], ...]` sorted by `(eq, es)`, with
// the coefficient as a decimal string.

impl Serialize for LaurentPoly {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let mut seq = serializer.serialize_seq(Some(self.len()))?;
        for (&(eq, es), c) in self.terms() {
            seq.serialize_element(&(c.to_string(), eq, es))?;
        }
        seq.end()
    }
}

impl<'de> Deserialize<'de> for LaurentPoly {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let raw: Vec<(String, i32, i32)> = Vec::deserialize(deserializer)?;
        let mut terms = Vec::with_capacity(raw.len());
        for (c, eq, es) in raw {
            let c: BigInt = c
                .parse()
                .map_err(|_| D::Error::custom(format!("invalid integer coefficient {c:?}")))?;
            terms.push((c, eq, es));
        }
        Ok(LaurentPoly::from_terms(terms))
    }
}

#[derive(Serialize, Deserialize)]
struct ScalarRepr {
    num: LaurentPoly,
    den: LaurentPoly,
}

impl Serialize for Scalar {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let (num, den) = self.canonical();
        ScalarRepr { num, den }.serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for Scalar {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let ScalarRepr { num, den } = ScalarRepr::deserialize(deserializer)?;
        Scalar::from_parts(num, den).map_err(D::Error::custom)
    }
}
