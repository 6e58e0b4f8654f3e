//! Canonical JSON form for polynomials.
//!
//! A polynomial serializes as its ring layout plus the term list in
//! descending monomial order, each term carrying the trimmed exponent vector
//! and the reduced numerator/denominator as decimal strings:
//!
//! ```json
//! {"vars": ["t", "c2"], "weights": [1, 2],
//!  "terms": [{"e": [0, 1], "n": "1", "d": "1"},
//!            {"e": [2], "n": "-4", "d": "1"}]}
//! ```
//!
//! The form is canonical: equal polynomials serialize to identical bytes.

use super::{Monomial, Polynomial, RingSpec};
use crate::Rat;
use num_bigint::BigInt;
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use std::str::FromStr;

#[derive(Serialize, Deserialize)]
struct JsonPoly {
    vars: Vec<String>,
    weights: Vec<u32>,
    terms: Vec<JsonTerm>,
}

#[derive(Serialize, Deserialize)]
struct JsonTerm {
    e: Vec<u16>,
    n: String,
    d: String,
}

impl Serialize for Polynomial {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let ring = self.ring();
        let terms = self
            .iter_desc()
            .map(|(m, c)| JsonTerm {
                e: m.exps().to_vec(),
                n: c.numer().to_string(),
                d: c.denom().to_string(),
            })
            .collect();
        JsonPoly {
            vars: ring.names().to_vec(),
            weights: ring.weights().to_vec(),
            terms,
        }
        .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for Polynomial {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let raw = JsonPoly::deserialize(deserializer)?;
        if raw.vars.len() != raw.weights.len() {
            return Err(D::Error::custom("vars and weights differ in length"));
        }
        let ring = RingSpec::new(raw.vars.into_iter().zip(raw.weights));
        let mut p = Polynomial::zero(&ring);
        for t in raw.terms {
            if t.e.len() > ring.nvars() {
                return Err(D::Error::custom("exponent vector longer than ring"));
            }
            let n = BigInt::from_str(&t.n).map_err(D::Error::custom)?;
            let d = BigInt::from_str(&t.d).map_err(D::Error::custom)?;
            if d <= BigInt::from(0) {
                return Err(D::Error::custom("denominator must be positive"));
            }
            p.add_term(Monomial::from_exps(&ring, &t.e), Rat::new(n, d));
        }
        Ok(p)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn roundtrip() {
        let r = RingSpec::new([("t", 1), ("c2", 2), ("g3", 3)]);
        let f = Polynomial::parse(&r, "g3^2 - 1/2*t^2*c2^2 + 7").unwrap();
        let s = serde_json::to_string(&f).unwrap();
        let g: Polynomial = serde_json::from_str(&s).unwrap();
        assert_eq!(f, g);
    }

    #[test]
    fn canonical_bytes() {
        let r = RingSpec::uniform(["x", "y"]);
        let f = Polynomial::parse(&r, "x + y").unwrap();
        let g = Polynomial::parse(&r, "y + x").unwrap();
        assert_eq!(
            serde_json::to_string(&f).unwrap(),
            serde_json::to_string(&g).unwrap()
        );
        // Leading term first: x > y in the monomial order.
        let s = serde_json::to_string(&f).unwrap();
        assert!(s.contains(r#"[{"e":[1],"n":"1","d":"1"},{"e":[0,1],"n":"1","d":"1"}]"#));
    }

    #[test]
    fn rejects_bad_denominator() {
        let s = r#"{"vars":["x"],"weights":[1],"terms":[{"e":[1],"n":"1","d":"0"}]}"#;
        assert!(serde_json::from_str::<Polynomial>(s).is_err());
    }
}
