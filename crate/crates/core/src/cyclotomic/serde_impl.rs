//! JSON encoding `{"order": n, "coeffs": {"e": "p/q", …}}`.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use serde::de::Error as _;
use serde::ser::SerializeMap;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::{Cyclotomic, Rational};

struct Coeffs<'a>(&'a Cyclotomic);

impl Serialize for Coeffs<'_> {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let terms = self.0.coeffs();
        let mut map = s.serialize_map(Some(terms.len()))?;
        for (e, c) in terms {
            map.serialize_entry(&e.to_string(), &c.to_string())?;
        }
        map.end()
    }
}

impl Serialize for Cyclotomic {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let mut map = s.serialize_map(Some(2))?;
        map.serialize_entry("order", &self.order)?;
        map.serialize_entry("coeffs", &Coeffs(self))?;
        map.end()
    }
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct Raw {
    order: u64,
    coeffs: BTreeMap<String, String>,
}

pub(crate) fn parse_rational(s: &str) -> Option<Rational> {
    let s = s.trim();
    match s.split_once('/') {
        Some((p, q)) => {
            let p: BigInt = p.trim().parse().ok()?;
            let q: BigInt = q.trim().parse().ok()?;
            (q != BigInt::from(0)).then(|| Rational::new(p, q))
        }
        None => Some(Rational::from_integer(s.parse().ok()?)),
    }
}

impl<'de> Deserialize<'de> for Cyclotomic {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let raw = Raw::deserialize(d)?;
        if raw.order == 0 {
            return Err(D::Error::custom("order must be at least 1"));
        }
        let mut terms = Vec::with_capacity(raw.coeffs.len());
        for (e, c) in &raw.coeffs {
            let e: i64 = e
                .parse()
                .map_err(|_| D::Error::custom(format!("bad exponent key {e:?}")))?;
            let c = parse_rational(c)
                .ok_or_else(|| D::Error::custom(format!("bad rational {c:?}")))?;
            terms.push((e, c));
        }
        Cyclotomic::make(raw.order, terms).map_err(D::Error::custom)
    }
}
