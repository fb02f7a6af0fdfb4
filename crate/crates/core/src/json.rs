//! JSON forms of the exact types.
//!
//! A Gaussian rational is `[re_num, re_den, im_num, im_den]` with decimal
//! strings. On input, a bare JSON integer or a string such as `"-3/4"` is
//! also accepted for real values.

use serde::de::{self, Deserializer};
use serde::ser::Serializer;
use serde::{Deserialize, Serialize};

use crate::number::{GaussianRational, Rational};
use crate::poly::Poly;
use crate::resultant::ResultantSequence;

impl Serialize for GaussianRational {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        self.to_quad().serialize(s)
    }
}

#[derive(Deserialize)]
#[serde(untagged)]
enum GaussianRepr {
    Quad(Vec<serde_json::Value>),
    Int(i64),
    Text(String),
}

fn value_to_string(v: &serde_json::Value) -> Option<String> {
    match v {
        serde_json::Value::String(s) => Some(s.clone()),
        serde_json::Value::Number(n) if n.is_i64() || n.is_u64() => Some(n.to_string()),
        _ => None,
    }
}

pub fn parse_rational_text(s: &str) -> Result<Rational, String> {
    let s = s.trim();
    let (n, d) = match s.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (s, "1"),
    };
    let n: num_bigint::BigInt = n.parse().map_err(|e| format!("bad rational {s:?}: {e}"))?;
    let d: num_bigint::BigInt = d.parse().map_err(|e| format!("bad rational {s:?}: {e}"))?;
    if d == num_bigint::BigInt::from(0) {
        return Err(format!("zero denominator in {s:?}"));
    }
    Ok(Rational::new(n, d))
}

impl<'de> Deserialize<'de> for GaussianRational {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        match GaussianRepr::deserialize(d)? {
            GaussianRepr::Quad(items) => {
                let strings: Option<Vec<String>> = items.iter().map(value_to_string).collect();
                let strings = strings.ok_or_else(|| de::Error::custom("quad entries must be integers"))?;
                GaussianRational::from_quad(&strings).map_err(de::Error::custom)
            }
            GaussianRepr::Int(n) => Ok(GaussianRational::from_int(n)),
            GaussianRepr::Text(s) => parse_rational_text(&s)
                .map(GaussianRational::real)
                .map_err(de::Error::custom),
        }
    }
}

#[derive(Serialize, Deserialize)]
struct PolyRepr {
    coeffs: Vec<GaussianRational>,
}

impl Serialize for Poly {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        PolyRepr {
            coeffs: self.coeffs().to_vec(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for Poly {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        Ok(Poly::new(PolyRepr::deserialize(d)?.coeffs))
    }
}

#[derive(Serialize, Deserialize)]
struct SequenceRepr {
    is_abs: bool,
    values: Vec<GaussianRational>,
}

impl Serialize for ResultantSequence {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        SequenceRepr {
            is_abs: self.is_abs,
            values: self.values.clone(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for ResultantSequence {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let r = SequenceRepr::deserialize(d)?;
        ResultantSequence::new(r.values, r.is_abs).map_err(de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::parse;

    #[test]
    fn poly_json_form() {
        let f = parse("(2-1i)*x+1/2").unwrap();
        let s = serde_json::to_string(&f).unwrap();
        assert_eq!(s, r#"{"coeffs":[["1","2","0","1"],["2","1","-1","1"]]}"#);
        assert_eq!(serde_json::from_str::<Poly>(&s).unwrap(), f);
    }

    #[test]
    fn lenient_input() {
        let f: Poly = serde_json::from_str(r#"{"coeffs":[-30, "31", "-10/1", ["1","1","0","1"], 0]}"#).unwrap();
        assert_eq!(f, parse("x^3-10*x^2+31*x-30").unwrap());
        assert!(serde_json::from_str::<Poly>(r#"{"coeffs":["1/0"]}"#).is_err());
    }

    #[test]
    fn sequence_json_form() {
        let seq = ResultantSequence::from_ints(&[1, 3, 7]);
        let s = serde_json::to_string(&seq).unwrap();
        assert_eq!(
            s,
            r#"{"is_abs":false,"values":[["1","1","0","1"],["3","1","0","1"],["7","1","0","1"]]}"#
        );
        assert_eq!(serde_json::from_str::<ResultantSequence>(&s).unwrap(), seq);
        assert!(serde_json::from_str::<ResultantSequence>(r#"{"is_abs":true,"values":[-1]}"#).is_err());
        assert!(serde_json::from_str::<ResultantSequence>(r#"{"is_abs":false,"values":[]}"#).is_err());
    }
}
