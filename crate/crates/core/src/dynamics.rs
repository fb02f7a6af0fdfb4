//! Toral endomorphisms given by integer matrices: characteristic
//! polynomials, periodic-point counts `|det(A^m − I)|`, zeta series and the
//! subset-product condition under which the counts determine the spectrum.

use num_bigint::BigInt;
use num_complex::Complex64;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::genfun::{exp_series, PowerSeries};
use crate::linalg::{det_bareiss, identity, mat_mul, mat_pow, Matrix};
use crate::number::GaussianRational;
use crate::poly::{has_root_of_unity, min_subset_product_distance, roots_numeric, Poly};
use crate::resultant::ResultantSequence;

/// Square integer matrix; JSON `{"n": 2, "entries": [["2","1"],["1","1"]]}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntegerMatrix {
    entries: Matrix<BigInt>,
}

#[derive(Serialize, Deserialize)]
struct MatrixRepr {
    n: usize,
    entries: Vec<Vec<serde_json::Value>>,
}

impl IntegerMatrix {
    pub fn new(entries: Matrix<BigInt>) -> Result<Self> {
        let n = entries.len();
        if entries.iter().any(|r| r.len() != n) {
            return Err(Error::InvalidArgument("matrix must be square".into()));
        }
        Ok(Self { entries })
    }

    pub fn from_rows(rows: &[&[i64]]) -> Result<Self> {
        Self::new(rows.iter().map(|r| r.iter().map(|&v| BigInt::from(v)).collect()).collect())
    }

    pub fn n(&self) -> usize {
        self.entries.len()
    }

    pub fn entries(&self) -> &Matrix<BigInt> {
        &self.entries
    }
}

impl Serialize for IntegerMatrix {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        MatrixRepr {
            n: self.n(),
            entries: self
                .entries
                .iter()
                .map(|r| r.iter().map(|v| serde_json::Value::String(v.to_string())).collect())
                .collect(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for IntegerMatrix {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        use serde::de::Error as _;
        let r = MatrixRepr::deserialize(d)?;
        if r.entries.len() != r.n {
            return Err(D::Error::custom(format!("expected {} rows, got {}", r.n, r.entries.len())));
        }
        let mut rows = Vec::with_capacity(r.n);
        for row in &r.entries {
            let mut out = Vec::with_capacity(row.len());
            for v in row {
                let text = match v {
                    serde_json::Value::String(s) => s.clone(),
                    serde_json::Value::Number(n) if n.is_i64() || n.is_u64() => n.to_string(),
                    other => return Err(D::Error::custom(format!("matrix entry {other} is not an integer"))),
                };
                out.push(
                    text.trim()
                        .parse::<BigInt>()
                        .map_err(|e| D::Error::custom(format!("bad matrix entry {text:?}: {e}")))?,
                );
            }
            rows.push(out);
        }
        IntegerMatrix::new(rows).map_err(D::Error::custom)
    }
}

/// Monic `det(xI − A)` by Faddeev–LeVerrier; every division is exact.
pub fn char_poly(a: &IntegerMatrix) -> Poly {
    let n = a.n();
    let mut c = vec![BigInt::zero(); n + 1];
    c[n] = BigInt::one();
    let mut m: Matrix<BigInt> = vec![vec![BigInt::zero(); n]; n];
    for k in 1..=n {
        let mut next = mat_mul(&a.entries, &m);
        for (i, row) in next.iter_mut().enumerate() {
            row[i] += &c[n - k + 1];
        }
        m = next;
        let am = mat_mul(&a.entries, &m);
        let trace: BigInt = (0..n).map(|i| am[i][i].clone()).sum();
        c[n - k] = -trace / BigInt::from(k);
    }
    Poly::new(c.into_iter().map(GaussianRational::from_bigint).collect())
}

pub fn is_ergodic(a: &IntegerMatrix) -> bool {
    !has_root_of_unity(&char_poly(a), 64)
}

/// `|det(A^m − I)|`.
pub fn per_count(a: &IntegerMatrix, m: usize) -> Result<BigInt> {
    if m == 0 {
        return Err(Error::InvalidArgument("period m must be ≥ 1".into()));
    }
    if !is_ergodic(a) {
        return Err(Error::NonErgodic);
    }
    Ok(per_count_unchecked(a, m))
}

fn per_count_unchecked(a: &IntegerMatrix, m: usize) -> BigInt {
    let mut p = mat_pow(&a.entries, m as u64);
    let id: Matrix<BigInt> = identity(a.n());
    for (i, row) in p.iter_mut().enumerate() {
        row[i] -= &id[i][i];
    }
    det_bareiss(&p).abs()
}

/// `exp(−Σ |Per_m| z^m / m)` up to `z^order`.
pub fn zeta_series(a: &IntegerMatrix, order: usize) -> Result<PowerSeries> {
    if !is_ergodic(a) {
        return Err(Error::NonErgodic);
    }
    if order == 0 {
        return Ok(PowerSeries {
            coeffs: vec![Complex64::one()],
        });
    }
    let values = (1..=order)
        .map(|m| GaussianRational::from_bigint(per_count_unchecked(a, m)))
        .collect();
    exp_series(&ResultantSequence::new(values, true)?, order)
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SpectrumReport {
    /// No nonempty eigenvalue subset has product within `tol` of `±1`.
    pub determined: bool,
    /// Distance of the closest subset product to `±1`.
    pub min_distance: f64,
    /// Set when the closest product lies in `(tol, 10·tol]`.
    pub warning: Option<String>,
}

pub fn spectrum_determined(a: &IntegerMatrix, tol: f64) -> Result<SpectrumReport> {
    spectrum_determined_with(a, tol, 1e-12)
}

/// As [`spectrum_determined`], with an explicit eigenvalue tolerance.
pub fn spectrum_determined_with(a: &IntegerMatrix, tol: f64, root_tol: f64) -> Result<SpectrumReport> {
    if !is_ergodic(a) {
        return Err(Error::NonErgodic);
    }
    let eig = roots_numeric(&char_poly(a), root_tol)?;
    let dist = min_subset_product_distance(&eig, &[Complex64::one(), -Complex64::one()])?;
    let warning = (dist > tol && dist <= 10.0 * tol).then(|| {
        format!("closest subset product is {dist:e} from ±1, within 10× the tolerance; treat as indeterminate")
    });
    Ok(SpectrumReport {
        determined: dist > tol,
        min_distance: dist,
        warning,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::genfun::{g_d, series_of};
    use crate::poly::parse;
    use crate::resultant::abs_sequence;

    fn m(rows: &[&[i64]]) -> IntegerMatrix {
        IntegerMatrix::from_rows(rows).unwrap()
    }

    #[test]
    fn char_poly_examples() {
        assert_eq!(char_poly(&m(&[&[2]])), parse("x-2").unwrap());
        assert_eq!(char_poly(&m(&[&[2, 1], &[1, 1]])), parse("x^2-3*x+1").unwrap());
        assert_eq!(char_poly(&m(&[&[1, 0], &[0, 1]])), parse("(x-1)^2").unwrap());
        assert_eq!(char_poly(&m(&[])), Poly::one());
    }

    #[test]
    fn ergodicity() {
        assert!(is_ergodic(&m(&[&[2]])));
        assert!(!is_ergodic(&m(&[&[0, -1], &[1, 0]])));
        assert!(is_ergodic(&m(&[&[2, 1], &[1, 1]])));
    }

    #[test]
    fn periodic_points() {
        assert_eq!(per_count(&m(&[&[2]]), 5).unwrap(), BigInt::from(31));
        let cat = m(&[&[2, 1], &[1, 1]]);
        assert_eq!(per_count(&cat, 1).unwrap(), BigInt::from(1));
        assert_eq!(per_count(&cat, 2).unwrap(), BigInt::from(5));
        assert_eq!(per_count(&m(&[&[0, -1], &[1, 0]]), 1), Err(Error::NonErgodic));
    }

    #[test]
    fn zeta_examples() {
        let z = zeta_series(&m(&[&[2]]), 2).unwrap();
        assert!(z.max_diff(&series_of(&g_d(&parse("x-2").unwrap()).unwrap(), 2)) < 1e-12);
        assert_eq!(zeta_series(&m(&[&[2]]), 0).unwrap().coeffs, vec![Complex64::one()]);
        let cat = m(&[&[2, 1], &[1, 1]]);
        let lhs = zeta_series(&cat, 8).unwrap();
        let rhs = exp_series(&abs_sequence(&char_poly(&cat), 8).unwrap(), 8).unwrap();
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn spectrum_examples() {
        assert!(spectrum_determined(&m(&[&[2]]), 1e-8).unwrap().determined);
        assert!(!spectrum_determined(&m(&[&[2, 1], &[1, 1]]), 1e-8).unwrap().determined);
        let r = spectrum_determined(&m(&[&[3, 1], &[1, 1]]), 1e-8).unwrap();
        assert!(r.determined && r.warning.is_none());
    }

    #[test]
    fn matrix_json() {
        let a = m(&[&[2, 1], &[1, 1]]);
        let s = serde_json::to_string(&a).unwrap();
        assert_eq!(s, r#"{"n":2,"entries":[["2","1"],["1","1"]]}"#);
        assert_eq!(serde_json::from_str::<IntegerMatrix>(&s).unwrap(), a);
        assert!(serde_json::from_str::<IntegerMatrix>(r#"{"n":2,"entries":[["1"]]}"#).is_err());
    }
}
