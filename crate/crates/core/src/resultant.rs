//! Cyclic resultants `r_m = Res(f, x^m − 1)`.
//!
//! The convention throughout is `Res(f, g) = a_0^{deg g} ∏ g(α_i)` with `a_0`
//! the leading coefficient of `f` and `α_i` its roots, so that
//! `r_m = a_0^m ∏ (α_i^m − 1)`.

use num_complex::Complex64;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::linalg::{det_bareiss, identity, mat_pow, Matrix};
use crate::number::{GaussianRational, Rational};
use crate::poly::{count_real_roots, has_root_of_unity, roots_numeric, Bound, Poly};

/// Companion cross-checks in [`sequence`] stop at this index.
pub const CROSS_CHECK_LIMIT: usize = 16;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Method {
    /// Sylvester determinant of `f` and `x^m − 1`.
    Direct,
    /// `a_0^m det(A^m − I)` with `A` the companion matrix of `f / a_0`.
    Companion,
    /// `a_0^m ∏ (α_i^m − 1)` over numeric roots.
    Roots,
}

#[derive(Clone, Debug, PartialEq)]
pub enum ResultantValue {
    Exact(GaussianRational),
    Approx(Complex64),
}

impl ResultantValue {
    pub fn to_complex(&self) -> Complex64 {
        match self {
            ResultantValue::Exact(v) => v.to_complex(),
            ResultantValue::Approx(z) => *z,
        }
    }
}

/// Sylvester matrix with the `deg g` shifted rows of `f` first.
pub fn sylvester_matrix(f: &Poly, g: &Poly) -> Result<Matrix<GaussianRational>> {
    let df = f.degree().ok_or(Error::ZeroPolynomial)?;
    let dg = g.degree().ok_or(Error::ZeroPolynomial)?;
    let n = df + dg;
    let row = |p: &Poly, shift: usize| -> Vec<GaussianRational> {
        let mut r = vec![GaussianRational::zero(); n];
        let d = p.degree().unwrap_or(0);
        for (k, c) in p.coeffs().iter().enumerate() {
            // descending layout: x^d sits in column `shift`
            r[shift + d - k] = c.clone();
        }
        r
    };
    let mut m = Vec::with_capacity(n);
    for s in 0..dg {
        m.push(row(f, s));
    }
    for s in 0..df {
        m.push(row(g, s));
    }
    Ok(m)
}

pub fn resultant(f: &Poly, g: &Poly) -> Result<GaussianRational> {
    Ok(det_bareiss(&sylvester_matrix(f, g)?))
}

fn x_pow_minus_one(m: usize) -> Poly {
    &Poly::monomial(GaussianRational::one(), m) - &Poly::one()
}

fn check_index(f: &Poly, m: usize) -> Result<()> {
    if f.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    if m == 0 {
        return Err(Error::InvalidArgument("cyclic resultant index m must be ≥ 1".into()));
    }
    Ok(())
}

/// `r_m` by the Sylvester determinant.
pub fn cyclic_resultant(f: &Poly, m: usize) -> Result<GaussianRational> {
    check_index(f, m)?;
    resultant(f, &x_pow_minus_one(m))
}

/// Companion matrix of `f / a_0`: ones on the subdiagonal, last column
/// `−a_d/a_0, …, −a_1/a_0` from top to bottom.
pub fn companion_matrix(f: &Poly) -> Result<Matrix<GaussianRational>> {
    let d = f.degree().ok_or(Error::ZeroPolynomial)?;
    let lead = f.leading().expect("nonzero").clone();
    let mut a = vec![vec![GaussianRational::zero(); d]; d];
    for i in 0..d {
        if i > 0 {
            a[i][i - 1] = GaussianRational::one();
        }
        a[i][d - 1] = -(&f.coeff(i) / &lead);
    }
    Ok(a)
}

/// `r_m = a_0^m det(A^m − I)`, exact.
pub fn cyclic_resultant_companion(f: &Poly, m: usize) -> Result<GaussianRational> {
    check_index(f, m)?;
    let a = companion_matrix(f)?;
    let mut p = mat_pow(&a, m as u64);
    let id: Matrix<GaussianRational> = identity(a.len());
    for (i, row) in p.iter_mut().enumerate() {
        row[i] = &row[i] - &id[i][i];
    }
    let lead = f.leading().expect("nonzero");
    Ok(&lead.pow(m as u32) * &det_bareiss(&p))
}

/// `r_m = a_0^m ∏ (α_i^m − 1)` over numeric roots.
pub fn cyclic_resultant_roots(f: &Poly, m: usize) -> Result<Complex64> {
    check_index(f, m)?;
    let roots = roots_numeric(f, 1e-12)?;
    let lead = f.leading().expect("nonzero").to_complex();
    let mut acc = lead.powu(m as u32);
    for a in roots {
        acc *= a.powu(m as u32) - 1.0;
    }
    Ok(acc)
}

pub fn cyclic_resultant_by(f: &Poly, m: usize, method: Method) -> Result<ResultantValue> {
    Ok(match method {
        Method::Direct => ResultantValue::Exact(cyclic_resultant(f, m)?),
        Method::Companion => ResultantValue::Exact(cyclic_resultant_companion(f, m)?),
        Method::Roots => ResultantValue::Approx(cyclic_resultant_roots(f, m)?),
    })
}

/// Exact values `r_1..r_N` (or `|r_1|..|r_N|` when `is_abs`).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ResultantSequence {
    pub values: Vec<GaussianRational>,
    pub is_abs: bool,
    pub source_degree: Option<usize>,
}

impl ResultantSequence {
    pub fn new(values: Vec<GaussianRational>, is_abs: bool) -> Result<Self> {
        if values.is_empty() {
            return Err(Error::InvalidArgument("a resultant sequence needs at least one value".into()));
        }
        if is_abs && values.iter().any(|v| !v.is_real() || v.re.is_negative()) {
            return Err(Error::InvalidArgument(
                "absolute-value sequences must be real and non-negative".into(),
            ));
        }
        Ok(Self {
            values,
            is_abs,
            source_degree: None,
        })
    }

    pub fn from_ints(values: &[i64]) -> Self {
        Self {
            values: values.iter().map(|&v| GaussianRational::from_int(v)).collect(),
            is_abs: false,
            source_degree: None,
        }
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    /// `r_m` for 1-based `m`.
    pub fn get(&self, m: usize) -> Option<&GaussianRational> {
        m.checked_sub(1).and_then(|i| self.values.get(i))
    }

    pub fn first_zero(&self) -> Option<usize> {
        self.values.iter().position(Zero::is_zero).map(|i| i + 1)
    }
}

/// `r_1..r_N` by the direct method, cross-checked against the companion
/// method for `m ≤ min(N, 16)`.
pub fn sequence(f: &Poly, n: usize) -> Result<ResultantSequence> {
    if n == 0 {
        return Err(Error::InvalidArgument("sequence length N must be ≥ 1".into()));
    }
    let mut values = Vec::with_capacity(n);
    for m in 1..=n {
        let v = cyclic_resultant(f, m)?;
        if m <= CROSS_CHECK_LIMIT && cyclic_resultant_companion(f, m)? != v {
            return Err(Error::CrossCheck { m });
        }
        values.push(v);
    }
    Ok(ResultantSequence {
        values,
        is_abs: false,
        source_degree: f.degree(),
    })
}

/// Real-root sign data: `E` roots in `(−1, 1)`, `D` roots in `(−∞, −1)`,
/// `ε = (−1)^E`, `δ = (−1)^D`, and the sign `σ` of the leading coefficient.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SignData {
    #[serde(rename = "E")]
    pub e: usize,
    #[serde(rename = "D")]
    pub d: usize,
    pub epsilon: i8,
    pub delta: i8,
    pub lead_sign: i8,
}

impl SignData {
    /// `σ δ`: the factor that makes `ε (σδ)^m r_m = |r_m|`.
    pub fn scale_sign(&self) -> i8 {
        self.lead_sign * self.delta
    }

    /// `ε (σδ)^m`, the sign of `r_m`; this is `ε δ^m` when `a_0 > 0`.
    pub fn sign_of(&self, m: usize) -> i8 {
        if self.scale_sign() < 0 && m % 2 == 1 {
            -self.epsilon
        } else {
            self.epsilon
        }
    }
}

pub fn sign_data(f: &Poly) -> Result<SignData> {
    if f.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    if !f.is_real() {
        return Err(Error::NonReal);
    }
    if has_root_of_unity(f, 64) {
        return Err(Error::RootOfUnity);
    }
    let minus_one = Bound::Finite(-Rational::one());
    let one = Bound::Finite(Rational::one());
    let e = count_real_roots(f, &minus_one, &one)?;
    let d = count_real_roots(f, &Bound::NegInf, &minus_one)?;
    let parity = |k: usize| if k.is_multiple_of(2) { 1 } else { -1 };
    let lead_sign = if f.leading().expect("nonzero").re.is_negative() { -1 } else { 1 };
    Ok(SignData {
        e,
        d,
        epsilon: parity(e),
        delta: parity(d),
        lead_sign,
    })
}

/// `|r_1|..|r_N|` obtained as `ε (σδ)^m r_m`.
pub fn abs_sequence(f: &Poly, n: usize) -> Result<ResultantSequence> {
    let signs = sign_data(f)?;
    let mut seq = sequence(f, n)?;
    for (i, v) in seq.values.iter_mut().enumerate() {
        if signs.sign_of(i + 1) < 0 {
            *v = -&*v;
        }
        if !v.re.is_positive() {
            return Err(Error::CrossCheck { m: i + 1 });
        }
    }
    seq.is_abs = true;
    Ok(seq)
}

/// `|r_m|²` for every entry; comparable exactly for complex sequences too.
pub fn squared_moduli(seq: &ResultantSequence) -> Vec<Rational> {
    seq.values.iter().map(GaussianRational::norm_sqr).collect()
}
