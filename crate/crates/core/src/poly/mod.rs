//! Exact univariate polynomials over the Gaussian rationals.
//!
//! Coefficients are stored in ascending order: `coeffs[i]` multiplies `x^i`.
//! The zero polynomial is the empty coefficient list.

mod cyclotomic;
mod parse;
mod roots;
mod sturm;

pub use cyclotomic::{
    cyclotomic, euler_phi, has_root_of_unity, has_root_of_unity_exact,
    has_root_of_unity_numeric, DEFAULT_UNITY_TOL,
};
pub use parse::parse;
pub use roots::{
    cluster_roots, min_subset_product_distance, roots_numeric, roots_with_multiplicity, RootOptions,
    SUBSET_SCAN_LIMIT,
};
pub use sturm::{count_real_roots, sturm_sequence, Bound};

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_complex::Complex64;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::number::GaussianRational;

#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Poly {
    coeffs: Vec<GaussianRational>,
}

impl fmt::Debug for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Poly({self})")
    }
}

impl Poly {
    pub fn new(mut coeffs: Vec<GaussianRational>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        Self { coeffs }
    }

    /// Integer coefficients, ascending.
    pub fn from_ints(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| GaussianRational::from_int(c)).collect())
    }

    pub fn zero() -> Self {
        Self { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(GaussianRational::one())
    }

    pub fn x() -> Self {
        Self::monomial(GaussianRational::one(), 1)
    }

    pub fn constant(c: GaussianRational) -> Self {
        Self::new(vec![c])
    }

    pub fn monomial(c: GaussianRational, k: usize) -> Self {
        let mut coeffs = vec![GaussianRational::zero(); k];
        coeffs.push(c);
        Self::new(coeffs)
    }

    /// `lead · ∏ (x − ρ)`.
    pub fn from_roots(lead: &GaussianRational, roots: &[GaussianRational]) -> Self {
        let mut p = Self::constant(lead.clone());
        for r in roots {
            p = &p * &Self::new(vec![-r, GaussianRational::one()]);
        }
        p
    }

    pub fn coeffs(&self) -> &[GaussianRational] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<GaussianRational> {
        self.coeffs
    }

    pub fn coeff(&self, i: usize) -> GaussianRational {
        self.coeffs.get(i).cloned().unwrap_or_else(GaussianRational::zero)
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    /// Leading coefficient (`a_0` in descending notation).
    pub fn leading(&self) -> Option<&GaussianRational> {
        self.coeffs.last()
    }

    pub fn is_real(&self) -> bool {
        self.coeffs.iter().all(GaussianRational::is_real)
    }

    pub fn is_monic(&self) -> bool {
        self.leading().is_some_and(|c| c.is_one())
    }

    pub fn eval(&self, x: &GaussianRational) -> GaussianRational {
        let mut acc = GaussianRational::zero();
        for c in self.coeffs.iter().rev() {
            acc = &(&acc * x) + c;
        }
        acc
    }

    pub fn to_complex(&self) -> Vec<Complex64> {
        self.coeffs.iter().map(GaussianRational::to_complex).collect()
    }

    pub fn eval_complex(&self, x: Complex64) -> Complex64 {
        horner(&self.to_complex(), x)
    }

    pub fn scale(&self, c: &GaussianRational) -> Self {
        Self::new(self.coeffs.iter().map(|a| a * c).collect())
    }

    pub fn derivative(&self) -> Self {
        Self::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c * &GaussianRational::from_int(i as i64))
                .collect(),
        )
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..k {
            acc = &acc * self;
        }
        acc
    }

    /// Multiply by `x^k`.
    pub fn shift(&self, k: usize) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![GaussianRational::zero(); k];
        coeffs.extend(self.coeffs.iter().cloned());
        Self { coeffs }
    }

    /// Multiplicity of 0 as a root.
    pub fn x_multiplicity(&self) -> usize {
        self.coeffs.iter().take_while(|c| c.is_zero()).count()
    }

    /// Split `f = x^l · h` with `h(0) ≠ 0`.
    pub fn split_x_power(&self) -> (usize, Self) {
        let l = self.x_multiplicity();
        (l, Self::new(self.coeffs[l.min(self.coeffs.len())..].to_vec()))
    }

    pub fn monic(&self) -> Self {
        match self.leading() {
            None => Self::zero(),
            Some(lc) => {
                let inv = lc.inv().expect("nonzero leading coefficient");
                self.scale(&inv)
            }
        }
    }

    /// Euclidean division; fails only for a zero divisor.
    pub fn div_rem(&self, d: &Self) -> Result<(Self, Self)> {
        let dd = d.degree().ok_or(Error::ZeroPolynomial)?;
        let lc_inv = d.leading().and_then(GaussianRational::inv).ok_or(Error::ZeroPolynomial)?;
        let mut rem = self.coeffs.clone();
        if rem.len() <= dd {
            return Ok((Self::zero(), self.clone()));
        }
        let mut quot = vec![GaussianRational::zero(); rem.len() - dd];
        for k in (0..quot.len()).rev() {
            let c = &rem[k + dd] * &lc_inv;
            if !c.is_zero() {
                for (j, dc) in d.coeffs.iter().enumerate() {
                    let t = &c * dc;
                    rem[k + j] -= &t;
                }
            }
            quot[k] = c;
        }
        rem.truncate(dd);
        Ok((Self::new(quot), Self::new(rem)))
    }

    pub fn divides(&self, other: &Self) -> bool {
        match other.div_rem(self) {
            Ok((_, r)) => r.is_zero(),
            Err(_) => other.is_zero(),
        }
    }

    /// Exact quotient; panics if the division leaves a remainder.
    pub fn exact_div(&self, d: &Self) -> Self {
        let (q, r) = self.div_rem(d).expect("exact_div by zero polynomial");
        assert!(r.is_zero(), "exact_div left a remainder");
        q
    }

    /// Monic greatest common divisor (zero if both inputs are zero).
    pub fn gcd(a: &Self, b: &Self) -> Self {
        let (mut a, mut b) = (a.monic(), b.monic());
        while !b.is_zero() {
            let (_, r) = a.div_rem(&b).expect("nonzero divisor");
            a = b;
            b = r.monic();
        }
        a
    }

    /// Yun's square-free decomposition: `f = lc · ∏ s_i^i`, each `s_i` monic and
    /// square-free, pairwise coprime. Constant factors are omitted.
    pub fn square_free_decomposition(&self) -> Vec<(Self, usize)> {
        let mut out = Vec::new();
        if self.degree().unwrap_or(0) == 0 {
            return out;
        }
        let f = self.monic();
        let fp = f.derivative();
        let a0 = Self::gcd(&f, &fp);
        let mut b = f.exact_div(&a0);
        let c = fp.exact_div(&a0);
        let mut d = &c - &b.derivative();
        let mut i = 1;
        while b.degree().unwrap_or(0) > 0 {
            let a = Self::gcd(&b, &d);
            let b_next = b.exact_div(&a);
            let c_next = d.exact_div(&a);
            if a.degree().unwrap_or(0) > 0 {
                out.push((a, i));
            }
            d = &c_next - &b_next.derivative();
            b = b_next;
            i += 1;
        }
        out
    }

    /// `x^d f(1/x)`: coefficient list reversed, then trimmed.
    pub fn reversal(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        Ok(Self::new(self.coeffs.iter().rev().cloned().collect()))
    }

    /// `a_i = a_{d−i}` for all i; the zero polynomial is not reciprocal.
    pub fn is_reciprocal(&self) -> bool {
        !self.is_zero() && self.coeffs.iter().eq(self.coeffs.iter().rev())
    }

    /// `x ↦ −x` substitution.
    pub fn reflect(&self) -> Self {
        Self::new(
            self.coeffs
                .iter()
                .enumerate()
                .map(|(i, c)| if i % 2 == 1 { -c } else { c.clone() })
                .collect(),
        )
    }
}

pub(crate) fn horner(coeffs: &[Complex64], x: Complex64) -> Complex64 {
    coeffs.iter().rev().fold(Complex64::new(0.0, 0.0), |acc, &c| acc * x + c)
}

impl<'a> Add<&'a Poly> for &'a Poly {
    type Output = Poly;
    fn add(self, o: &Poly) -> Poly {
        let n = self.coeffs.len().max(o.coeffs.len());
        Poly::new((0..n).map(|i| &self.coeff(i) + &o.coeff(i)).collect())
    }
}

impl<'a> Sub<&'a Poly> for &'a Poly {
    type Output = Poly;
    fn sub(self, o: &Poly) -> Poly {
        let n = self.coeffs.len().max(o.coeffs.len());
        Poly::new((0..n).map(|i| &self.coeff(i) - &o.coeff(i)).collect())
    }
}

impl<'a> Mul<&'a Poly> for &'a Poly {
    type Output = Poly;
    fn mul(self, o: &Poly) -> Poly {
        if self.is_zero() || o.is_zero() {
            return Poly::zero();
        }
        let mut out = vec![GaussianRational::zero(); self.coeffs.len() + o.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in o.coeffs.iter().enumerate() {
                out[i + j] += &(a * b);
            }
        }
        Poly::new(out)
    }
}

impl Neg for &Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        Poly::new(self.coeffs.iter().map(|c| -c).collect())
    }
}

impl Add for Poly {
    type Output = Poly;
    fn add(self, o: Poly) -> Poly {
        &self + &o
    }
}

impl Sub for Poly {
    type Output = Poly;
    fn sub(self, o: Poly) -> Poly {
        &self - &o
    }
}

impl Mul for Poly {
    type Output = Poly;
    fn mul(self, o: Poly) -> Poly {
        &self * &o
    }
}

impl Neg for Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        -&self
    }
}

impl PartialOrd for Poly {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Poly {
    /// Canonical order: by degree, then lexicographically on the ascending
    /// coefficient tuple.
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.coeffs
            .len()
            .cmp(&other.coeffs.len())
            .then_with(|| self.coeffs.cmp(&other.coeffs))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::number::rat;

    fn p(s: &str) -> Poly {
        parse(s).unwrap()
    }

    #[test]
    fn reversal_examples() {
        assert_eq!(p("x^2-5*x+6").reversal().unwrap(), p("6*x^2-5*x+1"));
        assert_eq!(p("x^3+2*x^2+2*x+1").reversal().unwrap(), p("x^3+2*x^2+2*x+1"));
        assert_eq!(p("x^2").reversal().unwrap(), Poly::one());
        assert_eq!(Poly::zero().reversal(), Err(Error::ZeroPolynomial));
    }

    #[test]
    fn reciprocal_examples() {
        assert!(p("x^6+2*x^5+3*x^4+7*x^3+3*x^2+2*x+1").is_reciprocal());
        assert!(!p("x-2").is_reciprocal());
        assert!(p("2*x^2+3*x+2").is_reciprocal());
        assert!(!Poly::zero().is_reciprocal());
    }

    #[test]
    fn division_and_gcd() {
        let a = p("x^3-6*x^2+11*x-6");
        let b = p("x^2-3*x+2");
        let (q, r) = a.div_rem(&b).unwrap();
        assert_eq!(q, p("x-3"));
        assert!(r.is_zero());
        assert_eq!(Poly::gcd(&a, &p("x^2-1")), p("x-1"));
        assert!(a.div_rem(&Poly::zero()).is_err());
    }

    #[test]
    fn square_free_parts() {
        // (x-2)^2 (x+1)^3 (x^2+1)
        let f = &(&p("x-2").pow(2) * &p("x+1").pow(3)) * &p("3*x^2+3");
        let parts = f.square_free_decomposition();
        assert_eq!(parts, vec![(p("x^2+1"), 1), (p("x-2"), 2), (p("x+1"), 3)]);
    }

    #[test]
    fn from_roots_expands() {
        let f = Poly::from_roots(
            &GaussianRational::from_int(15),
            &[GaussianRational::from_int(2), GaussianRational::real(rat(1, 3)), GaussianRational::real(rat(1, 5))],
        );
        assert_eq!(f, p("15*x^3-38*x^2+17*x-2"));
    }

    #[test]
    fn split_power() {
        let (l, h) = p("15*x^5-38*x^4+17*x^3-2*x^2").split_x_power();
        assert_eq!(l, 2);
        assert_eq!(h, p("15*x^3-38*x^2+17*x-2"));
    }
}
