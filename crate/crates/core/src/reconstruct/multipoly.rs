//! Sparse multivariate polynomials over the rationals in lex order
//! (variable 0 is the largest).

use std::collections::BTreeMap;
use std::fmt;

use num_traits::{One, Zero};

use crate::number::{GaussianRational, Rational};

pub type Monomial = Vec<u32>;

/// `Σ c_e x^e`; the `BTreeMap` key order on exponent vectors is exactly lex
/// with `x_0 ≻ x_1 ≻ ⋯`, so the leading term is the last entry.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MultiPoly {
    nvars: usize,
    terms: BTreeMap<Monomial, Rational>,
}

impl MultiPoly {
    pub fn zero(nvars: usize) -> Self {
        Self {
            nvars,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(nvars: usize, c: Rational) -> Self {
        let mut p = Self::zero(nvars);
        p.add_term(vec![0; nvars], c);
        p
    }

    pub fn var(nvars: usize, i: usize) -> Self {
        let mut e = vec![0; nvars];
        e[i] = 1;
        let mut p = Self::zero(nvars);
        p.add_term(e, Rational::one());
        p
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn terms(&self) -> &BTreeMap<Monomial, Rational> {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Nonzero constant.
    pub fn is_unit(&self) -> bool {
        self.terms.len() == 1 && self.terms.keys().next().is_some_and(|e| e.iter().all(|&v| v == 0))
    }

    pub fn add_term(&mut self, e: Monomial, c: Rational) {
        if c.is_zero() {
            return;
        }
        let sum = match self.terms.remove(&e) {
            Some(prev) => prev + c,
            None => c,
        };
        if !sum.is_zero() {
            self.terms.insert(e, sum);
        }
    }

    pub fn leading(&self) -> Option<(&Monomial, &Rational)> {
        self.terms.last_key_value()
    }

    pub fn add(&self, o: &Self) -> Self {
        let mut out = self.clone();
        for (e, c) in &o.terms {
            out.add_term(e.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, o: &Self) -> Self {
        let mut out = self.clone();
        for (e, c) in &o.terms {
            out.add_term(e.clone(), -c.clone());
        }
        out
    }

    pub fn mul(&self, o: &Self) -> Self {
        let mut out = Self::zero(self.nvars);
        for (ea, ca) in &self.terms {
            for (eb, cb) in &o.terms {
                out.add_term(mono_mul(ea, eb), ca * cb);
            }
        }
        out
    }

    /// `c x^e · self`.
    pub fn mul_term(&self, e: &Monomial, c: &Rational) -> Self {
        Self {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(k, v)| (mono_mul(k, e), v * c)).collect(),
        }
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::zero(self.nvars);
        }
        Self {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(k, v)| (k.clone(), v * c)).collect(),
        }
    }

    pub fn monic(&self) -> Self {
        match self.leading() {
            Some((_, c)) => self.scale(&c.recip()),
            None => self.clone(),
        }
    }

    /// Variables that occur with positive exponent.
    pub fn support(&self) -> Vec<usize> {
        (0..self.nvars)
            .filter(|&i| self.terms.keys().any(|e| e[i] > 0))
            .collect()
    }

    pub fn eval(&self, point: &[GaussianRational]) -> GaussianRational {
        let mut acc = GaussianRational::zero();
        for (e, c) in &self.terms {
            let mut t = GaussianRational::real(c.clone());
            for (x, &k) in point.iter().zip(e) {
                if k > 0 {
                    t = &t * &x.pow(k);
                }
            }
            acc += &t;
        }
        acc
    }
}

pub fn mono_mul(a: &Monomial, b: &Monomial) -> Monomial {
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

pub fn mono_lcm(a: &Monomial, b: &Monomial) -> Monomial {
    a.iter().zip(b).map(|(x, y)| *x.max(y)).collect()
}

pub fn mono_divides(a: &Monomial, b: &Monomial) -> bool {
    a.iter().zip(b).all(|(x, y)| x <= y)
}

/// `b / a`, assuming `a | b`.
pub fn mono_div(b: &Monomial, a: &Monomial) -> Monomial {
    b.iter().zip(a).map(|(x, y)| x - y).collect()
}

pub fn mono_coprime(a: &Monomial, b: &Monomial) -> bool {
    a.iter().zip(b).all(|(x, y)| *x == 0 || *y == 0)
}

impl fmt::Display for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .rev()
            .map(|(e, c)| {
                let vars: Vec<String> = e
                    .iter()
                    .enumerate()
                    .filter(|(_, &k)| k > 0)
                    .map(|(i, &k)| if k == 1 { format!("x{i}") } else { format!("x{i}^{k}") })
                    .collect();
                if vars.is_empty() {
                    c.to_string()
                } else {
                    format!("{c}*{}", vars.join("*"))
                }
            })
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::number::rat_int;

    #[test]
    fn lex_leading_term() {
        // x0 + x1^5: x0 leads in lex
        let p = MultiPoly::var(2, 0).add(&MultiPoly::var(2, 1).mul_term(&vec![0, 4], &rat_int(1)));
        assert_eq!(p.leading().unwrap().0, &vec![1, 0]);
        assert_eq!(p.support(), vec![0, 1]);
    }

    #[test]
    fn arithmetic() {
        let x = MultiPoly::var(2, 0);
        let y = MultiPoly::var(2, 1);
        let s = x.add(&y);
        let d = x.sub(&y);
        let prod = s.mul(&d); // x² − y²
        assert_eq!(prod.terms().len(), 2);
        assert_eq!(prod.eval(&[GaussianRational::from_int(3), GaussianRational::from_int(2)]), GaussianRational::from_int(5));
        assert!(prod.sub(&prod).is_zero());
        assert!(MultiPoly::constant(2, rat_int(4)).is_unit());
    }
}
