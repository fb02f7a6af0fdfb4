//! Exact real-root counting with Sturm sequences.

use std::cmp::Ordering;

use num_traits::{Signed, Zero};

use super::Poly;
use crate::error::{Error, Result};
use crate::number::{GaussianRational, Rational};

#[derive(Clone, Debug, PartialEq)]
pub enum Bound {
    NegInf,
    Finite(Rational),
    PosInf,
}

/// `p, p', −rem(p, p'), …` for a real polynomial.
pub fn sturm_sequence(p: &Poly) -> Vec<Poly> {
    let mut seq = vec![p.clone()];
    let mut prev = p.clone();
    let mut cur = p.derivative();
    while !cur.is_zero() {
        seq.push(cur.clone());
        let (_, r) = prev.div_rem(&cur).expect("nonzero");
        prev = cur;
        cur = -r;
    }
    seq
}

fn sign_at(q: &Poly, at: &Bound) -> Ordering {
    let s = match at {
        Bound::Finite(x) => q.eval(&GaussianRational::real(x.clone())).re,
        Bound::PosInf => q.leading().map(|c| c.re.clone()).unwrap_or_else(Rational::zero),
        Bound::NegInf => {
            let lc = q.leading().map(|c| c.re.clone()).unwrap_or_else(Rational::zero);
            if q.degree().unwrap_or(0) % 2 == 1 {
                -lc
            } else {
                lc
            }
        }
    };
    if s.is_positive() {
        Ordering::Greater
    } else if s.is_negative() {
        Ordering::Less
    } else {
        Ordering::Equal
    }
}

fn sign_changes(seq: &[Poly], at: &Bound) -> usize {
    let signs: Vec<Ordering> = seq
        .iter()
        .map(|q| sign_at(q, at))
        .filter(|s| *s != Ordering::Equal)
        .collect();
    signs.windows(2).filter(|w| w[0] != w[1]).count()
}

/// Number of real roots of `f` in `(lo, hi]`, counted with multiplicity.
/// Callers that need an open interval must ensure `hi` is not a root.
pub fn count_real_roots(f: &Poly, lo: &Bound, hi: &Bound) -> Result<usize> {
    if f.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    if !f.is_real() {
        return Err(Error::NonReal);
    }
    let mut total = 0;
    let (l, h) = f.split_x_power();
    if l > 0 {
        let zero = Bound::Finite(Rational::zero());
        let above_lo = match lo {
            Bound::NegInf => true,
            Bound::Finite(a) => a.is_negative(),
            Bound::PosInf => false,
        };
        let below_hi = match hi {
            Bound::PosInf => true,
            Bound::Finite(b) => !b.is_negative(),
            Bound::NegInf => false,
        };
        if above_lo && below_hi && lo != &zero {
            total += l;
        }
    }
    for (part, m) in h.square_free_decomposition() {
        let seq = sturm_sequence(&part);
        let vl = sign_changes(&seq, lo);
        let vh = sign_changes(&seq, hi);
        total += m * vl.saturating_sub(vh);
    }
    Ok(total)
}
