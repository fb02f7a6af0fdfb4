//! Closed-form inversions for degree 1, monic degree 2 and 3, and monic
//! reciprocal degree 6.

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::number::GaussianRational;
use crate::poly::Poly;
use crate::resultant::{cyclic_resultant, ResultantSequence};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Shape {
    Monic,
    General,
    MonicReciprocal,
}

type Q = GaussianRational;

fn c(n: i64) -> Q {
    Q::from_int(n)
}

fn nonzero(v: &Q, name: &str) -> Result<()> {
    if v.is_zero() {
        Err(Error::DegenerateDenominator(name.into()))
    } else {
        Ok(())
    }
}

/// Values needed by the closed form for `(d, shape)`.
pub fn required_values(d: usize, shape: Shape) -> Result<usize> {
    match (d, shape) {
        (1, Shape::General | Shape::Monic) => Ok(2),
        (2, Shape::Monic) => Ok(2),
        (3, Shape::Monic) => Ok(4),
        (6, Shape::MonicReciprocal) => Ok(4),
        _ => Err(Error::Unsupported(format!(
            "no closed form for degree {d} with shape {shape:?}"
        ))),
    }
}

/// `(a_0, a_1)` of `a_0 x + a_1` from `r_1, r_2`.
pub fn linear_coefficients(r1: &Q, r2: &Q) -> Result<(Q, Q)> {
    nonzero(r1, "r1")?;
    let two_r1 = &c(2) * r1;
    let sq = r1 * r1;
    let a1 = &(&-sq.clone() - r2) / &two_r1;
    let a0 = &(r2 - &sq) / &two_r1;
    Ok((a0, a1))
}

/// The alternative linear `a_0` expression `(r_2² − r_1)/(2r_1)`, kept for
/// auditing against the oracle.
pub fn printed_linear_a0(r1: &Q, r2: &Q) -> Result<Q> {
    nonzero(r1, "r1")?;
    Ok(&(&(r2 * r2) - r1) / &(&c(2) * r1))
}

fn quadratic(r1: &Q, r2: &Q) -> Result<Vec<Q>> {
    nonzero(r1, "r1")?;
    let two_r1 = &c(2) * r1;
    let sq = r1 * r1;
    let a1 = &(&sq - r2) / &two_r1;
    let a2 = &(&(&sq - &two_r1) + r2) / &two_r1;
    Ok(vec![a1, a2])
}

fn cubic(r: &[Q]) -> Result<Vec<Q>> {
    let (r1, r2, r3, r4) = (&r[0], &r[1], &r[2], &r[3]);
    nonzero(r1, "r1")?;
    nonzero(r2, "r2")?;
    let r1_2 = r1 * r1;
    let r1_3 = &r1_2 * r1;
    let r1_4 = &r1_3 * r1;
    let r2_2 = r2 * r2;
    let r2_3 = &r2_2 * r2;
    // shared part: r2 r1^4 + 8 r2 r1 r3 − 6 r1^2 r4 − 3 r2^3
    let shared = &(&(&(r2 * &r1_4) + &(&(&c(8) * r2) * &(r1 * r3))) - &(&(&c(6) * &r1_2) * r4)) - &(&c(3) * &r2_3);
    let den = &(&c(24) * r2) * &r1_2;
    let a1_num = &(&-(&(&c(12) * r2) * &r1_3) - &(&(&c(12) * r1) * &r2_2)) - &shared;
    let a1 = &a1_num / &den;
    let a2 = &(&(&-r1_2.clone() - &(&c(2) * r1)) + r2) / &(&c(2) * r1);
    let a3 = &shared / &den;
    Ok(vec![a1, a2, a3])
}

fn sextic_reciprocal(r: &[Q]) -> Result<Vec<Q>> {
    let (r1, r2, r3, r4) = (&r[0], &r[1], &r[2], &r[3]);
    nonzero(r1, "r1")?;
    let p = |k: &Q, e: u32| k.pow(e);
    let t = |k: i64, f: &[&Q]| f.iter().fold(c(k), |acc, x| &acc * *x);
    let (r1_2, r1_3, r1_4, r1_5, r1_6) = (p(r1, 2), p(r1, 3), p(r1, 4), p(r1, 5), p(r1, 6));
    let (r2_2, r2_3, r2_4) = (p(r2, 2), p(r2, 3), p(r2, 4));
    let sum = |xs: Vec<Q>| xs.iter().fold(Q::zero(), |acc, x| &acc + x);
    let pp = sum(vec![
        t(-540, &[&r1_2, r2, r4]),
        t(-13824, &[&r1_3, r2]),
        t(1, &[&r1_6, r2]),
        t(27, &[&r2_3, &r1_2]),
        t(9, &[&r1_4, &r2_2]),
        t(27, &[&r2_4]),
        t(-432, &[&r1_3, &r2_2]),
        t(-648, &[r1, &r2_3]),
        t(-72, &[&r1_5, r2]),
        t(-448, &[r3, &r1_3, r2]),
        t(192, &[r3, r1, &r2_2]),
        t(108, &[&r1_4, r4]),
        t(1536, &[&r1_2, r2, r3]),
        t(2592, &[&r1_3, r4]),
        t(1728, &[&r1_4, r2]),
        t(5184, &[&r1_2, &r2_2]),
    ]);
    let qq = &r1_2 * &(&t(-16, &[r3, r2]) + &t(9, &[r4, r1]));
    let rr = sum(vec![
        t(-648, &[r1, &r2_3]),
        t(27, &[&r2_3, &r1_2]),
        t(27, &[&r2_4]),
        t(-576, &[r3, r1, &r2_2]),
        t(2592, &[&r1_3, r4]),
        t(1, &[&r1_6, r2]),
        t(-72, &[&r1_5, r2]),
        t(9, &[&r1_4, &r2_2]),
        t(1728, &[&r1_4, r2]),
        t(-432, &[&r1_3, &r2_2]),
        t(320, &[r3, &r1_3, r2]),
        t(-324, &[&r1_4, r4]),
        t(-13824, &[&r1_3, r2]),
        t(5184, &[&r1_2, &r2_2]),
        t(1536, &[&r1_2, r2, r3]),
        t(-108, &[&r1_2, r2, r4]),
    ]);
    nonzero(&qq, "Q")?;
    let a1 = &pp / &(&c(192) * &qq);
    let a2 = &(&(&r1_2 - &(&c(4) * r1)) + r2) / &(&c(4) * r1);
    let a3 = &-rr / &(&c(96) * &qq);
    Ok(vec![a1, a2, a3])
}

fn verify(f: &Poly, values: &[Q], name: &str) -> Result<()> {
    for (i, v) in values.iter().enumerate() {
        if &cyclic_resultant(f, i + 1)? != v {
            return Err(Error::VerificationFailed(name.into()));
        }
    }
    Ok(())
}

/// Exact inversion by the closed forms, verified against every supplied
/// value.
pub fn invert_closed(values: &ResultantSequence, d: usize, shape: Shape) -> Result<Poly> {
    let need = required_values(d, shape)?;
    if values.len() < need {
        return Err(Error::InsufficientLength { needed: need, got: values.len() });
    }
    if let Some(m) = values.first_zero() {
        return Err(Error::ZeroResultant { m });
    }
    let r = &values.values;
    let (poly, name) = match d {
        1 => {
            let (a0, a1) = linear_coefficients(&r[0], &r[1])?;
            if shape == Shape::Monic && !a0.is_one() {
                return Err(Error::VerificationFailed("linear".into()));
            }
            (Poly::new(vec![a1, a0]), "linear")
        }
        2 => (monic_from(&quadratic(&r[0], &r[1])?), "quadratic"),
        3 => (monic_from(&cubic(r)?), "cubic"),
        _ => {
            let a = sextic_reciprocal(r)?;
            let desc = vec![Q::one(), a[0].clone(), a[1].clone(), a[2].clone(), a[1].clone(), a[0].clone(), Q::one()];
            (Poly::new(desc), "sextic")
        }
    };
    verify(&poly, r, name)?;
    Ok(poly)
}

/// `x^d + a_1 x^{d−1} + ⋯ + a_d` from `[a_1, …, a_d]`.
pub fn monic_from(a: &[Q]) -> Poly {
    let mut coeffs: Vec<Q> = a.iter().rev().cloned().collect();
    coeffs.push(Q::one());
    Poly::new(coeffs)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::parse;
    use crate::resultant::sequence;

    fn seq(v: &[i64]) -> ResultantSequence {
        ResultantSequence::from_ints(v)
    }

    #[test]
    fn quadratic_example() {
        let f = invert_closed(&seq(&[2, 24]), 2, Shape::Monic).unwrap();
        assert_eq!(f, parse("x^2-5*x+6").unwrap());
    }

    #[test]
    fn linear_example() {
        let f = invert_closed(&seq(&[1, 3]), 1, Shape::General).unwrap();
        assert_eq!(f, parse("x-2").unwrap());
        // the alternative a_0 form gives (9 − 1)/2 = 4, not 1
        assert_eq!(printed_linear_a0(&c(1), &c(3)).unwrap(), c(4));
        let g = parse("3*x+5").unwrap();
        let s = sequence(&g, 2).unwrap();
        assert_eq!(invert_closed(&s, 1, Shape::General).unwrap(), g);
    }

    #[test]
    fn cubic_example() {
        let f = invert_closed(&seq(&[8, 576, 22568, 748800]), 3, Shape::Monic).unwrap();
        assert_eq!(f, parse("x^3-10*x^2+31*x-30").unwrap());
    }

    #[test]
    fn sextic_round_trip() {
        let f = parse("x^6+2*x^5-3*x^4+5*x^3-3*x^2+2*x+1").unwrap();
        let s = sequence(&f, 4).unwrap();
        assert_eq!(invert_closed(&s, 6, Shape::MonicReciprocal).unwrap(), f);
    }

    #[test]
    fn degenerate_and_wrong_inputs() {
        assert_eq!(
            invert_closed(&seq(&[2, 0]), 2, Shape::Monic),
            Err(Error::ZeroResultant { m: 2 })
        );
        assert_eq!(
            invert_closed(&seq(&[2, 24, 1, 1]), 3, Shape::Monic),
            Err(Error::VerificationFailed("cubic".into()))
        );
        assert!(matches!(
            invert_closed(&seq(&[2]), 2, Shape::Monic),
            Err(Error::InsufficientLength { .. })
        ));
        // 9·r4·r1 = 16·r3·r2 makes Q vanish
        assert_eq!(
            invert_closed(&seq(&[16, 1, 9, 1]), 6, Shape::MonicReciprocal),
            Err(Error::DegenerateDenominator("Q".into()))
        );
        assert!(matches!(invert_closed(&seq(&[1, 2, 3]), 4, Shape::Monic), Err(Error::Unsupported(_))));
    }
}
