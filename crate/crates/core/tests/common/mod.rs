#![allow(dead_code)]

use cycres::number::{rat, Rational};
use cycres::{GaussianRational, Poly};
use num_traits::{One, Zero};
use proptest::prelude::*;

pub fn q(n: i64) -> GaussianRational {
    GaussianRational::from_int(n)
}

pub fn qr(r: &Rational) -> GaussianRational {
    GaussianRational::real(r.clone())
}

/// `lead · ∏(x − α)`.
pub fn from_roots(lead: &Rational, roots: &[Rational]) -> Poly {
    let mut p = Poly::constant(qr(lead));
    for a in roots {
        p = p * Poly::new(vec![-qr(a), GaussianRational::one()]);
    }
    p
}

/// Independent oracle `r_m = lead^m ∏(α^m − 1)` from the defining product.
pub fn oracle_r(lead: &Rational, roots: &[Rational], m: usize) -> Rational {
    let e = m as i32;
    let mut acc = num_traits::pow::Pow::pow(lead.clone(), e);
    for a in roots {
        acc *= num_traits::pow::Pow::pow(a.clone(), e) - Rational::one();
    }
    acc
}

/// Nonzero rationals away from ±1 with small numerators and denominators.
pub fn root_strategy() -> impl Strategy<Value = Rational> {
    (-9i64..=9, 1i64..=4)
        .prop_map(|(n, d)| rat(n, d))
        .prop_filter("not 0 or ±1", |r| !r.is_zero() && r.numer().magnitude() != r.denom().magnitude())
}

/// Integer coefficients (ascending) of degree exactly `d`.
pub fn int_poly(d: usize, bound: i64) -> impl Strategy<Value = Poly> {
    (
        proptest::collection::vec(-bound..=bound, d),
        (1..=bound).prop_flat_map(|b| prop_oneof![Just(b), Just(-b)]),
    )
        .prop_map(|(mut c, lead)| {
            c.push(lead);
            Poly::from_ints(&c)
        })
}

pub fn monic_int_poly(d: usize, bound: i64) -> impl Strategy<Value = Poly> {
    proptest::collection::vec(-bound..=bound, d).prop_map(|mut c| {
        c.push(1);
        Poly::from_ints(&c)
    })
}

/// Rational coefficients with small denominators, degree exactly `d`.
pub fn rational_poly(d: usize, bound: i64) -> impl Strategy<Value = Poly> {
    proptest::collection::vec((-bound..=bound, 1i64..=3), d + 1)
        .prop_filter("nonzero leading", |c| c.last().is_some_and(|&(n, _)| n != 0))
        .prop_map(|c| Poly::new(c.into_iter().map(|(n, d)| GaussianRational::real(rat(n, d))).collect()))
}

pub fn rel_close(a: f64, b: f64, tol: f64) -> bool {
    (a - b).abs() <= tol * a.abs().max(b.abs()).max(1.0)
}

pub mod gr {
    use cycres::groupring::{BinomialProduct, FgAbelianGroup, GroupElement};
    use cycres::GaussianRational;
    use rand::seq::SliceRandom;
    use rand::Rng;
    use rand_chacha::ChaCha8Rng;

    /// `Z^2 ⊕ Z/3`.
    pub fn group() -> FgAbelianGroup {
        FgAbelianGroup::new(2, vec![3]).unwrap()
    }

    pub fn element(g: &FgAbelianGroup, rng: &mut ChaCha8Rng) -> GroupElement {
        let free: Vec<i64> = (0..g.rank).map(|_| rng.gen_range(-3..=3)).collect();
        let tors: Vec<i64> = g.torsion.iter().map(|&m| rng.gen_range(0..m as i64)).collect();
        g.element(&free, &tors).unwrap()
    }

    fn scalar(rng: &mut ChaCha8Rng) -> GaussianRational {
        match rng.gen_range(0..5) {
            0 => GaussianRational::from_int(1),
            1 => GaussianRational::from_int(-1),
            2 => GaussianRational::from_int(2),
            3 => GaussianRational::from_int(-3),
            _ => GaussianRational::new(cycres::number::rat(1, 1), cycres::number::rat(1, 1)),
        }
    }

    /// Random product with up to `max_e` factors, every difference of
    /// infinite order.
    pub fn product(g: &FgAbelianGroup, rng: &mut ChaCha8Rng, max_e: usize) -> BinomialProduct {
        let e = rng.gen_range(0..=max_e);
        let mut factors = Vec::with_capacity(e);
        while factors.len() < e {
            let (u, v) = (element(g, rng), element(g, rng));
            if g.infinite_order(&g.sub(&v, &u)) {
                factors.push((u, v));
            }
        }
        BinomialProduct {
            unit_coeff: scalar(rng),
            unit_elt: element(g, rng),
            factors,
        }
    }

    /// The same element written differently: factors permuted, each shifted
    /// by `s^t` and possibly flipped, with the unit compensating.
    pub fn rewrite(g: &FgAbelianGroup, p: &BinomialProduct, rng: &mut ChaCha8Rng) -> BinomialProduct {
        let mut coeff = p.unit_coeff.clone();
        let mut elt = p.unit_elt.clone();
        let mut factors = Vec::with_capacity(p.factors.len());
        for (u, v) in &p.factors {
            let t = element(g, rng);
            elt = g.sub(&elt, &t);
            let (a, b) = (g.add(u, &t), g.add(v, &t));
            if rng.gen_bool(0.5) {
                coeff = -coeff;
                factors.push((b, a));
            } else {
                factors.push((a, b));
            }
        }
        factors.shuffle(rng);
        BinomialProduct {
            unit_coeff: coeff,
            unit_elt: elt,
            factors,
        }
    }

    /// A small change to `p`: a torsion shift of the unit, a scalar sign, a
    /// moved factor endpoint, or a fresh product with the same factor count.
    pub fn perturb(g: &FgAbelianGroup, p: &BinomialProduct, rng: &mut ChaCha8Rng) -> BinomialProduct {
        let mut q = p.clone();
        match rng.gen_range(0..4) {
            0 => {
                let t = g.element(&[0, 0], &[1]).unwrap();
                q.unit_elt = g.add(&q.unit_elt, &t);
            }
            1 => q.unit_coeff = -q.unit_coeff.clone(),
            2 if !q.factors.is_empty() => {
                let i = rng.gen_range(0..q.factors.len());
                let bump = g.basis(rng.gen_range(0..g.rank));
                let (u, v) = q.factors[i].clone();
                let v2 = g.add(&v, &bump);
                if g.infinite_order(&g.sub(&v2, &u)) {
                    q.factors[i] = (u, v2);
                } else {
                    q.factors[i] = (u, g.add(&v2, &bump));
                }
            }
            _ => {
                let e = q.factors.len();
                loop {
                    let fresh = product(g, rng, e);
                    if fresh.factors.len() == e {
                        q = fresh;
                        break;
                    }
                }
            }
        }
        q
    }
}
