//! Buchberger's algorithm in lex order and back substitution on the
//! resulting triangular basis.

use num_traits::Zero;

use super::multipoly::{mono_coprime, mono_div, mono_divides, mono_lcm, Monomial, MultiPoly};
use crate::error::{Error, Result};
use crate::number::{GaussianRational, Rational};
use crate::poly::{roots_with_multiplicity, Poly};

/// Full reduction of `p` modulo `basis`.
pub fn normal_form(p: &MultiPoly, basis: &[MultiPoly]) -> MultiPoly {
    let mut rem = MultiPoly::zero(p.nvars());
    let mut cur = p.clone();
    while let Some((lm, lc)) = cur.leading().map(|(e, c)| (e.clone(), c.clone())) {
        match basis
            .iter()
            .find(|g| g.leading().is_some_and(|(ge, _)| mono_divides(ge, &lm)))
        {
            Some(g) => {
                let (ge, gc) = g.leading().expect("nonzero");
                let q = mono_div(&lm, ge);
                cur = cur.sub(&g.mul_term(&q, &(&lc / gc)));
            }
            None => {
                let mut single = MultiPoly::zero(p.nvars());
                single.add_term(lm.clone(), lc.clone());
                rem.add_term(lm, lc);
                cur = cur.sub(&single);
            }
        }
    }
    rem
}

fn s_poly(f: &MultiPoly, g: &MultiPoly) -> MultiPoly {
    let (fe, fc) = f.leading().expect("nonzero");
    let (ge, gc) = g.leading().expect("nonzero");
    let l = mono_lcm(fe, ge);
    f.mul_term(&mono_div(&l, fe), &fc.recip())
        .sub(&g.mul_term(&mono_div(&l, ge), &gc.recip()))
}

fn lcm_of(basis: &[MultiPoly], i: usize, j: usize) -> Monomial {
    mono_lcm(basis[i].leading().expect("nonzero").0, basis[j].leading().expect("nonzero").0)
}

/// Reduced lex Gröbner basis; `[1]` for the unit ideal.
pub fn groebner_basis(generators: &[MultiPoly]) -> Vec<MultiPoly> {
    let nvars = generators.first().map_or(0, MultiPoly::nvars);
    let mut basis: Vec<MultiPoly> = Vec::new();
    for g in generators {
        let r = normal_form(g, &basis);
        if !r.is_zero() {
            basis.push(r.monic());
        }
    }
    if let Some(u) = basis.iter().find(|g| g.is_unit()) {
        return vec![u.monic()];
    }
    let mut pairs: Vec<(usize, usize)> = Vec::new();
    for j in 0..basis.len() {
        for i in 0..j {
            pairs.push((i, j));
        }
    }
    while !pairs.is_empty() {
        // normal selection: smallest lcm
        let (k, _) = pairs
            .iter()
            .enumerate()
            .min_by(|a, b| lcm_of(&basis, a.1 .0, a.1 .1).cmp(&lcm_of(&basis, b.1 .0, b.1 .1)))
            .expect("nonempty");
        let (i, j) = pairs.swap_remove(k);
        let (li, lj) = (basis[i].leading().expect("nonzero").0, basis[j].leading().expect("nonzero").0);
        if mono_coprime(li, lj) {
            continue;
        }
        let r = normal_form(&s_poly(&basis[i], &basis[j]), &basis);
        if r.is_zero() {
            continue;
        }
        if r.is_unit() {
            return vec![MultiPoly::constant(nvars, Rational::from_integer(1.into()))];
        }
        basis.push(r.monic());
        let n = basis.len() - 1;
        for i in 0..n {
            pairs.push((i, n));
        }
    }
    interreduce(basis)
}

fn interreduce(mut basis: Vec<MultiPoly>) -> Vec<MultiPoly> {
    // drop elements whose leading monomial is divisible by another's
    let mut keep: Vec<MultiPoly> = Vec::new();
    basis.sort_by(|a, b| a.leading().map(|l| l.0.clone()).cmp(&b.leading().map(|l| l.0.clone())));
    for g in basis {
        let lm = g.leading().expect("nonzero").0.clone();
        if !keep.iter().any(|k| mono_divides(k.leading().expect("nonzero").0, &lm)) {
            keep.push(g);
        }
    }
    let mut out = Vec::with_capacity(keep.len());
    for i in 0..keep.len() {
        let others: Vec<MultiPoly> = keep.iter().enumerate().filter(|(j, _)| *j != i).map(|(_, g)| g.clone()).collect();
        let lead = keep[i].leading().map(|(e, c)| (e.clone(), c.clone())).expect("nonzero");
        let mut tail = keep[i].clone();
        let mut head = MultiPoly::zero(tail.nvars());
        head.add_term(lead.0, lead.1);
        tail = tail.sub(&head);
        out.push(head.add(&normal_form(&tail, &others)).monic());
    }
    out
}

/// Every S-polynomial reduces to zero.
pub fn is_groebner_basis(basis: &[MultiPoly]) -> bool {
    (0..basis.len()).all(|j| (0..j).all(|i| normal_form(&s_poly(&basis[i], &basis[j]), basis).is_zero()))
}

/// Zero-dimensional iff every variable has a pure power among the leading
/// monomials.
pub fn is_zero_dimensional(basis: &[MultiPoly]) -> bool {
    let n = basis.first().map_or(0, MultiPoly::nvars);
    (0..n).all(|v| {
        basis.iter().any(|g| {
            let e = g.leading().expect("nonzero").0;
            e[v] > 0 && e.iter().enumerate().all(|(i, &k)| i == v || k == 0)
        })
    })
}

/// Univariate polynomial in variable `v` after substituting the later
/// variables.
fn specialize(g: &MultiPoly, v: usize, values: &[Option<GaussianRational>]) -> Poly {
    let mut coeffs: Vec<GaussianRational> = Vec::new();
    for (e, c) in g.terms() {
        let mut t = GaussianRational::real(c.clone());
        for (i, &k) in e.iter().enumerate() {
            if i != v && k > 0 {
                t = &t * &values[i].as_ref().expect("assigned").pow(k);
            }
        }
        let deg = e[v] as usize;
        if coeffs.len() <= deg {
            coeffs.resize(deg + 1, GaussianRational::zero());
        }
        coeffs[deg] += &t;
    }
    Poly::new(coeffs)
}

fn exact_roots(p: &Poly, max_den: u64) -> Result<Vec<GaussianRational>> {
    let mut out: Vec<GaussianRational> = Vec::new();
    for (z, _) in roots_with_multiplicity(p, 1e-12)? {
        if let Some(q) = GaussianRational::rationalize(z, max_den) {
            if p.eval(&q).is_zero() && !out.contains(&q) {
                out.push(q);
            }
        }
    }
    Ok(out)
}

/// All Gaussian-rational points of a zero-dimensional lex basis, found
/// variable by variable from the last one.
pub fn solve_triangular(basis: &[MultiPoly], max_den: u64) -> Result<Vec<Vec<GaussianRational>>> {
    if basis.iter().any(MultiPoly::is_unit) {
        return Err(Error::UnitIdeal);
    }
    if !is_zero_dimensional(basis) {
        return Err(Error::PositiveDimensional);
    }
    let n = basis.first().map_or(0, MultiPoly::nvars);
    let mut partial: Vec<Vec<Option<GaussianRational>>> = vec![vec![None; n]];
    for v in (0..n).rev() {
        let relevant: Vec<&MultiPoly> = basis
            .iter()
            .filter(|g| {
                let s = g.support();
                s.contains(&v) && s.iter().all(|&i| i >= v)
            })
            .collect();
        let mut next = Vec::new();
        for assignment in &partial {
            let mut gcd: Option<Poly> = None;
            for g in &relevant {
                let u = specialize(g, v, assignment);
                if u.is_zero() {
                    continue;
                }
                gcd = Some(match gcd {
                    None => u.monic(),
                    Some(prev) => Poly::gcd(&prev, &u),
                });
            }
            let Some(u) = gcd else {
                return Err(Error::PositiveDimensional);
            };
            if u.is_constant() {
                continue;
            }
            for root in exact_roots(&u, max_den)? {
                let mut a = assignment.clone();
                a[v] = Some(root);
                next.push(a);
            }
        }
        partial = next;
    }
    let points: Vec<Vec<GaussianRational>> = partial
        .into_iter()
        .map(|a| a.into_iter().map(|x| x.expect("assigned")).collect::<Vec<_>>())
        .filter(|pt| basis.iter().all(|g| g.eval(pt).is_zero()))
        .collect();
    Ok(points)
}
