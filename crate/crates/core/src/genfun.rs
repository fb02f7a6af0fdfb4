//! Rational generating functions of cyclic-resultant sequences.
//!
//! With roots `α_1..α_d` and leading coefficient `a_0`,
//! `F_k(z) = ∏_{i_1<…<i_k} (1 − a_0 α_{i_1}⋯α_{i_k} z)` and
//! `exp(−Σ r_m z^m / m) = G_d`, the alternating quotient of the `F_k`
//! (numerator: `k ≡ d mod 2`).

use num_complex::Complex64;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::groupring::{BinomialProduct, FgAbelianGroup, GroupElement};
use crate::number::{GaussianRational, Rational};
use crate::poly::{has_root_of_unity, roots_numeric, roots_with_multiplicity, Poly};
use crate::resultant::{sign_data, ResultantSequence};

/// Roots closer than this are treated as one value in divisors.
pub const CLUSTER_TOL: f64 = 1e-7;

const ROOT_TOL: f64 = 1e-12;

/// Truncated power series in `z`; `coeffs[n]` is the coefficient of `z^n`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct PowerSeries {
    pub coeffs: Vec<Complex64>,
}

impl PowerSeries {
    pub fn order(&self) -> usize {
        self.coeffs.len().saturating_sub(1)
    }

    /// Largest coefficientwise distance.
    pub fn max_diff(&self, other: &PowerSeries) -> f64 {
        let n = self.coeffs.len().max(other.coeffs.len());
        let get = |s: &PowerSeries, i: usize| s.coeffs.get(i).copied().unwrap_or_default();
        (0..n).map(|i| (get(self, i) - get(other, i)).norm()).fold(0.0, f64::max)
    }
}

/// `scalar · ∏(1 − c z) / ∏(1 − c z)`, raised to `exponent = ±1`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct RationalFunctionRep {
    pub num_factors: Vec<Complex64>,
    pub den_factors: Vec<Complex64>,
    pub scalar: Complex64,
    pub exponent: i8,
}

impl RationalFunctionRep {
    pub fn product(factors: Vec<Complex64>) -> Self {
        Self {
            num_factors: factors,
            den_factors: Vec::new(),
            scalar: Complex64::one(),
            exponent: 1,
        }
    }
}

/// Products `a_0 ∏_{i∈S} α_i` over all `k`-subsets `S`, in lexicographic
/// subset order. Subsets containing a zero root give `0`.
fn subset_products(lead: Complex64, roots: &[Complex64], k: usize) -> Vec<Complex64> {
    fn rec(roots: &[Complex64], start: usize, left: usize, acc: Complex64, out: &mut Vec<Complex64>) {
        if left == 0 {
            out.push(acc);
            return;
        }
        for i in start..=roots.len() - left {
            rec(roots, i + 1, left - 1, acc * roots[i], out);
        }
    }
    let mut out = Vec::new();
    rec(roots, 0, k, lead, &mut out);
    out
}

/// `F_k` as the list of its `C(d, k)` factor constants.
pub fn f_k(f: &Poly, k: usize) -> Result<RationalFunctionRep> {
    let d = f.degree().ok_or(Error::ZeroPolynomial)?;
    if k > d {
        return Err(Error::InvalidArgument(format!("k = {k} exceeds degree {d}")));
    }
    let roots = roots_numeric(f, ROOT_TOL)?;
    let lead = f.leading().expect("nonzero").to_complex();
    Ok(RationalFunctionRep::product(subset_products(lead, &roots, k)))
}

/// `G_d = F_d F_{d−2} ⋯ / F_{d−1} F_{d−3} ⋯`, without cancellation.
pub fn g_d(f: &Poly) -> Result<RationalFunctionRep> {
    let d = f.degree().ok_or(Error::ZeroPolynomial)?;
    if has_root_of_unity(f, 64) {
        return Err(Error::RootOfUnity);
    }
    let roots = roots_numeric(f, ROOT_TOL)?;
    let lead = f.leading().expect("nonzero").to_complex();
    let mut num = Vec::new();
    let mut den = Vec::new();
    for k in (0..=d).rev() {
        let cs = subset_products(lead, &roots, k);
        if (d - k) % 2 == 0 {
            num.extend(cs);
        } else {
            den.extend(cs);
        }
    }
    Ok(RationalFunctionRep {
        num_factors: num,
        den_factors: den,
        scalar: Complex64::one(),
        exponent: 1,
    })
}

/// Exact coefficients of `exp(−Σ_{m≥1} r_m z^m / m)` up to `z^order`, from
/// `b_0 = 1`, `n b_n = −Σ_{k=1..n} r_k b_{n−k}`.
pub fn exp_series_exact(seq: &ResultantSequence, order: usize) -> Result<Vec<GaussianRational>> {
    if seq.len() < order {
        return Err(Error::InsufficientLength {
            needed: order,
            got: seq.len(),
        });
    }
    let mut b = vec![GaussianRational::one()];
    for n in 1..=order {
        let mut acc = GaussianRational::zero();
        for k in 1..=n {
            acc -= &(&seq.values[k - 1] * &b[n - k]);
        }
        let inv_n = GaussianRational::real(Rational::new(1.into(), (n as i64).into()));
        b.push(&acc * &inv_n);
    }
    Ok(b)
}

pub fn exp_series(seq: &ResultantSequence, order: usize) -> Result<PowerSeries> {
    Ok(PowerSeries {
        coeffs: exp_series_exact(seq, order)?.iter().map(GaussianRational::to_complex).collect(),
    })
}

fn mul_linear(s: &mut [Complex64], c: Complex64) {
    for n in (1..s.len()).rev() {
        let prev = s[n - 1];
        s[n] -= c * prev;
    }
}

fn div_linear(s: &mut [Complex64], c: Complex64) {
    for n in 1..s.len() {
        let prev = s[n - 1];
        s[n] += c * prev;
    }
}

/// Multiplicative inverse of a series with nonzero constant term.
fn invert_series(s: &[Complex64]) -> Vec<Complex64> {
    let mut out = vec![Complex64::zero(); s.len()];
    if s.is_empty() {
        return out;
    }
    let inv0 = s[0].inv();
    out[0] = inv0;
    for n in 1..s.len() {
        let acc: Complex64 = (1..=n).map(|k| s[k] * out[n - k]).sum();
        out[n] = -acc * inv0;
    }
    out
}

/// Taylor coefficients of `rf` up to `z^order`.
pub fn series_of(rf: &RationalFunctionRep, order: usize) -> PowerSeries {
    let mut s = vec![Complex64::zero(); order + 1];
    s[0] = rf.scalar;
    for &c in &rf.num_factors {
        mul_linear(&mut s, c);
    }
    for &c in &rf.den_factors {
        div_linear(&mut s, c);
    }
    if rf.exponent < 0 {
        s = invert_series(&s);
    }
    PowerSeries { coeffs: s }
}

/// Coefficients of `−z R'/R` for `R = rf` (index 0 is 0). For `G_d` these
/// reproduce `r_m`.
pub fn log_derivative_coeffs(rf: &RationalFunctionRep, order: usize) -> Vec<Complex64> {
    let mut out = vec![Complex64::zero(); order + 1];
    let sign = f64::from(rf.exponent);
    for m in 1..=order {
        let num: Complex64 = rf.num_factors.iter().map(|c| c.powu(m as u32)).sum();
        let den: Complex64 = rf.den_factors.iter().map(|c| c.powu(m as u32)).sum();
        out[m] = (num - den) * sign;
    }
    out
}

/// `G̃_d` of `f̃ = σδ f`, carrying exponent `ε`, so that
/// `exp(−Σ |r_m| z^m / m) = (G̃_d)^ε` (`σ` is the sign of `a_0`).
pub fn abs_genfun(f: &Poly) -> Result<RationalFunctionRep> {
    let sd = sign_data(f)?;
    let ft = if sd.scale_sign() < 0 { -f.clone() } else { f.clone() };
    let mut rf = g_d(&ft)?;
    rf.exponent = sd.epsilon;
    Ok(rf)
}

/// What a free generator of a divisor group stands for.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", content = "value", rename_all = "snake_case")]
pub enum Generator {
    /// A leading coefficient.
    Leading(Complex64),
    /// A nonzero root value (its inverse is the negated basis vector).
    Root(Complex64),
    /// `−1`, the generator of the `Z/2` torsion summand.
    Sign,
}

/// `(−1)^l [a_0^{−1}] ∏ ([α_i^{−1}] − [1])` in the group ring of a free
/// model of the multiplicative group generated by `a_0` and the roots.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Divisor {
    pub group: FgAbelianGroup,
    pub generators: Vec<Generator>,
    pub product: BinomialProduct,
}

fn distinct_nonzero_roots(f: &Poly) -> Result<(usize, Vec<(Complex64, usize)>)> {
    let (l, h) = f.split_x_power();
    let roots = roots_with_multiplicity(&h, ROOT_TOL)?;
    for (i, (a, _)) in roots.iter().enumerate() {
        for (b, _) in &roots[i + 1..] {
            if (a - b).norm() <= CLUSTER_TOL * a.norm().max(1.0) {
                return Err(Error::ClusterAmbiguity(fmt_c(*a), fmt_c(*b)));
            }
        }
    }
    Ok((l, roots))
}

fn fmt_c(z: Complex64) -> String {
    format!("{}{:+}i", z.re, z.im)
}

fn close(a: Complex64, b: Complex64) -> bool {
    (a - b).norm() <= CLUSTER_TOL * a.norm().max(b.norm()).max(1.0)
}

fn check_divisor_input(f: &Poly) -> Result<()> {
    if f.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    if has_root_of_unity(f, 64) {
        return Err(Error::RootOfUnity);
    }
    Ok(())
}

fn build_product(
    group: &FgAbelianGroup,
    l: usize,
    lead_elt: &GroupElement,
    root_elts: &[(GroupElement, usize)],
) -> BinomialProduct {
    let mut factors = Vec::new();
    for (e, mult) in root_elts {
        for _ in 0..*mult {
            factors.push((group.neg(e), group.identity()));
        }
    }
    BinomialProduct {
        unit_coeff: if l.is_multiple_of(2) {
            GaussianRational::one()
        } else {
            -GaussianRational::one()
        },
        unit_elt: group.neg(lead_elt),
        factors,
    }
}

/// Divisor of `G_d` over the free group on `a_0` and the distinct nonzero
/// roots (generator 0 is `a_0`).
pub fn divisor(f: &Poly) -> Result<Divisor> {
    check_divisor_input(f)?;
    let (l, roots) = distinct_nonzero_roots(f)?;
    let group = FgAbelianGroup::free(1 + roots.len());
    let mut generators = vec![Generator::Leading(f.leading().expect("nonzero").to_complex())];
    generators.extend(roots.iter().map(|(z, _)| Generator::Root(*z)));
    let root_elts: Vec<(GroupElement, usize)> =
        roots.iter().enumerate().map(|(i, (_, m))| (group.basis(i + 1), *m)).collect();
    let product = build_product(&group, l, &group.basis(0), &root_elts);
    Ok(Divisor {
        group,
        generators,
        product,
    })
}

/// Divisors of two polynomials written over one group.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct DivisorPair {
    pub group: FgAbelianGroup,
    pub generators: Vec<Generator>,
    pub first: BinomialProduct,
    pub second: BinomialProduct,
}

/// Largest number of root classes for which the leading coefficient of `f`
/// is searched among `±a_0(g) ∏ β^{±1}`.
const LEADING_SEARCH_LIMIT: usize = 10;

/// Writes the divisors of `f` and `g` over a shared group. Roots are
/// grouped into classes up to inversion; the leading coefficient of `f` is
/// expressed as `±a_0(g)` times a product of root classes when such a
/// relation holds numerically, and becomes a fresh generator otherwise.
/// The free part has `a_0(g)` first, then the root classes; the torsion
/// summand `Z/2` stands for `−1`.
pub fn divisor_pair(f: &Poly, g: &Poly) -> Result<DivisorPair> {
    check_divisor_input(f)?;
    check_divisor_input(g)?;
    let (lf, roots_f) = distinct_nonzero_roots(f)?;
    let (lg, roots_g) = distinct_nonzero_roots(g)?;

    // (representative, exponents of each root relative to it)
    let mut classes: Vec<Complex64> = Vec::new();
    let mut classify = |z: Complex64| -> (usize, i64) {
        for (i, &rep) in classes.iter().enumerate() {
            if close(z, rep) {
                return (i, 1);
            }
            if close(z * rep, Complex64::one()) {
                return (i, -1);
            }
        }
        classes.push(z);
        (classes.len() - 1, 1)
    };
    let cls_g: Vec<((usize, i64), usize)> = roots_g.iter().map(|&(z, m)| (classify(z), m)).collect();
    let cls_f: Vec<((usize, i64), usize)> = roots_f.iter().map(|&(z, m)| (classify(z), m)).collect();

    let lead_f = f.leading().expect("nonzero").to_complex();
    let lead_g = g.leading().expect("nonzero").to_complex();
    let k = classes.len();
    let relation = if k <= LEADING_SEARCH_LIMIT {
        find_leading_relation(lead_f, lead_g, &classes)
    } else {
        None
    };
    let extra = usize::from(relation.is_none());
    let group = FgAbelianGroup::new(1 + k + extra, vec![2]).expect("valid torsion");

    let mut generators = vec![Generator::Leading(lead_g)];
    generators.extend(classes.iter().map(|&z| Generator::Root(z)));
    if extra == 1 {
        generators.push(Generator::Leading(lead_f));
    }
    generators.push(Generator::Sign);

    let elt = |free: Vec<i64>, sign: i64| group.element(&free, &[sign]).expect("shape");
    let root_elt = |(c, e): (usize, i64)| {
        let mut v = vec![0; group.rank];
        v[1 + c] = e;
        elt(v, 0)
    };
    let lead_g_elt = group.basis(0);
    let lead_f_elt = match &relation {
        Some((sign, exps)) => {
            let mut v = vec![0; group.rank];
            v[0] = 1;
            for (i, &x) in exps.iter().enumerate() {
                v[1 + i] = x;
            }
            elt(v, i64::from(*sign < 0))
        }
        None => group.basis(1 + k),
    };
    let first = build_product(
        &group,
        lf,
        &lead_f_elt,
        &cls_f.iter().map(|&(c, m)| (root_elt(c), m)).collect::<Vec<_>>(),
    );
    let second = build_product(
        &group,
        lg,
        &lead_g_elt,
        &cls_g.iter().map(|&(c, m)| (root_elt(c), m)).collect::<Vec<_>>(),
    );
    Ok(DivisorPair {
        group,
        generators,
        first,
        second,
    })
}

/// Searches `lead_f = σ · lead_g · ∏ classes[i]^{x_i}` with `σ = ±1` and
/// `x_i ∈ {−1, 0, 1}`, preferring the smallest support.
fn find_leading_relation(lead_f: Complex64, lead_g: Complex64, classes: &[Complex64]) -> Option<(i8, Vec<i64>)> {
    let k = classes.len();
    let target = lead_f / lead_g;
    let mut best: Option<(usize, i8, Vec<i64>)> = None;
    let total = 3usize.pow(k as u32);
    for code in 0..total {
        let mut exps = vec![0i64; k];
        let mut c = code;
        let mut value = Complex64::one();
        for (i, e) in exps.iter_mut().enumerate() {
            *e = (c % 3) as i64 - 1;
            c /= 3;
            value *= classes[i].powi(*e as i32);
        }
        let support = exps.iter().filter(|&&e| e != 0).count();
        if best.as_ref().is_some_and(|(s, _, _)| *s <= support) {
            continue;
        }
        for sign in [1i8, -1] {
            if close(value * f64::from(sign), target) {
                best = Some((support, sign, exps.clone()));
                break;
            }
        }
    }
    best.map(|(_, s, e)| (s, e))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groupring::{match_factorizations, GroupRingElement, MatchOutcome};
    use crate::poly::parse;
    use crate::resultant::{abs_sequence, sequence};

    fn p(s: &str) -> Poly {
        parse(s).unwrap()
    }

    fn sorted(mut v: Vec<Complex64>) -> Vec<(f64, f64)> {
        v.sort_by(|a, b| a.re.total_cmp(&b.re).then(a.im.total_cmp(&b.im)));
        v.into_iter().map(|z| ((z.re * 1e9).round() / 1e9, (z.im * 1e9).round() / 1e9)).collect()
    }

    fn c(re: f64) -> Complex64 {
        Complex64::new(re, 0.0)
    }

    #[test]
    fn f_k_examples() {
        let f = p("x^2-5*x+6");
        assert_eq!(sorted(f_k(&f, 1).unwrap().num_factors), sorted(vec![c(2.0), c(3.0)]));
        assert_eq!(sorted(f_k(&f, 2).unwrap().num_factors), sorted(vec![c(6.0)]));
        assert_eq!(sorted(f_k(&f, 0).unwrap().num_factors), sorted(vec![c(1.0)]));
        assert!(f_k(&f, 3).is_err());
    }

    #[test]
    fn g_d_examples() {
        let g = g_d(&p("x^2-5*x+6")).unwrap();
        assert_eq!(sorted(g.num_factors), sorted(vec![c(6.0), c(1.0)]));
        assert_eq!(sorted(g.den_factors), sorted(vec![c(2.0), c(3.0)]));
        let g = g_d(&p("x-2")).unwrap();
        assert_eq!((sorted(g.num_factors), sorted(g.den_factors)), (vec![(2.0, 0.0)], vec![(1.0, 0.0)]));
        let g = g_d(&p("3")).unwrap();
        assert_eq!((sorted(g.num_factors), g.den_factors.len()), (vec![(3.0, 0.0)], 0));
        assert_eq!(g_d(&p("x^2+x+1")), Err(Error::RootOfUnity));
    }

    #[test]
    fn series_examples() {
        let rf = RationalFunctionRep {
            num_factors: vec![c(2.0)],
            den_factors: vec![c(1.0)],
            scalar: Complex64::one(),
            exponent: 1,
        };
        assert_eq!(series_of(&rf, 3).coeffs, vec![c(1.0), c(-1.0), c(-1.0), c(-1.0)]);
        assert_eq!(series_of(&RationalFunctionRep::product(vec![c(1.0)]), 2).coeffs, vec![c(1.0), c(-1.0), c(0.0)]);
        assert_eq!(series_of(&RationalFunctionRep::product(vec![]), 2).coeffs, vec![c(1.0), c(0.0), c(0.0)]);
    }

    #[test]
    fn exp_series_examples() {
        let s = exp_series(&sequence(&p("x-2"), 2).unwrap(), 2).unwrap();
        assert_eq!(s.coeffs, vec![c(1.0), c(-1.0), c(-1.0)]);
        let s = exp_series(&ResultantSequence::from_ints(&[1, 1, 1]), 3).unwrap();
        assert_eq!(s.coeffs, vec![c(1.0), c(-1.0), c(0.0), c(0.0)]);
        let f = p("x^2-5*x+6");
        let lhs = exp_series(&sequence(&f, 12).unwrap(), 12).unwrap();
        assert!(lhs.max_diff(&series_of(&g_d(&f).unwrap(), 12)) < 1e-9);
        assert_eq!(
            exp_series(&ResultantSequence::from_ints(&[1]), 2),
            Err(Error::InsufficientLength { needed: 2, got: 1 })
        );
    }

    #[test]
    fn log_derivative_reproduces_resultants() {
        let f = p("2*x^3-x^2+5*x-3");
        let seq = sequence(&f, 10).unwrap();
        let coeffs = log_derivative_coeffs(&g_d(&f).unwrap(), 10);
        for m in 1..=10 {
            let r = seq.get(m).unwrap().to_complex();
            assert!((coeffs[m] - r).norm() <= 1e-7 * r.norm().max(1.0), "m = {m}");
        }
    }

    #[test]
    fn abs_genfun_examples() {
        for (s, eps) in [("x-2", 1), ("x+2", 1), ("2*x^2-3*x-2", -1)] {
            let f = p(s);
            let rf = abs_genfun(&f).unwrap();
            assert_eq!(rf.exponent, eps, "{s}");
            let lhs = exp_series(&abs_sequence(&f, 8).unwrap(), 8).unwrap();
            assert!(lhs.max_diff(&series_of(&rf, 8)) < 1e-7, "{s}");
        }
    }

    #[test]
    fn divisor_examples() {
        let d = divisor(&p("x-2")).unwrap();
        // [1]([2^{-1}] − [1]) with a_0 = 1 as generator 0, the root 2 as generator 1
        let g = &d.group;
        let expected = GroupRingElement::from_terms(
            g,
            [
                (g.element(&[-1, -1], &[]).unwrap(), GaussianRational::one()),
                (g.element(&[-1, 0], &[]).unwrap(), -GaussianRational::one()),
            ],
        );
        assert_eq!(d.product.expand(g), expected);

        let d = divisor(&p("x^2-5*x+6")).unwrap();
        assert_eq!(d.product.factors.len(), 2);
        assert!(d.product.unit_coeff.is_one());

        let d = divisor(&p("x*(x-2)")).unwrap();
        assert_eq!(d.product.unit_coeff, -GaussianRational::one());
        assert_eq!(d.product.factors.len(), 1);
        assert_eq!(divisor(&p("x^2-1")), Err(Error::RootOfUnity));
    }

    #[test]
    fn divisor_pair_matches_family_members() {
        // (x−5)·reversal((x−2)(x−3)) shares the resultants of (x−2)(x−3)(x−5).
        let g = p("x^3-10*x^2+31*x-30");
        let f = p("(x-5)*(6*x^2-5*x+1)");
        assert_eq!(sequence(&f, 8).unwrap(), sequence(&g, 8).unwrap());
        let pair = divisor_pair(&f, &g).unwrap();
        assert_eq!(pair.first.expand(&pair.group), pair.second.expand(&pair.group));
        assert!(matches!(
            match_factorizations(&pair.group, &pair.first, &pair.second).unwrap(),
            MatchOutcome::Matched(_)
        ));

        let h = p("x^3-10*x^2+31*x-31");
        let pair = divisor_pair(&h, &g).unwrap();
        assert!(matches!(
            match_factorizations(&pair.group, &pair.first, &pair.second).unwrap(),
            MatchOutcome::Mismatch(_)
        ));
    }
}
