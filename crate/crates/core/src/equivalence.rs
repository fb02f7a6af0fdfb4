//! All polynomials sharing a cyclic-resultant sequence with a given one.
//!
//! For `g = x^{l_2} h` with `h(0) ≠ 0`, leading coefficient `b_0` and a
//! subset `S` of the roots of `h`, put `u = ∏_S (x − α)`, `u*` its reversal
//! and `v = b_0 ∏_{∉S} (x − α)`. Then `f = (−1)^{l_2−l_1} x^{l_1} v u*` has
//! the same sequence as `g` whenever `|S| ≡ l_2 − l_1 (mod 2)`, and every
//! such `f` arises this way. For absolute values over the reals, `S` ranges
//! over conjugation-closed subsets, `l_1 = l_2`, and both signs occur.

use num_complex::Complex64;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::number::GaussianRational;
use crate::poly::{has_root_of_unity, min_subset_product_distance, roots_numeric, Poly, SUBSET_SCAN_LIMIT};
use crate::resultant::{abs_sequence, sequence, squared_moduli};

/// Denominator bound used when rationalizing numeric roots and coefficients.
pub const MAX_DENOMINATOR: u64 = 1_000_000;

const ROOT_TOL: f64 = 1e-12;
const REAL_TOL: f64 = 1e-9;

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Member {
    pub poly: Poly,
    /// Indices into [`EquivalenceFamily::roots`] forming `S`.
    pub subset: Vec<usize>,
    pub sign: i8,
}

/// A candidate whose coefficients could not be recovered exactly.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct FloatMember {
    pub coeffs: Vec<Complex64>,
    pub subset: Vec<usize>,
    pub sign: i8,
    pub reason: String,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct EquivalenceFamily {
    pub base: Poly,
    pub l1: usize,
    /// Nonzero roots of the base with multiplicity, as used for subsets.
    pub roots: Vec<String>,
    /// Exact members, verified against the base and canonically sorted.
    pub members: Vec<Member>,
    pub float_only: Vec<FloatMember>,
    pub n_check: usize,
    pub abs: bool,
}

impl EquivalenceFamily {
    pub fn polys(&self) -> Vec<Poly> {
        self.members.iter().map(|m| m.poly.clone()).collect()
    }
}

/// Nonzero roots of `h`, exact when they are Gaussian rationals.
enum RootData {
    Exact(Vec<GaussianRational>),
    Numeric(Vec<Complex64>),
}

impl RootData {
    fn len(&self) -> usize {
        match self {
            RootData::Exact(r) => r.len(),
            RootData::Numeric(r) => r.len(),
        }
    }

    fn labels(&self) -> Vec<String> {
        match self {
            RootData::Exact(r) => r.iter().map(ToString::to_string).collect(),
            RootData::Numeric(r) => r.iter().map(|z| format!("{}{:+}i", z.re, z.im)).collect(),
        }
    }

    fn numeric(&self) -> Vec<Complex64> {
        match self {
            RootData::Exact(r) => r.iter().map(GaussianRational::to_complex).collect(),
            RootData::Numeric(r) => r.clone(),
        }
    }
}

fn root_data(h: &Poly) -> Result<RootData> {
    let roots = roots_numeric(h, ROOT_TOL)?;
    if roots.len() > SUBSET_SCAN_LIMIT {
        return Err(Error::DimensionTooLarge {
            got: roots.len(),
            max: SUBSET_SCAN_LIMIT,
        });
    }
    let lead = h.leading().expect("nonzero").clone();
    let exact: Option<Vec<GaussianRational>> = roots
        .iter()
        .map(|&z| rationalize_close(z))
        .collect();
    if let Some(mut exact) = exact {
        if Poly::from_roots(&lead, &exact) == *h {
            exact.sort();
            return Ok(RootData::Exact(exact));
        }
    }
    Ok(RootData::Numeric(roots))
}

fn check_base(g: &Poly, n_check: usize) -> Result<()> {
    if g.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    if n_check == 0 {
        return Err(Error::InvalidArgument("N_check must be ≥ 1".into()));
    }
    if has_root_of_unity(g, 64) {
        return Err(Error::RootOfUnity);
    }
    Ok(())
}

/// `sign · x^l · lead ∏_{∉S}(x − α) ∏_{S}(1 − α x)`, exactly.
fn build_exact(roots: &[GaussianRational], lead: &GaussianRational, mask: u64, l: usize, sign: i8) -> Poly {
    let one = GaussianRational::one();
    let mut p = Poly::constant(if sign < 0 { -lead } else { lead.clone() });
    for (i, a) in roots.iter().enumerate() {
        let factor = if mask >> i & 1 == 1 {
            Poly::new(vec![one.clone(), -a])
        } else {
            Poly::new(vec![-a, one.clone()])
        };
        p = &p * &factor;
    }
    p.shift(l)
}

fn build_numeric(roots: &[Complex64], lead: Complex64, mask: u64, l: usize, sign: i8) -> Vec<Complex64> {
    let mut c = vec![lead * f64::from(sign)];
    for (i, &a) in roots.iter().enumerate() {
        // multiply by (p0 + p1 x)
        let (p0, p1) = if mask >> i & 1 == 1 {
            (Complex64::one(), -a)
        } else {
            (-a, Complex64::one())
        };
        let mut next = vec![Complex64::zero(); c.len() + 1];
        for (k, &ck) in c.iter().enumerate() {
            next[k] += ck * p0;
            next[k + 1] += ck * p1;
        }
        c = next;
    }
    let mut out = vec![Complex64::zero(); l];
    out.extend(c);
    out
}

/// Continued-fraction rationalization, accepted only when it reproduces the
/// float to near machine precision.
fn rationalize_close(z: Complex64) -> Option<GaussianRational> {
    let q = GaussianRational::rationalize(z, MAX_DENOMINATOR)?;
    ((q.to_complex() - z).norm() <= 1e-9 * z.norm().max(1.0)).then_some(q)
}

fn rationalize_coeffs(c: &[Complex64]) -> Option<Poly> {
    let p = Poly::new(c.iter().map(|&z| rationalize_close(z)).collect::<Option<Vec<_>>>()?);
    (p.degree() == Some(c.len() - 1)).then_some(p)
}

fn subset_indices(mask: u64, n: usize) -> Vec<usize> {
    (0..n).filter(|&i| mask >> i & 1 == 1).collect()
}

struct Candidate {
    mask: u64,
    sign: i8,
}

struct Builder<'a> {
    h: &'a Poly,
    l: usize,
    roots: RootData,
}

impl Builder<'_> {
    fn collect(
        self,
        base: &Poly,
        l1: usize,
        n_check: usize,
        abs: bool,
        candidates: Vec<Candidate>,
        same: impl Fn(&Poly) -> Result<bool>,
    ) -> Result<EquivalenceFamily> {
        let lead = self.h.leading().expect("nonzero").clone();
        let n = self.roots.len();
        let mut members: Vec<Member> = Vec::new();
        let mut float_only = Vec::new();
        for cand in candidates {
            let subset = subset_indices(cand.mask, n);
            let (poly, numeric) = match &self.roots {
                RootData::Exact(r) => (build_exact(r, &lead, cand.mask, self.l, cand.sign), None),
                RootData::Numeric(r) => {
                    let c = build_numeric(r, lead.to_complex(), cand.mask, self.l, cand.sign);
                    match rationalize_coeffs(&c) {
                        Some(p) => (p, Some(c)),
                        None => {
                            float_only.push(FloatMember {
                                coeffs: c,
                                subset,
                                sign: cand.sign,
                                reason: "coefficients not rationalizable".into(),
                            });
                            continue;
                        }
                    }
                }
            };
            if members.iter().any(|m| m.poly == poly) {
                continue;
            }
            if same(&poly)? {
                members.push(Member {
                    poly,
                    subset,
                    sign: cand.sign,
                });
            } else {
                float_only.push(FloatMember {
                    coeffs: numeric.unwrap_or_else(|| poly.to_complex()),
                    subset,
                    sign: cand.sign,
                    reason: "rationalized member failed exact sequence verification".into(),
                });
            }
        }
        members.sort_by(|a, b| a.poly.cmp(&b.poly));
        Ok(EquivalenceFamily {
            base: base.clone(),
            l1,
            roots: self.roots.labels(),
            members,
            float_only,
            n_check,
            abs,
        })
    }
}

/// Every `f = (−1)^{l_2−l_1} x^{l_1} v u*` with `|S| ≡ l_2 − l_1 (mod 2)`,
/// each verified to share `r_1..r_{N_check}` with `g`.
pub fn equivalent_family(g: &Poly, l1: usize, n_check: usize) -> Result<EquivalenceFamily> {
    check_base(g, n_check)?;
    let base_seq = sequence(g, n_check)?;
    if let Some(m) = base_seq.first_zero() {
        return Err(Error::ZeroResultant { m });
    }
    let (l2, h) = g.split_x_power();
    let roots = root_data(&h)?;
    let n = roots.len();
    let sign: i8 = if (l1 + l2).is_multiple_of(2) { 1 } else { -1 };
    let candidates = (0..1u64 << n)
        .filter(|mask| (mask.count_ones() as usize + l1 + l2).is_multiple_of(2))
        .map(|mask| Candidate { mask, sign })
        .collect();
    let builder = Builder { h: &h, l: l1, roots };
    builder.collect(g, l1, n_check, false, candidates, |f| {
        Ok(sequence(f, n_check)?.values == base_seq.values)
    })
}

/// Real polynomials with the same `|r_1|..|r_{N_check}|` as `g`:
/// conjugation-closed subsets, both signs, same power of `x`.
pub fn real_equivalent_family(g: &Poly, n_check: usize) -> Result<EquivalenceFamily> {
    check_base(g, n_check)?;
    if !g.is_real() {
        return Err(Error::NonReal);
    }
    let base_abs = abs_sequence(g, n_check)?;
    let (l, h) = g.split_x_power();
    let roots = root_data(&h)?;
    let numeric = roots.numeric();
    let n = numeric.len();

    // Blocks of indices that must be taken together.
    let mut blocks: Vec<u64> = Vec::new();
    let mut used = vec![false; n];
    for i in 0..n {
        if used[i] {
            continue;
        }
        used[i] = true;
        let z = numeric[i];
        if z.im.abs() <= REAL_TOL * z.norm().max(1.0) {
            blocks.push(1 << i);
            continue;
        }
        let partner = (0..n)
            .filter(|&j| !used[j])
            .min_by(|&a, &b| (numeric[a] - z.conj()).norm().total_cmp(&(numeric[b] - z.conj()).norm()))
            .ok_or_else(|| Error::InvalidArgument("unpaired non-real root".into()))?;
        used[partner] = true;
        blocks.push(1 << i | 1 << partner);
    }
    let mut candidates = Vec::new();
    for sign in [1i8, -1] {
        for sel in 0..1u64 << blocks.len() {
            let mask = blocks
                .iter()
                .enumerate()
                .filter(|(b, _)| sel >> b & 1 == 1)
                .fold(0u64, |acc, (_, m)| acc | m);
            candidates.push(Candidate { mask, sign });
        }
    }
    let builder = Builder { h: &h, l, roots };
    builder.collect(g, l, n_check, true, candidates, |f| {
        Ok(f.is_real() && abs_sequence(f, n_check)?.values == base_abs.values)
    })
}

/// `2^{d−1}`, the generic family size in degree `d`.
pub fn count_generic(d: u32) -> Result<u64> {
    if d == 0 {
        return Err(Error::InvalidArgument("degree must be ≥ 1".into()));
    }
    Ok(1u64 << (d - 1))
}

/// `2^{⌈d/2⌉+1}`, the generic real family size in degree `d` for
/// polynomials with at most one real root.
pub fn count_real_generic(d: u32) -> Result<u64> {
    if d == 0 {
        return Err(Error::InvalidArgument("degree must be ≥ 1".into()));
    }
    Ok(1u64 << (d.div_ceil(2) + 1))
}

/// Exact comparison of `r_1..r_N` (or of `|r_m|`, via `|r_m|²`).
pub fn verify_same_resultants(f: &Poly, g: &Poly, n: usize, abs: bool) -> Result<bool> {
    let sf = sequence(f, n)?;
    let sg = sequence(g, n)?;
    Ok(if abs {
        squared_moduli(&sf) == squared_moduli(&sg)
    } else {
        sf.values == sg.values
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "verdict", rename_all = "snake_case")]
pub enum Verdict {
    /// Sequences agree up to `N` and the polynomials are equal.
    Consistent,
    /// The sequences first differ at index `m`.
    SequencesDiffer { m: usize },
    /// Equal sequences up to `N` for distinct reciprocal polynomials.
    Counterexample,
}

pub fn reciprocal_uniqueness_check(f: &Poly, g: &Poly, n: usize) -> Result<Verdict> {
    if !f.is_reciprocal() || !g.is_reciprocal() {
        return Err(Error::NotReciprocal);
    }
    let sf = sequence(f, n)?;
    let sg = sequence(g, n)?;
    if let Some(i) = sf.values.iter().zip(&sg.values).position(|(a, b)| a != b) {
        return Ok(Verdict::SequencesDiffer { m: i + 1 });
    }
    Ok(if f == g {
        Verdict::Consistent
    } else {
        Verdict::Counterexample
    })
}

/// Whether some nonempty subset of the roots has product within `tol` of 1.
pub fn monic_degenerate(g: &Poly, tol: f64) -> Result<bool> {
    if g.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let roots = roots_numeric(g, ROOT_TOL)?;
    Ok(min_subset_product_distance(&roots, &[Complex64::one()])? <= tol)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::parse;

    fn p(s: &str) -> Poly {
        parse(s).unwrap()
    }

    fn ps(list: &[&str]) -> Vec<Poly> {
        let mut v: Vec<Poly> = list.iter().map(|s| p(s)).collect();
        v.sort();
        v
    }

    #[test]
    fn quadratic_family() {
        let fam = equivalent_family(&p("x^2-5*x+6"), 0, 10).unwrap();
        assert_eq!(fam.polys(), ps(&["x^2-5*x+6", "6*x^2-5*x+1"]));
        assert!(fam.float_only.is_empty());
    }

    #[test]
    fn cubic_family() {
        let fam = equivalent_family(&p("(x-2)*(x-3)*(x-5)"), 0, 16).unwrap();
        assert_eq!(
            fam.polys(),
            ps(&[
                "x^3-10*x^2+31*x-30",
                "15*x^3-38*x^2+17*x-2",
                "10*x^3-37*x^2+22*x-3",
                "6*x^3-35*x^2+26*x-5"
            ])
        );
    }

    #[test]
    fn cross_degree_member() {
        let fam = equivalent_family(&p("15*x^5-38*x^4+17*x^3-2*x^2"), 0, 15).unwrap();
        assert!(fam.polys().contains(&p("x^3-10*x^2+31*x-30")));
    }

    #[test]
    fn irrational_roots_go_through_rationalization() {
        // roots (3 ± √5)/2 and 7: S = {both quadratic roots} gives g back,
        // mixed subsets give members over Q(√5)
        let g = p("(x^2-3*x+1)*(x-7)");
        let fam = equivalent_family(&g, 0, 12).unwrap();
        assert_eq!(fam.polys(), vec![g.clone()]);
        assert_eq!(fam.float_only.len(), 2);
        let h = p("(x^2-3*x+1)*(x-7)*(x-2)");
        let fam = equivalent_family(&h, 0, 12).unwrap();
        assert!(fam.polys().contains(&p("(x^2-3*x+1)*(1-7*x)*(1-2*x)")));
        for m in &fam.members {
            assert!(verify_same_resultants(&m.poly, &h, 12, false).unwrap());
        }
    }

    #[test]
    fn real_family_example() {
        let fam = real_equivalent_family(&p("x^3+2*x^2-3*x-10"), 12).unwrap();
        assert_eq!(
            fam.polys(),
            ps(&[
                "x^3+2*x^2-3*x-10",
                "-x^3-2*x^2+3*x+10",
                "-2*x^3-7*x^2-6*x+5",
                "2*x^3+7*x^2+6*x-5",
                "5*x^3-6*x^2-7*x-2",
                "-5*x^3+6*x^2+7*x+2",
                "10*x^3+3*x^2-2*x-1",
                "-10*x^3-3*x^2+2*x+1"
            ])
        );
        // (1 − 2x)(1 + (2+i)x)(x + 2 − i) shares the actual resultants but is not real
        let complex = p("(-4-2i)*x^3-(10-1i)*x^2+(2+2i)*x+(2-1i)");
        assert_eq!(complex, p("(1-2*x)*(1+(2+1i)*x)*(x+(2-1i))"));
        assert!(!fam.polys().contains(&complex));
        assert!(equivalent_family(&p("x^3+2*x^2-3*x-10"), 0, 12).unwrap().polys().contains(&complex));
    }

    #[test]
    fn real_family_linear() {
        let fam = real_equivalent_family(&p("x-2"), 10).unwrap();
        for m in &fam.members {
            assert!(verify_same_resultants(&m.poly, &p("x-2"), 10, true).unwrap());
        }
        assert_eq!(fam.members.len(), 4);
    }

    #[test]
    fn counts() {
        assert_eq!(count_generic(3).unwrap(), 4);
        assert_eq!(count_generic(1).unwrap(), 1);
        assert_eq!(count_generic(6).unwrap(), 32);
        assert_eq!(count_real_generic(3).unwrap(), 8);
    }

    #[test]
    fn verification_examples() {
        assert!(verify_same_resultants(&p("x^3-10*x^2+31*x-30"), &p("15*x^5-38*x^4+17*x^3-2*x^2"), 15, false).unwrap());
        assert!(!verify_same_resultants(&p("x-2"), &p("x-3"), 1, false).unwrap());
        assert!(verify_same_resultants(&p("x-2"), &p("-x+2"), 2, true).unwrap());
    }

    #[test]
    fn reciprocal_examples() {
        let f = p("x^2+3*x+1");
        assert_eq!(reciprocal_uniqueness_check(&f, &f, 10).unwrap(), Verdict::Consistent);
        assert_eq!(
            reciprocal_uniqueness_check(&f, &p("x^2+4*x+1"), 2).unwrap(),
            Verdict::SequencesDiffer { m: 1 }
        );
        assert_eq!(reciprocal_uniqueness_check(&f, &p("x-2"), 2), Err(Error::NotReciprocal));
    }

    #[test]
    fn monic_degenerate_examples() {
        assert!(!monic_degenerate(&p("x^2-5*x+6"), 1e-8).unwrap());
        assert!(monic_degenerate(&p("(x-2)*(x-1/2)"), 1e-8).unwrap());
        assert!(monic_degenerate(&p("x^2-3*x+1"), 1e-8).unwrap());
    }
}
