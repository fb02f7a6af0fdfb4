//! Recovering a polynomial from a prefix of its cyclic-resultant sequence.

pub mod closed;
pub mod groebner;
pub mod multipoly;
pub mod newton;
pub mod symbolic;

use num_traits::{One, Signed, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

pub use closed::{invert_closed, linear_coefficients, printed_linear_a0, required_values, Shape};
pub use multipoly::MultiPoly;
pub use newton::{invert_newton, NewtonOptions, NewtonOutcome};

use crate::error::{Error, Result};
use crate::number::{GaussianRational, Rational};
use crate::poly::{has_root_of_unity, Poly};
use crate::resultant::{cyclic_resultant, sequence, ResultantSequence};
use symbolic::{symbolic_cyclic_resultant, Unknowns};

/// Largest degree accepted by the Gröbner path.
pub const GROEBNER_MAX_DEGREE: usize = 3;
/// Largest number of equations handed to Buchberger.
pub const GROEBNER_MAX_EQUATIONS: usize = 5;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Method {
    Closed,
    Groebner,
    Newton,
    Auto,
}

impl std::str::FromStr for Method {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "closed" => Ok(Method::Closed),
            "groebner" => Ok(Method::Groebner),
            "newton" => Ok(Method::Newton),
            "auto" => Ok(Method::Auto),
            other => Err(Error::InvalidArgument(format!("unknown method {other:?}"))),
        }
    }
}

#[derive(Clone, Debug)]
pub struct ReconstructOptions {
    pub max_denominator: u64,
    pub newton_restarts: usize,
    pub seed: u64,
}

impl Default for ReconstructOptions {
    fn default() -> Self {
        Self {
            max_denominator: 1_000_000,
            newton_restarts: 16,
            seed: 0,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Reconstruction {
    /// Exact solutions, each reproducing every supplied value.
    pub polynomials: Vec<Poly>,
    /// Descending float coefficients when only an unverified numeric
    /// candidate exists.
    pub approx: Option<Vec<f64>>,
    pub method: Method,
    pub verified: bool,
    /// `(ε, δ)` of the signed lift used, for absolute-value input.
    pub sign_pattern: Option<(i8, i8)>,
    /// Solutions from alternating lifts (`δ = −1`) that were not chosen.
    pub alternatives: Vec<((i8, i8), Poly)>,
}

impl Reconstruction {
    fn exact(polynomials: Vec<Poly>, method: Method) -> Self {
        Self {
            polynomials,
            approx: None,
            method,
            verified: true,
            sign_pattern: None,
            alternatives: Vec::new(),
        }
    }
}

fn unknowns(d: usize, shape: Shape) -> Result<Unknowns> {
    match shape {
        Shape::Monic => Ok(Unknowns { d, monic: true }),
        Shape::General => Ok(Unknowns { d, monic: false }),
        Shape::MonicReciprocal => Err(Error::Unsupported(
            "reciprocal shape is handled by the closed form only".into(),
        )),
    }
}

/// All exact solutions of `{Res_sym(f, x^m − 1) = r_m}` over `Q(i)`, from
/// the first `min(N, 5)` equations, filtered against every supplied value.
pub fn invert_groebner(values: &ResultantSequence, d: usize, monic: bool, max_den: u64) -> Result<Vec<Poly>> {
    if d == 0 {
        return Err(Error::InvalidArgument("degree must be ≥ 1".into()));
    }
    if d > GROEBNER_MAX_DEGREE {
        return Err(Error::DimensionTooLarge {
            got: d,
            max: GROEBNER_MAX_DEGREE,
        });
    }
    let u = Unknowns { d, monic };
    let need = u.nvars();
    if values.len() < need {
        return Err(Error::InsufficientLength { needed: need, got: values.len() });
    }
    if let Some(m) = values.first_zero() {
        return Err(Error::ZeroResultant { m });
    }
    if values.values.iter().any(|v| !v.is_real()) {
        return Err(Error::Unsupported("Groebner inversion takes rational values".into()));
    }
    let n_eq = values.len().min(GROEBNER_MAX_EQUATIONS);
    let generators: Vec<MultiPoly> = (1..=n_eq)
        .map(|m| {
            let target = MultiPoly::constant(u.nvars(), values.values[m - 1].re.clone());
            symbolic_cyclic_resultant(u, m).sub(&target)
        })
        .collect();
    let basis = groebner::groebner_basis(&generators);
    if !groebner::is_groebner_basis(&basis) {
        return Err(Error::VerificationFailed("groebner".into()));
    }
    let points = groebner::solve_triangular(&basis, max_den)?;
    let mut out: Vec<Poly> = Vec::new();
    for pt in points {
        let desc: Vec<GaussianRational> = if monic {
            std::iter::once(GaussianRational::one()).chain(pt).collect()
        } else {
            pt
        };
        if desc[0].is_zero() {
            continue;
        }
        let f = Poly::new(desc.into_iter().rev().collect());
        if reproduces(&f, &values.values)? && !out.contains(&f) {
            out.push(f);
        }
    }
    out.sort();
    Ok(out)
}

fn reproduces(f: &Poly, values: &[GaussianRational]) -> Result<bool> {
    for (i, v) in values.iter().enumerate() {
        if &cyclic_resultant(f, i + 1)? != v {
            return Ok(false);
        }
    }
    Ok(true)
}

fn closed_applies(d: usize, shape: Shape, n: usize) -> bool {
    required_values(d, shape).is_ok_and(|k| k <= n)
}

/// Reconstruction from a signed sequence with the chosen method; `Auto`
/// prefers the closed form, then Gröbner, then Newton.
pub fn reconstruct(
    values: &ResultantSequence,
    d: usize,
    shape: Shape,
    method: Method,
    opts: &ReconstructOptions,
) -> Result<Reconstruction> {
    if values.is_abs {
        return disambiguate_abs(values, d, shape, method, opts);
    }
    let method = match method {
        Method::Auto if closed_applies(d, shape, values.len()) => Method::Closed,
        Method::Auto if d <= GROEBNER_MAX_DEGREE && shape != Shape::MonicReciprocal => Method::Groebner,
        Method::Auto => Method::Newton,
        m => m,
    };
    match method {
        Method::Closed => Ok(Reconstruction::exact(vec![invert_closed(values, d, shape)?], method)),
        Method::Groebner => {
            let u = unknowns(d, shape)?;
            let polys = invert_groebner(values, d, u.monic, opts.max_denominator)?;
            if polys.is_empty() {
                return Err(Error::NoReconstruction);
            }
            Ok(Reconstruction::exact(polys, method))
        }
        Method::Newton => {
            let u = unknowns(d, shape)?;
            let nopts = NewtonOptions {
                monic: u.monic,
                restarts: opts.newton_restarts,
                seed: opts.seed,
                max_denominator: opts.max_denominator,
            };
            match invert_newton(values, d, &nopts)? {
                NewtonOutcome::Verified { polynomial } => Ok(Reconstruction::exact(vec![polynomial], method)),
                NewtonOutcome::Unverified { coefficients, .. } => Ok(Reconstruction {
                    polynomials: Vec::new(),
                    approx: Some(coefficients),
                    method,
                    verified: false,
                    sign_pattern: None,
                    alternatives: Vec::new(),
                }),
            }
        }
        Method::Auto => unreachable!("resolved above"),
    }
}

/// The four lifts `ε·δ^m·|r_m|` in the order `(+,+), (−,+), (+,−), (−,−)`.
pub fn sign_lifts(values: &ResultantSequence) -> Result<Vec<((i8, i8), ResultantSequence)>> {
    let mut out = Vec::with_capacity(4);
    for (eps, delta) in [(1i8, 1i8), (-1, 1), (1, -1), (-1, -1)] {
        let signed: Vec<GaussianRational> = values
            .values
            .iter()
            .enumerate()
            .map(|(i, v)| {
                let m = i + 1;
                let s = if delta < 0 && m % 2 == 1 { -eps } else { eps };
                if s < 0 {
                    -v.clone()
                } else {
                    v.clone()
                }
            })
            .collect();
        out.push(((eps, delta), ResultantSequence::new(signed, false)?));
    }
    Ok(out)
}

/// Tries every sign lift of an absolute-value sequence. The constant-sign
/// lifts `±|r_m|` decide when exactly one polynomial comes out of them; the
/// alternating lifts are consulted only when both constant lifts fail, and
/// otherwise their solutions are listed as `alternatives`.
pub fn disambiguate_abs(
    values: &ResultantSequence,
    d: usize,
    shape: Shape,
    method: Method,
    opts: &ReconstructOptions,
) -> Result<Reconstruction> {
    if !values.is_abs {
        return Err(Error::InvalidArgument("expected an absolute-value sequence".into()));
    }
    if values.values.iter().any(|v| !v.re.is_positive()) {
        return Err(Error::InvalidArgument("absolute values must be positive".into()));
    }
    let mut constant: Vec<((i8, i8), Reconstruction)> = Vec::new();
    let mut alternating: Vec<((i8, i8), Reconstruction)> = Vec::new();
    for (pattern, lift) in sign_lifts(values)? {
        let bucket = if pattern.1 > 0 { &mut constant } else { &mut alternating };
        match reconstruct(&lift, d, shape, method, opts) {
            Ok(r) if r.verified => bucket.push((pattern, r)),
            Ok(_) => {}
            Err(e @ (Error::DimensionTooLarge { .. } | Error::Unsupported(_) | Error::InsufficientLength { .. })) => {
                return Err(e)
            }
            Err(_) => {}
        }
    }
    let (mut chosen, others) = if constant.is_empty() {
        (alternating, Vec::new())
    } else {
        (constant, alternating)
    };
    let mut distinct: Vec<&Poly> = chosen.iter().flat_map(|(_, r)| r.polynomials.iter()).collect();
    distinct.sort();
    distinct.dedup();
    match distinct.len() {
        0 => Err(Error::NoReconstruction),
        1 => {
            let (pattern, mut r) = chosen.swap_remove(0);
            r.sign_pattern = Some(pattern);
            for (p, o) in others {
                for g in o.polynomials {
                    if !r.polynomials.contains(&g) {
                        r.alternatives.push((p, g));
                    }
                }
            }
            Ok(r)
        }
        _ => Err(Error::Ambiguous(
            chosen
                .iter()
                .map(|((e, dl), r)| {
                    let ps: Vec<String> = r.polynomials.iter().map(Poly::to_string).collect();
                    format!("(eps={e}, delta={dl}): {}", ps.join(", "))
                })
                .collect::<Vec<_>>()
                .join("; "),
        )),
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct HarnessFailure {
    pub polynomial: Poly,
    pub reason: String,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct HarnessReport {
    pub degree: usize,
    pub trials: usize,
    pub successes: usize,
    pub method: Method,
    pub failures: Vec<HarnessFailure>,
    /// Distinct polynomials sharing the first `d + 1` values.
    pub collisions: Vec<(Poly, Poly)>,
    /// Samples discarded for a root of unity or a zero resultant.
    pub rejected_samples: usize,
}

/// Random monic integer polynomial with coefficients in `[−9, 9]` that
/// passes the preconditions for `d + 1` values.
pub fn sample_monic(rng: &mut ChaCha8Rng, d: usize) -> (Poly, usize) {
    let mut rejected = 0;
    loop {
        let mut c: Vec<i64> = (0..d).map(|_| rng.gen_range(-9..=9)).collect();
        c.push(1);
        let f = Poly::from_ints(&c);
        if !has_root_of_unity(&f, 64) && sequence(&f, d + 1).is_ok_and(|s| s.first_zero().is_none()) {
            return (f, rejected);
        }
        rejected += 1;
    }
}

/// Empirical check that `d + 1` values determine a monic integer
/// polynomial: Gröbner for `d ≤ 3`, Newton for `d = 4`.
pub fn conjecture_harness(d: usize, trials: usize, seed: u64) -> Result<HarnessReport> {
    if d == 0 || d > 4 {
        return Err(Error::InvalidArgument(format!("harness degree must be in 1..=4, got {d}")));
    }
    let method = if d <= GROEBNER_MAX_DEGREE { Method::Groebner } else { Method::Newton };
    let opts = ReconstructOptions {
        seed,
        newton_restarts: 64,
        ..ReconstructOptions::default()
    };
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut report = HarnessReport {
        degree: d,
        trials,
        successes: 0,
        method,
        failures: Vec::new(),
        collisions: Vec::new(),
        rejected_samples: 0,
    };
    for _ in 0..trials {
        let (f, rejected) = sample_monic(&mut rng, d);
        report.rejected_samples += rejected;
        let prefix = sequence(&f, d + 1)?;
        match reconstruct(&prefix, d, Shape::Monic, method, &opts) {
            Ok(r) if r.polynomials == [f.clone()] => report.successes += 1,
            Ok(r) => {
                for g in r.polynomials.iter().filter(|g| **g != f) {
                    report.collisions.push((f.clone(), g.clone()));
                }
                report.failures.push(HarnessFailure {
                    polynomial: f,
                    reason: if r.verified {
                        format!("{} solutions share the prefix", r.polynomials.len())
                    } else {
                        "numeric candidate not verified".into()
                    },
                });
            }
            Err(e) => report.failures.push(HarnessFailure {
                polynomial: f,
                reason: e.to_string(),
            }),
        }
    }
    Ok(report)
}

/// `Rational` helper for callers building inputs.
pub fn values_from_rationals(values: Vec<Rational>, is_abs: bool) -> Result<ResultantSequence> {
    ResultantSequence::new(values.into_iter().map(GaussianRational::real).collect(), is_abs)
}
