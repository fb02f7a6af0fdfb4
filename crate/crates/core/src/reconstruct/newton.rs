//! Numeric inversion: Levenberg–Marquardt on the map from real
//! coefficients to cyclic resultants, followed by rationalization and exact
//! verification.

use nalgebra::{DMatrix, DVector};
use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::number::{rational_to_f64, rationalize, GaussianRational};
use crate::poly::Poly;
use crate::resultant::{cyclic_resultant, ResultantSequence};

const START_SCALES: [f64; 4] = [1.0, 3.0, 10.0, 30.0];
const MAX_ITER: usize = 400;
const RESIDUAL_TOL: f64 = 1e-10;

#[derive(Clone, Debug)]
pub struct NewtonOptions {
    pub monic: bool,
    pub restarts: usize,
    pub seed: u64,
    pub max_denominator: u64,
}

impl Default for NewtonOptions {
    fn default() -> Self {
        Self {
            monic: true,
            restarts: 16,
            seed: 0,
            max_denominator: 1_000_000,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
#[serde(tag = "status", rename_all = "snake_case")]
pub enum NewtonOutcome {
    /// Exact polynomial whose sequence reproduces the input.
    Verified { polynomial: Poly },
    /// Converged floats, descending `a_0..a_d`, whose rationalization did
    /// not reproduce the input exactly.
    Unverified { coefficients: Vec<f64>, residual: f64 },
}

/// Descending coefficients `a_0..a_d` from the unknown vector.
fn full_coeffs(x: &[f64], monic: bool) -> Vec<f64> {
    if monic {
        std::iter::once(1.0).chain(x.iter().copied()).collect()
    } else {
        x.to_vec()
    }
}

/// `r_m = (−1)^{dm} ∏_{k<m} f(e^{2πik/m})`, real part.
pub fn numeric_cyclic_resultant(desc: &[f64], m: usize) -> f64 {
    let d = desc.len() - 1;
    let mut acc = Complex64::new(1.0, 0.0);
    for k in 0..m {
        let w = Complex64::from_polar(1.0, std::f64::consts::TAU * k as f64 / m as f64);
        let v = desc.iter().fold(Complex64::new(0.0, 0.0), |s, &a| s * w + a);
        acc *= v;
    }
    if (d * m) % 2 == 1 {
        -acc.re
    } else {
        acc.re
    }
}

fn residuals(x: &[f64], monic: bool, targets: &[f64]) -> DVector<f64> {
    let desc = full_coeffs(x, monic);
    DVector::from_iterator(
        targets.len(),
        targets
            .iter()
            .enumerate()
            .map(|(i, &t)| (numeric_cyclic_resultant(&desc, i + 1) - t) / t.abs().max(1.0)),
    )
}

fn jacobian(x: &[f64], monic: bool, targets: &[f64]) -> DMatrix<f64> {
    let mut j = DMatrix::zeros(targets.len(), x.len());
    let mut probe = x.to_vec();
    for c in 0..x.len() {
        let h = 1e-6 * x[c].abs().max(1.0);
        probe[c] = x[c] + h;
        let plus = residuals(&probe, monic, targets);
        probe[c] = x[c] - h;
        let minus = residuals(&probe, monic, targets);
        probe[c] = x[c];
        j.set_column(c, &((plus - minus) / (2.0 * h)));
    }
    j
}

/// Levenberg–Marquardt from `x0`; returns the final point and its max-norm
/// residual.
fn solve_from(mut x: Vec<f64>, monic: bool, targets: &[f64]) -> (Vec<f64>, f64) {
    let mut f = residuals(&x, monic, targets);
    let mut cost = f.norm_squared();
    let mut lambda = 1e-3;
    for _ in 0..MAX_ITER {
        if f.amax() < RESIDUAL_TOL || !cost.is_finite() {
            break;
        }
        let j = jacobian(&x, monic, targets);
        let jt = j.transpose();
        let jtj = &jt * &j;
        let g = &jt * &f;
        let mut improved = false;
        for _ in 0..12 {
            let mut a = jtj.clone();
            for i in 0..a.nrows() {
                a[(i, i)] += lambda * jtj[(i, i)].max(1e-12);
            }
            let Some(step) = a.lu().solve(&(-&g)) else {
                lambda *= 10.0;
                continue;
            };
            let trial: Vec<f64> = x.iter().zip(step.iter()).map(|(a, b)| a + b).collect();
            let ft = residuals(&trial, monic, targets);
            let ct = ft.norm_squared();
            if ct.is_finite() && ct < cost {
                x = trial;
                f = ft;
                cost = ct;
                lambda = (lambda / 10.0).max(1e-15);
                improved = true;
                break;
            }
            lambda *= 10.0;
        }
        if !improved {
            break;
        }
    }
    (x, f.amax())
}

fn exact_candidate(x: &[f64], monic: bool, max_den: u64) -> Option<Poly> {
    let desc = full_coeffs(x, monic);
    let mut asc = Vec::with_capacity(desc.len());
    for &a in desc.iter().rev() {
        asc.push(GaussianRational::real(rationalize(a, max_den)?));
    }
    Some(Poly::new(asc))
}

fn reproduces(f: &Poly, d: usize, values: &[GaussianRational]) -> Result<bool> {
    if f.degree() != Some(d) {
        return Ok(false);
    }
    for (i, v) in values.iter().enumerate() {
        if &cyclic_resultant(f, i + 1)? != v {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Multi-start numeric inversion for real sequences.
pub fn invert_newton(values: &ResultantSequence, d: usize, opts: &NewtonOptions) -> Result<NewtonOutcome> {
    let nvars = if opts.monic { d } else { d + 1 };
    let need = if opts.monic { d + 1 } else { d + 2 };
    if d == 0 {
        return Err(Error::InvalidArgument("degree must be ≥ 1".into()));
    }
    if values.len() < need {
        return Err(Error::InsufficientLength { needed: need, got: values.len() });
    }
    if let Some(m) = values.first_zero() {
        return Err(Error::ZeroResultant { m });
    }
    if values.values.iter().any(|v| !v.is_real()) {
        return Err(Error::Unsupported("Newton inversion handles real sequences only".into()));
    }
    let targets: Vec<f64> = values.values.iter().map(|v| rational_to_f64(&v.re)).collect();
    let mut rng = ChaCha8Rng::seed_from_u64(opts.seed);
    let mut best: Option<(Vec<f64>, f64)> = None;
    for k in 0..opts.restarts.max(1) {
        let scale = START_SCALES[k % START_SCALES.len()];
        let x0: Vec<f64> = (0..nvars)
            .map(|i| {
                let v = rng.gen_range(-scale..scale);
                if !opts.monic && i == 0 && v.abs() < 0.5 {
                    v.signum() + v
                } else {
                    v
                }
            })
            .collect();
        let (x, res) = solve_from(x0, opts.monic, &targets);
        if res >= RESIDUAL_TOL * 1e3 || !res.is_finite() {
            continue;
        }
        if let Some(f) = exact_candidate(&x, opts.monic, opts.max_denominator) {
            if reproduces(&f, d, &values.values)? {
                return Ok(NewtonOutcome::Verified { polynomial: f });
            }
        }
        if best.as_ref().is_none_or(|(_, r)| res < *r) {
            best = Some((x, res));
        }
    }
    match best {
        Some((x, residual)) => Ok(NewtonOutcome::Unverified {
            coefficients: full_coeffs(&x, opts.monic),
            residual,
        }),
        None => Err(Error::NoConvergedStart),
    }
}
