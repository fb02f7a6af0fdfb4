//! Numeric roots by Aberth–Ehrlich simultaneous iteration.
//!
//! Multiplicities come from the exact square-free decomposition, so the
//! iteration itself only ever runs on square-free factors.

use std::f64::consts::PI;

use num_complex::Complex64;

use super::{horner, Poly};
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct RootOptions {
    /// Relative residual bound: `|p(α)| ≤ tol · Σ|a_i||α|^i`.
    pub tol: f64,
    pub max_iter: usize,
}

impl Default for RootOptions {
    fn default() -> Self {
        Self {
            tol: 1e-12,
            max_iter: 500,
        }
    }
}

/// All `deg f` roots, repeated according to multiplicity, sorted by
/// `(re, im)`.
pub fn roots_numeric(f: &Poly, tol: f64) -> Result<Vec<Complex64>> {
    let mut out = Vec::new();
    for (z, m) in roots_with_multiplicity(f, tol)? {
        out.extend(std::iter::repeat_n(z, m));
    }
    out.sort_by(|a, b| a.re.total_cmp(&b.re).then(a.im.total_cmp(&b.im)));
    Ok(out)
}

/// Distinct roots with exact multiplicities.
pub fn roots_with_multiplicity(f: &Poly, tol: f64) -> Result<Vec<(Complex64, usize)>> {
    if f.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let opts = RootOptions {
        tol,
        ..RootOptions::default()
    };
    let (l, h) = f.split_x_power();
    let mut out = Vec::new();
    if l > 0 {
        out.push((Complex64::new(0.0, 0.0), l));
    }
    for (part, m) in h.square_free_decomposition() {
        for z in aberth(&part.to_complex(), &opts)? {
            out.push((z, m));
        }
    }
    Ok(out)
}

/// Greedy clustering: roots closer than `tol` to an existing center join it.
pub fn cluster_roots(roots: &[Complex64], tol: f64) -> Vec<(Complex64, usize)> {
    let mut clusters: Vec<(Complex64, usize)> = Vec::new();
    for &z in roots {
        match clusters.iter_mut().find(|(c, _)| (*c - z).norm() <= tol) {
            Some(entry) => entry.1 += 1,
            None => clusters.push((z, 1)),
        }
    }
    clusters
}

fn scale_at(abs_coeffs: &[f64], z: Complex64) -> f64 {
    let r = z.norm();
    abs_coeffs.iter().rev().fold(0.0, |acc, &c| acc * r + c)
}

fn aberth(coeffs: &[Complex64], opts: &RootOptions) -> Result<Vec<Complex64>> {
    let d = coeffs.len() - 1;
    if d == 0 {
        return Ok(Vec::new());
    }
    let lead = coeffs[d];
    let a: Vec<Complex64> = coeffs.iter().map(|&c| c / lead).collect();
    if d == 1 {
        return Ok(vec![-a[0]]);
    }
    let da: Vec<Complex64> = a
        .iter()
        .enumerate()
        .skip(1)
        .map(|(i, &c)| c * i as f64)
        .collect();
    let abs_a: Vec<f64> = a.iter().map(|c| c.norm()).collect();

    let radius = 1.0 + a[..d].iter().map(|c| c.norm()).fold(0.0, f64::max);
    let mut z: Vec<Complex64> = (0..d)
        .map(|j| Complex64::from_polar(radius, 2.0 * PI * j as f64 / d as f64 + 0.4))
        .collect();

    let converged = |z: &[Complex64]| {
        z.iter()
            .all(|&zk| horner(&a, zk).norm() <= opts.tol * scale_at(&abs_a, zk))
    };

    let mut done = false;
    for _ in 0..opts.max_iter {
        let mut max_step: f64 = 0.0;
        for k in 0..d {
            let p = horner(&a, z[k]);
            if p.norm() == 0.0 {
                continue;
            }
            let dp = horner(&da, z[k]);
            let w = if dp.norm() == 0.0 {
                // stationary point: nudge off it
                Complex64::new(1e-8 * (1.0 + z[k].norm()), 0.0)
            } else {
                let ratio = p / dp;
                let s: Complex64 = (0..d)
                    .filter(|&j| j != k)
                    .map(|j| (z[k] - z[j]).inv())
                    .sum();
                ratio / (Complex64::new(1.0, 0.0) - ratio * s)
            };
            if w.is_finite() {
                z[k] -= w;
                max_step = max_step.max(w.norm() / (1.0 + z[k].norm()));
            }
        }
        if converged(&z) || max_step < 1e-17 {
            done = true;
            break;
        }
    }

    // Newton polish on the (square-free) factor.
    for zk in z.iter_mut() {
        for _ in 0..3 {
            let p = horner(&a, *zk);
            let dp = horner(&da, *zk);
            if dp.norm() == 0.0 {
                break;
            }
            let next = *zk - p / dp;
            if next.is_finite() && horner(&a, next).norm() <= p.norm() {
                *zk = next;
            } else {
                break;
            }
        }
    }

    if !done && !converged(&z) {
        let residuals: Vec<f64> = z
            .iter()
            .map(|&zk| horner(&a, zk).norm() / scale_at(&abs_a, zk))
            .collect();
        let max_residual = residuals.iter().cloned().fold(0.0, f64::max);
        return Err(Error::NonConvergence {
            iterations: opts.max_iter,
            max_residual,
            residuals,
        });
    }
    Ok(z)
}

/// Largest `d` accepted by [`min_subset_product_distance`].
pub const SUBSET_SCAN_LIMIT: usize = 20;

/// Smallest distance from a product over a nonempty subset of `values` to
/// any of `targets` (exhaustive over `2^n − 1` subsets).
pub fn min_subset_product_distance(values: &[Complex64], targets: &[Complex64]) -> Result<f64> {
    if values.len() > SUBSET_SCAN_LIMIT {
        return Err(Error::DimensionTooLarge {
            got: values.len(),
            max: SUBSET_SCAN_LIMIT,
        });
    }
    let mut products = vec![Complex64::new(1.0, 0.0)];
    let mut best = f64::INFINITY;
    for &v in values {
        let n = products.len();
        for i in 0..n {
            let p = products[i] * v;
            for &t in targets {
                best = best.min((p - t).norm());
            }
            products.push(p);
        }
    }
    Ok(best)
}
