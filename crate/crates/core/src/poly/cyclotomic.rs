//! Cyclotomic polynomials and root-of-unity detection.

use num_complex::Complex64;
use num_traits::One;

use super::{roots_numeric, Poly};
use crate::number::GaussianRational;

/// Tolerance used by the numeric root-of-unity test.
pub const DEFAULT_UNITY_TOL: f64 = 1e-8;

pub fn euler_phi(mut n: u64) -> u64 {
    let mut result = n;
    let mut p = 2;
    while p * p <= n {
        if n.is_multiple_of(p) {
            while n.is_multiple_of(p) {
                n /= p;
            }
            result -= result / p;
        }
        p += 1;
    }
    if n > 1 {
        result -= result / n;
    }
    result
}

/// `Φ_k`, computed as `(x^k − 1) / ∏_{j | k, j < k} Φ_j`.
pub fn cyclotomic(k: u64) -> Poly {
    assert!(k >= 1, "cyclotomic index must be positive");
    let mut num = Poly::monomial(GaussianRational::one(), k as usize);
    num = &num - &Poly::one();
    for j in (1..k).filter(|j| k.is_multiple_of(*j)) {
        num = num.exact_div(&cyclotomic(j));
    }
    num
}

/// Exact test: some `Φ_k` with `φ(k) ≤ deg f` divides `f`.
///
/// Valid for any coefficients, but only complete for rational ones: a
/// Gaussian-rational `f` can vanish at a root of unity without being
/// divisible by its cyclotomic polynomial.
pub fn has_root_of_unity_exact(f: &Poly) -> bool {
    let d = match f.degree() {
        Some(d) if d > 0 => d as u64,
        _ => return false,
    };
    // φ(k) ≥ sqrt(k/2), so φ(k) ≤ d forces k ≤ 2d².
    (1..=2 * d * d + 2)
        .filter(|&k| euler_phi(k) <= d)
        .any(|k| cyclotomic(k).divides(f))
}

/// Numeric test: a root `α` with `||α| − 1| ≤ tol` and `|α^n − 1| ≤ tol` for
/// some `n ≤ n_max`.
pub fn has_root_of_unity_numeric(f: &Poly, n_max: u32, tol: f64) -> bool {
    let roots = match roots_numeric(f, 1e-12) {
        Ok(r) => r,
        Err(_) => return false,
    };
    roots.iter().any(|&a| {
        if (a.norm() - 1.0).abs() > tol {
            return false;
        }
        let mut pw = Complex64::new(1.0, 0.0);
        (1..=n_max).any(|_| {
            pw *= a;
            (pw - 1.0).norm() <= tol
        })
    })
}

/// Exact cyclotomic check for rational coefficients, numeric otherwise.
pub fn has_root_of_unity(f: &Poly, n_max: u32) -> bool {
    if f.is_real() {
        has_root_of_unity_exact(f)
    } else {
        has_root_of_unity_numeric(f, n_max, DEFAULT_UNITY_TOL)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::parse;

    #[test]
    fn small_cyclotomics() {
        assert_eq!(cyclotomic(1), parse("x-1").unwrap());
        assert_eq!(cyclotomic(4), parse("x^2+1").unwrap());
        assert_eq!(cyclotomic(6), parse("x^2-x+1").unwrap());
        assert_eq!(cyclotomic(12), parse("x^4-x^2+1").unwrap());
    }

    #[test]
    fn cyclotomic_oracle_product() {
        // x^n - 1 = ∏_{k | n} Φ_k
        for n in 1..=20u64 {
            let mut prod = Poly::one();
            for k in (1..=n).filter(|k| n % k == 0) {
                prod = &prod * &cyclotomic(k);
            }
            let target = &Poly::monomial(GaussianRational::one(), n as usize) - &Poly::one();
            assert_eq!(prod, target);
            assert_eq!(cyclotomic(n).degree(), Some(euler_phi(n) as usize));
        }
    }

    #[test]
    fn detection_examples() {
        for (s, expect) in [("x^2-1", true), ("x^2-x-1", false), ("x^2+x+1", true), ("x^3-2", false)] {
            let f = parse(s).unwrap();
            assert_eq!(has_root_of_unity(&f, 64), expect, "{s}");
            assert_eq!(has_root_of_unity_numeric(&f, 64, DEFAULT_UNITY_TOL), expect, "{s}");
        }
    }

    #[test]
    fn gaussian_coefficients_use_numeric_path() {
        assert!(has_root_of_unity(&parse("x-i").unwrap(), 64));
        assert!(!has_root_of_unity(&parse("x-2*i").unwrap(), 64));
        assert!(!has_root_of_unity(&parse("x-(3/5+4/5i)").unwrap(), 64));
    }
}
