//! `Res(f, x^m − 1)` as a polynomial in the unknown coefficients of `f`.

use std::collections::HashMap;
use std::sync::{Arc, Mutex, OnceLock};

use num_traits::One;

use super::multipoly::MultiPoly;
use crate::number::Rational;

/// Coefficient layout of the unknown polynomial
/// `f = a_0 x^d + a_1 x^{d−1} + ⋯ + a_d`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Unknowns {
    pub d: usize,
    /// `a_0 = 1` and the variables are `a_1..a_d`; otherwise `a_0..a_d`.
    pub monic: bool,
}

impl Unknowns {
    pub fn nvars(&self) -> usize {
        if self.monic {
            self.d
        } else {
            self.d + 1
        }
    }

    /// `a_j` as a polynomial in the unknowns.
    pub fn coefficient(&self, j: usize) -> MultiPoly {
        let n = self.nvars();
        match (self.monic, j) {
            (true, 0) => MultiPoly::constant(n, Rational::one()),
            (true, j) => MultiPoly::var(n, j - 1),
            (false, j) => MultiPoly::var(n, j),
        }
    }
}

type Cache = Mutex<HashMap<(Unknowns, usize), Arc<MultiPoly>>>;

fn cache() -> &'static Cache {
    static CACHE: OnceLock<Cache> = OnceLock::new();
    CACHE.get_or_init(|| Mutex::new(HashMap::new()))
}

/// Symbolic `r_m`, memoized per `(d, m, monic)`.
pub fn symbolic_cyclic_resultant(u: Unknowns, m: usize) -> Arc<MultiPoly> {
    if let Some(p) = cache().lock().expect("cache lock").get(&(u, m)) {
        return Arc::clone(p);
    }
    let p = Arc::new(sylvester_det(u, m));
    cache()
        .lock()
        .expect("cache lock")
        .entry((u, m))
        .or_insert_with(|| Arc::clone(&p));
    p
}

/// Determinant of the Sylvester matrix of `f` and `x^m − 1` (rows of `f`
/// first), by Laplace expansion over column subsets.
fn sylvester_det(u: Unknowns, m: usize) -> MultiPoly {
    let d = u.d;
    let n = d + m;
    let nv = u.nvars();
    if n == 0 {
        return MultiPoly::constant(nv, Rational::one());
    }
    let coeffs: Vec<MultiPoly> = (0..=d).map(|j| u.coefficient(j)).collect();
    let one = MultiPoly::constant(nv, Rational::one());
    let minus_one = MultiPoly::constant(nv, -Rational::one());
    // row r: list of (column, entry)
    let mut rows: Vec<Vec<(usize, &MultiPoly)>> = Vec::with_capacity(n);
    for s in 0..m {
        rows.push((0..=d).map(|j| (s + j, &coeffs[j])).collect());
    }
    for s in 0..d {
        if m == 0 {
            break;
        }
        rows.push(vec![(s, &one), (s + m, &minus_one)]);
    }
    let mut layer: HashMap<u64, MultiPoly> = HashMap::new();
    layer.insert(0, one.clone());
    for row in &rows {
        let mut next: HashMap<u64, MultiPoly> = HashMap::new();
        for (mask, acc) in &layer {
            for &(col, entry) in row {
                if mask >> col & 1 == 1 || entry.is_zero() {
                    continue;
                }
                let inversions = (mask >> (col + 1)).count_ones();
                let mut t = acc.mul(entry);
                if inversions % 2 == 1 {
                    t = t.scale(&-Rational::one());
                }
                let slot = next.entry(mask | 1 << col).or_insert_with(|| MultiPoly::zero(nv));
                *slot = slot.add(&t);
            }
        }
        next.retain(|_, v| !v.is_zero());
        layer = next;
    }
    layer.remove(&((1u64 << n) - 1)).unwrap_or_else(|| MultiPoly::zero(nv))
}
