//! Group rings `C[A]` of finitely generated abelian groups `A = Z^n ⊕ ⊕ Z/m_i`,
//! products of binomials, and the normal form for equal binomial
//! factorizations.
//!
//! A factor `s^u − s^v` is rewritten as `s^u (1 − s^{v−u})`. When every
//! difference `v − u` has infinite order, two products are equal exactly
//! when their differences agree up to sign after a permutation, and the
//! trivial units absorb `(−1)^{|F|} s^{Σ_F g_i}` for the set `F` of
//! sign-flipped factors.

use std::collections::BTreeMap;
use std::fmt;

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::number::GaussianRational;

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct FgAbelianGroup {
    pub rank: usize,
    pub torsion: Vec<u64>,
}

/// Serialized as one flat integer list: free coordinates, then torsion
/// residues.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GroupElement {
    pub free: Vec<i64>,
    pub tors: Vec<u64>,
}

impl GroupElement {
    pub fn is_identity(&self) -> bool {
        self.free.iter().all(|&v| v == 0) && self.tors.iter().all(|&v| v == 0)
    }

    pub fn flat(&self) -> Vec<i64> {
        self.free.iter().copied().chain(self.tors.iter().map(|&t| t as i64)).collect()
    }
}

impl Serialize for GroupElement {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.flat().serialize(s)
    }
}

impl fmt::Display for GroupElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .free
            .iter()
            .map(|v| v.to_string())
            .chain(self.tors.iter().map(|v| format!("{v}̄")))
            .collect();
        write!(f, "({})", parts.join(","))
    }
}

impl FgAbelianGroup {
    pub fn new(rank: usize, torsion: Vec<u64>) -> Result<Self> {
        if let Some(m) = torsion.iter().find(|&&m| m < 2) {
            return Err(Error::Group(format!("torsion order {m} must be at least 2")));
        }
        Ok(Self { rank, torsion })
    }

    pub fn free(rank: usize) -> Self {
        Self {
            rank,
            torsion: Vec::new(),
        }
    }

    /// Parses `rank=N;torsion=m1,m2,...` (the torsion list may be empty).
    pub fn parse_spec(spec: &str) -> Result<Self> {
        let mut rank = None;
        let mut torsion = Vec::new();
        for part in spec.split(';').map(str::trim).filter(|p| !p.is_empty()) {
            let (key, val) = part
                .split_once('=')
                .ok_or_else(|| Error::Group(format!("expected key=value, got {part:?}")))?;
            match key.trim() {
                "rank" => {
                    rank = Some(
                        val.trim()
                            .parse::<usize>()
                            .map_err(|e| Error::Group(format!("bad rank {val:?}: {e}")))?,
                    )
                }
                "torsion" => {
                    for m in val.split(',').map(str::trim).filter(|m| !m.is_empty()) {
                        torsion.push(
                            m.parse::<u64>()
                                .map_err(|e| Error::Group(format!("bad torsion order {m:?}: {e}")))?,
                        );
                    }
                }
                other => return Err(Error::Group(format!("unknown key {other:?}"))),
            }
        }
        Self::new(rank.ok_or_else(|| Error::Group("missing rank".into()))?, torsion)
    }

    pub fn spec(&self) -> String {
        let t: Vec<String> = self.torsion.iter().map(u64::to_string).collect();
        format!("rank={};torsion={}", self.rank, t.join(","))
    }

    pub fn identity(&self) -> GroupElement {
        GroupElement {
            free: vec![0; self.rank],
            tors: vec![0; self.torsion.len()],
        }
    }

    /// Splits a flat list (free coordinates, then torsion) into an element.
    pub fn element_flat(&self, flat: &[i64]) -> Result<GroupElement> {
        if flat.len() != self.rank + self.torsion.len() {
            return Err(Error::Group(format!(
                "element has {} entries, group {} needs {}",
                flat.len(),
                self.spec(),
                self.rank + self.torsion.len()
            )));
        }
        self.element(&flat[..self.rank], &flat[self.rank..])
    }

    /// Builds an element, reducing torsion coordinates (which may be negative).
    pub fn element(&self, free: &[i64], tors: &[i64]) -> Result<GroupElement> {
        if free.len() != self.rank || tors.len() != self.torsion.len() {
            return Err(Error::Group(format!(
                "element shape ({}, {}) does not match group {}",
                free.len(),
                tors.len(),
                self.spec()
            )));
        }
        Ok(GroupElement {
            free: free.to_vec(),
            tors: tors
                .iter()
                .zip(&self.torsion)
                .map(|(&t, &m)| t.rem_euclid(m as i64) as u64)
                .collect(),
        })
    }

    /// Generator `e_i` of the free part.
    pub fn basis(&self, i: usize) -> GroupElement {
        let mut e = self.identity();
        e.free[i] = 1;
        e
    }

    pub fn check(&self, g: &GroupElement) -> Result<()> {
        if g.free.len() != self.rank
            || g.tors.len() != self.torsion.len()
            || g.tors.iter().zip(&self.torsion).any(|(t, m)| t >= m)
        {
            return Err(Error::Group(format!("{g} is not a reduced element of {}", self.spec())));
        }
        Ok(())
    }

    pub fn add(&self, a: &GroupElement, b: &GroupElement) -> GroupElement {
        GroupElement {
            free: a.free.iter().zip(&b.free).map(|(x, y)| x + y).collect(),
            tors: a
                .tors
                .iter()
                .zip(&b.tors)
                .zip(&self.torsion)
                .map(|((x, y), m)| (x + y) % m)
                .collect(),
        }
    }

    pub fn neg(&self, a: &GroupElement) -> GroupElement {
        GroupElement {
            free: a.free.iter().map(|x| -x).collect(),
            tors: a.tors.iter().zip(&self.torsion).map(|(x, m)| (m - x) % m).collect(),
        }
    }

    pub fn sub(&self, a: &GroupElement, b: &GroupElement) -> GroupElement {
        self.add(a, &self.neg(b))
    }

    pub fn sum<'a>(&self, items: impl IntoIterator<Item = &'a GroupElement>) -> GroupElement {
        items.into_iter().fold(self.identity(), |acc, g| self.add(&acc, g))
    }

    /// An element has infinite order iff its free part is nonzero.
    pub fn infinite_order(&self, g: &GroupElement) -> bool {
        g.free.iter().any(|&v| v != 0)
    }
}

/// Finite formal sum `Σ c_a s^a` with no zero coefficients stored.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroupRingElement {
    group: FgAbelianGroup,
    terms: BTreeMap<GroupElement, GaussianRational>,
}

impl GroupRingElement {
    pub fn zero(group: &FgAbelianGroup) -> Self {
        Self {
            group: group.clone(),
            terms: BTreeMap::new(),
        }
    }

    pub fn monomial(group: &FgAbelianGroup, coeff: GaussianRational, elt: GroupElement) -> Self {
        let mut x = Self::zero(group);
        x.add_term(elt, coeff);
        x
    }

    pub fn one(group: &FgAbelianGroup) -> Self {
        Self::monomial(group, GaussianRational::one(), group.identity())
    }

    /// `s^u − s^v`.
    pub fn binomial(group: &FgAbelianGroup, u: &GroupElement, v: &GroupElement) -> Self {
        let mut x = Self::monomial(group, GaussianRational::one(), u.clone());
        x.add_term(v.clone(), -GaussianRational::one());
        x
    }

    pub fn from_terms(
        group: &FgAbelianGroup,
        terms: impl IntoIterator<Item = (GroupElement, GaussianRational)>,
    ) -> Self {
        let mut x = Self::zero(group);
        for (g, c) in terms {
            x.add_term(g, c);
        }
        x
    }

    pub fn group(&self) -> &FgAbelianGroup {
        &self.group
    }

    pub fn terms(&self) -> &BTreeMap<GroupElement, GaussianRational> {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add_term(&mut self, g: GroupElement, c: GaussianRational) {
        if c.is_zero() {
            return;
        }
        let sum = match self.terms.remove(&g) {
            Some(prev) => prev + c,
            None => c,
        };
        if !sum.is_zero() {
            self.terms.insert(g, sum);
        }
    }

    pub fn add(&self, o: &Self) -> Self {
        let mut out = self.clone();
        for (g, c) in &o.terms {
            out.add_term(g.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, o: &Self) -> Self {
        let mut out = self.clone();
        for (g, c) in &o.terms {
            out.add_term(g.clone(), -c);
        }
        out
    }

    pub fn scale(&self, c: &GaussianRational) -> Self {
        Self::from_terms(&self.group, self.terms.iter().map(|(g, v)| (g.clone(), v * c)))
    }

    /// Multiplication by `s^g`.
    pub fn shift(&self, g: &GroupElement) -> Self {
        Self {
            group: self.group.clone(),
            terms: self.terms.iter().map(|(h, v)| (self.group.add(h, g), v.clone())).collect(),
        }
    }

    pub fn mul(&self, o: &Self) -> Self {
        let mut out = Self::zero(&self.group);
        for (a, ca) in &self.terms {
            for (b, cb) in &o.terms {
                out.add_term(self.group.add(a, b), ca * cb);
            }
        }
        out
    }
}

impl fmt::Display for GroupRingElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self.terms.iter().map(|(g, c)| format!("{c}·s^{g}")).collect();
        write!(f, "{}", parts.join(" + "))
    }
}

/// `α s^b ∏ (s^{u_i} − s^{v_i})`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BinomialProduct {
    pub unit_coeff: GaussianRational,
    pub unit_elt: GroupElement,
    pub factors: Vec<(GroupElement, GroupElement)>,
}

/// JSON shape `{"unit": {"coeff": q, "elt": [..]}, "factors": [[[u..], [v..]], ..]}`
/// with flat elements; [`BinomialProductJson::resolve`] attaches a group.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct BinomialProductJson {
    pub unit: UnitJson,
    pub factors: Vec<(Vec<i64>, Vec<i64>)>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct UnitJson {
    pub coeff: GaussianRational,
    pub elt: Vec<i64>,
}

impl BinomialProductJson {
    pub fn resolve(&self, group: &FgAbelianGroup) -> Result<BinomialProduct> {
        Ok(BinomialProduct {
            unit_coeff: self.unit.coeff.clone(),
            unit_elt: group.element_flat(&self.unit.elt)?,
            factors: self
                .factors
                .iter()
                .map(|(u, v)| Ok((group.element_flat(u)?, group.element_flat(v)?)))
                .collect::<Result<_>>()?,
        })
    }
}

impl From<&BinomialProduct> for BinomialProductJson {
    fn from(p: &BinomialProduct) -> Self {
        Self {
            unit: UnitJson {
                coeff: p.unit_coeff.clone(),
                elt: p.unit_elt.flat(),
            },
            factors: p.factors.iter().map(|(u, v)| (u.flat(), v.flat())).collect(),
        }
    }
}

impl Serialize for BinomialProduct {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        BinomialProductJson::from(self).serialize(s)
    }
}

impl BinomialProduct {
    pub fn expand(&self, group: &FgAbelianGroup) -> GroupRingElement {
        let mut acc = GroupRingElement::monomial(group, self.unit_coeff.clone(), self.unit_elt.clone());
        for (u, v) in &self.factors {
            acc = acc.mul(&GroupRingElement::binomial(group, u, v));
        }
        acc
    }

    pub fn check(&self, group: &FgAbelianGroup) -> Result<()> {
        group.check(&self.unit_elt)?;
        for (u, v) in &self.factors {
            group.check(u)?;
            group.check(v)?;
        }
        Ok(())
    }
}

/// Data of a successful match of `P1 = α s^a ∏(s^{u_i} − s^{v_i})` against
/// `P2 = β s^b ∏(s^{x_j} − s^{y_j})`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FactorizationMatch {
    /// Number of factors matched without a sign flip.
    pub p: usize,
    /// Left factor `i` pairs with right factor `permutation[i]`.
    pub permutation: Vec<usize>,
    pub flipped: Vec<bool>,
    /// Trivial unit `η` with `∏(1 − s^{g_i}) = η ∏(1 − s^{h_i})`.
    pub eta_coeff: i8,
    pub eta_elt: GroupElement,
    /// `(c_i, d_i)` with `s^{c_i}(s^{u_i} − s^{v_i}) = ± s^{d_i}(s^{x_π(i)} − s^{y_π(i)})`,
    /// chosen with non-negative free coordinates.
    pub shifts: Vec<(GroupElement, GroupElement)>,
    /// The `±` in the per-factor relation above.
    pub factor_signs: Vec<i8>,
    /// `α / β`, always `±1` for a match.
    pub scalar_ratio: i8,
}

impl FactorizationMatch {
    /// Rebuilds the left product from the right product's factors using the
    /// per-factor relations and the left product's unit.
    pub fn rebuild_left(
        &self,
        group: &FgAbelianGroup,
        left: &BinomialProduct,
        right: &BinomialProduct,
    ) -> BinomialProduct {
        let mut coeff = left.unit_coeff.clone();
        let mut elt = left.unit_elt.clone();
        let mut factors = Vec::with_capacity(self.permutation.len());
        for (i, &j) in self.permutation.iter().enumerate() {
            let (c, d) = &self.shifts[i];
            // (s^u − s^v) = ± s^{d − c} (s^x − s^y)
            elt = group.add(&elt, &group.sub(d, c));
            if self.factor_signs[i] < 0 {
                coeff = -coeff;
            }
            factors.push(right.factors[j].clone());
        }
        BinomialProduct {
            unit_coeff: coeff,
            unit_elt: elt,
            factors,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "reason", rename_all = "snake_case")]
pub enum Mismatch {
    FactorCount { left: usize, right: usize },
    Differences,
    NonUnitScalar,
    UnitDiffers,
    ExpansionDiffers,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "outcome", rename_all = "snake_case")]
pub enum MatchOutcome {
    Matched(FactorizationMatch),
    Mismatch(Mismatch),
}

fn positive_part(a: &GroupElement) -> GroupElement {
    GroupElement {
        free: a.free.iter().map(|&v| v.max(0)).collect(),
        tors: a.tors.clone(),
    }
}

/// Minimal shifts `(c, d)` with `c + a = d + b` and non-negative free parts.
fn balancing_shifts(g: &FgAbelianGroup, a: &GroupElement, b: &GroupElement) -> (GroupElement, GroupElement) {
    let diff = g.sub(b, a);
    let c = positive_part(&diff);
    let d = g.sub(&g.add(&c, a), b);
    (c, d)
}

fn unit_sign(c: &GaussianRational) -> Option<i8> {
    if c.is_one() {
        Some(1)
    } else if (-c).is_one() {
        Some(-1)
    } else {
        None
    }
}

/// Decides whether two binomial products are equal and, if so, returns the
/// permutation/orientation data of the factor-by-factor correspondence.
pub fn match_factorizations(
    group: &FgAbelianGroup,
    left: &BinomialProduct,
    right: &BinomialProduct,
) -> Result<MatchOutcome> {
    left.check(group)?;
    right.check(group)?;
    for (side, prod) in [("left", left), ("right", right)] {
        for (index, (u, v)) in prod.factors.iter().enumerate() {
            if !group.infinite_order(&group.sub(v, u)) {
                return Err(Error::FiniteOrder {
                    side: side.into(),
                    index,
                });
            }
        }
    }
    if left.unit_coeff.is_zero() || right.unit_coeff.is_zero() {
        return Err(Error::InvalidArgument("binomial products need a nonzero scalar".into()));
    }
    let e = left.factors.len();
    if e != right.factors.len() {
        return Ok(MatchOutcome::Mismatch(Mismatch::FactorCount {
            left: e,
            right: right.factors.len(),
        }));
    }

    let g: Vec<GroupElement> = left.factors.iter().map(|(u, v)| group.sub(v, u)).collect();
    let h: Vec<GroupElement> = right.factors.iter().map(|(x, y)| group.sub(y, x)).collect();

    // Equal differences first, then opposite ones.
    let mut used = vec![false; e];
    let mut permutation = vec![usize::MAX; e];
    let mut flipped = vec![false; e];
    for i in 0..e {
        if let Some(j) = (0..e).find(|&j| !used[j] && h[j] == g[i]) {
            used[j] = true;
            permutation[i] = j;
        }
    }
    for i in 0..e {
        if permutation[i] != usize::MAX {
            continue;
        }
        let neg = group.neg(&g[i]);
        match (0..e).find(|&j| !used[j] && h[j] == neg) {
            Some(j) => {
                used[j] = true;
                permutation[i] = j;
                flipped[i] = true;
            }
            None => return Ok(MatchOutcome::Mismatch(Mismatch::Differences)),
        }
    }

    let flips = flipped.iter().filter(|&&f| f).count();
    let eta_coeff: i8 = if flips % 2 == 0 { 1 } else { -1 };
    let eta_elt = group.sum(g.iter().zip(&flipped).filter(|(_, &f)| f).map(|(gi, _)| gi));

    // P1 = α s^{a + Σu} η ∏(1 − s^{h}),  P2 = β s^{b + Σx} ∏(1 − s^{h}).
    let ratio = &left.unit_coeff / &right.unit_coeff;
    let scalar_ratio = match unit_sign(&ratio) {
        Some(s) => s,
        None => return Ok(MatchOutcome::Mismatch(Mismatch::NonUnitScalar)),
    };
    let left_shift = group.add(
        &group.add(&left.unit_elt, &group.sum(left.factors.iter().map(|(u, _)| u))),
        &eta_elt,
    );
    let right_shift = group.add(&right.unit_elt, &group.sum(right.factors.iter().map(|(x, _)| x)));
    if scalar_ratio * eta_coeff != 1 || left_shift != right_shift {
        return Ok(MatchOutcome::Mismatch(Mismatch::UnitDiffers));
    }

    let mut shifts = Vec::with_capacity(e);
    let mut factor_signs = Vec::with_capacity(e);
    for i in 0..e {
        let (u, _) = &left.factors[i];
        let (x, y) = &right.factors[permutation[i]];
        if flipped[i] {
            // s^u − s^v = −s^{u−y}(s^x − s^y) when v − u = x − y
            shifts.push(balancing_shifts(group, u, y));
            factor_signs.push(-1);
        } else {
            shifts.push(balancing_shifts(group, u, x));
            factor_signs.push(1);
        }
    }

    if left.expand(group) != right.expand(group) {
        return Ok(MatchOutcome::Mismatch(Mismatch::ExpansionDiffers));
    }
    Ok(MatchOutcome::Matched(FactorizationMatch {
        p: e - flips,
        permutation,
        flipped,
        eta_coeff,
        eta_elt,
        shifts,
        factor_signs,
        scalar_ratio,
    }))
}

/// Equality of arbitrary group-ring elements by expansion.
pub fn general_binomial_equal(x: &GroupRingElement, y: &GroupRingElement) -> bool {
    x == y
}

/// `φ: A → Z` given on the free basis, nonzero on every listed element.
/// Tries `φ = (1, h, h², …)` for `h = 1, 2, 3, …`.
pub fn separating_hom(group: &FgAbelianGroup, elements: &[GroupElement]) -> Result<Vec<i64>> {
    for (index, a) in elements.iter().enumerate() {
        group.check(a)?;
        if !group.infinite_order(a) {
            return Err(Error::FiniteOrderElement { index });
        }
    }
    // Each element rules out at most rank − 1 values of h.
    let limit = 1 + elements.len() as i64 * group.rank.saturating_sub(1) as i64;
    for h in 1..=limit.max(1) {
        let mut phi = Vec::with_capacity(group.rank);
        let mut pw: i64 = 1;
        let mut overflow = false;
        for _ in 0..group.rank {
            phi.push(pw);
            pw = match pw.checked_mul(h) {
                Some(v) => v,
                None => {
                    overflow = true;
                    break;
                }
            };
        }
        if overflow && phi.len() < group.rank {
            break;
        }
        if elements.iter().all(|a| phi_value(&phi, a) != 0) {
            return Ok(phi);
        }
    }
    Err(Error::Group("no separating homomorphism found within range".into()))
}

pub fn phi_value(phi: &[i64], a: &GroupElement) -> i128 {
    phi.iter().zip(&a.free).map(|(&p, &v)| p as i128 * v as i128).sum()
}

/// Grading of `x` by `φ`-degree: the image of `x` in `C[A][t, t^{-1}]`
/// under `s^a ↦ s^a t^{φ(a)}`, keyed by the power of `t`.
pub fn laurent_embed(x: &GroupRingElement, phi: &[i64]) -> Result<BTreeMap<i128, GroupRingElement>> {
    if phi.len() != x.group.rank {
        return Err(Error::Group(format!(
            "homomorphism has {} entries, group rank is {}",
            phi.len(),
            x.group.rank
        )));
    }
    let mut out: BTreeMap<i128, GroupRingElement> = BTreeMap::new();
    for (g, c) in &x.terms {
        out.entry(phi_value(phi, g))
            .or_insert_with(|| GroupRingElement::zero(&x.group))
            .add_term(g.clone(), c.clone());
    }
    Ok(out)
}

/// Product of two graded decompositions (Laurent-polynomial multiplication).
pub fn graded_product(
    group: &FgAbelianGroup,
    a: &BTreeMap<i128, GroupRingElement>,
    b: &BTreeMap<i128, GroupRingElement>,
) -> BTreeMap<i128, GroupRingElement> {
    let mut out: BTreeMap<i128, GroupRingElement> = BTreeMap::new();
    for (da, xa) in a {
        for (db, xb) in b {
            let prod = xa.mul(xb);
            let slot = out.entry(da + db).or_insert_with(|| GroupRingElement::zero(group));
            *slot = slot.add(&prod);
        }
    }
    out.retain(|_, v| !v.is_zero());
    out
}
