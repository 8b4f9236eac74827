//! Transition kernels and coherent measure families on the two graphs.
//!
//! A coherent family assigns a probability measure to every level so that
//! deleting a uniformly-weighted box maps level `n` onto level `n-1`. The
//! down kernel is `dim(smaller)/dim(larger)` on both graphs; each family
//! is described here through its up kernel, and level measures are built
//! by iterating that kernel from the empty diagram.
//!
//! Families on the Young graph: Plancherel, and its two-parameter `z`
//! deformation whose content factor `(z + c)(z' + c)` is evaluated through
//! the symmetric combinations `s = z + z'`, `p = z z'` so that complex
//! conjugate parameter pairs stay inside rational arithmetic. On the Schur
//! graph: shifted Plancherel and its one-parameter `alpha` deformation
//! with content factor `c(c+1) + alpha`.
//!
//! The doubling map transfers kernels between the graphs: summing the
//! ordinary kernel over the one or two diagrams between `double(mu)` and
//! `double(lam)` reproduces the strict kernel, downward for any coherent
//! family ([`down_equality_holds`]) and upward for `alpha` against the
//! matched `z` parameters `s = -1, p = alpha` ([`up_equality_holds`]).
//! Closed product formulas for the level measures, and the constancy of
//! `alpha_measure(lam)^2 / z_measure(double(lam))` over a level, are
//! exposed for exact verification.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::graph::{dim_f, dim_g, intermediates, Diagram};
use crate::partition::{Partition, StrictPartition};
use crate::rational::{factorial, rat, sqrt_exact, Rational};

/// Parameters of the `z` family, stored as the elementary symmetric values
/// `sum = z + z'` and `product = z * z'`.
///
/// Admissibility requires the quadratic `Q(c) = c^2 + sum*c + product` to
/// be positive at every integer; a quadratic is positive at all integers
/// iff it is positive at the two integers bracketing its minimum `-sum/2`.
/// That covers exactly the complex-conjugate pairs and the real pairs
/// lying strictly inside one unit integer interval.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ZParams {
    sum: Rational,
    product: Rational,
}

impl ZParams {
    pub fn new(sum: Rational, product: Rational) -> Result<Self> {
        let half_min = -&sum / rat(2);
        for probe in [half_min.floor(), half_min.ceil()] {
            let q = (&probe * &probe) + (&sum * &probe) + &product;
            if !q.is_positive() {
                return Err(Error::InadmissibleParams(format!(
                    "(z + c)(z' + c) = {q} at integer content c = {probe} must be positive",
                )));
            }
        }
        Ok(ZParams { sum, product })
    }

    pub fn sum(&self) -> &Rational {
        &self.sum
    }

    pub fn product(&self) -> &Rational {
        &self.product
    }

    /// `(z + c)(z' + c) = c^2 + sum*c + product`.
    pub fn content_factor(&self, c: i64) -> Rational {
        let c = rat(c);
        (&c * &c) + (&self.sum * &c) + &self.product
    }
}

/// Parameter of the `alpha` family on the Schur graph; positive.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AlphaParam {
    alpha: Rational,
}

impl AlphaParam {
    pub fn new(alpha: Rational) -> Result<Self> {
        if !alpha.is_positive() {
            return Err(Error::InadmissibleParams(format!(
                "alpha = {alpha} must be positive"
            )));
        }
        Ok(AlphaParam { alpha })
    }

    pub fn alpha(&self) -> &Rational {
        &self.alpha
    }

    /// `c(c+1) + alpha`.
    pub fn content_factor(&self, c: i64) -> Rational {
        rat(c) * rat(c + 1) + &self.alpha
    }
}

/// The `z` parameters matched to `alpha` under doubling:
/// `z + z' = -1`, `z z' = alpha`. Admissible for every positive alpha.
pub fn alpha_to_zparams(a: &AlphaParam) -> ZParams {
    ZParams::new(rat(-1), a.alpha().clone())
        .expect("s = -1, p = alpha > 0 is always admissible")
}

/// Down transition probability, `dim(smaller)/dim(larger)` on a covering
/// pair and zero otherwise. One definition serves both graphs.
pub fn p_down<D: Diagram>(larger: &D, smaller: &D) -> Rational {
    if !larger.covers(smaller) {
        return Rational::zero();
    }
    Rational::new(
        BigInt::from(smaller.dim()),
        BigInt::from(larger.dim()),
    )
}

fn not_cover<D: Diagram>(smaller: &D, larger: &D) -> Error {
    Error::NotCover {
        smaller: smaller.to_string(),
        larger: larger.to_string(),
    }
}

/// Plancherel up probability on the Young graph:
/// `f(larger) / ((n + 1) f(smaller))`.
pub fn p_up_plancherel(smaller: &Partition, larger: &Partition) -> Result<Rational> {
    if !larger.covers(smaller) {
        return Err(not_cover(smaller, larger));
    }
    Ok(Rational::new(
        BigInt::from(dim_f(larger)),
        BigInt::from(dim_f(smaller) * (smaller.weight() + 1)),
    ))
}

/// Shifted Plancherel up probability on the Schur graph:
/// `g(larger) * 2^(rows(smaller) - rows(larger) + 1) / ((n + 1) g(smaller))`.
pub fn p_up_plancherel_shifted(
    smaller: &StrictPartition,
    larger: &StrictPartition,
) -> Result<Rational> {
    if !larger.covers(smaller) {
        return Err(not_cover(smaller, larger));
    }
    // rows grow by at most one, so the exponent is 1 (same rows) or 0.
    let two_pow = if smaller.len() == larger.len() { 2 } else { 1 };
    Ok(Rational::new(
        BigInt::from(dim_g(larger) * two_pow as u32),
        BigInt::from(dim_g(smaller) * (smaller.weight() + 1)),
    ))
}

/// Up probability of the `z` family: the Plancherel one times
/// `(z + c)(z' + c) / (z z' + n)` for the added box content `c`.
pub fn p_up_z(smaller: &Partition, larger: &Partition, zp: &ZParams) -> Result<Rational> {
    let cell = larger
        .added_cell(smaller)
        .ok_or_else(|| not_cover(smaller, larger))?;
    let base = p_up_plancherel(smaller, larger)?;
    let factor = zp.content_factor(cell.content())
        / (zp.product() + Rational::from_integer(smaller.weight().into()));
    Ok(base * factor)
}

/// Up probability of the `alpha` family: the shifted Plancherel one times
/// `(c(c+1) + alpha) / (2n + alpha)` for the added box content `c`.
pub fn p_up_alpha(
    smaller: &StrictPartition,
    larger: &StrictPartition,
    a: &AlphaParam,
) -> Result<Rational> {
    let cell = larger
        .added_cell(smaller)
        .ok_or_else(|| not_cover(smaller, larger))?;
    let base = p_up_plancherel_shifted(smaller, larger)?;
    let factor = a.content_factor(cell.content())
        / (Rational::from_integer((2 * smaller.weight()).into()) + a.alpha());
    Ok(base * factor)
}

/// A coherent family presented through its up kernel. Rows always sum to
/// one exactly; the implementations assert it.
pub trait CoherentFamily {
    type D: Diagram;

    /// Full up-kernel row out of `from`, in cover enumeration order.
    fn up_row(&self, from: &Self::D) -> Vec<(Self::D, Rational)>;

    /// Short label for reports.
    fn label(&self) -> String;
}

/// Coherent families on the Young graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum YoungFamily {
    Plancherel,
    Z(ZParams),
}

/// Coherent families on the Schur graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SchurFamily {
    Plancherel,
    Alpha(AlphaParam),
}

fn assert_row_is_stochastic<D: Diagram>(from: &D, row: &[(D, Rational)]) {
    let total: Rational = row.iter().map(|(_, p)| p).sum();
    assert!(
        total.is_one(),
        "up row out of {from} sums to {total}, expected 1"
    );
}

impl CoherentFamily for YoungFamily {
    type D = Partition;

    fn up_row(&self, from: &Partition) -> Vec<(Partition, Rational)> {
        let row: Vec<(Partition, Rational)> = from
            .up_covers()
            .into_iter()
            .map(|to| {
                let p = match self {
                    YoungFamily::Plancherel => p_up_plancherel(from, &to),
                    YoungFamily::Z(zp) => p_up_z(from, &to, zp),
                }
                .expect("enumerated covers are covers");
                (to, p)
            })
            .collect();
        assert_row_is_stochastic(from, &row);
        row
    }

    fn label(&self) -> String {
        match self {
            YoungFamily::Plancherel => "plancherel".into(),
            YoungFamily::Z(zp) => format!("z(s={}, p={})", zp.sum(), zp.product()),
        }
    }
}

impl CoherentFamily for SchurFamily {
    type D = StrictPartition;

    fn up_row(&self, from: &StrictPartition) -> Vec<(StrictPartition, Rational)> {
        let row: Vec<(StrictPartition, Rational)> = from
            .up_covers()
            .into_iter()
            .map(|to| {
                let p = match self {
                    SchurFamily::Plancherel => p_up_plancherel_shifted(from, &to),
                    SchurFamily::Alpha(a) => p_up_alpha(from, &to, a),
                }
                .expect("enumerated covers are covers");
                (to, p)
            })
            .collect();
        assert_row_is_stochastic(from, &row);
        row
    }

    fn label(&self) -> String {
        match self {
            SchurFamily::Plancherel => "plancherel-shifted".into(),
            SchurFamily::Alpha(a) => format!("alpha({})", a.alpha()),
        }
    }
}

/// An exact probability table over one full level of a graph.
///
/// Iteration follows the layer order (descending lexicographic); every
/// entry is positive and the entries sum to one.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DistributionTable<D: Diagram> {
    level: u64,
    entries: BTreeMap<D, Rational>,
}

impl<D: Diagram> DistributionTable<D> {
    fn new(level: u64, entries: BTreeMap<D, Rational>) -> Self {
        let layer = D::layer(level);
        assert_eq!(
            entries.len(),
            layer.len(),
            "table support must be the whole level"
        );
        assert!(layer.iter().all(|d| entries.contains_key(d)));
        assert!(
            entries.values().all(Signed::is_positive),
            "table entries must be positive"
        );
        let total: Rational = entries.values().sum();
        assert!(total.is_one(), "table sums to {total}, expected 1");
        DistributionTable { level, entries }
    }

    pub fn level(&self) -> u64 {
        self.level
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn get(&self, d: &D) -> Option<&Rational> {
        self.entries.get(d)
    }

    /// Entries in layer order.
    pub fn iter(&self) -> impl Iterator<Item = (&D, &Rational)> {
        self.entries.iter().rev()
    }
}

/// The level-`n` measure of a coherent family, by iterating its up kernel
/// from the empty diagram.
pub fn build_measure<F: CoherentFamily>(family: &F, n: u64) -> DistributionTable<F::D> {
    let mut current: BTreeMap<F::D, Rational> =
        BTreeMap::from([(F::D::empty(), Rational::one())]);
    for _ in 0..n {
        let mut next: BTreeMap<F::D, Rational> = BTreeMap::new();
        for (from, mass) in &current {
            for (to, p) in family.up_row(from) {
                let term = p * mass;
                next.entry(to)
                    .and_modify(|acc| *acc += &term)
                    .or_insert(term);
            }
        }
        current = next;
    }
    DistributionTable::new(n, current)
}

/// Violations of the projection property at level `n`: diagrams of level
/// `n-1` where pushing the level measure down the graph misses the level
/// `n-1` measure, with both sides.
pub fn coherence_violations<F: CoherentFamily>(
    family: &F,
    n: u64,
) -> Vec<(F::D, Rational, Rational)> {
    assert!(n >= 1, "coherence compares two consecutive levels");
    let upper = build_measure(family, n);
    let lower = build_measure(family, n - 1);
    let mut pushed: BTreeMap<F::D, Rational> = BTreeMap::new();
    for (larger, mass) in upper.iter() {
        for smaller in larger.down_covers() {
            let term = mass * p_down(larger, &smaller);
            pushed
                .entry(smaller)
                .and_modify(|acc| *acc += &term)
                .or_insert(term);
        }
    }
    let mut out = Vec::new();
    for (d, expected) in lower.iter() {
        let got = pushed.remove(d).unwrap_or_else(Rational::zero);
        if &got != expected {
            out.push((d.clone(), got, expected.clone()));
        }
    }
    out
}

/// Whether pushing the level-`n` measure down reproduces level `n-1`.
pub fn coherence_check<F: CoherentFamily>(family: &F, n: u64) -> bool {
    coherence_violations(family, n).is_empty()
}

/// Both sides of the down-kernel transfer for a strict covering pair:
/// the strict down probability, and the ordinary down probabilities from
/// the doubled diagram summed over the intermediates.
pub fn down_equality_sides(
    lam: &StrictPartition,
    mu: &StrictPartition,
) -> Result<(Rational, Rational)> {
    let lhs = {
        if !lam.covers(mu) {
            return Err(not_cover(mu, lam));
        }
        p_down(lam, mu)
    };
    let dlam = lam.double();
    let rhs = intermediates(mu, lam)?
        .iter()
        .map(|rho| p_down(&dlam, rho))
        .sum();
    Ok((lhs, rhs))
}

pub fn down_equality_holds(lam: &StrictPartition, mu: &StrictPartition) -> Result<bool> {
    down_equality_sides(lam, mu).map(|(l, r)| l == r)
}

/// Both sides of the up-kernel transfer for a strict covering pair: the
/// `alpha` up probability, and the matched-`z` up probabilities from the
/// doubled diagram summed over the intermediates.
pub fn up_equality_sides(
    mu: &StrictPartition,
    lam: &StrictPartition,
    a: &AlphaParam,
) -> Result<(Rational, Rational)> {
    let lhs = p_up_alpha(mu, lam, a)?;
    let zp = alpha_to_zparams(a);
    let dmu = mu.double();
    let mut rhs = Rational::zero();
    for rho in intermediates(mu, lam)? {
        rhs += p_up_z(&dmu, &rho, &zp)?;
    }
    Ok((lhs, rhs))
}

pub fn up_equality_holds(
    mu: &StrictPartition,
    lam: &StrictPartition,
    a: &AlphaParam,
) -> Result<bool> {
    up_equality_sides(mu, lam, a).map(|(l, r)| l == r)
}

/// Rising factorial `x (x+1) ... (x+n-1)`; empty product for `n = 0`.
pub fn pochhammer(x: &Rational, n: u64) -> Rational {
    let mut acc = Rational::one();
    for k in 0..n {
        acc *= x + Rational::from_integer(k.into());
    }
    acc
}

/// Principal specialization of the Schur polynomial at `t` ones, extended
/// polynomially in `t` through the content/hook product
/// `prod over boxes of (t + content) / hook`.
pub fn schur_principal(p: &Partition, t: &Rational) -> Rational {
    let mut acc = Rational::one();
    for c in p.contents() {
        acc *= t + rat(c);
    }
    for h in p.hook_lengths() {
        acc /= Rational::from_integer(h.into());
    }
    acc
}

/// Closed form of the `z` measure of one diagram:
/// `n! / (z z')_n * s(1^z) s(1^z')`, evaluated entirely in `(sum, product)`
/// since `s(1^z) s(1^z') = prod (c^2 + sum*c + product) / (prod hooks)^2`.
pub fn z_measure_closed(rho: &Partition, zp: &ZParams) -> Rational {
    let n = rho.weight();
    let mut acc = Rational::from_integer(factorial(n).into()) / pochhammer(zp.product(), n);
    for c in rho.contents() {
        acc *= zp.content_factor(c);
    }
    for h in rho.hook_lengths() {
        let h = Rational::from_integer(h.into());
        acc /= &h * &h;
    }
    acc
}

/// Closed form of the `alpha` measure of one strict diagram:
/// `(-1)^n n! / (alpha/2)_n * s[double(lam)](1^(nu - 1/2))` with
/// `nu = sqrt(1 - 4 alpha)/2`. Available only when `1 - 4 alpha` is the
/// square of a rational, so that the specialization argument is exact.
pub fn alpha_measure_closed(lam: &StrictPartition, a: &AlphaParam) -> Result<Rational> {
    let disc = Rational::one() - rat(4) * a.alpha();
    let root = sqrt_exact(&disc).ok_or_else(|| Error::IrrationalNu(disc.to_string()))?;
    let nu = root / rat(2);
    let spec_arg = nu - Rational::new(1.into(), 2.into());
    let n = lam.weight();
    let sign = if n.is_multiple_of(2) { rat(1) } else { rat(-1) };
    let half_alpha = a.alpha() / rat(2);
    Ok(sign * Rational::from_integer(factorial(n).into()) / pochhammer(&half_alpha, n)
        * schur_principal(&lam.double(), &spec_arg))
}

/// Outcome of the square-root proportionality scan over one level.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Proportionality {
    /// `alpha_measure(lam)^2 / z_measure(double(lam))` is this constant
    /// across the whole level.
    Constant(Rational),
    /// The ratio varies; all (diagram, ratio) pairs as witnesses.
    Varies(Vec<(StrictPartition, Rational)>),
}

/// Computes `alpha_measure(lam)^2 / z_measure(double(lam))` for every
/// strict diagram of weight `n`, under the matched `z` parameters.
pub fn proportionality_check(n: u64, a: &AlphaParam) -> Proportionality {
    let strict = build_measure(&SchurFamily::Alpha(a.clone()), n);
    let ordinary = build_measure(&YoungFamily::Z(alpha_to_zparams(a)), 2 * n);
    let ratios: Vec<(StrictPartition, Rational)> = strict
        .iter()
        .map(|(lam, m)| {
            let doubled = ordinary
                .get(&lam.double())
                .expect("doubled diagram sits in the doubled level");
            (lam.clone(), m * m / doubled)
        })
        .collect();
    let first = ratios[0].1.clone();
    if ratios.iter().all(|(_, r)| *r == first) {
        Proportionality::Constant(first)
    } else {
        Proportionality::Varies(ratios)
    }
}
