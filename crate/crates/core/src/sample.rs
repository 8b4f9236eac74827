//! Seeded growth samplers over the up kernels, with exact inverse-transform
//! draws.
//!
//! Randomness contract: a trace is a pure function of `(seed, index)`. The
//! generator is ChaCha8 seeded with the master seed, on stream `index`, so
//! sampling many traces is reproducible independently of scheduling. Each
//! step interprets one uniform 64-bit draw as the rational `r / 2^64` and
//! walks an exact cumulative row; ties at a boundary resolve to the lower
//! interval. No floating point is involved anywhere.
//!
//! [`ForcedSampler`] grows an ordinary diagram that is forced back onto a
//! doubled (D-symmetric) diagram after every pair of steps: even steps
//! draw from the matched `z` kernel, odd steps add the unique
//! symmetrizing box.

use std::collections::{BTreeMap, HashMap};
use std::sync::{Arc, RwLock};

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::{One, Zero};
use rand_chacha::ChaCha8Rng;
use rand_core::{RngCore, SeedableRng};

use crate::error::{Error, Result};
use crate::graph::{forced_completion, Diagram};
use crate::measures::{
    alpha_to_zparams, AlphaParam, CoherentFamily, DistributionTable, YoungFamily,
};
use crate::partition::{Partition, StrictPartition};
use crate::rational::Rational;

/// One sampled growth path from the empty diagram.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GrowthTrace<D: Diagram> {
    pub family: String,
    pub seed: u64,
    pub index: u64,
    pub diagrams: Vec<D>,
}

impl<D: Diagram> GrowthTrace<D> {
    pub fn final_diagram(&self) -> &D {
        self.diagrams.last().expect("traces start at the empty diagram")
    }
}

impl GrowthTrace<Partition> {
    /// The strict partition under the final diagram of a forced trace.
    pub fn undoubled_final(&self) -> Result<StrictPartition> {
        self.final_diagram().undouble()
    }
}

fn stream_rng(seed: u64, index: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(index);
    rng
}

/// A kernel row reduced to integer cumulative thresholds over a common
/// denominator, so each draw costs one big-integer multiply.
struct PreparedRow<T> {
    outcomes: Vec<T>,
    /// `cumulative_numerator << 64`, against `draw * denom`.
    thresholds: Vec<BigUint>,
    denom: BigUint,
}

impl<T> PreparedRow<T> {
    fn from_probs(items: Vec<(T, Rational)>) -> Self {
        assert!(!items.is_empty(), "rows out of any diagram are nonempty");
        let denom = items
            .iter()
            .fold(BigUint::one(), |acc, (_, p)| {
                acc.lcm(&p.denom().to_biguint().expect("positive probability"))
            });
        let mut outcomes = Vec::with_capacity(items.len());
        let mut thresholds = Vec::with_capacity(items.len());
        let mut cum = BigUint::zero();
        for (t, p) in items {
            let num = p.numer().to_biguint().expect("positive probability");
            cum += num * (&denom / p.denom().to_biguint().unwrap());
            outcomes.push(t);
            thresholds.push(&cum << 64);
        }
        PreparedRow {
            outcomes,
            thresholds,
            denom,
        }
    }

    /// First outcome whose cumulative weight reaches `draw / 2^64`.
    fn pick(&self, draw: u64) -> &T {
        let scaled = BigUint::from(draw) * &self.denom;
        let k = self
            .thresholds
            .iter()
            .position(|t| *t >= scaled)
            .expect("cumulative mass is one");
        &self.outcomes[k]
    }
}

type RowCache<K, T> = RwLock<HashMap<K, Arc<PreparedRow<T>>>>;

/// Reusable sampler for one coherent family; kernel rows are cached per
/// source diagram behind a read-write lock.
pub struct Sampler<F: CoherentFamily> {
    family: F,
    rows: RowCache<F::D, F::D>,
}

impl<F: CoherentFamily> Sampler<F> {
    pub fn new(family: F) -> Self {
        Sampler {
            family,
            rows: RwLock::new(HashMap::new()),
        }
    }

    pub fn family(&self) -> &F {
        &self.family
    }

    fn row(&self, from: &F::D) -> Arc<PreparedRow<F::D>> {
        if let Some(row) = self.rows.read().unwrap().get(from) {
            return Arc::clone(row);
        }
        let row = Arc::new(PreparedRow::from_probs(self.family.up_row(from)));
        self.rows
            .write()
            .unwrap()
            .entry(from.clone())
            .or_insert(row)
            .clone()
    }

    /// Grows `n` boxes on stream `index` of `seed`.
    pub fn trace(&self, n: u64, seed: u64, index: u64) -> GrowthTrace<F::D> {
        let mut rng = stream_rng(seed, index);
        let mut current = F::D::empty();
        let mut diagrams = Vec::with_capacity(n as usize + 1);
        diagrams.push(current.clone());
        for _ in 0..n {
            current = self.row(&current).pick(rng.next_u64()).clone();
            diagrams.push(current.clone());
        }
        GrowthTrace {
            family: self.family.label(),
            seed,
            index,
            diagrams,
        }
    }

    pub fn traces(&self, n: u64, seed: u64, count: u64) -> Vec<GrowthTrace<F::D>> {
        (0..count).map(|i| self.trace(n, seed, i)).collect()
    }
}

/// Single growth trace of a coherent family, on stream 0.
pub fn sample_growth<F: CoherentFamily>(family: F, n: u64, seed: u64) -> GrowthTrace<F::D> {
    Sampler::new(family).trace(n, seed, 0)
}

/// Grows ordinary diagrams under the `z` kernel matched to `alpha`,
/// restoring D-symmetry after every even step. A cached row maps a
/// D-symmetric diagram directly to (random intermediate, completed)
/// pairs.
pub struct ForcedSampler {
    alpha: AlphaParam,
    z_family: YoungFamily,
    rows: RowCache<Partition, (Partition, Partition)>,
}

impl ForcedSampler {
    pub fn new(alpha: AlphaParam) -> Self {
        let z_family = YoungFamily::Z(alpha_to_zparams(&alpha));
        ForcedSampler {
            alpha,
            z_family,
            rows: RwLock::new(HashMap::new()),
        }
    }

    pub fn alpha(&self) -> &AlphaParam {
        &self.alpha
    }

    fn row(&self, from: &Partition) -> Result<Arc<PreparedRow<(Partition, Partition)>>> {
        if let Some(row) = self.rows.read().unwrap().get(from) {
            return Ok(Arc::clone(row));
        }
        // Every cover must admit a symmetrizing completion, so the
        // restriction to completable additions carries full mass; anything
        // else is a bug worth reporting, not renormalizing away.
        let mut items = Vec::new();
        for (intermediate, p) in self.z_family.up_row(from) {
            let cell = forced_completion(&intermediate)
                .map_err(|_| Error::CompletionFailure(from.to_string()))?;
            let completed = intermediate.with_cell(cell);
            items.push(((intermediate, completed), p));
        }
        let row = Arc::new(PreparedRow::from_probs(items));
        Ok(self
            .rows
            .write()
            .unwrap()
            .entry(from.clone())
            .or_insert(row)
            .clone())
    }

    /// Grows to a doubled diagram of weight `2n`; the trace has `2n + 1`
    /// entries and every even-index entry is D-symmetric.
    pub fn trace(&self, n: u64, seed: u64, index: u64) -> Result<GrowthTrace<Partition>> {
        let mut rng = stream_rng(seed, index);
        let mut current = Partition::empty();
        let mut diagrams = Vec::with_capacity(2 * n as usize + 1);
        diagrams.push(current.clone());
        for _ in 0..n {
            let row = self.row(&current)?;
            let (intermediate, completed) = row.pick(rng.next_u64()).clone();
            diagrams.push(intermediate);
            diagrams.push(completed.clone());
            current = completed;
        }
        Ok(GrowthTrace {
            family: format!("forced-sym {}", self.z_family.label()),
            seed,
            index,
            diagrams,
        })
    }

    pub fn traces(&self, n: u64, seed: u64, count: u64) -> Result<Vec<GrowthTrace<Partition>>> {
        (0..count).map(|i| self.trace(n, seed, i)).collect()
    }
}

/// Single forced-symmetrization trace, on stream 0.
pub fn sample_forced_dsym(alpha: AlphaParam, n: u64, seed: u64) -> Result<GrowthTrace<Partition>> {
    ForcedSampler::new(alpha).trace(n, seed, 0)
}

/// Counts of observed diagrams at one level.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EmpiricalTable<D: Diagram> {
    level: u64,
    counts: BTreeMap<D, u64>,
    total: u64,
}

impl<D: Diagram> EmpiricalTable<D> {
    pub fn new(level: u64) -> Self {
        EmpiricalTable {
            level,
            counts: BTreeMap::new(),
            total: 0,
        }
    }

    pub fn record(&mut self, d: D) -> Result<()> {
        self.record_many(d, 1)
    }

    pub fn record_many(&mut self, d: D, count: u64) -> Result<()> {
        if d.weight() != self.level {
            return Err(Error::LevelMismatch {
                left: d.weight(),
                right: self.level,
            });
        }
        *self.counts.entry(d).or_insert(0) += count;
        self.total += count;
        Ok(())
    }

    pub fn level(&self) -> u64 {
        self.level
    }

    pub fn total(&self) -> u64 {
        self.total
    }

    pub fn count(&self, d: &D) -> u64 {
        self.counts.get(d).copied().unwrap_or(0)
    }

    /// Observed diagrams and counts, in layer order.
    pub fn iter(&self) -> impl Iterator<Item = (&D, u64)> {
        self.counts.iter().rev().map(|(d, &c)| (d, c))
    }

    /// Observed frequency as an exact rational.
    pub fn frequency(&self, d: &D) -> Rational {
        if self.total == 0 {
            return Rational::zero();
        }
        Rational::new(self.count(d).into(), self.total.into())
    }
}

/// Tallies the final diagrams of the given traces.
pub fn empirical_distribution<D: Diagram>(
    traces: &[GrowthTrace<D>],
) -> Result<EmpiricalTable<D>> {
    let level = traces
        .first()
        .map_or(0, |t| t.final_diagram().weight());
    let mut table = EmpiricalTable::new(level);
    for t in traces {
        table.record(t.final_diagram().clone())?;
    }
    Ok(table)
}

/// Total variation distance, `(1/2) sum |frequency - exact|`, as an exact
/// rational.
pub fn tv_distance<D: Diagram>(
    empirical: &EmpiricalTable<D>,
    exact: &DistributionTable<D>,
) -> Result<Rational> {
    if empirical.level() != exact.level() {
        return Err(Error::LevelMismatch {
            left: empirical.level(),
            right: exact.level(),
        });
    }
    let mut acc = Rational::zero();
    for (d, p) in exact.iter() {
        let diff = empirical.frequency(d) - p;
        acc += if diff < Rational::zero() { -diff } else { diff };
    }
    Ok(acc / Rational::from_integer(2.into()))
}
