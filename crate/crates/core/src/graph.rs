//! The Young and Schur graphs: layers, covering relations, path counts,
//! and the structure induced by the doubling map.
//!
//! Vertices at level `n` are the (strict) partitions of weight `n`; edges
//! add one box. `dim` counts monotone paths from the empty diagram: the
//! closed hook-length formula for ordinary diagrams, the product formula
//! for strict ones. Tests validate both against the path-count recurrence.
//!
//! A path in the Young graph is a *D-path* when every even-level diagram
//! it visits is D-symmetric (the double of a strict partition). Between
//! the doubles of a covering pair of strict partitions sit either one or
//! two ordinary diagrams — two exactly when the number of rows stays the
//! same — and the number of D-paths to a doubled diagram has the closed
//! form `2^(weight - rows) * g`.

use std::fmt::{Debug, Display};
use std::hash::Hash;
use std::str::FromStr;

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::partition::{Cell, Partition, StrictPartition};
use crate::rational::{factorial, Rational};

/// Which of the two graded graphs a diagram lives in.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum DiagramKind {
    Ordinary,
    Strict,
}

impl DiagramKind {
    pub fn as_str(self) -> &'static str {
        match self {
            DiagramKind::Ordinary => "ordinary",
            DiagramKind::Strict => "strict",
        }
    }
}

/// Default level cap for ordinary layers (1575 vertices at the cap).
pub const DEFAULT_ORDINARY_CAP: u64 = 24;
/// Default level cap for strict layers.
pub const DEFAULT_STRICT_CAP: u64 = 40;

/// Common surface of the two vertex types, enough to drive enumeration,
/// kernels, and sampling generically.
pub trait Diagram:
    Clone + Eq + Ord + Hash + Debug + Display + FromStr<Err = Error> + Send + Sync + 'static
{
    const KIND: DiagramKind;

    fn empty() -> Self;
    fn weight(&self) -> u64;
    /// Number of rows.
    fn rows(&self) -> usize;
    /// All diagrams of weight `n`, in descending lexicographic order.
    fn layer(n: u64) -> Vec<Self>;
    fn up_covers(&self) -> Vec<Self>;
    fn down_covers(&self) -> Vec<Self>;
    /// Whether `self` is `smaller` plus one box.
    fn covers(&self, smaller: &Self) -> bool {
        self.added_cell(smaller).is_some()
    }
    /// The box of `self` missing from `smaller`, when `self` covers it.
    fn added_cell(&self, smaller: &Self) -> Option<Cell>;
    /// Number of monotone paths from the empty diagram.
    fn dim(&self) -> BigUint;
}

fn descending_partitions(n: u64, strict: bool) -> Vec<Vec<u32>> {
    fn rec(remaining: u64, max: u64, strict: bool, prefix: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if remaining == 0 {
            out.push(prefix.clone());
            return;
        }
        let hi = remaining.min(max);
        for k in (1..=hi).rev() {
            prefix.push(k as u32);
            rec(remaining - k, if strict { k - 1 } else { k }, strict, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    rec(n, n, strict, &mut Vec::new(), &mut out);
    out
}

impl Diagram for Partition {
    const KIND: DiagramKind = DiagramKind::Ordinary;

    fn empty() -> Self {
        Partition::empty()
    }

    fn weight(&self) -> u64 {
        Partition::weight(self)
    }

    fn rows(&self) -> usize {
        self.len()
    }

    fn layer(n: u64) -> Vec<Self> {
        descending_partitions(n, false)
            .into_iter()
            .map(Partition::new)
            .collect()
    }

    fn up_covers(&self) -> Vec<Self> {
        self.addable_cells()
            .into_iter()
            .map(|c| self.with_cell(c))
            .collect()
    }

    fn down_covers(&self) -> Vec<Self> {
        self.removable_cells()
            .into_iter()
            .map(|c| {
                let mut parts = self.parts().to_vec();
                parts[c.row as usize - 1] -= 1;
                Partition::new(parts)
            })
            .collect()
    }

    fn added_cell(&self, smaller: &Self) -> Option<Cell> {
        self.diff_cell(smaller)
    }

    fn dim(&self) -> BigUint {
        dim_f(self)
    }
}

impl Diagram for StrictPartition {
    const KIND: DiagramKind = DiagramKind::Strict;

    fn empty() -> Self {
        StrictPartition::empty()
    }

    fn weight(&self) -> u64 {
        StrictPartition::weight(self)
    }

    fn rows(&self) -> usize {
        self.len()
    }

    fn layer(n: u64) -> Vec<Self> {
        descending_partitions(n, true)
            .into_iter()
            .map(StrictPartition::new)
            .collect()
    }

    fn up_covers(&self) -> Vec<Self> {
        self.shifted_addable_cells()
            .into_iter()
            .map(|c| self.with_cell(c))
            .collect()
    }

    fn down_covers(&self) -> Vec<Self> {
        self.shifted_removable_cells()
            .into_iter()
            .map(|c| {
                let mut parts = self.parts().to_vec();
                parts[c.row as usize - 1] -= 1;
                if parts.last() == Some(&0) {
                    parts.pop();
                }
                StrictPartition::new(parts)
            })
            .collect()
    }

    fn added_cell(&self, smaller: &Self) -> Option<Cell> {
        if self.weight() != smaller.weight() + 1 {
            return None;
        }
        let rowwise = (1..=self.len()).all(|i| self.part(i) >= smaller.part(i));
        if !rowwise {
            return None;
        }
        (1..=self.len())
            .find(|&i| self.part(i) != smaller.part(i))
            .map(|i| Cell::new(i as u32, i as u32 + self.part(i) - 1))
    }

    fn dim(&self) -> BigUint {
        dim_g(self)
    }
}

/// A full level of one of the graphs.
#[derive(Debug, Clone)]
pub struct GraphLayer<D: Diagram> {
    pub level: u64,
    pub vertices: Vec<D>,
}

/// Enumerates level `n`, refusing to go above `cap`.
pub fn enumerate_layer<D: Diagram>(n: u64, cap: u64) -> Result<GraphLayer<D>> {
    if n > cap {
        return Err(Error::CapExceeded { n, cap });
    }
    Ok(GraphLayer {
        level: n,
        vertices: D::layer(n),
    })
}

/// Number of paths from the empty diagram to `p` in the Young graph,
/// by the hook-length formula.
pub fn dim_f(p: &Partition) -> BigUint {
    let hooks = p
        .hook_lengths()
        .into_iter()
        .fold(BigUint::one(), |acc, h| acc * h);
    let (q, r) = factorial(p.weight()).div_rem(&hooks);
    debug_assert!(r.is_zero(), "hook product must divide the factorial");
    q
}

/// Number of paths from the empty diagram to `lam` in the Schur graph,
/// by the product formula. Evaluated in exact rationals and checked to be
/// integral.
pub fn dim_g(lam: &StrictPartition) -> BigUint {
    let mut val = Rational::from_integer(factorial(lam.weight()).into());
    for &p in lam.parts() {
        val /= Rational::from_integer(factorial(u64::from(p)).into());
    }
    let parts = lam.parts();
    for i in 0..parts.len() {
        for j in i + 1..parts.len() {
            let (a, b) = (i64::from(parts[i]), i64::from(parts[j]));
            val *= Rational::new((a - b).into(), (a + b).into());
        }
    }
    assert!(val.is_integer(), "product formula must be integral");
    val.to_integer()
        .to_biguint()
        .expect("path count is nonnegative")
}

/// The ordinary diagrams strictly between the doubles of a strict covering
/// pair: one box above `double(mu)`, contained in `double(lam)`. There are
/// two of them when `lam` and `mu` have the same number of rows, one
/// otherwise.
pub fn intermediates(mu: &StrictPartition, lam: &StrictPartition) -> Result<Vec<Partition>> {
    if !lam.covers(mu) {
        return Err(Error::NotCover {
            smaller: mu.to_string(),
            larger: lam.to_string(),
        });
    }
    let dmu = mu.double();
    let dlam = lam.double();
    let out: Vec<Partition> = dmu
        .up_covers()
        .into_iter()
        .filter(|r| dlam.contains(r))
        .collect();
    debug_assert_eq!(out.len(), if lam.len() == mu.len() { 2 } else { 1 });
    Ok(out)
}

/// Closed-form count of D-paths from the empty diagram to `double(lam)`:
/// `2^(weight - rows) * g`.
pub fn d_path_count(lam: &StrictPartition) -> BigUint {
    let shift = lam.weight() - lam.len() as u64;
    dim_g(lam) << shift
}

/// Cap for the exhaustive D-path walker; path counts grow factorially.
pub const D_PATH_WALKER_CAP: u64 = 10;

/// Counts D-paths by exhaustive depth-first search, checking D-symmetry at
/// every even level. Independent of [`d_path_count`]; capped at
/// [`D_PATH_WALKER_CAP`].
pub fn brute_force_d_path_count(lam: &StrictPartition) -> Result<BigUint> {
    if lam.weight() > D_PATH_WALKER_CAP {
        return Err(Error::CapExceeded {
            n: lam.weight(),
            cap: D_PATH_WALKER_CAP,
        });
    }
    fn walk(cur: &Partition, target: &Partition) -> BigUint {
        if cur == target {
            return BigUint::one();
        }
        let mut total = BigUint::zero();
        for next in cur.up_covers() {
            if !target.contains(&next) {
                continue;
            }
            if next.weight() % 2 == 0 && !next.is_d_symmetric() {
                continue;
            }
            total += walk(&next, target);
        }
        total
    }
    Ok(walk(&Partition::empty(), &lam.double()))
}

/// The unique addable box that makes `p` D-symmetric again, for a diagram
/// one box above a D-symmetric one.
pub fn forced_completion(p: &Partition) -> Result<Cell> {
    let candidates: Vec<Cell> = p
        .addable_cells()
        .into_iter()
        .filter(|&c| p.with_cell(c).is_d_symmetric())
        .collect();
    debug_assert!(
        candidates.len() <= 1,
        "symmetrizing completion of {p} is not unique"
    );
    candidates
        .first()
        .copied()
        .ok_or_else(|| Error::NoCompletion(p.to_string()))
}
