//! Ordinary and strict partitions, their diagrams, and the doubling map.
//!
//! A [`Partition`] is a weakly decreasing sequence of positive parts; a
//! [`StrictPartition`] has strictly decreasing parts. Both are stored in
//! canonical form (no trailing zeros, the empty diagram is the empty
//! sequence), so equality and hashing are structural.
//!
//! Shifted diagrams use absolute coordinates: row `i` of a strict partition
//! occupies columns `i ..= i + part - 1`. With that convention the content
//! of a box, column minus row, is one function for both diagram kinds, and
//! every content in a shifted diagram is nonnegative.
//!
//! The doubling map [`StrictPartition::double`] sends a strict partition to
//! the ordinary partition with Frobenius coordinates `(parts | parts - 1)`.
//! Its image is the set of *D-symmetric* diagrams; [`Partition::undouble`]
//! inverts it.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// A box position inside a diagram, rows and columns counted from 1.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Cell {
    pub row: u32,
    pub col: u32,
}

impl Cell {
    pub fn new(row: u32, col: u32) -> Self {
        assert!(row >= 1 && col >= 1, "cells are 1-indexed");
        Cell { row, col }
    }

    /// Content of the box: column minus row.
    pub fn content(&self) -> i64 {
        i64::from(self.col) - i64::from(self.row)
    }
}

impl fmt::Display for Cell {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.row, self.col)
    }
}

/// Frobenius coordinates: arm and leg lengths along the main diagonal.
///
/// `arms[i]` is the number of boxes strictly right of diagonal box `i+1`,
/// `legs[i]` the number strictly below. Both lists are strictly decreasing
/// and of equal length.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Frobenius {
    arms: Vec<u32>,
    legs: Vec<u32>,
}

impl Frobenius {
    pub fn new(arms: Vec<u32>, legs: Vec<u32>) -> Self {
        assert_eq!(arms.len(), legs.len(), "arm and leg counts differ");
        assert!(
            arms.windows(2).all(|w| w[0] > w[1]),
            "arms must strictly decrease"
        );
        assert!(
            legs.windows(2).all(|w| w[0] > w[1]),
            "legs must strictly decrease"
        );
        Frobenius { arms, legs }
    }

    pub fn arms(&self) -> &[u32] {
        &self.arms
    }

    pub fn legs(&self) -> &[u32] {
        &self.legs
    }

    /// Diagonal length.
    pub fn rank(&self) -> usize {
        self.arms.len()
    }
}

/// An ordinary partition in canonical form.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Partition {
    parts: Vec<u32>,
}

impl Partition {
    /// Builds a partition, stripping trailing zeros.
    ///
    /// Panics if the sequence is not weakly decreasing; use [`FromStr`] for
    /// fallible construction from text.
    pub fn new(mut parts: Vec<u32>) -> Self {
        while parts.last() == Some(&0) {
            parts.pop();
        }
        assert!(
            parts.windows(2).all(|w| w[0] >= w[1]) && parts.last() != Some(&0),
            "parts must be weakly decreasing and positive"
        );
        Partition { parts }
    }

    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    /// Part at 1-indexed row `i`, zero beyond the last row.
    pub fn part(&self, i: usize) -> u32 {
        if i >= 1 {
            self.parts.get(i - 1).copied().unwrap_or(0)
        } else {
            0
        }
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn weight(&self) -> u64 {
        self.parts.iter().map(|&p| u64::from(p)).sum()
    }

    pub fn contains(&self, other: &Partition) -> bool {
        other
            .parts
            .iter()
            .enumerate()
            .all(|(i, &p)| self.part(i + 1) >= p)
    }

    pub fn conjugate(&self) -> Partition {
        let rows = self.parts.first().copied().unwrap_or(0);
        let parts = (1..=rows)
            .map(|j| self.parts.iter().take_while(|&&p| p >= j).count() as u32)
            .collect();
        Partition { parts }
    }

    /// Boxes whose addition leaves a valid partition, sorted by row.
    pub fn addable_cells(&self) -> Vec<Cell> {
        let mut out = Vec::with_capacity(self.len() + 1);
        for i in 1..=self.len() + 1 {
            let here = self.part(i);
            if i == 1 || here < self.part(i - 1) {
                out.push(Cell::new(i as u32, here + 1));
            }
        }
        out
    }

    /// Boxes whose removal leaves a valid partition, sorted by row.
    pub fn removable_cells(&self) -> Vec<Cell> {
        let mut out = Vec::new();
        for i in 1..=self.len() {
            if self.part(i) > self.part(i + 1) {
                out.push(Cell::new(i as u32, self.part(i)));
            }
        }
        out
    }

    /// The partition with one extra box at `cell`.
    ///
    /// Panics unless `cell` is addable.
    pub fn with_cell(&self, cell: Cell) -> Partition {
        let i = cell.row as usize;
        assert!(
            i <= self.len() + 1 && cell.col == self.part(i) + 1,
            "cell {cell} is not addable to {self}"
        );
        let mut parts = self.parts.clone();
        if i == parts.len() + 1 {
            parts.push(1);
        } else {
            parts[i - 1] += 1;
        }
        Partition::new(parts)
    }

    /// The unique box of `self` not in `smaller`, when `self` covers it.
    pub fn diff_cell(&self, smaller: &Partition) -> Option<Cell> {
        if self.weight() != smaller.weight() + 1 || !self.contains(smaller) {
            return None;
        }
        (1..=self.len())
            .find(|&i| self.part(i) != smaller.part(i))
            .map(|i| Cell::new(i as u32, self.part(i)))
    }

    /// Contents of all boxes, row by row.
    pub fn contents(&self) -> Vec<i64> {
        let mut out = Vec::with_capacity(self.weight() as usize);
        for (i, &p) in self.parts.iter().enumerate() {
            let row = (i + 1) as i64;
            out.extend((1..=i64::from(p)).map(|j| j - row));
        }
        out
    }

    /// Hook length of every box: arm + leg + 1.
    pub fn hook_lengths(&self) -> Vec<u64> {
        let conj = self.conjugate();
        let mut out = Vec::with_capacity(self.weight() as usize);
        for (i, &p) in self.parts.iter().enumerate() {
            let row = (i + 1) as u64;
            for j in 1..=p {
                let arm = u64::from(p) - u64::from(j);
                let leg = u64::from(conj.part(j as usize)) - row;
                out.push(arm + leg + 1);
            }
        }
        out
    }

    pub fn to_frobenius(&self) -> Frobenius {
        let conj = self.conjugate();
        let d = (1..=self.len())
            .take_while(|&i| self.part(i) >= i as u32)
            .count();
        let arms = (1..=d).map(|i| self.part(i) - i as u32).collect();
        let legs = (1..=d).map(|i| conj.part(i) - i as u32).collect();
        Frobenius::new(arms, legs)
    }

    pub fn from_frobenius(coords: &Frobenius) -> Partition {
        let d = coords.rank();
        let mut parts: Vec<u32> = (1..=d)
            .map(|i| coords.arms[i - 1] + i as u32)
            .collect();
        let depth = coords.legs.first().map_or(0, |&b| b as usize + 1);
        for i in d + 1..=depth {
            let row = (1..=d)
                .filter(|&j| coords.legs[j - 1] as usize + j >= i)
                .count() as u32;
            parts.push(row);
        }
        Partition::new(parts)
    }

    /// Whether this diagram is the double of a strict partition.
    pub fn is_d_symmetric(&self) -> bool {
        let f = self.to_frobenius();
        f.arms
            .iter()
            .zip(&f.legs)
            .all(|(&a, &b)| a >= 1 && b == a - 1)
    }

    /// Inverts the doubling map.
    pub fn undouble(&self) -> Result<StrictPartition> {
        if !self.is_d_symmetric() {
            return Err(Error::NotSymmetric(self.to_string()));
        }
        Ok(StrictPartition::new(self.to_frobenius().arms))
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for p in &self.parts {
            if !first {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
            first = false;
        }
        Ok(())
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Partition({self})")
    }
}

fn parse_parts(s: &str) -> Result<Vec<u32>> {
    let t = s.trim();
    if t.is_empty() {
        return Ok(Vec::new());
    }
    t.split(',')
        .map(|piece| {
            let p: u32 = piece
                .trim()
                .parse()
                .map_err(|_| Error::Parse(format!("invalid part: {piece:?}")))?;
            if p == 0 {
                return Err(Error::Parse("parts must be positive".into()));
            }
            Ok(p)
        })
        .collect()
}

impl FromStr for Partition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let parts = parse_parts(s)?;
        if !parts.windows(2).all(|w| w[0] >= w[1]) {
            return Err(Error::Parse(format!(
                "parts must be weakly decreasing: {s:?}"
            )));
        }
        Ok(Partition { parts })
    }
}

/// A strict partition (all parts distinct) in canonical form.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct StrictPartition {
    parts: Vec<u32>,
}

impl StrictPartition {
    /// Builds a strict partition; panics unless parts strictly decrease.
    pub fn new(parts: Vec<u32>) -> Self {
        assert!(
            parts.windows(2).all(|w| w[0] > w[1]) && parts.last() != Some(&0),
            "parts must be strictly decreasing and positive"
        );
        StrictPartition { parts }
    }

    pub fn empty() -> Self {
        StrictPartition { parts: Vec::new() }
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    pub fn part(&self, i: usize) -> u32 {
        if i >= 1 {
            self.parts.get(i - 1).copied().unwrap_or(0)
        } else {
            0
        }
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn weight(&self) -> u64 {
        self.parts.iter().map(|&p| u64::from(p)).sum()
    }

    /// Boxes addable to the shifted diagram, in absolute coordinates,
    /// sorted by row. Row `i` ends at column `i + part - 1`; a new row of
    /// length one sits at `(len+1, len+1)` and is valid only when the last
    /// part exceeds one.
    pub fn shifted_addable_cells(&self) -> Vec<Cell> {
        let l = self.len();
        let mut out = Vec::new();
        for i in 1..=l {
            if i == 1 || self.part(i - 1) > self.part(i) + 1 {
                out.push(Cell::new(i as u32, i as u32 + self.part(i)));
            }
        }
        if l == 0 || self.part(l) > 1 {
            out.push(Cell::new(l as u32 + 1, l as u32 + 1));
        }
        out
    }

    /// Boxes removable from the shifted diagram, sorted by row. The last
    /// row is always removable; an inner row only when shrinking it keeps
    /// the parts distinct.
    pub fn shifted_removable_cells(&self) -> Vec<Cell> {
        let l = self.len();
        let mut out = Vec::new();
        for i in 1..=l {
            if i == l || self.part(i) > self.part(i + 1) + 1 {
                out.push(Cell::new(i as u32, i as u32 + self.part(i) - 1));
            }
        }
        out
    }

    /// The strict partition with row `cell.row` one box longer.
    ///
    /// Panics unless `cell` is one of [`Self::shifted_addable_cells`].
    pub fn with_cell(&self, cell: Cell) -> StrictPartition {
        assert!(
            self.shifted_addable_cells().contains(&cell),
            "cell {cell} is not addable to shifted {self}"
        );
        let i = cell.row as usize;
        let mut parts = self.parts.clone();
        if i == parts.len() + 1 {
            parts.push(1);
        } else {
            parts[i - 1] += 1;
        }
        StrictPartition::new(parts)
    }

    /// Contents of the shifted diagram: row `i` contributes `0 ..= part-1`.
    pub fn contents(&self) -> Vec<i64> {
        let mut out = Vec::with_capacity(self.weight() as usize);
        for &p in &self.parts {
            out.extend(0..i64::from(p));
        }
        out
    }

    /// The ordinary partition with Frobenius coordinates `(parts | parts-1)`.
    pub fn double(&self) -> Partition {
        if self.is_empty() {
            return Partition::empty();
        }
        let arms = self.parts.clone();
        let legs = self.parts.iter().map(|&p| p - 1).collect();
        Partition::from_frobenius(&Frobenius::new(arms, legs))
    }
}

impl fmt::Display for StrictPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for p in &self.parts {
            if !first {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
            first = false;
        }
        Ok(())
    }
}

impl fmt::Debug for StrictPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "StrictPartition({self})")
    }
}

impl FromStr for StrictPartition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let parts = parse_parts(s)?;
        if !parts.windows(2).all(|w| w[0] > w[1]) {
            return Err(Error::Parse(format!(
                "parts must be strictly decreasing: {s:?}"
            )));
        }
        Ok(StrictPartition { parts })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Partition {
        s.parse().unwrap()
    }

    fn sp(s: &str) -> StrictPartition {
        s.parse().unwrap()
    }

    #[test]
    fn contents_of_single_cells() {
        assert_eq!(Cell::new(1, 1).content(), 0);
        assert_eq!(Cell::new(3, 1).content(), -2);
        assert_eq!(Cell::new(2, 4).content(), 2);
    }

    #[test]
    fn addable_cells_match_known_diagrams() {
        assert_eq!(Partition::empty().addable_cells(), vec![Cell::new(1, 1)]);
        assert_eq!(
            p("4,4,1").addable_cells(),
            vec![Cell::new(1, 5), Cell::new(3, 2), Cell::new(4, 1)]
        );
        assert_eq!(p("2").addable_cells(), vec![Cell::new(1, 3), Cell::new(2, 1)]);
    }

    #[test]
    fn removable_cells_match_known_diagrams() {
        assert!(Partition::empty().removable_cells().is_empty());
        assert_eq!(
            p("4,4,1").removable_cells(),
            vec![Cell::new(2, 4), Cell::new(3, 1)]
        );
        assert_eq!(p("1").removable_cells(), vec![Cell::new(1, 1)]);
    }

    #[test]
    fn one_more_addable_than_removable() {
        for s in ["", "1", "4,4,1", "5,3,2,2,1", "7"] {
            let q = p(s);
            assert_eq!(q.addable_cells().len(), q.removable_cells().len() + 1);
        }
    }

    #[test]
    fn shifted_cells_match_known_diagrams() {
        let lam = sp("5,3,2");
        let removable: Vec<i64> = lam
            .shifted_removable_cells()
            .iter()
            .map(Cell::content)
            .collect();
        assert_eq!(removable, vec![4, 1]);
        let addable: Vec<i64> = lam
            .shifted_addable_cells()
            .iter()
            .map(Cell::content)
            .collect();
        assert_eq!(addable, vec![5, 3, 0]);

        // (1): the new-row box would duplicate the part 1.
        assert_eq!(
            sp("1").shifted_addable_cells(),
            vec![Cell::new(1, 2)]
        );
        assert_eq!(
            sp("2").shifted_addable_cells(),
            vec![Cell::new(1, 3), Cell::new(2, 2)]
        );
    }

    #[test]
    fn shifted_contents_are_nonnegative() {
        for s in ["", "1", "2", "5,3,2", "4,3,2,1"] {
            let lam = sp(s);
            for c in lam
                .shifted_addable_cells()
                .iter()
                .chain(lam.shifted_removable_cells().iter())
            {
                assert!(c.content() >= 0, "{lam}: {c}");
            }
        }
    }

    #[test]
    fn frobenius_round_trips() {
        let q = p("5,4,2,1");
        let f = q.to_frobenius();
        assert_eq!(f.arms(), &[4, 2]);
        assert_eq!(f.legs(), &[3, 1]);
        assert_eq!(Partition::from_frobenius(&f), q);

        assert_eq!(Partition::empty().to_frobenius().rank(), 0);
        let f31 = p("3,1").to_frobenius();
        assert_eq!((f31.arms(), f31.legs()), (&[2u32][..], &[1u32][..]));
    }

    #[test]
    fn doubling_examples() {
        assert_eq!(sp("4,2").double(), p("5,4,2,1"));
        assert_eq!(StrictPartition::empty().double(), Partition::empty());
        assert_eq!(sp("2").double(), p("3,1"));
        assert_eq!(sp("1").double(), p("2"));
        assert_eq!(sp("2,1").double(), p("3,3"));
        assert_eq!(sp("3").double(), p("4,1,1"));
    }

    #[test]
    fn undoubling_examples() {
        assert_eq!(p("5,4,2,1").undouble().unwrap(), sp("4,2"));
        assert_eq!(p("3,1").undouble().unwrap(), sp("2"));
        assert!(matches!(
            p("3,2,1").undouble(),
            Err(Error::NotSymmetric(_))
        ));
        assert!(p("1,1").undouble().is_err());
        assert_eq!(Partition::empty().undouble().unwrap(), StrictPartition::empty());
    }

    #[test]
    fn hook_lengths_by_hand() {
        let mut h = p("2,1").hook_lengths();
        h.sort_unstable();
        assert_eq!(h, vec![1, 1, 3]);
        let mut h = p("2,2").hook_lengths();
        h.sort_unstable();
        assert_eq!(h, vec![1, 2, 2, 3]);
        assert_eq!(p("1").hook_lengths(), vec![1]);
    }

    #[test]
    fn doubled_content_multiset() {
        // Each part contributes the content interval [-(part-1), part].
        for s in ["1", "2", "4,2", "5,3,2", "6,4,3,1"] {
            let lam = sp(s);
            let mut expected: Vec<i64> = lam
                .parts()
                .iter()
                .flat_map(|&p| -(i64::from(p) - 1)..=i64::from(p))
                .collect();
            expected.sort_unstable();
            let mut actual = lam.double().contents();
            actual.sort_unstable();
            assert_eq!(actual, expected, "for {lam}");
            assert_eq!(lam.double().weight(), 2 * lam.weight());
        }
    }

    #[test]
    fn parsing_and_display() {
        assert_eq!(p("4,4,1").to_string(), "4,4,1");
        assert_eq!(Partition::empty().to_string(), "");
        assert_eq!(p(""), Partition::empty());
        assert!("4,5".parse::<Partition>().is_err());
        assert!("3,3".parse::<StrictPartition>().is_err());
        assert!("0".parse::<Partition>().is_err());
        assert!("x".parse::<Partition>().is_err());
    }

    #[test]
    fn diff_cell_finds_the_added_box() {
        assert_eq!(p("4,4,1").diff_cell(&p("4,4")), Some(Cell::new(3, 1)));
        assert_eq!(p("4,4,1").diff_cell(&p("4,3,1")), Some(Cell::new(2, 4)));
        assert_eq!(p("4,4,1").diff_cell(&p("4,4,1")), None);
        assert_eq!(p("2").diff_cell(&p("1,1")), None);
    }
}
