use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A cell `(row, column)`, both 1-indexed; row 1 is the bottom row.
pub type Cell = (usize, usize);

/// An integer partition with weakly decreasing positive parts.
///
/// Row `i` (from the bottom) has `parts[i-1]` cells. The derived `Ord` is
/// lexicographic on the part sequence.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(transparent)]
pub struct Partition(Vec<usize>);

impl<'de> Deserialize<'de> for Partition {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let parts = Vec::<usize>::deserialize(d)?;
        Partition::new(parts).map_err(serde::de::Error::custom)
    }
}

impl Partition {
    /// Validates that `parts` is weakly decreasing; trailing zeros are dropped.
    pub fn new(mut parts: Vec<usize>) -> Result<Self> {
        while parts.last() == Some(&0) {
            parts.pop();
        }
        if parts.windows(2).any(|p| p[0] < p[1]) {
            return Err(Error::InvalidPartition(format!(
                "{parts:?} is not weakly decreasing"
            )));
        }
        if parts.contains(&0) {
            return Err(Error::InvalidPartition(format!("{parts:?} has interior zeros")));
        }
        Ok(Partition(parts))
    }

    /// Sorts arbitrary nonnegative parts into a partition.
    pub fn from_unsorted(mut parts: Vec<usize>) -> Self {
        parts.retain(|&p| p > 0);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition(parts)
    }

    pub(crate) fn from_parts_unchecked(parts: Vec<usize>) -> Self {
        debug_assert!(Partition::new(parts.clone()).is_ok());
        Partition(parts)
    }

    pub fn empty() -> Self {
        Partition(Vec::new())
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    pub fn into_parts(self) -> Vec<usize> {
        self.0
    }

    /// Number of nonzero parts.
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn size(&self) -> usize {
        self.0.iter().sum()
    }

    /// Length of row `i` (1-indexed); zero beyond the last row.
    pub fn row(&self, i: usize) -> usize {
        if i == 0 {
            return usize::MAX;
        }
        self.0.get(i - 1).copied().unwrap_or(0)
    }

    /// Largest part, or zero.
    pub fn first(&self) -> usize {
        self.row(1)
    }

    /// Height of column `j` (1-indexed).
    pub fn column(&self, j: usize) -> usize {
        self.0.iter().take_while(|&&p| p >= j).count()
    }

    pub fn conjugate(&self) -> Self {
        Partition((1..=self.first()).map(|j| self.column(j)).collect())
    }

    pub fn contains_cell(&self, (i, j): Cell) -> bool {
        i >= 1 && j >= 1 && self.row(i) >= j
    }

    pub fn contains(&self, other: &Partition) -> bool {
        other.len() <= self.len() && other.0.iter().zip(&self.0).all(|(a, b)| a <= b)
    }

    /// Cells in reading order: bottom row first, left to right.
    pub fn cells(&self) -> impl Iterator<Item = Cell> + '_ {
        self.0
            .iter()
            .enumerate()
            .flat_map(|(i, &p)| (1..=p).map(move |j| (i + 1, j)))
    }

    /// Cells of `self / inner`.
    pub fn skew_cells(&self, inner: &Partition) -> Vec<Cell> {
        self.0
            .iter()
            .enumerate()
            .flat_map(|(i, &p)| (inner.row(i + 1) + 1..=p).map(move |j| (i + 1, j)))
            .collect()
    }

    /// Arm + leg + 1.
    pub fn hook(&self, (i, j): Cell) -> usize {
        (self.row(i) - j) + (self.column(j) - i) + 1
    }

    pub fn n_statistic(&self) -> usize {
        self.0.iter().enumerate().map(|(i, &p)| i * p).sum()
    }

    /// Multiset union: parts of both, sorted.
    pub fn union(&self, other: &Partition) -> Partition {
        let mut parts = self.0.clone();
        parts.extend_from_slice(&other.0);
        Partition::from_unsorted(parts)
    }

    /// The rectangle with `rows` rows of length `cols`.
    pub fn rectangle(rows: usize, cols: usize) -> Partition {
        if cols == 0 {
            return Partition::empty();
        }
        Partition(vec![cols; rows])
    }

    /// Dominance order on partitions of equal size; `None` when the sizes
    /// differ or the pair is incomparable.
    pub fn dominance_cmp(&self, other: &Partition) -> Option<Ordering> {
        if self.size() != other.size() {
            return None;
        }
        let k = self.len().max(other.len());
        let (mut a, mut b) = (0, 0);
        let (mut ge, mut le) = (true, true);
        for i in 1..=k {
            a += self.row(i);
            b += other.row(i);
            ge &= a >= b;
            le &= a <= b;
        }
        match (ge, le) {
            (true, true) => Some(Ordering::Equal),
            (true, false) => Some(Ordering::Greater),
            (false, true) => Some(Ordering::Less),
            (false, false) => None,
        }
    }

    /// `self ⊴ other`.
    pub fn dominated_by(&self, other: &Partition) -> bool {
        matches!(
            self.dominance_cmp(other),
            Some(Ordering::Less | Ordering::Equal)
        )
    }

    /// True iff `self / inner` has at most one cell per column.
    pub fn is_horizontal_strip_over(&self, inner: &Partition) -> bool {
        self.contains(inner) && (1..=self.len()).all(|i| inner.row(i) >= self.row(i + 1))
    }

    /// Addable corners, bottom row first.
    pub fn addable_corners(&self) -> Vec<Cell> {
        (1..=self.len() + 1)
            .filter(|&i| i == 1 || self.row(i - 1) > self.row(i))
            .map(|i| (i, self.row(i) + 1))
            .collect()
    }

    /// Removable corners, bottom row first.
    pub fn removable_corners(&self) -> Vec<Cell> {
        (1..=self.len())
            .filter(|&i| self.row(i) > self.row(i + 1))
            .map(|i| (i, self.row(i)))
            .collect()
    }

    /// Returns the partition with `cells` added; fails if the result is not
    /// a partition.
    pub fn with_cells(&self, cells: &[Cell]) -> Result<Partition> {
        let mut parts = self.0.clone();
        let mut sorted = cells.to_vec();
        sorted.sort_unstable_by_key(|&(i, j)| (j, i));
        for (i, j) in sorted {
            if parts.len() < i {
                parts.resize(i, 0);
            }
            if parts[i - 1] + 1 != j {
                return Err(Error::InvalidPartition(format!(
                    "cannot add cell ({i},{j}) to {self}"
                )));
            }
            parts[i - 1] = j;
        }
        Partition::new(parts)
    }

    /// Returns the partition with `cells` removed.
    pub fn without_cells(&self, cells: &[Cell]) -> Result<Partition> {
        let mut parts = self.0.clone();
        let mut sorted = cells.to_vec();
        sorted.sort_unstable_by_key(|&(i, j)| (std::cmp::Reverse(j), i));
        for (i, j) in sorted {
            if i > parts.len() || parts[i - 1] != j {
                return Err(Error::InvalidPartition(format!(
                    "cannot remove cell ({i},{j}) from {self}"
                )));
            }
            parts[i - 1] -= 1;
        }
        Partition::new(parts)
    }

    /// Compares in reverse-lexicographic enumeration order (larger first).
    pub fn revlex_cmp(&self, other: &Partition) -> Ordering {
        other.0.cmp(&self.0)
    }
}

/// Content `j - i` of a cell.
pub fn content((i, j): Cell) -> i64 {
    j as i64 - i as i64
}

/// Residue of a cell mod `n`.
pub fn residue(cell: Cell, n: usize) -> usize {
    content(cell).rem_euclid(n as i64) as usize
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (k, p) in self.0.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, ")")
    }
}

impl FromStr for Partition {
    type Err = Error;

    /// Parses `"3,1,1"`; the empty string, `"()"` or `"0"` give the empty
    /// partition.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim().trim_start_matches('(').trim_end_matches(')').trim();
        if s.is_empty() {
            return Ok(Partition::empty());
        }
        let parts = s
            .split(',')
            .map(|t| {
                t.trim()
                    .parse::<usize>()
                    .map_err(|_| Error::InvalidPartition(format!("bad part {t:?}")))
            })
            .collect::<Result<Vec<_>>>()?;
        Partition::new(parts)
    }
}

/// All partitions of `d` with every part at most `max_part`, in
/// reverse-lexicographic order.
pub fn partitions_bounded(d: usize, max_part: usize) -> Vec<Partition> {
    let mut out = Vec::new();
    let mut cur = Vec::new();
    fill(d, max_part.min(d), &mut cur, &mut out);
    out
}

/// All partitions of `d`, reverse-lexicographic.
pub fn partitions(d: usize) -> Vec<Partition> {
    partitions_bounded(d, d)
}

fn fill(rest: usize, cap: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
    if rest == 0 {
        out.push(Partition(cur.clone()));
        return;
    }
    for p in (1..=cap.min(rest)).rev() {
        cur.push(p);
        fill(rest - p, p, cur, out);
        cur.pop();
    }
}

/// All compositions of `d` with parts in `1..=max_part`, lexicographic.
pub fn compositions_bounded(d: usize, max_part: usize) -> Vec<Vec<usize>> {
    fn go(rest: usize, cap: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if rest == 0 {
            out.push(cur.clone());
            return;
        }
        for p in 1..=cap.min(rest) {
            cur.push(p);
            go(rest - p, cap, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(d, max_part, &mut Vec::new(), &mut out);
    out
}
