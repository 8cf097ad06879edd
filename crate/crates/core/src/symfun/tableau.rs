use std::collections::HashMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::cores::{content, Cell, Partition};
use crate::error::{Error, Result};

use super::tpoly::TPoly;

/// A semistandard tableau in French notation: `rows[0]` is the bottom row.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Tableau {
    rows: Vec<Vec<usize>>,
}

impl Tableau {
    /// Checks rows weakly increase, columns strictly increase upward and
    /// entries are positive.
    pub fn new(rows: Vec<Vec<usize>>) -> Result<Self> {
        let shape: Vec<usize> = rows.iter().map(Vec::len).collect();
        Partition::new(shape.clone())?;
        if shape.contains(&0) {
            return Err(Error::Domain("empty row inside a tableau".into()));
        }
        for (i, row) in rows.iter().enumerate() {
            if row.contains(&0) || row.windows(2).any(|p| p[0] > p[1]) {
                return Err(Error::Domain(format!("row {} is not weakly increasing", i + 1)));
            }
            if i > 0 && row.iter().zip(&rows[i - 1]).any(|(a, b)| a <= b) {
                return Err(Error::Domain(format!("column strictness fails in row {}", i + 1)));
            }
        }
        Ok(Tableau { rows })
    }

    /// The tableau with letter `i` in `chain[i] / chain[i-1]`.
    pub fn from_chain(chain: &[Partition]) -> Result<Self> {
        let top = chain.last().cloned().unwrap_or_default();
        let mut rows: Vec<Vec<usize>> = top.parts().iter().map(|&l| vec![0; l]).collect();
        for (x, p) in chain.windows(2).enumerate() {
            if !p[1].is_horizontal_strip_over(&p[0]) {
                return Err(Error::Domain(format!("{}/{} is not a horizontal strip", p[1], p[0])));
            }
            for (i, j) in p[1].skew_cells(&p[0]) {
                rows[i - 1][j - 1] = x + 1;
            }
        }
        Tableau::new(rows)
    }

    pub fn rows(&self) -> &[Vec<usize>] {
        &self.rows
    }

    pub fn shape(&self) -> Partition {
        Partition::new(self.rows.iter().map(Vec::len).collect()).expect("validated shape")
    }

    /// Multiplicity of each letter `1, 2, …, max`.
    pub fn weight(&self) -> Vec<usize> {
        let max = self.rows.iter().flatten().copied().max().unwrap_or(0);
        let mut w = vec![0; max];
        for &x in self.rows.iter().flatten() {
            w[x - 1] += 1;
        }
        w
    }

    fn cells(&self) -> Vec<(Cell, usize)> {
        self.rows
            .iter()
            .enumerate()
            .flat_map(|(i, row)| row.iter().enumerate().map(move |(j, &x)| ((i + 1, j + 1), x)))
            .collect()
    }

    /// Index vectors of the standard sequences, each begun at the rightmost
    /// remaining 1 and continued to the south-easternmost `x+1` above the
    /// current cell, else the south-easternmost `x+1` overall.
    pub fn index_vectors(&self) -> Result<Vec<Vec<usize>>> {
        let w = self.weight();
        if w.windows(2).any(|p| p[0] < p[1]) {
            return Err(Error::NonPartitionWeight(format!("{w:?}")));
        }
        let mut left = self.cells();
        let mut out = Vec::new();
        let pick = |left: &[(Cell, usize)], x: usize, above: Option<usize>| -> Option<usize> {
            let best = |filter: &dyn Fn(Cell) -> bool| {
                left.iter()
                    .enumerate()
                    .filter(|(_, (c, y))| *y == x && filter(*c))
                    .max_by_key(|(_, (c, _))| c.1)
                    .map(|(k, _)| k)
            };
            match above {
                Some(r) => best(&|c: Cell| c.0 > r).or_else(|| best(&|_| true)),
                None => best(&|_| true),
            }
        };
        while let Some(k) = pick(&left, 1, None) {
            let (mut cur, _) = left.remove(k);
            let mut index = vec![0usize];
            let mut x = 2;
            while let Some(k) = pick(&left, x, Some(cur.0)) {
                let (next, _) = left.remove(k);
                let last = *index.last().expect("nonempty");
                index.push(if content(next) > content(cur) { last } else { last + 1 });
                cur = next;
                x += 1;
            }
            out.push(index);
        }
        Ok(out)
    }

    pub fn cocharge(&self) -> Result<usize> {
        Ok(self.index_vectors()?.iter().flatten().sum())
    }
}

impl fmt::Display for Tableau {
    /// Top row first.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let width = self
            .rows
            .iter()
            .flatten()
            .max()
            .map_or(1, |m| m.to_string().len());
        for row in self.rows.iter().rev() {
            let line: Vec<String> = row.iter().map(|x| format!("{x:>width$}")).collect();
            writeln!(f, "{}", line.join(" "))?;
        }
        Ok(())
    }
}

/// All semistandard tableaux of shape `lam` and content `weight`
/// (a composition), via chains of horizontal strips.
pub fn ssyt(lam: &Partition, weight: &[usize]) -> Vec<Tableau> {
    if weight.iter().sum::<usize>() != lam.size() {
        return Vec::new();
    }
    let mut out = Vec::new();
    let mut chain = vec![Partition::empty()];
    extend_chain(lam, weight, &mut chain, &mut out);
    out.sort();
    out
}

fn extend_chain(lam: &Partition, weight: &[usize], chain: &mut Vec<Partition>, out: &mut Vec<Tableau>) {
    let x = chain.len() - 1;
    if x == weight.len() {
        if chain[x] == *lam {
            out.push(Tableau::from_chain(chain).expect("strips are horizontal"));
        }
        return;
    }
    let cur = chain[x].clone();
    for next in horizontal_strips(&cur, lam, weight[x]) {
        chain.push(next);
        extend_chain(lam, weight, chain, out);
        chain.pop();
    }
}

/// Partitions `ν ⊆ bound` with `ν / cur` a horizontal strip of size `k`.
fn horizontal_strips(cur: &Partition, bound: &Partition, k: usize) -> Vec<Partition> {
    fn go(i: usize, left: usize, cur: &Partition, bound: &Partition, rows: &mut Vec<usize>, out: &mut Vec<Partition>) {
        if i > bound.len() {
            if left == 0 {
                out.push(Partition::new(rows.clone()).expect("weakly decreasing"));
            }
            return;
        }
        let base = cur.row(i);
        let cap = bound.row(i).min(if i == 1 { usize::MAX } else { cur.row(i - 1) });
        for a in 0..=left.min(cap.saturating_sub(base)) {
            rows.push(base + a);
            go(i + 1, left - a, cur, bound, rows, out);
            rows.pop();
        }
    }
    let mut out = Vec::new();
    go(1, k, cur, bound, &mut Vec::new(), &mut out);
    out
}

/// `K_{λμ}(t) = Σ_{T ∈ SSYT(λ, μ)} t^{cocharge(T)}`; zero on a size mismatch.
pub fn kostka_foulkes(lam: &Partition, mu: &Partition) -> TPoly {
    ssyt(lam, mu.parts())
        .iter()
        .map(|t| TPoly::t_pow(t.cocharge().expect("partition weight") as i32))
        .fold(TPoly::zero(), |a, b| a + b)
}

/// The Kostka number `|SSYT(λ, μ)|`, counted by peeling horizontal strips
/// of the last letter with memoization.
pub fn kostka_number(lam: &Partition, mu: &[usize]) -> u64 {
    fn count(lam: &Partition, mu: &[usize], memo: &mut HashMap<(Partition, usize), u64>) -> u64 {
        let Some((&last, rest)) = mu.split_last() else {
            return u64::from(lam.is_empty());
        };
        if let Some(&c) = memo.get(&(lam.clone(), mu.len())) {
            return c;
        }
        let mut total = 0;
        for inner in removable_strips(lam, last) {
            total += count(&inner, rest, memo);
        }
        memo.insert((lam.clone(), mu.len()), total);
        total
    }
    if mu.iter().sum::<usize>() != lam.size() {
        return 0;
    }
    count(lam, mu, &mut HashMap::new())
}

/// Partitions `ν` with `λ / ν` a horizontal strip of size `k`.
fn removable_strips(lam: &Partition, k: usize) -> Vec<Partition> {
    fn go(i: usize, left: usize, lam: &Partition, rows: &mut Vec<usize>, out: &mut Vec<Partition>) {
        if i > lam.len() {
            if left == 0 {
                out.push(Partition::new(rows.clone()).expect("weakly decreasing"));
            }
            return;
        }
        let top = lam.row(i);
        let floor = lam.row(i + 1);
        for a in 0..=left.min(top - floor) {
            rows.push(top - a);
            go(i + 1, left - a, lam, rows, out);
            rows.pop();
        }
    }
    let mut out = Vec::new();
    go(1, k, lam, &mut Vec::new(), &mut out);
    out
}
