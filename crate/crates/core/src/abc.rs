//! Affine Bruhat countertableaux (ABCs), the factorization map `Θ`,
//! extensions and `n`-cocharge.
//!
//! An ABC is stored through its chain of cores `∅ = λ⁰ ⊂ ⋯ ⊂ λʳ`, where each
//! step `(λ^{x-1}, λ^x)` is a horizontal strong `(n-1-α_x)`-strip. The skew
//! countertableau `μ⁰ ⊂ ⋯ ⊂ μʳ`, its ribbon tiling and the extension are
//! derived from it.
//!
//! Rows are counted two ways below. Diagram rows (`(row, col)` cells) are
//! French, counted from the bottom starting at 1. The "row `i`" of a letter
//! is counted from the top: letter `i` has its main row at diagram row
//! `r + 1 - i`.

use std::collections::BTreeSet;
use std::fmt;

use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};

use crate::affine_weyl::{AffinePermutation, Word};
use crate::cores::{Cell, NCore, Partition, Ribbon};
use crate::error::{Error, Result};
use crate::strips::{horizontal_strong_strip, horizontal_strong_strips_from, HorizontalStrongStrip};

/// An affine Bruhat countertableau.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Abc {
    n: usize,
    weight: Vec<usize>,
    strips: Vec<HorizontalStrongStrip>,
}

/// A ribbon of the tiling, placed in countertableau coordinates.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TiledRibbon {
    pub letter: usize,
    pub ribbon: Ribbon,
    /// True when the ribbon lies outside the main row of its letter.
    pub offset: bool,
}

/// One cell of an extension.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct ExtCell {
    pub letter: usize,
    pub column: usize,
    pub residue: usize,
}

/// `ext(A)`: row `x` (from the top) holds only the letter `x`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Extension {
    pub n: usize,
    pub rows: Vec<Vec<ExtCell>>,
}

impl Extension {
    /// Column residues of the cells holding `letter`.
    pub fn residues(&self, letter: usize) -> BTreeSet<usize> {
        self.rows
            .get(letter.wrapping_sub(1))
            .map(|row| row.iter().map(|c| c.residue).collect())
            .unwrap_or_default()
    }
}

impl fmt::Display for Extension {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let width = self.rows.len().to_string().len();
        for row in &self.rows {
            let last = row.iter().map(|c| c.column).max().unwrap_or(0);
            let line: Vec<String> = (1..=last)
                .map(|col| match row.iter().find(|c| c.column == col) {
                    Some(c) => format!("{:>width$}", c.letter),
                    None => format!("{:>width$}", "."),
                })
                .collect();
            writeln!(f, "{}", line.join(" "))?;
        }
        Ok(())
    }
}

/// How a standard sequence picks its next residue on the circle.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum SuccessorRule {
    /// Start one step counter-clockwise; the current residue is chosen only
    /// when nothing else is available.
    #[default]
    Strict,
    /// Distance zero is allowed and wins.
    Inclusive,
}

impl Abc {
    /// Builds an ABC from its core chain, which must start at `∅` and have
    /// horizontal strong strips as steps.
    pub fn from_lambda_chain(chain: Vec<NCore>) -> Result<Self> {
        let first = chain
            .first()
            .ok_or_else(|| Error::Domain("empty chain".into()))?;
        let n = first.n();
        if !first.shape().is_empty() {
            return Err(Error::Domain(format!("chain starts at {first}, not ∅")));
        }
        let mut weight = Vec::with_capacity(chain.len() - 1);
        let mut strips = Vec::with_capacity(chain.len() - 1);
        for p in chain.windows(2) {
            let strip = horizontal_strong_strip(&p[0], &p[1]).ok_or_else(|| {
                Error::Domain(format!("({}, {}) is not a horizontal strong strip", p[0], p[1]))
            })?;
            let part = p[1].degree() - p[0].degree();
            if part == 0 {
                return Err(Error::Domain("weights have positive parts".into()));
            }
            weight.push(part);
            strips.push(strip);
        }
        Ok(Abc { n, weight, strips })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn weight(&self) -> &[usize] {
        &self.weight
    }

    /// Number of letters `r`.
    pub fn r(&self) -> usize {
        self.weight.len()
    }

    /// `λ⁰ = ∅ ⊂ ⋯ ⊂ λʳ`.
    pub fn lambda_chain(&self) -> Vec<NCore> {
        let mut out = vec![NCore::empty(self.n)];
        out.extend(self.strips.iter().map(|s| s.nu.clone()));
        out
    }

    /// The step `(λ^{i-1}, λ^i)` for `1 ≤ i ≤ r`.
    pub fn strip(&self, i: usize) -> &HorizontalStrongStrip {
        &self.strips[i - 1]
    }

    fn lam(&self, i: usize) -> NCore {
        if i == 0 {
            NCore::empty(self.n)
        } else {
            self.strips[i - 1].nu.clone()
        }
    }

    /// The shape `λʳ = μ⁰`.
    pub fn shape(&self) -> NCore {
        self.lam(self.r())
    }

    /// `μ⁰ ⊂ ⋯ ⊂ μʳ`.
    pub fn mu_chain(&self) -> Vec<Partition> {
        let r = self.r();
        (0..=r)
            .map(|p| {
                if p == 0 {
                    return self.shape().into_shape();
                }
                let mut parts: Vec<usize> = (1..p)
                    .map(|q| self.lam(r - q).shape().first() + self.n - 1)
                    .collect();
                parts.extend_from_slice(self.lam(r - p).core_translation().shape().parts());
                Partition::new(parts).expect("rows stay weakly decreasing")
            })
            .collect()
    }

    /// Letters by diagram row, bottom row first; `None` marks a cell of `μ⁰`.
    pub fn filling(&self) -> Vec<Vec<Option<usize>>> {
        let mu = self.mu_chain();
        let r = self.r();
        let top = &mu[r];
        let mut grid: Vec<Vec<Option<usize>>> =
            top.parts().iter().map(|&len| vec![None; len]).collect();
        for x in 1..=r {
            for (i, j) in mu[x].skew_cells(&mu[x - 1]) {
                grid[i - 1][j - 1] = Some(r - x + 1);
            }
        }
        grid
    }

    /// The ribbon tiling: for each letter `i`, every copy of every
    /// bottom-row ribbon of the chain from `λ^i` to `R(n-1, λ^{i-1})`,
    /// lifted by `r - i` rows.
    pub fn tiling(&self) -> Vec<TiledRibbon> {
        let r = self.r();
        let mut out = Vec::new();
        for i in 1..=r {
            let lift = r - i;
            let strip = self.strip(i);
            for p in strip.chain.windows(2) {
                for rib in p[1].ribbons_over(&p[0]) {
                    let cells: Vec<Cell> = rib.cells().iter().map(|&(a, b)| (a + lift, b)).collect();
                    let offset = rib.cells().iter().any(|c| c.0 != 1);
                    out.push(TiledRibbon {
                        letter: i,
                        ribbon: Ribbon::new(cells).expect("translates of ribbons are ribbons"),
                        offset,
                    });
                }
            }
        }
        out
    }

    /// `off(A)`: non-tail cells over all offset ribbons.
    pub fn off(&self) -> usize {
        self.tiling()
            .iter()
            .filter(|t| t.offset)
            .map(|t| t.ribbon.len() - 1)
            .sum()
    }

    /// `Θ(A)`: the cyclically decreasing words `v¹, …, vʳ` with
    /// `vⁱ = w_{λⁱ} w_{λ^{i-1}}^{-1}`; the product is `vʳ ⋯ v¹`.
    pub fn theta(&self) -> Vec<Word> {
        (1..=self.r())
            .map(|i| {
                let v = self.lam(i).to_affine().compose(&self.lam(i - 1).to_affine().inverse());
                v.cyclically_decreasing_word()
                    .expect("horizontal strong strips give cyclically decreasing factors")
            })
            .collect()
    }

    /// `vʳ ⋯ v¹` as an affine permutation; equals `w_{μ⁰}`.
    pub fn theta_product(&self) -> AffinePermutation {
        self.theta()
            .iter()
            .fold(AffinePermutation::identity(self.n), |acc, v| {
                AffinePermutation::from_word(v, self.n)
                    .expect("letters below n")
                    .compose(&acc)
            })
    }

    /// `ext(A)`, read off the countertableau and its tiling.
    pub fn extension(&self) -> Extension {
        let r = self.r();
        let n = self.n;
        let grid = self.filling();
        let tiling = self.tiling();
        let rows = (1..=r)
            .map(|x| {
                let drow = r + 1 - x;
                let mut cols: BTreeSet<usize> = grid[drow - 1]
                    .iter()
                    .enumerate()
                    .filter(|(_, l)| **l == Some(x))
                    .map(|(j, _)| j + 1)
                    .collect();
                // the appended ribbon
                let lo = self.lam(x - 1).shape().first() + n;
                let hi = self.lam(x).shape().first() + n;
                cols.extend(lo..=hi);
                cols.remove(&lo);
                for t in tiling.iter().filter(|t| t.letter == x) {
                    let (ti, tj) = t.ribbon.tail();
                    if ti == drow {
                        cols.remove(&tj);
                    }
                }
                cols.into_iter()
                    .map(|column| ExtCell {
                        letter: x,
                        column,
                        residue: (column - 1) % n,
                    })
                    .collect()
            })
            .collect();
        Extension { n, rows }
    }

    fn check_partition_weight(&self) -> Result<()> {
        if self.weight.windows(2).any(|p| p[0] < p[1]) {
            return Err(Error::NonPartitionWeight(format!("{:?}", self.weight)));
        }
        Ok(())
    }

    /// Index vectors of the successive standard sequences of `ext(A)`.
    pub fn index_vectors(&self) -> Result<Vec<Vec<usize>>> {
        self.index_vectors_with(SuccessorRule::Strict)
    }

    pub fn index_vectors_with(&self, rule: SuccessorRule) -> Result<Vec<Vec<usize>>> {
        self.check_partition_weight()?;
        let ext = self.extension();
        let n = self.n;
        let mut pool: Vec<Vec<ExtCell>> = ext.rows;
        let mut out = Vec::new();
        while let Some(start) = pool.first().and_then(|row| row.iter().max_by_key(|c| c.column)).copied() {
            take(&mut pool[0], start);
            let mut cur = start;
            let mut index = vec![0usize];
            for row in pool.iter_mut().skip(1) {
                if row.is_empty() {
                    break;
                }
                let next = successor(row, cur.residue, n, rule);
                take(row, next);
                let last = *index.last().expect("nonempty");
                index.push(if next.column > cur.column { last } else { last + 1 });
                cur = next;
            }
            out.push(index);
        }
        Ok(out)
    }

    /// `n`-cocharge: total index plus `off(A)`.
    pub fn n_cocharge(&self) -> Result<usize> {
        let idx: usize = self.index_vectors()?.iter().flatten().sum();
        Ok(idx + self.off())
    }
}

fn take(row: &mut Vec<ExtCell>, cell: ExtCell) {
    let k = row.iter().position(|c| *c == cell).expect("cell present");
    row.remove(k);
}

fn successor(row: &[ExtCell], i: usize, n: usize, rule: SuccessorRule) -> ExtCell {
    let dists: Box<dyn Iterator<Item = usize>> = match rule {
        SuccessorRule::Strict => Box::new(1..=n),
        SuccessorRule::Inclusive => Box::new(0..n),
    };
    for d in dists {
        let j = (i + n - d % n) % n;
        if let Some(c) = row.iter().find(|c| c.residue == j) {
            return *c;
        }
    }
    unreachable!("row is nonempty")
}

impl fmt::Display for Abc {
    /// The countertableau, top row first; `.` marks cells of the shape.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let width = self.r().to_string().len();
        for row in self.filling().iter().rev() {
            let line: Vec<String> = row
                .iter()
                .map(|l| match l {
                    Some(x) => format!("{x:>width$}"),
                    None => format!("{:>width$}", "."),
                })
                .collect();
            writeln!(f, "{}", line.join(" "))?;
        }
        Ok(())
    }
}

impl Serialize for Abc {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut st = s.serialize_struct("Abc", 4)?;
        st.serialize_field("n", &self.n)?;
        st.serialize_field("lambda_chain", &self.lambda_chain())?;
        st.serialize_field("weight", &self.weight)?;
        st.serialize_field("cocharge", &self.n_cocharge().ok())?;
        st.end()
    }
}

/// All ABCs of shape `lam` and weight `alpha`.
pub fn enumerate_abc(lam: &NCore, alpha: &[usize]) -> Result<Vec<Abc>> {
    let n = lam.n();
    if let Some(&a) = alpha.iter().find(|&&a| a >= n || a == 0) {
        return Err(Error::OutOfRange(format!("weight part {a} must lie in 1..{n}")));
    }
    if alpha.iter().sum::<usize>() != lam.degree() {
        return Ok(Vec::new());
    }
    let mut out = Vec::new();
    let mut strips = Vec::with_capacity(alpha.len());
    grow(lam, alpha, &NCore::empty(n), &mut strips, &mut out)?;
    Ok(out)
}

fn grow(
    lam: &NCore,
    alpha: &[usize],
    cur: &NCore,
    strips: &mut Vec<HorizontalStrongStrip>,
    out: &mut Vec<Abc>,
) -> Result<()> {
    let n = lam.n();
    let x = strips.len();
    if x == alpha.len() {
        if cur == lam {
            out.push(Abc {
                n,
                weight: alpha.to_vec(),
                strips: strips.clone(),
            });
        }
        return Ok(());
    }
    for s in horizontal_strong_strips_from(cur, n - 1 - alpha[x])? {
        if lam.shape().contains(s.nu.shape()) {
            strips.push(s);
            grow(lam, alpha, &strips[x].nu.clone(), strips, out)?;
            strips.pop();
        }
    }
    Ok(())
}

/// Weak Kostka–Foulkes polynomial `K^n_{λμ}(t)` as ascending coefficients:
/// the `n`-cocharge generating function of `ABC(𝔠(λ), μ)`.
pub fn weak_kostka_foulkes_coeffs(lam: &Partition, mu: &Partition, n: usize) -> Result<Vec<i64>> {
    let core = NCore::c_map(lam, n)?;
    let mut coeffs: Vec<i64> = Vec::new();
    for a in enumerate_abc(&core, mu.parts())? {
        let d = a.n_cocharge()?;
        if coeffs.len() <= d {
            coeffs.resize(d + 1, 0);
        }
        coeffs[d] += 1;
    }
    Ok(coeffs)
}
