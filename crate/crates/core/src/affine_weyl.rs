//! The affine symmetric group in window notation.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A word in the simple reflections `s_0, …, s_{n-1}`, read left to right.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Word(Vec<usize>);

impl Word {
    pub fn new(letters: Vec<usize>) -> Self {
        Word(letters)
    }

    pub fn empty() -> Self {
        Word(Vec::new())
    }

    pub fn letters(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn into_letters(self) -> Vec<usize> {
        self.0
    }

    /// Checks every letter against the modulus.
    pub fn validate(&self, n: usize) -> Result<()> {
        check_modulus(n)?;
        match self.0.iter().find(|&&a| a >= n) {
            Some(&letter) => Err(Error::InvalidLetter { letter, n }),
            None => Ok(()),
        }
    }

    /// Bitmask of the residues occurring in the word.
    pub fn support(&self) -> u64 {
        self.0.iter().fold(0, |acc, &a| acc | (1u64 << a))
    }
}

impl From<Vec<usize>> for Word {
    fn from(v: Vec<usize>) -> Self {
        Word(v)
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (k, a) in self.0.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{a}")?;
        }
        write!(f, "]")
    }
}

pub(crate) fn check_modulus(n: usize) -> Result<()> {
    if !(2..=63).contains(&n) {
        Err(Error::InvalidModulus(n))
    } else {
        Ok(())
    }
}

/// An element of the affine symmetric group, stored as its window
/// `[w(1), …, w(n)]`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct AffinePermutation {
    n: usize,
    window: Vec<i64>,
}

impl AffinePermutation {
    pub fn identity(n: usize) -> Self {
        AffinePermutation {
            n,
            window: (1..=n as i64).collect(),
        }
    }

    /// Builds an element from its window, checking the defining invariants.
    pub fn from_window(n: usize, window: Vec<i64>) -> Result<Self> {
        check_modulus(n)?;
        if window.len() != n {
            return Err(Error::InvalidWindow(format!(
                "expected {n} entries, got {}",
                window.len()
            )));
        }
        let ni = n as i64;
        let mut seen = vec![false; n];
        for &v in &window {
            let r = v.rem_euclid(ni) as usize;
            if std::mem::replace(&mut seen[r], true) {
                return Err(Error::InvalidWindow(format!(
                    "entries repeat residue {r} mod {n}"
                )));
            }
        }
        let sum: i64 = window.iter().sum();
        if sum != ni * (ni + 1) / 2 {
            return Err(Error::InvalidWindow(format!(
                "entries sum to {sum}, expected {}",
                ni * (ni + 1) / 2
            )));
        }
        Ok(AffinePermutation { n, window })
    }

    /// The product `s_{i_1} ⋯ s_{i_l}`.
    pub fn from_word(word: &Word, n: usize) -> Result<Self> {
        word.validate(n)?;
        let mut w = Self::identity(n);
        for &a in word.letters().iter().rev() {
            w = w.left_mul_simple(a);
        }
        Ok(w)
    }

    pub fn simple(i: usize, n: usize) -> Result<Self> {
        Self::from_word(&Word(vec![i]), n)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn window(&self) -> &[i64] {
        &self.window
    }

    /// `w(i)` for any integer `i`.
    pub fn apply(&self, i: i64) -> i64 {
        let ni = self.n as i64;
        let q = (i - 1).div_euclid(ni);
        let r = (i - 1).rem_euclid(ni) as usize;
        self.window[r] + q * ni
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &Self) -> Self {
        debug_assert_eq!(self.n, other.n);
        AffinePermutation {
            n: self.n,
            window: other.window.iter().map(|&v| self.apply(v)).collect(),
        }
    }

    pub fn inverse(&self) -> Self {
        let ni = self.n as i64;
        let mut window = vec![0; self.n];
        for (k, &v) in self.window.iter().enumerate() {
            let r = (v - 1).rem_euclid(ni);
            let q = (v - 1).div_euclid(ni);
            window[r as usize] = k as i64 + 1 - q * ni;
        }
        AffinePermutation { n: self.n, window }
    }

    /// `s_i · w`: swaps the values `i + rn` and `i + 1 + rn`.
    pub fn left_mul_simple(&self, i: usize) -> Self {
        let ni = self.n as i64;
        let i = i as i64;
        let window = self
            .window
            .iter()
            .map(|&v| {
                let r = v.rem_euclid(ni);
                if r == i {
                    v + 1
                } else if r == (i + 1) % ni {
                    v - 1
                } else {
                    v
                }
            })
            .collect();
        AffinePermutation { n: self.n, window }
    }

    /// `w · s_i`: swaps the positions `i + rn` and `i + 1 + rn`.
    pub fn right_mul_simple(&self, i: usize) -> Self {
        let n = self.n;
        let ni = n as i64;
        let mut window = self.window.clone();
        if i == 0 {
            // positions 0 and 1: w(0) = w(n) - n
            let a = window[0];
            window[0] = window[n - 1] - ni;
            window[n - 1] = a + ni;
        } else {
            window.swap(i - 1, i);
        }
        AffinePermutation { n, window }
    }

    /// Coxeter length via the affine inversion count.
    pub fn length(&self) -> usize {
        let ni = self.n as i64;
        let mut total = 0;
        for a in 0..self.n {
            for b in (a + 1)..self.n {
                total += (self.window[b] - self.window[a]).div_euclid(ni).unsigned_abs() as usize;
            }
        }
        total
    }

    /// True iff the window is increasing (minimal coset representative
    /// for the finite parabolic subgroup acting on the right).
    pub fn is_grassmannian(&self) -> bool {
        self.window.windows(2).all(|p| p[0] < p[1])
    }

    /// Residues `i` with `ℓ(s_i w) < ℓ(w)`.
    pub fn left_descents(&self) -> Vec<usize> {
        let inv = self.inverse();
        (0..self.n)
            .filter(|&i| inv.apply(i as i64) > inv.apply(i as i64 + 1))
            .collect()
    }

    pub fn has_left_descent(&self, i: usize) -> bool {
        let inv = self.inverse();
        inv.apply(i as i64) > inv.apply(i as i64 + 1)
    }

    /// Residues `i` with `ℓ(w s_i) < ℓ(w)`.
    pub fn right_descents(&self) -> Vec<usize> {
        (0..self.n)
            .filter(|&i| self.apply(i as i64) > self.apply(i as i64 + 1))
            .collect()
    }

    /// A reduced word, obtained by repeatedly stripping the largest left
    /// descent.
    pub fn reduced_word(&self) -> Word {
        let mut letters = Vec::with_capacity(self.length());
        let mut w = self.clone();
        while let Some(&i) = w.left_descents().last() {
            letters.push(i);
            w = w.left_mul_simple(i);
        }
        Word(letters)
    }

    /// The transposition exchanging `i + rn` and `j + rn` for all `r`.
    pub fn transposition(i: i64, j: i64, n: usize) -> Result<Self> {
        check_modulus(n)?;
        let ni = n as i64;
        if (i - j).rem_euclid(ni) == 0 {
            return Err(Error::DegenerateTransposition { i, j, n });
        }
        let window = (1..=ni)
            .map(|p| {
                if (p - i).rem_euclid(ni) == 0 {
                    p + (j - i)
                } else if (p - j).rem_euclid(ni) == 0 {
                    p + (i - j)
                } else {
                    p
                }
            })
            .collect();
        Ok(AffinePermutation { n, window })
    }

    /// If `w` is cyclically decreasing, its canonical cyclically decreasing
    /// reduced word.
    pub fn cyclically_decreasing_word(&self) -> Option<Word> {
        let len = self.length();
        let support = self.reduced_word().support();
        if support.count_ones() as usize != len || len >= self.n {
            return None;
        }
        let word = canonical_cyclic_word(support, self.n);
        let candidate = Self::from_word(&word, self.n).ok()?;
        (candidate == *self).then_some(word)
    }

    pub fn is_cyclically_decreasing(&self) -> bool {
        self.cyclically_decreasing_word().is_some()
    }

    /// Applies `self` to the left of `s_{i_1}⋯s_{i_l}`, i.e. returns
    /// `self · word`.
    pub fn mul_word(&self, word: &Word) -> Self {
        word.letters()
            .iter()
            .fold(self.clone(), |w, &a| w.right_mul_simple(a))
    }
}

impl fmt::Display for AffinePermutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (k, v) in self.window.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, "]")
    }
}

/// The canonical cyclically decreasing word on a proper subset of residues.
///
/// Letters are listed decreasingly in the cyclic order that starts just
/// after the smallest missing residue `x`, i.e. `x-1, x-2, …, x+1`
/// restricted to the subset.
pub fn canonical_cyclic_word(support: u64, n: usize) -> Word {
    let full = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };
    let support = support & full;
    debug_assert!(support != full, "cyclically decreasing words omit a residue");
    let x = (0..n).find(|&i| support & (1 << i) == 0).unwrap_or(0);
    let letters = (1..n)
        .map(|d| (x + n - d) % n)
        .filter(|&a| support & (1 << a) != 0)
        .collect();
    Word(letters)
}

/// Cyclically decreasing word built from the residues in `letters`.
pub fn cyclically_decreasing_element(support: u64, n: usize) -> Result<AffinePermutation> {
    check_modulus(n)?;
    let full = (1u64 << n) - 1;
    if support & !full != 0 {
        return Err(Error::Domain("residue set exceeds modulus".into()));
    }
    if support == full {
        return Err(Error::Domain(
            "a cyclically decreasing element omits at least one residue".into(),
        ));
    }
    AffinePermutation::from_word(&canonical_cyclic_word(support, n), n)
}

/// True iff the word has distinct letters and, whenever `i` and `i+1` both
/// occur, `i+1` comes first.
pub fn is_cyclically_decreasing_word(word: &Word, n: usize) -> bool {
    let mut pos = vec![usize::MAX; n];
    for (k, &a) in word.letters().iter().enumerate() {
        if a >= n || pos[a] != usize::MAX {
            return false;
        }
        pos[a] = k;
    }
    if word.len() >= n {
        return false;
    }
    (0..n).all(|i| {
        let j = (i + 1) % n;
        pos[i] == usize::MAX || pos[j] == usize::MAX || pos[j] < pos[i]
    })
}

/// A permutation of `{1, …, n}` in one-line notation.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct FinitePermutation(Vec<usize>);

impl FinitePermutation {
    pub fn new(one_line: Vec<usize>) -> Result<Self> {
        let n = one_line.len();
        let mut seen = vec![false; n + 1];
        for &v in &one_line {
            if v == 0 || v > n || std::mem::replace(&mut seen[v], true) {
                return Err(Error::InvalidWindow(format!(
                    "{one_line:?} is not a permutation of 1..={n}"
                )));
            }
        }
        Ok(FinitePermutation(one_line))
    }

    pub fn identity(n: usize) -> Self {
        FinitePermutation((1..=n).collect())
    }

    pub fn longest(n: usize) -> Self {
        FinitePermutation((1..=n).rev().collect())
    }

    pub fn n(&self) -> usize {
        self.0.len()
    }

    pub fn one_line(&self) -> &[usize] {
        &self.0
    }

    /// `w(i)`, 1-indexed.
    pub fn at(&self, i: usize) -> usize {
        self.0[i - 1]
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &Self) -> Self {
        FinitePermutation(other.0.iter().map(|&v| self.at(v)).collect())
    }

    /// `w · τ_{a,b}`: swaps positions `a` and `b`.
    pub fn swap_positions(&self, a: usize, b: usize) -> Self {
        let mut v = self.0.clone();
        v.swap(a - 1, b - 1);
        FinitePermutation(v)
    }

    pub fn length(&self) -> usize {
        (0..self.0.len())
            .map(|i| self.0[i + 1..].iter().filter(|&&v| v < self.0[i]).count())
            .sum()
    }

    /// `inv_i(w) = #{j > i : w(i) > w(j)}`.
    pub fn inv_at(&self, i: usize) -> usize {
        let wi = self.at(i);
        self.0[i..].iter().filter(|&&v| v < wi).count()
    }

    pub fn all(n: usize) -> Vec<Self> {
        let mut out = Vec::new();
        let mut cur: Vec<usize> = (1..=n).collect();
        permute(&mut cur, 0, &mut out);
        out.sort();
        out
    }
}

fn permute(cur: &mut Vec<usize>, k: usize, out: &mut Vec<FinitePermutation>) {
    if k == cur.len() {
        out.push(FinitePermutation(cur.clone()));
        return;
    }
    for j in k..cur.len() {
        cur.swap(k, j);
        permute(cur, k + 1, out);
        cur.swap(k, j);
    }
}

impl fmt::Display for FinitePermutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (k, v) in self.0.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, "]")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(letters: &[usize], n: usize) -> AffinePermutation {
        AffinePermutation::from_word(&Word::new(letters.to_vec()), n).unwrap()
    }

    #[test]
    fn generator_window() {
        assert_eq!(w(&[], 4).window(), &[1, 2, 3, 4]);
        assert_eq!(w(&[0], 4).window(), &[0, 2, 3, 5]);
        assert!(matches!(
            AffinePermutation::from_word(&Word::new(vec![4]), 4),
            Err(Error::InvalidLetter { letter: 4, n: 4 })
        ));
    }

    #[test]
    fn lengths_and_grassmannian() {
        assert_eq!(w(&[], 4).length(), 0);
        assert_eq!(w(&[0], 4).length(), 1);
        let g = w(&[2, 1, 3, 0], 4);
        assert_eq!(g.length(), 4);
        assert!(g.is_grassmannian());
        assert!(!w(&[1], 4).is_grassmannian());
    }

    #[test]
    fn transpositions() {
        assert_eq!(AffinePermutation::transposition(0, 1, 4).unwrap(), w(&[0], 4));
        assert_eq!(
            AffinePermutation::transposition(0, 2, 4).unwrap(),
            w(&[0, 1, 0], 4)
        );
        assert_eq!(
            AffinePermutation::transposition(2, 0, 4).unwrap(),
            AffinePermutation::transposition(0, 2, 4).unwrap()
        );
        assert!(AffinePermutation::transposition(1, 5, 4).is_err());
    }

    #[test]
    fn cyclically_decreasing() {
        assert_eq!(w(&[], 4).cyclically_decreasing_word(), Some(Word::empty()));
        assert_eq!(
            w(&[1, 0], 4).cyclically_decreasing_word(),
            Some(Word::new(vec![1, 0]))
        );
        assert_eq!(w(&[0, 1], 4).cyclically_decreasing_word(), None);
        // s_0 s_3: 0 then 3, and 3+1 = 0 precedes 3
        assert_eq!(
            w(&[0, 3], 4).cyclically_decreasing_word(),
            Some(Word::new(vec![0, 3]))
        );
    }

    #[test]
    fn inverse_and_compose() {
        let a = w(&[2, 1, 3, 0, 2], 4);
        assert_eq!(a.compose(&a.inverse()), AffinePermutation::identity(4));
        let b = w(&[1, 3], 4);
        assert_eq!(a.compose(&b), w(&[2, 1, 3, 0, 2, 1, 3], 4));
        assert_eq!(a.right_mul_simple(0), w(&[2, 1, 3, 0, 2, 0], 4));
    }
}
