//! Partitions, n-cores and the bijections with affine Grassmannian elements.

mod partition;
mod ribbon;

use std::collections::HashSet;
use std::fmt;
use std::sync::LazyLock;

use serde::{Deserialize, Serialize};

pub use partition::{
    compositions_bounded, content, partitions, partitions_bounded, residue, Cell, Partition,
};
pub use ribbon::{skew_ribbons, Ribbon};

use crate::affine_weyl::{check_modulus, AffinePermutation, Word};
use crate::error::{Error, Result};
use crate::memo::Memo;

/// True iff no cell of `p` has hook length exactly `n`.
pub fn is_ncore(p: &Partition, n: usize) -> bool {
    p.cells().all(|c| p.hook(c) != n)
}

/// An `n`-core.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct NCore {
    n: usize,
    shape: Partition,
}

#[derive(Deserialize)]
struct RawCore {
    n: usize,
    shape: Partition,
}

impl<'de> Deserialize<'de> for NCore {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let raw = RawCore::deserialize(d)?;
        NCore::new(raw.shape, raw.n).map_err(serde::de::Error::custom)
    }
}

impl PartialOrd for NCore {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

/// Cores order by modulus, then reverse-lexicographically by shape, so
/// sorted collections list larger first rows first.
impl Ord for NCore {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.n
            .cmp(&other.n)
            .then_with(|| self.shape.revlex_cmp(&other.shape))
    }
}

static WINDOWS: LazyLock<Memo<(usize, Partition), AffinePermutation>> = LazyLock::new(Memo::new);
static CORES_BY_DEGREE: LazyLock<Memo<(usize, usize), Vec<NCore>>> = LazyLock::new(Memo::new);
static COVERS_DOWN: LazyLock<Memo<(usize, Partition), Vec<StrongCover>>> = LazyLock::new(Memo::new);
static COVERS_UP: LazyLock<Memo<(usize, Partition), Vec<StrongCover>>> = LazyLock::new(Memo::new);

impl NCore {
    pub fn new(shape: Partition, n: usize) -> Result<Self> {
        check_modulus(n)?;
        if !is_ncore(&shape, n) {
            return Err(Error::NotACore {
                shape: shape.to_string(),
                n,
            });
        }
        Ok(NCore { n, shape })
    }

    pub fn from_parts(parts: &[usize], n: usize) -> Result<Self> {
        NCore::new(Partition::new(parts.to_vec())?, n)
    }

    pub(crate) fn new_unchecked(shape: Partition, n: usize) -> Self {
        debug_assert!(is_ncore(&shape, n));
        NCore { n, shape }
    }

    pub fn empty(n: usize) -> Self {
        NCore {
            n,
            shape: Partition::empty(),
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn shape(&self) -> &Partition {
        &self.shape
    }

    pub fn into_shape(self) -> Partition {
        self.shape
    }

    /// Number of cells with hook length below `n`; equals `ℓ(w_λ)`.
    pub fn degree(&self) -> usize {
        self.shape
            .cells()
            .filter(|&c| self.shape.hook(c) < self.n)
            .count()
    }

    pub fn residue(&self, cell: Cell) -> usize {
        residue(cell, self.n)
    }

    /// Addable corners of residue `i`, bottom row first.
    pub fn addable_corners(&self, i: usize) -> Vec<Cell> {
        self.shape
            .addable_corners()
            .into_iter()
            .filter(|&c| self.residue(c) == i)
            .collect()
    }

    /// Removable corners of residue `i`, bottom row first.
    pub fn removable_corners(&self, i: usize) -> Vec<Cell> {
        self.shape
            .removable_corners()
            .into_iter()
            .filter(|&c| self.residue(c) == i)
            .collect()
    }

    /// `s_i λ`: adds every addable corner of residue `i`.
    pub fn act_s(&self, i: usize) -> Result<NCore> {
        if i >= self.n {
            return Err(Error::InvalidLetter {
                letter: i,
                n: self.n,
            });
        }
        let corners = self.addable_corners(i);
        if corners.is_empty() {
            return Err(Error::NoAddableCorner { residue: i });
        }
        let shape = self.shape.with_cells(&corners)?;
        Ok(NCore::new_unchecked(shape, self.n))
    }

    /// Inverse of [`NCore::act_s`]: removes every removable corner of residue `i`.
    pub fn remove_s(&self, i: usize) -> Option<NCore> {
        let corners = self.removable_corners(i);
        if corners.is_empty() {
            return None;
        }
        let shape = self.shape.without_cells(&corners).ok()?;
        Some(NCore::new_unchecked(shape, self.n))
    }

    /// `𝔞`: applies the letters of a reduced word to `∅`, rightmost first.
    pub fn a_map(word: &Word, n: usize) -> Result<NCore> {
        word.validate(n)?;
        word.letters()
            .iter()
            .rev()
            .try_fold(NCore::empty(n), |c, &a| c.act_s(a))
    }

    /// A reduced word for `w_λ`: repeatedly strip the removable corners of
    /// the largest residue present.
    pub fn core_to_word(&self) -> Word {
        let mut letters = Vec::new();
        let mut cur = self.clone();
        while let Some(i) = cur
            .shape
            .removable_corners()
            .into_iter()
            .map(|c| cur.residue(c))
            .max()
        {
            letters.push(i);
            cur = cur.remove_s(i).expect("removable corner of that residue exists");
        }
        Word::new(letters)
    }

    /// `w_λ`, the affine Grassmannian element with `𝔞(w_λ) = λ`.
    pub fn to_affine(&self) -> AffinePermutation {
        let key = (self.n, self.shape.clone());
        let w = WINDOWS.get_or_insert_with(&key, || {
            AffinePermutation::from_word(&self.core_to_word(), self.n)
                .expect("core words use valid letters")
        });
        (*w).clone()
    }

    /// `𝔞(w)` for a Grassmannian `w`.
    pub fn from_affine(w: &AffinePermutation) -> Result<NCore> {
        if !w.is_grassmannian() {
            return Err(Error::Domain(format!("{w} is not Grassmannian")));
        }
        NCore::a_map(&w.reduced_word(), w.n())
    }

    /// `𝔠⁻¹`: row `i` records how many cells of row `i` have hook below `n`.
    pub fn c_inverse(&self) -> Partition {
        let parts = (1..=self.shape.len())
            .map(|i| {
                (1..=self.shape.row(i))
                    .filter(|&j| self.shape.hook((i, j)) < self.n)
                    .count()
            })
            .collect();
        Partition::new(parts).expect("bounded partition of an n-core")
    }

    /// `𝔠`: the unique `n`-core whose rows have `λ_i` cells of hook below `n`.
    ///
    /// Rows are placed from the top down, each as short as possible.
    pub fn c_map(lam: &Partition, n: usize) -> Result<NCore> {
        check_modulus(n)?;
        if let Some(&part) = lam.parts().iter().find(|&&p| p >= n) {
            return Err(Error::PartOutOfRange { part, n });
        }
        let mut rows_top_down: Vec<usize> = Vec::with_capacity(lam.len());
        for &li in lam.parts().iter().rev() {
            let above = |col: usize| rows_top_down.iter().filter(|&&r| r >= col).count();
            let floor = rows_top_down.last().copied().unwrap_or(0).max(li);
            let mut col = 1;
            while above(col) + li >= n {
                col += 1;
            }
            let len = (col + li - 1).max(floor);
            rows_top_down.push(len);
        }
        rows_top_down.reverse();
        let shape = Partition::new(rows_top_down)?;
        let core = NCore::new(shape, n)?;
        if core.c_inverse() != *lam {
            return Err(Error::Domain(format!(
                "row-wise construction failed for {lam} with n = {n}"
            )));
        }
        Ok(core)
    }

    /// `R(n-1, λ) = (λ_1 + n - 1, λ)`.
    pub fn core_translation(&self) -> NCore {
        let mut parts = vec![self.shape.first() + self.n - 1];
        parts.extend_from_slice(self.shape.parts());
        NCore::new_unchecked(Partition::from_parts_unchecked(parts), self.n)
    }

    /// Cells of `self / inner` grouped into rook-connected ribbons.
    pub fn ribbons_over(&self, inner: &NCore) -> Vec<Ribbon> {
        skew_ribbons(&self.shape, &inner.shape).expect("cover skews are unions of ribbons")
    }

    /// All `μ ⋖_B λ`, found as `τ_{a,b} w_λ` with length one less and
    /// Grassmannian.
    pub fn strong_covers_down(&self) -> Vec<StrongCover> {
        let key = (self.n, self.shape.clone());
        COVERS_DOWN
            .get_or_insert_with(&key, || self.compute_covers_down())
            .to_vec()
    }

    fn compute_covers_down(&self) -> Vec<StrongCover> {
        let w = self.to_affine();
        let len = w.length();
        if len == 0 {
            return Vec::new();
        }
        let inv = w.inverse();
        let lo = inv.window().iter().min().copied().unwrap_or(0);
        let hi = inv.window().iter().max().copied().unwrap_or(0);
        let bound = hi - lo + 2 * self.n as i64;
        let mut out = self.covers_via_tau(&w, bound, |u| u.length() + 1 == len, false);
        out.sort_by(|a, b| a.core.cmp(&b.core));
        out
    }

    /// All `γ` with `λ ⋖_B γ`.
    pub fn strong_covers_up(&self) -> Vec<StrongCover> {
        let key = (self.n, self.shape.clone());
        COVERS_UP
            .get_or_insert_with(&key, || self.compute_covers_up())
            .to_vec()
    }

    fn compute_covers_up(&self) -> Vec<StrongCover> {
        let w = self.to_affine();
        let len = w.length();
        let bound = self.n as i64 * (2 * len as i64 + 3);
        let mut out = self.covers_via_tau(&w, bound, |u| u.length() == len + 1, true);
        out.sort_by(|a, b| a.core.cmp(&b.core));
        out
    }

    fn covers_via_tau(
        &self,
        w: &AffinePermutation,
        bound: i64,
        keep: impl Fn(&AffinePermutation) -> bool,
        upward: bool,
    ) -> Vec<StrongCover> {
        let ni = self.n as i64;
        let mut out = Vec::new();
        for a in 1..=ni {
            for d in 1..bound {
                if d % ni == 0 {
                    continue;
                }
                let tau = AffinePermutation::transposition(a, a + d, self.n)
                    .expect("non-congruent endpoints");
                let u = tau.compose(w);
                if !u.is_grassmannian() || !keep(&u) {
                    continue;
                }
                let core = NCore::from_affine(&u).expect("Grassmannian element");
                let ribbons = if upward {
                    core.ribbons_over(self)
                } else {
                    self.ribbons_over(&core)
                };
                out.push(StrongCover {
                    core,
                    ribbons,
                    tau: (a, a + d),
                });
            }
        }
        out
    }

    /// Strong covers below `self`, located instead by brute force over all
    /// cores of one smaller degree.
    pub fn strong_covers_down_by_containment(&self) -> Vec<NCore> {
        let d = self.degree();
        if d == 0 {
            return Vec::new();
        }
        cores_of_degree(self.n, d - 1)
            .iter()
            .filter(|c| self.shape.contains(&c.shape))
            .cloned()
            .collect()
    }

    /// Extremal cells: `(i, j)` in the shape with `(i+1, j+1)` outside it.
    pub fn extremal_cells(&self) -> Vec<Cell> {
        self.shape
            .cells()
            .filter(|&(i, j)| !self.shape.contains_cell((i + 1, j + 1)))
            .collect()
    }
}

impl fmt::Display for NCore {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.shape)
    }
}

/// A strong Bruhat cover seen from one endpoint.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StrongCover {
    /// The other endpoint of the cover.
    pub core: NCore,
    /// Ribbon copies making up the skew, ordered by head content.
    pub ribbons: Vec<Ribbon>,
    /// Endpoints `(a, b)` of the transposition `τ_{a,b}` realizing the cover.
    pub tau: (i64, i64),
}

/// All `n`-cores of the given degree, reverse-lexicographic by shape.
pub fn cores_of_degree(n: usize, d: usize) -> std::sync::Arc<Vec<NCore>> {
    CORES_BY_DEGREE.get_or_insert_with(&(n, d), || {
        let mut v: Vec<NCore> = partitions_bounded(d, n - 1)
            .iter()
            .map(|p| NCore::c_map(p, n).expect("bounded partitions map to cores"))
            .collect();
        v.sort();
        v
    })
}

/// All `n`-cores of degree at most `max_deg`, grouped by increasing degree.
pub fn cores_up_to(n: usize, max_deg: usize) -> Vec<NCore> {
    (0..=max_deg)
        .flat_map(|d| cores_of_degree(n, d).iter().cloned().collect::<Vec<_>>())
        .collect()
}

/// `R(r, λ) = 𝔠(λ ∪ R_r)` for a bounded partition `λ`, with `R_r = (r^{n-r})`.
pub fn rect_translation(lam: &Partition, r: usize, n: usize) -> Result<NCore> {
    check_modulus(n)?;
    if r == 0 || r >= n {
        return Err(Error::OutOfRange(format!("r = {r} must lie in 1..{n}")));
    }
    NCore::c_map(&lam.union(&Partition::rectangle(n - r, r)), n)
}

/// Bounded partition `R_r = (r^{n-r})`.
pub fn rectangle(r: usize, n: usize) -> Partition {
    Partition::rectangle(n - r, r)
}

/// `R_r` with `1 ≤ r < n` checked.
pub fn rectangle_checked(r: usize, n: usize) -> Result<Partition> {
    check_modulus(n)?;
    if r == 0 || r >= n {
        return Err(Error::OutOfRange(format!("r = {r} must lie in 1..{n}")));
    }
    Ok(rectangle(r, n))
}

/// Set of shapes, used for order-insensitive comparisons.
pub fn shape_set<'a>(cores: impl IntoIterator<Item = &'a NCore>) -> HashSet<Partition> {
    cores.into_iter().map(|c| c.shape.clone()).collect()
}
