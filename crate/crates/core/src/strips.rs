//! Strong strips, horizontal strong strips, the correspondences `ψ`/`φ`,
//! and ribbon strong strips.

use std::collections::{BTreeMap, BTreeSet};

use serde::{Deserialize, Serialize};

use crate::affine_weyl::{cyclically_decreasing_element, is_cyclically_decreasing_word, Word};
use crate::cores::{content, rect_translation, residue, NCore, Partition, Ribbon};
use crate::error::{Error, Result};

/// `(γ, c)`: a strong cover `ρ ⋖_B γ` marked by the content of one ribbon head.
pub fn marked_strong_covers(rho: &NCore) -> Vec<(NCore, i64)> {
    let mut out: Vec<(NCore, i64)> = rho
        .strong_covers_up()
        .into_iter()
        .flat_map(|cov| {
            let mut heads: Vec<i64> = cov.ribbons.iter().map(Ribbon::head_content).collect();
            heads.dedup();
            heads.into_iter().map(move |c| (cov.core.clone(), c))
        })
        .collect();
    out.sort_by(|a, b| a.0.cmp(&b.0).then(a.1.cmp(&b.1)));
    out
}

/// A saturated strong chain with a strictly increasing content vector.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct StrongStrip {
    pub chain: Vec<NCore>,
    pub contents: Vec<i64>,
}

impl StrongStrip {
    pub fn len(&self) -> usize {
        self.contents.len()
    }

    pub fn is_empty(&self) -> bool {
        self.contents.is_empty()
    }

    pub fn start(&self) -> &NCore {
        &self.chain[0]
    }

    pub fn end(&self) -> &NCore {
        self.chain.last().expect("chains are nonempty")
    }
}

/// All strong `m`-strips from `nu` to `gamma`, sorted by content vector.
pub fn strong_strips(nu: &NCore, gamma: &NCore, m: usize) -> Vec<StrongStrip> {
    if nu.n() != gamma.n()
        || nu.degree() + m != gamma.degree()
        || !gamma.shape().contains(nu.shape())
    {
        return Vec::new();
    }
    let mut out = Vec::new();
    let mut chain = vec![nu.clone()];
    let mut contents = Vec::new();
    extend_strips(gamma, m, &mut chain, &mut contents, &mut out);
    out.sort_by(|a, b| a.contents.cmp(&b.contents));
    out
}

fn extend_strips(
    gamma: &NCore,
    m: usize,
    chain: &mut Vec<NCore>,
    contents: &mut Vec<i64>,
    out: &mut Vec<StrongStrip>,
) {
    let cur = chain.last().expect("nonempty").clone();
    if contents.len() == m {
        if cur == *gamma {
            out.push(StrongStrip {
                chain: chain.clone(),
                contents: contents.clone(),
            });
        }
        return;
    }
    for (next, c) in marked_strong_covers(&cur) {
        if contents.last().is_some_and(|&last| c <= last) || !gamma.shape().contains(next.shape())
        {
            continue;
        }
        chain.push(next);
        contents.push(c);
        extend_strips(gamma, m, chain, contents, out);
        chain.pop();
        contents.pop();
    }
}

/// All strong `m`-strips starting at `nu`, any endpoint.
pub fn strong_strips_from(nu: &NCore, m: usize) -> Vec<StrongStrip> {
    fn go(m: usize, chain: &mut Vec<NCore>, contents: &mut Vec<i64>, out: &mut Vec<StrongStrip>) {
        if contents.len() == m {
            out.push(StrongStrip {
                chain: chain.clone(),
                contents: contents.clone(),
            });
            return;
        }
        let cur = chain.last().expect("nonempty").clone();
        for (next, c) in marked_strong_covers(&cur) {
            if contents.last().is_some_and(|&last| c <= last) {
                continue;
            }
            chain.push(next);
            contents.push(c);
            go(m, chain, contents, out);
            chain.pop();
            contents.pop();
        }
    }
    let mut out = Vec::new();
    go(m, &mut vec![nu.clone()], &mut Vec::new(), &mut out);
    out.sort_by(|a, b| a.end().cmp(b.end()).then(a.contents.cmp(&b.contents)));
    out
}

/// Number of saturated strong chains from `nu` up to `gamma`, ignoring marks.
pub fn count_saturated_chains(nu: &NCore, gamma: &NCore) -> u64 {
    if nu == gamma {
        return 1;
    }
    if nu.degree() >= gamma.degree() || !gamma.shape().contains(nu.shape()) {
        return 0;
    }
    nu.strong_covers_up()
        .iter()
        .filter(|c| gamma.shape().contains(c.core.shape()))
        .map(|c| count_saturated_chains(&c.core, gamma))
        .sum()
}

/// A horizontal strong strip `(λ, ν)` with its chain `ν = ν⁰ ⋖_B ⋯ ⋖_B νᵐ = R(n-1, λ)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct HorizontalStrongStrip {
    pub lambda: NCore,
    pub nu: NCore,
    pub chain: Vec<NCore>,
}

impl HorizontalStrongStrip {
    pub fn m(&self) -> usize {
        self.chain.len() - 1
    }

    pub fn n(&self) -> usize {
        self.lambda.n()
    }

    /// Head contents of the bottom-row ribbons, one per step.
    pub fn contents(&self) -> Vec<i64> {
        self.chain[1..]
            .iter()
            .map(|c| c.shape().first() as i64 - 1)
            .collect()
    }

    /// The bottom-row ribbon of each step.
    pub fn bottom_ribbons(&self) -> Vec<Ribbon> {
        self.chain
            .windows(2)
            .map(|p| {
                let (lo, hi) = (p[0].shape().first(), p[1].shape().first());
                Ribbon::new((lo + 1..=hi).map(|j| (1, j)).collect()).expect("row segment")
            })
            .collect()
    }

    pub fn as_strong_strip(&self) -> StrongStrip {
        StrongStrip {
            chain: self.chain.clone(),
            contents: self.contents(),
        }
    }
}

/// All horizontal strong `m`-strips `(λ, ν)` for fixed `λ`, sorted by `ν`.
pub fn horizontal_strong_strips_from(lam: &NCore, m: usize) -> Result<Vec<HorizontalStrongStrip>> {
    let n = lam.n();
    if m >= n {
        return Err(Error::OutOfRange(format!("m = {m} must be below n = {n}")));
    }
    let top = lam.core_translation();
    let mut found: BTreeMap<NCore, Vec<Vec<NCore>>> = BTreeMap::new();
    let mut chain = vec![top];
    descend(lam, m, &mut chain, &mut found);
    Ok(found
        .into_iter()
        .map(|(nu, mut chains)| {
            debug_assert_eq!(chains.len(), 1, "horizontal strong strips have unique chains");
            let mut chain = chains.swap_remove(0);
            chain.reverse();
            HorizontalStrongStrip {
                lambda: lam.clone(),
                nu,
                chain,
            }
        })
        .collect())
}

/// Every chain found downward from `R(n-1, λ)` with strictly shrinking
/// bottom rows; exposed so tests can check uniqueness of chains.
pub fn horizontal_chains_from(lam: &NCore, m: usize) -> BTreeMap<NCore, Vec<Vec<NCore>>> {
    let mut found = BTreeMap::new();
    let mut chain = vec![lam.core_translation()];
    descend(lam, m, &mut chain, &mut found);
    found
}

fn descend(
    lam: &NCore,
    m: usize,
    chain: &mut Vec<NCore>,
    found: &mut BTreeMap<NCore, Vec<Vec<NCore>>>,
) {
    let cur = chain.last().expect("nonempty").clone();
    if chain.len() == m + 1 {
        found.entry(cur).or_default().push(chain.clone());
        return;
    }
    for cov in cur.strong_covers_down() {
        let next = cov.core;
        if next.shape().first() < cur.shape().first() && next.shape().contains(lam.shape()) {
            chain.push(next);
            descend(lam, m, chain, found);
            chain.pop();
        }
    }
}

/// The horizontal strong strip `(λ, ν)` if there is one.
pub fn horizontal_strong_strip(lam: &NCore, nu: &NCore) -> Option<HorizontalStrongStrip> {
    let n = lam.n();
    let m = (n - 1 + lam.degree()).checked_sub(nu.degree())?;
    if m >= n || nu.n() != n || !nu.shape().contains(lam.shape()) {
        return None;
    }
    horizontal_strong_strips_from(lam, m)
        .ok()?
        .into_iter()
        .find(|s| s.nu == *nu)
}

/// Weak strips: the cores `𝔞(v w_λ)` over cyclically decreasing `v` of
/// length `m` with `ℓ(v w_λ) = ℓ(w_λ) + m` and `v w_λ` Grassmannian.
pub fn weak_strip_targets(lam: &NCore, m: usize) -> Result<Vec<NCore>> {
    let n = lam.n();
    if m == 0 || m >= n {
        return Err(Error::OutOfRange(format!("m = {m} must lie in 1..{n}")));
    }
    let w = lam.to_affine();
    let len = w.length();
    let mut out = Vec::new();
    for mask in 0u64..(1 << n) - 1 {
        if mask.count_ones() as usize != m {
            continue;
        }
        let u = cyclically_decreasing_element(mask, n)?.compose(&w);
        if u.length() == len + m && u.is_grassmannian() {
            out.push(NCore::from_affine(&u)?);
        }
    }
    out.sort();
    Ok(out)
}

/// Residue of the last cell in the bottom row: `x = λ_1 - 1 mod n`.
pub fn anchor(lam: &NCore) -> usize {
    let n = lam.n();
    (lam.shape().first() + n - 1) % n
}

/// Residues `x-1, x-2, …, x+1`: the decreasing total order anchored at `x`.
pub fn anchored_order(x: usize, n: usize) -> Vec<usize> {
    (1..n).map(|d| (x + n - d) % n).collect()
}

/// `ψ`: the cyclically decreasing word for `w_ν w_λ^{-1}` read off the ribbon tails.
pub fn psi(strip: &HorizontalStrongStrip) -> Word {
    let n = strip.n();
    let x = anchor(&strip.lambda);
    // the step ν^(i) ⋖ ν^(i+1) has leftmost bottom-row cell (1, ν^(i)_1 + 1)
    let tails: BTreeSet<usize> = strip.chain[..strip.m()]
        .iter()
        .map(|c| residue((1, c.shape().first() + 1), n))
        .collect();
    Word::new(
        anchored_order(x, n)
            .into_iter()
            .filter(|a| !tails.contains(a))
            .collect(),
    )
}

/// `φ`: rebuilds the chain from a cyclically decreasing word avoiding `x`.
pub fn phi(word: &Word, lam: &NCore) -> Result<HorizontalStrongStrip> {
    let n = lam.n();
    word.validate(n)?;
    let x = anchor(lam);
    if !is_cyclically_decreasing_word(word, n) {
        return Err(Error::Domain(format!("{word} is not cyclically decreasing")));
    }
    if word.letters().contains(&x) {
        return Err(Error::Domain(format!("{word} contains the anchor residue {x}")));
    }
    let support = word.support();
    // a_1 > a_2 > … > a_m in the anchored order
    let tails: Vec<usize> = anchored_order(x, n)
        .into_iter()
        .filter(|&a| support & (1 << a) == 0)
        .collect();
    let mut chain = vec![lam.core_translation()];
    for &a in &tails {
        let cur = chain.last().expect("nonempty").clone();
        let bottom = cur.shape().first();
        let tail_col = (0..n - 1)
            .map(|k| bottom - k)
            .find(|&j| j >= 1 && residue((1, j), n) == a)
            .ok_or_else(|| Error::Domain(format!("no bottom-row tail of residue {a}")))?;
        let next = cur
            .strong_covers_down()
            .into_iter()
            .find(|cov| {
                cov.core.shape().first() + 1 == tail_col
                    && cov.ribbons.iter().any(|r| r.tail() == (1, tail_col))
            })
            .ok_or_else(|| {
                Error::Domain(format!("bottom-row ribbon from column {tail_col} is not removable"))
            })?;
        chain.push(next.core);
    }
    chain.reverse();
    let nu = chain[0].clone();
    if !nu.shape().contains(lam.shape()) {
        return Err(Error::Domain(format!("{nu} does not contain {lam}")));
    }
    Ok(HorizontalStrongStrip {
        lambda: lam.clone(),
        nu,
        chain,
    })
}

/// The `r` columns of the last `r` cells in the highest row of length `r`
/// of `𝔠(λ ∪ R_r)`.
pub fn col_r(lam: &Partition, r: usize, n: usize) -> Result<Vec<usize>> {
    let eta = lam.union(&crate::cores::rectangle_checked(r, n)?);
    let core = NCore::c_map(&eta, n)?;
    let m = (1..=eta.len())
        .rev()
        .find(|&i| eta.row(i) == r)
        .expect("the rectangle contributes rows of length r");
    let end = core.shape().row(m);
    Ok((end + 1 - r..=end).collect())
}

/// How the head condition of a horizontal ribbon strip is read.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
pub enum HeadRule {
    /// Each head lies in row 1 or directly above a cell of the chain's
    /// smallest shape `ν`.
    #[default]
    AboveBase,
    /// Each head lies in row 1 or directly above a cell of the preceding
    /// shape of the chain. Every strong cover satisfies this.
    AbovePrevious,
}

/// A ribbon strong strip `(λ, ν)` with respect to `r`, with every chain
/// witnessing it.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RibbonStrongStrip {
    pub lambda: NCore,
    pub nu: NCore,
    pub r: usize,
    pub chains: Vec<Vec<NCore>>,
}

/// All ribbon strong strips of length `b` with respect to `r`, for the
/// bounded partition `lam`.
pub fn ribbon_strong_strips(
    lam: &Partition,
    r: usize,
    b: usize,
    n: usize,
    rule: HeadRule,
) -> Result<Vec<RibbonStrongStrip>> {
    let top = rect_translation(lam, r, n)?;
    let cols: BTreeSet<usize> = col_r(lam, r, n)?.into_iter().collect();
    let lambda = NCore::c_map(lam, n)?;
    let mut found: BTreeMap<NCore, Vec<Vec<NCore>>> = BTreeMap::new();
    let mut chain = vec![top];
    ribbon_descend(b, &cols, rule, &mut chain, &mut found);
    Ok(found
        .into_iter()
        .map(|(nu, chains)| RibbonStrongStrip {
            lambda: lambda.clone(),
            nu,
            r,
            chains,
        })
        .collect())
}

fn ribbon_descend(
    b: usize,
    cols: &BTreeSet<usize>,
    rule: HeadRule,
    chain: &mut Vec<NCore>,
    found: &mut BTreeMap<NCore, Vec<Vec<NCore>>>,
) {
    let cur = chain.last().expect("nonempty").clone();
    if chain.len() == b + 1 {
        let mut up: Vec<NCore> = chain.clone();
        up.reverse();
        if heads_ok(&up, rule) {
            found.entry(cur).or_default().push(up);
        }
        return;
    }
    for cov in cur.strong_covers_down() {
        if cov.ribbons.iter().any(|rb| cols.contains(&rb.tail().1)) {
            chain.push(cov.core);
            ribbon_descend(b, cols, rule, chain, found);
            chain.pop();
        }
    }
}

fn heads_ok(chain: &[NCore], rule: HeadRule) -> bool {
    let base = chain[0].shape();
    chain.windows(2).all(|p| {
        let below = match rule {
            HeadRule::AboveBase => base,
            HeadRule::AbovePrevious => p[0].shape(),
        };
        p[1].ribbons_over(&p[0]).iter().all(|rb| {
            let (i, j) = rb.head();
            i == 1 || below.contains_cell((i - 1, j))
        })
    })
}

/// `ν` reachable from `R(r, λ)` by a strong strip (increasing marks) whose
/// every step is marked at the head of a ribbon with its tail in `col_r(λ)`.
pub fn strong_ribbon_targets(lam: &Partition, r: usize, b: usize, n: usize) -> Result<Vec<NCore>> {
    let top = rect_translation(lam, r, n)?;
    let cols: BTreeSet<usize> = col_r(lam, r, n)?.into_iter().collect();
    let mut out = BTreeSet::new();
    // walk down with decreasing marks, i.e. increasing marks read upward
    fn go(
        b: usize,
        cols: &BTreeSet<usize>,
        cur: &NCore,
        last: Option<i64>,
        depth: usize,
        out: &mut BTreeSet<NCore>,
    ) {
        if depth == b {
            out.insert(cur.clone());
            return;
        }
        for cov in cur.strong_covers_down() {
            let mut heads: Vec<i64> = cov
                .ribbons
                .iter()
                .filter(|rb| cols.contains(&rb.tail().1))
                .map(Ribbon::head_content)
                .collect();
            heads.sort_unstable();
            heads.dedup();
            for h in heads {
                if last.is_none_or(|l| h < l) {
                    go(b, cols, &cov.core, Some(h), depth + 1, out);
                }
            }
        }
    }
    go(b, &cols, &top, None, 0, &mut out);
    Ok(out.into_iter().collect())
}

/// Length-one criterion: `ν ⋖_B R(r, λ)` and `ν_i < R(r, λ)_i` for some row
/// `i` with `(λ ∪ R_r)_i = r`.
pub fn length_one_targets(lam: &Partition, r: usize, n: usize) -> Result<Vec<NCore>> {
    let top = rect_translation(lam, r, n)?;
    let eta = lam.union(&crate::cores::rectangle_checked(r, n)?);
    let rows: Vec<usize> = (1..=eta.len()).filter(|&i| eta.row(i) == r).collect();
    Ok(top
        .strong_covers_down()
        .into_iter()
        .map(|c| c.core)
        .filter(|nu| rows.iter().any(|&i| nu.shape().row(i) < top.shape().row(i)))
        .collect())
}

/// Head content of a cell, re-exported for convenience in reports.
pub fn cell_content(cell: (usize, usize)) -> i64 {
    content(cell)
}
