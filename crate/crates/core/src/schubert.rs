//! Products of affine Schubert classes, the `sh` map and the quantum Monk
//! rule of the flag manifold.
//!
//! Homology classes `ξ_λ` are realized by k-Schur functions at `t = 1`, so
//! a structure constant `c^ν_{μλ}` is the coefficient of `s^{(n)}_ν` in
//! `s^{(n)}_μ s^{(n)}_λ`. Products are indexed by bounded partitions
//! (`λ_1 < n`) internally; [`SchubertExpansion`] carries the cores.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};

use crate::affine_weyl::{check_modulus, FinitePermutation};
use crate::cores::{partitions_bounded, rectangle_checked, NCore, Partition};
use crate::error::{Error, Result};
use crate::strips::{
    horizontal_strong_strips_from, length_one_targets, ribbon_strong_strips, strong_strips_from,
    weak_strip_targets, HeadRule,
};
use crate::symfun::{kschur, weak_kf_matrix};

/// `Σ c_ν ξ_ν` over `n`-cores.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct SchubertExpansion {
    n: usize,
    terms: BTreeMap<NCore, i64>,
}

impl SchubertExpansion {
    pub fn new(n: usize) -> Self {
        SchubertExpansion {
            n,
            terms: BTreeMap::new(),
        }
    }

    /// Each core with coefficient one; repeats accumulate.
    pub fn from_cores(n: usize, cores: impl IntoIterator<Item = NCore>) -> Self {
        let mut e = SchubertExpansion::new(n);
        for c in cores {
            e.add_term(c, 1);
        }
        e
    }

    pub fn add_term(&mut self, core: NCore, c: i64) {
        debug_assert_eq!(core.n(), self.n);
        let slot = self.terms.entry(core.clone()).or_insert(0);
        *slot += c;
        if *slot == 0 {
            self.terms.remove(&core);
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn coeff(&self, core: &NCore) -> i64 {
        self.terms.get(core).copied().unwrap_or(0)
    }

    pub fn terms(&self) -> impl Iterator<Item = (&NCore, i64)> {
        self.terms.iter().map(|(k, &v)| (k, v))
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn cores(&self) -> BTreeSet<NCore> {
        self.terms.keys().cloned().collect()
    }

    /// Common degree of the terms, if there are any.
    pub fn degree(&self) -> Option<usize> {
        self.terms.keys().next().map(NCore::degree)
    }

    pub fn is_multiplicity_free(&self) -> bool {
        self.terms.values().all(|&c| c == 1)
    }

    /// Terms keyed by `𝔠⁻¹`.
    pub fn bounded_terms(&self) -> Vec<Term> {
        self.terms
            .iter()
            .map(|(c, &coeff)| Term {
                partition: c.c_inverse(),
                coeff,
            })
            .collect()
    }
}

impl fmt::Display for SchubertExpansion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (k, (core, &c)) in self.terms.iter().enumerate() {
            if k > 0 {
                write!(f, " + ")?;
            }
            if c != 1 {
                write!(f, "{c}")?;
            }
            write!(f, "ξ{}", core.shape())?;
        }
        Ok(())
    }
}

impl Serialize for SchubertExpansion {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct Entry<'a> {
            core: &'a Partition,
            partition: Partition,
            coeff: i64,
        }
        let terms: Vec<Entry<'_>> = self
            .terms
            .iter()
            .map(|(c, &coeff)| Entry {
                core: c.shape(),
                partition: c.c_inverse(),
                coeff,
            })
            .collect();
        let mut st = s.serialize_struct("SchubertExpansion", 2)?;
        st.serialize_field("n", &self.n)?;
        st.serialize_field("terms", &terms)?;
        st.end()
    }
}

/// A term `c ξ_λ` indexed by a bounded partition.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct Term {
    pub partition: Partition,
    pub coeff: i64,
}

fn check_m(m: usize, n: usize) -> Result<()> {
    if m == 0 || m >= n {
        return Err(Error::OutOfRange(format!("m = {m} must lie in 1..{n}")));
    }
    Ok(())
}

// ---- Pieri rules ----

/// `ξ_{(m)} ξ_λ` through cyclically decreasing elements.
pub fn weak_pieri(m: usize, lam: &NCore) -> Result<SchubertExpansion> {
    check_m(m, lam.n())?;
    Ok(SchubertExpansion::from_cores(lam.n(), weak_strip_targets(lam, m)?))
}

/// `ξ_{(m)} ξ_λ` through horizontal strong `(n-1-m)`-strips.
pub fn horizontal_pieri(m: usize, lam: &NCore) -> Result<SchubertExpansion> {
    let n = lam.n();
    check_m(m, n)?;
    let strips = horizontal_strong_strips_from(lam, n - 1 - m)?;
    Ok(SchubertExpansion::from_cores(n, strips.into_iter().map(|s| s.nu)))
}

/// `ξ^{(m)} ξ^w` in cohomology: one term per strong `m`-strip out of `w`.
pub fn strong_pieri_cohomology(m: usize, w: &NCore) -> Result<SchubertExpansion> {
    check_m(m, w.n())?;
    Ok(SchubertExpansion::from_cores(
        w.n(),
        strong_strips_from(w, m).into_iter().map(|s| s.end().clone()),
    ))
}

// ---- homology structure constants ----

/// Splits off every `R_r = (r^{n-r})` sitting inside `lam`, returning the
/// remainder and the list of removed `r`.
pub fn strip_rectangles(lam: &Partition, n: usize) -> (Partition, Vec<usize>) {
    let mut parts = lam.parts().to_vec();
    let mut removed = Vec::new();
    for r in 1..n {
        loop {
            let have = parts.iter().filter(|&&p| p == r).count();
            if have < n - r {
                break;
            }
            for _ in 0..n - r {
                let at = parts.iter().position(|&p| p == r).expect("counted");
                parts.remove(at);
            }
            removed.push(r);
        }
    }
    (Partition::new(parts).expect("still decreasing"), removed)
}

/// `ν` with the rectangles `R_r` removed, if they all occur.
fn remove_rectangles(nu: &Partition, rs: &[usize], n: usize) -> Option<Partition> {
    let mut parts = nu.parts().to_vec();
    for &r in rs {
        for _ in 0..n - r {
            let at = parts.iter().position(|&p| p == r)?;
            parts.remove(at);
        }
    }
    Some(Partition::new(parts).expect("still decreasing"))
}

fn add_rectangles(nu: &Partition, rs: &[usize], n: usize) -> Partition {
    rs.iter()
        .fold(nu.clone(), |acc, &r| acc.union(&Partition::rectangle(n - r, r)))
}

fn check_bounded(lam: &Partition, n: usize) -> Result<()> {
    if lam.first() >= n {
        return Err(Error::PartOutOfRange {
            part: lam.first(),
            n,
        });
    }
    Ok(())
}

/// `ξ_μ ξ_λ` on bounded partitions, computed without factoring out
/// rectangles. The k-Schurs are expanded in `h`, multiplied as
/// `h_α h_β = h_{α∪β}` and paired against `𝔖_ν = Σ K^n_{νκ} m_κ`.
pub fn homology_product_direct(mu: &Partition, lam: &Partition, n: usize) -> Result<BTreeMap<Partition, i64>> {
    check_modulus(n)?;
    check_bounded(mu, n)?;
    check_bounded(lam, n)?;
    let a = kschur(&NCore::c_map(mu, n)?, false)?;
    let b = kschur(&NCore::c_map(lam, n)?, false)?;
    let mut prod: BTreeMap<Partition, i64> = BTreeMap::new();
    for (ka, ca) in a.terms() {
        for (kb, cb) in b.terms() {
            *prod.entry(ka.union(kb)).or_default() += ca.at_one() * cb.at_one();
        }
    }
    let d = mu.size() + lam.size();
    let index = partitions_bounded(d, n - 1);
    let kn = weak_kf_matrix(n, d, true);
    let mut out = BTreeMap::new();
    for (i, nu) in index.iter().enumerate() {
        let c: i64 = index
            .iter()
            .enumerate()
            .filter_map(|(j, kappa)| prod.get(kappa).map(|&x| x * kn.get(i, j).at_one()))
            .sum();
        if c != 0 {
            out.insert(nu.clone(), c);
        }
    }
    Ok(out)
}

/// `ξ_μ ξ_λ` on bounded partitions. Rectangles are factored out first
/// with `ξ_{λ∪R_r} = ξ_{R_r} ξ_λ`, which keeps the degrees small.
pub fn homology_product(mu: &Partition, lam: &Partition, n: usize) -> Result<BTreeMap<Partition, i64>> {
    check_modulus(n)?;
    check_bounded(mu, n)?;
    check_bounded(lam, n)?;
    let (mu0, r1) = strip_rectangles(mu, n);
    let (lam0, r2) = strip_rectangles(lam, n);
    let rs: Vec<usize> = r1.into_iter().chain(r2).collect();
    Ok(homology_product_direct(&mu0, &lam0, n)?
        .into_iter()
        .map(|(nu, c)| (add_rectangles(&nu, &rs, n), c))
        .collect())
}

/// `ξ_μ ξ_λ = Σ c^ν_{μλ} ξ_ν` on cores.
pub fn homology_structure_constants(mu: &NCore, lam: &NCore) -> Result<SchubertExpansion> {
    let n = mu.n();
    if lam.n() != n {
        return Err(Error::Domain(format!("moduli differ: {n} and {}", lam.n())));
    }
    let mut e = SchubertExpansion::new(n);
    for (nu, c) in homology_product(&mu.c_inverse(), &lam.c_inverse(), n)? {
        e.add_term(NCore::c_map(&nu, n)?, c);
    }
    Ok(e)
}

/// A single `c^ν_{μλ}` on bounded partitions.
pub fn structure_constant(mu: &Partition, lam: &Partition, nu: &Partition, n: usize) -> Result<i64> {
    check_modulus(n)?;
    for p in [mu, lam, nu] {
        check_bounded(p, n)?;
    }
    if nu.size() != mu.size() + lam.size() {
        return Ok(0);
    }
    let (mu0, r1) = strip_rectangles(mu, n);
    let (lam0, r2) = strip_rectangles(lam, n);
    let rs: Vec<usize> = r1.into_iter().chain(r2).collect();
    let Some(nu0) = remove_rectangles(nu, &rs, n) else {
        return Ok(0);
    };
    Ok(homology_product_direct(&mu0, &lam0, n)?
        .get(&nu0)
        .copied()
        .unwrap_or(0))
}

// ---- flags ----

fn binom2(k: usize) -> usize {
    k * k.saturating_sub(1) / 2
}

/// `sh(w)`: the partition with `λ'_i = C(n-i, 2) + inv_i(w_0 w)`, `i < n`.
pub fn sh_map(w: &FinitePermutation) -> Partition {
    let n = w.n();
    let w0w = FinitePermutation::longest(n).compose(w);
    let cols: Vec<usize> = (1..n).map(|i| binom2(n - i) + w0w.inv_at(i)).collect();
    Partition::new(cols).expect("columns decrease").conjugate()
}

/// The staircase `(n-1, (n-2)^2, …, 1^{n-1})` containing every `sh(w)`.
pub fn sh_box(n: usize) -> Partition {
    let parts: Vec<usize> = (1..n).rev().flat_map(|r| std::iter::repeat_n(r, n - r)).collect();
    Partition::new(parts).expect("decreasing")
}

/// A term `q^d σ_v` of a quantum product.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct QuantumTerm {
    pub perm: FinitePermutation,
    /// Exponents of `q_1, …, q_{n-1}`.
    pub q: Vec<usize>,
}

impl fmt::Display for QuantumTerm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, &e) in self.q.iter().enumerate() {
            match e {
                0 => {}
                1 => write!(f, "q{} ", i + 1)?,
                _ => write!(f, "q{}^{} ", i + 1, e)?,
            }
        }
        write!(f, "σ{}", self.perm)
    }
}

/// `σ_{s_r} * σ_w` in the quantum cohomology of the flag manifold.
pub fn quantum_monk(r: usize, w: &FinitePermutation) -> Result<Vec<QuantumTerm>> {
    let n = w.n();
    if r == 0 || r >= n {
        return Err(Error::OutOfRange(format!("r = {r} must lie in 1..{n}")));
    }
    let len = w.length() as i64;
    let mut out = Vec::new();
    for a in 1..=r {
        for b in r + 1..=n {
            let u = w.swap_positions(a, b);
            let lu = u.length() as i64;
            if lu == len + 1 {
                out.push(QuantumTerm {
                    perm: u,
                    q: vec![0; n - 1],
                });
            } else if lu == len - 2 * (b - a) as i64 + 1 {
                let mut q = vec![0; n - 1];
                q[a - 1..b - 1].iter_mut().for_each(|e| *e = 1);
                out.push(QuantumTerm { perm: u, q });
            }
        }
    }
    out.sort();
    Ok(out)
}

/// Column `i` of the shape attached to `q^d σ_v`:
/// `sh(v)'_i + C(n+1-i, 2) - (n+1-i) d_i + (n-i) d_{i-1}`.
fn eta_columns(v: &FinitePermutation, d: &[usize]) -> Vec<i64> {
    let n = v.n();
    let base = sh_map(v).conjugate();
    (1..n)
        .map(|i| {
            let prev = if i == 1 { 0 } else { d[i - 2] as i64 };
            base.row(i) as i64 + binom2(n + 1 - i) as i64 - (n + 1 - i) as i64 * d[i - 1] as i64
                + (n - i) as i64 * prev
        })
        .collect()
}

/// The shape `η` indexing `q^d σ_v`, or `None` when the columns do not
/// form a partition.
pub fn gw_shape(v: &FinitePermutation, d: &[usize]) -> Result<Option<Partition>> {
    let n = v.n();
    if d.len() + 1 != n {
        return Err(Error::Domain(format!("degree vector {d:?} needs {} entries", n - 1)));
    }
    let cols = eta_columns(v, d);
    if cols.iter().any(|&c| c < 0) || cols.windows(2).any(|p| p[0] < p[1]) {
        return Ok(None);
    }
    let cols: Vec<usize> = cols.into_iter().map(|c| c as usize).collect();
    Ok(Some(Partition::new(cols).expect("checked").conjugate()))
}

/// Inverts [`gw_shape`] column by column: `sh(v)'_i` ranges over
/// `n - i` consecutive values while `d_i` moves column `i` in steps of
/// `n + 1 - i`, so there is at most one preimage.
pub fn gw_shape_inverse(eta: &Partition, n: usize) -> Option<(FinitePermutation, Vec<usize>)> {
    if eta.first() >= n {
        return None;
    }
    let cols = eta.conjugate();
    let mut d = vec![0usize; n - 1];
    let mut code = vec![0usize; n];
    for i in 1..n {
        let prev = if i == 1 { 0 } else { d[i - 2] as i64 };
        // inv_i - (n+1-i) d_i, with 0 ≤ inv_i ≤ n-i
        let x = cols.row(i) as i64 - binom2(n - i) as i64 - binom2(n + 1 - i) as i64 - (n - i) as i64 * prev;
        let step = (n + 1 - i) as i64;
        let inv = x.rem_euclid(step);
        let di = (inv - x) / step;
        if di < 0 || inv > (n - i) as i64 {
            return None;
        }
        d[i - 1] = di as usize;
        code[i - 1] = inv as usize;
    }
    let w0v = from_lehmer_code(&code)?;
    let v = FinitePermutation::longest(n).compose(&w0v);
    Some((v, d))
}

fn from_lehmer_code(code: &[usize]) -> Option<FinitePermutation> {
    let mut avail: Vec<usize> = (1..=code.len()).collect();
    let mut one_line = Vec::with_capacity(code.len());
    for &c in code {
        if c >= avail.len() {
            return None;
        }
        one_line.push(avail.remove(c));
    }
    FinitePermutation::new(one_line).ok()
}

/// The coefficient of `q^d σ_v` in `σ_u * σ_w`, as the homology structure
/// constant `c^η_{sh(u), sh(w)}`. Zero when `η` is not a partition.
pub fn gw_invariant(u: &FinitePermutation, w: &FinitePermutation, v: &FinitePermutation, d: &[usize]) -> Result<i64> {
    let n = u.n();
    if w.n() != n || v.n() != n {
        return Err(Error::Domain("permutations of different sizes".into()));
    }
    match gw_shape(v, d)? {
        Some(eta) => structure_constant(&sh_map(u), &sh_map(w), &eta, n),
        None => Ok(0),
    }
}

// ---- conjecture checkers ----

/// Machine-readable outcome of one conjecture instance.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Report {
    pub conjecture: String,
    pub instance: Instance,
    #[serde(rename = "match")]
    pub matched: bool,
    pub lhs: Vec<Term>,
    pub rhs: Vec<Term>,
}

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub struct Instance {
    pub n: usize,
    pub r: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub b: Option<usize>,
    pub lambda: Partition,
}

impl Report {
    fn new(conjecture: &str, instance: Instance, lhs: BTreeMap<Partition, i64>, rhs: BTreeSet<Partition>) -> Self {
        let sort = |mut v: Vec<Term>| {
            v.sort_by(|a, b| a.partition.revlex_cmp(&b.partition).reverse());
            v
        };
        let matched = lhs.len() == rhs.len() && lhs.iter().all(|(k, &c)| c == 1 && rhs.contains(k));
        Report {
            conjecture: conjecture.to_string(),
            instance,
            matched,
            lhs: sort(lhs.into_iter().map(|(partition, coeff)| Term { partition, coeff }).collect()),
            rhs: sort(rhs.into_iter().map(|partition| Term { partition, coeff: 1 }).collect()),
        }
    }

    /// Lines `-ν` for terms only on the left, `+ν` for terms only on the
    /// right, and `~ν` for coefficients other than one.
    pub fn diff(&self) -> Vec<String> {
        let right: BTreeSet<&Partition> = self.rhs.iter().map(|t| &t.partition).collect();
        let left: BTreeSet<&Partition> = self.lhs.iter().map(|t| &t.partition).collect();
        let mut out = Vec::new();
        for t in &self.lhs {
            if !right.contains(&t.partition) {
                out.push(format!("-{} ({})", t.partition, t.coeff));
            } else if t.coeff != 1 {
                out.push(format!("~{} ({})", t.partition, t.coeff));
            }
        }
        for t in &self.rhs {
            if !left.contains(&t.partition) {
                out.push(format!("+{}", t.partition));
            }
        }
        out
    }
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let i = &self.instance;
        write!(f, "{} n={} r={}", self.conjecture, i.n, i.r)?;
        if let Some(b) = i.b {
            write!(f, " b={b}")?;
        }
        write!(f, " λ={}: {}", i.lambda, if self.matched { "match" } else { "MISMATCH" })?;
        for line in self.diff() {
            write!(f, "\n  {line}")?;
        }
        Ok(())
    }
}

/// `R'_r`: the rectangle `(r^{n-r})` without its corner.
pub fn rectangle_minus_corner(r: usize, n: usize) -> Result<Partition> {
    let rect = rectangle_checked(r, n)?;
    let mut parts = rect.into_parts();
    *parts.last_mut().expect("nonempty rectangle") -= 1;
    Partition::new(parts)
}

/// Both sides of the affine Monk formula for `ξ_{R'_r} ξ_λ`.
pub fn affine_monk_check(r: usize, lam: &Partition, n: usize) -> Result<Report> {
    check_bounded(lam, n)?;
    let lhs = homology_product(&rectangle_minus_corner(r, n)?, lam, n)?;
    let rhs = length_one_targets(lam, r, n)?
        .into_iter()
        .map(|c| c.c_inverse())
        .collect();
    let instance = Instance {
        n,
        r,
        b: None,
        lambda: lam.clone(),
    };
    Ok(Report::new("affine-monk", instance, lhs, rhs))
}

/// Both sides of the rectangle Pieri expansion of
/// `ξ_{(r^{n-1-r}, r-b)} ξ_λ` against ribbon strong strips of length `b`.
pub fn rect_pieri_check(r: usize, b: usize, lam: &Partition, n: usize, rule: HeadRule) -> Result<Report> {
    check_modulus(n)?;
    check_bounded(lam, n)?;
    if !(1 <= b && b < r && r < n) {
        return Err(Error::OutOfRange(format!("need 1 ≤ b < r < n, got b={b}, r={r}, n={n}")));
    }
    let mut parts = vec![r; n - 1 - r];
    parts.push(r - b);
    let mu = Partition::new(parts)?;
    let lhs = homology_product(&mu, lam, n)?;
    let rhs = ribbon_strong_strips(lam, r, b, n, rule)?
        .into_iter()
        .map(|s| s.nu.c_inverse())
        .collect();
    let instance = Instance {
        n,
        r,
        b: Some(b),
        lambda: lam.clone(),
    };
    Ok(Report::new("rect-pieri", instance, lhs, rhs))
}

/// Quantum Monk terms read off the affine Monk right-hand side for
/// `λ = sh(w)`: each `ν` is completed by the other rectangles of `sh(s_r)`
/// and inverted with [`gw_shape_inverse`].
pub fn monk_via_affine(r: usize, w: &FinitePermutation) -> Result<Vec<Option<QuantumTerm>>> {
    let n = w.n();
    let lam = sh_map(w);
    let others: Vec<usize> = (1..n).filter(|&k| k != r).collect();
    let mut out: Vec<Option<QuantumTerm>> = length_one_targets(&lam, r, n)?
        .into_iter()
        .map(|c| {
            let eta = add_rectangles(&c.c_inverse(), &others, n);
            gw_shape_inverse(&eta, n).map(|(perm, q)| QuantumTerm { perm, q })
        })
        .collect();
    out.sort();
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(v: &[usize]) -> Partition {
        Partition::new(v.to_vec()).unwrap()
    }

    fn perm(v: &[usize]) -> FinitePermutation {
        FinitePermutation::new(v.to_vec()).unwrap()
    }

    #[test]
    fn sh_of_example_permutation() {
        let lam = p(&[3, 2, 1, 1]).union(&p(&[2, 2, 2]));
        assert_eq!(sh_map(&perm(&[4, 2, 5, 3, 1])), lam);
        assert_eq!(sh_map(&FinitePermutation::longest(4)), p(&[2, 1, 1]));
        assert_eq!(sh_box(4), p(&[3, 2, 2, 1, 1, 1]));
    }

    #[test]
    fn rectangle_bookkeeping() {
        let (rest, rs) = strip_rectangles(&p(&[4, 3, 2, 2, 2, 2, 1, 1, 1, 1]), 5);
        assert_eq!(rest, p(&[3, 2]));
        assert_eq!(rs, vec![1, 2, 4]);
        assert_eq!(rectangle_minus_corner(3, 5).unwrap(), p(&[3, 2]));
    }

    #[test]
    fn gw_shape_round_trips() {
        let v = perm(&[4, 2, 3, 5, 1]);
        let d = vec![0, 0, 1, 0];
        let eta = gw_shape(&v, &d).unwrap().unwrap();
        assert_eq!(gw_shape_inverse(&eta, 5), Some((v, d)));
    }
}
