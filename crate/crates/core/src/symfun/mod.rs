//! Symmetric functions of fixed degree with coefficients in `ℤ[t, t⁻¹]`.
//!
//! Every basis is stored as a coefficient map keyed by partitions and
//! converted through the Schur basis with triangular matrices:
//!
//! | basis    | element `b_μ` in Schur functions                  |
//! |----------|---------------------------------------------------|
//! | `m`      | rows of `K⁻¹` (Kostka numbers)                    |
//! | `h`      | `h_μ = Σ_λ K_{λμ} s_λ`                            |
//! | `ptilde` | rows of `K(t)⁻¹` (Kostka–Foulkes, cocharge form)  |
//! | `H0t`    | `H_μ = Σ_λ K_{λμ}(t) s_λ`                         |
//! | `dualk`  | `Σ_μ K^n_{λμ}(t) P̃_μ`, keys `λ` with `λ_1 < n`    |
//! | `k`      | dual to `dualk` under the Hall pairing, in `H0t`  |
//!
//! A value may be specialized at `t = 1`, where `P̃` becomes `m` and `H0t`
//! becomes `h`.

mod matrix;
mod tableau;
mod tpoly;

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::str::FromStr;
use std::sync::{Arc, LazyLock};

use serde::ser::SerializeStruct;
use serde::{Deserialize, Serialize, Serializer};

pub use matrix::TMatrix;
pub use tableau::{kostka_foulkes, kostka_number, ssyt, Tableau};
pub use tpoly::TPoly;

use crate::abc::{enumerate_abc, weak_kostka_foulkes_coeffs};
use crate::cores::{partitions, partitions_bounded, NCore, Partition};
use crate::error::{Error, Result};
use crate::memo::Memo;
use crate::par::{self, Exec};
use crate::strips::weak_strip_targets;

/// Basis tags.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Basis {
    #[serde(rename = "m")]
    M,
    #[serde(rename = "h")]
    H,
    #[serde(rename = "s")]
    S,
    #[serde(rename = "ptilde")]
    PTilde,
    #[serde(rename = "H0t")]
    H0t,
    #[serde(rename = "dualk")]
    DualK,
    #[serde(rename = "k")]
    K,
}

impl Basis {
    pub fn tag(self) -> &'static str {
        match self {
            Basis::M => "m",
            Basis::H => "h",
            Basis::S => "s",
            Basis::PTilde => "ptilde",
            Basis::H0t => "H0t",
            Basis::DualK => "dualk",
            Basis::K => "k",
        }
    }

    /// Bases indexed by `n`-bounded partitions.
    pub fn is_restricted(self) -> bool {
        matches!(self, Basis::DualK | Basis::K)
    }
}

impl fmt::Display for Basis {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.tag())
    }
}

impl FromStr for Basis {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Ok(match s {
            "m" => Basis::M,
            "h" => Basis::H,
            "s" => Basis::S,
            "ptilde" | "P" => Basis::PTilde,
            "H0t" | "H" => Basis::H0t,
            "dualk" => Basis::DualK,
            "k" => Basis::K,
            _ => return Err(Error::Domain(format!("unknown basis {s:?}"))),
        })
    }
}

/// A homogeneous symmetric function in a named basis.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SymFuncT {
    basis: Basis,
    n: Option<usize>,
    degree: usize,
    at_one: bool,
    terms: BTreeMap<Partition, TPoly>,
}

impl SymFuncT {
    pub fn zero(basis: Basis, degree: usize, n: Option<usize>, at_one: bool) -> Result<Self> {
        match (basis.is_restricted(), n) {
            (true, None) => return Err(Error::Domain(format!("basis {basis} needs n"))),
            (_, Some(n)) => crate::affine_weyl::check_modulus(n)?,
            _ => {}
        }
        Ok(SymFuncT {
            basis,
            n: if basis.is_restricted() { n } else { None },
            degree,
            at_one,
            terms: BTreeMap::new(),
        })
    }

    /// The single basis element indexed by `lam`.
    pub fn basis_element(basis: Basis, lam: Partition, n: Option<usize>, at_one: bool) -> Result<Self> {
        let mut f = SymFuncT::zero(basis, lam.size(), n, at_one)?;
        f.insert(lam, TPoly::one())?;
        Ok(f)
    }

    /// Adds `c` to the coefficient of `lam`.
    pub fn insert(&mut self, lam: Partition, c: TPoly) -> Result<()> {
        if lam.size() != self.degree {
            return Err(Error::Domain(format!("{lam} has size other than {}", self.degree)));
        }
        if let Some(n) = self.n {
            if lam.first() >= n {
                return Err(Error::PartOutOfRange { part: lam.first(), n });
            }
        }
        let slot = self.terms.entry(lam).or_default();
        *slot += &c;
        self.terms.retain(|_, v| !v.is_zero());
        Ok(())
    }

    pub fn basis(&self) -> Basis {
        self.basis
    }

    pub fn n(&self) -> Option<usize> {
        self.n
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn is_at_one(&self) -> bool {
        self.at_one
    }

    pub fn coeff(&self, lam: &Partition) -> TPoly {
        self.terms.get(lam).cloned().unwrap_or_default()
    }

    /// Nonzero terms, largest partition first.
    pub fn terms(&self) -> impl Iterator<Item = (&Partition, &TPoly)> {
        self.terms.iter().rev()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Evaluation at `t = 1`.
    pub fn specialize(&self) -> SymFuncT {
        SymFuncT {
            at_one: true,
            terms: self
                .terms
                .iter()
                .map(|(k, v)| (k.clone(), TPoly::constant(v.at_one())))
                .filter(|(_, v)| !v.is_zero())
                .collect(),
            ..self.clone()
        }
    }

    fn keys(&self) -> Vec<Partition> {
        index_set(self.basis, self.degree, self.n)
    }

    fn vector(&self) -> Vec<TPoly> {
        self.keys().iter().map(|k| self.coeff(k)).collect()
    }

    fn from_vector(basis: Basis, degree: usize, n: Option<usize>, at_one: bool, v: Vec<TPoly>) -> Self {
        let keys = index_set(basis, degree, n);
        SymFuncT {
            basis,
            n: if basis.is_restricted() { n } else { None },
            degree,
            at_one,
            terms: keys.into_iter().zip(v).filter(|(_, c)| !c.is_zero()).collect(),
        }
    }

    /// Re-expresses this function in `target`; restricted targets need `n`
    /// and fail when the function is outside their span.
    pub fn to_basis(&self, target: Basis, n: Option<usize>) -> Result<SymFuncT> {
        let n = if target.is_restricted() {
            Some(n.or(self.n).ok_or_else(|| Error::Domain(format!("basis {target} needs n")))?)
        } else {
            None
        };
        if target == self.basis && n == self.n {
            return Ok(self.clone());
        }
        let (d, one) = (self.degree, self.at_one);
        // direct routes that avoid the full Schur tables
        match (self.basis, target) {
            (Basis::DualK, Basis::PTilde) => {
                let m = weak_kf_matrix(self.n.expect("restricted"), d, one);
                let p = m.left_apply(&self.vector());
                return Ok(embed(Basis::PTilde, d, self.n, one, p));
            }
            (Basis::K, Basis::H0t) => {
                let b = kschur_matrix(self.n.expect("restricted"), d, one)?;
                let p = b.left_apply(&self.vector());
                return Ok(embed(Basis::H0t, d, self.n, one, p));
            }
            (Basis::DualK, Basis::M) if one => {
                return self.to_basis(Basis::PTilde, None).map(|f| f.relabel(Basis::M));
            }
            (Basis::K, Basis::H) if one => {
                return self.to_basis(Basis::H0t, None).map(|f| f.relabel(Basis::H));
            }
            (Basis::PTilde, Basis::DualK) | (Basis::M, Basis::DualK) if one || self.basis == Basis::PTilde => {
                let n = n.expect("restricted");
                let p = restrict(self, n)?;
                let inv = weak_kf_inverse(n, d, one)?;
                return Ok(SymFuncT::from_vector(Basis::DualK, d, Some(n), one, inv.left_apply(&p)));
            }
            (Basis::H0t, Basis::K) | (Basis::H, Basis::K) if one || self.basis == Basis::H0t => {
                let n = n.expect("restricted");
                let p = restrict(self, n)?;
                let kt = weak_kf_matrix(n, d, one).transpose();
                return Ok(SymFuncT::from_vector(Basis::K, d, Some(n), one, kt.left_apply(&p)));
            }
            _ => {}
        }
        let s = self.schur_vector()?;
        match target {
            Basis::DualK => self.via(Basis::PTilde, s)?.to_basis(Basis::DualK, n),
            Basis::K => self.via(Basis::H0t, s)?.to_basis(Basis::K, n),
            _ => {
                let v = from_schur(target, d, one, &s)?;
                Ok(SymFuncT::from_vector(target, d, None, one, v))
            }
        }
    }

    fn via(&self, basis: Basis, s: Vec<TPoly>) -> Result<SymFuncT> {
        let v = from_schur(basis, self.degree, self.at_one, &s)?;
        Ok(SymFuncT::from_vector(basis, self.degree, None, self.at_one, v))
    }

    fn relabel(mut self, basis: Basis) -> SymFuncT {
        self.basis = basis;
        self
    }

    /// Coefficients in the Schur basis, over `partitions(degree)`.
    fn schur_vector(&self) -> Result<Vec<TPoly>> {
        let d = self.degree;
        let one = self.at_one;
        match self.basis {
            Basis::DualK => self.to_basis(Basis::PTilde, None)?.schur_vector(),
            Basis::K => self.to_basis(Basis::H0t, None)?.schur_vector(),
            b => Ok(to_schur_matrix(b, d, one)?.left_apply(&self.vector())),
        }
    }

    /// `self + other`, in the basis of `self`.
    pub fn add(&self, other: &SymFuncT) -> Result<SymFuncT> {
        let other = other.to_basis(self.basis, self.n)?;
        let mut out = self.clone();
        for (k, v) in other.terms {
            out.insert(k, v)?;
        }
        Ok(out)
    }

    pub fn scale(&self, c: &TPoly) -> SymFuncT {
        SymFuncT {
            terms: self
                .terms
                .iter()
                .map(|(k, v)| (k.clone(), v * c))
                .filter(|(_, v)| !v.is_zero())
                .collect(),
            ..self.clone()
        }
    }

    /// The product, returned in the monomial basis.
    pub fn mul(&self, other: &SymFuncT) -> Result<SymFuncT> {
        let (a, b) = align(self, other);
        let a = a.to_basis(Basis::M, None)?;
        let b = b.to_basis(Basis::M, None)?;
        let mut out = SymFuncT::zero(Basis::M, a.degree + b.degree, None, a.at_one)?;
        for (la, ca) in &a.terms {
            for (lb, cb) in &b.terms {
                let c = ca * cb;
                for (nu, k) in monomial_product(la, lb) {
                    out.insert(nu, c.scale(k as i64))?;
                }
            }
        }
        Ok(out)
    }
}

fn align(a: &SymFuncT, b: &SymFuncT) -> (SymFuncT, SymFuncT) {
    if a.at_one == b.at_one {
        (a.clone(), b.clone())
    } else {
        (a.specialize(), b.specialize())
    }
}

fn embed(basis: Basis, d: usize, n: Option<usize>, one: bool, restricted: Vec<TPoly>) -> SymFuncT {
    let keys = partitions_bounded(d, n.expect("restricted") - 1);
    let mut terms = BTreeMap::new();
    for (k, c) in keys.into_iter().zip(restricted) {
        if !c.is_zero() {
            terms.insert(k, c);
        }
    }
    SymFuncT {
        basis,
        n: None,
        degree: d,
        at_one: one,
        terms,
    }
}

fn restrict(f: &SymFuncT, n: usize) -> Result<Vec<TPoly>> {
    if let Some((k, _)) = f.terms.iter().find(|(k, _)| k.first() >= n) {
        return Err(Error::Domain(format!(
            "not in the {n}-bounded span: {} term {k}",
            f.basis
        )));
    }
    Ok(partitions_bounded(f.degree, n - 1)
        .iter()
        .map(|k| f.coeff(k))
        .collect())
}

fn index_set(basis: Basis, degree: usize, n: Option<usize>) -> Vec<Partition> {
    match (basis.is_restricted(), n) {
        (true, Some(n)) => partitions_bounded(degree, n - 1),
        _ => partitions(degree),
    }
}

/// Coefficient of `m_ν` in `m_a m_b`.
pub fn monomial_product(a: &Partition, b: &Partition) -> BTreeMap<Partition, u64> {
    let mut out = BTreeMap::new();
    let total = a.size() + b.size();
    let len_cap = a.len() + b.len();
    for nu in partitions(total) {
        if nu.len() > len_cap || nu.len() < a.len().max(b.len()) {
            continue;
        }
        let mut count = 0u64;
        let mut padded = a.parts().to_vec();
        padded.resize(nu.len(), 0);
        for alpha in distinct_permutations(&padded) {
            let mut beta = Vec::with_capacity(nu.len());
            let mut ok = true;
            for (x, y) in nu.parts().iter().zip(&alpha) {
                if x < y {
                    ok = false;
                    break;
                }
                beta.push(x - y);
            }
            if ok && Partition::from_unsorted(beta) == *b {
                count += 1;
            }
        }
        if count > 0 {
            out.insert(nu, count);
        }
    }
    out
}

fn distinct_permutations(v: &[usize]) -> Vec<Vec<usize>> {
    let mut counts: BTreeMap<usize, usize> = BTreeMap::new();
    for &x in v {
        *counts.entry(x).or_default() += 1;
    }
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(v.len());
    fn go(counts: &mut BTreeMap<usize, usize>, len: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == len {
            out.push(cur.clone());
            return;
        }
        let keys: Vec<usize> = counts.iter().filter(|(_, &c)| c > 0).map(|(&k, _)| k).collect();
        for k in keys {
            *counts.get_mut(&k).expect("key") -= 1;
            cur.push(k);
            go(counts, len, cur, out);
            cur.pop();
            *counts.get_mut(&k).expect("key") += 1;
        }
    }
    go(&mut counts, v.len(), &mut cur, &mut out);
    out
}

// ---- transition tables ----

type Table = Memo<(usize, usize, bool), TMatrix>;

static KOSTKA: LazyLock<Memo<usize, TMatrix>> = LazyLock::new(Memo::new);
static KOSTKA_FOULKES: LazyLock<Memo<usize, TMatrix>> = LazyLock::new(Memo::new);
static INVERSES: LazyLock<Memo<(u8, usize), TMatrix>> = LazyLock::new(Memo::new);
static WEAK_KF: LazyLock<Table> = LazyLock::new(Memo::new);
static WEAK_KF_INV: LazyLock<Table> = LazyLock::new(Memo::new);

/// `K_{λμ}` over `partitions(d)`; upper triangular.
pub fn kostka_matrix(d: usize) -> Arc<TMatrix> {
    KOSTKA.get_or_insert_with(&d, || {
        let ps = partitions(d);
        TMatrix::from_fn(ps.len(), |i, j| {
            TPoly::constant(kostka_number(&ps[i], ps[j].parts()) as i64)
        })
    })
}

/// `K_{λμ}(t)` over `partitions(d)`; upper triangular with diagonal `t^{n(λ)}`.
pub fn kostka_foulkes_matrix(d: usize) -> Arc<TMatrix> {
    KOSTKA_FOULKES.get_or_insert_with(&d, || {
        let ps = partitions(d);
        let rows = par::map(Exec::default(), ps.clone(), |lam| {
            ps.iter().map(|mu| kostka_foulkes(&lam, mu)).collect::<Vec<_>>()
        });
        TMatrix::from_fn(ps.len(), |i, j| rows[i][j].clone())
    })
}

fn classical(d: usize, one: bool) -> Arc<TMatrix> {
    if one {
        kostka_matrix(d)
    } else {
        kostka_foulkes_matrix(d)
    }
}

fn classical_inverse(d: usize, one: bool) -> Result<Arc<TMatrix>> {
    // diagonals are t^{n(λ)} (or 1), always units
    Ok(INVERSES.get_or_insert_with(&(u8::from(!one), d), || {
        classical(d, one)
            .inverse_triangular()
            .expect("Kostka matrices are unitriangular up to units")
    }))
}

/// Rows: basis elements; columns: Schur functions.
fn to_schur_matrix(basis: Basis, d: usize, one: bool) -> Result<TMatrix> {
    Ok(match basis {
        Basis::S => TMatrix::identity(partitions(d).len()),
        Basis::M => (*classical_inverse(d, true)?).clone(),
        Basis::H => kostka_matrix(d).transpose(),
        Basis::PTilde => (*classical_inverse(d, one)?).clone(),
        Basis::H0t => classical(d, one).transpose(),
        Basis::DualK | Basis::K => unreachable!("restricted bases route through P̃ or H0t"),
    })
}

fn from_schur(basis: Basis, d: usize, one: bool, s: &[TPoly]) -> Result<Vec<TPoly>> {
    let m = match basis {
        Basis::S => return Ok(s.to_vec()),
        Basis::M => (*kostka_matrix(d)).clone(),
        Basis::H => classical_inverse(d, true)?.transpose(),
        Basis::PTilde => (*classical(d, one)).clone(),
        Basis::H0t => classical_inverse(d, one)?.transpose(),
        Basis::DualK | Basis::K => unreachable!("restricted bases route through P̃ or H0t"),
    };
    Ok(m.left_apply(s))
}

/// `K^n_{λμ}(t)` over `partitions_bounded(d, n-1)`; at `t = 1` the counts
/// come from chains of weak strips.
pub fn weak_kf_matrix(n: usize, d: usize, one: bool) -> Arc<TMatrix> {
    WEAK_KF.get_or_insert_with(&(n, d, one), || {
        let ps = partitions_bounded(d, n - 1);
        if one {
            let cols = par::map(Exec::default(), ps.clone(), |mu| weak_chain_counts(n, mu.parts()));
            let cores: Vec<NCore> = ps
                .iter()
                .map(|l| NCore::c_map(l, n).expect("bounded partitions have cores"))
                .collect();
            TMatrix::from_fn(ps.len(), |i, j| {
                TPoly::constant(cols[j].get(&cores[i]).copied().unwrap_or(0) as i64)
            })
        } else {
            let rows = par::map(Exec::default(), ps.clone(), |lam| {
                ps.iter()
                    .map(|mu| {
                        TPoly::from_coeffs(
                            weak_kostka_foulkes_coeffs(&lam, mu, n).expect("bounded inputs"),
                        )
                    })
                    .collect::<Vec<_>>()
            });
            TMatrix::from_fn(ps.len(), |i, j| rows[i][j].clone())
        }
    })
}

fn weak_kf_inverse(n: usize, d: usize, one: bool) -> Result<Arc<TMatrix>> {
    let m = weak_kf_matrix(n, d, one);
    if let Some(k) = (0..m.size()).find(|&i| m.get(i, i).unit_inverse().is_none()) {
        return Err(Error::NotInvertible(format!(
            "K^{n} diagonal entry {k} is {}",
            m.get(k, k)
        )));
    }
    Ok(WEAK_KF_INV.get_or_insert_with(&(n, d, one), || {
        m.inverse_triangular().expect("checked unit diagonal")
    }))
}

/// Rows: k-Schur functions; columns: `H0t` (or `h` at `t = 1`).
fn kschur_matrix(n: usize, d: usize, one: bool) -> Result<TMatrix> {
    Ok(weak_kf_inverse(n, d, one)?.transpose())
}

/// Number of weak-strip chains `∅ → c` with step sizes `weight`, per core.
pub fn weak_chain_counts(n: usize, weight: &[usize]) -> HashMap<NCore, u64> {
    let mut level: HashMap<NCore, u64> = HashMap::from([(NCore::empty(n), 1)]);
    for &m in weight {
        let mut next: HashMap<NCore, u64> = HashMap::new();
        for (c, k) in &level {
            for u in weak_strip_targets(c, m).expect("parts below n") {
                *next.entry(u).or_default() += k;
            }
        }
        level = next;
    }
    level
}

// ---- named functions ----

/// `P̃_μ(x; t)` in the monomial basis.
pub fn ptilde_in_m(mu: &Partition) -> Result<SymFuncT> {
    SymFuncT::basis_element(Basis::PTilde, mu.clone(), None, false)?.to_basis(Basis::M, None)
}

/// `H_μ(x; 0, t)` in the Schur basis.
pub fn hall_littlewood_h(mu: &Partition) -> Result<SymFuncT> {
    SymFuncT::basis_element(Basis::H0t, mu.clone(), None, false)?.to_basis(Basis::S, None)
}

/// `K^n_{λμ}(t)`; zero on a size mismatch.
pub fn weak_kostka_foulkes(lam: &Partition, mu: &Partition, n: usize) -> Result<TPoly> {
    crate::affine_weyl::check_modulus(n)?;
    for p in [lam, mu] {
        if p.first() >= n {
            return Err(Error::PartOutOfRange { part: p.first(), n });
        }
    }
    if lam.size() != mu.size() {
        return Ok(TPoly::zero());
    }
    Ok(TPoly::from_coeffs(weak_kostka_foulkes_coeffs(lam, mu, n)?))
}

/// `𝔖^{(n)}_λ(x; t)` in the monomial basis. With `t_on = false` this is the
/// weight generating function of `ABC(λ)`.
pub fn dual_kschur(lam: &NCore, t_on: bool) -> Result<SymFuncT> {
    let key = lam.c_inverse();
    SymFuncT::basis_element(Basis::DualK, key, Some(lam.n()), !t_on)?.to_basis(Basis::M, None)
}

/// `x^α` coefficient of `𝔖^{(n)}_λ` at `t = 1`: the number of ABCs of
/// weight `α`, for any composition `α`.
pub fn dual_kschur_monomial_coefficient(lam: &NCore, alpha: &[usize]) -> Result<usize> {
    Ok(enumerate_abc(lam, alpha)?.len())
}

/// `s^{(n)}_ν(x; t)` in `H0t`, or in `h` when `t_on = false`.
pub fn kschur(nu: &NCore, t_on: bool) -> Result<SymFuncT> {
    let key = nu.c_inverse();
    let e = SymFuncT::basis_element(Basis::K, key, Some(nu.n()), !t_on)?;
    e.to_basis(if t_on { Basis::H0t } else { Basis::H }, None)
}

/// `⟨f, g⟩` with `⟨h_λ, m_μ⟩ = δ_{λμ}`; zero on a degree mismatch.
pub fn hall_pairing(f: &SymFuncT, g: &SymFuncT) -> Result<TPoly> {
    if f.degree != g.degree {
        return Ok(TPoly::zero());
    }
    let (f, g) = align(f, g);
    let fh = f.to_basis(Basis::H, None)?;
    let gm = g.to_basis(Basis::M, None)?;
    let mut acc = TPoly::zero();
    for (k, c) in &fh.terms {
        acc += &(c * &gm.coeff(k));
    }
    Ok(acc)
}

impl Serialize for SymFuncT {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct Term<'a> {
            partition: &'a Partition,
            coeff: &'a TPoly,
        }
        let terms: Vec<Term<'_>> = self
            .terms()
            .map(|(partition, coeff)| Term { partition, coeff })
            .collect();
        let mut st = s.serialize_struct("SymFuncT", if self.at_one { 4 } else { 3 })?;
        st.serialize_field("basis", &self.basis)?;
        st.serialize_field("n", &self.n)?;
        st.serialize_field("terms", &terms)?;
        if self.at_one {
            st.serialize_field("t", &1)?;
        }
        st.end()
    }
}

impl fmt::Display for SymFuncT {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .terms()
            .map(|(k, c)| {
                let c = if c.terms().count() > 1 { format!("({c})") } else { c.to_string() };
                format!("{c}·{}{k}", self.basis)
            })
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}
