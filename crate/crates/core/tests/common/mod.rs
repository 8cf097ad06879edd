//! Oracles shared by several test targets.
#![allow(dead_code)]

use std::collections::{BTreeMap, HashMap};

use affine_schubert::cores::{NCore, Partition};
use affine_schubert::symfun::{dual_kschur, Basis, SymFuncT, TPoly};

fn p(v: &[usize]) -> Partition {
    Partition::new(v.to_vec()).unwrap()
}

pub fn n_stat(lam: &Partition) -> i32 {
    lam.parts().iter().enumerate().map(|(i, &x)| (i * x) as i32).sum()
}

// ---- multivariate polynomials over ℤ[t] in four variables ----

pub type Poly = HashMap<[u8; 4], TPoly>;

pub fn poly_mul(a: &Poly, b: &Poly) -> Poly {
    let mut out: Poly = HashMap::new();
    for (ea, ca) in a {
        for (eb, cb) in b {
            let e = [ea[0] + eb[0], ea[1] + eb[1], ea[2] + eb[2], ea[3] + eb[3]];
            *out.entry(e).or_default() += &(ca * cb);
        }
    }
    out.retain(|_, c| !c.is_zero());
    out
}

pub fn permutations4() -> Vec<([usize; 4], i64)> {
    let mut out = Vec::new();
    for a in 0..4 {
        for b in 0..4 {
            for c in 0..4 {
                for d in 0..4 {
                    let w = [a, b, c, d];
                    let mut seen = [false; 4];
                    if w.iter().all(|&x| !std::mem::replace(&mut seen[x], true)) {
                        let inv = (0..4).flat_map(|i| (i + 1..4).map(move |j| (i, j))).filter(|&(i, j)| w[i] > w[j]).count();
                        out.push((w, if inv % 2 == 0 { 1 } else { -1 }));
                    }
                }
            }
        }
    }
    out
}

/// Exact quotient of Laurent polynomials by a polynomial with unit leading
/// coefficient.
pub fn div_exact(num: &TPoly, den: &TPoly) -> TPoly {
    let mut rem = num.clone();
    let mut q = TPoly::zero();
    let dd = den.degree().unwrap();
    let lead = den.coeff(dd);
    assert_eq!(lead.abs(), 1);
    while !rem.is_zero() {
        let rd = rem.degree().unwrap();
        let c = rem.coeff(rd) * lead;
        let term = TPoly::monomial(c, rd - dd);
        rem -= &(&term * den);
        q += &term;
        assert!(rem.is_zero() || rem.degree().unwrap() < rd);
        assert!(rem.is_zero() || rem.degree().unwrap() >= rem.low_degree().unwrap());
        if !rem.is_zero() && rem.degree().unwrap() < num.low_degree().unwrap() + den.low_degree().unwrap() - 1 {
            panic!("inexact division");
        }
    }
    q
}

/// `P̃_λ` in Schur functions, by symmetrizing in four variables.
pub fn ptilde_by_symmetrization(lam: &Partition) -> HashMap<Partition, TPoly> {
    let mut exps = [0u8; 4];
    for (i, &x) in lam.parts().iter().enumerate() {
        exps[i] = x as u8;
    }
    let mut base: Poly = HashMap::from([(exps, TPoly::one())]);
    for i in 0..4 {
        for j in i + 1..4 {
            let mut ei = [0u8; 4];
            ei[i] = 1;
            let mut ej = [0u8; 4];
            ej[j] = 1;
            let f: Poly = HashMap::from([(ei, TPoly::one()), (ej, TPoly::monomial(-1, 1))]);
            base = poly_mul(&base, &f);
        }
    }
    // Σ_w sgn(w) w(base) is antisymmetric; read a_β coefficients
    let mut anti: Poly = HashMap::new();
    for (w, sign) in permutations4() {
        for (e, c) in &base {
            let mut we = [0u8; 4];
            for k in 0..4 {
                we[w[k]] = e[k];
            }
            *anti.entry(we).or_default() += &c.scale(sign);
        }
    }
    // v_λ(t) over multiplicities including zeros
    let mut mult: HashMap<usize, usize> = HashMap::new();
    for i in 0..4 {
        *mult.entry(lam.row(i + 1)).or_default() += 1;
    }
    let mut v = TPoly::one();
    for &m in mult.values() {
        for i in 1..=m {
            v = &v * &TPoly::from_coeffs(vec![1; i]);
        }
    }
    let mut out = HashMap::new();
    for (e, c) in anti {
        if c.is_zero() || !(e[0] > e[1] && e[1] > e[2] && e[2] > e[3]) {
            continue;
        }
        let shape = p(&[e[0] as usize - 3, e[1] as usize - 2, e[2] as usize - 1, e[3] as usize]);
        let pc = div_exact(&c, &v);
        let tilde = pc.invert_variable().shift(-n_stat(lam));
        out.insert(shape, tilde);
    }
    out
}

/// `h_m 𝔖_w` in the monomial basis, with every `m_λ`, `λ_1 ≥ n`, dropped
/// and the rest re-expanded in dual k-Schurs.
pub fn quotient_product(m: usize, w: &NCore) -> BTreeMap<NCore, i64> {
    let n = w.n();
    let hm = SymFuncT::basis_element(Basis::H, p(&[m]), None, true).unwrap();
    let f = dual_kschur(w, false).unwrap();
    let prod = hm.mul(&f).unwrap();
    let d = prod.degree();
    let mut reduced = SymFuncT::zero(Basis::M, d, None, true).unwrap();
    for (lam, c) in prod.terms() {
        if lam.first() < n {
            reduced.insert(lam.clone(), c.clone()).unwrap();
        }
    }
    let dual = reduced.to_basis(Basis::DualK, Some(n)).unwrap();
    dual.terms()
        .map(|(lam, c)| (NCore::c_map(lam, n).unwrap(), c.at_one()))
        .filter(|(_, c)| *c != 0)
        .collect()
}

