use std::collections::HashMap;

use affine_schubert::abc::enumerate_abc;
use affine_schubert::cores::{cores_up_to, partitions, partitions_bounded, NCore, Partition};
use affine_schubert::symfun::{
    dual_kschur, hall_littlewood_h, hall_pairing, kostka_foulkes, kostka_number, kschur,
    monomial_product, ptilde_in_m, ssyt, weak_kf_matrix, weak_kostka_foulkes, Basis, SymFuncT,
    TPoly, Tableau,
};

mod common;

use common::{n_stat, ptilde_by_symmetrization};

fn p(v: &[usize]) -> Partition {
    Partition::new(v.to_vec()).unwrap()
}

#[test]
fn ptilde_matches_symmetrization_in_four_variables() {
    for d in 0..=4 {
        for mu in partitions(d) {
            let oracle = ptilde_by_symmetrization(&mu);
            let ours = SymFuncT::basis_element(Basis::PTilde, mu.clone(), None, false)
                .unwrap()
                .to_basis(Basis::S, None)
                .unwrap();
            for lam in partitions(d) {
                let want = oracle.get(&lam).cloned().unwrap_or_default();
                assert_eq!(ours.coeff(&lam), want, "P̃_{mu} at s_{lam}");
            }
        }
    }
}

#[test]
fn ptilde_specializes_to_monomials() {
    for d in 1..=5 {
        for mu in partitions(d) {
            let f = ptilde_in_m(&mu).unwrap().specialize();
            let m = SymFuncT::basis_element(Basis::M, mu.clone(), None, true).unwrap();
            assert_eq!(f, m);
        }
    }
}

#[test]
fn schur_rebuilt_from_ptilde() {
    for d in 1..=5 {
        for lam in partitions(d) {
            let mut acc = SymFuncT::zero(Basis::M, d, None, false).unwrap();
            for mu in partitions(d) {
                let k = kostka_foulkes(&lam, &mu);
                acc = acc.add(&ptilde_in_m(&mu).unwrap().scale(&k)).unwrap();
            }
            for mu in partitions(d) {
                assert_eq!(acc.coeff(&mu), TPoly::constant(kostka_number(&lam, mu.parts()) as i64));
            }
        }
    }
}

#[test]
fn kostka_foulkes_specializes_and_has_monomial_diagonal() {
    for d in 1..=6 {
        for lam in partitions(d) {
            assert_eq!(kostka_foulkes(&lam, &lam), TPoly::t_pow(n_stat(&lam)));
            for mu in partitions(d) {
                let k = kostka_foulkes(&lam, &mu);
                assert_eq!(k.at_one() as u64, kostka_number(&lam, mu.parts()));
                assert!(k.terms().all(|(_, c)| c > 0));
            }
        }
    }
}

#[test]
fn dual_kschur_is_symmetric_and_unitriangular() {
    for n in 2..=5 {
        for c in cores_up_to(n, 6) {
            let d = c.degree();
            let key = c.c_inverse();
            let f = dual_kschur(&c, false).unwrap();
            assert_eq!(f.coeff(&key), TPoly::one(), "leading term of {c}");
            for (mu, _) in f.terms() {
                assert!(mu.dominated_by(&key), "{mu} not dominated by {key}");
            }
            for alpha in affine_schubert::cores::compositions_bounded(d, n - 1) {
                let sorted = Partition::from_unsorted(alpha.clone());
                let count = enumerate_abc(&c, &alpha).unwrap().len() as i64;
                assert_eq!(f.coeff(&sorted).at_one(), count, "n={n} {c} {alpha:?}");
            }
            let ft = dual_kschur(&c, true).unwrap();
            assert_eq!(ft.specialize(), f);
            for mu in partitions_bounded(d, n - 1) {
                if !mu.dominated_by(&key) {
                    assert!(weak_kostka_foulkes(&key, &mu, n).unwrap().is_zero());
                }
            }
        }
    }
}

#[test]
fn weak_kostka_counts_agree_at_one() {
    for n in 2..=5 {
        for d in 0..=7 {
            let dp = weak_kf_matrix(n, d, true);
            let gen = weak_kf_matrix(n, d, false);
            assert_eq!(gen.at_one(), *dp, "n={n} d={d}");
        }
    }
}

/// Letter `i` in `λ^i / λ^{i-1}` of the core chain.
fn tableau_of(chain: &[NCore]) -> Tableau {
    let shapes: Vec<Partition> = chain.iter().map(|c| c.shape().clone()).collect();
    Tableau::from_chain(&shapes).unwrap()
}

#[test]
fn small_cores_reduce_to_schur_functions() {
    for n in 2..=6 {
        for c in cores_up_to(n, 5).into_iter().filter(|c| c.degree() < n) {
            let lam = c.shape().clone();
            assert_eq!(lam, c.c_inverse());
            let d = lam.size();
            let s = SymFuncT::basis_element(Basis::S, lam.clone(), None, false).unwrap();
            let dual = dual_kschur(&c, true).unwrap();
            assert_eq!(dual, s.to_basis(Basis::M, None).unwrap(), "𝔖 for {c}, n={n}");
            let ks = kschur(&c, true).unwrap().to_basis(Basis::S, None).unwrap();
            assert_eq!(ks, s, "k-Schur for {c}, n={n}");
            for mu in partitions(d) {
                assert_eq!(weak_kostka_foulkes(&lam, &mu, n).unwrap(), kostka_foulkes(&lam, &mu));
                let abcs = enumerate_abc(&c, mu.parts()).unwrap();
                assert_eq!(abcs.len(), ssyt(&lam, mu.parts()).len());
                for a in abcs {
                    assert_eq!(a.off(), 0);
                    let t = tableau_of(&a.lambda_chain());
                    assert_eq!(t.weight(), mu.parts());
                    assert_eq!(a.n_cocharge().unwrap(), t.cocharge().unwrap(), "n={n}\n{a}\n{t}");
                }
            }
        }
    }
}

#[test]
fn kschur_duality_and_hall_littlewood_expansion() {
    for n in 2..=4 {
        for d in 0..=6 {
            let keys = partitions_bounded(d, n - 1);
            let cores: Vec<NCore> = keys.iter().map(|l| NCore::c_map(l, n).unwrap()).collect();
            let duals: Vec<SymFuncT> = cores.iter().map(|c| dual_kschur(c, true).unwrap()).collect();
            let ks: Vec<SymFuncT> = cores.iter().map(|c| kschur(c, true).unwrap()).collect();
            for (i, f) in duals.iter().enumerate() {
                for (j, g) in ks.iter().enumerate() {
                    let want = if i == j { TPoly::one() } else { TPoly::zero() };
                    assert_eq!(hall_pairing(f, g).unwrap(), want, "n={n} {} {}", keys[i], keys[j]);
                }
            }
            // H_μ = Σ_λ K^n_{λμ}(t) s^{(n)}_{𝔠(λ)}
            for mu in &keys {
                let h = SymFuncT::basis_element(Basis::H0t, mu.clone(), None, false).unwrap();
                let mut acc = SymFuncT::zero(Basis::H0t, d, None, false).unwrap();
                for (lam, k) in keys.iter().zip(&ks) {
                    let coeff = weak_kostka_foulkes(lam, mu, n).unwrap();
                    acc = acc.add(&k.scale(&coeff)).unwrap();
                }
                assert_eq!(acc, h, "n={n} μ={mu}");
            }
        }
    }
}

#[test]
fn pairings_of_classical_bases() {
    for d in 1..=5 {
        for lam in partitions(d) {
            let s = SymFuncT::basis_element(Basis::S, lam.clone(), None, false).unwrap();
            assert_eq!(hall_pairing(&s, &s).unwrap(), TPoly::one());
            let h = SymFuncT::basis_element(Basis::H0t, lam.clone(), None, false).unwrap();
            for nu in partitions(d) {
                let pt = SymFuncT::basis_element(Basis::PTilde, nu.clone(), None, false).unwrap();
                let want = if lam == nu { TPoly::one() } else { TPoly::zero() };
                assert_eq!(hall_pairing(&h, &pt).unwrap(), want);
            }
        }
        let a = hall_littlewood_h(&partitions(d)[0]).unwrap();
        assert_eq!(a.coeff(&partitions(d)[0]), TPoly::one());
    }
}

#[test]
fn specialization_commutes_with_basis_changes() {
    let bases = [Basis::M, Basis::H, Basis::S, Basis::PTilde, Basis::H0t];
    for d in 1..=6 {
        for lam in partitions(d) {
            for &from in &bases {
                let f = SymFuncT::basis_element(from, lam.clone(), None, false).unwrap();
                for &to in &bases {
                    let a = f.to_basis(to, None).unwrap().specialize();
                    let b = f.specialize().to_basis(to, None).unwrap();
                    let relabel = |g: SymFuncT| g.to_basis(Basis::M, None).unwrap();
                    assert_eq!(relabel(a), relabel(b), "{from}→{to} at {lam}");
                }
            }
        }
    }
    for n in 2..=4 {
        for d in 1..=5 {
            for lam in partitions_bounded(d, n - 1) {
                for basis in [Basis::DualK, Basis::K] {
                    let f = SymFuncT::basis_element(basis, lam.clone(), Some(n), false).unwrap();
                    let a = f.to_basis(Basis::M, None).unwrap().specialize();
                    let b = f.specialize().to_basis(Basis::M, None).unwrap();
                    assert_eq!(a, b);
                }
            }
        }
    }
}

/// `m_λ` expanded in `k` variables.
fn monomial_poly(lam: &Partition, k: usize) -> HashMap<Vec<u8>, i64> {
    let mut out = HashMap::new();
    let mut padded: Vec<u8> = lam.parts().iter().map(|&x| x as u8).collect();
    if padded.len() > k {
        return out;
    }
    padded.resize(k, 0);
    let mut seen = std::collections::HashSet::new();
    fn perms(v: &mut Vec<u8>, i: usize, seen: &mut std::collections::HashSet<Vec<u8>>) {
        if i == v.len() {
            seen.insert(v.clone());
            return;
        }
        for j in i..v.len() {
            v.swap(i, j);
            perms(v, i + 1, seen);
            v.swap(i, j);
        }
    }
    perms(&mut padded, 0, &mut seen);
    for e in seen {
        out.insert(e, 1);
    }
    out
}

#[test]
fn monomial_products_match_polynomial_expansion() {
    for da in 1..=3 {
        for db in 1..=3 {
            let k = da + db;
            for a in partitions(da) {
                for b in partitions(db) {
                    let pa = monomial_poly(&a, k);
                    let pb = monomial_poly(&b, k);
                    let mut prod: HashMap<Vec<u8>, i64> = HashMap::new();
                    for (ea, ca) in &pa {
                        for (eb, cb) in &pb {
                            let e: Vec<u8> = ea.iter().zip(eb).map(|(x, y)| x + y).collect();
                            *prod.entry(e).or_default() += ca * cb;
                        }
                    }
                    let ours = monomial_product(&a, &b);
                    for nu in partitions(k) {
                        let mut e: Vec<u8> = nu.parts().iter().map(|&x| x as u8).collect();
                        e.resize(k, 0);
                        let want = prod.get(&e).copied().unwrap_or(0);
                        assert_eq!(ours.get(&nu).copied().unwrap_or(0) as i64, want, "m{a}·m{b} at {nu}");
                    }
                }
            }
        }
    }
}

#[test]
fn symfunc_json_schema() {
    let f = ptilde_in_m(&p(&[1, 1])).unwrap();
    let v = serde_json::to_value(&f).unwrap();
    assert_eq!(v["basis"], "m");
    assert!(v["n"].is_null());
    assert_eq!(v["terms"][0]["partition"], serde_json::json!([1, 1]));
    assert_eq!(v["terms"][0]["coeff"], serde_json::json!({"low": -1, "coeffs": [1]}));
    let g = dual_kschur(&NCore::from_parts(&[2], 3).unwrap(), true).unwrap();
    let v = serde_json::to_value(&g).unwrap();
    assert_eq!(v["terms"][0]["coeff"], serde_json::json!([1]));
}
