use std::collections::BTreeSet;

use affine_schubert::affine_weyl::AffinePermutation;
use affine_schubert::cores::{cores_up_to, partitions_bounded, residue, NCore, Partition};
use affine_schubert::par::Exec;
use affine_schubert::strips::{
    col_r, horizontal_chains_from, horizontal_strong_strip, horizontal_strong_strips_from,
    length_one_targets, marked_strong_covers, phi, psi, ribbon_strong_strips, strong_ribbon_targets,
    strong_strips, strong_strips_from, weak_strip_targets, HeadRule,
};
use affine_schubert::sweeps::prop_main;
use proptest::prelude::*;

fn core(parts: &[usize], n: usize) -> NCore {
    NCore::from_parts(parts, n).unwrap()
}

fn p(v: &[usize]) -> Partition {
    Partition::new(v.to_vec()).unwrap()
}

fn bounded_up_to(n: usize, max_deg: usize) -> Vec<Partition> {
    (0..=max_deg).flat_map(|d| partitions_bounded(d, n - 1)).collect()
}

#[test]
fn strong_example_chains_and_strip() {
    let nu = core(&[3], 4);
    let gamma = core(&[4, 1, 1], 4);
    let strips = strong_strips(&nu, &gamma, 2);
    assert_eq!(strips.len(), 1);
    assert_eq!(strips[0].contents, vec![-1, 3]);
    assert_eq!(strips[0].chain.len(), 3);
}

/// Marked chains counted by walking covers upward, checking marks only at
/// the end.
fn brute_strong_strips(nu: &NCore, m: usize) -> Vec<(NCore, Vec<i64>)> {
    fn go(cur: &NCore, left: usize, marks: &mut Vec<i64>, out: &mut Vec<(NCore, Vec<i64>)>) {
        if left == 0 {
            if marks.windows(2).all(|p| p[0] < p[1]) {
                out.push((cur.clone(), marks.clone()));
            }
            return;
        }
        for (up, c) in marked_strong_covers(cur) {
            marks.push(c);
            go(&up, left - 1, marks, out);
            marks.pop();
        }
    }
    let mut out = Vec::new();
    go(nu, m, &mut Vec::new(), &mut out);
    out.sort();
    out
}

#[test]
fn strong_strips_match_brute_force() {
    for n in 2..=4 {
        for c in cores_up_to(n, 5) {
            for m in 0..n {
                let mut ours: Vec<(NCore, Vec<i64>)> = strong_strips_from(&c, m)
                    .into_iter()
                    .map(|s| (s.end().clone(), s.contents))
                    .collect();
                ours.sort();
                assert_eq!(ours, brute_strong_strips(&c, m), "n={n} {c} m={m}");
            }
        }
    }
}

#[test]
fn horizontal_example_targets_and_contents() {
    let lam = core(&[3, 1, 1], 4);
    let strips = horizontal_strong_strips_from(&lam, 2).unwrap();
    let got: BTreeSet<(Partition, Vec<i64>)> = strips
        .iter()
        .map(|s| (s.nu.shape().clone(), s.contents()))
        .collect();
    let want: BTreeSet<(Partition, Vec<i64>)> = [
        (p(&[3, 1, 1, 1]), vec![3, 5]),
        (p(&[4, 1, 1]), vec![4, 5]),
        (p(&[3, 2, 1]), vec![4, 5]),
    ]
    .into_iter()
    .collect();
    assert_eq!(got, want);
    assert!(horizontal_strong_strip(&core(&[1, 1], 4), &core(&[3], 4)).is_none());
}

/// Cyclically decreasing `v` of length `m` with `v w_λ` Grassmannian is
/// the same as `ν / λ` a horizontal strip on `m` distinct residues.
fn shape_weak_targets(lam: &NCore, m: usize) -> BTreeSet<NCore> {
    let n = lam.n();
    cores_up_to(n, lam.degree() + m)
        .into_iter()
        .filter(|nu| nu.degree() == lam.degree() + m)
        .filter(|nu| nu.shape().is_horizontal_strip_over(lam.shape()))
        .filter(|nu| {
            let res: BTreeSet<usize> = nu
                .shape()
                .skew_cells(lam.shape())
                .into_iter()
                .map(|c| residue(c, n))
                .collect();
            res.len() == m
        })
        .collect()
}

#[test]
fn weak_targets_are_distinct_residue_horizontal_strips() {
    for n in 2..=5 {
        for c in cores_up_to(n, 6) {
            for m in 1..n {
                let ours: BTreeSet<NCore> = weak_strip_targets(&c, m).unwrap().into_iter().collect();
                assert_eq!(ours, shape_weak_targets(&c, m), "n={n} {c} m={m}");
            }
        }
    }
}

#[test]
fn horizontal_strips_are_strong_chains_with_growing_bottom_rows() {
    for n in 2..=5 {
        for c in cores_up_to(n, 6) {
            for m in 0..n {
                for (nu, chains) in horizontal_chains_from(&c, m) {
                    assert_eq!(chains.len(), 1, "unique chain for n={n} {c} → {nu}");
                    let chain = &chains[0];
                    assert_eq!(chain[0], c.core_translation());
                    for pair in chain.windows(2) {
                        let down = pair[0].strong_covers_down();
                        assert!(down.iter().any(|cov| cov.core == pair[1]));
                        assert!(pair[1].shape().first() < pair[0].shape().first());
                    }
                    assert!(nu.shape().contains(c.shape()));
                }
            }
        }
    }
}

#[test]
fn prop_main_sweep_up_to_degree_seven() {
    let summary = prop_main(5, 7, Exec::default()).unwrap();
    assert!(summary.passed(), "{:?}", summary.mismatches);
    assert!(summary.strips > 0);
}

#[test]
fn ribbon_strips_with_r_n_minus_one_are_horizontal_strips() {
    for n in 2..=5 {
        for lam in bounded_up_to(n, 6) {
            let c = NCore::c_map(&lam, n).unwrap();
            for b in 0..n {
                let horizontal: BTreeSet<NCore> = horizontal_strong_strips_from(&c, b)
                    .unwrap()
                    .into_iter()
                    .map(|s| s.nu)
                    .collect();
                let ribbon: BTreeSet<NCore> = ribbon_strong_strips(&lam, n - 1, b, n, HeadRule::AboveBase)
                    .unwrap()
                    .into_iter()
                    .map(|s| s.nu)
                    .collect();
                assert_eq!(ribbon, horizontal, "n={n} λ={lam} b={b}");
            }
        }
    }
}

#[test]
fn length_one_ribbon_strips_both_directions() {
    for n in 2..=5 {
        for lam in bounded_up_to(n, 7) {
            for r in 1..n {
                let ribbon: BTreeSet<NCore> = ribbon_strong_strips(&lam, r, 1, n, HeadRule::AboveBase)
                    .unwrap()
                    .into_iter()
                    .map(|s| s.nu)
                    .collect();
                let criterion: BTreeSet<NCore> = length_one_targets(&lam, r, n).unwrap().into_iter().collect();
                assert_eq!(ribbon, criterion, "n={n} λ={lam} r={r}");
            }
        }
    }
}

#[test]
fn rect_example_strips() {
    let lam = p(&[4, 2]);
    assert_eq!(col_r(&lam, 3, 5).unwrap(), vec![1, 2, 3]);
    let strips = ribbon_strong_strips(&lam, 3, 2, 5, HeadRule::AboveBase).unwrap();
    let bounded: BTreeSet<Partition> = strips.iter().map(|s| s.nu.c_inverse()).collect();
    let want: BTreeSet<Partition> = [p(&[4, 4, 1, 1]), p(&[4, 3, 3]), p(&[4, 3, 2, 1])].into_iter().collect();
    assert_eq!(bounded, want);
    assert_eq!(strips.iter().map(|s| s.chains.len()).sum::<usize>(), 4);
    // reading the head rule against the previous shape admits one more
    let loose = ribbon_strong_strips(&lam, 3, 2, 5, HeadRule::AbovePrevious).unwrap();
    assert_eq!(loose.len(), 4);
}

#[test]
fn ribbon_strips_against_marked_strong_strips() {
    let mut differ = Vec::new();
    let mut total = 0;
    for n in 3..=5 {
        for lam in bounded_up_to(n, 7) {
            for r in 1..n {
                for b in 1..n {
                    let ribbon: BTreeSet<NCore> = ribbon_strong_strips(&lam, r, b, n, HeadRule::AboveBase)
                        .unwrap()
                        .into_iter()
                        .map(|s| s.nu)
                        .collect();
                    let strong: BTreeSet<NCore> = strong_ribbon_targets(&lam, r, b, n).unwrap().into_iter().collect();
                    total += 1;
                    if ribbon != strong {
                        // at r = n-1 both sides are horizontal strong strips
                        assert_ne!(r, n - 1, "n={n} λ={lam} b={b}");
                        differ.push(format!("n={n} λ={lam} r={r} b={b}"));
                    }
                }
            }
        }
    }
    // recorded rather than asserted: this characterization is open
    println!("ribbon vs marked strong strips: {} of {total} instances differ: {differ:?}", differ.len());
}

proptest! {
    #[test]
    fn psi_phi_round_trip(n in 2usize..6, pick in 0usize..1000, m in 0usize..5) {
        let cores = cores_up_to(n, 7);
        let lam = &cores[pick % cores.len()];
        let m = m % n;
        for s in horizontal_strong_strips_from(lam, m).unwrap() {
            let word = psi(&s);
            prop_assert_eq!(word.len(), n - 1 - m);
            prop_assert_eq!(&phi(&word, lam).unwrap(), &s);
            let v = AffinePermutation::from_word(&word, n).unwrap();
            prop_assert!(v.is_cyclically_decreasing());
            prop_assert_eq!(v.compose(&lam.to_affine()), s.nu.to_affine());
        }
    }
}
