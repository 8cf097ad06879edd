//! One pass/fail line per acceptance criterion.

mod common;

use std::collections::BTreeSet;
use std::panic::{self, AssertUnwindSafe};

use affine_schubert::abc::{enumerate_abc, Abc};
use affine_schubert::affine_weyl::FinitePermutation;
use affine_schubert::cores::{compositions_bounded, cores_up_to, partitions, partitions_bounded, NCore, Partition};
use affine_schubert::par::Exec;
use affine_schubert::schubert::{
    affine_monk_check, horizontal_pieri, monk_via_affine, quantum_monk, rect_pieri_check, strong_pieri_cohomology,
    weak_pieri, QuantumTerm,
};
use affine_schubert::strips::{
    count_saturated_chains, horizontal_strong_strip, horizontal_strong_strips_from, length_one_targets,
    ribbon_strong_strips, strong_strips, HeadRule,
};
use affine_schubert::sweeps::{affine_monk, prop_main, theta_bijection, ConjectureSummary};
use affine_schubert::symfun::{
    dual_kschur, dual_kschur_monomial_coefficient, hall_pairing, kostka_foulkes, kschur, ssyt, weak_kostka_foulkes,
    Basis, SymFuncT, TPoly, Tableau,
};
use common::{ptilde_by_symmetrization, quotient_product};

type Check = Result<(), String>;
type Criterion = (&'static str, fn() -> Check);

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Check {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

fn core(parts: &[usize], n: usize) -> NCore {
    NCore::from_parts(parts, n).unwrap()
}

fn p(v: &[usize]) -> Partition {
    Partition::new(v.to_vec()).unwrap()
}

fn perm(v: &[usize]) -> FinitePermutation {
    FinitePermutation::new(v.to_vec()).unwrap()
}

fn find_abc(lam: &NCore, weight: &[usize], drawing: &str) -> Result<Abc, String> {
    enumerate_abc(lam, weight)
        .map_err(|e| e.to_string())?
        .into_iter()
        .find(|a| a.to_string() == drawing)
        .ok_or_else(|| format!("no ABC drawn as\n{drawing}"))
}

fn strong_example() -> Check {
    let (nu, gamma) = (core(&[3], 4), core(&[4, 1, 1], 4));
    let chains = count_saturated_chains(&nu, &gamma);
    ensure(chains == 2, || format!("{chains} saturated chains"))?;
    let strips = strong_strips(&nu, &gamma, 2);
    ensure(strips.len() == 1, || format!("{} strips", strips.len()))?;
    ensure(strips[0].contents == [-1, 3], || format!("contents {:?}", strips[0].contents))
}

fn horizontal_example() -> Check {
    let strips = horizontal_strong_strips_from(&core(&[3, 1, 1], 4), 2).map_err(|e| e.to_string())?;
    let got: BTreeSet<(Partition, Vec<i64>)> = strips.iter().map(|s| (s.nu.shape().clone(), s.contents())).collect();
    let want: BTreeSet<(Partition, Vec<i64>)> = [
        (p(&[3, 1, 1, 1]), vec![3, 5]),
        (p(&[4, 1, 1]), vec![4, 5]),
        (p(&[3, 2, 1]), vec![4, 5]),
    ]
    .into_iter()
    .collect();
    ensure(got == want, || format!("{got:?}"))?;
    ensure(horizontal_strong_strip(&core(&[1, 1], 4), &core(&[3], 4)).is_none(), || {
        "((1,1),(3)) accepted".into()
    })
}

fn prop_main_sweep() -> Check {
    let s = prop_main(5, 7, Exec::default()).map_err(|e| e.to_string())?;
    ensure(s.passed(), || format!("{:?}", s.mismatches))
}

fn theta_sweep() -> Check {
    let s = theta_bijection(5, 7, Exec::default()).map_err(|e| e.to_string())?;
    ensure(s.passed(), || format!("{:?}", s.mismatches))
}

fn abc_example() -> Check {
    let chain: Vec<Partition> = [&[4, 3][..], &[9, 4, 2], &[9, 8, 3], &[9, 8, 5]].iter().map(|v| p(v)).collect();
    let abcs = enumerate_abc(&core(&[4, 3], 6), &[3, 3, 1]).map_err(|e| e.to_string())?;
    let a = abcs.iter().find(|a| a.mu_chain() == chain).ok_or("μ-chain not emitted")?;
    let shapes: Vec<Partition> = a.lambda_chain().iter().map(|c| c.shape().clone()).collect();
    ensure(shapes == [p(&[]), p(&[3]), p(&[4, 2]), p(&[4, 3])], || format!("λ-chain {shapes:?}"))
}

fn cocharge_examples() -> Check {
    let t = Tableau::new(vec![vec![1, 1, 1, 2, 3, 7], vec![2, 2, 3, 5], vec![3, 4], vec![4, 5], vec![6]])
        .map_err(|e| e.to_string())?;
    let idx = t.index_vectors().map_err(|e| e.to_string())?;
    ensure(idx == [vec![0, 1, 2, 3, 3, 4, 4], vec![0, 1, 1, 2, 3], vec![0, 0, 1]], || format!("{idx:?}"))?;
    ensure(t.cocharge() == Ok(25), || format!("cocharge {:?}", t.cocharge()))?;

    let standard = find_abc(
        &core(&[3, 3, 1, 1, 1], 4),
        &[1; 7],
        "2 1 1\n5 3 2 2\n. 4 3 3 3\n. 6 5 4 4\n. 7 7 5 5 5\n. . . 6 6 6\n. . . 7 7 7\n",
    )?;
    let idx = standard.index_vectors().map_err(|e| e.to_string())?;
    ensure(idx == [vec![0, 0, 1, 1, 2, 2, 3]], || format!("{idx:?}"))?;

    let four = find_abc(
        &core(&[6, 3, 2, 1], 6),
        &[3, 3, 3, 1],
        ". 4 2 1 1\n. . 4 3 2 2 2 2\n. . . 4 4 4 3 3 3\n. . . . . . 4 4 4 4 4\n",
    )?;
    let idx = four.index_vectors().map_err(|e| e.to_string())?;
    ensure(idx == [vec![0, 1, 1, 2], vec![0, 1, 1], vec![0, 0, 1]], || format!("{idx:?}"))
}

fn symmetry_and_unitriangularity() -> Check {
    for n in 2..=5 {
        for c in cores_up_to(n, 6) {
            let key = c.c_inverse();
            let f = dual_kschur(&c, true).map_err(|e| e.to_string())?;
            // leading coefficient is 1 at t = 1 and a single power of t in general
            let lead = f.coeff(&key);
            ensure(lead.at_one() == 1 && lead.terms().count() == 1, || format!("leading coefficient of {c}: {lead}"))?;
            for alpha in compositions_bounded(c.degree(), n - 1) {
                let sorted = Partition::from_unsorted(alpha.clone());
                let k = dual_kschur_monomial_coefficient(&c, &alpha).map_err(|e| e.to_string())? as i64;
                ensure(k == f.coeff(&sorted).at_one(), || format!("n={n} {c} at {alpha:?}"))?;
            }
            for mu in partitions_bounded(c.degree(), n - 1) {
                if !mu.dominated_by(&key) {
                    let k = weak_kostka_foulkes(&key, &mu, n).map_err(|e| e.to_string())?;
                    ensure(k.is_zero(), || format!("K^{n}_{key},{mu} = {k}"))?;
                }
            }
        }
    }
    Ok(())
}

fn reduction() -> Check {
    for n in 2..=6 {
        for c in cores_up_to(n, 5).into_iter().filter(|c| c.degree() < n) {
            let lam = c.shape().clone();
            let s = SymFuncT::basis_element(Basis::S, lam.clone(), None, false).map_err(|e| e.to_string())?;
            let dual = dual_kschur(&c, true).map_err(|e| e.to_string())?;
            ensure(dual == s.to_basis(Basis::M, None).map_err(|e| e.to_string())?, || format!("dual k-Schur {c}"))?;
            let ks = kschur(&c, true).and_then(|k| k.to_basis(Basis::S, None)).map_err(|e| e.to_string())?;
            ensure(ks == s, || format!("k-Schur {c}"))?;
            for mu in partitions(lam.size()) {
                let k = weak_kostka_foulkes(&lam, &mu, n).map_err(|e| e.to_string())?;
                ensure(k == kostka_foulkes(&lam, &mu), || format!("K^{n}_{lam},{mu}"))?;
                let abcs = enumerate_abc(&c, mu.parts()).map_err(|e| e.to_string())?;
                ensure(abcs.len() == ssyt(&lam, mu.parts()).len(), || format!("ABC count {lam} {mu}"))?;
                ensure(abcs.iter().all(|a| a.off() == 0), || format!("nonzero offset {lam} {mu}"))?;
            }
        }
    }
    Ok(())
}

fn duality() -> Check {
    for n in 2..=4 {
        for d in 0..=6 {
            let keys = partitions_bounded(d, n - 1);
            let cores: Vec<NCore> = keys.iter().map(|l| NCore::c_map(l, n).unwrap()).collect();
            let duals: Vec<SymFuncT> = cores.iter().map(|c| dual_kschur(c, true).unwrap()).collect();
            let ks: Vec<SymFuncT> = cores.iter().map(|c| kschur(c, true).unwrap()).collect();
            for (i, f) in duals.iter().enumerate() {
                for (j, g) in ks.iter().enumerate() {
                    let want = if i == j { TPoly::one() } else { TPoly::zero() };
                    let got = hall_pairing(f, g).map_err(|e| e.to_string())?;
                    ensure(got == want, || format!("n={n} ⟨{}, {}⟩ = {got}", keys[i], keys[j]))?;
                }
            }
            for mu in &keys {
                let h = SymFuncT::basis_element(Basis::H0t, mu.clone(), None, false).map_err(|e| e.to_string())?;
                let mut acc = SymFuncT::zero(Basis::H0t, d, None, false).map_err(|e| e.to_string())?;
                for (lam, k) in keys.iter().zip(&ks) {
                    let coeff = weak_kostka_foulkes(lam, mu, n).map_err(|e| e.to_string())?;
                    acc = acc.add(&k.scale(&coeff)).map_err(|e| e.to_string())?;
                }
                ensure(acc == h, || format!("H_{mu} expansion, n={n}"))?;
            }
        }
    }
    Ok(())
}

fn ptilde_oracle() -> Check {
    for d in 0..=4 {
        for mu in partitions(d) {
            let oracle = ptilde_by_symmetrization(&mu);
            let ours = SymFuncT::basis_element(Basis::PTilde, mu.clone(), None, false)
                .and_then(|f| f.to_basis(Basis::S, None))
                .map_err(|e| e.to_string())?;
            for lam in partitions(d) {
                let want = oracle.get(&lam).cloned().unwrap_or_default();
                ensure(ours.coeff(&lam) == want, || format!("P̃_{mu} at s_{lam}"))?;
            }
        }
    }
    Ok(())
}

fn pieri_agreement() -> Check {
    for n in 2..=5 {
        for c in cores_up_to(n, 7) {
            for m in 1..n {
                let weak = weak_pieri(m, &c).map_err(|e| e.to_string())?;
                let horizontal = horizontal_pieri(m, &c).map_err(|e| e.to_string())?;
                ensure(weak == horizontal, || format!("n={n} {c} m={m}"))?;
            }
        }
    }
    for n in 2..=4 {
        for w in cores_up_to(n, 6) {
            for m in 1..n {
                let strong = strong_pieri_cohomology(m, &w).map_err(|e| e.to_string())?;
                let ours: std::collections::BTreeMap<NCore, i64> = strong.terms().map(|(c, k)| (c.clone(), k)).collect();
                ensure(ours == quotient_product(m, &w), || format!("strong n={n} {w} m={m}"))?;
            }
        }
    }
    Ok(())
}

fn conjectures() -> Check {
    let report = affine_monk_check(3, &p(&[3, 2, 1, 1]), 5).map_err(|e| e.to_string())?;
    let rhs: BTreeSet<Partition> = report.rhs.iter().map(|t| t.partition.clone()).collect();
    let want: BTreeSet<Partition> =
        [p(&[3, 3, 2, 2, 1, 1]), p(&[4, 2, 2, 2, 1, 1]), p(&[3, 3, 3, 1, 1, 1])].into_iter().collect();
    ensure(report.matched && rhs == want, || format!("affine Monk example\n{report}"))?;

    let w = perm(&[4, 2, 5, 3, 1]);
    let quantum = quantum_monk(3, &w).map_err(|e| e.to_string())?;
    let want: BTreeSet<QuantumTerm> = [
        QuantumTerm { perm: perm(&[4, 3, 5, 2, 1]), q: vec![0, 0, 0, 0] },
        QuantumTerm { perm: perm(&[4, 2, 3, 5, 1]), q: vec![0, 0, 1, 0] },
        QuantumTerm { perm: perm(&[4, 2, 1, 3, 5]), q: vec![0, 0, 1, 1] },
    ]
    .into_iter()
    .collect();
    ensure(quantum.iter().cloned().collect::<BTreeSet<_>>() == want, || format!("quantum Monk {quantum:?}"))?;
    let via: Vec<Option<QuantumTerm>> = monk_via_affine(3, &w).map_err(|e| e.to_string())?;
    ensure(via == quantum.into_iter().map(Some).collect::<Vec<_>>(), || "dictionary".into())?;

    let reports = affine_monk(5, 8, Exec::default()).map_err(|e| e.to_string())?;
    let summary = ConjectureSummary::from_reports("affine-monk", 5, 8, reports);
    ensure(summary.passed(), || format!("{} affine Monk mismatches", summary.mismatches.len()))?;

    let rect = rect_pieri_check(3, 2, &p(&[4, 2]), 5, HeadRule::AboveBase).map_err(|e| e.to_string())?;
    let lhs: BTreeSet<Partition> = rect.lhs.iter().map(|t| t.partition.clone()).collect();
    let want: BTreeSet<Partition> = [p(&[4, 4, 1, 1]), p(&[4, 3, 3]), p(&[4, 3, 2, 1])].into_iter().collect();
    ensure(rect.matched && lhs == want, || format!("rectangle example\n{rect}"))?;

    for n in 2..=5 {
        for lam in (0..=7).flat_map(|d| partitions_bounded(d, n - 1)) {
            for r in 1..n {
                let ribbon: BTreeSet<NCore> = ribbon_strong_strips(&lam, r, 1, n, HeadRule::AboveBase)
                    .map_err(|e| e.to_string())?
                    .into_iter()
                    .map(|s| s.nu)
                    .collect();
                let crit: BTreeSet<NCore> =
                    length_one_targets(&lam, r, n).map_err(|e| e.to_string())?.into_iter().collect();
                ensure(ribbon == crit, || format!("length one n={n} λ={lam} r={r}"))?;
            }
        }
    }
    Ok(())
}

fn main() {
    let criteria: [Criterion; 12] = [
        ("strong strips from (3) to (4,1,1)", strong_example),
        ("horizontal strong 2-strips of (3,1,1)", horizontal_example),
        ("horizontal = weak strip sweep, n <= 5, deg <= 7", prop_main_sweep),
        ("ABC count = affine factorizations, n <= 5, deg <= 7", theta_sweep),
        ("ABC mu-chain for (4,3), weight (3,3,1)", abc_example),
        ("cocharge and index vectors", cocharge_examples),
        ("dual k-Schur symmetry and unitriangularity", symmetry_and_unitriangularity),
        ("reduction below degree n", reduction),
        ("k-Schur duality and H expansion", duality),
        ("P-tilde against symmetrization", ptilde_oracle),
        ("Pieri triple agreement", pieri_agreement),
        ("affine Monk, quantum Monk, rectangle Pieri", conjectures),
    ];
    let mut failed = Vec::new();
    for (i, (name, check)) in criteria.iter().enumerate() {
        let k = i + 1;
        let outcome = panic::catch_unwind(AssertUnwindSafe(check)).unwrap_or_else(|_| Err("panicked".into()));
        match outcome {
            Ok(()) => println!("criterion {k}: PASS  {name}"),
            Err(why) => {
                println!("criterion {k}: FAIL  {name}: {why}");
                failed.push(k);
            }
        }
    }
    if !failed.is_empty() {
        eprintln!("failed criteria: {failed:?}");
        std::process::exit(1);
    }
}
