//! Exhaustive verification sweeps, fanned out with [`crate::par`].
//!
//! Every sweep is a pure function of its bounds; results come back sorted
//! so the reports are byte-deterministic whatever the thread count.

use std::collections::{BTreeSet, HashMap};

use serde::Serialize;

use crate::abc::enumerate_abc;
use crate::affine_weyl::{cyclically_decreasing_element, AffinePermutation};
use crate::cores::{compositions_bounded, cores_of_degree, cores_up_to, partitions_bounded, NCore, Partition};
use crate::error::Result;
use crate::par::{self, Exec};
use crate::schubert::{affine_monk_check, rect_pieri_check, Report};
use crate::strips::{horizontal_strong_strips_from, phi, psi, weak_strip_targets, HeadRule};

/// A failed `(λ, m)` instance of the horizontal/weak strip correspondence.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PropMainMismatch {
    pub n: usize,
    pub core: Partition,
    pub m: usize,
    pub horizontal: Vec<Partition>,
    pub weak: Vec<Partition>,
    pub round_trip_failures: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PropMainSummary {
    pub max_n: usize,
    pub max_deg: usize,
    pub cores: usize,
    pub instances: usize,
    pub strips: usize,
    pub mismatches: Vec<PropMainMismatch>,
}

impl PropMainSummary {
    pub fn passed(&self) -> bool {
        self.mismatches.is_empty()
    }
}

/// For every `n`-core of degree at most `max_deg` and every `1 ≤ m < n`:
/// targets of horizontal strong `(n-1-m)`-strips equal weak `m`-strip
/// targets, `φ(ψ(S)) = S`, and `ψ(S) w_λ = w_ν`.
pub fn prop_main(max_n: usize, max_deg: usize, exec: Exec) -> Result<PropMainSummary> {
    let work: Vec<(NCore, usize)> = (2..=max_n)
        .flat_map(|n| cores_up_to(n, max_deg).into_iter().flat_map(move |c| (1..n).map(move |m| (c.clone(), m))))
        .collect();
    let cores = (2..=max_n).map(|n| cores_up_to(n, max_deg).len()).sum();
    let instances = work.len();
    let results = par::map(exec, work, |(lam, m)| -> Result<(usize, Option<PropMainMismatch>)> {
        let n = lam.n();
        let strips = horizontal_strong_strips_from(&lam, n - 1 - m)?;
        let weak = weak_strip_targets(&lam, m)?;
        let w = lam.to_affine();
        let mut failures = 0;
        for s in &strips {
            let word = psi(s);
            let ok = phi(&word, &lam).is_ok_and(|back| back == *s)
                && AffinePermutation::from_word(&word, n)?.compose(&w) == s.nu.to_affine();
            failures += usize::from(!ok);
        }
        let horizontal: BTreeSet<&NCore> = strips.iter().map(|s| &s.nu).collect();
        let weak_set: BTreeSet<&NCore> = weak.iter().collect();
        let mismatch = (horizontal != weak_set || failures > 0).then(|| PropMainMismatch {
            n,
            core: lam.shape().clone(),
            m,
            horizontal: horizontal.iter().map(|c| c.shape().clone()).collect(),
            weak: weak_set.iter().map(|c| c.shape().clone()).collect(),
            round_trip_failures: failures,
        });
        Ok((strips.len(), mismatch))
    });
    let mut strips = 0;
    let mut mismatches = Vec::new();
    for r in results {
        let (k, bad) = r?;
        strips += k;
        mismatches.extend(bad);
    }
    Ok(PropMainSummary {
        max_n,
        max_deg,
        cores,
        instances,
        strips,
        mismatches,
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ThetaMismatch {
    pub n: usize,
    pub core: Partition,
    pub weight: Vec<usize>,
    pub abcs: usize,
    pub factorizations: u64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ThetaSummary {
    pub max_n: usize,
    pub max_deg: usize,
    pub instances: usize,
    pub abcs: usize,
    pub mismatches: Vec<ThetaMismatch>,
}

impl ThetaSummary {
    pub fn passed(&self) -> bool {
        self.mismatches.is_empty()
    }
}

/// Number of length-additive factorizations `v_r ⋯ v_1` with `v_i`
/// cyclically decreasing of length `α_i`, for every product reached.
pub fn factorization_counts(n: usize, alpha: &[usize]) -> Result<HashMap<AffinePermutation, u64>> {
    let masks: Vec<Vec<AffinePermutation>> = (0..n)
        .map(|k| {
            (0u64..(1 << n) - 1)
                .filter(|m| m.count_ones() as usize == k)
                .map(|m| cyclically_decreasing_element(m, n))
                .collect::<Result<_>>()
        })
        .collect::<Result<_>>()?;
    let mut level = HashMap::from([(AffinePermutation::identity(n), 1u64)]);
    for &a in alpha {
        let mut next: HashMap<AffinePermutation, u64> = HashMap::new();
        for (u, k) in &level {
            let len = u.length();
            for v in &masks[a] {
                let vu = v.compose(u);
                if vu.length() == len + a {
                    *next.entry(vu).or_default() += k;
                }
            }
        }
        level = next;
    }
    Ok(level)
}

/// `|ABC(λ, α)|` against the number of affine factorizations of `w_λ` of
/// weight `α`, for every core and composition with parts below `n`.
pub fn theta_bijection(max_n: usize, max_deg: usize, exec: Exec) -> Result<ThetaSummary> {
    let work: Vec<(usize, Vec<usize>)> = (2..=max_n)
        .flat_map(|n| {
            (1..=max_deg).flat_map(move |d| compositions_bounded(d, n - 1).into_iter().map(move |a| (n, a)))
        })
        .collect();
    let results = par::map(exec, work, |(n, alpha)| -> Result<(usize, usize, Vec<ThetaMismatch>)> {
        let counts = factorization_counts(n, &alpha)?;
        let d: usize = alpha.iter().sum();
        let mut instances = 0;
        let mut abcs = 0;
        let mut bad = Vec::new();
        for c in cores_of_degree(n, d).iter() {
            let found = enumerate_abc(c, &alpha)?.len();
            let want = counts.get(&c.to_affine()).copied().unwrap_or(0);
            instances += 1;
            abcs += found;
            if found as u64 != want {
                bad.push(ThetaMismatch {
                    n,
                    core: c.shape().clone(),
                    weight: alpha.clone(),
                    abcs: found,
                    factorizations: want,
                });
            }
        }
        Ok((instances, abcs, bad))
    });
    let mut summary = ThetaSummary {
        max_n,
        max_deg,
        instances: 0,
        abcs: 0,
        mismatches: Vec::new(),
    };
    for r in results {
        let (i, a, bad) = r?;
        summary.instances += i;
        summary.abcs += a;
        summary.mismatches.extend(bad);
    }
    Ok(summary)
}

/// Bounded partitions `λ` with `|λ| ≤ max_deg`, smallest first.
fn bounded_up_to(n: usize, max_deg: usize) -> Vec<Partition> {
    (0..=max_deg).flat_map(|d| partitions_bounded(d, n - 1)).collect()
}

/// Affine Monk instances for `2 ≤ n ≤ max_n`, `1 ≤ r < n`, `|λ| ≤ max_deg`.
pub fn affine_monk(max_n: usize, max_deg: usize, exec: Exec) -> Result<Vec<Report>> {
    let work: Vec<(usize, usize, Partition)> = (2..=max_n)
        .flat_map(|n| {
            bounded_up_to(n, max_deg)
                .into_iter()
                .flat_map(move |lam| (1..n).map(move |r| (n, r, lam.clone())))
        })
        .collect();
    par::map(exec, work, |(n, r, lam)| affine_monk_check(r, &lam, n))
        .into_iter()
        .collect()
}

/// Rectangle Pieri instances for `1 ≤ b < r < n ≤ max_n`, `|λ| ≤ max_deg`.
pub fn rect_pieri(max_n: usize, max_deg: usize, rule: HeadRule, exec: Exec) -> Result<Vec<Report>> {
    let work: Vec<(usize, usize, usize, Partition)> = (3..=max_n)
        .flat_map(|n| {
            bounded_up_to(n, max_deg).into_iter().flat_map(move |lam| {
                (2..n).flat_map(move |r| {
                    let lam = lam.clone();
                    (1..r).map(move |b| (n, r, b, lam.clone()))
                })
            })
        })
        .collect();
    par::map(exec, work, |(n, r, b, lam)| rect_pieri_check(r, b, &lam, n, rule))
        .into_iter()
        .collect()
}

/// Aggregate of a conjecture sweep.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ConjectureSummary {
    pub conjecture: String,
    pub max_n: usize,
    pub max_deg: usize,
    pub instances: usize,
    pub matched: usize,
    pub mismatches: Vec<Report>,
}

impl ConjectureSummary {
    pub fn from_reports(conjecture: &str, max_n: usize, max_deg: usize, reports: Vec<Report>) -> Self {
        let instances = reports.len();
        let mismatches: Vec<Report> = reports.into_iter().filter(|r| !r.matched).collect();
        ConjectureSummary {
            conjecture: conjecture.to_string(),
            max_n,
            max_deg,
            instances,
            matched: instances - mismatches.len(),
            mismatches,
        }
    }

    pub fn passed(&self) -> bool {
        self.mismatches.is_empty()
    }
}
