mod cli;
mod output;

use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::error::ErrorKind;
use clap::Parser;
use serde::Serialize;

use affine_schubert::abc::enumerate_abc;
use affine_schubert::cores::{cores_of_degree, partitions, partitions_bounded, NCore, Partition};
use affine_schubert::par::Exec;
use affine_schubert::schubert::{horizontal_pieri, strong_pieri_cohomology, weak_pieri, SchubertExpansion};
use affine_schubert::strips::{horizontal_strong_strips_from, ribbon_strong_strips, strong_strips_from, StrongStrip};
use affine_schubert::sweeps::{self, ConjectureSummary};
use affine_schubert::symfun::{kostka_foulkes, weak_kostka_foulkes, SymFuncT};

use cli::{Cli, Command, Format, ShapeArgs, StripKind, VerifyMode};
use output::{table, Coeff, SymFunc};

/// What a successful run reports back to the shell.
enum Outcome {
    Done,
    Mismatch,
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => ExitCode::SUCCESS,
                _ => ExitCode::from(1),
            };
        }
    };
    match run(cli) {
        Ok(Outcome::Done) => ExitCode::SUCCESS,
        Ok(Outcome::Mismatch) => ExitCode::from(2),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(1)
        }
    }
}

/// Reads `ASK_THREADS` and sizes the global pool accordingly.
fn executor() -> Result<Exec> {
    let Ok(raw) = std::env::var("ASK_THREADS") else {
        return Ok(Exec::default());
    };
    let k: usize = raw
        .trim()
        .parse()
        .ok()
        .filter(|&k| k > 0)
        .with_context(|| format!("ASK_THREADS must be a positive integer, got {raw:?}"))?;
    #[cfg(feature = "parallel")]
    rayon::ThreadPoolBuilder::new()
        .num_threads(k)
        .build_global()
        .context("configuring the thread pool")?;
    Ok(if k == 1 { Exec::Sequential } else { Exec::Parallel })
}

fn modulus(n: usize) -> Result<usize> {
    if n < 2 {
        bail!("--n must be at least 2, got {n}");
    }
    Ok(n)
}

impl ShapeArgs {
    fn resolve(&self) -> Result<NCore> {
        let n = modulus(self.n)?;
        match (&self.core, &self.bounded) {
            (Some(c), _) => Ok(NCore::new(c.clone(), n)?),
            (None, Some(b)) => Ok(NCore::c_map(b, n)?),
            (None, None) => bail!("one of --core or --bounded is required"),
        }
    }
}

fn emit<T: Serialize>(format: Format, value: &T, text: impl FnOnce() -> String) -> Result<()> {
    match format {
        Format::Json => println!("{}", serde_json::to_string_pretty(value)?),
        Format::Text => print!("{}", text()),
    }
    Ok(())
}

fn run(cli: Cli) -> Result<Outcome> {
    let exec = executor()?;
    let fmt = cli.format;
    match cli.command {
        Command::Cores { n, deg, max_deg } => {
            let n = modulus(n)?;
            let degrees = match (deg, max_deg) {
                (Some(d), _) => d..=d,
                (None, Some(d)) => 0..=d,
                (None, None) => bail!("one of --deg or --max-deg is required"),
            };
            let cores: Vec<NCore> = degrees.flat_map(|d| cores_of_degree(n, d).to_vec()).collect();
            emit(fmt, &cores, || {
                let rows: Vec<Vec<String>> = cores
                    .iter()
                    .map(|c| vec![c.degree().to_string(), c.to_string(), c.c_inverse().to_string()])
                    .collect();
                table(&rows)
            })?;
        }
        Command::Strips { shape, kind, m, r, b, head_rule } => {
            let lam = shape.resolve()?;
            match kind {
                StripKind::Horizontal | StripKind::Strong => {
                    let m = m.context("--m is required")?;
                    let strips: Vec<StrongStrip> = if kind == StripKind::Horizontal {
                        horizontal_strong_strips_from(&lam, m)?.iter().map(|s| s.as_strong_strip()).collect()
                    } else {
                        if m >= lam.n() {
                            bail!("--m must be below n = {}", lam.n());
                        }
                        strong_strips_from(&lam, m)
                    };
                    emit(fmt, &strips, || {
                        let rows: Vec<Vec<String>> = strips
                            .iter()
                            .map(|s| {
                                let chain: Vec<String> = s.chain.iter().map(ToString::to_string).collect();
                                let contents: Vec<String> = s.contents.iter().map(ToString::to_string).collect();
                                vec![chain.join(" < "), format!("contents {}", contents.join(" "))]
                            })
                            .collect();
                        table(&rows)
                    })?;
                }
                StripKind::Ribbon => {
                    let (r, b) = (r.context("--r is required")?, b.context("--b is required")?);
                    let strips = ribbon_strong_strips(&lam.c_inverse(), r, b, lam.n(), head_rule.into())?;
                    emit(fmt, &strips, || {
                        let mut out = String::new();
                        for s in &strips {
                            out.push_str(&format!("{}  bounded {}\n", s.nu, s.nu.c_inverse()));
                            for chain in &s.chains {
                                let c: Vec<String> = chain.iter().map(ToString::to_string).collect();
                                out.push_str(&format!("  {}\n", c.join(" < ")));
                            }
                        }
                        out
                    })?;
                }
            }
        }
        Command::Abc { shape, weight } => {
            let lam = shape.resolve()?;
            let abcs = enumerate_abc(&lam, &weight)?;
            emit(fmt, &abcs, || {
                let mut out = String::new();
                for a in &abcs {
                    let cocharge = a.n_cocharge().map_or_else(|_| "-".to_string(), |c| c.to_string());
                    out.push_str(&format!("{a}cocharge {cocharge}\n\n"));
                }
                out
            })?;
        }
        Command::KfTable { deg, weak, n, at_t } => kf_table(fmt, deg, weak, n, at_t)?,
        Command::Expand { basis, into, n, core, bounded, at_t } => {
            let restricted = basis.is_restricted() || into.is_restricted();
            let n = match n {
                Some(n) => Some(modulus(n)?),
                None if restricted => bail!("--n is required for the k-Schur bases"),
                None => None,
            };
            let index = match (core, bounded) {
                (Some(c), _) => {
                    let n = n.context("--core needs --n")?;
                    NCore::new(c, n)?.c_inverse()
                }
                (None, Some(b)) => b,
                (None, None) => bail!("one of --core or --bounded is required"),
            };
            let basis_n = if basis.is_restricted() { n } else { None };
            let into_n = if into.is_restricted() { n } else { None };
            let f = SymFuncT::basis_element(basis, index, basis_n, false)?.to_basis(into, into_n)?;
            let out = SymFunc::new(&f, at_t)?;
            emit(fmt, &out, || format!("{out}\n"))?;
        }
        Command::Pieri { shape, m } => {
            let lam = shape.resolve()?;
            let report = PieriReport::new(lam, m)?;
            emit(fmt, &report, || report.text())?;
        }
        Command::Verify { mode, n, max_deg, head_rule, all } => {
            let n = modulus(n)?;
            let passed = match mode {
                VerifyMode::PropMain => {
                    let s = sweeps::prop_main(n, max_deg, exec)?;
                    emit(fmt, &s, || {
                        let mut out = format!(
                            "prop-main n<={} deg<={}: {} cores, {} instances, {} strips, {} mismatches\n",
                            s.max_n, s.max_deg, s.cores, s.instances, s.strips, s.mismatches.len()
                        );
                        for m in &s.mismatches {
                            out.push_str(&format!("  {m:?}\n"));
                        }
                        out
                    })?;
                    s.passed()
                }
                VerifyMode::ThetaBijection => {
                    let s = sweeps::theta_bijection(n, max_deg, exec)?;
                    emit(fmt, &s, || {
                        let mut out = format!(
                            "theta-bijection n<={} deg<={}: {} instances, {} ABCs, {} mismatches\n",
                            s.max_n, s.max_deg, s.instances, s.abcs, s.mismatches.len()
                        );
                        for m in &s.mismatches {
                            out.push_str(&format!("  {m:?}\n"));
                        }
                        out
                    })?;
                    s.passed()
                }
                VerifyMode::AffineMonk | VerifyMode::RectPieri => {
                    let (name, reports) = if mode == VerifyMode::AffineMonk {
                        ("affine-monk", sweeps::affine_monk(n, max_deg, exec)?)
                    } else {
                        ("rect-pieri", sweeps::rect_pieri(n, max_deg, head_rule.into(), exec)?)
                    };
                    let everything = all.then(|| reports.clone());
                    let s = ConjectureSummary::from_reports(name, n, max_deg, reports);
                    conjecture_output(fmt, &s, everything)?;
                    s.passed()
                }
            };
            if !passed {
                return Ok(Outcome::Mismatch);
            }
        }
    }
    Ok(Outcome::Done)
}

fn conjecture_output(
    fmt: Format,
    s: &ConjectureSummary,
    all: Option<Vec<affine_schubert::schubert::Report>>,
) -> Result<()> {
    #[derive(Serialize)]
    struct WithReports<'a> {
        #[serde(flatten)]
        summary: &'a ConjectureSummary,
        #[serde(skip_serializing_if = "Option::is_none")]
        reports: Option<Vec<affine_schubert::schubert::Report>>,
    }
    let shown = all.clone().unwrap_or_else(|| s.mismatches.clone());
    emit(fmt, &WithReports { summary: s, reports: all }, || {
        let mut out = format!(
            "{} n<={} deg<={}: {} of {} instances match\n",
            s.conjecture, s.max_n, s.max_deg, s.matched, s.instances
        );
        for r in &shown {
            out.push_str(&format!("{r}\n"));
        }
        out
    })
}

fn kf_table(fmt: Format, deg: usize, weak: bool, n: Option<usize>, at_t: Option<i64>) -> Result<()> {
    #[derive(Serialize)]
    struct Table {
        n: Option<usize>,
        deg: usize,
        weak: bool,
        t: Option<i64>,
        rows: Vec<Partition>,
        cols: Vec<Partition>,
        entries: Vec<Vec<Coeff>>,
    }
    let n = n.map(modulus).transpose()?;
    let keys = match (weak, n) {
        (true, Some(n)) => partitions_bounded(deg, n - 1),
        (true, None) => bail!("--weak needs --n"),
        (false, _) => partitions(deg),
    };
    let mut entries = Vec::with_capacity(keys.len());
    for lam in &keys {
        let mut row = Vec::with_capacity(keys.len());
        for mu in &keys {
            let k = match (weak, n) {
                (true, Some(n)) => weak_kostka_foulkes(lam, mu, n)?,
                _ => kostka_foulkes(lam, mu),
            };
            row.push(Coeff::new(k, at_t)?);
        }
        entries.push(row);
    }
    let t = Table {
        n: n.filter(|_| weak),
        deg,
        weak,
        t: at_t,
        rows: keys.clone(),
        cols: keys,
        entries,
    };
    emit(fmt, &t, || {
        let mut rows = vec![std::iter::once(String::new()).chain(t.cols.iter().map(ToString::to_string)).collect()];
        for (lam, row) in t.rows.iter().zip(&t.entries) {
            rows.push(std::iter::once(lam.to_string()).chain(row.iter().map(ToString::to_string)).collect());
        }
        table(&rows)
    })
}

/// The three Pieri rules applied to one core.
#[derive(Serialize)]
struct PieriReport {
    n: usize,
    core: NCore,
    m: usize,
    weak: SchubertExpansion,
    horizontal: SchubertExpansion,
    strong: SchubertExpansion,
    agreement: bool,
    diff: Vec<String>,
}

impl PieriReport {
    fn new(core: NCore, m: usize) -> Result<Self> {
        let weak = weak_pieri(m, &core)?;
        let horizontal = horizontal_pieri(m, &core)?;
        let strong = strong_pieri_cohomology(m, &core)?;
        let mut diff = Vec::new();
        for c in weak.cores().difference(&horizontal.cores()) {
            diff.push(format!("-{c}"));
        }
        for c in horizontal.cores().difference(&weak.cores()) {
            diff.push(format!("+{c}"));
        }
        Ok(PieriReport {
            n: core.n(),
            agreement: weak == horizontal,
            core,
            m,
            weak,
            horizontal,
            strong,
            diff,
        })
    }

    fn text(&self) -> String {
        let mut rows = vec![
            vec!["weak".to_string(), self.weak.to_string()],
            vec!["horizontal".to_string(), self.horizontal.to_string()],
            vec!["strong".to_string(), self.strong.to_string()],
            vec!["agreement".to_string(), self.agreement.to_string()],
        ];
        for d in &self.diff {
            rows.push(vec![String::new(), d.clone()]);
        }
        table(&rows)
    }
}
