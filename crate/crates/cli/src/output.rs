use std::fmt;

use anyhow::{anyhow, Result};
use serde::Serialize;

use affine_schubert::cores::Partition;
use affine_schubert::symfun::{Basis, SymFuncT, TPoly};

/// A coefficient kept symbolic or evaluated at an integer `t`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(untagged)]
pub enum Coeff {
    Poly(TPoly),
    Value(i64),
}

impl Coeff {
    pub fn new(p: TPoly, at_t: Option<i64>) -> Result<Self> {
        match at_t {
            None => Ok(Coeff::Poly(p)),
            Some(v) => p
                .eval(v)
                .map(Coeff::Value)
                .ok_or_else(|| anyhow!("cannot evaluate {p} at t = {v}")),
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            Coeff::Poly(p) => p.is_zero(),
            Coeff::Value(v) => *v == 0,
        }
    }
}

impl fmt::Display for Coeff {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Coeff::Poly(p) => write!(f, "{p}"),
            Coeff::Value(v) => write!(f, "{v}"),
        }
    }
}

#[derive(Debug, Serialize)]
pub struct SymTerm {
    pub partition: Partition,
    pub coeff: Coeff,
}

/// The symmetric-function schema with coefficients possibly evaluated.
#[derive(Debug, Serialize)]
pub struct SymFunc {
    pub basis: Basis,
    pub n: Option<usize>,
    pub terms: Vec<SymTerm>,
}

impl SymFunc {
    pub fn new(f: &SymFuncT, at_t: Option<i64>) -> Result<Self> {
        let mut terms = Vec::new();
        for (lam, c) in f.terms() {
            let coeff = Coeff::new(c.clone(), at_t)?;
            if !coeff.is_zero() {
                terms.push(SymTerm { partition: lam.clone(), coeff });
            }
        }
        Ok(SymFunc {
            basis: f.basis(),
            n: f.n(),
            terms,
        })
    }
}

impl fmt::Display for SymFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (k, t) in self.terms.iter().enumerate() {
            if k > 0 {
                write!(f, " + ")?;
            }
            let c = t.coeff.to_string();
            if c.contains(['+', '-']) && c.len() > 2 {
                write!(f, "({c})")?;
            } else if c != "1" {
                write!(f, "{c}")?;
            }
            write!(f, "{}{}", self.basis, t.partition)?;
        }
        Ok(())
    }
}

/// Left-aligned columns separated by two spaces.
pub fn table(rows: &[Vec<String>]) -> String {
    let width = rows.iter().map(Vec::len).max().unwrap_or(0);
    let cols: Vec<usize> = (0..width)
        .map(|j| rows.iter().filter_map(|r| r.get(j)).map(|s| s.chars().count()).max().unwrap_or(0))
        .collect();
    let mut out = String::new();
    for row in rows {
        let cells: Vec<String> = row
            .iter()
            .enumerate()
            .map(|(j, s)| format!("{s}{}", " ".repeat(cols[j] - s.chars().count())))
            .collect();
        out.push_str(cells.join("  ").trim_end());
        out.push('\n');
    }
    out
}
