//! The `check` and `classes` commands.

use std::fmt::Write as _;
use std::str::FromStr;

use irratio_core::analysis::conjugacy_classes;
use irratio_core::arith::{is_prime, prime_divisors};
use irratio_core::{irrationality_report, pi_irrationality, Group};
use serde::Serialize;

use crate::report::WitnessOut;

/// A prime set given on the command line: an explicit list, or `2'` for
/// the odd primes dividing the group order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum PiSpec {
    Primes(Vec<u64>),
    OddPrimes,
}

impl FromStr for PiSpec {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        let s = s.trim();
        if s == "2'" || s.eq_ignore_ascii_case("odd") {
            return Ok(PiSpec::OddPrimes);
        }
        let primes = s
            .split(',')
            .map(|t| {
                t.trim()
                    .parse::<u64>()
                    .ok()
                    .filter(|&p| is_prime(p))
                    .ok_or_else(|| format!("{t:?} is not a prime"))
            })
            .collect::<Result<Vec<_>, _>>()?;
        if primes.is_empty() {
            return Err("empty prime set".into());
        }
        Ok(PiSpec::Primes(primes))
    }
}

impl PiSpec {
    pub fn resolve(&self, order: u64) -> Vec<u64> {
        match self {
            PiSpec::Primes(p) => p.clone(),
            PiSpec::OddPrimes => prime_divisors(order).into_iter().filter(|&p| p != 2).collect(),
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct RowOut {
    pub rep: String,
    pub order: u64,
    pub class_size: usize,
    pub units: Vec<u64>,
    pub field_degree: u64,
    pub real: bool,
}

#[derive(Debug, Clone, Serialize)]
pub struct PrimeOut {
    pub p: u64,
    pub irrational: bool,
}

#[derive(Debug, Clone, Serialize)]
pub struct CheckReport {
    pub spec: String,
    pub order: usize,
    pub pi: Vec<u64>,
    pub verdict: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<WitnessOut>,
    pub primes: Vec<PrimeOut>,
    pub rows: Vec<RowOut>,
}

/// Irrationality report of `g`, with the verdict taken over `pi` (all
/// primes dividing `|G|` when `None`).
pub fn check(g: &Group, pi: Option<&PiSpec>) -> irratio_core::Result<CheckReport> {
    let report = irrationality_report(g)?;
    let order = report.order;
    let pi = match pi {
        Some(p) => p.resolve(order as u64),
        None => prime_divisors(order as u64),
    };
    let verdict = pi_irrationality(g, &pi)?;
    Ok(CheckReport {
        spec: g.label().to_string(),
        order,
        verdict: verdict.is_irrational(),
        witness: verdict.witness().map(|w| WitnessOut::new(g, w)),
        pi,
        primes: report
            .primes
            .iter()
            .map(|&(p, irrational)| PrimeOut { p, irrational })
            .collect(),
        rows: report
            .rows
            .into_iter()
            .map(|r| RowOut {
                rep: g.format(g.element(r.rep)),
                order: r.order,
                class_size: r.class_size,
                units: r.units,
                field_degree: r.field_degree,
                real: r.real,
            })
            .collect(),
    })
}

impl CheckReport {
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "{}: order {}", self.spec, self.order);
        let _ = writeln!(
            out,
            "{:>6} {:>8} {:>7} {:>6}  units B / representative",
            "order", "size", "degree", "real"
        );
        for r in &self.rows {
            let _ = writeln!(
                out,
                "{:>6} {:>8} {:>7} {:>6}  {:?}  {}",
                r.order, r.class_size, r.field_degree, r.real, r.units, r.rep
            );
        }
        for p in &self.primes {
            let _ = writeln!(out, "{}-irrational: {}", p.p, p.irrational);
        }
        let _ = writeln!(
            out,
            "pi = {:?}: {}",
            self.pi,
            if self.verdict { "irrational" } else { "not irrational" }
        );
        if let Some(w) = &self.witness {
            let _ = writeln!(out, "witness: g x g^-1 = x^{} with x = {}, g = {}", w.k, w.x, w.g);
        }
        out
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct ClassOut {
    pub rep: String,
    pub order: u64,
    pub size: usize,
}

#[derive(Debug, Clone, Serialize)]
pub struct ClassesReport {
    pub spec: String,
    pub order: usize,
    pub classes: Vec<ClassOut>,
}

pub fn classes(g: &Group) -> irratio_core::Result<ClassesReport> {
    let cl = conjugacy_classes(g)?;
    Ok(ClassesReport {
        spec: g.label().to_string(),
        order: g.order()?,
        classes: cl
            .reps()
            .iter()
            .enumerate()
            .map(|(c, &r)| ClassOut {
                rep: g.format(g.element(r)),
                order: g.order_of_idx(r),
                size: cl.size(c),
            })
            .collect(),
    })
}

impl ClassesReport {
    pub fn to_text(&self) -> String {
        let mut out = format!("{}: order {}, {} classes\n", self.spec, self.order, self.classes.len());
        for c in &self.classes {
            let _ = writeln!(out, "{:>6} {:>8}  {}", c.order, c.size, c.rep);
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn pi_parsing() {
        assert_eq!("2,3".parse::<PiSpec>().unwrap(), PiSpec::Primes(vec![2, 3]));
        assert_eq!("2'".parse::<PiSpec>().unwrap(), PiSpec::OddPrimes);
        assert!("4".parse::<PiSpec>().is_err());
        assert_eq!(PiSpec::OddPrimes.resolve(60), vec![3, 5]);
    }
}
