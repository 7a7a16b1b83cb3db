//! Verification records and command dispatch.

use std::str::FromStr;

use serde::Serialize;
use serde_json::{json, Value};

use crate::glrep::{size_bound_from_env, Partition};
use crate::linalg::RatPoly;
use crate::{centralizer, elementary, minor, q, rmatrix, transvector, Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Status {
    Pass,
    Fail,
    SkippedSingular,
}

/// One verified identity (or identity instance).
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Check {
    pub name: String,
    /// Short tag naming the identity family the check belongs to.
    pub anchor: String,
    pub status: Status,
    /// First mismatch (or the reason for skipping); absent on success.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<String>,
}

impl Check {
    pub fn pass(name: impl Into<String>, anchor: &str) -> Self {
        Check {
            name: name.into(),
            anchor: anchor.to_string(),
            status: Status::Pass,
            witness: None,
        }
    }

    pub fn fail(name: impl Into<String>, anchor: &str, witness: impl Into<String>) -> Self {
        Check {
            name: name.into(),
            anchor: anchor.to_string(),
            status: Status::Fail,
            witness: Some(witness.into()),
        }
    }

    pub fn skipped(name: impl Into<String>, anchor: &str, reason: impl Into<String>) -> Self {
        Check {
            name: name.into(),
            anchor: anchor.to_string(),
            status: Status::SkippedSingular,
            witness: Some(reason.into()),
        }
    }

    /// Pass when `witness` is `None`, fail with it otherwise.
    pub fn from_witness(name: impl Into<String>, anchor: &str, witness: Option<String>) -> Self {
        match witness {
            None => Self::pass(name, anchor),
            Some(w) => Self::fail(name, anchor, w),
        }
    }

    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }
}

/// `true` when no check failed (skips are allowed).
pub fn all_ok(checks: &[Check]) -> bool {
    checks.iter().all(|c| c.status != Status::Fail)
}

/// Polynomial as a JSON value: root shifts when it splits over the
/// integers, otherwise ascending `"p/q"` coefficients.
pub fn poly_json(p: &RatPoly) -> Value {
    match p.integer_shifts() {
        Some(shifts) => json!({ "factors": shifts, "text": p.to_string() }),
        None => json!({ "coefficients": p.coeffs().iter().map(ToString::to_string).collect::<Vec<_>>() }),
    }
}

/// Wall-clock timer; reads zero where no clock is available (wasm).
#[derive(Clone, Copy)]
struct Timer {
    #[cfg(not(target_arch = "wasm32"))]
    start: std::time::Instant,
}

impl Timer {
    fn start() -> Self {
        Timer {
            #[cfg(not(target_arch = "wasm32"))]
            start: std::time::Instant::now(),
        }
    }

    fn millis(self) -> u128 {
        #[cfg(not(target_arch = "wasm32"))]
        return self.start.elapsed().as_millis();
        #[cfg(target_arch = "wasm32")]
        0
    }
}

/// Output of one command.
#[derive(Clone, Debug, Serialize)]
pub struct Report {
    pub command: String,
    pub ok: bool,
    pub checks: Vec<Check>,
    #[serde(skip_serializing_if = "Value::is_null")]
    pub data: Value,
    pub elapsed_ms: u128,
}

impl Report {
    fn new(command: String, mut checks: Vec<Check>, data: Value, start: Timer) -> Self {
        checks.sort_by(|a, b| a.name.cmp(&b.name));
        Report {
            command,
            ok: all_ok(&checks),
            checks,
            data,
            elapsed_ms: start.millis(),
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    pub fn exit_code(&self) -> i32 {
        if self.ok {
            0
        } else {
            1
        }
    }

    pub fn summary(&self) -> String {
        let count = |s: Status| self.checks.iter().filter(|c| c.status == s).count();
        let mut out = format!(
            "{}: {} passed, {} failed, {} skipped ({} ms)",
            self.command,
            count(Status::Pass),
            count(Status::Fail),
            count(Status::SkippedSingular),
            self.elapsed_ms
        );
        for c in self.checks.iter().filter(|c| c.status == Status::Fail) {
            out.push_str(&format!("\n  FAIL {}: {}", c.name, c.witness.as_deref().unwrap_or("")));
        }
        out
    }
}

/// Exit code for an error: 2 for usage errors, 1 otherwise.
pub fn error_exit_code(e: &Error) -> i32 {
    match e {
        Error::Inadmissible(_) | Error::SizeGuard { .. } | Error::SingularWeight(_) => 1,
        _ => 2,
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Suite {
    Sylvester,
    Comatrix,
    Minors,
    Rtt,
    Centralizer,
    Transvector,
}

impl Suite {
    pub const ALL: [Suite; 6] = [
        Suite::Sylvester,
        Suite::Comatrix,
        Suite::Minors,
        Suite::Rtt,
        Suite::Centralizer,
        Suite::Transvector,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Sylvester => "sylvester",
            Suite::Comatrix => "comatrix",
            Suite::Minors => "minors",
            Suite::Rtt => "rtt",
            Suite::Centralizer => "centralizer",
            Suite::Transvector => "transvector",
        }
    }
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Suite::ALL
            .into_iter()
            .find(|x| x.name() == s)
            .ok_or_else(|| Error::InvalidParameters(format!("unknown suite {s:?}")))
    }
}

/// Command-line parameters shared by all commands.
#[derive(Clone, Debug, Default)]
pub struct Params {
    pub m: Option<usize>,
    pub n: Option<usize>,
    pub s: Option<usize>,
    pub lambda: Option<Partition>,
    pub mu: Option<Partition>,
    pub full: bool,
    pub seed: Option<u64>,
    pub max_size: Option<u128>,
}

impl Params {
    fn need<T: Clone>(v: &Option<T>, flag: &str) -> Result<T> {
        v.clone()
            .ok_or_else(|| Error::InvalidParameters(format!("--{flag} is required")))
    }

    fn bound(&self) -> u128 {
        self.max_size.unwrap_or_else(size_bound_from_env)
    }

    fn echo(&self, command: &str) -> String {
        let mut out = command.to_string();
        let mut push = |flag: &str, v: Option<String>| {
            if let Some(v) = v {
                out.push_str(&format!(" --{flag} {v}"));
            }
        };
        push("m", self.m.map(|x| x.to_string()));
        push("n", self.n.map(|x| x.to_string()));
        push("s", self.s.map(|x| x.to_string()));
        push("lambda", self.lambda.as_ref().map(comma));
        push("mu", self.mu.as_ref().map(comma));
        push("seed", self.seed.map(|x| x.to_string()));
        push("max-size", self.max_size.map(|x| x.to_string()));
        if self.full {
            out.push_str(" --full");
        }
        out
    }
}

fn comma(p: &Partition) -> String {
    let parts: Vec<String> = p.parts().iter().map(ToString::to_string).collect();
    parts.join(",")
}

const DEFAULT_SEED: u64 = 1;

pub fn run_verify(suite: Suite, p: &Params) -> Result<Report> {
    let start = Timer::start();
    let seed = p.seed.unwrap_or(DEFAULT_SEED);
    let checks = match suite {
        Suite::Sylvester => minor::check_sylvester(Params::need(&p.m, "m")?, Params::need(&p.n, "n")?)?,
        Suite::Comatrix => {
            let n = Params::need(&p.n, "n")?;
            let mut checks = minor::check_comatrix(n)?;
            if let Some(m) = p.m {
                checks.extend(minor::check_comatrix_block(n, m)?);
            }
            checks
        }
        Suite::Minors => {
            let n = Params::need(&p.n, "n")?;
            let mut checks = minor::check_minor_relations(n)?;
            checks.push(minor::check_qdet_central(n));
            checks
        }
        Suite::Rtt => {
            let n = Params::need(&p.n, "n")?;
            let s = p.s.unwrap_or(3);
            rmatrix::check_rtt(n, s, &rmatrix::sample_parameters(s, seed))?
        }
        Suite::Centralizer => {
            let (m, n) = (Params::need(&p.m, "m")?, Params::need(&p.n, "n")?);
            let mut checks = centralizer::check_centralizer(m, n)?;
            checks.extend(centralizer::check_classical_sylvester(m, n, 10, seed)?);
            checks
        }
        Suite::Transvector => {
            let lambda = Params::need(&p.lambda, "lambda")?;
            transvector::check_transvector(&lambda, Params::need(&p.m, "m")?, Params::need(&p.n, "n")?, p.bound(), seed)?
        }
    };
    Ok(Report::new(p.echo(&format!("verify {}", suite.name())), checks, Value::Null, start))
}

fn combinatorics_json(c: &elementary::Combinatorics) -> Value {
    let d = &c.drinfeld;
    json!({
        "lambda": c.skew.lambda.parts(),
        "mu": c.skew.mu.parts(),
        "m": c.skew.m,
        "n": c.skew.n,
        "cells": c.skew.cells,
        "nu": c.weight.nu,
        "highest_weight": c.weight.numerators.iter().map(|p| json!({
            "numerator": poly_json(p),
            "denominator": poly_json(&c.weight.denominator),
        })).collect::<Vec<_>>(),
        "drinfeld": d.polys().iter().map(poly_json).collect::<Vec<_>>(),
        "drinfeld_from_contents": d.from_contents.iter().map(|s| poly_json(&RatPoly::from_shifts(s.iter().map(|&c| q(c))))).collect::<Vec<_>>(),
        "drinfeld_agree": d.agree() && d.ratio_holds,
        "zeta_word": elementary::format_word(&c.skew.zeta_word()),
    })
}

/// `m` for the combinatorial commands: `--m`, else the length of `μ` (at least 1).
fn default_m(p: &Params, mu: &Partition) -> usize {
    p.m.unwrap_or_else(|| mu.len().max(1))
}

pub fn run_drinfeld(p: &Params) -> Result<Report> {
    let start = Timer::start();
    let lambda = Params::need(&p.lambda, "lambda")?;
    let mu = p.mu.clone().unwrap_or_default();
    let n = Params::need(&p.n, "n")?;
    let m = default_m(p, &mu);
    let comb = elementary::combinatorics(&lambda, &mu, m, n)?;
    let checks = elementary::check_combinatorics(&lambda, &mu, m, n)?;
    Ok(Report::new(p.echo("drinfeld"), checks, combinatorics_json(&comb), start))
}

pub fn run_elementary(p: &Params) -> Result<Report> {
    let start = Timer::start();
    let lambda = Params::need(&p.lambda, "lambda")?;
    let mu = p.mu.clone().unwrap_or_default();
    let n = Params::need(&p.n, "n")?;
    let m = default_m(p, &mu);
    let comb = elementary::combinatorics(&lambda, &mu, m, n)?;
    let checks = if p.full {
        elementary::verify_elementary(&lambda, &mu, m, n, p.bound())?
    } else {
        elementary::check_combinatorics(&lambda, &mu, m, n)?
    };
    Ok(Report::new(p.echo("elementary"), checks, combinatorics_json(&comb), start))
}

pub fn run_capelli(p: &Params) -> Result<Report> {
    let start = Timer::start();
    let lambda = Params::need(&p.lambda, "lambda")?;
    let n = Params::need(&p.n, "n")?;
    let (measured, expected) = centralizer::capelli_eigenvalue(&lambda, n)?;
    let (num, den) = centralizer::capelli_eigenvalue_reduced(&lambda, n);
    let check = centralizer::check_capelli_eigenvalue(&lambda, n)?;
    let data = json!({
        "measured": measured.as_ref().map(poly_json),
        "expected": poly_json(&expected),
        "denominator": poly_json(&RatPoly::falling(n)),
        "reduced": { "numerator": num, "denominator": den },
    });
    Ok(Report::new(p.echo("capelli"), vec![check], data, start))
}
