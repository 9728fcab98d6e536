use eigendisc_core::coeffring::{CrtAccumulator, PrimeModulus};
use eigendisc_core::exactla::{IntegerRing, PrimeField};
use eigendisc_core::mpoly::VAR_NAMES;

use crate::error::CliError;
use crate::input::parse_bounds;
use crate::jobs::{Extras, Job};
use crate::report::Report;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Mode {
    Exact,
    Modular(Vec<PrimeModulus>),
    /// Interpolation with the given bounds, or the polynomial ring directly.
    Parametric(Option<Vec<(usize, u32)>>),
}

impl Mode {
    /// `present` lists the parameter slots that occur in the input.
    pub fn choose(moduli: &[u64], names: &[String], bounds: &[u32], present: &[usize]) -> Result<Mode, CliError> {
        if !moduli.is_empty() {
            if !present.is_empty() || !names.is_empty() {
                return Err(CliError::Input("--mod cannot be combined with parameters".into()));
            }
            let mut primes = Vec::new();
            for &p in moduli {
                let m = PrimeModulus::new(p)?;
                if !primes.contains(&m) {
                    primes.push(m);
                }
            }
            return Ok(Mode::Modular(primes));
        }
        if names.is_empty() && bounds.is_empty() {
            return Ok(if present.is_empty() { Mode::Exact } else { Mode::Parametric(None) });
        }
        let b = parse_bounds(names, bounds)?;
        if let Some(&slot) = present.iter().find(|s| !b.iter().any(|(t, _)| t == *s)) {
            return Err(CliError::Input(format!("parameter {} occurs in the input but has no --bound", VAR_NAMES[slot])));
        }
        Ok(Mode::Parametric(Some(b)))
    }

    pub fn describe(&self, report: &mut Report) {
        match self {
            Mode::Exact => {
                report.push("mode", "exact");
                report.push("ring", "ZZ");
            }
            Mode::Modular(ps) => {
                report.push("mode", "modular");
                let list: Vec<String> = ps.iter().map(|p| p.get().to_string()).collect();
                report.push("primes", list.join(","));
            }
            Mode::Parametric(b) => {
                report.push("mode", "parametric");
                match b {
                    Some(b) => {
                        let list: Vec<String> = b.iter().map(|&(s, k)| format!("{}:{k}", VAR_NAMES[s])).collect();
                        report.push("bounds", list.join(","));
                    }
                    None => report.push("bounds", "none"),
                }
            }
        }
    }
}

/// Evaluates the default variant and, with `cross_check`, all the others.
/// Returns true when some variant disagrees with the default.
pub fn evaluate<J: Job>(job: &J, mode: &Mode, cross_check: bool, report: &mut Report) -> Result<bool, CliError> {
    let names = job.variant_names();
    match mode {
        Mode::Exact => {
            let ring = IntegerRing::new();
            let f = |k, ex: &mut Extras| Ok(job.eval(&ring, k, ex)?.map(|v| v.to_string()));
            Ok(run_variants(&names, cross_check, "", report, f)?.1)
        }
        Mode::Modular(primes) => {
            let mut mismatch = false;
            let mut crt = CrtAccumulator::new();
            for &p in primes {
                let field = PrimeField::new(p);
                let prefix = if primes.len() > 1 { format!("mod.{p}.") } else { String::new() };
                let f = |k, ex: &mut Extras| Ok(job.eval(&field, k, ex)?.map(|v| v.to_string()));
                let (value, bad) = run_variants(&names, cross_check, &prefix, report, f)?;
                mismatch |= bad;
                let residue: u64 = value.parse().map_err(|_| CliError::Tripwire(format!("bad residue {value}")))?;
                crt.push(residue, p.get())?;
            }
            if primes.len() > 1 {
                report.push("crt_modulus", crt.modulus());
                report.push("crt_image", crt.symmetric());
            }
            Ok(mismatch)
        }
        Mode::Parametric(bounds) => {
            let f = |k, ex: &mut Extras| Ok(job.eval_parametric(bounds.as_deref(), k, ex)?.map(|v| v.to_string()));
            Ok(run_variants(&names, cross_check, "", report, f)?.1)
        }
    }
}

fn run_variants<F>(
    names: &[String],
    cross_check: bool,
    prefix: &str,
    report: &mut Report,
    mut f: F,
) -> Result<(String, bool), CliError>
where
    F: FnMut(usize, &mut Extras) -> Result<Option<String>, CliError>,
{
    let mut extras = Vec::new();
    let value = f(0, &mut extras)?.ok_or_else(|| CliError::Degenerate("no usable evaluation path".into()))?;
    report.push(format!("{prefix}value"), &value);
    report.extend(prefix, extras);
    if !cross_check {
        return Ok((value, false));
    }
    let (mut usable, mut mismatch) = (0, false);
    for (k, name) in names.iter().enumerate().skip(1) {
        match f(k, &mut Vec::new())? {
            Some(v) => {
                usable += 1;
                mismatch |= v != value;
                report.push(format!("{prefix}cross_check.{name}"), v);
            }
            None => report.push(format!("{prefix}cross_check.{name}"), "degenerate"),
        }
    }
    let verdict = match (mismatch, usable) {
        (true, _) => "mismatch",
        (false, 0) => "inconclusive",
        (false, _) => "agree",
    };
    report.push(format!("{prefix}cross_check"), verdict);
    report.push(format!("{prefix}cross_check.usable"), format!("{usable}/{}", names.len() - 1));
    Ok((value, mismatch))
}
