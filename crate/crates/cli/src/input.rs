use std::path::Path;

use eigendisc_core::eigen::TensorData;
use eigendisc_core::mpoly::{parse_poly, var_index, MPoly, PARAM_OFFSET};
use num_bigint::BigInt;
use serde::Deserialize;

use crate::error::CliError;

/// Tensor file layout: `{"n": 3, "d": 3, "symmetric": true, "entries":
/// [[[0, 1, 2], "u"], [[0, 0, 0], 5]]}`. Values are integers or strings in
/// the polynomial grammar and may involve parameters.
#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct TensorFile {
    n: usize,
    d: u32,
    #[serde(default)]
    symmetric: bool,
    entries: Vec<(Vec<usize>, serde_json::Value)>,
}

pub fn read_tensor(path: &Path, force_symmetric: bool) -> Result<TensorData, CliError> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| CliError::Input(format!("cannot read {}: {e}", path.display())))?;
    let file: TensorFile = serde_json::from_str(&text)
        .map_err(|e| CliError::Input(format!("malformed tensor file {}: {e}", path.display())))?;
    let mut pairs = Vec::with_capacity(file.entries.len());
    for (idx, value) in file.entries {
        let src = match value {
            serde_json::Value::Number(n) => n.to_string(),
            serde_json::Value::String(s) => s,
            other => return Err(CliError::Input(format!("tensor entry {idx:?}: unsupported value {other}"))),
        };
        pairs.push((idx, parse_poly(&src, Some(0))?));
    }
    Ok(TensorData::from_pairs(file.n, file.d, pairs, file.symmetric || force_symmetric)?)
}

pub fn parse_forms(sources: &[String], arity: usize) -> Result<Vec<MPoly<BigInt>>, CliError> {
    sources.iter().map(|s| Ok(parse_poly(s, Some(arity))?)).collect()
}

/// Degrees from `--degrees` if given, otherwise read off the forms.
pub fn form_degrees(forms: &[MPoly<BigInt>], explicit: &[u32]) -> Result<Vec<u32>, CliError> {
    if !explicit.is_empty() {
        if explicit.len() != forms.len() {
            return Err(CliError::Input(format!("{} degrees given for {} forms", explicit.len(), forms.len())));
        }
        return Ok(explicit.to_vec());
    }
    forms
        .iter()
        .enumerate()
        .map(|(i, f)| {
            f.projective_degree().ok_or_else(|| {
                CliError::Input(format!("form {i} is zero or not homogeneous; pass --degrees to declare degrees"))
            })
        })
        .collect()
}

/// Pairs `--param` names with `--bound` values.
pub fn parse_bounds(names: &[String], bounds: &[u32]) -> Result<Vec<(usize, u32)>, CliError> {
    if names.len() != bounds.len() {
        return Err(CliError::Input(format!("{} --param flags but {} --bound flags", names.len(), bounds.len())));
    }
    let mut out = Vec::new();
    for (name, &b) in names.iter().zip(bounds) {
        let slot = var_index(name)
            .filter(|&s| s >= PARAM_OFFSET)
            .ok_or_else(|| CliError::Input(format!("unknown parameter {name:?}; use u, v, w or t")))?;
        if out.iter().any(|&(s, _)| s == slot) {
            return Err(CliError::Input(format!("parameter {name} given twice")));
        }
        out.push((slot, b));
    }
    Ok(out)
}

/// Parameter slots occurring in any of the polynomials, sorted.
pub fn parameters_of(polys: &[MPoly<BigInt>]) -> Vec<usize> {
    let mut slots: Vec<usize> = polys.iter().flat_map(|p| p.parameters()).collect();
    slots.sort_unstable();
    slots.dedup();
    slots
}
