//! Discriminants of `n` forms in `n + 1` variables through the identity
//! `Res(f, J_w) = Disc(f) * Res(f, x_w)`.
//!
//! Sign convention: `J_w` is `(-1)^w` times the Jacobian minor without
//! column `w`, and the quotient is taken as is ([`DISC_SIGN`] is `+1`).
//! This is the normalization under which the polarization formula
//! `Disc(g g', ...) = (-1)^(d d' d_1...) Disc(g, ...) Disc(g', ...) Res(g, g', ...)^2`
//! holds; the binary quadratic `a x0^2 + b x0 x1 + c x1^2` then has
//! discriminant `4ac - b^2`.

use num_bigint::BigInt;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

use crate::exactla::{det_int_small, EvalRing};
use crate::mpoly::{MPoly, Monomial};
use crate::resultant::{random_unimodular, resultant, ResultantError, ROBUST_RETRIES};

/// Global sign applied to every discriminant quotient.
pub const DISC_SIGN: i64 = 1;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DiscError {
    #[error("expected {expected} forms in {vars} variables, got {got}")]
    Shape { expected: usize, vars: usize, got: usize },
    #[error("sum of (d_i - 1) must be positive")]
    DegenerateDegrees,
    #[error("witness {0}: Res(f, x_{0}) vanishes")]
    WitnessVanishes(usize),
    #[error("all witnesses vanish after {0} coordinate changes")]
    PersistentDegeneracy(usize),
    #[error("discriminant quotient is not exact (internal tripwire)")]
    NotDivisible,
    #[error(transparent)]
    Resultant(ResultantError),
}

impl From<ResultantError> for DiscError {
    fn from(e: ResultantError) -> Self {
        match e {
            ResultantError::NotDivisible => DiscError::NotDivisible,
            other => DiscError::Resultant(other),
        }
    }
}

/// Determinant of a small square matrix of polynomials by Laplace expansion.
fn poly_det(m: &[Vec<MPoly<BigInt>>], arity: usize) -> MPoly<BigInt> {
    match m.len() {
        0 => MPoly::one(arity),
        1 => m[0][0].clone(),
        2 => &(&m[0][0] * &m[1][1]) - &(&m[0][1] * &m[1][0]),
        n => {
            let mut acc = MPoly::zero(arity);
            for c in 0..n {
                if m[0][c].is_zero() {
                    continue;
                }
                let minor: Vec<Vec<MPoly<BigInt>>> = m[1..]
                    .iter()
                    .map(|row| row.iter().enumerate().filter(|&(j, _)| j != c).map(|(_, v)| v.clone()).collect())
                    .collect();
                let term = &m[0][c] * &poly_det(&minor, arity);
                acc = if c % 2 == 0 { &acc + &term } else { &acc - &term };
            }
            acc
        }
    }
}

/// `J_w(f_0, ..., f_{n-1})`: `(-1)^w` times the Jacobian minor omitting
/// the column of `d/dx_w`.
pub fn jacobian_minor(forms: &[MPoly<BigInt>], omit: usize) -> MPoly<BigInt> {
    let nvars = forms.len() + 1;
    assert!(omit < nvars, "omitted column {omit} out of range");
    let arity = forms.first().map_or(nvars, |f| f.arity());
    let rows: Vec<Vec<MPoly<BigInt>>> = forms
        .iter()
        .map(|f| (0..nvars).filter(|&c| c != omit).map(|c| f.partial_derivative(c)).collect())
        .collect();
    let minor = poly_det(&rows, arity);
    if omit.is_multiple_of(2) {
        minor
    } else {
        -minor
    }
}

fn check_shape(forms: &[MPoly<BigInt>], degrees: &[u32]) -> Result<usize, DiscError> {
    let n = forms.len();
    if n == 0 || degrees.len() != n {
        return Err(DiscError::Shape { expected: degrees.len(), vars: n + 1, got: n });
    }
    if degrees.iter().map(|&d| d as i64 - 1).sum::<i64>() <= 0 {
        return Err(DiscError::DegenerateDegrees);
    }
    Ok(n)
}

/// Partial degree of the discriminant in the coefficients of form `i`.
pub fn partial_degree(degrees: &[u32], i: usize) -> u64 {
    let prod: u64 = degrees.iter().enumerate().filter(|&(j, _)| j != i).map(|(_, &d)| d as u64).product();
    let excess: u64 = degrees.iter().map(|&d| d as u64 - 1).sum();
    prod * (degrees[i] as u64 - 1 + excess)
}

/// Exponent `e` in `Disc(f o phi) = det(phi)^e Disc(f)`.
pub fn discriminant_weight(degrees: &[u32]) -> u64 {
    let total: u64 = (0..degrees.len()).map(|i| degrees[i] as u64 * partial_degree(degrees, i)).sum();
    total / (degrees.len() as u64 + 1)
}

/// Discriminant through the defining identity with witness variable `x_w`.
///
/// The resultants inside are themselves robust, so only a vanishing
/// `Res(f, x_w)` makes a witness unusable.
pub fn discriminant_ci<R: EvalRing>(
    ring: &R,
    forms: &[MPoly<BigInt>],
    degrees: &[u32],
    witness: usize,
    seed: u64,
) -> Result<R::Elem, DiscError> {
    let n = check_shape(forms, degrees)?;
    let arity = forms[0].arity();
    let jac = jacobian_minor(forms, witness);
    let jdeg: u32 = degrees.iter().map(|&d| d - 1).sum();
    let mut with_j = forms.to_vec();
    with_j.push(jac);
    let mut jdegrees = degrees.to_vec();
    jdegrees.push(jdeg);
    let mut with_x = forms.to_vec();
    with_x.push(MPoly::monomial(BigInt::from(1), Monomial::var(witness), arity));
    let mut xdegrees = degrees.to_vec();
    xdegrees.push(1);
    debug_assert_eq!(with_x.len(), n + 1);
    let den = resultant(ring, &with_x, &xdegrees, seed)?;
    if ring.is_zero(&den) {
        return Err(DiscError::WitnessVanishes(witness));
    }
    let num = resultant(ring, &with_j, &jdegrees, seed)?;
    let q = ring.div_exact(&num, &den).map_err(|_| DiscError::NotDivisible)?;
    Ok(if DISC_SIGN < 0 { ring.neg(&q) } else { q })
}

/// Values from every witness whose denominator does not vanish.
pub fn discriminant_all_witnesses<R: EvalRing>(
    ring: &R,
    forms: &[MPoly<BigInt>],
    degrees: &[u32],
    seed: u64,
) -> Result<Vec<(usize, R::Elem)>, DiscError> {
    let mut out = Vec::new();
    for w in 0..=forms.len() {
        match discriminant_ci(ring, forms, degrees, w, seed) {
            Ok(v) => out.push((w, v)),
            Err(DiscError::WitnessVanishes(_)) => {}
            Err(e) => return Err(e),
        }
    }
    Ok(out)
}

/// Tries witnesses `0..=n`, then random unimodular coordinate changes
/// (which leave the discriminant unchanged).
///
/// A form that is identically zero gives zero: the discriminant has
/// positive degree in the coefficients of every form.
pub fn discriminant_robust<R: EvalRing>(
    ring: &R,
    forms: &[MPoly<BigInt>],
    degrees: &[u32],
    seed: u64,
) -> Result<R::Elem, DiscError> {
    check_shape(forms, degrees)?;
    if forms.iter().any(|f| f.is_zero()) {
        return Ok(ring.zero());
    }
    if let Some(v) = first_witness(ring, forms, degrees, seed)? {
        return Ok(v);
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0x5eed_d15c);
    for _ in 0..ROBUST_RETRIES {
        let phi = random_unimodular(forms.len() + 1, &mut rng);
        debug_assert_eq!(det_int_small(&phi), BigInt::from(1));
        let changed: Vec<MPoly<BigInt>> = forms.iter().map(|f| f.linear_change(&phi)).collect();
        if let Some(v) = first_witness(ring, &changed, degrees, seed)? {
            return Ok(v);
        }
    }
    Err(DiscError::PersistentDegeneracy(ROBUST_RETRIES))
}

fn first_witness<R: EvalRing>(
    ring: &R,
    forms: &[MPoly<BigInt>],
    degrees: &[u32],
    seed: u64,
) -> Result<Option<R::Elem>, DiscError> {
    for w in 0..=forms.len() {
        match discriminant_ci(ring, forms, degrees, w, seed) {
            Ok(v) => return Ok(Some(v)),
            Err(DiscError::WitnessVanishes(_)) => continue,
            Err(e) => return Err(e),
        }
    }
    Ok(None)
}

#[cfg(test)]
mod tests;
