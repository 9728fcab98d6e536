//! Resultants of `n + 1` homogeneous forms in `n + 1` variables.
//!
//! Binary forms go through the Sylvester matrix; everything else through
//! Macaulay's ratio of determinants. Degrees are always declared by the
//! caller, since specializations can kill leading terms without changing
//! the formal degree.

use std::collections::HashMap;

use num_bigint::BigInt;
use num_traits::{One, Signed};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

use crate::exactla::{det_int_small, EvalRing, ExactMatrix, LinalgError, RingError};
use crate::mpoly::{monomials_of_degree, MPoly, Monomial};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ResultantError {
    #[error("expected {expected} forms, got {got}")]
    FormCount { expected: usize, got: usize },
    #[error("form {0} uses variables beyond the declared ones")]
    Arity(usize),
    #[error("form {index} is not homogeneous of declared degree {degree}")]
    NotHomogeneous { index: usize, degree: u32 },
    #[error("non-generic specialization: Macaulay denominator vanishes")]
    NonGeneric,
    #[error("non-generic after {0} random coordinate changes")]
    PersistentDegeneracy(usize),
    #[error("known factor is zero; specialization is not generic")]
    ZeroFactor,
    #[error("exact division failed (internal tripwire)")]
    NotDivisible,
    #[error(transparent)]
    Linalg(#[from] LinalgError),
    #[error(transparent)]
    Ring(RingError),
}

impl From<RingError> for ResultantError {
    fn from(e: RingError) -> Self {
        match e {
            RingError::NotDivisible => ResultantError::NotDivisible,
            other => ResultantError::Ring(other),
        }
    }
}

/// Coefficients of a form keyed by projective monomial, lifted into `ring`.
fn lifted_terms<R: EvalRing>(
    ring: &R,
    g: &MPoly<BigInt>,
    index: usize,
    nvars: usize,
    degree: u32,
) -> Result<Vec<(Monomial, R::Elem)>, ResultantError> {
    if (nvars..crate::mpoly::MAX_PROJECTIVE).any(|v| g.degree_in_var(v) > 0) {
        return Err(ResultantError::Arity(index));
    }
    let mut out = Vec::new();
    for (m, c) in g.split_projective() {
        if m.total_degree() != degree {
            return Err(ResultantError::NotHomogeneous { index, degree });
        }
        let v = ring.lift(&c)?;
        if !ring.is_zero(&v) {
            out.push((m, v));
        }
    }
    Ok(out)
}

/// Sylvester resultant of two binary forms of declared degrees.
///
/// Rows are the `d1` shifts of `g0` followed by the `d0` shifts of `g1`,
/// with coefficients ordered by decreasing power of `x0`; this makes
/// `Res(x0^d0, x1^d1) = 1`.
pub fn resultant_binary<R: EvalRing>(
    ring: &R,
    g0: &MPoly<BigInt>,
    g1: &MPoly<BigInt>,
    d0: u32,
    d1: u32,
) -> Result<R::Elem, ResultantError> {
    let (d0u, d1u) = (d0 as usize, d1 as usize);
    let size = d0u + d1u;
    if size == 0 {
        return Ok(ring.one());
    }
    let mut mat = ExactMatrix::filled(size, size, ring.zero());
    let t0 = lifted_terms(ring, g0, 0, 2, d0)?;
    let t1 = lifted_terms(ring, g1, 1, 2, d1)?;
    for shift in 0..d1u {
        for (m, c) in &t0 {
            mat.set(shift, shift + m.exp(1) as usize, c.clone());
        }
    }
    for shift in 0..d0u {
        for (m, c) in &t1 {
            mat.set(d1u + shift, shift + m.exp(1) as usize, c.clone());
        }
    }
    Ok(ring.det(&mat)?)
}

/// Macaulay's matrix pair for a resultant.
///
/// Columns are the monomials of the critical degree `nu`. The row aligned
/// with column `m` is `(m / x_i^{d_i}) * g_i` for the least `i` with
/// `x_i^{d_i} | m`. The denominator is the principal minor on the
/// monomials divisible by at least two of the `x_i^{d_i}`.
#[derive(Debug, Clone)]
pub struct MacaulaySystem<E> {
    pub degrees: Vec<u32>,
    pub nu: u32,
    pub numerator: ExactMatrix<E>,
    pub denominator_indices: Vec<usize>,
}

impl<E: Clone> MacaulaySystem<E> {
    pub fn denominator(&self) -> ExactMatrix<E> {
        self.numerator.submatrix(&self.denominator_indices, &self.denominator_indices)
    }
}

impl MacaulaySystem<()> {
    /// Builds the system for forms of positive declared degrees in
    /// `forms.len()` variables.
    pub fn build<R: EvalRing>(
        ring: &R,
        forms: &[MPoly<BigInt>],
        degrees: &[u32],
    ) -> Result<MacaulaySystem<R::Elem>, ResultantError> {
        let nvars = forms.len();
        if degrees.len() != nvars {
            return Err(ResultantError::FormCount { expected: nvars, got: degrees.len() });
        }
        let nu: u32 = degrees.iter().map(|&d| d - 1).sum::<u32>() + 1;
        let cols = monomials_of_degree(nvars, nu);
        let index: HashMap<Monomial, usize> = cols.iter().enumerate().map(|(i, m)| (*m, i)).collect();
        let terms: Vec<Vec<(Monomial, R::Elem)>> = forms
            .iter()
            .enumerate()
            .map(|(i, g)| lifted_terms(ring, g, i, nvars, degrees[i]))
            .collect::<Result<_, _>>()?;
        let size = cols.len();
        let mut mat = ExactMatrix::filled(size, size, ring.zero());
        let mut row_labels = Vec::with_capacity(size);
        let mut denominator_indices = Vec::new();
        for (r, m) in cols.iter().enumerate() {
            let hits: Vec<usize> = (0..nvars).filter(|&i| m.exp(i) as u32 >= degrees[i]).collect();
            let i = hits[0];
            if hits.len() >= 2 {
                denominator_indices.push(r);
            }
            let mult = Monomial::var_pow(i, degrees[i] as u16).quotient_of(m);
            for (t, c) in &terms[i] {
                mat.set(r, index[&t.mul(&mult)], c.clone());
            }
            row_labels.push(format!("{mult}*g{i}"));
        }
        let col_labels = cols.iter().map(|m| m.to_string()).collect();
        Ok(MacaulaySystem {
            degrees: degrees.to_vec(),
            nu,
            numerator: mat.with_labels(row_labels, col_labels),
            denominator_indices,
        })
    }
}

fn check_count(forms: &[MPoly<BigInt>], degrees: &[u32]) -> Result<(), ResultantError> {
    if forms.len() != degrees.len() || forms.is_empty() {
        return Err(ResultantError::FormCount { expected: degrees.len(), got: forms.len() });
    }
    Ok(())
}

/// Resultant by the Macaulay formula, exact in `ring`.
///
/// A form of degree zero is a constant `c` and contributes
/// `c^(product of the other degrees)`.
pub fn resultant_macaulay<R: EvalRing>(
    ring: &R,
    forms: &[MPoly<BigInt>],
    degrees: &[u32],
) -> Result<R::Elem, ResultantError> {
    check_count(forms, degrees)?;
    let nvars = forms.len();
    if let Some(z) = degrees.iter().position(|&d| d == 0) {
        let c = lifted_terms(ring, &forms[z], z, nvars, 0)?
            .pop()
            .map_or_else(|| ring.zero(), |(_, c)| c);
        let e: u64 = degrees.iter().enumerate().filter(|&(i, _)| i != z).map(|(_, &d)| d as u64).product();
        return Ok(ring.pow(&c, e));
    }
    let sys = MacaulaySystem::build(ring, forms, degrees)?;
    let den = ring.det(&sys.denominator())?;
    if ring.is_zero(&den) {
        return Err(ResultantError::NonGeneric);
    }
    let num = ring.det(&sys.numerator)?;
    Ok(ring.div_exact(&num, &den)?)
}

/// Exponent `e` in `Res(g o phi) = det(phi)^e Res(g)`.
pub fn resultant_weight(degrees: &[u32]) -> u64 {
    degrees.iter().map(|&d| d as u64).product()
}

/// Seeded random integer matrix of determinant 1 (a product of unit
/// lower and upper triangular matrices with small entries).
pub fn random_unimodular(n: usize, rng: &mut ChaCha8Rng) -> Vec<Vec<BigInt>> {
    let mut lower = vec![vec![BigInt::from(0); n]; n];
    let mut upper = vec![vec![BigInt::from(0); n]; n];
    for i in 0..n {
        lower[i][i] = BigInt::one();
        upper[i][i] = BigInt::one();
        for j in 0..i {
            lower[i][j] = BigInt::from(rng.gen_range(-2i64..=2));
            upper[j][i] = BigInt::from(rng.gen_range(-2i64..=2));
        }
    }
    mat_mul(&lower, &upper)
}

pub fn mat_mul(a: &[Vec<BigInt>], b: &[Vec<BigInt>]) -> Vec<Vec<BigInt>> {
    let n = a.len();
    let m = b[0].len();
    (0..n)
        .map(|i| (0..m).map(|j| (0..b.len()).map(|k| &a[i][k] * &b[k][j]).sum()).collect())
        .collect()
}

/// Resultant of the forms after the substitution `x -> phi x`, divided by
/// the invariance factor so that the original resultant is returned.
pub fn resultant_via_change<R: EvalRing>(
    ring: &R,
    forms: &[MPoly<BigInt>],
    degrees: &[u32],
    phi: &[Vec<BigInt>],
) -> Result<R::Elem, ResultantError> {
    let changed: Vec<MPoly<BigInt>> = forms.iter().map(|g| g.linear_change(phi)).collect();
    let value = resultant_macaulay(ring, &changed, degrees)?;
    let det = det_int_small(phi);
    let e = resultant_weight(degrees);
    if det.abs().is_one() {
        let odd = det.is_negative() && e % 2 == 1;
        return Ok(if odd { ring.neg(&value) } else { value });
    }
    let factor = ring.signed_pow(&det, e);
    if ring.is_zero(&factor) {
        return Err(ResultantError::ZeroFactor);
    }
    Ok(ring.div_exact(&value, &factor)?)
}

/// Maximum number of coordinate changes tried by the robust wrappers.
pub const ROBUST_RETRIES: usize = 8;

/// Resultant that falls back to random unimodular coordinate changes when
/// the Macaulay denominator vanishes. The same seed gives the same path.
pub fn resultant_robust<R: EvalRing>(
    ring: &R,
    forms: &[MPoly<BigInt>],
    degrees: &[u32],
    seed: u64,
) -> Result<R::Elem, ResultantError> {
    match resultant_macaulay(ring, forms, degrees) {
        Err(ResultantError::NonGeneric) => {}
        other => return other,
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..ROBUST_RETRIES {
        let phi = random_unimodular(forms.len(), &mut rng);
        match resultant_via_change(ring, forms, degrees, &phi) {
            Err(ResultantError::NonGeneric) => continue,
            other => return other,
        }
    }
    Err(ResultantError::PersistentDegeneracy(ROBUST_RETRIES))
}

/// Resultant with the binary case routed through Sylvester.
pub fn resultant<R: EvalRing>(
    ring: &R,
    forms: &[MPoly<BigInt>],
    degrees: &[u32],
    seed: u64,
) -> Result<R::Elem, ResultantError> {
    check_count(forms, degrees)?;
    if forms.len() == 2 {
        return resultant_binary(ring, &forms[0], &forms[1], degrees[0], degrees[1]);
    }
    resultant_robust(ring, forms, degrees, seed)
}

/// Exact quotient of a resultant by a known factor of it.
pub fn resultant_division<R: EvalRing>(
    ring: &R,
    numerator_res: &R::Elem,
    known_factor: &R::Elem,
) -> Result<R::Elem, ResultantError> {
    if ring.is_zero(known_factor) {
        return Err(ResultantError::ZeroFactor);
    }
    ring.div_exact(numerator_res, known_factor).map_err(|e| match e {
        RingError::DivisionByZero => ResultantError::ZeroFactor,
        _ => ResultantError::NotDivisible,
    })
}

#[cfg(test)]
mod tests;
