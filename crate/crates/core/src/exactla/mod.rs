//! Exact determinants over the integers, prime fields and parameter
//! polynomial rings, plus evaluation/interpolation for parametric matrices.

mod det;
mod interp;
mod matrix;
mod ring;

use num_bigint::BigInt;
use thiserror::Error;

pub use det::{
    adjugate_int, det_fraction_free, det_int_small, det_mod_prime, det_modular_crt, hadamard_bound_bits,
    max_abs_entry,
};
pub use interp::{interpolate, integer_nodes, InterpError, PointOutcome};
pub use matrix::ExactMatrix;
pub use ring::{EvalRing, IntDetStrategy, IntegerRing, PolyRing, PrimeField, RingError};

use crate::mpoly::MPoly;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LinalgError {
    #[error("matrix is not square ({0}x{1})")]
    NotSquare(usize, usize),
    #[error(transparent)]
    Ring(#[from] RingError),
    #[error("prime pool too small: need {needed_bits} bits, pool has {pool} primes")]
    PrimePoolExhausted { needed_bits: u64, pool: usize },
    #[error("CRT determinant failed its verification prime")]
    VerificationFailed,
    #[error(transparent)]
    Interpolation(#[from] InterpError<Box<LinalgError>>),
}

/// Determinant of a matrix whose entries are polynomials in the formal
/// parameters, by evaluation at integer points and interpolation.
///
/// `bounds` gives, per parameter slot, an upper bound on the degree of the
/// determinant in that parameter. A bound that proves too small is caught
/// by the fresh-point re-check and reported.
pub fn det_by_interpolation(
    m: &ExactMatrix<MPoly<BigInt>>,
    bounds: &[(usize, u32)],
) -> Result<MPoly<BigInt>, LinalgError> {
    if !m.is_square() {
        return Err(LinalgError::NotSquare(m.rows(), m.cols()));
    }
    interpolate(bounds, |point| {
        let evaluated = m.try_map(|e| {
            e.eval_params(point).constant_value().ok_or(RingError::NonConstant)
        });
        match evaluated {
            Ok(mat) => det_modular_crt(&mat, None).map(PointOutcome::Value).map_err(Box::new),
            Err(e) => Err(Box::new(LinalgError::Ring(e))),
        }
    })
    .map_err(LinalgError::Interpolation)
}

#[cfg(test)]
mod tests;
