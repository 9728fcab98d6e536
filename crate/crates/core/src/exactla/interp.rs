//! Tensor-product Newton interpolation over the rationals.
//!
//! The parameters are peeled off one at a time: for each node of the first
//! parameter the remaining ones are interpolated recursively, and the
//! resulting coefficient polynomials are then interpolated in the first
//! parameter. Each level takes one extra node and checks the interpolant
//! there, which catches degree bounds that are too small.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::One;
use rayon::prelude::*;
use thiserror::Error;

use crate::mpoly::{MPoly, Monomial};

/// Result of evaluating at one parameter point.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum PointOutcome {
    Value(BigInt),
    /// The point is unusable (e.g. a cofactor vanishes); pick another.
    Skip,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum InterpError<E> {
    #[error("interpolant has non-integral coefficients")]
    NotIntegral,
    #[error("degree bound for parameter slot {0} is too small (fresh-point check failed)")]
    InsufficientBound(usize),
    #[error("too many unusable evaluation points for parameter slot {param} ({skipped} skipped)")]
    TooManySkipped { param: usize, skipped: usize },
    #[error("evaluation failed: {0}")]
    Eval(E),
}

/// The node sequence 0, 1, -1, 2, -2, ... truncated to `count` entries.
pub fn integer_nodes(count: usize) -> Vec<BigInt> {
    (0..count as i64)
        .map(|k| if k % 2 == 1 { BigInt::from((k + 1) / 2) } else { BigInt::from(-k / 2) })
        .collect()
}

type QPoly = MPoly<BigRational>;

/// Reconstructs an integer polynomial in the parameter slots of `bounds`
/// from its values at integer points.
///
/// `bounds` pairs a parameter slot with a degree bound in it. `eval` may
/// report a point as unusable; such points are replaced by later nodes.
pub fn interpolate<E, F>(bounds: &[(usize, u32)], eval: F) -> Result<MPoly<BigInt>, InterpError<E>>
where
    E: Send,
    F: Fn(&[(usize, BigInt)]) -> Result<PointOutcome, E> + Sync,
{
    let q = match interp_rec(bounds, &[], &eval)? {
        Some(q) => q,
        None => {
            return Err(InterpError::TooManySkipped { param: bounds.first().map_or(0, |b| b.0), skipped: 0 })
        }
    };
    let mut out = MPoly::zero(0);
    for (m, c) in q.terms() {
        if !c.is_integer() {
            return Err(InterpError::NotIntegral);
        }
        out = &out + &MPoly::monomial(c.to_integer(), *m, 0);
    }
    Ok(out)
}

fn interp_rec<E, F>(
    bounds: &[(usize, u32)],
    fixed: &[(usize, BigInt)],
    eval: &F,
) -> Result<Option<QPoly>, InterpError<E>>
where
    E: Send,
    F: Fn(&[(usize, BigInt)]) -> Result<PointOutcome, E> + Sync,
{
    let Some((&(slot, bound), rest)) = bounds.split_first() else {
        return match eval(fixed).map_err(InterpError::Eval)? {
            PointOutcome::Value(v) => Ok(Some(QPoly::constant(BigRational::from_integer(v), 0))),
            PointOutcome::Skip => Ok(None),
        };
    };
    let needed = bound as usize + 2;
    let budget = 4 * needed + 16;
    let all_nodes = integer_nodes(budget);
    let mut good: Vec<(BigInt, QPoly)> = Vec::with_capacity(needed);
    let mut next = 0;
    while good.len() < needed {
        if next >= all_nodes.len() {
            return Err(InterpError::TooManySkipped { param: slot, skipped: next - good.len() });
        }
        let take = (needed - good.len()).min(all_nodes.len() - next);
        let batch = &all_nodes[next..next + take];
        next += take;
        let results: Vec<Result<Option<QPoly>, InterpError<E>>> = batch
            .par_iter()
            .map(|x| {
                let mut local = fixed.to_vec();
                local.push((slot, x.clone()));
                match interp_rec(rest, &local, eval) {
                    // An inner family that is unusable everywhere makes this node unusable.
                    Err(InterpError::TooManySkipped { .. }) => Ok(None),
                    other => other,
                }
            })
            .collect();
        for (x, r) in batch.iter().zip(results) {
            if let Some(v) = r? {
                good.push((x.clone(), v));
            }
        }
    }
    good.truncate(needed);
    let (fresh_x, fresh_v) = good.pop().expect("at least two nodes");
    let poly = newton(slot, &good);
    let at_fresh = poly.specialize(&[(slot, QPoly::constant(BigRational::from_integer(fresh_x), 0))]);
    if at_fresh != fresh_v {
        return Err(InterpError::InsufficientBound(slot));
    }
    Ok(Some(poly))
}

/// Newton divided differences with polynomial-valued data.
fn newton(slot: usize, data: &[(BigInt, QPoly)]) -> QPoly {
    let xs: Vec<BigRational> = data.iter().map(|(x, _)| BigRational::from_integer(x.clone())).collect();
    let mut c: Vec<QPoly> = data.iter().map(|(_, v)| v.clone()).collect();
    let m = c.len();
    for j in 1..m {
        for i in (j..m).rev() {
            let inv = (&xs[i] - &xs[i - j]).recip();
            c[i] = (&c[i] - &c[i - 1]).scalar_mul(&inv);
        }
    }
    let var = QPoly::monomial(BigRational::one(), Monomial::var(slot), 0);
    let mut p = c[m - 1].clone();
    for i in (0..m - 1).rev() {
        let shift = &var - &QPoly::constant(xs[i].clone(), 0);
        p = &(&p * &shift) + &c[i];
    }
    p
}
