//! Eigendiscriminants of families, by evaluation and interpolation.

use num_bigint::BigInt;
use num_traits::Zero;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use super::compute::{default_index, eigendisc_at_index, index_choices};
use super::{eigendisc, eigendisc_degree, EigenError, EigenOptions};
use crate::exactla::{interpolate, InterpError, IntegerRing, PointOutcome};
use crate::mpoly::{MPoly, RationalMapData, PARAM_OFFSET};
use crate::resultant::{random_unimodular, ROBUST_RETRIES};

/// The parameter slot of `t`.
const T_SLOT: usize = PARAM_OFFSET + 3;

/// Degree bound per parameter: the eigendiscriminant is homogeneous of
/// known degree in the coefficients of the map.
pub fn default_bounds(map: &RationalMapData) -> Vec<(usize, u32)> {
    let total = eigendisc_degree(map.n(), map.d()) as u32;
    map.parameters()
        .into_iter()
        .map(|slot| {
            let per = map.forms().iter().map(|f| f.degree_in_var(slot)).max().unwrap_or(0);
            (slot, per * total)
        })
        .collect()
}

/// Interpolates with one fixed index tuple; points where its cofactors
/// vanish are skipped.
fn interpolate_fixed(
    map: &RationalMapData,
    bounds: &[(usize, u32)],
    idx: &[usize],
    seed: u64,
) -> Result<Option<MPoly<BigInt>>, EigenError> {
    let ring = IntegerRing::new();
    let result = interpolate(bounds, |point| {
        let specialized = map.eval_params(point);
        match eigendisc_at_index(&ring, &specialized, idx, seed) {
            Ok(r) => Ok(PointOutcome::Value(r.value)),
            Err(EigenError::VanishingCofactors(_)) => Ok(PointOutcome::Skip),
            Err(e) => Err(e),
        }
    });
    match result {
        Ok(p) => Ok(Some(p)),
        Err(InterpError::TooManySkipped { .. }) => Ok(None),
        Err(InterpError::Eval(e)) => Err(e),
        Err(e) => Err(EigenError::Interpolation(e.to_string())),
    }
}

/// Eigendiscriminant of a map whose coefficients are polynomials in the
/// parameters, as a polynomial in the parameters.
///
/// A whole interpolation runs with one index tuple. If that tuple's
/// cofactors vanish on too many points the next one is tried, and then
/// the family is conjugated by a fixed unimodular matrix.
pub fn eigendisc_parametric(
    map: &RationalMapData,
    bounds: Option<&[(usize, u32)]>,
    opts: &EigenOptions,
) -> Result<MPoly<BigInt>, EigenError> {
    let bounds = bounds.map(<[_]>::to_vec).unwrap_or_else(|| default_bounds(map));
    if bounds.is_empty() {
        let v = eigendisc(&IntegerRing::new(), map, opts)?.value;
        return Ok(MPoly::constant(v, 0));
    }
    let n = map.n();
    let first = opts.index.clone().unwrap_or_else(|| default_index(n));
    let mut order = vec![first.clone()];
    if opts.fallback {
        order.extend(index_choices(n).into_iter().filter(|t| *t != first));
    }
    for idx in &order {
        if let Some(p) = interpolate_fixed(map, &bounds, idx, opts.seed)? {
            return Ok(p);
        }
    }
    if opts.robust {
        let mut rng = ChaCha8Rng::seed_from_u64(opts.seed ^ 0xfa11_bac4);
        for _ in 0..ROBUST_RETRIES {
            let conj = map.conjugate(&random_unimodular(n, &mut rng));
            if let Some(p) = interpolate_fixed(&conj, &bounds, &order[0], opts.seed)? {
                return Ok(p);
            }
        }
    }
    Err(EigenError::VanishingCofactors(first))
}

/// Value at `t = 0` of the eigendiscriminant of `map + t * direction`.
///
/// Useful when every decomposition of `map` itself has vanishing
/// cofactors: the family is generic, its special member is recovered as a
/// limit. `t` must not already occur in the map.
pub fn eigendisc_perturbed(
    map: &RationalMapData,
    direction: &RationalMapData,
    opts: &EigenOptions,
) -> Result<MPoly<BigInt>, EigenError> {
    if map.parameters().contains(&T_SLOT) {
        return Err(EigenError::Parametric);
    }
    let n = map.n();
    let t = MPoly::var(T_SLOT, n);
    let forms: Vec<MPoly<BigInt>> = map.forms().iter().zip(direction.forms()).map(|(f, g)| f + &(&t * g)).collect();
    let family = RationalMapData::new(n, map.d(), forms)?;
    let mut bounds = default_bounds(map);
    bounds.push((T_SLOT, eigendisc_degree(n, map.d()) as u32));
    // t goes first so that its node 0 is skipped at the outermost level.
    bounds.rotate_right(1);
    let p = eigendisc_parametric(&family, Some(&bounds), opts)?;
    Ok(p.eval_params(&[(T_SLOT, BigInt::zero())]))
}

/// A seeded direction for [`eigendisc_perturbed`] with entries in `[-3, 3]`.
pub fn random_direction(n: usize, d: u32, seed: u64) -> Result<RationalMapData, EigenError> {
    use rand::Rng;
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0xd1ec_7104);
    let forms = (0..n)
        .map(|_| {
            let terms = crate::mpoly::monomials_of_degree(n, d - 1)
                .into_iter()
                .map(|m| (m, BigInt::from(rng.gen_range(-3i64..=3))));
            MPoly::from_terms(n, terms)
        })
        .collect();
    Ok(RationalMapData::new(n, d, forms)?)
}
