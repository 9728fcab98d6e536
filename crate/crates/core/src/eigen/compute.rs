use num_bigint::BigInt;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use super::{Cofactor, CoordinateChange, EigenError, EigenMinors, EigenOptions, EigendiscResult};
use crate::coeffring::{prime_pool, CrtAccumulator, PrimeModulus};
use crate::discriminant::discriminant_robust;
use crate::exactla::{EvalRing, PrimeField};
use crate::mpoly::{MPoly, RationalMapData};
use crate::resultant::{random_unimodular, resultant, ROBUST_RETRIES};

/// `(0, 1, ..., n - 1)`.
pub fn default_index(n: usize) -> Vec<usize> {
    (0..n).collect()
}

/// All admissible index tuples, the default first.
pub fn index_choices(n: usize) -> Vec<Vec<usize>> {
    if n == 2 {
        return vec![default_index(2)];
    }
    let mut out = Vec::new();
    let mut cur = default_index(n);
    loop {
        out.push(cur.clone());
        let Some(k) = (0..n - 1).rev().find(|&k| cur[k] < cur[k + 1]) else { break };
        let l = (k + 1..n).rev().find(|&l| cur[k] < cur[l]).expect("successor exists");
        cur.swap(k, l);
        cur[k + 1..].reverse();
    }
    out
}

fn check_index(n: usize, idx: &[usize]) -> Result<(), EigenError> {
    let mut sorted = idx.to_vec();
    sorted.sort_unstable();
    if sorted != default_index(n) {
        return Err(EigenError::InvalidIndex(idx.to_vec()));
    }
    Ok(())
}

/// Sets `kill` to zero and renames the remaining variables in order.
fn restrict(p: &MPoly<BigInt>, n: usize, kill: &[usize]) -> MPoly<BigInt> {
    let keep: Vec<usize> = (0..n).filter(|v| !kill.contains(v)).collect();
    p.bar(kill).compress(&keep).expect("killed variables are absent")
}

/// Eigendiscriminant through one fixed index tuple, without fallbacks.
pub fn eigendisc_at_index<R: EvalRing>(
    ring: &R,
    map: &RationalMapData,
    idx: &[usize],
    seed: u64,
) -> Result<EigendiscResult<R::Elem>, EigenError> {
    let n = map.n();
    check_index(n, idx)?;
    match n {
        2 => binary(ring, map, seed),
        3 => ternary(ring, map, idx, seed),
        _ => quaternary(ring, map, idx, seed),
    }
}

fn binary<R: EvalRing>(ring: &R, map: &RationalMapData, seed: u64) -> Result<EigendiscResult<R::Elem>, EigenError> {
    let delta = EigenMinors::new(map).binary();
    let value = discriminant_robust(ring, &[delta], &[map.d()], seed)?;
    Ok(EigendiscResult {
        n: 2,
        d: map.d(),
        ring: ring.name(),
        disc_of_minors: value.clone(),
        value,
        index: default_index(2),
        cofactors: Vec::new(),
        change: None,
    })
}

fn ternary<R: EvalRing>(
    ring: &R,
    map: &RationalMapData,
    idx: &[usize],
    seed: u64,
) -> Result<EigendiscResult<R::Elem>, EigenError> {
    let (i, j, k) = (idx[0], idx[1], idx[2]);
    let d = map.d();
    let minors = EigenMinors::new(map);
    let psi_k = restrict(map.form(k), 3, &[k]);
    let delta_k = restrict(&minors.ternary(k), 3, &[k]);
    let cofactors = vec![
        Cofactor {
            name: format!("Disc(psi{k}|x{k}=0)"),
            value: discriminant_robust(ring, std::slice::from_ref(&psi_k), &[d - 1], seed)?,
            power: 1,
        },
        Cofactor {
            name: format!("Res(delta{k},psi{k}|x{k}=0)"),
            value: resultant(ring, &[delta_k, psi_k], &[d, d - 1], seed)?,
            power: 2,
        },
    ];
    finish(ring, map, idx, cofactors, || {
        Ok(discriminant_robust(ring, &[minors.ternary(i), minors.ternary(j)], &[d, d], seed)?)
    })
}

fn quaternary<R: EvalRing>(
    ring: &R,
    map: &RationalMapData,
    idx: &[usize],
    seed: u64,
) -> Result<EigendiscResult<R::Elem>, EigenError> {
    let (k, i, j, l) = (idx[0], idx[1], idx[2], idx[3]);
    let d = map.d();
    let m = EigenMinors::new(map);
    let at_i = |p: &MPoly<BigInt>| restrict(p, 4, &[i]);
    let at_j = |p: &MPoly<BigInt>| restrict(p, 4, &[j]);
    let psi_i = at_i(map.form(i));
    let psi_j = at_j(map.form(j));
    let psi_i_ij = restrict(map.form(i), 4, &[i, j]);
    let psi_j_ij = restrict(map.form(j), 4, &[i, j]);

    let res2 = resultant(ring, &[psi_i_ij, psi_j_ij], &[d - 1, d - 1], seed)?;
    if ring.is_zero(&res2) {
        return Err(EigenError::VanishingCofactors(idx.to_vec()));
    }
    let c_i = discriminant_robust(ring, &[psi_i.clone(), at_i(&m.pair(j, l))], &[d - 1, d], seed)?;
    let c_j = discriminant_robust(ring, &[psi_j.clone(), at_j(&m.pair(k, i))], &[d - 1, d], seed)?;
    let full_j = resultant(ring, &[psi_i, at_i(&m.pair(k, j)), at_i(&m.pair(j, l))], &[d - 1, d, d], seed)?;
    let full_i = resultant(ring, &[psi_j, at_j(&m.pair(k, i)), at_j(&m.pair(i, l))], &[d - 1, d, d], seed)?;
    let r_j = ring.div_exact(&full_j, &res2).map_err(|_| EigenError::NotDivisible)?;
    let r_i = ring.div_exact(&full_i, &res2).map_err(|_| EigenError::NotDivisible)?;
    let cofactors = vec![
        Cofactor { name: format!("Disc(psi{i},delta{j}{l}|x{i}=0)"), value: c_i, power: 1 },
        Cofactor { name: format!("Disc(psi{j},delta{k}{i}|x{j}=0)"), value: c_j, power: 1 },
        Cofactor { name: format!("Res(psi{i},psi{j}|x{i}=x{j}=0)"), value: res2, power: 2 },
        Cofactor { name: format!("R{i}|x{j}=0"), value: r_i, power: 2 },
        Cofactor { name: format!("R{j}|x{i}=0"), value: r_j, power: 2 },
    ];
    finish(ring, map, idx, cofactors, || {
        Ok(discriminant_robust(ring, &[m.pair(k, i), m.pair(i, j), m.pair(j, l)], &[d, d, d], seed)?)
    })
}

/// Divides the discriminant of the minors by the cofactors and checks the
/// certificate. The discriminant is only computed when the cofactors are
/// nonzero.
fn finish<R: EvalRing>(
    ring: &R,
    map: &RationalMapData,
    idx: &[usize],
    cofactors: Vec<Cofactor<R::Elem>>,
    disc: impl FnOnce() -> Result<R::Elem, EigenError>,
) -> Result<EigendiscResult<R::Elem>, EigenError> {
    let mut den = ring.one();
    for c in &cofactors {
        den = ring.mul(&den, &ring.pow(&c.value, c.power as u64));
    }
    if ring.is_zero(&den) {
        return Err(EigenError::VanishingCofactors(idx.to_vec()));
    }
    let disc_of_minors = disc()?;
    let value = ring.div_exact(&disc_of_minors, &den).map_err(|_| EigenError::NotDivisible)?;
    let result = EigendiscResult {
        n: map.n(),
        d: map.d(),
        ring: ring.name(),
        value,
        index: idx.to_vec(),
        disc_of_minors,
        cofactors,
        change: None,
    };
    if !result.verify(ring) {
        return Err(EigenError::CertificateMismatch);
    }
    Ok(result)
}

fn tuple_order(n: usize, opts: &EigenOptions) -> Result<Vec<Vec<usize>>, EigenError> {
    let first = match &opts.index {
        Some(idx) if n > 2 => {
            check_index(n, idx)?;
            idx.clone()
        }
        _ => default_index(n),
    };
    let mut order = vec![first.clone()];
    if opts.fallback {
        order.extend(index_choices(n).into_iter().filter(|t| *t != first));
    }
    Ok(order)
}

fn first_success<R: EvalRing>(
    ring: &R,
    map: &RationalMapData,
    order: &[Vec<usize>],
    seed: u64,
) -> Result<Option<EigendiscResult<R::Elem>>, EigenError> {
    for idx in order {
        match eigendisc_at_index(ring, map, idx, seed) {
            Ok(r) => return Ok(Some(r)),
            Err(EigenError::VanishingCofactors(_)) => continue,
            Err(e) => return Err(e),
        }
    }
    Ok(None)
}

/// Seed stream for the conjugation fallback, kept apart from the one used
/// inside resultants.
const CONJUGATION_SALT: u64 = 0xe16e_c0de;

/// Eigendiscriminant with index fallback and, if enabled, conjugation by
/// random unimodular matrices. Deterministic for a fixed seed.
pub fn eigendisc<R: EvalRing>(
    ring: &R,
    map: &RationalMapData,
    opts: &EigenOptions,
) -> Result<EigendiscResult<R::Elem>, EigenError> {
    let order = tuple_order(map.n(), opts)?;
    if let Some(r) = first_success(ring, map, &order, opts.seed)? {
        return Ok(r);
    }
    if !opts.robust {
        return Err(EigenError::VanishingCofactors(order[0].clone()));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(opts.seed ^ CONJUGATION_SALT);
    for _ in 0..ROBUST_RETRIES {
        let phi = random_unimodular(map.n(), &mut rng);
        let conj = map.conjugate(&phi);
        if let Some(mut r) = first_success(ring, &conj, &order, opts.seed)? {
            r.change = Some(CoordinateChange { phi, det: BigInt::from(1) });
            return Ok(r);
        }
    }
    Err(EigenError::PersistentDegeneracy(ROBUST_RETRIES))
}

/// Residues of an integer eigendiscriminant modulo word-size primes and the
/// balanced CRT image.
#[derive(Debug, Clone, PartialEq)]
pub struct MultiModular {
    pub primes: Vec<u64>,
    pub residues: Vec<u64>,
    pub value: BigInt,
    /// The image did not change over the last batch of primes.
    pub stable: bool,
}

/// Runs the pipeline over `GF(p)` for primes from the pool until the CRT
/// image is unchanged by `confirm` further primes, or `max_primes` are used.
///
/// Without an a priori bound this is a probabilistic reconstruction; the
/// residues themselves are exact.
pub fn eigendisc_multimodular(
    map: &RationalMapData,
    opts: &EigenOptions,
    min_primes: usize,
    confirm: usize,
    max_primes: usize,
) -> Result<MultiModular, EigenError> {
    let pool = prime_pool();
    let max_primes = max_primes.min(pool.len());
    let run = |p: u64| -> Result<u64, EigenError> {
        let field = PrimeField::new(PrimeModulus::new(p).expect("pool primes are prime"));
        Ok(eigendisc(&field, map, opts)?.value)
    };
    let mut primes = Vec::new();
    let mut residues = Vec::new();
    let mut acc = CrtAccumulator::new();
    let mut previous: Option<BigInt> = None;
    let mut batch = min_primes.max(1);
    loop {
        let chunk: Vec<u64> = pool[primes.len()..(primes.len() + batch).min(max_primes)].to_vec();
        if chunk.is_empty() {
            let value = acc.symmetric();
            return Ok(MultiModular { primes, residues, value, stable: false });
        }
        let values: Vec<Result<u64, EigenError>> = chunk.par_iter().map(|&p| run(p)).collect();
        for (p, v) in chunk.into_iter().zip(values) {
            let v = v?;
            acc.push(v, p).expect("distinct primes");
            primes.push(p);
            residues.push(v);
        }
        let image = acc.symmetric();
        if previous.as_ref() == Some(&image) {
            return Ok(MultiModular { primes, residues, value: image, stable: true });
        }
        previous = Some(image);
        batch = confirm.max(1);
    }
}
