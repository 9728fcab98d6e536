use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use rayon::prelude::*;

use super::{ExactMatrix, LinalgError};
use crate::coeffring::{prime_pool, reduce_mod, CrtAccumulator, Montgomery, PrimeModulus};
use crate::exactla::ring::EvalRing;

/// Bareiss one-step fraction-free elimination over any exact domain.
///
/// Every intermediate division is exact; a failed division means the ring
/// is not an integral domain or the implementation is broken, and is
/// reported rather than rounded.
pub fn det_fraction_free<R: EvalRing>(ring: &R, m: &ExactMatrix<R::Elem>) -> Result<R::Elem, LinalgError> {
    if !m.is_square() {
        return Err(LinalgError::NotSquare(m.rows(), m.cols()));
    }
    let n = m.rows();
    if n == 0 {
        return Ok(ring.one());
    }
    let mut a = m.clone();
    let mut negate = false;
    let mut prev = ring.one();
    for k in 0..n - 1 {
        if ring.is_zero(a.get(k, k)) {
            match (k + 1..n).find(|&i| !ring.is_zero(a.get(i, k))) {
                Some(i) => {
                    a.swap_rows(i, k);
                    negate = !negate;
                }
                None => return Ok(ring.zero()),
            }
        }
        let pivot = a.get(k, k).clone();
        for i in k + 1..n {
            let aik = a.get(i, k).clone();
            for j in k + 1..n {
                let num = ring.sub(&ring.mul(a.get(i, j), &pivot), &ring.mul(&aik, a.get(k, j)));
                let q = ring.div_exact(&num, &prev).map_err(LinalgError::Ring)?;
                a.set(i, j, q);
            }
            a.set(i, k, ring.zero());
        }
        prev = pivot;
    }
    let d = a.get(n - 1, n - 1).clone();
    Ok(if negate { ring.neg(&d) } else { d })
}

/// Determinant modulo a word prime by Gaussian elimination with row
/// pivoting. `entries` are residues in `[0, p)`, row-major.
pub fn det_mod_prime(entries: &[u64], n: usize, p: PrimeModulus) -> u64 {
    assert_eq!(entries.len(), n * n);
    if n == 0 {
        return 1;
    }
    let mont = Montgomery::new(p);
    let mut a: Vec<u64> = entries.iter().map(|&x| mont.to_mont(x)).collect();
    let mut det = mont.to_mont(1);
    let mut negate = false;
    for k in 0..n {
        let Some(piv_row) = (k..n).find(|&i| a[i * n + k] != 0) else {
            return 0;
        };
        if piv_row != k {
            for c in k..n {
                a.swap(piv_row * n + c, k * n + c);
            }
            negate = !negate;
        }
        let pivot = a[k * n + k];
        det = mont.mul(det, pivot);
        let inv = mont.inv(pivot).expect("nonzero pivot is invertible");
        let (upper, lower) = a.split_at_mut((k + 1) * n);
        let pivot_row = &upper[k * n..(k + 1) * n];
        // Macaulay matrices are sparse; only touch the pivot row's support.
        let support: Vec<usize> = (k + 1..n).filter(|&c| pivot_row[c] != 0).collect();
        for row in lower.chunks_exact_mut(n) {
            let lead = row[k];
            if lead == 0 {
                continue;
            }
            let factor = mont.mul(lead, inv);
            for &c in &support {
                row[c] = mont.sub(row[c], mont.mul(factor, pivot_row[c]));
            }
            row[k] = 0;
        }
    }
    let det = mont.from_mont(det);
    if negate {
        p.neg(det)
    } else {
        det
    }
}

/// Upper bound, in bits, on `|det m|` (Hadamard, the tighter of the row
/// and column versions).
pub fn hadamard_bound_bits(m: &ExactMatrix<BigInt>) -> u64 {
    let norm_bits = |sq: BigInt| -> u64 {
        if sq.is_zero() {
            0
        } else {
            // log2 sqrt(S) <= ceil(bits(S) / 2)
            sq.bits().div_ceil(2)
        }
    };
    let rows: u64 = (0..m.rows())
        .map(|r| norm_bits(m.row(r).iter().map(|e| e * e).sum()))
        .sum();
    let cols: u64 = (0..m.cols())
        .map(|c| norm_bits((0..m.rows()).map(|r| m.get(r, c) * m.get(r, c)).sum()))
        .sum();
    rows.min(cols)
}

/// Integer determinant from determinants modulo pool primes.
///
/// Uses enough primes for the product to exceed twice the Hadamard bound
/// (or `2^(hint_bits + 1)` when a hint is given), plus one verification
/// prime whose residue must match the reconstructed value. A hint that
/// proves too small falls back to the Hadamard bound.
pub fn det_modular_crt(m: &ExactMatrix<BigInt>, hint_bits: Option<u64>) -> Result<BigInt, LinalgError> {
    if !m.is_square() {
        return Err(LinalgError::NotSquare(m.rows(), m.cols()));
    }
    if m.rows() == 0 {
        return Ok(BigInt::one());
    }
    let hadamard = hadamard_bound_bits(m);
    if let Some(hint) = hint_bits.filter(|&h| h < hadamard) {
        if let Ok(v) = crt_with_bound(m, hint) {
            return Ok(v);
        }
    }
    crt_with_bound(m, hadamard)
}

fn crt_with_bound(m: &ExactMatrix<BigInt>, bound_bits: u64) -> Result<BigInt, LinalgError> {
    let pool = prime_pool();
    let target = bound_bits + 2;
    let mut count = 0;
    let mut bits = 0u64;
    while bits < target {
        if count >= pool.len() {
            return Err(LinalgError::PrimePoolExhausted { needed_bits: target, pool: pool.len() });
        }
        bits += 61;
        count += 1;
    }
    if count + 1 > pool.len() {
        return Err(LinalgError::PrimePoolExhausted { needed_bits: target, pool: pool.len() });
    }
    let n = m.rows();
    let residues: Vec<u64> = pool[..=count]
        .par_iter()
        .map(|&p| {
            let modulus = PrimeModulus::new(p).expect("pool primes are prime");
            let reduced: Vec<u64> = m.entries().iter().map(|e| reduce_mod(e, p)).collect();
            det_mod_prime(&reduced, n, modulus)
        })
        .collect();
    let mut acc = CrtAccumulator::new();
    for (&r, &p) in residues[..count].iter().zip(pool) {
        acc.push(r, p).expect("pool primes are distinct");
    }
    let value = acc.symmetric();
    let check_p = pool[count];
    if reduce_mod(&value, check_p) != residues[count] {
        return Err(LinalgError::VerificationFailed);
    }
    Ok(value)
}

/// Determinant of a small integer matrix by cofactor expansion.
pub fn det_int_small(m: &[Vec<BigInt>]) -> BigInt {
    let n = m.len();
    match n {
        0 => BigInt::one(),
        1 => m[0][0].clone(),
        2 => &m[0][0] * &m[1][1] - &m[0][1] * &m[1][0],
        _ => {
            let mut acc = BigInt::zero();
            for c in 0..n {
                if m[0][c].is_zero() {
                    continue;
                }
                let minor: Vec<Vec<BigInt>> = m[1..]
                    .iter()
                    .map(|row| row.iter().enumerate().filter(|&(j, _)| j != c).map(|(_, v)| v.clone()).collect())
                    .collect();
                let term = &m[0][c] * det_int_small(&minor);
                if c % 2 == 0 {
                    acc += term;
                } else {
                    acc -= term;
                }
            }
            acc
        }
    }
}

/// Adjugate of a small integer matrix: `adj(m) * m = det(m) * I`.
pub fn adjugate_int(m: &[Vec<BigInt>]) -> Vec<Vec<BigInt>> {
    let n = m.len();
    if n == 1 {
        return vec![vec![BigInt::one()]];
    }
    let mut adj = vec![vec![BigInt::zero(); n]; n];
    for i in 0..n {
        for j in 0..n {
            let minor: Vec<Vec<BigInt>> = m
                .iter()
                .enumerate()
                .filter(|&(r, _)| r != i)
                .map(|(_, row)| row.iter().enumerate().filter(|&(c, _)| c != j).map(|(_, v)| v.clone()).collect())
                .collect();
            let cof = det_int_small(&minor);
            adj[j][i] = if (i + j) % 2 == 0 { cof } else { -cof };
        }
    }
    adj
}

/// `max |entry|` over a matrix, used by callers sizing hints.
pub fn max_abs_entry(m: &ExactMatrix<BigInt>) -> BigInt {
    m.entries().iter().map(|e| e.abs()).max().unwrap_or_else(BigInt::zero)
}
