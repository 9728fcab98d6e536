use std::collections::BTreeMap;

use num_bigint::BigInt;
use thiserror::Error;

use crate::mpoly::{MPoly, MapError, Monomial, RationalMapData};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TensorError {
    #[error("unsupported format n = {n}, d = {d}")]
    Format { n: usize, d: u32 },
    #[error("index tuple {0:?} has the wrong length or an out-of-range entry")]
    BadIndex(Vec<usize>),
    #[error("entry count {got} does not match n^d = {expected}")]
    EntryCount { expected: usize, got: usize },
    #[error("entries are not symmetric at {0:?}")]
    NotSymmetric(Vec<usize>),
    #[error("entry for {0:?} involves projective variables")]
    NonScalarEntry(Vec<usize>),
    #[error("polynomial is not homogeneous of positive degree")]
    NotHomogeneous,
    #[error(transparent)]
    Map(#[from] MapError),
}

/// A `d`-dimensional tensor of format `n x ... x n`.
///
/// Entries are integers or polynomials in the formal parameters. Missing
/// entries are zero.
#[derive(Debug, Clone, PartialEq)]
pub struct TensorData {
    n: usize,
    d: u32,
    entries: BTreeMap<Vec<usize>, MPoly<BigInt>>,
    symmetric: bool,
}

impl TensorData {
    /// Builds from `(index tuple, value)` pairs. With `symmetric` set, a
    /// pair may be given for any one ordering of its tuple and is copied to
    /// all orderings; conflicting orderings are rejected.
    pub fn from_pairs(
        n: usize,
        d: u32,
        pairs: Vec<(Vec<usize>, MPoly<BigInt>)>,
        symmetric: bool,
    ) -> Result<Self, TensorError> {
        if !(2..=4).contains(&n) || d < 2 {
            return Err(TensorError::Format { n, d });
        }
        let mut entries: BTreeMap<Vec<usize>, MPoly<BigInt>> = BTreeMap::new();
        for (idx, v) in pairs {
            if idx.len() != d as usize || idx.iter().any(|&i| i >= n) {
                return Err(TensorError::BadIndex(idx));
            }
            let v = v.with_arity(0).map_err(|_| TensorError::NonScalarEntry(idx.clone()))?;
            if v.is_zero() {
                continue;
            }
            if symmetric {
                let mut key = idx.clone();
                key.sort_unstable();
                for perm in permutations(&key) {
                    if let Some(old) = entries.get(&perm) {
                        if *old != v {
                            return Err(TensorError::NotSymmetric(perm));
                        }
                    }
                    entries.insert(perm, v.clone());
                }
            } else {
                entries.insert(idx, v);
            }
        }
        Ok(TensorData { n, d, entries, symmetric })
    }

    /// Builds from all `n^d` entries in row-major (lexicographic) order.
    pub fn from_dense(n: usize, d: u32, values: Vec<MPoly<BigInt>>, symmetric: bool) -> Result<Self, TensorError> {
        let expected = n.pow(d);
        if values.len() != expected {
            return Err(TensorError::EntryCount { expected, got: values.len() });
        }
        let pairs: Vec<(Vec<usize>, MPoly<BigInt>)> = values
            .into_iter()
            .enumerate()
            .map(|(flat, v)| (unflatten(flat, n, d), v))
            .collect();
        let t = TensorData::from_pairs(n, d, Vec::new(), false)?;
        let mut t = TensorData { symmetric, ..t };
        for (idx, v) in pairs {
            let v = v.with_arity(0).map_err(|_| TensorError::NonScalarEntry(idx.clone()))?;
            if !v.is_zero() {
                t.entries.insert(idx, v);
            }
        }
        if symmetric {
            t.check_symmetric()?;
        }
        Ok(t)
    }

    fn check_symmetric(&self) -> Result<(), TensorError> {
        for (idx, v) in &self.entries {
            for perm in permutations(idx) {
                if self.entries.get(&perm) != Some(v) {
                    return Err(TensorError::NotSymmetric(perm));
                }
            }
        }
        Ok(())
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn d(&self) -> u32 {
        self.d
    }

    pub fn is_symmetric(&self) -> bool {
        self.symmetric
    }

    pub fn entry(&self, idx: &[usize]) -> MPoly<BigInt> {
        self.entries.get(idx).cloned().unwrap_or_else(|| MPoly::zero(0))
    }

    /// The symmetric tensor of a form `phi` of degree `d`, scaled so that
    /// `phi = sum a_{i1..id} x_{i1} ... x_{id}`. Fails when a coefficient is
    /// not divisible by its multinomial count.
    pub fn symmetric_of_form(phi: &MPoly<BigInt>, n: usize) -> Result<Self, TensorError> {
        let vars: Vec<usize> = (0..n).collect();
        let d = phi.homogeneous_degree(&vars).filter(|&d| d >= 2).ok_or(TensorError::NotHomogeneous)?;
        let mut pairs = Vec::new();
        for (m, c) in phi.split_projective() {
            let mut idx = Vec::new();
            for i in 0..n {
                idx.extend(std::iter::repeat_n(i, m.exp(i) as usize));
            }
            let count = BigInt::from(permutations(&idx).len());
            let mut scaled = MPoly::zero(0);
            for (pm, pc) in c.terms() {
                let q = num_integer::Integer::div_rem(pc, &count);
                if q.1 != BigInt::from(0) {
                    return Err(TensorError::NonScalarEntry(idx.clone()));
                }
                scaled = &scaled + &MPoly::monomial(q.0, *pm, 0);
            }
            pairs.push((idx, scaled));
        }
        TensorData::from_pairs(n, d, pairs, true)
    }
}

fn unflatten(mut flat: usize, n: usize, d: u32) -> Vec<usize> {
    let mut idx = vec![0; d as usize];
    for slot in idx.iter_mut().rev() {
        *slot = flat % n;
        flat /= n;
    }
    idx
}

/// Distinct orderings of a tuple.
fn permutations(idx: &[usize]) -> Vec<Vec<usize>> {
    let mut sorted = idx.to_vec();
    sorted.sort_unstable();
    let mut out = vec![sorted.clone()];
    // next-permutation over the sorted multiset
    while let Some(k) = (0..sorted.len().saturating_sub(1)).rev().find(|&k| sorted[k] < sorted[k + 1]) {
        let l = (k + 1..sorted.len()).rev().find(|&l| sorted[k] < sorted[l]).expect("successor exists");
        sorted.swap(k, l);
        sorted[k + 1..].reverse();
        out.push(sorted.clone());
    }
    out
}

/// `psi_i = sum a_{i j2 .. jd} x_{j2} ... x_{jd}`.
pub fn tensor_to_map(a: &TensorData) -> Result<RationalMapData, TensorError> {
    let n = a.n;
    let mut forms = vec![MPoly::zero(n); n];
    for (idx, v) in &a.entries {
        let mut m = Monomial::ONE;
        for &j in &idx[1..] {
            m = m.mul(&Monomial::var(j));
        }
        let term = v.clone().with_arity(n).expect("scalar entry").mul_monomial(&m);
        forms[idx[0]] = &forms[idx[0]] + &term;
    }
    Ok(RationalMapData::new(n, a.d, forms)?)
}

/// The polar map `(d phi / d x_0, ..., d phi / d x_{n-1})`.
pub fn polar_map(phi: &MPoly<BigInt>, n: usize) -> Result<RationalMapData, TensorError> {
    let vars: Vec<usize> = (0..n).collect();
    let phi = phi.clone().with_arity(n).map_err(|_| TensorError::NotHomogeneous)?;
    let d = phi.homogeneous_degree(&vars).filter(|&d| d >= 2).ok_or(TensorError::NotHomogeneous)?;
    let forms = (0..n).map(|i| phi.partial_derivative(i)).collect();
    Ok(RationalMapData::new(n, d, forms)?)
}
