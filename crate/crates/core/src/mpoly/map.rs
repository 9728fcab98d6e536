use num_bigint::BigInt;
use thiserror::Error;

use super::MPoly;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MapError {
    #[error("unsupported number of variables n = {0} (expected 2, 3 or 4)")]
    UnsupportedArity(usize),
    #[error("unsupported dimension d = {d} for n = {n}")]
    UnsupportedDegree { n: usize, d: u32 },
    #[error("expected {expected} forms, got {got}")]
    FormCount { expected: usize, got: usize },
    #[error("form {0} is not homogeneous of degree d - 1 in x0..x(n-1)")]
    NotHomogeneous(usize),
    #[error("all forms are zero")]
    ZeroMap,
}

/// A rational map `P^{n-1} --> P^{n-1}` given by `n` forms of degree
/// `d - 1` in `x0..x(n-1)`, possibly depending on formal parameters.
#[derive(Debug, Clone, PartialEq)]
pub struct RationalMapData {
    n: usize,
    d: u32,
    forms: Vec<MPoly<BigInt>>,
}

impl RationalMapData {
    pub fn new(n: usize, d: u32, forms: Vec<MPoly<BigInt>>) -> Result<Self, MapError> {
        if !(2..=4).contains(&n) {
            return Err(MapError::UnsupportedArity(n));
        }
        if d < 2 || (n > 2 && d < 3) {
            return Err(MapError::UnsupportedDegree { n, d });
        }
        if forms.len() != n {
            return Err(MapError::FormCount { expected: n, got: forms.len() });
        }
        let vars: Vec<usize> = (0..n).collect();
        let mut normalized = Vec::with_capacity(n);
        for (i, f) in forms.into_iter().enumerate() {
            let f = f.with_arity(n).map_err(|_| MapError::NotHomogeneous(i))?;
            if !f.is_zero() && f.homogeneous_degree(&vars) != Some(d - 1) {
                return Err(MapError::NotHomogeneous(i));
            }
            normalized.push(f);
        }
        if normalized.iter().all(|f| f.is_zero()) {
            return Err(MapError::ZeroMap);
        }
        Ok(RationalMapData { n, d, forms: normalized })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Tensor dimension; the forms have degree `d - 1`.
    pub fn d(&self) -> u32 {
        self.d
    }

    pub fn forms(&self) -> &[MPoly<BigInt>] {
        &self.forms
    }

    pub fn form(&self, i: usize) -> &MPoly<BigInt> {
        &self.forms[i]
    }

    pub fn parameters(&self) -> Vec<usize> {
        let mut ps: Vec<usize> = self.forms.iter().flat_map(|f| f.parameters()).collect();
        ps.sort_unstable();
        ps.dedup();
        ps
    }

    /// Every form multiplied by `lambda`.
    pub fn scaled(&self, lambda: &BigInt) -> Self {
        RationalMapData {
            forms: self.forms.iter().map(|f| f.scalar_mul(lambda)).collect(),
            ..self.clone()
        }
    }

    /// Conjugation by an integer matrix: `x -> adj(phi) * Psi(phi * x)`.
    ///
    /// This is the action under which the eigenscheme is carried to an
    /// isomorphic one; for `det(phi) = 1` it is `phi^{-1} Psi phi`.
    pub fn conjugate(&self, phi: &[Vec<BigInt>]) -> Self {
        let substituted: Vec<MPoly<BigInt>> = self.forms.iter().map(|f| f.linear_change(phi)).collect();
        let adj = crate::exactla::adjugate_int(phi);
        let forms = (0..self.n)
            .map(|i| {
                let mut acc = MPoly::zero(self.n);
                for (j, g) in substituted.iter().enumerate() {
                    acc = &acc + &g.scalar_mul(&adj[i][j]);
                }
                acc
            })
            .collect();
        RationalMapData { forms, ..self.clone() }
    }

    /// Substitutes integer values for parameters.
    pub fn eval_params(&self, values: &[(usize, BigInt)]) -> Self {
        RationalMapData {
            forms: self.forms.iter().map(|f| f.eval_params(values)).collect(),
            ..self.clone()
        }
    }

    /// Component-wise sum with another map of the same format.
    pub fn add(&self, other: &Self) -> Result<Self, MapError> {
        if other.n != self.n || other.d != self.d {
            return Err(MapError::FormCount { expected: self.n, got: other.n });
        }
        let forms = self.forms.iter().zip(&other.forms).map(|(a, b)| a + b).collect();
        RationalMapData::new(self.n, self.d, forms)
    }
}
