//! Eigendiscriminants of rational maps `P^{n-1} --> P^{n-1}` for
//! `n = 2, 3, 4`.
//!
//! For `n = 2` the eigendiscriminant is the discriminant of the single
//! minor `x0 psi1 - x1 psi0`. For `n = 3, 4` it is the discriminant of a
//! complete intersection of minors divided by explicit cofactors that
//! account for the extraneous components; every value comes with a
//! certificate `value * prod cofactor^power = Disc(minors)` that is
//! re-checked before it is returned.

mod compute;
mod minors;
mod parametric;
mod tensor;

use std::fmt;

use num_bigint::BigInt;
use thiserror::Error;

use crate::discriminant::DiscError;
use crate::exactla::EvalRing;
use crate::mpoly::{MapError, PolyError};
use crate::resultant::ResultantError;

pub use compute::{default_index, eigendisc, eigendisc_at_index, eigendisc_multimodular, index_choices, MultiModular};
pub use minors::EigenMinors;
pub use parametric::{default_bounds, eigendisc_parametric, eigendisc_perturbed, random_direction};
pub use tensor::{polar_map, tensor_to_map, TensorData, TensorError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EigenError {
    #[error(transparent)]
    Map(#[from] MapError),
    #[error(transparent)]
    Tensor(#[from] TensorError),
    #[error("invalid index tuple {0:?}")]
    InvalidIndex(Vec<usize>),
    #[error("cofactors vanish for index tuple {0:?}")]
    VanishingCofactors(Vec<usize>),
    #[error("cofactors vanish for every index tuple and {0} coordinate changes")]
    PersistentDegeneracy(usize),
    #[error("exact division failed in the eigendiscriminant quotient (internal tripwire)")]
    NotDivisible,
    #[error("certificate does not verify (internal tripwire)")]
    CertificateMismatch,
    #[error("map depends on parameters; use the parametric mode")]
    Parametric,
    #[error("interpolation failed: {0}")]
    Interpolation(String),
    #[error(transparent)]
    Disc(DiscError),
    #[error(transparent)]
    Resultant(ResultantError),
    #[error(transparent)]
    Poly(#[from] PolyError),
}

impl From<DiscError> for EigenError {
    fn from(e: DiscError) -> Self {
        match e {
            DiscError::NotDivisible => EigenError::NotDivisible,
            other => EigenError::Disc(other),
        }
    }
}

impl From<ResultantError> for EigenError {
    fn from(e: ResultantError) -> Self {
        match e {
            ResultantError::NotDivisible => EigenError::NotDivisible,
            other => EigenError::Resultant(other),
        }
    }
}

impl EigenError {
    /// True for failures caused by the input being too special, as opposed
    /// to malformed input or internal invariants.
    pub fn is_degenerate(&self) -> bool {
        matches!(
            self,
            EigenError::VanishingCofactors(_)
                | EigenError::PersistentDegeneracy(_)
                | EigenError::Disc(DiscError::PersistentDegeneracy(_))
                | EigenError::Resultant(ResultantError::PersistentDegeneracy(_))
        )
    }

    /// True when an exactness check failed; this indicates a bug.
    pub fn is_tripwire(&self) -> bool {
        matches!(self, EigenError::NotDivisible | EigenError::CertificateMismatch)
    }
}

/// Knobs for the eigendiscriminant pipeline.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EigenOptions {
    /// Index tuple tried first: `(i, j, k)` for `n = 3`, `(k, i, j, l)` for
    /// `n = 4`. Ignored for `n = 2`.
    pub index: Option<Vec<usize>>,
    /// Try the remaining index tuples when cofactors vanish.
    pub fallback: bool,
    /// Conjugate by random unimodular matrices when every tuple fails.
    pub robust: bool,
    pub seed: u64,
}

impl Default for EigenOptions {
    fn default() -> Self {
        EigenOptions { index: None, fallback: true, robust: true, seed: 0 }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct Cofactor<E> {
    pub name: String,
    pub value: E,
    pub power: u32,
}

/// A coordinate change `Psi -> adj(phi) Psi(phi x)` applied before the
/// decomposition. Only determinant one is used, so the value is unchanged.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CoordinateChange {
    pub phi: Vec<Vec<BigInt>>,
    pub det: BigInt,
}

/// An eigendiscriminant value with the data that certifies it.
#[derive(Debug, Clone, PartialEq)]
pub struct EigendiscResult<E> {
    pub n: usize,
    pub d: u32,
    pub ring: String,
    pub value: E,
    pub index: Vec<usize>,
    /// The discriminant of the minors that the cofactors divide.
    pub disc_of_minors: E,
    pub cofactors: Vec<Cofactor<E>>,
    pub change: Option<CoordinateChange>,
}

impl<E: Clone + PartialEq> EigendiscResult<E> {
    /// Recomputes `value * prod cofactor^power` and compares.
    pub fn verify<R: EvalRing<Elem = E>>(&self, ring: &R) -> bool {
        let mut acc = self.value.clone();
        for c in &self.cofactors {
            acc = ring.mul(&acc, &ring.pow(&c.value, c.power as u64));
        }
        acc == self.disc_of_minors
    }
}

impl<E: fmt::Display> fmt::Display for EigendiscResult<E> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "n={} d={} ring={} index={:?}", self.n, self.d, self.ring, self.index)?;
        writeln!(f, "disc_of_minors={}", self.disc_of_minors)?;
        for c in &self.cofactors {
            writeln!(f, "cofactor {}^{}={}", c.name, c.power, c.value)?;
        }
        if let Some(ch) = &self.change {
            writeln!(f, "coordinate_change={:?} det={}", ch.phi, ch.det)?;
        }
        write!(f, "value={}", self.value)
    }
}

/// Expected degrees in the coefficients of the map.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DegreeTable {
    pub eigendisc: u64,
    pub disc_of_minors: u64,
    /// `(name, degree, power)` for each cofactor.
    pub cofactors: Vec<(String, u64, u32)>,
}

impl DegreeTable {
    /// `eigendisc + sum power * degree == disc_of_minors`.
    pub fn balanced(&self) -> bool {
        self.eigendisc + self.cofactors.iter().map(|(_, deg, p)| deg * *p as u64).sum::<u64>() == self.disc_of_minors
    }
}

/// Degree of the eigendiscriminant in the coefficients of the map.
pub fn eigendisc_degree(n: usize, d: u32) -> u64 {
    let e = d as u64 - 1;
    match n {
        2 => 2 * e,
        3 => 6 * e * e,
        4 => 12 * e * e * e,
        _ => panic!("unsupported n = {n}"),
    }
}

/// Exponent `e` in `Delta(adj(phi) Psi(phi x)) = det(phi)^e Delta(Psi)`.
///
/// The scaling `Psi -> lambda Psi` contributes `n(n-1)(d-1)^(n-1)` and the
/// conjugation `phi^-1 Psi phi` the remaining `(n-1)(d-1)^(n-1)(d-2)`.
pub fn conjugation_exponent(n: usize, d: u32) -> u64 {
    let (n, e) = (n as u64, d as u64 - 1);
    (n - 1) * e.pow(n as u32 - 1) * (n + d as u64 - 2)
}

pub fn degree_table(n: usize, d: u32) -> DegreeTable {
    let d64 = d as u64;
    let cof = |name: &str, deg: u64, p: u32| (name.to_string(), deg, p);
    match n {
        2 => DegreeTable { eigendisc: eigendisc_degree(2, d), disc_of_minors: 2 * (d64 - 1), cofactors: vec![] },
        3 => DegreeTable {
            eigendisc: eigendisc_degree(3, d),
            disc_of_minors: 6 * d64 * (d64 - 1),
            cofactors: vec![cof("Disc(psi_k)", 2 * (d64 - 2), 1), cof("Res(delta_k,psi_k)", 2 * d64 - 1, 2)],
        },
        4 => {
            let c = 6 * d64 * d64 - 12 * d64 + 4;
            let r = 3 * d64 * d64 - 4 * d64 + 2;
            DegreeTable {
                eigendisc: eigendisc_degree(4, d),
                disc_of_minors: 12 * (d64 - 1) * d64 * d64,
                cofactors: vec![
                    cof("Disc(psi_i,delta_jl)", c, 1),
                    cof("Disc(psi_j,delta_ki)", c, 1),
                    cof("Res(psi_i,psi_j)", 2 * (d64 - 1), 2),
                    cof("R_i", r, 2),
                    cof("R_j", r, 2),
                ],
            }
        }
        _ => panic!("unsupported n = {n}"),
    }
}

#[cfg(test)]
mod tests;
