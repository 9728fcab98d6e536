//! Value rings for the resultant / discriminant pipeline.
//!
//! Forms are always integer polynomials, possibly with formal parameters.
//! A value ring decides what their coefficients become once they enter a
//! matrix: exact integers, residues modulo a prime, or parameter
//! polynomials. It also owns the determinant strategy for that ring.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};
use thiserror::Error;

use super::det::{det_fraction_free, det_mod_prime, det_modular_crt};
use super::{ExactMatrix, LinalgError};
use crate::coeffring::{reduce_mod, PrimeModulus};
use crate::mpoly::{MPoly, PolyError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RingError {
    #[error("division by zero")]
    DivisionByZero,
    #[error("exact division failed: divisor does not divide dividend")]
    NotDivisible,
    #[error("coefficient depends on parameters; this ring holds constants only")]
    NonConstant,
}

impl From<PolyError> for RingError {
    fn from(e: PolyError) -> Self {
        match e {
            PolyError::DivisionByZero => RingError::DivisionByZero,
            _ => RingError::NotDivisible,
        }
    }
}

/// An exact commutative ring in which pipeline values are computed.
pub trait EvalRing: Sync + Send {
    type Elem: Clone + PartialEq + fmt::Debug + fmt::Display + Send + Sync;

    fn zero(&self) -> Self::Elem;
    fn one(&self) -> Self::Elem;
    fn from_int(&self, v: &BigInt) -> Self::Elem;
    /// Image of a coefficient, which is a polynomial in the parameters.
    fn lift(&self, c: &MPoly<BigInt>) -> Result<Self::Elem, RingError>;
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn neg(&self, a: &Self::Elem) -> Self::Elem;
    fn is_zero(&self, a: &Self::Elem) -> bool;
    /// Exact quotient; never rounds.
    fn div_exact(&self, a: &Self::Elem, b: &Self::Elem) -> Result<Self::Elem, RingError>;
    fn det(&self, m: &ExactMatrix<Self::Elem>) -> Result<Self::Elem, LinalgError>;
    /// Short human-readable name (`ZZ`, `GF(p)`, `ZZ[params]`).
    fn name(&self) -> String;

    fn pow(&self, a: &Self::Elem, mut e: u64) -> Self::Elem {
        let mut acc = self.one();
        let mut base = a.clone();
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(&acc, &base);
            }
            e >>= 1;
            if e > 0 {
                base = self.mul(&base, &base);
            }
        }
        acc
    }

    fn from_i64(&self, v: i64) -> Self::Elem {
        self.from_int(&BigInt::from(v))
    }

    /// `det^exp` for a signed integer determinant.
    fn signed_pow(&self, base: &BigInt, exp: u64) -> Self::Elem {
        self.pow(&self.from_int(base), exp)
    }
}

/// Which integer determinant algorithm [`IntegerRing`] uses.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum IntDetStrategy {
    #[default]
    ModularCrt,
    FractionFree,
}

/// The integers, with determinants by multi-prime CRT by default.
#[derive(Debug, Clone, Copy, Default)]
pub struct IntegerRing {
    pub strategy: IntDetStrategy,
}

impl IntegerRing {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn fraction_free() -> Self {
        IntegerRing { strategy: IntDetStrategy::FractionFree }
    }
}

impl EvalRing for IntegerRing {
    type Elem = BigInt;

    fn zero(&self) -> BigInt {
        BigInt::zero()
    }
    fn one(&self) -> BigInt {
        BigInt::one()
    }
    fn from_int(&self, v: &BigInt) -> BigInt {
        v.clone()
    }
    fn lift(&self, c: &MPoly<BigInt>) -> Result<BigInt, RingError> {
        c.constant_value().ok_or(RingError::NonConstant)
    }
    fn add(&self, a: &BigInt, b: &BigInt) -> BigInt {
        a + b
    }
    fn sub(&self, a: &BigInt, b: &BigInt) -> BigInt {
        a - b
    }
    fn mul(&self, a: &BigInt, b: &BigInt) -> BigInt {
        a * b
    }
    fn neg(&self, a: &BigInt) -> BigInt {
        -a
    }
    fn is_zero(&self, a: &BigInt) -> bool {
        a.is_zero()
    }
    fn div_exact(&self, a: &BigInt, b: &BigInt) -> Result<BigInt, RingError> {
        if b.is_zero() {
            return Err(RingError::DivisionByZero);
        }
        let (q, r) = a.div_rem(b);
        if r.is_zero() {
            Ok(q)
        } else {
            Err(RingError::NotDivisible)
        }
    }
    fn det(&self, m: &ExactMatrix<BigInt>) -> Result<BigInt, LinalgError> {
        match self.strategy {
            IntDetStrategy::ModularCrt => det_modular_crt(m, None),
            IntDetStrategy::FractionFree => det_fraction_free(self, m),
        }
    }
    fn name(&self) -> String {
        "ZZ".to_string()
    }
}

/// A prime field `GF(p)`; elements are residues in `[0, p)`.
#[derive(Debug, Clone, Copy)]
pub struct PrimeField {
    modulus: PrimeModulus,
}

impl PrimeField {
    pub fn new(modulus: PrimeModulus) -> Self {
        PrimeField { modulus }
    }

    pub fn modulus(&self) -> PrimeModulus {
        self.modulus
    }
}

impl EvalRing for PrimeField {
    type Elem = u64;

    fn zero(&self) -> u64 {
        0
    }
    fn one(&self) -> u64 {
        1
    }
    fn from_int(&self, v: &BigInt) -> u64 {
        reduce_mod(v, self.modulus.get())
    }
    fn lift(&self, c: &MPoly<BigInt>) -> Result<u64, RingError> {
        c.constant_value().map(|v| self.from_int(&v)).ok_or(RingError::NonConstant)
    }
    fn add(&self, a: &u64, b: &u64) -> u64 {
        self.modulus.add(*a, *b)
    }
    fn sub(&self, a: &u64, b: &u64) -> u64 {
        self.modulus.sub(*a, *b)
    }
    fn mul(&self, a: &u64, b: &u64) -> u64 {
        self.modulus.mul(*a, *b)
    }
    fn neg(&self, a: &u64) -> u64 {
        self.modulus.neg(*a)
    }
    fn is_zero(&self, a: &u64) -> bool {
        *a == 0
    }
    fn div_exact(&self, a: &u64, b: &u64) -> Result<u64, RingError> {
        let inv = self.modulus.inv(*b).ok_or(RingError::DivisionByZero)?;
        Ok(self.modulus.mul(*a, inv))
    }
    fn det(&self, m: &ExactMatrix<u64>) -> Result<u64, LinalgError> {
        if !m.is_square() {
            return Err(LinalgError::NotSquare(m.rows(), m.cols()));
        }
        Ok(det_mod_prime(m.entries(), m.rows(), self.modulus))
    }
    fn name(&self) -> String {
        format!("GF({})", self.modulus)
    }
}

/// Polynomials over the integers in the formal parameters; determinants
/// by fraction-free elimination. Meant for small symbolic matrices.
#[derive(Debug, Clone, Copy, Default)]
pub struct PolyRing;

impl EvalRing for PolyRing {
    type Elem = MPoly<BigInt>;

    fn zero(&self) -> MPoly<BigInt> {
        MPoly::zero(0)
    }
    fn one(&self) -> MPoly<BigInt> {
        MPoly::one(0)
    }
    fn from_int(&self, v: &BigInt) -> MPoly<BigInt> {
        MPoly::constant(v.clone(), 0)
    }
    fn lift(&self, c: &MPoly<BigInt>) -> Result<MPoly<BigInt>, RingError> {
        c.clone().with_arity(0).map_err(|_| RingError::NonConstant)
    }
    fn add(&self, a: &MPoly<BigInt>, b: &MPoly<BigInt>) -> MPoly<BigInt> {
        a + b
    }
    fn sub(&self, a: &MPoly<BigInt>, b: &MPoly<BigInt>) -> MPoly<BigInt> {
        a - b
    }
    fn mul(&self, a: &MPoly<BigInt>, b: &MPoly<BigInt>) -> MPoly<BigInt> {
        a * b
    }
    fn neg(&self, a: &MPoly<BigInt>) -> MPoly<BigInt> {
        -a
    }
    fn is_zero(&self, a: &MPoly<BigInt>) -> bool {
        a.is_zero()
    }
    fn div_exact(&self, a: &MPoly<BigInt>, b: &MPoly<BigInt>) -> Result<MPoly<BigInt>, RingError> {
        Ok(a.exact_divide(b)?)
    }
    fn det(&self, m: &ExactMatrix<MPoly<BigInt>>) -> Result<MPoly<BigInt>, LinalgError> {
        det_fraction_free(self, m)
    }
    fn name(&self) -> String {
        "ZZ[params]".to_string()
    }
}
