use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::coeffring::Fp;

/// Exact coefficient ring usable inside [`super::MPoly`].
///
/// Elements are self-describing: a prime-field element carries its modulus,
/// so constants are produced relative to an existing element.
pub trait Coeff: Clone + PartialEq + fmt::Debug + fmt::Display + Send + Sync {
    fn is_zero(&self) -> bool;
    fn is_one(&self) -> bool;
    fn zero_like(&self) -> Self;
    fn one_like(&self) -> Self;
    fn add(&self, other: &Self) -> Self;
    fn sub(&self, other: &Self) -> Self;
    fn mul(&self, other: &Self) -> Self;
    fn neg(&self) -> Self;
    fn mul_u64(&self, k: u64) -> Self;
    /// `self / other` when the quotient exists in the ring.
    fn div_exact(&self, other: &Self) -> Option<Self>;
    /// Whether the two elements live in the same ring (same modulus).
    fn compatible(&self, _other: &Self) -> bool {
        true
    }
    /// Whether printing needs a leading minus sign.
    fn is_negative(&self) -> bool {
        false
    }
}

impl Coeff for BigInt {
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn is_one(&self) -> bool {
        One::is_one(self)
    }
    fn zero_like(&self) -> Self {
        BigInt::zero()
    }
    fn one_like(&self) -> Self {
        BigInt::one()
    }
    fn add(&self, other: &Self) -> Self {
        self + other
    }
    fn sub(&self, other: &Self) -> Self {
        self - other
    }
    fn mul(&self, other: &Self) -> Self {
        self * other
    }
    fn neg(&self) -> Self {
        -self
    }
    fn mul_u64(&self, k: u64) -> Self {
        self * k
    }
    fn div_exact(&self, other: &Self) -> Option<Self> {
        if Zero::is_zero(other) {
            return None;
        }
        let (q, r) = self.div_rem(other);
        Zero::is_zero(&r).then_some(q)
    }
    fn is_negative(&self) -> bool {
        self.sign() == num_bigint::Sign::Minus
    }
}

impl Coeff for BigRational {
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn is_one(&self) -> bool {
        One::is_one(self)
    }
    fn zero_like(&self) -> Self {
        BigRational::zero()
    }
    fn one_like(&self) -> Self {
        BigRational::one()
    }
    fn add(&self, other: &Self) -> Self {
        self + other
    }
    fn sub(&self, other: &Self) -> Self {
        self - other
    }
    fn mul(&self, other: &Self) -> Self {
        self * other
    }
    fn neg(&self) -> Self {
        -self
    }
    fn mul_u64(&self, k: u64) -> Self {
        self * BigRational::from_integer(BigInt::from(k))
    }
    fn div_exact(&self, other: &Self) -> Option<Self> {
        (!Zero::is_zero(other)).then(|| self / other)
    }
    fn is_negative(&self) -> bool {
        self.numer().sign() == num_bigint::Sign::Minus
    }
}

impl Coeff for Fp {
    fn is_zero(&self) -> bool {
        Fp::is_zero(*self)
    }
    fn is_one(&self) -> bool {
        self.residue() == 1
    }
    fn zero_like(&self) -> Self {
        Fp::zero(self.modulus())
    }
    fn one_like(&self) -> Self {
        Fp::one(self.modulus())
    }
    fn add(&self, other: &Self) -> Self {
        *self + *other
    }
    fn sub(&self, other: &Self) -> Self {
        *self - *other
    }
    fn mul(&self, other: &Self) -> Self {
        *self * *other
    }
    fn neg(&self) -> Self {
        -*self
    }
    fn mul_u64(&self, k: u64) -> Self {
        *self * Fp::new(k, self.modulus())
    }
    fn div_exact(&self, other: &Self) -> Option<Self> {
        other.inverse().ok().map(|inv| *self * inv)
    }
    fn compatible(&self, other: &Self) -> bool {
        self.modulus() == other.modulus()
    }
}
