use std::fmt;

use super::primes::is_prime_u64;
use super::CoeffError;

const MODULUS_LIMIT: u64 = 1 << 62;

/// A validated odd prime below 2^62.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PrimeModulus(u64);

impl PrimeModulus {
    pub fn new(p: u64) -> Result<Self, CoeffError> {
        if !(3..MODULUS_LIMIT).contains(&p) || !is_prime_u64(p) {
            return Err(CoeffError::InvalidModulus(p));
        }
        Ok(PrimeModulus(p))
    }

    #[inline]
    pub fn get(self) -> u64 {
        self.0
    }

    #[inline]
    pub fn add(self, a: u64, b: u64) -> u64 {
        let s = a + b;
        if s >= self.0 {
            s - self.0
        } else {
            s
        }
    }

    #[inline]
    pub fn sub(self, a: u64, b: u64) -> u64 {
        if a >= b {
            a - b
        } else {
            a + self.0 - b
        }
    }

    #[inline]
    pub fn neg(self, a: u64) -> u64 {
        if a == 0 {
            0
        } else {
            self.0 - a
        }
    }

    #[inline]
    pub fn mul(self, a: u64, b: u64) -> u64 {
        ((a as u128 * b as u128) % self.0 as u128) as u64
    }

    pub fn pow(self, mut base: u64, mut exp: u64) -> u64 {
        let mut acc = 1u64;
        base %= self.0;
        while exp > 0 {
            if exp & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            exp >>= 1;
        }
        acc
    }

    /// Inverse by the extended Euclidean algorithm.
    pub fn inv(self, a: u64) -> Option<u64> {
        let a = a % self.0;
        if a == 0 {
            return None;
        }
        let (mut r0, mut r1) = (self.0 as i128, a as i128);
        let (mut t0, mut t1) = (0i128, 1i128);
        while r1 != 0 {
            let q = r0 / r1;
            (r0, r1) = (r1, r0 - q * r1);
            (t0, t1) = (t1, t0 - q * t1);
        }
        debug_assert_eq!(r0, 1);
        Some(t0.rem_euclid(self.0 as i128) as u64)
    }

    /// Reduces a signed machine integer.
    pub fn from_i64(self, v: i64) -> u64 {
        (v as i128).rem_euclid(self.0 as i128) as u64
    }

    /// Symmetric representative in `(-p/2, p/2]`.
    pub fn symmetric(self, a: u64) -> i128 {
        if a > self.0 / 2 {
            a as i128 - self.0 as i128
        } else {
            a as i128
        }
    }
}

impl fmt::Display for PrimeModulus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

/// An element of the prime field `Z/pZ`, carrying its modulus.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Fp {
    residue: u64,
    modulus: PrimeModulus,
}

impl Fp {
    pub fn new(value: u64, modulus: PrimeModulus) -> Self {
        Fp { residue: value % modulus.get(), modulus }
    }

    pub fn from_i64(value: i64, modulus: PrimeModulus) -> Self {
        Fp { residue: modulus.from_i64(value), modulus }
    }

    pub fn zero(modulus: PrimeModulus) -> Self {
        Fp { residue: 0, modulus }
    }

    pub fn one(modulus: PrimeModulus) -> Self {
        Fp { residue: 1, modulus }
    }

    #[inline]
    pub fn residue(self) -> u64 {
        self.residue
    }

    #[inline]
    pub fn modulus(self) -> PrimeModulus {
        self.modulus
    }

    pub fn is_zero(self) -> bool {
        self.residue == 0
    }

    fn check(self, other: Fp) {
        assert_eq!(self.modulus, other.modulus, "prime field modulus mismatch");
    }

    pub fn pow(self, exp: u64) -> Fp {
        Fp { residue: self.modulus.pow(self.residue, exp), ..self }
    }

    pub fn inverse(self) -> Result<Fp, CoeffError> {
        mod_inverse(self)
    }
}

impl std::ops::Add for Fp {
    type Output = Fp;
    fn add(self, other: Fp) -> Fp {
        self.check(other);
        Fp { residue: self.modulus.add(self.residue, other.residue), ..self }
    }
}

impl std::ops::Sub for Fp {
    type Output = Fp;
    fn sub(self, other: Fp) -> Fp {
        self.check(other);
        Fp { residue: self.modulus.sub(self.residue, other.residue), ..self }
    }
}

impl std::ops::Mul for Fp {
    type Output = Fp;
    fn mul(self, other: Fp) -> Fp {
        self.check(other);
        Fp { residue: self.modulus.mul(self.residue, other.residue), ..self }
    }
}

impl std::ops::Neg for Fp {
    type Output = Fp;
    fn neg(self) -> Fp {
        Fp { residue: self.modulus.neg(self.residue), ..self }
    }
}

impl fmt::Display for Fp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.residue)
    }
}

/// Multiplicative inverse in the prime field; zero is an error.
pub fn mod_inverse(a: Fp) -> Result<Fp, CoeffError> {
    let inv = a.modulus.inv(a.residue).ok_or(CoeffError::ZeroInverse)?;
    Ok(Fp { residue: inv, modulus: a.modulus })
}

/// Montgomery arithmetic for a fixed odd modulus below 2^62.
///
/// Values handled by `mul` are in Montgomery form `a * 2^64 mod p`; all
/// of them stay in `[0, p)`.
#[derive(Debug, Clone, Copy)]
pub struct Montgomery {
    p: u64,
    /// `-p^{-1} mod 2^64`
    p_neg_inv: u64,
    /// `2^128 mod p`
    r2: u64,
}

impl Montgomery {
    pub fn new(modulus: PrimeModulus) -> Self {
        let p = modulus.get();
        // Newton iteration for p^{-1} mod 2^64.
        let mut inv = 1u64;
        for _ in 0..6 {
            inv = inv.wrapping_mul(2u64.wrapping_sub(p.wrapping_mul(inv)));
        }
        let r = ((1u128 << 64) % p as u128) as u64;
        let r2 = ((r as u128 * r as u128) % p as u128) as u64;
        Montgomery { p, p_neg_inv: inv.wrapping_neg(), r2 }
    }

    #[inline]
    pub fn modulus(&self) -> u64 {
        self.p
    }

    #[inline]
    fn redc(&self, t: u128) -> u64 {
        let m = (t as u64).wrapping_mul(self.p_neg_inv);
        let u = ((t + m as u128 * self.p as u128) >> 64) as u64;
        if u >= self.p {
            u - self.p
        } else {
            u
        }
    }

    #[inline]
    pub fn mul(&self, a: u64, b: u64) -> u64 {
        self.redc(a as u128 * b as u128)
    }

    #[inline]
    pub fn to_mont(&self, a: u64) -> u64 {
        self.mul(a % self.p, self.r2)
    }

    #[inline]
    pub fn from_mont(&self, a: u64) -> u64 {
        self.redc(a as u128)
    }

    #[inline]
    pub fn add(&self, a: u64, b: u64) -> u64 {
        let s = a + b;
        if s >= self.p {
            s - self.p
        } else {
            s
        }
    }

    #[inline]
    pub fn sub(&self, a: u64, b: u64) -> u64 {
        if a >= b {
            a - b
        } else {
            a + self.p - b
        }
    }

    /// Inverse of a Montgomery-form value, returned in Montgomery form.
    pub fn inv(&self, a: u64) -> Option<u64> {
        let plain = self.from_mont(a);
        let m = PrimeModulus(self.p);
        m.inv(plain).map(|x| self.to_mont(x))
    }
}
