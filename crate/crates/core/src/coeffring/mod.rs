//! Exact coefficient arithmetic: big integers, rationals, word-size prime
//! fields, and the residue-number plumbing (CRT, rational reconstruction)
//! that the modular determinant code is built on.
//!
//! Integers and rationals are `num-bigint` / `num-rational` values; the
//! prime field is implemented here because the determinant kernels need a
//! Montgomery representation tuned to moduli just below 2^62.

mod crt;
mod fp;
mod primes;

use num_bigint::BigInt;
use num_rational::BigRational;
use thiserror::Error;

pub use crt::{crt_combine, rational_reconstruct, CrtAccumulator};
pub use fp::{mod_inverse, Fp, Montgomery, PrimeModulus};
pub use primes::{is_prime_u64, prime_pool, PRIME_POOL_ENV};

/// Arbitrary-precision signed integer.
pub type BigIntValue = BigInt;
/// Reduced fraction with positive denominator.
pub type RationalValue = BigRational;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CoeffError {
    #[error("modulus {0} is not an odd prime below 2^62")]
    InvalidModulus(u64),
    #[error("moduli {0} and {1} are not coprime")]
    NotCoprime(u64, u64),
    #[error("zero has no multiplicative inverse")]
    ZeroInverse,
    #[error("residue and modulus lists differ in length ({0} vs {1})")]
    LengthMismatch(usize, usize),
    #[error("cannot parse {0:?} as an exact number")]
    Parse(String),
}

/// Parses a decimal integer such as `-123`.
pub fn parse_integer(s: &str) -> Result<BigIntValue, CoeffError> {
    s.trim().parse::<BigInt>().map_err(|_| CoeffError::Parse(s.to_string()))
}

/// Parses `22/7`, `-3` or `4/-6` into a reduced rational.
pub fn parse_rational(s: &str) -> Result<RationalValue, CoeffError> {
    let s = s.trim();
    match s.split_once('/') {
        None => Ok(BigRational::from_integer(parse_integer(s)?)),
        Some((n, d)) => {
            let n = parse_integer(n)?;
            let d = parse_integer(d)?;
            if d == BigInt::from(0) {
                return Err(CoeffError::Parse(s.to_string()));
            }
            Ok(BigRational::new(n, d))
        }
    }
}

/// Reduction of a big integer into `[0, p)`.
pub fn reduce_mod(x: &BigInt, p: u64) -> u64 {
    use num_integer::Integer;
    use num_traits::ToPrimitive;
    x.mod_floor(&BigInt::from(p)).to_u64().expect("residue fits in a word")
}
