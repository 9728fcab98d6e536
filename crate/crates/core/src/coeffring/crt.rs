use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::CoeffError;

/// Incremental Chinese remaindering over word-size moduli.
///
/// Holds `value` in `[0, modulus)`; [`CrtAccumulator::symmetric`] gives the
/// balanced representative.
#[derive(Debug, Clone)]
pub struct CrtAccumulator {
    value: BigInt,
    modulus: BigInt,
}

impl Default for CrtAccumulator {
    fn default() -> Self {
        Self::new()
    }
}

impl CrtAccumulator {
    pub fn new() -> Self {
        CrtAccumulator { value: BigInt::zero(), modulus: BigInt::one() }
    }

    pub fn modulus(&self) -> &BigInt {
        &self.modulus
    }

    /// Adds the congruence `x = residue (mod p)`.
    pub fn push(&mut self, residue: u64, p: u64) -> Result<(), CoeffError> {
        let pb = BigInt::from(p);
        let m_mod_p = self.modulus.mod_floor(&pb);
        let g = m_mod_p.gcd(&pb);
        if !g.is_one() {
            return Err(CoeffError::NotCoprime(
                u64::try_from(&g).unwrap_or(p),
                p,
            ));
        }
        let inv = mod_inverse_big(&m_mod_p, &pb);
        let current = self.value.mod_floor(&pb);
        let diff = (BigInt::from(residue) - current).mod_floor(&pb);
        let t = (diff * inv).mod_floor(&pb);
        self.value += &self.modulus * t;
        self.modulus *= pb;
        Ok(())
    }

    /// Representative in `(-M/2, M/2]`.
    pub fn symmetric(&self) -> BigInt {
        let half: BigInt = &self.modulus >> 1u32;
        if self.value > half {
            &self.value - &self.modulus
        } else {
            self.value.clone()
        }
    }
}

fn mod_inverse_big(a: &BigInt, m: &BigInt) -> BigInt {
    let e = a.extended_gcd(m);
    e.x.mod_floor(m)
}

/// Combines `x = residues[i] (mod moduli[i])` into the unique solution in
/// the symmetric range `|x| <= prod(moduli) / 2`.
pub fn crt_combine(residues: &[u64], moduli: &[u64]) -> Result<BigInt, CoeffError> {
    if residues.len() != moduli.len() {
        return Err(CoeffError::LengthMismatch(residues.len(), moduli.len()));
    }
    for (i, &a) in moduli.iter().enumerate() {
        for &b in &moduli[i + 1..] {
            if a.gcd(&b) != 1 {
                return Err(CoeffError::NotCoprime(a, b));
            }
        }
    }
    let mut acc = CrtAccumulator::new();
    for (&r, &p) in residues.iter().zip(moduli) {
        acc.push(r % p, p)?;
    }
    Ok(acc.symmetric())
}

/// Recovers `n/d` from `r mod m` with `|n|, d <= sqrt(m/2)`.
///
/// Returns `None` when no admissible fraction exists; the caller is
/// expected to enlarge the modulus and retry.
pub fn rational_reconstruct(r: &BigInt, m: &BigInt) -> Option<BigRational> {
    if m <= &BigInt::one() {
        return None;
    }
    let bound = (m >> 1u32).sqrt();
    let (mut r0, mut r1) = (m.clone(), r.mod_floor(m));
    let (mut t0, mut t1) = (BigInt::zero(), BigInt::one());
    while r1 > bound {
        let q = &r0 / &r1;
        let r2 = &r0 - &q * &r1;
        let t2 = &t0 - &q * &t1;
        r0 = std::mem::replace(&mut r1, r2);
        t0 = std::mem::replace(&mut t1, t2);
    }
    if t1.is_zero() || t1.abs() > bound || !t1.gcd(m).is_one() {
        return None;
    }
    Some(BigRational::new(r1, t1))
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn big(v: i64) -> BigInt {
        BigInt::from(v)
    }

    #[test]
    fn crt_examples() {
        assert_eq!(crt_combine(&[1, 1], &[3, 5]).unwrap(), big(1));
        // exhaustive search over the symmetric range of 15
        let brute: Vec<i64> = (-7..=7).filter(|x: &i64| x.rem_euclid(3) == 2 && x.rem_euclid(5) == 3).collect();
        assert_eq!(brute, vec![-7]);
        assert_eq!(crt_combine(&[2, 3], &[3, 5]).unwrap(), big(-7));
        let p = 1_000_003;
        assert_eq!(crt_combine(&[0], &[p]).unwrap(), big(0));
    }

    #[test]
    fn crt_rejects_shared_factor() {
        assert!(matches!(crt_combine(&[1, 2], &[6, 9]), Err(CoeffError::NotCoprime(6, 9))));
        assert!(crt_combine(&[1], &[3, 5]).is_err());
    }

    #[test]
    fn reconstruction_examples() {
        let m = big(101);
        // oracle: 2 * 51 = 102 = 1 mod 101
        assert_eq!((2 * 51) % 101, 1);
        assert_eq!(rational_reconstruct(&big(51), &m).unwrap(), BigRational::new(big(1), big(2)));
        assert_eq!(rational_reconstruct(&big(50), &m).unwrap(), BigRational::new(big(-1), big(2)));
        assert_eq!(rational_reconstruct(&big(1), &big(1_000_003)).unwrap(), BigRational::from_integer(big(1)));
        assert!(rational_reconstruct(&big(1), &big(1)).is_none());
    }

    #[test]
    fn reconstruction_can_fail() {
        // every fraction with |n|, d <= 2 mod 11 is one of a handful of residues
        let m = big(11);
        let admissible: Vec<i64> = [-2i64, -1, 0, 1, 2]
            .iter()
            .flat_map(|&n| [1i64, 2].into_iter().map(move |d| (n * if d == 2 { 6 } else { 1 }).rem_euclid(11)))
            .collect();
        let missing = (0..11).find(|r| !admissible.contains(r)).unwrap();
        assert!(rational_reconstruct(&big(missing), &m).is_none());
    }

    proptest! {
        #[test]
        fn crt_round_trip(x in -(1i128 << 100)..(1i128 << 100)) {
            let moduli = &super::super::prime_pool()[..3];
            let xb = BigInt::from(x);
            let residues: Vec<u64> = moduli.iter().map(|&p| super::super::reduce_mod(&xb, p)).collect();
            prop_assert_eq!(crt_combine(&residues, moduli).unwrap(), xb);
        }

        #[test]
        fn reconstruct_small_fractions(n in -1000i64..1000, d in 1i64..1000) {
            let m = BigInt::from(4611686018427387847u64);
            let db = BigInt::from(d);
            let dinv = mod_inverse_big(&db, &m);
            let r = (BigInt::from(n) * dinv).mod_floor(&m);
            prop_assert_eq!(rational_reconstruct(&r, &m).unwrap(), BigRational::new(BigInt::from(n), db));
        }
    }
}
