use std::sync::OnceLock;

/// Environment variable overriding the size of the prime pool.
pub const PRIME_POOL_ENV: &str = "EIGENDISC_PRIME_POOL";

const DEFAULT_POOL_SIZE: usize = 256;
const POOL_CEILING: u64 = 1 << 62;

fn mul_mod(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

fn pow_mod(mut b: u64, mut e: u64, m: u64) -> u64 {
    let mut acc = 1u64 % m;
    b %= m;
    while e > 0 {
        if e & 1 == 1 {
            acc = mul_mod(acc, b, m);
        }
        b = mul_mod(b, b, m);
        e >>= 1;
    }
    acc
}

/// Deterministic Miller-Rabin for all 64-bit inputs.
pub fn is_prime_u64(n: u64) -> bool {
    const BASES: [u64; 12] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37];
    if n < 2 {
        return false;
    }
    for &b in &BASES {
        if n.is_multiple_of(b) {
            return n == b;
        }
    }
    let s = (n - 1).trailing_zeros();
    let d = (n - 1) >> s;
    'witness: for &a in &BASES {
        let mut x = pow_mod(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mul_mod(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

/// The fixed pool of primes used for modular computations: the largest
/// primes below 2^62, in decreasing order.
///
/// The size defaults to 256 and may be raised with `EIGENDISC_PRIME_POOL`.
pub fn prime_pool() -> &'static [u64] {
    static POOL: OnceLock<Vec<u64>> = OnceLock::new();
    POOL.get_or_init(|| {
        let size = std::env::var(PRIME_POOL_ENV)
            .ok()
            .and_then(|s| s.trim().parse::<usize>().ok())
            .filter(|&n| n > 0)
            .unwrap_or(DEFAULT_POOL_SIZE);
        let mut primes = Vec::with_capacity(size);
        let mut candidate = POOL_CEILING - 1;
        while primes.len() < size {
            if is_prime_u64(candidate) {
                primes.push(candidate);
            }
            candidate -= 2;
        }
        primes
    })
}
