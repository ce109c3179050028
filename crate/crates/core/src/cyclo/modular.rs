//! The ring map `Z[zeta_N] -> F_q` sending `zeta_N` to a primitive `N`-th
//! root of unity `omega` mod a prime `q = 1 (mod N)`.
//!
//! A minor whose image is nonzero is nonzero, so a full rank computed in
//! `F_q` certifies full rank over `Q(zeta_N)`. The converse does not hold:
//! a rank drop mod `q` must be confirmed exactly.

use num_integer::Integer;
use num_traits::{Signed, ToPrimitive, Zero};

use super::CycNumber;

#[derive(Debug, Clone)]
pub struct PrimeImage {
    modulus: usize,
    prime: u64,
    omega_pows: Vec<u64>,
}

pub(crate) fn mul_mod(a: u64, b: u64, q: u64) -> u64 {
    ((a as u128 * b as u128) % q as u128) as u64
}

pub(crate) fn pow_mod(mut b: u64, mut e: u64, q: u64) -> u64 {
    let mut r = 1 % q;
    b %= q;
    while e > 0 {
        if e & 1 == 1 {
            r = mul_mod(r, b, q);
        }
        b = mul_mod(b, b, q);
        e >>= 1;
    }
    r
}

pub(crate) fn inv_mod(a: u64, q: u64) -> u64 {
    debug_assert!(a % q != 0);
    pow_mod(a, q - 2, q)
}

/// Deterministic Miller-Rabin for 64-bit inputs.
fn is_prime_u64(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    const BASES: [u64; 12] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37];
    for p in BASES {
        if n % p == 0 {
            return n == p;
        }
    }
    let mut d = n - 1;
    let mut s = 0;
    while d % 2 == 0 {
        d /= 2;
        s += 1;
    }
    'witness: for a in BASES {
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

fn prime_divisors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut p = 2;
    while p * p <= n {
        if n % p == 0 {
            out.push(p);
            while n % p == 0 {
                n /= p;
            }
        }
        p += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

impl PrimeImage {
    /// Picks the largest prime `q < 2^62` with `q = 1 (mod N)`.
    pub fn new(modulus: usize) -> Self {
        assert!(modulus >= 1);
        let n = modulus as u64;
        let top = (1u64 << 62) - 1;
        let mut q = (top - 1) / n * n + 1;
        while !is_prime_u64(q) {
            q -= n;
        }
        let cofactor = (q - 1) / n;
        let primes = prime_divisors(n);
        let omega = (2..)
            .map(|h| pow_mod(h, cofactor, q))
            .find(|&w| primes.iter().all(|&p| pow_mod(w, n / p, q) != 1))
            .expect("F_q^* is cyclic");
        let mut omega_pows = Vec::with_capacity(modulus);
        let mut cur = 1u64;
        for _ in 0..modulus {
            omega_pows.push(cur);
            cur = mul_mod(cur, omega, q);
        }
        PrimeImage {
            modulus,
            prime: q,
            omega_pows,
        }
    }

    pub fn prime(&self) -> u64 {
        self.prime
    }

    pub fn modulus(&self) -> usize {
        self.modulus
    }

    /// Image of `zeta_N^e`.
    pub fn zeta_pow(&self, e: i64) -> u64 {
        self.omega_pows[e.rem_euclid(self.modulus as i64) as usize]
    }

    /// Image of `x`, or `None` when a denominator vanishes mod `q`.
    pub fn image(&self, x: &CycNumber) -> Option<u64> {
        assert_eq!(x.modulus(), self.modulus);
        let q = self.prime;
        let qb = num_bigint::BigInt::from(q);
        let mut acc = 0u64;
        for (i, c) in x.coeffs().iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let num = c.numer().mod_floor(&qb).to_u64()?;
            let den = c.denom().abs().mod_floor(&qb).to_u64()?;
            if den == 0 {
                return None;
            }
            let term = mul_mod(num, inv_mod(den, q), q);
            acc = (acc + mul_mod(term, self.omega_pows[i], q)) % q;
        }
        Some(acc)
    }
}

/// Rank of a matrix over `F_q` by plain Gaussian elimination.
pub fn rank_mod(mut rows: Vec<Vec<u64>>, q: u64) -> usize {
    let cols = rows.first().map_or(0, Vec::len);
    let mut r = 0;
    for c in 0..cols {
        let Some(p) = (r..rows.len()).find(|&i| rows[i][c] != 0) else {
            continue;
        };
        rows.swap(r, p);
        let inv = inv_mod(rows[r][c], q);
        for j in c..cols {
            rows[r][j] = mul_mod(rows[r][j], inv, q);
        }
        for i in r + 1..rows.len() {
            let f = rows[i][c];
            if f != 0 {
                for j in c..cols {
                    let t = mul_mod(f, rows[r][j], q);
                    rows[i][j] = (rows[i][j] + q - t) % q;
                }
            }
        }
        r += 1;
    }
    r
}
