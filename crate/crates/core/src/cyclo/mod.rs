//! Exact arithmetic in the cyclotomic field `Q(zeta_N) = Q[x] / Phi_N(x)`.
//!
//! Elements are stored by their rational coordinates in the power basis
//! `1, zeta, ..., zeta^(phi(N)-1)`, so equality and zero tests are plain
//! coordinate comparisons.

mod matrix;
mod modular;
mod number;
mod poly;

use std::collections::HashMap;
use std::sync::{Arc, Mutex, OnceLock};

use num_bigint::BigInt;
use num_rational::BigRational;

pub use matrix::{exact_kernel, ExactMatrix, KernelResult};
pub use modular::{rank_mod, PrimeImage};
pub(crate) use modular::{inv_mod, mul_mod};
pub use number::CycNumber;

/// Coefficient field of every signal value.
pub type RationalScalar = BigRational;

pub fn rational(num: i64, den: i64) -> RationalScalar {
    BigRational::new(BigInt::from(num), BigInt::from(den))
}

pub fn integer(v: i64) -> RationalScalar {
    BigRational::from_integer(BigInt::from(v))
}

pub fn euler_phi(mut n: usize) -> usize {
    let mut result = n;
    let mut p = 2;
    while p * p <= n {
        if n % p == 0 {
            while n % p == 0 {
                n /= p;
            }
            result -= result / p;
        }
        p += 1;
    }
    if n > 1 {
        result -= result / n;
    }
    result
}

/// Integer coefficients of `Phi_N`, lowest degree first.
///
/// Computed as `x^N - 1` divided exactly by `Phi_d` for every proper divisor
/// `d` of `N`.
pub fn cyclotomic_poly(n: usize) -> Vec<i64> {
    assert!(n >= 1, "cyclotomic polynomial needs N >= 1");
    let mut cache: HashMap<usize, Vec<i64>> = HashMap::new();
    cyclotomic_poly_cached(n, &mut cache)
}

fn cyclotomic_poly_cached(n: usize, cache: &mut HashMap<usize, Vec<i64>>) -> Vec<i64> {
    if let Some(p) = cache.get(&n) {
        return p.clone();
    }
    let mut num = vec![0i64; n + 1];
    num[0] = -1;
    num[n] = 1;
    for d in (1..n).filter(|d| n % d == 0) {
        let div = cyclotomic_poly_cached(d, cache);
        num = poly::div_exact_monic_i64(&num, &div);
    }
    cache.insert(n, num.clone());
    num
}

/// `Q(zeta_N)` together with the reduced powers of `zeta_N`.
#[derive(Debug)]
pub struct CyclotomicField {
    modulus: usize,
    phi_poly: Vec<i64>,
    zeta_table: Vec<Vec<i64>>,
}

impl PartialEq for CyclotomicField {
    fn eq(&self, other: &Self) -> bool {
        self.modulus == other.modulus
    }
}

impl Eq for CyclotomicField {}

impl CyclotomicField {
    fn build(modulus: usize) -> Self {
        let phi_poly = cyclotomic_poly(modulus);
        let deg = phi_poly.len() - 1;
        let mut zeta_table = Vec::with_capacity(modulus);
        let mut cur = vec![0i64; deg];
        cur[0] = 1;
        for _ in 0..modulus {
            zeta_table.push(cur.clone());
            // multiply by x, then fold the degree-`deg` term back in
            let top = cur[deg - 1];
            for i in (1..deg).rev() {
                cur[i] = cur[i - 1] - top * phi_poly[i];
            }
            cur[0] = -top * phi_poly[0];
        }
        debug_assert_eq!(cur[0], 1);
        CyclotomicField {
            modulus,
            phi_poly,
            zeta_table,
        }
    }

    /// Shared handle to `Q(zeta_N)`; fields are built once per process.
    pub fn get(modulus: usize) -> Arc<CyclotomicField> {
        assert!(modulus >= 1, "cyclotomic field needs N >= 1");
        static CACHE: OnceLock<Mutex<HashMap<usize, Arc<CyclotomicField>>>> = OnceLock::new();
        let cache = CACHE.get_or_init(|| Mutex::new(HashMap::new()));
        let mut map = cache.lock().unwrap_or_else(|e| e.into_inner());
        map.entry(modulus)
            .or_insert_with(|| Arc::new(CyclotomicField::build(modulus)))
            .clone()
    }

    pub fn modulus(&self) -> usize {
        self.modulus
    }

    /// `phi(N)`, the dimension over `Q`.
    pub fn degree(&self) -> usize {
        self.phi_poly.len() - 1
    }

    pub fn phi_poly(&self) -> &[i64] {
        &self.phi_poly
    }

    /// Integer power-basis coordinates of `zeta^e`.
    pub fn zeta_coords(&self, e: i64) -> &[i64] {
        &self.zeta_table[e.rem_euclid(self.modulus as i64) as usize]
    }
}

/// `zeta_N^(e mod N)`.
pub fn zeta_pow(n: usize, e: i64) -> CycNumber {
    CycNumber::zeta_pow(&CyclotomicField::get(n), e)
}
