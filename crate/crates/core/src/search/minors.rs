use itertools::Itertools;

use super::{binomial, is_prime};
use crate::cyclo::{rank_mod, CycNumber, CyclotomicField, ExactMatrix, PrimeImage};
use crate::error::{Error, Result};

/// Outcome of scanning the square minors of the `n x n` DFT matrix of `Z_n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MinorCertificate {
    pub n: usize,
    /// `n` is composite, so singular minors are expected.
    pub diagnostic: bool,
    /// Largest minor size examined.
    pub max_size: usize,
    /// Square submatrices examined.
    pub checked: u128,
    /// Rows and columns of the first singular minor, if any.
    pub first_singular: Option<(Vec<usize>, Vec<usize>)>,
}

impl MinorCertificate {
    /// All minors examined are nonsingular.
    pub fn all_nonsingular(&self) -> bool {
        self.first_singular.is_none()
    }
}

/// Tests every square submatrix of `zeta_n^(-r c)` up to `max_size`, by size,
/// then rows, then columns, stopping at the first singular one.
pub fn chebotarev_check(n: usize, max_size: Option<usize>, max_tests: Option<u128>) -> Result<MinorCertificate> {
    if n < 2 {
        return Err(Error::Domain(format!("n = {n} must be at least 2")));
    }
    let max_size = max_size.unwrap_or(n).min(n);
    // the empty minor (determinant 1) is counted too, so the full scan of
    // Z_n is sum_j C(n, j)^2 = C(2n, n) tests
    let total: u128 = (0..=max_size).map(|j| binomial(n, j) * binomial(n, j)).sum();
    if let Some(limit) = max_tests {
        if total > limit {
            return Err(Error::Budget {
                what: "rank tests",
                required: total,
                limit,
            });
        }
    }
    let img = PrimeImage::new(n);
    let q = img.prime();
    let field = CyclotomicField::get(n);
    let exponent = |r: usize, c: usize| -(((r * c) % n) as i64);
    let mut checked = 0u128;
    for size in 0..=max_size {
        for rows in (0..n).combinations(size) {
            for cols in (0..n).combinations(size) {
                checked += 1;
                let image: Vec<Vec<u64>> = rows
                    .iter()
                    .map(|&r| cols.iter().map(|&c| img.zeta_pow(exponent(r, c))).collect())
                    .collect();
                if rank_mod(image, q) == size {
                    continue;
                }
                let m = ExactMatrix::from_fn(&field, size, size, |i, j| {
                    CycNumber::zeta_pow(&field, exponent(rows[i], cols[j]))
                })?;
                if m.rank() < size {
                    return Ok(MinorCertificate {
                        n,
                        diagnostic: !is_prime(n),
                        max_size,
                        checked,
                        first_singular: Some((rows, cols)),
                    });
                }
            }
        }
    }
    Ok(MinorCertificate {
        n,
        diagnostic: !is_prime(n),
        max_size,
        checked,
        first_singular: None,
    })
}
