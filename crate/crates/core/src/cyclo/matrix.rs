use std::sync::Arc;

use super::{CycNumber, CyclotomicField};
use crate::error::{Error, Result};

/// A dense row-major matrix over a single cyclotomic field.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExactMatrix {
    rows: usize,
    cols: usize,
    field: Arc<CyclotomicField>,
    entries: Vec<CycNumber>,
}

impl ExactMatrix {
    pub fn new(
        field: &Arc<CyclotomicField>,
        rows: usize,
        cols: usize,
        entries: Vec<CycNumber>,
    ) -> Result<Self> {
        if entries.len() != rows * cols {
            return Err(Error::Domain(format!(
                "{} entries for a {rows}x{cols} matrix",
                entries.len()
            )));
        }
        if let Some(bad) = entries.iter().find(|e| e.modulus() != field.modulus()) {
            return Err(Error::IncompatibleField {
                left: field.modulus(),
                right: bad.modulus(),
            });
        }
        Ok(ExactMatrix {
            rows,
            cols,
            field: field.clone(),
            entries,
        })
    }

    pub fn from_fn(
        field: &Arc<CyclotomicField>,
        rows: usize,
        cols: usize,
        mut f: impl FnMut(usize, usize) -> CycNumber,
    ) -> Result<Self> {
        let mut entries = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                entries.push(f(i, j));
            }
        }
        Self::new(field, rows, cols, entries)
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn field(&self) -> &Arc<CyclotomicField> {
        &self.field
    }

    pub fn get(&self, i: usize, j: usize) -> &CycNumber {
        &self.entries[i * self.cols + j]
    }

    pub fn mul_vec(&self, v: &[CycNumber]) -> Result<Vec<CycNumber>> {
        if v.len() != self.cols {
            return Err(Error::Domain(format!(
                "vector of length {} for {} columns",
                v.len(),
                self.cols
            )));
        }
        (0..self.rows)
            .map(|i| {
                let mut acc = CycNumber::zero(&self.field);
                for (j, x) in v.iter().enumerate() {
                    let a = self.get(i, j);
                    if !a.is_zero() && !x.is_zero() {
                        acc = acc.checked_add(&a.checked_mul(x)?)?;
                    }
                }
                Ok(acc)
            })
            .collect()
    }

    fn to_rows(&self) -> Vec<Vec<CycNumber>> {
        self.entries.chunks(self.cols.max(1)).map(|r| r.to_vec()).collect()
    }
}

/// Rank and a basis of the right null space.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct KernelResult {
    pub rank: usize,
    pub pivot_cols: Vec<usize>,
    pub basis: Vec<Vec<CycNumber>>,
}

/// Fraction-free (Bareiss) forward elimination: every update of the form
/// `(p * a_ij - a_ic * a_rj) / p_prev` keeps entries equal to minors of the
/// input. The pivot of each column is its first nonzero entry at or below the
/// current row.
fn bareiss_echelon(m: &ExactMatrix) -> (Vec<Vec<CycNumber>>, Vec<usize>) {
    let mut a = m.to_rows();
    let (rows, cols) = (m.rows, m.cols);
    let mut prev_inv: Option<CycNumber> = None;
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| !a[i][c].is_zero()) else {
            continue;
        };
        a.swap(r, p);
        let (top, rest) = a.split_at_mut(r + 1);
        let pivot_row = &top[r];
        for row in rest.iter_mut() {
            let lead = row[c].clone();
            for j in c + 1..cols {
                let mut v = &pivot_row[c] * &row[j];
                if !lead.is_zero() && !pivot_row[j].is_zero() {
                    v = v - &lead * &pivot_row[j];
                }
                if let Some(inv) = &prev_inv {
                    v = &v * inv;
                }
                row[j] = v;
            }
            row[c] = CycNumber::zero(&m.field);
        }
        prev_inv = Some(a[r][c].inverse().expect("pivot is nonzero"));
        pivots.push(c);
        r += 1;
    }
    (a, pivots)
}

pub fn rank(m: &ExactMatrix) -> usize {
    bareiss_echelon(m).1.len()
}

/// Exact rank and right kernel over `Q(zeta_N)`.
pub fn exact_kernel(m: &ExactMatrix) -> KernelResult {
    let (ech, pivots) = bareiss_echelon(m);
    let rank = pivots.len();
    let pivot_inv: Vec<CycNumber> = pivots
        .iter()
        .enumerate()
        .map(|(r, &c)| ech[r][c].inverse().expect("pivot is nonzero"))
        .collect();
    let free: Vec<usize> = (0..m.cols).filter(|c| !pivots.contains(c)).collect();
    let basis = free
        .iter()
        .map(|&fc| {
            let mut x = vec![CycNumber::zero(&m.field); m.cols];
            x[fc] = CycNumber::one(&m.field);
            for r in (0..rank).rev() {
                let pc = pivots[r];
                let mut acc = CycNumber::zero(&m.field);
                for j in pc + 1..m.cols {
                    if !ech[r][j].is_zero() && !x[j].is_zero() {
                        acc = acc + &ech[r][j] * &x[j];
                    }
                }
                x[pc] = -(&acc * &pivot_inv[r]);
            }
            x
        })
        .collect();
    KernelResult {
        rank,
        pivot_cols: pivots,
        basis,
    }
}

impl ExactMatrix {
    pub fn rank(&self) -> usize {
        rank(self)
    }
}
