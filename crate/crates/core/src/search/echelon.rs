//! Reduced row echelon form over `F_q`, grown one row at a time.

use crate::cyclo::{inv_mod, mul_mod};

#[derive(Debug, Clone)]
pub(crate) struct ModEchelon {
    q: u64,
    cols: usize,
    rows: Vec<Vec<u64>>,
    pivots: Vec<usize>,
}

impl ModEchelon {
    pub(crate) fn new(cols: usize, q: u64) -> Self {
        ModEchelon {
            q,
            cols,
            rows: Vec::with_capacity(cols),
            pivots: Vec::with_capacity(cols),
        }
    }

    #[cfg(test)]
    pub(crate) fn rank(&self) -> usize {
        self.rows.len()
    }

    /// Adds `row` if it is independent of the rows so far; returns whether it
    /// was added.
    pub(crate) fn push(&mut self, row: &[u64]) -> bool {
        let q = self.q;
        let mut v = row.to_vec();
        for (r, &pc) in self.rows.iter().zip(&self.pivots) {
            let f = v[pc];
            if f != 0 {
                for j in 0..self.cols {
                    if r[j] != 0 {
                        v[j] = (v[j] + q - mul_mod(f, r[j], q)) % q;
                    }
                }
            }
        }
        let Some(pc) = v.iter().position(|&x| x != 0) else {
            return false;
        };
        let inv = inv_mod(v[pc], q);
        for x in v.iter_mut() {
            *x = mul_mod(*x, inv, q);
        }
        for r in self.rows.iter_mut() {
            let f = r[pc];
            if f != 0 {
                for j in 0..self.cols {
                    if v[j] != 0 {
                        r[j] = (r[j] + q - mul_mod(f, v[j], q)) % q;
                    }
                }
            }
        }
        self.rows.push(v);
        self.pivots.push(pc);
        true
    }

    /// Basis vector of the null space when it is one-dimensional.
    pub(crate) fn kernel_line(&self) -> Option<Vec<u64>> {
        if self.rows.len() + 1 != self.cols {
            return None;
        }
        let free = (0..self.cols).find(|c| !self.pivots.contains(c))?;
        let mut x = vec![0u64; self.cols];
        x[free] = 1;
        for (r, &pc) in self.rows.iter().zip(&self.pivots) {
            x[pc] = (self.q - r[free]) % self.q;
        }
        Some(x)
    }
}
