//! Diagonalization of integer relation matrices by unimodular row and
//! column operations. Only the column transform is tracked: for a relation
//! lattice `L` spanned by the rows of `a`, the returned `q` satisfies
//! `L * q = d_1 Z + ... + d_r Z`, so `y -> (y * q) mod d` realizes `Z^r / L`.

pub(crate) struct Diagonal {
    pub diag: Vec<i128>,
    pub transform: Vec<Vec<i128>>,
}

pub(crate) fn diagonalize(mut a: Vec<Vec<i128>>, cols: usize) -> Diagonal {
    let rows = a.len();
    let mut q: Vec<Vec<i128>> = (0..cols)
        .map(|i| (0..cols).map(|j| i128::from(i == j)).collect())
        .collect();
    let mut diag = vec![0i128; cols];

    for t in 0..cols {
        loop {
            let mut best: Option<(usize, usize)> = None;
            for i in t..rows {
                for j in t..cols {
                    if a[i][j] != 0
                        && best.map_or(true, |(bi, bj)| a[i][j].abs() < a[bi][bj].abs())
                    {
                        best = Some((i, j));
                    }
                }
            }
            let Some((pi, pj)) = best else { break };
            a.swap(t, pi);
            if pj != t {
                for row in a.iter_mut() {
                    row.swap(t, pj);
                }
                for row in q.iter_mut() {
                    row.swap(t, pj);
                }
            }
            let pivot = a[t][t];
            let mut clean = true;
            for i in t + 1..rows {
                let f = a[i][t] / pivot;
                if f != 0 {
                    for j in t..cols {
                        a[i][j] -= f * a[t][j];
                    }
                }
                clean &= a[i][t] == 0;
            }
            for j in t + 1..cols {
                let f = a[t][j] / pivot;
                if f != 0 {
                    for row in a.iter_mut() {
                        row[j] -= f * row[t];
                    }
                    for row in q.iter_mut() {
                        row[j] -= f * row[t];
                    }
                }
                clean &= a[t][j] == 0;
            }
            if clean {
                break;
            }
        }
        diag[t] = if t < rows { a[t][t].abs() } else { 0 };
    }
    Diagonal { diag, transform: q }
}
