//! Reference implementations used only by the integration tests. None of
//! them call into the cyclotomic arithmetic or the search code of the crate.
#![allow(dead_code)]

use std::collections::BTreeSet;

use itertools::Itertools;
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use uncertainty::groups::{GroupSpec, Subgroup};

/// Every multiset of factors `>= 2` with product `n`, sorted; `[1]` for `n = 1`.
pub fn factorisations(n: usize) -> Vec<Vec<usize>> {
    fn go(rest: usize, min: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if rest == 1 {
            out.push(cur.clone());
            return;
        }
        for f in min..=rest {
            if rest % f == 0 {
                cur.push(f);
                go(rest / f, f, cur, out);
                cur.pop();
            }
        }
    }
    if n == 1 {
        return vec![vec![1]];
    }
    let mut out = Vec::new();
    go(n, 2, &mut Vec::new(), &mut out);
    out
}

/// Invariant factor lists `d1 | d2 | ...` with product `n`: one per
/// isomorphism class.
pub fn invariant_forms(n: usize) -> Vec<Vec<usize>> {
    factorisations(n)
        .into_iter()
        .filter(|f| f.windows(2).all(|w| w[1] % w[0] == 0))
        .collect()
}

/// All subgroups, found by repeatedly adjoining one element.
pub fn all_subgroups(g: &GroupSpec) -> Vec<Subgroup> {
    let n = g.order();
    let closure = |seed: &BTreeSet<usize>| -> BTreeSet<usize> {
        let mut set = seed.clone();
        set.insert(0);
        loop {
            let items: Vec<usize> = set.iter().copied().collect();
            let mut grew = false;
            for &a in &items {
                for &b in &items {
                    if set.insert(g.add_index(a, b)) {
                        grew = true;
                    }
                }
            }
            if !grew {
                return set;
            }
        }
    };
    let mut seen: BTreeSet<Vec<usize>> = BTreeSet::new();
    let mut frontier = vec![closure(&BTreeSet::new())];
    seen.insert(frontier[0].iter().copied().collect());
    while let Some(h) = frontier.pop() {
        for x in 0..n {
            if h.contains(&x) {
                continue;
            }
            let mut seed = h.clone();
            seed.insert(x);
            let bigger = closure(&seed);
            if seen.insert(bigger.iter().copied().collect()) {
                frontier.push(bigger);
            }
        }
    }
    seen.into_iter()
        .map(|members| {
            let gens: Vec<_> = members.iter().map(|&i| g.element(i)).collect();
            Subgroup::generated_by(g, &gens).unwrap()
        })
        .collect()
}

fn poly_mul(a: &[i64], b: &[i64]) -> Vec<i64> {
    let mut out = vec![0; a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    out
}

/// Divides by `x^d - 1`, which must divide exactly.
fn div_xd_minus_one(p: &[i64], d: usize) -> Vec<i64> {
    let mut rem = p.to_vec();
    let deg = p.len() - 1;
    let mut q = vec![0; deg - d + 1];
    for i in (d..=deg).rev() {
        let c = rem[i];
        q[i - d] = c;
        rem[i] -= c;
        rem[i - d] += c;
    }
    assert!(rem.iter().all(|&c| c == 0), "inexact division");
    q
}

fn mobius(mut n: usize) -> i32 {
    let mut m = 1;
    let mut p = 2;
    while p * p <= n {
        if n % p == 0 {
            n /= p;
            if n % p == 0 {
                return 0;
            }
            m = -m;
        }
        p += 1;
    }
    if n > 1 {
        m = -m;
    }
    m
}

/// `Phi_N = prod_{d | N} (x^d - 1)^mu(N/d)`.
pub fn phi_poly(n: usize) -> Vec<i64> {
    let divs: Vec<usize> = (1..=n).filter(|d| n % d == 0).collect();
    let mut p = vec![1i64];
    for &d in &divs {
        if mobius(n / d) == 1 {
            let mut f = vec![0; d + 1];
            f[0] = -1;
            f[d] = 1;
            p = poly_mul(&p, &f);
        }
    }
    for &d in &divs {
        if mobius(n / d) == -1 {
            p = div_xd_minus_one(&p, d);
        }
    }
    p
}

/// Coordinates of `x^e mod Phi_N` in the power basis.
pub fn power_coords(n: usize, e: i64) -> Vec<i64> {
    let phi = phi_poly(n);
    let deg = phi.len() - 1;
    let e = e.rem_euclid(n as i64) as usize;
    let mut poly = vec![0i64; e + 1];
    poly[e] = 1;
    for i in (deg..poly.len()).rev() {
        let c = poly[i];
        if c != 0 {
            for (j, &pc) in phi.iter().enumerate() {
                poly[i - deg + j] -= c * pc;
            }
        }
    }
    poly.resize(deg, 0);
    poly
}

/// Rank over `Q` of an integer matrix by fraction-free elimination with
/// exact integer division.
pub fn integer_rank(mut a: Vec<Vec<BigInt>>) -> usize {
    let rows = a.len();
    let cols = a.first().map_or(0, Vec::len);
    let mut prev = BigInt::one();
    let mut r = 0;
    for c in 0..cols {
        let Some(p) = (r..rows).find(|&i| !a[i][c].is_zero()) else {
            continue;
        };
        a.swap(r, p);
        for i in r + 1..rows {
            for j in c + 1..cols {
                let v = &a[r][c] * &a[i][j] - &a[i][c] * &a[r][j];
                a[i][j] = v / &prev;
            }
            a[i][c] = BigInt::zero();
        }
        prev = a[r][c].clone();
        r += 1;
        if r == rows {
            break;
        }
    }
    r
}

/// Rank over `Q` of a rational matrix, via row scaling to integers.
pub fn rational_rank(a: &[Vec<BigRational>]) -> usize {
    let ints = a
        .iter()
        .map(|row| {
            let l = row.iter().fold(BigInt::one(), |acc, q| num_integer::lcm(acc, q.denom().clone()));
            row.iter().map(|q| (q * BigRational::from_integer(l.clone())).to_integer()).collect()
        })
        .collect();
    integer_rank(ints)
}

/// Rank over `Q(zeta_N)` of the matrix `zeta_N^(exps[i][j])`: the rational
/// rank of its `phi(N)`-fold regular representation divided by `phi(N)`.
pub fn root_matrix_rank(n: usize, exps: &[Vec<i64>]) -> usize {
    let deg = phi_poly(n).len() - 1;
    let table: Vec<Vec<i64>> = (0..n as i64).map(|e| power_coords(n, e)).collect();
    let rows = exps.len();
    let cols = exps.first().map_or(0, Vec::len);
    let mut big = vec![vec![BigInt::zero(); cols * deg]; rows * deg];
    for i in 0..rows {
        for j in 0..cols {
            // multiplication by zeta^e: column b holds zeta^(e + b)
            for b in 0..deg {
                let coords = &table[(exps[i][j] + b as i64).rem_euclid(n as i64) as usize];
                for a in 0..deg {
                    big[i * deg + a][j * deg + b] = BigInt::from(coords[a]);
                }
            }
        }
    }
    let r = integer_rank(big);
    assert_eq!(r % deg, 0, "regular representation rank is a multiple of phi(N)");
    r / deg
}

/// `-e(chi, x)` for the DFT matrix, from the pairing formula directly.
pub fn dft_exponent(g: &GroupSpec, chi: usize, x: usize) -> i64 {
    let (c, y) = (g.label(chi), g.element(x));
    let big_n = g.exponent();
    let e: usize = g
        .factors()
        .iter()
        .enumerate()
        .map(|(i, &m)| c.coords()[i] * y.coords()[i] * (big_n / m))
        .sum();
    -((e % big_n) as i64)
}

/// `theta(G, k)` by the literal definition: for each support `S` containing
/// the identity, the largest row set `T` with `rank M[T, S] < k`, scanning
/// `T` by decreasing size.
pub fn theta_literal(g: &GroupSpec, k: usize) -> usize {
    let n = g.order();
    let mut best = n;
    for rest in (1..n).combinations(k - 1) {
        let mut s = vec![0];
        s.extend(rest);
        'sizes: for size in (0..n).rev() {
            if n - size >= best {
                break;
            }
            for t in (0..n).combinations(size) {
                let exps: Vec<Vec<i64>> = t
                    .iter()
                    .map(|&chi| s.iter().map(|&x| dft_exponent(g, chi, x)).collect())
                    .collect();
                if size < k || root_matrix_rank(g.exponent(), &exps) < k {
                    best = best.min(n - size);
                    break 'sizes;
                }
            }
        }
    }
    best
}

pub fn q(n: i64, d: i64) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

pub fn is_nonneg(x: &BigRational) -> bool {
    !x.is_negative()
}
