//! Divisor-interpolated lower bounds on spectral support.
//!
//! For `1 <= k <= n` let `d1 <= k <= d2` be the divisors of `n` closest to
//! `k`. The bound is `u(n, k) = n (d1 + d2 - k) / (d1 d2)`, the value at `k`
//! of the chord joining `(d1, n/d1)` and `(d2, n/d2)`.

use std::cmp::Ordering;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive};

use crate::error::{Error, Result};

fn big(v: usize) -> BigRational {
    BigRational::from_integer(BigInt::from(v))
}

/// Divisors of `n` in increasing order.
pub fn divisors(n: usize) -> Vec<usize> {
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut d = 1;
    while d * d <= n {
        if n % d == 0 {
            small.push(d);
            if d * d != n {
                large.push(n / d);
            }
        }
        d += 1;
    }
    small.extend(large.into_iter().rev());
    small
}

/// The divisors of `n` on either side of `k`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DivisorPair {
    pub n: usize,
    pub k: BigRational,
    pub d1: usize,
    pub d2: usize,
}

fn check_range(n: usize, k: &BigRational) -> Result<()> {
    if n == 0 || *k < BigRational::one() || *k > big(n) {
        return Err(Error::Domain(format!("k = {k} outside [1, {n}]")));
    }
    Ok(())
}

pub fn nearest_divisors(n: usize, k: &BigRational) -> Result<DivisorPair> {
    check_range(n, k)?;
    let divs = divisors(n);
    let d1 = *divs.iter().rev().find(|&&d| big(d) <= *k).expect("1 <= k");
    let d2 = *divs.iter().find(|&&d| big(d) >= *k).expect("k <= n");
    Ok(DivisorPair {
        n,
        k: k.clone(),
        d1,
        d2,
    })
}

/// `u(n, k)` exactly, with the integer bound it implies on a support size.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BoundValue {
    pub pair: DivisorPair,
    pub value: BigRational,
    pub ceiling: usize,
}

impl BoundValue {
    pub fn n(&self) -> usize {
        self.pair.n
    }

    pub fn k(&self) -> &BigRational {
        &self.pair.k
    }
}

pub fn u_bound(n: usize, k: &BigRational) -> Result<BoundValue> {
    let pair = nearest_divisors(n, k)?;
    let (d1, d2) = (big(pair.d1), big(pair.d2));
    let value = big(n) * (&d1 + &d2 - k) / (d1 * d2);
    let ceiling = value.ceil().to_integer().to_usize().expect("u <= n");
    Ok(BoundValue {
        pair,
        value,
        ceiling,
    })
}

/// `u(n, k)` for an integer `k`.
pub fn u_bound_int(n: usize, k: usize) -> Result<BoundValue> {
    u_bound(n, &big(k))
}

/// `ceil(u(n, k))`: no nonzero function on a group of order `n` supported on
/// `k` points has fewer nonzero Fourier coefficients.
pub fn theta_lower(n: usize, k: usize) -> Result<usize> {
    Ok(u_bound_int(n, k)?.ceiling)
}

/// The lower convex polyline through `(d, n/d)` over the divisors of `n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HullDiagram {
    pub n: usize,
    pub vertices: Vec<(usize, usize)>,
}

pub fn hull_points(n: usize) -> Result<HullDiagram> {
    if n == 0 {
        return Err(Error::Domain("n must be at least 1".into()));
    }
    Ok(HullDiagram {
        n,
        vertices: divisors(n).into_iter().map(|d| (d, n / d)).collect(),
    })
}

impl HullDiagram {
    /// Consecutive vertex pairs.
    pub fn segments(&self) -> impl Iterator<Item = ((usize, usize), (usize, usize))> + '_ {
        self.vertices.windows(2).map(|w| (w[0], w[1]))
    }

    /// Slope of each segment, in order.
    pub fn slopes(&self) -> Vec<BigRational> {
        self.segments()
            .map(|((x1, y1), (x2, y2))| (big(y2) - big(y1)) / (big(x2) - big(x1)))
            .collect()
    }

    /// Piecewise-linear interpolation at `k`.
    pub fn evaluate(&self, k: &BigRational) -> Result<BigRational> {
        check_range(self.n, k)?;
        if let Some(&(_, y)) = self.vertices.iter().find(|(x, _)| big(*x) == *k) {
            return Ok(big(y));
        }
        let ((x1, y1), (x2, y2)) = self
            .segments()
            .find(|((x1, _), (x2, _))| big(*x1) < *k && *k < big(*x2))
            .expect("k lies inside some segment");
        let (x1, y1, x2, y2) = (big(x1), big(y1), big(x2), big(y2));
        Ok(&y1 + (&y2 - &y1) * (k - &x1) / (x2 - x1))
    }
}

/// Which of the three ranges `k = st` falls in, after the relabelling that
/// makes `a1 b2 <= a2 b1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum SubmultCase {
    /// `a1 b1 <= k <= a1 b2`
    Low = 1,
    /// `a1 b2 <= k <= a2 b1`
    Middle = 2,
    /// `a2 b1 <= k <= a2 b2`
    High = 3,
}

impl SubmultCase {
    pub fn id(self) -> u8 {
        self as u8
    }
}

/// One instance of `u(d, s) u(n/d, t) >= u(n, st)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SubmultTrace {
    pub n: usize,
    pub d: usize,
    pub s: usize,
    pub t: usize,
    pub a1: usize,
    pub a2: usize,
    pub b1: usize,
    pub b2: usize,
    pub c1: usize,
    pub c2: usize,
    /// `max(a1, st / b2)`
    pub m1: BigRational,
    /// `min(a2, st / b1)`
    pub m2: BigRational,
    pub case: SubmultCase,
    /// The factor roles were swapped to reach `a1 b2 <= a2 b1`.
    pub relabeled: bool,
    pub lhs: BigRational,
    pub rhs: BigRational,
    /// The chord of the case range at `k`, which lies above `rhs` and below
    /// the left side at both ends of the bracket.
    pub chord: BigRational,
    /// The left side as a function of the first factor's support, at the two
    /// bracket ends (in relabelled coordinates).
    pub extreme_lhs: [BigRational; 2],
}

impl SubmultTrace {
    pub fn holds(&self) -> bool {
        self.lhs >= self.rhs
    }

    pub fn bracket_ok(&self) -> bool {
        self.m1 <= big(self.s) && big(self.s) <= self.m2
    }

    /// The chord argument closes: the chord bounds the right side, and the
    /// left side dominates the chord at both bracket ends.
    pub fn extreme_points_ok(&self) -> bool {
        self.chord >= self.rhs && self.extreme_lhs.iter().all(|v| *v >= self.chord)
    }
}

/// `n (a1 + a2 - s)(b1 + b2 - k/s) / (a1 a2 b1 b2)`
fn product_form(n: usize, a: (usize, usize), b: (usize, usize), k: usize, s: &BigRational) -> BigRational {
    let (a1, a2, b1, b2) = (big(a.0), big(a.1), big(b.0), big(b.1));
    let left = &a1 + &a2 - s;
    let right = &b1 + &b2 - big(k) / s;
    big(n) * left * right / (a1 * a2 * b1 * b2)
}

/// `n (p + q - k) / (p q)`
fn chord(n: usize, p: usize, q: usize, k: usize) -> BigRational {
    if p == q {
        return big(n) / big(p);
    }
    big(n) * (big(p) + big(q) - big(k)) / (big(p) * big(q))
}

pub fn submult_trace(n: usize, d: usize, s: usize, t: usize) -> Result<SubmultTrace> {
    if n == 0 || d == 0 || n % d != 0 {
        return Err(Error::Domain(format!("{d} does not divide {n}")));
    }
    let e = n / d;
    let k = s * t;
    let ua = u_bound_int(d, s)?;
    let ub = u_bound_int(e, t)?;
    let uc = u_bound_int(n, k)?;
    let (a1, a2) = (ua.pair.d1, ua.pair.d2);
    let (b1, b2) = (ub.pair.d1, ub.pair.d2);
    let kq = big(k);
    let m1 = std::cmp::max(big(a1), &kq / big(b2));
    let m2 = std::cmp::min(big(a2), &kq / big(b1));

    // swap the two factors if needed so that a1 b2 <= a2 b1
    let relabeled = a1 * b2 > a2 * b1;
    let (a, b) = if relabeled {
        ((b1, b2), (a1, a2))
    } else {
        ((a1, a2), (b1, b2))
    };
    let case = if k <= a.0 * b.1 {
        SubmultCase::Low
    } else if k <= a.1 * b.0 {
        SubmultCase::Middle
    } else {
        SubmultCase::High
    };
    let (p, q) = match case {
        SubmultCase::Low => (a.0 * b.0, a.0 * b.1),
        SubmultCase::Middle => (a.0 * b.1, a.1 * b.0),
        SubmultCase::High => (a.1 * b.0, a.1 * b.1),
    };
    let rm1 = std::cmp::max(big(a.0), &kq / big(b.1));
    let rm2 = std::cmp::min(big(a.1), &kq / big(b.0));
    let extreme_lhs = [
        product_form(n, a, b, k, &rm1),
        product_form(n, a, b, k, &rm2),
    ];

    Ok(SubmultTrace {
        n,
        d,
        s,
        t,
        a1,
        a2,
        b1,
        b2,
        c1: uc.pair.d1,
        c2: uc.pair.d2,
        m1,
        m2,
        case,
        relabeled,
        lhs: ua.value * ub.value,
        rhs: uc.value,
        chord: chord(n, p, q, k),
        extreme_lhs,
    })
}

/// Every `(d, s, t)` with `d | n`, `1 <= s <= d`, `1 <= t <= n/d`, in that
/// lexicographic order.
pub fn submult_traces(n: usize) -> Result<Vec<SubmultTrace>> {
    if n < 1 {
        return Err(Error::Domain("n must be at least 1".into()));
    }
    let mut out = Vec::new();
    for d in divisors(n) {
        for s in 1..=d {
            for t in 1..=n / d {
                out.push(submult_trace(n, d, s, t)?);
            }
        }
    }
    Ok(out)
}

/// The traces where `u(d, s) u(n/d, t) < u(n, st)`; empty when the
/// inequality holds throughout.
pub fn submult_check(n: usize) -> Result<Vec<SubmultTrace>> {
    let mut bad: Vec<SubmultTrace> = submult_traces(n)?.into_iter().filter(|t| !t.holds()).collect();
    bad.sort_by_key(|x| (x.d, x.s, x.t));
    Ok(bad)
}

/// Numerator and denominator of a rational, for reports.
pub fn num_den(q: &BigRational) -> (BigInt, BigInt) {
    (q.numer().clone(), q.denom().clone())
}

/// `ceil(n / k)` for positive integers.
pub fn classical_lower(n: usize, k: usize) -> usize {
    n.div_ceil(k)
}

/// Compares `u(n, k)` against the hyperbola value `n / k`.
pub fn compare_with_hyperbola(n: usize, k: usize) -> Result<Ordering> {
    let u = u_bound_int(n, k)?;
    Ok(u.value.cmp(&(big(n) / big(k))))
}
