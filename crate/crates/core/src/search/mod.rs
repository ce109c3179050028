//! Exhaustive minimisation of spectral support.
//!
//! For a candidate support `S` with `|S| = k`, a nonzero `f` supported in `S`
//! whose transform vanishes on a row set `T` exists iff the DFT submatrix
//! `M[T, S]` has rank below `k`. A largest such `T` is the zero set of the
//! one-dimensional kernel of some `k - 1` independent rows, so the search
//! walks `(k-1)`-row sets, takes the kernel line, and counts the rows it
//! annihilates.
//!
//! Rows are first reduced into `F_q`. Full rank there certifies full rank
//! exactly, and the zero count there can only over-count, so an exact
//! recomputation is needed only when a candidate would improve the current
//! best.

mod echelon;
mod extremal;
mod minors;

use itertools::Itertools;

use crate::cyclo::{exact_kernel, CycNumber, CyclotomicField, ExactMatrix, PrimeImage};
use crate::error::{Error, Result};
use crate::fourier::{dft, Signal, Spectrum};
use crate::groups::GroupSpec;
use echelon::ModEchelon;

pub use extremal::{extremal_subgroup_function, tao_tight_construct};
pub use minors::{chebotarev_check, MinorCertificate};

/// Caps on the size of an exhaustive search.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SearchBudget {
    /// Candidate supports, `C(n-1, k-1)`.
    pub max_support_sets: u128,
    /// Row sets examined, `C(n-1, k-1) * C(n, k-1)`.
    pub max_rank_tests: u128,
}

impl Default for SearchBudget {
    fn default() -> Self {
        SearchBudget {
            max_support_sets: 100_000,
            max_rank_tests: 5_000_000,
        }
    }
}

impl SearchBudget {
    pub fn unlimited() -> Self {
        SearchBudget {
            max_support_sets: u128::MAX,
            max_rank_tests: u128::MAX,
        }
    }
}

pub fn binomial(n: usize, k: usize) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut r: u128 = 1;
    for i in 0..k {
        r = r * (n - i) as u128 / (i + 1) as u128;
    }
    r
}

pub(crate) fn is_prime(n: usize) -> bool {
    n >= 2 && (2..).take_while(|d| d * d <= n).all(|d| n % d != 0)
}

/// The best function found for one support set.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CosupportResult {
    /// The candidate support the function was restricted to.
    pub support_set: Vec<usize>,
    /// Labels where the transform vanishes.
    pub zero_set: Vec<usize>,
    pub witness: Signal,
    pub spectrum: Spectrum,
}

impl CosupportResult {
    /// `|supp(f^)|`
    pub fn size(&self) -> usize {
        self.spectrum.support_size()
    }
}

/// A minimiser of `|supp(f^)|` over nonzero `f` with `|supp(f)| <= k`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ThetaWitness {
    pub group: GroupSpec,
    pub k: usize,
    pub theta: usize,
    /// The size-`k` candidate support the minimum was found on.
    pub support_set: Vec<usize>,
    /// Labels where the witness transform vanishes.
    pub zero_set: Vec<usize>,
    pub witness: Signal,
    pub spectrum: Spectrum,
}

impl ThetaWitness {
    pub fn witness_support(&self) -> Vec<usize> {
        self.witness.support()
    }

    pub fn spectrum_support(&self) -> Vec<usize> {
        self.spectrum.support()
    }

    pub fn witness_cosupport_size(&self) -> usize {
        self.spectrum.support_size()
    }
}

/// Images in `F_q` of the DFT matrix `zeta^(-e(chi, x))`, rows by label.
struct ModularDft<'a> {
    group: &'a GroupSpec,
    q: u64,
    table: Vec<u64>,
}

impl<'a> ModularDft<'a> {
    fn new(group: &'a GroupSpec) -> Self {
        let img = PrimeImage::new(group.exponent());
        let n = group.order();
        let mut table = Vec::with_capacity(n * n);
        for chi in 0..n {
            for x in 0..n {
                table.push(img.zeta_pow(-(group.pairing_index(chi, x) as i64)));
            }
        }
        ModularDft {
            group,
            q: img.prime(),
            table,
        }
    }

    fn entry(&self, chi: usize, x: usize) -> u64 {
        self.table[chi * self.group.order() + x]
    }

    fn columns(&self, s: &[usize]) -> Vec<Vec<u64>> {
        (0..self.group.order())
            .map(|chi| s.iter().map(|&x| self.entry(chi, x)).collect())
            .collect()
    }
}

/// Exact `f` supported in `s` whose transform vanishes on `rows`, assuming
/// the submatrix has a one-dimensional kernel.
fn exact_witness(group: &GroupSpec, field: &std::sync::Arc<CyclotomicField>, s: &[usize], rows: &[usize]) -> Result<Signal> {
    let kernel = if rows.is_empty() {
        vec![CycNumber::one(field)]
    } else {
        let m = ExactMatrix::from_fn(field, rows.len(), s.len(), |i, j| {
            CycNumber::zeta_pow(field, -(group.pairing_index(rows[i], s[j]) as i64))
        })?;
        let k = exact_kernel(&m);
        if k.basis.len() != 1 {
            return Err(Error::Domain(format!(
                "expected a kernel line, found dimension {}",
                k.basis.len()
            )));
        }
        k.basis.into_iter().next().expect("one basis vector")
    };
    let mut values = vec![CycNumber::zero(field); group.order()];
    for (&x, v) in s.iter().zip(kernel) {
        values[x] = v;
    }
    Signal::new(group, values)
}

/// Walks `depth`-subsets of `0..n` in lexicographic order, keeping only
/// independent row sets.
fn independent_row_sets(
    rows: &[Vec<u64>],
    start: usize,
    depth: usize,
    ech: &ModEchelon,
    chosen: &mut Vec<usize>,
    visit: &mut dyn FnMut(&ModEchelon, &[usize]) -> Result<()>,
) -> Result<()> {
    if depth == 0 {
        return visit(ech, chosen);
    }
    for r in start..=rows.len() - depth {
        let mut next = ech.clone();
        if next.push(&rows[r]) {
            chosen.push(r);
            independent_row_sets(rows, r + 1, depth - 1, &next, chosen, visit)?;
            chosen.pop();
        }
    }
    Ok(())
}

fn better(count: usize, zeros: &[usize], best: &Option<(usize, Vec<usize>)>) -> bool {
    match best {
        None => true,
        Some((c, z)) => count > *c || (count == *c && zeros < &z[..]),
    }
}

/// The largest zero set reachable from support `s`, provided it has more
/// than `floor` elements. Ties go to the lexicographically smallest set.
fn best_for_support(
    group: &GroupSpec,
    field: &std::sync::Arc<CyclotomicField>,
    dft_q: &ModularDft,
    s: &[usize],
    floor: Option<usize>,
) -> Result<Option<CosupportResult>> {
    let k = s.len();
    let q = dft_q.q;
    let rows = dft_q.columns(s);
    let mut best: Option<(usize, Vec<usize>)> = None;
    let mut found: Option<CosupportResult> = None;
    let mut visit = |ech: &ModEchelon, chosen: &[usize]| -> Result<()> {
        let v = ech.kernel_line().expect("k - 1 independent rows");
        let zeros_q: Vec<usize> = rows
            .iter()
            .enumerate()
            .filter(|(_, row)| {
                row.iter()
                    .zip(&v)
                    .fold(0u64, |acc, (a, b)| (acc + crate::cyclo::mul_mod(*a, *b, q)) % q)
                    == 0
            })
            .map(|(i, _)| i)
            .collect();
        let count_q = zeros_q.len();
        if floor.is_some_and(|f| count_q <= f) || !better(count_q, &zeros_q, &best) {
            return Ok(());
        }
        // the image count can only overstate the exact one, so confirm
        let witness = exact_witness(group, field, s, chosen)?;
        let spectrum = dft(&witness);
        let zeros: Vec<usize> = (0..group.order()).filter(|&i| spectrum.value(i).is_zero()).collect();
        if floor.is_some_and(|f| zeros.len() <= f) || !better(zeros.len(), &zeros, &best) {
            return Ok(());
        }
        best = Some((zeros.len(), zeros.clone()));
        found = Some(CosupportResult {
            support_set: s.to_vec(),
            zero_set: zeros,
            witness,
            spectrum,
        });
        Ok(())
    };
    independent_row_sets(&rows, 0, k - 1, &ModEchelon::new(k, q), &mut Vec::new(), &mut visit)?;
    Ok(found)
}

fn check_support_set(group: &GroupSpec, s: &[usize]) -> Result<()> {
    if s.is_empty() {
        return Err(Error::Domain("support set is empty".into()));
    }
    if let Some(&bad) = s.iter().find(|&&x| x >= group.order()) {
        return Err(Error::Domain(format!("index {bad} outside a group of order {}", group.order())));
    }
    if s.iter().duplicates().next().is_some() {
        return Err(Error::Domain("support set has repeated indices".into()));
    }
    Ok(())
}

/// Minimum of `|supp(f^)|` over nonzero `f` supported in `s`, with a witness.
pub fn min_cosupport(group: &GroupSpec, s: &[usize]) -> Result<CosupportResult> {
    check_support_set(group, s)?;
    let mut s = s.to_vec();
    s.sort_unstable();
    let field = CyclotomicField::get(group.exponent());
    let dft_q = ModularDft::new(group);
    Ok(best_for_support(group, &field, &dft_q, &s, None)?.expect("the kernel is never empty"))
}

fn check_k(group: &GroupSpec, k: usize) -> Result<()> {
    if k == 0 || k > group.order() {
        return Err(Error::Domain(format!("k = {k} outside [1, {}]", group.order())));
    }
    Ok(())
}

fn check_budget(n: usize, k: usize, pinned: bool, budget: &SearchBudget) -> Result<()> {
    let sets = if pinned {
        binomial(n - 1, k - 1)
    } else {
        binomial(n, k)
    };
    if sets > budget.max_support_sets {
        return Err(Error::Budget {
            what: "support sets",
            required: sets,
            limit: budget.max_support_sets,
        });
    }
    let tests = sets.saturating_mul(binomial(n, k - 1));
    if tests > budget.max_rank_tests {
        return Err(Error::Budget {
            what: "rank tests",
            required: tests,
            limit: budget.max_rank_tests,
        });
    }
    Ok(())
}

fn minimise(group: &GroupSpec, k: usize, supports: impl Iterator<Item = Vec<usize>>) -> Result<ThetaWitness> {
    let field = CyclotomicField::get(group.exponent());
    let dft_q = ModularDft::new(group);
    let mut best: Option<CosupportResult> = None;
    for s in supports {
        let floor = best.as_ref().map(|b| b.zero_set.len());
        if let Some(r) = best_for_support(group, &field, &dft_q, &s, floor)? {
            best = Some(r);
        }
    }
    let best = best.expect("at least one support set");
    Ok(ThetaWitness {
        group: group.clone(),
        k,
        theta: best.size(),
        support_set: best.support_set,
        zero_set: best.zero_set,
        witness: best.witness,
        spectrum: best.spectrum,
    })
}

/// `theta(G, k)`: the least `|supp(f^)|` over nonzero `f` with
/// `|supp(f)| <= k`.
///
/// Supports always contain the identity, since translating `f` leaves
/// `|supp(f^)|` unchanged.
pub fn theta_oracle(group: &GroupSpec, k: usize, budget: &SearchBudget) -> Result<ThetaWitness> {
    check_k(group, k)?;
    let n = group.order();
    check_budget(n, k, true, budget)?;
    let supports = (1..n).combinations(k - 1).map(|rest| {
        let mut s = Vec::with_capacity(k);
        s.push(0);
        s.extend(rest);
        s
    });
    minimise(group, k, supports)
}

/// [`theta_oracle`] without fixing the identity inside the support.
pub fn theta_oracle_unpinned(group: &GroupSpec, k: usize, budget: &SearchBudget) -> Result<ThetaWitness> {
    check_k(group, k)?;
    check_budget(group.order(), k, false, budget)?;
    minimise(group, k, (0..group.order()).combinations(k))
}
