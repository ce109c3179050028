//! The ten acceptance criteria. Runs without the libtest harness so every
//! criterion prints exactly one PASS/FAIL line; the process fails if any
//! criterion fails.

mod common;

use std::collections::HashMap;
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::time::Instant;

use common::*;
use num_bigint::BigInt;
use num_rational::BigRational;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use uncertainty::bounds::{divisors, hull_points, submult_traces, u_bound_int, SubmultCase};
use uncertainty::cli::{random_group, random_signal};
use uncertainty::fourier::{coset_dft, dft, SectionMap};
use uncertainty::groups::{annihilator, quotient, subgroup_of_order, GroupSpec};
use uncertainty::search::{binomial, chebotarev_check, extremal_subgroup_function, theta_oracle, SearchBudget};

type Outcome = Result<String, String>;

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

/// `theta` values keyed by factor list, filled on demand.
#[derive(Default)]
struct ThetaTable {
    values: HashMap<(Vec<usize>, usize), usize>,
}

impl ThetaTable {
    fn get(&mut self, g: &GroupSpec, k: usize) -> usize {
        let key = (g.factors().to_vec(), k);
        if let Some(&v) = self.values.get(&key) {
            return v;
        }
        let v = theta_oracle(g, k, &SearchBudget::default())
            .unwrap_or_else(|e| panic!("{g}, k = {k}: {e}"))
            .theta;
        self.values.insert(key, v);
        v
    }
}

fn desk_groups() -> Vec<GroupSpec> {
    (1..=12)
        .flat_map(factorisations)
        .map(|f| GroupSpec::new(&f).unwrap())
        .collect()
}

fn criterion_1(table: &mut ThetaTable) -> Outcome {
    let mut checked = 0;
    for p in [2, 3, 5, 7, 11] {
        let g = GroupSpec::cyclic(p).unwrap();
        for k in 1..=p {
            let t = table.get(&g, k);
            ensure(t == p + 1 - k, || format!("theta(Z_{p}, {k}) = {t}, expected {}", p + 1 - k))?;
            checked += 1;
        }
    }
    Ok(format!("{checked} (p, k) pairs with theta = p + 1 - k"))
}

fn criterion_2(table: &mut ThetaTable) -> Outcome {
    let groups = desk_groups();
    let (mut pairs, mut tight) = (0, 0);
    for g in &groups {
        let n = g.order();
        for k in 1..=n {
            let t = table.get(g, k);
            let c = u_bound_int(n, k).unwrap().ceiling;
            ensure(t >= c, || format!("{g}, k = {k}: theta = {t} < ceil(u) = {c}"))?;
            pairs += 1;
            tight += usize::from(t == c);
        }
    }
    Ok(format!(
        "{} groups, {pairs} (G, k) pairs, bound attained at {tight}",
        groups.len()
    ))
}

fn criterion_3(table: &mut ThetaTable) -> Outcome {
    let mut checked = 0;
    for g in desk_groups() {
        let n = g.order();
        for d in divisors(n) {
            let t = table.get(&g, d);
            ensure(t == n / d, || format!("{g}: theta(G, {d}) = {t}, expected {}", n / d))?;
            let h = subgroup_of_order(&g, d).unwrap();
            let perp = annihilator(&g, &h);
            for chi in g.labels() {
                let f = extremal_subgroup_function(&g, &h, &chi).unwrap();
                let spec = dft(&f);
                ensure(f.support_size() == d, || format!("{g}: |supp f| != {d}"))?;
                ensure(spec.support_size() == n / d, || format!("{g}, d = {d}, chi = {chi}: |supp f^| != {}", n / d))?;
                // trivial character: f^ = d * 1_{H^perp}
                if chi == g.trivial_label() {
                    for lam in 0..n {
                        let expected = if perp.contains_index(lam) { q(d as i64, 1) } else { q(0, 1) };
                        ensure(spec.value(lam).as_rational() == Some(&expected), || {
                            format!("{g}, d = {d}: f^ at label {lam} is {}", spec.value(lam))
                        })?;
                    }
                }
                checked += 1;
            }
        }
    }
    Ok(format!("theta(G, d) = n/d everywhere; {checked} extremal witnesses verified through the transform"))
}

fn criterion_4() -> Outcome {
    let mut strict = 0;
    let mut equal = 0;
    for n in 1..=200usize {
        let divs = divisors(n);
        for k in 1..=n {
            let u = u_bound_int(n, k).unwrap().value;
            let hyper = q(n as i64, k as i64);
            if divs.contains(&k) {
                ensure(u == hyper, || format!("u({n}, {k}) = {u} differs from n/k at a divisor"))?;
                equal += 1;
            } else {
                ensure(u > hyper, || format!("u({n}, {k}) = {u} not above n/k = {hyper}"))?;
                strict += 1;
            }
        }
    }
    let u125 = u_bound_int(12, 5).unwrap();
    let u127 = u_bound_int(12, 7).unwrap();
    ensure(u125.value == q(5, 2) && u127.value == q(11, 6), || "spot values u(12,5), u(12,7)".into())?;
    Ok(format!(
        "n <= 200: {strict} non-divisor k strictly above n/k, {equal} divisor k equal; u(12,5) = 5/2, u(12,7) = 11/6"
    ))
}

fn criterion_5() -> Outcome {
    let mut cases = [0usize; 3];
    let mut traces = 0;
    for n in 2..=200 {
        for tr in submult_traces(n).unwrap() {
            ensure(tr.holds(), || format!("violation: {tr:?}"))?;
            ensure(tr.bracket_ok(), || format!("bracket fails: {tr:?}"))?;
            cases[tr.case.id() as usize - 1] += 1;
            traces += 1;
        }
    }
    ensure(cases.iter().all(|&c| c > 0), || format!("case coverage {cases:?}"))?;
    Ok(format!(
        "{traces} traces, no violations; case {} x{}, case {} x{}, case {} x{}",
        SubmultCase::Low.id(),
        cases[0],
        SubmultCase::Middle.id(),
        cases[1],
        SubmultCase::High.id(),
        cases[2]
    ))
}

fn criterion_6() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(2024);
    let mut pairs = Vec::new();
    for n in 1..=36 {
        for f in invariant_forms(n) {
            let g = GroupSpec::new(&f).unwrap();
            for h in all_subgroups(&g) {
                pairs.push((g.clone(), h));
            }
        }
    }
    let signals = pairs.len().max(200);
    for i in 0..signals {
        let (g, h) = &pairs[i % pairs.len()];
        let f = random_signal(&mut rng, g);
        let section = SectionMap::minimal(g, h);
        let via_cosets = coset_dft(&f, h, &section).map_err(|e| e.to_string())?;
        ensure(via_cosets == dft(&f), || format!("{g}, |H| = {}: coset path differs", h.order()))?;
    }
    Ok(format!(
        "{signals} random signals over {} (group, subgroup) pairs of order <= 36, exact agreement",
        pairs.len()
    ))
}

fn criterion_7() -> Outcome {
    let mut total = 0;
    for p in [2usize, 3, 5, 7] {
        let c = chebotarev_check(p, None, None).map_err(|e| e.to_string())?;
        ensure(c.all_nonsingular(), || format!("p = {p}: singular minor {:?}", c.first_singular))?;
        let expected: u128 = (0..=p).map(|j| binomial(p, j).pow(2)).sum();
        ensure(c.checked == expected, || format!("p = {p}: {} tests, expected {expected}", c.checked))?;
        total += c.checked;
    }
    let diag = chebotarev_check(4, None, None).map_err(|e| e.to_string())?;
    ensure(diag.diagnostic && diag.first_singular == Some((vec![0, 2], vec![0, 2])), || {
        format!("n = 4 diagnostic found {:?}", diag.first_singular)
    })?;
    Ok(format!(
        "{total} minors nonsingular for p in {{2,3,5,7}} (3432 for p = 7); n = 4 singular at rows {{0,2}} x cols {{0,2}}"
    ))
}

fn criterion_8(table: &mut ThetaTable) -> Outcome {
    let mut checked = 0;
    for f in [vec![6], vec![8], vec![2, 4], vec![12]] {
        let g = GroupSpec::new(&f).unwrap();
        let n = g.order();
        for h in all_subgroups(&g) {
            let hs = h.structure();
            let quo = quotient(&g, &h);
            let qs = quo.quotient_group().clone();
            ensure(hs.order() == h.order() && qs.order() * h.order() == n, || "structure orders".into())?;
            for k in 1..=n {
                let t = table.get(&g, k);
                let mut found = false;
                'scan: for s in 1..=hs.order() {
                    for tt in 1..=qs.order() {
                        if s * tt <= k && t >= table.get(&hs, s) * table.get(&qs, tt) {
                            found = true;
                            break 'scan;
                        }
                    }
                }
                ensure(found, || format!("{g}, |H| = {}, k = {k}: no (s, t) pair", h.order()))?;
                checked += 1;
            }
        }
    }
    Ok(format!("{checked} (G, H, k) triples each admit s t <= k with theta(G,k) >= theta(H,s) theta(G/H,t)"))
}

fn criterion_9() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(9);
    let mut tight = 0;
    for _ in 0..1000 {
        let g = random_group(&mut rng, 24);
        let f = random_signal(&mut rng, &g);
        let a = f.support_size();
        let b = dft(&f).support_size();
        ensure(a * b >= g.order(), || format!("{g}: {a} * {b} < {}", g.order()))?;
        tight += usize::from(a * b == g.order());
    }
    Ok(format!("1000 random signals satisfy |supp f| |supp f^| >= n ({tight} with equality)"))
}

fn criterion_10() -> Outcome {
    let mut checked = 0;
    for n in 1..=200 {
        let hull = hull_points(n).unwrap();
        for k in 1..=n {
            let kq = BigRational::from_integer(BigInt::from(k));
            let poly = hull.evaluate(&kq).unwrap();
            let u = u_bound_int(n, k).unwrap().value;
            ensure(poly == u, || format!("n = {n}, k = {k}: polyline {poly} vs u {u}"))?;
            checked += 1;
        }
    }
    Ok(format!("{checked} (n, k) pairs, polyline equals u(n, k) exactly"))
}

fn main() {
    let mut table = ThetaTable::default();
    let mut failures = 0;
    let criteria: Vec<(&str, Box<dyn FnMut(&mut ThetaTable) -> Outcome>)> = vec![
        ("prime order exactness", Box::new(criterion_1)),
        ("ceiling bound on groups of order <= 12", Box::new(criterion_2)),
        ("divisor equality with subgroup witnesses", Box::new(criterion_3)),
        ("strictly above the hyperbola off divisors", Box::new(|_| criterion_4())),
        ("submultiplicativity sweep n <= 200", Box::new(|_| criterion_5())),
        ("coset transform equals direct transform", Box::new(|_| criterion_6())),
        ("DFT minors of prime order", Box::new(|_| criterion_7())),
        ("subgroup and quotient product scan", Box::new(criterion_8)),
        ("classical product inequality", Box::new(|_| criterion_9())),
        ("polyline identity", Box::new(|_| criterion_10())),
    ];
    for (i, (name, mut run)) in criteria.into_iter().enumerate() {
        let start = Instant::now();
        let result = catch_unwind(AssertUnwindSafe(|| run(&mut table)))
            .unwrap_or_else(|e| {
                Err(e
                    .downcast_ref::<String>()
                    .cloned()
                    .or_else(|| e.downcast_ref::<&str>().map(|s| s.to_string()))
                    .unwrap_or_else(|| "panic".into()))
            });
        let secs = start.elapsed().as_secs_f64();
        match result {
            Ok(detail) => println!("criterion {:>2} PASS [{name}] {detail} ({secs:.1}s)", i + 1),
            Err(why) => {
                failures += 1;
                println!("criterion {:>2} FAIL [{name}] {why} ({secs:.1}s)", i + 1);
            }
        }
    }
    if failures > 0 {
        println!("{failures} acceptance criteria failed");
        std::process::exit(1);
    }
    println!("all 10 acceptance criteria passed");
}
