//! The `uncertainty` command line.
//!
//! Exit codes: 0 when the command succeeded and found nothing wrong, 1 when a
//! verification found a violation, 2 on usage or domain errors.

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use clap::{Parser, Subcommand};
use num_bigint::BigInt;
use num_rational::BigRational;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::json;

use crate::bounds::{divisors, hull_points, submult_traces, u_bound_int, BoundValue, SubmultCase};
use crate::error::{Error, Result};
use crate::fourier::{coset_dft, dft, SectionMap, Signal};
use crate::groups::{subgroup_of_order, GroupSpec};
use crate::report::{parse_signal, rational_string, values_json, Cell, Format, Report, Table};
use crate::search::{chebotarev_check, extremal_subgroup_function, tao_tight_construct, theta_oracle, SearchBudget};

#[derive(Debug, Parser)]
#[command(name = "uncertainty", version, about = "Exact support uncertainty bounds on finite abelian groups")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,

    /// Output format: csv or json.
    #[arg(long, global = true, default_value = "csv", value_parser = parse_format)]
    pub format: Format,

    /// Write the report here instead of standard output.
    #[arg(long, global = true)]
    pub output: Option<PathBuf>,

    /// Cap on candidate supports in a theta search.
    #[arg(long, global = true)]
    pub max_support_sets: Option<u128>,

    /// Cap on rank tests in a theta search or minor scan.
    #[arg(long, global = true)]
    pub max_rank_tests: Option<u128>,

    /// Seed for commands that draw random signals.
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,
}

fn parse_format(s: &str) -> std::result::Result<Format, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// The bound u(n, k) and its neighbouring divisors.
    Bound { n: usize, k: usize },
    /// u(n, k) for every k, with the divisor polyline.
    Hull { n: usize },
    /// Exact minimum spectral support over supports of size at most k.
    Theta { group: String, k: usize },
    /// Checks theta(Z_p, k) = p + 1 - k and builds tight witnesses.
    VerifyTao { p: usize },
    /// Scans square minors of the Z_n DFT matrix for singular ones.
    Chebotarev {
        n: usize,
        /// Largest minor size to scan.
        #[arg(long)]
        max_size: Option<usize>,
    },
    /// Checks u(d, s) u(n/d, t) >= u(n, st) for all n up to n_max.
    Submult { n_max: usize },
    /// Subgroup indicator times each character, for the subgroup of order d.
    Extremal { group: String, d: usize },
    /// Compares theta(G, k) against ceil(u(n, k)) for every k.
    VerifyMain { group: String },
    /// Fourier transform of a signal literal (JSON array of rational strings).
    Transform { group: String, signal: String },
    /// Random signals: product inequality and coset transform agreement.
    Property { max_order: usize, count: usize },
}

/// A report and whether it records a violation.
#[derive(Debug, Clone)]
pub struct Outcome {
    pub report: Report,
    pub violation: bool,
}

impl Outcome {
    fn ok(report: Report) -> Self {
        Outcome {
            report,
            violation: false,
        }
    }
}

fn group(spec: &str) -> Result<GroupSpec> {
    spec.parse()
}

fn budget(cli: &Cli) -> SearchBudget {
    let d = SearchBudget::default();
    SearchBudget {
        max_support_sets: cli.max_support_sets.unwrap_or(d.max_support_sets),
        max_rank_tests: cli.max_rank_tests.unwrap_or(d.max_rank_tests),
    }
}

fn status(theta: usize, ceiling: usize) -> &'static str {
    match theta.cmp(&ceiling) {
        std::cmp::Ordering::Less => "violation",
        std::cmp::Ordering::Equal => "tight",
        std::cmp::Ordering::Greater => "slack",
    }
}

const BOUND_COLUMNS: [&str; 7] = ["n", "k", "d1", "d2", "u_num", "u_den", "ceil_u"];

fn bound_row(b: &BoundValue) -> Vec<Cell> {
    vec![
        b.n().into(),
        rational_string(b.k()).into(),
        b.pair.d1.into(),
        b.pair.d2.into(),
        b.value.numer().to_string().into(),
        b.value.denom().to_string().into(),
        b.ceiling.into(),
    ]
}

fn bound(n: usize, k: usize) -> Result<Outcome> {
    let mut t = Table::new(&BOUND_COLUMNS);
    t.push(bound_row(&u_bound_int(n, k)?));
    Ok(Outcome::ok(Report::from_table(t)))
}

fn hull(n: usize) -> Result<Outcome> {
    let h = hull_points(n)?;
    let mut t = Table::new(&BOUND_COLUMNS);
    for k in 1..=n {
        t.push(bound_row(&u_bound_int(n, k)?));
    }
    let json = json!({
        "n": n,
        "vertices": h.vertices,
        "slopes": h.slopes().iter().map(rational_string).collect::<Vec<_>>(),
        "rows": t.to_json(),
    });
    Ok(Outcome::ok(Report {
        table: t,
        json: Some(json),
    }))
}

fn theta(spec: &str, k: usize, budget: &SearchBudget) -> Result<Outcome> {
    let g = group(spec)?;
    let w = theta_oracle(&g, k, budget)?;
    let b = u_bound_int(g.order(), k)?;
    let st = status(w.theta, b.ceiling);
    let mut t = Table::new(&[
        "group",
        "n",
        "k",
        "theta",
        "u_num",
        "u_den",
        "ceil_u",
        "status",
        "support_indices",
        "spectrum_support_indices",
    ]);
    t.push(vec![
        g.to_string().into(),
        g.order().into(),
        k.into(),
        w.theta.into(),
        b.value.numer().to_string().into(),
        b.value.denom().to_string().into(),
        b.ceiling.into(),
        st.into(),
        w.witness_support().into(),
        w.spectrum_support().into(),
    ]);
    let json = json!({
        "group": g.to_string(),
        "k": k,
        "theta": w.theta,
        "support_indices": w.witness_support(),
        "spectrum_support_indices": w.spectrum_support(),
        "values": values_json(w.witness.values()),
        "u": rational_string(&b.value),
        "ceil_u": b.ceiling,
        "status": st,
    });
    Ok(Outcome {
        report: Report {
            table: t,
            json: Some(json),
        },
        violation: st == "violation",
    })
}

fn verify_main(spec: &str, budget: &SearchBudget) -> Result<Outcome> {
    let g = group(spec)?;
    let n = g.order();
    let mut t = Table::new(&["group", "n", "k", "theta", "u_num", "u_den", "ceil_u", "status"]);
    let mut violation = false;
    for k in 1..=n {
        let w = theta_oracle(&g, k, budget)?;
        let b = u_bound_int(n, k)?;
        let st = status(w.theta, b.ceiling);
        violation |= st == "violation";
        t.push(vec![
            g.to_string().into(),
            n.into(),
            k.into(),
            w.theta.into(),
            b.value.numer().to_string().into(),
            b.value.denom().to_string().into(),
            b.ceiling.into(),
            st.into(),
        ]);
    }
    Ok(Outcome {
        report: Report::from_table(t),
        violation,
    })
}

fn verify_tao(p: usize, budget: &SearchBudget) -> Result<Outcome> {
    if !crate::search::is_prime(p) {
        return Err(Error::Domain(format!("{p} is not prime")));
    }
    let g = GroupSpec::cyclic(p)?;
    let mut t = Table::new(&[
        "p",
        "k",
        "theta",
        "expected",
        "construct_support",
        "construct_cosupport",
        "status",
    ]);
    let mut violation = false;
    for k in 1..=p {
        let w = theta_oracle(&g, k, budget)?;
        let f = tao_tight_construct(p, k, None, None)?;
        let (sf, sh) = (f.support_size(), dft(&f).support_size());
        let expected = p + 1 - k;
        let ok = w.theta == expected && sf == k && sh == expected;
        violation |= !ok;
        t.push(vec![
            p.into(),
            k.into(),
            w.theta.into(),
            expected.into(),
            sf.into(),
            sh.into(),
            if ok { "ok" } else { "violation" }.into(),
        ]);
    }
    Ok(Outcome {
        report: Report::from_table(t),
        violation,
    })
}

fn chebotarev(n: usize, max_size: Option<usize>, max_tests: Option<u128>) -> Result<Outcome> {
    let c = chebotarev_check(n, max_size, max_tests)?;
    let (mode, st) = match (c.diagnostic, c.all_nonsingular()) {
        (false, true) => ("certify", "nonsingular"),
        (false, false) => ("certify", "violation"),
        (true, true) => ("diagnostic", "none-found"),
        (true, false) => ("diagnostic", "singular-found"),
    };
    let (rows, cols) = c.first_singular.clone().unwrap_or_default();
    let mut t = Table::new(&["n", "mode", "max_size", "checked", "singular_rows", "singular_cols", "status"]);
    t.push(vec![
        n.into(),
        mode.into(),
        c.max_size.into(),
        c.checked.into(),
        rows.into(),
        cols.into(),
        st.into(),
    ]);
    Ok(Outcome {
        report: Report::from_table(t),
        violation: st == "violation",
    })
}

fn submult(n_max: usize) -> Result<Outcome> {
    if n_max < 2 {
        return Err(Error::Domain(format!("n_max = {n_max} must be at least 2")));
    }
    let mut t = Table::new(&[
        "n", "d", "s", "t", "a1", "a2", "b1", "b2", "c1", "c2", "case_id", "lhs_num", "lhs_den", "rhs_num", "rhs_den",
    ]);
    let mut traces = 0usize;
    let mut cases = [0usize; 3];
    for n in 2..=n_max {
        for tr in submult_traces(n)? {
            traces += 1;
            cases[tr.case.id() as usize - 1] += 1;
            if tr.holds() && tr.bracket_ok() {
                continue;
            }
            t.push(vec![
                tr.n.into(),
                tr.d.into(),
                tr.s.into(),
                tr.t.into(),
                tr.a1.into(),
                tr.a2.into(),
                tr.b1.into(),
                tr.b2.into(),
                tr.c1.into(),
                tr.c2.into(),
                (tr.case.id() as usize).into(),
                tr.lhs.numer().to_string().into(),
                tr.lhs.denom().to_string().into(),
                tr.rhs.numer().to_string().into(),
                tr.rhs.denom().to_string().into(),
            ]);
        }
    }
    eprintln!(
        "checked {traces} traces: case {} x{}, case {} x{}, case {} x{}; {} violations",
        SubmultCase::Low.id(),
        cases[0],
        SubmultCase::Middle.id(),
        cases[1],
        SubmultCase::High.id(),
        cases[2],
        t.rows.len()
    );
    let violation = !t.rows.is_empty();
    Ok(Outcome {
        report: Report::from_table(t),
        violation,
    })
}

fn extremal(spec: &str, d: usize) -> Result<Outcome> {
    let g = group(spec)?;
    let h = subgroup_of_order(&g, d)?;
    let n = g.order();
    let mut t = Table::new(&[
        "group",
        "d",
        "chi",
        "support_size",
        "spectrum_support_size",
        "product",
        "n",
        "status",
    ]);
    let mut violation = false;
    for chi in g.labels() {
        let f = extremal_subgroup_function(&g, &h, &chi)?;
        let (a, b) = (f.support_size(), dft(&f).support_size());
        let ok = a * b == n;
        violation |= !ok;
        t.push(vec![
            g.to_string().into(),
            d.into(),
            chi.to_string().into(),
            a.into(),
            b.into(),
            (a * b).into(),
            n.into(),
            if ok { "equal" } else { "violation" }.into(),
        ]);
    }
    Ok(Outcome {
        report: Report::from_table(t),
        violation,
    })
}

fn transform(spec: &str, literal: &str) -> Result<Outcome> {
    let g = group(spec)?;
    let f = parse_signal(&g, literal)?;
    let s = dft(&f);
    let mut t = Table::new(&["index", "label", "value"]);
    for (i, v) in s.values().iter().enumerate() {
        t.push(vec![
            i.into(),
            g.label(i).to_string().into(),
            v.to_rational_strings().join(" ").into(),
        ]);
    }
    let json = json!({
        "group": g.to_string(),
        "support_indices": f.support(),
        "spectrum_support_indices": s.support(),
        "values": values_json(s.values()),
    });
    Ok(Outcome::ok(Report {
        table: t,
        json: Some(json),
    }))
}

/// A group of order at most `max_order`, as a random ordered factorisation.
pub fn random_group(rng: &mut impl Rng, max_order: usize) -> GroupSpec {
    let n = rng.gen_range(1..=max_order);
    let mut rest = n;
    let mut factors = Vec::new();
    while rest > 1 {
        let choices: Vec<usize> = divisors(rest).into_iter().filter(|&d| d > 1).collect();
        let f = choices[rng.gen_range(0..choices.len())];
        factors.push(f);
        rest /= f;
    }
    if factors.is_empty() {
        factors.push(1);
    }
    GroupSpec::new(&factors).expect("factors are positive")
}

/// A nonzero rational signal with entries `a/b`, `|a| <= 5`, `1 <= b <= 4`,
/// each entry nonzero with probability about one half.
pub fn random_signal(rng: &mut impl Rng, g: &GroupSpec) -> Signal {
    loop {
        let values: Vec<BigRational> = (0..g.order())
            .map(|_| {
                if rng.gen_bool(0.5) {
                    BigRational::new(BigInt::from(0), BigInt::from(1))
                } else {
                    BigRational::new(BigInt::from(rng.gen_range(-5..=5)), BigInt::from(rng.gen_range(1..=4)))
                }
            })
            .collect();
        let f = Signal::from_rationals(g, values).expect("length matches");
        if !f.is_zero() {
            return f;
        }
    }
}

fn property(max_order: usize, count: usize, seed: u64) -> Result<Outcome> {
    if max_order == 0 {
        return Err(Error::Domain("max_order must be at least 1".into()));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut t = Table::new(&[
        "trial",
        "group",
        "n",
        "support_size",
        "spectrum_support_size",
        "subgroup_order",
        "product_ok",
        "coset_ok",
    ]);
    let mut violation = false;
    for trial in 0..count {
        let g = random_group(&mut rng, max_order);
        let f = random_signal(&mut rng, &g);
        let s = dft(&f);
        let divs = divisors(g.order());
        let d = divs[rng.gen_range(0..divs.len())];
        let h = subgroup_of_order(&g, d)?;
        let coset_ok = coset_dft(&f, &h, &SectionMap::minimal(&g, &h))? == s;
        let product_ok = f.support_size() * s.support_size() >= g.order();
        violation |= !(coset_ok && product_ok);
        t.push(vec![
            trial.into(),
            g.to_string().into(),
            g.order().into(),
            f.support_size().into(),
            s.support_size().into(),
            d.into(),
            product_ok.into(),
            coset_ok.into(),
        ]);
    }
    Ok(Outcome {
        report: Report::from_table(t),
        violation,
    })
}

/// Runs a parsed command.
pub fn execute(cli: &Cli) -> Result<Outcome> {
    let b = budget(cli);
    match &cli.command {
        Command::Bound { n, k } => bound(*n, *k),
        Command::Hull { n } => hull(*n),
        Command::Theta { group, k } => theta(group, *k, &b),
        Command::VerifyTao { p } => verify_tao(*p, &b),
        Command::Chebotarev { n, max_size } => chebotarev(*n, *max_size, cli.max_rank_tests),
        Command::Submult { n_max } => submult(*n_max),
        Command::Extremal { group, d } => extremal(group, *d),
        Command::VerifyMain { group } => verify_main(group, &b),
        Command::Transform { group, signal } => transform(group, signal),
        Command::Property { max_order, count } => property(*max_order, *count, cli.seed),
    }
}

fn emit(cli: &Cli, text: &str) -> std::io::Result<()> {
    match &cli.output {
        Some(path) => std::fs::write(path, text),
        None => {
            let mut out = std::io::stdout().lock();
            out.write_all(text.as_bytes())?;
            out.flush()
        }
    }
}

/// Parses `args` (program name first), runs the command and returns the
/// process exit code.
pub fn run_cli<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return code;
        }
    };
    let outcome = match execute(&cli).and_then(|o| Ok((o.report.render(cli.format)?, o.violation))) {
        Ok(o) => o,
        Err(e) => {
            eprintln!("error: {e}");
            return 2;
        }
    };
    if let Err(e) = emit(&cli, &outcome.0) {
        eprintln!("error: {e}");
        return 2;
    }
    if outcome.1 {
        eprintln!("violation found");
        1
    } else {
        0
    }
}
