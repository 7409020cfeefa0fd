//! Named verification suites that cross-check the counting formulas, the
//! enumerators and the bijections against each other.

use std::fmt;

use num_bigint::BigUint;
use num_traits::One;
use serde::Serialize;

use crate::bijections::{apply_named, standard_reports, BijectionReport};
use crate::counting::{
    a_binomial, a_diag_binomial, a_long, a_table, a_table_from_gf, asymptotic_estimate_for,
    b_table, b_table_from_gf, binet_bound_check, d_count, fib_bound_check, fibonacci, m_count,
    r_diag_from_gf, r_diag_sequence, rows_unimodal, s_count, signed_step_path_count, z_table,
    BigCount, SIGNED_PATH_LIMIT,
};
use crate::error::{Error, Result};
use crate::objects::{
    count_visited, visit_012, visit_b_step_paths, visit_chords, visit_closed_sets,
    visit_compositions, visit_domino_pairs, visit_lacings, visit_matchings, visit_peakless,
    visit_staircases, visit_weighted_paths, LacingMode,
};
use crate::parallel::{map_collect, Execution};
use crate::series::{composition_gf_coeffs, PartSet};

pub const SUITES: &[&str] =
    &["triangle", "bijections", "fibonacci", "diagonal", "asymptotics", "bounds", "lacing", "enumeration"];

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Check {
    pub id: String,
    pub status: Status,
    pub detail: String,
}

impl Check {
    pub fn new(id: impl Into<String>, passed: bool, detail: impl Into<String>) -> Self {
        let status = if passed { Status::Pass } else { Status::Fail };
        Check { id: id.into(), status, detail: detail.into() }
    }

    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }
}

impl fmt::Display for Check {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let status = if self.passed() { "pass" } else { "FAIL" };
        write!(f, "{}: {status}", self.id)?;
        if !self.detail.is_empty() {
            write!(f, " ({})", self.detail)?;
        }
        Ok(())
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct VerificationReport {
    pub suite: String,
    pub checks: Vec<Check>,
    pub overall: bool,
}

impl VerificationReport {
    fn new(suite: &str, checks: Vec<Check>) -> Self {
        let overall = checks.iter().all(Check::passed);
        VerificationReport { suite: suite.to_string(), checks, overall }
    }

    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| !c.passed())
    }
}

impl fmt::Display for VerificationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for c in &self.checks {
            writeln!(f, "{c}")?;
        }
        let passed = self.checks.iter().filter(|c| c.passed()).count();
        write!(
            f,
            "suite {}: {passed}/{} checks passed, overall {}",
            self.suite,
            self.checks.len(),
            if self.overall { "pass" } else { "FAIL" }
        )
    }
}

type Job = Box<dyn FnOnce() -> Vec<Check> + Send>;

fn job(f: impl FnOnce() -> Vec<Check> + Send + 'static) -> Job {
    Box::new(f)
}

fn run_jobs(jobs: Vec<Job>, exec: Execution) -> Vec<Check> {
    map_collect(jobs, exec, |j| j()).into_iter().flatten().collect()
}

/// Runs one suite (or `all`) with size parameter `max`.
pub fn run_suite(suite: &str, max: usize, exec: Execution) -> Result<VerificationReport> {
    if suite == "all" {
        let mut checks = Vec::new();
        for s in SUITES {
            let r = run_suite(s, max, exec)?;
            checks.extend(r.checks.into_iter().map(|mut c| {
                c.id = format!("{s}/{}", c.id);
                c
            }));
        }
        return Ok(VerificationReport::new("all", checks));
    }
    let checks = match suite {
        "triangle" => run_jobs(triangle_jobs(max), exec),
        "bijections" => bijection_checks(max, exec),
        "fibonacci" => fibonacci_checks(max),
        "diagonal" => diagonal_checks(max),
        "asymptotics" => asymptotic_checks(max)?,
        "bounds" => run_jobs(bound_jobs(max), exec),
        "lacing" => run_jobs(lacing_jobs(max), exec),
        "enumeration" => run_jobs(enumeration_jobs(max), exec),
        _ => return Err(Error::invalid(format!("unknown suite {suite}"))),
    };
    Ok(VerificationReport::new(suite, checks))
}

fn show(v: &[BigCount]) -> String {
    v.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",")
}

fn triangle_jobs(max: usize) -> Vec<Job> {
    let mut jobs: Vec<Job> = Vec::new();
    let table = a_table(max);
    let gf = a_table_from_gf(max);

    jobs.push(job(|| {
        let t = a_table(8);
        let expected: [&[u64]; 5] =
            [&[1], &[1, 1, 1], &[1, 2, 2, 2, 1], &[1, 3, 4, 5, 4, 3, 1], &[1, 4, 7, 10, 11, 10, 7, 4, 1]];
        let got = t.rows();
        let ok = got.len() == 5
            && got.iter().zip(expected).all(|(r, e)| r.iter().cloned().eq(e.iter().map(|&v| BigCount::from(v))));
        vec![Check::new("a-triangle rows up to sum 8", ok, got.iter().map(|r| show(r)).collect::<Vec<_>>().join(" / "))]
    }));

    for s in 0..=max {
        let (table, gf) = (table.clone(), gf.clone());
        jobs.push(job(move || {
            let mut bad = Vec::new();
            let with_paths = s <= SIGNED_PATH_LIMIT.min(20);
            for k in 0..=s {
                let n = s - k;
                let t = table.get(k, n).cloned().unwrap_or_default();
                let mut values = vec![a_long(k, n), a_binomial(k, n), gf.get(k, n).cloned().unwrap_or_default()];
                if with_paths {
                    values.push(signed_step_path_count(k, n).unwrap_or_default());
                }
                if values.iter().any(|v| *v != t) {
                    bad.push(format!("({k},{n}): table {t}, others {}", show(&values)));
                }
            }
            let ways = if with_paths { "five-way" } else { "four-way" };
            vec![Check::new(format!("{ways} agreement, k + n = {s}"), bad.is_empty(), bad.join("; "))]
        }));
    }

    let t2 = table.clone();
    jobs.push(job(move || {
        let z = z_table(t2.max_sum());
        let mut bad = Vec::new();
        for m in (0..=t2.max_sum()).step_by(2) {
            for k in 0..=m {
                if z.get(m, k) != t2.get(m - k, k) {
                    bad.push(format!("z({m},{k})"));
                }
            }
        }
        let half = t2.max_sum() / 2;
        for k in 0..=half {
            for n in -(k as i64)..=k as i64 {
                let (i, j) = ((k as i64 - n) as usize, (k as i64 + n) as usize);
                if i + j <= t2.max_sum() && Some(&m_count(k, n)) != t2.get(i, j) {
                    bad.push(format!("m({k},{n})"));
                }
            }
        }
        vec![Check::new("index identities z(2n,k) = a(2n-k,k), m(k,n) = a(k-n,k+n)", bad.is_empty(), bad.join(", "))]
    }));

    let t3 = table.clone();
    jobs.push(job(move || {
        let max = t3.max_sum();
        let b = b_table(max);
        let b_gf = b_table_from_gf(max);
        let r = r_diag_sequence(max / 2).unwrap_or_default();
        let mut bad = Vec::new();
        for n in 0..=max / 2 {
            if b.get(n, n) != t3.get(n, n) || r.get(n) != t3.get(n, n) {
                bad.push(format!("n = {n}"));
            }
        }
        vec![
            Check::new("b(n,n) = a(n,n) = r(n)", bad.is_empty(), bad.join(", ")),
            Check::new("b recurrence = b generating function", b == b_gf, ""),
            Check::new("a rows unimodal", rows_unimodal(&t3), ""),
        ]
    }));

    jobs.push(job(point_value_checks));
    jobs
}

/// The individual values quoted for each family.
pub fn point_value_checks() -> Vec<Check> {
    let z = z_table(8);
    let b = b_table(8);
    let r3 = r_diag_sequence(3).map(|v| v[3].clone()).unwrap_or_default();
    let cases: Vec<(&str, BigCount, u64)> = vec![
        ("a(2,4)", a_binomial(2, 4), 4),
        ("d(3,5)", d_count(3, 5), 10),
        ("m(3,1)", m_count(3, 1), 4),
        ("s(3,3)", s_count(3, 3), 5),
        ("r(3)", r3, 5),
        ("z(8,3)", z.get(8, 3).cloned().unwrap_or_default(), 10),
        ("b(4,4)", b.get(4, 4).cloned().unwrap_or_default(), 11),
        ("b(3,4)", b.get(3, 4).cloned().unwrap_or_default(), 5),
    ];
    let mut checks: Vec<Check> = cases
        .into_iter()
        .map(|(id, got, want)| Check::new(format!("{id} = {want}"), got == BigCount::from(want), format!("got {got}")))
        .collect();
    let z4 = z_table(4).rows()[4].clone();
    checks.push(Check::new(
        "z(4,.) = 1,2,2,2,1",
        z4.iter().cloned().eq([1u64, 2, 2, 2, 1].map(BigCount::from)),
        show(&z4),
    ));
    checks
}

fn fibonacci_checks(max: usize) -> Vec<Check> {
    let a = a_table(2 * max);
    let mut checks = Vec::new();
    let mut bad = Vec::new();
    for (m, row) in a.rows().iter().enumerate() {
        // the row of sum 2m is the (m+1)-th row and sums to F(2m + 2)
        let sum: BigCount = row.iter().sum();
        if sum != fibonacci(2 * m + 2) {
            bad.push(format!("row {}: {sum}", m + 1));
        }
    }
    checks.push(Check::new(
        format!("a-triangle row m sums to F(2m), m = 1..={}", max + 1),
        bad.is_empty(),
        bad.join(", "),
    ));
    let z = z_table(max);
    let sums: Vec<BigCount> = z.rows().iter().map(|r| r.iter().sum()).collect();
    let ok = sums.iter().enumerate().all(|(m, s)| *s == fibonacci(m + 2));
    let head: Vec<BigCount> = sums.iter().take(8).cloned().collect();
    checks.push(Check::new(format!("z-triangle row sums are Fibonacci, rows 0..={max}"), ok, format!("{}, ...", show(&head))));
    let comp = composition_gf_coeffs(&PartSet::ones_and_twos(), max).map(|s| s.into_coeffs());
    let ok = comp.is_ok_and(|c| c.iter().enumerate().all(|(n, v)| v.magnitude() == &fibonacci(n + 1)));
    checks.push(Check::new(format!("{{1,2}}-compositions of n number F(n+1), n <= {max}"), ok, ""));
    checks
}

fn diagonal_checks(max: usize) -> Vec<Check> {
    let r = match r_diag_sequence(max) {
        Ok(r) => r,
        Err(e) => return vec![Check::new("diagonal recurrence", false, e.to_string())],
    };
    let gf = r_diag_from_gf(max);
    let table = a_table(2 * max);
    let mut bad = Vec::new();
    for n in 0..=max {
        let binom = a_diag_binomial(n);
        let from_gf = gf.as_ref().ok().and_then(|g| g.get(n));
        if r[n] != binom || from_gf != Some(&r[n]) || table.get(n, n) != Some(&r[n]) {
            bad.push(n.to_string());
        }
    }
    let mut checks = vec![Check::new(
        format!("r(n) recurrence = binomial sum = series coefficient = a(n,n), n <= {max}"),
        bad.is_empty(),
        if bad.is_empty() { String::new() } else { format!("mismatch at n = {}", bad.join(",")) },
    )];
    if max >= 5 {
        checks.push(Check::new("r(5) = 26", r[5] == BigCount::from(26u32), format!("got {}", r[5])));
    }
    checks
}

/// Doubling sequence used for the error-decay check.
pub fn asymptotic_sample_points(max: usize) -> Vec<usize> {
    std::iter::successors(Some(100usize), |n| Some(n * 2)).take_while(|&n| n <= max).collect()
}

fn asymptotic_checks(max: usize) -> Result<Vec<Check>> {
    let top = max.max(4);
    let r = r_diag_sequence(top)?;
    let at4 = asymptotic_estimate_for(4, &r[4]);
    let mut checks = vec![Check::new(
        "relative error at n = 4 below 0.06",
        at4.relative_error < 0.06,
        format!("{:.5}", at4.relative_error),
    )];
    let points = asymptotic_sample_points(top);
    if points.len() >= 2 {
        let errs: Vec<f64> = points.iter().map(|&n| asymptotic_estimate_for(n, &r[n]).relative_error).collect();
        let detail = points
            .iter()
            .zip(&errs)
            .map(|(n, e)| format!("n={n}: {e:.3e}"))
            .collect::<Vec<_>>()
            .join(", ");
        let decreasing = errs.windows(2).all(|w| w[1] < w[0]);
        checks.push(Check::new("relative error decreases along doubling n", decreasing, detail));
        let scaled: Vec<f64> = points.iter().zip(&errs).map(|(&n, e)| n as f64 * e).collect();
        let ratios: Vec<f64> = scaled.windows(2).map(|w| w[1] / w[0]).collect();
        let bounded = ratios.iter().all(|q| (0.8..=1.25).contains(q));
        let detail = ratios.iter().map(|q| format!("{q:.4}")).collect::<Vec<_>>().join(", ");
        checks.push(Check::new("n * relative error ratios within [0.8, 1.25]", bounded, detail));
    }
    Ok(checks)
}

fn bound_jobs(max: usize) -> Vec<Job> {
    let mut jobs: Vec<Job> = vec![job(|| {
        let a = a_binomial(40, 40);
        let three = BigUint::from(3u32).pow(39);
        vec![Check::new("a(40,40) < 3^39", a < three, format!("{a} < {three}"))]
    })];
    jobs.push(job(|| vec![Check::new("a(0,0) = 1", a_binomial(0, 0).is_one(), "")]));
    for s in 2..=max {
        jobs.push(job(move || {
            let fib_bad: Vec<usize> = (0..=s).filter(|&k| !fib_bound_check(k, s - k)).collect();
            let binet_bad: Vec<usize> = (0..=s).filter(|&k| !binet_bound_check(k, s - k)).collect();
            vec![Check::new(
                format!("a(k,n) <= F(k+n) and a(k,n) < phi^(k+n)/sqrt 5, k + n = {s}"),
                fib_bad.is_empty() && binet_bad.is_empty(),
                if fib_bad.is_empty() && binet_bad.is_empty() {
                    String::new()
                } else {
                    format!("fails at k in {fib_bad:?} / {binet_bad:?}")
                },
            )]
        }));
    }
    jobs
}

fn factorial(n: usize) -> BigCount {
    (1..=n).fold(BigCount::one(), |acc, i| acc * i)
}

fn count_lacings(k: usize, n: usize, mode: LacingMode) -> Result<BigCount> {
    count_visited(|sink| visit_lacings(k, n, mode, sink)).map(BigCount::from)
}

fn lacing_jobs(max: usize) -> Vec<Job> {
    let mut jobs: Vec<Job> = Vec::new();
    let n_top = if max >= 10 { 5 } else { 4 };
    for n in 2..=n_top {
        jobs.push(job(move || {
            let a = a_binomial(n, n);
            let f = factorial(n - 1);
            let formula = &f * &f * &a;
            let right = count_lacings(n, n, LacingMode::Right);
            let nsc = count_lacings(n, n, LacingMode::NonSelfCrossing);
            vec![
                Check::new(
                    format!("right lacings ({n},{n}) = ((n-1)!)^2 a(n,n)"),
                    right.as_ref().is_ok_and(|c| *c == formula),
                    format!("brute force {}, formula {formula}", right.map(|c| c.to_string()).unwrap_or_else(|e| e.to_string())),
                ),
                Check::new(
                    format!("non self-crossing lacings ({n},{n}) = a(n,n)"),
                    nsc.as_ref().is_ok_and(|c| *c == a),
                    format!("brute force {}, a = {a}", nsc.map(|c| c.to_string()).unwrap_or_else(|e| e.to_string())),
                ),
            ]
        }));
    }
    let b = b_table(12);
    let cap = max.clamp(5, 8);
    for (k, n) in [(1usize, 2usize), (2, 3), (2, 4), (3, 4), (3, 5), (4, 5)] {
        if k + n > cap {
            continue;
        }
        let bkn = b.get(k, n).cloned().unwrap_or_default();
        jobs.push(job(move || {
            let nsc = count_lacings(k, n, LacingMode::NonSelfCrossing).unwrap_or_default();
            let right = count_lacings(k, n, LacingMode::Right).unwrap_or_default();
            let small = factorial(k - 1) * factorial(n - 1) * &bkn;
            let large = factorial(k) * factorial(n) * &bkn;
            vec![
                Check::new(
                    format!("defective shoe ({k},{n}): non self-crossing lacings = b(k,n)"),
                    nsc == bkn,
                    format!("brute force {nsc}, b = {bkn}"),
                ),
                Check::new(
                    format!("defective shoe ({k},{n}): right lacings = (k-1)!(n-1)! b(k,n)"),
                    right == small,
                    format!(
                        "brute force {right}; (k-1)!(n-1)! b = {small}; k! n! b = {large}, which counts lacings \
                         from any left hole to any right hole instead"
                    ),
                ),
            ]
        }));
    }
    jobs
}

fn bijection_checks(max: usize, exec: Execution) -> Vec<Check> {
    let mut checks: Vec<Check> = standard_reports(max, exec)
        .into_iter()
        .map(|r: BijectionReport| Check::new(r.name.clone(), r.passed(), r.to_string()))
        .collect();
    let anchors = [
        ("closed-set-to-012", "00001110111000", "0+0+2+1+2+1+0"),
        ("s1-to-s2", "1+2+2+1+2+1+2", "1+5+3+3"),
        ("s1-to-domino", "1+2+2+1+2+1+2", "VHHHHVHHVHH"),
        ("motzkin-to-chords", "DHDUUHDDUU", "10:4-8,5-7/9>3,10>1"),
        ("staircase-to-compositions", "H2,V2,H2,V1,H1,V2,H1,V1,H2,V2", "2+2+1+1+2|2+1+2+1+2"),
    ];
    for (name, input, want) in anchors {
        let got = apply_named(name, input, false);
        checks.push(Check::new(
            format!("{name}: {input} -> {want}"),
            got.as_deref() == Ok(want),
            format!("{got:?}"),
        ));
    }
    checks
}

fn cell_check(id: String, counted: Result<u64>, expected: BigCount) -> Check {
    match counted {
        Ok(c) => Check::new(id, BigCount::from(c) == expected, format!("enumerated {c}, counted {expected}")),
        Err(e) => Check::new(id, false, e.to_string()),
    }
}

fn enumeration_jobs(max: usize) -> Vec<Job> {
    let max = max.min(16);
    let mut jobs: Vec<Job> = Vec::new();
    let a = a_table(max);
    let b = b_table(max);
    let z = z_table(max);
    for s in 0..=max {
        let (a, b) = (a.clone(), b.clone());
        jobs.push(job(move || {
            let mut out = Vec::new();
            for k in 0..=s {
                let n = s - k;
                let av = a.get(k, n).cloned().unwrap_or_default();
                out.push(cell_check(format!("matchings ({k},{n})"), count_visited(|f| visit_matchings(k, n, f)), av.clone()));
                out.push(cell_check(format!("domino pairs ({k},{n})"), count_visited(|f| visit_domino_pairs(k, n, f)), d_count(k, n)));
                let bv = b.get(k, n).cloned().unwrap_or_default();
                out.push(cell_check(format!("staircases ({k},{n})"), count_visited(|f| visit_staircases(k, n, f)), bv.clone()));
                out.push(cell_check(format!("step paths ({k},{n})"), count_visited(|f| visit_b_step_paths(k, n, f)), bv));
            }
            out
        }));
    }
    let zc = z.clone();
    jobs.push(job(move || {
        let mut out = Vec::new();
        for m in 0..=zc.max_sum() {
            for k in 0..=m {
                let want = zc.get(m, k).cloned().unwrap_or_default();
                out.push(cell_check(format!("closed sets Z_{m} size {k}"), count_visited(|f| visit_closed_sets(m, Some(k), f)), want));
            }
        }
        out
    }));
    jobs.push(job(move || {
        let mut out = Vec::new();
        for k in 0..=max {
            for e in -(k as i64)..=k as i64 {
                out.push(cell_check(format!("peakless paths ({k},{e})"), count_visited(|f| visit_peakless(k, e, f)), m_count(k, e)));
            }
        }
        for n in 0..=max / 2 {
            for k in 0..=2 * n {
                out.push(cell_check(format!("0-1-2 sums ({n},{k})"), count_visited(|f| visit_012(n, k, f)), s_count(n, k)));
            }
        }
        out
    }));
    jobs.push(job(move || {
        let r = r_diag_sequence(max).unwrap_or_default();
        let mut out: Vec<Check> = (0..=max)
            .map(|c| cell_check(format!("weighted paths cost {c}"), count_visited(|f| visit_weighted_paths(c, f)), r[c].clone()))
            .collect();
        for parts in [PartSet::ones_and_twos(), PartSet::Odd, PartSet::AtLeastTwo] {
            let gf = composition_gf_coeffs(&parts, max).expect("valid part set");
            for n in 0..=max {
                let want = gf.coeff(n).magnitude().clone();
                out.push(cell_check(
                    format!("compositions {parts} of {n}"),
                    count_visited(|f| visit_compositions(&parts, n, None, f)),
                    want,
                ));
            }
        }
        out
    }));
    let chord_cap = (max / 2).min(8);
    for n in 0..=chord_cap {
        jobs.push(job(move || {
            vec![cell_check(format!("chord configurations n = {n}"), count_visited(|f| visit_chords(n, f)), a_binomial(n, n))]
        }));
    }
    let lace_cap = max.min(8);
    let bl = b.clone();
    jobs.push(job(move || {
        let mut out = Vec::new();
        for s in 2..=lace_cap {
            for k in 1..s {
                let n = s - k;
                if k > n {
                    continue;
                }
                let want = if k == n { a_binomial(n, n) } else { bl.get(k, n).cloned().unwrap_or_default() };
                out.push(cell_check(
                    format!("non self-crossing lacings ({k},{n})"),
                    count_visited(|f| visit_lacings(k, n, LacingMode::NonSelfCrossing, f)),
                    want,
                ));
            }
        }
        out
    }));
    jobs
}
