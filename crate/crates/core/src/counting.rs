//! Closed forms, recurrences and generating-function extraction for the
//! two-line matching numbers `a(k, n)` and their relatives.
//!
//! Notation used throughout:
//! - `a(k, n)`: noncrossing perfect matchings of `k` upper and `n` lower points;
//! - `b(k, n)`: configurations of adjacent-pair segments with equally many
//!   objects on both lines;
//! - `z(m, k)`: `k`-element closed sets of the fence `Z_m`;
//! - `r(n) = a(n, n)`: the diagonal.

use std::collections::HashMap;

use num_bigint::{BigInt, BigUint, Sign};
use num_integer::{binomial, Integer};
use num_traits::{One, ToPrimitive, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::objects::composition::{enum_compositions, CompositionFilter};
use crate::series::{self, PartSet, TruncatedSeries, TruncatedSeries2};

/// Exact nonnegative count.
pub type BigCount = BigUint;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum TriangleKind {
    /// `a(k, n)` indexed by `(k, n)`, `k + n <= max_sum`.
    A,
    /// `b(k, n)` indexed by `(k, n)`, `k + n <= max_sum`.
    B,
    /// `z(m, k)` indexed by `(m, k)`, `k <= m <= max_sum`.
    Z,
}

/// Table of counts over a triangular index set. Cells outside the stored
/// region (negative indices, or beyond `max_sum`) read as zero.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TriangleTable {
    kind: TriangleKind,
    max_sum: usize,
    cells: Vec<Vec<BigCount>>,
}

impl TriangleTable {
    pub fn kind(&self) -> TriangleKind {
        self.kind
    }

    pub fn max_sum(&self) -> usize {
        self.max_sum
    }

    /// Stored entry, or `None` outside the index set.
    pub fn get(&self, i: usize, j: usize) -> Option<&BigCount> {
        self.cells.get(i)?.get(j)
    }

    /// Entry with signed indices; zero for anything not stored.
    pub fn value(&self, i: i64, j: i64) -> BigCount {
        if i < 0 || j < 0 {
            return BigCount::zero();
        }
        self.get(i as usize, j as usize).cloned().unwrap_or_default()
    }

    /// Rows in display order.
    ///
    /// - `A`: one row per even sum `2m`, reading `a(2m, 0), a(2m-1, 1), ..., a(0, 2m)`.
    /// - `B`: one row per sum `s`, reading `b(0, s), b(1, s-1), ..., b(s, 0)`.
    /// - `Z`: row `m` is `z(m, 0), ..., z(m, m)`.
    pub fn rows(&self) -> Vec<Vec<BigCount>> {
        match self.kind {
            TriangleKind::A => (0..=self.max_sum)
                .step_by(2)
                .map(|s| (0..=s).rev().map(|k| self.cells[k][s - k].clone()).collect())
                .collect(),
            TriangleKind::B => (0..=self.max_sum)
                .map(|s| (0..=s).map(|k| self.cells[k][s - k].clone()).collect())
                .collect(),
            TriangleKind::Z => self.cells.clone(),
        }
    }

    /// The rows concatenated, as read into a flat sequence.
    pub fn flatten(&self) -> Vec<BigCount> {
        self.rows().into_iter().flatten().collect()
    }

    fn empty(kind: TriangleKind, max_sum: usize) -> Self {
        let cells = match kind {
            TriangleKind::A | TriangleKind::B => {
                (0..=max_sum).map(|i| vec![BigCount::zero(); max_sum - i + 1]).collect()
            }
            TriangleKind::Z => (0..=max_sum).map(|m| vec![BigCount::zero(); m + 1]).collect(),
        };
        TriangleTable { kind, max_sum, cells }
    }
}

fn at(cells: &[Vec<BigCount>], i: i64, j: i64) -> &BigCount {
    static ZERO: std::sync::OnceLock<BigCount> = std::sync::OnceLock::new();
    if i < 0 || j < 0 {
        return ZERO.get_or_init(BigCount::zero);
    }
    cells
        .get(i as usize)
        .and_then(|row| row.get(j as usize))
        .unwrap_or_else(|| ZERO.get_or_init(BigCount::zero))
}

/// `a(k, n)` for `k + n <= max_sum` from
/// `a(k+1, n+1) = a(k, n) + a(k-1, n+1) + a(k+1, n-1) - a(k-1, n-1)`,
/// which also covers the boundary once negative indices read as zero.
pub fn a_table(max_sum: usize) -> TriangleTable {
    let mut t = TriangleTable::empty(TriangleKind::A, max_sum);
    t.cells[0][0] = BigCount::one();
    for s in 1..=max_sum {
        for k in 0..=s {
            let n = s - k;
            if s % 2 == 1 {
                continue;
            }
            let (ki, ni) = (k as i64, n as i64);
            let plus = at(&t.cells, ki - 1, ni - 1)
                + at(&t.cells, ki - 2, ni)
                + at(&t.cells, ki, ni - 2);
            let value = plus - at(&t.cells, ki - 2, ni - 2);
            t.cells[k][n] = value;
        }
    }
    t
}

/// Memoized evaluation of
/// `a(k, n) = a(k-2, n) + a(k-1, n-1) + a(k-1, n-3) + ...`.
#[derive(Debug, Default)]
pub struct LongRecurrence {
    memo: HashMap<(usize, usize), BigCount>,
}

impl LongRecurrence {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn get(&mut self, k: usize, n: usize) -> BigCount {
        if (k + n) % 2 == 1 {
            return BigCount::zero();
        }
        if k == 0 {
            // only adjacent pairs on the lower line
            return BigCount::one();
        }
        if let Some(v) = self.memo.get(&(k, n)) {
            return v.clone();
        }
        let mut total = if k >= 2 { self.get(k - 2, n) } else { BigCount::zero() };
        let mut rest = n as i64 - 1;
        while rest >= 0 {
            total += self.get(k - 1, rest as usize);
            rest -= 2;
        }
        self.memo.insert((k, n), total.clone());
        total
    }
}

pub fn a_long(k: usize, n: usize) -> BigCount {
    LongRecurrence::new().get(k, n)
}

fn binom(n: usize, k: usize) -> BigCount {
    if k > n {
        return BigCount::zero();
    }
    binomial(BigCount::from(n), BigCount::from(k))
}

/// `sum_j C((k+j)/2, j) C((n+j)/2, j)` over `j` of the parity of `k`.
pub fn a_binomial(k: usize, n: usize) -> BigCount {
    if (k + n) % 2 == 1 {
        return BigCount::zero();
    }
    (k % 2..=k.min(n))
        .step_by(2)
        .map(|j| binom((k + j) / 2, j) * binom((n + j) / 2, j))
        .sum()
}

/// `a(n, n) = sum_{l <= n/2} C(n-l, l)^2`.
pub fn a_diag_binomial(n: usize) -> BigCount {
    (0..=n / 2)
        .map(|l| {
            let c = binom(n - l, l);
            &c * &c
        })
        .sum()
}

/// Denominator `(1 - x^2)(1 - y^2) - xy` of the generating function of `a`.
pub fn a_gf_denominator(x_order: usize, y_order: usize) -> TruncatedSeries2 {
    TruncatedSeries2::from_terms(
        &[(0, 0, 1), (2, 0, -1), (0, 2, -1), (2, 2, 1), (1, 1, -1)],
        x_order,
        y_order,
    )
}

/// Denominator `1 - (xy + x^2 y + x y^2 + x^2 y^2)` of `B(x, y) + 1`.
pub fn b_gf_denominator(x_order: usize, y_order: usize) -> TruncatedSeries2 {
    TruncatedSeries2::from_terms(
        &[(0, 0, 1), (1, 1, -1), (2, 1, -1), (1, 2, -1), (2, 2, -1)],
        x_order,
        y_order,
    )
}

fn to_count(v: &BigInt) -> BigCount {
    match v.sign() {
        Sign::Minus => panic!("negative count {v}"),
        _ => v.magnitude().clone(),
    }
}

/// `a(k, n)` for `k + n <= max_sum`, extracted from the bivariate
/// generating function.
pub fn a_table_from_gf(max_sum: usize) -> TriangleTable {
    let coeffs = series::bivariate_inverse_coeffs(&a_gf_denominator(max_sum, max_sum), max_sum, max_sum)
        .expect("unit constant term");
    table_from_series(TriangleKind::A, max_sum, &coeffs)
}

/// `b(k, n)` for `k + n <= max_sum`, extracted from `B(x, y)`.
pub fn b_table_from_gf(max_sum: usize) -> TriangleTable {
    let coeffs = series::bivariate_inverse_coeffs(&b_gf_denominator(max_sum, max_sum), max_sum, max_sum)
        .expect("unit constant term");
    // B = 1/(1 - ...) - 1 only differs at the origin, where b(0, 0) = 1 is
    // set by convention; the reciprocal already has 1 there.
    table_from_series(TriangleKind::B, max_sum, &coeffs)
}

fn table_from_series(kind: TriangleKind, max_sum: usize, coeffs: &TruncatedSeries2) -> TriangleTable {
    let mut t = TriangleTable::empty(kind, max_sum);
    for k in 0..=max_sum {
        for n in 0..=max_sum - k {
            t.cells[k][n] = to_count(coeffs.coeff(k, n));
        }
    }
    t
}

/// `b(k, n) = b(k-1, n-1) + b(k-1, n-2) + b(k-2, n-1) + b(k-2, n-2)` with
/// `b(0, 0) = 1` and `b = 0` whenever one index is nonpositive.
pub fn b_table(max_sum: usize) -> TriangleTable {
    let mut t = TriangleTable::empty(TriangleKind::B, max_sum);
    t.cells[0][0] = BigCount::one();
    for s in 2..=max_sum {
        for k in 1..s {
            let n = s - k;
            let (ki, ni) = (k as i64, n as i64);
            let v = at(&t.cells, ki - 1, ni - 1)
                + at(&t.cells, ki - 1, ni - 2)
                + at(&t.cells, ki - 2, ni - 1)
                + at(&t.cells, ki - 2, ni - 2);
            t.cells[k][n] = v;
        }
    }
    t
}

/// `z(m, k)` for `m <= max_row` from the fence recurrences
/// `z(2n, k) = z(2n-1, k) + z(2n-2, k-2)` and
/// `z(2n+1, k) = z(2n, k-1) + z(2n-1, k)`, seeded with rows 0 and 1.
pub fn z_table(max_row: usize) -> TriangleTable {
    let mut t = TriangleTable::empty(TriangleKind::Z, max_row);
    t.cells[0][0] = BigCount::one();
    if max_row >= 1 {
        t.cells[1] = vec![BigCount::one(), BigCount::one()];
    }
    for m in 2..=max_row {
        let mi = m as i64;
        for k in 0..=m {
            let ki = k as i64;
            t.cells[m][k] = if m % 2 == 0 {
                at(&t.cells, mi - 1, ki) + at(&t.cells, mi - 2, ki - 2)
            } else {
                at(&t.cells, mi - 1, ki - 1) + at(&t.cells, mi - 2, ki)
            };
        }
    }
    t
}

/// `F(0) = 0`, `F(1) = F(2) = 1`.
pub fn fibonacci(m: usize) -> BigCount {
    let (mut a, mut b) = (BigCount::zero(), BigCount::one());
    for _ in 0..m {
        let next = &a + &b;
        a = std::mem::replace(&mut b, next);
    }
    a
}

/// `r(0..=n_max)` from
/// `n r(n) = (2n-1) r(n-1) + (n-1) r(n-2) + (2n-3) r(n-3) - (n-2) r(n-4)`.
pub fn r_diag_sequence(n_max: usize) -> Result<Vec<BigCount>> {
    let seeds = [1u32, 1, 2, 5];
    let mut r: Vec<BigInt> = seeds.iter().take(n_max + 1).map(|&s| BigInt::from(s)).collect();
    for n in 4..=n_max {
        let ni = n as i64;
        let rhs = BigInt::from(2 * ni - 1) * &r[n - 1] + BigInt::from(ni - 1) * &r[n - 2]
            + BigInt::from(2 * ni - 3) * &r[n - 3]
            - BigInt::from(ni - 2) * &r[n - 4];
        let (q, rem) = rhs.div_rem(&BigInt::from(ni));
        if !rem.is_zero() {
            return Err(Error::NonIntegralRecurrenceStep { n });
        }
        r.push(q);
    }
    Ok(r.iter().map(to_count).collect())
}

pub fn r_diag(n: usize) -> Result<BigCount> {
    Ok(r_diag_sequence(n)?.pop().expect("nonempty"))
}

/// Coefficients of `1 / sqrt(1 - 2x - x^2 - 2x^3 + x^4)` up to `order`.
pub fn r_diag_from_gf(order: usize) -> Result<Vec<BigCount>> {
    let p = TruncatedSeries::from_i64(&[1, -2, -1, -2, 1], order);
    Ok(series::inv_sqrt_trunc(&p, order)?.coeffs().iter().map(to_count).collect())
}

/// Main term of the diagonal asymptotics compared with the exact value.
#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct AsymptoticEstimate {
    pub n: usize,
    /// `ln(phi^(2n+2) / (2 * 5^(1/4) * sqrt(pi n)))`.
    pub estimate_log: f64,
    /// `ln r(n)`.
    pub exact_log: f64,
    /// `|estimate / r(n) - 1|`.
    pub relative_error: f64,
}

pub fn golden_ratio() -> f64 {
    (1.0 + 5f64.sqrt()) / 2.0
}

pub fn darboux_main_term_log(n: usize) -> f64 {
    assert!(n >= 1);
    let n = n as f64;
    (2.0 * n + 2.0) * golden_ratio().ln()
        - (2.0 * 5f64.powf(0.25) * (std::f64::consts::PI * n).sqrt()).ln()
}

/// Natural logarithm of a positive big integer, from its leading 64 bits.
pub fn ln_big(x: &BigCount) -> f64 {
    assert!(!x.is_zero(), "ln of zero");
    let bits = x.bits();
    if bits <= 64 {
        return (x.to_u64().expect("fits") as f64).ln();
    }
    let shift = bits - 64;
    let top = (x >> shift).to_u64().expect("64 bits");
    (top as f64).ln() + shift as f64 * std::f64::consts::LN_2
}

/// Estimate for a known exact value `r(n)`.
pub fn asymptotic_estimate_for(n: usize, exact: &BigCount) -> AsymptoticEstimate {
    let estimate_log = darboux_main_term_log(n);
    let exact_log = ln_big(exact);
    AsymptoticEstimate {
        n,
        estimate_log,
        exact_log,
        relative_error: (estimate_log - exact_log).exp_m1().abs(),
    }
}

pub fn asymptotic_estimate(n: usize) -> Result<AsymptoticEstimate> {
    if n == 0 {
        return Err(Error::invalid("asymptotic estimate needs n >= 1"));
    }
    Ok(asymptotic_estimate_for(n, &r_diag(n)?))
}

/// `a(k, n) <= F(k + n)`. At `k + n = 0` the bound does not apply and the
/// check reduces to `a(0, 0) = 1`.
pub fn fib_bound_check(k: usize, n: usize) -> bool {
    let a = a_binomial(k, n);
    if k + n == 0 {
        return a.is_one();
    }
    a <= fibonacci(k + n)
}

/// The Binet-form bound `a(k, n) < phi^(k+n) / sqrt(5)`, checked in the log
/// domain. Only meaningful for `k + n >= 2`.
pub fn binet_bound_check(k: usize, n: usize) -> bool {
    let a = a_binomial(k, n);
    if a.is_zero() {
        return true;
    }
    let rhs = (k + n) as f64 * golden_ratio().ln() - 0.5 * 5f64.ln();
    ln_big(&a) < rhs
}

pub const SIGNED_PATH_LIMIT: usize = 24;

/// Signed count of lattice paths from the origin to `(k, n)` with steps
/// `(2,0)`, `(0,2)`, `(1,1)` and `(2,2)`, each `(2,2)` step contributing a
/// factor of -1. Every path is visited individually.
pub fn signed_step_path_count(k: usize, n: usize) -> Result<BigCount> {
    if k + n > SIGNED_PATH_LIMIT {
        return Err(Error::too_large(
            "signed step paths",
            format!("k + n = {} > {SIGNED_PATH_LIMIT}", k + n),
        ));
    }
    fn walk(x: usize, y: usize, negative: bool, total: &mut i64) {
        if x == 0 && y == 0 {
            *total += if negative { -1 } else { 1 };
            return;
        }
        if x >= 2 {
            walk(x - 2, y, negative, total);
        }
        if y >= 2 {
            walk(x, y - 2, negative, total);
        }
        if x >= 1 && y >= 1 {
            walk(x - 1, y - 1, negative, total);
        }
        if x >= 2 && y >= 2 {
            walk(x - 2, y - 2, !negative, total);
        }
    }
    let mut total = 0i64;
    walk(k, n, false, &mut total);
    assert!(total >= 0, "signed path sum is negative");
    Ok(BigCount::from(total as u64))
}

pub const COMPOSITION_IDENTITY_LIMIT: usize = 20;

/// Checks that `{1,2}`-compositions of `n` with `ell` twos,
/// `{2,3,...}`-compositions of `n + 2` with `ell + 1` parts and
/// `C(n - ell, ell)` all agree, by enumeration.
pub fn composition_identity_check(n: usize, ell: usize) -> Result<bool> {
    if n > COMPOSITION_IDENTITY_LIMIT {
        return Err(Error::too_large(
            "composition identity",
            format!("n = {n} > {COMPOSITION_IDENTITY_LIMIT}"),
        ));
    }
    let twos = enum_compositions(
        &PartSet::ones_and_twos(),
        n,
        Some(CompositionFilter::PartCount { part: 2, count: ell }),
    )?
    .len();
    let summands = enum_compositions(
        &PartSet::AtLeastTwo,
        n + 2,
        Some(CompositionFilter::Summands(ell + 1)),
    )?
    .len();
    let closed = if ell <= n { binom(n - ell, ell) } else { BigCount::zero() };
    Ok(BigCount::from(twos) == closed && BigCount::from(summands) == closed)
}

/// `d(k, n)`: pairs of domino tilings of `2 x k` and `2 x n` with the same
/// number of vertical dominoes, from per-width tiling counts.
pub fn d_count(k: usize, n: usize) -> BigCount {
    // t[w][j]: tilings of 2 x w with j vertical dominoes
    let w_max = k.max(n);
    let mut t = vec![vec![BigCount::zero(); w_max + 1]; w_max + 1];
    t[0][0] = BigCount::one();
    for w in 1..=w_max {
        for j in 0..=w {
            let mut v = BigCount::zero();
            if j >= 1 {
                v += &t[w - 1][j - 1];
            }
            if w >= 2 {
                v += &t[w - 2][j];
            }
            t[w][j] = v;
        }
    }
    (0..=k.min(n)).map(|j| &t[k][j] * &t[n][j]).sum()
}

/// `m(k, n)`: peakless Motzkin paths of length `k` ending at height `n`
/// (no floor), by a transfer over (height, previous step was up).
pub fn m_count(k: usize, n: i64) -> BigCount {
    let width = 2 * k + 1;
    let off = k as i64;
    // [height][last_up]
    let mut cur = vec![[BigCount::zero(), BigCount::zero()]; width];
    cur[k][0] = BigCount::one();
    for _ in 0..k {
        let mut next = vec![[BigCount::zero(), BigCount::zero()]; width];
        for h in 0..width {
            for last_up in 0..2 {
                let c = &cur[h][last_up];
                if c.is_zero() {
                    continue;
                }
                if h + 1 < width {
                    next[h + 1][1] += c;
                }
                next[h][0] += c;
                if h >= 1 && last_up == 0 {
                    next[h - 1][0] += c;
                }
            }
        }
        cur = next;
    }
    let idx = n + off;
    if idx < 0 || idx >= width as i64 {
        return BigCount::zero();
    }
    let [x, y] = &cur[idx as usize];
    x + y
}

/// `s(n, k)`: 0-1-2 sums with `n` summands totalling `k`, no 2 followed by 0.
pub fn s_count(n: usize, k: usize) -> BigCount {
    // [total][last_was_two]
    let mut cur = vec![[BigCount::zero(), BigCount::zero()]; 2 * n + 1];
    cur[0][0] = BigCount::one();
    for _ in 0..n {
        let mut next = vec![[BigCount::zero(), BigCount::zero()]; 2 * n + 1];
        for total in 0..=2 * n {
            for last_two in 0..2 {
                let c = &cur[total][last_two];
                if c.is_zero() {
                    continue;
                }
                if last_two == 0 {
                    next[total][0] += c;
                }
                if total < 2 * n {
                    next[total + 1][0] += c;
                }
                if total + 2 <= 2 * n {
                    next[total + 2][1] += c;
                }
            }
        }
        cur = next;
    }
    if k > 2 * n {
        return BigCount::zero();
    }
    let [x, y] = &cur[k];
    x + y
}

/// Whether every even-sum row of the table weakly increases toward its center.
pub fn rows_unimodal(table: &TriangleTable) -> bool {
    table.rows().iter().all(|row| {
        let mid = row.len() / 2;
        row[..=mid].windows(2).all(|w| w[0] <= w[1]) && row[mid..].windows(2).all(|w| w[0] >= w[1])
    })
}
