//! Truncated formal power series with arbitrary-precision integer coefficients.
//!
//! Every series carries an explicit inclusive truncation order; coefficients
//! above it are treated as unknown and never read. Multiplication is
//! schoolbook, which is fast enough for the orders used here (a few hundred).

use std::collections::BTreeSet;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

/// Univariate series `c_0 + c_1 x + ... + c_N x^N`, with `N = order()`.
#[derive(Clone, Debug)]
pub struct TruncatedSeries {
    coeffs: Vec<BigInt>,
}

impl TruncatedSeries {
    /// Builds a series of the given order; missing coefficients are zero and
    /// coefficients past `order` are dropped.
    pub fn new(mut coeffs: Vec<BigInt>, order: usize) -> Self {
        coeffs.resize(order + 1, BigInt::zero());
        TruncatedSeries { coeffs }
    }

    pub fn from_i64(coeffs: &[i64], order: usize) -> Self {
        Self::new(coeffs.iter().map(|&c| BigInt::from(c)).collect(), order)
    }

    pub fn one(order: usize) -> Self {
        Self::from_i64(&[1], order)
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<BigInt> {
        self.coeffs
    }

    /// Coefficient of `x^degree`. Panics if `degree > order()`.
    pub fn coeff(&self, degree: usize) -> &BigInt {
        &self.coeffs[degree]
    }

    pub fn truncate(&self, order: usize) -> Self {
        assert!(order <= self.order(), "cannot raise the truncation order");
        TruncatedSeries { coeffs: self.coeffs[..=order].to_vec() }
    }
}

/// Equality up to the smaller of the two truncation orders.
impl PartialEq for TruncatedSeries {
    fn eq(&self, other: &Self) -> bool {
        let n = self.order().min(other.order());
        self.coeffs[..=n] == other.coeffs[..=n]
    }
}

impl fmt::Display for TruncatedSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.coeffs.iter().map(|c| c.to_string()).collect();
        write!(f, "[{}] + O(x^{})", parts.join(", "), self.order() + 1)
    }
}

/// Product of `p` and `q` truncated at `order`. Operand orders are clipped to
/// `order`; degrees a lower-order operand cannot supply are left zero.
pub fn mul_trunc(p: &TruncatedSeries, q: &TruncatedSeries, order: usize) -> TruncatedSeries {
    let mut out = vec![BigInt::zero(); order + 1];
    let pn = p.order().min(order);
    for (i, pi) in p.coeffs[..=pn].iter().enumerate() {
        if pi.is_zero() {
            continue;
        }
        let qn = q.order().min(order - i);
        for (j, qj) in q.coeffs[..=qn].iter().enumerate() {
            if !qj.is_zero() {
                out[i + j] += pi * qj;
            }
        }
    }
    TruncatedSeries { coeffs: out }
}

/// Reciprocal of a series with constant term 1, up to `order`.
pub fn inverse_trunc(p: &TruncatedSeries, order: usize) -> Result<TruncatedSeries> {
    if !p.coeffs[0].is_one() {
        return Err(Error::NonUnitConstantTerm);
    }
    let mut q: Vec<BigInt> = Vec::with_capacity(order + 1);
    q.push(BigInt::one());
    for d in 1..=order {
        let mut acc = BigInt::zero();
        for i in 1..=d.min(p.order()) {
            let pi = &p.coeffs[i];
            if !pi.is_zero() {
                acc += pi * &q[d - i];
            }
        }
        q.push(-acc);
    }
    Ok(TruncatedSeries { coeffs: q })
}

/// `1/sqrt(p)` for a series with constant term 1 whose inverse square root
/// has integer coefficients.
///
/// Computes `u = 1/p` and then the square root `s` of `u` from
/// `2 s_d = u_d - sum_{0<i<d} s_i s_{d-i}`. Any odd right-hand side means the
/// true result is not integral and is reported as
/// [`Error::NonIntegralCoefficient`].
pub fn inv_sqrt_trunc(p: &TruncatedSeries, order: usize) -> Result<TruncatedSeries> {
    let u = inverse_trunc(p, order)?;
    let two = BigInt::from(2);
    let mut s: Vec<BigInt> = Vec::with_capacity(order + 1);
    s.push(BigInt::one());
    for d in 1..=order {
        let mut rhs = u.coeffs[d].clone();
        for i in 1..d {
            rhs -= &s[i] * &s[d - i];
        }
        let (quot, rem) = rhs.div_rem(&two);
        if !rem.is_zero() {
            return Err(Error::NonIntegralCoefficient { degree: d });
        }
        s.push(quot);
    }
    Ok(TruncatedSeries { coeffs: s })
}

/// Bivariate series with coefficients `c(i, j)` of `x^i y^j`,
/// `0 <= i <= K`, `0 <= j <= N`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TruncatedSeries2 {
    x_order: usize,
    y_order: usize,
    coeffs: Vec<BigInt>,
}

impl TruncatedSeries2 {
    pub fn zero(x_order: usize, y_order: usize) -> Self {
        TruncatedSeries2 {
            x_order,
            y_order,
            coeffs: vec![BigInt::zero(); (x_order + 1) * (y_order + 1)],
        }
    }

    /// Builds a series from sparse `(deg_x, deg_y, coefficient)` terms; terms
    /// outside the box are discarded and repeated terms accumulate.
    pub fn from_terms(terms: &[(usize, usize, i64)], x_order: usize, y_order: usize) -> Self {
        let mut s = Self::zero(x_order, y_order);
        for &(i, j, c) in terms {
            if i <= x_order && j <= y_order {
                let idx = s.index(i, j);
                s.coeffs[idx] += c;
            }
        }
        s
    }

    pub fn orders(&self) -> (usize, usize) {
        (self.x_order, self.y_order)
    }

    fn index(&self, i: usize, j: usize) -> usize {
        i * (self.y_order + 1) + j
    }

    pub fn coeff(&self, i: usize, j: usize) -> &BigInt {
        assert!(i <= self.x_order && j <= self.y_order, "coefficient ({i}, {j}) out of range");
        &self.coeffs[self.index(i, j)]
    }

    pub fn set_coeff(&mut self, i: usize, j: usize, value: BigInt) {
        let idx = self.index(i, j);
        self.coeffs[idx] = value;
    }

    pub fn truncate(&self, x_order: usize, y_order: usize) -> Self {
        assert!(x_order <= self.x_order && y_order <= self.y_order);
        let mut out = Self::zero(x_order, y_order);
        for i in 0..=x_order {
            for j in 0..=y_order {
                out.set_coeff(i, j, self.coeff(i, j).clone());
            }
        }
        out
    }

    fn nonzero_terms(&self) -> Vec<(usize, usize, &BigInt)> {
        let mut terms = Vec::new();
        for i in 0..=self.x_order {
            for j in 0..=self.y_order {
                let c = self.coeff(i, j);
                if !c.is_zero() {
                    terms.push((i, j, c));
                }
            }
        }
        terms
    }
}

pub fn mul_trunc2(
    p: &TruncatedSeries2,
    q: &TruncatedSeries2,
    x_order: usize,
    y_order: usize,
) -> TruncatedSeries2 {
    let mut out = TruncatedSeries2::zero(x_order, y_order);
    let qt = q.nonzero_terms();
    for (pi, pj, pc) in p.nonzero_terms() {
        for &(qi, qj, qc) in &qt {
            let (i, j) = (pi + qi, pj + qj);
            if i <= x_order && j <= y_order {
                let idx = out.index(i, j);
                out.coeffs[idx] += pc * qc;
            }
        }
    }
    out
}

/// Coefficients `c(i, j)`, `i <= x_order`, `j <= y_order`, of `1/denom`.
///
/// Solves `denom * c = 1` cell by cell in lexicographic order, so each cell
/// only reads cells that are already final.
pub fn bivariate_inverse_coeffs(
    denom: &TruncatedSeries2,
    x_order: usize,
    y_order: usize,
) -> Result<TruncatedSeries2> {
    if !denom.coeff(0, 0).is_one() {
        return Err(Error::NonUnitConstantTerm);
    }
    let terms: Vec<(usize, usize, BigInt)> = denom
        .nonzero_terms()
        .into_iter()
        .filter(|&(i, j, _)| (i, j) != (0, 0))
        .map(|(i, j, c)| (i, j, c.clone()))
        .collect();
    let mut out = TruncatedSeries2::zero(x_order, y_order);
    for i in 0..=x_order {
        for j in 0..=y_order {
            let mut acc = if (i, j) == (0, 0) { BigInt::one() } else { BigInt::zero() };
            for (di, dj, dc) in &terms {
                if *di <= i && *dj <= j {
                    acc -= dc * out.coeff(i - di, j - dj);
                }
            }
            out.set_coeff(i, j, acc);
        }
    }
    Ok(out)
}

/// Allowed parts of a composition.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum PartSet {
    Finite(BTreeSet<usize>),
    /// 1, 3, 5, ...
    Odd,
    /// 2, 3, 4, ...
    AtLeastTwo,
}

impl PartSet {
    /// `{1, 2}`.
    pub fn ones_and_twos() -> Self {
        PartSet::Finite([1, 2].into_iter().collect())
    }

    pub fn finite(parts: impl IntoIterator<Item = usize>) -> Result<Self> {
        let set: BTreeSet<usize> = parts.into_iter().collect();
        if set.is_empty() {
            return Err(Error::EmptyPartSet);
        }
        if set.contains(&0) {
            return Err(Error::ZeroPart);
        }
        Ok(PartSet::Finite(set))
    }

    pub fn contains(&self, part: usize) -> bool {
        match self {
            PartSet::Finite(s) => s.contains(&part),
            PartSet::Odd => part % 2 == 1,
            PartSet::AtLeastTwo => part >= 2,
        }
    }

    /// Members not exceeding `bound`, ascending.
    pub fn parts_up_to(&self, bound: usize) -> Vec<usize> {
        match self {
            PartSet::Finite(s) => s.range(..=bound).copied().collect(),
            _ => (1..=bound).filter(|&m| self.contains(m)).collect(),
        }
    }

    pub(crate) fn check(&self) -> Result<()> {
        match self {
            PartSet::Finite(s) if s.is_empty() => Err(Error::EmptyPartSet),
            PartSet::Finite(s) if s.contains(&0) => Err(Error::ZeroPart),
            _ => Ok(()),
        }
    }
}

impl fmt::Display for PartSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PartSet::Finite(s) => {
                let parts: Vec<String> = s.iter().map(|p| p.to_string()).collect();
                write!(f, "{{{}}}", parts.join(","))
            }
            PartSet::Odd => f.write_str("odd"),
            PartSet::AtLeastTwo => f.write_str(">=2"),
        }
    }
}

/// Number of compositions of each `n <= order` with parts from `parts`,
/// read off `1 / (1 - sum_{m in S} x^m)`.
pub fn composition_gf_coeffs(parts: &PartSet, order: usize) -> Result<TruncatedSeries> {
    parts.check()?;
    let mut denom = vec![BigInt::zero(); order + 1];
    denom[0] = BigInt::one();
    for m in parts.parts_up_to(order) {
        denom[m] -= 1;
    }
    inverse_trunc(&TruncatedSeries::new(denom, order), order)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ints(s: &TruncatedSeries) -> Vec<i64> {
        s.coeffs().iter().map(|c| i64::try_from(c).unwrap()).collect()
    }

    #[test]
    fn products() {
        let p = TruncatedSeries::from_i64(&[1, 1], 3);
        assert_eq!(ints(&mul_trunc(&p, &p, 3)), [1, 2, 1, 0]);

        let a = TruncatedSeries::from_i64(&[1, -1], 3);
        let b = TruncatedSeries::from_i64(&[1, 1, 1, 1], 3);
        assert_eq!(ints(&mul_trunc(&a, &b, 3)), [1, 0, 0, 0]);

        let c = TruncatedSeries::from_i64(&[1, 0, -1], 4);
        assert_eq!(ints(&mul_trunc(&c, &c, 4)), [1, 0, -2, 0, 1]);
    }

    #[test]
    fn mul_with_mismatched_orders() {
        let p = TruncatedSeries::from_i64(&[1, 2, 3], 2);
        let q = TruncatedSeries::from_i64(&[1, 1, 1, 1, 1], 4);
        // degree 3, 4 only see p's known coefficients
        assert_eq!(ints(&mul_trunc(&p, &q, 4)), [1, 3, 6, 6, 6]);
        assert_eq!(ints(&mul_trunc(&p, &q, 1)), [1, 3]);
    }

    #[test]
    fn inverses() {
        let geo = inverse_trunc(&TruncatedSeries::from_i64(&[1, -1], 4), 4).unwrap();
        assert_eq!(ints(&geo), [1, 1, 1, 1, 1]);

        let fib = inverse_trunc(&TruncatedSeries::from_i64(&[1, -1, -1], 5), 5).unwrap();
        assert_eq!(ints(&fib), [1, 1, 2, 3, 5, 8]);

        let one = inverse_trunc(&TruncatedSeries::one(3), 3).unwrap();
        assert_eq!(ints(&one), [1, 0, 0, 0]);

        assert_eq!(
            inverse_trunc(&TruncatedSeries::from_i64(&[2, 1], 3), 3),
            Err(Error::NonUnitConstantTerm)
        );
    }

    #[test]
    fn inverse_square_roots() {
        let sq = TruncatedSeries::from_i64(&[1, -2, 1], 3);
        assert_eq!(ints(&inv_sqrt_trunc(&sq, 3).unwrap()), [1, 1, 1, 1]);

        let diag = TruncatedSeries::from_i64(&[1, -2, -1, -2, 1], 5);
        assert_eq!(ints(&inv_sqrt_trunc(&diag, 5).unwrap()), [1, 1, 2, 5, 11, 26]);

        assert_eq!(ints(&inv_sqrt_trunc(&TruncatedSeries::one(2), 2).unwrap()), [1, 0, 0]);

        // (1-x)^{-1/2} = 1 + x/2 + ...
        assert_eq!(
            inv_sqrt_trunc(&TruncatedSeries::from_i64(&[1, -1], 3), 3),
            Err(Error::NonIntegralCoefficient { degree: 1 })
        );
        assert_eq!(
            inv_sqrt_trunc(&TruncatedSeries::from_i64(&[-1, 1], 3), 3),
            Err(Error::NonUnitConstantTerm)
        );
    }

    #[test]
    fn equality_is_up_to_min_order() {
        let a = TruncatedSeries::from_i64(&[1, 2, 3], 2);
        let b = TruncatedSeries::from_i64(&[1, 2, 3, 4], 3);
        let c = TruncatedSeries::from_i64(&[1, 2, 4], 2);
        assert_eq!(a, b);
        assert_ne!(a, c);
    }

    #[test]
    fn bivariate_reciprocals() {
        let f = TruncatedSeries2::from_terms(
            &[(0, 0, 1), (2, 0, -1), (0, 2, -1), (2, 2, 1), (1, 1, -1)],
            4,
            4,
        );
        let c = bivariate_inverse_coeffs(&f, 4, 4).unwrap();
        assert_eq!(c.coeff(2, 4), &BigInt::from(4));
        assert_eq!(c.coeff(4, 4), &BigInt::from(11));
        assert_eq!(c.coeff(1, 0), &BigInt::zero());

        let binom = TruncatedSeries2::from_terms(&[(0, 0, 1), (1, 0, -1), (0, 1, -1)], 2, 2);
        let c = bivariate_inverse_coeffs(&binom, 2, 2).unwrap();
        assert_eq!(c.coeff(2, 2), &BigInt::from(6));

        let b = TruncatedSeries2::from_terms(
            &[(0, 0, 1), (1, 1, -1), (2, 1, -1), (1, 2, -1), (2, 2, -1)],
            4,
            4,
        );
        let c = bivariate_inverse_coeffs(&b, 4, 4).unwrap();
        assert_eq!(c.coeff(4, 4), &BigInt::from(11));

        let prod = mul_trunc2(&f, &bivariate_inverse_coeffs(&f, 6, 5).unwrap(), 6, 5);
        assert_eq!(prod, TruncatedSeries2::from_terms(&[(0, 0, 1)], 6, 5));

        let bad = TruncatedSeries2::from_terms(&[(1, 0, 1)], 2, 2);
        assert_eq!(bivariate_inverse_coeffs(&bad, 2, 2), Err(Error::NonUnitConstantTerm));
    }

    #[test]
    fn composition_counts() {
        let s1 = composition_gf_coeffs(&PartSet::ones_and_twos(), 5).unwrap();
        assert_eq!(ints(&s1), [1, 1, 2, 3, 5, 8]);
        let odd = composition_gf_coeffs(&PartSet::Odd, 4).unwrap();
        assert_eq!(odd.coeff(4), &BigInt::from(3));
        let ones = composition_gf_coeffs(&PartSet::finite([1]).unwrap(), 3).unwrap();
        assert_eq!(ints(&ones), [1, 1, 1, 1]);
        assert_eq!(PartSet::finite([]), Err(Error::EmptyPartSet));
        assert_eq!(
            composition_gf_coeffs(&PartSet::Finite(BTreeSet::new()), 3),
            Err(Error::EmptyPartSet)
        );
        assert_eq!(PartSet::finite([0, 1]), Err(Error::ZeroPart));
    }
}
