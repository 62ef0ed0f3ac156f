//! Bernoulli numbers, Bernoulli polynomials and Faulhaber sums.
//!
//! The convention is the one of the generating function `t/(e^t − 1)`, so
//! `B_1 = −1/2`. The `+1/2` convention (from `t/(1 − e^{−t})`) is not
//! supported anywhere in this crate.

use alloc::vec::Vec;

use num_traits::{One, Zero};

use crate::exact::{
    binomial, factorial, int, BivariatePolynomial, ExactRational, TruncatedSeries, UnivariatePolynomial, Vars,
};
use crate::{Error, Result};

/// `B_0, …, B_N`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BernoulliTable {
    values: Vec<ExactRational>,
}

impl BernoulliTable {
    pub fn get(&self, k: usize) -> &ExactRational {
        &self.values[k]
    }

    pub fn values(&self) -> &[ExactRational] {
        &self.values
    }

    pub fn max_index(&self) -> usize {
        self.values.len() - 1
    }
}

/// Computes `B_0..=B_N` by inverting `(e^t − 1)/t = Σ t^k/(k+1)!` as an exact
/// power series; the `k`-th coefficient of the inverse is `B_k / k!`.
pub fn bernoulli_numbers(max_index: usize) -> BernoulliTable {
    let vars = Vars::PC;
    let shifted_exp = TruncatedSeries::from_fn(max_index, |k| {
        BivariatePolynomial::constant(vars, ExactRational::new(1.into(), factorial(k as u32 + 1)))
    });
    let inverse = shifted_exp.inverse().expect("constant term is 1");
    let values = inverse
        .coefficients()
        .iter()
        .enumerate()
        .map(|(k, c)| c.coefficient(0, 0) * ExactRational::from_integer(factorial(k as u32)))
        .collect();
    BernoulliTable { values }
}

/// `B_m(x) = Σ_ℓ binom(m, ℓ) x^{m−ℓ} B_ℓ`.
pub fn bernoulli_polynomial(m: usize) -> UnivariatePolynomial {
    bernoulli_polynomial_with(&bernoulli_numbers(m), m)
}

pub(crate) fn bernoulli_polynomial_with(table: &BernoulliTable, m: usize) -> UnivariatePolynomial {
    let mut coeffs = alloc::vec![ExactRational::zero(); m + 1];
    for (l, b) in table.values()[..=m].iter().enumerate() {
        coeffs[m - l] = binomial(m as u64, l as u64) * b;
    }
    UnivariatePolynomial::new("x", coeffs)
}

/// `B_m(1/2)`, by evaluating the Bernoulli polynomial.
pub fn bernoulli_half_value(m: usize) -> ExactRational {
    bernoulli_polynomial(m).evaluate(&ExactRational::new(1.into(), 2.into()))
}

/// The closed form `(2^{1−m} − 1)·B_m` for `B_m(1/2)`.
pub fn bernoulli_half_closed_form(table: &BernoulliTable, m: usize) -> ExactRational {
    let two_pow = if m == 0 {
        int(2)
    } else {
        ExactRational::new(1.into(), num_traits::pow(num_bigint::BigInt::from(2), m - 1))
    };
    (two_pow - ExactRational::one()) * table.get(m)
}

/// `Σ_{y=1}^{N} y^m` as a polynomial in `N`, from the Bernoulli-number
/// form `N^m/2 + N^{m+1}/(m+1) · Σ_j binom(m+1, 2j) B_{2j} N^{−2j}`.
pub fn faulhaber_by_bernoulli_numbers(table: &BernoulliTable, m: usize) -> UnivariatePolynomial {
    let mut coeffs = alloc::vec![ExactRational::zero(); m + 2];
    coeffs[m] += ExactRational::new(1.into(), 2.into());
    let inv = ExactRational::new(1.into(), ((m + 1) as u64).into());
    for j in 0..=m / 2 {
        coeffs[m + 1 - 2 * j] += &inv * binomial(m as u64 + 1, 2 * j as u64) * table.get(2 * j);
    }
    UnivariatePolynomial::new("N", coeffs)
}

/// `Σ_{y=1}^{N} y^m = (B_{m+1}(N+1) − B_{m+1}) / (m+1)`.
pub fn faulhaber_by_bernoulli_polynomial(table: &BernoulliTable, m: usize) -> UnivariatePolynomial {
    let shifted = UnivariatePolynomial::new("N", alloc::vec![int(1), int(1)]);
    let b = bernoulli_polynomial_with(table, m + 1).compose(&shifted);
    let constant = UnivariatePolynomial::constant("N", table.get(m + 1).clone());
    (&b - &constant).scale(&ExactRational::new(1.into(), ((m + 1) as u64).into()))
}

/// Faulhaber polynomial for exponent `m ≥ 1`, computed through both
/// closed forms, which must agree exactly.
pub fn faulhaber_poly(m: usize) -> Result<UnivariatePolynomial> {
    let table = bernoulli_numbers(m + 1);
    let by_numbers = faulhaber_by_bernoulli_numbers(&table, m);
    let by_polynomial = faulhaber_by_bernoulli_polynomial(&table, m);
    if by_numbers != by_polynomial {
        return Err(Error::FaulhaberMismatch { m });
    }
    Ok(by_numbers)
}

/// `B_n((p+1)/2)` as a polynomial in `p`.
pub fn bernoulli_at_half_shift(n: usize) -> UnivariatePolynomial {
    let half = ExactRational::new(1.into(), 2.into());
    let shift = UnivariatePolynomial::new("p", alloc::vec![half.clone(), half]);
    bernoulli_polynomial(n).compose(&shift)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rat;

    #[test]
    fn first_numbers() {
        let t = bernoulli_numbers(8);
        assert_eq!(t.get(0), &int(1));
        assert_eq!(t.get(1), &rat(-1, 2));
        assert_eq!(t.get(2), &rat(1, 6));
        assert_eq!(t.get(3), &int(0));
        assert_eq!(t.get(4), &rat(-1, 30));
        assert_eq!(t.get(6), &rat(1, 42));
        assert_eq!(t.get(8), &rat(-1, 30));
    }

    #[test]
    fn plus_half_convention_is_rejected() {
        assert_ne!(bernoulli_numbers(1).get(1), &rat(1, 2));
    }

    #[test]
    fn low_degree_polynomials() {
        assert_eq!(bernoulli_polynomial(0), UnivariatePolynomial::constant("x", int(1)));
        assert_eq!(
            bernoulli_polynomial(1),
            UnivariatePolynomial::new("x", alloc::vec![rat(-1, 2), int(1)])
        );
        assert_eq!(
            bernoulli_polynomial(2),
            UnivariatePolynomial::new("x", alloc::vec![rat(1, 6), int(-1), int(1)])
        );
    }

    #[test]
    fn half_values() {
        assert_eq!(bernoulli_half_value(0), int(1));
        assert_eq!(bernoulli_half_value(1), int(0));
        assert_eq!(bernoulli_half_value(2), rat(-1, 12));
        let t = bernoulli_numbers(4);
        assert_eq!(bernoulli_half_closed_form(&t, 2), rat(-1, 12));
    }

    #[test]
    fn faulhaber_small_cases() {
        assert_eq!(
            faulhaber_poly(1).unwrap(),
            UnivariatePolynomial::new("N", alloc::vec![int(0), rat(1, 2), rat(1, 2)])
        );
        assert_eq!(faulhaber_poly(2).unwrap().evaluate(&int(3)), int(14));
        assert_eq!(faulhaber_poly(3).unwrap().evaluate(&int(2)), int(9));
    }

    #[test]
    fn plus_half_b1_breaks_faulhaber_agreement() {
        let mut t = bernoulli_numbers(5);
        t.values[1] = rat(1, 2);
        assert_ne!(
            faulhaber_by_bernoulli_numbers(&t, 3),
            faulhaber_by_bernoulli_polynomial(&t, 3)
        );
    }
}
