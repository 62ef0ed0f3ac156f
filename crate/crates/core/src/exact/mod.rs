//! Exact scalars, polynomials, truncated series and rational matrices.

mod bivariate;
mod matrix;
mod series;
mod univariate;

use num_bigint::BigInt;
use num_traits::{One, Zero};

pub use bivariate::{BivariatePolynomial, Vars};
pub use matrix::RationalMatrix;
pub use series::TruncatedSeries;
pub use univariate::UnivariatePolynomial;

/// Arbitrary-precision rational, always held in lowest terms with a positive
/// denominator.
pub type ExactRational = num_rational::BigRational;

/// Degree of a polynomial. The zero polynomial has degree
/// [`Degree::NegInfinity`], which sorts below every finite degree.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Degree {
    NegInfinity,
    Finite(u32),
}

impl Degree {
    pub fn finite(self) -> Option<u32> {
        match self {
            Degree::NegInfinity => None,
            Degree::Finite(d) => Some(d),
        }
    }
}

impl core::fmt::Display for Degree {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        match self {
            Degree::NegInfinity => f.write_str("-inf"),
            Degree::Finite(d) => write!(f, "{d}"),
        }
    }
}

pub fn int(n: i64) -> ExactRational {
    ExactRational::from_integer(BigInt::from(n))
}

pub fn rat(num: i64, den: i64) -> ExactRational {
    ExactRational::new(BigInt::from(num), BigInt::from(den))
}

pub fn factorial(n: u32) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, k| acc * k)
}

/// `n` choose `k`; zero when `k > n`.
pub fn binomial(n: u64, k: u64) -> ExactRational {
    if k > n {
        return ExactRational::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for i in 0..k {
        acc = acc * (n - i) / (i + 1);
    }
    ExactRational::from_integer(acc)
}

/// `binom(c+g−1, 2g−2)` as a polynomial in `c` (variables `(p, c)`), i.e.
/// `(c+g−1)(c+g−2)···(c−g+2) / (2g−2)!`.
pub fn binomial_poly_in_c(g: u32) -> BivariatePolynomial {
    assert!(g >= 1, "genus must be at least 1");
    let vars = Vars::PC;
    let c = BivariatePolynomial::monomial(vars, 0, 1, ExactRational::one());
    let top = i64::from(g) - 1;
    let mut acc = BivariatePolynomial::constant(vars, ExactRational::one());
    for i in 0..(2 * i64::from(g) - 2) {
        let shift = BivariatePolynomial::constant(vars, int(top - i));
        acc = &acc * &(&c + &shift);
    }
    let denom = ExactRational::from_integer(factorial(2 * g - 2));
    acc.scale(&(ExactRational::one() / denom))
}

/// Display adapter printing a rational as `n` or `n/d`.
pub(crate) fn fmt_rational(q: &ExactRational, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
    if q.denom().is_one() {
        write!(f, "{}", q.numer())
    } else {
        write!(f, "{}/{}", q.numer(), q.denom())
    }
}
