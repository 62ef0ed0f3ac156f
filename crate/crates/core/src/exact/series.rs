use alloc::format;
use alloc::vec::Vec;

use num_traits::One;

use super::{BivariatePolynomial, ExactRational, Vars};
use crate::{Error, Result};

/// Power series in `t` truncated after `t^order`, with polynomial
/// coefficients. Every stored coefficient is exact; nothing beyond `order`
/// is ever consulted.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TruncatedSeries {
    order: usize,
    coeffs: Vec<BivariatePolynomial>,
}

impl TruncatedSeries {
    /// Builds a series from the given leading coefficients, padding with
    /// zeros (or dropping extras) to exactly `order + 1` entries.
    pub fn new(vars: Vars, order: usize, mut coeffs: Vec<BivariatePolynomial>) -> Self {
        coeffs.truncate(order + 1);
        coeffs.resize(order + 1, BivariatePolynomial::zero(vars));
        TruncatedSeries { order, coeffs }
    }

    /// Builds `Σ_k f(k)·t^k` for `k ≤ order`.
    pub fn from_fn(order: usize, f: impl FnMut(usize) -> BivariatePolynomial) -> Self {
        TruncatedSeries {
            order,
            coeffs: (0..=order).map(f).collect(),
        }
    }

    pub fn one(vars: Vars, order: usize) -> Self {
        Self::new(
            vars,
            order,
            alloc::vec![BivariatePolynomial::constant(vars, ExactRational::one())],
        )
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn coefficients(&self) -> &[BivariatePolynomial] {
        &self.coeffs
    }

    /// Coefficient of `t^k`. Used with `k = 2g−2` this is the residue of
    /// `series · dt / t^{2g−1}`.
    pub fn coefficient_at(&self, k: usize) -> Result<&BivariatePolynomial> {
        self.coeffs.get(k).ok_or(Error::BeyondTruncation {
            requested: k,
            order: self.order,
        })
    }

    fn vars(&self) -> Vars {
        self.coeffs[0].vars()
    }

    pub fn mul(&self, rhs: &TruncatedSeries) -> Result<TruncatedSeries> {
        self.check_order(rhs)?;
        Ok(Self::from_fn(self.order, |n| {
            (0..=n).fold(BivariatePolynomial::zero(self.vars()), |acc, k| {
                &acc + &(&self.coeffs[k] * &rhs.coeffs[n - k])
            })
        }))
    }

    /// Multiplicative inverse of a series with constant term exactly 1.
    pub fn inverse(&self) -> Result<TruncatedSeries> {
        let unit = BivariatePolynomial::constant(self.coeffs[0].vars(), ExactRational::one());
        if self.coeffs[0] != unit {
            return Err(Error::NonUnitConstantTerm(format!("{}", self.coeffs[0])));
        }
        let mut out: Vec<BivariatePolynomial> = Vec::with_capacity(self.order + 1);
        out.push(unit);
        for n in 1..=self.order {
            let acc = (1..=n).fold(BivariatePolynomial::zero(self.vars()), |acc, k| {
                &acc + &(&self.coeffs[k] * &out[n - k])
            });
            out.push(-&acc);
        }
        Ok(TruncatedSeries {
            order: self.order,
            coeffs: out,
        })
    }

    /// `self^k` by repeated squaring.
    pub fn pow(&self, mut k: u32) -> TruncatedSeries {
        let mut result = Self::one(self.vars(), self.order);
        let mut base = self.clone();
        while k > 0 {
            if k & 1 == 1 {
                result = result.mul(&base).expect("orders agree");
            }
            k >>= 1;
            if k > 0 {
                base = base.mul(&base).expect("orders agree");
            }
        }
        result
    }

    fn check_order(&self, rhs: &TruncatedSeries) -> Result<()> {
        if self.order != rhs.order {
            return Err(Error::OrderMismatch {
                left: self.order,
                right: rhs.order,
            });
        }
        Ok(())
    }
}
