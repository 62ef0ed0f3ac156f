use alloc::collections::BTreeMap;
use core::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::Zero;

use super::{CyclotomicElement, CyclotomicField};
use crate::exact::ExactRational;

/// Integer Laurent polynomial in `A`, used for generic (unspecialized)
/// skein quantities.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct LaurentPolynomial {
    terms: BTreeMap<i64, BigInt>,
}

impl LaurentPolynomial {
    pub fn monomial(exponent: i64, c: impl Into<BigInt>) -> Self {
        let mut out = Self::default();
        out.add_term(exponent, c.into());
        out
    }

    fn add_term(&mut self, e: i64, c: BigInt) {
        if c.is_zero() {
            return;
        }
        let slot = self.terms.entry(e).or_default();
        *slot += c;
        if slot.is_zero() {
            self.terms.remove(&e);
        }
    }

    pub fn coefficient(&self, e: i64) -> BigInt {
        self.terms.get(&e).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Image under `A ↦ ζ_{2p}`.
    pub fn specialize(&self, field: &CyclotomicField) -> CyclotomicElement {
        self.terms.iter().fold(field.zero(), |acc, (&e, c)| {
            &acc + &field.a_power(e).scale(&ExactRational::from_integer(c.clone()))
        })
    }
}

/// `[n] = A^{2(n−1)} + A^{2(n−3)} + … + A^{−2(n−1)}` for `n ≥ 0`, and
/// `[−n] = −[n]`.
pub fn generic_quantum_integer(n: i64) -> LaurentPolynomial {
    let mut out = LaurentPolynomial::default();
    let m = n.abs();
    let sign = if n < 0 { -1 } else { 1 };
    for k in 0..m {
        out.add_term(2 * (m - 1) - 4 * k, BigInt::from(sign));
    }
    out
}

impl Add for &LaurentPolynomial {
    type Output = LaurentPolynomial;

    fn add(self, rhs: &LaurentPolynomial) -> LaurentPolynomial {
        let mut out = self.clone();
        for (&e, c) in &rhs.terms {
            out.add_term(e, c.clone());
        }
        out
    }
}

impl Sub for &LaurentPolynomial {
    type Output = LaurentPolynomial;

    fn sub(self, rhs: &LaurentPolynomial) -> LaurentPolynomial {
        self + &(-rhs)
    }
}

impl Neg for &LaurentPolynomial {
    type Output = LaurentPolynomial;

    fn neg(self) -> LaurentPolynomial {
        LaurentPolynomial {
            terms: self.terms.iter().map(|(&e, c)| (e, -c)).collect(),
        }
    }
}

impl Mul for &LaurentPolynomial {
    type Output = LaurentPolynomial;

    fn mul(self, rhs: &LaurentPolynomial) -> LaurentPolynomial {
        let mut out = LaurentPolynomial::default();
        for (&e1, a) in &self.terms {
            for (&e2, b) in &rhs.terms {
                out.add_term(e1 + e2, a * b);
            }
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn quantum_integer_times_denominator() {
        // [n]·(A² − A^{−2}) = A^{2n} − A^{−2n}
        let denom = &LaurentPolynomial::monomial(2, 1) - &LaurentPolynomial::monomial(-2, 1);
        for n in -6i64..=6 {
            let lhs = &generic_quantum_integer(n) * &denom;
            let rhs = &LaurentPolynomial::monomial(2 * n, 1) - &LaurentPolynomial::monomial(-2 * n, 1);
            assert_eq!(lhs, rhs, "n={n}");
        }
        assert!(generic_quantum_integer(0).is_zero());
        assert_eq!(
            generic_quantum_integer(2),
            &LaurentPolynomial::monomial(2, 1) + &LaurentPolynomial::monomial(-2, 1)
        );
    }
}
