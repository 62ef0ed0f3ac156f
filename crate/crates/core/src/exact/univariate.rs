use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

use super::{Degree, ExactRational};

/// Dense polynomial in one variable with rational coefficients, indexed by
/// degree. Trailing zeros are always stripped, so the zero polynomial has no
/// coefficients at all.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct UnivariatePolynomial {
    var: &'static str,
    coeffs: Vec<ExactRational>,
}

impl UnivariatePolynomial {
    pub fn new(var: &'static str, coeffs: Vec<ExactRational>) -> Self {
        let mut poly = UnivariatePolynomial { var, coeffs };
        poly.trim();
        poly
    }

    pub fn zero(var: &'static str) -> Self {
        UnivariatePolynomial {
            var,
            coeffs: Vec::new(),
        }
    }

    pub fn constant(var: &'static str, c: ExactRational) -> Self {
        Self::new(var, vec![c])
    }

    /// `c·x^k`
    pub fn monomial(var: &'static str, k: usize, c: ExactRational) -> Self {
        let mut coeffs = vec![ExactRational::zero(); k + 1];
        coeffs[k] = c;
        Self::new(var, coeffs)
    }

    pub fn x(var: &'static str) -> Self {
        Self::monomial(var, 1, ExactRational::one())
    }

    fn trim(&mut self) {
        while self.coeffs.last().is_some_and(Zero::is_zero) {
            self.coeffs.pop();
        }
    }

    pub fn var(&self) -> &'static str {
        self.var
    }

    pub fn coefficients(&self) -> &[ExactRational] {
        &self.coeffs
    }

    pub fn coefficient(&self, k: usize) -> ExactRational {
        self.coeffs.get(k).cloned().unwrap_or_else(ExactRational::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Degree {
        match self.coeffs.len() {
            0 => Degree::NegInfinity,
            n => Degree::Finite((n - 1) as u32),
        }
    }

    pub fn leading_coefficient(&self) -> Option<&ExactRational> {
        self.coeffs.last()
    }

    pub fn scale(&self, k: &ExactRational) -> Self {
        Self::new(self.var, self.coeffs.iter().map(|c| c * k).collect())
    }

    pub fn evaluate(&self, x: &ExactRational) -> ExactRational {
        self.coeffs
            .iter()
            .rev()
            .fold(ExactRational::zero(), |acc, c| acc * x + c)
    }

    /// `self(inner(y))`; the result lives in `inner`'s variable.
    pub fn compose(&self, inner: &UnivariatePolynomial) -> UnivariatePolynomial {
        let mut acc = UnivariatePolynomial::zero(inner.var);
        for c in self.coeffs.iter().rev() {
            acc = &(&acc * inner) + &UnivariatePolynomial::constant(inner.var, c.clone());
        }
        acc
    }

    /// True when only even powers occur (the zero polynomial is both even
    /// and odd).
    pub fn is_even(&self) -> bool {
        self.coeffs.iter().enumerate().all(|(k, c)| k % 2 == 0 || c.is_zero())
    }

    pub fn is_odd(&self) -> bool {
        self.coeffs.iter().enumerate().all(|(k, c)| k % 2 == 1 || c.is_zero())
    }

    /// Euclidean division; panics on a zero divisor.
    pub fn div_rem(&self, divisor: &UnivariatePolynomial) -> (Self, Self) {
        let lead = divisor
            .leading_coefficient()
            .expect("division by the zero polynomial")
            .clone();
        let dlen = divisor.coeffs.len();
        let mut rem = self.coeffs.clone();
        if rem.len() < dlen {
            return (Self::zero(self.var), self.clone());
        }
        let mut quot = vec![ExactRational::zero(); rem.len() - dlen + 1];
        for shift in (0..quot.len()).rev() {
            let q = &rem[shift + dlen - 1] / &lead;
            if q.is_zero() {
                continue;
            }
            for (i, d) in divisor.coeffs.iter().enumerate() {
                rem[shift + i] -= &q * d;
            }
            quot[shift] = q;
        }
        (Self::new(self.var, quot), Self::new(self.var, rem))
    }
}

impl Add for &UnivariatePolynomial {
    type Output = UnivariatePolynomial;

    fn add(self, rhs: &UnivariatePolynomial) -> UnivariatePolynomial {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let coeffs = (0..n).map(|k| self.coefficient(k) + rhs.coefficient(k)).collect();
        UnivariatePolynomial::new(self.var, coeffs)
    }
}

impl Sub for &UnivariatePolynomial {
    type Output = UnivariatePolynomial;

    fn sub(self, rhs: &UnivariatePolynomial) -> UnivariatePolynomial {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let coeffs = (0..n).map(|k| self.coefficient(k) - rhs.coefficient(k)).collect();
        UnivariatePolynomial::new(self.var, coeffs)
    }
}

impl Mul for &UnivariatePolynomial {
    type Output = UnivariatePolynomial;

    fn mul(self, rhs: &UnivariatePolynomial) -> UnivariatePolynomial {
        if self.is_zero() || rhs.is_zero() {
            return UnivariatePolynomial::zero(self.var);
        }
        let mut coeffs = vec![ExactRational::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        UnivariatePolynomial::new(self.var, coeffs)
    }
}

impl Neg for &UnivariatePolynomial {
    type Output = UnivariatePolynomial;

    fn neg(self) -> UnivariatePolynomial {
        UnivariatePolynomial::new(self.var, self.coeffs.iter().map(|c| -c).collect())
    }
}

/// Ascending powers: `-1/2 + x`.
impl fmt::Display for UnivariatePolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms = self
            .coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(k, c)| (k as u32, 0u32, c));
        super::bivariate::write_terms(f, [self.var, ""], terms)
    }
}

#[cfg(test)]
mod tests {
    use super::super::{int, rat};
    use super::*;

    fn poly(cs: &[(i64, i64)]) -> UnivariatePolynomial {
        UnivariatePolynomial::new("x", cs.iter().map(|&(n, d)| rat(n, d)).collect())
    }

    #[test]
    fn trailing_zeros_are_stripped() {
        let p = poly(&[(1, 1), (0, 1), (0, 1)]);
        assert_eq!(p.degree(), Degree::Finite(0));
        assert!(poly(&[(0, 1)]).is_zero());
        assert_eq!(poly(&[]).degree(), Degree::NegInfinity);
    }

    #[test]
    fn div_rem_reconstructs() {
        let a = poly(&[(-1, 1), (0, 1), (0, 1), (0, 1), (0, 1), (0, 1), (1, 1)]);
        let b = poly(&[(1, 1), (1, 1)]);
        let (q, r) = a.div_rem(&b);
        assert_eq!(&(&q * &b) + &r, a);
        assert!(r.degree() < b.degree());
    }

    #[test]
    fn compose_with_affine_map() {
        // (x^2)((y+1)/2) = y^2/4 + y/2 + 1/4
        let sq = UnivariatePolynomial::monomial("x", 2, int(1));
        let inner = UnivariatePolynomial::new("y", alloc::vec![rat(1, 2), rat(1, 2)]);
        assert_eq!(
            sq.compose(&inner),
            UnivariatePolynomial::new("y", alloc::vec![rat(1, 4), rat(1, 2), rat(1, 4)])
        );
    }

    #[test]
    fn parity_predicates() {
        assert!(poly(&[(1, 1), (0, 1), (3, 1)]).is_even());
        assert!(poly(&[(0, 1), (2, 1), (0, 1), (5, 1)]).is_odd());
        assert!(!poly(&[(1, 1), (1, 1)]).is_odd());
    }

    #[test]
    fn renders_ascending() {
        assert_eq!(alloc::format!("{}", poly(&[(-1, 2), (1, 1)])), "-1/2 + x");
        assert_eq!(alloc::format!("{}", poly(&[])), "0");
    }
}
