use alloc::sync::Arc;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

use crate::exact::{int, ExactRational, UnivariatePolynomial};
use crate::{Error, Result};

const VAR: &str = "A";

/// `n`-th cyclotomic polynomial, by dividing `x^n − 1` by `Φ_d` for every
/// proper divisor `d` of `n`.
pub fn cyclotomic_polynomial(n: u64) -> UnivariatePolynomial {
    assert!(n >= 1);
    let mut coeffs = vec![ExactRational::zero(); n as usize + 1];
    coeffs[0] = int(-1);
    coeffs[n as usize] = int(1);
    let mut acc = UnivariatePolynomial::new(VAR, coeffs);
    for d in (1..n).filter(|d| n.is_multiple_of(*d)) {
        let (q, r) = acc.div_rem(&cyclotomic_polynomial(d));
        debug_assert!(r.is_zero());
        acc = q;
    }
    acc
}

#[derive(Debug, PartialEq, Eq)]
struct FieldData {
    p: u64,
    modulus: UnivariatePolynomial,
}

/// `Q(ζ_{2p})` for odd `p ≥ 3`, realized as `Q[A]/Φ_{2p}(A)`. The class of
/// `A` is a primitive `2p`-th root of unity. Cheap to clone.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CyclotomicField {
    data: Arc<FieldData>,
}

impl CyclotomicField {
    pub fn new(p: u64) -> Result<Self> {
        if p < 3 || p.is_multiple_of(2) {
            return Err(Error::InvalidLevel(p));
        }
        let modulus = cyclotomic_polynomial(2 * p);
        Ok(CyclotomicField {
            data: Arc::new(FieldData { p, modulus }),
        })
    }

    pub fn p(&self) -> u64 {
        self.data.p
    }

    /// `Φ_{2p}`
    pub fn modulus(&self) -> &UnivariatePolynomial {
        &self.data.modulus
    }

    /// `φ(2p)`, the dimension over the rationals.
    pub fn degree(&self) -> usize {
        self.data.modulus.degree().finite().expect("nonzero modulus") as usize
    }

    pub fn zero(&self) -> CyclotomicElement {
        CyclotomicElement {
            field: self.clone(),
            value: UnivariatePolynomial::zero(VAR),
        }
    }

    pub fn one(&self) -> CyclotomicElement {
        self.rational(ExactRational::one())
    }

    pub fn rational(&self, q: ExactRational) -> CyclotomicElement {
        CyclotomicElement {
            field: self.clone(),
            value: UnivariatePolynomial::constant(VAR, q),
        }
    }

    pub fn integer(&self, n: i64) -> CyclotomicElement {
        self.rational(int(n))
    }

    /// `A^k` for any integer `k`, using `A^{2p} = 1`.
    pub fn a_power(&self, k: i64) -> CyclotomicElement {
        let e = k.rem_euclid(2 * self.p() as i64) as usize;
        self.element(UnivariatePolynomial::monomial(VAR, e, ExactRational::one()))
    }

    /// Reduces an arbitrary polynomial in `A` into the field.
    pub fn element(&self, value: UnivariatePolynomial) -> CyclotomicElement {
        let value = if value.var() == VAR {
            value
        } else {
            UnivariatePolynomial::new(VAR, value.coefficients().to_vec())
        };
        let (_, r) = value.div_rem(self.modulus());
        CyclotomicElement {
            field: self.clone(),
            value: r,
        }
    }
}

/// Element of `Q(ζ_{2p})` stored as its reduced representative of degree
/// `< φ(2p)` in `A`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CyclotomicElement {
    field: CyclotomicField,
    value: UnivariatePolynomial,
}

impl CyclotomicElement {
    pub fn field(&self) -> &CyclotomicField {
        &self.field
    }

    /// Coefficients of the reduced representative, ascending powers of `A`,
    /// padded to length `φ(2p)`.
    pub fn coefficients(&self) -> Vec<ExactRational> {
        let mut cs = self.value.coefficients().to_vec();
        cs.resize(self.field.degree(), ExactRational::zero());
        cs
    }

    pub fn representative(&self) -> &UnivariatePolynomial {
        &self.value
    }

    pub fn is_zero(&self) -> bool {
        self.value.is_zero()
    }

    /// The element as a rational number, if it lies in `Q`.
    pub fn as_rational(&self) -> Option<ExactRational> {
        match self.value.degree().finite() {
            None => Some(ExactRational::zero()),
            Some(0) => Some(self.value.coefficient(0)),
            Some(_) => None,
        }
    }

    /// Inverse via the extended Euclidean algorithm against `Φ_{2p}`.
    pub fn inverse(&self) -> Result<CyclotomicElement> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let (mut r0, mut r1) = (self.field.modulus().clone(), self.value.clone());
        let (mut t0, mut t1) = (
            UnivariatePolynomial::zero(VAR),
            UnivariatePolynomial::constant(VAR, ExactRational::one()),
        );
        while !r1.is_zero() {
            let (q, r) = r0.div_rem(&r1);
            let t = &t0 - &(&q * &t1);
            r0 = core::mem::replace(&mut r1, r);
            t0 = core::mem::replace(&mut t1, t);
        }
        // Φ_{2p} is irreducible, so the gcd r0 is a nonzero constant.
        debug_assert_eq!(r0.degree().finite(), Some(0));
        let c = r0.coefficient(0);
        Ok(self.field.element(t0.scale(&(ExactRational::one() / c))))
    }

    pub fn checked_div(&self, rhs: &CyclotomicElement) -> Result<CyclotomicElement> {
        self.same_field(rhs)?;
        Ok(self * &rhs.inverse()?)
    }

    pub fn pow(&self, k: u32) -> CyclotomicElement {
        let mut result = self.field.one();
        let mut base = self.clone();
        let mut k = k;
        while k > 0 {
            if k & 1 == 1 {
                result = &result * &base;
            }
            k >>= 1;
            if k > 0 {
                base = &base * &base;
            }
        }
        result
    }

    pub fn scale(&self, q: &ExactRational) -> CyclotomicElement {
        CyclotomicElement {
            field: self.field.clone(),
            value: self.value.scale(q),
        }
    }

    fn same_field(&self, rhs: &CyclotomicElement) -> Result<()> {
        if self.field.p() != rhs.field.p() {
            return Err(Error::FieldMismatch(self.field.p(), rhs.field.p()));
        }
        Ok(())
    }

    fn assert_same_field(&self, rhs: &CyclotomicElement) {
        if let Err(e) = self.same_field(rhs) {
            panic!("{e}");
        }
    }
}

impl Add for &CyclotomicElement {
    type Output = CyclotomicElement;

    fn add(self, rhs: &CyclotomicElement) -> CyclotomicElement {
        self.assert_same_field(rhs);
        CyclotomicElement {
            field: self.field.clone(),
            value: &self.value + &rhs.value,
        }
    }
}

impl Sub for &CyclotomicElement {
    type Output = CyclotomicElement;

    fn sub(self, rhs: &CyclotomicElement) -> CyclotomicElement {
        self.assert_same_field(rhs);
        CyclotomicElement {
            field: self.field.clone(),
            value: &self.value - &rhs.value,
        }
    }
}

impl Mul for &CyclotomicElement {
    type Output = CyclotomicElement;

    fn mul(self, rhs: &CyclotomicElement) -> CyclotomicElement {
        self.assert_same_field(rhs);
        self.field.element(&self.value * &rhs.value)
    }
}

impl Neg for &CyclotomicElement {
    type Output = CyclotomicElement;

    fn neg(self) -> CyclotomicElement {
        CyclotomicElement {
            field: self.field.clone(),
            value: -&self.value,
        }
    }
}

impl fmt::Display for CyclotomicElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.value.fmt(f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rat;

    fn ints(cs: &[i64]) -> UnivariatePolynomial {
        UnivariatePolynomial::new(VAR, cs.iter().map(|&c| int(c)).collect())
    }

    #[test]
    fn small_cyclotomic_polynomials() {
        assert_eq!(CyclotomicField::new(3).unwrap().modulus(), &ints(&[1, -1, 1]));
        assert_eq!(CyclotomicField::new(5).unwrap().modulus(), &ints(&[1, -1, 1, -1, 1]));
        assert_eq!(cyclotomic_polynomial(12), ints(&[1, 0, -1, 0, 1]));
    }

    #[test]
    fn rejects_bad_levels() {
        assert_eq!(CyclotomicField::new(4), Err(Error::InvalidLevel(4)));
        assert_eq!(CyclotomicField::new(1), Err(Error::InvalidLevel(1)));
    }

    #[test]
    fn a_is_a_primitive_2p_th_root() {
        for p in [3u64, 5, 7, 9, 15] {
            let f = CyclotomicField::new(p).unwrap();
            assert!((&f.a_power(p as i64) + &f.one()).is_zero(), "p={p}");
            assert_eq!(f.a_power(2 * p as i64), f.one());
            assert_eq!(&f.a_power(1) * &f.a_power(-1), f.one());
            // Φ_{2p}(x) = Φ_p(−x)
            let phi_p = cyclotomic_polynomial(p);
            let neg_x = ints(&[0, -1]);
            assert_eq!(&phi_p.compose(&neg_x), f.modulus());
        }
    }

    #[test]
    fn inverse_round_trip() {
        let f = CyclotomicField::new(7).unwrap();
        let x = f.element(UnivariatePolynomial::new(
            VAR,
            alloc::vec![rat(3, 2), int(-1), int(0), rat(5, 7)],
        ));
        assert_eq!(&x * &x.inverse().unwrap(), f.one());
        assert_eq!(f.zero().inverse(), Err(Error::DivisionByZero));
    }

    #[test]
    fn mixing_fields_is_an_error() {
        let a = CyclotomicField::new(3).unwrap().one();
        let b = CyclotomicField::new(5).unwrap().one();
        assert_eq!(a.checked_div(&b), Err(Error::FieldMismatch(3, 5)));
    }
}
