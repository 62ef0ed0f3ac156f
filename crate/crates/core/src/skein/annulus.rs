use alloc::vec;
use alloc::vec::Vec;
use core::ops::Mul;

use num_traits::{One, Zero};

use crate::exact::{ExactRational, UnivariatePolynomial};

/// Element `Σ a_i e_i` of the skein algebra of the solid torus, where
/// `e_0 = 1`, `e_1 = z` and `e_{i+1} = z·e_i − e_{i−1}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AnnulusSkein {
    coeffs: Vec<ExactRational>,
}

impl AnnulusSkein {
    pub fn new(mut coeffs: Vec<ExactRational>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        AnnulusSkein { coeffs }
    }

    /// The basis element `e_i`.
    pub fn basis(i: usize) -> Self {
        let mut coeffs = vec![ExactRational::zero(); i + 1];
        coeffs[i] = ExactRational::one();
        Self::new(coeffs)
    }

    pub fn coefficients(&self) -> &[ExactRational] {
        &self.coeffs
    }

    pub fn coefficient(&self, i: usize) -> ExactRational {
        self.coeffs.get(i).cloned().unwrap_or_else(ExactRational::zero)
    }

    /// Rewrites the element as a polynomial in `z`.
    pub fn to_z_polynomial(&self) -> UnivariatePolynomial {
        let basis = e_basis_in_z(self.coeffs.len());
        self.coeffs
            .iter()
            .zip(&basis)
            .fold(UnivariatePolynomial::zero("z"), |acc, (a, e)| &acc + &e.scale(a))
    }

    /// Inverse of [`Self::to_z_polynomial`]: peels off the top `z`-power
    /// (each `e_n` is monic of degree `n`).
    pub fn from_z_polynomial(poly: &UnivariatePolynomial) -> Self {
        let Some(deg) = poly.degree().finite() else {
            return Self::new(Vec::new());
        };
        let basis = e_basis_in_z(deg as usize + 1);
        let mut rest = poly.clone();
        let mut coeffs = vec![ExactRational::zero(); deg as usize + 1];
        for n in (0..=deg as usize).rev() {
            let c = rest.coefficient(n);
            if !c.is_zero() {
                rest = &rest - &basis[n].scale(&c);
                coeffs[n] = c;
            }
        }
        debug_assert!(rest.is_zero());
        Self::new(coeffs)
    }
}

/// `e_0, …, e_{n−1}` as polynomials in `z`.
fn e_basis_in_z(n: usize) -> Vec<UnivariatePolynomial> {
    let z = UnivariatePolynomial::x("z");
    let mut out: Vec<UnivariatePolynomial> = Vec::with_capacity(n);
    for i in 0..n {
        let next = match i {
            0 => UnivariatePolynomial::constant("z", ExactRational::one()),
            1 => z.clone(),
            _ => &(&z * &out[i - 1]) - &out[i - 2],
        };
        out.push(next);
    }
    out
}

/// `e_i · e_j = Σ_{k = |i−j|, step 2}^{i+j} e_k`.
pub fn e_product(i: usize, j: usize) -> AnnulusSkein {
    let mut coeffs = vec![ExactRational::zero(); i + j + 1];
    for k in (i.abs_diff(j)..=i + j).step_by(2) {
        coeffs[k] = ExactRational::one();
    }
    AnnulusSkein::new(coeffs)
}

/// Product computed through the `z`-polynomial picture.
impl Mul for &AnnulusSkein {
    type Output = AnnulusSkein;

    fn mul(self, rhs: &AnnulusSkein) -> AnnulusSkein {
        AnnulusSkein::from_z_polynomial(&(&self.to_z_polynomial() * &rhs.to_z_polynomial()))
    }
}
