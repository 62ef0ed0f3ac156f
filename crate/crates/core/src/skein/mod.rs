//! Solid-torus skein algebra and exact evaluations at `A = ζ_{2p}`.
//!
//! Only `D²` is ever formed; `D` itself is never chosen, which is enough for
//! `Σ_g × S¹` (odd first Betti number).

mod annulus;
mod cyclotomic;
mod laurent;

use alloc::vec::Vec;

use crate::exact::ExactRational;
use crate::{Error, Result};

pub use annulus::{e_product, AnnulusSkein};
pub use cyclotomic::{cyclotomic_polynomial, CyclotomicElement, CyclotomicField};
pub use laurent::{generic_quantum_integer, LaurentPolynomial};

/// `A^k − A^{−k}`
fn a_difference(field: &CyclotomicField, k: i64) -> CyclotomicElement {
    &field.a_power(k) - &field.a_power(-k)
}

/// `[n] = (A^{2n} − A^{−2n}) / (A² − A^{−2})`, computed by field division.
pub fn quantum_integer(n: i64, field: &CyclotomicField) -> CyclotomicElement {
    a_difference(field, 2 * n)
        .checked_div(&a_difference(field, 2))
        .expect("A² − A^{−2} is nonzero for p ≥ 3")
}

/// `⟨e_i⟩ = (−1)^i [i+1]`, the bracket of `e_i` on the standard unknot.
pub fn bracket_e(i: u64, field: &CyclotomicField) -> CyclotomicElement {
    let q = quantum_integer(i as i64 + 1, field);
    if i.is_multiple_of(2) {
        q
    } else {
        -&q
    }
}

/// Coefficients `⟨e_0⟩, …, ⟨e_{d−1}⟩` of `Ω_p = Σ_{i<d} ⟨e_i⟩ e_i`, with
/// `d = (p−1)/2`.
pub fn omega_coefficients(field: &CyclotomicField) -> Vec<CyclotomicElement> {
    let d = (field.p() - 1) / 2;
    (0..d).map(|i| bracket_e(i, field)).collect()
}

/// `D² = −p / (A² − A^{−2})²`
pub fn d_squared(field: &CyclotomicField) -> CyclotomicElement {
    let denom = a_difference(field, 2).pow(2);
    field
        .integer(-(field.p() as i64))
        .checked_div(&denom)
        .expect("A² − A^{−2} is nonzero for p ≥ 3")
}

/// Both closed forms of the invariant of `Σ_g × S¹` with a non-separating
/// curve colored 1.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FlatCheck {
    /// `(−p / (A − A^{−1})²)^{g−1}`
    pub lhs: CyclotomicElement,
    /// `(D² / ⟨e_{d−1}⟩²)^{g−1}`
    pub rhs: CyclotomicElement,
    pub equal: bool,
}

pub fn lemma_flat_check(g: u32, field: &CyclotomicField) -> Result<FlatCheck> {
    if g < 1 {
        return Err(Error::InvalidGenus { genus: g, min: 1 });
    }
    let p = field.p() as i64;
    let base_lhs = field.integer(-p).checked_div(&a_difference(field, 1).pow(2))?;
    let d = (field.p() - 1) / 2;
    let base_rhs = d_squared(field).checked_div(&bracket_e(d - 1, field).pow(2))?;
    let lhs = base_lhs.pow(g - 1);
    let rhs = base_rhs.pow(g - 1);
    let equal = lhs == rhs;
    Ok(FlatCheck { lhs, rhs, equal })
}

/// `⟨e_{2s−1}⟩ = ⟨e_{p−2s−1}⟩`, the bracket-level shadow of recoloring an
/// odd color `2s−1` by `p−2s−1`.
pub fn recoloring_check(s: u64, field: &CyclotomicField) -> Result<bool> {
    let d = (field.p() - 1) / 2;
    if s < 1 || s > d {
        return Err(Error::IndexOutOfRange { s, d });
    }
    Ok(bracket_e(2 * s - 1, field) == bracket_e(field.p() - 2 * s - 1, field))
}

/// Which odd-color denominator to use in the non-separating curve formula.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum OddDenominator {
    /// `A^{2i−1} − A^{−(2i−1)}`; reproduces the color-1 closed form.
    #[default]
    Symmetric,
    /// `A^{2i−1} − A^{−2i−1}`, kept for comparison only.
    Shifted,
}

/// Split form of the invariant of `γ` colored `m` (odd `m`):
/// `(−p)^{g−1} · Σ_i (A^{2i−1} − A^{−(2i−1)})^{−(2g−2)}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CurveTerms {
    /// `(−p)^{g−1}` for odd colors; `−(−p)^{g−1}` for even colors.
    pub scalar: ExactRational,
    /// The root-of-unity sum multiplying `scalar`.
    pub sum: CyclotomicElement,
}

/// Root-of-unity part of the curve formula. Fails when a denominator
/// vanishes, which happens once the color is too large for `p`.
pub fn nonseparating_curve_terms(
    g: u32,
    m: u64,
    field: &CyclotomicField,
    reading: OddDenominator,
) -> Result<CurveTerms> {
    if g < 1 {
        return Err(Error::InvalidGenus { genus: g, min: 1 });
    }
    let p = field.p();
    let power = num_traits::pow(crate::exact::int(-(p as i64)), (g - 1) as usize);
    let (count, sign) = if m.is_multiple_of(2) {
        (m / 2, -1)
    } else {
        (m.div_ceil(2), 1)
    };
    let mut sum = field.zero();
    for i in 1..=count {
        let denom = if m.is_multiple_of(2) {
            a_difference(field, 2 * i as i64)
        } else {
            match reading {
                OddDenominator::Symmetric => a_difference(field, 2 * i as i64 - 1),
                OddDenominator::Shifted => &field.a_power(2 * i as i64 - 1) - &field.a_power(-(2 * i as i64) - 1),
            }
        };
        if denom.is_zero() {
            return Err(Error::VanishingDenominator { index: i, color: m, p });
        }
        sum = &sum + &denom.pow(2 * g - 2).inverse()?;
    }
    Ok(CurveTerms {
        scalar: power * crate::exact::int(sign),
        sum,
    })
}

/// Invariant of `Σ_g × S¹` containing a non-separating curve `γ` colored `m`
/// (framing tangent to the surface):
/// even `m`: `D_g^{(0)} − Σ_{i=1}^{m/2} (−p)^{g−1}/(A^{2i} − A^{−2i})^{2g−2}`;
/// odd `m`: `Σ_{i=1}^{(m+1)/2} (−p)^{g−1}/(A^{2i−1} − A^{−(2i−1)})^{2g−2}`.
pub fn eval_nonseparating_curve(
    g: u32,
    m: u64,
    field: &CyclotomicField,
    reading: OddDenominator,
) -> Result<CyclotomicElement> {
    let terms = nonseparating_curve_terms(g, m, field, reading)?;
    let scaled = terms.sum.scale(&terms.scalar);
    if m % 2 == 1 {
        return Ok(scaled);
    }
    let d0 = crate::verlinde::dimension(g, field.p(), 0)?;
    Ok(&field.rational(ExactRational::from_integer(d0.into())) + &scaled)
}
