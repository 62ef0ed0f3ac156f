//! Verlinde dimension polynomials for the SO(3) theory at odd level `p`.
//!
//! `D_g^{(2c)}` is built from the residue formula as an exact polynomial in
//! `(p, c)`; odd colors are reached through the recoloring `2s−1 ↦ p−2s−1`,
//! i.e. the substitution `c = (p−1)/2 − s`. The fusion recursion in
//! [`fusion`] is an independent route to the same integers.

mod checks;
mod decompose;
mod fusion;
mod residue;

use alloc::format;
use alloc::vec::Vec;

use num_bigint::{BigInt, BigUint};
use num_traits::{Signed, Zero};

use crate::exact::{int, rat, BivariatePolynomial, ExactRational};
use crate::{Error, Result};

pub use checks::{leading_term_check, leading_term_closed_form, parity_checks, LeadingTermReport, ParityReport};
pub use decompose::{
    decompose, decompose_polynomial, expected_support, exponent_set, leading_links, ColorKind, LeadingLink,
    VerlindeDecomposition,
};
pub use fusion::{fusion_dimension, FusionOracle, FusionTable};
pub use residue::{odd_color_polynomial, residue_parts, substitute_half, verlinde_polynomial, ResidueParts};

fn check_level(p: u64) -> Result<()> {
    if p < 3 || p.is_multiple_of(2) {
        return Err(Error::InvalidLevel(p));
    }
    Ok(())
}

/// Dimension of the genus-`g` space with one point colored `m`,
/// `0 ≤ m ≤ p−2`. Odd colors are recolored to `p−m−2`.
pub fn dimension(g: u32, p: u64, m: u64) -> Result<BigUint> {
    if g < 1 {
        return Err(Error::InvalidGenus { genus: g, min: 1 });
    }
    check_level(p)?;
    dimension_from_polynomial(&verlinde_polynomial(g), p, m)
}

/// Same as [`dimension`], reusing an already computed `D_g^{(2c)}`.
pub fn dimension_from_polynomial(even: &BivariatePolynomial, p: u64, m: u64) -> Result<BigUint> {
    check_level(p)?;
    if m > p - 2 {
        return Err(Error::ColorOutOfRange { color: m, max: p - 2 });
    }
    let even_color = if m.is_multiple_of(2) { m } else { p - m - 2 };
    let value = even.evaluate(&int(p as i64), &rat(even_color as i64, 2));
    to_dimension(&value)
}

fn to_dimension(value: &ExactRational) -> Result<BigUint> {
    if !value.is_integer() || value.is_negative() {
        return Err(Error::NonIntegral(format!("{value}")));
    }
    Ok(value.to_integer().to_biguint().expect("nonnegative"))
}

/// One disagreement between the residue formula and the fusion recursion.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Mismatch {
    pub genus: u32,
    pub p: u64,
    /// The odd index `s`; the color is `p−2s−1` (or `2s−1` after recoloring).
    pub s: u64,
    pub residue: ExactRational,
    pub fusion: BigUint,
}

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct CrosscheckReport {
    pub comparisons: usize,
    pub mismatches: Vec<Mismatch>,
}

impl CrosscheckReport {
    pub fn passed(&self) -> bool {
        self.mismatches.is_empty() && self.comparisons > 0
    }
}

/// Compares the residue formula against the fusion recursion for every
/// `1 ≤ g ≤ g_max`, odd `3 ≤ p ≤ p_max` and `1 ≤ s ≤ (p−1)/2`, both through
/// the odd-color polynomial at `(p, s)` and through [`dimension`] at the two
/// colors `p−2s−1` and `2s−1`.
pub fn oracle_crosscheck(g_max: u32, p_max: u64) -> CrosscheckReport {
    let mut report = CrosscheckReport::default();
    let polys: Vec<_> = (1..=g_max)
        .map(|g| (verlinde_polynomial(g), odd_color_polynomial(g)))
        .collect();
    for p in (3..=p_max).step_by(2) {
        let mut oracle = FusionOracle::new(p).expect("odd level");
        for (g, (even, odd)) in (1..=g_max).zip(&polys) {
            for s in 1..=(p - 1) / 2 {
                let fusion = oracle.dimension(g, s).expect("index in range").clone();
                let expected = ExactRational::from_integer(BigInt::from(fusion.clone()));
                let from_odd = odd.evaluate(&int(p as i64), &int(s as i64));
                let from_colors = [p - 2 * s - 1, 2 * s - 1].map(|m| {
                    dimension_from_polynomial(even, p, m)
                        .map(|v| ExactRational::from_integer(v.into()))
                        .unwrap_or_else(|_| ExactRational::zero() - int(1))
                });
                for residue in core::iter::once(from_odd).chain(from_colors) {
                    report.comparisons += 1;
                    if residue != expected {
                        report.mismatches.push(Mismatch {
                            genus: g,
                            p,
                            s,
                            residue,
                            fusion: fusion.clone(),
                        });
                    }
                }
            }
        }
    }
    report
}
