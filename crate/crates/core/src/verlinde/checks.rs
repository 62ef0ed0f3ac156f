use alloc::format;
use alloc::string::ToString;

use super::residue::{residue_parts, substitute_half};
use crate::bernoulli::bernoulli_numbers;
use crate::exact::{factorial, int, BivariatePolynomial, Degree, ExactRational, Vars};
use crate::{Error, Result};

/// Comparison of the top homogeneous part of `D_g^{(2c)}` with its
/// Bernoulli closed form.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LeadingTermReport {
    pub genus: u32,
    /// `homogeneous_part(D_g^{(2c)}, 3g−2)`
    pub actual: BivariatePolynomial,
    /// `(−1)^g p^{g−1} Σ_{k=0}^{2g−1} B_k/(k!(2g−1−k)!) c^{2g−1−k} p^k`
    pub expected: BivariatePolynomial,
    pub higher_parts_vanish: bool,
}

impl LeadingTermReport {
    pub fn passed(&self) -> bool {
        self.higher_parts_vanish && self.actual == self.expected
    }
}

/// The closed form of the degree-`3g−2` part.
pub fn leading_term_closed_form(g: u32) -> BivariatePolynomial {
    let table = bernoulli_numbers(2 * g as usize);
    let sign = if g.is_multiple_of(2) { int(1) } else { int(-1) };
    BivariatePolynomial::from_terms(
        Vars::PC,
        (0..2 * g).map(|k| {
            let c =
                &sign * table.get(k as usize) / ExactRational::from_integer(factorial(k) * factorial(2 * g - 1 - k));
            ((g - 1 + k, 2 * g - 1 - k), c)
        }),
    )
}

pub fn leading_term_check(g: u32) -> Result<LeadingTermReport> {
    if g < 1 {
        return Err(Error::InvalidGenus { genus: g, min: 1 });
    }
    let d = super::verlinde_polynomial(g);
    let top = 3 * g - 2;
    let higher_parts_vanish = d.total_degree() <= Degree::Finite(top);
    Ok(LeadingTermReport {
        genus: g,
        actual: d.homogeneous_part(top),
        expected: leading_term_closed_form(g),
        higher_parts_vanish,
    })
}

/// Structure of `D_g` with respect to parity in `p` and `s`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParityReport {
    pub genus: u32,
    /// `X(p, c)`, even in `p`, with `D_g^{(2c)} = p^{g−1}X + p^g Y`.
    pub x: BivariatePolynomial,
    /// `Y(c)`
    pub y: BivariatePolynomial,
    /// `D_g^{(p−2s−1)} / p^{g−1}`, even in `p` and odd in `s`.
    pub odd_quotient: BivariatePolynomial,
}

fn monomial_name(vars: Vars, i: u32, j: u32) -> alloc::string::String {
    format!("{}^{}*{}^{}", vars.0, i, vars.1, j)
}

/// Checks `D_g^{(2c)} = p^{g−1}X(p,c) + p^g Y(c)` with `X` even in `p` and
/// `X`, `Y` matching the residue and binomial terms, and that
/// `D_g^{(p−2s−1)}/p^{g−1}` is a polynomial even in `p` and odd in `s`.
pub fn parity_checks(g: u32) -> Result<ParityReport> {
    if g < 1 {
        return Err(Error::InvalidGenus { genus: g, min: 1 });
    }
    let parts = residue_parts(g);
    let d = &parts.x.mul_first_power(g - 1) + &parts.y.mul_first_power(g);
    let quotient = divide_by_p_power(&d, g - 1)?;
    let x = quotient.first_parity_part(0);
    let odd_p = quotient.first_parity_part(1);
    for (&(i, j), _) in odd_p.terms() {
        if i != 1 {
            return Err(Error::ParityViolation {
                monomial: monomial_name(d.vars(), i + g - 1, j),
                detail: "odd power of p beyond p^g".to_string(),
            });
        }
    }
    let y = odd_p.div_first_power(1).expect("all odd terms have p^1");
    if x != parts.x {
        return Err(Error::ParityViolation {
            monomial: "X".to_string(),
            detail: "even part differs from the residue term".to_string(),
        });
    }
    if y != parts.y {
        return Err(Error::ParityViolation {
            monomial: "Y".to_string(),
            detail: "p^g part differs from the binomial term".to_string(),
        });
    }

    let odd_quotient = divide_by_p_power(&substitute_half(&d), g - 1)?;
    for (&(i, j), _) in odd_quotient.terms() {
        if i % 2 != 0 || j % 2 != 1 {
            return Err(Error::ParityViolation {
                monomial: monomial_name(odd_quotient.vars(), i + g - 1, j),
                detail: "expected even power of p and odd power of s".to_string(),
            });
        }
    }
    Ok(ParityReport {
        genus: g,
        x,
        y,
        odd_quotient,
    })
}

fn divide_by_p_power(poly: &BivariatePolynomial, k: u32) -> Result<BivariatePolynomial> {
    poly.div_first_power(k).ok_or_else(|| {
        let (&(i, j), _) = poly.terms().find(|(&(i, _), _)| i < k).expect("some term below p^k");
        Error::ParityViolation {
            monomial: monomial_name(poly.vars(), i, j),
            detail: format!("not divisible by p^{k}"),
        }
    })
}
