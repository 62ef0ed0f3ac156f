use alloc::collections::{BTreeMap, BTreeSet};
use alloc::format;
use alloc::vec::Vec;

use num_traits::Zero;

use super::{odd_color_polynomial, verlinde_polynomial};
use crate::bernoulli::{bernoulli_half_value, bernoulli_numbers};
use crate::exact::{factorial, int, BivariatePolynomial, Degree, ExactRational, UnivariatePolynomial};
use crate::{Error, Result};

/// Which family of colors a decomposition describes.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ColorKind {
    /// `D_g^{(2c)} = Σ_j φ_j(c) p^j`
    Even,
    /// `D_g^{(p−2s−1)} = Σ_j φ̃_j(s) p^j`
    Odd,
}

/// `E = {g−1, g+1, …, 3g−3}`
pub fn exponent_set(g: u32) -> BTreeSet<u32> {
    (0..g).map(|k| g - 1 + 2 * k).collect()
}

/// Exponents `j` at which the decomposition of the given kind is nonzero.
pub fn expected_support(g: u32, kind: ColorKind) -> BTreeSet<u32> {
    let mut support = exponent_set(g);
    if kind == ColorKind::Even {
        support.insert(g);
    }
    support
}

/// A Verlinde polynomial grouped by powers of `p`, with its structure
/// already validated.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VerlindeDecomposition {
    genus: u32,
    kind: ColorKind,
    parts: BTreeMap<u32, UnivariatePolynomial>,
}

impl VerlindeDecomposition {
    pub fn genus(&self) -> u32 {
        self.genus
    }

    pub fn kind(&self) -> ColorKind {
        self.kind
    }

    pub fn parts(&self) -> &BTreeMap<u32, UnivariatePolynomial> {
        &self.parts
    }

    /// `Σ_j parts[j]·p^j`
    pub fn reconstruct(&self) -> BivariatePolynomial {
        let vars = match self.kind {
            ColorKind::Even => crate::exact::Vars::PC,
            ColorKind::Odd => crate::exact::Vars::PS,
        };
        BivariatePolynomial::from_terms(
            vars,
            self.parts.iter().flat_map(|(&j, phi)| {
                phi.coefficients()
                    .iter()
                    .enumerate()
                    .map(move |(k, c)| ((j, k as u32), c.clone()))
            }),
        )
    }

    /// Rows of the coefficient matrix: `φ_j` evaluated at the given points,
    /// one row per nonzero part in increasing `j`.
    pub fn value_rows(&self, points: &[ExactRational]) -> Vec<Vec<ExactRational>> {
        self.parts
            .values()
            .map(|phi| points.iter().map(|x| phi.evaluate(x)).collect())
            .collect()
    }
}

pub fn decompose(g: u32, kind: ColorKind) -> Result<VerlindeDecomposition> {
    if g < 1 {
        return Err(Error::InvalidGenus { genus: g, min: 1 });
    }
    let source = match kind {
        ColorKind::Even => verlinde_polynomial(g),
        ColorKind::Odd => odd_color_polynomial(g),
    };
    decompose_polynomial(g, kind, &source)
}

/// Groups `source` by powers of `p` and validates support and exact degrees.
pub fn decompose_polynomial(g: u32, kind: ColorKind, source: &BivariatePolynomial) -> Result<VerlindeDecomposition> {
    let parts = source.collect_first();
    let support = expected_support(g, kind);
    for &j in parts.keys() {
        if !support.contains(&j) {
            return Err(Error::StructureViolation {
                j,
                detail: format!("unexpected nonzero part {}", parts[&j]),
            });
        }
    }
    for &j in &support {
        let Some(phi) = parts.get(&j) else {
            return Err(Error::StructureViolation {
                j,
                detail: "missing part".into(),
            });
        };
        let expected = Degree::Finite(3 * g - 2 - j);
        if phi.degree() != expected {
            return Err(Error::StructureViolation {
                j,
                detail: format!("degree {} instead of {expected}", phi.degree()),
            });
        }
        if phi.leading_coefficient().is_none_or(Zero::is_zero) {
            return Err(Error::StructureViolation {
                j,
                detail: "vanishing leading coefficient".into(),
            });
        }
    }
    Ok(VerlindeDecomposition { genus: g, kind, parts })
}

/// How the leading coefficient of one part relates to a Bernoulli value.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LeadingLink {
    pub j: u32,
    /// Index `n` of `B_n` (even kind) or of `B_n(1/2)` (odd kind).
    pub bernoulli_index: u32,
    pub leading: ExactRational,
    pub bernoulli_value: ExactRational,
    /// `leading / bernoulli_value`
    pub ratio: ExactRational,
    /// Prefactor predicted by the top homogeneous part.
    pub predicted_ratio: ExactRational,
}

impl LeadingLink {
    pub fn holds(&self) -> bool {
        !self.ratio.is_zero() && self.ratio == self.predicted_ratio
    }
}

/// For every nonzero part, expresses its leading coefficient as a multiple of
/// a Bernoulli value: `φ_{g−1+2k} ~ B_{2k}`, `φ_g ~ B_1`, `φ̃_{g−1+2k} ~ B_{2k}(1/2)`.
pub fn leading_links(decomposition: &VerlindeDecomposition) -> Vec<LeadingLink> {
    let g = decomposition.genus;
    let table = bernoulli_numbers(2 * g as usize);
    let sign = if g.is_multiple_of(2) { int(1) } else { int(-1) };
    let inv_fact = |a: u32, b: u32| ExactRational::new(1.into(), factorial(a) * factorial(b));
    decomposition
        .parts
        .iter()
        .map(|(&j, phi)| {
            let leading = phi.leading_coefficient().cloned().unwrap_or_else(ExactRational::zero);
            let n = if j == g && decomposition.kind == ColorKind::Even {
                1
            } else {
                j + 1 - g
            };
            let (bernoulli_value, predicted_ratio) = match decomposition.kind {
                ColorKind::Even => (table.get(n as usize).clone(), &sign * inv_fact(n, 2 * g - 1 - n)),
                ColorKind::Odd => (bernoulli_half_value(n as usize), -&sign * inv_fact(n, 2 * g - 1 - n)),
            };
            let ratio = if bernoulli_value.is_zero() {
                ExactRational::zero()
            } else {
                &leading / &bernoulli_value
            };
            LeadingLink {
                j,
                bernoulli_index: n,
                leading,
                bernoulli_value,
                ratio,
                predicted_ratio,
            }
        })
        .collect()
}
