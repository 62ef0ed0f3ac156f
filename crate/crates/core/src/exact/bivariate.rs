use alloc::collections::BTreeMap;
use alloc::vec::Vec;
use core::cmp::Reverse;
use core::fmt;
use core::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Signed, Zero};

use super::{fmt_rational, Degree, ExactRational, UnivariatePolynomial};

/// Names of the two variables of a [`BivariatePolynomial`]. The first one is
/// always the level `p` in this crate.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Vars(pub &'static str, pub &'static str);

impl Vars {
    pub const PC: Vars = Vars("p", "c");
    pub const PS: Vars = Vars("p", "s");
}

/// Sparse polynomial in two variables keyed by exponent pairs
/// `(first, second)`. Zero coefficients are never stored.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct BivariatePolynomial {
    vars: Vars,
    terms: BTreeMap<(u32, u32), ExactRational>,
}

impl BivariatePolynomial {
    pub fn zero(vars: Vars) -> Self {
        BivariatePolynomial {
            vars,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(vars: Vars, c: ExactRational) -> Self {
        Self::monomial(vars, 0, 0, c)
    }

    pub fn monomial(vars: Vars, i: u32, j: u32, c: ExactRational) -> Self {
        let mut poly = Self::zero(vars);
        poly.add_term(i, j, c);
        poly
    }

    pub fn from_terms(vars: Vars, terms: impl IntoIterator<Item = ((u32, u32), ExactRational)>) -> Self {
        let mut poly = Self::zero(vars);
        for ((i, j), c) in terms {
            poly.add_term(i, j, c);
        }
        poly
    }

    pub fn add_term(&mut self, i: u32, j: u32, c: ExactRational) {
        if c.is_zero() {
            return;
        }
        let slot = self.terms.entry((i, j)).or_insert_with(ExactRational::zero);
        *slot += c;
        if slot.is_zero() {
            self.terms.remove(&(i, j));
        }
    }

    pub fn vars(&self) -> Vars {
        self.vars
    }

    /// Same terms, renamed variables.
    pub fn with_vars(mut self, vars: Vars) -> Self {
        self.vars = vars;
        self
    }

    pub fn terms(&self) -> impl Iterator<Item = (&(u32, u32), &ExactRational)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, i: u32, j: u32) -> ExactRational {
        self.terms.get(&(i, j)).cloned().unwrap_or_else(ExactRational::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn total_degree(&self) -> Degree {
        self.terms
            .keys()
            .map(|&(i, j)| Degree::Finite(i + j))
            .max()
            .unwrap_or(Degree::NegInfinity)
    }

    pub fn degree_in_first(&self) -> Degree {
        self.terms
            .keys()
            .map(|&(i, _)| Degree::Finite(i))
            .max()
            .unwrap_or(Degree::NegInfinity)
    }

    pub fn degree_in_second(&self) -> Degree {
        self.terms
            .keys()
            .map(|&(_, j)| Degree::Finite(j))
            .max()
            .unwrap_or(Degree::NegInfinity)
    }

    pub fn scale(&self, k: &ExactRational) -> Self {
        Self::from_terms(self.vars, self.terms.iter().map(|(&e, c)| (e, c * k)))
    }

    pub fn evaluate(&self, x: &ExactRational, y: &ExactRational) -> ExactRational {
        self.terms.iter().fold(ExactRational::zero(), |acc, (&(i, j), c)| {
            acc + c * pow(x, i) * pow(y, j)
        })
    }

    /// Sum of the terms of total degree exactly `n`.
    pub fn homogeneous_part(&self, n: u32) -> Self {
        Self::from_terms(
            self.vars,
            self.terms
                .iter()
                .filter(|(&(i, j), _)| i + j == n)
                .map(|(&e, c)| (e, c.clone())),
        )
    }

    /// Replace the second variable by `replacement` (a polynomial in the
    /// output variables); the first variable is kept.
    pub fn substitute_second(&self, replacement: &BivariatePolynomial) -> Self {
        let out_vars = replacement.vars;
        let first_power = |i: u32| Self::monomial(out_vars, i, 0, ExactRational::one());
        let mut powers: Vec<BivariatePolynomial> = Vec::new();
        let mut acc = Self::zero(out_vars);
        for (&(i, j), c) in &self.terms {
            while powers.len() <= j as usize {
                let next = match powers.last() {
                    None => Self::constant(out_vars, ExactRational::one()),
                    Some(prev) => prev * replacement,
                };
                powers.push(next);
            }
            acc = &acc + &(&first_power(i) * &powers[j as usize]).scale(c);
        }
        acc
    }

    /// Group by powers of the first variable: returns `j ↦ φ_j` with
    /// `self = Σ φ_j(second)·first^j`. Only nonzero parts are present.
    pub fn collect_first(&self) -> BTreeMap<u32, UnivariatePolynomial> {
        let mut parts: BTreeMap<u32, Vec<ExactRational>> = BTreeMap::new();
        for (&(i, j), c) in &self.terms {
            let slot = parts.entry(i).or_default();
            if slot.len() <= j as usize {
                slot.resize(j as usize + 1, ExactRational::zero());
            }
            slot[j as usize] = c.clone();
        }
        parts
            .into_iter()
            .map(|(i, cs)| (i, UnivariatePolynomial::new(self.vars.1, cs)))
            .collect()
    }

    /// Exact division by `first^k`; `None` if some term has a smaller power.
    pub fn div_first_power(&self, k: u32) -> Option<Self> {
        let mut out = Self::zero(self.vars);
        for (&(i, j), c) in &self.terms {
            if i < k {
                return None;
            }
            out.terms.insert((i - k, j), c.clone());
        }
        Some(out)
    }

    pub fn mul_first_power(&self, k: u32) -> Self {
        Self::from_terms(self.vars, self.terms.iter().map(|(&(i, j), c)| ((i + k, j), c.clone())))
    }

    /// Terms whose first-variable exponent has the given parity
    /// (`0` even, `1` odd).
    pub fn first_parity_part(&self, parity: u32) -> Self {
        Self::from_terms(
            self.vars,
            self.terms
                .iter()
                .filter(|(&(i, _), _)| i % 2 == parity)
                .map(|(&e, c)| (e, c.clone())),
        )
    }

    /// Nonzero terms `(i, j, coefficient)` in the order used by `Display`.
    pub fn graded_terms(&self) -> Vec<(u32, u32, &ExactRational)> {
        let mut terms: Vec<_> = self.terms.iter().map(|(&(i, j), c)| (i, j, c)).collect();
        terms.sort_by_key(|&(i, j, _)| (i + j, Reverse(i)));
        terms
    }

    fn merged_vars(&self, rhs: &Self) -> Vars {
        if self.vars == rhs.vars || rhs.is_constant() {
            self.vars
        } else if self.is_constant() {
            rhs.vars
        } else {
            panic!("variable mismatch: {:?} vs {:?}", self.vars, rhs.vars)
        }
    }

    fn is_constant(&self) -> bool {
        self.terms.keys().all(|&e| e == (0, 0))
    }
}

fn pow(x: &ExactRational, k: u32) -> ExactRational {
    num_traits::pow(x.clone(), k as usize)
}

impl Add for &BivariatePolynomial {
    type Output = BivariatePolynomial;

    fn add(self, rhs: &BivariatePolynomial) -> BivariatePolynomial {
        let mut out = self.clone();
        out.vars = self.merged_vars(rhs);
        for (&(i, j), c) in &rhs.terms {
            out.add_term(i, j, c.clone());
        }
        out
    }
}

impl Sub for &BivariatePolynomial {
    type Output = BivariatePolynomial;

    fn sub(self, rhs: &BivariatePolynomial) -> BivariatePolynomial {
        let mut out = self.clone();
        out.vars = self.merged_vars(rhs);
        for (&(i, j), c) in &rhs.terms {
            out.add_term(i, j, -c);
        }
        out
    }
}

impl Mul for &BivariatePolynomial {
    type Output = BivariatePolynomial;

    fn mul(self, rhs: &BivariatePolynomial) -> BivariatePolynomial {
        let mut out = BivariatePolynomial::zero(self.merged_vars(rhs));
        for (&(i1, j1), a) in &self.terms {
            for (&(i2, j2), b) in &rhs.terms {
                out.add_term(i1 + i2, j1 + j2, a * b);
            }
        }
        out
    }
}

impl Neg for &BivariatePolynomial {
    type Output = BivariatePolynomial;

    fn neg(self) -> BivariatePolynomial {
        BivariatePolynomial::from_terms(self.vars, self.terms.iter().map(|(&e, c)| (e, -c)))
    }
}

/// Graded-lexicographic rendering: ascending total degree, and within one
/// degree descending power of the first variable, e.g. `-1/2 + 1/2*p - c`.
impl fmt::Display for BivariatePolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_terms(f, [self.vars.0, self.vars.1], self.graded_terms().into_iter())
    }
}

pub(crate) fn write_terms<'a>(
    f: &mut fmt::Formatter<'_>,
    names: [&str; 2],
    terms: impl Iterator<Item = (u32, u32, &'a ExactRational)>,
) -> fmt::Result {
    let mut first = true;
    for (i, j, c) in terms {
        let negative = c.is_negative();
        match (first, negative) {
            (true, true) => f.write_str("-")?,
            (true, false) => {}
            (false, true) => f.write_str(" - ")?,
            (false, false) => f.write_str(" + ")?,
        }
        first = false;
        let magnitude = c.abs();
        let mut factors_written = false;
        if !magnitude.is_one() || (i == 0 && j == 0) {
            fmt_rational(&magnitude, f)?;
            factors_written = true;
        }
        for (name, e) in [(names[0], i), (names[1], j)] {
            if e == 0 {
                continue;
            }
            if factors_written {
                f.write_str("*")?;
            }
            f.write_str(name)?;
            if e > 1 {
                write!(f, "^{e}")?;
            }
            factors_written = true;
        }
    }
    if first {
        f.write_str("0")?;
    }
    Ok(())
}
