use num_traits::{One, Zero};

use crate::bernoulli::bernoulli_numbers;
use crate::exact::{
    binomial_poly_in_c, factorial, int, rat, BivariatePolynomial, ExactRational, TruncatedSeries, Vars,
};

/// The pieces of the residue formula for one genus, in variables `(p, c)`:
/// `D_g^{(2c)} = p^{g−1}·x + p^g·y`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ResidueParts {
    /// Coefficient of `t^{2g−2}` in
    /// `(2pt/(e^{2pt}−1)) · s((2c+1)t) · s(t)^{−(2g−1)}`, `s(t) = sinh(t)/t`.
    pub residue: BivariatePolynomial,
    /// `((−1)^g/2) · 4^{1−g} · (2c+1) · residue`
    pub x: BivariatePolynomial,
    /// `−((−1)^g/2) · binom(c+g−1, 2g−2)`, free of `p`.
    pub y: BivariatePolynomial,
}

fn sinhc_coefficient(k: usize) -> ExactRational {
    if k.is_multiple_of(2) {
        ExactRational::new(1.into(), factorial(k as u32 + 1))
    } else {
        ExactRational::zero()
    }
}

/// Residue series truncated at `order`; only the coefficient of `t^{2g−2}`
/// is consumed.
fn residue_series(g: u32, order: usize) -> TruncatedSeries {
    let vars = Vars::PC;
    let bernoulli = bernoulli_numbers(order);
    // 2pt/(e^{2pt}−1) = Σ B_k (2p)^k t^k / k!
    let bernoulli_series = TruncatedSeries::from_fn(order, |k| {
        let c = bernoulli.get(k) * num_traits::pow(int(2), k) / ExactRational::from_integer(factorial(k as u32));
        BivariatePolynomial::monomial(vars, k as u32, 0, c)
    });
    // s((2c+1)t) = Σ (2c+1)^{2k} t^{2k} / (2k+1)!
    let two_c_plus_one = BivariatePolynomial::from_terms(vars, [((0, 0), int(1)), ((0, 1), int(2))]);
    let mut odd_power = BivariatePolynomial::constant(vars, ExactRational::one());
    let scaled_sinhc = TruncatedSeries::from_fn(order, |k| {
        let term = odd_power.scale(&sinhc_coefficient(k));
        odd_power = &odd_power * &two_c_plus_one;
        term
    });
    let sinhc = TruncatedSeries::from_fn(order, |k| BivariatePolynomial::constant(vars, sinhc_coefficient(k)));
    let denominator = sinhc.inverse().expect("s(0) = 1").pow(2 * g - 1);
    bernoulli_series
        .mul(&scaled_sinhc)
        .and_then(|s| s.mul(&denominator))
        .expect("orders agree")
}

pub fn residue_parts(g: u32) -> ResidueParts {
    assert!(g >= 1, "genus must be at least 1");
    let order = (2 * g - 2) as usize;
    // One guard term: the t^{2g−2} coefficient must not depend on where the
    // series is cut.
    let guarded = residue_series(g, order + 1);
    let residue = guarded.coefficient_at(order).expect("within order").clone();
    debug_assert_eq!(
        residue_series(g, order).coefficient_at(order).expect("within order"),
        &residue
    );

    let vars = Vars::PC;
    let sign = if g.is_multiple_of(2) { int(1) } else { int(-1) };
    let half_sign = &sign * rat(1, 2);
    let four_pow = ExactRational::new(1.into(), num_traits::pow(num_bigint::BigInt::from(4), (g - 1) as usize));
    let two_c_plus_one = BivariatePolynomial::from_terms(vars, [((0, 0), int(1)), ((0, 1), int(2))]);
    let x = (&two_c_plus_one * &residue).scale(&(&half_sign * four_pow));
    let y = binomial_poly_in_c(g).scale(&-half_sign);
    ResidueParts { residue, x, y }
}

/// `D_g^{(2c)}` as a polynomial in `(p, c)`, from the residue formula with
/// the division by `p` folded into `(−p)^g/p = (−1)^g p^{g−1}`.
pub fn verlinde_polynomial(g: u32) -> BivariatePolynomial {
    let parts = residue_parts(g);
    &parts.x.mul_first_power(g - 1) + &parts.y.mul_first_power(g)
}

/// `c ↦ (p−1)/2 − s`, turning a polynomial in `(p, c)` into one in `(p, s)`.
pub fn substitute_half(poly: &BivariatePolynomial) -> BivariatePolynomial {
    let replacement =
        BivariatePolynomial::from_terms(Vars::PS, [((0, 0), rat(-1, 2)), ((1, 0), rat(1, 2)), ((0, 1), int(-1))]);
    poly.substitute_second(&replacement)
}

/// `D_g^{(p−2s−1)}` as a polynomial in `(p, s)`.
pub fn odd_color_polynomial(g: u32) -> BivariatePolynomial {
    substitute_half(&verlinde_polynomial(g))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::Degree;
    use alloc::format;

    #[test]
    fn genus_one_closed_form() {
        let d = verlinde_polynomial(1);
        assert_eq!(format!("{d}"), "-1/2 + 1/2*p - c");
        assert_eq!(d.evaluate(&int(5), &int(0)), int(2));
        let odd = odd_color_polynomial(1);
        assert_eq!(odd, BivariatePolynomial::monomial(Vars::PS, 0, 1, int(1)));
    }

    #[test]
    fn genus_two_value() {
        assert_eq!(verlinde_polynomial(2).evaluate(&int(5), &int(0)), int(5));
    }

    #[test]
    fn total_degree_is_3g_minus_2() {
        for g in 1..=5 {
            assert_eq!(
                verlinde_polynomial(g).total_degree(),
                Degree::Finite(3 * g - 2),
                "g={g}"
            );
        }
    }

    #[test]
    fn substitute_half_examples() {
        let two_c_plus_one = BivariatePolynomial::from_terms(Vars::PC, [((0, 0), int(1)), ((0, 1), int(2))]);
        let expected = BivariatePolynomial::from_terms(Vars::PS, [((1, 0), int(1)), ((0, 1), int(-2))]);
        assert_eq!(substitute_half(&two_c_plus_one), expected);
        let p = BivariatePolynomial::monomial(Vars::PC, 1, 0, int(1));
        assert_eq!(substitute_half(&p), p.clone().with_vars(Vars::PS));
    }
}
