use num_bigint::BigInt;
use num_traits::{One, Zero};
use proptest::prelude::*;

use so3_verlinde::exact::{int, rat, BivariatePolynomial, ExactRational, RationalMatrix, TruncatedSeries, Vars};
use so3_verlinde::skein::{e_product, quantum_integer, recoloring_check, AnnulusSkein, CyclotomicField};
use so3_verlinde::verlinde::{substitute_half, verlinde_polynomial};

fn small_rational() -> impl Strategy<Value = ExactRational> {
    (-20i64..=20, 1i64..=9).prop_map(|(n, d)| rat(n, d))
}

fn bivariate() -> impl Strategy<Value = BivariatePolynomial> {
    prop::collection::vec(((0u32..4, 0u32..4), small_rational()), 0..6)
        .prop_map(|terms| BivariatePolynomial::from_terms(Vars::PC, terms))
}

/// Rank as the size of the largest nonvanishing minor (cofactor expansion).
fn rank_by_minors(m: &[Vec<ExactRational>]) -> usize {
    fn det(m: &[Vec<ExactRational>]) -> ExactRational {
        if m.is_empty() {
            return ExactRational::one();
        }
        (0..m.len()).fold(ExactRational::zero(), |acc, j| {
            let minor: Vec<Vec<_>> = m[1..]
                .iter()
                .map(|row| {
                    row.iter()
                        .enumerate()
                        .filter(|&(k, _)| k != j)
                        .map(|(_, x)| x.clone())
                        .collect()
                })
                .collect();
            let term = &m[0][j] * det(&minor);
            if j % 2 == 0 {
                acc + term
            } else {
                acc - term
            }
        })
    }
    fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
        if k == 0 {
            return vec![vec![]];
        }
        if n < k {
            return vec![];
        }
        let mut out = subsets(n - 1, k);
        for mut s in subsets(n - 1, k - 1) {
            s.push(n - 1);
            out.push(s);
        }
        out
    }
    let rows = m.len();
    let cols = m.first().map_or(0, Vec::len);
    for k in (1..=rows.min(cols)).rev() {
        for rs in subsets(rows, k) {
            for cs in subsets(cols, k) {
                let sub: Vec<Vec<_>> = rs
                    .iter()
                    .map(|&r| cs.iter().map(|&c| m[r][c].clone()).collect())
                    .collect();
                if !det(&sub).is_zero() {
                    return k;
                }
            }
        }
    }
    0
}

proptest! {
    #[test]
    fn rational_field_axioms(a in small_rational(), b in small_rational(), c in small_rational()) {
        prop_assert_eq!((&a + &b) + &c, &a + (&b + &c));
        prop_assert_eq!(&a * (&b + &c), &a * &b + &a * &c);
        prop_assert!(a.denom() > &BigInt::zero());
        if !a.is_zero() {
            prop_assert_eq!(&a * a.recip(), ExactRational::one());
        }
        // (a/b)+(c/d) reconstructs exactly
        let sum = &a + &b;
        prop_assert_eq!(sum - &b, a);
    }

    #[test]
    fn series_inverse_round_trip(order in 0usize..=12, tail in prop::collection::vec(bivariate(), 12)) {
        let mut coeffs = vec![BivariatePolynomial::constant(Vars::PC, int(1))];
        coeffs.extend(tail);
        let s = TruncatedSeries::new(Vars::PC, order, coeffs);
        let prod = s.mul(&s.inverse().unwrap()).unwrap();
        prop_assert_eq!(prod, TruncatedSeries::one(Vars::PC, order));
    }

    #[test]
    fn substitute_half_is_a_ring_homomorphism(a in bivariate(), b in bivariate()) {
        prop_assert_eq!(substitute_half(&(&a * &b)), &substitute_half(&a) * &substitute_half(&b));
        prop_assert_eq!(substitute_half(&(&a + &b)), &substitute_half(&a) + &substitute_half(&b));
        prop_assert!(substitute_half(&a).total_degree() <= a.total_degree());
    }

    #[test]
    fn rank_agrees_with_minors(
        rows in 1usize..=4,
        cols in 1usize..=4,
        entries in prop::collection::vec(-3i64..=3, 16),
        dens in prop::collection::vec(1i64..=3, 16),
        dup in any::<bool>(),
    ) {
        let mut m: Vec<Vec<ExactRational>> = (0..rows)
            .map(|i| (0..cols).map(|j| rat(entries[i * 4 + j], dens[i * 4 + j])).collect())
            .collect();
        if dup && rows > 1 {
            // force a dependency: last row = first + second/2
            let combo: Vec<_> = (0..cols).map(|j| &m[0][j] + &m[1 % rows][j] * rat(1, 2)).collect();
            *m.last_mut().unwrap() = combo;
        }
        prop_assert_eq!(RationalMatrix::from_rows(m.clone()).rank(), rank_by_minors(&m));
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]
    #[test]
    fn cyclotomic_field_axioms(
        p_index in 0usize..15,
        xs in prop::collection::vec(small_rational(), 1..16),
        ys in prop::collection::vec(small_rational(), 1..16),
    ) {
        let p = 3 + 2 * p_index as u64;
        let f = CyclotomicField::new(p).unwrap();
        let x = f.element(so3_verlinde::UnivariatePolynomial::new("A", xs));
        let y = f.element(so3_verlinde::UnivariatePolynomial::new("A", ys));
        prop_assert_eq!(&x * &y, &y * &x);
        if !x.is_zero() {
            prop_assert_eq!(&x * &x.inverse().unwrap(), f.one());
            prop_assert_eq!((&x * &y).checked_div(&x).unwrap(), y);
        }
        prop_assert_eq!(f.a_power(2 * p as i64), f.one());
        prop_assert!((&f.a_power(p as i64) + &f.one()).is_zero());
    }
}

#[test]
fn quantum_integer_reflection() {
    for p in (3u64..=31).step_by(2) {
        let f = CyclotomicField::new(p).unwrap();
        for n in 1..p as i64 {
            assert_eq!(
                quantum_integer(p as i64 - n, &f),
                -&quantum_integer(n, &f),
                "p={p} n={n}"
            );
        }
        for s in 1..=(p - 1) / 2 {
            assert!(recoloring_check(s, &f).unwrap(), "p={p} s={s}");
        }
    }
}

#[test]
fn e_product_is_commutative_and_matches_z_picture() {
    for i in 0..=20 {
        for j in 0..=20 {
            let law = e_product(i, j);
            assert_eq!(law, e_product(j, i));
            assert_eq!(law, &AnnulusSkein::basis(i) * &AnnulusSkein::basis(j), "i={i} j={j}");
        }
    }
}

#[test]
fn homogeneous_parts_sum_back() {
    for g in 1..=6 {
        let d = verlinde_polynomial(g);
        let sum = (0..=3 * g).fold(BivariatePolynomial::zero(Vars::PC), |acc, n| {
            &acc + &d.homogeneous_part(n)
        });
        assert_eq!(sum, d, "g={g}");
    }
}
