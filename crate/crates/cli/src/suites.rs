//! Verification batteries behind `verify --suite`.

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Pow};
use so3_verlinde::bernoulli::{
    bernoulli_at_half_shift, bernoulli_half_closed_form, bernoulli_half_value, bernoulli_numbers, faulhaber_poly,
};
use so3_verlinde::certify::{build_certificate, lower_bound};
use so3_verlinde::exact::{int, rat, ExactRational};
use so3_verlinde::skein::{
    e_product, eval_nonseparating_curve, lemma_flat_check, quantum_integer, recoloring_check, AnnulusSkein,
    CyclotomicField, OddDenominator,
};
use so3_verlinde::verlinde::{
    decompose, dimension, leading_links, leading_term_check, odd_color_polynomial, oracle_crosscheck, parity_checks,
    verlinde_polynomial, ColorKind,
};

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Suite {
    Bernoulli,
    Verlinde,
    Skein,
    Certify,
    All,
}

/// Sweep limits shared by the suites.
#[derive(Debug, Clone, Copy)]
pub struct Limits {
    pub max_genus: u32,
    pub max_p: u64,
}

#[derive(Debug, Clone)]
pub struct Check {
    pub suite: &'static str,
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

type Outcome = Result<String, String>;
type Battery = Vec<(&'static str, Box<dyn Fn() -> Outcome>)>;

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn levels(max_p: u64) -> impl Iterator<Item = u64> {
    (3..=max_p).step_by(2)
}

fn field(p: u64) -> Result<CyclotomicField, String> {
    CyclotomicField::new(p).map_err(|e| e.to_string())
}

pub fn run(suite: Suite, limits: Limits) -> Vec<Check> {
    let selected: &[Suite] = match suite {
        Suite::All => &[Suite::Bernoulli, Suite::Verlinde, Suite::Skein, Suite::Certify],
        Suite::Bernoulli => &[Suite::Bernoulli],
        Suite::Verlinde => &[Suite::Verlinde],
        Suite::Skein => &[Suite::Skein],
        Suite::Certify => &[Suite::Certify],
    };
    let mut out = Vec::new();
    for s in selected {
        let (label, checks): (&'static str, Battery) = match s {
            Suite::Bernoulli => (
                "bernoulli",
                vec![
                    ("half_values", Box::new(half_values)),
                    ("faulhaber", Box::new(faulhaber)),
                    ("shifted_parity", Box::new(shifted_parity)),
                ],
            ),
            Suite::Verlinde => (
                "verlinde",
                vec![
                    ("genus_one", Box::new(genus_one)),
                    ("oracle_crosscheck", Box::new(move || crosscheck(limits))),
                    ("structure", Box::new(move || structure(limits))),
                    ("leading_term", Box::new(move || leading_term(limits))),
                    ("parity", Box::new(move || parity(limits))),
                ],
            ),
            Suite::Skein => (
                "skein",
                vec![
                    ("flat_bundle", Box::new(move || flat_bundle(limits))),
                    ("recoloring", Box::new(move || recoloring(limits))),
                    ("quantum_p_vanishes", Box::new(move || quantum_p(limits))),
                    ("e_products", Box::new(e_products)),
                    ("curve_consistency", Box::new(move || curve(limits))),
                ],
            ),
            Suite::Certify => (
                "certify",
                vec![
                    ("lower_bounds", Box::new(lower_bounds)),
                    ("certificates", Box::new(move || certificates(limits))),
                ],
            ),
            Suite::All => unreachable!(),
        };
        for (name, f) in checks {
            let (passed, detail) = match f() {
                Ok(d) => (true, d),
                Err(d) => (false, d),
            };
            out.push(Check {
                suite: label,
                name: name.into(),
                passed,
                detail,
            });
        }
    }
    out
}

fn half_values() -> Outcome {
    let table = bernoulli_numbers(41);
    for m in 0..=40 {
        ensure(bernoulli_half_value(m) == bernoulli_half_closed_form(&table, m), || {
            format!("B_{m}(1/2)")
        })?;
    }
    Ok("B_m(1/2) = (2^(1-m) - 1) B_m for m <= 40".into())
}

fn faulhaber() -> Outcome {
    for m in 1..=20usize {
        let poly = faulhaber_poly(m).map_err(|e| e.to_string())?;
        let mut sum = BigInt::from(0);
        for n in 1..=50u32 {
            sum += BigInt::from(n).pow(m as u32);
            ensure(
                poly.evaluate(&int(n as i64)) == ExactRational::from_integer(sum.clone()),
                || format!("m={m} N={n}"),
            )?;
        }
    }
    Ok("both closed forms agree and match direct sums, m <= 20, N <= 50".into())
}

fn shifted_parity() -> Outcome {
    for beta in 0..=8 {
        ensure(bernoulli_at_half_shift(2 * beta).is_even(), || {
            format!("B_{}((p+1)/2)", 2 * beta)
        })?;
        ensure(bernoulli_at_half_shift(2 * beta + 1).is_odd(), || {
            format!("B_{}((p+1)/2)", 2 * beta + 1)
        })?;
    }
    Ok("B_n((p+1)/2) has the parity of n in p, n <= 17".into())
}

fn genus_one() -> Outcome {
    let d = verlinde_polynomial(1);
    for p in levels(31) {
        for c in 0..=(p - 3) / 2 {
            let expected = rat(p as i64 - 1, 2) - int(c as i64);
            ensure(d.evaluate(&int(p as i64), &int(c as i64)) == expected, || {
                format!("p={p} c={c}")
            })?;
        }
    }
    ensure(odd_color_polynomial(1).to_string() == "s", || "odd substitution".into())?;
    Ok(format!("D_1 = {d}"))
}

fn crosscheck(l: Limits) -> Outcome {
    let r = oracle_crosscheck(l.max_genus, l.max_p);
    ensure(r.passed(), || {
        format!("{} mismatches, first {:?}", r.mismatches.len(), r.mismatches.first())
    })?;
    Ok(format!("{} exact comparisons with the fusion recursion", r.comparisons))
}

fn structure(l: Limits) -> Outcome {
    for g in 1..=l.max_genus {
        for kind in [ColorKind::Even, ColorKind::Odd] {
            let d = decompose(g, kind).map_err(|e| format!("g={g} {kind:?}: {e}"))?;
            for link in leading_links(&d) {
                ensure(link.holds(), || format!("g={g} {kind:?} j={}", link.j))?;
            }
        }
    }
    Ok(format!(
        "supports, degrees and Bernoulli leading coefficients for g <= {}",
        l.max_genus
    ))
}

fn leading_term(l: Limits) -> Outcome {
    for g in 1..=l.max_genus {
        let r = leading_term_check(g).map_err(|e| e.to_string())?;
        ensure(r.passed(), || format!("g={g}"))?;
    }
    Ok(format!("g <= {}", l.max_genus))
}

fn parity(l: Limits) -> Outcome {
    for g in 1..=l.max_genus {
        parity_checks(g).map_err(|e| format!("g={g}: {e}"))?;
    }
    Ok(format!("g <= {}", l.max_genus))
}

fn flat_bundle(l: Limits) -> Outcome {
    for p in levels(l.max_p) {
        let f = field(p)?;
        for g in 1..=l.max_genus {
            let c = lemma_flat_check(g, &f).map_err(|e| e.to_string())?;
            ensure(c.equal, || format!("p={p} g={g}"))?;
        }
    }
    Ok(format!(
        "(-p/(A-1/A)^2)^(g-1) = (D^2/<e_(d-1)>^2)^(g-1), p <= {}",
        l.max_p
    ))
}

fn recoloring(l: Limits) -> Outcome {
    for p in levels(l.max_p) {
        let f = field(p)?;
        for s in 1..=(p - 1) / 2 {
            ensure(recoloring_check(s, &f).map_err(|e| e.to_string())?, || {
                format!("p={p} s={s}")
            })?;
        }
    }
    Ok(format!("<e_(2s-1)> = <e_(p-2s-1)>, p <= {}", l.max_p))
}

fn quantum_p(l: Limits) -> Outcome {
    for p in levels(l.max_p) {
        ensure(quantum_integer(p as i64, &field(p)?).is_zero(), || format!("p={p}"))?;
    }
    Ok(format!("[p] = 0, p <= {}", l.max_p))
}

fn e_products() -> Outcome {
    for i in 0..=20 {
        for j in 0..=20 {
            ensure(
                e_product(i, j) == &AnnulusSkein::basis(i) * &AnnulusSkein::basis(j),
                || format!("e_{i} e_{j}"),
            )?;
        }
    }
    Ok("e_i e_j by Clebsch-Gordan matches the z-polynomial product, i, j <= 20".into())
}

fn curve(l: Limits) -> Outcome {
    for p in levels(l.max_p) {
        let f = field(p)?;
        for g in 1..=l.max_genus {
            let m0 = eval_nonseparating_curve(g, 0, &f, OddDenominator::Symmetric).map_err(|e| e.to_string())?;
            let d0 = dimension(g, p, 0).map_err(|e| e.to_string())?;
            ensure(m0.as_rational() == Some(ExactRational::from_integer(d0.into())), || {
                format!("m=0 p={p} g={g}")
            })?;
            let m1 = eval_nonseparating_curve(g, 1, &f, OddDenominator::Symmetric).map_err(|e| e.to_string())?;
            let flat = lemma_flat_check(g, &f).map_err(|e| e.to_string())?;
            ensure(m1 == flat.lhs, || format!("m=1 p={p} g={g}"))?;
        }
    }
    Ok(format!(
        "color 0 gives the Verlinde dimension, color 1 the flat-bundle value, p <= {}",
        l.max_p
    ))
}

fn lower_bounds() -> Outcome {
    for (g, v) in [(0u32, 1u32), (1, 9), (2, 35)] {
        ensure(lower_bound(g) == BigUint::from(v), || format!("g={g}"))?;
    }
    for g in 1..=20u32 {
        let direct = Pow::pow(BigUint::from(2u32), 2 * g + 1) + BigUint::from(2 * g) - BigUint::one();
        ensure(lower_bound(g) == direct, || format!("g={g}"))?;
    }
    Ok("1, 9, 35, and 2^(2g+1) + 2g - 1 for g <= 20".into())
}

fn certificates(l: Limits) -> Outcome {
    for g in 1..=l.max_genus {
        let c = build_certificate(g).map_err(|e| e.to_string())?;
        let failed: Vec<_> = c.checks.iter().filter(|k| !k.passed).map(|k| k.name.as_str()).collect();
        ensure(c.valid, || format!("g={g}: {failed:?}"))?;
        ensure(c.dim_00 == u64::from(g) + 1 && c.dim_01 == u64::from(g), || {
            format!("g={g} ranks")
        })?;
    }
    Ok(format!("valid certificates for g <= {}", l.max_genus))
}
