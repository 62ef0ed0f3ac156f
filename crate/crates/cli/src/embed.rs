//! Floating-point embedding of `Q(A)` into `C`, `A ↦ e^{iπk/p}` with
//! `gcd(k, 2p) = 1`. Only used for display and for sanity checks; every
//! exact result in this crate is computed without it.

use num_complex::Complex64;
use num_integer::Integer;
use num_traits::ToPrimitive;
use so3_verlinde::skein::CyclotomicElement;

/// True when `e^{iπk/p}` is a primitive `2p`-th root of unity.
pub fn admissible_root(p: u64, k: u64) -> bool {
    k > 0 && k < 2 * p && k.gcd(&(2 * p)) == 1
}

/// `e^{iπk/p}`.
pub fn root(p: u64, k: u64) -> Complex64 {
    Complex64::from_polar(1.0, std::f64::consts::PI * k as f64 / p as f64)
}

/// Image of `x` under `A ↦ e^{iπk/p}`, via Horner on the reduced representative.
pub fn embed(x: &CyclotomicElement, k: u64) -> Complex64 {
    let a = root(x.field().p(), k);
    x.coefficients().iter().rev().fold(Complex64::new(0.0, 0.0), |acc, c| {
        acc * a + c.to_f64().unwrap_or(f64::NAN)
    })
}
