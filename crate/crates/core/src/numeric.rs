//! Double-precision evaluation of truncated series and convergence checks
//! against direct evaluation of `sinc^r` / `sinhc^r`.

use std::f64::consts::PI;

use num_traits::{Pow, Signed, ToPrimitive, Zero};

use crate::bell::{alternating_ratio_sum, shifted_ratios};
use crate::error::{Error, Result};
use crate::expansions::{cardinal_pow_real, ClosedForm};
use crate::numbers::{choose, factorial, Rational, Triangles};
use crate::series::{Cardinal, TruncatedSeries};

#[derive(Debug, Clone, PartialEq)]
pub struct ConvergenceRecord {
    pub z: f64,
    pub exponent: f64,
    pub order: usize,
    pub partial_sum: f64,
    pub reference: f64,
    pub abs_error: f64,
}

/// Nearest double to an exact rational.
pub fn rational_to_f64(r: &Rational) -> f64 {
    if let Some(v) = r.to_f64() {
        if v.is_finite() {
            return v;
        }
    }
    // shift both parts down to ~64 significant bits before dividing
    let shift = |x: &num_bigint::BigInt| x.bits().saturating_sub(64);
    let (sn, sd) = (shift(r.numer()), shift(r.denom()));
    let n = (r.numer() >> sn as usize).to_f64().unwrap_or(f64::NAN);
    let d = (r.denom() >> sd as usize).to_f64().unwrap_or(f64::NAN);
    n / d * 2f64.powi(sn as i32 - sd as i32)
}

/// Horner evaluation of the truncated polynomial.
pub fn eval_series_at(s: &TruncatedSeries, z: f64) -> f64 {
    s.coeffs()
        .iter()
        .rev()
        .fold(0.0, |acc, c| acc * z + rational_to_f64(c))
}

fn cardinal_value(kind: Cardinal, z: f64) -> f64 {
    if z == 0.0 {
        return 1.0;
    }
    match kind {
        Cardinal::Sinc => z.sin() / z,
        Cardinal::Sinhc => z.sinh() / z,
    }
}

/// `(sin z / z)^r` or `(sinh z / z)^r` in floating point, principal value.
pub fn reference_power_eval(kind: Cardinal, r: f64, z: f64) -> Result<f64> {
    if !z.is_finite() || !r.is_finite() {
        return Err(Error::Domain(format!("non-finite input r = {r}, z = {z}")));
    }
    let base = cardinal_value(kind, z);
    let integral = r.fract() == 0.0;
    if base < 0.0 && !integral {
        return Err(Error::Domain(format!(
            "{}({z}) = {base} is negative and r = {r} is not an integer",
            kind.name()
        )));
    }
    if base == 0.0 && r < 0.0 {
        return Err(Error::Domain(format!(
            "{}({z}) = 0 has no negative power",
            kind.name()
        )));
    }
    Ok(if integral && r.abs() <= i32::MAX as f64 {
        base.powi(r as i32)
    } else {
        base.powf(r)
    })
}

/// Partial sums of the closed-form expansion of `f^r` at `z` for orders
/// `2, 4, ..., max_order`, each compared with [`reference_power_eval`].
pub fn convergence_report(
    kind: Cardinal,
    r: &Rational,
    z: f64,
    max_order: usize,
) -> Result<Vec<ConvergenceRecord>> {
    if kind == Cardinal::Sinc && r.is_negative() && z.abs() >= PI {
        return Err(Error::Domain(format!(
            "sinc^r with r = {r} < 0 only converges for |z| < pi, got z = {z}"
        )));
    }
    let exponent = rational_to_f64(r);
    let reference = reference_power_eval(kind, exponent, z)?;
    let series = cardinal_pow_real(kind, r, max_order, ClosedForm::Cfn);
    Ok((2..=max_order)
        .step_by(2)
        .map(|order| {
            let partial_sum = eval_series_at(&series.truncate(order), z);
            ConvergenceRecord {
                z,
                exponent,
                order,
                partial_sum,
                reference,
                abs_error: (partial_sum - reference).abs(),
            }
        })
        .collect())
}

/// Coefficients of `f^r` for a floating exponent, through the
/// central-factorial closed form. The inner triangle sums stay exact; only
/// the rising factorial `(-r)_k` and the final sum are in floating point.
pub fn float_power_coefficients(kind: Cardinal, r: f64, order: usize) -> Vec<f64> {
    let tri = Triangles::new();
    let mut out = vec![0.0; order + 1];
    out[0] = 1.0;
    for q in 1..=(order / 2) as u32 {
        let n = 2 * q;
        let ratios = shifted_ratios(&tri, n, n, ClosedForm::Cfn);
        let scale = Rational::from_integer(Pow::pow(crate::numbers::int(2), n))
            / Rational::from_integer(factorial(n));
        let mut rising = 1.0;
        let mut sum = 0.0;
        for k in 1..=n {
            rising *= -r + (k - 1) as f64;
            let exact =
                alternating_ratio_sum(&ratios, k) * &scale / Rational::from_integer(factorial(k));
            if !exact.is_zero() {
                sum += rising * rational_to_f64(&exact);
            }
        }
        out[n as usize] = match kind {
            Cardinal::Sinc if q % 2 == 1 => -sum,
            _ => sum,
        };
    }
    out
}

/// Floating counterpart of [`crate::bell::inv_quadratic_derivative`] for
/// exponents where `(1 + x^2)^{-r}` is irrational.
pub fn inv_quadratic_derivative_f64(k: u32, r: f64, x: f64) -> Result<f64> {
    if k >= 1 && x == 0.0 {
        return Err(Error::ZeroAbscissa);
    }
    let u = 1.0 + x * x;
    let mut falling = 1.0;
    let mut sum = 0.0;
    for j in 0..=k {
        if j > 0 {
            falling *= -r - (j - 1) as f64;
        }
        if 2 * j < k {
            continue;
        }
        let c = choose(j, k - j).to_f64().unwrap_or(f64::NAN);
        let jf = factorial(j).to_f64().unwrap_or(f64::INFINITY);
        sum += falling * 4f64.powi(j as i32) / jf * c * (x * x / u).powi(j as i32);
    }
    let kf = factorial(k).to_f64().unwrap_or(f64::INFINITY);
    Ok(kf / (2f64.powi(k as i32) * x.powi(k as i32) * u.powf(r)) * sum)
}
