//! Taylor coefficients of `sinc^l`, `sinhc^l`, `sinc^r` and `sinhc^r`.
//!
//! Every generator fills the coefficient of `z^{2q}` directly (the factor
//! `2^{2q}/(2q)!` or `l^{2q}/(2q)!` is folded in); odd coefficients are zero.

use std::f64::consts::FRAC_PI_2;

use num_traits::{One, Pow, Zero};

use crate::bell::{alternating_ratio_sum, shifted_ratios};
use crate::error::{Error, Result};
use crate::numbers::{choose, factorial, rat, ratio, rising_factorial, sign, Rational, Triangles};
use crate::series::{cardinal_series, Cardinal, TruncatedSeries};

/// Which closed form supplies `T(n+j, j) / C(n+j, j)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ClosedForm {
    /// Central factorial numbers directly.
    Cfn,
    /// The alternating Stirling-number sum that equals the same ratio.
    Stirling,
}

/// How an expansion is produced.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Method {
    Cfn,
    Stirling,
    /// `exp(r log f)` on the truncated series of `f`.
    Oracle,
}

impl Method {
    pub fn closed_form(self) -> Option<ClosedForm> {
        match self {
            Method::Cfn => Some(ClosedForm::Cfn),
            Method::Stirling => Some(ClosedForm::Stirling),
            Method::Oracle => None,
        }
    }
}

impl From<ClosedForm> for Method {
    fn from(f: ClosedForm) -> Self {
        match f {
            ClosedForm::Cfn => Method::Cfn,
            ClosedForm::Stirling => Method::Stirling,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExpansionRequest {
    pub function: Cardinal,
    pub exponent: Rational,
    pub order: usize,
    pub method: Method,
}

impl ExpansionRequest {
    /// Non-negative integer exponents go through the integer-power forms,
    /// everything else through the real-power forms.
    pub fn expand(&self) -> Result<TruncatedSeries> {
        let Some(form) = self.method.closed_form() else {
            return cardinal_series(self.function, self.order).pow_rational(&self.exponent);
        };
        match non_negative_integer(&self.exponent) {
            Some(l) => cardinal_pow_int(self.function, l, self.order, form),
            None => Ok(cardinal_pow_real(
                self.function,
                &self.exponent,
                self.order,
                form,
            )),
        }
    }
}

fn non_negative_integer(r: &Rational) -> Option<u32> {
    use num_traits::ToPrimitive;
    if r.is_integer() {
        r.to_integer().to_u32()
    } else {
        None
    }
}

/// `sinc^l z` up to `z^order`.
pub fn sinc_pow_int(l: u32, order: usize, form: ClosedForm) -> Result<TruncatedSeries> {
    cardinal_pow_int(Cardinal::Sinc, l, order, form)
}

/// `sinhc^l z` up to `z^order`.
pub fn sinhc_pow_int(l: u32, order: usize, form: ClosedForm) -> Result<TruncatedSeries> {
    cardinal_pow_int(Cardinal::Sinhc, l, order, form)
}

pub fn cardinal_pow_int(
    kind: Cardinal,
    l: u32,
    order: usize,
    form: ClosedForm,
) -> Result<TruncatedSeries> {
    if form == ClosedForm::Stirling && l == 0 {
        return Err(Error::StirlingZeroPower);
    }
    let tri = Triangles::new();
    let mut coeffs = vec![Rational::zero(); order + 1];
    coeffs[0] = Rational::one();
    for j in 1..=(order / 2) as u32 {
        let n = 2 * j;
        let c = match form {
            ClosedForm::Cfn => {
                let t = tri.central_t(l + n, l) / Rational::from_integer(choose(l + n, l));
                t * Rational::from_integer(Pow::pow(crate::numbers::int(2), n))
            }
            ClosedForm::Stirling => {
                let weight = ratio(2, l as i64);
                let mut sum = Rational::zero();
                for k in 0..=n {
                    let term = Rational::from_integer(choose(n, k))
                        * Pow::pow(&weight, k)
                        * tri.stirling2(k + l, l)
                        / Rational::from_integer(choose(k + l, l));
                    sum += rat(sign(k)) * term;
                }
                sum * Pow::pow(rat(l as i64), n)
            }
        };
        let c = c / Rational::from_integer(factorial(n));
        coeffs[n as usize] = match kind {
            Cardinal::Sinc => rat(sign(j)) * c,
            Cardinal::Sinhc => c,
        };
    }
    Ok(TruncatedSeries::new(coeffs))
}

/// `sinc^r z` for rational `r`, up to `z^order`.
pub fn sinc_pow_real(r: &Rational, order: usize, form: ClosedForm) -> TruncatedSeries {
    cardinal_pow_real(Cardinal::Sinc, r, order, form)
}

/// `sinhc^r z` for rational `r`, up to `z^order`.
pub fn sinhc_pow_real(r: &Rational, order: usize, form: ClosedForm) -> TruncatedSeries {
    cardinal_pow_real(Cardinal::Sinhc, r, order, form)
}

pub fn cardinal_pow_real(
    kind: Cardinal,
    r: &Rational,
    order: usize,
    form: ClosedForm,
) -> TruncatedSeries {
    let tri = Triangles::new();
    let minus_r = -r;
    let top = (order - order % 2) as u32;
    // (-r)_k / k! for k = 0..=top
    let weights: Vec<Rational> = (0..=top)
        .map(|k| rising_factorial(&minus_r, k) / Rational::from_integer(factorial(k)))
        .collect();
    let mut coeffs = vec![Rational::zero(); order + 1];
    coeffs[0] = Rational::one();
    for q in 1..=(order / 2) as u32 {
        let n = 2 * q;
        let ratios = shifted_ratios(&tri, n, n, form);
        let bracket: Rational = (1..=n)
            .map(|k| &weights[k as usize] * alternating_ratio_sum(&ratios, k))
            .sum();
        let c = bracket * Rational::from_integer(Pow::pow(crate::numbers::int(2), n))
            / Rational::from_integer(factorial(n));
        coeffs[n as usize] = match kind {
            Cardinal::Sinc => rat(sign(q)) * c,
            Cardinal::Sinhc => c,
        };
    }
    TruncatedSeries::new(coeffs)
}

/// `sin^l z` through its finite cosine sum, in floating point.
pub fn sin_pow_finite_cosine(l: u32, z: f64) -> f64 {
    let lf = l as f64;
    let mut binom = 1.0f64;
    let mut sum = 0.0;
    for q in 0..=l {
        let angle = (2.0 * q as f64 - lf) * z - lf * FRAC_PI_2;
        sum += sign(q) as f64 * binom * angle.cos();
        binom = binom * (lf - q as f64) / (q as f64 + 1.0);
    }
    sign(l) as f64 * sum / 2f64.powi(l as i32)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn series(c: &[(i64, i64)]) -> TruncatedSeries {
        TruncatedSeries::new(c.iter().map(|&(p, q)| ratio(p, q)).collect())
    }

    #[test]
    fn integer_powers_small() {
        assert_eq!(
            sinc_pow_int(1, 4, ClosedForm::Cfn).unwrap(),
            cardinal_series(Cardinal::Sinc, 4)
        );
        assert_eq!(
            sinc_pow_int(2, 4, ClosedForm::Cfn).unwrap(),
            series(&[(1, 1), (0, 1), (-1, 3), (0, 1), (2, 45)])
        );
        assert_eq!(
            sinc_pow_int(0, 3, ClosedForm::Cfn).unwrap(),
            TruncatedSeries::one(3)
        );
        assert_eq!(
            sinhc_pow_int(2, 2, ClosedForm::Cfn).unwrap(),
            series(&[(1, 1), (0, 1), (1, 3)])
        );
        assert_eq!(
            sinhc_pow_int(1, 2, ClosedForm::Cfn).unwrap(),
            cardinal_series(Cardinal::Sinhc, 2)
        );
    }

    #[test]
    fn stirling_form_rejects_zero_power() {
        assert_eq!(
            sinc_pow_int(0, 4, ClosedForm::Stirling),
            Err(Error::StirlingZeroPower)
        );
        assert_eq!(
            sinhc_pow_int(0, 4, ClosedForm::Stirling),
            Err(Error::StirlingZeroPower)
        );
    }

    #[test]
    fn real_power_leading_term() {
        for r in [rat(-1), ratio(1, 2), rat(3)] {
            for form in [ClosedForm::Cfn, ClosedForm::Stirling] {
                let s = sinc_pow_real(&r, 2, form);
                assert_eq!(s.coeff(2), -&r / rat(6));
            }
        }
    }

    #[test]
    fn real_power_examples() {
        assert_eq!(
            sinc_pow_real(&rat(1), 6, ClosedForm::Cfn),
            cardinal_series(Cardinal::Sinc, 6)
        );
        assert_eq!(
            sinc_pow_real(&rat(-1), 4, ClosedForm::Cfn),
            series(&[(1, 1), (0, 1), (1, 6), (0, 1), (7, 360)])
        );
        assert_eq!(
            sinhc_pow_real(&rat(-1), 4, ClosedForm::Cfn),
            series(&[(1, 1), (0, 1), (-1, 6), (0, 1), (7, 360)])
        );
        assert_eq!(
            sinhc_pow_real(&rat(1), 4, ClosedForm::Cfn),
            cardinal_series(Cardinal::Sinhc, 4)
        );
        assert_eq!(
            sinhc_pow_real(&rat(2), 2, ClosedForm::Cfn),
            sinhc_pow_int(2, 2, ClosedForm::Cfn).unwrap()
        );
    }

    #[test]
    fn odd_order_keeps_length() {
        let s = sinc_pow_real(&ratio(1, 3), 7, ClosedForm::Cfn);
        assert_eq!(s.order(), 7);
        assert!(s.coeff(7).is_zero());
        assert_eq!(sinc_pow_int(3, 5, ClosedForm::Stirling).unwrap().order(), 5);
    }

    #[test]
    fn request_dispatch() {
        let req = |method, exponent: Rational| ExpansionRequest {
            function: Cardinal::Sinc,
            exponent,
            order: 8,
            method,
        };
        let oracle = req(Method::Oracle, ratio(-3, 2)).expand().unwrap();
        assert_eq!(req(Method::Cfn, ratio(-3, 2)).expand().unwrap(), oracle);
        assert_eq!(
            req(Method::Stirling, ratio(-3, 2)).expand().unwrap(),
            oracle
        );
        assert_eq!(
            req(Method::Stirling, rat(3)).expand().unwrap(),
            req(Method::Oracle, rat(3)).expand().unwrap()
        );
        assert_eq!(
            req(Method::Stirling, rat(0)).expand(),
            Err(Error::StirlingZeroPower)
        );
    }

    #[test]
    fn finite_cosine_form() {
        for z in [0.3, 1.1, 2.5] {
            assert!((sin_pow_finite_cosine(1, z) - f64::sin(z)).abs() < 1e-12);
        }
        assert!((sin_pow_finite_cosine(2, FRAC_PI_2) - 1.0).abs() < 1e-12);
        let expected = 0.7f64.sin().powi(3);
        assert!((sin_pow_finite_cosine(3, 0.7) - expected).abs() < 1e-12);
        assert!((expected - 0.267).abs() < 1e-3);
    }
}
