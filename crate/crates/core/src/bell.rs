//! Partial Bell polynomials and their closed forms at the derivatives of `sinc`.

use num_traits::{One, Pow, Zero};

use crate::error::{Error, Result};
use crate::expansions::{ClosedForm, Method};
use crate::numbers::{
    choose, factorial, falling_factorial, rat, ratio, rational_power, sign, Rational, Triangles,
};
use crate::series::{cardinal_series, Cardinal, TruncatedSeries};

/// The arguments `x_1, x_2, ...` of a partial Bell polynomial.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BellArgs {
    pub values: Vec<Rational>,
}

impl BellArgs {
    pub fn new(values: Vec<Rational>) -> Self {
        BellArgs { values }
    }

    /// `x_j = sinc^{(j)}(0)`: zero for odd `j`, `(-1)^{j/2} / (j+1)` for even `j`.
    pub fn sinc_derivatives(len: usize) -> Self {
        Self::cardinal_derivatives(Cardinal::Sinc, len)
    }

    /// `x_j = sinhc^{(j)}(0)`: zero for odd `j`, `1 / (j+1)` for even `j`.
    pub fn sinhc_derivatives(len: usize) -> Self {
        Self::cardinal_derivatives(Cardinal::Sinhc, len)
    }

    fn cardinal_derivatives(kind: Cardinal, len: usize) -> Self {
        let values = (1..=len as i64)
            .map(|j| match (j % 2, kind) {
                (1, _) => Rational::zero(),
                (_, Cardinal::Sinc) => ratio(sign((j / 2) as u32), j + 1),
                (_, Cardinal::Sinhc) => ratio(1, j + 1),
            })
            .collect();
        BellArgs { values }
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    /// `x_i`, one-based.
    fn x(&self, i: u32) -> &Rational {
        &self.values[i as usize - 1]
    }
}

/// Number of arguments `B_{n,k}` reads.
pub fn required_args(n: u32, k: u32) -> usize {
    if k == 0 {
        0
    } else {
        (n - k + 1) as usize
    }
}

/// `B_{n,k}(x_1, ..., x_{n-k+1})` via
/// `B_{n,k} = sum_i C(n-1, i-1) x_i B_{n-i,k-1}`.
pub fn bell_partial(n: u32, k: u32, args: &BellArgs) -> Result<Rational> {
    if k > n {
        return Err(Error::IndexOutOfRange { n, k });
    }
    let needed = required_args(n, k);
    if args.len() < needed {
        return Err(Error::ShortBellArgs {
            n,
            k,
            needed,
            got: args.len(),
        });
    }
    // row[m] holds B_{m, kk} for the current kk
    let mut row: Vec<Rational> = (0..=n)
        .map(|m| {
            if m == 0 {
                Rational::one()
            } else {
                Rational::zero()
            }
        })
        .collect();
    for kk in 1..=k {
        let mut next = vec![Rational::zero(); n as usize + 1];
        // later levels each consume at least one element
        for m in kk..=n - (k - kk) {
            let mut acc = Rational::zero();
            for i in 1..=(m - kk + 1) {
                let x = args.x(i);
                let prev = &row[(m - i) as usize];
                if x.is_zero() || prev.is_zero() {
                    continue;
                }
                acc += Rational::from_integer(choose(m - 1, i - 1)) * x * prev;
            }
            next[m as usize] = acc;
        }
        row = next;
    }
    Ok(row[n as usize].clone())
}

/// `T(n+j, j) / C(n+j, j)` for `j = 0..=max_j`, from either closed form.
pub(crate) fn shifted_ratios(
    tri: &Triangles,
    n: u32,
    max_j: u32,
    form: ClosedForm,
) -> Vec<Rational> {
    (0..=max_j)
        .map(|j| shifted_ratio(tri, n, j, form))
        .collect()
}

pub(crate) fn shifted_ratio(tri: &Triangles, n: u32, j: u32, form: ClosedForm) -> Rational {
    match form {
        ClosedForm::Cfn => tri.central_t(n + j, j) / Rational::from_integer(choose(n + j, j)),
        ClosedForm::Stirling => {
            let half = ratio(j as i64, 2);
            let mut sum = Rational::zero();
            for m in 0..=n {
                let term = Rational::from_integer(choose(n, m))
                    * Pow::pow(&half, m)
                    * tri.stirling2(n + j - m, j)
                    / Rational::from_integer(choose(n + j - m, j));
                sum += rat(sign(m)) * term;
            }
            sum
        }
    }
}

/// `sum_{j=1}^{k} (-1)^j C(k, j) ratios[j]`.
pub(crate) fn alternating_ratio_sum(ratios: &[Rational], k: u32) -> Rational {
    (1..=k)
        .map(|j| rat(sign(j)) * Rational::from_integer(choose(k, j)) * &ratios[j as usize])
        .sum()
}

/// `B_{n,k}` at the derivatives of `sinc` at zero, from the closed form.
pub fn bell_sinc_closed(n: u32, k: u32, form: ClosedForm) -> Result<Rational> {
    bell_sinc_closed_with(&Triangles::new(), n, k, form)
}

pub fn bell_sinc_closed_with(
    tri: &Triangles,
    n: u32,
    k: u32,
    form: ClosedForm,
) -> Result<Rational> {
    if k < 1 || k > n {
        return Err(Error::IndexOutOfRange { n, k });
    }
    if n % 2 == 1 {
        return Ok(Rational::zero());
    }
    let m = n / 2;
    let ratios = shifted_ratios(tri, n, k, form);
    let prefactor = rat(sign(m + k)) * Rational::from_integer(Pow::pow(crate::numbers::int(2), n))
        / Rational::from_integer(factorial(k));
    Ok(prefactor * alternating_ratio_sum(&ratios, k))
}

/// Taylor series of `exp(sinc z - 1)` from the central-factorial closed form.
pub fn exp_sinc_series(order: usize) -> TruncatedSeries {
    exp_sinc_series_with(order, Method::Cfn)
}

pub fn exp_sinc_series_with(order: usize, method: Method) -> TruncatedSeries {
    let Some(form) = method.closed_form() else {
        let shifted = &cardinal_series(Cardinal::Sinc, order) - &TruncatedSeries::one(order);
        return shifted.exp1().expect("sinc - 1 has zero constant term");
    };
    let tri = Triangles::new();
    let mut coeffs = vec![Rational::zero(); order + 1];
    coeffs[0] = Rational::one();
    for k in 1..=(order / 2) as u32 {
        let n = 2 * k;
        let ratios = shifted_ratios(&tri, n, n, form);
        let bracket: Rational = (1..=n)
            .map(|j| {
                rat(sign(j)) * alternating_ratio_sum(&ratios, j)
                    / Rational::from_integer(factorial(j))
            })
            .sum();
        coeffs[n as usize] =
            rat(sign(k)) * bracket * Rational::from_integer(Pow::pow(crate::numbers::int(2), n))
                / Rational::from_integer(factorial(n));
    }
    TruncatedSeries::new(coeffs)
}

/// `d^k/dx^k (1 + x^2)^{-r}` at `x`, through `B_{k,j}(x, 1, 0, ..., 0)`.
///
/// Only defined here when `(1 + x^2)^r` is rational; `x = 0` is rejected for
/// `k >= 1` because the closed form carries `x^{-k}`.
pub fn inv_quadratic_derivative(k: u32, r: &Rational, x: &Rational) -> Result<Rational> {
    if k >= 1 && x.is_zero() {
        return Err(Error::ZeroAbscissa);
    }
    let u = rat(1) + x * x;
    let u_r = rational_power(&u, r)?;
    let minus_r = -r;
    let x2_over_u = x * x / &u;
    let mut sum = Rational::zero();
    for j in k.div_ceil(2)..=k {
        sum += falling_factorial(&minus_r, j)
            * Rational::from_integer(Pow::pow(crate::numbers::int(4), j) * choose(j, k - j))
            / Rational::from_integer(factorial(j))
            * Pow::pow(&x2_over_u, j);
    }
    let scale = Rational::from_integer(factorial(k))
        / (Rational::from_integer(Pow::pow(crate::numbers::int(2), k)) * Pow::pow(x, k) * u_r);
    Ok(scale * sum)
}
