//! Truncated formal power series with exact rational coefficients.
//!
//! A series of order `N` stores the coefficients of `z^0 ..= z^N`. Binary
//! operations truncate to the smaller of the two orders.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::numbers::{factorial, rat, Rational};

/// The two cardinal sine functions.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Cardinal {
    /// `sin z / z`
    Sinc,
    /// `sinh z / z`
    Sinhc,
}

impl Cardinal {
    pub fn name(self) -> &'static str {
        match self {
            Cardinal::Sinc => "sinc",
            Cardinal::Sinhc => "sinhc",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct TruncatedSeries {
    coeffs: Vec<Rational>,
}

impl TruncatedSeries {
    /// Builds a series from its coefficients; the order is `coeffs.len() - 1`.
    ///
    /// # Panics
    /// If `coeffs` is empty.
    pub fn new(coeffs: Vec<Rational>) -> Self {
        assert!(
            !coeffs.is_empty(),
            "a truncated series has at least one coefficient"
        );
        TruncatedSeries { coeffs }
    }

    pub fn from_ints(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| rat(c)).collect())
    }

    pub fn zero(order: usize) -> Self {
        Self::new(vec![Rational::zero(); order + 1])
    }

    pub fn one(order: usize) -> Self {
        let mut s = Self::zero(order);
        s.coeffs[0] = Rational::one();
        s
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<Rational> {
        self.coeffs
    }

    /// Coefficient of `z^i`, zero past the order.
    pub fn coeff(&self, i: usize) -> Rational {
        self.coeffs.get(i).cloned().unwrap_or_else(Rational::zero)
    }

    /// Drops every coefficient above `order`.
    pub fn truncate(&self, order: usize) -> Self {
        Self::new(self.coeffs[..=order.min(self.order())].to_vec())
    }

    pub fn scale(&self, c: &Rational) -> Self {
        Self::new(self.coeffs.iter().map(|a| a * c).collect())
    }

    /// Cauchy product truncated to the smaller order.
    pub fn mul(&self, other: &Self) -> Self {
        let order = self.order().min(other.order());
        let coeffs = (0..=order)
            .map(|n| {
                (0..=n)
                    .filter(|&i| !self.coeffs[i].is_zero())
                    .map(|i| &self.coeffs[i] * &other.coeffs[n - i])
                    .sum()
            })
            .collect();
        Self::new(coeffs)
    }

    /// `self` multiplied by itself `m` times; `m = 0` gives the unit series.
    pub fn powi(&self, m: u32) -> Self {
        (0..m).fold(Self::one(self.order()), |acc, _| acc.mul(self))
    }

    /// Formal logarithm of a series with constant term 1.
    ///
    /// Uses `n L_n = n s_n - sum_{k=1}^{n-1} k L_k s_{n-k}`.
    pub fn log1(&self) -> Result<Self> {
        if !self.coeffs[0].is_one() {
            return Err(Error::ConstantTerm {
                expected: 1,
                found: Box::new(self.coeffs[0].clone()),
            });
        }
        let s = &self.coeffs;
        let mut out = vec![Rational::zero(); s.len()];
        for n in 1..s.len() {
            let mut acc = rat(n as i64) * &s[n];
            for k in 1..n {
                if !out[k].is_zero() && !s[n - k].is_zero() {
                    acc -= rat(k as i64) * &out[k] * &s[n - k];
                }
            }
            out[n] = acc / rat(n as i64);
        }
        Ok(Self::new(out))
    }

    /// Formal exponential of a series with constant term 0.
    ///
    /// Uses `n E_n = sum_{k=1}^{n} k s_k E_{n-k}`.
    pub fn exp1(&self) -> Result<Self> {
        if !self.coeffs[0].is_zero() {
            return Err(Error::ConstantTerm {
                expected: 0,
                found: Box::new(self.coeffs[0].clone()),
            });
        }
        let s = &self.coeffs;
        let mut out = vec![Rational::zero(); s.len()];
        out[0] = Rational::one();
        for n in 1..s.len() {
            let mut acc = Rational::zero();
            for k in 1..=n {
                if !s[k].is_zero() && !out[n - k].is_zero() {
                    acc += rat(k as i64) * &s[k] * &out[n - k];
                }
            }
            out[n] = acc / rat(n as i64);
        }
        Ok(Self::new(out))
    }

    /// `self^r = exp(r log self)` for a series with constant term 1.
    pub fn pow_rational(&self, r: &Rational) -> Result<Self> {
        self.log1()?.scale(r).exp1()
    }
}

/// Taylor series of `sinc` or `sinhc` up to `z^order`.
pub fn cardinal_series(kind: Cardinal, order: usize) -> TruncatedSeries {
    let coeffs = (0..=order)
        .map(|i| {
            if i % 2 == 1 {
                return Rational::zero();
            }
            let c = Rational::from_integer(factorial(i as u32 + 1)).recip();
            match kind {
                Cardinal::Sinc if (i / 2) % 2 == 1 => -c,
                _ => c,
            }
        })
        .collect();
    TruncatedSeries::new(coeffs)
}

impl Add for &TruncatedSeries {
    type Output = TruncatedSeries;

    fn add(self, rhs: Self) -> TruncatedSeries {
        let order = self.order().min(rhs.order());
        TruncatedSeries::new(
            (0..=order)
                .map(|i| &self.coeffs[i] + &rhs.coeffs[i])
                .collect(),
        )
    }
}

impl Sub for &TruncatedSeries {
    type Output = TruncatedSeries;

    fn sub(self, rhs: Self) -> TruncatedSeries {
        let order = self.order().min(rhs.order());
        TruncatedSeries::new(
            (0..=order)
                .map(|i| &self.coeffs[i] - &rhs.coeffs[i])
                .collect(),
        )
    }
}

impl Neg for &TruncatedSeries {
    type Output = TruncatedSeries;

    fn neg(self) -> TruncatedSeries {
        TruncatedSeries::new(self.coeffs.iter().map(|c| -c).collect())
    }
}

impl Mul for &TruncatedSeries {
    type Output = TruncatedSeries;

    fn mul(self, rhs: Self) -> TruncatedSeries {
        TruncatedSeries::mul(self, rhs)
    }
}

impl fmt::Display for TruncatedSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if !first {
                f.write_str(" + ")?;
            }
            first = false;
            match i {
                0 => write!(f, "{c}")?,
                1 => write!(f, "({c})*z")?,
                _ => write!(f, "({c})*z^{i}")?,
            }
        }
        if first {
            f.write_str("0")?;
        }
        write!(f, " + O(z^{})", self.order() + 1)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numbers::ratio;
    use proptest::prelude::*;

    fn series(c: &[(i64, i64)]) -> TruncatedSeries {
        TruncatedSeries::new(c.iter().map(|&(p, q)| ratio(p, q)).collect())
    }

    #[test]
    fn cardinal_coefficients() {
        assert_eq!(
            cardinal_series(Cardinal::Sinc, 4),
            series(&[(1, 1), (0, 1), (-1, 6), (0, 1), (1, 120)])
        );
        assert_eq!(
            cardinal_series(Cardinal::Sinhc, 2),
            series(&[(1, 1), (0, 1), (1, 6)])
        );
        assert_eq!(
            cardinal_series(Cardinal::Sinc, 0),
            TruncatedSeries::from_ints(&[1])
        );
    }

    #[test]
    fn products() {
        let a = TruncatedSeries::from_ints(&[1, 1, 0]);
        let b = TruncatedSeries::from_ints(&[1, -1, 0]);
        assert_eq!(a.mul(&b), TruncatedSeries::from_ints(&[1, 0, -1]));
        assert_eq!(
            a.mul(&TruncatedSeries::from_ints(&[1])),
            TruncatedSeries::from_ints(&[1])
        );
        assert_eq!(a.mul(&TruncatedSeries::one(2)), a);
        let s = cardinal_series(Cardinal::Sinc, 4);
        assert_eq!(&s * &s, series(&[(1, 1), (0, 1), (-1, 3), (0, 1), (2, 45)]));
    }

    #[test]
    fn mixed_orders_truncate() {
        let a = TruncatedSeries::from_ints(&[1, 2, 3, 4]);
        let b = TruncatedSeries::from_ints(&[1, 1]);
        assert_eq!((&a + &b).order(), 1);
        assert_eq!((&a - &b).order(), 1);
        assert_eq!(a.mul(&b), TruncatedSeries::from_ints(&[1, 3]));
    }

    #[test]
    fn log_and_exp() {
        let log = TruncatedSeries::from_ints(&[1, 1, 0, 0]).log1().unwrap();
        assert_eq!(log, series(&[(0, 1), (1, 1), (-1, 2), (1, 3)]));
        assert_eq!(
            TruncatedSeries::from_ints(&[1]).log1().unwrap(),
            TruncatedSeries::from_ints(&[0])
        );
        let exp = TruncatedSeries::from_ints(&[0, 1, 0, 0]).exp1().unwrap();
        assert_eq!(exp, series(&[(1, 1), (1, 1), (1, 2), (1, 6)]));
        assert_eq!(
            TruncatedSeries::from_ints(&[0]).exp1().unwrap(),
            TruncatedSeries::from_ints(&[1])
        );
    }

    #[test]
    fn constant_term_errors() {
        let s = TruncatedSeries::from_ints(&[2, 1]);
        assert!(matches!(
            s.log1(),
            Err(Error::ConstantTerm { expected: 1, .. })
        ));
        assert!(matches!(
            s.exp1(),
            Err(Error::ConstantTerm { expected: 0, .. })
        ));
        assert!(matches!(
            s.pow_rational(&ratio(1, 2)),
            Err(Error::ConstantTerm { expected: 1, .. })
        ));
    }

    #[test]
    fn binomial_series_square_root() {
        let s = TruncatedSeries::from_ints(&[1, 1, 0, 0]);
        assert_eq!(
            s.pow_rational(&ratio(1, 2)).unwrap(),
            series(&[(1, 1), (1, 2), (-1, 8), (1, 16)])
        );
        assert_eq!(s.pow_rational(&rat(1)).unwrap(), s);
        assert_eq!(s.pow_rational(&rat(0)).unwrap(), TruncatedSeries::one(3));
    }

    #[test]
    fn display() {
        let s = cardinal_series(Cardinal::Sinc, 4);
        assert_eq!(s.to_string(), "1 + (-1/6)*z^2 + (1/120)*z^4 + O(z^5)");
        assert_eq!(TruncatedSeries::zero(1).to_string(), "0 + O(z^2)");
    }

    fn small_rational() -> impl Strategy<Value = Rational> {
        (-9i64..=9, 1i64..=7).prop_map(|(p, q)| ratio(p, q))
    }

    fn unit_series(max_order: usize) -> impl Strategy<Value = TruncatedSeries> {
        prop::collection::vec(small_rational(), 0..=max_order).prop_map(|tail| {
            let mut c = vec![rat(1)];
            c.extend(tail);
            TruncatedSeries::new(c)
        })
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(48))]

        #[test]
        fn pow_adds_exponents(s in unit_series(12), a in small_rational(), b in small_rational()) {
            let lhs = s.pow_rational(&(&a + &b)).unwrap();
            let rhs = s.pow_rational(&a).unwrap().mul(&s.pow_rational(&b).unwrap());
            prop_assert_eq!(lhs, rhs);
        }

        #[test]
        fn integer_pow_is_repeated_product(s in unit_series(10), m in 0u32..=6) {
            prop_assert_eq!(s.pow_rational(&rat(m as i64)).unwrap(), s.powi(m));
        }

        #[test]
        fn log_inverts_exp(tail in prop::collection::vec(small_rational(), 8)) {
            let mut c = vec![rat(0)];
            c.extend(tail);
            let s = TruncatedSeries::new(c);
            prop_assert_eq!(s.exp1().unwrap().log1().unwrap(), s);
        }

        #[test]
        fn exp_inverts_log(s in unit_series(8)) {
            prop_assert_eq!(s.log1().unwrap().exp1().unwrap(), s);
        }
    }
}
