//! Exact integers, rationals and the number triangles built on them.
//!
//! Every triangle entry is evaluated from its explicit alternating sum in
//! integer arithmetic and divided out once at the end, so identities that
//! predict an exact zero really produce `0`.

use std::collections::HashMap;
use std::sync::Mutex;

use num_bigint::BigInt;
use num_integer::Integer as _;
use num_rational::BigRational;
use num_traits::{One, Pow, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// Arbitrary-precision signed integer.
pub type Integer = BigInt;
/// Exact fraction with positive, coprime denominator.
pub type Rational = BigRational;

pub(crate) fn int(v: i64) -> Integer {
    Integer::from(v)
}

pub(crate) fn rat(v: i64) -> Rational {
    Rational::from_integer(Integer::from(v))
}

pub(crate) fn ratio(p: i64, q: i64) -> Rational {
    Rational::new(Integer::from(p), Integer::from(q))
}

/// `(-1)^e` as a small integer.
pub(crate) fn sign(e: u32) -> i64 {
    if e.is_multiple_of(2) {
        1
    } else {
        -1
    }
}

/// Parses `"P/Q"` or `"P"` into a reduced rational. Decimals are rejected.
pub fn parse_rational(input: &str) -> Result<Rational> {
    let err = |reason: &str| Error::Parse {
        input: input.to_owned(),
        reason: reason.to_owned(),
    };
    let s = input.trim();
    let (p, q) = match s.split_once('/') {
        Some((p, q)) => (p.trim(), q.trim()),
        None => (s, "1"),
    };
    let num: Integer = p.parse().map_err(|_| err("bad numerator"))?;
    let den: Integer = q.parse().map_err(|_| err("bad denominator"))?;
    if den.is_zero() {
        return Err(err("zero denominator"));
    }
    Ok(Rational::new(num, den))
}

/// `C(n, k)` for any `k`; zero outside `0 <= k <= n`.
pub fn binomial(n: i64, k: i64) -> Result<Integer> {
    if n < 0 {
        return Err(Error::NegativeArgument {
            name: "n",
            value: n,
        });
    }
    if k < 0 || k > n {
        return Ok(Integer::zero());
    }
    Ok(choose(n as u32, k as u32))
}

/// Unchecked binomial for non-negative indices; zero when `k > n`.
pub(crate) fn choose(n: u32, k: u32) -> Integer {
    if k > n {
        return Integer::zero();
    }
    let k = k.min(n - k);
    let mut acc = Integer::one();
    for i in 0..k {
        acc *= n - i;
        acc /= i + 1;
    }
    acc
}

pub fn factorial(n: u32) -> Integer {
    (1..=n).fold(Integer::one(), |acc, i| acc * i)
}

/// Rising factorial `r (r+1) ... (r+k-1)`.
pub fn rising_factorial(r: &Rational, k: u32) -> Rational {
    (0..k).fold(Rational::one(), |acc, i| acc * (r + rat(i as i64)))
}

/// Falling factorial `r (r-1) ... (r-k+1)`.
pub fn falling_factorial(r: &Rational, k: u32) -> Rational {
    (0..k).fold(Rational::one(), |acc, i| acc * (r - rat(i as i64)))
}

/// Stirling numbers of the second kind, from the weighted explicit sum at `r = 0`.
pub fn stirling2(n: u32, k: u32) -> Integer {
    if k > n {
        return Integer::zero();
    }
    let mut sum = Integer::zero();
    for j in 0..=k {
        let term = choose(k, j) * Pow::pow(int(j as i64), n);
        if (k - j).is_multiple_of(2) {
            sum += term;
        } else {
            sum -= term;
        }
    }
    let (q, rem) = sum.div_rem(&factorial(k));
    debug_assert!(rem.is_zero());
    q
}

/// Carlitz's weighted Stirling number `R(n, k, r)`.
pub fn weighted_stirling(n: u32, k: u32, r: &Rational) -> Rational {
    let p = r.numer();
    let q = r.denom();
    let mut sum = Integer::zero();
    for j in 0..=k {
        let base = p + q * j;
        let term = choose(k, j) * Pow::pow(base, n);
        if (k - j).is_multiple_of(2) {
            sum += term;
        } else {
            sum -= term;
        }
    }
    Rational::new(sum, Pow::pow(q.clone(), n) * factorial(k))
}

/// Central factorial number of the second kind `T(n, k)`.
///
/// `T(0,0) = 1` and `T(n,0) = 0` for `n >= 1`. The base `k/2 - j` is carried
/// as `(k - 2j) / 2`, so the sum is an integer over `2^n k!`.
pub fn central_factorial_t(n: u32, k: u32) -> Rational {
    let mut sum = Integer::zero();
    for j in 0..=k {
        let base = int(k as i64 - 2 * j as i64);
        let term = choose(k, j) * Pow::pow(base, n);
        if j % 2 == 0 {
            sum += term;
        } else {
            sum -= term;
        }
    }
    Rational::new(sum, (Integer::one() << n as usize) * factorial(k))
}

/// `2^(n-k) T(n, k)`, the number of partitions of an `n`-set into `k` odd blocks.
pub fn scaled_t(n: u32, k: u32) -> Result<Integer> {
    if k > n {
        return Err(Error::IndexOutOfRange { n, k });
    }
    let scaled =
        central_factorial_t(n, k) * Rational::from_integer(Integer::one() << (n - k) as usize);
    assert!(
        scaled.is_integer(),
        "2^(n-k) T({n},{k}) = {scaled} is not an integer"
    );
    Ok(scaled.to_integer())
}

type EntryCache = HashMap<(TriangleKind, u32, u32), Rational>;

/// Which triangle a cached entry belongs to.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum TriangleKind {
    Stirling2,
    WeightedStirling(Rational),
    CentralFactorial,
    ScaledCentralFactorial,
}

impl TriangleKind {
    /// Evaluates the entry without any cache.
    pub fn entry(&self, n: u32, k: u32) -> Result<Rational> {
        Ok(match self {
            TriangleKind::Stirling2 => Rational::from_integer(stirling2(n, k)),
            TriangleKind::WeightedStirling(r) => weighted_stirling(n, k, r),
            TriangleKind::CentralFactorial => central_factorial_t(n, k),
            TriangleKind::ScaledCentralFactorial => Rational::from_integer(scaled_t(n, k)?),
        })
    }
}

/// Memoising front end for triangle entries.
///
/// The cache is per instance and guarded by a mutex; a [`Triangles::uncached`]
/// instance returns exactly the same values.
#[derive(Debug, Default)]
pub struct Triangles {
    cache: Option<Mutex<EntryCache>>,
}

impl Triangles {
    pub fn new() -> Self {
        Triangles {
            cache: Some(Mutex::new(HashMap::new())),
        }
    }

    pub fn uncached() -> Self {
        Triangles { cache: None }
    }

    pub fn entry(&self, kind: &TriangleKind, n: u32, k: u32) -> Result<Rational> {
        let Some(cache) = &self.cache else {
            return kind.entry(n, k);
        };
        let key = (kind.clone(), n, k);
        if let Some(v) = cache.lock().unwrap().get(&key) {
            return Ok(v.clone());
        }
        // computed outside the lock; a racing insert stores the same value
        let v = kind.entry(n, k)?;
        cache.lock().unwrap().insert(key, v.clone());
        Ok(v)
    }

    pub fn stirling2(&self, n: u32, k: u32) -> Rational {
        self.entry(&TriangleKind::Stirling2, n, k)
            .expect("Stirling entries are total")
    }

    pub fn central_t(&self, n: u32, k: u32) -> Rational {
        self.entry(&TriangleKind::CentralFactorial, n, k)
            .expect("central factorial entries are total")
    }

    pub fn len(&self) -> usize {
        self.cache.as_ref().map_or(0, |c| c.lock().unwrap().len())
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }
}

/// Exact `r`-th power of a positive-or-zero rational, when it is rational.
pub(crate) fn rational_power(base: &Rational, exponent: &Rational) -> Result<Rational> {
    let irrational = || Error::IrrationalPower {
        base: Box::new(base.clone()),
        exponent: Box::new(exponent.clone()),
    };
    let p = exponent.numer();
    let q = exponent.denom().to_u32().ok_or_else(irrational)?;
    let mut root = base.clone();
    if q != 1 {
        if base.is_negative() {
            return Err(irrational());
        }
        let num = base.numer().nth_root(q);
        let den = base.denom().nth_root(q);
        if Pow::pow(&num, q) != *base.numer() || Pow::pow(&den, q) != *base.denom() {
            return Err(irrational());
        }
        root = Rational::new(num, den);
    }
    let e = p.abs().to_u32().ok_or_else(irrational)?;
    if root.is_zero() && p.is_negative() {
        return Err(Error::Domain("zero raised to a negative power".into()));
    }
    let powered = Pow::pow(root, e);
    Ok(if p.is_negative() {
        powered.recip()
    } else {
        powered
    })
}
