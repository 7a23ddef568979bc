//! Finite sweeps over the central factorial / Stirling identities, plus the
//! combinatorial oracles (odd-block set partitions, complete homogeneous
//! symmetric functions) used to cross-check the triangles.

use std::fmt;

use num_traits::{Pow, Zero};

use crate::bell::{alternating_ratio_sum, shifted_ratio};
use crate::error::{Error, Result};
use crate::expansions::ClosedForm;
use crate::numbers::{
    choose, rat, ratio, scaled_t, sign, weighted_stirling, Integer, Rational, Triangles,
};

/// Largest set size the partition enumerator accepts (Bell(12) = 4213597).
pub const MAX_ENUMERATION_N: u32 = 12;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IndexRange {
    pub name: &'static str,
    pub lo: i64,
    pub hi: i64,
}

impl IndexRange {
    fn new(name: &'static str, lo: i64, hi: i64) -> Self {
        IndexRange { name, lo, hi }
    }
}

/// One evaluated instance of an identity.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Case {
    pub relation: &'static str,
    pub indices: Vec<(&'static str, i64)>,
    pub lhs: Rational,
    pub rhs: Rational,
}

impl fmt::Display for Case {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} [", self.relation)?;
        for (i, (name, v)) in self.indices.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{name}={v}")?;
        }
        write!(f, "]: lhs = {}, rhs = {}", self.lhs, self.rhs)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CaseStatus {
    Verified,
    /// Evaluated, but outside the range where the identity is claimed.
    OutOfRange,
    Counterexample,
}

/// Outcome of sweeping one identity over a box of indices.
///
/// `counterexamples` is empty exactly when every in-range case held.
/// Out-of-range cases keep the value the identity would have predicted in
/// `rhs`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IdentityReport {
    pub identity_id: String,
    pub ranges: Vec<IndexRange>,
    pub verified: usize,
    pub out_of_range: Vec<Case>,
    pub counterexamples: Vec<Case>,
}

impl IdentityReport {
    fn new(identity_id: &str, ranges: Vec<IndexRange>) -> Self {
        IdentityReport {
            identity_id: identity_id.to_owned(),
            ranges,
            verified: 0,
            out_of_range: Vec::new(),
            counterexamples: Vec::new(),
        }
    }

    fn record(&mut self, in_range: bool, case: Case) -> CaseStatus {
        if !in_range {
            self.out_of_range.push(case);
            CaseStatus::OutOfRange
        } else if case.lhs == case.rhs {
            self.verified += 1;
            CaseStatus::Verified
        } else {
            self.counterexamples.push(case);
            CaseStatus::Counterexample
        }
    }

    pub fn is_verified(&self) -> bool {
        self.counterexamples.is_empty()
    }

    /// One-line summary, e.g. `alt-sum: verified (198 cases, 198 out of range; ...)`.
    pub fn summary(&self) -> String {
        let ranges: Vec<String> = self
            .ranges
            .iter()
            .map(|r| format!("{}={}..{}", r.name, r.lo, r.hi))
            .collect();
        let status = if self.is_verified() {
            "verified".to_owned()
        } else {
            format!("{} counterexamples", self.counterexamples.len())
        };
        format!(
            "{}: {} ({} cases, {} out of range; {})",
            self.identity_id,
            status,
            self.verified + self.counterexamples.len(),
            self.out_of_range.len(),
            ranges.join(" ")
        )
    }
}

fn ratio_t(tri: &Triangles, n: u32, k: u32) -> Rational {
    tri.central_t(n, k) / Rational::from_integer(choose(n, k))
}

/// `T(2j+l+1, l) = 0` for `0 <= j <= max_j`, `0 <= l <= max_l`, and the
/// boundary table `T(2j-1, 2l-1) = T(2j, 2l) = [j = l]` for `1 <= j <= l`.
pub fn check_parity_vanishing(max_j: u32, max_l: u32) -> IdentityReport {
    let tri = Triangles::new();
    let mut report = IdentityReport::new(
        "parity",
        vec![
            IndexRange::new("j", 0, max_j as i64),
            IndexRange::new("l", 0, max_l as i64),
        ],
    );
    for j in 0..=max_j {
        for l in 0..=max_l {
            report.record(
                true,
                Case {
                    relation: "T(2j+l+1,l)=0",
                    indices: vec![("j", j as i64), ("l", l as i64)],
                    lhs: tri.central_t(2 * j + l + 1, l),
                    rhs: Rational::zero(),
                },
            );
        }
    }
    for l in 1..=max_l {
        for j in 1..=l.min(max_j) {
            let expected = rat((j == l) as i64);
            report.record(
                true,
                Case {
                    relation: "T(2j-1,2l-1)=[j=l]",
                    indices: vec![("j", j as i64), ("l", l as i64)],
                    lhs: tri.central_t(2 * j - 1, 2 * l - 1),
                    rhs: expected.clone(),
                },
            );
            report.record(
                true,
                Case {
                    relation: "T(2j,2l)=[j=l]",
                    indices: vec![("j", j as i64), ("l", l as i64)],
                    lhs: tri.central_t(2 * j, 2 * l),
                    rhs: expected,
                },
            );
        }
    }
    report
}

/// `sum_{m=0}^{n} (-1)^m C(n,m) (l/2)^m S(n+l-m, l) / C(n+l-m, l)`.
fn stirling_shifted(tri: &Triangles, n: u32, l: u32) -> Rational {
    shifted_ratio(tri, n, l, ClosedForm::Stirling)
}

/// `sum_{k=0}^{n} (-1)^k C(n,k) (2/l)^k S(k+l, l) / C(k+l, l)`, `l >= 1`.
fn stirling_power_sum(tri: &Triangles, n: u32, l: u32) -> Rational {
    let w = ratio(2, l as i64);
    (0..=n)
        .map(|k| {
            rat(sign(k))
                * Rational::from_integer(choose(n, k))
                * Pow::pow(&w, k)
                * tri.stirling2(k + l, l)
                / Rational::from_integer(choose(k + l, l))
        })
        .sum()
}

/// The T-from-S relations at even and at all offsets, and the vanishing of
/// the odd alternating Stirling sum, for `0 <= j <= max_j`, `1 <= l <= max_l`.
pub fn check_t_s_relations(max_j: u32, max_l: u32) -> IdentityReport {
    let tri = Triangles::new();
    let mut report = IdentityReport::new(
        "ts-relations",
        vec![
            IndexRange::new("j", 0, max_j as i64),
            IndexRange::new("l", 1, max_l as i64),
        ],
    );
    for j in 0..=max_j {
        for l in 1..=max_l {
            let idx = vec![("j", j as i64), ("l", l as i64)];
            report.record(
                true,
                Case {
                    relation: "T(2j+l,l)/C(2j+l,l)=S-sum",
                    indices: idx.clone(),
                    lhs: ratio_t(&tri, 2 * j + l, l),
                    rhs: stirling_shifted(&tri, 2 * j, l),
                },
            );
            report.record(
                true,
                Case {
                    relation: "T(j+l,l)/C(j+l,l)=S-sum",
                    indices: idx.clone(),
                    lhs: ratio_t(&tri, j + l, l),
                    rhs: stirling_shifted(&tri, j, l),
                },
            );
            report.record(
                true,
                Case {
                    relation: "odd alternating S-sum=0",
                    indices: idx,
                    lhs: stirling_power_sum(&tri, 2 * j + 1, l),
                    rhs: Rational::zero(),
                },
            );
        }
    }
    report
}

/// `sum_{j=1}^{k} (-1)^j C(k,j) T(2l+j,j)/C(2l+j,j) = 0` for `1 <= l < k`, in
/// its central-factorial, Stirling, and scaled-triangle forms.
///
/// The sweep covers `2 <= k <= max_k`, `1 <= l <= max_k`; pairs with `l >= k`
/// are reported as out of range.
pub fn check_alternating_t_sum(max_k: u32) -> IdentityReport {
    let tri = Triangles::new();
    let mut report = IdentityReport::new(
        "alt-sum",
        vec![
            IndexRange::new("k", 2, max_k as i64),
            IndexRange::new("l", 1, max_k as i64),
        ],
    );
    for l in 1..=max_k {
        let n = 2 * l;
        let cfn: Vec<Rational> = (0..=max_k)
            .map(|j| shifted_ratio(&tri, n, j, ClosedForm::Cfn))
            .collect();
        let stir: Vec<Rational> = (0..=max_k)
            .map(|j| shifted_ratio(&tri, n, j, ClosedForm::Stirling))
            .collect();
        for k in 2..=max_k {
            let in_range = l < k;
            let idx = vec![("k", k as i64), ("l", l as i64)];
            report.record(
                in_range,
                Case {
                    relation: "alternating T-sum=0",
                    indices: idx.clone(),
                    lhs: alternating_ratio_sum(&cfn, k),
                    rhs: Rational::zero(),
                },
            );
            report.record(
                in_range,
                Case {
                    relation: "alternating S-sum=0",
                    indices: idx.clone(),
                    lhs: alternating_ratio_sum(&stir, k),
                    rhs: Rational::zero(),
                },
            );
            let scaled: Integer = (1..=k)
                .map(|j| {
                    let t = scaled_t(n + j, j).expect("n + j >= j");
                    let term = choose(n + k, n + j) * t;
                    if (k - j) % 2 == 0 {
                        term
                    } else {
                        -term
                    }
                })
                .sum();
            report.record(
                in_range,
                Case {
                    relation: "binomial-weighted scaled sum=0",
                    indices: idx,
                    lhs: Rational::from_integer(scaled),
                    rhs: Rational::zero(),
                },
            );
        }
    }
    report
}

/// Visits every set partition of `{0, .., n-1}` as a restricted growth
/// string together with its block sizes.
pub fn for_each_set_partition<F>(n: u32, mut visit: F) -> Result<()>
where
    F: FnMut(&[u8], &[usize]),
{
    if n > MAX_ENUMERATION_N {
        return Err(Error::EnumerationTooLarge {
            n,
            max: MAX_ENUMERATION_N,
        });
    }
    let n = n as usize;
    let mut rgs = vec![0u8; n];
    let mut sizes: Vec<usize> = Vec::with_capacity(n);
    fn rec<F: FnMut(&[u8], &[usize])>(
        pos: usize,
        rgs: &mut [u8],
        sizes: &mut Vec<usize>,
        visit: &mut F,
    ) {
        if pos == rgs.len() {
            visit(rgs, sizes);
            return;
        }
        for b in 0..sizes.len() {
            rgs[pos] = b as u8;
            sizes[b] += 1;
            rec(pos + 1, rgs, sizes, visit);
            sizes[b] -= 1;
        }
        rgs[pos] = sizes.len() as u8;
        sizes.push(1);
        rec(pos + 1, rgs, sizes, visit);
        sizes.pop();
    }
    rec(0, &mut rgs, &mut sizes, &mut visit);
    Ok(())
}

/// `counts[k]` = number of partitions of an `n`-set into `k` blocks, all of
/// odd size.
pub fn odd_block_partition_counts(n: u32) -> Result<Vec<Integer>> {
    let mut counts = vec![0u64; n as usize + 1];
    for_each_set_partition(n, |_, sizes| {
        if sizes.iter().all(|s| s % 2 == 1) {
            counts[sizes.len()] += 1;
        }
    })?;
    Ok(counts.into_iter().map(Integer::from).collect())
}

/// Brute-force count of partitions of `n` elements into `k` odd-sized blocks.
pub fn count_odd_block_partitions(n: u32, k: u32) -> Result<Integer> {
    let counts = odd_block_partition_counts(n)?;
    Ok(counts.get(k as usize).cloned().unwrap_or_default())
}

/// Complete homogeneous symmetric polynomial `h_m` evaluated at `vars`.
pub fn complete_homogeneous(m: u32, vars: &[Rational]) -> Rational {
    // h[d] over the variables seen so far; h_d(x_1..x_i) = h_d(x_1..x_{i-1}) + x_i h_{d-1}(x_1..x_i)
    let mut h = vec![Rational::zero(); m as usize + 1];
    h[0] = rat(1);
    for x in vars {
        for d in 1..=m as usize {
            let add = x * &h[d - 1];
            h[d] += add;
        }
    }
    h.swap_remove(m as usize)
}

/// `2^{n-k} T(n,k)` against the enumerated odd-block partition counts, for
/// `0 <= k <= n <= max_n`.
pub fn check_odd_blocks(max_n: u32) -> Result<IdentityReport> {
    let mut report = IdentityReport::new("odd-blocks", vec![IndexRange::new("n", 0, max_n as i64)]);
    for n in 0..=max_n {
        let counts = odd_block_partition_counts(n)?;
        for k in 0..=n {
            report.record(
                true,
                Case {
                    relation: "2^(n-k)T(n,k)=#odd-block partitions",
                    indices: vec![("n", n as i64), ("k", k as i64)],
                    lhs: Rational::from_integer(scaled_t(n, k)?),
                    rhs: Rational::from_integer(counts[k as usize].clone()),
                },
            );
        }
    }
    Ok(report)
}

/// Sample weights for the symmetric-function sweep.
pub fn default_symfun_weights() -> Vec<Rational> {
    vec![rat(0), rat(1), ratio(-1, 2), ratio(3, 7)]
}

/// `R(n,k,r) = h_{n-k}(r, r+1, .., r+k)` for `0 <= k <= n <= max_n` and each
/// weight, plus the cancellation `h_{2m-1}(-j/2, .., j/2) = 0` for
/// `2m - 1 + j <= max_n`.
pub fn check_symfun(max_n: u32, weights: &[Rational]) -> IdentityReport {
    let mut report = IdentityReport::new("symfun", vec![IndexRange::new("n", 0, max_n as i64)]);
    for (w_idx, r) in weights.iter().enumerate() {
        for n in 0..=max_n {
            for k in 0..=n {
                let vars: Vec<Rational> = (0..=k).map(|i| r + rat(i as i64)).collect();
                report.record(
                    true,
                    Case {
                        relation: "R(n,k,r)=h_(n-k)(r..r+k)",
                        indices: vec![("n", n as i64), ("k", k as i64), ("weight", w_idx as i64)],
                        lhs: weighted_stirling(n, k, r),
                        rhs: complete_homogeneous(n - k, &vars),
                    },
                );
            }
        }
    }
    for j in 1..=max_n {
        for m in 1..=max_n {
            if 2 * m - 1 + j > max_n {
                break;
            }
            let vars: Vec<Rational> = (0..=j).map(|i| ratio(2 * i as i64 - j as i64, 2)).collect();
            report.record(
                true,
                Case {
                    relation: "h_(2m-1)(-j/2..j/2)=0",
                    indices: vec![("m", m as i64), ("j", j as i64)],
                    lhs: complete_homogeneous(2 * m - 1, &vars),
                    rhs: Rational::zero(),
                },
            );
        }
    }
    report
}
