//! Exact truncated power series for the hook-product formulas.
//!
//! Univariate series count reverse plane partitions by size; multivariate
//! series in `q_k` (one variable per content `k` of the shape) track traces,
//! truncated by total degree. All coefficients are big integers.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::Serialize;

use crate::classical::hg;
use crate::enumeration::{enumerate_rpps, EnumBudget};
use crate::error::Result;
use crate::geometry::{Cell, Partition};

/// `c_0 + c_1 q + … + c_N q^N`, arithmetic modulo `q^{N+1}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TruncatedSeries {
    coeffs: Vec<BigInt>,
}

impl TruncatedSeries {
    pub fn zero(degree: usize) -> Self {
        TruncatedSeries {
            coeffs: vec![BigInt::zero(); degree + 1],
        }
    }

    pub fn one(degree: usize) -> Self {
        let mut s = Self::zero(degree);
        s.coeffs[0] = BigInt::one();
        s
    }

    pub fn from_coeffs(coeffs: Vec<BigInt>) -> Self {
        assert!(
            !coeffs.is_empty(),
            "a series keeps at least the constant term"
        );
        TruncatedSeries { coeffs }
    }

    /// `1/(1 − q^m)` truncated at `degree`.
    pub fn geometric(m: usize, degree: usize) -> Self {
        assert!(m > 0, "1/(1 - q^0) is not a power series");
        let mut s = Self::zero(degree);
        for d in (0..=degree).step_by(m) {
            s.coeffs[d] = BigInt::one();
        }
        s
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn mul(&self, other: &Self) -> Self {
        let n = self.degree().min(other.degree());
        let mut out = Self::zero(n);
        for (i, a) in self.coeffs.iter().enumerate().take(n + 1) {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate().take(n + 1 - i) {
                out.coeffs[i + j] += a * b;
            }
        }
        out
    }

    /// Multiplies in place by `1/(1 − q^m)`: a running sum with stride `m`.
    pub fn mul_geometric(&mut self, m: usize) {
        assert!(m > 0, "1/(1 - q^0) is not a power series");
        for d in m..self.coeffs.len() {
            let prev = self.coeffs[d - m].clone();
            self.coeffs[d] += prev;
        }
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "degree": self.degree(),
            "coefficients": self.coeffs.iter().map(|c| c.to_string()).collect::<Vec<_>>(),
        })
    }
}

impl fmt::Display for TruncatedSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (d, c) in self.coeffs.iter().enumerate() {
            if d > 0 {
                f.write_str(" + ")?;
            }
            match d {
                0 => write!(f, "{c}")?,
                1 => write!(f, "{c}*q")?,
                _ => write!(f, "{c}*q^{d}")?,
            }
        }
        Ok(())
    }
}

/// `∏_{u∈λ} 1/(1 − q^{h(u)})` modulo `q^{N+1}`.
pub fn hook_product(shape: &Partition, n: usize) -> TruncatedSeries {
    let mut s = TruncatedSeries::one(n);
    for u in shape.cells() {
        s.mul_geometric(shape.hook_length_unchecked(u));
    }
    s
}

/// `Σ_π q^{|π|}` by enumeration.
pub fn rpp_series(shape: &Partition, n: usize, budget: &EnumBudget) -> Result<TruncatedSeries> {
    let mut counts = vec![0u64; n + 1];
    for pi in enumerate_rpps(shape, n, budget)? {
        counts[pi.size() as usize] += 1;
    }
    Ok(TruncatedSeries::from_coeffs(
        counts.into_iter().map(BigInt::from).collect(),
    ))
}

/// Exponent vector over `q_k`, `k` from the lowest content of the shape.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct TraceMonomial {
    pub exps: Vec<u32>,
}

impl TraceMonomial {
    pub fn degree(&self) -> u64 {
        self.exps.iter().map(|&e| e as u64).sum()
    }

    fn mul(&self, other: &Self) -> Self {
        TraceMonomial {
            exps: self
                .exps
                .iter()
                .zip(&other.exps)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }
}

/// Sparse series in `q_lo, …, q_hi` truncated at total degree `D`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MultiTraceSeries {
    lo: i32,
    nvars: usize,
    degree: u64,
    terms: BTreeMap<TraceMonomial, BigInt>,
}

impl MultiTraceSeries {
    pub fn zero(lo: i32, nvars: usize, degree: u64) -> Self {
        MultiTraceSeries {
            lo,
            nvars,
            degree,
            terms: BTreeMap::new(),
        }
    }

    /// Variables for every content of `shape`.
    pub fn zero_for(shape: &Partition, degree: u64) -> Self {
        let nvars = if shape.is_empty() {
            0
        } else {
            (shape.max_content() - shape.min_content() + 1) as usize
        };
        Self::zero(shape.min_content(), nvars, degree)
    }

    pub fn one_for(shape: &Partition, degree: u64) -> Self {
        let mut s = Self::zero_for(shape, degree);
        s.add_term(s.unit(), BigInt::one());
        s
    }

    fn unit(&self) -> TraceMonomial {
        TraceMonomial {
            exps: vec![0; self.nvars],
        }
    }

    pub fn degree(&self) -> u64 {
        self.degree
    }

    pub fn terms(&self) -> &BTreeMap<TraceMonomial, BigInt> {
        &self.terms
    }

    /// Monomial with the given exponent for each content.
    pub fn monomial(&self, by_content: impl IntoIterator<Item = (i32, u32)>) -> TraceMonomial {
        let mut m = self.unit();
        for (k, e) in by_content {
            m.exps[(k - self.lo) as usize] += e;
        }
        m
    }

    /// Adds a term, dropping it beyond the truncation degree.
    pub fn add_term(&mut self, m: TraceMonomial, c: BigInt) {
        if m.degree() > self.degree || c.is_zero() {
            return;
        }
        let entry = self.terms.entry(m).or_insert_with(BigInt::zero);
        *entry += c;
        if entry.is_zero() {
            self.terms.retain(|_, v| !v.is_zero());
        }
    }

    /// Multiplies by `1/(1 − m)` for a monomial `m` of positive degree.
    pub fn mul_geometric(&mut self, m: &TraceMonomial) {
        let dm = m.degree();
        assert!(dm > 0, "1/(1 - 1) is not a power series");
        let mut out = Self::zero(self.lo, self.nvars, self.degree);
        for (mono, c) in &self.terms {
            let mut cur = mono.clone();
            while cur.degree() <= self.degree {
                out.add_term(cur.clone(), c.clone());
                cur = cur.mul(m);
            }
        }
        *self = out;
    }

    /// Sets every `q_k` to `q`.
    pub fn specialize(&self) -> TruncatedSeries {
        let mut s = TruncatedSeries::zero(self.degree as usize);
        for (m, c) in &self.terms {
            s.coeffs[m.degree() as usize] += c;
        }
        s
    }

    fn monomial_string(&self, m: &TraceMonomial) -> String {
        let parts: Vec<String> = m
            .exps
            .iter()
            .enumerate()
            .filter(|(_, &e)| e > 0)
            .map(|(i, &e)| {
                let k = self.lo + i as i32;
                if e == 1 {
                    format!("q_{{{k}}}")
                } else {
                    format!("q_{{{k}}}^{e}")
                }
            })
            .collect();
        if parts.is_empty() {
            "1".into()
        } else {
            parts.join(" ")
        }
    }

    pub fn to_json(&self) -> serde_json::Value {
        let terms: serde_json::Map<String, serde_json::Value> = self
            .terms
            .iter()
            .map(|(m, c)| {
                (
                    self.monomial_string(m),
                    serde_json::Value::String(c.to_string()),
                )
            })
            .collect();
        serde_json::json!({
            "degree": self.degree,
            "lowest_content": self.lo,
            "terms": terms,
        })
    }
}

impl fmt::Display for MultiTraceSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (m, c) in &self.terms {
            writeln!(f, "{c} : {}", self.monomial_string(m))?;
        }
        Ok(())
    }
}

/// Contents covered by the rim-hook at `u`: `j − λ'_j ..= λ_i − i`.
fn hook_contents(shape: &Partition, u: Cell) -> std::ops::RangeInclusive<i32> {
    (u.col - shape.col_len(u.col) as i32)..=(shape.row_len(u.row) as i32 - u.row)
}

/// `q^{H(u)} = ∏ q_k` over the contents of the rim-hook at `u`.
pub fn hook_monomial(series: &MultiTraceSeries, shape: &Partition, u: Cell) -> TraceMonomial {
    series.monomial(hook_contents(shape, u).map(|k| (k, 1)))
}

/// `∏_{u∈λ} 1/(1 − q^{H(u)})` truncated at total degree `D`.
pub fn gansner_product(shape: &Partition, d: u64) -> MultiTraceSeries {
    let mut s = MultiTraceSeries::one_for(shape, d);
    for u in shape.cells() {
        let m = hook_monomial(&s, shape, u);
        s.mul_geometric(&m);
    }
    s
}

/// `Σ_π ∏_k q_k^{tr_k(π)}` over all `π` with `|π| ≤ D`, by enumeration.
pub fn trace_series(shape: &Partition, d: u64, budget: &EnumBudget) -> Result<MultiTraceSeries> {
    let mut s = MultiTraceSeries::zero_for(shape, d);
    for pi in enumerate_rpps(shape, d as usize, budget)? {
        let m = s
            .monomial((shape.min_content()..=shape.max_content()).map(|k| (k, pi.trace(k) as u32)));
        s.add_term(m, BigInt::one());
    }
    Ok(s)
}

/// `Σ_π ∏_u q^{H(u)·t(u)}` with `t = HG(π)`: the trace series as seen through
/// the hooks that Hillman–Grassl records.
pub fn hg_trace_series(shape: &Partition, d: u64, budget: &EnumBudget) -> Result<MultiTraceSeries> {
    let mut s = MultiTraceSeries::zero_for(shape, d);
    for pi in enumerate_rpps(shape, d as usize, budget)? {
        let t = hg(&pi);
        let m = s.monomial(shape.cells().flat_map(|u| {
            let e = t.get(u).unwrap_or(0);
            hook_contents(shape, u).map(move |k| (k, e))
        }));
        s.add_term(m, BigInt::one());
    }
    Ok(s)
}

/// Coefficient vectors of two series, for reporting mismatches.
#[derive(Debug, Clone, Serialize)]
pub struct SeriesComparison {
    pub left: Vec<String>,
    pub right: Vec<String>,
    pub equal: bool,
}

pub fn compare(a: &TruncatedSeries, b: &TruncatedSeries) -> SeriesComparison {
    SeriesComparison {
        left: a.coeffs.iter().map(BigInt::to_string).collect(),
        right: b.coeffs.iter().map(BigInt::to_string).collect(),
        equal: a == b,
    }
}
