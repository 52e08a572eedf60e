//! Partitions, generalized Pochhammer symbols, Jack polynomial values at the
//! all-ones point, and hypergeometric series of matrix argument evaluated at
//! equal arguments.
//!
//! Conventions: `C_κ^(ν)` is the Jack polynomial with Jack parameter `ν`,
//! normalized so that `Σ_{|κ|=k} C_κ^(ν)(x) = (x₁ + … + x_m)^k`. The matching
//! generalized factorial steps by `1/ν` between rows:
//! `[a]_κ^(ν) = Π_j (a − (j−1)/ν)_{κ_j}`. For the β-ensembles in this crate
//! `ν = β/2`.

use std::collections::HashMap;
use std::fmt;

use crate::error::{Error, Result};
use crate::numerics::{ln_factorial, CompensatedSum, SignedLog};
use crate::params::SeriesAccuracy;

/// A weakly decreasing sequence of positive integers.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Partition(Vec<usize>);

impl Partition {
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        if parts.contains(&0) {
            return Err(Error::domain("partition parts must be positive"));
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::domain("partition parts must be weakly decreasing"));
        }
        Ok(Self(parts))
    }

    pub fn empty() -> Self {
        Self(Vec::new())
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    /// `|κ|`
    pub fn weight(&self) -> usize {
        self.0.iter().sum()
    }

    /// `ℓ(κ)`
    pub fn length(&self) -> usize {
        self.0.len()
    }

    pub fn largest(&self) -> usize {
        self.0.first().copied().unwrap_or(0)
    }

    pub fn conjugate(&self) -> Partition {
        let cols = self.largest();
        Partition((0..cols).map(|j| self.0.iter().take_while(|&&p| p > j).count()).collect())
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "∅");
        }
        write!(f, "(")?;
        for (i, p) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, ")")
    }
}

/// All partitions of `k` with at most `max_len` parts, each at most
/// `max_part` (unbounded when `None`), in reverse lexicographic order.
pub fn enumerate_partitions(k: usize, max_len: usize, max_part: Option<usize>) -> Vec<Partition> {
    let mut out = Vec::new();
    let mut stack = Vec::new();
    let cap = max_part.unwrap_or(k).min(k);
    fill(k, max_len, cap, &mut stack, &mut out);
    out
}

fn fill(rest: usize, slots: usize, cap: usize, stack: &mut Vec<usize>, out: &mut Vec<Partition>) {
    if rest == 0 {
        out.push(Partition(stack.clone()));
        return;
    }
    // the remaining slots cannot hold `rest` with parts ≤ cap
    if slots == 0 || slots * cap < rest {
        return;
    }
    for first in (1..=cap.min(rest)).rev() {
        stack.push(first);
        fill(rest - first, slots - 1, first, stack, out);
        stack.pop();
    }
}

/// Memo of [`enumerate_partitions`] keyed by `(k, max_len, max_part)`.
#[derive(Debug, Default)]
pub struct PartitionCache {
    map: HashMap<(usize, usize, Option<usize>), Vec<Partition>>,
}

impl PartitionCache {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn get(&mut self, k: usize, max_len: usize, max_part: Option<usize>) -> &[Partition] {
        self.map
            .entry((k, max_len, max_part))
            .or_insert_with(|| enumerate_partitions(k, max_len, max_part))
    }
}

/// Rising factorial `(a)_k`.
pub fn pochhammer(a: f64, k: usize) -> f64 {
    (0..k).map(|i| a + i as f64).product()
}

fn ln_pochhammer(a: f64, k: usize) -> SignedLog {
    let mut ln = 0.0;
    let mut sign = 1i8;
    for i in 0..k {
        let f = a + i as f64;
        if f == 0.0 {
            return SignedLog::ZERO;
        }
        if f < 0.0 {
            sign = -sign;
        }
        ln += f.abs().ln();
    }
    SignedLog { ln_abs: ln, sign }
}

/// Generalized factorial `[a]_κ^(ν) = Π_j (a − (j−1)/ν)_{κ_j}`.
pub fn gen_factorial(a: f64, kappa: &Partition, nu: f64) -> f64 {
    kappa
        .parts()
        .iter()
        .enumerate()
        .map(|(j, &kj)| pochhammer(a - j as f64 / nu, kj))
        .product()
}

/// [`gen_factorial`] as sign and log-magnitude.
pub fn ln_gen_factorial(a: f64, kappa: &Partition, nu: f64) -> SignedLog {
    kappa
        .parts()
        .iter()
        .enumerate()
        .fold(SignedLog::ONE, |acc, (j, &kj)| acc * ln_pochhammer(a - j as f64 / nu, kj))
}

fn check_nu(nu: f64) -> Result<()> {
    if nu.is_finite() && nu > 0.0 {
        Ok(())
    } else {
        Err(Error::domain(format!("Jack parameter ν must be positive, got {nu}")))
    }
}

/// `ln C_κ^(ν)(1^m)`, or `None` when the value is zero (`ℓ(κ) > m`).
///
/// Cell product over `s = (i, j)` (0-based) with arm `a(s)` and leg `l(s)`:
/// `C = ν^k k! Π (m − i + ν j) / Π [(l + ν(a+1)) (l + 1 + ν a)]`.
pub fn ln_jack_c_one(kappa: &Partition, nu: f64, m_vars: usize) -> Result<Option<f64>> {
    check_nu(nu)?;
    if kappa.length() > m_vars {
        return Ok(None);
    }
    let k = kappa.weight();
    let conj = kappa.conjugate();
    let mut ln = k as f64 * nu.ln() + ln_factorial(k);
    for (i, &row) in kappa.parts().iter().enumerate() {
        for j in 0..row {
            let arm = (row - j - 1) as f64;
            let leg = (conj.0[j] - i - 1) as f64;
            ln += (m_vars as f64 - i as f64 + nu * j as f64).ln();
            ln -= (leg + nu * (arm + 1.0)).ln();
            ln -= (leg + 1.0 + nu * arm).ln();
        }
    }
    Ok(Some(ln))
}

/// `C_κ^(ν)(1^m)`; exactly zero when `ℓ(κ) > m`.
pub fn jack_c_one(kappa: &Partition, nu: f64, m_vars: usize) -> Result<f64> {
    Ok(ln_jack_c_one(kappa, nu, m_vars)?.map_or(0.0, f64::exp))
}

/// Memoized Jack values at `1^m` for one `(ν, m)`.
#[derive(Debug, Clone)]
pub struct JackTable {
    nu: f64,
    m_vars: usize,
    values: HashMap<Partition, Option<f64>>,
}

impl JackTable {
    pub fn new(nu: f64, m_vars: usize) -> Result<Self> {
        check_nu(nu)?;
        Ok(Self {
            nu,
            m_vars,
            values: HashMap::new(),
        })
    }

    pub fn nu(&self) -> f64 {
        self.nu
    }

    pub fn m_vars(&self) -> usize {
        self.m_vars
    }

    /// `ln C_κ(1^m)`, `None` for zero values.
    pub fn ln_value(&mut self, kappa: &Partition) -> Option<f64> {
        let (nu, m) = (self.nu, self.m_vars);
        *self
            .values
            .entry(kappa.clone())
            .or_insert_with(|| ln_jack_c_one(kappa, nu, m).expect("ν validated on construction"))
    }

    pub fn value(&mut self, kappa: &Partition) -> f64 {
        self.ln_value(kappa).map_or(0.0, f64::exp)
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }
}

/// One weight level `Σ_{|κ|=k} Π[a_i]_κ / Π[b_j]_κ · C_κ(1^m)` of a
/// hypergeometric series, without the `x^k / k!` factor.
#[derive(Debug, Clone, Copy)]
pub struct Level {
    pub sum: SignedLog,
    /// Every partition of this weight had a vanishing numerator.
    pub terminated: bool,
}

/// Sums one weight level over partitions with `ℓ(κ) ≤ m` and `κ₁ ≤ max_part`.
pub fn level_sum(
    a_params: &[f64],
    b_params: &[f64],
    table: &mut JackTable,
    partitions: &[Partition],
) -> Result<Level> {
    let nu = table.nu();
    let mut terms = Vec::with_capacity(partitions.len());
    let mut terminated = true;
    for kappa in partitions {
        let num = a_params
            .iter()
            .fold(SignedLog::ONE, |acc, &a| acc * ln_gen_factorial(a, kappa, nu));
        if num.is_zero() {
            continue;
        }
        terminated = false;
        let mut term = num;
        for &b in b_params {
            let den = ln_gen_factorial(b, kappa, nu);
            if den.is_zero() {
                return Err(Error::domain(format!(
                    "denominator parameter {b} has a pole at partition {kappa}"
                )));
            }
            term = term / den;
        }
        if let Some(ln_c) = table.ln_value(kappa) {
            terms.push(term.scale_ln(ln_c));
        }
    }
    Ok(Level {
        sum: SignedLog::sum(&terms),
        terminated,
    })
}

/// Value and first derivative of a series in `x`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SeriesValue {
    pub value: f64,
    pub derivative: f64,
    /// Highest weight included.
    pub last_weight: usize,
}

/// `ₚF_q^(ν)(a; b; x·1^m)` with its derivative in `x`.
///
/// The series is `Σ_k x^k/k! Σ_{|κ|=k, ℓ(κ)≤m} Π[a]_κ/Π[b]_κ · C_κ(1^m)`.
/// It stops when every numerator of a level vanishes, or once a level's
/// contribution has started shrinking and falls below `tail_tol` relative to
/// the running sum.
pub fn hyper_pfq_equal_full(
    a_params: &[f64],
    b_params: &[f64],
    nu: f64,
    m_vars: usize,
    x: f64,
    acc: &SeriesAccuracy,
) -> Result<SeriesValue> {
    check_nu(nu)?;
    let one = SeriesValue {
        value: 1.0,
        derivative: 0.0,
        last_weight: 0,
    };
    if m_vars == 0 {
        return Ok(one);
    }
    let mut table = JackTable::new(nu, m_vars)?;
    let mut value = CompensatedSum::new();
    let mut deriv = CompensatedSum::new();
    value.add(1.0);
    let ln_x = x.abs().ln();
    let x_sign: i8 = if x < 0.0 { -1 } else { 1 };
    let mut prev = f64::INFINITY;
    let mut prev_d = f64::INFINITY;
    for k in 1..=acc.k_max {
        let parts = enumerate_partitions(k, m_vars, None);
        let level = level_sum(a_params, b_params, &mut table, &parts)?;
        if level.terminated {
            return Ok(SeriesValue {
                value: value.value(),
                derivative: deriv.value(),
                last_weight: k - 1,
            });
        }
        if x == 0.0 {
            // only the k = 1 level contributes to the derivative at 0
            return Ok(SeriesValue {
                value: 1.0,
                derivative: level.sum.to_f64(),
                last_weight: 0,
            });
        }
        let sign = if k % 2 == 1 { x_sign } else { 1 };
        let base = SignedLog {
            ln_abs: level.sum.ln_abs - ln_factorial(k - 1),
            sign: level.sum.sign * sign,
        };
        // x^k/k! and x^{k-1}/(k-1)!
        let t = base.scale_ln(k as f64 * ln_x - (k as f64).ln()).to_f64();
        let td = base.scale_ln((k - 1) as f64 * ln_x).to_f64();
        value.add(t);
        deriv.add(td);
        let small = t.abs() <= acc.tail_tol * value.value().abs()
            && td.abs() <= acc.tail_tol * deriv.value().abs().max(f64::MIN_POSITIVE);
        if small && t.abs() <= prev && td.abs() <= prev_d {
            return Ok(SeriesValue {
                value: value.value(),
                derivative: deriv.value(),
                last_weight: k,
            });
        }
        prev = t.abs();
        prev_d = td.abs();
    }
    Err(Error::Divergence {
        tail_tol: acc.tail_tol,
        k_max: acc.k_max,
    })
}

/// `ₚF_q^(ν)(a; b; x·1^m)`.
pub fn hyper_pfq_equal(
    a_params: &[f64],
    b_params: &[f64],
    nu: f64,
    m_vars: usize,
    x: f64,
    acc: &SeriesAccuracy,
) -> Result<f64> {
    hyper_pfq_equal_full(a_params, b_params, nu, m_vars, x, acc).map(|s| s.value)
}
