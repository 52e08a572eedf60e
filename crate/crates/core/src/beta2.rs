//! Exact β = 2 route through a determinant of Laguerre polynomials.
//!
//! For β = 2 and integer `α = M − N`,
//!
//! ```text
//! Q(x) = Γ(MN) x^{MN−1} L⁻¹[ s^{−MN} det[L_{N+k−l}^{(l)}(−s)]_{k,l<α} ]((1 − Nx)/x).
//! ```
//!
//! Writing the determinant as `Σ_j c_j s^j` and inverting term by term with
//! `L⁻¹[s^{−a}](t) = t^{a−1}/Γ(a)` gives
//! `Q(x) = Σ_j c_j Γ(MN)/Γ(MN−j) x^j (1 − Nx)^{MN−j−1}`. The coefficients
//! `c_j` are kept as exact rationals until this final assembly.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::binomial;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::par;
use crate::numerics::{ln_abs_rational, ln_gamma_ratio_falling, rational_from_i64, Rational, SignedLog};

/// Largest `N` of the exact-mode envelope.
pub const EXACT_MAX_N: usize = 30;
/// Largest `α` of the exact-mode envelope.
pub const EXACT_MAX_ALPHA: usize = 6;

/// Polynomial in one variable with exact rational coefficients, lowest power
/// first. The highest stored coefficient is nonzero; the zero polynomial has
/// no coefficients.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct RationalPolynomial {
    coeffs: Vec<Rational>,
}

impl RationalPolynomial {
    pub fn new(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Self { coeffs }
    }

    pub fn zero() -> Self {
        Self::default()
    }

    pub fn constant(c: Rational) -> Self {
        Self::new(vec![c])
    }

    pub fn one() -> Self {
        Self::constant(Rational::one())
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    /// Coefficient of `s^j`, zero past the degree.
    pub fn coeff(&self, j: usize) -> Rational {
        self.coeffs.get(j).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn derivative(&self) -> Self {
        Self::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(j, c)| c * rational_from_i64(j as i64))
                .collect(),
        )
    }

    /// `p(−s)`
    pub fn reflect(&self) -> Self {
        Self::new(
            self.coeffs
                .iter()
                .enumerate()
                .map(|(j, c)| if j % 2 == 1 { -c } else { c.clone() })
                .collect(),
        )
    }

    pub fn eval(&self, s: &Rational) -> Rational {
        self.coeffs
            .iter()
            .rev()
            .fold(Rational::zero(), |acc, c| acc * s + c)
    }

    pub fn eval_f64(&self, s: f64) -> f64 {
        self.coeffs
            .iter()
            .rev()
            .fold(0.0, |acc, c| acc * s + c.to_f64().unwrap_or(f64::NAN))
    }

    /// Polynomial long division: `(q, r)` with `self = q·d + r`, `deg r < deg d`.
    pub fn div_rem(&self, divisor: &Self) -> Result<(Self, Self)> {
        let Some(dd) = divisor.degree() else {
            return Err(Error::domain("polynomial division by zero"));
        };
        let lead = &divisor.coeffs[dd];
        let mut rem = self.coeffs.clone();
        let mut quot = vec![Rational::zero(); self.coeffs.len().saturating_sub(dd)];
        while rem.len() > dd && !rem.is_empty() {
            let top = rem.len() - 1;
            let factor = &rem[top] / lead;
            let shift = top - dd;
            for (j, c) in divisor.coeffs.iter().enumerate() {
                rem[shift + j] -= &factor * c;
            }
            quot[shift] = factor;
            rem.pop();
            while rem.last().is_some_and(Zero::is_zero) {
                rem.pop();
            }
        }
        Ok((Self::new(quot), Self::new(rem)))
    }

    /// Division known to be exact; errors if a remainder appears.
    pub fn div_exact(&self, divisor: &Self) -> Result<Self> {
        let (q, r) = self.div_rem(divisor)?;
        if !r.is_zero() {
            return Err(Error::NumericalInconsistency("inexact polynomial division".into()));
        }
        Ok(q)
    }
}

impl Add for &RationalPolynomial {
    type Output = RationalPolynomial;
    fn add(self, rhs: Self) -> RationalPolynomial {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        RationalPolynomial::new((0..n).map(|j| self.coeff(j) + rhs.coeff(j)).collect())
    }
}

impl Sub for &RationalPolynomial {
    type Output = RationalPolynomial;
    fn sub(self, rhs: Self) -> RationalPolynomial {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        RationalPolynomial::new((0..n).map(|j| self.coeff(j) - rhs.coeff(j)).collect())
    }
}

impl Mul for &RationalPolynomial {
    type Output = RationalPolynomial;
    fn mul(self, rhs: Self) -> RationalPolynomial {
        if self.is_zero() || rhs.is_zero() {
            return RationalPolynomial::zero();
        }
        let mut out = vec![Rational::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        RationalPolynomial::new(out)
    }
}

impl Neg for &RationalPolynomial {
    type Output = RationalPolynomial;
    fn neg(self) -> RationalPolynomial {
        RationalPolynomial::new(self.coeffs.iter().map(|c| -c).collect())
    }
}

impl fmt::Display for RationalPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (j, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let sign = if c.is_negative() { "-" } else { "+" };
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            first = false;
            let a = c.abs();
            match j {
                0 => write!(f, "{a}")?,
                1 => write!(f, "{a}·s")?,
                _ => write!(f, "{a}·s^{j}")?,
            }
        }
        Ok(())
    }
}

fn binom(n: i64, k: i64) -> BigInt {
    if k < 0 || n < 0 || k > n {
        BigInt::zero()
    } else {
        binomial(BigInt::from(n), BigInt::from(k))
    }
}

fn factorial(n: usize) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, i| acc * BigInt::from(i))
}

/// `L_n^{(l)}(x) = Σ_{j=0}^{n} C(n+l, n−j) (−x)^j / j!`; zero for `n < 0`.
fn laguerre_signed(n: i64, l: usize) -> RationalPolynomial {
    if n < 0 {
        return RationalPolynomial::zero();
    }
    let top = n + l as i64;
    RationalPolynomial::new(
        (0..=n as usize)
            .map(|j| {
                let c = Rational::new(binom(top, n - j as i64), factorial(j));
                if j % 2 == 1 {
                    -c
                } else {
                    c
                }
            })
            .collect(),
    )
}

/// Generalized Laguerre polynomial `L_n^{(l)}(x)` with exact coefficients.
pub fn laguerre_poly(n: usize, l: usize) -> RationalPolynomial {
    laguerre_signed(n as i64, l)
}

/// `det[L_{N+k−l}^{(l)}(−s)]_{k,l=0}^{α−1}` as a polynomial in `s`.
///
/// Fraction-free (Bareiss) elimination over `Q[s]`: every division by the
/// previous pivot is exact. Entries with a negative degree index are zero.
pub fn det_laguerre(n_dim: usize, alpha: usize) -> Result<RationalPolynomial> {
    if n_dim < 1 {
        return Err(Error::domain("N must be at least 1"));
    }
    let mut a: Vec<Vec<RationalPolynomial>> = (0..alpha)
        .map(|k| {
            (0..alpha)
                .map(|l| laguerre_signed(n_dim as i64 + k as i64 - l as i64, l).reflect())
                .collect()
        })
        .collect();
    bareiss_det(&mut a)
}

fn bareiss_det(a: &mut [Vec<RationalPolynomial>]) -> Result<RationalPolynomial> {
    let n = a.len();
    if n == 0 {
        return Ok(RationalPolynomial::one());
    }
    let mut negate = false;
    let mut prev = RationalPolynomial::one();
    for k in 0..n - 1 {
        if a[k][k].is_zero() {
            let Some(swap) = (k + 1..n).find(|&r| !a[r][k].is_zero()) else {
                return Ok(RationalPolynomial::zero());
            };
            a.swap(k, swap);
            negate = !negate;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = &(&a[i][j] * &a[k][k]) - &(&a[i][k] * &a[k][j]);
                a[i][j] = num.div_exact(&prev)?;
            }
        }
        prev = a[k][k].clone();
    }
    let det = a[n - 1][n - 1].clone();
    Ok(if negate { -&det } else { det })
}

/// Precomputed β = 2 determinant route for one `(N, M)`.
#[derive(Debug, Clone)]
pub struct Beta2Series {
    n_dim: usize,
    m_dim: usize,
    det: RationalPolynomial,
    /// `c_j Γ(MN)/Γ(MN−j)`
    weights: Vec<SignedLog>,
}

impl Beta2Series {
    pub fn new(n_dim: usize, m_dim: usize) -> Result<Self> {
        if n_dim < 1 || m_dim < n_dim {
            return Err(Error::domain(format!("need M ≥ N ≥ 1, got N = {n_dim}, M = {m_dim}")));
        }
        let alpha = m_dim - n_dim;
        let det = det_laguerre(n_dim, alpha)?;
        let mn = (m_dim * n_dim) as f64;
        let weights = det
            .coeffs()
            .iter()
            .enumerate()
            .map(|(j, c)| {
                if c.is_zero() {
                    return Ok(SignedLog::ZERO);
                }
                Ok(SignedLog {
                    ln_abs: ln_abs_rational(c) + ln_gamma_ratio_falling(mn, j)?,
                    sign: if c.is_negative() { -1 } else { 1 },
                })
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(Self {
            n_dim,
            m_dim,
            det,
            weights,
        })
    }

    pub fn determinant(&self) -> &RationalPolynomial {
        &self.det
    }

    /// True when `(N, α)` lies outside the exact-mode envelope.
    pub fn outside_envelope(&self) -> bool {
        self.n_dim > EXACT_MAX_N || self.m_dim - self.n_dim > EXACT_MAX_ALPHA
    }

    pub fn q(&self, x: f64) -> Result<f64> {
        if !(x >= 0.0) {
            return Err(Error::domain(format!("x must be nonnegative, got {x}")));
        }
        let n = self.n_dim as f64;
        if x * n >= 1.0 || x >= 1.0 / n {
            return Ok(0.0);
        }
        if x == 0.0 {
            return Ok(self.weights.first().map_or(0.0, |w| w.to_f64()));
        }
        let mn = (self.m_dim * self.n_dim) as f64;
        let ln_x = x.ln();
        let ln_u = (-n * x).ln_1p();
        let terms: Vec<SignedLog> = self
            .weights
            .iter()
            .enumerate()
            .map(|(j, w)| {
                let jf = j as f64;
                let xj = if j == 0 { 0.0 } else { jf * ln_x };
                w.scale_ln(xj + (mn - jf - 1.0) * ln_u)
            })
            .collect();
        Ok(SignedLog::sum(&terms).to_f64())
    }

    /// `Q` on a grid, evaluated in parallel.
    pub fn curve(&self, xs: &[f64]) -> Result<Vec<f64>> {
        par::map_slice(xs, |&x| self.q(x)).into_iter().collect()
    }
}

/// `Q_{N,M}(x)` at β = 2 through the Laguerre determinant.
pub fn q_exact_beta2(n_dim: usize, m_dim: usize, x: f64) -> Result<f64> {
    Beta2Series::new(n_dim, m_dim)?.q(x)
}

fn rising(a: i64, k: usize) -> BigInt {
    (0..k as i64).fold(BigInt::one(), |acc, i| acc * BigInt::from(a + i))
}

/// Cross term `(N+1)(−N)_i(−N)_j − N(−N−1)_i(−N+1)_j` of the 2×2 determinant.
pub fn alpha2_cross_term(n: usize, i: usize, j: usize) -> BigInt {
    let n = n as i64;
    BigInt::from(n + 1) * rising(-n, i) * rising(-n, j) - BigInt::from(n) * rising(-n - 1, i) * rising(-n + 1, j)
}

/// Factored form `(−N)_i(−N)_j (N+1)(1+j−i)/(N+1−i)` of [`alpha2_cross_term`].
///
/// For `i ≥ 1`, `(−N)_i/(N+1−i) = −(−N)_{i−1}`, which also covers `i = N+1`
/// where both the numerator and the denominator vanish.
pub fn alpha2_factored_term(n: usize, i: usize, j: usize) -> Rational {
    let ni = n as i64;
    let tail = BigInt::from(ni + 1) * BigInt::from(1 + j as i64 - i as i64) * rising(-ni, j);
    let head = if i == 0 {
        Rational::new(BigInt::one(), BigInt::from(ni + 1))
    } else {
        Rational::from_integer(-rising(-ni, i - 1))
    };
    head * Rational::from_integer(tail)
}

/// Explicit double sum for `M = N + 2`:
/// `Σ_{i,j} (−1)^{i+j}/(i! j!) · (cross term)/((1)_i (2)_j) · Γ(MN)/Γ(MN−i−j) · x^{i+j}(1−Nx)^{MN−1−i−j}`.
pub fn q_alpha2_sum(n_dim: usize, x: f64) -> Result<f64> {
    if n_dim < 1 {
        return Err(Error::domain("N must be at least 1"));
    }
    let n = n_dim as f64;
    if !(x >= 0.0 && x <= 1.0 / n) {
        return Err(Error::domain(format!("x = {x} is outside [0, 1/N]")));
    }
    if x * n >= 1.0 {
        return Ok(0.0);
    }
    let mn = n_dim * (n_dim + 2);
    let ln_x = if x == 0.0 { f64::NEG_INFINITY } else { x.ln() };
    let ln_u = (-n * x).ln_1p();
    let mut terms = Vec::new();
    for i in 0..=n_dim + 1 {
        for j in 0..=n_dim {
            let p = i + j;
            if x == 0.0 && p > 0 {
                continue;
            }
            let denom = factorial(i) * factorial(i) * factorial(j) * rising(2, j);
            let mut coeff = alpha2_factored_term(n_dim, i, j) / Rational::from_integer(denom);
            if p % 2 == 1 {
                coeff = -coeff;
            }
            if coeff.is_zero() {
                continue;
            }
            let pf = p as f64;
            let xp = if p == 0 { 0.0 } else { pf * ln_x };
            terms.push(SignedLog {
                ln_abs: ln_abs_rational(&coeff)
                    + ln_gamma_ratio_falling(mn as f64, p)?
                    + xp
                    + (mn as f64 - 1.0 - pf) * ln_u,
                sign: if coeff.is_negative() { -1 } else { 1 },
            });
        }
    }
    Ok(SignedLog::sum(&terms).to_f64())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64, d: i64) -> Rational {
        Rational::new(BigInt::from(n), BigInt::from(d))
    }

    fn poly(cs: &[(i64, i64)]) -> RationalPolynomial {
        RationalPolynomial::new(cs.iter().map(|&(n, d)| q(n, d)).collect())
    }

    use crate::exact::ExactSeries;
    use crate::params::{EnsembleParams, SeriesAccuracy};

    #[test]
    fn laguerre_small() {
        assert_eq!(laguerre_poly(0, 3), poly(&[(1, 1)]));
        assert_eq!(laguerre_poly(1, 0), poly(&[(1, 1), (-1, 1)]));
        assert_eq!(laguerre_poly(2, 0), poly(&[(1, 1), (-2, 1), (1, 2)]));
        // L_2^{(1)}(x) = 3 − 3x + x²/2
        assert_eq!(laguerre_poly(2, 1), poly(&[(3, 1), (-3, 1), (1, 2)]));
    }

    #[test]
    fn differential_difference_relation() {
        for n in 1..=12 {
            for rho in 0..=4 {
                let lhs = laguerre_poly(n, rho).derivative();
                let rhs = -&laguerre_poly(n - 1, rho + 1);
                assert_eq!(lhs, rhs, "n={n} ρ={rho}");
            }
        }
        assert!(laguerre_poly(0, 2).derivative().is_zero());
    }

    #[test]
    fn polynomial_arithmetic() {
        let a = poly(&[(1, 1), (2, 1), (1, 1)]);
        let b = poly(&[(1, 1), (1, 1)]);
        assert_eq!(a.div_exact(&b).unwrap(), b);
        let (quot, rem) = poly(&[(1, 1), (0, 1), (1, 1)]).div_rem(&b).unwrap();
        assert_eq!(&(&quot * &b) + &rem, poly(&[(1, 1), (0, 1), (1, 1)]));
        assert_eq!(rem.degree(), Some(0));
        assert!(a.div_exact(&poly(&[(1, 1), (3, 1)])).is_err());
        assert!(a.div_rem(&RationalPolynomial::zero()).is_err());
        assert!((&a - &a).is_zero());
        assert_eq!(a.eval(&q(2, 1)), q(9, 1));
        assert_eq!(a.to_string(), "1 + 2·s + 1·s^2");
        assert_eq!(RationalPolynomial::new(vec![q(0, 1), q(0, 1)]), RationalPolynomial::zero());
    }

    #[test]
    fn determinant_examples() {
        assert_eq!(det_laguerre(5, 0).unwrap(), RationalPolynomial::one());
        for n in 1..6 {
            assert_eq!(det_laguerre(n, 1).unwrap(), laguerre_poly(n, 0).reflect());
        }
        assert_eq!(det_laguerre(1, 2).unwrap(), poly(&[(1, 1), (1, 1), (1, 2)]));
        assert!(det_laguerre(0, 2).is_err());
    }

    /// Leibniz expansion over all permutations, the independent oracle for
    /// Bareiss elimination.
    fn leibniz(n_dim: usize, alpha: usize) -> RationalPolynomial {
        fn perms(k: usize) -> Vec<Vec<usize>> {
            if k == 0 {
                return vec![vec![]];
            }
            let mut out = Vec::new();
            for p in perms(k - 1) {
                for pos in 0..=p.len() {
                    let mut q = p.clone();
                    q.insert(pos, k - 1);
                    out.push(q);
                }
            }
            out
        }
        let entry = |k: usize, l: usize| laguerre_signed(n_dim as i64 + k as i64 - l as i64, l).reflect();
        let mut total = RationalPolynomial::zero();
        for p in perms(alpha) {
            let inversions = (0..alpha)
                .flat_map(|i| (i + 1..alpha).map(move |j| (i, j)))
                .filter(|&(i, j)| p[i] > p[j])
                .count();
            let term = (0..alpha).fold(RationalPolynomial::one(), |acc, k| &acc * &entry(k, p[k]));
            total = if inversions % 2 == 0 { &total + &term } else { &total - &term };
        }
        total
    }

    #[test]
    fn bareiss_matches_leibniz() {
        for n in 1..=6 {
            for alpha in 0..=4 {
                assert_eq!(det_laguerre(n, alpha).unwrap(), leibniz(n, alpha), "N={n} α={alpha}");
            }
        }
    }

    #[test]
    fn degree_and_constant_term() {
        for n in 1..=8usize {
            for alpha in 0..=5usize {
                let d = det_laguerre(n, alpha).unwrap();
                assert_eq!(d.degree(), Some(alpha * n), "N={n} α={alpha}");
                // at s = 0 every entry is the binomial C(N+k, N+k−l)
                let mut m: Vec<Vec<RationalPolynomial>> = (0..alpha)
                    .map(|k| {
                        (0..alpha)
                            .map(|l| {
                                let top = (n + k) as i64;
                                RationalPolynomial::constant(Rational::from_integer(binom(top, top - l as i64)))
                            })
                            .collect()
                    })
                    .collect();
                let direct = bareiss_det(&mut m).unwrap().coeff(0);
                assert_eq!(d.coeff(0), direct);
                assert_eq!(d.coeff(0), Rational::one());
            }
        }
    }

    #[test]
    fn cross_term_identity_exact() {
        for n in 1..=10 {
            for i in 0..=10 {
                for j in 0..=10 {
                    assert_eq!(
                        Rational::from_integer(alpha2_cross_term(n, i, j)),
                        alpha2_factored_term(n, i, j),
                        "N={n} i={i} j={j}"
                    );
                }
            }
        }
        assert_eq!(alpha2_cross_term(4, 1, 0), BigInt::zero());
    }

    #[test]
    fn q_examples() {
        for &(n, m) in &[(1, 1), (2, 2), (3, 3), (4, 4)] {
            for &x in &[0.0, 0.05, 0.1, 0.2] {
                let nf = n as f64;
                let expect = if x * nf >= 1.0 { 0.0 } else { (1.0 - nf * x).powi((m * n) as i32 - 1) };
                assert!((q_exact_beta2(n, m, x).unwrap() - expect).abs() < 1e-14);
            }
        }
        for &x in &[0.0, 0.1, 0.25, 0.4, 0.5] {
            let u = 1.0f64 - 2.0 * x;
            let expect = u.powi(5) + 10.0 * x * u.powi(4) + 10.0 * x * x * u.powi(3);
            assert!((q_exact_beta2(2, 3, x).unwrap() - expect).abs() < 1e-14);
        }
        for n in 1..=8 {
            for m in n..n + 6 {
                assert!((q_exact_beta2(n, m, 0.0).unwrap() - 1.0).abs() < 1e-12);
            }
        }
        assert!(q_exact_beta2(2, 3, -0.1).is_err());
        assert!(q_exact_beta2(3, 2, 0.1).is_err());
    }

    #[test]
    fn double_sum_matches_determinant() {
        assert_eq!(q_alpha2_sum(4, 0.0).unwrap(), 1.0);
        for n in 1..=6usize {
            let s = Beta2Series::new(n, n + 2).unwrap();
            for i in 0..=40 {
                let x = i as f64 / (40.0 * n as f64);
                let a = q_alpha2_sum(n, x).unwrap();
                let b = s.q(x).unwrap();
                assert!((a - b).abs() < 1e-12, "N={n} x={x}: {a} vs {b}");
            }
        }
        let d = (q_alpha2_sum(3, 0.05).unwrap() - q_exact_beta2(3, 5, 0.05).unwrap()).abs();
        assert!(d < 1e-12);
        assert!(q_alpha2_sum(3, 0.5).is_err());
        assert!(q_alpha2_sum(3, -0.5).is_err());
    }

    #[test]
    fn route_agreement_with_jack_series() {
        let acc = SeriesAccuracy::default();
        for n in 1..=6usize {
            for alpha in 0..=3usize {
                let params = EnsembleParams::new(2.0, n, n + alpha).unwrap();
                let jack = ExactSeries::new(&params, &acc).unwrap();
                let det = Beta2Series::new(n, n + alpha).unwrap();
                for i in 0..50 {
                    let x = i as f64 / (49.0 * n as f64);
                    let (a, b) = (det.q(x).unwrap(), jack.q(x).unwrap());
                    assert!((a - b).abs() <= 1e-10, "N={n} α={alpha} x={x}: {a} vs {b}");
                }
            }
        }
    }

    #[test]
    fn curve_and_envelope() {
        let s = Beta2Series::new(3, 5).unwrap();
        let xs = [0.0, 0.1, 0.2, 0.3];
        let ys = s.curve(&xs).unwrap();
        for (x, y) in xs.iter().zip(&ys) {
            assert_eq!(*y, s.q(*x).unwrap());
        }
        assert!(s.curve(&[-1.0]).is_err());
        assert!(Beta2Series::new(31, 31).unwrap().outside_envelope());
        assert!(!Beta2Series::new(3, 5).unwrap().outside_envelope());
    }
}
