/// Neumaier-compensated running sum.
#[derive(Debug, Clone, Copy, Default)]
pub struct CompensatedSum {
    sum: f64,
    carry: f64,
}

impl CompensatedSum {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn add(&mut self, x: f64) {
        let t = self.sum + x;
        if self.sum.abs() >= x.abs() {
            self.carry += (self.sum - t) + x;
        } else {
            self.carry += (x - t) + self.sum;
        }
        self.sum = t;
    }

    pub fn value(&self) -> f64 {
        self.sum + self.carry
    }
}

impl Extend<f64> for CompensatedSum {
    fn extend<I: IntoIterator<Item = f64>>(&mut self, iter: I) {
        for x in iter {
            self.add(x);
        }
    }
}

impl FromIterator<f64> for CompensatedSum {
    fn from_iter<I: IntoIterator<Item = f64>>(iter: I) -> Self {
        let mut s = Self::new();
        s.extend(iter);
        s
    }
}

/// A real stored as `sign · exp(ln_abs)`; `sign == 0` encodes an exact zero.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SignedLog {
    pub ln_abs: f64,
    pub sign: i8,
}

impl SignedLog {
    pub const ZERO: SignedLog = SignedLog {
        ln_abs: f64::NEG_INFINITY,
        sign: 0,
    };
    pub const ONE: SignedLog = SignedLog { ln_abs: 0.0, sign: 1 };

    pub fn from_f64(x: f64) -> Self {
        if x == 0.0 {
            Self::ZERO
        } else {
            Self {
                ln_abs: x.abs().ln(),
                sign: if x > 0.0 { 1 } else { -1 },
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.sign == 0
    }

    /// Multiplies the magnitude by `exp(ln_factor)`.
    pub fn scale_ln(self, ln_factor: f64) -> SignedLog {
        if self.is_zero() {
            self
        } else {
            SignedLog {
                ln_abs: self.ln_abs + ln_factor,
                sign: self.sign,
            }
        }
    }

    pub fn to_f64(self) -> f64 {
        if self.is_zero() {
            0.0
        } else {
            f64::from(self.sign) * self.ln_abs.exp()
        }
    }

    /// Sums terms by scaling with the largest magnitude, then compensated
    /// accumulation in the linear domain.
    pub fn sum(terms: &[SignedLog]) -> SignedLog {
        let max = terms
            .iter()
            .filter(|t| !t.is_zero())
            .map(|t| t.ln_abs)
            .fold(f64::NEG_INFINITY, f64::max);
        if max == f64::NEG_INFINITY {
            return Self::ZERO;
        }
        let acc: CompensatedSum = terms
            .iter()
            .filter(|t| !t.is_zero())
            .map(|t| f64::from(t.sign) * (t.ln_abs - max).exp())
            .collect();
        SignedLog::from_f64(acc.value()).scale_ln(max)
    }
}

impl std::ops::Mul for SignedLog {
    type Output = SignedLog;

    fn mul(self, other: SignedLog) -> SignedLog {
        if self.is_zero() || other.is_zero() {
            SignedLog::ZERO
        } else {
            SignedLog {
                ln_abs: self.ln_abs + other.ln_abs,
                sign: self.sign * other.sign,
            }
        }
    }
}

impl std::ops::Div for SignedLog {
    type Output = SignedLog;

    fn div(self, other: SignedLog) -> SignedLog {
        debug_assert!(!other.is_zero());
        if self.is_zero() {
            SignedLog::ZERO
        } else {
            SignedLog {
                ln_abs: self.ln_abs - other.ln_abs,
                sign: self.sign * other.sign,
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn compensated_beats_naive() {
        let xs = [1.0, 1e100, 1.0, -1e100];
        let s: CompensatedSum = xs.iter().copied().collect();
        assert_eq!(s.value(), 2.0);
    }

    #[test]
    fn signed_log_sum() {
        let terms = [
            SignedLog::from_f64(3.0),
            SignedLog::from_f64(-1.0),
            SignedLog::ZERO,
        ];
        let s = SignedLog::sum(&terms);
        assert!((s.to_f64() - 2.0).abs() < 1e-15);
        assert!(SignedLog::sum(&[]).is_zero());
        let big = SignedLog::sum(&[SignedLog { ln_abs: 1000.0, sign: 1 }; 2]);
        assert!((big.ln_abs - 1000.0 - 2f64.ln()).abs() < 1e-12);
    }
}
