use num_bigint::BigInt;
use num_traits::{Signed, ToPrimitive, Zero};

/// Arbitrary-precision rational in lowest terms with positive denominator.
pub type Rational = num_rational::BigRational;

pub fn rational_from_i64(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// `ln |r|`, robust to numerators and denominators beyond `f64` range.
/// Returns `-inf` for zero.
pub fn ln_abs_rational(r: &Rational) -> f64 {
    if r.is_zero() {
        return f64::NEG_INFINITY;
    }
    ln_abs_bigint(r.numer()) - ln_abs_bigint(r.denom())
}

fn ln_abs_bigint(n: &BigInt) -> f64 {
    let n = n.abs();
    let bits = n.bits();
    if bits <= 1000 {
        return n.to_f64().unwrap_or(f64::INFINITY).ln();
    }
    let shift = bits - 64;
    let top = (&n >> shift).to_f64().unwrap_or(f64::INFINITY);
    top.ln() + shift as f64 * std::f64::consts::LN_2
}
