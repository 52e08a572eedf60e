use std::cmp::Ordering;
use std::collections::BinaryHeap;

use super::sum::CompensatedSum;
use crate::error::{Error, Result};

const XGK: [f64; 8] = [
    0.991_455_371_120_812_6,
    0.949_107_912_342_758_5,
    0.864_864_423_359_769_1,
    0.741_531_185_599_394_4,
    0.586_087_235_467_691_1,
    0.405_845_151_377_397_2,
    0.207_784_955_007_898_5,
    0.0,
];
const WGK: [f64; 8] = [
    0.022_935_322_010_529_22,
    0.063_092_092_629_978_55,
    0.104_790_010_322_250_2,
    0.140_653_259_715_525_9,
    0.169_004_726_639_267_9,
    0.190_350_578_064_785_4,
    0.204_432_940_075_298_9,
    0.209_482_141_084_727_8,
];
// Gauss weights for the odd-indexed Kronrod nodes 1, 3, 5, 7.
const WG: [f64; 4] = [
    0.129_484_966_168_869_7,
    0.279_705_391_489_276_7,
    0.381_830_050_505_118_9,
    0.417_959_183_673_469_4,
];

const MAX_PANELS: usize = 4000;

/// 15-point Kronrod estimate and its embedded 7-point Gauss estimate.
fn gk15<F: Fn(f64) -> f64>(f: &F, a: f64, b: f64) -> (f64, f64) {
    let c = 0.5 * (a + b);
    let h = 0.5 * (b - a);
    let fc = f(c);
    let mut kron = WGK[7] * fc;
    let mut gauss = WG[3] * fc;
    for i in 0..7 {
        let dx = h * XGK[i];
        let pair = f(c - dx) + f(c + dx);
        kron += WGK[i] * pair;
        if i % 2 == 1 {
            gauss += WG[i / 2] * pair;
        }
    }
    (kron * h, gauss * h)
}

struct Panel {
    a: f64,
    b: f64,
    value: f64,
    error: f64,
}

impl Panel {
    fn new<F: Fn(f64) -> f64>(f: &F, a: f64, b: f64) -> Self {
        let (k, g) = gk15(f, a, b);
        Panel {
            a,
            b,
            value: k,
            error: (k - g).abs(),
        }
    }
}

impl PartialEq for Panel {
    fn eq(&self, other: &Self) -> bool {
        self.error == other.error
    }
}
impl Eq for Panel {}
impl PartialOrd for Panel {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}
impl Ord for Panel {
    fn cmp(&self, other: &Self) -> Ordering {
        self.error.total_cmp(&other.error)
    }
}

/// Globally adaptive Gauss–Kronrod (7/15) integration of `f` over `[a, b]`:
/// the panel with the largest Kronrod/Gauss gap is bisected until the summed
/// gap is below `abs_tol`.
pub fn integrate_adaptive<F: Fn(f64) -> f64>(f: &F, a: f64, b: f64, abs_tol: f64) -> Result<f64> {
    if !(abs_tol > 0.0) {
        return Err(Error::domain("quadrature tolerance must be positive"));
    }
    if a == b {
        return Ok(0.0);
    }
    let mut heap = BinaryHeap::new();
    heap.push(Panel::new(f, a, b));
    loop {
        let (value, error) = heap.iter().fold((0.0, 0.0), |(v, e), p| (v + p.value, e + p.error));
        if !value.is_finite() {
            return Err(Error::NumericalInconsistency(format!("non-finite integrand on [{a}, {b}]")));
        }
        if error <= abs_tol.max(50.0 * f64::EPSILON * value.abs()) {
            let total: CompensatedSum = heap.iter().map(|p| p.value).collect();
            return Ok(total.value());
        }
        if heap.len() >= MAX_PANELS {
            return Err(Error::Divergence {
                tail_tol: abs_tol,
                k_max: MAX_PANELS,
            });
        }
        let worst = heap.pop().expect("heap is never empty");
        let mid = 0.5 * (worst.a + worst.b);
        if mid <= worst.a || mid >= worst.b {
            // panel no longer splittable in floating point; accept it as is
            let total: CompensatedSum = heap.iter().map(|p| p.value).chain([worst.value]).collect();
            return Ok(total.value());
        }
        heap.push(Panel::new(f, worst.a, mid));
        heap.push(Panel::new(f, mid, worst.b));
    }
}
