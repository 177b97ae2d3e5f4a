//! Globally adaptive Gauss-Kronrod quadrature on finite intervals.
//!
//! Improper integrals in this crate are handled by the callers, which pick a
//! truncation point from a known tail bound and record it alongside the
//! result.

use std::cmp::Ordering;
use std::collections::BinaryHeap;

use crate::error::{Error, Result};

#[allow(clippy::excessive_precision)]
const XGK: [f64; 8] = [
    0.991_455_371_120_812_639_206_854_697_526_329,
    0.949_107_912_342_758_524_526_189_684_047_851,
    0.864_864_423_359_769_072_789_712_788_640_926,
    0.741_531_185_599_394_439_863_864_773_280_788,
    0.586_087_235_467_691_130_294_144_838_258_730,
    0.405_845_151_377_397_166_906_606_412_076_961,
    0.207_784_955_007_898_467_600_689_403_773_245,
    0.0,
];

#[allow(clippy::excessive_precision)]
const WG: [f64; 4] = [
    0.129_484_966_168_869_693_270_611_432_679_082,
    0.279_705_391_489_276_667_901_467_771_423_780,
    0.381_830_050_505_118_944_950_369_775_488_975,
    0.417_959_183_673_469_387_755_102_040_816_327,
];

#[allow(clippy::excessive_precision)]
const WGK: [f64; 8] = [
    0.022_935_322_010_529_224_963_732_008_058_970,
    0.063_092_092_629_978_553_290_700_663_189_204,
    0.104_790_010_322_250_183_839_876_322_541_518,
    0.140_653_259_715_525_918_745_189_590_510_238,
    0.169_004_726_639_267_902_826_583_426_598_550,
    0.190_350_578_064_785_409_913_256_402_421_014,
    0.204_432_940_075_298_892_414_161_999_234_649,
    0.209_482_141_084_727_828_012_999_174_891_714,
];

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct QuadOptions {
    /// Requested bound on the total absolute error estimate.
    pub abs_tol: f64,
    /// Requested bound relative to the magnitude of the integral.
    pub rel_tol: f64,
    /// Hard cap on the number of live subintervals.
    pub max_intervals: usize,
    /// Uniform pieces each breakpoint segment is split into before adapting.
    pub initial_pieces: usize,
}

impl Default for QuadOptions {
    fn default() -> Self {
        Self {
            abs_tol: 1e-10,
            rel_tol: 1e-13,
            max_intervals: 20_000,
            initial_pieces: 4,
        }
    }
}

impl QuadOptions {
    /// Same tolerances with twice the initial resolution.
    pub fn refined(self) -> Self {
        Self {
            initial_pieces: self.initial_pieces * 2,
            ..self
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Integral {
    pub value: f64,
    pub abs_error: f64,
    pub intervals: usize,
}

#[derive(Debug, Clone, Copy)]
struct Piece {
    a: f64,
    b: f64,
    value: f64,
    error: f64,
}

impl PartialEq for Piece {
    fn eq(&self, other: &Self) -> bool {
        self.error.total_cmp(&other.error) == Ordering::Equal
    }
}

impl Eq for Piece {}

impl PartialOrd for Piece {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Piece {
    fn cmp(&self, other: &Self) -> Ordering {
        self.error.total_cmp(&other.error)
    }
}

fn kronrod15(f: &mut impl FnMut(f64) -> f64, a: f64, b: f64) -> Piece {
    let center = 0.5 * (a + b);
    let half = 0.5 * (b - a);
    let f_center = f(center);
    let mut gauss = f_center * WG[3];
    let mut kronrod = f_center * WGK[7];
    let mut res_abs = kronrod.abs();
    let mut fv1 = [0.0; 7];
    let mut fv2 = [0.0; 7];
    for j in 0..7 {
        let dx = half * XGK[j];
        let f1 = f(center - dx);
        let f2 = f(center + dx);
        fv1[j] = f1;
        fv2[j] = f2;
        kronrod += WGK[j] * (f1 + f2);
        res_abs += WGK[j] * (f1.abs() + f2.abs());
        if j % 2 == 1 {
            gauss += WG[j / 2] * (f1 + f2);
        }
    }
    let mean = 0.5 * kronrod;
    let mut res_asc = WGK[7] * (f_center - mean).abs();
    for j in 0..7 {
        res_asc += WGK[j] * ((fv1[j] - mean).abs() + (fv2[j] - mean).abs());
    }
    let value = kronrod * half;
    let res_abs = res_abs * half.abs();
    let res_asc = res_asc * half.abs();
    let mut error = ((kronrod - gauss) * half).abs();
    if res_asc != 0.0 && error != 0.0 {
        error = res_asc * (200.0 * error / res_asc).powf(1.5).min(1.0);
    }
    if res_abs > f64::MIN_POSITIVE / (50.0 * f64::EPSILON) {
        error = error.max(50.0 * f64::EPSILON * res_abs);
    }
    Piece { a, b, value, error }
}

/// Integrates `f` over `[points[0], points[last]]`, using the interior points
/// as forced breakpoints.
pub fn integrate(
    mut f: impl FnMut(f64) -> f64,
    points: &[f64],
    opts: QuadOptions,
) -> Result<Integral> {
    assert!(points.len() >= 2, "need at least two breakpoints");
    let mut heap = BinaryHeap::new();
    for w in points.windows(2) {
        let (a, b) = (w[0], w[1]);
        if !(b > a) {
            continue;
        }
        let pieces = opts.initial_pieces.max(1);
        let step = (b - a) / pieces as f64;
        for i in 0..pieces {
            let lo = a + step * i as f64;
            let hi = if i + 1 == pieces { b } else { lo + step };
            heap.push(kronrod15(&mut f, lo, hi));
        }
    }
    if heap.is_empty() {
        return Ok(Integral {
            value: 0.0,
            abs_error: 0.0,
            intervals: 0,
        });
    }

    loop {
        let value: f64 = heap.iter().map(|p| p.value).sum();
        let error: f64 = heap.iter().map(|p| p.error).sum();
        let target = opts.abs_tol.max(opts.rel_tol * value.abs());
        if error <= target {
            return Ok(Integral {
                value,
                abs_error: error,
                intervals: heap.len(),
            });
        }
        if heap.len() >= opts.max_intervals {
            return Err(Error::Quadrature {
                achieved: error,
                requested: target,
                intervals: heap.len(),
            });
        }
        let worst = heap.pop().expect("heap is non-empty");
        let mid = 0.5 * (worst.a + worst.b);
        if mid <= worst.a || mid >= worst.b {
            // Cannot split further in double precision.
            return Err(Error::Quadrature {
                achieved: error,
                requested: target,
                intervals: heap.len() + 1,
            });
        }
        heap.push(kronrod15(&mut f, worst.a, mid));
        heap.push(kronrod15(&mut f, mid, worst.b));
    }
}
