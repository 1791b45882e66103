//! Independent brute-force cross-checks for the series engine.
//!
//! The coefficient oracle samples a pointwise evaluator on a circle and
//! recovers Taylor coefficients by a plain (non-FFT) discrete Fourier sum;
//! nothing here shares code with the series arithmetic it validates. These
//! are cross-checks, not certificates; certification lives in the series
//! tail bounds.

use num_complex::Complex;

use crate::error::{Error, Result};
use crate::families::HarmonicPair;
use crate::powerseries::TruncatedSeries;
use crate::scalar::{as_f64, real, Real};

/// Taylor coefficients `c_n ≈ (1/S) Σ_j f(ρ e^{iθ_j}) e^{-i n θ_j} / ρ^n`
/// for `n <= n_max`, with `S = max(256, 8 n_max)` samples.
///
/// Aliasing contributes `Σ_m c_{n+mS} ρ^{mS}`; for the bounded-by-one
/// targets this oracle is pointed at (`|c_j| <= 1`) that is below
/// `ρ^S/(1-ρ^S)`, i.e. under 1e-40 for `ρ <= 0.7`. The returned tail cap is
/// `max(1, circle max)`, valid on the same assumption.
///
/// Rounding of the circle samples (machine epsilon per value) is amplified
/// by `ρ^{-n}` in the recovered coefficient, so agreement with another
/// pipeline is meaningful in the scaled metric `|Δc_n| ρ^n`, which stays at
/// sample precision for every `n`.
pub fn dft_coefficients<T: Real>(
    f: impl Fn(Complex<T>) -> Complex<T>,
    rho: T,
    n_max: usize,
) -> Result<TruncatedSeries<T>> {
    if !(rho > T::zero() && rho < T::one()) {
        return Err(Error::ParamOutOfRange {
            name: "rho",
            value: as_f64(rho),
        });
    }
    let samples = 256.max(8 * n_max);
    let two_pi = real::<T>(2.0 * std::f64::consts::PI);
    let s_t = T::from_usize(samples).unwrap();
    let mut values = Vec::with_capacity(samples);
    let mut circle_max = T::zero();
    for j in 0..samples {
        let theta = two_pi * T::from_usize(j).unwrap() / s_t;
        let z = Complex::new(rho * theta.cos(), rho * theta.sin());
        let v = f(z);
        circle_max = circle_max.max(v.norm());
        values.push(v);
    }
    let mut coeffs = Vec::with_capacity(n_max + 1);
    let mut rho_n = T::one();
    for n in 0..=n_max {
        let mut acc = Complex::new(T::zero(), T::zero());
        for (j, v) in values.iter().enumerate() {
            // e^{-i n θ_j}; the angle is reduced mod one turn to keep the
            // argument of sin/cos small
            let idx = (n * j) % samples;
            let theta = two_pi * T::from_usize(idx).unwrap() / s_t;
            acc += v * Complex::new(theta.cos(), -theta.sin());
        }
        coeffs.push(acc / Complex::new(s_t * rho_n, T::zero()));
        rho_n *= rho;
    }
    Ok(TruncatedSeries::new(coeffs, circle_max.max(T::one())))
}

/// Max of `|f|` over equally spaced points of the circle `|z| = r`.
pub fn grid_modulus_max<T: Real>(
    f: impl Fn(Complex<T>) -> Complex<T>,
    r: T,
    n_points: usize,
) -> T {
    let two_pi = real::<T>(2.0 * std::f64::consts::PI);
    let n_t = T::from_usize(n_points).unwrap();
    let mut max = T::zero();
    for j in 0..n_points {
        let theta = two_pi * T::from_usize(j).unwrap() / n_t;
        let z = Complex::new(r * theta.cos(), r * theta.sin());
        max = max.max(f(z).norm());
    }
    max
}

/// Result of a dilatation grid scan: the largest observed `|g'|/|h'|` and
/// how many near-critical points (`|h'| < 1e-14`) were skipped.
#[derive(Debug, Clone, Copy)]
pub struct DilatationScan<T> {
    pub max_ratio: T,
    pub skipped: usize,
}

/// Max of `|g'(z)| / |h'(z)|` over a grid on `|z| = r`.
pub fn dilatation_scan<T: Real>(
    pair: &HarmonicPair<T>,
    r: T,
    n_points: usize,
) -> DilatationScan<T> {
    let hp = pair.h.derivative();
    let gp = pair.g.derivative();
    let two_pi = real::<T>(2.0 * std::f64::consts::PI);
    let n_t = T::from_usize(n_points).unwrap();
    let critical = real::<T>(1e-14);
    let mut max_ratio = T::zero();
    let mut skipped = 0usize;
    for j in 0..n_points {
        let theta = two_pi * T::from_usize(j).unwrap() / n_t;
        let z = Complex::new(r * theta.cos(), r * theta.sin());
        let denom = hp.eval(z).norm();
        if denom < critical {
            skipped += 1;
            continue;
        }
        max_ratio = max_ratio.max(gp.eval(z).norm() / denom);
    }
    DilatationScan { max_ratio, skipped }
}
