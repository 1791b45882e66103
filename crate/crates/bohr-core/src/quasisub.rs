//! Majorant comparison for quasi-subordinated pairs and sharpness scans.
//!
//! `f` is quasi-subordinate to `g` when `f = Φ · (g ∘ w)` with `Φ`, `w`
//! bounded by one and `w(0) = 0`. For such pairs the majorant series of `f`
//! stays below that of `g` up to a radius depending only on `|Φ(0)|` and
//! `|w'(0)|`; this module builds the composition, runs the certified
//! comparison, and locates the crossover radius that shows a claimed bound
//! is sharp.

use crate::error::{Error, Result};
use crate::powerseries::{Interval, TruncatedSeries};
use crate::radii::{alpha_minus, alpha_plus, r_1};
use crate::report::{compare_intervals, ScanOutcome, Verdict, VerificationReport};
use crate::scalar::{as_f64, real, Real};

const SCAN_ITERS: usize = 50;

/// `Φ · (g ∘ w)` through the series pipeline.
pub fn quasi_compose<T: Real>(
    phi: &TruncatedSeries<T>,
    g: &TruncatedSeries<T>,
    w: &TruncatedSeries<T>,
) -> Result<TruncatedSeries<T>> {
    Ok(TruncatedSeries::compose(g, w)?.cauchy_product(phi))
}

/// Radius up to which the majorant comparison is guaranteed:
/// `min(r_1(|Φ(0)|), r_1(|w'(0)|))`.
pub fn comparison_radius<T: Real>(phi0: T, wprime0: T) -> Result<T> {
    for (name, v) in [("phi0", phi0), ("wprime0", wprime0)] {
        if !(v >= T::zero() && v <= T::one()) {
            return Err(Error::ParamOutOfRange { name, value: as_f64(v) });
        }
    }
    Ok(r_1(phi0).min(r_1(wprime0)))
}

/// Certified comparison of `Σ|a_k| r^k` against `Σ|b_k| r^k`.
pub fn majorant_compare<T: Real>(
    f: &TruncatedSeries<T>,
    g: &TruncatedSeries<T>,
    r: T,
) -> Result<VerificationReport<T>> {
    let lhs = f.majorant_sum(r, 0)?;
    let rhs = g.majorant_sum(r, 0)?;
    Ok(VerificationReport {
        params: None,
        predicted_radius: None,
        eval_radius: r,
        lhs,
        rhs,
        verdict: compare_intervals(lhs, rhs),
        crossover: None,
        side_condition: None,
    })
}

/// Head-powered Bohr quantity `|c_0|^p + Σ_{k>=1} |c_k| r^k`.
pub fn bohr_head_sum<T: Real>(f: &TruncatedSeries<T>, p: T, r: T) -> Result<Interval<T>> {
    if !(p > T::zero() && p.is_finite()) {
        return Err(Error::ParamOutOfRange { name: "p", value: as_f64(p) });
    }
    let head = f.coeff(0).unwrap().norm().powf(p);
    Ok(f.majorant_sum(r, 1)?.add_scalar(head))
}

/// Verdict for `quantity <= 1`.
pub fn verdict_le_one<T: Real>(quantity: Interval<T>) -> Verdict {
    compare_intervals(quantity, Interval::point(T::one()))
}

/// Generic crossover scan: the predicate must certifiably hold at `r_lo`
/// and certifiably fail at `r_hi`. Two bisections bound the flip from both
/// sides; inconclusive zones only widen the returned bracket, they are
/// never assigned to either side.
pub fn scan_crossover<T: Real>(
    pred: impl Fn(T) -> Result<Verdict>,
    r_lo: T,
    r_hi: T,
) -> Result<ScanOutcome<T>> {
    if pred(r_lo)? != Verdict::Holds || pred(r_hi)? != Verdict::Fails {
        return Err(Error::BadBracket {
            lo: as_f64(r_lo),
            hi: as_f64(r_hi),
        });
    }
    let two = real::<T>(2.0);
    let (mut a, mut b) = (r_lo, r_hi);
    for _ in 0..SCAN_ITERS {
        let mid = (a + b) / two;
        if pred(mid)? == Verdict::Holds {
            a = mid;
        } else {
            b = mid;
        }
    }
    let holds_up_to = a;
    let (mut a, mut b) = (r_lo, r_hi);
    for _ in 0..SCAN_ITERS {
        let mid = (a + b) / two;
        if pred(mid)? == Verdict::Fails {
            b = mid;
        } else {
            a = mid;
        }
    }
    Ok(ScanOutcome {
        holds_up_to,
        fails_from: b,
    })
}

/// Smallest radius at which the majorant comparison flips from holding to
/// failing, as a certified bracket.
pub fn sharpness_scan<T: Real>(
    f: &TruncatedSeries<T>,
    g: &TruncatedSeries<T>,
    r_lo: T,
    r_hi: T,
) -> Result<ScanOutcome<T>> {
    scan_crossover(|r| majorant_compare(f, g, r).map(|rep| rep.verdict), r_lo, r_hi)
}

/// Crossover of the head-powered Bohr quantity through one.
pub fn bohr_head_crossover<T: Real>(
    f: &TruncatedSeries<T>,
    p: T,
    r_lo: T,
    r_hi: T,
) -> Result<ScanOutcome<T>> {
    scan_crossover(|r| bohr_head_sum(f, p, r).map(verdict_le_one), r_lo, r_hi)
}

/// Closed form of the majorant of the squared-Blaschke extremal:
/// `1 - (1-a²)(1+2a²)/(1-ar)² · (r - α_+)(r - α_-)`, for `a > 1/√2`.
pub fn extremal_majorant_closed<T: Real>(a: T, r: T) -> Result<T> {
    if !(r >= T::zero() && r < T::one()) {
        return Err(Error::RadiusOutOfRange(as_f64(r)));
    }
    let ap = alpha_plus(a)?;
    let am = alpha_minus(a)?;
    let one = T::one();
    let den = (one - a * r) * (one - a * r);
    Ok(one - (one - a * a) * (one + real::<T>(2.0) * a * a) / den * (r - ap) * (r - am))
}

/// Partial sum `Σ_{k=0}^{terms} |A_k| r^k` of the same majorant from the
/// coefficient formula `A_0 = a²`, `A_k = (1-a²) a^{k-2} (k-1-(k+1)a²)`;
/// an algebraic route independent of the series engine.
pub fn extremal_majorant_partial<T: Real>(a: T, r: T, terms: usize) -> Result<T> {
    if !(a > T::zero() && a < T::one()) {
        return Err(Error::ParamOutOfRange { name: "a", value: as_f64(a) });
    }
    if !(r >= T::zero() && r < T::one()) {
        return Err(Error::RadiusOutOfRange(as_f64(r)));
    }
    let one = T::one();
    let head = one - a * a;
    let mut sum = a * a;
    let mut apow = one / a; // a^{k-2} at k = 1
    let mut rpow = r;
    for k in 1..=terms {
        let kk = T::from_usize(k).unwrap();
        let coeff = head * apow * (kk - one - (kk + one) * a * a);
        sum += coeff.abs() * rpow;
        apow *= a;
        rpow *= r;
    }
    Ok(sum)
}
