use num_complex::Complex;
use serde::{Deserialize, Serialize};

use super::TruncatedSeries;
use crate::error::{Error, Result};
use crate::scalar::{as_f64, Real};

/// Wire format for series: `{"coeffs_re": [...], "coeffs_im": [...], "tail_cap": x}`.
///
/// The sup-norm certificate is not part of the format; it is already folded
/// into `tail_cap` at construction time, so round-tripping stays sound.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct SeriesJson {
    pub coeffs_re: Vec<f64>,
    pub coeffs_im: Vec<f64>,
    pub tail_cap: f64,
}

impl SeriesJson {
    pub fn from_series<T: Real>(series: &TruncatedSeries<T>) -> Self {
        SeriesJson {
            coeffs_re: series.coeffs().iter().map(|c| as_f64(c.re)).collect(),
            coeffs_im: series.coeffs().iter().map(|c| as_f64(c.im)).collect(),
            tail_cap: as_f64(series.tail_cap()),
        }
    }

    pub fn to_series<T: Real>(&self) -> Result<TruncatedSeries<T>> {
        if self.coeffs_re.len() != self.coeffs_im.len() {
            return Err(Error::InvalidInput(
                "coeffs_re and coeffs_im lengths differ".into(),
            ));
        }
        if self.coeffs_re.is_empty() {
            return Err(Error::InvalidInput("series needs a constant term".into()));
        }
        if !(self.tail_cap >= 0.0 && self.tail_cap.is_finite()) {
            return Err(Error::InvalidInput("tail_cap must be finite and >= 0".into()));
        }
        let conv = |x: f64, what: &str| -> Result<T> {
            T::from_f64(x).ok_or_else(|| Error::InvalidInput(format!("{what} {x} not representable")))
        };
        let mut coeffs = Vec::with_capacity(self.coeffs_re.len());
        for (&re, &im) in self.coeffs_re.iter().zip(&self.coeffs_im) {
            coeffs.push(Complex::new(conv(re, "coefficient")?, conv(im, "coefficient")?));
        }
        Ok(TruncatedSeries::new(coeffs, conv(self.tail_cap, "tail_cap")?))
    }
}
