//! Outcome types for inequality checks and sharpness scans.

use std::fmt;

use crate::powerseries::Interval;
use crate::radii::RadiusParams;
use crate::scalar::{real, Real};

/// Three-valued comparison outcome. Truncation makes exact comparisons
/// impossible near the boundary, so overlap of the two enclosures is
/// reported as inconclusive rather than forced either way.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Verdict {
    Holds,
    Fails,
    Inconclusive,
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Verdict::Holds => "HOLDS",
            Verdict::Fails => "FAILS",
            Verdict::Inconclusive => "INCONCLUSIVE",
        })
    }
}

/// Interval comparison: `lhs <= rhs` certified, refuted, or neither.
pub fn compare_intervals<T: Real>(lhs: Interval<T>, rhs: Interval<T>) -> Verdict {
    if lhs.hi() <= rhs.lo() {
        Verdict::Holds
    } else if lhs.lo() > rhs.hi() {
        Verdict::Fails
    } else {
        Verdict::Inconclusive
    }
}

/// Status of the coefficient side condition `2 k |a_q| |b_q| <= 1` for the
/// harmonic checks, including which waiver applied when it is not met.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SideCondition {
    Satisfied,
    /// Not needed when the dilatation bound sits at an endpoint (`k` 0 or 1).
    WaivedEndpointDilatation,
    /// Not needed for head exponents `p <= 1`.
    WaivedSmallExponent,
    /// Not needed when the predicted radius is at most `1/3`.
    WaivedSmallRadius,
    /// No waiver applies; the verdict is still reported.
    Unmet,
}

impl fmt::Display for SideCondition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            SideCondition::Satisfied => "holds",
            SideCondition::WaivedEndpointDilatation => "waived: k in {0, 1}",
            SideCondition::WaivedSmallExponent => "waived: p <= 1",
            SideCondition::WaivedSmallRadius => "waived: radius <= 1/3",
            SideCondition::Unmet => "unmet",
        })
    }
}

/// Outcome of an inequality check: the compared enclosures at the evaluated
/// radius, the verdict, and (when a scan ran) the certified crossover
/// bracket.
#[derive(Debug, Clone)]
pub struct VerificationReport<T: Real> {
    pub params: Option<RadiusParams<T>>,
    pub predicted_radius: Option<T>,
    pub eval_radius: T,
    pub lhs: Interval<T>,
    pub rhs: Interval<T>,
    pub verdict: Verdict,
    pub crossover: Option<ScanOutcome<T>>,
    pub side_condition: Option<SideCondition>,
}

impl<T: Real> VerificationReport<T> {
    /// The checked quantity's enclosure (left side of the comparison).
    pub fn quantity_at_radius(&self) -> Interval<T> {
        self.lhs
    }
}

/// Certified crossover bracket from a sharpness scan: the inequality is
/// proven to hold up to `holds_up_to` and proven to fail from `fails_from`;
/// any inconclusive zone lies between the two.
#[derive(Debug, Clone, Copy)]
pub struct ScanOutcome<T> {
    pub holds_up_to: T,
    pub fails_from: T,
}

impl<T: Real> ScanOutcome<T> {
    /// Midpoint of the certified bracket.
    pub fn estimate(&self) -> T {
        (self.holds_up_to + self.fails_from) / real(2.0)
    }

    pub fn bracket_width(&self) -> T {
        self.fails_from - self.holds_up_to
    }
}
