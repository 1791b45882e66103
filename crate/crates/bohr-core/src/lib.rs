//! Certified numerics for Bohr-type radius problems on the unit disk.
//!
//! The crate computes the classical and refined Bohr radii for bounded
//! analytic functions and for harmonic mappings with bounded dilatation,
//! verifies the underlying majorant inequalities with truncated power
//! series carrying certified tail bounds, and locates the sharpness
//! crossovers of the extremal families.
//!
//! Structure:
//!
//! * [`powerseries`]: truncated complex power series with a certified tail
//!   model; every tail-aware evaluation returns an [`Interval`].
//! * [`families`]: constructors for the named extremal functions
//!   (disk automorphisms, Blaschke products, harmonic pairs) and seeded
//!   random samplers for property tests.
//! * [`radii`]: closed-form radius functions and bisection root-finders
//!   for the radius equations.
//! * [`quasisub`]: majorant comparison for quasi-subordinated pairs and
//!   the sharpness-scan machinery.
//! * [`harmonic`]: the refined Bohr quantity for harmonic pairs and the
//!   inequality verifiers built on it.
//! * [`oracle`]: independent brute-force cross-checks (DFT coefficient
//!   extraction, grid modulus/dilatation scans).
//! * [`suites`]: seeded invariant suites shared by the CLI and the
//!   acceptance tests.
//!
//! All numeric code is generic over the scalar type through [`Real`]
//! (`f32` or `f64`). The aliases at the crate root fix `f64`, which is what
//! the CLI and the test suites use.

pub mod error;
mod scalar;

pub mod powerseries;

pub mod families;
pub mod harmonic;
pub mod oracle;
pub mod quasisub;
pub mod radii;
pub mod report;
pub mod suites;

pub use num_complex;

pub use error::{Error, Result};
pub use families::HarmonicPair;
pub use powerseries::{Interval, TruncatedSeries, DEFAULT_ORDER};
pub use radii::RadiusParams;
pub use report::{ScanOutcome, SideCondition, Verdict, VerificationReport};
pub use scalar::Real;

/// Double-precision aliases; the CLI and the suites work in these.
pub type Series64 = TruncatedSeries<f64>;
pub type Interval64 = Interval<f64>;
pub type Pair64 = HarmonicPair<f64>;
pub type Params64 = RadiusParams<f64>;
pub type Report64 = VerificationReport<f64>;
pub type Scan64 = ScanOutcome<f64>;
