//! Exact-arithmetic laboratory for polynomial difference-quotient sets
//!
//! ```text
//! X = { (g(a1, b1) - g(a2, b2)) / (b2 - b1) : a1, a2, b1, b2 in A, b1 != b2 }
//! ```
//!
//! and for the dual line arrangement `y = b x - g(a, b)` whose incidence
//! structure controls `|X|`. All arithmetic is exact; floating point appears
//! only in reported ratios and fitted exponents.

pub mod bisector;
pub mod error;
pub mod exact;
pub mod generate;
pub mod ground;
pub mod harness;
pub mod incidence;
pub mod parallel;
pub mod poly;
pub mod quotient;
mod scaled;

pub use bisector::{bisector_intercept_set, bisector_y_intercept, bisector_y_intercept_constructive, PlanarPoint};
pub use error::{Error, Result};
pub use exact::Rational;
pub use generate::{generate_set, random_polynomial, SetSpec};
pub use ground::GroundSet;
pub use incidence::{build_lines, Line, LineMultiset, PointMultiplicity, RichPointReport};
pub use parallel::ComputeOptions;
pub use poly::{degeneracy_test, divide_by_linear, BivariatePolynomial, DegeneracyVerdict, MultiPoly};
pub use quotient::{
    exponent_scan, quadruple_histogram, quotient_set, verify_chain, ChainReport, QuadrupleHistogram, QuotientSet,
    ScanOptions, ScanReport,
};
