//! Exact enumeration of boundary-constrained lattice paths.
//!
//! The crate is organized around three layers that check each other:
//!
//! - [`dp`] builds dense tables of path counts (ballot numbers, sloped-ballot
//!   counts, height-constrained weighted walks) by their defining recurrences,
//!   including the extensions of those recurrences past the combinatorial
//!   boundary.
//! - [`gfengine`] constructs the same numbers analytically, as coefficients of
//!   truncated power series and kernel-form generating-function families built
//!   on [`series`].
//! - [`steps`] enumerates the underlying paths one by one and serves as the
//!   independent brute-force oracle for both.
//!
//! All arithmetic is exact. The numeric kernels ([`series`], [`dp`]) are
//! generic over any [`coeff::Coeff`] scalar; everything table- and
//! verification-facing uses the arbitrary-precision [`Rational`] alias below.

pub mod bijections;
pub mod coeff;
pub mod dp;
pub mod gfengine;
pub mod rational;
pub mod report;
pub mod sequences;
pub mod series;
pub mod steps;
pub mod table;
pub mod verify;

/// Arbitrary-precision integer used for all exact counts.
pub type Int = num::BigInt;
/// Exact rational scalar: every table entry and series coefficient.
pub type Rational = num::BigRational;

/// Truncated power series over [`Rational`].
pub type QSeries = series::Series<Rational>;
/// Count/weight table over [`Rational`].
pub type QGrid = dp::Grid<Rational>;
/// Step weights over [`Rational`].
pub type QWeights = steps::Weights<Rational>;
/// Kernel-form generating-function family over [`Rational`].
pub type QGfFamily = gfengine::GfFamily<Rational>;

pub use report::Report;
pub use steps::{RisePath, StepSet, UnitPath, UnitStep};
