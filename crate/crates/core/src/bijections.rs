//! Executable path bijections.
//!
//! Two maps, each with a round-trip guarantee:
//!
//! - [`reverse_swap`]: reverse a unit-step path and exchange step roles, an
//!   involution carrying paths weakly right of `x = p*y` onto paths weakly
//!   below `y = p*x`;
//! - [`dyck_encode`] / [`dyck_decode`]: cut a rise-1/fall-1 path at every
//!   fall and contract each block of `k` rises plus the fall into a single
//!   `(1, k-1)` step, inverse to re-expanding.

use thiserror::Error;

use crate::steps::{RisePath, UnitPath, UnitStep};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum BijectionError {
    #[error("path must start at the origin, not ({0}, {1})")]
    NotAtOrigin(i64, i64),
    #[error("rise {rise} at index {index} is not allowed here")]
    RiseOutOfRange { rise: i64, index: usize },
    #[error("four consecutive rises starting at index {index}")]
    FourConsecutiveRises { index: usize },
    #[error("path does not end with a fall")]
    NoTrailingFall,
    #[error("path drops below the floor at index {index}")]
    BelowFloor { index: usize },
}

/// Reverse the step sequence and swap right and up roles; the start point's
/// coordinates swap along, so an endpoint `(a, b)` maps to `(b, a)`.
///
/// Involution: applying it twice restores the original path.
pub fn reverse_swap(path: &UnitPath) -> UnitPath {
    let steps = path
        .steps
        .iter()
        .rev()
        .map(|s| match s {
            UnitStep::Right => UnitStep::Up,
            UnitStep::Up => UnitStep::Right,
        })
        .collect();
    UnitPath::new((path.start.1, path.start.0), steps)
}

/// Contract a rise-1/fall-1 floor path into `(1, k-1)` steps by cutting at
/// every fall: a block of `k` rises followed by a fall becomes one step of
/// rise `k - 1`, for `k <= 3`.
///
/// Requires: start at the origin, rises in `{-1, 1}`, no prefix below the
/// floor, no four consecutive rises, and (unless empty) a trailing fall.
/// An endpoint `(2m + n, n)` contracts to `(m, n)`.
pub fn dyck_encode(path: &RisePath) -> Result<RisePath, BijectionError> {
    if path.start != (0, 0) {
        return Err(BijectionError::NotAtOrigin(path.start.0, path.start.1));
    }
    let mut height = 0i64;
    let mut run_start = 0usize;
    let mut run = 0u32;
    let mut out = Vec::new();
    for (index, &rise) in path.rises.iter().enumerate() {
        if rise != 1 && rise != -1 {
            return Err(BijectionError::RiseOutOfRange { rise, index });
        }
        height += rise;
        if height < 0 {
            return Err(BijectionError::BelowFloor { index });
        }
        if rise == 1 {
            if run == 0 {
                run_start = index;
            }
            run += 1;
            if run == 4 {
                return Err(BijectionError::FourConsecutiveRises { index: run_start });
            }
        } else {
            out.push(run as i64 - 1);
            run = 0;
        }
    }
    if run > 0 {
        return Err(BijectionError::NoTrailingFall);
    }
    Ok(RisePath::new((0, 0), out))
}

/// Inverse of [`dyck_encode`]: expand each step of rise `r` in `{-1, 0, 1, 2}`
/// into `r + 1` rises followed by one fall.
///
/// Requires a floor path from the origin; the output is then a floor path as
/// well, ending with a fall, with no four consecutive rises.
pub fn dyck_decode(path: &RisePath) -> Result<RisePath, BijectionError> {
    if path.start != (0, 0) {
        return Err(BijectionError::NotAtOrigin(path.start.0, path.start.1));
    }
    let mut height = 0i64;
    let mut out = Vec::new();
    for (index, &rise) in path.rises.iter().enumerate() {
        if !(-1..=2).contains(&rise) {
            return Err(BijectionError::RiseOutOfRange { rise, index });
        }
        height += rise;
        if height < 0 {
            return Err(BijectionError::BelowFloor { index });
        }
        out.extend(std::iter::repeat_n(1, (rise + 1) as usize));
        out.push(-1);
    }
    Ok(RisePath::new((0, 0), out))
}
