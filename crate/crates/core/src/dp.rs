//! Counting recurrences and their extensions past the combinatorial boundary.
//!
//! Each constructor fills a dense [`Grid`] by the defining recurrence of one
//! table family. Extended variants (`*_extended`) run the same recurrence
//! backwards to populate cells with no combinatorial meaning; those cells are
//! what make the families' generating functions simple, and the analytic
//! layer in [`crate::gfengine`] must reproduce every one of them exactly.
//!
//! Grid construction is single-threaded (the recurrences are sequential along
//! their dependencies); finished grids are immutable and freely shareable.

use num::BigRational;

use crate::coeff::{small, Coeff};
use crate::steps::{StepSet, Weights};

/// Hard ceiling on grid allocation.
const MAX_CELLS: i64 = 100_000_000;

/// Dense 2D table indexed by `(m, n)`; both ranges may include negatives.
#[derive(Clone, Debug, PartialEq)]
pub struct Grid<T> {
    m_min: i64,
    m_max: i64,
    n_min: i64,
    n_max: i64,
    height: usize,
    values: Vec<T>,
}

impl<T: Coeff> Grid<T> {
    /// All-zero grid over `m_min..=m_max` x `n_min..=n_max`.
    pub fn zeros(m_min: i64, m_max: i64, n_min: i64, n_max: i64) -> Self {
        assert!(m_min <= m_max && n_min <= n_max, "empty grid range");
        let width = m_max - m_min + 1;
        let height = n_max - n_min + 1;
        assert!(
            width.saturating_mul(height) <= MAX_CELLS,
            "grid of {width} x {height} cells exceeds the memory guard"
        );
        Grid {
            m_min,
            m_max,
            n_min,
            n_max,
            height: height as usize,
            values: vec![T::zero(); (width * height) as usize],
        }
    }

    fn idx(&self, m: i64, n: i64) -> usize {
        debug_assert!(self.contains(m, n));
        ((m - self.m_min) as usize) * self.height + (n - self.n_min) as usize
    }

    pub fn contains(&self, m: i64, n: i64) -> bool {
        (self.m_min..=self.m_max).contains(&m) && (self.n_min..=self.n_max).contains(&n)
    }

    /// Value at `(m, n)`; panics outside the declared ranges.
    pub fn value(&self, m: i64, n: i64) -> &T {
        assert!(
            self.contains(m, n),
            "cell ({m}, {n}) is outside the grid ranges m {}..={}, n {}..={}",
            self.m_min,
            self.m_max,
            self.n_min,
            self.n_max
        );
        &self.values[self.idx(m, n)]
    }

    pub fn try_value(&self, m: i64, n: i64) -> Option<&T> {
        if self.contains(m, n) {
            Some(&self.values[self.idx(m, n)])
        } else {
            None
        }
    }

    /// Value at `(m, n)`, or zero outside the ranges. Only used where the
    /// boundary conditions declare out-of-range cells zero.
    pub fn get_or_zero(&self, m: i64, n: i64) -> T {
        self.try_value(m, n).cloned().unwrap_or_else(T::zero)
    }

    pub fn set(&mut self, m: i64, n: i64, value: T) {
        let i = self.idx(m, n);
        self.values[i] = value;
    }

    pub fn m_range(&self) -> std::ops::RangeInclusive<i64> {
        self.m_min..=self.m_max
    }

    pub fn n_range(&self) -> std::ops::RangeInclusive<i64> {
        self.n_min..=self.n_max
    }

    /// Copy out a sub-rectangle.
    pub fn crop(&self, m_min: i64, m_max: i64, n_min: i64, n_max: i64) -> Grid<T> {
        let mut out = Grid::zeros(m_min, m_max, n_min, n_max);
        for m in m_min..=m_max {
            for n in n_min..=n_max {
                out.set(m, n, self.value(m, n).clone());
            }
        }
        out
    }
}

impl Grid<BigRational> {
    /// True when every entry has denominator 1.
    pub fn is_integral(&self) -> bool {
        self.values.iter().all(|v| v.is_integer())
    }
}

/// Ballot numbers: paths from `(1,0)` staying strictly below the diagonal.
///
/// `B(1,0) = 1`, `B(m,n) = B(m-1,n) + B(m,n-1)` for `0 <= n < m`, zero on and
/// above the diagonal and below the axis.
pub fn ballot<T: Coeff>(m_max: i64) -> Grid<T> {
    assert!(m_max >= 1, "ballot table needs m_max >= 1");
    let mut g = Grid::zeros(0, m_max, 0, m_max);
    for m in 0..=m_max {
        for n in 0..=m_max {
            if m <= n {
                continue; // stays zero
            }
            let v = if (m, n) == (1, 0) {
                T::one()
            } else {
                g.get_or_zero(m - 1, n) + g.get_or_zero(m, n - 1)
            };
            g.set(m, n, v);
        }
    }
    g
}

/// Ballot recurrence extended to the whole first quadrant by placing a `+1`
/// source at `(1,0)` and a `-1` source at `(0,1)`.
///
/// Satisfies the antisymmetry `B'(m,n) = -B'(n,m)` and the closed form
/// `(m-n)/(m+n) * binom(m+n, m)` (both verified in tests).
pub fn ballot_extended<T: Coeff>(m_max: i64) -> Grid<T> {
    sourced_quadrant(m_max, T::one(), -T::one())
}

/// Sloped-ballot counts: paths from `(1,0)` that never touch `x = p*y`,
/// defined on `m >= p*n` with zeros on the line itself.
pub fn c_p<T: Coeff>(p: i64, m_max: i64) -> Grid<T> {
    assert!(p >= 1, "slope p must be >= 1");
    let mut g = Grid::zeros(0, m_max, 0, m_max);
    for m in 0..=m_max {
        for n in 0..=m_max {
            if m <= p * n {
                continue; // on or left of the line: zero
            }
            let v = if (m, n) == (1, 0) {
                T::one()
            } else {
                g.get_or_zero(m - 1, n) + g.get_or_zero(m, n - 1)
            };
            g.set(m, n, v);
        }
    }
    g
}

/// Sloped-ballot recurrence extended to the whole first quadrant: `+1` source
/// at `(1,0)`, `-p` source at `(0,1)`; closed form
/// `(m - p*n)/(m+n) * binom(m+n, m)`.
pub fn c_p_extended<T: Coeff>(p: i64, m_max: i64) -> Grid<T> {
    assert!(p >= 1, "slope p must be >= 1");
    sourced_quadrant(m_max, T::one(), -small::<T>(p))
}

/// First-quadrant additive recurrence with sources at `(1,0)` and `(0,1)`.
fn sourced_quadrant<T: Coeff>(m_max: i64, at_10: T, at_01: T) -> Grid<T> {
    assert!(m_max >= 1, "extended table needs m_max >= 1");
    let mut g = Grid::zeros(0, m_max, 0, m_max);
    for m in 0..=m_max {
        for n in 0..=m_max {
            let mut v = g.get_or_zero(m - 1, n) + g.get_or_zero(m, n - 1);
            if (m, n) == (1, 0) {
                v = v + at_10.clone();
            } else if (m, n) == (0, 1) {
                v = v + at_01.clone();
            }
            g.set(m, n, v);
        }
    }
    g
}

/// Paths from the origin that never cross `y = p*x` (touching allowed),
/// on `0 <= n <= p*m` plus the `p` boundary-zero diagonals above it.
///
/// The grid carries `n` up to `p*m_max + p` so the imposed zeros at
/// `n = p*m + j`, `1 <= j <= p`, are part of the table.
pub fn d_p<T: Coeff>(p: i64, m_max: i64) -> Grid<T> {
    assert!(p >= 1, "slope p must be >= 1");
    assert!(m_max >= 0);
    let mut g = Grid::zeros(0, m_max, 0, p * m_max + p);
    for m in 0..=m_max {
        for n in 0..=(p * m) {
            let v = if (m, n) == (0, 0) {
                T::one()
            } else {
                g.get_or_zero(m - 1, n) + g.get_or_zero(m, n - 1)
            };
            g.set(m, n, v);
        }
        // cells p*m+1 ..= p*m+p stay zero: the imposed boundary diagonals
    }
    g
}

/// The slope-2 table continued leftward into the wedge `n >= 0`, `m+n >= 0`
/// by running the recurrence backwards: `D(m-1,n) = D(m,n) - D(m,n-1)`.
///
/// Cells with `m + n < 0` are outside the wedge and stay zero. The internal
/// working width is grown as needed so every requested cell is determined.
pub fn d2_extended<T: Coeff>(m_max: i64, n_max: i64) -> Grid<T> {
    assert!(m_max >= 0 && n_max >= 0);
    // Forward-computable cells of row n start at m*(n) = ceil((n-2)/2); the
    // top row must have one, so widen the working grid if necessary.
    let forward_start = |n: i64| -> i64 { ((n - 2).max(0) + 1) / 2 };
    let work_m_max = m_max.max(forward_start(n_max));
    let mut g = Grid::zeros(-n_max, work_m_max, 0, n_max);
    for n in 0..=n_max {
        for m in forward_start(n)..=work_m_max {
            let v = if (m, n) == (0, 0) {
                T::one()
            } else if n > 2 * m {
                T::zero() // the two imposed boundary diagonals
            } else {
                g.get_or_zero(m - 1, n) + g.get_or_zero(m, n - 1)
            };
            g.set(m, n, v);
        }
        let mut m = forward_start(n) - 1;
        while m >= -n {
            let v = g.get_or_zero(m + 1, n) - g.get_or_zero(m + 1, n - 1);
            g.set(m, n, v);
            m -= 1;
        }
    }
    if work_m_max == m_max {
        g
    } else {
        g.crop(-n_max, m_max, 0, n_max)
    }
}

/// Rise-1/fall-1 paths from the origin, never below the axis, with no four
/// consecutive rises, ending with a fall.
///
/// `S(0,0) = 1` and `S(m,n) = sum_{i=-1}^{2} S(m-i-2, n-i)`: a path ending at
/// `(m,n)` is a shorter such path followed by `i+1` rises and one fall.
pub fn s_count<T: Coeff>(m_max: i64) -> Grid<T> {
    assert!(m_max >= 0);
    // Nonzero entries satisfy n <= m/2 (at most three rises per fall).
    let n_max = m_max / 2;
    let mut g = Grid::zeros(0, m_max, 0, n_max);
    for m in 0..=m_max {
        for n in 0..=n_max {
            let v = if (m, n) == (0, 0) {
                T::one()
            } else {
                let mut acc = T::zero();
                for i in -1..=2 {
                    acc = acc + g.get_or_zero(m - i - 2, n - i);
                }
                acc
            };
            g.set(m, n, v);
        }
    }
    g
}

/// Weighted paths from `(0, h)` staying on or above the axis, with steps
/// `(1, i)` for `i` in the step set, entry `(m, n)` summing the weight
/// products of all such paths.
///
/// Column recurrence: `P(m+1, n) = sum_i c_i P(m, n-i)`, seeded by
/// `P(0, h) = 1`, with everything below the axis zero.
pub fn p_h<T: Coeff>(steps: &StepSet, weights: &Weights<T>, h: i64, m_max: i64) -> Grid<T> {
    assert!(h >= 0, "starting height must be >= 0");
    assert!(m_max >= 0);
    let n_max = steps.max_rise() * m_max + h;
    let mut g = Grid::zeros(0, m_max, 0, n_max);
    g.set(0, h, T::one());
    for m in 1..=m_max {
        for n in 0..=n_max {
            let mut acc = T::zero();
            for (rise, c) in weights.iter() {
                let below = n - rise;
                if below < 0 {
                    continue;
                }
                acc = acc + c.clone() * g.get_or_zero(m - 1, below);
            }
            g.set(m, n, acc);
        }
    }
    g
}

/// [`p_h`] continued below the axis down to `n_min`.
///
/// Rows `-K..=-1` are zero; deeper rows follow the inverted recurrence
/// `P'(m, n) = P'(m+1, n+K) - sum_{i != K} c_i P'(m, n+K-i)`, which reaches
/// `K` rows up and one column right per application. The working width is
/// grown by that dependency depth so every requested cell is determined.
pub fn p_h_extended<T: Coeff>(
    steps: &StepSet,
    weights: &Weights<T>,
    h: i64,
    m_max: i64,
    n_min: i64,
) -> Grid<T> {
    assert!(n_min < 0, "the extension only adds rows below the axis");
    let k = steps.max_rise();
    // Row n needs ceil((-K - n)/K) column steps to climb back to row >= -K.
    let climb = |n: i64| -> i64 {
        if n >= -k {
            0
        } else {
            (-k - n + k - 1) / k
        }
    };
    let work_m_max = m_max + climb(n_min);
    let surface = p_h(steps, weights, h, work_m_max);
    let n_max = k * m_max + h;
    let mut g = Grid::zeros(0, work_m_max, n_min, k * work_m_max + h);
    for m in 0..=work_m_max {
        for n in 0..=(k * work_m_max + h) {
            g.set(m, n, surface.value(m, n).clone());
        }
    }
    // Rows -K..=-1 are already zero; fill deeper rows top-down.
    let mut n = -k - 1;
    while n >= n_min {
        for m in 0..=(work_m_max - climb(n)) {
            let mut v = g.get_or_zero(m + 1, n + k);
            for (rise, c) in weights.iter() {
                if rise == k {
                    continue;
                }
                v = v - c.clone() * g.get_or_zero(m, n + k - rise);
            }
            g.set(m, n, v);
        }
        n -= 1;
    }
    g.crop(0, m_max, n_min, n_max)
}

/// Paths from the origin that never cross `y = p*x + h`, on
/// `0 <= n <= p*m + h` plus the `p` boundary-zero diagonals above it.
pub fn e_ph<T: Coeff>(p: i64, h: i64, m_max: i64) -> Grid<T> {
    assert!(p >= 1, "slope p must be >= 1");
    assert!(h >= 0 && m_max >= 0);
    let mut g = Grid::zeros(0, m_max, 0, p * m_max + h + p);
    for m in 0..=m_max {
        for n in 0..=(p * m + h) {
            let v = if (m, n) == (0, 0) {
                T::one()
            } else {
                g.get_or_zero(m - 1, n) + g.get_or_zero(m, n - 1)
            };
            g.set(m, n, v);
        }
    }
    g
}
