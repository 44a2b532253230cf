//! Step sets, concrete paths, and the brute-force enumeration oracle.
//!
//! Two path flavors appear throughout:
//!
//! - *unit-step* paths built from `(1,0)` right and `(0,1)` up moves, used by
//!   the ballot-style tables;
//! - *rise* paths built from `(1, i)` moves with `i` drawn from a [`StepSet`],
//!   used by the height-constrained weighted walks.
//!
//! Everything here is a pure function over immutable inputs. Enumeration is
//! depth-first in lexicographic step order, so output order is deterministic.

use std::collections::BTreeMap;
use std::fmt;

use thiserror::Error;

use crate::coeff::Coeff;

/// Default exhaustion guard for the enumerators.
pub const DEFAULT_ENUM_CAP: u64 = 10_000_000;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum StepError {
    #[error("invalid step set: {0}")]
    InvalidStepSet(String),
    #[error("invalid weights: {0}")]
    InvalidWeights(String),
    #[error("enumeration bound {bound} exceeds the configured cap {cap}")]
    CapExceeded { bound: u128, cap: u64 },
    #[error("rise {rise} is outside the weight domain")]
    RiseOutsideWeights { rise: i64 },
}

/// Allowed rise values for `(1, i)` steps: always contains -1, the largest
/// element `K` is >= 0, elements are strictly increasing.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StepSet {
    elements: Vec<i64>,
}

impl StepSet {
    pub fn new(mut elements: Vec<i64>) -> Result<Self, StepError> {
        elements.sort_unstable();
        let before = elements.len();
        elements.dedup();
        if elements.len() != before {
            return Err(StepError::InvalidStepSet("duplicate elements".into()));
        }
        if elements.iter().any(|&e| e < -1) {
            return Err(StepError::InvalidStepSet("elements must be >= -1".into()));
        }
        if elements.first() != Some(&-1) {
            return Err(StepError::InvalidStepSet("-1 must be an element".into()));
        }
        if *elements.last().unwrap() < 0 {
            return Err(StepError::InvalidStepSet(
                "the largest element must be >= 0".into(),
            ));
        }
        Ok(StepSet { elements })
    }

    pub fn from_slice(elements: &[i64]) -> Result<Self, StepError> {
        StepSet::new(elements.to_vec())
    }

    pub fn elements(&self) -> &[i64] {
        &self.elements
    }

    /// The largest rise `K`.
    pub fn max_rise(&self) -> i64 {
        *self.elements.last().unwrap()
    }

    pub fn contains(&self, rise: i64) -> bool {
        self.elements.binary_search(&rise).is_ok()
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    /// Elements other than -1 and `K`; the only ones whose weights may vary.
    pub fn interior(&self) -> Vec<i64> {
        let k = self.max_rise();
        self.elements
            .iter()
            .copied()
            .filter(|&i| i != -1 && i != k)
            .collect()
    }
}

impl fmt::Display for StepSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.elements.iter().map(|e| e.to_string()).collect();
        write!(f, "{{{}}}", parts.join(","))
    }
}

/// Per-rise weights `c_i` for a step set; `c_{-1}` and `c_K` are pinned to 1.
#[derive(Clone, Debug, PartialEq)]
pub struct Weights<T> {
    map: BTreeMap<i64, T>,
}

impl<T: Coeff> Weights<T> {
    /// All weights 1.
    pub fn ones(steps: &StepSet) -> Self {
        Weights {
            map: steps.elements().iter().map(|&i| (i, T::one())).collect(),
        }
    }

    /// All-1 weights with overrides on interior elements.
    ///
    /// Overriding `c_{-1}` or `c_K` with anything but 1, or a rise outside the
    /// step set, is rejected.
    pub fn with_overrides(steps: &StepSet, overrides: &[(i64, T)]) -> Result<Self, StepError> {
        let mut w = Weights::ones(steps);
        let k = steps.max_rise();
        for (rise, value) in overrides {
            if !steps.contains(*rise) {
                return Err(StepError::InvalidWeights(format!(
                    "rise {rise} is not in the step set {steps}"
                )));
            }
            if (*rise == -1 || *rise == k) && !value.is_one() {
                return Err(StepError::InvalidWeights(format!(
                    "weight of rise {rise} is fixed to 1"
                )));
            }
            w.map.insert(*rise, value.clone());
        }
        Ok(w)
    }

    pub fn get(&self, rise: i64) -> Option<&T> {
        self.map.get(&rise)
    }

    pub fn iter(&self) -> impl Iterator<Item = (i64, &T)> {
        self.map.iter().map(|(&i, c)| (i, c))
    }

    /// Human-readable `c_i=value` listing for report lines.
    pub fn describe(&self) -> String {
        let parts: Vec<String> = self.map.iter().map(|(i, c)| format!("c_{i}={c}")).collect();
        parts.join(",")
    }
}

/// One unit move of a monotone lattice path.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum UnitStep {
    Right,
    Up,
}

/// Monotone lattice path from `start` with unit right/up steps.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct UnitPath {
    pub start: (i64, i64),
    pub steps: Vec<UnitStep>,
}

impl UnitPath {
    pub fn new(start: (i64, i64), steps: Vec<UnitStep>) -> Self {
        UnitPath { start, steps }
    }

    pub fn endpoint(&self) -> (i64, i64) {
        let rights = self.steps.iter().filter(|s| **s == UnitStep::Right).count() as i64;
        let ups = self.steps.len() as i64 - rights;
        (self.start.0 + rights, self.start.1 + ups)
    }

    /// Every lattice point visited, start and endpoint included.
    pub fn points(&self) -> Vec<(i64, i64)> {
        let mut pts = Vec::with_capacity(self.steps.len() + 1);
        let (mut x, mut y) = self.start;
        pts.push((x, y));
        for step in &self.steps {
            match step {
                UnitStep::Right => x += 1,
                UnitStep::Up => y += 1,
            }
            pts.push((x, y));
        }
        pts
    }

    /// Step string like `"RRU"`.
    pub fn step_string(&self) -> String {
        self.steps
            .iter()
            .map(|s| match s {
                UnitStep::Right => 'R',
                UnitStep::Up => 'U',
            })
            .collect()
    }
}

/// Path from `start` with steps `(1, rise)`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct RisePath {
    pub start: (i64, i64),
    pub rises: Vec<i64>,
}

impl RisePath {
    pub fn new(start: (i64, i64), rises: Vec<i64>) -> Self {
        RisePath { start, rises }
    }

    pub fn endpoint(&self) -> (i64, i64) {
        (
            self.start.0 + self.rises.len() as i64,
            self.start.1 + self.rises.iter().sum::<i64>(),
        )
    }

    /// Heights after each step, starting height included.
    pub fn heights(&self) -> Vec<i64> {
        let mut hs = Vec::with_capacity(self.rises.len() + 1);
        let mut h = self.start.1;
        hs.push(h);
        for rise in &self.rises {
            h += rise;
            hs.push(h);
        }
        hs
    }

    /// True when no prefix drops below height 0.
    pub fn stays_on_floor(&self) -> bool {
        self.heights().iter().all(|&h| h >= 0)
    }

    /// Rise list rendering like `"2,-1,-1"`.
    pub fn rise_string(&self) -> String {
        let parts: Vec<String> = self.rises.iter().map(|r| r.to_string()).collect();
        parts.join(",")
    }
}

/// Product of the step weights along a rise path (the length is tracked by
/// the path itself, not here).
pub fn weight_of<T: Coeff>(path: &RisePath, weights: &Weights<T>) -> Result<T, StepError> {
    let mut acc = T::one();
    for &rise in &path.rises {
        let c = weights
            .get(rise)
            .ok_or(StepError::RiseOutsideWeights { rise })?;
        acc = acc * c.clone();
    }
    Ok(acc)
}

fn check_cap(bound: u128, cap: u64) -> Result<(), StepError> {
    if bound > cap as u128 {
        return Err(StepError::CapExceeded { bound, cap });
    }
    Ok(())
}

/// All rise paths from `(0, h)` to `(m, n)`, lexicographically ordered by
/// rise sequence. With `floor`, every prefix height must stay >= 0.
///
/// Guarded by `|T|^m <= cap` before any work happens.
pub fn enumerate_rise_paths(
    steps: &StepSet,
    m: usize,
    n: i64,
    h: i64,
    floor: bool,
    cap: u64,
) -> Result<Vec<RisePath>, StepError> {
    check_cap((steps.len() as u128).saturating_pow(m as u32), cap)?;
    let mut found = Vec::new();
    let mut prefix = Vec::with_capacity(m);
    descend_rise(steps, m, n, h, h, floor, &mut prefix, &mut found);
    Ok(found)
}

#[allow(clippy::too_many_arguments)]
fn descend_rise(
    steps: &StepSet,
    m: usize,
    target: i64,
    start_height: i64,
    height: i64,
    floor: bool,
    prefix: &mut Vec<i64>,
    found: &mut Vec<RisePath>,
) {
    let remaining = (m - prefix.len()) as i64;
    if remaining == 0 {
        if height == target {
            found.push(RisePath::new((0, start_height), prefix.clone()));
        }
        return;
    }
    // Reachability pruning: one step drops at most 1 and climbs at most K.
    if height - remaining > target || height + steps.max_rise() * remaining < target {
        return;
    }
    for &rise in steps.elements() {
        let next = height + rise;
        if floor && next < 0 {
            continue;
        }
        prefix.push(rise);
        descend_rise(steps, m, target, start_height, next, floor, prefix, found);
        prefix.pop();
    }
}

/// All monotone unit-step paths from `from` to `to` whose every visited
/// lattice point satisfies `constraint`. Lexicographic with `R < U`.
pub fn enumerate_unit_paths(
    from: (i64, i64),
    to: (i64, i64),
    constraint: &dyn Fn(i64, i64) -> bool,
    cap: u64,
) -> Result<Vec<UnitPath>, StepError> {
    let (dx, dy) = (to.0 - from.0, to.1 - from.1);
    if dx < 0 || dy < 0 {
        return Ok(Vec::new());
    }
    check_cap(
        crate::rational::binomial(dx + dy, dx)
            .try_into()
            .unwrap_or(u128::MAX),
        cap,
    )?;
    if !constraint(from.0, from.1) {
        return Ok(Vec::new());
    }
    let mut found = Vec::new();
    let mut prefix = Vec::with_capacity((dx + dy) as usize);
    descend_unit(from, from, to, constraint, &mut prefix, &mut found);
    Ok(found)
}

fn descend_unit(
    from: (i64, i64),
    at: (i64, i64),
    to: (i64, i64),
    constraint: &dyn Fn(i64, i64) -> bool,
    prefix: &mut Vec<UnitStep>,
    found: &mut Vec<UnitPath>,
) {
    if at == to {
        found.push(UnitPath::new(from, prefix.clone()));
        return;
    }
    if at.0 < to.0 && constraint(at.0 + 1, at.1) {
        prefix.push(UnitStep::Right);
        descend_unit(from, (at.0 + 1, at.1), to, constraint, prefix, found);
        prefix.pop();
    }
    if at.1 < to.1 && constraint(at.0, at.1 + 1) {
        prefix.push(UnitStep::Up);
        descend_unit(from, (at.0, at.1 + 1), to, constraint, prefix, found);
        prefix.pop();
    }
}

/// Dense accumulator for endpoint buckets: depth-major, height above a floor
/// offset. Heights a floor-free walk can reach stay within `m_max` of the
/// start in either direction.
struct Buckets<T> {
    rows: usize,
    height_min: i64,
    cells: Vec<T>,
}

impl<T: Clone + num_traits::Zero> Buckets<T> {
    fn new(m_max: usize, h: i64, k: i64, floor: bool) -> Self {
        let height_min = if floor { 0 } else { h - m_max as i64 };
        let height_max = h + k * m_max as i64;
        let rows = (height_max - height_min + 1) as usize;
        Buckets {
            rows,
            height_min,
            cells: vec![T::zero(); (m_max + 1) * rows],
        }
    }

    fn bump(&mut self, depth: usize, height: i64, amount: &T) {
        let idx = depth * self.rows + (height - self.height_min) as usize;
        self.cells[idx] = self.cells[idx].clone() + amount.clone();
    }

    fn into_map(self, m_max: usize) -> BTreeMap<(i64, i64), T> {
        let mut map = BTreeMap::new();
        for depth in 0..=m_max {
            for row in 0..self.rows {
                let v = &self.cells[depth * self.rows + row];
                if !v.is_zero() {
                    map.insert((depth as i64, self.height_min + row as i64), v.clone());
                }
            }
        }
        map
    }
}

/// Weighted endpoint sums over *all* floor-respecting rise paths of length
/// `<= m_max` from `(0, h)`: one depth-first walk, bucketed by endpoint.
///
/// This is the bulk form of the oracle used to compare whole tables at once;
/// each bucket equals the sum of [`weight_of`] over the enumerated paths to
/// that endpoint.
pub fn rise_path_weight_sums<T: Coeff>(
    steps: &StepSet,
    weights: &Weights<T>,
    m_max: usize,
    h: i64,
    floor: bool,
) -> BTreeMap<(i64, i64), T> {
    let mut buckets = Buckets::new(m_max, h, steps.max_rise(), floor);
    let table: Vec<(i64, T)> = weights.iter().map(|(i, c)| (i, c.clone())).collect();
    fn walk<T: Coeff>(
        table: &[(i64, T)],
        m_max: usize,
        floor: bool,
        depth: usize,
        height: i64,
        acc: T,
        buckets: &mut Buckets<T>,
    ) {
        buckets.bump(depth, height, &acc);
        if depth == m_max {
            return;
        }
        for (rise, c) in table {
            let next = height + rise;
            if floor && next < 0 {
                continue;
            }
            walk(
                table,
                m_max,
                floor,
                depth + 1,
                next,
                acc.clone() * c.clone(),
                buckets,
            );
        }
    }
    walk(&table, m_max, floor, 0, h, T::one(), &mut buckets);
    buckets.into_map(m_max)
}

/// Endpoint counts over all floor-respecting rise paths of length `<= m_max`
/// from `(0, h)`: the unweighted fast path of [`rise_path_weight_sums`].
pub fn rise_path_counts(
    steps: &StepSet,
    m_max: usize,
    h: i64,
    floor: bool,
) -> BTreeMap<(i64, i64), u64> {
    let mut buckets: Buckets<u64> = Buckets::new(m_max, h, steps.max_rise(), floor);
    fn walk(
        elements: &[i64],
        m_max: usize,
        floor: bool,
        depth: usize,
        height: i64,
        buckets: &mut Buckets<u64>,
    ) {
        buckets.bump(depth, height, &1);
        if depth == m_max {
            return;
        }
        for &rise in elements {
            let next = height + rise;
            if floor && next < 0 {
                continue;
            }
            walk(elements, m_max, floor, depth + 1, next, buckets);
        }
    }
    walk(steps.elements(), m_max, floor, 0, h, &mut buckets);
    buckets.into_map(m_max)
}

/// Endpoint counts over all constraint-respecting unit-step prefixes from
/// `start` inside `x <= x_max`, `y <= y_max`: one depth-first walk.
pub fn unit_path_counts(
    start: (i64, i64),
    x_max: i64,
    y_max: i64,
    constraint: &dyn Fn(i64, i64) -> bool,
) -> BTreeMap<(i64, i64), u64> {
    let mut counts = BTreeMap::new();
    if !constraint(start.0, start.1) || start.0 > x_max || start.1 > y_max {
        return counts;
    }
    let cols = (x_max - start.0 + 1) as usize;
    let rows = (y_max - start.1 + 1) as usize;
    let mut cells = vec![0u64; cols * rows];
    fn walk(
        at: (i64, i64),
        start: (i64, i64),
        x_max: i64,
        y_max: i64,
        rows: usize,
        constraint: &dyn Fn(i64, i64) -> bool,
        cells: &mut [u64],
    ) {
        cells[(at.0 - start.0) as usize * rows + (at.1 - start.1) as usize] += 1;
        if at.0 < x_max && constraint(at.0 + 1, at.1) {
            walk(
                (at.0 + 1, at.1),
                start,
                x_max,
                y_max,
                rows,
                constraint,
                cells,
            );
        }
        if at.1 < y_max && constraint(at.0, at.1 + 1) {
            walk(
                (at.0, at.1 + 1),
                start,
                x_max,
                y_max,
                rows,
                constraint,
                cells,
            );
        }
    }
    walk(start, start, x_max, y_max, rows, constraint, &mut cells);
    for x in 0..cols {
        for y in 0..rows {
            let v = cells[x * rows + y];
            if v > 0 {
                counts.insert((start.0 + x as i64, start.1 + y as i64), v);
            }
        }
    }
    counts
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{rat, ratio};
    use crate::QWeights;

    #[test]
    fn step_set_validates_shape() {
        let t = StepSet::from_slice(&[2, -1, 0]).unwrap();
        assert_eq!(t.elements(), &[-1, 0, 2]);
        assert_eq!(t.max_rise(), 2);
        assert_eq!(t.interior(), vec![0]);
        assert!(StepSet::from_slice(&[0, 1]).is_err());
        assert!(StepSet::from_slice(&[-1]).is_err());
        assert!(StepSet::from_slice(&[-2, -1, 1]).is_err());
        assert!(StepSet::from_slice(&[-1, 1, 1]).is_err());
    }

    #[test]
    fn weights_pin_boundary_elements() {
        let t = StepSet::from_slice(&[-1, 0, 1, 2]).unwrap();
        let w = QWeights::with_overrides(&t, &[(1, rat(2))]).unwrap();
        assert_eq!(w.get(1), Some(&rat(2)));
        assert_eq!(w.get(-1), Some(&rat(1)));
        assert!(QWeights::with_overrides(&t, &[(2, rat(3))]).is_err());
        assert!(QWeights::with_overrides(&t, &[(5, rat(1))]).is_err());
    }

    #[test]
    fn enumerates_unique_path_for_small_cases() {
        let t = StepSet::from_slice(&[-1, 2]).unwrap();
        let paths = enumerate_rise_paths(&t, 3, 0, 0, true, DEFAULT_ENUM_CAP).unwrap();
        assert_eq!(paths.len(), 1);
        assert_eq!(paths[0].rises, vec![2, -1, -1]);
        assert_eq!(paths[0].endpoint(), (3, 0));

        let dyck = StepSet::from_slice(&[-1, 1]).unwrap();
        let paths = enumerate_rise_paths(&dyck, 2, 0, 0, true, DEFAULT_ENUM_CAP).unwrap();
        assert_eq!(paths.len(), 1);
        assert_eq!(paths[0].rises, vec![1, -1]);
    }

    #[test]
    fn twelve_paths_reach_the_axis_from_height_one() {
        let t = StepSet::from_slice(&[-1, 1, 2]).unwrap();
        let paths = enumerate_rise_paths(&t, 6, 0, 1, true, DEFAULT_ENUM_CAP).unwrap();
        assert_eq!(paths.len(), 12);
        assert!(paths.iter().all(|p| p.stays_on_floor()));
        assert!(paths.windows(2).all(|w| w[0].rises < w[1].rises));
    }

    #[test]
    fn cap_is_checked_before_enumerating() {
        let t = StepSet::from_slice(&[-1, 0, 1, 2]).unwrap();
        let err = enumerate_rise_paths(&t, 20, 0, 0, true, 1000).unwrap_err();
        assert_eq!(
            err,
            StepError::CapExceeded {
                bound: (4u128).pow(20),
                cap: 1000
            }
        );
    }

    #[test]
    fn weight_of_multiplies_step_weights() {
        let t = StepSet::from_slice(&[-1, 0, 1, 2]).unwrap();
        let w = QWeights::with_overrides(&t, &[(0, rat(2)), (1, rat(3))]).unwrap();
        let p = RisePath::new((0, 0), vec![0, 1, -1]);
        assert_eq!(weight_of(&p, &w).unwrap(), rat(6));
        assert_eq!(
            weight_of(&RisePath::new((0, 0), vec![2, -1, -1]), &w).unwrap(),
            rat(1)
        );
        assert_eq!(
            weight_of(&RisePath::new((0, 0), vec![]), &w).unwrap(),
            rat(1)
        );
        assert_eq!(
            weight_of(&RisePath::new((0, 0), vec![3]), &w),
            Err(StepError::RiseOutsideWeights { rise: 3 })
        );
    }

    #[test]
    fn ballot_style_unit_enumeration() {
        // Strictly below the diagonal, matching the ballot count 2 at (3,2).
        let below = |x: i64, y: i64| y < x;
        let paths = enumerate_unit_paths((1, 0), (3, 2), &below, DEFAULT_ENUM_CAP).unwrap();
        assert_eq!(paths.len(), 2);
        assert_eq!(paths[0].step_string(), "RRUU");
        assert_eq!(paths[1].step_string(), "RURU");

        let unconstrained = |_: i64, _: i64| true;
        let paths = enumerate_unit_paths((0, 0), (5, 0), &unconstrained, DEFAULT_ENUM_CAP).unwrap();
        assert_eq!(paths.len(), 1);

        // Weakly below y = 2x.
        let never_cross = |x: i64, y: i64| y <= 2 * x;
        let paths = enumerate_unit_paths((0, 0), (3, 5), &never_cross, DEFAULT_ENUM_CAP).unwrap();
        assert_eq!(paths.len(), 12);
    }

    #[test]
    fn bulk_rise_sums_match_per_cell_enumeration() {
        let t = StepSet::from_slice(&[-1, 0, 1, 2]).unwrap();
        let w = QWeights::with_overrides(&t, &[(0, ratio(1, 2))]).unwrap();
        let sums = rise_path_weight_sums(&t, &w, 5, 0, true);
        for m in 0..=5usize {
            for n in 0..=(2 * m as i64) {
                let paths = enumerate_rise_paths(&t, m, n, 0, true, DEFAULT_ENUM_CAP).unwrap();
                let mut total = rat(0);
                for p in &paths {
                    total += weight_of(p, &w).unwrap();
                }
                let bucket = sums.get(&(m as i64, n)).cloned().unwrap_or_else(|| rat(0));
                assert_eq!(bucket, total, "cell ({m}, {n})");
            }
        }
    }

    #[test]
    fn bulk_unit_counts_match_per_cell_enumeration() {
        let below = |x: i64, y: i64| y < x;
        let counts = unit_path_counts((1, 0), 6, 6, &below);
        for m in 1..=6 {
            for n in 0..m {
                let paths = enumerate_unit_paths((1, 0), (m, n), &below, DEFAULT_ENUM_CAP).unwrap();
                assert_eq!(
                    counts.get(&(m, n)).copied().unwrap_or(0),
                    paths.len() as u64,
                    "cell ({m}, {n})"
                );
            }
        }
    }
}
