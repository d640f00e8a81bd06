//! Locating the representative point of one region.
//!
//! Slide a point `v` from `y` toward `z`. The number of points strictly
//! inside `xvy` never decreases and only changes where `v` crosses a line
//! from `x` through a data point. Bisection on the slide parameter finds a
//! position with exactly the wanted count. When several points are
//! collinear with `x` the count can skip the target; the bisection then
//! narrows the jump down and the jump position is computed exactly from the
//! few points left in the wedge.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::{AlgoStats, EmbedError};
use crate::geometry::{cross_int, locate_int, Point, PointLocation, RatPoint, Triangle};
use crate::range_oracle::RangeOracle;

/// Split positions on segment `yz`, with `v = y + t (z - y)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SplitPoints {
    pub v1: RatPoint,
    pub v2: RatPoint,
    pub t1: BigRational,
    pub t2: BigRational,
}

/// Number of bisection steps after which the interval is narrower than
/// `1 / (4 N^4)`.
pub(crate) fn bisection_limit(max_abs: u64) -> u32 {
    let n = BigInt::from(max_abs.max(1));
    let bound = BigInt::from(4) * &n * &n * &n * &n;
    bound.bits() as u32
}

#[derive(Clone, Copy, Debug, Default)]
pub(crate) struct SearchCounters {
    pub steps: u64,
    /// Side searches that never hit the target and were pinned exactly.
    pub pinned: u64,
}

/// Slide parameter of the line through `x` and `q` on segment
/// `near -> far`.
fn crossing_param(x: Point, near: Point, far: Point, q: Point) -> BigRational {
    let num = -cross_int(x, q, near);
    let den = (q.x() as i128 - x.x() as i128) * (far.y() as i128 - near.y() as i128)
        - (q.y() as i128 - x.y() as i128) * (far.x() as i128 - near.x() as i128);
    BigRational::new(num.into(), den.into())
}

fn slide(near: Point, far: Point, t: &BigRational) -> RatPoint {
    near.to_rat().lerp(&far.to_rat(), t)
}

/// Largest slide parameter `t` from `near` toward `far` with
/// `count(x, v(t), near) <= target`, or any `t` hitting `target` exactly
/// if bisection lands on one first. Requires `target < total`, where
/// `total` is the interior count of the whole region.
fn search_side(
    oracle: &RangeOracle,
    x: Point,
    near: Point,
    far: Point,
    target: usize,
    steps: &mut SearchCounters,
) -> Result<BigRational, EmbedError> {
    if target == 0 {
        return Ok(BigRational::zero());
    }
    let limit = bisection_limit(oracle.max_abs_coord());
    let two = BigRational::from_integer(2.into());
    let mut lo = BigRational::zero();
    let mut hi = BigRational::one();
    let mut count_lo = 0usize;
    for _ in 0..limit {
        let mid = (&lo + &hi) / &two;
        steps.steps += 1;
        let tri = Triangle::new(x.to_rat(), slide(near, far, &mid), near.to_rat());
        let c = oracle.count_interior(&tri)?;
        if c == target {
            return Ok(mid);
        }
        if c > target {
            hi = mid;
        } else {
            lo = mid;
            count_lo = c;
        }
    }

    // Pin the jump inside [lo, hi]: count(lo) <= target < count(hi).
    steps.pinned += 1;
    let v_lo = if lo.is_zero() { near.to_rat() } else { slide(near, far, &lo) };
    let wedge = Triangle::new(x.to_rat(), v_lo, slide(near, far, &hi));
    let mut params: Vec<BigRational> = oracle
        .report_closed(&wedge)?
        .into_iter()
        .filter(|&q| locate_int(q, x, near, far) == Ok(PointLocation::Interior))
        .map(|q| crossing_param(x, near, far, q))
        .filter(|t| *t >= lo && *t <= hi)
        .collect();
    params.sort_unstable();
    let mut cum = count_lo;
    let mut i = 0;
    while i < params.len() {
        let mut j = i;
        while j < params.len() && params[j] == params[i] {
            j += 1;
        }
        cum += j - i;
        if cum > target {
            return Ok(params[i].clone());
        }
        i = j;
    }
    Err(EmbedError::Internal("count jump not found inside the final bisection interval".into()))
}

pub(crate) fn split_points_unchecked(
    oracle: &RangeOracle,
    [x, y, z]: [Point; 3],
    n1: usize,
    n3: usize,
    steps: &mut SearchCounters,
) -> Result<Option<SplitPoints>, EmbedError> {
    let t1 = search_side(oracle, x, y, z, n1, steps)?;
    let from_z = search_side(oracle, x, z, y, n3, steps)?;
    let t2 = BigRational::one() - from_z;
    if t1 > t2 {
        return Ok(None);
    }
    Ok(Some(SplitPoints { v1: slide(y, z, &t1), v2: slide(y, z, &t2), t1, t2 }))
}

/// Finds split points `v1`, `v2` on `yz` such that `xv1y` holds `n1` points
/// and `xv2z` holds `n3` (or, when collinear points make that impossible,
/// the positions just before the counts jump past `n1` and `n3`).
///
/// Returns `None` when the two positions cross, in which case no point of
/// the region can split it into the requested counts.
pub fn find_split_points(
    x: Point,
    y: Point,
    z: Point,
    n1: usize,
    n3: usize,
    oracle: &RangeOracle,
    stats: &mut AlgoStats,
) -> Result<Option<SplitPoints>, EmbedError> {
    let total = oracle.count_interior([x, y, z])?;
    if n1 + n3 + 1 > total {
        return Err(EmbedError::Precondition(format!(
            "n1 + n3 = {} but the region holds only {total} points",
            n1 + n3
        )));
    }
    let mut steps = SearchCounters::default();
    let out = split_points_unchecked(oracle, [x, y, z], n1, n3, &mut steps);
    stats.record_node_search(steps);
    out
}

/// Rotation of `(x, y, z)` that puts the smallest child in the middle
/// role. Rotations keep the pairing of sub-triangles with children.
fn rotate_smallest_to_middle(corners: [Point; 3], sizes: [usize; 3]) -> ([Point; 3], [usize; 3]) {
    let [x, y, z] = corners;
    let [n1, n2, n3] = sizes;
    if n2 <= n1 && n2 <= n3 {
        (corners, sizes)
    } else if n3 <= n1 {
        ([y, z, x], [n2, n3, n1])
    } else {
        ([z, x, y], [n3, n1, n2])
    }
}

fn passes_counts(
    oracle: &RangeOracle,
    [x, y, z]: [Point; 3],
    u: Point,
    [n1, n2, n3]: [usize; 3],
) -> Result<bool, EmbedError> {
    Ok(oracle.count_interior([x, u, y])? == n1
        && oracle.count_interior([y, u, z])? == n2
        && oracle.count_interior([z, u, x])? == n3)
}

/// Improved search: restrict candidates to the middle wedge `x v1 v2`.
pub(crate) fn representative_improved(
    oracle: &RangeOracle,
    corners: [Point; 3],
    sizes: [usize; 3],
    stats: &mut AlgoStats,
) -> Result<Option<Point>, EmbedError> {
    let (rc, rs) = rotate_smallest_to_middle(corners, sizes);
    let [x, y, z] = rc;
    let mut steps = SearchCounters::default();
    let split = split_points_unchecked(oracle, rc, rs[0], rs[2], &mut steps);
    stats.record_node_search(steps);
    let Some(split) = split? else { return Ok(None) };

    let candidates: Vec<Point> = if split.t1 < split.t2 {
        oracle
            .report_closed(Triangle::new(x.to_rat(), split.v1.clone(), split.v2.clone()))?
            .into_iter()
            .filter(|&q| locate_int(q, x, y, z) == Ok(PointLocation::Interior))
            .collect()
    } else {
        // v1 == v2: u can only sit on segment x v1. Widen to a thin wedge
        // for the query and keep the exact hits.
        let bits = bisection_limit(oracle.max_abs_coord()) + 2;
        let h = BigRational::new(BigInt::one(), BigInt::one() << bits);
        let lo = (&split.t1 - &h).max(BigRational::zero());
        let hi = (&split.t1 + &h).min(BigRational::one());
        let a = if lo.is_zero() { y.to_rat() } else { slide(y, z, &lo) };
        oracle
            .report_closed(Triangle::new(x.to_rat(), a, slide(y, z, &hi)))?
            .into_iter()
            .filter(|&q| locate_int(q, x, y, z) == Ok(PointLocation::Interior))
            .filter(|&q| crossing_param(x, y, z, q) == split.t1)
            .collect()
    };

    if candidates.len() > 2 * (rs[1] + 1) {
        stats.candidate_overflow_nodes += 1;
    }
    for u in candidates {
        stats.candidates_checked += 1;
        if passes_counts(oracle, rc, u, rs)? {
            return Ok(Some(u));
        }
    }
    Ok(None)
}

/// Baseline search: every point inside the region is a candidate.
pub(crate) fn representative_baseline(
    oracle: &RangeOracle,
    corners: [Point; 3],
    sizes: [usize; 3],
    stats: &mut AlgoStats,
) -> Result<Option<Point>, EmbedError> {
    for u in oracle.report_interior(corners)? {
        stats.candidates_checked += 1;
        if passes_counts(oracle, corners, u, sizes)? {
            return Ok(Some(u));
        }
    }
    Ok(None)
}

/// Finds the point `u` with `n1`, `n2`, `n3` points strictly inside `xuy`,
/// `yuz` and `zux`, using the split-point pruning. The region must hold
/// exactly `n1 + n2 + n3 + 1` points.
#[allow(clippy::too_many_arguments)]
pub fn find_representative_point(
    x: Point,
    y: Point,
    z: Point,
    n1: usize,
    n2: usize,
    n3: usize,
    oracle: &RangeOracle,
    stats: &mut AlgoStats,
) -> Result<Option<Point>, EmbedError> {
    representative_improved(oracle, [x, y, z], [n1, n2, n3], stats)
}
