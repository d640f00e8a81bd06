//! Exact planar predicates over integer and rational coordinates.
//!
//! Integer inputs go through `i128` arithmetic, which is exact for every
//! coordinate accepted by [`Point::with_bound`]. Rational inputs go through
//! arbitrary-precision rationals. Nothing in here touches floating point.

use std::cmp::Ordering;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use serde::{Deserialize, Serialize};
use thiserror::Error;

/// Default bound on `|x|` and `|y|` of input points.
pub const DEFAULT_COORD_BOUND: i64 = (1 << 31) - 1;

/// Largest bound that may be configured. Keeps every integer cross product
/// of coordinate differences inside `i128`.
pub const MAX_COORD_BOUND: i64 = 1 << 61;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GeometryError {
    #[error("coordinate ({x}, {y}) exceeds the bound {bound}")]
    OutOfBounds { x: i64, y: i64, bound: i64 },
    #[error("coordinate bound {0} is outside 1..={MAX_COORD_BOUND}")]
    InvalidBound(i64),
    #[error("degenerate triangle: corners are collinear")]
    DegenerateTriangle,
    #[error("degenerate input: {0}")]
    DegenerateInput(&'static str),
}

/// An input point with integer coordinates.
///
/// Ordering is lexicographic: by `x`, then by `y`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "RawPoint")]
pub struct Point {
    x: i64,
    y: i64,
}

#[derive(Deserialize)]
struct RawPoint {
    x: i64,
    y: i64,
}

impl TryFrom<RawPoint> for Point {
    type Error = GeometryError;

    fn try_from(r: RawPoint) -> Result<Self, Self::Error> {
        Point::with_bound(r.x, r.y, MAX_COORD_BOUND)
    }
}

impl Point {
    /// Creates a point checked against [`DEFAULT_COORD_BOUND`].
    pub fn new(x: i64, y: i64) -> Result<Self, GeometryError> {
        Self::with_bound(x, y, DEFAULT_COORD_BOUND)
    }

    pub fn with_bound(x: i64, y: i64, bound: i64) -> Result<Self, GeometryError> {
        if !(1..=MAX_COORD_BOUND).contains(&bound) {
            return Err(GeometryError::InvalidBound(bound));
        }
        if x.unsigned_abs() > bound as u64 || y.unsigned_abs() > bound as u64 {
            return Err(GeometryError::OutOfBounds { x, y, bound });
        }
        Ok(Point { x, y })
    }

    #[inline]
    pub fn x(self) -> i64 {
        self.x
    }

    #[inline]
    pub fn y(self) -> i64 {
        self.y
    }

    /// Largest absolute coordinate value.
    pub fn max_abs(self) -> u64 {
        self.x.unsigned_abs().max(self.y.unsigned_abs())
    }

    pub fn to_rat(self) -> RatPoint {
        RatPoint::from(self)
    }
}

impl fmt::Debug for Point {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.x, self.y)
    }
}

impl fmt::Display for Point {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.x, self.y)
    }
}

/// A point with exact rational coordinates, always in lowest terms with a
/// positive denominator.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct RatPoint {
    pub x: BigRational,
    pub y: BigRational,
}

impl RatPoint {
    pub fn new(x: BigRational, y: BigRational) -> Self {
        // `Ratio` arithmetic keeps values reduced; this guards hand-built ones.
        RatPoint { x: x.reduced(), y: y.reduced() }
    }

    pub fn from_ints(x: i64, y: i64) -> Self {
        RatPoint { x: BigRational::from_integer(x.into()), y: BigRational::from_integer(y.into()) }
    }

    /// `self + t * (other - self)`.
    pub fn lerp(&self, other: &RatPoint, t: &BigRational) -> RatPoint {
        RatPoint { x: &self.x + t * (&other.x - &self.x), y: &self.y + t * (&other.y - &self.y) }
    }

    /// Back to an integer point if both coordinates are integral.
    pub fn to_point(&self) -> Option<Point> {
        use num_traits::ToPrimitive;
        if !self.x.is_integer() || !self.y.is_integer() {
            return None;
        }
        let x = self.x.to_integer().to_i64()?;
        let y = self.y.to_integer().to_i64()?;
        Point::with_bound(x, y, MAX_COORD_BOUND).ok()
    }

    /// Homogeneous integer coordinates `(X, Y, D)` with `D > 0` and
    /// `(x, y) = (X / D, Y / D)`.
    pub fn homogeneous(&self) -> (BigInt, BigInt, BigInt) {
        let dx = self.x.denom();
        let dy = self.y.denom();
        let d = dx.lcm(dy);
        let x = self.x.numer() * (&d / dx);
        let y = self.y.numer() * (&d / dy);
        (x, y, d)
    }
}

impl From<Point> for RatPoint {
    fn from(p: Point) -> Self {
        RatPoint::from_ints(p.x, p.y)
    }
}

impl fmt::Debug for RatPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.x, self.y)
    }
}

/// Three corners of a query region. Construction does not check for
/// collinear corners; every consumer rejects degenerate triangles.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Triangle {
    pub a: RatPoint,
    pub b: RatPoint,
    pub c: RatPoint,
}

impl Triangle {
    pub fn new(a: RatPoint, b: RatPoint, c: RatPoint) -> Self {
        Triangle { a, b, c }
    }

    pub fn from_points(a: Point, b: Point, c: Point) -> Self {
        Triangle::new(a.into(), b.into(), c.into())
    }

    pub fn corners(&self) -> [&RatPoint; 3] {
        [&self.a, &self.b, &self.c]
    }

    pub fn orientation(&self) -> Orientation {
        orient(&self.a, &self.b, &self.c)
    }

    pub fn is_degenerate(&self) -> bool {
        self.orientation() == Orientation::Collinear
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Orientation {
    CounterClockwise,
    Clockwise,
    Collinear,
}

impl Orientation {
    pub fn from_sign(ord: Ordering) -> Self {
        match ord {
            Ordering::Greater => Orientation::CounterClockwise,
            Ordering::Less => Orientation::Clockwise,
            Ordering::Equal => Orientation::Collinear,
        }
    }

    pub fn reversed(self) -> Self {
        match self {
            Orientation::CounterClockwise => Orientation::Clockwise,
            Orientation::Clockwise => Orientation::CounterClockwise,
            Orientation::Collinear => Orientation::Collinear,
        }
    }
}

/// Where a point sits relative to a triangle `(a, b, c)`.
///
/// Edge `i` runs from corner `i` to corner `(i + 1) % 3`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum PointLocation {
    Interior,
    OnEdge(u8),
    OnCorner(u8),
    Outside,
}

impl PointLocation {
    pub fn is_interior(self) -> bool {
        self == PointLocation::Interior
    }

    pub fn is_closed(self) -> bool {
        self != PointLocation::Outside
    }
}

/// Sign of `(q - p) x (r - p)`.
pub fn orient(p: &RatPoint, q: &RatPoint, r: &RatPoint) -> Orientation {
    let lhs = (&q.x - &p.x) * (&r.y - &p.y);
    let rhs = (&q.y - &p.y) * (&r.x - &p.x);
    Orientation::from_sign(lhs.cmp(&rhs))
}

/// Raw cross product `(q - p) x (r - p)` of integer points.
#[inline]
pub fn cross_int(p: Point, q: Point, r: Point) -> i128 {
    let (px, py) = (p.x as i128, p.y as i128);
    (q.x as i128 - px) * (r.y as i128 - py) - (q.y as i128 - py) * (r.x as i128 - px)
}

/// Integer specialisation of [`orient`].
#[inline]
pub fn orient_int(p: Point, q: Point, r: Point) -> Orientation {
    Orientation::from_sign(cross_int(p, q, r).cmp(&0))
}

fn signed_to_loc(s: [Ordering; 3]) -> PointLocation {
    if s.contains(&Ordering::Less) {
        return PointLocation::Outside;
    }
    let zeros: Vec<usize> = (0..3).filter(|&i| s[i] == Ordering::Equal).collect();
    match zeros.as_slice() {
        [] => PointLocation::Interior,
        [e] => PointLocation::OnEdge(*e as u8),
        // Edges e and e+1 meet at corner e+1; edges 2 and 0 meet at corner 0.
        [0, 1] => PointLocation::OnCorner(1),
        [1, 2] => PointLocation::OnCorner(2),
        [0, 2] => PointLocation::OnCorner(0),
        _ => unreachable!("three zero orientations imply a degenerate triangle"),
    }
}

/// Classifies `p` against the triangle `t`, whichever way `t` winds.
pub fn locate_in_triangle(p: &RatPoint, t: &Triangle) -> Result<PointLocation, GeometryError> {
    let winding = match t.orientation() {
        Orientation::Collinear => return Err(GeometryError::DegenerateTriangle),
        Orientation::CounterClockwise => Ordering::Greater,
        Orientation::Clockwise => Ordering::Less,
    };
    let c = t.corners();
    let mut s = [Ordering::Equal; 3];
    for i in 0..3 {
        let o = match orient(c[i], c[(i + 1) % 3], p) {
            Orientation::CounterClockwise => Ordering::Greater,
            Orientation::Clockwise => Ordering::Less,
            Orientation::Collinear => Ordering::Equal,
        };
        s[i] = if winding == Ordering::Greater { o } else { o.reverse() };
    }
    Ok(signed_to_loc(s))
}

/// Integer specialisation of [`locate_in_triangle`].
pub fn locate_int(p: Point, a: Point, b: Point, c: Point) -> Result<PointLocation, GeometryError> {
    let area = cross_int(a, b, c);
    if area == 0 {
        return Err(GeometryError::DegenerateTriangle);
    }
    let corners = [a, b, c];
    let mut s = [Ordering::Equal; 3];
    for i in 0..3 {
        let o = cross_int(corners[i], corners[(i + 1) % 3], p).cmp(&0);
        s[i] = if area > 0 { o } else { o.reverse() };
    }
    Ok(signed_to_loc(s))
}

/// Returns the extreme points of `points` in counterclockwise order,
/// starting from the lexicographically smallest one. Points in the relative
/// interior of hull edges are not extreme and are left out.
pub fn convex_hull(points: &[Point]) -> Result<Vec<Point>, GeometryError> {
    let mut pts: Vec<Point> = points.to_vec();
    pts.sort_unstable();
    pts.dedup();
    if pts.len() < 3 {
        return Err(GeometryError::DegenerateInput("fewer than 3 distinct points"));
    }

    // Andrew's monotone chain, popping on non-left turns.
    let mut hull: Vec<Point> = Vec::with_capacity(pts.len() + 1);
    for &p in &pts {
        while hull.len() >= 2 && cross_int(hull[hull.len() - 2], hull[hull.len() - 1], p) <= 0 {
            hull.pop();
        }
        hull.push(p);
    }
    let lower_len = hull.len() + 1;
    for &p in pts.iter().rev().skip(1) {
        while hull.len() >= lower_len && cross_int(hull[hull.len() - 2], hull[hull.len() - 1], p) <= 0 {
            hull.pop();
        }
        hull.push(p);
    }
    hull.pop();

    if hull.len() < 3 {
        return Err(GeometryError::DegenerateInput("all points are collinear"));
    }
    Ok(hull)
}

fn on_closed_segment_int(a: Point, b: Point, p: Point) -> bool {
    cross_int(a, b, p) == 0 && a.x.min(b.x) <= p.x && p.x <= a.x.max(b.x) && a.y.min(b.y) <= p.y && p.y <= a.y.max(b.y)
}

/// True when `p` lies on the segment `ab` but is neither endpoint.
pub fn strictly_on_segment_int(a: Point, b: Point, p: Point) -> bool {
    p != a && p != b && on_closed_segment_int(a, b, p)
}

/// True iff the segments share a point interior to at least one of them.
/// Touching only at a common endpoint does not count.
pub fn segments_properly_cross(s1: (&RatPoint, &RatPoint), s2: (&RatPoint, &RatPoint)) -> bool {
    let (a, b) = s1;
    let (c, d) = s2;
    let o1 = orient(a, b, c);
    let o2 = orient(a, b, d);
    let o3 = orient(c, d, a);
    let o4 = orient(c, d, b);

    use Orientation::Collinear as Col;
    if o1 == Col && o2 == Col {
        return collinear_overlap_positive([(&a.x, &a.y), (&b.x, &b.y)], [(&c.x, &c.y), (&d.x, &d.y)]);
    }
    let meets = |p: Orientation, q: Orientation| p == Col || q == Col || p != q;
    if !(meets(o1, o2) && meets(o3, o4)) {
        return false;
    }
    // Not collinear, so the intersection is a single point; when o1 or o2
    // vanishes it also has to fall inside the bounding box.
    if o1 == Col && !rat_in_box(c, a, b) {
        return false;
    }
    if o2 == Col && !rat_in_box(d, a, b) {
        return false;
    }
    if o3 == Col && !rat_in_box(a, c, d) {
        return false;
    }
    if o4 == Col && !rat_in_box(b, c, d) {
        return false;
    }
    !(a == c || a == d || b == c || b == d)
}

fn rat_in_box(p: &RatPoint, a: &RatPoint, b: &RatPoint) -> bool {
    let (xlo, xhi) = if a.x <= b.x { (&a.x, &b.x) } else { (&b.x, &a.x) };
    let (ylo, yhi) = if a.y <= b.y { (&a.y, &b.y) } else { (&b.y, &a.y) };
    xlo <= &p.x && &p.x <= xhi && ylo <= &p.y && &p.y <= yhi
}

fn collinear_overlap_positive<'a, T: Ord>(s1: [(&'a T, &'a T); 2], s2: [(&'a T, &'a T); 2]) -> bool {
    // Project on x unless the common line is vertical.
    let vertical = s1[0].0 == s1[1].0 && s2[0].0 == s2[1].0 && s1[0].0 == s2[0].0;
    let key = |p: (&'a T, &'a T)| if vertical { (p.1, p.0) } else { (p.0, p.1) };
    let (mut lo1, mut hi1) = (key(s1[0]), key(s1[1]));
    if lo1 > hi1 {
        std::mem::swap(&mut lo1, &mut hi1);
    }
    let (mut lo2, mut hi2) = (key(s2[0]), key(s2[1]));
    if lo2 > hi2 {
        std::mem::swap(&mut lo2, &mut hi2);
    }
    let lo = lo1.max(lo2);
    let hi = hi1.min(hi2);
    lo < hi
}

/// Integer specialisation of [`segments_properly_cross`].
pub fn segments_properly_cross_int(s1: (Point, Point), s2: (Point, Point)) -> bool {
    let (a, b) = s1;
    let (c, d) = s2;
    // Cheap reject on bounding boxes.
    if a.x.max(b.x) < c.x.min(d.x)
        || c.x.max(d.x) < a.x.min(b.x)
        || a.y.max(b.y) < c.y.min(d.y)
        || c.y.max(d.y) < a.y.min(b.y)
    {
        return false;
    }
    let o1 = cross_int(a, b, c).signum();
    let o2 = cross_int(a, b, d).signum();
    let o3 = cross_int(c, d, a).signum();
    let o4 = cross_int(c, d, b).signum();
    if o1 == 0 && o2 == 0 {
        return collinear_overlap_positive([(&a.x, &a.y), (&b.x, &b.y)], [(&c.x, &c.y), (&d.x, &d.y)]);
    }
    if o1 * o2 > 0 || o3 * o4 > 0 {
        return false;
    }
    if (o1 == 0 && !on_closed_segment_int(a, b, c))
        || (o2 == 0 && !on_closed_segment_int(a, b, d))
        || (o3 == 0 && !on_closed_segment_int(c, d, a))
        || (o4 == 0 && !on_closed_segment_int(c, d, b))
    {
        return false;
    }
    !(a == c || a == d || b == c || b == d)
}

/// `|v|` rounded up to the next power of two exponent, i.e. the number of
/// bits needed to store it.
pub(crate) fn bit_len(v: u64) -> u32 {
    64 - v.leading_zeros()
}

#[cfg(test)]
pub(crate) fn rat(n: i64, d: i64) -> BigRational {
    BigRational::new(n.into(), d.into())
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn p(x: i64, y: i64) -> Point {
        Point::new(x, y).unwrap()
    }

    fn r(x: i64, y: i64) -> RatPoint {
        RatPoint::from_ints(x, y)
    }

    #[test]
    fn orient_examples() {
        assert_eq!(orient(&r(0, 0), &r(1, 0), &r(0, 1)), Orientation::CounterClockwise);
        assert_eq!(orient(&r(0, 0), &r(1, 1), &r(2, 2)), Orientation::Collinear);
        assert_eq!(orient(&r(0, 0), &r(0, 1), &r(1, 0)), Orientation::Clockwise);
        assert_eq!(orient_int(p(0, 0), p(1, 0), p(0, 1)), Orientation::CounterClockwise);
    }

    #[test]
    fn point_bound_is_enforced() {
        assert!(Point::new(DEFAULT_COORD_BOUND, -DEFAULT_COORD_BOUND).is_ok());
        assert!(matches!(Point::new(DEFAULT_COORD_BOUND + 1, 0), Err(GeometryError::OutOfBounds { .. })));
        assert!(Point::with_bound(5, 5, 4).is_err());
        assert!(Point::with_bound(0, 0, 0).is_err());
    }

    #[test]
    fn hull_examples() {
        let h = convex_hull(&[p(0, 0), p(4, 0), p(0, 4), p(1, 1)]).unwrap();
        assert_eq!(h, vec![p(0, 0), p(4, 0), p(0, 4)]);
        let h = convex_hull(&[p(0, 0), p(4, 0), p(4, 4), p(0, 4)]).unwrap();
        assert_eq!(h, vec![p(0, 0), p(4, 0), p(4, 4), p(0, 4)]);
        let h = convex_hull(&[p(0, 0), p(4, 0), p(2, 0), p(0, 4)]).unwrap();
        assert_eq!(h, vec![p(0, 0), p(4, 0), p(0, 4)]);
    }

    #[test]
    fn hull_rejects_degenerate_input() {
        assert!(convex_hull(&[p(0, 0), p(1, 1)]).is_err());
        assert!(convex_hull(&[p(0, 0), p(1, 1), p(1, 1)]).is_err());
        assert!(convex_hull(&[p(0, 0), p(1, 1), p(2, 2), p(5, 5)]).is_err());
    }

    #[test]
    fn locate_examples() {
        let t = Triangle::from_points(p(0, 0), p(6, 0), p(0, 6));
        assert_eq!(locate_in_triangle(&r(1, 1), &t).unwrap(), PointLocation::Interior);
        assert_eq!(locate_in_triangle(&r(3, 3), &t).unwrap(), PointLocation::OnEdge(1));
        assert_eq!(locate_in_triangle(&r(7, 0), &t).unwrap(), PointLocation::Outside);
        assert_eq!(locate_in_triangle(&r(3, 0), &t).unwrap(), PointLocation::OnEdge(0));
        assert_eq!(locate_in_triangle(&r(0, 3), &t).unwrap(), PointLocation::OnEdge(2));
        assert_eq!(locate_in_triangle(&r(0, 0), &t).unwrap(), PointLocation::OnCorner(0));
        assert_eq!(locate_in_triangle(&r(6, 0), &t).unwrap(), PointLocation::OnCorner(1));
        assert_eq!(locate_in_triangle(&r(0, 6), &t).unwrap(), PointLocation::OnCorner(2));
        // Clockwise winding classifies the same way.
        let cw = Triangle::from_points(p(0, 0), p(0, 6), p(6, 0));
        assert_eq!(locate_in_triangle(&r(1, 1), &cw).unwrap(), PointLocation::Interior);
        assert_eq!(locate_in_triangle(&r(3, 3), &cw).unwrap(), PointLocation::OnEdge(1));
    }

    #[test]
    fn locate_rejects_degenerate_triangle() {
        let t = Triangle::from_points(p(0, 0), p(1, 1), p(2, 2));
        assert_eq!(locate_in_triangle(&r(1, 0), &t), Err(GeometryError::DegenerateTriangle));
        assert!(locate_int(p(1, 0), p(0, 0), p(1, 1), p(2, 2)).is_err());
    }

    #[test]
    fn locate_with_rational_corners() {
        let t = Triangle::new(
            RatPoint::new(rat(1, 2), rat(0, 1)),
            RatPoint::new(rat(13, 2), rat(0, 1)),
            RatPoint::new(rat(1, 2), rat(6, 1)),
        );
        assert_eq!(locate_in_triangle(&r(0, 1), &t).unwrap(), PointLocation::Outside);
        assert_eq!(locate_in_triangle(&r(1, 1), &t).unwrap(), PointLocation::Interior);
        let q = RatPoint::new(rat(1, 2), rat(3, 1));
        assert_eq!(locate_in_triangle(&q, &t).unwrap(), PointLocation::OnEdge(2));
    }

    #[test]
    fn crossing_examples() {
        let seg = |a: (i64, i64), b: (i64, i64)| (r(a.0, a.1), r(b.0, b.1));
        let (a, b) = seg((0, 0), (2, 2));
        let (c, d) = seg((0, 2), (2, 0));
        assert!(segments_properly_cross((&a, &b), (&c, &d)));
        let (a, b) = seg((0, 0), (1, 1));
        let (c, d) = seg((1, 1), (2, 0));
        assert!(!segments_properly_cross((&a, &b), (&c, &d)));
        let (a, b) = seg((0, 0), (4, 0));
        let (c, d) = seg((2, 0), (6, 0));
        assert!(segments_properly_cross((&a, &b), (&c, &d)));
        // T-junction: an endpoint in the other's interior.
        let (a, b) = seg((0, 0), (4, 0));
        let (c, d) = seg((2, 0), (2, 5));
        assert!(segments_properly_cross((&a, &b), (&c, &d)));
        // Collinear, touching end to end.
        let (a, b) = seg((0, 0), (2, 0));
        let (c, d) = seg((2, 0), (5, 0));
        assert!(!segments_properly_cross((&a, &b), (&c, &d)));
        // On the supporting line but beyond the segment.
        let (a, b) = seg((0, 0), (2, 0));
        let (c, d) = seg((3, 0), (3, 3));
        assert!(!segments_properly_cross((&a, &b), (&c, &d)));

        assert!(segments_properly_cross_int((p(0, 0), p(2, 2)), (p(0, 2), p(2, 0))));
        assert!(!segments_properly_cross_int((p(0, 0), p(1, 1)), (p(1, 1), p(2, 0))));
        assert!(segments_properly_cross_int((p(0, 0), p(4, 0)), (p(2, 0), p(6, 0))));
        assert!(segments_properly_cross_int((p(0, 0), p(4, 0)), (p(2, 0), p(2, 5))));
        assert!(!segments_properly_cross_int((p(0, 0), p(2, 0)), (p(2, 0), p(5, 0))));
        assert!(!segments_properly_cross_int((p(0, 0), p(2, 0)), (p(3, 0), p(3, 3))));
        assert!(segments_properly_cross_int((p(0, 0), p(0, 4)), (p(0, 1), p(0, 2))));
    }

    #[test]
    fn homogeneous_clears_denominators() {
        let q = RatPoint::new(rat(1, 4), rat(-5, 6));
        let (x, y, d) = q.homogeneous();
        assert_eq!(d, BigInt::from(12));
        assert_eq!(x, BigInt::from(3));
        assert_eq!(y, BigInt::from(-10));
    }

    fn small() -> impl Strategy<Value = i64> {
        -1000i64..1000
    }

    proptest! {
        #[test]
        fn orient_is_antisymmetric(a in (small(), small()), b in (small(), small()), c in (small(), small())) {
            let (a, b, c) = (r(a.0, a.1), r(b.0, b.1), r(c.0, c.1));
            prop_assert_eq!(orient(&a, &b, &c), orient(&a, &c, &b).reversed());
            prop_assert_eq!(orient(&a, &b, &c), orient(&b, &a, &c).reversed());
        }

        #[test]
        fn int_and_rational_orient_agree(a in (small(), small()), b in (small(), small()), c in (small(), small())) {
            let (pa, pb, pc) = (p(a.0, a.1), p(b.0, b.1), p(c.0, c.1));
            prop_assert_eq!(orient_int(pa, pb, pc), orient(&pa.to_rat(), &pb.to_rat(), &pc.to_rat()));
        }

        #[test]
        fn predicates_invariant_under_scale_and_shift(
            a in (small(), small()), b in (small(), small()), c in (small(), small()), q in (small(), small()),
            k in 1i64..50, dx in small(), dy in small(),
        ) {
            let map = |v: (i64, i64)| p(v.0 * k + dx, v.1 * k + dy);
            let (pa, pb, pc, pq) = (p(a.0, a.1), p(b.0, b.1), p(c.0, c.1), p(q.0, q.1));
            let (ma, mb, mc, mq) = (map(a), map(b), map(c), map(q));
            prop_assert_eq!(orient_int(pa, pb, pc), orient_int(ma, mb, mc));
            prop_assert_eq!(locate_int(pq, pa, pb, pc), locate_int(mq, ma, mb, mc));
            prop_assert_eq!(
                segments_properly_cross_int((pa, pb), (pc, pq)),
                segments_properly_cross_int((ma, mb), (mc, mq))
            );
        }

        #[test]
        fn interior_samples_are_interior(
            a in (small(), small()), b in (small(), small()), c in (small(), small()),
            w in (1i64..100, 1i64..100, 1i64..100),
        ) {
            let (pa, pb, pc) = (p(a.0, a.1), p(b.0, b.1), p(c.0, c.1));
            prop_assume!(orient_int(pa, pb, pc) != Orientation::Collinear);
            // Strictly positive barycentric weights give a strictly interior point.
            let s = w.0 + w.1 + w.2;
            let q = RatPoint::new(
                rat(w.0 * a.0 + w.1 * b.0 + w.2 * c.0, s),
                rat(w.0 * a.1 + w.1 * b.1 + w.2 * c.1, s),
            );
            let t = if orient_int(pa, pb, pc) == Orientation::CounterClockwise {
                Triangle::from_points(pa, pb, pc)
            } else {
                Triangle::from_points(pa, pc, pb)
            };
            prop_assert_eq!(locate_in_triangle(&q, &t).unwrap(), PointLocation::Interior);
            let cs = t.corners();
            for i in 0..3 {
                prop_assert_eq!(orient(cs[i], cs[(i + 1) % 3], &q), Orientation::CounterClockwise);
            }
        }

        #[test]
        fn hull_is_idempotent(pts in proptest::collection::vec((small(), small()), 3..60)) {
            let pts: Vec<Point> = pts.into_iter().map(|(x, y)| p(x, y)).collect();
            if let Ok(h) = convex_hull(&pts) {
                prop_assert_eq!(convex_hull(&h).unwrap(), h.clone());
                // Every input point is inside or on the hull polygon.
                for &q in &pts {
                    for i in 0..h.len() {
                        prop_assert!(cross_int(h[i], h[(i + 1) % h.len()], q) >= 0);
                    }
                }
            }
        }
    }
}
