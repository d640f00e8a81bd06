//! Query triangles compiled into three exact half-plane forms.

use std::cmp::Ordering;

use num_bigint::BigInt;
use num_traits::{Signed, ToPrimitive, Zero};

use crate::geometry::{GeometryError, Point, Triangle};

/// `a*x + b*y + c`, positive on the interior side of one triangle edge.
#[derive(Clone, Debug)]
pub enum Form {
    Small { a: i128, b: i128, c: i128 },
    Big { a: BigInt, b: BigInt, c: BigInt },
}

impl Form {
    fn new(a: BigInt, b: BigInt, c: BigInt, limit: u32) -> Form {
        let fits = |v: &BigInt| v.bits() <= limit as u64;
        if fits(&a) && fits(&b) && fits(&c) {
            Form::Small { a: a.to_i128().unwrap(), b: b.to_i128().unwrap(), c: c.to_i128().unwrap() }
        } else {
            Form::Big { a, b, c }
        }
    }

    fn negate(self) -> Form {
        match self {
            Form::Small { a, b, c } => Form::Small { a: -a, b: -b, c: -c },
            Form::Big { a, b, c } => Form::Big { a: -a, b: -b, c: -c },
        }
    }

    #[inline]
    pub fn sign_at(&self, x: i64, y: i64) -> Ordering {
        match self {
            Form::Small { a, b, c } => (a * x as i128 + b * y as i128 + c).cmp(&0),
            Form::Big { a, b, c } => (a * x + b * y + c).sign_cmp(),
        }
    }

    /// Signs of the minimum and maximum of the form over a box.
    #[inline]
    pub fn sign_range(&self, bx: &BBox) -> (Ordering, Ordering) {
        match self {
            Form::Small { a, b, c } => {
                let (xl, xh) = if *a >= 0 { (bx.xmin, bx.xmax) } else { (bx.xmax, bx.xmin) };
                let (yl, yh) = if *b >= 0 { (bx.ymin, bx.ymax) } else { (bx.ymax, bx.ymin) };
                let lo = a * xl as i128 + b * yl as i128 + c;
                let hi = a * xh as i128 + b * yh as i128 + c;
                (lo.cmp(&0), hi.cmp(&0))
            }
            Form::Big { a, b, c } => {
                let (xl, xh) = if !a.is_negative() { (bx.xmin, bx.xmax) } else { (bx.xmax, bx.xmin) };
                let (yl, yh) = if !b.is_negative() { (bx.ymin, bx.ymax) } else { (bx.ymax, bx.ymin) };
                let lo = a * xl + b * yl + c;
                let hi = a * xh + b * yh + c;
                (lo.sign_cmp(), hi.sign_cmp())
            }
        }
    }
}

trait SignCmp {
    fn sign_cmp(&self) -> Ordering;
}

impl SignCmp for BigInt {
    fn sign_cmp(&self) -> Ordering {
        if self.is_zero() {
            Ordering::Equal
        } else if self.is_positive() {
            Ordering::Greater
        } else {
            Ordering::Less
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct BBox {
    pub xmin: i64,
    pub xmax: i64,
    pub ymin: i64,
    pub ymax: i64,
}

impl BBox {
    pub fn of(points: &[Point]) -> BBox {
        let mut b = BBox { xmin: i64::MAX, xmax: i64::MIN, ymin: i64::MAX, ymax: i64::MIN };
        for p in points {
            b.xmin = b.xmin.min(p.x());
            b.xmax = b.xmax.max(p.x());
            b.ymin = b.ymin.min(p.y());
            b.ymax = b.ymax.max(p.y());
        }
        b
    }
}

/// A non-degenerate triangle as three forms, normalised so that the
/// interior is where all three are positive.
#[derive(Clone, Debug)]
pub struct PreparedTriangle {
    pub forms: [Form; 3],
}

type Homog = (BigInt, BigInt, BigInt);

fn line_through(p: &Homog, q: &Homog) -> (BigInt, BigInt, BigInt) {
    // p x q: the line through two homogeneous points.
    (&p.1 * &q.2 - &p.2 * &q.1, &p.2 * &q.0 - &p.0 * &q.2, &p.0 * &q.1 - &p.1 * &q.0)
}

impl PreparedTriangle {
    /// `limit` is the largest coefficient bit length for which evaluating
    /// a form at any data coordinate stays inside `i128`.
    pub fn from_triangle(t: &Triangle, limit: u32) -> Result<Self, GeometryError> {
        let h = [t.a.homogeneous(), t.b.homogeneous(), t.c.homogeneous()];
        Self::from_homogeneous(h, limit)
    }

    pub fn from_points(a: Point, b: Point, c: Point, limit: u32) -> Result<Self, GeometryError> {
        let area = crate::geometry::cross_int(a, b, c);
        if area == 0 {
            return Err(GeometryError::DegenerateTriangle);
        }
        let corners = [a, b, c];
        let forms = std::array::from_fn(|i| {
            let p = corners[i];
            let q = corners[(i + 1) % 3];
            let (px, py, qx, qy) = (p.x() as i128, p.y() as i128, q.x() as i128, q.y() as i128);
            let f = Form::new(BigInt::from(py - qy), BigInt::from(qx - px), BigInt::from(px * qy - py * qx), limit);
            if area > 0 {
                f
            } else {
                f.negate()
            }
        });
        Ok(PreparedTriangle { forms })
    }

    fn from_homogeneous(h: [Homog; 3], limit: u32) -> Result<Self, GeometryError> {
        let lines: Vec<_> = (0..3).map(|i| line_through(&h[i], &h[(i + 1) % 3])).collect();
        // Orientation: the first edge's form evaluated at the third corner.
        let (a, b, c) = &lines[0];
        let area = a * &h[2].0 + b * &h[2].1 + c * &h[2].2;
        if area.is_zero() {
            return Err(GeometryError::DegenerateTriangle);
        }
        let flip = area.is_negative();
        let mut it = lines.into_iter().map(|(a, b, c)| {
            let f = Form::new(a, b, c, limit);
            if flip {
                f.negate()
            } else {
                f
            }
        });
        Ok(PreparedTriangle { forms: [it.next().unwrap(), it.next().unwrap(), it.next().unwrap()] })
    }

    #[inline]
    pub fn contains(&self, p: Point, closed: bool) -> bool {
        self.forms.iter().all(|f| {
            let s = f.sign_at(p.x(), p.y());
            s == Ordering::Greater || (closed && s == Ordering::Equal)
        })
    }
}

/// Coefficient bit limit for data whose coordinates fit in `coord_bits`
/// bits: `|a*x| + |b*y| + |c| < 3 * 2^125 < 2^127`.
pub(crate) fn coefficient_limit(coord_bits: u32) -> u32 {
    125 - coord_bits
}
