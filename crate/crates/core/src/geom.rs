//! Exact integer geometry: points, orientation predicates and segment intersection.
//!
//! All coordinates are `i64` bounded by [`COORD_LIMIT`] so that every predicate can be
//! evaluated in `i128` without overflow. Crossing points are exact rationals.

use std::cmp::Ordering;
use std::fmt;

use num_integer::Integer;

/// Largest absolute coordinate accepted by the exact predicates.
pub const COORD_LIMIT: i64 = 1 << 40;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Point {
    pub x: i64,
    pub y: i64,
}

impl Point {
    pub const fn new(x: i64, y: i64) -> Self {
        Point { x, y }
    }

    pub fn in_range(&self) -> bool {
        self.x.abs() <= COORD_LIMIT && self.y.abs() <= COORD_LIMIT
    }
}

impl fmt::Display for Point {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.x, self.y)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Orientation {
    Horizontal,
    Vertical,
    Oblique,
}

/// Orientation of the segment `pq`, or `None` when it has zero length.
pub fn orientation(p: Point, q: Point) -> Option<Orientation> {
    match (p.x == q.x, p.y == q.y) {
        (true, true) => None,
        (false, true) => Some(Orientation::Horizontal),
        (true, false) => Some(Orientation::Vertical),
        (false, false) => Some(Orientation::Oblique),
    }
}

/// Twice the signed area of the triangle `abc` (positive for a left turn).
pub fn orient2d(a: Point, b: Point, c: Point) -> i128 {
    let (abx, aby) = ((b.x - a.x) as i128, (b.y - a.y) as i128);
    let (acx, acy) = ((c.x - a.x) as i128, (c.y - a.y) as i128);
    abx * acy - aby * acx
}

pub fn direction(p: Point, q: Point) -> (i64, i64) {
    (q.x - p.x, q.y - p.y)
}

pub fn dot(a: (i64, i64), b: (i64, i64)) -> i128 {
    a.0 as i128 * b.0 as i128 + a.1 as i128 * b.1 as i128
}

pub fn cross(a: (i64, i64), b: (i64, i64)) -> i128 {
    a.0 as i128 * b.1 as i128 - a.1 as i128 * b.0 as i128
}

/// Two segments meet at a right angle iff the integer dot product of their directions is 0.
pub fn is_right_angle(p1: Point, q1: Point, p2: Point, q2: Point) -> bool {
    dot(direction(p1, q1), direction(p2, q2)) == 0
}

/// Whether `r` lies on the closed segment `pq`.
pub fn on_segment(p: Point, q: Point, r: Point) -> bool {
    orient2d(p, q, r) == 0 && r.x >= p.x.min(q.x) && r.x <= p.x.max(q.x) && r.y >= p.y.min(q.y) && r.y <= p.y.max(q.y)
}

/// Exact rational point `(x / den, y / den)` with `den > 0` in lowest terms.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct RatPoint {
    pub x: i128,
    pub y: i128,
    pub den: i128,
}

impl RatPoint {
    pub fn new(x: i128, y: i128, den: i128) -> Self {
        assert!(den != 0);
        let sign = if den < 0 { -1 } else { 1 };
        let (x, y, den) = (x * sign, y * sign, den * sign);
        let g = x.gcd(&y).gcd(&den);
        RatPoint {
            x: x / g,
            y: y / g,
            den: den / g,
        }
    }

    pub fn from_point(p: Point) -> Self {
        RatPoint {
            x: p.x as i128,
            y: p.y as i128,
            den: 1,
        }
    }

    pub fn as_point(&self) -> Option<Point> {
        (self.den == 1).then(|| Point::new(self.x as i64, self.y as i64))
    }

    pub fn to_f64(&self) -> (f64, f64) {
        (self.x as f64 / self.den as f64, self.y as f64 / self.den as f64)
    }
}

impl fmt::Display for RatPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den == 1 {
            write!(f, "({}, {})", self.x, self.y)
        } else {
            write!(f, "({}/{}, {}/{})", self.x, self.den, self.y, self.den)
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Intersection {
    Disjoint,
    /// The segments meet in one point which is an endpoint of at least one of them.
    Touch(Point),
    /// The relative interiors meet in exactly one point.
    Proper(RatPoint),
    /// Collinear with a common sub-segment of positive length.
    Overlap,
}

/// Exact classification of how two closed segments meet.
pub fn intersect(p1: Point, q1: Point, p2: Point, q2: Point) -> Intersection {
    let d1 = orient2d(p2, q2, p1).signum();
    let d2 = orient2d(p2, q2, q1).signum();
    let d3 = orient2d(p1, q1, p2).signum();
    let d4 = orient2d(p1, q1, q2).signum();

    if d1 == 0 && d2 == 0 {
        return collinear_overlap(p1, q1, p2, q2);
    }
    if d1 * d2 < 0 && d3 * d4 < 0 {
        return Intersection::Proper(proper_point(p1, q1, p2, q2));
    }
    for (r, a, b) in [(p1, p2, q2), (q1, p2, q2), (p2, p1, q1), (q2, p1, q1)] {
        if on_segment(a, b, r) {
            return Intersection::Touch(r);
        }
    }
    Intersection::Disjoint
}

fn collinear_overlap(p1: Point, q1: Point, p2: Point, q2: Point) -> Intersection {
    // Project on the dominant axis of the first segment.
    let key = |p: Point| if p1.x != q1.x { p.x } else { p.y };
    let (a0, a1) = minmax(key(p1), key(q1));
    let (b0, b1) = minmax(key(p2), key(q2));
    let lo = a0.max(b0);
    let hi = a1.min(b1);
    match lo.cmp(&hi) {
        Ordering::Less => Intersection::Overlap,
        Ordering::Equal => {
            let shared = [p1, q1]
                .into_iter()
                .find(|&p| key(p) == lo)
                .expect("touching collinear segments share an endpoint key");
            Intersection::Touch(shared)
        }
        Ordering::Greater => Intersection::Disjoint,
    }
}

fn minmax(a: i64, b: i64) -> (i64, i64) {
    if a <= b {
        (a, b)
    } else {
        (b, a)
    }
}

fn proper_point(p1: Point, q1: Point, p2: Point, q2: Point) -> RatPoint {
    let r = direction(p1, q1);
    let s = direction(p2, q2);
    let den = cross(r, s);
    let t_num = cross(direction(p1, p2), s);
    let x = p1.x as i128 * den + t_num * r.0 as i128;
    let y = p1.y as i128 * den + t_num * r.1 as i128;
    RatPoint::new(x, y, den)
}

/// Greatest common divisor of the coordinate differences; a segment contains
/// `lattice_steps + 1` lattice points.
pub fn lattice_steps(p: Point, q: Point) -> u64 {
    let dx = (q.x - p.x).unsigned_abs();
    let dy = (q.y - p.y).unsigned_abs();
    dx.gcd(&dy)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(x: i64, y: i64) -> Point {
        Point::new(x, y)
    }

    #[test]
    fn axis_parallel_cross() {
        let i = intersect(p(0, 0), p(2, 0), p(1, -1), p(1, 1));
        assert_eq!(i, Intersection::Proper(RatPoint::new(1, 0, 1)));
        assert!(is_right_angle(p(0, 0), p(2, 0), p(1, -1), p(1, 1)));
    }

    #[test]
    fn diagonal_cross() {
        let i = intersect(p(0, 0), p(2, 2), p(0, 2), p(2, 0));
        assert_eq!(i, Intersection::Proper(RatPoint::new(1, 1, 1)));
        assert!(is_right_angle(p(0, 0), p(2, 2), p(0, 2), p(2, 0)));
    }

    #[test]
    fn rational_crossing_point() {
        let i = intersect(p(0, 0), p(3, 1), p(1, 0), p(1, 5));
        assert_eq!(i, Intersection::Proper(RatPoint::new(3, 1, 3)));
    }

    #[test]
    fn shared_endpoint_is_touch() {
        assert_eq!(
            intersect(p(0, 0), p(2, 0), p(0, 0), p(0, 3)),
            Intersection::Touch(p(0, 0))
        );
        assert_eq!(
            intersect(p(0, 0), p(2, 0), p(1, 0), p(1, 3)),
            Intersection::Touch(p(1, 0))
        );
    }

    #[test]
    fn collinear_cases() {
        assert_eq!(intersect(p(0, 0), p(4, 0), p(2, 0), p(6, 0)), Intersection::Overlap);
        assert_eq!(
            intersect(p(0, 0), p(4, 0), p(4, 0), p(6, 0)),
            Intersection::Touch(p(4, 0))
        );
        assert_eq!(intersect(p(0, 0), p(1, 1), p(2, 2), p(3, 3)), Intersection::Disjoint);
        assert_eq!(intersect(p(0, 0), p(0, 4), p(0, 1), p(0, 2)), Intersection::Overlap);
    }

    #[test]
    fn lattice_points() {
        assert_eq!(lattice_steps(p(0, 0), p(4, 3)), 1);
        assert_eq!(lattice_steps(p(0, 0), p(4, 4)), 4);
        assert_eq!(lattice_steps(p(0, 0), p(0, 6)), 6);
    }
}
