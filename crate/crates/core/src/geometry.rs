//! Exact 2D predicates over rationals.
//!
//! Every predicate here is exact: no tolerance and no floating point. The
//! same generic kernel backs the public rational API and the integer fast
//! path that the verifier uses after clearing denominators.

use std::cmp::Ordering;
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};

use crate::error::{Error, Result};

/// Exact arbitrary-precision fraction, always kept in canonical form.
pub type Rational = BigRational;

/// Shorthand for an integer-valued [`Rational`].
pub fn rat(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// Shorthand for `num / den`, normalized.
pub fn ratio(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Point2 {
    pub x: Rational,
    pub y: Rational,
}

impl Point2 {
    pub fn new(x: Rational, y: Rational) -> Self {
        Point2 { x, y }
    }

    pub fn from_ints(x: i64, y: i64) -> Self {
        Point2::new(rat(x), rat(y))
    }
}

impl fmt::Display for Point2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.x, self.y)
    }
}

/// A closed straight segment with distinct endpoints.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Segment2 {
    a: Point2,
    b: Point2,
}

impl Segment2 {
    pub fn new(a: Point2, b: Point2) -> Result<Self> {
        if a == b {
            return Err(Error::DegenerateInput(format!("segment endpoints coincide at {a}")));
        }
        Ok(Segment2 { a, b })
    }

    pub fn a(&self) -> &Point2 {
        &self.a
    }

    pub fn b(&self) -> &Point2 {
        &self.b
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Orientation {
    CounterClockwise,
    Clockwise,
    Collinear,
}

impl Orientation {
    pub fn reversed(self) -> Self {
        match self {
            Orientation::CounterClockwise => Orientation::Clockwise,
            Orientation::Clockwise => Orientation::CounterClockwise,
            Orientation::Collinear => Orientation::Collinear,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum SegmentIntersection {
    Disjoint,
    SharedEndpointOnly,
    Crossing,
}

pub fn orientation(p: &Point2, q: &Point2, r: &Point2) -> Orientation {
    kernel::orient((&p.x, &p.y), (&q.x, &q.y), (&r.x, &r.y))
}

/// Classifies how two closed segments meet. Collinear overlap counts as a
/// crossing.
pub fn segments_cross(s1: &Segment2, s2: &Segment2) -> SegmentIntersection {
    kernel::segments_cross((&s1.a.x, &s1.a.y), (&s1.b.x, &s1.b.y), (&s2.a.x, &s2.a.y), (&s2.b.x, &s2.b.y))
}

pub fn point_on_segment_interior(p: &Point2, s: &Segment2) -> bool {
    kernel::on_open_segment((&p.x, &p.y), (&s.a.x, &s.a.y), (&s.b.x, &s.b.y))
}

/// Counterclockwise cyclic order of `points` when they are in strictly
/// convex position, rotated to start at index 0. `None` when some point is
/// not a hull vertex (including duplicates and collinear hull points).
pub fn convex_cyclic_order(points: &[Point2]) -> Result<Option<Vec<usize>>> {
    if points.len() < 3 {
        return Err(Error::DegenerateInput(format!("convex position needs at least 3 points, got {}", points.len())));
    }
    let hull = strict_hull(points);
    if hull.len() != points.len() {
        return Ok(None);
    }
    let start = hull.iter().position(|&i| i == 0).expect("all points on hull");
    Ok(Some(hull[start..].iter().chain(&hull[..start]).copied().collect()))
}

/// Indices of the strict convex hull vertices in counterclockwise order
/// (monotone chain; collinear boundary points are dropped).
pub fn strict_hull(points: &[Point2]) -> Vec<usize> {
    let mut idx: Vec<usize> = (0..points.len()).collect();
    idx.sort_by(|&a, &b| points[a].cmp(&points[b]));
    idx.dedup_by(|a, b| points[*a] == points[*b]);
    if idx.len() < 3 {
        return idx;
    }
    let mut hull: Vec<usize> = Vec::with_capacity(2 * idx.len());
    for pass in 0..2 {
        let base = hull.len();
        let iter: Box<dyn Iterator<Item = &usize>> =
            if pass == 0 { Box::new(idx.iter()) } else { Box::new(idx.iter().rev()) };
        for &i in iter {
            while hull.len() >= base + 2
                && orientation(&points[hull[hull.len() - 2]], &points[hull[hull.len() - 1]], &points[i])
                    != Orientation::CounterClockwise
            {
                hull.pop();
            }
            hull.push(i);
        }
        hull.pop();
    }
    hull
}

/// The predicates, generic over any exact ordered ring (`i128`, `BigInt`,
/// `Rational`).
pub(crate) mod kernel {
    use super::*;

    pub(crate) trait Exact: Clone + Ord + Signed {}
    impl<T: Clone + Ord + Signed> Exact for T {}

    pub(crate) type P<'a, T> = (&'a T, &'a T);

    fn cross<T: Exact>(p: P<T>, q: P<T>, r: P<T>) -> T {
        let (qx, qy) = (q.0.clone() - p.0.clone(), q.1.clone() - p.1.clone());
        let (rx, ry) = (r.0.clone() - p.0.clone(), r.1.clone() - p.1.clone());
        qx * ry - qy * rx
    }

    pub(crate) fn orient<T: Exact>(p: P<T>, q: P<T>, r: P<T>) -> Orientation {
        let c = cross(p, q, r);
        match c.cmp(&T::zero()) {
            Ordering::Greater => Orientation::CounterClockwise,
            Ordering::Less => Orientation::Clockwise,
            Ordering::Equal => Orientation::Collinear,
        }
    }

    fn lex<T: Exact>(a: P<T>, b: P<T>) -> Ordering {
        a.0.cmp(b.0).then_with(|| a.1.cmp(b.1))
    }

    fn same<T: Exact>(a: P<T>, b: P<T>) -> bool {
        a.0 == b.0 && a.1 == b.1
    }

    pub(crate) fn on_open_segment<T: Exact>(p: P<T>, a: P<T>, b: P<T>) -> bool {
        if orient(a, b, p) != Orientation::Collinear {
            return false;
        }
        let (lo, hi) = if lex(a, b) == Ordering::Less { (a, b) } else { (b, a) };
        lex(lo, p) == Ordering::Less && lex(p, hi) == Ordering::Less
    }

    pub(crate) fn segments_cross<T: Exact>(a: P<T>, b: P<T>, c: P<T>, d: P<T>) -> SegmentIntersection {
        let o1 = orient(a, b, c);
        let o2 = orient(a, b, d);
        if o1 == Orientation::Collinear && o2 == Orientation::Collinear {
            // Both segments on one line: compare as lexicographic intervals.
            let (lo1, hi1) = if lex(a, b) == Ordering::Less { (a, b) } else { (b, a) };
            let (lo2, hi2) = if lex(c, d) == Ordering::Less { (c, d) } else { (d, c) };
            let lo = if lex(lo1, lo2) == Ordering::Less { lo2 } else { lo1 };
            let hi = if lex(hi1, hi2) == Ordering::Less { hi1 } else { hi2 };
            return match lex(lo, hi) {
                Ordering::Greater => SegmentIntersection::Disjoint,
                Ordering::Equal => SegmentIntersection::SharedEndpointOnly,
                Ordering::Less => SegmentIntersection::Crossing,
            };
        }
        if o1 != Orientation::Collinear && o1 == o2 {
            return SegmentIntersection::Disjoint;
        }
        let o3 = orient(c, d, a);
        let o4 = orient(c, d, b);
        if o3 != Orientation::Collinear && o3 == o4 {
            return SegmentIntersection::Disjoint;
        }
        // The supporting lines are distinct, so the segments meet in exactly
        // one point; it is a common endpoint iff the endpoint sets meet.
        if same(a, c) || same(a, d) || same(b, c) || same(b, d) {
            SegmentIntersection::SharedEndpointOnly
        } else {
            SegmentIntersection::Crossing
        }
    }

    /// Whether the closed axis-aligned boxes of `ab` and `cd` intersect.
    pub(crate) fn boxes_meet<T: Exact>(a: P<T>, b: P<T>, c: P<T>, d: P<T>) -> bool {
        let (ax0, ax1) = minmax(a.0, b.0);
        let (cx0, cx1) = minmax(c.0, d.0);
        if ax1 < cx0 || cx1 < ax0 {
            return false;
        }
        let (ay0, ay1) = minmax(a.1, b.1);
        let (cy0, cy1) = minmax(c.1, d.1);
        !(ay1 < cy0 || cy1 < ay0)
    }

    fn minmax<'a, T: Ord>(a: &'a T, b: &'a T) -> (&'a T, &'a T) {
        if a <= b {
            (a, b)
        } else {
            (b, a)
        }
    }
}

/// Sign of a rational as -1, 0, 1.
pub fn sign(r: &Rational) -> i8 {
    if r.is_zero() {
        0
    } else if r.is_positive() {
        1
    } else {
        -1
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(x: i64, y: i64) -> Point2 {
        Point2::from_ints(x, y)
    }

    fn seg(a: (i64, i64), b: (i64, i64)) -> Segment2 {
        Segment2::new(p(a.0, a.1), p(b.0, b.1)).unwrap()
    }

    #[test]
    fn orientation_examples() {
        assert_eq!(orientation(&p(0, 0), &p(1, 0), &p(0, 1)), Orientation::CounterClockwise);
        assert_eq!(orientation(&p(0, 0), &p(1, 1), &p(2, 2)), Orientation::Collinear);
        assert_eq!(orientation(&p(0, 0), &p(0, 1), &p(1, 0)), Orientation::Clockwise);
    }

    #[test]
    fn crossing_examples() {
        use SegmentIntersection::*;
        assert_eq!(segments_cross(&seg((0, 0), (2, 2)), &seg((0, 2), (2, 0))), Crossing);
        assert_eq!(segments_cross(&seg((0, 0), (1, 0)), &seg((1, 0), (2, 1))), SharedEndpointOnly);
        assert_eq!(segments_cross(&seg((0, 0), (1, 0)), &seg((0, 1), (1, 1))), Disjoint);
    }

    #[test]
    fn collinear_cases() {
        use SegmentIntersection::*;
        // overlap
        assert_eq!(segments_cross(&seg((0, 0), (2, 0)), &seg((1, 0), (3, 0))), Crossing);
        // containment sharing one endpoint still overlaps
        assert_eq!(segments_cross(&seg((0, 0), (2, 0)), &seg((0, 0), (1, 0))), Crossing);
        // touching end to end
        assert_eq!(segments_cross(&seg((0, 0), (1, 0)), &seg((1, 0), (3, 0))), SharedEndpointOnly);
        assert_eq!(segments_cross(&seg((0, 0), (1, 0)), &seg((2, 0), (3, 0))), Disjoint);
        // T-junction: endpoint of one inside the other
        assert_eq!(segments_cross(&seg((0, 0), (2, 0)), &seg((1, 0), (1, 5))), Crossing);
        // collinear with the supporting line but outside the segment
        assert_eq!(segments_cross(&seg((0, 0), (1, 0)), &seg((2, 0), (3, 1))), Disjoint);
    }

    #[test]
    fn interior_point_examples() {
        let s = seg((0, 0), (2, 2));
        assert!(point_on_segment_interior(&p(1, 1), &s));
        assert!(!point_on_segment_interior(&p(0, 0), &s));
        assert!(!point_on_segment_interior(&p(1, 0), &s));
        assert!(!point_on_segment_interior(&p(3, 3), &s));
    }

    #[test]
    fn degenerate_segment_rejected() {
        assert!(Segment2::new(p(1, 1), p(1, 1)).is_err());
    }

    #[test]
    fn convex_order_examples() {
        let square = [p(0, 0), p(1, 0), p(1, 1), p(0, 1)];
        assert_eq!(convex_cyclic_order(&square).unwrap(), Some(vec![0, 1, 2, 3]));

        // (1, 1/2) lies inside the triangle of the other three
        let pts = [p(0, 0), p(2, 0), Point2::new(rat(1), ratio(1, 2)), p(1, 2)];
        assert_eq!(convex_cyclic_order(&pts).unwrap(), None);
        for (a, b) in [(0, 1), (1, 3), (3, 0)] {
            assert_eq!(orientation(&pts[a], &pts[b], &pts[2]), Orientation::CounterClockwise);
        }

        let tri = [p(0, 0), p(1, 0), p(0, 1)];
        assert_eq!(convex_cyclic_order(&tri).unwrap(), Some(vec![0, 1, 2]));
    }

    #[test]
    fn convex_order_rejects_collinear_and_duplicates() {
        let line = [p(0, 0), p(1, 1), p(2, 2)];
        assert_eq!(convex_cyclic_order(&line).unwrap(), None);
        let dup = [p(0, 0), p(1, 0), p(0, 1), p(1, 0)];
        assert_eq!(convex_cyclic_order(&dup).unwrap(), None);
        let mid_edge = [p(0, 0), p(2, 0), p(2, 2), p(1, 0)];
        assert_eq!(convex_cyclic_order(&mid_edge).unwrap(), None);
        assert!(matches!(convex_cyclic_order(&[p(0, 0), p(1, 1)]), Err(Error::DegenerateInput(_))));
    }

    #[test]
    fn clockwise_input_is_reported_counterclockwise() {
        let pts = [p(0, 0), p(0, 1), p(1, 1), p(1, 0)];
        assert_eq!(convex_cyclic_order(&pts).unwrap(), Some(vec![0, 3, 2, 1]));
    }
}
