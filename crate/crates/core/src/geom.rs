//! Geometric primitives underneath every coloring algorithm: robust
//! orientation and in-circle predicates, Euclidean distances, detour ratios,
//! ray angles, and the downward cone partition.
//!
//! Topological decisions (orientation, in-circle) are sign-exact via adaptive
//! precision arithmetic. Metric quantities (distances, detours, angles) are
//! plain `f64`; comparisons against stretch bounds carry the [`EPS_GEO`]
//! slack.

use std::f64::consts::PI;

use crate::{Error, Result};

/// Slack for metric comparisons (`<=` / `>=` against stretch bounds and
/// angles). Never applied to the exact predicates.
pub const EPS_GEO: f64 = 1e-9;

/// A point in the plane. Coordinates must be finite.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Point {
    pub x: f64,
    pub y: f64,
}

impl Point {
    pub fn new(x: f64, y: f64) -> Point {
        assert!(
            x.is_finite() && y.is_finite(),
            "point coordinates must be finite"
        );
        Point { x, y }
    }
}

/// Euclidean distance between two points.
pub fn dist(p: Point, q: Point) -> f64 {
    let dx = p.x - q.x;
    let dy = p.y - q.y;
    (dx * dx + dy * dy).sqrt()
}

/// Sign of the signed area of the triangle `(p, q, r)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Orientation {
    Ccw,
    Cw,
    Collinear,
}

/// Exact orientation of the ordered triple `(p, q, r)`.
pub fn orientation(p: Point, q: Point, r: Point) -> Orientation {
    let v = robust::orient2d(coord(p), coord(q), coord(r));
    if v > 0.0 {
        Orientation::Ccw
    } else if v < 0.0 {
        Orientation::Cw
    } else {
        Orientation::Collinear
    }
}

pub(crate) fn orientation_sign(p: Point, q: Point, r: Point) -> i32 {
    match orientation(p, q, r) {
        Orientation::Ccw => 1,
        Orientation::Cw => -1,
        Orientation::Collinear => 0,
    }
}

fn coord(p: Point) -> robust::Coord<f64> {
    robust::Coord { x: p.x, y: p.y }
}

/// Position of a query point relative to a circle through three base points.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CirclePosition {
    Inside,
    On,
    Outside,
}

/// Exact position of `d` relative to the circle through `a`, `b`, `c`.
///
/// The base triple may be given in either orientation; collinear bases have
/// no circle and yield [`Error::CollinearBase`].
pub fn in_circle(a: Point, b: Point, c: Point, d: Point) -> Result<CirclePosition> {
    let sign = match orientation(a, b, c) {
        Orientation::Collinear => return Err(Error::CollinearBase),
        Orientation::Ccw => incircle_raw(a, b, c, d),
        Orientation::Cw => -incircle_raw(a, b, c, d),
    };
    Ok(if sign > 0.0 {
        CirclePosition::Inside
    } else if sign < 0.0 {
        CirclePosition::Outside
    } else {
        CirclePosition::On
    })
}

/// Sign-exact in-circle determinant; positive means `d` is inside the circle
/// through the counter-clockwise triple `(a, b, c)`.
pub(crate) fn incircle_raw(a: Point, b: Point, c: Point, d: Point) -> f64 {
    robust::incircle(coord(a), coord(b), coord(c), coord(d))
}

/// Detour ratio `(|pr| + |rq|) / |pq|` of travelling from `p` to `q` via `r`.
///
/// Always at least 1, with equality exactly when `r` lies on the segment
/// `pq`. Requires `p != q`.
pub fn detour(p: Point, r: Point, q: Point) -> Result<f64> {
    if p == q {
        return Err(Error::CoincidentEndpoints);
    }
    Ok(((dist(p, r) + dist(r, q)) / dist(p, q)).max(1.0))
}

/// Unsigned angle in `[0, pi]` between the rays `apex -> u` and `apex -> v`.
pub fn angle_at(apex: Point, u: Point, v: Point) -> Result<f64> {
    if u == apex || v == apex {
        return Err(Error::DegenerateRay);
    }
    let ax = u.x - apex.x;
    let ay = u.y - apex.y;
    let bx = v.x - apex.x;
    let by = v.y - apex.y;
    let cross = ax * by - ay * bx;
    let dot = ax * bx + ay * by;
    Ok(cross.abs().atan2(dot))
}

/// A half-open cone: directions `[start_angle, start_angle + width)` measured
/// counter-clockwise from the positive x-axis, with `width` in `(0, pi]`.
#[derive(Debug, Clone, Copy)]
pub struct Cone {
    pub apex: Point,
    pub start_angle: f64,
    pub width: f64,
}

impl Cone {
    pub fn new(apex: Point, start_angle: f64, width: f64) -> Cone {
        assert!(
            (0.0..2.0 * PI).contains(&start_angle),
            "start angle must lie in [0, 2*pi)"
        );
        assert!(width > 0.0 && width <= PI, "width must lie in (0, pi]");
        Cone {
            apex,
            start_angle,
            width,
        }
    }

    /// Membership is half-open: the start ray belongs to the cone, the end
    /// ray does not. The apex itself belongs to no cone.
    pub fn contains(&self, q: Point) -> bool {
        let dx = q.x - self.apex.x;
        let dy = q.y - self.apex.y;
        if dx == 0.0 && dy == 0.0 {
            return false;
        }
        let mut dir = dy.atan2(dx);
        if dir < 0.0 {
            dir += 2.0 * PI;
        }
        let mut offset = dir - self.start_angle;
        if offset < 0.0 {
            offset += 2.0 * PI;
        }
        offset < self.width
    }
}

/// The `k - 1` cones of width `pi / (k - 1)` that sweep the lower half-plane
/// below `apex` from the leftward horizontal ray towards the rightward one.
pub fn downward_cones(apex: Point, k: usize) -> Vec<Cone> {
    assert!(k >= 2, "need at least two colors");
    let theta = PI / (k - 1) as f64;
    (0..k - 1)
        .map(|j| Cone::new(apex, PI + j as f64 * theta, theta))
        .collect()
}

/// Index of the downward cone of `apex` containing `q`, for the partition of
/// the closed lower half-plane into `k - 1` half-open cones.
///
/// Cone 0 starts at the leftward horizontal ray; the last cone additionally
/// owns the rightward horizontal ray. Points at the apex's own y-coordinate
/// count as below. Returns `None` when `q` is strictly above the apex or
/// equals it.
pub fn cone_index(apex: Point, q: Point, k: usize) -> Option<usize> {
    assert!(k >= 2, "need at least two colors");
    let dx = q.x - apex.x;
    let dy = q.y - apex.y;
    if dy > 0.0 || (dx == 0.0 && dy == 0.0) {
        return None;
    }
    let cones = k - 1;
    if dy == 0.0 {
        return Some(if dx < 0.0 { 0 } else { cones - 1 });
    }
    // dy < 0: atan2 lands in (-pi, 0); shift so the sweep starts at the
    // leftward ray with position 0 and ends at the rightward ray with pi.
    let sweep = dy.atan2(dx) + PI;
    let theta = PI / cones as f64;
    let idx = (sweep / theta).floor() as usize;
    Some(idx.min(cones - 1))
}

/// Checks that no two points coincide; reports the first offending pair.
pub fn check_distinct(points: &[Point]) -> Result<()> {
    let mut order: Vec<usize> = (0..points.len()).collect();
    order.sort_by(|&i, &j| {
        points[i]
            .x
            .total_cmp(&points[j].x)
            .then(points[i].y.total_cmp(&points[j].y))
    });
    for w in order.windows(2) {
        if points[w[0]] == points[w[1]] {
            let (first, second) = (w[0].min(w[1]), w[0].max(w[1]));
            return Err(Error::DuplicatePoints { first, second });
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pt(x: f64, y: f64) -> Point {
        Point::new(x, y)
    }

    #[test]
    fn orientation_basic() {
        assert_eq!(
            orientation(pt(0.0, 0.0), pt(1.0, 0.0), pt(0.0, 1.0)),
            Orientation::Ccw
        );
        assert_eq!(
            orientation(pt(0.0, 0.0), pt(1.0, 1.0), pt(2.0, 2.0)),
            Orientation::Collinear
        );
        assert_eq!(
            orientation(pt(0.0, 0.0), pt(0.0, 1.0), pt(1.0, 0.0)),
            Orientation::Cw
        );
    }

    #[test]
    fn in_circle_unit_circle() {
        let a = pt(1.0, 0.0);
        let b = pt(0.0, 1.0);
        let c = pt(-1.0, 0.0);
        assert_eq!(in_circle(a, b, c, pt(0.0, 0.0)), Ok(CirclePosition::Inside));
        assert_eq!(in_circle(a, b, c, pt(0.0, -1.0)), Ok(CirclePosition::On));
        assert_eq!(
            in_circle(a, b, c, pt(2.0, 0.0)),
            Ok(CirclePosition::Outside)
        );
        // Flipping the base orientation must not flip the answer.
        assert_eq!(in_circle(c, b, a, pt(0.0, 0.0)), Ok(CirclePosition::Inside));
    }

    #[test]
    fn in_circle_collinear_base() {
        assert_eq!(
            in_circle(pt(0.0, 0.0), pt(1.0, 0.0), pt(2.0, 0.0), pt(0.0, 1.0)),
            Err(Error::CollinearBase)
        );
    }

    #[test]
    fn detour_examples() {
        assert_eq!(detour(pt(0.0, 0.0), pt(1.0, 0.0), pt(2.0, 0.0)), Ok(1.0));
        let apex = pt(0.5, 3.0f64.sqrt() / 2.0);
        let d = detour(pt(0.0, 0.0), apex, pt(1.0, 0.0)).unwrap();
        assert!((d - 2.0).abs() < 1e-12);
        assert_eq!(
            detour(pt(0.0, 0.0), pt(1.0, 0.0), pt(0.0, 0.0)),
            Err(Error::CoincidentEndpoints)
        );
    }

    #[test]
    fn detour_hexagon_consecutive() {
        // Three consecutive vertices of a regular hexagon: the ratio equals
        // 1 / cos(pi / 6).
        let r = 1.0;
        let v: Vec<Point> = (0..3)
            .map(|i| {
                let ang = 2.0 * PI * i as f64 / 6.0;
                pt(r * ang.cos(), r * ang.sin())
            })
            .collect();
        let d = detour(v[0], v[1], v[2]).unwrap();
        assert!((d - 1.0 / (PI / 6.0).cos()).abs() < 1e-12);
        assert!((d - 1.154_700_5).abs() < 1e-6);
    }

    #[test]
    fn angle_examples() {
        let o = pt(0.0, 0.0);
        let a = angle_at(o, pt(1.0, 0.0), pt(0.0, 1.0)).unwrap();
        assert!((a - PI / 2.0).abs() < 1e-15);
        assert_eq!(angle_at(o, pt(1.0, 0.0), pt(1.0, 0.0)), Ok(0.0));
        let near_pi = angle_at(o, pt(1.0, 0.0), pt(-1.0, 1e-9)).unwrap();
        assert!((near_pi - PI).abs() < 1e-8);
        assert_eq!(
            angle_at(o, pt(0.0, 0.0), pt(1.0, 0.0)),
            Err(Error::DegenerateRay)
        );
    }

    #[test]
    fn cone_index_examples() {
        let o = pt(0.0, 0.0);
        // Straight down with two cones: the boundary ray starts cone 1.
        assert_eq!(cone_index(o, pt(0.0, -1.0), 3), Some(1));
        // Rightward horizontal ray belongs to the last cone.
        assert_eq!(cone_index(o, pt(1.0, 0.0), 5), Some(3));
        // Leftward horizontal ray belongs to cone 0.
        assert_eq!(cone_index(o, pt(-1.0, 0.0), 5), Some(0));
        // Strictly above: no cone.
        assert_eq!(cone_index(o, pt(0.0, 1.0), 4), None);
        assert_eq!(cone_index(o, pt(0.0, 0.0), 4), None);
    }

    #[test]
    fn cone_membership_matches_index() {
        let apex = pt(0.25, -0.5);
        for k in 2..8 {
            let cones = downward_cones(apex, k);
            for step in 0..200 {
                let ang = -PI * (step as f64 + 0.5) / 200.0;
                let q = pt(apex.x + ang.cos(), apex.y + ang.sin());
                let idx = cone_index(apex, q, k).expect("strictly below");
                let members: Vec<usize> = (0..cones.len())
                    .filter(|&j| cones[j].contains(q))
                    .collect();
                assert_eq!(members, vec![idx]);
            }
        }
    }

    #[test]
    fn duplicate_detection() {
        let pts = vec![pt(0.0, 0.0), pt(1.0, 0.0), pt(0.0, 0.0)];
        assert_eq!(
            check_distinct(&pts),
            Err(Error::DuplicatePoints { first: 0, second: 2 })
        );
        assert!(check_distinct(&[pt(0.0, 0.0), pt(-0.0, 1.0)]).is_ok());
        // Negative zero coincides with positive zero.
        assert!(check_distinct(&[pt(0.0, 0.0), pt(-0.0, 0.0)]).is_err());
    }
}
