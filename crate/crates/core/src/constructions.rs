//! Generators for the point sets that force lower bounds on the achievable
//! stretch factor, offline and online, each paired with its analytic bound.
//!
//! Offline instances use unit side length, online instances unit
//! circumradius, both centered at the origin; stretch is scale invariant so
//! the normalization is free and keeps fixtures reproducible.

use std::f64::consts::PI;

use crate::analysis::{self, StretchReport};
use crate::geom::Point;
use crate::offline::Coloring;
use crate::{Error, Result};

/// A generated hard instance: the points (an ordered arrival sequence when
/// `online` is set), the number of colors it targets, and the stretch bound
/// it forces.
#[derive(Debug, Clone)]
pub struct LowerBoundInstance {
    pub points: Vec<Point>,
    pub k: usize,
    pub analytic_bound: f64,
    pub bound_formula: String,
    pub online: bool,
}

fn require_odd(n: usize) -> Result<()> {
    if n < 3 || n.is_multiple_of(2) {
        return Err(Error::BadN { got: n });
    }
    Ok(())
}

/// Vertices of a regular n-gon with the given circumradius, centered at the
/// origin, counter-clockwise from the positive x-axis.
fn regular_ngon(n: usize, circumradius: f64) -> Vec<Point> {
    (0..n)
        .map(|i| {
            let ang = 2.0 * PI * i as f64 / n as f64;
            Point::new(circumradius * ang.cos(), circumradius * ang.sin())
        })
        .collect()
}

fn unit_side_radius(n: usize) -> f64 {
    0.5 / (PI / n as f64).sin()
}

/// Regular n-gon (n odd) with unit side: every 2-coloring repeats a color on
/// adjacent vertices, forcing stretch `1 + 2 sin((n-2) pi / (2n))`, which
/// tends to 3.
pub fn gen_lb_k2(n: usize) -> Result<LowerBoundInstance> {
    require_odd(n)?;
    Ok(LowerBoundInstance {
        points: regular_ngon(n, unit_side_radius(n)),
        k: 2,
        analytic_bound: 1.0 + 2.0 * ((n as f64 - 2.0) * PI / (2.0 * n as f64)).sin(),
        bound_formula: "1 + 2 sin((n-2)pi/(2n))".to_string(),
        online: false,
    })
}

/// Regular n-gon (n odd, unit side) plus an outward equilateral apex on each
/// side: 2n points whose 3-colorings are forced to at least
/// `min(2, 1 / sin((n+6) pi / (6n)))`, which tends to 2.
pub fn gen_lb_k3(n: usize) -> Result<LowerBoundInstance> {
    require_odd(n)?;
    let inner = regular_ngon(n, unit_side_radius(n));
    let mut points = inner.clone();
    for i in 0..n {
        let p = inner[i];
        let q = inner[(i + 1) % n];
        let mx = (p.x + q.x) / 2.0;
        let my = (p.y + q.y) / 2.0;
        let norm = (mx * mx + my * my).sqrt();
        let h = 3.0f64.sqrt() / 2.0;
        points.push(Point::new(mx + h * mx / norm, my + h * my / norm));
    }
    let apex_bound = 1.0 / ((n as f64 + 6.0) * PI / (6.0 * n as f64)).sin();
    Ok(LowerBoundInstance {
        points,
        k: 3,
        analytic_bound: apex_bound.min(2.0),
        bound_formula: "min(2, 1/sin((n+6)pi/(6n)))".to_string(),
        online: false,
    })
}

/// Two concentric, radially aligned regular n-gons (n odd); the inner one
/// has unit side and the radial gap equals that side. Every 4-coloring is
/// forced to at least `1 / sin((n+2) pi / (4n))`, which tends to sqrt(2).
pub fn gen_lb_k4(n: usize) -> Result<LowerBoundInstance> {
    require_odd(n)?;
    let r = unit_side_radius(n);
    let inner = regular_ngon(n, r);
    let mut points = inner.clone();
    let scale = (r + 1.0) / r;
    points.extend(
        inner
            .iter()
            .map(|p| Point::new(p.x * scale, p.y * scale)),
    );
    Ok(LowerBoundInstance {
        points,
        k: 4,
        analytic_bound: 1.0 / ((n as f64 + 2.0) * PI / (4.0 * n as f64)).sin(),
        bound_formula: "1/sin((n+2)pi/(4n))".to_string(),
        online: false,
    })
}

/// Regular (k+1)-gon with unit side, for k > 4: some color repeats, and the
/// best detour between any two vertices costs `1 / cos(pi / (k+1))`.
pub fn gen_lb_kgon(k: usize) -> Result<LowerBoundInstance> {
    if k <= 4 {
        return Err(Error::BadK { min: 5, got: k });
    }
    let n = k + 1;
    Ok(LowerBoundInstance {
        points: regular_ngon(n, unit_side_radius(n)),
        k,
        analytic_bound: 1.0 / (PI / (k as f64 + 1.0)).cos(),
        bound_formula: "1/cos(pi/(k+1))".to_string(),
        online: false,
    })
}

/// Online adversary sequence for k >= 4.
///
/// For k >= 5: the k vertices of a regular k-gon (unit circumradius)
/// followed by its center; any online k-coloring ends with stretch at least
/// `1 / cos(pi / k)`. For k = 4: a unit square followed by its center; the
/// bound `1 + sqrt(2)` applies conditionally on the square being
/// rainbow-colored.
pub fn gen_online_lb(k: usize) -> Result<LowerBoundInstance> {
    if k < 4 {
        return Err(Error::BadK { min: 4, got: k });
    }
    if k == 4 {
        let points = vec![
            Point::new(0.0, 0.0),
            Point::new(1.0, 0.0),
            Point::new(1.0, 1.0),
            Point::new(0.0, 1.0),
            Point::new(0.5, 0.5),
        ];
        return Ok(LowerBoundInstance {
            points,
            k,
            analytic_bound: 1.0 + 2.0f64.sqrt(),
            bound_formula: "1+sqrt(2) (conditional on a rainbow square)".to_string(),
            online: true,
        });
    }
    let mut points = regular_ngon(k, 1.0);
    points.push(Point::new(0.0, 0.0));
    Ok(LowerBoundInstance {
        points,
        k,
        analytic_bound: 1.0 / (PI / k as f64).cos(),
        bound_formula: "1/cos(pi/k)".to_string(),
        online: true,
    })
}

/// Best-effort online probe for k = 3: an equilateral triangle followed by
/// its center. The adaptive adversary that forces `1 + sqrt(3)` is not
/// reproducible from published coordinates, so this instance carries no
/// guaranteed bound; report the achieved stretch for inspection only.
pub fn online_probe_k3() -> LowerBoundInstance {
    let mut points: Vec<Point> = (0..3)
        .map(|i| {
            let ang = PI / 2.0 + 2.0 * PI * i as f64 / 3.0;
            Point::new(ang.cos(), ang.sin())
        })
        .collect();
    points.push(Point::new(0.0, 0.0));
    LowerBoundInstance {
        points,
        k: 3,
        analytic_bound: 1.0,
        bound_formula: "probe only (no guaranteed bound)".to_string(),
        online: true,
    }
}

/// Feeds the online adversary sequence for `k` to an arbitrary online
/// coloring algorithm and reports the stretch of the resulting coloring.
/// The callback returns the color it irrevocably assigns to each point.
pub fn run_adversary<F>(k: usize, mut algorithm: F) -> Result<StretchReport>
where
    F: FnMut(Point) -> Result<u32>,
{
    let instance = gen_online_lb(k)?;
    let mut colors = Vec::with_capacity(instance.points.len());
    for &p in &instance.points {
        colors.push(algorithm(p)?);
    }
    let coloring = Coloring::new(k, colors)?;
    Ok(analysis::stretch_factor(&instance.points, &coloring))
}
