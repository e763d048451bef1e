//! Online k-coloring: points arrive one at a time and every color is final
//! the moment it is assigned. The induced complete k-partite graph stays a
//! spanner with stretch factor at most `1 + 2 sin(pi / k)` after every
//! insertion.

use std::f64::consts::PI;

use crate::analysis::{self, StretchReport};
use crate::geom::{self, Point, EPS_GEO};
use crate::offline::{mex, Coloring};
use crate::{Error, Result};

/// Sequential online colorer. Insertion order is remembered; colors never
/// change once assigned.
#[derive(Debug, Clone)]
pub struct OnlineColorer {
    k: usize,
    points: Vec<Point>,
    colors: Vec<u32>,
}

impl OnlineColorer {
    pub fn new(k: usize) -> Result<OnlineColorer> {
        if k < 2 {
            return Err(Error::BadK { min: 2, got: k });
        }
        Ok(OnlineColorer {
            k,
            points: Vec::new(),
            colors: Vec::new(),
        })
    }

    pub fn k(&self) -> usize {
        self.k
    }

    /// Points in arrival order.
    pub fn points(&self) -> &[Point] {
        &self.points
    }

    /// Colors in arrival order.
    pub fn colors(&self) -> &[u32] {
        &self.colors
    }

    pub fn coloring(&self) -> Coloring {
        Coloring::new(self.k, self.colors.clone()).expect("colors stay in range")
    }

    /// Colors the next arriving point and returns its color.
    ///
    /// Neighbor selection: repeatedly take the nearest not-yet-pruned earlier
    /// point (ties to the earliest arrival), then prune every remaining point
    /// within angle `2 pi / k` of it as seen from the new point. At most
    /// `k - 1` neighbors survive this loop, so a free color always exists.
    pub fn insert(&mut self, p: Point) -> Result<u32> {
        if self.points.contains(&p) {
            return Err(Error::DuplicatePoint);
        }
        let prune_angle = 2.0 * PI / self.k as f64 + EPS_GEO;

        let mut candidates: Vec<usize> = (0..self.points.len()).collect();
        let mut selected: Vec<usize> = Vec::new();
        while !candidates.is_empty() {
            let mut nearest = candidates[0];
            let mut best = geom::dist(p, self.points[nearest]);
            for &q in &candidates[1..] {
                let d = geom::dist(p, self.points[q]);
                if d < best {
                    best = d;
                    nearest = q;
                }
            }
            selected.push(nearest);
            assert!(
                selected.len() < self.k,
                "selected more than k - 1 neighbors; the pruning angle is broken"
            );
            let r = self.points[nearest];
            candidates.retain(|&q| {
                q != nearest
                    && geom::angle_at(p, self.points[q], r).expect("rays are non-degenerate")
                        > prune_angle
            });
        }

        let used: Vec<u32> = selected.iter().map(|&q| self.colors[q]).collect();
        let color = mex(&used);
        debug_assert!(color as usize <= self.k);
        self.points.push(p);
        self.colors.push(color);
        Ok(color)
    }

    /// Stretch report of the coloring accumulated so far.
    pub fn finalize_stretch(&self) -> StretchReport {
        analysis::stretch_factor(&self.points, &self.coloring())
    }
}

/// Worst-case stretch guarantee of the online algorithm for k colors.
pub fn online_bound(k: usize) -> f64 {
    1.0 + 2.0 * (PI / k as f64).sin()
}

/// Worst-case stretch guarantee of the offline cone algorithm for k colors.
pub fn cones_bound(k: usize) -> f64 {
    1.0 + 2.0 * (PI / (2 * (k - 1)) as f64).sin()
}
