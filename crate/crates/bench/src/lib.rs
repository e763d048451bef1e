//! Shared fixtures for the benchmark targets.

use chromospan::geom::Point;
use rand::{RngExt, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// Deterministic uniform points in the unit square.
pub fn unit_square_points(seed: u64, n: usize) -> Vec<Point> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut pts: Vec<Point> = Vec::with_capacity(n);
    while pts.len() < n {
        let p = Point::new(rng.random(), rng.random());
        if !pts.contains(&p) {
            pts.push(p);
        }
    }
    pts
}
