//! Proximity structures: Delaunay triangulation and Euclidean minimum
//! spanning tree.
//!
//! The triangulation is built by incremental insertion (Bowyer-Watson with
//! ghost triangles for the hull) on exact predicates. Cocircular degeneracies
//! are resolved by a symbolic perturbation that raises the lifted paraboloid
//! coordinate of point `i` by an infinitesimal of order `i`, so lower-indexed
//! points are perturbed more. Concretely: when the in-circle determinant
//! vanishes, the sign is taken from the first nonzero cofactor in point-index
//! order, which makes every local decision consistent with one global
//! perturbed point set.

use std::collections::HashSet;

use crate::geom::{self, Orientation, Point};
use crate::{Error, Result};

/// A Delaunay triangulation over an external point buffer. Triangles are
/// counter-clockwise, rotated so the smallest vertex index comes first, and
/// sorted; edges are the deduplicated triangle sides.
#[derive(Debug, Clone)]
pub struct Triangulation {
    triangles: Vec<[usize; 3]>,
    edges: Vec<(usize, usize)>,
}

impl Triangulation {
    pub fn triangles(&self) -> &[[usize; 3]] {
        &self.triangles
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }
}

/// A Euclidean minimum spanning tree; edges are normalized `(i, j)` with
/// `i < j` and sorted.
#[derive(Debug, Clone)]
pub struct SpanningTree {
    edges: Vec<(usize, usize)>,
}

impl SpanningTree {
    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn weight(&self, points: &[Point]) -> f64 {
        self.edges
            .iter()
            .map(|&(i, j)| geom::dist(points[i], points[j]))
            .sum()
    }
}

const GHOST: usize = usize::MAX;

/// In-circle test of point `d` against the counter-clockwise triangle
/// `(a, b, c)`, perturbed so no four points are ever cocircular. Index order
/// breaks the tie: the determinant expansion over the perturbations has one
/// orientation cofactor per point, and the first nonzero one in index order
/// decides.
pub(crate) fn perturbed_in_circle(
    points: &[Point],
    a: usize,
    b: usize,
    c: usize,
    d: usize,
) -> bool {
    let (pa, pb, pc, pd) = (points[a], points[b], points[c], points[d]);
    let det = geom::incircle_raw(pa, pb, pc, pd);
    if det != 0.0 {
        return det > 0.0;
    }
    let mut terms = [
        (a, geom::orientation_sign(pb, pc, pd)),
        (b, -geom::orientation_sign(pa, pc, pd)),
        (c, geom::orientation_sign(pa, pb, pd)),
        (d, -geom::orientation_sign(pa, pb, pc)),
    ];
    terms.sort_by_key(|&(idx, _)| idx);
    for &(_, sign) in &terms {
        if sign != 0 {
            return sign > 0;
        }
    }
    unreachable!("triangle base is never collinear");
}

/// Is `p` strictly inside the open segment `(u, v)`? Requires the three
/// points to be collinear; compares along the dominant axis, which is exact.
fn strictly_between(u: Point, v: Point, p: Point) -> bool {
    if (v.x - u.x).abs() >= (v.y - u.y).abs() {
        (u.x < p.x && p.x < v.x) || (v.x < p.x && p.x < u.x)
    } else {
        (u.y < p.y && p.y < v.y) || (v.y < p.y && p.y < u.y)
    }
}

struct Builder<'a> {
    points: &'a [Point],
    /// Real triangles are CCW triples; ghost triangles carry GHOST as their
    /// last vertex and their first directed edge runs along the hull with
    /// the exterior to its left.
    tris: Vec<[usize; 3]>,
}

impl<'a> Builder<'a> {
    fn conflicts(&self, tri: [usize; 3], p: usize) -> bool {
        if tri[2] == GHOST {
            let (u, v) = (tri[0], tri[1]);
            match geom::orientation(self.points[u], self.points[v], self.points[p]) {
                Orientation::Ccw => true,
                Orientation::Cw => false,
                Orientation::Collinear => {
                    strictly_between(self.points[u], self.points[v], self.points[p])
                }
            }
        } else {
            perturbed_in_circle(self.points, tri[0], tri[1], tri[2], p)
        }
    }

    fn insert(&mut self, p: usize) {
        let mut cavity = Vec::new();
        let mut kept = Vec::new();
        for &tri in &self.tris {
            if self.conflicts(tri, p) {
                cavity.push(tri);
            } else {
                kept.push(tri);
            }
        }
        assert!(!cavity.is_empty(), "inserted point conflicts with nothing");

        let mut cavity_edges: HashSet<(usize, usize)> = HashSet::new();
        for tri in &cavity {
            for e in 0..3 {
                cavity_edges.insert((tri[e], tri[(e + 1) % 3]));
            }
        }

        self.tris = kept;
        for tri in &cavity {
            for e in 0..3 {
                let (u, v) = (tri[e], tri[(e + 1) % 3]);
                if !cavity_edges.contains(&(v, u)) {
                    self.push_triangle(u, v, p);
                }
            }
        }
    }

    fn push_triangle(&mut self, u: usize, v: usize, w: usize) {
        let tri = if u == GHOST {
            [v, w, GHOST]
        } else if v == GHOST {
            [w, u, GHOST]
        } else if w == GHOST {
            [u, v, GHOST]
        } else {
            debug_assert_eq!(
                geom::orientation(self.points[u], self.points[v], self.points[w]),
                Orientation::Ccw,
                "cavity fan produced a non-CCW triangle"
            );
            [u, v, w]
        };
        self.tris.push(tri);
    }
}

/// Delaunay triangulation of at least three pairwise distinct, not all
/// collinear points.
pub fn delaunay(points: &[Point]) -> Result<Triangulation> {
    if points.len() < 3 {
        return Err(Error::TooFewPoints {
            needed: 3,
            got: points.len(),
        });
    }
    geom::check_distinct(points)?;

    let apex = (2..points.len())
        .find(|&j| geom::orientation(points[0], points[1], points[j]) != Orientation::Collinear)
        .ok_or(Error::AllCollinear)?;

    let first = match geom::orientation(points[0], points[1], points[apex]) {
        Orientation::Ccw => [0, 1, apex],
        _ => [1, 0, apex],
    };
    let mut builder = Builder {
        points,
        tris: vec![
            first,
            [first[1], first[0], GHOST],
            [first[2], first[1], GHOST],
            [first[0], first[2], GHOST],
        ],
    };
    for p in 2..points.len() {
        if p != apex {
            builder.insert(p);
        }
    }

    let mut triangles: Vec<[usize; 3]> = builder
        .tris
        .into_iter()
        .filter(|t| t[2] != GHOST)
        .map(|t| {
            // Rotate the smallest index to the front; rotation keeps CCW.
            let m = (0..3).min_by_key(|&i| t[i]).unwrap();
            [t[m], t[(m + 1) % 3], t[(m + 2) % 3]]
        })
        .collect();
    triangles.sort_unstable();

    let mut edges: Vec<(usize, usize)> = triangles
        .iter()
        .flat_map(|t| {
            [(t[0], t[1]), (t[1], t[2]), (t[0], t[2])]
                .map(|(i, j)| (i.min(j), i.max(j)))
        })
        .collect();
    edges.sort_unstable();
    edges.dedup();

    Ok(Triangulation { triangles, edges })
}

/// Euclidean minimum spanning tree by Prim over the complete graph.
/// Distance ties are broken towards the lexicographically smallest index
/// pair, so the edge set is deterministic.
pub fn emst(points: &[Point]) -> Result<SpanningTree> {
    if points.is_empty() {
        return Err(Error::TooFewPoints { needed: 1, got: 0 });
    }
    geom::check_distinct(points)?;

    let n = points.len();
    let mut in_tree = vec![false; n];
    let mut key = vec![f64::INFINITY; n];
    let mut parent = vec![usize::MAX; n];
    in_tree[0] = true;
    for v in 1..n {
        key[v] = geom::dist(points[0], points[v]);
        parent[v] = 0;
    }

    let norm = |a: usize, b: usize| (a.min(b), a.max(b));
    let mut edges = Vec::with_capacity(n.saturating_sub(1));
    for _ in 1..n {
        let mut best: Option<usize> = None;
        for v in 0..n {
            if in_tree[v] {
                continue;
            }
            best = match best {
                None => Some(v),
                Some(b) => {
                    let better = key[v] < key[b]
                        || (key[v] == key[b] && norm(parent[v], v) < norm(parent[b], b));
                    Some(if better { v } else { b })
                }
            };
        }
        let u = best.expect("tree spans all points");
        in_tree[u] = true;
        edges.push(norm(parent[u], u));
        for v in 0..n {
            if in_tree[v] {
                continue;
            }
            let d = geom::dist(points[u], points[v]);
            if d < key[v] || (d == key[v] && norm(u, v) < norm(parent[v], v)) {
                key[v] = d;
                parent[v] = u;
            }
        }
    }
    edges.sort_unstable();
    Ok(SpanningTree { edges })
}
