//! Verification oracles: stretch factors of colorings and general graphs,
//! the t-ellipse property, structural graph checks, exhaustive optimal
//! coloring, and the greedy linear-size sparsifier.
//!
//! The two stretch oracles take independent routes on purpose. For a
//! coloring, the induced complete k-partite graph always realizes its
//! shortest detour through a single intermediate: any longer path
//! `p -> r -> ... -> q` shortcuts to `p -> r -> q` because `r`, colored
//! differently from `p` (and hence from `q`), connects to `q` directly.
//! [`stretch_factor`] exploits that; [`dijkstra_stretch`] does not and works
//! on arbitrary edge sets.

use std::cmp::Ordering;
use std::collections::BinaryHeap;

use crate::geom::{self, Point, EPS_GEO};
use crate::offline::Coloring;
use crate::{Error, Result};

/// Outcome of a stretch computation. `stretch` is at least 1, or
/// `f64::INFINITY` when some same-colored pair has no differently colored
/// point at all (equivalently: the graph is disconnected).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct StretchReport {
    pub stretch: f64,
    pub worst_pair: Option<(usize, usize)>,
    /// Best intermediate of the worst pair, when one exists.
    pub witness: Option<usize>,
}

impl StretchReport {
    fn trivial() -> StretchReport {
        StretchReport {
            stretch: 1.0,
            worst_pair: None,
            witness: None,
        }
    }
}

/// Stretch factor of the complete k-partite graph induced by a coloring:
/// the maximum over same-colored pairs `(p, q)` of the minimum over
/// differently colored `r` of `(|pr| + |rq|) / |pq|`. Differently colored
/// pairs are adjacent and contribute 1.
pub fn stretch_factor(points: &[Point], coloring: &Coloring) -> StretchReport {
    assert_eq!(
        points.len(),
        coloring.len(),
        "coloring must cover all points"
    );
    let n = points.len();
    let colors = coloring.colors();
    let mut report = StretchReport::trivial();
    for i in 0..n {
        for j in i + 1..n {
            if colors[i] != colors[j] {
                continue;
            }
            // Minimum detour via any differently colored point. The scan
            // abandons once the running minimum drops below the current
            // maximum: such a pair can no longer be the worst one.
            let base = geom::dist(points[i], points[j]);
            let mut best = f64::INFINITY;
            let mut best_r = None;
            for r in 0..n {
                if colors[r] == colors[i] {
                    continue;
                }
                let d = ((geom::dist(points[i], points[r])
                    + geom::dist(points[r], points[j]))
                    / base)
                    .max(1.0);
                if d < best {
                    best = d;
                    best_r = Some(r);
                    if best < report.stretch {
                        break;
                    }
                }
            }
            if best > report.stretch {
                report.stretch = best;
                report.worst_pair = Some((i, j));
                report.witness = best_r;
            }
        }
    }
    report
}

/// Like [`stretch_factor`] but value-only, abandoning the whole computation
/// as soon as the stretch provably reaches `cap`. Returns `None` in that
/// case. Used by the brute-force optimal search.
fn stretch_value_below(points: &[Point], colors: &[u32], cap: f64) -> Option<f64> {
    let n = points.len();
    let mut worst: f64 = 1.0;
    if worst >= cap {
        return None;
    }
    for i in 0..n {
        for j in i + 1..n {
            if colors[i] != colors[j] {
                continue;
            }
            let base = geom::dist(points[i], points[j]);
            let mut best = f64::INFINITY;
            for r in 0..n {
                if colors[r] == colors[i] {
                    continue;
                }
                let d = ((geom::dist(points[i], points[r])
                    + geom::dist(points[r], points[j]))
                    / base)
                    .max(1.0);
                if d < best {
                    best = d;
                    if best < worst {
                        break;
                    }
                }
            }
            if best >= cap {
                return None;
            }
            worst = worst.max(best);
        }
    }
    Some(worst)
}

#[derive(Copy, Clone, Debug)]
struct HeapEntry {
    dist: f64,
    vertex: usize,
}

impl PartialEq for HeapEntry {
    fn eq(&self, other: &Self) -> bool {
        self.dist == other.dist && self.vertex == other.vertex
    }
}
impl Eq for HeapEntry {}
impl Ord for HeapEntry {
    fn cmp(&self, other: &Self) -> Ordering {
        // Reversed: BinaryHeap is a max-heap, we want the closest vertex.
        other
            .dist
            .total_cmp(&self.dist)
            .then(other.vertex.cmp(&self.vertex))
    }
}
impl PartialOrd for HeapEntry {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

fn dijkstra(adj: &[Vec<(usize, f64)>], source: usize) -> Vec<f64> {
    let mut dist = vec![f64::INFINITY; adj.len()];
    dist[source] = 0.0;
    let mut heap = BinaryHeap::new();
    heap.push(HeapEntry {
        dist: 0.0,
        vertex: source,
    });
    while let Some(HeapEntry { dist: d, vertex: u }) = heap.pop() {
        if d > dist[u] {
            continue;
        }
        for &(v, w) in &adj[u] {
            let nd = d + w;
            if nd < dist[v] {
                dist[v] = nd;
                heap.push(HeapEntry { dist: nd, vertex: v });
            }
        }
    }
    dist
}

fn adjacency(points: &[Point], edges: &[(usize, usize)]) -> Vec<Vec<(usize, f64)>> {
    let mut adj = vec![Vec::new(); points.len()];
    for &(i, j) in edges {
        let w = geom::dist(points[i], points[j]);
        adj[i].push((j, w));
        adj[j].push((i, w));
    }
    adj
}

/// Stretch factor of an arbitrary geometric graph: the maximum over all
/// pairs of shortest-path length over Euclidean distance; infinite when the
/// graph is disconnected.
pub fn dijkstra_stretch(points: &[Point], edges: &[(usize, usize)]) -> StretchReport {
    let n = points.len();
    if n < 2 {
        return StretchReport::trivial();
    }
    let adj = adjacency(points, edges);
    let mut report = StretchReport::trivial();
    for i in 0..n {
        let dist = dijkstra(&adj, i);
        for j in i + 1..n {
            let ratio = if dist[j].is_finite() {
                (dist[j] / geom::dist(points[i], points[j])).max(1.0)
            } else {
                f64::INFINITY
            };
            if ratio > report.stretch {
                report.stretch = ratio;
                report.worst_pair = Some((i, j));
                report.witness = None;
                if ratio.is_infinite() {
                    return report;
                }
            }
        }
    }
    report
}

/// Does the coloring satisfy the t-ellipse property? True when every
/// same-colored pair `(p, q)` has a differently colored `r` with
/// `|pr| + |rq| <= t |pq|`, with [`EPS_GEO`] slack on the closed inequality.
pub fn has_ellipse_property(points: &[Point], coloring: &Coloring, t: f64) -> bool {
    assert!(t >= 1.0, "t-ellipse property needs t >= 1");
    assert_eq!(points.len(), coloring.len());
    let n = points.len();
    let colors = coloring.colors();
    for i in 0..n {
        for j in i + 1..n {
            if colors[i] != colors[j] {
                continue;
            }
            let base = geom::dist(points[i], points[j]);
            let ok = (0..n).any(|r| {
                colors[r] != colors[i]
                    && geom::dist(points[i], points[r]) + geom::dist(points[r], points[j])
                        <= (t + EPS_GEO) * base
            });
            if !ok {
                return false;
            }
        }
    }
    true
}

/// Is the straight-line drawing of the graph plane? Fails when two edges
/// properly cross or an edge passes through a third vertex. Decisions use
/// exact orientation predicates.
pub fn is_plane_graph(points: &[Point], edges: &[(usize, usize)]) -> bool {
    use crate::geom::Orientation::*;
    let edges: Vec<(usize, usize)> = {
        let mut e: Vec<(usize, usize)> = edges
            .iter()
            .map(|&(i, j)| (i.min(j), i.max(j)))
            .collect();
        e.sort_unstable();
        e.dedup();
        e
    };

    // No vertex strictly inside an open edge.
    for &(i, j) in &edges {
        for (v, &p) in points.iter().enumerate() {
            if v == i || v == j {
                continue;
            }
            if geom::orientation(points[i], points[j], p) == Collinear
                && between_on_line(points[i], points[j], p)
            {
                return false;
            }
        }
    }

    // No proper crossing between edges with four distinct endpoints.
    for (a, &(i, j)) in edges.iter().enumerate() {
        for &(s, t) in &edges[a + 1..] {
            if i == s || i == t || j == s || j == t {
                continue;
            }
            let o1 = geom::orientation_sign(points[i], points[j], points[s]);
            let o2 = geom::orientation_sign(points[i], points[j], points[t]);
            let o3 = geom::orientation_sign(points[s], points[t], points[i]);
            let o4 = geom::orientation_sign(points[s], points[t], points[j]);
            if o1 * o2 < 0 && o3 * o4 < 0 {
                return false;
            }
        }
    }
    true
}

fn between_on_line(u: Point, v: Point, p: Point) -> bool {
    if (v.x - u.x).abs() >= (v.y - u.y).abs() {
        (u.x < p.x && p.x < v.x) || (v.x < p.x && p.x < u.x)
    } else {
        (u.y < p.y && p.y < v.y) || (v.y < p.y && p.y < u.y)
    }
}

/// True when no three vertices are mutually adjacent.
pub fn is_triangle_free(edges: &[(usize, usize)]) -> bool {
    let n = edges
        .iter()
        .map(|&(i, j)| i.max(j) + 1)
        .max()
        .unwrap_or(0);
    let mut adj = vec![Vec::new(); n];
    for &(i, j) in edges {
        adj[i].push(j);
        adj[j].push(i);
    }
    for a in &mut adj {
        a.sort_unstable();
        a.dedup();
    }
    for &(i, j) in edges {
        let (mut x, mut y) = (0, 0);
        let (ai, aj) = (&adj[i], &adj[j]);
        while x < ai.len() && y < aj.len() {
            match ai[x].cmp(&aj[y]) {
                Ordering::Less => x += 1,
                Ordering::Greater => y += 1,
                Ordering::Equal => return false,
            }
        }
    }
    true
}

/// Default enumeration budget for [`optimal_coloring_bruteforce`]: the
/// number of colorings tried after fixing the first point's color.
pub const BRUTE_FORCE_BUDGET: u128 = 100_000_000;

/// Exhaustively minimizes the stretch factor over all k-colorings.
///
/// The first point's color is pinned to 1 (palette permutations do not
/// change the stretch), leaving `k^(n-1)` candidates; exceeding `budget`
/// aborts. Ties keep the first coloring found in odometer order.
pub fn optimal_coloring_bruteforce(
    points: &[Point],
    k: usize,
) -> Result<(Coloring, f64)> {
    optimal_coloring_bruteforce_with_budget(points, k, BRUTE_FORCE_BUDGET)
}

pub fn optimal_coloring_bruteforce_with_budget(
    points: &[Point],
    k: usize,
    budget: u128,
) -> Result<(Coloring, f64)> {
    if k < 1 {
        return Err(Error::BadK { min: 1, got: k });
    }
    let n = points.len();
    if n <= 1 {
        return Ok((Coloring::new(k, vec![1; n])?, 1.0));
    }
    let space = (k as u128)
        .checked_pow((n - 1) as u32)
        .unwrap_or(u128::MAX);
    if space > budget {
        return Err(Error::BudgetExceeded { space, budget });
    }

    let mut colors = vec![1u32; n];
    let mut best_value = f64::INFINITY;
    let mut best_colors = colors.clone();
    loop {
        if let Some(v) = stretch_value_below(points, &colors, best_value) {
            best_value = v;
            best_colors.copy_from_slice(&colors);
        }
        // Odometer over positions 1..n; position 0 stays color 1.
        let mut pos = n - 1;
        loop {
            if pos == 0 {
                return Ok((Coloring::new(k, best_colors)?, best_value));
            }
            if (colors[pos] as usize) < k {
                colors[pos] += 1;
                break;
            }
            colors[pos] = 1;
            pos -= 1;
        }
    }
}

/// A k-chromatic spanner extracted from a coloring: only bichromatic edges,
/// every bichromatic pair served within `(1 + epsilon)` of its Euclidean
/// distance.
#[derive(Debug, Clone)]
pub struct SparseSpanner {
    edges: Vec<(usize, usize)>,
    epsilon: f64,
}

impl SparseSpanner {
    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn epsilon(&self) -> f64 {
        self.epsilon
    }
}

/// Path-greedy sparsification of the complete k-partite graph of a coloring.
///
/// Bichromatic pairs are scanned in non-decreasing length (ties by index
/// pair); a pair becomes an edge exactly when the graph built so far leaves
/// it more than `(1 + epsilon)` times its Euclidean distance apart. The
/// result keeps every bichromatic pair within `(1 + epsilon)` and therefore
/// every pair within `(1 + epsilon) * t`, where `t` is the stretch factor of
/// the coloring. Edge counts grow linearly in practice.
pub fn sparsify_greedy(points: &[Point], coloring: &Coloring, epsilon: f64) -> SparseSpanner {
    assert!(epsilon > 0.0, "epsilon must be positive");
    assert_eq!(points.len(), coloring.len());
    let mut pairs: Vec<(f64, usize, usize)> = coloring
        .bichromatic_pairs()
        .into_iter()
        .map(|(i, j)| (geom::dist(points[i], points[j]), i, j))
        .collect();
    pairs.sort_by(|a, b| a.0.total_cmp(&b.0).then(a.1.cmp(&b.1)).then(a.2.cmp(&b.2)));

    let mut adj: Vec<Vec<(usize, f64)>> = vec![Vec::new(); points.len()];
    let mut edges = Vec::new();
    for &(len, i, j) in &pairs {
        let threshold = (1.0 + epsilon) * len;
        if !reachable_within(&adj, i, j, threshold) {
            adj[i].push((j, len));
            adj[j].push((i, len));
            edges.push((i, j));
        }
    }
    SparseSpanner { edges, epsilon }
}

/// Dijkstra limited to the ball of radius `threshold` around the source.
fn reachable_within(adj: &[Vec<(usize, f64)>], source: usize, target: usize, threshold: f64) -> bool {
    let mut dist = vec![f64::INFINITY; adj.len()];
    dist[source] = 0.0;
    let mut heap = BinaryHeap::new();
    heap.push(HeapEntry {
        dist: 0.0,
        vertex: source,
    });
    while let Some(HeapEntry { dist: d, vertex: u }) = heap.pop() {
        if u == target {
            return true;
        }
        if d > dist[u] {
            continue;
        }
        for &(v, w) in &adj[u] {
            let nd = d + w;
            if nd <= threshold && nd < dist[v] {
                dist[v] = nd;
                heap.push(HeapEntry { dist: nd, vertex: v });
            }
        }
    }
    false
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pt(x: f64, y: f64) -> Point {
        Point::new(x, y)
    }

    fn coloring(k: usize, colors: &[u32]) -> Coloring {
        Coloring::new(k, colors.to_vec()).unwrap()
    }

    #[test]
    fn stretch_alternating_square() {
        let pts = vec![pt(0.0, 0.0), pt(1.0, 0.0), pt(1.0, 1.0), pt(0.0, 1.0)];
        let r = stretch_factor(&pts, &coloring(2, &[1, 2, 1, 2]));
        assert!((r.stretch - 2.0f64.sqrt()).abs() < 1e-12);
        assert_eq!(r.worst_pair, Some((0, 2)));
    }

    #[test]
    fn stretch_rainbow_is_one() {
        let pts = vec![pt(0.0, 0.0), pt(2.0, 1.0), pt(-1.0, 3.0)];
        let r = stretch_factor(&pts, &coloring(3, &[1, 2, 3]));
        assert_eq!(r.stretch, 1.0);
        assert_eq!(r.worst_pair, None);
    }

    #[test]
    fn stretch_monochromatic_is_infinite() {
        let pts = vec![pt(0.0, 0.0), pt(1.0, 0.0)];
        let r = stretch_factor(&pts, &coloring(2, &[1, 1]));
        assert!(r.stretch.is_infinite());
        assert_eq!(r.worst_pair, Some((0, 1)));
        assert_eq!(r.witness, None);
    }

    #[test]
    fn dijkstra_collinear_path() {
        let pts = vec![pt(0.0, 0.0), pt(1.0, 0.0), pt(2.0, 0.0)];
        let r = dijkstra_stretch(&pts, &[(0, 1), (1, 2)]);
        assert_eq!(r.stretch, 1.0);
    }

    #[test]
    fn dijkstra_disconnected() {
        let pts = vec![pt(0.0, 0.0), pt(1.0, 0.0)];
        let r = dijkstra_stretch(&pts, &[]);
        assert!(r.stretch.is_infinite());
    }

    #[test]
    fn oracles_agree_on_kpartite_graph() {
        let pts = vec![
            pt(0.0, 0.0),
            pt(1.0, 0.2),
            pt(0.4, 0.9),
            pt(1.3, 1.1),
            pt(0.2, 1.7),
        ];
        let c = coloring(2, &[1, 2, 1, 2, 1]);
        let a = stretch_factor(&pts, &c);
        let b = dijkstra_stretch(&pts, &c.bichromatic_pairs());
        assert!((a.stretch - b.stretch).abs() < 1e-12);
    }

    #[test]
    fn ellipse_property_brackets_stretch() {
        let pts = vec![pt(0.0, 0.0), pt(1.0, 0.0), pt(1.0, 1.0), pt(0.0, 1.0)];
        let c = coloring(2, &[1, 2, 1, 2]);
        let s = stretch_factor(&pts, &c).stretch;
        assert!(has_ellipse_property(&pts, &c, s));
        assert!(!has_ellipse_property(&pts, &c, s - 0.01));
        let rainbow = coloring(4, &[1, 2, 3, 4]);
        assert!(has_ellipse_property(&pts, &rainbow, 1.0));
    }

    #[test]
    fn plane_graph_checks() {
        let pts = vec![pt(0.0, 0.0), pt(1.0, 0.0), pt(1.0, 1.0), pt(0.0, 1.0)];
        let square = [(0, 1), (1, 2), (2, 3), (3, 0)];
        assert!(is_plane_graph(&pts, &square));
        assert!(is_plane_graph(&pts, &[(0, 1), (1, 2), (2, 3), (3, 0), (0, 2)]));
        assert!(!is_plane_graph(
            &pts,
            &[(0, 1), (1, 2), (2, 3), (3, 0), (0, 2), (1, 3)]
        ));
        // Edge through a vertex: (0,0)-(2,0) passes through (1,0).
        let line = vec![pt(0.0, 0.0), pt(1.0, 0.0), pt(2.0, 0.0)];
        assert!(!is_plane_graph(&line, &[(0, 2)]));
        // Collinear overlap with interleaved endpoints.
        let overlap = vec![pt(0.0, 0.0), pt(2.0, 0.0), pt(1.0, 0.0), pt(3.0, 0.0)];
        assert!(!is_plane_graph(&overlap, &[(0, 1), (2, 3)]));
    }

    #[test]
    fn triangle_free_checks() {
        assert!(is_triangle_free(&[(0, 1)]));
        assert!(!is_triangle_free(&[(0, 1), (1, 2), (0, 2)]));
        assert!(is_triangle_free(&[(0, 1), (1, 2), (2, 3), (3, 0)]));
    }

    #[test]
    fn brute_force_equilateral() {
        let pts = vec![pt(0.0, 0.0), pt(1.0, 0.0), pt(0.5, 3.0f64.sqrt() / 2.0)];
        let (_, v3) = optimal_coloring_bruteforce(&pts, 3).unwrap();
        assert!((v3 - 1.0).abs() < 1e-12);
        let (_, v2) = optimal_coloring_bruteforce(&pts, 2).unwrap();
        assert!((v2 - 2.0).abs() < 1e-9);
    }

    #[test]
    fn brute_force_budget() {
        let pts: Vec<Point> = (0..40).map(|i| pt(i as f64, (i * i) as f64)).collect();
        assert!(matches!(
            optimal_coloring_bruteforce(&pts, 4),
            Err(Error::BudgetExceeded { .. })
        ));
    }

    #[test]
    fn sparsifier_two_points() {
        let pts = vec![pt(0.0, 0.0), pt(1.0, 1.0)];
        let s = sparsify_greedy(&pts, &coloring(2, &[1, 2]), 0.5);
        assert_eq!(s.edges(), &[(0, 1)]);
    }

    #[test]
    fn sparsifier_collinear_rainbow() {
        let pts = vec![pt(0.0, 0.0), pt(1.0, 0.0), pt(2.0, 0.0)];
        let s = sparsify_greedy(&pts, &coloring(3, &[1, 2, 3]), 0.1);
        assert_eq!(s.edges(), &[(0, 1), (1, 2)]);
    }

    #[test]
    fn sparsifier_never_keeps_monochromatic_edges() {
        let pts: Vec<Point> = (0..15)
            .map(|i| {
                let a = i as f64 * 0.7;
                pt(a.cos() * (1.0 + 0.1 * i as f64), a.sin() * 2.0)
            })
            .collect();
        let colors: Vec<u32> = (0..15).map(|i| (i % 3 + 1) as u32).collect();
        let c = coloring(3, &colors);
        let s = sparsify_greedy(&pts, &c, 0.25);
        for &(i, j) in s.edges() {
            assert_ne!(c.color(i), c.color(j));
        }
        // Contract: every bichromatic pair served within (1 + eps).
        let r = dijkstra_stretch(&pts, s.edges());
        let t = stretch_factor(&pts, &c).stretch;
        assert!(r.stretch <= (1.0 + 0.25) * t + EPS_GEO);
    }
}
