//! Offline coloring algorithms. Each one k-colors a point set so that the
//! complete k-partite graph induced by the coloring is a spanner with a
//! guaranteed stretch factor:
//!
//! * [`color_mst_2`]    - 2 colors, stretch at most 3
//! * [`color_ellipse_3`] - 3 colors, stretch at most 2
//! * [`color_delaunay_4`] - 4 colors, stretch at most sqrt(2)
//! * [`color_cones_k`]  - k colors, stretch at most `1 + 2 sin(pi / (2k - 2))`
//!
//! All tie-breaks are documented and deterministic: identical inputs yield
//! identical colorings.

use crate::geom::{self, Point};
use crate::proximity;
use crate::{Error, Result};

/// An assignment of one color in `1..=k` to every point.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Coloring {
    k: usize,
    colors: Vec<u32>,
}

impl Coloring {
    pub fn new(k: usize, colors: Vec<u32>) -> Result<Coloring> {
        if k < 1 {
            return Err(Error::BadK { min: 1, got: k });
        }
        for &c in &colors {
            if c < 1 || c as usize > k {
                return Err(Error::InvalidColor { got: c, k });
            }
        }
        Ok(Coloring { k, colors })
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn colors(&self) -> &[u32] {
        &self.colors
    }

    pub fn color(&self, i: usize) -> u32 {
        self.colors[i]
    }

    pub fn len(&self) -> usize {
        self.colors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.colors.is_empty()
    }

    /// Index pairs `(i, j)`, `i < j`, whose endpoints have different colors:
    /// the edge set of the induced complete k-partite graph.
    pub fn bichromatic_pairs(&self) -> Vec<(usize, usize)> {
        let n = self.colors.len();
        let mut pairs = Vec::new();
        for i in 0..n {
            for j in i + 1..n {
                if self.colors[i] != self.colors[j] {
                    pairs.push((i, j));
                }
            }
        }
        pairs
    }
}

/// Smallest positive color not present in `used`.
pub(crate) fn mex(used: &[u32]) -> u32 {
    let mut c = 1;
    while used.contains(&c) {
        c += 1;
    }
    c
}

/// 2-coloring by bipartitioning the Euclidean minimum spanning tree (BFS
/// layering from the point with index 0). Stretch factor at most 3.
pub fn color_mst_2(points: &[Point]) -> Result<Coloring> {
    if points.is_empty() {
        return Coloring::new(2, Vec::new());
    }
    let tree = proximity::emst(points)?;
    let n = points.len();
    let mut adj = vec![Vec::new(); n];
    for &(i, j) in tree.edges() {
        adj[i].push(j);
        adj[j].push(i);
    }
    let mut colors = vec![0u32; n];
    colors[0] = 1;
    let mut queue = std::collections::VecDeque::from([0usize]);
    while let Some(u) = queue.pop_front() {
        for &v in &adj[u] {
            if colors[v] == 0 {
                colors[v] = 3 - colors[u];
                queue.push_back(v);
            }
        }
    }
    Coloring::new(2, colors)
}

/// The graph grown by [`color_ellipse_3`]: triangle-free, plane, and
/// 3-colorable. Edges are index pairs in insertion order.
#[derive(Debug, Clone)]
pub struct EllipseGraph {
    edges: Vec<(usize, usize)>,
}

impl EllipseGraph {
    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }
}

/// 3-coloring with stretch factor at most 2.
///
/// Processes all point pairs in non-decreasing length (ties by index pair)
/// and inserts a pair as an edge unless some existing edge already has both
/// endpoints inside the closed 2-ellipse of the pair. The resulting graph is
/// properly 3-colored by exact search.
pub fn color_ellipse_3(points: &[Point]) -> Result<(Coloring, EllipseGraph)> {
    geom::check_distinct(points)?;
    let n = points.len();
    if n <= 1 {
        let colors = vec![1; n];
        return Ok((
            Coloring::new(3, colors)?,
            EllipseGraph { edges: Vec::new() },
        ));
    }

    let mut pairs = Vec::with_capacity(n * (n - 1) / 2);
    for i in 0..n {
        for j in i + 1..n {
            pairs.push((geom::dist(points[i], points[j]), i, j));
        }
    }
    pairs.sort_by(|a, b| a.0.total_cmp(&b.0).then(a.1.cmp(&b.1)).then(a.2.cmp(&b.2)));

    let mut edges: Vec<(usize, usize)> = Vec::new();
    for &(len, i, j) in &pairs {
        let bound = 2.0 * len;
        let blocked = edges.iter().any(|&(u, v)| {
            let inside = |w: usize| {
                geom::dist(points[i], points[w]) + geom::dist(points[w], points[j]) <= bound
            };
            inside(u) && inside(v)
        });
        if !blocked {
            edges.push((i, j));
        }
    }

    let coloring =
        proper_color_exact(n, &edges, 3).ok_or(Error::ColoringSearchFailed)?;
    Ok((coloring, EllipseGraph { edges }))
}

/// 4-coloring of the Delaunay triangulation, found by exact search;
/// stretch factor at most sqrt(2).
pub fn color_delaunay_4(points: &[Point]) -> Result<Coloring> {
    let tri = proximity::delaunay(points)?;
    proper_color_exact(points.len(), tri.edges(), 4).ok_or(Error::ColoringSearchFailed)
}

/// k-coloring by the downward-cone rule; stretch factor at most
/// `1 + 2 sin(pi / (2k - 2))`.
///
/// Points are processed in non-decreasing y (ties: x, then index). Each
/// point takes the nearest already-processed point in each of its `k - 1`
/// downward cones and receives the smallest color unused by those
/// neighbors. Nearest-in-cone ties go to the earliest processed point.
pub fn color_cones_k(points: &[Point], k: usize) -> Result<Coloring> {
    if k < 2 {
        return Err(Error::BadK { min: 2, got: k });
    }
    geom::check_distinct(points)?;
    let n = points.len();

    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&i, &j| {
        points[i]
            .y
            .total_cmp(&points[j].y)
            .then(points[i].x.total_cmp(&points[j].x))
            .then(i.cmp(&j))
    });

    let mut colors = vec![0u32; n];
    for (pos, &pi) in order.iter().enumerate() {
        let p = points[pi];
        let mut nearest: Vec<Option<(f64, usize)>> = vec![None; k - 1];
        for &qi in &order[..pos] {
            let q = points[qi];
            let cone = geom::cone_index(p, q, k)
                .expect("already-processed points are never strictly above");
            let d = geom::dist(p, q);
            match nearest[cone] {
                Some((best, _)) if best <= d => {}
                _ => nearest[cone] = Some((d, qi)),
            }
        }
        let used: Vec<u32> = nearest
            .iter()
            .flatten()
            .map(|&(_, qi)| colors[qi])
            .collect();
        colors[pi] = mex(&used);
    }
    Coloring::new(k, colors)
}

/// Exact proper k-coloring search (backtracking over vertices in dynamic
/// saturation order). Returns `None` only when an exhaustive search proves
/// no proper k-coloring exists.
pub fn proper_color_exact(
    n: usize,
    edges: &[(usize, usize)],
    k: usize,
) -> Option<Coloring> {
    let mut adj = vec![Vec::new(); n];
    for &(u, v) in edges {
        debug_assert!(u != v && u < n && v < n, "simple graph expected");
        adj[u].push(v);
        adj[v].push(u);
    }
    let mut colors = vec![0u32; n];
    if search(&adj, &mut colors, n, k as u32, 0) {
        Coloring::new(k, colors).ok()
    } else {
        None
    }
}

fn search(adj: &[Vec<usize>], colors: &mut [u32], remaining: usize, k: u32, max_used: u32) -> bool {
    if remaining == 0 {
        return true;
    }
    // DSATUR vertex choice: most distinct neighbor colors, then highest
    // degree, then smallest index.
    let mut pick = usize::MAX;
    let mut pick_key = (0usize, 0usize);
    for v in 0..colors.len() {
        if colors[v] != 0 {
            continue;
        }
        let mut seen = 0u64;
        for &u in &adj[v] {
            if colors[u] != 0 {
                seen |= 1 << colors[u];
            }
        }
        let key = (seen.count_ones() as usize, adj[v].len());
        if pick == usize::MAX || key > pick_key {
            pick = v;
            pick_key = key;
        }
    }

    let mut forbidden = 0u64;
    for &u in &adj[pick] {
        if colors[u] != 0 {
            forbidden |= 1 << colors[u];
        }
    }
    // Colors beyond the first unused one are symmetric; trying them would
    // only permute the palette.
    let limit = k.min(max_used + 1);
    for c in 1..=limit {
        if forbidden & (1 << c) != 0 {
            continue;
        }
        colors[pick] = c;
        if search(adj, colors, remaining - 1, k, max_used.max(c)) {
            return true;
        }
        colors[pick] = 0;
    }
    false
}
