//! Colorings of planar point sets whose induced complete k-partite graphs
//! are spanners with guaranteed stretch factors.
//!
//! A k-coloring of a point set satisfies the *t-ellipse property* when every
//! same-colored pair `(p, q)` has a differently colored point `r` with
//! `|pr| + |rq| <= t |pq|`; the complete k-partite graph of such a coloring
//! is then a t-spanner. This crate provides:
//!
//! * [`offline`] - four offline coloring algorithms with stretch guarantees
//!   3, 2, sqrt(2), and `1 + 2 sin(pi / (2k - 2))`;
//! * [`online`] - an online colorer (irrevocable colors) with guarantee
//!   `1 + 2 sin(pi / k)`;
//! * [`proximity`] - the Delaunay triangulation and Euclidean MST the
//!   offline algorithms build on;
//! * [`analysis`] - independent stretch oracles, structural checks,
//!   exhaustive optimal coloring, and a greedy linear-size sparsifier;
//! * [`constructions`] - generators for the point sets that force the
//!   matching lower bounds, plus an online adversary harness;
//! * [`geom`] - exact predicates and the metric primitives everything else
//!   uses.

pub mod analysis;
pub mod constructions;
mod error;
pub mod geom;
pub mod offline;
pub mod online;
pub mod proximity;

pub use analysis::{SparseSpanner, StretchReport};
pub use constructions::LowerBoundInstance;
pub use error::{Error, Result};
pub use geom::{Point, EPS_GEO};
pub use offline::Coloring;
pub use online::OnlineColorer;
