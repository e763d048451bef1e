use thiserror::Error;

/// Errors shared by every module in the crate.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("need at least {needed} points, got {got}")]
    TooFewPoints { needed: usize, got: usize },
    #[error("points {first} and {second} coincide")]
    DuplicatePoints { first: usize, second: usize },
    #[error("all points are collinear")]
    AllCollinear,
    #[error("circle base points are collinear")]
    CollinearBase,
    #[error("detour endpoints coincide")]
    CoincidentEndpoints,
    #[error("ray endpoint coincides with the apex")]
    DegenerateRay,
    #[error("k must be at least {min}, got {got}")]
    BadK { min: usize, got: usize },
    #[error("n must be odd and at least 3, got {got}")]
    BadN { got: usize },
    #[error("point coincides with an already inserted point")]
    DuplicatePoint,
    #[error("exhaustive coloring search failed; this signals a bug in the edge filter")]
    ColoringSearchFailed,
    #[error("search space of {space} colorings exceeds the budget of {budget}")]
    BudgetExceeded { space: u128, budget: u128 },
    #[error("color {got} is outside 1..={k}")]
    InvalidColor { got: u32, k: usize },
}

pub type Result<T> = std::result::Result<T, Error>;
