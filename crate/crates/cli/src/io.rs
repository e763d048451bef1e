//! Point-set and coloring files.
//!
//! Point format: one point per line as two decimal literals `x y`, `#`
//! starts a comment, blank lines are ignored. Writing uses the shortest
//! round-tripping representation, so write-then-read is the identity.
//! Colorings are CSV with an `index,color` header.

use std::fs;
use std::path::Path;

use chromospan::geom::{self, Point};
use thiserror::Error;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error(transparent)]
    Core(#[from] chromospan::Error),
    #[error(transparent)]
    Io(#[from] std::io::Error),
    #[error("{0}")]
    Config(String),
}

pub fn parse_points(text: &str) -> Result<Vec<Point>, CliError> {
    let mut points = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let content = raw.split('#').next().unwrap_or("").trim();
        if content.is_empty() {
            continue;
        }
        let fields: Vec<&str> = content.split_whitespace().collect();
        if fields.len() != 2 {
            return Err(CliError::Parse {
                line,
                msg: format!("expected `x y`, got {} fields", fields.len()),
            });
        }
        let mut coords = [0.0f64; 2];
        for (slot, field) in coords.iter_mut().zip(&fields) {
            *slot = field.parse().map_err(|_| CliError::Parse {
                line,
                msg: format!("`{field}` is not a number"),
            })?;
            if !slot.is_finite() {
                return Err(CliError::Parse {
                    line,
                    msg: format!("`{field}` is not finite"),
                });
            }
        }
        points.push(Point::new(coords[0], coords[1]));
    }
    geom::check_distinct(&points)?;
    Ok(points)
}

pub fn read_points(path: &Path) -> Result<Vec<Point>, CliError> {
    parse_points(&fs::read_to_string(path)?)
}

pub fn points_to_string(points: &[Point]) -> String {
    let mut out = String::new();
    for p in points {
        out.push_str(&format!("{} {}\n", p.x, p.y));
    }
    out
}

pub fn write_points(points: &[Point], path: &Path) -> Result<(), CliError> {
    fs::write(path, points_to_string(points))?;
    Ok(())
}

pub fn coloring_to_csv(colors: &[u32]) -> String {
    let mut out = String::from("index,color\n");
    for (i, c) in colors.iter().enumerate() {
        out.push_str(&format!("{i},{c}\n"));
    }
    out
}

/// Reads an `index,color` CSV back into a color-per-point vector. Indices
/// must cover `0..n` exactly (any order).
pub fn parse_coloring(text: &str) -> Result<Vec<u32>, CliError> {
    let mut entries: Vec<(usize, u32)> = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let content = raw.trim();
        if content.is_empty() || content == "index,color" {
            continue;
        }
        let mut it = content.split(',');
        let (a, b) = (it.next().unwrap_or(""), it.next().unwrap_or(""));
        if it.next().is_some() {
            return Err(CliError::Parse {
                line,
                msg: "expected `index,color`".to_string(),
            });
        }
        let i: usize = a.trim().parse().map_err(|_| CliError::Parse {
            line,
            msg: format!("`{a}` is not an index"),
        })?;
        let c: u32 = b.trim().parse().map_err(|_| CliError::Parse {
            line,
            msg: format!("`{b}` is not a color"),
        })?;
        entries.push((i, c));
    }
    entries.sort_unstable();
    for (expect, &(i, _)) in entries.iter().enumerate() {
        if i != expect {
            return Err(CliError::Config(format!(
                "coloring indices must cover 0..{} exactly; saw {i}",
                entries.len()
            )));
        }
    }
    Ok(entries.into_iter().map(|(_, c)| c).collect())
}

pub fn read_coloring(path: &Path) -> Result<Vec<u32>, CliError> {
    parse_coloring(&fs::read_to_string(path)?)
}

/// Edge list CSV with Euclidean lengths, for sparsifier output.
pub fn edges_to_csv(points: &[Point], edges: &[(usize, usize)]) -> String {
    let mut out = String::from("u,v,length\n");
    for &(u, v) in edges {
        out.push_str(&format!("{u},{v},{}\n", geom::dist(points[u], points[v])));
    }
    out
}
