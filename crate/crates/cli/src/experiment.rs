//! Seeded experiment sweeps: mean stretch of the offline and online
//! algorithms over many random point sets, per number of colors.
//!
//! Determinism contract: trial `i` draws everything it needs from a
//! ChaCha8 stream derived from `(seed, i)`, trials aggregate in index order,
//! and the CSV rendering is fixed-precision, so a repeated seed reproduces
//! the table byte for byte regardless of thread count.

use chromospan::analysis;
use chromospan::geom::Point;
use chromospan::offline;
use chromospan::online::OnlineColorer;
use rand::seq::SliceRandom;
use rand::{RngExt, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::io::CliError;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Mode {
    /// The general offline cone algorithm, any k >= 2.
    Offline,
    /// The online algorithm over a random arrival order, any k >= 2.
    Online,
    /// The specialized offline algorithms; only k = 2, 3, 4 exist.
    OfflineSpecialized,
}

impl Mode {
    pub fn label(self) -> &'static str {
        match self {
            Mode::Offline => "offline",
            Mode::Online => "online",
            Mode::OfflineSpecialized => "offline_specialized",
        }
    }
}

#[derive(Debug, Clone)]
pub struct ExperimentConfig {
    pub trials: usize,
    pub n: usize,
    pub ks: Vec<usize>,
    pub modes: Vec<Mode>,
    pub seed: u64,
}

impl ExperimentConfig {
    fn validate(&self) -> Result<(), CliError> {
        if self.trials < 1 {
            return Err(CliError::Config("trials must be at least 1".into()));
        }
        if self.n < 2 {
            return Err(CliError::Config("n must be at least 2".into()));
        }
        if self.ks.is_empty() {
            return Err(CliError::Config("k range is empty".into()));
        }
        for &k in &self.ks {
            if k < 2 {
                return Err(CliError::Config(format!("k must be at least 2, got {k}")));
            }
            if self.modes.contains(&Mode::OfflineSpecialized) && !(2..=4).contains(&k) {
                return Err(CliError::Config(format!(
                    "offline_specialized only exists for k = 2, 3, 4; got {k}"
                )));
            }
        }
        if self.modes.is_empty() {
            return Err(CliError::Config("no modes selected".into()));
        }
        Ok(())
    }
}

#[derive(Debug, Clone, Copy)]
pub struct ResultRow {
    pub k: usize,
    pub mode: Mode,
    pub mean: f64,
    pub std: f64,
    pub min: f64,
    pub max: f64,
    pub trials: usize,
}

#[derive(Debug, Clone)]
pub struct ResultTable {
    pub rows: Vec<ResultRow>,
    /// Random points that collided with an earlier point and were redrawn.
    pub duplicate_redraws: u64,
}

impl ResultTable {
    pub fn row(&self, k: usize, mode: Mode) -> Option<&ResultRow> {
        self.rows.iter().find(|r| r.k == k && r.mode == mode)
    }

    pub fn to_csv(&self) -> String {
        let mut out = String::from("k,mode,mean,std,min,max,trials\n");
        for r in &self.rows {
            out.push_str(&format!(
                "{},{},{:.4},{:.4},{:.4},{:.4},{}\n",
                r.k,
                r.mode.label(),
                r.mean,
                r.std,
                r.min,
                r.max,
                r.trials
            ));
        }
        out
    }
}

fn trial_rng(seed: u64, trial: usize) -> ChaCha8Rng {
    let stream = seed.wrapping_add((trial as u64 + 1).wrapping_mul(0x9E37_79B9_7F4A_7C15));
    ChaCha8Rng::seed_from_u64(stream)
}

struct TrialOutput {
    values: Vec<f64>,
    redraws: u64,
}

fn run_trial(cfg: &ExperimentConfig, trial: usize) -> Result<TrialOutput, CliError> {
    let mut rng = trial_rng(cfg.seed, trial);
    let mut points: Vec<Point> = Vec::with_capacity(cfg.n);
    let mut redraws = 0u64;
    while points.len() < cfg.n {
        let p = Point::new(rng.random(), rng.random());
        if points.contains(&p) {
            redraws += 1;
            continue;
        }
        points.push(p);
    }
    // The arrival permutation is drawn even when no online mode is selected,
    // so a (seed, trial) pair pins identical points for every mode choice.
    let mut arrival: Vec<usize> = (0..cfg.n).collect();
    arrival.shuffle(&mut rng);

    let mut values = Vec::with_capacity(cfg.ks.len() * cfg.modes.len());
    for &k in &cfg.ks {
        for &mode in &cfg.modes {
            let stretch = match mode {
                Mode::Offline => {
                    let c = offline::color_cones_k(&points, k)?;
                    analysis::stretch_factor(&points, &c).stretch
                }
                Mode::Online => {
                    let mut oc = OnlineColorer::new(k)?;
                    for &i in &arrival {
                        oc.insert(points[i])?;
                    }
                    oc.finalize_stretch().stretch
                }
                Mode::OfflineSpecialized => {
                    let c = match k {
                        2 => offline::color_mst_2(&points)?,
                        3 => offline::color_ellipse_3(&points)?.0,
                        4 => offline::color_delaunay_4(&points)?,
                        _ => unreachable!("validated"),
                    };
                    analysis::stretch_factor(&points, &c).stretch
                }
            };
            debug_assert!(stretch.is_finite(), "algorithm produced a disconnected coloring");
            values.push(stretch);
        }
    }
    Ok(TrialOutput { values, redraws })
}

/// Runs the configured sweep; trials execute in parallel and aggregate
/// deterministically.
pub fn run_experiment(cfg: &ExperimentConfig) -> Result<ResultTable, CliError> {
    cfg.validate()?;
    let outputs: Vec<Result<TrialOutput, CliError>> = (0..cfg.trials)
        .into_par_iter()
        .map(|t| run_trial(cfg, t))
        .collect();
    let mut trials = Vec::with_capacity(cfg.trials);
    let mut duplicate_redraws = 0;
    for out in outputs {
        let out = out?;
        duplicate_redraws += out.redraws;
        trials.push(out.values);
    }

    let mut rows = Vec::new();
    let mut col = 0;
    for &k in &cfg.ks {
        for &mode in &cfg.modes {
            let values: Vec<f64> = trials.iter().map(|t| t[col]).collect();
            col += 1;
            let n = values.len() as f64;
            let mean = values.iter().sum::<f64>() / n;
            let var = if values.len() > 1 {
                values.iter().map(|v| (v - mean) * (v - mean)).sum::<f64>() / (n - 1.0)
            } else {
                0.0
            };
            let min = values.iter().copied().fold(f64::INFINITY, f64::min);
            let max = values.iter().copied().fold(f64::NEG_INFINITY, f64::max);
            rows.push(ResultRow {
                k,
                mode,
                mean,
                std: var.sqrt(),
                min,
                max,
                trials: values.len(),
            });
        }
    }
    Ok(ResultTable {
        rows,
        duplicate_redraws,
    })
}
