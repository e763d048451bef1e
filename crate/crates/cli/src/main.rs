use std::path::PathBuf;
use std::process::ExitCode;

use clap::error::ErrorKind;
use clap::{Args, Parser, Subcommand, ValueEnum};

use chromospan::analysis;
use chromospan::constructions;
use chromospan::offline::{self, Coloring};
use chromospan::online::{cones_bound, online_bound, OnlineColorer};
use chromospan::EPS_GEO;
use chromospan_cli::io::{self, CliError};
use chromospan_cli::{run_experiment, ExperimentConfig, Mode, DEFAULT_SEED};

/// Chromatic spanners: color planar point sets so the complete k-partite
/// graph induced by the coloring has a guaranteed stretch factor.
#[derive(Parser)]
#[command(name = "chromospan", version, about)]
struct Cli {
    #[command(subcommand)]
    command: CliCommand,
}

#[derive(Subcommand)]
enum CliCommand {
    /// Color a point set with one of the algorithms and write the coloring.
    Color(ColorArgs),
    /// Run a seeded experiment sweep and print the result table as CSV.
    Table(TableArgs),
    /// Generate a lower-bound instance and report its analytic bound.
    Lowerbound(LowerboundArgs),
    /// Re-verify a coloring file with the independent oracles.
    Verify(VerifyArgs),
}

#[derive(Clone, Copy, ValueEnum, PartialEq)]
enum Algo {
    Mst2,
    Ellipse3,
    Delaunay4,
    Cones,
    Online,
}

#[derive(Args)]
struct ColorArgs {
    /// Coloring algorithm.
    #[arg(long, value_enum)]
    algo: Algo,
    /// Number of colors (required for cones and online; at least 2).
    #[arg(long)]
    k: Option<usize>,
    /// Input point file.
    #[arg(long = "in")]
    input: PathBuf,
    /// Output coloring CSV.
    #[arg(long)]
    out: PathBuf,
    /// Check the coloring against its stretch bound; exits 2 on violation.
    #[arg(long)]
    verify: bool,
    /// Also write a sparse (1+eps)-spanner edge list of the coloring.
    #[arg(long, value_name = "EPS")]
    sparsify: Option<f64>,
    /// Where the sparse edge list goes (default: `<out>.edges.csv`).
    #[arg(long)]
    edges_out: Option<PathBuf>,
}

#[derive(Args)]
struct TableArgs {
    #[arg(long, default_value_t = 200)]
    trials: usize,
    /// Points per trial, drawn uniformly from the unit square.
    #[arg(long, default_value_t = 50)]
    n: usize,
    #[arg(long, default_value_t = 2)]
    k_min: usize,
    #[arg(long, default_value_t = 10)]
    k_max: usize,
    #[arg(long, value_enum, default_value_t = TableMode::Both)]
    mode: TableMode,
    #[arg(long, default_value_t = DEFAULT_SEED)]
    seed: u64,
}

#[derive(Clone, Copy, ValueEnum)]
enum TableMode {
    Offline,
    Online,
    Both,
    OfflineSpecialized,
}

#[derive(Args)]
struct LowerboundArgs {
    /// Instance family.
    #[arg(long, value_enum)]
    family: Family,
    /// Polygon parameter for k2/k3/k4 (odd, at least 3).
    #[arg(long, default_value_t = 5)]
    n: usize,
    /// Color count for kgon (k > 4) and online (k >= 4).
    #[arg(long, default_value_t = 5)]
    k: usize,
    /// Write the generated points here (order matters for online families).
    #[arg(long)]
    out: Option<PathBuf>,
    /// Confirm the bound with the exhaustive optimal coloring search.
    #[arg(long)]
    bruteforce: bool,
}

#[derive(Clone, Copy, ValueEnum)]
enum Family {
    K2,
    K3,
    K4,
    Kgon,
    Online,
    ProbeK3,
}

#[derive(Args)]
struct VerifyArgs {
    /// Input point file.
    #[arg(long = "in")]
    input: PathBuf,
    /// Coloring CSV (`index,color`).
    #[arg(long)]
    coloring: PathBuf,
    /// Number of colors; defaults to the largest color present.
    #[arg(long)]
    k: Option<usize>,
    /// Also check the t-ellipse property for this t; exits 2 on violation.
    #[arg(long)]
    t: Option<f64>,
}

/// Exit 2 is reserved for a verified bound violation; everything else
/// nonzero is a usage or input problem.
enum Failure {
    Usage(String),
    BoundViolation(String),
}

impl From<CliError> for Failure {
    fn from(e: CliError) -> Failure {
        Failure::Usage(e.to_string())
    }
}

impl From<chromospan::Error> for Failure {
    fn from(e: chromospan::Error) -> Failure {
        Failure::Usage(e.to_string())
    }
}

fn main() -> ExitCode {
    if let Ok(threads) = std::env::var("CHROMOSPAN_THREADS") {
        match threads.parse::<usize>() {
            Ok(n) if n >= 1 => {
                let _ = rayon::ThreadPoolBuilder::new()
                    .num_threads(n)
                    .build_global();
            }
            _ => {
                eprintln!("chromospan: CHROMOSPAN_THREADS must be a positive integer");
                return ExitCode::from(1);
            }
        }
    }

    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => 0,
                _ => 1,
            };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };

    let result = match cli.command {
        CliCommand::Color(args) => cmd_color(args),
        CliCommand::Table(args) => cmd_table(args),
        CliCommand::Lowerbound(args) => cmd_lowerbound(args),
        CliCommand::Verify(args) => cmd_verify(args),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Usage(msg)) => {
            eprintln!("chromospan: {msg}");
            ExitCode::from(1)
        }
        Err(Failure::BoundViolation(msg)) => {
            eprintln!("chromospan: BOUND VIOLATION: {msg}");
            ExitCode::from(2)
        }
    }
}

fn cmd_color(args: ColorArgs) -> Result<(), Failure> {
    let points = io::read_points(&args.input)?;
    let needs_k = matches!(args.algo, Algo::Cones | Algo::Online);
    if needs_k && args.k.is_none() {
        return Err(Failure::Usage("--k is required for this algorithm".into()));
    }
    let k = args.k.unwrap_or(0);
    if needs_k && k < 2 {
        return Err(Failure::Usage(format!("--k must be at least 2, got {k}")));
    }

    let (coloring, bound, label) = match args.algo {
        Algo::Mst2 => (offline::color_mst_2(&points)?, 3.0, "mst2".to_string()),
        Algo::Ellipse3 => (
            offline::color_ellipse_3(&points)?.0,
            2.0,
            "ellipse3".to_string(),
        ),
        Algo::Delaunay4 => (
            offline::color_delaunay_4(&points)?,
            2.0f64.sqrt(),
            "delaunay4".to_string(),
        ),
        Algo::Cones => (
            offline::color_cones_k(&points, k)?,
            cones_bound(k),
            format!("cones k={k}"),
        ),
        Algo::Online => {
            let mut oc = OnlineColorer::new(k)?;
            for &p in &points {
                oc.insert(p)?;
            }
            (oc.coloring(), online_bound(k), format!("online k={k}"))
        }
    };

    std::fs::write(&args.out, io::coloring_to_csv(coloring.colors()))
        .map_err(|e| Failure::Usage(e.to_string()))?;

    if let Some(eps) = args.sparsify {
        if eps <= 0.0 {
            return Err(Failure::Usage("--sparsify needs eps > 0".into()));
        }
        let spanner = analysis::sparsify_greedy(&points, &coloring, eps);
        let path = args.edges_out.unwrap_or_else(|| {
            let mut p = args.out.clone().into_os_string();
            p.push(".edges.csv");
            PathBuf::from(p)
        });
        std::fs::write(&path, io::edges_to_csv(&points, spanner.edges()))
            .map_err(|e| Failure::Usage(e.to_string()))?;
        println!(
            "sparsifier: {} edges at eps={eps} -> {}",
            spanner.edges().len(),
            path.display()
        );
    }

    if args.verify {
        let report = analysis::stretch_factor(&points, &coloring);
        let ok = report.stretch <= bound + EPS_GEO;
        println!(
            "{label}: n={} stretch={:.6} bound={:.6} {}",
            points.len(),
            report.stretch,
            bound,
            if ok { "PASS" } else { "FAIL" }
        );
        if !ok {
            return Err(Failure::BoundViolation(format!(
                "{label}: stretch {:.9} exceeds bound {:.9}",
                report.stretch, bound
            )));
        }
    }
    Ok(())
}

fn cmd_table(args: TableArgs) -> Result<(), Failure> {
    if args.k_min > args.k_max {
        return Err(Failure::Usage("k-min exceeds k-max".into()));
    }
    let modes = match args.mode {
        TableMode::Offline => vec![Mode::Offline],
        TableMode::Online => vec![Mode::Online],
        TableMode::Both => vec![Mode::Offline, Mode::Online],
        TableMode::OfflineSpecialized => vec![Mode::OfflineSpecialized],
    };
    let cfg = ExperimentConfig {
        trials: args.trials,
        n: args.n,
        ks: (args.k_min..=args.k_max).collect(),
        modes,
        seed: args.seed,
    };
    let table = run_experiment(&cfg)?;
    print!("{}", table.to_csv());
    if table.duplicate_redraws > 0 {
        eprintln!(
            "note: {} duplicate random points were redrawn",
            table.duplicate_redraws
        );
    }
    Ok(())
}

fn cmd_lowerbound(args: LowerboundArgs) -> Result<(), Failure> {
    let inst = match args.family {
        Family::K2 => constructions::gen_lb_k2(args.n)?,
        Family::K3 => constructions::gen_lb_k3(args.n)?,
        Family::K4 => constructions::gen_lb_k4(args.n)?,
        Family::Kgon => constructions::gen_lb_kgon(args.k)?,
        Family::Online => constructions::gen_online_lb(args.k)?,
        Family::ProbeK3 => constructions::online_probe_k3(),
    };
    println!(
        "family={} points={} k={} online={} bound={:.6} formula=\"{}\"",
        match args.family {
            Family::K2 => "k2",
            Family::K3 => "k3",
            Family::K4 => "k4",
            Family::Kgon => "kgon",
            Family::Online => "online",
            Family::ProbeK3 => "probe-k3",
        },
        inst.points.len(),
        inst.k,
        inst.online,
        inst.analytic_bound,
        inst.bound_formula
    );
    if let Some(path) = &args.out {
        io::write_points(&inst.points, path)?;
        println!("wrote {}", path.display());
    }
    if args.bruteforce {
        if inst.online {
            return Err(Failure::Usage(
                "bruteforce confirmation applies to offline instances only".into(),
            ));
        }
        let (_, best) = analysis::optimal_coloring_bruteforce(&inst.points, inst.k)?;
        let ok = best >= inst.analytic_bound - 1e-6;
        println!(
            "bruteforce: optimal stretch {:.6} vs bound {:.6} -> {}",
            best,
            inst.analytic_bound,
            if ok { "CONFIRMED" } else { "VIOLATED" }
        );
        if !ok {
            return Err(Failure::BoundViolation(format!(
                "optimal coloring {best} beats the analytic bound {}",
                inst.analytic_bound
            )));
        }
    }
    Ok(())
}

fn cmd_verify(args: VerifyArgs) -> Result<(), Failure> {
    let points = io::read_points(&args.input)?;
    let colors = io::read_coloring(&args.coloring)?;
    if colors.len() != points.len() {
        return Err(Failure::Usage(format!(
            "coloring covers {} points but the point file has {}",
            colors.len(),
            points.len()
        )));
    }
    let k = args
        .k
        .unwrap_or_else(|| colors.iter().copied().max().unwrap_or(1) as usize);
    let coloring = Coloring::new(k, colors)?;

    let direct = analysis::stretch_factor(&points, &coloring);
    let graph = analysis::dijkstra_stretch(&points, &coloring.bichromatic_pairs());
    let agree = if direct.stretch.is_finite() {
        (direct.stretch - graph.stretch).abs() <= 1e-9
    } else {
        graph.stretch.is_infinite()
    };

    let fmt_stretch = |s: f64| {
        if s.is_finite() {
            format!("{s:.9}")
        } else {
            "\"inf\"".to_string()
        }
    };
    let worst = match direct.worst_pair {
        Some((i, j)) => format!("[{i},{j}]"),
        None => "null".to_string(),
    };
    let witness = match direct.witness {
        Some(w) => w.to_string(),
        None => "null".to_string(),
    };
    let t_fields = match args.t {
        Some(t) => {
            let sat = analysis::has_ellipse_property(&points, &coloring, t);
            format!(",\"t\":{t},\"satisfies_t\":{sat}")
        }
        None => String::new(),
    };
    println!(
        "{{\"n\":{},\"k\":{k},\"stretch\":{},\"worst_pair\":{worst},\"witness\":{witness},\"dijkstra_stretch\":{},\"oracles_agree\":{agree}{t_fields}}}",
        points.len(),
        fmt_stretch(direct.stretch),
        fmt_stretch(graph.stretch),
    );

    if !agree {
        return Err(Failure::Usage(
            "stretch oracles disagree; this signals a bug".into(),
        ));
    }
    if let Some(t) = args.t {
        if !analysis::has_ellipse_property(&points, &coloring, t) {
            return Err(Failure::BoundViolation(format!(
                "coloring does not satisfy the {t}-ellipse property (stretch {})",
                fmt_stretch(direct.stretch)
            )));
        }
    }
    Ok(())
}
