use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};
use plconvex::checker::{check_prepared, corner_report, precheck_edge_count, prepare_traditional};
use plconvex::io::{
    exit_code, parse_off, parse_plc, serialize_off, serialize_plc_traditional, PlcDocument, Report,
};
use plconvex::oracle::{dent, frustum_ring_size, gen_convex_surface, is_hull_boundary, stacked_frustum};
use plconvex::{
    check_traditional, validate_standard, CheckOptions, CheckOutcome, TraditionalComplex, Verdict,
};

#[derive(Parser)]
#[command(name = "plconvex", version, about = "Exact convexity check for PL hypersurfaces")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Off,
    Plc,
}

#[derive(Clone, Copy, ValueEnum)]
enum ReportKind {
    Text,
    Json,
}

#[derive(Subcommand)]
enum Command {
    /// Decide whether a surface bounds a convex body.
    Check {
        file: PathBuf,
        #[arg(long, value_enum)]
        format: Option<Format>,
        #[arg(long, value_enum, default_value = "text")]
        report: ReportKind,
        /// Report every failing corner instead of stopping at the first.
        #[arg(long)]
        exhaustive: bool,
    },
    /// Write a random convex simplicial surface.
    Gen {
        #[arg(long)]
        seed: u64,
        #[arg(long)]
        dim: usize,
        #[arg(long)]
        points: usize,
        #[arg(long, default_value_t = 100)]
        bound: i64,
        #[arg(long)]
        out: PathBuf,
    },
    /// Move one vertex toward the centroid.
    Dent {
        file: PathBuf,
        #[arg(long)]
        vertex: usize,
        #[arg(long)]
        factor: String,
        #[arg(long)]
        out: PathBuf,
    },
    /// Compare a simplicial surface with the boundary of its convex hull.
    Oracle { file: PathBuf },
    /// Print face counts.
    Stats { file: PathBuf },
    /// Time the check on generated convex surfaces.
    Bench {
        #[arg(long, value_delimiter = ',', default_value = "3")]
        dims: Vec<usize>,
        #[arg(long, value_delimiter = ',', default_value = "1000,10000")]
        sizes: Vec<usize>,
    },
}

enum Failure {
    Invalid(String),
    Internal(String),
}

fn read_document(path: &Path, format: Option<Format>) -> Result<PlcDocument, Failure> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| Failure::Internal(format!("{}: {e}", path.display())))?;
    let format = format.unwrap_or(match path.extension().and_then(|e| e.to_str()) {
        Some(e) if e.eq_ignore_ascii_case("off") => Format::Off,
        _ => Format::Plc,
    });
    match format {
        Format::Off => parse_off(&text).map(PlcDocument::Traditional),
        Format::Plc => parse_plc(&text),
    }
    .map_err(|e| Failure::Invalid(e.to_string()))
}

fn read_traditional(path: &Path) -> Result<TraditionalComplex, Failure> {
    match read_document(path, None)? {
        PlcDocument::Traditional(t) => Ok(t),
        PlcDocument::Standard(_) => Err(Failure::Invalid("expected a traditional-form surface".into())),
    }
}

fn write_traditional(path: &Path, t: &TraditionalComplex) -> Result<(), Failure> {
    let is_off = path.extension().is_some_and(|e| e.eq_ignore_ascii_case("off"));
    let text = if is_off && t.dim == 3 && !t.vertices.is_empty() {
        serialize_off(t)
    } else {
        serialize_plc_traditional(t)
    };
    std::fs::write(path, text).map_err(|e| Failure::Internal(format!("{}: {e}", path.display())))
}

fn check(path: &Path, format: Option<Format>, report: ReportKind, exhaustive: bool) -> Result<i32, Failure> {
    let options = CheckOptions::default();
    let start = Instant::now();
    let doc = read_document(path, format)?;
    let prepared = match &doc {
        PlcDocument::Traditional(t) => match precheck_edge_count(t) {
            Err(verdict) => Err(CheckOutcome { verdict, corners_checked: 0, counts: None }),
            Ok(()) => prepare_traditional(t).map_err(invalid_outcome),
        },
        PlcDocument::Standard(s) => validate_standard(s.clone()).map_err(|e| invalid_outcome(e.to_string())),
    };
    let (outcome, failures) = match prepared {
        Err(outcome) => (outcome, None),
        Ok(p) if exhaustive => {
            let fails: Vec<_> = corner_report(&p, &options).into_iter().filter(|(_, s)| !s.passes()).collect();
            let verdict = match fails.first() {
                None => Verdict::Convex,
                Some(&(c, s)) => Verdict::NotConvex { witness: Some(c), reason: s.failure().expect("failing") },
            };
            let outcome = CheckOutcome { verdict, corners_checked: p.num_corners(), counts: Some(p.face_counts()) };
            (outcome, Some(fails))
        }
        Ok(p) => (check_prepared(&p, &options), None),
    };
    let mut rep = Report::new(&outcome, start.elapsed());
    if let Some(f) = failures {
        rep = rep.with_failures(f);
    }
    match report {
        ReportKind::Text => print!("{}", rep.to_text()),
        ReportKind::Json => println!("{}", rep.to_json()),
    }
    Ok(exit_code(&outcome.verdict))
}

fn invalid_outcome(message: String) -> CheckOutcome {
    CheckOutcome { verdict: Verdict::InvalidInput(message), corners_checked: 0, counts: None }
}

fn run(command: Command) -> Result<i32, Failure> {
    match command {
        Command::Check { file, format, report, exhaustive } => check(&file, format, report, exhaustive),
        Command::Gen { seed, dim, points, bound, out } => {
            let t = gen_convex_surface(seed, dim, points, bound).map_err(|e| Failure::Invalid(e.to_string()))?;
            write_traditional(&out, &t)?;
            eprintln!("wrote {} vertices, {} facets", t.vertices.len(), t.facets.len());
            Ok(0)
        }
        Command::Dent { file, vertex, factor, out } => {
            let t = read_traditional(&file)?;
            let q = plconvex::exact::parse_scalar(&factor)
                .ok_or_else(|| Failure::Invalid(format!("bad factor `{factor}`")))?;
            if vertex >= t.vertices.len() {
                return Err(Failure::Invalid(format!("vertex {vertex} out of range")));
            }
            write_traditional(&out, &dent(&t, vertex, &q))?;
            Ok(0)
        }
        Command::Oracle { file } => {
            let t = read_traditional(&file)?;
            let hull = is_hull_boundary(&t).map_err(|e| Failure::Invalid(e.to_string()))?;
            println!("hull boundary: {hull}");
            Ok(if hull { 0 } else { 1 })
        }
        Command::Stats { file } => {
            let counts = match read_document(&file, None)? {
                PlcDocument::Traditional(t) => {
                    prepare_traditional(&t).map_err(Failure::Invalid)?.face_counts()
                }
                PlcDocument::Standard(s) => plconvex::face_counts(&s),
            };
            println!("{}", serde_json::to_string_pretty(&counts).expect("serializable"));
            Ok(0)
        }
        Command::Bench { dims, sizes } => {
            println!("{:>4} {:>10} {:>12} {:>12}", "n", "f_0", "f_(n-3,n-2)", "ms");
            for &n in &dims {
                for &size in &sizes {
                    let t = if n == 3 {
                        stacked_frustum(3, (size / frustum_ring_size(3)).max(2))
                    } else {
                        gen_convex_surface(size as u64, n, size.min(16), 100)
                            .map_err(|e| Failure::Invalid(e.to_string()))?
                    };
                    let start = Instant::now();
                    let outcome = check_traditional(&t, &CheckOptions::default());
                    let ms = start.elapsed().as_secs_f64() * 1000.0;
                    let incidences = outcome.counts.as_ref().map_or(0, |c| c.corner_ridge);
                    println!("{n:>4} {:>10} {incidences:>12} {ms:>12.2}", t.vertices.len());
                }
            }
            Ok(0)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let code = match std::panic::catch_unwind(|| run(cli.command)) {
        Ok(Ok(code)) => code,
        Ok(Err(Failure::Invalid(m))) => {
            eprintln!("error: {m}");
            2
        }
        Ok(Err(Failure::Internal(m))) => {
            eprintln!("internal error: {m}");
            3
        }
        Err(_) => 3,
    };
    ExitCode::from(code as u8)
}
