//! Command-line front end. Parsing is done by `clap`; [`run`] does the work
//! and writes to any [`Write`] so it can be driven from tests.

use std::io::Write;
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;

use crate::counting::count_table;
use crate::diagrams::{
    crossing_number, diagram_at, enumerate_diagrams, matching_count, render_svg, weight,
    BrauerDiagram, DiagramJson,
};
use crate::matrices::verify_cayley;
use crate::verify::{
    verify_bijection, verify_lemmas, verify_sign_coherence, verify_theorem, MAX_SYMBOLIC_N,
};
use crate::{Error, Result, Variant};

/// Largest `n` accepted by `count`.
pub const MAX_COUNT_N: usize = 10;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum OutputFormat {
    Json,
    Text,
    Svg,
}

#[derive(Debug, Parser)]
#[command(
    name = "brauer",
    version,
    about = "Determinants as sums over Brauer diagrams"
)]
pub struct CliConfig {
    #[command(subcommand)]
    pub command: Command,

    /// Output format; defaults to json for `count`, svg for `render` and
    /// text otherwise.
    #[arg(long, global = true, value_enum)]
    pub format: Option<OutputFormat>,

    /// Write output here instead of stdout.
    #[arg(long, global = true)]
    pub output_path: Option<PathBuf>,

    /// Worker threads; defaults to the number of available cores.
    #[arg(long, global = true)]
    pub parallelism: Option<usize>,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Every diagram of size n with its crossing number and both weights.
    Enumerate {
        #[arg(long)]
        n: usize,
    },
    /// Diagram-sum determinant against the Leibniz determinant.
    VerifyTheorem {
        #[arg(long)]
        n: usize,
        #[arg(long, default_value = "F", value_parser = parse_variant)]
        variant: Variant,
    },
    /// Diagram/term round trips and sign coherence, both labelings.
    VerifyBijection {
        #[arg(long)]
        n: usize,
    },
    /// Arc-only, edge-surgery and row-swap properties over all diagrams.
    VerifyLemmas {
        #[arg(long)]
        n: usize,
    },
    /// Double factorial, Stirling row, weighted sum and Sylvester's v_n.
    Count {
        #[arg(long)]
        n: usize,
    },
    /// Draw one diagram, given by enumeration index or by JSON.
    Render {
        /// Size, required with --index.
        #[arg(long)]
        n: Option<usize>,
        #[arg(long, requires = "n", conflicts_with = "diagram")]
        index: Option<u64>,
        /// Diagram JSON, inline or `@path`.
        #[arg(long)]
        diagram: Option<String>,
        #[arg(long, default_value = "F", value_parser = parse_variant)]
        variant: Variant,
    },
    /// det = pf² (even n) or det = 0 (odd n) for antisymmetric matrices.
    PfaffianCheck {
        #[arg(long)]
        n: usize,
    },
}

fn parse_variant(s: &str) -> std::result::Result<Variant, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

/// How a run ended; maps onto the process exit status.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Status {
    Verified,
    Failed,
}

impl Status {
    fn from_bool(ok: bool) -> Status {
        if ok {
            Status::Verified
        } else {
            Status::Failed
        }
    }

    pub fn exit_code(self) -> i32 {
        match self {
            Status::Verified => 0,
            Status::Failed => 1,
        }
    }
}

/// Exit code for usage errors (bad flags, sizes out of range, bad input).
pub const USAGE_EXIT_CODE: i32 = 2;

fn bound(n: usize, min: usize, max: usize) -> Result<()> {
    if n < min || n > max {
        return Err(Error::SizeOutOfRange {
            n,
            reason: format!("expected {min}..={max}"),
        });
    }
    Ok(())
}

fn json_line(out: &mut (dyn Write + Send), value: &impl Serialize) -> Result<()> {
    serde_json::to_writer(&mut *out, value)?;
    writeln!(out)?;
    Ok(())
}

#[derive(Serialize)]
struct EnumerateRecord {
    index: u64,
    n: usize,
    edges: Vec<[usize; 2]>,
    crossing_number: usize,
    weight_f: String,
    weight_b: String,
}

#[derive(Serialize)]
struct CayleyRecord {
    n: usize,
    holds: bool,
    det: String,
    rhs: String,
    det_terms: usize,
}

#[derive(Serialize)]
struct RenderRecord {
    n: usize,
    edges: Vec<[usize; 2]>,
    crossing_number: usize,
    weight: String,
    svg: String,
}

/// Runs one subcommand, writing its output to `out`.
///
/// Returns [`Status::Failed`] when a verification finds a counterexample;
/// returns `Err` for usage problems.
pub fn run(config: &CliConfig, out: &mut (dyn Write + Send)) -> Result<Status> {
    let mut builder = rayon::ThreadPoolBuilder::new();
    if let Some(p) = config.parallelism {
        if p == 0 {
            return Err(Error::SizeOutOfRange {
                n: 0,
                reason: "parallelism must be at least 1".into(),
            });
        }
        builder = builder.num_threads(p);
    }
    let pool = builder
        .build()
        .map_err(|e| Error::Io(std::io::Error::other(e)))?;
    pool.install(|| dispatch(config, out))
}

fn dispatch(config: &CliConfig, out: &mut (dyn Write + Send)) -> Result<Status> {
    let fmt = |default| config.format.unwrap_or(default);
    match &config.command {
        Command::Enumerate { n } => {
            let n = *n;
            bound(n, 0, MAX_SYMBOLIC_N)?;
            let json = fmt(OutputFormat::Text) == OutputFormat::Json;
            for (index, d) in enumerate_diagrams(n).enumerate() {
                let DiagramJson { n, edges } = d.to_json();
                let record = EnumerateRecord {
                    index: index as u64,
                    n,
                    edges,
                    crossing_number: crossing_number(&d),
                    weight_f: weight(&d, Variant::F).to_string(),
                    weight_b: weight(&d, Variant::B).to_string(),
                };
                if json {
                    json_line(out, &record)?;
                } else {
                    writeln!(
                        out,
                        "{} edges={:?} crossings={} F={} B={}",
                        record.index,
                        record.edges,
                        record.crossing_number,
                        record.weight_f,
                        record.weight_b
                    )?;
                }
            }
            Ok(Status::Verified)
        }
        Command::VerifyTheorem { n, variant } => {
            let report = verify_theorem(*n, *variant)?;
            if fmt(OutputFormat::Text) == OutputFormat::Json {
                json_line(out, &report)?;
            } else if let Some(c) = &report.counterexample {
                writeln!(
                    out,
                    "FAIL n={} variant={} monomial={} brauer={} leibniz={}",
                    report.n, report.variant, c.monomial, c.brauer, c.leibniz
                )?;
            } else {
                writeln!(
                    out,
                    "OK n={} variant={} diagrams={} leibniz_products={} surviving_terms={} distinct_monomials={}",
                    report.n,
                    report.variant,
                    report.diagrams,
                    report.leibniz_products,
                    report.surviving_terms,
                    report.distinct_monomials
                )?;
            }
            Ok(Status::from_bool(report.holds))
        }
        Command::VerifyBijection { n } => {
            let report = verify_bijection(*n)?;
            let signs = Variant::ALL
                .iter()
                .map(|&v| verify_sign_coherence(*n, v))
                .collect::<Result<Vec<_>>>()?;
            let ok = report.holds && signs.iter().all(|s| s.holds);
            if fmt(OutputFormat::Text) == OutputFormat::Json {
                json_line(
                    out,
                    &serde_json::json!({ "bijection": report, "signs": signs, "holds": ok }),
                )?;
            } else if ok {
                writeln!(
                    out,
                    "OK n={} diagrams={} terms={} sign_checks={}",
                    report.n,
                    report.diagrams_checked,
                    report.terms_checked,
                    signs.iter().map(|s| s.checked).sum::<u64>()
                )?;
            } else {
                if let Some(f) = &report.failure {
                    write!(out, "FAIL ")?;
                    json_line(out, f)?;
                }
                for s in signs.iter().filter(|s| !s.holds) {
                    write!(out, "FAIL ")?;
                    json_line(out, s)?;
                }
            }
            Ok(Status::from_bool(ok))
        }
        Command::VerifyLemmas { n } => {
            let report = verify_lemmas(*n)?;
            if fmt(OutputFormat::Text) == OutputFormat::Json {
                json_line(out, &report)?;
            } else {
                for c in &report.checks {
                    let tag = if c.holds() { "ok" } else { "FAIL" };
                    write!(out, "{tag} {} instances={}", c.name, c.instances)?;
                    match &c.first_failure {
                        Some(d) => {
                            write!(out, " failures={} first=", c.failures)?;
                            json_line(out, d)?;
                        }
                        None => writeln!(out)?,
                    }
                }
                writeln!(
                    out,
                    "{} n={}",
                    if report.holds() { "OK" } else { "FAIL" },
                    n
                )?;
            }
            Ok(Status::from_bool(report.holds()))
        }
        Command::Count { n } => {
            bound(*n, 0, MAX_COUNT_N)?;
            let table = count_table(*n)?;
            if fmt(OutputFormat::Json) == OutputFormat::Json {
                json_line(out, &table)?;
            } else {
                writeln!(out, "n = {}", table.n)?;
                writeln!(out, "double_factorial = {}", table.double_factorial)?;
                writeln!(out, "stirling_row = {:?}", table.stirling_row)?;
                writeln!(out, "weighted_sum = {}", table.weighted_sum)?;
                writeln!(out, "sylvester_v = {}", table.sylvester_v)?;
            }
            Ok(Status::Verified)
        }
        Command::Render {
            n,
            index,
            diagram,
            variant,
        } => {
            let d = match (index, diagram) {
                (Some(i), _) => {
                    let n = n.expect("clap enforces --n with --index");
                    bound(n, 0, MAX_SYMBOLIC_N)?;
                    if *i >= matching_count(n) {
                        return Err(Error::SizeOutOfRange {
                            n: *i as usize,
                            reason: format!("index must be below {}", matching_count(n)),
                        });
                    }
                    diagram_at(n, *i)
                }
                (None, Some(text)) => {
                    let text = match text.strip_prefix('@') {
                        Some(path) => std::fs::read_to_string(path)?,
                        None => text.clone(),
                    };
                    let json: DiagramJson = serde_json::from_str(&text)?;
                    BrauerDiagram::from_json(&json)?
                }
                (None, None) => {
                    return Err(Error::Parse(
                        "render needs --index (with --n) or --diagram".into(),
                    ))
                }
            };
            let svg = render_svg(&d, *variant);
            if fmt(OutputFormat::Svg) == OutputFormat::Json {
                let DiagramJson { n, edges } = d.to_json();
                json_line(
                    out,
                    &RenderRecord {
                        n,
                        edges,
                        crossing_number: crossing_number(&d),
                        weight: weight(&d, *variant).to_string(),
                        svg,
                    },
                )?;
            } else {
                out.write_all(svg.as_bytes())?;
            }
            Ok(Status::Verified)
        }
        Command::PfaffianCheck { n } => {
            bound(*n, 1, MAX_SYMBOLIC_N)?;
            let r = verify_cayley(*n);
            if fmt(OutputFormat::Text) == OutputFormat::Json {
                json_line(
                    out,
                    &CayleyRecord {
                        n: r.n,
                        holds: r.holds,
                        det: r.lhs.to_string(),
                        rhs: r.rhs.to_string(),
                        det_terms: r.lhs.count_distinct_terms(),
                    },
                )?;
            } else {
                let rel = if n % 2 == 0 { "det = pf^2" } else { "det = 0" };
                match r.lhs.first_difference(&r.rhs) {
                    None => writeln!(
                        out,
                        "OK n={} {rel} det_terms={}",
                        r.n,
                        r.lhs.count_distinct_terms()
                    )?,
                    Some((m, x, y)) => {
                        writeln!(out, "FAIL n={} {rel} monomial={m} det={x} rhs={y}", r.n)?
                    }
                }
            }
            Ok(Status::from_bool(r.holds))
        }
    }
}
