//! Command-line driver. Exit codes: 0 success, 1 a verification check
//! failed, 2 bad usage or input.

use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;

use genetic_groupoid::constructions::{ProductShape, DEFAULT_MATERIALIZE_CAP};
use genetic_groupoid::enumeration::census;
use genetic_groupoid::ga::{run_experiment, with_jobs, ExperimentConfig};
use genetic_groupoid::groupoid::FORMAT_VERSION;
use genetic_groupoid::names::GroupoidName;
use genetic_groupoid::verify::{
    verify_lemma1, verify_not_variety, verify_not_variety_with, verify_theorem1_suite,
    verify_theorem2, TheoremReport, Verdict,
};
use genetic_groupoid::{Error, NGroupoid};

#[derive(Parser)]
#[command(name = "gengroupoid", version, about = "Finite genetic groupoids and groupoid-driven genetic algorithms")]
struct Cli {
    /// Worker threads for parallel stages.
    #[arg(long, global = true)]
    jobs: Option<usize>,
    /// Seed override for sampling and GA runs.
    #[arg(long, global = true)]
    seed: Option<u64>,
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Write output here instead of stdout. For run-ga, both PATH.json
    /// and PATH.csv are written.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Text,
    Csv,
}

#[derive(Subcommand)]
enum Command {
    /// Report the structural predicates of a groupoid.
    Check {
        /// JSON file, compact `ijk/xyz`, or a name like `GA(2; 1,1,1)`.
        source: String,
    },
    /// Genetic product of named factors, left to right.
    Product {
        #[arg(required = true)]
        factors: Vec<String>,
        /// Largest carrier materialized as tables.
        #[arg(long, default_value_t = DEFAULT_MATERIALIZE_CAP)]
        cap: usize,
    },
    /// Census of genetic groupoids of one order.
    Enumerate {
        #[arg(long)]
        order: usize,
    },
    /// Run structural checks.
    Verify {
        #[arg(value_enum)]
        target: Target,
    },
    /// Run a GA experiment config.
    RunGa { config: PathBuf },
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Target {
    Theorem1,
    Theorem2,
    Lemma1,
    NotVariety,
    All,
}

enum Failure {
    Usage(String),
    Verification(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::Config(problems) => Failure::Usage(format!(
                "invalid configuration:\n  - {}",
                problems.join("\n  - ")
            )),
            other => Failure::Usage(other.to_string()),
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match with_jobs(cli.jobs, || run(&cli)) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Verification(msg)) => {
            eprintln!("{msg}");
            ExitCode::from(1)
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}

fn run(cli: &Cli) -> Result<(), Failure> {
    match &cli.command {
        Command::Check { source } => {
            let g = load(source)?;
            emit(cli, &check_output(cli.format, source, &g))
        }
        Command::Product { factors, cap } => product(cli, factors, *cap),
        Command::Enumerate { order } => {
            let report = census(*order)?;
            let body = match cli.format {
                Format::Json => report.to_json(),
                Format::Text => report.to_text(),
                Format::Csv => {
                    let mut rows = vec![vec![
                        "format_version".to_string(),
                        "class".into(),
                        "representative".into(),
                        "orbit_size".into(),
                        "associative".into(),
                        "rectangular_band".into(),
                    ]];
                    for (i, c) in report.classes.iter().enumerate() {
                        rows.push(vec![
                            report.format_version.to_string(),
                            i.to_string(),
                            c.compact3.clone().unwrap_or_else(|| c.representative.to_string()),
                            c.orbit_size.to_string(),
                            c.associative.to_string(),
                            c.rectangular_band.to_string(),
                        ]);
                    }
                    csv(rows)
                }
            };
            emit(cli, &body)
        }
        Command::Verify { target } => verify(cli, *target),
        Command::RunGa { config } => run_ga(cli, config),
    }
}

fn emit(cli: &Cli, body: &str) -> Result<(), Failure> {
    match &cli.out {
        Some(path) => write(path, body),
        None => {
            print!("{body}");
            if !body.ends_with('\n') {
                println!();
            }
            Ok(())
        }
    }
}

fn write(path: &Path, body: &str) -> Result<(), Failure> {
    std::fs::write(path, body).map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))
}

fn csv(rows: Vec<Vec<String>>) -> String {
    let mut w = ::csv::Writer::from_writer(Vec::new());
    for r in rows {
        w.write_record(r).expect("in-memory write");
    }
    String::from_utf8(w.into_inner().expect("flush")).expect("utf-8")
}

/// A readable file is taken as JSON; anything else as a name.
fn load(source: &str) -> Result<NGroupoid, Failure> {
    let path = Path::new(source);
    if path.is_file() {
        let text = std::fs::read_to_string(path)
            .map_err(|e| Failure::Usage(format!("{source}: {e}")))?;
        return Ok(NGroupoid::from_json(&text)?);
    }
    Ok(GroupoidName::parse(source)?.build()?)
}

fn check_output(format: Format, source: &str, g: &NGroupoid) -> String {
    let ops: Vec<_> = g
        .ops()
        .iter()
        .enumerate()
        .map(|(i, op)| {
            let band = op.is_rectangular_band();
            json!({
                "op": i,
                "idempotent": op.is_idempotent(),
                "nowhere_commutative": op.is_nowhere_commutative(),
                "genetic": op.is_genetic(),
                "associative": op.is_associative(),
                "rectangular_band": band,
                "band_dimensions": if band { Some(op.band_dimensions()) } else { None },
            })
        })
        .collect();
    match format {
        Format::Json => serde_json::to_string_pretty(&json!({
            "format_version": FORMAT_VERSION,
            "source": source,
            "order": g.order(),
            "op_count": g.op_count(),
            "genetic": g.is_genetic(),
            "associative": g.is_associative(),
            "ops": ops,
        }))
        .expect("JSON"),
        Format::Csv => {
            let keys = ["idempotent", "nowhere_commutative", "genetic", "associative", "rectangular_band"];
            let mut rows = vec![["format_version", "op"].iter().chain(&keys).map(|s| s.to_string()).collect()];
            for o in &ops {
                let mut row = vec![FORMAT_VERSION.to_string(), o["op"].to_string()];
                row.extend(keys.iter().map(|k| o[k].to_string()));
                rows.push(row);
            }
            csv(rows)
        }
        Format::Text => {
            let mut out = format!(
                "format_version: {FORMAT_VERSION}\n{source}: order {}, {} op(s)\ngenetic: {}\nassociative: {}\n",
                g.order(),
                g.op_count(),
                g.is_genetic(),
                g.is_associative()
            );
            for o in &ops {
                out.push_str(&format!(
                    "op {}: idempotent: {}, nowhere-commutative: {}, genetic: {}, associative: {}, rectangular-band: {}{}\n",
                    o["op"],
                    o["idempotent"],
                    o["nowhere_commutative"],
                    o["genetic"],
                    o["associative"],
                    o["rectangular_band"],
                    match o["band_dimensions"].as_array() {
                        Some(d) => format!(" ({}x{})", d[0], d[1]),
                        None => String::new(),
                    }
                ));
            }
            out
        }
    }
}

fn product(cli: &Cli, names: &[String], cap: usize) -> Result<(), Failure> {
    let mut factors = Vec::new();
    for n in names {
        factors.extend(GroupoidName::parse(n)?.factors()?);
    }
    let shape = ProductShape::new(factors)?;
    match shape.materialize(cap) {
        Ok(g) => match cli.format {
            Format::Json => emit(cli, &g.to_json()),
            other => emit(cli, &check_output(other, &names.join(" * "), &g)),
        },
        Err(Error::Capacity { actual, cap: c, .. }) => {
            eprintln!("carrier of {actual} elements exceeds cap {c}; emitting the factored shape");
            emit(cli, &shape.sidecar_json())
        }
        Err(e) => Err(e.into()),
    }
}

fn verify(cli: &Cli, target: Target) -> Result<(), Failure> {
    let not_variety = || match cli.seed {
        Some(s) => verify_not_variety_with(100, s),
        None => verify_not_variety(),
    };
    let reports: Vec<TheoremReport> = match target {
        Target::Theorem1 => vec![verify_theorem1_suite()],
        Target::Theorem2 => vec![verify_theorem2()],
        Target::Lemma1 => vec![verify_lemma1()],
        Target::NotVariety => vec![not_variety()],
        Target::All => vec![
            verify_theorem2(),
            verify_theorem1_suite(),
            verify_lemma1(),
            not_variety(),
        ],
    };
    let passed = reports.iter().all(TheoremReport::passed);
    let body = match cli.format {
        Format::Json if reports.len() == 1 => reports[0].to_json(),
        Format::Json => serde_json::to_string_pretty(&json!({
            "format_version": FORMAT_VERSION,
            "passed": passed,
            "reports": reports,
        }))
        .expect("JSON"),
        Format::Text => {
            let mut out = format!("format_version: {FORMAT_VERSION}\n");
            for r in &reports {
                out.push_str(&r.to_text());
            }
            out
        }
        Format::Csv => {
            let mut rows = vec![["format_version", "report", "check", "verdict", "detail"]
                .map(String::from)
                .to_vec()];
            for r in &reports {
                for c in &r.checks {
                    let v = match c.verdict {
                        Verdict::Pass => "PASS",
                        Verdict::Fail => "FAIL",
                        Verdict::Skipped => "SKIPPED",
                    };
                    rows.push(vec![
                        FORMAT_VERSION.to_string(),
                        r.theorem.clone(),
                        c.name.clone(),
                        v.into(),
                        c.detail.clone(),
                    ]);
                }
            }
            csv(rows)
        }
    };
    emit(cli, &body)?;
    if passed {
        Ok(())
    } else {
        let failed: usize = reports.iter().map(|r| r.failures().count()).sum();
        Err(Failure::Verification(format!("{failed} check(s) failed")))
    }
}

fn run_ga(cli: &Cli, path: &Path) -> Result<(), Failure> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))?;
    let mut config = ExperimentConfig::from_json(&text)?;
    if let Some(s) = cli.seed {
        config.seeds = vec![s];
    }
    let report = run_experiment(&config)?;
    match &cli.out {
        Some(out) => {
            write(&out.with_extension("json"), &report.to_json())?;
            write(&out.with_extension("csv"), &report.to_csv())?;
            print!("{}", report.to_text());
            Ok(())
        }
        None => {
            let body = match cli.format {
                Format::Json => report.to_json(),
                Format::Csv => report.to_csv(),
                Format::Text => report.to_text(),
            };
            emit(cli, &body)
        }
    }
}
