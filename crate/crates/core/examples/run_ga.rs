//! Runs an experiment config and prints a summary.
//!
//!     cargo run --release --example run_ga -- crates/core/configs/classical.json

use genetic_groupoid::ga::{run_experiment, ExperimentConfig};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let path = std::env::args()
        .nth(1)
        .unwrap_or_else(|| concat!(env!("CARGO_MANIFEST_DIR"), "/configs/classical.json").into());
    let config = ExperimentConfig::from_json(&std::fs::read_to_string(path)?)?;
    let started = std::time::Instant::now();
    let report = run_experiment(&config)?;
    print!("{}", report.to_text());
    for f in &report.families {
        let hits: Vec<String> = f
            .runs
            .iter()
            .map(|r| r.hit_generation.map_or("-".into(), |g| g.to_string()))
            .collect();
        println!("{}: hit generations [{}]", f.name, hits.join(", "));
    }
    println!("elapsed {:.2?}", started.elapsed());
    Ok(())
}
