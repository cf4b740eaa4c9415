//! Multi-family, multi-seed experiments driven by a JSON config.
//!
//! ```json
//! {
//!   "format_version": 1,
//!   "population": 64, "generations": 200,
//!   "tournament_size": 2, "elitism": 1,
//!   "mutation_probability": 0.05,
//!   "seeds": [1, 2, 3],
//!   "fitness": "onemax",
//!   "families": [
//!     {"name": "classical", "shape": ["GA(15; 1,1,1,1,1,1,1,1,1,1,1,1,1,1,1,1)"]},
//!     {"name": "nonassociative", "shape": ["000/111", "012/120"], "op_weights": [1, 1, 1, 1, 1]}
//!   ]
//! }
//! ```
//!
//! A family without `mutations` gets every non-identity automorphism of
//! each factor, sharing `mutation_probability` per factor.

use serde::{Deserialize, Serialize};

use crate::constructions::ProductShape;
use crate::error::{Error, Result};
use crate::ga::engine::{GaConfig, GaRun, GenerationStats};
use crate::ga::fitness::{Fitness, FitnessSpec};
use crate::ga::space::{MutationEntry, MutationSet, SolutionSpace};
use crate::groupoid::{Element, FORMAT_VERSION};
use crate::names::GroupoidName;

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ExperimentConfig {
    #[serde(default = "format_version")]
    pub format_version: u32,
    pub population: usize,
    pub generations: usize,
    #[serde(default = "two")]
    pub tournament_size: usize,
    #[serde(default = "one")]
    pub elitism: usize,
    #[serde(default)]
    pub mutation_probability: f64,
    pub seeds: Vec<u64>,
    pub fitness: FitnessSpec,
    /// Score counted as a hit; defaults to the fitness optimum.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub target: Option<f64>,
    pub families: Vec<FamilyConfig>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FamilyConfig {
    pub name: String,
    /// Factor names; `GA(...)` entries expand into their bare coordinates.
    pub shape: Vec<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub mutations: Option<Vec<MutationEntry>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub op_weights: Option<Vec<f64>>,
}

fn format_version() -> u32 {
    FORMAT_VERSION
}
fn two() -> usize {
    2
}
fn one() -> usize {
    1
}

impl ExperimentConfig {
    pub fn from_json(s: &str) -> Result<Self> {
        serde_json::from_str(s).map_err(|e| Error::Parse(format!("experiment config: {e}")))
    }

    /// Resolves every family, reporting all problems at once.
    pub fn prepare(&self) -> Result<Vec<PreparedFamily>> {
        let mut problems = Vec::new();
        if self.format_version != FORMAT_VERSION {
            problems.push(format!(
                "format_version {} unsupported (expected {FORMAT_VERSION})",
                self.format_version
            ));
        }
        if self.seeds.is_empty() {
            problems.push("no seeds given".into());
        }
        if self.families.is_empty() {
            problems.push("no families given".into());
        }
        if !(0.0..=1.0).contains(&self.mutation_probability) {
            problems.push(format!(
                "mutation_probability {} outside [0, 1]",
                self.mutation_probability
            ));
        }
        if let Some(first) = self.families.first() {
            problems.extend(self.ga_config(first, 0).general_problems());
        }
        let mut names: Vec<&str> = self.families.iter().map(|f| f.name.as_str()).collect();
        names.sort_unstable();
        for w in names.windows(2) {
            if w[0] == w[1] {
                problems.push(format!("family name {:?} repeated", w[0]));
            }
        }

        let mut prepared = Vec::new();
        for fam in &self.families {
            match self.prepare_family(fam) {
                Ok(p) => prepared.push(p),
                Err(errs) => problems.extend(errs.into_iter().map(|e| format!("family {:?}: {e}", fam.name))),
            }
        }
        if problems.is_empty() {
            Ok(prepared)
        } else {
            Err(Error::Config(problems))
        }
    }

    fn prepare_family(&self, fam: &FamilyConfig) -> std::result::Result<PreparedFamily, Vec<String>> {
        let mut problems = Vec::new();
        let mut factors = Vec::new();
        for name in &fam.shape {
            match GroupoidName::parse(name).and_then(|n| n.factors()) {
                Ok(fs) => factors.extend(fs),
                Err(e) => problems.push(format!("factor {name:?}: {e}")),
            }
        }
        if !problems.is_empty() {
            return Err(problems);
        }
        let shape = match ProductShape::new(factors) {
            Ok(s) => s,
            Err(e) => return Err(vec![e.to_string()]),
        };
        let space = SolutionSpace::new(shape);
        if let Err(e) = self.fitness.build(&space) {
            problems.push(e.to_string());
        }
        let mutations = match &fam.mutations {
            Some(entries) => MutationSet::new(&space, entries.clone()),
            None => MutationSet::from_automorphisms(&space, self.mutation_probability),
        };
        let mutations = match mutations {
            Ok(m) => Some(m),
            Err(Error::Config(errs)) => {
                problems.extend(errs);
                None
            }
            Err(e) => {
                problems.push(e.to_string());
                None
            }
        };
        let ga = self.ga_config(fam, 0);
        problems.extend(ga.space_problems(&space));
        match mutations {
            Some(mutations) if problems.is_empty() => Ok(PreparedFamily {
                name: fam.name.clone(),
                space,
                mutations,
                op_weights: fam.op_weights.clone(),
            }),
            _ => Err(problems),
        }
    }

    fn ga_config(&self, fam: &FamilyConfig, seed: u64) -> GaConfig {
        GaConfig {
            population: self.population,
            generations: self.generations,
            tournament_size: self.tournament_size,
            elitism: self.elitism,
            op_weights: fam.op_weights.clone(),
            seed,
        }
    }
}

/// A validated family ready to run.
#[derive(Clone, Debug)]
pub struct PreparedFamily {
    pub name: String,
    pub space: SolutionSpace,
    pub mutations: MutationSet,
    pub op_weights: Option<Vec<f64>>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SeedRun {
    pub seed: u64,
    pub best: f64,
    pub best_point: Vec<Element>,
    /// First generation whose best score reached the target.
    pub hit_generation: Option<usize>,
    pub history: Vec<GenerationStats>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct FamilyReport {
    pub name: String,
    pub factor_orders: Vec<usize>,
    pub op_count: usize,
    pub mutation_count: usize,
    pub target: Option<f64>,
    pub success_rate: Option<f64>,
    /// Per-generation best score averaged over seeds.
    pub mean_best_curve: Vec<f64>,
    pub runs: Vec<SeedRun>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ExperimentReport {
    pub format_version: u32,
    pub fitness: String,
    pub population: usize,
    pub generations: usize,
    pub seeds: Vec<u64>,
    pub families: Vec<FamilyReport>,
}

pub fn hit_generation(history: &[GenerationStats], target: f64) -> Option<usize> {
    history.iter().find(|s| s.best >= target).map(|s| s.generation)
}

/// Runs every family on every seed. Validation happens before any run.
pub fn run_experiment(config: &ExperimentConfig) -> Result<ExperimentReport> {
    let families = config.prepare()?;
    let mut reports = Vec::with_capacity(families.len());
    for (fam, fam_cfg) in families.iter().zip(&config.families) {
        let fitness: Box<dyn Fitness> = config.fitness.build(&fam.space)?;
        let target = config.target.or_else(|| fitness.optimum());
        let mut runs = Vec::with_capacity(config.seeds.len());
        for &seed in &config.seeds {
            let mut run = GaRun::new(
                &fam.space,
                fitness.as_ref(),
                &fam.mutations,
                config.ga_config(fam_cfg, seed),
            )?;
            run.run();
            let (point, best) = run.best();
            let history = run.history().to_vec();
            runs.push(SeedRun {
                seed,
                best,
                best_point: point.to_vec(),
                hit_generation: target.and_then(|t| hit_generation(&history, t)),
                history,
            });
        }
        let success_rate = target.map(|_| {
            runs.iter().filter(|r| r.hit_generation.is_some()).count() as f64 / runs.len() as f64
        });
        let mean_best_curve = (0..=config.generations)
            .map(|g| runs.iter().map(|r| r.history[g].best).sum::<f64>() / runs.len() as f64)
            .collect();
        reports.push(FamilyReport {
            name: fam.name.clone(),
            factor_orders: fam.space.shape().factor_orders(),
            op_count: fam.space.flat_op_count(),
            mutation_count: fam.mutations.entries().len(),
            target,
            success_rate,
            mean_best_curve,
            runs,
        });
    }
    Ok(ExperimentReport {
        format_version: FORMAT_VERSION,
        fitness: config.fitness.name().to_string(),
        population: config.population,
        generations: config.generations,
        seeds: config.seeds.clone(),
        families: reports,
    })
}

pub const CSV_HEADER: [&str; 7] =
    ["format_version", "family", "seed", "generation", "best", "mean", "diversity"];

impl ExperimentReport {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    /// One row per family, seed and generation.
    pub fn to_csv(&self) -> String {
        let mut w = csv::Writer::from_writer(Vec::new());
        w.write_record(CSV_HEADER).expect("in-memory write");
        for fam in &self.families {
            for run in &fam.runs {
                for s in &run.history {
                    w.write_record([
                        self.format_version.to_string(),
                        fam.name.clone(),
                        run.seed.to_string(),
                        s.generation.to_string(),
                        s.best.to_string(),
                        s.mean.to_string(),
                        s.diversity.to_string(),
                    ])
                    .expect("in-memory write");
                }
            }
        }
        String::from_utf8(w.into_inner().expect("flush")).expect("utf-8")
    }

    pub fn to_text(&self) -> String {
        let mut out = format!(
            "format_version: {}\nfitness: {}  population: {}  generations: {}  seeds: {}\n",
            self.format_version,
            self.fitness,
            self.population,
            self.generations,
            self.seeds.len()
        );
        for f in &self.families {
            let rate = f
                .success_rate
                .map(|r| format!("{:.0}%", r * 100.0))
                .unwrap_or_else(|| "n/a".into());
            let bests: Vec<String> = f.runs.iter().map(|r| r.best.to_string()).collect();
            out.push_str(&format!(
                "{:<24} factors {:>3}  ops {:>3}  mutations {:>3}  success {:>5}  final best [{}]\n",
                f.name,
                f.factor_orders.len(),
                f.op_count,
                f.mutation_count,
                rate,
                bests.join(", ")
            ));
        }
        out
    }
}
