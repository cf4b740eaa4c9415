//! Generational loop: tournament selection, groupoid crossover emitting both
//! children, automorphism mutation and elitist replacement.
//!
//! Randomness comes from one root seed. Selection in generation `g` draws
//! from the stream `(g, SELECT)`; offspring pair `j` draws its operation and
//! mutations from the stream `(g, j)`; initial individual `i` from
//! `(0, INIT + i)`. Offspring and fitness are computed in parallel, and since
//! no stream is shared between workers the trajectory does not depend on
//! the worker count.

use rand::distributions::{Distribution, WeightedIndex};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::ga::fitness::Fitness;
use crate::ga::space::{mutate_in_place, MutationSet, SolutionSpace};
use crate::groupoid::Element;

const SELECT: u64 = u64::MAX;
const INIT: u64 = 1 << 62;

fn splitmix(mut x: u64) -> u64 {
    x = x.wrapping_add(0x9e37_79b9_7f4a_7c15);
    x = (x ^ (x >> 30)).wrapping_mul(0xbf58_476d_1ce4_e5b9);
    x = (x ^ (x >> 27)).wrapping_mul(0x94d0_49bb_1331_11eb);
    x ^ (x >> 31)
}

fn stream(seed: u64, generation: u64, slot: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(splitmix(splitmix(seed ^ splitmix(generation)) ^ slot))
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct GaConfig {
    pub population: usize,
    pub generations: usize,
    #[serde(default = "default_tournament")]
    pub tournament_size: usize,
    #[serde(default = "default_elitism")]
    pub elitism: usize,
    /// Relative weights over flat operation indices; uniform when absent.
    #[serde(default)]
    pub op_weights: Option<Vec<f64>>,
    pub seed: u64,
}

fn default_tournament() -> usize {
    2
}

fn default_elitism() -> usize {
    1
}

impl GaConfig {
    pub fn new(population: usize, generations: usize, seed: u64) -> Self {
        GaConfig {
            population,
            generations,
            tournament_size: default_tournament(),
            elitism: default_elitism(),
            op_weights: None,
            seed,
        }
    }

    /// All problems with this configuration against `space`.
    pub fn problems(&self, space: &SolutionSpace) -> Vec<String> {
        let mut out = self.general_problems();
        out.extend(self.space_problems(space));
        out
    }

    /// Problems that do not depend on the space.
    pub fn general_problems(&self) -> Vec<String> {
        let mut out = Vec::new();
        if self.population < 2 {
            out.push(format!("population must be at least 2, got {}", self.population));
        }
        if self.tournament_size == 0 {
            out.push("tournament size must be positive".into());
        }
        if self.elitism >= self.population.max(1) {
            out.push(format!(
                "elitism {} leaves no room for offspring in population {}",
                self.elitism, self.population
            ));
        }
        out
    }

    pub fn space_problems(&self, space: &SolutionSpace) -> Vec<String> {
        let mut out = Vec::new();
        if space.flat_op_count() == 0 {
            out.push("space has no operations to cross over with".into());
        }
        if let Some(w) = &self.op_weights {
            if w.len() != space.flat_op_count() {
                out.push(format!(
                    "{} op weights for {} operations",
                    w.len(),
                    space.flat_op_count()
                ));
            } else if w.iter().any(|x| !x.is_finite() || *x < 0.0) || w.iter().sum::<f64>() <= 0.0 {
                out.push("op weights must be non-negative with a positive sum".into());
            }
        }
        out
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct GenerationStats {
    pub generation: usize,
    pub best: f64,
    pub mean: f64,
    /// Number of distinct individuals.
    pub diversity: usize,
}

pub struct GaRun<'a> {
    space: &'a SolutionSpace,
    fitness: &'a dyn Fitness,
    mutations: &'a MutationSet,
    config: GaConfig,
    ops: Option<WeightedIndex<f64>>,
    population: Vec<Vec<Element>>,
    scores: Vec<f64>,
    generation: usize,
    history: Vec<GenerationStats>,
}

impl<'a> GaRun<'a> {
    /// Validates the configuration and draws and scores the initial
    /// population.
    pub fn new(
        space: &'a SolutionSpace,
        fitness: &'a dyn Fitness,
        mutations: &'a MutationSet,
        config: GaConfig,
    ) -> Result<Self> {
        let problems = config.problems(space);
        if !problems.is_empty() {
            return Err(Error::Config(problems));
        }
        let ops = match &config.op_weights {
            Some(w) => Some(WeightedIndex::new(w).map_err(|e| Error::Config(vec![e.to_string()]))?),
            None => None,
        };
        let population: Vec<Vec<Element>> = (0..config.population as u64)
            .into_par_iter()
            .map(|i| space.random_point(&mut stream(config.seed, 0, INIT + i)))
            .collect();
        let mut run = GaRun {
            space,
            fitness,
            mutations,
            config,
            ops,
            scores: Vec::new(),
            population,
            generation: 0,
            history: Vec::new(),
        };
        run.evaluate();
        Ok(run)
    }

    /// Starts from a given population instead of a random one.
    pub fn with_population(
        space: &'a SolutionSpace,
        fitness: &'a dyn Fitness,
        mutations: &'a MutationSet,
        config: GaConfig,
        population: Vec<Vec<Element>>,
    ) -> Result<Self> {
        let mut problems = config.problems(space);
        if population.len() != config.population {
            problems.push(format!(
                "{} individuals given for population {}",
                population.len(),
                config.population
            ));
        }
        for (i, p) in population.iter().enumerate() {
            if let Err(e) = space.shape().validate_point(p) {
                problems.push(format!("individual {i}: {e}"));
            }
        }
        if !problems.is_empty() {
            return Err(Error::Config(problems));
        }
        let mut run = GaRun::new(space, fitness, mutations, config)?;
        run.population = population;
        run.history.clear();
        run.evaluate();
        Ok(run)
    }

    pub fn population(&self) -> &[Vec<Element>] {
        &self.population
    }

    pub fn scores(&self) -> &[f64] {
        &self.scores
    }

    pub fn generation(&self) -> usize {
        self.generation
    }

    pub fn history(&self) -> &[GenerationStats] {
        &self.history
    }

    pub fn best(&self) -> (&[Element], f64) {
        let i = self.ranking()[0];
        (&self.population[i], self.scores[i])
    }

    fn evaluate(&mut self) {
        let fitness = self.fitness;
        self.scores = self.population.par_iter().map(|p| fitness.evaluate(p)).collect();
        let best = self.scores.iter().copied().fold(f64::NEG_INFINITY, f64::max);
        let mean = self.scores.iter().sum::<f64>() / self.scores.len() as f64;
        let mut distinct = self.population.clone();
        distinct.sort_unstable();
        distinct.dedup();
        self.history.push(GenerationStats {
            generation: self.generation,
            best,
            mean,
            diversity: distinct.len(),
        });
    }

    /// Indices by descending score, ties to the lower index.
    fn ranking(&self) -> Vec<usize> {
        let mut idx: Vec<usize> = (0..self.population.len()).collect();
        idx.sort_by(|&a, &b| self.scores[b].total_cmp(&self.scores[a]).then(a.cmp(&b)));
        idx
    }

    fn tournament(&self, rng: &mut ChaCha8Rng) -> usize {
        let n = self.population.len();
        let mut best = rng.gen_range(0..n);
        for _ in 1..self.config.tournament_size {
            let c = rng.gen_range(0..n);
            if self.scores[c] > self.scores[best] || (self.scores[c] == self.scores[best] && c < best) {
                best = c;
            }
        }
        best
    }

    /// Advances one generation.
    pub fn step(&mut self) {
        let g = (self.generation + 1) as u64;
        let elite = self.config.elitism;
        let needed = self.config.population - elite;
        let pairs = needed.div_ceil(2);

        let mut sel = stream(self.config.seed, g, SELECT);
        let parents: Vec<(usize, usize)> = (0..pairs)
            .map(|_| (self.tournament(&mut sel), self.tournament(&mut sel)))
            .collect();

        let space = self.space;
        let mutations = self.mutations;
        let ops = self.ops.as_ref();
        let op_count = space.flat_op_count();
        let seed = self.config.seed;
        let population = &self.population;
        let children: Vec<[Vec<Element>; 2]> = parents
            .par_iter()
            .enumerate()
            .map(|(j, &(a, b))| {
                let mut rng = stream(seed, g, j as u64);
                let op = match ops {
                    Some(w) => w.sample(&mut rng),
                    None => rng.gen_range(0..op_count),
                };
                let (pa, pb) = (&population[a], &population[b]);
                let mut c1 = vec![0; pa.len()];
                let mut c2 = vec![0; pa.len()];
                space.shape().multiply_into(pa, pb, op, &mut c1);
                space.shape().multiply_into(pb, pa, op, &mut c2);
                mutate_in_place(&mut c1, mutations, &mut rng);
                mutate_in_place(&mut c2, mutations, &mut rng);
                debug_assert!(space.shape().validate_point(&c1).is_ok());
                debug_assert!(space.shape().validate_point(&c2).is_ok());
                [c1, c2]
            })
            .collect();

        let ranking = self.ranking();
        let mut next: Vec<Vec<Element>> =
            ranking[..elite].iter().map(|&i| self.population[i].clone()).collect();
        next.extend(children.into_iter().flatten().take(needed));
        self.population = next;
        self.generation += 1;
        self.evaluate();
    }

    /// Runs the configured number of generations.
    pub fn run(&mut self) {
        while self.generation < self.config.generations {
            self.step();
        }
    }
}

/// Runs `f` on a dedicated pool of `jobs` workers, or on the global pool.
pub fn with_jobs<T: Send>(jobs: Option<usize>, f: impl FnOnce() -> T + Send) -> T {
    match jobs {
        Some(n) => rayon::ThreadPoolBuilder::new()
            .num_threads(n.max(1))
            .build()
            .expect("thread pool")
            .install(f),
        None => f(),
    }
}
