//! Genetic algorithms whose crossovers are the operations of a factored
//! genetic n-groupoid and whose mutations are factor automorphisms.

pub mod engine;
pub mod experiment;
pub mod fitness;
pub mod space;

pub use engine::{with_jobs, GaConfig, GaRun, GenerationStats};
pub use experiment::{run_experiment, ExperimentConfig, ExperimentReport, FamilyConfig};
pub use fitness::{Fitness, FitnessSpec, OneMax, Trap, WeightedLinear};
pub use space::{crossover, mutate, MutationEntry, MutationSet, SolutionSpace};
