//! Crossover and mutation on a factored space, one step at a time.

use genetic_groupoid::constructions::{render_tuple, ProductShape};
use genetic_groupoid::ga::{crossover, mutate, MutationSet, SolutionSpace};
use genetic_groupoid::names::GroupoidName;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn main() -> genetic_groupoid::Result<()> {
    let mut factors = Vec::new();
    for n in ["000/111", "bare:1", "020/112"] {
        factors.extend(GroupoidName::parse(n)?.factors()?);
    }
    let space = SolutionSpace::new(ProductShape::new(factors)?);
    let (a, b) = (vec![0, 1, 2], vec![2, 0, 1]);
    for op in 0..space.flat_op_count() {
        let (c1, c2) = crossover(&space, &a, &b, op)?;
        println!("op {op}: {} {}", render_tuple(&c1), render_tuple(&c2));
    }
    let mutations = MutationSet::from_automorphisms(&space, 0.5)?;
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for _ in 0..4 {
        println!("mutant of {}: {}", render_tuple(&a), render_tuple(&mutate(&a, &mutations, &mut rng)));
    }
    Ok(())
}
