//! Crossover and engine properties.

mod common;

use genetic_groupoid::constructions::ProductShape;
use genetic_groupoid::ga::{
    crossover, with_jobs, ExperimentConfig, GaConfig, GaRun, MutationSet, SolutionSpace,
};
use genetic_groupoid::ga::experiment::run_experiment;
use genetic_groupoid::ga::fitness::FitnessSpec;
use genetic_groupoid::NGroupoid;
use proptest::prelude::*;

fn space_around(g: genetic_groupoid::Groupoid) -> SolutionSpace {
    SolutionSpace::new(
        ProductShape::new(vec![NGroupoid::bare(1), g.into(), NGroupoid::bare(2)]).unwrap(),
    )
}

fn points(space: &SolutionSpace) -> Vec<Vec<usize>> {
    let shape = space.shape();
    (0..shape.carrier_size().unwrap()).map(|r| shape.unrank(r)).collect()
}

#[test]
fn crossover_laws_hold_for_every_order_3_table() {
    for g in common::brute_force_genetic(3) {
        let space = space_around(g);
        let pts = points(&space);
        for op in 0..space.flat_op_count() {
            for a in &pts {
                for b in &pts {
                    let (c1, c2) = crossover(&space, a, b, op).unwrap();
                    let (d1, d2) = crossover(&space, b, a, op).unwrap();
                    assert_eq!((&c1, &c2), (&d2, &d1));
                    if a == b {
                        assert_eq!((&c1, &c2), (a, a));
                    } else {
                        assert_ne!(c1, c2);
                    }
                    space.shape().validate_point(&c1).unwrap();
                }
            }
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(32))]

    #[test]
    fn mutants_stay_in_space(g in common::genetic_table(4), seed in any::<u64>()) {
        use rand::SeedableRng;
        let space = space_around(g);
        let muts = MutationSet::from_automorphisms(&space, 0.7).unwrap();
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
        for p in points(&space).iter().take(20) {
            let m = genetic_groupoid::ga::mutate(p, &muts, &mut rng);
            prop_assert!(space.shape().validate_point(&m).is_ok());
        }
    }
}

#[test]
fn trajectory_is_independent_of_worker_count() {
    let cfg = ExperimentConfig::from_json(include_str!("../configs/families.json")).unwrap();
    let one = with_jobs(Some(1), || run_experiment(&cfg).unwrap());
    let four = with_jobs(Some(4), || run_experiment(&cfg).unwrap());
    assert_eq!(one.to_csv(), four.to_csv());
    assert_eq!(one.to_json(), four.to_json());
}

#[test]
fn different_seeds_differ() {
    let space = SolutionSpace::new(
        genetic_groupoid::constructions::SplicingSpec::uniform(9, 1).shape(),
    );
    let fit = FitnessSpec::Name("onemax".into()).build(&space).unwrap();
    let muts = MutationSet::from_automorphisms(&space, 0.05).unwrap();
    let pop = |seed| {
        GaRun::new(&space, fit.as_ref(), &muts, GaConfig::new(16, 3, seed))
            .unwrap()
            .population()
            .to_vec()
    };
    assert_ne!(pop(1), pop(2));
    assert_eq!(pop(1), pop(1));
}

#[test]
fn bundled_configs_run() {
    for text in [
        include_str!("../configs/classical.json"),
        include_str!("../configs/nonassociative.json"),
        include_str!("../configs/partially_associative.json"),
        include_str!("../configs/families.json"),
    ] {
        let cfg = ExperimentConfig::from_json(text).unwrap();
        let report = run_experiment(&cfg).unwrap();
        assert_eq!(report.families.len(), cfg.families.len());
        for f in &report.families {
            assert_eq!(f.mean_best_curve.len(), cfg.generations + 1);
        }
    }
}
