//! The ten acceptance criteria, one PASS/FAIL line each. Exits nonzero if
//! any criterion fails.
//!
//!     cargo test --test acceptance

use std::process::{Command, ExitCode};
use std::time::{Duration, Instant};

use genetic_groupoid::constructions::{genetic_product, splice, ProductShape};
use genetic_groupoid::enumeration::{census, enumerate_genetic, ORDER4_CLASS_COUNT};
use genetic_groupoid::ga::{crossover, run_experiment, ExperimentConfig, SolutionSpace};
use genetic_groupoid::verify::{
    verify_lemma1, verify_not_variety, verify_theorem1_suite, verify_theorem2,
    CLAIMED_ORDER3_CLASSES, Verdict,
};
use genetic_groupoid::NGroupoid;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn within(limit: Duration, started: Instant, detail: String) -> Outcome {
    let took = started.elapsed();
    if took <= limit {
        Ok(format!("{detail} ({took:.2?})"))
    } else {
        Err(format!("{detail}, but took {took:.2?} (limit {limit:?})"))
    }
}

fn verdict(report: &genetic_groupoid::verify::TheoremReport, name: &str) -> bool {
    report.check(name).map(|c| c.verdict == Verdict::Pass).unwrap_or(false)
}

/// Order-3 census: 216 raw tables, 18 classes, one associative class which
/// is a rectangular band.
fn criterion_1() -> Outcome {
    let t = Instant::now();
    let c = census(3).map_err(|e| e.to_string())?;
    let assoc: Vec<_> = c.classes.iter().filter(|x| x.associative).collect();
    let raw_ok = c.raw_count == 216;
    let count_ok = c.class_count() == CLAIMED_ORDER3_CLASSES;
    let assoc_ok = assoc.len() == 1 && assoc[0].rectangular_band;
    let detail = format!(
        "raw tables {} (want 216: {}), classes {} (want {}: {}), associative classes {} all bands: {}",
        c.raw_count,
        ok(raw_ok),
        c.class_count(),
        CLAIMED_ORDER3_CLASSES,
        ok(count_ok),
        assoc.len(),
        ok(assoc_ok)
    );
    if raw_ok && count_ok && assoc_ok {
        within(Duration::from_secs(1), t, detail)
    } else {
        Err(detail)
    }
}

fn ok(b: bool) -> &'static str {
    if b {
        "ok"
    } else {
        "MISMATCH"
    }
}

/// The reference list parses, is genetic, pairwise inequivalent and
/// bijects onto the census classes.
fn criterion_2() -> Outcome {
    let t = Instant::now();
    let r = verify_theorem2();
    let parts = [
        "list parses",
        "listed tables are genetic",
        "listed tables pairwise inequivalent",
        "list covers every census class",
        "census class count matches the list",
    ];
    let failed: Vec<String> = parts
        .iter()
        .filter(|p| !verdict(&r, p))
        .map(|p| format!("{p}: {}", r.check(p).map_or("missing", |c| c.detail.as_str())))
        .collect();
    if failed.is_empty() {
        within(Duration::from_secs(1), t, "list bijects onto the census classes".into())
    } else {
        Err(failed.join(" | "))
    }
}

/// `((111) x2 (101)) x1 (000) = (100)` and `(111) x2 ((101) x1 (000)) = (110)`.
fn criterion_3() -> Outcome {
    let (a, b, c) = ([1, 1, 1], [1, 0, 1], [0, 0, 0]);
    let left = splice(&splice(&a, &b, 2), &c, 1);
    let right = splice(&a, &splice(&b, &c, 1), 2);
    // same computation through the factored product
    let shape = genetic_groupoid::constructions::SplicingSpec::uniform(2, 1).shape();
    let x1 = shape.multiply(&shape.multiply(&a, &b, 1).unwrap(), &c, 0).unwrap();
    let x2 = shape.multiply(&a, &shape.multiply(&b, &c, 0).unwrap(), 1).unwrap();
    let detail = format!("left {left:?}, right {right:?}");
    if left == [1, 0, 0] && right == [1, 1, 0] && x1 == left && x2 == right {
        Ok(detail)
    } else {
        Err(detail)
    }
}

fn criterion_4() -> Outcome {
    let t = Instant::now();
    let r = verify_lemma1();
    let ga1 = [
        "GA(1,1) ≅ G(0,1) *G G(0,1)",
        "GA(1,2) ≅ G(0,2) *G G(0,2)",
    ]
    .iter()
    .all(|n| verdict(&r, n));
    let triples = r
        .checks
        .iter()
        .filter(|c| c.name.starts_with('(') && c.name.contains(" ≅ ") && c.verdict == Verdict::Pass)
        .count();
    let noncomm = verdict(&r, "A *G B ≇ B *G A for some pair");
    let fails = r.failures().count();
    let detail = format!(
        "GA(1,d) decompositions: {}, associativity triples passing: {triples}, non-commuting pair: {}, failing checks: {fails}",
        ok(ga1),
        ok(noncomm)
    );
    if ga1 && triples >= 5 && noncomm && fails == 0 {
        within(Duration::from_secs(60), t, detail)
    } else {
        Err(detail)
    }
}

fn criterion_5() -> Outcome {
    let t = Instant::now();
    let r = verify_theorem1_suite();
    let passing = r.checks.iter().filter(|c| c.verdict == Verdict::Pass).count();
    let detail = format!("{passing} of {} band families isomorphic to splicing groupoids", r.checks.len());
    if passing >= 3 && r.passed() {
        within(Duration::from_secs(60), t, detail)
    } else {
        Err(detail)
    }
}

fn criterion_6() -> Outcome {
    let r = verify_not_variety();
    let detail: Vec<String> = r
        .checks
        .iter()
        .map(|c| format!("{}: {:?}", c.name, c.verdict))
        .collect();
    if r.passed() && r.checks.len() == 4 {
        Ok(detail.join("; "))
    } else {
        Err(detail.join("; "))
    }
}

fn criterion_7() -> Outcome {
    let gen3 = enumerate_genetic(3).map_err(|e| e.to_string())?;
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let mut bad = Vec::new();
    for _ in 0..50 {
        let a: NGroupoid = gen3[rng.gen_range(0..gen3.len())].clone().into();
        let b: NGroupoid = gen3[rng.gen_range(0..gen3.len())].clone().into();
        let p = genetic_product(&a, &b).map_err(|e| e.to_string())?;
        if !p.ops().iter().all(|op| op.is_genetic()) {
            bad.push(format!("{} * {}", a.ops()[0], b.ops()[0]));
        }
    }
    if bad.is_empty() {
        Ok("50 random pairs, every operation genetic".into())
    } else {
        Err(format!("non-genetic products: {}", bad.join(", ")))
    }
}

fn criterion_8() -> Outcome {
    let gen3 = enumerate_genetic(3).map_err(|e| e.to_string())?;
    let mut cases = 0usize;
    for g in &gen3 {
        let space = SolutionSpace::new(
            ProductShape::new(vec![NGroupoid::bare(1), g.clone().into(), NGroupoid::bare(1)]).unwrap(),
        );
        let shape = space.shape();
        let n = shape.carrier_size().unwrap();
        for op in 0..space.flat_op_count() {
            for p in 0..n {
                for q in 0..n {
                    let (a, b) = (shape.unrank(p), shape.unrank(q));
                    let (c1, c2) = crossover(&space, &a, &b, op).map_err(|e| e.to_string())?;
                    cases += 1;
                    if p == q && (c1 != a || c2 != a) {
                        return Err(format!("{g}: op {op} moves the equal pair {a:?}"));
                    }
                    if p != q && c1 == c2 {
                        return Err(format!("{g}: op {op} gives equal children for {a:?}, {b:?}"));
                    }
                }
            }
        }
    }
    let csv = |jobs: &str| {
        Command::new(env!("CARGO_BIN_EXE_gengroupoid"))
            .args(["run-ga", "configs/families.json", "--format", "csv", "--jobs", jobs])
            .current_dir(env!("CARGO_MANIFEST_DIR"))
            .output()
            .map_err(|e| e.to_string())
    };
    let (one, again, four) = (csv("1")?, csv("1")?, csv("4")?);
    if !one.status.success() || one.stdout.is_empty() {
        return Err(format!("run-ga failed: {}", String::from_utf8_lossy(&one.stderr)));
    }
    if one.stdout != again.stdout || one.stdout != four.stdout {
        return Err("CSV differs between identical runs or between --jobs 1 and --jobs 4".into());
    }
    Ok(format!(
        "{} tables, {cases} crossovers checked; CSV identical across reruns and --jobs 1/4",
        gen3.len()
    ))
}

fn criterion_9() -> Outcome {
    let t = Instant::now();
    let cfg = ExperimentConfig::from_json(include_str!("../configs/classical.json"))
        .map_err(|e| e.to_string())?;
    let shape_ok = cfg.population == 64
        && cfg.generations == 200
        && cfg.tournament_size == 2
        && cfg.elitism == 1
        && cfg.mutation_probability == 0.05
        && cfg.seeds.len() == 10;
    if !shape_ok {
        return Err("bundled classical config does not match the pinned parameters".into());
    }
    let report = run_experiment(&cfg).map_err(|e| e.to_string())?;
    let fam = &report.families[0];
    if fam.factor_orders != vec![2; 16] {
        return Err(format!("expected 16 binary coordinates, got {:?}", fam.factor_orders));
    }
    let hits = fam.runs.iter().filter(|r| r.hit_generation.is_some()).count();
    let detail = format!("{hits} of 10 seeds reached the optimum 16 within 200 generations");
    if hits >= 8 {
        within(Duration::from_secs(10), t, detail)
    } else {
        Err(detail)
    }
}

fn criterion_10() -> Outcome {
    let t = Instant::now();
    let c = census(4).map_err(|e| e.to_string())?;
    let detail = format!(
        "{} raw tables, {} classes (pinned {ORDER4_CLASS_COUNT})",
        c.raw_count,
        c.class_count()
    );
    if c.raw_count == 2_985_984 && c.class_count() == ORDER4_CLASS_COUNT {
        within(Duration::from_secs(300), t, detail)
    } else {
        Err(detail)
    }
}

fn main() -> ExitCode {
    let criteria: [Criterion; 10] = [
        ("order-3 census counts", criterion_1),
        ("reference order-3 list", criterion_2),
        ("splicing nonassociativity example", criterion_3),
        ("genetic product decompositions", criterion_4),
        ("band products are splicing groupoids", criterion_5),
        ("homomorphic image leaves the class", criterion_6),
        ("genetic products stay genetic", criterion_7),
        ("crossover laws and determinism", criterion_8),
        ("OneMax convergence", criterion_9),
        ("order-4 census regression", criterion_10),
    ];
    let mut failed = 0;
    for (i, (name, run)) in criteria.iter().enumerate() {
        match run() {
            Ok(d) => println!("criterion {:>2} PASS  {name}: {d}", i + 1),
            Err(d) => {
                failed += 1;
                println!("criterion {:>2} FAIL  {name}: {d}", i + 1);
            }
        }
    }
    println!("{} of {} criteria passed", criteria.len() - failed, criteria.len());
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
