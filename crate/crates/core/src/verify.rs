//! Machine checks of the structural claims about genetic groupoids: the
//! order-3 classification list, splicing decompositions of band products,
//! the genetic-product identities, and the failure of closure under
//! homomorphic images.
//!
//! Checkers never throw on a mismatch. Each claim becomes a [`Check`] with a
//! verdict and the evidence needed to re-verify it: a morphism witness for a
//! claimed isomorphism, the concrete tables for a counterexample.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};
use std::fmt::Write as _;

use crate::constructions::{
    genetic_extension, genetic_product, product_chain, splicing_groupoid, ProductShape,
    SplicingSpec,
};
use crate::enumeration::{census, CensusReport, GeneticTables};
use crate::error::{Error, Result};
use crate::groupoid::{Groupoid, NGroupoid, FORMAT_VERSION};
use crate::morphisms::{
    automorphism_group, find_isomorphism, find_isomorphism_with, is_automorphism,
    lift_automorphism, MorphismWitness, SearchConfig,
};

/// The seventeen nonassociative order-3 tables listed as the class 𝔐, in
/// compact notation.
pub const NONASSOCIATIVE_LIST: [&str; 17] = [
    "000/111", "000/222", "000/112", "000/121", "000/211", "000/221", "000/212", "000/122",
    "100/221", "011/122", "011/221", "002/121", "020/112", "200/112", "111/020", "111/200",
    "111/002",
];

/// The one associative order-3 genetic table, the left-zero band.
pub const ASSOCIATIVE_ENTRY: &str = "001/122";

/// Count of order-3 classes the reference list asserts.
pub const CLAIMED_ORDER3_CLASSES: usize = 18;

/// Search cap for the splicing decomposition identities, whose smallest
/// non-trivial instances have 16 elements.
pub const DECOMPOSITION_SEARCH_CAP: usize = 16;

const SAMPLING_SEED: u64 = 0x0067_656e_6574_6963;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "UPPERCASE")]
pub enum Verdict {
    Pass,
    Fail,
    Skipped,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "type", rename_all = "snake_case")]
pub enum Evidence {
    /// `witness` maps `source` onto `target`.
    Morphism {
        source: String,
        target: String,
        witness: MorphismWitness,
    },
    /// Concrete tables a claim was decided on.
    Instance {
        description: String,
        tables: Vec<NGroupoid>,
    },
    /// Claim decided by checking every case; `cases` counts them.
    Exhaustive { description: String, cases: usize },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Check {
    pub name: String,
    pub verdict: Verdict,
    pub detail: String,
    pub evidence: Vec<Evidence>,
}

impl Check {
    fn new(name: impl Into<String>, verdict: Verdict, detail: impl Into<String>) -> Self {
        Check {
            name: name.into(),
            verdict,
            detail: detail.into(),
            evidence: Vec::new(),
        }
    }

    fn pass_if(name: impl Into<String>, ok: bool, detail: impl Into<String>) -> Self {
        Check::new(name, if ok { Verdict::Pass } else { Verdict::Fail }, detail)
    }

    fn with(mut self, e: Evidence) -> Self {
        self.evidence.push(e);
        self
    }

    fn skipped(name: impl Into<String>, err: &Error) -> Self {
        Check::new(name, Verdict::Skipped, err.to_string())
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TheoremReport {
    pub format_version: u32,
    pub theorem: String,
    pub checks: Vec<Check>,
}

impl TheoremReport {
    fn new(theorem: &str) -> Self {
        TheoremReport {
            format_version: FORMAT_VERSION,
            theorem: theorem.into(),
            checks: Vec::new(),
        }
    }

    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| c.verdict == Verdict::Fail)
    }

    /// No check failed. Skipped checks do not count as failures.
    pub fn passed(&self) -> bool {
        self.failures().next().is_none()
    }

    pub fn check(&self, name: &str) -> Option<&Check> {
        self.checks.iter().find(|c| c.name == name)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report JSON is infallible")
    }

    pub fn to_text(&self) -> String {
        let mut out = format!("== {} ==\n", self.theorem);
        for c in &self.checks {
            let tag = match c.verdict {
                Verdict::Pass => "PASS",
                Verdict::Fail => "FAIL",
                Verdict::Skipped => "SKIP",
            };
            let _ = writeln!(out, "[{tag}] {}: {}", c.name, c.detail);
        }
        out
    }
}

fn label(g: &Groupoid) -> String {
    g.to_compact3()
        .ok()
        .filter(|s| Groupoid::parse_compact3(s).as_ref() == Ok(g))
        .unwrap_or_else(|| g.to_string())
}

/// Parses the reference order-3 list and compares it with an independent
/// census: genetic, pairwise inequivalent, covering every class, and with
/// exactly one associative member.
pub fn verify_theorem2() -> TheoremReport {
    let mut report = TheoremReport::new("theorem2");
    let census = census(3).expect("order 3 is within the census cap");

    let mut listed = Vec::new();
    let mut parse_errors = Vec::new();
    for s in NONASSOCIATIVE_LIST.iter().chain([&ASSOCIATIVE_ENTRY]) {
        match Groupoid::parse_compact3(s) {
            Ok(g) => listed.push((*s, g)),
            Err(e) => parse_errors.push(format!("{s}: {e}")),
        }
    }
    report.checks.push(Check::pass_if(
        "list parses",
        parse_errors.is_empty(),
        if parse_errors.is_empty() {
            format!("{} tables parsed", listed.len())
        } else {
            parse_errors.join("; ")
        },
    ));

    let non_genetic: Vec<&str> = listed.iter().filter(|(_, g)| !g.is_genetic()).map(|(s, _)| *s).collect();
    report.checks.push(
        Check::pass_if(
            "listed tables are genetic",
            non_genetic.is_empty(),
            if non_genetic.is_empty() {
                "idempotent and nowhere commutative".to_string()
            } else {
                format!("not genetic: {}", non_genetic.join(", "))
            },
        )
        .with(Evidence::Exhaustive {
            description: "diagonal and mirrored cells of every listed table".into(),
            cases: listed.len(),
        }),
    );

    report.checks.push(pairwise_distinct_check(&listed));
    report.checks.push(coverage_check(&census, &listed));

    report.checks.push(
        Check::pass_if(
            "census class count matches the list",
            census.class_count() == CLAIMED_ORDER3_CLASSES,
            format!(
                "census finds {} classes among {} tables, list claims {}",
                census.class_count(),
                census.raw_count,
                CLAIMED_ORDER3_CLASSES
            ),
        )
        .with(Evidence::Exhaustive {
            description: "every order-3 genetic table classified by orbit minimum".into(),
            cases: census.raw_count,
        }),
    );

    let associative: Vec<&str> = listed.iter().filter(|(_, g)| g.is_associative()).map(|(s, _)| *s).collect();
    report.checks.push(Check::pass_if(
        "only the band entry is associative",
        associative == [ASSOCIATIVE_ENTRY],
        format!("associative listed tables: [{}]", associative.join(", ")),
    ));

    let bands: Vec<_> = census.classes.iter().filter(|c| c.associative).collect();
    report.checks.push(Check::pass_if(
        "census has one associative class, a rectangular band",
        bands.len() == 1 && bands[0].rectangular_band,
        format!(
            "associative classes: [{}]",
            bands.iter().map(|c| label(&c.representative)).collect::<Vec<_>>().join(", ")
        ),
    ));
    report
}

fn pairwise_distinct_check(listed: &[(&str, Groupoid)]) -> Check {
    let mut clashes = Vec::new();
    let mut searches = 0;
    for (i, (sa, a)) in listed.iter().enumerate() {
        for (sb, b) in &listed[i + 1..] {
            searches += 1;
            let (na, nb): (NGroupoid, NGroupoid) = (a.clone().into(), b.clone().into());
            if let Some(w) = find_isomorphism(&na, &nb, true, false).expect("order 3 is within cap") {
                clashes.push(Evidence::Morphism {
                    source: sa.to_string(),
                    target: sb.to_string(),
                    witness: w,
                });
            }
        }
    }
    let detail = if clashes.is_empty() {
        format!("{searches} pairs searched, none equivalent")
    } else {
        let pairs: Vec<String> = clashes
            .iter()
            .map(|e| match e {
                Evidence::Morphism { source, target, witness } => {
                    format!("{source} ~ {target} ({:?})", witness.kind)
                }
                _ => unreachable!(),
            })
            .collect();
        format!("equivalent pairs: {}", pairs.join(", "))
    };
    let mut check = Check::pass_if("listed tables pairwise inequivalent", clashes.is_empty(), detail);
    check.evidence = clashes;
    if check.evidence.is_empty() {
        check.evidence.push(Evidence::Exhaustive {
            description: "isomorphism and anti-isomorphism search on every pair".into(),
            cases: searches,
        });
    }
    check
}

fn coverage_check(census: &CensusReport, listed: &[(&str, Groupoid)]) -> Check {
    let mut hit = vec![false; census.class_count()];
    let mut evidence = Vec::new();
    for (s, g) in listed {
        let Some(i) = census.class_of(g) else { continue };
        hit[i] = true;
        let (src, rep): (NGroupoid, NGroupoid) =
            (g.clone().into(), census.classes[i].representative.clone().into());
        if let Some(w) = find_isomorphism(&src, &rep, true, false).expect("order 3 is within cap") {
            evidence.push(Evidence::Morphism {
                source: s.to_string(),
                target: label(&census.classes[i].representative),
                witness: w,
            });
        }
    }
    let missing: Vec<&Groupoid> = census
        .classes
        .iter()
        .zip(&hit)
        .filter(|(_, &h)| !h)
        .map(|(c, _)| &c.representative)
        .collect();
    let detail = if missing.is_empty() {
        format!("all {} census classes contain a listed table", census.class_count())
    } else {
        format!(
            "{} of {} census classes have no listed table: {}",
            missing.len(),
            census.class_count(),
            missing.iter().map(|g| label(g)).collect::<Vec<_>>().join(", ")
        )
    };
    let mut check = Check::pass_if("list covers every census class", missing.is_empty(), detail);
    if !missing.is_empty() {
        check.evidence.push(Evidence::Instance {
            description: "census classes missing from the list".into(),
            tables: missing.into_iter().map(|g| g.clone().into()).collect(),
        });
    }
    check.evidence.extend(evidence);
    check
}

/// Splicing dimensions matching a chain of rectangular bands: a band with
/// `n` row classes and `m` column classes contributes `(n-1, m-1)`.
pub fn band_chain_spec(factors: &[Groupoid]) -> Result<SplicingSpec> {
    let mut dims = Vec::with_capacity(2 * factors.len());
    for (i, f) in factors.iter().enumerate() {
        if !f.is_rectangular_band() {
            return Err(Error::Validation(format!(
                "factor {i} ({}) is not a rectangular band",
                label(f)
            )));
        }
        let (n, m) = f.band_dimensions();
        dims.extend([n - 1, m - 1]);
    }
    if factors.is_empty() {
        return Err(Error::Domain("need at least one factor".into()));
    }
    SplicingSpec::new(2 * factors.len() - 1, dims)
}

fn describe_spec(spec: &SplicingSpec) -> String {
    let dims: Vec<String> = spec.dims().iter().map(ToString::to_string).collect();
    format!("GA({}; {})", spec.op_count(), dims.join(","))
}

/// Builds the genetic product of the band factors and searches for an
/// n-groupoid isomorphism onto the splicing groupoid with derived dims,
/// first with operations matched in order, then with any operation
/// bijection.
pub fn theorem1_instance(factors: &[Groupoid], cfg: SearchConfig) -> Result<Check> {
    let spec = band_chain_spec(factors)?;
    let names: Vec<String> = factors
        .iter()
        .map(|f| {
            let (n, m) = f.band_dimensions();
            format!("{n}x{m}")
        })
        .collect();
    let name = format!("bands [{}] ≅ {}", names.join(" * "), describe_spec(&spec));
    let factors_n: Vec<NGroupoid> = factors.iter().cloned().map(Into::into).collect();
    let product = product_chain(&factors_n)?;
    let target = match splicing_groupoid(&spec) {
        Ok(t) => t,
        Err(e) => return Ok(Check::skipped(name, &e)),
    };
    let mut outcome = None;
    for (permute, mode) in [(false, "exact"), (true, "permuted")] {
        match find_isomorphism_with(&product, &target, false, permute, cfg) {
            Ok(Some(w)) => {
                outcome = Some((w, mode));
                break;
            }
            Ok(None) => {}
            Err(e) => return Ok(Check::skipped(name, &e)),
        }
    }
    Ok(match outcome {
        Some((w, mode)) => {
            let ok = w.verify(&product, &target);
            Check::pass_if(
                name.clone(),
                ok,
                format!("witness found with {mode} operation matching, verified={ok}"),
            )
            .with(Evidence::Morphism {
                source: format!("product of bands [{}]", names.join(" * ")),
                target: describe_spec(&spec),
                witness: w,
            })
        }
        None => Check::new(name, Verdict::Fail, "no isomorphism under any operation matching").with(
            Evidence::Instance {
                description: "product and splicing groupoid".into(),
                tables: vec![product, target],
            },
        ),
    })
}

pub fn verify_theorem1(factors: &[Groupoid]) -> Result<TheoremReport> {
    let mut report = TheoremReport::new("theorem1");
    report.checks.push(theorem1_instance(factors, SearchConfig::default())?);
    Ok(report)
}

/// Band families used when no factors are given.
pub fn theorem1_default_families() -> Vec<Vec<Groupoid>> {
    let band = |n, m| Groupoid::rectangular_band(n, m).expect("positive sides");
    vec![
        vec![band(2, 1)],
        vec![band(1, 3)],
        vec![band(2, 1), band(1, 2)],
        vec![band(1, 3), band(2, 1)],
        vec![Groupoid::parse_compact3(ASSOCIATIVE_ENTRY).expect("valid entry"), band(1, 2)],
        vec![band(1, 2), band(1, 2), band(1, 2)],
        vec![band(2, 1), band(1, 2), band(1, 3)],
    ]
}

pub fn verify_theorem1_suite() -> TheoremReport {
    let mut report = TheoremReport::new("theorem1");
    for family in theorem1_default_families() {
        report.checks.push(
            theorem1_instance(&family, SearchConfig::default())
                .expect("default families are bands"),
        );
    }
    report
}

fn iso_check(
    name: String,
    a: &NGroupoid,
    b: &NGroupoid,
    cfg: SearchConfig,
    source: &str,
    target: &str,
) -> Check {
    match find_isomorphism_with(a, b, false, false, cfg) {
        Ok(Some(w)) => {
            let ok = w.verify(a, b);
            Check::pass_if(name, ok, format!("witness verified={ok}")).with(Evidence::Morphism {
                source: source.into(),
                target: target.into(),
                witness: w,
            })
        }
        Ok(None) => Check::new(name, Verdict::Fail, "not isomorphic with operations in order").with(
            Evidence::Instance {
                description: format!("{source} vs {target}"),
                tables: vec![a.clone(), b.clone()],
            },
        ),
        Err(e) => Check::skipped(name, &e),
    }
}

/// Factor pool for the product identities: the census representatives of
/// order 3 and the bare two-element set.
fn lemma_pool() -> Vec<(String, NGroupoid)> {
    let mut pool = vec![("G(0,1)".to_string(), NGroupoid::bare(1))];
    for c in census(3).expect("order 3 is within the census cap").classes {
        pool.push((label(&c.representative), c.representative.into()));
    }
    pool
}

pub fn verify_lemma1() -> TheoremReport {
    let mut report = TheoremReport::new("lemma1");
    let cfg = SearchConfig::default();
    let wide = SearchConfig {
        max_order: DECOMPOSITION_SEARCH_CAP,
    };
    let ga = |n: usize, dims: Vec<usize>| {
        splicing_groupoid(&SplicingSpec::new(n, dims).expect("valid dims")).expect("small")
    };

    for d in 1..=2 {
        let lhs = ga(1, vec![d, d]);
        let bare = NGroupoid::bare(d);
        let prod = genetic_product(&bare, &bare).expect("small");
        report.checks.push(iso_check(
            format!("GA(1,{d}) ≅ G(0,{d}) *G G(0,{d})"),
            &lhs,
            &prod,
            cfg,
            &format!("GA(1,{d})"),
            "bare product",
        ));
        let ext = genetic_extension(&bare, d).expect("small");
        report.checks.push(iso_check(
            format!("GA(1,{d}) ≅ G(G(0,{d}))"),
            &lhs,
            &ext,
            cfg,
            &format!("GA(1,{d})"),
            "extension",
        ));
    }

    let pool = lemma_pool();
    let bare = &pool[0];
    let mut triples = vec![(bare, bare, bare)];
    for x in &pool[1..] {
        triples.extend([(x, bare, bare), (bare, x, bare), (bare, bare, x)]);
    }
    for (a, b, c) in triples {
        let left = genetic_product(&genetic_product(&a.1, &b.1).expect("small"), &c.1).expect("small");
        let right = genetic_product(&a.1, &genetic_product(&b.1, &c.1).expect("small")).expect("small");
        report.checks.push(iso_check(
            format!("({} * {}) * {} ≅ {} * ({} * {})", a.0, b.0, c.0, a.0, b.0, c.0),
            &left,
            &right,
            cfg,
            "left-bracketed product",
            "right-bracketed product",
        ));
    }

    for (a, b) in [
        (vec![1, 0], vec![0, 1]),
        (vec![1, 1], vec![1, 0]),
        (vec![0, 2], vec![1, 1]),
        (vec![1, 1], vec![1, 1]),
    ] {
        let lhs = ga(3, a.iter().chain(&b).copied().collect());
        let rhs = genetic_product(&ga(1, a.clone()), &ga(1, b.clone())).expect("small");
        report.checks.push(iso_check(
            format!("GA(3; {a:?} ++ {b:?}) ≅ GA(1; {a:?}) *G GA(1; {b:?})"),
            &lhs,
            &rhs,
            wide,
            "splicing groupoid",
            "product of splicing groupoids",
        ));
    }

    for d in 1..=2 {
        // GA(n, d) as n extensions of the bare set
        for n in 1..=3 {
            let lhs = ga(n, vec![d; n + 1]);
            if lhs.order() > wide.max_order {
                continue;
            }
            let mut rhs = NGroupoid::bare(d);
            for _ in 0..n {
                rhs = genetic_extension(&rhs, d).expect("small");
            }
            report.checks.push(iso_check(
                format!("GA({n},{d}) ≅ G^{n}(G(0,{d}))"),
                &lhs,
                &rhs,
                wide,
                "splicing groupoid",
                "iterated extension",
            ));
        }
    }

    for (n, d) in [(0, 1), (1, 1), (0, 2)] {
        let lhs = ga(2 * n + 1, vec![d; 2 * n + 2]);
        let rhs = genetic_product(&ga(2 * n, vec![d; 2 * n + 1]), &NGroupoid::bare(d)).expect("small");
        report.checks.push(iso_check(
            format!("GA({},{d}) ≅ GA({},{d}) *G G(0,{d})", 2 * n + 1, 2 * n),
            &lhs,
            &rhs,
            wide,
            "splicing groupoid",
            "extension",
        ));
    }

    // n copies of GA(1,d) carry 2n-1 operations, so they match GA(2n-1,d);
    // no chain of copies has the even operation count of GA(2n,d)
    let copies = vec![ga(1, vec![1, 1]), ga(1, vec![1, 1])];
    let mut check = iso_check(
        "GA(3,1) ≅ GA(1,1) *G GA(1,1)".into(),
        &ga(3, vec![1; 4]),
        &product_chain(&copies).expect("small"),
        wide,
        "splicing groupoid",
        "two copies of GA(1,1)",
    );
    check
        .detail
        .push_str("; n copies of GA(1,d) have 2n-1 operations, matching GA(2n-1,d)");
    report.checks.push(check);

    report.checks.push(noncommutative_pair(&pool, cfg));
    report.checks.push(lifting_check(&pool));
    report
}

fn noncommutative_pair(pool: &[(String, NGroupoid)], cfg: SearchConfig) -> Check {
    let name = "A *G B ≇ B *G A for some pair";
    let mut searched = 0;
    for (i, a) in pool.iter().enumerate() {
        for b in &pool[i + 1..] {
            if a.1.order() * b.1.order() > cfg.max_order {
                continue;
            }
            let ab = genetic_product(&a.1, &b.1).expect("small");
            let ba = genetic_product(&b.1, &a.1).expect("small");
            searched += 1;
            if let Ok(None) = find_isomorphism_with(&ab, &ba, false, true, cfg) {
                return Check::new(
                    name,
                    Verdict::Pass,
                    format!(
                        "{} *G {} and {} *G {} are not isomorphic under any operation matching",
                        a.0, b.0, b.0, a.0
                    ),
                )
                .with(Evidence::Instance {
                    description: format!("{} *G {} and {} *G {}", a.0, b.0, b.0, a.0),
                    tables: vec![ab, ba],
                });
            }
        }
    }
    Check::new(name, Verdict::Fail, format!("all {searched} pairs commute up to isomorphism"))
}

fn lifting_check(pool: &[(String, NGroupoid)]) -> Check {
    let name = "factor automorphisms lift to product automorphisms";
    let mut cases = 0;
    let mut failures = Vec::new();
    for (i, a) in pool.iter().enumerate().step_by(3) {
        for b in pool.iter().skip(i % 5).step_by(4) {
            let shape = ProductShape::new(vec![a.1.clone(), b.1.clone()]).expect("two factors");
            let Ok(product) = shape.materialize(64) else { continue };
            for (fi, f) in [&a.1, &b.1].into_iter().enumerate() {
                let aut = automorphism_group(f).expect("small factor");
                for phi in aut.elements() {
                    cases += 1;
                    let lifted = lift_automorphism(&shape, fi, phi).expect("phi is an automorphism");
                    if !is_automorphism(&product, &lifted) {
                        failures.push(NGroupoid::clone(&product));
                    }
                }
            }
        }
    }
    let mut check = Check::pass_if(
        name,
        failures.is_empty(),
        format!("{cases} lifted automorphisms checked, {} failed", failures.len()),
    );
    check.evidence.push(if failures.is_empty() {
        Evidence::Exhaustive {
            description: "lifted permutation re-checked on every cell of the product".into(),
            cases,
        }
    } else {
        Evidence::Instance {
            description: "products with a failing lift".into(),
            tables: failures,
        }
    });
    check
}

/// Genetic groupoids are closed under subgroupoids and direct products, but
/// the identification `0 = 1` on `000/111` is a homomorphism onto a
/// non-genetic table.
pub fn verify_not_variety() -> TheoremReport {
    verify_not_variety_with(100, SAMPLING_SEED)
}

pub fn verify_not_variety_with(samples: usize, seed: u64) -> TheoremReport {
    let mut report = TheoremReport::new("not-variety");
    let source = Groupoid::parse_compact3("000/111").expect("valid table");
    let labels = [0, 0, 1];
    match source.quotient(&labels) {
        Ok(image) => {
            report.checks.push(
                Check::new(
                    "identification 0 = 1 on 000/111 is a homomorphism",
                    Verdict::Pass,
                    format!("image table {:?}", image.rows()),
                )
                .with(Evidence::Instance {
                    description: "source table and its two-element image".into(),
                    tables: vec![source.clone().into(), image.clone().into()],
                }),
            );
            report.checks.push(
                Check::pass_if(
                    "homomorphic image is not genetic",
                    !image.is_genetic(),
                    format!(
                        "idempotent={}, nowhere-commutative={}",
                        image.is_idempotent(),
                        image.is_nowhere_commutative()
                    ),
                )
                .with(Evidence::Instance {
                    description: "image table".into(),
                    tables: vec![image.into()],
                }),
            );
        }
        Err(e) => report.checks.push(Check::new(
            "identification 0 = 1 on 000/111 is a homomorphism",
            Verdict::Fail,
            e.to_string(),
        )),
    }

    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let tables: Vec<GeneticTables> = (1..=4).map(|k| GeneticTables::new(k).expect("k <= 4")).collect();
    let random_table = |rng: &mut ChaCha8Rng, max_order: usize| {
        let t = &tables[rng.gen_range(0..max_order)];
        t.get(rng.gen_range(0..t.len()))
    };

    let mut bad_products = Vec::new();
    for _ in 0..samples {
        let a = random_table(&mut rng, 3);
        let b = random_table(&mut rng, 3);
        let p = a.direct_product(&b);
        if !p.is_genetic() {
            bad_products.push(NGroupoid::from(a));
            bad_products.push(b.into());
        }
    }
    let mut check = Check::pass_if(
        "direct products of genetic groupoids are genetic",
        bad_products.is_empty(),
        format!("{samples} sampled pairs of orders 1..=3"),
    );
    check.evidence.push(if bad_products.is_empty() {
        Evidence::Exhaustive {
            description: "predicate checked on each sampled product".into(),
            cases: samples,
        }
    } else {
        Evidence::Instance {
            description: "factor pairs whose product is not genetic".into(),
            tables: bad_products,
        }
    });
    report.checks.push(check);

    let mut bad_subs = Vec::new();
    let mut found = 0;
    while found < samples {
        let g = random_table(&mut rng, 4);
        let k = g.order();
        let mask = rng.gen_range(1..(1usize << k));
        let subset: Vec<usize> = (0..k).filter(|i| mask >> i & 1 == 1).collect();
        if let Ok(sub) = g.restrict(&subset) {
            found += 1;
            if !sub.is_genetic() {
                bad_subs.push(NGroupoid::from(g));
            }
        }
    }
    let mut check = Check::pass_if(
        "subgroupoids of genetic groupoids are genetic",
        bad_subs.is_empty(),
        format!("{samples} sampled closed subsets of orders 1..=4 tables"),
    );
    check.evidence.push(if bad_subs.is_empty() {
        Evidence::Exhaustive {
            description: "predicate checked on each sampled subgroupoid".into(),
            cases: samples,
        }
    } else {
        Evidence::Instance {
            description: "tables with a non-genetic subgroupoid".into(),
            tables: bad_subs,
        }
    });
    report.checks.push(check);
    report
}
