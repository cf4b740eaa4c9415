//! Census of small genetic groupoids up to isomorphism or anti-isomorphism.
//!
//! Genetic tables of order `k` are indexed constructively: the diagonal is
//! forced to `a·a = a` and each unordered off-diagonal pair `{u, v}` takes
//! one of the `k(k-1)` ordered value pairs `(x, y)` with `x ≠ y`. Table
//! number `i` is the mixed-radix decoding of `i` over those pairs, so the
//! raw count is `(k(k-1))^(k(k-1)/2)` and no table is ever filtered out.
//!
//! The canonical representative of a class is the lexicographically
//! smallest table (row major) among all relabellings of the table and of its
//! transpose.

use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;
use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::groupoid::{Groupoid, NGroupoid, FORMAT_VERSION};
use crate::morphisms::{find_isomorphism, MorphismWitness, Permutation};

/// Largest order [`enumerate_genetic`] and [`census`] accept.
pub const MAX_CENSUS_ORDER: usize = 4;

/// Largest order [`canonical_form`] brute-forces (`2·k!` relabellings).
pub const MAX_CANONICAL_ORDER: usize = 8;

/// Above this many classes, [`classify`] skips the quadratic pairwise
/// re-check of representatives. Canonical forms are exact orbit minima, so
/// distinct forms already imply distinct classes.
pub const PAIRWISE_RECHECK_LIMIT: usize = 256;

/// Order-4 class count, pinned from the first full census run and
/// cross-checked by an independent Burnside count in the test suite.
pub const ORDER4_CLASS_COUNT: usize = 62_532;

/// Indexed view of all genetic Cayley tables of one order.
#[derive(Clone, Debug)]
pub struct GeneticTables {
    order: usize,
    pairs: Vec<(usize, usize)>,
    choices: Vec<(usize, usize)>,
    len: usize,
}

impl GeneticTables {
    pub fn new(order: usize) -> Result<Self> {
        if order == 0 {
            return Err(Error::Domain("census order must be positive".into()));
        }
        if order > MAX_CENSUS_ORDER {
            return Err(Error::Capacity {
                what: "census order",
                actual: order,
                cap: MAX_CENSUS_ORDER,
            });
        }
        let pairs: Vec<_> = (0..order)
            .flat_map(|u| (u + 1..order).map(move |v| (u, v)))
            .collect();
        let choices: Vec<_> = (0..order)
            .flat_map(|x| (0..order).filter(move |&y| y != x).map(move |y| (x, y)))
            .collect();
        let len = choices.len().pow(pairs.len() as u32);
        Ok(GeneticTables {
            order,
            pairs,
            choices,
            len,
        })
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    /// Cells of table `index`, row major.
    pub fn cells(&self, mut index: usize) -> Vec<usize> {
        let k = self.order;
        let mut cells = vec![0; k * k];
        for a in 0..k {
            cells[a * k + a] = a;
        }
        let radix = self.choices.len();
        for &(u, v) in self.pairs.iter().rev() {
            let (x, y) = self.choices[index % radix];
            index /= radix;
            cells[u * k + v] = x;
            cells[v * k + u] = y;
        }
        cells
    }

    pub fn get(&self, index: usize) -> Groupoid {
        Groupoid::new(self.order, self.cells(index)).expect("generated table is well formed")
    }

    pub fn iter(&self) -> impl Iterator<Item = Groupoid> + '_ {
        (0..self.len).map(|i| self.get(i))
    }
}

/// All genetic tables of `order` (at most [`MAX_CENSUS_ORDER`]). Order 4
/// has about three million tables; prefer [`census`] there.
pub fn enumerate_genetic(order: usize) -> Result<Vec<Groupoid>> {
    Ok(GeneticTables::new(order)?.iter().collect())
}

/// Every relabelling of an order-`k` table, and of its transpose, as a cell
/// gather: image cell `c` is `value_map[src[c]]` read from cell `source[c]`.
struct Relabellings {
    maps: Vec<(Vec<usize>, Vec<usize>)>,
}

impl Relabellings {
    fn new(k: usize) -> Self {
        let mut maps = Vec::new();
        for p in Permutation::all(k) {
            let inv = p.inverse();
            for anti in [false, true] {
                let source = (0..k * k)
                    .map(|c| {
                        let (x, y) = (inv.apply(c / k), inv.apply(c % k));
                        if anti {
                            y * k + x
                        } else {
                            x * k + y
                        }
                    })
                    .collect();
                maps.push((source, p.image().to_vec()));
            }
        }
        Relabellings { maps }
    }

    fn canonical_cells(&self, cells: &[usize]) -> Vec<usize> {
        let mut best: Option<Vec<usize>> = None;
        let mut buf = vec![0; cells.len()];
        for (source, values) in &self.maps {
            for (slot, &s) in buf.iter_mut().zip(source) {
                *slot = values[cells[s]];
            }
            if best.as_ref().is_none_or(|b| buf < *b) {
                best = Some(buf.clone());
            }
        }
        best.expect("at least the identity relabelling")
    }

    /// Canonical table packed base `k`, first cell most significant. Numeric
    /// order equals lexicographic order of the cells.
    fn canonical_code(&self, cells: &[usize], k: u64) -> u64 {
        self.maps
            .iter()
            .map(|(source, values)| {
                source
                    .iter()
                    .fold(0u64, |acc, &s| acc * k + values[cells[s]] as u64)
            })
            .min()
            .expect("at least the identity relabelling")
    }
}

/// Lexicographically smallest table in the orbit of `g` under relabelling
/// and transposition.
pub fn canonical_form(g: &Groupoid) -> Result<Groupoid> {
    if g.order() > MAX_CANONICAL_ORDER {
        return Err(Error::Capacity {
            what: "order for canonical form",
            actual: g.order(),
            cap: MAX_CANONICAL_ORDER,
        });
    }
    let cells = Relabellings::new(g.order()).canonical_cells(g.cells());
    Groupoid::new(g.order(), cells)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CensusClass {
    pub representative: Groupoid,
    /// Compact `ijk/xyz` form, order 3 only.
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub compact3: Option<String>,
    pub orbit_size: usize,
    pub associative: bool,
    pub rectangular_band: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CensusReport {
    pub format_version: u32,
    pub order: usize,
    pub raw_count: usize,
    pub classes: Vec<CensusClass>,
    pub associative_class_count: usize,
}

impl CensusReport {
    fn from_counts(order: usize, raw_count: usize, counts: BTreeMap<Vec<usize>, usize>) -> Self {
        let classes: Vec<CensusClass> = counts
            .into_iter()
            .map(|(cells, orbit_size)| {
                let representative =
                    Groupoid::new(order, cells).expect("canonical table is well formed");
                CensusClass {
                    compact3: representative
                        .to_compact3()
                        .ok()
                        .filter(|s| Groupoid::parse_compact3(s).as_ref() == Ok(&representative)),
                    associative: representative.is_associative(),
                    rectangular_band: representative.is_rectangular_band(),
                    orbit_size,
                    representative,
                }
            })
            .collect();
        let associative_class_count = classes.iter().filter(|c| c.associative).count();
        CensusReport {
            format_version: FORMAT_VERSION,
            order,
            raw_count,
            classes,
            associative_class_count,
        }
    }

    pub fn class_count(&self) -> usize {
        self.classes.len()
    }

    /// Index of the class containing `g`, if any.
    pub fn class_of(&self, g: &Groupoid) -> Option<usize> {
        let canon = canonical_form(g).ok()?;
        self.classes
            .binary_search_by(|c| c.representative.cmp(&canon))
            .ok()
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("census JSON is infallible")
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(
            out,
            "order {}: {} genetic tables, {} classes up to isomorphism or anti-isomorphism, {} associative",
            self.order,
            self.raw_count,
            self.class_count(),
            self.associative_class_count
        );
        if self.classes.len() <= 64 {
            for (i, c) in self.classes.iter().enumerate() {
                let _ = writeln!(
                    out,
                    "  [{i:2}] {} orbit={}{}",
                    c.compact3.clone().unwrap_or_else(|| c.representative.to_string()),
                    c.orbit_size,
                    if c.rectangular_band {
                        " rectangular-band"
                    } else if c.associative {
                        " associative"
                    } else {
                        ""
                    }
                );
            }
        }
        out
    }
}

/// Full census of genetic tables of `order`, parallel over table indices.
/// The result does not depend on the worker count.
pub fn census(order: usize) -> Result<CensusReport> {
    let tables = GeneticTables::new(order)?;
    let relabel = Relabellings::new(order);
    let k = order as u64;
    let mut codes: Vec<u64> = (0..tables.len())
        .into_par_iter()
        .map(|i| relabel.canonical_code(&tables.cells(i), k))
        .collect();
    codes.par_sort_unstable();
    let mut counts = BTreeMap::new();
    for run in codes.chunk_by(|a, b| a == b) {
        counts.insert(decode(run[0], order), run.len());
    }
    Ok(CensusReport::from_counts(order, tables.len(), counts))
}

fn decode(mut code: u64, k: usize) -> Vec<usize> {
    let mut cells = vec![0; k * k];
    for slot in cells.iter_mut().rev() {
        *slot = (code % k as u64) as usize;
        code /= k as u64;
    }
    cells
}

/// A class member whose witness to its representative failed to verify, or
/// two representatives that turned out equivalent.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ClassifyError {
    MemberWithoutWitness { member: Groupoid },
    EquivalentRepresentatives { witness: MorphismWitness },
}

/// Partitions `gs` into classes up to isomorphism or anti-isomorphism.
///
/// Classes are keyed by canonical form, then every member is matched to its
/// representative by [`find_isomorphism`] with a verified witness, and
/// (for at most [`PAIRWISE_RECHECK_LIMIT`] classes) representatives are
/// re-checked pairwise.
pub fn classify(gs: &[Groupoid]) -> Result<CensusReport> {
    let Some(first) = gs.first() else {
        return Ok(CensusReport::from_counts(0, 0, BTreeMap::new()));
    };
    let order = first.order();
    if gs.iter().any(|g| g.order() != order) {
        return Err(Error::Domain("classify needs tables of one order".into()));
    }
    if order > MAX_CANONICAL_ORDER {
        return Err(Error::Capacity {
            what: "order for canonical form",
            actual: order,
            cap: MAX_CANONICAL_ORDER,
        });
    }
    let relabel = Relabellings::new(order);
    let canon: Vec<Vec<usize>> = gs
        .par_iter()
        .map(|g| relabel.canonical_cells(g.cells()))
        .collect();

    let confirmed: Result<Vec<bool>> = gs
        .par_iter()
        .zip(&canon)
        .map(|(g, c)| {
            let rep: NGroupoid = Groupoid::new(order, c.clone())?.into();
            let member: NGroupoid = g.clone().into();
            Ok(find_isomorphism(&member, &rep, true, false)?
                .is_some_and(|w| w.verify(&member, &rep)))
        })
        .collect();
    if let Some(i) = confirmed?.iter().position(|ok| !ok) {
        return Err(Error::Validation(format!(
            "{:?}",
            ClassifyError::MemberWithoutWitness {
                member: gs[i].clone()
            }
        )));
    }

    let mut counts = BTreeMap::new();
    for c in canon {
        *counts.entry(c).or_insert(0) += 1;
    }
    let report = CensusReport::from_counts(order, gs.len(), counts);
    if report.classes.len() <= PAIRWISE_RECHECK_LIMIT {
        if let Some(w) = pairwise_equivalence(&report)? {
            return Err(Error::Validation(format!(
                "{:?}",
                ClassifyError::EquivalentRepresentatives { witness: w }
            )));
        }
    }
    Ok(report)
}

fn pairwise_equivalence(report: &CensusReport) -> Result<Option<MorphismWitness>> {
    let reps: Vec<NGroupoid> = report
        .classes
        .iter()
        .map(|c| c.representative.clone().into())
        .collect();
    for i in 0..reps.len() {
        for j in i + 1..reps.len() {
            if let Some(w) = find_isomorphism(&reps[i], &reps[j], true, false)? {
                return Ok(Some(w));
            }
        }
    }
    Ok(None)
}
