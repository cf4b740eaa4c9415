use rand::Rng;
use serde::{Deserialize, Serialize};

use crate::constructions::ProductShape;
use crate::error::{Error, Result};
use crate::groupoid::Element;
use crate::morphisms::{automorphism_group_with, is_automorphism, Permutation, SearchConfig};

/// Factors above this order get no automatic mutation entries; their
/// automorphism groups can be as large as `k!`.
pub const AUTO_MUTATION_MAX_ORDER: usize = 6;

/// The solution space of a genetic n-groupoid held in factored form.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SolutionSpace {
    shape: ProductShape,
}

impl SolutionSpace {
    pub fn new(shape: ProductShape) -> Self {
        SolutionSpace { shape }
    }

    pub fn shape(&self) -> &ProductShape {
        &self.shape
    }

    pub fn arity(&self) -> usize {
        self.shape.arity()
    }

    pub fn flat_op_count(&self) -> usize {
        self.shape.flat_op_count()
    }

    /// Largest element of each factor.
    pub fn maxima(&self) -> Vec<Element> {
        self.shape.factor_orders().iter().map(|k| k - 1).collect()
    }

    pub fn random_point<R: Rng + ?Sized>(&self, rng: &mut R) -> Vec<Element> {
        self.shape
            .factors()
            .iter()
            .map(|f| rng.gen_range(0..f.order()))
            .collect()
    }
}

/// Both children `a ·ᵢ b` and `b ·ᵢ a` of one operation.
pub fn crossover(
    space: &SolutionSpace,
    parent_a: &[Element],
    parent_b: &[Element],
    op_index: usize,
) -> Result<(Vec<Element>, Vec<Element>)> {
    let first = space.shape.multiply(parent_a, parent_b, op_index)?;
    let mut second = vec![0; first.len()];
    space
        .shape
        .multiply_into(parent_b, parent_a, op_index, &mut second);
    Ok((first, second))
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct MutationEntry {
    pub factor: usize,
    pub perm: Permutation,
    pub probability: f64,
}

/// Factor automorphisms applied to offspring, each with its own probability.
#[derive(Clone, Debug, Default, PartialEq, Serialize)]
pub struct MutationSet {
    entries: Vec<MutationEntry>,
}

impl MutationSet {
    /// Checks every entry against the space; all problems are reported.
    pub fn new(space: &SolutionSpace, entries: Vec<MutationEntry>) -> Result<Self> {
        let mut problems = Vec::new();
        for (i, e) in entries.iter().enumerate() {
            let Some(factor) = space.shape.factors().get(e.factor) else {
                problems.push(format!(
                    "mutation {i}: factor {} out of range (space has {})",
                    e.factor,
                    space.arity()
                ));
                continue;
            };
            if !(0.0..=1.0).contains(&e.probability) {
                problems.push(format!("mutation {i}: probability {} outside [0, 1]", e.probability));
            }
            if e.perm.len() != factor.order() || !is_automorphism(factor, &e.perm) {
                problems.push(format!(
                    "mutation {i}: {:?} is not an automorphism of factor {}",
                    e.perm.image(),
                    e.factor
                ));
            }
        }
        if problems.is_empty() {
            Ok(MutationSet { entries })
        } else {
            Err(Error::Config(problems))
        }
    }

    pub fn empty() -> Self {
        MutationSet::default()
    }

    /// One entry per non-identity automorphism of each factor, splitting
    /// `probability` evenly across a factor's entries.
    pub fn from_automorphisms(space: &SolutionSpace, probability: f64) -> Result<Self> {
        let mut entries = Vec::new();
        for (i, f) in space.shape.factors().iter().enumerate() {
            if f.order() > AUTO_MUTATION_MAX_ORDER {
                continue;
            }
            let aut = automorphism_group_with(f, SearchConfig::default())?;
            let moves: Vec<_> = aut.elements().iter().filter(|p| !p.is_identity()).collect();
            let share = probability / moves.len().max(1) as f64;
            entries.extend(moves.into_iter().map(|p| MutationEntry {
                factor: i,
                perm: p.clone(),
                probability: share,
            }));
        }
        MutationSet::new(space, entries)
    }

    pub fn entries(&self) -> &[MutationEntry] {
        &self.entries
    }
}

/// Applies each entry independently with its probability. Exactly one
/// uniform draw is taken per entry whether or not it fires.
pub fn mutate<R: Rng + ?Sized>(
    point: &[Element],
    mutations: &MutationSet,
    rng: &mut R,
) -> Vec<Element> {
    let mut out = point.to_vec();
    mutate_in_place(&mut out, mutations, rng);
    out
}

pub(crate) fn mutate_in_place<R: Rng + ?Sized>(
    point: &mut [Element],
    mutations: &MutationSet,
    rng: &mut R,
) {
    for e in &mutations.entries {
        if rng.gen::<f64>() < e.probability {
            point[e.factor] = e.perm.apply(point[e.factor]);
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::SplicingSpec;
    use crate::groupoid::{Groupoid, NGroupoid};
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn splicing(n: usize, d: usize) -> SolutionSpace {
        SolutionSpace::new(SplicingSpec::uniform(n, d).shape())
    }

    #[test]
    fn splicing_crossover_both_children() {
        let space = splicing(2, 1);
        let (c1, c2) = crossover(&space, &[1, 1, 1], &[0, 0, 0], 0).unwrap();
        assert_eq!(c1, vec![1, 0, 0]);
        assert_eq!(c2, vec![0, 1, 1]);
        assert!(crossover(&space, &[1, 1], &[0, 0, 0], 0).is_err());
        assert!(crossover(&space, &[1, 1, 1], &[0, 0, 0], 2).is_err());
    }

    #[test]
    fn factor_crossover_uses_table() {
        let a = Groupoid::parse_compact3("000/111").unwrap();
        let shape = ProductShape::new(vec![a.clone().into(), NGroupoid::bare(1)]).unwrap();
        let space = SolutionSpace::new(shape.clone());
        let product = shape.materialize(64).unwrap();
        for x in 0..3 {
            for y in 0..3 {
                let (c1, c2) = crossover(&space, &[x, 1], &[y, 0], 0).unwrap();
                assert_eq!(c1, vec![a.mul(x, y), 0]);
                assert_eq!(c2, vec![a.mul(y, x), 1]);
                let (p, q) = (shape.rank(&[x, 1]), shape.rank(&[y, 0]));
                assert_eq!(shape.rank(&c1), product.op(0).unwrap().mul(p, q));
            }
        }
    }

    #[test]
    fn mutation_edge_cases() {
        let space = splicing(1, 1);
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        let swap = Permutation::transposition(2, 0, 1).unwrap();
        let never = MutationSet::new(
            &space,
            vec![MutationEntry { factor: 0, perm: swap.clone(), probability: 0.0 }],
        )
        .unwrap();
        assert_eq!(mutate(&[1, 0], &never, &mut rng), vec![1, 0]);
        let identity = MutationSet::new(
            &space,
            vec![MutationEntry { factor: 1, perm: Permutation::identity(2), probability: 1.0 }],
        )
        .unwrap();
        assert_eq!(mutate(&[1, 0], &identity, &mut rng), vec![1, 0]);
        let always = MutationSet::new(
            &space,
            vec![MutationEntry { factor: 1, perm: swap, probability: 1.0 }],
        )
        .unwrap();
        assert_eq!(mutate(&[1, 0], &always, &mut rng), vec![1, 1]);
    }

    #[test]
    fn mutation_set_validation() {
        let a = Groupoid::parse_compact3("000/111").unwrap();
        let space = SolutionSpace::new(ProductShape::new(vec![a.into()]).unwrap());
        let err = MutationSet::new(
            &space,
            vec![
                MutationEntry { factor: 0, perm: Permutation::new(vec![2, 1, 0]).unwrap(), probability: 0.5 },
                MutationEntry { factor: 3, perm: Permutation::identity(3), probability: 0.5 },
                MutationEntry { factor: 0, perm: Permutation::identity(3), probability: 1.5 },
            ],
        )
        .unwrap_err();
        match err {
            Error::Config(problems) => assert_eq!(problems.len(), 3),
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn automatic_mutations_for_binary_coordinates() {
        let space = splicing(3, 1);
        let set = MutationSet::from_automorphisms(&space, 0.05).unwrap();
        assert_eq!(set.entries().len(), 4);
        assert!(set.entries().iter().all(|e| e.probability == 0.05));
    }
}
