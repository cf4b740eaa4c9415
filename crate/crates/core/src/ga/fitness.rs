use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::ga::space::SolutionSpace;
use crate::groupoid::Element;

/// Scores a point. Must be deterministic; selection only compares scores.
pub trait Fitness: Send + Sync {
    fn evaluate(&self, point: &[Element]) -> f64;

    /// Best attainable score, when known.
    fn optimum(&self) -> Option<f64> {
        None
    }
}

impl<F> Fitness for F
where
    F: Fn(&[Element]) -> f64 + Send + Sync,
{
    fn evaluate(&self, point: &[Element]) -> f64 {
        self(point)
    }
}

/// Sum of coordinates.
#[derive(Clone, Debug)]
pub struct OneMax {
    maxima: Vec<Element>,
}

impl Fitness for OneMax {
    fn evaluate(&self, point: &[Element]) -> f64 {
        point.iter().sum::<usize>() as f64
    }

    fn optimum(&self) -> Option<f64> {
        Some(self.maxima.iter().sum::<usize>() as f64)
    }
}

/// `Σ wᵢ·xᵢ`.
#[derive(Clone, Debug)]
pub struct WeightedLinear {
    weights: Vec<f64>,
    maxima: Vec<Element>,
}

impl Fitness for WeightedLinear {
    fn evaluate(&self, point: &[Element]) -> f64 {
        point.iter().zip(&self.weights).map(|(&x, w)| w * x as f64).sum()
    }

    fn optimum(&self) -> Option<f64> {
        Some(
            self.weights
                .iter()
                .zip(&self.maxima)
                .map(|(w, &m)| w.max(0.0) * m as f64)
                .sum(),
        )
    }
}

/// Deceptive trap over consecutive blocks. With `u` coordinates of a block
/// of length `b` at their maximum, the block scores `b` if `u = b` and
/// `b - 1 - u` otherwise.
#[derive(Clone, Debug)]
pub struct Trap {
    block: usize,
    maxima: Vec<Element>,
}

impl Fitness for Trap {
    fn evaluate(&self, point: &[Element]) -> f64 {
        point
            .chunks(self.block)
            .zip(self.maxima.chunks(self.block))
            .map(|(xs, ms)| {
                let u = xs.iter().zip(ms).filter(|(x, m)| x == m).count();
                if u == xs.len() {
                    xs.len() as f64
                } else {
                    (xs.len() - 1 - u) as f64
                }
            })
            .sum()
    }

    fn optimum(&self) -> Option<f64> {
        Some(self.maxima.len() as f64)
    }
}

/// Built-in fitness selector as written in experiment configs: either a
/// bare name or an object with parameters.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum FitnessSpec {
    Name(String),
    Detailed {
        name: String,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        weights: Option<Vec<f64>>,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        block: Option<usize>,
    },
}

impl FitnessSpec {
    pub fn name(&self) -> &str {
        match self {
            FitnessSpec::Name(n) | FitnessSpec::Detailed { name: n, .. } => n,
        }
    }

    /// Binds the selector to a space, checking arity.
    pub fn build(&self, space: &SolutionSpace) -> Result<Box<dyn Fitness>> {
        let (weights, block) = match self {
            FitnessSpec::Name(_) => (None, None),
            FitnessSpec::Detailed { weights, block, .. } => (weights.clone(), *block),
        };
        let maxima = space.maxima();
        match self.name() {
            "onemax" => Ok(Box::new(OneMax { maxima })),
            "weighted-linear" => {
                let weights =
                    weights.unwrap_or_else(|| (1..=maxima.len()).map(|i| i as f64).collect());
                if weights.len() != maxima.len() {
                    return Err(Error::Validation(format!(
                        "weighted-linear has {} weights, space has {} coordinates",
                        weights.len(),
                        maxima.len()
                    )));
                }
                Ok(Box::new(WeightedLinear { weights, maxima }))
            }
            "trap" => {
                let block = block.unwrap_or(4);
                if block == 0 {
                    return Err(Error::Validation("trap block size must be positive".into()));
                }
                Ok(Box::new(Trap { block, maxima }))
            }
            other => Err(Error::Validation(format!("unknown fitness {other:?}"))),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::SplicingSpec;

    fn space(n: usize) -> SolutionSpace {
        SolutionSpace::new(SplicingSpec::uniform(n - 1, 1).shape())
    }

    #[test]
    fn builtins() {
        let s = space(4);
        let one = FitnessSpec::Name("onemax".into()).build(&s).unwrap();
        assert_eq!(one.evaluate(&[1, 0, 1, 1]), 3.0);
        assert_eq!(one.optimum(), Some(4.0));

        let lin = FitnessSpec::Name("weighted-linear".into()).build(&s).unwrap();
        assert_eq!(lin.evaluate(&[1, 0, 0, 1]), 5.0);

        let trap = FitnessSpec::Detailed { name: "trap".into(), weights: None, block: Some(2) }
            .build(&s)
            .unwrap();
        assert_eq!(trap.evaluate(&[1, 1, 0, 0]), 3.0);
        assert_eq!(trap.evaluate(&[1, 0, 0, 1]), 0.0);
        assert_eq!(trap.optimum(), Some(4.0));
    }

    #[test]
    fn rejects_unknown_and_mismatched() {
        let s = space(3);
        let err = FitnessSpec::Name("rastrigin".into()).build(&s).err().unwrap();
        assert!(err.to_string().contains("unknown fitness"));
        let bad = FitnessSpec::Detailed {
            name: "weighted-linear".into(),
            weights: Some(vec![1.0]),
            block: None,
        };
        assert!(bad.build(&s).is_err());
    }

    #[test]
    fn parses_both_forms() {
        let a: FitnessSpec = serde_json::from_str(r#""onemax""#).unwrap();
        let b: FitnessSpec = serde_json::from_str(r#"{"name":"trap","block":3}"#).unwrap();
        assert_eq!(a.name(), "onemax");
        assert_eq!(b.name(), "trap");
    }
}
