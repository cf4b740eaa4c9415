//! Composite n-groupoids: splicing groupoids, the genetic product and
//! extension, and the factored view of a chain of genetic products.
//!
//! Product carriers are ranked lexicographically with the left factor most
//! significant, so `(a, b) ↦ a * |B| + b`. Under this ranking a left fold
//! `((A₁ * A₂) * A₃)` and the flat tuple view of [`ProductShape`] address
//! the same element by the same index.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::groupoid::{Element, Groupoid, NGroupoid, FORMAT_VERSION};

/// Largest carrier a product or splicing groupoid is materialized into.
pub const DEFAULT_MATERIALIZE_CAP: usize = 4096;

/// Parameters of the splicing groupoid `GA(n; d₁, …, dₙ₊₁)`. Coordinate `i`
/// ranges over `0..=dims[i]`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SplicingSpec {
    dims: Vec<usize>,
}

impl SplicingSpec {
    /// `n` cut operations over `n + 1` coordinates.
    pub fn new(n: usize, dims: Vec<usize>) -> Result<Self> {
        if dims.len() != n + 1 {
            return Err(Error::Validation(format!(
                "GA({n}; ..) needs {} dims, got {}",
                n + 1,
                dims.len()
            )));
        }
        Ok(SplicingSpec { dims })
    }

    /// `GA(n, d)`: every coordinate over `0..=d`.
    pub fn uniform(n: usize, d: usize) -> Self {
        SplicingSpec {
            dims: vec![d; n + 1],
        }
    }

    pub fn op_count(&self) -> usize {
        self.dims.len() - 1
    }

    pub fn dims(&self) -> &[usize] {
        &self.dims
    }

    pub fn radices(&self) -> Vec<usize> {
        self.dims.iter().map(|d| d + 1).collect()
    }

    /// The same structure as a chain of bare factors, never materialized.
    pub fn shape(&self) -> ProductShape {
        ProductShape::new(self.dims.iter().map(|&d| NGroupoid::bare(d)).collect())
            .expect("dims are never empty")
    }
}

/// `(a₁..aᵢ, bᵢ₊₁..)`, with `cut` counted from 1 as in `×ᵢ`.
pub fn splice(a: &[Element], b: &[Element], cut: usize) -> Vec<Element> {
    a[..cut].iter().chain(&b[cut..]).copied().collect()
}

pub fn splicing_groupoid(spec: &SplicingSpec) -> Result<NGroupoid> {
    splicing_groupoid_capped(spec, DEFAULT_MATERIALIZE_CAP)
}

pub fn splicing_groupoid_capped(spec: &SplicingSpec, cap: usize) -> Result<NGroupoid> {
    let radices = spec.radices();
    let order = carrier_size(&radices, cap)?;
    let tuples: Vec<Vec<Element>> = (0..order).map(|r| unrank(r, &radices)).collect();
    let ops = (1..=spec.op_count())
        .map(|cut| {
            Groupoid::from_fn(order, |p, q| {
                rank(&splice(&tuples[p], &tuples[q], cut), &radices)
            })
        })
        .collect::<Result<Vec<_>>>()?;
    NGroupoid::new(order, ops)
}

/// The genetic product `A *_G B` on `A × B` with `n + m + 1` operations:
/// `A`'s operations act on the left coordinate and take the right one from
/// the right argument, then one pure splice `(a, b)·(c, d) = (a, d)`, then
/// `B`'s operations act on the right coordinate keeping the left one.
pub fn genetic_product(a: &NGroupoid, b: &NGroupoid) -> Result<NGroupoid> {
    genetic_product_capped(a, b, DEFAULT_MATERIALIZE_CAP)
}

pub fn genetic_product_capped(a: &NGroupoid, b: &NGroupoid, cap: usize) -> Result<NGroupoid> {
    let m = b.order();
    let order = carrier_size(&[a.order(), m], cap)?;
    let mut ops = Vec::with_capacity(a.op_count() + b.op_count() + 1);
    for op in a.ops() {
        ops.push(Groupoid::from_fn(order, |p, q| op.mul(p / m, q / m) * m + q % m)?);
    }
    ops.push(Groupoid::from_fn(order, |p, q| (p / m) * m + q % m)?);
    for op in b.ops() {
        ops.push(Groupoid::from_fn(order, |p, q| (p / m) * m + op.mul(p % m, q % m))?);
    }
    NGroupoid::new(order, ops)
}

/// `G(A) = A *_G G(0, d)`.
pub fn genetic_extension(a: &NGroupoid, d: usize) -> Result<NGroupoid> {
    genetic_product(a, &NGroupoid::bare(d))
}

/// Left fold of [`genetic_product`] over `factors`.
pub fn product_chain(factors: &[NGroupoid]) -> Result<NGroupoid> {
    product_chain_capped(factors, DEFAULT_MATERIALIZE_CAP)
}

pub fn product_chain_capped(factors: &[NGroupoid], cap: usize) -> Result<NGroupoid> {
    let (first, rest) = factors
        .split_first()
        .ok_or_else(|| Error::Domain("product of an empty factor list".into()))?;
    rest.iter()
        .try_fold(first.clone(), |acc, f| genetic_product_capped(&acc, f, cap))
}

/// Where a flat operation index of a product chain lands.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum FlatOp {
    /// Operation `op` of factor `factor`, followed by a splice of the suffix.
    Factor { factor: usize, op: usize },
    /// Keep factors `0..=after` of the left argument, the rest of the right.
    Splice { after: usize },
}

/// A chain `A₁ *_G … *_G Aₜ` kept in factored form. Points are tuples with
/// one coordinate per factor; products are computed coordinate-wise from the
/// factor tables.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ProductShape {
    factors: Vec<NGroupoid>,
    layout: Vec<FlatOp>,
}

impl ProductShape {
    pub fn new(factors: Vec<NGroupoid>) -> Result<Self> {
        if factors.is_empty() {
            return Err(Error::Domain("product shape needs at least one factor".into()));
        }
        let mut layout = Vec::new();
        for (i, f) in factors.iter().enumerate() {
            if i > 0 {
                layout.push(FlatOp::Splice { after: i - 1 });
            }
            layout.extend((0..f.op_count()).map(|op| FlatOp::Factor { factor: i, op }));
        }
        Ok(ProductShape { factors, layout })
    }

    pub fn factors(&self) -> &[NGroupoid] {
        &self.factors
    }

    pub fn arity(&self) -> usize {
        self.factors.len()
    }

    pub fn layout(&self) -> &[FlatOp] {
        &self.layout
    }

    pub fn flat_op_count(&self) -> usize {
        self.layout.len()
    }

    pub fn factor_orders(&self) -> Vec<usize> {
        self.factors.iter().map(NGroupoid::order).collect()
    }

    /// Carrier size, or `None` on overflow.
    pub fn carrier_size(&self) -> Option<usize> {
        self.factors
            .iter()
            .try_fold(1usize, |acc, f| acc.checked_mul(f.order()))
    }

    pub fn validate_point(&self, p: &[Element]) -> Result<()> {
        if p.len() != self.arity() {
            return Err(Error::Domain(format!(
                "point has arity {}, shape has {} factors",
                p.len(),
                self.arity()
            )));
        }
        for (i, (&x, f)) in p.iter().zip(&self.factors).enumerate() {
            if x >= f.order() {
                return Err(Error::Domain(format!(
                    "coordinate {i} is {x}, factor order is {}",
                    f.order()
                )));
            }
        }
        Ok(())
    }

    /// Checked flat product `a *_op b`.
    pub fn multiply(&self, a: &[Element], b: &[Element], op: usize) -> Result<Vec<Element>> {
        self.validate_point(a)?;
        self.validate_point(b)?;
        if op >= self.flat_op_count() {
            return Err(Error::Domain(format!(
                "operation {op} out of range (shape has {})",
                self.flat_op_count()
            )));
        }
        let mut out = vec![0; a.len()];
        self.multiply_into(a, b, op, &mut out);
        Ok(out)
    }

    /// Unchecked flat product written into `out`.
    pub fn multiply_into(&self, a: &[Element], b: &[Element], op: usize, out: &mut [Element]) {
        match self.layout[op] {
            FlatOp::Factor { factor, op } => {
                out[..factor].copy_from_slice(&a[..factor]);
                out[factor] = self.factors[factor].ops()[op].mul(a[factor], b[factor]);
                out[factor + 1..].copy_from_slice(&b[factor + 1..]);
            }
            FlatOp::Splice { after } => {
                out[..=after].copy_from_slice(&a[..=after]);
                out[after + 1..].copy_from_slice(&b[after + 1..]);
            }
        }
    }

    pub fn rank(&self, p: &[Element]) -> usize {
        rank(p, &self.factor_orders())
    }

    pub fn unrank(&self, r: usize) -> Vec<Element> {
        unrank(r, &self.factor_orders())
    }

    /// Materializes the flat operations as Cayley tables over ranked tuples.
    pub fn materialize(&self, cap: usize) -> Result<NGroupoid> {
        let orders = self.factor_orders();
        let order = carrier_size(&orders, cap)?;
        let tuples: Vec<Vec<Element>> = (0..order).map(|r| unrank(r, &orders)).collect();
        let mut buf = vec![0; self.arity()];
        let ops = (0..self.flat_op_count())
            .map(|op| {
                Groupoid::from_fn(order, |p, q| {
                    self.multiply_into(&tuples[p], &tuples[q], op, &mut buf);
                    rank(&buf, &orders)
                })
            })
            .collect::<Result<Vec<_>>>()?;
        NGroupoid::new(order, ops)
    }

    /// `{"format_version": .., "shape": {..}}` sidecar document.
    pub fn sidecar_json(&self) -> String {
        serde_json::json!({ "format_version": FORMAT_VERSION, "shape": self }).to_string()
    }
}

/// `(a1,...,ak)`.
pub fn render_tuple(p: &[Element]) -> String {
    let parts: Vec<String> = p.iter().map(ToString::to_string).collect();
    format!("({})", parts.join(","))
}

/// Mixed-radix rank with the first coordinate most significant.
pub fn rank(p: &[Element], radices: &[usize]) -> usize {
    p.iter().zip(radices).fold(0, |acc, (&x, &r)| acc * r + x)
}

pub fn unrank(mut r: usize, radices: &[usize]) -> Vec<Element> {
    let mut out = vec![0; radices.len()];
    for (slot, &radix) in out.iter_mut().zip(radices).rev() {
        *slot = r % radix;
        r /= radix;
    }
    out
}

fn carrier_size(radices: &[usize], cap: usize) -> Result<usize> {
    let size = radices
        .iter()
        .try_fold(1usize, |acc, &r| acc.checked_mul(r))
        .unwrap_or(usize::MAX);
    if size > cap {
        return Err(Error::Capacity {
            what: "carrier size",
            actual: size,
            cap,
        });
    }
    Ok(size)
}
