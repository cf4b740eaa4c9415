//! Isomorphism, anti-isomorphism and automorphism search for finite
//! n-groupoids.
//!
//! The search assigns images element by element and rejects a partial
//! permutation as soon as some product with all three of `a`, `b`, `a·b`
//! already mapped disagrees with the target table. Per-element invariants
//! (counts of fixed and absorbing products) restrict which images are tried;
//! they only prune, the table check decides.

use serde::{Deserialize, Serialize};

use crate::constructions::{ProductShape, DEFAULT_MATERIALIZE_CAP};
use crate::error::{Error, Result};
use crate::groupoid::{Element, Groupoid, NGroupoid};

/// Default largest carrier order the morphism search accepts.
pub const DEFAULT_SEARCH_CAP: usize = 12;

/// A bijection on `0..k`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct Permutation {
    image: Vec<Element>,
}

impl Permutation {
    pub fn new(image: Vec<Element>) -> Result<Self> {
        let mut seen = vec![false; image.len()];
        for &x in &image {
            if x >= image.len() || std::mem::replace(&mut seen[x], true) {
                return Err(Error::Validation(format!("{image:?} is not a bijection")));
            }
        }
        Ok(Permutation { image })
    }

    pub fn identity(k: usize) -> Self {
        Permutation {
            image: (0..k).collect(),
        }
    }

    /// Swaps `a` and `b`.
    pub fn transposition(k: usize, a: Element, b: Element) -> Result<Self> {
        let mut image: Vec<_> = (0..k).collect();
        if a >= k || b >= k {
            return Err(Error::Domain(format!("transposition ({a} {b}) outside 0..{k}")));
        }
        image.swap(a, b);
        Ok(Permutation { image })
    }

    pub fn len(&self) -> usize {
        self.image.len()
    }

    pub fn is_empty(&self) -> bool {
        self.image.is_empty()
    }

    pub fn is_identity(&self) -> bool {
        self.image.iter().enumerate().all(|(i, &x)| i == x)
    }

    #[inline]
    pub fn apply(&self, x: Element) -> Element {
        self.image[x]
    }

    pub fn image(&self) -> &[Element] {
        &self.image
    }

    /// `self ∘ other`: apply `other` first.
    pub fn compose(&self, other: &Permutation) -> Permutation {
        Permutation {
            image: other.image.iter().map(|&x| self.image[x]).collect(),
        }
    }

    pub fn inverse(&self) -> Permutation {
        let mut image = vec![0; self.image.len()];
        for (i, &x) in self.image.iter().enumerate() {
            image[x] = i;
        }
        Permutation { image }
    }

    /// All permutations of `0..k` in lexicographic order.
    pub fn all(k: usize) -> impl Iterator<Item = Permutation> {
        let mut next = Some((0..k).collect::<Vec<_>>());
        std::iter::from_fn(move || {
            let cur = next.take()?;
            let mut succ = cur.clone();
            if next_permutation(&mut succ) {
                next = Some(succ);
            }
            Some(Permutation { image: cur })
        })
    }
}

impl TryFrom<Vec<usize>> for Permutation {
    type Error = Error;
    fn try_from(v: Vec<usize>) -> Result<Self> {
        Permutation::new(v)
    }
}

impl From<Permutation> for Vec<usize> {
    fn from(p: Permutation) -> Self {
        p.image
    }
}

/// Advances `v` to its lexicographic successor; false at the last one.
pub fn next_permutation(v: &mut [usize]) -> bool {
    let Some(i) = (1..v.len()).rev().find(|&i| v[i - 1] < v[i]) else {
        return false;
    };
    let j = (i..v.len()).rev().find(|&j| v[j] > v[i - 1]).expect("pivot has a successor");
    v.swap(i - 1, j);
    v[i..].reverse();
    true
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum MorphismKind {
    /// `φ(a ·ᵢ b) = φ(a) ∘ⱼ φ(b)`.
    Iso,
    /// `φ(a ·ᵢ b) = φ(b) ∘ⱼ φ(a)`, every operation reversed.
    Anti,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MorphismWitness {
    pub kind: MorphismKind,
    pub perm: Permutation,
    /// `op_match[i] = j` pairs source operation `i` with target operation `j`.
    pub op_match: Vec<usize>,
}

impl MorphismWitness {
    /// Re-checks the witness cell by cell.
    pub fn verify(&self, source: &NGroupoid, target: &NGroupoid) -> bool {
        let k = source.order();
        if target.order() != k
            || self.perm.len() != k
            || self.op_match.len() != source.op_count()
            || target.op_count() != source.op_count()
            || Permutation::new(self.op_match.clone()).is_err()
        {
            return false;
        }
        let p = &self.perm;
        source.ops().iter().zip(&self.op_match).all(|(src, &j)| {
            let dst = &target.ops()[j];
            (0..k).all(|a| {
                (0..k).all(|b| {
                    let lhs = p.apply(src.mul(a, b));
                    let rhs = match self.kind {
                        MorphismKind::Iso => dst.mul(p.apply(a), p.apply(b)),
                        MorphismKind::Anti => dst.mul(p.apply(b), p.apply(a)),
                    };
                    lhs == rhs
                })
            })
        })
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("witness JSON is infallible")
    }
}

/// The structure `perm` carries `g` onto: `perm(a·b)` is placed at
/// `(perm a, perm b)`, or at `(perm b, perm a)` when `anti`.
pub fn transport(g: &Groupoid, perm: &Permutation, anti: bool) -> Groupoid {
    let k = g.order();
    let inv = perm.inverse();
    Groupoid::from_fn(k, |x, y| {
        let (a, b) = if anti {
            (inv.apply(y), inv.apply(x))
        } else {
            (inv.apply(x), inv.apply(y))
        };
        perm.apply(g.mul(a, b))
    })
    .expect("transported table is well formed")
}

pub fn transport_n(g: &NGroupoid, perm: &Permutation, anti: bool) -> NGroupoid {
    NGroupoid::new(
        g.order(),
        g.ops().iter().map(|op| transport(op, perm, anti)).collect(),
    )
    .expect("transported tables share the order")
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SearchConfig {
    pub max_order: usize,
}

impl Default for SearchConfig {
    fn default() -> Self {
        SearchConfig {
            max_order: DEFAULT_SEARCH_CAP,
        }
    }
}

impl SearchConfig {
    fn check(&self, order: usize) -> Result<()> {
        if order > self.max_order {
            return Err(Error::Capacity {
                what: "carrier order for morphism search",
                actual: order,
                cap: self.max_order,
            });
        }
        Ok(())
    }
}

pub fn find_isomorphism(
    a: &NGroupoid,
    b: &NGroupoid,
    allow_anti: bool,
    allow_op_permutation: bool,
) -> Result<Option<MorphismWitness>> {
    find_isomorphism_with(a, b, allow_anti, allow_op_permutation, SearchConfig::default())
}

/// Finds an isomorphism, trying anti-isomorphisms only when none exists and
/// `allow_anti` is set. Exact operation matching (`i ↦ i`) is always tried
/// before other operation bijections.
pub fn find_isomorphism_with(
    a: &NGroupoid,
    b: &NGroupoid,
    allow_anti: bool,
    allow_op_permutation: bool,
    cfg: SearchConfig,
) -> Result<Option<MorphismWitness>> {
    if a.order() != b.order() || a.op_count() != b.op_count() {
        return Ok(None);
    }
    cfg.check(a.order())?;
    let kinds: &[MorphismKind] = if allow_anti {
        &[MorphismKind::Iso, MorphismKind::Anti]
    } else {
        &[MorphismKind::Iso]
    };
    for &kind in kinds {
        let mut op_match: Vec<usize> = (0..a.op_count()).collect();
        loop {
            let mut found = None;
            Search::new(a, b, kind, &op_match).run(&mut |perm| {
                found = Some(perm.to_vec());
                false
            });
            if let Some(image) = found {
                return Ok(Some(MorphismWitness {
                    kind,
                    perm: Permutation { image },
                    op_match,
                }));
            }
            if !allow_op_permutation || !next_permutation(&mut op_match) {
                break;
            }
        }
    }
    Ok(None)
}

/// Automorphisms of an n-groupoid (operations fixed, iso only).
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AutGroup {
    elements: Vec<Permutation>,
}

impl AutGroup {
    pub fn elements(&self) -> &[Permutation] {
        &self.elements
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn contains(&self, p: &Permutation) -> bool {
        self.elements.binary_search(p).is_ok()
    }

    /// Identity, inverses and closure under composition, by lookup.
    pub fn is_group(&self) -> bool {
        let Some(first) = self.elements.first() else {
            return false;
        };
        self.contains(&Permutation::identity(first.len()))
            && self.elements.iter().all(|p| self.contains(&p.inverse()))
            && self
                .elements
                .iter()
                .all(|p| self.elements.iter().all(|q| self.contains(&p.compose(q))))
    }
}

pub fn automorphism_group(a: &NGroupoid) -> Result<AutGroup> {
    automorphism_group_with(a, SearchConfig::default())
}

pub fn automorphism_group_with(a: &NGroupoid, cfg: SearchConfig) -> Result<AutGroup> {
    cfg.check(a.order())?;
    let op_match: Vec<usize> = (0..a.op_count()).collect();
    let mut elements = Vec::new();
    Search::new(a, a, MorphismKind::Iso, &op_match).run(&mut |perm| {
        elements.push(Permutation {
            image: perm.to_vec(),
        });
        true
    });
    elements.sort();
    Ok(AutGroup { elements })
}

pub fn is_automorphism(a: &NGroupoid, p: &Permutation) -> bool {
    let witness = MorphismWitness {
        kind: MorphismKind::Iso,
        perm: p.clone(),
        op_match: (0..a.op_count()).collect(),
    };
    witness.verify(a, a)
}

/// Lifts an automorphism of factor `factor_index` to the product carrier,
/// acting on that coordinate only.
pub fn lift_automorphism(
    shape: &ProductShape,
    factor_index: usize,
    phi: &Permutation,
) -> Result<Permutation> {
    let factor = shape.factors().get(factor_index).ok_or_else(|| {
        Error::Domain(format!(
            "factor {factor_index} out of range (shape has {})",
            shape.arity()
        ))
    })?;
    if phi.len() != factor.order() || !is_automorphism(factor, phi) {
        return Err(Error::Validation(format!(
            "{:?} is not an automorphism of factor {factor_index}",
            phi.image()
        )));
    }
    let size = shape.carrier_size().unwrap_or(usize::MAX);
    if size > DEFAULT_MATERIALIZE_CAP {
        return Err(Error::Capacity {
            what: "carrier size",
            actual: size,
            cap: DEFAULT_MATERIALIZE_CAP,
        });
    }
    let image = (0..size)
        .map(|r| {
            let mut t = shape.unrank(r);
            t[factor_index] = phi.apply(t[factor_index]);
            shape.rank(&t)
        })
        .collect();
    Ok(Permutation { image })
}

const UNSET: usize = usize::MAX;

struct Search<'a> {
    src: Vec<&'a Groupoid>,
    dst: Vec<&'a Groupoid>,
    kind: MorphismKind,
    k: usize,
    candidates: Vec<Vec<Element>>,
    perm: Vec<Element>,
    used: Vec<bool>,
}

impl<'a> Search<'a> {
    fn new(a: &'a NGroupoid, b: &'a NGroupoid, kind: MorphismKind, op_match: &[usize]) -> Self {
        let src: Vec<&Groupoid> = a.ops().iter().collect();
        let dst: Vec<&Groupoid> = op_match.iter().map(|&j| &b.ops()[j]).collect();
        let k = a.order();
        let sig_a: Vec<_> = (0..k).map(|x| signature(&src, x, false)).collect();
        let anti = kind == MorphismKind::Anti;
        let sig_b: Vec<_> = (0..k).map(|y| signature(&dst, y, anti)).collect();
        let candidates = sig_a
            .iter()
            .map(|sa| (0..k).filter(|&y| &sig_b[y] == sa).collect())
            .collect();
        Search {
            src,
            dst,
            kind,
            k,
            candidates,
            perm: vec![UNSET; k],
            used: vec![false; k],
        }
    }

    /// Calls `emit` for every complete morphism until it returns false.
    fn run(&mut self, emit: &mut dyn FnMut(&[Element]) -> bool) {
        self.extend(0, emit);
    }

    fn extend(&mut self, x: usize, emit: &mut dyn FnMut(&[Element]) -> bool) -> bool {
        if x == self.k {
            return emit(&self.perm);
        }
        for ci in 0..self.candidates[x].len() {
            let y = self.candidates[x][ci];
            if self.used[y] {
                continue;
            }
            self.perm[x] = y;
            self.used[y] = true;
            let go_on = !self.consistent(x) || self.extend(x + 1, emit);
            self.used[y] = false;
            self.perm[x] = UNSET;
            if !go_on {
                return false;
            }
        }
        true
    }

    /// Checks every product among `0..=x` whose value is also mapped, and
    /// every product among `0..x` whose value is `x`.
    fn consistent(&self, x: usize) -> bool {
        let p = &self.perm;
        for (s, d) in self.src.iter().zip(&self.dst) {
            for u in 0..=x {
                for v in 0..=x {
                    if u != x && v != x && s.mul(u, v) != x {
                        continue;
                    }
                    let w = s.mul(u, v);
                    if p[w] == UNSET {
                        continue;
                    }
                    let want = match self.kind {
                        MorphismKind::Iso => d.mul(p[u], p[v]),
                        MorphismKind::Anti => d.mul(p[v], p[u]),
                    };
                    if p[w] != want {
                        return false;
                    }
                }
            }
        }
        true
    }
}

/// Isomorphism-invariant profile of an element. With `swap_sides` the left
/// and right statistics trade places, matching the view through an
/// anti-isomorphism.
fn signature(ops: &[&Groupoid], x: Element, swap_sides: bool) -> Vec<usize> {
    let mut sig = Vec::with_capacity(ops.len() * 5);
    for g in ops {
        let k = g.order();
        let left_abs = (0..k).filter(|&y| g.mul(x, y) == x).count();
        let right_abs = (0..k).filter(|&y| g.mul(y, x) == x).count();
        let left_pass = (0..k).filter(|&y| g.mul(x, y) == y).count();
        let right_pass = (0..k).filter(|&y| g.mul(y, x) == y).count();
        let hits = g.cells().iter().filter(|&&c| c == x).count();
        if swap_sides {
            sig.extend([usize::from(g.mul(x, x) == x), right_abs, left_abs, right_pass, left_pass, hits]);
        } else {
            sig.extend([usize::from(g.mul(x, x) == x), left_abs, right_abs, left_pass, right_pass, hits]);
        }
    }
    sig
}
