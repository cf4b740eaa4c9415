//! Finite groupoids stored as Cayley tables, and the predicates that decide
//! idempotency, nowhere-commutativity, associativity and the rectangular band
//! identities.
//!
//! Elements of an order-`k` carrier are the indices `0..k`. Tables are row
//! major with the row indexed by the left factor, so `cells[a * k + b]` holds
//! `a · b`.

use serde::{Deserialize, Serialize};
use std::fmt;

use crate::error::{Error, Result};

pub type Element = usize;

/// Current version tag written into every JSON document this crate emits.
pub const FORMAT_VERSION: u32 = 1;

/// A finite carrier `{0, .., order-1}` with one total binary operation.
/// Serializes as its list of rows.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<Vec<Element>>", into = "Vec<Vec<Element>>")]
pub struct Groupoid {
    order: usize,
    cells: Vec<Element>,
}

impl Groupoid {
    /// Builds a groupoid from a row-major cell vector of length `order²`.
    pub fn new(order: usize, cells: Vec<Element>) -> Result<Self> {
        if order == 0 {
            return Err(Error::Domain("groupoid order must be positive".into()));
        }
        if cells.len() != order * order {
            return Err(Error::Domain(format!(
                "order {order} needs {} cells, got {}",
                order * order,
                cells.len()
            )));
        }
        if let Some((i, &v)) = cells.iter().enumerate().find(|(_, &v)| v >= order) {
            return Err(Error::Domain(format!(
                "cell ({}, {}) holds {v}, outside 0..{order}",
                i / order,
                i % order
            )));
        }
        Ok(Groupoid { order, cells })
    }

    pub fn from_rows<R: AsRef<[Element]>>(rows: &[R]) -> Result<Self> {
        let order = rows.len();
        let mut cells = Vec::with_capacity(order * order);
        for (r, row) in rows.iter().enumerate() {
            let row = row.as_ref();
            if row.len() != order {
                return Err(Error::Domain(format!(
                    "row {r} has {} entries, expected {order}",
                    row.len()
                )));
            }
            cells.extend_from_slice(row);
        }
        Groupoid::new(order, cells)
    }

    /// Builds the table cell by cell from a closure.
    pub fn from_fn(order: usize, mut f: impl FnMut(Element, Element) -> Element) -> Result<Self> {
        let mut cells = Vec::with_capacity(order * order);
        for a in 0..order {
            for b in 0..order {
                cells.push(f(a, b));
            }
        }
        Groupoid::new(order, cells)
    }

    /// `x · y = x`.
    pub fn left_zero(order: usize) -> Self {
        Groupoid::from_fn(order, |a, _| a).expect("left-zero table is well formed")
    }

    /// `x · y = y`.
    pub fn right_zero(order: usize) -> Self {
        Groupoid::from_fn(order, |_, b| b).expect("right-zero table is well formed")
    }

    /// The rectangular band on `rows × cols` with `(x, y) · (a, b) = (x, b)`.
    /// Pairs are ranked `x * cols + y`.
    pub fn rectangular_band(rows: usize, cols: usize) -> Result<Self> {
        if rows == 0 || cols == 0 {
            return Err(Error::Domain("band sides must be positive".into()));
        }
        Groupoid::from_fn(rows * cols, |p, q| (p / cols) * cols + q % cols)
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn cells(&self) -> &[Element] {
        &self.cells
    }

    /// Unchecked product; panics on out-of-range indices like slice indexing.
    #[inline]
    pub fn mul(&self, a: Element, b: Element) -> Element {
        self.cells[a * self.order + b]
    }

    /// Checked product `a · b`.
    pub fn multiply(&self, a: Element, b: Element) -> Result<Element> {
        if a >= self.order || b >= self.order {
            return Err(Error::Domain(format!(
                "element pair ({a}, {b}) outside carrier of order {}",
                self.order
            )));
        }
        Ok(self.mul(a, b))
    }

    pub fn row(&self, a: Element) -> &[Element] {
        &self.cells[a * self.order..(a + 1) * self.order]
    }

    pub fn rows(&self) -> Vec<Vec<Element>> {
        self.cells.chunks(self.order).map(<[_]>::to_vec).collect()
    }

    /// The opposite groupoid, `a ∘ b = b · a`.
    pub fn transpose(&self) -> Self {
        Groupoid {
            order: self.order,
            cells: (0..self.order * self.order)
                .map(|i| self.mul(i % self.order, i / self.order))
                .collect(),
        }
    }

    pub fn is_idempotent(&self) -> bool {
        (0..self.order).all(|a| self.mul(a, a) == a)
    }

    pub fn is_nowhere_commutative(&self) -> bool {
        (0..self.order).all(|a| (a + 1..self.order).all(|b| self.mul(a, b) != self.mul(b, a)))
    }

    pub fn is_genetic(&self) -> bool {
        self.is_idempotent() && self.is_nowhere_commutative()
    }

    pub fn is_associative(&self) -> bool {
        let k = self.order;
        (0..k).all(|a| {
            (0..k).all(|b| {
                let ab = self.mul(a, b);
                (0..k).all(|c| self.mul(ab, c) == self.mul(a, self.mul(b, c)))
            })
        })
    }

    /// `(ab)c = a(bc)` and `(ab)a = a` for all elements.
    pub fn is_rectangular_band(&self) -> bool {
        let absorbs = (0..self.order)
            .all(|a| (0..self.order).all(|b| self.mul(self.mul(a, b), a) == a));
        absorbs && self.is_associative()
    }

    /// Number of distinct rows and distinct columns. For a rectangular band
    /// on `n × m` this is `(n, m)`.
    pub fn band_dimensions(&self) -> (usize, usize) {
        let mut rows: Vec<&[Element]> = self.cells.chunks(self.order).collect();
        rows.sort_unstable();
        rows.dedup();
        let t = self.transpose();
        let mut cols: Vec<&[Element]> = t.cells.chunks(self.order).collect();
        cols.sort_unstable();
        cols.dedup();
        (rows.len(), cols.len())
    }

    /// Whether `subset` is closed under the operation.
    pub fn is_closed(&self, subset: &[Element]) -> bool {
        subset
            .iter()
            .all(|&a| subset.iter().all(|&b| subset.contains(&self.mul(a, b))))
    }

    /// The subgroupoid on a closed subset, relabelled `0..subset.len()` in the
    /// order the subset lists its elements.
    pub fn restrict(&self, subset: &[Element]) -> Result<Self> {
        if subset.iter().any(|&a| a >= self.order) {
            return Err(Error::Domain("subset element outside carrier".into()));
        }
        if !self.is_closed(subset) {
            return Err(Error::Validation("subset is not closed under the operation".into()));
        }
        let pos = |x: Element| subset.iter().position(|&s| s == x).expect("closed subset");
        Groupoid::from_fn(subset.len(), |i, j| pos(self.mul(subset[i], subset[j])))
    }

    /// Component-wise product on `self × other`, pairs ranked `a * |other| + b`.
    pub fn direct_product(&self, other: &Groupoid) -> Groupoid {
        let m = other.order;
        Groupoid::from_fn(self.order * m, |p, q| {
            self.mul(p / m, q / m) * m + other.mul(p % m, q % m)
        })
        .expect("direct product is well formed")
    }

    /// The image under the map sending element `a` to `labels[a]`, when that
    /// map is a homomorphism onto `0..=max(labels)`. Fails with the first
    /// pair of products the identification cannot reconcile.
    pub fn quotient(&self, labels: &[Element]) -> Result<Self> {
        if labels.len() != self.order {
            return Err(Error::Domain(format!(
                "{} labels for a carrier of order {}",
                labels.len(),
                self.order
            )));
        }
        let size = labels.iter().max().map_or(0, |m| m + 1);
        if (0..size).any(|c| !labels.contains(&c)) {
            return Err(Error::Domain("labels must cover 0..=max".into()));
        }
        let mut cells = vec![usize::MAX; size * size];
        for a in 0..self.order {
            for b in 0..self.order {
                let cell = &mut cells[labels[a] * size + labels[b]];
                let v = labels[self.mul(a, b)];
                if *cell == usize::MAX {
                    *cell = v;
                } else if *cell != v {
                    return Err(Error::Validation(format!(
                        "identification is not a congruence: class pair ({}, {}) has products {} and {v}",
                        labels[a], labels[b], *cell
                    )));
                }
            }
        }
        Groupoid::new(size, cells)
    }

    /// Parses the order-3 notation `ijk/xyz`: diagonal `(0, 1, 2)`, upper
    /// cells `(0,1)=i, (0,2)=j, (1,2)=k`, lower cells `(1,0)=x, (2,0)=y,
    /// (2,1)=z`. Mirrored cells must differ.
    pub fn parse_compact3(s: &str) -> Result<Self> {
        let s = s.trim();
        let bytes = s.as_bytes();
        if bytes.len() != 7 || bytes[3] != b'/' {
            return Err(Error::Parse(format!("expected `ijk/xyz`, got {s:?}")));
        }
        let mut digits = [0usize; 6];
        for (slot, &c) in digits
            .iter_mut()
            .zip(bytes[..3].iter().chain(&bytes[4..]))
        {
            *slot = match c {
                b'0'..=b'2' => usize::from(c - b'0'),
                _ => return Err(Error::Parse(format!("digit outside 0..=2 in {s:?}"))),
            };
        }
        let [i, j, k, x, y, z] = digits;
        for (up, low, cell) in [(i, x, "(0,1)"), (j, y, "(0,2)"), (k, z, "(1,2)")] {
            if up == low {
                return Err(Error::Validation(format!(
                    "{s}: cell {cell} equals its mirror, breaking nowhere-commutativity"
                )));
            }
        }
        Groupoid::from_rows(&[[0, i, j], [x, 1, k], [y, z, 2]])
    }

    pub fn to_compact3(&self) -> Result<String> {
        if self.order != 3 {
            return Err(Error::Domain(format!(
                "compact notation needs order 3, got {}",
                self.order
            )));
        }
        if !self.is_idempotent() {
            return Err(Error::Domain("compact notation needs diagonal (0, 1, 2)".into()));
        }
        let m = |a, b| self.mul(a, b);
        Ok(format!(
            "{}{}{}/{}{}{}",
            m(0, 1),
            m(0, 2),
            m(1, 2),
            m(1, 0),
            m(2, 0),
            m(2, 1)
        ))
    }
}

impl TryFrom<Vec<Vec<Element>>> for Groupoid {
    type Error = Error;
    fn try_from(rows: Vec<Vec<Element>>) -> Result<Self> {
        Groupoid::from_rows(&rows)
    }
}

impl From<Groupoid> for Vec<Vec<Element>> {
    fn from(g: Groupoid) -> Self {
        g.rows()
    }
}

impl fmt::Debug for Groupoid {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Groupoid{:?}", self.rows())
    }
}

impl fmt::Display for Groupoid {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if let Ok(s) = self.to_compact3() {
            if Groupoid::parse_compact3(&s).as_ref() == Ok(self) {
                return f.write_str(&s);
            }
        }
        for (r, row) in self.cells.chunks(self.order).enumerate() {
            if r > 0 {
                f.write_str(" ")?;
            }
            for v in row {
                write!(f, "{v}")?;
            }
        }
        Ok(())
    }
}

/// A finite carrier with an ordered list of binary operations. Zero
/// operations encode a bare set.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "NGroupoidJson", into = "NGroupoidJson")]
pub struct NGroupoid {
    order: usize,
    ops: Vec<Groupoid>,
}

impl NGroupoid {
    pub fn new(order: usize, ops: Vec<Groupoid>) -> Result<Self> {
        if order == 0 {
            return Err(Error::Domain("carrier order must be positive".into()));
        }
        if let Some((i, g)) = ops.iter().enumerate().find(|(_, g)| g.order() != order) {
            return Err(Error::Domain(format!(
                "operation {i} has order {}, carrier has order {order}",
                g.order()
            )));
        }
        Ok(NGroupoid { order, ops })
    }

    /// The operation-free carrier `{0, .., d}`.
    pub fn bare(d: usize) -> Self {
        NGroupoid {
            order: d + 1,
            ops: Vec::new(),
        }
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn op_count(&self) -> usize {
        self.ops.len()
    }

    pub fn ops(&self) -> &[Groupoid] {
        &self.ops
    }

    pub fn op(&self, i: usize) -> Result<&Groupoid> {
        self.ops.get(i).ok_or_else(|| {
            Error::Domain(format!("operation {i} out of range (have {})", self.ops.len()))
        })
    }

    pub fn into_ops(self) -> Vec<Groupoid> {
        self.ops
    }

    pub fn is_genetic(&self) -> bool {
        self.ops.iter().all(Groupoid::is_genetic)
    }

    pub fn is_associative(&self) -> bool {
        self.ops.iter().all(Groupoid::is_associative)
    }

    /// Every operation transposed at once.
    pub fn transpose(&self) -> Self {
        NGroupoid {
            order: self.order,
            ops: self.ops.iter().map(Groupoid::transpose).collect(),
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("groupoid JSON is infallible")
    }

    pub fn from_json(s: &str) -> Result<Self> {
        serde_json::from_str(s).map_err(|e| Error::Parse(e.to_string()))
    }
}

impl From<Groupoid> for NGroupoid {
    fn from(g: Groupoid) -> Self {
        NGroupoid {
            order: g.order(),
            ops: vec![g],
        }
    }
}

#[derive(Serialize, Deserialize)]
struct NGroupoidJson {
    #[serde(default = "default_version")]
    format_version: u32,
    order: usize,
    ops: Vec<Groupoid>,
}

fn default_version() -> u32 {
    FORMAT_VERSION
}

impl TryFrom<NGroupoidJson> for NGroupoid {
    type Error = Error;

    fn try_from(j: NGroupoidJson) -> Result<Self> {
        NGroupoid::new(j.order, j.ops)
    }
}

impl From<NGroupoid> for NGroupoidJson {
    fn from(g: NGroupoid) -> Self {
        NGroupoidJson {
            format_version: FORMAT_VERSION,
            order: g.order,
            ops: g.ops,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn g(rows: &[[usize; 3]]) -> Groupoid {
        Groupoid::from_rows(rows).unwrap()
    }

    #[test]
    fn multiply_reads_row_left_factor() {
        let lz = Groupoid::from_rows(&[[0, 0], [1, 1]]).unwrap();
        assert_eq!(lz.multiply(0, 1), Ok(0));
        assert_eq!(lz.multiply(1, 0), Ok(1));
        assert!(matches!(lz.multiply(2, 0), Err(Error::Domain(_))));
    }

    #[test]
    fn order_two_predicates() {
        let lz = Groupoid::from_rows(&[[0, 0], [1, 1]]).unwrap();
        let bad = Groupoid::from_rows(&[[1, 0], [1, 0]]).unwrap();
        assert!(lz.is_idempotent());
        assert!(lz.is_nowhere_commutative());
        assert!(!bad.is_idempotent());
        assert!(!bad.is_genetic());
        let comm = Groupoid::from_rows(&[[0, 1], [1, 1]]).unwrap();
        assert!(!comm.is_nowhere_commutative());
        assert!(Groupoid::from_rows(&[[0]]).unwrap().is_genetic());
    }

    #[test]
    fn compact_examples() {
        let a = Groupoid::parse_compact3("000/111").unwrap();
        assert_eq!(a, g(&[[0, 0, 0], [1, 1, 0], [1, 1, 2]]));
        assert!(a.is_genetic());
        assert!(!a.is_associative());
        assert!(!a.is_rectangular_band());

        let b = Groupoid::parse_compact3("001/122").unwrap();
        assert_eq!(b, g(&[[0, 0, 0], [1, 1, 1], [2, 2, 2]]));
        assert!(b.is_associative());
        assert!(b.is_rectangular_band());
        assert_eq!(b.band_dimensions(), (3, 1));

        assert_eq!(a.to_compact3().unwrap(), "000/111");
        assert_eq!(b.to_compact3().unwrap(), "001/122");
    }

    #[test]
    fn compact_rejects() {
        assert!(matches!(Groupoid::parse_compact3("000/000"), Err(Error::Validation(_))));
        assert!(matches!(Groupoid::parse_compact3("00/111"), Err(Error::Parse(_))));
        assert!(matches!(Groupoid::parse_compact3("003/111"), Err(Error::Parse(_))));
        assert!(matches!(Groupoid::parse_compact3("000-111"), Err(Error::Parse(_))));
        assert!(Groupoid::left_zero(2).to_compact3().is_err());
        let nonidem = g(&[[1, 0, 0], [1, 1, 0], [1, 1, 2]]);
        assert!(nonidem.to_compact3().is_err());
    }

    #[test]
    fn rectangular_band_shape() {
        for (n, m) in [(1, 1), (2, 1), (1, 3), (2, 3), (3, 2)] {
            let band = Groupoid::rectangular_band(n, m).unwrap();
            assert!(band.is_rectangular_band());
            assert!(band.is_genetic());
            assert_eq!(band.band_dimensions(), (n, m));
        }
    }

    #[test]
    fn restrict_and_product() {
        let a = Groupoid::parse_compact3("000/111").unwrap();
        let sub = a.restrict(&[0, 1]).unwrap();
        assert_eq!(sub, Groupoid::left_zero(2));
        assert!(a.restrict(&[1, 2]).is_err());
        let p = Groupoid::left_zero(2).direct_product(&Groupoid::right_zero(2));
        assert_eq!(p.mul(0b01, 0b10), 0b00);
        assert!(p.is_genetic());
    }

    #[test]
    fn quotient_of_000_111() {
        let a = Groupoid::parse_compact3("000/111").unwrap();
        let q = a.quotient(&[0, 0, 1]).unwrap();
        assert_eq!(q, Groupoid::from_rows(&[[0, 0], [0, 1]]).unwrap());
        assert!(!q.is_genetic());
        assert!(matches!(a.quotient(&[0, 1, 0]), Err(Error::Validation(_))));
    }

    #[test]
    fn json_round_trip_and_validation() {
        let ng = NGroupoid::new(2, vec![Groupoid::left_zero(2), Groupoid::right_zero(2)]).unwrap();
        let s = ng.to_json();
        assert!(s.contains("\"format_version\":1"));
        assert_eq!(NGroupoid::from_json(&s).unwrap(), ng);
        assert!(NGroupoid::from_json(r#"{"order":2,"ops":[[[0,0],[1,2]]]}"#).is_err());
        assert!(NGroupoid::from_json(r#"{"order":3,"ops":[[[0,0],[1,1]]]}"#).is_err());
        let bare = NGroupoid::from_json(r#"{"order":3,"ops":[]}"#).unwrap();
        assert_eq!(bare, NGroupoid::bare(2));
    }
}
