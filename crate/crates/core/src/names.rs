//! Textual names for groupoids: `GA(n; d1,...,dn+1)`, `band:n,m`, `bare:d`
//! and the compact order-3 form `ijk/xyz`.

use crate::constructions::{splicing_groupoid, SplicingSpec};
use crate::error::{Error, Result};
use crate::groupoid::{Groupoid, NGroupoid};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum GroupoidName {
    Splicing(SplicingSpec),
    Band { rows: usize, cols: usize },
    Bare(usize),
    Compact3(Groupoid),
}

impl GroupoidName {
    pub fn parse(s: &str) -> Result<Self> {
        let s = s.trim();
        if let Some(rest) = s.strip_prefix("bare:") {
            return Ok(GroupoidName::Bare(parse_num(rest)?));
        }
        if let Some(rest) = s.strip_prefix("band:") {
            let (n, m) = rest
                .split_once(',')
                .ok_or_else(|| Error::Parse(format!("expected `band:n,m`, got {s:?}")))?;
            let (rows, cols) = (parse_num(n)?, parse_num(m)?);
            if rows == 0 || cols == 0 {
                return Err(Error::Validation("band sides must be positive".into()));
            }
            return Ok(GroupoidName::Band { rows, cols });
        }
        if let Some(rest) = s.strip_prefix("GA(").and_then(|r| r.strip_suffix(')')) {
            let (n, dims) = rest
                .split_once(';')
                .ok_or_else(|| Error::Parse(format!("expected `GA(n; d1,...)`, got {s:?}")))?;
            let n = parse_num(n)?;
            let dims = dims.split(',').map(parse_num).collect::<Result<Vec<_>>>()?;
            return Ok(GroupoidName::Splicing(SplicingSpec::new(n, dims)?));
        }
        if s.contains('/') {
            return Ok(GroupoidName::Compact3(Groupoid::parse_compact3(s)?));
        }
        Err(Error::Parse(format!("unrecognized groupoid name {s:?}")))
    }

    /// Materialized n-groupoid.
    pub fn build(&self) -> Result<NGroupoid> {
        match self {
            GroupoidName::Splicing(spec) => splicing_groupoid(spec),
            GroupoidName::Band { rows, cols } => Ok(Groupoid::rectangular_band(*rows, *cols)?.into()),
            GroupoidName::Bare(d) => Ok(NGroupoid::bare(*d)),
            GroupoidName::Compact3(g) => Ok(g.clone().into()),
        }
    }

    /// Factors for a shape. A splicing groupoid expands into its bare
    /// coordinates so it is never materialized.
    pub fn factors(&self) -> Result<Vec<NGroupoid>> {
        match self {
            GroupoidName::Splicing(spec) => Ok(spec.shape().factors().to_vec()),
            other => Ok(vec![other.build()?]),
        }
    }
}

fn parse_num(s: &str) -> Result<usize> {
    s.trim()
        .parse()
        .map_err(|_| Error::Parse(format!("expected a non-negative integer, got {:?}", s.trim())))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_every_form() {
        let ga = GroupoidName::parse("GA(2; 1,1,1)").unwrap();
        assert_eq!(ga.build().unwrap().order(), 8);
        assert_eq!(ga.factors().unwrap().len(), 3);
        let band = GroupoidName::parse("band:2,3").unwrap().build().unwrap();
        assert!(band.op(0).unwrap().is_rectangular_band());
        assert_eq!(GroupoidName::parse("bare:2").unwrap().build().unwrap(), NGroupoid::bare(2));
        assert!(matches!(GroupoidName::parse("000/111").unwrap(), GroupoidName::Compact3(_)));
    }

    #[test]
    fn rejects_garbage() {
        for bad in ["GA(2;1,1)", "GA(x;1)", "band:2", "band:0,1", "bare:-1", "nope", "000/000"] {
            assert!(GroupoidName::parse(bad).is_err(), "{bad}");
        }
    }
}
