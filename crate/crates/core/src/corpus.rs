//! Named lattice instances: `zn:<n>`, `prod:<m>,<n>`, `chain:<len>`, `K`.

use std::fmt;
use std::str::FromStr;

use crate::error::Result;
use crate::mult::{trivial_mult, MultiplicativeLattice};
use crate::order::FiniteLattice;
use crate::ring::{ideal_lattice_prod, ideal_lattice_zn};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum InstanceSpec {
    /// `Id(ℤ_n)`
    Zn(u64),
    /// `Id(ℤ_m × ℤ_n)`
    Prod(u64, u64),
    /// Chain with `len` covers (`len + 1` elements), trivial multiplication.
    Chain(usize),
    /// The six-element lattice `0 < a < b < d < 1`, `0 < c < d` with
    /// trivial multiplication.
    K,
}

impl InstanceSpec {
    pub fn build(&self) -> Result<MultiplicativeLattice> {
        match *self {
            InstanceSpec::Zn(n) => Ok(ideal_lattice_zn(n)?.0),
            InstanceSpec::Prod(m, n) => Ok(ideal_lattice_prod(m, n)?.0),
            InstanceSpec::Chain(len) => trivial_mult(FiniteLattice::chain(len + 1)?),
            InstanceSpec::K => lattice_k(),
        }
    }
}

impl fmt::Display for InstanceSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            InstanceSpec::Zn(n) => write!(f, "zn:{n}"),
            InstanceSpec::Prod(m, n) => write!(f, "prod:{m},{n}"),
            InstanceSpec::Chain(len) => write!(f, "chain:{len}"),
            InstanceSpec::K => write!(f, "K"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("unrecognised instance `{0}` (expected zn:<n>, prod:<m>,<n>, chain:<len> or K)")]
pub struct ParseInstanceError(pub String);

impl FromStr for InstanceSpec {
    type Err = ParseInstanceError;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        let err = || ParseInstanceError(s.to_string());
        if s == "K" {
            return Ok(InstanceSpec::K);
        }
        let (kind, rest) = s.split_once(':').ok_or_else(err)?;
        match kind {
            "zn" => rest.trim().parse().map(InstanceSpec::Zn).map_err(|_| err()),
            "chain" => rest.trim().parse().map(InstanceSpec::Chain).map_err(|_| err()),
            "prod" => {
                let (m, n) = rest.split_once(',').ok_or_else(err)?;
                Ok(InstanceSpec::Prod(
                    m.trim().parse().map_err(|_| err())?,
                    n.trim().parse().map_err(|_| err())?,
                ))
            }
            _ => Err(err()),
        }
    }
}

/// Parses `standard`, `zn:<a>..<b>` (inclusive) or a single instance.
pub fn parse_corpus(s: &str) -> std::result::Result<Vec<InstanceSpec>, ParseInstanceError> {
    if s == "standard" {
        return Ok(standard_corpus());
    }
    if let Some(range) = s.strip_prefix("zn:") {
        if let Some((lo, hi)) = range.split_once("..") {
            let err = || ParseInstanceError(s.to_string());
            let lo: u64 = lo.trim().parse().map_err(|_| err())?;
            let hi: u64 = hi.trim().parse().map_err(|_| err())?;
            return Ok((lo..=hi).map(InstanceSpec::Zn).collect());
        }
    }
    Ok(vec![s.parse()?])
}

/// The lattice K with trivial multiplication, labels `0 a b c d 1`.
pub fn lattice_k() -> Result<MultiplicativeLattice> {
    let lattice = FiniteLattice::from_pairs(6, &[(0, 1), (1, 2), (2, 4), (0, 3), (3, 4), (4, 5)])?
        .with_labels(["0", "a", "b", "c", "d", "1"]);
    trivial_mult(lattice)
}

/// Moduli used for the product-ring part of the corpus.
pub const PRODUCT_MODULI: [u64; 6] = [2, 3, 4, 8, 9, 25];

/// `zn:2..=200`, `prod:m,n` for `m, n ∈ PRODUCT_MODULI`, trivial chains with
/// 1..=8 covers, and K.
pub fn standard_corpus() -> Vec<InstanceSpec> {
    let mut out: Vec<InstanceSpec> = (2..=200).map(InstanceSpec::Zn).collect();
    for m in PRODUCT_MODULI {
        for n in PRODUCT_MODULI {
            out.push(InstanceSpec::Prod(m, n));
        }
    }
    out.extend((1..=8).map(InstanceSpec::Chain));
    out.push(InstanceSpec::K);
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_specs() {
        assert_eq!("zn:12".parse(), Ok(InstanceSpec::Zn(12)));
        assert_eq!("prod:4,9".parse(), Ok(InstanceSpec::Prod(4, 9)));
        assert_eq!("K".parse(), Ok(InstanceSpec::K));
        assert!("zn:x".parse::<InstanceSpec>().is_err());
        assert_eq!(parse_corpus("zn:2..5").unwrap().len(), 4);
        assert_eq!(parse_corpus("standard").unwrap(), standard_corpus());
        assert_eq!(InstanceSpec::Prod(4, 9).to_string(), "prod:4,9");
    }

    #[test]
    fn corpus_size() {
        assert_eq!(standard_corpus().len(), 199 + 36 + 8 + 1);
        assert_eq!(InstanceSpec::Chain(3).build().unwrap().size(), 4);
    }
}
