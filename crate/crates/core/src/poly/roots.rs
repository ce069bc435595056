use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// One positive root with its multiplicity.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct RootEntry {
    pub x: f64,
    pub multiplicity: u32,
}

/// A multiset of positive abscissas; sorted ascending, entries pairwise distinct.
#[derive(Debug, Clone, PartialEq, Default, Serialize, Deserialize)]
#[serde(try_from = "Vec<RootEntry>", into = "Vec<RootEntry>")]
pub struct RootMultiset {
    entries: Vec<RootEntry>,
}

impl RootMultiset {
    pub fn empty() -> Self {
        Self::default()
    }

    pub fn new(mut entries: Vec<RootEntry>) -> Result<Self> {
        for e in &entries {
            if !(e.x > 0.0 && e.x.is_finite()) {
                return Err(Error::InvalidAbscissa(e.x));
            }
            if e.multiplicity == 0 {
                return Err(Error::Domain(format!("root {} has multiplicity zero", e.x)));
            }
        }
        entries.sort_by(|a, b| a.x.total_cmp(&b.x));
        if let Some(w) = entries.windows(2).find(|w| w[0].x == w[1].x) {
            return Err(Error::DuplicateAbscissa(w[0].x));
        }
        Ok(RootMultiset { entries })
    }

    /// All roots simple.
    pub fn simple(xs: &[f64]) -> Result<Self> {
        Self::new(xs.iter().map(|&x| RootEntry { x, multiplicity: 1 }).collect())
    }

    /// Builds a multiset from a list that may repeat values.
    pub fn from_repeated(xs: &[f64]) -> Result<Self> {
        let mut entries: Vec<RootEntry> = Vec::new();
        let mut sorted = xs.to_vec();
        sorted.sort_by(f64::total_cmp);
        for x in sorted {
            match entries.last_mut() {
                Some(last) if last.x == x => last.multiplicity += 1,
                _ => entries.push(RootEntry { x, multiplicity: 1 }),
            }
        }
        Self::new(entries)
    }

    pub fn entries(&self) -> &[RootEntry] {
        &self.entries
    }

    /// Cardinality counted with multiplicity.
    pub fn cardinality(&self) -> usize {
        self.entries.iter().map(|e| e.multiplicity as usize).sum()
    }

    pub fn distinct(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// Smallest relative gap `(x_{i+1} - x_i) / x_{i+1}` between neighbours.
    pub fn min_relative_gap(&self) -> Option<f64> {
        self.entries
            .windows(2)
            .map(|w| (w[1].x - w[0].x) / w[1].x)
            .min_by(f64::total_cmp)
    }
}

impl TryFrom<Vec<RootEntry>> for RootMultiset {
    type Error = Error;
    fn try_from(entries: Vec<RootEntry>) -> Result<Self> {
        RootMultiset::new(entries)
    }
}

impl From<RootMultiset> for Vec<RootEntry> {
    fn from(m: RootMultiset) -> Self {
        m.entries
    }
}

/// Numbers of positive and negative real roots, counted with multiplicity.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct PnPair {
    pub p: usize,
    pub n: usize,
}

impl PnPair {
    pub const fn new(p: usize, n: usize) -> Self {
        PnPair { p, n }
    }

    /// The pair seen after `x -> -x`.
    pub fn swapped(self) -> Self {
        PnPair { p: self.n, n: self.p }
    }
}

impl fmt::Display for PnPair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.p, self.n)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn multiset_cardinality_counts_multiplicity() {
        let m = RootMultiset::from_repeated(&[2.0, 1.0, 2.0, 2.0]).unwrap();
        assert_eq!(m.cardinality(), 4);
        assert_eq!(m.distinct(), 2);
        assert_eq!(m.entries()[0], RootEntry { x: 1.0, multiplicity: 1 });
        assert_eq!(m.entries()[1].multiplicity, 3);
    }

    #[test]
    fn rejects_bad_entries() {
        assert_eq!(RootMultiset::simple(&[0.0]), Err(Error::InvalidAbscissa(0.0)));
        assert_eq!(RootMultiset::simple(&[1.0, 1.0]), Err(Error::DuplicateAbscissa(1.0)));
        assert!(RootMultiset::new(vec![RootEntry { x: 1.0, multiplicity: 0 }]).is_err());
    }

    #[test]
    fn pair_swap() {
        assert_eq!(PnPair::new(3, 0).swapped(), PnPair::new(0, 3));
        assert_eq!(PnPair::new(2, 1).to_string(), "(2,1)");
    }
}
