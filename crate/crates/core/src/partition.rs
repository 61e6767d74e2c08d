//! Class-size partitions of complete multipartite graphs.

use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};

/// The multiset of class sizes of a complete multipartite graph, stored in
/// descending order.
///
/// `Partition::new([1, 3, 1])` and `Partition::new([3, 1, 1])` are the same
/// value; the classes are unordered.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
#[serde(transparent)]
pub struct Partition {
    parts: Vec<usize>,
}

impl Partition {
    /// Builds a partition from class sizes. Fails on an empty list or a
    /// zero part.
    pub fn new(parts: impl Into<Vec<usize>>) -> Result<Self> {
        let mut parts = parts.into();
        if parts.is_empty() {
            return Err(Error::input("a partition needs at least one part"));
        }
        if parts.contains(&0) {
            return Err(Error::input("partition parts must be positive"));
        }
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Ok(Partition { parts })
    }

    /// Parses the CLI syntax `"3,1,1"`.
    pub fn from_csv(s: &str) -> Result<Self> {
        let parts = s
            .split(',')
            .map(|tok| {
                tok.trim()
                    .parse::<usize>()
                    .map_err(|_| Error::input(format!("bad partition part {tok:?}")))
            })
            .collect::<Result<Vec<_>>>()?;
        Partition::new(parts)
    }

    /// Class sizes in descending order.
    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    /// Number of vertices of the corresponding graph.
    pub fn total(&self) -> usize {
        self.parts.iter().sum()
    }

    /// Number of classes, the `t` of "complete t-partite".
    pub fn class_count(&self) -> usize {
        self.parts.len()
    }

    pub fn to_csv(&self) -> String {
        self.parts
            .iter()
            .map(|p| p.to_string())
            .collect::<Vec<_>>()
            .join(",")
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_csv())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sorts_descending() {
        let p = Partition::new([1, 3, 2]).unwrap();
        assert_eq!(p.parts(), &[3, 2, 1]);
        assert_eq!(p.total(), 6);
        assert_eq!(p.class_count(), 3);
    }

    #[test]
    fn rejects_empty_and_zero() {
        assert!(Partition::new(Vec::new()).is_err());
        assert!(Partition::new([2, 0]).is_err());
    }

    #[test]
    fn csv_round_trip() {
        let p = Partition::from_csv("1,3,1").unwrap();
        assert_eq!(p.to_csv(), "3,1,1");
        assert!(Partition::from_csv("3,,1").is_err());
        assert!(Partition::from_csv("").is_err());
        assert!(Partition::from_csv("2,x").is_err());
    }
}
