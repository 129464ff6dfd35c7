//! Integer partitions and the Young-diagram operations the rest of the crate
//! is built on.
//!
//! A [`Partition`] is an immutable, weakly decreasing list of positive parts.
//! Rows are 1-based in every public method that takes a row index.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct Partition {
    parts: Vec<usize>,
}

impl Partition {
    /// Builds a partition from weakly decreasing parts. Trailing zeros are
    /// dropped; any other zero or an increase is rejected.
    pub fn new(mut parts: Vec<usize>) -> Result<Self> {
        while parts.last() == Some(&0) {
            parts.pop();
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidPartition(format!(
                "parts {parts:?} are not weakly decreasing"
            )));
        }
        Ok(Partition { parts })
    }

    /// Caller guarantees the parts are weakly decreasing and positive.
    pub(crate) fn from_parts_unchecked(parts: Vec<usize>) -> Self {
        debug_assert!(parts.windows(2).all(|w| w[0] >= w[1]));
        debug_assert!(parts.last() != Some(&0));
        Partition { parts }
    }

    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    /// The staircase `(k, k-1, ..., 1)`.
    pub fn staircase(k: usize) -> Result<Self> {
        if k == 0 {
            return Err(Error::EmptyStaircase);
        }
        Ok(Partition {
            parts: (1..=k).rev().collect(),
        })
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    /// Number of boxes.
    pub fn size(&self) -> usize {
        self.parts.iter().sum()
    }

    /// Number of nonzero parts.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Part in 0-based position `i`, zero past the end.
    pub fn part(&self, i: usize) -> usize {
        self.parts.get(i).copied().unwrap_or(0)
    }

    pub fn conjugate(&self) -> Partition {
        let width = self.part(0);
        let mut parts = Vec::with_capacity(width);
        for j in 1..=width {
            parts.push(self.parts.iter().take_while(|&&x| x >= j).count());
        }
        Partition { parts }
    }

    /// Young-diagram containment `other ⊆ self`.
    pub fn contains(&self, other: &Partition) -> bool {
        other.len() <= self.len() && other.parts.iter().zip(&self.parts).all(|(a, b)| a <= b)
    }

    /// Rows (1-based) where a box can be added.
    pub fn addable_nodes(&self) -> Vec<usize> {
        (1..=self.len() + 1)
            .filter(|&row| row == 1 || self.part(row - 2) > self.part(row - 1))
            .collect()
    }

    /// Rows (1-based) whose last box can be removed.
    pub fn removable_nodes(&self) -> Vec<usize> {
        (1..=self.len())
            .filter(|&row| self.part(row - 1) > self.part(row))
            .collect()
    }

    pub fn add_node(&self, row: usize) -> Result<Partition> {
        if row == 0 || row > self.len() + 1 || (row > 1 && self.part(row - 2) == self.part(row - 1))
        {
            return Err(Error::NotAddable {
                partition: self.to_string(),
                row,
            });
        }
        let mut parts = self.parts.clone();
        if row == parts.len() + 1 {
            parts.push(1);
        } else {
            parts[row - 1] += 1;
        }
        Ok(Partition { parts })
    }

    pub fn remove_node(&self, row: usize) -> Result<Partition> {
        if row == 0 || row > self.len() || self.part(row - 1) == self.part(row) {
            return Err(Error::NotRemovable {
                partition: self.to_string(),
                row,
            });
        }
        let mut parts = self.parts.clone();
        parts[row - 1] -= 1;
        if parts[row - 1] == 0 {
            parts.pop();
        }
        Ok(Partition { parts })
    }

    /// Some nonzero part value occurs at least `p` times.
    pub fn is_p_singular(&self, p: u32) -> bool {
        let p = p as usize;
        self.parts.chunk_by(|a, b| a == b).any(|run| run.len() >= p)
    }

    pub fn is_p_regular(&self, p: u32) -> bool {
        !self.is_p_singular(p)
    }

    /// The conjugate is p-regular.
    pub fn is_p_restricted(&self, p: u32) -> bool {
        self.conjugate().is_p_regular(p)
    }

    /// All `ν ⊆ self` with `|ν| = size`, lexicographically descending.
    pub fn subpartitions_of_size(&self, size: usize) -> Vec<Partition> {
        let mut out = Vec::new();
        if size > self.size() {
            return out;
        }
        let mut current = Vec::with_capacity(self.len());
        self.subpartitions_dfs(size, usize::MAX, &mut current, &mut out);
        out
    }

    fn subpartitions_dfs(
        &self,
        remaining: usize,
        cap: usize,
        current: &mut Vec<usize>,
        out: &mut Vec<Partition>,
    ) {
        if remaining == 0 {
            out.push(Partition {
                parts: current.clone(),
            });
            return;
        }
        let row = current.len();
        if row >= self.len() {
            return;
        }
        let hi = self.parts[row].min(cap).min(remaining);
        // the rows below can hold at most min(λ_r, x) each
        for x in (1..=hi).rev() {
            let room: usize = self.parts[row + 1..].iter().map(|&l| l.min(x)).sum();
            if x + room < remaining {
                break;
            }
            current.push(x);
            self.subpartitions_dfs(remaining - x, x, current, out);
            current.pop();
        }
    }
}

/// All partitions of `n`, lexicographically descending.
pub fn partitions_of(n: usize) -> Vec<Partition> {
    fn go(remaining: usize, cap: usize, current: &mut Vec<usize>, out: &mut Vec<Partition>) {
        if remaining == 0 {
            out.push(Partition::from_parts_unchecked(current.clone()));
            return;
        }
        for x in (1..=cap.min(remaining)).rev() {
            current.push(x);
            go(remaining - x, x, current, out);
            current.pop();
        }
    }
    let mut out = Vec::new();
    go(n, n, &mut Vec::new(), &mut out);
    out
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("[")?;
        for (i, x) in self.parts.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{x}")?;
        }
        f.write_str("]")
    }
}

impl FromStr for Partition {
    type Err = Error;

    /// Parses `[4,3,1]`; `[]` is the empty partition.
    fn from_str(s: &str) -> Result<Self> {
        let inner = s
            .trim()
            .strip_prefix('[')
            .and_then(|t| t.strip_suffix(']'))
            .ok_or_else(|| Error::InvalidPartition(format!("expected [a,b,...], got {s:?}")))?;
        if inner.trim().is_empty() {
            return Ok(Partition::empty());
        }
        let parts = inner
            .split(',')
            .map(|t| {
                t.trim()
                    .parse::<usize>()
                    .map_err(|_| Error::InvalidPartition(format!("bad part {t:?} in {s:?}")))
            })
            .collect::<Result<Vec<_>>>()?;
        Partition::new(parts)
    }
}

impl TryFrom<Vec<usize>> for Partition {
    type Error = Error;

    fn try_from(parts: Vec<usize>) -> Result<Self> {
        Partition::new(parts)
    }
}

impl From<Partition> for Vec<usize> {
    fn from(p: Partition) -> Self {
        p.parts
    }
}

/// Total size of a tuple of partitions.
pub fn total_size(tuple: &[Partition]) -> usize {
    tuple.iter().map(Partition::size).sum()
}
