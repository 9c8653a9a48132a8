//! Integer partitions, compositions, diagrams and the dominance order.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A weakly decreasing sequence of positive integers.
///
/// The empty sequence is the unique partition of 0. Ordering is
/// lexicographic on the parts, so among partitions of the same weight the
/// largest in reverse-lexicographic order is `(n)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct Partition(Vec<usize>);

impl Partition {
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        if parts.contains(&0) || parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidPartition(parts));
        }
        Ok(Partition(parts))
    }

    pub fn empty() -> Self {
        Partition(Vec::new())
    }

    /// Builds a partition from parts that may be unsorted; zeros are dropped.
    pub fn from_unsorted(mut parts: Vec<usize>) -> Self {
        parts.retain(|&p| p > 0);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition(parts)
    }

    /// `(value^count)`, e.g. `rectangle(2, 3)` is `(2,2,2)`.
    pub fn rectangle(value: usize, count: usize) -> Self {
        if value == 0 {
            return Partition::empty();
        }
        Partition(vec![value; count])
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    pub fn into_parts(self) -> Vec<usize> {
        self.0
    }

    /// Sum of the parts.
    pub fn weight(&self) -> usize {
        self.0.iter().sum()
    }

    /// Number of parts.
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// The `i`-th part, 1-indexed, with zero padding past the end.
    pub fn part(&self, i: usize) -> usize {
        if i == 0 {
            return 0;
        }
        self.0.get(i - 1).copied().unwrap_or(0)
    }

    pub fn largest(&self) -> Option<usize> {
        self.0.first().copied()
    }

    pub fn smallest(&self) -> Option<usize> {
        self.0.last().copied()
    }

    /// Number of parts equal to `size`.
    pub fn multiplicity(&self, size: usize) -> usize {
        self.0.iter().filter(|&&p| p == size).count()
    }

    /// `(size, multiplicity)` pairs for each distinct part, largest first.
    pub fn multiplicities(&self) -> Vec<(usize, usize)> {
        let mut out: Vec<(usize, usize)> = Vec::new();
        for &p in &self.0 {
            match out.last_mut() {
                Some((s, m)) if *s == p => *m += 1,
                _ => out.push((p, 1)),
            }
        }
        out
    }

    pub fn dominates(&self, other: &Partition) -> Result<bool> {
        dominates(self, other)
    }

    pub fn is_balanced(&self) -> Result<bool> {
        is_balanced(self)
    }

    pub fn diagram(&self) -> Diagram {
        Diagram::new(self.clone())
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
        p.0
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, p) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, ")")
    }
}

/// Parses `"3,2,2"`, `"(3,2,2)"` or `"[3,2,2]"`; the empty string is the
/// empty partition.
impl FromStr for Partition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Partition::new(parse_integer_list(s)?)
    }
}

pub(crate) fn parse_integer_list(s: &str) -> Result<Vec<usize>> {
    let trimmed = s
        .trim()
        .trim_start_matches(['(', '['])
        .trim_end_matches([')', ']'])
        .trim();
    if trimmed.is_empty() {
        return Ok(Vec::new());
    }
    trimmed
        .split(',')
        .map(|t| {
            t.trim()
                .parse::<usize>()
                .map_err(|e| Error::Parse(format!("{t:?}: {e}")))
        })
        .collect()
}

/// A sequence of positive integers.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct Composition(Vec<usize>);

impl Composition {
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        if parts.contains(&0) {
            return Err(Error::InvalidComposition(parts));
        }
        Ok(Composition(parts))
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    pub fn weight(&self) -> usize {
        self.0.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn sort_to_partition(&self) -> Partition {
        sort_to_partition(self)
    }
}

impl TryFrom<Vec<usize>> for Composition {
    type Error = Error;

    fn try_from(parts: Vec<usize>) -> Result<Self> {
        Composition::new(parts)
    }
}

impl From<Composition> for Vec<usize> {
    fn from(c: Composition) -> Self {
        c.0
    }
}

impl fmt::Display for Composition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(ToString::to_string).collect();
        write!(f, "[{}]", parts.join(","))
    }
}

/// Cells of a partition diagram, 1-indexed `(row, column)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Diagram {
    shape: Partition,
}

impl Diagram {
    pub fn new(shape: Partition) -> Self {
        Diagram { shape }
    }

    pub fn shape(&self) -> &Partition {
        &self.shape
    }

    pub fn contains(&self, (row, col): (usize, usize)) -> bool {
        row >= 1 && col >= 1 && col <= self.shape.part(row)
    }

    /// Cells in row-major order, top row first.
    pub fn cells(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.shape
            .parts()
            .iter()
            .enumerate()
            .flat_map(|(i, &len)| (1..=len).map(move |c| (i + 1, c)))
    }
}

/// `Λ(κ)`: the parts of `κ` in weakly decreasing order.
pub fn sort_to_partition(composition: &Composition) -> Partition {
    Partition::from_unsorted(composition.parts().to_vec())
}

/// Dominance order: every prefix sum of `lambda` is at least the
/// corresponding prefix sum of `mu`.
pub fn dominates(lambda: &Partition, mu: &Partition) -> Result<bool> {
    let (left, right) = (lambda.weight(), mu.weight());
    if left != right {
        return Err(Error::UnequalWeight { left, right });
    }
    let len = lambda.len().max(mu.len());
    let (mut a, mut b) = (0usize, 0usize);
    for i in 1..=len {
        a += lambda.part(i);
        b += mu.part(i);
        if a < b {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Largest part at most one more than the smallest part.
pub fn is_balanced(lambda: &Partition) -> Result<bool> {
    match (lambda.largest(), lambda.smallest()) {
        (Some(hi), Some(lo)) => Ok(hi <= lo + 1),
        _ => Err(Error::EmptyPartition),
    }
}

/// Partitions of `n` with optional bounds on part size and length, in
/// reverse-lexicographic order: `(n)` first, `(1^n)` last.
pub fn partitions_of(n: usize, max_part: Option<usize>, max_length: Option<usize>) -> PartitionIter {
    PartitionIter::new(n, max_part.unwrap_or(n), max_length.unwrap_or(n))
}

/// All partitions of `n`, reverse-lexicographic.
pub fn all_partitions(n: usize) -> Vec<Partition> {
    partitions_of(n, None, None).collect()
}

#[derive(Debug, Clone)]
pub struct PartitionIter {
    max_length: usize,
    current: Option<Vec<usize>>,
}

impl PartitionIter {
    fn new(n: usize, max_part: usize, max_length: usize) -> Self {
        let mut first = Vec::new();
        let feasible = if n == 0 {
            true
        } else if max_part == 0 {
            false
        } else {
            greedy_fill(&mut first, n, max_part.min(n));
            first.len() <= max_length
        };
        PartitionIter {
            max_length,
            current: feasible.then_some(first),
        }
    }
}

/// Appends `remaining` split greedily into parts of at most `cap`.
fn greedy_fill(parts: &mut Vec<usize>, mut remaining: usize, cap: usize) {
    while remaining > 0 {
        let p = cap.min(remaining);
        parts.push(p);
        remaining -= p;
    }
}

impl Iterator for PartitionIter {
    type Item = Partition;

    fn next(&mut self) -> Option<Partition> {
        let current = self.current.take()?;
        let mut next = current.clone();
        // Rightmost part that can be lowered by one with a feasible refill.
        let mut suffix = 0usize;
        let mut advanced = false;
        while let Some(p) = next.pop() {
            suffix += p;
            if p > 1 {
                let v = p - 1;
                let rest = suffix - v;
                let slots = self.max_length.saturating_sub(next.len() + 1);
                if rest.div_ceil(v) <= slots {
                    next.push(v);
                    greedy_fill(&mut next, rest, v);
                    advanced = true;
                    break;
                }
            }
        }
        if advanced {
            self.current = Some(next);
        }
        Some(Partition(current))
    }
}
