use std::collections::{HashMap, HashSet};

use num_bigint::BigUint;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::numeric::factorial;
use crate::partitions::{dominates, partitions_of, Partition};

use super::{bits, Graph, VertexSet};

/// A partition of the vertex set into stable blocks.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct StablePartition {
    blocks: Vec<VertexSet>,
    kind: Partition,
}

impl StablePartition {
    pub fn new(graph: &Graph, mut blocks: Vec<VertexSet>) -> Result<Self> {
        let mut seen = 0u64;
        for &b in &blocks {
            if b == 0 || seen & b != 0 || !graph.is_stable(b) {
                return Err(Error::BadShape(format!("block {b:#b} is empty, overlapping or not stable")));
            }
            seen |= b;
        }
        if seen != graph.vertices() {
            return Err(Error::BadShape("blocks do not cover every vertex".into()));
        }
        blocks.sort_by_key(|b| (std::cmp::Reverse(b.count_ones()), b.trailing_zeros()));
        let kind = Partition::from_unsorted(blocks.iter().map(|b| b.count_ones() as usize).collect());
        Ok(StablePartition { blocks, kind })
    }

    pub fn blocks(&self) -> &[VertexSet] {
        &self.blocks
    }

    /// Block sizes, sorted decreasing.
    pub fn kind(&self) -> &Partition {
        &self.kind
    }
}

/// Lazily yields every stable set of exactly `size` vertices, in
/// lexicographic order of their sorted vertex lists.
pub fn stable_sets(graph: &Graph, size: usize) -> StableSets<'_> {
    StableSets {
        graph,
        stack: vec![(0, graph.vertices(), size)],
    }
}

pub struct StableSets<'a> {
    graph: &'a Graph,
    stack: Vec<(VertexSet, VertexSet, usize)>,
}

impl Iterator for StableSets<'_> {
    type Item = VertexSet;

    fn next(&mut self) -> Option<VertexSet> {
        while let Some((chosen, candidates, need)) = self.stack.pop() {
            if need == 0 {
                return Some(chosen);
            }
            if (candidates.count_ones() as usize) < need {
                continue;
            }
            let vs: Vec<usize> = bits(candidates).collect();
            for &v in vs.iter().rev() {
                let higher = candidates & !((2u64 << v) - 1);
                let next = higher & !self.graph.neighbors(v);
                self.stack.push((chosen | 1 << v, next, need - 1));
            }
        }
        None
    }
}

/// Stable sets of `size` inside `pool` containing `anchor`.
fn stable_sets_through(graph: &Graph, anchor: usize, pool: VertexSet, size: usize, out: &mut Vec<VertexSet>) {
    fn rec(graph: &Graph, chosen: VertexSet, candidates: VertexSet, need: usize, out: &mut Vec<VertexSet>) {
        if need == 0 {
            out.push(chosen);
            return;
        }
        if (candidates.count_ones() as usize) < need {
            return;
        }
        for v in bits(candidates) {
            let higher = candidates & !((2u64 << v) - 1);
            rec(graph, chosen | 1 << v, higher & !graph.neighbors(v), need - 1, out);
        }
    }
    if size == 0 {
        return;
    }
    let candidates = pool & !graph.neighbors(anchor) & !(1 << anchor);
    rec(graph, 1 << anchor, candidates, size - 1, out);
}

struct BlockSearch<'a> {
    graph: &'a Graph,
    sizes: Vec<usize>,
}

impl<'a> BlockSearch<'a> {
    fn new(graph: &'a Graph, mu: &Partition) -> (Self, Vec<usize>) {
        let (sizes, mult) = mu.multiplicities().into_iter().unzip();
        (BlockSearch { graph, sizes }, mult)
    }

    // The block containing the lowest uncovered vertex is chosen next, so
    // each unordered partition is reached exactly once.
    fn count(&self, uncovered: VertexSet, remaining: Vec<usize>, memo: &mut HashMap<(VertexSet, Vec<usize>), BigUint>) -> BigUint {
        if uncovered == 0 {
            return if remaining.iter().all(|&r| r == 0) { BigUint::one() } else { BigUint::zero() };
        }
        let key = (uncovered, remaining);
        if let Some(v) = memo.get(&key) {
            return v.clone();
        }
        let (uncovered, remaining) = (key.0, &key.1);
        let anchor = uncovered.trailing_zeros() as usize;
        let mut total = BigUint::zero();
        let mut blocks = Vec::new();
        for (j, &s) in self.sizes.iter().enumerate() {
            if remaining[j] == 0 {
                continue;
            }
            blocks.clear();
            stable_sets_through(self.graph, anchor, uncovered, s, &mut blocks);
            let mut rest = remaining.clone();
            rest[j] -= 1;
            for &b in &blocks {
                total += self.count(uncovered & !b, rest.clone(), memo);
            }
        }
        memo.insert(key, total.clone());
        total
    }

    fn exists(&self, uncovered: VertexSet, remaining: Vec<usize>, dead: &mut HashSet<(VertexSet, Vec<usize>)>) -> bool {
        if uncovered == 0 {
            return remaining.iter().all(|&r| r == 0);
        }
        if dead.contains(&(uncovered, remaining.clone())) {
            return false;
        }
        let anchor = uncovered.trailing_zeros() as usize;
        let mut blocks = Vec::new();
        for (j, &s) in self.sizes.iter().enumerate() {
            if remaining[j] == 0 {
                continue;
            }
            blocks.clear();
            stable_sets_through(self.graph, anchor, uncovered, s, &mut blocks);
            let mut rest = remaining.clone();
            rest[j] -= 1;
            for &b in &blocks {
                if self.exists(uncovered & !b, rest.clone(), dead) {
                    return true;
                }
            }
        }
        dead.insert((uncovered, remaining));
        false
    }
}

/// Number of unordered stable partitions of `graph` of type `mu`; zero when
/// the weights differ.
pub fn stable_partition_count(graph: &Graph, mu: &Partition) -> BigUint {
    if mu.weight() != graph.size() {
        return BigUint::zero();
    }
    let (search, mult) = BlockSearch::new(graph, mu);
    search.count(graph.vertices(), mult, &mut HashMap::new())
}

/// Stable partitions of type `mu` with equal-size blocks additionally
/// ordered.
pub fn semi_ordered_count(graph: &Graph, mu: &Partition) -> BigUint {
    let order_factor = mu
        .multiplicities()
        .into_iter()
        .fold(BigUint::one(), |acc, (_, m)| acc * factorial(m));
    stable_partition_count(graph, mu) * order_factor
}

pub fn has_stable_partition(graph: &Graph, mu: &Partition) -> bool {
    if mu.weight() != graph.size() {
        return false;
    }
    let (search, mult) = BlockSearch::new(graph, mu);
    search.exists(graph.vertices(), mult, &mut HashSet::new())
}

/// First `mu` (reverse-lexicographic) dominated by `present` for which
/// `has` fails, optionally restricted to `len(mu) <= max_length`.
pub(crate) fn first_violation(
    present: &Partition,
    max_length: Option<usize>,
    has: impl Fn(&Partition) -> bool,
) -> Option<Partition> {
    partitions_of(present.weight(), present.largest(), max_length)
        .filter(|mu| dominates(present, mu).unwrap_or(false))
        .find(|mu| !has(mu))
}

/// A type dominated by `present` that `graph` has no stable partition of,
/// which certifies that `graph` is not nice and hence not Schur-positive.
pub fn niceness_violation(graph: &Graph, present: &Partition, max_length: Option<usize>) -> Result<Option<Partition>> {
    if present.weight() != graph.size() {
        return Err(Error::SizeMismatch {
            shape: present.weight(),
            vertices: graph.size(),
        });
    }
    if !has_stable_partition(graph, present) {
        return Err(Error::MissingStablePartition(present.clone()));
    }
    Ok(first_violation(present, max_length, |mu| has_stable_partition(graph, mu)))
}
