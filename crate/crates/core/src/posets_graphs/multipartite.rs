use std::collections::HashMap;

use num_bigint::BigUint;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::numeric::factorial;
use crate::partitions::Partition;

use super::{incomparability_graph, Graph, Poset, VertexSet};

/// Side membership for `K_λ`: side `i` occupies a consecutive block of
/// `λ_i` vertices, rank 0 being the chain minimum.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MultipartiteSpec {
    pub lambda: Partition,
    pub side_of: Vec<usize>,
    pub rank_in_side: Vec<usize>,
}

impl MultipartiteSpec {
    pub fn side_mask(&self, side: usize) -> VertexSet {
        self.side_of
            .iter()
            .enumerate()
            .filter(|(_, &s)| s == side)
            .fold(0, |acc, (v, _)| acc | 1 << v)
    }

    /// Number of stable partitions of `K_λ` of type `mu`.
    ///
    /// Each block lies inside one side, so this is a sum over ways of
    /// distributing the parts of `mu` among the sides, weighted by the number
    /// of set partitions of each side with the assigned block sizes.
    pub fn stable_partition_count(&self, mu: &Partition) -> BigUint {
        if mu.weight() != self.lambda.weight() {
            return BigUint::zero();
        }
        let dp = SideDp::new(&self.lambda, mu);
        let mut memo = HashMap::new();
        dp.count(0, dp.initial.clone(), &mut memo)
    }

    pub fn has_stable_partition(&self, mu: &Partition) -> bool {
        if mu.weight() != self.lambda.weight() {
            return false;
        }
        let dp = SideDp::new(&self.lambda, mu);
        let mut dead = std::collections::HashSet::new();
        dp.exists(0, dp.initial.clone(), &mut dead)
    }
}

struct SideDp<'a> {
    sides: &'a [usize],
    sizes: Vec<usize>,
    initial: Vec<usize>,
}

impl<'a> SideDp<'a> {
    fn new(lambda: &'a Partition, mu: &Partition) -> Self {
        let (sizes, initial) = mu.multiplicities().into_iter().unzip();
        SideDp {
            sides: lambda.parts(),
            sizes,
            initial,
        }
    }

    /// Calls `f` with each multiplicity vector drawn from `remaining` whose
    /// blocks sum to `target`.
    fn for_each_fill(&self, target: usize, remaining: &[usize], f: &mut dyn FnMut(&[usize])) {
        fn rec(
            sizes: &[usize],
            remaining: &[usize],
            j: usize,
            left: usize,
            take: &mut Vec<usize>,
            f: &mut dyn FnMut(&[usize]),
        ) {
            if j == sizes.len() {
                if left == 0 {
                    f(take);
                }
                return;
            }
            let max = remaining[j].min(left / sizes[j]);
            for a in (0..=max).rev() {
                take.push(a);
                rec(sizes, remaining, j + 1, left - a * sizes[j], take, f);
                take.pop();
            }
        }
        let mut take = Vec::with_capacity(self.sizes.len());
        rec(&self.sizes, remaining, 0, target, &mut take, f);
    }

    fn count(
        &self,
        side: usize,
        remaining: Vec<usize>,
        memo: &mut HashMap<(usize, Vec<usize>), BigUint>,
    ) -> BigUint {
        if side == self.sides.len() {
            return if remaining.iter().all(|&r| r == 0) {
                BigUint::one()
            } else {
                BigUint::zero()
            };
        }
        let key = (side, remaining);
        if let Some(v) = memo.get(&key) {
            return v.clone();
        }
        let remaining = &key.1;
        let mut fills = Vec::new();
        self.for_each_fill(self.sides[side], remaining, &mut |take| fills.push(take.to_vec()));
        let mut total = BigUint::zero();
        for take in fills {
            let mut ways = factorial(self.sides[side]);
            for (j, &a) in take.iter().enumerate() {
                ways /= factorial(self.sizes[j]).pow(a as u32) * factorial(a);
            }
            let rest: Vec<usize> = remaining.iter().zip(&take).map(|(r, a)| r - a).collect();
            total += ways * self.count(side + 1, rest, memo);
        }
        memo.insert(key, total.clone());
        total
    }

    fn exists(
        &self,
        side: usize,
        remaining: Vec<usize>,
        dead: &mut std::collections::HashSet<(usize, Vec<usize>)>,
    ) -> bool {
        if side == self.sides.len() {
            return remaining.iter().all(|&r| r == 0);
        }
        if dead.contains(&(side, remaining.clone())) {
            return false;
        }
        let mut fills = Vec::new();
        self.for_each_fill(self.sides[side], &remaining, &mut |take| fills.push(take.to_vec()));
        for take in fills {
            let rest: Vec<usize> = remaining.iter().zip(&take).map(|(r, a)| r - a).collect();
            if self.exists(side + 1, rest, dead) {
                return true;
            }
        }
        dead.insert((side, remaining));
        false
    }
}

/// `K_λ` together with the chain-union poset it is the incomparability graph of.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MultipartiteGraph {
    pub graph: Graph,
    pub poset: Poset,
    pub spec: MultipartiteSpec,
}

/// Builds `K_λ` as `inc` of disjoint chains of lengths `λ_1, ..., λ_k`.
pub fn multipartite(lambda: &Partition) -> Result<MultipartiteGraph> {
    if lambda.is_empty() {
        return Err(Error::EmptyPartition);
    }
    let poset = Poset::chain_union(lambda)?;
    let graph = incomparability_graph(&poset);
    let mut side_of = Vec::with_capacity(lambda.weight());
    let mut rank_in_side = Vec::with_capacity(lambda.weight());
    for (i, &len) in lambda.parts().iter().enumerate() {
        side_of.extend(std::iter::repeat_n(i, len));
        rank_in_side.extend(0..len);
    }
    Ok(MultipartiteGraph {
        graph,
        poset,
        spec: MultipartiteSpec {
            lambda: lambda.clone(),
            side_of,
            rank_in_side,
        },
    })
}
