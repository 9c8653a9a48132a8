use std::collections::HashMap;

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Zero};

use crate::error::Result;
use crate::partitions::Partition;
use crate::posets_graphs::{Graph, Poset, VertexSet};

use super::filled::stable_chains;
use super::peel_candidates;

/// Positive and negative SRH `G`-tabloid counts for one shape.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct SignedTally {
    pub positive: BigUint,
    pub negative: BigUint,
}

impl SignedTally {
    pub fn value(&self) -> BigInt {
        BigInt::from(self.positive.clone()) - BigInt::from(self.negative.clone())
    }

    fn one() -> Self {
        SignedTally {
            positive: BigUint::one(),
            negative: BigUint::zero(),
        }
    }

    fn add(&mut self, other: &SignedTally, flip: bool) {
        if flip {
            self.positive += &other.negative;
            self.negative += &other.positive;
        } else {
            self.positive += &other.positive;
            self.negative += &other.negative;
        }
    }
}

type Key = (Vec<usize>, VertexSet, Option<usize>);

struct Tally<'a> {
    graph: &'a Graph,
    order: &'a Poset,
    /// Rows strictly below this index (1-indexed) are tail rows.
    tail_from: usize,
    tail_filter: bool,
    memo: HashMap<Key, SignedTally>,
}

impl Tally<'_> {
    fn is_tail(&self, row: usize) -> bool {
        self.tail_filter && row >= self.tail_from
    }

    // `below` is the vertex in the column-1 cell directly under the current
    // bottom row, kept only while both rows are tail rows.
    fn run(&mut self, shape: Vec<usize>, used: VertexSet, below: Option<usize>) -> SignedTally {
        if shape.is_empty() {
            return SignedTally::one();
        }
        let key = (shape, used, below);
        if let Some(v) = self.memo.get(&key) {
            return v.clone();
        }
        let shape = &key.0;
        let pool = self.graph.vertices() & !used;
        let mut total = SignedTally::default();
        let mut chains = Vec::new();
        for (hook, rest) in peel_candidates(shape) {
            let cells = hook.cells();
            let bottom = cells[0].0;
            // An N-step between two tail cells is always an ascent.
            if cells.len() > 1 && cells[1].1 == 1 && self.is_tail(cells[1].0) {
                continue;
            }
            let top_col1 = cells.iter().take_while(|c| c.1 == 1).last().expect("starts in column 1");
            let flip = hook.north_steps() % 2 == 1;
            chains.clear();
            stable_chains(self.graph, self.order, pool, hook.len(), &mut chains);
            for chain in &chains {
                if let Some(w) = below {
                    if self.is_tail(bottom) && self.order.leq(w, chain[0]) {
                        continue;
                    }
                }
                let k = cells.iter().take_while(|c| c.1 == 1).count();
                let next_below = self.is_tail(top_col1.0).then(|| chain[k - 1]);
                let mask = chain.iter().fold(used, |acc, &v| acc | 1 << v);
                let sub = self.run(rest.clone(), mask, next_below);
                total.add(&sub, flip);
            }
        }
        self.memo.insert(key, total.clone());
        total
    }
}

/// Signed count of SRH `G`-tabloids of `shape`, optionally restricted to
/// those whose tail sequence is non-increasing in `order`.
///
/// Tabloids and fillings are built together hook by hook, memoized on the
/// remaining shape, the used vertices and the last tail vertex placed.
pub fn signed_tally(graph: &Graph, order: &Poset, shape: &Partition, tail_filter: bool) -> Result<SignedTally> {
    order.check_compatible(graph)?;
    if shape.weight() != graph.size() {
        return Ok(SignedTally::default());
    }
    let tail_from = shape.len() - shape.multiplicity(1) + 1;
    let mut tally = Tally {
        graph,
        order,
        tail_from,
        tail_filter,
        memo: HashMap::new(),
    };
    Ok(tally.run(shape.parts().to_vec(), 0, None))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partitions::all_partitions;
    use crate::posets_graphs::{incomparability_graph, multipartite, poset_from_covers};
    use crate::tabloids::enumerate_srh_g_tabloids;

    fn p(parts: &[usize]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    fn brute(graph: &Graph, order: &Poset, shape: &Partition, tail_filter: bool) -> (usize, usize) {
        let all = enumerate_srh_g_tabloids(graph, order, shape).unwrap();
        let kept = all
            .iter()
            .filter(|t| !tail_filter || t.tail_sequence().is_nonincreasing(order));
        let (mut pos, mut neg) = (0, 0);
        for t in kept {
            if t.sign() > 0 {
                pos += 1
            } else {
                neg += 1
            }
        }
        (pos, neg)
    }

    #[test]
    fn memoized_tally_matches_materialized_enumeration() {
        let covers = [(0, 1), (1, 5), (0, 2), (2, 4), (3, 2), (1, 4)];
        let hasse = poset_from_covers(6, &covers).unwrap();
        let mut cases = vec![(incomparability_graph(&hasse), hasse)];
        for lambda in [p(&[2, 2]), p(&[3, 2]), p(&[2, 1, 1]), p(&[3, 1, 1])] {
            let k = multipartite(&lambda).unwrap();
            cases.push((k.graph, k.poset));
        }
        for (graph, order) in &cases {
            for shape in all_partitions(graph.size()) {
                for filter in [false, true] {
                    let t = signed_tally(graph, order, &shape, filter).unwrap();
                    let (pos, neg) = brute(graph, order, &shape, filter);
                    assert_eq!(t.positive, BigUint::from(pos), "{shape} filter={filter}");
                    assert_eq!(t.negative, BigUint::from(neg), "{shape} filter={filter}");
                }
            }
        }
    }

    #[test]
    fn tail_route_on_single_column_is_all_positive() {
        let k = multipartite(&p(&[3, 2])).unwrap();
        let t = signed_tally(&k.graph, &k.poset, &p(&[1; 5]), true).unwrap();
        assert_eq!(t.positive, BigUint::from(46u32));
        assert!(t.negative.is_zero());
    }

    #[test]
    fn mismatched_size_is_zero() {
        let k = multipartite(&p(&[2, 2])).unwrap();
        let t = signed_tally(&k.graph, &k.poset, &p(&[5]), false).unwrap();
        assert!(t.value().is_zero());
    }
}
