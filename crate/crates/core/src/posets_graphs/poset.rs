use crate::error::{Error, Result};
use crate::partitions::Partition;

use super::{bits, Graph, VertexSet, MAX_VERTICES};

/// A finite poset on `0..size`, stored as up-sets of the reflexive
/// transitive closure of its cover relations.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Poset {
    up: Vec<VertexSet>,
    covers: Vec<(usize, usize)>,
    labels: Option<Vec<String>>,
}

impl Poset {
    pub fn antichain(size: usize) -> Result<Self> {
        poset_from_covers(size, &[])
    }

    /// The total order `0 < 1 < ... < size-1`.
    pub fn chain(size: usize) -> Result<Self> {
        let covers: Vec<_> = (1..size).map(|i| (i - 1, i)).collect();
        poset_from_covers(size, &covers)
    }

    /// Disjoint chains of lengths `lambda`, laid out consecutively with rank
    /// 0 the minimum of each chain.
    pub fn chain_union(lambda: &Partition) -> Result<Self> {
        let mut covers = Vec::new();
        let mut offset = 0;
        for &len in lambda.parts() {
            covers.extend((1..len).map(|i| (offset + i - 1, offset + i)));
            offset += len;
        }
        poset_from_covers(offset, &covers)
    }

    pub fn with_labels(mut self, labels: Vec<String>) -> Result<Self> {
        if labels.len() != self.size() {
            return Err(Error::Parse(format!(
                "{} labels for {} elements",
                labels.len(),
                self.size()
            )));
        }
        self.labels = Some(labels);
        Ok(self)
    }

    pub fn size(&self) -> usize {
        self.up.len()
    }

    pub fn covers(&self) -> &[(usize, usize)] {
        &self.covers
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }

    pub fn label(&self, x: usize) -> String {
        match &self.labels {
            Some(l) => l[x].clone(),
            None => x.to_string(),
        }
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.labels.as_ref()?.iter().position(|l| l == label)
    }

    pub fn leq(&self, x: usize, y: usize) -> bool {
        self.up[x] >> y & 1 == 1
    }

    pub fn lt(&self, x: usize, y: usize) -> bool {
        x != y && self.leq(x, y)
    }

    pub fn comparable(&self, x: usize, y: usize) -> bool {
        self.leq(x, y) || self.leq(y, x)
    }

    /// Elements strictly above `x`.
    pub fn above(&self, x: usize) -> VertexSet {
        self.up[x] & !(1 << x)
    }

    /// Checks that every non-adjacent pair of `graph` is comparable, which is
    /// what lets this order fill special rim hook tabloids of `graph`.
    pub fn check_compatible(&self, graph: &Graph) -> Result<()> {
        if graph.size() != self.size() {
            return Err(Error::OrderSizeMismatch {
                order: self.size(),
                graph: graph.size(),
            });
        }
        for u in 0..graph.size() {
            let non_adjacent = graph.vertices() & !graph.neighbors(u) & !(1 << u);
            for v in bits(non_adjacent >> u >> 1).map(|d| u + 1 + d) {
                if !self.comparable(u, v) {
                    return Err(Error::OrderIncompatible(u, v));
                }
            }
        }
        Ok(())
    }
}

/// The poset whose order is the reflexive-transitive closure of `covers`.
pub fn poset_from_covers(size: usize, covers: &[(usize, usize)]) -> Result<Poset> {
    if size > MAX_VERTICES {
        return Err(Error::TooManyVertices { size });
    }
    let mut succ = vec![0u64; size];
    for &(low, high) in covers {
        for x in [low, high] {
            if x >= size {
                return Err(Error::VertexOutOfRange { vertex: x, size });
            }
        }
        if low == high {
            return Err(Error::CycleDetected(low, high));
        }
        succ[low] |= 1 << high;
    }
    let mut up = vec![0u64; size];
    for (x, reach) in up.iter_mut().enumerate() {
        let mut frontier = 1u64 << x;
        *reach = frontier;
        while frontier != 0 {
            let next = bits(frontier).fold(0, |acc, v| acc | succ[v]) & !*reach;
            *reach |= next;
            frontier = next;
        }
    }
    for x in 0..size {
        for y in bits(up[x] & !(1 << x)) {
            if up[y] >> x & 1 == 1 {
                return Err(Error::CycleDetected(x, y));
            }
        }
    }
    Ok(Poset {
        up,
        covers: covers.to_vec(),
        labels: None,
    })
}

/// `inc(P)`: `u ~ v` iff neither `u <= v` nor `v <= u`.
pub fn incomparability_graph(poset: &Poset) -> Graph {
    let n = poset.size();
    let adjacency = (0..n)
        .map(|u| {
            (0..n)
                .filter(|&v| !poset.comparable(u, v))
                .fold(0u64, |acc, v| acc | 1 << v)
        })
        .collect();
    Graph::from_adjacency(adjacency)
}

#[cfg(test)]
mod tests {
    use super::*;

    /// a..f with a<b<f, a<c<e, d<c, b<e.
    fn hasse_example() -> Poset {
        let covers = [(0, 1), (1, 5), (0, 2), (2, 4), (3, 2), (1, 4)];
        poset_from_covers(6, &covers)
            .unwrap()
            .with_labels("abcdef".chars().map(String::from).collect())
            .unwrap()
    }

    #[test]
    fn hasse_example_incomparability_edges() {
        let p = hasse_example();
        let g = incomparability_graph(&p);
        let mut named: Vec<String> = g
            .edges()
            .into_iter()
            .map(|(u, v)| {
                let mut s = [p.label(u), p.label(v)];
                s.sort();
                s.concat()
            })
            .collect();
        named.sort();
        assert_eq!(named, vec!["ad", "bc", "bd", "cf", "df", "ef"]);
        assert!(p.leq(0, 4));
        assert!(p.leq(3, 4));
        assert!(!p.comparable(1, 2));
        assert_eq!(p.index_of("e"), Some(4));
    }

    #[test]
    fn trivial_posets() {
        let a = Poset::antichain(4).unwrap();
        assert_eq!(incomparability_graph(&a), Graph::complete(4).unwrap());
        let c = Poset::chain(3).unwrap();
        assert!(c.leq(0, 2) && c.lt(0, 1) && !c.leq(2, 0));
        assert_eq!(incomparability_graph(&c).edges(), vec![]);
    }

    #[test]
    fn cycles_and_ranges() {
        assert_eq!(
            poset_from_covers(3, &[(0, 1), (1, 2), (2, 0)]).unwrap_err(),
            Error::CycleDetected(0, 1)
        );
        assert_eq!(
            poset_from_covers(2, &[(1, 1)]).unwrap_err(),
            Error::CycleDetected(1, 1)
        );
        assert!(poset_from_covers(2, &[(0, 2)]).is_err());
        assert!(poset_from_covers(65, &[]).is_err());
    }

    #[test]
    fn compatibility_check() {
        let g = Graph::new(3, &[(0, 1)]).unwrap();
        assert!(Poset::chain(3).unwrap().check_compatible(&g).is_ok());
        assert_eq!(
            Poset::antichain(3).unwrap().check_compatible(&g),
            Err(Error::OrderIncompatible(0, 2))
        );
    }

    #[test]
    fn chain_union_layout() {
        let lambda = Partition::new(vec![3, 2]).unwrap();
        let p = Poset::chain_union(&lambda).unwrap();
        assert!(p.leq(0, 2) && p.leq(3, 4));
        assert!(!p.comparable(2, 3));
        assert_eq!(p.above(0), 0b110);
    }
}
