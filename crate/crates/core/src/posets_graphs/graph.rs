use crate::error::{Error, Result};

use super::{bits, full_mask};

/// Vertex subsets are bitmasks over vertex indices.
pub type VertexSet = u64;

pub const MAX_VERTICES: usize = 64;

/// A simple undirected graph on vertices `0..size`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    adjacency: Vec<VertexSet>,
}

impl Graph {
    pub fn empty(size: usize) -> Result<Self> {
        if size > MAX_VERTICES {
            return Err(Error::TooManyVertices { size });
        }
        Ok(Graph {
            adjacency: vec![0; size],
        })
    }

    pub fn complete(size: usize) -> Result<Self> {
        let mut g = Graph::empty(size)?;
        let all = full_mask(size);
        for (v, row) in g.adjacency.iter_mut().enumerate() {
            *row = all & !(1 << v);
        }
        Ok(g)
    }

    pub fn new(size: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut g = Graph::empty(size)?;
        for &(u, v) in edges {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    pub(crate) fn from_adjacency(adjacency: Vec<VertexSet>) -> Self {
        Graph { adjacency }
    }

    pub fn add_edge(&mut self, u: usize, v: usize) -> Result<()> {
        let size = self.size();
        for x in [u, v] {
            if x >= size {
                return Err(Error::VertexOutOfRange { vertex: x, size });
            }
        }
        if u == v {
            return Err(Error::SelfLoop(u));
        }
        self.adjacency[u] |= 1 << v;
        self.adjacency[v] |= 1 << u;
        Ok(())
    }

    pub fn size(&self) -> usize {
        self.adjacency.len()
    }

    pub fn vertices(&self) -> VertexSet {
        full_mask(self.size())
    }

    pub fn neighbors(&self, v: usize) -> VertexSet {
        self.adjacency[v]
    }

    pub fn is_adjacent(&self, u: usize, v: usize) -> bool {
        self.adjacency[u] >> v & 1 == 1
    }

    /// Edges `(u, v)` with `u < v`, sorted.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        (0..self.size())
            .flat_map(|u| bits(self.adjacency[u] >> u >> 1).map(move |d| (u, u + 1 + d)))
            .collect()
    }

    pub fn is_stable(&self, set: VertexSet) -> bool {
        bits(set).all(|v| self.adjacency[v] & set == 0)
    }

    pub fn induced(&self, keep: VertexSet) -> (Graph, Vec<usize>) {
        let map: Vec<usize> = bits(keep).collect();
        let adjacency = map
            .iter()
            .map(|&old| {
                map.iter()
                    .enumerate()
                    .filter(|(_, &o)| self.is_adjacent(old, o))
                    .fold(0u64, |acc, (i, _)| acc | 1 << i)
            })
            .collect();
        (Graph { adjacency }, map)
    }

    /// If the graph is complete multipartite, its sides (maximal stable sets,
    /// pairwise fully joined), ordered by size descending then by lowest
    /// vertex.
    pub fn multipartite_sides(&self) -> Option<Vec<VertexSet>> {
        let all = self.vertices();
        let mut seen = 0u64;
        let mut sides = Vec::new();
        for v in 0..self.size() {
            if seen >> v & 1 == 1 {
                continue;
            }
            let side = (all & !self.adjacency[v]) | 1 << v;
            if seen & side != 0 {
                return None;
            }
            for u in bits(side) {
                if (all & !self.adjacency[u]) | 1 << u != side {
                    return None;
                }
            }
            seen |= side;
            sides.push(side);
        }
        sides.sort_by_key(|s| (std::cmp::Reverse(s.count_ones()), s.trailing_zeros()));
        Some(sides)
    }
}
