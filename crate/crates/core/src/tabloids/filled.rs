use crate::error::{Error, Result};
use crate::partitions::Partition;
use crate::posets_graphs::{Graph, Poset, VertexSet};

use super::{enumerate_srh_tabloids, Cell, RimHook, SrhTabloid};

/// A special rim hook tabloid whose cells hold the vertices of a graph.
///
/// `filling[i][k]` is the vertex in cell `k` of hook `i`, both read in the
/// same order as [`RimHook::cells`].
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SrhGTabloid {
    tabloid: SrhTabloid,
    filling: Vec<Vec<usize>>,
}

impl SrhGTabloid {
    pub fn from_parts(tabloid: SrhTabloid, filling: Vec<Vec<usize>>) -> Self {
        SrhGTabloid { tabloid, filling }
    }

    pub fn tabloid(&self) -> &SrhTabloid {
        &self.tabloid
    }

    pub fn filling(&self) -> &[Vec<usize>] {
        &self.filling
    }

    pub fn shape(&self) -> &Partition {
        self.tabloid.shape()
    }

    pub fn sign(&self) -> i8 {
        self.tabloid.sign()
    }

    pub fn vertex_at(&self, cell: Cell) -> Option<usize> {
        self.tabloid
            .hooks()
            .iter()
            .zip(&self.filling)
            .find_map(|(h, f)| h.cells().iter().position(|&c| c == cell).map(|k| f[k]))
    }

    /// Checks the filling against `graph` and `order` without trusting how
    /// it was produced.
    pub fn validate(&self, graph: &Graph, order: &Poset) -> std::result::Result<(), String> {
        self.tabloid.validate()?;
        let mut seen: VertexSet = 0;
        for (i, (hook, fill)) in self.tabloid.hooks().iter().zip(&self.filling).enumerate() {
            if hook.len() != fill.len() {
                return Err(format!("hook {i} has {} cells but {} vertices", hook.len(), fill.len()));
            }
            for (k, &v) in fill.iter().enumerate() {
                if v >= graph.size() || seen >> v & 1 == 1 {
                    return Err(format!("vertex {v} repeated or out of range"));
                }
                seen |= 1 << v;
                for &u in &fill[..k] {
                    if graph.is_adjacent(u, v) {
                        return Err(format!("hook {i} is not stable ({u}~{v})"));
                    }
                    if !order.lt(u, v) {
                        return Err(format!("hook {i} is not increasing ({u} then {v})"));
                    }
                }
            }
        }
        if seen != graph.vertices() {
            return Err("filling is not onto the vertex set".into());
        }
        Ok(())
    }

    pub fn tail_sequence(&self) -> TailSequence {
        tail_head_split(self).1
    }
}

/// Vertices in the rows of length 1, read bottom to top.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct TailSequence {
    pub vertices: Vec<usize>,
}

impl TailSequence {
    /// Smallest `j` with `v_j <= v_{j+1}`.
    pub fn first_ascent(&self, order: &Poset) -> Option<usize> {
        self.vertices.windows(2).position(|w| order.leq(w[0], w[1]))
    }

    pub fn is_nonincreasing(&self, order: &Poset) -> bool {
        self.first_ascent(order).is_none()
    }
}

/// Splits `t` into its head (rows longer than 1, with their vertices) and
/// its tail sequence.
pub fn tail_head_split(t: &SrhGTabloid) -> (Vec<(Cell, usize)>, TailSequence) {
    let shape = t.shape();
    let len = shape.len();
    let tail_rows = shape.multiplicity(1);
    let mut head = Vec::new();
    for (hook, fill) in t.tabloid.hooks().iter().zip(&t.filling) {
        for (&cell, &v) in hook.cells().iter().zip(fill) {
            if cell.0 <= len - tail_rows {
                head.push((cell, v));
            }
        }
    }
    head.sort();
    let vertices = (0..tail_rows)
        .map(|i| t.vertex_at((len - i, 1)).expect("tail cell is filled"))
        .collect();
    (head, TailSequence { vertices })
}

/// Increasing stable chains of `size` vertices drawn from `pool`.
pub(crate) fn stable_chains(graph: &Graph, order: &Poset, pool: VertexSet, size: usize, out: &mut Vec<Vec<usize>>) {
    fn rec(graph: &Graph, order: &Poset, candidates: VertexSet, chain: &mut Vec<usize>, need: usize, out: &mut Vec<Vec<usize>>) {
        if need == 0 {
            out.push(chain.clone());
            return;
        }
        let mut c = candidates;
        while c != 0 {
            let v = c.trailing_zeros() as usize;
            c &= c - 1;
            chain.push(v);
            let next = candidates & order.above(v) & !graph.neighbors(v);
            rec(graph, order, next, chain, need - 1, out);
            chain.pop();
        }
    }
    if size == 0 {
        out.push(Vec::new());
        return;
    }
    rec(graph, order, pool, &mut Vec::with_capacity(size), size, out);
}

/// Every SRH `G`-tabloid of `shape`, grouped by underlying tabloid in
/// enumeration order.
pub fn enumerate_srh_g_tabloids(graph: &Graph, order: &Poset, shape: &Partition) -> Result<Vec<SrhGTabloid>> {
    order.check_compatible(graph)?;
    if shape.weight() != graph.size() {
        return Err(Error::SizeMismatch {
            shape: shape.weight(),
            vertices: graph.size(),
        });
    }
    let mut out = Vec::new();
    for tabloid in enumerate_srh_tabloids(shape) {
        fill_hooks(graph, order, &tabloid, 0, graph.vertices(), &mut Vec::new(), &mut out);
    }
    Ok(out)
}

fn fill_hooks(
    graph: &Graph,
    order: &Poset,
    tabloid: &SrhTabloid,
    index: usize,
    pool: VertexSet,
    filling: &mut Vec<Vec<usize>>,
    out: &mut Vec<SrhGTabloid>,
) {
    let Some(hook) = tabloid.hooks().get(index) else {
        out.push(SrhGTabloid::from_parts(tabloid.clone(), filling.clone()));
        return;
    };
    let mut chains = Vec::new();
    stable_chains(graph, order, pool, hook.len(), &mut chains);
    for chain in chains {
        let used = chain.iter().fold(0u64, |acc, &v| acc | 1 << v);
        filling.push(chain);
        fill_hooks(graph, order, tabloid, index + 1, pool & !used, filling, out);
        filling.pop();
    }
}

/// Toggles the north step between the tail cells of `v_j` and `v_{j+1}`,
/// where `j` is the first ascent of the tail sequence.
pub fn psi_involution(t: &SrhGTabloid, order: &Poset) -> Result<SrhGTabloid> {
    let tail = t.tail_sequence();
    let j = tail.first_ascent(order).ok_or(Error::NoAscent)?;
    let len = t.shape().len();
    let lower: Cell = (len - j, 1);
    let upper: Cell = (len - j - 1, 1);
    let hooks = t.tabloid.hooks();
    let hl = t.tabloid.hook_index_of(lower).expect("tail cell is covered");
    let hu = t.tabloid.hook_index_of(upper).expect("tail cell is covered");
    let broken = || Error::BadShape(format!("tail cells {lower:?}/{upper:?} are not hook ends"));
    if hooks[hl].start() != lower {
        return Err(broken());
    }
    let mut new_hooks = hooks.to_vec();
    let mut new_fill = t.filling.clone();
    if hl == hu {
        // lower is the southwest end and upper the next cell: split.
        let rest = RimHook::new(hooks[hl].cells()[1..].to_vec());
        let rest_fill = t.filling[hl][1..].to_vec();
        new_hooks[hl] = RimHook::new(vec![lower]);
        new_fill[hl] = vec![t.filling[hl][0]];
        new_hooks.insert(hl + 1, rest);
        new_fill.insert(hl + 1, rest_fill);
    } else {
        if hu != hl + 1 || hooks[hl].len() != 1 || hooks[hu].start() != upper {
            return Err(broken());
        }
        let mut cells = vec![lower];
        cells.extend_from_slice(hooks[hu].cells());
        let mut fill = vec![t.filling[hl][0]];
        fill.extend_from_slice(&t.filling[hu]);
        new_hooks[hl] = RimHook::new(cells);
        new_fill[hl] = fill;
        new_hooks.remove(hu);
        new_fill.remove(hu);
    }
    Ok(SrhGTabloid::from_parts(
        SrhTabloid::from_parts(t.shape().clone(), new_hooks),
        new_fill,
    ))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::posets_graphs::{incomparability_graph, multipartite, poset_from_covers};
    use std::collections::{HashMap, HashSet};

    fn p(parts: &[usize]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    fn hasse_example() -> Poset {
        let covers = [(0, 1), (1, 5), (0, 2), (2, 4), (3, 2), (1, 4)];
        poset_from_covers(6, &covers)
            .unwrap()
            .with_labels("abcdef".chars().map(String::from).collect())
            .unwrap()
    }

    fn names(poset: &Poset, vs: &[usize]) -> String {
        vs.iter().map(|&v| poset.label(v)).collect()
    }

    /// Hooks bottom to top, each read southwest to northeast.
    fn hook_words(poset: &Poset, t: &SrhGTabloid) -> String {
        t.filling().iter().map(|f| names(poset, f)).collect::<Vec<_>>().join("|")
    }

    #[test]
    fn hasse_example_pictured_tabloids() {
        let poset = hasse_example();
        let graph = incomparability_graph(&poset);
        let all = enumerate_srh_g_tabloids(&graph, &poset, &p(&[2, 1, 1, 1, 1])).unwrap();
        let by_hooks: HashMap<String, &SrhGTabloid> = all.iter().map(|t| (hook_words(&poset, t), t)).collect();
        assert_eq!(by_hooks.len(), all.len());
        // The four pictured tabloids each have exactly one north step.
        let mut nonincreasing = Vec::new();
        for (hooks, tail) in [("e|bf|d|ac", "ebfd"), ("e|ac|d|bf", "eacd"), ("c|f|d|abe", "cfda"), ("d|e|bf|ac", "debf")] {
            let t = by_hooks.get(hooks).unwrap_or_else(|| panic!("{hooks} missing"));
            assert_eq!(t.tabloid().north_steps(), 1);
            assert_eq!(t.sign(), -1);
            let ts = t.tail_sequence();
            assert_eq!(names(&poset, &ts.vertices), tail);
            if ts.is_nonincreasing(&poset) {
                nonincreasing.push(tail);
            }
        }
        assert_eq!(nonincreasing, vec!["cfda"]);
        // Leftmost and rightmost share the head {a, c}.
        let (h1, _) = tail_head_split(by_hooks["e|bf|d|ac"]);
        let (h4, _) = tail_head_split(by_hooks["d|e|bf|ac"]);
        assert_eq!(h1, h4);
        for t in &all {
            t.validate(&graph, &poset).unwrap();
        }
    }

    #[test]
    fn edgeless_single_column_has_all_orderings() {
        let graph = Graph::empty(4).unwrap();
        let order = Poset::chain(4).unwrap();
        let all = enumerate_srh_g_tabloids(&graph, &order, &p(&[1, 1, 1, 1])).unwrap();
        let columns: Vec<_> = all.iter().filter(|t| t.tabloid().hooks().len() == 4).collect();
        assert_eq!(columns.len(), 24);
    }

    #[test]
    fn errors() {
        let graph = Graph::new(3, &[(0, 1)]).unwrap();
        let anti = Poset::antichain(3).unwrap();
        assert_eq!(
            enumerate_srh_g_tabloids(&graph, &anti, &p(&[2, 1])),
            Err(Error::OrderIncompatible(0, 2))
        );
        let chain = Poset::chain(3).unwrap();
        assert!(matches!(
            enumerate_srh_g_tabloids(&graph, &chain, &p(&[2, 2])),
            Err(Error::SizeMismatch { .. })
        ));
    }

    #[test]
    fn split_shapes() {
        let k = multipartite(&p(&[3, 2])).unwrap();
        for t in enumerate_srh_g_tabloids(&k.graph, &k.poset, &p(&[1; 5])).unwrap() {
            let (head, tail) = tail_head_split(&t);
            assert!(head.is_empty());
            assert_eq!(tail.vertices.len(), 5);
        }
        for t in enumerate_srh_g_tabloids(&k.graph, &k.poset, &p(&[3, 2])).unwrap() {
            let (head, tail) = tail_head_split(&t);
            assert_eq!(head.len(), 5);
            assert!(tail.vertices.is_empty());
        }
    }

    #[test]
    fn psi_merges_and_splits() {
        let k = multipartite(&p(&[2, 2])).unwrap();
        let all = enumerate_srh_g_tabloids(&k.graph, &k.poset, &p(&[2, 1, 1])).unwrap();
        let set: HashSet<_> = all.iter().cloned().collect();
        let mut merged = 0;
        for t in &all {
            match psi_involution(t, &k.poset) {
                Ok(image) => {
                    assert_eq!(image.sign(), -t.sign());
                    assert_eq!(image.tail_sequence(), t.tail_sequence());
                    assert!(set.contains(&image));
                    assert_eq!(psi_involution(&image, &k.poset).unwrap(), *t);
                    if image.tabloid().hooks().len() < t.tabloid().hooks().len() {
                        merged += 1;
                    }
                }
                Err(e) => {
                    assert_eq!(e, Error::NoAscent);
                    assert!(t.tail_sequence().is_nonincreasing(&k.poset));
                }
            }
        }
        assert!(merged > 0);
    }
}
