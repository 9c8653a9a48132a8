use std::collections::{HashSet, VecDeque};

use super::{bits, incomparability_graph, poset_from_covers, Graph, Poset};

/// A poset `P` with `inc(P) == graph`, if one exists.
///
/// Transitively orients the complement of `graph` one implication class at
/// a time, each class taken in the graph left after removing the earlier
/// ones. A class containing both orientations of an edge means the
/// complement is not a comparability graph.
pub fn incomparability_order(graph: &Graph) -> Option<Poset> {
    let n = graph.size();
    let all = graph.vertices();
    let mut comp: Vec<u64> = (0..n)
        .map(|v| all & !graph.neighbors(v) & !(1 << v))
        .collect();
    let mut relations = Vec::new();
    while let Some(a) = (0..n).find(|&v| comp[v] != 0) {
        let b = comp[a].trailing_zeros() as usize;
        let mut class: HashSet<(usize, usize)> = HashSet::new();
        let mut queue = VecDeque::from([(a, b)]);
        class.insert((a, b));
        while let Some((x, y)) = queue.pop_front() {
            // x -> y forces x -> z when y and z are not joined, and
            // z -> y when x and z are not joined.
            let mut forced = Vec::new();
            for z in bits(comp[x] & !comp[y] & !(1 << y)) {
                forced.push((x, z));
            }
            for z in bits(comp[y] & !comp[x] & !(1 << x)) {
                forced.push((z, y));
            }
            for e in forced {
                if class.insert(e) {
                    queue.push_back(e);
                }
            }
        }
        if class.iter().any(|&(x, y)| class.contains(&(y, x))) {
            return None;
        }
        for &(x, y) in &class {
            comp[x] &= !(1 << y);
            comp[y] &= !(1 << x);
            relations.push((x, y));
        }
    }
    relations.sort_unstable();
    let poset = poset_from_covers(n, &relations).ok()?;
    (incomparability_graph(&poset) == *graph).then_some(poset)
}
