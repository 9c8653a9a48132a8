//! Finite posets, graphs, stable sets and stable partitions.

mod graph;
mod multipartite;
mod orientation;
mod poset;
mod stable;

pub use graph::{Graph, VertexSet, MAX_VERTICES};
pub use multipartite::{multipartite, MultipartiteGraph, MultipartiteSpec};
pub use orientation::incomparability_order;
pub use poset::{incomparability_graph, poset_from_covers, Poset};
pub use stable::{
    has_stable_partition, niceness_violation, semi_ordered_count, stable_partition_count,
    stable_sets, StablePartition, StableSets,
};

/// Iterates the set bits of a mask, lowest first.
pub fn bits(mut mask: u64) -> impl Iterator<Item = usize> {
    std::iter::from_fn(move || {
        if mask == 0 {
            None
        } else {
            let v = mask.trailing_zeros() as usize;
            mask &= mask - 1;
            Some(v)
        }
    })
}

pub(crate) fn full_mask(n: usize) -> u64 {
    if n >= 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}
