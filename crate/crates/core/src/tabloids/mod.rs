//! Special rim hook tabloids, their vertex-filled variants, and the tail
//! involution.

mod count;
mod filled;
mod render;

pub use count::{signed_tally, SignedTally};
pub use filled::{
    enumerate_srh_g_tabloids, psi_involution, tail_head_split, SrhGTabloid, TailSequence,
};
pub use render::{render_ascii, TabloidJson};

use std::collections::{BTreeMap, HashMap, HashSet};

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Zero};

use crate::partitions::{Composition, Partition};

pub type Cell = (usize, usize);

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Step {
    North,
    East,
}

/// Connected cells on the southeast boundary, listed from the southwest
/// end to the northeast end.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct RimHook {
    cells: Vec<Cell>,
}

impl RimHook {
    pub fn new(cells: Vec<Cell>) -> Self {
        RimHook { cells }
    }

    pub fn cells(&self) -> &[Cell] {
        &self.cells
    }

    pub fn len(&self) -> usize {
        self.cells.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cells.is_empty()
    }

    /// Steps between consecutive cells, or `None` if two consecutive cells
    /// are not a north or east neighbour.
    pub fn steps(&self) -> Option<Vec<Step>> {
        self.cells
            .windows(2)
            .map(|w| {
                let ((r0, c0), (r1, c1)) = (w[0], w[1]);
                if r1 + 1 == r0 && c1 == c0 {
                    Some(Step::North)
                } else if r1 == r0 && c1 == c0 + 1 {
                    Some(Step::East)
                } else {
                    None
                }
            })
            .collect()
    }

    pub fn north_steps(&self) -> usize {
        self.cells.windows(2).filter(|w| w[1].0 + 1 == w[0].0).count()
    }

    pub fn start(&self) -> Cell {
        self.cells[0]
    }
}

/// A tiling of a diagram by special rim hooks, hooks ordered bottom to top
/// (the order in which they are peeled).
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SrhTabloid {
    shape: Partition,
    hooks: Vec<RimHook>,
}

impl SrhTabloid {
    pub fn from_parts(shape: Partition, hooks: Vec<RimHook>) -> Self {
        SrhTabloid { shape, hooks }
    }

    pub fn shape(&self) -> &Partition {
        &self.shape
    }

    pub fn hooks(&self) -> &[RimHook] {
        &self.hooks
    }

    pub fn north_steps(&self) -> usize {
        self.hooks.iter().map(RimHook::north_steps).sum()
    }

    /// `(-1)^(number of north steps)`
    pub fn sign(&self) -> i8 {
        if self.north_steps().is_multiple_of(2) {
            1
        } else {
            -1
        }
    }

    /// Hook lengths read from the bottom hook to the top hook.
    pub fn content(&self) -> Composition {
        Composition::new(self.hooks.iter().map(RimHook::len).collect())
            .expect("hooks are nonempty")
    }

    pub fn hook_index_of(&self, cell: Cell) -> Option<usize> {
        self.hooks.iter().position(|h| h.cells.contains(&cell))
    }

    /// Re-derives every structural invariant from the cells alone.
    pub fn validate(&self) -> Result<(), String> {
        let mut remaining: HashSet<Cell> = self.shape.diagram().cells().collect();
        let total = remaining.len();
        let covered: usize = self.hooks.iter().map(RimHook::len).sum();
        if covered != total {
            return Err(format!("hooks cover {covered} cells, shape has {total}"));
        }
        for (i, hook) in self.hooks.iter().enumerate() {
            if hook.is_empty() {
                return Err(format!("hook {i} is empty"));
            }
            if hook.steps().is_none() {
                return Err(format!("hook {i} is not a north/east path"));
            }
            if hook.start().1 != 1 {
                return Err(format!("hook {i} does not start in column 1"));
            }
            for c in hook.cells() {
                if !remaining.remove(c) {
                    return Err(format!("hook {i} reuses or leaves the diagram at {c:?}"));
                }
            }
            if !is_diagram(&remaining) {
                return Err(format!("removing hook {i} does not leave a partition"));
            }
            let has_square = hook.cells().iter().any(|&(r, c)| {
                [(r, c + 1), (r - 1, c), (r - 1, c + 1)]
                    .iter()
                    .all(|x| hook.cells().contains(x))
            });
            if has_square {
                return Err(format!("hook {i} contains a 2x2 block"));
            }
        }
        Ok(())
    }
}

fn is_diagram(cells: &HashSet<Cell>) -> bool {
    cells.iter().all(|&(r, c)| {
        (r == 1 || cells.contains(&(r - 1, c))) && (c == 1 || cells.contains(&(r, c - 1)))
    })
}

/// Special rim hooks of `shape` containing its bottom-left cell, each with
/// the shape left after removing it. Shortest first.
pub(crate) fn peel_candidates(shape: &[usize]) -> Vec<(RimHook, Vec<usize>)> {
    let len = shape.len();
    if len == 0 {
        return Vec::new();
    }
    let mut out = Vec::with_capacity(len);
    let mut cells: Vec<Cell> = (1..=shape[len - 1]).map(|c| (len, c)).collect();
    // Candidate ending at row `top` (1-indexed), walking the rim upward.
    for top in (1..=len).rev() {
        if top < len {
            let below = shape[top];
            cells.extend((below..=shape[top - 1]).map(|c| (top, c)));
        }
        let mut rest: Vec<usize> = shape[..top - 1].to_vec();
        rest.extend((top..len).map(|i| shape[i] - 1).take_while(|&x| x > 0));
        out.push((RimHook::new(cells.clone()), rest));
    }
    out
}

/// Every special rim hook tabloid of `shape`, by repeatedly peeling the
/// hook through the bottom-left cell.
pub fn enumerate_srh_tabloids(shape: &Partition) -> Vec<SrhTabloid> {
    fn rec(shape: &[usize], hooks: &mut Vec<RimHook>, full: &Partition, out: &mut Vec<SrhTabloid>) {
        if shape.is_empty() {
            out.push(SrhTabloid::from_parts(full.clone(), hooks.clone()));
            return;
        }
        for (hook, rest) in peel_candidates(shape) {
            hooks.push(hook);
            rec(&rest, hooks, full, out);
            hooks.pop();
        }
    }
    let mut out = Vec::new();
    rec(shape.parts(), &mut Vec::new(), shape, &mut out);
    out
}

/// Number of SRH tabloids of `shape`, without building them.
pub fn count_srh_tabloids(shape: &Partition) -> BigUint {
    fn rec(shape: &[usize], memo: &mut HashMap<Vec<usize>, BigUint>) -> BigUint {
        if shape.is_empty() {
            return BigUint::one();
        }
        if let Some(hit) = memo.get(shape) {
            return hit.clone();
        }
        let total = peel_candidates(shape).iter().map(|(_, rest)| rec(rest, memo)).sum::<BigUint>();
        memo.insert(shape.to_vec(), total.clone());
        total
    }
    rec(shape.parts(), &mut HashMap::new())
}

/// `sum sgn(T)` over the SRH tabloids of `shape`, grouped by the sorted
/// content of `T`. Equals a row of the inverse Kostka matrix.
pub fn signed_content_counts(shape: &Partition) -> BTreeMap<Partition, BigInt> {
    fn rec(shape: &[usize], memo: &mut HashMap<Vec<usize>, BTreeMap<Vec<usize>, BigInt>>) -> BTreeMap<Vec<usize>, BigInt> {
        if shape.is_empty() {
            return BTreeMap::from([(Vec::new(), BigInt::one())]);
        }
        if let Some(hit) = memo.get(shape) {
            return hit.clone();
        }
        let mut out: BTreeMap<Vec<usize>, BigInt> = BTreeMap::new();
        for (hook, rest) in peel_candidates(shape) {
            let negative = hook.north_steps() % 2 == 1;
            for (content, count) in rec(&rest, memo) {
                let mut key = content;
                let at = key.partition_point(|&x| x > hook.len());
                key.insert(at, hook.len());
                let slot = out.entry(key).or_default();
                if negative {
                    *slot -= count;
                } else {
                    *slot += count;
                }
            }
        }
        out.retain(|_, v| !v.is_zero());
        memo.insert(shape.to_vec(), out.clone());
        out
    }
    rec(shape.parts(), &mut HashMap::new())
        .into_iter()
        .map(|(k, v)| (Partition::new(k).expect("sorted hook lengths"), v))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partitions::all_partitions;

    fn p(parts: &[usize]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    #[test]
    fn shape_422_has_six_tabloids() {
        let all = enumerate_srh_tabloids(&p(&[4, 2, 2]));
        assert_eq!(all.len(), 6);
        assert_eq!(all.iter().filter(|t| t.sign() < 0).count(), 3);
        // Fourth tabloid in the reference picture: an EN-hook then an NEEE-hook.
        let en_neee = all.iter().find(|t| {
            t.hooks().len() == 2
                && t.hooks()[0].steps().unwrap() == vec![Step::East, Step::North]
                && t.hooks()[1].steps().unwrap()
                    == vec![Step::North, Step::East, Step::East, Step::East]
        });
        assert!(en_neee.is_some());
        assert_eq!(en_neee.unwrap().sign(), 1);
    }

    #[test]
    fn single_column_and_row() {
        // One tabloid per composition of 4 into vertical hooks; only the
        // all-singleton one has content [1,1,1,1].
        let col = enumerate_srh_tabloids(&p(&[1, 1, 1, 1]));
        assert_eq!(col.len(), 8);
        let singletons: Vec<_> = col.iter().filter(|t| t.hooks().len() == 4).collect();
        assert_eq!(singletons.len(), 1);
        assert_eq!(singletons[0].sign(), 1);
        assert_eq!(singletons[0].content().parts(), &[1, 1, 1, 1]);
        for t in &col {
            assert_eq!(t.sign(), if (4 - t.hooks().len()) % 2 == 0 { 1 } else { -1 });
        }
        let row = enumerate_srh_tabloids(&p(&[5]));
        assert_eq!(row.len(), 1);
        assert_eq!(row[0].content().parts(), &[5]);
        for shape in [p(&[1, 1, 1, 1]), p(&[5]), p(&[4, 2, 2]), p(&[3, 3, 2, 1])] {
            assert_eq!(count_srh_tabloids(&shape), BigUint::from(enumerate_srh_tabloids(&shape).len()));
        }
        let empty = enumerate_srh_tabloids(&Partition::empty());
        assert_eq!(empty.len(), 1);
        assert!(empty[0].hooks().is_empty());
    }

    #[test]
    fn shape_21() {
        let all = enumerate_srh_tabloids(&p(&[2, 1]));
        assert_eq!(all.len(), 2);
        assert_eq!(all[0].content().parts(), &[1, 2]);
        assert_eq!(all[0].sign(), 1);
        assert_eq!(all[1].content().parts(), &[3]);
        assert_eq!(all[1].sign(), -1);
        assert_eq!(all[1].hooks()[0].cells(), &[(2, 1), (1, 1), (1, 2)]);
    }

    #[test]
    fn every_enumerated_tabloid_is_valid_and_distinct() {
        for n in 0..=8 {
            for shape in all_partitions(n) {
                let all = enumerate_srh_tabloids(&shape);
                let distinct: HashSet<_> = all.iter().collect();
                assert_eq!(distinct.len(), all.len());
                for t in &all {
                    t.validate().unwrap_or_else(|e| panic!("{shape}: {e}"));
                    assert_eq!(t.content().weight(), n);
                }
            }
        }
    }

    #[test]
    fn grouped_counts_match_enumeration() {
        for n in 0..=7 {
            for shape in all_partitions(n) {
                let mut direct: BTreeMap<Partition, BigInt> = BTreeMap::new();
                for t in enumerate_srh_tabloids(&shape) {
                    *direct.entry(t.content().sort_to_partition()).or_default() += t.sign();
                }
                direct.retain(|_, v| !v.is_zero());
                assert_eq!(signed_content_counts(&shape), direct, "{shape}");
            }
        }
    }

    #[test]
    fn validator_rejects_broken_tilings() {
        let bad = SrhTabloid::from_parts(p(&[2, 1]), vec![RimHook::new(vec![(1, 1), (1, 2)]), RimHook::new(vec![(2, 1)])]);
        assert!(bad.validate().is_err());
        let bad = SrhTabloid::from_parts(p(&[2]), vec![RimHook::new(vec![(1, 2)]), RimHook::new(vec![(1, 1)])]);
        assert!(bad.validate().is_err());
    }
}
