//! Non-increasing vertex sequences and the spanning count `N_sp`.

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::numeric::{binomial, factorial};
use crate::partitions::Partition;
use crate::posets_graphs::Poset;

/// Largest poset accepted by [`nsp_bruteforce`] unless a caller overrides it.
pub const DEFAULT_NSP_CAP: usize = 9;

/// An ordered sequence of distinct vertices.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct VertexSequence(Vec<usize>);

impl VertexSequence {
    pub fn new(vertices: Vec<usize>) -> Result<Self> {
        let mut seen = 0u64;
        for &v in &vertices {
            if v >= 64 {
                return Err(Error::TooManyVertices { size: v + 1 });
            }
            if seen >> v & 1 == 1 {
                return Err(Error::RepeatedVertex(v));
            }
            seen |= 1 << v;
        }
        Ok(VertexSequence(vertices))
    }

    pub fn vertices(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }
}

/// True when no vertex is below or equal to its successor.
pub fn is_nonincreasing(seq: &VertexSequence, order: &Poset) -> bool {
    debug_assert!(seq.vertices().iter().all(|&v| v < order.size()));
    seq.vertices().windows(2).all(|w| !order.leq(w[0], w[1]))
}

/// Counts spanning non-increasing sequences by walking every permutation,
/// cutting a branch as soon as an ascent appears.
pub fn nsp_bruteforce(order: &Poset, cap: usize) -> Result<BigUint> {
    let size = order.size();
    if size > cap {
        return Err(Error::CapExceeded {
            what: "nsp brute force",
            size,
            cap,
        });
    }
    fn extend(order: &Poset, last: Option<usize>, used: u64, size: usize) -> u64 {
        if used.count_ones() as usize == size {
            return 1;
        }
        (0..size)
            .filter(|&v| used >> v & 1 == 0)
            .filter(|&v| last.is_none_or(|u| !order.leq(u, v)))
            .map(|v| extend(order, Some(v), used | 1 << v, size))
            .sum()
    }
    Ok(BigUint::from(extend(order, None, 0, size)))
}

/// `N_sp` of the incomparability graph of disjoint chains with lengths `lambda`.
///
/// A spanning sequence splits each chain into maximal runs of consecutive
/// positions; a run is decreasing, so it is fixed by its element set. Runs
/// of one chain must not touch, which is handled by inclusion-exclusion
/// inside [`chain_run_weights`]. The weighted runs of all chains are then
/// interleaved freely.
pub fn nsp_chain_union(lambda: &Partition) -> BigUint {
    // poly[u] = signed count of arrangements of the chains seen so far into
    // u freely interleavable units.
    let mut poly: Vec<BigInt> = vec![BigInt::one()];
    for &c in lambda.parts() {
        let weights = chain_run_weights(c);
        let mut next = vec![BigInt::zero(); poly.len() + c];
        for (units, coeff) in poly.iter().enumerate() {
            if coeff.is_zero() {
                continue;
            }
            for (runs, w) in weights.iter().enumerate().skip(1) {
                let ways = BigInt::from(binomial(units + runs, runs));
                next[units + runs] += coeff * w * ways;
            }
        }
        poly = next;
    }
    let total: BigInt = poly.into_iter().sum();
    total.to_biguint().expect("spanning count is nonnegative")
}

/// Entry `j` is `sum_k (-1)^(k-j) C(k-1, j-1) k! S(c, k)`: ordered splits of
/// a `c`-chain into `k` runs, glued into `j` units with alternating sign.
fn chain_run_weights(c: usize) -> Vec<BigInt> {
    let stirling = stirling_row(c);
    let mut out = vec![BigInt::zero(); c + 1];
    for (j, slot) in out.iter_mut().enumerate().skip(1) {
        for k in j..=c {
            let term = BigInt::from(binomial(k - 1, j - 1) * factorial(k) * &stirling[k]);
            if (k - j) % 2 == 0 {
                *slot += term;
            } else {
                *slot -= term;
            }
        }
    }
    out
}

/// Stirling numbers of the second kind `S(n, k)` for `k = 0..=n`.
fn stirling_row(n: usize) -> Vec<BigUint> {
    let mut row = vec![BigUint::one()];
    for m in 1..=n {
        let mut next = vec![BigUint::zero(); m + 1];
        for k in 1..=m {
            let mut v = BigUint::from(k) * row.get(k).cloned().unwrap_or_default();
            v += &row[k - 1];
            next[k] = v;
        }
        row = next;
    }
    row
}
