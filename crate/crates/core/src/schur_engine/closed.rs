use num_bigint::BigInt;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::numeric::falling_factorial;
use crate::partitions::Partition;
use crate::sequences::nsp_chain_union;

fn nsp(parts: Vec<usize>) -> BigInt {
    BigInt::from(nsp_chain_union(&Partition::from_unsorted(parts)))
}

fn twos(count: usize) -> Vec<usize> {
    vec![2; count]
}

/// `[s_(2^c, 1^d)] X_{K_(2^beta)} = beta! / (beta - c)! * N_sp(K_(2^(beta - c)))`.
pub fn coeff_closed_2beta(beta: usize, c: usize, d: usize) -> Result<BigInt> {
    if beta == 0 || 2 * c + d != 2 * beta || c > beta {
        return Err(Error::BadShape(format!(
            "(2^{c},1^{d}) is not a shape of size {} with beta = {beta} >= 1",
            2 * beta
        )));
    }
    Ok(BigInt::from(falling_factorial(beta, c)) * nsp(twos(beta - c)))
}

/// `[s_lambda] X_{K_(3, 2^beta)}`.
pub fn coeff_closed_32beta(beta: usize, lambda: &Partition) -> Result<BigInt> {
    if beta == 0 || lambda.weight() != 2 * beta + 3 {
        return Err(Error::BadShape(format!(
            "{lambda} does not have size 2*beta + 3 with beta = {beta} >= 1"
        )));
    }
    let ones = lambda.multiplicity(1);
    let twos_count = lambda.multiplicity(2);
    let threes = lambda.multiplicity(3);
    if threes + twos_count + ones != lambda.len() || threes > 1 {
        return Ok(BigInt::zero());
    }
    if threes == 1 {
        return coeff_closed_2beta(beta, twos_count, ones);
    }
    if twos_count == 0 {
        let mut parts = twos(beta);
        parts.push(3);
        return Ok(nsp(parts));
    }
    // Shape (2^c, 1^d) with c, d >= 1, so c <= beta + 1.
    let c = twos_count;
    let free = beta + 1 - c;
    let with_three = if beta >= c {
        let mut parts = twos(beta - c);
        parts.push(3);
        BigInt::from(free) * nsp(parts)
    } else {
        BigInt::zero()
    };
    let mut with_single = twos(free);
    with_single.push(1);
    let bracket = with_three - nsp(twos(free)) + BigInt::from(c + 2) * nsp(with_single);
    Ok(BigInt::from(falling_factorial(beta, c - 1)) * bracket)
}

/// The closed-form family a multipartite type belongs to, if any.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ClosedFamily {
    /// `K_(2^beta)`
    Twos(usize),
    /// `K_(3, 2^beta)`
    ThreeTwos(usize),
}

impl ClosedFamily {
    pub fn detect(lambda: &Partition) -> Option<Self> {
        let beta = lambda.multiplicity(2);
        if beta >= 1 && beta == lambda.len() {
            Some(ClosedFamily::Twos(beta))
        } else if beta >= 1 && lambda.part(1) == 3 && beta + 1 == lambda.len() {
            Some(ClosedFamily::ThreeTwos(beta))
        } else {
            None
        }
    }

    pub fn size(&self) -> usize {
        match *self {
            ClosedFamily::Twos(beta) => 2 * beta,
            ClosedFamily::ThreeTwos(beta) => 2 * beta + 3,
        }
    }

    /// Coefficient of `s_mu`; zero for shapes of the wrong size.
    pub fn coefficient(&self, mu: &Partition) -> BigInt {
        if mu.weight() != self.size() {
            return BigInt::zero();
        }
        match *self {
            ClosedFamily::Twos(beta) => {
                let (c, d) = (mu.multiplicity(2), mu.multiplicity(1));
                if c + d != mu.len() {
                    return BigInt::zero();
                }
                coeff_closed_2beta(beta, c, d).expect("shape checked")
            }
            ClosedFamily::ThreeTwos(beta) => coeff_closed_32beta(beta, mu).expect("size checked"),
        }
    }
}
