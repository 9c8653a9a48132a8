//! Sparse homogeneous symmetric functions with exact integer coefficients.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::numeric::falling_factorial;
use crate::partitions::Partition;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Basis {
    Monomial,
    Schur,
}

impl fmt::Display for Basis {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Basis::Monomial => "monomial",
            Basis::Schur => "schur",
        })
    }
}

/// Homogeneous symmetric function of a fixed degree in one basis. Zero
/// coefficients are never stored.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SymFunc {
    basis: Basis,
    degree: usize,
    coeffs: BTreeMap<Partition, BigInt>,
}

impl SymFunc {
    pub fn zero(basis: Basis, degree: usize) -> Self {
        SymFunc {
            basis,
            degree,
            coeffs: BTreeMap::new(),
        }
    }

    pub fn from_terms<I>(basis: Basis, degree: usize, terms: I) -> Result<Self>
    where
        I: IntoIterator<Item = (Partition, BigInt)>,
    {
        let mut f = SymFunc::zero(basis, degree);
        for (lambda, value) in terms {
            f.add_term(lambda, value)?;
        }
        Ok(f)
    }

    pub fn basis(&self) -> Basis {
        self.basis
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn len(&self) -> usize {
        self.coeffs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn coeff(&self, lambda: &Partition) -> BigInt {
        self.coeffs.get(lambda).cloned().unwrap_or_default()
    }

    pub fn add_term(&mut self, lambda: Partition, value: BigInt) -> Result<()> {
        if lambda.weight() != self.degree {
            return Err(Error::SizeMismatch {
                shape: lambda.weight(),
                vertices: self.degree,
            });
        }
        let slot = self.coeffs.entry(lambda).or_default();
        *slot += value;
        if slot.is_zero() {
            self.coeffs.retain(|_, v| !v.is_zero());
        }
        Ok(())
    }

    /// Terms in reverse-lexicographic order of their partitions.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Partition, &BigInt)> {
        self.coeffs.iter().rev()
    }

    pub fn first_negative(&self) -> Option<(&Partition, &BigInt)> {
        self.terms().find(|(_, v)| v.is_negative())
    }

    pub fn is_nonnegative(&self) -> bool {
        self.first_negative().is_none()
    }

    /// Value at `x_1 = ... = x_q = 1` and all other variables zero.
    pub fn specialize_ones(&self, q: usize) -> BigInt {
        let eval = match self.basis {
            Basis::Monomial => monomial_at_ones,
            Basis::Schur => schur_at_ones,
        };
        self.terms().map(|(lambda, c)| c * eval(lambda, q)).sum()
    }
}

/// Number of distinct rearrangements of `lambda` padded with zeros to
/// length `q`.
pub fn monomial_at_ones(lambda: &Partition, q: usize) -> BigInt {
    if lambda.len() > q {
        return BigInt::zero();
    }
    let mut count = falling_factorial(q, lambda.len());
    for (_, mult) in lambda.multiplicities() {
        count /= crate::numeric::factorial(mult);
    }
    count.into()
}

/// Hook-content formula: the product over cells of `(q + content) / hook`.
pub fn schur_at_ones(lambda: &Partition, q: usize) -> BigInt {
    let mut num = BigInt::one();
    let mut den = BigUint::one();
    let conjugate: Vec<usize> = (1..=lambda.largest().unwrap_or(0)).map(|c| lambda.parts().iter().filter(|&&r| r >= c).count()).collect();
    for (r, &row) in lambda.parts().iter().enumerate() {
        for c in 0..row {
            num *= q as i64 + c as i64 - r as i64;
            den *= (row - c) + (conjugate[c] - r) - 1;
        }
    }
    num / BigInt::from(den)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(parts: &[usize]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    #[test]
    fn zero_terms_are_dropped() {
        let mut f = SymFunc::zero(Basis::Schur, 3);
        f.add_term(p(&[2, 1]), BigInt::from(2)).unwrap();
        f.add_term(p(&[2, 1]), BigInt::from(-2)).unwrap();
        assert!(f.is_empty());
        assert!(f.add_term(p(&[2]), BigInt::one()).is_err());
    }

    #[test]
    fn terms_are_reverse_lex() {
        let f = SymFunc::from_terms(
            Basis::Schur,
            3,
            [(p(&[1, 1, 1]), BigInt::from(1)), (p(&[3]), BigInt::from(-1)), (p(&[2, 1]), BigInt::from(5))],
        )
        .unwrap();
        let order: Vec<String> = f.terms().map(|(l, _)| l.to_string()).collect();
        assert_eq!(order, ["(3)", "(2,1)", "(1,1,1)"]);
        assert_eq!(f.first_negative().unwrap().0, &p(&[3]));
    }

    #[test]
    fn specializations() {
        // s_(2,1)(1,1,1) = 8 and m_(2,1)(1,1,1) = 6.
        assert_eq!(schur_at_ones(&p(&[2, 1]), 3), BigInt::from(8));
        assert_eq!(monomial_at_ones(&p(&[2, 1]), 3), BigInt::from(6));
        // Too few variables for the column.
        assert_eq!(schur_at_ones(&p(&[1, 1, 1]), 2), BigInt::zero());
        assert_eq!(schur_at_ones(&Partition::empty(), 0), BigInt::one());
    }
}
