//! Ground truth that shares no code path with the tabloid routes: monomial
//! expansion from stable partitions, Kostka numbers from SSYT, and direct
//! coloring counts.

mod kostka;

pub use kostka::{kostka, ssyt_with_content, KostkaMatrix, Ssyt};

use num_bigint::{BigInt, BigUint};
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::partitions::all_partitions;
use crate::posets_graphs::{semi_ordered_count, Graph};
use crate::symfunc::{Basis, SymFunc};

/// Default vertex cap for the oracle computations.
pub const DEFAULT_ORACLE_CAP: usize = 12;

fn check_cap(what: &'static str, size: usize, cap: usize) -> Result<()> {
    if size > cap {
        return Err(Error::CapExceeded { what, size, cap });
    }
    Ok(())
}

/// `X_G` in the monomial basis. The coefficient of `m_mu` is the number of
/// stable partitions of type `mu` times the product of the factorials of
/// the part multiplicities of `mu`.
pub fn x_in_monomial(graph: &Graph, cap: usize) -> Result<SymFunc> {
    let n = graph.size();
    check_cap("monomial expansion", n, cap)?;
    let terms = all_partitions(n).into_iter().map(|mu| {
        let c = BigInt::from(semi_ordered_count(graph, &mu));
        (mu, c)
    });
    SymFunc::from_terms(Basis::Monomial, n, terms)
}

/// Solves `f = sum c_lambda s_lambda` by forward substitution in
/// reverse-lexicographic order.
pub fn monomial_to_schur(f: &SymFunc, cap: usize) -> Result<SymFunc> {
    if f.basis() != Basis::Monomial {
        return Err(Error::BadShape("expected a monomial-basis function".into()));
    }
    check_cap("monomial to schur", f.degree(), cap)?;
    let k = KostkaMatrix::new(f.degree());
    let parts = k.partitions();
    let mut solved: Vec<BigInt> = Vec::with_capacity(parts.len());
    for (j, lambda) in parts.iter().enumerate() {
        let mut c = f.coeff(lambda);
        for (i, ci) in solved.iter().enumerate() {
            let kij = &k.row(i)[j];
            if !ci.is_zero() && !kij.is_zero() {
                c -= ci * BigInt::from(kij.clone());
            }
        }
        solved.push(c);
    }
    SymFunc::from_terms(Basis::Schur, f.degree(), parts.iter().cloned().zip(solved))
}

pub fn schur_to_monomial(f: &SymFunc, cap: usize) -> Result<SymFunc> {
    if f.basis() != Basis::Schur {
        return Err(Error::BadShape("expected a schur-basis function".into()));
    }
    check_cap("schur to monomial", f.degree(), cap)?;
    let k = KostkaMatrix::new(f.degree());
    let mut out = SymFunc::zero(Basis::Monomial, f.degree());
    for (lambda, c) in f.terms() {
        let i = k.index_of(lambda).expect("weight matches degree");
        for (mu, kij) in k.partitions().iter().zip(k.row(i)) {
            if !kij.is_zero() {
                out.add_term(mu.clone(), c * BigInt::from(kij.clone()))?;
            }
        }
    }
    Ok(out)
}

/// Proper colorings of `graph` with `q` colors, by direct enumeration.
pub fn coloring_count(graph: &Graph, q: usize, cap: usize) -> Result<BigUint> {
    let n = graph.size();
    check_cap("coloring count", n, cap)?;
    fn go(graph: &Graph, v: usize, q: usize, colors: &mut Vec<usize>) -> u64 {
        if v == graph.size() {
            return 1;
        }
        let mut total = 0;
        for c in 0..q {
            if (0..v).any(|u| colors[u] == c && graph.is_adjacent(u, v)) {
                continue;
            }
            colors.push(c);
            total += go(graph, v + 1, q, colors);
            colors.pop();
        }
        total
    }
    Ok(BigUint::from(go(graph, 0, q, &mut Vec::with_capacity(n))))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partitions::Partition;
    use crate::posets_graphs::multipartite;
    use num_traits::One;

    fn p(parts: &[usize]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    fn k(parts: &[usize]) -> Graph {
        multipartite(&p(parts)).unwrap().graph
    }

    fn terms(f: &SymFunc) -> Vec<(String, i64)> {
        f.terms()
            .map(|(l, v)| (l.to_string(), i64::try_from(v).unwrap()))
            .collect()
    }

    #[test]
    fn monomial_examples() {
        let c4 = x_in_monomial(&k(&[2, 2]), DEFAULT_ORACLE_CAP).unwrap();
        assert_eq!(
            terms(&c4),
            [("(2,2)".into(), 2), ("(2,1,1)".into(), 4), ("(1,1,1,1)".into(), 24)]
        );
        let claw = x_in_monomial(&k(&[3, 1]), DEFAULT_ORACLE_CAP).unwrap();
        assert_eq!(
            terms(&claw),
            [("(3,1)".into(), 1), ("(2,1,1)".into(), 6), ("(1,1,1,1)".into(), 24)]
        );
        let point = x_in_monomial(&Graph::empty(1).unwrap(), DEFAULT_ORACLE_CAP).unwrap();
        assert_eq!(terms(&point), [("(1)".into(), 1)]);
    }

    #[test]
    fn schur_of_c4() {
        let m = x_in_monomial(&k(&[2, 2]), DEFAULT_ORACLE_CAP).unwrap();
        let s = monomial_to_schur(&m, DEFAULT_ORACLE_CAP).unwrap();
        assert_eq!(
            terms(&s),
            [("(2,2)".into(), 2), ("(2,1,1)".into(), 2), ("(1,1,1,1)".into(), 14)]
        );
        assert_eq!(schur_to_monomial(&s, DEFAULT_ORACLE_CAP).unwrap(), m);
    }

    #[test]
    fn schur_round_trip_of_single_functions() {
        for lambda in all_partitions(5) {
            let s = SymFunc::from_terms(Basis::Schur, 5, [(lambda.clone(), BigInt::one())]).unwrap();
            let m = schur_to_monomial(&s, DEFAULT_ORACLE_CAP).unwrap();
            assert_eq!(monomial_to_schur(&m, DEFAULT_ORACLE_CAP).unwrap(), s);
        }
    }

    #[test]
    fn coloring_examples() {
        assert_eq!(coloring_count(&k(&[3, 1]), 2, 12).unwrap(), BigUint::from(2u32));
        assert!(coloring_count(&k(&[2, 1]), 0, 12).unwrap().is_zero());
        assert_eq!(coloring_count(&Graph::empty(0).unwrap(), 0, 12).unwrap(), BigUint::one());
        assert_eq!(coloring_count(&Graph::empty(4).unwrap(), 3, 12).unwrap(), BigUint::from(81u32));
        assert!(matches!(
            coloring_count(&Graph::empty(13).unwrap(), 2, 12),
            Err(Error::CapExceeded { .. })
        ));
    }

    #[test]
    fn monomial_specialization_counts_colorings() {
        for lambda in [p(&[2, 2]), p(&[3, 1]), p(&[2, 2, 1]), p(&[3, 2]), p(&[2, 1, 1, 1])] {
            let g = k(lambda.parts());
            let m = x_in_monomial(&g, DEFAULT_ORACLE_CAP).unwrap();
            for q in 0..=4 {
                let direct = BigInt::from(coloring_count(&g, q, DEFAULT_ORACLE_CAP).unwrap());
                assert_eq!(m.specialize_ones(q), direct, "{lambda} q={q}");
            }
        }
    }
}
