use num_bigint::BigInt;
use proptest::prelude::*;

use chromsym::oracle::{coloring_count, monomial_to_schur, x_in_monomial};
use chromsym::partitions::{all_partitions, dominates};
use chromsym::posets_graphs::{incomparability_graph, poset_from_covers, Graph, Poset};
use chromsym::schur_engine::{coeff_tabloids, coeff_tail, coeff_ww, expand_schur, Route, Subject};
use chromsym::sequences::{nsp_bruteforce, nsp_chain_union};
use chromsym::tabloids::{enumerate_srh_g_tabloids, psi_involution};
use chromsym::{Error, Partition};

/// A poset on `n <= max` elements whose relations all point from lower to
/// higher index.
fn poset(max: usize) -> impl Strategy<Value = Poset> {
    (0..=max).prop_flat_map(|n| {
        let pairs: Vec<(usize, usize)> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
        let len = pairs.len();
        prop::collection::vec(any::<bool>(), len).prop_map(move |keep| {
            let rel: Vec<_> = pairs.iter().zip(&keep).filter(|(_, &k)| k).map(|(&e, _)| e).collect();
            poset_from_covers(n, &rel).unwrap()
        })
    })
}

fn graph(max: usize) -> impl Strategy<Value = Graph> {
    (0..=max).prop_flat_map(|n| {
        let pairs: Vec<(usize, usize)> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
        let len = pairs.len();
        prop::collection::vec(any::<bool>(), len).prop_map(move |keep| {
            let edges: Vec<_> = pairs.iter().zip(&keep).filter(|(_, &k)| k).map(|(&e, _)| e).collect();
            Graph::new(n, &edges).unwrap()
        })
    })
}

fn partition_pair(max: usize) -> impl Strategy<Value = (Partition, Partition)> {
    (1..=max).prop_flat_map(|n| {
        let all = all_partitions(n);
        let k = all.len();
        (0..k, 0..k).prop_map(move |(i, j)| (all[i].clone(), all[j].clone()))
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn routes_agree_on_random_posets(order in poset(6)) {
        let graph = incomparability_graph(&order);
        let oracle = monomial_to_schur(&x_in_monomial(&graph, 12).unwrap(), 12).unwrap();
        for mu in all_partitions(order.size()) {
            let want = oracle.coeff(&mu);
            prop_assert_eq!(coeff_ww(&graph, &mu), want.clone(), "ww at {}", mu);
            prop_assert_eq!(coeff_tabloids(&graph, &order, &mu).unwrap().value, want.clone(), "tabloid at {}", mu);
            prop_assert_eq!(coeff_tail(&order, &mu).unwrap().value, want, "tail at {}", mu);
        }
    }

    #[test]
    fn single_column_coefficient_counts_nonincreasing_sequences(order in poset(6)) {
        let column = Partition::rectangle(1, order.size());
        let tail = coeff_tail(&order, &column).unwrap();
        prop_assert_eq!(tail.value, BigInt::from(nsp_bruteforce(&order, 9).unwrap()));
        prop_assert!(tail.tabloid_counts.unwrap().negative == 0u32.into());
    }

    #[test]
    fn psi_reverses_sign_and_is_an_involution(order in poset(5)) {
        let graph = incomparability_graph(&order);
        for shape in all_partitions(order.size()) {
            for t in enumerate_srh_g_tabloids(&graph, &order, &shape).unwrap() {
                match psi_involution(&t, &order) {
                    Ok(image) => {
                        prop_assert_eq!(image.sign(), -t.sign());
                        prop_assert_eq!(image.tail_sequence(), t.tail_sequence());
                        prop_assert!(image.validate(&graph, &order).is_ok());
                        prop_assert_eq!(psi_involution(&image, &order).unwrap(), t);
                    }
                    Err(e) => {
                        prop_assert_eq!(e, Error::NoAscent);
                        prop_assert!(t.tail_sequence().is_nonincreasing(&order));
                    }
                }
            }
        }
    }

    #[test]
    fn specialization_counts_colorings(g in graph(6)) {
        let subject = Subject::from_graph(g.clone()).unwrap();
        let f = expand_schur(&subject, Route::Auto).unwrap();
        for q in 0..=4 {
            prop_assert_eq!(f.specialize_ones(q), BigInt::from(coloring_count(&g, q, 6).unwrap()));
        }
        // The total-order tabloid route works on any graph.
        prop_assert_eq!(expand_schur(&subject, Route::Tabloid).unwrap(), expand_schur(&subject, Route::Ww).unwrap());
    }

    #[test]
    fn nsp_ignores_chain_order(parts in prop::collection::vec(1..=4usize, 0..=4)) {
        prop_assume!(parts.iter().sum::<usize>() <= 9);
        let mut covers = Vec::new();
        let mut start = 0;
        for &len in &parts {
            covers.extend((start..start + len - 1).map(|v| (v, v + 1)));
            start += len;
        }
        let order = poset_from_covers(start, &covers).unwrap();
        let sorted = Partition::from_unsorted(parts);
        prop_assert_eq!(nsp_bruteforce(&order, 9).unwrap(), nsp_chain_union(&sorted));
    }

    #[test]
    fn dominance_implies_reverse_lex_order((lambda, mu) in partition_pair(12)) {
        if dominates(&lambda, &mu).unwrap() {
            prop_assert!(lambda >= mu);
        }
        let shown = lambda.to_string();
        prop_assert_eq!(shown.parse::<Partition>().unwrap(), lambda);
    }
}
