//! Schur coefficients of chromatic symmetric functions.

mod closed;

pub use closed::{coeff_closed_2beta, coeff_closed_32beta, ClosedFamily};

use std::fmt;
use std::str::FromStr;

use num_bigint::{BigInt, BigUint};
use num_traits::Zero;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::oracle::{monomial_to_schur, x_in_monomial};
use crate::partitions::{all_partitions, Partition};
use crate::posets_graphs::{
    bits, incomparability_graph, incomparability_order, multipartite, poset_from_covers,
    semi_ordered_count, Graph, Poset,
};
use crate::symfunc::{Basis, SymFunc};
use crate::tabloids::{signed_content_counts, signed_tally, SignedTally};

/// Default vertex cap for scans and expansions.
pub const DEFAULT_MAX_VERTICES: usize = 14;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Route {
    Ww,
    Tabloid,
    Tail,
    Closed,
    Oracle,
    Auto,
}

impl fmt::Display for Route {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Route::Ww => "ww",
            Route::Tabloid => "tabloid",
            Route::Tail => "tail",
            Route::Closed => "closed",
            Route::Oracle => "oracle",
            Route::Auto => "auto",
        })
    }
}

impl FromStr for Route {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Ok(match s {
            "ww" => Route::Ww,
            "tabloid" => Route::Tabloid,
            "tail" => Route::Tail,
            "closed" => Route::Closed,
            "oracle" => Route::Oracle,
            "auto" => Route::Auto,
            other => return Err(Error::Parse(format!("unknown route {other:?}"))),
        })
    }
}

/// How the order attached to a [`Subject`] relates to its graph.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum OrderKind {
    /// The graph is exactly the incomparability graph of the order.
    Incomparability,
    /// The vertex indices in increasing order; compatible with any graph.
    TotalOrder,
}

/// A graph together with a compatible order.
#[derive(Debug, Clone)]
pub struct Subject {
    graph: Graph,
    order: Poset,
    kind: OrderKind,
    multipartite: Option<Partition>,
}

impl Subject {
    pub fn multipartite(lambda: &Partition) -> Result<Self> {
        let k = multipartite(lambda)?;
        Ok(Subject {
            graph: k.graph,
            order: k.poset,
            kind: OrderKind::Incomparability,
            multipartite: Some(lambda.clone()),
        })
    }

    pub fn from_poset(order: Poset) -> Self {
        let graph = incomparability_graph(&order);
        let multipartite = sides_type(&graph);
        Subject {
            graph,
            order,
            kind: OrderKind::Incomparability,
            multipartite,
        }
    }

    /// Uses chains on the sides of a complete multipartite graph, then any
    /// order whose incomparability graph is `graph`, then the total order on
    /// vertex indices.
    pub fn from_graph(graph: Graph) -> Result<Self> {
        if let Some(sides) = graph.multipartite_sides() {
            let covers: Vec<(usize, usize)> = sides
                .iter()
                .flat_map(|&side| {
                    let members: Vec<usize> = bits(side).collect();
                    members.windows(2).map(|w| (w[0], w[1])).collect::<Vec<_>>()
                })
                .collect();
            let order = poset_from_covers(graph.size(), &covers)?;
            let multipartite = sides_type(&graph);
            return Ok(Subject {
                graph,
                order,
                kind: OrderKind::Incomparability,
                multipartite,
            });
        }
        if let Some(order) = incomparability_order(&graph) {
            return Ok(Subject {
                graph,
                order,
                kind: OrderKind::Incomparability,
                multipartite: None,
            });
        }
        let order = Poset::chain(graph.size())?;
        Ok(Subject {
            graph,
            order,
            kind: OrderKind::TotalOrder,
            multipartite: None,
        })
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn order(&self) -> &Poset {
        &self.order
    }

    pub fn kind(&self) -> OrderKind {
        self.kind
    }

    pub fn size(&self) -> usize {
        self.graph.size()
    }

    /// `lambda` when the graph is `K_lambda`.
    pub fn multipartite_type(&self) -> Option<&Partition> {
        self.multipartite.as_ref()
    }

    pub fn closed_family(&self) -> Option<ClosedFamily> {
        self.multipartite.as_ref().and_then(ClosedFamily::detect)
    }

    /// The route [`Route::Auto`] resolves to.
    pub fn default_route(&self) -> Route {
        if self.closed_family().is_some() {
            Route::Closed
        } else if self.kind == OrderKind::Incomparability {
            Route::Tail
        } else {
            Route::Tabloid
        }
    }
}

fn sides_type(graph: &Graph) -> Option<Partition> {
    let sides = graph.multipartite_sides()?;
    if sides.is_empty() {
        return None;
    }
    Partition::new(sides.iter().map(|s| s.count_ones() as usize).collect()).ok()
}

/// One Schur coefficient with the route that produced it.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CoeffReport {
    pub lambda: Partition,
    #[serde(with = "crate::numeric::decimal")]
    pub value: BigInt,
    pub route: Route,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub tabloid_counts: Option<TabloidCounts>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TabloidCounts {
    #[serde(with = "crate::numeric::decimal")]
    pub positive: BigUint,
    #[serde(with = "crate::numeric::decimal")]
    pub negative: BigUint,
}

impl From<SignedTally> for TabloidCounts {
    fn from(t: SignedTally) -> Self {
        TabloidCounts {
            positive: t.positive,
            negative: t.negative,
        }
    }
}

/// `sum_T sgn(T) * (semi-ordered stable partitions of type sort(content(T)))`
/// over all SRH tabloids `T` of shape `lambda`.
pub fn coeff_ww(graph: &Graph, lambda: &Partition) -> BigInt {
    if lambda.weight() != graph.size() {
        return BigInt::zero();
    }
    signed_content_counts(lambda)
        .into_iter()
        .map(|(mu, sign_sum)| sign_sum * BigInt::from(semi_ordered_count(graph, &mu)))
        .sum()
}

/// Signed count of SRH `G`-tabloids of shape `lambda`.
pub fn coeff_tabloids(graph: &Graph, order: &Poset, lambda: &Partition) -> Result<CoeffReport> {
    let tally = signed_tally(graph, order, lambda, false)?;
    Ok(CoeffReport {
        lambda: lambda.clone(),
        value: tally.value(),
        route: Route::Tabloid,
        tabloid_counts: Some(tally.into()),
    })
}

/// Signed count of the SRH `inc(P)`-tabloids whose tail sequence is
/// non-increasing.
pub fn coeff_tail(order: &Poset, lambda: &Partition) -> Result<CoeffReport> {
    let graph = incomparability_graph(order);
    let tally = signed_tally(&graph, order, lambda, true)?;
    Ok(CoeffReport {
        lambda: lambda.clone(),
        value: tally.value(),
        route: Route::Tail,
        tabloid_counts: Some(tally.into()),
    })
}

fn plain(lambda: &Partition, value: BigInt, route: Route) -> CoeffReport {
    CoeffReport {
        lambda: lambda.clone(),
        value,
        route,
        tabloid_counts: None,
    }
}

/// `[s_lambda] X_G` by the requested route.
pub fn coefficient(subject: &Subject, lambda: &Partition, route: Route) -> Result<CoeffReport> {
    let route = if route == Route::Auto {
        subject.default_route()
    } else {
        route
    };
    match route {
        Route::Ww => Ok(plain(lambda, coeff_ww(&subject.graph, lambda), Route::Ww)),
        Route::Tabloid => coeff_tabloids(&subject.graph, &subject.order, lambda),
        Route::Tail => {
            if subject.kind != OrderKind::Incomparability {
                return Err(Error::NotIncomparability);
            }
            coeff_tail(&subject.order, lambda)
        }
        Route::Closed => {
            let family = subject.closed_family().ok_or_else(|| {
                Error::BadShape("closed forms cover only K_(2^b) and K_(3,2^b)".into())
            })?;
            Ok(plain(lambda, family.coefficient(lambda), Route::Closed))
        }
        Route::Oracle => {
            let f = monomial_to_schur(&x_in_monomial(&subject.graph, usize::MAX)?, usize::MAX)?;
            Ok(plain(lambda, f.coeff(lambda), Route::Oracle))
        }
        Route::Auto => unreachable!("resolved above"),
    }
}

/// The full Schur expansion of `X_G`. Partitions are farmed out in
/// parallel; results are collected in reverse-lexicographic order.
pub fn expand_schur(subject: &Subject, route: Route) -> Result<SymFunc> {
    let n = subject.size();
    if route == Route::Oracle {
        return monomial_to_schur(&x_in_monomial(&subject.graph, usize::MAX)?, usize::MAX);
    }
    let values: Vec<Result<(Partition, BigInt)>> = all_partitions(n)
        .into_par_iter()
        .map(|lambda| {
            let r = coefficient(subject, &lambda, route)?;
            Ok((lambda, r.value))
        })
        .collect();
    let terms = values.into_iter().collect::<Result<Vec<_>>>()?;
    SymFunc::from_terms(Basis::Schur, n, terms)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PositivityReport {
    pub all_nonnegative: bool,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub first_negative: Option<NegativeCoefficient>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct NegativeCoefficient {
    pub partition: Partition,
    #[serde(with = "crate::numeric::decimal")]
    pub value: BigInt,
}

/// Scans every Schur coefficient with the default route and reports the
/// first negative one in reverse-lexicographic order.
pub fn positivity_scan(subject: &Subject, cap: usize) -> Result<PositivityReport> {
    if subject.size() > cap {
        return Err(Error::CapExceeded {
            what: "positivity scan",
            size: subject.size(),
            cap,
        });
    }
    let f = expand_schur(subject, Route::Auto)?;
    let first_negative = f.first_negative().map(|(lambda, v)| NegativeCoefficient {
        partition: lambda.clone(),
        value: v.clone(),
    });
    Ok(PositivityReport {
        all_nonnegative: first_negative.is_none(),
        first_negative,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(parts: &[usize]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    fn expansion(f: &SymFunc) -> Vec<(String, i64)> {
        f.terms()
            .map(|(l, v)| (l.to_string(), i64::try_from(v).unwrap()))
            .collect()
    }

    fn km(parts: &[usize]) -> Subject {
        Subject::multipartite(&p(parts)).unwrap()
    }

    #[test]
    fn coefficient_examples() {
        let c4 = km(&[2, 2]);
        let claw = km(&[3, 1]);
        assert_eq!(coeff_ww(c4.graph(), &p(&[1, 1, 1, 1])), BigInt::from(14));
        assert_eq!(coeff_ww(claw.graph(), &p(&[2, 2])), BigInt::from(-1));
        assert_eq!(coeff_ww(c4.graph(), &p(&[3])), BigInt::zero());
        let k32 = km(&[3, 2]);
        let r = coeff_tabloids(k32.graph(), k32.order(), &p(&[3, 2])).unwrap();
        assert_eq!(r.value, BigInt::from(1));
        let counts = r.tabloid_counts.unwrap();
        assert_eq!(BigInt::from(counts.positive) - BigInt::from(counts.negative), r.value);
        let r = coeff_tabloids(c4.graph(), c4.order(), &p(&[2, 1, 1])).unwrap();
        assert_eq!(r.value, BigInt::from(2));
        let r = coeff_tabloids(c4.graph(), c4.order(), &p(&[5])).unwrap();
        assert!(r.value.is_zero());
        let r = coeff_tail(k32.order(), &p(&[1; 5])).unwrap();
        assert_eq!(r.value, BigInt::from(46));
        assert!(r.tabloid_counts.unwrap().negative.is_zero());
        assert_eq!(coeff_tail(c4.order(), &p(&[2, 2])).unwrap().value, BigInt::from(2));
    }

    #[test]
    fn tabloid_route_rejects_incompatible_order() {
        let c4 = km(&[2, 2]);
        let antichain = Poset::antichain(4).unwrap();
        assert!(matches!(
            coeff_tabloids(c4.graph(), &antichain, &p(&[2, 2])),
            Err(Error::OrderIncompatible(..))
        ));
    }

    #[test]
    fn expansion_examples() {
        for route in [Route::Auto, Route::Ww, Route::Tabloid, Route::Tail, Route::Oracle] {
            assert_eq!(
                expansion(&expand_schur(&km(&[2, 2]), route).unwrap()),
                [("(2,2)".into(), 2), ("(2,1,1)".into(), 2), ("(1,1,1,1)".into(), 14)]
            );
            assert_eq!(
                expansion(&expand_schur(&km(&[3, 2]), route).unwrap()),
                [
                    ("(3,2)".into(), 1),
                    ("(3,1,1)".into(), 1),
                    ("(2,2,1)".into(), 3),
                    ("(2,1,1,1)".into(), 12),
                    ("(1,1,1,1,1)".into(), 46)
                ]
            );
        }
        let claw = expand_schur(&km(&[3, 1]), Route::Auto).unwrap();
        assert_eq!(claw.coeff(&p(&[2, 2])), BigInt::from(-1));
    }

    #[test]
    fn positivity_examples() {
        assert!(positivity_scan(&km(&[3, 2, 2]), DEFAULT_MAX_VERTICES).unwrap().all_nonnegative);
        assert!(positivity_scan(&km(&[2, 2]), DEFAULT_MAX_VERTICES).unwrap().all_nonnegative);
        let r = positivity_scan(&km(&[3, 3]), DEFAULT_MAX_VERTICES).unwrap();
        assert!(!r.all_nonnegative);
        assert!(r.first_negative.unwrap().value < BigInt::zero());
        assert!(matches!(
            positivity_scan(&km(&[3, 3]), 5),
            Err(Error::CapExceeded { .. })
        ));
    }

    #[test]
    fn graph_input_picks_an_order() {
        let k = multipartite(&p(&[2, 1])).unwrap();
        let s = Subject::from_graph(k.graph.clone()).unwrap();
        assert_eq!(s.multipartite_type(), Some(&p(&[2, 1])));
        assert_eq!(s.default_route(), Route::Tail);
        let c5 = Graph::new(5, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)]).unwrap();
        let s = Subject::from_graph(c5).unwrap();
        assert_eq!(s.kind(), OrderKind::TotalOrder);
        assert_eq!(s.default_route(), Route::Tabloid);
        assert!(matches!(
            coefficient(&s, &p(&[2, 2, 1]), Route::Tail),
            Err(Error::NotIncomparability)
        ));
        let ww = expand_schur(&s, Route::Ww).unwrap();
        assert_eq!(expand_schur(&s, Route::Tabloid).unwrap(), ww);
        assert_eq!(expand_schur(&s, Route::Oracle).unwrap(), ww);
        assert!(matches!(
            coefficient(&s, &p(&[2, 2, 1]), Route::Closed),
            Err(Error::BadShape(_))
        ));
    }

    #[test]
    fn report_json() {
        let r = coeff_tail(km(&[2, 2]).order(), &p(&[2, 2])).unwrap();
        let json = serde_json::to_string(&r).unwrap();
        assert_eq!(
            json,
            r#"{"lambda":[2,2],"value":"2","route":"tail","tabloid_counts":{"positive":"2","negative":"0"}}"#
        );
        let back: CoeffReport = serde_json::from_str(&json).unwrap();
        assert_eq!(back, r);
    }
}
