//! JSON and CSV forms of graphs and expansions.

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::partitions::Partition;
use crate::posets_graphs::{poset_from_covers, Graph};
use crate::schur_engine::Subject;
use crate::symfunc::{Basis, SymFunc};

/// A graph description: a complete multipartite type, a poset given by
/// cover relations, or an explicit edge list.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum GraphSpec {
    Multipartite {
        multipartite: Partition,
    },
    Poset {
        n: usize,
        covers: Vec<(usize, usize)>,
        #[serde(skip_serializing_if = "Option::is_none", default)]
        labels: Option<Vec<String>>,
    },
    Graph {
        n: usize,
        edges: Vec<(usize, usize)>,
    },
}

impl GraphSpec {
    pub fn to_subject(&self) -> Result<Subject> {
        match self {
            GraphSpec::Multipartite { multipartite } => Subject::multipartite(multipartite),
            GraphSpec::Poset { n, covers, labels } => {
                let mut poset = poset_from_covers(*n, covers)?;
                if let Some(labels) = labels {
                    poset = poset.with_labels(labels.clone())?;
                }
                Ok(Subject::from_poset(poset))
            }
            GraphSpec::Graph { n, edges } => Subject::from_graph(Graph::new(*n, edges)?),
        }
    }

    /// Number of vertices, without building the graph.
    pub fn size(&self) -> usize {
        match self {
            GraphSpec::Multipartite { multipartite } => multipartite.weight(),
            GraphSpec::Poset { n, .. } | GraphSpec::Graph { n, .. } => *n,
        }
    }

    pub fn from_json(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CoeffEntry {
    pub partition: Partition,
    #[serde(with = "crate::numeric::decimal")]
    pub value: BigInt,
}

/// An expansion with its graph, coefficients in reverse-lexicographic order
/// and values as decimal strings.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExpansionJson {
    pub graph: GraphSpec,
    pub basis: Basis,
    pub n: usize,
    pub coeffs: Vec<CoeffEntry>,
}

impl ExpansionJson {
    pub fn new(graph: GraphSpec, f: &SymFunc) -> Self {
        ExpansionJson {
            graph,
            basis: f.basis(),
            n: f.degree(),
            coeffs: f
                .terms()
                .map(|(partition, value)| CoeffEntry {
                    partition: partition.clone(),
                    value: value.clone(),
                })
                .collect(),
        }
    }

    pub fn to_symfunc(&self) -> Result<SymFunc> {
        SymFunc::from_terms(
            self.basis,
            self.n,
            self.coeffs.iter().map(|e| (e.partition.clone(), e.value.clone())),
        )
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("plain data serializes")
    }

    pub fn from_json(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))
    }
}

/// `partition;value` lines with a header, reverse-lexicographic order.
pub fn expansion_csv(f: &SymFunc) -> String {
    let mut out = String::from("partition;value\n");
    for (lambda, value) in f.terms() {
        let parts: Vec<String> = lambda.parts().iter().map(usize::to_string).collect();
        out.push_str(&format!("{};{}\n", parts.join(","), value));
    }
    out
}

pub fn parse_expansion_csv(text: &str, basis: Basis) -> Result<SymFunc> {
    let mut terms = Vec::new();
    for (i, line) in text.lines().enumerate() {
        if i == 0 && line == "partition;value" || line.is_empty() {
            continue;
        }
        let (partition, value) = line
            .split_once(';')
            .ok_or_else(|| Error::Parse(format!("line {}: expected partition;value", i + 1)))?;
        let lambda: Partition = partition.parse()?;
        let value: BigInt = value
            .parse()
            .map_err(|e| Error::Parse(format!("line {}: {e}", i + 1)))?;
        terms.push((lambda, value));
    }
    let degree = terms.first().map_or(0, |(l, _)| l.weight());
    SymFunc::from_terms(basis, degree, terms)
}
