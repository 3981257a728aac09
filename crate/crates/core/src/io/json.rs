use std::str::FromStr;

use serde::{Deserialize, Serialize};
use serde_json::Number;
use thiserror::Error;

use crate::error::Error;
use crate::graph::GraphBuilder;
use crate::hg2::{ConnectorSet, Hg2};
use crate::hyper::HypergraphBuilder;
use crate::weight::Weight;

#[derive(Debug, Error)]
pub enum LoadError {
    #[error("parse error at line {line}, column {column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },
    #[error("schema error at {path}: {message}")]
    Schema { path: String, message: String },
    #[error("invalid instance at {path}: {source}")]
    Semantic {
        path: String,
        #[source]
        source: Error,
    },
}

impl LoadError {
    /// Element path of the offending value (`$` for the whole document).
    pub fn location(&self) -> String {
        match self {
            LoadError::Parse { line, column, .. } => format!("line {line}, column {column}"),
            LoadError::Schema { path, .. } | LoadError::Semantic { path, .. } => path.clone(),
        }
    }
}

// Field order is alphabetical so the serialized keys come out sorted.

/// Serialized form of an instance.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Hg2Document {
    pub connectors: ConnectorsSection,
    pub graph: GraphSection,
    pub hypergraph: HypergraphSection,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ConnectorsSection {
    pub edge: Vec<ConnectorDoc>,
    pub node: Vec<ConnectorDoc>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ConnectorDoc {
    pub g: String,
    pub h: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub weight: Option<Number>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GraphSection {
    pub edges: Vec<GraphEdgeDoc>,
    pub nodes: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GraphEdgeDoc {
    pub dst: String,
    pub src: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub weight: Option<Number>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct HypergraphSection {
    pub edges: Vec<HyperEdgeDoc>,
    pub nodes: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct HyperEdgeDoc {
    pub head: Vec<String>,
    pub id: String,
    pub tail: Vec<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub weight: Option<Number>,
}

/// JSON number for a weight, written as a plain decimal.
pub fn weight_number(weight: Weight) -> Number {
    Number::from_str(&weight.to_string()).expect("weights render as JSON numbers")
}

fn read_weight(number: &Option<Number>, path: String) -> Result<Weight, LoadError> {
    let Some(number) = number else {
        return Ok(Weight::ONE);
    };
    number.to_string().parse().map_err(|source| LoadError::Semantic {
        source: Error::InvalidWeight {
            context: path.clone(),
            source,
        },
        path,
    })
}

fn semantic(path: String) -> impl FnOnce(Error) -> LoadError {
    move |source| LoadError::Semantic { path, source }
}

impl Hg2Document {
    pub fn parse(text: &str) -> Result<Self, LoadError> {
        let de = &mut serde_json::Deserializer::from_str(text);
        let doc: Hg2Document = serde_path_to_error::deserialize(de).map_err(|err| {
            let path = err.path().to_string();
            let inner = err.into_inner();
            match inner.classify() {
                serde_json::error::Category::Data => LoadError::Schema {
                    path: if path == "." { "$".into() } else { path },
                    message: inner.to_string(),
                },
                _ => LoadError::Parse {
                    line: inner.line(),
                    column: inner.column(),
                    message: inner.to_string(),
                },
            }
        })?;
        Ok(doc)
    }

    /// Validates and builds the instance.
    pub fn to_hg2(&self) -> Result<Hg2, LoadError> {
        let mut h = HypergraphBuilder::new();
        for (i, n) in self.hypergraph.nodes.iter().enumerate() {
            h.add_node(n.as_str())
                .map_err(semantic(format!("hypergraph.nodes[{i}]")))?;
        }
        for (i, e) in self.hypergraph.edges.iter().enumerate() {
            let at = format!("hypergraph.edges[{i}]");
            let weight = read_weight(&e.weight, format!("{at}.weight"))?;
            h.add_edge(
                e.id.as_str(),
                e.head.iter().map(String::as_str),
                e.tail.iter().map(String::as_str),
                weight,
            )
            .map_err(semantic(at))?;
        }

        let mut g = GraphBuilder::new();
        for (i, n) in self.graph.nodes.iter().enumerate() {
            g.add_node(n.as_str())
                .map_err(semantic(format!("graph.nodes[{i}]")))?;
        }
        for (i, e) in self.graph.edges.iter().enumerate() {
            let at = format!("graph.edges[{i}]");
            let weight = read_weight(&e.weight, format!("{at}.weight"))?;
            g.add_edge(e.src.as_str(), e.dst.as_str(), weight)
                .map_err(semantic(at))?;
        }

        let mut c = ConnectorSet::new();
        for (i, conn) in self.connectors.node.iter().enumerate() {
            let weight = read_weight(&conn.weight, format!("connectors.node[{i}].weight"))?;
            c = c.node(conn.h.as_str(), conn.g.as_str(), weight);
        }
        for (i, conn) in self.connectors.edge.iter().enumerate() {
            let weight = read_weight(&conn.weight, format!("connectors.edge[{i}].weight"))?;
            c = c.edge(conn.h.as_str(), conn.g.as_str(), weight);
        }

        let (h, g) = (h.build(), g.build());
        Hg2::new(h, g, c.clone()).map_err(|err| {
            let offending = |label: &str| match &err {
                Error::DanglingConnector { from, .. } => from == label,
                Error::DuplicateSourceConnector(src) => src == label,
                _ => false,
            };
            // Report the last connector from the offending source: for
            // duplicates that is the second one.
            let path = c
                .node
                .iter()
                .rposition(|x| offending(x.h_node.as_str()))
                .map(|i| format!("connectors.node[{i}]"))
                .or_else(|| {
                    c.edge
                        .iter()
                        .rposition(|x| offending(x.h_edge.as_str()))
                        .map(|i| format!("connectors.edge[{i}]"))
                })
                .unwrap_or_else(|| "connectors".into());
            LoadError::Semantic { path, source: err }
        })
    }

    /// Canonical document for `hg`: every list sorted, every weight explicit.
    pub fn from_hg2(hg: &Hg2) -> Self {
        let h = hg.hypergraph();
        let mut hyper_nodes: Vec<String> = h.nodes().iter().map(ToString::to_string).collect();
        hyper_nodes.sort();
        let mut hyper_edges: Vec<HyperEdgeDoc> = h
            .edges()
            .iter()
            .map(|e| HyperEdgeDoc {
                head: e.head().iter().map(ToString::to_string).collect(),
                id: e.id().to_string(),
                tail: e.tail().iter().map(ToString::to_string).collect(),
                weight: Some(weight_number(e.weight())),
            })
            .collect();
        hyper_edges.sort_by(|a, b| a.id.cmp(&b.id));

        let g = hg.graph();
        let mut graph_nodes: Vec<String> = g.nodes().iter().map(ToString::to_string).collect();
        graph_nodes.sort();
        let mut graph_edges: Vec<_> = g.edges().iter().map(|e| (e.src.clone(), e.dst.clone(), e.weight)).collect();
        graph_edges.sort();
        let graph_edges = graph_edges
            .into_iter()
            .map(|(src, dst, w)| GraphEdgeDoc {
                dst: dst.to_string(),
                src: src.to_string(),
                weight: Some(weight_number(w)),
            })
            .collect();

        let mut c = hg.connectors().clone();
        c.node.sort();
        c.edge.sort();
        Hg2Document {
            connectors: ConnectorsSection {
                edge: c
                    .edge
                    .iter()
                    .map(|x| ConnectorDoc {
                        g: x.g_node.to_string(),
                        h: x.h_edge.to_string(),
                        weight: Some(weight_number(x.weight)),
                    })
                    .collect(),
                node: c
                    .node
                    .iter()
                    .map(|x| ConnectorDoc {
                        g: x.g_node.to_string(),
                        h: x.h_node.to_string(),
                        weight: Some(weight_number(x.weight)),
                    })
                    .collect(),
            },
            graph: GraphSection {
                edges: graph_edges,
                nodes: graph_nodes,
            },
            hypergraph: HypergraphSection {
                edges: hyper_edges,
                nodes: hyper_nodes,
            },
        }
    }

    /// Pretty-printed JSON with a trailing newline.
    pub fn to_json(&self) -> String {
        let mut text = serde_json::to_string_pretty(self).expect("document serializes");
        text.push('\n');
        text
    }
}

pub fn load(text: &str) -> Result<Hg2, LoadError> {
    Hg2Document::parse(text)?.to_hg2()
}

/// Canonical JSON for `hg`; byte-identical for structurally equal instances.
pub fn save(hg: &Hg2) -> String {
    Hg2Document::from_hg2(hg).to_json()
}

/// Canonical form of a valid document text.
pub fn canonicalize(text: &str) -> Result<String, LoadError> {
    Ok(save(&load(text)?))
}
