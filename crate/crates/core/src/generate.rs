//! Random instances for property tests and benchmarks.

use rand::seq::SliceRandom;
use rand::Rng;

use crate::io::{
    weight_number, ConnectorDoc, ConnectorsSection, GraphEdgeDoc, GraphSection, Hg2Document, HyperEdgeDoc,
    HypergraphSection,
};
use crate::weight::Weight;

#[derive(Debug, Clone)]
pub struct RandomParams {
    pub hyper_nodes: usize,
    pub hyper_edges: usize,
    pub max_head: usize,
    pub max_tail: usize,
    pub graph_nodes: usize,
    /// Chance of each ordered pair of distinct graph nodes getting an edge.
    pub graph_edge_prob: f64,
    pub node_connector_prob: f64,
    pub edge_connector_prob: f64,
    /// Integer weights are drawn from `0..=max_weight`.
    pub max_weight: u64,
}

impl Default for RandomParams {
    fn default() -> Self {
        RandomParams {
            hyper_nodes: 6,
            hyper_edges: 4,
            max_head: 2,
            max_tail: 2,
            graph_nodes: 6,
            graph_edge_prob: 0.35,
            node_connector_prob: 0.5,
            edge_connector_prob: 0.5,
            max_weight: 9,
        }
    }
}

pub fn hyper_node_label(i: usize) -> String {
    (i + 1).to_string()
}

pub fn hyper_edge_label(i: usize) -> String {
    format!("E{}", i + 1)
}

pub fn graph_node_label(i: usize) -> String {
    if i < 26 {
        ((b'a' + i as u8) as char).to_string()
    } else {
        format!("v{i}")
    }
}

/// A random valid document. Needs at least two hypernodes when hyperedges
/// are requested.
pub fn random_document<R: Rng + ?Sized>(rng: &mut R, params: &RandomParams) -> Hg2Document {
    let weight = |rng: &mut R| Some(weight_number(Weight::from_units(rng.gen_range(0..=params.max_weight))));

    let hyper_nodes: Vec<String> = (0..params.hyper_nodes).map(hyper_node_label).collect();
    let mut hyper_edges = Vec::new();
    if params.hyper_nodes >= 2 {
        for i in 0..params.hyper_edges {
            let mut pool = hyper_nodes.clone();
            pool.shuffle(rng);
            let head_len = rng.gen_range(1..=params.max_head.max(1)).min(pool.len() - 1);
            let tail_len = rng
                .gen_range(1..=params.max_tail.max(1))
                .min(pool.len() - head_len);
            let mut head = pool[..head_len].to_vec();
            let mut tail = pool[head_len..head_len + tail_len].to_vec();
            head.sort();
            tail.sort();
            hyper_edges.push(HyperEdgeDoc {
                head,
                id: hyper_edge_label(i),
                tail,
                weight: weight(rng),
            });
        }
    }

    let graph_nodes: Vec<String> = (0..params.graph_nodes).map(graph_node_label).collect();
    let mut graph_edges = Vec::new();
    for src in &graph_nodes {
        for dst in &graph_nodes {
            if src != dst && rng.gen_bool(params.graph_edge_prob) {
                graph_edges.push(GraphEdgeDoc {
                    dst: dst.clone(),
                    src: src.clone(),
                    weight: weight(rng),
                });
            }
        }
    }

    let mut node_conns = Vec::new();
    let mut edge_conns = Vec::new();
    if !graph_nodes.is_empty() {
        for n in &hyper_nodes {
            if rng.gen_bool(params.node_connector_prob) {
                node_conns.push(ConnectorDoc {
                    g: graph_nodes.choose(rng).unwrap().clone(),
                    h: n.clone(),
                    weight: weight(rng),
                });
            }
        }
        for e in &hyper_edges {
            if rng.gen_bool(params.edge_connector_prob) {
                edge_conns.push(ConnectorDoc {
                    g: graph_nodes.choose(rng).unwrap().clone(),
                    h: e.id.clone(),
                    weight: weight(rng),
                });
            }
        }
    }

    Hg2Document {
        connectors: ConnectorsSection {
            edge: edge_conns,
            node: node_conns,
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
