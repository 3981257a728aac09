//! Instance generators shared by the benchmarks.

use hg2_core::generate::{random_document, RandomParams};
use hg2_core::Hg2;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

/// A named benchmark instance with one query.
pub struct Workload {
    pub name: String,
    pub hg: Hg2,
    pub source: String,
    pub target: String,
}

/// Random instance with `hyper_nodes` hypernodes and `graph_nodes` graph
/// nodes, queried from the first hypernode to the last. Seeds are tried in
/// order until the query has at least one route, so the benchmark measures
/// real work.
pub fn random_workload(hyper_nodes: usize, hyper_edges: usize, graph_nodes: usize) -> Workload {
    let params = RandomParams {
        hyper_nodes,
        hyper_edges,
        max_head: 2,
        max_tail: 2,
        graph_nodes,
        graph_edge_prob: 0.3,
        node_connector_prob: 0.5,
        edge_connector_prob: 0.5,
        max_weight: 9,
    };
    let source = hg2_core::generate::hyper_node_label(0);
    let target = hg2_core::generate::hyper_node_label(hyper_nodes - 1);
    for seed in 0u64.. {
        let doc = random_document(&mut ChaCha8Rng::seed_from_u64(seed), &params);
        let hg = doc.to_hg2().expect("generator emits valid documents");
        if !hg.enumerate_routes(&source, &target).expect("labels exist").is_empty() {
            return Workload {
                name: format!("random h{hyper_nodes}/e{hyper_edges}/g{graph_nodes}"),
                hg,
                source,
                target,
            };
        }
    }
    unreachable!()
}

pub fn fig1_workload() -> Workload {
    Workload {
        name: "fig1".into(),
        hg: hg2_core::fixtures::fig1(),
        source: "1".into(),
        target: "7".into(),
    }
}
