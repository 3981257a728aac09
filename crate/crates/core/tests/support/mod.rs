//! Brute-force reference implementations.
//!
//! Everything here reads the raw document and reimplements the definitions
//! by generate-and-test, without calling the library's search code.

#![allow(dead_code)]

use std::collections::{BTreeMap, BTreeSet};

use hg2_core::generate::{random_document, RandomParams};
use hg2_core::io::Hg2Document;
use hg2_core::Weight;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

pub struct Raw {
    pub hnodes: Vec<String>,
    /// (id, head, tail, weight)
    pub hedges: Vec<(String, BTreeSet<String>, BTreeSet<String>, Weight)>,
    pub gnodes: Vec<String>,
    pub gedges: Vec<(String, String, Weight)>,
    pub node_conn: BTreeMap<String, (String, Weight)>,
    pub edge_conn: BTreeMap<String, (String, Weight)>,
}

fn w(n: &Option<serde_json::Number>) -> Weight {
    n.as_ref().map_or(Weight::ONE, |n| n.to_string().parse().unwrap())
}

impl Raw {
    pub fn from_doc(doc: &Hg2Document) -> Raw {
        Raw {
            hnodes: doc.hypergraph.nodes.clone(),
            hedges: doc
                .hypergraph
                .edges
                .iter()
                .map(|e| {
                    (
                        e.id.clone(),
                        e.head.iter().cloned().collect(),
                        e.tail.iter().cloned().collect(),
                        w(&e.weight),
                    )
                })
                .collect(),
            gnodes: doc.graph.nodes.clone(),
            gedges: doc
                .graph
                .edges
                .iter()
                .map(|e| (e.src.clone(), e.dst.clone(), w(&e.weight)))
                .collect(),
            node_conn: doc
                .connectors
                .node
                .iter()
                .map(|c| (c.h.clone(), (c.g.clone(), w(&c.weight))))
                .collect(),
            edge_conn: doc
                .connectors
                .edge
                .iter()
                .map(|c| (c.h.clone(), (c.g.clone(), w(&c.weight))))
                .collect(),
        }
    }

    fn edge_by_id(&self, id: &str) -> &(String, BTreeSet<String>, BTreeSet<String>, Weight) {
        self.hedges.iter().find(|e| e.0 == id).unwrap()
    }

    /// All k-length sequences over `items`, with or without repetition.
    fn sequences(items: &[String], k: usize, distinct: bool) -> Vec<Vec<String>> {
        let mut out = vec![Vec::new()];
        for _ in 0..k {
            let mut next = Vec::new();
            for prefix in &out {
                for it in items {
                    if distinct && prefix.contains(it) {
                        continue;
                    }
                    let mut p = prefix.clone();
                    p.push(it.clone());
                    next.push(p);
                }
            }
            out = next;
        }
        out
    }

    /// Hyperpaths from `s` to `t` as flat sequences, ordered by
    /// (edge sequence, node sequence).
    pub fn hyperpaths(&self, s: &str, t: &str, elementary: bool) -> Vec<Vec<String>> {
        let edge_ids: Vec<String> = self.hedges.iter().map(|e| e.0.clone()).collect();
        let max_len = if elementary {
            self.hnodes.len().saturating_sub(1)
        } else {
            edge_ids.len()
        };
        let inner_pool: Vec<String> = if elementary {
            self.hnodes.iter().filter(|n| *n != s && *n != t).cloned().collect()
        } else {
            self.hnodes.clone()
        };
        let mut found = Vec::new();
        for len in 1..=max_len {
            let edge_seqs = Self::sequences(&edge_ids, len, !elementary);
            let inner_seqs = Self::sequences(&inner_pool, len - 1, elementary);
            for es in &edge_seqs {
                for inner in &inner_seqs {
                    let mut nodes = vec![s.to_string()];
                    nodes.extend(inner.iter().cloned());
                    nodes.push(t.to_string());
                    let ok = es.iter().enumerate().all(|(i, e)| {
                        let (_, head, tail, _) = self.edge_by_id(e);
                        head.contains(&nodes[i]) && tail.contains(&nodes[i + 1])
                    });
                    if ok {
                        found.push((es.clone(), nodes));
                    }
                }
            }
        }
        found.sort();
        found
            .into_iter()
            .map(|(es, ns)| {
                let mut flat = Vec::new();
                for (i, n) in ns.iter().enumerate() {
                    flat.push(n.clone());
                    if let Some(e) = es.get(i) {
                        flat.push(e.clone());
                    }
                }
                flat
            })
            .collect()
    }

    /// Transitive closure by Floyd-Warshall.
    pub fn reach(&self) -> BTreeMap<(String, String), bool> {
        let n = self.gnodes.len();
        let idx = |s: &str| self.gnodes.iter().position(|x| x == s).unwrap();
        let mut r = vec![vec![false; n]; n];
        for (i, row) in r.iter_mut().enumerate() {
            row[i] = true;
        }
        for (a, b, _) in &self.gedges {
            r[idx(a)][idx(b)] = true;
        }
        for k in 0..n {
            for i in 0..n {
                for j in 0..n {
                    if r[i][k] && r[k][j] {
                        r[i][j] = true;
                    }
                }
            }
        }
        let mut out = BTreeMap::new();
        for (a, row) in self.gnodes.iter().zip(&r) {
            for (b, &ok) in self.gnodes.iter().zip(row) {
                out.insert((a.clone(), b.clone()), ok);
            }
        }
        out
    }

    /// Pair notation and anchors of a flat hyperpath sequence.
    pub fn pairs(&self, flat: &[String]) -> (Vec<String>, Vec<String>) {
        let mut labels = Vec::new();
        let mut anchors = Vec::new();
        for (i, item) in flat.iter().enumerate() {
            let conn = if i % 2 == 0 {
                self.node_conn.get(item)
            } else {
                self.edge_conn.get(item)
            };
            match conn {
                Some((g, _)) => {
                    labels.push(format!("{item}({g})"));
                    anchors.push(g.clone());
                }
                None => labels.push(format!("{item}()")),
            }
        }
        (labels, anchors)
    }

    /// Valid routes as (flat hyperpath, pair labels, anchors).
    pub fn routes(&self, s: &str, t: &str) -> Vec<(Vec<String>, Vec<String>, Vec<String>)> {
        let reach = self.reach();
        self.hyperpaths(s, t, true)
            .into_iter()
            .filter_map(|flat| {
                let (labels, anchors) = self.pairs(&flat);
                let ok = anchors
                    .windows(2)
                    .all(|w| reach[&(w[0].clone(), w[1].clone())]);
                ok.then_some((flat, labels, anchors))
            })
            .collect()
    }

    /// Every node-simple path as (nodes, weight), trying each parallel edge.
    pub fn simple_paths(&self, from: &str, to: &str) -> Vec<(Vec<String>, Weight)> {
        fn go(
            raw: &Raw,
            to: &str,
            path: &mut Vec<String>,
            weight: Weight,
            out: &mut Vec<(Vec<String>, Weight)>,
        ) {
            let at = path.last().unwrap().clone();
            if at == to {
                out.push((path.clone(), weight));
                return;
            }
            for (a, b, ew) in &raw.gedges {
                if *a == at && !path.contains(b) {
                    path.push(b.clone());
                    go(raw, to, path, weight + *ew, out);
                    path.pop();
                }
            }
        }
        let mut out = Vec::new();
        go(self, to, &mut vec![from.to_string()], Weight::ZERO, &mut out);
        out
    }

    /// Minimum total over every (route, trace) combination, or `None` when
    /// no valid route exists.
    pub fn min_total(&self, s: &str, t: &str) -> Option<Weight> {
        self.min_total_over(&self.routes(s, t))
    }

    /// Same as [`Raw::min_total`] over routes already produced by [`Raw::routes`].
    pub fn min_total_over(&self, routes: &[(Vec<String>, Vec<String>, Vec<String>)]) -> Option<Weight> {
        let mut best: Option<Weight> = None;
        for (flat, _, anchors) in routes {
            let route_cost: Weight = flat
                .iter()
                .skip(1)
                .step_by(2)
                .map(|e| self.edge_by_id(e).3)
                .sum();
            let connector_cost: Weight = flat
                .iter()
                .enumerate()
                .filter_map(|(i, item)| {
                    if i % 2 == 0 {
                        self.node_conn.get(item)
                    } else {
                        self.edge_conn.get(item)
                    }
                })
                .map(|(_, w)| *w)
                .sum();
            let segments: Vec<Vec<(Vec<String>, Weight)>> = anchors
                .windows(2)
                .map(|w| self.simple_paths(&w[0], &w[1]))
                .collect();
            // full cross product of segment choices
            let mut totals = vec![Weight::ZERO];
            for seg in &segments {
                let mut next = Vec::with_capacity(totals.len() * seg.len());
                for t0 in &totals {
                    for (_, sw) in seg {
                        next.push(*t0 + *sw);
                    }
                }
                totals = next;
            }
            for g in totals {
                let total = route_cost + g + connector_cost;
                if best.is_none_or(|b| total < b) {
                    best = Some(total);
                }
            }
        }
        best
    }
}

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Random instance in the size class used by the equivalence checks:
/// up to 6 hypernodes, 4 hyperedges with head/tail sizes up to 2, 6 graph
/// nodes, integer weights 0..=9.
pub fn small_instance(seed: u64) -> Hg2Document {
    use rand::Rng;
    let mut r = rng(seed);
    let params = RandomParams {
        hyper_nodes: r.gen_range(2..=6),
        hyper_edges: r.gen_range(1..=4),
        graph_nodes: r.gen_range(1..=6),
        graph_edge_prob: r.gen_range(0.2..0.6),
        node_connector_prob: r.gen_range(0.3..0.9),
        edge_connector_prob: r.gen_range(0.3..0.9),
        ..RandomParams::default()
    };
    random_document(&mut r, &params)
}

/// Element counts of a DOT document, read through a DOT grammar parser.
#[derive(Debug, Default, PartialEq, Eq)]
pub struct DotCounts {
    pub ellipses: usize,
    pub boxes: usize,
    pub circles: usize,
    pub dashed: usize,
    pub bold: usize,
    pub plain_edges: usize,
}

pub fn dot_counts(text: &str) -> DotCounts {
    use graphviz_rust::dot_structures::{Attribute, EdgeTy, Graph, Id, Stmt};

    fn id_text(id: &Id) -> String {
        match id {
            Id::Html(s) | Id::Escaped(s) | Id::Plain(s) | Id::Anonymous(s) => s.trim_matches('"').to_string(),
        }
    }
    fn attr(attrs: &[Attribute], key: &str) -> Option<String> {
        attrs.iter().find(|a| id_text(&a.0) == key).map(|a| id_text(&a.1))
    }
    fn walk(stmts: &[Stmt], c: &mut DotCounts) {
        for s in stmts {
            match s {
                Stmt::Node(n) => match attr(&n.attributes, "shape").as_deref() {
                    Some("ellipse") => c.ellipses += 1,
                    Some("box") => c.boxes += 1,
                    Some("circle") => c.circles += 1,
                    other => panic!("unexpected node shape {other:?}"),
                },
                Stmt::Edge(e) => {
                    assert!(matches!(e.ty, EdgeTy::Pair(..)));
                    match attr(&e.attributes, "style").as_deref() {
                        Some("dashed") => c.dashed += 1,
                        Some("bold") => c.bold += 1,
                        None => c.plain_edges += 1,
                        other => panic!("unexpected edge style {other:?}"),
                    }
                }
                Stmt::Subgraph(sg) => walk(&sg.stmts, c),
                _ => {}
            }
        }
    }

    let graph = graphviz_rust::parse(text).expect("output follows the DOT grammar");
    let Graph::DiGraph { stmts, .. } = graph else {
        panic!("expected a digraph");
    };
    let mut counts = DotCounts::default();
    walk(&stmts, &mut counts);
    counts
}

/// Every weight slot of a document, in a fixed order.
pub fn weight_slots(doc: &mut Hg2Document) -> Vec<&mut Option<serde_json::Number>> {
    let mut out: Vec<&mut Option<serde_json::Number>> = Vec::new();
    out.extend(doc.hypergraph.edges.iter_mut().map(|e| &mut e.weight));
    out.extend(doc.graph.edges.iter_mut().map(|e| &mut e.weight));
    out.extend(doc.connectors.node.iter_mut().map(|c| &mut c.weight));
    out.extend(doc.connectors.edge.iter_mut().map(|c| &mut c.weight));
    out
}

/// Up to `k` distinct ordered (source, target) hypernode pairs.
pub fn query_pairs(doc: &Hg2Document, seed: u64, k: usize) -> Vec<(String, String)> {
    use rand::seq::SliceRandom;
    let nodes = &doc.hypergraph.nodes;
    let mut all: Vec<(String, String)> = nodes
        .iter()
        .flat_map(|s| nodes.iter().filter(move |t| *t != s).map(move |t| (s.clone(), t.clone())))
        .collect();
    all.shuffle(&mut rng(seed ^ 0x5eed));
    all.truncate(k);
    all
}
