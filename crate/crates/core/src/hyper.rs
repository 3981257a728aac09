//! The upper layer: a directed hypergraph whose hyperedges carry a head set
//! and a disjoint tail set.
//!
//! A hyperpath `n1, E1, n2, E2, ..., Eq, nq+1` steps into each hyperedge at a
//! head node and leaves it at a tail node.

use std::collections::{BTreeSet, HashMap, HashSet};
use std::fmt;

use crate::error::{Error, Result};
use crate::ids::{HyperEdgeId, HyperNodeId};
use crate::weight::Weight;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HyperEdge {
    id: HyperEdgeId,
    head: BTreeSet<HyperNodeId>,
    tail: BTreeSet<HyperNodeId>,
    weight: Weight,
}

impl HyperEdge {
    pub fn id(&self) -> &HyperEdgeId {
        &self.id
    }

    pub fn head(&self) -> &BTreeSet<HyperNodeId> {
        &self.head
    }

    pub fn tail(&self) -> &BTreeSet<HyperNodeId> {
        &self.tail
    }

    pub fn weight(&self) -> Weight {
        self.weight
    }

    /// Head and tail together.
    pub fn vertices(&self) -> impl Iterator<Item = &HyperNodeId> {
        self.head.iter().chain(self.tail.iter())
    }
}

/// Directed hypergraph. Immutable once built.
#[derive(Debug, Clone)]
pub struct Hypergraph {
    nodes: Vec<HyperNodeId>,
    node_index: HashMap<HyperNodeId, usize>,
    edges: Vec<HyperEdge>,
    edge_index: HashMap<HyperEdgeId, usize>,
    /// Per node: (edge, tail node) steps leaving it, sorted by edge id then tail label.
    steps: Vec<Vec<(usize, usize)>>,
}

#[derive(Debug, Default)]
pub struct HypergraphBuilder {
    nodes: Vec<HyperNodeId>,
    node_index: HashMap<HyperNodeId, usize>,
    edges: Vec<HyperEdge>,
    edge_index: HashMap<HyperEdgeId, usize>,
}

impl HypergraphBuilder {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn add_node(&mut self, label: impl Into<HyperNodeId>) -> Result<&mut Self> {
        let id = label.into();
        if id.as_str().is_empty() {
            return Err(Error::EmptyLabel);
        }
        if self.node_index.contains_key(&id) {
            return Err(Error::DuplicateNode(id.to_string()));
        }
        self.node_index.insert(id.clone(), self.nodes.len());
        self.nodes.push(id);
        Ok(self)
    }

    pub fn add_edge<H, T>(
        &mut self,
        id: impl Into<HyperEdgeId>,
        head: H,
        tail: T,
        weight: Weight,
    ) -> Result<&mut Self>
    where
        H: IntoIterator,
        H::Item: Into<HyperNodeId>,
        T: IntoIterator,
        T::Item: Into<HyperNodeId>,
    {
        let id = id.into();
        if id.as_str().is_empty() {
            return Err(Error::EmptyLabel);
        }
        if self.edge_index.contains_key(&id) {
            return Err(Error::DuplicateEdge(id.to_string()));
        }
        let head: BTreeSet<HyperNodeId> = head.into_iter().map(Into::into).collect();
        let tail: BTreeSet<HyperNodeId> = tail.into_iter().map(Into::into).collect();
        if head.is_empty() || tail.is_empty() {
            return Err(Error::EmptyHeadOrTail(id.to_string()));
        }
        for v in head.iter().chain(tail.iter()) {
            if !self.node_index.contains_key(v) {
                return Err(Error::UnknownVertex {
                    edge: id.to_string(),
                    vertex: v.to_string(),
                });
            }
        }
        if let Some(v) = head.intersection(&tail).next() {
            return Err(Error::HeadTailOverlap {
                edge: id.to_string(),
                vertex: v.to_string(),
            });
        }
        self.edge_index.insert(id.clone(), self.edges.len());
        self.edges.push(HyperEdge {
            id,
            head,
            tail,
            weight,
        });
        Ok(self)
    }

    pub fn build(self) -> Hypergraph {
        let mut steps = vec![Vec::new(); self.nodes.len()];
        for (e, edge) in self.edges.iter().enumerate() {
            for h in &edge.head {
                let from = self.node_index[h];
                for t in &edge.tail {
                    steps[from].push((e, self.node_index[t]));
                }
            }
        }
        for out in &mut steps {
            out.sort_by(|a, b| {
                (&self.edges[a.0].id, &self.nodes[a.1]).cmp(&(&self.edges[b.0].id, &self.nodes[b.1]))
            });
        }
        Hypergraph {
            nodes: self.nodes,
            node_index: self.node_index,
            edges: self.edges,
            edge_index: self.edge_index,
            steps,
        }
    }
}

/// Builds a hypergraph from node labels and `(id, head, tail, weight)` tuples.
pub fn build_hypergraph<N, E, H, T>(nodes: N, edges: E) -> Result<Hypergraph>
where
    N: IntoIterator,
    N::Item: Into<HyperNodeId>,
    E: IntoIterator<Item = (HyperEdgeId, H, T, Weight)>,
    H: IntoIterator,
    H::Item: Into<HyperNodeId>,
    T: IntoIterator,
    T::Item: Into<HyperNodeId>,
{
    let mut builder = HypergraphBuilder::new();
    for n in nodes {
        builder.add_node(n)?;
    }
    for (id, head, tail, weight) in edges {
        builder.add_edge(id, head, tail, weight)?;
    }
    Ok(builder.build())
}

/// Which repeats an enumeration admits.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum PathPolicy {
    /// No hypernode repeats.
    #[default]
    ElementaryOnly,
    /// No hyperedge repeats; nodes may recur.
    SimpleOnly,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct HyperpathClass {
    pub elementary: bool,
    pub simple: bool,
    pub has_hloop: bool,
}

/// Alternating node / hyperedge sequence with at least one hyperedge.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Hyperpath {
    nodes: Vec<HyperNodeId>,
    edges: Vec<HyperEdgeId>,
}

impl Hyperpath {
    pub fn new(nodes: Vec<HyperNodeId>, edges: Vec<HyperEdgeId>) -> Result<Self> {
        if edges.is_empty() {
            return Err(Error::MalformedHyperpath("needs at least one hyperedge".into()));
        }
        if nodes.len() != edges.len() + 1 {
            return Err(Error::MalformedHyperpath(format!(
                "{} nodes cannot alternate with {} hyperedges",
                nodes.len(),
                edges.len()
            )));
        }
        Ok(Hyperpath { nodes, edges })
    }

    /// From a flat `node, edge, node, ...` sequence.
    pub fn from_sequence<S: AsRef<str>>(items: &[S]) -> Result<Self> {
        if items.len() < 3 || items.len().is_multiple_of(2) {
            return Err(Error::MalformedHyperpath(format!(
                "expected an odd number (>= 3) of alternating items, got {}",
                items.len()
            )));
        }
        let mut nodes = Vec::with_capacity(items.len() / 2 + 1);
        let mut edges = Vec::with_capacity(items.len() / 2);
        for (i, item) in items.iter().enumerate() {
            let label = item.as_ref().trim();
            if label.is_empty() {
                return Err(Error::MalformedHyperpath(format!("empty item at position {i}")));
            }
            if i % 2 == 0 {
                nodes.push(HyperNodeId::from(label));
            } else {
                edges.push(HyperEdgeId::from(label));
            }
        }
        Hyperpath::new(nodes, edges)
    }

    /// Parses `1,E1,3,E2,5`.
    pub fn parse(text: &str) -> Result<Self> {
        let items: Vec<&str> = text.split(',').collect();
        Hyperpath::from_sequence(&items)
    }

    pub fn nodes(&self) -> &[HyperNodeId] {
        &self.nodes
    }

    pub fn edges(&self) -> &[HyperEdgeId] {
        &self.edges
    }

    pub fn source(&self) -> &HyperNodeId {
        &self.nodes[0]
    }

    pub fn target(&self) -> &HyperNodeId {
        self.nodes.last().expect("hyperpath has nodes")
    }

    /// Number of hyperedges.
    pub fn len(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    /// `(from, edge, to)` for every step.
    pub fn steps(&self) -> impl Iterator<Item = (&HyperNodeId, &HyperEdgeId, &HyperNodeId)> {
        self.edges
            .iter()
            .enumerate()
            .map(move |(i, e)| (&self.nodes[i], e, &self.nodes[i + 1]))
    }

    /// Flat alternating sequence of labels.
    pub fn to_sequence(&self) -> Vec<String> {
        let mut out = Vec::with_capacity(self.nodes.len() + self.edges.len());
        for (i, n) in self.nodes.iter().enumerate() {
            out.push(n.to_string());
            if let Some(e) = self.edges.get(i) {
                out.push(e.to_string());
            }
        }
        out
    }

    fn sort_key(&self) -> (&[HyperEdgeId], &[HyperNodeId]) {
        (&self.edges, &self.nodes)
    }
}

impl fmt::Display for Hyperpath {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_sequence().join(", "))
    }
}

impl Hypergraph {
    pub fn nodes(&self) -> &[HyperNodeId] {
        &self.nodes
    }

    pub fn edges(&self) -> &[HyperEdge] {
        &self.edges
    }

    pub fn node_count(&self) -> usize {
        self.nodes.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn contains_node(&self, id: &str) -> bool {
        self.node_index.contains_key(id)
    }

    pub fn edge(&self, id: &str) -> Option<&HyperEdge> {
        self.edge_index.get(id).map(|&i| &self.edges[i])
    }

    fn node_idx(&self, id: &str) -> Result<usize> {
        self.node_index
            .get(id)
            .copied()
            .ok_or_else(|| Error::UnknownId(id.to_string()))
    }

    fn edge_idx(&self, id: &str) -> Result<usize> {
        self.edge_index
            .get(id)
            .copied()
            .ok_or_else(|| Error::UnknownId(id.to_string()))
    }

    /// Every step enters its hyperedge at a head node and exits at a tail node.
    pub fn is_hyperpath(&self, path: &Hyperpath) -> Result<bool> {
        for n in path.nodes() {
            self.node_idx(n.as_str())?;
        }
        for e in path.edges() {
            self.edge_idx(e.as_str())?;
        }
        Ok(path.steps().all(|(from, e, to)| {
            let edge = &self.edges[self.edge_index[e]];
            edge.head.contains(from) && edge.tail.contains(to)
        }))
    }

    pub fn classify_hyperpath(&self, path: &Hyperpath) -> Result<HyperpathClass> {
        if !self.is_hyperpath(path)? {
            return Err(Error::NotAHyperpath);
        }
        let distinct_nodes: HashSet<_> = path.nodes().iter().collect();
        let distinct_edges: HashSet<_> = path.edges().iter().collect();
        let elementary = distinct_nodes.len() == path.nodes().len();
        Ok(HyperpathClass {
            elementary,
            simple: distinct_edges.len() == path.edges().len(),
            has_hloop: !elementary,
        })
    }

    /// All hyperpaths from `source` to `target` admitted by `policy`, ordered
    /// by hyperedge-id sequence and then by node sequence.
    pub fn enumerate_hyperpaths(
        &self,
        source: &str,
        target: &str,
        policy: PathPolicy,
    ) -> Result<Vec<Hyperpath>> {
        let s = self.node_idx(source)?;
        let t = self.node_idx(target)?;
        if s == t {
            return Err(Error::DegenerateQuery(source.to_string()));
        }
        let mut search = Search {
            graph: self,
            target: t,
            policy,
            nodes: vec![s],
            edges: Vec::new(),
            node_seen: vec![false; self.nodes.len()],
            edge_used: vec![false; self.edges.len()],
            found: Vec::new(),
        };
        search.node_seen[s] = true;
        search.extend(s);

        let mut found = search.found;
        found.sort_by(|a, b| a.sort_key().cmp(&b.sort_key()));
        Ok(found)
    }
}

struct Search<'a> {
    graph: &'a Hypergraph,
    target: usize,
    policy: PathPolicy,
    nodes: Vec<usize>,
    edges: Vec<usize>,
    node_seen: Vec<bool>,
    edge_used: Vec<bool>,
    found: Vec<Hyperpath>,
}

impl Search<'_> {
    fn extend(&mut self, at: usize) {
        for &(e, next) in &self.graph.steps[at] {
            match self.policy {
                PathPolicy::ElementaryOnly if self.node_seen[next] => continue,
                PathPolicy::SimpleOnly if self.edge_used[e] => continue,
                _ => {}
            }
            let newly_seen = !self.node_seen[next];
            self.node_seen[next] = true;
            self.edge_used[e] = true;
            self.nodes.push(next);
            self.edges.push(e);

            if next == self.target {
                self.record();
            }
            // An elementary path cannot leave the target and come back to it.
            if next != self.target || self.policy == PathPolicy::SimpleOnly {
                self.extend(next);
            }

            self.nodes.pop();
            self.edges.pop();
            self.edge_used[e] = false;
            if newly_seen {
                self.node_seen[next] = false;
            }
        }
    }

    fn record(&mut self) {
        let g = self.graph;
        self.found.push(Hyperpath {
            nodes: self.nodes.iter().map(|&i| g.nodes[i].clone()).collect(),
            edges: self.edges.iter().map(|&i| g.edges[i].id.clone()).collect(),
        });
    }
}

/// Set equality on nodes and hyperedges; insertion order is ignored.
impl PartialEq for Hypergraph {
    fn eq(&self, other: &Self) -> bool {
        if self.nodes.len() != other.nodes.len() || self.edges.len() != other.edges.len() {
            return false;
        }
        self.nodes.iter().all(|n| other.node_index.contains_key(n))
            && self.edges.iter().all(|e| other.edge(e.id.as_str()) == Some(e))
    }
}

impl Eq for Hypergraph {}
