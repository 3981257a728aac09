//! The lower layer: a directed graph with nonnegative edge weights.

use std::cmp::Reverse;
use std::collections::{BinaryHeap, HashMap};

use crate::error::{Error, Result};
use crate::ids::GraphNodeId;
use crate::weight::Weight;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GraphEdge {
    pub src: GraphNodeId,
    pub dst: GraphNodeId,
    pub weight: Weight,
}

/// A walk through the graph together with the weight of the edges it uses.
///
/// Where parallel edges join two consecutive nodes the cheapest one is taken.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GPath {
    pub nodes: Vec<GraphNodeId>,
    pub total_weight: Weight,
}

impl GPath {
    pub fn hops(&self) -> usize {
        self.nodes.len().saturating_sub(1)
    }
}

#[derive(Debug, Clone)]
pub struct Graph {
    nodes: Vec<GraphNodeId>,
    node_index: HashMap<GraphNodeId, usize>,
    edges: Vec<GraphEdge>,
    /// Cheapest edge per (src, dst), successors sorted by label.
    out: Vec<Vec<(usize, Weight)>>,
    /// Same, reversed.
    inc: Vec<Vec<(usize, Weight)>>,
}

#[derive(Debug, Default)]
pub struct GraphBuilder {
    nodes: Vec<GraphNodeId>,
    node_index: HashMap<GraphNodeId, usize>,
    edges: Vec<GraphEdge>,
}

impl GraphBuilder {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn add_node(&mut self, label: impl Into<GraphNodeId>) -> Result<&mut Self> {
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

    pub fn add_edge(
        &mut self,
        src: impl Into<GraphNodeId>,
        dst: impl Into<GraphNodeId>,
        weight: Weight,
    ) -> Result<&mut Self> {
        let (src, dst) = (src.into(), dst.into());
        for end in [&src, &dst] {
            if !self.node_index.contains_key(end) {
                return Err(Error::UnknownEndpoint {
                    src: src.to_string(),
                    dst: dst.to_string(),
                    missing: end.to_string(),
                });
            }
        }
        self.edges.push(GraphEdge { src, dst, weight });
        Ok(self)
    }

    pub fn build(self) -> Graph {
        let n = self.nodes.len();
        let mut cheapest: HashMap<(usize, usize), Weight> = HashMap::new();
        for e in &self.edges {
            let key = (self.node_index[&e.src], self.node_index[&e.dst]);
            cheapest
                .entry(key)
                .and_modify(|w| *w = (*w).min(e.weight))
                .or_insert(e.weight);
        }
        let mut out = vec![Vec::new(); n];
        let mut inc = vec![Vec::new(); n];
        for (&(s, d), &w) in &cheapest {
            out[s].push((d, w));
            inc[d].push((s, w));
        }
        for list in out.iter_mut().chain(inc.iter_mut()) {
            list.sort_by(|a, b| self.nodes[a.0].cmp(&self.nodes[b.0]));
        }
        Graph {
            nodes: self.nodes,
            node_index: self.node_index,
            edges: self.edges,
            out,
            inc,
        }
    }
}

/// Builds a graph from node labels and `(src, dst, weight)` triples.
pub fn build_graph<N, S, D>(nodes: N, edges: impl IntoIterator<Item = (S, D, Weight)>) -> Result<Graph>
where
    N: IntoIterator,
    N::Item: Into<GraphNodeId>,
    S: Into<GraphNodeId>,
    D: Into<GraphNodeId>,
{
    let mut builder = GraphBuilder::new();
    for n in nodes {
        builder.add_node(n)?;
    }
    for (s, d, w) in edges {
        builder.add_edge(s, d, w)?;
    }
    Ok(builder.build())
}

impl Graph {
    pub fn nodes(&self) -> &[GraphNodeId] {
        &self.nodes
    }

    pub fn edges(&self) -> &[GraphEdge] {
        &self.edges
    }

    pub fn node_count(&self) -> usize {
        self.nodes.len()
    }

    pub fn contains_node(&self, id: &str) -> bool {
        self.node_index.contains_key(id)
    }

    fn idx(&self, id: &str) -> Result<usize> {
        self.node_index
            .get(id)
            .copied()
            .ok_or_else(|| Error::UnknownId(id.to_string()))
    }

    /// Weight of the cheapest edge `src -> dst`, if any.
    pub fn edge_weight(&self, src: &str, dst: &str) -> Option<Weight> {
        let (s, d) = (self.idx(src).ok()?, self.idx(dst).ok()?);
        self.out[s].iter().find(|&&(to, _)| to == d).map(|&(_, w)| w)
    }

    /// Sum of the cheapest edge weights along `nodes`.
    pub fn walk_weight<S: AsRef<str>>(&self, nodes: &[S]) -> Result<Weight> {
        for n in nodes {
            self.idx(n.as_ref())?;
        }
        nodes
            .windows(2)
            .map(|pair| {
                let (a, b) = (pair[0].as_ref(), pair[1].as_ref());
                self.edge_weight(a, b)
                    .ok_or_else(|| Error::InvalidTrace(format!("no edge {a}->{b} in G")))
            })
            .sum::<Result<Weight>>()
    }

    /// Directed reachability; every node reaches itself.
    pub fn path_exists(&self, from: &str, to: &str) -> Result<bool> {
        let (s, t) = (self.idx(from)?, self.idx(to)?);
        let mut seen = vec![false; self.nodes.len()];
        let mut stack = vec![s];
        seen[s] = true;
        while let Some(x) = stack.pop() {
            if x == t {
                return Ok(true);
            }
            for &(y, _) in &self.out[x] {
                if !seen[y] {
                    seen[y] = true;
                    stack.push(y);
                }
            }
        }
        Ok(false)
    }

    /// Minimum-weight path. Ties go to fewer hops, then to the
    /// lexicographically smallest node sequence.
    pub fn shortest_path(&self, from: &str, to: &str) -> Result<Option<GPath>> {
        let (s, t) = (self.idx(from)?, self.idx(to)?);
        // (weight, hops) to reach `t`, computed backwards.
        let mut dist: Vec<Option<(Weight, usize)>> = vec![None; self.nodes.len()];
        let mut heap = BinaryHeap::new();
        dist[t] = Some((Weight::ZERO, 0));
        heap.push(Reverse((Weight::ZERO, 0usize, t)));
        while let Some(Reverse((w, hops, x))) = heap.pop() {
            if dist[x] != Some((w, hops)) {
                continue;
            }
            if x == s {
                break;
            }
            for &(pred, ew) in &self.inc[x] {
                let cand = (w + ew, hops + 1);
                if dist[pred].is_none_or(|d| cand < d) {
                    dist[pred] = Some(cand);
                    heap.push(Reverse((cand.0, cand.1, pred)));
                }
            }
        }
        let Some(total) = dist[s] else {
            return Ok(None);
        };

        // Following tight edges strictly lowers the hop count, so this ends at `t`.
        let mut nodes = vec![self.nodes[s].clone()];
        let mut at = s;
        while at != t {
            let here = dist[at].expect("on a shortest path");
            let &(next, _) = self.out[at]
                .iter()
                .find(|&&(y, ew)| dist[y].is_some_and(|(dw, dh)| (dw + ew, dh + 1) == here))
                .expect("tight successor exists");
            nodes.push(self.nodes[next].clone());
            at = next;
        }
        Ok(Some(GPath {
            nodes,
            total_weight: total.0,
        }))
    }

    /// All node-simple paths with at most `max_hops` edges, in
    /// lexicographic order of their node sequences.
    pub fn enumerate_paths(&self, from: &str, to: &str, max_hops: usize) -> Result<Vec<GPath>> {
        let (s, t) = (self.idx(from)?, self.idx(to)?);
        let mut found = Vec::new();
        let mut on_path = vec![false; self.nodes.len()];
        let mut path = vec![s];
        on_path[s] = true;
        self.simple_paths(t, max_hops, Weight::ZERO, &mut path, &mut on_path, &mut found);
        Ok(found)
    }

    fn simple_paths(
        &self,
        target: usize,
        max_hops: usize,
        weight: Weight,
        path: &mut Vec<usize>,
        on_path: &mut [bool],
        found: &mut Vec<GPath>,
    ) {
        let at = *path.last().expect("nonempty");
        if at == target {
            found.push(GPath {
                nodes: path.iter().map(|&i| self.nodes[i].clone()).collect(),
                total_weight: weight,
            });
            return;
        }
        if path.len() > max_hops {
            return;
        }
        for &(next, w) in &self.out[at] {
            if on_path[next] {
                continue;
            }
            on_path[next] = true;
            path.push(next);
            self.simple_paths(target, max_hops, weight + w, path, on_path, found);
            path.pop();
            on_path[next] = false;
        }
    }
}

/// Same nodes and the same multiset of edges.
impl PartialEq for Graph {
    fn eq(&self, other: &Self) -> bool {
        if self.nodes.len() != other.nodes.len() || self.edges.len() != other.edges.len() {
            return false;
        }
        let key = |e: &GraphEdge| (e.src.clone(), e.dst.clone(), e.weight);
        let mut a: Vec<_> = self.edges.iter().map(key).collect();
        let mut b: Vec<_> = other.edges.iter().map(key).collect();
        a.sort();
        b.sort();
        a == b && self.nodes.iter().all(|n| other.node_index.contains_key(n))
    }
}

impl Eq for Graph {}
