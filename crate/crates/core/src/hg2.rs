//! The layered structure: a hypergraph, a graph, and the weighted connectors
//! through which hypernodes and hyperedges depend on graph nodes.
//!
//! A route maps every node and hyperedge of a hyperpath to its pair, i.e. the
//! element together with the graph node it is connected to (if any). The
//! route is valid when its hyperpath is valid and each consecutive pair of
//! present anchors is joined by a directed path in the graph. Unconnected
//! pairs impose no constraint.

use std::collections::{BTreeMap, HashMap, HashSet};
use std::fmt;

use crate::error::{Error, Result};
use crate::graph::{GPath, Graph};
use crate::hyper::{Hypergraph, Hyperpath, PathPolicy};
use crate::ids::{GraphNodeId, HyperEdgeId, HyperNodeId};
use crate::weight::Weight;

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct NodeConnector {
    pub h_node: HyperNodeId,
    pub g_node: GraphNodeId,
    pub weight: Weight,
}

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct EdgeConnector {
    pub h_edge: HyperEdgeId,
    pub g_node: GraphNodeId,
    pub weight: Weight,
}

/// Unvalidated connector lists; checked when the [`Hg2`] is built.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct ConnectorSet {
    pub node: Vec<NodeConnector>,
    pub edge: Vec<EdgeConnector>,
}

impl ConnectorSet {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn node(
        mut self,
        h_node: impl Into<HyperNodeId>,
        g_node: impl Into<GraphNodeId>,
        weight: Weight,
    ) -> Self {
        self.node.push(NodeConnector {
            h_node: h_node.into(),
            g_node: g_node.into(),
            weight,
        });
        self
    }

    pub fn edge(
        mut self,
        h_edge: impl Into<HyperEdgeId>,
        g_node: impl Into<GraphNodeId>,
        weight: Weight,
    ) -> Self {
        self.edge.push(EdgeConnector {
            h_edge: h_edge.into(),
            g_node: g_node.into(),
            weight,
        });
        self
    }

    pub fn len(&self) -> usize {
        self.node.len() + self.edge.len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }
}

/// The hypergraph-side end of a connector.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum ConnectorSource {
    Node(HyperNodeId),
    Edge(HyperEdgeId),
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct NodePair {
    pub h_node: HyperNodeId,
    pub anchor: Option<GraphNodeId>,
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct EdgePair {
    pub h_edge: HyperEdgeId,
    pub anchor: Option<GraphNodeId>,
}

fn write_pair(f: &mut fmt::Formatter<'_>, label: &str, anchor: &Option<GraphNodeId>) -> fmt::Result {
    match anchor {
        Some(g) => write!(f, "{label}({g})"),
        None => write!(f, "{label}()"),
    }
}

impl fmt::Display for NodePair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_pair(f, self.h_node.as_str(), &self.anchor)
    }
}

impl fmt::Display for EdgePair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_pair(f, self.h_edge.as_str(), &self.anchor)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Pair<'a> {
    Node(&'a NodePair),
    Edge(&'a EdgePair),
}

impl Pair<'_> {
    pub fn anchor(&self) -> Option<&GraphNodeId> {
        match self {
            Pair::Node(p) => p.anchor.as_ref(),
            Pair::Edge(p) => p.anchor.as_ref(),
        }
    }
}

impl fmt::Display for Pair<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Pair::Node(p) => p.fmt(f),
            Pair::Edge(p) => p.fmt(f),
        }
    }
}

/// Alternating node pairs and edge pairs, `NP, EP, NP, ..., EP, NP`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Hg2Route {
    nodes: Vec<NodePair>,
    edges: Vec<EdgePair>,
}

impl Hg2Route {
    pub fn new(nodes: Vec<NodePair>, edges: Vec<EdgePair>) -> Result<Self> {
        if edges.is_empty() || nodes.len() != edges.len() + 1 {
            return Err(Error::MalformedHyperpath(format!(
                "{} node pairs cannot alternate with {} edge pairs",
                nodes.len(),
                edges.len()
            )));
        }
        Ok(Hg2Route { nodes, edges })
    }

    pub fn node_pairs(&self) -> &[NodePair] {
        &self.nodes
    }

    pub fn edge_pairs(&self) -> &[EdgePair] {
        &self.edges
    }

    pub fn source(&self) -> &HyperNodeId {
        &self.nodes[0].h_node
    }

    pub fn target(&self) -> &HyperNodeId {
        &self.nodes[self.nodes.len() - 1].h_node
    }

    /// Pairs in sequence order.
    pub fn pairs(&self) -> impl Iterator<Item = Pair<'_>> {
        let edges = self.edges.iter().map(Pair::Edge).map(Some).chain(std::iter::once(None));
        self.nodes
            .iter()
            .map(Pair::Node)
            .zip(edges)
            .flat_map(|(n, e)| std::iter::once(n).chain(e))
    }

    /// Present anchors in sequence order.
    pub fn anchors(&self) -> Vec<GraphNodeId> {
        self.pairs().filter_map(|p| p.anchor().cloned()).collect()
    }

    /// The underlying hypernode / hyperedge sequence.
    pub fn hyperpath(&self) -> Hyperpath {
        Hyperpath::new(
            self.nodes.iter().map(|p| p.h_node.clone()).collect(),
            self.edges.iter().map(|p| p.h_edge.clone()).collect(),
        )
        .expect("route alternates")
    }

    /// Pair notation strings, e.g. `["1(a)", "E1(c)", "3()"]`.
    pub fn pair_labels(&self) -> Vec<String> {
        self.pairs().map(|p| p.to_string()).collect()
    }
}

impl fmt::Display for Hg2Route {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.pair_labels().join(", "))
    }
}

/// Why a route fails.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum InvalidReason {
    UnknownId(String),
    NotAHyperpath,
    /// A pair's anchor disagrees with the connector set.
    PairMismatch {
        element: String,
        expected: Option<GraphNodeId>,
        found: Option<GraphNodeId>,
    },
    NoGraphPath {
        from: GraphNodeId,
        to: GraphNodeId,
    },
}

impl fmt::Display for InvalidReason {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let show = |a: &Option<GraphNodeId>| match a {
            Some(g) => g.to_string(),
            None => "none".to_string(),
        };
        match self {
            InvalidReason::UnknownId(id) => write!(f, "unknown id {id}"),
            InvalidReason::NotAHyperpath => f.write_str("not a hyperpath"),
            InvalidReason::PairMismatch {
                element,
                expected,
                found,
            } => write!(
                f,
                "pair {element} is anchored at {} but its connector targets {}",
                show(found),
                show(expected)
            ),
            InvalidReason::NoGraphPath { from, to } => write!(f, "no path {from}→{to} in G"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum RouteValidity {
    Valid,
    Invalid(InvalidReason),
}

impl RouteValidity {
    pub fn is_valid(&self) -> bool {
        matches!(self, RouteValidity::Valid)
    }
}

impl fmt::Display for RouteValidity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RouteValidity::Valid => f.write_str("Valid"),
            RouteValidity::Invalid(reason) => write!(f, "Invalid: {reason}"),
        }
    }
}

/// A full graph walk following a route, with the positions of the route's
/// anchors inside it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TracedGPath {
    pub nodes: Vec<GraphNodeId>,
    pub weight: Weight,
    pub anchor_indices: Vec<usize>,
}

impl TracedGPath {
    /// A repeated graph node.
    pub fn has_gloop(&self) -> bool {
        let mut seen = HashSet::new();
        !self.nodes.iter().all(|n| seen.insert(n))
    }

    /// `None` for the empty trace of a route without anchors.
    pub fn as_gpath(&self) -> Option<GPath> {
        (!self.nodes.is_empty()).then(|| GPath {
            nodes: self.nodes.clone(),
            total_weight: self.weight,
        })
    }

    /// Graph nodes of the trace that anchor none of the route's pairs.
    pub fn auxiliary_nodes(&self) -> Vec<&GraphNodeId> {
        let anchors: HashSet<&GraphNodeId> =
            self.anchor_indices.iter().map(|&i| &self.nodes[i]).collect();
        self.nodes.iter().filter(|n| !anchors.contains(n)).collect()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum AuxiliaryCase {
    /// Target of no connector at all.
    Unconnected,
    /// Connected, but only from elements outside the route.
    OutsideRoute,
    /// Connected from an element that occurs in the route.
    WithinRoute,
}

impl AuxiliaryCase {
    pub fn number(self) -> u8 {
        match self {
            AuxiliaryCase::Unconnected => 1,
            AuxiliaryCase::OutsideRoute => 2,
            AuxiliaryCase::WithinRoute => 3,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum NodeRole {
    Participating,
    Auxiliary(AuxiliaryCase),
}

impl fmt::Display for NodeRole {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            NodeRole::Participating => f.write_str("participating"),
            NodeRole::Auxiliary(case) => write!(f, "auxiliary (case {})", case.number()),
        }
    }
}

/// Hypergraph, graph and connectors, validated together. Immutable.
#[derive(Debug, Clone)]
pub struct Hg2 {
    hypergraph: Hypergraph,
    graph: Graph,
    connectors: ConnectorSet,
    node_anchor: HashMap<HyperNodeId, usize>,
    edge_anchor: HashMap<HyperEdgeId, usize>,
    /// Sources of all connectors into each graph node.
    incoming: HashMap<GraphNodeId, Vec<ConnectorSource>>,
}

pub fn build_hg2(hypergraph: Hypergraph, graph: Graph, connectors: ConnectorSet) -> Result<Hg2> {
    Hg2::new(hypergraph, graph, connectors)
}

impl Hg2 {
    pub fn new(hypergraph: Hypergraph, graph: Graph, connectors: ConnectorSet) -> Result<Self> {
        let mut node_anchor = HashMap::new();
        let mut edge_anchor = HashMap::new();
        let mut incoming: HashMap<GraphNodeId, Vec<ConnectorSource>> = HashMap::new();
        for (i, c) in connectors.node.iter().enumerate() {
            if !hypergraph.contains_node(c.h_node.as_str()) || !graph.contains_node(c.g_node.as_str()) {
                return Err(Error::DanglingConnector {
                    from: c.h_node.to_string(),
                    to: c.g_node.to_string(),
                });
            }
            if node_anchor.insert(c.h_node.clone(), i).is_some() {
                return Err(Error::DuplicateSourceConnector(c.h_node.to_string()));
            }
            incoming
                .entry(c.g_node.clone())
                .or_default()
                .push(ConnectorSource::Node(c.h_node.clone()));
        }
        for (i, c) in connectors.edge.iter().enumerate() {
            if hypergraph.edge(c.h_edge.as_str()).is_none() || !graph.contains_node(c.g_node.as_str()) {
                return Err(Error::DanglingConnector {
                    from: c.h_edge.to_string(),
                    to: c.g_node.to_string(),
                });
            }
            if edge_anchor.insert(c.h_edge.clone(), i).is_some() {
                return Err(Error::DuplicateSourceConnector(c.h_edge.to_string()));
            }
            incoming
                .entry(c.g_node.clone())
                .or_default()
                .push(ConnectorSource::Edge(c.h_edge.clone()));
        }
        Ok(Hg2 {
            hypergraph,
            graph,
            connectors,
            node_anchor,
            edge_anchor,
            incoming,
        })
    }

    pub fn hypergraph(&self) -> &Hypergraph {
        &self.hypergraph
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn connectors(&self) -> &ConnectorSet {
        &self.connectors
    }

    pub fn node_connector(&self, h_node: &str) -> Option<&NodeConnector> {
        self.node_anchor.get(h_node).map(|&i| &self.connectors.node[i])
    }

    pub fn edge_connector(&self, h_edge: &str) -> Option<&EdgeConnector> {
        self.edge_anchor.get(h_edge).map(|&i| &self.connectors.edge[i])
    }

    /// Hypergraph-side sources of every connector into `g_node`.
    pub fn connectors_into(&self, g_node: &str) -> &[ConnectorSource] {
        self.incoming.get(g_node).map_or(&[], Vec::as_slice)
    }

    pub fn node_pair(&self, h_node: &str) -> Result<NodePair> {
        if !self.hypergraph.contains_node(h_node) {
            return Err(Error::UnknownId(h_node.to_string()));
        }
        Ok(NodePair {
            h_node: h_node.into(),
            anchor: self.node_connector(h_node).map(|c| c.g_node.clone()),
        })
    }

    pub fn edge_pair(&self, h_edge: &str) -> Result<EdgePair> {
        if self.hypergraph.edge(h_edge).is_none() {
            return Err(Error::UnknownId(h_edge.to_string()));
        }
        Ok(EdgePair {
            h_edge: h_edge.into(),
            anchor: self.edge_connector(h_edge).map(|c| c.g_node.clone()),
        })
    }

    /// Maps every element of a hyperpath to its pair.
    pub fn route_of(&self, path: &Hyperpath) -> Result<Hg2Route> {
        if !self.hypergraph.is_hyperpath(path)? {
            return Err(Error::NotAHyperpath);
        }
        let nodes = path
            .nodes()
            .iter()
            .map(|n| self.node_pair(n.as_str()))
            .collect::<Result<_>>()?;
        let edges = path
            .edges()
            .iter()
            .map(|e| self.edge_pair(e.as_str()))
            .collect::<Result<_>>()?;
        Hg2Route::new(nodes, edges)
    }

    pub fn validate_route(&self, route: &Hg2Route) -> RouteValidity {
        use RouteValidity::Invalid;

        let path = route.hyperpath();
        match self.hypergraph.is_hyperpath(&path) {
            Err(Error::UnknownId(id)) => return Invalid(InvalidReason::UnknownId(id)),
            Err(_) | Ok(false) => return Invalid(InvalidReason::NotAHyperpath),
            Ok(true) => {}
        }
        for pair in route.pairs() {
            let (element, expected, found) = match pair {
                Pair::Node(p) => (
                    p.h_node.to_string(),
                    self.node_connector(p.h_node.as_str()).map(|c| c.g_node.clone()),
                    p.anchor.clone(),
                ),
                Pair::Edge(p) => (
                    p.h_edge.to_string(),
                    self.edge_connector(p.h_edge.as_str()).map(|c| c.g_node.clone()),
                    p.anchor.clone(),
                ),
            };
            if expected != found {
                return Invalid(InvalidReason::PairMismatch {
                    element,
                    expected,
                    found,
                });
            }
        }
        for pair in route.anchors().windows(2) {
            let reachable = self
                .graph
                .path_exists(pair[0].as_str(), pair[1].as_str())
                .expect("anchors come from validated connectors");
            if !reachable {
                return Invalid(InvalidReason::NoGraphPath {
                    from: pair[0].clone(),
                    to: pair[1].clone(),
                });
            }
        }
        RouteValidity::Valid
    }

    /// Valid routes over the elementary hyperpaths from `source` to `target`.
    pub fn enumerate_routes(&self, source: &str, target: &str) -> Result<Vec<Hg2Route>> {
        let paths = self
            .hypergraph
            .enumerate_hyperpaths(source, target, PathPolicy::ElementaryOnly)?;
        let mut routes = Vec::new();
        for path in &paths {
            let route = self.route_of(path)?;
            if self.validate_route(&route).is_valid() {
                routes.push(route);
            }
        }
        Ok(routes)
    }

    pub(crate) fn require_valid_route(&self, route: &Hg2Route) -> Result<()> {
        match self.validate_route(route) {
            RouteValidity::Valid => Ok(()),
            RouteValidity::Invalid(reason) => Err(Error::InvalidRoute(reason.to_string())),
        }
    }

    /// Every concatenation of node-simple segment paths (at most `max_hops`
    /// edges each) joining consecutive anchors.
    pub fn trace_gpaths(&self, route: &Hg2Route, max_hops: usize) -> Result<Vec<TracedGPath>> {
        self.require_valid_route(route)?;
        let anchors = route.anchors();
        if anchors.len() < 2 {
            return Ok(vec![TracedGPath {
                anchor_indices: (0..anchors.len()).collect(),
                nodes: anchors,
                weight: Weight::ZERO,
            }]);
        }
        let segments = anchors
            .windows(2)
            .map(|w| self.graph.enumerate_paths(w[0].as_str(), w[1].as_str(), max_hops))
            .collect::<Result<Vec<_>>>()?;
        if segments.iter().any(Vec::is_empty) {
            return Ok(Vec::new());
        }

        let mut traces = Vec::new();
        let mut choice = vec![0usize; segments.len()];
        loop {
            traces.push(join_segments(segments.iter().zip(&choice).map(|(s, &i)| &s[i])));
            // odometer, last segment fastest
            let mut k = segments.len();
            loop {
                if k == 0 {
                    return Ok(traces);
                }
                k -= 1;
                choice[k] += 1;
                if choice[k] < segments[k].len() {
                    break;
                }
                choice[k] = 0;
            }
        }
    }

    /// Concatenation of per-segment shortest paths; `None` if some segment
    /// is unreachable.
    pub fn shortest_trace(&self, route: &Hg2Route) -> Result<Option<TracedGPath>> {
        self.require_valid_route(route)?;
        let anchors = route.anchors();
        if anchors.len() < 2 {
            return Ok(Some(TracedGPath {
                anchor_indices: (0..anchors.len()).collect(),
                nodes: anchors,
                weight: Weight::ZERO,
            }));
        }
        let mut segments = Vec::with_capacity(anchors.len() - 1);
        for w in anchors.windows(2) {
            match self.graph.shortest_path(w[0].as_str(), w[1].as_str())? {
                Some(p) => segments.push(p),
                None => return Ok(None),
            }
        }
        Ok(Some(join_segments(segments.iter())))
    }

    /// Builds a trace of `route` from an explicit walk, locating the
    /// route's anchors in order along it.
    pub fn trace_from_nodes<S: AsRef<str>>(&self, route: &Hg2Route, walk: &[S]) -> Result<TracedGPath> {
        let nodes: Vec<GraphNodeId> = walk.iter().map(|s| GraphNodeId::from(s.as_ref())).collect();
        let weight = self.graph.walk_weight(walk)?;
        let anchors = route.anchors();
        let mismatch = |msg: String| Err(Error::TraceMismatch(msg));
        if anchors.is_empty() {
            if !nodes.is_empty() {
                return mismatch("route has no anchors, so its only trace is empty".into());
            }
            return Ok(TracedGPath {
                nodes,
                weight,
                anchor_indices: Vec::new(),
            });
        }
        if nodes.first() != anchors.first() || nodes.last() != anchors.last() {
            return mismatch(format!(
                "walk must start at {} and end at {}",
                anchors[0],
                anchors[anchors.len() - 1]
            ));
        }
        if anchors.len() == 1 {
            if nodes.len() != 1 {
                return mismatch("a single-anchor route traces to that anchor alone".into());
            }
            return Ok(TracedGPath {
                nodes,
                weight,
                anchor_indices: vec![0],
            });
        }
        // earliest match for the inner anchors; the outer ones are pinned
        let mut indices = vec![0];
        let mut pos = 0;
        for a in &anchors[1..anchors.len() - 1] {
            match nodes[pos..].iter().position(|n| n == a) {
                Some(off) => {
                    pos += off;
                    indices.push(pos);
                }
                None => return mismatch(format!("anchor {a} missing or out of order")),
            }
        }
        indices.push(nodes.len() - 1);
        Ok(TracedGPath {
            nodes,
            weight,
            anchor_indices: indices,
        })
    }

    /// Checks that `trace` is a walk in the graph whose anchor positions
    /// carry `route`'s anchors in order, first and last at the ends.
    pub fn check_trace(&self, route: &Hg2Route, trace: &TracedGPath) -> Result<()> {
        let anchors = route.anchors();
        let fail = |msg: &str| Err(Error::TraceMismatch(msg.to_string()));
        if trace.anchor_indices.len() != anchors.len() {
            return fail("anchor count differs from the route");
        }
        if anchors.is_empty() {
            return if trace.nodes.is_empty() {
                Ok(())
            } else {
                fail("route has no anchors but trace is nonempty")
            };
        }
        if trace.anchor_indices[0] != 0 || *trace.anchor_indices.last().unwrap() + 1 != trace.nodes.len() {
            return fail("trace must start and end at the route's outer anchors");
        }
        if trace.anchor_indices.windows(2).any(|w| w[0] > w[1]) {
            return fail("anchor positions out of order");
        }
        for (&i, a) in trace.anchor_indices.iter().zip(&anchors) {
            if trace.nodes.get(i) != Some(a) {
                return fail("anchor position holds a different node");
            }
        }
        let weight = self.graph.walk_weight(&trace.nodes)?;
        if weight != trace.weight {
            return Err(Error::InvalidTrace(format!(
                "recorded weight {} differs from edge sum {weight}",
                trace.weight
            )));
        }
        Ok(())
    }

    /// Role of every graph node on `trace` relative to `route`.
    pub fn classify_nodes(
        &self,
        route: &Hg2Route,
        trace: &TracedGPath,
    ) -> Result<BTreeMap<GraphNodeId, NodeRole>> {
        self.check_trace(route, trace)?;
        let anchors = route.anchors();
        let in_route: HashSet<ConnectorSource> = route
            .node_pairs()
            .iter()
            .map(|p| ConnectorSource::Node(p.h_node.clone()))
            .chain(route.edge_pairs().iter().map(|p| ConnectorSource::Edge(p.h_edge.clone())))
            .collect();
        let mut roles = BTreeMap::new();
        for n in &trace.nodes {
            let role = if anchors.contains(n) {
                NodeRole::Participating
            } else {
                let sources = self.connectors_into(n.as_str());
                NodeRole::Auxiliary(if sources.is_empty() {
                    AuxiliaryCase::Unconnected
                } else if sources.iter().any(|s| in_route.contains(s)) {
                    AuxiliaryCase::WithinRoute
                } else {
                    AuxiliaryCase::OutsideRoute
                })
            };
            roles.insert(n.clone(), role);
        }
        Ok(roles)
    }
}

fn join_segments<'a>(segments: impl Iterator<Item = &'a GPath>) -> TracedGPath {
    let mut nodes: Vec<GraphNodeId> = Vec::new();
    let mut anchor_indices = Vec::new();
    let mut weight = Weight::ZERO;
    for seg in segments {
        if nodes.is_empty() {
            nodes.push(seg.nodes[0].clone());
            anchor_indices.push(0);
        }
        nodes.extend(seg.nodes[1..].iter().cloned());
        anchor_indices.push(nodes.len() - 1);
        weight += seg.total_weight;
    }
    TracedGPath {
        nodes,
        weight,
        anchor_indices,
    }
}

/// Structural equality: same hypergraph, graph, and connector sets.
impl PartialEq for Hg2 {
    fn eq(&self, other: &Self) -> bool {
        let mut a = self.connectors.clone();
        let mut b = other.connectors.clone();
        for c in [&mut a, &mut b] {
            c.node.sort();
            c.edge.sort();
        }
        self.hypergraph == other.hypergraph && self.graph == other.graph && a == b
    }
}

impl Eq for Hg2 {}
