//! Cost of a route and one of its traces on a weighted instance.
//!
//! The total splits into three exact parts: the hyperedge weights along the
//! route, the graph edge weights along the trace, and the weights of the
//! connectors that realize the route's anchored pairs. Connectors of
//! auxiliary graph nodes never contribute.

use std::fmt;

use crate::error::Result;
use crate::hg2::{Hg2, Hg2Route, Pair, TracedGPath};
use crate::weight::Weight;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CostBreakdown {
    pub route_cost: Weight,
    pub gpath_cost: Weight,
    pub connector_cost: Weight,
    pub total: Weight,
}

impl CostBreakdown {
    pub fn new(route_cost: Weight, gpath_cost: Weight, connector_cost: Weight) -> Self {
        CostBreakdown {
            route_cost,
            gpath_cost,
            connector_cost,
            total: route_cost + gpath_cost + connector_cost,
        }
    }
}

impl fmt::Display for CostBreakdown {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "route {} + gpath {} + connectors {} = {}",
            self.route_cost, self.gpath_cost, self.connector_cost, self.total
        )
    }
}

/// A route, one trace of it, and what that choice costs.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CostedPath {
    pub route: Hg2Route,
    pub trace: TracedGPath,
    pub breakdown: CostBreakdown,
}

impl Hg2 {
    /// Sum of hyperedge weights, once per occurrence.
    pub fn route_cost(&self, route: &Hg2Route) -> Result<Weight> {
        self.require_valid_route(route)?;
        Ok(route
            .edge_pairs()
            .iter()
            .map(|p| self.hypergraph().edge(p.h_edge.as_str()).expect("validated").weight())
            .sum())
    }

    /// Sum of the graph edge weights along the trace.
    pub fn gpath_cost(&self, trace: &TracedGPath) -> Result<Weight> {
        self.graph().walk_weight(&trace.nodes)
    }

    /// Weights of the connectors behind the route's anchored pairs.
    ///
    /// Depends on the route only; the trace is checked for consistency.
    pub fn connector_cost(&self, route: &Hg2Route, trace: &TracedGPath) -> Result<Weight> {
        self.require_valid_route(route)?;
        self.check_trace(route, trace)?;
        Ok(route
            .pairs()
            .filter_map(|pair| match pair {
                Pair::Node(p) => p
                    .anchor
                    .as_ref()
                    .and(self.node_connector(p.h_node.as_str()))
                    .map(|c| c.weight),
                Pair::Edge(p) => p
                    .anchor
                    .as_ref()
                    .and(self.edge_connector(p.h_edge.as_str()))
                    .map(|c| c.weight),
            })
            .sum())
    }

    pub fn total_cost(&self, route: &Hg2Route, trace: &TracedGPath) -> Result<CostBreakdown> {
        let connector_cost = self.connector_cost(route, trace)?;
        Ok(CostBreakdown::new(
            self.route_cost(route)?,
            self.gpath_cost(trace)?,
            connector_cost,
        ))
    }

    /// Cheapest (route, trace) choice from `source` to `target`.
    ///
    /// For a fixed route the connector cost is fixed and the graph cost is
    /// additive over anchor-to-anchor segments, so the best trace joins the
    /// per-segment shortest paths. Ties go to the earlier route.
    pub fn min_cost_path(&self, source: &str, target: &str) -> Result<Option<CostedPath>> {
        let mut best: Option<CostedPath> = None;
        for route in self.enumerate_routes(source, target)? {
            let trace = self
                .shortest_trace(&route)?
                .expect("valid routes have reachable anchors");
            let breakdown = self.total_cost(&route, &trace)?;
            if best.as_ref().is_none_or(|b| breakdown.total < b.breakdown.total) {
                best = Some(CostedPath {
                    route,
                    trace,
                    breakdown,
                });
            }
        }
        Ok(best)
    }
}
