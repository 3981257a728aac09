//! Hypergraph-Graph (HG(2)) instances.
//!
//! An instance couples a directed hypergraph (upper layer) with a directed
//! weighted graph (lower layer) through weighted connectors that run from
//! hypernodes and hyperedges down to graph nodes. The crate answers:
//!
//! - which hyperpaths lead from one hypernode to another ([`Hypergraph::enumerate_hyperpaths`]),
//! - which of them are realizable in the graph layer ([`Hg2::enumerate_routes`]),
//! - how each route is traced through the graph ([`Hg2::trace_gpaths`]),
//! - and which (route, trace) choice is cheapest ([`Hg2::min_cost_path`]).
//!
//! ```
//! use hg2_core::fixtures;
//!
//! let hg = fixtures::fig1();
//! let best = hg.min_cost_path("1", "7").unwrap().unwrap();
//! assert_eq!(best.route.to_string(), "1(a), E1(c), 3(), E2(), 6(b), E4(f), 7()");
//! assert_eq!(best.breakdown.total.to_string(), "10");
//! ```

pub mod cost;
pub mod error;
pub mod fixtures;
pub mod generate;
pub mod graph;
pub mod hg2;
pub mod hyper;
pub mod ids;
pub mod io;
pub mod weight;

pub use cost::{CostBreakdown, CostedPath};
pub use error::{Error, Result};
pub use graph::{build_graph, GPath, Graph, GraphBuilder, GraphEdge};
pub use hg2::{
    build_hg2, AuxiliaryCase, ConnectorSet, ConnectorSource, EdgeConnector, EdgePair, Hg2, Hg2Route,
    InvalidReason, NodeConnector, NodePair, NodeRole, Pair, RouteValidity, TracedGPath,
};
pub use hyper::{build_hypergraph, HyperEdge, Hypergraph, HypergraphBuilder, Hyperpath, HyperpathClass, PathPolicy};
pub use ids::{GraphNodeId, HyperEdgeId, HyperNodeId};
pub use io::{export_dot, load, save, Hg2Document, LoadError};
pub use weight::{Weight, WeightError};
