//! JSON interchange and DOT rendering.

mod dot;
mod json;

pub use dot::export_dot;
pub use json::{
    canonicalize, load, save, weight_number, ConnectorDoc, ConnectorsSection, GraphEdgeDoc, GraphSection,
    Hg2Document, HyperEdgeDoc, HypergraphSection, LoadError,
};
