//! Ready-made instances.

use crate::hg2::Hg2;
use crate::io::{Hg2Document, LoadError};

/// The seven-hypernode, six-graph-node example with every weight set to 1.
///
/// Hyperedges: E1 {1,2}->{3}, E2 {3,4}->{5,6}, E3 {4,5}->{7}, E4 {5,6}->{7}.
/// Graph edges: a->c, c->b, b->d, d->e, b->f.
/// Node connectors 1-a, 6-b, 5-d; edge connectors E1-c, E3-e, E4-f.
pub const FIG1_JSON: &str = include_str!("../data/fig1.json");

pub fn fig1_document() -> Hg2Document {
    Hg2Document::parse(FIG1_JSON).expect("bundled fixture parses")
}

pub fn fig1() -> Hg2 {
    fig1_document().to_hg2().expect("bundled fixture is valid")
}

/// Builds a document after letting `edit` adjust the unit-weight fixture.
pub fn fig1_with(edit: impl FnOnce(&mut Hg2Document)) -> Result<Hg2, LoadError> {
    let mut doc = fig1_document();
    edit(&mut doc);
    doc.to_hg2()
}
