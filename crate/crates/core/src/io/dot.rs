use std::fmt::Write;

use crate::hg2::Hg2;

fn quote(s: &str) -> String {
    format!("\"{}\"", s.replace('\\', "\\\\").replace('"', "\\\""))
}

fn hyper_node(label: &str) -> String {
    quote(&format!("h:{label}"))
}

fn hyper_edge(label: &str) -> String {
    quote(&format!("e:{label}"))
}

fn graph_node(label: &str) -> String {
    quote(&format!("g:{label}"))
}

/// Renders the instance as a DOT digraph.
///
/// Hyperedges are star-expanded into box nodes (head nodes point at the box,
/// the box points at tail nodes). Node connectors are dashed arcs, edge
/// connectors bold arcs, both drawn from the hypergraph layer down.
pub fn export_dot(hg: &Hg2) -> String {
    let h = hg.hypergraph();
    let g = hg.graph();
    let mut out = String::from("digraph hg2 {\n");
    if h.node_count() == 0 && g.node_count() == 0 {
        out.push_str("}\n");
        return out;
    }
    out.push_str("  // connector arcs point from the hypergraph layer to the graph layer only\n");

    let mut hyper_nodes: Vec<_> = h.nodes().iter().collect();
    hyper_nodes.sort();
    let mut hyper_edges: Vec<_> = h.edges().iter().collect();
    hyper_edges.sort_by(|a, b| a.id().cmp(b.id()));
    let mut graph_nodes: Vec<_> = g.nodes().iter().collect();
    graph_nodes.sort();

    if h.node_count() > 0 {
        out.push_str("  subgraph cluster_hypergraph {\n    label=\"H\";\n");
        for n in &hyper_nodes {
            let _ = writeln!(out, "    {} [label={}, shape=ellipse];", hyper_node(n.as_str()), quote(n.as_str()));
        }
        for e in &hyper_edges {
            let _ = writeln!(
                out,
                "    {} [label={}, shape=box];",
                hyper_edge(e.id().as_str()),
                quote(&format!("{} ({})", e.id(), e.weight()))
            );
        }
        out.push_str("  }\n");
    }
    if g.node_count() > 0 {
        out.push_str("  subgraph cluster_graph {\n    label=\"G\";\n");
        for n in &graph_nodes {
            let _ = writeln!(out, "    {} [label={}, shape=circle];", graph_node(n.as_str()), quote(n.as_str()));
        }
        out.push_str("  }\n");
    }

    for e in &hyper_edges {
        let boxed = hyper_edge(e.id().as_str());
        for v in e.head() {
            let _ = writeln!(out, "  {} -> {boxed};", hyper_node(v.as_str()));
        }
        for v in e.tail() {
            let _ = writeln!(out, "  {boxed} -> {};", hyper_node(v.as_str()));
        }
    }

    let mut graph_edges: Vec<_> = g.edges().iter().collect();
    graph_edges.sort_by(|a, b| (&a.src, &a.dst, a.weight).cmp(&(&b.src, &b.dst, b.weight)));
    for e in graph_edges {
        let _ = writeln!(
            out,
            "  {} -> {} [label={}];",
            graph_node(e.src.as_str()),
            graph_node(e.dst.as_str()),
            quote(&e.weight.to_string())
        );
    }

    let mut connectors = hg.connectors().clone();
    connectors.node.sort();
    connectors.edge.sort();
    for c in &connectors.node {
        let _ = writeln!(
            out,
            "  {} -> {} [style=dashed, arrowhead=box, label={}];",
            hyper_node(c.h_node.as_str()),
            graph_node(c.g_node.as_str()),
            quote(&c.weight.to_string())
        );
    }
    for c in &connectors.edge {
        let _ = writeln!(
            out,
            "  {} -> {} [style=bold, label={}];",
            hyper_edge(c.h_edge.as_str()),
            graph_node(c.g_node.as_str()),
            quote(&c.weight.to_string())
        );
    }
    out.push_str("}\n");
    out
}
