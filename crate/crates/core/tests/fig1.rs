//! The seven-node worked example, operation by operation.

use hg2_core::fixtures::{fig1, fig1_with};
use hg2_core::io::weight_number;
use hg2_core::{
    build_hg2, AuxiliaryCase, ConnectorSet, Error, Hg2, Hg2Route, Hyperpath, InvalidReason, NodeRole, PathPolicy,
    RouteValidity, TracedGPath, Weight,
};

fn hp(s: &str) -> Hyperpath {
    Hyperpath::parse(s).unwrap()
}

fn units(n: u64) -> Weight {
    Weight::from_units(n)
}

fn route(hg: &Hg2, s: &str) -> Hg2Route {
    hg.route_of(&hp(s)).unwrap()
}

fn trace(hg: &Hg2, r: &Hg2Route, walk: &[&str]) -> TracedGPath {
    hg.trace_from_nodes(r, walk).unwrap()
}

fn labels(t: &TracedGPath) -> Vec<&str> {
    t.nodes.iter().map(|n| n.as_str()).collect()
}

const E3_ROUTE: &str = "1,E1,3,E2,5,E3,7";
const E4_ROUTE: &str = "1,E1,3,E2,6,E4,7";
const BROKEN_ROUTE: &str = "1,E1,3,E2,5,E4,7";

#[test]
fn hyperpaths_from_1_to_7() {
    let hg = fig1();
    let h = hg.hypergraph();
    let found = h.enumerate_hyperpaths("1", "7", PathPolicy::ElementaryOnly).unwrap();
    let mut got: Vec<String> = found.iter().map(|p| p.to_sequence().join(",")).collect();
    got.sort();
    let mut want = vec![E3_ROUTE, E4_ROUTE, BROKEN_ROUTE];
    want.sort();
    assert_eq!(got, want);
    for p in &found {
        assert!(h.is_hyperpath(p).unwrap());
        let c = h.classify_hyperpath(p).unwrap();
        assert!(c.elementary && c.simple && !c.has_hloop);
    }
    assert!(h.enumerate_hyperpaths("7", "1", PathPolicy::ElementaryOnly).unwrap().is_empty());
    // no loops in the example, so both policies agree
    assert_eq!(
        h.enumerate_hyperpaths("1", "7", PathPolicy::SimpleOnly).unwrap(),
        found
    );
}

#[test]
fn graph_layer_queries() {
    let hg = fig1();
    let g = hg.graph();
    assert!(g.path_exists("c", "d").unwrap());
    assert!(!g.path_exists("d", "f").unwrap());
    let p = g.shortest_path("c", "d").unwrap().unwrap();
    assert_eq!(p.nodes, ["c", "b", "d"].map(Into::into));
    assert_eq!(p.total_weight, units(2));
    let all = g.enumerate_paths("a", "f", 5).unwrap();
    assert_eq!(all.len(), 1);
    assert_eq!(all[0].nodes, ["a", "c", "b", "f"].map(Into::into));
}

#[test]
fn pairs() {
    let hg = fig1();
    assert_eq!(hg.node_pair("1").unwrap().to_string(), "1(a)");
    assert_eq!(hg.node_pair("3").unwrap().to_string(), "3()");
    assert_eq!(hg.node_pair("5").unwrap().to_string(), "5(d)");
    assert_eq!(hg.node_pair("6").unwrap().to_string(), "6(b)");
    assert_eq!(hg.edge_pair("E1").unwrap().to_string(), "E1(c)");
    assert_eq!(hg.edge_pair("E2").unwrap().to_string(), "E2()");
    assert_eq!(hg.edge_pair("E4").unwrap().to_string(), "E4(f)");
    assert_eq!(hg.node_pair("9").unwrap_err(), Error::UnknownId("9".into()));
    assert_eq!(hg.edge_pair("E9").unwrap_err(), Error::UnknownId("E9".into()));
}

#[test]
fn route_mapping_and_anchors() {
    let hg = fig1();
    let r = route(&hg, E3_ROUTE);
    assert_eq!(r.to_string(), "1(a), E1(c), 3(), E2(), 5(d), E3(e), 7()");
    assert_eq!(r.anchors(), ["a", "c", "d", "e"].map(Into::into));
    let r = route(&hg, E4_ROUTE);
    assert_eq!(r.to_string(), "1(a), E1(c), 3(), E2(), 6(b), E4(f), 7()");
    let r = route(&hg, BROKEN_ROUTE);
    assert_eq!(r.anchors(), ["a", "c", "d", "f"].map(Into::into));
    assert_eq!(route(&hg, "1,E1,3").to_string(), "1(a), E1(c), 3()");
    assert_eq!(hg.route_of(&hp("3,E1,1")).unwrap_err(), Error::NotAHyperpath);

    let bare = Hg2Route::new(
        vec![
            hg2_core::NodePair { h_node: "2".into(), anchor: None },
            hg2_core::NodePair { h_node: "3".into(), anchor: None },
        ],
        vec![hg2_core::EdgePair { h_edge: "E1".into(), anchor: None }],
    )
    .unwrap();
    assert!(bare.anchors().is_empty());
}

#[test]
fn route_validation() {
    let hg = fig1();
    assert_eq!(hg.validate_route(&route(&hg, E3_ROUTE)), RouteValidity::Valid);
    assert_eq!(hg.validate_route(&route(&hg, E4_ROUTE)), RouteValidity::Valid);
    let verdict = hg.validate_route(&route(&hg, BROKEN_ROUTE));
    assert_eq!(
        verdict,
        RouteValidity::Invalid(InvalidReason::NoGraphPath {
            from: "d".into(),
            to: "f".into()
        })
    );
    assert_eq!(verdict.to_string(), "Invalid: no path d→f in G");

    // a hand-built route walking E1 backwards
    let backwards = Hg2Route::new(
        vec![
            hg2_core::NodePair { h_node: "3".into(), anchor: None },
            hg2_core::NodePair { h_node: "1".into(), anchor: Some("a".into()) },
        ],
        vec![hg2_core::EdgePair { h_edge: "E1".into(), anchor: Some("c".into()) }],
    )
    .unwrap();
    assert_eq!(
        hg.validate_route(&backwards),
        RouteValidity::Invalid(InvalidReason::NotAHyperpath)
    );

    // right hyperpath, wrong anchor
    let forged = Hg2Route::new(
        vec![
            hg2_core::NodePair { h_node: "1".into(), anchor: Some("b".into()) },
            hg2_core::NodePair { h_node: "3".into(), anchor: None },
        ],
        vec![hg2_core::EdgePair { h_edge: "E1".into(), anchor: Some("c".into()) }],
    )
    .unwrap();
    assert!(matches!(
        hg.validate_route(&forged),
        RouteValidity::Invalid(InvalidReason::PairMismatch { .. })
    ));
}

#[test]
fn route_enumeration() {
    let hg = fig1();
    let routes = hg.enumerate_routes("1", "7").unwrap();
    let shown: Vec<String> = routes.iter().map(ToString::to_string).collect();
    assert_eq!(
        shown,
        [
            "1(a), E1(c), 3(), E2(), 5(d), E3(e), 7()",
            "1(a), E1(c), 3(), E2(), 6(b), E4(f), 7()",
        ]
    );
    assert!(hg.enumerate_routes("7", "1").unwrap().is_empty());
    assert_eq!(
        hg.enumerate_routes("1", "1").unwrap_err(),
        Error::DegenerateQuery("1".into())
    );

    let without_de = fig1_with(|doc| doc.graph.edges.retain(|e| !(e.src == "d" && e.dst == "e"))).unwrap();
    let routes = without_de.enumerate_routes("1", "7").unwrap();
    assert_eq!(routes.len(), 1);
    assert_eq!(routes[0].to_string(), "1(a), E1(c), 3(), E2(), 6(b), E4(f), 7()");
}

#[test]
fn gpath_tracing() {
    let hg = fig1();
    let traces = hg.trace_gpaths(&route(&hg, E3_ROUTE), 6).unwrap();
    assert_eq!(traces.len(), 1);
    assert_eq!(labels(&traces[0]), ["a", "c", "b", "d", "e"]);
    assert_eq!(traces[0].anchor_indices, [0, 1, 3, 4]);
    assert!(!traces[0].has_gloop());

    let traces = hg.trace_gpaths(&route(&hg, E4_ROUTE), 6).unwrap();
    assert_eq!(traces.len(), 1);
    assert_eq!(labels(&traces[0]), ["a", "c", "b", "f"]);

    let single = hg.trace_gpaths(&route(&hg, "2,E1,3"), 6).unwrap();
    assert_eq!(single.len(), 1);
    assert_eq!(labels(&single[0]), ["c"]);

    assert!(matches!(
        hg.trace_gpaths(&route(&hg, BROKEN_ROUTE), 6),
        Err(Error::InvalidRoute(_))
    ));
}

#[test]
fn gloops() {
    let t = |nodes: &[&str]| TracedGPath {
        nodes: nodes.iter().map(|&n| n.into()).collect(),
        weight: Weight::ZERO,
        anchor_indices: vec![],
    };
    assert!(!t(&["a", "c", "b", "d", "e"]).has_gloop());
    assert!(t(&["a", "c", "a"]).has_gloop());
    assert!(!t(&["a"]).has_gloop());
}

#[test]
fn node_classification() {
    let hg = fig1();
    let r = route(&hg, E3_ROUTE);
    let t = trace(&hg, &r, &["a", "c", "b", "d", "e"]);
    let roles = hg.classify_nodes(&r, &t).unwrap();
    for n in ["a", "c", "d", "e"] {
        assert_eq!(roles[n], NodeRole::Participating, "{n}");
    }
    assert_eq!(roles["b"], NodeRole::Auxiliary(AuxiliaryCase::OutsideRoute));
    assert_eq!(roles.len(), 5);

    // on the E4 route b anchors 6(b)
    let r4 = route(&hg, E4_ROUTE);
    let t4 = trace(&hg, &r4, &["a", "c", "b", "f"]);
    let roles = hg.classify_nodes(&r4, &t4).unwrap();
    assert!(roles.values().all(|r| *r == NodeRole::Participating));

    let unhooked = fig1_with(|doc| doc.connectors.node.retain(|c| c.g != "b")).unwrap();
    let r = route(&unhooked, E3_ROUTE);
    let t = trace(&unhooked, &r, &["a", "c", "b", "d", "e"]);
    assert_eq!(
        unhooked.classify_nodes(&r, &t).unwrap()["b"],
        NodeRole::Auxiliary(AuxiliaryCase::Unconnected)
    );

    let wrong = TracedGPath {
        nodes: ["a", "c", "b", "f"].map(Into::into).to_vec(),
        weight: units(3),
        anchor_indices: vec![0, 2, 1, 3],
    };
    assert!(matches!(hg.classify_nodes(&r4, &wrong), Err(Error::TraceMismatch(_))));
}

#[test]
fn explicit_walks() {
    let hg = fig1();
    let r = route(&hg, E3_ROUTE);
    assert!(matches!(
        hg.trace_from_nodes(&r, &["a", "c", "d", "e"]),
        Err(Error::InvalidTrace(_))
    ));
    assert!(matches!(
        hg.trace_from_nodes(&r, &["c", "b", "d", "e"]),
        Err(Error::TraceMismatch(_))
    ));
    assert!(matches!(
        hg.trace_from_nodes(&r, &["a", "c", "x"]),
        Err(Error::UnknownId(_))
    ));
}

#[test]
fn connector_rules() {
    let hg = fig1();
    let h = hg.hypergraph().clone();
    let g = hg.graph().clone();
    let base = hg.connectors().clone();
    assert_eq!(build_hg2(h.clone(), g.clone(), base.clone()).unwrap(), hg);

    let dup = base.clone().node("1", "b", Weight::ONE);
    assert_eq!(
        build_hg2(h.clone(), g.clone(), dup).unwrap_err(),
        Error::DuplicateSourceConnector("1".into())
    );
    let dangling = base.clone().node("9", "a", Weight::ONE);
    assert!(matches!(
        build_hg2(h.clone(), g.clone(), dangling),
        Err(Error::DanglingConnector { .. })
    ));
    let dangling = ConnectorSet::new().edge("E1", "zz", Weight::ONE);
    assert!(matches!(
        build_hg2(h, g, dangling),
        Err(Error::DanglingConnector { .. })
    ));
}

#[test]
fn component_costs() {
    let hg = fig1();
    let r3 = route(&hg, E3_ROUTE);
    let t3 = trace(&hg, &r3, &["a", "c", "b", "d", "e"]);
    assert_eq!(hg.route_cost(&r3).unwrap(), units(3));
    assert_eq!(hg.gpath_cost(&t3).unwrap(), units(4));
    assert_eq!(hg.connector_cost(&r3, &t3).unwrap(), units(4));
    let b = hg.total_cost(&r3, &t3).unwrap();
    assert_eq!((b.route_cost, b.gpath_cost, b.connector_cost, b.total), (units(3), units(4), units(4), units(11)));

    let r4 = route(&hg, E4_ROUTE);
    let t4 = trace(&hg, &r4, &["a", "c", "b", "f"]);
    assert_eq!(hg.connector_cost(&r4, &t4).unwrap(), units(4));
    let b = hg.total_cost(&r4, &t4).unwrap();
    assert_eq!((b.route_cost, b.gpath_cost, b.connector_cost, b.total), (units(3), units(3), units(4), units(10)));

    let single = TracedGPath {
        nodes: vec!["a".into()],
        weight: Weight::ZERO,
        anchor_indices: vec![0],
    };
    assert_eq!(hg.gpath_cost(&single).unwrap(), Weight::ZERO);

    assert!(matches!(
        hg.route_cost(&route(&hg, BROKEN_ROUTE)),
        Err(Error::InvalidRoute(_))
    ));
    let bogus = TracedGPath {
        nodes: ["a", "f"].map(Into::into).to_vec(),
        weight: Weight::ZERO,
        anchor_indices: vec![0, 1],
    };
    assert!(matches!(hg.gpath_cost(&bogus), Err(Error::InvalidTrace(_))));
}

#[test]
fn reweighted_costs() {
    let heavy_edges = fig1_with(|doc| {
        for e in &mut doc.hypergraph.edges {
            let w = match e.id.as_str() {
                "E1" => 2,
                "E2" => 3,
                "E4" => 5,
                _ => continue,
            };
            e.weight = Some(weight_number(units(w)));
        }
    })
    .unwrap();
    assert_eq!(heavy_edges.route_cost(&route(&heavy_edges, E4_ROUTE)).unwrap(), units(10));

    let heavy_ac = fig1_with(|doc| {
        for e in &mut doc.graph.edges {
            if e.src == "a" && e.dst == "c" {
                e.weight = Some(weight_number(units(7)));
            }
        }
    })
    .unwrap();
    let r4 = route(&heavy_ac, E4_ROUTE);
    let t4 = trace(&heavy_ac, &r4, &["a", "c", "b", "f"]);
    assert_eq!(heavy_ac.gpath_cost(&t4).unwrap(), units(9));

    let zero = fig1_with(|doc| {
        let z = Some(weight_number(Weight::ZERO));
        doc.hypergraph.edges.iter_mut().for_each(|e| e.weight = z.clone());
        doc.graph.edges.iter_mut().for_each(|e| e.weight = z.clone());
        doc.connectors.node.iter_mut().for_each(|c| c.weight = z.clone());
        doc.connectors.edge.iter_mut().for_each(|c| c.weight = z.clone());
    })
    .unwrap();
    for r in zero.enumerate_routes("1", "7").unwrap() {
        assert_eq!(zero.route_cost(&r).unwrap(), Weight::ZERO);
        for t in zero.trace_gpaths(&r, 6).unwrap() {
            let b = zero.total_cost(&r, &t).unwrap();
            assert_eq!(b.total, Weight::ZERO);
            assert_eq!(b.connector_cost, Weight::ZERO);
        }
    }
}

#[test]
fn least_cost() {
    let hg = fig1();
    let best = hg.min_cost_path("1", "7").unwrap().unwrap();
    assert_eq!(best.route.to_string(), "1(a), E1(c), 3(), E2(), 6(b), E4(f), 7()");
    assert_eq!(labels(&best.trace), ["a", "c", "b", "f"]);
    assert_eq!(best.breakdown.total, units(10));
    assert_eq!(hg.min_cost_path("7", "1").unwrap(), None);
    assert_eq!(hg.min_cost_path("1", "1").unwrap_err(), Error::DegenerateQuery("1".into()));
    assert_eq!(hg.min_cost_path("1", "nope").unwrap_err(), Error::UnknownId("nope".into()));

    let favour_e3 = fig1_with(|doc| {
        for e in &mut doc.graph.edges {
            let w = match (e.src.as_str(), e.dst.as_str()) {
                ("b", "f") => 100,
                _ => 0,
            };
            e.weight = Some(weight_number(units(w)));
        }
    })
    .unwrap();
    let best = favour_e3.min_cost_path("1", "7").unwrap().unwrap();
    assert_eq!(best.route.to_string(), "1(a), E1(c), 3(), E2(), 5(d), E3(e), 7()");
    assert_eq!(best.breakdown.total, units(7));
}
