//! Bundled example targets, kept as text files in `fixtures/`.

use crate::graph::{parse_any, AnyGraph, Graph, TwoColouredGraph};

pub const FIXTURES: &[(&str, &str)] = &[
    ("case1", include_str!("../fixtures/case1.txt")),
    ("case3", include_str!("../fixtures/case3.txt")),
    ("coexistence", include_str!("../fixtures/coexistence.txt")),
    ("p4", include_str!("../fixtures/p4.txt")),
    ("h_is", include_str!("../fixtures/h_is.txt")),
    ("toy", include_str!("../fixtures/toy.txt")),
    ("k3", include_str!("../fixtures/k3.txt")),
];

pub fn text(name: &str) -> Option<&'static str> {
    FIXTURES.iter().find(|f| f.0 == name).map(|f| f.1)
}

pub fn load(name: &str) -> Option<AnyGraph> {
    text(name).map(|t| parse_any(t).expect("bundled fixture parses"))
}

pub fn bigraph(name: &str) -> TwoColouredGraph {
    match load(name) {
        Some(AnyGraph::Bigraph(g)) => g,
        _ => panic!("no bigraph fixture `{name}`"),
    }
}

pub fn graph(name: &str) -> Graph {
    match load(name) {
        Some(AnyGraph::Graph(g)) => g,
        _ => panic!("no graph fixture `{name}`"),
    }
}

/// The coexistence target doubles as the equality-case example.
pub fn case2() -> TwoColouredGraph {
    bigraph("coexistence")
}
