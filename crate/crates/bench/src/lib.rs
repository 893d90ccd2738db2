//! Workloads shared by the benchmarks.

use homlab_core::{fixtures, Graph, TwoColouredGraph};

/// Instance graphs of growing size for counting into a fixed target.
pub fn bigraph_instances() -> Vec<(&'static str, TwoColouredGraph)> {
    vec![
        ("k22", TwoColouredGraph::complete(2, 2)),
        ("p6", TwoColouredGraph::path(6)),
        ("k33", TwoColouredGraph::complete(3, 3)),
        ("p3xp3", TwoColouredGraph::path(3).tensor(&TwoColouredGraph::path(3))),
        ("p10", TwoColouredGraph::path(10)),
    ]
}

/// Cycle on `n` vertices.
pub fn cycle(n: usize) -> Graph {
    Graph::new(n, (0..n).map(|i| (i, (i + 1) % n))).expect("cycle is well formed")
}

pub fn target(name: &str) -> TwoColouredGraph {
    fixtures::bigraph(name)
}
