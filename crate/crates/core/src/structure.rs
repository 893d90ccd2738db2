//! Structural predicates and derived graphs: trivial components, full vertices,
//! side neighbourhoods, the subgraph a biclique induces, and the per-edge bipartite graphs
//! used to pass from uncoloured to side-preserving counting.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{Biclique, Graph, TwoColouredGraph};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum ComponentKind {
    /// Every vertex looped, every pair adjacent. A single looped vertex qualifies.
    LoopedClique,
    /// Loop-free complete bipartite. An isolated loop-free vertex qualifies.
    CompleteBipartite,
    NonTrivial,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Component {
    pub vertices: Vec<usize>,
    pub kind: ComponentKind,
}

impl Component {
    pub fn is_trivial(&self) -> bool {
        self.kind != ComponentKind::NonTrivial
    }
}

pub fn classify_components(h: &Graph) -> Vec<Component> {
    h.components()
        .into_iter()
        .map(|vs| {
            let kind = component_kind(h, &vs);
            Component { vertices: vs, kind }
        })
        .collect()
}

fn component_kind(h: &Graph, vs: &[usize]) -> ComponentKind {
    let all_looped = vs.iter().all(|&v| h.has_loop(v));
    if all_looped && vs.iter().all(|&u| vs.iter().all(|&v| h.has_edge(u, v))) {
        return ComponentKind::LoopedClique;
    }
    if vs.iter().any(|&v| h.has_loop(v)) {
        return ComponentKind::NonTrivial;
    }
    // two-colour by BFS from the first vertex, then check every cross pair is an edge
    let mut side = vec![None; h.n()];
    side[vs[0]] = Some(false);
    let mut queue = vec![vs[0]];
    while let Some(u) = queue.pop() {
        let s = side[u].unwrap();
        for &w in h.neighbours(u) {
            match side[w] {
                None => {
                    side[w] = Some(!s);
                    queue.push(w);
                }
                Some(t) if t == s => return ComponentKind::NonTrivial,
                _ => {}
            }
        }
    }
    let (a, b): (Vec<usize>, Vec<usize>) = vs.iter().partition(|&&v| side[v] == Some(false));
    if a.iter().all(|&u| b.iter().all(|&v| h.has_edge(u, v))) {
        ComponentKind::CompleteBipartite
    } else {
        ComponentKind::NonTrivial
    }
}

/// Vertices adjacent to the whole opposite side.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FullnessProfile {
    pub full_left: Vec<usize>,
    pub full_right: Vec<usize>,
}

impl FullnessProfile {
    pub fn is_full(&self) -> bool {
        !self.full_left.is_empty() && !self.full_right.is_empty()
    }
}

pub fn fullness(h: &TwoColouredGraph) -> FullnessProfile {
    FullnessProfile {
        full_left: (0..h.lsize()).filter(|&i| h.rsize() > 0 && h.left_nbrs(i).len() == h.rsize()).collect(),
        full_right: (0..h.rsize()).filter(|&j| h.lsize() > 0 && h.right_nbrs(j).len() == h.lsize()).collect(),
    }
}

/// Every connected component is complete bipartite (isolated vertices included).
pub fn is_trivial_bigraph(h: &TwoColouredGraph) -> bool {
    let g = h.as_graph();
    classify_components(&g).iter().all(Component::is_trivial)
}

/// `h` has full vertices on both sides and is not complete bipartite.
pub fn check_full_nontrivial(h: &TwoColouredGraph) -> Result<FullnessProfile> {
    let f = fullness(h);
    if !f.is_full() {
        return Err(Error::Precondition("target needs a full vertex on each side".into()));
    }
    if h.edge_count() == h.lsize() * h.rsize() {
        return Err(Error::Precondition("target is complete bipartite".into()));
    }
    Ok(f)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Side {
    Left,
    Right,
}

fn nbrs(h: &TwoColouredGraph, side: Side, v: usize) -> &[usize] {
    match side {
        Side::Left => h.left_nbrs(v),
        Side::Right => h.right_nbrs(v),
    }
}

fn opposite_size(h: &TwoColouredGraph, side: Side) -> usize {
    match side {
        Side::Left => h.rsize(),
        Side::Right => h.lsize(),
    }
}

/// Vertices on the other side adjacent to some member of `set` (which lies on `side`).
pub fn union_nbrs(h: &TwoColouredGraph, side: Side, set: &[usize]) -> Vec<usize> {
    let mut hit = vec![false; opposite_size(h, side)];
    for &v in set {
        for &w in nbrs(h, side, v) {
            hit[w] = true;
        }
    }
    (0..hit.len()).filter(|&w| hit[w]).collect()
}

/// Vertices on the other side adjacent to every member of `set`; the whole side when empty.
pub fn common_nbrs(h: &TwoColouredGraph, side: Side, set: &[usize]) -> Vec<usize> {
    let mut count = vec![0usize; opposite_size(h, side)];
    for &v in set {
        for &w in nbrs(h, side, v) {
            count[w] += 1;
        }
    }
    (0..count.len()).filter(|&w| count[w] == set.len()).collect()
}

/// The induced subgraph a biclique selects: left part `N_common(S_R)`, right part the
/// union of neighbourhoods of that left part. Original indices are kept alongside.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Derived {
    pub graph: TwoColouredGraph,
    pub left: Vec<usize>,
    pub right: Vec<usize>,
}

pub fn derived_subgraph(h: &TwoColouredGraph, b: &Biclique) -> Derived {
    let left = common_nbrs(h, Side::Right, &b.right);
    let right = union_nbrs(h, Side::Left, &left);
    Derived { graph: h.induced(&left, &right), left, right }
}

/// Degree data for edges of an uncoloured graph: the largest degree, the largest degree
/// among neighbours of a largest-degree vertex, and the ordered edges attaining both.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DegreeProfile {
    pub max_degree: usize,
    pub max_partner_degree: usize,
    pub extremal_edges: Vec<(usize, usize)>,
}

pub fn degree_profile(h: &Graph) -> DegreeProfile {
    let d1 = (0..h.n()).map(|u| h.degree(u)).max().unwrap_or(0);
    let d2 = (0..h.n())
        .filter(|&u| h.degree(u) == d1)
        .flat_map(|u| h.neighbours(u).iter().map(|&v| h.degree(v)))
        .max()
        .unwrap_or(0);
    let edges = h.ordered_edges().into_iter().filter(|&(u, v)| h.degree(u) == d1 && h.degree(v) == d2).collect();
    DegreeProfile { max_degree: d1, max_partner_degree: d2, extremal_edges: edges }
}

/// For an edge `(u, v)`: left side `N(v)`, right side `N(u)`, with `x ~ y` iff `{x, y}` is an
/// edge. This is the part of the double cover that a map sending an edge to `(u, v)` can use.
pub fn edge_bigraph(h: &Graph, u: usize, v: usize) -> Result<TwoColouredGraph> {
    if u >= h.n() || v >= h.n() || !h.has_edge(u, v) {
        return Err(Error::Precondition(format!("({u},{v}) is not an edge")));
    }
    let left = h.neighbours(v);
    let right = h.neighbours(u);
    let mut edges = Vec::new();
    for (a, &x) in left.iter().enumerate() {
        for (b, &y) in right.iter().enumerate() {
            if h.has_edge(x, y) {
                edges.push((a, b));
            }
        }
    }
    TwoColouredGraph::new(left.len(), right.len(), edges)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::canon::is_isomorphic;
    use crate::oracle;

    fn k3() -> Graph {
        Graph::new(3, [(0, 1), (1, 2), (0, 2)]).unwrap()
    }

    #[test]
    fn component_kinds() {
        let single_loop = Graph::new(1, [(0, 0)]).unwrap();
        assert_eq!(classify_components(&single_loop)[0].kind, ComponentKind::LoopedClique);
        assert_eq!(classify_components(&Graph::empty(1))[0].kind, ComponentKind::CompleteBipartite);
        let c4 = Graph::new(4, [(0, 1), (1, 2), (2, 3), (3, 0)]).unwrap();
        assert_eq!(classify_components(&c4)[0].kind, ComponentKind::CompleteBipartite);
        assert_eq!(classify_components(&k3())[0].kind, ComponentKind::NonTrivial);
        let p4 = Graph::new(4, [(0, 1), (1, 2), (2, 3)]).unwrap();
        assert_eq!(classify_components(&p4)[0].kind, ComponentKind::NonTrivial);
        let mixed = Graph::new(2, [(0, 0), (0, 1)]).unwrap();
        assert_eq!(classify_components(&mixed)[0].kind, ComponentKind::NonTrivial);
    }

    #[test]
    fn p4_fullness() {
        let p4 = TwoColouredGraph::path(4);
        let f = fullness(&p4);
        assert_eq!(f.full_left.len(), 1);
        assert_eq!(f.full_right.len(), 1);
        assert_eq!(p4.left_nbrs(f.full_left[0]).len(), 2);
        assert_eq!(p4.right_nbrs(f.full_right[0]).len(), 2);
        assert!(check_full_nontrivial(&p4).is_ok());
        assert!(check_full_nontrivial(&TwoColouredGraph::complete(2, 3)).is_err());
        assert!(!is_trivial_bigraph(&p4));
        assert!(is_trivial_bigraph(&TwoColouredGraph::complete(2, 3)));
    }

    #[test]
    fn neighbourhood_conventions() {
        let p4 = TwoColouredGraph::path(4);
        assert_eq!(common_nbrs(&p4, Side::Left, &[]), vec![0, 1]);
        assert_eq!(common_nbrs(&p4, Side::Right, &[]), vec![0, 1]);
        assert_eq!(union_nbrs(&p4, Side::Left, &[]), Vec::<usize>::new());
    }

    #[test]
    fn edge_bigraph_examples() {
        let edge = Graph::new(2, [(0, 1)]).unwrap();
        assert_eq!(edge_bigraph(&edge, 0, 1).unwrap(), TwoColouredGraph::complete(1, 1));
        for (u, v) in k3().ordered_edges() {
            assert!(is_isomorphic(&edge_bigraph(&k3(), u, v).unwrap(), &TwoColouredGraph::path(4)));
        }
        assert!(edge_bigraph(&edge, 0, 0).is_err());
    }

    #[test]
    fn degree_profile_of_independent_set_target() {
        let h = crate::count::independent_set_target();
        let d = degree_profile(&h);
        assert_eq!((d.max_degree, d.max_partner_degree), (2, 2));
        assert_eq!(d.extremal_edges, vec![(0, 0)]);
        assert!(is_isomorphic(&edge_bigraph(&h, 0, 0).unwrap(), &TwoColouredGraph::path(4)));
    }

    #[test]
    fn maximal_bicliques_select_left_part_and_all_right() {
        // every maximal biclique of a full graph induces H[S_L ∪ V_R]
        let h = TwoColouredGraph::new(3, 3, [(0, 0), (0, 1), (0, 2), (1, 0), (2, 0), (1, 1)]).unwrap();
        for b in oracle::maximal_bicliques(&h) {
            let d = derived_subgraph(&h, &b);
            assert_eq!(d.left, b.left);
            assert_eq!(d.right, vec![0, 1, 2]);
        }
    }
}
