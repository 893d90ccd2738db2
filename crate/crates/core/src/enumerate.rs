//! Isomorphism classes of small two-coloured graphs in a fixed order: by total vertex
//! count, then left size, then canonical form.

use std::collections::{HashMap, HashSet};
use std::sync::{Arc, Mutex, OnceLock};

use crate::canon::{canonical, canonical_graph};
use crate::graph::TwoColouredGraph;

type ClassList = Arc<Vec<TwoColouredGraph>>;

fn cache() -> &'static Mutex<HashMap<(usize, usize), ClassList>> {
    static CACHE: OnceLock<Mutex<HashMap<(usize, usize), ClassList>>> = OnceLock::new();
    CACHE.get_or_init(|| Mutex::new(HashMap::new()))
}

/// Canonical representatives of all graphs with `l` left and `r` right vertices,
/// sorted by canonical form. Built by adding one right vertex at a time.
pub fn classes(l: usize, r: usize) -> ClassList {
    if let Some(c) = cache().lock().unwrap().get(&(l, r)) {
        return c.clone();
    }
    let list: Vec<TwoColouredGraph> = if r == 0 {
        vec![TwoColouredGraph::empty(l, 0)]
    } else {
        assert!(l <= 16, "enumeration is limited to 16 left vertices");
        let prev = classes(l, r - 1);
        let mut seen: HashSet<Vec<u8>> = HashSet::new();
        let mut found: Vec<(Vec<u8>, TwoColouredGraph)> = Vec::new();
        for g in prev.iter() {
            for nb in 0u32..(1 << l) {
                let mut edges = g.edges();
                edges.extend((0..l).filter(|&i| nb >> i & 1 == 1).map(|i| (i, r - 1)));
                let h = TwoColouredGraph::new(l, r, edges).expect("extension is well formed");
                let c = canonical(&h);
                if seen.insert(c.form.clone()) {
                    found.push((c.form, canonical_graph(&h)));
                }
            }
        }
        found.sort_by(|a, b| a.0.cmp(&b.0));
        found.into_iter().map(|x| x.1).collect()
    };
    let list = Arc::new(list);
    cache().lock().unwrap().insert((l, r), list.clone());
    list
}

/// Every class with at most `max_total` vertices, in enumeration order.
pub fn ordered(max_total: usize) -> impl Iterator<Item = TwoColouredGraph> {
    (0..=max_total).flat_map(|n| (0..=n).map(move |l| (l, n - l))).flat_map(|(l, r)| {
        let c = classes(l, r);
        (0..c.len()).map(move |k| c[k].clone())
    })
}

/// Candidate refining graphs: at most `bound` vertices per side and no isolated right vertex.
pub fn refining_graphs(bound: usize) -> Vec<TwoColouredGraph> {
    ordered(2 * bound).filter(|g| g.lsize() <= bound && g.rsize() <= bound && !g.has_isolated_right()).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::canon::canonical_form;
    use crate::oracle;

    #[test]
    fn class_counts_match_brute_force() {
        for l in 0..=3 {
            for r in 0..=3 {
                let mut forms = HashSet::new();
                for mask in 0u32..(1 << (l * r)) {
                    let edges = (0..l * r).filter(|&k| mask >> k & 1 == 1).map(|k| (k / r, k % r));
                    forms.insert(canonical_form(&TwoColouredGraph::new(l, r, edges).unwrap()));
                }
                assert_eq!(classes(l, r).len(), forms.len(), "({l},{r})");
            }
        }
    }

    #[test]
    fn classes_are_pairwise_non_isomorphic() {
        let c = classes(2, 3);
        for a in 0..c.len() {
            for b in a + 1..c.len() {
                assert!(!oracle::naive_isomorphic(&c[a], &c[b]));
            }
        }
    }

    #[test]
    fn order_is_by_size_then_left_then_form() {
        let all: Vec<TwoColouredGraph> = ordered(4).collect();
        assert_eq!(all[0], TwoColouredGraph::empty(0, 0));
        for w in all.windows(2) {
            let key = |g: &TwoColouredGraph| (g.order(), g.lsize(), canonical_form(g));
            assert!(key(&w[0]) < key(&w[1]));
        }
    }

    #[test]
    fn refining_graph_count() {
        // size-3 family used by the default classifier bound; 92 classes in all, and 54 once
        // graphs with an isolated right vertex are dropped (cross-checked with networkx)
        let all: usize = (0..=3).flat_map(|l| (0..=3).map(move |r| classes(l, r).len())).sum();
        assert_eq!(all, 92);
        let brute: usize = (0..=3usize)
            .flat_map(|l| (0..=3usize).map(move |r| (l, r)))
            .map(|(l, r)| {
                let mut forms = HashSet::new();
                for mask in 0u32..(1 << (l * r)) {
                    let edges = (0..l * r).filter(|&k| mask >> k & 1 == 1).map(|k| (k / r, k % r));
                    let g = TwoColouredGraph::new(l, r, edges).unwrap();
                    if !g.has_isolated_right() {
                        forms.insert(canonical_form(&g));
                    }
                }
                forms.len()
            })
            .sum();
        assert_eq!(brute, 54);
        assert_eq!(refining_graphs(3).len(), brute);
    }
}
