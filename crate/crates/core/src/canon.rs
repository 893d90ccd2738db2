//! Canonical forms of two-coloured graphs under side-preserving relabelling.
//!
//! Individualisation-refinement: colour refinement from the side partition, then branch on
//! the first non-singleton cell. Twins (same neighbourhood) inside a cell lead to identical
//! subtrees, so only one per twin class is tried. The smallest leaf encoding wins.

use std::cmp::Ordering;

use crate::graph::TwoColouredGraph;

/// Canonical encoding plus the relabelling that produces it.
#[derive(Clone, Debug)]
pub struct Canonical {
    /// Bytes: `lsize`, `rsize`, then the left-by-right adjacency matrix in canonical order,
    /// row-major, packed most significant bit first.
    pub form: Vec<u8>,
    /// `order[p]` is the vertex placed at position `p` (left vertices `0..l`, right `l..l+r`).
    pub order: Vec<usize>,
}

impl Canonical {
    pub fn hex(&self) -> String {
        self.form.iter().map(|b| format!("{b:02x}")).collect()
    }
}

struct Searcher<'a> {
    l: usize,
    r: usize,
    adj: &'a [Vec<usize>],
    best: Option<(Vec<u8>, Vec<usize>)>,
}

impl Searcher<'_> {
    fn refine(&self, mut cells: Vec<Vec<usize>>) -> Vec<Vec<usize>> {
        let n = self.l + self.r;
        loop {
            let mut cell_of = vec![0usize; n];
            for (c, cell) in cells.iter().enumerate() {
                for &v in cell {
                    cell_of[v] = c;
                }
            }
            let ncell = cells.len();
            let mut next = Vec::with_capacity(ncell);
            for cell in &cells {
                if cell.len() == 1 {
                    next.push(cell.clone());
                    continue;
                }
                let mut sig: Vec<(Vec<u32>, usize)> = cell
                    .iter()
                    .map(|&v| {
                        let mut counts = vec![0u32; ncell];
                        for &w in &self.adj[v] {
                            counts[cell_of[w]] += 1;
                        }
                        (counts, v)
                    })
                    .collect();
                sig.sort();
                let mut start = 0;
                for k in 1..=sig.len() {
                    if k == sig.len() || sig[k].0 != sig[start].0 {
                        let mut part: Vec<usize> = sig[start..k].iter().map(|x| x.1).collect();
                        part.sort_unstable();
                        next.push(part);
                        start = k;
                    }
                }
            }
            if next.len() == cells.len() {
                return next;
            }
            cells = next;
        }
    }

    fn encode(&self, order: &[usize]) -> Vec<u8> {
        let (l, r) = (self.l, self.r);
        let mut rpos = vec![0usize; l + r];
        for (p, &v) in order.iter().enumerate() {
            rpos[v] = p;
        }
        let mut out = vec![l as u8, r as u8];
        let mut byte = 0u8;
        let mut nbits = 0;
        for &u in &order[..l] {
            let mut row = vec![false; r];
            for &w in &self.adj[u] {
                row[rpos[w] - l] = true;
            }
            for bit in row {
                byte = byte << 1 | bit as u8;
                nbits += 1;
                if nbits == 8 {
                    out.push(byte);
                    byte = 0;
                    nbits = 0;
                }
            }
        }
        if nbits > 0 {
            out.push(byte << (8 - nbits));
        }
        out
    }

    fn search(&mut self, cells: Vec<Vec<usize>>) {
        let cells = self.refine(cells);
        let Some(target) = cells.iter().position(|c| c.len() > 1) else {
            let order: Vec<usize> = cells.iter().map(|c| c[0]).collect();
            let code = self.encode(&order);
            let better = match &self.best {
                None => true,
                Some((b, _)) => code.cmp(b) == Ordering::Less,
            };
            if better {
                self.best = Some((code, order));
            }
            return;
        };
        let mut tried: Vec<usize> = Vec::new();
        for &v in &cells[target] {
            if tried.iter().any(|&t| self.adj[t] == self.adj[v]) {
                continue;
            }
            tried.push(v);
            let mut next = Vec::with_capacity(cells.len() + 1);
            next.extend_from_slice(&cells[..target]);
            next.push(vec![v]);
            next.push(cells[target].iter().copied().filter(|&w| w != v).collect());
            next.extend_from_slice(&cells[target + 1..]);
            self.search(next);
        }
    }
}

pub fn canonical(h: &TwoColouredGraph) -> Canonical {
    let (l, r) = (h.lsize(), h.rsize());
    assert!(l < 256 && r < 256);
    let mut adj = vec![Vec::new(); l + r];
    for (i, j) in h.edges() {
        adj[i].push(l + j);
        adj[l + j].push(i);
    }
    for a in &mut adj {
        a.sort_unstable();
    }
    let mut s = Searcher { l, r, adj: &adj, best: None };
    let mut cells = Vec::new();
    if l > 0 {
        cells.push((0..l).collect());
    }
    if r > 0 {
        cells.push((l..l + r).collect());
    }
    if cells.is_empty() {
        return Canonical { form: vec![0, 0], order: Vec::new() };
    }
    s.search(cells);
    let (form, order) = s.best.expect("search reaches a leaf");
    Canonical { form, order }
}

/// Lowercase hex of the canonical encoding.
pub fn canonical_form(h: &TwoColouredGraph) -> String {
    canonical(h).hex()
}

/// The graph relabelled into canonical order.
pub fn canonical_graph(h: &TwoColouredGraph) -> TwoColouredGraph {
    let c = canonical(h);
    let l = h.lsize();
    let mut pos = vec![0usize; h.order()];
    for (p, &v) in c.order.iter().enumerate() {
        pos[v] = p;
    }
    TwoColouredGraph::new(l, h.rsize(), h.edges().into_iter().map(|(i, j)| (pos[i], pos[l + j] - l))).expect("relabelling is a bijection")
}

/// Side-preserving isomorphism witness: `(left map, right map)` from `a` to `b`.
pub fn iso_colour_preserving(a: &TwoColouredGraph, b: &TwoColouredGraph) -> Option<(Vec<usize>, Vec<usize>)> {
    if a.lsize() != b.lsize() || a.rsize() != b.rsize() || a.edge_count() != b.edge_count() {
        return None;
    }
    let ca = canonical(a);
    let cb = canonical(b);
    if ca.form != cb.form {
        return None;
    }
    let l = a.lsize();
    let mut lmap = vec![0; l];
    let mut rmap = vec![0; a.rsize()];
    for (&x, &y) in ca.order.iter().zip(&cb.order) {
        if x < l {
            lmap[x] = y;
        } else {
            rmap[x - l] = y - l;
        }
    }
    debug_assert!(a.edges().iter().all(|&(i, j)| b.has_edge(lmap[i], rmap[j])));
    Some((lmap, rmap))
}

pub fn is_isomorphic(a: &TwoColouredGraph, b: &TwoColouredGraph) -> bool {
    iso_colour_preserving(a, b).is_some()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oracle;
    use proptest::prelude::*;

    fn relabel(h: &TwoColouredGraph, pl: &[usize], pr: &[usize]) -> TwoColouredGraph {
        TwoColouredGraph::new(h.lsize(), h.rsize(), h.edges().into_iter().map(|(i, j)| (pl[i], pr[j]))).unwrap()
    }

    #[test]
    fn tensor_of_paths() {
        let p3 = TwoColouredGraph::path(3);
        let p4 = TwoColouredGraph::path(4);
        assert!(is_isomorphic(&p3.tensor(&p3), &TwoColouredGraph::complete(1, 4)));
        assert!(!is_isomorphic(&p3.tensor(&p4), &p4.tensor(&p4)));
    }

    #[test]
    fn sides_matter() {
        let a = TwoColouredGraph::complete(1, 2);
        assert!(!is_isomorphic(&a, &a.swap_sides()));
        // P4 reversed swaps its colour classes, so it is isomorphic to its side swap
        let p4 = TwoColouredGraph::path(4);
        assert!(is_isomorphic(&p4, &p4.swap_sides()));
    }

    #[test]
    fn empty_graphs() {
        assert_eq!(canonical_form(&TwoColouredGraph::empty(0, 0)), "0000");
        assert_eq!(canonical_form(&TwoColouredGraph::empty(2, 0)), "0200");
    }

    #[test]
    fn large_twin_classes_are_fast() {
        let k = TwoColouredGraph::complete(20, 20);
        let c = canonical(&k);
        assert_eq!(c.form.len(), 2 + 50);
    }

    fn arb_bigraph() -> impl Strategy<Value = TwoColouredGraph> {
        (0..=4usize, 0..=4usize).prop_flat_map(|(l, r)| {
            proptest::collection::vec(any::<bool>(), l * r).prop_map(move |bits| {
                let edges = (0..l * r).filter(|&k| bits[k]).map(|k| (k / r, k % r));
                TwoColouredGraph::new(l, r, edges).unwrap()
            })
        })
    }

    proptest! {
        #[test]
        fn invariant_under_relabelling(h in arb_bigraph(), seed in any::<u64>()) {
            use rand::{seq::SliceRandom, SeedableRng};
            let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
            let mut pl: Vec<usize> = (0..h.lsize()).collect();
            let mut pr: Vec<usize> = (0..h.rsize()).collect();
            pl.shuffle(&mut rng);
            pr.shuffle(&mut rng);
            let g = relabel(&h, &pl, &pr);
            prop_assert_eq!(canonical_form(&h), canonical_form(&g));
            let (lm, rm) = iso_colour_preserving(&h, &g).unwrap();
            prop_assert_eq!(relabel(&h, &lm, &rm), g);
        }

        #[test]
        fn agrees_with_brute_force(a in arb_bigraph(), b in arb_bigraph()) {
            prop_assert_eq!(is_isomorphic(&a, &b), oracle::naive_isomorphic(&a, &b));
        }
    }
}
