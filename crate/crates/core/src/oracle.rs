//! Slow reference implementations used to cross-check the optimised routines.
//! Everything here enumerates directly and is only meant for tiny inputs.

use num_bigint::BigUint;
use num_traits::{One, Zero};

use crate::graph::{Biclique, Graph, TwoColouredGraph};

fn for_each_map(n: usize, k: usize, mut f: impl FnMut(&[usize])) {
    if n > 0 && k == 0 {
        return;
    }
    let mut img = vec![0usize; n];
    loop {
        f(&img);
        let mut i = 0;
        loop {
            if i == n {
                return;
            }
            img[i] += 1;
            if img[i] < k {
                break;
            }
            img[i] = 0;
            i += 1;
        }
    }
}

/// Homomorphisms `g -> h` by trying every vertex map.
pub fn naive_col(h: &Graph, g: &Graph) -> BigUint {
    let edges = g.edges();
    let mut c = BigUint::zero();
    for_each_map(g.n(), h.n(), |img| {
        if edges.iter().all(|&(u, v)| h.has_edge(img[u], img[v])) {
            c += 1u32;
        }
    });
    c
}

fn fixcol_maps(h: &TwoColouredGraph, j: &TwoColouredGraph, injective: bool) -> BigUint {
    let edges = j.edges();
    let mut c = BigUint::zero();
    for_each_map(j.lsize(), h.lsize(), |li| {
        if injective && !distinct(li) {
            return;
        }
        for_each_map(j.rsize(), h.rsize(), |ri| {
            if injective && !distinct(ri) {
                return;
            }
            if edges.iter().all(|&(a, b)| h.has_edge(li[a], ri[b])) {
                c += 1u32;
            }
        });
    });
    c
}

fn distinct(v: &[usize]) -> bool {
    let mut s = v.to_vec();
    s.sort_unstable();
    s.windows(2).all(|w| w[0] != w[1])
}

/// Side-preserving homomorphisms by trying every pair of side maps.
pub fn naive_fixcol(h: &TwoColouredGraph, j: &TwoColouredGraph) -> BigUint {
    fixcol_maps(h, j, false)
}

pub fn naive_inj_fixcol(h: &TwoColouredGraph, j: &TwoColouredGraph) -> BigUint {
    fixcol_maps(h, j, true)
}

/// Independent sets (empty set included) by subset enumeration.
pub fn independent_sets(g: &Graph) -> BigUint {
    assert!(g.n() <= 24, "subset enumeration is limited to 24 vertices");
    let edges = g.edges();
    let mut c = BigUint::zero();
    for s in 0u64..(1u64 << g.n()) {
        if edges.iter().all(|&(u, v)| s >> u & 1 == 0 || s >> v & 1 == 0) {
            c += 1u32;
        }
    }
    c
}

pub fn surjections_by_enumeration(n: usize, k: usize) -> BigUint {
    if n == 0 {
        return if k == 0 { BigUint::one() } else { BigUint::zero() };
    }
    let mut c = BigUint::zero();
    for_each_map(n, k, |img| {
        let mut hit = vec![false; k];
        for &x in img {
            hit[x] = true;
        }
        if hit.iter().all(|&b| b) {
            c += 1u32;
        }
    });
    c
}

/// `k! * S(n, k)` from the Stirling recurrence.
pub fn surjections_by_stirling(n: usize, k: usize) -> BigUint {
    let mut s = vec![vec![BigUint::zero(); k + 1]; n + 1];
    s[0][0] = BigUint::one();
    for i in 1..=n {
        for j in 1..=k {
            s[i][j] = &s[i - 1][j] * BigUint::from(j) + &s[i - 1][j - 1];
        }
    }
    let fact: BigUint = (1..=k).map(BigUint::from).product();
    &s[n][k] * fact
}

/// Every biclique, by checking every pair of non-empty subsets.
pub fn all_bicliques(h: &TwoColouredGraph) -> Vec<Biclique> {
    assert!(h.lsize() <= 12 && h.rsize() <= 12);
    let mut out = Vec::new();
    for a in 1u32..(1 << h.lsize()) {
        for b in 1u32..(1 << h.rsize()) {
            let left: Vec<usize> = (0..h.lsize()).filter(|&i| a >> i & 1 == 1).collect();
            let right: Vec<usize> = (0..h.rsize()).filter(|&j| b >> j & 1 == 1).collect();
            let bc = Biclique { left, right };
            if bc.is_biclique_of(h) {
                out.push(bc);
            }
        }
    }
    out.sort();
    out
}

/// Bicliques not strictly contained in another biclique.
pub fn maximal_bicliques(h: &TwoColouredGraph) -> Vec<Biclique> {
    let all = all_bicliques(h);
    let sub = |x: &[usize], y: &[usize]| x.iter().all(|v| y.contains(v));
    all.iter()
        .filter(|b| !all.iter().any(|c| c != *b && sub(&b.left, &c.left) && sub(&b.right, &c.right)))
        .cloned()
        .collect()
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut p: Vec<usize> = (0..n).collect();
    fn heap(k: usize, p: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if k <= 1 {
            out.push(p.clone());
            return;
        }
        for i in 0..k {
            heap(k - 1, p, out);
            if k.is_multiple_of(2) {
                p.swap(i, k - 1);
            } else {
                p.swap(0, k - 1);
            }
        }
    }
    heap(n, &mut p, &mut out);
    out
}

/// Colour-preserving isomorphism by trying every pair of side permutations.
pub fn naive_isomorphic(a: &TwoColouredGraph, b: &TwoColouredGraph) -> bool {
    if a.lsize() != b.lsize() || a.rsize() != b.rsize() || a.edge_count() != b.edge_count() {
        return false;
    }
    assert!(a.lsize() <= 6 && a.rsize() <= 6);
    let rp = permutations(a.rsize());
    permutations(a.lsize()).iter().any(|pl| rp.iter().any(|pr| a.edges().iter().all(|&(i, j)| b.has_edge(pl[i], pr[j]))))
}
