//! Exact homomorphism counting.
//!
//! Instances are flattened to one vertex index space with a domain mask per vertex,
//! targets to a neighbourhood bitmask per vertex (so targets are limited to 128 vertices).
//! The backtracker branches only on a vertex cover of each instance component; every
//! remaining vertex has all its neighbours fixed by then and contributes a popcount factor.

use std::collections::{BTreeMap, HashMap};

use num_bigint::BigUint;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::graph::{Graph, TwoColouredGraph};

pub(crate) type Mask = u128;

pub(crate) const DEFAULT_WORK_LIMIT: u64 = 1_000_000_000;

/// Branch-node budget for a single counting call, `HOMLAB_MAX_WORK` if set.
pub fn work_limit() -> u64 {
    std::env::var("HOMLAB_MAX_WORK").ok().and_then(|s| s.trim().parse().ok()).unwrap_or(DEFAULT_WORK_LIMIT)
}

pub(crate) fn bits(mut m: Mask) -> impl Iterator<Item = usize> {
    std::iter::from_fn(move || {
        if m == 0 {
            None
        } else {
            let b = m.trailing_zeros() as usize;
            m &= m - 1;
            Some(b)
        }
    })
}

pub(crate) fn mask_of(it: impl IntoIterator<Item = usize>) -> Mask {
    it.into_iter().fold(0, |m, v| m | (1u128 << v))
}

pub(crate) fn full_mask(n: usize) -> Mask {
    if n >= 128 {
        Mask::MAX
    } else {
        (1u128 << n) - 1
    }
}

/// Target in flattened form.
#[derive(Clone, Debug)]
pub(crate) struct Target {
    pub nbr: Vec<Mask>,
    pub looped: Mask,
}

impl Target {
    pub fn from_graph(h: &Graph) -> Result<Self> {
        if h.n() > 128 {
            return Err(Error::TargetTooLarge(h.n()));
        }
        let nbr: Vec<Mask> = (0..h.n()).map(|u| mask_of(h.neighbours(u).iter().copied())).collect();
        let looped = mask_of((0..h.n()).filter(|&u| h.has_loop(u)));
        Ok(Target { nbr, looped })
    }

    /// Left vertices first, then right. Returns the target and the two side masks.
    pub fn from_bigraph(h: &TwoColouredGraph) -> Result<(Self, Mask, Mask)> {
        let (l, r) = (h.lsize(), h.rsize());
        if l + r > 128 {
            return Err(Error::TargetTooLarge(l + r));
        }
        let mut nbr = vec![0; l + r];
        for (i, j) in h.edges() {
            nbr[i] |= 1u128 << (l + j);
            nbr[l + j] |= 1u128 << i;
        }
        let lm = full_mask(l);
        let rm = full_mask(l + r) & !lm;
        Ok((Target { nbr, looped: 0 }, lm, rm))
    }
}

/// Instance in flattened form: adjacency lists, with loops recorded separately.
#[derive(Clone, Debug)]
pub(crate) struct Instance {
    pub adj: Vec<Vec<usize>>,
    pub looped: Vec<bool>,
}

impl Instance {
    pub fn from_graph(g: &Graph) -> Self {
        let adj = (0..g.n()).map(|u| g.neighbours(u).iter().copied().filter(|&v| v != u).collect()).collect();
        let looped = (0..g.n()).map(|u| g.has_loop(u)).collect();
        Instance { adj, looped }
    }

    pub fn from_bigraph(j: &TwoColouredGraph) -> Self {
        let l = j.lsize();
        let mut adj = vec![Vec::new(); j.order()];
        for (a, b) in j.edges() {
            adj[a].push(l + b);
            adj[l + b].push(a);
        }
        Instance { adj, looped: vec![false; j.order()] }
    }

    pub fn n(&self) -> usize {
        self.adj.len()
    }
}

/// Accumulator abstraction so the hot path can run in `u128` and fall back to big integers.
trait Acc: Clone {
    fn nothing() -> Self;
    fn from_small(x: u32) -> Self;
    fn mul(&self, o: &Self) -> Option<Self>;
    fn add(&self, o: &Self) -> Option<Self>;
    fn is_nothing(&self) -> bool;
    fn into_big(self) -> BigUint;
}

impl Acc for u128 {
    fn nothing() -> Self {
        0
    }
    fn from_small(x: u32) -> Self {
        x as u128
    }
    fn mul(&self, o: &Self) -> Option<Self> {
        self.checked_mul(*o)
    }
    fn add(&self, o: &Self) -> Option<Self> {
        self.checked_add(*o)
    }
    fn is_nothing(&self) -> bool {
        *self == 0
    }
    fn into_big(self) -> BigUint {
        BigUint::from(self)
    }
}

impl Acc for BigUint {
    fn nothing() -> Self {
        Zero::zero()
    }
    fn from_small(x: u32) -> Self {
        BigUint::from(x)
    }
    fn mul(&self, o: &Self) -> Option<Self> {
        Some(self * o)
    }
    fn add(&self, o: &Self) -> Option<Self> {
        Some(self + o)
    }
    fn is_nothing(&self) -> bool {
        Zero::is_zero(self)
    }
    fn into_big(self) -> BigUint {
        self
    }
}

/// A vertex outside the cover: its factor is known once its last neighbour is assigned.
#[derive(Clone, Debug)]
struct Leaf {
    dom: Mask,
    nbrs: Vec<usize>, // positions in the branch order
}

#[derive(Clone, Debug)]
struct Plan {
    dom: Vec<Mask>,
    back: Vec<Vec<usize>>,
    leaves_at: Vec<Vec<Leaf>>,
}

/// Greedy vertex cover of one component, ordered so each branch vertex tends to have
/// many earlier neighbours. Everything outside the cover becomes a leaf.
fn plan_component(inst: &Instance, comp: &[usize], dom: &[Mask]) -> Plan {
    let n = inst.n();
    let mut in_comp = vec![false; n];
    for &v in comp {
        in_comp[v] = true;
    }
    let mut rem_deg: Vec<usize> = (0..n).map(|v| if in_comp[v] { inst.adj[v].len() } else { 0 }).collect();
    let mut in_cover = vec![false; n];
    loop {
        let best = comp
            .iter()
            .copied()
            .filter(|&v| !in_cover[v] && rem_deg[v] > 0)
            .max_by_key(|&v| (rem_deg[v], std::cmp::Reverse(dom[v].count_ones()), std::cmp::Reverse(v)));
        let Some(v) = best else { break };
        in_cover[v] = true;
        for &w in &inst.adj[v] {
            if !in_cover[w] {
                rem_deg[w] = rem_deg[w].saturating_sub(1);
            }
        }
        rem_deg[v] = 0;
    }
    let cover: Vec<usize> = comp.iter().copied().filter(|&v| in_cover[v]).collect();
    // order the cover: most already-placed neighbours first, then degree, then small domain
    let mut order: Vec<usize> = Vec::with_capacity(cover.len());
    let mut pos = vec![usize::MAX; n];
    let mut placed_nbrs = vec![0usize; n];
    let mut left: Vec<usize> = cover.clone();
    while !left.is_empty() {
        let (k, _) = left
            .iter()
            .enumerate()
            .max_by_key(|&(_, &v)| (placed_nbrs[v], inst.adj[v].len(), std::cmp::Reverse(dom[v].count_ones()), std::cmp::Reverse(v)))
            .unwrap();
        let v = left.swap_remove(k);
        pos[v] = order.len();
        order.push(v);
        for &w in &inst.adj[v] {
            placed_nbrs[w] += 1;
        }
    }
    let back: Vec<Vec<usize>> =
        order.iter().enumerate().map(|(k, &v)| inst.adj[v].iter().map(|&w| pos[w]).filter(|&p| p < k).collect()).collect();
    let mut leaves_at = vec![Vec::new(); order.len()];
    for &v in comp {
        if in_cover[v] {
            continue;
        }
        let nbrs: Vec<usize> = inst.adj[v].iter().map(|&w| pos[w]).collect();
        let last = *nbrs.iter().max().expect("leaf in a non-trivial component has a neighbour");
        leaves_at[last].push(Leaf { dom: dom[v], nbrs });
    }
    Plan { dom: order.iter().map(|&v| dom[v]).collect(), back, leaves_at }
}

struct Runner<'a> {
    tgt: &'a Target,
    plan: &'a Plan,
    img: Vec<usize>,
    nodes: u64,
    limit: u64,
}

enum Stop {
    Overflow,
    Budget,
}

impl Runner<'_> {
    fn run<A: Acc>(&mut self, k: usize) -> std::result::Result<A, Stop> {
        if k == self.plan.dom.len() {
            return Ok(A::from_small(1));
        }
        self.nodes += 1;
        if self.nodes > self.limit {
            return Err(Stop::Budget);
        }
        let mut cand = self.plan.dom[k];
        for &p in &self.plan.back[k] {
            cand &= self.tgt.nbr[self.img[p]];
        }
        let mut total = A::nothing();
        for y in bits(cand) {
            self.img[k] = y;
            let mut factor = A::from_small(1);
            let mut dead = false;
            for leaf in &self.plan.leaves_at[k] {
                let mut m = leaf.dom;
                for &p in &leaf.nbrs {
                    m &= self.tgt.nbr[self.img[p]];
                }
                if m == 0 {
                    dead = true;
                    break;
                }
                factor = factor.mul(&A::from_small(m.count_ones())).ok_or(Stop::Overflow)?;
            }
            if dead {
                continue;
            }
            let sub: A = self.run(k + 1)?;
            if sub.is_nothing() {
                continue;
            }
            total = total.add(&factor.mul(&sub).ok_or(Stop::Overflow)?).ok_or(Stop::Overflow)?;
        }
        Ok(total)
    }
}

/// Count maps `inst -> tgt` with `v` sent into `dom[v]`. Returns the count and the number
/// of branch nodes visited.
pub(crate) fn count_with_domains(inst: &Instance, tgt: &Target, dom: &[Mask], limit: u64) -> Result<(BigUint, u64)> {
    let mut dom: Vec<Mask> = dom.to_vec();
    for v in 0..inst.n() {
        if inst.looped[v] {
            dom[v] &= tgt.looped;
        }
    }
    let mut total = BigUint::one();
    let mut nodes = 0u64;
    for comp in crate::graph::components(&inst.adj) {
        if comp.len() == 1 {
            let c = dom[comp[0]].count_ones();
            if c == 0 {
                return Ok((BigUint::zero(), nodes));
            }
            total *= c;
            continue;
        }
        let plan = plan_component(inst, &comp, &dom);
        let mut runner = Runner { tgt, plan: &plan, img: vec![0; plan.dom.len()], nodes: 0, limit: limit.saturating_sub(nodes) };
        let c = match runner.run::<u128>(0) {
            Ok(c) => c.into_big(),
            Err(Stop::Budget) => return Err(Error::WorkBudget(limit)),
            Err(Stop::Overflow) => {
                runner.nodes = 0;
                match runner.run::<BigUint>(0) {
                    Ok(c) => c,
                    Err(_) => return Err(Error::WorkBudget(limit)),
                }
            }
        };
        nodes += runner.nodes;
        if c.is_zero() {
            return Ok((c, nodes));
        }
        total *= c;
    }
    Ok((total, nodes))
}

/// Number of homomorphisms `g -> h` (the COL count).
pub fn count_col(h: &Graph, g: &Graph) -> Result<BigUint> {
    let tgt = Target::from_graph(h)?;
    let inst = Instance::from_graph(g);
    let dom = vec![full_mask(h.n()); g.n()];
    Ok(count_with_domains(&inst, &tgt, &dom, work_limit())?.0)
}

/// Number of side-preserving homomorphisms `j -> h` (the FixCOL count).
pub fn count_fixcol(h: &TwoColouredGraph, j: &TwoColouredGraph) -> Result<BigUint> {
    let (tgt, lm, rm) = Target::from_bigraph(h)?;
    let inst = Instance::from_bigraph(j);
    let dom = side_domains(j, lm, rm);
    Ok(count_with_domains(&inst, &tgt, &dom, work_limit())?.0)
}

pub(crate) fn side_domains(j: &TwoColouredGraph, lm: Mask, rm: Mask) -> Vec<Mask> {
    (0..j.order()).map(|v| if v < j.lsize() { lm } else { rm }).collect()
}

/// Number of injective side-preserving homomorphisms `j -> h`.
pub fn count_inj_fixcol(h: &TwoColouredGraph, j: &TwoColouredGraph) -> Result<BigUint> {
    if j.lsize() > h.lsize() || j.rsize() > h.rsize() {
        return Ok(BigUint::zero());
    }
    let (tgt, lm, rm) = Target::from_bigraph(h)?;
    let inst = Instance::from_bigraph(j);
    let dom = side_domains(j, lm, rm);
    // any order that keeps components contiguous and prefers placed neighbours
    let n = inst.n();
    let mut order = Vec::with_capacity(n);
    let mut placed = vec![false; n];
    for comp in crate::graph::components(&inst.adj) {
        let mut todo = comp.clone();
        while !todo.is_empty() {
            let (k, _) = todo
                .iter()
                .enumerate()
                .max_by_key(|&(_, &v)| (inst.adj[v].iter().filter(|&&w| placed[w]).count(), inst.adj[v].len()))
                .unwrap();
            let v = todo.swap_remove(k);
            placed[v] = true;
            order.push(v);
        }
    }
    let mut pos = vec![0; n];
    for (k, &v) in order.iter().enumerate() {
        pos[v] = k;
    }
    let back: Vec<Vec<usize>> =
        order.iter().enumerate().map(|(k, &v)| inst.adj[v].iter().map(|&w| pos[w]).filter(|&p| p < k).collect()).collect();
    let doms: Vec<Mask> = order.iter().map(|&v| dom[v]).collect();
    let limit = work_limit();
    let mut nodes = 0u64;
    let mut img = vec![0usize; n];
    fn go(k: usize, doms: &[Mask], back: &[Vec<usize>], tgt: &Target, img: &mut [usize], used: Mask, nodes: &mut u64, limit: u64) -> Result<BigUint> {
        if k == doms.len() {
            return Ok(BigUint::one());
        }
        *nodes += 1;
        if *nodes > limit {
            return Err(Error::WorkBudget(limit));
        }
        let mut cand = doms[k] & !used;
        for &p in &back[k] {
            cand &= tgt.nbr[img[p]];
        }
        let mut total = BigUint::zero();
        for y in bits(cand) {
            img[k] = y;
            total += go(k + 1, doms, back, tgt, img, used | (1u128 << y), nodes, limit)?;
        }
        Ok(total)
    }
    go(0, &doms, &back, &tgt, &mut img, 0, &mut nodes, limit)
}

/// The target with one looped vertex `0` and a pendant vertex `1`.
pub fn independent_set_target() -> Graph {
    Graph::new(2, [(0, 0), (0, 1)]).expect("fixed graph")
}

/// Number of independent sets of `g` (the empty set included), counted as
/// homomorphisms into the looped-vertex-plus-pendant target.
pub fn count_bis(g: &TwoColouredGraph) -> Result<BigUint> {
    count_col(&independent_set_target(), &g.as_graph())
}

/// Number of surjections from an `n`-set onto a `k`-set, by inclusion-exclusion.
pub fn surjections(n: u64, k: u64) -> BigUint {
    use num_bigint::BigInt;
    let mut acc = BigInt::zero();
    let mut binom = BigInt::one();
    for i in 0..=k {
        let term = &binom * BigInt::from(k - i).pow(n as u32);
        if i % 2 == 0 {
            acc += term;
        } else {
            acc -= term;
        }
        binom = binom * BigInt::from(k - i) / BigInt::from(i + 1);
    }
    acc.to_biguint().expect("surjection count is non-negative")
}

/// All set partitions of `0..m` as restricted growth strings, in lexicographic order.
pub fn set_partitions(m: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = vec![0usize; m];
    fn rec(i: usize, maxb: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if i == cur.len() {
            out.push(cur.clone());
            return;
        }
        for b in 0..=maxb {
            cur[i] = b;
            rec(i + 1, if b == maxb { maxb + 1 } else { maxb }, cur, out);
        }
    }
    if m == 0 {
        out.push(Vec::new());
    } else {
        rec(0, 0, &mut cur, &mut out);
    }
    out
}

/// Largest side size accepted by [`partition_identity`].
pub const PARTITION_SIDE_LIMIT: usize = 5;

/// Both sides of `FixCOL_h(j) = sum over partition pairs of InjFixCOL_h(j / partitions)`.
pub fn partition_identity(h: &TwoColouredGraph, j: &TwoColouredGraph) -> Result<(BigUint, BigUint)> {
    if j.lsize() > PARTITION_SIDE_LIMIT || j.rsize() > PARTITION_SIDE_LIMIT {
        return Err(Error::Precondition(format!("partition identity needs at most {PARTITION_SIDE_LIMIT} vertices per side")));
    }
    let direct = count_fixcol(h, j)?;
    let mut sum = BigUint::zero();
    let lp = set_partitions(j.lsize());
    let rp = set_partitions(j.rsize());
    for a in &lp {
        for b in &rp {
            sum += count_inj_fixcol(h, &j.quotient(a, b))?;
        }
    }
    Ok((direct, sum))
}

/// Counts bucketed by a key computed from the images of `key` vertices.
///
/// Every assignment of the key vertices is enumerated; the remaining vertices are then
/// counted exactly under the induced domain restrictions (memoised by restriction).
pub(crate) fn count_bucketed<K: Ord>(
    inst: &Instance,
    tgt: &Target,
    dom: &[Mask],
    key: &[usize],
    key_fn: impl Fn(&[usize]) -> K,
    limit: u64,
) -> Result<BTreeMap<K, BigUint>> {
    let n = inst.n();
    let mut is_key = vec![usize::MAX; n];
    for (k, &v) in key.iter().enumerate() {
        is_key[v] = k;
    }
    let mut dom: Vec<Mask> = dom.to_vec();
    for v in 0..n {
        if inst.looped[v] {
            dom[v] &= tgt.looped;
        }
    }
    let rest: Vec<usize> = (0..n).filter(|&v| is_key[v] == usize::MAX).collect();
    let mut rest_pos = vec![usize::MAX; n];
    for (k, &v) in rest.iter().enumerate() {
        rest_pos[v] = k;
    }
    let sub = Instance {
        adj: rest.iter().map(|&v| inst.adj[v].iter().filter(|&&w| rest_pos[w] != usize::MAX).map(|&w| rest_pos[w]).collect()).collect(),
        looped: vec![false; rest.len()],
    };
    // key vertices adjacent to each rest vertex
    let key_nbrs: Vec<Vec<usize>> =
        rest.iter().map(|&v| inst.adj[v].iter().filter(|&&w| is_key[w] != usize::MAX).map(|&w| is_key[w]).collect()).collect();
    let key_back: Vec<Vec<usize>> =
        key.iter().enumerate().map(|(k, &v)| inst.adj[v].iter().map(|&w| is_key[w]).filter(|&p| p < k).collect()).collect();

    let mut out: BTreeMap<K, BigUint> = BTreeMap::new();
    let mut memo: HashMap<Vec<Mask>, BigUint> = HashMap::new();
    let mut nodes = 0u64;
    let mut img = vec![0usize; key.len()];
    // iterative DFS over key assignments
    let mut cands: Vec<Mask> = vec![0; key.len() + 1];
    let mut depth = 0usize;
    if key.is_empty() {
        let (c, _) = count_with_domains(&sub, tgt, &rest.iter().map(|&v| dom[v]).collect::<Vec<_>>(), limit)?;
        if !c.is_zero() {
            out.insert(key_fn(&[]), c);
        }
        return Ok(out);
    }
    let cand_at = |k: usize, img: &[usize]| {
        let mut c = dom[key[k]];
        for &p in &key_back[k] {
            c &= tgt.nbr[img[p]];
        }
        c
    };
    cands[0] = cand_at(0, &img);
    loop {
        if cands[depth] == 0 {
            if depth == 0 {
                break;
            }
            depth -= 1;
            continue;
        }
        let y = cands[depth].trailing_zeros() as usize;
        cands[depth] &= cands[depth] - 1;
        img[depth] = y;
        nodes += 1;
        if nodes > limit {
            return Err(Error::WorkBudget(limit));
        }
        if depth + 1 < key.len() {
            depth += 1;
            cands[depth] = cand_at(depth, &img);
            continue;
        }
        // full key assignment
        let mut rdom = Vec::with_capacity(rest.len());
        let mut dead = false;
        for (k, &v) in rest.iter().enumerate() {
            let mut m = dom[v];
            for &p in &key_nbrs[k] {
                m &= tgt.nbr[img[p]];
            }
            if m == 0 {
                dead = true;
                break;
            }
            rdom.push(m);
        }
        if dead {
            continue;
        }
        let c = match memo.get(&rdom) {
            Some(c) => c.clone(),
            None => {
                let (c, used) = count_with_domains(&sub, tgt, &rdom, limit.saturating_sub(nodes))?;
                nodes += used;
                memo.insert(rdom, c.clone());
                c
            }
        };
        if !c.is_zero() {
            *out.entry(key_fn(&img)).or_insert_with(BigUint::zero) += c;
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oracle;
    use proptest::prelude::*;

    #[test]
    fn fixcol_small_values() {
        let k11 = TwoColouredGraph::complete(1, 1);
        let p4 = TwoColouredGraph::path(4);
        assert_eq!(count_fixcol(&p4, &k11).unwrap(), BigUint::from(3u32));
        assert_eq!(count_fixcol(&p4, &TwoColouredGraph::empty(0, 0)).unwrap(), BigUint::one());
        assert_eq!(count_fixcol(&p4, &TwoColouredGraph::empty(2, 1)).unwrap(), BigUint::from(8u32));
        // P3 into P4: centre maps to a left vertex, endpoints into its neighbourhood
        assert_eq!(count_fixcol(&p4, &TwoColouredGraph::path(3)).unwrap(), BigUint::from(1u32 + 4));
    }

    #[test]
    fn col_small_values() {
        let k3 = Graph::new(3, [(0, 1), (1, 2), (0, 2)]).unwrap();
        // proper 3-colourings of a triangle
        assert_eq!(count_col(&k3, &k3).unwrap(), BigUint::from(6u32));
        let edge = Graph::new(2, [(0, 1)]).unwrap();
        assert_eq!(count_col(&edge, &k3).unwrap(), BigUint::zero());
        let looped = Graph::new(1, [(0, 0)]).unwrap();
        assert_eq!(count_col(&edge, &looped).unwrap(), BigUint::zero());
        assert_eq!(count_col(&looped, &k3).unwrap(), BigUint::one());
    }

    #[test]
    fn bis_of_small_graphs() {
        assert_eq!(count_bis(&TwoColouredGraph::empty(1, 0)).unwrap(), BigUint::from(2u32));
        assert_eq!(count_bis(&TwoColouredGraph::complete(1, 1)).unwrap(), BigUint::from(3u32));
        // P4 has 8 independent sets
        assert_eq!(count_bis(&TwoColouredGraph::path(4)).unwrap(), BigUint::from(8u32));
        // K_{2,2}: 1 + 4 + 2 = 7 (empty, singletons, each side pair)
        assert_eq!(count_bis(&TwoColouredGraph::complete(2, 2)).unwrap(), BigUint::from(7u32));
    }

    #[test]
    fn surjection_values() {
        assert_eq!(surjections(3, 2), BigUint::from(6u32));
        assert_eq!(surjections(4, 2), BigUint::from(14u32));
        assert_eq!(surjections(5, 3), BigUint::from(150u32));
        assert_eq!(surjections(0, 0), BigUint::one());
        assert_eq!(surjections(2, 3), BigUint::zero());
        assert_eq!(surjections(3, 0), BigUint::zero());
    }

    #[test]
    fn partition_counts_are_bell_numbers() {
        let bell = [1, 1, 2, 5, 15, 52];
        for (m, &b) in bell.iter().enumerate() {
            assert_eq!(set_partitions(m).len(), b);
        }
    }

    #[test]
    fn partition_identity_guard() {
        let big = TwoColouredGraph::empty(6, 1);
        assert!(matches!(partition_identity(&TwoColouredGraph::path(4), &big), Err(Error::Precondition(_))));
    }

    #[test]
    fn work_budget_is_reported() {
        let h = TwoColouredGraph::complete(4, 4);
        let j = TwoColouredGraph::path(9);
        let (tgt, lm, rm) = Target::from_bigraph(&h).unwrap();
        let inst = Instance::from_bigraph(&j);
        let dom = side_domains(&j, lm, rm);
        assert_eq!(count_with_domains(&inst, &tgt, &dom, 3).unwrap_err(), Error::WorkBudget(3));
    }

    #[test]
    fn large_counts_fall_back_to_big_integers() {
        // 6 * 9^50 does not fit in u128
        let star = TwoColouredGraph::complete(1, 50);
        let h = TwoColouredGraph::complete(6, 9);
        let expect = BigUint::from(6u32) * BigUint::from(9u32).pow(50);
        assert_eq!(count_fixcol(&h, &star).unwrap(), expect);
    }

    #[test]
    fn surjections_match_enumeration() {
        for n in 0..6u64 {
            for k in 0..5u64 {
                assert_eq!(surjections(n, k), oracle::surjections_by_enumeration(n as usize, k as usize), "T({n},{k})");
                assert_eq!(surjections(n, k), oracle::surjections_by_stirling(n as usize, k as usize), "T({n},{k})");
            }
        }
    }

    fn arb_bigraph(maxl: usize, maxr: usize) -> impl Strategy<Value = TwoColouredGraph> {
        (0..=maxl, 0..=maxr).prop_flat_map(|(l, r)| {
            proptest::collection::vec(any::<bool>(), l * r).prop_map(move |bits| {
                let edges = (0..l * r).filter(|&k| bits[k]).map(|k| (k / r.max(1), k % r.max(1)));
                TwoColouredGraph::new(l, r, edges).unwrap()
            })
        })
    }

    fn arb_graph(maxn: usize) -> impl Strategy<Value = Graph> {
        (0..=maxn).prop_flat_map(|n| {
            proptest::collection::vec(any::<bool>(), n * (n + 1) / 2).prop_map(move |bits| {
                let mut edges = Vec::new();
                let mut k = 0;
                for u in 0..n {
                    for v in u..n {
                        if bits[k] {
                            edges.push((u, v));
                        }
                        k += 1;
                    }
                }
                Graph::new(n, edges).unwrap()
            })
        })
    }

    proptest! {
        #[test]
        fn fixcol_matches_naive(h in arb_bigraph(3, 3), j in arb_bigraph(3, 3)) {
            prop_assert_eq!(count_fixcol(&h, &j).unwrap(), oracle::naive_fixcol(&h, &j));
        }

        #[test]
        fn col_matches_naive(h in arb_graph(3), g in arb_graph(5)) {
            prop_assert_eq!(count_col(&h, &g).unwrap(), oracle::naive_col(&h, &g));
        }

        #[test]
        fn inj_matches_naive(h in arb_bigraph(3, 3), j in arb_bigraph(3, 3)) {
            prop_assert_eq!(count_inj_fixcol(&h, &j).unwrap(), oracle::naive_inj_fixcol(&h, &j));
        }

        #[test]
        fn bis_matches_subsets(g in arb_bigraph(4, 4)) {
            prop_assert_eq!(count_bis(&g).unwrap(), oracle::independent_sets(&g.as_graph()));
        }

        #[test]
        fn fixcol_is_multiplicative_over_unions(h in arb_bigraph(3, 3), a in arb_bigraph(2, 2), b in arb_bigraph(2, 2)) {
            let u = a.disjoint_union(&b);
            prop_assert_eq!(count_fixcol(&h, &u).unwrap(), count_fixcol(&h, &a).unwrap() * count_fixcol(&h, &b).unwrap());
        }

        #[test]
        fn fixcol_is_multiplicative_over_products(h1 in arb_bigraph(2, 2), h2 in arb_bigraph(2, 2), j in arb_bigraph(2, 3)) {
            let t = h1.tensor(&h2);
            prop_assert_eq!(count_fixcol(&t, &j).unwrap(), count_fixcol(&h1, &j).unwrap() * count_fixcol(&h2, &j).unwrap());
        }

        #[test]
        fn partition_sum_matches(h in arb_bigraph(3, 3), j in arb_bigraph(3, 3)) {
            let (direct, sum) = partition_identity(&h, &j).unwrap();
            prop_assert_eq!(direct, sum);
        }

        #[test]
        fn col_of_connected_bipartite_via_double_cover(h in arb_graph(3), extra in arb_bigraph(3, 3)) {
            // add a double star through left 0 and right 0 so the instance is connected
            let (l, r) = (extra.lsize().max(1), extra.rsize().max(1));
            let mut edges: Vec<(usize, usize)> = extra.edges();
            edges.extend((0..l).map(|i| (i, 0)));
            edges.extend((0..r).map(|k| (0, k)));
            edges.sort_unstable();
            edges.dedup();
            let j = TwoColouredGraph::new(l, r, edges).unwrap();
            let g = j.as_graph();
            let b = TwoColouredGraph::bip(&h);
            let col = count_col(&h, &g).unwrap();
            prop_assert_eq!(&count_fixcol(&b, &j).unwrap(), &col);
            prop_assert_eq!(&count_fixcol(&b, &j.swap_sides()).unwrap(), &col);
            // and uncoloured maps into the cover split over the two orientations
            prop_assert_eq!(count_col(&b.as_graph(), &g).unwrap(), col * 2u32);
        }
    }
}
