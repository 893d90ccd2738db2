//! Reduction gadgets, built as explicit graphs and checked by exhaustive phase decomposition.
//!
//! Each gadget has a few key vertices whose images define a phase. The actual count of a
//! phase comes from enumerating every key assignment and counting the remaining vertices
//! exactly. The predicted count comes from the closed-form product over the pieces hanging
//! off the key vertices. Those two routes must agree on every phase, and the phases must
//! sum to the count of the whole gadget taken directly.

use std::collections::BTreeMap;

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::Serialize;

use crate::biclique::{all_bicliques, dominance, gamma_dominating_set, GammaValue};
use crate::compare::Comparator;
use crate::count::{count_bis, count_bucketed, count_col, count_fixcol, full_mask, side_domains, surjections, work_limit, Instance, Target};
use crate::error::{Error, Result};
use crate::graph::{Biclique, Graph, TwoColouredGraph};
use crate::real::{decimal, ln_int, Interval};
use crate::structure::{classify_components, derived_subgraph, edge_bigraph, Component};

/// Largest gadget, in vertices, that the exhaustive phase check accepts.
pub const GADGET_VERTEX_LIMIT: usize = 22;

/// Largest `N` accepted by the exhaustive scan in [`dirichlet`].
pub const DIRICHLET_SCAN_LIMIT: u64 = 100_000;

fn guard(order: usize) -> Result<()> {
    if order > GADGET_VERTEX_LIMIT {
        return Err(Error::Precondition(format!("gadget has {order} vertices, limit is {GADGET_VERTEX_LIMIT}")));
    }
    Ok(())
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct GadgetParams {
    pub a: usize,
    pub b: usize,
    pub copies_gamma: usize,
    pub copies_j: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Phase<K> {
    pub key: K,
    #[serde(serialize_with = "crate::ser::big")]
    pub predicted: BigUint,
    #[serde(serialize_with = "crate::ser::big")]
    pub actual: BigUint,
}

impl<K> Phase<K> {
    pub fn matches(&self) -> bool {
        self.predicted == self.actual
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PhaseReport<K> {
    pub gadget_vertices: usize,
    pub gadget_edges: usize,
    pub phases: Vec<Phase<K>>,
    #[serde(serialize_with = "crate::ser::big")]
    pub total: BigUint,
    #[serde(serialize_with = "crate::ser::big")]
    pub sum_actual: BigUint,
    pub all_match: bool,
    pub sum_matches: bool,
}

impl<K> PhaseReport<K> {
    pub fn ok(&self) -> bool {
        self.all_match && self.sum_matches
    }
}

fn merge<K: Ord + Clone>(predicted: BTreeMap<K, BigUint>, actual: BTreeMap<K, BigUint>) -> Vec<Phase<K>> {
    let mut keys: Vec<K> = predicted.keys().chain(actual.keys()).cloned().collect();
    keys.sort();
    keys.dedup();
    keys.into_iter()
        .map(|k| Phase {
            predicted: predicted.get(&k).cloned().unwrap_or_else(BigUint::zero),
            actual: actual.get(&k).cloned().unwrap_or_else(BigUint::zero),
            key: k,
        })
        .filter(|p| !(p.predicted.is_zero() && p.actual.is_zero()))
        .collect()
}

fn report<K: Ord + Clone>(order: usize, edges: usize, predicted: BTreeMap<K, BigUint>, actual: BTreeMap<K, BigUint>, total: BigUint) -> PhaseReport<K> {
    let sum_actual: BigUint = actual.values().sum();
    let phases = merge(predicted, actual);
    let all_match = phases.iter().all(Phase::matches);
    PhaseReport { gadget_vertices: order, gadget_edges: edges, sum_matches: sum_actual == total, phases, total, sum_actual, all_match }
}

/// Side-preserving counts of `j` into `h`, bucketed by the images of the flattened `key` vertices.
fn fixcol_phases<K: Ord>(h: &TwoColouredGraph, j: &TwoColouredGraph, key: &[usize], key_fn: impl Fn(&[usize]) -> K) -> Result<BTreeMap<K, BigUint>> {
    let (tgt, lm, rm) = Target::from_bigraph(h)?;
    let inst = Instance::from_bigraph(j);
    count_bucketed(&inst, &tgt, &side_domains(j, lm, rm), key, key_fn, work_limit())
}

/// Split flattened target images into a biclique (right images are offset by `hl`).
fn image_biclique(imgs: &[usize], a: usize, hl: usize) -> Biclique {
    Biclique::new(imgs[..a].to_vec(), imgs[a..].iter().map(|&y| y - hl).collect())
}

fn connected(g: &TwoColouredGraph) -> bool {
    g.order() > 0 && g.as_graph().components().len() == 1
}

/// `K_{a,b}` with `g'`, copies of `gamma` and copies of `j` attached below its right part.
///
/// Left `0..a` and right `0..b` are the `K_{a,b}`; then `g'`, the `gamma` copies and the `j`
/// copies follow in that order on both sides. Every right vertex of `K_{a,b}` is joined to
/// every left vertex outside it.
pub fn build_kab_gadget(gp: &TwoColouredGraph, gamma: &TwoColouredGraph, j: &TwoColouredGraph, p: GadgetParams) -> Result<TwoColouredGraph> {
    if p.a == 0 || p.b == 0 {
        return Err(Error::Precondition("a and b must be positive".into()));
    }
    if !connected(gp) || gp.has_isolated_right() {
        return Err(Error::Precondition("g' must be connected with no isolated right vertex".into()));
    }
    if (p.copies_gamma > 0 && gamma.has_isolated_right()) || (p.copies_j > 0 && j.has_isolated_right()) {
        return Err(Error::Precondition("gamma and j must have no isolated right vertex".into()));
    }
    let body = gp.disjoint_union(&gamma.copies(p.copies_gamma)).disjoint_union(&j.copies(p.copies_j));
    guard(p.a + p.b + body.order())?;
    let g = TwoColouredGraph::complete(p.a, p.b).disjoint_union(&body);
    let mut edges = g.edges();
    for x in p.a..g.lsize() {
        for y in 0..p.b {
            edges.push((x, y));
        }
    }
    TwoColouredGraph::new(g.lsize(), g.rsize(), edges)
}

/// Phases of the `K_{a,b}` gadget keyed by the image sets of its two sides.
pub fn phase_decompose_kab(
    h: &TwoColouredGraph,
    gp: &TwoColouredGraph,
    gamma: &TwoColouredGraph,
    j: &TwoColouredGraph,
    p: GadgetParams,
) -> Result<PhaseReport<Biclique>> {
    let g = build_kab_gadget(gp, gamma, j, p)?;
    let gl = g.lsize();
    let key: Vec<usize> = (0..p.a).chain((0..p.b).map(|y| gl + y)).collect();
    let hl = h.lsize();
    let actual = fixcol_phases(h, &g, &key, |imgs| image_biclique(imgs, p.a, hl))?;
    let mut predicted = BTreeMap::new();
    for s in all_bicliques(h)? {
        if s.left.len() > p.a || s.right.len() > p.b {
            continue;
        }
        let hs = derived_subgraph(h, &s).graph;
        let mut v = surjections(p.a as u64, s.left.len() as u64) * surjections(p.b as u64, s.right.len() as u64);
        if p.copies_gamma > 0 {
            v *= count_fixcol(&hs, gamma)?.pow(p.copies_gamma as u32);
        }
        if p.copies_j > 0 {
            v *= count_fixcol(&hs, j)?.pow(p.copies_j as u32);
        }
        v *= count_fixcol(&hs, gp)?;
        if !v.is_zero() {
            predicted.insert(s, v);
        }
    }
    let total = count_fixcol(h, &g)?;
    Ok(report(g.order(), g.edge_count(), predicted, actual, total))
}

/// Left and right indices of one `K_{a,b}` inside a larger gadget.
pub type Block = (Vec<usize>, Vec<usize>);

/// One copy of the `K_{a,b}`-plus-`gamma` gadget per vertex of `g'`, with the right part of
/// the copy for a left vertex `u` joined to the left part of the copy for each neighbour of `u`.
/// Also returns, per vertex of `g'` (left vertices first), the left and right indices of its `K_{a,b}`.
pub fn build_bis_gadget(gp: &TwoColouredGraph, gamma: &TwoColouredGraph, p: GadgetParams) -> Result<(TwoColouredGraph, Vec<Block>)> {
    if p.a == 0 || p.b == 0 {
        return Err(Error::Precondition("a and b must be positive".into()));
    }
    if p.copies_gamma > 0 && gamma.has_isolated_right() {
        return Err(Error::Precondition("gamma must have no isolated right vertex".into()));
    }
    let unit = {
        let g = TwoColouredGraph::complete(p.a, p.b).disjoint_union(&gamma.copies(p.copies_gamma));
        let mut e = g.edges();
        for x in p.a..g.lsize() {
            for y in 0..p.b {
                e.push((x, y));
            }
        }
        TwoColouredGraph::new(g.lsize(), g.rsize(), e)?
    };
    let n = gp.order();
    guard(n * unit.order())?;
    let (ul, ur) = (unit.lsize(), unit.rsize());
    let whole = unit.copies(n);
    let blocks: Vec<Block> = (0..n).map(|u| ((u * ul..u * ul + p.a).collect(), (u * ur..u * ur + p.b).collect())).collect();
    let mut edges = whole.edges();
    for (x, y) in gp.edges() {
        let (u, v) = (x, gp.lsize() + y);
        for &r in &blocks[u].1 {
            for &l in &blocks[v].0 {
                edges.push((l, r));
            }
        }
    }
    Ok((TwoColouredGraph::new(whole.lsize(), whole.rsize(), edges)?, blocks))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GoodVector {
    /// Per vertex of `g'`: 1 for `(F_L, V_R)`, 2 for `(V_L, F_R)`.
    pub phases: Vec<u8>,
    pub permissible: bool,
    #[serde(serialize_with = "crate::ser::big")]
    pub actual: BigUint,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BisReport {
    pub gadget_vertices: usize,
    pub distinct_phase_vectors: usize,
    pub good: Vec<GoodVector>,
    pub permissible_count: usize,
    #[serde(serialize_with = "crate::ser::big")]
    pub independent_sets: BigUint,
    #[serde(serialize_with = "crate::ser::big")]
    pub bad_total: BigUint,
    #[serde(serialize_with = "crate::ser::big")]
    pub total: BigUint,
    pub non_permissible_zero: bool,
    pub permissible_positive: bool,
    pub count_matches: bool,
    pub sum_matches: bool,
}

impl BisReport {
    pub fn ok(&self) -> bool {
        self.non_permissible_zero && self.permissible_positive && self.count_matches && self.sum_matches
    }
}

/// Phase vectors of the per-vertex gadget, with the permissible good ones counted against the
/// independent sets of `g'`.
pub fn phase_decompose_bis(h: &TwoColouredGraph, gp: &TwoColouredGraph, gamma: &TwoColouredGraph, p: GadgetParams) -> Result<BisReport> {
    let d = dominance(h, &Comparator::default())?;
    let (g, blocks) = build_bis_gadget(gp, gamma, p)?;
    let gl = g.lsize();
    let hl = h.lsize();
    let key: Vec<usize> = blocks.iter().flat_map(|(l, r)| l.iter().copied().chain(r.iter().map(|&y| gl + y))).collect();
    let w = p.a + p.b;
    let actual = fixcol_phases(h, &g, &key, |imgs| imgs.chunks(w).map(|c| image_biclique(c, p.a, hl)).collect::<Vec<_>>())?;
    let total = count_fixcol(h, &g)?;
    let n = gp.order();
    let mut good = Vec::new();
    let mut good_sum = BigUint::zero();
    for mask in 0u64..(1u64 << n) {
        let phases: Vec<u8> = (0..n).map(|u| if mask >> u & 1 == 1 { 2 } else { 1 }).collect();
        let permissible = gp.edges().into_iter().all(|(x, y)| !(phases[x] == 1 && phases[gp.lsize() + y] == 2));
        let key: Vec<Biclique> = phases.iter().map(|&t| d.extremal[t as usize - 1].clone()).collect();
        let a = actual.get(&key).cloned().unwrap_or_else(BigUint::zero);
        good_sum += &a;
        good.push(GoodVector { phases, permissible, actual: a });
    }
    let permissible_count = good.iter().filter(|v| v.permissible).count();
    let independent_sets = count_bis(gp)?;
    let sum_actual: BigUint = actual.values().sum();
    Ok(BisReport {
        gadget_vertices: g.order(),
        distinct_phase_vectors: actual.len(),
        non_permissible_zero: good.iter().filter(|v| !v.permissible).all(|v| v.actual.is_zero()),
        permissible_positive: good.iter().filter(|v| v.permissible).all(|v| !v.actual.is_zero()),
        count_matches: BigUint::from(permissible_count) == independent_sets,
        sum_matches: sum_actual == total,
        bad_total: &sum_actual - &good_sum,
        good,
        permissible_count,
        independent_sets,
        total,
    })
}

/// Uncoloured gadget: an edge `w_A w_B`, `|A|` pendant vertices on `w_A`, `|B|` on `w_B`,
/// and `g'` plus copies of `j` with right parts joined to `w_A` and left parts to `w_B`.
/// Vertices: `w_A = 0`, `w_B = 1`, then `A`, `B`, then each bipartite piece left before right.
pub fn build_col_gadget(gp: &TwoColouredGraph, j: &TwoColouredGraph, a_size: usize, b_size: usize, copies_j: usize) -> Result<Graph> {
    let body = gp.disjoint_union(&j.copies(copies_j));
    let n = 2 + a_size + b_size + body.order();
    guard(n)?;
    let base = 2 + a_size + b_size;
    let mut edges = vec![(0, 1)];
    edges.extend((0..a_size).map(|k| (0, 2 + k)));
    edges.extend((0..b_size).map(|k| (1, 2 + a_size + k)));
    let bl = body.lsize();
    edges.extend((0..bl).map(|x| (1, base + x)));
    edges.extend((0..body.rsize()).map(|y| (0, base + bl + y)));
    edges.extend(body.edges().into_iter().map(|(x, y)| (base + x, base + bl + y)));
    Graph::new(n, edges)
}

/// Phases of the uncoloured gadget keyed by `(image of w_A, image of w_B)`.
pub fn phase_decompose_col(h: &Graph, gp: &TwoColouredGraph, j: &TwoColouredGraph, a_size: usize, b_size: usize, copies_j: usize) -> Result<PhaseReport<(usize, usize)>> {
    if classify_components(h).iter().any(Component::is_trivial) {
        return Err(Error::Precondition("target has a trivial component".into()));
    }
    let g = build_col_gadget(gp, j, a_size, b_size, copies_j)?;
    let tgt = Target::from_graph(h)?;
    let inst = Instance::from_graph(&g);
    let dom = vec![full_mask(h.n()); g.n()];
    let actual = count_bucketed(&inst, &tgt, &dom, &[0, 1], |imgs| (imgs[0], imgs[1]), work_limit())?;
    let mut predicted = BTreeMap::new();
    for (u, v) in h.ordered_edges() {
        let huv = edge_bigraph(h, u, v)?;
        let mut c = BigUint::from(h.degree(u)).pow(a_size as u32) * BigUint::from(h.degree(v)).pow(b_size as u32);
        if copies_j > 0 {
            c *= count_fixcol(&huv, j)?.pow(copies_j as u32);
        }
        c *= count_fixcol(&huv, gp)?;
        predicted.insert((u, v), c);
    }
    let total = count_col(h, &g)?;
    Ok(report(g.n(), g.edge_count(), predicted, actual, total))
}

/// Simultaneous approximation `|q alpha_i - p_i| <= N^(-1/d)` with `1 <= q <= N`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Approximation {
    pub q: u64,
    pub ps: Vec<String>,
    /// `|q alpha_i - p_i|`, upper ends of the enclosures, as decimals.
    pub errors: Vec<String>,
    pub method: &'static str,
    #[serde(skip)]
    pub p_values: Vec<BigInt>,
}

fn nearest(x: &Interval) -> BigInt {
    let m = x.mid();
    (m + BigRational::new(BigInt::one(), BigInt::from(2))).floor().to_integer()
}

/// `|q a - p|` certified to satisfy `err^d * n <= 1`; returns the error enclosure when it does.
fn certify(a: &Interval, q: u64, p: &BigInt, d: u32, n: u64) -> Option<Interval> {
    let e = a.mul_int(&BigInt::from(q)).sub(&Interval::point_int(p, a.prec())).abs();
    let hi = e.hi();
    if hi.pow(d as i32) * BigRational::from_integer(BigInt::from(n)) <= BigRational::one() {
        Some(e)
    } else {
        None
    }
}

fn finish(q: u64, ps: Vec<BigInt>, errs: Vec<Interval>, method: &'static str) -> Approximation {
    Approximation { q, ps: ps.iter().map(BigInt::to_string).collect(), errors: errs.iter().map(|e| decimal(&e.hi(), 30)).collect(), method, p_values: ps }
}

/// Denominators of the continued-fraction convergents of `x` up to `n`.
fn convergent_denominators(x: &BigRational, n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let (mut q0, mut q1) = (BigInt::zero(), BigInt::one());
    let mut r = x.clone();
    let limit = BigInt::from(n);
    for _ in 0..200 {
        let a = r.floor().to_integer();
        let q2 = &a * &q1 + &q0;
        if q1 > limit {
            break;
        }
        if q1.is_positive() {
            out.push(q1.to_u64().unwrap());
        }
        let frac = &r - BigRational::from_integer(a);
        if frac.is_zero() {
            break;
        }
        r = frac.recip();
        q0 = q1;
        q1 = q2;
    }
    out
}

/// Dirichlet approximation by continued fractions when `d = 1`, otherwise by scanning `q`.
/// Either way the returned `q` is certified against the bound with interval arithmetic.
pub fn dirichlet(alphas: &[Interval], n: u64) -> Result<Approximation> {
    if alphas.is_empty() || n == 0 {
        return Err(Error::Precondition("need at least one number and N >= 1".into()));
    }
    let d = alphas.len() as u32;
    if d == 1 {
        for &q in convergent_denominators(&alphas[0].mid(), n).iter().rev() {
            let p = nearest(&alphas[0].mul_int(&BigInt::from(q)));
            if let Some(e) = certify(&alphas[0], q, &p, 1, n) {
                return Ok(finish(q, vec![p], vec![e], "continued-fraction"));
            }
        }
    }
    if n > DIRICHLET_SCAN_LIMIT {
        return Err(Error::Precondition(format!("scan limit is N <= {DIRICHLET_SCAN_LIMIT}")));
    }
    'q: for q in 1..=n {
        let mut ps = Vec::with_capacity(alphas.len());
        let mut errs = Vec::with_capacity(alphas.len());
        for a in alphas {
            let p = nearest(&a.mul_int(&BigInt::from(q)));
            match certify(a, q, &p, d, n) {
                Some(e) => {
                    ps.push(p);
                    errs.push(e);
                }
                None => continue 'q,
            }
        }
        return Ok(finish(q, ps, errs, "scan"));
    }
    Err(Error::SearchExhausted(n as usize))
}

/// Gadget sizes for scale `n`: `Q <= n^2` and integers `a ~ Q alpha n^3`, `b ~ Q (beta n^3 + gamma n^2)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ScaleParams {
    pub n: u64,
    pub q: u64,
    #[serde(serialize_with = "crate::ser::big")]
    pub a: BigUint,
    #[serde(serialize_with = "crate::ser::big")]
    pub b: BigUint,
    pub alpha: String,
    pub beta: String,
    pub gamma: String,
    pub errors: Vec<String>,
    /// `Q alpha n^3 - a` and `Q (beta n^3 + gamma n^2) - b`.
    #[serde(skip)]
    pub delta: [Interval; 2],
}

pub fn scale_params(h: &TwoColouredGraph, gamma: &TwoColouredGraph, n: u64, prec: u32) -> Result<ScaleParams> {
    let d = dominance(h, &Comparator::default())?;
    let (alpha, beta) = d.exponents.normalised(prec);
    let g = GammaValue::new(h, &d.fullness, gamma)?.interval(prec);
    let n2 = BigInt::from(n * n);
    let n3 = BigInt::from(n * n * n);
    let t1 = alpha.mul_int(&n3);
    let t2 = beta.mul_int(&n3).add(&g.mul_int(&n2));
    let ap = dirichlet(&[t1.clone(), t2.clone()], n * n)?;
    let q = BigInt::from(ap.q);
    let (a, b) = (ap.p_values[0].clone(), ap.p_values[1].clone());
    if !a.is_positive() || !b.is_positive() {
        return Err(Error::Precondition("scale too small: a or b is not positive".into()));
    }
    let delta = [t1.mul_int(&q).sub(&Interval::point_int(&a, prec)), t2.mul_int(&q).sub(&Interval::point_int(&b, prec))];
    Ok(ScaleParams {
        n,
        q: ap.q,
        a: a.to_biguint().unwrap(),
        b: b.to_biguint().unwrap(),
        alpha: alpha.to_decimal(30),
        beta: beta.to_decimal(30),
        gamma: g.to_decimal(30),
        errors: ap.errors,
        delta,
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BracketRow {
    pub biclique: Biclique,
    /// `|S_L|^(a - Q alpha n^3) |S_R|^(b - Q(beta n^3 + gamma n^2)) - 1`, midpoint as a decimal.
    pub deviation: String,
    pub holds: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BracketReport {
    pub params: ScaleParams,
    /// `2 * 10^4 * max(|V_L|, |V_R|) / n`.
    pub epsilon: String,
    pub width: String,
    /// True when the lower end of the bracket is not positive, so it constrains nothing there.
    pub lower_vacuous: bool,
    pub max_deviation: String,
    pub rows: Vec<BracketRow>,
    pub all_hold: bool,
}

/// Check `zeta^(Q n^2) |S_L|^a |S_R|^b = (1 +- eps/10^3) (|S_L|^alpha |S_R|^beta)^(Q n^3) (zeta |S_R|^gamma)^(Q n^2)`
/// for every biclique. Both sides share the `zeta` power, so the ratio is the deviation factor alone.
pub fn approximation_bracket(h: &TwoColouredGraph, gamma: &TwoColouredGraph, n: u64, prec: u32) -> Result<BracketReport> {
    let sp = scale_params(h, gamma, n, prec)?;
    let k = h.lsize().max(h.rsize());
    let eps = BigRational::new(BigInt::from(20_000 * k), BigInt::from(n));
    let width = &eps / BigRational::from_integer(BigInt::from(1000));
    let one = BigRational::one();
    let mut rows = Vec::new();
    let mut max_dev = BigRational::zero();
    for s in all_bicliques(h)? {
        // exponents enter with a minus sign: the factor is x^(a - Q alpha n^3)
        let e = sp.delta[0].neg().mul(&ln_int(&BigUint::from(s.left.len()), prec)).add(&sp.delta[1].neg().mul(&ln_int(&BigUint::from(s.right.len()), prec)));
        let f = e.exp();
        let holds = f.lo() >= &one - &width && f.hi() <= &one + &width;
        let dev = (f.mid() - &one).abs();
        if dev > max_dev {
            max_dev = dev.clone();
        }
        rows.push(BracketRow { biclique: s, deviation: decimal(&(f.mid() - &one), 30), holds });
    }
    Ok(BracketReport {
        epsilon: decimal(&eps, 30),
        width: decimal(&width, 30),
        lower_vacuous: width >= one,
        max_deviation: decimal(&max_dev, 30),
        all_hold: rows.iter().all(|r| r.holds),
        rows,
        params: sp,
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GapRow {
    pub params: ScaleParams,
    pub dominant: Biclique,
    /// Exact ratio of the largest predicted phase to the largest among the others, as a decimal.
    pub ratio: String,
    #[serde(skip)]
    pub ratio_exact: BigRational,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GapReport {
    pub rows: Vec<GapRow>,
    pub monotone: bool,
    /// The largest phase is the winner of the refinement by `gamma` at every scale.
    pub dominant_is_refined_winner: bool,
}

/// Separation between the largest phase `T(a,|S_L|) T(b,|S_R|) zeta^(Q n^2)` and the rest, per scale.
pub fn phase_gap(h: &TwoColouredGraph, gamma: &TwoColouredGraph, ns: &[u64], prec: u32) -> Result<GapReport> {
    let cmp = Comparator::default();
    let d = dominance(h, &cmp)?;
    let winners = gamma_dominating_set(h, &d.fullness, &d.dominant, gamma, &cmp)?.winners;
    let bicliques = all_bicliques(h)?;
    let zetas: Vec<BigUint> = bicliques.iter().map(|s| count_fixcol(&derived_subgraph(h, s).graph, gamma)).collect::<Result<_>>()?;
    let mut rows = Vec::new();
    for &n in ns {
        let sp = scale_params(h, gamma, n, prec)?;
        let (a, b) = (sp.a.to_u64().unwrap(), sp.b.to_u64().unwrap());
        let reps = (sp.q * n * n) as u32;
        let vals: Vec<BigUint> = bicliques
            .iter()
            .zip(&zetas)
            .map(|(s, z)| surjections(a, s.left.len() as u64) * surjections(b, s.right.len() as u64) * z.pow(reps))
            .collect();
        let best = (0..vals.len()).max_by(|&x, &y| vals[x].cmp(&vals[y]).then(y.cmp(&x))).ok_or(Error::Precondition("no bicliques".into()))?;
        let second = (0..vals.len()).filter(|&k| k != best).map(|k| &vals[k]).max().cloned().unwrap_or_else(BigUint::one);
        let ratio = BigRational::new(BigInt::from(vals[best].clone()), BigInt::from(second));
        rows.push(GapRow { params: sp, dominant: bicliques[best].clone(), ratio: decimal(&ratio, 30), ratio_exact: ratio });
    }
    let monotone = rows.windows(2).all(|w| w[1].ratio_exact > w[0].ratio_exact);
    let dominant_is_refined_winner = rows.iter().all(|r| winners == vec![r.dominant.clone()]);
    Ok(GapReport { rows, monotone, dominant_is_refined_winner })
}

/// `|x^z - 1| <= 2K/n` for `1 <= x <= K <= n` and `|z| <= 1/n`, evaluated with certified intervals.
/// `Ok(None)` when the preconditions fail.
pub fn xz_bound_check(x: &BigRational, z: &BigRational, k: &BigRational, n: u64, prec: u32) -> Result<Option<bool>> {
    let nq = BigRational::from_integer(BigInt::from(n));
    if x < &BigRational::one() || x > k || k > &nq || z.abs() * &nq > BigRational::one() {
        return Ok(None);
    }
    let lx = ln_int(&x.numer().to_biguint().unwrap(), prec).sub(&ln_int(&x.denom().to_biguint().unwrap(), prec));
    let v = lx.mul(&Interval::from_rational(z, prec)).exp().sub(&Interval::from_i64(1, prec)).abs();
    let bound = BigRational::from_integer(BigInt::from(2)) * k / nq;
    Ok(Some(v.hi() <= bound))
}

/// `(1 - 2k/n) k^n <= T(n, k) <= k^n`, as exact integer comparisons.
pub fn surjection_bracket_holds(n: u64, k: u64) -> bool {
    let t = surjections(n, k);
    let kn = BigUint::from(k).pow(n as u32);
    let upper = t <= kn;
    // n T >= (n - 2k) k^n; trivially true when n <= 2k
    let lower = n <= 2 * k || BigUint::from(n) * &t >= BigUint::from(n - 2 * k) * &kn;
    upper && lower
}

/// Whether `n >= 2 k ln k`, decided exactly.
pub fn surjection_bracket_applies(n: u64, k: u64) -> Result<bool> {
    if k <= 1 {
        return Ok(true);
    }
    let two_k_ln_k = crate::compare::LogPoly::ln_u64(k).scale(&BigRational::from_integer(BigInt::from(2 * k)));
    let nn = crate::compare::LogPoly::constant(BigRational::from_integer(BigInt::from(n)));
    Ok(Comparator::default().compare(&nn, &two_k_ln_k)? != std::cmp::Ordering::Less)
}
