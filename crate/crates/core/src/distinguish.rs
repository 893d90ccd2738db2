//! Graphs that tell targets apart by their side-preserving homomorphism counts.
//!
//! For two non-isomorphic targets a distinguishing graph with at most as many vertices as
//! the larger target exists; it is found by trying classes in enumeration order. A selector
//! for several targets is assembled recursively from pairwise distinguishers so that one
//! target ends up with a strictly larger count than all others.

use num_bigint::BigUint;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{ToPrimitive, Zero};
use serde::Serialize;

use crate::canon::is_isomorphic;
use crate::count::count_fixcol;
use crate::enumerate::ordered;
use crate::error::{Error, Result};
use crate::graph::TwoColouredGraph;

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct SearchOptions {
    /// Return graphs without isolated right vertices (stripping them when that still separates).
    pub no_isolated_right: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Distinguisher {
    pub j: TwoColouredGraph,
    #[serde(serialize_with = "crate::ser::big_vec")]
    pub counts: Vec<BigUint>,
}

fn separates(h1: &TwoColouredGraph, h2: &TwoColouredGraph, j: &TwoColouredGraph) -> Result<Option<(BigUint, BigUint)>> {
    let a = count_fixcol(h1, j)?;
    let b = count_fixcol(h2, j)?;
    Ok(if a != b { Some((a, b)) } else { None })
}

fn found(j: TwoColouredGraph, (a, b): (BigUint, BigUint)) -> Distinguisher {
    Distinguisher { j, counts: vec![a, b] }
}

/// First graph in enumeration order whose counts into `h1` and `h2` differ.
pub fn find_distinguisher(h1: &TwoColouredGraph, h2: &TwoColouredGraph, opts: SearchOptions) -> Result<Distinguisher> {
    if is_isomorphic(h1, h2) {
        return Err(Error::Precondition("targets are isomorphic".into()));
    }
    let bound = h1.order().max(h2.order());
    let mut first: Option<Distinguisher> = None;
    for j in ordered(bound) {
        if j.order() == 0 {
            continue;
        }
        if let Some(c) = separates(h1, h2, &j)? {
            first = Some(found(j, c));
            break;
        }
    }
    let d = first.ok_or(Error::SearchExhausted(bound))?;
    if !opts.no_isolated_right || !d.j.has_isolated_right() {
        return Ok(d);
    }
    let stripped = d.j.strip_isolated_right();
    if stripped.order() > 0 {
        if let Some(c) = separates(h1, h2, &stripped)? {
            return Ok(found(stripped, c));
        }
    }
    for j in ordered(bound) {
        if j.order() == 0 || j.has_isolated_right() {
            continue;
        }
        if let Some(c) = separates(h1, h2, &j)? {
            return Ok(found(j, c));
        }
    }
    Err(Error::SearchExhausted(bound))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Selector {
    pub j: TwoColouredGraph,
    /// Index into the input list of the target with the strictly largest count.
    pub winner: usize,
    #[serde(serialize_with = "crate::ser::big_vec")]
    pub counts: Vec<BigUint>,
}

/// A graph whose count is strictly largest for exactly one of the pairwise non-isomorphic `hs`.
pub fn build_selector(hs: &[TwoColouredGraph], opts: SearchOptions) -> Result<Selector> {
    if hs.is_empty() {
        return Err(Error::Precondition("no targets given".into()));
    }
    for a in 0..hs.len() {
        for b in a + 1..hs.len() {
            if is_isomorphic(&hs[a], &hs[b]) {
                return Err(Error::Precondition(format!("targets {a} and {b} are isomorphic")));
            }
        }
    }
    let (j, winner) = select(hs, opts)?;
    let counts: Vec<BigUint> = hs.iter().map(|h| count_fixcol(h, &j)).collect::<Result<_>>()?;
    if !(0..hs.len()).all(|k| k == winner || counts[k] < counts[winner]) {
        return Err(Error::Precondition("selector failed to separate the winner".into()));
    }
    Ok(Selector { j, winner, counts })
}

fn select(hs: &[TwoColouredGraph], opts: SearchOptions) -> Result<(TwoColouredGraph, usize)> {
    if hs.len() == 1 {
        return Ok((TwoColouredGraph::empty(0, 0), 0));
    }
    let (j2, w) = select(&hs[1..], opts)?;
    let w = w + 1;
    let c0 = count_fixcol(&hs[0], &j2)?;
    let cw = count_fixcol(&hs[w], &j2)?;
    if c0 != cw {
        return Ok((j2, if c0 > cw { 0 } else { w }));
    }
    // hs[0] and hs[w] tie on j2: separate them with a pairwise distinguisher, oriented
    // so that `top` wins it, then pad with enough copies of j2 to keep the others below
    let d = find_distinguisher(&hs[0], &hs[w], opts)?;
    let jp = d.j;
    let (top, other) = if d.counts[0] > d.counts[1] { (0, w) } else { (w, 0) };
    let m = count_fixcol(&hs[top], &j2)?;
    let ctop = count_fixcol(&hs[top], &jp)?;
    let mut c = BigRational::zero();
    for (k, h) in hs.iter().enumerate() {
        if k == top || k == other {
            continue;
        }
        let r = BigRational::new(count_fixcol(h, &jp)?.into(), ctop.clone().into());
        if r > c {
            c = r;
        }
    }
    let cm = c * BigRational::from_integer(m.into());
    let t = cm.numer().div_ceil(cm.denom());
    let t = t.to_usize().ok_or_else(|| Error::Precondition("selector padding too large".into()))?;
    Ok((jp.disjoint_union(&j2.copies(t)), top))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::enumerate::classes;

    #[test]
    fn k11_separates_counting_edges() {
        let a = TwoColouredGraph::path(4);
        let b = TwoColouredGraph::complete(2, 2).quotient(&[0, 1], &[0, 0]).disjoint_union(&TwoColouredGraph::empty(0, 1));
        let d = find_distinguisher(&a, &b, SearchOptions::default()).unwrap();
        assert_ne!(d.counts[0], d.counts[1]);
    }

    #[test]
    fn isomorphic_targets_are_rejected() {
        let p = TwoColouredGraph::path(4);
        assert!(matches!(find_distinguisher(&p, &p.swap_sides(), SearchOptions::default()), Err(Error::Precondition(_))));
    }

    #[test]
    fn every_pair_up_to_four_vertices_is_separated() {
        let mut all = Vec::new();
        for n in 1..=4 {
            for l in 0..=n {
                all.extend(classes(l, n - l).iter().cloned());
            }
        }
        for a in 0..all.len() {
            for b in a + 1..all.len() {
                let d = find_distinguisher(&all[a], &all[b], SearchOptions::default()).unwrap();
                assert!(d.j.order() <= all[a].order().max(all[b].order()));
                assert_eq!(d.counts[0], count_fixcol(&all[a], &d.j).unwrap());
                assert_ne!(d.counts[0], d.counts[1]);
            }
        }
    }

    #[test]
    fn selector_on_three_by_three_classes() {
        let hs: Vec<TwoColouredGraph> = classes(2, 2).iter().cloned().collect();
        let s = build_selector(&hs, SearchOptions::default()).unwrap();
        for (k, c) in s.counts.iter().enumerate() {
            if k != s.winner {
                assert!(c < &s.counts[s.winner]);
            }
        }
    }

    #[test]
    fn selector_without_isolated_right() {
        let hs: Vec<TwoColouredGraph> = classes(2, 2).iter().filter(|g| !g.has_isolated_right()).cloned().collect();
        let s = build_selector(&hs, SearchOptions { no_isolated_right: true }).unwrap();
        assert!(!s.j.has_isolated_right());
    }

    #[test]
    fn single_target_selector_is_empty() {
        let s = build_selector(&[TwoColouredGraph::path(4)], SearchOptions::default()).unwrap();
        assert_eq!(s.j.order(), 0);
        assert_eq!(s.winner, 0);
    }
}
