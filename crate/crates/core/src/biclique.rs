//! Biclique enumeration and the weighting that decides which bicliques dominate.
//!
//! With `F_L`, `F_R` the full vertices and `V_L`, `V_R` the sides, exponents `(alpha, beta)` are
//! fixed by `alpha : beta = ln(|V_R|/|F_R|) : ln(|V_L|/|F_L|)`, the ratio that makes the two
//! extremal bicliques `(F_L, V_R)` and `(V_L, F_R)` weigh the same under
//! `|S_L|^alpha |S_R|^beta`. The dominant set is the argmax of that weight over maximal
//! bicliques; a second-order refinement by a fixed graph `gamma` breaks ties among them.

use std::collections::HashSet;

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use rayon::prelude::*;
use serde::Serialize;

use crate::compare::{Comparator, LogPoly};
use crate::count::{count_fixcol, mask_of, Mask};
use crate::error::{Error, Result};
use crate::graph::{Biclique, TwoColouredGraph};
use crate::real::Interval;
use crate::structure::{check_full_nontrivial, derived_subgraph, FullnessProfile};

fn right_masks(h: &TwoColouredGraph) -> Vec<Mask> {
    (0..h.rsize()).map(|j| mask_of(h.right_nbrs(j).iter().copied())).collect()
}

fn bits_vec(m: Mask) -> Vec<usize> {
    crate::count::bits(m).collect()
}

fn check_size(h: &TwoColouredGraph) -> Result<()> {
    if h.lsize() > 128 || h.rsize() > 128 {
        return Err(Error::TargetTooLarge(h.order()));
    }
    Ok(())
}

/// Maximal bicliques, sorted. Left parts of maximal bicliques are exactly the non-empty
/// intersections of right-vertex neighbourhoods, so those are generated by closure.
pub fn maximal_bicliques(h: &TwoColouredGraph) -> Result<Vec<Biclique>> {
    check_size(h)?;
    let rm = right_masks(h);
    let mut seen: HashSet<Mask> = HashSet::new();
    let mut work: Vec<Mask> = Vec::new();
    for &m in &rm {
        if m != 0 && seen.insert(m) {
            work.push(m);
        }
    }
    while let Some(s) = work.pop() {
        for &m in &rm {
            let t = s & m;
            if t != 0 && seen.insert(t) {
                work.push(t);
            }
        }
    }
    let mut out: Vec<Biclique> = seen
        .into_iter()
        .map(|s| {
            let right: Vec<usize> = (0..h.rsize()).filter(|&j| rm[j] & s == s).collect();
            Biclique { left: bits_vec(s), right }
        })
        .collect();
    out.sort();
    Ok(out)
}

/// Every biclique (both parts non-empty), sorted.
pub fn all_bicliques(h: &TwoColouredGraph) -> Result<Vec<Biclique>> {
    check_size(h)?;
    let mut out = Vec::new();
    for b in maximal_bicliques(h)? {
        // sub-bicliques of maximal ones, deduplicated below
        let (l, r) = (b.left.len(), b.right.len());
        if l > 20 || r > 20 {
            return Err(Error::Precondition("biclique too large to enumerate its subsets".into()));
        }
        for a in 1u32..(1 << l) {
            let left: Vec<usize> = (0..l).filter(|&k| a >> k & 1 == 1).map(|k| b.left[k]).collect();
            for c in 1u32..(1 << r) {
                let right: Vec<usize> = (0..r).filter(|&k| c >> k & 1 == 1).map(|k| b.right[k]).collect();
                out.push(Biclique { left: left.clone(), right });
            }
        }
    }
    out.sort();
    out.dedup();
    Ok(out)
}

fn ln_ratio(n: usize, d: usize) -> LogPoly {
    LogPoly::ln_ratio(&BigUint::from(n), &BigUint::from(d))
}

fn ln_size(n: usize) -> LogPoly {
    LogPoly::ln_u64(n as u64)
}

/// The exponent pair, kept symbolically as the two side ratios.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ExponentPair {
    /// `(|V_R|, |F_R|)`; `alpha` is proportional to the log of this ratio.
    pub right: (usize, usize),
    /// `(|V_L|, |F_L|)`; `beta` is proportional to the log of this ratio.
    pub left: (usize, usize),
}

impl ExponentPair {
    pub fn new(h: &TwoColouredGraph, f: &FullnessProfile) -> Self {
        ExponentPair { right: (h.rsize(), f.full_right.len()), left: (h.lsize(), f.full_left.len()) }
    }

    /// Unnormalised weight of `alpha`.
    pub fn alpha_weight(&self) -> LogPoly {
        ln_ratio(self.right.0, self.right.1)
    }

    /// Unnormalised weight of `beta`.
    pub fn beta_weight(&self) -> LogPoly {
        ln_ratio(self.left.0, self.left.1)
    }

    /// `alpha / beta` when it is rational.
    pub fn ratio(&self) -> Option<BigRational> {
        self.alpha_weight().ratio_to(&self.beta_weight())
    }

    fn alpha_is_larger(&self) -> bool {
        // compare |V_R|/|F_R| with |V_L|/|F_L| exactly
        self.right.0 * self.left.1 >= self.left.0 * self.right.1
    }

    /// `(alpha, beta)` scaled so the larger is exactly 1/2.
    pub fn normalised(&self, prec: u32) -> (Interval, Interval) {
        let half = Interval::from_rational(&BigRational::new(BigInt::one(), BigInt::from(2)), prec);
        let a = self.alpha_weight().eval(prec);
        let b = self.beta_weight().eval(prec);
        if self.alpha_is_larger() {
            let beta = b.div(&a.mul_int(&BigInt::from(2))).expect("alpha weight is positive");
            (half, beta)
        } else {
            let alpha = a.div(&b.mul_int(&BigInt::from(2))).expect("beta weight is positive");
            (alpha, half)
        }
    }

    /// `ln` of `|S_L|^alpha |S_R|^beta`, up to the positive normalising factor.
    pub fn objective(&self, b: &Biclique) -> LogPoly {
        self.alpha_weight().mul(&ln_size(b.left.len())).add(&self.beta_weight().mul(&ln_size(b.right.len())))
    }

    /// Same objective with the weights multiplied by a positive rational; for checking scale invariance.
    pub fn scaled_objective(&self, b: &Biclique, s: &BigRational) -> LogPoly {
        self.objective(b).scale(s)
    }
}

/// Basic dominance data for a full, non-trivial target.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Dominance {
    pub fullness: FullnessProfile,
    pub exponents: ExponentPair,
    pub maximal: Vec<Biclique>,
    pub dominant: Vec<Biclique>,
    /// `(F_L, V_R)` and `(V_L, F_R)`.
    pub extremal: [Biclique; 2],
}

impl Dominance {
    pub fn contains_extremal(&self) -> bool {
        self.extremal.iter().all(|e| self.dominant.contains(e))
    }

    pub fn non_extremal_dominant(&self) -> Vec<Biclique> {
        self.dominant.iter().filter(|b| !self.extremal.contains(b)).cloned().collect()
    }
}

pub fn extremal_pair(h: &TwoColouredGraph, f: &FullnessProfile) -> [Biclique; 2] {
    [
        Biclique { left: f.full_left.clone(), right: (0..h.rsize()).collect() },
        Biclique { left: (0..h.lsize()).collect(), right: f.full_right.clone() },
    ]
}

pub fn dominance(h: &TwoColouredGraph, cmp: &Comparator) -> Result<Dominance> {
    let fullness = check_full_nontrivial(h)?;
    let exponents = ExponentPair::new(h, &fullness);
    let maximal = maximal_bicliques(h)?;
    let dominant = dominating_set(&exponents, &maximal, cmp)?;
    let extremal = extremal_pair(h, &fullness);
    Ok(Dominance { fullness, exponents, maximal, dominant, extremal })
}

/// Argmax of `|S_L|^alpha |S_R|^beta` over `members`, ties kept, in input order.
pub fn dominating_set(e: &ExponentPair, members: &[Biclique], cmp: &Comparator) -> Result<Vec<Biclique>> {
    let vals: Vec<LogPoly> = members.iter().map(|b| e.objective(b)).collect();
    Ok(cmp.argmax(&vals)?.into_iter().map(|k| members[k].clone()).collect())
}

/// Argmax of `|S_L|^alpha |S_R|^beta` for explicit non-negative rational weights.
pub fn dominating_set_weighted(alpha: &BigRational, beta: &BigRational, members: &[Biclique], cmp: &Comparator) -> Result<Vec<Biclique>> {
    if alpha.is_negative() || beta.is_negative() {
        return Err(Error::Precondition("weights must be non-negative".into()));
    }
    let vals: Vec<LogPoly> = members.iter().map(|b| ln_size(b.left.len()).scale(alpha).add(&ln_size(b.right.len()).scale(beta))).collect();
    Ok(cmp.argmax(&vals)?.into_iter().map(|k| members[k].clone()).collect())
}

/// FixCOL count of `gamma` into the subgraph selected by `b`.
pub fn zeta(h: &TwoColouredGraph, b: &Biclique, gamma: &TwoColouredGraph) -> Result<BigUint> {
    count_fixcol(&derived_subgraph(h, b).graph, gamma)
}

pub fn zeta_profile(h: &TwoColouredGraph, members: &[Biclique], gamma: &TwoColouredGraph) -> Result<Vec<BigUint>> {
    members.par_iter().map(|b| zeta(h, b, gamma)).collect()
}

/// `gamma = ln(zeta_ex2 / zeta_ex1) / ln(|V_R| / |F_R|)`, kept as its four integers.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GammaValue {
    #[serde(serialize_with = "crate::ser::big")]
    pub zeta_ex2: BigUint,
    #[serde(serialize_with = "crate::ser::big")]
    pub zeta_ex1: BigUint,
    pub v_r: usize,
    pub f_r: usize,
}

impl GammaValue {
    pub fn new(h: &TwoColouredGraph, f: &FullnessProfile, gamma: &TwoColouredGraph) -> Result<Self> {
        let zeta_ex1 = BigUint::from(f.full_left.len()).pow(gamma.lsize() as u32) * BigUint::from(h.rsize()).pow(gamma.rsize() as u32);
        let zeta_ex2 = count_fixcol(h, gamma)?;
        Ok(GammaValue { zeta_ex2, zeta_ex1, v_r: h.rsize(), f_r: f.full_right.len() })
    }

    pub fn numerator(&self) -> LogPoly {
        LogPoly::ln_ratio(&self.zeta_ex2, &self.zeta_ex1)
    }

    pub fn denominator(&self) -> LogPoly {
        ln_ratio(self.v_r, self.f_r)
    }

    pub fn exact(&self) -> Option<BigRational> {
        if self.numerator().is_zero() {
            return Some(BigRational::zero());
        }
        self.numerator().ratio_to(&self.denominator())
    }

    pub fn interval(&self, prec: u32) -> Interval {
        self.numerator().eval(prec).div(&self.denominator().eval(prec)).expect("denominator is positive")
    }

    /// Exact fraction when rational, else 30 decimal places.
    pub fn render(&self) -> String {
        match self.exact() {
            Some(q) if q.is_integer() => q.numer().to_string(),
            Some(q) => format!("{}/{}", q.numer(), q.denom()),
            None => self.interval(256).to_decimal(30),
        }
    }
}

/// Result of the second-order refinement.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GammaDominance {
    pub gamma: GammaValue,
    /// `zeta` for each member of the dominant set, in its order.
    #[serde(serialize_with = "crate::ser::big_vec")]
    pub zetas: Vec<BigUint>,
    pub winners: Vec<Biclique>,
}

/// `ln(ln(|V_R|/|F_R|) * ln zeta + ln(zeta_ex2/zeta_ex1) * ln |S_R|)`, i.e. the log of
/// `zeta * |S_R|^gamma` scaled by the positive denominator of gamma.
pub fn gamma_objective(g: &GammaValue, zeta: &BigUint, right_size: usize) -> LogPoly {
    g.denominator().mul(&LogPoly::ln_int(zeta)).add(&g.numerator().mul(&ln_size(right_size)))
}

/// Argmax of `zeta(b, gamma) * |S_R|^gamma` over `dominant`.
pub fn gamma_dominating_set(
    h: &TwoColouredGraph,
    f: &FullnessProfile,
    dominant: &[Biclique],
    gamma_graph: &TwoColouredGraph,
    cmp: &Comparator,
) -> Result<GammaDominance> {
    let gamma = GammaValue::new(h, f, gamma_graph)?;
    let zetas = zeta_profile(h, dominant, gamma_graph)?;
    if zetas.iter().any(Zero::is_zero) {
        return Err(Error::Precondition("a dominant biclique admits no map of the refining graph".into()));
    }
    let vals: Vec<LogPoly> = dominant.iter().zip(&zetas).map(|(b, z)| gamma_objective(&gamma, z, b.right.len())).collect();
    let winners = cmp.argmax(&vals)?.into_iter().map(|k| dominant[k].clone()).collect();
    Ok(GammaDominance { gamma, zetas, winners })
}
