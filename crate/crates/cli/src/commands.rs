//! Command bodies. Each returns the text to print on success.

use num_bigint::BigInt;
use num_rational::BigRational;
use serde::Serialize;
use serde_json::Value;

use homlab_core::biclique::{dominance, gamma_dominating_set, zeta_profile};
use homlab_core::classify::{classify, classify_graph};
use homlab_core::compare::Comparator;
use homlab_core::distinguish::{build_selector, find_distinguisher, SearchOptions};
use homlab_core::gadget::{
    approximation_bracket, dirichlet, phase_decompose_bis, phase_decompose_col, phase_decompose_kab, phase_gap, scale_params, GadgetParams,
};
use homlab_core::real::Interval;
use homlab_core::structure::FullnessProfile;
use homlab_core::{count_bis, count_col, count_fixcol, count_inj_fixcol, AnyGraph, Biclique, TwoColouredGraph};

use crate::error::{CliError, CliResult};
use crate::input::{expect_bigraph, expect_graph, load, load_bigraph, load_graph};

/// Rebuild a JSON value with every object's keys in sorted order.
fn sorted(v: Value) -> Value {
    match v {
        Value::Object(m) => {
            let mut pairs: Vec<(String, Value)> = m.into_iter().collect();
            pairs.sort_by(|a, b| a.0.cmp(&b.0));
            Value::Object(pairs.into_iter().map(|(k, v)| (k, sorted(v))).collect())
        }
        Value::Array(a) => Value::Array(a.into_iter().map(sorted).collect()),
        other => other,
    }
}

/// Pretty JSON with sorted keys, so identical runs print identical bytes.
pub fn to_json<T: Serialize>(v: &T) -> String {
    let v = serde_json::to_value(v).expect("report types serialise");
    serde_json::to_string_pretty(&sorted(v)).expect("json values serialise")
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CountMode {
    Col,
    Fixcol,
    Inj,
    Bis,
}

pub fn count(target: Option<&str>, instance: &str, mode: CountMode) -> CliResult<String> {
    let g = load(instance)?;
    let need_target = || target.ok_or_else(|| CliError::Usage("--target is required for this mode".into())).and_then(load);
    let n = match mode {
        CountMode::Col => count_col(&expect_graph(need_target()?, "target")?, &expect_graph(g, "instance")?)?,
        CountMode::Fixcol => count_fixcol(&expect_bigraph(need_target()?, "target")?, &expect_bigraph(g, "instance")?)?,
        CountMode::Inj => count_inj_fixcol(&expect_bigraph(need_target()?, "target")?, &expect_bigraph(g, "instance")?)?,
        CountMode::Bis => {
            if target.is_some() {
                return Err(CliError::Usage("--mode bis counts independent sets and takes no target".into()));
            }
            count_bis(&expect_bigraph(g, "instance")?)?
        }
    };
    Ok(n.to_string())
}

#[derive(Serialize)]
struct Exponents {
    /// `ln(|V_R|/|F_R|) : ln(|V_L|/|F_L|)` when rational.
    ratio: Option<String>,
    alpha: String,
    beta: String,
}

#[derive(Serialize)]
struct ZetaEntry {
    biclique: Biclique,
    zeta: String,
}

#[derive(Serialize)]
struct Refinement {
    graph: TwoColouredGraph,
    gamma: String,
    zeta_profile: Vec<ZetaEntry>,
    winners: Vec<Biclique>,
}

#[derive(Serialize)]
struct Analysis {
    fullness: FullnessProfile,
    exponents: Exponents,
    maximal: Vec<Biclique>,
    dominant: Vec<Biclique>,
    extremal: [Biclique; 2],
    refinement: Option<Refinement>,
}

fn render_q(q: &BigRational) -> String {
    if q.is_integer() {
        q.numer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}

pub fn analyze(target: &str, gamma: Option<&str>, cmp: &Comparator) -> CliResult<String> {
    let h = load_bigraph(target, "target")?;
    let d = dominance(&h, cmp)?;
    let (a, b) = d.exponents.normalised(256);
    let refinement = match gamma.filter(|g| *g != "none") {
        None => None,
        Some(path) => {
            let g = load_bigraph(path, "gamma graph")?;
            let gd = gamma_dominating_set(&h, &d.fullness, &d.dominant, &g, cmp)?;
            let zs = zeta_profile(&h, &d.maximal, &g)?;
            Some(Refinement {
                gamma: gd.gamma.render(),
                zeta_profile: d.maximal.iter().zip(zs).map(|(b, z)| ZetaEntry { biclique: b.clone(), zeta: z.to_string() }).collect(),
                winners: gd.winners,
                graph: g,
            })
        }
    };
    let out = Analysis {
        exponents: Exponents { ratio: d.exponents.ratio().map(|q| render_q(&q)), alpha: a.to_decimal(30), beta: b.to_decimal(30) },
        fullness: d.fullness,
        maximal: d.maximal,
        dominant: d.dominant,
        extremal: d.extremal,
        refinement,
    };
    Ok(to_json(&out))
}

pub fn classify_target(target: &str, bound: usize, cmp: &Comparator) -> CliResult<String> {
    let report = match load(target)? {
        AnyGraph::Bigraph(h) => classify(&h, bound, cmp)?,
        AnyGraph::Graph(h) => classify_graph(&h, bound, cmp)?,
    };
    Ok(to_json(&report))
}

pub fn distinguish(targets: &[String], no_isolated_right: bool, force_selector: bool) -> CliResult<String> {
    let opts = SearchOptions { no_isolated_right };
    let hs: Vec<TwoColouredGraph> = targets.iter().map(|t| load_bigraph(t, "target")).collect::<CliResult<_>>()?;
    match hs.len() {
        0 => Err(CliError::Usage("give at least one target".into())),
        2 if !force_selector => Ok(to_json(&find_distinguisher(&hs[0], &hs[1], opts)?)),
        _ => Ok(to_json(&build_selector(&hs, opts)?)),
    }
}

/// Gadget reports also fail the process when an identity does not hold.
fn checked<T: Serialize>(report: &T, ok: bool) -> CliResult<String> {
    let s = to_json(report);
    if ok {
        Ok(s)
    } else {
        Err(CliError::Verification(format!("phase identity failed\n{s}")))
    }
}

pub struct KabArgs<'a> {
    pub target: &'a str,
    pub gprime: &'a str,
    pub gamma: Option<&'a str>,
    pub j: Option<&'a str>,
    pub params: GadgetParams,
}

fn optional_bigraph(arg: Option<&str>, copies: usize, what: &str) -> CliResult<TwoColouredGraph> {
    match arg {
        Some(p) => load_bigraph(p, what),
        None if copies == 0 => Ok(TwoColouredGraph::empty(0, 0)),
        None => Err(CliError::Usage(format!("{what} is required when its copy count is positive"))),
    }
}

pub fn gadget_kab(a: KabArgs<'_>) -> CliResult<String> {
    let h = load_bigraph(a.target, "target")?;
    let gp = load_bigraph(a.gprime, "g'")?;
    let gamma = optional_bigraph(a.gamma, a.params.copies_gamma, "gamma graph")?;
    let j = optional_bigraph(a.j, a.params.copies_j, "j graph")?;
    let r = phase_decompose_kab(&h, &gp, &gamma, &j, a.params)?;
    checked(&r, r.ok())
}

pub fn gadget_bis(target: &str, gprime: &str, gamma: Option<&str>, params: GadgetParams) -> CliResult<String> {
    let h = load_bigraph(target, "target")?;
    let gp = load_bigraph(gprime, "g'")?;
    let g = optional_bigraph(gamma, params.copies_gamma, "gamma graph")?;
    let r = phase_decompose_bis(&h, &gp, &g, params)?;
    checked(&r, r.ok())
}

pub fn gadget_col(target: &str, gprime: &str, j: Option<&str>, a_size: usize, b_size: usize, copies_j: usize) -> CliResult<String> {
    let h = load_graph(target, "target")?;
    let gp = load_bigraph(gprime, "g'")?;
    let jg = optional_bigraph(j, copies_j, "j graph")?;
    let r = phase_decompose_col(&h, &gp, &jg, a_size, b_size, copies_j)?;
    checked(&r, r.ok())
}

pub fn gadget_bracket(target: &str, gamma: &str, n: u64, prec: u32) -> CliResult<String> {
    let h = load_bigraph(target, "target")?;
    let g = load_bigraph(gamma, "gamma graph")?;
    Ok(to_json(&approximation_bracket(&h, &g, n, prec)?))
}

pub fn gadget_gap(target: &str, gamma: &str, ns: &[u64], prec: u32) -> CliResult<String> {
    let h = load_bigraph(target, "target")?;
    let g = load_bigraph(gamma, "gamma graph")?;
    Ok(to_json(&phase_gap(&h, &g, ns, prec)?))
}

pub fn gadget_params(target: &str, gamma: &str, n: u64, prec: u32) -> CliResult<String> {
    let h = load_bigraph(target, "target")?;
    let g = load_bigraph(gamma, "gamma graph")?;
    Ok(to_json(&scale_params(&h, &g, n, prec)?))
}

/// `p/q`, an integer, or `sqrt(k)`.
pub fn parse_real(s: &str, prec: u32) -> CliResult<Interval> {
    let bad = || CliError::Usage(format!("cannot read `{s}` as a number (use p/q, an integer or sqrt(k))"));
    let t = s.trim();
    if let Some(inner) = t.strip_prefix("sqrt(").and_then(|r| r.strip_suffix(')')) {
        let k: BigInt = inner.trim().parse().map_err(|_| bad())?;
        return Interval::point_int(&k, prec).sqrt().ok_or_else(bad);
    }
    let q = match t.split_once('/') {
        Some((a, b)) => {
            let (a, b): (BigInt, BigInt) = (a.trim().parse().map_err(|_| bad())?, b.trim().parse().map_err(|_| bad())?);
            if b == BigInt::from(0) {
                return Err(bad());
            }
            BigRational::new(a, b)
        }
        None => BigRational::from_integer(t.parse().map_err(|_| bad())?),
    };
    Ok(Interval::from_rational(&q, prec))
}

pub fn gadget_dirichlet(alphas: &[String], n: u64, prec: u32) -> CliResult<String> {
    let xs: Vec<Interval> = alphas.iter().map(|a| parse_real(a, prec)).collect::<CliResult<_>>()?;
    Ok(to_json(&dirichlet(&xs, n)?))
}
