//! Plain graphs (loops allowed) and two-coloured bipartite graphs.

use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};

/// Undirected graph on `0..n`. Self-loops are allowed, parallel edges are not.
/// A loop contributes one to the degree of its vertex.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Graph {
    adj: Vec<Vec<usize>>,
}

impl Graph {
    pub fn new(n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        let mut adj = vec![Vec::new(); n];
        for (u, v) in edges {
            if u >= n || v >= n {
                return Err(Error::InvalidGraph(format!("edge ({u},{v}) out of range for {n} vertices")));
            }
            if adj[u].contains(&v) {
                return Err(Error::InvalidGraph(format!("duplicate edge ({u},{v})")));
            }
            adj[u].push(v);
            if u != v {
                adj[v].push(u);
            }
        }
        for a in &mut adj {
            a.sort_unstable();
        }
        Ok(Graph { adj })
    }

    pub fn empty(n: usize) -> Self {
        Graph { adj: vec![Vec::new(); n] }
    }

    pub fn n(&self) -> usize {
        self.adj.len()
    }

    pub fn neighbours(&self, u: usize) -> &[usize] {
        &self.adj[u]
    }

    pub fn degree(&self, u: usize) -> usize {
        self.adj[u].len()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u].binary_search(&v).is_ok()
    }

    pub fn has_loop(&self, u: usize) -> bool {
        self.has_edge(u, u)
    }

    /// Edges as `(u, v)` with `u <= v`, sorted.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for (u, a) in self.adj.iter().enumerate() {
            for &v in a {
                if u <= v {
                    out.push((u, v));
                }
            }
        }
        out
    }

    pub fn edge_count(&self) -> usize {
        self.edges().len()
    }

    /// Ordered pairs `(u, v)` with `{u, v}` an edge. A loop yields one pair, other edges two.
    pub fn ordered_edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for (u, a) in self.adj.iter().enumerate() {
            for &v in a {
                out.push((u, v));
            }
        }
        out
    }

    /// Induced subgraph on `vs`, relabelled to `0..vs.len()` in the given order.
    pub fn induced(&self, vs: &[usize]) -> Graph {
        let mut pos = vec![usize::MAX; self.n()];
        for (i, &v) in vs.iter().enumerate() {
            pos[v] = i;
        }
        let mut adj = vec![Vec::new(); vs.len()];
        for (i, &v) in vs.iter().enumerate() {
            for &w in &self.adj[v] {
                if pos[w] != usize::MAX {
                    adj[i].push(pos[w]);
                }
            }
            adj[i].sort_unstable();
        }
        Graph { adj }
    }

    /// Connected components, each sorted, in order of smallest vertex.
    pub fn components(&self) -> Vec<Vec<usize>> {
        components(&self.adj)
    }

    pub fn parse(text: &str) -> Result<Self> {
        match parse_any(text)? {
            AnyGraph::Graph(g) => Ok(g),
            AnyGraph::Bigraph(_) => Err(Error::Parse { line: first_content_line(text), msg: "expected a `graph` header".into() }),
        }
    }

    pub fn to_text(&self) -> String {
        let mut s = format!("graph {}\n", self.n());
        for (u, v) in self.edges() {
            s.push_str(&format!("{u} {v}\n"));
        }
        s
    }
}

/// Bipartite graph with a fixed side assignment. Left vertices are `0..lsize`,
/// right vertices `0..rsize`; an edge `(i, j)` joins left `i` to right `j`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct TwoColouredGraph {
    ladj: Vec<Vec<usize>>,
    radj: Vec<Vec<usize>>,
}

impl TwoColouredGraph {
    pub fn new(lsize: usize, rsize: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        let mut ladj = vec![Vec::new(); lsize];
        let mut radj = vec![Vec::new(); rsize];
        for (i, j) in edges {
            if i >= lsize {
                return Err(Error::InvalidGraph(format!("L index {i} out of range")));
            }
            if j >= rsize {
                return Err(Error::InvalidGraph(format!("R index {j} out of range")));
            }
            if ladj[i].contains(&j) {
                return Err(Error::InvalidGraph(format!("duplicate edge ({i},{j})")));
            }
            ladj[i].push(j);
            radj[j].push(i);
        }
        for a in ladj.iter_mut().chain(radj.iter_mut()) {
            a.sort_unstable();
        }
        Ok(TwoColouredGraph { ladj, radj })
    }

    pub fn empty(lsize: usize, rsize: usize) -> Self {
        TwoColouredGraph { ladj: vec![Vec::new(); lsize], radj: vec![Vec::new(); rsize] }
    }

    /// K_{a,b}: `a` left vertices, `b` right vertices, all cross edges.
    pub fn complete(a: usize, b: usize) -> Self {
        TwoColouredGraph { ladj: vec![(0..b).collect(); a], radj: vec![(0..a).collect(); b] }
    }

    /// Path on `n >= 1` vertices, alternately coloured so that one endpoint is on the right.
    /// P3 has one left vertex (the centre), P4 has left `{a, c}` and right `{b, d}`.
    pub fn path(n: usize) -> Self {
        assert!(n >= 1);
        // walk from the right endpoint: R, L, R, L, ...
        let lsize = n / 2;
        let rsize = n - lsize;
        let mut edges = Vec::new();
        for k in 0..n - 1 {
            // vertex k is right when k is even
            let (a, b) = (k, k + 1);
            let (l, r) = if a % 2 == 0 { (b / 2, a / 2) } else { (a / 2, b / 2) };
            edges.push((l, r));
        }
        Self::new(lsize, rsize, edges).expect("path is well formed")
    }

    pub fn lsize(&self) -> usize {
        self.ladj.len()
    }

    pub fn rsize(&self) -> usize {
        self.radj.len()
    }

    pub fn order(&self) -> usize {
        self.lsize() + self.rsize()
    }

    /// Right neighbours of left vertex `i`.
    pub fn left_nbrs(&self, i: usize) -> &[usize] {
        &self.ladj[i]
    }

    /// Left neighbours of right vertex `j`.
    pub fn right_nbrs(&self, j: usize) -> &[usize] {
        &self.radj[j]
    }

    pub fn has_edge(&self, i: usize, j: usize) -> bool {
        self.ladj[i].binary_search(&j).is_ok()
    }

    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for (i, a) in self.ladj.iter().enumerate() {
            for &j in a {
                out.push((i, j));
            }
        }
        out
    }

    pub fn edge_count(&self) -> usize {
        self.ladj.iter().map(Vec::len).sum()
    }

    pub fn isolated_right(&self) -> Vec<usize> {
        (0..self.rsize()).filter(|&j| self.radj[j].is_empty()).collect()
    }

    pub fn has_isolated_right(&self) -> bool {
        self.radj.iter().any(Vec::is_empty)
    }

    /// Drop right vertices of degree zero.
    pub fn strip_isolated_right(&self) -> Self {
        let keep: Vec<usize> = (0..self.rsize()).filter(|&j| !self.radj[j].is_empty()).collect();
        self.induced(&(0..self.lsize()).collect::<Vec<_>>(), &keep)
    }

    /// Induced subgraph on the given left and right vertices, relabelled in the given order.
    pub fn induced(&self, left: &[usize], right: &[usize]) -> Self {
        let mut rpos = vec![usize::MAX; self.rsize()];
        for (k, &j) in right.iter().enumerate() {
            rpos[j] = k;
        }
        let mut edges = Vec::new();
        for (a, &i) in left.iter().enumerate() {
            for &j in &self.ladj[i] {
                if rpos[j] != usize::MAX {
                    edges.push((a, rpos[j]));
                }
            }
        }
        Self::new(left.len(), right.len(), edges).expect("induced subgraph is well formed")
    }

    /// Exchange the roles of the two sides.
    pub fn swap_sides(&self) -> Self {
        TwoColouredGraph { ladj: self.radj.clone(), radj: self.ladj.clone() }
    }

    /// Disjoint union; vertices of `other` are shifted past those of `self` on each side.
    pub fn disjoint_union(&self, other: &Self) -> Self {
        let (l, r) = (self.lsize(), self.rsize());
        let edges = self.edges().into_iter().chain(other.edges().into_iter().map(|(i, j)| (i + l, j + r)));
        Self::new(l + other.lsize(), r + other.rsize(), edges).expect("union is well formed")
    }

    /// `t` disjoint copies of `self`.
    pub fn copies(&self, t: usize) -> Self {
        let mut out = Self::empty(0, 0);
        for _ in 0..t {
            out = out.disjoint_union(self);
        }
        out
    }

    /// Categorical product: left side `L1 x L2`, right side `R1 x R2`, with `(i1,i2)~(j1,j2)`
    /// iff `i1~j1` and `i2~j2`. Pair `(x, y)` gets index `x * size2 + y`.
    pub fn tensor(&self, other: &Self) -> Self {
        let (l2, r2) = (other.lsize(), other.rsize());
        let mut edges = Vec::new();
        for (i1, j1) in self.edges() {
            for (i2, j2) in other.edges() {
                edges.push((i1 * l2 + i2, j1 * r2 + j2));
            }
        }
        Self::new(self.lsize() * l2, self.rsize() * r2, edges).expect("product is well formed")
    }

    /// Quotient by partitions of each side, given as block labels `0..k` per vertex.
    /// Block `a` on the left is adjacent to block `b` on the right iff some edge joins them.
    pub fn quotient(&self, left_blocks: &[usize], right_blocks: &[usize]) -> Self {
        assert_eq!(left_blocks.len(), self.lsize());
        assert_eq!(right_blocks.len(), self.rsize());
        let nl = left_blocks.iter().map(|&b| b + 1).max().unwrap_or(0);
        let nr = right_blocks.iter().map(|&b| b + 1).max().unwrap_or(0);
        let mut edges: Vec<(usize, usize)> =
            self.edges().into_iter().map(|(i, j)| (left_blocks[i], right_blocks[j])).collect();
        edges.sort_unstable();
        edges.dedup();
        Self::new(nl, nr, edges).expect("quotient is well formed")
    }

    /// The underlying plain graph: left vertices `0..l`, right vertices `l..l+r`.
    pub fn as_graph(&self) -> Graph {
        let l = self.lsize();
        Graph::new(self.order(), self.edges().into_iter().map(|(i, j)| (i, l + j))).expect("bipartite graph is simple")
    }

    /// Bipartite double cover: both sides are copies of `V(h)` and left `u` meets right `v`
    /// iff `{u, v}` is an edge. A loop gives one edge, any other edge gives two.
    pub fn bip(h: &Graph) -> Self {
        let n = h.n();
        Self::new(n, n, h.ordered_edges()).expect("double cover is well formed")
    }

    pub fn parse(text: &str) -> Result<Self> {
        match parse_any(text)? {
            AnyGraph::Bigraph(g) => Ok(g),
            AnyGraph::Graph(_) => Err(Error::Parse { line: first_content_line(text), msg: "expected a `bigraph` header".into() }),
        }
    }

    pub fn to_text(&self) -> String {
        let mut s = format!("bigraph {} {}\n", self.lsize(), self.rsize());
        for (i, j) in self.edges() {
            s.push_str(&format!("{i} {j}\n"));
        }
        s
    }
}

impl fmt::Display for TwoColouredGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "bigraph({},{};", self.lsize(), self.rsize())?;
        for (k, (i, j)) in self.edges().into_iter().enumerate() {
            write!(f, "{}{i}-{j}", if k == 0 { "" } else { "," })?;
        }
        write!(f, ")")
    }
}

// reports embed graphs in the same text format the parser reads
impl Serialize for TwoColouredGraph {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_text())
    }
}

impl Serialize for Graph {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_text())
    }
}

/// A pair of non-empty vertex sets with every left-right pair adjacent. Both lists are sorted.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct Biclique {
    pub left: Vec<usize>,
    pub right: Vec<usize>,
}

impl Biclique {
    pub fn new(mut left: Vec<usize>, mut right: Vec<usize>) -> Self {
        left.sort_unstable();
        left.dedup();
        right.sort_unstable();
        right.dedup();
        Biclique { left, right }
    }

    pub fn is_biclique_of(&self, h: &TwoColouredGraph) -> bool {
        !self.left.is_empty()
            && !self.right.is_empty()
            && self.left.iter().all(|&i| self.right.iter().all(|&j| i < h.lsize() && j < h.rsize() && h.has_edge(i, j)))
    }
}

impl fmt::Display for Biclique {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({:?}, {:?})", self.left, self.right)
    }
}

/// Either kind of graph, as read from a file.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum AnyGraph {
    Graph(Graph),
    Bigraph(TwoColouredGraph),
}

fn first_content_line(text: &str) -> usize {
    text.lines()
        .position(|l| {
            let t = l.trim();
            !t.is_empty() && !t.starts_with('#')
        })
        .map_or(1, |p| p + 1)
}

/// Parse the text format: a `graph <n>` or `bigraph <l> <r>` header followed by one
/// `u v` edge per line. Blank lines and lines starting with `#` are ignored.
pub fn parse_any(text: &str) -> Result<AnyGraph> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(k, l)| (k + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));
    let (hline, header) = lines.next().ok_or(Error::Parse { line: 1, msg: "missing header".into() })?;
    let perr = |line: usize, msg: &str| Error::Parse { line, msg: msg.to_string() };
    let toks: Vec<&str> = header.split_whitespace().collect();
    let num = |s: &str, line: usize| s.parse::<usize>().map_err(|_| perr(line, &format!("expected a non-negative integer, got `{s}`")));
    match toks.as_slice() {
        ["graph", n] => {
            let n = num(n, hline)?;
            let mut adj: Vec<Vec<usize>> = vec![Vec::new(); n];
            for (line, l) in lines {
                let (u, v) = parse_pair(l, line)?;
                if u >= n || v >= n {
                    return Err(perr(line, "vertex index out of range"));
                }
                if adj[u].contains(&v) {
                    return Err(perr(line, "duplicate edge"));
                }
                adj[u].push(v);
                if u != v {
                    adj[v].push(u);
                }
            }
            let edges: Vec<(usize, usize)> =
                adj.iter().enumerate().flat_map(|(u, a)| a.iter().filter(move |&&v| u <= v).map(move |&v| (u, v))).collect();
            Ok(AnyGraph::Graph(Graph::new(n, edges)?))
        }
        ["bigraph", l, r] => {
            let (l, r) = (num(l, hline)?, num(r, hline)?);
            let mut seen = std::collections::HashSet::new();
            let mut edges = Vec::new();
            for (line, t) in lines {
                let (i, j) = parse_pair(t, line)?;
                if i >= l {
                    return Err(perr(line, "L index out of range"));
                }
                if j >= r {
                    return Err(perr(line, "R index out of range"));
                }
                if !seen.insert((i, j)) {
                    return Err(perr(line, "duplicate edge"));
                }
                edges.push((i, j));
            }
            Ok(AnyGraph::Bigraph(TwoColouredGraph::new(l, r, edges)?))
        }
        _ => Err(perr(hline, "expected header `graph <n>` or `bigraph <l> <r>`")),
    }
}

fn parse_pair(l: &str, line: usize) -> Result<(usize, usize)> {
    let toks: Vec<&str> = l.split_whitespace().collect();
    let bad = || Error::Parse { line, msg: format!("expected `u v`, got `{l}`") };
    if toks.len() != 2 {
        return Err(bad());
    }
    let u = toks[0].parse().map_err(|_| bad())?;
    let v = toks[1].parse().map_err(|_| bad())?;
    Ok((u, v))
}

pub(crate) fn components(adj: &[Vec<usize>]) -> Vec<Vec<usize>> {
    let n = adj.len();
    let mut seen = vec![false; n];
    let mut out = Vec::new();
    for s in 0..n {
        if seen[s] {
            continue;
        }
        seen[s] = true;
        let mut comp = vec![s];
        let mut k = 0;
        while k < comp.len() {
            let u = comp[k];
            k += 1;
            for &v in &adj[u] {
                if !seen[v] {
                    seen[v] = true;
                    comp.push(v);
                }
            }
        }
        comp.sort_unstable();
        out.push(comp);
    }
    out
}
