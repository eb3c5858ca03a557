//! Acyclic orientations of simple graphs.
//!
//! An orientation is a bit per edge in canonical edge order: edges are
//! stored as `(u, v)` with `u < v` and sorted, and a set bit means `u -> v`.
//! Two orientations are adjacent in `ac(G)` when they differ on one edge,
//! and the hull of a set of orientations is every acyclic orientation that
//! agrees with all of them wherever they all agree.

use std::fmt;
use std::path::Path;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::convexity::{count_between, members_between, InversionTable};
use crate::perm::{all_permutations, Permutation};
use crate::{Error, Result};

/// A simple undirected graph on vertices `0..n` (1-based in files).
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SimpleGraph {
    n: usize,
    edges: Vec<(usize, usize)>,
}

#[derive(Serialize, Deserialize)]
struct GraphFile {
    n: usize,
    edges: Vec<[usize; 2]>,
}

impl SimpleGraph {
    /// Builds from 0-based edges; duplicates are merged, loops rejected.
    pub fn new(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut out = Vec::with_capacity(edges.len());
        for &(u, v) in edges {
            if u == v {
                return Err(Error::InvalidGraph(format!("loop at vertex {}", u + 1)));
            }
            if u >= n || v >= n {
                return Err(Error::InvalidGraph(format!("edge {} {} outside 1..={n}", u + 1, v + 1)));
            }
            out.push((u.min(v), u.max(v)));
        }
        out.sort_unstable();
        out.dedup();
        if out.len() > 64 {
            return Err(Error::InvalidGraph("more than 64 edges".into()));
        }
        Ok(SimpleGraph { n, edges: out })
    }

    /// Builds from 1-based edges.
    pub fn from_one_based(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        if edges.iter().any(|&(u, v)| u == 0 || v == 0) {
            return Err(Error::InvalidGraph("vertices are numbered from 1".into()));
        }
        let zero: Vec<(usize, usize)> = edges.iter().map(|&(u, v)| (u - 1, v - 1)).collect();
        Self::new(n, &zero)
    }

    pub fn complete(n: usize) -> Self {
        let edges: Vec<(usize, usize)> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
        Self::new(n, &edges).expect("complete graph")
    }

    pub fn cycle(n: usize) -> Self {
        let edges: Vec<(usize, usize)> = (0..n).map(|u| (u, (u + 1) % n)).collect();
        Self::new(n, &edges).expect("cycle")
    }

    pub fn path(n: usize) -> Self {
        let edges: Vec<(usize, usize)> = (1..n).map(|u| (u - 1, u)).collect();
        Self::new(n, &edges).expect("path")
    }

    /// Text (`u v` per line, `#` comments) or JSON `{"n", "edges"}`. In the
    /// text form the vertex count is the largest label seen.
    pub fn parse(s: &str) -> Result<Self> {
        if s.trim_start().starts_with('{') {
            let file: GraphFile = serde_json::from_str(s)?;
            let edges: Vec<(usize, usize)> = file.edges.iter().map(|&[u, v]| (u, v)).collect();
            return Self::from_one_based(file.n, &edges);
        }
        let mut edges = Vec::new();
        for (lineno, line) in s.lines().enumerate() {
            let line = line.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let parts: Vec<&str> = line.split_whitespace().collect();
            let bad = || Error::InvalidGraph(format!("line {}: expected `u v`, got `{line}`", lineno + 1));
            if parts.len() != 2 {
                return Err(bad());
            }
            let u: usize = parts[0].parse().map_err(|_| bad())?;
            let v: usize = parts[1].parse().map_err(|_| bad())?;
            edges.push((u, v));
        }
        let n = edges.iter().map(|&(u, v)| u.max(v)).max().unwrap_or(0);
        Self::from_one_based(n, &edges)
    }

    pub fn from_file(path: impl AsRef<Path>) -> Result<Self> {
        Self::parse(&std::fs::read_to_string(path)?)
    }

    pub fn to_json(&self) -> String {
        let file = GraphFile {
            n: self.n,
            edges: self.edges.iter().map(|&(u, v)| [u + 1, v + 1]).collect(),
        };
        serde_json::to_string(&file).expect("graph serializes")
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn edge_index(&self, u: usize, v: usize) -> Option<usize> {
        self.edges.binary_search(&(u.min(v), u.max(v))).ok()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.edge_index(u, v).is_some()
    }

    pub fn neighbors(&self, u: usize) -> Vec<usize> {
        self.edges
            .iter()
            .filter_map(|&(a, b)| {
                if a == u {
                    Some(b)
                } else if b == u {
                    Some(a)
                } else {
                    None
                }
            })
            .collect()
    }

    pub fn is_connected(&self) -> bool {
        if self.n == 0 {
            return true;
        }
        let mut seen = vec![false; self.n];
        let mut stack = vec![0];
        seen[0] = true;
        while let Some(u) = stack.pop() {
            for v in self.neighbors(u) {
                if !seen[v] {
                    seen[v] = true;
                    stack.push(v);
                }
            }
        }
        seen.into_iter().all(|s| s)
    }

    /// Biconnected blocks (as sorted vertex lists), isolated vertices
    /// excluded. Hopcroft-Tarjan with an edge stack.
    pub fn blocks(&self) -> Vec<Vec<usize>> {
        struct State<'g> {
            g: &'g SimpleGraph,
            disc: Vec<usize>,
            low: Vec<usize>,
            time: usize,
            stack: Vec<(usize, usize)>,
            blocks: Vec<Vec<usize>>,
        }
        fn dfs(st: &mut State, u: usize, parent: Option<usize>) {
            st.time += 1;
            st.disc[u] = st.time;
            st.low[u] = st.time;
            for v in st.g.neighbors(u) {
                if st.disc[v] == 0 {
                    st.stack.push((u, v));
                    dfs(st, v, Some(u));
                    st.low[u] = st.low[u].min(st.low[v]);
                    if st.low[v] >= st.disc[u] {
                        let mut block = Vec::new();
                        while let Some((a, b)) = st.stack.pop() {
                            block.push(a);
                            block.push(b);
                            if (a, b) == (u, v) {
                                break;
                            }
                        }
                        block.sort_unstable();
                        block.dedup();
                        st.blocks.push(block);
                    }
                } else if Some(v) != parent && st.disc[v] < st.disc[u] {
                    st.stack.push((u, v));
                    st.low[u] = st.low[u].min(st.disc[v]);
                }
            }
        }
        let mut st = State {
            g: self,
            disc: vec![0; self.n],
            low: vec![0; self.n],
            time: 0,
            stack: Vec::new(),
            blocks: Vec::new(),
        };
        for u in 0..self.n {
            if st.disc[u] == 0 {
                dfs(&mut st, u, None);
            }
        }
        let mut blocks = st.blocks;
        blocks.sort();
        blocks
    }

    /// The subgraph induced on `vertices`, relabelled in the given order.
    pub fn induced(&self, vertices: &[usize]) -> SimpleGraph {
        let mut edges = Vec::new();
        for (i, &a) in vertices.iter().enumerate() {
            for (j, &b) in vertices.iter().enumerate().skip(i + 1) {
                if self.has_edge(a, b) {
                    edges.push((i, j));
                }
            }
        }
        SimpleGraph::new(vertices.len(), &edges).expect("induced subgraph")
    }
}

impl FromStr for SimpleGraph {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Self::parse(s)
    }
}

/// A direction for every edge; bit `k` set means `u -> v` for edge
/// `k = (u, v)`, `u < v`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct AcyclicOrientation {
    pub bits: u64,
}

impl AcyclicOrientation {
    /// Builds from 1-based arcs `from -> to`, one per edge.
    pub fn from_arcs(graph: &SimpleGraph, arcs: &[(usize, usize)]) -> Result<Self> {
        if arcs.len() != graph.edges().len() {
            return Err(Error::InvalidGraph(format!("{} arcs for {} edges", arcs.len(), graph.edges().len())));
        }
        let mut bits = 0u64;
        let mut seen = 0u64;
        for &(a, b) in arcs {
            let (a, b) = (a.wrapping_sub(1), b.wrapping_sub(1));
            let k = graph
                .edge_index(a, b)
                .ok_or_else(|| Error::InvalidGraph(format!("no edge {} {}", a + 1, b + 1)))?;
            seen |= 1 << k;
            if a < b {
                bits |= 1 << k;
            }
        }
        if seen.count_ones() as usize != graph.edges().len() {
            return Err(Error::InvalidGraph("an edge is oriented twice".into()));
        }
        let o = AcyclicOrientation { bits };
        if !is_acyclic(graph, o.bits, graph.edges().len()) {
            return Err(Error::InvalidGraph("orientation has a directed cycle".into()));
        }
        Ok(o)
    }

    /// 1-based arcs in edge order.
    pub fn arcs(&self, graph: &SimpleGraph) -> Vec<(usize, usize)> {
        graph
            .edges()
            .iter()
            .enumerate()
            .map(|(k, &(u, v))| if self.bits >> k & 1 == 1 { (u + 1, v + 1) } else { (v + 1, u + 1) })
            .collect()
    }
}

impl fmt::Debug for AcyclicOrientation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "AcyclicOrientation({:#b})", self.bits)
    }
}

/// Whether the first `count` edges, oriented by `bits`, contain no
/// directed cycle.
fn is_acyclic(graph: &SimpleGraph, bits: u64, count: usize) -> bool {
    let n = graph.n();
    let mut out = vec![Vec::new(); n];
    let mut indegree = vec![0usize; n];
    for (k, &(u, v)) in graph.edges().iter().enumerate().take(count) {
        let (a, b) = if bits >> k & 1 == 1 { (u, v) } else { (v, u) };
        out[a].push(b);
        indegree[b] += 1;
    }
    let mut ready: Vec<usize> = (0..n).filter(|&u| indegree[u] == 0).collect();
    let mut removed = 0;
    while let Some(u) = ready.pop() {
        removed += 1;
        for &v in &out[u] {
            indegree[v] -= 1;
            if indegree[v] == 0 {
                ready.push(v);
            }
        }
    }
    removed == n
}

/// `ac(G)`, sorted by bit pattern.
pub fn acyclic_orientations(graph: &SimpleGraph) -> Vec<AcyclicOrientation> {
    fn rec(graph: &SimpleGraph, k: usize, bits: u64, out: &mut Vec<AcyclicOrientation>) {
        if k == graph.edges().len() {
            out.push(AcyclicOrientation { bits });
            return;
        }
        for dir in [0u64, 1] {
            let next = bits | dir << k;
            if is_acyclic(graph, next, k + 1) {
                rec(graph, k + 1, next, out);
            }
        }
    }
    let mut out = Vec::new();
    rec(graph, 0, 0, &mut out);
    out.sort();
    out
}

/// Orientations differing on exactly one edge.
pub fn ac_adjacent(o: &AcyclicOrientation, p: &AcyclicOrientation) -> bool {
    (o.bits ^ p.bits).count_ones() == 1
}

/// `ac(G)` with each orientation's bit pattern as its mask.
#[derive(Debug, Clone)]
pub struct OrientationTable {
    graph: SimpleGraph,
    orientations: Vec<AcyclicOrientation>,
}

impl OrientationTable {
    pub fn new(graph: &SimpleGraph) -> Self {
        OrientationTable {
            graph: graph.clone(),
            orientations: acyclic_orientations(graph),
        }
    }

    pub fn graph(&self) -> &SimpleGraph {
        &self.graph
    }

    pub fn orientations(&self) -> &[AcyclicOrientation] {
        &self.orientations
    }

    pub fn index_of(&self, o: &AcyclicOrientation) -> Option<usize> {
        self.orientations.binary_search(o).ok()
    }
}

impl InversionTable for OrientationTable {
    fn len(&self) -> usize {
        self.orientations.len()
    }

    fn mask(&self, idx: usize) -> u64 {
        self.orientations[idx].bits
    }

    /// Arcs such as `2>1 1>3`.
    fn label(&self, idx: usize) -> String {
        let arcs: Vec<String> = self.orientations[idx]
            .arcs(&self.graph)
            .into_iter()
            .map(|(a, b)| format!("{a}>{b}"))
            .collect();
        arcs.join(" ")
    }
}

fn agreement(os: &[AcyclicOrientation], edges: usize) -> Result<(u64, u64)> {
    if os.is_empty() {
        return Err(Error::Empty("hull of no orientations"));
    }
    let full = crate::finite::full_mask(edges);
    let lower = os.iter().fold(full, |m, o| m & o.bits);
    let upper = os.iter().fold(0, |m, o| m | o.bits);
    Ok((lower, upper))
}

/// Every acyclic orientation agreeing with all of `os` on the edges where
/// they all agree.
pub fn ac_hull(table: &OrientationTable, os: &[AcyclicOrientation]) -> Result<Vec<AcyclicOrientation>> {
    let (lower, upper) = agreement(os, table.graph.edges().len())?;
    Ok(members_between(table, lower, upper)
        .into_iter()
        .map(|i| table.orientations[i])
        .collect())
}

pub fn ac_hull_size(table: &OrientationTable, os: &[AcyclicOrientation]) -> Result<usize> {
    let (lower, upper) = agreement(os, table.graph.edges().len())?;
    Ok(count_between(table, lower, upper))
}

/// Verdict of the block criterion.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Classification {
    pub good: bool,
    /// Blocks as 1-based vertex lists.
    pub blocks: Vec<Vec<usize>>,
    /// 1-based blocks that are not complete graphs.
    pub incomplete_blocks: Vec<Vec<usize>>,
    pub reason: String,
}

/// Good iff every biconnected block is a complete graph.
pub fn classify_good(graph: &SimpleGraph) -> Classification {
    let blocks = graph.blocks();
    let complete = |b: &Vec<usize>| {
        b.iter()
            .enumerate()
            .all(|(i, &u)| b[i + 1..].iter().all(|&v| graph.has_edge(u, v)))
    };
    let one_based = |b: &Vec<usize>| b.iter().map(|v| v + 1).collect::<Vec<_>>();
    let incomplete: Vec<Vec<usize>> = blocks.iter().filter(|b| !complete(b)).map(one_based).collect();
    let good = incomplete.is_empty();
    let reason = if good {
        format!("all {} blocks are complete graphs", blocks.len())
    } else {
        let names: Vec<String> = incomplete.iter().map(|b| format!("{b:?}")).collect();
        format!("incomplete blocks: {}", names.join(", "))
    };
    Classification {
        good,
        blocks: blocks.iter().map(one_based).collect(),
        incomplete_blocks: incomplete,
        reason,
    }
}

/// Outcome of comparing `ac(K_n)` with the Cayley graph of `S_n`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct IsoReport {
    pub n: usize,
    pub vertices: usize,
    pub edges: usize,
    pub bijective: bool,
    pub edges_match: bool,
    pub ok: bool,
}

/// The orientation of `K_n` induced by `w`: edge `i j` points `i -> j`
/// iff `w^{-1}(i) < w^{-1}(j)`.
pub fn orientation_of_permutation(graph: &SimpleGraph, w: &Permutation) -> AcyclicOrientation {
    let bits = graph
        .edges()
        .iter()
        .enumerate()
        .filter(|&(_, &(u, v))| w.position(u + 1) < w.position(v + 1))
        .fold(0u64, |m, (k, _)| m | 1 << k);
    AcyclicOrientation { bits }
}

/// Checks that `w -> orientation_of_permutation(w)` is a graph isomorphism
/// from the Cayley graph of `S_n` (edges `w ~ w s_i`) onto `ac(K_n)`.
pub fn ac_iso_check(n: usize) -> IsoReport {
    let graph = SimpleGraph::complete(n);
    let table = OrientationTable::new(&graph);
    let perms = all_permutations(n);
    let images: Vec<AcyclicOrientation> = perms.iter().map(|w| orientation_of_permutation(&graph, w)).collect();
    let mut sorted = images.clone();
    sorted.sort();
    sorted.dedup();
    let bijective = sorted.len() == perms.len() && sorted == table.orientations;
    let mut edges_match = true;
    let mut edges = 0;
    for (a, u) in perms.iter().enumerate() {
        for (b, v) in perms.iter().enumerate().skip(a + 1) {
            // u^{-1} v is a simple transposition iff it has length 1
            let cayley = u.inverse().compose(v).length() == 1;
            if cayley {
                edges += 1;
            }
            edges_match &= cayley == ac_adjacent(&images[a], &images[b]);
        }
    }
    IsoReport {
        n,
        vertices: perms.len(),
        edges,
        bijective,
        edges_match,
        ok: bijective && edges_match,
    }
}

/// A graph with three named orientations.
#[derive(Debug, Clone)]
pub struct Figure {
    pub graph: SimpleGraph,
    pub orientations: [AcyclicOrientation; 3],
}

impl Figure {
    /// `(|conv(o,o')|, |conv(o',o'')|, |conv(o,o'')|)`.
    pub fn hull_sizes(&self) -> (usize, usize, usize) {
        let table = OrientationTable::new(&self.graph);
        let [o, o1, o2] = self.orientations;
        let size = |a, b| ac_hull_size(&table, &[a, b]).expect("nonempty");
        (size(o, o1), size(o1, o2), size(o, o2))
    }
}

/// Two triangles `abd` and `acd` glued along `ad`: vertices `a b c d`
/// are 1..=4 and the edges are `ab ac ad cd bd`.
pub fn fig4() -> Figure {
    let (a, b, c, d) = (1, 2, 3, 4);
    let graph = SimpleGraph::from_one_based(4, &[(a, b), (a, c), (a, d), (c, d), (b, d)]).expect("G_4");
    let o = |arcs: &[(usize, usize)]| AcyclicOrientation::from_arcs(&graph, arcs).expect("acyclic");
    let orientations = [
        o(&[(b, a), (a, c), (d, a), (d, c), (d, b)]),
        o(&[(b, a), (a, c), (a, d), (c, d), (b, d)]),
        o(&[(b, a), (c, a), (a, d), (c, d), (b, d)]),
    ];
    Figure { graph, orientations }
}

/// The `n`-cycle `a b ... d e ... a` where the path from `b` to `d` has
/// `bd_edges` edges and the path from `e` back to `a` has the rest
/// (`n - 2 - bd_edges >= 1`).
pub fn fig5(n: usize, bd_edges: usize) -> Result<Figure> {
    if n < 4 || bd_edges == 0 || bd_edges + 3 > n {
        return Err(Error::InvalidGraph(format!("no split of C_{n} with {bd_edges} edges from b to d")));
    }
    // cycle order v0 = a, v1 = b, ..., v_{1+k} = d, v_{2+k} = e, ..., v_n = a
    let k = bd_edges;
    let v = |i: usize| i % n + 1;
    let graph = SimpleGraph::from_one_based(n, &(0..n).map(|i| (v(i), v(i + 1))).collect::<Vec<_>>())?;
    let forward = |i: usize| (v(i), v(i + 1));
    let backward = |i: usize| (v(i + 1), v(i));
    let build = |ab: bool, bd: bool, de: bool, ea: bool| {
        let mut arcs = Vec::with_capacity(n);
        for i in 0..n {
            let fwd = match i {
                0 => ab,
                i if i <= k => bd,
                i if i == k + 1 => de,
                _ => ea,
            };
            arcs.push(if fwd { forward(i) } else { backward(i) });
        }
        AcyclicOrientation::from_arcs(&graph, &arcs)
    };
    // o: a->b, b=>d, e->d, e=>a; o': b->a, b=>d, d->e, e=>a; o'': b->a, d=>b, d->e, a=>e
    let orientations = [
        build(true, true, false, true)?,
        build(false, true, true, true)?,
        build(false, false, true, false)?,
    ];
    Ok(Figure { graph, orientations })
}
