//! Small labeled simple graphs with one-word adjacency rows.

mod canon;
mod embed;
mod graph6;

use std::fmt;

use crate::error::{Error, Result};
use crate::limits::MAX_VERTICES;
use crate::sequences::DegreeSequence;

pub use canon::{canonical_form, canonical_labeling, CanonicalForm};
pub use embed::{contains_subgraph, find_embedding, Embedding};
pub use graph6::{from_graph6, to_graph6};

/// Simple undirected graph on at most 32 vertices. Row `v` is the bitset
/// of neighbours of `v`; the relation is symmetric with an empty diagonal.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct SmallGraph {
    n: usize,
    rows: [u32; MAX_VERTICES],
}

fn check_order(n: usize) -> Result<()> {
    if n > MAX_VERTICES {
        Err(Error::ResourceLimit {
            what: "vertex count",
            limit: MAX_VERTICES,
            actual: n,
        })
    } else {
        Ok(())
    }
}

impl SmallGraph {
    /// Edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Result<Self> {
        check_order(n)?;
        Ok(SmallGraph {
            n,
            rows: [0; MAX_VERTICES],
        })
    }

    /// Builds a graph from an edge list. Loops, repeated edges and
    /// out-of-range endpoints are rejected.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut g = Self::empty(n)?;
        for &(u, v) in edges {
            if u >= n || v >= n {
                return Err(Error::invalid(format!(
                    "edge {u}-{v} out of range for n={n}"
                )));
            }
            if u == v {
                return Err(Error::invalid(format!("loop at vertex {u}")));
            }
            if g.has_edge(u, v) {
                return Err(Error::invalid(format!("repeated edge {u}-{v}")));
            }
            g.add_edge(u, v);
        }
        Ok(g)
    }

    /// Parses `u-v` pairs separated by commas or whitespace, e.g.
    /// `0-1,1-2 2-0`. Vertex count is `n` if given, otherwise one more
    /// than the largest endpoint.
    pub fn parse_edge_list(text: &str, n: Option<usize>) -> Result<Self> {
        let mut edges = Vec::new();
        let mut max_v = None::<usize>;
        let bytes = text.as_bytes();
        let mut i = 0;
        while i < bytes.len() {
            if bytes[i] == b',' || bytes[i].is_ascii_whitespace() {
                i += 1;
                continue;
            }
            let start = i;
            while i < bytes.len() && bytes[i] != b',' && !bytes[i].is_ascii_whitespace() {
                i += 1;
            }
            let token = &text[start..i];
            let (a, b) = token
                .split_once('-')
                .ok_or_else(|| Error::parse(start, format!("expected `u-v`, found `{token}`")))?;
            let u: usize = a
                .parse()
                .map_err(|_| Error::parse(start, format!("bad vertex `{a}`")))?;
            let v: usize = b
                .parse()
                .map_err(|_| Error::parse(start + a.len() + 1, format!("bad vertex `{b}`")))?;
            max_v = Some(max_v.unwrap_or(0).max(u).max(v));
            edges.push((u, v));
        }
        let n = n.unwrap_or_else(|| max_v.map_or(0, |m| m + 1));
        Self::from_edges(n, &edges)
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.rows[..self.n]
            .iter()
            .map(|r| r.count_ones() as usize)
            .sum::<usize>()
            / 2
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && v < self.n && self.rows[u] >> v & 1 == 1
    }

    pub(crate) fn add_edge(&mut self, u: usize, v: usize) {
        debug_assert!(u != v && u < self.n && v < self.n);
        self.rows[u] |= 1 << v;
        self.rows[v] |= 1 << u;
    }

    pub(crate) fn remove_edge(&mut self, u: usize, v: usize) {
        self.rows[u] &= !(1 << v);
        self.rows[v] &= !(1 << u);
    }

    /// Neighbourhood bitset of `v`.
    pub fn row(&self, v: usize) -> u32 {
        self.rows[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.rows[v].count_ones() as usize
    }

    pub fn degrees(&self) -> Vec<usize> {
        (0..self.n).map(|v| self.degree(v)).collect()
    }

    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        bits(self.rows[v])
    }

    /// Edges `(u, v)` with `u < v`, ordered lexicographically.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.edge_count());
        for u in 0..self.n {
            for v in bits(self.rows[u] & !((2u64 << u) - 1) as u32) {
                out.push((u, v));
            }
        }
        out
    }

    /// Nonincreasing degree sequence. `None` only for the 0-vertex graph.
    pub fn degree_sequence(&self) -> Option<DegreeSequence> {
        if self.n == 0 {
            None
        } else {
            DegreeSequence::new(self.degrees()).ok()
        }
    }

    /// Sum of all degrees, i.e. twice the edge count.
    pub fn degree_sum(&self) -> usize {
        2 * self.edge_count()
    }

    /// Relabels so that old vertex `perm[i]` becomes new vertex `i`.
    pub fn permuted(&self, perm: &[usize]) -> SmallGraph {
        debug_assert_eq!(perm.len(), self.n);
        let mut inv = [0usize; MAX_VERTICES];
        for (new, &old) in perm.iter().enumerate() {
            inv[old] = new;
        }
        let mut g = SmallGraph {
            n: self.n,
            rows: [0; MAX_VERTICES],
        };
        for (new, &old) in perm.iter().enumerate() {
            let mut row = 0u32;
            for w in bits(self.rows[old]) {
                row |= 1 << inv[w];
            }
            g.rows[new] = row;
        }
        g
    }

    /// Adds a new vertex adjacent to `neighbors`; it receives index `n`.
    pub fn with_vertex(&self, neighbors: &[usize]) -> Result<SmallGraph> {
        check_order(self.n + 1)?;
        let mut g = *self;
        let x = self.n;
        g.n += 1;
        for &v in neighbors {
            if v >= self.n {
                return Err(Error::invalid(format!("neighbour {v} out of range")));
            }
            if g.has_edge(x, v) {
                return Err(Error::invalid(format!("neighbour {v} listed twice")));
            }
            g.add_edge(x, v);
        }
        Ok(g)
    }

    pub(crate) fn vertex_mask(&self) -> u32 {
        if self.n == 32 {
            u32::MAX
        } else {
            (1u32 << self.n) - 1
        }
    }
}

pub(crate) fn bits(mut word: u32) -> impl Iterator<Item = usize> {
    std::iter::from_fn(move || {
        if word == 0 {
            None
        } else {
            let i = word.trailing_zeros() as usize;
            word &= word - 1;
            Some(i)
        }
    })
}

impl fmt::Debug for SmallGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "SmallGraph(n={}, edges=[", self.n)?;
        for (i, (u, v)) in self.edges().into_iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{u}-{v}")?;
        }
        f.write_str("])")
    }
}

/// K_k.
pub fn complete_graph(k: usize) -> Result<SmallGraph> {
    let mut g = SmallGraph::empty(k)?;
    for u in 0..k {
        g.rows[u] = g.vertex_mask() & !(1 << u);
    }
    Ok(g)
}

/// Cycle `0-1-…-(k-1)-0`, k ≥ 3.
pub fn cycle_graph(k: usize) -> Result<SmallGraph> {
    if k < 3 {
        return Err(Error::invalid(format!(
            "a cycle needs at least 3 vertices, got {k}"
        )));
    }
    let mut g = SmallGraph::empty(k)?;
    for u in 0..k {
        g.add_edge(u, (u + 1) % k);
    }
    Ok(g)
}

/// `k` independent edges `0-1, 2-3, …`.
pub fn perfect_matching(k: usize) -> Result<SmallGraph> {
    let mut g = SmallGraph::empty(2 * k)?;
    for i in 0..k {
        g.add_edge(2 * i, 2 * i + 1);
    }
    Ok(g)
}

pub fn complement(g: &SmallGraph) -> SmallGraph {
    let mut out = *g;
    let mask = g.vertex_mask();
    for u in 0..g.n {
        out.rows[u] = !g.rows[u] & mask & !(1 << u);
    }
    out
}

/// Disjoint union of `a` and `b` (vertices of `a` first).
pub fn disjoint_union(a: &SmallGraph, b: &SmallGraph) -> Result<SmallGraph> {
    let mut g = SmallGraph::empty(a.n + b.n)?;
    g.rows[..a.n].copy_from_slice(&a.rows[..a.n]);
    for v in 0..b.n {
        g.rows[a.n + v] = b.rows[v] << a.n;
    }
    Ok(g)
}

/// G1 + G2: disjoint union plus every edge between the two sides.
pub fn join(a: &SmallGraph, b: &SmallGraph) -> Result<SmallGraph> {
    let mut g = disjoint_union(a, b)?;
    for u in 0..a.n {
        for v in 0..b.n {
            g.add_edge(u, a.n + v);
        }
    }
    Ok(g)
}

/// Induced subgraph on `V(G) \ {v}`; later vertices shift down by one.
pub fn delete_vertex(g: &SmallGraph, v: usize) -> Result<SmallGraph> {
    if v >= g.n {
        return Err(Error::invalid(format!(
            "vertex {v} out of range for a graph on {} vertices",
            g.n
        )));
    }
    let keep: Vec<usize> = (0..g.n).filter(|&u| u != v).collect();
    let mut out = SmallGraph::empty(g.n - 1)?;
    for (new_u, &u) in keep.iter().enumerate() {
        for (new_w, &w) in keep.iter().enumerate() {
            if g.has_edge(u, w) {
                out.rows[new_u] |= 1 << new_w;
            }
        }
    }
    Ok(out)
}

/// K_m − C_4, the complete graph with the four edges of one 4-cycle
/// removed. Equivalently K_{m−4} joined with two independent edges.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct TargetPattern {
    m: usize,
    graph: SmallGraph,
}

impl TargetPattern {
    pub fn m(&self) -> usize {
        self.m
    }

    pub fn graph(&self) -> &SmallGraph {
        &self.graph
    }
}

/// Removes the cycle `0-1-2-3-0` from K_m.
pub fn km_minus_c4(m: usize) -> Result<TargetPattern> {
    if m < 4 {
        return Err(Error::invalid(format!("K_m - C_4 needs m >= 4, got {m}")));
    }
    let mut graph = complete_graph(m)?;
    for i in 0..4 {
        graph.remove_edge(i, (i + 1) % 4);
    }
    Ok(TargetPattern { m, graph })
}
