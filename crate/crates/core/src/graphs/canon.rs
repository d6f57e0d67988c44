//! Canonical forms by minimizing the adjacency encoding over vertex orders.
//!
//! The search walks an individualization-refinement tree: the ordered
//! partition starts from degree classes and is refined to an equitable
//! partition, then the first non-singleton cell is split by fixing each
//! of its vertices in turn. Every leaf is a vertex order; the canonical
//! form is the smallest graph6 bit string over all leaves. Two vertices
//! with the same neighbourhood (apart from each other) are interchangeable,
//! so only one of them is tried at any branch point.

use std::fmt;

use serde::{Deserialize, Serialize};

use super::{bits, to_graph6, SmallGraph};
use crate::error::Result;
use crate::limits::Limits;

/// graph6 text of the canonically relabeled graph. Equal for two graphs
/// exactly when they are isomorphic.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct CanonicalForm(String);

impl CanonicalForm {
    pub fn as_str(&self) -> &str {
        &self.0
    }

    pub fn as_bytes(&self) -> &[u8] {
        self.0.as_bytes()
    }
}

impl fmt::Display for CanonicalForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

/// Upper-triangle bits in graph6 order, packed MSB first.
type Key = [u64; 8];

fn leaf_key(g: &SmallGraph, order: &[usize]) -> Key {
    let mut key = [0u64; 8];
    let mut k = 0;
    for j in 1..order.len() {
        let row = g.row(order[j]);
        for &vi in &order[..j] {
            if row >> vi & 1 == 1 {
                key[k / 64] |= 1 << (63 - k % 64);
            }
            k += 1;
        }
    }
    key
}

type Partition = Vec<Vec<usize>>;

/// Refines `cells` to the coarsest equitable partition finer than it.
/// Cells are split by neighbour count into the splitter cell, children
/// ordered by increasing count, so the result depends only on the graph
/// structure and the input partition.
fn refine(g: &SmallGraph, cells: &mut Partition) {
    loop {
        let mut changed = false;
        let mut s = 0;
        while s < cells.len() {
            let mut splitter = 0u32;
            for &v in &cells[s] {
                splitter |= 1 << v;
            }
            let mut c = 0;
            while c < cells.len() {
                if cells[c].len() > 1 {
                    let counts: Vec<u32> = cells[c]
                        .iter()
                        .map(|&v| (g.row(v) & splitter).count_ones())
                        .collect();
                    if counts.iter().any(|&x| x != counts[0]) {
                        let mut keyed: Vec<(u32, usize)> =
                            counts.into_iter().zip(cells[c].iter().copied()).collect();
                        keyed.sort_unstable();
                        let mut parts: Vec<Vec<usize>> = Vec::new();
                        let mut last = None;
                        for (cnt, v) in keyed {
                            if last != Some(cnt) {
                                parts.push(Vec::new());
                                last = Some(cnt);
                            }
                            parts.last_mut().expect("pushed").push(v);
                        }
                        let added = parts.len() - 1;
                        cells.splice(c..=c, parts);
                        if s > c {
                            s += added;
                        }
                        c += added;
                        changed = true;
                    }
                }
                c += 1;
            }
            s += 1;
        }
        if !changed {
            break;
        }
    }
}

fn are_twins(g: &SmallGraph, u: usize, v: usize) -> bool {
    g.row(u) & !(1 << v) == g.row(v) & !(1 << u)
}

struct Search<'a> {
    g: &'a SmallGraph,
    best: Option<(Key, Vec<usize>)>,
}

impl Search<'_> {
    fn descend(&mut self, mut cells: Partition) {
        refine(self.g, &mut cells);
        let Some(target) = cells.iter().position(|c| c.len() > 1) else {
            let order: Vec<usize> = cells.into_iter().map(|c| c[0]).collect();
            let key = leaf_key(self.g, &order);
            if self.best.as_ref().is_none_or(|(b, _)| key < *b) {
                self.best = Some((key, order));
            }
            return;
        };
        let mut tried: Vec<usize> = Vec::new();
        for &v in &cells[target] {
            if tried.iter().any(|&u| are_twins(self.g, u, v)) {
                continue;
            }
            tried.push(v);
            let mut child = Vec::with_capacity(cells.len() + 1);
            child.extend_from_slice(&cells[..target]);
            child.push(vec![v]);
            child.push(cells[target].iter().copied().filter(|&w| w != v).collect());
            child.extend_from_slice(&cells[target + 1..]);
            self.descend(child);
        }
    }
}

/// Vertex order `perm` such that `g.permuted(&perm)` is the canonical
/// representative.
pub fn canonical_labeling(g: &SmallGraph, limits: &Limits) -> Result<Vec<usize>> {
    limits.check_vertices(g.order())?;
    let n = g.order();
    if n == 0 {
        return Ok(Vec::new());
    }
    let mut search = Search { g, best: None };
    let all: Vec<usize> = bits(g.vertex_mask()).collect();
    search.descend(vec![all]);
    Ok(search.best.expect("at least one leaf").1)
}

pub fn canonical_form(g: &SmallGraph, limits: &Limits) -> Result<CanonicalForm> {
    let perm = canonical_labeling(g, limits)?;
    Ok(CanonicalForm(to_graph6(&g.permuted(&perm))))
}
