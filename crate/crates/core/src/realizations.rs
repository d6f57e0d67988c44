//! Realizations of degree sequences and the potentially-H decision.
//!
//! The realization space of a fixed degree sequence is connected under
//! 2-switches, so a breadth-first walk from one realization, keeping one
//! representative per isomorphism class, visits every class.

use std::collections::{HashSet, VecDeque};

use rand::rngs::StdRng;
use rand::seq::SliceRandom;
use rand::SeedableRng;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::graphs::{
    canonical_form, find_embedding, CanonicalForm, Embedding, SmallGraph, TargetPattern,
};
use crate::limits::Limits;
use crate::sequences::DegreeSequence;

/// Outcome of a potentially-H decision.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WitnessResult {
    pub verdict: bool,
    /// Realization containing the pattern (present iff `verdict`).
    pub witness: Option<SmallGraph>,
    /// Pattern vertex `i` maps to witness vertex `embedding[i]`.
    pub embedding: Option<Embedding>,
    /// Distinct isomorphism classes examined.
    pub explored: usize,
    /// Whether the whole realization space was covered. A `false` verdict
    /// is authoritative only when this is set.
    pub exhausted: bool,
}

impl WitnessResult {
    /// `Some(verdict)` when the answer is authoritative.
    pub fn conclusive(&self) -> Option<bool> {
        if self.verdict || self.exhausted {
            Some(self.verdict)
        } else {
            None
        }
    }
}

/// Havel–Hakimi layoff. Vertex `i` of the result has degree `S[i]`. The
/// vertex with the largest residual degree (lowest index on ties) is joined
/// to the next-largest remaining vertices (lowest index on ties).
pub fn havel_hakimi_realize(seq: &DegreeSequence) -> Result<SmallGraph> {
    if !seq.is_graphical() {
        return Err(Error::contract(format!("sequence {seq} is not graphical")));
    }
    let n = seq.len();
    let mut g = SmallGraph::empty(n)?;
    let mut residual: Vec<usize> = seq.terms().to_vec();
    let mut active = vec![true; n];
    while let Some(u) = (0..n)
        .filter(|&v| active[v] && residual[v] > 0)
        .min_by_key(|&v| (std::cmp::Reverse(residual[v]), v))
    {
        active[u] = false;
        let mut targets: Vec<usize> = (0..n).filter(|&v| active[v] && residual[v] > 0).collect();
        targets.sort_by_key(|&v| (std::cmp::Reverse(residual[v]), v));
        let need = residual[u];
        if targets.len() < need {
            return Err(Error::contract(format!("layoff failed for {seq}")));
        }
        for &v in &targets[..need] {
            g.add_edge(u, v);
            residual[v] -= 1;
        }
        residual[u] = 0;
    }
    Ok(g)
}

/// Replaces edges `ab`, `cd` with `ac`, `bd`.
pub fn two_switch(g: &SmallGraph, a: usize, b: usize, c: usize, d: usize) -> Result<SmallGraph> {
    let vs = [a, b, c, d];
    if let Some(&v) = vs.iter().find(|&&v| v >= g.order()) {
        return Err(Error::contract(format!("vertex {v} out of range")));
    }
    for i in 0..4 {
        for j in i + 1..4 {
            if vs[i] == vs[j] {
                return Err(Error::contract(format!(
                    "vertices not distinct: {a},{b},{c},{d}"
                )));
            }
        }
    }
    for (x, y) in [(a, b), (c, d)] {
        if !g.has_edge(x, y) {
            return Err(Error::contract(format!("{x}{y} is not an edge")));
        }
    }
    for (x, y) in [(a, c), (b, d)] {
        if g.has_edge(x, y) {
            return Err(Error::contract(format!("{x}{y} is already an edge")));
        }
    }
    let mut out = *g;
    out.remove_edge(a, b);
    out.remove_edge(c, d);
    out.add_edge(a, c);
    out.add_edge(b, d);
    Ok(out)
}

/// Every valid 2-switch of `g` as `(a, b, c, d)`, in lexicographic order of
/// the edge pair then orientation.
fn switches(g: &SmallGraph) -> Vec<(usize, usize, usize, usize)> {
    let edges = g.edges();
    let mut out = Vec::new();
    for (i, &(a, b)) in edges.iter().enumerate() {
        for &(c, d) in &edges[i + 1..] {
            if a == c || a == d || b == c || b == d {
                continue;
            }
            if !g.has_edge(a, c) && !g.has_edge(b, d) {
                out.push((a, b, c, d));
            }
            if !g.has_edge(a, d) && !g.has_edge(b, c) {
                out.push((a, b, d, c));
            }
        }
    }
    out
}

/// Order in which 2-switches are tried when expanding a realization.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum SwitchOrder {
    #[default]
    Lexicographic,
    /// Shuffle each move list with a generator seeded once per walk.
    Shuffled(u64),
}

/// Breadth-first walk over realization isomorphism classes.
pub struct RealizationWalk {
    limits: Limits,
    seen: HashSet<CanonicalForm>,
    queue: VecDeque<SmallGraph>,
    pending: Option<SmallGraph>,
    rng: Option<StdRng>,
    explored: usize,
    truncated: bool,
    error: Option<Error>,
}

impl RealizationWalk {
    pub fn new(seq: &DegreeSequence, limits: &Limits, order: SwitchOrder) -> Result<Self> {
        limits.check_vertices(seq.len())?;
        let start = havel_hakimi_realize(seq)?;
        let mut seen = HashSet::new();
        seen.insert(canonical_form(&start, limits)?);
        Ok(RealizationWalk {
            limits: *limits,
            seen,
            queue: VecDeque::from([start]),
            pending: None,
            rng: match order {
                SwitchOrder::Lexicographic => None,
                SwitchOrder::Shuffled(seed) => Some(StdRng::seed_from_u64(seed)),
            },
            explored: 0,
            truncated: false,
            error: None,
        })
    }

    /// Classes yielded so far.
    pub fn explored(&self) -> usize {
        self.explored
    }

    /// True when iteration stopped at the budget with classes left over.
    pub fn truncated(&self) -> bool {
        self.truncated
    }

    /// Error raised while expanding, if iteration ended because of one.
    pub fn take_error(&mut self) -> Option<Error> {
        self.error.take()
    }

    fn expand(&mut self, g: SmallGraph) -> Result<()> {
        let mut moves = switches(&g);
        if let Some(rng) = self.rng.as_mut() {
            moves.shuffle(rng);
        }
        for (a, b, c, d) in moves {
            let h = two_switch(&g, a, b, c, d)?;
            if self.seen.insert(canonical_form(&h, &self.limits)?) {
                self.queue.push_back(h);
            }
        }
        Ok(())
    }
}

impl Iterator for RealizationWalk {
    type Item = SmallGraph;

    fn next(&mut self) -> Option<SmallGraph> {
        if self.error.is_some() {
            return None;
        }
        if let Some(g) = self.pending.take() {
            if let Err(e) = self.expand(g) {
                self.error = Some(e);
                return None;
            }
        }
        if self
            .limits
            .realization_budget
            .is_some_and(|b| self.explored >= b)
        {
            self.truncated = !self.queue.is_empty();
            return None;
        }
        let g = self.queue.pop_front()?;
        self.pending = Some(g);
        self.explored += 1;
        Some(g)
    }
}

/// One representative per isomorphism class of realizations of `seq`.
/// Fails with [`Error::BudgetExceeded`] if the walk was cut short.
pub fn enumerate_realizations(seq: &DegreeSequence, limits: &Limits) -> Result<Vec<SmallGraph>> {
    let mut walk = RealizationWalk::new(seq, limits, SwitchOrder::Lexicographic)?;
    let all: Vec<SmallGraph> = walk.by_ref().collect();
    if let Some(e) = walk.take_error() {
        return Err(e);
    }
    if walk.truncated() {
        return Err(Error::BudgetExceeded {
            budget: limits.realization_budget.unwrap_or(0),
            explored: all.len(),
        });
    }
    Ok(all)
}

/// Decides whether some realization of `seq` contains `pattern`.
pub fn is_potentially(
    seq: &DegreeSequence,
    pattern: &TargetPattern,
    limits: &Limits,
) -> Result<WitnessResult> {
    is_potentially_with(seq, pattern, limits, SwitchOrder::Lexicographic)
}

pub fn is_potentially_with(
    seq: &DegreeSequence,
    pattern: &TargetPattern,
    limits: &Limits,
    order: SwitchOrder,
) -> Result<WitnessResult> {
    if !seq.is_graphical() {
        return Err(Error::contract(format!("sequence {seq} is not graphical")));
    }
    if seq.len() < pattern.m() {
        return Ok(WitnessResult {
            verdict: false,
            witness: None,
            embedding: None,
            explored: 0,
            exhausted: true,
        });
    }
    let mut walk = RealizationWalk::new(seq, limits, order)?;
    while let Some(g) = walk.next() {
        if let Some(map) = find_embedding(&g, pattern.graph()) {
            return Ok(WitnessResult {
                verdict: true,
                witness: Some(g),
                embedding: Some(map),
                explored: walk.explored(),
                exhausted: false,
            });
        }
    }
    if let Some(e) = walk.take_error() {
        return Err(e);
    }
    Ok(WitnessResult {
        verdict: false,
        witness: None,
        embedding: None,
        explored: walk.explored(),
        exhausted: !walk.truncated(),
    })
}

/// Named vertices of the three-edge interchange used in the K_5 − C_4
/// induction step.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct InterchangeVertices {
    pub v1: usize,
    pub v2: usize,
    pub v3: usize,
    pub v4: usize,
    pub y1: usize,
    pub y2: usize,
    pub y3: usize,
}

impl InterchangeVertices {
    fn named(&self) -> [(&'static str, usize); 7] {
        [
            ("v1", self.v1),
            ("v2", self.v2),
            ("v3", self.v3),
            ("v4", self.v4),
            ("y1", self.y1),
            ("y2", self.y2),
            ("y3", self.y3),
        ]
    }
}

/// Removes `y1y3`, `v1v4`, `v2y2` and inserts `y1v2`, `y3v1`, `y2v4`.
/// Requires `v1..v4` to induce a K_4 with `v1y1` and `v2y2` present; the
/// result contains K_5 − C_4 on `{v1, v2, v3, v4, y1}`.
pub fn theorem2_interchange(g: &SmallGraph, at: &InterchangeVertices) -> Result<SmallGraph> {
    let named = at.named();
    for &(name, v) in &named {
        if v >= g.order() {
            return Err(Error::contract(format!("{name}={v} out of range")));
        }
    }
    for i in 0..7 {
        for j in i + 1..7 {
            if named[i].1 == named[j].1 {
                return Err(Error::contract(format!(
                    "{} and {} are the same vertex",
                    named[i].0, named[j].0
                )));
            }
        }
    }
    let InterchangeVertices {
        v1,
        v2,
        v3,
        v4,
        y1,
        y2,
        y3,
    } = *at;
    let required = [
        ("v1v2", v1, v2),
        ("v1v3", v1, v3),
        ("v1v4", v1, v4),
        ("v2v3", v2, v3),
        ("v2v4", v2, v4),
        ("v3v4", v3, v4),
        ("v1y1", v1, y1),
        ("v2y2", v2, y2),
        ("y1y3", y1, y3),
    ];
    for (name, a, b) in required {
        if !g.has_edge(a, b) {
            return Err(Error::contract(format!("edge {name} missing")));
        }
    }
    let forbidden = [("y1v2", y1, v2), ("y3v1", y3, v1), ("y2v4", y2, v4)];
    for (name, a, b) in forbidden {
        if g.has_edge(a, b) {
            return Err(Error::contract(format!("{name} is already an edge")));
        }
    }
    let mut out = *g;
    out.remove_edge(y1, y3);
    out.remove_edge(v1, v4);
    out.remove_edge(v2, y2);
    out.add_edge(y1, v2);
    out.add_edge(y3, v1);
    out.add_edge(y2, v4);
    Ok(out)
}
