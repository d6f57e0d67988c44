//! Non-induced subgraph containment by backtracking over bitset candidates.

use super::{bits, SmallGraph};

/// `map[h]` is the host vertex that pattern vertex `h` lands on.
pub type Embedding = Vec<usize>;

/// Pattern vertices in search order: highest degree first, then repeatedly
/// the vertex with the most already-placed neighbours (ties: higher degree,
/// then lower index).
fn search_order(pattern: &SmallGraph) -> Vec<usize> {
    let n = pattern.order();
    let mut placed = 0u32;
    let mut order = Vec::with_capacity(n);
    for _ in 0..n {
        let next = (0..n)
            .filter(|&v| placed >> v & 1 == 0)
            .max_by_key(|&v| {
                (
                    (pattern.row(v) & placed).count_ones(),
                    pattern.degree(v),
                    std::cmp::Reverse(v),
                )
            })
            .expect("unplaced vertex remains");
        placed |= 1 << next;
        order.push(next);
    }
    order
}

struct Matcher<'a> {
    host: &'a SmallGraph,
    pattern: &'a SmallGraph,
    order: Vec<usize>,
    map: Vec<usize>,
    degree_ok: Vec<u32>,
}

impl Matcher<'_> {
    fn extend(&mut self, depth: usize, used: u32) -> bool {
        if depth == self.order.len() {
            return true;
        }
        let p = self.order[depth];
        let mut candidates = self.degree_ok[p] & !used;
        for &q in &self.order[..depth] {
            if self.pattern.has_edge(p, q) {
                candidates &= self.host.row(self.map[q]);
            }
        }
        for v in bits(candidates) {
            self.map[p] = v;
            if self.extend(depth + 1, used | 1 << v) {
                return true;
            }
        }
        false
    }
}

/// First embedding of `pattern` into `host` in the deterministic search
/// order, if any.
pub fn find_embedding(host: &SmallGraph, pattern: &SmallGraph) -> Option<Embedding> {
    let k = pattern.order();
    if k > host.order() || pattern.edge_count() > host.edge_count() {
        return None;
    }
    let degree_ok = (0..k)
        .map(|p| {
            let need = pattern.degree(p);
            (0..host.order())
                .filter(|&v| host.degree(v) >= need)
                .fold(0u32, |acc, v| acc | 1 << v)
        })
        .collect();
    let mut m = Matcher {
        host,
        pattern,
        order: search_order(pattern),
        map: vec![usize::MAX; k],
        degree_ok,
    };
    m.extend(0, 0).then_some(m.map)
}

pub fn contains_subgraph(host: &SmallGraph, pattern: &SmallGraph) -> bool {
    find_embedding(host, pattern).is_some()
}
