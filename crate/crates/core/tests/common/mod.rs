//! Brute-force oracles. Nothing here calls into the search code it is used
//! to check: graphs are enumerated as raw edge subsets, isomorphism is
//! decided over all permutations, and containment over all injective maps.

#![allow(dead_code)]

use std::collections::{HashMap, HashSet};

use kmc4_core::SmallGraph;

/// Pairs (i, j), i < j, in a fixed order.
pub fn pairs(n: usize) -> Vec<(usize, usize)> {
    let mut out = Vec::new();
    for j in 1..n {
        for i in 0..j {
            out.push((i, j));
        }
    }
    out
}

/// Adjacency matrix view of the labeled graph with edge-subset `mask`.
#[derive(Clone, Debug)]
pub struct Raw {
    pub n: usize,
    pub adj: Vec<Vec<bool>>,
}

impl Raw {
    pub fn from_mask(n: usize, pairs: &[(usize, usize)], mask: u64) -> Raw {
        let mut adj = vec![vec![false; n]; n];
        for (k, &(i, j)) in pairs.iter().enumerate() {
            if mask >> k & 1 == 1 {
                adj[i][j] = true;
                adj[j][i] = true;
            }
        }
        Raw { n, adj }
    }

    pub fn from_graph(g: &SmallGraph) -> Raw {
        let n = g.order();
        let adj = (0..n)
            .map(|i| (0..n).map(|j| g.has_edge(i, j)).collect())
            .collect();
        Raw { n, adj }
    }

    pub fn to_graph(&self) -> SmallGraph {
        let edges: Vec<(usize, usize)> = pairs(self.n)
            .into_iter()
            .filter(|&(i, j)| self.adj[i][j])
            .collect();
        SmallGraph::from_edges(self.n, &edges).unwrap()
    }

    pub fn sorted_degrees(&self) -> Vec<usize> {
        let mut d: Vec<usize> = self
            .adj
            .iter()
            .map(|row| row.iter().filter(|&&b| b).count())
            .collect();
        d.sort_unstable_by(|a, b| b.cmp(a));
        d
    }

    pub fn edge_count(&self) -> usize {
        self.sorted_degrees().iter().sum::<usize>() / 2
    }
}

/// Every labeled simple graph on `n` vertices.
pub fn all_graphs(n: usize) -> impl Iterator<Item = Raw> {
    let p = pairs(n);
    (0..1u64 << p.len()).map(move |mask| Raw::from_mask(n, &p, mask))
}

/// Sorted degree vectors of all labeled graphs on `n` vertices.
pub fn realizable_degree_vectors(n: usize) -> HashSet<Vec<usize>> {
    all_graphs(n).map(|g| g.sorted_degrees()).collect()
}

/// Heap's algorithm.
pub fn permutations(n: usize) -> Vec<Vec<usize>> {
    let mut a: Vec<usize> = (0..n).collect();
    let mut out = vec![a.clone()];
    let mut c = vec![0; n];
    let mut i = 0;
    while i < n {
        if c[i] < i {
            if i % 2 == 0 {
                a.swap(0, i);
            } else {
                a.swap(c[i], i);
            }
            out.push(a.clone());
            c[i] += 1;
            i = 0;
        } else {
            c[i] = 0;
            i += 1;
        }
    }
    out
}

/// Minimum upper-triangle bit vector over all relabelings.
pub fn brute_canonical(g: &Raw, perms: &[Vec<usize>]) -> Vec<bool> {
    let p = pairs(g.n);
    perms
        .iter()
        .map(|perm| {
            p.iter()
                .map(|&(i, j)| g.adj[perm[i]][perm[j]])
                .collect::<Vec<bool>>()
        })
        .min()
        .unwrap_or_default()
}

/// Whether some injective map sends every pattern edge to a host edge.
pub fn brute_contains(host: &Raw, pattern: &Raw) -> bool {
    fn go(host: &Raw, pattern: &Raw, map: &mut Vec<usize>, used: &mut Vec<bool>) -> bool {
        let k = map.len();
        if k == pattern.n {
            return (0..pattern.n)
                .all(|a| (0..pattern.n).all(|b| !pattern.adj[a][b] || host.adj[map[a]][map[b]]));
        }
        for v in 0..host.n {
            if !used[v] {
                used[v] = true;
                map.push(v);
                if go(host, pattern, map, used) {
                    return true;
                }
                map.pop();
                used[v] = false;
            }
        }
        false
    }
    if pattern.n > host.n {
        return false;
    }
    go(host, pattern, &mut Vec::new(), &mut vec![false; host.n])
}

/// K_m − C_4 = K_{m−4} joined with two independent edges: some (m−4)-clique
/// has two disjoint edges inside its common neighbourhood.
pub fn has_km_minus_c4(g: &Raw, m: usize) -> bool {
    let n = g.n;
    if n < m {
        return false;
    }
    let k = m - 4;
    fn cliques(g: &Raw, k: usize, start: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for v in start..g.n {
            if cur.iter().all(|&u| g.adj[u][v]) {
                cur.push(v);
                cliques(g, k, v + 1, cur, out);
                cur.pop();
            }
        }
    }
    let mut all = Vec::new();
    cliques(g, k, 0, &mut Vec::new(), &mut all);
    for c in all {
        let common: Vec<usize> = (0..n)
            .filter(|v| !c.contains(v) && c.iter().all(|&u| g.adj[u][*v]))
            .collect();
        let edges: Vec<(usize, usize)> = pairs(n)
            .into_iter()
            .filter(|&(i, j)| common.contains(&i) && common.contains(&j) && g.adj[i][j])
            .collect();
        for (x, &(a, b)) in edges.iter().enumerate() {
            for &(c2, d) in &edges[x + 1..] {
                if a != c2 && a != d && b != c2 && b != d {
                    return true;
                }
            }
        }
    }
    false
}

/// For each realizable sorted degree vector on `n` vertices, whether some
/// labeled realization contains K_m − C_4.
pub fn potential_table(n: usize, m: usize) -> HashMap<Vec<usize>, bool> {
    let mut table: HashMap<Vec<usize>, bool> = HashMap::new();
    for g in all_graphs(n) {
        let d = g.sorted_degrees();
        let hit = table.get(&d).copied().unwrap_or(false);
        if !hit {
            table.insert(d, has_km_minus_c4(&g, m));
        }
    }
    table
}

/// Number of isomorphism classes among labeled realizations of `degrees`.
pub fn realization_class_count(degrees: &[usize]) -> usize {
    let n = degrees.len();
    let perms = permutations(n);
    all_graphs(n)
        .filter(|g| g.sorted_degrees() == degrees)
        .map(|g| brute_canonical(&g, &perms))
        .collect::<HashSet<_>>()
        .len()
}

/// Small deterministic generator (SplitMix64) so oracle inputs do not
/// depend on the crate under test.
pub struct SplitMix(pub u64);

impl SplitMix {
    pub fn next_u64(&mut self) -> u64 {
        self.0 = self.0.wrapping_add(0x9E37_79B9_7F4A_7C15);
        let mut z = self.0;
        z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
        z ^ (z >> 31)
    }

    pub fn below(&mut self, k: u64) -> u64 {
        self.next_u64() % k
    }

    /// Random labeled graph on `n` vertices with edge probability `p/100`.
    pub fn graph(&mut self, n: usize, p: u64) -> Raw {
        let mut adj = vec![vec![false; n]; n];
        for (i, j) in pairs(n) {
            if self.below(100) < p {
                adj[i][j] = true;
                adj[j][i] = true;
            }
        }
        Raw { n, adj }
    }
}
