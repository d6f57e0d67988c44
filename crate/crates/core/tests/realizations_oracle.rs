mod common;

use std::collections::HashSet;

use common::SplitMix;
use kmc4_core::realizations::is_potentially_with;
use kmc4_core::{
    canonical_form, contains_subgraph, enumerate_graphical_sequences, enumerate_realizations,
    is_potentially, km_minus_c4, theorem2_interchange, two_switch, InterchangeVertices, Limits,
    SwitchOrder,
};

#[test]
fn realization_classes_match_labeled_enumeration() {
    let l = Limits::default();
    for n in 1..=6 {
        for s in enumerate_graphical_sequences(n, 0, &l).unwrap() {
            let reps = enumerate_realizations(&s, &l).unwrap();
            let forms: HashSet<_> = reps
                .iter()
                .map(|g| canonical_form(g, &l).unwrap())
                .collect();
            assert_eq!(forms.len(), reps.len(), "duplicate class for {s}");
            for g in &reps {
                assert_eq!(g.degree_sequence().as_ref(), Some(&s));
            }
            assert_eq!(
                reps.len(),
                common::realization_class_count(s.terms()),
                "{s}"
            );
        }
    }
}

#[test]
fn potentially_matches_direct_oracle_up_to_seven_vertices() {
    let l = Limits::default();
    for n in 4..=7 {
        for m in 4..=n.min(7) {
            let table = common::potential_table(n, m);
            let p = km_minus_c4(m).unwrap();
            for s in enumerate_graphical_sequences(n, 0, &l).unwrap() {
                let r = is_potentially(&s, &p, &l).unwrap();
                assert!(r.verdict || r.exhausted);
                assert_eq!(r.verdict, table[s.terms()], "n={n} m={m} S={s}");
                if let Some(w) = &r.witness {
                    assert_eq!(w.degree_sequence().as_ref(), Some(&s));
                    assert!(contains_subgraph(w, p.graph()));
                }
            }
        }
    }
}

#[test]
fn verdict_independent_of_switch_order() {
    let l = Limits::default();
    let p = km_minus_c4(5).unwrap();
    for n in 5..=8 {
        for (i, s) in enumerate_graphical_sequences(n, 0, &l).unwrap().enumerate() {
            let a = is_potentially(&s, &p, &l).unwrap();
            let b =
                is_potentially_with(&s, &p, &l, SwitchOrder::Shuffled(i as u64 * 31 + 7)).unwrap();
            assert_eq!(a.verdict, b.verdict, "{s}");
            if !a.verdict {
                assert_eq!(a.explored, b.explored, "{s}");
            }
        }
    }
}

#[test]
fn random_two_switches_preserve_degrees() {
    let mut rng = SplitMix(1);
    let mut applied = 0;
    while applied < 1000 {
        let n = 4 + rng.below(9) as usize;
        let p = 20 + rng.below(60);
        let g = rng.graph(n, p).to_graph();
        let edges = g.edges();
        if edges.len() < 2 {
            continue;
        }
        let (a, b) = edges[rng.below(edges.len() as u64) as usize];
        let (c, d) = edges[rng.below(edges.len() as u64) as usize];
        let (c, d) = if rng.below(2) == 0 { (c, d) } else { (d, c) };
        match two_switch(&g, a, b, c, d) {
            Ok(h) => {
                applied += 1;
                assert_eq!(h.degree_sequence(), g.degree_sequence());
                assert_eq!(h.edge_count(), g.edge_count());
                assert!(h.has_edge(a, c) && h.has_edge(b, d));
                assert!(!h.has_edge(a, b) && !h.has_edge(c, d));
            }
            Err(_) => {
                let distinct = HashSet::from([a, b, c, d]).len() == 4;
                assert!(!distinct || g.has_edge(a, c) || g.has_edge(b, d));
            }
        }
    }
}

#[test]
fn random_interchanges_preserve_degrees_and_build_bowtie() {
    let bowtie = km_minus_c4(5).unwrap();
    let mut rng = SplitMix(5);
    let mut applied = 0;
    let mut attempts = 0;
    while applied < 200 {
        attempts += 1;
        assert!(attempts < 2_000_000, "too few valid instances");
        let n = 7 + rng.below(4) as usize;
        let p = 30 + rng.below(40);
        let mut raw = rng.graph(n, p);
        // Plant a K_4 on four random vertices.
        let mut vs: Vec<usize> = (0..n).collect();
        for i in (1..n).rev() {
            vs.swap(i, rng.below(i as u64 + 1) as usize);
        }
        for i in 0..4 {
            for j in 0..4 {
                if i != j {
                    raw.adj[vs[i]][vs[j]] = true;
                }
            }
        }
        let g = raw.to_graph();
        let at = InterchangeVertices {
            v1: vs[0],
            v2: vs[1],
            v3: vs[2],
            v4: vs[3],
            y1: vs[4],
            y2: vs[5],
            y3: vs[6],
        };
        let Ok(out) = theorem2_interchange(&g, &at) else {
            continue;
        };
        applied += 1;
        assert_eq!(out.degree_sequence(), g.degree_sequence());
        let five = [at.v1, at.v2, at.v3, at.v4, at.y1];
        let sub = kmc4_core::SmallGraph::from_edges(
            5,
            &common::pairs(5)
                .into_iter()
                .filter(|&(i, j)| out.has_edge(five[i], five[j]))
                .collect::<Vec<_>>(),
        )
        .unwrap();
        assert!(contains_subgraph(&sub, bowtie.graph()));
    }
}
