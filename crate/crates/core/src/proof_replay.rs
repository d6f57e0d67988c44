//! Constructive replay of the σ(K_5 − C_4, n) = 4n − 4 induction.
//!
//! Given a graphical sequence with n ≥ 5 and σ(S) ≥ 4n − 4, the replay walks
//! the case analysis of the induction and returns a realization containing
//! the bowtie together with a trace of the cases taken:
//!
//! * n = 5: any realization has at least 8 edges and contains the bowtie.
//! * n = 6, 7: delete a minimum-degree vertex when the residual sum stays
//!   above the threshold for n − 1; the sequences where that is impossible
//!   are a short exceptional list.
//! * n ≥ 8: delete when d_n ≤ 2; if d_2 = 3 the sequence is
//!   ((n−1), 3^{n−1}); otherwise take a realization with a K_4 on the four
//!   highest-degree vertices and either find the bowtie directly or make it
//!   with one three-edge interchange.

use std::fmt;

use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::extremal::{sigma_exact, Verdict};
use crate::graphs::{
    contains_subgraph, delete_vertex, find_embedding, km_minus_c4, to_graph6, Embedding,
    SmallGraph, TargetPattern,
};
use crate::limits::Limits;
use crate::realizations::{
    havel_hakimi_realize, is_potentially, theorem2_interchange, InterchangeVertices,
    RealizationWalk, SwitchOrder,
};
use crate::sequences::{enumerate_graphical_sequences, DegreeSequence};

/// Case of the induction a step was resolved by.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ProofCase {
    /// n = 5: at least 8 edges force the bowtie.
    FiveVertices,
    /// Remove a minimum-degree vertex and recurse.
    Deletion,
    /// One of the listed n = 6, 7 sequences.
    Exceptional,
    /// ((n−1)^1, 3^{n−1}).
    SecondDegreeThree,
    /// Three-edge interchange around a K_4.
    Interchange,
    /// The realization already holds the bowtie next to the K_4.
    DirectAdjacency,
}

impl ProofCase {
    pub fn label(self) -> &'static str {
        match self {
            ProofCase::FiveVertices => "q≥8 (n=5)",
            ProofCase::Deletion => "d_n≤2 deletion",
            ProofCase::Exceptional => "exceptional-sequence",
            ProofCase::SecondDegreeThree => "d(v2)=3 sequence",
            ProofCase::Interchange => "interchange",
            ProofCase::DirectAdjacency => "direct-adjacency",
        }
    }
}

impl fmt::Display for ProofCase {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

impl Serialize for ProofCase {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(self.label())
    }
}

fn is_false(b: &bool) -> bool {
    !*b
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ProofStep {
    pub case: ProofCase,
    pub sequence: DegreeSequence,
    pub action: String,
    pub graph6: Option<String>,
    /// Set when the step left the argument and fell back to exhaustive search.
    #[serde(skip_serializing_if = "is_false")]
    pub deviation: bool,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ProofTrace {
    pub steps: Vec<ProofStep>,
    /// Realization of the input sequence containing K_5 − C_4.
    pub outcome: SmallGraph,
    /// Bowtie vertex `i` sits on outcome vertex `embedding[i]`.
    pub embedding: Embedding,
}

/// The sequences singled out in the n = 6 and n = 7 cases.
pub fn base_case_sequences() -> Vec<(usize, DegreeSequence)> {
    const TABLE: [&[usize]; 6] = [
        &[5, 3, 3, 3, 3, 3],
        &[4, 4, 3, 3, 3, 3],
        &[5, 5, 5, 5, 5, 5],
        &[6, 3, 3, 3, 3, 3, 3],
        &[5, 4, 3, 3, 3, 3, 3],
        &[4, 4, 4, 3, 3, 3, 3],
    ];
    TABLE
        .iter()
        .map(|t| (t.len(), DegreeSequence::from_sorted_unchecked(t.to_vec())))
        .collect()
}

/// ((n−1)^1, 3^{n−1}), the only sequence with d_2 = 3 at σ = 4n − 4.
pub fn second_degree_three_family(n: usize) -> Result<DegreeSequence> {
    if n < 5 {
        return Err(Error::invalid(format!(
            "family defined for n >= 5, got {n}"
        )));
    }
    let mut t = vec![3; n];
    t[0] = n - 1;
    Ok(DegreeSequence::from_sorted_unchecked(t))
}

/// Fixed base cases followed by the family for every n in `family`.
pub fn base_cases_with_family(
    family: std::ops::RangeInclusive<usize>,
) -> Result<Vec<(usize, DegreeSequence)>> {
    let mut out = base_case_sequences();
    for n in family {
        out.push((n, second_degree_three_family(n)?));
    }
    Ok(out)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BaseCaseResult {
    pub n: usize,
    pub sequence: DegreeSequence,
    pub potential: bool,
    pub witness: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BaseCaseReport {
    pub cases: Vec<BaseCaseResult>,
    pub pass: bool,
}

pub fn verify_base_cases(
    family: std::ops::RangeInclusive<usize>,
    limits: &Limits,
) -> Result<BaseCaseReport> {
    let bowtie = km_minus_c4(5)?;
    let mut cases = Vec::new();
    for (n, sequence) in base_cases_with_family(family)? {
        let r = is_potentially(&sequence, &bowtie, limits)?;
        cases.push(BaseCaseResult {
            n,
            potential: r.verdict,
            witness: r.witness.as_ref().map(to_graph6),
            sequence,
        });
    }
    let pass = cases.iter().all(|c| c.potential && c.witness.is_some());
    Ok(BaseCaseReport { cases, pass })
}

fn render(steps: &[ProofStep]) -> Vec<String> {
    steps
        .iter()
        .map(|s| format!("[{}] {}: {}", s.case, s.sequence, s.action))
        .collect()
}

fn failure(steps: &[ProofStep], reason: impl Into<String>) -> Error {
    Error::Replay {
        reason: reason.into(),
        trace: render(steps),
    }
}

/// Whether the n = 6, 7 case analysis (or the general d_n ≤ 2 rule for
/// n ≥ 8) removes v_n.
fn deletion_applies(n: usize, sum: usize, dn: usize) -> bool {
    match n {
        6 => (sum == 20 && dn <= 2) || (sum == 22 && dn <= 3) || (sum >= 24 && dn <= 4),
        // σ ≥ 28 with d_7 ≥ 5 forces σ ≥ 36 and still leaves σ' > 23.
        7 => (sum == 24 && dn <= 2) || (sum == 26 && dn <= 3) || sum >= 28,
        _ => dn <= 2,
    }
}

struct Replay<'a> {
    limits: &'a Limits,
    bowtie: TargetPattern,
    steps: Vec<ProofStep>,
}

impl Replay<'_> {
    fn push(
        &mut self,
        case: ProofCase,
        seq: &DegreeSequence,
        action: String,
        g: Option<&SmallGraph>,
    ) -> usize {
        self.steps.push(ProofStep {
            case,
            sequence: seq.clone(),
            action,
            graph6: g.map(to_graph6),
            deviation: false,
        });
        self.steps.len() - 1
    }

    fn embed(&self, g: &SmallGraph, what: &str) -> Result<Embedding> {
        find_embedding(g, self.bowtie.graph()).ok_or_else(|| {
            failure(
                &self.steps,
                format!("{what}: no bowtie in {}", to_graph6(g)),
            )
        })
    }

    fn lookup(&mut self, case: ProofCase, seq: &DegreeSequence) -> Result<(SmallGraph, Embedding)> {
        let r = is_potentially(seq, &self.bowtie, self.limits)?;
        match (r.witness, r.embedding) {
            (Some(w), Some(e)) => {
                self.push(
                    case,
                    seq,
                    format!(
                        "stored witness from realization search ({} classes)",
                        r.explored
                    ),
                    Some(&w),
                );
                Ok((w, e))
            }
            _ => Err(failure(
                &self.steps,
                format!("{seq} is not potentially K_5 - C_4-graphic"),
            )),
        }
    }

    fn solve(&mut self, seq: &DegreeSequence) -> Result<(SmallGraph, Embedding)> {
        let n = seq.len();
        let sum = seq.degree_sum();
        let dn = seq.min_degree();

        if n == 5 {
            let g = havel_hakimi_realize(seq)?;
            let q = g.edge_count();
            self.push(
                ProofCase::FiveVertices,
                seq,
                format!("realization has q={q} >= 8 edges"),
                Some(&g),
            );
            let e = self.embed(&g, "five-vertex case")?;
            return Ok((g, e));
        }

        if deletion_applies(n, sum, dn) {
            return self.delete(seq);
        }

        if n <= 7 {
            if base_case_sequences().iter().any(|(_, s)| s == seq) {
                return self.lookup(ProofCase::Exceptional, seq);
            }
            return Err(failure(
                &self.steps,
                format!("{seq} not covered by the n={n} cases"),
            ));
        }

        if seq.terms()[1] == 3 {
            if *seq != second_degree_three_family(n)? {
                return Err(failure(
                    &self.steps,
                    format!("{seq} has d_2 = 3 but is not ((n-1), 3^(n-1))"),
                ));
            }
            return self.lookup(ProofCase::SecondDegreeThree, seq);
        }

        self.around_k4(seq)
    }

    fn delete(&mut self, seq: &DegreeSequence) -> Result<(SmallGraph, Embedding)> {
        let n = seq.len();
        let g = havel_hakimi_realize(seq)?;
        // Havel–Hakimi keeps vertex i at degree S[i], so v_n is the last vertex.
        let v = n - 1;
        let dn = g.degree(v);
        let reduced = delete_vertex(&g, v)?;
        let residual = reduced.degree_sequence().expect("n >= 6");
        let target = 4 * (n - 1) - 4;
        assert_eq!(residual.degree_sum(), seq.degree_sum() - 2 * dn);
        if residual.degree_sum() < target {
            return Err(failure(
                &self.steps,
                format!("residual sum {} below {target}", residual.degree_sum()),
            ));
        }
        let at = self.push(
            ProofCase::Deletion,
            seq,
            format!(
                "delete v_{n} (d_{n}={dn}); residual sum {} >= 4(n-1)-4 = {target}",
                residual.degree_sum()
            ),
            Some(&g),
        );

        let mut needed: Vec<usize> = g.neighbors(v).map(|u| reduced.degree(u)).collect();
        needed.sort_unstable_by(|a, b| b.cmp(a));

        let (sub, emb) = self.solve(&residual)?;

        let mut used = 0u32;
        let mut attach = Vec::with_capacity(needed.len());
        for d in needed {
            let Some(u) = (0..sub.order()).find(|&u| used >> u & 1 == 0 && sub.degree(u) == d)
            else {
                return Err(failure(
                    &self.steps,
                    format!("no free vertex of degree {d} to re-attach to"),
                ));
            };
            used |= 1 << u;
            attach.push(u);
        }
        let out = sub.with_vertex(&attach)?;
        if out.degree_sequence().as_ref() != Some(seq) {
            return Err(failure(
                &self.steps,
                "re-attached graph does not realize the sequence",
            ));
        }
        self.steps[at]
            .action
            .push_str(&format!("; re-attached to {attach:?}"));
        Ok((out, emb))
    }

    /// Realization with a K_4 on four vertices whose degrees are the four
    /// largest terms, returned as (graph, [v1, v2, v3, v4]) with v1, v2 the
    /// two highest-degree members.
    fn top_k4(&self, seq: &DegreeSequence) -> Result<Option<(SmallGraph, [usize; 4])>> {
        let mut top: Vec<usize> = seq.terms()[..4].to_vec();
        top.sort_unstable();
        let mut walk = RealizationWalk::new(seq, self.limits, SwitchOrder::Lexicographic)?;
        for g in walk.by_ref() {
            if let Some(k4) = find_top_k4(&g, &top) {
                return Ok(Some((g, k4)));
            }
        }
        if let Some(e) = walk.take_error() {
            return Err(e);
        }
        Ok(None)
    }

    fn around_k4(&mut self, seq: &DegreeSequence) -> Result<(SmallGraph, Embedding)> {
        let Some((g, [v1, v2, v3, v4])) = self.top_k4(seq)? else {
            return self.fallback(seq, "no realization with a K_4 on the top-degree vertices");
        };
        let clique = 1u32 << v1 | 1 << v2 | 1 << v3 | 1 << v4;
        let lowest = |w: u32| (w != 0).then(|| w.trailing_zeros() as usize);

        let Some(y1) = lowest(g.row(v1) & !clique) else {
            return self.fallback(seq, "v1 has no neighbour outside the K_4");
        };
        if g.row(y1) & clique & !(1 << v1) != 0 {
            return self.direct(seq, &g, format!("y1={y1} adjacent to another K_4 vertex"));
        }
        let Some(y2) = lowest(g.row(v2) & !clique) else {
            return self.fallback(seq, "v2 has no neighbour outside the K_4");
        };
        if g.row(y2) & clique & !(1 << v2) != 0 {
            return self.direct(seq, &g, format!("y2={y2} adjacent to another K_4 vertex"));
        }
        let Some(y3) = lowest(g.row(y1) & !clique & !(1 << y2)) else {
            return self.fallback(seq, "y1 has no third neighbour");
        };
        if g.has_edge(y3, v1) {
            return self.direct(seq, &g, format!("y3={y3} adjacent to v1"));
        }

        let at = InterchangeVertices {
            v1,
            v2,
            v3,
            v4,
            y1,
            y2,
            y3,
        };
        let out = theorem2_interchange(&g, &at)?;
        self.push(
            ProofCase::Interchange,
            seq,
            format!(
                "K_4 on v1..v4={:?}, y1={y1}, y2={y2}, y3={y3}: remove y1y3, v1v4, v2y2; add y1v2, y3v1, y2v4",
                [v1, v2, v3, v4]
            ),
            Some(&g),
        );
        let e = self.embed(&out, "interchange")?;
        Ok((out, e))
    }

    fn direct(
        &mut self,
        seq: &DegreeSequence,
        g: &SmallGraph,
        why: String,
    ) -> Result<(SmallGraph, Embedding)> {
        self.push(ProofCase::DirectAdjacency, seq, why, Some(g));
        let e = self.embed(g, "direct adjacency")?;
        Ok((*g, e))
    }

    fn fallback(&mut self, seq: &DegreeSequence, why: &str) -> Result<(SmallGraph, Embedding)> {
        let r = is_potentially(seq, &self.bowtie, self.limits)?;
        let (Some(w), Some(e)) = (r.witness, r.embedding) else {
            return Err(failure(
                &self.steps,
                format!("{why}; exhaustive search found no witness"),
            ));
        };
        let at = self.push(
            ProofCase::Interchange,
            seq,
            format!("{why}; fell back to realization search"),
            Some(&w),
        );
        self.steps[at].deviation = true;
        Ok((w, e))
    }
}

/// Four mutually adjacent vertices of `g` whose sorted degrees equal `top`
/// (ascending), ordered by decreasing degree then index.
fn find_top_k4(g: &SmallGraph, top: &[usize]) -> Option<[usize; 4]> {
    let n = g.order();
    let eligible: Vec<usize> = (0..n).filter(|&v| top.contains(&g.degree(v))).collect();
    for (i, &a) in eligible.iter().enumerate() {
        for (j, &b) in eligible.iter().enumerate().skip(i + 1) {
            if !g.has_edge(a, b) {
                continue;
            }
            for (k, &c) in eligible.iter().enumerate().skip(j + 1) {
                if !g.has_edge(a, c) || !g.has_edge(b, c) {
                    continue;
                }
                for &d in &eligible[k + 1..] {
                    if !(g.has_edge(a, d) && g.has_edge(b, d) && g.has_edge(c, d)) {
                        continue;
                    }
                    let mut q = [a, b, c, d];
                    let mut degs: Vec<usize> = q.iter().map(|&v| g.degree(v)).collect();
                    degs.sort_unstable();
                    if degs == top {
                        q.sort_by_key(|&v| (std::cmp::Reverse(g.degree(v)), v));
                        return Some(q);
                    }
                }
            }
        }
    }
    None
}

/// Replays the induction on `seq`. Requires a graphical sequence with
/// n ≥ 5 terms and σ(S) ≥ 4n − 4.
pub fn replay_theorem2(seq: &DegreeSequence, limits: &Limits) -> Result<ProofTrace> {
    let n = seq.len();
    if !seq.is_graphical() {
        return Err(Error::invalid(format!("{seq} is not graphical")));
    }
    if n < 5 {
        return Err(Error::invalid(format!("replay needs n >= 5, got {n}")));
    }
    if seq.degree_sum() < 4 * n - 4 {
        return Err(Error::invalid(format!(
            "degree sum {} below 4n-4 = {}",
            seq.degree_sum(),
            4 * n - 4
        )));
    }
    limits.check_vertices(n)?;
    let mut replay = Replay {
        limits,
        bowtie: km_minus_c4(5)?,
        steps: Vec::new(),
    };
    let (outcome, embedding) = replay.solve(seq)?;
    let trace = ProofTrace {
        steps: replay.steps,
        outcome,
        embedding,
    };
    if outcome.degree_sequence().as_ref() != Some(seq)
        || !contains_subgraph(&outcome, replay.bowtie.graph())
    {
        return Err(failure(&trace.steps, "outcome failed final validation"));
    }
    Ok(trace)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Theorem2Row {
    pub n: usize,
    pub expected: usize,
    pub exact: Option<usize>,
    pub sequences_replayed: usize,
    pub replay_failures: Vec<DegreeSequence>,
    /// Sequences where replay and exhaustive search disagree.
    pub disagreements: Vec<DegreeSequence>,
    pub pass: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Theorem2Report {
    pub rows: Vec<Theorem2Row>,
    pub pass: bool,
}

/// For each n in 5..=n_max: the exact threshold must be 4n − 4, and the
/// replay must succeed on every graphical S with σ(S) ≥ 4n − 4 and agree
/// with exhaustive search.
pub fn verify_theorem2_range(n_max: usize, limits: &Limits) -> Result<Theorem2Report> {
    if n_max < 5 {
        return Err(Error::invalid(format!(
            "n_max must be at least 5, got {n_max}"
        )));
    }
    limits.check_vertices(n_max)?;
    let bowtie = km_minus_c4(5)?;
    let mut rows = Vec::new();
    for n in 5..=n_max {
        let expected = 4 * n - 4;
        let sigma = sigma_exact(5, n, limits)?;
        let mut row = Theorem2Row {
            n,
            expected,
            exact: sigma.exact,
            sequences_replayed: 0,
            replay_failures: Vec::new(),
            disagreements: Vec::new(),
            pass: false,
        };
        for s in enumerate_graphical_sequences(n, expected, limits)? {
            row.sequences_replayed += 1;
            let replayed = replay_theorem2(&s, limits).is_ok();
            if !replayed {
                row.replay_failures.push(s.clone());
            }
            let exhaustive = is_potentially(&s, &bowtie, limits)?.conclusive();
            if exhaustive != Some(replayed) {
                row.disagreements.push(s);
            }
        }
        row.pass = sigma.verdict == Verdict::Matches
            && sigma.exact == Some(expected)
            && row.replay_failures.is_empty()
            && row.disagreements.is_empty();
        rows.push(row);
    }
    let pass = rows.iter().all(|r| r.pass);
    Ok(Theorem2Report { rows, pass })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn seq(v: &[usize]) -> DegreeSequence {
        DegreeSequence::new(v.iter().copied()).unwrap()
    }

    #[test]
    fn table_contents() {
        let t = base_case_sequences();
        assert_eq!(t.len(), 6);
        assert!(t.contains(&(6, seq(&[5, 3, 3, 3, 3, 3]))));
        assert!(t.contains(&(7, seq(&[4, 4, 4, 3, 3, 3, 3]))));
        assert_eq!(
            second_degree_three_family(8).unwrap(),
            seq(&[7, 3, 3, 3, 3, 3, 3, 3])
        );
        assert!(second_degree_three_family(4).is_err());
    }

    #[test]
    fn base_cases_verify() {
        let r = verify_base_cases(8..=9, &Limits::default()).unwrap();
        assert!(r.pass);
        assert_eq!(r.cases.len(), 8);
    }

    #[test]
    fn exceptional_replay() {
        let t = replay_theorem2(&seq(&[4, 4, 3, 3, 3, 3]), &Limits::default()).unwrap();
        assert_eq!(t.steps.len(), 1);
        assert_eq!(t.steps[0].case, ProofCase::Exceptional);
    }

    #[test]
    fn deletion_replay() {
        let s = seq(&[5, 5, 4, 4, 2, 2, 2]);
        let t = replay_theorem2(&s, &Limits::default()).unwrap();
        assert_eq!(t.steps[0].case, ProofCase::Deletion);
        assert!(t.steps.len() >= 2);
        assert!(t.steps[1].sequence.degree_sum() >= 20);
        assert_eq!(t.outcome.degree_sequence().unwrap(), s);
    }

    #[test]
    fn second_degree_three_replay() {
        let s = second_degree_three_family(9).unwrap();
        assert_eq!(s.degree_sum(), 32);
        let t = replay_theorem2(&s, &Limits::default()).unwrap();
        assert_eq!(t.steps.last().unwrap().case, ProofCase::SecondDegreeThree);
    }

    #[test]
    fn replay_preconditions() {
        let l = Limits::default();
        assert!(matches!(
            replay_theorem2(&seq(&[3, 3, 3, 3]), &l),
            Err(Error::InvalidInput(_))
        ));
        assert!(matches!(
            replay_theorem2(&seq(&[2; 6]), &l),
            Err(Error::InvalidInput(_))
        ));
        assert!(matches!(
            replay_theorem2(&seq(&[5, 5, 1, 1, 1]), &l),
            Err(Error::InvalidInput(_))
        ));
    }

    #[test]
    fn range_guard() {
        assert!(matches!(
            verify_theorem2_range(4, &Limits::default()),
            Err(Error::InvalidInput(_))
        ));
    }

    #[test]
    fn step_json_shape() {
        let t = replay_theorem2(&seq(&[4, 4, 3, 3, 3, 3]), &Limits::default()).unwrap();
        let v = serde_json::to_value(&t.steps[0]).unwrap();
        let mut keys: Vec<_> = v.as_object().unwrap().keys().cloned().collect();
        keys.sort();
        assert_eq!(keys, ["action", "case", "graph6", "sequence"]);
        assert_eq!(v["case"], "exceptional-sequence");
    }
}
