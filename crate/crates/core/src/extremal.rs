//! Extremal thresholds σ(K_m − C_4, n).
//!
//! σ(H, n) is the least even l such that every n-term graphical sequence
//! with degree sum at least l is potentially H-graphic. The lower bound
//! (2m−6)n − (m−3)(m−2) + 2 comes from K_{m−3} + K̄_{n−m+3}, which is the
//! unique realization of its degree sequence and has no K_m − C_4.

use std::fmt;

use rayon::prelude::*;
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::graphs::{complete_graph, contains_subgraph, join, km_minus_c4, to_graph6, SmallGraph};
use crate::limits::Limits;
use crate::realizations::{enumerate_realizations, havel_hakimi_realize, is_potentially};
use crate::sequences::{graphical_sequences_by_sum, DegreeSequence};

fn check_range(m: usize, n: usize) -> Result<()> {
    if m < 4 {
        return Err(Error::invalid(format!("m must be at least 4, got {m}")));
    }
    if n < m {
        return Err(Error::invalid(format!(
            "n must be at least m, got m={m}, n={n}"
        )));
    }
    Ok(())
}

/// (2m−6)n − (m−3)(m−2) + 2 for n ≥ m ≥ 4.
pub fn sigma_lower_bound(m: usize, n: usize) -> Result<usize> {
    check_range(m, n)?;
    Ok((2 * m - 6) * n - (m - 3) * (m - 2) + 2)
}

/// K_{m−3} + K̄_{n−m+3} and its degree sequence ((n−1)^{m−3}, (m−3)^{n−m+3}).
pub fn extremal_witness(m: usize, n: usize) -> Result<(SmallGraph, DegreeSequence)> {
    check_range(m, n)?;
    let g = join(&complete_graph(m - 3)?, &SmallGraph::empty(n - m + 3)?)?;
    let seq = g.degree_sequence().expect("n >= 4");
    Ok((g, seq))
}

/// Checks of the lower-bound construction for one (m, n).
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Theorem1Report {
    pub m: usize,
    pub n: usize,
    pub lower_bound: usize,
    pub witness_sequence: DegreeSequence,
    pub witness: String,
    pub witness_sum: usize,
    /// Whether the witness contains K_m − C_4 (must be false).
    pub contains_pattern: bool,
    /// Isomorphism classes of realizations of the witness sequence (must be 1).
    pub realization_classes: usize,
    pub pass: bool,
}

pub fn verify_theorem1(m: usize, n: usize, limits: &Limits) -> Result<Theorem1Report> {
    let lower_bound = sigma_lower_bound(m, n)?;
    let (g, seq) = extremal_witness(m, n)?;
    let pattern = km_minus_c4(m)?;
    let contains_pattern = contains_subgraph(&g, pattern.graph());
    let realization_classes = enumerate_realizations(&seq, limits)?.len();
    let witness_sum = seq.degree_sum();
    Ok(Theorem1Report {
        m,
        n,
        lower_bound,
        witness: to_graph6(&g),
        witness_sequence: seq,
        witness_sum,
        contains_pattern,
        realization_classes,
        pass: !contains_pattern && realization_classes == 1 && witness_sum + 2 == lower_bound,
    })
}

/// Comparison of the computed threshold with the conjectured formula.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Verdict {
    Matches,
    Exceeds,
    Below,
    NotComputed,
}

impl Verdict {
    pub fn as_str(self) -> &'static str {
        match self {
            Verdict::Matches => "matches",
            Verdict::Exceeds => "exceeds",
            Verdict::Below => "below",
            Verdict::NotComputed => "not_computed",
        }
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl Serialize for Verdict {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(self.as_str())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SigmaReport {
    pub m: usize,
    pub n: usize,
    pub lower_bound: usize,
    pub exact: Option<usize>,
    /// Conjectured value, equal to the lower bound.
    pub formula: usize,
    pub verdict: Verdict,
    /// Non-potential sequences of maximal degree sum.
    pub extremal_sequences: Vec<DegreeSequence>,
    /// Havel–Hakimi realization of each extremal sequence, in graph6.
    pub witnesses: Vec<String>,
    #[serde(skip)]
    pub sequences_checked: usize,
    #[serde(skip)]
    pub realizations_explored: usize,
}

impl SigmaReport {
    fn partial(m: usize, n: usize, lower_bound: usize) -> Self {
        SigmaReport {
            m,
            n,
            lower_bound,
            exact: None,
            formula: lower_bound,
            verdict: Verdict::NotComputed,
            extremal_sequences: Vec::new(),
            witnesses: Vec::new(),
            sequences_checked: 0,
            realizations_explored: 0,
        }
    }
}

/// Progress notification emitted after each σ level of a sweep.
#[derive(Debug, Clone, Copy)]
pub struct LevelProgress {
    pub m: usize,
    pub n: usize,
    pub level: usize,
    pub sequences: usize,
    pub failures: usize,
}

pub fn sigma_exact(m: usize, n: usize, limits: &Limits) -> Result<SigmaReport> {
    sigma_exact_with_progress(m, n, limits, &|_| {})
}

/// Scans σ levels downward from n(n−1). Every sequence on a level is
/// decided; the first level holding a non-potential sequence is σ − 2.
/// A check cut short by the realization budget yields a `not_computed`
/// report.
pub fn sigma_exact_with_progress(
    m: usize,
    n: usize,
    limits: &Limits,
    progress: &(dyn Fn(&LevelProgress) + Sync),
) -> Result<SigmaReport> {
    let lower_bound = sigma_lower_bound(m, n)?;
    limits.check_vertices(n)?;
    let pattern = km_minus_c4(m)?;
    let levels = graphical_sequences_by_sum(n, limits)?;
    let mut report = SigmaReport::partial(m, n, lower_bound);

    for level in (0..levels.len()).rev().step_by(2) {
        let results: Vec<_> = levels[level]
            .par_iter()
            .map(|s| is_potentially(s, &pattern, limits).map(|r| (s, r)))
            .collect::<Result<_>>()?;
        report.sequences_checked += results.len();
        report.realizations_explored += results.iter().map(|(_, r)| r.explored).sum::<usize>();
        if results.iter().any(|(_, r)| r.conclusive().is_none()) {
            return Ok(report);
        }
        let failures: Vec<DegreeSequence> = results
            .into_iter()
            .filter(|(_, r)| !r.verdict)
            .map(|(s, _)| s.clone())
            .collect();
        progress(&LevelProgress {
            m,
            n,
            level,
            sequences: levels[level].len(),
            failures: failures.len(),
        });
        if !failures.is_empty() {
            let exact = level + 2;
            assert_eq!(exact % 2, 0, "graphical degree sums are even");
            report.exact = Some(exact);
            report.verdict = match exact.cmp(&lower_bound) {
                std::cmp::Ordering::Equal => Verdict::Matches,
                std::cmp::Ordering::Greater => Verdict::Exceeds,
                std::cmp::Ordering::Less => Verdict::Below,
            };
            report.witnesses = failures
                .iter()
                .map(|s| havel_hakimi_realize(s).map(|g| to_graph6(&g)))
                .collect::<Result<_>>()?;
            report.extremal_sequences = failures;
            return Ok(report);
        }
    }
    unreachable!("the all-zero sequence is never potentially K_m - C_4-graphic")
}

/// One exact report per `n` in `ns`.
pub fn verify_conjecture(
    m: usize,
    ns: std::ops::RangeInclusive<usize>,
    limits: &Limits,
) -> Result<Vec<SigmaReport>> {
    verify_conjecture_with_progress(m, ns, limits, &|_| {})
}

pub fn verify_conjecture_with_progress(
    m: usize,
    ns: std::ops::RangeInclusive<usize>,
    limits: &Limits,
    progress: &(dyn Fn(&LevelProgress) + Sync),
) -> Result<Vec<SigmaReport>> {
    if ns.is_empty() {
        return Err(Error::invalid("empty n range"));
    }
    for n in [*ns.start(), *ns.end()] {
        check_range(m, n)?;
        limits.check_vertices(n)?;
    }
    ns.map(|n| sigma_exact_with_progress(m, n, limits, progress))
        .collect()
}

/// True when every report has verdict `matches`.
pub fn all_match(reports: &[SigmaReport]) -> bool {
    !reports.is_empty() && reports.iter().all(|r| r.verdict == Verdict::Matches)
}
