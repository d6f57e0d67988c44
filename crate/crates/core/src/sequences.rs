//! Degree sequences: normalization, graphicality and exhaustive enumeration.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::limits::Limits;

/// A multiset of vertex degrees stored in nonincreasing order.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<i64>", into = "Vec<usize>")]
pub struct DegreeSequence(Vec<usize>);

impl DegreeSequence {
    /// Builds a sequence from arbitrary non-negative values, sorting them
    /// nonincreasing. The empty sequence is rejected.
    pub fn new<I, T>(values: I) -> Result<Self>
    where
        I: IntoIterator<Item = T>,
        T: TryInto<usize>,
    {
        let mut terms = Vec::new();
        for (i, v) in values.into_iter().enumerate() {
            let d = v
                .try_into()
                .map_err(|_| Error::invalid(format!("term {i} is negative or too large")))?;
            terms.push(d);
        }
        if terms.is_empty() {
            return Err(Error::invalid(
                "degree sequence must have at least one term",
            ));
        }
        Ok(Self::from_sorted_unchecked(sort_desc(terms)))
    }

    pub(crate) fn from_sorted_unchecked(terms: Vec<usize>) -> Self {
        debug_assert!(terms.windows(2).all(|w| w[0] >= w[1]));
        DegreeSequence(terms)
    }

    pub fn terms(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Largest term.
    pub fn max_degree(&self) -> usize {
        self.0[0]
    }

    /// Smallest term (`d_n`).
    pub fn min_degree(&self) -> usize {
        *self.0.last().expect("non-empty")
    }

    /// σ(S): the sum of all terms.
    pub fn degree_sum(&self) -> usize {
        self.0.iter().sum()
    }

    /// Erdős–Gallai test.
    pub fn is_graphical(&self) -> bool {
        is_graphical_slice(&self.0)
    }

    /// Run-length form, e.g. `5^1,3^5`.
    pub fn power_notation(&self) -> String {
        let mut parts = Vec::new();
        let mut i = 0;
        while i < self.0.len() {
            let d = self.0[i];
            let run = self.0[i..].iter().take_while(|&&x| x == d).count();
            parts.push(format!("{d}^{run}"));
            i += run;
        }
        parts.join(",")
    }
}

fn sort_desc(mut v: Vec<usize>) -> Vec<usize> {
    v.sort_unstable_by(|a, b| b.cmp(a));
    v
}

/// Erdős–Gallai on a nonincreasing slice.
fn is_graphical_slice(d: &[usize]) -> bool {
    let n = d.len();
    let total: usize = d.iter().sum();
    if !total.is_multiple_of(2) || (n > 0 && d[0] > n - 1) {
        return false;
    }
    let mut prefix = 0usize;
    for k in 1..=n {
        prefix += d[k - 1];
        let tail: usize = d[k..].iter().map(|&x| x.min(k)).sum();
        if prefix > k * (k - 1) + tail {
            return false;
        }
    }
    true
}

impl fmt::Display for DegreeSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, d) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{d}")?;
        }
        Ok(())
    }
}

/// Accepts `5,3,3,3,3,3` and `5^1,3^5`, mixed freely; whitespace around
/// terms is ignored.
impl FromStr for DegreeSequence {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let mut terms = Vec::new();
        let mut offset = 0;
        for part in s.split(',') {
            let trimmed = part.trim();
            let at = offset + (part.len() - part.trim_start().len());
            if trimmed.is_empty() {
                return Err(Error::parse(at, "empty term"));
            }
            let (value, count) = match trimmed.split_once('^') {
                Some((v, c)) => (v.trim(), c.trim()),
                None => (trimmed, "1"),
            };
            let value: i64 = value
                .parse()
                .map_err(|_| Error::parse(at, format!("`{value}` is not an integer")))?;
            if value < 0 {
                return Err(Error::parse(at, format!("negative degree {value}")));
            }
            let count: usize = count
                .parse()
                .map_err(|_| Error::parse(at, format!("`{count}` is not a repeat count")))?;
            if count > crate::limits::MAX_VERTICES * 4 {
                return Err(Error::parse(at, format!("repeat count {count} too large")));
            }
            terms.extend(std::iter::repeat_n(value as usize, count));
            offset += part.len() + 1;
        }
        DegreeSequence::new(terms)
    }
}

impl TryFrom<Vec<i64>> for DegreeSequence {
    type Error = Error;

    fn try_from(v: Vec<i64>) -> Result<Self> {
        DegreeSequence::new(v)
    }
}

impl From<DegreeSequence> for Vec<usize> {
    fn from(s: DegreeSequence) -> Self {
        s.0
    }
}

/// Iterator over every graphical nonincreasing sequence of a fixed length,
/// in lexicographically descending order.
#[derive(Debug, Clone)]
pub struct GraphicalSequences {
    current: Vec<usize>,
    min_sum: usize,
    started: bool,
    done: bool,
}

impl GraphicalSequences {
    fn new(n: usize, min_sum: usize) -> Self {
        GraphicalSequences {
            current: vec![n - 1; n],
            min_sum,
            started: false,
            done: false,
        }
    }

    /// Steps to the lexicographic predecessor among nonincreasing tuples
    /// whose sum can still reach `min_sum`.
    fn advance(&mut self) -> bool {
        let n = self.current.len();
        loop {
            let Some(i) = (0..n).rev().find(|&i| self.current[i] > 0) else {
                return false;
            };
            let v = self.current[i] - 1;
            for t in &mut self.current[i..] {
                *t = v;
            }
            if self.current.iter().sum::<usize>() >= self.min_sum {
                return true;
            }
            // Every remaining tuple with this prefix sums lower still.
            for t in &mut self.current[i..] {
                *t = 0;
            }
        }
    }
}

impl Iterator for GraphicalSequences {
    type Item = DegreeSequence;

    fn next(&mut self) -> Option<DegreeSequence> {
        if self.done {
            return None;
        }
        loop {
            if self.started {
                if !self.advance() {
                    self.done = true;
                    return None;
                }
            } else {
                self.started = true;
                if self.current.iter().sum::<usize>() < self.min_sum {
                    self.done = true;
                    return None;
                }
            }
            if is_graphical_slice(&self.current) {
                return Some(DegreeSequence::from_sorted_unchecked(self.current.clone()));
            }
        }
    }
}

/// All graphical `n`-term sequences with σ(S) ≥ `min_sum`, zero terms
/// allowed, lexicographically descending.
pub fn enumerate_graphical_sequences(
    n: usize,
    min_sum: usize,
    limits: &Limits,
) -> Result<GraphicalSequences> {
    if n == 0 {
        return Err(Error::invalid("sequence length must be at least 1"));
    }
    limits.check_vertices(n)?;
    if min_sum > n * (n - 1) {
        return Err(Error::invalid(format!(
            "min_sum {min_sum} exceeds n(n-1) = {}",
            n * (n - 1)
        )));
    }
    Ok(GraphicalSequences::new(n, min_sum))
}

/// Graphical `n`-term sequences bucketed by degree sum. Index `s` holds
/// the sequences with σ = s; odd buckets are always empty.
pub fn graphical_sequences_by_sum(n: usize, limits: &Limits) -> Result<Vec<Vec<DegreeSequence>>> {
    let sequences = enumerate_graphical_sequences(n, 0, limits)?;
    let mut levels = vec![Vec::new(); n * (n - 1) + 1];
    for s in sequences {
        levels[s.degree_sum()].push(s);
    }
    Ok(levels)
}
