//! `kmc4` command-line front end.
//!
//! Exit codes: 0 = verdict true / check passed, 1 = verdict false / check
//! failed, 2 = input error, 3 = inconclusive (realization budget hit).

use std::io::Write;

use clap::{Parser, Subcommand, ValueEnum};
use kmc4_core::extremal::{self, LevelProgress, SigmaReport, Theorem1Report, Verdict};
use kmc4_core::proof_replay::{self, BaseCaseReport, ProofTrace, Theorem2Report};
use kmc4_core::realizations::is_potentially_with;
use kmc4_core::{
    havel_hakimi_realize, km_minus_c4, to_graph6, DegreeSequence, Error, Limits, SwitchOrder,
};
use serde::Serialize;
use serde_json::json;

pub const EXIT_TRUE: i32 = 0;
pub const EXIT_FALSE: i32 = 1;
pub const EXIT_INPUT: i32 = 2;
pub const EXIT_INCONCLUSIVE: i32 = 3;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum OutputMode {
    Text,
    Json,
}

#[derive(Debug, Parser)]
#[command(
    name = "kmc4",
    version,
    about = "Potentially K_m - C_4-graphic sequences and their thresholds"
)]
pub struct Cli {
    /// Largest vertex count accepted by exhaustive searches (max 32).
    #[arg(long, global = true, env = "KMC4_VERTEX_LIMIT", default_value_t = kmc4_core::limits::DEFAULT_VERTEX_LIMIT)]
    pub vertex_limit: usize,

    /// Cap on realization classes visited per decision; negative verdicts
    /// reached under a cap are reported as inconclusive.
    #[arg(long, global = true)]
    pub budget: Option<usize>,

    /// Worker threads for sweeps (default: all cores).
    #[arg(long, short = 'j', global = true)]
    pub jobs: Option<usize>,

    #[arg(long, global = true, value_enum, default_value_t = OutputMode::Json)]
    pub output: OutputMode,

    /// Seed for randomized switch order in `potential`.
    #[arg(long, global = true)]
    pub seed: Option<u64>,

    /// Suppress progress lines on standard error.
    #[arg(long, short = 'q', global = true)]
    pub quiet: bool,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Erdős–Gallai graphicality test.
    Graphical { seq: String },
    /// Havel–Hakimi realization, printed as graph6.
    Realize { seq: String },
    /// Decide whether SEQ is potentially K_m - C_4-graphic.
    Potential {
        seq: String,
        #[arg(long)]
        m: usize,
    },
    /// Lower bound or exact value of σ(K_m - C_4, n).
    Sigma {
        #[arg(long)]
        m: usize,
        #[arg(long)]
        n: usize,
        #[arg(long, conflicts_with = "bound")]
        exact: bool,
        #[arg(long)]
        bound: bool,
    },
    /// Extremal construction K_{m-3} + complement of K_{n-m+3}.
    Witness {
        #[arg(long)]
        m: usize,
        #[arg(long)]
        n: usize,
    },
    /// Machine checks over a range of n.
    Verify {
        #[arg(value_enum)]
        target: VerifyTarget,
        #[arg(long)]
        m: Option<usize>,
        #[arg(long = "n-min")]
        n_min: Option<usize>,
        #[arg(long = "n-max")]
        n_max: usize,
    },
    /// Constructive replay of the m = 5 induction, one JSON line per step.
    Replay { seq: String },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum VerifyTarget {
    Theorem1,
    Theorem2,
    Conjecture,
}

struct Ctx<'a> {
    limits: Limits,
    mode: OutputMode,
    seed: Option<u64>,
    quiet: bool,
    out: &'a mut dyn Write,
    err: &'a mut dyn Write,
}

enum Failure {
    Input(String),
    Inconclusive(String),
    Io(std::io::Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::BudgetExceeded { .. } => Failure::Inconclusive(e.to_string()),
            e => Failure::Input(e.to_string()),
        }
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        Failure::Io(e)
    }
}

type Outcome = Result<i32, Failure>;

fn parse_seq(text: &str) -> Result<DegreeSequence, Failure> {
    text.parse::<DegreeSequence>().map_err(Failure::from)
}

impl Ctx<'_> {
    fn json<T: Serialize>(&mut self, value: &T) -> std::io::Result<()> {
        let line = serde_json::to_string(value).expect("report types serialize");
        writeln!(self.out, "{line}")
    }

    fn progress(&self) -> impl Fn(&LevelProgress) + Sync + use<> {
        let quiet = self.quiet;
        move |p: &LevelProgress| {
            if !quiet {
                eprintln!(
                    "m={} n={} level {}: {} sequences, {} not potential",
                    p.m, p.n, p.level, p.sequences, p.failures
                );
            }
        }
    }

    fn graphical(&mut self, seq: &str) -> Outcome {
        let s = parse_seq(seq)?;
        let ok = s.is_graphical();
        match self.mode {
            OutputMode::Json => self.json(&json!({
                "sequence": s,
                "graphical": ok,
                "degree_sum": s.degree_sum(),
            }))?,
            OutputMode::Text => writeln!(
                self.out,
                "{} ({}): {}, degree sum {}",
                s,
                s.power_notation(),
                if ok { "graphical" } else { "not graphical" },
                s.degree_sum()
            )?,
        }
        Ok(if ok { EXIT_TRUE } else { EXIT_FALSE })
    }

    fn realize(&mut self, seq: &str) -> Outcome {
        let s = parse_seq(seq)?;
        if s.len() > kmc4_core::limits::MAX_VERTICES {
            return Err(Failure::Input(format!(
                "{} terms exceed 32 vertices",
                s.len()
            )));
        }
        let g = if s.is_graphical() {
            Some(havel_hakimi_realize(&s)?)
        } else {
            None
        };
        match self.mode {
            OutputMode::Json => self.json(&json!({
                "sequence": s,
                "graphical": g.is_some(),
                "graph6": g.as_ref().map(to_graph6),
            }))?,
            OutputMode::Text => match &g {
                Some(g) => writeln!(self.out, "{}", to_graph6(g))?,
                None => writeln!(self.err, "{s} is not graphical")?,
            },
        }
        Ok(if g.is_some() { EXIT_TRUE } else { EXIT_FALSE })
    }

    fn potential(&mut self, seq: &str, m: usize) -> Outcome {
        let s = parse_seq(seq)?;
        let pattern = km_minus_c4(m)?;
        if !s.is_graphical() {
            return Err(Failure::Input(format!("{s} is not graphical")));
        }
        let order = self
            .seed
            .map_or(SwitchOrder::Lexicographic, SwitchOrder::Shuffled);
        let r = is_potentially_with(&s, &pattern, &self.limits, order)?;
        let code = match r.conclusive() {
            Some(true) => EXIT_TRUE,
            Some(false) => EXIT_FALSE,
            None => EXIT_INCONCLUSIVE,
        };
        match self.mode {
            OutputMode::Json => self.json(&json!({
                "sequence": s,
                "m": m,
                "verdict": r.verdict,
                "exhausted": r.exhausted,
                "explored": r.explored,
                "witness": r.witness.as_ref().map(to_graph6),
                "embedding": r.embedding,
            }))?,
            OutputMode::Text => {
                let verdict = match r.conclusive() {
                    Some(true) => "potentially",
                    Some(false) => "not potentially",
                    None => "inconclusive: budget reached before deciding whether",
                };
                writeln!(
                    self.out,
                    "{s} is {verdict} K_{m}-C_4-graphic ({} realization classes examined)",
                    r.explored
                )?;
                if let (Some(w), Some(e)) = (&r.witness, &r.embedding) {
                    writeln!(self.out, "witness {} embedding {:?}", to_graph6(w), e)?;
                }
            }
        }
        Ok(code)
    }

    fn sigma(&mut self, m: usize, n: usize, exact: bool) -> Outcome {
        let lower_bound = extremal::sigma_lower_bound(m, n)?;
        if !exact {
            match self.mode {
                OutputMode::Json => self.json(&json!({
                    "m": m,
                    "n": n,
                    "lower_bound": lower_bound,
                    "exact": null,
                    "formula": lower_bound,
                    "verdict": Verdict::NotComputed,
                    "extremal_sequences": [],
                    "witnesses": [],
                }))?,
                OutputMode::Text => writeln!(self.out, "sigma(K_{m}-C_4, {n}) >= {lower_bound}")?,
            }
            return Ok(EXIT_TRUE);
        }
        let report = extremal::sigma_exact_with_progress(m, n, &self.limits, &self.progress())?;
        match self.mode {
            OutputMode::Json => self.json(&report)?,
            OutputMode::Text => self.sigma_text(&report)?,
        }
        Ok(verdict_code(&[report.verdict]))
    }

    fn sigma_text(&mut self, r: &SigmaReport) -> std::io::Result<()> {
        match r.exact {
            Some(e) => writeln!(
                self.out,
                "sigma(K_{}-C_4, {}) = {} (formula {}, {})",
                r.m, r.n, e, r.formula, r.verdict
            )?,
            None => writeln!(
                self.out,
                "sigma(K_{}-C_4, {}): not computed within budget (formula {})",
                r.m, r.n, r.formula
            )?,
        }
        for (s, w) in r.extremal_sequences.iter().zip(&r.witnesses) {
            writeln!(
                self.out,
                "  maximal failure {} [{}] realization {}",
                s,
                s.power_notation(),
                w
            )?;
        }
        Ok(())
    }

    fn witness(&mut self, m: usize, n: usize) -> Outcome {
        let lower_bound = extremal::sigma_lower_bound(m, n)?;
        let (g, s) = extremal::extremal_witness(m, n)?;
        match self.mode {
            OutputMode::Json => self.json(&json!({
                "m": m,
                "n": n,
                "sequence": s,
                "degree_sum": s.degree_sum(),
                "lower_bound": lower_bound,
                "graph6": to_graph6(&g),
            }))?,
            OutputMode::Text => writeln!(self.out, "{}", to_graph6(&g))?,
        }
        Ok(EXIT_TRUE)
    }

    fn verify(
        &mut self,
        target: VerifyTarget,
        m: Option<usize>,
        n_min: Option<usize>,
        n_max: usize,
    ) -> Outcome {
        match target {
            VerifyTarget::Theorem1 => {
                let ms: Vec<usize> = match m {
                    Some(m) => vec![m],
                    None => (4..=n_max).collect(),
                };
                let mut reports: Vec<Theorem1Report> = Vec::new();
                for m in ms {
                    for n in n_min.unwrap_or(m).max(m)..=n_max {
                        reports.push(extremal::verify_theorem1(m, n, &self.limits)?);
                    }
                }
                if reports.is_empty() {
                    return Err(Failure::Input("empty (m, n) range".into()));
                }
                let pass = reports.iter().all(|r| r.pass);
                match self.mode {
                    OutputMode::Json => self.json(&json!({
                        "target": "theorem1",
                        "pass": pass,
                        "reports": reports,
                    }))?,
                    OutputMode::Text => {
                        for r in &reports {
                            writeln!(
                                self.out,
                                "m={} n={}: witness {} sum {} (+2 = {}), classes {}, contains pattern {}: {}",
                                r.m, r.n, r.witness_sequence.power_notation(), r.witness_sum,
                                r.witness_sum + 2, r.realization_classes, r.contains_pattern,
                                if r.pass { "pass" } else { "FAIL" }
                            )?;
                        }
                    }
                }
                Ok(if pass { EXIT_TRUE } else { EXIT_FALSE })
            }
            VerifyTarget::Theorem2 => {
                if m.is_some_and(|m| m != 5) {
                    return Err(Failure::Input("theorem2 is stated for m = 5".into()));
                }
                let base: BaseCaseReport =
                    proof_replay::verify_base_cases(5..=n_max.max(5), &self.limits)?;
                let report: Theorem2Report =
                    proof_replay::verify_theorem2_range(n_max, &self.limits)?;
                let pass = base.pass && report.pass;
                match self.mode {
                    OutputMode::Json => self.json(&json!({
                        "target": "theorem2",
                        "pass": pass,
                        "base_cases": base,
                        "rows": report.rows,
                    }))?,
                    OutputMode::Text => {
                        for c in &base.cases {
                            writeln!(
                                self.out,
                                "base case n={} {}: {}",
                                c.n,
                                c.sequence.power_notation(),
                                c.witness.as_deref().unwrap_or("NO WITNESS")
                            )?;
                        }
                        for r in &report.rows {
                            writeln!(
                                self.out,
                                "n={}: exact {:?} (expected {}), replayed {} sequences, {} failures, {} disagreements: {}",
                                r.n, r.exact, r.expected, r.sequences_replayed, r.replay_failures.len(),
                                r.disagreements.len(), if r.pass { "pass" } else { "FAIL" }
                            )?;
                        }
                    }
                }
                Ok(if pass { EXIT_TRUE } else { EXIT_FALSE })
            }
            VerifyTarget::Conjecture => {
                let m = m.ok_or_else(|| Failure::Input("conjecture check needs --m".into()))?;
                let lo = n_min.unwrap_or(m);
                let reports = extremal::verify_conjecture_with_progress(
                    m,
                    lo..=n_max,
                    &self.limits,
                    &self.progress(),
                )?;
                let verdicts: Vec<Verdict> = reports.iter().map(|r| r.verdict).collect();
                match self.mode {
                    OutputMode::Json => self.json(&json!({
                        "target": "conjecture",
                        "m": m,
                        "pass": extremal::all_match(&reports),
                        "reports": reports,
                    }))?,
                    OutputMode::Text => {
                        for r in &reports {
                            self.sigma_text(r)?;
                        }
                    }
                }
                Ok(verdict_code(&verdicts))
            }
        }
    }

    fn replay(&mut self, seq: &str) -> Outcome {
        let s = parse_seq(seq)?;
        let trace: ProofTrace = match proof_replay::replay_theorem2(&s, &self.limits) {
            Ok(t) => t,
            Err(Error::Replay { reason, trace }) => {
                writeln!(self.err, "replay failed: {reason}")?;
                for line in trace {
                    writeln!(self.err, "  {line}")?;
                }
                return Ok(EXIT_FALSE);
            }
            Err(e) => return Err(e.into()),
        };
        match self.mode {
            OutputMode::Json => {
                for step in &trace.steps {
                    self.json(step)?;
                }
                self.json(&json!({
                    "sequence": s,
                    "witness": to_graph6(&trace.outcome),
                    "embedding": trace.embedding,
                }))?;
            }
            OutputMode::Text => {
                for (i, step) in trace.steps.iter().enumerate() {
                    writeln!(
                        self.out,
                        "{}. [{}] {} ({}): {}{}",
                        i + 1,
                        step.case,
                        step.sequence,
                        step.sequence.power_notation(),
                        step.action,
                        if step.deviation { " [deviation]" } else { "" }
                    )?;
                }
                writeln!(
                    self.out,
                    "witness {} contains K_5-C_4 at {:?}",
                    to_graph6(&trace.outcome),
                    trace.embedding
                )?;
            }
        }
        Ok(EXIT_TRUE)
    }
}

fn verdict_code(verdicts: &[Verdict]) -> i32 {
    if verdicts.contains(&Verdict::NotComputed) {
        EXIT_INCONCLUSIVE
    } else if verdicts.iter().all(|v| *v == Verdict::Matches) {
        EXIT_TRUE
    } else {
        EXIT_FALSE
    }
}

/// Parses `args` (program name first) and runs the command, writing the
/// report to `out` and diagnostics to `err`. Returns the exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() {
                EXIT_INPUT
            } else {
                EXIT_TRUE
            };
            let rendered = e.render().to_string();
            let _ = if e.use_stderr() {
                write!(err, "{rendered}")
            } else {
                write!(out, "{rendered}")
            };
            return code;
        }
    };
    let limits = match Limits::new(cli.vertex_limit) {
        Ok(l) => l.with_budget(cli.budget),
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            return EXIT_INPUT;
        }
    };
    if let Some(jobs) = cli.jobs {
        // The global pool can be configured once per process; later calls
        // keep the first setting.
        let _ = rayon::ThreadPoolBuilder::new()
            .num_threads(jobs)
            .build_global();
    }
    let mut ctx = Ctx {
        limits,
        mode: cli.output,
        seed: cli.seed,
        quiet: cli.quiet,
        out,
        err,
    };
    let result = match &cli.command {
        Command::Graphical { seq } => ctx.graphical(seq),
        Command::Realize { seq } => ctx.realize(seq),
        Command::Potential { seq, m } => ctx.potential(seq, *m),
        Command::Sigma { m, n, exact, .. } => ctx.sigma(*m, *n, *exact),
        Command::Witness { m, n } => ctx.witness(*m, *n),
        Command::Verify {
            target,
            m,
            n_min,
            n_max,
        } => ctx.verify(*target, *m, *n_min, *n_max),
        Command::Replay { seq } => ctx.replay(seq),
    };
    match result {
        Ok(code) => code,
        Err(Failure::Input(msg)) => {
            let _ = writeln!(ctx.err, "error: {msg}");
            EXIT_INPUT
        }
        Err(Failure::Inconclusive(msg)) => {
            let _ = writeln!(ctx.err, "inconclusive: {msg}");
            EXIT_INCONCLUSIVE
        }
        Err(Failure::Io(e)) => {
            let _ = writeln!(ctx.err, "error: {e}");
            EXIT_INPUT
        }
    }
}
