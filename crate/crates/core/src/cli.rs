//! Command-line front end: argument parsing and dispatch.

use std::ffi::OsString;
use std::fmt::Write;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand};
use num_bigint::BigUint;
use serde::Serialize;

use crate::ans::{compute_bounds_ans, decide_ans_with};
use crate::automata::Dfa;
use crate::error::{Error, Result};
use crate::hd0l::{decide_hd0l, WordVerdict};
use crate::io::{
    read_json, BoundsJson, CriterionJson, DecisionJson, EnumerationJson, Hd0lJson, MorphismJson, RecurrenceJson,
    RepresentationJson, ResiduesJson, System, SystemJson, FORMAT,
};
use crate::linrec::{n_growth_criterion, residue_profile, LinearRecurrence};
use crate::positional::{compute_bounds, decide_with};
use crate::search::{SearchOptions, DEFAULT_MAX_PERIOD};
use crate::upset::{DecisionVerdict, UpSet};

/// Exit code of a completed command.
pub const EXIT_OK: i32 = 0;
/// Exit code when the decision procedure does not apply.
pub const EXIT_INAPPLICABLE: i32 = 1;
/// Exit code for malformed input.
pub const EXIT_INPUT: i32 = 2;

#[derive(Parser, Debug)]
#[command(name = "numsys", version, about = "Ultimate periodicity in numeration systems")]
struct Cli {
    /// Emit JSON documents instead of text.
    #[arg(long, global = true)]
    json: bool,
    /// Largest candidate period examined by decision commands.
    #[arg(long, global = true, default_value_t = DEFAULT_MAX_PERIOD)]
    max_period: u64,
    /// Scale terms used when fitting Bertrand recurrences.
    #[arg(long, global = true, default_value_t = 64)]
    max_depth: usize,
    /// Examine candidate periods in parallel.
    #[arg(long, global = true)]
    parallel: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug)]
struct SystemArg {
    /// System file (linear, Bertrand or abstract).
    #[arg(long)]
    system: PathBuf,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Representation of an integer.
    Rep {
        #[command(flatten)]
        system: SystemArg,
        n: BigUint,
    },
    /// Value of a word.
    Val {
        #[command(flatten)]
        system: SystemArg,
        word: String,
    },
    /// Preperiod and period of the scale modulo m.
    Residues {
        /// System or recurrence file.
        #[arg(long)]
        system: PathBuf,
        #[arg(long)]
        modulus: u64,
    },
    /// Growth criterion for the residue counts.
    Criterion {
        /// System or recurrence file.
        #[arg(long)]
        system: PathBuf,
    },
    /// Period and preperiod bounds for automata with the given state count.
    Bounds {
        #[command(flatten)]
        system: SystemArg,
        #[arg(long)]
        states: usize,
    },
    /// Decides whether an automaton accepts the representations of an
    /// ultimately periodic set.
    Decide {
        #[command(flatten)]
        system: SystemArg,
        /// Automaton file.
        #[arg(long)]
        dfa: PathBuf,
    },
    /// The first words of the language in genealogical order.
    AnsEnumerate {
        #[command(flatten)]
        system: SystemArg,
        #[arg(long, default_value_t = 25)]
        count: u64,
    },
    /// Decides whether a morphic word is ultimately periodic.
    Hd0lDecide {
        /// Morphism file.
        #[arg(long)]
        morphism: PathBuf,
    },
    /// Graphviz rendering of an automaton.
    ExportDot {
        /// Renders the language of this system.
        #[arg(long, conflicts_with = "dfa")]
        system: Option<PathBuf>,
        /// Renders this automaton.
        #[arg(long)]
        dfa: Option<PathBuf>,
        /// Renders the automaton of the set `PREPERIOD:PERIOD` (bit strings)
        /// instead of the language.
        #[arg(long, requires = "system")]
        up_set: Option<String>,
    },
}

/// Text written by a command and its exit code.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

/// Parses `args` (program name first) and runs the command.
pub fn dispatch<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_INPUT } else { EXIT_OK };
            let text = e.render().to_string();
            return if code == EXIT_OK {
                Outcome { code, stdout: text, stderr: String::new() }
            } else {
                Outcome { code, stdout: String::new(), stderr: text }
            };
        }
    };
    match run(&cli) {
        Ok((code, stdout)) => Outcome { code, stdout, stderr: String::new() },
        Err(e) => Outcome { code: EXIT_INPUT, stdout: String::new(), stderr: format!("error: {e}\n") },
    }
}

fn to_json<T: Serialize>(value: &T) -> String {
    serde_json::to_string_pretty(value).expect("plain data serializes") + "\n"
}

fn load(cli: &Cli, path: &Path) -> Result<System> {
    read_json::<SystemJson>(path)?.to_system_with_depth(cli.max_depth)
}

/// A recurrence file, the scale of a positional system, or the minimal
/// recurrence of `v(q_0)` of an abstract system.
fn load_recurrence(cli: &Cli, path: &Path) -> Result<LinearRecurrence> {
    let text = std::fs::read_to_string(path)?;
    if let Ok(r) = serde_json::from_str::<RecurrenceJson>(&text) {
        return r.to_recurrence();
    }
    match serde_json::from_str::<SystemJson>(&text)?.to_system_with_depth(cli.max_depth)? {
        System::Positional(s) => Ok(s.recurrence().clone()),
        System::Abstract(s) => s.hypothesis_check()?.table.v_recurrence.ok_or_else(|| {
            Error::Precondition("the count sequence of the language satisfies no usable recurrence".into())
        }),
    }
}

fn verdict_code(v: &DecisionVerdict) -> i32 {
    match v {
        DecisionVerdict::Inapplicable { .. } => EXIT_INAPPLICABLE,
        _ => EXIT_OK,
    }
}

fn run(cli: &Cli) -> Result<(i32, String)> {
    let opts = SearchOptions { max_period: cli.max_period, parallel: cli.parallel };
    let mut out = String::new();
    match &cli.command {
        Command::Rep { system, n } => {
            let word = match load(cli, &system.system)? {
                System::Positional(s) => s.format_digits(&s.greedy_rep(n)),
                System::Abstract(s) => s.format_word(&s.rep_s(n)?),
            };
            if cli.json {
                out = to_json(&RepresentationJson { format: FORMAT, n: n.to_string(), word });
            } else {
                let _ = writeln!(out, "{word}");
            }
        }
        Command::Val { system, word } => {
            let (n, word) = match load(cli, &system.system)? {
                System::Positional(s) => {
                    let w = s.parse_digits(word)?;
                    (s.val(&w)?, s.format_digits(&w))
                }
                System::Abstract(s) => {
                    let w = s.parse_word(word)?;
                    (s.val_s(&w)?, s.format_word(&w))
                }
            };
            if cli.json {
                out = to_json(&RepresentationJson { format: FORMAT, n: n.to_string(), word });
            } else {
                let _ = writeln!(out, "{n}");
            }
        }
        Command::Residues { system, modulus } => {
            if *modulus == 0 {
                return Err(Error::ModulusTooLarge("the modulus must be positive".into()));
            }
            let profile = residue_profile(&load_recurrence(cli, system)?, *modulus);
            if cli.json {
                out = to_json(&ResiduesJson::from(&profile));
            } else {
                let join = |v: &[u64]| v.iter().map(u64::to_string).collect::<Vec<_>>().join(", ");
                let _ = writeln!(out, "modulus: {modulus}");
                let _ = writeln!(out, "preperiod ({}): {}", profile.preperiod, join(&profile.preperiod_values));
                let _ = writeln!(out, "period ({}): {}", profile.period, join(&profile.period_values));
                let _ = writeln!(out, "recurring residues: {}", profile.recurring_count);
            }
        }
        Command::Criterion { system } => {
            let verdict = n_growth_criterion(&load_recurrence(cli, system)?.minimized()?)?;
            if cli.json {
                out = to_json(&CriterionJson::new(&verdict)?);
            } else {
                let _ = writeln!(out, "{verdict}");
            }
        }
        Command::Bounds { system, states } => {
            let doc = match load(cli, &system.system)? {
                System::Positional(s) => {
                    let b = compute_bounds(&s, *states)?;
                    BoundsJson {
                        format: FORMAT,
                        states: b.states,
                        exponents: b.exponents,
                        period_bound: b.period_bound.to_string(),
                        preperiod_bound: b.preperiod_bound.to_string(),
                    }
                }
                System::Abstract(s) => {
                    let b = compute_bounds_ans(&s, *states)?;
                    BoundsJson {
                        format: FORMAT,
                        states: b.states,
                        exponents: b.exponents,
                        period_bound: b.period_bound.to_string(),
                        preperiod_bound: b.preperiod_bound.to_string(),
                    }
                }
            };
            if cli.json {
                out = to_json(&doc);
            } else {
                let exps: Vec<String> = doc.exponents.iter().map(|(p, s)| format!("{p}^{s}")).collect();
                let _ = writeln!(out, "states: {}", doc.states);
                let _ = writeln!(out, "prime exponents: {}", if exps.is_empty() { "none".into() } else { exps.join(", ") });
                let _ = writeln!(out, "period bound: {}", doc.period_bound);
                let _ = writeln!(out, "preperiod bound: {}", doc.preperiod_bound);
            }
        }
        Command::Decide { system, dfa } => {
            let sys = load(cli, &system.system)?;
            let x = read_json::<crate::automata::DfaJson>(dfa)?.to_dfa()?;
            let verdict = match &sys {
                System::Positional(s) => decide_with(s, &x, opts)?,
                System::Abstract(s) => decide_ans_with(s, &x, opts)?,
            };
            if cli.json {
                out = to_json(&DecisionJson { format: FORMAT, verdict: (&verdict).into() });
            } else {
                let _ = writeln!(out, "{verdict}");
            }
            return Ok((verdict_code(&verdict), out));
        }
        Command::AnsEnumerate { system, count } => {
            let sys = load(cli, &system.system)?;
            let words: Vec<RepresentationJson> = sys
                .language()
                .words()
                .take(*count as usize)
                .enumerate()
                .map(|(i, w)| RepresentationJson { format: FORMAT, n: i.to_string(), word: sys.language().format_word(&w) })
                .collect();
            if cli.json {
                out = to_json(&EnumerationJson { format: FORMAT, words });
            } else {
                for w in words {
                    let word = if w.word.is_empty() { "ε" } else { &w.word };
                    let _ = writeln!(out, "{}\t{}", w.n, word);
                }
            }
        }
        Command::Hd0lDecide { morphism } => {
            let (f, g, a) = read_json::<MorphismJson>(morphism)?.to_morphisms()?;
            let verdict = decide_hd0l(&f, &g, a, opts)?;
            if cli.json {
                out = to_json(&Hd0lJson::from(&verdict));
            } else {
                let _ = writeln!(out, "{verdict}");
            }
            let code = match verdict.overall {
                WordVerdict::Inapplicable { .. } => EXIT_INAPPLICABLE,
                _ => EXIT_OK,
            };
            return Ok((code, out));
        }
        Command::ExportDot { system, dfa, up_set } => {
            let automaton: Dfa = match (system, dfa) {
                (Some(path), None) => {
                    let sys = load(cli, path)?;
                    match up_set {
                        None => sys.language().clone(),
                        Some(spec) => {
                            let (pre, per) = spec.split_once(':').unwrap_or(("", spec));
                            let up = UpSet::parse(pre, per)?;
                            match &sys {
                                System::Positional(s) => s.up_set_dfa(&up)?,
                                System::Abstract(s) => s.up_set_dfa(&up)?,
                            }
                        }
                    }
                }
                (None, Some(path)) => read_json::<crate::automata::DfaJson>(path)?.to_dfa()?,
                _ => return Err(Error::InvalidAutomaton("give either --system or --dfa".into())),
            };
            out = automaton.to_dot();
        }
    }
    Ok((EXIT_OK, out))
}
