//! `sups`: shortest unique palindromic substring queries from the command line.
//!
//! Exit codes: 0 on success, 1 when `--verify` or `fuzz` finds a mismatch,
//! 2 on usage, parse or state errors.

mod bench;
mod fuzz;
mod script;

use std::io::{self, BufWriter, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Parser, Subcommand, ValueEnum};
use sups_core::oracle::{self, oracle_sups};
use sups_core::{Alphabet, Interval, SlidingEngine, StaticEngine, SupsAnswer, Text};

use script::{Line, Op};

#[derive(Parser)]
#[command(name = "sups", version, about = "Shortest unique palindromic substring queries")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Answer "p q" queries against the subject on the first line.
    Query {
        /// Batch file, or `-` for standard input.
        input: PathBuf,
        /// Check every answer against an independent computation.
        #[arg(long)]
        verify: bool,
    },
    /// Run a push/pop/sups script over a sliding window.
    Slide {
        input: PathBuf,
        /// Maximum window length.
        #[arg(long)]
        capacity: usize,
        #[arg(long)]
        verify: bool,
    },
    /// Run sub/query/close sessions against the subject on the first line.
    Edit {
        input: PathBuf,
        #[arg(long)]
        verify: bool,
    },
    /// Differential tests against brute force.
    Fuzz {
        #[arg(long, value_enum)]
        mode: Mode,
        #[arg(long, default_value_t = 1)]
        seed: u64,
        #[arg(long, default_value_t = 1000)]
        iters: usize,
    },
    /// Per-operation timings as CSV: mode,n,op,median_ns.
    Bench {
        #[arg(long, value_enum)]
        mode: Mode,
        /// Comma-separated input sizes.
        #[arg(long, value_delimiter = ',', default_values_t = [1000, 10000, 100000])]
        sizes: Vec<usize>,
    },
}

#[derive(Clone, Copy, Debug, ValueEnum)]
pub enum Mode {
    Static,
    Slide,
    Edit,
    Logrmq,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let stdout = io::stdout();
    let mut out = BufWriter::new(stdout.lock());
    let result = match cli.command {
        Command::Query { input, verify } => run_query(&input, verify, &mut out),
        Command::Slide {
            input,
            capacity,
            verify,
        } => run_slide(&input, capacity, verify, &mut out),
        Command::Edit { input, verify } => run_edit(&input, verify, &mut out),
        Command::Fuzz { mode, seed, iters } => fuzz::run(mode, seed, iters, &mut out),
        Command::Bench { mode, sizes } => bench::run(mode, &sizes, &mut out).map(|()| true),
    };
    let flushed = out.flush();
    match result {
        Ok(true) if flushed.is_ok() => ExitCode::SUCCESS,
        Ok(true) => ExitCode::from(2),
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}

fn answer_line(p: usize, q: usize, a: &SupsAnswer) -> String {
    format!("{p} {q} -> {a}")
}

/// SUPSs of `[p, q]` in `text`, computed independently of `got`'s engine:
/// brute force for short texts, a fresh static engine otherwise.
fn reference(text: &Text, p: usize, q: usize) -> Result<Vec<Interval>> {
    if text.len() <= oracle::MAX_LEN {
        let shift = text.origin() - 1;
        Ok(oracle_sups(text.chars(), p - shift, q - shift)
            .into_iter()
            .map(|iv| Interval {
                start: iv.start + shift,
                end: iv.end + shift,
            })
            .collect())
    } else {
        Ok(StaticEngine::preprocess(text.clone())?.sups(p, q)?.intervals)
    }
}

fn check(text: &Text, line: usize, p: usize, q: usize, got: &SupsAnswer) -> Result<bool> {
    let want = reference(text, p, q)?;
    if got.intervals != want {
        let want: Vec<String> = want.iter().map(ToString::to_string).collect();
        eprintln!("line {line}: mismatch for {p} {q}: got {got}, expected [{}]", want.join(" "));
        return Ok(false);
    }
    Ok(true)
}

fn run_query(input: &Path, verify: bool, out: &mut impl Write) -> Result<bool> {
    let doc = script::read(input)?;
    let (subject, skip) = script::subject(&doc, input)?;
    let (text, _) = Text::from_bytes(&subject);
    let engine = StaticEngine::preprocess(text.clone()).context("empty subject")?;
    let mut ok = true;
    for Line { number, op } in script::ops(&doc, skip)? {
        let Op::Pair(p, q) = op else {
            bail!("line {number}: expected \"p q\"");
        };
        let a = engine.sups(p, q).with_context(|| format!("line {number}"))?;
        writeln!(out, "{}", answer_line(p, q, &a))?;
        if verify {
            ok &= check(&text, number, p, q, &a)?;
        }
    }
    Ok(ok)
}

fn run_slide(input: &Path, capacity: usize, verify: bool, out: &mut impl Write) -> Result<bool> {
    if capacity == 0 {
        bail!("--capacity must be positive");
    }
    let doc = script::read(input)?;
    let mut engine = SlidingEngine::new(capacity);
    let mut alphabet = Alphabet::new();
    let mut ok = true;
    for Line { number, op } in script::ops(&doc, 0)? {
        let at = || format!("line {number}");
        match op {
            Op::Push(c) => {
                engine.push(alphabet.encode(c)).with_context(at)?;
            }
            Op::Pop => {
                engine.pop().with_context(at)?;
            }
            Op::Sups(p, q) => {
                let a = engine.sups(p, q).with_context(at)?;
                writeln!(out, "{}", answer_line(p, q, &a))?;
                if verify {
                    ok &= check(&engine.window(), number, p, q, &a)?;
                }
            }
            _ => bail!("line {number}: expected push, pop or sups"),
        }
    }
    Ok(ok)
}

fn run_edit(input: &Path, verify: bool, out: &mut impl Write) -> Result<bool> {
    let doc = script::read(input)?;
    let (subject, skip) = script::subject(&doc, input)?;
    let (text, mut alphabet) = Text::from_bytes(&subject);
    let mut engine = StaticEngine::preprocess(text.clone()).context("empty subject")?;
    let mut ok = true;
    let mut lines = script::ops(&doc, skip)?.into_iter();
    while let Some(Line { number, op }) = lines.next() {
        let at = || format!("line {number}");
        match op {
            Op::Query(p, q) => {
                let a = engine.sups(p, q).with_context(at)?;
                writeln!(out, "{}", answer_line(p, q, &a))?;
                if verify {
                    ok &= check(&text, number, p, q, &a)?;
                }
            }
            Op::Sub(pos, c) => {
                let c = alphabet.encode(c);
                let edited = text.substituted(pos, c).with_context(at)?;
                let session = engine.begin_substitution(pos, c).with_context(at)?;
                // the session lasts until its close line or the end of the script
                for Line { number, op } in lines.by_ref() {
                    match op {
                        Op::Query(p, q) => {
                            let a = session.sups(p, q).with_context(|| format!("line {number}"))?;
                            writeln!(out, "{}", answer_line(p, q, &a))?;
                            if verify {
                                ok &= check(&edited, number, p, q, &a)?;
                            }
                        }
                        Op::Close => break,
                        Op::Sub(..) => bail!("line {number}: a substitution is already open; close it first"),
                        _ => bail!("line {number}: expected sub, query or close"),
                    }
                }
                session.close();
            }
            Op::Close => bail!("line {number}: close without an open substitution"),
            _ => bail!("line {number}: expected sub, query or close"),
        }
    }
    Ok(ok)
}
