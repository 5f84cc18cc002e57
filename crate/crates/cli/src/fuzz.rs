//! Seeded differential runs against brute force.

use std::io::Write;

use anyhow::Result;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use sups_core::oracle::{oracle_rmq, oracle_sups};
use sups_core::{Interval, LogRmqArray, SlidingEngine, StaticEngine, Symbol, Text};

use crate::Mode;

const MAX_TEXT: usize = 48;
const EXHAUSTIVE_LEN: usize = 12;
const QUERIES: usize = 8;

fn symbols(rng: &mut ChaCha8Rng, n: usize, sigma: u32) -> Vec<Symbol> {
    (0..n).map(|_| rng.gen_range(0..sigma)).collect()
}

fn shifted(ivs: Vec<Interval>, shift: usize) -> Vec<Interval> {
    ivs.into_iter()
        .map(|iv| Interval {
            start: iv.start + shift,
            end: iv.end + shift,
        })
        .collect()
}

struct Tally {
    checks: u64,
    failure: Option<String>,
}

impl Tally {
    fn expect<T: PartialEq + std::fmt::Debug>(&mut self, got: T, want: T, case: impl FnOnce() -> String) {
        self.checks += 1;
        if got != want && self.failure.is_none() {
            self.failure = Some(format!("{}: got {got:?}, expected {want:?}", case()));
        }
    }
}

pub fn run(mode: Mode, seed: u64, iters: usize, out: &mut impl Write) -> Result<bool> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut tally = Tally {
        checks: 0,
        failure: None,
    };
    if let Mode::Static = mode {
        exhaustive_binary(&mut tally)?;
    }
    for _ in 0..iters {
        if tally.failure.is_some() {
            break;
        }
        match mode {
            Mode::Static => static_case(&mut rng, &mut tally)?,
            Mode::Slide => slide_case(&mut rng, &mut tally)?,
            Mode::Edit => edit_case(&mut rng, &mut tally)?,
            Mode::Logrmq => logrmq_case(&mut rng, &mut tally)?,
        }
    }
    let name = format!("{mode:?}").to_lowercase();
    match &tally.failure {
        None => {
            writeln!(out, "PASS fuzz {name} seed {seed}: {} checks", tally.checks)?;
            Ok(true)
        }
        Some(f) => {
            writeln!(out, "FAIL fuzz {name} seed {seed}: {f}")?;
            Ok(false)
        }
    }
}

/// Every interval of every binary text up to `EXHAUSTIVE_LEN`.
fn exhaustive_binary(tally: &mut Tally) -> Result<()> {
    for n in 1..=EXHAUSTIVE_LEN {
        for bits in 0u32..1 << n {
            let chars: Vec<Symbol> = (0..n).map(|i| bits >> i & 1).collect();
            let engine = StaticEngine::preprocess(Text::new(chars.clone()))?;
            for p in 1..=n {
                for q in p..=n {
                    tally.expect(engine.sups(p, q)?.intervals, oracle_sups(&chars, p, q), || {
                        format!("text {chars:?} query [{p}, {q}]")
                    });
                    if tally.failure.is_some() {
                        return Ok(());
                    }
                }
            }
        }
    }
    Ok(())
}

fn static_case(rng: &mut ChaCha8Rng, tally: &mut Tally) -> Result<()> {
    let n = rng.gen_range(1..=MAX_TEXT);
    let sigma = rng.gen_range(2..=4);
    let chars = symbols(rng, n, sigma);
    let engine = StaticEngine::preprocess(Text::new(chars.clone()))?;
    for _ in 0..QUERIES {
        let p = rng.gen_range(1..=n);
        let q = rng.gen_range(p..=n);
        tally.expect(engine.sups(p, q)?.intervals, oracle_sups(&chars, p, q), || {
            format!("text {chars:?} query [{p}, {q}]")
        });
    }
    Ok(())
}

fn slide_case(rng: &mut ChaCha8Rng, tally: &mut Tally) -> Result<()> {
    let capacity = rng.gen_range(1..=MAX_TEXT);
    let sigma = rng.gen_range(2..=4);
    let mut engine = SlidingEngine::new(capacity);
    let mut log = Vec::new();
    for _ in 0..4 * capacity {
        if engine.len() == capacity || (!engine.is_empty() && rng.gen_bool(0.3)) {
            engine.pop()?;
            log.push("pop".to_string());
        } else {
            let c = rng.gen_range(0..sigma);
            engine.push(c)?;
            log.push(format!("push {c}"));
        }
        if engine.is_empty() {
            continue;
        }
        let (b, e) = (engine.begin(), engine.end());
        let window = engine.window();
        let p = rng.gen_range(b..=e);
        let q = rng.gen_range(p..=e);
        let want = shifted(oracle_sups(window.chars(), p - b + 1, q - b + 1), b - 1);
        tally.expect(engine.sups(p, q)?.intervals, want, || {
            format!("capacity {capacity}, ops [{}], query [{p}, {q}]", log.join(", "))
        });
    }
    Ok(())
}

fn edit_case(rng: &mut ChaCha8Rng, tally: &mut Tally) -> Result<()> {
    let n = rng.gen_range(1..=MAX_TEXT);
    let sigma = rng.gen_range(2..=4);
    let chars = symbols(rng, n, sigma);
    let mut engine = StaticEngine::preprocess(Text::new(chars.clone()))?;
    let digest = engine.digest();
    let pos = rng.gen_range(1..=n);
    let c = rng.gen_range(0..sigma);
    let mut edited = chars.clone();
    edited[pos - 1] = c;
    let session = engine.begin_substitution(pos, c)?;
    for _ in 0..QUERIES {
        let p = rng.gen_range(1..=n);
        let q = rng.gen_range(p..=n);
        tally.expect(session.sups(p, q)?.intervals, oracle_sups(&edited, p, q), || {
            format!("text {chars:?}, T[{pos}] = {c}, query [{p}, {q}]")
        });
    }
    session.close();
    tally.expect(engine.digest(), digest, || format!("text {chars:?}: close did not restore the engine"));
    Ok(())
}

fn logrmq_case(rng: &mut ChaCha8Rng, tally: &mut Tally) -> Result<()> {
    let w_max = [1, 2, 8, 64][rng.gen_range(0..4)];
    let init: Vec<i64> = (0..rng.gen_range(0..200)).map(|_| rng.gen_range(0..32)).collect();
    let mut a = LogRmqArray::build(&init, w_max);
    let mut v = init;
    for _ in 0..64 {
        match rng.gen_range(0..4) {
            0 => {
                let i = rng.gen_range(1..=v.len() + 1);
                let x = rng.gen_range(0..32);
                a.insert(i, x)?;
                v.insert(i - 1, x);
            }
            1 if !v.is_empty() => {
                let i = rng.gen_range(1..=v.len());
                a.delete(i)?;
                v.remove(i - 1);
            }
            2 if !v.is_empty() => {
                let i = rng.gen_range(1..=v.len());
                let x = rng.gen_range(0..32);
                a.substitute(i, x)?;
                v[i - 1] = x;
            }
            _ if !v.is_empty() => {
                let i = rng.gen_range(1..=v.len());
                let j = rng.gen_range(i..=v.len().min(i + w_max - 1));
                tally.expect(a.query(i, j)?, oracle_rmq(&v, i, j), || {
                    format!("w_max {w_max}, values {v:?}, query [{i}, {j}]")
                });
            }
            _ => {}
        }
        tally.expect(a.check_invariants(), Ok(()), || format!("w_max {w_max}: layout"));
    }
    Ok(())
}
