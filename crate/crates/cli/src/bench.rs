//! Rough per-operation timings. Each figure is the median over `ROUNDS`
//! batches of the mean time per operation within a batch.

use std::hint::black_box;
use std::io::Write;
use std::time::Instant;

use anyhow::{bail, Result};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use sups_core::{LogRmqArray, SlidingEngine, StaticEngine, Symbol, Text};

use crate::Mode;

const ROUNDS: usize = 5;
const SIGMA: u32 = 4;
const RMQ_WIDTH: usize = 64;

fn median_ns(batch: usize, mut op: impl FnMut()) -> u128 {
    let mut samples: Vec<u128> = (0..ROUNDS)
        .map(|_| {
            let t = Instant::now();
            for _ in 0..batch {
                op();
            }
            t.elapsed().as_nanos() / batch as u128
        })
        .collect();
    samples.sort_unstable();
    samples[ROUNDS / 2]
}

/// Operations per batch, fewer for operations that scale with `n`.
fn batch_for(n: usize, linear: bool) -> usize {
    if linear {
        (200_000 / n.max(1)).clamp(1, 200)
    } else {
        1000
    }
}

fn symbols(rng: &mut ChaCha8Rng, n: usize) -> Vec<Symbol> {
    (0..n).map(|_| rng.gen_range(0..SIGMA)).collect()
}

pub fn run(mode: Mode, sizes: &[usize], out: &mut impl Write) -> Result<()> {
    if sizes.contains(&0) {
        bail!("sizes must be positive");
    }
    let name = format!("{mode:?}").to_lowercase();
    writeln!(out, "mode,n,op,median_ns")?;
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for &n in sizes {
        for (op, ns) in measure(mode, n, &mut rng)? {
            writeln!(out, "{name},{n},{op},{ns}")?;
            out.flush()?;
        }
    }
    Ok(())
}

fn measure(mode: Mode, n: usize, rng: &mut ChaCha8Rng) -> Result<Vec<(&'static str, u128)>> {
    let chars = symbols(rng, n);
    let mut rows = Vec::new();
    match mode {
        Mode::Static => {
            let build = median_ns(batch_for(n, true).min(10), || {
                black_box(StaticEngine::preprocess(Text::new(chars.clone())).unwrap());
            });
            rows.push(("preprocess", build));
            let engine = StaticEngine::preprocess(Text::new(chars))?;
            rows.push(("query", query_ns(rng, n, |p, q| black_box(engine.sups(p, q).unwrap()).len())));
        }
        Mode::Slide => {
            let mut engine = SlidingEngine::new(n);
            for &c in &chars {
                engine.push(c)?;
            }
            let batch = batch_for(n, true);
            // a pop followed by a push keeps the window full
            let slide = median_ns(batch, || {
                engine.pop().unwrap();
                engine.push(rng.gen_range(0..SIGMA)).unwrap();
            });
            rows.push(("pop_push", slide));
            let (b, e) = (engine.begin(), engine.end());
            let mut qrng = ChaCha8Rng::seed_from_u64(n as u64);
            rows.push((
                "query",
                median_ns(batch_for(n, false), || {
                    let p = qrng.gen_range(b..=e);
                    let q = qrng.gen_range(p..=e);
                    black_box(engine.sups(p, q).unwrap());
                }),
            ));
        }
        Mode::Edit => {
            let mut engine = StaticEngine::preprocess(Text::new(chars))?;
            let mut erng = ChaCha8Rng::seed_from_u64(n as u64);
            rows.push((
                "open_close",
                median_ns(batch_for(n, true), || {
                    let s = engine.begin_substitution(erng.gen_range(1..=n), erng.gen_range(0..SIGMA)).unwrap();
                    s.close();
                }),
            ));
            let session = engine.begin_substitution(n.div_ceil(2), SIGMA)?;
            rows.push(("query", query_ns(rng, n, |p, q| black_box(session.sups(p, q).unwrap()).len())));
            session.close();
        }
        Mode::Logrmq => {
            let values: Vec<i64> = chars.iter().map(|&c| i64::from(c)).collect();
            let mut a = LogRmqArray::build(&values, RMQ_WIDTH);
            let mut r = ChaCha8Rng::seed_from_u64(n as u64);
            let batch = batch_for(n, false);
            rows.push((
                "insert_delete",
                median_ns(batch, || {
                    a.insert(r.gen_range(1..=n + 1), r.gen_range(0..100)).unwrap();
                    a.delete(r.gen_range(1..=n + 1)).unwrap();
                }),
            ));
            rows.push((
                "query",
                median_ns(batch, || {
                    let i = r.gen_range(1..=n);
                    let j = r.gen_range(i..=n.min(i + RMQ_WIDTH - 1));
                    black_box(a.query(i, j).unwrap());
                }),
            ));
        }
    }
    Ok(rows)
}

fn query_ns(rng: &mut ChaCha8Rng, n: usize, mut f: impl FnMut(usize, usize) -> usize) -> u128 {
    median_ns(batch_for(n, false), || {
        let p = rng.gen_range(1..=n);
        let q = rng.gen_range(p..=n);
        black_box(f(p, q));
    })
}
