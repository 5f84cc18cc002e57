//! Acceptance criteria, one line each. Exits non-zero if any fails.

mod common;

use std::collections::HashMap;
use std::time::{Duration, Instant};

use common::{all_strings, naive_arms, random_symbols};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use sups_core::fixtures;
use sups_core::mups::SlidingMups;
use sups_core::oracle::{oracle_mups, oracle_rmq, oracle_sups, sups_from_unique, unique_palindromes};
use sups_core::{Error, Interval, LogRmqArray, SlidingEngine, StaticEngine, Symbol, Text};

/// Time limit for the reference-text criterion.
const REFERENCE_LIMIT: Duration = Duration::from_secs(1);
/// Largest binary length checked exhaustively for all intervals.
const EXHAUSTIVE_LEN: usize = 12;
/// Largest binary length for the overlapping-palindrome check.
const OVERLAP_LEN: usize = 14;
const RMQ_OPS: usize = 100_000;
const RMQ_WIDTHS: [usize; 3] = [8, 64, 512];
/// Rebuild work allowed per LogRmQ update.
const RMQ_WORK_PER_OP: u64 = 64;
const SLIDE_OPS: usize = 10_000;
const SLIDE_MAX_WINDOW: usize = 512;
const EDIT_TRIALS: usize = 10_000;
const EDIT_MAX_LEN: usize = 200;
const EDIT_QUERIES: usize = 10;
/// Longest operation stream for the MUPS delta measurement.
const DELTA_STREAM_LEN: usize = 12;
/// Largest MUPS change per push or pop, measured with the oracle.
const DELTA_BOUND: usize = 3;

type Outcome = Result<String, String>;

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn bytes_text(s: &str) -> Text {
    Text::from_bytes(s.as_bytes()).0
}

fn substrings(s: &str, ivs: &[Interval]) -> Vec<String> {
    let mut out: Vec<String> = ivs.iter().map(|iv| s[iv.start - 1..iv.end].to_string()).collect();
    out.sort();
    out
}

fn reference_text() -> Outcome {
    let t0 = Instant::now();
    let e = StaticEngine::preprocess(bytes_text(fixtures::REFERENCE_TEXT)).map_err(|e| e.to_string())?;
    let mups = substrings(fixtures::REFERENCE_TEXT, &e.mups().intervals());
    let answer = e.sups(5, 6).map_err(|e| e.to_string())?;
    let elapsed = t0.elapsed();
    let want: Vec<String> = ["aba", "abba", "bbabb", "bbb"].map(String::from).to_vec();
    ensure(mups == want, || format!("MUPSs {mups:?}"))?;
    let want = vec![Interval { start: 2, end: 6 }, Interval { start: 4, end: 8 }];
    ensure(answer.intervals == want && answer.common_length == Some(5), || format!("sups(5,6) = {answer}"))?;
    ensure(elapsed < REFERENCE_LIMIT, || format!("took {elapsed:?}"))?;
    Ok(format!("sups(5,6) = {answer} in {elapsed:?}"))
}

fn witness() -> Outcome {
    let s = fixtures::four_sups_text();
    ensure(s.len() == 90, || format!("witness has length {}", s.len()))?;
    let e = StaticEngine::preprocess(bytes_text(&s)).map_err(|e| e.to_string())?;
    let answer = e.sups(18, 18).map_err(|e| e.to_string())?;
    let want: Vec<Interval> = [(1, 19), (4, 22), (16, 34), (18, 36)]
        .map(|(start, end)| Interval { start, end })
        .to_vec();
    ensure(answer.intervals == want, || format!("sups(18,18) = {answer}"))?;
    // the text is past the oracle's length guard, so scan it directly
    let b = s.as_bytes();
    let unique: Vec<Interval> = (0..b.len())
        .flat_map(|i| (i..b.len()).map(move |j| (i, j)))
        .filter(|&(i, j)| {
            let w = &b[i..=j];
            w.iter().eq(w.iter().rev()) && b.windows(w.len()).filter(|x| *x == w).count() == 1
        })
        .map(|(i, j)| Interval { start: i + 1, end: j + 1 })
        .collect();
    ensure(sups_from_unique(&unique, 18, 18) == want, || "brute force disagrees".to_string())?;
    Ok(format!("sups(18,18) = {answer}, confirmed by brute force"))
}

fn exhaustive_binary() -> Outcome {
    let mut queries = 0usize;
    let mut largest = 0;
    for n in 1..=EXHAUSTIVE_LEN {
        for chars in all_strings(2, n) {
            let unique = unique_palindromes(&chars);
            let e = StaticEngine::preprocess(Text::new(chars.clone())).map_err(|e| e.to_string())?;
            for p in 1..=n {
                for q in p..=n {
                    let got = e.sups(p, q).map_err(|e| e.to_string())?;
                    let want = sups_from_unique(&unique, p, q);
                    ensure(got.intervals == want, || format!("{chars:?} [{p},{q}]: got {got}, want {want:?}"))?;
                    ensure(got.len() <= 4, || format!("{chars:?} [{p},{q}]: {} answers", got.len()))?;
                    ensure(got.intervals.iter().all(|iv| Some(iv.len()) == got.common_length), || {
                        format!("{chars:?} [{p},{q}]: unequal lengths")
                    })?;
                    largest = largest.max(got.len());
                    queries += 1;
                }
            }
        }
    }
    Ok(format!("{queries} queries, largest answer {largest}"))
}

fn three_binary() -> Outcome {
    let t = fixtures::THREE_SUPS_BINARY;
    let e = StaticEngine::preprocess(bytes_text(t)).map_err(|e| e.to_string())?;
    let answer = e.sups(5, 5).map_err(|e| e.to_string())?;
    let got = substrings(t, &answer.intervals);
    ensure(got == ["ababa", "baaab", "babab"], || format!("substrings {got:?}"))?;
    Ok(format!("sups(5,5) = {answer}"))
}

fn overlapping_palindromes() -> Outcome {
    let mut pairs = 0usize;
    for n in 1..=OVERLAP_LEN {
        for w in all_strings(2, n) {
            let pal = |i: usize, l: usize| (0..l / 2).all(|x| w[i + x] == w[i + l - 1 - x]);
            for l in 1..=n {
                let starts: Vec<usize> = (0..=n - l).filter(|&i| pal(i, l)).collect();
                for (a, &i) in starts.iter().enumerate() {
                    for &j in starts[a + 1..].iter().take_while(|&&j| j < i + l) {
                        let z = &w[i..j + l];
                        let p = 2 * (j - i);
                        let periodic = (0..z.len().saturating_sub(p)).all(|x| z[x] == z[x + p]);
                        ensure(periodic, || format!("{w:?}: pair at {i}, {j} of length {l}"))?;
                        pairs += 1;
                    }
                }
            }
        }
    }
    Ok(format!("{pairs} overlapping pairs, 0 violations"))
}

fn logrmq_run(seed: u64, w_max: usize) -> Result<u64, String> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut a = LogRmqArray::build(&[], w_max);
    let mut v: Vec<i64> = Vec::new();
    let mut updates = 0u64;
    for step in 0..RMQ_OPS {
        let roll = rng.gen_range(0..10);
        if roll < 3 && v.len() < 3000 || v.is_empty() {
            let i = rng.gen_range(1..=v.len() + 1);
            let x = rng.gen_range(0..1000);
            a.insert(i, x).map_err(|e| e.to_string())?;
            v.insert(i - 1, x);
            updates += 1;
        } else if roll < 5 {
            let i = rng.gen_range(1..=v.len());
            a.delete(i).map_err(|e| e.to_string())?;
            v.remove(i - 1);
            updates += 1;
        } else if roll < 6 {
            let i = rng.gen_range(1..=v.len());
            let x = rng.gen_range(0..1000);
            a.substitute(i, x).map_err(|e| e.to_string())?;
            v[i - 1] = x;
            updates += 1;
        } else if roll < 9 {
            let i = rng.gen_range(1..=v.len());
            let j = rng.gen_range(i..=v.len().min(i + w_max - 1));
            let got = a.query(i, j).map_err(|e| e.to_string())?;
            ensure(got == oracle_rmq(&v, i, j), || format!("w_max {w_max} step {step}: query({i},{j}) = {got}"))?;
        } else if v.len() > w_max {
            let i = rng.gen_range(1..=v.len() - w_max);
            let res = a.query(i, i + w_max);
            ensure(matches!(res, Err(Error::WidthExceeded { .. })), || format!("wide query accepted: {res:?}"))?;
        }
        a.check_invariants().map_err(|e| format!("w_max {w_max} step {step}: {e}"))?;
    }
    a.check_invariants()?;
    ensure(a.to_vec() == v, || "contents diverged".into())?;
    ensure(a.work() <= RMQ_WORK_PER_OP * updates, || format!("w_max {w_max}: work {} for {updates} updates", a.work()))?;
    Ok(a.work() / updates.max(1))
}

fn logrmq() -> Outcome {
    let mut report = Vec::new();
    for (seed, &w) in RMQ_WIDTHS.iter().enumerate() {
        let per_op = logrmq_run(seed as u64, w)?;
        report.push(format!("w_max {w}: {per_op} work/update"));
    }
    Ok(format!("{RMQ_OPS} ops each, {}", report.join(", ")))
}

fn sliding_run(seed: u64, capacity: usize, sigma: u32) -> Result<(usize, usize), String> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut e = SlidingEngine::new(capacity);
    let (mut queries, mut arm_checks) = (0, 0);
    for step in 0..SLIDE_OPS {
        let roll = rng.gen_range(0..10);
        if (roll < 4 || e.is_empty()) && e.len() < capacity {
            e.push(rng.gen_range(0..sigma)).map_err(|e| e.to_string())?;
        } else if roll < 6 || e.len() == capacity && roll < 7 {
            e.pop().map_err(|e| e.to_string())?;
        } else {
            let p = rng.gen_range(e.begin()..=e.end());
            let span = rng.gen_range(0..16);
            let q = rng.gen_range(p..=e.end().min(p + span));
            let got = e.sups(p, q).map_err(|e| e.to_string())?;
            let window = e.window();
            let b = e.begin();
            let want = if window.len() <= 64 {
                oracle_sups(window.chars(), p + 1 - b, q + 1 - b)
                    .into_iter()
                    .map(|iv| Interval { start: iv.start + b - 1, end: iv.end + b - 1 })
                    .collect()
            } else {
                StaticEngine::preprocess(window).map_err(|e| e.to_string())?.sups(p, q).map_err(|e| e.to_string())?.intervals
            };
            ensure(got.intervals == want, || format!("W {capacity} step {step}: sups({p},{q}) = {got}, want {want:?}"))?;
            queries += 1;
        }
        if capacity <= 64 || step % 8 == 0 {
            let arms = e.clipped_arms();
            ensure(arms == naive_arms(e.window().chars()), || format!("W {capacity} step {step}: arms differ"))?;
            arm_checks += 1;
        }
    }
    Ok((queries, arm_checks))
}

fn sliding() -> Outcome {
    let mut queries = 0;
    let mut arm_checks = 0;
    for (seed, (capacity, sigma)) in [(48, 2), (48, 4), (SLIDE_MAX_WINDOW, 2), (SLIDE_MAX_WINDOW, 4)].into_iter().enumerate() {
        let (q, a) = sliding_run(seed as u64, capacity, sigma)?;
        queries += q;
        arm_checks += a;
    }
    Ok(format!("4 streams of {SLIDE_OPS} ops, {queries} queries, {arm_checks} arm checks"))
}

fn after_edit() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(8);
    let mut trials = 0;
    while trials < EDIT_TRIALS {
        let n = rng.gen_range(1..=EDIT_MAX_LEN);
        let sigma = rng.gen_range(2..=4);
        let chars = random_symbols(&mut rng, n, sigma);
        let mut engine = StaticEngine::preprocess(Text::new(chars.clone())).map_err(|e| e.to_string())?;
        let digest = engine.digest();
        for _ in 0..10 {
            let pos = rng.gen_range(1..=n);
            let c = rng.gen_range(0..sigma);
            let edited = Text::new(chars.clone()).substituted(pos, c).map_err(|e| e.to_string())?;
            let fresh = StaticEngine::preprocess(edited).map_err(|e| e.to_string())?;
            let session = engine.begin_substitution(pos, c).map_err(|e| e.to_string())?;
            for _ in 0..EDIT_QUERIES {
                let p = rng.gen_range(1..=n);
                let span = rng.gen_range(0..20);
                let q = rng.gen_range(p..=n.min(p + span));
                let got = session.sups(p, q).map_err(|e| e.to_string())?;
                let want = fresh.sups(p, q).map_err(|e| e.to_string())?;
                ensure(got == want, || format!("{chars:?} {pos}->{c} [{p},{q}]: got {got}, want {want}"))?;
            }
            session.close();
            ensure(engine.digest() == digest, || format!("{chars:?} {pos}->{c}: digest changed after close"))?;
            trials += 1;
        }
    }
    Ok(format!("{trials} edits, {} queries, digest restored each time", trials * EDIT_QUERIES))
}

fn delta_bound() -> Outcome {
    fn oracle_set(cache: &mut HashMap<Vec<Symbol>, Vec<(usize, usize)>>, w: &[Symbol]) -> Vec<(usize, usize)> {
        cache
            .entry(w.to_vec())
            .or_insert_with(|| oracle_mups(w).iter().map(|iv| (iv.start, iv.end)).collect())
            .clone()
    }
    fn diff(a: &[(usize, usize)], b: &[(usize, usize)]) -> usize {
        a.iter().filter(|x| !b.contains(x)).count() + b.iter().filter(|x| !a.contains(x)).count()
    }
    fn shift(v: &[(usize, usize)], by: usize) -> Vec<(usize, usize)> {
        v.iter().map(|&(s, e)| (s + by, e + by)).collect()
    }
    struct Walk {
        cache: HashMap<Vec<Symbol>, Vec<(usize, usize)>>,
        oracle_max: usize,
        engine_max: usize,
        ops: usize,
    }
    fn walk(st: &mut Walk, s: &SlidingMups, w: &[Symbol], depth: usize) -> Result<(), String> {
        if depth == 0 {
            return Ok(());
        }
        let before = shift(&oracle_set(&mut st.cache, w), s.begin() - 1);
        for op in 0..3 {
            let mut next = s.clone();
            let (win, delta) = if op == 2 {
                if w.is_empty() {
                    continue;
                }
                (w[1..].to_vec(), next.pop_delta().map_err(|e| e.to_string())?)
            } else {
                let mut win = w.to_vec();
                win.push(op);
                (win, next.pushback_delta(op))
            };
            let after = shift(&oracle_set(&mut st.cache, &win), next.begin() - 1);
            let expected = diff(&before, &after);
            st.oracle_max = st.oracle_max.max(expected);
            st.engine_max = st.engine_max.max(delta.len());
            st.ops += 1;
            let got: Vec<(usize, usize)> = next.set().iter().map(|r| (r.iv.start, r.iv.end)).collect();
            ensure(got == after && delta.len() == expected, || format!("window {win:?} after op {op}"))?;
            walk(st, &next, &win, depth - 1)?;
        }
        Ok(())
    }
    let mut st = Walk {
        cache: HashMap::new(),
        oracle_max: 0,
        engine_max: 0,
        ops: 0,
    };
    walk(&mut st, &SlidingMups::new(), &[], DELTA_STREAM_LEN)?;
    ensure(st.oracle_max <= DELTA_BOUND, || format!("oracle measured {} > {DELTA_BOUND}", st.oracle_max))?;
    ensure(st.engine_max <= DELTA_BOUND, || format!("engine delta {} > {DELTA_BOUND}", st.engine_max))?;
    Ok(format!("{} ops, measured max {} (bound {DELTA_BOUND})", st.ops, st.oracle_max))
}

type Criterion = (&'static str, fn() -> Outcome);

fn main() {
    let criteria: [Criterion; 9] = [
        ("reference text: MUPSs and sups(5,6)", reference_text),
        ("four-SUPS witness", witness),
        ("exhaustive binary, all intervals", exhaustive_binary),
        ("binary three-SUPS example", three_binary),
        ("overlapping palindromes are periodic", overlapping_palindromes),
        ("LogRmQ differential", logrmq),
        ("sliding-window differential", sliding),
        ("after-edit differential", after_edit),
        ("sliding MUPS delta bound", delta_bound),
    ];
    let mut failed = 0;
    for (i, (name, run)) in criteria.iter().enumerate() {
        let t0 = Instant::now();
        match run() {
            Ok(detail) => println!("PASS {}. {name}: {detail} [{:.1?}]", i + 1, t0.elapsed()),
            Err(why) => {
                failed += 1;
                println!("FAIL {}. {name}: {why} [{:.1?}]", i + 1, t0.elapsed());
            }
        }
    }
    println!("{} of {} criteria passed", criteria.len() - failed, criteria.len());
    if failed > 0 {
        std::process::exit(1);
    }
}
