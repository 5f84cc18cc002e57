mod common;

use common::naive_arms;
use proptest::prelude::*;
use sups_core::lce::LceIndex;
use sups_core::mups::mups_of;
use sups_core::oracle::{oracle_mups, oracle_period, oracle_sups};
use sups_core::{CenterIndex, Interval, StaticEngine, Symbol, Text};

fn word(max: usize, sigma: u32) -> impl Strategy<Value = Vec<Symbol>> {
    prop::collection::vec(0..sigma, 1..=max)
}

fn naive_radius(w: &[Symbol], k: usize) -> usize {
    naive_arms(w)[k - 1]
}

/// Pairs of equal-length palindromes starting `d` apart, overlapping.
fn overlapping_pairs(w: &[Symbol]) -> Vec<(usize, usize, usize)> {
    let n = w.len();
    let pal = |i: usize, l: usize| (0..l / 2).all(|x| w[i + x] == w[i + l - 1 - x]);
    let mut out = Vec::new();
    for l in 1..=n {
        for i in 0..=n - l {
            if !pal(i, l) {
                continue;
            }
            for j in i + 1..(i + l).min(n + 1 - l) {
                if pal(j, l) {
                    out.push((i, j, l));
                }
            }
        }
    }
    out
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    #[test]
    fn sups_match_oracle(w in word(30, 3), a in 0usize..30, b in 0usize..30) {
        let n = w.len();
        let (p, q) = (a % n + 1, b % n + 1);
        let (p, q) = (p.min(q), p.max(q));
        let e = StaticEngine::preprocess(Text::new(w.clone())).unwrap();
        let got = e.sups(p, q).unwrap();
        prop_assert_eq!(&got.intervals, &oracle_sups(&w, p, q));
        prop_assert!(got.len() <= 4);
        prop_assert!(got.intervals.iter().all(|iv| Some(iv.len()) == got.common_length));
    }

    #[test]
    fn mups_non_nested(w in word(40, 4)) {
        let set = mups_of(&Text::new(w.clone()));
        prop_assert!(set.is_non_nested());
        prop_assert_eq!(set.intervals(), oracle_mups(&w));
    }

    #[test]
    fn lce_matches_scan(w in word(40, 3), i in 1usize..40, j in 1usize..40) {
        let n = w.len();
        let (i, j) = (i % n + 1, j % n + 1);
        let idx = LceIndex::build(&Text::new(w.clone())).unwrap();
        let ff = (0..).take_while(|&t| i + t <= n && j + t <= n && w[i + t - 1] == w[j + t - 1]).count();
        prop_assert_eq!(idx.lce_ff(i, j).unwrap(), ff);
        let fb = (0..).take_while(|&t| i + t <= n && j > t && w[i + t - 1] == w[j - t - 1]).count();
        prop_assert_eq!(idx.lce_fb(i, j).unwrap(), fb);
    }

    #[test]
    fn skipping_radius_matches_edit(w in word(24, 3), k in 1usize..48, pos in 1usize..24, c in 0u32..3) {
        let n = w.len();
        let k = k % (2 * n - 1) + 1;
        let pos = pos % n + 1;
        let idx = LceIndex::build(&Text::new(w.clone())).unwrap();
        let mut edited = w.clone();
        edited[pos - 1] = c;
        prop_assert_eq!(idx.max_pal_radius_skipping(CenterIndex(k), pos, c).unwrap(), naive_radius(&edited, k));
    }

    #[test]
    fn center_round_trip(s in 1usize..500, len in 1usize..500) {
        let iv = Interval::new(s, s + len - 1).unwrap();
        let k = iv.center();
        prop_assert_eq!(k.interval(k.radius_of_length(iv.len())), Some(iv));
    }

    #[test]
    fn overlapping_palindromes_are_periodic(w in word(24, 2)) {
        for (i, j, l) in overlapping_pairs(&w) {
            let z = &w[i..j + l];
            let d = j - i;
            prop_assert!(oracle_period(z) <= 2 * d || z.len() <= 2 * d);
            prop_assert!((0..z.len().saturating_sub(2 * d)).all(|x| z[x] == z[x + 2 * d]));
        }
    }
}
