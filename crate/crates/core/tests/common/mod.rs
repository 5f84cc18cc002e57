#![allow(dead_code)]

use rand::Rng;
use sups_core::{Interval, Symbol, Text};

pub fn syms(s: &str) -> Vec<Symbol> {
    s.bytes().map(|b| (b - b'a') as Symbol).collect()
}

pub fn text(s: &str) -> Text {
    Text::new(syms(s))
}

/// Every string of length `n` over `sigma` symbols.
pub fn all_strings(sigma: u32, n: usize) -> impl Iterator<Item = Vec<Symbol>> {
    let total = (sigma as usize).pow(n as u32);
    (0..total).map(move |mut x| {
        (0..n)
            .map(|_| {
                let c = (x % sigma as usize) as Symbol;
                x /= sigma as usize;
                c
            })
            .collect()
    })
}

pub fn random_symbols(rng: &mut impl Rng, n: usize, sigma: u32) -> Vec<Symbol> {
    (0..n).map(|_| rng.gen_range(0..sigma)).collect()
}

/// Radius of the maximal palindrome at every center, by direct expansion.
pub fn naive_arms(w: &[Symbol]) -> Vec<usize> {
    let n = w.len() as isize;
    (1..2 * n)
        .map(|k| {
            let (mut l, mut r) = if k % 2 == 1 { ((k - 1) / 2 - 1, (k - 1) / 2 + 1) } else { (k / 2 - 1, k / 2) };
            let mut arm = 0;
            while l >= 0 && r < n && w[l as usize] == w[r as usize] {
                arm += 1;
                l -= 1;
                r += 1;
            }
            arm
        })
        .collect()
}

pub fn ivs(v: &[(usize, usize)]) -> Vec<Interval> {
    v.iter().map(|&(a, b)| Interval::new(a, b).unwrap()).collect()
}
