#![allow(dead_code)]

use std::collections::BTreeMap;

use proptest::prelude::*;
use ver4::braided::{BraidedPoly, Gen, GeneratorSet};

/// `A` invertible, `B`, `C` plain, `D` closed.
pub fn ring() -> GeneratorSet {
    GeneratorSet::new()
        .with("A", true, false)
        .with("B", false, false)
        .with("C", false, false)
        .with("D", false, true)
}

/// A letter of a free word: generator index and whether it is primed.
pub type Letter = (usize, bool);

/// Sum over F2 of free words, each a list of letters.
pub type WordSum = BTreeMap<Vec<Letter>, bool>;

fn toggle(sum: &mut WordSum, w: Vec<Letter>) {
    let e = sum.entry(w.clone()).or_insert(false);
    *e = !*e;
    if !*e {
        sum.remove(&w);
    }
}

/// One rewrite step applied at the `choice`-th available redex, or `None`
/// when the word is already normal. Rules: primes are central and move right,
/// a repeated prime kills the word, closed generators have zero prime, and
/// `y x -> x y + x' y'` for base letters out of order.
fn rewrite_once(w: &[Letter], closed: &[bool], choice: usize) -> Option<Vec<Vec<Letter>>> {
    let mut redexes = Vec::new();
    for (i, &(g, primed)) in w.iter().enumerate() {
        if primed && closed[g] {
            return Some(vec![]);
        }
        if primed && w[i + 1..].contains(&(g, true)) {
            return Some(vec![]);
        }
    }
    for i in 0..w.len().saturating_sub(1) {
        let (a, b) = (w[i], w[i + 1]);
        let out_of_order = match (a.1, b.1) {
            (true, false) => true,
            (true, true) => a.0 > b.0,
            (false, false) => a.0 > b.0,
            (false, true) => false,
        };
        if out_of_order {
            redexes.push(i);
        }
    }
    if redexes.is_empty() {
        return None;
    }
    let i = redexes[choice % redexes.len()];
    let (a, b) = (w[i], w[i + 1]);
    let mut swapped = w.to_vec();
    swapped.swap(i, i + 1);
    let mut out = vec![swapped];
    if !a.1 && !b.1 && !closed[a.0] && !closed[b.0] {
        let mut corr = w.to_vec();
        corr[i] = (b.0, true);
        corr[i + 1] = (a.0, true);
        out.push(corr);
    }
    Some(out)
}

/// Normal form of a free word by rewriting, choosing redexes by `strategy`.
pub fn rewrite_normal(word: &[Letter], closed: &[bool], strategy: &[usize]) -> WordSum {
    let mut done = WordSum::new();
    let mut todo: Vec<Vec<Letter>> = vec![word.to_vec()];
    let mut step = 0usize;
    while let Some(w) = todo.pop() {
        let choice = strategy.get(step % strategy.len().max(1)).copied().unwrap_or(0);
        step += 1;
        match rewrite_once(&w, closed, choice) {
            None => toggle(&mut done, w),
            Some(next) => todo.extend(next),
        }
    }
    done
}

pub fn word_to_poly(word: &[Letter], set: &GeneratorSet) -> BraidedPoly {
    let mut acc = BraidedPoly::one();
    for &(g, primed) in word {
        let gen = set.gen(g, 0);
        let f = if primed {
            BraidedPoly::prime(gen)
        } else {
            BraidedPoly::var(gen)
        };
        acc = &acc * &f;
    }
    acc
}

pub fn sum_to_poly(sum: &WordSum, set: &GeneratorSet) -> BraidedPoly {
    let mut acc = BraidedPoly::zero();
    for w in sum.keys() {
        // normal words multiply without corrections
        acc += word_to_poly(w, set);
    }
    acc
}

pub fn arb_word(max_len: usize) -> impl Strategy<Value = Vec<Letter>> {
    prop::collection::vec((0usize..4, prop::bool::weighted(0.25)), 0..=max_len)
}

fn factor(set: &GeneratorSet, code: u8) -> BraidedPoly {
    let g = |i| set.gen(i, 0);
    match code % 9 {
        0 => BraidedPoly::var(g(0)),
        1 => BraidedPoly::power(g(0), -1).unwrap(),
        2 => BraidedPoly::var(g(1)),
        3 => BraidedPoly::var(g(2)),
        4 => BraidedPoly::var(g(3)),
        5 => BraidedPoly::prime(g(0)),
        6 => BraidedPoly::prime(g(1)),
        7 => BraidedPoly::prime(g(2)),
        _ => BraidedPoly::one(),
    }
}

pub fn arb_poly() -> impl Strategy<Value = BraidedPoly> {
    prop::collection::vec(prop::collection::vec(any::<u8>(), 0..4), 0..4).prop_map(|terms| {
        let set = ring();
        let mut acc = BraidedPoly::zero();
        for t in terms {
            let mut m = BraidedPoly::one();
            for c in t {
                m = &m * &factor(&set, c);
            }
            acc += m;
        }
        acc
    })
}

pub fn var(set: &GeneratorSet, i: usize) -> BraidedPoly {
    BraidedPoly::var(set.gen(i, 0))
}

pub fn gen(set: &GeneratorSet, i: usize) -> Gen {
    set.gen(i, 0)
}
