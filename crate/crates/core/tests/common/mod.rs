//! Test-only oracles and generators shared by the integration suites.
#![allow(dead_code)]

pub mod lk;

use proptest::prelude::*;
use rand::Rng;

use lefschetz_core::braid::BraidWord;

/// Random letters on `strands` strands.
pub fn random_letters<R: Rng + ?Sized>(rng: &mut R, strands: usize, len: usize) -> Vec<i32> {
    (0..len)
        .map(|_| {
            let g = rng.gen_range(1..strands as i32);
            if rng.gen_bool(0.5) {
                g
            } else {
                -g
            }
        })
        .collect()
}

/// A word equal to `letters` in the braid group, produced by random
/// applications of the defining relations, never longer than `max_len`.
pub fn rewrite<R: Rng + ?Sized>(
    rng: &mut R,
    strands: usize,
    letters: &[i32],
    steps: usize,
    max_len: usize,
) -> Vec<i32> {
    let mut w = letters.to_vec();
    for _ in 0..steps {
        match rng.gen_range(0..4) {
            // insert a cancelling pair
            0 if w.len() + 2 <= max_len => {
                let pos = rng.gen_range(0..=w.len());
                let g = rng.gen_range(1..strands as i32) * if rng.gen_bool(0.5) { 1 } else { -1 };
                w.splice(pos..pos, [g, -g]);
            }
            // delete a cancelling pair
            1 => {
                if let Some(p) = (0..w.len().saturating_sub(1)).find(|&p| w[p] == -w[p + 1]) {
                    w.drain(p..p + 2);
                }
            }
            // far commutation
            2 => {
                let cands: Vec<usize> = (0..w.len().saturating_sub(1))
                    .filter(|&p| (w[p].abs() - w[p + 1].abs()).abs() >= 2)
                    .collect();
                if !cands.is_empty() {
                    let p = cands[rng.gen_range(0..cands.len())];
                    w.swap(p, p + 1);
                }
            }
            // braid relation aba = bab, same signs
            _ => {
                let cands: Vec<usize> = (0..w.len().saturating_sub(2))
                    .filter(|&p| {
                        let (a, b, c) = (w[p], w[p + 1], w[p + 2]);
                        a == c && a.signum() == b.signum() && (a.abs() - b.abs()).abs() == 1
                    })
                    .collect();
                if !cands.is_empty() {
                    let p = cands[rng.gen_range(0..cands.len())];
                    let (a, b) = (w[p], w[p + 1]);
                    w[p] = b;
                    w[p + 1] = a;
                    w[p + 2] = b;
                }
            }
        }
    }
    w
}

/// Words on 3 to 5 strands of length up to `max_len`.
pub fn word_strategy(max_len: usize) -> impl Strategy<Value = BraidWord> {
    (3usize..=5).prop_flat_map(move |strands| {
        let letter = (1..strands as i32).prop_flat_map(|g| prop_oneof![Just(g), Just(-g)]);
        proptest::collection::vec(letter, 0..=max_len)
            .prop_map(move |letters| BraidWord::new(strands, letters).unwrap())
    })
}

/// Letters valid on `strands` strands.
pub fn letters_strategy(strands: usize, max_len: usize) -> impl Strategy<Value = Vec<i32>> {
    let letter = (1..strands as i32).prop_flat_map(|g| prop_oneof![Just(g), Just(-g)]);
    proptest::collection::vec(letter, 0..=max_len)
}
