mod common;

use common::letters_strategy;
use lefschetz_core::arcs::{make_arc, Arc, SegmentChord};
use lefschetz_core::braid::BraidWord;
use lefschetz_core::homology::{
    arc_class, braid_rep, intersection_matrix, HomologyClass, IntMatrix, SignConvention,
};
use lefschetz_core::lattice::is_interval_vector;
use proptest::prelude::*;

/// `x · y` for the chain of spheres: `e_i · e_{i+1} = ε`, antisymmetric.
fn dot(eps: i64, x: &[i64], y: &[i64]) -> i64 {
    let mut s = 0;
    for i in 0..x.len().saturating_sub(1) {
        s += eps * (x[i] * y[i + 1] - x[i + 1] * y[i]);
    }
    s
}

/// Letter-by-letter Picard–Lefschetz: `τ(x) = x + (−1)^{n(n+1)/2} (x·V) V`,
/// the rightmost letter acting first.
fn transvect_word(n: i64, letters: &[i32], x: &[i64]) -> Vec<i64> {
    let eps = if (n * (n + 1) / 2 + 1) % 2 == 0 { 1 } else { -1 };
    let pl = if (n * (n + 1) / 2) % 2 == 0 { 1 } else { -1 };
    let mut v = x.to_vec();
    for &l in letters.iter().rev() {
        let i = l.unsigned_abs() as usize - 1;
        let mut e = vec![0; v.len()];
        e[i] = 1;
        let c = pl * i64::from(l.signum()) * dot(eps, &v, &e);
        v[i] += c;
    }
    v
}

fn interval(m: usize, k: usize, l: usize) -> Vec<i64> {
    (1..=m).map(|i| i64::from(k < i && i <= l)).collect()
}

fn word(strands: usize, letters: Vec<i32>) -> BraidWord {
    BraidWord::new(strands, letters).unwrap()
}

proptest! {
    #[test]
    fn rep_is_multiplicative(u in letters_strategy(5, 8), v in letters_strategy(5, 8)) {
        let conv = SignConvention::for_dimension(3).unwrap();
        let (u, v) = (word(5, u), word(5, v));
        let uv = braid_rep(&u.multiply(&v).unwrap(), conv);
        prop_assert_eq!(uv, braid_rep(&u, conv).mul(&braid_rep(&v, conv)));
    }

    #[test]
    fn rep_preserves_the_form(u in letters_strategy(6, 10), n in prop_oneof![Just(3i64), Just(5)]) {
        let conv = SignConvention::for_dimension(n).unwrap();
        let b = intersection_matrix(5, conv).unwrap();
        let m = braid_rep(&word(6, u), conv);
        prop_assert_eq!(m.transpose().mul(&b).mul(&m), b);
    }

    #[test]
    fn rep_matches_letterwise_transvections(
        u in letters_strategy(5, 10),
        x in proptest::collection::vec(-3i64..=3, 4),
        n in prop_oneof![Just(3i64), Just(5), Just(7), Just(9)],
    ) {
        let conv = SignConvention::for_dimension(n).unwrap();
        let got = braid_rep(&word(5, u.clone()), conv).apply(&x);
        prop_assert_eq!(got, transvect_word(n, &u, &x));
    }

    #[test]
    fn arc_class_matches_transvected_interval(
        pick in 0usize..10,
        u in letters_strategy(5, 8),
        n in prop_oneof![Just(3i64), Just(5)],
    ) {
        let m = 4;
        let c = SegmentChord::all(m)[pick];
        let a = make_arc(m, c, word(m + 1, u.clone())).unwrap();
        let conv = SignConvention::for_dimension(n).unwrap();
        let expect = HomologyClass::new(transvect_word(n, &u, &interval(m, c.k(), c.l())));
        prop_assert_eq!(arc_class(&a, conv), expect);
    }

    #[test]
    fn interval_verdict_ignores_epsilon(pick in 0usize..10, u in letters_strategy(5, 10)) {
        let m = 4;
        let a = make_arc(m, SegmentChord::all(m)[pick], word(m + 1, u)).unwrap();
        let plus = arc_class(&a, SignConvention::with_epsilon(1));
        let minus = arc_class(&a, SignConvention::with_epsilon(-1));
        prop_assert_eq!(is_interval_vector(&plus).is_some(), is_interval_vector(&minus).is_some());
    }
}

#[test]
fn artin_relations_in_the_representation() {
    let conv = SignConvention::for_dimension(3).unwrap();
    for strands in 3..=7 {
        for i in 1..strands as i32 {
            for j in 1..strands as i32 {
                let rep = |l: Vec<i32>| braid_rep(&word(strands, l), conv);
                if (i - j).abs() == 1 {
                    assert_eq!(rep(vec![i, j, i]), rep(vec![j, i, j]));
                } else if (i - j).abs() >= 2 {
                    assert_eq!(rep(vec![i, j]), rep(vec![j, i]));
                }
                assert_eq!(rep(vec![i, -i]), IntMatrix::identity(strands - 1));
            }
        }
    }
}

#[test]
fn chord_classes_are_their_intervals() {
    for m in 1..=6 {
        for eps in [1, -1] {
            for c in SegmentChord::all(m) {
                let class = arc_class(&Arc::chord(m, c).unwrap(), SignConvention::with_epsilon(eps));
                assert_eq!(is_interval_vector(&class), Some(c.endpoints()));
            }
        }
    }
}

#[test]
fn frozen_sign_for_the_first_long_chord() {
    // the raw (un-normalised) class of δ^{0,2} is +(e_1 + e_2)
    for n in [3, 5, 7] {
        let conv = SignConvention::for_dimension(n).unwrap();
        let t = lefschetz_core::braid::half_twist_word(0, 2, 2).unwrap();
        let prefix = &t.letters()[..1];
        assert_eq!(transvect_word(n, prefix, &[0, 1]), vec![1, 1]);
        let raw = braid_rep(&word(3, prefix.to_vec()), conv).apply(&[0, 1]);
        assert_eq!(raw, vec![1, 1]);
    }
}
