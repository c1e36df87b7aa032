//! Hurwitz moves on ordered tuples of vanishing arcs.
//!
//! A positive move at position `i` replaces `(a_i, a_{i+1})` by
//! `(t_i(a_{i+1}), a_i)`, where `t_i` is the half-twist along `a_i`; on
//! half-twists this is `(g_i, g_{i+1}) ↦ (g_i g_{i+1} g_i⁻¹, g_i)`. The
//! negative move is its inverse. Both preserve `g_1 ⋯ g_r`.

use std::collections::HashSet;
use std::fmt;

use itertools::Itertools;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::arcs::{apply_canonical, chord_relation, match_segment, Arc, ChordRelation, SegmentChord};
use crate::braid::CanonicalBraid;
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Direction {
    Positive,
    Negative,
}

impl Direction {
    pub fn inverse(self) -> Self {
        match self {
            Direction::Positive => Direction::Negative,
            Direction::Negative => Direction::Positive,
        }
    }
}

/// An ordered tuple of arcs on `m + 1` punctures. Equality is by key.
#[derive(Clone, Debug)]
pub struct VanishingTuple {
    m: usize,
    arcs: Vec<Arc>,
}

impl PartialEq for VanishingTuple {
    fn eq(&self, other: &Self) -> bool {
        self.m == other.m && self.arcs == other.arcs
    }
}

impl Eq for VanishingTuple {}

impl std::hash::Hash for VanishingTuple {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.m.hash(state);
        for a in &self.arcs {
            a.key().hash(state);
        }
    }
}

impl VanishingTuple {
    pub fn new(m: usize, arcs: Vec<Arc>) -> Result<Self> {
        for a in &arcs {
            if a.m() != m {
                return Err(Error::RankMismatch {
                    left: a.m(),
                    right: m,
                });
            }
        }
        Ok(VanishingTuple { m, arcs })
    }

    pub fn from_chords(m: usize, chords: &[SegmentChord]) -> Result<Self> {
        let arcs = chords
            .iter()
            .map(|&c| Arc::chord(m, c))
            .collect::<Result<Vec<_>>>()?;
        Self::new(m, arcs)
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn arcs(&self) -> &[Arc] {
        &self.arcs
    }

    pub fn len(&self) -> usize {
        self.arcs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.arcs.is_empty()
    }

    pub fn key(&self) -> Vec<CanonicalBraid> {
        self.arcs.iter().map(|a| a.key().clone()).collect()
    }

    /// The chord of every slot, if each arc is isotopic to one.
    pub fn chords(&self) -> Option<Vec<SegmentChord>> {
        self.arcs.iter().map(match_segment).collect()
    }
}

impl fmt::Display for VanishingTuple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .arcs
            .iter()
            .map(|a| match match_segment(a) {
                Some(c) => c.to_string(),
                None => format!("<{}>", a.key()),
            })
            .collect();
        write!(f, "({})", parts.join(", "))
    }
}

/// `(δ^{0,1}, δ^{1,2}, …, δ^{m−1,m})`.
pub fn standard_tuple(m: usize) -> Result<VanishingTuple> {
    if m < 1 {
        return Err(Error::InvalidRank { m, min: 1 });
    }
    let chords: Vec<SegmentChord> = (1..=m).map(SegmentChord::chain).collect();
    VanishingTuple::from_chords(m, &chords)
}

/// The elementary move at 1-based position `i`.
pub fn hurwitz_move(t: &VanishingTuple, i: usize, dir: Direction) -> Result<VanishingTuple> {
    let r = t.len();
    if i < 1 || i >= r {
        return Err(Error::IndexOutOfRange {
            index: i,
            max: r.saturating_sub(1),
        });
    }
    let (a, b) = (&t.arcs[i - 1], &t.arcs[i]);
    let (first, second) = match dir {
        Direction::Positive => (apply_canonical(a.key(), b)?, a.clone()),
        Direction::Negative => (b.clone(), apply_canonical(&b.key().inverse(), a)?),
    };
    let mut arcs = t.arcs.clone();
    arcs[i - 1] = first;
    arcs[i] = second;
    Ok(VanishingTuple { m: t.m, arcs })
}

/// Applies moves in the order given.
pub fn apply_moves(t: &VanishingTuple, moves: &[(usize, Direction)]) -> Result<VanishingTuple> {
    moves
        .iter()
        .try_fold(t.clone(), |acc, &(i, dir)| hurwitz_move(&acc, i, dir))
}

/// Normal form of `g_1 ⋯ g_r`.
pub fn total_monodromy(t: &VanishingTuple) -> CanonicalBraid {
    t.arcs
        .iter()
        .fold(CanonicalBraid::identity(t.m + 1), |acc, a| acc.multiply(a.key()))
}

/// Closure of `{t}` under all moves, sorted by key.
///
/// Frontiers expand in parallel; insertion is sequential in frontier order so
/// the representative kept for each key does not depend on scheduling.
pub fn orbit(t: &VanishingTuple, cap: usize) -> Result<Vec<VanishingTuple>> {
    if cap == 0 {
        return Err(Error::CapExceeded { cap });
    }
    let r = t.len();
    let mut seen: HashSet<Vec<CanonicalBraid>> = HashSet::new();
    let mut all = vec![t.clone()];
    seen.insert(t.key());
    let mut frontier = vec![t.clone()];
    while !frontier.is_empty() {
        let next: Vec<Vec<VanishingTuple>> = frontier
            .par_iter()
            .map(|cur| {
                (1..r)
                    .flat_map(|i| [(i, Direction::Positive), (i, Direction::Negative)])
                    .map(|(i, dir)| hurwitz_move(cur, i, dir))
                    .collect::<Result<Vec<_>>>()
            })
            .collect::<Result<Vec<_>>>()?;
        frontier = Vec::new();
        for cand in next.into_iter().flatten() {
            if seen.insert(cand.key()) {
                if seen.len() > cap {
                    return Err(Error::CapExceeded { cap });
                }
                all.push(cand.clone());
                frontier.push(cand);
            }
        }
    }
    all.sort_by_cached_key(|v| v.key());
    Ok(all)
}

/// Chords of a clockwise tree, in tuple order.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct TreeConfig {
    pub chords: Vec<SegmentChord>,
}

/// Pairwise non-crossing, acyclic and connected on the punctures it touches.
pub fn is_tree(chords: &[SegmentChord]) -> bool {
    for (a, b) in chords.iter().tuple_combinations() {
        if a == b || chord_relation(*a, *b) == ChordRelation::Crossing {
            return false;
        }
    }
    let mut vertices: Vec<usize> = chords.iter().flat_map(|c| [c.k(), c.l()]).collect();
    vertices.sort_unstable();
    vertices.dedup();
    if chords.len() + 1 != vertices.len() {
        return chords.is_empty();
    }
    // union-find; with |E| = |V| − 1, acyclic ⇔ connected
    let mut parent: Vec<usize> = (0..vertices.len()).collect();
    fn find(parent: &mut [usize], x: usize) -> usize {
        let mut x = x;
        while parent[x] != x {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        x
    }
    let idx = |p: usize| vertices.binary_search(&p).expect("listed vertex");
    for c in chords {
        let (a, b) = (find(&mut parent, idx(c.k())), find(&mut parent, idx(c.l())));
        if a == b {
            return false;
        }
        parent[a] = b;
    }
    true
}

/// At every puncture, the incident chords taken in tuple order turn
/// strictly clockwise: the counterclockwise offset of the far endpoint,
/// `(far − v) mod (m+1)`, strictly decreases.
pub fn is_clockwise_ordered(m: usize, chords: &[SegmentChord]) -> bool {
    let n = m + 1;
    (0..n).all(|v| {
        chords
            .iter()
            .filter(|c| c.contains(v))
            .map(|c| {
                let far = if c.k() == v { c.l() } else { c.k() };
                (far + n - v) % n
            })
            .tuple_windows()
            .all(|(a, b)| a > b)
    })
}

/// The configuration of `t`, if every slot is a chord and together they
/// form a clockwise tree.
pub fn is_clockwise_tree(t: &VanishingTuple) -> Option<TreeConfig> {
    let chords = t.chords()?;
    (is_tree(&chords) && is_clockwise_ordered(t.m, &chords)).then_some(TreeConfig { chords })
}

/// Every ordered spanning tree of chords on `m + 1` punctures satisfying the
/// clockwise condition, enumerated combinatorially.
pub fn enumerate_clockwise_trees(m: usize) -> Vec<TreeConfig> {
    let all = SegmentChord::all(m);
    let mut out: Vec<TreeConfig> = all
        .into_iter()
        .combinations(m)
        .filter(|set| is_tree(set))
        .flat_map(|set| {
            set.into_iter()
                .permutations(m)
                .filter(|order| is_clockwise_ordered(m, order))
                .map(|chords| TreeConfig { chords })
                .collect::<Vec<_>>()
        })
        .collect();
    out.sort();
    out
}

/// The move sequence turning the standard tuple into the snake configuration
/// ending in `δ^{k,l}`, in application order: `(σ_1 ⋯ σ_{m−1})^{m−l}` read
/// right to left, then `σ_{k−l+m+1}⁻¹, …, σ_{m−1}⁻¹`.
pub fn reduction_sequence(m: usize, k: usize, l: usize) -> Result<Vec<(usize, Direction)>> {
    if k >= l || l > m {
        return Err(Error::InvalidChord { k, l, m });
    }
    let mut moves = Vec::new();
    for _ in 0..(m - l) {
        moves.extend((1..m).rev().map(|i| (i, Direction::Positive)));
    }
    moves.extend((k + m + 1 - l..m).map(|i| (i, Direction::Negative)));
    Ok(moves)
}

/// The snake configuration: `δ^{l+1,l+2}, …, δ^{m+k,m+k+1}` (indices mod
/// `m+1`), then `δ^{k+1,k+2}, …, δ^{l−1,l}`, then `δ^{k,l}`.
pub fn reduced_collection(m: usize, k: usize, l: usize) -> Result<Vec<SegmentChord>> {
    if k >= l || l > m {
        return Err(Error::InvalidChord { k, l, m });
    }
    let mut chords = Vec::with_capacity(m);
    for j in 1..=(m + k - l) {
        chords.push(SegmentChord::new(l + j, l + j + 1, m)?);
    }
    for i in (k + 1)..l {
        chords.push(SegmentChord::new(i, i + 1, m)?);
    }
    chords.push(SegmentChord::new(k, l, m)?);
    Ok(chords)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::braid::BraidWord;

    fn ch(k: usize, l: usize) -> SegmentChord {
        SegmentChord::try_from([k, l]).unwrap()
    }

    #[test]
    fn standard_tuple_and_monodromy() {
        let t = standard_tuple(2).unwrap();
        assert_eq!(t.chords().unwrap(), vec![ch(0, 1), ch(1, 2)]);
        for m in 1..6 {
            let t = standard_tuple(m).unwrap();
            let letters: Vec<i32> = (1..=m as i32).collect();
            let expect = BraidWord::new(m + 1, letters).unwrap().normal_form();
            assert_eq!(total_monodromy(&t), expect);
        }
    }

    #[test]
    fn positive_move_on_chain() {
        let t = standard_tuple(2).unwrap();
        let moved = hurwitz_move(&t, 1, Direction::Positive).unwrap();
        assert_eq!(moved.chords().unwrap(), vec![ch(0, 2), ch(0, 1)]);
        let expect = BraidWord::new(3, vec![1, 2, -1]).unwrap().normal_form();
        assert_eq!(moved.arcs()[0].key(), &expect);
        assert_eq!(total_monodromy(&moved), total_monodromy(&t));
        let back = hurwitz_move(&moved, 1, Direction::Negative).unwrap();
        assert_eq!(back, t);
    }

    #[test]
    fn disjoint_neighbours_swap() {
        let t = VanishingTuple::from_chords(4, &[ch(0, 1), ch(2, 3)]).unwrap();
        for dir in [Direction::Positive, Direction::Negative] {
            let moved = hurwitz_move(&t, 1, dir).unwrap();
            assert_eq!(moved.chords().unwrap(), vec![ch(2, 3), ch(0, 1)]);
        }
        assert!(hurwitz_move(&t, 2, Direction::Positive).is_err());
        assert!(hurwitz_move(&t, 0, Direction::Positive).is_err());
    }

    #[test]
    fn small_orbits() {
        assert_eq!(orbit(&standard_tuple(1).unwrap(), 10).unwrap().len(), 1);
        assert_eq!(orbit(&standard_tuple(2).unwrap(), 10).unwrap().len(), 3);
        assert!(matches!(
            orbit(&standard_tuple(3).unwrap(), 5),
            Err(Error::CapExceeded { cap: 5 })
        ));
    }

    #[test]
    fn tree_predicates() {
        assert!(is_tree(&[ch(0, 1), ch(1, 2)]));
        assert!(!is_tree(&[ch(0, 2), ch(1, 3)]));
        assert!(!is_tree(&[ch(0, 1), ch(1, 2), ch(0, 2)]));
        assert!(!is_tree(&[ch(0, 1), ch(2, 3)]));
        assert!(is_clockwise_ordered(2, &[ch(0, 1), ch(1, 2)]));
        assert!(!is_clockwise_ordered(2, &[ch(1, 2), ch(0, 1)]));
        let crossing = VanishingTuple::from_chords(3, &[ch(0, 2), ch(1, 3), ch(0, 1)]).unwrap();
        assert!(is_clockwise_tree(&crossing).is_none());
        assert!(is_clockwise_tree(&standard_tuple(4).unwrap()).is_some());
    }

    #[test]
    fn tree_counts_small() {
        assert_eq!(enumerate_clockwise_trees(2).len(), 3);
        assert_eq!(enumerate_clockwise_trees(3).len(), 16);
    }

    #[test]
    fn reduced_collection_examples() {
        let got = reduced_collection(7, 1, 6).unwrap();
        let expect = vec![ch(0, 7), ch(0, 1), ch(2, 3), ch(3, 4), ch(4, 5), ch(5, 6), ch(1, 6)];
        assert_eq!(got, expect);
        assert_eq!(reduced_collection(3, 0, 3).unwrap(), vec![ch(1, 2), ch(2, 3), ch(0, 3)]);
    }
}
