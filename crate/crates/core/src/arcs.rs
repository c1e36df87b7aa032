//! Arcs between punctures, up to isotopy.
//!
//! An embedded arc joining two punctures is determined up to isotopy by its
//! half-twist, an element of the braid group conjugate to a generator. An
//! [`Arc`] is stored as a straight chord moved by a conjugating braid, and is
//! keyed by the normal form of the resulting half-twist.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::braid::{half_twist_word_with, BraidWord, CanonicalBraid, Handedness};
use crate::error::{Error, Result};

/// The straight segment `δ^{k,l}` between punctures `p_k` and `p_l`,
/// normalised to `0 ≤ k < l ≤ m`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(into = "[usize; 2]", try_from = "[usize; 2]")]
pub struct SegmentChord {
    k: usize,
    l: usize,
}

impl SegmentChord {
    /// Chord between punctures `a` and `b`, taken mod `m + 1`.
    pub fn new(a: usize, b: usize, m: usize) -> Result<Self> {
        let (a, b) = (a % (m + 1), b % (m + 1));
        if a == b {
            return Err(Error::InvalidChord { k: a, l: b, m });
        }
        Ok(SegmentChord {
            k: a.min(b),
            l: a.max(b),
        })
    }

    /// The chain chord `δ^{j-1,j}`.
    pub fn chain(j: usize) -> Self {
        assert!(j >= 1);
        SegmentChord { k: j - 1, l: j }
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn l(&self) -> usize {
        self.l
    }

    pub fn endpoints(&self) -> (usize, usize) {
        (self.k, self.l)
    }

    pub fn contains(&self, p: usize) -> bool {
        self.k == p || self.l == p
    }

    fn check(&self, m: usize) -> Result<()> {
        if self.k >= self.l || self.l > m {
            return Err(Error::InvalidChord {
                k: self.k,
                l: self.l,
                m,
            });
        }
        Ok(())
    }

    /// All `m(m+1)/2` chords, in lexicographic order.
    pub fn all(m: usize) -> Vec<SegmentChord> {
        let mut out = Vec::with_capacity(m * (m + 1) / 2);
        for k in 0..=m {
            for l in k + 1..=m {
                out.push(SegmentChord { k, l });
            }
        }
        out
    }
}

impl From<SegmentChord> for [usize; 2] {
    fn from(c: SegmentChord) -> Self {
        [c.k, c.l]
    }
}

impl TryFrom<[usize; 2]> for SegmentChord {
    type Error = String;

    fn try_from(v: [usize; 2]) -> std::result::Result<Self, String> {
        if v[0] >= v[1] {
            return Err(format!("chord [{}, {}] must satisfy k < l", v[0], v[1]));
        }
        Ok(SegmentChord { k: v[0], l: v[1] })
    }
}

impl fmt::Display for SegmentChord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.k, self.l)
    }
}

/// How two chords sit relative to each other.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ChordRelation {
    Disjoint,
    SharedEndpoint,
    Crossing,
}

/// Punctures lie on a circle, so two chords cross iff their endpoints
/// interleave.
pub fn chord_relation(c1: SegmentChord, c2: SegmentChord) -> ChordRelation {
    let shared = c1.contains(c2.k) || c1.contains(c2.l);
    if shared {
        return ChordRelation::SharedEndpoint;
    }
    let inside = |p: usize| c1.k < p && p < c1.l;
    if inside(c2.k) != inside(c2.l) {
        ChordRelation::Crossing
    } else {
        ChordRelation::Disjoint
    }
}

/// An isotopy class of arcs: `conjugator(base)`.
#[derive(Clone, Debug)]
pub struct Arc {
    m: usize,
    base: SegmentChord,
    conjugator: BraidWord,
    handedness: Handedness,
    key: CanonicalBraid,
}

impl PartialEq for Arc {
    fn eq(&self, other: &Self) -> bool {
        self.m == other.m && self.handedness == other.handedness && self.key == other.key
    }
}

impl Eq for Arc {}

impl std::hash::Hash for Arc {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.m.hash(state);
        self.key.hash(state);
    }
}

impl Arc {
    pub fn m(&self) -> usize {
        self.m
    }

    pub fn base(&self) -> SegmentChord {
        self.base
    }

    pub fn conjugator(&self) -> &BraidWord {
        &self.conjugator
    }

    pub fn handedness(&self) -> Handedness {
        self.handedness
    }

    /// Normal form of the half-twist along this arc.
    pub fn key(&self) -> &CanonicalBraid {
        &self.key
    }

    /// The straight chord itself.
    pub fn chord(m: usize, chord: SegmentChord) -> Result<Arc> {
        make_arc(m, chord, BraidWord::identity(m + 1))
    }

    /// The two punctures joined by the arc, read off the permutation image of
    /// its half-twist.
    pub fn endpoints(&self) -> (usize, usize) {
        let moved: Vec<usize> = self
            .key
            .permutation()
            .iter()
            .enumerate()
            .filter(|(j, &p)| *j != p as usize)
            .map(|(j, _)| j)
            .collect();
        debug_assert_eq!(moved.len(), 2);
        (moved[0], moved[1])
    }
}

impl fmt::Display for Arc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "base={},{}; conj=\"{}\"",
            self.base.k, self.base.l, self.conjugator
        )
    }
}

/// JSON form: `{"base":[k,l],"conjugator":[1,-2,1]}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ArcSpec {
    pub base: [usize; 2],
    pub conjugator: Vec<i32>,
}

impl ArcSpec {
    pub fn build(&self, m: usize) -> Result<Arc> {
        self.build_with(m, Handedness::Right)
    }

    pub fn build_with(&self, m: usize, hand: Handedness) -> Result<Arc> {
        let base = SegmentChord::new(self.base[0], self.base[1], m)?;
        if self.base[0] > m || self.base[1] > m {
            return Err(Error::InvalidChord {
                k: self.base[0],
                l: self.base[1],
                m,
            });
        }
        let conj = BraidWord::new(m + 1, self.conjugator.clone())?;
        make_arc_with(m, base, conj, hand)
    }

    /// Parses `base=k,l; conj="1 -2 1"`.
    pub fn parse(text: &str) -> Result<ArcSpec> {
        let mut base = None;
        let mut conj = Vec::new();
        for part in text.split(';') {
            let part = part.trim();
            if part.is_empty() {
                continue;
            }
            let (key, value) = part
                .split_once('=')
                .ok_or_else(|| Error::Parse(format!("expected key=value, got {part:?}")))?;
            match key.trim() {
                "base" => base = Some(parse_base(value)?),
                "conj" => {
                    let value = value.trim().trim_matches('"');
                    conj = value
                        .split_whitespace()
                        .map(|t| {
                            t.parse::<i32>()
                                .map_err(|_| Error::Parse(format!("bad braid letter {t:?}")))
                        })
                        .collect::<Result<_>>()?;
                }
                other => return Err(Error::Parse(format!("unknown arc field {other:?}"))),
            }
        }
        let base = base.ok_or_else(|| Error::Parse("arc is missing base=k,l".into()))?;
        Ok(ArcSpec {
            base,
            conjugator: conj,
        })
    }
}

/// Parses `k,l`.
pub fn parse_base(text: &str) -> Result<[usize; 2]> {
    let (a, b) = text
        .trim()
        .split_once(',')
        .ok_or_else(|| Error::Parse(format!("expected k,l, got {text:?}")))?;
    let parse = |s: &str| {
        s.trim()
            .parse::<usize>()
            .map_err(|_| Error::Parse(format!("bad puncture index {s:?}")))
    };
    Ok([parse(a)?, parse(b)?])
}

impl From<&Arc> for ArcSpec {
    fn from(a: &Arc) -> Self {
        ArcSpec {
            base: [a.base.k, a.base.l],
            conjugator: a.conjugator.letters().to_vec(),
        }
    }
}

pub fn make_arc(m: usize, base: SegmentChord, conjugator: BraidWord) -> Result<Arc> {
    make_arc_with(m, base, conjugator, Handedness::Right)
}

pub fn make_arc_with(
    m: usize,
    base: SegmentChord,
    conjugator: BraidWord,
    handedness: Handedness,
) -> Result<Arc> {
    if m < 1 {
        return Err(Error::InvalidRank { m, min: 1 });
    }
    base.check(m)?;
    if conjugator.strands() != m + 1 {
        return Err(Error::StrandMismatch {
            left: conjugator.strands(),
            right: m + 1,
        });
    }
    let twist = half_twist_word_with(base.k, base.l, m, handedness)?;
    let key = conjugator.conjugate(&twist)?.normal_form();
    Ok(Arc {
        m,
        base,
        conjugator,
        handedness,
        key,
    })
}

/// A word for the half-twist along `a`.
pub fn half_twist(a: &Arc) -> BraidWord {
    BraidWord::from_canonical(&a.key)
}

/// Moves `a` by the mapping class `b`; the half-twist is conjugated by `b`.
pub fn apply_braid(b: &BraidWord, a: &Arc) -> Result<Arc> {
    if b.strands() != a.m + 1 {
        return Err(Error::StrandMismatch {
            left: b.strands(),
            right: a.m + 1,
        });
    }
    let conj_nf = b.multiply(&a.conjugator)?.normal_form();
    Ok(Arc {
        m: a.m,
        base: a.base,
        conjugator: BraidWord::from_canonical(&conj_nf),
        handedness: a.handedness,
        key: a.key.conjugate_by(&b.normal_form()),
    })
}

/// [`apply_braid`] for a braid already in normal form.
pub fn apply_canonical(g: &CanonicalBraid, a: &Arc) -> Result<Arc> {
    if g.strands() != a.m + 1 {
        return Err(Error::StrandMismatch {
            left: g.strands(),
            right: a.m + 1,
        });
    }
    let conj_nf = g.multiply(&a.conjugator.normal_form());
    Ok(Arc {
        m: a.m,
        base: a.base,
        conjugator: BraidWord::from_canonical(&conj_nf),
        handedness: a.handedness,
        key: a.key.conjugate_by(g),
    })
}

pub fn is_isotopic(a1: &Arc, a2: &Arc) -> Result<bool> {
    if a1.m != a2.m {
        return Err(Error::RankMismatch {
            left: a1.m,
            right: a2.m,
        });
    }
    Ok(a1.key == a2.key)
}

/// The chord isotopic to `a`, if any.
pub fn match_segment(a: &Arc) -> Option<SegmentChord> {
    let (p, q) = a.endpoints();
    // Only the chord with the same endpoints can match.
    let chord = SegmentChord { k: p, l: q };
    let twist = half_twist_word_with(chord.k, chord.l, a.m, a.handedness).ok()?;
    (twist.normal_form() == a.key).then_some(chord)
}
