//! Braid words on `m + 1` strands and the word problem.
//!
//! Punctures sit at the `(m+1)`-st roots of unity `p_j = e^{2πij/(m+1)}`,
//! `j = 0..m`. The Artin generator `σ_i` is the right-handed half-twist along
//! the straight segment from `p_{i-1}` to `p_i`. Words compose like mapping
//! classes: the word `u v` acts by `v` first, then `u`.

mod garside;

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

pub use garside::{CanonicalBraid, SimpleBraid};

use crate::error::{Error, Result};

/// A word in the Artin generators; letter `i` is `σ_i`, letter `-i` is `σ_i⁻¹`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct BraidWord {
    strands: usize,
    letters: Vec<i32>,
}

impl BraidWord {
    pub fn new(strands: usize, letters: Vec<i32>) -> Result<Self> {
        if strands < 2 {
            return Err(Error::TooFewStrands(strands));
        }
        for &letter in &letters {
            if letter == 0 || letter.unsigned_abs() as usize >= strands {
                return Err(Error::LetterOutOfRange { letter, strands });
            }
        }
        Ok(BraidWord { strands, letters })
    }

    pub fn identity(strands: usize) -> Self {
        assert!(strands >= 2, "a braid needs at least 2 strands");
        BraidWord {
            strands,
            letters: Vec::new(),
        }
    }

    /// The single letter `σ_i^{±1}`.
    pub fn generator(strands: usize, letter: i32) -> Result<Self> {
        Self::new(strands, vec![letter])
    }

    /// Parses the whitespace-separated text syntax, e.g. `"1 2 -1"`.
    pub fn parse(strands: usize, text: &str) -> Result<Self> {
        let letters = text
            .split_whitespace()
            .map(|tok| {
                i32::from_str(tok).map_err(|_| Error::Parse(format!("bad braid letter {tok:?}")))
            })
            .collect::<Result<Vec<_>>>()?;
        Self::new(strands, letters)
    }

    pub fn strands(&self) -> usize {
        self.strands
    }

    pub fn letters(&self) -> &[i32] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    fn check_strands(&self, other: &BraidWord) -> Result<()> {
        if self.strands != other.strands {
            return Err(Error::StrandMismatch {
                left: self.strands,
                right: other.strands,
            });
        }
        Ok(())
    }

    /// Concatenation, no normalisation.
    pub fn multiply(&self, other: &BraidWord) -> Result<BraidWord> {
        self.check_strands(other)?;
        let mut letters = self.letters.clone();
        letters.extend_from_slice(&other.letters);
        Ok(BraidWord {
            strands: self.strands,
            letters,
        })
    }

    pub fn invert(&self) -> BraidWord {
        BraidWord {
            strands: self.strands,
            letters: self.letters.iter().rev().map(|l| -l).collect(),
        }
    }

    /// `self · g · self⁻¹`.
    pub fn conjugate(&self, g: &BraidWord) -> Result<BraidWord> {
        self.multiply(g)?.multiply(&self.invert())
    }

    pub fn normal_form(&self) -> CanonicalBraid {
        CanonicalBraid::from_letters(self.strands, &self.letters)
    }

    /// Equality in the braid group, decided by normal forms.
    pub fn equal(&self, other: &BraidWord) -> Result<bool> {
        self.check_strands(other)?;
        Ok(self.normal_form() == other.normal_form())
    }

    /// Swaps every letter for its inverse (the mirror automorphism).
    pub fn mirror(&self) -> BraidWord {
        BraidWord {
            strands: self.strands,
            letters: self.letters.iter().map(|l| -l).collect(),
        }
    }

    /// A word representing a canonical form.
    pub fn from_canonical(nf: &CanonicalBraid) -> BraidWord {
        BraidWord {
            strands: nf.strands(),
            letters: nf.to_letters(),
        }
    }
}

impl fmt::Display for BraidWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (idx, l) in self.letters.iter().enumerate() {
            if idx > 0 {
                write!(f, " ")?;
            }
            write!(f, "{l}")?;
        }
        Ok(())
    }
}

/// Free-function forms of the word operations.
pub fn multiply(u: &BraidWord, v: &BraidWord) -> Result<BraidWord> {
    u.multiply(v)
}

pub fn invert(u: &BraidWord) -> BraidWord {
    u.invert()
}

pub fn conjugate(b: &BraidWord, g: &BraidWord) -> Result<BraidWord> {
    b.conjugate(g)
}

pub fn normal_form(u: &BraidWord) -> CanonicalBraid {
    u.normal_form()
}

pub fn equal(u: &BraidWord, v: &BraidWord) -> Result<bool> {
    u.equal(v)
}

/// Which way a positive generator turns.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Handedness {
    /// `σ_i` is the right-handed (counterclockwise) half-twist.
    #[default]
    Right,
    /// `σ_i` is the left-handed half-twist; every word is read in the mirror.
    Left,
}

impl Handedness {
    pub fn sign(self) -> i32 {
        match self {
            Handedness::Right => 1,
            Handedness::Left => -1,
        }
    }

    pub fn flipped(self) -> Self {
        match self {
            Handedness::Right => Handedness::Left,
            Handedness::Left => Handedness::Right,
        }
    }
}

/// Right-handed half-twist along the straight chord from `p_k` to `p_l`.
///
/// See [`half_twist_word_with`].
pub fn half_twist_word(k: usize, l: usize, m: usize) -> Result<BraidWord> {
    half_twist_word_with(k, l, m, Handedness::Right)
}

/// Half-twist along the straight chord `δ^{k,l}`, `0 ≤ k < l ≤ m`.
///
/// The chord passes the punctures `p_{k+1}, …, p_{l-1}` on the side facing
/// the centre of the disc. Twisting `δ^{k+1,l}` by `σ_{k+1}` drags its end at
/// `p_{k+1}` across to `p_k` along exactly that side, so
///
/// ```text
/// t(k, l) = (σ_{k+1} ⋯ σ_{l-1}) σ_l (σ_{k+1} ⋯ σ_{l-1})⁻¹
/// ```
///
/// For the left-handed convention the conjugating letters are mirrored so the
/// word still names the same geometric chord.
pub fn half_twist_word_with(k: usize, l: usize, m: usize, hand: Handedness) -> Result<BraidWord> {
    if k >= l || l > m || m < 1 {
        return Err(Error::InvalidChord { k, l, m });
    }
    let s = hand.sign();
    let prefix: Vec<i32> = ((k + 1)..l).map(|i| s * i as i32).collect();
    let mut letters = prefix.clone();
    letters.push(l as i32);
    letters.extend(prefix.iter().rev().map(|x| -x));
    BraidWord::new(m + 1, letters)
}
