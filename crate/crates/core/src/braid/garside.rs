//! Left-greedy normal form for the braid group.
//!
//! A braid is written uniquely as `Δ^p · A_1 ⋯ A_k` where every `A_i` is a
//! positive permutation braid different from the identity and from `Δ`, and
//! each adjacent pair is left-weighted: the starting set of `A_{i+1}` is
//! contained in the finishing set of `A_i`.

use std::fmt;

use serde::{Deserialize, Serialize};

/// A positive permutation braid (simple element), stored as the permutation
/// it induces on strand positions: strand starting at `j` ends at `perm[j]`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct SimpleBraid {
    perm: Vec<u8>,
}

impl SimpleBraid {
    pub fn identity(strands: usize) -> Self {
        SimpleBraid {
            perm: (0..strands as u8).collect(),
        }
    }

    /// The Garside element: every pair of strands crosses once.
    pub fn delta(strands: usize) -> Self {
        SimpleBraid {
            perm: (0..strands as u8).rev().collect(),
        }
    }

    /// The Artin generator `σ_i`, `1 ≤ i < strands`.
    pub fn generator(strands: usize, i: usize) -> Self {
        debug_assert!(i >= 1 && i < strands);
        let mut perm: Vec<u8> = (0..strands as u8).collect();
        perm.swap(i - 1, i);
        SimpleBraid { perm }
    }

    /// Builds a simple braid from a permutation, if it is one.
    pub fn from_permutation(perm: Vec<u8>) -> Option<Self> {
        let n = perm.len();
        let mut seen = vec![false; n];
        for &p in &perm {
            let p = p as usize;
            if p >= n || seen[p] {
                return None;
            }
            seen[p] = true;
        }
        Some(SimpleBraid { perm })
    }

    pub fn strands(&self) -> usize {
        self.perm.len()
    }

    pub fn permutation(&self) -> &[u8] {
        &self.perm
    }

    pub fn is_identity(&self) -> bool {
        self.perm.iter().enumerate().all(|(j, &p)| p as usize == j)
    }

    pub fn is_delta(&self) -> bool {
        let n = self.perm.len();
        self.perm.iter().enumerate().all(|(j, &p)| p as usize == n - 1 - j)
    }

    /// Number of crossings.
    pub fn length(&self) -> usize {
        let n = self.perm.len();
        let mut count = 0;
        for a in 0..n {
            for b in a + 1..n {
                if self.perm[a] > self.perm[b] {
                    count += 1;
                }
            }
        }
        count
    }

    fn inverse_perm(&self) -> Vec<u8> {
        let mut inv = vec![0u8; self.perm.len()];
        for (j, &p) in self.perm.iter().enumerate() {
            inv[p as usize] = j as u8;
        }
        inv
    }

    /// Generators `i` with `self = σ_i · X` for a simple `X`.
    pub fn starting_set(&self) -> u64 {
        let mut set = 0u64;
        for i in 1..self.perm.len() {
            if self.perm[i - 1] > self.perm[i] {
                set |= 1 << i;
            }
        }
        set
    }

    /// Generators `i` with `self = X · σ_i` for a simple `X`.
    pub fn finishing_set(&self) -> u64 {
        let inv = self.inverse_perm();
        let mut set = 0u64;
        for i in 1..inv.len() {
            if inv[i - 1] > inv[i] {
                set |= 1 << i;
            }
        }
        set
    }

    /// `self · σ_i`; caller guarantees `i` is not in the finishing set.
    fn append_generator(&mut self, i: usize) {
        let (a, b) = ((i - 1) as u8, i as u8);
        for p in self.perm.iter_mut() {
            if *p == a {
                *p = b;
            } else if *p == b {
                *p = a;
            }
        }
    }

    /// `σ_i⁻¹ · self`; caller guarantees `i` is in the starting set.
    fn strip_generator(&mut self, i: usize) {
        self.perm.swap(i - 1, i);
    }

    /// Conjugation by `Δ`: `Δ · self · Δ⁻¹`, which sends `σ_i` to `σ_{n-i}`.
    pub fn flip(&self) -> Self {
        let n = self.perm.len();
        let perm = self.perm.iter().rev().map(|&p| (n - 1) as u8 - p).collect();
        SimpleBraid { perm }
    }

    /// The simple `X` with `X · self = Δ`.
    pub fn left_complement(&self) -> Self {
        let n = self.perm.len();
        let inv = self.inverse_perm();
        SimpleBraid {
            perm: (0..n).map(|j| inv[n - 1 - j]).collect(),
        }
    }

    /// Positive word (generator indices) spelling this permutation braid.
    pub fn to_letters(&self) -> Vec<i32> {
        let mut rest = self.clone();
        let mut out = Vec::with_capacity(self.length());
        while !rest.is_identity() {
            let set = rest.starting_set();
            let i = set.trailing_zeros() as usize;
            out.push(i as i32);
            rest.strip_generator(i);
        }
        out
    }
}

/// Pieces fed to the normaliser: simple factors interleaved with powers of `Δ`.
#[derive(Clone, Debug)]
pub(crate) enum Token {
    Simple(SimpleBraid),
    DeltaPower(i64),
}

/// The left-greedy normal form `Δ^infimum · factors[0] ⋯ factors[k-1]`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct CanonicalBraid {
    strands: usize,
    infimum: i64,
    factors: Vec<SimpleBraid>,
}

impl CanonicalBraid {
    pub fn identity(strands: usize) -> Self {
        CanonicalBraid {
            strands,
            infimum: 0,
            factors: Vec::new(),
        }
    }

    pub fn strands(&self) -> usize {
        self.strands
    }

    pub fn infimum(&self) -> i64 {
        self.infimum
    }

    pub fn factors(&self) -> &[SimpleBraid] {
        &self.factors
    }

    /// Canonical length (number of non-`Δ` factors).
    pub fn canonical_length(&self) -> usize {
        self.factors.len()
    }

    pub fn is_identity(&self) -> bool {
        self.infimum == 0 && self.factors.is_empty()
    }

    pub(crate) fn from_tokens(strands: usize, tokens: Vec<Token>) -> Self {
        // Move every Δ-power to the far left. A Δ^q passing a simple factor
        // from the right conjugates it by Δ^q, i.e. applies `flip` q times.
        let mut infimum = 0i64;
        let mut factors_rev = Vec::with_capacity(tokens.len());
        let mut parity = false;
        for token in tokens.into_iter().rev() {
            match token {
                Token::DeltaPower(q) => {
                    infimum += q;
                    if q.rem_euclid(2) == 1 {
                        parity = !parity;
                    }
                }
                Token::Simple(s) => {
                    if s.is_identity() {
                        continue;
                    }
                    factors_rev.push(if parity { s.flip() } else { s });
                }
            }
        }
        factors_rev.reverse();
        let mut factors = factors_rev;
        left_normalize(&mut factors);
        // Δ factors end up in front, identities at the back.
        let leading = factors.iter().take_while(|f| f.is_delta()).count();
        factors.drain(..leading);
        infimum += leading as i64;
        while factors.last().is_some_and(|f| f.is_identity()) {
            factors.pop();
        }
        CanonicalBraid {
            strands,
            infimum,
            factors,
        }
    }

    /// Normal form of a word given as signed generator indices.
    pub(crate) fn from_letters(strands: usize, letters: &[i32]) -> Self {
        let mut tokens = Vec::with_capacity(letters.len() * 2);
        for &letter in letters {
            let i = letter.unsigned_abs() as usize;
            if letter > 0 {
                tokens.push(Token::Simple(SimpleBraid::generator(strands, i)));
            } else {
                // σ_i⁻¹ = Δ⁻¹ · (Δ σ_i⁻¹), and Δ σ_i⁻¹ is the left complement of σ_i.
                tokens.push(Token::DeltaPower(-1));
                tokens.push(Token::Simple(
                    SimpleBraid::generator(strands, i).left_complement(),
                ));
            }
        }
        Self::from_tokens(strands, tokens)
    }

    fn tokens(&self) -> Vec<Token> {
        let mut tokens = Vec::with_capacity(self.factors.len() + 1);
        tokens.push(Token::DeltaPower(self.infimum));
        tokens.extend(self.factors.iter().cloned().map(Token::Simple));
        tokens
    }

    /// Group product `self · other`.
    pub fn multiply(&self, other: &CanonicalBraid) -> CanonicalBraid {
        assert_eq!(self.strands, other.strands, "strand count mismatch");
        let mut tokens = self.tokens();
        tokens.extend(other.tokens());
        Self::from_tokens(self.strands, tokens)
    }

    pub fn inverse(&self) -> CanonicalBraid {
        // (Δ^p A_1 ⋯ A_k)⁻¹ = A_k⁻¹ ⋯ A_1⁻¹ Δ^{-p}, with A⁻¹ = Δ⁻¹ · lc(A).
        let mut tokens = Vec::with_capacity(2 * self.factors.len() + 1);
        for f in self.factors.iter().rev() {
            tokens.push(Token::DeltaPower(-1));
            tokens.push(Token::Simple(f.left_complement()));
        }
        tokens.push(Token::DeltaPower(-self.infimum));
        Self::from_tokens(self.strands, tokens)
    }

    /// `g · self · g⁻¹`.
    pub fn conjugate_by(&self, g: &CanonicalBraid) -> CanonicalBraid {
        g.multiply(self).multiply(&g.inverse())
    }

    /// A word for this element: `Δ^p` spelled out, then each factor.
    pub fn to_letters(&self) -> Vec<i32> {
        let delta = SimpleBraid::delta(self.strands).to_letters();
        let mut out = Vec::new();
        if self.infimum >= 0 {
            for _ in 0..self.infimum {
                out.extend_from_slice(&delta);
            }
        } else {
            let inverse: Vec<i32> = delta.iter().rev().map(|l| -l).collect();
            for _ in 0..-self.infimum {
                out.extend_from_slice(&inverse);
            }
        }
        for f in &self.factors {
            out.extend(f.to_letters());
        }
        out
    }

    /// Image in the symmetric group, in the same strand-tracking convention
    /// as [`SimpleBraid`].
    pub fn permutation(&self) -> Vec<u8> {
        let n = self.strands;
        let mut perm: Vec<u8> = (0..n as u8).collect();
        if self.infimum.rem_euclid(2) == 1 {
            perm.reverse();
        }
        for f in &self.factors {
            let fp = f.permutation();
            for p in perm.iter_mut() {
                *p = fp[*p as usize];
            }
        }
        perm
    }
}

impl fmt::Display for CanonicalBraid {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_identity() {
            return write!(f, "identity");
        }
        let mut first = true;
        if self.infimum != 0 {
            write!(f, "D^{}", self.infimum)?;
            first = false;
        }
        for factor in &self.factors {
            if !first {
                write!(f, " ")?;
            }
            first = false;
            write!(f, "(")?;
            for (j, p) in factor.permutation().iter().enumerate() {
                if j > 0 {
                    write!(f, " ")?;
                }
                write!(f, "{}", p + 1)?;
            }
            write!(f, ")")?;
        }
        Ok(())
    }
}

/// Makes `(a, b)` left-weighted in place. Returns whether anything moved.
fn left_weight_pair(a: &mut SimpleBraid, b: &mut SimpleBraid) -> bool {
    let mut moved = false;
    loop {
        let movable = b.starting_set() & !a.finishing_set();
        if movable == 0 {
            return moved;
        }
        let i = movable.trailing_zeros() as usize;
        a.append_generator(i);
        b.strip_generator(i);
        moved = true;
    }
}

fn left_normalize(factors: &mut [SimpleBraid]) {
    // Insert factors one at a time, pushing weight leftwards.
    for j in 1..factors.len() {
        let mut i = j;
        while i > 0 {
            let (left, right) = factors.split_at_mut(i);
            if !left_weight_pair(&mut left[i - 1], &mut right[0]) {
                break;
            }
            i -= 1;
        }
    }
    // Sweep to a fixed point; normally a single verification pass.
    loop {
        let mut changed = false;
        for i in 1..factors.len() {
            let (left, right) = factors.split_at_mut(i);
            if left_weight_pair(&mut left[i - 1], &mut right[0]) {
                changed = true;
            }
        }
        if !changed {
            break;
        }
    }
}
