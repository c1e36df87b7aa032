//! Picard–Lefschetz action of the braid group on `H_n(M_m) ≅ Z^m`.
//!
//! The basis is `e_i = [V_i]`, the spheres over the chain chords
//! `δ^{i-1,i}`, oriented so that `V_i · V_{i+1} = ε` with
//! `ε = (-1)^{n(n+1)/2 + 1}`. For odd `n` the intersection form is
//! antisymmetric and `σ_i` acts by the transvection
//!
//! ```text
//! x ↦ x + s (x · e_i) e_i,    s = -ε = (-1)^{n(n+1)/2}.
//! ```
//!
//! With this sign the chord `δ^{0,2}` has class `+(e_1 + e_2)`; the matrices
//! themselves do not depend on `ε`.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::arcs::Arc;
use crate::braid::{half_twist_word_with, BraidWord, Handedness};
use crate::error::{Error, Result};

/// Coefficients of a middle-dimensional class, up to global sign.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct HomologyClass(Vec<i64>);

impl HomologyClass {
    /// Sign-normalised: first nonzero entry positive.
    pub fn new(mut coeffs: Vec<i64>) -> Self {
        if let Some(&first) = coeffs.iter().find(|&&c| c != 0) {
            if first < 0 {
                coeffs.iter_mut().for_each(|c| *c = -*c);
            }
        }
        HomologyClass(coeffs)
    }

    /// `e_{k+1} + ⋯ + e_l` in `Z^m`.
    pub fn interval(m: usize, k: usize, l: usize) -> Self {
        HomologyClass((1..=m).map(|i| i64::from(k < i && i <= l)).collect())
    }

    pub fn basis(m: usize, i: usize) -> Self {
        HomologyClass((1..=m).map(|j| i64::from(j == i)).collect())
    }

    pub fn coeffs(&self) -> &[i64] {
        &self.0
    }

    pub fn rank(&self) -> usize {
        self.0.len()
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&c| c == 0)
    }
}

impl fmt::Display for HomologyClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, c) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, ")")
    }
}

/// The sign data attached to a dimension `n`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SignConvention {
    epsilon: i64,
    n: i64,
}

impl SignConvention {
    /// `ε = (-1)^{n(n+1)/2 + 1}` for odd `n > 1`.
    pub fn for_dimension(n: i64) -> Result<Self> {
        if n == 1 {
            return Err(Error::DimensionOne);
        }
        if n < 2 {
            return Err(Error::DimensionTooSmall(n));
        }
        if n % 2 == 0 {
            return Err(Error::EvenDimension(n));
        }
        Ok(SignConvention {
            epsilon: minus_one_pow(n * (n + 1) / 2 + 1),
            n,
        })
    }

    /// A convention with a prescribed `ε`, bypassing the dimension formula.
    pub fn with_epsilon(epsilon: i64) -> Self {
        assert!(epsilon == 1 || epsilon == -1);
        // n = 3 has ε = -1 and n = 5 has ε = +1.
        SignConvention {
            epsilon,
            n: if epsilon == -1 { 3 } else { 5 },
        }
    }

    pub fn epsilon(&self) -> i64 {
        self.epsilon
    }

    pub fn n(&self) -> i64 {
        self.n
    }

    /// Coefficient `s` in the transvection `x ↦ x + s (x · e_i) e_i`.
    pub fn transvection_sign(&self) -> i64 {
        -self.epsilon
    }
}

pub(crate) fn minus_one_pow(e: i64) -> i64 {
    if e.rem_euclid(2) == 0 {
        1
    } else {
        -1
    }
}

/// Dense square integer matrix, row-major.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct IntMatrix {
    size: usize,
    data: Vec<i64>,
}

impl IntMatrix {
    pub fn zeros(size: usize) -> Self {
        IntMatrix {
            size,
            data: vec![0; size * size],
        }
    }

    pub fn identity(size: usize) -> Self {
        let mut m = Self::zeros(size);
        for i in 0..size {
            m.data[i * size + i] = 1;
        }
        m
    }

    pub fn from_rows(rows: &[Vec<i64>]) -> Self {
        let size = rows.len();
        let mut m = Self::zeros(size);
        for (i, row) in rows.iter().enumerate() {
            assert_eq!(row.len(), size);
            m.data[i * size..(i + 1) * size].copy_from_slice(row);
        }
        m
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn get(&self, i: usize, j: usize) -> i64 {
        self.data[i * self.size + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: i64) {
        self.data[i * self.size + j] = v;
    }

    pub fn rows(&self) -> Vec<Vec<i64>> {
        self.data.chunks(self.size.max(1)).map(|r| r.to_vec()).collect()
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.size);
        for i in 0..self.size {
            for j in 0..self.size {
                t.set(j, i, self.get(i, j));
            }
        }
        t
    }

    pub fn mul(&self, other: &IntMatrix) -> IntMatrix {
        assert_eq!(self.size, other.size);
        let n = self.size;
        let mut out = Self::zeros(n);
        for i in 0..n {
            for k in 0..n {
                let a = self.get(i, k);
                if a == 0 {
                    continue;
                }
                for j in 0..n {
                    out.data[i * n + j] += a * other.get(k, j);
                }
            }
        }
        out
    }

    pub fn apply(&self, v: &[i64]) -> Vec<i64> {
        assert_eq!(v.len(), self.size);
        (0..self.size)
            .map(|i| (0..self.size).map(|j| self.get(i, j) * v[j]).sum())
            .collect()
    }
}

/// The antisymmetric tridiagonal form `B`: `B_{i,i+1} = ε`, `B_{i+1,i} = -ε`.
pub type IntersectionMatrix = IntMatrix;

pub fn intersection_matrix(m: usize, conv: SignConvention) -> Result<IntersectionMatrix> {
    if m < 1 {
        return Err(Error::InvalidRank { m, min: 1 });
    }
    let mut b = IntMatrix::zeros(m);
    for i in 0..m.saturating_sub(1) {
        b.set(i, i + 1, conv.epsilon);
        b.set(i + 1, i, -conv.epsilon);
    }
    Ok(b)
}

/// `x · y` under `B`.
pub fn pairing(b: &IntersectionMatrix, x: &[i64], y: &[i64]) -> i64 {
    let by = b.apply(y);
    x.iter().zip(by).map(|(a, c)| a * c).sum()
}

/// Matrix of `σ_i^{sign}` acting on column vectors.
fn generator_matrix(m: usize, i: usize, sign: i64, conv: SignConvention) -> IntMatrix {
    // x ↦ x + sign·s·(x·e_i) e_i, and x·e_i = Σ_j x_j B_{j,i}.
    let s = conv.transvection_sign() * sign;
    let mut mat = IntMatrix::identity(m);
    let row = i - 1;
    if row > 0 {
        // B_{i-1,i} = ε
        mat.set(row, row - 1, mat.get(row, row - 1) + s * conv.epsilon);
    }
    if row + 1 < m {
        // B_{i+1,i} = -ε
        mat.set(row, row + 1, mat.get(row, row + 1) - s * conv.epsilon);
    }
    mat
}

/// Applies `σ_i^{sign}` (right-handed) to `x`.
pub fn generator_action(
    i: usize,
    sign: i64,
    x: &HomologyClass,
    conv: SignConvention,
) -> Result<HomologyClass> {
    let m = x.rank();
    if i < 1 || i > m {
        return Err(Error::IndexOutOfRange { index: i, max: m });
    }
    assert!(sign == 1 || sign == -1);
    let mat = generator_matrix(m, i, sign, conv);
    Ok(HomologyClass::new(mat.apply(x.coeffs())))
}

/// Raw transvection, without sign normalisation.
pub fn generator_action_raw(i: usize, sign: i64, x: &[i64], conv: SignConvention) -> Vec<i64> {
    generator_matrix(x.len(), i, sign, conv).apply(x)
}

/// The representation `Br_{m+1} → GL(Z^m)`, right-handed letters.
pub fn braid_rep(b: &BraidWord, conv: SignConvention) -> IntMatrix {
    braid_rep_with(b, conv, Handedness::Right)
}

/// As [`braid_rep`]; under the left-handed convention every letter is the
/// inverse transvection.
pub fn braid_rep_with(b: &BraidWord, conv: SignConvention, hand: Handedness) -> IntMatrix {
    let m = b.strands() - 1;
    let mut acc = IntMatrix::identity(m);
    for &letter in b.letters() {
        let sign = i64::from(letter.signum()) * i64::from(hand.sign());
        acc = acc.mul(&generator_matrix(m, letter.unsigned_abs() as usize, sign, conv));
    }
    acc
}

/// Class of the sphere over an arc, sign-normalised.
pub fn arc_class(a: &Arc, conv: SignConvention) -> HomologyClass {
    let m = a.m();
    let base = a.base();
    let hand = a.handedness();
    // The chord's half-twist is w σ_l w⁻¹, so its class is rep(w) e_l.
    let twist = half_twist_word_with(base.k(), base.l(), m, hand)
        .expect("arc bases are valid chords");
    let prefix_len = (twist.len() - 1) / 2;
    let prefix = BraidWord::new(m + 1, twist.letters()[..prefix_len].to_vec())
        .expect("prefix of a valid word");
    let core = HomologyClass::basis(m, base.l());
    let rep = braid_rep_with(a.conjugator(), conv, hand).mul(&braid_rep_with(&prefix, conv, hand));
    HomologyClass::new(rep.apply(core.coeffs()))
}
