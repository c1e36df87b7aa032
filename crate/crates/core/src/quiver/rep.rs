//! Representations of the linear `(A_m)` quiver `1 → 2 → ⋯ → m` and their
//! interval decompositions.
//!
//! Multiplicities come from ranks of composite maps. Writing `r(a, b)` for the
//! rank of `ρ_{b−1} ⋯ ρ_a : W_a → W_b` (with `r(a, a) = dim W_a` and `r = 0`
//! outside `1..=m`), the interval supported on vertices `a..=b` occurs
//!
//! ```text
//! r(a, b) − r(a−1, b) − r(a, b+1) + r(a−1, b+1)
//! ```
//!
//! times.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use super::field::{Gf2, Matrix};
use crate::error::{Error, Result};

/// A representation: spaces `W_1..W_m` and maps `ρ_i : W_i → W_{i+1}`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct QuiverRep {
    dims: Vec<usize>,
    maps: Vec<Matrix<Gf2>>,
}

impl QuiverRep {
    pub fn new(dims: Vec<usize>, maps: Vec<Matrix<Gf2>>) -> Result<Self> {
        let m = dims.len();
        if maps.len() != m.saturating_sub(1) {
            return Err(Error::Shape(format!(
                "{} vertices need {} maps, got {}",
                m,
                m.saturating_sub(1),
                maps.len()
            )));
        }
        for (i, map) in maps.iter().enumerate() {
            if map.rows() != dims[i + 1] || map.cols() != dims[i] {
                return Err(Error::Shape(format!(
                    "map {} is {}x{}, expected {}x{}",
                    i + 1,
                    map.rows(),
                    map.cols(),
                    dims[i + 1],
                    dims[i]
                )));
            }
        }
        Ok(QuiverRep { dims, maps })
    }

    pub fn zero(m: usize) -> Self {
        QuiverRep {
            dims: vec![0; m],
            maps: (1..m).map(|_| Matrix::zeros(0, 0)).collect(),
        }
    }

    /// The indecomposable `C^{k,l}`: `Z/2` on vertices `k+1..=l`, identity
    /// maps between them.
    pub fn interval(m: usize, k: usize, l: usize) -> Result<Self> {
        if k >= l || l > m {
            return Err(Error::InvalidChord { k, l, m });
        }
        let dims: Vec<usize> = (1..=m).map(|i| usize::from(k < i && i <= l)).collect();
        let maps = (1..m)
            .map(|i| {
                let mut map = Matrix::zeros(dims[i], dims[i - 1]);
                if k < i && i < l {
                    map.set(0, 0, Gf2(true));
                }
                map
            })
            .collect();
        QuiverRep::new(dims, maps)
    }

    pub fn m(&self) -> usize {
        self.dims.len()
    }

    pub fn dims(&self) -> &[usize] {
        &self.dims
    }

    pub fn maps(&self) -> &[Matrix<Gf2>] {
        &self.maps
    }

    pub fn total_dim(&self) -> usize {
        self.dims.iter().sum()
    }

    pub fn direct_sum(&self, other: &QuiverRep) -> Result<QuiverRep> {
        if self.m() != other.m() {
            return Err(Error::RankMismatch {
                left: self.m(),
                right: other.m(),
            });
        }
        let dims = self.dims.iter().zip(&other.dims).map(|(a, b)| a + b).collect();
        let maps = self
            .maps
            .iter()
            .zip(&other.maps)
            .map(|(a, b)| a.direct_sum(b))
            .collect();
        QuiverRep::new(dims, maps)
    }

    /// Rank of `ρ_{b−1} ⋯ ρ_a` for `1 ≤ a ≤ b ≤ m`.
    pub fn composite_rank(&self, a: usize, b: usize) -> usize {
        assert!(1 <= a && a <= b && b <= self.m());
        let mut acc = Matrix::<Gf2>::identity(self.dims[a - 1]);
        for i in a..b {
            acc = self.maps[i - 1].mul(&acc);
        }
        acc.rank()
    }

    /// All composite ranks, `table[a-1][b-1]` for `a ≤ b`.
    pub fn rank_table(&self) -> Vec<Vec<usize>> {
        let m = self.m();
        (1..=m)
            .map(|a| {
                (1..=m)
                    .map(|b| if b < a { 0 } else { self.composite_rank(a, b) })
                    .collect()
            })
            .collect()
    }
}

/// JSON shape `{"dims":[...],"maps":[[[0,1],...],...]}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct QuiverRepJson {
    pub dims: Vec<usize>,
    pub maps: Vec<Vec<Vec<u8>>>,
}

impl TryFrom<QuiverRepJson> for QuiverRep {
    type Error = Error;

    fn try_from(json: QuiverRepJson) -> Result<Self> {
        let m = json.dims.len();
        if json.maps.len() != m.saturating_sub(1) {
            return Err(Error::Shape(format!(
                "{} vertices need {} maps, got {}",
                m,
                m.saturating_sub(1),
                json.maps.len()
            )));
        }
        let mut maps = Vec::with_capacity(json.maps.len());
        for (i, rows) in json.maps.into_iter().enumerate() {
            let (r, c) = (json.dims[i + 1], json.dims[i]);
            if rows.iter().any(|row| row.iter().any(|&x| x > 1)) {
                return Err(Error::Shape(format!("map {} has entries other than 0/1", i + 1)));
            }
            let entries = rows
                .into_iter()
                .map(|row| row.into_iter().map(Gf2::from).collect())
                .collect();
            let mat = Matrix::from_rows(r, c, entries).ok_or_else(|| {
                Error::Shape(format!("map {} must be {}x{}", i + 1, r, c))
            })?;
            maps.push(mat);
        }
        QuiverRep::new(json.dims, maps)
    }
}

impl From<&QuiverRep> for QuiverRepJson {
    fn from(rep: &QuiverRep) -> Self {
        QuiverRepJson {
            dims: rep.dims.clone(),
            maps: rep
                .maps
                .iter()
                .map(|m| {
                    (0..m.rows())
                        .map(|r| m.row(r).iter().map(|x| u8::from(x.0)).collect())
                        .collect()
                })
                .collect(),
        }
    }
}

impl QuiverRep {
    pub fn from_json(text: &str) -> Result<Self> {
        let json: QuiverRepJson =
            serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
        json.try_into()
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(&QuiverRepJson::from(self)).expect("serialisable")
    }
}

/// The indecomposable `C^{k,l}` placed in a grading shift.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct IntervalModule {
    pub k: usize,
    pub l: usize,
    pub shift: i32,
}

impl IntervalModule {
    pub fn contains_vertex(&self, i: usize) -> bool {
        self.k < i && i <= self.l
    }
}

/// A multiset of interval modules.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Barcode {
    bars: BTreeMap<IntervalModule, usize>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
struct BarJson {
    k: usize,
    l: usize,
    shift: i32,
    mult: usize,
}

impl Barcode {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn insert(&mut self, bar: IntervalModule, mult: usize) {
        if mult > 0 {
            *self.bars.entry(bar).or_insert(0) += mult;
        }
    }

    pub fn multiplicity(&self, bar: &IntervalModule) -> usize {
        self.bars.get(bar).copied().unwrap_or(0)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&IntervalModule, &usize)> {
        self.bars.iter()
    }

    /// Number of bars counted with multiplicity.
    pub fn len(&self) -> usize {
        self.bars.values().sum()
    }

    pub fn is_empty(&self) -> bool {
        self.bars.is_empty()
    }

    /// Multiset union.
    pub fn union(&self, other: &Barcode) -> Barcode {
        let mut out = self.clone();
        for (bar, &mult) in &other.bars {
            out.insert(*bar, mult);
        }
        out
    }

    /// Whether `(k, l)` occurs in any shift.
    pub fn contains_interval(&self, k: usize, l: usize) -> bool {
        self.bars.keys().any(|b| b.k == k && b.l == l)
    }

    /// Dimension at vertex `i` summed over all shifts.
    pub fn dim_at(&self, i: usize) -> usize {
        self.bars
            .iter()
            .filter(|(b, _)| b.contains_vertex(i))
            .map(|(_, &mult)| mult)
            .sum()
    }

    /// The direct sum of the bars with the given shift, as a representation.
    pub fn reconstruct(&self, m: usize, shift: i32) -> Result<QuiverRep> {
        let mut rep = QuiverRep::zero(m);
        for (bar, &mult) in &self.bars {
            if bar.shift != shift {
                continue;
            }
            let piece = QuiverRep::interval(m, bar.k, bar.l)?;
            for _ in 0..mult {
                rep = rep.direct_sum(&piece)?;
            }
        }
        Ok(rep)
    }

    pub fn to_json(&self) -> String {
        let bars: Vec<BarJson> = self
            .bars
            .iter()
            .map(|(b, &mult)| BarJson {
                k: b.k,
                l: b.l,
                shift: b.shift,
                mult,
            })
            .collect();
        serde_json::to_string(&bars).expect("serialisable")
    }

    pub fn from_json(text: &str) -> Result<Barcode> {
        let bars: Vec<BarJson> =
            serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
        let mut out = Barcode::new();
        for b in bars {
            out.insert(
                IntervalModule {
                    k: b.k,
                    l: b.l,
                    shift: b.shift,
                },
                b.mult,
            );
        }
        Ok(out)
    }
}

/// Interval decomposition of `rep`, all bars in shift 0.
pub fn decompose(rep: &QuiverRep) -> Barcode {
    decompose_shifted(rep, 0)
}

pub fn decompose_shifted(rep: &QuiverRep, shift: i32) -> Barcode {
    let m = rep.m();
    let table = rep.rank_table();
    // 1-based r(a, b) with zero padding outside 1..=m.
    let r = |a: usize, b: usize| -> i64 {
        if a == 0 || b > m || a > b {
            0
        } else {
            table[a - 1][b - 1] as i64
        }
    };
    let mut barcode = Barcode::new();
    for a in 1..=m {
        for b in a..=m {
            let mult = r(a, b) - r(a - 1, b) - r(a, b + 1) + r(a - 1, b + 1);
            debug_assert!(mult >= 0, "negative multiplicity");
            barcode.insert(
                IntervalModule {
                    k: a - 1,
                    l: b,
                    shift,
                },
                mult as usize,
            );
        }
    }
    barcode
}
