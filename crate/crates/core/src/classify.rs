//! The verdict for a choice of last vanishing arc.
//!
//! The total space is the standard cotangent bundle exactly when the arc is
//! isotopic to a straight chord; otherwise the structure is exotic. The
//! smooth type is decided separately: always standard for even `n`, and for
//! odd `n` standard iff the homology class of the last cycle is an interval.

use rand::Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::arcs::{match_segment, Arc, ArcSpec, SegmentChord};
use crate::braid::{BraidWord, Handedness};
use crate::error::{Error, Result};
use crate::homology::{arc_class, HomologyClass, SignConvention};
use crate::lattice::{diffeo_type, self_intersection, DiffeoType};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum SymplecticType {
    StandardCotangent { chord: SegmentChord },
    Exotic,
}

impl SymplecticType {
    pub fn is_standard(&self) -> bool {
        matches!(self, SymplecticType::StandardCotangent { .. })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassificationReport {
    pub m: usize,
    pub n: i64,
    pub arc: ArcSpec,
    pub handedness: Handedness,
    pub half_twist_nf: String,
    pub matched_segment: Option<SegmentChord>,
    pub homology_class: Option<HomologyClass>,
    pub self_intersection: Option<i64>,
    pub diffeo: DiffeoType,
    pub symplectic: SymplecticType,
    pub reason: String,
}

impl ClassificationReport {
    /// Multi-line human-readable summary.
    pub fn to_text(&self) -> String {
        let opt = |o: Option<String>| o.unwrap_or_else(|| "none".into());
        let symplectic = match self.symplectic {
            SymplecticType::StandardCotangent { chord } => format!("standard {chord}"),
            SymplecticType::Exotic => "exotic".into(),
        };
        let diffeo = match self.diffeo {
            DiffeoType::StandardCotangent => "standard".into(),
            DiffeoType::DistinguishedByPairing { self_intersection } => {
                format!("distinguished by pairing (x.x = {self_intersection})")
            }
        };
        [
            format!("m: {}", self.m),
            format!("n: {}", self.n),
            format!(
                "arc: base={},{}; conj=\"{}\"",
                self.arc.base[0],
                self.arc.base[1],
                self.arc
                    .conjugator
                    .iter()
                    .map(i32::to_string)
                    .collect::<Vec<_>>()
                    .join(" ")
            ),
            format!("half-twist: {}", self.half_twist_nf),
            format!("matched segment: {}", opt(self.matched_segment.map(|c| c.to_string()))),
            format!(
                "homology class: {}",
                opt(self.homology_class.as_ref().map(|c| c.to_string()))
            ),
            format!(
                "self-intersection: {}",
                opt(self.self_intersection.map(|x| x.to_string()))
            ),
            format!("diffeo: {diffeo}"),
            format!("symplectic: {symplectic}"),
            format!("reason: {}", self.reason),
        ]
        .join("\n")
    }
}

fn check_dimensions(m: usize, n: i64) -> Result<()> {
    if n == 1 {
        return Err(Error::DimensionOne);
    }
    if n < 2 {
        return Err(Error::DimensionTooSmall(n));
    }
    if m < 2 {
        return Err(Error::InvalidRank { m, min: 2 });
    }
    Ok(())
}

pub fn classify(m: usize, n: i64, arc: &Arc) -> Result<ClassificationReport> {
    check_dimensions(m, n)?;
    if arc.m() != m {
        return Err(Error::RankMismatch {
            left: arc.m(),
            right: m,
        });
    }
    let matched = match_segment(arc);
    let (homology_class, self_int) = if n % 2 == 1 {
        let class = arc_class(arc, SignConvention::for_dimension(n)?);
        let x = self_intersection(n, &class)?;
        (Some(class), Some(x))
    } else {
        (None, None)
    };
    let diffeo = diffeo_type(n, homology_class.as_ref())?;
    let symplectic = match matched {
        Some(chord) => SymplecticType::StandardCotangent { chord },
        None => SymplecticType::Exotic,
    };
    let reason = match (matched, diffeo) {
        (Some(c), _) => format!("arc is isotopic to the straight segment {c}"),
        (None, DiffeoType::StandardCotangent) => {
            "arc is not isotopic to any straight segment; smooth type is standard".into()
        }
        (None, DiffeoType::DistinguishedByPairing { .. }) => {
            "arc is not isotopic to any straight segment; the intersection pairing already \
             differs from the standard one"
                .into()
        }
    };
    Ok(ClassificationReport {
        m,
        n,
        arc: ArcSpec::from(arc),
        handedness: arc.handedness(),
        half_twist_nf: arc.key().to_string(),
        matched_segment: matched,
        homology_class,
        self_intersection: self_int,
        diffeo,
        symplectic,
        reason,
    })
}

/// Batch form of [`classify`], in input order.
pub fn classify_all(m: usize, n: i64, arcs: &[Arc]) -> Result<Vec<ClassificationReport>> {
    arcs.par_iter().map(|a| classify(m, n, a)).collect()
}

/// Number of choices giving the standard structure, `m(m+1)/2`.
pub fn standard_count(m: usize) -> usize {
    m * (m + 1) / 2
}

/// A random arc: uniform base chord, conjugator of up to `max_len` letters.
pub fn random_arc<R: Rng + ?Sized>(m: usize, max_len: usize, rng: &mut R) -> Result<Arc> {
    if m < 1 {
        return Err(Error::InvalidRank { m, min: 1 });
    }
    let chords = SegmentChord::all(m);
    let base = chords[rng.gen_range(0..chords.len())];
    let len = rng.gen_range(0..=max_len);
    let letters = (0..len)
        .map(|_| {
            let g = rng.gen_range(1..=m as i32);
            if rng.gen_bool(0.5) {
                g
            } else {
                -g
            }
        })
        .collect();
    crate::arcs::make_arc(m, base, BraidWord::new(m + 1, letters)?)
}
