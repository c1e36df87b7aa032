//! Twisted complexes over the directed `(A_m)` category.
//!
//! Objects `V_1, …, V_m`; `hom(V_i, V_i)` is spanned by the unit `e_i` in
//! degree 0, `hom(V_i, V_{i+1})` by `f_i` in degree 1, and everything else
//! vanishes. The only nonzero products are the unit laws, so any composite
//! whose vertex step exceeds one is zero.
//!
//! A summand `(v, d)` is one copy of `V_v` whose coefficient sits in degree
//! `d`. A component from `(v_x, d_x)` to `(v_y, d_y)` has total degree
//! `deg(label) + d_y − d_x`, where the label is fixed by `v_y − v_x`.
//! Matrices are indexed `[target][source]`.

use std::fmt;

use super::field::{Field, Gf2, Matrix};
use super::rep::{decompose_shifted, Barcode, IntervalModule, QuiverRep};
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Summand {
    pub vertex: usize,
    pub degree: i32,
}

/// Morphism label between two vertices, if the hom space is nonzero.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Label {
    Unit,
    Arrow,
}

impl Label {
    pub fn between(source: usize, target: usize) -> Option<Label> {
        if target == source {
            Some(Label::Unit)
        } else if target == source + 1 {
            Some(Label::Arrow)
        } else {
            None
        }
    }

    pub fn degree(self) -> i32 {
        match self {
            Label::Unit => 0,
            Label::Arrow => 1,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Violation {
    VertexOutOfRange { index: usize, vertex: usize },
    NoHomSpace { source: usize, target: usize },
    WrongDegree { source: usize, target: usize, degree: i32 },
    SquareNonzero { source: usize, target: usize },
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::VertexOutOfRange { index, vertex } => {
                write!(f, "summand {index} sits at vertex {vertex}, outside 1..=m")
            }
            Violation::NoHomSpace { source, target } => {
                write!(f, "component {source} -> {target} has no hom space")
            }
            Violation::WrongDegree {
                source,
                target,
                degree,
            } => write!(f, "component {source} -> {target} has total degree {degree}, not 1"),
            Violation::SquareNonzero { source, target } => {
                write!(f, "d^2 is nonzero on {source} -> {target}")
            }
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TwistedComplex {
    m: usize,
    summands: Vec<Summand>,
    differential: Matrix<Gf2>,
}

/// `a · b` for component matrices, dropping composites that land in a
/// vanishing hom space. `a` is `[z][y]`, `b` is `[y][x]`.
fn compose(
    a: &Matrix<Gf2>,
    b: &Matrix<Gf2>,
    z_vertices: &[usize],
    x_vertices: &[usize],
) -> Matrix<Gf2> {
    let mut out = a.mul(b);
    for (z, &vz) in z_vertices.iter().enumerate() {
        for (x, &vx) in x_vertices.iter().enumerate() {
            if Label::between(vx, vz).is_none() {
                out.set(z, x, Gf2::zero());
            }
        }
    }
    out
}

impl TwistedComplex {
    /// Checks shapes only; use [`TwistedComplex::validate`] for the rest.
    pub fn new(m: usize, summands: Vec<Summand>, differential: Matrix<Gf2>) -> Result<Self> {
        let s = summands.len();
        if differential.rows() != s || differential.cols() != s {
            return Err(Error::Shape(format!(
                "{s} summands need a {s}x{s} differential, got {}x{}",
                differential.rows(),
                differential.cols()
            )));
        }
        Ok(TwistedComplex {
            m,
            summands,
            differential,
        })
    }

    pub fn zero(m: usize) -> Self {
        TwistedComplex {
            m,
            summands: Vec::new(),
            differential: Matrix::zeros(0, 0),
        }
    }

    /// `V_vertex` with its coefficient in `degree`.
    pub fn generator(m: usize, vertex: usize, degree: i32) -> Result<Self> {
        if vertex == 0 || vertex > m {
            return Err(Error::IndexOutOfRange {
                index: vertex,
                max: m,
            });
        }
        Ok(TwistedComplex {
            m,
            summands: vec![Summand { vertex, degree }],
            differential: Matrix::zeros(1, 1),
        })
    }

    /// `W_i ⊗ V_i` in one degree, with `ρ_i ⊗ f_i` as differential.
    pub fn from_quiver_rep(rep: &QuiverRep, degree: i32) -> Self {
        let m = rep.m();
        let mut summands = Vec::new();
        let mut offsets = Vec::with_capacity(m);
        for (i, &d) in rep.dims().iter().enumerate() {
            offsets.push(summands.len());
            summands.extend((0..d).map(|_| Summand {
                vertex: i + 1,
                degree,
            }));
        }
        let mut diff = Matrix::zeros(summands.len(), summands.len());
        for (i, map) in rep.maps().iter().enumerate() {
            for r in 0..map.rows() {
                for c in 0..map.cols() {
                    diff.set(offsets[i + 1] + r, offsets[i] + c, map.get(r, c));
                }
            }
        }
        TwistedComplex {
            m,
            summands,
            differential: diff,
        }
    }

    /// The complex realising `C^{k,l}`.
    pub fn interval(m: usize, k: usize, l: usize) -> Result<Self> {
        Ok(Self::from_quiver_rep(&QuiverRep::interval(m, k, l)?, 0))
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn summands(&self) -> &[Summand] {
        &self.summands
    }

    pub fn differential(&self) -> &Matrix<Gf2> {
        &self.differential
    }

    pub fn len(&self) -> usize {
        self.summands.len()
    }

    pub fn is_empty(&self) -> bool {
        self.summands.is_empty()
    }

    fn vertices(&self) -> Vec<usize> {
        self.summands.iter().map(|s| s.vertex).collect()
    }

    pub fn validate(&self) -> Vec<Violation> {
        let mut out = Vec::new();
        for (index, s) in self.summands.iter().enumerate() {
            if s.vertex == 0 || s.vertex > self.m {
                out.push(Violation::VertexOutOfRange {
                    index,
                    vertex: s.vertex,
                });
            }
        }
        let n = self.len();
        for y in 0..n {
            for x in 0..n {
                if self.differential.get(y, x).is_zero() {
                    continue;
                }
                let (sx, sy) = (self.summands[x], self.summands[y]);
                match Label::between(sx.vertex, sy.vertex) {
                    None => out.push(Violation::NoHomSpace {
                        source: x,
                        target: y,
                    }),
                    Some(label) => {
                        let degree = label.degree() + sy.degree - sx.degree;
                        if degree != 1 {
                            out.push(Violation::WrongDegree {
                                source: x,
                                target: y,
                                degree,
                            });
                        }
                    }
                }
            }
        }
        let v = self.vertices();
        let square = compose(&self.differential, &self.differential, &v, &v);
        for y in 0..n {
            for x in 0..n {
                if !square.get(y, x).is_zero() {
                    out.push(Violation::SquareNonzero {
                        source: x,
                        target: y,
                    });
                }
            }
        }
        out
    }

    pub fn is_valid(&self) -> bool {
        self.validate().is_empty()
    }

    fn unit_entry(&self) -> Option<(usize, usize)> {
        let n = self.len();
        (0..n).find_map(|x| {
            (0..n).find(|&y| {
                self.summands[x].vertex == self.summands[y].vertex
                    && !self.differential.get(y, x).is_zero()
            })
            .map(|y| (x, y))
        })
    }

    /// Cancels unit-labelled components by Gaussian elimination until only
    /// arrow-labelled components remain.
    pub fn reduce(&self) -> TwistedComplex {
        let mut cur = self.clone();
        while let Some((a, b)) = cur.unit_entry() {
            cur = cur.eliminate(a, b);
        }
        cur
    }

    /// Removes the pair joined by the invertible component `a → b`.
    fn eliminate(&self, a: usize, b: usize) -> TwistedComplex {
        let n = self.len();
        let d = &self.differential;
        let keep: Vec<usize> = (0..n).filter(|&i| i != a && i != b).collect();
        let mut diff = Matrix::zeros(keep.len(), keep.len());
        for (ny, &y) in keep.iter().enumerate() {
            for (nx, &x) in keep.iter().enumerate() {
                let mut v = d.get(y, x);
                let vy = self.summands[y].vertex;
                let vx = self.summands[x].vertex;
                if Label::between(vx, vy).is_some() {
                    // over two elements the inverse of the pivot is itself
                    v = v.sub(d.get(y, a).mul(d.get(b, x)));
                }
                diff.set(ny, nx, v);
            }
        }
        TwistedComplex {
            m: self.m,
            summands: keep.iter().map(|&i| self.summands[i]).collect(),
            differential: diff,
        }
    }

    pub fn is_reduced(&self) -> bool {
        self.unit_entry().is_none()
    }

    /// One representation per occupied degree, in increasing degree order.
    pub fn split_by_degree(&self) -> Result<Vec<(i32, QuiverRep)>> {
        if !self.is_reduced() {
            return Err(Error::Unreduced);
        }
        let mut degrees: Vec<i32> = self.summands.iter().map(|s| s.degree).collect();
        degrees.sort_unstable();
        degrees.dedup();
        let mut out = Vec::with_capacity(degrees.len());
        for deg in degrees {
            // positions of this degree's summands, grouped by vertex
            let mut at_vertex: Vec<Vec<usize>> = vec![Vec::new(); self.m];
            for (i, s) in self.summands.iter().enumerate() {
                if s.degree == deg {
                    at_vertex[s.vertex - 1].push(i);
                }
            }
            let dims = at_vertex.iter().map(Vec::len).collect();
            let maps = (1..self.m)
                .map(|v| {
                    let (src, tgt) = (&at_vertex[v - 1], &at_vertex[v]);
                    let mut map = Matrix::zeros(tgt.len(), src.len());
                    for (r, &y) in tgt.iter().enumerate() {
                        for (c, &x) in src.iter().enumerate() {
                            map.set(r, c, self.differential.get(y, x));
                        }
                    }
                    map
                })
                .collect();
            out.push((deg, QuiverRep::new(dims, maps)?));
        }
        Ok(out)
    }

    /// Interval decomposition of the reduced complex, shifts being degrees.
    pub fn barcode(&self) -> Result<Barcode> {
        let mut out = Barcode::new();
        for (deg, rep) in self.reduce().split_by_degree()? {
            out = out.union(&decompose_shifted(&rep, deg));
        }
        Ok(out)
    }

    pub fn direct_sum(&self, other: &TwistedComplex) -> Result<TwistedComplex> {
        if self.m != other.m {
            return Err(Error::RankMismatch {
                left: self.m,
                right: other.m,
            });
        }
        let mut summands = self.summands.clone();
        summands.extend_from_slice(&other.summands);
        Ok(TwistedComplex {
            m: self.m,
            summands,
            differential: self.differential.direct_sum(&other.differential),
        })
    }

    /// Every coefficient degree moved by `by`.
    pub fn shifted(&self, by: i32) -> TwistedComplex {
        let mut out = self.clone();
        for s in &mut out.summands {
            s.degree += by;
        }
        out
    }
}

/// A morphism of twisted complexes, components indexed `[target][source]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TwistedMorphism {
    pub source: TwistedComplex,
    pub target: TwistedComplex,
    pub components: Matrix<Gf2>,
}

impl TwistedMorphism {
    pub fn new(
        source: TwistedComplex,
        target: TwistedComplex,
        components: Matrix<Gf2>,
    ) -> Result<Self> {
        if components.rows() != target.len() || components.cols() != source.len() {
            return Err(Error::Shape(format!(
                "morphism must be {}x{}",
                target.len(),
                source.len()
            )));
        }
        Ok(TwistedMorphism {
            source,
            target,
            components,
        })
    }

    pub fn zero(source: TwistedComplex, target: TwistedComplex) -> Self {
        let components = Matrix::zeros(target.len(), source.len());
        TwistedMorphism {
            source,
            target,
            components,
        }
    }

    pub fn identity(c: TwistedComplex) -> Self {
        let components = Matrix::identity(c.len());
        TwistedMorphism {
            source: c.clone(),
            target: c,
            components,
        }
    }

    /// First nonzero component that is not of degree 0.
    pub fn degree_violation(&self) -> Option<(usize, usize)> {
        for y in 0..self.target.len() {
            for x in 0..self.source.len() {
                if self.components.get(y, x).is_zero() {
                    continue;
                }
                let (sx, sy) = (self.source.summands[x], self.target.summands[y]);
                let ok = Label::between(sx.vertex, sy.vertex)
                    .is_some_and(|l| l.degree() + sy.degree - sx.degree == 0);
                if !ok {
                    return Some((x, y));
                }
            }
        }
        None
    }

    /// `∂_Y F + F ∂_X = 0`.
    pub fn is_closed(&self) -> bool {
        let vx = self.source.vertices();
        let vy = self.target.vertices();
        let left = compose(&self.target.differential, &self.components, &vy, &vx);
        let right = compose(&self.components, &self.source.differential, &vy, &vx);
        (0..vy.len()).all(|y| (0..vx.len()).all(|x| left.get(y, x) == right.get(y, x)))
    }
}

/// `Cone(F) = X[1] ⊕ Y` with differential `[[∂_X, 0], [F, ∂_Y]]`.
pub fn cone(f: &TwistedMorphism) -> Result<TwistedComplex> {
    if let Some((source_index, target_index)) = f.degree_violation() {
        return Err(Error::WrongDegree {
            source_index,
            target_index,
        });
    }
    if !f.is_closed() {
        return Err(Error::NotClosed);
    }
    let (x, y) = (&f.source, &f.target);
    if x.m != y.m {
        return Err(Error::RankMismatch {
            left: x.m,
            right: y.m,
        });
    }
    let (nx, ny) = (x.len(), y.len());
    let mut summands = x.shifted(-1).summands;
    summands.extend_from_slice(&y.summands);
    let mut diff = x.differential.direct_sum(&y.differential);
    for r in 0..ny {
        for c in 0..nx {
            diff.set(nx + r, c, f.components.get(r, c));
        }
    }
    TwistedComplex::new(x.m, summands, diff)
}

/// The evaluation map `hom(V_j, Y) ⊗ V_j → Y`.
pub fn evaluation(j: usize, y: &TwistedComplex) -> Result<TwistedMorphism> {
    if j == 0 || j > y.m {
        return Err(Error::IndexOutOfRange { index: j, max: y.m });
    }
    // one basis element of hom(V_j, Y) per summand reachable from V_j
    let reach: Vec<(usize, Label)> = y
        .summands
        .iter()
        .enumerate()
        .filter_map(|(a, s)| Label::between(j, s.vertex).map(|l| (a, l)))
        .collect();
    let summands: Vec<Summand> = reach
        .iter()
        .map(|&(a, l)| Summand {
            vertex: j,
            degree: y.summands[a].degree + l.degree(),
        })
        .collect();
    let h = reach.len();
    let mut diff = Matrix::zeros(h, h);
    for (q, &(b, _)) in reach.iter().enumerate() {
        for (p, &(a, _)) in reach.iter().enumerate() {
            diff.set(q, p, y.differential.get(b, a));
        }
    }
    let source = TwistedComplex::new(y.m, summands, diff)?;
    let mut comps = Matrix::zeros(y.len(), h);
    for (p, &(a, _)) in reach.iter().enumerate() {
        comps.set(a, p, Gf2::one());
    }
    TwistedMorphism::new(source, y.clone(), comps)
}

/// `T_{V_j}(Y)`.
pub fn twist(j: usize, y: &TwistedComplex) -> Result<TwistedComplex> {
    cone(&evaluation(j, y)?)
}

/// `T_{V_{k+1}} ⋯ T_{V_{l−1}}(V_l)`, unreduced.
pub fn iterated_twist(m: usize, k: usize, l: usize) -> Result<TwistedComplex> {
    if k >= l || l > m {
        return Err(Error::InvalidChord { k, l, m });
    }
    let mut y = TwistedComplex::generator(m, l, 0)?;
    for j in (k + 1..l).rev() {
        y = twist(j, &y)?;
    }
    Ok(y)
}

/// Whether `target`'s interval occurs, in any shift, in the decomposition.
pub fn summand_test(c: &TwistedComplex, target: &IntervalModule) -> Result<bool> {
    Ok(c.barcode()?.contains_interval(target.k, target.l))
}
