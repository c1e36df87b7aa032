//! Lawrence–Krammer representation with exact Laurent-polynomial entries.
//!
//! Faithful, and computed without any Garside machinery, so it serves as an
//! independent judge of braid equality.

use std::collections::BTreeMap;

/// Integer Laurent polynomial in `q` and `t`; keys are `(q exponent, t exponent)`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct Laurent(BTreeMap<(i32, i32), i128>);

impl Laurent {
    pub fn zero() -> Self {
        Laurent::default()
    }

    pub fn monomial(c: i128, q: i32, t: i32) -> Self {
        let mut map = BTreeMap::new();
        if c != 0 {
            map.insert((q, t), c);
        }
        Laurent(map)
    }

    pub fn one() -> Self {
        Self::monomial(1, 0, 0)
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    fn accumulate(&mut self, key: (i32, i32), c: i128) {
        let e = self.0.entry(key).or_insert(0);
        *e = e.checked_add(c).expect("coefficient overflow");
        if *e == 0 {
            self.0.remove(&key);
        }
    }

    pub fn add(&self, other: &Laurent) -> Laurent {
        let mut out = self.clone();
        for (&k, &c) in &other.0 {
            out.accumulate(k, c);
        }
        out
    }

    pub fn neg(&self) -> Laurent {
        Laurent(self.0.iter().map(|(&k, &c)| (k, -c)).collect())
    }

    pub fn sub(&self, other: &Laurent) -> Laurent {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Laurent) -> Laurent {
        let mut out = Laurent::zero();
        for (&(qa, ta), &ca) in &self.0 {
            for (&(qb, tb), &cb) in &other.0 {
                out.accumulate((qa + qb, ta + tb), ca.checked_mul(cb).expect("coefficient overflow"));
            }
        }
        out
    }

    /// `(c, q, t)` if this is `±q^a t^b`.
    pub fn as_unit(&self) -> Option<(i128, i32, i32)> {
        if self.0.len() != 1 {
            return None;
        }
        let (&(q, t), &c) = self.0.iter().next()?;
        (c == 1 || c == -1).then_some((c, q, t))
    }

    /// Division by a unit monomial.
    pub fn div_unit(&self, unit: (i128, i32, i32)) -> Laurent {
        let (c, q, t) = unit;
        Laurent(self.0.iter().map(|(&(a, b), &x)| ((a - q, b - t), x * c)).collect())
    }
}

pub type LMatrix = Vec<Vec<Laurent>>;

pub fn identity(n: usize) -> LMatrix {
    (0..n)
        .map(|i| (0..n).map(|j| if i == j { Laurent::one() } else { Laurent::zero() }).collect())
        .collect()
}

pub fn mat_mul(a: &LMatrix, b: &LMatrix) -> LMatrix {
    let n = a.len();
    let mut out = vec![vec![Laurent::zero(); n]; n];
    for i in 0..n {
        for k in 0..n {
            if a[i][k].is_zero() {
                continue;
            }
            for j in 0..n {
                if b[k][j].is_zero() {
                    continue;
                }
                out[i][j] = out[i][j].add(&a[i][k].mul(&b[k][j]));
            }
        }
    }
    out
}

fn minor(a: &LMatrix, row: usize, col: usize) -> LMatrix {
    a.iter()
        .enumerate()
        .filter(|&(i, _)| i != row)
        .map(|(_, r)| {
            r.iter()
                .enumerate()
                .filter(|&(j, _)| j != col)
                .map(|(_, x)| x.clone())
                .collect()
        })
        .collect()
}

/// Laplace expansion along the first row; fine for the small sizes used here.
pub fn det(a: &LMatrix) -> Laurent {
    match a.len() {
        0 => Laurent::one(),
        1 => a[0][0].clone(),
        _ => {
            let mut acc = Laurent::zero();
            for j in 0..a.len() {
                if a[0][j].is_zero() {
                    continue;
                }
                let term = a[0][j].mul(&det(&minor(a, 0, j)));
                acc = if j % 2 == 0 { acc.add(&term) } else { acc.sub(&term) };
            }
            acc
        }
    }
}

/// Inverse through the adjugate; the determinant must be a unit.
pub fn inverse(a: &LMatrix) -> LMatrix {
    let n = a.len();
    let unit = det(a).as_unit().expect("determinant is a unit monomial");
    let out: LMatrix = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| {
                    let c = det(&minor(a, j, i));
                    let c = if (i + j) % 2 == 0 { c } else { c.neg() };
                    c.div_unit(unit)
                })
                .collect()
        })
        .collect();
    debug_assert_eq!(mat_mul(a, &out), identity(n));
    out
}

/// The representation on `strands` strands, generator matrices precomputed.
pub struct LawrenceKrammer {
    strands: usize,
    pairs: Vec<(usize, usize)>,
    positive: Vec<LMatrix>,
    negative: Vec<LMatrix>,
}

impl LawrenceKrammer {
    pub fn new(strands: usize) -> Self {
        assert!(strands >= 2);
        let mut pairs = Vec::new();
        for i in 1..=strands {
            for j in i + 1..=strands {
                pairs.push((i, j));
            }
        }
        let mut lk = LawrenceKrammer {
            strands,
            pairs,
            positive: Vec::new(),
            negative: Vec::new(),
        };
        for k in 1..strands {
            let g = lk.generator(k);
            lk.negative.push(inverse(&g));
            lk.positive.push(g);
        }
        lk
    }

    pub fn dim(&self) -> usize {
        self.pairs.len()
    }

    fn index(&self, i: usize, j: usize) -> usize {
        self.pairs.iter().position(|&p| p == (i, j)).expect("basis pair")
    }

    /// Matrix of `σ_k`; column `x_{i,j}` holds the image of `x_{i,j}`.
    fn generator(&self, k: usize) -> LMatrix {
        let d = self.dim();
        let mut m = vec![vec![Laurent::zero(); d]; d];
        let q = |e: i32| Laurent::monomial(1, e, 0);
        let one = Laurent::one();
        let q_minus_1 = q(1).sub(&one);
        let one_minus_q = one.sub(&q(1));
        let kk = self.index(k, k + 1);
        for &(i, j) in &self.pairs {
            let col = self.index(i, j);
            let mut put = |row: usize, v: Laurent| m[row][col] = m[row][col].add(&v);
            if (i, j) == (k, k + 1) {
                put(kk, Laurent::monomial(1, 2, 1));
            } else if j == k && i < k {
                put(self.index(i, k), one_minus_q.clone());
                put(self.index(i, k + 1), q(1));
            } else if j == k + 1 && i < k {
                put(self.index(i, k), one.clone());
                let e = (k - i + 1) as i32;
                put(kk, Laurent::monomial(1, e, 1).mul(&q_minus_1));
            } else if i == k && j > k + 1 {
                put(kk, Laurent::monomial(1, 1, 1).mul(&q_minus_1));
                put(self.index(k + 1, j), q(1));
            } else if i == k + 1 && j > k + 1 {
                put(self.index(k, j), one.clone());
                put(self.index(k + 1, j), one_minus_q.clone());
            } else if i < k && j > k + 1 {
                put(col, one.clone());
                let e = (k - i) as i32;
                put(kk, Laurent::monomial(1, e, 1).mul(&q_minus_1).mul(&q_minus_1));
            } else {
                put(col, one.clone());
            }
        }
        m
    }

    pub fn strands(&self) -> usize {
        self.strands
    }

    /// Image of the word, letters multiplied left to right.
    pub fn image(&self, letters: &[i32]) -> LMatrix {
        letters.iter().fold(identity(self.dim()), |acc, &l| {
            let k = l.unsigned_abs() as usize - 1;
            let g = if l > 0 { &self.positive[k] } else { &self.negative[k] };
            mat_mul(&acc, g)
        })
    }

    pub fn equal(&self, u: &[i32], v: &[i32]) -> bool {
        self.image(u) == self.image(v)
    }
}
