//! Intersection arithmetic on the total space.
//!
//! `H_{n+1}(E, M)` is generated by the thimbles `Δ_1, …, Δ_{m+1}` and carries
//! the non-symmetric linking pairing `∘`. The generator `x` of
//! `H_{n+1}(E) ≅ Z` maps to `Δ_{m+1} − Σ a_i Δ_i`, where `a` is the class of
//! the last vanishing cycle in the basis of the first `m`.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::homology::{intersection_matrix, minus_one_pow, pairing, HomologyClass, SignConvention};

/// Thimble lattice for odd `n`, with the last vanishing cycle's class.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ThimbleLattice {
    m: usize,
    n: i64,
    sigma: i64,
    /// `(m+1) × (m+1)` intersection numbers of the vanishing cycles.
    cycle_pairing: Vec<Vec<i64>>,
}

/// `σ = (-1)^{(n+1)(n+2)/2}`.
pub fn thimble_sign(n: i64) -> i64 {
    minus_one_pow((n + 1) * (n + 2) / 2)
}

impl ThimbleLattice {
    pub fn new(n: i64, last_cycle: &HomologyClass) -> Result<Self> {
        let conv = SignConvention::for_dimension(n)?;
        let m = last_cycle.rank();
        let b = intersection_matrix(m, conv)?;
        let a = last_cycle.coeffs();
        let mut cycles: Vec<Vec<i64>> = (1..=m)
            .map(|i| HomologyClass::basis(m, i).coeffs().to_vec())
            .collect();
        cycles.push(a.to_vec());
        let cycle_pairing = cycles
            .iter()
            .map(|x| cycles.iter().map(|y| pairing(&b, x, y)).collect())
            .collect();
        Ok(ThimbleLattice {
            m,
            n,
            sigma: thimble_sign(n),
            cycle_pairing,
        })
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn n(&self) -> i64 {
        self.n
    }

    pub fn sigma(&self) -> i64 {
        self.sigma
    }

    /// `Δ_i ∘ Δ_j` for `1 ≤ i, j ≤ m + 1`.
    pub fn linking_pairing(&self, i: usize, j: usize) -> Result<i64> {
        let max = self.m + 1;
        for idx in [i, j] {
            if idx < 1 || idx > max {
                return Err(Error::IndexOutOfRange { index: idx, max });
            }
        }
        Ok(match i.cmp(&j) {
            std::cmp::Ordering::Equal => self.sigma,
            std::cmp::Ordering::Less => {
                minus_one_pow(self.n + 1) * self.cycle_pairing[i - 1][j - 1]
            }
            std::cmp::Ordering::Greater => 0,
        })
    }

    /// `c ∘ c` for `c = Σ c_i Δ_i`, straight from the linking pairing.
    pub fn pair_thimble_combination(&self, c: &[i64]) -> i64 {
        assert_eq!(c.len(), self.m + 1);
        let mut total = 0;
        for i in 0..=self.m {
            for j in 0..=self.m {
                let p = self.linking_pairing(i + 1, j + 1).expect("in range");
                total += c[i] * c[j] * p;
            }
        }
        total
    }
}

/// Self-intersection `x · x = σ (1 − Σ a_i a_{i−1} + Σ a_i²)`.
pub fn self_intersection(n: i64, a: &HomologyClass) -> Result<i64> {
    SignConvention::for_dimension(n)?;
    let c = a.coeffs();
    let squares: i64 = c.iter().map(|x| x * x).sum();
    let adjacent: i64 = c.windows(2).map(|w| w[0] * w[1]).sum();
    Ok(thimble_sign(n) * (1 - adjacent + squares))
}

/// The `(A_m)` form `2 Σ a_i² − Σ a_i a_{i−1} − Σ a_i a_{i+1}` with
/// `a_0 = a_{m+1} = 0`.
pub fn am_quadratic(a: &HomologyClass) -> i64 {
    am_quadratic_raw(a.coeffs())
}

pub fn am_quadratic_raw(c: &[i64]) -> i64 {
    let squares: i64 = c.iter().map(|x| x * x).sum();
    let adjacent: i64 = c.windows(2).map(|w| w[0] * w[1]).sum();
    2 * squares - 2 * adjacent
}

/// `(k, l)` when `a = ±(e_{k+1} + ⋯ + e_l)`.
pub fn is_interval_vector(a: &HomologyClass) -> Option<(usize, usize)> {
    interval_of(a.coeffs())
}

pub fn interval_of(c: &[i64]) -> Option<(usize, usize)> {
    let first = c.iter().position(|&x| x != 0)?;
    let sign = c[first];
    if sign != 1 && sign != -1 {
        return None;
    }
    let len = c[first..].iter().take_while(|&&x| x == sign).count();
    let end = first + len;
    c[end..].iter().all(|&x| x == 0).then_some((first, end))
}

/// Smooth type of the total space.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum DiffeoType {
    StandardCotangent,
    DistinguishedByPairing { self_intersection: i64 },
}

/// Even `n`: always standard. Odd `n`: standard iff `a` is an interval.
pub fn diffeo_type(n: i64, a: Option<&HomologyClass>) -> Result<DiffeoType> {
    if n == 1 {
        return Err(Error::DimensionOne);
    }
    if n < 2 {
        return Err(Error::DimensionTooSmall(n));
    }
    if n % 2 == 0 {
        return Ok(DiffeoType::StandardCotangent);
    }
    let a = a.ok_or_else(|| Error::Parse("odd n needs the homology class".into()))?;
    if is_interval_vector(a).is_some() {
        Ok(DiffeoType::StandardCotangent)
    } else {
        Ok(DiffeoType::DistinguishedByPairing {
            self_intersection: self_intersection(n, a)?,
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn class(c: &[i64]) -> HomologyClass {
        HomologyClass::new(c.to_vec())
    }

    #[test]
    fn sigma_values() {
        assert_eq!(thimble_sign(3), 1); // (4·5)/2 = 10
        assert_eq!(thimble_sign(5), -1); // (6·7)/2 = 21
        assert_eq!(thimble_sign(7), 1); // 36
    }

    #[test]
    fn linking_pairing_examples() {
        let lat = ThimbleLattice::new(3, &class(&[1, 1, 0])).unwrap();
        for i in 1..=4 {
            assert_eq!(lat.linking_pairing(i, i).unwrap(), lat.sigma());
            for j in 1..i {
                assert_eq!(lat.linking_pairing(i, j).unwrap(), 0);
            }
        }
        // (-1)^4 · ε with ε = -1 for n = 3
        assert_eq!(lat.linking_pairing(1, 2).unwrap(), -1);
        assert_eq!(lat.linking_pairing(1, 3).unwrap(), 0);
        assert!(lat.linking_pairing(0, 1).is_err());
        assert!(lat.linking_pairing(1, 5).is_err());
    }

    #[test]
    fn self_intersection_examples() {
        for n in [3, 5] {
            let s = thimble_sign(n);
            assert_eq!(self_intersection(n, &class(&[0, 1, 0])).unwrap(), 2 * s);
            assert_eq!(self_intersection(n, &class(&[0, 1, 1, 1])).unwrap(), 2 * s);
            assert_eq!(self_intersection(n, &class(&[1, 0, 1])).unwrap(), 3 * s);
        }
        assert!(self_intersection(4, &class(&[1])).is_err());
    }

    #[test]
    fn self_intersection_matches_linking_pairing() {
        let samples: [&[i64]; 5] = [&[1, 0, 1], &[2, 1], &[1, -1, 3, 0], &[0, 1, 1], &[3, -2, 1]];
        for n in [3, 5, 7] {
            for a in samples {
                let a = class(a);
                let lat = ThimbleLattice::new(n, &a).unwrap();
                let mut c: Vec<i64> = a.coeffs().iter().map(|x| -x).collect();
                c.push(1);
                assert_eq!(lat.pair_thimble_combination(&c), self_intersection(n, &a).unwrap());
            }
        }
    }

    #[test]
    fn am_quadratic_examples() {
        assert_eq!(am_quadratic(&class(&[0, 0, 0])), 0);
        assert_eq!(am_quadratic(&class(&[0, 1, 1, 0])), 2);
        assert_eq!(am_quadratic(&class(&[1, 0, 1])), 4);
    }

    #[test]
    fn interval_examples() {
        assert_eq!(is_interval_vector(&class(&[0, 1, 1])), Some((1, 3)));
        assert_eq!(is_interval_vector(&class(&[1, 1, 1])), Some((0, 3)));
        assert_eq!(is_interval_vector(&class(&[1, 0, 1])), None);
        assert_eq!(is_interval_vector(&class(&[0, -1, -1])), Some((1, 3)));
        assert_eq!(is_interval_vector(&class(&[1, -1])), None);
        assert_eq!(is_interval_vector(&class(&[2])), None);
        assert_eq!(is_interval_vector(&class(&[0, 0])), None);
    }

    #[test]
    fn diffeo_examples() {
        assert_eq!(diffeo_type(4, None).unwrap(), DiffeoType::StandardCotangent);
        assert_eq!(
            diffeo_type(3, Some(&class(&[1, 1, 0]))).unwrap(),
            DiffeoType::StandardCotangent
        );
        assert_eq!(
            diffeo_type(3, Some(&class(&[1, 0, 1]))).unwrap(),
            DiffeoType::DistinguishedByPairing {
                self_intersection: 3 * thimble_sign(3)
            }
        );
        assert!(matches!(diffeo_type(1, None), Err(Error::DimensionOne)));
        assert!(diffeo_type(0, None).is_err());
        assert!(diffeo_type(3, None).is_err());
    }
}
