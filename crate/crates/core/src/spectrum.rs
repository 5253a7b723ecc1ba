//! Multisets of real eigenvalues.

use std::fmt;

use serde::{Deserialize, Serialize};

/// Values closer than this are treated as one eigenvalue with multiplicity.
pub const CLUSTER_TOL: f64 = 1e-6;

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct Eigenvalue {
    pub value: f64,
    pub multiplicity: usize,
}

/// Sorted `(value, multiplicity)` pairs with strictly increasing values.
#[derive(Clone, Debug, Default, PartialEq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Spectrum {
    pairs: Vec<Eigenvalue>,
}

impl Spectrum {
    pub fn from_values(values: impl IntoIterator<Item = f64>) -> Self {
        Self::from_values_with_tol(values, CLUSTER_TOL)
    }

    /// Groups sorted values into chains whose consecutive gaps are at most `tol`;
    /// each chain becomes one eigenvalue at the chain's mean.
    pub fn from_values_with_tol(values: impl IntoIterator<Item = f64>, tol: f64) -> Self {
        Self::from_pairs_with_tol(values.into_iter().map(|v| (v, 1)), tol)
    }

    pub fn from_pairs(pairs: impl IntoIterator<Item = (f64, usize)>) -> Self {
        Self::from_pairs_with_tol(pairs, CLUSTER_TOL)
    }

    pub fn from_pairs_with_tol(pairs: impl IntoIterator<Item = (f64, usize)>, tol: f64) -> Self {
        let mut items: Vec<(f64, usize)> = pairs.into_iter().filter(|&(_, m)| m > 0).collect();
        items.sort_by(|a, b| a.0.total_cmp(&b.0));
        let mut out: Vec<Eigenvalue> = Vec::new();
        let mut last = f64::NEG_INFINITY;
        let mut weighted = 0.0;
        for (v, m) in items {
            match out.last_mut() {
                Some(e) if v - last <= tol => {
                    weighted += v * m as f64;
                    e.multiplicity += m;
                    e.value = weighted / e.multiplicity as f64;
                }
                _ => {
                    weighted = v * m as f64;
                    out.push(Eigenvalue { value: v, multiplicity: m });
                }
            }
            last = v;
        }
        Spectrum { pairs: out }
    }

    pub fn pairs(&self) -> &[Eigenvalue] {
        &self.pairs
    }

    /// Total multiplicity, i.e. the order of the matrix.
    pub fn total(&self) -> usize {
        self.pairs.iter().map(|e| e.multiplicity).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.pairs.is_empty()
    }

    /// All eigenvalues repeated by multiplicity, ascending.
    pub fn expand(&self) -> Vec<f64> {
        self.pairs
            .iter()
            .flat_map(|e| std::iter::repeat_n(e.value, e.multiplicity))
            .collect()
    }

    pub fn union(&self, other: &Spectrum) -> Spectrum {
        Spectrum::from_pairs(
            self.pairs.iter().chain(&other.pairs).map(|e| (e.value, e.multiplicity)),
        )
    }

    /// Multiplicity of the eigenvalue within `tol` of `x` (0 if absent).
    pub fn multiplicity_of(&self, x: f64, tol: f64) -> usize {
        self.pairs
            .iter()
            .filter(|e| (e.value - x).abs() <= tol)
            .map(|e| e.multiplicity)
            .sum()
    }

    pub fn sum(&self) -> f64 {
        self.pairs.iter().map(|e| e.value * e.multiplicity as f64).sum()
    }

    pub fn sum_squares(&self) -> f64 {
        self.pairs.iter().map(|e| e.value * e.value * e.multiplicity as f64).sum()
    }

    pub fn min(&self) -> Option<f64> {
        self.pairs.first().map(|e| e.value)
    }

    /// Same total multiplicity and sorted expansions agreeing entrywise within `tol`.
    pub fn approx_eq(&self, other: &Spectrum, tol: f64) -> bool {
        self.max_deviation(other).is_some_and(|d| d <= tol)
    }

    /// Largest entrywise gap between sorted expansions, `None` when orders differ.
    pub fn max_deviation(&self, other: &Spectrum) -> Option<f64> {
        let (a, b) = (self.expand(), other.expand());
        if a.len() != b.len() {
            return None;
        }
        Some(a.iter().zip(&b).map(|(x, y)| (x - y).abs()).fold(0.0, f64::max))
    }
}

impl fmt::Display for Spectrum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, e) in self.pairs.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{:.4}", e.value)?;
            if e.multiplicity > 1 {
                write!(f, "^({})", e.multiplicity)?;
            }
        }
        write!(f, "}}")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn clustering_and_expansion() {
        let s = Spectrum::from_values([2.0, -1.0, -1.0 + 1e-9, 0.5]);
        assert_eq!(s.pairs().len(), 3);
        assert_eq!(s.multiplicity_of(-1.0, 1e-6), 2);
        assert_eq!(s.total(), 4);
        assert_eq!(s.expand().len(), 4);
        assert_eq!(s.to_string(), "{-1.0000^(2), 0.5000, 2.0000}");
    }

    #[test]
    fn comparison() {
        let a = Spectrum::from_pairs([(1.0, 2), (3.0, 1)]);
        let b = Spectrum::from_values([1.0, 1.0 + 1e-9, 3.0]);
        assert!(a.approx_eq(&b, 1e-8));
        let c = Spectrum::from_values([1.0, 3.0]);
        assert!(!a.approx_eq(&c, 1.0));
        assert_eq!(a.union(&c).multiplicity_of(1.0, 1e-6), 3);
        assert!(Spectrum::from_pairs([(0.0, 0)]).is_empty());
    }
}
