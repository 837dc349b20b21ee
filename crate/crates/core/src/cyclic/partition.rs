//! Odd cyclic partitions `n = n_1 + … + n_{2ℓ+1}` and their polygon realizations.

use std::fmt;

use serde::{Deserialize, Serialize};

use super::CyclicError;
use crate::config::{Configuration, Rational};
use crate::index_set::MAX_INDICES;

/// Multiplicities of the vertices of a regular `(2ℓ+1)`-gon, in cyclic order.
///
/// The stored order is the order given; [`CyclicPartition::canonical`]
/// picks the lexicographically least rotation or reflection.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct CyclicPartition {
    parts: Vec<usize>,
}

impl CyclicPartition {
    pub fn new(parts: Vec<usize>) -> Result<Self, CyclicError> {
        if parts.len() < 3 {
            return Err(CyclicError::TooFewClasses(parts.len()));
        }
        if parts.len().is_multiple_of(2) {
            return Err(CyclicError::EvenClassCount(parts.len()));
        }
        if parts.contains(&0) {
            return Err(CyclicError::ZeroPart);
        }
        let n: usize = parts.iter().sum();
        if n > MAX_INDICES {
            return Err(CyclicError::TooManyCoordinates(n));
        }
        Ok(CyclicPartition { parts })
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn num_classes(&self) -> usize {
        self.parts.len()
    }

    pub fn ell(&self) -> usize {
        (self.parts.len() - 1) / 2
    }

    pub fn n(&self) -> usize {
        self.parts.iter().sum()
    }

    /// `d_i = n_i + … + n_{i+ℓ-1}`, indices cyclic.
    pub fn d_values(&self) -> Vec<usize> {
        let m = self.num_classes();
        (0..m)
            .map(|i| (0..self.ell()).map(|t| self.parts[(i + t) % m]).sum())
            .collect()
    }

    /// The partition read from class `start` onwards.
    pub fn rotated(&self, start: usize) -> CyclicPartition {
        let m = self.num_classes();
        CyclicPartition {
            parts: (0..m).map(|i| self.parts[(start + i) % m]).collect(),
        }
    }

    pub fn reflected(&self) -> CyclicPartition {
        let mut parts = self.parts.clone();
        parts.reverse();
        CyclicPartition { parts }
    }

    pub fn canonical(&self) -> CyclicPartition {
        self.canonical_with_map().0
    }

    /// The canonical representative and, for each of its classes, the class
    /// of `self` it came from.
    pub fn canonical_with_map(&self) -> (CyclicPartition, Vec<usize>) {
        let m = self.num_classes();
        let mut best: Option<(Vec<usize>, Vec<usize>)> = None;
        for reflect in [false, true] {
            for r in 0..m {
                let origin: Vec<usize> = (0..m)
                    .map(|i| {
                        let t = (i + r) % m;
                        if reflect {
                            m - 1 - t
                        } else {
                            t
                        }
                    })
                    .collect();
                let parts: Vec<usize> = origin.iter().map(|&c| self.parts[c]).collect();
                if best.as_ref().is_none_or(|(b, _)| parts < *b) {
                    best = Some((parts, origin));
                }
            }
        }
        let (parts, origin) = best.expect("at least one rotation");
        (CyclicPartition { parts }, origin)
    }

    pub fn is_canonical(&self) -> bool {
        self.canonical() == *self
    }

    /// Coordinate ranges of the classes in the realization.
    pub fn class_ranges(&self) -> Vec<std::ops::Range<usize>> {
        let mut start = 0;
        self.parts
            .iter()
            .map(|&p| {
                let r = start..start + p;
                start += p;
                r
            })
            .collect()
    }

    /// Class of coordinate `i` in the realization.
    pub fn class_of(&self, i: usize) -> usize {
        self.class_ranges()
            .iter()
            .position(|r| r.contains(&i))
            .expect("coordinate within n")
    }

    /// Exact rational configuration with the combinatorics of the regular
    /// polygon: class `j` gets `n_j` copies of vertex `j`, coordinates are
    /// ordered by class, and the first coordinate of class 0 is distinguished.
    ///
    /// The `2N` directions `u_0, …, u_{N-1}, -u_0, …, -u_{N-1}` with
    /// `u_m = (N-1-2m, N)` are in counterclockwise order. Vertex `j` is the
    /// `2j`-th of them, so vertices and antipodes alternate as for the
    /// regular `N`-gon.
    pub fn realize(&self) -> Configuration {
        let m = self.num_classes() as i64;
        let direction = |t: i64| -> Vec<i64> {
            if t < m {
                vec![m - 1 - 2 * t, m]
            } else {
                vec![-(m - 1 - 2 * (t - m)), -m]
            }
        };
        let mut lambdas = Vec::with_capacity(self.n());
        for (j, &copies) in self.parts.iter().enumerate() {
            let v: Vec<Rational> = direction(2 * j as i64)
                .into_iter()
                .map(|x| Rational::from_integer(x.into()))
                .collect();
            lambdas.extend(std::iter::repeat_n(v, copies));
        }
        Configuration::new(2, lambdas).expect("partition realization is well formed")
    }

    /// [`realize`](Self::realize) with the first coordinate of `class`
    /// distinguished.
    pub fn realize_with_distinguished(&self, class: usize) -> Result<Configuration, CyclicError> {
        if class >= self.num_classes() {
            return Err(CyclicError::ClassOutOfRange {
                class,
                count: self.num_classes(),
            });
        }
        let first = self.class_ranges()[class].start;
        Ok(self
            .realize()
            .with_distinguished(first)
            .expect("class start is a coordinate"))
    }
}

impl TryFrom<Vec<usize>> for CyclicPartition {
    type Error = CyclicError;

    fn try_from(parts: Vec<usize>) -> Result<Self, CyclicError> {
        CyclicPartition::new(parts)
    }
}

impl From<CyclicPartition> for Vec<usize> {
    fn from(p: CyclicPartition) -> Vec<usize> {
        p.parts
    }
}

impl fmt::Display for CyclicPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.parts.iter().map(usize::to_string).collect();
        write!(f, "({})", parts.join(","))
    }
}

/// All odd compositions of `n` with at least three parts, in lexicographic order.
pub fn compositions(n: usize) -> Vec<CyclicPartition> {
    fn extend(remaining: usize, current: &mut Vec<usize>, out: &mut Vec<CyclicPartition>) {
        if remaining == 0 {
            if current.len() >= 3 && current.len() % 2 == 1 {
                out.push(CyclicPartition {
                    parts: current.clone(),
                });
            }
            return;
        }
        for first in 1..=remaining {
            current.push(first);
            extend(remaining - first, current, out);
            current.pop();
        }
    }
    let mut out = Vec::new();
    extend(n, &mut Vec::new(), &mut out);
    out
}

/// Canonical partitions of `n`, one per rotation/reflection class, sorted.
pub fn canonical_partitions(n: usize) -> Vec<CyclicPartition> {
    let mut out: Vec<CyclicPartition> = compositions(n).into_iter().filter(|p| p.is_canonical()).collect();
    out.sort();
    out
}
