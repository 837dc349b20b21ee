//! Quadric configurations `Λ = (λ_1, …, λ_n)`, `λ_i ∈ Q^k`.
//!
//! A [`Configuration`] determines the real variety
//! `Z(Λ) = { x ∈ R^n : Σ λ_i x_i² = 0, Σ x_i² = 1 }`, its complex analogue
//! (the moment-angle manifold) and the polytope
//! `P = { r ≥ 0 : Σ λ_i r_i = 0, Σ r_i = 1 }`. All coefficients are exact
//! rationals. One coordinate is marked as *distinguished*; it is the
//! coordinate cut by the half space `x ≥ 0` when forming `Z_+`, `Z_0` and
//! the open book decompositions.
//!
//! Coordinates are 0-based in the API. Labels default to `x1, …, xn`, and
//! reports print 1-based coordinate numbers.

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

use crate::feasibility::origin_in_convex_hull;
use crate::index_set::{IndexSet, MAX_INDICES};

pub type Rational = BigRational;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ConfigError {
    #[error("the number of quadrics k must be positive")]
    ZeroCodimension,
    #[error("coefficient vector {index} has {found} entries, expected k = {expected}")]
    VectorLength {
        index: usize,
        expected: usize,
        found: usize,
    },
    #[error("{n} coefficient vectors for k = {k}: at least k + 1 = {} are needed", k + 1)]
    TooFewCoordinates { n: usize, k: usize },
    #[error("{n} coordinates exceed the supported maximum of {MAX_INDICES}")]
    TooManyCoordinates { n: usize },
    #[error("coordinate {index} out of range for n = {n}")]
    IndexOutOfRange { index: usize, n: usize },
    #[error("{found} labels given for {n} coordinates")]
    LabelCount { found: usize, n: usize },
    #[error("invalid rational literal {0:?}")]
    BadRational(String),
}

/// Outcome of the weak hyperbolicity test.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ValidationReport {
    Ok,
    /// The origin lies in the convex hull of `{λ_i : i ∈ witness}`, `|witness| ≤ k`.
    Violation { witness: IndexSet },
}

impl ValidationReport {
    pub fn is_ok(&self) -> bool {
        matches!(self, ValidationReport::Ok)
    }

    pub fn witness(&self) -> Option<IndexSet> {
        match self {
            ValidationReport::Ok => None,
            ValidationReport::Violation { witness } => Some(*witness),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Configuration {
    k: usize,
    lambdas: Vec<Vec<Rational>>,
    labels: Vec<String>,
    distinguished: usize,
}

impl Configuration {
    /// Builds a configuration with default labels and coordinate 0 distinguished.
    pub fn new(k: usize, lambdas: Vec<Vec<Rational>>) -> Result<Self, ConfigError> {
        if k == 0 {
            return Err(ConfigError::ZeroCodimension);
        }
        for (index, v) in lambdas.iter().enumerate() {
            if v.len() != k {
                return Err(ConfigError::VectorLength {
                    index,
                    expected: k,
                    found: v.len(),
                });
            }
        }
        let n = lambdas.len();
        if n < k + 1 {
            return Err(ConfigError::TooFewCoordinates { n, k });
        }
        if n > MAX_INDICES {
            return Err(ConfigError::TooManyCoordinates { n });
        }
        let labels = (1..=n).map(|i| format!("x{i}")).collect();
        Ok(Configuration {
            k,
            lambdas,
            labels,
            distinguished: 0,
        })
    }

    /// Convenience constructor from integer coefficient vectors.
    pub fn from_integers(k: usize, lambdas: &[Vec<i64>]) -> Result<Self, ConfigError> {
        let lambdas = lambdas
            .iter()
            .map(|v| v.iter().map(|&x| Rational::from_integer(x.into())).collect())
            .collect();
        Configuration::new(k, lambdas)
    }

    pub fn with_labels(mut self, labels: Vec<String>) -> Result<Self, ConfigError> {
        if labels.len() != self.n() {
            return Err(ConfigError::LabelCount {
                found: labels.len(),
                n: self.n(),
            });
        }
        self.labels = labels;
        Ok(self)
    }

    pub fn with_distinguished(mut self, index: usize) -> Result<Self, ConfigError> {
        self.check_index(index)?;
        self.distinguished = index;
        Ok(self)
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn n(&self) -> usize {
        self.lambdas.len()
    }

    pub fn lambdas(&self) -> &[Vec<Rational>] {
        &self.lambdas
    }

    pub fn lambda(&self, i: usize) -> &[Rational] {
        &self.lambdas[i]
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, i: usize) -> &str {
        &self.labels[i]
    }

    pub fn distinguished(&self) -> usize {
        self.distinguished
    }

    /// Dimension of the real variety `Z`, `n - k - 1`.
    pub fn real_dimension(&self) -> usize {
        self.n() - self.k - 1
    }

    /// Dimension of the moment-angle manifold `Z^C`, `2n - k - 1`.
    pub fn complex_dimension(&self) -> usize {
        2 * self.n() - self.k - 1
    }

    /// Weak hyperbolicity: no `J` with `|J| ≤ k` has the origin in the convex
    /// hull of its vectors. Subsets are scanned in lexicographic order of
    /// their sorted index sequences, so the witness is the lexicographically
    /// smallest violating subset.
    pub fn validate(&self) -> ValidationReport {
        let mut stack = Vec::with_capacity(self.k);
        match self.first_violation(0, &mut stack) {
            Some(witness) => ValidationReport::Violation { witness },
            None => ValidationReport::Ok,
        }
    }

    fn first_violation(&self, start: usize, stack: &mut Vec<usize>) -> Option<IndexSet> {
        for i in start..self.n() {
            stack.push(i);
            let vectors: Vec<Vec<Rational>> =
                stack.iter().map(|&j| self.lambdas[j].clone()).collect();
            if origin_in_convex_hull(&vectors) {
                return Some(stack.iter().collect());
            }
            if stack.len() < self.k {
                if let Some(w) = self.first_violation(i + 1, stack) {
                    return Some(w);
                }
            }
            stack.pop();
        }
        None
    }

    /// Drops coordinate `i` (sets `x_i = 0`). Deleting the distinguished
    /// coordinate models `Z_0`; the result then has coordinate 0 distinguished.
    pub fn delete_coordinate(&self, i: usize) -> Result<Configuration, ConfigError> {
        self.check_index(i)?;
        if self.n() - 1 < self.k + 1 {
            return Err(ConfigError::TooFewCoordinates {
                n: self.n() - 1,
                k: self.k,
            });
        }
        let mut out = self.clone();
        out.lambdas.remove(i);
        out.labels.remove(i);
        out.distinguished = match self.distinguished {
            d if d == i => 0,
            d if d > i => d - 1,
            d => d,
        };
        Ok(out)
    }

    /// Inserts a second copy of `λ_i` right after position `i` (the variety
    /// `Z'`). The parent label `x` becomes `xa`/`xb` and the new copy at
    /// `i + 1` becomes the distinguished coordinate.
    pub fn duplicate_coordinate(&self, i: usize) -> Result<Configuration, ConfigError> {
        self.check_index(i)?;
        if self.n() + 1 > MAX_INDICES {
            return Err(ConfigError::TooManyCoordinates { n: self.n() + 1 });
        }
        let mut out = self.clone();
        let parent = out.labels[i].clone();
        out.lambdas.insert(i + 1, self.lambdas[i].clone());
        out.labels[i] = format!("{parent}a");
        out.labels.insert(i + 1, format!("{parent}b"));
        out.distinguished = i + 1;
        Ok(out)
    }

    /// The real configuration with every `λ_i` repeated twice (adjacent),
    /// whose variety is the moment-angle manifold of `self`.
    pub fn complexify(&self) -> Result<Configuration, ConfigError> {
        if 2 * self.n() > MAX_INDICES {
            return Err(ConfigError::TooManyCoordinates { n: 2 * self.n() });
        }
        let mut lambdas = Vec::with_capacity(2 * self.n());
        let mut labels = Vec::with_capacity(2 * self.n());
        for (v, label) in self.lambdas.iter().zip(&self.labels) {
            lambdas.push(v.clone());
            lambdas.push(v.clone());
            labels.push(format!("{label}a"));
            labels.push(format!("{label}b"));
        }
        Ok(Configuration {
            k: self.k,
            lambdas,
            labels,
            distinguished: 2 * self.distinguished,
        })
    }

    /// Coordinates other than `i` carrying exactly the same vector `λ_i`.
    pub fn twins(&self, i: usize) -> impl Iterator<Item = usize> + '_ {
        let target = &self.lambdas[i];
        (0..self.n()).filter(move |&j| j != i && &self.lambdas[j] == target)
    }

    /// Equality of the coefficient multisets, ignoring labels and order.
    pub fn same_coefficients_up_to_order(&self, other: &Configuration) -> bool {
        if self.k != other.k || self.n() != other.n() {
            return false;
        }
        let mut a = self.lambdas.clone();
        let mut b = other.lambdas.clone();
        a.sort();
        b.sort();
        a == b
    }

    fn check_index(&self, index: usize) -> Result<(), ConfigError> {
        if index >= self.n() {
            Err(ConfigError::IndexOutOfRange { index, n: self.n() })
        } else {
            Ok(())
        }
    }
}

/// Formats a rational as `p` or `p/q`.
pub fn format_rational(r: &Rational) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// Parses `p`, `-p`, or `p/q` with `q ≠ 0`.
pub fn parse_rational(text: &str) -> Result<Rational, ConfigError> {
    let bad = || ConfigError::BadRational(text.to_string());
    let trimmed = text.trim();
    let (num, den) = match trimmed.split_once('/') {
        Some((p, q)) => (p.trim(), q.trim()),
        None => (trimmed, "1"),
    };
    let num: BigInt = num.parse().map_err(|_| bad())?;
    let den: BigInt = den.parse().map_err(|_| bad())?;
    if den.is_zero() {
        return Err(bad());
    }
    Ok(Rational::new(num, den))
}

impl fmt::Display for Configuration {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "k={} n={} [", self.k, self.n())?;
        for (i, v) in self.lambdas.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            let mark = if i == self.distinguished { "*" } else { "" };
            let coords: Vec<String> = v.iter().map(format_rational).collect();
            write!(f, "{}{}=({})", mark, self.labels[i], coords.join(","))?;
        }
        write!(f, "]")
    }
}

/// Sign of a rational as -1, 0, 1.
pub(crate) fn sign(r: &Rational) -> i8 {
    if r.is_zero() {
        0
    } else if r.is_positive() {
        1
    } else {
        -1
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn triangle() -> Configuration {
        Configuration::from_integers(2, &[vec![2, 3], vec![-2, 3], vec![0, -3]]).unwrap()
    }

    #[test]
    fn antipodal_pair_is_the_witness() {
        let cfg = Configuration::from_integers(2, &[vec![1, 0], vec![-1, 0], vec![0, 1]]).unwrap();
        assert_eq!(
            cfg.validate(),
            ValidationReport::Violation {
                witness: [0usize, 1].iter().collect()
            }
        );
    }

    #[test]
    fn zero_vector_witness_follows_lexicographic_order() {
        let cfg = Configuration::from_integers(2, &[vec![1, 0], vec![0, 0], vec![0, 1]]).unwrap();
        // [0] is scanned before [0,1] and passes; [0,1] = {λ_1, 0} contains the origin.
        assert_eq!(
            cfg.validate().witness(),
            Some([0usize, 1].iter().collect())
        );
    }

    #[test]
    fn triangle_is_weakly_hyperbolic() {
        assert!(triangle().validate().is_ok());
        assert_eq!(triangle().real_dimension(), 0);
        assert_eq!(triangle().complex_dimension(), 3);
    }

    #[test]
    fn structural_errors_are_distinct() {
        assert_eq!(
            Configuration::from_integers(2, &[vec![1, 0], vec![1], vec![0, 1]]),
            Err(ConfigError::VectorLength {
                index: 1,
                expected: 2,
                found: 1
            })
        );
        assert_eq!(
            Configuration::from_integers(2, &[vec![1, 0], vec![0, 1]]),
            Err(ConfigError::TooFewCoordinates { n: 2, k: 2 })
        );
        assert_eq!(
            Configuration::from_integers(0, &[vec![]]),
            Err(ConfigError::ZeroCodimension)
        );
    }

    #[test]
    fn deleting_from_a_triangle_is_degenerate() {
        assert_eq!(
            triangle().delete_coordinate(1),
            Err(ConfigError::TooFewCoordinates { n: 2, k: 2 })
        );
        assert_eq!(
            triangle().delete_coordinate(3),
            Err(ConfigError::IndexOutOfRange { index: 3, n: 3 })
        );
    }

    #[test]
    fn duplicate_labels_and_marks_the_copy() {
        let d = triangle().duplicate_coordinate(0).unwrap();
        assert_eq!(d.n(), 4);
        assert_eq!(d.labels(), &["x1a", "x1b", "x2", "x3"]);
        assert_eq!(d.distinguished(), 1);
        assert_eq!(d.lambda(0), d.lambda(1));
        assert_eq!(d.twins(1).collect::<Vec<_>>(), vec![0]);
        let back = d.delete_coordinate(1).unwrap();
        assert_eq!(back.lambdas(), triangle().lambdas());
        assert!(d.validate().is_ok());
    }

    #[test]
    fn complexify_doubles_every_vector() {
        let c = triangle().complexify().unwrap();
        assert_eq!(c.n(), 6);
        for i in 0..3 {
            assert_eq!(c.lambda(2 * i), triangle().lambda(i));
            assert_eq!(c.lambda(2 * i + 1), triangle().lambda(i));
        }
        let cc = c.complexify().unwrap();
        assert_eq!(cc.n(), 12);
        assert_eq!(cc.twins(0).count(), 3);
    }

    #[test]
    fn rational_literals() {
        assert_eq!(
            parse_rational("-6/4").unwrap(),
            Rational::new((-3).into(), 2.into())
        );
        assert_eq!(parse_rational(" 7 ").unwrap(), Rational::from_integer(7.into()));
        assert!(parse_rational("1/0").is_err());
        assert!(parse_rational("one").is_err());
        assert_eq!(format_rational(&parse_rational("4/-6").unwrap()), "-2/3");
    }
}
