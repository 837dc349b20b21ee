//! Closed-form diffeomorphism types of `Z` and `Z^C` for `k = 2`.

use std::fmt;

use serde::Serialize;

use super::partition::CyclicPartition;
use super::CyclicError;
use crate::complex_homology::{AbelianGroup, GradedGroup};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum Factor {
    Sphere(usize),
    Disk(usize),
}

impl Factor {
    pub fn dimension(self) -> usize {
        match self {
            Factor::Sphere(d) | Factor::Disk(d) => d,
        }
    }
}

impl fmt::Display for Factor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Factor::Sphere(d) => write!(f, "S^{d}"),
            Factor::Disk(d) => write!(f, "D^{d}"),
        }
    }
}

/// A product of spheres and disks.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct Summand {
    pub factors: Vec<Factor>,
}

impl Summand {
    pub fn spheres(dims: &[usize]) -> Self {
        Summand {
            factors: dims.iter().map(|&d| Factor::Sphere(d)).collect(),
        }
    }

    pub fn dimension(&self) -> usize {
        self.factors.iter().map(|f| f.dimension()).sum()
    }

    pub fn is_closed(&self) -> bool {
        self.factors.iter().all(|f| matches!(f, Factor::Sphere(_)))
    }
}

impl fmt::Display for Summand {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.factors.iter().map(Factor::to_string).collect();
        write!(f, "{}", parts.join(" x "))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum DescriptionKind {
    /// A single product of spheres.
    SphereProduct,
    /// Connected sum of the summands.
    ConnectedSum,
}

/// Conditions attached to a classification.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub enum Hypothesis {
    /// Moment-angle manifold: the formula holds without further conditions.
    ComplexCase,
    /// The formula is stated for dimension at least `required`.
    DimAtLeast { required: usize, actual: usize },
    /// Whether `H_1` of the described manifold vanishes.
    H1Zero { holds: bool },
    /// Simple connectivity of `Z` and `Z_0` is assumed, not derived.
    Pi1Unverified,
}

impl fmt::Display for Hypothesis {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Hypothesis::ComplexCase => write!(f, "complex case: unconditional"),
            Hypothesis::DimAtLeast { required, actual } => {
                let verdict = if actual >= required { "holds" } else { "fails" };
                write!(f, "dim >= {required}: {verdict} (dim {actual})")
            }
            Hypothesis::H1Zero { holds } => {
                write!(f, "H1 = 0: {}", if *holds { "holds" } else { "fails" })
            }
            Hypothesis::Pi1Unverified => {
                write!(f, "pi1 unverified: diffeomorphic provided Z and Z_0 are simply connected")
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ManifoldDescription {
    pub kind: DescriptionKind,
    pub dimension: usize,
    pub summands: Vec<Summand>,
    pub flags: Vec<Hypothesis>,
}

impl ManifoldDescription {
    fn product(factors: &[usize], flags: Vec<Hypothesis>) -> Self {
        let summand = Summand::spheres(factors);
        ManifoldDescription {
            kind: DescriptionKind::SphereProduct,
            dimension: summand.dimension(),
            summands: vec![summand],
            flags,
        }
    }

    fn connected_sum(summands: Vec<Summand>, flags: Vec<Hypothesis>) -> Self {
        let dimension = summands.first().map_or(0, Summand::dimension);
        debug_assert!(summands.iter().all(|s| s.dimension() == dimension));
        ManifoldDescription {
            kind: DescriptionKind::ConnectedSum,
            dimension,
            summands,
            flags,
        }
    }

    /// Genus, when this is a connected sum of tori.
    pub fn surface_genus(&self) -> Option<usize> {
        let torus = Summand::spheres(&[1, 1]);
        (self.kind == DescriptionKind::ConnectedSum && self.summands.iter().all(|s| *s == torus))
            .then_some(self.summands.len())
    }

    /// Symbolic form without flags, e.g. `#_5(S^3 x S^4)`.
    pub fn symbol(&self) -> String {
        match self.kind {
            DescriptionKind::SphereProduct => self.summands[0].to_string(),
            DescriptionKind::ConnectedSum => {
                // Equal summands grouped in order of first appearance.
                let mut groups: Vec<(&Summand, usize)> = Vec::new();
                for s in &self.summands {
                    match groups.iter_mut().find(|(g, _)| *g == s) {
                        Some((_, count)) => *count += 1,
                        None => groups.push((s, 1)),
                    }
                }
                let parts: Vec<String> = groups
                    .iter()
                    .map(|(s, count)| match count {
                        1 => format!("({s})"),
                        c => format!("#_{c}({s})"),
                    })
                    .collect();
                parts.join(" # ")
            }
        }
    }
}

impl fmt::Display for ManifoldDescription {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.symbol())?;
        if let Some(g) = self.surface_genus() {
            write!(f, " [genus {g} surface]")?;
        }
        Ok(())
    }
}

/// Diffeomorphism type of the real variety `Z`.
pub fn classify_real(p: &CyclicPartition) -> ManifoldDescription {
    let n = p.n();
    let parts = p.parts();
    if p.ell() == 1 {
        return ManifoldDescription::product(&[parts[0] - 1, parts[1] - 1, parts[2] - 1], Vec::new());
    }
    let summands: Vec<Summand> = p
        .d_values()
        .iter()
        .map(|&d| Summand::spheres(&[d - 1, n - d - 2]))
        .collect();
    let mut description = ManifoldDescription::connected_sum(summands, Vec::new());
    let h1_zero = expected_homology(&description)
        .map(|h| h.rank(1) == 0)
        .unwrap_or(false);
    let factors_simply_connected = description
        .summands
        .iter()
        .flat_map(|s| &s.factors)
        .all(|f| f.dimension() >= 2);
    description.flags.push(Hypothesis::DimAtLeast {
        required: 5,
        actual: n - 3,
    });
    description.flags.push(Hypothesis::H1Zero { holds: h1_zero });
    if !(h1_zero && factors_simply_connected) {
        description.flags.push(Hypothesis::Pi1Unverified);
    }
    description
}

/// Diffeomorphism type of the moment-angle manifold `Z^C`.
pub fn classify_complex(p: &CyclicPartition) -> ManifoldDescription {
    let n = p.n();
    let parts = p.parts();
    let flags = vec![Hypothesis::ComplexCase];
    if p.ell() == 1 {
        return ManifoldDescription::product(
            &[2 * parts[0] - 1, 2 * parts[1] - 1, 2 * parts[2] - 1],
            flags,
        );
    }
    let summands = p
        .d_values()
        .iter()
        .map(|&d| Summand::spheres(&[2 * d - 1, 2 * n - 2 * d - 2]))
        .collect();
    ManifoldDescription::connected_sum(summands, flags)
}

/// Künneth: the product of spheres has free homology, `S^0` counting twice in degree 0.
pub fn sphere_product_homology(dims: &[usize]) -> GradedGroup {
    let mut ranks: Vec<u64> = vec![1];
    for &d in dims {
        let mut next = vec![0u64; ranks.len() + d];
        for (i, &r) in ranks.iter().enumerate() {
            next[i] += r;
            next[i + d] += r;
        }
        ranks = next;
    }
    GradedGroup::from_betti(&ranks)
}

/// Integral homology of a closed description.
pub fn expected_homology(m: &ManifoldDescription) -> Result<GradedGroup, CyclicError> {
    if m.summands.iter().any(|s| !s.is_closed()) {
        return Err(CyclicError::BoundarySummand);
    }
    let sphere_dims = |s: &Summand| -> Vec<usize> { s.factors.iter().map(|f| f.dimension()).collect() };
    match m.kind {
        DescriptionKind::SphereProduct => Ok(sphere_product_homology(&sphere_dims(&m.summands[0]))),
        DescriptionKind::ConnectedSum => {
            let top = m.dimension as i32;
            let mut h = GradedGroup::z_in(0);
            h.add_group(top, &AbelianGroup::free(1));
            for s in &m.summands {
                let part = sphere_product_homology(&sphere_dims(s));
                for (d, g) in part.iter() {
                    if d > 0 && d < top {
                        h.add_group(d, g);
                    }
                }
            }
            Ok(h)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(parts: &[usize]) -> CyclicPartition {
        CyclicPartition::new(parts.to_vec()).unwrap()
    }

    #[test]
    fn triple_products() {
        let real = classify_real(&p(&[2, 2, 2]));
        assert_eq!(real.to_string(), "S^1 x S^1 x S^1");
        assert!(real.flags.is_empty());
        assert_eq!(expected_homology(&real).unwrap(), GradedGroup::from_betti(&[1, 3, 3, 1]));
        assert_eq!(classify_complex(&p(&[1, 1, 1])).to_string(), "S^1 x S^1 x S^1");
        let points = classify_real(&p(&[1, 1, 1]));
        assert_eq!(expected_homology(&points).unwrap(), GradedGroup::from_betti(&[8]));
    }

    #[test]
    fn pentagon_classifications() {
        let real = classify_real(&p(&[1, 1, 1, 1, 1]));
        assert_eq!(real.to_string(), "#_5(S^1 x S^1) [genus 5 surface]");
        assert!(real.flags.contains(&Hypothesis::Pi1Unverified));
        assert!(real.flags.contains(&Hypothesis::DimAtLeast { required: 5, actual: 2 }));
        assert_eq!(expected_homology(&real).unwrap(), GradedGroup::from_betti(&[1, 10, 1]));
        let complex = classify_complex(&p(&[1, 1, 1, 1, 1]));
        assert_eq!(complex.to_string(), "#_5(S^3 x S^4)");
        assert_eq!(complex.flags, vec![Hypothesis::ComplexCase]);
        assert_eq!(
            expected_homology(&complex).unwrap(),
            GradedGroup::from_betti(&[1, 0, 0, 5, 5, 0, 0, 1])
        );
    }

    #[test]
    fn mixed_connected_sums() {
        let c = classify_complex(&p(&[2, 1, 1, 1, 1]));
        assert_eq!(c.dimension, 9);
        assert_eq!(c.symbol(), "#_2(S^5 x S^4) # #_3(S^3 x S^6)");
        let r = classify_real(&p(&[3, 3, 3, 3, 3]));
        assert_eq!(r.symbol(), "#_5(S^5 x S^7)");
        assert_eq!(r.dimension, 12);
        assert!(!r.flags.contains(&Hypothesis::Pi1Unverified));
        assert!(r.flags.contains(&Hypothesis::H1Zero { holds: true }));
    }

    #[test]
    fn boundary_summands_are_rejected() {
        let with_disk = ManifoldDescription {
            kind: DescriptionKind::SphereProduct,
            dimension: 3,
            summands: vec![Summand {
                factors: vec![Factor::Sphere(1), Factor::Disk(2)],
            }],
            flags: Vec::new(),
        };
        assert_eq!(expected_homology(&with_disk), Err(CyclicError::BoundarySummand));
    }
}
