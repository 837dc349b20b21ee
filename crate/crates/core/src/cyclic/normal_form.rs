//! Normal form of a planar (`k = 2`) configuration.
//!
//! Sort the directions of all `λ_i` and `-λ_i` by angle. Each maximal run of
//! vector directions with no antipodal direction in between is one class.
//! Weak hyperbolicity forbids a vector pointing exactly opposite another, so
//! runs are well defined; a non-empty polytope forces an odd number of runs,
//! at least three.

use std::cmp::Ordering;

use serde::Serialize;

use super::partition::CyclicPartition;
use super::CyclicError;
use crate::complex_homology::dual_complex;
use crate::config::{sign, Configuration, Rational, ValidationReport};

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct NormalForm {
    pub partition: CyclicPartition,
    /// Configuration coordinates of each canonical class, increasing.
    pub classes: Vec<Vec<usize>>,
}

impl NormalForm {
    /// Canonical class holding configuration coordinate `i`.
    pub fn class_of(&self, i: usize) -> usize {
        self.classes
            .iter()
            .position(|c| c.contains(&i))
            .expect("every coordinate lies in a class")
    }

    /// Realization coordinate `t` ↦ configuration coordinate.
    pub fn realization_map(&self) -> Vec<usize> {
        self.classes.iter().flatten().copied().collect()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Ray {
    Vector(usize),
    Antipode(usize),
}

/// Upper half plane (including the positive x axis) first, then by cross product.
fn angle_cmp(a: &[Rational], b: &[Rational]) -> Ordering {
    let half = |v: &[Rational]| {
        let y = sign(&v[1]);
        if y > 0 || (y == 0 && sign(&v[0]) > 0) {
            0
        } else {
            1
        }
    };
    half(a).cmp(&half(b)).then_with(|| {
        let cross = &a[0] * &b[1] - &a[1] * &b[0];
        0.cmp(&sign(&cross))
    })
}

pub fn normal_form(cfg: &Configuration) -> Result<NormalForm, CyclicError> {
    if cfg.k() != 2 {
        return Err(CyclicError::NotPlanar(cfg.k()));
    }
    if let ValidationReport::Violation { witness } = cfg.validate() {
        return Err(CyclicError::NotWeaklyHyperbolic(witness));
    }
    let n = cfg.n();
    let mut rays: Vec<(Vec<Rational>, Ray)> = Vec::with_capacity(2 * n);
    for i in 0..n {
        let v = cfg.lambda(i).to_vec();
        let minus: Vec<Rational> = v.iter().map(|x| -x).collect();
        rays.push((v, Ray::Vector(i)));
        rays.push((minus, Ray::Antipode(i)));
    }
    rays.sort_by(|a, b| angle_cmp(&a.0, &b.0));

    // Read the circle starting just after some antipode.
    let start = rays
        .iter()
        .position(|(_, r)| matches!(r, Ray::Antipode(_)))
        .expect("antipodes are present");
    let mut runs: Vec<Vec<usize>> = Vec::new();
    let mut current: Vec<usize> = Vec::new();
    for step in 1..=rays.len() {
        match rays[(start + step) % rays.len()].1 {
            Ray::Vector(i) => current.push(i),
            Ray::Antipode(_) => {
                if !current.is_empty() {
                    runs.push(std::mem::take(&mut current));
                }
            }
        }
    }
    if runs.len() < 3 {
        return Err(CyclicError::EmptyPolytope);
    }
    if runs.len().is_multiple_of(2) {
        return Err(CyclicError::SelfCheck(format!(
            "{} direction classes, expected an odd count",
            runs.len()
        )));
    }

    let composition = CyclicPartition::new(runs.iter().map(Vec::len).collect())?;
    let (partition, origin) = composition.canonical_with_map();
    let classes: Vec<Vec<usize>> = origin
        .iter()
        .map(|&c| {
            let mut class = runs[c].clone();
            class.sort_unstable();
            class
        })
        .collect();
    let form = NormalForm { partition, classes };
    self_check(cfg, &form)?;
    Ok(form)
}

/// The polygon realization, relabeled onto the configuration's coordinates,
/// must have the same dual complex as the configuration.
fn self_check(cfg: &Configuration, form: &NormalForm) -> Result<(), CyclicError> {
    let realized = dual_complex(&form.partition.realize()).relabel(&form.realization_map());
    let actual = dual_complex(cfg);
    if realized == actual {
        Ok(())
    } else {
        Err(CyclicError::SelfCheck(format!(
            "normal form {} realizes {realized}, configuration has {actual}",
            form.partition
        )))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(parts: &[usize]) -> CyclicPartition {
        CyclicPartition::new(parts.to_vec()).unwrap()
    }

    fn pentagon() -> Configuration {
        Configuration::from_integers(
            2,
            &[vec![4, 5], vec![0, 5], vec![-4, 5], vec![-2, -5], vec![2, -5]],
        )
        .unwrap()
    }

    #[test]
    fn pentagon_and_its_variants() {
        let form = normal_form(&pentagon()).unwrap();
        assert_eq!(form.partition, p(&[1, 1, 1, 1, 1]));
        let doubled = pentagon().duplicate_coordinate(0).unwrap();
        assert_eq!(normal_form(&doubled).unwrap().partition, p(&[2, 1, 1, 1, 1]).canonical());
        let deleted = pentagon().delete_coordinate(0).unwrap();
        assert_eq!(normal_form(&deleted).unwrap().partition, p(&[1, 2, 1]).canonical());
    }

    #[test]
    fn realizations_round_trip() {
        for parts in [vec![2, 2, 2], vec![1, 3, 1, 2, 1], vec![3, 1, 1, 1, 1, 2, 1]] {
            let q = p(&parts);
            let form = normal_form(&q.realize()).unwrap();
            assert_eq!(form.partition, q.canonical());
        }
    }

    #[test]
    fn classes_follow_the_canonical_order() {
        // Partition (3,1,2) realized; canonical (1,2,3) starts at class 1.
        let form = normal_form(&p(&[3, 1, 2]).realize()).unwrap();
        assert_eq!(form.classes, vec![vec![3], vec![4, 5], vec![0, 1, 2]]);
        assert_eq!(form.class_of(5), 1);
    }

    #[test]
    fn rotated_polygon_has_the_same_normal_form() {
        // Apply the linear map (x, y) ↦ (-y, x) to every vector.
        let cfg = pentagon().duplicate_coordinate(2).unwrap();
        let turned: Vec<Vec<Rational>> = cfg
            .lambdas()
            .iter()
            .map(|v| vec![-v[1].clone(), v[0].clone()])
            .collect();
        let turned = Configuration::new(2, turned).unwrap();
        assert_eq!(normal_form(&cfg).unwrap().partition, normal_form(&turned).unwrap().partition);
    }

    #[test]
    fn errors() {
        let k3 = Configuration::from_integers(3, &vec![vec![1, 0, 0]; 4]).unwrap();
        assert_eq!(normal_form(&k3), Err(CyclicError::NotPlanar(3)));
        let empty = Configuration::from_integers(2, &[vec![1, 1], vec![2, 1], vec![1, 3]]).unwrap();
        assert_eq!(normal_form(&empty), Err(CyclicError::EmptyPolytope));
        let antipodal = Configuration::from_integers(2, &[vec![1, 0], vec![-1, 0], vec![0, 1]]).unwrap();
        assert!(matches!(normal_form(&antipodal), Err(CyclicError::NotWeaklyHyperbolic(_))));
    }
}
