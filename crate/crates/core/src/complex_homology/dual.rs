//! The dual complex `K = {L : F_L ≠ ∅}` of the polytope of a configuration.

use std::collections::HashSet;

use num_traits::Zero;

use super::complex::SimplicialComplex;
use crate::config::Configuration;
use crate::feasibility::face_point;
use crate::index_set::IndexSet;

/// Enumerates `K` level by level.
///
/// A candidate `L ∪ {v}` with `v > max L` is only tested when all its facets
/// are faces (monotonicity). Every feasible point found certifies its whole
/// zero set as a face, so candidates inside a known zero set skip the LP.
pub fn dual_complex(cfg: &Configuration) -> SimplicialComplex {
    let n = cfg.n();
    let ground = IndexSet::full(n);
    let mut witnesses: Vec<IndexSet> = Vec::new();
    let probe = |face: IndexSet, witnesses: &mut Vec<IndexSet>| -> bool {
        if witnesses.iter().any(|&w| face.is_subset(w)) {
            return true;
        }
        match face_point(cfg, face) {
            Some(point) => {
                let zeros: IndexSet = (0..n).filter(|&i| point[i].is_zero()).collect();
                witnesses.push(zeros);
                true
            }
            None => false,
        }
    };

    if !probe(IndexSet::EMPTY, &mut witnesses) {
        return SimplicialComplex::void(ground);
    }
    let mut faces = vec![IndexSet::EMPTY];
    let mut level = vec![IndexSet::EMPTY];
    while !level.is_empty() {
        let known: HashSet<IndexSet> = level.iter().copied().collect();
        let mut next = Vec::new();
        for &face in &level {
            let start = face.max().map_or(0, |m| m + 1);
            for v in start..n {
                let candidate = face.insert(v);
                let facets_present = candidate
                    .iter()
                    .all(|u| u == v || known.contains(&candidate.remove(u)));
                if facets_present && probe(candidate, &mut witnesses) {
                    next.push(candidate);
                }
            }
        }
        faces.extend_from_slice(&next);
        level = next;
    }
    SimplicialComplex::from_closed_faces(ground, faces)
}

/// Precomputed cone test for full subcomplexes `K|_J`.
///
/// For each vertex `v` it stores the minimal faces `L ∌ v` with
/// `L ∪ {v} ∉ K`. Then `v ∈ J` is an apex of `K|_J` iff none of these
/// blockers lies inside `J`.
#[derive(Debug, Clone)]
pub struct ConeIndex {
    blockers: Vec<(usize, Vec<IndexSet>)>,
}

impl ConeIndex {
    pub fn new(k: &SimplicialComplex) -> Self {
        let vertices = k.vertices();
        let mut blockers: Vec<(usize, Vec<IndexSet>)> =
            vertices.iter().map(|v| (v, Vec::new())).collect();
        for (v, list) in blockers.iter_mut() {
            let v = *v;
            for &face in k.faces() {
                if face.contains(v) || k.contains(face.insert(v)) {
                    continue;
                }
                let minimal = face.iter().all(|u| k.contains(face.remove(u).insert(v)));
                if minimal {
                    list.push(face);
                }
            }
        }
        ConeIndex { blockers }
    }

    /// A vertex of `J` that is an apex of `K|_J`.
    pub fn apex_in(&self, subset: IndexSet) -> Option<usize> {
        self.blockers
            .iter()
            .find(|(v, list)| subset.contains(*v) && list.iter().all(|b| !b.is_subset(subset)))
            .map(|(v, _)| *v)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::complex_homology::reduced_homology;

    fn pentagon() -> Configuration {
        // Five directions in cyclic order, combinatorially a regular pentagon.
        Configuration::from_integers(
            2,
            &[vec![4, 5], vec![0, 5], vec![-4, 5], vec![-2, -5], vec![2, -5]],
        )
        .unwrap()
    }

    fn set(v: &[usize]) -> IndexSet {
        v.iter().collect()
    }

    #[test]
    fn pentagon_dual_complex_is_a_five_cycle() {
        let k = dual_complex(&pentagon());
        assert_eq!(k.f_vector(), vec![1, 5, 5]);
        let edges: Vec<IndexSet> = k.faces_of_size(2).collect();
        for i in 0..5 {
            let e = set(&[i, (i + 2) % 5]);
            assert!(edges.contains(&e), "missing edge {e}");
        }
        assert_eq!(reduced_homology(&k).rank(1), 1);
    }

    #[test]
    fn triangle_dual_complex_has_only_the_empty_face() {
        let cfg = Configuration::from_integers(2, &[vec![2, 3], vec![-2, 3], vec![0, -3]]).unwrap();
        let k = dual_complex(&cfg);
        assert_eq!(k.faces(), &[IndexSet::EMPTY]);
    }

    #[test]
    fn empty_polytope_gives_the_void_complex() {
        let cfg = Configuration::from_integers(2, &[vec![1, 1], vec![2, 1], vec![1, 3]]).unwrap();
        assert!(cfg.validate().is_ok());
        assert!(dual_complex(&cfg).is_void());
    }

    #[test]
    fn cone_index_agrees_with_apex_search() {
        let k = dual_complex(&pentagon());
        let index = ConeIndex::new(&k);
        for bits in 0..32u64 {
            let j = IndexSet::from_bits(bits);
            let sub = k.full_subcomplex(j);
            let is_cone = sub.cone_apex().is_some();
            assert_eq!(index.apex_in(j).is_some(), is_cone, "J = {j}");
        }
    }
}
