//! Abstract simplicial complexes on a ground set of coordinate indices.

use std::collections::{HashMap, HashSet};
use std::fmt;

use num_traits::ToPrimitive;

use super::graded::{AbelianGroup, GradedGroup};
use super::smith::SparseIntMatrix;
use crate::index_set::IndexSet;

/// A downward-closed family of subsets of `ground`.
///
/// The *void* complex has no faces at all; every other complex contains the
/// empty face. Faces are kept sorted by size, then by bit pattern.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SimplicialComplex {
    ground: IndexSet,
    faces: Vec<IndexSet>,
    lookup: HashSet<IndexSet>,
}

impl SimplicialComplex {
    pub fn void(ground: IndexSet) -> Self {
        SimplicialComplex {
            ground,
            faces: Vec::new(),
            lookup: HashSet::new(),
        }
    }

    /// The complex `{∅}`.
    pub fn only_empty_face(ground: IndexSet) -> Self {
        SimplicialComplex::from_closed_faces(ground, vec![IndexSet::EMPTY])
    }

    /// The complex generated by `maximal` (all subsets of the given sets).
    /// An empty list gives the void complex.
    pub fn from_maximal_faces(ground: IndexSet, maximal: &[IndexSet]) -> Self {
        let mut all = HashSet::new();
        for &m in maximal {
            assert!(m.is_subset(ground), "face {m} outside the ground set {ground}");
            let bits = m.bits();
            // Enumerate submasks of `bits`.
            let mut sub = bits;
            loop {
                all.insert(IndexSet::from_bits(sub));
                if sub == 0 {
                    break;
                }
                sub = (sub - 1) & bits;
            }
        }
        SimplicialComplex::from_closed_faces(ground, all.into_iter().collect())
    }

    /// Builds a complex from a family already closed under subsets.
    pub(crate) fn from_closed_faces(ground: IndexSet, mut faces: Vec<IndexSet>) -> Self {
        faces.sort_by_key(|f| (f.len(), f.bits()));
        faces.dedup();
        let lookup: HashSet<IndexSet> = faces.iter().copied().collect();
        debug_assert!(faces
            .iter()
            .all(|f| f.iter().all(|v| lookup.contains(&f.remove(v)))));
        SimplicialComplex {
            ground,
            faces,
            lookup,
        }
    }

    pub fn ground(&self) -> IndexSet {
        self.ground
    }

    pub fn is_void(&self) -> bool {
        self.faces.is_empty()
    }

    pub fn contains(&self, face: IndexSet) -> bool {
        self.lookup.contains(&face)
    }

    /// All faces, the empty face first.
    pub fn faces(&self) -> &[IndexSet] {
        &self.faces
    }

    pub fn faces_of_size(&self, size: usize) -> impl Iterator<Item = IndexSet> + '_ {
        self.faces.iter().copied().filter(move |f| f.len() == size)
    }

    pub fn vertices(&self) -> IndexSet {
        self.faces_of_size(1).fold(IndexSet::EMPTY, IndexSet::union)
    }

    /// `None` for the void complex, `-1` for `{∅}`.
    pub fn dimension(&self) -> Option<i32> {
        self.faces.last().map(|f| f.len() as i32 - 1)
    }

    /// Faces not contained in a larger face, in face order.
    pub fn maximal_faces(&self) -> Vec<IndexSet> {
        self.faces
            .iter()
            .copied()
            .filter(|&f| {
                self.ground
                    .difference(f)
                    .iter()
                    .all(|v| !self.lookup.contains(&f.insert(v)))
            })
            .collect()
    }

    /// Face counts by size: entry `s` counts faces with `s` vertices.
    pub fn f_vector(&self) -> Vec<u64> {
        let mut f = Vec::new();
        for face in &self.faces {
            let s = face.len();
            if f.len() <= s {
                f.resize(s + 1, 0);
            }
            f[s] += 1;
        }
        f
    }

    /// `Σ_{L ∈ K} (-1)^{|L|-1}`.
    pub fn reduced_euler_characteristic(&self) -> i128 {
        self.faces
            .iter()
            .map(|f| if f.len() % 2 == 1 { 1 } else { -1 })
            .sum()
    }

    /// `K|_J = {L ∈ K : L ⊆ J}` on ground set `J`.
    pub fn full_subcomplex(&self, subset: IndexSet) -> SimplicialComplex {
        let faces = self
            .faces
            .iter()
            .copied()
            .filter(|f| f.is_subset(subset))
            .collect();
        SimplicialComplex {
            ground: subset,
            lookup: HashSet::new(),
            faces,
        }
        .with_lookup()
    }

    fn with_lookup(mut self) -> Self {
        self.lookup = self.faces.iter().copied().collect();
        self
    }

    /// A vertex lying in every maximal face, if any. Such a complex is a
    /// cone and has vanishing reduced homology.
    pub fn cone_apex(&self) -> Option<usize> {
        let maximal = self.maximal_faces();
        let common = maximal
            .iter()
            .copied()
            .reduce(IndexSet::intersection)?;
        common.iter().next()
    }

    /// The cone `K * {apex}`, whose ground set gains `apex`.
    pub fn cone(&self, apex: usize) -> SimplicialComplex {
        assert!(!self.ground.contains(apex), "apex already in the ground set");
        let mut faces = self.faces.clone();
        faces.extend(self.faces.iter().map(|f| f.insert(apex)));
        SimplicialComplex::from_closed_faces(self.ground.insert(apex), faces)
    }

    /// Image under an injective relabeling `v ↦ map[v]`.
    pub fn relabel(&self, map: &[usize]) -> SimplicialComplex {
        let image = |s: IndexSet| s.iter().map(|v| map[v]).collect::<IndexSet>();
        let faces = self.faces.iter().map(|&f| image(f)).collect();
        SimplicialComplex::from_closed_faces(image(self.ground), faces)
    }
}

impl fmt::Display for SimplicialComplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_void() {
            return write!(f, "void");
        }
        let faces: Vec<String> = self.maximal_faces().iter().map(|m| m.to_string()).collect();
        write!(f, "<{}>", faces.join(" "))
    }
}

/// Reduced integral homology, degrees `-1..=dim K`.
///
/// Both the void complex and `{∅}` have `H̃_{-1} = Z`.
pub fn reduced_homology(k: &SimplicialComplex) -> GradedGroup {
    let Some(dim) = k.dimension() else {
        return GradedGroup::z_in(-1);
    };
    if dim < 0 {
        return GradedGroup::z_in(-1);
    }
    if k.cone_apex().is_some() {
        return GradedGroup::zero();
    }
    let top = dim as usize + 1;
    // Chains indexed by face size; size s sits in degree s - 1.
    let mut by_size: Vec<Vec<IndexSet>> = vec![Vec::new(); top + 1];
    for &f in k.faces() {
        by_size[f.len()].push(f);
    }
    let index: Vec<HashMap<IndexSet, usize>> = by_size
        .iter()
        .map(|fs| fs.iter().enumerate().map(|(i, &f)| (f, i)).collect())
        .collect();

    // ranks[s] and torsion[s] describe the boundary from size s to size s-1.
    // Faces of size s - 1 that were unit pivots of the previous boundary are
    // not cycles and are left out of the current one.
    let mut ranks = vec![0usize; top + 2];
    let mut torsion: Vec<Vec<u64>> = vec![Vec::new(); top + 2];
    let mut dropped: Vec<bool> = Vec::new();
    for s in 1..=top {
        let mut m = SparseIntMatrix::new(by_size[s].len(), by_size[s - 1].len());
        for (r, &face) in by_size[s].iter().enumerate() {
            for (j, v) in face.iter().enumerate() {
                let c = index[s - 1][&face.remove(v)];
                if !dropped.get(c).copied().unwrap_or(false) {
                    m.add(r, c, if j % 2 == 0 { 1 } else { -1 });
                }
            }
        }
        let (form, pivots) = m.smith_form_with_pivot_rows();
        ranks[s] = form.rank;
        torsion[s] = form
            .torsion()
            .map(|t| t.to_u64().expect("torsion order fits in u64"))
            .collect();
        dropped = vec![false; by_size[s].len()];
        for p in pivots {
            dropped[p] = true;
        }
    }

    let mut h = GradedGroup::zero();
    for s in 0..=top {
        let free = by_size[s].len() - ranks[s] - ranks[s + 1];
        h.set(
            s as i32 - 1,
            AbelianGroup::new(free as u64, torsion[s + 1].clone()),
        );
    }
    h
}

#[cfg(test)]
mod tests {
    use super::*;

    fn set(v: &[usize]) -> IndexSet {
        v.iter().collect()
    }

    fn hollow_triangle() -> SimplicialComplex {
        SimplicialComplex::from_maximal_faces(
            IndexSet::full(3),
            &[set(&[0, 1]), set(&[1, 2]), set(&[0, 2])],
        )
    }

    #[test]
    fn circle_and_points() {
        assert_eq!(reduced_homology(&hollow_triangle()), GradedGroup::z_in(1));
        let two = SimplicialComplex::from_maximal_faces(IndexSet::full(2), &[set(&[0]), set(&[1])]);
        assert_eq!(reduced_homology(&two), GradedGroup::z_in(0));
    }

    #[test]
    fn empty_conventions() {
        let g = IndexSet::full(3);
        assert_eq!(reduced_homology(&SimplicialComplex::void(g)), GradedGroup::z_in(-1));
        assert_eq!(
            reduced_homology(&SimplicialComplex::only_empty_face(g)),
            GradedGroup::z_in(-1)
        );
        assert_eq!(SimplicialComplex::void(g).dimension(), None);
        assert_eq!(SimplicialComplex::only_empty_face(g).dimension(), Some(-1));
    }

    #[test]
    fn octahedron_is_a_two_sphere() {
        let mut maximal = Vec::new();
        for a in [0, 1] {
            for b in [2, 3] {
                for c in [4, 5] {
                    maximal.push(set(&[a, b, c]));
                }
            }
        }
        let oct = SimplicialComplex::from_maximal_faces(IndexSet::full(6), &maximal);
        assert_eq!(oct.f_vector(), vec![1, 6, 12, 8]);
        assert_eq!(reduced_homology(&oct), GradedGroup::z_in(2));
        assert_eq!(oct.reduced_euler_characteristic(), 1);
    }

    #[test]
    fn projective_plane_has_two_torsion() {
        // Six-vertex triangulation of RP^2.
        let triangles = [
            [0, 1, 2], [0, 2, 3], [0, 3, 4], [0, 4, 5], [0, 5, 1],
            [1, 2, 4], [2, 3, 5], [3, 4, 1], [4, 5, 2], [5, 1, 3],
        ];
        let maximal: Vec<IndexSet> = triangles.iter().map(|t| set(t)).collect();
        let rp2 = SimplicialComplex::from_maximal_faces(IndexSet::full(6), &maximal);
        let h = reduced_homology(&rp2);
        assert_eq!(h.get(1), AbelianGroup::new(0, vec![2]));
        assert_eq!(h.rank(2), 0);
        assert_eq!(h.rank(0), 0);
    }

    #[test]
    fn full_subcomplex_and_cones() {
        let k = hollow_triangle();
        assert_eq!(k.full_subcomplex(k.ground()), k);
        let path = k.full_subcomplex(set(&[0, 1]));
        assert_eq!(path.maximal_faces(), vec![set(&[0, 1])]);
        assert_eq!(reduced_homology(&path), GradedGroup::zero());
        let cone = k.cone(5);
        assert_eq!(cone.cone_apex(), Some(5));
        assert!(reduced_homology(&cone).is_zero());
        assert_eq!(k.to_string(), "<{1,2} {1,3} {2,3}>");
    }
}
