//! Symbolic topology of the half manifold `Z_+` for `k = 2`, which is the
//! page of the open books.
//!
//! Grammar: `S(p)` sphere, `D(p)` disk, `x` product, `#b` connected sum along
//! the boundary, `PP(p,q;m)` the product `S^p × S^q` with an open `m`-disk
//! removed, `E(p,q;m)` the exterior space.

use std::fmt;

use serde::Serialize;

use super::exterior::ExteriorSpace;
use super::OpenBookError;
use crate::complex_homology::{AbelianGroup, GradedGroup};
use crate::cyclic::{sphere_product_homology, CyclicPartition, Factor};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum Variant {
    /// `Z_+` of the real variety.
    Real,
    /// The page of the open book on the moment-angle manifold.
    Complex,
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub enum Piece {
    Product(Vec<Factor>),
    SphereDisk { sphere: usize, disk: usize },
    DiskSphere { disk: usize, sphere: usize },
    PuncturedProduct { p: usize, q: usize, m: usize },
    Exterior(ExteriorSpace),
}

impl Piece {
    pub fn dimension(&self) -> usize {
        match self {
            Piece::Product(factors) => factors.iter().map(|f| f.dimension()).sum(),
            Piece::SphereDisk { sphere, disk } | Piece::DiskSphere { disk, sphere } => sphere + disk,
            Piece::PuncturedProduct { m, .. } => *m,
            Piece::Exterior(e) => e.m,
        }
    }

    pub fn homology(&self) -> GradedGroup {
        match self {
            Piece::Product(factors) => {
                let spheres: Vec<usize> = factors
                    .iter()
                    .filter_map(|f| match f {
                        Factor::Sphere(d) => Some(*d),
                        Factor::Disk(_) => None,
                    })
                    .collect();
                sphere_product_homology(&spheres)
            }
            Piece::SphereDisk { sphere, .. } | Piece::DiskSphere { sphere, .. } => {
                sphere_product_homology(&[*sphere])
            }
            Piece::PuncturedProduct { p, q, .. } => {
                // Removing a disk kills the top class of S^p × S^q.
                let mut h = sphere_product_homology(&[*p, *q]);
                let top = (p + q) as i32;
                let rank = h.rank(top);
                h.set(top, AbelianGroup::free(rank - 1));
                h
            }
            Piece::Exterior(e) => e.homology(),
        }
    }

    /// Homology of the boundary; zero when the piece is closed.
    pub fn boundary_homology(&self) -> GradedGroup {
        match self {
            Piece::Product(factors) => {
                let mut spheres = Vec::new();
                for f in factors {
                    match *f {
                        Factor::Sphere(d) => spheres.push(d),
                        Factor::Disk(0) => return GradedGroup::zero(),
                        Factor::Disk(d) => spheres.push(d - 1),
                    }
                }
                if factors.iter().any(|f| matches!(f, Factor::Disk(_))) {
                    sphere_product_homology(&spheres)
                } else {
                    GradedGroup::zero()
                }
            }
            Piece::SphereDisk { sphere, disk } => match disk {
                0 => GradedGroup::zero(),
                d => sphere_product_homology(&[*sphere, d - 1]),
            },
            Piece::DiskSphere { disk, sphere } => match disk {
                0 => GradedGroup::zero(),
                d => sphere_product_homology(&[d - 1, *sphere]),
            },
            Piece::PuncturedProduct { m, .. } => sphere_product_homology(&[m - 1]),
            Piece::Exterior(e) => e.boundary_homology(),
        }
    }
}

impl fmt::Display for Piece {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Piece::Product(factors) => {
                let parts: Vec<String> = factors
                    .iter()
                    .map(|factor| match factor {
                        Factor::Sphere(d) => format!("S({d})"),
                        Factor::Disk(d) => format!("D({d})"),
                    })
                    .collect();
                write!(f, "{}", parts.join(" x "))
            }
            Piece::SphereDisk { sphere, disk } => write!(f, "S({sphere}) x D({disk})"),
            Piece::DiskSphere { disk, sphere } => write!(f, "D({disk}) x S({sphere})"),
            Piece::PuncturedProduct { p, q, m } => write!(f, "PP({p},{q};{m})"),
            Piece::Exterior(e) => write!(f, "{e}"),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum PageCase {
    /// `ℓ = 1`: a product.
    A,
    /// `ℓ > 1`, `n_1 > 1`: boundary connected sum of `2ℓ+1` pieces.
    B,
    /// `n_1 = 1`, `ℓ > 2`: `2ℓ` pieces, one a punctured product.
    C,
    /// `n_1 = 1`, `ℓ = 2`: punctured product and exterior.
    D,
}

impl PageCase {
    pub fn select(ell: usize, n1: usize) -> PageCase {
        match (ell, n1) {
            (1, _) => PageCase::A,
            (_, n1) if n1 > 1 => PageCase::B,
            (2, _) => PageCase::D,
            _ => PageCase::C,
        }
    }

    pub fn letter(self) -> char {
        match self {
            PageCase::A => 'a',
            PageCase::B => 'b',
            PageCase::C => 'c',
            PageCase::D => 'd',
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub enum PageFlag {
    /// Real case with `ℓ > 1`: the formula assumes `Z` and `Z_0` simply connected.
    Pi1Assumed,
    /// Real case with `ℓ > 1` and `dim Z < 6`.
    OutsideDimensionHypothesis { dimension: usize },
    /// An exterior piece outside the regime where it is characterized by
    /// boundary and homology.
    ExteriorOutsideLemma(ExteriorSpace),
}

impl fmt::Display for PageFlag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PageFlag::Pi1Assumed => write!(f, "assumes Z and Z_0 simply connected"),
            PageFlag::OutsideDimensionHypothesis { dimension } => {
                write!(f, "formula outside stated hypotheses: dim Z = {dimension} < 6")
            }
            PageFlag::ExteriorOutsideLemma(e) => {
                write!(f, "{e} outside the simply connected regime (p, q, m-p-q-1 >= 2)")
            }
        }
    }
}

/// A page as a compact manifold with boundary; the open page is its interior.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PageDescription {
    pub variant: Variant,
    pub case: PageCase,
    /// The partition rotated so that the distinguished class comes first.
    pub partition: CyclicPartition,
    pub dimension: usize,
    pub pieces: Vec<Piece>,
    pub flags: Vec<PageFlag>,
}

impl PageDescription {
    pub fn symbol(&self) -> String {
        let parts: Vec<String> = self.pieces.iter().map(Piece::to_string).collect();
        parts.join(" #b ")
    }
}

impl fmt::Display for PageDescription {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "case {}: {}", self.case.letter(), self.symbol())
    }
}

/// Page topology with the distinguished coordinate in class `class`
/// (0-based position in `p`). Only a rotation is applied, never a reflection.
pub fn page_topology(p: &CyclicPartition, class: usize, variant: Variant) -> Result<PageDescription, OpenBookError> {
    if class >= p.num_classes() {
        return Err(OpenBookError::ClassOutOfRange {
            class,
            count: p.num_classes(),
        });
    }
    let rotated = p.rotated(class);
    let ell = rotated.ell();
    let n = rotated.n();
    let parts = rotated.parts();
    let d = rotated.d_values();
    // 1-based cyclic accessors.
    let n_at = |i: usize| parts[(i - 1) % parts.len()];
    let d_at = |i: usize| d[(i - 1) % d.len()];
    let case = PageCase::select(ell, parts[0]);
    let dimension = match variant {
        Variant::Real => n - 3,
        Variant::Complex => 2 * n - 4,
    };
    let sphere_disk = |i: usize| match variant {
        Variant::Real => Piece::SphereDisk {
            sphere: d_at(i) - 1,
            disk: n - d_at(i) - 2,
        },
        Variant::Complex => Piece::SphereDisk {
            sphere: 2 * d_at(i) - 1,
            disk: 2 * n - 2 * d_at(i) - 3,
        },
    };
    let disk_sphere = |i: usize| match variant {
        Variant::Real => Piece::DiskSphere {
            disk: d_at(i) - 1,
            sphere: n - d_at(i) - 2,
        },
        Variant::Complex => Piece::DiskSphere {
            disk: 2 * d_at(i) - 2,
            sphere: 2 * n - 2 * d_at(i) - 2,
        },
    };
    let punctured = |a: usize, b: usize| match variant {
        Variant::Real => Piece::PuncturedProduct {
            p: d_at(a) - 1,
            q: d_at(b) - 1,
            m: n - 3,
        },
        Variant::Complex => Piece::PuncturedProduct {
            p: 2 * d_at(a) - 1,
            q: 2 * d_at(b) - 1,
            m: 2 * n - 4,
        },
    };
    // Index ranges `ℓ+3 ..= 1` run cyclically through 2ℓ+1 back to 1.
    let wrap_range = || (ell + 3..=2 * ell + 1).chain(std::iter::once(1));

    let pieces = match case {
        PageCase::A => {
            let factors = match variant {
                Variant::Real => vec![
                    Factor::Sphere(n_at(2) - 1),
                    Factor::Sphere(n_at(3) - 1),
                    Factor::Disk(n_at(1) - 1),
                ],
                Variant::Complex => vec![
                    Factor::Sphere(2 * n_at(2) - 1),
                    Factor::Sphere(2 * n_at(3) - 1),
                    Factor::Disk(2 * n_at(1) - 2),
                ],
            };
            vec![Piece::Product(factors)]
        }
        PageCase::B => (2..=ell + 2)
            .map(sphere_disk)
            .chain(wrap_range().map(disk_sphere))
            .collect(),
        PageCase::C => (3..=ell + 1)
            .map(sphere_disk)
            .chain(wrap_range().map(disk_sphere))
            .chain(std::iter::once(punctured(2, ell + 2)))
            .collect(),
        PageCase::D => {
            let exterior = match variant {
                Variant::Real => ExteriorSpace::new(n_at(2) - 1, n_at(5) - 1, n - 3)?,
                Variant::Complex => ExteriorSpace::new(2 * n_at(2) - 1, 2 * n_at(5) - 1, 2 * n - 4)?,
            };
            vec![punctured(2, 4), Piece::Exterior(exterior)]
        }
    };
    debug_assert!(pieces.iter().all(|piece| piece.dimension() == dimension));

    let mut flags = Vec::new();
    if variant == Variant::Real && ell > 1 {
        flags.push(PageFlag::Pi1Assumed);
        if n - 3 < 6 {
            flags.push(PageFlag::OutsideDimensionHypothesis { dimension: n - 3 });
        }
    }
    for piece in &pieces {
        if let Piece::Exterior(e) = piece {
            if !e.in_characterization_regime() {
                flags.push(PageFlag::ExteriorOutsideLemma(*e));
            }
        }
    }
    Ok(PageDescription {
        variant,
        case,
        partition: rotated,
        dimension,
        pieces,
        flags,
    })
}

/// Homology of a boundary connected sum: components merge, higher degrees add.
fn boundary_sum(groups: impl Iterator<Item = GradedGroup>) -> GradedGroup {
    let mut total = GradedGroup::zero();
    let mut count = 0u64;
    for g in groups {
        total.add_assign(&g);
        count += 1;
    }
    if count > 1 {
        let h0 = total.rank(0);
        total.set(0, AbelianGroup::free(h0 - (count - 1)));
    }
    total
}

pub fn page_homology(pd: &PageDescription) -> GradedGroup {
    boundary_sum(pd.pieces.iter().map(Piece::homology))
}

/// Homology of `∂(page)`. Boundaries of the pieces are joined by an
/// interior connected sum, which merges one component and one top class
/// per gluing.
pub fn page_boundary_homology(pd: &PageDescription) -> GradedGroup {
    let boundaries: Vec<GradedGroup> = pd
        .pieces
        .iter()
        .map(Piece::boundary_homology)
        .filter(|g| !g.is_zero())
        .collect();
    let count = boundaries.len() as u64;
    let mut total = GradedGroup::zero();
    for g in &boundaries {
        total.add_assign(g);
    }
    if count > 1 && pd.dimension >= 1 {
        let top = pd.dimension as i32 - 1;
        // For a 1-dimensional page both subtractions hit degree 0.
        for d in [0, top] {
            let r = total.rank(d);
            total.set(d, AbelianGroup::free(r - (count - 1)));
        }
    }
    total
}
