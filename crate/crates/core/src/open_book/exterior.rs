//! The exterior `E(p,q;m)` of the standard `S^p × S^q ⊂ S^m`.

use std::fmt;

use serde::Serialize;

use super::OpenBookError;
use crate::complex_homology::{AbelianGroup, GradedGroup};
use crate::cyclic::sphere_product_homology;

/// Complement in `S^m` of an open tubular neighbourhood of `S^p × S^q`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub struct ExteriorSpace {
    pub p: usize,
    pub q: usize,
    pub m: usize,
}

impl ExteriorSpace {
    pub fn new(p: usize, q: usize, m: usize) -> Result<Self, OpenBookError> {
        if m <= p + q {
            return Err(OpenBookError::ExteriorDimension { p, q, m });
        }
        Ok(ExteriorSpace { p, q, m })
    }

    /// Dimension of the normal sphere, `m - p - q - 1`.
    pub fn normal_dimension(&self) -> usize {
        self.m - self.p - self.q - 1
    }

    /// Free, with `Z` in degrees `0`, `m-p-q-1`, `m-q-1`, `m-p-1` (Alexander duality).
    pub fn homology(&self) -> GradedGroup {
        let mut h = GradedGroup::z_in(0);
        for d in [self.normal_dimension(), self.m - self.q - 1, self.m - self.p - 1] {
            h.add_group(d as i32, &AbelianGroup::free(1));
        }
        h
    }

    /// `∂E = S^p × S^q × S^{m-p-q-1}`.
    pub fn boundary_homology(&self) -> GradedGroup {
        sphere_product_homology(&[self.p, self.q, self.normal_dimension()])
    }

    /// The characterization by boundary and homology needs `X` and `∂X`
    /// simply connected, which forces `p, q, m-p-q-1 ≥ 2`.
    pub fn in_characterization_regime(&self) -> bool {
        self.p >= 2 && self.q >= 2 && self.normal_dimension() >= 2
    }
}

impl fmt::Display for ExteriorSpace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "E({},{};{})", self.p, self.q, self.m)
    }
}

pub fn exterior_homology(p: usize, q: usize, m: usize) -> Result<GradedGroup, OpenBookError> {
    Ok(ExteriorSpace::new(p, q, m)?.homology())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn golden_exteriors() {
        assert_eq!(
            exterior_homology(1, 1, 6).unwrap(),
            GradedGroup::from_betti(&[1, 0, 0, 1, 2, 0, 0])
        );
        assert_eq!(exterior_homology(0, 0, 4).unwrap(), GradedGroup::from_betti(&[1, 0, 0, 3]));
        assert_eq!(
            exterior_homology(1, 2, 3),
            Err(OpenBookError::ExteriorDimension { p: 1, q: 2, m: 3 })
        );
    }

    #[test]
    fn boundary_euler_characteristic_doubles() {
        // χ(∂E) = 2χ(E) whenever E is odd dimensional, and χ(∂E) = 0 always
        // since ∂E is an odd-dimensional closed manifold.
        for m in 1..9 {
            for p in 0..m {
                for q in 0..m - p {
                    let e = ExteriorSpace::new(p, q, m).unwrap();
                    let chi_e = e.homology().euler_characteristic();
                    let chi_b = e.boundary_homology().euler_characteristic();
                    if m % 2 == 1 {
                        assert_eq!(chi_b, 2 * chi_e, "{e}");
                    } else {
                        assert_eq!(chi_b, 0, "{e}");
                    }
                }
            }
        }
        assert!(!ExteriorSpace::new(1, 1, 6).unwrap().in_characterization_regime());
        assert!(ExteriorSpace::new(2, 2, 7).unwrap().in_characterization_regime());
    }
}
