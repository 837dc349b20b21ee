//! Integral homology of simplicial complexes and the dual complex of a
//! configuration.

mod complex;
mod dual;
mod graded;
mod smith;

pub use complex::{reduced_homology, SimplicialComplex};
pub use dual::{dual_complex, ConeIndex};
pub use graded::{normalize_torsion, AbelianGroup, DegreeRow, GradedGroup};
pub use smith::{smith_normal_form, IntMatrix, SmithForm, SparseIntMatrix};
