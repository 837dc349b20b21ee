//! The planar case `k = 2`: cyclic normal form and classification.

mod classify;
mod normal_form;
mod partition;

use thiserror::Error;

use crate::index_set::IndexSet;

pub use classify::{
    classify_complex, classify_real, expected_homology, sphere_product_homology, DescriptionKind,
    Factor, Hypothesis, ManifoldDescription, Summand,
};
pub use normal_form::{normal_form, NormalForm};
pub use partition::{canonical_partitions, compositions, CyclicPartition};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CyclicError {
    #[error("a cyclic partition needs at least 3 parts, got {0}")]
    TooFewClasses(usize),
    #[error("a cyclic partition needs an odd number of parts, got {0}")]
    EvenClassCount(usize),
    #[error("partition parts must be positive")]
    ZeroPart,
    #[error("partition of {0} exceeds the coordinate limit")]
    TooManyCoordinates(usize),
    #[error("class {class} out of range for {count} classes")]
    ClassOutOfRange { class: usize, count: usize },
    #[error("normal forms need k = 2, got k = {0}")]
    NotPlanar(usize),
    #[error("configuration is not weakly hyperbolic: origin in the convex hull of {0}")]
    NotWeaklyHyperbolic(IndexSet),
    #[error("the polytope is empty, so Z is empty and has no normal form")]
    EmptyPolytope,
    #[error("normal form self-check failed: {0}")]
    SelfCheck(String),
    #[error("description has boundary summands")]
    BoundarySummand,
}
