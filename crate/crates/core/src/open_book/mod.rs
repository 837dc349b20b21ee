//! Open book decompositions, symbolic pages and the exterior spaces.

mod exterior;
mod page;
mod structure;

use thiserror::Error;

use crate::config::ConfigError;
use crate::cyclic::CyclicError;
use crate::index_set::IndexSet;
use crate::manifold_homology::HomologyError;

pub use exterior::{exterior_homology, ExteriorSpace};
pub use page::{
    page_boundary_homology, page_homology, page_topology, PageCase, PageDescription, PageFlag,
    Piece, Variant,
};
pub use structure::{
    boundary_consistency, open_book_complex, open_book_real, Binding, Check, CheckOutcome,
    CheckReport, Monodromy, OpenBookStructure, TwinPolicy,
};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OpenBookError {
    #[error("exterior E({p},{q};{m}) needs m > p + q")]
    ExteriorDimension { p: usize, q: usize, m: usize },
    #[error("class {class} out of range for {count} classes")]
    ClassOutOfRange { class: usize, count: usize },
    #[error("coordinate {} has no twin coefficient; duplicate it first", .0 + 1)]
    NoTwin(usize),
    #[error("configuration is not weakly hyperbolic: origin in the convex hull of {0}")]
    NotWeaklyHyperbolic(IndexSet),
    #[error("binding not smooth (origin in the convex hull of {0}); open book invalid for this facet")]
    BindingNotSmooth(IndexSet),
    #[error(transparent)]
    Config(ConfigError),
    #[error(transparent)]
    Cyclic(CyclicError),
    #[error(transparent)]
    Homology(HomologyError),
}
