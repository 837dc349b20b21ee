//! Exact topology of generic intersections of quadrics.
//!
//! A configuration `Λ = (λ_1, …, λ_n)` of vectors in `Q^k` determines the
//! real variety `Z`, the moment-angle manifold `Z^C`, the half `Z_+` cut by
//! the distinguished coordinate, and a simple polytope `P`. This crate
//! decides smoothness exactly, computes integral homology of all three
//! spaces from the face structure of `P`, classifies the `k = 2` case from
//! its cyclic normal form and describes the associated open books.

pub mod complex_homology;
pub mod config;
pub mod crossval;
pub mod cyclic;
pub mod feasibility;
pub mod index_set;
pub mod input;
pub mod manifold_homology;
pub mod open_book;
pub mod report;

pub use complex_homology::{
    dual_complex, reduced_homology, smith_normal_form, AbelianGroup, GradedGroup, IntMatrix,
    SimplicialComplex, SmithForm,
};
pub use config::{ConfigError, Configuration, Rational, ValidationReport};
pub use cyclic::{
    classify_complex, classify_real, expected_homology, normal_form, CyclicPartition,
    ManifoldDescription,
};
pub use feasibility::{face_nonempty, feasible, origin_in_convex_hull, LinearSystem};
pub use index_set::IndexSet;
pub use manifold_homology::{
    euler_cellcount, homology_z, homology_zc, homology_zplus, pair_homology, EngineOptions,
    HomologyError, Space,
};
pub use open_book::{
    boundary_consistency, exterior_homology, open_book_complex, open_book_real, page_homology,
    page_topology, OpenBookStructure, PageDescription,
};
