//! Open books with trivial monodromy on `Z'` and on `Z^C`.
//!
//! For a configuration with a repeated coefficient `λ_i = λ_j`, the variety
//! `Z'` fibres over the circle away from `x_i = x_j = 0`. The binding is
//! `Z_0` of the configuration with the copy `j` removed and the page is the
//! interior of its `Z_+` (cut by `x_i ≥ 0`). The moment-angle manifold is the
//! `Z'` of its own complexification, which gives the complex case.

use serde::Serialize;

use super::page::{page_boundary_homology, page_homology, page_topology, PageDescription, Variant};
use super::OpenBookError;
use crate::complex_homology::GradedGroup;
use crate::config::{Configuration, ValidationReport};
use crate::cyclic::normal_form;
use crate::manifold_homology::{homology_z, homology_zplus, EngineOptions, HomologyError, Polytope};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Monodromy {
    Trivial,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TwinPolicy {
    /// The coordinate must already have a twin.
    Strict,
    /// Duplicate the coordinate when it has no twin.
    AutoDuplicate,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub enum Binding {
    /// `Z` of this configuration is the binding.
    Manifold(Configuration),
    /// The binding is empty; the whole space fibres over the circle.
    Empty { reason: String },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct OpenBookStructure {
    pub variant: Variant,
    /// Configuration whose `Z` is the total space.
    pub total: Configuration,
    /// Configuration whose `Z_+` (cut by its distinguished coordinate) is the page.
    pub page_space: Configuration,
    pub binding: Binding,
    /// Symbolic page for `k = 2`.
    pub page: Option<PageDescription>,
    pub monodromy: Monodromy,
    pub total_dimension: usize,
    pub page_dimension: usize,
    pub binding_dimension: usize,
}

fn ensure_valid(cfg: &Configuration) -> Result<(), OpenBookError> {
    match cfg.validate() {
        ValidationReport::Ok => Ok(()),
        ValidationReport::Violation { witness } => Err(OpenBookError::NotWeaklyHyperbolic(witness)),
    }
}

/// `Z_0` of `page_space`, or an empty binding.
fn binding_of(cut: Result<Configuration, crate::config::ConfigError>) -> Result<Binding, OpenBookError> {
    let cfg = match cut {
        Ok(cfg) => cfg,
        Err(e) => {
            return Ok(Binding::Empty {
                reason: format!("deleting the coordinate leaves no variety: {e}"),
            })
        }
    };
    if let ValidationReport::Violation { witness } = cfg.validate() {
        return Err(OpenBookError::BindingNotSmooth(witness));
    }
    let polytope = Polytope::new(&cfg).map_err(OpenBookError::Homology)?;
    if polytope.is_empty() {
        return Ok(Binding::Empty {
            reason: "the binding polytope is empty".to_string(),
        });
    }
    Ok(Binding::Manifold(cfg))
}

/// Symbolic page when `k = 2` and `Z` is non-empty.
fn symbolic_page(cfg: &Configuration, coordinate: usize, variant: Variant) -> Result<Option<PageDescription>, OpenBookError> {
    if cfg.k() != 2 {
        return Ok(None);
    }
    let form = match normal_form(cfg) {
        Ok(form) => form,
        Err(crate::cyclic::CyclicError::EmptyPolytope) => return Ok(None),
        Err(e) => return Err(OpenBookError::Cyclic(e)),
    };
    let class = form.class_of(coordinate);
    Ok(Some(page_topology(&form.partition, class, variant)?))
}

/// Open book on `Z'` with binding at the twin pair of coordinate `i`.
pub fn open_book_real(cfg: &Configuration, i: usize, policy: TwinPolicy) -> Result<OpenBookStructure, OpenBookError> {
    ensure_valid(cfg)?;
    if i >= cfg.n() {
        return Err(OpenBookError::Config(crate::config::ConfigError::IndexOutOfRange { index: i, n: cfg.n() }));
    }
    let (total, twin) = match cfg.twins(i).next() {
        Some(t) => (cfg.clone().with_distinguished(t).map_err(OpenBookError::Config)?, t),
        None => match policy {
            TwinPolicy::Strict => return Err(OpenBookError::NoTwin(i)),
            TwinPolicy::AutoDuplicate => (cfg.duplicate_coordinate(i).map_err(OpenBookError::Config)?, i + 1),
        },
    };
    let page_space = total
        .delete_coordinate(twin)
        .and_then(|c| c.with_distinguished(if i < twin { i } else { i - 1 }))
        .map_err(OpenBookError::Config)?;
    let x = page_space.distinguished();
    let binding = binding_of(page_space.delete_coordinate(x))?;
    let page = symbolic_page(&page_space, x, Variant::Real)?;
    let total_dimension = total.real_dimension();
    Ok(OpenBookStructure {
        variant: Variant::Real,
        page_dimension: page_space.real_dimension(),
        binding_dimension: total_dimension - 2,
        total_dimension,
        total,
        page_space,
        binding,
        page,
        monodromy: Monodromy::Trivial,
    })
}

/// Open book on `Z^C` with binding `Z^C` of the configuration without `λ_i`.
pub fn open_book_complex(cfg: &Configuration, i: usize) -> Result<OpenBookStructure, OpenBookError> {
    ensure_valid(cfg)?;
    if i >= cfg.n() {
        return Err(OpenBookError::Config(crate::config::ConfigError::IndexOutOfRange { index: i, n: cfg.n() }));
    }
    let total = cfg
        .complexify()
        .and_then(|c| c.with_distinguished(2 * i + 1))
        .map_err(OpenBookError::Config)?;
    let page_space = total
        .delete_coordinate(2 * i + 1)
        .and_then(|c| c.with_distinguished(2 * i))
        .map_err(OpenBookError::Config)?;
    let binding = binding_of(cfg.delete_coordinate(i).and_then(|c| c.complexify()))?;
    let page = symbolic_page(cfg, i, Variant::Complex)?;
    let total_dimension = total.real_dimension();
    Ok(OpenBookStructure {
        variant: Variant::Complex,
        page_dimension: page_space.real_dimension(),
        binding_dimension: total_dimension - 2,
        total_dimension,
        total,
        page_space,
        binding,
        page,
        monodromy: Monodromy::Trivial,
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub enum CheckOutcome {
    Pass,
    Fail { detail: String },
    Skipped { reason: String },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Check {
    pub name: String,
    pub outcome: CheckOutcome,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CheckReport {
    pub checks: Vec<Check>,
}

impl CheckReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| !matches!(c.outcome, CheckOutcome::Fail { .. }))
    }

    pub fn outcome(&self, name: &str) -> Option<&CheckOutcome> {
        self.checks.iter().find(|c| c.name == name).map(|c| &c.outcome)
    }

    fn push(&mut self, name: &str, outcome: CheckOutcome) {
        self.checks.push(Check {
            name: name.to_string(),
            outcome,
        });
    }

    fn compare<T: PartialEq + std::fmt::Debug>(&mut self, name: &str, left: T, right: T) {
        let outcome = if left == right {
            CheckOutcome::Pass
        } else {
            CheckOutcome::Fail {
                detail: format!("{left:?} != {right:?}"),
            }
        };
        self.push(name, outcome);
    }
}

pub fn boundary_consistency(obs: &OpenBookStructure, opts: &EngineOptions) -> Result<CheckReport, HomologyError> {
    let mut report = CheckReport { checks: Vec::new() };
    report.compare("page dimension = total - 1", obs.page_dimension + 1, obs.total_dimension);
    match &obs.binding {
        Binding::Manifold(b) => {
            report.compare("binding dimension = total - 2", b.real_dimension() + 2, obs.total_dimension)
        }
        Binding::Empty { .. } => report.push(
            "binding dimension = total - 2",
            CheckOutcome::Skipped {
                reason: "empty binding".to_string(),
            },
        ),
    }

    let binding_h = match &obs.binding {
        Binding::Manifold(b) => homology_z(b, opts)?,
        Binding::Empty { .. } => GradedGroup::zero(),
    };
    let total_h = homology_z(&obs.total, opts)?;
    let page_h = homology_zplus(&obs.page_space, opts)?;
    let double_h = homology_z(&obs.page_space, opts)?;
    let chi_binding = binding_h.euler_characteristic();
    let chi_page = page_h.euler_characteristic();

    match &obs.page {
        Some(pd) => {
            report.compare("binding homology = boundary of symbolic page", binding_h.clone(), page_boundary_homology(pd));
            report.compare("symbolic page homology = engine page homology", page_homology(pd), page_h.clone());
        }
        None => {
            let reason = "no symbolic page (k != 2 or empty variety)".to_string();
            for name in [
                "binding homology = boundary of symbolic page",
                "symbolic page homology = engine page homology",
            ] {
                report.push(name, CheckOutcome::Skipped { reason: reason.clone() });
            }
        }
    }

    report.compare("chi(total) = chi(binding)", total_h.euler_characteristic(), chi_binding);
    if obs.binding_dimension % 2 == 1 {
        report.compare("odd-dimensional binding has chi = 0", chi_binding, 0);
    } else {
        report.push(
            "odd-dimensional binding has chi = 0",
            CheckOutcome::Skipped {
                reason: format!("binding dimension {} is even", obs.binding_dimension),
            },
        );
    }
    if obs.page_dimension % 2 == 1 {
        report.compare("odd-dimensional page: chi(binding) = 2 chi(page)", chi_binding, 2 * chi_page);
    } else {
        report.push(
            "odd-dimensional page: chi(binding) = 2 chi(page)",
            CheckOutcome::Skipped {
                reason: format!("page dimension {} is even", obs.page_dimension),
            },
        );
    }
    report.compare(
        "doubling: chi(Z) = 2 chi(page) - chi(binding)",
        double_h.euler_characteristic(),
        2 * chi_page - chi_binding,
    );
    Ok(report)
}
