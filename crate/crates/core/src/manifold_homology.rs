//! Homology of `Z`, `Z_+` and `Z^C` assembled from the pairs `(P, P_J)`.
//!
//! `P_J` is the union of the facets `F_j`, `j ∈ J`. Its nerve is the full
//! subcomplex `K|_J` of the dual complex, so `H_d(P, P_J) = H̃_{d-1}(K|_J)`.
//! Then
//!
//! * `H_*(Z)   = ⊕_J H_*(P, P_J)`,
//! * `H_*(Z_+) = ⊕_{J ∌ x} H_*(P, P_J)` for the distinguished coordinate `x`,
//! * `H_i(Z^C) = ⊕_J H_{i-|J|}(P, P_J)`.
//!
//! The `2^n` pairs are evaluated in parallel and merged in binary order of `J`.

use std::fmt;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::complex_homology::{dual_complex, reduced_homology, ConeIndex, GradedGroup, SimplicialComplex};
use crate::config::{Configuration, ValidationReport};
use crate::index_set::IndexSet;

pub const DEFAULT_MAX_N: usize = 20;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct EngineOptions {
    /// Refuse configurations with more coordinates than this.
    pub max_n: usize,
    /// Worker threads; `None` uses the global pool.
    pub jobs: Option<usize>,
}

impl Default for EngineOptions {
    fn default() -> Self {
        EngineOptions {
            max_n: DEFAULT_MAX_N,
            jobs: None,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum HomologyError {
    #[error("configuration is not weakly hyperbolic: origin in the convex hull of {witness}")]
    NotWeaklyHyperbolic { witness: IndexSet },
    #[error("n = {n} exceeds the subset cap {cap}")]
    TooManyCoordinates { n: usize, cap: usize },
    #[error("thread pool: {0}")]
    ThreadPool(String),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Space {
    Z,
    Zplus,
    ZC,
}

impl Space {
    pub const ALL: [Space; 3] = [Space::Z, Space::Zplus, Space::ZC];
}

impl fmt::Display for Space {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Space::Z => "Z",
            Space::Zplus => "Zplus",
            Space::ZC => "ZC",
        })
    }
}

/// One nonzero summand `H_*(P, P_J)`, placed in the total after `shift`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Contribution {
    pub subset: IndexSet,
    pub pair: GradedGroup,
    pub shift: i32,
}

impl Contribution {
    pub fn placed(&self) -> GradedGroup {
        self.pair.shifted(self.shift)
    }
}

/// The splitting of one space into its pair summands.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SplittingLedger {
    pub space: Space,
    /// Nonzero summands in binary order of `J`.
    pub contributions: Vec<Contribution>,
    pub total: GradedGroup,
}

impl SplittingLedger {
    /// Subsets whose placed summand is nonzero in `degree`.
    pub fn subsets_in_degree(&self, degree: i32) -> Vec<IndexSet> {
        self.contributions
            .iter()
            .filter(|c| !c.placed().get(degree).is_zero())
            .map(|c| c.subset)
            .collect()
    }
}

/// A validated configuration with its dual complex.
#[derive(Debug, Clone)]
pub struct Polytope {
    cfg: Configuration,
    complex: SimplicialComplex,
    cones: ConeIndex,
}

impl Polytope {
    pub fn new(cfg: &Configuration) -> Result<Self, HomologyError> {
        if let ValidationReport::Violation { witness } = cfg.validate() {
            return Err(HomologyError::NotWeaklyHyperbolic { witness });
        }
        let complex = dual_complex(cfg);
        let cones = ConeIndex::new(&complex);
        Ok(Polytope {
            cfg: cfg.clone(),
            complex,
            cones,
        })
    }

    pub fn configuration(&self) -> &Configuration {
        &self.cfg
    }

    pub fn dual_complex(&self) -> &SimplicialComplex {
        &self.complex
    }

    /// True when `P = ∅`, hence `Z = ∅`.
    pub fn is_empty(&self) -> bool {
        self.complex.is_void()
    }

    /// `H_*(P, P_J)`.
    pub fn pair_homology(&self, subset: IndexSet) -> GradedGroup {
        if self.is_empty() || self.cones.apex_in(subset).is_some() {
            return GradedGroup::zero();
        }
        reduced_homology(&self.complex.full_subcomplex(subset)).shifted(1)
    }

    pub fn splitting(&self, space: Space, opts: &EngineOptions) -> Result<SplittingLedger, HomologyError> {
        let n = self.cfg.n();
        check_cap(n, opts)?;
        let skip = match space {
            Space::Zplus => Some(self.cfg.distinguished()),
            _ => None,
        };
        let evaluate = || -> Vec<Option<Contribution>> {
            (0..1u64 << n)
                .into_par_iter()
                .map(|bits| {
                    let subset = IndexSet::from_bits(bits);
                    if skip.is_some_and(|x| subset.contains(x)) {
                        return None;
                    }
                    let pair = self.pair_homology(subset);
                    if pair.is_zero() {
                        return None;
                    }
                    let shift = if space == Space::ZC { subset.len() as i32 } else { 0 };
                    Some(Contribution { subset, pair, shift })
                })
                .collect()
        };
        let results = with_jobs(opts, evaluate)?;
        let contributions: Vec<Contribution> = results.into_iter().flatten().collect();
        let mut total = GradedGroup::zero();
        for c in &contributions {
            total.add_assign(&c.placed());
        }
        Ok(SplittingLedger {
            space,
            contributions,
            total,
        })
    }

    /// `Σ_{L ∈ K} (-1)^{dim F_L} 2^{n-|L|}` with `dim F_L = n - k - 1 - |L|`.
    pub fn euler_cellcount(&self) -> i128 {
        let n = self.cfg.n();
        let dim = self.cfg.real_dimension() as i64;
        self.complex
            .faces()
            .iter()
            .map(|face| {
                let copies = 1i128 << (n - face.len());
                if (dim - face.len() as i64).rem_euclid(2) == 0 {
                    copies
                } else {
                    -copies
                }
            })
            .sum()
    }
}

fn check_cap(n: usize, opts: &EngineOptions) -> Result<(), HomologyError> {
    if n > opts.max_n {
        Err(HomologyError::TooManyCoordinates { n, cap: opts.max_n })
    } else {
        Ok(())
    }
}

/// Runs `work` on a pool of `opts.jobs` threads, or on the global pool.
pub fn with_jobs<T: Send>(opts: &EngineOptions, work: impl FnOnce() -> T + Send) -> Result<T, HomologyError> {
    match opts.jobs {
        None => Ok(work()),
        Some(jobs) => {
            let pool = rayon::ThreadPoolBuilder::new()
                .num_threads(jobs)
                .build()
                .map_err(|e| HomologyError::ThreadPool(e.to_string()))?;
            Ok(pool.install(work))
        }
    }
}

pub fn pair_homology(cfg: &Configuration, subset: IndexSet) -> Result<GradedGroup, HomologyError> {
    Ok(Polytope::new(cfg)?.pair_homology(subset))
}

pub fn splitting(cfg: &Configuration, space: Space, opts: &EngineOptions) -> Result<SplittingLedger, HomologyError> {
    check_cap(cfg.n(), opts)?;
    Polytope::new(cfg)?.splitting(space, opts)
}

pub fn homology(cfg: &Configuration, space: Space, opts: &EngineOptions) -> Result<GradedGroup, HomologyError> {
    Ok(splitting(cfg, space, opts)?.total)
}

pub fn homology_z(cfg: &Configuration, opts: &EngineOptions) -> Result<GradedGroup, HomologyError> {
    homology(cfg, Space::Z, opts)
}

pub fn homology_zplus(cfg: &Configuration, opts: &EngineOptions) -> Result<GradedGroup, HomologyError> {
    homology(cfg, Space::Zplus, opts)
}

pub fn homology_zc(cfg: &Configuration, opts: &EngineOptions) -> Result<GradedGroup, HomologyError> {
    homology(cfg, Space::ZC, opts)
}

pub fn euler_cellcount(cfg: &Configuration) -> Result<i128, HomologyError> {
    Ok(Polytope::new(cfg)?.euler_cellcount())
}
