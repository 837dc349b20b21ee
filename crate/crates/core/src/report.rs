//! Deterministic reports for the command line, as text or JSON.
//!
//! Every index shown to a user is 1-based.

use std::collections::BTreeMap;
use std::fmt::{self, Write as _};

use serde::Serialize;

use crate::complex_homology::{dual_complex, GradedGroup};
use crate::config::{Configuration, ValidationReport};
use crate::crossval::BatteryReport;
use crate::cyclic::{classify_complex, classify_real, expected_homology, normal_form, CyclicError, ManifoldDescription};
use crate::index_set::IndexSet;
use crate::manifold_homology::{homology_zplus, EngineOptions, HomologyError, Polytope, Space};
use crate::open_book::{
    boundary_consistency, open_book_complex, open_book_real, page_boundary_homology, page_homology, Binding,
    CheckOutcome, CheckReport, Monodromy, OpenBookError, OpenBookStructure, TwinPolicy, Variant,
};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Text,
    Structured,
}

pub fn render<T: Serialize + fmt::Display>(report: &T, format: Format) -> String {
    match format {
        Format::Text => report.to_string(),
        Format::Structured => {
            let mut s = serde_json::to_string_pretty(report).expect("reports serialize");
            s.push('\n');
            s
        }
    }
}

fn braces(set: &[usize]) -> String {
    let parts: Vec<String> = set.iter().map(usize::to_string).collect();
    format!("{{{}}}", parts.join(","))
}

fn one_based(set: IndexSet) -> Vec<usize> {
    set.to_one_based()
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ValidityReport {
    pub n: usize,
    pub k: usize,
    pub weakly_hyperbolic: bool,
    /// Smallest subset whose coefficients have the origin in their convex hull.
    pub witness: Option<Vec<usize>>,
}

pub fn validity_report(cfg: &Configuration) -> ValidityReport {
    let witness = match cfg.validate() {
        ValidationReport::Ok => None,
        ValidationReport::Violation { witness } => Some(one_based(witness)),
    };
    ValidityReport {
        n: cfg.n(),
        k: cfg.k(),
        weakly_hyperbolic: witness.is_none(),
        witness,
    }
}

impl fmt::Display for ValidityReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "configuration: n = {}, k = {}", self.n, self.k)?;
        match &self.witness {
            None => writeln!(f, "weakly hyperbolic: yes"),
            Some(w) => {
                writeln!(f, "weakly hyperbolic: no")?;
                writeln!(f, "witness: {} (origin in the convex hull of these coefficients)", braces(w))
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DualComplexReport {
    pub n: usize,
    pub polytope_empty: bool,
    pub dimension: Option<i32>,
    /// Entry `s` counts faces with `s` vertices, starting with the empty face.
    pub f_vector: Vec<u64>,
    pub maximal_faces: Vec<Vec<usize>>,
    pub faces: Vec<Vec<usize>>,
}

pub fn dual_complex_report(cfg: &Configuration) -> Result<DualComplexReport, HomologyError> {
    let polytope = Polytope::new(cfg)?;
    let k = dual_complex(cfg);
    Ok(DualComplexReport {
        n: cfg.n(),
        polytope_empty: polytope.is_empty(),
        dimension: k.dimension(),
        f_vector: k.f_vector(),
        maximal_faces: k.maximal_faces().into_iter().map(one_based).collect(),
        faces: k.faces().iter().copied().map(one_based).collect(),
    })
}

impl fmt::Display for DualComplexReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.polytope_empty {
            return writeln!(f, "polytope empty: the dual complex on {} vertices is void", self.n);
        }
        writeln!(f, "dual complex on {} vertices, dimension {}", self.n, self.dimension.unwrap_or(-1))?;
        let fv: Vec<String> = self.f_vector.iter().map(u64::to_string).collect();
        writeln!(f, "f-vector by face size: {}", fv.join(" "))?;
        let maximal: Vec<String> = self.maximal_faces.iter().map(|s| braces(s)).collect();
        writeln!(f, "maximal faces: {}", maximal.join(" "))?;
        let faces: Vec<String> = self.faces.iter().map(|s| braces(s)).collect();
        writeln!(f, "faces: {}", faces.join(" "))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ContributionRow {
    pub subset: Vec<usize>,
    pub shift: i32,
    pub group: GradedGroup,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DegreeSubsets {
    pub degree: i32,
    pub subsets: Vec<Vec<usize>>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SpaceReport {
    pub space: Space,
    pub dimension: usize,
    pub homology: GradedGroup,
    pub euler_characteristic: i128,
    pub contributions: Vec<ContributionRow>,
    pub subsets_by_degree: Vec<DegreeSubsets>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct HomologyReport {
    pub n: usize,
    pub k: usize,
    pub polytope_empty: bool,
    pub spaces: Vec<SpaceReport>,
}

pub fn homology_report(cfg: &Configuration, spaces: &[Space], opts: &EngineOptions) -> Result<HomologyReport, HomologyError> {
    let polytope = Polytope::new(cfg)?;
    let mut reports = Vec::new();
    for &space in spaces {
        let ledger = polytope.splitting(space, opts)?;
        let dimension = match space {
            Space::Z | Space::Zplus => cfg.real_dimension(),
            Space::ZC => cfg.complex_dimension(),
        };
        let mut by_degree: BTreeMap<i32, Vec<Vec<usize>>> = BTreeMap::new();
        for c in &ledger.contributions {
            for (d, _) in c.placed().iter() {
                by_degree.entry(d).or_default().push(one_based(c.subset));
            }
        }
        reports.push(SpaceReport {
            space,
            dimension,
            euler_characteristic: ledger.total.euler_characteristic(),
            contributions: ledger
                .contributions
                .iter()
                .map(|c| ContributionRow {
                    subset: one_based(c.subset),
                    shift: c.shift,
                    group: c.placed(),
                })
                .collect(),
            subsets_by_degree: by_degree
                .into_iter()
                .map(|(degree, subsets)| DegreeSubsets { degree, subsets })
                .collect(),
            homology: ledger.total,
        });
    }
    Ok(HomologyReport {
        n: cfg.n(),
        k: cfg.k(),
        polytope_empty: polytope.is_empty(),
        spaces: reports,
    })
}

impl fmt::Display for SpaceReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{} (dimension {})", self.space, self.dimension)?;
        let top = self.homology.max_degree().map_or(self.dimension as i32, |d| d.max(self.dimension as i32));
        let bottom = self.homology.min_degree().map_or(0, |d| d.min(0));
        for d in bottom..=top {
            writeln!(f, "  H_{d:<3} {}", self.homology.get(d))?;
        }
        writeln!(f, "  euler characteristic {}", self.euler_characteristic)?;
        writeln!(f, "  contributing subsets J:")?;
        if self.subsets_by_degree.is_empty() {
            writeln!(f, "    none")?;
        }
        for row in &self.subsets_by_degree {
            let sets: Vec<String> = row.subsets.iter().map(|s| braces(s)).collect();
            writeln!(f, "    H_{:<3} {} subsets: {}", row.degree, sets.len(), sets.join(" "))?;
        }
        Ok(())
    }
}

impl fmt::Display for HomologyReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "configuration: n = {}, k = {}", self.n, self.k)?;
        if self.polytope_empty {
            writeln!(f, "polytope empty: all spaces are empty")?;
        }
        for s in &self.spaces {
            write!(f, "{s}")?;
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DescriptionReport {
    pub symbol: String,
    pub dimension: usize,
    pub surface_genus: Option<usize>,
    pub flags: Vec<String>,
    pub homology: Option<GradedGroup>,
}

impl DescriptionReport {
    fn new(m: &ManifoldDescription) -> Self {
        DescriptionReport {
            symbol: m.symbol(),
            dimension: m.dimension,
            surface_genus: m.surface_genus(),
            flags: m.flags.iter().map(ToString::to_string).collect(),
            homology: expected_homology(m).ok(),
        }
    }

    fn headline(&self) -> String {
        match self.surface_genus {
            Some(g) => format!("{} [genus {g} surface]", self.symbol),
            None => self.symbol.clone(),
        }
    }

    fn write(&self, f: &mut fmt::Formatter<'_>, name: &str) -> fmt::Result {
        writeln!(f, "{name}: {} (dimension {})", self.headline(), self.dimension)?;
        for flag in &self.flags {
            writeln!(f, "  flag: {flag}")?;
        }
        if let Some(h) = &self.homology {
            writeln!(f, "  homology: {h}")?;
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ClassifyReport {
    pub normal_form: Vec<usize>,
    pub ell: usize,
    /// Configuration coordinates in each class of the normal form.
    pub classes: Vec<Vec<usize>>,
    pub d_values: Vec<usize>,
    pub real: DescriptionReport,
    pub complex: DescriptionReport,
}

pub fn classify_report(cfg: &Configuration) -> Result<ClassifyReport, CyclicError> {
    let form = normal_form(cfg)?;
    let p = &form.partition;
    Ok(ClassifyReport {
        normal_form: p.parts().to_vec(),
        ell: p.ell(),
        classes: form
            .classes
            .iter()
            .map(|c| c.iter().map(|i| i + 1).collect())
            .collect(),
        d_values: p.d_values(),
        real: DescriptionReport::new(&classify_real(p)),
        complex: DescriptionReport::new(&classify_complex(p)),
    })
}

impl fmt::Display for ClassifyReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let nf: Vec<String> = self.normal_form.iter().map(usize::to_string).collect();
        writeln!(f, "normal form: ({})  ell = {}", nf.join(","), self.ell)?;
        let classes: Vec<String> = self.classes.iter().map(|c| braces(c)).collect();
        writeln!(f, "classes: {}", classes.join(" "))?;
        let d: Vec<String> = self.d_values.iter().map(usize::to_string).collect();
        writeln!(f, "d: {}", d.join(" "))?;
        writeln!(f, "Z = {}; Z^C = {}", self.real.headline(), self.complex.headline())?;
        self.real.write(f, "Z")?;
        self.complex.write(f, "Z^C")
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PageReport {
    pub case: char,
    pub symbol: String,
    pub flags: Vec<String>,
    pub homology: GradedGroup,
    pub boundary_homology: GradedGroup,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BindingReport {
    pub empty: bool,
    pub reason: Option<String>,
    pub configuration: Option<Configuration>,
    /// Classification of the binding when it is a `k = 2` variety.
    pub description: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BookReport {
    pub total_dimension: usize,
    pub page_dimension: usize,
    pub binding_dimension: usize,
    pub monodromy: Monodromy,
    pub total: Configuration,
    pub page_space: Configuration,
    /// Coordinate of `page_space` whose sign cuts out the page.
    pub page_coordinate: usize,
    pub binding: BindingReport,
    pub page: Option<PageReport>,
    pub page_homology: GradedGroup,
    pub checks: CheckReport,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BookSection {
    pub variant: Variant,
    pub book: Option<BookReport>,
    pub error: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct OpenBookReport {
    pub coordinate: usize,
    pub real: BookSection,
    pub complex: BookSection,
}

fn describe_binding(cfg: &Configuration) -> Option<String> {
    (cfg.k() == 2)
        .then(|| normal_form(cfg).ok())
        .flatten()
        .map(|form| classify_real(&form.partition).to_string())
}

fn book_report(ob: &OpenBookStructure, opts: &EngineOptions) -> Result<BookReport, HomologyError> {
    let binding = match &ob.binding {
        Binding::Manifold(b) => BindingReport {
            empty: false,
            reason: None,
            configuration: Some(b.clone()),
            description: describe_binding(b),
        },
        Binding::Empty { reason } => BindingReport {
            empty: true,
            reason: Some(reason.clone()),
            configuration: None,
            description: None,
        },
    };
    Ok(BookReport {
        total_dimension: ob.total_dimension,
        page_dimension: ob.page_dimension,
        binding_dimension: ob.binding_dimension,
        monodromy: ob.monodromy,
        total: ob.total.clone(),
        page_space: ob.page_space.clone(),
        page_coordinate: ob.page_space.distinguished() + 1,
        binding,
        page: ob.page.as_ref().map(|pd| PageReport {
            case: pd.case.letter(),
            symbol: pd.symbol(),
            flags: pd.flags.iter().map(ToString::to_string).collect(),
            homology: page_homology(pd),
            boundary_homology: page_boundary_homology(pd),
        }),
        page_homology: homology_zplus(&ob.page_space, opts)?,
        checks: boundary_consistency(ob, opts)?,
    })
}

fn section(variant: Variant, built: Result<OpenBookStructure, OpenBookError>, opts: &EngineOptions) -> Result<BookSection, HomologyError> {
    Ok(match built {
        Ok(ob) => BookSection {
            variant,
            book: Some(book_report(&ob, opts)?),
            error: None,
        },
        Err(OpenBookError::Homology(e)) => return Err(e),
        Err(e) => BookSection {
            variant,
            book: None,
            error: Some(e.to_string()),
        },
    })
}

/// Both open books with binding at coordinate `i` (0-based). The real one
/// duplicates the coordinate when it has no twin.
pub fn open_book_report(cfg: &Configuration, i: usize, opts: &EngineOptions) -> Result<OpenBookReport, HomologyError> {
    Ok(OpenBookReport {
        coordinate: i + 1,
        real: section(Variant::Real, open_book_real(cfg, i, TwinPolicy::AutoDuplicate), opts)?,
        complex: section(Variant::Complex, open_book_complex(cfg, i), opts)?,
    })
}

fn write_checks(f: &mut fmt::Formatter<'_>, checks: &CheckReport) -> fmt::Result {
    for c in &checks.checks {
        match &c.outcome {
            CheckOutcome::Pass => writeln!(f, "    [pass] {}", c.name)?,
            CheckOutcome::Fail { detail } => writeln!(f, "    [FAIL] {}: {detail}", c.name)?,
            CheckOutcome::Skipped { reason } => writeln!(f, "    [skip] {}: {reason}", c.name)?,
        }
    }
    Ok(())
}

impl fmt::Display for BookSection {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let name = match self.variant {
            Variant::Real => "real open book on Z'",
            Variant::Complex => "complex open book on Z^C",
        };
        writeln!(f, "{name}")?;
        let book = match (&self.book, &self.error) {
            (Some(b), _) => b,
            (None, e) => return writeln!(f, "  unavailable: {}", e.as_deref().unwrap_or("unknown")),
        };
        writeln!(
            f,
            "  dimensions: total {}, page {}, binding {}",
            book.total_dimension, book.page_dimension, book.binding_dimension
        )?;
        writeln!(f, "  total space: n = {} coordinates", book.total.n())?;
        match &book.binding {
            BindingReport { empty: true, reason, .. } => {
                writeln!(f, "  binding: empty ({})", reason.as_deref().unwrap_or(""))?
            }
            BindingReport { description, configuration, .. } => {
                let n = configuration.as_ref().map_or(0, Configuration::n);
                match description {
                    Some(d) => writeln!(f, "  binding: {d}  (n = {n})")?,
                    None => writeln!(f, "  binding: n = {n}")?,
                }
            }
        }
        match &book.page {
            Some(p) => {
                writeln!(f, "  page: case {}: {}", p.case, p.symbol)?;
                for flag in &p.flags {
                    writeln!(f, "    flag: {flag}")?;
                }
                writeln!(f, "    homology: {}", p.homology)?;
                writeln!(f, "    boundary homology: {}", p.boundary_homology)?;
            }
            None => writeln!(f, "  page: no symbolic description")?,
        }
        writeln!(f, "  page homology (engine): {}", book.page_homology)?;
        writeln!(f, "  monodromy: trivial")?;
        writeln!(f, "  consistency checks:")?;
        write_checks(f, &book.checks)
    }
}

impl fmt::Display for OpenBookReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "binding at coordinate {}", self.coordinate)?;
        write!(f, "{}", self.real)?;
        write!(f, "{}", self.complex)
    }
}

impl fmt::Display for BatteryReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut per_oracle: BTreeMap<&str, (usize, usize)> = BTreeMap::new();
        for c in &self.checks {
            let entry = per_oracle.entry(&c.oracle).or_default();
            entry.1 += 1;
            if c.passed {
                entry.0 += 1;
            }
        }
        let failed = self.checks.iter().filter(|c| !c.passed).count();
        writeln!(f, "family {}: {} checks, {} failed", self.family, self.checks.len(), failed)?;
        for (oracle, (passed, total)) in per_oracle {
            writeln!(f, "  {passed:>6}/{total:<6} {oracle}")?;
        }
        let mut out = String::new();
        for c in self.failures() {
            let _ = writeln!(out, "FAIL {} [{}]: {}", c.oracle, c.subject, c.detail.as_deref().unwrap_or(""));
        }
        write!(f, "{out}")
    }
}
