//! The oracle battery: independent routes to the same homology must agree.

use std::fmt;

use rayon::prelude::*;
use serde::Serialize;

use crate::config::Configuration;
use crate::cyclic::{
    canonical_partitions, classify_complex, classify_real, expected_homology, normal_form,
    CyclicPartition,
};
use crate::manifold_homology::{
    homology_z, homology_zc, homology_zplus, with_jobs, EngineOptions, HomologyError, Polytope, Space,
};
use crate::open_book::{page_homology, page_topology, Variant};

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct OracleCheck {
    pub oracle: String,
    pub subject: String,
    pub passed: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub detail: Option<String>,
}

impl OracleCheck {
    fn compare<T: PartialEq + fmt::Display>(oracle: &str, subject: &str, expected: &T, actual: &T) -> Self {
        let passed = expected == actual;
        OracleCheck {
            oracle: oracle.to_string(),
            subject: subject.to_string(),
            passed,
            detail: (!passed).then(|| format!("expected {expected}, engine gave {actual}")),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BatteryReport {
    pub family: String,
    pub checks: Vec<OracleCheck>,
}

impl BatteryReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn failures(&self) -> impl Iterator<Item = &OracleCheck> {
        self.checks.iter().filter(|c| !c.passed)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Family {
    /// Canonical cyclic partitions with `3 ≤ n ≤ max_n`.
    Partitions { max_n: usize },
}

impl Family {
    /// Parses `partitions n<=N`.
    pub fn parse(text: &str) -> Option<Family> {
        let rest = text.trim().strip_prefix("partitions")?.trim();
        let bound = rest.strip_prefix("n<=")?.trim();
        bound.parse().ok().map(|max_n| Family::Partitions { max_n })
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Family::Partitions { max_n } => write!(f, "partitions n<={max_n}"),
        }
    }
}

/// Ranks in degrees `0..=top` as `(b0,b1,…)`.
struct Ranks(Vec<u64>);

impl fmt::Display for Ranks {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(u64::to_string).collect();
        write!(f, "({})", parts.join(","))
    }
}

impl PartialEq for Ranks {
    fn eq(&self, other: &Self) -> bool {
        self.0 == other.0
    }
}

/// Checks valid for any weakly hyperbolic configuration: the doubling
/// oracle, Euler conservation, `Z_+` as a sub-sum of `Z` and Poincaré
/// duality of ranks for the closed manifold `Z^C`.
pub fn configuration_checks(subject: &str, cfg: &Configuration, opts: &EngineOptions) -> Result<Vec<OracleCheck>, HomologyError> {
    let polytope = Polytope::new(cfg)?;
    let z = polytope.splitting(Space::Z, opts)?.total;
    let zc = polytope.splitting(Space::ZC, opts)?.total;
    let zplus = polytope.splitting(Space::Zplus, opts)?.total;
    let doubled = cfg.complexify().expect("complexified configuration fits");
    let mut checks = vec![
        OracleCheck::compare("doubling: H(Z^C) = H(Z(complexify))", subject, &homology_z(&doubled, opts)?, &zc),
        OracleCheck::compare(
            "euler: cell count = alternating Betti sum",
            subject,
            &polytope.euler_cellcount(),
            &z.euler_characteristic(),
        ),
    ];
    let sub_sum = z
        .iter()
        .chain(zplus.iter())
        .all(|(d, _)| zplus.rank(d) <= z.rank(d));
    checks.push(OracleCheck {
        oracle: "sub-sum: rank H(Z_+) <= rank H(Z)".to_string(),
        subject: subject.to_string(),
        passed: sub_sum,
        detail: (!sub_sum).then(|| format!("Z_+ {zplus} vs Z {z}")),
    });
    if !polytope.is_empty() {
        let top = cfg.complex_dimension() as i32;
        let ranks = zc.betti(top);
        let mirrored: Vec<u64> = ranks.iter().rev().copied().collect();
        checks.push(OracleCheck::compare(
            "poincare: rank H_i(Z^C) = rank H_{dim-i}(Z^C)",
            subject,
            &Ranks(mirrored),
            &Ranks(ranks),
        ));
    }
    Ok(checks)
}

/// The real configuration whose `Z_+` is the page of the complex open book
/// with binding in class 0: partition `(2n_1 - 1, 2n_2, …, 2n_{2ℓ+1})`.
pub fn complex_page_partition(p: &CyclicPartition) -> CyclicPartition {
    let mut parts: Vec<usize> = p.parts().iter().map(|&x| 2 * x).collect();
    parts[0] -= 1;
    CyclicPartition::new(parts).expect("doubled partition is valid")
}

/// Formula checks for one partition: normal form round trip, both
/// classifications and the page of every class in both variants.
pub fn partition_checks(p: &CyclicPartition, opts: &EngineOptions, pages: bool) -> Result<Vec<OracleCheck>, HomologyError> {
    let subject = p.to_string();
    let cfg = p.realize();
    let mut checks = Vec::new();

    let recovered = normal_form(&cfg).map(|f| f.partition.to_string()).unwrap_or_else(|e| e.to_string());
    checks.push(OracleCheck::compare("normal form of realization", &subject, &p.canonical().to_string(), &recovered));

    let complex = expected_homology(&classify_complex(p)).expect("closed description");
    checks.push(OracleCheck::compare("complex formula = H(Z^C)", &subject, &complex, &homology_zc(&cfg, opts)?));
    let real = expected_homology(&classify_real(p)).expect("closed description");
    let z = homology_z(&cfg, opts)?;
    checks.push(OracleCheck::compare(
        "real formula Betti numbers = H(Z)",
        &subject,
        &Ranks(real.betti_numbers()),
        &Ranks(z.betti_numbers()),
    ));

    if pages {
        for class in 0..p.num_classes() {
            let label = format!("{subject} class {}", class + 1);
            let real_page = page_topology(p, class, Variant::Real).expect("class in range");
            let real_cfg = p.realize_with_distinguished(class).expect("class in range");
            checks.push(OracleCheck::compare(
                "real page = H(Z_+)",
                &label,
                &page_homology(&real_page),
                &homology_zplus(&real_cfg, opts)?,
            ));
            let complex_page = page_topology(p, class, Variant::Complex).expect("class in range");
            let page_cfg = complex_page_partition(&p.rotated(class)).realize();
            checks.push(OracleCheck::compare(
                "complex page = H(Z_+) of the doubled partition",
                &label,
                &page_homology(&complex_page),
                &homology_zplus(&page_cfg, opts)?,
            ));
        }
    }
    Ok(checks)
}

pub fn run_family(family: Family, opts: &EngineOptions) -> Result<BatteryReport, HomologyError> {
    let Family::Partitions { max_n } = family;
    let partitions: Vec<CyclicPartition> = (3..=max_n).flat_map(canonical_partitions).collect();
    // Inner calls run inside the installed pool rather than building their own.
    let inner = EngineOptions {
        max_n: opts.max_n,
        jobs: None,
    };
    let results: Vec<Result<Vec<OracleCheck>, HomologyError>> = with_jobs(opts, || {
        partitions
            .par_iter()
            .map(|p| {
                let mut checks = partition_checks(p, &inner, true)?;
                checks.extend(configuration_checks(&p.to_string(), &p.realize(), &inner)?);
                Ok(checks)
            })
            .collect()
    })?;
    let mut checks = Vec::new();
    for r in results {
        checks.extend(r?);
    }
    Ok(BatteryReport {
        family: family.to_string(),
        checks,
    })
}

/// Runs the configuration checks on one input.
pub fn run_configuration(cfg: &Configuration, opts: &EngineOptions) -> Result<BatteryReport, HomologyError> {
    let mut checks = configuration_checks("input", cfg, opts)?;
    if cfg.k() == 2 {
        if let Ok(form) = normal_form(cfg) {
            let z = homology_z(cfg, opts)?;
            let complex = expected_homology(&classify_complex(&form.partition)).expect("closed description");
            checks.push(OracleCheck::compare("complex formula = H(Z^C)", "input", &complex, &homology_zc(cfg, opts)?));
            let real = expected_homology(&classify_real(&form.partition)).expect("closed description");
            checks.push(OracleCheck::compare(
                "real formula Betti numbers = H(Z)",
                "input",
                &Ranks(real.betti_numbers()),
                &Ranks(z.betti_numbers()),
            ));
        }
    }
    Ok(BatteryReport {
        family: "input".to_string(),
        checks,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn family_parsing() {
        assert_eq!(Family::parse("partitions n<=9"), Some(Family::Partitions { max_n: 9 }));
        assert_eq!(Family::parse(" partitions n<= 5 "), Some(Family::Partitions { max_n: 5 }));
        assert_eq!(Family::parse("partitions n<9"), None);
        assert_eq!(Family::Partitions { max_n: 4 }.to_string(), "partitions n<=4");
    }

    #[test]
    fn small_family_passes() {
        let report = run_family(Family::Partitions { max_n: 6 }, &EngineOptions::default()).unwrap();
        assert!(report.passed(), "{:?}", report.failures().collect::<Vec<_>>());
        assert!(report.checks.len() > 40);
    }

    #[test]
    fn complex_page_partition_doubles() {
        let p = CyclicPartition::new(vec![1, 1, 1, 1, 1]).unwrap();
        assert_eq!(complex_page_partition(&p).parts(), &[1, 2, 2, 2, 2]);
    }
}
