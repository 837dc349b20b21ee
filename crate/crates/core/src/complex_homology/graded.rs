//! Finitely generated abelian groups and graded groups of them.

use std::collections::BTreeMap;
use std::fmt;

use num_integer::Integer;
use serde::{Deserialize, Serialize};

/// `Z^rank ⊕ Z/t_1 ⊕ … ⊕ Z/t_m` with `1 < t_1 | t_2 | … | t_m`.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct AbelianGroup {
    pub rank: u64,
    pub torsion: Vec<u64>,
}

impl AbelianGroup {
    pub fn zero() -> Self {
        AbelianGroup::default()
    }

    pub fn free(rank: u64) -> Self {
        AbelianGroup {
            rank,
            torsion: Vec::new(),
        }
    }

    /// Builds a group from arbitrary torsion orders, normalizing them to a
    /// divisibility chain. Orders `0` and `1` are ignored.
    pub fn new(rank: u64, torsion: Vec<u64>) -> Self {
        AbelianGroup {
            rank,
            torsion: normalize_torsion(torsion),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.rank == 0 && self.torsion.is_empty()
    }

    pub fn is_free(&self) -> bool {
        self.torsion.is_empty()
    }

    pub fn direct_sum(&self, other: &AbelianGroup) -> AbelianGroup {
        let mut torsion = self.torsion.clone();
        torsion.extend_from_slice(&other.torsion);
        AbelianGroup::new(self.rank + other.rank, torsion)
    }
}

/// Rewrites a list of cyclic orders as invariant factors `t_1 | t_2 | …`.
///
/// One sweep replacing each pair `(t_i, t_j)`, `i < j`, by `(gcd, lcm)`
/// leaves `t_i` dividing every later entry, and later sweeps keep that.
pub fn normalize_torsion(mut orders: Vec<u64>) -> Vec<u64> {
    orders.retain(|&t| t > 1);
    orders.sort_unstable();
    for i in 0..orders.len() {
        for j in i + 1..orders.len() {
            let (a, b) = (orders[i], orders[j]);
            let g = a.gcd(&b);
            orders[i] = g;
            orders[j] = a / g * b;
        }
    }
    orders.retain(|&t| t > 1);
    orders
}

impl fmt::Display for AbelianGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut parts = Vec::new();
        match self.rank {
            0 => {}
            1 => parts.push("Z".to_string()),
            r => parts.push(format!("Z^{r}")),
        }
        for t in &self.torsion {
            parts.push(format!("Z/{t}"));
        }
        write!(f, "{}", parts.join(" + "))
    }
}

/// A group per integer degree. Only nonzero degrees are stored, so equality
/// is equality of graded groups.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash)]
pub struct GradedGroup {
    groups: BTreeMap<i32, AbelianGroup>,
}

impl GradedGroup {
    pub fn zero() -> Self {
        GradedGroup::default()
    }

    /// `Z` in a single degree.
    pub fn z_in(degree: i32) -> Self {
        let mut g = GradedGroup::zero();
        g.set(degree, AbelianGroup::free(1));
        g
    }

    /// Free groups with the given ranks in degrees `0, 1, 2, …`.
    pub fn from_betti(ranks: &[u64]) -> Self {
        let mut g = GradedGroup::zero();
        for (d, &r) in ranks.iter().enumerate() {
            g.set(d as i32, AbelianGroup::free(r));
        }
        g
    }

    pub fn set(&mut self, degree: i32, group: AbelianGroup) {
        if group.is_zero() {
            self.groups.remove(&degree);
        } else {
            self.groups.insert(degree, group);
        }
    }

    pub fn get(&self, degree: i32) -> AbelianGroup {
        self.groups.get(&degree).cloned().unwrap_or_default()
    }

    pub fn rank(&self, degree: i32) -> u64 {
        self.groups.get(&degree).map_or(0, |g| g.rank)
    }

    pub fn torsion(&self, degree: i32) -> &[u64] {
        self.groups.get(&degree).map_or(&[], |g| &g.torsion)
    }

    pub fn is_zero(&self) -> bool {
        self.groups.is_empty()
    }

    pub fn is_free(&self) -> bool {
        self.groups.values().all(AbelianGroup::is_free)
    }

    pub fn min_degree(&self) -> Option<i32> {
        self.groups.keys().next().copied()
    }

    pub fn max_degree(&self) -> Option<i32> {
        self.groups.keys().next_back().copied()
    }

    /// Nonzero degrees in increasing order.
    pub fn iter(&self) -> impl Iterator<Item = (i32, &AbelianGroup)> {
        self.groups.iter().map(|(&d, g)| (d, g))
    }

    pub fn add_group(&mut self, degree: i32, group: &AbelianGroup) {
        let sum = self.get(degree).direct_sum(group);
        self.set(degree, sum);
    }

    pub fn add_assign(&mut self, other: &GradedGroup) {
        for (d, g) in other.iter() {
            self.add_group(d, g);
        }
    }

    pub fn direct_sum(&self, other: &GradedGroup) -> GradedGroup {
        let mut out = self.clone();
        out.add_assign(other);
        out
    }

    /// The same groups moved up by `by` degrees.
    pub fn shifted(&self, by: i32) -> GradedGroup {
        GradedGroup {
            groups: self.groups.iter().map(|(&d, g)| (d + by, g.clone())).collect(),
        }
    }

    /// `Σ (-1)^d rank_d`.
    pub fn euler_characteristic(&self) -> i128 {
        self.groups
            .iter()
            .map(|(&d, g)| {
                let r = g.rank as i128;
                if d.rem_euclid(2) == 0 {
                    r
                } else {
                    -r
                }
            })
            .sum()
    }

    /// Ranks in degrees `0..=top`.
    pub fn betti(&self, top: i32) -> Vec<u64> {
        (0..=top).map(|d| self.rank(d)).collect()
    }

    /// Ranks from degree 0 to the highest nonzero degree.
    pub fn betti_numbers(&self) -> Vec<u64> {
        match self.max_degree() {
            Some(top) if top >= 0 => self.betti(top),
            _ => Vec::new(),
        }
    }

    /// Same ranks in every degree, torsion ignored.
    pub fn same_ranks(&self, other: &GradedGroup) -> bool {
        let degrees = self.groups.keys().chain(other.groups.keys());
        degrees.into_iter().all(|&d| self.rank(d) == other.rank(d))
    }

    /// Drops the torsion in every degree.
    pub fn free_part(&self) -> GradedGroup {
        let mut out = GradedGroup::zero();
        for (d, g) in self.iter() {
            out.set(d, AbelianGroup::free(g.rank));
        }
        out
    }

    /// Table rows, one per nonzero degree.
    pub fn rows(&self) -> Vec<DegreeRow> {
        self.iter()
            .map(|(degree, g)| DegreeRow {
                degree,
                rank: g.rank,
                torsion: g.torsion.clone(),
            })
            .collect()
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DegreeRow {
    pub degree: i32,
    pub rank: u64,
    pub torsion: Vec<u64>,
}

impl Serialize for GradedGroup {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        self.rows().serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for GradedGroup {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let rows = Vec::<DegreeRow>::deserialize(deserializer)?;
        let mut g = GradedGroup::zero();
        for row in rows {
            g.add_group(row.degree, &AbelianGroup::new(row.rank, row.torsion));
        }
        Ok(g)
    }
}

impl fmt::Display for GradedGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self.iter().map(|(d, g)| format!("H{d}={g}")).collect();
        write!(f, "{}", parts.join(", "))
    }
}
