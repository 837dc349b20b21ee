//! Exact rational feasibility of linear systems.
//!
//! A [`LinearSystem`] is a set of equations `a·r = b` over variables that are
//! free, constrained to `r_i ≥ 0`, or forced to `r_i = 0`. Feasibility is
//! decided exactly: free variables are eliminated by Gaussian elimination and
//! the remaining system `A r = b, r ≥ 0` goes through a phase-one simplex with
//! Bland's smallest-index rule, so the pivot sequence is deterministic.
//!
//! This is the only geometric predicate in the crate: weak hyperbolicity and
//! the non-emptiness of the faces `F_L` of the polytope both reduce to it.

use num_traits::{One, Signed, Zero};

use crate::config::{Configuration, Rational};
use crate::index_set::IndexSet;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum VarKind {
    Free,
    Nonnegative,
    Zero,
}

#[derive(Debug, Clone)]
pub struct LinearSystem {
    num_vars: usize,
    rows: Vec<Vec<Rational>>,
    rhs: Vec<Rational>,
    kinds: Vec<VarKind>,
}

impl LinearSystem {
    /// A system with `num_vars` free variables and no equations.
    pub fn new(num_vars: usize) -> Self {
        LinearSystem {
            num_vars,
            rows: Vec::new(),
            rhs: Vec::new(),
            kinds: vec![VarKind::Free; num_vars],
        }
    }

    pub fn num_vars(&self) -> usize {
        self.num_vars
    }

    pub fn num_equations(&self) -> usize {
        self.rows.len()
    }

    /// Adds `coeffs · r = rhs`.
    ///
    /// Panics if `coeffs` does not have one entry per variable.
    pub fn add_equation(&mut self, coeffs: Vec<Rational>, rhs: Rational) -> &mut Self {
        assert_eq!(coeffs.len(), self.num_vars, "equation width mismatch");
        self.rows.push(coeffs);
        self.rhs.push(rhs);
        self
    }

    /// Requires `r_i ≥ 0`. A zero constraint on the same variable wins.
    pub fn set_nonnegative(&mut self, i: usize) -> &mut Self {
        if self.kinds[i] != VarKind::Zero {
            self.kinds[i] = VarKind::Nonnegative;
        }
        self
    }

    pub fn set_all_nonnegative(&mut self) -> &mut Self {
        for i in 0..self.num_vars {
            self.set_nonnegative(i);
        }
        self
    }

    /// Requires `r_i = 0`.
    pub fn set_zero(&mut self, i: usize) -> &mut Self {
        self.kinds[i] = VarKind::Zero;
        self
    }

    pub fn is_nonnegative(&self, i: usize) -> bool {
        self.kinds[i] == VarKind::Nonnegative
    }

    pub fn is_zero(&self, i: usize) -> bool {
        self.kinds[i] == VarKind::Zero
    }

    pub fn equations(&self) -> impl Iterator<Item = (&[Rational], &Rational)> {
        self.rows.iter().map(Vec::as_slice).zip(&self.rhs)
    }
}

/// True iff the system has a rational solution.
pub fn feasible(sys: &LinearSystem) -> bool {
    solve(sys).is_some()
}

/// A rational solution of the system, if one exists. For a purely
/// nonnegative system the returned point is a basic feasible solution.
pub fn solve(sys: &LinearSystem) -> Option<Vec<Rational>> {
    let n = sys.num_vars;
    let mut rows: Vec<(Vec<Rational>, Rational)> = sys
        .rows
        .iter()
        .zip(&sys.rhs)
        .map(|(row, b)| {
            let row = row
                .iter()
                .enumerate()
                .map(|(j, a)| {
                    if sys.kinds[j] == VarKind::Zero {
                        Rational::zero()
                    } else {
                        a.clone()
                    }
                })
                .collect();
            (row, b.clone())
        })
        .collect();

    // Each free variable that occurs is solved for from one row; that row leaves
    // the system and is kept for back substitution.
    let mut defining: Vec<(usize, Vec<Rational>, Rational)> = Vec::new();
    for j in (0..n).filter(|&j| sys.kinds[j] == VarKind::Free) {
        let Some(p) = rows.iter().position(|(r, _)| !r[j].is_zero()) else {
            continue;
        };
        let (prow, pb) = rows.remove(p);
        for (row, b) in rows.iter_mut() {
            if row[j].is_zero() {
                continue;
            }
            let f = &row[j] / &prow[j];
            for (x, y) in row.iter_mut().zip(&prow) {
                if !y.is_zero() {
                    *x -= &f * y;
                }
            }
            *b -= &f * &pb;
        }
        defining.push((j, prow, pb));
    }

    let columns: Vec<usize> = (0..n)
        .filter(|&j| sys.kinds[j] == VarKind::Nonnegative)
        .collect();
    let mut constraints: Vec<(Vec<Rational>, Rational)> = Vec::new();
    for (row, b) in rows {
        let restricted: Vec<Rational> = columns.iter().map(|&j| row[j].clone()).collect();
        if restricted.iter().all(Zero::is_zero) {
            if !b.is_zero() {
                return None;
            }
            continue;
        }
        constraints.push((restricted, b));
    }

    let values = phase_one(&constraints, columns.len())?;
    let mut point = vec![Rational::zero(); n];
    for (pos, &j) in columns.iter().enumerate() {
        point[j] = values[pos].clone();
    }
    for (j, prow, pb) in defining.iter().rev() {
        let mut acc = pb.clone();
        for (t, a) in prow.iter().enumerate() {
            if t != *j && !a.is_zero() {
                acc -= a * &point[t];
            }
        }
        point[*j] = acc / &prow[*j];
    }
    Some(point)
}

/// Phase-one simplex for `A x = b, x ≥ 0`. Returns a basic feasible solution.
fn phase_one(constraints: &[(Vec<Rational>, Rational)], width: usize) -> Option<Vec<Rational>> {
    let m = constraints.len();
    if m == 0 {
        return Some(vec![Rational::zero(); width]);
    }
    // Tableau columns: structural 0..width, artificial width..width+m, then rhs.
    let total = width + m;
    let mut tableau: Vec<Vec<Rational>> = Vec::with_capacity(m);
    for (r, (row, b)) in constraints.iter().enumerate() {
        let flip = b.is_negative();
        let mut line = Vec::with_capacity(total + 1);
        for a in row {
            line.push(if flip { -a.clone() } else { a.clone() });
        }
        for t in 0..m {
            line.push(if t == r {
                Rational::one()
            } else {
                Rational::zero()
            });
        }
        line.push(if flip { -b.clone() } else { b.clone() });
        tableau.push(line);
    }
    let mut basis: Vec<usize> = (width..total).collect();

    // Reduced costs of the phase-one objective (sum of artificials).
    let mut cost = vec![Rational::zero(); total + 1];
    for line in &tableau {
        for j in 0..width {
            cost[j] -= &line[j];
        }
        cost[total] -= &line[total];
    }

    while let Some(enter) = (0..total).find(|&j| cost[j].is_negative()) {
        let mut leave: Option<(usize, Rational)> = None;
        for (r, line) in tableau.iter().enumerate() {
            if !line[enter].is_positive() {
                continue;
            }
            let ratio = &line[total] / &line[enter];
            let better = match &leave {
                None => true,
                Some((best_r, best)) => {
                    ratio < *best || (ratio == *best && basis[r] < basis[*best_r])
                }
            };
            if better {
                leave = Some((r, ratio));
            }
        }
        // The phase-one objective is bounded below by zero.
        let (pr, _) = leave.expect("phase-one objective cannot be unbounded");
        pivot(&mut tableau, &mut cost, pr, enter);
        basis[pr] = enter;
    }

    if !cost[total].is_zero() {
        return None;
    }
    let mut values = vec![Rational::zero(); width];
    for (r, &b) in basis.iter().enumerate() {
        if b < width {
            values[b] = tableau[r][total].clone();
        }
    }
    Some(values)
}

fn pivot(tableau: &mut [Vec<Rational>], cost: &mut [Rational], pr: usize, pc: usize) {
    let inv = tableau[pr][pc].recip();
    for x in tableau[pr].iter_mut() {
        if !x.is_zero() {
            *x *= &inv;
        }
    }
    let prow = tableau[pr].clone();
    let eliminate = |line: &mut [Rational]| {
        if line[pc].is_zero() {
            return;
        }
        let f = line[pc].clone();
        for (x, y) in line.iter_mut().zip(&prow) {
            if !y.is_zero() {
                *x -= &f * y;
            }
        }
    };
    for (r, line) in tableau.iter_mut().enumerate() {
        if r != pr {
            eliminate(line);
        }
    }
    eliminate(cost);
}

/// True iff some convex combination of `vectors` is the origin.
pub fn origin_in_convex_hull(vectors: &[Vec<Rational>]) -> bool {
    let Some(first) = vectors.first() else {
        return false;
    };
    let dim = first.len();
    let mut sys = LinearSystem::new(vectors.len());
    for c in 0..dim {
        sys.add_equation(vectors.iter().map(|v| v[c].clone()).collect(), Rational::zero());
    }
    sys.add_equation(vec![Rational::one(); vectors.len()], Rational::one());
    sys.set_all_nonnegative();
    feasible(&sys)
}

/// The system `Σ λ_i r_i = 0, Σ r_i = 1, r ≥ 0, r_i = 0 for i ∈ zero`
/// whose solution set is the face `F_zero` of the polytope.
pub fn polytope_system(cfg: &Configuration, zero: IndexSet) -> LinearSystem {
    let n = cfg.n();
    let mut sys = LinearSystem::new(n);
    for c in 0..cfg.k() {
        sys.add_equation(
            cfg.lambdas().iter().map(|v| v[c].clone()).collect(),
            Rational::zero(),
        );
    }
    sys.add_equation(vec![Rational::one(); n], Rational::one());
    sys.set_all_nonnegative();
    for i in zero {
        sys.set_zero(i);
    }
    sys
}

/// A point of the face `F_L = P ∩ {r_i = 0 : i ∈ L}`, if the face is non-empty.
pub fn face_point(cfg: &Configuration, face: IndexSet) -> Option<Vec<Rational>> {
    solve(&polytope_system(cfg, face))
}

/// True iff `F_L ≠ ∅`.
pub fn face_nonempty(cfg: &Configuration, face: IndexSet) -> bool {
    face_point(cfg, face).is_some()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(x: i64) -> Rational {
        Rational::from_integer(x.into())
    }

    fn vecs(rows: &[&[i64]]) -> Vec<Vec<Rational>> {
        rows.iter().map(|r| r.iter().map(|&x| q(x)).collect()).collect()
    }

    #[test]
    fn simplex_of_two_variables_is_feasible() {
        let mut sys = LinearSystem::new(2);
        sys.add_equation(vec![q(1), q(1)], q(1)).set_all_nonnegative();
        assert!(feasible(&sys));
    }

    #[test]
    fn forced_negative_value_is_infeasible() {
        let mut sys = LinearSystem::new(2);
        sys.add_equation(vec![q(1), q(1)], q(1))
            .add_equation(vec![q(1), q(-1)], q(3))
            .set_all_nonnegative();
        assert!(!feasible(&sys));
    }

    #[test]
    fn free_variables_absorb_equations() {
        // r0 free, r1 ≥ 0: r0 + r1 = -5, r1 = 2.
        let mut sys = LinearSystem::new(2);
        sys.add_equation(vec![q(1), q(1)], q(-5))
            .add_equation(vec![q(0), q(1)], q(2))
            .set_nonnegative(1);
        let point = solve(&sys).unwrap();
        assert_eq!(point, vec![q(-7), q(2)]);
    }

    #[test]
    fn zero_overrides_nonnegativity() {
        let mut sys = LinearSystem::new(2);
        sys.add_equation(vec![q(1), q(1)], q(1));
        sys.set_zero(0).set_nonnegative(0).set_zero(1).set_nonnegative(1);
        assert!(sys.is_zero(0));
        assert!(!feasible(&sys));
    }

    #[test]
    fn inconsistent_free_system() {
        let mut sys = LinearSystem::new(1);
        sys.add_equation(vec![q(1)], q(1)).add_equation(vec![q(2)], q(3));
        assert!(!feasible(&sys));
    }

    #[test]
    fn convex_hull_membership() {
        assert!(!origin_in_convex_hull(&vecs(&[&[1, 0]])));
        assert!(origin_in_convex_hull(&vecs(&[&[1, 0], &[-1, 0]])));
        assert!(origin_in_convex_hull(&vecs(&[&[0, 0]])));
        assert!(!origin_in_convex_hull(&[]));
        assert!(origin_in_convex_hull(&vecs(&[&[2, 3], &[-2, 3], &[0, -3]])));
        assert!(!origin_in_convex_hull(&vecs(&[&[2, 3], &[-2, 3], &[0, 3]])));
    }

    #[test]
    fn returned_point_satisfies_the_system() {
        let mut sys = LinearSystem::new(4);
        sys.add_equation(vec![q(2), q(-1), q(3), q(0)], q(4))
            .add_equation(vec![q(1), q(1), q(1), q(1)], q(3))
            .set_all_nonnegative();
        let point = solve(&sys).unwrap();
        for (row, b) in sys.equations() {
            let lhs: Rational = row.iter().zip(&point).map(|(a, x)| a * x).sum();
            assert_eq!(&lhs, b);
        }
        assert!(point.iter().all(|x| !x.is_negative()));
    }
}
