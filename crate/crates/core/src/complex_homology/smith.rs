//! Smith normal form over the integers.
//!
//! [`smith_normal_form`] works on dense arbitrary-precision matrices.
//! Boundary matrices of simplicial complexes are sparse with entries `±1`,
//! so [`SparseIntMatrix::smith_form`] first eliminates unit pivots in `i64`
//! and only hands the remaining block to the dense routine. If an `i64`
//! entry would overflow, the whole matrix is redone densely.

use std::collections::BTreeSet;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

/// Dense integer matrix.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntMatrix {
    rows: usize,
    cols: usize,
    data: Vec<Vec<BigInt>>,
}

impl IntMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        IntMatrix {
            rows,
            cols,
            data: vec![vec![BigInt::zero(); cols]; rows],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = IntMatrix::zeros(n, n);
        for i in 0..n {
            m.data[i][i] = BigInt::one();
        }
        m
    }

    /// Panics on ragged input.
    pub fn from_rows(rows: &[Vec<i64>]) -> Self {
        let cols = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|r| r.len() == cols), "ragged matrix");
        IntMatrix {
            rows: rows.len(),
            cols,
            data: rows
                .iter()
                .map(|r| r.iter().map(|&x| BigInt::from(x)).collect())
                .collect(),
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> &BigInt {
        &self.data[r][c]
    }

    pub fn set(&mut self, r: usize, c: usize, value: BigInt) {
        self.data[r][c] = value;
    }

    pub fn mul(&self, other: &IntMatrix) -> IntMatrix {
        assert_eq!(self.cols, other.rows, "dimension mismatch");
        let mut out = IntMatrix::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for t in 0..self.cols {
                let a = &self.data[i][t];
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = &other.data[t][j];
                    if !b.is_zero() {
                        out.data[i][j] += a * b;
                    }
                }
            }
        }
        out
    }
}

/// Nonzero invariant factors `d_1 | d_2 | … | d_rank`, all positive.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SmithForm {
    pub diagonal: Vec<BigInt>,
    pub rank: usize,
}

impl SmithForm {
    fn from_diagonal(diagonal: Vec<BigInt>) -> Self {
        let rank = diagonal.len();
        SmithForm { diagonal, rank }
    }

    /// Invariant factors greater than one.
    pub fn torsion(&self) -> impl Iterator<Item = &BigInt> {
        self.diagonal.iter().filter(|d| !d.is_one())
    }
}

pub fn smith_normal_form(m: &IntMatrix) -> SmithForm {
    SmithForm::from_diagonal(dense_invariant_factors(m.data.clone(), m.rows, m.cols))
}

fn dense_invariant_factors(mut a: Vec<Vec<BigInt>>, rows: usize, cols: usize) -> Vec<BigInt> {
    let mut diagonal = Vec::new();
    for t in 0..rows.min(cols) {
        let Some((pr, pc)) = min_abs_entry(&a, t, rows, cols) else {
            break;
        };
        a.swap(t, pr);
        for row in a.iter_mut() {
            row.swap(t, pc);
        }
        loop {
            let mut clean = true;
            for i in t + 1..rows {
                if a[i][t].is_zero() {
                    continue;
                }
                let q = &a[i][t] / &a[t][t];
                for j in t..cols {
                    let delta = &q * &a[t][j];
                    a[i][j] -= delta;
                }
                clean &= a[i][t].is_zero();
            }
            for j in t + 1..cols {
                if a[t][j].is_zero() {
                    continue;
                }
                let q = &a[t][j] / &a[t][t];
                for row in a.iter_mut().skip(t) {
                    let delta = &q * &row[t];
                    row[j] -= delta;
                }
                clean &= a[t][j].is_zero();
            }
            if !clean {
                // A remainder smaller than the pivot is left in row or column t.
                let (pr, pc) = min_abs_in_cross(&a, t, rows, cols);
                a.swap(t, pr);
                for row in a.iter_mut() {
                    row.swap(t, pc);
                }
                continue;
            }
            let offender = (t + 1..rows).find(|&i| {
                (t + 1..cols).any(|j| !(&a[i][j] % &a[t][t]).is_zero())
            });
            match offender {
                Some(i) => {
                    for j in t..cols {
                        let v = a[i][j].clone();
                        a[t][j] += v;
                    }
                }
                None => break,
            }
        }
        diagonal.push(a[t][t].abs());
    }
    diagonal
}

fn min_abs_entry(a: &[Vec<BigInt>], t: usize, rows: usize, cols: usize) -> Option<(usize, usize)> {
    let mut best: Option<(usize, usize)> = None;
    for i in t..rows {
        for j in t..cols {
            if a[i][j].is_zero() {
                continue;
            }
            if best.is_none_or(|(bi, bj)| a[i][j].abs() < a[bi][bj].abs()) {
                best = Some((i, j));
            }
        }
    }
    best
}

fn min_abs_in_cross(a: &[Vec<BigInt>], t: usize, rows: usize, cols: usize) -> (usize, usize) {
    let mut best = (t, t);
    let candidates = (t..rows).map(|i| (i, t)).chain((t + 1..cols).map(|j| (t, j)));
    for (i, j) in candidates {
        if a[i][j].is_zero() {
            continue;
        }
        let (bi, bj) = best;
        if a[bi][bj].is_zero() || a[i][j].abs() < a[bi][bj].abs() {
            best = (i, j);
        }
    }
    best
}

/// Sparse integer matrix stored by rows, for boundary maps.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SparseIntMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<Vec<(usize, i64)>>,
}

impl SparseIntMatrix {
    pub fn new(rows: usize, cols: usize) -> Self {
        SparseIntMatrix {
            rows,
            cols,
            entries: vec![Vec::new(); rows],
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    /// Adds `value` to entry `(r, c)`.
    pub fn add(&mut self, r: usize, c: usize, value: i64) {
        assert!(r < self.rows && c < self.cols, "entry out of range");
        let row = &mut self.entries[r];
        match row.binary_search_by_key(&c, |&(col, _)| col) {
            Ok(pos) => {
                row[pos].1 += value;
                if row[pos].1 == 0 {
                    row.remove(pos);
                }
            }
            Err(pos) if value != 0 => row.insert(pos, (c, value)),
            Err(_) => {}
        }
    }

    pub fn to_dense(&self) -> IntMatrix {
        let mut m = IntMatrix::zeros(self.rows, self.cols);
        for (r, row) in self.entries.iter().enumerate() {
            for &(c, v) in row {
                m.set(r, c, BigInt::from(v));
            }
        }
        m
    }

    pub fn smith_form(&self) -> SmithForm {
        self.smith_form_with_pivot_rows().0
    }

    /// The Smith form and the rows used as unit pivots. Seen as a boundary
    /// map `C_s → C_{s-1}`, those rows span a complement of the cycles, so
    /// the next boundary map keeps its invariant factors when the matching
    /// columns are dropped.
    pub fn smith_form_with_pivot_rows(&self) -> (SmithForm, Vec<usize>) {
        match self.eliminate_units() {
            Some((diagonal, pivots)) => (SmithForm::from_diagonal(diagonal), pivots),
            None => (smith_normal_form(&self.to_dense()), Vec::new()),
        }
    }

    /// Unit-pivot elimination followed by a dense pass on what is left.
    /// `None` on `i64` overflow.
    fn eliminate_units(&self) -> Option<(Vec<BigInt>, Vec<usize>)> {
        let mut rows = self.entries.clone();
        let mut col_rows: Vec<BTreeSet<usize>> = vec![BTreeSet::new(); self.cols];
        for (r, row) in rows.iter().enumerate() {
            for &(c, _) in row {
                col_rows[c].insert(r);
            }
        }
        // Columns keyed by (entry count, index); the sparsest goes first.
        let mut columns: BTreeSet<(usize, usize)> = col_rows
            .iter()
            .enumerate()
            .filter(|(_, rs)| !rs.is_empty())
            .map(|(c, rs)| (rs.len(), c))
            .collect();
        let mut alive = vec![true; self.rows];
        let mut pivots = Vec::new();

        while let Some((_, c)) = columns.pop_first() {
            let entry = |r: usize| {
                let row: &Vec<(usize, i64)> = &rows[r];
                row[row.binary_search_by_key(&c, |&(col, _)| col).expect("column index is consistent")].1
            };
            // Shortest row with a unit in this column.
            let pick = col_rows[c]
                .iter()
                .filter_map(|&r| {
                    let v = entry(r);
                    (v.abs() == 1).then_some((rows[r].len(), r, v))
                })
                .min();
            let Some((_, p, v)) = pick else { continue };

            let targets: Vec<(usize, i64)> = col_rows[c].iter().filter(|&&r| r != p).map(|&r| (r, entry(r))).collect();
            let prow = std::mem::take(&mut rows[p]);
            for &(col, _) in &prow {
                if col != c {
                    columns.remove(&(col_rows[col].len(), col));
                }
                col_rows[col].remove(&p);
            }
            for (r, a) in targets {
                // Pivot is ±1, so its inverse is itself.
                let factor = a.checked_mul(v)?;
                let updated = subtract_scaled(&rows[r], &prow, factor)?;
                for &(col, _) in &prow {
                    if updated.binary_search_by_key(&col, |&(x, _)| x).is_ok() {
                        col_rows[col].insert(r);
                    } else {
                        col_rows[col].remove(&r);
                    }
                }
                rows[r] = updated;
            }
            for &(col, _) in &prow {
                if col != c && !col_rows[col].is_empty() {
                    columns.insert((col_rows[col].len(), col));
                }
            }
            alive[p] = false;
            pivots.push(p);
        }

        let rest: Vec<usize> = (0..self.rows)
            .filter(|&r| alive[r] && !rows[r].is_empty())
            .collect();
        let mut diagonal = vec![BigInt::one(); pivots.len()];
        if !rest.is_empty() {
            let used: Vec<usize> = (0..self.cols).filter(|&c| !col_rows[c].is_empty()).collect();
            let mut dense = vec![vec![BigInt::zero(); used.len()]; rest.len()];
            for (i, &r) in rest.iter().enumerate() {
                for &(c, x) in &rows[r] {
                    let j = used.binary_search(&c).expect("column is in use");
                    dense[i][j] = BigInt::from(x);
                }
            }
            diagonal.extend(dense_invariant_factors(dense, rest.len(), used.len()));
        }
        pivots.sort_unstable();
        Some((diagonal, pivots))
    }
}

/// `row - factor * pivot` on sorted sparse rows.
fn subtract_scaled(row: &[(usize, i64)], pivot: &[(usize, i64)], factor: i64) -> Option<Vec<(usize, i64)>> {
    let mut out = Vec::with_capacity(row.len() + pivot.len());
    let (mut i, mut j) = (0, 0);
    while i < row.len() || j < pivot.len() {
        let take_row = j >= pivot.len() || (i < row.len() && row[i].0 < pivot[j].0);
        let take_pivot = i >= row.len() || (j < pivot.len() && pivot[j].0 < row[i].0);
        if take_row {
            out.push(row[i]);
            i += 1;
        } else if take_pivot {
            let scaled = pivot[j].1.checked_mul(factor)?.checked_neg()?;
            out.push((pivot[j].0, scaled));
            j += 1;
        } else {
            let value = row[i].1.checked_sub(pivot[j].1.checked_mul(factor)?)?;
            if value != 0 {
                out.push((row[i].0, value));
            }
            i += 1;
            j += 1;
        }
    }
    Some(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn diag(values: &[i64]) -> Vec<BigInt> {
        values.iter().map(|&v| BigInt::from(v)).collect()
    }

    #[test]
    fn small_golden_forms() {
        let f = smith_normal_form(&IntMatrix::from_rows(&[vec![2, 0], vec![0, 3]]));
        assert_eq!(f.diagonal, diag(&[1, 6]));
        assert_eq!(f.rank, 2);
        let f = smith_normal_form(&IntMatrix::identity(3));
        assert_eq!(f.diagonal, diag(&[1, 1, 1]));
        let f = smith_normal_form(&IntMatrix::from_rows(&[vec![2, 4], vec![6, 8]]));
        assert_eq!(f.diagonal, diag(&[2, 4]));
    }

    #[test]
    fn rank_deficient_and_empty() {
        let f = smith_normal_form(&IntMatrix::from_rows(&[vec![1, 2, 3], vec![2, 4, 6]]));
        assert_eq!(f.diagonal, diag(&[1]));
        let f = smith_normal_form(&IntMatrix::zeros(0, 4));
        assert_eq!(f.rank, 0);
        let f = smith_normal_form(&IntMatrix::zeros(3, 2));
        assert_eq!(f.rank, 0);
    }

    #[test]
    fn sparse_path_matches_dense() {
        let rows = vec![
            vec![1, -1, 0, 0],
            vec![0, 1, -1, 0],
            vec![2, 0, 0, 4],
            vec![0, 0, 6, 2],
        ];
        let mut sparse = SparseIntMatrix::new(4, 4);
        for (r, row) in rows.iter().enumerate() {
            for (c, &v) in row.iter().enumerate() {
                sparse.add(r, c, v);
            }
        }
        assert_eq!(sparse.smith_form(), smith_normal_form(&IntMatrix::from_rows(&rows)));
    }

    #[test]
    fn sparse_overflow_falls_back() {
        let big = i64::MAX / 2 + 1;
        let mut sparse = SparseIntMatrix::new(2, 2);
        sparse.add(0, 0, 1);
        sparse.add(0, 1, big);
        sparse.add(1, 0, 3);
        sparse.add(1, 1, 1);
        let dense = smith_normal_form(&sparse.to_dense());
        assert_eq!(sparse.smith_form(), dense);
        assert_eq!(dense.rank, 2);
    }
}
