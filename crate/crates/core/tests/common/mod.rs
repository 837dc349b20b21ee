//! Independent oracles shared by the integration tests. Nothing here calls
//! the simplex solver or the Smith normal form of the library.
#![allow(dead_code)]

use num_traits::{One, Signed, Zero};
use quadric_topology::complex_homology::IntMatrix;
use quadric_topology::{Configuration, IndexSet, Rational, SimplicialComplex};
use rand::Rng;
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    rand::SeedableRng::seed_from_u64(seed)
}

pub fn q(p: i64, d: i64) -> Rational {
    Rational::new(p.into(), d.into())
}

/// The unique solution of `a x = b`, or `None` when there is none or it is
/// not unique. Plain Gauss-Jordan over the rationals.
pub fn unique_solution(mut a: Vec<Vec<Rational>>, mut b: Vec<Rational>) -> Option<Vec<Rational>> {
    let rows = a.len();
    let cols = a.first().map_or(0, Vec::len);
    let mut pivot_cols = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        let Some(p) = (r..rows).find(|&i| !a[i][c].is_zero()) else {
            return None;
        };
        a.swap(r, p);
        b.swap(r, p);
        let inv = Rational::one() / a[r][c].clone();
        for x in a[r].iter_mut() {
            *x *= inv.clone();
        }
        b[r] *= inv;
        for i in 0..rows {
            if i != r && !a[i][c].is_zero() {
                let f = a[i][c].clone();
                for j in 0..cols {
                    let t = a[r][j].clone() * f.clone();
                    a[i][j] -= t;
                }
                let t = b[r].clone() * f;
                b[i] -= t;
            }
        }
        pivot_cols.push(c);
        r += 1;
    }
    if (r..rows).any(|i| !b[i].is_zero()) {
        return None;
    }
    Some(b[..cols].to_vec())
}

/// Carathéodory enumeration: the origin is in the convex hull iff some
/// affinely independent subset has it as a convex combination, and for such
/// a subset the barycentric coordinates are unique.
pub fn origin_in_hull_brute(vectors: &[Vec<Rational>]) -> bool {
    let m = vectors.len();
    if m == 0 {
        return false;
    }
    let k = vectors[0].len();
    for bits in 1u64..1 << m {
        let t: Vec<usize> = (0..m).filter(|i| bits >> i & 1 == 1).collect();
        if t.len() > k + 1 {
            continue;
        }
        let mut a: Vec<Vec<Rational>> = (0..k).map(|row| t.iter().map(|&i| vectors[i][row].clone()).collect()).collect();
        a.push(vec![Rational::one(); t.len()]);
        let mut b = vec![Rational::zero(); k];
        b.push(Rational::one());
        if let Some(x) = unique_solution(a, b) {
            if x.iter().all(|v| !v.is_negative()) {
                return true;
            }
        }
    }
    false
}

/// Lexicographically first subset of size at most `k` whose vectors have
/// the origin in their convex hull.
pub fn first_violation_brute(cfg: &Configuration) -> Option<IndexSet> {
    let n = cfg.n();
    let mut subsets: Vec<Vec<usize>> = (1u64..1 << n)
        .map(|bits| (0..n).filter(|i| bits >> i & 1 == 1).collect::<Vec<_>>())
        .filter(|s| s.len() <= cfg.k())
        .collect();
    subsets.sort();
    subsets.into_iter().find_map(|s| {
        let vectors: Vec<Vec<Rational>> = s.iter().map(|&i| cfg.lambda(i).to_vec()).collect();
        origin_in_hull_brute(&vectors).then(|| s.iter().collect())
    })
}

/// `L` is a face iff the origin is a convex combination of the vectors
/// outside `L`.
pub fn dual_faces_brute(cfg: &Configuration) -> Vec<IndexSet> {
    let n = cfg.n();
    let mut faces: Vec<IndexSet> = (0u64..1 << n)
        .map(IndexSet::from_bits)
        .filter(|&l| {
            let rest: Vec<Vec<Rational>> = (0..n).filter(|&i| !l.contains(i)).map(|i| cfg.lambda(i).to_vec()).collect();
            origin_in_hull_brute(&rest)
        })
        .collect();
    faces.sort_by_key(|f| (f.len(), f.bits()));
    faces
}

/// A random rational vector with small numerators and denominators.
fn random_vector(rng: &mut ChaCha8Rng, k: usize) -> Vec<Rational> {
    (0..k).map(|_| q(rng.gen_range(-6..=6), rng.gen_range(1..=3))).collect()
}

/// A random weakly hyperbolic configuration; with `nonempty` the polytope
/// is required to be non-empty, decided by the brute-force oracle.
pub fn random_config(rng: &mut ChaCha8Rng, k: usize, n: usize, nonempty: bool) -> Configuration {
    loop {
        let lambdas: Vec<Vec<Rational>> = (0..n).map(|_| random_vector(rng, k)).collect();
        if nonempty && !origin_in_hull_brute(&lambdas) {
            continue;
        }
        let Ok(cfg) = Configuration::new(k, lambdas) else { continue };
        if first_violation_brute(&cfg).is_none() {
            return cfg;
        }
    }
}

/// An arbitrary configuration, usually not weakly hyperbolic.
pub fn random_raw_config(rng: &mut ChaCha8Rng, k: usize, n: usize) -> Configuration {
    loop {
        let lambdas: Vec<Vec<Rational>> = (0..n)
            .map(|_| (0..k).map(|_| q(rng.gen_range(-2..=2), 1)).collect())
            .collect();
        if let Ok(cfg) = Configuration::new(k, lambdas) {
            return cfg;
        }
    }
}

/// A random unimodular matrix as a product of elementary operations.
pub fn random_unimodular(rng: &mut ChaCha8Rng, size: usize) -> IntMatrix {
    let mut m = IntMatrix::identity(size);
    if size < 2 {
        return m;
    }
    for _ in 0..3 * size {
        let i = rng.gen_range(0..size);
        let mut j = rng.gen_range(0..size - 1);
        if j >= i {
            j += 1;
        }
        let f = rng.gen_range(-2i64..=2);
        let mut e = IntMatrix::identity(size);
        e.set(i, j, f.into());
        m = m.mul(&e);
        if rng.gen_bool(0.3) {
            let mut s = IntMatrix::identity(size);
            s.set(i, i, (-1).into());
            m = s.mul(&m);
        }
    }
    m
}

pub fn random_matrix(rng: &mut ChaCha8Rng, rows: usize, cols: usize, range: i64) -> IntMatrix {
    let data: Vec<Vec<i64>> = (0..rows)
        .map(|_| (0..cols).map(|_| rng.gen_range(-range..=range)).collect())
        .collect();
    IntMatrix::from_rows(&data)
}

/// Rank over the rationals by Gaussian elimination.
pub fn rational_rank(rows: Vec<Vec<Rational>>) -> usize {
    let mut a = rows;
    let cols = a.first().map_or(0, Vec::len);
    let mut r = 0;
    for c in 0..cols {
        let Some(p) = (r..a.len()).find(|&i| !a[i][c].is_zero()) else { continue };
        a.swap(r, p);
        for i in r + 1..a.len() {
            if !a[i][c].is_zero() {
                let f = a[i][c].clone() / a[r][c].clone();
                for j in c..cols {
                    let t = a[r][j].clone() * f.clone();
                    a[i][j] -= t;
                }
            }
        }
        r += 1;
    }
    r
}

/// Reduced Betti numbers over the rationals, indexed from degree -1.
pub fn reduced_betti_rational(k: &SimplicialComplex) -> Vec<usize> {
    if k.is_void() {
        return vec![];
    }
    let top = k.faces().iter().map(|f| f.len()).max().unwrap_or(0);
    let by_size: Vec<Vec<IndexSet>> = (0..=top).map(|s| k.faces_of_size(s).collect()).collect();
    let boundary_rank = |s: usize| -> usize {
        if s == 0 || s > top {
            return 0;
        }
        let rows: Vec<Vec<Rational>> = by_size[s]
            .iter()
            .map(|&face| {
                by_size[s - 1]
                    .iter()
                    .map(|&g| match face.iter().position(|v| face.remove(v) == g) {
                        Some(j) if j % 2 == 0 => Rational::one(),
                        Some(_) => -Rational::one(),
                        None => Rational::zero(),
                    })
                    .collect()
            })
            .collect();
        rational_rank(rows)
    };
    let ranks: Vec<usize> = (0..=top + 1).map(boundary_rank).collect();
    (0..=top).map(|s| by_size[s].len() - ranks[s] - ranks[s + 1]).collect()
}

pub fn triangle() -> Configuration {
    Configuration::from_integers(2, &[vec![2, 1], vec![-2, 1], vec![0, -1]]).unwrap()
}
