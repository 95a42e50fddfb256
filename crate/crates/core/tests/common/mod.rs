//! Test-side reference arithmetic. Nothing here calls the Smith or Hermite
//! routines of the library: determinants are Laplace expansions and lattice
//! questions are answered through determinantal divisors.

#![allow(dead_code)]

pub mod golden;

use diagconj::exactmat::IntMatrix;
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use rand::Rng;

pub type Rows = Vec<Vec<BigInt>>;

pub fn v(x: &[i64]) -> Vec<BigInt> {
    x.iter().map(|&e| BigInt::from(e)).collect()
}

pub fn m(rows: &[&[i64]]) -> IntMatrix {
    IntMatrix::from_i64(rows)
}

pub fn rows_of(a: &IntMatrix) -> Rows {
    a.to_rows()
}

pub fn naive_mul(a: &[Vec<BigInt>], b: &[Vec<BigInt>]) -> Rows {
    let inner = b.len();
    let cols = b.first().map_or(0, Vec::len);
    a.iter()
        .map(|r| {
            assert_eq!(r.len(), inner);
            (0..cols)
                .map(|j| (0..inner).map(|k| &r[k] * &b[k][j]).sum())
                .collect()
        })
        .collect()
}

/// Determinant by cofactor expansion along the first row.
pub fn laplace_det(a: &[Vec<BigInt>]) -> BigInt {
    let n = a.len();
    match n {
        0 => BigInt::one(),
        1 => a[0][0].clone(),
        2 => &a[0][0] * &a[1][1] - &a[0][1] * &a[1][0],
        _ => {
            let mut total = BigInt::zero();
            for j in 0..n {
                if a[0][j].is_zero() {
                    continue;
                }
                let minor: Rows = a[1..]
                    .iter()
                    .map(|r| {
                        r.iter()
                            .enumerate()
                            .filter(|&(c, _)| c != j)
                            .map(|(_, x)| x.clone())
                            .collect()
                    })
                    .collect();
                let term = &a[0][j] * laplace_det(&minor);
                if j % 2 == 0 {
                    total += term;
                } else {
                    total -= term;
                }
            }
            total
        }
    }
}

pub fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    if k == 0 {
        return vec![Vec::new()];
    }
    if n < k {
        return Vec::new();
    }
    let mut out = Vec::new();
    for mut s in subsets(n - 1, k) {
        s.sort_unstable();
        out.push(s);
    }
    for mut s in subsets(n - 1, k - 1) {
        s.push(n - 1);
        out.push(s);
    }
    out
}

/// All `k × k` minors of `a`.
pub fn minors(a: &[Vec<BigInt>], cols: usize, k: usize) -> Vec<BigInt> {
    let mut out = Vec::new();
    for rs in subsets(a.len(), k) {
        for cs in subsets(cols, k) {
            let sub: Rows = rs
                .iter()
                .map(|&i| cs.iter().map(|&j| a[i][j].clone()).collect())
                .collect();
            out.push(laplace_det(&sub));
        }
    }
    out
}

/// `k`-th determinantal divisor: the gcd of all `k × k` minors.
pub fn det_divisor(a: &[Vec<BigInt>], cols: usize, k: usize) -> BigInt {
    minors(a, cols, k)
        .iter()
        .fold(BigInt::zero(), |acc, x| acc.gcd(x))
}

pub fn naive_rank(a: &[Vec<BigInt>], cols: usize) -> usize {
    (1..=a.len().min(cols))
        .rev()
        .find(|&k| !det_divisor(a, cols, k).is_zero())
        .unwrap_or(0)
}

/// Invariant factors `D_k / D_{k−1}` of the nonzero part.
pub fn naive_invariant_factors(a: &[Vec<BigInt>], cols: usize) -> Vec<BigInt> {
    let r = naive_rank(a, cols);
    let mut prev = BigInt::one();
    let mut out = Vec::with_capacity(r);
    for k in 1..=r {
        let d = det_divisor(a, cols, k);
        out.push(&d / &prev);
        prev = d;
    }
    out
}

/// Row-lattice equality: `L(A) = L(A ∪ B) = L(B)` iff the three generating
/// sets have the same rank `r` and the same `r`-th determinantal divisor.
pub fn naive_lattice_equal(a: &[Vec<BigInt>], b: &[Vec<BigInt>], cols: usize) -> bool {
    let ab: Rows = a.iter().chain(b).cloned().collect();
    let (ra, rb, rab) = (
        naive_rank(a, cols),
        naive_rank(b, cols),
        naive_rank(&ab, cols),
    );
    if ra != rb || ra != rab {
        return false;
    }
    if ra == 0 {
        return true;
    }
    let da = det_divisor(a, cols, ra);
    da == det_divisor(b, cols, ra) && da == det_divisor(&ab, cols, ra)
}

pub fn naive_contains(a: &[Vec<BigInt>], cols: usize, x: &[BigInt]) -> bool {
    naive_lattice_equal(a, &[a.to_vec(), vec![x.to_vec()]].concat(), cols)
}

pub fn gcd_i64(l: &[i64]) -> u64 {
    l.iter().fold(0u64, |acc, x| acc.gcd(&x.unsigned_abs()))
}

pub fn random_matrix<R: Rng>(rng: &mut R, rows: usize, cols: usize, bound: i64) -> IntMatrix {
    let entries: Vec<BigInt> = (0..rows * cols)
        .map(|_| BigInt::from(rng.gen_range(-bound..=bound)))
        .collect();
    IntMatrix::new(rows, cols, entries).unwrap()
}

/// Product of `steps` random elementary operations (row additions with
/// multipliers in `[−2, 2]`, swaps and negations) applied to the identity.
pub fn random_unimodular<R: Rng>(rng: &mut R, n: usize, steps: usize) -> Rows {
    let mut u: Rows = (0..n)
        .map(|i| (0..n).map(|j| BigInt::from(i64::from(i == j))).collect())
        .collect();
    if n < 2 {
        if n == 1 && rng.gen_bool(0.5) {
            u[0][0] = BigInt::from(-1);
        }
        return u;
    }
    for _ in 0..steps {
        let i = rng.gen_range(0..n);
        let mut j = rng.gen_range(0..n - 1);
        if j >= i {
            j += 1;
        }
        match rng.gen_range(0..4) {
            0 => u.swap(i, j),
            1 => u[i].iter_mut().for_each(|x| *x = -x.clone()),
            _ => {
                let c = BigInt::from(*[-2, -1, 1, 2].get(rng.gen_range(0..4)).unwrap());
                let rj = u[j].clone();
                for (x, y) in u[i].iter_mut().zip(&rj) {
                    *x += &c * y;
                }
            }
        }
    }
    u
}

pub fn to_matrix(rows: &[Vec<BigInt>], cols: usize) -> IntMatrix {
    IntMatrix::from_rows(rows.to_vec(), cols).unwrap()
}

pub fn is_diagonal_chain(s: &[Vec<BigInt>], factors: &[BigInt]) -> bool {
    for (i, row) in s.iter().enumerate() {
        for (j, x) in row.iter().enumerate() {
            let expected = if i == j { factors.get(i) } else { None };
            match expected {
                Some(d) => {
                    if x != d {
                        return false;
                    }
                }
                None => {
                    if !x.is_zero() {
                        return false;
                    }
                }
            }
        }
    }
    factors.iter().all(|d| d.is_positive())
        && factors.windows(2).all(|w| w[1].is_multiple_of(&w[0]))
}

/// All integer vectors of length `n` with entries in `[lo, hi]`, in odometer order.
pub fn all_vectors(n: usize, lo: i64, hi: i64) -> Vec<Vec<i64>> {
    let mut out = vec![Vec::new()];
    for _ in 0..n {
        out = out
            .into_iter()
            .flat_map(|p| {
                (lo..=hi).map(move |x| {
                    let mut q = p.clone();
                    q.push(x);
                    q
                })
            })
            .collect();
    }
    out
}

/// Every permutation of `0..n` as an image vector.
pub fn all_perms(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for p in all_perms(n - 1) {
        for pos in 0..n {
            let mut q = p.clone();
            q.insert(pos, n - 1);
            out.push(q);
        }
    }
    out
}

pub fn binomial(n: u64, k: u64) -> u64 {
    (1..=k).fold(1, |acc, i| acc * (n + 1 - i) / i)
}
