//! Exact integer matrices.
//!
//! Everything here works over arbitrary-precision integers: Smith normal form
//! with unimodular witnesses, row-style Hermite reduction, fraction-free
//! determinants and rank, and maximal minors.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// Dense row-major integer matrix.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct IntMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<BigInt>,
}

impl IntMatrix {
    /// Builds a matrix from row-major entries.
    ///
    /// At least one column is required, except for the empty `0×0` matrix
    /// (the unimodular witness of a matrix without rows).
    pub fn new(rows: usize, cols: usize, entries: Vec<BigInt>) -> Result<Self> {
        if cols == 0 && rows > 0 {
            return Err(Error::Malformed(
                "matrix must have at least one column".into(),
            ));
        }
        if entries.len() != rows * cols {
            return Err(Error::Malformed(format!(
                "expected {} entries for a {rows}x{cols} matrix, got {}",
                rows * cols,
                entries.len()
            )));
        }
        Ok(IntMatrix {
            rows,
            cols,
            entries,
        })
    }

    pub fn zeros(rows: usize, cols: usize) -> Self {
        assert!(
            cols > 0 || rows == 0,
            "matrix must have at least one column"
        );
        IntMatrix {
            rows,
            cols,
            entries: vec![BigInt::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = BigInt::one();
        }
        m
    }

    /// Builds a matrix from nested rows. `cols` is only consulted when `rows` is empty.
    pub fn from_rows(rows: Vec<Vec<BigInt>>, cols: usize) -> Result<Self> {
        let cols = rows.first().map_or(cols, Vec::len);
        if rows.iter().any(|r| r.len() != cols) {
            return Err(Error::Malformed("rows have different lengths".into()));
        }
        let m = rows.len();
        Self::new(m, cols, rows.into_iter().flatten().collect())
    }

    /// Convenience constructor for small literal matrices.
    pub fn from_i64(rows: &[&[i64]]) -> Self {
        let cols = rows.first().map_or(1, |r| r.len());
        Self::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&x| BigInt::from(x)).collect())
                .collect(),
            cols,
        )
        .expect("literal matrix rows must have equal nonzero length")
    }

    /// A single-row matrix.
    pub fn row_vector(v: &[BigInt]) -> Result<Self> {
        Self::new(1, v.len(), v.to_vec())
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn entries(&self) -> &[BigInt] {
        &self.entries
    }

    pub fn row(&self, i: usize) -> &[BigInt] {
        &self.entries[i * self.cols..(i + 1) * self.cols]
    }

    pub fn row_iter(&self) -> impl Iterator<Item = &[BigInt]> {
        (0..self.rows).map(move |i| self.row(i))
    }

    pub fn to_rows(&self) -> Vec<Vec<BigInt>> {
        self.row_iter().map(<[BigInt]>::to_vec).collect()
    }

    pub fn column(&self, j: usize) -> Vec<BigInt> {
        (0..self.rows).map(|i| self[(i, j)].clone()).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(Zero::is_zero)
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn transpose(&self) -> Option<Self> {
        if self.rows == 0 {
            return None;
        }
        let mut t = Self::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t[(j, i)] = self[(i, j)].clone();
            }
        }
        Some(t)
    }

    pub fn mul(&self, other: &IntMatrix) -> Result<IntMatrix> {
        if self.cols != other.rows {
            return Err(Error::DimensionMismatch {
                expected: self.cols,
                found: other.rows,
            });
        }
        let mut out = Self::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = &other[(k, j)];
                    if !b.is_zero() {
                        out[(i, j)] += a * b;
                    }
                }
            }
        }
        Ok(out)
    }

    /// Submatrix on the given columns, in the given order.
    pub fn select_columns(&self, cols: &[usize]) -> IntMatrix {
        if cols.is_empty() {
            return IntMatrix::zeros(self.rows, 1);
        }
        let mut out = Self::zeros(self.rows, cols.len());
        for i in 0..self.rows {
            for (k, &j) in cols.iter().enumerate() {
                out[(i, k)] = self[(i, j)].clone();
            }
        }
        out
    }

    /// Appends zero rows until the matrix has `rows` rows.
    pub fn pad_rows(&self, rows: usize) -> IntMatrix {
        let mut out = self.clone();
        if rows > out.rows {
            out.entries.resize(rows * out.cols, BigInt::zero());
            out.rows = rows;
        }
        out
    }

    pub fn max_abs_entry(&self) -> BigInt {
        self.entries
            .iter()
            .map(Signed::abs)
            .max()
            .unwrap_or_else(BigInt::zero)
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.entries.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    fn swap_cols(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for i in 0..self.rows {
            self.entries.swap(i * self.cols + a, i * self.cols + b);
        }
    }

    /// row[dst] += factor * row[src]
    fn add_row_multiple(&mut self, dst: usize, src: usize, factor: &BigInt) {
        if factor.is_zero() {
            return;
        }
        for j in 0..self.cols {
            let v = &self.entries[src * self.cols + j] * factor;
            self.entries[dst * self.cols + j] += v;
        }
    }

    /// col[dst] += factor * col[src]
    fn add_col_multiple(&mut self, dst: usize, src: usize, factor: &BigInt) {
        if factor.is_zero() {
            return;
        }
        for i in 0..self.rows {
            let v = &self.entries[i * self.cols + src] * factor;
            self.entries[i * self.cols + dst] += v;
        }
    }

    fn negate_row(&mut self, i: usize) {
        for j in 0..self.cols {
            let e = &mut self.entries[i * self.cols + j];
            *e = -std::mem::take(e);
        }
    }
}

impl std::ops::Index<(usize, usize)> for IntMatrix {
    type Output = BigInt;

    fn index(&self, (i, j): (usize, usize)) -> &BigInt {
        &self.entries[i * self.cols + j]
    }
}

impl std::ops::IndexMut<(usize, usize)> for IntMatrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut BigInt {
        &mut self.entries[i * self.cols + j]
    }
}

impl fmt::Display for IntMatrix {
    /// Text format: one row per line, whitespace-separated entries.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, row) in self.row_iter().enumerate() {
            if i > 0 {
                writeln!(f)?;
            }
            let line: Vec<String> = row.iter().map(ToString::to_string).collect();
            write!(f, "{}", line.join(" "))?;
        }
        Ok(())
    }
}

/// `S = U·A·V` with `U`, `V` unimodular and `S` in Smith normal form.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SmithDecomposition {
    pub u: IntMatrix,
    pub s: IntMatrix,
    pub v: IntMatrix,
    /// The nonzero diagonal of `S`, each dividing the next.
    pub factors: Vec<BigInt>,
}

impl SmithDecomposition {
    pub fn rank(&self) -> usize {
        self.factors.len()
    }
}

/// Position of the nonzero entry of smallest magnitude in the trailing block.
fn smallest_pivot(a: &IntMatrix, t: usize) -> Option<(usize, usize)> {
    let mut best: Option<((usize, usize), BigInt)> = None;
    for i in t..a.rows {
        for j in t..a.cols {
            let e = &a[(i, j)];
            if e.is_zero() {
                continue;
            }
            let mag = e.abs();
            if best.as_ref().is_none_or(|(_, b)| mag < *b) {
                best = Some(((i, j), mag));
            }
        }
    }
    best.map(|(p, _)| p)
}

/// Smith normal form with unimodular witnesses, `S = U·A·V`.
pub fn smith_normal_form(a: &IntMatrix) -> SmithDecomposition {
    let (m, n) = (a.rows, a.cols);
    let mut s = a.clone();
    let mut u = IntMatrix::identity(m);
    let mut v = IntMatrix::identity(n);
    // Row operations on S are mirrored on U, column operations on V.
    let mut t = 0;
    while t < m.min(n) {
        let Some((pi, pj)) = smallest_pivot(&s, t) else {
            break;
        };
        s.swap_rows(t, pi);
        u.swap_rows(t, pi);
        s.swap_cols(t, pj);
        v.swap_cols(t, pj);

        loop {
            let mut dirty = false;
            for i in t + 1..m {
                if s[(i, t)].is_zero() {
                    continue;
                }
                let q = -s[(i, t)].div_floor(&s[(t, t)]);
                s.add_row_multiple(i, t, &q);
                u.add_row_multiple(i, t, &q);
                if !s[(i, t)].is_zero() {
                    dirty = true;
                }
            }
            for j in t + 1..n {
                if s[(t, j)].is_zero() {
                    continue;
                }
                let q = -s[(t, j)].div_floor(&s[(t, t)]);
                s.add_col_multiple(j, t, &q);
                v.add_col_multiple(j, t, &q);
                if !s[(t, j)].is_zero() {
                    dirty = true;
                }
            }
            if dirty {
                // A remainder survived; bring the smallest entry of row/column t to the corner.
                let mut best = (t, t);
                let mut mag = s[(t, t)].abs();
                for i in t + 1..m {
                    let e = s[(i, t)].abs();
                    if !e.is_zero() && e < mag {
                        mag = e;
                        best = (i, t);
                    }
                }
                for j in t + 1..n {
                    let e = s[(t, j)].abs();
                    if !e.is_zero() && e < mag {
                        mag = e;
                        best = (t, j);
                    }
                }
                if best.0 != t {
                    s.swap_rows(t, best.0);
                    u.swap_rows(t, best.0);
                }
                if best.1 != t {
                    s.swap_cols(t, best.1);
                    v.swap_cols(t, best.1);
                }
                continue;
            }
            // Row and column t are clear. Enforce divisibility of the trailing block.
            let pivot = s[(t, t)].clone();
            let offender =
                (t + 1..m).find(|&i| (t + 1..n).any(|j| !s[(i, j)].is_multiple_of(&pivot)));
            match offender {
                Some(i) => {
                    let one = BigInt::one();
                    s.add_row_multiple(t, i, &one);
                    u.add_row_multiple(t, i, &one);
                }
                None => break,
            }
        }
        if s[(t, t)].is_negative() {
            s.negate_row(t);
            u.negate_row(t);
        }
        t += 1;
    }
    let factors = (0..t).map(|i| s[(i, i)].clone()).collect();
    SmithDecomposition { u, s, v, factors }
}

/// Row-style Hermite normal form of the row lattice, zero rows dropped.
///
/// Pivots are positive and move strictly right going down; entries above a
/// pivot lie in `[0, pivot)`.
pub fn hermite_normal_form(a: &IntMatrix) -> IntMatrix {
    let mut h = a.clone();
    let (m, n) = (h.rows, h.cols);
    let mut r = 0;
    for c in 0..n {
        if r == m {
            break;
        }
        loop {
            let mut best: Option<(usize, BigInt)> = None;
            for i in r..m {
                let e = &h[(i, c)];
                if !e.is_zero() {
                    let mag = e.abs();
                    if best.as_ref().is_none_or(|(_, b)| mag < *b) {
                        best = Some((i, mag));
                    }
                }
            }
            let Some((p, _)) = best else { break };
            h.swap_rows(r, p);
            let mut done = true;
            for i in r + 1..m {
                if h[(i, c)].is_zero() {
                    continue;
                }
                let q = -h[(i, c)].div_floor(&h[(r, c)]);
                h.add_row_multiple(i, r, &q);
                if !h[(i, c)].is_zero() {
                    done = false;
                }
            }
            if done {
                break;
            }
        }
        if h[(r, c)].is_zero() {
            continue;
        }
        if h[(r, c)].is_negative() {
            h.negate_row(r);
        }
        for i in 0..r {
            let q = -h[(i, c)].div_floor(&h[(r, c)]);
            h.add_row_multiple(i, r, &q);
        }
        r += 1;
    }
    IntMatrix {
        rows: r,
        cols: n,
        entries: h.entries[..r * n].to_vec(),
    }
}

/// Determinant by fraction-free (Bareiss) elimination.
pub fn determinant(a: &IntMatrix) -> Result<BigInt> {
    if !a.is_square() {
        return Err(Error::DimensionMismatch {
            expected: a.rows,
            found: a.cols,
        });
    }
    let n = a.rows;
    let mut m = a.clone();
    let mut sign = BigInt::one();
    let mut prev = BigInt::one();
    for k in 0..n {
        if m[(k, k)].is_zero() {
            match (k + 1..n).find(|&i| !m[(i, k)].is_zero()) {
                Some(i) => {
                    m.swap_rows(k, i);
                    sign = -sign;
                }
                None => return Ok(BigInt::zero()),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = &m[(i, j)] * &m[(k, k)] - &m[(i, k)] * &m[(k, j)];
                m[(i, j)] = num / &prev;
            }
        }
        prev = m[(k, k)].clone();
    }
    Ok(if n == 0 { BigInt::one() } else { sign * prev })
}

/// Rank by fraction-free elimination (independent of the Hermite routine).
pub fn rank(a: &IntMatrix) -> usize {
    let mut m = a.clone();
    let (rows, cols) = (m.rows, m.cols);
    let mut r = 0;
    for c in 0..cols {
        let Some(p) = (r..rows).find(|&i| !m[(i, c)].is_zero()) else {
            continue;
        };
        m.swap_rows(r, p);
        for i in r + 1..rows {
            if m[(i, c)].is_zero() {
                continue;
            }
            let f = m[(i, c)].clone();
            let g = m[(r, c)].clone();
            for j in c..cols {
                let v = &m[(i, j)] * &g - &m[(r, j)] * &f;
                m[(i, j)] = v;
            }
            let content = (c..cols).fold(BigInt::zero(), |acc, j| acc.gcd(&m[(i, j)]));
            if !content.is_zero() && !content.is_one() {
                for j in c..cols {
                    m[(i, j)] = &m[(i, j)] / &content;
                }
            }
        }
        r += 1;
        if r == rows {
            break;
        }
    }
    r
}

/// `true` iff the matrix is square with determinant ±1.
pub fn is_unimodular(a: &IntMatrix) -> bool {
    a.is_square() && determinant(a).is_ok_and(|d| d.abs().is_one())
}

/// Inverse of a unimodular matrix, read off its Smith decomposition
/// (`I = U·M·V` gives `M⁻¹ = V·U`).
pub fn unimodular_inverse(a: &IntMatrix) -> Result<IntMatrix> {
    if !is_unimodular(a) {
        return Err(Error::NotUnimodular);
    }
    let snf = smith_normal_form(a);
    snf.v.mul(&snf.u)
}

/// Maximal minors of a full-row-rank matrix, keyed by increasing 0-based column tuples.
pub fn pluecker_coordinates(a: &IntMatrix) -> Result<BTreeMap<Vec<usize>, BigInt>> {
    let m = a.rows;
    let mut out = BTreeMap::new();
    if m <= a.cols {
        for cols in combinations(a.cols, m) {
            let sub = a.select_columns(&cols);
            out.insert(cols, determinant(&sub)?);
        }
    }
    // Full row rank iff some maximal minor is nonzero.
    if out.values().all(Zero::is_zero) {
        return Err(Error::RankDeficient {
            rank: rank(a),
            rows: m,
        });
    }
    Ok(out)
}

/// All increasing `k`-subsets of `0..n`, in lexicographic order.
pub fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(k);
    fn rec(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            if n - i < k - cur.len() {
                break;
            }
            cur.push(i);
            rec(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    rec(0, n, k, &mut cur, &mut out);
    out
}

/// Adjugate of a square matrix, via cofactors.
pub fn adjugate(a: &IntMatrix) -> Result<IntMatrix> {
    if !a.is_square() {
        return Err(Error::DimensionMismatch {
            expected: a.rows,
            found: a.cols,
        });
    }
    let n = a.rows;
    if n == 1 {
        return Ok(IntMatrix::identity(1));
    }
    let mut adj = IntMatrix::zeros(n, n);
    for i in 0..n {
        for j in 0..n {
            let minor_rows: Vec<Vec<BigInt>> = (0..n)
                .filter(|&r| r != i)
                .map(|r| {
                    (0..n)
                        .filter(|&c| c != j)
                        .map(|c| a[(r, c)].clone())
                        .collect()
                })
                .collect();
            let minor = IntMatrix::from_rows(minor_rows, n - 1)?;
            let d = determinant(&minor)?;
            // adj(A)[j][i] = (-1)^{i+j} det(minor_ij)
            adj[(j, i)] = if (i + j) % 2 == 0 { d } else { -d };
        }
    }
    Ok(adj)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn big(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&x| BigInt::from(x)).collect()
    }

    fn check_snf(a: &IntMatrix) -> SmithDecomposition {
        let d = smith_normal_form(a);
        assert_eq!(d.u.mul(a).unwrap().mul(&d.v).unwrap(), d.s);
        assert!(determinant(&d.u).unwrap().abs().is_one());
        assert!(determinant(&d.v).unwrap().abs().is_one());
        for i in 0..d.s.rows() {
            for j in 0..d.s.cols() {
                if i != j || i >= d.rank() {
                    assert!(d.s[(i, j)].is_zero(), "off-diagonal at ({i},{j})");
                }
            }
        }
        for w in d.factors.windows(2) {
            assert!(w[1].is_multiple_of(&w[0]));
        }
        assert!(d.factors.iter().all(Signed::is_positive));
        d
    }

    #[test]
    fn snf_single_row() {
        let d = check_snf(&IntMatrix::from_i64(&[&[1, 1, 1]]));
        assert_eq!(d.s, IntMatrix::from_i64(&[&[1, 0, 0]]));
        assert_eq!(d.factors, big(&[1]));
    }

    #[test]
    fn snf_zero_matrix() {
        let d = check_snf(&IntMatrix::zeros(2, 3));
        assert!(d.s.is_zero());
        assert_eq!(d.u, IntMatrix::identity(2));
        assert_eq!(d.v, IntMatrix::identity(3));
        assert!(d.factors.is_empty());
    }

    #[test]
    fn snf_two_by_two() {
        // gcd of entries 2, |det| = 8
        let d = check_snf(&IntMatrix::from_i64(&[&[2, 4], &[6, 8]]));
        assert_eq!(d.factors, big(&[2, 4]));
    }

    #[test]
    fn snf_needs_divisibility_fix() {
        let d = check_snf(&IntMatrix::from_i64(&[&[2, 0], &[0, 3]]));
        assert_eq!(d.factors, big(&[1, 6]));
        let d = check_snf(&IntMatrix::from_i64(&[&[0, 0, 0], &[0, 4, 0], &[0, 0, 6]]));
        assert_eq!(d.factors, big(&[2, 12]));
    }

    #[test]
    fn snf_empty_rows() {
        let d = check_snf(&IntMatrix::zeros(0, 3));
        assert!(d.factors.is_empty());
        assert_eq!(d.v, IntMatrix::identity(3));
    }

    #[test]
    fn hnf_examples() {
        assert_eq!(
            hermite_normal_form(&IntMatrix::from_i64(&[&[0, 1], &[1, 0]])),
            IntMatrix::identity(2)
        );
        assert_eq!(
            hermite_normal_form(&IntMatrix::from_i64(&[&[2, 4]])),
            IntMatrix::from_i64(&[&[2, 4]])
        );
        assert_eq!(
            hermite_normal_form(&IntMatrix::from_i64(&[&[1, 2], &[3, 4]])),
            IntMatrix::from_i64(&[&[1, 0], &[0, 2]])
        );
        assert_eq!(
            hermite_normal_form(&IntMatrix::from_i64(&[&[2, 4], &[6, 8]])),
            IntMatrix::from_i64(&[&[2, 0], &[0, 4]])
        );
        assert_eq!(hermite_normal_form(&IntMatrix::zeros(2, 2)).rows(), 0);
    }

    #[test]
    fn hnf_negative_and_dependent_rows() {
        let h = hermite_normal_form(&IntMatrix::from_i64(&[
            &[-2, -4, 0],
            &[1, 2, 0],
            &[0, 0, -3],
        ]));
        assert_eq!(h, IntMatrix::from_i64(&[&[1, 2, 0], &[0, 0, 3]]));
    }

    #[test]
    fn pluecker_examples() {
        let p = pluecker_coordinates(&IntMatrix::identity(2)).unwrap();
        assert_eq!(p.len(), 1);
        assert_eq!(p[&vec![0, 1]], BigInt::one());

        let p = pluecker_coordinates(&IntMatrix::from_i64(&[&[1, 0, 0], &[0, 1, 0]])).unwrap();
        assert_eq!(p[&vec![0, 1]], BigInt::from(1));
        assert_eq!(p[&vec![0, 2]], BigInt::from(0));
        assert_eq!(p[&vec![1, 2]], BigInt::from(0));

        let p = pluecker_coordinates(&IntMatrix::from_i64(&[&[2, 0], &[0, 3]])).unwrap();
        assert_eq!(p[&vec![0, 1]], BigInt::from(6));
    }

    #[test]
    fn pluecker_rejects_rank_deficient() {
        let err = pluecker_coordinates(&IntMatrix::from_i64(&[&[1, 2], &[2, 4]])).unwrap_err();
        assert!(matches!(err, Error::RankDeficient { rank: 1, rows: 2 }));
    }

    #[test]
    fn determinant_and_rank() {
        let a = IntMatrix::from_i64(&[&[2, -1, 0], &[1, 3, 4], &[0, 5, -2]]);
        // cofactor expansion along the first row: 2(-6-20) + 1(-2-0) = -54
        assert_eq!(determinant(&a).unwrap(), BigInt::from(-54));
        assert_eq!(rank(&a), 3);
        assert_eq!(rank(&IntMatrix::from_i64(&[&[1, 2, 3], &[2, 4, 6]])), 1);
        assert_eq!(rank(&IntMatrix::zeros(0, 2)), 0);
    }

    #[test]
    fn unimodular_inverse_roundtrip() {
        let m = IntMatrix::from_i64(&[&[2, 1], &[1, 1]]);
        let inv = unimodular_inverse(&m).unwrap();
        assert_eq!(m.mul(&inv).unwrap(), IntMatrix::identity(2));
        assert!(matches!(
            unimodular_inverse(&IntMatrix::from_i64(&[&[2, 0], &[0, 1]])),
            Err(Error::NotUnimodular)
        ));
    }

    #[test]
    fn adjugate_identity() {
        let a = IntMatrix::from_i64(&[&[1, 2], &[3, 4]]);
        let adj = adjugate(&a).unwrap();
        assert_eq!(adj, IntMatrix::from_i64(&[&[4, -2], &[-3, 1]]));
    }

    #[test]
    fn large_entries_stay_exact() {
        let big_entry = BigInt::from(i64::MAX) * BigInt::from(i64::MAX);
        let a = IntMatrix::new(1, 2, vec![big_entry.clone(), big_entry.clone() * 3]).unwrap();
        let d = check_snf(&a);
        assert_eq!(d.factors, vec![big_entry]);
    }
}
