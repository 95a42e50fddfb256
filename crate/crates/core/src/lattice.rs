//! Row lattices: the subgroup of `Z^n` generated by the rows of a matrix.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::exactmat::{
    adjugate, determinant, hermite_normal_form, is_unimodular, pluecker_coordinates,
    smith_normal_form, IntMatrix,
};
use crate::perm::Permutation;

/// A row lattice in `Z^n`, stored by its Hermite basis.
///
/// Since the basis is canonical, lattice equality is structural equality.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RowLattice {
    basis: IntMatrix,
}

impl RowLattice {
    pub fn ambient_dim(&self) -> usize {
        self.basis.cols()
    }

    pub fn basis(&self) -> &IntMatrix {
        &self.basis
    }

    pub fn rank(&self) -> usize {
        self.basis.rows()
    }

    /// The zero lattice `{0} ⊂ Z^n`.
    pub fn zero(n: usize) -> Self {
        RowLattice {
            basis: IntMatrix::zeros(0, n),
        }
    }
}

pub fn lattice_of(a: &IntMatrix) -> RowLattice {
    RowLattice {
        basis: hermite_normal_form(a),
    }
}

/// Membership by echelon sweep against the Hermite basis.
pub fn contains(lattice: &RowLattice, v: &[BigInt]) -> Result<bool> {
    let n = lattice.ambient_dim();
    if v.len() != n {
        return Err(Error::DimensionMismatch {
            expected: n,
            found: v.len(),
        });
    }
    let mut rest = v.to_vec();
    for row in lattice.basis.row_iter() {
        let p = row
            .iter()
            .position(|x| !x.is_zero())
            .expect("Hermite basis has no zero rows");
        if rest[..p].iter().any(|x| !x.is_zero()) {
            return Ok(false);
        }
        let (q, r) = rest[p].div_rem(&row[p]);
        if !r.is_zero() {
            return Ok(false);
        }
        if !q.is_zero() {
            for (x, b) in rest.iter_mut().zip(row) {
                *x -= &q * b;
            }
        }
    }
    Ok(rest.iter().all(Zero::is_zero))
}

pub fn equal(a: &RowLattice, b: &RowLattice) -> Result<bool> {
    if a.ambient_dim() != b.ambient_dim() {
        return Err(Error::DimensionMismatch {
            expected: a.ambient_dim(),
            found: b.ambient_dim(),
        });
    }
    Ok(a.basis == b.basis)
}

/// A full-row-rank matrix together with its maximal minors, for repeated
/// Plücker comparisons.
#[derive(Clone, Debug)]
pub struct Pluecker {
    matrix: IntMatrix,
    columns: Vec<Vec<usize>>,
    minors: Vec<BigInt>,
    /// Index of the first nonzero minor.
    pivot: usize,
}

impl Pluecker {
    /// Fails with `RankDeficient` unless the rows are linearly independent.
    pub fn new(a: &IntMatrix) -> Result<Self> {
        let coords = pluecker_coordinates(a)?;
        let (columns, minors): (Vec<_>, Vec<_>) = coords.into_iter().unzip();
        let pivot = minors
            .iter()
            .position(|d| !d.is_zero())
            .expect("full-rank matrix has a nonzero maximal minor");
        Ok(Pluecker {
            matrix: a.clone(),
            columns,
            minors,
            pivot,
        })
    }

    pub fn matrix(&self) -> &IntMatrix {
        &self.matrix
    }

    /// Maximal minors in lexicographic order of their column tuples.
    pub fn minors(&self) -> &[BigInt] {
        &self.minors
    }

    /// Whether the two row lattices coincide: the minors agree up to one
    /// global sign, and `B_I · A_I⁻¹` is integral for one column tuple `I`
    /// with a nonzero minor.
    pub fn lattice_equal(&self, other: &Pluecker) -> Result<bool> {
        let (a, b) = (&self.matrix, &other.matrix);
        if a.cols() != b.cols() {
            return Err(Error::DimensionMismatch {
                expected: a.cols(),
                found: b.cols(),
            });
        }
        if a.rows() != b.rows() {
            return Err(Error::DimensionMismatch {
                expected: a.rows(),
                found: b.rows(),
            });
        }
        if a.rows() == 0 {
            return Ok(true);
        }
        let same = self.minors == other.minors;
        let opposite = !same
            && self
                .minors
                .iter()
                .zip(&other.minors)
                .all(|(x, y)| x.magnitude() == y.magnitude() && x.sign() == -y.sign());
        if !same && !opposite {
            return Ok(false);
        }
        let cols = &self.columns[self.pivot];
        let det = &self.minors[self.pivot];
        let a_sub = a.select_columns(cols);
        let b_sub = b.select_columns(cols);
        let prod = b_sub.mul(&adjugate(&a_sub)?)?;
        debug_assert_eq!(&determinant(&a_sub)?, det);
        Ok(prod.entries().iter().all(|x| x.is_multiple_of(det)))
    }
}

/// Lattice equality through maximal minors, independent of Hermite reduction.
///
/// Both matrices must have the same shape and full row rank.
pub fn pluecker_equal(a: &IntMatrix, b: &IntMatrix) -> Result<bool> {
    if a.cols() != b.cols() || a.rows() != b.rows() {
        let (expected, found) = if a.cols() != b.cols() {
            (a.cols(), b.cols())
        } else {
            (a.rows(), b.rows())
        };
        return Err(Error::DimensionMismatch { expected, found });
    }
    Pluecker::new(a)?.lattice_equal(&Pluecker::new(b)?)
}

/// The lattice of `basis · M` for unimodular `M`.
pub fn transform(lattice: &RowLattice, m: &IntMatrix) -> Result<RowLattice> {
    let n = lattice.ambient_dim();
    if m.rows() != n || m.cols() != n {
        return Err(Error::DimensionMismatch {
            expected: n,
            found: m.rows().max(m.cols()),
        });
    }
    if !is_unimodular(m) {
        return Err(Error::NotUnimodular);
    }
    Ok(lattice_of(&lattice.basis.mul(m)?))
}

/// Column permutation of a lattice: coordinate `j` of the result is coordinate `σ(j)` of the input.
pub fn permute_columns(lattice: &RowLattice, sigma: &Permutation) -> RowLattice {
    lattice_of(&lattice.basis.select_columns(sigma.images()))
}

/// Per-column data that any column permutation relating two lattices must respect.
#[derive(Clone, Debug, PartialEq, Eq)]
struct ColumnInvariant {
    content: BigInt,
    projection_factors: Vec<BigInt>,
}

fn column_invariants(basis: &IntMatrix) -> Vec<ColumnInvariant> {
    let n = basis.cols();
    (0..n)
        .map(|j| {
            let content = basis
                .column(j)
                .iter()
                .fold(BigInt::zero(), |acc, x| acc.gcd(x));
            let others: Vec<usize> = (0..n).filter(|&k| k != j).collect();
            let projection_factors = if others.is_empty() || basis.rows() == 0 {
                Vec::new()
            } else {
                smith_normal_form(&basis.select_columns(&others)).factors
            };
            ColumnInvariant {
                content,
                projection_factors,
            }
        })
        .collect()
}

/// Finds the lexicographically least column permutation `σ` with
/// `lattice_of(A) = lattice_of(B∘σ)`, where column `j` of `B∘σ` is column `σ(j)` of `B`.
///
/// Backtracking over `S_n`, pruned by per-column invariants and by equality
/// of the projections onto the columns assigned so far. The worst case is
/// still `n!` leaves, so this is meant for small ambient dimension.
pub fn permuted_equal(a: &IntMatrix, b: &IntMatrix) -> Result<Option<Permutation>> {
    let n = a.cols();
    if b.cols() != n {
        return Err(Error::DimensionMismatch {
            expected: n,
            found: b.cols(),
        });
    }
    let la = lattice_of(a);
    let lb = lattice_of(b);
    if la.rank() != lb.rank() {
        return Ok(None);
    }
    let inv_a = column_invariants(&la.basis);
    let inv_b = column_invariants(&lb.basis);

    struct Search<'a> {
        n: usize,
        a: &'a IntMatrix,
        b: &'a IntMatrix,
        inv_a: &'a [ColumnInvariant],
        inv_b: &'a [ColumnInvariant],
        target: &'a RowLattice,
    }

    impl Search<'_> {
        fn run(&self, assigned: &mut Vec<usize>, used: &mut [bool]) -> Option<Permutation> {
            let k = assigned.len();
            if k == self.n {
                let sigma = Permutation::from_images(assigned.clone()).ok()?;
                let c = lattice_of(&self.b.select_columns(sigma.images()));
                return (c == *self.target).then_some(sigma);
            }
            let prefix: Vec<usize> = (0..=k).collect();
            let proj_a = hermite_normal_form(&self.a.select_columns(&prefix));
            for cand in 0..self.n {
                if used[cand] || self.inv_a[k] != self.inv_b[cand] {
                    continue;
                }
                assigned.push(cand);
                let proj_b = hermite_normal_form(&self.b.select_columns(assigned));
                if proj_a == proj_b {
                    used[cand] = true;
                    if let Some(found) = self.run(assigned, used) {
                        return Some(found);
                    }
                    used[cand] = false;
                }
                assigned.pop();
            }
            None
        }
    }

    let search = Search {
        n,
        a: &la.basis,
        b: &lb.basis,
        inv_a: &inv_a,
        inv_b: &inv_b,
        target: &la,
    };
    Ok(search.run(&mut Vec::with_capacity(n), &mut vec![false; n]))
}
