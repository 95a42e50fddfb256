//! Diagonalizable subgroups `D_n(A)` of the diagonal torus.
//!
//! `D_n(A)` is the joint kernel of the characters whose exponent vectors are
//! the rows of `A`; it depends only on the row lattice of `A`. Conjugacy is
//! decided under four ambient groups:
//!
//! * `GL_n` and the monomial group `N_{GL_n}(D_n)`: a column permutation
//!   relating the row lattices (the two notions coincide);
//! * `Aut A^n` in codimension at most one: the same permutation test on a
//!   single weight vector, with a canonical representative in `L_n`;
//! * `Cr_n`: equality of isomorphism types, with an explicit unimodular
//!   exponent matrix of a monomial birational map as witness.

use std::cmp::Ordering;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::exactmat::{smith_normal_form, unimodular_inverse, IntMatrix};
use crate::lattice::{self, lattice_of, RowLattice};
use crate::perm::{Permutation, Sign};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct DiagSubgroup {
    lattice: RowLattice,
}

impl DiagSubgroup {
    /// `D_n(A)` for a defining matrix with `n` columns.
    pub fn from_matrix(a: &IntMatrix) -> Self {
        DiagSubgroup {
            lattice: lattice_of(a),
        }
    }

    /// `D_n(l_1, …, l_n)`, the kernel of one character.
    pub fn from_weights(l: &[BigInt]) -> Result<Self> {
        if l.is_empty() {
            return Err(Error::Malformed("weight vector must be nonempty".into()));
        }
        Ok(Self::from_matrix(&IntMatrix::row_vector(l)?))
    }

    pub fn from_lattice(lattice: RowLattice) -> Self {
        DiagSubgroup { lattice }
    }

    /// The whole torus `D_n`.
    pub fn full_torus(n: usize) -> Self {
        DiagSubgroup {
            lattice: RowLattice::zero(n),
        }
    }

    pub fn ambient_dim(&self) -> usize {
        self.lattice.ambient_dim()
    }

    pub fn lattice(&self) -> &RowLattice {
        &self.lattice
    }

    /// `n − rk A`.
    pub fn dimension(&self) -> usize {
        self.ambient_dim() - self.lattice.rank()
    }

    /// `μ_{d_1} × ⋯ × μ_{d_s} × G_m^{torus_rank}`.
    pub fn iso_type(&self) -> IsoType {
        let factors = smith_normal_form(self.lattice.basis())
            .factors
            .into_iter()
            .filter(|d| !d.is_one())
            .collect();
        IsoType {
            torus_rank: self.dimension(),
            factors,
        }
    }

    pub fn contains_character(&self, l: &[BigInt]) -> Result<bool> {
        lattice::contains(&self.lattice, l)
    }
}

/// Torus rank plus the nontrivial invariant factors of the component group.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct IsoType {
    pub torus_rank: usize,
    pub factors: Vec<BigInt>,
}

impl IsoType {
    pub fn is_finite(&self) -> bool {
        self.torus_rank == 0
    }

    /// Group order when finite.
    pub fn order(&self) -> Option<BigInt> {
        self.is_finite()
            .then(|| self.factors.iter().fold(BigInt::one(), |acc, d| acc * d))
    }

    pub fn is_trivial(&self) -> bool {
        self.torus_rank == 0 && self.factors.is_empty()
    }
}

/// The unique `Cr_n` representative
/// `ker ε_{r+1}^{d_1} ∩ ⋯ ∩ ker ε_{r+s}^{d_s} ∩ ker ε_{r+s+1} ∩ ⋯ ∩ ker ε_n`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct CanonicalCrn {
    pub r: usize,
    pub factors: Vec<BigInt>,
    pub canonical_matrix: IntMatrix,
}

fn check_same_dim(g1: &DiagSubgroup, g2: &DiagSubgroup) -> Result<()> {
    if g1.ambient_dim() != g2.ambient_dim() {
        return Err(Error::DimensionMismatch {
            expected: g1.ambient_dim(),
            found: g2.ambient_dim(),
        });
    }
    Ok(())
}

/// Column permutation `σ` with `D_n(A) = D_n(B∘σ)`, if the groups are `GL_n`-conjugate.
pub fn conjugate_in_gl(g1: &DiagSubgroup, g2: &DiagSubgroup) -> Result<Option<Permutation>> {
    check_same_dim(g1, g2)?;
    lattice::permuted_equal(g1.lattice.basis(), g2.lattice.basis())
}

pub fn conjugate_in_crn(g1: &DiagSubgroup, g2: &DiagSubgroup) -> Result<bool> {
    check_same_dim(g1, g2)?;
    Ok(g1.iso_type() == g2.iso_type())
}

/// Unimodular `M` with `transform(G1.lattice, M⁻¹) = G2.lattice`.
///
/// With `S = U_A·A·V_A = U_B·B·V_B` (bases padded to equal row count) we have
/// `A·V_A·V_B⁻¹ = U_A⁻¹·U_B·B`, so `M = V_B·V_A⁻¹`.
pub fn crn_conjugator(g1: &DiagSubgroup, g2: &DiagSubgroup) -> Result<Option<IntMatrix>> {
    check_same_dim(g1, g2)?;
    if !conjugate_in_crn(g1, g2)? {
        return Ok(None);
    }
    let rows = g1.lattice.rank().max(g2.lattice.rank());
    let a = g1.lattice.basis().pad_rows(rows);
    let b = g2.lattice.basis().pad_rows(rows);
    let sa = smith_normal_form(&a);
    let sb = smith_normal_form(&b);
    debug_assert_eq!(sa.s, sb.s);
    let m = sb.v.mul(&unimodular_inverse(&sa.v)?)?;
    Ok(Some(m))
}

pub fn crn_canonical(g: &DiagSubgroup) -> CanonicalCrn {
    let n = g.ambient_dim();
    let iso = g.iso_type();
    let r = iso.torus_rank;
    let s = iso.factors.len();
    let mut m = IntMatrix::zeros(n - r, n);
    for (k, d) in iso.factors.iter().enumerate() {
        m[(k, r + k)] = d.clone();
    }
    for k in s..n - r {
        m[(k, r + k)] = BigInt::one();
    }
    CanonicalCrn {
        r,
        factors: iso.factors,
        canonical_matrix: m,
    }
}

/// `d` such that an `(n−1)`-dimensional `D_n(l)` is `Cr_n`-conjugate to `ker ε_n^d`.
pub fn crn_codim1_canonical(l: &[BigInt]) -> Result<BigInt> {
    if l.iter().all(Zero::is_zero) {
        return Err(Error::ZeroVector);
    }
    Ok(gcd_all(l))
}

pub fn gcd_all(l: &[BigInt]) -> BigInt {
    l.iter().fold(BigInt::zero(), |acc, x| acc.gcd(x))
}

/// Standard lexicographic order on `Z^n`.
pub fn lex_cmp(a: &[BigInt], b: &[BigInt]) -> Ordering {
    a.cmp(b)
}

fn sorted(l: &[BigInt]) -> Vec<BigInt> {
    let mut v = l.to_vec();
    v.sort();
    v
}

fn negated(l: &[BigInt]) -> Vec<BigInt> {
    l.iter().map(|x| -x).collect()
}

/// Membership in `L_n`: weakly increasing and lexicographically at most
/// its negated reversal.
pub fn in_canonical_domain(l: &[BigInt]) -> bool {
    let increasing = l.windows(2).all(|w| w[0] <= w[1]);
    let flipped: Vec<BigInt> = l.iter().rev().map(|x| -x).collect();
    increasing && lex_cmp(l, &flipped) != Ordering::Greater
}

/// The representative in `L_n` of the orbit of `l` under coordinate
/// permutations and global sign.
pub fn codim1_canonical(l: &[BigInt]) -> Result<Vec<BigInt>> {
    if l.iter().all(Zero::is_zero) {
        return Err(Error::ZeroVector);
    }
    let up = sorted(l);
    let down = sorted(&negated(l));
    Ok(if lex_cmp(&down, &up) == Ordering::Less {
        down
    } else {
        up
    })
}

/// Witness for monomial conjugacy of `D_n(l)` and `D_n(l')`:
/// `(l'_{σ(1)}, …, l'_{σ(n)}) = ε·l`.
pub fn codim1_relation(l: &[BigInt], l_prime: &[BigInt]) -> Result<Option<(Permutation, Sign)>> {
    if l.len() != l_prime.len() {
        return Err(Error::DimensionMismatch {
            expected: l.len(),
            found: l_prime.len(),
        });
    }
    let g1 = DiagSubgroup::from_weights(l)?;
    let g2 = DiagSubgroup::from_weights(l_prime)?;
    Ok(conjugate_in_gl(&g1, &g2)?.map(|sigma| {
        let sign = if sigma.permute(l_prime) == l {
            Sign::Plus
        } else {
            Sign::Minus
        };
        (sigma, sign)
    }))
}

/// Conjugacy in `Aut A^n` for groups of dimension at least `n − 1`.
pub fn conjugate_in_autn_codim1(
    g1: &DiagSubgroup,
    g2: &DiagSubgroup,
) -> Result<Option<(Permutation, Sign)>> {
    check_same_dim(g1, g2)?;
    let n = g1.ambient_dim();
    for g in [g1, g2] {
        if g.lattice.rank() > 1 {
            return Err(Error::CodimensionTooLarge {
                dimension: g.dimension(),
                ambient: n,
            });
        }
    }
    match (g1.lattice.rank(), g2.lattice.rank()) {
        (0, 0) => Ok(Some((Permutation::identity(n), Sign::Plus))),
        (1, 1) => codim1_relation(g1.lattice.basis().row(0), g2.lattice.basis().row(0)),
        _ => Ok(None),
    }
}

fn check_primitive(l: &[BigInt]) -> Result<()> {
    if l.iter().all(Zero::is_zero) {
        return Err(Error::ZeroVector);
    }
    if !gcd_all(l).is_one() {
        return Err(Error::NotPrimitive);
    }
    Ok(())
}

/// Equality of the one-dimensional tori `T(l)` and `T(l')`: `l = ±l'`.
pub fn torus_equal_1dim(l: &[BigInt], l_prime: &[BigInt]) -> Result<bool> {
    if l.len() != l_prime.len() {
        return Err(Error::DimensionMismatch {
            expected: l.len(),
            found: l_prime.len(),
        });
    }
    for v in [l, l_prime] {
        if !gcd_all(v).is_one() {
            return Err(Error::NotPrimitive);
        }
    }
    Ok(l == l_prime || negated(l_prime) == l)
}

/// Canonical one-dimensional torus `T(l_1, l_2, l_3)` in `Aut A^3`.
pub fn aut3_torus_canonical(l: &[BigInt]) -> Result<Vec<BigInt>> {
    if l.len() != 3 {
        return Err(Error::DimensionMismatch {
            expected: 3,
            found: l.len(),
        });
    }
    check_primitive(l)?;
    codim1_canonical(l)
}

pub fn is_positive_vector(l: &[BigInt]) -> bool {
    l.iter().all(|x| !x.is_negative())
}
