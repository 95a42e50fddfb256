//! Orbits and stabilizers of `G = D_n(l_1, …, l_n)` acting on affine `n`-space.
//!
//! A point is represented only by its zero pattern: the orbit type depends on
//! which coordinates vanish, never on the values of the nonzero ones.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::diag::{DiagSubgroup, IsoType};
use crate::error::{Error, Result};

/// The weight vector `l` of `G = D_n(l)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct WeightVector(Vec<BigInt>);

impl WeightVector {
    pub fn new(l: Vec<BigInt>) -> Result<Self> {
        if l.is_empty() {
            return Err(Error::Malformed("weight vector must be nonempty".into()));
        }
        Ok(WeightVector(l))
    }

    pub fn from_i64(l: &[i64]) -> Self {
        WeightVector(l.iter().map(|&x| BigInt::from(x)).collect())
    }

    pub fn n(&self) -> usize {
        self.0.len()
    }

    pub fn weights(&self) -> &[BigInt] {
        &self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(Zero::is_zero)
    }

    /// Dimension of `G`: `n − 1` unless `l = 0`.
    pub fn group_dim(&self) -> usize {
        self.n() - usize::from(!self.is_zero())
    }

    pub fn group(&self) -> DiagSubgroup {
        DiagSubgroup::from_weights(&self.0).expect("weight vector is nonempty")
    }
}

/// Set of vanishing coordinates of a point; the others are generic nonzero.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ZeroPattern(Vec<bool>);

impl ZeroPattern {
    /// No vanishing coordinates: a point off every coordinate hyperplane.
    pub fn generic(n: usize) -> Self {
        ZeroPattern(vec![false; n])
    }

    pub fn origin(n: usize) -> Self {
        ZeroPattern(vec![true; n])
    }

    /// Pattern from 0-based coordinate indices.
    pub fn from_indices(n: usize, zeros: &[usize]) -> Result<Self> {
        let mut mask = vec![false; n];
        for &i in zeros {
            if i >= n {
                return Err(Error::DimensionMismatch {
                    expected: n,
                    found: i + 1,
                });
            }
            mask[i] = true;
        }
        Ok(ZeroPattern(mask))
    }

    pub fn from_mask(mask: Vec<bool>) -> Self {
        ZeroPattern(mask)
    }

    /// All `2^n` patterns, ordered by bitmask.
    pub fn all(n: usize) -> impl Iterator<Item = ZeroPattern> {
        (0u64..1 << n).map(move |bits| ZeroPattern((0..n).map(|i| bits >> i & 1 == 1).collect()))
    }

    pub fn n(&self) -> usize {
        self.0.len()
    }

    pub fn is_zero_at(&self, i: usize) -> bool {
        self.0[i]
    }

    pub fn zeros(&self) -> Vec<usize> {
        (0..self.n()).filter(|&i| self.0[i]).collect()
    }

    pub fn nonzeros(&self) -> Vec<usize> {
        (0..self.n()).filter(|&i| !self.0[i]).collect()
    }

    pub fn count(&self) -> usize {
        self.0.iter().filter(|&&z| z).count()
    }

    fn check(&self, w: &WeightVector) -> Result<()> {
        if self.n() != w.n() {
            return Err(Error::DimensionMismatch {
                expected: w.n(),
                found: self.n(),
            });
        }
        Ok(())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OrbitReport {
    pub stabilizer: IsoType,
    pub stabilizer_dim: usize,
    /// Present iff the stabilizer is finite.
    pub stabilizer_order: Option<BigInt>,
    pub orbit_dim: usize,
    pub closed: bool,
    pub origin_in_closure: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ActionReport {
    pub group_dim: usize,
    pub stable: bool,
    pub has_nonconstant_invariants: bool,
    pub invariant_monomial: Option<Vec<BigInt>>,
    /// 0-based axes `i` whose orbit `O_i` (zeros exactly at `i`) is `(n−1)`-dimensional and not closed.
    pub nonclosed_codim1_orbit_axes: Vec<usize>,
}

/// The stabilizer `{t : t_j = 1 off S, ∏_{i∈S} t_i^{l_i} = 1}` ≅ `D_{|S|}(l|_S)`.
pub fn stabilizer(w: &WeightVector, s: &ZeroPattern) -> Result<IsoType> {
    s.check(w)?;
    let restricted: Vec<BigInt> = s.zeros().into_iter().map(|i| w.0[i].clone()).collect();
    if restricted.is_empty() {
        return Ok(IsoType {
            torus_rank: 0,
            factors: Vec::new(),
        });
    }
    Ok(DiagSubgroup::from_weights(&restricted)?.iso_type())
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum SignProfile {
    AllZero,
    Positive,
    Negative,
    /// Both strictly positive and strictly negative entries.
    Mixed,
    /// Nonzero entries of one sign together with zeros.
    OneSignWithZeros,
}

fn sign_profile<'a>(values: impl Iterator<Item = &'a BigInt>) -> SignProfile {
    let (mut pos, mut neg, mut zero) = (false, false, false);
    for x in values {
        if x.is_positive() {
            pos = true;
        } else if x.is_negative() {
            neg = true;
        } else {
            zero = true;
        }
    }
    match (pos, neg, zero) {
        (true, true, _) => SignProfile::Mixed,
        (false, false, _) => SignProfile::AllZero,
        (_, _, true) => SignProfile::OneSignWithZeros,
        (true, false, false) => SignProfile::Positive,
        (false, true, false) => SignProfile::Negative,
    }
}

/// An orbit with zero set `S` fails to be closed iff some one-parameter
/// subgroup `t ↦ (t^{d_1}, …, t^{d_n})` of `G` (so `⟨d, l⟩ = 0`) has
/// `d_j ≥ 0` off `S` and `d_j > 0` for some `j` off `S`.
///
/// That happens unless the complement of `S` is empty, or `l` vanishes on `S`
/// and is nonzero of one sign on the complement.
pub fn is_orbit_closed(w: &WeightVector, s: &ZeroPattern) -> Result<bool> {
    s.check(w)?;
    let off = s.nonzeros();
    if off.is_empty() {
        return Ok(true);
    }
    let vanishes_on_zeros = s.zeros().iter().all(|&i| w.0[i].is_zero());
    let definite = matches!(
        sign_profile(off.iter().map(|&i| &w.0[i])),
        SignProfile::Positive | SignProfile::Negative
    );
    Ok(vanishes_on_zeros && definite)
}

/// Zero pattern of `lim_{t→0} φ(t)·a` for `φ(t) = (t^{d_1}, …, t^{d_n})`, if the limit exists.
pub fn limit_pattern(
    w: &WeightVector,
    s: &ZeroPattern,
    d: &[BigInt],
) -> Result<Option<ZeroPattern>> {
    s.check(w)?;
    if d.len() != w.n() {
        return Err(Error::DimensionMismatch {
            expected: w.n(),
            found: d.len(),
        });
    }
    let pairing: BigInt = d.iter().zip(&w.0).map(|(a, b)| a * b).sum();
    if !pairing.is_zero() {
        return Err(Error::NotInGroup(pairing.to_string()));
    }
    let off = s.nonzeros();
    if off.iter().any(|&j| d[j].is_negative()) {
        return Ok(None);
    }
    let mut mask = s.0.clone();
    for j in off {
        if d[j].is_positive() {
            mask[j] = true;
        }
    }
    Ok(Some(ZeroPattern(mask)))
}

/// A one-parameter subgroup of `G` driving a point with zero set `S` to the origin.
pub fn origin_limit_witness(w: &WeightVector, s: &ZeroPattern) -> Result<Option<Vec<BigInt>>> {
    s.check(w)?;
    let n = w.n();
    let off = s.nonzeros();
    let mut d = vec![BigInt::zero(); n];
    if off.is_empty() {
        return Ok(Some(d));
    }
    let l = &w.0;
    let sum_off: BigInt = off.iter().map(|&j| &l[j]).sum();
    if let Some(&i) = s.zeros().iter().find(|&&i| !l[i].is_zero()) {
        // The coordinate i is already zero, so d_i is free and can absorb the pairing.
        let scale = l[i].abs();
        for &j in &off {
            d[j] = scale.clone();
        }
        d[i] = if l[i].is_positive() {
            -sum_off
        } else {
            sum_off
        };
        return Ok(Some(d));
    }
    match sign_profile(off.iter().map(|&j| &l[j])) {
        SignProfile::AllZero => {
            for &j in &off {
                d[j] = BigInt::one();
            }
            Ok(Some(d))
        }
        SignProfile::Mixed => {
            let pos: BigInt = off.iter().map(|&j| &l[j]).filter(|x| x.is_positive()).sum();
            let neg: BigInt = -off
                .iter()
                .map(|&j| &l[j])
                .filter(|x| x.is_negative())
                .sum::<BigInt>();
            for &j in &off {
                d[j] = if l[j].is_positive() {
                    neg.clone()
                } else if l[j].is_negative() {
                    pos.clone()
                } else {
                    BigInt::one()
                };
            }
            Ok(Some(d))
        }
        _ => Ok(None),
    }
}

pub fn orbit_report(w: &WeightVector, s: &ZeroPattern) -> Result<OrbitReport> {
    let stab = stabilizer(w, s)?;
    let stabilizer_dim = stab.torus_rank;
    let witness = origin_limit_witness(w, s)?;
    if let Some(d) = &witness {
        debug_assert_eq!(limit_pattern(w, s, d)?, Some(ZeroPattern::origin(w.n())));
    }
    Ok(OrbitReport {
        stabilizer_order: stab.order(),
        stabilizer: stab,
        stabilizer_dim,
        orbit_dim: w.group_dim() - stabilizer_dim,
        closed: is_orbit_closed(w, s)?,
        origin_in_closure: witness.is_some(),
    })
}

/// Generic orbits are closed iff all weights are nonzero of one sign.
pub fn is_stable(w: &WeightVector) -> bool {
    matches!(
        sign_profile(w.0.iter()),
        SignProfile::Positive | SignProfile::Negative
    )
}

/// A nonconstant invariant monomial `x^m`, `m ∈ Z·l`, `m ≥ 0`, if one exists.
pub fn invariant_monomial(w: &WeightVector) -> Option<Vec<BigInt>> {
    match sign_profile(w.0.iter()) {
        SignProfile::Positive => Some(w.0.clone()),
        SignProfile::Negative => Some(w.0.iter().map(|x| -x).collect()),
        SignProfile::OneSignWithZeros => {
            if w.0.iter().any(Signed::is_negative) {
                Some(w.0.iter().map(|x| -x).collect())
            } else {
                Some(w.0.clone())
            }
        }
        SignProfile::AllZero | SignProfile::Mixed => None,
    }
}

pub fn action_report(w: &WeightVector) -> Result<ActionReport> {
    let n = w.n();
    let mut axes = Vec::new();
    for i in 0..n {
        let report = orbit_report(w, &ZeroPattern::from_indices(n, &[i])?)?;
        if report.orbit_dim + 1 == n && !report.closed {
            axes.push(i);
        }
    }
    let monomial = invariant_monomial(w);
    Ok(ActionReport {
        group_dim: w.group_dim(),
        stable: is_stable(w),
        has_nonconstant_invariants: monomial.is_some(),
        invariant_monomial: monomial,
        nonclosed_codim1_orbit_axes: axes,
    })
}
