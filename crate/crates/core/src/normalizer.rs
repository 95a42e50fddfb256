//! Normalizers and centralizers of `D_n(l)` in `Aut A^n`.
//!
//! The case split follows the orbit geometry of the action: when the
//! normalizer is forced to permute coordinate hyperplanes it sits inside the
//! monomial group, and its permutation part is computed exactly. For a single
//! axis weight `±e_i` the translations along `x_i` also normalize. With weights
//! of both signs and a unit weight only the monomial part is certified.

use std::collections::{BTreeMap, BTreeSet, VecDeque};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::diag::DiagSubgroup;
use crate::perm::{Permutation, Sign};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum NormalizerCase {
    /// `l = 0`: the normalizer of `D_n` is the monomial group.
    FullTorus,
    /// All weights nonzero with one sign.
    SameSignAllNonzero,
    /// No weight equals `±1`.
    NoUnitWeights,
    /// Weights include `0` and `±1`, at least two are nonzero, all nonzero share a sign.
    ZeroAndUnitSameSign,
    /// `l = ±e_i` (0-based axis).
    AxisCase(usize),
    /// Weights of both signs, one of them `±1`.
    MixedSigns,
}

impl NormalizerCase {
    pub fn tag(&self) -> &'static str {
        match self {
            NormalizerCase::FullTorus => "FullTorus",
            NormalizerCase::SameSignAllNonzero => "SameSignAllNonzero",
            NormalizerCase::NoUnitWeights => "NoUnitWeights",
            NormalizerCase::ZeroAndUnitSameSign => "ZeroAndUnitSameSign",
            NormalizerCase::AxisCase(_) => "AxisCase",
            NormalizerCase::MixedSigns => "MixedSigns",
        }
    }
}

fn axis_of(l: &[BigInt]) -> Option<usize> {
    let mut nonzero = l.iter().enumerate().filter(|(_, x)| !x.is_zero());
    let (i, x) = nonzero.next()?;
    (nonzero.next().is_none() && x.abs().is_one()).then_some(i)
}

pub fn classify_case(l: &[BigInt]) -> NormalizerCase {
    if l.iter().all(Zero::is_zero) {
        return NormalizerCase::FullTorus;
    }
    if let Some(i) = axis_of(l) {
        return NormalizerCase::AxisCase(i);
    }
    let pos = l.iter().any(Signed::is_positive);
    let neg = l.iter().any(Signed::is_negative);
    let has_zero = l.iter().any(Zero::is_zero);
    let has_unit = l.iter().any(|x| x.abs().is_one());
    let nonzero = l.iter().filter(|x| !x.is_zero()).count();
    if !has_zero && pos != neg {
        NormalizerCase::SameSignAllNonzero
    } else if !has_unit {
        NormalizerCase::NoUnitWeights
    } else if has_zero && nonzero >= 2 && pos != neg {
        NormalizerCase::ZeroAndUnitSameSign
    } else {
        NormalizerCase::MixedSigns
    }
}

/// `{(σ, ε) ∈ S_n × {±1} : (l_{σ(1)}, …, l_{σ(n)}) = ε·l}`, by generators.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MonomialNormalizer {
    pub generators: Vec<(Permutation, Sign)>,
    pub order: BigInt,
}

fn factorial(k: usize) -> BigInt {
    (1..=k).fold(BigInt::one(), |acc, i| acc * i)
}

/// Positions of each value of `l`, ascending.
fn value_blocks(l: &[BigInt]) -> BTreeMap<&BigInt, Vec<usize>> {
    let mut blocks: BTreeMap<&BigInt, Vec<usize>> = BTreeMap::new();
    for (i, x) in l.iter().enumerate() {
        blocks.entry(x).or_default().push(i);
    }
    blocks
}

/// A permutation with `l_{σ(j)} = −l_j`, if the multiset of `l` is symmetric.
fn negating_permutation(l: &[BigInt]) -> Option<Permutation> {
    let blocks = value_blocks(l);
    let mut images = vec![0; l.len()];
    for (value, positions) in &blocks {
        let target = blocks.get(&-*value)?;
        if target.len() != positions.len() {
            return None;
        }
        for (&j, &t) in positions.iter().zip(target) {
            images[j] = t;
        }
    }
    Permutation::from_images(images).ok()
}

pub fn monomial_normalizer(l: &[BigInt]) -> MonomialNormalizer {
    let n = l.len();
    let mut generators = Vec::new();
    let mut order = BigInt::one();
    for positions in value_blocks(l).values() {
        order *= factorial(positions.len());
        for pair in positions.windows(2) {
            generators.push((Permutation::transposition(n, pair[0], pair[1]), Sign::Plus));
        }
    }
    if let Some(sigma) = negating_permutation(l) {
        generators.push((sigma, Sign::Minus));
        order *= 2;
    }
    MonomialNormalizer { generators, order }
}

/// All elements of the subgroup of `S_n × {±1}` generated by `generators`.
pub fn expand_group(n: usize, generators: &[(Permutation, Sign)]) -> BTreeSet<(Permutation, Sign)> {
    let identity = (Permutation::identity(n), Sign::Plus);
    let mut seen = BTreeSet::from([identity.clone()]);
    let mut queue = VecDeque::from([identity]);
    while let Some((p, s)) = queue.pop_front() {
        for (g, t) in generators {
            let next = (p.compose(g), s.times(*t));
            if seen.insert(next.clone()) {
                queue.push_back(next);
            }
        }
    }
    seen
}

/// Permutations acting trivially on `D_n(l)`: `e_i − e_{σ(i)} ∈ Z·l` for all `i`.
pub fn monomial_centralizer(l: &[BigInt]) -> Vec<Permutation> {
    let n = l.len();
    let group = DiagSubgroup::from_weights(l).expect("weight vector is nonempty");
    // allowed[i] lists the j with e_i − e_j in the lattice.
    let allowed: Vec<Vec<usize>> = (0..n)
        .map(|i| {
            (0..n)
                .filter(|&j| {
                    let mut v = vec![BigInt::zero(); n];
                    v[i] += 1;
                    v[j] -= 1;
                    group.contains_character(&v).expect("length matches")
                })
                .collect()
        })
        .collect();
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(n);
    let mut used = vec![false; n];
    fn rec(
        allowed: &[Vec<usize>],
        cur: &mut Vec<usize>,
        used: &mut [bool],
        out: &mut Vec<Permutation>,
    ) {
        let i = cur.len();
        if i == allowed.len() {
            out.push(Permutation::from_images(cur.clone()).expect("bijective by construction"));
            return;
        }
        for &j in &allowed[i] {
            if !used[j] {
                used[j] = true;
                cur.push(j);
                rec(allowed, cur, used, out);
                cur.pop();
                used[j] = false;
            }
        }
    }
    rec(&allowed, &mut cur, &mut used, &mut out);
    out
}

/// Shape of the normalizer for `l = ±e_i`: `N_{GL_{n−1}}(D_{n−1}) × Aff_1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AxisStructure {
    /// 0-based axis.
    pub axis: usize,
    /// 0-based coordinates permuted among themselves.
    pub permuted_coordinates: Vec<usize>,
    /// Component formulas `g_1, …, g_n` with 1-based indices.
    pub element_shape: Vec<String>,
}

impl AxisStructure {
    pub const ISOMORPHISM_TYPE: &'static str = "N_{GL_{n-1}}(D_{n-1}) x Aff_1";

    fn new(n: usize, axis: usize) -> Self {
        let element_shape = (0..n)
            .map(|j| {
                if j == axis {
                    format!("t{0}*x{0} + s", j + 1)
                } else {
                    format!("t{}*x_sigma({})", j + 1, j + 1)
                }
            })
            .collect();
        AxisStructure {
            axis,
            permuted_coordinates: (0..n).filter(|&j| j != axis).collect(),
            element_shape,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NormalizerReport {
    pub case: NormalizerCase,
    /// The normalizer lies in `N_{GL_n}(D_n)`.
    pub contained_in_monomial: bool,
    /// The normalizer is an algebraic subgroup (true for every weight vector).
    pub algebraic: bool,
    /// Whether the report describes the whole normalizer rather than a certified subgroup.
    pub explicit_form_known: bool,
    pub perm_part: MonomialNormalizer,
    pub centralizer_perm_part: Vec<Permutation>,
    pub axis_structure: Option<AxisStructure>,
}

pub fn normalizer_report(l: &[BigInt]) -> NormalizerReport {
    let case = classify_case(l);
    let (contained_in_monomial, explicit_form_known, axis_structure) = match case {
        NormalizerCase::AxisCase(i) => (false, true, Some(AxisStructure::new(l.len(), i))),
        NormalizerCase::MixedSigns => (false, false, None),
        _ => (true, true, None),
    };
    NormalizerReport {
        case,
        contained_in_monomial,
        algebraic: true,
        explicit_form_known,
        perm_part: monomial_normalizer(l),
        centralizer_perm_part: monomial_centralizer(l),
        axis_structure,
    }
}
