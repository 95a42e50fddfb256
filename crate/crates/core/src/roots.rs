//! Root vectors `x^l ∂/∂x_i` of affine space and their roots for `D_n` and `D_n*`.

use crate::perm::Permutation;

/// `x_1^{l_1} ⋯ x_n^{l_n} ∂/∂x_i` with `l_i = 0`, coefficient normalized to 1.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct RootVector {
    /// 0-based coordinate of the partial derivative.
    pub i: usize,
    pub l: Vec<u64>,
}

impl RootVector {
    /// Returns `None` unless `l_i = 0`.
    pub fn new(i: usize, l: Vec<u64>) -> Option<Self> {
        (i < l.len() && l[i] == 0).then_some(RootVector { i, l })
    }

    pub fn n(&self) -> usize {
        self.l.len()
    }

    pub fn degree(&self) -> u64 {
        self.l.iter().sum()
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum TorusTag {
    /// The full diagonal torus `D_n`.
    Full,
    /// `D_n* = D_n(1, …, 1)`; characters are taken modulo `Z·(1, …, 1)`.
    Special,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Root {
    /// For `Special`, the representative with minimum entry 0.
    pub exponents: Vec<i64>,
    pub relative_to: TorusTag,
}

/// Every root vector with total degree at most `max_degree`, ordered by `(i, l)`.
pub fn enumerate_root_vectors(n: usize, max_degree: u64) -> Vec<RootVector> {
    let mut out = Vec::new();
    for i in 0..n {
        let mut l = vec![0u64; n];
        fill(i, 0, max_degree, &mut l, &mut out);
    }
    out
}

fn fill(i: usize, pos: usize, budget: u64, l: &mut Vec<u64>, out: &mut Vec<RootVector>) {
    if pos == l.len() {
        out.push(RootVector { i, l: l.clone() });
        return;
    }
    if pos == i {
        fill(i, pos + 1, budget, l, out);
        return;
    }
    for e in 0..=budget {
        l[pos] = e;
        fill(i, pos + 1, budget - e, l, out);
    }
    l[pos] = 0;
}

/// The character `ε_i^{−1} ∏ ε_j^{l_j}`, i.e. `l − e_i`.
pub fn root_of(rv: &RootVector, relative_to: TorusTag) -> Root {
    let mut exponents: Vec<i64> = rv.l.iter().map(|&x| x as i64).collect();
    exponents[rv.i] -= 1;
    if relative_to == TorusTag::Special {
        let min = *exponents.iter().min().expect("n >= 1");
        for e in &mut exponents {
            *e -= min;
        }
    }
    Root {
        exponents,
        relative_to,
    }
}

/// `D(x^m) = m_i · x^{m + l − e_i}`, or `None` when `m_i = 0`.
pub fn apply_derivation(rv: &RootVector, m: &[u64]) -> Option<(u64, Vec<u64>)> {
    let mi = m[rv.i];
    if mi == 0 {
        return None;
    }
    let mut out: Vec<u64> = m.iter().zip(&rv.l).map(|(a, b)| a + b).collect();
    out[rv.i] -= 1;
    Some((mi, out))
}

/// Transport by the coordinate permutation `σ`: `(σ(i), l∘σ⁻¹)`.
pub fn weyl_action(sigma: &Permutation, rv: &RootVector) -> RootVector {
    RootVector {
        i: sigma.apply(rv.i),
        l: sigma.inverse().permute(&rv.l),
    }
}
