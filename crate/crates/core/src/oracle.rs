//! Brute-force reference implementations.
//!
//! These exist to arbitrate correctness of the structured algorithms and are
//! deliberately naive: they enumerate. None of them calls into `lattice`,
//! `diag`, `action` or `normalizer`; they only use `exactmat` primitives.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::exactmat::{hermite_normal_form, smith_normal_form, IntMatrix};
use crate::perm::{Permutation, Sign};

/// Enumeration cap for the box and torsion searches.
pub const MAX_ENUMERATION: u64 = 10_000_000;

fn checked_power(base: u64, exp: usize) -> Result<u64> {
    let mut acc: u64 = 1;
    for _ in 0..exp {
        acc = acc
            .checked_mul(base)
            .filter(|&x| x <= MAX_ENUMERATION)
            .ok_or_else(|| Error::TooLarge(format!("{base}^{exp} exceeds {MAX_ENUMERATION}")))?;
    }
    Ok(acc)
}

/// Advances an odometer over `[lo_k, hi_k]` ranges; returns `false` after the last tuple.
fn advance(cur: &mut [i64], lo: &[i64], hi: &[i64]) -> bool {
    for k in (0..cur.len()).rev() {
        if cur[k] < hi[k] {
            cur[k] += 1;
            return true;
        }
        cur[k] = lo[k];
    }
    false
}

/// Number of `t ∈ (μ_m)^n` killed by every row of the defining matrix.
///
/// Roots of unity are encoded by exponents mod `m`, so a row `r` kills `t`
/// iff `Σ r_j t_j ≡ 0 (mod m)`.
pub fn torsion_count(defining: &IntMatrix, m: u64) -> Result<u64> {
    if m == 0 {
        return Err(Error::Malformed("modulus must be positive".into()));
    }
    let n = defining.cols();
    checked_power(m, n)?;
    let modulus = BigInt::from(m);
    let rows: Vec<Vec<i64>> = defining
        .row_iter()
        .map(|r| {
            r.iter()
                .map(|x| {
                    x.mod_floor(&modulus)
                        .to_i64()
                        .expect("reduced below modulus")
                })
                .collect()
        })
        .collect();
    let m = m as i64;
    let lo = vec![0; n];
    let hi = vec![m - 1; n];
    let mut t = lo.clone();
    let mut count = 0;
    loop {
        let killed = rows
            .iter()
            .all(|r| r.iter().zip(&t).fold(0i64, |acc, (a, b)| (acc + a * b) % m) == 0);
        if killed {
            count += 1;
        }
        if !advance(&mut t, &lo, &hi) {
            break;
        }
    }
    Ok(count)
}

/// Membership test through the Smith decomposition `S = U·A·V`:
/// `v = x·A` has an integer solution iff `v·V` is divisible by `S` entrywise.
struct SmithMembership {
    v: IntMatrix,
    factors: Vec<BigInt>,
}

impl SmithMembership {
    fn new(a: &IntMatrix) -> Self {
        let snf = smith_normal_form(a);
        SmithMembership {
            v: snf.v,
            factors: snf.factors,
        }
    }

    fn contains(&self, point: &[i64]) -> bool {
        let n = self.v.rows();
        (0..n).all(|k| {
            let y: BigInt = (0..n)
                .filter(|&j| point[j] != 0)
                .map(|j| &self.v[(j, k)] * point[j])
                .sum();
            match self.factors.get(k) {
                Some(s) => y.is_multiple_of(s),
                None => y.is_zero(),
            }
        })
    }
}

/// Compares the lattice points of `R_A` and `R_B` in the box `‖v‖_∞ ≤ bound`.
pub fn lattice_equal_bounded(a: &IntMatrix, b: &IntMatrix, bound: u64) -> Result<bool> {
    if a.cols() != b.cols() {
        return Err(Error::DimensionMismatch {
            expected: a.cols(),
            found: b.cols(),
        });
    }
    let n = a.cols();
    checked_power(2 * bound + 1, n)?;
    let ma = SmithMembership::new(a);
    let mb = SmithMembership::new(b);
    let b = bound as i64;
    let lo = vec![-b; n];
    let hi = vec![b; n];
    let mut p = lo.clone();
    loop {
        if ma.contains(&p) != mb.contains(&p) {
            return Ok(false);
        }
        if !advance(&mut p, &lo, &hi) {
            return Ok(true);
        }
    }
}

/// Twice the largest Hermite-basis entry of either matrix (at least 1).
pub fn default_lattice_bound(a: &IntMatrix, b: &IntMatrix) -> u64 {
    let ma = hermite_normal_form(a).max_abs_entry();
    let mb = hermite_normal_form(b).max_abs_entry();
    (ma.max(mb) * BigInt::from(2))
        .to_u64()
        .unwrap_or(u64::MAX)
        .max(1)
}

/// Three times the largest `|l_i|` (at least 1).
pub fn default_closedness_bound(l: &[i64]) -> u64 {
    (l.iter().map(|x| x.unsigned_abs()).max().unwrap_or(0) * 3).max(1)
}

/// Searches `d` with `‖d‖_∞ ≤ bound`, `⟨d, l⟩ = 0`, `d_j ≥ 0` off `zeros`
/// and `d_j > 0` for some `j` off `zeros`.
///
/// Returns the witness of least sup-norm, ties broken lexicographically.
pub fn closedness_search(l: &[i64], zeros: &[bool], bound: u64) -> Result<Option<Vec<i64>>> {
    let n = l.len();
    if zeros.len() != n {
        return Err(Error::DimensionMismatch {
            expected: n,
            found: zeros.len(),
        });
    }
    if zeros.iter().all(|&z| z) {
        return Ok(None);
    }
    let b = bound as i64;
    let lo: Vec<i64> = zeros.iter().map(|&z| if z { -b } else { 0 }).collect();
    let hi = vec![b; n];
    // The last coordinate with nonzero weight is solved for instead of enumerated.
    let pivot = (0..n).rev().find(|&j| l[j] != 0);
    let free: Vec<usize> = (0..n).filter(|&j| Some(j) != pivot).collect();
    checked_power(2 * bound + 1, free.len())?;
    let free_lo: Vec<i64> = free.iter().map(|&j| lo[j]).collect();
    let free_hi: Vec<i64> = free.iter().map(|&j| hi[j]).collect();
    let mut cur = free_lo.clone();
    let mut best: Option<(i64, Vec<i64>)> = None;
    let mut d = vec![0i64; n];
    loop {
        for (k, &j) in free.iter().enumerate() {
            d[j] = cur[k];
        }
        let feasible = match pivot {
            None => true,
            Some(p) => {
                let partial: i64 = free.iter().map(|&j| d[j] * l[j]).sum();
                if partial % l[p] == 0 {
                    d[p] = -partial / l[p];
                    d[p] >= lo[p] && d[p] <= hi[p]
                } else {
                    false
                }
            }
        };
        if feasible && (0..n).any(|j| !zeros[j] && d[j] > 0) {
            let norm = d.iter().map(|x| x.abs()).max().unwrap_or(0);
            let better = match &best {
                None => true,
                Some((bn, bd)) => norm < *bn || (norm == *bn && d < *bd),
            };
            if better {
                best = Some((norm, d.clone()));
            }
        }
        if !advance(&mut cur, &free_lo, &free_hi) {
            break;
        }
    }
    Ok(best.map(|(_, d)| d))
}

/// Exhaustive search over `S_n × {±1}` for `l = ε·(l'_{σ(1)}, …, l'_{σ(n)})`.
pub fn perm_sign_exhaust(l: &[BigInt], l_prime: &[BigInt]) -> Result<Option<(Permutation, Sign)>> {
    let n = l.len();
    if l_prime.len() != n {
        return Err(Error::DimensionMismatch {
            expected: n,
            found: l_prime.len(),
        });
    }
    if n > 8 {
        return Err(Error::TooLarge(format!("{n}! permutations")));
    }
    let negated: Vec<BigInt> = l.iter().map(|x| -x).collect();
    for sigma in Permutation::all(n) {
        let moved = sigma.permute(l_prime);
        if moved == l {
            return Ok(Some((sigma, Sign::Plus)));
        }
        if moved == negated {
            return Ok(Some((sigma, Sign::Minus)));
        }
    }
    Ok(None)
}

/// `m^{n−1}·gcd(m, gcd(l))` for `l ≠ 0`, `m^n` for `l = 0`.
pub fn expected_torsion_count(l: &[i64], m: u64) -> u64 {
    let n = l.len() as u32;
    let g = l.iter().fold(0u64, |acc, x| acc.gcd(&x.unsigned_abs()));
    if g == 0 {
        m.pow(n)
    } else {
        m.pow(n - 1) * m.gcd(&g)
    }
}
