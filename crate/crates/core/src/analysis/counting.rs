//! Enumeration of `S_m^p`, the rank bijection with the naturals, and density.

use std::collections::HashSet;

use thiserror::Error;

use crate::metric::{distance, Epsilon};
use crate::vector::{truncation, FinSupportVec, RankWidth, VectorError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AnalysisError {
    #[error("{vector} lies outside the truncation at {p}")]
    OutsideTruncation { vector: FinSupportVec, p: u32 },
}

fn gcd(mut a: u128, mut b: u128) -> u128 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

/// `C(p, m)`, or `None` if it does not fit in a `u128`. Zero when `m > p`.
pub fn binomial(p: u64, m: u64) -> Option<u128> {
    if m > p {
        return Some(0);
    }
    let k = m.min(p - m);
    let mut c: u128 = 1;
    // c = C(p-k+i, i) after step i, which is always integral.
    for i in 1..=u128::from(k) {
        let top = u128::from(p - k) + i;
        let g = gcd(c, i);
        c = (c / g).checked_mul(top / (i / g))?;
    }
    Some(c)
}

/// `S_m^p`: vectors with exactly `m` ones, all within `{1..p}`, in
/// lexicographic order of their supports. Empty when `m > p`.
pub fn enumerate_smp(m: u32, p: u32) -> Vec<FinSupportVec> {
    if m > p {
        return Vec::new();
    }
    let (m, p) = (m as usize, u64::from(p));
    let mut out = Vec::new();
    let mut combo: Vec<u64> = (1..=m as u64).collect();
    loop {
        out.push(FinSupportVec::from_support(combo.clone()).expect("combination is increasing"));
        // Rightmost position that can still advance: slot k may hold at most p - (m-1-k).
        let Some(k) = (0..m).rev().find(|&k| combo[k] < p - (m - 1 - k) as u64) else {
            return out;
        };
        combo[k] += 1;
        for j in k + 1..m {
            combo[j] = combo[j - 1] + 1;
        }
    }
}

/// True iff `rank(unrank(n)) = n` for every `n ≤ n_max` and the unranked
/// vectors are pairwise distinct.
pub fn verify_countability(n_max: u64, width: RankWidth) -> Result<bool, VectorError> {
    let mut seen = HashSet::new();
    for n in 0..=n_max {
        let x = FinSupportVec::unrank(n);
        if x.rank(width)? != n || !seen.insert(x) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Whether `dense` meets every open ball of radius 1/2 around points of the
/// truncation at `p`. In the discrete metric such a ball is a single point,
/// so this holds iff `dense` contains the whole truncation.
pub fn dense_subset_check(dense: &[FinSupportVec], p: u32) -> Result<bool, AnalysisError> {
    if let Some(bad) = dense.iter().find(|v| !v.within(u64::from(p))) {
        return Err(AnalysisError::OutsideTruncation {
            vector: bad.clone(),
            p,
        });
    }
    let radius = Epsilon::CANONICAL.get();
    Ok(truncation(p).all(|point| {
        dense
            .iter()
            .any(|d| f64::from(distance(&point, d)) < radius)
    }))
}
