//! n-fold gap sumsets and the Buchweitz non-Weierstrass test.
//!
//! A semigroup of genus `g` is n-Buchweitz when the n-fold sumset of its
//! gaps has more than `(2n - 1)(g - 1)` elements; such a semigroup cannot be
//! the Weierstrass semigroup of a point on a curve.

use serde::{Deserialize, Serialize};

use crate::bitmap::Bitmap;
use crate::error::{Error, Result};
use crate::semigroup::Semigroup;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct SumsetReport {
    pub n: u32,
    pub cardinality: u64,
    /// `(2n - 1)(g - 1)`
    pub threshold: u64,
    pub is_buchweitz: bool,
}

/// n-fold sumset of the gap set as a bitmap over `0..=n*Fb`.
pub fn gap_sumset_bitmap(s: &Semigroup, n: u32) -> Result<Bitmap> {
    if s.is_natural() {
        return Err(Error::EmptySemigroupComplement);
    }
    if n == 0 {
        return Err(Error::InvalidInput("sumset order n must be at least 1".into()));
    }
    let gaps = s.gap_bitmap();
    let mut acc = gaps.clone();
    for _ in 1..n {
        acc = acc.sumset(&gaps);
    }
    Ok(acc)
}

/// Sorted, duplicate-free `G + ... + G` (n copies).
pub fn gap_sumset(s: &Semigroup, n: u32) -> Result<Vec<u32>> {
    Ok(gap_sumset_bitmap(s, n)?
        .iter_ones()
        .map(|x| x as u32)
        .collect())
}

pub fn buchweitz_test(s: &Semigroup, n: u32) -> Result<SumsetReport> {
    if s.is_natural() {
        return Err(Error::EmptySemigroupComplement);
    }
    if n < 2 {
        return Err(Error::InvalidInput(format!("Buchweitz order must be >= 2, got {n}")));
    }
    let g = s.genus();
    if g <= 1 {
        return Err(Error::GenusTooSmall { genus: g });
    }
    let cardinality = gap_sumset_bitmap(s, n)?.count_ones() as u64;
    let threshold = (2 * n as u64 - 1) * (g as u64 - 1);
    Ok(SumsetReport {
        n,
        cardinality,
        threshold,
        is_buchweitz: cardinality > threshold,
    })
}
