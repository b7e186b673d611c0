//! Decomposition of PF-semigroups into irreducible stair blocks.
//!
//! Each pseudo-Frobenius number `f` of a PF-semigroup gets a block with gaps
//! `{1, ..., g_i - 1}` plus the single large gap `f`, where `g_i` is
//! `(f + 1) / 2` for odd `f` and `(f + 2) / 2` for even `f`. The block has
//! multiplicity and genus `g_i`, and the intersection of all blocks is the
//! original semigroup.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::pfseq::is_pf_semigroup;
use crate::semigroup::{GapList, Semigroup};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Parity {
    /// Large gap `2 g_i - 1`, symmetric.
    Odd,
    /// Large gap `2 g_i - 2`, pseudo-symmetric.
    Even,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StairBlock {
    pub genus: u32,
    pub parity: Parity,
    pub semigroup: Semigroup,
}

impl StairBlock {
    pub fn large_gap(&self) -> u32 {
        match self.parity {
            Parity::Odd => 2 * self.genus - 1,
            Parity::Even => 2 * self.genus - 2,
        }
    }
}

pub fn stair_block(f: u32) -> Result<StairBlock> {
    if f == 0 {
        return Err(Error::InvalidInput("0 is never a gap".into()));
    }
    let (genus, parity) = if f % 2 == 1 {
        (f.div_ceil(2), Parity::Odd)
    } else {
        ((f + 2) / 2, Parity::Even)
    };
    let gaps: Vec<u32> = (1..genus).chain([f]).collect();
    let semigroup = Semigroup::from_gaps(&GapList::new(gaps)?)?;
    Ok(StairBlock { genus, parity, semigroup })
}

/// One block per pseudo-Frobenius number, in increasing order of that number.
pub fn decompose_pf(s: &Semigroup) -> Result<Vec<StairBlock>> {
    if !is_pf_semigroup(s) {
        return Err(Error::NotPFSemigroup);
    }
    s.pseudo_frobenius()?.into_iter().map(stair_block).collect()
}

/// Symmetric (odd Frobenius, `g = (Fb + 1) / 2`) or pseudo-symmetric
/// (even Frobenius, `g = (Fb + 2) / 2`).
pub fn is_irreducible(s: &Semigroup) -> bool {
    let fb = s.frobenius();
    let g = s.genus() as i64;
    if fb.rem_euclid(2) == 1 {
        2 * g == fb + 1
    } else {
        2 * g == fb + 2
    }
}
