//! Exhaustive enumeration of numerical semigroups by genus.
//!
//! Semigroups form a tree rooted at `N`: the children of `S` are `S \ {x}`
//! for each minimal generator `x` larger than the Frobenius number. Every
//! semigroup of genus `g` sits at depth `g` exactly once.
//!
//! Nodes carry a decomposition-count array: `dec[y]` is the number of
//! unordered pairs `{a, b}` of members with `a + b = y`. A member `x > 0` is a
//! minimal generator iff `dec[x] == 1`, and removing `x` decrements `dec[y]`
//! for every `y >= x` with `y - x` still a member.

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::bitmap::Bitmap;
use crate::error::{Error, Result};
use crate::semigroup::Semigroup;

/// Largest genus the fixed-width tree nodes can represent.
pub const MAX_CENSUS_GENUS: u32 = 60;

// Must be at least 2 * MAX_CENSUS_GENUS and at most 128 (gap word width).
const DEC_LEN: usize = 128;

// Subtrees with at most this many levels left are walked on one thread.
const SEQUENTIAL_DEPTH: u32 = 9;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
pub struct CensusRow {
    pub genus: u32,
    pub ns: u64,
    pub b2s: u64,
    pub b2pfs: u64,
}

#[derive(Clone)]
struct Node {
    dec: [u8; DEC_LEN],
    /// bit i set iff i is a gap
    gaps: u128,
    genus: u32,
    /// conductor, Fb + 1
    conductor: u32,
    multiplicity: u32,
}

impl Node {
    fn root() -> Self {
        let mut dec = [0u8; DEC_LEN];
        for (y, d) in dec.iter_mut().enumerate() {
            *d = (y / 2 + 1) as u8;
        }
        Node {
            dec,
            gaps: 0,
            genus: 0,
            conductor: 0,
            multiplicity: 1,
        }
    }

    /// Minimal generators above the Frobenius number.
    #[inline]
    fn child_generators(&self) -> impl Iterator<Item = u32> + '_ {
        let lo = self.conductor.max(1);
        // a child of genus g + 1 has Frobenius number at most 2g + 1
        let hi = (self.conductor + self.multiplicity + 1).min(2 * self.genus + 2);
        (lo..hi).filter(move |&x| self.dec[x as usize] == 1)
    }

    #[inline]
    fn child_multiplicity(&self, x: u32) -> u32 {
        if x == self.multiplicity {
            x + 1
        } else {
            self.multiplicity
        }
    }

    fn child(&self, x: u32) -> Node {
        let mut dec = self.dec;
        let x = x as usize;
        for (d, &src) in dec[x..].iter_mut().zip(&self.dec) {
            if src > 0 {
                *d -= 1;
            }
        }
        Node {
            dec,
            gaps: self.gaps | 1u128 << x,
            genus: self.genus + 1,
            conductor: x as u32 + 1,
            multiplicity: self.child_multiplicity(x as u32),
        }
    }

    fn to_semigroup(&self) -> Semigroup {
        gaps_to_semigroup(self.gaps, self.conductor)
    }
}

fn gaps_to_semigroup(gaps: u128, conductor: u32) -> Semigroup {
    let c = conductor as usize;
    Semigroup::from_member_bitmap(Bitmap::from_positions(
        c,
        (0..c).filter(|&i| gaps >> i & 1 == 0),
    ))
}

/// 256-bit `G + G` cardinality for a gap word.
#[inline]
fn second_sumset_size(gaps: u128) -> u32 {
    let (mut lo, mut hi) = (0u128, 0u128);
    let mut rest = gaps;
    while rest != 0 {
        let x = rest.trailing_zeros();
        rest &= rest - 1;
        lo |= gaps << x;
        if x != 0 {
            hi |= gaps >> (128 - x);
        }
    }
    lo.count_ones() + hi.count_ones()
}

#[inline]
fn is_pf_word(gaps: u128, genus: u32, conductor: u32, multiplicity: u32) -> bool {
    let fb = conductor - 1;
    let members = !gaps & ((1u128 << fb) - 1) & !1;
    let mut bad = 0u128;
    let mut rest = members;
    while rest != 0 {
        let n = rest.trailing_zeros();
        rest &= rest - 1;
        bad |= gaps >> n;
    }
    let pf = gaps & !bad;
    let t = pf.count_ones();
    let interval = ((1u128 << (genus - t + 1)) - 1) & !1;
    gaps & !pf == interval && pf.trailing_zeros() > multiplicity
}

/// (is 2-Buchweitz, is 2-Buchweitz PF-semigroup)
#[inline]
fn classify(gaps: u128, genus: u32, conductor: u32, multiplicity: u32) -> (bool, bool) {
    if genus < 2 || second_sumset_size(gaps) <= 3 * (genus - 1) {
        return (false, false);
    }
    (true, is_pf_word(gaps, genus, conductor, multiplicity))
}

#[derive(Clone)]
struct Tally {
    lo: u32,
    rows: Vec<[u64; 3]>,
}

impl Tally {
    fn new(lo: u32, hi: u32) -> Self {
        Tally {
            lo,
            rows: vec![[0; 3]; (hi - lo + 1) as usize],
        }
    }

    #[inline]
    fn record(&mut self, gaps: u128, genus: u32, conductor: u32, multiplicity: u32) {
        if genus < self.lo {
            return;
        }
        let row = &mut self.rows[(genus - self.lo) as usize];
        row[0] += 1;
        let (b2, pf) = classify(gaps, genus, conductor, multiplicity);
        row[1] += b2 as u64;
        row[2] += pf as u64;
    }

    fn merge(mut self, other: Tally) -> Tally {
        for (a, b) in self.rows.iter_mut().zip(other.rows) {
            for k in 0..3 {
                a[k] += b[k];
            }
        }
        self
    }
}

fn walk_sequential(node: &Node, hi: u32, tally: &mut Tally) {
    tally.record(node.gaps, node.genus, node.conductor, node.multiplicity);
    if node.genus == hi {
        return;
    }
    if node.genus + 1 == hi {
        // leaves: no need to update decomposition counts
        for x in node.child_generators() {
            tally.record(
                node.gaps | 1u128 << x,
                hi,
                x + 1,
                node.child_multiplicity(x),
            );
        }
        return;
    }
    for x in node.child_generators() {
        walk_sequential(&node.child(x), hi, tally);
    }
}

fn walk(node: &Node, lo: u32, hi: u32) -> Tally {
    if hi - node.genus <= SEQUENTIAL_DEPTH {
        let mut tally = Tally::new(lo, hi);
        walk_sequential(node, hi, &mut tally);
        return tally;
    }
    let mut own = Tally::new(lo, hi);
    own.record(node.gaps, node.genus, node.conductor, node.multiplicity);
    let children: Vec<u32> = node.child_generators().collect();
    children
        .into_par_iter()
        .map(|x| walk(&node.child(x), lo, hi))
        .reduce(|| Tally::new(lo, hi), Tally::merge)
        .merge(own)
}

fn check_range(lo: u32, hi: u32) -> Result<()> {
    if lo < 2 || lo > hi {
        return Err(Error::InvalidInput(format!(
            "census range must satisfy 2 <= from <= to, got {lo}..={hi}"
        )));
    }
    if hi > MAX_CENSUS_GENUS {
        return Err(Error::InvalidInput(format!(
            "census genus is limited to {MAX_CENSUS_GENUS}"
        )));
    }
    Ok(())
}

/// Counts for every genus in `lo..=hi` on the current rayon pool.
pub fn census_range(lo: u32, hi: u32) -> Result<Vec<CensusRow>> {
    check_range(lo, hi)?;
    let tally = walk(&Node::root(), lo, hi);
    Ok(tally
        .rows
        .into_iter()
        .zip(lo..)
        .map(|(r, genus)| CensusRow {
            genus,
            ns: r[0],
            b2s: r[1],
            b2pfs: r[2],
        })
        .collect())
}

/// [`census_range`] on a dedicated pool of `threads` workers.
pub fn census_range_with_threads(lo: u32, hi: u32, threads: usize) -> Result<Vec<CensusRow>> {
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(threads)
        .build()
        .map_err(|e| Error::InvalidInput(format!("thread pool: {e}")))?;
    pool.install(|| census_range(lo, hi))
}

pub fn census_row(g: u32) -> Result<CensusRow> {
    Ok(census_range(g, g)?[0])
}

/// Calls `visitor` once per semigroup of genus `g` and returns how many there are.
///
/// # Panics
///
/// If `g` exceeds [`MAX_CENSUS_GENUS`].
pub fn enumerate_genus(g: u32, mut visitor: impl FnMut(&Semigroup)) -> u64 {
    assert!(g <= MAX_CENSUS_GENUS, "genus {g} above {MAX_CENSUS_GENUS}");
    fn go(node: &Node, g: u32, visitor: &mut dyn FnMut(&Semigroup), count: &mut u64) {
        if node.genus == g {
            visitor(&node.to_semigroup());
            *count += 1;
            return;
        }
        for x in node.child_generators() {
            go(&node.child(x), g, visitor, count);
        }
    }
    let mut count = 0;
    go(&Node::root(), g, &mut visitor, &mut count);
    count
}
