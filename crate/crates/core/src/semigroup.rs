//! Canonical numerical semigroups and their classical invariants.
//!
//! A [`Semigroup`] stores a membership bitmap over `0..conductor`; every
//! integer at or above the conductor is implicitly a member. The gap set is
//! the complement of the bitmap, so two semigroups are equal exactly when
//! their bitmaps are.
//!
//! Conventions for the full monoid `N`: conductor 0, genus 0, multiplicity 1,
//! Frobenius number -1 and type 0.

use std::fmt;
use std::sync::OnceLock;

use serde::{Deserialize, Serialize};

use crate::bitmap::Bitmap;
use crate::error::{Error, Result};

/// Strictly increasing list of positive integers, read as a gap set.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GapList(Vec<u32>);

impl GapList {
    pub fn new(gaps: Vec<u32>) -> Result<Self> {
        if gaps.first() == Some(&0) {
            return Err(Error::InvalidInput("0 is never a gap".into()));
        }
        if let Some(w) = gaps.windows(2).find(|w| w[0] >= w[1]) {
            return Err(Error::InvalidInput(format!(
                "gaps must be strictly increasing, found {} then {}",
                w[0], w[1]
            )));
        }
        Ok(Self(gaps))
    }

    pub fn as_slice(&self) -> &[u32] {
        &self.0
    }

    pub fn into_vec(self) -> Vec<u32> {
        self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }
}

impl TryFrom<Vec<u32>> for GapList {
    type Error = Error;

    fn try_from(v: Vec<u32>) -> Result<Self> {
        GapList::new(v)
    }
}

/// Classical invariants of a semigroup.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Invariants {
    pub multiplicity: u32,
    pub genus: u32,
    /// `-1` for `N`.
    pub frobenius: i64,
    pub conductor: u32,
    #[serde(rename = "type")]
    pub type_: u32,
}

#[derive(Clone)]
pub struct Semigroup {
    members: Bitmap,
    genus: u32,
    multiplicity: u32,
    pf: OnceLock<Vec<u32>>,
}

impl PartialEq for Semigroup {
    fn eq(&self, other: &Self) -> bool {
        self.members == other.members
    }
}

impl Eq for Semigroup {}

impl std::hash::Hash for Semigroup {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.members.hash(state);
    }
}

impl fmt::Debug for Semigroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Semigroup({self})")
    }
}

/// Gap encoding, `gaps:1,2,3,4,6,8,9`.
impl fmt::Display for Semigroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "gaps:{}", join(self.gap_iter()))
    }
}

pub(crate) fn join(values: impl IntoIterator<Item = u32>) -> String {
    values
        .into_iter()
        .map(|v| v.to_string())
        .collect::<Vec<_>>()
        .join(",")
}

fn gcd(mut a: u32, mut b: u32) -> u32 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

impl Semigroup {
    /// The full monoid `N`.
    pub fn natural() -> Self {
        Self::from_member_bitmap(Bitmap::new(0))
    }

    /// Builds from a bitmap whose bit 0 is set (or which is empty) and whose
    /// complement is closed. Trailing members are trimmed so the bitmap ends at
    /// the conductor.
    pub(crate) fn from_member_bitmap(bits: Bitmap) -> Self {
        let conductor = (0..bits.len())
            .rev()
            .find(|&i| !bits.contains(i))
            .map_or(0, |fb| fb + 1);
        let members = if conductor == bits.len() {
            bits
        } else {
            Bitmap::from_positions(conductor, bits.iter_ones().take_while(|&i| i < conductor))
        };
        debug_assert!(conductor == 0 || members.contains(0));
        let genus = (conductor - members.count_ones()) as u32;
        let multiplicity = members
            .iter_ones()
            .find(|&i| i > 0)
            .unwrap_or(conductor.max(1)) as u32;
        Self {
            members,
            genus,
            multiplicity,
            pf: OnceLock::new(),
        }
    }

    /// Smallest submonoid of `N` containing `gens`.
    pub fn from_generators(gens: &[u32]) -> Result<Self> {
        if gens.is_empty() {
            return Err(Error::InvalidInput("at least one generator is required".into()));
        }
        if gens.contains(&0) {
            return Err(Error::InvalidInput("generators must be positive".into()));
        }
        let mut gens = gens.to_vec();
        gens.sort_unstable();
        gens.dedup();
        let d = gens.iter().fold(0, |acc, &g| gcd(acc, g));
        if d != 1 {
            return Err(Error::InfiniteComplement { gcd: d });
        }

        // Once `min` consecutive members appear, everything after is a member.
        let min = gens[0] as usize;
        let mut member = vec![true];
        let mut run = 1usize;
        let mut x = 0usize;
        while run < min {
            x += 1;
            let m = gens
                .iter()
                .map(|&g| g as usize)
                .take_while(|&g| g <= x)
                .any(|g| member[x - g]);
            member.push(m);
            run = if m { run + 1 } else { 0 };
        }
        let conductor = x + 1 - run;
        let bits = Bitmap::from_positions(
            conductor,
            member[..conductor]
                .iter()
                .enumerate()
                .filter(|(_, &m)| m)
                .map(|(i, _)| i),
        );
        Ok(Self::from_member_bitmap(bits))
    }

    /// Semigroup whose gap set is exactly `gaps`.
    pub fn from_gaps(gaps: &GapList) -> Result<Self> {
        let Some(&fb) = gaps.as_slice().last() else {
            return Ok(Self::natural());
        };
        let conductor = fb as usize + 1;
        let gap_bits = Bitmap::from_positions(conductor, gaps.as_slice().iter().map(|&g| g as usize));
        let members = Bitmap::from_positions(conductor, (0..conductor).filter(|&i| !gap_bits.contains(i)));

        let sums = members.sumset(&members);
        if let Some(bad) = gaps.as_slice().iter().copied().find(|&g| sums.contains(g as usize)) {
            let a = members
                .iter_ones()
                .find(|&a| members.contains(bad as usize - a))
                .expect("sumset witness") as u32;
            let (a, b) = (a.min(bad - a), a.max(bad - a));
            return Err(Error::NotClosed { a, b });
        }
        Ok(Self::from_member_bitmap(members))
    }

    /// Parses `gens:5,7,11,13` or `gaps:1,2,3,4,6,8,9`.
    pub fn parse(s: &str) -> Result<Self> {
        if let Some(rest) = s.strip_prefix("gens:") {
            Self::from_generators(&parse_list(rest)?)
        } else if let Some(rest) = s.strip_prefix("gaps:") {
            Self::from_gaps(&GapList::new(parse_list(rest)?)?)
        } else {
            Err(Error::InvalidInput(format!(
                "expected `gens:` or `gaps:` prefix in {s:?}"
            )))
        }
    }

    #[inline]
    pub fn contains(&self, x: u32) -> bool {
        x as usize >= self.members.len() || self.members.contains(x as usize)
    }

    pub fn is_natural(&self) -> bool {
        self.members.is_empty()
    }

    pub fn genus(&self) -> u32 {
        self.genus
    }

    pub fn multiplicity(&self) -> u32 {
        self.multiplicity
    }

    pub fn conductor(&self) -> u32 {
        self.members.len() as u32
    }

    /// Largest gap, `-1` for `N`.
    pub fn frobenius(&self) -> i64 {
        self.members.len() as i64 - 1
    }

    /// Number of pseudo-Frobenius numbers; 0 for `N`.
    pub fn type_(&self) -> u32 {
        self.pf_cached().len() as u32
    }

    pub fn invariants(&self) -> Invariants {
        Invariants {
            multiplicity: self.multiplicity,
            genus: self.genus,
            frobenius: self.frobenius(),
            conductor: self.conductor(),
            type_: self.type_(),
        }
    }

    pub fn gap_iter(&self) -> impl Iterator<Item = u32> + '_ {
        (0..self.members.len())
            .filter(|&i| !self.members.contains(i))
            .map(|i| i as u32)
    }

    pub fn gaps(&self) -> GapList {
        GapList(self.gap_iter().collect())
    }

    /// Gap set as a bitmap over `0..conductor`.
    pub fn gap_bitmap(&self) -> Bitmap {
        Bitmap::from_positions(self.members.len(), self.gap_iter().map(|g| g as usize))
    }

    /// Members strictly below `bound`, in increasing order.
    pub fn members_below(&self, bound: u32) -> Vec<u32> {
        (0..bound).filter(|&x| self.contains(x)).collect()
    }

    fn pf_cached(&self) -> &[u32] {
        self.pf.get_or_init(|| {
            let c = self.members.len();
            let nonzero: Vec<usize> = self.members.iter_ones().skip(1).collect();
            self.gap_iter()
                .filter(|&x| {
                    let x = x as usize;
                    nonzero
                        .iter()
                        .take_while(|&&n| x + n < c)
                        .all(|&n| self.members.contains(x + n))
                })
                .collect()
        })
    }

    /// Gaps `x` with `x + h` a member for every nonzero member `h`.
    pub fn pseudo_frobenius(&self) -> Result<Vec<u32>> {
        if self.is_natural() {
            return Err(Error::EmptySemigroupComplement);
        }
        Ok(self.pf_cached().to_vec())
    }

    /// Members that are not a sum of two nonzero members. `{1}` for `N`.
    pub fn minimal_generators(&self) -> Vec<u32> {
        let m = self.multiplicity;
        let bound = self.conductor() + m + 1;
        let nonzero: Vec<u32> = (1..bound).filter(|&x| self.contains(x)).collect();
        nonzero
            .iter()
            .copied()
            .filter(|&x| {
                !nonzero
                    .iter()
                    .take_while(|&&a| 2 * a <= x)
                    .any(|&a| self.contains(x - a))
            })
            .collect()
    }

    /// Intersection; its gap set is the union of both gap sets.
    pub fn intersect(&self, other: &Semigroup) -> Semigroup {
        let c = self.members.len().max(other.members.len());
        let bits = Bitmap::from_positions(
            c,
            (0..c as u32)
                .filter(|&x| self.contains(x) && other.contains(x))
                .map(|x| x as usize),
        );
        Semigroup::from_member_bitmap(bits)
    }

    /// `alpha_i = l_{i+1} - i - 1` over the increasing gaps `l_1 < ... < l_g`.
    /// Empty for `N`.
    pub fn schubert_index(&self) -> Vec<u32> {
        self.gap_iter()
            .enumerate()
            .map(|(i, l)| l - i as u32 - 1)
            .collect()
    }

    /// Generator encoding, `gens:5,7,11,13`.
    pub fn to_gens_string(&self) -> String {
        format!("gens:{}", join(self.minimal_generators()))
    }
}

/// Comma-separated decimals without spaces. The empty string is the empty list.
pub fn parse_list(s: &str) -> Result<Vec<u32>> {
    if s.is_empty() {
        return Ok(Vec::new());
    }
    s.split(',')
        .map(|tok| {
            tok.parse::<u32>()
                .map_err(|_| Error::InvalidInput(format!("not a non-negative integer: {tok:?}")))
        })
        .collect()
}
