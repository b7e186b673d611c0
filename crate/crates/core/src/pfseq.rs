//! PF-semigroups and the difference-sequence family.
//!
//! A PF-semigroup has gap set `{1, ..., g - t} ⊔ PF(H)` with every
//! pseudo-Frobenius number above the multiplicity. Writing the
//! pseudo-Frobenius numbers as `2m - a_1 < ... < 2m - a_t` with
//! `m = g - t + 1` and `a_t = 1`, the family is parametrised by the
//! differences `d_i = a_i - a_{i+1}`.
//!
//! [`corollary_bound`] evaluates the two sufficient conditions under which a
//! sequence yields a 2-Buchweitz PF-semigroup at every genus from the bound
//! on. [`verify_sequence`] is the direct check: build the semigroup, test the
//! definition, count the sumset.

use std::fmt;
use std::ops::RangeInclusive;
use std::str::FromStr;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::bitmap::Bitmap;
use crate::buchweitz::buchweitz_test;
use crate::error::{Error, Result};
use crate::semigroup::{join, parse_list, GapList, Semigroup};

/// Difference sequence `(d_1, ..., d_{t-1})`, all entries positive.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "Vec<u32>", into = "Vec<u32>")]
pub struct DiffSeq(Vec<u32>);

impl DiffSeq {
    pub fn new(d: Vec<u32>) -> Result<Self> {
        if d.contains(&0) {
            return Err(Error::InvalidInput(
                "sequence entries must be positive".into(),
            ));
        }
        Ok(Self(d))
    }

    pub fn as_slice(&self) -> &[u32] {
        &self.0
    }

    /// Type of the associated semigroups, `len + 1`.
    pub fn t(&self) -> u32 {
        self.0.len() as u32 + 1
    }

    pub fn sum(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn reverse(&self) -> DiffSeq {
        DiffSeq(self.0.iter().rev().copied().collect())
    }

    /// Suffix sums plus one: `a_n = 1 + d_n + ... + d_{t-1}`.
    pub fn to_a(&self) -> ASeq {
        let mut a = vec![1u32; self.0.len() + 1];
        for i in (0..self.0.len()).rev() {
            a[i] = a[i + 1] + self.0[i];
        }
        ASeq(a)
    }
}

impl TryFrom<Vec<u32>> for DiffSeq {
    type Error = Error;

    fn try_from(v: Vec<u32>) -> Result<Self> {
        DiffSeq::new(v)
    }
}

impl From<DiffSeq> for Vec<u32> {
    fn from(d: DiffSeq) -> Self {
        d.0
    }
}

impl fmt::Display for DiffSeq {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "seq:{}", join(self.0.iter().copied()))
    }
}

/// Accepts `seq:1,4,3` or bare `1,4,3`.
impl FromStr for DiffSeq {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        DiffSeq::new(parse_list(s.strip_prefix("seq:").unwrap_or(s))?)
    }
}

/// Strictly decreasing `a_1 > ... > a_t = 1`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct ASeq(Vec<u32>);

impl ASeq {
    pub fn new(a: Vec<u32>) -> Result<Self> {
        if a.last() != Some(&1) {
            return Err(Error::InvalidInput("a-sequence must end with 1".into()));
        }
        if a.windows(2).any(|w| w[0] <= w[1]) {
            return Err(Error::InvalidInput(
                "a-sequence must be strictly decreasing".into(),
            ));
        }
        Ok(Self(a))
    }

    pub fn as_slice(&self) -> &[u32] {
        &self.0
    }

    pub fn to_d(&self) -> DiffSeq {
        DiffSeq(self.0.windows(2).map(|w| w[0] - w[1]).collect())
    }

    /// `#{a_i + a_j}` over all `i, j`.
    pub fn pair_sum_count(&self) -> u32 {
        let top = self.0[0] as usize;
        let set = Bitmap::from_positions(top + 1, self.0.iter().map(|&a| a as usize));
        set.sumset(&set).count_ones() as u32
    }
}

pub fn d_to_a(d: &DiffSeq) -> ASeq {
    d.to_a()
}

pub fn a_to_d(a: &ASeq) -> DiffSeq {
    a.to_d()
}

pub fn reverse(d: &DiffSeq) -> DiffSeq {
    d.reverse()
}

/// Gap list `{1..g-t} ∪ {2m - a_1, ..., 2m - a_t}` with `m = g - t + 1`.
pub fn family_gaps(d: &DiffSeq, g: u32) -> Result<GapList> {
    let t = d.t();
    if g < t {
        return Err(Error::MalformedGapSet(format!(
            "genus {g} is smaller than the type {t}"
        )));
    }
    let m = g - t + 1;
    let a = d.to_a();
    let a1 = a.as_slice()[0];
    if 2 * m < a1 || 2 * m - a1 <= g - t {
        return Err(Error::MalformedGapSet(format!(
            "2m - a_1 = {} collides with the interval 1..={}",
            2 * m as i64 - a1 as i64,
            g - t
        )));
    }
    let gaps: Vec<u32> = (1..=g - t)
        .chain(a.as_slice().iter().map(|&ai| 2 * m - ai))
        .collect();
    GapList::new(gaps).map_err(|e| Error::MalformedGapSet(e.to_string()))
}

/// The genus-`g` semigroup of the family attached to `d`.
pub fn build_pf(d: &DiffSeq, g: u32) -> Result<Semigroup> {
    let gaps = family_gaps(d, g)?;
    Semigroup::from_gaps(&gaps).map_err(|e| Error::MalformedGapSet(e.to_string()))
}

/// Which clause of the PF-semigroup definition fails.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PfViolation {
    Natural,
    /// A gap that is neither pseudo-Frobenius nor in `1..=g-t`.
    GapOutsideInterval { gap: u32, interval_end: u32 },
    PfNotAboveMultiplicity { min_pf: u32, multiplicity: u32 },
}

impl fmt::Display for PfViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            PfViolation::Natural => write!(f, "N has no gaps"),
            PfViolation::GapOutsideInterval { gap, interval_end } => {
                write!(f, "gap {gap} ∉ {{1..{interval_end}}} ⊔ PF")
            }
            PfViolation::PfNotAboveMultiplicity { min_pf, multiplicity } => {
                write!(f, "min PF {min_pf} is not above the multiplicity {multiplicity}")
            }
        }
    }
}

pub fn pf_violation(s: &Semigroup) -> Option<PfViolation> {
    let Ok(pf) = s.pseudo_frobenius() else {
        return Some(PfViolation::Natural);
    };
    let interval_end = s.genus() - pf.len() as u32;
    if let Some(gap) = s
        .gap_iter()
        .find(|x| *x > interval_end && pf.binary_search(x).is_err())
    {
        return Some(PfViolation::GapOutsideInterval { gap, interval_end });
    }
    if pf[0] <= s.multiplicity() {
        return Some(PfViolation::PfNotAboveMultiplicity {
            min_pf: pf[0],
            multiplicity: s.multiplicity(),
        });
    }
    None
}

pub fn is_pf_semigroup(s: &Semigroup) -> bool {
    pf_violation(s).is_none()
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SequenceVerdict {
    pub seq: DiffSeq,
    pub t: u32,
    pub condition2_cardinality: u32,
    /// `3(t - 1)`; condition 2 holds when the cardinality exceeds it.
    pub condition2_threshold: u32,
    /// `2 Σd + t + 1`, present only when condition 2 holds.
    pub corollary_bound: Option<u32>,
    pub verified_genera: Vec<(u32, bool)>,
}

/// Sufficient genus bound for `d` to give 2-Buchweitz PF-semigroups.
///
/// Requires `t >= 2`. `verified_genera` is left empty; see [`verify_window`].
pub fn corollary_bound(d: &DiffSeq) -> Result<SequenceVerdict> {
    let t = d.t();
    if t < 2 {
        return Err(Error::InvalidInput(
            "the genus bound needs a sequence with at least one entry".into(),
        ));
    }
    let condition2_cardinality = d.to_a().pair_sum_count();
    let condition2_threshold = 3 * (t - 1);
    let corollary_bound =
        (condition2_cardinality > condition2_threshold).then(|| 2 * d.sum() + t + 1);
    Ok(SequenceVerdict {
        seq: d.clone(),
        t,
        condition2_cardinality,
        condition2_threshold,
        corollary_bound,
        verified_genera: Vec::new(),
    })
}

/// `#G_2 = 3m - 3 + #{a_i + a_j}`, valid once `g >= 2 a_1 + t - 1`.
pub fn predicted_g2_cardinality(d: &DiffSeq, g: u32) -> Option<u64> {
    let a = d.to_a();
    let t = d.t();
    if d.as_slice().is_empty() || g < 2 * a.as_slice()[0] + t - 1 {
        return None;
    }
    let m = (g - t + 1) as u64;
    Some(3 * m - 3 + a.pair_sum_count() as u64)
}

/// Direct check: the family member of genus `g` is a PF-semigroup and 2-Buchweitz.
pub fn verify_sequence(d: &DiffSeq, g: u32) -> Result<bool> {
    let s = build_pf(d, g)?;
    Ok(is_pf_semigroup(&s) && buchweitz_test(&s, 2)?.is_buchweitz)
}

/// [`verify_sequence`] over every genus in `genera`, in order.
pub fn verify_window(d: &DiffSeq, genera: RangeInclusive<u32>) -> Result<Vec<(u32, bool)>> {
    genera
        .into_par_iter()
        .map(|g| verify_sequence(d, g).map(|ok| (g, ok)))
        .collect()
}

/// A sequence together with a genus at which it is claimed to work, `1,4,3@22`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AnchoredSeq {
    pub seq: DiffSeq,
    pub genus: u32,
}

impl fmt::Display for AnchoredSeq {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}@{}", self.seq, self.genus)
    }
}

impl FromStr for AnchoredSeq {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let (seq, genus) = s
            .rsplit_once('@')
            .ok_or_else(|| Error::InvalidInput(format!("expected SEQ@GENUS, got {s:?}")))?;
        let genus = genus
            .parse()
            .map_err(|_| Error::InvalidInput(format!("bad genus {genus:?}")))?;
        Ok(Self { seq: seq.parse()?, genus })
    }
}

fn check_anchor(which: &str, x: &AnchoredSeq) -> Result<()> {
    let verdict = corollary_bound(&x.seq)?;
    match verdict.corollary_bound {
        None => Err(Error::PreconditionUnverified(format!(
            "{which} {} fails the pair-sum condition ({} <= {})",
            x.seq, verdict.condition2_cardinality, verdict.condition2_threshold
        ))),
        Some(b) if x.genus < b => Err(Error::PreconditionUnverified(format!(
            "{which} {} is anchored at genus {} below its bound {b}",
            x.seq, x.genus
        ))),
        Some(_) => Ok(()),
    }
}

/// Pastes `head ++ [k] ++ tail`, anchored at `g_tail + g_head + 2k - 1`.
///
/// The last entry of `head` must exceed `k`, and both inputs must satisfy the
/// sufficient conditions of [`corollary_bound`] at their anchor genus.
pub fn paste(tail: &AnchoredSeq, head: &AnchoredSeq, k: u32) -> Result<AnchoredSeq> {
    let pasted = paste_unchecked(tail, head, k)?;
    let last = *head.seq.as_slice().last().expect("checked by paste_unchecked");
    if last <= k {
        return Err(Error::PasteConditionViolated { last, k });
    }
    check_anchor("tail", tail)?;
    check_anchor("head", head)?;
    Ok(pasted)
}

/// UNCHECKED variant of [`paste`]: only the shapes of the inputs are checked.
/// The result carries no Buchweitz guarantee.
pub fn paste_unchecked(tail: &AnchoredSeq, head: &AnchoredSeq, k: u32) -> Result<AnchoredSeq> {
    if k == 0 {
        return Err(Error::InvalidInput("paste needs k >= 1".into()));
    }
    if head.seq.as_slice().is_empty() {
        return Err(Error::InvalidInput("the head sequence must be non-empty".into()));
    }
    let seq: Vec<u32> = head
        .seq
        .as_slice()
        .iter()
        .copied()
        .chain([k])
        .chain(tail.seq.as_slice().iter().copied())
        .collect();
    Ok(AnchoredSeq {
        seq: DiffSeq(seq),
        genus: tail.genus + head.genus + 2 * k - 1,
    })
}

/// Recovers the difference sequence from a Schubert index of the family.
///
/// The number of leading zeros is `g - t`; the remaining entries satisfy
/// `d_j = alpha_i - alpha_{i-1} + 1`.
pub fn schubert_to_d(alpha: &[u32]) -> Result<DiffSeq> {
    let g = alpha.len() as u32;
    let zeros = alpha.iter().take_while(|&&x| x == 0).count() as u32;
    if zeros == g {
        return Err(Error::NotPFShape("no nonzero entries".into()));
    }
    let tail = &alpha[zeros as usize..];
    if tail.windows(2).any(|w| w[1] < w[0]) {
        return Err(Error::NotPFShape("index is not weakly increasing".into()));
    }
    let d = DiffSeq(tail.windows(2).map(|w| w[1] - w[0] + 1).collect());
    let rebuilt = build_pf(&d, g).map_err(|e| Error::NotPFShape(e.to_string()))?;
    if rebuilt.schubert_index() != alpha {
        return Err(Error::NotPFShape(format!(
            "largest gap must be 2m - 1 = {}",
            2 * zeros + 1
        )));
    }
    Ok(d)
}
