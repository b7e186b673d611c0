//! Exact computation with numerical semigroups.
//!
//! * [`semigroup`]: canonical representation, gaps, generators and the
//!   classical invariants.
//! * [`buchweitz`]: n-fold gap sumsets and the Buchweitz test.
//! * [`pfseq`]: PF-semigroups, difference sequences, genus bounds, pasting.
//! * [`decompose`]: intersections of irreducible stair blocks.
//! * [`census`]: the semigroup tree and per-genus counts.

pub mod bitmap;
pub mod buchweitz;
pub mod census;
pub mod decompose;
mod error;
pub mod pfseq;
pub mod semigroup;

pub use buchweitz::{buchweitz_test, gap_sumset, SumsetReport};
pub use census::{census_range, census_range_with_threads, census_row, enumerate_genus, CensusRow};
pub use decompose::{decompose_pf, is_irreducible, stair_block, Parity, StairBlock};
pub use error::{Error, Result};
pub use pfseq::{
    build_pf, corollary_bound, is_pf_semigroup, paste, paste_unchecked, schubert_to_d,
    verify_sequence, verify_window, ASeq, AnchoredSeq, DiffSeq, SequenceVerdict,
};
pub use semigroup::{GapList, Invariants, Semigroup};
