//! Growable word-packed bitmap with the shift-OR primitive used for sumsets.

const WORD: usize = 64;

#[derive(Clone, Default, PartialEq, Eq, Hash)]
pub struct Bitmap {
    words: Vec<u64>,
    len: usize,
}

impl Bitmap {
    /// All-zero bitmap holding positions `0..len`.
    pub fn new(len: usize) -> Self {
        Self {
            words: vec![0; len.div_ceil(WORD)],
            len,
        }
    }

    pub fn from_positions(len: usize, positions: impl IntoIterator<Item = usize>) -> Self {
        let mut bm = Self::new(len);
        for p in positions {
            bm.insert(p);
        }
        bm
    }

    #[inline]
    pub fn len(&self) -> usize {
        self.len
    }

    #[inline]
    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    #[inline]
    pub fn contains(&self, pos: usize) -> bool {
        pos < self.len && self.words[pos / WORD] >> (pos % WORD) & 1 == 1
    }

    #[inline]
    pub fn insert(&mut self, pos: usize) {
        assert!(pos < self.len, "bit {pos} out of range 0..{}", self.len);
        self.words[pos / WORD] |= 1 << (pos % WORD);
    }

    #[inline]
    pub fn remove(&mut self, pos: usize) {
        assert!(pos < self.len, "bit {pos} out of range 0..{}", self.len);
        self.words[pos / WORD] &= !(1 << (pos % WORD));
    }

    pub fn count_ones(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn first_one(&self) -> Option<usize> {
        self.words
            .iter()
            .enumerate()
            .find(|(_, w)| **w != 0)
            .map(|(i, w)| i * WORD + w.trailing_zeros() as usize)
    }

    pub fn last_one(&self) -> Option<usize> {
        self.words
            .iter()
            .enumerate()
            .rev()
            .find(|(_, w)| **w != 0)
            .map(|(i, w)| i * WORD + (WORD - 1 - w.leading_zeros() as usize))
    }

    pub fn iter_ones(&self) -> Ones<'_> {
        Ones {
            words: &self.words,
            idx: 0,
            cur: self.words.first().copied().unwrap_or(0),
        }
    }

    /// `self |= other << shift`, growing `self` if the shifted bits overflow it.
    pub fn or_shifted(&mut self, other: &Bitmap, shift: usize) {
        let needed = other.len + shift;
        if needed > self.len {
            self.len = needed;
            self.words.resize(needed.div_ceil(WORD), 0);
        }
        let ws = shift / WORD;
        let bs = shift % WORD;
        for (i, &w) in other.words.iter().enumerate() {
            if w == 0 {
                continue;
            }
            self.words[i + ws] |= w << bs;
            if bs != 0 && i + ws + 1 < self.words.len() {
                self.words[i + ws + 1] |= w >> (WORD - bs);
            }
        }
    }

    /// Sumset `A + B` where both operands are read as sets of non-negative integers.
    pub fn sumset(&self, other: &Bitmap) -> Bitmap {
        let (outer, inner) = if self.count_ones() <= other.count_ones() {
            (self, other)
        } else {
            (other, self)
        };
        let len = match (self.len, other.len) {
            (0, _) | (_, 0) => 0,
            (a, b) => a + b - 1,
        };
        let mut acc = Bitmap::new(len);
        for x in outer.iter_ones() {
            acc.or_shifted(inner, x);
        }
        acc.len = len;
        acc.words.truncate(len.div_ceil(WORD));
        acc
    }
}

impl std::fmt::Debug for Bitmap {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_set().entries(self.iter_ones()).finish()
    }
}

pub struct Ones<'a> {
    words: &'a [u64],
    idx: usize,
    cur: u64,
}

impl Iterator for Ones<'_> {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        loop {
            if self.cur != 0 {
                let tz = self.cur.trailing_zeros() as usize;
                self.cur &= self.cur - 1;
                return Some(self.idx * WORD + tz);
            }
            self.idx += 1;
            self.cur = *self.words.get(self.idx)?;
        }
    }
}
