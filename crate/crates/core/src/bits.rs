//! Fixed-length packed bit vector used as the storage for bit tables.
//!
//! Bits live in little-endian order inside `u64` words: bit `i` is bit
//! `i % 64` of word `i / 64`. Bits past `len` in the last word are kept
//! at zero so that word-wise equality, popcount and subset tests need no
//! masking.

use std::fmt;

const WORD: usize = u64::BITS as usize;

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct BitTable {
    len: usize,
    words: Vec<u64>,
}

impl BitTable {
    pub fn zeros(len: usize) -> Self {
        BitTable {
            len,
            words: vec![0; len.div_ceil(WORD)],
        }
    }

    pub fn ones(len: usize) -> Self {
        let mut table = BitTable {
            len,
            words: vec![u64::MAX; len.div_ceil(WORD)],
        };
        table.clear_tail();
        table
    }

    pub fn from_fn(len: usize, mut f: impl FnMut(usize) -> bool) -> Self {
        let mut table = BitTable::zeros(len);
        for i in 0..len {
            if f(i) {
                table.set(i, true);
            }
        }
        table
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
    pub fn get(&self, i: usize) -> bool {
        debug_assert!(i < self.len);
        self.words[i / WORD] >> (i % WORD) & 1 == 1
    }

    #[inline]
    pub fn set(&mut self, i: usize, value: bool) {
        debug_assert!(i < self.len);
        let mask = 1u64 << (i % WORD);
        if value {
            self.words[i / WORD] |= mask;
        } else {
            self.words[i / WORD] &= !mask;
        }
    }

    pub fn count_ones(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn all_zero(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    pub fn all_ones(&self) -> bool {
        self.count_ones() == self.len
    }

    /// True when every set bit of `self` is also set in `other`.
    pub fn is_subset(&self, other: &BitTable) -> bool {
        debug_assert_eq!(self.len, other.len);
        self.words
            .iter()
            .zip(&other.words)
            .all(|(a, b)| a & !b == 0)
    }

    pub fn and(&self, other: &BitTable) -> BitTable {
        self.zip_with(other, |a, b| a & b)
    }

    pub fn or(&self, other: &BitTable) -> BitTable {
        self.zip_with(other, |a, b| a | b)
    }

    pub fn and_not(&self, other: &BitTable) -> BitTable {
        self.zip_with(other, |a, b| a & !b)
    }

    pub fn not(&self) -> BitTable {
        let mut out = BitTable {
            len: self.len,
            words: self.words.iter().map(|w| !w).collect(),
        };
        out.clear_tail();
        out
    }

    pub fn and_assign(&mut self, other: &BitTable) {
        debug_assert_eq!(self.len, other.len);
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a &= b;
        }
    }

    /// Indices of set bits in increasing order.
    pub fn ones_iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.words.iter().enumerate().flat_map(|(wi, &word)| {
            let mut w = word;
            std::iter::from_fn(move || {
                if w == 0 {
                    return None;
                }
                let tz = w.trailing_zeros() as usize;
                w &= w - 1;
                Some(wi * WORD + tz)
            })
        })
    }

    pub fn words(&self) -> &[u64] {
        &self.words
    }

    fn zip_with(&self, other: &BitTable, f: impl Fn(u64, u64) -> u64) -> BitTable {
        assert_eq!(self.len, other.len, "bit tables of different length");
        BitTable {
            len: self.len,
            words: self
                .words
                .iter()
                .zip(&other.words)
                .map(|(&a, &b)| f(a, b))
                .collect(),
        }
    }

    fn clear_tail(&mut self) {
        let rem = self.len % WORD;
        if rem != 0 {
            if let Some(last) = self.words.last_mut() {
                *last &= (1u64 << rem) - 1;
            }
        }
    }
}

/// Renders as a string of `0`/`1`, bit 0 first.
impl fmt::Display for BitTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: String = (0..self.len)
            .map(|i| if self.get(i) { '1' } else { '0' })
            .collect();
        f.write_str(&s)
    }
}

impl fmt::Debug for BitTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "BitTable({self})")
    }
}
