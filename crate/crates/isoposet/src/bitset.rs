//! Fixed-width bit vectors used for subgroup membership sets.

/// A bit vector over `0..len`. Subgroups of a group of order `n` are
/// represented as a `BitSet` with `len == n`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BitSet {
    words: Vec<u64>,
    len: usize,
}

impl BitSet {
    pub fn new(len: usize) -> Self {
        BitSet {
            words: vec![0; len.div_ceil(64)],
            len,
        }
    }

    pub fn from_elems<I: IntoIterator<Item = usize>>(len: usize, elems: I) -> Self {
        let mut s = BitSet::new(len);
        for e in elems {
            s.insert(e);
        }
        s
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    #[inline]
    pub fn insert(&mut self, i: usize) {
        debug_assert!(i < self.len);
        self.words[i >> 6] |= 1 << (i & 63);
    }

    #[inline]
    pub fn contains(&self, i: usize) -> bool {
        debug_assert!(i < self.len);
        self.words[i >> 6] & (1 << (i & 63)) != 0
    }

    pub fn count(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    /// True if every member of `self` is a member of `other`.
    pub fn is_subset(&self, other: &BitSet) -> bool {
        debug_assert_eq!(self.len, other.len);
        self.words
            .iter()
            .zip(&other.words)
            .all(|(a, b)| a & !b == 0)
    }

    pub fn intersection(&self, other: &BitSet) -> BitSet {
        debug_assert_eq!(self.len, other.len);
        BitSet {
            words: self
                .words
                .iter()
                .zip(&other.words)
                .map(|(a, b)| a & b)
                .collect(),
            len: self.len,
        }
    }

    pub fn union(&self, other: &BitSet) -> BitSet {
        debug_assert_eq!(self.len, other.len);
        BitSet {
            words: self
                .words
                .iter()
                .zip(&other.words)
                .map(|(a, b)| a | b)
                .collect(),
            len: self.len,
        }
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        (0..self.len).filter(move |&i| self.contains(i))
    }

    /// Hex encoding of the underlying words, least-significant word first.
    pub fn to_hex(&self) -> String {
        self.words.iter().map(|w| format!("{w:016x}")).collect()
    }

    pub fn from_hex(len: usize, hex: &str) -> Option<BitSet> {
        let n_words = len.div_ceil(64);
        if hex.len() != n_words * 16 {
            return None;
        }
        let mut words = Vec::with_capacity(n_words);
        for k in 0..n_words {
            words.push(u64::from_str_radix(&hex[k * 16..(k + 1) * 16], 16).ok()?);
        }
        Some(BitSet { words, len })
    }
}

impl std::fmt::Debug for BitSet {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn subset_and_count() {
        let a = BitSet::from_elems(100, [0, 3, 64, 99]);
        let b = BitSet::from_elems(100, [0, 1, 3, 64, 70, 99]);
        assert!(a.is_subset(&b));
        assert!(!b.is_subset(&a));
        assert_eq!(a.count(), 4);
        assert_eq!(a.intersection(&b), a);
        assert_eq!(a.union(&b), b);
    }

    #[test]
    fn hex_round_trip() {
        let a = BitSet::from_elems(70, [0, 5, 63, 64, 69]);
        let b = BitSet::from_hex(70, &a.to_hex()).unwrap();
        assert_eq!(a, b);
    }
}
