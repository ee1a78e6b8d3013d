//! Fixed-width bitsets over edge indices.

use std::fmt;

/// A set of edge indices of some parent quiver.
///
/// Masks are compared and hashed by content, so they serve directly as keys
/// when memoizing faces.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct EdgeMask {
    len: usize,
    words: Vec<u64>,
}

impl EdgeMask {
    pub fn empty(len: usize) -> Self {
        EdgeMask {
            len,
            words: vec![0; len.div_ceil(64)],
        }
    }

    pub fn full(len: usize) -> Self {
        let mut mask = Self::empty(len);
        for i in 0..len {
            mask.insert(i);
        }
        mask
    }

    /// Builds a mask from the low `len` bits of `bits`.
    pub fn from_bits(len: usize, bits: u64) -> Self {
        assert!(len <= 64, "from_bits supports at most 64 edges");
        let mut mask = Self::empty(len);
        if len > 0 {
            let keep = if len == 64 { u64::MAX } else { (1u64 << len) - 1 };
            mask.words[0] = bits & keep;
        }
        mask
    }

    pub fn from_indices<I: IntoIterator<Item = usize>>(len: usize, indices: I) -> Self {
        let mut mask = Self::empty(len);
        for i in indices {
            mask.insert(i);
        }
        mask
    }

    /// Universe size (the parent's edge count).
    pub fn universe(&self) -> usize {
        self.len
    }

    pub fn contains(&self, i: usize) -> bool {
        i < self.len && self.words[i / 64] & (1 << (i % 64)) != 0
    }

    pub fn insert(&mut self, i: usize) {
        assert!(i < self.len, "edge index {i} out of range {}", self.len);
        self.words[i / 64] |= 1 << (i % 64);
    }

    pub fn remove(&mut self, i: usize) {
        if i < self.len {
            self.words[i / 64] &= !(1 << (i % 64));
        }
    }

    pub fn count(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    pub fn is_full(&self) -> bool {
        self.count() == self.len
    }

    pub fn is_subset(&self, other: &EdgeMask) -> bool {
        self.words
            .iter()
            .zip(&other.words)
            .all(|(a, b)| a & !b == 0)
    }

    pub fn intersection(&self, other: &EdgeMask) -> EdgeMask {
        EdgeMask {
            len: self.len,
            words: self
                .words
                .iter()
                .zip(&other.words)
                .map(|(a, b)| a & b)
                .collect(),
        }
    }

    pub fn complement(&self) -> EdgeMask {
        let mut out = EdgeMask::empty(self.len);
        for i in 0..self.len {
            if !self.contains(i) {
                out.insert(i);
            }
        }
        out
    }

    /// Indices of the set bits, ascending.
    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        (0..self.len).filter(move |&i| self.contains(i))
    }
}

impl fmt::Debug for EdgeMask {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let bits: String = (0..self.len)
            .map(|i| if self.contains(i) { '1' } else { '0' })
            .collect();
        write!(f, "EdgeMask({bits})")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn basic_set_operations() {
        let mut m = EdgeMask::empty(70);
        m.insert(0);
        m.insert(65);
        assert_eq!(m.count(), 2);
        assert!(m.contains(65));
        assert!(!m.contains(64));
        assert_eq!(m.iter().collect::<Vec<_>>(), vec![0, 65]);
        assert_eq!(m.complement().count(), 68);
        assert!(m.is_subset(&EdgeMask::full(70)));
        m.remove(0);
        assert_eq!(m.count(), 1);
    }

    #[test]
    fn from_bits_truncates() {
        let m = EdgeMask::from_bits(3, 0b1111);
        assert_eq!(m.count(), 3);
        assert!(m.is_full());
        assert!(EdgeMask::from_bits(0, 7).is_empty());
    }
}
