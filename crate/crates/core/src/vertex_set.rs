use std::fmt;

/// A subset of `0..n`, stored as a bitset.
///
/// Graphs with at most 64 vertices fit in a single word, which is what the
/// enumeration routines work with directly (see [`VertexSet::as_mask`]).
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct VertexSet {
    n: usize,
    words: Vec<u64>,
}

impl VertexSet {
    pub fn empty(n: usize) -> Self {
        VertexSet {
            n,
            words: vec![0; n.div_ceil(64).max(1)],
        }
    }

    pub fn full(n: usize) -> Self {
        let mut s = Self::empty(n);
        for v in 0..n {
            s.insert(v);
        }
        s
    }

    /// Panics if a vertex is `>= n`.
    pub fn from_vertices<I: IntoIterator<Item = usize>>(n: usize, vertices: I) -> Self {
        let mut s = Self::empty(n);
        for v in vertices {
            s.insert(v);
        }
        s
    }

    /// Bit `i` of `mask` is vertex `i`. Bits at or above `n` are ignored.
    pub fn from_mask(n: usize, mask: u64) -> Self {
        assert!(n <= 64, "mask representation needs n <= 64");
        let mut s = Self::empty(n);
        s.words[0] = mask & low_bits(n);
        s
    }

    /// The single-word representation, available when `n <= 64`.
    pub fn as_mask(&self) -> Option<u64> {
        (self.n <= 64).then(|| self.words[0])
    }

    pub fn universe(&self) -> usize {
        self.n
    }

    pub fn contains(&self, v: usize) -> bool {
        v < self.n && self.words[v / 64] >> (v % 64) & 1 == 1
    }

    pub fn insert(&mut self, v: usize) {
        assert!(v < self.n, "vertex {v} outside 0..{}", self.n);
        self.words[v / 64] |= 1 << (v % 64);
    }

    pub fn remove(&mut self, v: usize) {
        if v < self.n {
            self.words[v / 64] &= !(1 << (v % 64));
        }
    }

    pub fn len(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    pub fn complement(&self) -> Self {
        let mut c = Self::empty(self.n);
        for (i, w) in self.words.iter().enumerate() {
            c.words[i] = !w;
        }
        // clear the padding bits of the last word
        if !self.n.is_multiple_of(64) {
            let last = c.words.len() - 1;
            c.words[last] &= low_bits(self.n % 64);
        }
        if self.n == 0 {
            c.words[0] = 0;
        }
        c
    }

    pub fn is_disjoint(&self, other: &VertexSet) -> bool {
        self.words.iter().zip(&other.words).all(|(a, b)| a & b == 0)
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        (0..self.n).filter(move |&v| self.contains(v))
    }

    pub fn to_vec(&self) -> Vec<usize> {
        self.iter().collect()
    }

    /// `'1'` for members, `'0'` otherwise, vertex 0 first.
    pub fn membership_string(&self) -> String {
        (0..self.n)
            .map(|v| if self.contains(v) { '1' } else { '0' })
            .collect()
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

pub(crate) fn low_bits(k: usize) -> u64 {
    if k >= 64 {
        u64::MAX
    } else {
        (1u64 << k) - 1
    }
}

/// Iterate the set bits of a mask, lowest first.
pub(crate) fn bits(mut mask: u64) -> impl Iterator<Item = usize> {
    std::iter::from_fn(move || {
        if mask == 0 {
            None
        } else {
            let v = mask.trailing_zeros() as usize;
            mask &= mask - 1;
            Some(v)
        }
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_and_large_agree() {
        let s = VertexSet::from_vertices(10, [0, 3, 9]);
        assert_eq!(s.len(), 3);
        assert_eq!(s.as_mask(), Some(0b10_0000_1001));
        assert_eq!(s.complement().len(), 7);
        assert_eq!(s.membership_string(), "1001000001");

        let big = VertexSet::from_vertices(130, [0, 64, 129]);
        assert_eq!(big.len(), 3);
        assert!(big.contains(129) && !big.contains(128));
        assert_eq!(big.as_mask(), None);
        let c = big.complement();
        assert_eq!(c.len(), 127);
        assert!(c.is_disjoint(&big));
        assert_eq!(c.complement(), big);
    }

    #[test]
    fn complement_of_64() {
        let s = VertexSet::from_mask(64, 1);
        assert_eq!(s.complement().len(), 63);
    }

    #[test]
    fn bit_iteration() {
        assert_eq!(bits(0b1011_0000).collect::<Vec<_>>(), vec![4, 5, 7]);
    }
}
