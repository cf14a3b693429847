//! Fixed-width vertex membership masks.

use std::fmt;

const BITS: usize = 64;

/// A set of vertices of a graph with a fixed order, packed into 64-bit words.
///
/// The order is part of the value: operations on sets of different orders
/// are a logic error and panic. Doubles as the fill state of the forcing
/// game.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct VertexSet {
    len: usize,
    blocks: Vec<u64>,
}

impl VertexSet {
    /// Empty set over `len` vertices.
    pub fn empty(len: usize) -> Self {
        VertexSet {
            len,
            blocks: vec![0; len.div_ceil(BITS)],
        }
    }

    /// Full set {0, ..., len-1}.
    pub fn full(len: usize) -> Self {
        let mut s = Self::empty(len);
        for b in 0..s.blocks.len() {
            s.blocks[b] = !0;
        }
        s.trim();
        s
    }

    pub fn from_indices(len: usize, indices: &[usize]) -> Self {
        let mut s = Self::empty(len);
        for &i in indices {
            s.insert(i);
        }
        s
    }

    /// Build from the low `len <= 64` bits of a word.
    pub fn from_word(len: usize, word: u64) -> Self {
        assert!(len <= BITS);
        let mut s = Self::empty(len);
        if !s.blocks.is_empty() {
            s.blocks[0] = word;
        }
        s.trim();
        s
    }

    /// The packed word form, when the order fits in one word.
    pub fn as_word(&self) -> Option<u64> {
        if self.len <= BITS {
            Some(self.blocks.first().copied().unwrap_or(0))
        } else {
            None
        }
    }

    /// Number of vertices of the underlying graph (not the cardinality).
    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.blocks.iter().all(|&b| b == 0)
    }

    /// Cardinality of the set.
    pub fn card(&self) -> usize {
        self.blocks.iter().map(|b| b.count_ones() as usize).sum()
    }

    pub fn contains(&self, i: usize) -> bool {
        assert!(i < self.len, "vertex {i} out of range 0..{}", self.len);
        self.blocks[i / BITS] >> (i % BITS) & 1 == 1
    }

    pub fn insert(&mut self, i: usize) {
        assert!(i < self.len, "vertex {i} out of range 0..{}", self.len);
        self.blocks[i / BITS] |= 1 << (i % BITS);
    }

    pub fn remove(&mut self, i: usize) {
        assert!(i < self.len, "vertex {i} out of range 0..{}", self.len);
        self.blocks[i / BITS] &= !(1 << (i % BITS));
    }

    pub fn is_full(&self) -> bool {
        self.card() == self.len
    }

    pub fn union_with(&mut self, other: &VertexSet) {
        self.check(other);
        for (a, b) in self.blocks.iter_mut().zip(&other.blocks) {
            *a |= b;
        }
    }

    pub fn intersect_with(&mut self, other: &VertexSet) {
        self.check(other);
        for (a, b) in self.blocks.iter_mut().zip(&other.blocks) {
            *a &= b;
        }
    }

    /// `self \ other`, as a new set.
    pub fn minus(&self, other: &VertexSet) -> VertexSet {
        self.check(other);
        let mut out = self.clone();
        for (a, b) in out.blocks.iter_mut().zip(&other.blocks) {
            *a &= !b;
        }
        out
    }

    pub fn complement(&self) -> VertexSet {
        let mut out = self.clone();
        for b in out.blocks.iter_mut() {
            *b = !*b;
        }
        out.trim();
        out
    }

    pub fn is_subset_of(&self, other: &VertexSet) -> bool {
        self.check(other);
        self.blocks.iter().zip(&other.blocks).all(|(a, b)| a & !b == 0)
    }

    pub fn intersects(&self, other: &VertexSet) -> bool {
        self.check(other);
        self.blocks.iter().zip(&other.blocks).any(|(a, b)| a & b != 0)
    }

    /// Iterate members in ascending order.
    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.blocks.iter().enumerate().flat_map(|(bi, &block)| {
            let mut w = block;
            std::iter::from_fn(move || {
                if w == 0 {
                    None
                } else {
                    let tz = w.trailing_zeros() as usize;
                    w &= w - 1;
                    Some(bi * BITS + tz)
                }
            })
        })
    }

    /// The single member, if the cardinality is exactly one.
    pub fn sole_member(&self) -> Option<usize> {
        if self.card() == 1 {
            self.iter().next()
        } else {
            None
        }
    }

    fn check(&self, other: &VertexSet) {
        assert_eq!(
            self.len, other.len,
            "vertex sets over different orders ({} vs {})",
            self.len, other.len
        );
    }

    fn trim(&mut self) {
        let rem = self.len % BITS;
        if rem != 0 {
            if let Some(last) = self.blocks.last_mut() {
                *last &= (1u64 << rem) - 1;
            }
        }
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (k, v) in self.iter().enumerate() {
            if k > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, "}}")
    }
}
