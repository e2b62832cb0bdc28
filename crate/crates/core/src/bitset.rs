//! Fixed-width bit set used for edge masks (matchings, forcing sets) and
//! row sets of the incidence matrix.

use std::fmt;

const WORD: usize = 64;

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct BitSet {
    words: Vec<u64>,
    width: usize,
}

impl BitSet {
    pub fn new(width: usize) -> Self {
        BitSet {
            words: vec![0; width.div_ceil(WORD)],
            width,
        }
    }

    /// Builds a set of the given width from member indices.
    ///
    /// Panics if an index is `>= width`.
    pub fn from_indices<I: IntoIterator<Item = usize>>(width: usize, indices: I) -> Self {
        let mut set = BitSet::new(width);
        for i in indices {
            set.insert(i);
        }
        set
    }

    pub fn width(&self) -> usize {
        self.width
    }

    #[inline]
    pub fn insert(&mut self, i: usize) {
        assert!(
            i < self.width,
            "bit {i} out of range for width {}",
            self.width
        );
        self.words[i / WORD] |= 1 << (i % WORD);
    }

    #[inline]
    pub fn remove(&mut self, i: usize) {
        assert!(
            i < self.width,
            "bit {i} out of range for width {}",
            self.width
        );
        self.words[i / WORD] &= !(1 << (i % WORD));
    }

    #[inline]
    pub fn contains(&self, i: usize) -> bool {
        i < self.width && self.words[i / WORD] & (1 << (i % WORD)) != 0
    }

    pub fn len(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    pub fn is_subset(&self, other: &BitSet) -> bool {
        self.words
            .iter()
            .zip(other.words.iter().chain(std::iter::repeat(&0)))
            .all(|(a, b)| a & !b == 0)
    }

    pub fn intersection(&self, other: &BitSet) -> BitSet {
        let words = self
            .words
            .iter()
            .zip(other.words.iter().chain(std::iter::repeat(&0)))
            .map(|(a, b)| a & b)
            .collect();
        BitSet {
            words,
            width: self.width,
        }
    }

    pub fn symmetric_difference(&self, other: &BitSet) -> BitSet {
        debug_assert_eq!(self.width, other.width);
        let words = self
            .words
            .iter()
            .zip(&other.words)
            .map(|(a, b)| a ^ b)
            .collect();
        BitSet {
            words,
            width: self.width,
        }
    }

    /// Member indices in increasing order.
    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.words.iter().enumerate().flat_map(|(wi, &word)| {
            let mut w = word;
            std::iter::from_fn(move || {
                if w == 0 {
                    return None;
                }
                let bit = w.trailing_zeros() as usize;
                w &= w - 1;
                Some(wi * WORD + bit)
            })
        })
    }

    pub fn to_vec(&self) -> Vec<usize> {
        self.iter().collect()
    }
}

impl fmt::Debug for BitSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

/// Renders the set as a 0/1 string of length `width`, lowest index first.
impl fmt::Display for BitSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.width {
            f.write_str(if self.contains(i) { "1" } else { "0" })?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn insert_remove_and_display() {
        let mut s = BitSet::new(70);
        s.insert(0);
        s.insert(65);
        assert!(s.contains(65));
        assert!(!s.contains(64));
        assert!(!s.contains(500));
        assert_eq!(s.len(), 2);
        s.remove(0);
        assert_eq!(s.to_vec(), vec![65]);
        assert_eq!(BitSet::from_indices(3, [0, 2]).to_string(), "101");
    }

    proptest! {
        #[test]
        fn iter_matches_membership(members in proptest::collection::btree_set(0usize..200, 0..40)) {
            let s = BitSet::from_indices(200, members.iter().copied());
            prop_assert_eq!(s.to_vec(), members.iter().copied().collect::<Vec<_>>());
            prop_assert_eq!(s.len(), members.len());
        }

        #[test]
        fn symmetric_difference_is_xor(a in proptest::collection::btree_set(0usize..130, 0..30),
                                       b in proptest::collection::btree_set(0usize..130, 0..30)) {
            let sa = BitSet::from_indices(130, a.iter().copied());
            let sb = BitSet::from_indices(130, b.iter().copied());
            let expected: Vec<usize> = a.symmetric_difference(&b).copied().collect();
            prop_assert_eq!(sa.symmetric_difference(&sb).to_vec(), expected);
            prop_assert!(sa.intersection(&sb).is_subset(&sa));
        }
    }
}
