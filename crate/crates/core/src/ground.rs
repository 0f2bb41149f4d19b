//! Ground sets, subsets, and element orders.
//!
//! Elements carry the labels `1..=n`. Subsets are stored as bitmasks with
//! element `i` on bit `i-1`, which doubles as the canonical key: iterating
//! masks `0..2^n` walks the whole power set.

use crate::error::{Error, Result};

/// Hard cap on the ground set size; every identity check below iterates
/// all `2^n` subsets, so anything larger is out of reach anyway.
pub const MAX_GROUND: usize = 16;

/// A finite ground set `{1, .., n}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct GroundSet {
    n: usize,
}

impl GroundSet {
    pub fn new(n: usize) -> Result<Self> {
        if n == 0 || n > MAX_GROUND {
            return Err(Error::GroundSize(n));
        }
        Ok(GroundSet { n })
    }

    pub fn size(&self) -> usize {
        self.n
    }

    /// Number of subsets, `2^n`.
    pub fn subset_count(&self) -> usize {
        1 << self.n
    }

    /// All elements in label order.
    pub fn elements(&self) -> impl Iterator<Item = usize> {
        1..=self.n
    }

    /// All subsets in mask order (the canonical enumeration).
    pub fn subsets(&self) -> impl Iterator<Item = Subset> {
        (0..(1u32 << self.n)).map(Subset)
    }

    pub fn full_subset(&self) -> Subset {
        Subset((1u32 << self.n) - 1)
    }
}

/// A subset of the ground set, encoded as a bitmask (element `i` ↔ bit `i-1`).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Subset(pub u32);

impl Subset {
    pub const EMPTY: Subset = Subset(0);

    pub fn singleton(element: usize) -> Subset {
        Subset(1 << (element - 1))
    }

    pub fn from_elements<I: IntoIterator<Item = usize>>(elements: I) -> Subset {
        let mut mask = 0u32;
        for e in elements {
            mask |= 1 << (e - 1);
        }
        Subset(mask)
    }

    pub fn contains(&self, element: usize) -> bool {
        self.0 >> (element - 1) & 1 == 1
    }

    pub fn len(&self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(&self) -> bool {
        self.0 == 0
    }

    pub fn insert(&self, element: usize) -> Subset {
        Subset(self.0 | 1 << (element - 1))
    }

    pub fn remove(&self, element: usize) -> Subset {
        Subset(self.0 & !(1 << (element - 1)))
    }

    pub fn union(&self, other: Subset) -> Subset {
        Subset(self.0 | other.0)
    }

    pub fn intersection(&self, other: Subset) -> Subset {
        Subset(self.0 & other.0)
    }

    pub fn difference(&self, other: Subset) -> Subset {
        Subset(self.0 & !other.0)
    }

    pub fn symmetric_difference(&self, other: Subset) -> Subset {
        Subset(self.0 ^ other.0)
    }

    pub fn is_subset_of(&self, other: Subset) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn complement(&self, ground: GroundSet) -> Subset {
        Subset(!self.0 & ground.full_subset().0)
    }

    /// Elements in ascending label order.
    pub fn elements(&self) -> impl Iterator<Item = usize> {
        let mask = self.0;
        (1..=32usize).filter(move |e| mask >> (e - 1) & 1 == 1)
    }

    pub fn min_element(&self) -> Option<usize> {
        if self.0 == 0 {
            None
        } else {
            Some(self.0.trailing_zeros() as usize + 1)
        }
    }

    pub fn max_element(&self) -> Option<usize> {
        if self.0 == 0 {
            None
        } else {
            Some(32 - self.0.leading_zeros() as usize)
        }
    }
}

impl std::fmt::Display for Subset {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{{")?;
        let mut first = true;
        for e in self.elements() {
            if !first {
                write!(f, ",")?;
            }
            write!(f, "{e}")?;
            first = false;
        }
        write!(f, "}}")
    }
}

/// A total order on the elements of a ground set.
///
/// `sequence[k]` is the element in position `k`, smallest first, so the
/// natural order on `{1,2,3}` is `[1,2,3]` and "2 < 3 < 1" is `[2,3,1]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ElementOrder {
    sequence: Vec<usize>,
    position: Vec<usize>,
}

impl ElementOrder {
    pub fn new(sequence: Vec<usize>) -> Result<Self> {
        let n = sequence.len();
        if n == 0 || n > MAX_GROUND {
            return Err(Error::GroundSize(n));
        }
        let mut position = vec![usize::MAX; n + 1];
        for (k, &e) in sequence.iter().enumerate() {
            if e == 0 || e > n || position[e] != usize::MAX {
                return Err(Error::InvalidInput(format!(
                    "order {sequence:?} is not a permutation of 1..={n}"
                )));
            }
            position[e] = k;
        }
        Ok(ElementOrder { sequence, position })
    }

    /// The default order `1 < 2 < .. < n`.
    pub fn natural(n: usize) -> Self {
        ElementOrder::new((1..=n).collect()).expect("1..=n is a permutation")
    }

    /// The order `n < n-1 < .. < 1`.
    pub fn reversed(n: usize) -> Self {
        ElementOrder::new((1..=n).rev().collect()).expect("n..=1 is a permutation")
    }

    pub fn len(&self) -> usize {
        self.sequence.len()
    }

    pub fn is_empty(&self) -> bool {
        self.sequence.is_empty()
    }

    /// Position of `element` in the order (0 = smallest).
    pub fn position(&self, element: usize) -> usize {
        self.position[element]
    }

    /// True if `a` comes strictly before `b`.
    pub fn less(&self, a: usize, b: usize) -> bool {
        self.position[a] < self.position[b]
    }

    /// Elements from smallest to largest.
    pub fn ascending(&self) -> &[usize] {
        &self.sequence
    }

    /// Elements strictly smaller than `element`, ascending.
    pub fn smaller_than(&self, element: usize) -> &[usize] {
        &self.sequence[..self.position[element]]
    }

    pub fn smallest(&self) -> usize {
        self.sequence[0]
    }

    /// All `n!` orders of `1..=n`, in a fixed deterministic sequence.
    pub fn all(n: usize) -> Vec<ElementOrder> {
        let mut out = Vec::new();
        let mut seq: Vec<usize> = (1..=n).collect();
        permute(&mut seq, 0, &mut out);
        out
    }
}

fn permute(seq: &mut Vec<usize>, k: usize, out: &mut Vec<ElementOrder>) {
    if k == seq.len() {
        out.push(ElementOrder::new(seq.clone()).expect("permutation"));
        return;
    }
    for i in k..seq.len() {
        seq.swap(k, i);
        permute(seq, k + 1, out);
        seq.swap(k, i);
    }
}
