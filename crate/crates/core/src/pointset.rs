//! Fixed-width bit-indexed subsets of a ground set of at most 64 points.
//!
//! Every finite set symbol in the library (opens, closeds, compacts, carrier
//! subsets) is a `PointSet`. The ground size travels with the value so that
//! mixing sets over different spaces fails loudly.

use std::cmp::Ordering;
use std::fmt;

use crate::error::{Error, Result};

pub const MAX_GROUND: usize = 64;

#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct PointSet {
    ground: usize,
    bits: u64,
}

impl PointSet {
    pub fn empty(ground: usize) -> Self {
        assert!(ground <= MAX_GROUND);
        PointSet { ground, bits: 0 }
    }

    pub fn full(ground: usize) -> Self {
        assert!(ground <= MAX_GROUND);
        let bits = if ground == 64 { !0 } else { (1u64 << ground) - 1 };
        PointSet { ground, bits }
    }

    pub fn singleton(ground: usize, i: usize) -> Self {
        assert!(i < ground && ground <= MAX_GROUND);
        PointSet { ground, bits: 1u64 << i }
    }

    pub fn from_bits(ground: usize, bits: u64) -> Self {
        assert!(ground <= MAX_GROUND);
        debug_assert_eq!(bits & !Self::full(ground).bits, 0);
        PointSet { ground, bits: bits & Self::full(ground).bits }
    }

    pub fn from_indices<I: IntoIterator<Item = usize>>(ground: usize, it: I) -> Self {
        let mut s = Self::empty(ground);
        for i in it {
            assert!(i < ground);
            s.bits |= 1u64 << i;
        }
        s
    }

    pub fn ground(&self) -> usize {
        self.ground
    }

    pub fn bits(&self) -> u64 {
        self.bits
    }

    pub fn len(&self) -> usize {
        self.bits.count_ones() as usize
    }

    pub fn is_empty(&self) -> bool {
        self.bits == 0
    }

    pub fn contains(&self, i: usize) -> bool {
        i < self.ground && self.bits & (1u64 << i) != 0
    }

    pub fn insert(&mut self, i: usize) {
        assert!(i < self.ground);
        self.bits |= 1u64 << i;
    }

    pub fn union(&self, other: &Self) -> Self {
        debug_assert_eq!(self.ground, other.ground);
        PointSet { ground: self.ground, bits: self.bits | other.bits }
    }

    pub fn inter(&self, other: &Self) -> Self {
        debug_assert_eq!(self.ground, other.ground);
        PointSet { ground: self.ground, bits: self.bits & other.bits }
    }

    pub fn minus(&self, other: &Self) -> Self {
        debug_assert_eq!(self.ground, other.ground);
        PointSet { ground: self.ground, bits: self.bits & !other.bits }
    }

    pub fn complement(&self) -> Self {
        PointSet { ground: self.ground, bits: Self::full(self.ground).bits & !self.bits }
    }

    pub fn is_subset(&self, other: &Self) -> bool {
        debug_assert_eq!(self.ground, other.ground);
        self.bits & !other.bits == 0
    }

    pub fn intersects(&self, other: &Self) -> bool {
        self.bits & other.bits != 0
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        let ground = self.ground;
        (0..ground).filter(move |i| self.bits & (1u64 << i) != 0)
    }

    /// Checks that `self` lives over a ground set of the given size.
    pub fn check_ground(&self, expected: usize) -> Result<()> {
        if self.ground != expected {
            Err(Error::GroundMismatch { expected, found: self.ground })
        } else {
            Ok(())
        }
    }

    /// Lexicographic order on the sorted member lists: {0,1} < {0,2} < {1}.
    pub fn lex_cmp(&self, other: &Self) -> Ordering {
        debug_assert_eq!(self.ground, other.ground);
        self.iter().cmp(other.iter())
    }

    /// Cardinality first, then lexicographic. Used for deterministic witness
    /// and output ordering.
    pub fn card_lex_cmp(&self, other: &Self) -> Ordering {
        self.len().cmp(&other.len()).then_with(|| self.lex_cmp(other))
    }
}

impl fmt::Debug for PointSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        let mut first = true;
        for i in self.iter() {
            if !first {
                write!(f, ",")?;
            }
            write!(f, "{i}")?;
            first = false;
        }
        write!(f, "}}")
    }
}
