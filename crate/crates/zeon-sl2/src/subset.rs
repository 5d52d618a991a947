//! Subsets of `{1..n}` as bitmasks, with the Hamming and Johnson metrics.
//!
//! A subset `I ⊆ {1,…,n}` is stored as an `n`-bit mask with bit `i−1` set
//! iff `i ∈ I`. Subsets are the basis labels for everything else in the
//! crate: the zeon algebra basis `e_I`, matrix rows and columns, and the
//! layers `B_ℓ = {I : |I| = ℓ}` of the Boolean lattice.

use std::cmp::Ordering;
use std::fmt;

use crate::error::{Error, Result};

/// Largest supported ground-set size for subset and vector arithmetic.
pub const MAX_GROUND_SET: usize = 20;

/// Largest `n` for which full `2^n × 2^n` dense matrices are materialized.
pub const MAX_DENSE: usize = 12;

/// A subset of `{1,…,n}` encoded as an n-bit mask.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct SubsetIndex {
    n: u8,
    bits: u32,
}

impl SubsetIndex {
    /// Builds a subset from a mask, rejecting bits outside the ground set.
    pub fn new(n: usize, bits: u32) -> Result<Self> {
        check_ground_set(n)?;
        if bits >> n != 0 {
            return Err(Error::InvalidMask { bits, n });
        }
        Ok(SubsetIndex { n: n as u8, bits })
    }

    /// Internal constructor for masks already known to be valid.
    pub(crate) fn raw(n: usize, bits: u32) -> Self {
        debug_assert!(n >= 1 && n <= MAX_GROUND_SET && bits >> n == 0);
        SubsetIndex { n: n as u8, bits }
    }

    /// The empty subset ∅.
    pub fn empty(n: usize) -> Result<Self> {
        Self::new(n, 0)
    }

    /// The full subset {1,…,n}.
    pub fn full(n: usize) -> Result<Self> {
        check_ground_set(n)?;
        Ok(SubsetIndex {
            n: n as u8,
            bits: mask_all(n),
        })
    }

    /// Builds a subset from 1-based element indices.
    pub fn from_elements(n: usize, elements: &[usize]) -> Result<Self> {
        check_ground_set(n)?;
        let mut bits = 0u32;
        for &i in elements {
            if i < 1 || i > n {
                return Err(Error::ElementOutOfRange { element: i, n });
            }
            bits |= 1 << (i - 1);
        }
        Ok(SubsetIndex { n: n as u8, bits })
    }

    pub fn n(&self) -> usize {
        self.n as usize
    }

    pub fn bits(&self) -> u32 {
        self.bits
    }

    /// Cardinality |I|.
    pub fn card(&self) -> usize {
        self.bits.count_ones() as usize
    }

    /// Membership test for a 1-based element.
    pub fn contains(&self, i: usize) -> bool {
        i >= 1 && i <= self.n() && self.bits >> (i - 1) & 1 == 1
    }

    /// Iterates the elements in increasing order (1-based).
    pub fn elements(&self) -> impl Iterator<Item = usize> + '_ {
        let bits = self.bits;
        (1..=self.n()).filter(move |i| bits >> (i - 1) & 1 == 1)
    }

    /// The complement I′ within {1,…,n}.
    pub fn complement(&self) -> Self {
        SubsetIndex {
            n: self.n,
            bits: self.bits ^ mask_all(self.n()),
        }
    }

    pub fn union(&self, other: Self) -> Self {
        debug_assert_eq!(self.n, other.n);
        SubsetIndex {
            n: self.n,
            bits: self.bits | other.bits,
        }
    }

    pub fn intersection(&self, other: Self) -> Self {
        debug_assert_eq!(self.n, other.n);
        SubsetIndex {
            n: self.n,
            bits: self.bits & other.bits,
        }
    }

    /// Set difference I ∖ J.
    pub fn minus(&self, other: Self) -> Self {
        debug_assert_eq!(self.n, other.n);
        SubsetIndex {
            n: self.n,
            bits: self.bits & !other.bits,
        }
    }

    /// Symmetric difference I Δ J.
    pub fn sym_diff(&self, other: Self) -> Self {
        debug_assert_eq!(self.n, other.n);
        SubsetIndex {
            n: self.n,
            bits: self.bits ^ other.bits,
        }
    }

    pub fn is_disjoint(&self, other: Self) -> bool {
        debug_assert_eq!(self.n, other.n);
        self.bits & other.bits == 0
    }

    pub fn is_subset_of(&self, other: Self) -> bool {
        debug_assert_eq!(self.n, other.n);
        self.bits & !other.bits == 0
    }

    /// Adds a 1-based element; the element must be absent.
    pub(crate) fn with_element(&self, i: usize) -> Self {
        debug_assert!(i >= 1 && i <= self.n() && !self.contains(i));
        SubsetIndex {
            n: self.n,
            bits: self.bits | 1 << (i - 1),
        }
    }

    /// Removes a 1-based element; the element must be present.
    pub(crate) fn without_element(&self, i: usize) -> Self {
        debug_assert!(self.contains(i));
        SubsetIndex {
            n: self.n,
            bits: self.bits & !(1 << (i - 1)),
        }
    }
}

fn check_ground_set(n: usize) -> Result<()> {
    if n < 1 || n > MAX_GROUND_SET {
        return Err(Error::SizeOutOfRange {
            what: "ground set",
            n,
            max: MAX_GROUND_SET,
        });
    }
    Ok(())
}

pub(crate) fn mask_all(n: usize) -> u32 {
    if n >= 32 {
        u32::MAX
    } else {
        (1u32 << n) - 1
    }
}

/// Dictionary (lexicographic) comparison on the increasing element tuples.
///
/// The first differing element decides, which for masks is the lowest set
/// bit of the XOR: if it belongs to `a`, then `a` starts with a smaller
/// element and precedes.
pub(crate) fn lex_cmp(a: u32, b: u32) -> Ordering {
    let d = a ^ b;
    if d == 0 {
        Ordering::Equal
    } else if a & (d & d.wrapping_neg()) != 0 {
        Ordering::Less
    } else {
        Ordering::Greater
    }
}

impl Ord for SubsetIndex {
    /// Graded-lex order: by cardinality, then dictionary order within a
    /// layer. Comparing subsets of different ground sets orders by `n`
    /// first; in practice only same-`n` subsets are ever compared.
    fn cmp(&self, other: &Self) -> Ordering {
        self.n
            .cmp(&other.n)
            .then_with(|| self.card().cmp(&other.card()))
            .then_with(|| lex_cmp(self.bits, other.bits))
    }
}

impl PartialOrd for SubsetIndex {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for SubsetIndex {
    /// `∅` for the empty set, else comma-separated elements: `1,3`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.bits == 0 {
            return write!(f, "∅");
        }
        let mut first = true;
        for i in self.elements() {
            if !first {
                write!(f, ",")?;
            }
            write!(f, "{i}")?;
            first = false;
        }
        Ok(())
    }
}

/// Parses the `Display` form back into a subset: `∅` (or empty text) for
/// the empty set, else comma-separated 1-based elements.
pub fn parse_subset(s: &str, n: usize) -> Result<SubsetIndex> {
    let t = s.trim();
    if t.is_empty() || t == "∅" {
        return SubsetIndex::empty(n);
    }
    let mut elements = Vec::new();
    for part in t.split(',') {
        let i: usize = part
            .trim()
            .parse()
            .map_err(|_| Error::ParseSubset(s.to_string()))?;
        elements.push(i);
    }
    SubsetIndex::from_elements(n, &elements)
}

/// The two metrics on the Boolean lattice.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Metric {
    /// |I Δ J|, defined for any pair of subsets.
    Hamming,
    /// |I Δ J| / 2 = |I| − |I ∩ J|, defined within a layer (|I| = |J|).
    Johnson,
}

/// Distance between two subsets of the same ground set.
pub fn distance(metric: Metric, a: SubsetIndex, b: SubsetIndex) -> Result<usize> {
    if a.n() != b.n() {
        return Err(Error::SizeMismatch(a.n(), b.n()));
    }
    let hamming = a.sym_diff(b).card();
    match metric {
        Metric::Hamming => Ok(hamming),
        Metric::Johnson => {
            if a.card() != b.card() {
                return Err(Error::JohnsonCardMismatch(a.card(), b.card()));
            }
            Ok(hamming / 2)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sub(n: usize, elements: &[usize]) -> SubsetIndex {
        SubsetIndex::from_elements(n, elements).unwrap()
    }

    #[test]
    fn construction_and_validation() {
        assert!(SubsetIndex::new(4, 0b1111).is_ok());
        assert!(matches!(
            SubsetIndex::new(4, 0b10000),
            Err(Error::InvalidMask { .. })
        ));
        assert!(SubsetIndex::new(0, 0).is_err());
        assert!(SubsetIndex::new(21, 0).is_err());
        assert!(matches!(
            SubsetIndex::from_elements(4, &[5]),
            Err(Error::ElementOutOfRange { .. })
        ));
        assert_eq!(SubsetIndex::full(4).unwrap().card(), 4);
    }

    #[test]
    fn complement_is_involution() {
        let i = sub(4, &[1, 3]);
        assert_eq!(i.complement(), sub(4, &[2, 4]));
        assert_eq!(i.complement().complement(), i);
        assert_eq!(SubsetIndex::empty(4).unwrap().complement(), SubsetIndex::full(4).unwrap());
    }

    #[test]
    fn metric_values() {
        let i = sub(4, &[1, 3]);
        let j = sub(4, &[1, 2]);
        assert_eq!(distance(Metric::Hamming, i, j).unwrap(), 2);
        assert_eq!(distance(Metric::Johnson, i, j).unwrap(), 1);
        assert_eq!(distance(Metric::Hamming, i, i).unwrap(), 0);
        assert!(matches!(
            distance(Metric::Johnson, i, sub(4, &[2])),
            Err(Error::JohnsonCardMismatch(2, 1))
        ));
        assert!(distance(Metric::Hamming, i, sub(3, &[1])).is_err());
    }

    #[test]
    fn hamming_is_twice_johnson_on_layers() {
        for n in 1..=6 {
            for a in 0..1u32 << n {
                for b in 0..1u32 << n {
                    let i = SubsetIndex::new(n, a).unwrap();
                    let j = SubsetIndex::new(n, b).unwrap();
                    if i.card() == j.card() {
                        let h = distance(Metric::Hamming, i, j).unwrap();
                        let js = distance(Metric::Johnson, i, j).unwrap();
                        assert_eq!(h, 2 * js);
                    }
                }
            }
        }
    }

    #[test]
    fn graded_lex_ordering() {
        // {1,4} < {2,3}: first elements 1 < 2.
        assert!(sub(4, &[1, 4]) < sub(4, &[2, 3]));
        assert!(sub(4, &[2, 3]) < sub(4, &[2, 4]));
        // Cardinality dominates.
        assert!(sub(4, &[4]) < sub(4, &[1, 2]));
        assert!(SubsetIndex::empty(4).unwrap() < sub(4, &[1]));
    }

    #[test]
    fn display_and_parse_round_trip() {
        for bits in 0..1u32 << 5 {
            let i = SubsetIndex::new(5, bits).unwrap();
            assert_eq!(parse_subset(&i.to_string(), 5).unwrap(), i);
        }
        assert_eq!(sub(4, &[1, 3]).to_string(), "1,3");
        assert_eq!(SubsetIndex::empty(4).unwrap().to_string(), "∅");
        assert!(parse_subset("1,x", 4).is_err());
        assert!(parse_subset("0", 4).is_err());
    }
}
