//! Canonical enumeration orders for the `2^n` subsets.
//!
//! Graded-lex is the working order everywhere: layers come out contiguous
//! (∅ first, the full set last), so restricting a matrix to a layer is a
//! contiguous block. Binary order (subset ↔ its mask read as an integer)
//! exists only for the Sylvester–Hadamard permutation equivalence.

use std::str::FromStr;

use crate::error::{Error, Result};
use crate::rat::binomial;
use crate::subset::{SubsetIndex, MAX_GROUND_SET};

/// Row/column order for matrices over the Boolean lattice.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Default)]
pub enum CanonicalOrder {
    /// By cardinality ascending, then dictionary order on element tuples.
    #[default]
    GradedLex,
    /// By the mask value: position of `I` is `bits(I)`.
    Binary,
}

impl CanonicalOrder {
    /// Stable order name used in CLI flags and JSON metadata.
    pub fn label(&self) -> &'static str {
        match self {
            CanonicalOrder::GradedLex => "graded-lex",
            CanonicalOrder::Binary => "binary",
        }
    }

    /// Position of a subset in this order, in `0..2^n`.
    pub fn rank(&self, i: SubsetIndex) -> usize {
        match self {
            CanonicalOrder::Binary => i.bits() as usize,
            CanonicalOrder::GradedLex => {
                layer_offset(i.n(), i.card()) + layer_rank(i)
            }
        }
    }

    /// Inverse of `rank`.
    pub fn unrank(&self, n: usize, r: usize) -> Result<SubsetIndex> {
        let count = checked_count(n)?;
        if r >= count {
            return Err(Error::RankOutOfRange { rank: r, n, count });
        }
        match self {
            CanonicalOrder::Binary => Ok(SubsetIndex::raw(n, r as u32)),
            CanonicalOrder::GradedLex => {
                let mut ell = 0usize;
                let mut rest = r;
                while rest >= binomial(n as u64, ell as u64) as usize {
                    rest -= binomial(n as u64, ell as u64) as usize;
                    ell += 1;
                }
                Ok(layer_unrank(n, ell, rest))
            }
        }
    }

    /// All `2^n` subsets in this order.
    pub fn subsets(&self, n: usize) -> Result<Vec<SubsetIndex>> {
        let count = checked_count(n)?;
        match self {
            CanonicalOrder::Binary => {
                Ok((0..count).map(|b| SubsetIndex::raw(n, b as u32)).collect())
            }
            CanonicalOrder::GradedLex => {
                let mut out = Vec::with_capacity(count);
                for ell in 0..=n {
                    out.extend(layer_subsets(n, ell));
                }
                Ok(out)
            }
        }
    }
}

impl FromStr for CanonicalOrder {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "graded-lex" => Ok(CanonicalOrder::GradedLex),
            "binary" => Ok(CanonicalOrder::Binary),
            other => Err(Error::ParamOutOfRange {
                name: "order",
                value: other.to_string(),
                reason: "expected graded-lex or binary",
            }),
        }
    }
}

fn checked_count(n: usize) -> Result<usize> {
    if n < 1 || n > MAX_GROUND_SET {
        return Err(Error::SizeOutOfRange {
            what: "subset enumeration",
            n,
            max: MAX_GROUND_SET,
        });
    }
    Ok(1usize << n)
}

/// Rank of the first layer-ℓ subset in graded-lex order: Σ_{m<ℓ} C(n,m).
pub fn layer_offset(n: usize, ell: usize) -> usize {
    (0..ell).map(|m| binomial(n as u64, m as u64) as usize).sum()
}

/// Dictionary-order position of `I` within its layer.
///
/// With elements i_1 < … < i_ℓ, the subsets preceding `I` are exactly those
/// agreeing on the first t−1 elements and continuing with some v < i_t;
/// each such v leaves C(n−v, ℓ−t) completions.
pub fn layer_rank(i: SubsetIndex) -> usize {
    let n = i.n();
    let ell = i.card();
    let mut rank = 0usize;
    let mut prev = 0usize;
    for (t, v) in i.elements().enumerate() {
        for w in prev + 1..v {
            rank += binomial((n - w) as u64, (ell - t - 1) as u64) as usize;
        }
        prev = v;
    }
    rank
}

/// Inverse of `layer_rank`: the `r`-th layer-ℓ subset in dictionary order.
pub fn layer_unrank(n: usize, ell: usize, r: usize) -> SubsetIndex {
    debug_assert!(ell <= n && r < binomial(n as u64, ell as u64) as usize);
    let mut bits = 0u32;
    let mut rest = r;
    let mut v = 1usize;
    for t in 0..ell {
        loop {
            let completions = binomial((n - v) as u64, (ell - t - 1) as u64) as usize;
            if rest < completions {
                bits |= 1 << (v - 1);
                v += 1;
                break;
            }
            rest -= completions;
            v += 1;
        }
    }
    SubsetIndex::raw(n, bits)
}

/// The layer `B_ℓ` in dictionary order.
pub fn layer_subsets(n: usize, ell: usize) -> Vec<SubsetIndex> {
    let size = binomial(n as u64, ell as u64) as usize;
    (0..size).map(|r| layer_unrank(n, ell, r)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn graded_lex_pins() {
        let gl = CanonicalOrder::GradedLex;
        assert_eq!(gl.rank(SubsetIndex::empty(4).unwrap()), 0);
        assert_eq!(gl.rank(SubsetIndex::from_elements(4, &[1, 2]).unwrap()), 5);
        assert_eq!(gl.unrank(4, 15).unwrap(), SubsetIndex::full(4).unwrap());
        assert!(gl.unrank(4, 16).is_err());
    }

    #[test]
    fn rank_agrees_with_subset_ordering() {
        let gl = CanonicalOrder::GradedLex;
        for n in 1..=8 {
            let subsets = gl.subsets(n).unwrap();
            let mut sorted = subsets.clone();
            sorted.sort();
            assert_eq!(subsets, sorted);
            for (r, &s) in subsets.iter().enumerate() {
                assert_eq!(gl.rank(s), r);
            }
        }
    }

    #[test]
    fn layers_are_contiguous_blocks() {
        for n in 1..=8 {
            let mut r = 0usize;
            for ell in 0..=n {
                assert_eq!(layer_offset(n, ell), r);
                for s in layer_subsets(n, ell) {
                    assert_eq!(s.card(), ell);
                    assert_eq!(CanonicalOrder::GradedLex.rank(s), r);
                    r += 1;
                }
            }
            assert_eq!(r, 1 << n);
        }
    }

    #[test]
    fn binary_order_is_mask_value() {
        let b = CanonicalOrder::Binary;
        for n in 1..=6 {
            for bits in 0..1u32 << n {
                let s = SubsetIndex::new(n, bits).unwrap();
                assert_eq!(b.rank(s), bits as usize);
                assert_eq!(b.unrank(n, bits as usize).unwrap(), s);
            }
        }
    }

    proptest! {
        #[test]
        fn rank_unrank_round_trip(n in 1usize..=12, seed in any::<u32>()) {
            let r = seed as usize % (1usize << n);
            for order in [CanonicalOrder::GradedLex, CanonicalOrder::Binary] {
                let s = order.unrank(n, r).unwrap();
                prop_assert_eq!(order.rank(s), r);
            }
        }
    }
}
