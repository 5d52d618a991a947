//! Sparse vectors in the zeon algebra.
//!
//! The zeon algebra on `n` generators is commutative with `e_i² = 0`; its
//! basis is `{e_I : I ⊆ {1,…,n}}` with `e_I·e_J = e_{I∪J}` when `I` and `J`
//! are disjoint and `0` otherwise. As a vector space it is the direct sum
//! of the layers `V_ℓ` spanned by the `e_I` with `|I| = ℓ`, and the `e_I`
//! are an orthonormal system for the standard inner product.
//!
//! Vectors are kept in canonical sparse form: zero coefficients are never
//! stored, so structural equality is algebraic equality.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num::Zero;

use crate::error::{Error, Result};
use crate::rat::{format_rat, parse_rat, Rat};
use crate::subset::{parse_subset, SubsetIndex};

/// A finitely supported map `SubsetIndex → Rat`; an element of `V = ⊕ V_ℓ`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ZeonVector {
    n: usize,
    terms: BTreeMap<SubsetIndex, Rat>,
}

impl ZeonVector {
    /// The zero vector over `n` generators.
    pub fn zero(n: usize) -> Self {
        ZeonVector {
            n,
            terms: BTreeMap::new(),
        }
    }

    /// The multiplicative unit `e_∅`.
    pub fn one(n: usize) -> Result<Self> {
        Ok(Self::basis(SubsetIndex::empty(n)?))
    }

    /// The basis vector `e_I`.
    pub fn basis(i: SubsetIndex) -> Self {
        let mut terms = BTreeMap::new();
        terms.insert(i, Rat::from_integer(1.into()));
        ZeonVector { n: i.n(), terms }
    }

    /// The generator `e_i` (1-based).
    pub fn generator(n: usize, i: usize) -> Result<Self> {
        Ok(Self::basis(SubsetIndex::from_elements(n, &[i])?))
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Number of stored (nonzero) terms.
    pub fn support_size(&self) -> usize {
        self.terms.len()
    }

    /// Terms in graded-lex order of their index.
    pub fn terms(&self) -> impl Iterator<Item = (SubsetIndex, &Rat)> + '_ {
        self.terms.iter().map(|(&i, c)| (i, c))
    }

    /// Coefficient of `e_I` (zero when absent).
    pub fn coeff(&self, i: SubsetIndex) -> Rat {
        self.terms.get(&i).cloned().unwrap_or_else(Rat::zero)
    }

    /// Adds `c·e_I`, keeping canonical sparse form.
    pub fn add_term(&mut self, i: SubsetIndex, c: Rat) {
        debug_assert_eq!(i.n(), self.n);
        if c.is_zero() {
            return;
        }
        match self.terms.entry(i) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    /// The scalar multiple `c·v`.
    pub fn scaled(&self, c: &Rat) -> Self {
        if c.is_zero() {
            return ZeonVector::zero(self.n);
        }
        ZeonVector {
            n: self.n,
            terms: self.terms.iter().map(|(&i, x)| (i, x * c)).collect(),
        }
    }

    /// Zeon product: bilinear extension of `e_I·e_J = [I∩J=∅]·e_{I∪J}`.
    pub fn mul(&self, other: &Self) -> Result<Self> {
        if self.n != other.n {
            return Err(Error::SizeMismatch(self.n, other.n));
        }
        let mut out = ZeonVector::zero(self.n);
        for (i, a) in self.terms() {
            for (j, b) in other.terms() {
                if i.is_disjoint(j) {
                    out.add_term(i.union(j), a * b);
                }
            }
        }
        Ok(out)
    }

    /// Standard inner product `Σ_I v_I w_I` (coefficients are real).
    pub fn inner(&self, other: &Self) -> Result<Rat> {
        if self.n != other.n {
            return Err(Error::SizeMismatch(self.n, other.n));
        }
        let mut acc = Rat::zero();
        // Walk the smaller support.
        let (small, large) = if self.terms.len() <= other.terms.len() {
            (self, other)
        } else {
            (other, self)
        };
        for (i, a) in small.terms() {
            if let Some(b) = large.terms.get(&i) {
                acc += a * b;
            }
        }
        Ok(acc)
    }

    /// Squared norm `⟨v, v⟩`.
    pub fn norm2(&self) -> Rat {
        self.terms.values().map(|c| c * c).sum()
    }

    /// The involution `φ′ = Σ c_I e_{I′}` transporting coefficients to
    /// complementary subsets.
    pub fn complement_involution(&self) -> Self {
        ZeonVector {
            n: self.n,
            terms: self
                .terms
                .iter()
                .map(|(&i, c)| (i.complement(), c.clone()))
                .collect(),
        }
    }

    /// The layer `|I|` shared by all terms, if the vector is homogeneous.
    pub fn homogeneous_layer(&self) -> Option<usize> {
        let mut layers = self.terms.keys().map(|i| i.card());
        let first = layers.next()?;
        layers.all(|l| l == first).then_some(first)
    }

    /// Multi-line text form, one term per line: `1,3 : p/q` (`∅` for the
    /// empty index list), in graded-lex order.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for (i, c) in self.terms() {
            out.push_str(&format!("{} : {}\n", i, format_rat(c)));
        }
        out
    }

    /// Parses the `to_text` form; blank lines are skipped, duplicate
    /// indices accumulate.
    pub fn parse_text(s: &str, n: usize) -> Result<Self> {
        let mut out = ZeonVector::zero(n);
        for line in s.lines() {
            let line = line.trim();
            if line.is_empty() {
                continue;
            }
            let (idx, coeff) = line
                .split_once(':')
                .ok_or_else(|| Error::ParseVector(line.to_string()))?;
            out.add_term(parse_subset(idx, n)?, parse_rat(coeff)?);
        }
        Ok(out)
    }
}

impl fmt::Display for ZeonVector {
    /// One-line form `c1·e{I1} + c2·e{I2} + …`, `0` when empty.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.terms() {
            if !first {
                write!(f, " + ")?;
            }
            write!(f, "{}·e{{{}}}", format_rat(c), i)?;
            first = false;
        }
        Ok(())
    }
}

impl Add for &ZeonVector {
    type Output = ZeonVector;

    /// Panics on ground-set mismatch; use only when `n` is already aligned.
    fn add(self, other: &ZeonVector) -> ZeonVector {
        assert_eq!(self.n, other.n, "ground-set mismatch in vector sum");
        let mut out = self.clone();
        for (i, c) in other.terms() {
            out.add_term(i, c.clone());
        }
        out
    }
}

impl Sub for &ZeonVector {
    type Output = ZeonVector;

    fn sub(self, other: &ZeonVector) -> ZeonVector {
        assert_eq!(self.n, other.n, "ground-set mismatch in vector difference");
        let mut out = self.clone();
        for (i, c) in other.terms() {
            out.add_term(i, -c.clone());
        }
        out
    }
}

impl Neg for &ZeonVector {
    type Output = ZeonVector;

    fn neg(self) -> ZeonVector {
        self.scaled(&-Rat::from_integer(1.into()))
    }
}

impl Mul<&Rat> for &ZeonVector {
    type Output = ZeonVector;

    fn mul(self, c: &Rat) -> ZeonVector {
        self.scaled(c)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rat::{rat, rat_int};
    use proptest::prelude::*;

    fn e(n: usize, elements: &[usize]) -> ZeonVector {
        ZeonVector::basis(SubsetIndex::from_elements(n, elements).unwrap())
    }

    #[test]
    fn generators_square_to_zero() {
        let e1 = ZeonVector::generator(3, 1).unwrap();
        assert!(e1.mul(&e1).unwrap().is_zero());
        assert_eq!(e1.mul(&ZeonVector::generator(3, 2).unwrap()).unwrap(), e(3, &[1, 2]));
    }

    #[test]
    fn cross_terms_double() {
        let v = &e(2, &[1]) + &e(2, &[2]);
        let sq = v.mul(&v).unwrap();
        assert_eq!(sq, e(2, &[1, 2]).scaled(&rat_int(2)));
    }

    #[test]
    fn inner_product_values() {
        assert_eq!(e(3, &[1, 2]).inner(&e(3, &[1, 2])).unwrap(), rat_int(1));
        assert_eq!(e(3, &[1]).inner(&e(3, &[2])).unwrap(), rat_int(0));
        let v = &e(3, &[1]) + &e(3, &[2]).scaled(&rat_int(2));
        let w = e(3, &[2]).scaled(&rat_int(3));
        assert_eq!(v.inner(&w).unwrap(), rat_int(6));
        assert!(v.inner(&ZeonVector::zero(4)).is_err());
    }

    #[test]
    fn complement_involution_examples() {
        assert_eq!(e(2, &[1]).complement_involution(), e(2, &[2]));
        assert_eq!(
            ZeonVector::one(2).unwrap().complement_involution(),
            e(2, &[1, 2])
        );
        let v = &e(2, &[1]).scaled(&rat(1, 2)) - &e(2, &[1, 2]);
        assert_eq!(v.complement_involution().complement_involution(), v);
    }

    #[test]
    fn canonical_form_drops_zeros() {
        let mut v = ZeonVector::zero(3);
        v.add_term(SubsetIndex::from_elements(3, &[1]).unwrap(), rat(1, 2));
        v.add_term(SubsetIndex::from_elements(3, &[1]).unwrap(), rat(-1, 2));
        assert!(v.is_zero());
        assert_eq!(v, ZeonVector::zero(3));
    }

    #[test]
    fn text_round_trip() {
        let v = &(&e(3, &[1, 3]).scaled(&rat(-2, 3)) + &e(3, &[2])) + &ZeonVector::one(3).unwrap();
        let text = v.to_text();
        assert_eq!(text, "∅ : 1\n2 : 1\n1,3 : -2/3\n");
        assert_eq!(ZeonVector::parse_text(&text, 3).unwrap(), v);
        assert!(ZeonVector::parse_text("nonsense", 3).is_err());
    }

    /// Random sparse vectors with small integer coefficients.
    fn arb_vector(n: usize) -> impl Strategy<Value = ZeonVector> {
        proptest::collection::vec((0u32..1 << n, -4i64..=4), 0..6).prop_map(move |terms| {
            let mut v = ZeonVector::zero(n);
            for (bits, c) in terms {
                v.add_term(SubsetIndex::new(n, bits).unwrap(), rat_int(c));
            }
            v
        })
    }

    proptest! {
        #[test]
        fn mul_commutative_associative(
            (a, b, c) in (1usize..=5).prop_flat_map(|n| (arb_vector(n), arb_vector(n), arb_vector(n)))
        ) {
            prop_assert_eq!(a.mul(&b).unwrap(), b.mul(&a).unwrap());
            let ab_c = a.mul(&b).unwrap().mul(&c).unwrap();
            let a_bc = a.mul(&b.mul(&c).unwrap()).unwrap();
            prop_assert_eq!(ab_c, a_bc);
        }

        #[test]
        fn involution_is_isometry(
            (a, b) in (1usize..=5).prop_flat_map(|n| (arb_vector(n), arb_vector(n)))
        ) {
            let a2 = a.complement_involution();
            let b2 = b.complement_involution();
            prop_assert_eq!(a2.inner(&b2).unwrap(), a.inner(&b).unwrap());
            prop_assert_eq!(a2.complement_involution(), a);
        }
    }
}
