//! Dense matrices of exact rationals over the Boolean lattice.
//!
//! Rows and columns are indexed by subsets in a fixed `CanonicalOrder`;
//! layer blocks of graded-lex matrices are contiguous. Dense storage is
//! intended for desk scale (`2^n` up to `n = 12`); the size caps live at
//! the operator and CLI layers, not here.

use num::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::order::{layer_offset, CanonicalOrder};
use crate::rat::{binomial, Rat};

/// A dense `nrows × ncols` rational matrix tagged with the ground-set size
/// and the subset order its indices refer to.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct RationalMatrix {
    n: usize,
    order: CanonicalOrder,
    nrows: usize,
    ncols: usize,
    data: Vec<Rat>,
}

impl RationalMatrix {
    pub fn zeros(n: usize, order: CanonicalOrder, nrows: usize, ncols: usize) -> Self {
        RationalMatrix {
            n,
            order,
            nrows,
            ncols,
            data: vec![Rat::zero(); nrows * ncols],
        }
    }

    pub fn identity(n: usize, order: CanonicalOrder, dim: usize) -> Self {
        Self::identity_scaled(n, order, dim, &Rat::one())
    }

    /// `c` times the identity.
    pub fn identity_scaled(n: usize, order: CanonicalOrder, dim: usize, c: &Rat) -> Self {
        let mut m = Self::zeros(n, order, dim, dim);
        for r in 0..dim {
            m.set(r, r, c.clone());
        }
        m
    }

    /// Builds from row vectors; all rows must have equal length.
    pub fn from_rows(n: usize, order: CanonicalOrder, rows: Vec<Vec<Rat>>) -> Self {
        let nrows = rows.len();
        let ncols = rows.first().map_or(0, Vec::len);
        let mut data = Vec::with_capacity(nrows * ncols);
        for row in rows {
            assert_eq!(row.len(), ncols, "ragged rows");
            data.extend(row);
        }
        RationalMatrix {
            n,
            order,
            nrows,
            ncols,
            data,
        }
    }

    /// Builds entry-by-entry from a function of (row, col).
    pub fn from_fn(
        n: usize,
        order: CanonicalOrder,
        nrows: usize,
        ncols: usize,
        mut f: impl FnMut(usize, usize) -> Rat,
    ) -> Self {
        let mut data = Vec::with_capacity(nrows * ncols);
        for r in 0..nrows {
            for c in 0..ncols {
                data.push(f(r, c));
            }
        }
        RationalMatrix {
            n,
            order,
            nrows,
            ncols,
            data,
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn order(&self) -> CanonicalOrder {
        self.order
    }

    pub fn nrows(&self) -> usize {
        self.nrows
    }

    pub fn ncols(&self) -> usize {
        self.ncols
    }

    pub fn get(&self, r: usize, c: usize) -> &Rat {
        &self.data[r * self.ncols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: Rat) {
        self.data[r * self.ncols + c] = v;
    }

    pub fn row(&self, r: usize) -> &[Rat] {
        &self.data[r * self.ncols..(r + 1) * self.ncols]
    }

    pub fn row_sum(&self, r: usize) -> Rat {
        self.row(r).iter().sum()
    }

    /// Matrix product; skips zero entries, which makes products with the
    /// sparse structured operators (T, T*, incidence) cheap.
    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.ncols, other.nrows, "dimension mismatch in product");
        assert_eq!(self.n, other.n, "ground-set mismatch in product");
        let mut out = Self::zeros(self.n, self.order, self.nrows, other.ncols);
        for r in 0..self.nrows {
            for k in 0..self.ncols {
                let a = self.get(r, k);
                if a.is_zero() {
                    continue;
                }
                for c in 0..other.ncols {
                    let b = other.get(k, c);
                    if !b.is_zero() {
                        out.data[r * other.ncols + c] += a * b;
                    }
                }
            }
        }
        out
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!((self.nrows, self.ncols), (other.nrows, other.ncols));
        let mut out = self.clone();
        for (x, y) in out.data.iter_mut().zip(&other.data) {
            *x += y;
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        assert_eq!((self.nrows, self.ncols), (other.nrows, other.ncols));
        let mut out = self.clone();
        for (x, y) in out.data.iter_mut().zip(&other.data) {
            *x -= y;
        }
        out
    }

    pub fn scaled(&self, c: &Rat) -> Self {
        let mut out = self.clone();
        for x in out.data.iter_mut() {
            *x *= c;
        }
        out
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.n, self.order, self.ncols, self.nrows, |r, c| {
            self.get(c, r).clone()
        })
    }

    /// `k`-th power of a square matrix.
    pub fn pow(&self, k: usize) -> Self {
        assert_eq!(self.nrows, self.ncols);
        let mut acc = Self::identity(self.n, self.order, self.nrows);
        for _ in 0..k {
            acc = acc.mul(self);
        }
        acc
    }

    /// Commutator `[self, other] = self·other − other·self`.
    pub fn commutator(&self, other: &Self) -> Self {
        self.mul(other).sub(&other.mul(self))
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Rat::is_zero)
    }

    pub fn is_identity(&self) -> bool {
        self.nrows == self.ncols
            && (0..self.nrows).all(|r| {
                (0..self.ncols).all(|c| {
                    if r == c {
                        self.get(r, c).is_one()
                    } else {
                        self.get(r, c).is_zero()
                    }
                })
            })
    }

    /// Kronecker product. The ground-set tags add, matching the
    /// interpretation of factors as acting on disjoint generator blocks.
    pub fn kron(&self, other: &Self) -> Self {
        assert!(matches!(
            (self.order, other.order),
            (CanonicalOrder::Binary, CanonicalOrder::Binary)
        ));
        let nrows = self.nrows * other.nrows;
        let ncols = self.ncols * other.ncols;
        let mut out = Self::zeros(self.n + other.n, CanonicalOrder::Binary, nrows, ncols);
        for r1 in 0..self.nrows {
            for c1 in 0..self.ncols {
                let a = self.get(r1, c1);
                if a.is_zero() {
                    continue;
                }
                for r2 in 0..other.nrows {
                    for c2 in 0..other.ncols {
                        let b = other.get(r2, c2);
                        if !b.is_zero() {
                            out.set(r1 * other.nrows + r2, c1 * other.ncols + c2, a * b);
                        }
                    }
                }
            }
        }
        out
    }

    /// Rewrites a square matrix through an index map:
    /// `out[r][c] = self[map[r]][map[c]]`. The order tag is kept; use
    /// `with_order_tag` when the relabeling lands in the other order.
    pub fn relabeled(&self, map: &[usize]) -> Self {
        assert_eq!(self.nrows, self.ncols);
        assert_eq!(map.len(), self.nrows);
        Self::from_fn(self.n, self.order, self.nrows, self.ncols, |r, c| {
            self.get(map[r], map[c]).clone()
        })
    }

    /// The same matrix with its order tag replaced (no data movement).
    pub fn with_order_tag(mut self, order: CanonicalOrder) -> Self {
        self.order = order;
        self
    }

    /// Re-expresses a full `2^n × 2^n` matrix in another subset order.
    pub fn reordered(&self, to: CanonicalOrder) -> Result<Self> {
        assert_eq!(self.nrows, self.ncols);
        assert_eq!(self.nrows, 1usize << self.n, "reorder needs a full lattice matrix");
        if to == self.order {
            return Ok(self.clone());
        }
        let from = self.order;
        let mut perm = Vec::with_capacity(self.nrows);
        for r in 0..self.nrows {
            perm.push(from.rank(to.unrank(self.n, r)?));
        }
        Ok(Self::from_fn(self.n, to, self.nrows, self.ncols, |r, c| {
            self.get(perm[r], perm[c]).clone()
        }))
    }

    /// The layer-ℓ diagonal block of a full graded-lex matrix.
    pub fn layer_block(&self, ell: usize) -> Result<Self> {
        if !matches!(self.order, CanonicalOrder::GradedLex) {
            return Err(Error::ParamOutOfRange {
                name: "order",
                value: self.order.label().to_string(),
                reason: "layer blocks are contiguous only in graded-lex order",
            });
        }
        assert_eq!(self.nrows, 1usize << self.n);
        assert_eq!(self.ncols, 1usize << self.n);
        if ell > self.n {
            return Err(Error::ParamOutOfRange {
                name: "ell",
                value: ell.to_string(),
                reason: "layer exceeds ground-set size",
            });
        }
        let off = layer_offset(self.n, ell);
        let dim = binomial(self.n as u64, ell as u64) as usize;
        Ok(Self::from_fn(self.n, self.order, dim, dim, |r, c| {
            self.get(off + r, off + c).clone()
        }))
    }

    /// All entries as `f64`, for the floating-point spot checks only.
    pub fn to_f64(&self) -> Vec<Vec<f64>> {
        use num::ToPrimitive;
        (0..self.nrows)
            .map(|r| {
                self.row(r)
                    .iter()
                    .map(|x| x.to_f64().expect("rational out of f64 range"))
                    .collect()
            })
            .collect()
    }

    /// Largest absolute entry of `self − other` as `f64`.
    pub fn max_abs_diff_f64(&self, other: &[Vec<f64>]) -> f64 {
        use num::ToPrimitive;
        let mut worst = 0f64;
        for r in 0..self.nrows {
            for c in 0..self.ncols {
                let x = self.get(r, c).to_f64().expect("rational out of f64 range");
                let d = (x - other[r][c]).abs();
                if d > worst {
                    worst = d;
                }
            }
        }
        worst
    }

    /// `true` when every entry is a nonnegative integer.
    pub fn is_nonneg_integer(&self) -> bool {
        self.data
            .iter()
            .all(|x| x.denom().is_one() && !x.numer().is_negative())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rat::rat_int;

    fn m(n: usize, rows: &[&[i64]]) -> RationalMatrix {
        RationalMatrix::from_rows(
            n,
            CanonicalOrder::GradedLex,
            rows.iter()
                .map(|r| r.iter().map(|&x| rat_int(x)).collect())
                .collect(),
        )
    }

    #[test]
    fn product_and_powers() {
        let a = m(1, &[&[1, 1], &[0, 1]]);
        let b = m(1, &[&[1, 0], &[1, 1]]);
        assert_eq!(a.mul(&b), m(1, &[&[2, 1], &[1, 1]]));
        assert_eq!(a.pow(0), RationalMatrix::identity(1, CanonicalOrder::GradedLex, 2));
        assert_eq!(a.pow(3), m(1, &[&[1, 3], &[0, 1]]));
    }

    #[test]
    fn transpose_and_commutator() {
        let a = m(1, &[&[0, 0], &[1, 0]]);
        assert_eq!(a.transpose(), m(1, &[&[0, 1], &[0, 0]]));
        let comm = a.transpose().commutator(&a);
        assert_eq!(comm, m(1, &[&[1, 0], &[0, -1]]));
    }

    #[test]
    fn kron_shapes() {
        let h1 = RationalMatrix::from_rows(
            1,
            CanonicalOrder::Binary,
            vec![
                vec![rat_int(1), rat_int(1)],
                vec![rat_int(1), rat_int(-1)],
            ],
        );
        let h2 = h1.kron(&h1);
        assert_eq!(h2.nrows(), 4);
        assert_eq!(h2.n(), 2);
        assert_eq!(*h2.get(3, 3), rat_int(1));
        assert_eq!(*h2.get(1, 1), rat_int(-1));
    }

    #[test]
    fn layer_block_of_identity() {
        let id = RationalMatrix::identity(3, CanonicalOrder::GradedLex, 8);
        let block = id.layer_block(1).unwrap();
        assert!(block.is_identity());
        assert_eq!(block.nrows(), 3);
        assert!(id.layer_block(4).is_err());
        let bin = RationalMatrix::identity(3, CanonicalOrder::Binary, 8);
        assert!(bin.layer_block(1).is_err());
    }

    #[test]
    fn reorder_round_trip() {
        let a = RationalMatrix::from_fn(3, CanonicalOrder::GradedLex, 8, 8, |r, c| {
            rat_int((8 * r + c) as i64)
        });
        let b = a.reordered(CanonicalOrder::Binary).unwrap();
        let back = b.reordered(CanonicalOrder::GradedLex).unwrap();
        assert_eq!(a, back);
        // {3} sits at graded-lex rank 3 and at binary index 0b100 = 4.
        assert_eq!(b.get(4, 4), a.get(3, 3));
    }
}
