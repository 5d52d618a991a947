//! The sl(2) operator algebra on the zeon algebra.
//!
//! The local raising and lowering operators act per generator:
//! `ê_i` multiplies by `e_i` and `δ̂_i` erases `e_i`, so that
//! `ê_i δ̂_i + δ̂_i ê_i = I`. Globally, `T = Σ ê_i` raises one layer,
//! `T* = Σ δ̂_i` lowers one, and `U = [T*, T] = nI − 2ℒ` is diagonal,
//! where `ℒ e_I = |I| e_I` is the layer operator. The triple (T, T*, U)
//! satisfies `[T, U] = 2T` and `[U, T*] = 2T*`.
//!
//! The divided powers `T^k/k!` are 0/1 incidence matrices for inclusion
//! with gap `k`, which is what makes the closed-form group elements
//! `g(s,u,t) = exp(sT)·u^ℒ·exp(tT*)` evaluable entry-by-entry:
//! `g_{IJ} = s^{|I∖J|} (u+st)^{|I∩J|} t^{|J∖I|}` with `0^0 = 1`.
//!
//! Matrices use the column-action convention: column `J` of `op_matrix`
//! holds the coordinates of `op(e_J)`, so `M·x` applies the operator.

use num::{One, Zero};

use crate::error::{Error, Result};
use crate::matrix::RationalMatrix;
use crate::order::CanonicalOrder;
use crate::rat::{rat_int, rat_pow, Rat};
use crate::subset::{SubsetIndex, MAX_DENSE};
use crate::zeon::ZeonVector;

/// The operators exposed by the crate.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum OperatorKind {
    /// `ê_i`: multiplication by the generator `e_i` (1-based `i`).
    EHat(usize),
    /// `δ̂_i`: erasure of `e_i`; the adjoint of `ê_i`.
    DeltaHat(usize),
    /// `ĥ_i = I − 2 ê_i δ̂_i`: sign flip on subsets containing `i`.
    HHat(usize),
    /// Global raising operator `T = Σ_i ê_i`.
    T,
    /// Global lowering operator `T* = Σ_i δ̂_i`.
    TStar,
    /// `U = [T*, T] = nI − 2ℒ`; diagonal value `n − 2ℓ` on layer ℓ.
    U,
    /// Layer operator `ℒ e_I = |I| e_I`.
    Layer,
    /// Divided power `T^k/k!`: the 0/1 incidence operator sending `e_J`
    /// to the sum of `e_I` over `I ⊃ J` with `|I∖J| = k`.
    DividedPowerT(usize),
    /// Divided power `(T*)^k/k!`: sends `e_I` to the sum over k-subsets
    /// removed.
    DividedPowerTStar(usize),
    /// `T_j = T^j (T*)^j / (j! j!)`, diagonal on the Z-basis.
    Tj(usize),
    /// Casimir operator `C = 4·T·T* + (U + I)²`.
    Casimir,
}

impl OperatorKind {
    /// Checks the operator's parameters against a ground-set size.
    pub fn validate(&self, n: usize) -> Result<()> {
        match *self {
            OperatorKind::EHat(i) | OperatorKind::DeltaHat(i) | OperatorKind::HHat(i) => {
                if i < 1 || i > n {
                    return Err(Error::ElementOutOfRange { element: i, n });
                }
            }
            OperatorKind::DividedPowerT(k) | OperatorKind::DividedPowerTStar(k) => {
                if k > n {
                    return Err(Error::ParamOutOfRange {
                        name: "k",
                        value: k.to_string(),
                        reason: "divided power exceeds ground-set size",
                    });
                }
            }
            OperatorKind::Tj(j) => {
                if j > n {
                    return Err(Error::ParamOutOfRange {
                        name: "j",
                        value: j.to_string(),
                        reason: "Tj index exceeds ground-set size",
                    });
                }
            }
            _ => {}
        }
        Ok(())
    }

    /// Applies the operator to a vector, exactly.
    pub fn apply(&self, v: &ZeonVector) -> Result<ZeonVector> {
        let n = v.n();
        self.validate(n)?;
        let mut out = ZeonVector::zero(n);
        match *self {
            OperatorKind::EHat(i) => {
                for (idx, c) in v.terms() {
                    if !idx.contains(i) {
                        out.add_term(idx.with_element(i), c.clone());
                    }
                }
            }
            OperatorKind::DeltaHat(i) => {
                for (idx, c) in v.terms() {
                    if idx.contains(i) {
                        out.add_term(idx.without_element(i), c.clone());
                    }
                }
            }
            OperatorKind::HHat(i) => {
                for (idx, c) in v.terms() {
                    let c = if idx.contains(i) { -c.clone() } else { c.clone() };
                    out.add_term(idx, c);
                }
            }
            OperatorKind::T => {
                for (idx, c) in v.terms() {
                    for i in idx.complement().elements() {
                        out.add_term(idx.with_element(i), c.clone());
                    }
                }
            }
            OperatorKind::TStar => {
                for (idx, c) in v.terms() {
                    for i in idx.elements() {
                        out.add_term(idx.without_element(i), c.clone());
                    }
                }
            }
            OperatorKind::U => {
                for (idx, c) in v.terms() {
                    let factor = Rat::from_integer((n as i64 - 2 * idx.card() as i64).into());
                    out.add_term(idx, c * &factor);
                }
            }
            OperatorKind::Layer => {
                for (idx, c) in v.terms() {
                    out.add_term(idx, c * &Rat::from_integer((idx.card() as i64).into()));
                }
            }
            OperatorKind::DividedPowerT(k) => {
                for (idx, c) in v.terms() {
                    for added in k_subsets(idx.complement().bits(), k) {
                        out.add_term(SubsetIndex::raw(n, idx.bits() | added), c.clone());
                    }
                }
            }
            OperatorKind::DividedPowerTStar(k) => {
                for (idx, c) in v.terms() {
                    for removed in k_subsets(idx.bits(), k) {
                        out.add_term(SubsetIndex::raw(n, idx.bits() & !removed), c.clone());
                    }
                }
            }
            OperatorKind::Tj(j) => {
                let lowered = OperatorKind::DividedPowerTStar(j).apply(v)?;
                out = OperatorKind::DividedPowerT(j).apply(&lowered)?;
            }
            OperatorKind::Casimir => {
                let tt = OperatorKind::T.apply(&OperatorKind::TStar.apply(v)?)?;
                let uv = OperatorKind::U.apply(v)?;
                let uuv = OperatorKind::U.apply(&uv)?;
                out = &(&tt.scaled(&Rat::from_integer(4.into())) + &uuv)
                    + &(&uv.scaled(&Rat::from_integer(2.into())) + v);
            }
        }
        Ok(out)
    }
}

/// All k-element submasks of `mask`, ascending in mask value.
fn k_subsets(mask: u32, k: usize) -> Vec<u32> {
    let positions: Vec<u32> = (0..32).filter(|b| mask >> b & 1 == 1).collect();
    if k > positions.len() {
        return Vec::new();
    }
    let mut out = Vec::new();
    let mut chosen = vec![0usize; k];
    fn rec(positions: &[u32], k: usize, start: usize, depth: usize, chosen: &mut [usize], out: &mut Vec<u32>) {
        if depth == k {
            out.push(chosen[..k].iter().map(|&p| 1u32 << positions[p]).sum());
            return;
        }
        for p in start..=positions.len() - (k - depth) {
            chosen[depth] = p;
            rec(positions, k, p + 1, depth + 1, chosen, out);
        }
    }
    rec(&positions, k, 0, 0, &mut chosen, &mut out);
    out
}

fn check_dense(n: usize) -> Result<()> {
    if n < 1 || n > MAX_DENSE {
        return Err(Error::SizeOutOfRange {
            what: "dense matrix",
            n,
            max: MAX_DENSE,
        });
    }
    Ok(())
}

/// Materializes an operator as a `2^n × 2^n` matrix in the given order.
pub fn op_matrix(op: OperatorKind, n: usize, order: CanonicalOrder) -> Result<RationalMatrix> {
    check_dense(n)?;
    op.validate(n)?;
    let dim = 1usize << n;
    let mut m = RationalMatrix::zeros(n, order, dim, dim);
    for col in 0..dim {
        let v = ZeonVector::basis(order.unrank(n, col)?);
        for (idx, c) in op.apply(&v)?.terms() {
            m.set(order.rank(idx), col, c.clone());
        }
    }
    Ok(m)
}

/// `exp(s·M)` for a nilpotent matrix, as the finite sum of scaled powers.
///
/// Terms are accumulated as `(s^k/k!)·M^k` until the power vanishes or
/// `max_k` is passed; the caller supplies the nilpotency bound.
pub fn exp_nilpotent(m: &RationalMatrix, s: &Rat, max_k: usize) -> RationalMatrix {
    let dim = m.nrows();
    let mut acc = RationalMatrix::identity(m.n(), m.order(), dim);
    let mut term = RationalMatrix::identity(m.n(), m.order(), dim);
    for k in 1..=max_k {
        term = term.mul(m).scaled(&(s / rat_int(k as i64)));
        if term.is_zero() {
            break;
        }
        acc = acc.add(&term);
    }
    acc
}

/// Diagonal matrix `u^ℒ` with entry `u^|I|`; exact for any rational u
/// (`0^0 = 1` puts a single 1 at the ∅ position when u = 0).
pub fn layer_power(u: &Rat, n: usize, order: CanonicalOrder) -> Result<RationalMatrix> {
    check_dense(n)?;
    let dim = 1usize << n;
    let mut m = RationalMatrix::zeros(n, order, dim, dim);
    for r in 0..dim {
        let card = order.unrank(n, r)?.card();
        m.set(r, r, rat_pow(u, card as i64));
    }
    Ok(m)
}

/// Diagonal matrix `w^U` with entry `w^{n−2|I|}`; needs `w ≠ 0` because
/// the exponent is negative above the middle layer.
fn u_power(w: &Rat, n: usize, order: CanonicalOrder) -> Result<RationalMatrix> {
    if w.is_zero() {
        return Err(Error::FactoredFormUndefined(
            "w^U needs w ≠ 0".to_string(),
        ));
    }
    let dim = 1usize << n;
    let mut m = RationalMatrix::zeros(n, order, dim, dim);
    for r in 0..dim {
        let card = order.unrank(n, r)?.card() as i64;
        m.set(r, r, rat_pow(w, n as i64 - 2 * card));
    }
    Ok(m)
}

/// Parameters of the group element `g(s,u,t) = exp(sT)·u^ℒ·exp(tT*)`.
///
/// `u = 0` is accepted by the entry formula (the element degenerates to a
/// rank-structured projection-like matrix) but rejected by composition,
/// where invertibility of `u^ℒ` is needed.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct GroupParams {
    pub s: Rat,
    pub u: Rat,
    pub t: Rat,
}

impl GroupParams {
    pub fn new(s: Rat, u: Rat, t: Rat) -> Self {
        GroupParams { s, u, t }
    }

    /// The identity element g(0,1,0).
    pub fn identity() -> Self {
        GroupParams {
            s: Rat::zero(),
            u: Rat::one(),
            t: Rat::zero(),
        }
    }
}

/// Closed-form group element: entries `s^{|I∖J|} (u+st)^{|I∩J|} t^{|J∖I|}`.
pub fn group_element(p: &GroupParams, n: usize, order: CanonicalOrder) -> Result<RationalMatrix> {
    check_dense(n)?;
    let dim = 1usize << n;
    let subsets = order.subsets(n)?;
    let middle = &p.u + &p.s * &p.t;
    Ok(RationalMatrix::from_fn(n, order, dim, dim, |r, c| {
        let i = subsets[r];
        let j = subsets[c];
        rat_pow(&p.s, i.minus(j).card() as i64)
            * rat_pow(&middle, i.intersection(j).card() as i64)
            * rat_pow(&p.t, j.minus(i).card() as i64)
    }))
}

/// The same group element computed the slow way, as the product
/// `exp(sT)·u^ℒ·exp(tT*)` of independently materialized factors.
pub fn group_element_product(
    p: &GroupParams,
    n: usize,
    order: CanonicalOrder,
) -> Result<RationalMatrix> {
    check_dense(n)?;
    let raise = exp_nilpotent(&op_matrix(OperatorKind::T, n, order)?, &p.s, n);
    let diag = layer_power(&p.u, n, order)?;
    let lower = exp_nilpotent(&op_matrix(OperatorKind::TStar, n, order)?, &p.t, n);
    Ok(raise.mul(&diag).mul(&lower))
}

/// Closed-form entries of `exp(tT*)·exp(aT)`:
/// `a^{|I∖J|} (1+at)^{|(I∪J)′|} t^{|J∖I|}`.
pub fn leibniz_entries(
    t: &Rat,
    a: &Rat,
    n: usize,
    order: CanonicalOrder,
) -> Result<RationalMatrix> {
    check_dense(n)?;
    let dim = 1usize << n;
    let subsets = order.subsets(n)?;
    let middle = Rat::one() + a * t;
    Ok(RationalMatrix::from_fn(n, order, dim, dim, |r, c| {
        let i = subsets[r];
        let j = subsets[c];
        rat_pow(a, i.minus(j).card() as i64)
            * rat_pow(&middle, i.union(j).complement().card() as i64)
            * rat_pow(t, j.minus(i).card() as i64)
    }))
}

/// `exp(tT*)·exp(aT)` as an actual product of exponential factors.
pub fn leibniz_product(t: &Rat, a: &Rat, n: usize, order: CanonicalOrder) -> Result<RationalMatrix> {
    check_dense(n)?;
    let lower = exp_nilpotent(&op_matrix(OperatorKind::TStar, n, order)?, t, n);
    let raise = exp_nilpotent(&op_matrix(OperatorKind::T, n, order)?, a, n);
    Ok(lower.mul(&raise))
}

/// The reordered factorization
/// `exp(aT/(1+at)) · (1+at)^U · exp(tT*/(1+at))`; defined when 1+at ≠ 0.
pub fn leibniz_factored(t: &Rat, a: &Rat, n: usize, order: CanonicalOrder) -> Result<RationalMatrix> {
    check_dense(n)?;
    let w = Rat::one() + a * t;
    if w.is_zero() {
        return Err(Error::FactoredFormUndefined("1 + a·t = 0".to_string()));
    }
    let raise = exp_nilpotent(&op_matrix(OperatorKind::T, n, order)?, &(a / &w), n);
    let diag = u_power(&w, n, order)?;
    let lower = exp_nilpotent(&op_matrix(OperatorKind::TStar, n, order)?, &(t / &w), n);
    Ok(raise.mul(&diag).mul(&lower))
}

/// Group law: with p1 = (a,c,b) and p2 = (s,u,t),
/// `g(p1)·g(p2) = (1+sb)^n · g(a + sc/(1+sb), uc/(1+sb)², t + ub/(1+sb))`.
///
/// Returns the scalar and the composed parameters. Needs `1+sb ≠ 0` and
/// nonzero u-components (outside the group otherwise).
pub fn group_compose(p1: &GroupParams, p2: &GroupParams, n: usize) -> Result<(Rat, GroupParams)> {
    if p1.u.is_zero() || p2.u.is_zero() {
        return Err(Error::ParamOutOfRange {
            name: "u",
            value: "0".to_string(),
            reason: "composition needs invertible u^ℒ factors",
        });
    }
    let (a, c, b) = (&p1.s, &p1.u, &p1.t);
    let (s, u, t) = (&p2.s, &p2.u, &p2.t);
    let d = Rat::one() + s * b;
    if d.is_zero() {
        return Err(Error::SingularComposition(
            "1 + s·b = 0 for these parameters".to_string(),
        ));
    }
    let scalar = rat_pow(&d, n as i64);
    let composed = GroupParams::new(a + s * c / &d, u * c / (&d * &d), t + u * b / &d);
    Ok((scalar, composed))
}

/// Rational form of the exponentiation theorem: `g(v, 1−v², v)`, whose
/// entries collapse to `v^{|IΔJ|}`. This is `(1−v²)^{n/2}·exp(θ(T+T*))`
/// under `v = tanh θ`.
pub fn exp_x_scaled(v: &Rat, n: usize, order: CanonicalOrder) -> Result<RationalMatrix> {
    let u = Rat::one() - v * v;
    group_element(&GroupParams::new(v.clone(), u, v.clone()), n, order)
}

/// The Kronecker realization of the generators and the subset relabeling
/// that aligns it with the hat representation.
pub struct KroneckerRealization {
    /// `factors[i-1]` is `e_i ↦ I⊗…⊗R⊗…⊗I` (R in slot i, left-associated),
    /// a `2^n × 2^n` matrix in tensor index order.
    pub factors: Vec<RationalMatrix>,
    /// `perm[r]` is the tensor index of the graded-lex rank-r subset, under
    /// the alignment element i ↔ tensor slot i (slot 1 most significant):
    /// `tensor_index(I) = Σ_{i∈I} 2^{n−i}`. Relabeling a factor by this map
    /// reproduces `op_matrix(EHat(i), n, GradedLex)`.
    pub perm: Vec<usize>,
}

/// Builds the Kronecker-product realization `e_i ↦ I⊗…⊗R⊗…⊗I` with
/// `R = [[0,0],[1,0]]`.
pub fn kronecker_realization(n: usize) -> Result<KroneckerRealization> {
    check_dense(n)?;
    let r2 = RationalMatrix::from_rows(
        1,
        CanonicalOrder::Binary,
        vec![
            vec![Rat::zero(), Rat::zero()],
            vec![Rat::one(), Rat::zero()],
        ],
    );
    assert!(r2.mul(&r2).is_zero(), "R must square to zero");
    let id2 = RationalMatrix::identity(1, CanonicalOrder::Binary, 2);
    let mut factors = Vec::with_capacity(n);
    for slot in 1..=n {
        let mut acc: Option<RationalMatrix> = None;
        for pos in 1..=n {
            let f = if pos == slot { &r2 } else { &id2 };
            acc = Some(match acc {
                None => f.clone(),
                Some(a) => a.kron(f),
            });
        }
        factors.push(acc.unwrap());
    }
    let perm = (0..1usize << n)
        .map(|r| {
            let subset = CanonicalOrder::GradedLex.unrank(n, r).expect("rank in range");
            subset.elements().map(|i| 1usize << (n - i)).sum()
        })
        .collect();
    Ok(KroneckerRealization { factors, perm })
}

/// The Casimir matrix `C = 4·M(T)·M(T*) + (M(U)+I)²`; it commutes with
/// T, T*, and U, and acts as `(N+1)²` on every chain with principal
/// number N.
pub fn casimir_matrix(n: usize, order: CanonicalOrder) -> Result<RationalMatrix> {
    check_dense(n)?;
    let t = op_matrix(OperatorKind::T, n, order)?;
    let tstar = op_matrix(OperatorKind::TStar, n, order)?;
    let u_plus = op_matrix(OperatorKind::U, n, order)?
        .add(&RationalMatrix::identity(n, order, 1 << n));
    Ok(t.mul(&tstar)
        .scaled(&Rat::from_integer(4.into()))
        .add(&u_plus.mul(&u_plus)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rat::{factorial_rat, rat};

    fn e(n: usize, elements: &[usize]) -> ZeonVector {
        ZeonVector::basis(SubsetIndex::from_elements(n, elements).unwrap())
    }

    #[test]
    fn hat_actions() {
        let d1 = OperatorKind::DeltaHat(1).apply(&e(3, &[1, 3])).unwrap();
        assert_eq!(d1, e(3, &[3]));
        let d2 = OperatorKind::DeltaHat(2).apply(&e(3, &[1, 3])).unwrap();
        assert!(d2.is_zero());
        let killed = OperatorKind::EHat(1).apply(&e(3, &[1, 3])).unwrap();
        assert!(killed.is_zero());
        let raised = OperatorKind::EHat(2).apply(&e(3, &[1, 3])).unwrap();
        assert_eq!(raised, e(3, &[1, 2, 3]));
        let h2 = OperatorKind::HHat(2).apply(&e(3, &[2])).unwrap();
        assert_eq!(h2, e(3, &[2]).scaled(&rat_int(-1)));
        assert!(OperatorKind::EHat(4).apply(&e(3, &[])).is_err());
    }

    #[test]
    fn global_actions() {
        let raised = OperatorKind::T.apply(&ZeonVector::one(3).unwrap()).unwrap();
        assert_eq!(raised, &(&e(3, &[1]) + &e(3, &[2])) + &e(3, &[3]));
        let mid = OperatorKind::U.apply(&e(4, &[1, 2])).unwrap();
        assert!(mid.is_zero());
        let layered = OperatorKind::Layer.apply(&e(4, &[1, 2])).unwrap();
        assert_eq!(layered, e(4, &[1, 2]).scaled(&rat_int(2)));
    }

    #[test]
    fn divided_powers_are_inclusion_incidence() {
        let two_up = OperatorKind::DividedPowerT(2).apply(&e(4, &[2])).unwrap();
        let expected = &(&e(4, &[1, 2, 3]) + &e(4, &[1, 2, 4])) + &e(4, &[2, 3, 4]);
        assert_eq!(two_up, expected);
        let two_down = OperatorKind::DividedPowerTStar(2).apply(&e(4, &[1, 2, 3])).unwrap();
        assert_eq!(two_down, &(&e(4, &[1]) + &e(4, &[2])) + &e(4, &[3]));
        // T^k/k! equals the k-fold product of T scaled by 1/k!.
        for n in 1..=5 {
            for k in 0..=n {
                let divided = op_matrix(OperatorKind::DividedPowerT(k), n, CanonicalOrder::GradedLex).unwrap();
                let t = op_matrix(OperatorKind::T, n, CanonicalOrder::GradedLex).unwrap();
                let byhand = t.pow(k).scaled(&factorial_rat(k).recip());
                assert_eq!(divided, byhand);
            }
        }
    }

    #[test]
    fn t_matrix_shape() {
        let t = op_matrix(OperatorKind::T, 2, CanonicalOrder::GradedLex).unwrap();
        let ones = (0..4)
            .flat_map(|r| (0..4).map(move |c| (r, c)))
            .filter(|&(r, c)| !t.get(r, c).is_zero())
            .count();
        assert_eq!(ones, 4);
        let tstar = op_matrix(OperatorKind::TStar, 2, CanonicalOrder::GradedLex).unwrap();
        assert_eq!(tstar, t.transpose());
    }

    #[test]
    fn group_element_entry_vs_product() {
        let p = GroupParams::new(rat(1, 2), rat(-2, 3), rat_int(3));
        for order in [CanonicalOrder::GradedLex, CanonicalOrder::Binary] {
            let fast = group_element(&p, 3, order).unwrap();
            let slow = group_element_product(&p, 3, order).unwrap();
            assert_eq!(fast, slow);
        }
        assert!(group_element(&GroupParams::identity(), 3, CanonicalOrder::GradedLex)
            .unwrap()
            .is_identity());
    }

    #[test]
    fn group_element_with_degenerate_u() {
        let p = GroupParams::new(rat_int(1), rat_int(0), rat_int(1));
        let fast = group_element(&p, 2, CanonicalOrder::GradedLex).unwrap();
        let slow = group_element_product(&p, 2, CanonicalOrder::GradedLex).unwrap();
        assert_eq!(fast, slow);
    }

    #[test]
    fn leibniz_small_example() {
        let m = leibniz_entries(&rat_int(1), &rat_int(1), 1, CanonicalOrder::GradedLex).unwrap();
        assert_eq!(
            m,
            RationalMatrix::from_rows(
                1,
                CanonicalOrder::GradedLex,
                vec![
                    vec![rat_int(2), rat_int(1)],
                    vec![rat_int(1), rat_int(1)],
                ]
            )
        );
        assert!(leibniz_entries(&rat_int(0), &rat_int(0), 2, CanonicalOrder::GradedLex)
            .unwrap()
            .is_identity());
        assert!(matches!(
            leibniz_factored(&rat_int(-1), &rat_int(1), 2, CanonicalOrder::GradedLex),
            Err(Error::FactoredFormUndefined(_))
        ));
    }

    #[test]
    fn compose_identity_and_hadamard_square() {
        let had = GroupParams::new(rat_int(1), rat_int(-2), rat_int(1));
        let (scalar, composed) = group_compose(&had, &GroupParams::identity(), 4).unwrap();
        assert_eq!(scalar, rat_int(1));
        assert_eq!(composed, had);
        let (scalar, composed) = group_compose(&had, &had, 4).unwrap();
        assert_eq!(scalar, rat_int(16));
        assert_eq!(composed, GroupParams::identity());
        let degenerate = GroupParams::new(rat_int(1), rat_int(1), rat_int(-1));
        assert!(matches!(
            group_compose(&degenerate, &degenerate, 4),
            Err(Error::SingularComposition(_))
        ));
        let flat = GroupParams::new(rat_int(1), rat_int(0), rat_int(1));
        assert!(group_compose(&flat, &had, 4).is_err());
    }

    #[test]
    fn exp_x_entries_are_distance_powers() {
        let v = rat(1, 2);
        let m = exp_x_scaled(&v, 2, CanonicalOrder::GradedLex).unwrap();
        let subsets = CanonicalOrder::GradedLex.subsets(2).unwrap();
        for (r, &i) in subsets.iter().enumerate() {
            for (c, &j) in subsets.iter().enumerate() {
                let d = i.sym_diff(j).card() as i64;
                assert_eq!(*m.get(r, c), rat_pow(&v, d));
            }
        }
    }

    #[test]
    fn kronecker_small_cases() {
        let kr = kronecker_realization(1).unwrap();
        assert_eq!(*kr.factors[0].get(1, 0), rat_int(1));
        assert!(kr.factors[0].get(0, 0).is_zero());
        let kr2 = kronecker_realization(2).unwrap();
        let ones = (0..4)
            .flat_map(|r| (0..4).map(move |c| (r, c)))
            .filter(|&(r, c)| !kr2.factors[0].get(r, c).is_zero())
            .count();
        assert_eq!(ones, 2);
        // Relabeled factors match the hat representation.
        for n in 1..=3 {
            let kr = kronecker_realization(n).unwrap();
            for i in 1..=n {
                let aligned = kr.factors[i - 1]
                    .relabeled(&kr.perm)
                    .with_order_tag(CanonicalOrder::GradedLex);
                let hat = op_matrix(OperatorKind::EHat(i), n, CanonicalOrder::GradedLex).unwrap();
                assert_eq!(aligned, hat);
            }
        }
    }

    #[test]
    fn casimir_n1_is_4i() {
        let c = casimir_matrix(1, CanonicalOrder::GradedLex).unwrap();
        assert_eq!(
            c,
            RationalMatrix::identity_scaled(1, CanonicalOrder::GradedLex, 2, &rat_int(4))
        );
    }
}
