//! Association-scheme matrices and their spectral theory: Hamming and
//! Johnson relation matrices, Krawtchouk polynomials, the binary-expansion
//! extraction, binomial inversion against the `T_j`, Johnson spectra,
//! the Boolean poset zeta/Möbius pair, and Sylvester–Hadamard matrices.
//!
//! Everything here is a consequence of the operator calculus: the j-th
//! Hamming matrix is the Krawtchouk polynomial `K_j(X,n)/j!` of
//! `X = T + T*`; the layer block of `exp(T)exp(T*)` has entries
//! `2^{|I∩J|}`, whose binary digits are exactly the Johnson matrices; and
//! `g(1,−2,1)` has entries `(−1)^{|I∩J|}`, the Sylvester–Hadamard matrix
//! in binary labelling.

use num::{One, Zero};

use crate::error::{Error, Result};
use crate::matrix::RationalMatrix;
use crate::ops::{group_element, op_matrix, GroupParams, OperatorKind};
use crate::order::{layer_subsets, layer_rank, CanonicalOrder};
use crate::rat::{binomial_i, binomial_rat, factorial_rat, rat_int, rat_pow, Rat};
use crate::subset::MAX_DENSE;
use crate::zbasis::{chain_count, chains};
use crate::zeon::ZeonVector;

/// Largest `n` for Krawtchouk polynomial/matrix construction.
pub const MAX_KRAWTCHOUK: usize = 10;

/// Largest `n` for the per-chain Krawtchouk sweep.
pub const MAX_CHAIN_CHECK: usize = 8;

/// Largest `n` for binary-expansion extraction and `T_j` layer blocks.
pub const MAX_LAYER_DERIVATIONS: usize = 10;

/// Which association scheme a relation matrix belongs to.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum SchemeKind {
    /// `H_j` on all of B(n): entry 1 iff `|IΔJ| = j`.
    Hamming { n: usize, j: usize },
    /// `J_k` on layer ℓ: entry 1 iff `|I∩J| = ℓ−k`.
    Johnson { n: usize, ell: usize, k: usize },
}

/// A 0/1 relation matrix together with its scheme coordinates.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SchemeMatrix {
    pub kind: SchemeKind,
    pub matrix: RationalMatrix,
}

/// The j-th Hamming relation matrix on the full lattice.
pub fn hamming_matrix(n: usize, j: usize, order: CanonicalOrder) -> Result<SchemeMatrix> {
    check_dense(n)?;
    if j > n {
        return Err(Error::ParamOutOfRange {
            name: "j",
            value: j.to_string(),
            reason: "Hamming relation index exceeds ground-set size",
        });
    }
    let subsets = order.subsets(n)?;
    let dim = subsets.len();
    let matrix = RationalMatrix::from_fn(n, order, dim, dim, |r, c| {
        if subsets[r].sym_diff(subsets[c]).card() == j {
            Rat::one()
        } else {
            Rat::zero()
        }
    });
    Ok(SchemeMatrix {
        kind: SchemeKind::Hamming { n, j },
        matrix,
    })
}

/// The k-th Johnson relation matrix on layer ℓ (dictionary order).
pub fn johnson_matrix(n: usize, ell: usize, k: usize) -> Result<SchemeMatrix> {
    check_dense(n)?;
    check_johnson_indices(n, ell, k)?;
    let subsets = layer_subsets(n, ell);
    let dim = subsets.len();
    let matrix = RationalMatrix::from_fn(n, CanonicalOrder::GradedLex, dim, dim, |r, c| {
        if subsets[r].intersection(subsets[c]).card() == ell - k {
            Rat::one()
        } else {
            Rat::zero()
        }
    });
    Ok(SchemeMatrix {
        kind: SchemeKind::Johnson { n, ell, k },
        matrix,
    })
}

fn check_dense(n: usize) -> Result<()> {
    if n < 1 || n > MAX_DENSE {
        return Err(Error::SizeOutOfRange {
            what: "scheme matrix",
            n,
            max: MAX_DENSE,
        });
    }
    Ok(())
}

fn check_johnson_indices(n: usize, ell: usize, k: usize) -> Result<()> {
    if ell > n {
        return Err(Error::ParamOutOfRange {
            name: "ell",
            value: ell.to_string(),
            reason: "layer exceeds ground-set size",
        });
    }
    if k > ell.min(n - ell) {
        return Err(Error::ParamOutOfRange {
            name: "k",
            value: k.to_string(),
            reason: "Johnson relation index exceeds min(ell, n-ell)",
        });
    }
    Ok(())
}

/// The polynomial `x ↦ K_j(x,n)/j!`, stored by ascending coefficients.
///
/// It is the coefficient of `v^j` in `(1+v)^{(n+x)/2} (1−v)^{(n−x)/2}`,
/// which expands to `Σ_i (−1)^i C((n+x)/2, j−i) C((n−x)/2, i)` with
/// `C(y,m)` the falling-factorial polynomial `y(y−1)⋯(y−m+1)/m!`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct KrawtchoukPoly {
    pub degree: usize,
    pub n: usize,
    pub coeffs: Vec<Rat>,
}

impl KrawtchoukPoly {
    /// Horner evaluation at a rational point.
    pub fn eval(&self, x: &Rat) -> Rat {
        let mut acc = Rat::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    /// Applies the polynomial in `X = T + T*` to a vector.
    pub fn apply_in_x(&self, v: &ZeonVector) -> Result<ZeonVector> {
        let mut acc = ZeonVector::zero(v.n());
        for c in self.coeffs.iter().rev() {
            acc = &x_apply(&acc)? + &v.scaled(c);
        }
        Ok(acc)
    }
}

/// `X·v = (T + T*)·v`.
fn x_apply(v: &ZeonVector) -> Result<ZeonVector> {
    Ok(&OperatorKind::T.apply(v)? + &OperatorKind::TStar.apply(v)?)
}

/// Builds `K_j(x,n)/j!` by falling-factorial polynomial arithmetic.
pub fn krawtchouk_poly(j: usize, n: usize) -> Result<KrawtchoukPoly> {
    if n < 1 || n > MAX_KRAWTCHOUK {
        return Err(Error::SizeOutOfRange {
            what: "Krawtchouk construction",
            n,
            max: MAX_KRAWTCHOUK,
        });
    }
    if j > n {
        return Err(Error::ParamOutOfRange {
            name: "j",
            value: j.to_string(),
            reason: "Krawtchouk degree exceeds ground-set size",
        });
    }
    // (n+x)/2 and (n−x)/2 as linear polynomials in x.
    let plus = vec![rat_int(n as i64) / rat_int(2), rat_int(1) / rat_int(2)];
    let minus = vec![rat_int(n as i64) / rat_int(2), rat_int(-1) / rat_int(2)];
    let mut coeffs = vec![Rat::zero(); j + 1];
    for i in 0..=j {
        let term = poly_mul(
            &falling_binomial(&plus, j - i),
            &falling_binomial(&minus, i),
        );
        let sign = if i % 2 == 0 { Rat::one() } else { -Rat::one() };
        for (d, c) in term.iter().enumerate() {
            coeffs[d] += c * &sign;
        }
    }
    debug_assert!(!coeffs[j].is_zero(), "degree must be exactly j");
    Ok(KrawtchoukPoly {
        degree: j,
        n,
        coeffs,
    })
}

/// The falling-factorial binomial `C(y, m) = y(y−1)⋯(y−m+1)/m!` as a
/// polynomial in x, for a linear argument `y`.
fn falling_binomial(y: &[Rat], m: usize) -> Vec<Rat> {
    let mut acc = vec![Rat::one()];
    for r in 0..m {
        let shifted = vec![&y[0] - rat_int(r as i64), y[1].clone()];
        acc = poly_mul(&acc, &shifted);
    }
    poly_scale(&acc, &factorial_rat(m).recip())
}

fn poly_mul(a: &[Rat], b: &[Rat]) -> Vec<Rat> {
    let mut out = vec![Rat::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    out
}

fn poly_scale(a: &[Rat], c: &Rat) -> Vec<Rat> {
    a.iter().map(|x| x * c).collect()
}

/// Horner evaluation of `K_j(·,n)/j!` at the matrix `X = T + T*`;
/// equals the j-th Hamming matrix.
pub fn krawtchouk_matrix(j: usize, n: usize, order: CanonicalOrder) -> Result<RationalMatrix> {
    let poly = krawtchouk_poly(j, n)?;
    let x = op_matrix(OperatorKind::T, n, order)?.add(&op_matrix(OperatorKind::TStar, n, order)?);
    let dim = x.nrows();
    let mut acc = RationalMatrix::zeros(n, order, dim, dim);
    for c in poly.coeffs.iter().rev() {
        // X commutes with polynomials in X, so left-multiplying keeps
        // Horner valid and exploits the sparsity of X.
        acc = x
            .mul(&acc)
            .add(&RationalMatrix::identity_scaled(n, order, dim, c));
    }
    Ok(acc)
}

/// All of `K_0(X,n)/0!, …, K_n(X,n)/n!` in one pass, sharing the powers
/// of X across degrees instead of re-running Horner n+1 times.
pub fn krawtchouk_matrices(n: usize, order: CanonicalOrder) -> Result<Vec<RationalMatrix>> {
    let x = op_matrix(OperatorKind::T, n, order)?.add(&op_matrix(OperatorKind::TStar, n, order)?);
    let dim = x.nrows();
    let mut powers = Vec::with_capacity(n + 1);
    powers.push(RationalMatrix::identity(n, order, dim));
    for _ in 1..=n {
        powers.push(x.mul(powers.last().expect("nonempty")));
    }
    (0..=n)
        .map(|j| {
            let poly = krawtchouk_poly(j, n)?;
            let mut acc = RationalMatrix::zeros(n, order, dim, dim);
            for (k, c) in poly.coeffs.iter().enumerate() {
                if !c.is_zero() {
                    acc = acc.add(&powers[k].scaled(c));
                }
            }
            Ok(acc)
        })
        .collect()
}

/// Report of the per-chain Krawtchouk sweep.
#[derive(Clone, Debug)]
pub struct ChainKrawtchoukReport {
    pub chains: usize,
    pub states_checked: usize,
    pub violations: Vec<String>,
}

impl ChainKrawtchoukReport {
    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Verifies, chain by chain, that the unnormalized states are Krawtchouk
/// evaluations of the vacuum: `φ_j = K_j(X, N)·φ_0` with the chain's own
/// principal number N as the polynomial parameter (`φ_j = j!·φ̃_j`), plus
/// the three-term recurrence `X·φ_j = φ_{j+1} + j(N+1−j)·φ_{j−1}`.
pub fn chain_krawtchouk_check(n: usize) -> Result<ChainKrawtchoukReport> {
    if n < 1 || n > MAX_CHAIN_CHECK {
        return Err(Error::SizeOutOfRange {
            what: "chain Krawtchouk sweep",
            n,
            max: MAX_CHAIN_CHECK,
        });
    }
    let mut report = ChainKrawtchoukReport {
        chains: 0,
        states_checked: 0,
        violations: Vec::new(),
    };
    for chain in chains(n)? {
        report.chains += 1;
        let cap_n = chain.principal();
        // Unnormalized φ_j = j!·φ̃_j.
        let phi: Vec<ZeonVector> = chain
            .states()
            .iter()
            .enumerate()
            .map(|(j, s)| s.scaled(&factorial_rat(j)))
            .collect();
        for j in 0..=cap_n {
            report.states_checked += 1;
            if cap_n >= 1 {
                let poly = krawtchouk_poly(j, cap_n)?;
                let via_poly = poly.apply_in_x(chain.vacuum())?;
                // K_j/j! · φ_0 = φ̃_j, so scale back up by j!.
                if via_poly.scaled(&factorial_rat(j)) != phi[j] {
                    report.violations.push(format!(
                        "chain {}: K_{j}(X,{cap_n}) misses state {j}",
                        chain.path()
                    ));
                }
            }
            let lhs = x_apply(&phi[j])?;
            let mut rhs = if j + 1 <= cap_n {
                phi[j + 1].clone()
            } else {
                ZeonVector::zero(n)
            };
            if j >= 1 {
                let c = rat_int((j * (cap_n + 1 - j)) as i64);
                rhs = &rhs + &phi[j - 1].scaled(&c);
            }
            if lhs != rhs {
                report.violations.push(format!(
                    "chain {}: recurrence fails at j = {j}",
                    chain.path()
                ));
            }
        }
    }
    Ok(report)
}

/// The layer-ℓ block of `g(1,1,1) = exp(T)exp(T*)`, whose entries are
/// `2^{|I∩J|}`, decomposed digit-by-digit: reducing mod 2, subtracting,
/// and halving peels off `J_m, …, J_1, J_0` where `m = min(ℓ, n−ℓ)`.
///
/// Above the middle layer the smallest entry is `2^{ℓ−m}` with `ℓ−m > 0`,
/// so the first `ℓ−m` parity rounds must come out empty; anything else,
/// or a nonzero residue at the end, is an extraction error.
pub fn johnson_from_binary_expansion(n: usize, ell: usize) -> Result<Vec<SchemeMatrix>> {
    if n < 1 || n > MAX_LAYER_DERIVATIONS {
        return Err(Error::SizeOutOfRange {
            what: "binary-expansion extraction",
            n,
            max: MAX_LAYER_DERIVATIONS,
        });
    }
    if ell > n {
        return Err(Error::ParamOutOfRange {
            name: "ell",
            value: ell.to_string(),
            reason: "layer exceeds ground-set size",
        });
    }
    let ones = GroupParams::new(Rat::one(), Rat::one(), Rat::one());
    let mut block = group_element(&ones, n, CanonicalOrder::GradedLex)?.layer_block(ell)?;
    let m = ell.min(n - ell);
    let expected_lead = ell - m;
    let dim = block.nrows();

    let mut rounds: Vec<RationalMatrix> = Vec::new();
    let two = rat_int(2);
    while !block.is_zero() {
        if rounds.len() > ell {
            return Err(Error::Extraction(format!(
                "no termination after {} rounds at n = {n}, ell = {ell}",
                rounds.len()
            )));
        }
        if !block.is_nonneg_integer() {
            return Err(Error::Extraction(
                "block left the nonnegative integers".to_string(),
            ));
        }
        let mut parity = RationalMatrix::zeros(n, CanonicalOrder::GradedLex, dim, dim);
        for r in 0..dim {
            for c in 0..dim {
                if block.get(r, c).numer() % 2 == 1.into() {
                    parity.set(r, c, Rat::one());
                }
            }
        }
        block = block.sub(&parity).scaled(&two.recip());
        rounds.push(parity);
    }

    for (r, round) in rounds.iter().take(expected_lead).enumerate() {
        if !round.is_zero() {
            return Err(Error::Extraction(format!(
                "parity round {r} should be empty below the least digit"
            )));
        }
    }
    if rounds.len() != ell + 1 {
        return Err(Error::Extraction(format!(
            "expected {} parity rounds, found {}",
            ell + 1,
            rounds.len()
        )));
    }

    // Rounds expected_lead..=ell are J_m, J_{m−1}, …, J_0.
    Ok(rounds
        .into_iter()
        .skip(expected_lead)
        .enumerate()
        .map(|(idx, matrix)| SchemeMatrix {
            kind: SchemeKind::Johnson {
                n,
                ell,
                k: m - idx,
            },
            matrix,
        })
        .collect())
}

/// The layer-ℓ block of `T_j = T^j (T*)^j / (j!j!)`, materialized by
/// applying the operator to the layer basis (T_j preserves layers).
pub fn tj_layer_block(n: usize, ell: usize, j: usize) -> Result<RationalMatrix> {
    if n < 1 || n > MAX_LAYER_DERIVATIONS {
        return Err(Error::SizeOutOfRange {
            what: "Tj layer block",
            n,
            max: MAX_LAYER_DERIVATIONS,
        });
    }
    if ell > n || j > n {
        return Err(Error::ParamOutOfRange {
            name: "ell/j",
            value: format!("{ell}/{j}"),
            reason: "layer or power exceeds ground-set size",
        });
    }
    let subsets = layer_subsets(n, ell);
    let dim = subsets.len();
    let mut out = RationalMatrix::zeros(n, CanonicalOrder::GradedLex, dim, dim);
    for (col, &j_subset) in subsets.iter().enumerate() {
        let image = OperatorKind::Tj(j).apply(&ZeonVector::basis(j_subset))?;
        for (idx, c) in image.terms() {
            debug_assert_eq!(idx.card(), ell, "Tj must preserve the layer");
            out.set(layer_rank(idx), col, c.clone());
        }
    }
    Ok(out)
}

/// Coefficients of `T_j|_{V_ℓ} = Σ_k C(ℓ−k, j−k)·J_k`, indexed by
/// k = 0..=min(ℓ, n−ℓ).
pub fn tj_decomposition(n: usize, ell: usize, j: usize) -> Result<Vec<Rat>> {
    if ell > n || j > n {
        return Err(Error::ParamOutOfRange {
            name: "ell/j",
            value: format!("{ell}/{j}"),
            reason: "layer or power exceeds ground-set size",
        });
    }
    let m = ell.min(n - ell);
    Ok((0..=m)
        .map(|k| rat_int(binomial_i(ell as i64 - k as i64, j as i64 - k as i64) as i64))
        .collect())
}

/// The Johnson matrix recovered by binomial inversion from materialized
/// `T_j` blocks: `J_k = Σ_j (−1)^{k−j} C(ℓ−j, k−j)·T_j|_{V_ℓ}`.
pub fn johnson_via_inversion(n: usize, ell: usize, k: usize) -> Result<SchemeMatrix> {
    if n < 1 || n > MAX_LAYER_DERIVATIONS {
        return Err(Error::SizeOutOfRange {
            what: "Johnson inversion",
            n,
            max: MAX_LAYER_DERIVATIONS,
        });
    }
    check_johnson_indices(n, ell, k)?;
    let dim = layer_subsets(n, ell).len();
    let mut acc = RationalMatrix::zeros(n, CanonicalOrder::GradedLex, dim, dim);
    for j in 0..=k {
        let c = binomial_rat((ell - j) as u64, (k - j) as u64);
        let sign = if (k - j) % 2 == 0 { c } else { -c };
        if sign.is_zero() {
            continue;
        }
        acc = acc.add(&tj_layer_block(n, ell, j)?.scaled(&sign));
    }
    Ok(SchemeMatrix {
        kind: SchemeKind::Johnson { n, ell, k },
        matrix: acc,
    })
}

/// The α-th eigenvalue of `J_k` on layer ℓ:
/// `Λ = Σ_j C(ℓ−α, j)·C(n−ℓ−α+j, j)·C(ℓ−j, k−j)·(−1)^{k−j}`.
///
/// Every layer-ℓ Z-basis state belonging to an α-chain is an eigenvector
/// with this eigenvalue; the eigenvalue's multiplicity is the chain count
/// `C(n,α) − C(n,α−1)`.
pub fn johnson_spectrum(n: usize, ell: usize, k: usize, alpha: usize) -> Result<Rat> {
    check_johnson_indices(n, ell, k)?;
    if alpha > ell.min(n - ell) {
        return Err(Error::ParamOutOfRange {
            name: "alpha",
            value: alpha.to_string(),
            reason: "chain type exceeds min(ell, n-ell)",
        });
    }
    let (n_i, ell_i, k_i, alpha_i) = (n as i64, ell as i64, k as i64, alpha as i64);
    let mut acc = Rat::zero();
    for j in 0..=k_i {
        let magnitude = binomial_i(ell_i - alpha_i, j)
            * binomial_i(n_i - ell_i - alpha_i + j, j)
            * binomial_i(ell_i - j, k_i - j);
        let signed = if (k_i - j) % 2 == 0 {
            magnitude as i64
        } else {
            -(magnitude as i64)
        };
        acc += rat_int(signed);
    }
    Ok(acc)
}

/// The spectrum table of `J_k` on layer ℓ: rows (α, Λ(α), multiplicity).
pub fn spectrum_table(n: usize, ell: usize, k: usize) -> Result<Vec<(usize, Rat, usize)>> {
    check_johnson_indices(n, ell, k)?;
    (0..=ell.min(n - ell))
        .map(|alpha| Ok((alpha, johnson_spectrum(n, ell, k, alpha)?, chain_count(n, alpha))))
        .collect()
}

/// The Boolean poset zeta-like incidence matrix `E = exp(tT*)`: entry
/// `t^{|J∖I|}` when `I ⊆ J`, zero otherwise. At t = 1 this is the 0/1
/// subset-inclusion matrix.
pub fn poset_incidence(n: usize, t: &Rat, order: CanonicalOrder) -> Result<RationalMatrix> {
    check_dense(n)?;
    let subsets = order.subsets(n)?;
    let dim = subsets.len();
    Ok(RationalMatrix::from_fn(n, order, dim, dim, |r, c| {
        let (i, j) = (subsets[r], subsets[c]);
        if i.is_subset_of(j) {
            rat_pow(t, j.minus(i).card() as i64)
        } else {
            Rat::zero()
        }
    }))
}

/// The Möbius matrix `M = exp(−tT*)`, the exact inverse of the incidence
/// matrix: entry `(−t)^{|J∖I|}` on inclusion. At t = 1 the entries are
/// the Möbius function of the Boolean poset.
pub fn moebius(n: usize, t: &Rat, order: CanonicalOrder) -> Result<RationalMatrix> {
    poset_incidence(n, &-t.clone(), order)
}

/// The Sylvester–Hadamard matrix `H_n`, built by iterated Kronecker
/// products `H_{m+1} = H_1 ⊗ H_m`; entry at (r,c) is
/// `(−1)^{popcount(r & c)}` in binary labelling.
pub fn sylvester_hadamard(n: usize) -> Result<RationalMatrix> {
    check_dense(n)?;
    let h1 = RationalMatrix::from_rows(
        1,
        CanonicalOrder::Binary,
        vec![
            vec![Rat::one(), Rat::one()],
            vec![Rat::one(), -Rat::one()],
        ],
    );
    let mut acc = h1.clone();
    for _ in 1..n {
        acc = h1.kron(&acc);
    }
    Ok(acc)
}

/// The same matrix from the group side: `g(1,−2,1)` has entries
/// `(−1)^{|I∩J|}`, which in binary order is exactly `H_n`.
pub fn hadamard_via_group(n: usize, order: CanonicalOrder) -> Result<RationalMatrix> {
    let params = GroupParams::new(Rat::one(), rat_int(-2), Rat::one());
    group_element(&params, n, order)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rat::rat;
    use crate::subset::SubsetIndex;

    #[test]
    fn hamming_matrix_basics() {
        let h0 = hamming_matrix(3, 0, CanonicalOrder::GradedLex).unwrap();
        assert!(h0.matrix.is_identity());
        let h2 = hamming_matrix(2, 2, CanonicalOrder::GradedLex).unwrap();
        // Distance-2 pairs in B(2): ∅↔{1,2} and {1}↔{2}.
        let gl = CanonicalOrder::GradedLex;
        let empty = gl.rank(SubsetIndex::empty(2).unwrap());
        let full = gl.rank(SubsetIndex::full(2).unwrap());
        let one = gl.rank(SubsetIndex::from_elements(2, &[1]).unwrap());
        let two = gl.rank(SubsetIndex::from_elements(2, &[2]).unwrap());
        assert_eq!(*h2.matrix.get(empty, full), rat_int(1));
        assert_eq!(*h2.matrix.get(one, two), rat_int(1));
        assert_eq!(h2.matrix.row_sum(0), rat_int(1));
        assert!(hamming_matrix(3, 4, CanonicalOrder::GradedLex).is_err());
        // Relation matrices partition: sum over j is all-ones.
        for n in 1..=5 {
            let mut sum = RationalMatrix::zeros(n, gl, 1 << n, 1 << n);
            for j in 0..=n {
                sum = sum.add(&hamming_matrix(n, j, gl).unwrap().matrix);
            }
            assert!((0..1 << n).all(|r| (0..1 << n).all(|c| *sum.get(r, c) == rat_int(1))));
        }
    }

    #[test]
    fn johnson_matrix_basics() {
        let j1 = johnson_matrix(4, 2, 1).unwrap();
        assert_eq!(j1.matrix.nrows(), 6);
        for r in 0..6 {
            assert_eq!(j1.matrix.row_sum(r), rat_int(4));
        }
        assert!(johnson_matrix(4, 2, 3).is_err());
        let j0 = johnson_matrix(5, 2, 0).unwrap();
        assert!(j0.matrix.is_identity());
    }

    #[test]
    fn krawtchouk_low_degrees() {
        // K_0/0! = 1, K_1/1! = x, K_2/2! = (x²−n)/2.
        let k0 = krawtchouk_poly(0, 5).unwrap();
        assert_eq!(k0.coeffs, vec![rat_int(1)]);
        let k1 = krawtchouk_poly(1, 5).unwrap();
        assert_eq!(k1.coeffs, vec![rat_int(0), rat_int(1)]);
        let k2 = krawtchouk_poly(2, 6).unwrap();
        assert_eq!(k2.coeffs, vec![rat_int(-3), rat_int(0), rat(1, 2)]);
        assert!(krawtchouk_poly(4, 3).is_err());
    }

    #[test]
    fn krawtchouk_matrix_equals_hamming() {
        for n in 1..=5 {
            let batch = krawtchouk_matrices(n, CanonicalOrder::GradedLex).unwrap();
            for j in 0..=n {
                let lhs = krawtchouk_matrix(j, n, CanonicalOrder::GradedLex).unwrap();
                let rhs = hamming_matrix(n, j, CanonicalOrder::GradedLex).unwrap();
                assert_eq!(lhs, rhs.matrix, "n={n} j={j}");
                assert_eq!(batch[j], lhs, "batch n={n} j={j}");
            }
        }
    }

    #[test]
    fn chain_sweep_passes() {
        for n in 1..=5 {
            let report = chain_krawtchouk_check(n).unwrap();
            assert!(report.passed(), "n={n}: {:?}", report.violations);
        }
    }

    #[test]
    fn extraction_small_cases() {
        let js = johnson_from_binary_expansion(1, 0).unwrap();
        assert_eq!(js.len(), 1);
        assert!(js[0].matrix.is_identity());
        for n in 1..=5 {
            for ell in 0..=n {
                let extracted = johnson_from_binary_expansion(n, ell).unwrap();
                assert_eq!(extracted.len(), ell.min(n - ell) + 1);
                for scheme in extracted {
                    let SchemeKind::Johnson { k, .. } = scheme.kind else {
                        panic!("extraction must emit Johnson matrices");
                    };
                    assert_eq!(scheme.matrix, johnson_matrix(n, ell, k).unwrap().matrix);
                }
            }
        }
    }

    #[test]
    fn tj_and_inversion() {
        // T_1 on V_ℓ decomposes as ℓ·J_0 + J_1.
        let coeffs = tj_decomposition(6, 2, 1).unwrap();
        assert_eq!(coeffs, vec![rat_int(2), rat_int(1), rat_int(0)]);
        for n in 1..=5 {
            for ell in 0..=n {
                let m = ell.min(n - ell);
                for j in 0..=m {
                    let lhs = tj_layer_block(n, ell, j).unwrap();
                    let coeffs = tj_decomposition(n, ell, j).unwrap();
                    let mut rhs =
                        RationalMatrix::zeros(n, CanonicalOrder::GradedLex, lhs.nrows(), lhs.ncols());
                    for (k, c) in coeffs.iter().enumerate() {
                        if !c.is_zero() {
                            rhs = rhs.add(&johnson_matrix(n, ell, k).unwrap().matrix.scaled(c));
                        }
                    }
                    assert_eq!(lhs, rhs, "n={n} ell={ell} j={j}");
                }
                for k in 0..=m {
                    let inverted = johnson_via_inversion(n, ell, k).unwrap();
                    assert_eq!(inverted.matrix, johnson_matrix(n, ell, k).unwrap().matrix);
                }
            }
        }
    }

    #[test]
    fn spectrum_golden_and_k0() {
        assert_eq!(johnson_spectrum(4, 2, 1, 0).unwrap(), rat_int(4));
        assert_eq!(johnson_spectrum(4, 2, 1, 1).unwrap(), rat_int(0));
        assert_eq!(johnson_spectrum(4, 2, 1, 2).unwrap(), rat_int(-2));
        for alpha in 0..=2 {
            assert_eq!(johnson_spectrum(5, 2, 0, alpha).unwrap(), rat_int(1));
        }
        let table = spectrum_table(4, 2, 1).unwrap();
        assert_eq!(
            table,
            vec![
                (0, rat_int(4), 1),
                (1, rat_int(0), 3),
                (2, rat_int(-2), 2),
            ]
        );
    }

    #[test]
    fn poset_pair() {
        let one = rat_int(1);
        let e = poset_incidence(1, &one, CanonicalOrder::GradedLex).unwrap();
        let m = moebius(1, &one, CanonicalOrder::GradedLex).unwrap();
        assert_eq!(*e.get(0, 1), rat_int(1));
        assert_eq!(*m.get(0, 1), rat_int(-1));
        assert!(e.mul(&m).is_identity());
        // Möbius entry for ∅ ⊂ {1,2} is (−1)² = +1.
        let m2 = moebius(2, &one, CanonicalOrder::GradedLex).unwrap();
        let full = CanonicalOrder::GradedLex.rank(SubsetIndex::full(2).unwrap());
        assert_eq!(*m2.get(0, full), rat_int(1));
        for t in [rat_int(1), rat(1, 2)] {
            for n in 1..=5 {
                let e = poset_incidence(n, &t, CanonicalOrder::GradedLex).unwrap();
                let m = moebius(n, &t, CanonicalOrder::GradedLex).unwrap();
                assert!(e.mul(&m).is_identity(), "n={n} t={t}");
            }
        }
    }

    #[test]
    fn hadamard_pair() {
        let h2 = sylvester_hadamard(2).unwrap();
        let expect = RationalMatrix::from_rows(
            2,
            CanonicalOrder::Binary,
            vec![
                vec![rat_int(1), rat_int(1), rat_int(1), rat_int(1)],
                vec![rat_int(1), rat_int(-1), rat_int(1), rat_int(-1)],
                vec![rat_int(1), rat_int(1), rat_int(-1), rat_int(-1)],
                vec![rat_int(1), rat_int(-1), rat_int(-1), rat_int(1)],
            ],
        );
        assert_eq!(h2, expect);
        for n in 1..=5 {
            let sylvester = sylvester_hadamard(n).unwrap();
            let group = hadamard_via_group(n, CanonicalOrder::Binary).unwrap();
            assert_eq!(sylvester, group, "n={n}");
            let square = sylvester.mul(&sylvester.transpose());
            assert_eq!(
                square,
                RationalMatrix::identity_scaled(
                    n,
                    CanonicalOrder::Binary,
                    1 << n,
                    &rat_int(1 << n)
                )
            );
        }
    }
}
