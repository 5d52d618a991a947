//! Constructive decomposition of the Boolean lattice into irreducible
//! sl(2) chains.
//!
//! Vacuum states (kernel vectors of T*) are in one-one correspondence with
//! nonnegative ±1 lattice paths of length `n` starting at 0: each descent
//! at step `m → m+1` contributes a factor `e_1 + ⋯ + e_m − N_m·e_{m+1}`
//! to the vacuum product, where `N_m` is the level before the descent.
//! A path with α descents ends at level `N = n − 2α`, its vacuum lives in
//! layer α, and applying divided powers of T generates the chain
//! `φ̃_j = (T^j/j!)·φ_0` for `0 ≤ j ≤ N`, spanning layers α through n−α.
//!
//! Chains are ordered by α ascending, then lexicographically on level
//! sequences. That block structure is what the layer-position label
//! `k = i + C(n, α−1)` encodes: within any layer, the chains with smaller
//! α sit to the left.
//!
//! Vacua are intentionally not normalized; squared norms are carried
//! separately and satisfy `‖φ̃_j‖² = C(N,j)·‖φ_0‖²`.

use std::fmt;

use num::One;

use crate::error::{Error, Result};
use crate::matrix::RationalMatrix;
use crate::order::{layer_rank, layer_subsets, CanonicalOrder};
use crate::rat::{binomial, binomial_i, binomial_rat, rat_int, Rat};
use crate::subset::MAX_DENSE;
use crate::zeon::ZeonVector;

/// Largest `n` for path enumeration.
pub const MAX_PATHS: usize = 16;

/// Largest `n` for the complement-sign sweep.
pub const MAX_SIGN_CHECK: usize = 10;

/// A nonnegative ±1 lattice path `N_0 N_1 … N_n` with `N_0 = 0`,
/// naming one vacuum state.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ChainPath {
    levels: Vec<u32>,
}

impl ChainPath {
    /// Validates the level sequence: starts at 0, steps by ±1, never
    /// negative (nonnegativity is enforced by the unsigned type plus the
    /// step rule).
    pub fn new(levels: Vec<u32>) -> Result<Self> {
        let bad = |reason: &'static str| Error::ParamOutOfRange {
            name: "levels",
            value: format!("{levels:?}"),
            reason,
        };
        if levels.len() < 2 {
            return Err(bad("path needs at least one step"));
        }
        if levels.len() > MAX_PATHS + 1 {
            return Err(bad("path longer than the supported ground set"));
        }
        if levels[0] != 0 {
            return Err(bad("path must start at level 0"));
        }
        for w in levels.windows(2) {
            if w[1] != w[0] + 1 && !(w[0] > 0 && w[1] == w[0] - 1) {
                return Err(bad("steps must change the level by exactly one"));
            }
        }
        Ok(ChainPath { levels })
    }

    /// Number of steps (the ground-set size the path belongs to).
    pub fn n(&self) -> usize {
        self.levels.len() - 1
    }

    pub fn levels(&self) -> &[u32] {
        &self.levels
    }

    /// Number of descents α; the vacuum lives in layer α.
    pub fn descents(&self) -> usize {
        self.levels.windows(2).filter(|w| w[1] < w[0]).count()
    }

    /// Final level `N = n − 2α`, the principal number of the chain.
    pub fn principal(&self) -> usize {
        *self.levels.last().unwrap() as usize
    }
}

impl fmt::Display for ChainPath {
    /// Digit string like `01210` when all levels fit one digit, else
    /// comma-separated levels.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.levels.iter().all(|&v| v <= 9) {
            for v in &self.levels {
                write!(f, "{v}")?;
            }
            Ok(())
        } else {
            let parts: Vec<String> = self.levels.iter().map(u32::to_string).collect();
            write!(f, "{}", parts.join(","))
        }
    }
}

/// All nonnegative ±1 paths of length `n` from 0, in lexicographic order
/// of their level sequences. The count ending at level `n − 2α` is
/// `C(n,α) − C(n,α−1)`.
pub fn enumerate_paths(n: usize) -> Result<Vec<ChainPath>> {
    if n < 1 || n > MAX_PATHS {
        return Err(Error::SizeOutOfRange {
            what: "path enumeration",
            n,
            max: MAX_PATHS,
        });
    }
    let mut out = Vec::new();
    let mut levels = Vec::with_capacity(n + 1);
    levels.push(0u32);
    // Depth-first, descending step offered before ascending, which yields
    // lexicographic order directly.
    fn rec(levels: &mut Vec<u32>, n: usize, out: &mut Vec<ChainPath>) {
        if levels.len() == n + 1 {
            out.push(ChainPath {
                levels: levels.clone(),
            });
            return;
        }
        let cur = *levels.last().unwrap();
        if cur > 0 {
            levels.push(cur - 1);
            rec(levels, n, out);
            levels.pop();
        }
        levels.push(cur + 1);
        rec(levels, n, out);
        levels.pop();
    }
    rec(&mut levels, n, &mut out);
    Ok(out)
}

/// The vacuum named by a path: the product of its descent factors
/// (`e_∅` for the all-ascent path). Satisfies `T*Ω = 0` and `UΩ = NΩ`.
pub fn vacuum_from_path(path: &ChainPath) -> ZeonVector {
    let n = path.n();
    let mut vacuum = ZeonVector::one(n).expect("path length within ground-set range");
    for m in 1..n {
        let (from, to) = (path.levels[m], path.levels[m + 1]);
        if to < from {
            let mut factor = ZeonVector::zero(n);
            for i in 1..=m {
                factor = &factor + &ZeonVector::generator(n, i).expect("index in range");
            }
            let tip = ZeonVector::generator(n, m + 1).expect("index in range");
            factor = &factor - &tip.scaled(&rat_int(from as i64));
            vacuum = vacuum.mul(&factor).expect("same ground set");
        }
    }
    vacuum
}

/// An irreducible chain: the vacuum and its divided-power orbit
/// `φ̃_j = (T^j/j!)·φ_0`, with squared norms.
#[derive(Clone, Debug)]
pub struct Chain {
    path: ChainPath,
    states: Vec<ZeonVector>,
    norms2: Vec<Rat>,
}

impl Chain {
    pub fn path(&self) -> &ChainPath {
        &self.path
    }

    /// States `φ̃_0, …, φ̃_N` (index j).
    pub fn states(&self) -> &[ZeonVector] {
        &self.states
    }

    pub fn norms2(&self) -> &[Rat] {
        &self.norms2
    }

    pub fn vacuum(&self) -> &ZeonVector {
        &self.states[0]
    }

    pub fn alpha(&self) -> usize {
        self.path.descents()
    }

    /// Principal number N; the chain has N+1 states.
    pub fn principal(&self) -> usize {
        self.path.principal()
    }

    /// The state in absolute layer ℓ, when the chain reaches it.
    pub fn state_in_layer(&self, ell: usize) -> Option<&ZeonVector> {
        let alpha = self.alpha();
        (ell >= alpha && ell <= self.path.n() - alpha).then(|| &self.states[ell - alpha])
    }
}

/// Builds the chain over a vacuum path and verifies the sl(2) module
/// structure on the way: `T φ̃_j = (j+1) φ̃_{j+1}` (by construction),
/// `T* φ̃_j = (N+1−j) φ̃_{j−1}`, `U φ̃_j = (N−2j) φ̃_j`, `T φ̃_N = 0`,
/// and the norm scaling `‖φ̃_j‖² = C(N,j)·‖φ_0‖²`.
///
/// A violation is an implementation bug, not bad input, and surfaces as
/// `Error::Internal`.
pub fn build_chain(path: &ChainPath) -> Result<Chain> {
    use crate::ops::OperatorKind;
    let n = path.n();
    let cap_n = path.principal();
    let vacuum = vacuum_from_path(path);
    let fail = |what: String| Err(Error::Internal(what));

    if !OperatorKind::TStar.apply(&vacuum)?.is_zero() {
        return fail(format!("path {path}: vacuum not annihilated by T*"));
    }
    let expect_u = vacuum.scaled(&rat_int(cap_n as i64));
    if OperatorKind::U.apply(&vacuum)? != expect_u {
        return fail(format!("path {path}: vacuum is not a U eigenvector"));
    }

    let mut states = vec![vacuum];
    for j in 0..cap_n {
        let raised = OperatorKind::T.apply(&states[j])?;
        // T φ̃_j = (j+1) φ̃_{j+1}
        states.push(raised.scaled(&rat_int(j as i64 + 1).recip()));
    }
    if !OperatorKind::T.apply(&states[cap_n])?.is_zero() {
        return fail(format!("path {path}: chain does not terminate at j = N"));
    }

    let base_norm2 = states[0].norm2();
    let mut norms2 = Vec::with_capacity(cap_n + 1);
    for (j, state) in states.iter().enumerate() {
        let down = OperatorKind::TStar.apply(state)?;
        let expect_down = if j == 0 {
            ZeonVector::zero(n)
        } else {
            states[j - 1].scaled(&rat_int((cap_n + 1 - j) as i64))
        };
        if down != expect_down {
            return fail(format!("path {path}: lowering relation fails at j = {j}"));
        }
        let um = OperatorKind::U.apply(state)?;
        if um != state.scaled(&rat_int(cap_n as i64 - 2 * j as i64)) {
            return fail(format!("path {path}: U eigenvalue fails at j = {j}"));
        }
        let norm2 = state.norm2();
        if norm2 != binomial_rat(cap_n as u64, j as u64) * &base_norm2 {
            return fail(format!("path {path}: norm scaling fails at j = {j}"));
        }
        norms2.push(norm2);
    }

    Ok(Chain {
        path: path.clone(),
        states,
        norms2,
    })
}

/// All chains of B(n) in canonical order: α ascending, then lexicographic
/// on level sequences. Within each α block the 1-based position is the
/// chain index `i` of the state labels.
pub fn chains(n: usize) -> Result<Vec<Chain>> {
    if n > MAX_DENSE {
        return Err(Error::SizeOutOfRange {
            what: "chain decomposition",
            n,
            max: MAX_DENSE,
        });
    }
    let mut paths = enumerate_paths(n)?;
    // Stable: lexicographic order survives within each α block.
    paths.sort_by_key(ChainPath::descents);
    paths.iter().map(build_chain).collect()
}

/// Chain-side state label |n,N,i,j⟩: the j-th state (0-based) of the i-th
/// chain (1-based) with principal number N.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct ChainLabel {
    pub n: usize,
    pub principal: usize,
    pub chain: usize,
    pub state: usize,
}

/// Layer-side state label |n,ℓ,k⟩: the k-th state from the left (1-based)
/// in layer ℓ.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct LayerLabel {
    pub n: usize,
    pub layer: usize,
    pub position: usize,
}

impl ChainLabel {
    /// α = (n − N)/2, the number of descents of the chain's path.
    pub fn alpha(&self) -> usize {
        (self.n - self.principal) / 2
    }

    pub fn validate(&self) -> Result<()> {
        let bad = |reason: String| Error::InvalidLabel(reason);
        if self.principal > self.n || (self.n - self.principal) % 2 != 0 {
            return Err(bad(format!(
                "principal number {} impossible for n = {}",
                self.principal, self.n
            )));
        }
        if self.state > self.principal {
            return Err(bad(format!(
                "state index {} exceeds principal number {}",
                self.state, self.principal
            )));
        }
        let alpha = self.alpha();
        let block = chain_count(self.n, alpha);
        if self.chain < 1 || self.chain > block {
            return Err(bad(format!(
                "chain index {} outside 1..={} for α = {}",
                self.chain, block, alpha
            )));
        }
        Ok(())
    }
}

impl LayerLabel {
    pub fn validate(&self) -> Result<()> {
        if self.layer > self.n {
            return Err(Error::InvalidLabel(format!(
                "layer {} exceeds n = {}",
                self.layer, self.n
            )));
        }
        let width = binomial(self.n as u64, self.layer as u64) as usize;
        if self.position < 1 || self.position > width {
            return Err(Error::InvalidLabel(format!(
                "position {} outside 1..={} in layer {}",
                self.position, width, self.layer
            )));
        }
        Ok(())
    }
}

/// Number of chains with a given α: `C(n,α) − C(n,α−1)`.
pub fn chain_count(n: usize, alpha: usize) -> usize {
    (binomial_i(n as i64, alpha as i64) - binomial_i(n as i64, alpha as i64 - 1)) as usize
}

/// |n,N,i,j⟩ → |n,ℓ,k⟩: `ℓ = j + α` and `k = i + C(n, α−1)`.
pub fn chain_to_layer(label: &ChainLabel) -> Result<LayerLabel> {
    label.validate()?;
    let alpha = label.alpha();
    let out = LayerLabel {
        n: label.n,
        layer: label.state + alpha,
        position: label.chain + binomial_i(label.n as i64, alpha as i64 - 1) as usize,
    };
    out.validate().expect("image of a valid chain label");
    Ok(out)
}

/// |n,ℓ,k⟩ → |n,N,i,j⟩: α is the largest α′ with `C(n,α′−1) < k`, then
/// `N = n − 2α`, `i = k − C(n,α−1)`, `j = ℓ − α`.
pub fn layer_to_chain(label: &LayerLabel) -> Result<ChainLabel> {
    label.validate()?;
    let n = label.n as i64;
    let k = label.position as u64;
    let mut alpha = 0usize;
    for cand in 1..=label.n / 2 {
        if binomial_i(n, cand as i64 - 1) < k {
            alpha = cand;
        }
    }
    let out = ChainLabel {
        n: label.n,
        principal: label.n - 2 * alpha,
        chain: label.position - binomial_i(n, alpha as i64 - 1) as usize,
        state: label.layer - alpha,
    };
    out.validate()?;
    Ok(out)
}

/// One Z-basis state with both labels, its vector, and its squared norm.
#[derive(Clone, Debug)]
pub struct ZBasisState {
    pub chain_label: ChainLabel,
    pub layer_label: LayerLabel,
    pub vector: ZeonVector,
    pub norm2: Rat,
}

/// The full Z-basis of B(n): `2^n` states in layer-major order (ℓ
/// ascending, position k ascending). Pairwise orthogonal; layer ℓ holds
/// C(n,ℓ) states.
pub fn zbasis(n: usize) -> Result<Vec<ZBasisState>> {
    let all_chains = chains(n)?;
    // 1-based chain index within each α block.
    let mut index_in_block = Vec::with_capacity(all_chains.len());
    let mut seen_alpha = vec![0usize; n / 2 + 1];
    for chain in &all_chains {
        seen_alpha[chain.alpha()] += 1;
        index_in_block.push(seen_alpha[chain.alpha()]);
    }

    let mut out = Vec::with_capacity(1 << n);
    for ell in 0..=n {
        let mut position = 0usize;
        for (chain, &i) in all_chains.iter().zip(&index_in_block) {
            let Some(state) = chain.state_in_layer(ell) else {
                continue;
            };
            position += 1;
            let chain_label = ChainLabel {
                n,
                principal: chain.principal(),
                chain: i,
                state: ell - chain.alpha(),
            };
            let layer_label = chain_to_layer(&chain_label)?;
            assert_eq!(
                layer_label.position, position,
                "label arithmetic must match enumeration order"
            );
            assert_eq!(layer_label.layer, ell);
            out.push(ZBasisState {
                chain_label,
                layer_label,
                vector: state.clone(),
                norm2: chain.norms2()[ell - chain.alpha()].clone(),
            });
        }
    }
    debug_assert_eq!(out.len(), 1 << n);
    Ok(out)
}

/// The layer-ℓ state matrix W (rows: Z-basis states in k order, columns:
/// layer subsets in dictionary order) and the diagonal D of squared row
/// norms. `W·Wᵀ = D` since the rows are orthogonal.
pub fn state_matrices(n: usize, ell: usize) -> Result<(RationalMatrix, RationalMatrix)> {
    if ell > n {
        return Err(Error::ParamOutOfRange {
            name: "ell",
            value: ell.to_string(),
            reason: "layer exceeds ground-set size",
        });
    }
    let states = zbasis(n)?;
    let columns = layer_subsets(n, ell);
    let width = columns.len();
    let layer_states: Vec<&ZBasisState> = states
        .iter()
        .filter(|s| s.layer_label.layer == ell)
        .collect();
    debug_assert_eq!(layer_states.len(), width);

    let mut w = RationalMatrix::zeros(n, CanonicalOrder::GradedLex, width, width);
    let mut d = RationalMatrix::zeros(n, CanonicalOrder::GradedLex, width, width);
    for (r, state) in layer_states.iter().enumerate() {
        for (idx, c) in state.vector.terms() {
            w.set(r, layer_rank(idx), c.clone());
        }
        d.set(r, r, state.norm2.clone());
    }
    Ok((w, d))
}

/// Report of the complementation-sign sweep.
#[derive(Clone, Debug)]
pub struct SignCheckReport {
    pub chains: usize,
    pub states_checked: usize,
    pub violations: Vec<String>,
}

impl SignCheckReport {
    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Checks `complement_involution(φ̃_j) = (−1)^α · φ̃_{N−j}` for every
/// chain and every j: complementation maps a chain onto itself, reversed,
/// with a global sign.
pub fn complement_sign_check(n: usize) -> Result<SignCheckReport> {
    if n > MAX_SIGN_CHECK {
        return Err(Error::SizeOutOfRange {
            what: "complement-sign sweep",
            n,
            max: MAX_SIGN_CHECK,
        });
    }
    let all_chains = chains(n)?;
    let mut report = SignCheckReport {
        chains: all_chains.len(),
        states_checked: 0,
        violations: Vec::new(),
    };
    for chain in &all_chains {
        let cap_n = chain.principal();
        let sign = if chain.alpha() % 2 == 0 {
            Rat::one()
        } else {
            -Rat::one()
        };
        for (j, state) in chain.states().iter().enumerate() {
            report.states_checked += 1;
            let flipped = state.complement_involution();
            let expected = chain.states()[cap_n - j].scaled(&sign);
            if flipped != expected {
                report.violations.push(format!(
                    "chain {} state {}: complement differs from sign rule",
                    chain.path(),
                    j
                ));
            }
        }
    }
    Ok(report)
}
