//! Named verification checks covering every documented invariant,
//! grouped into the suites the CLI exposes.
//!
//! Each check clamps the requested sweep size to its own cost-bounded
//! cap, so a full run stays desk-scale even at the top of the range.
//! Randomized checks draw from fixed-seed generators and are therefore
//! deterministic run to run.

use num::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::matrix::RationalMatrix;
use crate::ops::{
    casimir_matrix, exp_nilpotent, exp_x_scaled, group_compose, group_element,
    group_element_product, kronecker_realization, layer_power, leibniz_entries, leibniz_factored,
    leibniz_product, op_matrix, GroupParams, OperatorKind,
};
use crate::order::{layer_rank, layer_subsets, CanonicalOrder};
use crate::rat::{binomial, binomial_i, binomial_rat, factorial_rat, rat_int, rat_pow, Rat};
use crate::schemes::{
    chain_krawtchouk_check, hadamard_via_group, hamming_matrix, johnson_from_binary_expansion,
    johnson_matrix, johnson_spectrum, johnson_via_inversion, krawtchouk_matrices, krawtchouk_poly,
    moebius, poset_incidence, spectrum_table, sylvester_hadamard, tj_decomposition,
    tj_layer_block, SchemeKind,
};
use crate::subset::{distance, Metric, SubsetIndex, MAX_DENSE};
use crate::zbasis::{
    chain_count, chain_to_layer, chains, complement_sign_check, enumerate_paths, layer_to_chain,
    state_matrices, zbasis, ChainLabel,
};
use crate::zeon::ZeonVector;

/// Outcome of one named check.
#[derive(Clone, Debug)]
pub struct CheckReport {
    pub name: &'static str,
    pub cases: usize,
    pub failures: Vec<String>,
}

impl CheckReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

/// Outcome of one suite.
#[derive(Clone, Debug)]
pub struct SuiteReport {
    pub suite: &'static str,
    pub checks: Vec<CheckReport>,
}

impl SuiteReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(CheckReport::passed)
    }

    pub fn cases(&self) -> usize {
        self.checks.iter().map(|c| c.cases).sum()
    }

    pub fn failures(&self) -> usize {
        self.checks.iter().map(|c| c.failures.len()).sum()
    }
}

/// The suites `run_suite` accepts, in canonical order.
pub const SUITE_NAMES: [&str; 4] = ["boolean-core", "sl2-ops", "zbasis", "schemes"];

/// Runs one named suite at size up to `n`.
pub fn run_suite(suite: &str, n: usize) -> Result<SuiteReport> {
    check_sweep_size(n)?;
    match suite {
        "boolean-core" => Ok(boolean_core_suite(n)),
        "sl2-ops" => Ok(sl2_ops_suite(n)),
        "zbasis" => Ok(zbasis_suite(n)),
        "schemes" => Ok(schemes_suite(n)),
        other => Err(Error::UnknownSuite(other.to_string())),
    }
}

/// Runs every suite.
pub fn run_all(n: usize) -> Result<Vec<SuiteReport>> {
    SUITE_NAMES.iter().map(|s| run_suite(s, n)).collect()
}

fn check_sweep_size(n: usize) -> Result<()> {
    if n < 1 || n > MAX_DENSE {
        return Err(Error::SizeOutOfRange {
            what: "verification sweep",
            n,
            max: MAX_DENSE,
        });
    }
    Ok(())
}

struct Ctx {
    cases: usize,
    failures: Vec<String>,
}

impl Ctx {
    fn case(&mut self, ok: bool, detail: impl FnOnce() -> String) {
        self.cases += 1;
        if !ok {
            self.failures.push(detail());
        }
    }
}

fn run(name: &'static str, body: impl FnOnce(&mut Ctx) -> Result<()>) -> CheckReport {
    let mut ctx = Ctx {
        cases: 0,
        failures: Vec::new(),
    };
    if let Err(e) = body(&mut ctx) {
        ctx.failures.push(format!("error: {e}"));
    }
    CheckReport {
        name,
        cases: ctx.cases,
        failures: ctx.failures,
    }
}

fn random_rat(rng: &mut ChaCha8Rng) -> Rat {
    let p: i64 = rng.gen_range(-6..=6);
    let q: i64 = rng.gen_range(1..=4);
    crate::rat::rat(p, q)
}

fn random_nonzero_rat(rng: &mut ChaCha8Rng) -> Rat {
    loop {
        let r = random_rat(rng);
        if !r.is_zero() {
            return r;
        }
    }
}

fn random_vector(rng: &mut ChaCha8Rng, n: usize, terms: usize) -> ZeonVector {
    let mut v = ZeonVector::zero(n);
    for _ in 0..terms {
        let bits: u32 = rng.gen_range(0..1u32 << n);
        let idx = SubsetIndex::new(n, bits).expect("bits within range");
        v.add_term(idx, random_rat(rng));
    }
    v
}

/// Coordinates of a layer-homogeneous vector in dictionary order.
fn layer_coords(v: &ZeonVector, n: usize, ell: usize) -> Vec<Rat> {
    let mut out = vec![Rat::zero(); binomial(n as u64, ell as u64) as usize];
    for (idx, c) in v.terms() {
        debug_assert_eq!(idx.card(), ell);
        out[layer_rank(idx)] = c.clone();
    }
    out
}

fn mat_vec(m: &RationalMatrix, x: &[Rat]) -> Vec<Rat> {
    (0..m.nrows())
        .map(|r| {
            let mut acc = Rat::zero();
            for c in 0..m.ncols() {
                let a = m.get(r, c);
                if !a.is_zero() && !x[c].is_zero() {
                    acc += a * &x[c];
                }
            }
            acc
        })
        .collect()
}

/// Materializes the layer-ℓ block of a layer-preserving operator by its
/// action on the layer basis.
fn layer_block_by_action(
    n: usize,
    ell: usize,
    f: impl Fn(&ZeonVector) -> Result<ZeonVector>,
) -> Result<RationalMatrix> {
    let subsets = layer_subsets(n, ell);
    let dim = subsets.len();
    let mut out = RationalMatrix::zeros(n, CanonicalOrder::GradedLex, dim, dim);
    for (col, &j) in subsets.iter().enumerate() {
        for (idx, c) in f(&ZeonVector::basis(j))?.terms() {
            out.set(layer_rank(idx), col, c.clone());
        }
    }
    Ok(out)
}

/// `exp(tT)·v` by finite series (T is nilpotent).
fn exp_t_apply(v: &ZeonVector, t: &Rat, n: usize) -> Result<ZeonVector> {
    let mut acc = v.clone();
    let mut term = v.clone();
    for k in 1..=n {
        term = OperatorKind::T.apply(&term)?.scaled(&(t / rat_int(k as i64)));
        if term.is_zero() {
            break;
        }
        acc = &acc + &term;
    }
    Ok(acc)
}

fn f64_identity(dim: usize) -> Vec<Vec<f64>> {
    (0..dim)
        .map(|r| (0..dim).map(|c| if r == c { 1.0 } else { 0.0 }).collect())
        .collect()
}

fn f64_mul(a: &[Vec<f64>], b: &[Vec<f64>]) -> Vec<Vec<f64>> {
    let dim = a.len();
    let mut out = vec![vec![0f64; dim]; dim];
    for r in 0..dim {
        for k in 0..dim {
            if a[r][k] == 0.0 {
                continue;
            }
            for c in 0..dim {
                out[r][c] += a[r][k] * b[k][c];
            }
        }
    }
    out
}

/// Floating-point `exp(s·M)` by truncated series; the spot-check oracle.
fn f64_exp(m: &[Vec<f64>], s: f64) -> Vec<Vec<f64>> {
    let dim = m.len();
    let mut acc = f64_identity(dim);
    let mut term = f64_identity(dim);
    for k in 1..=40 {
        term = f64_mul(&term, m);
        let c = s / k as f64;
        for row in term.iter_mut() {
            for x in row.iter_mut() {
                *x *= c;
            }
        }
        for r in 0..dim {
            for col in 0..dim {
                acc[r][col] += term[r][col];
            }
        }
    }
    acc
}

fn boolean_core_suite(n: usize) -> SuiteReport {
    let mut checks = Vec::new();

    checks.push(run("rank-unrank-inverse", |c| {
        let m = n.min(MAX_DENSE);
        for order in [CanonicalOrder::GradedLex, CanonicalOrder::Binary] {
            let subsets = order.subsets(m)?;
            for (r, &s) in subsets.iter().enumerate() {
                c.case(order.rank(s) == r && order.unrank(m, r)? == s, || {
                    format!("rank/unrank disagree at {s} in {} order", order.label())
                });
            }
        }
        let gl = CanonicalOrder::GradedLex;
        c.case(gl.rank(SubsetIndex::empty(m)?) == 0, || {
            "graded-lex must start at the empty set".to_string()
        });
        c.case(gl.rank(SubsetIndex::full(m)?) == (1 << m) - 1, || {
            "graded-lex must end at the full set".to_string()
        });
        // Layers occupy contiguous blocks with ascending cardinality.
        let cards: Vec<usize> = gl.subsets(m)?.iter().map(|s| s.card()).collect();
        c.case(cards.windows(2).all(|w| w[0] <= w[1]), || {
            "graded-lex cardinalities must be monotone".to_string()
        });
        Ok(())
    }));

    checks.push(run("zeon-mul-commutative-associative", |c| {
        let m = n.min(6);
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for _ in 0..25 {
            let a = random_vector(&mut rng, m, 4);
            let b = random_vector(&mut rng, m, 4);
            let v = random_vector(&mut rng, m, 4);
            c.case(a.mul(&b)? == b.mul(&a)?, || {
                format!("commutativity fails for {a} and {b}")
            });
            c.case(a.mul(&b)?.mul(&v)? == a.mul(&b.mul(&v)?)?, || {
                format!("associativity fails for {a}, {b}, {v}")
            });
        }
        Ok(())
    }));

    checks.push(run("blade-product-disjoint-union", |c| {
        let m = n.min(5);
        let subsets = CanonicalOrder::GradedLex.subsets(m)?;
        for &i in &subsets {
            for &j in &subsets {
                let product = ZeonVector::basis(i).mul(&ZeonVector::basis(j))?;
                let expected = if i.is_disjoint(j) {
                    ZeonVector::basis(i.union(j))
                } else {
                    ZeonVector::zero(m)
                };
                c.case(product == expected, || format!("e_{i}·e_{j} wrong"));
            }
        }
        Ok(())
    }));

    checks.push(run("complement-reverses-dictionary-order", |c| {
        let m = n.min(8);
        for ell in 0..=m {
            let layer = layer_subsets(m, ell);
            for &i in &layer {
                for &j in &layer {
                    if i == j {
                        continue;
                    }
                    let forward = layer_rank(i) < layer_rank(j);
                    let reversed = layer_rank(j.complement()) < layer_rank(i.complement());
                    c.case(forward == reversed, || {
                        format!("complement order fails for {i}, {j}")
                    });
                }
            }
        }
        Ok(())
    }));

    checks.push(run("hamming-johnson-ratio", |c| {
        let m = n.min(6);
        for ell in 0..=m {
            let layer = layer_subsets(m, ell);
            for &i in &layer {
                for &j in &layer {
                    let h = distance(Metric::Hamming, i, j)?;
                    let jd = distance(Metric::Johnson, i, j)?;
                    c.case(h == 2 * jd, || format!("distance ratio fails for {i}, {j}"));
                }
            }
        }
        Ok(())
    }));

    checks.push(run("johnson-complement-isometry", |c| {
        let m = n.min(8);
        for ell in 0..=m {
            let layer = layer_subsets(m, ell);
            for &i in &layer {
                c.case(i.complement().complement() == i, || {
                    format!("complement not involutive at {i}")
                });
                for &j in &layer {
                    let plain = distance(Metric::Johnson, i, j)?;
                    let flipped = distance(Metric::Johnson, i.complement(), j.complement())?;
                    c.case(plain == flipped, || {
                        format!("complement isometry fails for {i}, {j}")
                    });
                }
            }
        }
        Ok(())
    }));

    checks.push(run("complement-intertwines-raising", |c| {
        let m = n.min(6);
        let mut rng = ChaCha8Rng::seed_from_u64(13);
        for _ in 0..100 {
            let v = random_vector(&mut rng, m, 4);
            let lhs = OperatorKind::T.apply(&v.complement_involution())?;
            let rhs = OperatorKind::TStar.apply(&v)?.complement_involution();
            c.case(lhs == rhs, || format!("T∘′ ≠ ′∘T* on {v}"));
        }
        Ok(())
    }));

    checks.push(run("involution-isometric", |c| {
        let m = n.min(6);
        let mut rng = ChaCha8Rng::seed_from_u64(17);
        for _ in 0..50 {
            let v = random_vector(&mut rng, m, 4);
            let w = random_vector(&mut rng, m, 4);
            c.case(v.complement_involution().complement_involution() == v, || {
                format!("involution not involutive on {v}")
            });
            let plain = v.inner(&w)?;
            let flipped = v.complement_involution().inner(&w.complement_involution())?;
            c.case(plain == flipped, || {
                format!("involution not isometric on {v}, {w}")
            });
        }
        Ok(())
    }));

    checks.push(run("vector-text-round-trip", |c| {
        let m = n.min(6);
        let mut rng = ChaCha8Rng::seed_from_u64(19);
        for _ in 0..50 {
            let v = random_vector(&mut rng, m, 4);
            c.case(ZeonVector::parse_text(&v.to_text(), m)? == v, || {
                format!("text round trip fails on {v}")
            });
        }
        Ok(())
    }));

    SuiteReport {
        suite: "boolean-core",
        checks,
    }
}

fn sl2_ops_suite(n: usize) -> SuiteReport {
    let mut checks = Vec::new();

    checks.push(run("fermi-anticommutation", |c| {
        let m = n.min(8);
        let subsets = CanonicalOrder::GradedLex.subsets(m)?;
        for i in 1..=m {
            let e_hat = OperatorKind::EHat(i);
            let d_hat = OperatorKind::DeltaHat(i);
            for &idx in &subsets {
                let v = ZeonVector::basis(idx);
                let anti = &e_hat.apply(&d_hat.apply(&v)?)? + &d_hat.apply(&e_hat.apply(&v)?)?;
                c.case(anti == v, || format!("anticommutator fails at i={i}, {idx}"));
                let ede = e_hat.apply(&d_hat.apply(&e_hat.apply(&v)?)?)?;
                c.case(ede == e_hat.apply(&v)?, || {
                    format!("triple êδ̂ê fails at i={i}, {idx}")
                });
                let ded = d_hat.apply(&e_hat.apply(&d_hat.apply(&v)?)?)?;
                c.case(ded == d_hat.apply(&v)?, || {
                    format!("triple δ̂êδ̂ fails at i={i}, {idx}")
                });
                let h = OperatorKind::HHat(i).apply(&v)?;
                let ed = e_hat.apply(&d_hat.apply(&v)?)?;
                c.case(h == &v - &ed.scaled(&rat_int(2)), || {
                    format!("ĥ = I − 2êδ̂ fails at i={i}, {idx}")
                });
            }
        }
        Ok(())
    }));

    checks.push(run("standard-triple-commutators", |c| {
        let m = n.min(8);
        let t = OperatorKind::T;
        let t_star = OperatorKind::TStar;
        let u = OperatorKind::U;
        for &idx in &CanonicalOrder::GradedLex.subsets(m)? {
            let v = ZeonVector::basis(idx);
            let comm_ut = &t_star.apply(&t.apply(&v)?)? - &t.apply(&t_star.apply(&v)?)?;
            c.case(comm_ut == u.apply(&v)?, || {
                format!("[T*,T] ≠ U at {idx}")
            });
            let comm_tu = &t.apply(&u.apply(&v)?)? - &u.apply(&t.apply(&v)?)?;
            c.case(comm_tu == t.apply(&v)?.scaled(&rat_int(2)), || {
                format!("[T,U] ≠ 2T at {idx}")
            });
            let comm_ut2 = &u.apply(&t_star.apply(&v)?)? - &t_star.apply(&u.apply(&v)?)?;
            c.case(comm_ut2 == t_star.apply(&v)?.scaled(&rat_int(2)), || {
                format!("[U,T*] ≠ 2T* at {idx}")
            });
            let layered = OperatorKind::Layer.apply(&v)?;
            let expect_u = &v.scaled(&rat_int(m as i64)) - &layered.scaled(&rat_int(2));
            c.case(u.apply(&v)? == expect_u, || format!("U ≠ nI − 2ℒ at {idx}"));
        }
        Ok(())
    }));

    checks.push(run("divided-power-inclusion", |c| {
        let m = n.min(8);
        let subsets = CanonicalOrder::GradedLex.subsets(m)?;
        for k in 0..=m {
            for &j in &subsets {
                let image = OperatorKind::DividedPowerT(k).apply(&ZeonVector::basis(j))?;
                let mut expected = ZeonVector::zero(m);
                for &i in &subsets {
                    if j.is_subset_of(i) && i.minus(j).card() == k {
                        expected.add_term(i, Rat::one());
                    }
                }
                c.case(image == expected, || {
                    format!("T^{k}/{k}! incidence fails at column {j}")
                });
            }
        }
        Ok(())
    }));

    checks.push(run("lowering-is-adjoint", |c| {
        let m = n.min(6);
        let t = op_matrix(OperatorKind::T, m, CanonicalOrder::GradedLex)?;
        let t_star = op_matrix(OperatorKind::TStar, m, CanonicalOrder::GradedLex)?;
        c.case(t_star == t.transpose(), || {
            "matrix of T* must be the transpose of T".to_string()
        });
        let mut rng = ChaCha8Rng::seed_from_u64(23);
        for _ in 0..25 {
            let v = random_vector(&mut rng, m, 4);
            let w = random_vector(&mut rng, m, 4);
            let lhs = OperatorKind::T.apply(&v)?.inner(&w)?;
            let rhs = v.inner(&OperatorKind::TStar.apply(&w)?)?;
            c.case(lhs == rhs, || format!("⟨Tv,w⟩ ≠ ⟨v,T*w⟩ for {v}, {w}"));
        }
        Ok(())
    }));

    checks.push(run("t-plus-tstar-is-distance-one", |c| {
        let m = n.min(8);
        let x = op_matrix(OperatorKind::T, m, CanonicalOrder::GradedLex)?
            .add(&op_matrix(OperatorKind::TStar, m, CanonicalOrder::GradedLex)?);
        let h1 = hamming_matrix(m, 1, CanonicalOrder::GradedLex)?;
        c.case(x == h1.matrix, || {
            "T + T* must equal the distance-one relation matrix".to_string()
        });
        Ok(())
    }));

    checks.push(run("layer-scaling", |c| {
        let m = n.min(6);
        let t = op_matrix(OperatorKind::T, m, CanonicalOrder::GradedLex)?;
        let mut rng = ChaCha8Rng::seed_from_u64(29);
        for _ in 0..5 {
            let a = random_rat(&mut rng);
            let diag = layer_power(&a, m, CanonicalOrder::GradedLex)?;
            let lhs = diag.mul(&exp_nilpotent(&t, &Rat::one(), m));
            let rhs = exp_nilpotent(&t, &a, m).mul(&diag);
            c.case(lhs == rhs, || format!("a^ℒ exp(T) ≠ exp(aT) a^ℒ at a = {a}"));
        }
        Ok(())
    }));

    checks.push(run("group-entry-vs-product", |c| {
        let m = n.min(6);
        let mut rng = ChaCha8Rng::seed_from_u64(31);
        // 50 samples spread over the sizes: the identity is entrywise
        // polynomial, so small sizes carry the same evidence per sample
        // at a fraction of the dense-product cost.
        let per = 50usize.div_ceil(m);
        for size in 1..=m {
            for _ in 0..per {
                let p = GroupParams::new(
                    random_rat(&mut rng),
                    random_rat(&mut rng),
                    random_rat(&mut rng),
                );
                let fast = group_element(&p, size, CanonicalOrder::GradedLex)?;
                let slow = group_element_product(&p, size, CanonicalOrder::GradedLex)?;
                c.case(fast == slow, || {
                    format!("entry formula differs at {p:?}, n = {size}")
                });
            }
        }
        Ok(())
    }));

    checks.push(run("group-law", |c| {
        let m = n.min(6);
        let mut rng = ChaCha8Rng::seed_from_u64(37);
        // 50 samples spread over the sizes, as in group-entry-vs-product.
        let per = 50usize.div_ceil(m);
        for size in 1..=m {
            for _ in 0..per {
                let (p1, p2) = loop {
                    let p1 = GroupParams::new(
                        random_rat(&mut rng),
                        random_nonzero_rat(&mut rng),
                        random_rat(&mut rng),
                    );
                    let p2 = GroupParams::new(
                        random_rat(&mut rng),
                        random_nonzero_rat(&mut rng),
                        random_rat(&mut rng),
                    );
                    if !(Rat::one() + &p2.s * &p1.t).is_zero() {
                        break (p1, p2);
                    }
                };
                let (scalar, composed) = group_compose(&p1, &p2, size)?;
                let product = group_element(&p1, size, CanonicalOrder::GradedLex)?
                    .mul(&group_element(&p2, size, CanonicalOrder::GradedLex)?);
                let closed =
                    group_element(&composed, size, CanonicalOrder::GradedLex)?.scaled(&scalar);
                c.case(product == closed, || {
                    format!("group law fails for {p1:?}, {p2:?}, n = {size}")
                });
            }
        }
        // The degenerate direction must be rejected, not mis-evaluated.
        let p = GroupParams::new(rat_int(1), rat_int(1), rat_int(-1));
        c.case(group_compose(&p, &p, m).is_err(), || {
            "singular composition must error".to_string()
        });
        Ok(())
    }));

    checks.push(run("leibniz-rule", |c| {
        let m = n.min(6);
        let mut rng = ChaCha8Rng::seed_from_u64(41);
        // 20 samples spread over the sizes.
        let per = 20usize.div_ceil(m);
        for size in 1..=m {
            for _ in 0..per {
                let a = random_rat(&mut rng);
                let t = random_rat(&mut rng);
                let entries = leibniz_entries(&t, &a, size, CanonicalOrder::GradedLex)?;
                let product = leibniz_product(&t, &a, size, CanonicalOrder::GradedLex)?;
                c.case(entries == product, || {
                    format!("Leibniz entries differ from product at a={a}, t={t}, n={size}")
                });
                if !(Rat::one() + &a * &t).is_zero() {
                    let factored = leibniz_factored(&t, &a, size, CanonicalOrder::GradedLex)?;
                    c.case(entries == factored, || {
                        format!("Leibniz factored form differs at a={a}, t={t}, n={size}")
                    });
                }
            }
        }
        Ok(())
    }));

    checks.push(run("exponentiation-rational", |c| {
        let m = n.min(6);
        let subsets = CanonicalOrder::GradedLex.subsets(m)?;
        for v in [crate::rat::rat(1, 2), crate::rat::rat(-1, 3), rat_int(2)] {
            let g = exp_x_scaled(&v, m, CanonicalOrder::GradedLex)?;
            for (r, &i) in subsets.iter().enumerate() {
                for (col, &j) in subsets.iter().enumerate() {
                    let d = i.sym_diff(j).card() as i64;
                    c.case(*g.get(r, col) == rat_pow(&v, d), || {
                        format!("entry ({i},{j}) ≠ v^dist at v = {v}")
                    });
                }
            }
        }
        Ok(())
    }));

    checks.push(run("exponentiation-float-spot", |c| {
        // exp(0.3·(T+T*)) at n = 3 against cosh³(0.3)·tanh(0.3)^dist.
        let x = op_matrix(OperatorKind::T, 3, CanonicalOrder::GradedLex)?
            .add(&op_matrix(OperatorKind::TStar, 3, CanonicalOrder::GradedLex)?);
        let exp_f = f64_exp(&x.to_f64(), 0.3);
        let subsets = CanonicalOrder::GradedLex.subsets(3)?;
        let (ch, th) = (0.3f64.cosh(), 0.3f64.tanh());
        for (r, &i) in subsets.iter().enumerate() {
            for (col, &j) in subsets.iter().enumerate() {
                let d = i.sym_diff(j).card() as i32;
                let predicted = ch.powi(3) * th.powi(d);
                c.case((exp_f[r][col] - predicted).abs() <= 1e-9, || {
                    format!("float exp misses at ({i},{j})")
                });
            }
        }
        // ê_1 + δ̂_1 squares to the identity, so its exponential splits
        // into cosh·I + sinh·A.
        let m = n.min(4);
        let a = op_matrix(OperatorKind::EHat(1), m, CanonicalOrder::GradedLex)?
            .add(&op_matrix(OperatorKind::DeltaHat(1), m, CanonicalOrder::GradedLex)?);
        c.case(a.mul(&a).is_identity(), || {
            "(ê_1+δ̂_1)² must be the identity".to_string()
        });
        let exp_a = f64_exp(&a.to_f64(), 0.3);
        let af = a.to_f64();
        let sh = 0.3f64.sinh();
        for r in 0..exp_a.len() {
            for col in 0..exp_a.len() {
                let predicted = if r == col { ch } else { 0.0 } + sh * af[r][col];
                c.case((exp_a[r][col] - predicted).abs() <= 1e-9, || {
                    format!("cosh/sinh split misses at ({r},{col})")
                });
            }
        }
        Ok(())
    }));

    checks.push(run("tt-star-layer-identities", |c| {
        let m = n.min(8);
        for ell in 0..=m {
            let dim = binomial(m as u64, ell as u64) as usize;
            let j1 = if ell.min(m - ell) >= 1 {
                johnson_matrix(m, ell, 1)?.matrix
            } else {
                RationalMatrix::zeros(m, CanonicalOrder::GradedLex, dim, dim)
            };
            let tt_star = layer_block_by_action(m, ell, |v| {
                OperatorKind::T.apply(&OperatorKind::TStar.apply(v)?)
            })?;
            let expect = RationalMatrix::identity_scaled(
                m,
                CanonicalOrder::GradedLex,
                dim,
                &rat_int(ell as i64),
            )
            .add(&j1);
            c.case(tt_star == expect, || {
                format!("TT* ≠ ℓI + J_1 on layer {ell}")
            });
            let t_star_t = layer_block_by_action(m, ell, |v| {
                OperatorKind::TStar.apply(&OperatorKind::T.apply(v)?)
            })?;
            let expect = RationalMatrix::identity_scaled(
                m,
                CanonicalOrder::GradedLex,
                dim,
                &rat_int((m - ell) as i64),
            )
            .add(&j1);
            c.case(t_star_t == expect, || {
                format!("T*T ≠ (n−ℓ)I + J_1 on layer {ell}")
            });
        }
        Ok(())
    }));

    checks.push(run("casimir", |c| {
        let m = n.min(6);
        let casimir = casimir_matrix(m, CanonicalOrder::GradedLex)?;
        for op in [OperatorKind::T, OperatorKind::TStar, OperatorKind::U] {
            let other = op_matrix(op, m, CanonicalOrder::GradedLex)?;
            c.case(casimir.commutator(&other).is_zero(), || {
                format!("Casimir does not commute with {op:?}")
            });
        }
        for state in zbasis(m)? {
            let image = OperatorKind::Casimir.apply(&state.vector)?;
            let eigen = rat_int(((state.chain_label.principal + 1) * (state.chain_label.principal + 1)) as i64);
            c.case(image == state.vector.scaled(&eigen), || {
                format!(
                    "Casimir eigenvalue wrong on chain N={}, state {}",
                    state.chain_label.principal, state.chain_label.state
                )
            });
        }
        Ok(())
    }));

    checks.push(run("kronecker-realization", |c| {
        let m = n.min(6);
        let kr = kronecker_realization(m)?;
        for i in 1..=m {
            let aligned = kr.factors[i - 1]
                .relabeled(&kr.perm)
                .with_order_tag(CanonicalOrder::GradedLex);
            let hat = op_matrix(OperatorKind::EHat(i), m, CanonicalOrder::GradedLex)?;
            c.case(aligned == hat, || {
                format!("Kronecker factor {i} is not permutation-equivalent to ê_{i}")
            });
        }
        Ok(())
    }));

    SuiteReport {
        suite: "sl2-ops",
        checks,
    }
}

fn zbasis_suite(n: usize) -> SuiteReport {
    let mut checks = Vec::new();

    checks.push(run("vacuum-counts", |c| {
        let m = n.min(MAX_DENSE);
        let paths = enumerate_paths(m)?;
        for alpha in 0..=m / 2 {
            let count = paths.iter().filter(|p| p.descents() == alpha).count();
            c.case(count == chain_count(m, alpha), || {
                format!("vacuum count wrong at α = {alpha}")
            });
        }
        // The chains exactly fill the space: Σ_α count·(N+1) = 2^n.
        let total: usize = (0..=m / 2)
            .map(|alpha| chain_count(m, alpha) * (m - 2 * alpha + 1))
            .sum();
        c.case(total == 1 << m, || "chain sizes must sum to 2^n".to_string());
        Ok(())
    }));

    checks.push(run("chain-structure", |c| {
        let m = n.min(8);
        // Building a chain re-derives and checks the raising, lowering,
        // eigenvalue, and termination relations internally.
        for chain in chains(m)? {
            let alpha = chain.alpha();
            c.case(chain.principal() == m - 2 * alpha, || {
                format!("principal number wrong for path {}", chain.path())
            });
            c.case(chain.states().len() == chain.principal() + 1, || {
                format!("chain length wrong for path {}", chain.path())
            });
            for (j, state) in chain.states().iter().enumerate() {
                c.case(state.homogeneous_layer() == Some(alpha + j), || {
                    format!("state {j} of {} is not layer-homogeneous", chain.path())
                });
            }
        }
        Ok(())
    }));

    checks.push(run("zbasis-orthogonal", |c| {
        let m = n.min(8);
        let states = zbasis(m)?;
        c.case(states.len() == 1 << m, || "state count must be 2^n".to_string());
        for ell in 0..=m {
            let layer: Vec<_> = states
                .iter()
                .filter(|s| s.layer_label.layer == ell)
                .collect();
            c.case(layer.len() == binomial(m as u64, ell as u64) as usize, || {
                format!("layer {ell} has the wrong number of states")
            });
            for (a, s) in layer.iter().enumerate() {
                for t in layer.iter().skip(a + 1) {
                    c.case(s.vector.inner(&t.vector)?.is_zero(), || {
                        format!(
                            "states k={} and k={} in layer {ell} are not orthogonal",
                            s.layer_label.position, t.layer_label.position
                        )
                    });
                }
            }
        }
        Ok(())
    }));

    checks.push(run("norm-binomial-scaling", |c| {
        let m = n.min(8);
        for chain in chains(m)? {
            let base = chain.states()[0].norm2();
            let cap_n = chain.principal();
            for (j, state) in chain.states().iter().enumerate() {
                let expected = binomial_rat(cap_n as u64, j as u64) * &base;
                c.case(state.norm2() == expected, || {
                    format!("norm scaling fails at j={j} on {}", chain.path())
                });
                c.case(chain.norms2()[j] == expected, || {
                    format!("stored norm wrong at j={j} on {}", chain.path())
                });
            }
        }
        Ok(())
    }));

    checks.push(run("label-round-trip", |c| {
        let m = n.min(8);
        for state in zbasis(m)? {
            let forward = chain_to_layer(&state.chain_label)?;
            c.case(forward == state.layer_label, || {
                format!("layer label mismatch at {:?}", state.chain_label)
            });
            let back = layer_to_chain(&forward)?;
            c.case(back == state.chain_label, || {
                format!("label round trip fails at {:?}", state.chain_label)
            });
        }
        if m >= 6 {
            let lbl = ChainLabel {
                n: 6,
                principal: 2,
                chain: 1,
                state: 0,
            };
            let layer = chain_to_layer(&lbl)?;
            c.case((layer.layer, layer.position) == (2, 7), || {
                "|6,2,1,0⟩ must sit at layer 2, position 7".to_string()
            });
        }
        Ok(())
    }));

    checks.push(run("state-matrices-orthogonality", |c| {
        let m = n.min(8);
        for ell in 0..=m {
            let (w, d) = state_matrices(m, ell)?;
            c.case(w.mul(&w.transpose()) == d, || {
                format!("W·Wᵀ ≠ D on layer {ell}")
            });
        }
        Ok(())
    }));

    checks.push(run("complement-sign", |c| {
        let m = n.min(8);
        let report = complement_sign_check(m)?;
        c.cases += report.states_checked;
        for violation in report.violations {
            c.failures.push(violation);
        }
        Ok(())
    }));

    checks.push(run("vacuum-leibniz-inner", |c| {
        let m = n.min(6);
        let mut rng = ChaCha8Rng::seed_from_u64(43);
        let all_chains = chains(m)?;
        for _ in 0..3 {
            let s = random_rat(&mut rng);
            let t = random_rat(&mut rng);
            let raised: Vec<ZeonVector> = all_chains
                .iter()
                .map(|chain| exp_t_apply(chain.vacuum(), &t, m))
                .collect::<Result<_>>()?;
            let raised_other: Vec<ZeonVector> = all_chains
                .iter()
                .map(|chain| exp_t_apply(chain.vacuum(), &s, m))
                .collect::<Result<_>>()?;
            for (a, left) in all_chains.iter().enumerate() {
                for (b, right) in all_chains.iter().enumerate() {
                    if left.alpha() != right.alpha() {
                        continue;
                    }
                    let ell = left.alpha();
                    let lhs = raised[a].inner(&raised_other[b])?;
                    let base = left.vacuum().inner(right.vacuum())?;
                    let factor = rat_pow(&(Rat::one() + &s * &t), (m - 2 * ell) as i64);
                    c.case(lhs == factor * base, || {
                        format!(
                            "vacuum Leibniz inner product fails for {} vs {}",
                            left.path(),
                            right.path()
                        )
                    });
                }
            }
        }
        Ok(())
    }));

    checks.push(run("diagonal-operators", |c| {
        let m = n.min(8);
        for state in zbasis(m)? {
            let v = &state.vector;
            let cap_n = state.chain_label.principal as i64;
            let j = state.chain_label.state as i64;
            let ell = state.layer_label.layer as i64;
            let tt_star = OperatorKind::T.apply(&OperatorKind::TStar.apply(v)?)?;
            c.case(tt_star == v.scaled(&rat_int(j * (cap_n + 1 - j))), || {
                format!("TT* eigenvalue wrong at {:?}", state.chain_label)
            });
            let t_star_t = OperatorKind::TStar.apply(&OperatorKind::T.apply(v)?)?;
            c.case(t_star_t == v.scaled(&rat_int((j + 1) * (cap_n - j))), || {
                format!("T*T eigenvalue wrong at {:?}", state.chain_label)
            });
            let u = OperatorKind::U.apply(v)?;
            c.case(u == v.scaled(&rat_int(cap_n - 2 * j)), || {
                format!("U eigenvalue wrong at {:?}", state.chain_label)
            });
            let layered = OperatorKind::Layer.apply(v)?;
            c.case(layered == v.scaled(&rat_int(ell)), || {
                format!("ℒ eigenvalue wrong at {:?}", state.chain_label)
            });
            // T_m is diagonal too, with eigenvalue C(j,m)·C(N−j+m, m).
            for dp in 0..=3.min(m) {
                let image = OperatorKind::Tj(dp).apply(v)?;
                let eigen = rat_int(
                    (binomial_i(j, dp as i64) * binomial_i(cap_n - j + dp as i64, dp as i64))
                        as i64,
                );
                c.case(image == v.scaled(&eigen), || {
                    format!("T_{dp} eigenvalue wrong at {:?}", state.chain_label)
                });
            }
        }
        Ok(())
    }));

    SuiteReport {
        suite: "zbasis",
        checks,
    }
}

fn schemes_suite(n: usize) -> SuiteReport {
    let mut checks = Vec::new();

    checks.push(run("krawtchouk-hamming", |c| {
        let m = n.min(8);
        let evaluated = krawtchouk_matrices(m, CanonicalOrder::GradedLex)?;
        for (j, lhs) in evaluated.iter().enumerate() {
            let poly = krawtchouk_poly(j, m)?;
            c.case(poly.coeffs[j] == factorial_rat(j).recip(), || {
                format!("leading coefficient of K_{j}/{j}! must be 1/{j}!")
            });
            let rhs = hamming_matrix(m, j, CanonicalOrder::GradedLex)?;
            c.case(*lhs == rhs.matrix, || {
                format!("K_{j}(X,{m})/{j}! differs from the Hamming matrix")
            });
        }
        Ok(())
    }));

    checks.push(run("chain-krawtchouk", |c| {
        let m = n.min(crate::schemes::MAX_CHAIN_CHECK);
        let report = chain_krawtchouk_check(m)?;
        c.cases += report.states_checked;
        for violation in report.violations {
            c.failures.push(violation);
        }
        Ok(())
    }));

    checks.push(run("johnson-binary-expansion", |c| {
        let m = n.min(8);
        for ell in 0..=m {
            let extracted = johnson_from_binary_expansion(m, ell)?;
            c.case(extracted.len() == ell.min(m - ell) + 1, || {
                format!("extraction count wrong at ℓ = {ell}")
            });
            for scheme in extracted {
                let SchemeKind::Johnson { k, .. } = scheme.kind else {
                    c.case(false, || "extraction must tag Johnson matrices".to_string());
                    continue;
                };
                c.case(scheme.matrix == johnson_matrix(m, ell, k)?.matrix, || {
                    format!("extracted J_{k} wrong at ℓ = {ell}")
                });
            }
        }
        Ok(())
    }));

    checks.push(run("tj-inversion-pair", |c| {
        let m = n.min(8);
        for ell in 0..=m {
            let kmax = ell.min(m - ell);
            for j in 0..=kmax {
                let block = tj_layer_block(m, ell, j)?;
                let coeffs = tj_decomposition(m, ell, j)?;
                let mut expect = RationalMatrix::zeros(
                    m,
                    CanonicalOrder::GradedLex,
                    block.nrows(),
                    block.ncols(),
                );
                for (k, coeff) in coeffs.iter().enumerate() {
                    if !coeff.is_zero() {
                        expect = expect.add(&johnson_matrix(m, ell, k)?.matrix.scaled(coeff));
                    }
                }
                c.case(block == expect, || {
                    format!("T_{j} decomposition fails at ℓ = {ell}")
                });
            }
            for k in 0..=kmax {
                let inverted = johnson_via_inversion(m, ell, k)?;
                c.case(inverted.matrix == johnson_matrix(m, ell, k)?.matrix, || {
                    format!("binomial inversion fails for J_{k} at ℓ = {ell}")
                });
            }
        }
        Ok(())
    }));

    checks.push(run("johnson-spectrum", |c| {
        let m = n.min(8);
        let states = zbasis(m)?;
        for ell in 0..=m {
            let kmax = ell.min(m - ell);
            let layer: Vec<_> = states
                .iter()
                .filter(|s| s.layer_label.layer == ell)
                .collect();
            let mut per_alpha = vec![0usize; kmax + 1];
            for s in &layer {
                per_alpha[s.chain_label.alpha()] += 1;
            }
            for (alpha, &count) in per_alpha.iter().enumerate() {
                c.case(count == chain_count(m, alpha), || {
                    format!("eigenvalue multiplicity wrong at ℓ = {ell}, α = {alpha}")
                });
            }
            let coords: Vec<Vec<Rat>> = layer
                .iter()
                .map(|s| layer_coords(&s.vector, m, ell))
                .collect();
            for k in 0..=kmax {
                let jk = johnson_matrix(m, ell, k)?;
                for (s, x) in layer.iter().zip(&coords) {
                    let image = mat_vec(&jk.matrix, x);
                    let lambda = johnson_spectrum(m, ell, k, s.chain_label.alpha())?;
                    let expected: Vec<Rat> = x.iter().map(|v| v * &lambda).collect();
                    c.case(image == expected, || {
                        format!(
                            "J_{k} eigenvalue fails at ℓ = {ell}, k-position {}",
                            s.layer_label.position
                        )
                    });
                }
            }
        }
        if m >= 4 {
            let table = spectrum_table(4, 2, 1)?;
            let expect = vec![
                (0usize, rat_int(4), 1usize),
                (1, rat_int(0), 3),
                (2, rat_int(-2), 2),
            ];
            c.case(table == expect, || "printed spectrum table mismatch".to_string());
        }
        Ok(())
    }));

    checks.push(run("hamming-generating-function", |c| {
        let m = n.min(6);
        let subsets = CanonicalOrder::GradedLex.subsets(m)?;
        let relations: Vec<RationalMatrix> = (0..=m)
            .map(|j| Ok(hamming_matrix(m, j, CanonicalOrder::GradedLex)?.matrix))
            .collect::<Result<_>>()?;
        // Per entry, the degree profile across j is the distance indicator,
        // which is the coefficient statement of Σ_j v^j·H_j = [v^{dist}].
        for (r, &i) in subsets.iter().enumerate() {
            for (col, &jset) in subsets.iter().enumerate() {
                let d = distance(Metric::Hamming, i, jset)?;
                let profile_ok = (0..=m).all(|j| {
                    let expected = if j == d { Rat::one() } else { Rat::zero() };
                    *relations[j].get(r, col) == expected
                });
                c.case(profile_ok, || {
                    format!("degree profile wrong at entry ({i},{jset})")
                });
            }
        }
        // Specialized at a rational point the sum collapses to g(v,1−v²,v).
        let v = crate::rat::rat(1, 2);
        let mut sum = RationalMatrix::zeros(m, CanonicalOrder::GradedLex, 1 << m, 1 << m);
        for (j, relation) in relations.iter().enumerate() {
            sum = sum.add(&relation.scaled(&rat_pow(&v, j as i64)));
        }
        c.case(sum == exp_x_scaled(&v, m, CanonicalOrder::GradedLex)?, || {
            "generating function specialization fails at v = 1/2".to_string()
        });
        Ok(())
    }));

    checks.push(run("johnson-layer-specialization", |c| {
        let m = n.min(8);
        for t in [rat_int(1), crate::rat::rat(1, 2), crate::rat::rat(-2, 3)] {
            let g = group_element(
                &GroupParams::new(t.clone(), Rat::one(), t.clone()),
                m,
                CanonicalOrder::GradedLex,
            )?;
            for ell in 0..=m {
                let block = g.layer_block(ell)?;
                let layer = layer_subsets(m, ell);
                let one_plus_t2 = Rat::one() + &t * &t;
                for (r, &i) in layer.iter().enumerate() {
                    for (col, &jset) in layer.iter().enumerate() {
                        let dist = distance(Metric::Johnson, i, jset)? as i64;
                        let expected =
                            rat_pow(&t, 2 * dist) * rat_pow(&one_plus_t2, ell as i64 - dist);
                        c.case(*block.get(r, col) == expected, || {
                            format!("layer entry ({i},{jset}) wrong at t = {t}, ℓ = {ell}")
                        });
                    }
                }
            }
        }
        Ok(())
    }));

    checks.push(run("johnson-commute", |c| {
        let m = n.min(8);
        for ell in 0..=m {
            let kmax = ell.min(m - ell);
            let mats: Vec<RationalMatrix> = (0..=kmax)
                .map(|k| Ok(johnson_matrix(m, ell, k)?.matrix))
                .collect::<Result<_>>()?;
            for a in 0..=kmax {
                for b in a + 1..=kmax {
                    c.case(mats[a].commutator(&mats[b]).is_zero(), || {
                        format!("J_{a} and J_{b} do not commute on layer {ell}")
                    });
                }
            }
        }
        Ok(())
    }));

    checks.push(run("scheme-row-sums", |c| {
        let m = n.min(8);
        for j in 0..=m {
            let h = hamming_matrix(m, j, CanonicalOrder::GradedLex)?;
            let expected = rat_int(binomial(m as u64, j as u64) as i64);
            for r in 0..h.matrix.nrows() {
                c.case(h.matrix.row_sum(r) == expected, || {
                    format!("Hamming row sum wrong at j = {j}, row {r}")
                });
            }
        }
        for ell in 0..=m {
            for k in 0..=ell.min(m - ell) {
                let jk = johnson_matrix(m, ell, k)?;
                let expected = rat_int(
                    (binomial(ell as u64, k as u64) * binomial((m - ell) as u64, k as u64)) as i64,
                );
                for r in 0..jk.matrix.nrows() {
                    c.case(jk.matrix.row_sum(r) == expected, || {
                        format!("Johnson row sum wrong at ℓ = {ell}, k = {k}, row {r}")
                    });
                }
            }
        }
        Ok(())
    }));

    checks.push(run("poset-moebius-inverse", |c| {
        let m = n.min(8);
        let subsets = CanonicalOrder::GradedLex.subsets(m)?;
        for t in [rat_int(1), crate::rat::rat(1, 2)] {
            let zeta = poset_incidence(m, &t, CanonicalOrder::GradedLex)?;
            let mu = moebius(m, &t, CanonicalOrder::GradedLex)?;
            c.case(zeta.mul(&mu).is_identity(), || {
                format!("E·M ≠ I at t = {t}")
            });
        }
        // At t = 1 the pair is the classical zeta/Möbius pair.
        let zeta = poset_incidence(m, &rat_int(1), CanonicalOrder::GradedLex)?;
        let mu = moebius(m, &rat_int(1), CanonicalOrder::GradedLex)?;
        for (r, &i) in subsets.iter().enumerate() {
            for (col, &jset) in subsets.iter().enumerate() {
                let expect_zeta = if i.is_subset_of(jset) {
                    Rat::one()
                } else {
                    Rat::zero()
                };
                let gap = jset.minus(i).card() as u32;
                let expect_mu = if !i.is_subset_of(jset) {
                    Rat::zero()
                } else if gap % 2 == 0 {
                    Rat::one()
                } else {
                    -Rat::one()
                };
                c.case(*zeta.get(r, col) == expect_zeta, || {
                    format!("zeta entry wrong at ({i},{jset})")
                });
                c.case(*mu.get(r, col) == expect_mu, || {
                    format!("Möbius entry wrong at ({i},{jset})")
                });
            }
        }
        Ok(())
    }));

    checks.push(run("sylvester-hadamard", |c| {
        let m = n.min(8);
        let sylvester = sylvester_hadamard(m)?;
        let group = hadamard_via_group(m, CanonicalOrder::Binary)?;
        c.case(sylvester == group, || {
            "Kronecker build differs from g(1,−2,1) in binary order".to_string()
        });
        for r in 0..1usize << m {
            for col in 0..1usize << m {
                let parity = (r & col).count_ones() % 2;
                let expected = if parity == 0 { Rat::one() } else { -Rat::one() };
                c.case(*sylvester.get(r, col) == expected, || {
                    format!("sign pattern wrong at ({r},{col})")
                });
            }
        }
        let had = GroupParams::new(rat_int(1), rat_int(-2), rat_int(1));
        let (scalar, composed) = group_compose(&had, &had, m)?;
        c.case(
            scalar == rat_int(1 << m) && composed == GroupParams::identity(),
            || "g(1,−2,1)² must be 2^n times the identity".to_string(),
        );
        let small = n.min(6);
        let h_small = sylvester_hadamard(small)?;
        let square = h_small.mul(&h_small.transpose());
        c.case(
            square
                == RationalMatrix::identity_scaled(
                    small,
                    CanonicalOrder::Binary,
                    1 << small,
                    &rat_int(1 << small),
                ),
            || "H·Hᵀ ≠ 2^n·I".to_string(),
        );
        Ok(())
    }));

    SuiteReport {
        suite: "schemes",
        checks,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn all_suites_pass_at_desk_scale() {
        for report in run_all(4).unwrap() {
            for check in &report.checks {
                assert!(
                    check.passed(),
                    "{}/{} failed: {:?}",
                    report.suite,
                    check.name,
                    check.failures
                );
                assert!(check.cases > 0, "{} ran no cases", check.name);
            }
        }
    }

    #[test]
    fn suite_names_are_exhaustive() {
        for name in SUITE_NAMES {
            assert!(run_suite(name, 2).is_ok());
        }
        assert!(matches!(
            run_suite("nonsense", 2),
            Err(Error::UnknownSuite(_))
        ));
        assert!(run_suite("schemes", 0).is_err());
        assert!(run_suite("schemes", 13).is_err());
    }
}
