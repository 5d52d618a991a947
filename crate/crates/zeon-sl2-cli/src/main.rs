//! Command-line surface over the library: operator and group matrices,
//! state charts, scheme matrices, Krawtchouk polynomials, spectra,
//! poset pairs, Hadamard builds, and the verification suites.
//!
//! Data goes to stdout (or `--output`), diagnostics to stderr, one line
//! each. Exit codes: 0 success, 1 verification failure, 2 argument or
//! range errors. Output is byte-deterministic for fixed arguments.

use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use zeon_sl2::emit;
use zeon_sl2::ops::{group_element, op_matrix, GroupParams, OperatorKind};
use zeon_sl2::order::CanonicalOrder;
use zeon_sl2::rat::{parse_rat, Rat};
use zeon_sl2::schemes::{
    hadamard_via_group, hamming_matrix, johnson_matrix, krawtchouk_matrix, krawtchouk_poly,
    moebius, poset_incidence, spectrum_table, sylvester_hadamard,
};
use zeon_sl2::verify::{run_all, run_suite, SuiteReport};
use zeon_sl2::zbasis::state_matrices;
use zeon_sl2::{Error, RationalMatrix};

#[derive(Parser)]
#[command(
    name = "zeon-sl2",
    version,
    about = "Exact matrices, states, and spectra for the sl(2) calculus on the Boolean lattice"
)]
struct Cli {
    #[command(subcommand)]
    verb: Verb,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum OrderArg {
    /// Subsets sorted by cardinality, then dictionary order.
    GradedLex,
    /// Subsets at their bitmask integers.
    Binary,
}

impl From<OrderArg> for CanonicalOrder {
    fn from(o: OrderArg) -> Self {
        match o {
            OrderArg::GradedLex => CanonicalOrder::GradedLex,
            OrderArg::Binary => CanonicalOrder::Binary,
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum FormatArg {
    Csv,
    Json,
}

#[derive(Clone, Copy, ValueEnum)]
enum OpArg {
    EHat,
    DeltaHat,
    HHat,
    T,
    TStar,
    U,
    Layer,
    DividedT,
    DividedTStar,
    Tj,
    Casimir,
}

#[derive(Clone, Copy, ValueEnum)]
enum FormArg {
    /// Coefficients of K_j(x,n)/j!, ascending by degree.
    Poly,
    /// The polynomial evaluated at the matrix X = T + T*.
    Matrix,
}

#[derive(Clone, Copy, ValueEnum)]
enum SchemeArg {
    /// Full-lattice distance relation H_j.
    Hamming,
    /// Layer relation J_k in dictionary order.
    Johnson,
}

#[derive(Clone, Copy, ValueEnum)]
enum PosetKindArg {
    /// Incidence matrix E = exp(tT*), entries t^|J∖I| on containment.
    Zeta,
    /// Its inverse M = exp(−tT*).
    Moebius,
}

#[derive(Clone, Copy, ValueEnum)]
enum ViaArg {
    /// Iterated Kronecker product of the 2×2 seed.
    Kronecker,
    /// The group element g(1,−2,1).
    Group,
}

/// Flags shared by the matrix-emitting verbs.
#[derive(Args)]
struct EmitArgs {
    /// Basis order for rows and columns [default: graded-lex].
    #[arg(long, value_enum)]
    order: Option<OrderArg>,
    /// Serialization format.
    #[arg(long, value_enum, default_value_t = FormatArg::Csv)]
    format: FormatArg,
    /// Prefix rows and columns with subset labels.
    #[arg(long)]
    labels: bool,
    /// Write to a file instead of stdout.
    #[arg(long)]
    output: Option<PathBuf>,
}

/// Flags for verbs whose output shape is fixed.
#[derive(Args)]
struct SinkArgs {
    /// Serialization format.
    #[arg(long, value_enum, default_value_t = FormatArg::Csv)]
    format: FormatArg,
    /// Write to a file instead of stdout.
    #[arg(long)]
    output: Option<PathBuf>,
}

#[derive(Subcommand)]
enum Verb {
    /// Emit the matrix of one operator.
    OpMatrix {
        /// Ground-set size.
        #[arg(long)]
        n: usize,
        /// Operator to materialize.
        #[arg(long, value_enum)]
        op: OpArg,
        /// Generator index for e-hat, delta-hat, h-hat.
        #[arg(long)]
        i: Option<usize>,
        /// Power for divided-t, divided-t-star.
        #[arg(long)]
        k: Option<usize>,
        /// Index for tj.
        #[arg(long)]
        j: Option<usize>,
        #[command(flatten)]
        emit: EmitArgs,
    },
    /// Emit the group element g(s,u,t) = exp(sT)·u^L·exp(tT*).
    Group {
        /// Ground-set size.
        #[arg(long)]
        n: usize,
        /// Raising parameter.
        #[arg(long, value_parser = parse_rat_arg, allow_hyphen_values = true)]
        s: Rat,
        /// Layer-scaling parameter.
        #[arg(long, value_parser = parse_rat_arg, allow_hyphen_values = true)]
        u: Rat,
        /// Lowering parameter.
        #[arg(long, value_parser = parse_rat_arg, allow_hyphen_values = true)]
        t: Rat,
        #[command(flatten)]
        emit: EmitArgs,
    },
    /// Emit every layer's state matrix W and squared-norm diagonal D.
    Zbasis {
        /// Ground-set size.
        #[arg(long)]
        n: usize,
        #[command(flatten)]
        sink: SinkArgs,
    },
    /// Emit one layer's state matrix W and squared-norm diagonal D.
    States {
        /// Ground-set size.
        #[arg(long)]
        n: usize,
        /// Layer to chart.
        #[arg(long)]
        ell: usize,
        #[command(flatten)]
        sink: SinkArgs,
    },
    /// Emit an association-scheme relation matrix.
    Scheme {
        /// Ground-set size.
        #[arg(long)]
        n: usize,
        /// Which scheme family.
        #[arg(long, value_enum)]
        kind: SchemeArg,
        /// Hamming distance index.
        #[arg(long)]
        j: Option<usize>,
        /// Layer, for the Johnson scheme.
        #[arg(long)]
        ell: Option<usize>,
        /// Johnson distance index.
        #[arg(long)]
        k: Option<usize>,
        #[command(flatten)]
        emit: EmitArgs,
    },
    /// Emit a scaled Krawtchouk polynomial, or its matrix value at X.
    Krawtchouk {
        /// Ground-set size (the polynomial parameter).
        #[arg(long)]
        n: usize,
        /// Degree.
        #[arg(long)]
        j: usize,
        /// Coefficients or matrix evaluation.
        #[arg(long, value_enum, default_value_t = FormArg::Poly)]
        form: FormArg,
        #[command(flatten)]
        emit: EmitArgs,
    },
    /// Emit the Johnson eigenvalue table (alpha, lambda, multiplicity).
    Spectrum {
        /// Ground-set size.
        #[arg(long)]
        n: usize,
        /// Layer.
        #[arg(long)]
        ell: usize,
        /// Johnson distance index.
        #[arg(long)]
        k: usize,
        /// Include a header row (CSV only).
        #[arg(long)]
        labels: bool,
        #[command(flatten)]
        sink: SinkArgs,
    },
    /// Emit the Boolean poset incidence matrix or its inverse.
    Poset {
        /// Ground-set size.
        #[arg(long)]
        n: usize,
        /// Deformation parameter.
        #[arg(long, value_parser = parse_rat_arg, allow_hyphen_values = true, default_value = "1")]
        t: Rat,
        /// Which matrix of the inverse pair.
        #[arg(long, value_enum, default_value_t = PosetKindArg::Zeta)]
        kind: PosetKindArg,
        #[command(flatten)]
        emit: EmitArgs,
    },
    /// Emit the order-2^n Hadamard matrix.
    Hadamard {
        /// Ground-set size.
        #[arg(long)]
        n: usize,
        /// Construction route [default: binary order either way].
        #[arg(long, value_enum, default_value_t = ViaArg::Kronecker)]
        via: ViaArg,
        #[command(flatten)]
        emit: EmitArgs,
    },
    /// Run the identity suites and report pass counts.
    Verify {
        /// Sweep size; checks clamp it to their own caps.
        #[arg(long)]
        n: usize,
        /// One of boolean-core, sl2-ops, zbasis, schemes, all.
        #[arg(long, default_value = "all")]
        suite: String,
    },
}

fn parse_rat_arg(s: &str) -> Result<Rat, String> {
    parse_rat(s).map_err(|e| e.to_string())
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => return argument_error(e),
    };
    match run(cli.verb) {
        Ok(code) => code,
        Err(msg) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}

/// Collapses clap's multi-line rendering to the one-line diagnostic the
/// hand-rolled errors already produce. Help and version keep their full
/// output and success status.
fn argument_error(e: clap::Error) -> ExitCode {
    use clap::error::ErrorKind;
    match e.kind() {
        ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
            let _ = e.print();
            ExitCode::SUCCESS
        }
        ErrorKind::DisplayHelpOnMissingArgumentOrSubcommand => {
            eprintln!("error: missing arguments or subcommand (try --help)");
            ExitCode::from(2)
        }
        _ => {
            let text = e.to_string();
            let merged = text
                .lines()
                .take_while(|l| !l.trim().is_empty() && !l.trim_start().starts_with("Usage:"))
                .map(str::trim)
                .collect::<Vec<_>>()
                .join(" ");
            if merged.is_empty() {
                eprintln!("error: invalid arguments (try --help)");
            } else {
                eprintln!("{merged}");
            }
            ExitCode::from(2)
        }
    }
}

/// Library range refusals become exit-2 diagnostics; the dense cap gets
/// a pointer at the per-layer verbs.
fn dense_hint(e: Error) -> String {
    match e {
        Error::SizeOutOfRange { .. } => format!(
            "{e}; per-layer verbs (states, scheme --kind johnson, spectrum) go further"
        ),
        other => other.to_string(),
    }
}

fn resolve(order: Option<OrderArg>) -> CanonicalOrder {
    order.map_or(CanonicalOrder::GradedLex, CanonicalOrder::from)
}

fn json_line(mut s: String) -> String {
    s.push('\n');
    s
}

fn deliver(text: &str, output: Option<&Path>) -> Result<(), String> {
    match output {
        None => {
            print!("{text}");
            Ok(())
        }
        Some(path) => std::fs::write(path, text)
            .map_err(|e| format!("cannot write {}: {e}", path.display())),
    }
}

/// Serializes a square subset-indexed matrix under the shared flags.
fn matrix_payload(m: &RationalMatrix, format: FormatArg, labels: bool) -> Result<String, String> {
    let label_vecs = if labels {
        let l = emit::subset_labels(m.n(), m.order()).map_err(|e| e.to_string())?;
        Some((l.clone(), l))
    } else {
        None
    };
    let pair = label_vecs
        .as_ref()
        .map(|(r, c)| (r.as_slice(), c.as_slice()));
    Ok(match format {
        FormatArg::Csv => emit::matrix_to_csv(m, pair),
        FormatArg::Json => json_line(emit::matrix_to_json(m, pair)),
    })
}

/// Serializes a layer matrix, labeled by the layer's subsets.
fn layer_payload(
    m: &RationalMatrix,
    n: usize,
    ell: usize,
    format: FormatArg,
    labels: bool,
) -> String {
    let label_vecs = labels.then(|| {
        let l = emit::layer_labels(n, ell);
        (l.clone(), l)
    });
    let pair = label_vecs
        .as_ref()
        .map(|(r, c)| (r.as_slice(), c.as_slice()));
    match format {
        FormatArg::Csv => emit::matrix_to_csv(m, pair),
        FormatArg::Json => json_line(emit::matrix_to_json(m, pair)),
    }
}

fn op_kind(
    op: OpArg,
    i: Option<usize>,
    k: Option<usize>,
    j: Option<usize>,
) -> Result<OperatorKind, String> {
    let needs_i = matches!(op, OpArg::EHat | OpArg::DeltaHat | OpArg::HHat);
    let needs_k = matches!(op, OpArg::DividedT | OpArg::DividedTStar);
    let needs_j = matches!(op, OpArg::Tj);
    if i.is_some() && !needs_i {
        return Err("--i applies only to e-hat, delta-hat, h-hat".into());
    }
    if k.is_some() && !needs_k {
        return Err("--k applies only to divided-t, divided-t-star".into());
    }
    if j.is_some() && !needs_j {
        return Err("--j applies only to tj".into());
    }
    let want = |v: Option<usize>, flag: &str| v.ok_or(format!("this op requires {flag}"));
    Ok(match op {
        OpArg::EHat => OperatorKind::EHat(want(i, "--i")?),
        OpArg::DeltaHat => OperatorKind::DeltaHat(want(i, "--i")?),
        OpArg::HHat => OperatorKind::HHat(want(i, "--i")?),
        OpArg::T => OperatorKind::T,
        OpArg::TStar => OperatorKind::TStar,
        OpArg::U => OperatorKind::U,
        OpArg::Layer => OperatorKind::Layer,
        OpArg::DividedT => OperatorKind::DividedPowerT(want(k, "--k")?),
        OpArg::DividedTStar => OperatorKind::DividedPowerTStar(want(k, "--k")?),
        OpArg::Tj => OperatorKind::Tj(want(j, "--j")?),
        OpArg::Casimir => OperatorKind::Casimir,
    })
}

fn run(verb: Verb) -> Result<ExitCode, String> {
    match verb {
        Verb::OpMatrix {
            n,
            op,
            i,
            k,
            j,
            emit: e,
        } => {
            let kind = op_kind(op, i, k, j)?;
            let m = op_matrix(kind, n, resolve(e.order)).map_err(dense_hint)?;
            deliver(&matrix_payload(&m, e.format, e.labels)?, e.output.as_deref())?;
            Ok(ExitCode::SUCCESS)
        }
        Verb::Group {
            n,
            s,
            u,
            t,
            emit: e,
        } => {
            let m = group_element(&GroupParams::new(s, u, t), n, resolve(e.order))
                .map_err(dense_hint)?;
            deliver(&matrix_payload(&m, e.format, e.labels)?, e.output.as_deref())?;
            Ok(ExitCode::SUCCESS)
        }
        Verb::Zbasis { n, sink } => {
            let mut blocks = Vec::new();
            for ell in 0..=n {
                let (w, d) = state_matrices(n, ell).map_err(dense_hint)?;
                blocks.push((ell, w, d));
            }
            let text = match sink.format {
                FormatArg::Csv => emit::zbasis_csv(&blocks),
                FormatArg::Json => json_line(emit::zbasis_json(n, &blocks)),
            };
            deliver(&text, sink.output.as_deref())?;
            Ok(ExitCode::SUCCESS)
        }
        Verb::States { n, ell, sink } => {
            let (w, d) = state_matrices(n, ell).map_err(dense_hint)?;
            let text = match sink.format {
                FormatArg::Csv => emit::states_block_csv(&w, &d),
                FormatArg::Json => json_line(emit::states_block_json(n, ell, &w, &d)),
            };
            deliver(&text, sink.output.as_deref())?;
            Ok(ExitCode::SUCCESS)
        }
        Verb::Scheme {
            n,
            kind,
            j,
            ell,
            k,
            emit: e,
        } => match kind {
            SchemeArg::Hamming => {
                if ell.is_some() || k.is_some() {
                    return Err("--ell/--k apply only to --kind johnson".into());
                }
                let j = j.ok_or("scheme --kind hamming requires --j")?;
                let m = hamming_matrix(n, j, resolve(e.order)).map_err(dense_hint)?;
                deliver(
                    &matrix_payload(&m.matrix, e.format, e.labels)?,
                    e.output.as_deref(),
                )?;
                Ok(ExitCode::SUCCESS)
            }
            SchemeArg::Johnson => {
                if j.is_some() {
                    return Err("--j applies only to --kind hamming".into());
                }
                if e.order == Some(OrderArg::Binary) {
                    return Err("johnson matrices live on one layer in dictionary order".into());
                }
                let ell = ell.ok_or("scheme --kind johnson requires --ell")?;
                let k = k.ok_or("scheme --kind johnson requires --k")?;
                let m = johnson_matrix(n, ell, k).map_err(dense_hint)?;
                let text = layer_payload(&m.matrix, n, ell, e.format, e.labels);
                deliver(&text, e.output.as_deref())?;
                Ok(ExitCode::SUCCESS)
            }
        },
        Verb::Krawtchouk {
            n,
            j,
            form,
            emit: e,
        } => match form {
            FormArg::Poly => {
                if e.labels {
                    return Err("--labels applies only to --form matrix".into());
                }
                if e.order.is_some() {
                    return Err("--order applies only to --form matrix".into());
                }
                let poly = krawtchouk_poly(j, n).map_err(dense_hint)?;
                let text = match e.format {
                    FormatArg::Csv => emit::poly_to_csv(&poly.coeffs),
                    FormatArg::Json => {
                        json_line(emit::poly_to_json(poly.degree, poly.n, &poly.coeffs))
                    }
                };
                deliver(&text, e.output.as_deref())?;
                Ok(ExitCode::SUCCESS)
            }
            FormArg::Matrix => {
                let m = krawtchouk_matrix(j, n, resolve(e.order)).map_err(dense_hint)?;
                deliver(&matrix_payload(&m, e.format, e.labels)?, e.output.as_deref())?;
                Ok(ExitCode::SUCCESS)
            }
        },
        Verb::Spectrum {
            n,
            ell,
            k,
            labels,
            sink,
        } => {
            let rows = spectrum_table(n, ell, k).map_err(dense_hint)?;
            let text = match sink.format {
                FormatArg::Csv => emit::spectrum_to_csv(&rows, labels),
                FormatArg::Json => {
                    if labels {
                        return Err("--labels applies to csv spectra only".into());
                    }
                    json_line(emit::spectrum_to_json(n, ell, k, &rows))
                }
            };
            deliver(&text, sink.output.as_deref())?;
            Ok(ExitCode::SUCCESS)
        }
        Verb::Poset {
            n,
            t,
            kind,
            emit: e,
        } => {
            let order = resolve(e.order);
            let m = match kind {
                PosetKindArg::Zeta => poset_incidence(n, &t, order),
                PosetKindArg::Moebius => moebius(n, &t, order),
            }
            .map_err(dense_hint)?;
            deliver(&matrix_payload(&m, e.format, e.labels)?, e.output.as_deref())?;
            Ok(ExitCode::SUCCESS)
        }
        Verb::Hadamard { n, via, emit: e } => {
            let order = e.order.map_or(CanonicalOrder::Binary, CanonicalOrder::from);
            let m = match via {
                ViaArg::Kronecker => {
                    let h = sylvester_hadamard(n).map_err(dense_hint)?;
                    if order == CanonicalOrder::Binary {
                        h
                    } else {
                        h.reordered(order).map_err(|er| er.to_string())?
                    }
                }
                ViaArg::Group => hadamard_via_group(n, order).map_err(dense_hint)?,
            };
            deliver(&matrix_payload(&m, e.format, e.labels)?, e.output.as_deref())?;
            Ok(ExitCode::SUCCESS)
        }
        Verb::Verify { n, suite } => run_verify(n, &suite),
    }
}

fn run_verify(n: usize, suite: &str) -> Result<ExitCode, String> {
    let reports: Vec<SuiteReport> = if suite == "all" {
        run_all(n).map_err(|e| e.to_string())?
    } else {
        vec![run_suite(suite, n).map_err(|e| e.to_string())?]
    };
    let mut out = String::new();
    let mut failed_checks = 0usize;
    for report in &reports {
        for check in &report.checks {
            if check.passed() {
                out.push_str(&format!(
                    "{}/{}: pass ({} cases)\n",
                    report.suite, check.name, check.cases
                ));
            } else {
                failed_checks += 1;
                out.push_str(&format!(
                    "{}/{}: FAIL ({} of {} cases)\n",
                    report.suite,
                    check.name,
                    check.failures.len(),
                    check.cases
                ));
                for failure in check.failures.iter().take(3) {
                    eprintln!("{}/{}: {failure}", report.suite, check.name);
                }
                if check.failures.len() > 3 {
                    eprintln!(
                        "{}/{}: ... and {} more",
                        report.suite,
                        check.name,
                        check.failures.len() - 3
                    );
                }
            }
        }
        let passed = report.checks.iter().filter(|c| c.passed()).count();
        out.push_str(&format!(
            "suite {}: {passed}/{} checks passed ({} cases)\n",
            report.suite,
            report.checks.len(),
            report.cases()
        ));
    }
    if failed_checks == 0 {
        out.push_str(&format!("verify: all {} suites passed\n", reports.len()));
    } else {
        out.push_str(&format!("verify: FAILED ({failed_checks} checks)\n"));
    }
    print!("{out}");
    Ok(if failed_checks == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    })
}
