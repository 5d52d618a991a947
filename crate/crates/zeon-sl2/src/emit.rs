//! Byte-deterministic serialization: CSV and JSON renderings of matrices,
//! spectrum tables, polynomial coefficients, and the per-layer state
//! blocks. Rationals are written as `p/q` with integers bare; JSON keys
//! are emitted in sorted order so repeated runs agree byte for byte.

use serde_json::{json, Map, Value};

use crate::error::Result;
use crate::matrix::RationalMatrix;
use crate::order::{layer_subsets, CanonicalOrder};
use crate::rat::{format_rat, Rat};

/// Display labels for all subsets in the given order.
pub fn subset_labels(n: usize, order: CanonicalOrder) -> Result<Vec<String>> {
    Ok(order.subsets(n)?.iter().map(|s| s.to_string()).collect())
}

/// Display labels for one layer in dictionary order.
pub fn layer_labels(n: usize, ell: usize) -> Vec<String> {
    layer_subsets(n, ell).iter().map(|s| s.to_string()).collect()
}

/// Subset labels contain commas, so they are always CSV-quoted.
fn quote(label: &str) -> String {
    format!("\"{label}\"")
}

/// Renders a matrix as CSV, one row per line. With labels, the first
/// line holds quoted column labels (over an empty corner cell) and each
/// row starts with its quoted label.
pub fn matrix_to_csv(m: &RationalMatrix, labels: Option<(&[String], &[String])>) -> String {
    let mut out = String::new();
    if let Some((_, cols)) = labels {
        for c in cols {
            out.push(',');
            out.push_str(&quote(c));
        }
        out.push('\n');
    }
    for r in 0..m.nrows() {
        let mut sep = false;
        if let Some((rows, _)) = labels {
            out.push_str(&quote(&rows[r]));
            sep = true;
        }
        for c in 0..m.ncols() {
            if sep {
                out.push(',');
            }
            sep = true;
            out.push_str(&format_rat(m.get(r, c)));
        }
        out.push('\n');
    }
    out
}

/// Renders a matrix as a single-line JSON object `{"n":…, "order":…,
/// "rows":[[…]]}` with entries as `p/q` strings; label vectors are added
/// under `row_labels`/`col_labels` when given.
pub fn matrix_to_json(m: &RationalMatrix, labels: Option<(&[String], &[String])>) -> String {
    let mut map = Map::new();
    map.insert("n".into(), json!(m.n()));
    map.insert("order".into(), json!(m.order().label()));
    let rows: Vec<Value> = (0..m.nrows())
        .map(|r| {
            Value::Array(
                (0..m.ncols())
                    .map(|c| Value::String(format_rat(m.get(r, c))))
                    .collect(),
            )
        })
        .collect();
    map.insert("rows".into(), Value::Array(rows));
    if let Some((row_labels, col_labels)) = labels {
        map.insert("row_labels".into(), json!(row_labels));
        map.insert("col_labels".into(), json!(col_labels));
    }
    Value::Object(map).to_string()
}

/// Spectrum rows (α, Λ, multiplicity) as CSV, optionally headed.
pub fn spectrum_to_csv(rows: &[(usize, Rat, usize)], header: bool) -> String {
    let mut out = String::new();
    if header {
        out.push_str("alpha,lambda,multiplicity\n");
    }
    for (alpha, lambda, mult) in rows {
        out.push_str(&format!("{alpha},{},{mult}\n", format_rat(lambda)));
    }
    out
}

/// Spectrum rows as JSON with the scheme coordinates alongside.
pub fn spectrum_to_json(n: usize, ell: usize, k: usize, rows: &[(usize, Rat, usize)]) -> String {
    let mut map = Map::new();
    map.insert("ell".into(), json!(ell));
    map.insert("k".into(), json!(k));
    map.insert("n".into(), json!(n));
    let rows: Vec<Value> = rows
        .iter()
        .map(|(alpha, lambda, mult)| {
            Value::Array(vec![
                json!(alpha),
                Value::String(format_rat(lambda)),
                json!(mult),
            ])
        })
        .collect();
    map.insert("rows".into(), Value::Array(rows));
    Value::Object(map).to_string()
}

/// Polynomial coefficients, ascending by degree, as one CSV line.
pub fn poly_to_csv(coeffs: &[Rat]) -> String {
    let line: Vec<String> = coeffs.iter().map(format_rat).collect();
    format!("{}\n", line.join(","))
}

/// Polynomial coefficients as JSON.
pub fn poly_to_json(degree: usize, n: usize, coeffs: &[Rat]) -> String {
    let mut map = Map::new();
    map.insert(
        "coeffs".into(),
        Value::Array(
            coeffs
                .iter()
                .map(|c| Value::String(format_rat(c)))
                .collect(),
        ),
    );
    map.insert("degree".into(), json!(degree));
    map.insert("n".into(), json!(n));
    Value::Object(map).to_string()
}

/// One layer's state block in the chart format: the W matrix rows as
/// CSV under a `W` heading, then the diagonal of D on one line under a
/// `D` heading.
pub fn states_block_csv(w: &RationalMatrix, d: &RationalMatrix) -> String {
    let mut out = String::from("W\n");
    out.push_str(&matrix_to_csv(w, None));
    out.push_str("D\n");
    let diag: Vec<String> = (0..d.nrows()).map(|i| format_rat(d.get(i, i))).collect();
    out.push_str(&diag.join(","));
    out.push('\n');
    out
}

fn states_block_value(n: usize, ell: usize, w: &RationalMatrix, d: &RationalMatrix) -> Value {
    let mut map = Map::new();
    let diag: Vec<Value> = (0..d.nrows())
        .map(|i| Value::String(format_rat(d.get(i, i))))
        .collect();
    map.insert("D".into(), Value::Array(diag));
    let rows: Vec<Value> = (0..w.nrows())
        .map(|r| {
            Value::Array(
                (0..w.ncols())
                    .map(|c| Value::String(format_rat(w.get(r, c))))
                    .collect(),
            )
        })
        .collect();
    map.insert("W".into(), Value::Array(rows));
    map.insert("ell".into(), json!(ell));
    map.insert("n".into(), json!(n));
    Value::Object(map)
}

/// One layer's state block as JSON.
pub fn states_block_json(n: usize, ell: usize, w: &RationalMatrix, d: &RationalMatrix) -> String {
    states_block_value(n, ell, w, d).to_string()
}

/// Every layer's state block, stacked under `layer ℓ` headings.
pub fn zbasis_csv(blocks: &[(usize, RationalMatrix, RationalMatrix)]) -> String {
    let mut out = String::new();
    for (ell, w, d) in blocks {
        out.push_str(&format!("layer {ell}\n"));
        out.push_str(&states_block_csv(w, d));
    }
    out
}

/// Every layer's state block as one JSON object.
pub fn zbasis_json(n: usize, blocks: &[(usize, RationalMatrix, RationalMatrix)]) -> String {
    let mut map = Map::new();
    let layers: Vec<Value> = blocks
        .iter()
        .map(|(ell, w, d)| states_block_value(n, *ell, w, d))
        .collect();
    map.insert("layers".into(), Value::Array(layers));
    map.insert("n".into(), json!(n));
    Value::Object(map).to_string()
}
