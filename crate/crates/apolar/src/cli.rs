//! Command-line surface: one subcommand per computation, human tables by
//! default and schema-versioned JSON behind `--format json`.
//!
//! Exit codes: 0 on success, 1 when an `--expect` assertion fails or a
//! computation needs a certificate the input does not earn, 2 on input or
//! parse errors.  `run` takes explicit output streams so the whole surface
//! is testable in-process; `main` is a thin shim around it.

use crate::classify::{census, Census, Evidence};
use crate::decomp::{decompose, q_grid};
use crate::invsys::InverseSystem;
use crate::kunte::{certify_self_dual, CertificateKind, Certification, EncodingMatrix};
use crate::macaulay::{macaulay_rep, sequence_admissible};
use crate::parse::parse_dual_element;
use crate::tensor::{strassen_check, symmetry_check, StrassenOutcome, StructureTensor};
use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};
use std::fmt::Display;
use std::io::Write;
use std::path::{Path, PathBuf};

/// Version tag stamped into every structured output.
const SCHEMA: &str = "apolar/v1";

#[derive(Parser)]
#[command(
    name = "apolar",
    version,
    about = "Exact computations with apolar modules: Hilbert functions, symmetric \
             decompositions, self-duality certificates, structure tensors, and the census \
             of local Hilbert functions of self-dual modules"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Table,
    Json,
}

#[derive(Subcommand)]
enum Command {
    /// Hilbert function, total dimension, and socle degree of a module.
    Hilbert {
        /// Matrix file (JSON: {"vars", "rows", "cols", "entries"}).
        #[arg(long)]
        matrix: Option<PathBuf>,
        /// Inline generator, e.g. "x1^3+x2^3+x3^2" or "x^2, y".
        #[arg(long)]
        poly: Option<String>,
        /// Assert the computed Hilbert function, e.g. "1,3,2,1".
        #[arg(long)]
        expect: Option<String>,
        #[arg(long, value_enum, default_value_t = Format::Table)]
        format: Format,
    },
    /// Symmetric decomposition rows and rank grid of a certified module.
    Decompose {
        #[arg(long)]
        matrix: PathBuf,
        #[arg(long, value_enum, default_value_t = Format::Table)]
        format: Format,
    },
    /// Binomial representations, growth bounds, and sequence admissibility.
    Macaulay {
        /// Value to represent (with --index).
        #[arg(long)]
        value: Option<u64>,
        /// Representation index (with --value).
        #[arg(long)]
        index: Option<usize>,
        /// Check a sequence instead, e.g. "1,3,2,1".
        #[arg(long)]
        sequence: Option<String>,
        /// Assert the bound (value mode) or "admissible"/"inadmissible"
        /// (sequence mode).
        #[arg(long)]
        expect: Option<String>,
        #[arg(long, value_enum, default_value_t = Format::Table)]
        format: Format,
    },
    /// Self-duality certificate of a square encoding matrix.
    Certify {
        #[arg(long)]
        matrix: PathBuf,
        /// Assert the verdict: symmetric-matrix, not-self-dual, or
        /// inconclusive.
        #[arg(long)]
        expect: Option<String>,
        #[arg(long, value_enum, default_value_t = Format::Table)]
        format: Format,
    },
    /// Structure-tensor genericity, commutation, and symmetry report.
    TensorCheck {
        #[arg(long)]
        matrix: PathBuf,
        #[arg(long, value_enum, default_value_t = Format::Table)]
        format: Format,
    },
    /// Census of local Hilbert functions of self-dual modules.
    Classify {
        #[arg(long)]
        degree: usize,
        #[arg(long, value_enum, default_value_t = Format::Table)]
        format: Format,
    },
}

/// Parse and dispatch; returns the process exit code.
pub fn run(args: &[String], out: &mut dyn Write, err: &mut dyn Write) -> i32 {
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let rendered = e.render().to_string();
            let _ = if e.use_stderr() {
                write!(err, "{rendered}")
            } else {
                write!(out, "{rendered}")
            };
            return e.exit_code();
        }
    };
    match dispatch(cli.command, out, err) {
        Ok(code) => code,
        Err(_) => 2,
    }
}

fn dispatch(cmd: Command, out: &mut dyn Write, err: &mut dyn Write) -> std::io::Result<i32> {
    match cmd {
        Command::Hilbert {
            matrix,
            poly,
            expect,
            format,
        } => cmd_hilbert(matrix, poly, expect, format, out, err),
        Command::Decompose { matrix, format } => cmd_decompose(&matrix, format, out, err),
        Command::Macaulay {
            value,
            index,
            sequence,
            expect,
            format,
        } => cmd_macaulay(value, index, sequence, expect, format, out, err),
        Command::Certify {
            matrix,
            expect,
            format,
        } => cmd_certify(&matrix, expect, format, out, err),
        Command::TensorCheck { matrix, format } => cmd_tensor_check(&matrix, format, out, err),
        Command::Classify { degree, format } => cmd_classify(degree, format, out, err),
    }
}

fn input_error(err: &mut dyn Write, message: impl Display) -> std::io::Result<i32> {
    writeln!(err, "error: {message}")?;
    Ok(2)
}

fn load_matrix(path: &Path) -> Result<EncodingMatrix, String> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| format!("cannot read {}: {e}", path.display()))?;
    EncodingMatrix::from_json(&text).map_err(|e| format!("{}: {e}", path.display()))
}

fn parse_sequence(text: &str) -> Result<Vec<usize>, String> {
    let values = text
        .split(',')
        .map(|part| {
            part.trim()
                .parse::<usize>()
                .map_err(|_| format!("'{}' is not a non-negative integer", part.trim()))
        })
        .collect::<Result<Vec<_>, _>>()?;
    if values.is_empty() {
        return Err("empty sequence".to_string());
    }
    Ok(values)
}

fn sequence_json(values: &[usize]) -> Value {
    Value::Array(values.iter().map(|&v| json!(v)).collect())
}

fn format_sequence(values: &[usize]) -> String {
    let cells: Vec<String> = values.iter().map(|v| v.to_string()).collect();
    format!("({})", cells.join(", "))
}

fn matrix_json(m: &EncodingMatrix) -> Value {
    let entries: Vec<Value> = (0..m.rows())
        .map(|i| {
            Value::Array(
                (0..m.cols())
                    .map(|j| Value::String(m.entry(i, j).to_string()))
                    .collect(),
            )
        })
        .collect();
    json!({
        "vars": m.num_vars(),
        "rows": m.rows(),
        "cols": m.cols(),
        "entries": entries,
    })
}

fn emit_json(out: &mut dyn Write, value: &Value) -> std::io::Result<()> {
    writeln!(
        out,
        "{}",
        serde_json::to_string_pretty(value).expect("json values serialize")
    )
}

fn cmd_hilbert(
    matrix: Option<PathBuf>,
    poly: Option<String>,
    expect: Option<String>,
    format: Format,
    out: &mut dyn Write,
    err: &mut dyn Write,
) -> std::io::Result<i32> {
    let system: InverseSystem = match (matrix, poly) {
        (Some(path), None) => {
            let m = match load_matrix(&path) {
                Ok(m) => m,
                Err(msg) => return input_error(err, msg),
            };
            match m.module_of() {
                Ok(s) => s,
                Err(e) => return input_error(err, e),
            }
        }
        (None, Some(text)) => {
            let element = match parse_dual_element(&text, None) {
                Ok(el) => el,
                Err(e) => return input_error(err, e),
            };
            match InverseSystem::closure(vec![element]) {
                Ok(s) => s,
                Err(e) => return input_error(err, e),
            }
        }
        _ => return input_error(err, "provide exactly one of --matrix or --poly"),
    };
    let hilbert = system.hilbert();
    let expected = match &expect {
        Some(text) => match parse_sequence(text) {
            Ok(values) => Some(values),
            Err(msg) => return input_error(err, format!("--expect: {msg}")),
        },
        None => None,
    };
    let matches = expected.as_ref().map(|e| e.as_slice() == hilbert.values());
    match format {
        Format::Table => {
            writeln!(out, "hilbert  {hilbert}")?;
            writeln!(out, "total    {}", system.total_dim())?;
            writeln!(out, "socle    {}", hilbert.socle_degree())?;
            if let (Some(e), Some(ok)) = (&expected, matches) {
                let shown = format_sequence(e);
                if ok {
                    writeln!(out, "expect   {shown} confirmed")?;
                } else {
                    writeln!(out, "expect   {shown} MISMATCH")?;
                }
            }
        }
        Format::Json => {
            let mut v = json!({
                "schema": SCHEMA,
                "command": "hilbert",
                "hilbert": sequence_json(hilbert.values()),
                "total": system.total_dim(),
                "socle": hilbert.socle_degree(),
            });
            if let (Some(e), Some(ok)) = (&expected, matches) {
                v["expected"] = sequence_json(e);
                v["matches"] = json!(ok);
            }
            emit_json(out, &v)?;
        }
    }
    Ok(if matches == Some(false) { 1 } else { 0 })
}

fn certificate_note(cert: &Certification) -> &'static str {
    match cert.verdict() {
        CertificateKind::SymmetricMatrix => {
            "symmetric matrix; Hilbert and Loewy functions agree"
        }
        CertificateKind::NotSelfDual => "Hilbert and Loewy functions differ",
        CertificateKind::Inconclusive => {
            "layers agree but the matrix is not symmetric; no verdict either way"
        }
    }
}

fn cmd_decompose(
    path: &Path,
    format: Format,
    out: &mut dyn Write,
    err: &mut dyn Write,
) -> std::io::Result<i32> {
    let m = match load_matrix(path) {
        Ok(m) => m,
        Err(msg) => return input_error(err, msg),
    };
    let cert = match certify_self_dual(&m) {
        Ok(c) => c,
        Err(e) => return input_error(err, e),
    };
    if !cert.is_certified() {
        match format {
            Format::Table => {
                writeln!(out, "certificate  {}", cert.verdict())?;
                writeln!(
                    out,
                    "decomposition requires a SYMMETRIC_MATRIX certificate ({})",
                    certificate_note(&cert)
                )?;
            }
            Format::Json => {
                let v = json!({
                    "schema": SCHEMA,
                    "command": "decompose",
                    "certificate": cert.verdict().to_string(),
                    "note": "decomposition requires a SYMMETRIC_MATRIX certificate",
                });
                emit_json(out, &v)?;
            }
        }
        return Ok(1);
    }
    let decomposition = match decompose(&cert) {
        Ok(d) => d,
        Err(e) => return input_error(err, e),
    };
    let grid = match q_grid(&cert) {
        Ok(g) => g,
        Err(e) => return input_error(err, e),
    };
    match format {
        Format::Table => {
            writeln!(out, "certificate  {}", cert.verdict())?;
            writeln!(out, "hilbert      {}", cert.hilbert())?;
            writeln!(out, "socle        {}", decomposition.socle_degree())?;
            writeln!(out)?;
            writeln!(out, "{decomposition}")?;
            writeln!(out)?;
            writeln!(out, "rank grid (row k, column l):")?;
            for (k, row) in grid.rows().iter().enumerate() {
                let cells: Vec<String> = row.iter().map(|v| v.to_string()).collect();
                writeln!(out, "k={k} | {}", cells.join(" "))?;
            }
        }
        Format::Json => {
            let rows: Vec<Value> = decomposition
                .rows()
                .iter()
                .map(|r| sequence_json(r))
                .collect();
            let grid_rows: Vec<Value> = grid.rows().iter().map(|r| sequence_json(r)).collect();
            let v = json!({
                "schema": SCHEMA,
                "command": "decompose",
                "certificate": cert.verdict().to_string(),
                "hilbert": sequence_json(cert.hilbert().values()),
                "socle": decomposition.socle_degree(),
                "rows": rows,
                "q_grid": grid_rows,
            });
            emit_json(out, &v)?;
        }
    }
    Ok(0)
}

fn cmd_macaulay(
    value: Option<u64>,
    index: Option<usize>,
    sequence: Option<String>,
    expect: Option<String>,
    format: Format,
    out: &mut dyn Write,
    err: &mut dyn Write,
) -> std::io::Result<i32> {
    match (value, index, sequence) {
        (Some(a), Some(s), None) => {
            let rep = match macaulay_rep(a, s) {
                Ok(r) => r,
                Err(e) => return input_error(err, e),
            };
            let expected = match &expect {
                Some(text) => match text.trim().parse::<u64>() {
                    Ok(b) => Some(b),
                    Err(_) => {
                        return input_error(err, "--expect for --value mode takes an integer")
                    }
                },
                None => None,
            };
            let matches = expected.map(|b| b == rep.bound());
            match format {
                Format::Table => {
                    writeln!(out, "value           {a}")?;
                    writeln!(out, "index           {s}")?;
                    writeln!(out, "representation  {rep}")?;
                    writeln!(out, "bound           {}", rep.bound())?;
                    if let (Some(b), Some(ok)) = (expected, matches) {
                        writeln!(
                            out,
                            "expect          {b} {}",
                            if ok { "confirmed" } else { "MISMATCH" }
                        )?;
                    }
                }
                Format::Json => {
                    let terms: Vec<Value> =
                        rep.terms().iter().map(|&(t, i)| json!([t, i])).collect();
                    let mut v = json!({
                        "schema": SCHEMA,
                        "command": "macaulay",
                        "mode": "value",
                        "value": a,
                        "index": s,
                        "terms": terms,
                        "bound": rep.bound(),
                    });
                    if let (Some(b), Some(ok)) = (expected, matches) {
                        v["expected"] = json!(b);
                        v["matches"] = json!(ok);
                    }
                    emit_json(out, &v)?;
                }
            }
            Ok(if matches == Some(false) { 1 } else { 0 })
        }
        (None, None, Some(text)) => {
            let seq = match parse_sequence(&text) {
                Ok(s) => s,
                Err(msg) => return input_error(err, format!("--sequence: {msg}")),
            };
            let verdict = sequence_admissible(&seq);
            let admissible = verdict.is_ok();
            let expected = match expect.as_deref().map(str::trim) {
                None => None,
                Some("admissible") => Some(true),
                Some("inadmissible") => Some(false),
                Some(other) => {
                    return input_error(
                        err,
                        format!("--expect '{other}' is not admissible/inadmissible"),
                    )
                }
            };
            let matches = expected.map(|e| e == admissible);
            match format {
                Format::Table => {
                    match &verdict {
                        Ok(()) => writeln!(out, "admissible")?,
                        Err(v) => writeln!(out, "inadmissible: {v}")?,
                    }
                    if let Some(ok) = matches {
                        writeln!(
                            out,
                            "expect {}",
                            if ok { "confirmed" } else { "MISMATCH" }
                        )?;
                    }
                }
                Format::Json => {
                    let mut v = json!({
                        "schema": SCHEMA,
                        "command": "macaulay",
                        "mode": "sequence",
                        "sequence": sequence_json(&seq),
                        "admissible": admissible,
                    });
                    if let Err(violation) = &verdict {
                        v["violation"] = json!(violation.to_string());
                    }
                    if let Some(ok) = matches {
                        v["expected"] = json!(expected.unwrap());
                        v["matches"] = json!(ok);
                    }
                    emit_json(out, &v)?;
                }
            }
            Ok(if matches == Some(false) { 1 } else { 0 })
        }
        _ => input_error(
            err,
            "use either --value with --index, or --sequence, but not a mix",
        ),
    }
}

fn normalize_verdict(text: &str) -> String {
    text.trim().to_ascii_uppercase().replace('-', "_")
}

fn cmd_certify(
    path: &Path,
    expect: Option<String>,
    format: Format,
    out: &mut dyn Write,
    err: &mut dyn Write,
) -> std::io::Result<i32> {
    let m = match load_matrix(path) {
        Ok(m) => m,
        Err(msg) => return input_error(err, msg),
    };
    let cert = match certify_self_dual(&m) {
        Ok(c) => c,
        Err(e) => return input_error(err, e),
    };
    let verdict = cert.verdict().to_string();
    let expected = expect.as_deref().map(normalize_verdict);
    let known = ["SYMMETRIC_MATRIX", "NOT_SELF_DUAL", "INCONCLUSIVE"];
    if let Some(e) = &expected {
        if !known.contains(&e.as_str()) {
            return input_error(
                err,
                format!("--expect '{e}' is not one of {}", known.join(", ")),
            );
        }
    }
    let matches = expected.as_ref().map(|e| e == &verdict);
    match format {
        Format::Table => {
            writeln!(out, "verdict  {verdict}")?;
            writeln!(out, "hilbert  {}", cert.hilbert())?;
            writeln!(out, "loewy    {}", cert.loewy())?;
            writeln!(out, "evidence {}", certificate_note(&cert))?;
            if let (Some(e), Some(ok)) = (&expected, matches) {
                writeln!(
                    out,
                    "expect   {e} {}",
                    if ok { "confirmed" } else { "MISMATCH" }
                )?;
            }
        }
        Format::Json => {
            let mut v = json!({
                "schema": SCHEMA,
                "command": "certify",
                "verdict": verdict,
                "hilbert": sequence_json(cert.hilbert().values()),
                "loewy": sequence_json(cert.loewy().values()),
                "evidence": certificate_note(&cert),
            });
            if let (Some(e), Some(ok)) = (&expected, matches) {
                v["expected"] = json!(e);
                v["matches"] = json!(ok);
            }
            emit_json(out, &v)?;
        }
    }
    Ok(if matches == Some(false) { 1 } else { 0 })
}

fn strassen_json(outcome: &StrassenOutcome) -> Value {
    match outcome {
        StrassenOutcome::GenericAndAbelian { witness_slice } => json!({
            "outcome": "GENERIC_AND_ABELIAN",
            "witness_slice": witness_slice,
        }),
        StrassenOutcome::NotGeneric => json!({ "outcome": "NOT_GENERIC" }),
        StrassenOutcome::NonCommutingPair { first, second } => json!({
            "outcome": "NON_COMMUTING_PAIR",
            "first": first,
            "second": second,
        }),
    }
}

fn cmd_tensor_check(
    path: &Path,
    format: Format,
    out: &mut dyn Write,
    err: &mut dyn Write,
) -> std::io::Result<i32> {
    let m = match load_matrix(path) {
        Ok(m) => m,
        Err(msg) => return input_error(err, msg),
    };
    let system = match m.module_of() {
        Ok(s) => s,
        Err(e) => return input_error(err, e),
    };
    let tensor = StructureTensor::of_module(&system);
    let strassen = strassen_check(&tensor);
    let symmetry: Result<String, String> = if !m.is_square() {
        Err("skipped: the matrix is not square".to_string())
    } else {
        let cert = match certify_self_dual(&m) {
            Ok(c) => c,
            Err(e) => return input_error(err, e),
        };
        if !cert.is_certified() {
            Err(format!("skipped: certificate verdict is {}", cert.verdict()))
        } else {
            match symmetry_check(&tensor, &cert) {
                Ok(outcome) => Ok(outcome.to_string()),
                Err(e) => return input_error(err, e),
            }
        }
    };
    match format {
        Format::Table => {
            writeln!(out, "slices    {} of size {}", tensor.dim_a(), tensor.dim())?;
            writeln!(out, "strassen  {strassen}")?;
            match &symmetry {
                Ok(line) => writeln!(out, "symmetry  {line}")?,
                Err(reason) => writeln!(out, "symmetry  {reason}")?,
            }
        }
        Format::Json => {
            let symmetry_value = match &symmetry {
                Ok(line) => json!({ "outcome": line }),
                Err(reason) => json!({ "outcome": "SKIPPED", "reason": reason }),
            };
            let v = json!({
                "schema": SCHEMA,
                "command": "tensor-check",
                "slices": tensor.dim_a(),
                "dim": tensor.dim(),
                "strassen": strassen_json(&strassen),
                "symmetry": symmetry_value,
            });
            emit_json(out, &v)?;
        }
    }
    Ok(0)
}

fn evidence_cell(evidence: &Evidence) -> String {
    match evidence {
        Evidence::Witness {
            matrix, provenance, ..
        } => format!("{provenance}: {matrix}"),
        Evidence::ViolatedFilter(f) => format!("violated {f}"),
        Evidence::CuratedImpossibility { .. } => {
            "recorded hand-checked impossibility (full text below)".to_string()
        }
        Evidence::Unresolved => "UNRESOLVED: no filter or witness applied".to_string(),
    }
}

fn evidence_json(evidence: &Evidence) -> Value {
    match evidence {
        Evidence::Witness {
            matrix,
            provenance,
            recomputed,
        } => json!({
            "kind": "witness",
            "provenance": provenance.to_string(),
            "matrix": matrix_json(matrix),
            "recomputed": sequence_json(recomputed.values()),
        }),
        Evidence::ViolatedFilter(f) => json!({
            "kind": "filter",
            "filter": f.name(),
            "detail": f.to_string(),
        }),
        Evidence::CuratedImpossibility { argument } => json!({
            "kind": "curated-impossibility",
            "note": argument,
        }),
        Evidence::Unresolved => json!({ "kind": "unresolved" }),
    }
}

fn render_census_table(c: &Census, out: &mut dyn Write) -> std::io::Result<()> {
    writeln!(
        out,
        "degree {} census: {} possible of {} candidates{}",
        c.degree,
        c.possible,
        c.verdicts.len(),
        match c.reference {
            Some(r) => format!(" (reference {r})"),
            None => String::new(),
        }
    )?;
    writeln!(out)?;
    let rows: Vec<(String, String, String)> = c
        .verdicts
        .iter()
        .map(|v| {
            (
                v.sequence.to_string(),
                v.status.to_string(),
                evidence_cell(&v.evidence),
            )
        })
        .collect();
    let seq_width = rows
        .iter()
        .map(|r| r.0.len())
        .chain(["sequence".len()])
        .max()
        .unwrap();
    let status_width = rows
        .iter()
        .map(|r| r.1.len())
        .chain(["status".len()])
        .max()
        .unwrap();
    writeln!(
        out,
        "{:seq_width$}  {:status_width$}  evidence",
        "sequence", "status"
    )?;
    for (seq, status, evidence) in &rows {
        writeln!(out, "{seq:seq_width$}  {status:status_width$}  {evidence}")?;
    }
    let mut extra = Vec::new();
    for v in &c.verdicts {
        if let Evidence::CuratedImpossibility { argument } = &v.evidence {
            extra.push(format!("note {}: {argument}", v.sequence));
        }
    }
    if !extra.is_empty() {
        writeln!(out)?;
        for line in extra {
            writeln!(out, "{line}")?;
        }
    }
    if c.unknown() > 0 {
        writeln!(out)?;
        writeln!(
            out,
            "WARNING: {} UNKNOWN verdict(s) — candidates neither refuted nor witnessed",
            c.unknown()
        )?;
    }
    if c.discrepancy() {
        writeln!(out)?;
        writeln!(
            out,
            "NOTE: the computed possible count {} differs from the reference count {}; \
             both are reported and the verdict table above carries the evidence",
            c.possible,
            c.reference.expect("discrepancy implies a reference"),
        )?;
    }
    Ok(())
}

fn census_json(c: &Census) -> Value {
    let verdicts: Vec<Value> = c
        .verdicts
        .iter()
        .map(|v| {
            json!({
                "sequence": sequence_json(v.sequence.values()),
                "status": v.status.to_string(),
                "evidence": evidence_json(&v.evidence),
            })
        })
        .collect();
    json!({
        "schema": SCHEMA,
        "command": "classify",
        "degree": c.degree,
        "candidates": c.verdicts.len(),
        "possible": c.possible,
        "reference": c.reference,
        "discrepancy": c.discrepancy(),
        "unknown": c.unknown(),
        "verdicts": verdicts,
    })
}

fn cmd_classify(
    degree: usize,
    format: Format,
    out: &mut dyn Write,
    err: &mut dyn Write,
) -> std::io::Result<i32> {
    let result = match std::env::var("APOLAR_THREADS") {
        Ok(text) => match text.trim().parse::<usize>() {
            Ok(n) if n >= 1 => {
                let pool = match rayon::ThreadPoolBuilder::new().num_threads(n).build() {
                    Ok(p) => p,
                    Err(e) => return input_error(err, format!("APOLAR_THREADS: {e}")),
                };
                pool.install(|| census(degree))
            }
            _ => {
                return input_error(
                    err,
                    format!("APOLAR_THREADS must be a positive integer, got '{text}'"),
                )
            }
        },
        Err(_) => census(degree),
    };
    let c = match result {
        Ok(c) => c,
        Err(e) => return input_error(err, e),
    };
    match format {
        Format::Table => render_census_table(&c, out)?,
        Format::Json => emit_json(out, &census_json(&c))?,
    }
    if c.unknown() > 0 {
        writeln!(
            err,
            "warning: {} candidate(s) of degree {} are UNKNOWN",
            c.unknown(),
            c.degree
        )?;
    }
    Ok(0)
}
