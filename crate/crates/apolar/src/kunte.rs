//! Encoding matrices and the symmetric-matrix certificate for self-duality.
//!
//! An `l × r` matrix `N` over `S*` encodes the inverse system generated by
//! its rows: row `k` is the dual element `f_k = (N[k][1], ..., N[k][r])`.
//! The apolar module of that tuple is `M(N)`.  Two facts drive everything
//! here:
//!
//! * transpose duality: `M(N)` and `M(N^T)` are dual modules, so their
//!   total dimensions agree and the Hilbert layers of one are the
//!   annihilator (Loewy) layers of the other;
//! * a *symmetric* square `N` certifies that `M(N)` is self-dual, via the
//!   nondegenerate balanced pairing `⟨σ^T f, τ^T f⟩ = π(σ^T N τ)`, where
//!   `π` reads off the constant coefficient.
//!
//! The converse fails in general (non-graded modules may be self-dual with
//! no symmetric encoding visible), so a non-symmetric square matrix yields
//! INCONCLUSIVE unless the Hilbert and Loewy functions already disagree, in
//! which case the module is provably NOT_SELF_DUAL.

use crate::exact::{mat_inverse, mat_is_symmetric, Matrix, Rational, Subspace};
use crate::invsys::{HilbertFunction, InvSysError, InverseSystem};
use crate::parse::{parse_polynomial, ParseError};
use crate::poly::{DualElement, Polynomial};
use num_traits::Zero;
use serde::{Deserialize, Serialize};
use std::fmt;

/// Errors from matrix construction, serialization, and certification.
#[derive(Debug)]
pub enum KunteError {
    /// The matrix has no rows or no columns.
    EmptyMatrix,
    /// Every entry is zero.
    ZeroMatrix,
    /// Entry rows of unequal length.
    RaggedRows { row: usize, expected: usize, found: usize },
    /// The declared `rows`/`cols` don't match the entry table.
    DeclaredShapeMismatch { detail: String },
    /// `vars` must be at least 1.
    NoVariables,
    /// An entry failed to parse (1-based row and column of the entry).
    EntryParse { row: usize, col: usize, source: ParseError },
    /// The file is not valid JSON.
    Json(serde_json::Error),
    /// Self-duality certification needs a square matrix.
    NonSquare { rows: usize, cols: usize },
    /// An operation that needs a certified module got this verdict instead.
    NotCertified { verdict: CertificateKind },
    /// Building the inverse system failed.
    System(InvSysError),
    /// A consequence guaranteed by duality failed to hold — a soundness bug.
    Tripwire { detail: String },
}

impl fmt::Display for KunteError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            KunteError::EmptyMatrix => write!(f, "the matrix has no rows or no columns"),
            KunteError::ZeroMatrix => write!(f, "every matrix entry is zero"),
            KunteError::RaggedRows { row, expected, found } => write!(
                f,
                "row {row} has {found} entries, expected {expected}"
            ),
            KunteError::DeclaredShapeMismatch { detail } => {
                write!(f, "declared shape mismatch: {detail}")
            }
            KunteError::NoVariables => write!(f, "vars must be at least 1"),
            KunteError::EntryParse { row, col, source } => {
                write!(f, "entry ({row},{col}): {source}")
            }
            KunteError::Json(e) => write!(f, "invalid JSON: {e}"),
            KunteError::NonSquare { rows, cols } => write!(
                f,
                "self-duality certification needs a square matrix, got {rows}x{cols}"
            ),
            KunteError::NotCertified { verdict } => write!(
                f,
                "operation needs a certified self-dual module, but the certificate is {verdict}"
            ),
            KunteError::System(e) => write!(f, "{e}"),
            KunteError::Tripwire { detail } => {
                write!(f, "soundness violation (please report): {detail}")
            }
        }
    }
}

impl std::error::Error for KunteError {}

impl From<InvSysError> for KunteError {
    fn from(e: InvSysError) -> Self {
        KunteError::System(e)
    }
}

/// On-disk form of an encoding matrix.
#[derive(Serialize, Deserialize)]
struct MatrixFile {
    vars: usize,
    rows: usize,
    cols: usize,
    entries: Vec<Vec<String>>,
}

/// An `l × r` matrix over `S*` whose rows generate an inverse system.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EncodingMatrix {
    num_vars: usize,
    rows: usize,
    cols: usize,
    entries: Vec<Vec<Polynomial>>,
}

impl EncodingMatrix {
    pub fn new(num_vars: usize, entries: Vec<Vec<Polynomial>>) -> Result<Self, KunteError> {
        if num_vars == 0 {
            return Err(KunteError::NoVariables);
        }
        if entries.is_empty() || entries[0].is_empty() {
            return Err(KunteError::EmptyMatrix);
        }
        let cols = entries[0].len();
        for (i, row) in entries.iter().enumerate() {
            if row.len() != cols {
                return Err(KunteError::RaggedRows {
                    row: i + 1,
                    expected: cols,
                    found: row.len(),
                });
            }
            for entry in row {
                assert_eq!(entry.num_vars(), num_vars, "entry arity mismatch");
            }
        }
        if entries.iter().flatten().all(Polynomial::is_zero) {
            return Err(KunteError::ZeroMatrix);
        }
        Ok(EncodingMatrix {
            num_vars,
            rows: entries.len(),
            cols,
            entries,
        })
    }

    /// Build from textual entries; handy for fixtures and the curated
    /// witness tables.
    pub fn from_entry_strings(
        num_vars: usize,
        entries: &[&[&str]],
    ) -> Result<Self, KunteError> {
        let parsed = entries
            .iter()
            .enumerate()
            .map(|(i, row)| {
                row.iter()
                    .enumerate()
                    .map(|(j, s)| {
                        parse_polynomial(s, Some(num_vars)).map_err(|source| {
                            KunteError::EntryParse {
                                row: i + 1,
                                col: j + 1,
                                source,
                            }
                        })
                    })
                    .collect::<Result<Vec<_>, _>>()
            })
            .collect::<Result<Vec<_>, _>>()?;
        EncodingMatrix::new(num_vars, parsed)
    }

    /// Read the JSON form `{"vars": n, "rows": l, "cols": r, "entries":
    /// [[poly, ...], ...]}`.
    pub fn from_json(text: &str) -> Result<Self, KunteError> {
        let file: MatrixFile = serde_json::from_str(text).map_err(KunteError::Json)?;
        if file.vars == 0 {
            return Err(KunteError::NoVariables);
        }
        if file.entries.len() != file.rows {
            return Err(KunteError::DeclaredShapeMismatch {
                detail: format!(
                    "rows = {} but the entry table has {} rows",
                    file.rows,
                    file.entries.len()
                ),
            });
        }
        for (i, row) in file.entries.iter().enumerate() {
            if row.len() != file.cols {
                return Err(KunteError::DeclaredShapeMismatch {
                    detail: format!(
                        "cols = {} but row {} has {} entries",
                        file.cols,
                        i + 1,
                        row.len()
                    ),
                });
            }
        }
        let parsed = file
            .entries
            .iter()
            .enumerate()
            .map(|(i, row)| {
                row.iter()
                    .enumerate()
                    .map(|(j, s)| {
                        parse_polynomial(s, Some(file.vars)).map_err(|source| {
                            KunteError::EntryParse {
                                row: i + 1,
                                col: j + 1,
                                source,
                            }
                        })
                    })
                    .collect::<Result<Vec<_>, _>>()
            })
            .collect::<Result<Vec<_>, _>>()?;
        EncodingMatrix::new(file.vars, parsed)
    }

    /// Canonical JSON form; [`Self::from_json`] of the output reproduces the
    /// matrix exactly.
    pub fn to_json(&self) -> String {
        let file = MatrixFile {
            vars: self.num_vars,
            rows: self.rows,
            cols: self.cols,
            entries: self
                .entries
                .iter()
                .map(|row| row.iter().map(Polynomial::to_string).collect())
                .collect(),
        };
        serde_json::to_string_pretty(&file).expect("matrix file serializes")
    }

    pub fn num_vars(&self) -> usize {
        self.num_vars
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn entries(&self) -> &[Vec<Polynomial>] {
        &self.entries
    }

    pub fn entry(&self, row: usize, col: usize) -> &Polynomial {
        &self.entries[row][col]
    }

    pub fn transpose(&self) -> EncodingMatrix {
        let entries = (0..self.cols)
            .map(|j| (0..self.rows).map(|i| self.entries[i][j].clone()).collect())
            .collect();
        EncodingMatrix {
            num_vars: self.num_vars,
            rows: self.cols,
            cols: self.rows,
            entries,
        }
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn is_symmetric(&self) -> bool {
        self.is_square()
            && (0..self.rows).all(|i| (0..i).all(|j| self.entries[i][j] == self.entries[j][i]))
    }

    /// The rows as dual elements — the generators of the encoded system.
    pub fn row_generators(&self) -> Vec<DualElement> {
        self.entries
            .iter()
            .map(|row| DualElement::new(self.num_vars, row.clone()))
            .collect()
    }

    /// Close the row generators under contraction.
    pub fn module_of(&self) -> Result<InverseSystem, InvSysError> {
        InverseSystem::closure(self.row_generators())
    }

    /// Block-diagonal sum.  The summands get disjoint fresh variable sets
    /// (`other` is shifted past `self`'s variables), so they decouple as
    /// modules and Hilbert functions add componentwise.
    pub fn direct_sum(&self, other: &EncodingMatrix) -> EncodingMatrix {
        let num_vars = self.num_vars + other.num_vars;
        let rows = self.rows + other.rows;
        let cols = self.cols + other.cols;
        let mut entries = vec![vec![Polynomial::zero(num_vars); cols]; rows];
        for (i, row) in self.entries.iter().enumerate() {
            for (j, p) in row.iter().enumerate() {
                entries[i][j] = p.embed(num_vars, 0);
            }
        }
        for (i, row) in other.entries.iter().enumerate() {
            for (j, p) in row.iter().enumerate() {
                entries[self.rows + i][self.cols + j] = p.embed(num_vars, self.num_vars);
            }
        }
        EncodingMatrix {
            num_vars,
            rows,
            cols,
            entries,
        }
    }
}

impl fmt::Display for EncodingMatrix {
    /// Rows bracketed and comma-separated: `[f11, f12; f21, f22]`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, row) in self.entries.iter().enumerate() {
            if i > 0 {
                write!(f, "; ")?;
            }
            for (j, p) in row.iter().enumerate() {
                if j > 0 {
                    write!(f, ", ")?;
                }
                write!(f, "{p}")?;
            }
        }
        write!(f, "]")
    }
}

/// What was computed about the duality consequences of transposition.
#[derive(Debug, Clone)]
pub struct DualityReport {
    pub dim: usize,
    pub dim_transpose: usize,
    pub hilbert: HilbertFunction,
    pub loewy: HilbertFunction,
    pub hilbert_transpose: HilbertFunction,
    pub loewy_transpose: HilbertFunction,
}

/// Check the computable consequences of `M(N) ≅ M(N^T)*`: equal total
/// dimensions, and each module's Hilbert layers equal to the other's Loewy
/// layers.  A violation is a soundness bug and comes back as an error.
pub fn duality_consequences(matrix: &EncodingMatrix) -> Result<DualityReport, KunteError> {
    let w = matrix.module_of()?;
    let wt = matrix.transpose().module_of()?;
    let report = DualityReport {
        dim: w.total_dim(),
        dim_transpose: wt.total_dim(),
        hilbert: w.hilbert(),
        loewy: w.loewy(),
        hilbert_transpose: wt.hilbert(),
        loewy_transpose: wt.loewy(),
    };
    if report.dim != report.dim_transpose {
        return Err(KunteError::Tripwire {
            detail: format!(
                "transpose duality requires equal dimensions, got {} and {}",
                report.dim, report.dim_transpose
            ),
        });
    }
    if report.hilbert != report.loewy_transpose || report.loewy != report.hilbert_transpose {
        return Err(KunteError::Tripwire {
            detail: format!(
                "transpose duality requires h(M) = loewy(M^T): h = {}, loewy^T = {}, loewy = {}, h^T = {}",
                report.hilbert, report.loewy_transpose, report.loewy, report.hilbert_transpose
            ),
        });
    }
    Ok(report)
}

/// Verdict of [`certify_self_dual`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CertificateKind {
    /// The matrix is symmetric, which proves the module self-dual.
    SymmetricMatrix,
    /// The Hilbert and Loewy functions differ, which refutes self-duality.
    NotSelfDual,
    /// No decision: the criterion is sufficient, not necessary.
    Inconclusive,
}

impl fmt::Display for CertificateKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            CertificateKind::SymmetricMatrix => "SYMMETRIC_MATRIX",
            CertificateKind::NotSelfDual => "NOT_SELF_DUAL",
            CertificateKind::Inconclusive => "INCONCLUSIVE",
        };
        write!(f, "{s}")
    }
}

/// The result of certifying a square encoding matrix: the module, its
/// layer data, and the verdict.  Construction goes through
/// [`certify_self_dual`], so holding a `SymmetricMatrix`-verdict value is
/// proof the layers were checked.
#[derive(Debug, Clone)]
pub struct Certification {
    matrix: EncodingMatrix,
    system: InverseSystem,
    verdict: CertificateKind,
    hilbert: HilbertFunction,
    loewy: HilbertFunction,
}

impl Certification {
    pub fn matrix(&self) -> &EncodingMatrix {
        &self.matrix
    }

    pub fn system(&self) -> &InverseSystem {
        &self.system
    }

    pub fn verdict(&self) -> CertificateKind {
        self.verdict
    }

    pub fn hilbert(&self) -> &HilbertFunction {
        &self.hilbert
    }

    pub fn loewy(&self) -> &HilbertFunction {
        &self.loewy
    }

    /// Whether the module is certified self-dual.
    pub fn is_certified(&self) -> bool {
        self.verdict == CertificateKind::SymmetricMatrix
    }
}

/// Certify self-duality of the module of a square encoding matrix.
///
/// A symmetric matrix certifies self-duality outright; the Hilbert and
/// Loewy functions are then also compared as a runtime tripwire, since
/// self-dual modules must have them equal.  A non-symmetric matrix is
/// refuted when the layer functions differ, and INCONCLUSIVE otherwise —
/// symmetry of some encoding is sufficient for self-duality but this
/// particular matrix not being symmetric proves nothing.
pub fn certify_self_dual(matrix: &EncodingMatrix) -> Result<Certification, KunteError> {
    if !matrix.is_square() {
        return Err(KunteError::NonSquare {
            rows: matrix.rows(),
            cols: matrix.cols(),
        });
    }
    let system = matrix.module_of()?;
    let hilbert = system.hilbert();
    let loewy = system.loewy();
    let verdict = if matrix.is_symmetric() {
        if hilbert != loewy {
            return Err(KunteError::Tripwire {
                detail: format!(
                    "symmetric matrix but hilbert {} differs from loewy {}",
                    hilbert, loewy
                ),
            });
        }
        CertificateKind::SymmetricMatrix
    } else if hilbert != loewy {
        CertificateKind::NotSelfDual
    } else {
        CertificateKind::Inconclusive
    };
    Ok(Certification {
        matrix: matrix.clone(),
        system,
        verdict,
        hilbert,
        loewy,
    })
}

/// Gram matrix of the certificate pairing on the canonical basis of `W`.
///
/// For a symmetric `N`, `⟨σ^T f, τ^T f⟩ = π(σ^T N τ)` is a well-defined,
/// symmetric, nondegenerate pairing on `W` satisfying `⟨s∘u, v⟩ = ⟨u, s∘v⟩`.
/// On spanning elements `m_i ∘ f_{g_i}` it evaluates to the coefficient of
/// `x^(m_i + m_j)` in the entry `N[g_i][g_j]`; the basis Gram matrix is the
/// pairing pushed through any expression of the basis in spanning elements
/// (well-definedness makes the choice irrelevant).
pub fn gram_matrix(cert: &Certification) -> Result<Matrix, KunteError> {
    if !cert.is_certified() {
        return Err(KunteError::NotCertified {
            verdict: cert.verdict(),
        });
    }
    let system = cert.system();
    let matrix = cert.matrix();
    let spanning = system.spanning();
    let dim = system.total_dim();
    let ambient = system.ambient_dim();

    // Express each canonical basis vector in the spanning set: solve the
    // column system [v_1 ... v_p | b_1 ... b_dim] once by elimination.
    let p = spanning.len();
    let mut aug: Vec<Vec<Rational>> = (0..ambient)
        .map(|coord| {
            let mut row = Vec::with_capacity(p + dim);
            row.extend(spanning.iter().map(|(_, v)| v[coord].clone()));
            row.extend(system.basis().basis().iter().map(|b| b[coord].clone()));
            row
        })
        .collect();
    let width = p + dim;
    // Plain Gauss-Jordan on the augmented system.
    let mut pivot_cols = Vec::new();
    let mut next_row = 0;
    for col in 0..p {
        let Some(src) = (next_row..aug.len()).find(|&r| !aug[r][col].is_zero()) else {
            continue;
        };
        aug.swap(next_row, src);
        let inv = aug[next_row][col].clone().recip();
        for entry in aug[next_row].iter_mut() {
            *entry *= &inv;
        }
        for r in 0..aug.len() {
            if r != next_row && !aug[r][col].is_zero() {
                let factor = aug[r][col].clone();
                for c in col..width {
                    let delta = &factor * &aug[next_row][c];
                    aug[r][c] -= delta;
                }
            }
        }
        pivot_cols.push((next_row, col));
        next_row += 1;
    }
    // Consistency: below the pivots, the right block must be zero.
    for row in aug.iter().skip(next_row) {
        if row[p..].iter().any(|x| !x.is_zero()) {
            return Err(KunteError::Tripwire {
                detail: "basis vector outside the span of its own spanning set".to_string(),
            });
        }
    }
    // One solution per basis vector: free spanning coefficients are zero.
    let mut expressions = vec![vec![Rational::zero(); p]; dim];
    for &(row, col) in &pivot_cols {
        for t in 0..dim {
            expressions[t][col] = aug[row][p + t].clone();
        }
    }

    // Pairing of spanning elements.
    let pair = |i: usize, j: usize| -> Rational {
        let (tag_i, _) = &spanning[i];
        let (tag_j, _) = &spanning[j];
        let product = tag_i.operator.mul(&tag_j.operator);
        matrix
            .entry(tag_i.generator, tag_j.generator)
            .coefficient(&product)
    };
    let mut gram = vec![vec![Rational::zero(); dim]; dim];
    for a in 0..dim {
        for b in 0..dim {
            let mut acc = Rational::zero();
            for i in 0..p {
                if expressions[a][i].is_zero() {
                    continue;
                }
                for j in 0..p {
                    if expressions[b][j].is_zero() {
                        continue;
                    }
                    let v = pair(i, j);
                    if !v.is_zero() {
                        acc += &expressions[a][i] * &expressions[b][j] * v;
                    }
                }
            }
            gram[a][b] = acc;
        }
    }

    if !mat_is_symmetric(&gram) {
        return Err(KunteError::Tripwire {
            detail: "certificate pairing produced an asymmetric Gram matrix".to_string(),
        });
    }
    if mat_inverse(&gram).is_none() {
        return Err(KunteError::Tripwire {
            detail: "certificate pairing is degenerate on W".to_string(),
        });
    }
    Ok(gram)
}

/// Convenience wrapper: subspace of the grid spanned by an explicit list of
/// dual elements (used by tests to cross-check layer computations).
pub fn span_of(system: &InverseSystem, elements: &[DualElement]) -> Subspace {
    let vectors = elements.iter().map(|f| system.to_vector(f)).collect();
    Subspace::from_spanning(system.ambient_dim(), vectors).expect("elements share the grid")
}
