//! JSON report structures.
//!
//! Every command that supports `--json` emits one of the documents below,
//! serialized with pretty-printing and a trailing newline. Scalars appear
//! as canonical strings (`"5/6"`, never floats), matrices as row-major
//! arrays of those strings, and the whole document is byte-deterministic
//! for a given input. The schema is versioned by the leading `"format": 1`
//! field.

use mock_lie::algebra::{AxiomReport, InvariantRecord};
use mock_lie::der::{DiscrepancySide, ParametricFamily, VerificationReport};
use mock_lie::matrix::ExactMatrix;
use serde::Serialize;

/// The single-algebra report: identification fields plus whichever
/// sections the invoked command produces.
#[derive(Debug, Serialize)]
pub struct Report {
    pub format: u32,
    pub algebra: String,
    pub field: String,
    pub dim: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub axioms: Option<AxiomsSection>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub der: Option<DerSection>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub verification: Option<VerificationSection>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub fingerprint: Option<FingerprintSection>,
    /// Serialized algebra document, emitted by `sum` when no output file
    /// is given.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub document: Option<String>,
}

impl Report {
    /// A report skeleton with no sections attached yet.
    pub fn new(algebra: &str, field: &str, dim: usize) -> Report {
        Report {
            format: 1,
            algebra: algebra.to_string(),
            field: field.to_string(),
            dim,
            axioms: None,
            der: None,
            verification: None,
            fingerprint: None,
            document: None,
        }
    }
}

#[derive(Debug, Serialize)]
pub struct AxiomsSection {
    pub commutative: bool,
    pub jacobi: bool,
    pub mock_lie: bool,
    /// First failing index tuple: `[i, j, k]` for a commutativity
    /// violation, `[i, j, k, l]` for a Jacobi violation. Commutativity
    /// wins when both fail.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<Vec<usize>>,
}

pub fn axioms_section(report: &AxiomReport) -> AxiomsSection {
    let witness = if let Some((i, j, k)) = report.commutativity_witness {
        Some(vec![i, j, k])
    } else {
        report.jacobi_witness.map(|(i, j, k, l)| vec![i, j, k, l])
    };
    AxiomsSection {
        commutative: report.commutative,
        jacobi: report.jacobi,
        mock_lie: report.is_mock_lie(),
        witness,
    }
}

#[derive(Debug, Serialize)]
pub struct DerSection {
    pub dim: usize,
    /// Canonical basis matrices, each flattened row-major.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub basis: Option<Vec<Vec<String>>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub parametric: Option<ParametricSection>,
    /// Nonzero commutator brackets of the basis, for `bracket-table`.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub brackets: Option<Vec<BracketEntry>>,
}

#[derive(Debug, Serialize)]
pub struct ParametricSection {
    pub parameters: Vec<String>,
    /// `n` rows of `n` rendered linear forms.
    pub grid: Vec<Vec<String>>,
}

/// `[D_left, D_right]` expressed in the canonical basis; `coords[t]` is
/// the coefficient of `D_{t+1}`. Indices are 1-based.
#[derive(Debug, Serialize)]
pub struct BracketEntry {
    pub left: usize,
    pub right: usize,
    pub coords: Vec<String>,
}

/// Row-major canonical scalar strings of a matrix.
pub fn matrix_entries(m: &ExactMatrix) -> Vec<String> {
    m.flatten_row_major()
        .iter()
        .map(|s| s.to_string())
        .collect()
}

pub fn parametric_section(family: &ParametricFamily) -> ParametricSection {
    let n = family.n();
    let parameters: Vec<String> = family.parameters().to_vec();
    let grid = (0..n)
        .map(|row| {
            (0..n)
                .map(|col| family.entry(row, col).render(family.parameters()))
                .collect()
        })
        .collect();
    ParametricSection { parameters, grid }
}

#[derive(Debug, Serialize)]
pub struct VerificationSection {
    /// Dimension of the computed derivation space.
    pub dim: usize,
    /// Dimension of the transcribed reference family.
    pub paper_dim: usize,
    pub equal: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<WitnessSection>,
}

/// A matrix in one space but not the other.
#[derive(Debug, Serialize)]
pub struct WitnessSection {
    /// `"computed_only"` or `"reference_only"`.
    pub side: String,
    /// Row-major entries.
    pub matrix: Vec<String>,
}

pub fn verification_section(report: &VerificationReport) -> VerificationSection {
    let witness = report.discrepancy.as_ref().map(|(side, m)| WitnessSection {
        side: match side {
            DiscrepancySide::ComputedOnly => String::from("computed_only"),
            DiscrepancySide::ReferenceOnly => String::from("reference_only"),
        },
        matrix: matrix_entries(m),
    });
    VerificationSection {
        dim: report.computed_dim,
        paper_dim: report.reference_dim,
        equal: report.spaces_equal,
        witness,
    }
}

#[derive(Debug, Serialize)]
pub struct FingerprintSection {
    pub dim: usize,
    pub dim_square: usize,
    pub dim_annihilator: usize,
    pub dim_der: usize,
}

pub fn fingerprint_section(record: &InvariantRecord) -> FingerprintSection {
    FingerprintSection {
        dim: record.dim,
        dim_square: record.dim_square,
        dim_annihilator: record.dim_annihilator,
        dim_der: record.dim_der,
    }
}

/// `catalog list --json` output.
#[derive(Debug, Serialize)]
pub struct CatalogList {
    pub format: u32,
    pub entries: Vec<CatalogRow>,
}

#[derive(Debug, Serialize)]
pub struct CatalogRow {
    pub algebra: String,
    pub dim: usize,
}

/// `verify-catalog --json` output.
#[derive(Debug, Serialize)]
pub struct VerifyCatalogReport {
    pub format: u32,
    pub all_equal: bool,
    pub entries: Vec<VerifyEntry>,
}

#[derive(Debug, Serialize)]
pub struct VerifyEntry {
    pub algebra: String,
    pub field: String,
    pub dim: usize,
    pub verification: VerificationSection,
}

/// Pretty-printed JSON with a trailing newline.
pub fn to_json(value: &impl Serialize) -> String {
    let mut text =
        serde_json::to_string_pretty(value).expect("report structures serialize without error");
    text.push('\n');
    text
}
