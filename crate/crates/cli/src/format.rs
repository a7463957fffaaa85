//! On-disk format: one JSON document per object, tagged by `kind`, with
//! sparse entry lists mapping index tuples to rational strings `"p/q"`.
//! Dense tensors exist only in memory; files stay small and auditable.
//!
//! Scenario kinds (`embedding_scenario`, `deformation_scenario`) reference
//! sibling files by path relative to the scenario file's directory, so a
//! single path names a complete check configuration.

use std::collections::HashSet;
use std::fs;
use std::path::{Path, PathBuf};

use leibniz3::dialgebra::{Action, TriLeibnizDialgebra};
use leibniz3::leibniz::Representation;
use leibniz3::matrix::LinMap;
use leibniz3::scalar::{format_scalar, parse_scalar, Scalar};
use leibniz3::tensor::{ActionKind, ActionTensor, Bracket3};
use leibniz3::trileibniz::TriLeibnizAlgebra;
use serde::{Deserialize, Serialize};

pub const SCHEMA_VERSION: u64 = 1;

/// Index tuple plus rational string; the only wire form for tensor entries.
pub type Entry4 = ([usize; 4], String);
/// Matrix position plus rational string.
pub type Entry2 = ([usize; 2], String);

#[derive(Debug, thiserror::Error)]
pub enum FormatError {
    /// The file is not valid JSON or a rational string does not parse; the
    /// detail carries the serde line/column or the offending field and entry.
    #[error("parse error in {path}: {detail}")]
    ParseError { path: PathBuf, detail: String },
    /// The document shape is wrong: bad schema version, unknown kind, unknown
    /// or missing fields, duplicate entries, or incoherent cross-references.
    #[error("schema error in {path}: {detail}")]
    SchemaError { path: PathBuf, detail: String },
    /// An entry references an index at or beyond a declared dimension.
    #[error("index out of range in {path}: {detail}")]
    IndexOutOfRange { path: PathBuf, detail: String },
    #[error("cannot access {path}: {detail}")]
    Io { path: PathBuf, detail: String },
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Leibniz3Doc {
    pub schema_version: u64,
    pub kind: String,
    pub dim: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub basis: Option<Vec<String>>,
    pub entries: Vec<Entry4>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TriLeibnizDoc {
    pub schema_version: u64,
    pub kind: String,
    pub dim: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub basis: Option<Vec<String>>,
    pub vdash: Vec<Entry4>,
    pub dashv: Vec<Entry4>,
    pub perp: Vec<Entry4>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RepresentationDoc {
    pub schema_version: u64,
    pub kind: String,
    pub alg_dim: usize,
    pub space_dim: usize,
    pub algebra: Vec<Entry4>,
    pub left: Vec<Entry4>,
    pub middle: Vec<Entry4>,
    pub right: Vec<Entry4>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ActionDoc {
    pub schema_version: u64,
    pub kind: String,
    pub base_dim: usize,
    pub target_dim: usize,
    pub base: Vec<Entry4>,
    pub target: Vec<Entry4>,
    pub left: Vec<Entry4>,
    pub middle: Vec<Entry4>,
    pub right: Vec<Entry4>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct LinmapDoc {
    pub schema_version: u64,
    pub kind: String,
    pub rows: usize,
    pub cols: usize,
    pub entries: Vec<Entry2>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct EmbeddingScenarioDoc {
    pub schema_version: u64,
    pub kind: String,
    /// Path to a `representation` file, relative to this document.
    pub representation: String,
    /// Path to a `linmap` file (the candidate tensor), relative to this
    /// document.
    pub tensor: String,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct DialgebraDoc {
    pub schema_version: u64,
    pub kind: String,
    pub dim: usize,
    pub base: Vec<Entry4>,
    pub vdash: Vec<Entry4>,
    pub dashv: Vec<Entry4>,
    pub perp: Vec<Entry4>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct DeformationScenarioDoc {
    pub schema_version: u64,
    pub kind: String,
    /// Path to a `representation` file, relative to this document.
    pub representation: String,
    /// Path to a `linmap` file (the base tensor), relative to this document.
    pub tensor: String,
    /// Path to a `linmap` file (the deformation generator), relative to this
    /// document.
    pub generator: String,
}

/// A parsed document of any kind, prior to semantic realization.
#[derive(Clone, Debug, PartialEq, Serialize)]
#[serde(untagged)]
pub enum FileDoc {
    Leibniz3(Leibniz3Doc),
    TriLeibniz(TriLeibnizDoc),
    Representation(RepresentationDoc),
    Action(ActionDoc),
    Linmap(LinmapDoc),
    EmbeddingScenario(EmbeddingScenarioDoc),
    Dialgebra(DialgebraDoc),
    DeformationScenario(DeformationScenarioDoc),
}

impl FileDoc {
    pub fn kind(&self) -> &'static str {
        match self {
            FileDoc::Leibniz3(_) => "leibniz3",
            FileDoc::TriLeibniz(_) => "trileibniz",
            FileDoc::Representation(_) => "representation",
            FileDoc::Action(_) => "action",
            FileDoc::Linmap(_) => "linmap",
            FileDoc::EmbeddingScenario(_) => "embedding_scenario",
            FileDoc::Dialgebra(_) => "dialgebra",
            FileDoc::DeformationScenario(_) => "deformation_scenario",
        }
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("documents always serialize");
        s.push('\n');
        s
    }
}

/// An embedding-tensor check configuration: a representation plus a
/// candidate map.
#[derive(Clone, Debug, PartialEq)]
pub struct EmbeddingScenario {
    pub rep: Representation,
    pub tensor: LinMap,
}

/// A deformation check configuration: a representation, a base tensor, and a
/// deformation generator.
#[derive(Clone, Debug, PartialEq)]
pub struct DeformationScenario {
    pub rep: Representation,
    pub tensor: LinMap,
    pub generator: LinMap,
}

/// A fully realized object, ready for the checkers and constructors.
#[derive(Clone, Debug, PartialEq)]
pub enum Loaded {
    Leibniz3(Bracket3),
    TriLeibniz(TriLeibnizAlgebra),
    Representation(Representation),
    Action(Action),
    Linmap(LinMap),
    EmbeddingScenario(EmbeddingScenario),
    Dialgebra(TriLeibnizDialgebra),
    DeformationScenario(DeformationScenario),
}

impl Loaded {
    pub fn kind(&self) -> &'static str {
        match self {
            Loaded::Leibniz3(_) => "leibniz3",
            Loaded::TriLeibniz(_) => "trileibniz",
            Loaded::Representation(_) => "representation",
            Loaded::Action(_) => "action",
            Loaded::Linmap(_) => "linmap",
            Loaded::EmbeddingScenario(_) => "embedding_scenario",
            Loaded::Dialgebra(_) => "dialgebra",
            Loaded::DeformationScenario(_) => "deformation_scenario",
        }
    }
}

fn schema_err(path: &Path, detail: impl Into<String>) -> FormatError {
    FormatError::SchemaError { path: path.to_path_buf(), detail: detail.into() }
}

/// Parses a document from disk, validating schema version, kind, and field
/// shape, but not yet resolving scenario references.
pub fn read_doc(path: &Path) -> Result<FileDoc, FormatError> {
    let text = fs::read_to_string(path)
        .map_err(|e| FormatError::Io { path: path.to_path_buf(), detail: e.to_string() })?;
    let value: serde_json::Value = serde_json::from_str(&text)
        .map_err(|e| FormatError::ParseError { path: path.to_path_buf(), detail: e.to_string() })?;
    let obj = value
        .as_object()
        .ok_or_else(|| schema_err(path, "top level must be a JSON object"))?;
    let version = obj
        .get("schema_version")
        .and_then(|v| v.as_u64())
        .ok_or_else(|| schema_err(path, "missing or non-integer field schema_version"))?;
    if version != SCHEMA_VERSION {
        return Err(schema_err(
            path,
            format!("unsupported schema_version {version}, expected {SCHEMA_VERSION}"),
        ));
    }
    let kind = obj
        .get("kind")
        .and_then(|v| v.as_str())
        .ok_or_else(|| schema_err(path, "missing or non-string field kind"))?
        .to_owned();
    let fit = |e: serde_json::Error| schema_err(path, e.to_string());
    Ok(match kind.as_str() {
        "leibniz3" => FileDoc::Leibniz3(serde_json::from_value(value).map_err(fit)?),
        "trileibniz" => FileDoc::TriLeibniz(serde_json::from_value(value).map_err(fit)?),
        "representation" => FileDoc::Representation(serde_json::from_value(value).map_err(fit)?),
        "action" => FileDoc::Action(serde_json::from_value(value).map_err(fit)?),
        "linmap" => FileDoc::Linmap(serde_json::from_value(value).map_err(fit)?),
        "embedding_scenario" => {
            FileDoc::EmbeddingScenario(serde_json::from_value(value).map_err(fit)?)
        }
        "dialgebra" => FileDoc::Dialgebra(serde_json::from_value(value).map_err(fit)?),
        "deformation_scenario" => {
            FileDoc::DeformationScenario(serde_json::from_value(value).map_err(fit)?)
        }
        other => return Err(schema_err(path, format!("unknown kind {other:?}"))),
    })
}

/// Writes a document as pretty-printed JSON with a trailing newline.
pub fn write_doc(doc: &FileDoc, path: &Path) -> Result<(), FormatError> {
    fs::write(path, doc.to_json())
        .map_err(|e| FormatError::Io { path: path.to_path_buf(), detail: e.to_string() })
}

fn parse_entries4(
    path: &Path,
    field: &str,
    raw: &[Entry4],
    dims: [usize; 4],
) -> Result<Vec<([usize; 4], Scalar)>, FormatError> {
    let mut seen = HashSet::with_capacity(raw.len());
    let mut out = Vec::with_capacity(raw.len());
    for (i, (idx, text)) in raw.iter().enumerate() {
        for (slot, (&ix, &dim)) in idx.iter().zip(&dims).enumerate() {
            if ix >= dim {
                return Err(FormatError::IndexOutOfRange {
                    path: path.to_path_buf(),
                    detail: format!(
                        "{field} entry {i}: index {ix} in slot {slot} exceeds dimension {dim}"
                    ),
                });
            }
        }
        if !seen.insert(*idx) {
            return Err(schema_err(path, format!("{field} entry {i}: duplicate index {idx:?}")));
        }
        let v = parse_scalar(text).map_err(|e| FormatError::ParseError {
            path: path.to_path_buf(),
            detail: format!("{field} entry {i}: {e}"),
        })?;
        out.push((*idx, v));
    }
    Ok(out)
}

fn bracket_from_entries(
    path: &Path,
    field: &str,
    dim: usize,
    raw: &[Entry4],
) -> Result<Bracket3, FormatError> {
    let entries = parse_entries4(path, field, raw, [dim; 4])?;
    Bracket3::from_entries(dim, &entries).map_err(|e| schema_err(path, e.to_string()))
}

fn action_tensor_from_entries(
    path: &Path,
    field: &str,
    kind: ActionKind,
    alg_dim: usize,
    space_dim: usize,
    raw: &[Entry4],
) -> Result<ActionTensor, FormatError> {
    let [d0, d1, d2] = kind.arg_dims(alg_dim, space_dim);
    let entries = parse_entries4(path, field, raw, [d0, d1, d2, space_dim])?;
    ActionTensor::from_entries(kind, alg_dim, space_dim, &entries)
        .map_err(|e| schema_err(path, e.to_string()))
}

fn linmap_from_doc(path: &Path, doc: &LinmapDoc) -> Result<LinMap, FormatError> {
    let mut seen = HashSet::with_capacity(doc.entries.len());
    let mut m = LinMap::zero(doc.rows, doc.cols);
    for (i, ([r, c], text)) in doc.entries.iter().enumerate() {
        for (slot, (&ix, dim)) in [r, c].iter().zip([doc.rows, doc.cols]).enumerate() {
            if *ix >= dim {
                return Err(FormatError::IndexOutOfRange {
                    path: path.to_path_buf(),
                    detail: format!(
                        "entries entry {i}: index {ix} in slot {slot} exceeds dimension {dim}"
                    ),
                });
            }
        }
        if !seen.insert([*r, *c]) {
            return Err(schema_err(path, format!("entries entry {i}: duplicate index [{r}, {c}]")));
        }
        let v = parse_scalar(text).map_err(|e| FormatError::ParseError {
            path: path.to_path_buf(),
            detail: format!("entries entry {i}: {e}"),
        })?;
        m.set(*r, *c, v);
    }
    Ok(m)
}

fn basis_len_check(
    path: &Path,
    basis: &Option<Vec<String>>,
    dim: usize,
) -> Result<(), FormatError> {
    if let Some(names) = basis {
        if names.len() != dim {
            return Err(schema_err(
                path,
                format!("basis lists {} labels for dimension {dim}", names.len()),
            ));
        }
    }
    Ok(())
}

fn representation_from_doc(
    path: &Path,
    doc: &RepresentationDoc,
) -> Result<Representation, FormatError> {
    let (n, m) = (doc.alg_dim, doc.space_dim);
    let algebra = bracket_from_entries(path, "algebra", n, &doc.algebra)?;
    let left = action_tensor_from_entries(path, "left", ActionKind::Left, n, m, &doc.left)?;
    let middle = action_tensor_from_entries(path, "middle", ActionKind::Middle, n, m, &doc.middle)?;
    let right = action_tensor_from_entries(path, "right", ActionKind::Right, n, m, &doc.right)?;
    Representation::new(algebra, left, middle, right).map_err(|e| schema_err(path, e.to_string()))
}

fn load_referenced_representation(
    scenario: &Path,
    rel: &str,
) -> Result<Representation, FormatError> {
    let target = scenario.parent().unwrap_or(Path::new(".")).join(rel);
    match load(&target)? {
        Loaded::Representation(rep) => Ok(rep),
        other => Err(schema_err(
            scenario,
            format!("referenced file {rel:?} has kind {}, expected representation", other.kind()),
        )),
    }
}

fn load_referenced_linmap(
    scenario: &Path,
    rel: &str,
    rows: usize,
    cols: usize,
    role: &str,
) -> Result<LinMap, FormatError> {
    let target = scenario.parent().unwrap_or(Path::new(".")).join(rel);
    match load(&target)? {
        Loaded::Linmap(m) => {
            if m.rows() != rows || m.cols() != cols {
                return Err(schema_err(
                    scenario,
                    format!(
                        "{role} {rel:?} is {}x{}, expected {rows}x{cols}",
                        m.rows(),
                        m.cols()
                    ),
                ));
            }
            Ok(m)
        }
        other => Err(schema_err(
            scenario,
            format!("referenced file {rel:?} has kind {}, expected linmap", other.kind()),
        )),
    }
}

/// Turns a parsed document into a core object, resolving any scenario
/// references relative to `path`'s directory.
pub fn realize(doc: &FileDoc, path: &Path) -> Result<Loaded, FormatError> {
    Ok(match doc {
        FileDoc::Leibniz3(d) => {
            basis_len_check(path, &d.basis, d.dim)?;
            Loaded::Leibniz3(bracket_from_entries(path, "entries", d.dim, &d.entries)?)
        }
        FileDoc::TriLeibniz(d) => {
            basis_len_check(path, &d.basis, d.dim)?;
            let vdash = bracket_from_entries(path, "vdash", d.dim, &d.vdash)?;
            let dashv = bracket_from_entries(path, "dashv", d.dim, &d.dashv)?;
            let perp = bracket_from_entries(path, "perp", d.dim, &d.perp)?;
            Loaded::TriLeibniz(
                TriLeibnizAlgebra::new(vdash, dashv, perp)
                    .map_err(|e| schema_err(path, e.to_string()))?,
            )
        }
        FileDoc::Representation(d) => Loaded::Representation(representation_from_doc(path, d)?),
        FileDoc::Action(d) => {
            let (n, m) = (d.base_dim, d.target_dim);
            let base = bracket_from_entries(path, "base", n, &d.base)?;
            let target = bracket_from_entries(path, "target", m, &d.target)?;
            let left = action_tensor_from_entries(path, "left", ActionKind::Left, n, m, &d.left)?;
            let middle =
                action_tensor_from_entries(path, "middle", ActionKind::Middle, n, m, &d.middle)?;
            let right =
                action_tensor_from_entries(path, "right", ActionKind::Right, n, m, &d.right)?;
            Loaded::Action(
                Action::new(base, target, left, middle, right)
                    .map_err(|e| schema_err(path, e.to_string()))?,
            )
        }
        FileDoc::Linmap(d) => Loaded::Linmap(linmap_from_doc(path, d)?),
        FileDoc::EmbeddingScenario(d) => {
            let rep = load_referenced_representation(path, &d.representation)?;
            let (n, m) = (rep.alg_dim(), rep.space_dim());
            let tensor = load_referenced_linmap(path, &d.tensor, n, m, "tensor")?;
            Loaded::EmbeddingScenario(EmbeddingScenario { rep, tensor })
        }
        FileDoc::Dialgebra(d) => {
            let base = bracket_from_entries(path, "base", d.dim, &d.base)?;
            let vdash = bracket_from_entries(path, "vdash", d.dim, &d.vdash)?;
            let dashv = bracket_from_entries(path, "dashv", d.dim, &d.dashv)?;
            let perp = bracket_from_entries(path, "perp", d.dim, &d.perp)?;
            let tri = TriLeibnizAlgebra::new(vdash, dashv, perp)
                .map_err(|e| schema_err(path, e.to_string()))?;
            Loaded::Dialgebra(
                TriLeibnizDialgebra::new(base, tri).map_err(|e| schema_err(path, e.to_string()))?,
            )
        }
        FileDoc::DeformationScenario(d) => {
            let rep = load_referenced_representation(path, &d.representation)?;
            let (n, m) = (rep.alg_dim(), rep.space_dim());
            let tensor = load_referenced_linmap(path, &d.tensor, n, m, "tensor")?;
            let generator = load_referenced_linmap(path, &d.generator, n, m, "generator")?;
            Loaded::DeformationScenario(DeformationScenario { rep, tensor, generator })
        }
    })
}

/// Reads and realizes a document in one step.
pub fn load(path: &Path) -> Result<Loaded, FormatError> {
    let doc = read_doc(path)?;
    realize(&doc, path)
}

fn encode_entries4(entries: Vec<([usize; 4], Scalar)>) -> Vec<Entry4> {
    entries.into_iter().map(|(idx, v)| (idx, format_scalar(&v))).collect()
}

pub fn encode_leibniz3(b: &Bracket3) -> FileDoc {
    FileDoc::Leibniz3(Leibniz3Doc {
        schema_version: SCHEMA_VERSION,
        kind: "leibniz3".into(),
        dim: b.dim(),
        basis: None,
        entries: encode_entries4(b.nonzero_entries()),
    })
}

pub fn encode_trileibniz(ta: &TriLeibnizAlgebra) -> FileDoc {
    FileDoc::TriLeibniz(TriLeibnizDoc {
        schema_version: SCHEMA_VERSION,
        kind: "trileibniz".into(),
        dim: ta.dim(),
        basis: None,
        vdash: encode_entries4(ta.b_vdash().nonzero_entries()),
        dashv: encode_entries4(ta.b_dashv().nonzero_entries()),
        perp: encode_entries4(ta.b_perp().nonzero_entries()),
    })
}

pub fn encode_representation(rep: &Representation) -> FileDoc {
    FileDoc::Representation(RepresentationDoc {
        schema_version: SCHEMA_VERSION,
        kind: "representation".into(),
        alg_dim: rep.alg_dim(),
        space_dim: rep.space_dim(),
        algebra: encode_entries4(rep.algebra().nonzero_entries()),
        left: encode_entries4(rep.left().nonzero_entries()),
        middle: encode_entries4(rep.middle().nonzero_entries()),
        right: encode_entries4(rep.right().nonzero_entries()),
    })
}

pub fn encode_action(act: &Action) -> FileDoc {
    FileDoc::Action(ActionDoc {
        schema_version: SCHEMA_VERSION,
        kind: "action".into(),
        base_dim: act.base_dim(),
        target_dim: act.target_dim(),
        base: encode_entries4(act.base().nonzero_entries()),
        target: encode_entries4(act.target().nonzero_entries()),
        left: encode_entries4(act.left().nonzero_entries()),
        middle: encode_entries4(act.middle().nonzero_entries()),
        right: encode_entries4(act.right().nonzero_entries()),
    })
}

pub fn encode_linmap(m: &LinMap) -> FileDoc {
    let mut entries = Vec::new();
    for r in 0..m.rows() {
        for c in 0..m.cols() {
            let v = m.get(r, c);
            if !num::Zero::is_zero(v) {
                entries.push(([r, c], format_scalar(v)));
            }
        }
    }
    FileDoc::Linmap(LinmapDoc {
        schema_version: SCHEMA_VERSION,
        kind: "linmap".into(),
        rows: m.rows(),
        cols: m.cols(),
        entries,
    })
}

pub fn encode_dialgebra(d: &TriLeibnizDialgebra) -> FileDoc {
    FileDoc::Dialgebra(DialgebraDoc {
        schema_version: SCHEMA_VERSION,
        kind: "dialgebra".into(),
        dim: d.dim(),
        base: encode_entries4(d.base().nonzero_entries()),
        vdash: encode_entries4(d.tri().b_vdash().nonzero_entries()),
        dashv: encode_entries4(d.tri().b_dashv().nonzero_entries()),
        perp: encode_entries4(d.tri().b_perp().nonzero_entries()),
    })
}

pub fn embedding_scenario_doc(representation: &str, tensor: &str) -> FileDoc {
    FileDoc::EmbeddingScenario(EmbeddingScenarioDoc {
        schema_version: SCHEMA_VERSION,
        kind: "embedding_scenario".into(),
        representation: representation.into(),
        tensor: tensor.into(),
    })
}

pub fn deformation_scenario_doc(representation: &str, tensor: &str, generator: &str) -> FileDoc {
    FileDoc::DeformationScenario(DeformationScenarioDoc {
        schema_version: SCHEMA_VERSION,
        kind: "deformation_scenario".into(),
        representation: representation.into(),
        tensor: tensor.into(),
        generator: generator.into(),
    })
}

/// Expected `check` verdict recorded in the corpus manifest.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Expect {
    Pass,
    Fail,
    /// No standalone check exists for the kind (plain matrices); the file is
    /// bundled only as scenario input.
    Skip,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ManifestEntry {
    pub file: String,
    pub kind: String,
    pub expect: Expect,
}

/// Index of the bundled corpus: one entry per file with its expected verdict.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Manifest {
    pub schema_version: u64,
    pub entries: Vec<ManifestEntry>,
}

impl Manifest {
    pub fn to_json(&self) -> String {
        let mut text = serde_json::to_string_pretty(self).expect("manifest serializes");
        text.push('\n');
        text
    }
}

pub fn read_manifest(path: &Path) -> Result<Manifest, FormatError> {
    let text = fs::read_to_string(path)
        .map_err(|e| FormatError::Io { path: path.to_path_buf(), detail: e.to_string() })?;
    serde_json::from_str(&text)
        .map_err(|e| FormatError::SchemaError { path: path.to_path_buf(), detail: e.to_string() })
}
