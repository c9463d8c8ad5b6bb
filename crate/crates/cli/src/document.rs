//! JSON documents for monoids and actions.

use std::path::{Path, PathBuf};

use monofact_core::{catalog, AlgebraError, FiniteMonoid, MonoidAction};
use serde::{Deserialize, Serialize};
use thiserror::Error;

/// `{"name"?, "size", "identity", "labels"?, "table"}`; fields are emitted
/// in that order.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MonoidDocument {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub name: Option<String>,
    pub size: usize,
    pub identity: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub labels: Option<Vec<String>>,
    pub table: Vec<Vec<usize>>,
}

/// A monoid given inline or by reference (`@NAME` for the catalog,
/// otherwise a path relative to the referring file).
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum MonoidRef {
    Inline(MonoidDocument),
    Reference(String),
}

/// `{"actor", "acted", "star"}` with `star[b][a] = b ⋆ a`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ActionDocument {
    pub actor: MonoidRef,
    pub acted: MonoidRef,
    pub star: Vec<Vec<usize>>,
}

#[derive(Debug, Error)]
pub enum DocumentError {
    #[error("parse error at line {line}, column {column}: {message}")]
    Parse { line: usize, column: usize, message: String },
    #[error("declared size {declared} but the table has {rows} rows")]
    SizeMismatch { declared: usize, rows: usize },
    #[error("validation error: {0}")]
    Validation(#[from] AlgebraError),
    #[error("cannot read {path}: {message}")]
    Io { path: String, message: String },
    #[error("no catalog monoid named {0}")]
    UnknownCatalog(String),
}

impl DocumentError {
    /// Whether the input was readable but invalid.
    pub fn is_validation(&self) -> bool {
        !matches!(self, DocumentError::Io { .. } | DocumentError::UnknownCatalog(_))
    }
}

impl From<serde_json::Error> for DocumentError {
    fn from(e: serde_json::Error) -> Self {
        DocumentError::Parse { line: e.line(), column: e.column(), message: e.to_string() }
    }
}

impl MonoidDocument {
    pub fn from_monoid(m: &FiniteMonoid) -> Self {
        MonoidDocument {
            name: m.name().map(str::to_string),
            size: m.size(),
            identity: m.identity(),
            labels: m.labels().map(<[String]>::to_vec),
            table: m.rows(),
        }
    }

    pub fn to_monoid(&self) -> Result<FiniteMonoid, DocumentError> {
        if self.table.len() != self.size {
            return Err(DocumentError::SizeMismatch { declared: self.size, rows: self.table.len() });
        }
        let m = FiniteMonoid::from_table(&self.table, self.labels.clone())?;
        if self.identity >= self.size {
            return Err(AlgebraError::ElementOutOfRange { value: self.identity, size: self.size }.into());
        }
        if self.identity != m.identity() {
            return Err(AlgebraError::IdentityMismatch { declared: self.identity, found: m.identity() }.into());
        }
        Ok(match &self.name {
            Some(n) => m.with_name(n.clone()),
            None => m,
        })
    }
}

pub fn parse_document(text: &str) -> Result<MonoidDocument, DocumentError> {
    Ok(serde_json::from_str(text)?)
}

pub fn parse_monoid(text: &str) -> Result<FiniteMonoid, DocumentError> {
    parse_document(text)?.to_monoid()
}

/// Compact canonical JSON with a trailing newline.
pub fn emit_document(doc: &MonoidDocument) -> String {
    let mut s = serde_json::to_string(doc).expect("documents serialize");
    s.push('\n');
    s
}

pub fn emit_monoid(m: &FiniteMonoid) -> String {
    emit_document(&MonoidDocument::from_monoid(m))
}

fn read(path: &Path) -> Result<String, DocumentError> {
    std::fs::read_to_string(path)
        .map_err(|e| DocumentError::Io { path: path.display().to_string(), message: e.to_string() })
}

/// Loads `@NAME` from the catalog or a monoid document from `source`,
/// resolved against `base` when relative.
pub fn load_monoid(source: &str, base: Option<&Path>) -> Result<FiniteMonoid, DocumentError> {
    if let Some(name) = source.strip_prefix('@') {
        return catalog::by_name(name).ok_or_else(|| DocumentError::UnknownCatalog(name.to_string()));
    }
    let path = match base {
        Some(dir) => dir.join(source),
        None => PathBuf::from(source),
    };
    parse_monoid(&read(&path)?)
}

fn resolve(r: &MonoidRef, base: Option<&Path>) -> Result<FiniteMonoid, DocumentError> {
    match r {
        MonoidRef::Inline(doc) => doc.to_monoid(),
        MonoidRef::Reference(s) => load_monoid(s, base),
    }
}

/// Parses an action document and checks it relates `actor` to `acted`.
pub fn parse_action(
    text: &str,
    base: Option<&Path>,
    actor: &FiniteMonoid,
    acted: &FiniteMonoid,
) -> Result<MonoidAction, DocumentError> {
    let doc: ActionDocument = serde_json::from_str(text)?;
    if &resolve(&doc.actor, base)? != actor || &resolve(&doc.acted, base)? != acted {
        return Err(AlgebraError::ActionMismatch.into());
    }
    Ok(MonoidAction::new(actor, acted, &doc.star)?)
}

pub fn load_action(path: &str, actor: &FiniteMonoid, acted: &FiniteMonoid) -> Result<MonoidAction, DocumentError> {
    let p = Path::new(path);
    parse_action(&read(p)?, p.parent(), actor, acted)
}

pub fn emit_action(act: &MonoidAction) -> String {
    let doc = ActionDocument {
        actor: MonoidRef::Inline(MonoidDocument::from_monoid(act.actor())),
        acted: MonoidRef::Inline(MonoidDocument::from_monoid(act.acted())),
        star: act.star_rows(),
    };
    let mut s = serde_json::to_string(&doc).expect("documents serialize");
    s.push('\n');
    s
}
