//! Declarative document formats.
//!
//! Five formats share one syntax, a strict TOML subset: algebras, cocycles
//! with their coefficient space, extension bundles, actions, and graded
//! morphisms. Rationals are quoted strings in the grammar the scalar parser
//! accepts; omitted entries mean zero; symmetric and antisymmetric tables
//! may state each unordered pair once, and explicit mirror entries must
//! agree. Every parse failure carries the line and column it was detected
//! at. Emitted documents are canonical: fixed section order, nonzero entries
//! only, and parsing an emitted document reproduces the structure exactly.

mod action_doc;
mod algebra_doc;
mod cocycle_doc;
mod morphism_doc;
mod raw;

pub use action_doc::{emit_action, parse_action, ActionDocument};
pub use algebra_doc::{emit_algebra, parse_algebra};
pub use cocycle_doc::{
    emit_cocycle, emit_extension, parse_cocycle, parse_extension, CocycleDocument,
    ExtensionDocument,
};
pub use morphism_doc::{emit_morphism, parse_morphism};

use crate::matrix::Matrix;
use crate::scalar::{format_rational, parse_rational, Scalar};
use num_traits::Zero;
use raw::{Pos, RawEntry, RawSection, RawValue};
use std::collections::BTreeMap;
use std::collections::BTreeSet;

/// A located parse or validation failure.
#[derive(thiserror::Error, Clone, PartialEq, Eq, Debug)]
#[error("line {line}, column {column}: {message}")]
pub struct ParseError {
    pub line: usize,
    pub column: usize,
    pub message: String,
}

impl ParseError {
    fn at(pos: Pos, message: impl Into<String>) -> Self {
        ParseError { line: pos.line, column: pos.col, message: message.into() }
    }
}

/// Names a document may declare: no commas (pair keys), no quotes or
/// backslashes (quoted keys have no escapes), no control characters, no
/// surrounding whitespace (pair keys are trimmed at the comma).
fn name_ok(name: &str) -> bool {
    !name.is_empty()
        && name == name.trim()
        && !name.contains([',', '"', '\\'])
        && name.chars().all(|c| !c.is_control())
}

fn check_names(
    items: &[(String, Pos)],
    seen: &mut BTreeSet<String>,
) -> Result<Vec<String>, ParseError> {
    let mut out = Vec::with_capacity(items.len());
    for (name, pos) in items {
        if !name_ok(name) {
            return Err(ParseError::at(*pos, format!("invalid basis name {name:?}")));
        }
        if !seen.insert(name.clone()) {
            return Err(ParseError::at(*pos, format!("duplicate basis name {name:?}")));
        }
        out.push(name.clone());
    }
    Ok(out)
}

fn index_of(names: &[String], name: &str) -> Option<usize> {
    names.iter().position(|n| n == name)
}

fn as_array(entry: &RawEntry) -> Result<&[(String, Pos)], ParseError> {
    match &entry.value {
        RawValue::Arr(items) => Ok(items),
        _ => Err(ParseError::at(
            entry.pos,
            format!("value of {:?} must be an array of strings", entry.key),
        )),
    }
}

fn as_table(entry: &RawEntry) -> Result<&[(String, String, Pos)], ParseError> {
    match &entry.value {
        RawValue::Table(pairs) => Ok(pairs),
        _ => Err(ParseError::at(
            entry.pos,
            format!("value of {:?} must be an inline table", entry.key),
        )),
    }
}

/// Read an inline table as a coordinate vector over `names`.
fn combination(
    pairs: &[(String, String, Pos)],
    names: &[String],
    what: &str,
) -> Result<Vec<Scalar>, ParseError> {
    let mut out = vec![Scalar::zero(); names.len()];
    for (name, value, pos) in pairs {
        let idx = index_of(names, name)
            .ok_or_else(|| ParseError::at(*pos, format!("unknown {what} name {name:?}")))?;
        out[idx] = parse_rational(value).map_err(|msg| ParseError::at(*pos, msg))?;
    }
    Ok(out)
}

/// Split a `"left,right"` key into its two names.
fn split_pair(key: &str, pos: Pos) -> Result<(String, String), ParseError> {
    let mut parts = key.split(',');
    match (parts.next(), parts.next(), parts.next()) {
        (Some(l), Some(r), None) => Ok((l.trim().to_string(), r.trim().to_string())),
        _ => Err(ParseError::at(
            pos,
            format!("key {key:?} must be two names separated by one comma"),
        )),
    }
}

/// Fill operator columns from a section: each entry key is an input basis
/// name, each value a combination of output basis names.
fn fill_operator(
    m: &mut Matrix,
    section: &RawSection,
    input_names: &[String],
    output_names: &[String],
    input_what: &str,
    output_what: &str,
) -> Result<(), ParseError> {
    for entry in &section.entries {
        let col = index_of(input_names, &entry.key).ok_or_else(|| {
            ParseError::at(entry.pos, format!("unknown {input_what} name {:?}", entry.key))
        })?;
        let v = combination(as_table(entry)?, output_names, output_what)?;
        for (row, x) in v.into_iter().enumerate() {
            if !x.is_zero() {
                m.set(row, col, x);
            }
        }
    }
    Ok(())
}

/// Dense symmetric or antisymmetric pair table filled entry by entry, with
/// mirror completion and contradiction checks.
struct PairTable {
    n: usize,
    coords: usize,
    antisymmetric: bool,
    data: Vec<Scalar>,
    explicit: BTreeMap<(usize, usize), Vec<Scalar>>,
}

impl PairTable {
    fn new(n: usize, coords: usize, antisymmetric: bool) -> Self {
        PairTable {
            n,
            coords,
            antisymmetric,
            data: vec![Scalar::zero(); n * n * coords],
            explicit: BTreeMap::new(),
        }
    }

    fn insert(
        &mut self,
        (i, left): (usize, &str),
        (j, right): (usize, &str),
        value: Vec<Scalar>,
        pos: Pos,
    ) -> Result<(), ParseError> {
        if self.explicit.contains_key(&(i, j)) {
            return Err(ParseError::at(pos, format!("duplicate entry for ({left}, {right})")));
        }
        if self.antisymmetric && i == j && value.iter().any(|x| !x.is_zero()) {
            return Err(ParseError::at(
                pos,
                format!("antisymmetric entry ({left}, {right}) must vanish"),
            ));
        }
        let mirror: Vec<Scalar> = if self.antisymmetric {
            value.iter().map(|x| -x).collect()
        } else {
            value.clone()
        };
        if let Some(given) = self.explicit.get(&(j, i)) {
            if *given != mirror {
                return Err(ParseError::at(
                    pos,
                    format!("entry ({left}, {right}) contradicts its mirror ({right}, {left})"),
                ));
            }
        }
        for (k, x) in value.iter().enumerate() {
            self.data[(i * self.n + j) * self.coords + k] = x.clone();
        }
        for (k, x) in mirror.into_iter().enumerate() {
            self.data[(j * self.n + i) * self.coords + k] = x;
        }
        self.explicit.insert((i, j), value);
        Ok(())
    }
}

/// Key encoding: bare when possible, quoted otherwise.
fn enc_key(name: &str) -> String {
    let bare = !name.is_empty()
        && name.chars().all(|c| c.is_ascii_alphanumeric() || c == '_' || c == '-');
    if bare {
        name.to_string()
    } else {
        format!("\"{name}\"")
    }
}

fn enc_names(names: &[String]) -> String {
    let inner: Vec<String> = names.iter().map(|n| format!("\"{n}\"")).collect();
    format!("[{}]", inner.join(", "))
}

/// An inline table for a coordinate vector; None when the vector is zero.
fn enc_combination(coords: &[Scalar], names: &[String]) -> Option<String> {
    let mut parts = Vec::new();
    for (x, name) in coords.iter().zip(names) {
        if !x.is_zero() {
            parts.push(format!("{} = \"{}\"", enc_key(name), format_rational(x)));
        }
    }
    if parts.is_empty() {
        None
    } else {
        Some(format!("{{ {} }}", parts.join(", ")))
    }
}

fn pair_key(left: &str, right: &str) -> String {
    enc_key(&format!("{left},{right}"))
}

/// Lines for one operator section: one entry per nonzero column.
fn operator_lines(m: &Matrix, input_names: &[String], output_names: &[String]) -> Vec<String> {
    let mut lines = Vec::new();
    for (col, name) in input_names.iter().enumerate() {
        if let Some(val) = enc_combination(&m.col_vec(col), output_names) {
            lines.push(format!("{} = {}", enc_key(name), val));
        }
    }
    lines
}

/// Assemble blocks into the final document text.
fn join_blocks(blocks: Vec<Vec<String>>) -> String {
    let rendered: Vec<String> = blocks
        .into_iter()
        .filter(|b| !b.is_empty())
        .map(|b| b.join("\n"))
        .collect();
    if rendered.is_empty() {
        return String::new();
    }
    let mut out = rendered.join("\n\n");
    out.push('\n');
    out
}
