//! File formats: Cayley tables as plain text, Rees matrix data and corpus
//! manifests as JSON. Every writer/reader pair round-trips bit-exactly.

use std::fmt;
use std::fs;
use std::path::{Path, PathBuf};

use semikit_core::{
    enumerate_semigroups, CorpusFilter, FiniteSemigroup, GroupSpec, Partition, ReesSpec,
};
use serde::{Deserialize, Serialize};

use crate::builtin;

/// Version stamped into every structured document this crate writes.
pub const SCHEMA_VERSION: u32 = 1;

#[derive(Debug)]
pub enum FormatError {
    Io(std::io::Error),
    Parse(String),
    Validate(String),
}

impl fmt::Display for FormatError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FormatError::Io(e) => write!(f, "io error: {e}"),
            FormatError::Parse(m) => write!(f, "parse error: {m}"),
            FormatError::Validate(m) => write!(f, "invalid document: {m}"),
        }
    }
}

impl std::error::Error for FormatError {}

impl From<std::io::Error> for FormatError {
    fn from(e: std::io::Error) -> Self {
        FormatError::Io(e)
    }
}

fn parse_err(e: impl fmt::Display) -> FormatError {
    FormatError::Parse(format!("{e}"))
}

// ---------------------------------------------------------------------------
// Cayley text format
// ---------------------------------------------------------------------------

/// Reads the plain-text table format: line 1 is the order, the next n lines
/// are rows of n space-separated element ids, and an optional trailing line
/// `# names: a b c` attaches element names.
pub fn read_cayley(text: &str) -> Result<FiniteSemigroup, FormatError> {
    let mut lines = text.lines().filter(|l| !l.trim().is_empty());
    let first = lines
        .next()
        .ok_or_else(|| FormatError::Parse("empty document".into()))?;
    let n: usize = first
        .trim()
        .parse()
        .map_err(|_| FormatError::Parse(format!("order line not a number: {first:?}")))?;
    let mut table = Vec::with_capacity(n * n);
    let mut names: Option<Vec<String>> = None;
    for line in lines {
        let line = line.trim();
        if let Some(rest) = line.strip_prefix('#') {
            let rest = rest.trim();
            if let Some(list) = rest.strip_prefix("names:") {
                let parsed: Vec<String> = list.split_whitespace().map(str::to_string).collect();
                if parsed.len() != n {
                    return Err(FormatError::Parse(format!(
                        "names line has {} entries, expected {n}",
                        parsed.len()
                    )));
                }
                names = Some(parsed);
            }
            continue;
        }
        if table.len() == n * n {
            return Err(FormatError::Parse("extra row after the table".into()));
        }
        let row: Result<Vec<usize>, _> = line.split_whitespace().map(str::parse).collect();
        let row = row.map_err(|_| FormatError::Parse(format!("bad row: {line:?}")))?;
        if row.len() != n {
            return Err(FormatError::Parse(format!(
                "row has {} entries, expected {n}",
                row.len()
            )));
        }
        table.extend(row);
    }
    if table.len() != n * n {
        return Err(FormatError::Parse(format!(
            "expected {n} rows, found {}",
            table.len() / n.max(1)
        )));
    }
    let s = FiniteSemigroup::new(n, table).map_err(parse_err)?;
    Ok(match names {
        Some(names) => s.with_names(names),
        None => s,
    })
}

/// Writes the table in the exact form `read_cayley` accepts.
pub fn write_cayley(s: &FiniteSemigroup) -> String {
    let n = s.order();
    let mut out = String::new();
    out.push_str(&n.to_string());
    out.push('\n');
    for a in 0..n {
        let row: Vec<String> = (0..n).map(|b| s.mul(a, b).to_string()).collect();
        out.push_str(&row.join(" "));
        out.push('\n');
    }
    if let Some(names) = s.names() {
        out.push_str("# names: ");
        out.push_str(&names.join(" "));
        out.push('\n');
    }
    out
}

// ---------------------------------------------------------------------------
// Rees matrix JSON
// ---------------------------------------------------------------------------

#[derive(Serialize, Deserialize)]
#[serde(rename_all = "kebab-case", deny_unknown_fields)]
struct ReesDoc {
    group_table: Vec<Vec<usize>>,
    i_size: usize,
    lambda_size: usize,
    /// Row-major over (lambda, i), entries are group element ids.
    sandwich: Vec<usize>,
}

pub fn read_rees(text: &str) -> Result<ReesSpec, FormatError> {
    let doc: ReesDoc = serde_json::from_str(text).map_err(parse_err)?;
    let n = doc.group_table.len();
    let mut table = Vec::with_capacity(n * n);
    for row in &doc.group_table {
        if row.len() != n {
            return Err(FormatError::Validate("group table is not square".into()));
        }
        table.extend_from_slice(row);
    }
    let group = GroupSpec::from_table(n, table).map_err(parse_err)?;
    ReesSpec::new(group, doc.i_size, doc.lambda_size, doc.sandwich).map_err(parse_err)
}

pub fn write_rees(spec: &ReesSpec) -> String {
    let g = spec.group();
    let n = g.order();
    let doc = ReesDoc {
        group_table: (0..n)
            .map(|a| (0..n).map(|b| g.mul(a, b)).collect())
            .collect(),
        i_size: spec.i_size(),
        lambda_size: spec.lambda_size(),
        sandwich: spec.sandwich().to_vec(),
    };
    let mut out = serde_json::to_string_pretty(&doc).expect("document serializes");
    out.push('\n');
    out
}

// ---------------------------------------------------------------------------
// Partition text form
// ---------------------------------------------------------------------------

/// Parses `{0,3|1,2}` (braces optional) into a partition of `0..n`.
pub fn parse_partition(n: usize, text: &str) -> Result<Partition, FormatError> {
    let trimmed = text.trim();
    let inner = trimmed
        .strip_prefix('{')
        .and_then(|t| t.strip_suffix('}'))
        .unwrap_or(trimmed);
    let mut blocks: Vec<Vec<usize>> = Vec::new();
    for block in inner.split('|') {
        let elems: Result<Vec<usize>, _> = block
            .split(',')
            .map(|e| e.trim().parse::<usize>())
            .collect();
        blocks.push(elems.map_err(|_| FormatError::Parse(format!("bad block: {block:?}")))?);
    }
    Partition::from_blocks(n, &blocks).map_err(parse_err)
}

// ---------------------------------------------------------------------------
// Corpus manifest JSON
// ---------------------------------------------------------------------------

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
#[serde(rename_all = "kebab-case", tag = "kind")]
pub enum Source {
    Builtin { name: String },
    File { path: String },
    Generated { order: usize, index: usize },
}

/// Cached classification of one manifest entry; must match recomputation.
#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
#[serde(rename_all = "kebab-case", deny_unknown_fields)]
pub struct PropertyCache {
    pub band: bool,
    pub commutative: bool,
    pub completely_simple: bool,
    pub group: bool,
    pub inverse: bool,
    pub orthodox: bool,
    pub regular: bool,
}

impl PropertyCache {
    pub fn compute(s: &FiniteSemigroup) -> Self {
        PropertyCache {
            band: s.is_band(),
            commutative: s.is_commutative(),
            completely_simple: s.is_completely_simple(),
            group: GroupSpec::new(s.clone()).is_ok(),
            inverse: s.is_inverse_semigroup(),
            orthodox: s.is_orthodox(),
            regular: s.is_regular(),
        }
    }
}

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case", deny_unknown_fields)]
pub struct ManifestEntry {
    pub id: String,
    pub source: Source,
    pub order: usize,
    pub properties: PropertyCache,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case", deny_unknown_fields)]
pub struct Manifest {
    pub schema_version: u32,
    pub entries: Vec<ManifestEntry>,
}

fn generated_id(order: usize, index: usize) -> String {
    format!("n{order}-{index:03}")
}

fn source_id(source: &Source) -> String {
    match source {
        Source::Builtin { name } => name.clone(),
        Source::File { path } => Path::new(path)
            .file_stem()
            .map(|s| s.to_string_lossy().into_owned())
            .unwrap_or_else(|| path.clone()),
        Source::Generated { order, index } => generated_id(*order, *index),
    }
}

/// Resolves a source to its algebra. Relative file paths are taken against
/// `base`.
pub fn resolve_source(source: &Source, base: &Path) -> Result<FiniteSemigroup, FormatError> {
    match source {
        Source::Builtin { name } => builtin::builtin_semigroup(name)
            .map_err(|e| FormatError::Validate(format!("builtin {name:?}: {e}"))),
        Source::File { path } => {
            let full = if Path::new(path).is_absolute() {
                PathBuf::from(path)
            } else {
                base.join(path)
            };
            read_cayley(&fs::read_to_string(&full)?)
        }
        Source::Generated { order, index } => {
            let all = enumerate_semigroups(*order, CorpusFilter::All)
                .map_err(|e| FormatError::Validate(format!("{e}")))?;
            all.into_iter().nth(*index).ok_or_else(|| {
                FormatError::Validate(format!(
                    "generated index {index} out of range for order {order}"
                ))
            })
        }
    }
}

/// Builds a manifest by resolving every source and computing its property
/// cache. Ids must come out unique.
pub fn build_manifest(sources: &[Source], base: &Path) -> Result<Manifest, FormatError> {
    let mut entries = Vec::with_capacity(sources.len());
    let mut seen = std::collections::BTreeSet::new();
    for source in sources {
        let id = source_id(source);
        if !seen.insert(id.clone()) {
            return Err(FormatError::Validate(format!("duplicate id {id:?}")));
        }
        let s = resolve_source(source, base)?;
        entries.push(ManifestEntry {
            id,
            order: s.order(),
            properties: PropertyCache::compute(&s),
            source: source.clone(),
        });
    }
    Ok(Manifest {
        schema_version: SCHEMA_VERSION,
        entries,
    })
}

/// Every generated isomorphism-class representative of one order, as
/// manifest sources.
pub fn generated_sources(order: usize) -> Result<Vec<Source>, FormatError> {
    let count = enumerate_semigroups(order, CorpusFilter::All)
        .map_err(|e| FormatError::Validate(format!("{e}")))?
        .len();
    Ok((0..count)
        .map(|index| Source::Generated { order, index })
        .collect())
}

pub fn save_manifest(manifest: &Manifest, path: &Path) -> Result<(), FormatError> {
    let mut text = serde_json::to_string_pretty(manifest).expect("manifest serializes");
    text.push('\n');
    // write-then-rename so a failed write never leaves a partial manifest
    let tmp = path.with_extension("tmp");
    fs::write(&tmp, text)?;
    fs::rename(&tmp, path)?;
    Ok(())
}

/// Loads a manifest and resolves every entry. Cached properties are
/// recomputed: on a version match a divergence is an error, on a version
/// change the cache is replaced.
pub fn load_manifest(
    path: &Path,
) -> Result<(Manifest, Vec<(String, FiniteSemigroup)>), FormatError> {
    let text = fs::read_to_string(path)?;
    let mut manifest: Manifest = serde_json::from_str(&text).map_err(parse_err)?;
    let base = path.parent().unwrap_or_else(|| Path::new(".")).to_path_buf();
    let mut seen = std::collections::BTreeSet::new();
    let mut algebras = Vec::with_capacity(manifest.entries.len());
    let upgrade = manifest.schema_version != SCHEMA_VERSION;
    for entry in &mut manifest.entries {
        if !seen.insert(entry.id.clone()) {
            return Err(FormatError::Validate(format!("duplicate id {:?}", entry.id)));
        }
        let s = resolve_source(&entry.source, &base)?;
        let props = PropertyCache::compute(&s);
        if upgrade {
            entry.order = s.order();
            entry.properties = props;
        } else {
            if entry.order != s.order() {
                return Err(FormatError::Validate(format!(
                    "entry {:?}: cached order {} but algebra has order {}",
                    entry.id,
                    entry.order,
                    s.order()
                )));
            }
            if entry.properties != props {
                return Err(FormatError::Validate(format!(
                    "entry {:?}: cached properties diverge from recomputation",
                    entry.id
                )));
            }
        }
        algebras.push((entry.id.clone(), s));
    }
    manifest.schema_version = SCHEMA_VERSION;
    Ok((manifest, algebras))
}
