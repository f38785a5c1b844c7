//! Command implementations shared by the binary and the test suite.
//!
//! Every run produces one output document. Structured mode prints a single
//! JSON object with sorted keys, a `schema-version` field and no timestamps,
//! so identical inputs yield byte-identical output. Human mode prints
//! `key: value` lines carrying exactly the same values.
//!
//! Exit codes: 0 success; 1 failed assertion or counterexample; 2 usage or
//! input error; 3 budget exceeded.

use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use semikit_core::{
    adjoin_zero, all_congruences, centralizes_with, commutator_with, derived_series_with,
    enumerate_semigroups, inverse_supernilpotent_decomposition, lower_central_series_with,
    orthodox_cs_decomposition, rees_matrix, supernilpotency_degree_with, verify_theorem_suite,
    warne_decomposition, CheckStatus, Congruence, CorpusFilter, CubeBudget, CubeError,
    Decomposition, FiniteSemigroup, GroupSpec, SeriesReport, StructureError, SuiteBudget,
    DEFAULT_LATTICE_CAP, DEFAULT_MAX_ARITY, DEFAULT_MAX_TERMS,
};
use serde_json::{json, Value};

use crate::builtin::builtin_semigroup;
use crate::dot::lattice_dot;
use crate::expand::ThreadedExpander;
use crate::formats::{
    self, build_manifest, load_manifest, parse_partition, read_cayley, read_rees, save_manifest,
    Source, SCHEMA_VERSION,
};

pub const EXIT_OK: i32 = 0;
pub const EXIT_COUNTEREXAMPLE: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_BUDGET: i32 = 3;

#[derive(Parser)]
#[command(
    name = "semikit",
    about = "Exact computation on finite semigroups: classification, congruences, higher commutators, degree series, decompositions, enumeration, and a theorem-checking suite",
    version
)]
pub struct Cli {
    #[command(subcommand)]
    command: Command,
    #[command(flatten)]
    common: Common,
}

#[derive(Args)]
struct Common {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Human)]
    format: Format,
    /// Cap on generated cube-set members.
    #[arg(long, global = true, default_value_t = CubeBudget::default().max_members)]
    cube_cap: usize,
    /// Cap on congruence lattice size.
    #[arg(long, global = true, default_value_t = DEFAULT_LATTICE_CAP)]
    lattice_cap: usize,
    /// Largest commutator arity probed for supernilpotency.
    #[arg(long, global = true, default_value_t = DEFAULT_MAX_ARITY)]
    max_arity: usize,
    /// Iterated series length bound.
    #[arg(long, global = true, default_value_t = DEFAULT_MAX_TERMS)]
    max_terms: usize,
    /// Worker threads for cube expansion.
    #[arg(long, global = true, default_value_t = 1)]
    workers: usize,
    /// Check `path=value` against the structured document (repeatable);
    /// a mismatch exits 1. Paths use `/` to descend, e.g.
    /// `properties/regular=true`.
    #[arg(long = "assert", global = true, value_name = "PATH=VALUE")]
    asserts: Vec<String>,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Human,
    Structured,
    Dot,
}

#[derive(Subcommand)]
enum Command {
    /// Classification predicates of one algebra.
    Props { input: String },
    /// Congruence lattice (members, covering pairs; DOT with --format dot).
    Congruences { input: String },
    /// Higher commutator of congruences (default: the full congruence at
    /// every position).
    Commutator {
        input: String,
        /// Number of arguments when --alphas is not given.
        #[arg(long, default_value_t = 2)]
        arity: usize,
        /// Argument congruences as partitions, e.g. "{0,1|2}".
        #[arg(long, num_args = 1..)]
        alphas: Option<Vec<String>>,
    },
    /// Whether given congruences centralize over a base congruence.
    Centralize {
        input: String,
        #[arg(long, num_args = 1..)]
        alphas: Option<Vec<String>>,
        /// Base congruence (default: the identity partition).
        #[arg(long)]
        delta: Option<String>,
    },
    /// Lower central, derived, and supernilpotency reports.
    Degrees { input: String },
    /// Structure decomposition of one algebra.
    Decompose {
        input: String,
        #[arg(long, value_enum)]
        kind: DecomposeKind,
    },
    /// All isomorphism-class representatives of one order.
    Enumerate {
        #[arg(long)]
        order: usize,
        #[arg(long, default_value = "all")]
        filter: String,
        /// Include the Cayley tables in the output.
        #[arg(long)]
        tables: bool,
    },
    /// Run every structure-theory check over a corpus.
    VerifyTheorems {
        /// Corpus manifest path.
        #[arg(long, conflicts_with = "max_order")]
        corpus: Option<PathBuf>,
        /// Generate the corpus inline: all algebras of order 1..=N.
        #[arg(long)]
        max_order: Option<usize>,
        /// Also include a zero-adjoined copy of each generated algebra.
        #[arg(long, requires = "max_order")]
        with_adjoin_zero: bool,
    },
    /// Build a corpus manifest from builtins, files, and generated families.
    ManifestBuild {
        #[arg(long)]
        out: PathBuf,
        #[arg(long = "builtin")]
        builtins: Vec<String>,
        #[arg(long = "file")]
        files: Vec<PathBuf>,
        #[arg(long = "generate-order")]
        generate_orders: Vec<usize>,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum DecomposeKind {
    Warne,
    Orthodox,
    Inverse,
}

pub struct RunOutput {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

enum AppError {
    Usage(String),
    Budget(String),
}

impl AppError {
    fn code(&self) -> i32 {
        match self {
            AppError::Usage(_) => EXIT_USAGE,
            AppError::Budget(_) => EXIT_BUDGET,
        }
    }

    fn kind(&self) -> &'static str {
        match self {
            AppError::Usage(_) => "usage",
            AppError::Budget(_) => "budget",
        }
    }

    fn message(&self) -> &str {
        match self {
            AppError::Usage(m) | AppError::Budget(m) => m,
        }
    }
}

fn usage(e: impl std::fmt::Display) -> AppError {
    AppError::Usage(format!("{e}"))
}

/// Budget-shaped cube errors exit 3; malformed queries exit 2.
fn cube_err(e: CubeError) -> AppError {
    match e {
        CubeError::TooManyMembers { .. }
        | CubeError::UnsupportedArity { .. }
        | CubeError::EncodingOverflow { .. }
        | CubeError::OracleBudgetExceeded { .. } => AppError::Budget(format!("{e}")),
        CubeError::AlgebraMismatch { .. } => AppError::Usage(format!("{e}")),
    }
}

/// Parses and runs one invocation, capturing output.
pub fn run(argv: &[&str]) -> RunOutput {
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            // clap prints help/version through "errors" with exit code 0
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let rendered = e.render().to_string();
            return if code == EXIT_OK {
                RunOutput {
                    code,
                    stdout: rendered,
                    stderr: String::new(),
                }
            } else {
                RunOutput {
                    code,
                    stdout: String::new(),
                    stderr: rendered,
                }
            };
        }
    };
    let common = &cli.common;
    let result = dispatch(&cli.command, common);
    match result {
        Ok(Output::Document(doc)) => {
            let mut code = EXIT_OK;
            let mut stderr = String::new();
            for assertion in &common.asserts {
                if let Err(msg) = check_assertion(&doc, assertion) {
                    code = EXIT_COUNTEREXAMPLE;
                    stderr.push_str(&msg);
                    stderr.push('\n');
                }
            }
            // counterexamples in a verify run fail the invocation even
            // without explicit assertions
            if doc
                .get("failures")
                .and_then(Value::as_array)
                .is_some_and(|f| !f.is_empty())
            {
                code = EXIT_COUNTEREXAMPLE;
            }
            let stdout = match common.format {
                Format::Structured => {
                    let mut text =
                        serde_json::to_string_pretty(&doc).expect("document serializes");
                    text.push('\n');
                    text
                }
                Format::Human | Format::Dot => render_human(&doc),
            };
            RunOutput {
                code,
                stdout,
                stderr,
            }
        }
        Ok(Output::Raw(text)) => RunOutput {
            code: EXIT_OK,
            stdout: text,
            stderr: String::new(),
        },
        Err(e) => match common.format {
            Format::Structured => {
                let doc = json!({
                    "schema-version": SCHEMA_VERSION,
                    "error": {"kind": e.kind(), "message": e.message()},
                });
                let mut text = serde_json::to_string_pretty(&doc).expect("document serializes");
                text.push('\n');
                RunOutput {
                    code: e.code(),
                    stdout: text,
                    stderr: String::new(),
                }
            }
            _ => RunOutput {
                code: e.code(),
                stdout: String::new(),
                stderr: format!("error: {}\n", e.message()),
            },
        },
    }
}

enum Output {
    Document(Value),
    /// Pre-rendered non-JSON output (DOT).
    Raw(String),
}

fn dispatch(command: &Command, common: &Common) -> Result<Output, AppError> {
    match command {
        Command::Props { input } => props(input),
        Command::Congruences { input } => congruences(input, common),
        Command::Commutator {
            input,
            arity,
            alphas,
        } => commutator_cmd(input, *arity, alphas.as_deref(), common),
        Command::Centralize {
            input,
            alphas,
            delta,
        } => centralize_cmd(input, alphas.as_deref(), delta.as_deref(), common),
        Command::Degrees { input } => degrees(input, common),
        Command::Decompose { input, kind } => decompose(input, *kind, common),
        Command::Enumerate {
            order,
            filter,
            tables,
        } => enumerate(*order, filter, *tables),
        Command::VerifyTheorems {
            corpus,
            max_order,
            with_adjoin_zero,
        } => verify_theorems(corpus.as_deref(), *max_order, *with_adjoin_zero, common),
        Command::ManifestBuild {
            out,
            builtins,
            files,
            generate_orders,
        } => manifest_build(out, builtins, files, generate_orders),
    }
}

/// Resolves `builtin:NAME`, `rees:PATH`, or a Cayley file path.
fn load_input(input: &str) -> Result<FiniteSemigroup, AppError> {
    if let Some(name) = input.strip_prefix("builtin:") {
        return builtin_semigroup(name).map_err(usage);
    }
    if let Some(path) = input.strip_prefix("rees:") {
        let text = std::fs::read_to_string(path).map_err(usage)?;
        return Ok(rees_matrix(&read_rees(&text).map_err(usage)?));
    }
    let text = std::fs::read_to_string(input).map_err(usage)?;
    read_cayley(&text).map_err(usage)
}

fn doc_head(command: &str, input: Option<&str>) -> Value {
    match input {
        Some(i) => json!({"schema-version": SCHEMA_VERSION, "command": command, "input": i}),
        None => json!({"schema-version": SCHEMA_VERSION, "command": command}),
    }
}

fn merge(mut head: Value, tail: Value) -> Value {
    let (Value::Object(h), Value::Object(t)) = (&mut head, tail) else {
        unreachable!("documents are objects");
    };
    h.extend(t);
    head
}

fn props(input: &str) -> Result<Output, AppError> {
    let s = load_input(input)?;
    let doc = merge(
        doc_head("props", Some(input)),
        json!({
            "order": s.order(),
            "properties": {
                "band": s.is_band(),
                "commutative": s.is_commutative(),
                "completely-simple": s.is_completely_simple(),
                "group": GroupSpec::new(s.clone()).is_ok(),
                "idempotent-antichain": s.is_idempotent_antichain(),
                "inverse": s.is_inverse_semigroup(),
                "left-zero": s.is_left_zero(),
                "orthodox": s.is_orthodox(),
                "rectangular-band": s.is_rectangular_band(),
                "regular": s.is_regular(),
                "right-zero": s.is_right_zero(),
                "simple": s.is_simple(),
            },
        }),
    );
    Ok(Output::Document(doc))
}

fn congruences(input: &str, common: &Common) -> Result<Output, AppError> {
    let s = load_input(input)?;
    let lattice = all_congruences(&s, common.lattice_cap)
        .map_err(|e| AppError::Budget(format!("{e}")))?;
    if common.format == Format::Dot {
        return Ok(Output::Raw(lattice_dot(&lattice)));
    }
    let members: Vec<String> = lattice
        .members()
        .iter()
        .map(|c| c.partition().to_string())
        .collect();
    let covers: Vec<Value> = lattice
        .covers()
        .into_iter()
        .map(|(a, b)| json!([a, b]))
        .collect();
    let doc = merge(
        doc_head("congruences", Some(input)),
        json!({"count": members.len(), "members": members, "covers": covers}),
    );
    Ok(Output::Document(doc))
}

fn parse_alphas(
    s: &FiniteSemigroup,
    arity: usize,
    alphas: Option<&[String]>,
) -> Result<Vec<Congruence>, AppError> {
    match alphas {
        Some(texts) => texts
            .iter()
            .map(|t| {
                let part = parse_partition(s.order(), t).map_err(usage)?;
                Congruence::new(s, part).map_err(usage)
            })
            .collect(),
        None => Ok((0..arity).map(|_| Congruence::one(s)).collect()),
    }
}

fn budget_of(common: &Common) -> CubeBudget {
    CubeBudget {
        max_members: common.cube_cap,
        ..CubeBudget::default()
    }
}

fn expander_of(common: &Common) -> ThreadedExpander {
    ThreadedExpander::new(common.workers)
}

fn commutator_cmd(
    input: &str,
    arity: usize,
    alphas: Option<&[String]>,
    common: &Common,
) -> Result<Output, AppError> {
    let s = load_input(input)?;
    let args = parse_alphas(&s, arity, alphas)?;
    let refs: Vec<&Congruence> = args.iter().collect();
    let result = commutator_with(&s, &refs, &budget_of(common), &mut expander_of(common))
        .map_err(cube_err)?;
    let doc = merge(
        doc_head("commutator", Some(input)),
        json!({
            "arity": refs.len(),
            "alphas": args.iter().map(|c| c.partition().to_string()).collect::<Vec<_>>(),
            "result": result.partition().to_string(),
            "is-zero": result.is_zero(),
        }),
    );
    Ok(Output::Document(doc))
}

fn centralize_cmd(
    input: &str,
    alphas: Option<&[String]>,
    delta: Option<&str>,
    common: &Common,
) -> Result<Output, AppError> {
    let s = load_input(input)?;
    let args = parse_alphas(&s, 2, alphas)?;
    let delta = match delta {
        Some(text) => {
            let part = parse_partition(s.order(), text).map_err(usage)?;
            Congruence::new(&s, part).map_err(usage)?
        }
        None => Congruence::zero(&s),
    };
    let refs: Vec<&Congruence> = args.iter().collect();
    let verdict = centralizes_with(&s, &refs, &delta, &budget_of(common), &mut expander_of(common))
        .map_err(cube_err)?;
    let witness = match verdict.witness() {
        Some(cube) => json!(cube.entries()),
        None => Value::Null,
    };
    let doc = merge(
        doc_head("centralize", Some(input)),
        json!({
            "alphas": args.iter().map(|c| c.partition().to_string()).collect::<Vec<_>>(),
            "delta": delta.partition().to_string(),
            "holds": verdict.holds(),
            "witness": witness,
        }),
    );
    Ok(Output::Document(doc))
}

fn series_value(report: &SeriesReport) -> Value {
    json!({
        "terms": report
            .terms()
            .iter()
            .map(|c| c.partition().to_string())
            .collect::<Vec<_>>(),
        "stabilized": report.stabilized(),
        "degree": report.degree(),
    })
}

fn degrees(input: &str, common: &Common) -> Result<Output, AppError> {
    let s = load_input(input)?;
    let budget = budget_of(common);
    let mut expander = expander_of(common);
    let lc = lower_central_series_with(&s, common.max_terms, &budget, &mut expander)
        .map_err(cube_err)?;
    let derived =
        derived_series_with(&s, common.max_terms, &budget, &mut expander).map_err(cube_err)?;
    let sup = supernilpotency_degree_with(&s, common.max_arity, &budget, &mut expander)
        .map_err(cube_err)?;
    let doc = merge(
        doc_head("degrees", Some(input)),
        json!({
            "budget": {
                "max-terms": common.max_terms,
                "max-arity": common.max_arity,
                "cube-cap": common.cube_cap,
            },
            "lower-central": series_value(&lc),
            "derived": series_value(&derived),
            "supernilpotent": series_value(&sup),
            "nilpotent-degree": lc.degree(),
            "solvable-degree": derived.degree(),
            "supernilpotent-degree": sup.degree(),
        }),
    );
    Ok(Output::Document(doc))
}

fn decomposition_value(d: &Decomposition) -> Value {
    json!({
        "status": "decomposed",
        "kind": d.kind().name(),
        "group-order": d.group().order(),
        "left": d.left_size(),
        "right": d.right_size(),
        "map": d.witness().map(),
    })
}

fn decompose(input: &str, kind: DecomposeKind, common: &Common) -> Result<Output, AppError> {
    let s = load_input(input)?;
    let payload = match kind {
        DecomposeKind::Warne => match warne_decomposition(&s) {
            Ok(Some(d)) => decomposition_value(&d),
            Ok(None) => json!({"status": "none", "reason": "not abelian"}),
            Err(e) => structure_error_value(e)?,
        },
        DecomposeKind::Orthodox => match orthodox_cs_decomposition(&s) {
            Ok(d) => decomposition_value(&d),
            Err(e) => structure_error_value(e)?,
        },
        DecomposeKind::Inverse => {
            match inverse_supernilpotent_decomposition(&s, common.max_arity) {
                Ok(Some(d)) => decomposition_value(&d),
                Ok(None) => json!({
                    "status": "none",
                    "reason": format!("not supernilpotent at arity <= {}", common.max_arity),
                }),
                Err(e) => structure_error_value(e)?,
            }
        }
    };
    Ok(Output::Document(merge(
        doc_head("decompose", Some(input)),
        payload,
    )))
}

/// Predicate failures are reported as values; engine failures keep their
/// exit-code classes.
fn structure_error_value(e: StructureError) -> Result<Value, AppError> {
    match e {
        StructureError::Cube(c) => Err(cube_err(c)),
        StructureError::NotRegular
        | StructureError::NotOrthodox { .. }
        | StructureError::NotInverse
        | StructureError::NotCompletelySimple
        | StructureError::NotAGroup => Ok(json!({
            "status": "not-applicable",
            "reason": format!("{e}"),
        })),
        StructureError::InvalidWitness | StructureError::Inconsistent(_) => {
            Err(AppError::Usage(format!("{e}")))
        }
    }
}

fn parse_filter(name: &str) -> Result<CorpusFilter, AppError> {
    CorpusFilter::parse(name)
        .ok_or_else(|| AppError::Usage(format!("unknown filter {name:?}")))
}

fn enumerate(order: usize, filter: &str, tables: bool) -> Result<Output, AppError> {
    let filter = parse_filter(filter)?;
    let members =
        enumerate_semigroups(order, filter).map_err(|e| AppError::Budget(format!("{e}")))?;
    let mut doc = merge(
        doc_head("enumerate", None),
        json!({
            "order": order,
            "filter": filter.name(),
            "count": members.len(),
        }),
    );
    if tables {
        let t: Vec<Value> = members
            .iter()
            .map(|s| json!(s.table().chunks(s.order()).collect::<Vec<_>>()))
            .collect();
        doc.as_object_mut()
            .expect("document is an object")
            .insert("tables".into(), json!(t));
    }
    Ok(Output::Document(doc))
}

fn suite_budget(common: &Common) -> SuiteBudget {
    SuiteBudget {
        max_arity: common.max_arity,
        max_terms: common.max_terms,
        cube: budget_of(common),
        lattice_cap: common.lattice_cap,
        ..SuiteBudget::default()
    }
}

fn verify_theorems(
    corpus: Option<&Path>,
    max_order: Option<usize>,
    with_adjoin_zero: bool,
    common: &Common,
) -> Result<Output, AppError> {
    let algebras: Vec<(String, FiniteSemigroup)> = match (corpus, max_order) {
        (Some(path), None) => load_manifest(path).map_err(usage)?.1,
        (None, Some(cap)) => {
            let mut out = Vec::new();
            for order in 1..=cap {
                let members = enumerate_semigroups(order, CorpusFilter::All)
                    .map_err(|e| AppError::Budget(format!("{e}")))?;
                for (index, s) in members.into_iter().enumerate() {
                    if with_adjoin_zero {
                        out.push((format!("n{order}-{index:03}+0"), adjoin_zero(&s)));
                    }
                    out.push((format!("n{order}-{index:03}"), s));
                }
            }
            out
        }
        _ => {
            return Err(AppError::Usage(
                "exactly one of --corpus or --max-order is required".into(),
            ))
        }
    };
    let report = verify_theorem_suite(&algebras, &suite_budget(common));
    let failures: Vec<Value> = report
        .failures()
        .iter()
        .map(|c| {
            json!({
                "algebra": c.algebra,
                "check": c.check,
                "detail": c.detail.clone().unwrap_or_default(),
            })
        })
        .collect();
    let skipped: Vec<Value> = report
        .checks()
        .iter()
        .filter(|c| c.status == CheckStatus::Skipped)
        .map(|c| {
            json!({
                "algebra": c.algebra,
                "check": c.check,
                "reason": c.detail.clone().unwrap_or_default(),
            })
        })
        .collect();
    let doc = merge(
        doc_head("verify-theorems", None),
        json!({
            "algebras": algebras.len(),
            "checks": report.checks().len(),
            "pass": report.count(CheckStatus::Pass),
            "vacuous": report.count(CheckStatus::Vacuous),
            "skipped": report.count(CheckStatus::Skipped),
            "failures": failures,
            "skipped-checks": skipped,
        }),
    );
    Ok(Output::Document(doc))
}

fn manifest_build(
    out: &Path,
    builtins: &[String],
    files: &[PathBuf],
    generate_orders: &[usize],
) -> Result<Output, AppError> {
    let mut sources: Vec<Source> = Vec::new();
    for name in builtins {
        sources.push(Source::Builtin { name: name.clone() });
    }
    for file in files {
        sources.push(Source::File {
            path: file.to_string_lossy().into_owned(),
        });
    }
    for &order in generate_orders {
        sources.extend(formats::generated_sources(order).map_err(usage)?);
    }
    if sources.is_empty() {
        return Err(AppError::Usage("no sources given".into()));
    }
    let base = out.parent().unwrap_or_else(|| Path::new(".")).to_path_buf();
    let manifest = build_manifest(&sources, &base).map_err(usage)?;
    save_manifest(&manifest, out).map_err(usage)?;
    let doc = merge(
        doc_head("manifest-build", None),
        json!({
            "out": out.to_string_lossy(),
            "entries": manifest.entries.len(),
        }),
    );
    Ok(Output::Document(doc))
}

// ---------------------------------------------------------------------------
// Assertions and the human renderer
// ---------------------------------------------------------------------------

fn scalar_text(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        other => other.to_string(),
    }
}

fn check_assertion(doc: &Value, assertion: &str) -> Result<(), String> {
    let Some((path, expected)) = assertion.split_once('=') else {
        return Err(format!("assertion {assertion:?} is not PATH=VALUE"));
    };
    let mut cur = doc;
    for seg in path.split('/') {
        cur = match cur {
            Value::Object(map) => map
                .get(seg)
                .ok_or_else(|| format!("assertion path {path:?}: no field {seg:?}"))?,
            Value::Array(items) => {
                let idx: usize = seg
                    .parse()
                    .map_err(|_| format!("assertion path {path:?}: bad index {seg:?}"))?;
                items
                    .get(idx)
                    .ok_or_else(|| format!("assertion path {path:?}: index {idx} out of range"))?
            }
            _ => return Err(format!("assertion path {path:?}: {seg:?} not reachable")),
        };
    }
    let actual = scalar_text(cur);
    if actual == expected {
        Ok(())
    } else {
        Err(format!(
            "assertion failed: {path} is {actual}, expected {expected}"
        ))
    }
}

/// Flat deterministic `key: value` lines mirroring the structured document.
fn render_human(doc: &Value) -> String {
    let mut out = String::new();
    render_into(doc, "", &mut out);
    out
}

fn render_into(v: &Value, prefix: &str, out: &mut String) {
    match v {
        Value::Object(map) => {
            for (k, val) in map {
                let key = if prefix.is_empty() {
                    k.clone()
                } else {
                    format!("{prefix}.{k}")
                };
                render_into(val, &key, out);
            }
        }
        Value::Array(items) => {
            if items.iter().all(|i| !i.is_object() && !i.is_array()) {
                let joined: Vec<String> = items.iter().map(scalar_text).collect();
                out.push_str(prefix);
                out.push_str(": [");
                out.push_str(&joined.join(", "));
                out.push_str("]\n");
            } else {
                for (i, item) in items.iter().enumerate() {
                    render_into(item, &format!("{prefix}.{i}"), out);
                }
                if items.is_empty() {
                    out.push_str(prefix);
                    out.push_str(": []\n");
                }
            }
        }
        scalar => {
            out.push_str(prefix);
            out.push_str(": ");
            out.push_str(&scalar_text(scalar));
            out.push('\n');
        }
    }
}
