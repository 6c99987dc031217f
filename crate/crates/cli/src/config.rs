//! Run configuration files.
//!
//! ```text
//! # comments start with '#'
//! [algebra]
//! dim = 2                  # or: catalog = heisenberg
//! bracket = 1 2 -> 1: 1    # [y1, y2] has y1-component 1; repeatable
//!
//! [phi]
//! z2 = 1                   # φ = ζ2; omitted section means φ = 0
//!
//! [deformation]
//! kind = standard          # standard | trivial | naive-dt | general
//! F = kappa 1/2            # kappa c | constant c | table
//! F(0,1) = 7               # table entries, symmetric pairs filled in
//!
//! [extension]
//! subalgebra = g0prime     # none | g0prime | g0doubleprime
//!
//! [run]
//! weights = -3, -2
//! max_degree = 4
//! format = json
//! ```
//!
//! Indices in the file are 1-based.

use std::collections::BTreeMap;
use std::fmt;
use std::path::Path;

use supdeform_core::brackets::{DeformationKind, DeformationSpec, FSpec, FTable};
use supdeform_core::liecore::{catalog, LieAlgebra, OneForm};
use supdeform_core::scalarfield::{parse_rational, Rational};
use thiserror::Error;

#[derive(Debug, Error)]
pub enum ConfigError {
    #[error("cannot read {path}: {source}")]
    Io {
        path: String,
        source: std::io::Error,
    },
    #[error("line {line}: {key}: {msg}")]
    Line { line: usize, key: String, msg: String },
    #[error("{key}: {msg}")]
    Key { key: String, msg: String },
}

/// Which vectors extend the superalgebra of forms.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum ExtensionChoice {
    #[default]
    None,
    G0Prime,
    G0DoublePrime,
}

impl fmt::Display for ExtensionChoice {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            ExtensionChoice::None => "none",
            ExtensionChoice::G0Prime => "g0prime",
            ExtensionChoice::G0DoublePrime => "g0doubleprime",
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum OutputFormat {
    #[default]
    Text,
    Json,
}

impl std::str::FromStr for OutputFormat {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "text" => Ok(OutputFormat::Text),
            "json" => Ok(OutputFormat::Json),
            other => Err(format!("unknown format '{other}', expected text or json")),
        }
    }
}

#[derive(Debug, Clone)]
pub struct RunConfig {
    pub algebra: LieAlgebra,
    pub phi: OneForm,
    pub deformation: DeformationSpec,
    pub extension: ExtensionChoice,
    pub weights: Vec<i64>,
    pub max_degree: Option<usize>,
    pub format: OutputFormat,
}

#[derive(Debug, Clone)]
struct Entry {
    line: usize,
    key: String,
    value: String,
}

const SECTIONS: [&str; 5] = ["algebra", "phi", "deformation", "extension", "run"];

fn line_err(e: &Entry, msg: impl Into<String>) -> ConfigError {
    ConfigError::Line {
        line: e.line,
        key: e.key.clone(),
        msg: msg.into(),
    }
}

fn split_sections(text: &str) -> Result<BTreeMap<&'static str, Vec<Entry>>, ConfigError> {
    let mut out: BTreeMap<&'static str, Vec<Entry>> = BTreeMap::new();
    let mut current: Option<&'static str> = None;
    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        let body = raw.split('#').next().unwrap_or("").trim();
        if body.is_empty() {
            continue;
        }
        if let Some(name) = body.strip_prefix('[').and_then(|s| s.strip_suffix(']')) {
            let name = name.trim();
            let sec = SECTIONS.iter().find(|s| **s == name).ok_or_else(|| ConfigError::Line {
                line,
                key: format!("[{name}]"),
                msg: format!("unknown section, expected one of {}", SECTIONS.join(", ")),
            })?;
            current = Some(sec);
            out.entry(sec).or_default();
            continue;
        }
        let (key, value) = body.split_once('=').ok_or_else(|| ConfigError::Line {
            line,
            key: body.to_string(),
            msg: "expected 'key = value'".into(),
        })?;
        let sec = current.ok_or_else(|| ConfigError::Line {
            line,
            key: key.trim().to_string(),
            msg: "key outside of any section".into(),
        })?;
        out.entry(sec).or_default().push(Entry {
            line,
            key: key.trim().to_string(),
            value: value.trim().to_string(),
        });
    }
    Ok(out)
}

fn single<'a>(entries: &'a [Entry], key: &str) -> Result<Option<&'a Entry>, ConfigError> {
    let mut found = entries.iter().filter(|e| e.key == key);
    let first = found.next();
    if let Some(dup) = found.next() {
        return Err(line_err(dup, "given more than once"));
    }
    Ok(first)
}

fn rational(e: &Entry, s: &str) -> Result<Rational, ConfigError> {
    parse_rational(s).map_err(|_| line_err(e, format!("'{s}' is not a rational number")))
}

fn index_1based(e: &Entry, s: &str, dim: usize) -> Result<usize, ConfigError> {
    let i: usize = s
        .trim()
        .parse()
        .map_err(|_| line_err(e, format!("'{s}' is not a basis index")))?;
    if i == 0 || i > dim {
        return Err(line_err(e, format!("index {i} outside 1..={dim}")));
    }
    Ok(i - 1)
}

/// `i j -> k: c`
fn bracket_entry(e: &Entry, dim: usize) -> Result<(usize, usize, usize, Rational), ConfigError> {
    let malformed = || line_err(e, "expected 'i j -> k: c'");
    let (lhs, rhs) = e.value.split_once("->").ok_or_else(malformed)?;
    let (k, c) = rhs.split_once(':').ok_or_else(malformed)?;
    let ij: Vec<&str> = lhs.split_whitespace().collect();
    let [i, j] = ij.as_slice() else {
        return Err(malformed());
    };
    Ok((
        index_1based(e, i, dim)?,
        index_1based(e, j, dim)?,
        index_1based(e, k, dim)?,
        rational(e, c)?,
    ))
}

fn parse_algebra(entries: &[Entry]) -> Result<LieAlgebra, ConfigError> {
    for e in entries {
        if !["dim", "catalog", "bracket"].contains(&e.key.as_str()) {
            return Err(line_err(e, "unknown key in [algebra]"));
        }
    }
    let algebra = match (single(entries, "catalog")?, single(entries, "dim")?) {
        (Some(c), None) => {
            if let Some(b) = entries.iter().find(|e| e.key == "bracket") {
                return Err(line_err(b, "bracket entries cannot be combined with catalog"));
            }
            catalog::named()
                .into_iter()
                .find(|(name, _)| *name == c.value)
                .map(|(_, alg)| alg)
                .ok_or_else(|| {
                    let names: Vec<&str> = catalog::named().iter().map(|(n, _)| *n).collect();
                    line_err(c, format!("unknown algebra, expected one of {}", names.join(", ")))
                })?
        }
        (Some(c), Some(_)) => return Err(line_err(c, "give either catalog or dim, not both")),
        (None, Some(d)) => {
            let dim: usize = d.value.parse().map_err(|_| line_err(d, "not a positive integer"))?;
            let brackets: Vec<&Entry> = entries.iter().filter(|e| e.key == "bracket").collect();
            let parsed = brackets
                .iter()
                .map(|e| bracket_entry(e, dim))
                .collect::<Result<Vec<_>, _>>()?;
            // replay one entry at a time so a conflict can name its line
            let mut seen = Vec::new();
            for (e, entry) in brackets.iter().zip(&parsed) {
                seen.push(entry.clone());
                LieAlgebra::new(dim, seen.clone()).map_err(|err| line_err(e, err.to_string()))?;
            }
            LieAlgebra::new(dim, parsed).map_err(|err| line_err(d, err.to_string()))?
        }
        (None, None) => {
            return Err(ConfigError::Key {
                key: "[algebra]".into(),
                msg: "needs dim or catalog".into(),
            })
        }
    };
    algebra.validate_jacobi().map_err(|v| ConfigError::Key {
        key: "[algebra] bracket".into(),
        msg: v.to_string(),
    })?;
    Ok(algebra)
}

fn parse_phi(entries: &[Entry], dim: usize) -> Result<OneForm, ConfigError> {
    let mut coeffs = vec![Rational::default(); dim];
    let mut set = vec![false; dim];
    for e in entries {
        let idx = e
            .key
            .strip_prefix('z')
            .ok_or_else(|| line_err(e, "expected a dual basis key z1, z2, ..."))?;
        let i = index_1based(e, idx, dim)?;
        if set[i] {
            return Err(line_err(e, "given more than once"));
        }
        set[i] = true;
        coeffs[i] = rational(e, &e.value)?;
    }
    Ok(OneForm::new(coeffs))
}

fn parse_kind(e: &Entry) -> Result<DeformationKind, ConfigError> {
    match e.value.as_str() {
        "standard" => Ok(DeformationKind::Standard),
        "trivial" => Ok(DeformationKind::Trivial),
        "naive-dt" => Ok(DeformationKind::NaiveDt),
        "general" => Ok(DeformationKind::General),
        _ => Err(line_err(e, "expected standard, trivial, naive-dt or general")),
    }
}

fn parse_f(entries: &[Entry]) -> Result<Option<FSpec>, ConfigError> {
    let mut table = FTable::new();
    let mut table_entries = 0;
    for e in entries.iter().filter(|e| e.key.starts_with("F(")) {
        let inner = e
            .key
            .strip_prefix("F(")
            .and_then(|s| s.strip_suffix(')'))
            .ok_or_else(|| line_err(e, "expected F(a,b)"))?;
        let (a, b) = inner.split_once(',').ok_or_else(|| line_err(e, "expected F(a,b)"))?;
        let parse = |s: &str| -> Result<usize, ConfigError> {
            s.trim().parse().map_err(|_| line_err(e, format!("'{s}' is not a form degree")))
        };
        let (a, b) = (parse(a)?, parse(b)?);
        let v = rational(e, &e.value)?;
        if table.get(a, b) != Rational::default() && table.get(a, b) != v && a != b {
            return Err(line_err(e, format!("conflicts with F({b},{a})")));
        }
        table.set(a, b, v.clone());
        table.set(b, a, v);
        table_entries += 1;
    }
    let Some(f) = single(entries, "F")? else {
        if table_entries > 0 {
            return Ok(Some(FSpec::Table(table)));
        }
        return Ok(None);
    };
    let words: Vec<&str> = f.value.split_whitespace().collect();
    let spec = match words.as_slice() {
        ["table"] => FSpec::Table(table),
        ["kappa", c] => FSpec::Kappa(rational(f, c)?),
        ["constant", c] => FSpec::Constant(rational(f, c)?),
        _ => return Err(line_err(f, "expected 'kappa c', 'constant c' or 'table'")),
    };
    if table_entries > 0 && !matches!(spec, FSpec::Table(_)) {
        return Err(line_err(f, "F(a,b) entries need F = table"));
    }
    Ok(Some(spec))
}

fn parse_deformation(entries: &[Entry], phi: OneForm) -> Result<DeformationSpec, ConfigError> {
    for e in entries {
        if e.key != "kind" && e.key != "F" && !e.key.starts_with("F(") {
            return Err(line_err(e, "unknown key in [deformation]"));
        }
    }
    let kind = match single(entries, "kind")? {
        Some(e) => parse_kind(e)?,
        None => DeformationKind::Standard,
    };
    let f = parse_f(entries)?;
    let f_line = entries.iter().find(|e| e.key == "F" || e.key.starts_with("F("));
    match (kind, f) {
        (DeformationKind::Standard, None) => Ok(DeformationSpec::standard(phi)),
        (DeformationKind::NaiveDt, None) => Ok(DeformationSpec::naive_dt(phi)),
        (DeformationKind::Standard | DeformationKind::NaiveDt, Some(_)) => Err(line_err(
            f_line.expect("F was parsed from a line"),
            "F is fixed by this kind; use kind = general",
        )),
        (DeformationKind::Trivial | DeformationKind::General, None) => Err(ConfigError::Key {
            key: "[deformation] F".into(),
            msg: "required for kind trivial and general".into(),
        }),
        (DeformationKind::Trivial, Some(f)) => DeformationSpec::trivial(f, phi).map_err(|err| {
            ConfigError::Key {
                key: "[deformation] F".into(),
                msg: err.to_string(),
            }
        }),
        (DeformationKind::General, Some(f)) => Ok(DeformationSpec::general(f, phi)),
    }
}

fn parse_extension(entries: &[Entry]) -> Result<ExtensionChoice, ConfigError> {
    for e in entries {
        if e.key != "subalgebra" {
            return Err(line_err(e, "unknown key in [extension]"));
        }
    }
    match single(entries, "subalgebra")? {
        None => Ok(ExtensionChoice::None),
        Some(e) => match e.value.as_str() {
            "none" => Ok(ExtensionChoice::None),
            "g0prime" => Ok(ExtensionChoice::G0Prime),
            "g0doubleprime" => Ok(ExtensionChoice::G0DoublePrime),
            _ => Err(line_err(e, "expected none, g0prime or g0doubleprime")),
        },
    }
}

fn parse_run(entries: &[Entry], cfg: &mut RunConfig) -> Result<(), ConfigError> {
    for e in entries {
        match e.key.as_str() {
            "weights" => {}
            "max_degree" => {}
            "format" => {}
            _ => return Err(line_err(e, "unknown key in [run]")),
        }
    }
    if let Some(e) = single(entries, "weights")? {
        cfg.weights = e
            .value
            .split(',')
            .map(|w| w.trim().parse::<i64>().map_err(|_| line_err(e, format!("'{}' is not an integer", w.trim()))))
            .collect::<Result<_, _>>()?;
    }
    if let Some(e) = single(entries, "max_degree")? {
        cfg.max_degree = Some(e.value.parse().map_err(|_| line_err(e, "not a nonnegative integer"))?);
    }
    if let Some(e) = single(entries, "format")? {
        cfg.format = e.value.parse().map_err(|msg: String| line_err(e, msg))?;
    }
    Ok(())
}

/// Parses and validates configuration text.
pub fn parse_config(text: &str) -> Result<RunConfig, ConfigError> {
    let sections = split_sections(text)?;
    let empty = Vec::new();
    let get = |s: &str| sections.get(s).unwrap_or(&empty);
    let algebra = parse_algebra(get("algebra"))?;
    let phi = parse_phi(get("phi"), algebra.dim())?;
    let deformation = parse_deformation(get("deformation"), phi.clone())?;
    let extension = parse_extension(get("extension"))?;
    let mut cfg = RunConfig {
        algebra,
        phi,
        deformation,
        extension,
        weights: vec![-3],
        max_degree: None,
        format: OutputFormat::Text,
    };
    parse_run(get("run"), &mut cfg)?;
    Ok(cfg)
}

pub fn load_config(path: &Path) -> Result<RunConfig, ConfigError> {
    let text = std::fs::read_to_string(path).map_err(|source| ConfigError::Io {
        path: path.display().to_string(),
        source,
    })?;
    parse_config(&text)
}
