//! Plain-text algebra files and corpus manifests.
//!
//! ```text
//! # comments run to the end of the line
//! name turner-counterexample
//! field Q
//! basis a b x
//! a a b 1
//! a x a 1/2
//! x a a -1/2
//! b x b 1
//! @cartan x
//! ```
//!
//! Entry lines `i j k c` mean `[e_i, e_j] += c e_k`, with basis labels or
//! 0-based indices. `dim n` may replace `basis` (labels `e0 ..`). Subspaces
//! are `;`-separated rows, each a comma-separated coordinate vector or a
//! combination such as `a+2b-1/2x`. Annotations: `@cartan`, `@levi`,
//! `@radical`; `@levi` and `@radical` come together.

use std::fmt::Write as _;
use std::fs;
use std::path::Path;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::algebra::{default_labels, AlgebraError, LeibnizAlgebra, StructureTable};
use crate::catalog::{golden_count, Annotations, Corpus, CorpusMode};
use crate::field::{Field, FieldError, FieldSpec};
use crate::ideals::{self, LeviData};
use crate::linalg::{Subspace, Vector};

#[derive(Debug, Error)]
pub enum IoError {
    #[error("line {line}: {msg}")]
    Syntax { line: usize, msg: String },
    #[error("line {line}: {source}")]
    Scalar { line: usize, source: FieldError },
    #[error("file is over {found}, expected {expected}")]
    FieldMismatch { expected: FieldSpec, found: FieldSpec },
    #[error("malformed subspace `{text}`: {msg}")]
    Subspace { text: String, msg: String },
    #[error("annotation fails verification: {0}")]
    Annotation(String),
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
    #[error("manifest: {0}")]
    Manifest(String),
    #[error(transparent)]
    Fs(#[from] std::io::Error),
}

/// A parsed file before its scalars are interpreted in a field.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AlgebraFile {
    pub name: Option<String>,
    pub field: FieldSpec,
    pub labels: Vec<String>,
    /// `(i, j, k, scalar, line)`.
    pub entries: Vec<(usize, usize, usize, String, usize)>,
    /// `(kind, subspace text, line)`.
    pub annotations: Vec<(String, String, usize)>,
}

fn syntax(line: usize, msg: impl Into<String>) -> IoError {
    IoError::Syntax { line, msg: msg.into() }
}

fn valid_label(s: &str) -> bool {
    let mut chars = s.chars();
    chars.next().is_some_and(|c| c.is_alphabetic() || c == '_')
        && chars.all(|c| c.is_alphanumeric() || c == '_' || c == '\'')
}

impl AlgebraFile {
    pub fn parse(text: &str) -> Result<Self, IoError> {
        let mut name = None;
        let mut field = None;
        let mut labels: Option<Vec<String>> = None;
        let mut dim: Option<(usize, usize)> = None;
        let mut raw = Vec::new();
        let mut annotations = Vec::new();
        for (idx, full) in text.lines().enumerate() {
            let n = idx + 1;
            let line = full.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let mut words = line.split_whitespace();
            let head = words.next().expect("nonempty");
            let rest: Vec<&str> = words.collect();
            match head {
                "name" => name = Some(rest.join(" ")),
                "field" => {
                    let spec = rest.join(" ").parse::<FieldSpec>().map_err(|e| IoError::Scalar { line: n, source: e })?;
                    field = Some(spec);
                }
                "dim" => {
                    let [d] = rest[..] else { return Err(syntax(n, "expected `dim n`")) };
                    let d = d.parse().map_err(|_| syntax(n, format!("bad dimension `{d}`")))?;
                    dim = Some((d, n));
                }
                "basis" => {
                    if let Some(bad) = rest.iter().find(|l| !valid_label(l)) {
                        return Err(syntax(n, format!("bad label `{bad}`")));
                    }
                    let ls: Vec<String> = rest.iter().map(|s| s.to_string()).collect();
                    let mut sorted = ls.clone();
                    sorted.sort();
                    sorted.dedup();
                    if sorted.len() != ls.len() {
                        return Err(syntax(n, "repeated basis label"));
                    }
                    labels = Some(ls);
                }
                h if h.starts_with('@') => {
                    let kind = &h[1..];
                    if !matches!(kind, "cartan" | "levi" | "radical") {
                        return Err(syntax(n, format!("unknown annotation `{h}`")));
                    }
                    annotations.push((kind.to_string(), rest.join(" "), n));
                }
                _ => {
                    let [i, j] = [head, rest.first().copied().unwrap_or_default()];
                    let (Some(k), Some(c), 3) = (rest.get(1), rest.get(2), rest.len()) else {
                        return Err(syntax(n, format!("expected `i j k scalar`, found `{line}`")));
                    };
                    raw.push((i.to_string(), j.to_string(), k.to_string(), c.to_string(), n));
                }
            }
        }
        let field = field.ok_or_else(|| syntax(0, "missing `field` line"))?;
        let labels = match (labels, dim) {
            (Some(ls), Some((d, n))) if ls.len() != d => {
                return Err(syntax(n, format!("dim {d} but {} basis labels", ls.len())));
            }
            (Some(ls), _) => ls,
            (None, Some((d, _))) => default_labels(d),
            (None, None) => return Err(syntax(0, "missing `basis` or `dim` line")),
        };
        let index = |s: &str, n: usize| -> Result<usize, IoError> {
            if let Some(p) = labels.iter().position(|l| l == s) {
                return Ok(p);
            }
            match s.parse::<usize>() {
                Ok(i) if i < labels.len() => Ok(i),
                _ => Err(syntax(n, format!("unknown basis element `{s}`"))),
            }
        };
        let mut entries = Vec::with_capacity(raw.len());
        for (i, j, k, c, n) in raw {
            entries.push((index(&i, n)?, index(&j, n)?, index(&k, n)?, c, n));
        }
        Ok(AlgebraFile { name, field, labels, entries, annotations })
    }

    pub fn dim(&self) -> usize {
        self.labels.len()
    }

    /// The table over `F`; the file must name `F`.
    pub fn table<F: Field>(&self) -> Result<StructureTable<F>, IoError> {
        self.field.ensure_same(F::spec()).map_err(|_| IoError::FieldMismatch { expected: F::spec(), found: self.field })?;
        let mut parsed = Vec::with_capacity(self.entries.len());
        for (i, j, k, c, n) in &self.entries {
            let c = F::parse(c).map_err(|e| IoError::Scalar { line: *n, source: e })?;
            parsed.push((*i, *j, *k, c));
        }
        Ok(StructureTable::from_entries(self.labels.clone(), parsed))
    }

    /// The algebra, rejecting tables that fail the right identity.
    pub fn algebra<F: Field>(&self) -> Result<LeibnizAlgebra<F>, IoError> {
        Ok(LeibnizAlgebra::new(self.table()?)?)
    }

    /// Annotations, each verified against `l`.
    pub fn annotations<F: Field>(&self, l: &LeibnizAlgebra<F>) -> Result<Annotations<F>, IoError> {
        let mut out = Annotations::default();
        let (mut levi, mut radical) = (None, None);
        for (kind, text, _) in &self.annotations {
            let s = parse_subspace::<F>(text, l.labels())?;
            match kind.as_str() {
                "cartan" => {
                    if !ideals::is_cartan(l, &s) {
                        return Err(IoError::Annotation(format!("{} is not a Cartan subalgebra", l.render_subspace(&s))));
                    }
                    out.cartan.push(s);
                }
                "levi" => levi = Some(s),
                _ => radical = Some(s),
            }
        }
        match (levi, radical) {
            (Some(levi), Some(radical)) => {
                let d = LeviData { levi, radical };
                ideals::check_levi(l, &d).map_err(IoError::Annotation)?;
                out.levi = Some(d);
            }
            (None, None) => {}
            _ => return Err(IoError::Annotation("@levi and @radical must appear together".into())),
        }
        Ok(out)
    }
}

/// Parses `;`-separated rows in the basis `labels`.
pub fn parse_subspace<F: Field>(text: &str, labels: &[String]) -> Result<Subspace<F>, IoError> {
    let n = labels.len();
    let err = |msg: String| IoError::Subspace { text: text.to_string(), msg };
    let mut rows = Vec::new();
    for row in text.split(';').map(str::trim).filter(|r| !r.is_empty()) {
        rows.push(if row.contains(',') || labels.is_empty() || row.parse::<i64>().is_ok() && n == 1 {
            let v: Vec<F> = row
                .split(',')
                .map(|c| F::parse(c.trim()).map_err(|e| err(e.to_string())))
                .collect::<Result<_, _>>()?;
            if v.len() != n {
                return Err(err(format!("row `{row}` has {} entries, expected {n}", v.len())));
            }
            v
        } else {
            parse_combination(row, labels).map_err(err)?
        });
    }
    Subspace::span(n, rows).map_err(|e| err(e.to_string()))
}

/// `a+2b-1/2x` style combinations of basis labels.
fn parse_combination<F: Field>(row: &str, labels: &[String]) -> Result<Vector<F>, String> {
    let mut v = vec![F::zero(); labels.len()];
    let s: String = row.chars().filter(|c| !c.is_whitespace()).collect();
    let mut rest = s.as_str();
    let mut first = true;
    while !rest.is_empty() {
        let neg = match rest.as_bytes()[0] {
            b'+' => {
                rest = &rest[1..];
                false
            }
            b'-' => {
                rest = &rest[1..];
                true
            }
            _ if first => false,
            _ => return Err(format!("expected `+` or `-` before `{rest}`")),
        };
        first = false;
        let split = rest.find(|c: char| !(c.is_ascii_digit() || c == '/')).unwrap_or(rest.len());
        let (num, tail) = rest.split_at(split);
        let end = tail.find(['+', '-']).unwrap_or(tail.len());
        let (label, next) = tail.split_at(end);
        let k = labels.iter().position(|l| l == label).ok_or_else(|| format!("unknown basis element `{label}`"))?;
        let mut c = if num.is_empty() { F::one() } else { F::parse(num).map_err(|e| e.to_string())? };
        if neg {
            c = -c;
        }
        v[k] = v[k].clone() + c;
        rest = next;
    }
    Ok(v)
}

/// Coordinate rows such as `1,0,-1/2;0,1,0`.
pub fn render_subspace_rows<F: Field>(s: &Subspace<F>) -> String {
    let rows: Vec<String> = s
        .basis()
        .iter()
        .map(|v| v.iter().map(|c| c.to_string()).collect::<Vec<_>>().join(","))
        .collect();
    rows.join(";")
}

/// Text form of an algebra; [`AlgebraFile::parse`] reads it back to the
/// same table.
pub fn emit<F: Field>(name: Option<&str>, l: &LeibnizAlgebra<F>, ann: &Annotations<F>) -> String {
    emit_table(name, l.table(), ann)
}

pub fn emit_table<F: Field>(name: Option<&str>, t: &StructureTable<F>, ann: &Annotations<F>) -> String {
    let mut s = String::new();
    if let Some(name) = name {
        let _ = writeln!(s, "name {name}");
    }
    let _ = writeln!(s, "field {}", F::spec());
    if t.dim() == 0 {
        let _ = writeln!(s, "dim 0");
    } else {
        let _ = writeln!(s, "basis {}", t.labels().join(" "));
    }
    let ls = t.labels();
    for (i, j, k, c) in t.entries() {
        let _ = writeln!(s, "{} {} {} {c}", ls[i], ls[j], ls[k]);
    }
    for h in &ann.cartan {
        let _ = writeln!(s, "@cartan {}", render_subspace_rows(h));
    }
    if let Some(d) = &ann.levi {
        let _ = writeln!(s, "@levi {}", render_subspace_rows(&d.levi));
        let _ = writeln!(s, "@radical {}", render_subspace_rows(&d.radical));
    }
    s
}

/// Loads an algebra file over `F`.
pub fn load<F: Field>(text: &str) -> Result<(AlgebraFile, LeibnizAlgebra<F>, Annotations<F>), IoError> {
    let file = AlgebraFile::parse(text)?;
    let l = file.algebra::<F>()?;
    let ann = file.annotations(&l)?;
    Ok((file, l, ann))
}

/// Sidecar describing a corpus written by [`write_corpus`].
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Manifest {
    pub descriptor: String,
    pub field: String,
    pub dim: Option<usize>,
    pub mode: CorpusMode,
    pub seed: Option<u64>,
    pub count: usize,
    /// Recorded size for exhaustive corpora.
    pub golden: Option<usize>,
}

pub const CORPUS_FILE: &str = "corpus.txt";
pub const MANIFEST_FILE: &str = "manifest.json";

impl Manifest {
    pub fn of<F: Field>(c: &Corpus<F>) -> Self {
        let golden = match (c.mode, c.dim, F::spec()) {
            (CorpusMode::Exhaustive, Some(d), FieldSpec::Prime(p)) => golden_count(d, p),
            _ => None,
        };
        Manifest {
            descriptor: c.descriptor(),
            field: F::spec().to_string(),
            dim: c.dim,
            mode: c.mode,
            seed: c.seed,
            count: c.len(),
            golden,
        }
    }
}

/// All algebras of a corpus as `---`-separated blocks.
pub fn emit_corpus<F: Field>(c: &Corpus<F>) -> String {
    let blocks: Vec<String> = (0..c.len())
        .map(|i| emit(Some(&c.names[i]), &c.algebras[i], &c.annotations[i]))
        .collect();
    blocks.join("---\n")
}

/// Writes `corpus.txt` and `manifest.json` into `dir`.
pub fn write_corpus<F: Field>(c: &Corpus<F>, dir: &Path) -> Result<Manifest, IoError> {
    fs::create_dir_all(dir)?;
    fs::write(dir.join(CORPUS_FILE), emit_corpus(c))?;
    let m = Manifest::of(c);
    let json = serde_json::to_string_pretty(&m).map_err(|e| IoError::Manifest(e.to_string()))?;
    fs::write(dir.join(MANIFEST_FILE), json + "\n")?;
    Ok(m)
}

/// Parses `---`-separated algebra blocks.
pub fn parse_corpus<F: Field>(text: &str) -> Result<Corpus<F>, IoError> {
    let mut c = Corpus::single("", LeibnizAlgebra::abelian(0), Annotations::default());
    c.algebras.clear();
    c.names.clear();
    c.annotations.clear();
    c.dim = None;
    let mut offset = 0;
    for block in text.split("\n---\n") {
        let lines = block.lines().count() + 1;
        if block.trim().is_empty() {
            offset += lines;
            continue;
        }
        let (file, l, ann) = load::<F>(block).map_err(|e| match e {
            IoError::Syntax { line, msg } => IoError::Syntax { line: line + offset, msg },
            IoError::Scalar { line, source } => IoError::Scalar { line: line + offset, source },
            e => e,
        })?;
        c.names.push(file.name.unwrap_or_else(|| format!("#{}", c.algebras.len())));
        c.algebras.push(l);
        c.annotations.push(ann);
        offset += lines;
    }
    Ok(c)
}

/// Reads a directory written by [`write_corpus`] and checks its manifest.
pub fn read_corpus<F: Field>(dir: &Path) -> Result<(Corpus<F>, Manifest), IoError> {
    let m: Manifest = serde_json::from_str(&fs::read_to_string(dir.join(MANIFEST_FILE))?)
        .map_err(|e| IoError::Manifest(e.to_string()))?;
    if m.field != F::spec().to_string() {
        return Err(IoError::Manifest(format!("corpus is over {}, expected {}", m.field, F::spec())));
    }
    let mut c = parse_corpus::<F>(&fs::read_to_string(dir.join(CORPUS_FILE))?)?;
    c.dim = m.dim;
    c.mode = m.mode;
    c.seed = m.seed;
    if c.len() != m.count {
        return Err(IoError::Manifest(format!("{} algebras, manifest says {}", c.len(), m.count)));
    }
    if let Some(g) = m.golden {
        if g != m.count {
            return Err(IoError::Manifest(format!("count {} differs from the recorded {g}", m.count)));
        }
    }
    Ok((c, m))
}
