//! Line-oriented text formats for ideals, Stanley decompositions, prime
//! filtrations and simplicial complexes.
//!
//! ```text
//! # comment
//! vars x y z
//! gen x^2*y
//! gen y*z
//! space 1 | x z          (decompositions; empty list after `|` allowed)
//! step y | x             (filtrations; variables of the prime)
//! ```
//!
//! A decomposition may replace its `gen` lines with `ideal <file>`, a path
//! resolved relative to the decomposition file. Complexes use
//! `vertices n` and `facet i j k` with 1-based vertex indices.

use std::fmt::Write as _;
use std::path::Path;

use crate::decomposition::{StanleyDecomposition, StanleySpace};
use crate::error::{Error, Result};
use crate::filtration::{FiltrationStep, PrimeFiltration};
use crate::ideal::MonomialIdeal;
use crate::monomial::Monomial;
use crate::simplicial::SimplicialComplex;
use crate::vars::{VarSubset, VariableSet};

/// What a text file contains, judged by its keywords.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DocumentKind {
    Ideal,
    Decomposition,
    Filtration,
    Complex,
}

#[derive(Debug, Default)]
struct Document {
    vars: Option<VariableSet>,
    gens: Vec<Monomial>,
    ideal_ref: Option<(usize, String)>,
    spaces: Vec<(Monomial, VarSubset)>,
    steps: Vec<(Monomial, VarSubset)>,
}

fn significant_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'))
}

/// Classifies a text document without fully parsing it.
pub fn detect_kind(text: &str) -> DocumentKind {
    let mut kind = DocumentKind::Ideal;
    for (_, line) in significant_lines(text) {
        match line.split_whitespace().next() {
            Some("vertices") | Some("facet") => return DocumentKind::Complex,
            Some("space") => return DocumentKind::Decomposition,
            Some("step") => return DocumentKind::Filtration,
            Some("ideal") => kind = DocumentKind::Decomposition,
            _ => {}
        }
    }
    kind
}

fn split_keyword(line: &str) -> (&str, &str) {
    match line.find(char::is_whitespace) {
        Some(i) => (&line[..i], line[i..].trim()),
        None => (line, ""),
    }
}

fn parse_document(text: &str) -> Result<Document> {
    let mut doc = Document::default();
    for (lineno, line) in significant_lines(text) {
        let (keyword, rest) = split_keyword(line);
        if keyword != "vars" && doc.vars.is_none() {
            return Err(Error::parse(lineno, "expected `vars` header before other lines"));
        }
        match keyword {
            "vars" => {
                if doc.vars.is_some() {
                    return Err(Error::parse(lineno, "duplicate `vars` line"));
                }
                let names: Vec<&str> = rest.split_whitespace().collect();
                if names.is_empty() {
                    return Err(Error::parse(lineno, "`vars` needs at least one variable"));
                }
                let vars = VariableSet::new(names).map_err(|e| Error::parse(lineno, e.to_string()))?;
                doc.vars = Some(vars);
            }
            "gen" => {
                let vars = doc.vars.as_ref().expect("checked above");
                doc.gens.push(parse_monomial_at(vars, rest, lineno)?);
            }
            "ideal" => {
                if rest.is_empty() {
                    return Err(Error::parse(lineno, "`ideal` needs a file path"));
                }
                if doc.ideal_ref.is_some() {
                    return Err(Error::parse(lineno, "more than one `ideal` reference"));
                }
                doc.ideal_ref = Some((lineno, rest.to_string()));
            }
            "space" | "step" => {
                let vars = doc.vars.as_ref().expect("checked above");
                let (mono, list) = rest
                    .split_once('|')
                    .ok_or_else(|| Error::parse(lineno, format!("`{keyword}` needs `<monomial> | <vars>`")))?;
                let offset = parse_monomial_at(vars, mono, lineno)?;
                let subset = parse_var_list(vars, list, lineno)?;
                if keyword == "space" {
                    doc.spaces.push((offset, subset));
                } else {
                    doc.steps.push((offset, subset));
                }
            }
            other => return Err(Error::parse(lineno, format!("unknown keyword `{other}`"))),
        }
    }
    if doc.vars.is_none() {
        return Err(Error::parse(0, "missing `vars` header"));
    }
    if doc.ideal_ref.is_some() && !doc.gens.is_empty() {
        return Err(Error::parse(
            doc.ideal_ref.as_ref().map_or(0, |r| r.0),
            "use either `gen` lines or an `ideal` reference, not both",
        ));
    }
    Ok(doc)
}

fn parse_var_list(vars: &VariableSet, list: &str, lineno: usize) -> Result<VarSubset> {
    let mut subset = VarSubset::EMPTY;
    for name in list.split_whitespace() {
        let i = vars.index_of(name).map_err(|e| Error::parse(lineno, e.to_string()))?;
        if subset.contains(i) {
            return Err(Error::parse(lineno, format!("variable `{name}` listed twice")));
        }
        subset = subset.insert(i);
    }
    Ok(subset)
}

fn parse_monomial_at(vars: &VariableSet, s: &str, lineno: usize) -> Result<Monomial> {
    parse_monomial(vars, s).map_err(|e| match e {
        Error::Parse { message, .. } => Error::parse(lineno, message),
        other => Error::parse(lineno, other.to_string()),
    })
}

/// Parses `1` or `*`-joined factors `name` / `name^k` (`k >= 1`). Repeated
/// variables multiply.
pub fn parse_monomial(vars: &VariableSet, s: &str) -> Result<Monomial> {
    let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
    if compact.is_empty() {
        return Err(Error::parse(0, "empty monomial"));
    }
    let mut exps = vec![0u32; vars.len()];
    if compact == "1" {
        return Ok(Monomial::new(exps));
    }
    for factor in compact.split('*') {
        let (name, power) = match factor.split_once('^') {
            Some((name, k)) => {
                let k: u32 = k
                    .parse()
                    .map_err(|_| Error::parse(0, format!("bad exponent in `{factor}`")))?;
                if k == 0 {
                    return Err(Error::parse(0, format!("exponent must be >= 1 in `{factor}`")));
                }
                (name, k)
            }
            None => (factor, 1),
        };
        if name.is_empty() {
            return Err(Error::parse(0, format!("empty factor in `{s}`")));
        }
        let i = vars.index_of(name)?;
        exps[i] = exps[i].checked_add(power).ok_or(Error::ExponentOverflow)?;
    }
    Ok(Monomial::new(exps))
}

/// Parses an ideal file. Generators are minimalized.
pub fn parse_ideal(text: &str) -> Result<MonomialIdeal> {
    let doc = parse_document(text)?;
    if !doc.spaces.is_empty() || !doc.steps.is_empty() || doc.ideal_ref.is_some() {
        return Err(Error::parse(0, "expected an ideal file (only `vars` and `gen` lines)"));
    }
    MonomialIdeal::new(doc.vars.expect("checked"), doc.gens)
}

fn resolve_ideal(doc: &mut Document, base_dir: Option<&Path>) -> Result<MonomialIdeal> {
    let vars = doc.vars.clone().expect("checked");
    match doc.ideal_ref.take() {
        None => MonomialIdeal::new(vars, std::mem::take(&mut doc.gens)),
        Some((lineno, path)) => {
            let base = base_dir.ok_or_else(|| {
                Error::parse(lineno, "`ideal` reference needs a file location to resolve against")
            })?;
            let full = base.join(&path);
            let text = std::fs::read_to_string(&full).map_err(|e| Error::Io {
                path: full.display().to_string(),
                message: e.to_string(),
            })?;
            let ideal = parse_ideal(&text)?;
            if ideal.vars() != &vars {
                return Err(Error::parse(
                    lineno,
                    format!("referenced ideal `{path}` uses different variables"),
                ));
            }
            Ok(ideal)
        }
    }
}

/// Parses a decomposition file; `base_dir` resolves an `ideal <file>` line.
pub fn parse_decomposition(text: &str, base_dir: Option<&Path>) -> Result<StanleyDecomposition> {
    let mut doc = parse_document(text)?;
    if !doc.steps.is_empty() {
        return Err(Error::parse(0, "`step` lines are not allowed in a decomposition"));
    }
    let ideal = resolve_ideal(&mut doc, base_dir)?;
    let spaces = doc
        .spaces
        .into_iter()
        .map(|(offset, free)| StanleySpace::new(offset, free))
        .collect();
    StanleyDecomposition::new(ideal, spaces)
}

/// Parses a filtration file; `base_dir` resolves an `ideal <file>` line.
pub fn parse_filtration(text: &str, base_dir: Option<&Path>) -> Result<PrimeFiltration> {
    let mut doc = parse_document(text)?;
    if !doc.spaces.is_empty() {
        return Err(Error::parse(0, "`space` lines are not allowed in a filtration"));
    }
    let ideal = resolve_ideal(&mut doc, base_dir)?;
    let steps = doc
        .steps
        .into_iter()
        .map(|(offset, prime)| FiltrationStep::new(offset, prime))
        .collect();
    PrimeFiltration::new(ideal, steps)
}

/// Parses a simplicial complex file (`vertices n`, `facet i j k`).
pub fn parse_complex(text: &str) -> Result<SimplicialComplex> {
    let mut n: Option<usize> = None;
    let mut facets = Vec::new();
    for (lineno, line) in significant_lines(text) {
        let (keyword, rest) = split_keyword(line);
        match keyword {
            "vertices" => {
                if n.is_some() {
                    return Err(Error::parse(lineno, "duplicate `vertices` line"));
                }
                let count: usize = rest
                    .parse()
                    .map_err(|_| Error::parse(lineno, format!("bad vertex count `{rest}`")))?;
                if count == 0 {
                    return Err(Error::parse(lineno, "a complex needs at least one vertex"));
                }
                n = Some(count);
            }
            "facet" => {
                let n = n.ok_or_else(|| Error::parse(lineno, "expected `vertices` before `facet`"))?;
                let mut face = VarSubset::EMPTY;
                for tok in rest.split_whitespace() {
                    let v: usize = tok
                        .parse()
                        .map_err(|_| Error::parse(lineno, format!("bad vertex `{tok}`")))?;
                    if v == 0 || v > n {
                        return Err(Error::parse(lineno, format!("vertex {v} outside 1..={n}")));
                    }
                    face = face.insert(v - 1);
                }
                facets.push(face);
            }
            other => return Err(Error::parse(lineno, format!("unknown keyword `{other}`"))),
        }
    }
    let n = n.ok_or_else(|| Error::parse(0, "missing `vertices` header"))?;
    let vars = VariableSet::indexed(n).map_err(|e| Error::parse(0, e.to_string()))?;
    Ok(SimplicialComplex::new(vars, facets))
}

fn write_header(out: &mut String, ideal: &MonomialIdeal) {
    let _ = writeln!(out, "vars {}", ideal.vars().names().join(" "));
    for g in ideal.generators() {
        let _ = writeln!(out, "gen {}", g.display(ideal.vars()));
    }
}

fn write_subset_line(out: &mut String, keyword: &str, vars: &VariableSet, mono: &Monomial, set: VarSubset) {
    let names = set.names(vars).join(" ");
    if names.is_empty() {
        let _ = writeln!(out, "{keyword} {} |", mono.display(vars));
    } else {
        let _ = writeln!(out, "{keyword} {} | {names}", mono.display(vars));
    }
}

pub fn format_ideal(ideal: &MonomialIdeal) -> String {
    let mut out = String::new();
    write_header(&mut out, ideal);
    out
}

pub fn format_decomposition(d: &StanleyDecomposition) -> String {
    let mut out = String::new();
    write_header(&mut out, d.ideal());
    for s in d.spaces() {
        write_subset_line(&mut out, "space", d.ideal().vars(), s.offset(), s.free_vars());
    }
    out
}

pub fn format_filtration(f: &PrimeFiltration) -> String {
    let mut out = String::new();
    write_header(&mut out, f.ideal());
    for s in f.steps() {
        write_subset_line(&mut out, "step", f.ideal().vars(), s.offset(), s.prime());
    }
    out
}

/// Writes a complex whose vertices are named `x1..xn` (as produced by
/// [`parse_complex`]); other vertex names are written positionally.
pub fn format_complex(c: &SimplicialComplex) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "vertices {}", c.vertices().len());
    for f in c.facets() {
        let idx: Vec<String> = f.iter().map(|i| (i + 1).to_string()).collect();
        if idx.is_empty() {
            let _ = writeln!(out, "facet");
        } else {
            let _ = writeln!(out, "facet {}", idx.join(" "));
        }
    }
    out
}
