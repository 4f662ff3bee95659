//! Line-oriented instance files.
//!
//! Every format ignores blank lines and anything after `#`. The first
//! remaining line is a header naming the kind and the universe size:
//!
//! ```text
//! poset 3        tree 4        imp 7
//! 1 3            1 2           5 -> 6 7
//! 2 3            2 3           1 2 3 -> 7
//!                2 4           4 ->
//! ```
//!
//! Poset lines `u v` mean `u < v`; tree lines are undirected edges. Bench
//! spec files have no header and hold one `m l t seed` line per instance.

use std::fmt::Write as _;

use thiserror::Error;
use wildrows_core::{
    ElemSet, FamilyError, Implication, ImplicationFamily, Poset, PosetError, Tree, TreeError,
};

use crate::gen::LayeredSpec;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum FormatError {
    #[error("empty input: expected a `{0} <w>` header")]
    MissingHeader(&'static str),
    #[error("line {line}: expected header `{expected} <w>`")]
    BadHeader { line: usize, expected: &'static str },
    #[error("line {line}: `{token}` is not a non-negative integer")]
    BadNumber { line: usize, token: String },
    #[error("line {line}: expected {expected}")]
    BadLine { line: usize, expected: &'static str },
    #[error("line {line}: element {element} outside 1..={w}")]
    OutOfRange { line: usize, element: usize, w: usize },
    #[error(transparent)]
    Poset(#[from] PosetError),
    #[error(transparent)]
    Tree(#[from] TreeError),
    #[error(transparent)]
    Family(#[from] FamilyError),
    #[error("line {line}: {message}")]
    BadSpec { line: usize, message: String },
}

/// Non-empty lines with comments stripped, numbered from 1.
fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines().enumerate().filter_map(|(i, raw)| {
        let line = raw.split('#').next().unwrap_or("").trim();
        (!line.is_empty()).then_some((i + 1, line))
    })
}

fn number(line: usize, token: &str) -> Result<usize, FormatError> {
    token.parse().map_err(|_| FormatError::BadNumber { line, token: token.to_string() })
}

fn element(line: usize, token: &str, w: usize) -> Result<usize, FormatError> {
    let e = number(line, token)?;
    if e == 0 || e > w {
        return Err(FormatError::OutOfRange { line, element: e, w });
    }
    Ok(e)
}

/// Splits off the header and returns `(w, body lines)`.
fn with_header<'a>(
    text: &'a str,
    kind: &'static str,
) -> Result<(usize, impl Iterator<Item = (usize, &'a str)>), FormatError> {
    let mut lines = content_lines(text);
    let (line, header) = lines.next().ok_or(FormatError::MissingHeader(kind))?;
    let mut tokens = header.split_whitespace();
    if tokens.next() != Some(kind) {
        return Err(FormatError::BadHeader { line, expected: kind });
    }
    let w = match (tokens.next(), tokens.next()) {
        (Some(t), None) => number(line, t)?,
        _ => return Err(FormatError::BadHeader { line, expected: kind }),
    };
    Ok((w, lines))
}

fn pairs<'a>(
    lines: impl Iterator<Item = (usize, &'a str)>,
    w: usize,
) -> Result<Vec<(usize, usize)>, FormatError> {
    lines
        .map(|(line, body)| {
            let tokens: Vec<&str> = body.split_whitespace().collect();
            match tokens[..] {
                [u, v] => Ok((element(line, u, w)?, element(line, v, w)?)),
                _ => Err(FormatError::BadLine { line, expected: "two elements `u v`" }),
            }
        })
        .collect()
}

pub fn parse_poset(text: &str) -> Result<Poset, FormatError> {
    let (w, lines) = with_header(text, "poset")?;
    let relations = pairs(lines, w)?;
    Ok(Poset::from_relations(w, &relations)?)
}

/// Writes the cover relation, which parses back to the same poset.
pub fn render_poset(p: &Poset) -> String {
    let mut out = format!("poset {}\n", p.w());
    for (u, v) in p.cover_pairs() {
        writeln!(out, "{u} {v}").unwrap();
    }
    out
}

pub fn parse_tree(text: &str) -> Result<Tree, FormatError> {
    let (w, lines) = with_header(text, "tree")?;
    let edges = pairs(lines, w)?;
    Ok(Tree::from_edges(w, &edges)?)
}

pub fn render_tree(t: &Tree) -> String {
    let mut out = format!("tree {}\n", t.w());
    for (u, v) in t.edges() {
        writeln!(out, "{u} {v}").unwrap();
    }
    out
}

pub fn parse_family(text: &str) -> Result<ImplicationFamily, FormatError> {
    let (w, lines) = with_header(text, "imp")?;
    let mut implications = Vec::new();
    for (line, body) in lines {
        let Some((lhs, rhs)) = body.split_once("->") else {
            return Err(FormatError::BadLine { line, expected: "`a1 a2 ... -> b1 b2 ...`" });
        };
        let side = |s: &str| -> Result<ElemSet, FormatError> {
            s.split_whitespace().map(|t| element(line, t, w)).collect()
        };
        implications.push(Implication::new(side(lhs)?, side(rhs)?));
    }
    Ok(ImplicationFamily::new(w, implications)?)
}

pub fn render_family(f: &ImplicationFamily) -> String {
    let mut out = format!("imp {}\n", f.w());
    for imp in f {
        let side = |s: &ElemSet| s.iter().map(|e| e.to_string()).collect::<Vec<_>>().join(" ");
        let (a, b) = (side(imp.premise()), side(imp.conclusion()));
        let line = match (a.is_empty(), b.is_empty()) {
            (true, _) => format!("-> {b}"),
            (false, true) => format!("{a} ->"),
            _ => format!("{a} -> {b}"),
        };
        writeln!(out, "{}", line.trim_end()).unwrap();
    }
    out
}

pub fn parse_bench_specs(text: &str) -> Result<Vec<LayeredSpec>, FormatError> {
    content_lines(text)
        .map(|(line, body)| {
            let tokens: Vec<&str> = body.split_whitespace().collect();
            let [m, l, t, seed] = tokens[..] else {
                return Err(FormatError::BadLine { line, expected: "`m l t seed`" });
            };
            let seed = seed.parse().map_err(|_| FormatError::BadNumber { line, token: seed.to_string() })?;
            let spec = LayeredSpec { m: number(line, m)?, l: number(line, l)?, t: number(line, t)?, seed };
            spec.validate().map_err(|message| FormatError::BadSpec { line, message })?;
            Ok(spec)
        })
        .collect()
}

pub fn render_bench_specs(specs: &[LayeredSpec]) -> String {
    specs.iter().map(|s| format!("{} {} {} {}\n", s.m, s.l, s.t, s.seed)).collect()
}
