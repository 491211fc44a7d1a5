//! Line-oriented text formats for representations, Λ-modules and their morphisms.
//!
//! ```text
//! rep over F32003 quiver A2
//! vertices 1 2
//! arrow a 1 2
//! dim 1 = 1
//! dim 2 = 2
//! map a = [[1],[0]]
//! eps 2 = [[0,1],[0,0]]
//! ```
//!
//! The `vertices`/`arrow` lines embed the quiver and may be omitted when the quiver is
//! supplied separately. Missing `dim`, `map` and `eps` lines mean zero. Matrices list rows,
//! with the row count equal to the target dimension. A morphism file has a `morphism ...`
//! header, the embedded quiver, then `source`, `target` and `blocks` sections; the last
//! holds `block <vertex> = [[...]]` lines.

use std::fmt::Write as _;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::exactlin::{Field, Matrix};
use crate::kqrep::{Module, Morphism, Rep};
use crate::lambda::{make_diffrep, DiffRep, DiffRepMap};
use crate::quiver::{content_lines, Quiver};

fn perr(line: usize, message: impl Into<String>) -> Error {
    Error::Parse { line, message: message.into() }
}

/// `[[a,b],[c,d]]`; an empty matrix prints as `[]` when it has no rows.
pub fn matrix_to_text(m: &Matrix) -> String {
    let f = m.field();
    let rows: Vec<String> = (0..m.rows())
        .map(|r| {
            let entries: Vec<String> = m.row(r).iter().map(|x| f.format_scalar(x)).collect();
            format!("[{}]", entries.join(","))
        })
        .collect();
    format!("[{}]", rows.join(","))
}

/// Parses a matrix of the given shape.
pub fn parse_matrix(field: Field, text: &str, rows: usize, cols: usize, line: usize) -> Result<Matrix> {
    let s: String = text.chars().filter(|c| !c.is_whitespace()).collect();
    let inner = s
        .strip_prefix('[')
        .and_then(|t| t.strip_suffix(']'))
        .ok_or_else(|| perr(line, format!("expected a matrix `[[...],...]`, found `{text}`")))?;
    let row_texts: Vec<&str> = if inner.is_empty() {
        Vec::new()
    } else {
        let body = inner
            .strip_prefix('[')
            .and_then(|t| t.strip_suffix(']'))
            .ok_or_else(|| perr(line, "matrix rows must be bracketed"))?;
        body.split("],[").collect()
    };
    if row_texts.len() != rows {
        return Err(perr(line, format!("expected {rows} rows, found {}", row_texts.len())));
    }
    let mut entries = Vec::with_capacity(rows);
    for r in row_texts {
        let row: Vec<_> = if r.is_empty() {
            Vec::new()
        } else {
            r.split(',')
                .map(|x| field.parse_scalar(x).ok_or_else(|| perr(line, format!("bad scalar `{x}` over {field}"))))
                .collect::<Result<_>>()?
        };
        if row.len() != cols {
            return Err(perr(line, format!("expected {cols} columns, found {}", row.len())));
        }
        entries.push(row);
    }
    Ok(Matrix::from_rows(field, entries, cols))
}

fn quiver_lines(q: &Quiver) -> String {
    q.to_text().lines().skip(1).map(|l| format!("{l}\n")).collect()
}

fn write_body(out: &mut String, base: &Rep, eps: Option<&[Matrix]>) {
    let q = base.quiver();
    for v in 0..q.n_vertices() {
        let _ = writeln!(out, "dim {} = {}", q.vertex_name(v), base.dims()[v]);
    }
    for (k, a) in q.arrows().iter().enumerate() {
        let _ = writeln!(out, "map {} = {}", a.name, matrix_to_text(base.map(k)));
    }
    for (v, e) in eps.into_iter().flatten().enumerate() {
        let _ = writeln!(out, "eps {} = {}", q.vertex_name(v), matrix_to_text(e));
    }
}

pub fn rep_to_text(r: &Rep) -> String {
    let mut out = format!("rep over {} quiver {}\n{}", r.field(), r.quiver().name(), quiver_lines(r.quiver()));
    write_body(&mut out, r, None);
    out
}

pub fn diffrep_to_text(m: &DiffRep) -> String {
    let q = m.quiver();
    let mut out = format!("rep over {} quiver {}\n{}", m.field(), q.name(), quiver_lines(q));
    write_body(&mut out, m.base(), Some(m.eps_matrices()));
    out
}

pub fn diffrep_map_to_text(g: &DiffRepMap) -> String {
    let q = g.source().quiver();
    let mut out = format!("morphism over {} quiver {}\n{}", g.field(), q.name(), quiver_lines(q));
    for (title, m) in [("source", g.source()), ("target", g.target())] {
        let _ = writeln!(out, "{title}");
        write_body(&mut out, m.base(), Some(m.eps_matrices()));
    }
    out.push_str("blocks\n");
    for v in 0..q.n_vertices() {
        let _ = writeln!(out, "block {} = {}", q.vertex_name(v), matrix_to_text(g.block(v)));
    }
    out
}

type Lines<'a> = [(usize, &'a str)];

/// `<keyword> over <field> quiver <name>`, then the optional embedded quiver.
fn parse_header<'a>(
    lines: &'a Lines<'a>,
    keyword: &str,
    quiver: Option<&Arc<Quiver>>,
) -> Result<(Field, Arc<Quiver>, &'a Lines<'a>)> {
    let &(l1, first) = lines.first().ok_or_else(|| perr(1, "empty file"))?;
    let (field, name) = match first.split_whitespace().collect::<Vec<_>>()[..] {
        [k, "over", f, "quiver", name] if k == keyword => {
            (f.parse::<Field>().map_err(|e| perr(l1, e.to_string()))?, name.to_string())
        }
        _ => return Err(perr(l1, format!("expected `{keyword} over <field> quiver <name>`"))),
    };
    let embedded = lines[1..].iter().take_while(|(_, l)| l.starts_with("vertices") || l.starts_with("arrow ")).count();
    let q = if embedded > 0 {
        let mut qlines = vec![(l1, format!("quiver {name}"))];
        qlines.extend(lines[1..=embedded].iter().map(|&(n, l)| (n, l.to_string())));
        let refs: Vec<(usize, &str)> = qlines.iter().map(|(n, l)| (*n, l.as_str())).collect();
        Arc::new(Quiver::parse_lines(&refs)?)
    } else {
        let q = quiver.ok_or_else(|| perr(l1, "no quiver: embed `vertices`/`arrow` lines or supply one"))?;
        if q.name() != name {
            return Err(perr(l1, format!("file names quiver `{name}` but `{}` was supplied", q.name())));
        }
        q.clone()
    };
    Ok((field, q, &lines[1 + embedded..]))
}

fn split_assignment(line: &str) -> Option<(&str, &str, &str)> {
    let (lhs, rhs) = line.split_once('=')?;
    let mut words = lhs.split_whitespace();
    let (key, id) = (words.next()?, words.next()?);
    if words.next().is_some() {
        return None;
    }
    Some((key, id, rhs.trim()))
}

fn parse_body(lines: &Lines<'_>, q: &Arc<Quiver>, field: Field, allow_eps: bool) -> Result<DiffRep> {
    let n = q.n_vertices();
    let mut dims: Vec<Option<usize>> = vec![None; n];
    let mut pending_maps: Vec<Option<(usize, &str)>> = vec![None; q.arrows().len()];
    let mut pending_eps: Vec<Option<(usize, &str)>> = vec![None; n];
    for &(ln, line) in lines {
        let (key, id, rhs) = split_assignment(line).ok_or_else(|| perr(ln, format!("cannot parse `{line}`")))?;
        let dup = || perr(ln, format!("duplicate `{key} {id}`"));
        match key {
            "dim" => {
                let v = q.vertex_index(id).map_err(|e| perr(ln, e.to_string()))?;
                let d = rhs.parse().map_err(|_| perr(ln, format!("bad dimension `{rhs}`")))?;
                if dims[v].replace(d).is_some() {
                    return Err(dup());
                }
            }
            "map" => {
                let a = q.arrow_index(id).map_err(|e| perr(ln, e.to_string()))?;
                if pending_maps[a].replace((ln, rhs)).is_some() {
                    return Err(dup());
                }
            }
            "eps" if allow_eps => {
                let v = q.vertex_index(id).map_err(|e| perr(ln, e.to_string()))?;
                if pending_eps[v].replace((ln, rhs)).is_some() {
                    return Err(dup());
                }
            }
            _ => return Err(perr(ln, format!("unexpected `{key}`"))),
        }
    }
    let dims: Vec<usize> = dims.into_iter().map(|d| d.unwrap_or(0)).collect();
    let last = lines.last().map_or(1, |l| l.0);
    let mut maps = Vec::new();
    for (k, a) in q.arrows().iter().enumerate() {
        let (r, c) = (dims[a.target], dims[a.source]);
        maps.push(match pending_maps[k] {
            Some((ln, text)) => parse_matrix(field, text, r, c, ln)?,
            None => Matrix::zeros(field, r, c),
        });
    }
    let mut eps = Vec::new();
    for v in 0..n {
        eps.push(match pending_eps[v] {
            Some((ln, text)) => parse_matrix(field, text, dims[v], dims[v], ln)?,
            None => Matrix::zeros(field, dims[v], dims[v]),
        });
    }
    let base = Rep::new(q.clone(), field, dims, maps).map_err(|e| perr(last, e.to_string()))?;
    make_diffrep(base, eps).map_err(|e| {
        let ln = match &e {
            Error::EpsNotSquareZero(v) => q.vertex_index(v).ok().and_then(|i| pending_eps[i]).map(|p| p.0),
            _ => None,
        };
        perr(ln.unwrap_or(last), e.to_string())
    })
}

/// Parses a Λ-module; a file without `eps` lines gives `ε = 0`.
pub fn parse_diffrep(text: &str, quiver: Option<&Arc<Quiver>>) -> Result<DiffRep> {
    let lines = content_lines(text);
    let (field, q, body) = parse_header(&lines, "rep", quiver)?;
    parse_body(body, &q, field, true)
}

/// Parses a kQ-representation; `eps` lines are rejected.
pub fn parse_rep(text: &str, quiver: Option<&Arc<Quiver>>) -> Result<Rep> {
    let lines = content_lines(text);
    let (field, q, body) = parse_header(&lines, "rep", quiver)?;
    Ok(parse_body(body, &q, field, false)?.base().clone())
}

pub fn parse_diffrep_map(text: &str, quiver: Option<&Arc<Quiver>>) -> Result<DiffRepMap> {
    let lines = content_lines(text);
    let (field, q, body) = parse_header(&lines, "morphism", quiver)?;
    let find = |word: &str| body.iter().position(|(_, l)| *l == word);
    let missing = |word: &str| perr(body.first().map_or(1, |l| l.0), format!("missing `{word}` section"));
    let s = find("source").ok_or_else(|| missing("source"))?;
    let t = find("target").ok_or_else(|| missing("target"))?;
    let b = find("blocks").ok_or_else(|| missing("blocks"))?;
    if !(s == 0 && s < t && t < b) {
        return Err(perr(body[0].0, "sections must be `source`, `target`, `blocks` in that order"));
    }
    let source = parse_body(&body[s + 1..t], &q, field, true)?;
    let target = parse_body(&body[t + 1..b], &q, field, true)?;
    let mut blocks: Vec<Option<Matrix>> = vec![None; q.n_vertices()];
    for &(ln, line) in &body[b + 1..] {
        match split_assignment(line) {
            Some(("block", id, rhs)) => {
                let v = q.vertex_index(id).map_err(|e| perr(ln, e.to_string()))?;
                let m = parse_matrix(field, rhs, target.dims()[v], source.dims()[v], ln)?;
                if blocks[v].replace(m).is_some() {
                    return Err(perr(ln, format!("duplicate `block {id}`")));
                }
            }
            _ => return Err(perr(ln, format!("expected `block <vertex> = [[...]]`, found `{line}`"))),
        }
    }
    let blocks = blocks
        .into_iter()
        .enumerate()
        .map(|(v, m)| m.unwrap_or_else(|| Matrix::zeros(field, target.dims()[v], source.dims()[v])))
        .collect();
    let last = body.last().map_or(1, |l| l.0);
    Morphism::new(source, target, blocks).map_err(|e| perr(last, e.to_string()))
}
