//! Line-oriented text formats.
//!
//! ```text
//! # digraph
//! v 2
//! a 0 0 1
//! a 1 1 0
//!
//! # rotation system, ends in cyclic order
//! rot 0 1h 0t 3h 2t
//!
//! # face set, canonical walks in sorted order
//! face 0 1
//!
//! # flip moves
//! flip 3 1 X=1
//! ```
//!
//! `#` starts a comment anywhere on a line. Writers emit exactly the form the
//! readers accept.

use std::fmt::Write as _;

use crate::connectivity::EdgeCut2;
use crate::digraph::{Arc, ArcEnd, Digraph};
use crate::embedding::{FaceSet, RotationSystem};
use crate::error::{Error, Result};
use crate::immersion::ImmersionCertificate;
use crate::whitney::FlipMove;

/// Non-empty lines with comments stripped, as `(line number, tokens)`.
fn tokens(text: &str) -> impl Iterator<Item = (usize, Vec<&str>)> {
    text.lines().enumerate().filter_map(|(i, line)| {
        let content = line.split('#').next().unwrap_or("");
        let toks: Vec<&str> = content.split_whitespace().collect();
        (!toks.is_empty()).then_some((i + 1, toks))
    })
}

fn number(line: usize, tok: &str, what: &str) -> Result<usize> {
    tok.parse()
        .map_err(|_| Error::parse(line, format!("expected {what}, found `{tok}`")))
}

pub fn write_digraph(h: &Digraph) -> String {
    let mut out = format!("v {}\n", h.vertex_count());
    for (id, arc) in h.arcs().iter().enumerate() {
        writeln!(out, "a {id} {} {}", arc.tail, arc.head).unwrap();
    }
    out
}

pub fn parse_digraph(text: &str) -> Result<Digraph> {
    let mut vertex_count = None;
    let mut arcs = Vec::new();
    let mut last_line = 0;
    for (line, toks) in tokens(text) {
        last_line = line;
        match toks[0] {
            "v" => {
                if vertex_count.is_some() {
                    return Err(Error::parse(line, "second `v` line"));
                }
                if toks.len() != 2 {
                    return Err(Error::parse(line, "expected `v <count>`"));
                }
                vertex_count = Some(number(line, toks[1], "a vertex count")?);
            }
            "a" => {
                let Some(n) = vertex_count else {
                    return Err(Error::parse(line, "arc before the `v` line"));
                };
                if toks.len() != 4 {
                    return Err(Error::parse(line, "expected `a <id> <tail> <head>`"));
                }
                let id = number(line, toks[1], "an arc id")?;
                if id != arcs.len() {
                    return Err(Error::parse(
                        line,
                        format!("expected arc id {}, found {id}", arcs.len()),
                    ));
                }
                let tail = number(line, toks[2], "a tail vertex")?;
                let head = number(line, toks[3], "a head vertex")?;
                if tail >= n || head >= n {
                    return Err(Error::parse(
                        line,
                        format!("arc {id} has an endpoint outside 0..{n}"),
                    ));
                }
                arcs.push(Arc::new(tail, head));
            }
            other => return Err(Error::parse(line, format!("unknown record `{other}`"))),
        }
    }
    let Some(n) = vertex_count else {
        return Err(Error::parse(last_line.max(1), "missing `v <count>` line"));
    };
    Digraph::new(n, arcs)
}

fn parse_end(line: usize, tok: &str) -> Result<ArcEnd> {
    let bad = || {
        Error::parse(
            line,
            format!("expected an arc end like `3h` or `3t`, found `{tok}`"),
        )
    };
    let (num, side) = tok.split_at(tok.len().checked_sub(1).ok_or_else(bad)?);
    let arc = num.parse().map_err(|_| bad())?;
    match side {
        "h" => Ok(ArcEnd::head(arc)),
        "t" => Ok(ArcEnd::tail(arc)),
        _ => Err(bad()),
    }
}

pub fn write_rotation(rotation: &RotationSystem) -> String {
    let mut out = String::new();
    for (v, ends) in rotation.orders().iter().enumerate() {
        write!(out, "rot {v}").unwrap();
        for end in ends {
            write!(out, " {end}").unwrap();
        }
        out.push('\n');
    }
    out
}

/// Parse `rot` lines; every vertex below `vertex_count` must appear once.
pub fn parse_rotation(text: &str, vertex_count: usize) -> Result<RotationSystem> {
    let mut order: Vec<Option<Vec<ArcEnd>>> = vec![None; vertex_count];
    let mut last_line = 0;
    for (line, toks) in tokens(text) {
        last_line = line;
        if toks[0] != "rot" || toks.len() < 2 {
            return Err(Error::parse(line, "expected `rot <vertex> <end>...`"));
        }
        let v = number(line, toks[1], "a vertex")?;
        if v >= vertex_count {
            return Err(Error::parse(
                line,
                format!("vertex {v} outside 0..{vertex_count}"),
            ));
        }
        if order[v].is_some() {
            return Err(Error::parse(
                line,
                format!("second rotation for vertex {v}"),
            ));
        }
        let ends = toks[2..]
            .iter()
            .map(|t| parse_end(line, t))
            .collect::<Result<Vec<_>>>()?;
        order[v] = Some(ends);
    }
    let order = order
        .into_iter()
        .enumerate()
        .map(|(v, o)| {
            o.ok_or_else(|| Error::parse(last_line.max(1), format!("no rotation for vertex {v}")))
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(RotationSystem::new(order))
}

pub fn write_faces(faces: &FaceSet) -> String {
    let mut out = String::new();
    for walk in faces.walks() {
        out.push_str("face");
        for a in walk.arcs() {
            write!(out, " {a}").unwrap();
        }
        out.push('\n');
    }
    out
}

pub fn parse_faces(text: &str) -> Result<FaceSet> {
    let mut lists = Vec::new();
    for (line, toks) in tokens(text) {
        if toks[0] != "face" || toks.len() < 2 {
            return Err(Error::parse(line, "expected `face <arc>...`"));
        }
        lists.push(
            toks[1..]
                .iter()
                .map(|t| number(line, t, "an arc id"))
                .collect::<Result<Vec<_>>>()?,
        );
    }
    Ok(FaceSet::from_arc_lists(lists))
}

fn join(values: &[usize], sep: &str) -> String {
    values
        .iter()
        .map(usize::to_string)
        .collect::<Vec<_>>()
        .join(sep)
}

pub fn write_cut_side(side: &[usize]) -> String {
    join(side, ",")
}

pub fn write_moves(moves: &[FlipMove]) -> String {
    let mut out = String::new();
    for m in moves {
        writeln!(
            out,
            "flip {} {} X={}",
            m.cut.out_arc,
            m.cut.in_arc,
            write_cut_side(&m.cut.side)
        )
        .unwrap();
    }
    out
}

pub fn parse_moves(text: &str) -> Result<Vec<FlipMove>> {
    let mut moves = Vec::new();
    for (line, toks) in tokens(text) {
        if toks.len() != 4 || toks[0] != "flip" {
            return Err(Error::parse(
                line,
                "expected `flip <out_arc> <in_arc> X=<vertices>`",
            ));
        }
        let out_arc = number(line, toks[1], "an arc id")?;
        let in_arc = number(line, toks[2], "an arc id")?;
        let Some(list) = toks[3].strip_prefix("X=") else {
            return Err(Error::parse(line, "expected `X=<vertices>`"));
        };
        let mut side = list
            .split(',')
            .map(|t| number(line, t, "a vertex"))
            .collect::<Result<Vec<_>>>()?;
        side.sort_unstable();
        side.dedup();
        moves.push(FlipMove::new(EdgeCut2 {
            out_arc,
            in_arc,
            side,
        }));
    }
    Ok(moves)
}

pub fn write_certificate(cert: &ImmersionCertificate) -> String {
    let mut out = String::new();
    for (t, b) in cert.branch_map.iter().enumerate() {
        writeln!(out, "branch {t} {b}").unwrap();
    }
    for (t, path) in cert.paths.iter().enumerate() {
        writeln!(out, "path {t} {}", join(path, " ")).unwrap();
    }
    out
}
