//! Instance and mapping files.
//!
//! Instance text format, one directive per line, `#` starts a comment:
//!
//! ```text
//! vertices 4
//! outer 0 1 2
//! edge 0 1
//! ...
//! point 0 0
//! ...
//! expected embeddable        # or not-embeddable, unknown
//! witness 3 1 1              # optional: vertex x y
//! ```
//!
//! `vertices` must come before any `outer`, `edge` or `witness` line.
//! Mappings are written as `vertex_id x y` lines; both also have a JSON form.

use std::collections::HashSet;
use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use super::HarnessError;
use crate::embed::Mapping;
use crate::geometry::{Point, DEFAULT_COORD_BOUND, MAX_COORD_BOUND};
use crate::plane3tree::PlaneGraphInput;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Expected {
    Embeddable,
    NotEmbeddable,
    Unknown,
}

impl Expected {
    fn keyword(self) -> &'static str {
        match self {
            Expected::Embeddable => "embeddable",
            Expected::NotEmbeddable => "not-embeddable",
            Expected::Unknown => "unknown",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct InstanceFile {
    pub graph: PlaneGraphInput,
    pub points: Vec<Point>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub expected: Option<Expected>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub witness: Option<Mapping>,
}

const MAX_VERTICES: i64 = 1 << 26;

fn perr(line: usize, msg: impl Into<String>) -> HarnessError {
    HarnessError::Parse { line, msg: msg.into() }
}

fn ints<const K: usize>(line: usize, args: &[&str]) -> Result<[i64; K], HarnessError> {
    if args.len() != K {
        return Err(perr(line, format!("expected {K} numbers, found {}", args.len())));
    }
    let mut out = [0; K];
    for (o, a) in out.iter_mut().zip(args) {
        *o = a.parse().map_err(|_| perr(line, format!("not an integer: {a:?}")))?;
    }
    Ok(out)
}

fn vertex(line: usize, v: i64, n: Option<usize>) -> Result<usize, HarnessError> {
    let n = n.ok_or_else(|| perr(line, "`vertices` must come first"))?;
    if v < 0 || v as u64 >= n as u64 {
        return Err(perr(line, format!("vertex {v} out of range 0..{n}")));
    }
    Ok(v as usize)
}

fn point(line: usize, x: i64, y: i64, bound: i64) -> Result<Point, HarnessError> {
    Point::with_bound(x, y, bound).map_err(|e| perr(line, e.to_string()))
}

impl InstanceFile {
    pub fn parse(text: &str) -> Result<Self, HarnessError> {
        Self::parse_with_bound(text, DEFAULT_COORD_BOUND)
    }

    /// Parses the text format, rejecting coordinates above `bound`.
    pub fn parse_with_bound(text: &str, bound: i64) -> Result<Self, HarnessError> {
        let mut n: Option<usize> = None;
        let mut outer: Option<[usize; 3]> = None;
        let mut edges = Vec::new();
        let mut edge_set = HashSet::new();
        let mut points = Vec::new();
        let mut point_set = HashSet::new();
        let mut expected = None;
        let mut witness: Vec<Option<Point>> = Vec::new();
        let mut has_witness = false;

        for (i, raw) in text.lines().enumerate() {
            let line = i + 1;
            let body = raw.split('#').next().unwrap_or("").trim();
            if body.is_empty() {
                continue;
            }
            let mut words = body.split_whitespace();
            let key = words.next().unwrap_or_default();
            let args: Vec<&str> = words.collect();
            match key {
                "vertices" => {
                    if n.is_some() {
                        return Err(perr(line, "`vertices` given twice"));
                    }
                    let [v] = ints::<1>(line, &args)?;
                    if !(3..=MAX_VERTICES).contains(&v) {
                        return Err(perr(line, format!("vertex count {v} outside 3..={MAX_VERTICES}")));
                    }
                    n = Some(v as usize);
                    witness = vec![None; v as usize];
                }
                "outer" => {
                    if outer.is_some() {
                        return Err(perr(line, "`outer` given twice"));
                    }
                    let [a, b, c] = ints::<3>(line, &args)?;
                    let o = [vertex(line, a, n)?, vertex(line, b, n)?, vertex(line, c, n)?];
                    if o[0] == o[1] || o[1] == o[2] || o[0] == o[2] {
                        return Err(perr(line, "outer vertices must be distinct"));
                    }
                    outer = Some(o);
                }
                "edge" => {
                    let [a, b] = ints::<2>(line, &args)?;
                    let (u, v) = (vertex(line, a, n)?, vertex(line, b, n)?);
                    if u == v {
                        return Err(perr(line, format!("self-loop at {u}")));
                    }
                    if !edge_set.insert((u.min(v), u.max(v))) {
                        return Err(perr(line, format!("duplicate edge {u} {v}")));
                    }
                    edges.push((u, v));
                }
                "point" => {
                    let [x, y] = ints::<2>(line, &args)?;
                    let p = point(line, x, y, bound)?;
                    if !point_set.insert(p) {
                        return Err(perr(line, format!("duplicate point {p}")));
                    }
                    points.push(p);
                }
                "expected" => {
                    expected = Some(match args.as_slice() {
                        ["embeddable"] => Expected::Embeddable,
                        ["not-embeddable"] => Expected::NotEmbeddable,
                        ["unknown"] => Expected::Unknown,
                        _ => return Err(perr(line, "expected one of embeddable, not-embeddable, unknown")),
                    });
                }
                "witness" => {
                    let [v, x, y] = ints::<3>(line, &args)?;
                    let v = vertex(line, v, n)?;
                    if witness[v].replace(point(line, x, y, bound)?).is_some() {
                        return Err(perr(line, format!("witness for vertex {v} given twice")));
                    }
                    has_witness = true;
                }
                other => return Err(perr(line, format!("unknown directive {other:?}"))),
            }
        }

        let last = text.lines().count().max(1);
        let n = n.ok_or_else(|| perr(last, "missing `vertices`"))?;
        let outer = outer.ok_or_else(|| perr(last, "missing `outer`"))?;
        let witness = if has_witness {
            let assignment = witness
                .into_iter()
                .enumerate()
                .map(|(v, p)| p.ok_or_else(|| perr(last, format!("witness misses vertex {v}"))))
                .collect::<Result<Vec<_>, _>>()?;
            Some(Mapping { assignment })
        } else {
            None
        };
        Ok(InstanceFile { graph: PlaneGraphInput::new(n, edges, outer), points, expected, witness })
    }

    pub fn to_text(&self) -> String {
        let mut s = String::new();
        let g = &self.graph;
        let _ = writeln!(s, "vertices {}", g.n);
        let _ = writeln!(s, "outer {} {} {}", g.outer[0], g.outer[1], g.outer[2]);
        for &(u, v) in &g.edges {
            let _ = writeln!(s, "edge {u} {v}");
        }
        for p in &self.points {
            let _ = writeln!(s, "point {} {}", p.x(), p.y());
        }
        if let Some(e) = self.expected {
            let _ = writeln!(s, "expected {}", e.keyword());
        }
        if let Some(w) = &self.witness {
            for (v, p) in w.assignment.iter().enumerate() {
                let _ = writeln!(s, "witness {v} {} {}", p.x(), p.y());
            }
        }
        s
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("instances always serialise")
    }

    pub fn from_json(text: &str) -> Result<Self, HarnessError> {
        Ok(serde_json::from_str(text)?)
    }

    /// Accepts either format: JSON if the first non-blank character is `{`.
    pub fn parse_any(text: &str, bound: i64) -> Result<Self, HarnessError> {
        if text.trim_start().starts_with('{') {
            let inst = Self::from_json(text)?;
            let mut seen = HashSet::new();
            for &p in &inst.points {
                if p.max_abs() > bound as u64 {
                    return Err(HarnessError::Parse { line: 0, msg: format!("point {p} exceeds bound {bound}") });
                }
                if !seen.insert(p) {
                    return Err(HarnessError::Parse { line: 0, msg: format!("duplicate point {p}") });
                }
            }
            Ok(inst)
        } else {
            Self::parse_with_bound(text, bound)
        }
    }
}

pub fn mapping_to_text(m: &Mapping) -> String {
    let mut s = String::new();
    for (v, p) in m.assignment.iter().enumerate() {
        let _ = writeln!(s, "{v} {} {}", p.x(), p.y());
    }
    s
}

pub fn mapping_to_json(m: &Mapping) -> String {
    serde_json::to_string(m).expect("mappings always serialise")
}

/// Parses `vertex_id x y` lines (any order, each vertex exactly once) or
/// the JSON form.
pub fn parse_mapping(text: &str) -> Result<Mapping, HarnessError> {
    if text.trim_start().starts_with('{') {
        return Ok(serde_json::from_str(text)?);
    }
    let mut slots: Vec<Option<Point>> = Vec::new();
    let mut last = 0;
    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        last = line;
        let body = raw.split('#').next().unwrap_or("").trim();
        if body.is_empty() {
            continue;
        }
        let args: Vec<&str> = body.split_whitespace().collect();
        let [v, x, y] = ints::<3>(line, &args)?;
        if v < 0 {
            return Err(perr(line, format!("negative vertex id {v}")));
        }
        let v = v as usize;
        if v >= slots.len() {
            slots.resize(v + 1, None);
        }
        if slots[v].replace(point(line, x, y, MAX_COORD_BOUND)?).is_some() {
            return Err(perr(line, format!("vertex {v} given twice")));
        }
    }
    let assignment = slots
        .into_iter()
        .enumerate()
        .map(|(v, p)| p.ok_or_else(|| perr(last.max(1), format!("no position for vertex {v}"))))
        .collect::<Result<Vec<_>, _>>()?;
    Ok(Mapping { assignment })
}
