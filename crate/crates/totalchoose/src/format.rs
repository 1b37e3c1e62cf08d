//! The line-oriented instance and coloring file formats.
//!
//! An instance file holds optional `c <key> <value>` metadata lines, a header
//! `p tot <n> <m>`, one `e <u> <v>` line per edge instance (1-indexed,
//! parallel copies repeated), and optional list lines `l v<i> c1 c2 ...` /
//! `l e<j> c1 c2 ...` where `e<j>` is the j-th edge line. A coloring file has
//! one `v<i> <color>` or `e<j> <color>` line per element, ascending. Files
//! written by this module parse back to byte-identical output.

use crate::graph::{ColorSet, ElementId, ListAssignment, Multigraph, PartialTotalColoring};
use std::fmt;
use std::fmt::Write as _;

/// A parse failure, naming the offending 1-based line.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseError {
    pub line: usize,
    pub message: String,
}

impl ParseError {
    fn new(line: usize, message: impl Into<String>) -> Self {
        ParseError {
            line,
            message: message.into(),
        }
    }
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "line {}: {}", self.line, self.message)
    }
}

impl std::error::Error for ParseError {}

/// Generation metadata carried in the file header comments.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct InstanceMeta {
    pub seed: Option<u64>,
    pub delta: Option<usize>,
    pub palette: Option<u32>,
}

/// A parsed instance: the graph, its optional list assignment, and metadata.
#[derive(Debug, Clone)]
pub struct InstanceFile {
    pub graph: Multigraph,
    pub lists: Option<ListAssignment>,
    pub meta: InstanceMeta,
}

pub fn write_instance(inst: &InstanceFile) -> String {
    let g = &inst.graph;
    let mut out = String::new();
    if let Some(seed) = inst.meta.seed {
        writeln!(out, "c seed {seed}").unwrap();
    }
    if let Some(delta) = inst.meta.delta {
        writeln!(out, "c delta {delta}").unwrap();
    }
    if let Some(palette) = inst.meta.palette {
        writeln!(out, "c palette {palette}").unwrap();
    }
    writeln!(out, "p tot {} {}", g.vertex_count(), g.edge_count()).unwrap();
    for e in 0..g.edge_count() {
        let (u, v) = g.endpoints(e);
        writeln!(out, "e {} {}", u + 1, v + 1).unwrap();
    }
    if let Some(lists) = &inst.lists {
        for i in 0..g.vertex_count() {
            write_list_line(&mut out, 'v', i, lists.get(ElementId::Vertex(i)));
        }
        for j in 0..g.edge_count() {
            write_list_line(&mut out, 'e', j, lists.get(ElementId::Edge(j)));
        }
    }
    out
}

fn write_list_line(out: &mut String, tag: char, index: usize, list: &ColorSet) {
    write!(out, "l {tag}{}", index + 1).unwrap();
    for c in list.iter() {
        write!(out, " {c}").unwrap();
    }
    out.push('\n');
}

pub fn read_instance(text: &str) -> Result<InstanceFile, ParseError> {
    let mut meta = InstanceMeta::default();
    let mut header: Option<(usize, usize)> = None;
    let mut edges: Vec<(usize, usize)> = Vec::new();
    let mut vertex_lists: Vec<Option<ColorSet>> = Vec::new();
    let mut edge_lists: Vec<Option<ColorSet>> = Vec::new();
    let mut saw_list_line = false;

    for (lineno, raw) in text.lines().enumerate() {
        let lineno = lineno + 1;
        let line = raw.trim();
        if line.is_empty() {
            continue;
        }
        let mut fields = line.split_whitespace();
        match fields.next().unwrap() {
            "c" => {
                let key = fields.next();
                let value = fields.next();
                match (key, value) {
                    (Some("seed"), Some(v)) => meta.seed = v.parse().ok(),
                    (Some("delta"), Some(v)) => meta.delta = v.parse().ok(),
                    (Some("palette"), Some(v)) => meta.palette = v.parse().ok(),
                    _ => {} // other comments are ignored
                }
            }
            "p" => {
                if header.is_some() {
                    return Err(ParseError::new(lineno, "duplicate problem line"));
                }
                if fields.next() != Some("tot") {
                    return Err(ParseError::new(lineno, "expected 'p tot <n> <m>'"));
                }
                let n = parse_field(lineno, fields.next(), "vertex count")?;
                let m = parse_field(lineno, fields.next(), "edge count")?;
                header = Some((n, m));
                vertex_lists = vec![None; n];
                edge_lists = vec![None; m];
            }
            "e" => {
                let (n, m) = header
                    .ok_or_else(|| ParseError::new(lineno, "edge before the problem line"))?;
                let u: usize = parse_field(lineno, fields.next(), "endpoint")?;
                let v: usize = parse_field(lineno, fields.next(), "endpoint")?;
                if u == 0 || v == 0 || u > n || v > n {
                    return Err(ParseError::new(
                        lineno,
                        format!("endpoint out of range 1..={n}"),
                    ));
                }
                if u == v {
                    return Err(ParseError::new(lineno, "loops are not allowed"));
                }
                if edges.len() == m {
                    return Err(ParseError::new(lineno, "more edges than declared"));
                }
                edges.push((u - 1, v - 1));
            }
            "l" => {
                let (n, m) = header
                    .ok_or_else(|| ParseError::new(lineno, "list before the problem line"))?;
                saw_list_line = true;
                let target = fields
                    .next()
                    .ok_or_else(|| ParseError::new(lineno, "missing list target"))?;
                let mut colors = Vec::new();
                for f in fields {
                    let c: u32 = f
                        .parse()
                        .map_err(|_| ParseError::new(lineno, format!("bad color '{f}'")))?;
                    colors.push(c);
                }
                let set = ColorSet::new(colors);
                match parse_element(target) {
                    Some(ElementId::Vertex(i)) if i < n => {
                        vertex_lists[i] = Some(set);
                    }
                    Some(ElementId::Edge(j)) if j < m => {
                        edge_lists[j] = Some(set);
                    }
                    _ => {
                        return Err(ParseError::new(
                            lineno,
                            format!("bad list target '{target}'"),
                        ))
                    }
                }
            }
            other => {
                return Err(ParseError::new(
                    lineno,
                    format!("unknown line type '{other}'"),
                ));
            }
        }
    }

    let (n, m) = header
        .ok_or_else(|| ParseError::new(text.lines().count().max(1), "missing problem line"))?;
    if edges.len() != m {
        return Err(ParseError::new(
            text.lines().count().max(1),
            format!("declared {m} edges, found {}", edges.len()),
        ));
    }
    let graph = Multigraph::new(n, &edges)
        .map_err(|e| ParseError::new(1, format!("invalid graph: {e}")))?;
    let lists = if saw_list_line {
        let vs: Result<Vec<ColorSet>, ParseError> = vertex_lists
            .into_iter()
            .enumerate()
            .map(|(i, l)| {
                l.ok_or_else(|| {
                    ParseError::new(
                        1,
                        format!("missing list for v{} while others have one", i + 1),
                    )
                })
            })
            .collect();
        let es: Result<Vec<ColorSet>, ParseError> = edge_lists
            .into_iter()
            .enumerate()
            .map(|(j, l)| {
                l.ok_or_else(|| {
                    ParseError::new(
                        1,
                        format!("missing list for e{} while others have one", j + 1),
                    )
                })
            })
            .collect();
        Some(ListAssignment::new(&graph, vs?, es?).map_err(|e| ParseError::new(1, e.to_string()))?)
    } else {
        None
    };
    Ok(InstanceFile { graph, lists, meta })
}

fn parse_field<T: std::str::FromStr>(
    lineno: usize,
    field: Option<&str>,
    what: &str,
) -> Result<T, ParseError> {
    field
        .ok_or_else(|| ParseError::new(lineno, format!("missing {what}")))?
        .parse()
        .map_err(|_| ParseError::new(lineno, format!("bad {what}")))
}

/// Parses `v<i>` / `e<j>` (1-indexed) into an element id.
fn parse_element(token: &str) -> Option<ElementId> {
    let (tag, digits) = token.split_at(1);
    let index: usize = digits.parse().ok()?;
    if index == 0 {
        return None;
    }
    match tag {
        "v" => Some(ElementId::Vertex(index - 1)),
        "e" => Some(ElementId::Edge(index - 1)),
        _ => None,
    }
}

/// One line per element, vertices then edges, ascending; uncolored elements
/// are omitted.
pub fn write_coloring(g: &Multigraph, coloring: &PartialTotalColoring) -> String {
    let mut out = String::new();
    for x in g.elements() {
        if let Some(c) = coloring.get(x) {
            match x {
                ElementId::Vertex(i) => writeln!(out, "v{} {c}", i + 1).unwrap(),
                ElementId::Edge(j) => writeln!(out, "e{} {c}", j + 1).unwrap(),
            }
        }
    }
    out
}

pub fn read_coloring(g: &Multigraph, text: &str) -> Result<PartialTotalColoring, ParseError> {
    let mut coloring = PartialTotalColoring::empty(g);
    for (lineno, raw) in text.lines().enumerate() {
        let lineno = lineno + 1;
        let line = raw.trim();
        if line.is_empty() || line.starts_with('c') {
            continue;
        }
        let mut fields = line.split_whitespace();
        let target = fields.next().unwrap();
        let element = parse_element(target)
            .filter(|&x| g.contains(x))
            .ok_or_else(|| ParseError::new(lineno, format!("bad element '{target}'")))?;
        let color: u32 = parse_field(lineno, fields.next(), "color")?;
        if coloring.is_colored(element) {
            return Err(ParseError::new(
                lineno,
                format!("duplicate line for '{target}'"),
            ));
        }
        coloring.set(element, color);
    }
    Ok(coloring)
}
