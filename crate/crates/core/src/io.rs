//! Text formats.
//!
//! Edge list: first non-comment line `n m`, then `m` lines `u v` (0-indexed,
//! whitespace separated). Everything after `#` on a line is ignored.
//!
//! Coloring: lines `u v color`. Header comments record how it was made:
//!
//! ```text
//! # method theorem3
//! # n 5
//! # dom 0 4
//! # inner 1
//! # colors 6
//! # cert 2 : 2 0;2 1 0;2 3 4
//! 0 1 3
//! ```
//!
//! With the `n` header the file is self-contained: its edges are the graph.
//! Certificate lines list the three paths of a vertex, vertices separated by
//! spaces and paths by `;`.
//!
//! Intervals: one `lo hi` pair per line.

use std::fmt::Write as _;

use crate::coloring::{EdgeColoring, SafetyCertificate};
use crate::error::{Error, Result};
use crate::graph::Graph;

fn parse_err(line: usize, msg: impl Into<String>) -> Error {
    Error::Parse {
        line,
        msg: msg.into(),
    }
}

/// Non-empty content lines with their 1-based line numbers, comments stripped.
fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines().enumerate().filter_map(|(i, l)| {
        let body = l.split('#').next().unwrap_or("").trim();
        (!body.is_empty()).then_some((i + 1, body))
    })
}

fn fields<T: std::str::FromStr>(line: usize, body: &str, count: usize, what: &str) -> Result<Vec<T>> {
    let parts: Vec<&str> = body.split_whitespace().collect();
    if parts.len() != count {
        return Err(parse_err(line, format!("expected {what}, got {:?}", body)));
    }
    parts
        .iter()
        .map(|p| p.parse().map_err(|_| parse_err(line, format!("expected {what}, got {:?}", body))))
        .collect()
}

pub fn parse_edge_list(text: &str) -> Result<Graph> {
    let mut lines = content_lines(text);
    let (hl, header) = lines.next().ok_or(parse_err(1, "missing \"n m\" header"))?;
    let nm: Vec<usize> = fields(hl, header, 2, "\"n m\" header")?;
    let (n, m) = (nm[0], nm[1]);
    let mut edges = Vec::with_capacity(m);
    let mut last = hl;
    for (line, body) in lines {
        let uv: Vec<usize> = fields(line, body, 2, "edge \"u v\"")?;
        if edges.len() == m {
            return Err(parse_err(line, format!("more than the declared {m} edges")));
        }
        let (u, v) = (uv[0], uv[1]);
        if u >= n || v >= n {
            return Err(parse_err(line, format!("vertex out of range 0..{n} in edge ({u}, {v})")));
        }
        if u == v {
            return Err(parse_err(line, format!("self-loop on vertex {u}")));
        }
        edges.push((u, v));
        last = line;
    }
    if edges.len() != m {
        return Err(parse_err(last, format!("header declares {m} edges, found {}", edges.len())));
    }
    Graph::new(n, &edges)
}

pub fn write_edge_list(g: &Graph) -> String {
    let mut out = format!("{} {}\n", g.n(), g.m());
    for &(u, v) in g.edges() {
        let _ = writeln!(out, "{u} {v}");
    }
    out
}

/// Metadata carried in a coloring file's header.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct ColoringHeader {
    pub method: Option<String>,
    pub n: Option<usize>,
    pub dom: Option<Vec<usize>>,
    /// Colors used inside the dominating set.
    pub inner: Option<usize>,
    pub colors: Option<usize>,
    /// Certificate paths by vertex.
    pub certificates: Vec<(usize, [Vec<usize>; 3])>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ColoringFile {
    pub header: ColoringHeader,
    /// `(u, v, color)` in file order.
    pub triples: Vec<(usize, usize, u32)>,
}

impl ColoringFile {
    pub fn to_coloring(&self, g: &Graph) -> Result<EdgeColoring> {
        EdgeColoring::from_triples(g, &self.triples)
    }

    /// The graph spanned by the listed edges on the `n` vertices of the header.
    pub fn graph(&self) -> Result<Graph> {
        let n = self
            .header
            .n
            .ok_or(parse_err(1, "coloring has no \"# n\" header; pass the graph separately"))?;
        let edges: Vec<(usize, usize)> = self.triples.iter().map(|&(u, v, _)| (u, v)).collect();
        Graph::new(n, &edges)
    }

    /// Certificates rebuilt with color sets taken from `c`.
    pub fn certificates(&self, g: &Graph, c: &EdgeColoring) -> Result<Vec<SafetyCertificate>> {
        self.header
            .certificates
            .iter()
            .map(|(v, paths)| {
                for p in paths {
                    if let Some(w) = p.windows(2).find(|w| !g.has_edge(w[0], w[1])) {
                        return Err(Error::InvalidParameters(format!(
                            "certificate of {v} uses non-edge ({}, {})",
                            w[0], w[1]
                        )));
                    }
                }
                Ok(SafetyCertificate::new(g, c, *v, paths.clone()))
            })
            .collect()
    }
}

fn parse_usizes(line: usize, s: &str) -> Result<Vec<usize>> {
    s.split_whitespace()
        .map(|x| x.parse().map_err(|_| parse_err(line, format!("expected a vertex id, got {x:?}"))))
        .collect()
}

fn parse_header_line(line: usize, body: &str, h: &mut ColoringHeader) -> Result<()> {
    let (key, rest) = body.split_once(char::is_whitespace).unwrap_or((body, ""));
    let rest = rest.trim();
    let number = |s: &str| s.parse::<usize>().map_err(|_| parse_err(line, format!("expected a number after {key:?}")));
    match key {
        "method" => h.method = Some(rest.to_string()),
        "n" => h.n = Some(number(rest)?),
        "dom" => h.dom = Some(parse_usizes(line, rest)?),
        "inner" => h.inner = Some(number(rest)?),
        "colors" => h.colors = Some(number(rest)?),
        "cert" => {
            let (v, paths) = rest
                .split_once(':')
                .ok_or(parse_err(line, "certificate needs \"v : p1;p2;p3\""))?;
            let v = number(v.trim())?;
            let paths: Vec<Vec<usize>> = paths.split(';').map(|p| parse_usizes(line, p)).collect::<Result<_>>()?;
            let paths: [Vec<usize>; 3] = paths
                .try_into()
                .map_err(|_| parse_err(line, "certificate needs exactly three paths"))?;
            h.certificates.push((v, paths));
        }
        // free-form comments
        _ => {}
    }
    Ok(())
}

pub fn parse_coloring(text: &str) -> Result<ColoringFile> {
    let mut header = ColoringHeader::default();
    let mut triples = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        let trimmed = raw.trim();
        if let Some(comment) = trimmed.strip_prefix('#') {
            parse_header_line(line, comment.trim(), &mut header)?;
            continue;
        }
        let body = trimmed.split('#').next().unwrap_or("").trim();
        if body.is_empty() {
            continue;
        }
        let parts: Vec<&str> = body.split_whitespace().collect();
        let bad = || parse_err(line, format!("expected \"u v color\", got {body:?}"));
        if parts.len() != 3 {
            return Err(bad());
        }
        let u = parts[0].parse().map_err(|_| bad())?;
        let v = parts[1].parse().map_err(|_| bad())?;
        let c: u32 = parts[2].parse().map_err(|_| bad())?;
        if c == 0 {
            return Err(parse_err(line, "colors must be positive"));
        }
        triples.push((u, v, c));
    }
    Ok(ColoringFile { header, triples })
}

fn join(xs: &[usize]) -> String {
    xs.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(" ")
}

/// Writes a coloring with the given header; certificate color sets are not
/// stored since they follow from the coloring.
pub fn write_coloring(g: &Graph, c: &EdgeColoring, header: &ColoringHeader) -> String {
    let mut out = String::new();
    if let Some(m) = &header.method {
        let _ = writeln!(out, "# method {m}");
    }
    if let Some(n) = header.n {
        let _ = writeln!(out, "# n {n}");
    }
    if let Some(d) = &header.dom {
        let _ = writeln!(out, "# dom {}", join(d));
    }
    if let Some(d) = header.inner {
        let _ = writeln!(out, "# inner {d}");
    }
    let _ = writeln!(out, "# colors {}", header.colors.unwrap_or_else(|| c.num_colors()));
    for (v, paths) in &header.certificates {
        let ps: Vec<String> = paths.iter().map(|p| join(p)).collect();
        let _ = writeln!(out, "# cert {v} : {}", ps.join(";"));
    }
    for (e, &(u, v)) in g.edges().iter().enumerate() {
        let _ = writeln!(out, "{u} {v} {}", c.color(e));
    }
    out
}

pub fn parse_intervals(text: &str) -> Result<Vec<(f64, f64)>> {
    content_lines(text)
        .map(|(line, body)| {
            let v: Vec<f64> = fields(line, body, 2, "interval \"lo hi\"")?;
            if !(v[0] <= v[1]) {
                return Err(parse_err(line, format!("interval end {} is before start {}", v[1], v[0])));
            }
            Ok((v[0], v[1]))
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn edge_list_round_trip() {
        let text = "# triangle\n3 3\n0 1\n2 1 # reversed\n\n0 2\n";
        let g = parse_edge_list(text).unwrap();
        assert_eq!(g.edges(), &[(0, 1), (0, 2), (1, 2)]);
        assert_eq!(parse_edge_list(&write_edge_list(&g)).unwrap(), g);
    }

    #[test]
    fn edge_list_errors_name_the_line() {
        let e = parse_edge_list("3 2\n0 1\n1 x\n").unwrap_err();
        assert!(matches!(e, Error::Parse { line: 3, .. }));
        let e = parse_edge_list("3 1\n0 5\n").unwrap_err();
        assert!(matches!(e, Error::Parse { line: 2, .. }));
        let e = parse_edge_list("3 2\n0 1\n").unwrap_err();
        assert!(matches!(e, Error::Parse { line: 2, .. }));
        assert!(matches!(parse_edge_list("# nothing\n"), Err(Error::Parse { .. })));
        assert!(matches!(parse_edge_list("2 1\n1 1\n"), Err(Error::Parse { line: 2, .. })));
    }

    #[test]
    fn coloring_round_trip() {
        let g = Graph::new(3, &[(0, 1), (1, 2), (0, 2)]).unwrap();
        let c = EdgeColoring::new(&g, vec![1, 2, 3]).unwrap();
        let header = ColoringHeader {
            method: Some("spanning".into()),
            n: Some(3),
            dom: Some(vec![0, 1]),
            inner: Some(1),
            colors: Some(3),
            certificates: vec![(2, [vec![2, 0], vec![2, 1], vec![2, 1, 0]])],
        };
        let text = write_coloring(&g, &c, &header);
        let parsed = parse_coloring(&text).unwrap();
        assert_eq!(parsed.header, header);
        assert_eq!(parsed.to_coloring(&g).unwrap(), c);
        assert_eq!(parsed.graph().unwrap(), g);
        let certs = parsed.certificates(&g, &c).unwrap();
        assert_eq!(certs[0].color_sets, [vec![2], vec![3], vec![1, 3]]);
    }

    #[test]
    fn coloring_errors() {
        assert!(matches!(parse_coloring("0 1\n"), Err(Error::Parse { line: 1, .. })));
        assert!(matches!(parse_coloring("# x\n0 1 0\n"), Err(Error::Parse { line: 2, .. })));
        assert!(matches!(parse_coloring("# cert 1 : 1 0;1 2\n"), Err(Error::Parse { line: 1, .. })));
        let g = Graph::new(3, &[(0, 1), (1, 2)]).unwrap();
        let f = parse_coloring("0 1 1\n").unwrap();
        assert_eq!(f.to_coloring(&g).unwrap_err(), Error::UncoveredEdge(1, 2));
    }

    #[test]
    fn intervals() {
        let iv = parse_intervals("0 2\n1.5 3 # overlap\n").unwrap();
        assert_eq!(iv, vec![(0.0, 2.0), (1.5, 3.0)]);
        assert!(matches!(parse_intervals("3 1\n"), Err(Error::Parse { line: 1, .. })));
    }
}
