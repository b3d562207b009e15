//! Text formats: graph6 lines and `n m` edge lists.

use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::error::{Error, FormatError, Result};
use crate::graph::{Edge, Graph};

const GRAPH6_PREFIX: &str = ">>graph6<<";
const SMALL_MAX: usize = 62;
const MEDIUM_MAX: usize = 258_047;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Format {
    Graph6,
    Edgelist,
}

fn header_error(msg: impl Into<String>) -> Error {
    FormatError::Graph6Header(msg.into()).into()
}

fn sextets(bytes: &[u8], offset: usize) -> Result<Vec<u8>> {
    bytes
        .iter()
        .enumerate()
        .map(|(i, &b)| {
            if (63..=126).contains(&b) {
                Ok(b - 63)
            } else {
                Err(FormatError::Graph6Char { offset: offset + i, byte: b }.into())
            }
        })
        .collect()
}

fn read_header(bytes: &[u8]) -> Result<(usize, usize)> {
    // `len` header bytes in total, the size field being the last `digits` of them
    let take = |len: usize, digits: usize| -> Result<usize> {
        let field = bytes
            .get(len - digits..len)
            .ok_or_else(|| header_error(format!("size field needs {len} bytes")))?;
        Ok(sextets(field, len - digits)?
            .iter()
            .fold(0usize, |acc, &d| (acc << 6) | d as usize))
    };
    match bytes {
        [] => Err(header_error("empty line")),
        [126, 126, ..] => {
            let n = take(8, 6)?;
            if n <= MEDIUM_MAX {
                return Err(header_error(format!("8-byte size field holds {n}, which needs a shorter form")));
            }
            Ok((n, 8))
        }
        [126, ..] => {
            let n = take(4, 3)?;
            if n <= SMALL_MAX {
                return Err(header_error(format!("4-byte size field holds {n}, which needs a shorter form")));
            }
            Ok((n, 4))
        }
        [b, ..] if (63..126).contains(b) => Ok(((b - 63) as usize, 1)),
        [b, ..] => Err(header_error(format!("size byte {b:#04x} is outside '?'..'~'"))),
    }
}

/// Parses one graph6 line (an optional `>>graph6<<` prefix is accepted).
pub fn parse_graph6(line: &str) -> Result<Graph> {
    let line = line.trim_end_matches(['\n', '\r']);
    let body = line.strip_prefix(GRAPH6_PREFIX).unwrap_or(line);
    let bytes = body.as_bytes();
    let (n, header_len) = read_header(bytes)?;
    let bits = n
        .checked_mul(n.saturating_sub(1))
        .map(|x| x / 2)
        .ok_or_else(|| header_error(format!("{n} vertices is too many")))?;
    let expected = bits.div_ceil(6);
    let raw = &bytes[header_len..];
    let data = sextets(raw, header_len)?;
    if data.len() < expected {
        return Err(FormatError::Graph6Truncated { expected, found: data.len() }.into());
    }
    if data.len() > expected {
        let extra = String::from_utf8_lossy(&raw[expected..]).into_owned();
        return Err(FormatError::Graph6Trailing(extra).into());
    }
    let bit = |k: usize| (data[k / 6] >> (5 - k % 6)) & 1 == 1;
    if (bits..expected * 6).any(bit) {
        return Err(FormatError::Graph6Trailing("nonzero padding bits".into()).into());
    }
    let mut edges = Vec::new();
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            if bit(k) {
                edges.push(Edge::new(i, j));
            }
            k += 1;
        }
    }
    Ok(Graph::from_canonical(n, edges))
}

pub fn write_graph6(g: &Graph) -> String {
    let n = g.n();
    let mut out = String::new();
    let push = |out: &mut String, v: usize| out.push((v as u8 + 63) as char);
    if n <= SMALL_MAX {
        push(&mut out, n);
    } else {
        let width = if n <= MEDIUM_MAX { 3 } else { 6 };
        out.push('~');
        if width == 6 {
            out.push('~');
        }
        for i in (0..width).rev() {
            push(&mut out, (n >> (6 * i)) & 63);
        }
    }
    let mut acc = 0usize;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            acc = (acc << 1) | g.has_edge(i, j) as usize;
            filled += 1;
            if filled == 6 {
                push(&mut out, acc);
                acc = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        push(&mut out, acc << (6 - filled));
    }
    out
}

fn syntax(msg: impl Into<String>) -> Error {
    FormatError::EdgeListSyntax(msg.into()).into()
}

fn parse_pair(line: &str, lineno: usize) -> Result<(usize, usize)> {
    let mut parts = line.split_whitespace();
    let mut next = || -> Result<usize> {
        let tok = parts.next().ok_or_else(|| syntax(format!("line {lineno}: expected two integers")))?;
        tok.parse().map_err(|_| syntax(format!("line {lineno}: bad integer {tok:?}")))
    };
    let pair = (next()?, next()?);
    if parts.next().is_some() {
        return Err(syntax(format!("line {lineno}: expected two integers")));
    }
    Ok(pair)
}

fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'))
}

/// Parses `n m` followed by `m` lines `u v` (0-based). Blank lines and lines
/// starting with `#` are ignored.
pub fn parse_edge_list(text: &str) -> Result<Graph> {
    let mut lines = content_lines(text);
    let (lineno, header) = lines.next().ok_or_else(|| syntax("empty input"))?;
    let (n, m) = parse_pair(header, lineno)?;
    let pairs = lines.map(|(no, l)| parse_pair(l, no)).collect::<Result<Vec<_>>>()?;
    if pairs.len() != m {
        return Err(FormatError::EdgeListCount { declared: m, found: pairs.len() }.into());
    }
    Graph::from_edge_list(n, pairs)
}

pub fn write_edge_list(g: &Graph) -> String {
    let mut out = format!("{} {}\n", g.n(), g.edge_count());
    for e in g.edges() {
        writeln!(out, "{} {}", e.u(), e.v()).unwrap();
    }
    out
}

/// Edge-list input starts with a line of two integers; anything else is graph6.
pub fn detect_format(text: &str) -> Format {
    match content_lines(text).next() {
        Some((no, line)) if parse_pair(line, no).is_ok() => Format::Edgelist,
        _ => Format::Graph6,
    }
}

/// All graphs in `text`: one per non-blank graph6 line, or a single edge list.
pub fn read_graphs(text: &str, format: Option<Format>) -> Result<Vec<Graph>> {
    match format.unwrap_or_else(|| detect_format(text)) {
        Format::Edgelist => Ok(vec![parse_edge_list(text)?]),
        Format::Graph6 => text
            .lines()
            .map(str::trim)
            .filter(|l| !l.is_empty())
            .map(parse_graph6)
            .collect(),
    }
}

pub fn write_graph(g: &Graph, format: Format) -> String {
    match format {
        Format::Graph6 => write_graph6(g) + "\n",
        Format::Edgelist => write_edge_list(g),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::{complete, petersen};

    #[test]
    fn graph6_known_strings() {
        assert_eq!(write_graph6(&petersen()), "IheA@GUAo");
        assert_eq!(write_graph6(&complete(4).unwrap()), "C~");
        let g = parse_graph6("D??").unwrap();
        assert_eq!((g.n(), g.edge_count()), (5, 0));
        assert_eq!(parse_graph6(">>graph6<<C~").unwrap(), complete(4).unwrap());
        assert_eq!(write_graph6(&Graph::empty(0)), "?");
    }

    #[test]
    fn graph6_large_header() {
        let g = Graph::from_edge_list(100, [(0, 99), (3, 40)]).unwrap();
        let s = write_graph6(&g);
        assert!(s.starts_with("~?@c"));
        assert_eq!(parse_graph6(&s).unwrap(), g);
    }

    #[test]
    fn graph6_errors() {
        assert!(matches!(parse_graph6("not-graph6!"), Err(Error::Format(_))));
        assert!(matches!(parse_graph6(""), Err(Error::Format(FormatError::Graph6Header(_)))));
        assert!(matches!(parse_graph6("~?"), Err(Error::Format(FormatError::Graph6Header(_)))));
        assert!(matches!(parse_graph6("~??B"), Err(Error::Format(FormatError::Graph6Header(_)))));
        assert_eq!(
            parse_graph6("IheA@GU"),
            Err(FormatError::Graph6Truncated { expected: 8, found: 6 }.into())
        );
        assert!(matches!(parse_graph6("C~~"), Err(Error::Format(FormatError::Graph6Trailing(_)))));
        // K3 is "Bw"; "Bx" sets a padding bit
        assert_eq!(write_graph6(&complete(3).unwrap()), "Bw");
        assert!(matches!(parse_graph6("Bx"), Err(Error::Format(FormatError::Graph6Trailing(_)))));
        assert!(matches!(parse_graph6("B w"), Err(Error::Format(FormatError::Graph6Char { .. }))));
    }

    #[test]
    fn edge_lists() {
        let g = parse_edge_list("2 1\n0 1").unwrap();
        assert_eq!(g.edges(), &[Edge::new(0, 1)]);
        let p3 = parse_edge_list("3 2\n0 1\n1 2\n").unwrap();
        assert_eq!(p3.edge_count(), 2);
        assert_eq!(parse_edge_list("2 1\n0 0"), Err(Error::SelfLoop(0)));
        assert_eq!(parse_edge_list("2 1\n0 2"), Err(Error::VertexOutOfRange { vertex: 2, n: 2 }));
        assert_eq!(
            parse_edge_list("3 2\n0 1"),
            Err(FormatError::EdgeListCount { declared: 2, found: 1 }.into())
        );
        assert!(matches!(parse_edge_list("3 x\n"), Err(Error::Format(FormatError::EdgeListSyntax(_)))));
        assert_eq!(write_edge_list(&p3), "3 2\n0 1\n1 2\n");
    }

    #[test]
    fn detection() {
        assert_eq!(detect_format("# fixture\n3 2\n0 1\n1 2\n"), Format::Edgelist);
        assert_eq!(detect_format("IheA@GUAo\n"), Format::Graph6);
        let both = read_graphs("C~\nBw\n", None).unwrap();
        assert_eq!(both.len(), 2);
    }
}
