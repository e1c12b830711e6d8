//! Text formats for graphs, colorings and search frontiers, plus Graphviz
//! export.
//!
//! A graph document lists its header fields, then one `x y` pair per line:
//!
//! ```text
//! # comments run to the end of the line
//! x_count 2
//! y_count 2
//! multi false
//! edges 3
//! 0 0
//! 0 1
//! 1 1
//! ```
//!
//! `multi` is optional and defaults to `false`. A coloring document gives the
//! largest color and then every edge color in edge order:
//!
//! ```text
//! max_color 2
//! colors 1 2 1
//! ```

use std::fmt::Write as _;

use thiserror::Error;

use crate::graph::{BipartiteGraph, EdgeColoring};
use crate::oracle::Frontier;

/// First line of every frontier file.
pub const FRONTIER_MAGIC: &str = "xint-frontier v1";

/// A malformed document. Lines and columns count from 1.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("line {line}, column {column}: {message}")]
pub struct ParseError {
    pub line: usize,
    pub column: usize,
    pub message: String,
}

#[derive(Debug, Clone, Copy)]
struct Token<'a> {
    text: &'a str,
    line: usize,
    column: usize,
}

impl Token<'_> {
    fn error(&self, message: impl Into<String>) -> ParseError {
        ParseError {
            line: self.line,
            column: self.column,
            message: message.into(),
        }
    }

    fn number<T: std::str::FromStr>(&self) -> Result<T, ParseError> {
        if !self.text.bytes().all(|b| b.is_ascii_digit()) {
            return Err(self.error(format!("expected a base-10 integer, found `{}`", self.text)));
        }
        self.text
            .parse()
            .map_err(|_| self.error(format!("integer `{}` out of range", self.text)))
    }
}

/// Non-empty lines with comments removed, split into tokens.
fn lines(text: &str) -> Vec<Vec<Token<'_>>> {
    let mut out = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let body = raw.split('#').next().unwrap_or("");
        let mut tokens = Vec::new();
        let mut start = None;
        for (pos, ch) in body.char_indices().chain([(body.len(), ' ')]) {
            match (ch.is_whitespace(), start) {
                (false, None) => start = Some(pos),
                (true, Some(s)) => {
                    tokens.push(Token {
                        text: &body[s..pos],
                        line: i + 1,
                        column: body[..s].chars().count() + 1,
                    });
                    start = None;
                }
                _ => {}
            }
        }
        if !tokens.is_empty() {
            out.push(tokens);
        }
    }
    out
}

struct Cursor<'a> {
    lines: std::vec::IntoIter<Vec<Token<'a>>>,
    last_line: usize,
}

impl<'a> Cursor<'a> {
    fn new(text: &'a str) -> Self {
        let lines = lines(text);
        let last_line = text.lines().count().max(1);
        Self {
            lines: lines.into_iter(),
            last_line,
        }
    }

    fn next_line(&mut self, expecting: &str) -> Result<Vec<Token<'a>>, ParseError> {
        self.lines.next().ok_or_else(|| ParseError {
            line: self.last_line,
            column: 1,
            message: format!("unexpected end of input, expected {expecting}"),
        })
    }

    fn peek_key(&self) -> Option<&'a str> {
        self.lines.as_slice().first().map(|l| l[0].text)
    }

    /// A `key value` line.
    fn field(&mut self, key: &str) -> Result<Token<'a>, ParseError> {
        let line = self.next_line(&format!("`{key}`"))?;
        if line[0].text != key {
            return Err(line[0].error(format!("expected `{key}`, found `{}`", line[0].text)));
        }
        match line.as_slice() {
            [_, value] => Ok(*value),
            [k] => Err(k.error(format!("`{key}` needs a value"))),
            [_, _, extra, ..] => Err(extra.error("unexpected trailing token")),
            [] => unreachable!(),
        }
    }

    fn finish(&mut self) -> Result<(), ParseError> {
        match self.lines.next() {
            Some(line) => Err(line[0].error("unexpected content after the document")),
            None => Ok(()),
        }
    }
}

/// Parses a graph document.
pub fn parse_graph(text: &str) -> Result<BipartiteGraph, ParseError> {
    let mut cur = Cursor::new(text);
    let x_count: usize = cur.field("x_count")?.number()?;
    let y_count: usize = cur.field("y_count")?.number()?;
    let multi = if cur.peek_key() == Some("multi") {
        let v = cur.field("multi")?;
        match v.text {
            "true" => true,
            "false" => false,
            other => return Err(v.error(format!("expected `true` or `false`, found `{other}`"))),
        }
    } else {
        false
    };
    let count_token = cur.field("edges")?;
    let count: usize = count_token.number()?;
    let mut edges = Vec::with_capacity(count.min(1 << 20));
    for _ in 0..count {
        let line = cur.next_line("an edge `x y`")?;
        let [x, y] = line.as_slice() else {
            let at = line.get(2).unwrap_or(&line[0]);
            return Err(at.error("an edge line holds exactly two indices"));
        };
        let (xi, yi): (usize, usize) = (x.number()?, y.number()?);
        if xi >= x_count {
            return Err(x.error(format!("X index {xi} out of range (x_count {x_count})")));
        }
        if yi >= y_count {
            return Err(y.error(format!("Y index {yi} out of range (y_count {y_count})")));
        }
        if !multi && edges.contains(&(xi, yi)) {
            return Err(x.error(format!("duplicate edge ({xi}, {yi}) without `multi true`")));
        }
        edges.push((xi, yi));
    }
    cur.finish()?;
    BipartiteGraph::new(x_count, y_count, edges, multi)
        .map_err(|e| count_token.error(e.to_string()))
}

/// Writes a graph document; [`parse_graph`] reads it back unchanged.
pub fn emit_graph(g: &BipartiteGraph) -> String {
    let mut out = format!(
        "x_count {}\ny_count {}\nmulti {}\nedges {}\n",
        g.x_count(),
        g.y_count(),
        g.allow_multi(),
        g.edge_count()
    );
    for &(x, y) in g.edges() {
        let _ = writeln!(out, "{x} {y}");
    }
    out
}

/// Parses a coloring document. `max_color` must equal the largest listed
/// color (0 for an empty list).
pub fn parse_coloring(text: &str) -> Result<EdgeColoring, ParseError> {
    let mut cur = Cursor::new(text);
    let max: u32 = cur.field("max_color")?.number()?;
    let line = cur.next_line("`colors`")?;
    if line[0].text != "colors" {
        return Err(line[0].error(format!("expected `colors`, found `{}`", line[0].text)));
    }
    let mut colors = Vec::with_capacity(line.len() - 1);
    for t in &line[1..] {
        let c: u32 = t.number()?;
        if c == 0 {
            return Err(t.error("colors are positive integers"));
        }
        colors.push(c);
    }
    cur.finish()?;
    let actual = colors.iter().copied().max().unwrap_or(0);
    if actual != max {
        return Err(line[0].error(format!(
            "max_color says {max} but the largest color is {actual}"
        )));
    }
    Ok(EdgeColoring::new(colors).expect("colors checked positive"))
}

/// Writes a coloring document.
pub fn emit_coloring(c: &EdgeColoring) -> String {
    let mut out = format!("max_color {}\ncolors", c.max_color());
    for col in c.colors() {
        let _ = write!(out, " {col}");
    }
    out.push('\n');
    out
}

/// Writes a frontier file: the magic line, then the frontier as JSON.
pub fn emit_frontier(f: &Frontier) -> String {
    let json = serde_json::to_string_pretty(f).expect("frontier serializes");
    format!("{FRONTIER_MAGIC}\n{json}\n")
}

/// Reads a frontier file written by [`emit_frontier`].
pub fn parse_frontier(text: &str) -> Result<Frontier, ParseError> {
    let (first, rest) = text.split_once('\n').unwrap_or((text, ""));
    if first.trim_end() != FRONTIER_MAGIC {
        return Err(ParseError {
            line: 1,
            column: 1,
            message: format!("expected header `{FRONTIER_MAGIC}`"),
        });
    }
    serde_json::from_str(rest).map_err(|e| ParseError {
        line: e.line() + 1,
        column: e.column().max(1),
        message: e.to_string(),
    })
}

/// Graphviz rendering with X on the left and Y on the right. With a
/// coloring, edges carry their color as label and a stroke from a 12-color
/// scheme, dashed from the thirteenth color on.
pub fn emit_dot(g: &BipartiteGraph, coloring: Option<&EdgeColoring>) -> String {
    let mut out = String::from("graph bipartite {\n  rankdir=LR;\n  node [shape=circle];\n");
    for (side, n) in [('x', g.x_count()), ('y', g.y_count())] {
        let _ = write!(out, "  {{ rank=same;");
        for v in 0..n {
            let _ = write!(out, " {side}{v};");
        }
        out.push_str(" }\n");
    }
    for (i, &(x, y)) in g.edges().iter().enumerate() {
        match coloring.map(|c| c.colors()[i]) {
            Some(c) => {
                let style = if c > 12 { "dashed" } else { "solid" };
                let _ = writeln!(
                    out,
                    "  x{x} -- y{y} [label=\"{c}\", colorscheme=set312, color={}, style={style}];",
                    (c - 1) % 12 + 1
                );
            }
            None => {
                let _ = writeln!(out, "  x{x} -- y{y};");
            }
        }
    }
    out.push_str("}\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::{complete_bipartite, random_multigraph};
    use crate::oracle::{GeneratorSpec, SearchReport};

    #[test]
    fn one_edge_document() {
        let g = parse_graph("x_count 1\ny_count 1\nedges 1\n0 0\n").unwrap();
        assert_eq!(g.edges(), &[(0, 0)]);
        assert!(!g.allow_multi());
    }

    #[test]
    fn complete_graph_round_trip() {
        let g = complete_bipartite(3, 3);
        let text = emit_graph(&g);
        assert_eq!(parse_graph(&text).unwrap(), g);
        assert_eq!(emit_graph(&parse_graph(&text).unwrap()), text);
    }

    #[test]
    fn multigraph_round_trip() {
        let g = random_multigraph(4, 4, 3, 12, 2);
        assert_eq!(parse_graph(&emit_graph(&g)).unwrap(), g);
    }

    #[test]
    fn comments_and_blank_lines() {
        let text = "# a path\n\nx_count 2  # two\ny_count 1\n\nedges 2\n0 0\n  1 0 # last\n";
        let g = parse_graph(text).unwrap();
        assert_eq!(g.edges(), &[(0, 0), (1, 0)]);
    }

    #[test]
    fn malformed_index_is_located() {
        let err = parse_graph("x_count 2\ny_count 2\nedges 1\n0 7\n").unwrap_err();
        assert_eq!((err.line, err.column), (4, 3));
        let err = parse_graph("x_count 2\ny_count 2\nedges 1\n0 -1\n").unwrap_err();
        assert_eq!((err.line, err.column), (4, 3));
        let err = parse_graph("x_count 2\ny_count two\n").unwrap_err();
        assert_eq!((err.line, err.column), (2, 9));
    }

    #[test]
    fn structural_errors() {
        assert!(parse_graph("").is_err());
        assert!(parse_graph("x_count 1\ny_count 1\nedges 2\n0 0\n").is_err());
        assert!(parse_graph("x_count 1\ny_count 1\nedges 2\n0 0\n0 0\n").is_err());
        assert!(parse_graph("x_count 1\ny_count 1\nmulti yes\nedges 0\n").is_err());
        assert!(parse_graph("x_count 1\ny_count 1\nedges 0\nextra\n").is_err());
        assert!(parse_graph("x_count 1\ny_count 1\nedges 1\n0 0 0\n").is_err());
    }

    #[test]
    fn coloring_round_trip() {
        let c = EdgeColoring::new(vec![3, 1, 2]).unwrap();
        let text = emit_coloring(&c);
        assert_eq!(text, "max_color 3\ncolors 3 1 2\n");
        assert_eq!(parse_coloring(&text).unwrap(), c);
        let empty = EdgeColoring::new(Vec::new()).unwrap();
        assert_eq!(parse_coloring(&emit_coloring(&empty)).unwrap(), empty);
    }

    #[test]
    fn coloring_errors() {
        assert!(parse_coloring("max_color 2\ncolors 1 3\n").is_err());
        let err = parse_coloring("max_color 1\ncolors 1 0\n").unwrap_err();
        assert_eq!((err.line, err.column), (2, 10));
    }

    #[test]
    fn frontier_round_trip() {
        let f = Frontier {
            spec: GeneratorSpec::Trees {
                vertices: 6,
                count: 3,
                seed: 9,
            },
            next_index: 1,
            report: SearchReport::default(),
        };
        let text = emit_frontier(&f);
        assert!(text.starts_with(FRONTIER_MAGIC));
        assert_eq!(parse_frontier(&text).unwrap(), f);
        assert_eq!(parse_frontier("xint-frontier v0\n{}").unwrap_err().line, 1);
    }

    #[test]
    fn dot_documents() {
        let empty = emit_dot(&BipartiteGraph::empty(0, 0), None);
        assert!(empty.starts_with("graph bipartite {") && empty.ends_with("}\n"));

        let c4 = BipartiteGraph::new(2, 2, vec![(0, 0), (0, 1), (1, 1), (1, 0)], false).unwrap();
        let colors = EdgeColoring::new(vec![1, 2, 1, 2]).unwrap();
        let dot = emit_dot(&c4, Some(&colors));
        let styles: std::collections::BTreeSet<&str> = dot
            .lines()
            .filter(|l| l.contains("--"))
            .map(|l| &l[l.find('[').unwrap()..])
            .collect();
        assert_eq!(styles.len(), 2);

        let double = BipartiteGraph::new(1, 1, vec![(0, 0), (0, 0)], true).unwrap();
        let dot = emit_dot(&double, None);
        assert_eq!(dot.matches("x0 -- y0").count(), 2);
    }
}
