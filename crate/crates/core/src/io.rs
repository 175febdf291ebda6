//! Edge-list text format.
//!
//! One edge per line: two whitespace-separated non-negative integers.
//! Lines starting with `#` or `%` and blank lines are ignored; columns
//! past the second (weights, timestamps) are tolerated and skipped.

use std::io::{BufRead, Write};
use std::path::Path;

use crate::error::{Error, Result};
use crate::graph::Graph;

/// Parses raw edge pairs from a reader. Duplicate edges and self-loops are
/// kept verbatim; graph construction resolves them.
pub fn parse_edge_pairs<R: BufRead>(reader: R) -> Result<Vec<(u64, u64)>> {
    let mut pairs = Vec::new();
    for (idx, line) in reader.lines().enumerate() {
        let line = line?;
        let trimmed = line.trim();
        if trimmed.is_empty() || trimmed.starts_with('#') || trimmed.starts_with('%') {
            continue;
        }
        let mut tokens = trimmed.split_whitespace();
        let a = parse_token(tokens.next(), idx + 1)?;
        let b = parse_token(tokens.next(), idx + 1)?;
        pairs.push((a, b));
    }
    Ok(pairs)
}

fn parse_token(token: Option<&str>, line: usize) -> Result<u64> {
    let token = token.ok_or(Error::Parse {
        line,
        msg: "expected two node labels".into(),
    })?;
    token.parse::<u64>().map_err(|_| Error::Parse {
        line,
        msg: format!("`{token}` is not a non-negative integer"),
    })
}

/// Reads a graph from an edge-list reader.
pub fn read_edge_list<R: BufRead>(reader: R) -> Result<Graph> {
    Ok(Graph::from_edge_list(parse_edge_pairs(reader)?))
}

/// Reads a graph from an edge-list file.
pub fn read_edge_list_file<P: AsRef<Path>>(path: P) -> Result<Graph> {
    let file = std::fs::File::open(path)?;
    read_edge_list(std::io::BufReader::new(file))
}

/// Writes a graph in the edge-list format, one `a b` pair per line with
/// `a < b`, ascending. Deterministic for a given graph.
pub fn write_edge_list<W: Write>(graph: &Graph, mut writer: W) -> Result<()> {
    for (a, b) in graph.edge_labels() {
        writeln!(writer, "{a} {b}")?;
    }
    Ok(())
}

/// Writes a graph to an edge-list file.
pub fn write_edge_list_file<P: AsRef<Path>>(graph: &Graph, path: P) -> Result<()> {
    let file = std::fs::File::create(path)?;
    write_edge_list(graph, std::io::BufWriter::new(file))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_comments_blanks_and_extra_columns() {
        let text = "# header\n% more\n0 1\n\n1 2 0.5\n2 0\n";
        let g = read_edge_list(text.as_bytes()).unwrap();
        assert_eq!((g.n(), g.m()), (3, 3));
    }

    #[test]
    fn parse_error_names_line_number() {
        let text = "0 1\n1 x\n";
        match read_edge_list(text.as_bytes()) {
            Err(Error::Parse { line, .. }) => assert_eq!(line, 2),
            other => panic!("expected parse error, got {other:?}"),
        }
    }

    #[test]
    fn missing_second_token_is_an_error() {
        let text = "0 1\n7\n";
        match read_edge_list(text.as_bytes()) {
            Err(Error::Parse { line, .. }) => assert_eq!(line, 2),
            other => panic!("expected parse error, got {other:?}"),
        }
    }

    #[test]
    fn round_trip() {
        let g = Graph::from_edge_list([(5, 1), (1, 9), (9, 5), (3, 9)]);
        let mut buf = Vec::new();
        write_edge_list(&g, &mut buf).unwrap();
        let back = read_edge_list(buf.as_slice()).unwrap();
        assert_eq!(g, back);
    }
}
