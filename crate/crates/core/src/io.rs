//! Plain-text tree files.
//!
//! Two layouts are accepted. An edge list starts with a line holding `n`,
//! followed by one `u v` line per edge. A Prüfer file is a single line
//! `P: a1 a2 ... a_{n-2}`. Blank lines and anything after `#` are ignored.

use crate::error::{Error, Result};
use crate::graph::Tree;
use crate::random::prufer_decode;

/// Parses either tree layout.
///
/// ```
/// let t = arbor::io::parse_tree("# a path\n3\n1 2\n2 3\n").unwrap();
/// assert_eq!(t.n(), 3);
/// let s = arbor::io::parse_tree("P: 1 1").unwrap();
/// assert_eq!(s.degree(1), 3);
/// ```
pub fn parse_tree(text: &str) -> Result<Tree> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.split('#').next().unwrap_or("").trim()))
        .filter(|(_, l)| !l.is_empty());
    let (lineno, first) = lines.next().ok_or_else(|| Error::Parse("empty tree file".into()))?;
    if let Some(rest) = first.strip_prefix("P:") {
        if let Some((extra, _)) = lines.next() {
            return Err(Error::Parse(format!(
                "line {extra}: unexpected content after Prüfer line"
            )));
        }
        let code = parse_numbers(rest, lineno)?;
        return prufer_decode(&code, code.len() + 2);
    }
    let n = parse_numbers(first, lineno)?;
    let &[n] = n.as_slice() else {
        return Err(Error::Parse(format!("line {lineno}: expected a single vertex count")));
    };
    let mut edges = Vec::new();
    for (lineno, line) in lines {
        match parse_numbers(line, lineno)?.as_slice() {
            &[u, v] => edges.push((u, v)),
            _ => return Err(Error::Parse(format!("line {lineno}: expected `u v`"))),
        }
    }
    Tree::from_edges(n, &edges)
}

/// Whitespace-separated colors, one per vertex in order.
pub fn parse_colors(text: &str) -> Result<Vec<usize>> {
    let mut out = Vec::new();
    for (i, line) in text.lines().enumerate() {
        let line = line.split('#').next().unwrap_or("");
        out.extend(parse_numbers(line, i + 1)?);
    }
    Ok(out)
}

/// Edge-list layout, edges in lexicographic order.
pub fn format_tree(t: &Tree) -> String {
    let mut s = format!("{}\n", t.n());
    for (u, v) in t.edges() {
        s.push_str(&format!("{u} {v}\n"));
    }
    s
}

fn parse_numbers(s: &str, lineno: usize) -> Result<Vec<usize>> {
    s.split_whitespace()
        .map(|tok| {
            tok.parse::<usize>()
                .map_err(|_| Error::Parse(format!("line {lineno}: `{tok}` is not a non-negative integer")))
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::error::NotATreeReason;

    #[test]
    fn round_trip() {
        let t = Tree::double_star(2, 3);
        assert_eq!(parse_tree(&format_tree(&t)).unwrap(), t);
    }

    #[test]
    fn rejects_bad_input() {
        assert!(matches!(parse_tree(""), Err(Error::Parse(_))));
        assert!(matches!(parse_tree("3\n1 2 3\n"), Err(Error::Parse(_))));
        assert!(matches!(parse_tree("3\n1 x\n"), Err(Error::Parse(_))));
        assert_eq!(
            parse_tree("3\n1 2\n"),
            Err(Error::NotATree(NotATreeReason::Disconnected))
        );
        assert_eq!(parse_tree("P: 9"), Err(Error::BadEntry { entry: 9, n: 3 }));
    }

    #[test]
    fn single_vertex_and_colors() {
        assert_eq!(parse_tree("1\n").unwrap().n(), 1);
        assert_eq!(parse_colors("1 2\n3 # tail\n").unwrap(), vec![1, 2, 3]);
    }
}
