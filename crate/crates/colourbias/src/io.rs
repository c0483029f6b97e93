//! Edge-list text format: an `n m` header, then `m` lines `u v [colour]` in
//! lexicographic order. Blank lines and `#` comments are ignored on input.

use std::fmt::Write as _;
use std::path::Path;

use anyhow::{bail, Context, Result};
use colourbias_core::graph::GraphBuilder;
use colourbias_core::{Colour, Edge, EdgeColouring, Graph, Matching};

#[derive(Debug, Clone, PartialEq)]
pub struct EdgeList {
    pub graph: Graph,
    pub colouring: Option<EdgeColouring>,
}

fn number<T: std::str::FromStr>(field: &str, line: usize) -> Result<T> {
    field.parse().ok().with_context(|| format!("line {line}: `{field}` is not a valid number"))
}

/// Parses the edge-list format. Either every edge carries a colour or none
/// does; `r` defaults to the largest colour seen.
pub fn parse_edge_list(text: &str, r: Option<Colour>) -> Result<EdgeList> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.split('#').next().unwrap_or("").trim()))
        .filter(|(_, l)| !l.is_empty());
    let Some((hl, header)) = lines.next() else { bail!("missing `n m` header") };
    let head: Vec<&str> = header.split_whitespace().collect();
    if head.len() != 2 {
        bail!("line {hl}: header must be `n m`");
    }
    let (n, m): (usize, usize) = (number(head[0], hl)?, number(head[1], hl)?);
    let mut builder = GraphBuilder::new(n);
    let mut coloured: Option<bool> = None;
    let mut colours = Vec::new();
    let mut count = 0;
    for (ln, line) in lines {
        let f: Vec<&str> = line.split_whitespace().collect();
        if !(2..=3).contains(&f.len()) {
            bail!("line {ln}: expected `u v [colour]`");
        }
        let (u, v): (usize, usize) = (number(f[0], ln)?, number(f[1], ln)?);
        let has = f.len() == 3;
        if *coloured.get_or_insert(has) != has {
            bail!("line {ln}: either all edges carry a colour or none do");
        }
        builder.add_edge(u, v).with_context(|| format!("line {ln}"))?;
        if has {
            colours.push((Edge::new(u, v), number::<Colour>(f[2], ln)?));
        }
        count += 1;
    }
    let graph = builder.build();
    if count != m || graph.edge_count() != m {
        bail!("header promises {m} edges, found {count} lines and {} distinct edges", graph.edge_count());
    }
    let colouring = if coloured == Some(true) {
        let r = r.unwrap_or_else(|| colours.iter().map(|&(_, c)| c).max().unwrap_or(1));
        let mut c = EdgeColouring::new(r);
        for (e, col) in colours {
            c.set(e, col).with_context(|| format!("edge ({}, {})", e.u(), e.v()))?;
        }
        Some(c)
    } else {
        None
    };
    Ok(EdgeList { graph, colouring })
}

pub fn read_edge_list(path: &Path) -> Result<EdgeList> {
    let text = std::fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    parse_edge_list(&text, None).with_context(|| format!("parsing {}", path.display()))
}

/// Formats `g`, adding a colour column when `c` is given.
pub fn format_edge_list(g: &Graph, c: Option<&EdgeColouring>) -> Result<String> {
    let mut out = format!("{} {}\n", g.n(), g.edge_count());
    for e in g.edges() {
        match c {
            Some(c) => {
                let col = c.colour_of(e.u(), e.v()).with_context(|| format!("edge ({}, {}) has no colour", e.u(), e.v()))?;
                writeln!(out, "{} {} {col}", e.u(), e.v())?;
            }
            None => writeln!(out, "{} {}", e.u(), e.v())?,
        }
    }
    Ok(out)
}

pub fn write_edge_list(path: &Path, g: &Graph, c: Option<&EdgeColouring>) -> Result<()> {
    std::fs::write(path, format_edge_list(g, c)?).with_context(|| format!("writing {}", path.display()))
}

/// Reads a matching stored as an edge list on `n` vertices.
pub fn read_matching(path: &Path, n: usize) -> Result<Matching> {
    let list = read_edge_list(path)?;
    if list.graph.n() != n {
        bail!("matching file has n = {}, graph has n = {n}", list.graph.n());
    }
    Ok(Matching::new(n, list.graph.edges())?)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn round_trip_with_colours() {
        let g = Graph::cycle(5);
        let c = EdgeColouring::from_fn(&g, 3, |e| 1 + e.u() % 3).unwrap();
        let text = format_edge_list(&g, Some(&c)).unwrap();
        assert!(text.starts_with("5 5\n0 1 1\n0 4 1\n1 2 2\n"));
        let back = parse_edge_list(&text, None).unwrap();
        assert_eq!(back.graph, g);
        assert_eq!(back.colouring.unwrap(), c);
    }

    #[test]
    fn rejects_bad_input() {
        assert!(parse_edge_list("3 2\n0 1\n1 2 1\n", None).is_err());
        assert!(parse_edge_list("3 2\n0 1\n", None).is_err());
        assert!(parse_edge_list("3 1\n0 3\n", None).is_err());
        assert!(parse_edge_list("3 2\n0 1\n1 0\n", None).is_err());
        assert!(parse_edge_list("", None).is_err());
        let ok = parse_edge_list("# triangle\n3 3\n0 1\n\n1 2 # spine\n0 2\n", None).unwrap();
        assert_eq!(ok.graph, Graph::complete(3));
    }
}
