//! Plain-text facet files.
//!
//! ```text
//! # comment
//! !spec X=1,2,3 Y=1,2,3 alpha=1:1,2:2,3:3
//! 1,2 2,3
//! 1,3 3,2
//! ```
//!
//! Each non-comment line is one facet of whitespace-separated `ROW,COL`
//! squares. A blank line is the empty facet. The optional `!spec` header
//! records `X`, `Y` and `α` as `col:row` pairs; the board is then
//! `(X ∪ rows used) × (Y ∪ columns used)`.

use std::collections::BTreeSet;
use std::fmt::Write as _;

use crate::boards::{Bijection, BoardSpec, Square};
use crate::complexes::{SimplicialComplex, Vertex};
use crate::error::{Error, Result};

/// Contents of a facet file.
#[derive(Clone, Debug)]
pub struct FacetFile {
    pub complex: SimplicialComplex,
    pub spec: Option<BoardSpec>,
}

struct Header {
    x: Vec<i32>,
    y: Vec<i32>,
    alpha: Vec<(i32, i32)>,
}

fn parse_err(line: usize, message: impl Into<String>) -> Error {
    Error::Parse {
        line,
        message: message.into(),
    }
}

fn parse_int(s: &str, line: usize) -> Result<i32> {
    s.trim()
        .parse()
        .map_err(|_| parse_err(line, format!("`{s}` is not an integer")))
}

fn parse_list(s: &str, line: usize) -> Result<Vec<i32>> {
    if s.is_empty() {
        return Ok(Vec::new());
    }
    s.split(',').map(|t| parse_int(t, line)).collect()
}

fn parse_square(tok: &str, line: usize) -> Result<Square> {
    let (r, c) = tok
        .split_once(',')
        .ok_or_else(|| parse_err(line, format!("`{tok}` is not ROW,COL")))?;
    Ok(Square::new(parse_int(r, line)?, parse_int(c, line)?))
}

fn parse_header(rest: &str, line: usize) -> Result<Header> {
    let mut header = Header {
        x: Vec::new(),
        y: Vec::new(),
        alpha: Vec::new(),
    };
    let mut seen = BTreeSet::new();
    for field in rest.split_whitespace() {
        let (key, value) = field
            .split_once('=')
            .ok_or_else(|| parse_err(line, format!("`{field}` is not KEY=VALUE")))?;
        if !seen.insert(key) {
            return Err(parse_err(line, format!("`{key}` given twice")));
        }
        match key {
            "X" => header.x = parse_list(value, line)?,
            "Y" => header.y = parse_list(value, line)?,
            "alpha" => {
                for pair in value.split(',').filter(|p| !p.is_empty()) {
                    let (c, r) = pair
                        .split_once(':')
                        .ok_or_else(|| parse_err(line, format!("`{pair}` is not col:row")))?;
                    header
                        .alpha
                        .push((parse_int(c, line)?, parse_int(r, line)?));
                }
            }
            _ => return Err(parse_err(line, format!("unknown header key `{key}`"))),
        }
    }
    Ok(header)
}

/// Parses a facet file.
pub fn read_facets(text: &str) -> Result<FacetFile> {
    let mut facets: Vec<Vec<Vertex>> = Vec::new();
    let mut header: Option<(Header, usize)> = None;
    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        let s = raw.trim();
        if s.starts_with('#') {
            continue;
        }
        if let Some(rest) = s.strip_prefix("!spec") {
            if header.is_some() {
                return Err(parse_err(line, "second !spec header"));
            }
            header = Some((parse_header(rest, line)?, line));
            continue;
        }
        let squares: Vec<Square> = s
            .split_whitespace()
            .map(|t| parse_square(t, line))
            .collect::<Result<_>>()?;
        let distinct: BTreeSet<Square> = squares.iter().copied().collect();
        if distinct.len() != squares.len() {
            return Err(parse_err(line, "repeated square in a facet"));
        }
        facets.push(squares.into_iter().map(Vertex::from).collect());
    }
    let complex = SimplicialComplex::from_facets(facets);
    let spec = match header {
        None => None,
        Some((h, line)) => {
            let mut rows: BTreeSet<i32> = h.x.iter().copied().collect();
            let mut cols: BTreeSet<i32> = h.y.iter().copied().collect();
            for v in complex.vertices() {
                let sq = v.as_square().expect("parsed vertices are squares");
                rows.insert(sq.row);
                cols.insert(sq.col);
            }
            let board = rows
                .iter()
                .flat_map(|&r| cols.iter().map(move |&c| Square::new(r, c)));
            let alpha = Bijection::new(h.alpha).map_err(|e| parse_err(line, e.to_string()))?;
            let spec = BoardSpec::new(board, h.x, h.y, alpha)
                .map_err(|e| parse_err(line, e.to_string()))?;
            for v in complex.vertices() {
                let sq = v.as_square().expect("parsed vertices are squares");
                if spec.forbidden_squares().any(|f| f == sq) {
                    return Err(parse_err(
                        line,
                        format!("vertex {sq} is a loop under alpha"),
                    ));
                }
            }
            Some(spec)
        }
    };
    Ok(FacetFile { complex, spec })
}

fn join_ints(xs: impl Iterator<Item = i32>) -> String {
    xs.map(|x| x.to_string()).collect::<Vec<_>>().join(",")
}

/// Serializes a complex on squares, with the spec header when given. The
/// void complex produces no facet lines; `{∅}` produces one blank line.
pub fn write_facets(cx: &SimplicialComplex, spec: Option<&BoardSpec>) -> Result<String> {
    let mut out = String::new();
    if let Some(spec) = spec {
        let alpha: Vec<String> = spec
            .alpha()
            .pairs()
            .map(|(c, r)| format!("{c}:{r}"))
            .collect();
        writeln!(
            out,
            "!spec X={} Y={} alpha={}",
            join_ints(spec.x_rows().iter().copied()),
            join_ints(spec.y_cols().iter().copied()),
            alpha.join(",")
        )
        .expect("writing to a String");
    }
    for facet in cx.facets() {
        let tokens: Vec<String> = facet
            .iter()
            .map(|v| {
                v.as_square()
                    .map(|sq| format!("{},{}", sq.row, sq.col))
                    .ok_or_else(|| Error::Invalid(format!("vertex {v} is not a square")))
            })
            .collect::<Result<_>>()?;
        writeln!(out, "{}", tokens.join(" ")).expect("writing to a String");
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::boards::make_spec;
    use crate::builders::{omega, omega_n};

    #[test]
    fn round_trip_with_spec() {
        for spec in [make_spec(3, 0, 0), make_spec(2, 2, 0), make_spec(2, 1, 1)] {
            let cx = omega(&spec);
            let text = write_facets(&cx, Some(&spec)).unwrap();
            let back = read_facets(&text).unwrap();
            assert_eq!(back.complex, cx);
            assert_eq!(back.spec.as_ref(), Some(&spec));
        }
    }

    #[test]
    fn exact_layout() {
        let text = write_facets(&omega_n(2), Some(&make_spec(2, 0, 0))).unwrap();
        assert_eq!(text, "!spec X=1,2 Y=1,2 alpha=1:1,2:2\n1,2\n2,1\n");
    }

    #[test]
    fn comments_and_whitespace() {
        let f = read_facets("# two edges\n  1,2   2,3\n\t# indented comment\n3,1 1,3 \n").unwrap();
        assert_eq!(f.complex.f_vector(), vec![4, 2]);
        assert!(f.spec.is_none());
    }

    #[test]
    fn empty_and_void() {
        let void = read_facets("# nothing\n").unwrap().complex;
        assert!(void.is_void());
        let empty = read_facets("\n").unwrap().complex;
        assert_eq!(empty, SimplicialComplex::empty_face());
        assert_eq!(write_facets(&empty, None).unwrap(), "\n");
        assert_eq!(write_facets(&void, None).unwrap(), "");
    }

    #[test]
    fn rejects_malformed() {
        for bad in [
            "1;2",
            "1,x",
            "1,2 1,2",
            "!spec X=1 Y=1 beta=1:1",
            "!spec X=1 Y=1 alpha=1:1\n1,1",
        ] {
            assert!(
                matches!(read_facets(bad), Err(Error::Parse { .. })),
                "{bad}"
            );
        }
        let labels = SimplicialComplex::simplex([Vertex::Label(0)]);
        assert!(write_facets(&labels, None).is_err());
    }
}
