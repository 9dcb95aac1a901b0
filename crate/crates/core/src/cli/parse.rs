//! Plain-text instance formats.
//!
//! * Graph: header `n edges`, then one `u v` pair per line (0-based).
//! * Family: header `n m f`, then `f` lines of `m` element indices.
//! * Weighted family: header `n`, then lines `weight s e_1 ... e_s`.
//!
//! Tokens are whitespace-separated; blank lines and lines starting with `#`
//! are skipped.

use std::collections::HashSet;

use num_bigint::BigInt;
use thiserror::Error;

use crate::packings::UniformSetFamily;
use crate::paths::Graph;
use crate::subset::{SubsetMask, Universe, MAX_UNIVERSE};
use crate::weighted::WeightedFamily;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("line {line}: malformed input: {reason}")]
    Malformed { line: usize, reason: String },
    #[error("line {line}: universe of {n} elements exceeds the limit of 64")]
    UniverseTooLarge { line: usize, n: usize },
    #[error("line {line}: self-loop at vertex {vertex}")]
    SelfLoop { line: usize, vertex: usize },
    #[error("line {line}: duplicate edge {u}-{v}")]
    DuplicateEdge { line: usize, u: usize, v: usize },
    #[error("line {line}: vertex {vertex} out of range for {n} vertices")]
    VertexOutOfRange { line: usize, vertex: usize, n: usize },
    #[error("line {line}: member has {got} elements, expected {expected}")]
    WrongMemberSize { line: usize, got: usize, expected: usize },
    #[error("line {line}: element {element} repeated within a member")]
    RepeatedElement { line: usize, element: usize },
    #[error("line {line}: duplicate member")]
    DuplicateMember { line: usize },
    #[error("line {line}: element {element} out of range for a universe of {n}")]
    ElementOutOfRange { line: usize, element: usize, n: usize },
    #[error("header announces {expected} {what}, found {found}")]
    CountMismatch { what: &'static str, expected: usize, found: usize },
}

type ParseResult<T> = std::result::Result<T, ParseError>;

/// Non-empty, non-comment lines with 1-based line numbers.
fn content_lines(text: &str) -> impl Iterator<Item = (usize, Vec<&str>)> {
    text.lines().enumerate().filter_map(|(i, l)| {
        let t = l.trim();
        if t.is_empty() || t.starts_with('#') {
            None
        } else {
            Some((i + 1, t.split_whitespace().collect()))
        }
    })
}

fn number(line: usize, tok: &str, what: &str) -> ParseResult<usize> {
    tok.parse().map_err(|_| ParseError::Malformed {
        line,
        reason: format!("expected {what}, got '{tok}'"),
    })
}

fn header<'a>(
    lines: &mut impl Iterator<Item = (usize, Vec<&'a str>)>,
    names: &[&str],
) -> ParseResult<(usize, Vec<usize>)> {
    let (line, toks) = lines.next().ok_or_else(|| ParseError::Malformed {
        line: 1,
        reason: "missing header".into(),
    })?;
    if toks.len() != names.len() {
        return Err(ParseError::Malformed {
            line,
            reason: format!("header must be '{}'", names.join(" ")),
        });
    }
    let vals = toks
        .iter()
        .zip(names)
        .map(|(t, what)| number(line, t, what))
        .collect::<ParseResult<Vec<_>>>()?;
    if vals[0] > MAX_UNIVERSE {
        return Err(ParseError::UniverseTooLarge { line, n: vals[0] });
    }
    Ok((line, vals))
}

/// Elements of one member line, rejecting repeats and out-of-range entries.
fn member(line: usize, toks: &[&str], n: usize) -> ParseResult<SubsetMask> {
    let mut s = SubsetMask::EMPTY;
    for t in toks {
        let e = number(line, t, "an element index")?;
        if e >= n {
            return Err(ParseError::ElementOutOfRange { line, element: e, n });
        }
        if s.contains(e) {
            return Err(ParseError::RepeatedElement { line, element: e });
        }
        s = s.with(e);
    }
    Ok(s)
}

pub fn parse_graph(text: &str) -> ParseResult<Graph> {
    let mut lines = content_lines(text);
    let (_, h) = header(&mut lines, &["n", "edges"])?;
    let (n, edges) = (h[0], h[1]);
    let mut g = Graph::empty(n).expect("n checked");
    let mut found = 0;
    for (line, toks) in lines {
        if toks.len() != 2 {
            return Err(ParseError::Malformed {
                line,
                reason: "an edge line holds exactly two vertices".into(),
            });
        }
        let u = number(line, toks[0], "a vertex")?;
        let v = number(line, toks[1], "a vertex")?;
        for x in [u, v] {
            if x >= n {
                return Err(ParseError::VertexOutOfRange { line, vertex: x, n });
            }
        }
        if u == v {
            return Err(ParseError::SelfLoop { line, vertex: u });
        }
        if g.has_edge(u, v) {
            return Err(ParseError::DuplicateEdge { line, u: u.min(v), v: u.max(v) });
        }
        g.add_edge(u, v).expect("validated above");
        found += 1;
    }
    if found != edges {
        return Err(ParseError::CountMismatch { what: "edges", expected: edges, found });
    }
    Ok(g)
}

pub fn parse_family(text: &str) -> ParseResult<UniformSetFamily> {
    let mut lines = content_lines(text);
    let (hline, h) = header(&mut lines, &["n", "m", "f"])?;
    let (n, m, f) = (h[0], h[1], h[2]);
    if m == 0 {
        return Err(ParseError::Malformed {
            line: hline,
            reason: "member size must be at least 1".into(),
        });
    }
    let mut members = Vec::with_capacity(f);
    let mut seen = HashSet::new();
    for (line, toks) in lines {
        if toks.len() != m {
            return Err(ParseError::WrongMemberSize { line, got: toks.len(), expected: m });
        }
        let s = member(line, &toks, n)?;
        if !seen.insert(s) {
            return Err(ParseError::DuplicateMember { line });
        }
        members.push(s);
    }
    if members.len() != f {
        return Err(ParseError::CountMismatch { what: "members", expected: f, found: members.len() });
    }
    Ok(UniformSetFamily::new(Universe::new(n).expect("n checked"), m, members).expect("validated above"))
}

pub fn parse_weighted_family(text: &str) -> ParseResult<WeightedFamily> {
    let mut lines = content_lines(text);
    let (_, h) = header(&mut lines, &["n"])?;
    let n = h[0];
    let mut fam = WeightedFamily::new(Universe::new(n).expect("n checked"));
    let mut seen = HashSet::new();
    for (line, toks) in lines {
        if toks.len() < 2 {
            return Err(ParseError::Malformed {
                line,
                reason: "expected 'weight size elements...'".into(),
            });
        }
        let w: BigInt = toks[0].parse().map_err(|_| ParseError::Malformed {
            line,
            reason: format!("expected an integer weight, got '{}'", toks[0]),
        })?;
        let size = number(line, toks[1], "a set size")?;
        if toks.len() - 2 != size {
            return Err(ParseError::WrongMemberSize { line, got: toks.len() - 2, expected: size });
        }
        let s = member(line, &toks[2..], n)?;
        if !seen.insert(s) {
            return Err(ParseError::DuplicateMember { line });
        }
        fam.set(s, w).expect("validated above");
    }
    Ok(fam)
}
