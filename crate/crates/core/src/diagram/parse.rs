use std::str::FromStr;

use super::{Diagram, DiagramError};

struct Token {
    pos: usize,
    arc: (u32, u32),
    dotted: bool,
}

fn err(pos: usize, msg: impl Into<String>) -> DiagramError {
    DiagramError::Parse { pos, msg: msg.into() }
}

fn number(bytes: &[u8], pos: &mut usize) -> Result<u32, DiagramError> {
    let start = *pos;
    while *pos < bytes.len() && bytes[*pos].is_ascii_digit() {
        *pos += 1;
    }
    if start == *pos {
        return Err(err(start, "expected a point number"));
    }
    std::str::from_utf8(&bytes[start..*pos])
        .expect("ascii digits")
        .parse()
        .map_err(|_| err(start, "point number too large"))
}

fn expect(bytes: &[u8], pos: &mut usize, c: u8) -> Result<(), DiagramError> {
    match bytes.get(*pos) {
        Some(&b) if b == c => {
            *pos += 1;
            Ok(())
        }
        Some(&b) => Err(err(*pos, format!("expected '{}', found '{}'", c as char, b as char))),
        None => Err(err(*pos, format!("expected '{}', found end of input", c as char))),
    }
}

fn tokens(s: &str) -> Result<Vec<Token>, DiagramError> {
    let bytes = s.as_bytes();
    let mut pos = 0;
    let mut out = Vec::new();
    while pos < bytes.len() {
        let start = pos;
        expect(bytes, &mut pos, b'(')?;
        let a = number(bytes, &mut pos)?;
        expect(bytes, &mut pos, b',')?;
        let b = number(bytes, &mut pos)?;
        expect(bytes, &mut pos, b')')?;
        let dotted = bytes.get(pos) == Some(&b'*');
        if dotted {
            pos += 1;
        }
        out.push(Token {
            pos: start,
            arc: (a.min(b), a.max(b)),
            dotted,
        });
    }
    Ok(out)
}

/// Parses `(i,j)` pairs, each optionally suffixed `*` for a dot, e.g.
/// `(1,2)(3,6)*(4,5)(7,8)`. The strand count is the number of pairs.
impl FromStr for Diagram {
    type Err = DiagramError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let toks = tokens(s)?;
        let n = toks.len();
        let at = |p: u32| {
            toks.iter()
                .find(|t| t.arc.0 == p || t.arc.1 == p)
                .map_or(0, |t| t.pos)
        };
        let arcs = toks.iter().map(|t| t.arc).collect();
        let dots = toks.iter().filter(|t| t.dotted).map(|t| t.arc).collect();
        Diagram::new(n, arcs, dots).map_err(|e| {
            let pos = match &e {
                DiagramError::PointOutOfRange { point, .. } | DiagramError::RepeatedPoint(point) => {
                    toks.iter()
                        .rev()
                        .find(|t| t.arc.0 == *point || t.arc.1 == *point)
                        .map_or(0, |t| t.pos)
                }
                DiagramError::Crossing(a, ..) => at(*a),
                DiagramError::DotNotOutermost(a, _) | DiagramError::DotNotArc(a, _) => at(*a),
                _ => 0,
            };
            err(pos, e.to_string())
        })
    }
}
