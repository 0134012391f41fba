//! Group elements as plain values. Multiplication lives in the owning
//! group's [`Law`](crate::law::Law); an element only carries canonical data,
//! so equality and hashing are structural.

use std::fmt;
use std::sync::Arc;

use crate::error::GroupError;

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Element {
    /// Images of `0..n`, a bijection.
    Perm(Arc<[u32]>),
    /// Packed field entries, row-major; the field and dimension live in the law.
    Mat(Arc<[u32]>),
    /// Fixed-length coordinate vector interpreted by a structured law
    /// (cyclic and abelian groups, cocycle twisted products).
    Word(Arc<[u32]>),
    /// Ordered components of a product construction.
    Tuple(Arc<[Element]>),
}

impl Element {
    pub fn perm(images: Vec<u32>) -> Self {
        Element::Perm(images.into())
    }

    pub fn mat(entries: Vec<u32>) -> Self {
        Element::Mat(entries.into())
    }

    pub fn word(coords: Vec<u32>) -> Self {
        Element::Word(coords.into())
    }

    pub fn tuple(parts: Vec<Element>) -> Self {
        Element::Tuple(parts.into())
    }

    pub fn kind(&self) -> &'static str {
        match self {
            Element::Perm(_) => "perm",
            Element::Mat(_) => "mat",
            Element::Word(_) => "word",
            Element::Tuple(_) => "tuple",
        }
    }

    pub fn as_perm(&self) -> Option<&[u32]> {
        match self {
            Element::Perm(p) => Some(p),
            _ => None,
        }
    }

    pub fn as_mat(&self) -> Option<&[u32]> {
        match self {
            Element::Mat(m) => Some(m),
            _ => None,
        }
    }

    pub fn as_word(&self) -> Option<&[u32]> {
        match self {
            Element::Word(w) => Some(w),
            _ => None,
        }
    }

    pub fn as_tuple(&self) -> Option<&[Element]> {
        match self {
            Element::Tuple(t) => Some(t),
            _ => None,
        }
    }
}

impl fmt::Debug for Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Element::Perm(p) => write!(f, "{}", format_cycles(p)),
            Element::Mat(m) => write!(f, "Mat{:?}", &m[..]),
            Element::Word(w) => write!(f, "Word{:?}", &w[..]),
            Element::Tuple(t) => f.debug_tuple("").field(&&t[..]).finish(),
        }
    }
}

/// Disjoint-cycle notation, 1-based, fixed points omitted; `()` for identity.
pub fn format_cycles(images: &[u32]) -> String {
    let n = images.len();
    let mut seen = vec![false; n];
    let mut out = String::new();
    for start in 0..n {
        if seen[start] || images[start] as usize == start {
            seen[start] = true;
            continue;
        }
        out.push('(');
        let mut cur = start;
        let mut first = true;
        while !seen[cur] {
            seen[cur] = true;
            if !first {
                out.push(' ');
            }
            first = false;
            out.push_str(&(cur + 1).to_string());
            cur = images[cur] as usize;
        }
        out.push(')');
    }
    if out.is_empty() {
        out.push_str("()");
    }
    out
}

/// Parses `(1 2 3)(4 5)` into an image array of length `degree`
/// (or the largest point mentioned when `degree` is `None`).
pub fn parse_cycles(text: &str, degree: Option<usize>) -> Result<Vec<u32>, GroupError> {
    let bad = |msg: &str| GroupError::InvalidParameters(format!("permutation {text:?}: {msg}"));
    let mut cycles: Vec<Vec<usize>> = Vec::new();
    let mut rest = text.trim();
    while !rest.is_empty() {
        let Some(body) = rest.strip_prefix('(') else {
            return Err(bad("expected '('"));
        };
        let close = body.find(')').ok_or_else(|| bad("unclosed cycle"))?;
        let pts = body[..close]
            .split([' ', ','])
            .filter(|t| !t.is_empty())
            .map(|t| {
                t.parse::<usize>()
                    .ok()
                    .filter(|&v| v >= 1)
                    .map(|v| v - 1)
                    .ok_or_else(|| bad("points are positive integers"))
            })
            .collect::<Result<Vec<_>, _>>()?;
        cycles.push(pts);
        rest = body[close + 1..].trim_start();
    }
    let max = cycles.iter().flatten().map(|&p| p + 1).max().unwrap_or(0);
    let n = degree.unwrap_or(max.max(1));
    if max > n {
        return Err(bad("point exceeds degree"));
    }
    let mut images: Vec<u32> = (0..n as u32).collect();
    let mut moved = vec![false; n];
    for cyc in &cycles {
        for (i, &a) in cyc.iter().enumerate() {
            if moved[a] {
                return Err(bad("cycles are not disjoint"));
            }
            moved[a] = true;
            images[a] = cyc[(i + 1) % cyc.len()] as u32;
        }
    }
    Ok(images)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cycle_notation_round_trip() {
        let p = parse_cycles("(1 2 3)(4 5)", None).unwrap();
        assert_eq!(p, vec![1, 2, 0, 4, 3]);
        assert_eq!(format_cycles(&p), "(1 2 3)(4 5)");
        assert_eq!(format_cycles(&[0, 1, 2]), "()");
        assert_eq!(parse_cycles("()", Some(3)).unwrap(), vec![0, 1, 2]);
    }

    #[test]
    fn cycle_parse_errors() {
        assert!(parse_cycles("(1 2", None).is_err());
        assert!(parse_cycles("(1 2)(2 3)", None).is_err());
        assert!(parse_cycles("(0 1)", None).is_err());
        assert!(parse_cycles("(1 9)", Some(4)).is_err());
    }
}
