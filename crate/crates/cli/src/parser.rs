//! Recursive-descent parser for the group-spec grammar.
//!
//! ```text
//! spec   := name "(" [arg ("," arg)*] ")"
//! arg    := int | poly | perm | matrix | spec
//! poly   := term ("+" | "-") term ... "@" p        e.g. x^2+x+1@5
//! perm   := cycle+                                  e.g. (1 2 3)(4 5)
//! matrix := "[" row ("," row)* "]" "@GF(" p ["^" k] ")"
//! entry  := int | "{" c0 "," c1 ... "}"             constant term first
//! ```
//!
//! Names are case-insensitive. Printing a parsed [`GroupSpec`] with
//! `Display` gives text that parses back to the same tree.

use irratio_core::arith::{is_prime, prime_power};
use irratio_core::constructions::{ActionSpec, Family, GroupSpec, MatrixLit};
use irratio_core::element::parse_cycles;
use irratio_core::{FieldCtx, Matrix};

const MAX_DEPTH: usize = 8;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("column {}: {msg}", .pos + 1)]
pub struct ParseError {
    pub pos: usize,
    pub msg: String,
}

#[derive(Debug, Clone)]
enum Arg {
    Int(u64),
    Poly { p: u32, coeffs: Vec<u32> },
    Perm(String),
    Matrix(MatrixLit),
    Action(ActionSpec),
    Spec(GroupSpec),
}

impl Arg {
    fn kind(&self) -> &'static str {
        match self {
            Arg::Int(_) => "integer",
            Arg::Poly { .. } => "polynomial",
            Arg::Perm(_) => "permutation",
            Arg::Matrix(_) => "matrix",
            Arg::Action(_) => "action",
            Arg::Spec(_) => "group spec",
        }
    }
}

struct Parser<'a> {
    src: &'a str,
    pos: usize,
    depth: usize,
}

pub fn parse_group_spec(text: &str) -> Result<GroupSpec, ParseError> {
    let mut p = Parser {
        src: text,
        pos: 0,
        depth: 0,
    };
    p.skip_ws();
    let start = p.pos;
    let arg = p.arg()?;
    p.skip_ws();
    if p.pos != text.len() {
        return Err(p.err("trailing input"));
    }
    match arg {
        Arg::Spec(s) => Ok(s),
        other => Err(ParseError {
            pos: start,
            msg: format!("expected a group spec, found {}", other.kind()),
        }),
    }
}

impl<'a> Parser<'a> {
    fn err(&self, msg: impl Into<String>) -> ParseError {
        ParseError {
            pos: self.pos,
            msg: msg.into(),
        }
    }

    fn rest(&self) -> &'a str {
        &self.src[self.pos..]
    }

    fn peek(&self) -> Option<char> {
        self.rest().chars().next()
    }

    fn skip_ws(&mut self) {
        let trimmed = self.rest().trim_start();
        self.pos = self.src.len() - trimmed.len();
    }

    fn expect(&mut self, c: char) -> Result<(), ParseError> {
        self.skip_ws();
        if self.peek() == Some(c) {
            self.pos += c.len_utf8();
            Ok(())
        } else {
            Err(self.err(format!("expected '{c}'")))
        }
    }

    fn eat(&mut self, c: char) -> bool {
        self.skip_ws();
        if self.peek() == Some(c) {
            self.pos += c.len_utf8();
            true
        } else {
            false
        }
    }

    fn take_while(&mut self, f: impl Fn(char) -> bool) -> &'a str {
        let start = self.pos;
        let len = self.rest().find(|c: char| !f(c)).unwrap_or(self.rest().len());
        self.pos += len;
        &self.src[start..start + len]
    }

    fn int(&mut self) -> Result<u64, ParseError> {
        self.skip_ws();
        let start = self.pos;
        let digits = self.take_while(|c| c.is_ascii_digit());
        digits.parse().map_err(|_| ParseError {
            pos: start,
            msg: "expected an integer".into(),
        })
    }

    fn arg(&mut self) -> Result<Arg, ParseError> {
        self.skip_ws();
        match self.peek() {
            None => Err(self.err("unexpected end of input")),
            Some('(') => self.perm(),
            Some('[') => self.matrix().map(Arg::Matrix),
            // no constructor name starts with x, so x begins a polynomial
            Some(c) if c.is_ascii_digit() || c == 'x' || c == 'X' || c == '-' => self.int_or_poly(),
            Some(c) if c.is_ascii_alphabetic() || c == '_' => self.call(),
            Some(c) => Err(self.err(format!("unexpected character '{c}'"))),
        }
    }

    fn perm(&mut self) -> Result<Arg, ParseError> {
        let start = self.pos;
        while self.peek() == Some('(') {
            let close = self.rest().find(')').ok_or_else(|| self.err("unclosed cycle"))?;
            self.pos += close + 1;
            let save = self.pos;
            self.skip_ws();
            if self.peek() != Some('(') {
                self.pos = save;
            }
        }
        let text = &self.src[start..self.pos];
        parse_cycles(text, None).map_err(|e| ParseError {
            pos: start,
            msg: e.to_string(),
        })?;
        Ok(Arg::Perm(text.to_string()))
    }

    fn int_or_poly(&mut self) -> Result<Arg, ParseError> {
        let start = self.pos;
        let text =
            self.take_while(|c| c.is_ascii_digit() || matches!(c, 'x' | 'X' | '^' | '+' | '-' | '*' | '@' | ' '));
        let text = text.trim_end();
        self.pos = start + text.len();
        if let Ok(n) = text.parse::<u64>() {
            return Ok(Arg::Int(n));
        }
        let (p, coeffs) = parse_poly(text).map_err(|msg| ParseError { pos: start, msg })?;
        Ok(Arg::Poly { p, coeffs })
    }

    fn entry(&mut self, field: &FieldCtx) -> Result<u32, ParseError> {
        self.skip_ws();
        let start = self.pos;
        let bad = |msg: String| ParseError { pos: start, msg };
        if self.eat('{') {
            let mut coeffs = vec![self.int()?];
            while self.eat(',') {
                coeffs.push(self.int()?);
            }
            self.expect('}')?;
            let coeffs = coeffs
                .into_iter()
                .map(|c| u32::try_from(c).map_err(|_| bad("coefficient too large".into())))
                .collect::<Result<Vec<_>, _>>()?;
            field.from_coeffs(&coeffs).map_err(|e| bad(e.to_string()))
        } else {
            let v = self.int()?;
            if v >= field.characteristic() as u64 {
                return Err(bad(format!("entry {v} is not reduced mod {}", field.characteristic())));
            }
            Ok(v as u32)
        }
    }

    /// Rows are scanned twice: once to find the field after `@`, once to
    /// read entries against it.
    fn matrix(&mut self) -> Result<MatrixLit, ParseError> {
        let start = self.pos;
        let close = matching_bracket(self.rest()).ok_or_else(|| self.err("unclosed '['"))?;
        self.pos += close + 1;
        self.expect('@')?;
        let (p, k) = self.field_suffix()?;
        let field = FieldCtx::new(p as u64, k).map_err(|e| self.err(e.to_string()))?;
        let end = self.pos;
        self.pos = start;
        self.expect('[')?;
        let mut rows: Vec<Vec<u32>> = Vec::new();
        loop {
            self.expect('[')?;
            let mut row = vec![self.entry(&field)?];
            while self.eat(',') {
                row.push(self.entry(&field)?);
            }
            self.expect(']')?;
            rows.push(row);
            if !self.eat(',') {
                break;
            }
        }
        self.expect(']')?;
        let d = rows.len();
        if rows.iter().any(|r| r.len() != d) {
            return Err(ParseError {
                pos: start,
                msg: "matrix must be square".into(),
            });
        }
        self.pos = end;
        Ok(MatrixLit {
            p,
            k,
            matrix: Matrix::new(d, rows.concat()),
        })
    }

    /// `GF(p^k)`, `GF(q)` or a bare prime.
    fn field_suffix(&mut self) -> Result<(u32, u32), ParseError> {
        self.skip_ws();
        let start = self.pos;
        let bad = |msg: &str| ParseError {
            pos: start,
            msg: msg.into(),
        };
        let gf = self.rest().len() >= 2 && self.rest()[..2].eq_ignore_ascii_case("gf");
        if !gf {
            let p = self.int()?;
            if !is_prime(p) {
                return Err(bad("field characteristic must be prime"));
            }
            return Ok((p as u32, 1));
        }
        self.pos += 2;
        self.expect('(')?;
        let a = self.int()?;
        let (p, k) = if self.eat('^') {
            (a, self.int()?)
        } else {
            let (p, k) = prime_power(a).ok_or_else(|| bad("field order must be a prime power"))?;
            (p, k as u64)
        };
        self.expect(')')?;
        if !is_prime(p) || k == 0 || k > 16 {
            return Err(bad("field must be GF(p^k) with p prime and 1 <= k <= 16"));
        }
        Ok((p as u32, k as u32))
    }

    fn call(&mut self) -> Result<Arg, ParseError> {
        let start = self.pos;
        let name = self
            .take_while(|c| c.is_ascii_alphanumeric() || c == '_')
            .to_ascii_lowercase();
        self.expect('(')?;
        self.depth += 1;
        if self.depth > MAX_DEPTH {
            return Err(ParseError {
                pos: start,
                msg: format!("nesting deeper than {MAX_DEPTH}"),
            });
        }
        let mut args: Vec<(usize, Arg)> = Vec::new();
        if !self.eat(')') {
            loop {
                self.skip_ws();
                let at = self.pos;
                args.push((at, self.arg()?));
                if self.eat(')') {
                    break;
                }
                self.expect(',')?;
            }
        }
        self.depth -= 1;
        if name == "companion" {
            return match args.as_slice() {
                [(_, Arg::Poly { p, coeffs })] => {
                    if coeffs.len() < 2 || *coeffs.last().unwrap() != 1 {
                        return Err(ParseError {
                            pos: args[0].0,
                            msg: "companion polynomial must be monic of positive degree".into(),
                        });
                    }
                    Ok(Arg::Action(ActionSpec::Companion {
                        p: *p,
                        poly: coeffs.clone(),
                    }))
                }
                _ => Err(ParseError {
                    pos: start,
                    msg: "companion takes one polynomial such as x^2+x+1@5".into(),
                }),
            };
        }
        build(&name, args).map(Arg::Spec).map_err(|(pos, msg)| ParseError {
            pos: pos.unwrap_or(start),
            msg,
        })
    }
}

/// Offset of the `]` closing the `[` at the start of `s`.
fn matching_bracket(s: &str) -> Option<usize> {
    let mut depth = 0usize;
    for (i, c) in s.char_indices() {
        match c {
            '[' => depth += 1,
            ']' => {
                depth -= 1;
                if depth == 0 {
                    return Some(i);
                }
            }
            _ => {}
        }
    }
    None
}

/// `x^2+2x-1@5` into `(5, [4, 2, 1])`, constant term first, trailing zeros
/// trimmed.
pub fn parse_poly(text: &str) -> Result<(u32, Vec<u32>), String> {
    let (body, p) = text
        .split_once('@')
        .ok_or_else(|| "polynomial needs '@p' for its prime field".to_string())?;
    let p: u64 = p.trim().parse().map_err(|_| "bad prime after '@'".to_string())?;
    if !is_prime(p) || p > u32::MAX as u64 {
        return Err(format!("{p} is not prime"));
    }
    let body: String = body.chars().filter(|c| !c.is_whitespace()).collect();
    if body.is_empty() {
        return Err("empty polynomial".into());
    }
    let mut coeffs: Vec<u64> = Vec::new();
    let mut i = 0;
    let bytes = body.as_bytes();
    while i < bytes.len() {
        let mut neg = false;
        if bytes[i] == b'+' || bytes[i] == b'-' {
            neg = bytes[i] == b'-';
            i += 1;
        } else if i > 0 {
            return Err("expected '+' or '-' between terms".into());
        }
        let start = i;
        while i < bytes.len() && bytes[i] != b'+' && bytes[i] != b'-' {
            i += 1;
        }
        let term = &body[start..i];
        let (coef, exp) = parse_term(term)?;
        let coef = coef % p;
        let coef = if neg { (p - coef) % p } else { coef };
        let exp = exp as usize;
        if coeffs.len() <= exp {
            coeffs.resize(exp + 1, 0);
        }
        coeffs[exp] = (coeffs[exp] + coef) % p;
    }
    while coeffs.len() > 1 && *coeffs.last().unwrap() == 0 {
        coeffs.pop();
    }
    Ok((p as u32, coeffs.into_iter().map(|c| c as u32).collect()))
}

fn parse_term(term: &str) -> Result<(u64, u32), String> {
    let lower = term.to_ascii_lowercase();
    let bad = || format!("bad polynomial term {term:?}");
    match lower.find('x') {
        None => Ok((lower.parse().map_err(|_| bad())?, 0)),
        Some(at) => {
            let coef = lower[..at].trim_end_matches('*');
            let coef = if coef.is_empty() {
                1
            } else {
                coef.parse().map_err(|_| bad())?
            };
            let exp = match &lower[at + 1..] {
                "" => 1,
                e => e
                    .strip_prefix('^')
                    .and_then(|e| e.parse().ok())
                    .filter(|&e: &u32| e <= 64)
                    .ok_or_else(bad)?,
            };
            Ok((coef, exp))
        }
    }
}

type BuildError = (Option<usize>, String);

fn build(name: &str, args: Vec<(usize, Arg)>) -> Result<GroupSpec, BuildError> {
    use GroupSpec as S;
    let n = args.len();
    let arity = |want: usize| -> Result<(), BuildError> {
        if n == want {
            Ok(())
        } else {
            Err((None, format!("{name} takes {want} argument(s), got {n}")))
        }
    };
    let int = |i: usize| -> Result<u32, BuildError> {
        match &args[i] {
            (_, Arg::Int(v)) => u32::try_from(*v).map_err(|_| (Some(args[i].0), format!("{v} is too large"))),
            (pos, other) => Err((Some(*pos), format!("expected integer, found {}", other.kind()))),
        }
    };
    let spec = |i: usize| -> Result<Box<GroupSpec>, BuildError> {
        match &args[i] {
            (_, Arg::Spec(s)) => Ok(Box::new(s.clone())),
            (pos, other) => Err((Some(*pos), format!("expected group spec, found {}", other.kind()))),
        }
    };
    let matrix = |i: usize| -> Result<MatrixLit, BuildError> {
        match &args[i] {
            (_, Arg::Matrix(m)) => Ok(m.clone()),
            (pos, other) => Err((Some(*pos), format!("expected matrix, found {}", other.kind()))),
        }
    };
    let ints = |from: usize| -> Result<Vec<u32>, BuildError> { (from..n).map(int).collect() };
    let i2 = || -> Result<(u32, u32), BuildError> {
        arity(2)?;
        Ok((int(0)?, int(1)?))
    };
    let i3 = || -> Result<(u32, u32, u32), BuildError> {
        arity(3)?;
        Ok((int(0)?, int(1)?, int(2)?))
    };
    let one = || -> Result<u32, BuildError> {
        arity(1)?;
        int(0)
    };

    if let Ok(fam) = name.parse::<Family>() {
        let (d, q) = i2()?;
        return Ok(S::Classical(fam, d, q));
    }
    Ok(match name {
        "cyclic" => S::Cyclic(one()?),
        "abelian" => {
            if n == 0 {
                return Err((None, "abelian needs at least one modulus".into()));
            }
            S::Abelian(ints(0)?)
        }
        "elemab" | "elementary_abelian" => {
            let (p, d) = i2()?;
            S::ElemAb(p, d)
        }
        "dihedral" => S::Dihedral(one()?),
        "quaternion" | "dicyclic" => S::Quaternion(one()?),
        "symmetric" | "sym" => S::Symmetric(one()?),
        "alternating" | "alt" => S::Alternating(one()?),
        "cyclic_perm" => S::CyclicPerm(one()?),
        "sz" | "suzuki" => S::Suzuki(one()?),
        "suzuki2" | "suzuki_2group" => S::Suzuki2(one()?),
        "psu3_unipotent" | "psu3_unipotent_even" => S::Psu3Unipotent(one()?),
        "j1" => {
            arity(0)?;
            S::J1
        }
        "sz2_frobenius" => {
            arity(0)?;
            S::Sz2Frobenius
        }
        "singer_frobenius" => S::SingerFrobenius(one()?),
        "extraspecial" => {
            let (p, w) = i2()?;
            S::Extraspecial(p, w)
        }
        "minimal_nonabelian_p" => {
            let (p, r, s) = i3()?;
            S::MinNonabelianP(p, r, s)
        }
        "minimal_nonabelian_qp" => {
            let (q, p, s) = i3()?;
            S::MinNonabelianQp(q, p, s)
        }
        "metacyclic" => {
            let (a, b, c) = i3()?;
            S::Metacyclic(a, b, c)
        }
        "winter" | "winter_extension" => {
            arity(2)?;
            S::Winter(spec(0)?, int(1)?)
        }
        "extraspecial_ext" | "symplectic_extension" => {
            if n < 3 {
                return Err((None, "extraspecial_ext needs a group, a prime and matrices".into()));
            }
            S::ExtraspecialExt(spec(0)?, int(1)?, (2..n).map(matrix).collect::<Result<_, _>>()?)
        }
        "regular_module" | "regular_module_extension" => {
            arity(2)?;
            S::RegularModule(spec(0)?, int(1)?)
        }
        "matrix_module" | "matrix_module_extension" => {
            if n < 1 {
                return Err((None, "matrix_module needs a group".into()));
            }
            S::MatrixModule(spec(0)?, (1..n).map(matrix).collect::<Result<_, _>>()?)
        }
        "direct" | "direct_product" => {
            arity(2)?;
            S::Direct(spec(0)?, spec(1)?)
        }
        "wreath" | "wreath_product" => {
            arity(2)?;
            S::Wreath(spec(0)?, spec(1)?)
        }
        "sylow" => {
            arity(2)?;
            S::Sylow(spec(0)?, int(1)?)
        }
        "semidirect" | "semidirect_product" => {
            if n < 2 {
                return Err((None, "semidirect needs a base, a top group and actions".into()));
            }
            let acts = args[2..]
                .iter()
                .map(|(pos, a)| match a {
                    Arg::Action(x) => Ok(x.clone()),
                    Arg::Poly { p, coeffs } => Ok(ActionSpec::Companion {
                        p: *p,
                        poly: coeffs.clone(),
                    }),
                    Arg::Matrix(m) => Ok(ActionSpec::Matrix(m.clone())),
                    other => Err((Some(*pos), format!("expected action, found {}", other.kind()))),
                })
                .collect::<Result<Vec<_>, _>>()?;
            S::Semidirect(spec(0)?, spec(1)?, acts)
        }
        "perms" => {
            let (degree_given, from) = match args.first() {
                Some((_, Arg::Int(d))) => (Some(*d as usize), 1),
                _ => (None, 0),
            };
            let texts = args[from..]
                .iter()
                .map(|(pos, a)| match a {
                    Arg::Perm(t) => Ok((*pos, t.as_str())),
                    other => Err((Some(*pos), format!("expected permutation, found {}", other.kind()))),
                })
                .collect::<Result<Vec<_>, _>>()?;
            if texts.is_empty() {
                return Err((None, "perms needs at least one permutation".into()));
            }
            let max_point = texts
                .iter()
                .map(|(pos, t)| {
                    parse_cycles(t, None)
                        .map(|v| v.len())
                        .map_err(|e| (Some(*pos), e.to_string()))
                })
                .collect::<Result<Vec<_>, _>>()?
                .into_iter()
                .max()
                .unwrap_or(1);
            let degree = degree_given.unwrap_or(max_point);
            let gens = texts
                .iter()
                .map(|(pos, t)| parse_cycles(t, Some(degree)).map_err(|e| (Some(*pos), e.to_string())))
                .collect::<Result<Vec<_>, _>>()?;
            S::Perms { degree, gens }
        }
        "matrices" => {
            if n == 0 {
                return Err((None, "matrices needs at least one matrix".into()));
            }
            S::Matrices((0..n).map(matrix).collect::<Result<_, _>>()?)
        }
        _ => return Err((None, format!("unknown group constructor {name:?}"))),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn order(text: &str) -> usize {
        parse_group_spec(text).unwrap().build().unwrap().order().unwrap()
    }

    #[test]
    fn builds_documented_examples() {
        assert_eq!(order("psl(2,13)"), 1092);
        assert_eq!(order("semidirect(elemab(5,2), cyclic(3), companion(x^2+x+1@5))"), 75);
        assert_eq!(order("wreath(cyclic(3), cyclic_perm(3))"), 81);
        assert_eq!(order("PERMS((1 2 3),(1 2))"), 6);
    }

    #[test]
    fn polynomials_are_constant_first() {
        assert_eq!(parse_poly("x^2+2x-1@5").unwrap(), (5, vec![4, 2, 1]));
        assert_eq!(parse_poly("X^3 + X + 1 @ 2").unwrap(), (2, vec![1, 1, 0, 1]));
        assert!(parse_poly("x^2+1").is_err());
        assert!(parse_poly("x^2+1@4").is_err());
    }

    #[test]
    fn errors_carry_positions() {
        let e = parse_group_spec("cyclic(3").unwrap_err();
        assert_eq!(e.pos, 8);
        let e = parse_group_spec("cyclic(3) x").unwrap_err();
        assert_eq!(e.msg, "trailing input");
        assert!(parse_group_spec("nosuchgroup(3)").is_err());
        assert!(parse_group_spec("5").is_err());
    }

    #[test]
    fn display_round_trips() {
        for text in [
            "direct(cyclic(2),quaternion(8))",
            "semidirect(elemab(5,2),cyclic(3),companion(x^2+x+1@5))",
            "matrices([[1,1],[0,1]]@GF(3))",
            "sylow(symmetric(4),2)",
        ] {
            let spec = parse_group_spec(text).unwrap();
            assert_eq!(parse_group_spec(&spec.to_string()).unwrap(), spec);
        }
    }
}
