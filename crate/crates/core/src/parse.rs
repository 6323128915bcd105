//! Text input: the polynomial grammar
//!
//! ```text
//! poly   := term (('+' | '-') term)*
//! term   := factor ('*'? factor)*
//! factor := atom ('^' '-'? int)?
//! atom   := int ('/' int)? | 'x' | 'y' | 'z' '(' int ')' | '(' poly ')'
//! ```
//!
//! Rational coefficients are written "p/q", the cyclotomic generator is
//! "z(d)". Ideals are semicolon-separated generator lists. Errors carry the
//! byte position of the offending token.

use std::collections::BTreeMap;
use std::fmt;

use num::BigInt;

use crate::cyclotomic::CycNum;
use crate::field::{Field, One, Rational, Zero};
use crate::monomial::Monomial;
use crate::poly::HomogPoly;

#[derive(Debug, Clone)]
pub struct ParseError {
    pub pos: usize,
    pub msg: String,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "parse error at byte {}: {}", self.pos, self.msg)
    }
}

impl std::error::Error for ParseError {}

fn err<T>(pos: usize, msg: impl Into<String>) -> Result<T, ParseError> {
    Err(ParseError { pos, msg: msg.into() })
}

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Int(BigInt),
    X,
    Y,
    Z,
    LParen,
    RParen,
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    Comma,
}

struct Lexer {
    toks: Vec<(usize, Tok)>,
    end: usize,
    cursor: usize,
}

impl Lexer {
    fn new(src: &str) -> Result<Self, ParseError> {
        let bytes = src.as_bytes();
        let mut toks = Vec::new();
        let mut i = 0;
        while i < bytes.len() {
            let c = bytes[i] as char;
            match c {
                ' ' | '\t' | '\n' | '\r' => i += 1,
                '0'..='9' => {
                    let start = i;
                    while i < bytes.len() && bytes[i].is_ascii_digit() {
                        i += 1;
                    }
                    let n: BigInt = src[start..i].parse().unwrap();
                    toks.push((start, Tok::Int(n)));
                }
                'x' => {
                    toks.push((i, Tok::X));
                    i += 1;
                }
                'y' => {
                    toks.push((i, Tok::Y));
                    i += 1;
                }
                'z' => {
                    toks.push((i, Tok::Z));
                    i += 1;
                }
                '(' => {
                    toks.push((i, Tok::LParen));
                    i += 1;
                }
                ')' => {
                    toks.push((i, Tok::RParen));
                    i += 1;
                }
                '+' => {
                    toks.push((i, Tok::Plus));
                    i += 1;
                }
                '-' => {
                    toks.push((i, Tok::Minus));
                    i += 1;
                }
                '*' => {
                    toks.push((i, Tok::Star));
                    i += 1;
                }
                '/' => {
                    toks.push((i, Tok::Slash));
                    i += 1;
                }
                '^' => {
                    toks.push((i, Tok::Caret));
                    i += 1;
                }
                ',' => {
                    toks.push((i, Tok::Comma));
                    i += 1;
                }
                other => return err(i, format!("unexpected character '{other}'")),
            }
        }
        Ok(Lexer { toks, end: bytes.len(), cursor: 0 })
    }

    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.cursor).map(|(_, t)| t)
    }

    fn pos(&self) -> usize {
        self.toks.get(self.cursor).map_or(self.end, |(p, _)| *p)
    }

    fn next(&mut self) -> Option<Tok> {
        let t = self.toks.get(self.cursor).map(|(_, t)| t.clone());
        if t.is_some() {
            self.cursor += 1;
        }
        t
    }

    fn expect(&mut self, want: Tok, what: &str) -> Result<(), ParseError> {
        let pos = self.pos();
        match self.next() {
            Some(t) if t == want => Ok(()),
            _ => err(pos, format!("expected {what}")),
        }
    }
}

/// A not-necessarily-homogeneous polynomial in x, y; parser workspace.
#[derive(Clone, Debug)]
struct Poly2(BTreeMap<(u32, u32), CycNum>);

impl Poly2 {
    fn constant(c: CycNum) -> Self {
        let mut m = BTreeMap::new();
        if !c.is_zero() {
            m.insert((0, 0), c);
        }
        Poly2(m)
    }

    fn var(x: bool) -> Self {
        let mut m = BTreeMap::new();
        m.insert(if x { (1, 0) } else { (0, 1) }, CycNum::one());
        Poly2(m)
    }

    fn add(mut self, other: Poly2) -> Self {
        for (k, c) in other.0 {
            let e = self.0.entry(k).or_insert_with(CycNum::zero);
            *e = e.clone() + c;
            if e.is_zero() {
                self.0.remove(&k);
            }
        }
        self
    }

    fn neg(mut self) -> Self {
        for c in self.0.values_mut() {
            *c = -c.clone();
        }
        self
    }

    fn mul(&self, other: &Poly2) -> Self {
        let mut m: BTreeMap<(u32, u32), CycNum> = BTreeMap::new();
        for ((a1, b1), c1) in &self.0 {
            for ((a2, b2), c2) in &other.0 {
                let k = (a1 + a2, b1 + b2);
                let e = m.entry(k).or_insert_with(CycNum::zero);
                *e = e.clone() + c1.clone() * c2.clone();
            }
        }
        m.retain(|_, c| !c.is_zero());
        Poly2(m)
    }

    fn as_constant(&self) -> Option<CycNum> {
        if self.0.is_empty() {
            return Some(CycNum::zero());
        }
        if self.0.len() == 1 {
            if let Some(c) = self.0.get(&(0, 0)) {
                return Some(c.clone());
            }
        }
        None
    }
}

struct Parser {
    lx: Lexer,
}

impl Parser {
    fn parse_expr(&mut self) -> Result<Poly2, ParseError> {
        let mut negate = false;
        match self.lx.peek() {
            Some(Tok::Minus) => {
                self.lx.next();
                negate = true;
            }
            Some(Tok::Plus) => {
                self.lx.next();
            }
            _ => {}
        }
        let mut acc = self.parse_term()?;
        if negate {
            acc = acc.neg();
        }
        loop {
            match self.lx.peek() {
                Some(Tok::Plus) => {
                    self.lx.next();
                    let t = self.parse_term()?;
                    acc = acc.add(t);
                }
                Some(Tok::Minus) => {
                    self.lx.next();
                    let t = self.parse_term()?;
                    acc = acc.add(t.neg());
                }
                _ => return Ok(acc),
            }
        }
    }

    fn parse_term(&mut self) -> Result<Poly2, ParseError> {
        let mut acc = self.parse_factor()?;
        loop {
            match self.lx.peek() {
                Some(Tok::Star) => {
                    self.lx.next();
                    let f = self.parse_factor()?;
                    acc = acc.mul(&f);
                }
                // juxtaposition
                Some(Tok::Int(_)) | Some(Tok::X) | Some(Tok::Y) | Some(Tok::Z)
                | Some(Tok::LParen) => {
                    let f = self.parse_factor()?;
                    acc = acc.mul(&f);
                }
                _ => return Ok(acc),
            }
        }
    }

    fn parse_factor(&mut self) -> Result<Poly2, ParseError> {
        let base = self.parse_atom()?;
        if self.lx.peek() != Some(&Tok::Caret) {
            return Ok(base);
        }
        self.lx.next();
        let mut negative = false;
        if self.lx.peek() == Some(&Tok::Minus) {
            self.lx.next();
            negative = true;
        }
        let pos = self.lx.pos();
        let Some(Tok::Int(e)) = self.lx.next() else {
            return err(pos, "expected an integer exponent after '^'");
        };
        let e: u32 = match e.try_into() {
            Ok(e) => e,
            Err(_) => return err(pos, "exponent too large"),
        };
        if negative {
            let Some(c) = base.as_constant() else {
                return err(pos, "negative exponent on a non-constant");
            };
            let Some(inv) = c.inv() else {
                return err(pos, "negative exponent of zero");
            };
            return Ok(Poly2::constant(inv.pow(e)));
        }
        let mut acc = Poly2::constant(CycNum::one());
        for _ in 0..e {
            acc = acc.mul(&base);
        }
        Ok(acc)
    }

    fn parse_atom(&mut self) -> Result<Poly2, ParseError> {
        let pos = self.lx.pos();
        match self.lx.next() {
            Some(Tok::Int(n)) => {
                if self.lx.peek() == Some(&Tok::Slash) {
                    self.lx.next();
                    let dpos = self.lx.pos();
                    let Some(Tok::Int(d)) = self.lx.next() else {
                        return err(dpos, "expected a denominator after '/'");
                    };
                    if d.is_zero() {
                        return err(dpos, "zero denominator");
                    }
                    Ok(Poly2::constant(CycNum::from_rational(Rational::new(n, d))))
                } else {
                    Ok(Poly2::constant(CycNum::from_rational(Rational::from_integer(n))))
                }
            }
            Some(Tok::X) => Ok(Poly2::var(true)),
            Some(Tok::Y) => Ok(Poly2::var(false)),
            Some(Tok::Z) => {
                self.lx.expect(Tok::LParen, "'(' after z")?;
                let dpos = self.lx.pos();
                let Some(Tok::Int(d)) = self.lx.next() else {
                    return err(dpos, "expected the order of the root of unity");
                };
                let d: u32 = match d.try_into() {
                    Ok(d) if d >= 1 => d,
                    _ => return err(dpos, "the order must be a positive integer"),
                };
                self.lx.expect(Tok::RParen, "')' after the order")?;
                Ok(Poly2::constant(CycNum::zeta_power(d, 1)))
            }
            Some(Tok::LParen) => {
                let inner = self.parse_expr()?;
                self.lx.expect(Tok::RParen, "')'")?;
                Ok(inner)
            }
            _ => err(pos, "expected a number, variable, z(d), or '('"),
        }
    }

    fn finish(&self) -> Result<(), ParseError> {
        if self.lx.cursor < self.lx.toks.len() {
            err(self.lx.pos(), "unexpected trailing input")
        } else {
            Ok(())
        }
    }
}

fn parse_poly2(src: &str) -> Result<Poly2, ParseError> {
    let mut p = Parser { lx: Lexer::new(src)? };
    if p.lx.toks.is_empty() {
        return err(0, "empty input");
    }
    let v = p.parse_expr()?;
    p.finish()?;
    Ok(v)
}

/// Parse a constant (no variables allowed), e.g. "3/2" or "z(6)^2 - z(6)".
pub fn parse_cyc(src: &str) -> Result<CycNum, ParseError> {
    let v = parse_poly2(src)?;
    v.as_constant()
        .ok_or_else(|| ParseError { pos: 0, msg: "expected a constant, found variables".into() })
}

/// Parse a nonzero homogeneous polynomial in x and y.
pub fn parse_homog_poly(src: &str) -> Result<HomogPoly, ParseError> {
    let v = parse_poly2(src)?;
    if v.0.is_empty() {
        return err(0, "polynomial is zero");
    }
    let degrees: Vec<u32> = v.0.keys().map(|(a, b)| a + b).collect();
    let d = degrees[0];
    if degrees.iter().any(|&e| e != d) {
        return err(0, format!("polynomial is not homogeneous: {src:?}"));
    }
    let coeffs = v
        .0
        .into_iter()
        .map(|((a, b), c)| (Monomial::new(a, b), c))
        .collect();
    Ok(HomogPoly::new(d, coeffs))
}

/// Parse a semicolon-separated list of homogeneous generators.
pub fn parse_generators(src: &str) -> Result<Vec<HomogPoly>, ParseError> {
    let mut out = Vec::new();
    let mut offset = 0;
    for chunk in src.split(';') {
        if !chunk.trim().is_empty() {
            let g = parse_homog_poly(chunk).map_err(|e| ParseError {
                pos: offset + e.pos,
                msg: e.msg,
            })?;
            out.push(g);
        }
        offset += chunk.len() + 1;
    }
    if out.is_empty() {
        return err(0, "no generators given");
    }
    Ok(out)
}

/// Parse a partition as a comma list "4,1"; empty or "0" is the empty
/// partition.
pub fn parse_partition(src: &str) -> Result<Vec<u32>, ParseError> {
    let t = src.trim();
    if t.is_empty() || t == "0" {
        return Ok(Vec::new());
    }
    let mut parts = Vec::new();
    for piece in t.split(',') {
        match piece.trim().parse::<u32>() {
            Ok(0) => {}
            Ok(n) => parts.push(n),
            Err(_) => return err(0, format!("bad partition entry {piece:?}")),
        }
    }
    for w in parts.windows(2) {
        if w[0] < w[1] {
            return err(0, "partition entries must be weakly decreasing");
        }
    }
    Ok(parts)
}

/// Parse point pairs "(1,1);(z(6),1)".
pub fn parse_points(src: &str) -> Result<Vec<(CycNum, CycNum)>, ParseError> {
    let mut out = Vec::new();
    for chunk in src.split(';') {
        let chunk = chunk.trim();
        if chunk.is_empty() {
            continue;
        }
        let mut p = Parser { lx: Lexer::new(chunk)? };
        p.lx.expect(Tok::LParen, "'(' starting a point")?;
        let a = p.parse_expr()?;
        p.lx.expect(Tok::Comma, "',' between coordinates")?;
        let b = p.parse_expr()?;
        p.lx.expect(Tok::RParen, "')' ending a point")?;
        p.finish()?;
        let ca = a.as_constant().ok_or_else(|| ParseError {
            pos: 0,
            msg: "point coordinates must be constants".into(),
        })?;
        let cb = b.as_constant().ok_or_else(|| ParseError {
            pos: 0,
            msg: "point coordinates must be constants".into(),
        })?;
        if ca.is_zero() && cb.is_zero() {
            return err(0, "(0,0) is not a point of the projective line");
        }
        out.push((ca, cb));
    }
    if out.is_empty() {
        return err(0, "no points given");
    }
    Ok(out)
}

/// Parse a necklace bit string such as "110000" (1 = black bead).
pub fn parse_necklace_bits(src: &str) -> Result<(u32, Vec<u32>), ParseError> {
    let t = src.trim();
    if t.is_empty() {
        return err(0, "empty necklace");
    }
    let mut positions = Vec::new();
    for (i, c) in t.chars().enumerate() {
        match c {
            '0' => {}
            '1' => positions.push(i as u32),
            _ => return err(i, "necklace strings use only '0' and '1'"),
        }
    }
    if positions.is_empty() {
        return err(0, "necklace has no black beads");
    }
    Ok((t.len() as u32, positions))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_the_running_ideal() {
        let gens = parse_generators("x^3+x^2*y+2*x*y^2+3*y^3; x^5; x*y^4").unwrap();
        assert_eq!(gens.len(), 3);
        assert_eq!(gens[0].degree(), 3);
        assert_eq!(gens[0].to_string(), "x^3 + x^2*y + 2*x*y^2 + 3*y^3");
        assert_eq!(gens[2].to_string(), "x*y^4");
    }

    #[test]
    fn parses_cyclotomic_coefficients() {
        let f = parse_homog_poly("x^2 - (1+z(6))*x*y + z(6)*y^2").unwrap();
        let z = CycNum::zeta_power(6, 1);
        assert_eq!(f.coeff(&Monomial::new(1, 1)), -(CycNum::one() + z));
        // z(6)^2 - z(6) + 1 = 0
        assert!(parse_cyc("z(6)^2 - z(6) + 1").unwrap().is_zero());
        assert_eq!(parse_cyc("z(4)^-1").unwrap(), CycNum::zeta_power(4, -1));
    }

    #[test]
    fn juxtaposition_and_signs() {
        let f = parse_homog_poly("-x^2y + 2xy^2").unwrap();
        assert_eq!(f.coeff(&Monomial::new(2, 1)), CycNum::from_int(-1));
        assert_eq!(f.coeff(&Monomial::new(1, 2)), CycNum::from_int(2));
    }

    #[test]
    fn rejects_inhomogeneous_and_reports_position() {
        assert!(parse_homog_poly("x^2 + y").is_err());
        let e = parse_homog_poly("x^2 $ y^2").unwrap_err();
        assert_eq!(e.pos, 4);
        let e = parse_generators("x^2; x^ ; y").unwrap_err();
        assert!(e.pos >= 5, "position {} points into the second chunk", e.pos);
    }

    #[test]
    fn points_and_partitions() {
        let pts = parse_points("(1,1);(z(6),1)").unwrap();
        assert_eq!(pts.len(), 2);
        assert_eq!(pts[1].0, CycNum::zeta_power(6, 1));
        assert_eq!(parse_partition("4,1").unwrap(), vec![4, 1]);
        assert!(parse_partition("").unwrap().is_empty());
        assert!(parse_partition("1,3").is_err());
        assert_eq!(parse_necklace_bits("110000").unwrap(), (6, vec![0, 1]));
    }

    #[test]
    fn display_round_trip() {
        for src in ["x^3 + x^2*y + 2*x*y^2 + 3*y^3", "x^2 - y^2", "x*y^4"] {
            let f = parse_homog_poly(src).unwrap();
            let g = parse_homog_poly(&f.to_string()).unwrap();
            assert_eq!(f, g);
        }
        // cyclotomic coefficients round-trip through parentheses
        let f = parse_homog_poly("x^2 - (1+z(6))*x*y + z(6)*y^2").unwrap();
        let g = parse_homog_poly(&f.to_string()).unwrap();
        assert_eq!(f, g);
    }
}
