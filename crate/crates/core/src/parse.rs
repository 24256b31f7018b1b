//! Text format for polynomials.
//!
//! Grammar: `+ - * ^` with parentheses, integer or rational (`p/q`)
//! coefficients, and variables drawn from a fixed name table, e.g.
//! `z1*z2 - 3/2*z0^2`. Homogeneous-map components use `z0..zn`, chart
//! polynomials `w1..wn`, elementary-basis symmetric specs `e1..er`.

use num_bigint::BigInt;
use num_traits::One;

use crate::error::{Error, Result};
use crate::poly::MultiPoly;
use crate::scalar::Scalar;

/// Variable name table; index in the vector = variable index in the polynomial.
#[derive(Clone, Debug)]
pub struct VarTable {
    names: Vec<String>,
}

impl VarTable {
    pub fn new(names: Vec<String>) -> Self {
        VarTable { names }
    }

    /// `z0..z{count-1}`.
    pub fn homogeneous(count: usize) -> Self {
        VarTable {
            names: (0..count).map(|i| format!("z{i}")).collect(),
        }
    }

    /// `w1..w{count}`.
    pub fn chart(count: usize) -> Self {
        VarTable {
            names: (1..=count).map(|i| format!("w{i}")).collect(),
        }
    }

    /// `e1..e{count}`.
    pub fn elementary(count: usize) -> Self {
        VarTable {
            names: (1..=count).map(|i| format!("e{i}")).collect(),
        }
    }

    /// `z1..z{count}` (symmetric polynomial in chart eigenvalue variables).
    pub fn symmetric_z(count: usize) -> Self {
        VarTable {
            names: (1..=count).map(|i| format!("z{i}")).collect(),
        }
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    fn index_of(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }
}

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Plus,
    Minus,
    Star,
    Caret,
    LParen,
    RParen,
    Int(BigInt),
    Ident(String),
}

struct Lexer<'a> {
    src: &'a [u8],
    pos: usize,
    toks: Vec<(Tok, usize)>, // token with byte offset
}

fn err_at(src: &str, offset: usize, msg: impl Into<String>) -> Error {
    let mut line = 1;
    let mut col = 1;
    for (i, ch) in src.char_indices() {
        if i >= offset {
            break;
        }
        if ch == '\n' {
            line += 1;
            col = 1;
        } else {
            col += 1;
        }
    }
    Error::Parse {
        line,
        col,
        msg: msg.into(),
    }
}

impl<'a> Lexer<'a> {
    fn lex(src: &'a str) -> Result<Vec<(Tok, usize)>> {
        let mut lx = Lexer {
            src: src.as_bytes(),
            pos: 0,
            toks: Vec::new(),
        };
        while lx.pos < lx.src.len() {
            let c = lx.src[lx.pos] as char;
            let at = lx.pos;
            match c {
                ' ' | '\t' | '\n' | '\r' => lx.pos += 1,
                '+' => lx.push(Tok::Plus, at),
                '-' => lx.push(Tok::Minus, at),
                '*' => lx.push(Tok::Star, at),
                '^' => lx.push(Tok::Caret, at),
                '(' => lx.push(Tok::LParen, at),
                ')' => lx.push(Tok::RParen, at),
                '0'..='9' => {
                    let start = lx.pos;
                    while lx.pos < lx.src.len() && (lx.src[lx.pos] as char).is_ascii_digit() {
                        lx.pos += 1;
                    }
                    let text = &src[start..lx.pos];
                    let n: BigInt = text.parse().expect("digits parse");
                    lx.toks.push((Tok::Int(n), start));
                }
                'a'..='z' | 'A'..='Z' | '_' => {
                    let start = lx.pos;
                    while lx.pos < lx.src.len()
                        && ((lx.src[lx.pos] as char).is_ascii_alphanumeric()
                            || lx.src[lx.pos] == b'_')
                    {
                        lx.pos += 1;
                    }
                    lx.toks
                        .push((Tok::Ident(src[start..lx.pos].to_string()), start));
                }
                '/' => lx.push(Tok::Ident("/".into()), at), // handled by parser as rational sep
                other => return Err(err_at(src, at, format!("unexpected character {other:?}"))),
            }
        }
        Ok(lx.toks)
    }

    fn push(&mut self, t: Tok, at: usize) {
        self.toks.push((t, at));
        self.pos += 1;
    }
}

struct Parser<'a> {
    src: &'a str,
    toks: Vec<(Tok, usize)>,
    pos: usize,
    vars: &'a VarTable,
}

impl<'a> Parser<'a> {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos).map(|(t, _)| t)
    }

    fn offset(&self) -> usize {
        self.toks
            .get(self.pos)
            .map(|(_, o)| *o)
            .unwrap_or(self.src.len())
    }

    fn bump(&mut self) -> Option<Tok> {
        let t = self.toks.get(self.pos).map(|(t, _)| t.clone());
        if t.is_some() {
            self.pos += 1;
        }
        t
    }

    fn fail(&self, msg: impl Into<String>) -> Error {
        err_at(self.src, self.offset(), msg)
    }

    fn expr(&mut self) -> Result<MultiPoly> {
        let mut negate = false;
        if let Some(Tok::Minus) = self.peek() {
            self.bump();
            negate = true;
        } else if let Some(Tok::Plus) = self.peek() {
            self.bump();
        }
        let mut acc = self.term()?;
        if negate {
            acc = -&acc;
        }
        loop {
            match self.peek() {
                Some(Tok::Plus) => {
                    self.bump();
                    let t = self.term()?;
                    acc = &acc + &t;
                }
                Some(Tok::Minus) => {
                    self.bump();
                    let t = self.term()?;
                    acc = &acc - &t;
                }
                _ => break,
            }
        }
        Ok(acc)
    }

    fn term(&mut self) -> Result<MultiPoly> {
        let mut acc = self.factor()?;
        while let Some(Tok::Star) = self.peek() {
            self.bump();
            let f = self.factor()?;
            acc = &acc * &f;
        }
        Ok(acc)
    }

    fn factor(&mut self) -> Result<MultiPoly> {
        if let Some(Tok::Minus) = self.peek() {
            self.bump();
            let f = self.factor()?;
            return Ok(-&f);
        }
        let base = self.atom()?;
        if let Some(Tok::Caret) = self.peek() {
            self.bump();
            match self.bump() {
                Some(Tok::Int(n)) => {
                    let e: usize = n.try_into().map_err(|_| self.fail("exponent too large"))?;
                    Ok(base.pow(e))
                }
                _ => Err(self.fail("expected a nonnegative integer exponent after '^'")),
            }
        } else {
            Ok(base)
        }
    }

    fn atom(&mut self) -> Result<MultiPoly> {
        let nvars = self.vars.len();
        let at = self.offset();
        match self.bump() {
            Some(Tok::Int(n)) => {
                // optional rational tail p/q
                if let Some(Tok::Ident(s)) = self.peek() {
                    if s == "/" {
                        self.bump();
                        match self.bump() {
                            Some(Tok::Int(d)) => {
                                if d == BigInt::from(0) {
                                    return Err(self.fail("zero denominator"));
                                }
                                return Ok(MultiPoly::constant(nvars, Scalar::new(n, d)));
                            }
                            _ => return Err(self.fail("expected integer denominator after '/'")),
                        }
                    }
                }
                Ok(MultiPoly::constant(nvars, Scalar::new(n, BigInt::one())))
            }
            Some(Tok::Ident(name)) => {
                if name == "/" {
                    return Err(err_at(
                        self.src,
                        at,
                        "'/' is only allowed inside a rational literal p/q",
                    ));
                }
                match self.vars.index_of(&name) {
                    Some(i) => Ok(MultiPoly::var(nvars, i)),
                    None => Err(err_at(
                        self.src,
                        at,
                        format!(
                            "unknown variable {:?} (expected one of: {})",
                            name,
                            self.vars.names().join(", ")
                        ),
                    )),
                }
            }
            Some(Tok::LParen) => {
                let inner = self.expr()?;
                match self.bump() {
                    Some(Tok::RParen) => Ok(inner),
                    _ => Err(self.fail("expected ')'")),
                }
            }
            _ => Err(self.fail("expected a coefficient, variable, or '('")),
        }
    }
}

/// Parse a polynomial over the given variable table.
pub fn parse_poly(src: &str, vars: &VarTable) -> Result<MultiPoly> {
    let toks = Lexer::lex(src)?;
    if toks.is_empty() {
        return Err(err_at(src, 0, "empty polynomial"));
    }
    let mut p = Parser {
        src,
        toks,
        pos: 0,
        vars,
    };
    let poly = p.expr()?;
    if p.pos != p.toks.len() {
        return Err(p.fail("trailing input after polynomial"));
    }
    Ok(poly)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{sc, sc_frac};

    #[test]
    fn parses_map_components() {
        let vars = VarTable::homogeneous(3);
        let p = parse_poly("z1*z2 - 3/2*z0^2", &vars).unwrap();
        assert_eq!(
            p.eval(&[sc(2), sc(1), sc(4)]).unwrap(),
            sc(4) - sc_frac(3, 2) * sc(4)
        );
        let q = parse_poly("-z0 + (z1 - z2)^2", &vars).unwrap();
        assert_eq!(q.eval(&[sc(1), sc(3), sc(1)]).unwrap(), sc(3));
    }

    #[test]
    fn round_trips_display() {
        let vars = VarTable::chart(2);
        let p = parse_poly("w1^2*w2 - 1/3*w2 + 4", &vars).unwrap();
        let printed = p.to_string_with(vars.names());
        let again = parse_poly(&printed, &vars).unwrap();
        assert_eq!(p, again);
    }

    #[test]
    fn reports_positions() {
        let vars = VarTable::chart(2);
        let e = parse_poly("w1 + q3", &vars).unwrap_err();
        match e {
            Error::Parse { line, col, .. } => {
                assert_eq!(line, 1);
                assert_eq!(col, 6);
            }
            other => panic!("unexpected error {other:?}"),
        }
        assert!(parse_poly("", &vars).is_err());
        assert!(parse_poly("w1 +", &vars).is_err());
        assert!(parse_poly("w1 ^ w2", &vars).is_err());
        assert!(parse_poly("1/0", &vars).is_err());
        assert!(parse_poly("w1 w2", &vars).is_err()); // implicit product is not in the grammar
    }

    #[test]
    fn elementary_table() {
        let vars = VarTable::elementary(2);
        let p = parse_poly("e1^2 - 2*e2", &vars).unwrap();
        assert_eq!(p.eval(&[sc(3), sc(2)]).unwrap(), sc(5));
    }
}
