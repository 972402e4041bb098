//! Text grammar for both universes.
//!
//! ```text
//! vars  := ident (',' ident)*
//! ideal := gen (',' gen)*
//! gen   := factor (('*' | ws) factor)*
//! factor:= ident ('^' uint)? | '1'
//!
//! group := 'lex' '(' ('Z' | 'Q') (',' ('Z' | 'Q'))* ')'
//! cut   := ('ge' | 'gt') 'm=' uint 'rho=' rational (',' rational)*
//! ```
//!
//! Errors carry the 1-based line and column of the offending character, so
//! inputs read from files get useful positions too.

use rrclosure::{Component, CutIdeal, CutKind, ExponentVector, MonomialIdeal, Rational, ValueGroup};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("line {line}, column {column}: {message}")]
pub struct ParseError {
    pub line: usize,
    pub column: usize,
    pub message: String,
}

pub type Result<T, E = ParseError> = std::result::Result<T, E>;

struct Cursor {
    chars: Vec<char>,
    /// `(line, column)` of every char, plus one entry for end of input.
    positions: Vec<(usize, usize)>,
    idx: usize,
}

impl Cursor {
    fn new(text: &str) -> Self {
        let chars: Vec<char> = text.chars().collect();
        let mut positions = Vec::with_capacity(chars.len() + 1);
        let (mut line, mut col) = (1, 1);
        for &c in &chars {
            positions.push((line, col));
            if c == '\n' {
                line += 1;
                col = 1;
            } else {
                col += 1;
            }
        }
        positions.push((line, col));
        Cursor { chars, positions, idx: 0 }
    }

    fn peek(&self) -> Option<char> {
        self.chars.get(self.idx).copied()
    }

    fn bump(&mut self) -> Option<char> {
        let c = self.peek()?;
        self.idx += 1;
        Some(c)
    }

    fn at_end(&self) -> bool {
        self.idx >= self.chars.len()
    }

    /// Skips whitespace, reporting whether there was any.
    fn skip_ws(&mut self) -> bool {
        let start = self.idx;
        while self.peek().is_some_and(char::is_whitespace) {
            self.idx += 1;
        }
        self.idx > start
    }

    fn error_at(&self, idx: usize, message: impl Into<String>) -> ParseError {
        let (line, column) = self.positions[idx.min(self.chars.len())];
        ParseError { line, column, message: message.into() }
    }

    fn error(&self, message: impl Into<String>) -> ParseError {
        self.error_at(self.idx, message)
    }

    fn unexpected(&self, expected: &str) -> ParseError {
        match self.peek() {
            Some(c) => self.error(format!("expected {expected}, found `{c}`")),
            None => self.error(format!("expected {expected}, found end of input")),
        }
    }

    fn expect(&mut self, c: char) -> Result<()> {
        if self.peek() == Some(c) {
            self.idx += 1;
            Ok(())
        } else {
            Err(self.unexpected(&format!("`{c}`")))
        }
    }

    fn ident(&mut self) -> Option<String> {
        let start = self.idx;
        if !self.peek().is_some_and(is_ident_start) {
            return None;
        }
        while self.peek().is_some_and(is_ident_char) {
            self.idx += 1;
        }
        Some(self.chars[start..self.idx].iter().collect())
    }

    fn digits(&mut self) -> Option<String> {
        let start = self.idx;
        while self.peek().is_some_and(|c| c.is_ascii_digit()) {
            self.idx += 1;
        }
        (self.idx > start).then(|| self.chars[start..self.idx].iter().collect())
    }

    fn keyword(&mut self, word: &str) -> Result<()> {
        let start = self.idx;
        for w in word.chars() {
            if self.peek() != Some(w) {
                self.idx = start;
                return Err(self.unexpected(&format!("`{word}`")));
            }
            self.idx += 1;
        }
        Ok(())
    }

    fn finish(&mut self) -> Result<()> {
        self.skip_ws();
        if self.at_end() {
            Ok(())
        } else {
            Err(self.unexpected("end of input"))
        }
    }
}

fn is_ident_start(c: char) -> bool {
    c.is_ascii_alphabetic() || c == '_'
}

fn is_ident_char(c: char) -> bool {
    c.is_ascii_alphanumeric() || c == '_'
}

/// A comma-separated list of distinct variable names.
pub fn parse_vars(text: &str) -> Result<Vec<String>> {
    let mut c = Cursor::new(text);
    let mut vars: Vec<String> = Vec::new();
    loop {
        c.skip_ws();
        let start = c.idx;
        let name = c.ident().ok_or_else(|| c.unexpected("a variable name"))?;
        if vars.contains(&name) {
            return Err(c.error_at(start, format!("variable `{name}` listed twice")));
        }
        vars.push(name);
        c.skip_ws();
        match c.peek() {
            Some(',') => {
                c.bump();
            }
            None => return Ok(vars),
            Some(_) => return Err(c.unexpected("`,`")),
        }
    }
}

/// A monomial ideal over `vars`, minimalized.
pub fn parse_poly_ideal(vars: &[String], text: &str) -> Result<MonomialIdeal> {
    let mut c = Cursor::new(text);
    c.skip_ws();
    if c.at_end() {
        return Err(c.error("empty generator list"));
    }
    let mut gens = Vec::new();
    loop {
        gens.push(parse_generator(&mut c, vars)?);
        c.skip_ws();
        match c.peek() {
            None => break,
            Some(',') => {
                c.bump();
                c.skip_ws();
                if c.at_end() {
                    return Err(c.error("expected a generator after `,`"));
                }
            }
            Some(_) => return Err(c.unexpected("`,`, `*` or a factor")),
        }
    }
    MonomialIdeal::minimalize(gens).map_err(|e| c.error_at(0, e.to_string()))
}

fn parse_generator(c: &mut Cursor, vars: &[String]) -> Result<ExponentVector> {
    let mut exps = vec![0i64; vars.len()];
    parse_factor(c, vars, &mut exps)?;
    loop {
        let spaced = c.skip_ws();
        match c.peek() {
            Some('*') => {
                c.bump();
                c.skip_ws();
                parse_factor(c, vars, &mut exps)?;
            }
            Some(ch) if spaced && (is_ident_start(ch) || ch.is_ascii_digit()) => {
                parse_factor(c, vars, &mut exps)?;
            }
            _ => return Ok(ExponentVector::new(exps)),
        }
    }
}

fn parse_factor(c: &mut Cursor, vars: &[String], exps: &mut [i64]) -> Result<()> {
    let start = c.idx;
    if c.peek().is_some_and(|ch| ch.is_ascii_digit()) {
        let lit = c.digits().expect("at least one digit");
        if lit != "1" {
            return Err(c.error_at(start, format!("numeric factor `{lit}` (only `1` is allowed)")));
        }
        return Ok(());
    }
    let name = c.ident().ok_or_else(|| c.unexpected("a variable"))?;
    let slot = vars
        .iter()
        .position(|v| *v == name)
        .ok_or_else(|| c.error_at(start, format!("unknown variable `{name}`")))?;
    let mut exp = 1i64;
    if c.peek() == Some('^') {
        c.bump();
        if c.peek() == Some('-') {
            return Err(c.error("negative exponent"));
        }
        let at = c.idx;
        let digits = c.digits().ok_or_else(|| c.unexpected("an exponent"))?;
        exp = digits
            .parse()
            .map_err(|_| c.error_at(at, format!("exponent `{digits}` is too large")))?;
    }
    exps[slot] = exps[slot]
        .checked_add(exp)
        .ok_or_else(|| c.error_at(start, "exponent overflow"))?;
    Ok(())
}

/// `lex(C1,...,Ck)` with each `Ci` one of `Z`, `Q`.
pub fn parse_group(text: &str) -> Result<ValueGroup> {
    let mut c = Cursor::new(text);
    c.skip_ws();
    c.keyword("lex")?;
    c.skip_ws();
    c.expect('(')?;
    let mut comps = Vec::new();
    loop {
        c.skip_ws();
        match c.peek() {
            Some('Z') => comps.push(Component::Discrete),
            Some('Q') => comps.push(Component::Dense),
            _ => return Err(c.unexpected("`Z` or `Q`")),
        }
        c.bump();
        c.skip_ws();
        match c.peek() {
            Some(',') => {
                c.bump();
            }
            Some(')') => {
                c.bump();
                break;
            }
            _ => return Err(c.unexpected("`,` or `)`")),
        }
    }
    c.finish()?;
    Ok(ValueGroup::new(comps).expect("at least one component"))
}

/// `ge m=<m> rho=<q1,...,qm>` or `gt ...`, canonicalized over `group`.
pub fn parse_val_ideal(group: &ValueGroup, text: &str) -> Result<CutIdeal> {
    let mut c = Cursor::new(text);
    c.skip_ws();
    let start = c.idx;
    let kind = match c.ident().as_deref() {
        Some("ge") => CutKind::Ge,
        Some("gt") => CutKind::Gt,
        _ => {
            c.idx = start;
            return Err(c.unexpected("`ge` or `gt`"));
        }
    };
    c.skip_ws();
    c.keyword("m=")?;
    let m_at = c.idx;
    let m: usize = c
        .digits()
        .ok_or_else(|| c.unexpected("a prefix length"))?
        .parse()
        .map_err(|_| c.error_at(m_at, "prefix length is too large"))?;
    if m == 0 || m > group.rank() {
        return Err(c.error_at(m_at, format!("m = {m} outside 1..={} for {group}", group.rank())));
    }
    c.skip_ws();
    c.keyword("rho=")?;
    let rho_at = c.idx;
    let mut rho = vec![parse_rational(&mut c)?];
    loop {
        c.skip_ws();
        if c.peek() != Some(',') {
            break;
        }
        c.bump();
        c.skip_ws();
        rho.push(parse_rational(&mut c)?);
    }
    c.finish()?;
    if rho.len() != m {
        return Err(c.error_at(rho_at, format!("rho has {} entries but m = {m}", rho.len())));
    }
    CutIdeal::new(group, kind, rho).map_err(|e| c.error_at(rho_at, e.to_string()))
}

fn parse_rational(c: &mut Cursor) -> Result<Rational> {
    let start = c.idx;
    if matches!(c.peek(), Some('-') | Some('+')) {
        c.bump();
    }
    c.digits().ok_or_else(|| c.unexpected("a rational number"))?;
    if c.peek() == Some('/') {
        c.bump();
        c.digits().ok_or_else(|| c.unexpected("a denominator"))?;
    }
    let lit: String = c.chars[start..c.idx].iter().collect();
    lit.parse()
        .map_err(|e: rrclosure::Error| c.error_at(start, format!("`{lit}`: {e}")))
}

/// A parsed ideal of either universe.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum IdealExpr {
    Poly { vars: Vec<String>, ideal: MonomialIdeal },
    Val { group: ValueGroup, cut: CutIdeal },
}

impl IdealExpr {
    pub fn parse_poly(vars: &str, gens: &str) -> Result<Self> {
        let vars = parse_vars(vars)?;
        let ideal = parse_poly_ideal(&vars, gens)?;
        Ok(IdealExpr::Poly { vars, ideal })
    }

    pub fn parse_val(group: &str, cut: &str) -> Result<Self> {
        let group = parse_group(group)?;
        let cut = parse_val_ideal(&group, cut)?;
        Ok(IdealExpr::Val { group, cut })
    }

    pub fn universe(&self) -> &'static str {
        match self {
            IdealExpr::Poly { .. } => "poly",
            IdealExpr::Val { .. } => "val",
        }
    }

    /// The two text fields that parse back to `self`: variables and
    /// generators, or group and cut.
    pub fn print(&self) -> (String, String) {
        match self {
            IdealExpr::Poly { vars, ideal } => (vars.join(","), ideal.display_with(vars)),
            IdealExpr::Val { group, cut } => (group.to_string(), cut.to_string()),
        }
    }

    pub fn reparse(&self) -> Result<Self> {
        let (a, b) = self.print();
        match self {
            IdealExpr::Poly { .. } => Self::parse_poly(&a, &b),
            IdealExpr::Val { .. } => Self::parse_val(&a, &b),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn xy() -> Vec<String> {
        vec!["x".into(), "y".into()]
    }

    #[test]
    fn poly_examples() {
        let i = parse_poly_ideal(&xy(), "x^4, x^3*y, x*y^3, y^4").unwrap();
        assert_eq!(i, MonomialIdeal::from_exponents(&[&[4, 0], &[3, 1], &[1, 3], &[0, 4]]).unwrap());
        let unit = parse_poly_ideal(&["x".to_string()], "x^0").unwrap();
        assert!(unit.is_unit());
        let j = parse_poly_ideal(&xy(), "x^2 y").unwrap();
        assert_eq!(j, MonomialIdeal::from_exponents(&[&[2, 1]]).unwrap());
        assert_eq!(parse_poly_ideal(&xy(), "1").unwrap(), MonomialIdeal::unit(2));
        assert_eq!(parse_poly_ideal(&xy(), "x*x*y").unwrap(), parse_poly_ideal(&xy(), "x^2*y").unwrap());
        let multiline = parse_poly_ideal(&xy(), "x^2,\n  y^3").unwrap();
        assert_eq!(multiline.generators().len(), 2);
    }

    #[test]
    fn poly_errors_carry_positions() {
        let e = parse_poly_ideal(&xy(), "x^2, z*y").unwrap_err();
        assert_eq!((e.line, e.column), (1, 6));
        assert!(e.message.contains("unknown variable `z`"));
        let e = parse_poly_ideal(&xy(), "x^-2").unwrap_err();
        assert_eq!((e.column, e.message.as_str()), (3, "negative exponent"));
        let e = parse_poly_ideal(&xy(), "   ").unwrap_err();
        assert_eq!(e.message, "empty generator list");
        let e = parse_poly_ideal(&xy(), "x,").unwrap_err();
        assert_eq!(e.column, 3);
        let e = parse_poly_ideal(&xy(), "x^2,\n y^").unwrap_err();
        assert_eq!((e.line, e.column), (2, 4));
        let e = parse_poly_ideal(&xy(), "xy").unwrap_err();
        assert!(e.message.contains("unknown variable `xy`"));
        let e = parse_poly_ideal(&xy(), "2*x").unwrap_err();
        assert_eq!(e.column, 1);
        assert!(parse_poly_ideal(&xy(), "x^99999999999999999999").is_err());
    }

    #[test]
    fn vars_errors() {
        assert_eq!(parse_vars("x, y,z").unwrap(), vec!["x", "y", "z"]);
        assert_eq!(parse_vars("x,x").unwrap_err().column, 3);
        assert!(parse_vars("").is_err());
        assert!(parse_vars("x,,y").is_err());
    }

    #[test]
    fn val_examples() {
        let q = parse_group("lex(Q)").unwrap();
        let c = parse_val_ideal(&q, "gt m=1 rho=1").unwrap();
        assert_eq!(c, CutIdeal::gt(&q, &[Rational::one()]).unwrap());
        let zz = parse_group("lex(Z, Z)").unwrap();
        let c = parse_val_ideal(&zz, "gt m=1 rho=0").unwrap();
        assert_eq!(c, CutIdeal::ge(&zz, &[Rational::one()]).unwrap());
        let qz = parse_group("lex(Q,Z)").unwrap();
        let p = parse_val_ideal(&qz, "gt m=1 rho=0").unwrap();
        assert_eq!(p.to_string(), "gt m=1 rho=0");
        assert!(p.is_prime().is_some() && p.is_idempotent());
        let c = parse_val_ideal(&qz, "ge m=2 rho=-1/2, 3").unwrap();
        assert_eq!(c.to_string(), "ge m=2 rho=-1/2,3");
    }

    #[test]
    fn val_errors() {
        let qz = parse_group("lex(Q,Z)").unwrap();
        let e = parse_val_ideal(&qz, "ge m=2 rho=1").unwrap_err();
        assert_eq!(e.column, 12);
        let e = parse_val_ideal(&qz, "ge m=3 rho=1,2,3").unwrap_err();
        assert_eq!(e.column, 6);
        let e = parse_val_ideal(&qz, "geq m=1 rho=1").unwrap_err();
        assert_eq!(e.column, 1);
        let e = parse_val_ideal(&qz, "ge m=1 rho=1/0").unwrap_err();
        assert_eq!(e.column, 12);
        assert!(parse_group("lex(Z,R)").unwrap_err().message.contains("`R`"));
        assert!(parse_group("lex()").is_err());
        assert!(parse_group("lex(Z) x").is_err());
    }
}
