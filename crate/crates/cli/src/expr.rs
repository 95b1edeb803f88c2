//! Polynomial expression parser and canonical printer.
//!
//! Grammar: rational coefficients (`3/2`), variable powers (`x^2`), products
//! joined by `*`, sums with `+` and `-`. Vectors are written either in
//! bracket form `[f1, f2, …]` or as sums of terms carrying a component
//! marker `e1, …, em` (exactly one marker per term, to the first power).
//!
//! Printing is canonical: terms in graded-lexicographic order (total degree
//! descending, ties by descending exponent), explicit rational coefficients.
//! `parse(print(p)) = p` holds for every polynomial.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use betti::poly::{Exponent, Polynomial, Scalar};

/// Position-tagged parse error. Positions are byte column offsets from the
/// start of the line, 0-based; lines are 1-based.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParseError {
    pub line: usize,
    pub col: usize,
    pub message: String,
}

impl ParseError {
    fn new(line: usize, col: usize, message: impl Into<String>) -> Self {
        ParseError {
            line,
            col,
            message: message.into(),
        }
    }
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "syntax error at line {}, position {}: {}",
            self.line, self.col, self.message
        )
    }
}

impl std::error::Error for ParseError {}

/// The declared variables of a problem, in order.
#[derive(Clone, Debug)]
pub struct VarSet {
    names: Vec<String>,
}

impl VarSet {
    pub fn new(names: Vec<String>) -> Self {
        VarSet { names }
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

    pub fn name(&self, i: usize) -> &str {
        &self.names[i]
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
enum Token {
    Ident(String),
    Int(String),
    Plus,
    Minus,
    Star,
    Caret,
    Slash,
    LBracket,
    RBracket,
    Comma,
    End,
}

struct Lexer<'a> {
    src: &'a [u8],
    pos: usize,
    line: usize,
    col: usize,
}

impl<'a> Lexer<'a> {
    fn new(src: &'a str) -> Self {
        Lexer {
            src: src.as_bytes(),
            pos: 0,
            line: 1,
            col: 0,
        }
    }

    fn skip_whitespace(&mut self) {
        while self.pos < self.src.len() {
            match self.src[self.pos] {
                b'\n' => {
                    self.pos += 1;
                    self.line += 1;
                    self.col = 0;
                }
                b' ' | b'\t' | b'\r' => {
                    self.pos += 1;
                    self.col += 1;
                }
                _ => break,
            }
        }
    }

    fn next_token(&mut self) -> Result<(Token, usize, usize), ParseError> {
        self.skip_whitespace();
        let (line, col) = (self.line, self.col);
        if self.pos >= self.src.len() {
            return Ok((Token::End, line, col));
        }
        let c = self.src[self.pos];
        let simple = match c {
            b'+' => Some(Token::Plus),
            b'-' => Some(Token::Minus),
            b'*' => Some(Token::Star),
            b'^' => Some(Token::Caret),
            b'/' => Some(Token::Slash),
            b'[' => Some(Token::LBracket),
            b']' => Some(Token::RBracket),
            b',' => Some(Token::Comma),
            _ => None,
        };
        if let Some(t) = simple {
            self.pos += 1;
            self.col += 1;
            return Ok((t, line, col));
        }
        if c.is_ascii_digit() {
            let start = self.pos;
            while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
                self.pos += 1;
                self.col += 1;
            }
            let text = std::str::from_utf8(&self.src[start..self.pos]).unwrap();
            return Ok((Token::Int(text.to_string()), line, col));
        }
        if c.is_ascii_alphabetic() || c == b'_' {
            let start = self.pos;
            while self.pos < self.src.len()
                && (self.src[self.pos].is_ascii_alphanumeric() || self.src[self.pos] == b'_')
            {
                self.pos += 1;
                self.col += 1;
            }
            let text = std::str::from_utf8(&self.src[start..self.pos]).unwrap();
            return Ok((Token::Ident(text.to_string()), line, col));
        }
        Err(ParseError::new(
            line,
            col,
            format!("unexpected character '{}'", c as char),
        ))
    }
}

struct Parser {
    tokens: Vec<(Token, usize, usize)>,
    cursor: usize,
    n_vars: usize,
}

impl Parser {
    fn new(src: &str, n_vars: usize) -> Result<Self, ParseError> {
        let mut lexer = Lexer::new(src);
        let mut tokens = Vec::new();
        loop {
            let t = lexer.next_token()?;
            let end = t.0 == Token::End;
            tokens.push(t);
            if end {
                break;
            }
        }
        Ok(Parser {
            tokens,
            cursor: 0,
            n_vars,
        })
    }

    fn peek(&self) -> &(Token, usize, usize) {
        &self.tokens[self.cursor]
    }

    fn advance(&mut self) -> (Token, usize, usize) {
        let t = self.tokens[self.cursor].clone();
        if self.cursor + 1 < self.tokens.len() {
            self.cursor += 1;
        }
        t
    }

    fn error_here(&self, message: impl Into<String>) -> ParseError {
        let (_, line, col) = self.peek();
        ParseError::new(*line, *col, message)
    }

    /// expr := [sign] term { sign term }
    fn expr(&mut self, lookup: &dyn Fn(&str) -> Option<usize>) -> Result<Polynomial, ParseError> {
        let mut negate = false;
        if matches!(self.peek().0, Token::Minus) {
            self.advance();
            negate = true;
        } else if matches!(self.peek().0, Token::Plus) {
            self.advance();
        }
        let mut total = self.term(lookup, negate)?;
        loop {
            match self.peek().0 {
                Token::Plus => {
                    self.advance();
                    let t = self.term(lookup, false)?;
                    total = &total + &t;
                }
                Token::Minus => {
                    self.advance();
                    let t = self.term(lookup, true)?;
                    total = &total + &t;
                }
                _ => return Ok(total),
            }
        }
    }

    /// term := factor { '*' factor }
    fn term(
        &mut self,
        lookup: &dyn Fn(&str) -> Option<usize>,
        negate: bool,
    ) -> Result<Polynomial, ParseError> {
        let mut coeff = if negate {
            -Scalar::one()
        } else {
            Scalar::one()
        };
        let mut exponent = vec![0u32; self.n_vars];
        self.factor(lookup, &mut coeff, &mut exponent)?;
        while matches!(self.peek().0, Token::Star) {
            self.advance();
            self.factor(lookup, &mut coeff, &mut exponent)?;
        }
        Ok(Polynomial::monomial(Exponent::new(exponent), coeff))
    }

    /// factor := number | varpow
    fn factor(
        &mut self,
        lookup: &dyn Fn(&str) -> Option<usize>,
        coeff: &mut Scalar,
        exponent: &mut [u32],
    ) -> Result<(), ParseError> {
        match self.peek().0.clone() {
            Token::Int(text) => {
                self.advance();
                let numer: BigInt = text.parse().expect("digits");
                let denom = if matches!(self.peek().0, Token::Slash) {
                    self.advance();
                    match self.peek().0.clone() {
                        Token::Int(d) => {
                            let (_, line, col) = *self.peek();
                            self.advance();
                            let d: BigInt = d.parse().expect("digits");
                            if d.is_zero() {
                                return Err(ParseError::new(line, col, "zero denominator"));
                            }
                            d
                        }
                        _ => return Err(self.error_here("expected a denominator")),
                    }
                } else {
                    BigInt::one()
                };
                *coeff *= Scalar::new(numer, denom);
                Ok(())
            }
            Token::Ident(name) => {
                let (_, line, col) = *self.peek();
                self.advance();
                let Some(var) = lookup(&name) else {
                    return Err(ParseError::new(
                        line,
                        col,
                        format!("unknown variable '{name}'"),
                    ));
                };
                let power = if matches!(self.peek().0, Token::Caret) {
                    self.advance();
                    match self.peek().0.clone() {
                        Token::Int(e) => {
                            let (_, eline, ecol) = *self.peek();
                            self.advance();
                            if matches!(self.peek().0, Token::Slash) {
                                let (_, sline, scol) = *self.peek();
                                return Err(ParseError::new(
                                    sline,
                                    scol,
                                    "non-integer exponent",
                                ));
                            }
                            e.parse::<u32>().map_err(|_| {
                                ParseError::new(eline, ecol, "exponent out of range")
                            })?
                        }
                        Token::Minus => {
                            return Err(self.error_here("non-integer exponent"))
                        }
                        _ => return Err(self.error_here("expected an exponent")),
                    }
                } else {
                    1
                };
                exponent[var] += power;
                Ok(())
            }
            _ => Err(self.error_here("expected a term")),
        }
    }

    fn expect_end(&mut self) -> Result<(), ParseError> {
        if matches!(self.peek().0, Token::End) {
            Ok(())
        } else {
            Err(self.error_here("unexpected trailing input"))
        }
    }
}

/// Parse a polynomial over the declared variables.
pub fn parse_polynomial(src: &str, vars: &VarSet) -> Result<Polynomial, ParseError> {
    let mut parser = Parser::new(src, vars.len())?;
    let lookup = |name: &str| vars.index_of(name);
    let p = parser.expr(&lookup)?;
    parser.expect_end()?;
    Ok(p)
}

/// Parse a module vector of the given rank: bracket form `[f1, …]` or the
/// marker form `f1*e1 + … + fm*em`.
pub fn parse_vector(
    src: &str,
    vars: &VarSet,
    rank: usize,
) -> Result<Vec<Polynomial>, ParseError> {
    let mut parser = Parser::new(src, vars.len())?;
    if matches!(parser.peek().0, Token::LBracket) {
        let (_, bline, bcol) = *parser.peek();
        parser.advance();
        let lookup = |name: &str| vars.index_of(name);
        let mut components = Vec::new();
        loop {
            components.push(parser.expr(&lookup)?);
            match parser.advance() {
                (Token::Comma, ..) => continue,
                (Token::RBracket, ..) => break,
                (_, line, col) => {
                    return Err(ParseError::new(line, col, "expected ',' or ']'"))
                }
            }
        }
        parser.expect_end()?;
        if components.len() != rank {
            return Err(ParseError::new(
                bline,
                bcol,
                format!("expected {rank} components, found {}", components.len()),
            ));
        }
        return Ok(components);
    }

    // marker form: parse over variables extended by e1..e<rank>, then split
    let marker_index = |name: &str| -> Option<usize> {
        let digits = name.strip_prefix('e')?;
        if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
            return None;
        }
        let i: usize = digits.parse().ok()?;
        (1..=rank).contains(&i).then(|| i - 1)
    };
    let mut parser = Parser::new(src, vars.len() + rank)?;
    let lookup = |name: &str| {
        vars.index_of(name)
            .or_else(|| marker_index(name).map(|i| vars.len() + i))
    };
    let p = parser.expr(&lookup)?;
    parser.expect_end()?;

    let mut components = vec![Polynomial::zero(vars.len()); rank];
    for (alpha, c) in p.terms() {
        let entries = alpha.entries();
        let marker_part = &entries[vars.len()..];
        let total: u32 = marker_part.iter().sum();
        if total != 1 {
            return Err(ParseError::new(
                1,
                0,
                format!(
                    "every term must carry exactly one component marker e1..e{rank} \
                     (offending term has marker degree {total})"
                ),
            ));
        }
        let j = marker_part.iter().position(|&e| e == 1).unwrap();
        let base = Exponent::new(entries[..vars.len()].to_vec());
        components[j] = &components[j] + &Polynomial::monomial(base, c.clone());
    }
    Ok(components)
}

fn format_scalar(c: &Scalar) -> String {
    if c.denom().is_one() {
        c.numer().to_string()
    } else {
        format!("{}/{}", c.numer(), c.denom())
    }
}

fn format_monomial(alpha: &Exponent, vars: &VarSet) -> Option<String> {
    let parts: Vec<String> = alpha
        .entries()
        .iter()
        .enumerate()
        .filter(|(_, &e)| e > 0)
        .map(|(i, &e)| {
            if e == 1 {
                vars.name(i).to_string()
            } else {
                format!("{}^{}", vars.name(i), e)
            }
        })
        .collect();
    if parts.is_empty() {
        None
    } else {
        Some(parts.join("*"))
    }
}

/// Canonical printing: graded-lexicographic term order (total degree
/// descending, ties by descending exponent tuple), explicit rationals.
pub fn print_polynomial(p: &Polynomial, vars: &VarSet) -> String {
    if p.is_zero() {
        return "0".to_string();
    }
    let mut terms: Vec<(&Exponent, &Scalar)> = p.terms().collect();
    terms.sort_by(|(a, _), (b, _)| {
        b.total()
            .cmp(&a.total())
            .then_with(|| b.entries().cmp(a.entries()))
    });
    let mut out = String::new();
    for (i, (alpha, c)) in terms.iter().enumerate() {
        let negative = c.is_negative();
        let magnitude = if negative { -(*c).clone() } else { (*c).clone() };
        if i == 0 {
            if negative {
                out.push('-');
            }
        } else if negative {
            out.push_str(" - ");
        } else {
            out.push_str(" + ");
        }
        match format_monomial(alpha, vars) {
            None => out.push_str(&format_scalar(&magnitude)),
            Some(vars_part) => {
                if magnitude.is_one() {
                    out.push_str(&vars_part);
                } else {
                    out.push_str(&format_scalar(&magnitude));
                    out.push('*');
                    out.push_str(&vars_part);
                }
            }
        }
    }
    out
}

/// Print a vector: bare polynomial for rank one, bracket form otherwise.
pub fn print_vector(components: &[Polynomial], vars: &VarSet) -> String {
    if components.len() == 1 {
        print_polynomial(&components[0], vars)
    } else {
        let parts: Vec<String> = components.iter().map(|p| print_polynomial(p, vars)).collect();
        format!("[{}]", parts.join(", "))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use betti::poly::rat;

    fn xy() -> VarSet {
        VarSet::new(vec!["x".into(), "y".into()])
    }

    #[test]
    fn parse_basic_examples() {
        let vars = xy();
        let p = parse_polynomial("x^2 + 2*x*y", &vars).unwrap();
        assert_eq!(p.coeff(&Exponent::new(vec![2, 0])), rat(1, 1));
        assert_eq!(p.coeff(&Exponent::new(vec![1, 1])), rat(2, 1));
        assert_eq!(p.num_terms(), 2);

        let p = parse_polynomial("3/2*y^3", &vars).unwrap();
        assert_eq!(p.coeff(&Exponent::new(vec![0, 3])), rat(3, 2));
        assert_eq!(p.num_terms(), 1);
    }

    #[test]
    fn parse_error_positions() {
        let vars = xy();
        let err = parse_polynomial("x + ", &vars).unwrap_err();
        assert_eq!((err.line, err.col), (1, 4));

        let err = parse_polynomial("x + z", &vars).unwrap_err();
        assert_eq!((err.line, err.col), (1, 4));
        assert!(err.message.contains("unknown variable"));

        let err = parse_polynomial("x^1/2", &vars).unwrap_err();
        assert!(err.message.contains("non-integer exponent"));

        let err = parse_polynomial("x^-1", &vars).unwrap_err();
        assert!(err.message.contains("non-integer exponent"));

        let err = parse_polynomial("1/0", &vars).unwrap_err();
        assert!(err.message.contains("zero denominator"));
    }

    #[test]
    fn parse_signs_and_products() {
        let vars = xy();
        let p = parse_polynomial("-x + y - 2", &vars).unwrap();
        assert_eq!(p.coeff(&Exponent::new(vec![1, 0])), rat(-1, 1));
        assert_eq!(p.coeff(&Exponent::new(vec![0, 1])), rat(1, 1));
        assert_eq!(p.coeff(&Exponent::new(vec![0, 0])), rat(-2, 1));

        // coefficient folding and repeated variables
        let p = parse_polynomial("2*x*3*x", &vars).unwrap();
        assert_eq!(p.coeff(&Exponent::new(vec![2, 0])), rat(6, 1));
    }

    #[test]
    fn parse_vectors_both_forms() {
        let vars = xy();
        let bracket = parse_vector("[x, y^2]", &vars, 2).unwrap();
        let marker = parse_vector("x*e1 + y^2*e2", &vars, 2).unwrap();
        assert_eq!(bracket, marker);

        let err = parse_vector("[x]", &vars, 2).unwrap_err();
        assert!(err.message.contains("expected 2 components"));

        let err = parse_vector("x*e1 + y", &vars, 2).unwrap_err();
        assert!(err.message.contains("component marker"));

        let err = parse_vector("x*e1*e2", &vars, 2).unwrap_err();
        assert!(err.message.contains("component marker"));
    }

    #[test]
    fn print_canonical_order() {
        let vars = xy();
        let p = parse_polynomial("y^2 - x^2 + 3/2*x*y + 1", &vars).unwrap();
        assert_eq!(print_polynomial(&p, &vars), "-x^2 + 3/2*x*y + y^2 + 1");
        assert_eq!(print_polynomial(&Polynomial::zero(2), &vars), "0");
    }

    #[test]
    fn print_then_parse_round_trip() {
        let vars = xy();
        for src in ["x^2 + 2*x*y", "3/2*y^3", "-x - 1/2", "x*y - y*x"] {
            let p = parse_polynomial(src, &vars).unwrap();
            let printed = print_polynomial(&p, &vars);
            let q = parse_polynomial(&printed, &vars).unwrap();
            assert_eq!(p, q, "round trip failed for {src}");
        }
    }
}
