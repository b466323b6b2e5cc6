//! Text grammar for polynomials and dual elements.
//!
//! ```text
//! poly  := '-'? term (('+'|'-') term)*
//! term  := coeff? mono?          (at least one of the two)
//! mono  := var ('^' int)? ('*'? var ('^' int)?)*
//! var   := 'x' int               (indices start at 1)
//! coeff := int ('/' int)?
//! ```
//!
//! The single-letter aliases `x, y, z, w, u, v` are accepted on input for
//! `x1..x6`.  Output (`Display` on [`Polynomial`]) always uses indexed
//! names and is a fixed point of parse-then-print.

use crate::exact::Rational;
use crate::poly::{DualElement, Monomial, Polynomial, VARIABLE_ALIASES};
use num_bigint::BigInt;
use num_traits::Zero;
use std::fmt;

/// A syntax error with its 1-based column in the offending string.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseError {
    pub column: usize,
    pub message: String,
}

impl ParseError {
    fn new(column: usize, message: impl Into<String>) -> Self {
        ParseError {
            column,
            message: message.into(),
        }
    }
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "column {}: {}", self.column, self.message)
    }
}

impl std::error::Error for ParseError {}

/// One parsed term before variable arity is fixed: a coefficient and
/// `(1-based variable index, exponent)` factors.
struct RawTerm {
    coeff: Rational,
    factors: Vec<(usize, u32)>,
}

struct Scanner<'a> {
    bytes: &'a [u8],
    pos: usize,
}

impl<'a> Scanner<'a> {
    fn new(input: &'a str) -> Self {
        Scanner {
            bytes: input.as_bytes(),
            pos: 0,
        }
    }

    fn skip_ws(&mut self) {
        while self.pos < self.bytes.len() && self.bytes[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.bytes.get(self.pos).copied()
    }

    /// Next byte without whitespace skipping (for alias-vs-index decisions).
    fn peek_raw(&self) -> Option<u8> {
        self.bytes.get(self.pos).copied()
    }

    fn column(&self) -> usize {
        self.pos + 1
    }

    fn error(&self, message: impl Into<String>) -> ParseError {
        ParseError::new(self.column(), message)
    }

    fn integer(&mut self) -> Result<BigInt, ParseError> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.bytes.len() && self.bytes[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if self.pos == start {
            return Err(self.error("expected an integer"));
        }
        let digits = std::str::from_utf8(&self.bytes[start..self.pos]).expect("ascii digits");
        Ok(digits.parse::<BigInt>().expect("digits parse as BigInt"))
    }

    fn small_integer(&mut self) -> Result<u32, ParseError> {
        let col = self.column();
        let n = self.integer()?;
        u32::try_from(&n).map_err(|_| ParseError::new(col, format!("integer {n} is too large")))
    }

    /// Parse a variable: `x<int>` or a single-letter alias.
    fn variable(&mut self) -> Result<usize, ParseError> {
        self.skip_ws();
        let col = self.column();
        let Some(c) = self.peek_raw() else {
            return Err(self.error("expected a variable"));
        };
        let alias_pos = VARIABLE_ALIASES.iter().position(|&a| a as u8 == c);
        let Some(alias_index) = alias_pos else {
            return Err(ParseError::new(col, format!("unexpected character '{}'", c as char)));
        };
        self.pos += 1;
        if c == b'x' && self.peek_raw().is_some_and(|d| d.is_ascii_digit()) {
            let index = self.small_integer()? as usize;
            if index == 0 {
                return Err(ParseError::new(col, "variable indices start at x1"));
            }
            return Ok(index);
        }
        if self.peek_raw().is_some_and(|d| d.is_ascii_digit()) {
            return Err(self.error(format!(
                "alias variable '{}' takes no index; use x<k> for indexed variables",
                c as char
            )));
        }
        Ok(alias_index + 1)
    }

    fn term(&mut self) -> Result<RawTerm, ParseError> {
        let mut coeff = Rational::from_integer(1.into());
        let mut saw_anything = false;
        if self.peek().is_some_and(|c| c.is_ascii_digit()) {
            let numer = self.integer()?;
            let coeff_value = if self.peek() == Some(b'/') {
                self.pos += 1;
                let col = self.column();
                let denom = self.integer()?;
                if denom.is_zero() {
                    return Err(ParseError::new(col, "zero denominator"));
                }
                Rational::new(numer, denom)
            } else {
                Rational::from_integer(numer)
            };
            coeff = coeff_value;
            saw_anything = true;
            // Tolerate an explicit '*' between coefficient and monomial.
            if self.peek() == Some(b'*') {
                self.pos += 1;
                if !self.peek().is_some_and(|c| c.is_ascii_alphabetic()) {
                    return Err(self.error("expected a variable after '*'"));
                }
            }
        }
        let mut factors = Vec::new();
        loop {
            match self.peek() {
                Some(c) if c.is_ascii_alphabetic() => {
                    let var = self.variable()?;
                    let exp = if self.peek() == Some(b'^') {
                        self.pos += 1;
                        self.small_integer()?
                    } else {
                        1
                    };
                    factors.push((var, exp));
                    saw_anything = true;
                    if self.peek() == Some(b'*') {
                        self.pos += 1;
                        if !self.peek().is_some_and(|c| c.is_ascii_alphabetic()) {
                            return Err(self.error("expected a variable after '*'"));
                        }
                    }
                }
                _ => break,
            }
        }
        if !saw_anything {
            return Err(self.error("expected a term"));
        }
        Ok(RawTerm { coeff, factors })
    }

    fn poly(&mut self) -> Result<Vec<RawTerm>, ParseError> {
        let mut terms = Vec::new();
        let mut negate = false;
        if self.peek() == Some(b'-') {
            self.pos += 1;
            negate = true;
        }
        loop {
            let mut term = self.term()?;
            if negate {
                term.coeff = -term.coeff;
            }
            terms.push(term);
            match self.peek() {
                Some(b'+') => {
                    self.pos += 1;
                    negate = false;
                }
                Some(b'-') => {
                    self.pos += 1;
                    negate = true;
                }
                _ => break,
            }
        }
        Ok(terms)
    }
}

fn max_var(terms: &[RawTerm]) -> usize {
    terms
        .iter()
        .flat_map(|t| t.factors.iter().map(|&(v, _)| v))
        .max()
        .unwrap_or(0)
}

fn materialize(terms: Vec<RawTerm>, num_vars: usize) -> Polynomial {
    let list = terms
        .into_iter()
        .map(|t| {
            let mut exponents = vec![0u32; num_vars];
            for (var, exp) in t.factors {
                exponents[var - 1] += exp;
            }
            (Monomial::from_exponents(exponents), t.coeff)
        })
        .collect();
    Polynomial::from_terms(num_vars, list)
}

fn parse_raw(input: &str) -> Result<(Vec<RawTerm>, usize), ParseError> {
    let mut scanner = Scanner::new(input);
    if scanner.peek().is_none() {
        return Err(scanner.error("empty polynomial"));
    }
    let terms = scanner.poly()?;
    if let Some(c) = scanner.peek() {
        return Err(scanner.error(format!("unexpected character '{}'", c as char)));
    }
    let widest = max_var(&terms);
    Ok((terms, widest))
}

/// Parse a polynomial.  With `num_vars = Some(n)` any variable index above
/// `n` is rejected; with `None` the arity is inferred as the largest index
/// used (at least 1).
pub fn parse_polynomial(input: &str, num_vars: Option<usize>) -> Result<Polynomial, ParseError> {
    let (terms, widest) = parse_raw(input)?;
    let n = match num_vars {
        Some(n) => {
            if widest > n {
                return Err(ParseError::new(
                    1,
                    format!("unknown variable x{widest} (vars = {n})"),
                ));
            }
            n
        }
        None => widest.max(1),
    };
    Ok(materialize(terms, n))
}

/// Parse a comma-separated tuple of polynomials as a [`DualElement`].
/// Arity is shared across components (declared or inferred as the maximum).
pub fn parse_dual_element(input: &str, num_vars: Option<usize>) -> Result<DualElement, ParseError> {
    let pieces: Vec<&str> = input.split(',').collect();
    let mut raw = Vec::with_capacity(pieces.len());
    let mut offset = 0usize;
    let mut widest = 0usize;
    for piece in &pieces {
        let (terms, w) = parse_raw(piece).map_err(|e| ParseError {
            column: offset + e.column,
            message: e.message,
        })?;
        widest = widest.max(w);
        raw.push(terms);
        offset += piece.len() + 1;
    }
    let n = match num_vars {
        Some(n) => {
            if widest > n {
                return Err(ParseError::new(
                    1,
                    format!("unknown variable x{widest} (vars = {n})"),
                ));
            }
            n
        }
        None => widest.max(1),
    };
    let components = raw.into_iter().map(|t| materialize(t, n)).collect();
    Ok(DualElement::new(n, components))
}

/// Parse a comma-separated sequence of nonnegative integers, e.g. `1,3,2,1`.
pub fn parse_sequence(input: &str) -> Result<Vec<usize>, ParseError> {
    let mut out = Vec::new();
    let mut offset = 0usize;
    for piece in input.split(',') {
        let trimmed = piece.trim();
        match trimmed.parse::<usize>() {
            Ok(v) => out.push(v),
            Err(_) => {
                return Err(ParseError::new(
                    offset + 1,
                    format!("expected a nonnegative integer, found '{trimmed}'"),
                ))
            }
        }
        offset += piece.len() + 1;
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{rat, ratio};

    fn mono(exps: &[u32]) -> Monomial {
        Monomial::from_exponents(exps.to_vec())
    }

    #[test]
    fn parses_indexed_variables() {
        let p = parse_polynomial("x1^2+x2^2", None).unwrap();
        assert_eq!(p.num_vars(), 2);
        assert_eq!(p.coefficient(&mono(&[2, 0])), rat(1));
        assert_eq!(p.coefficient(&mono(&[0, 2])), rat(1));
    }

    #[test]
    fn aliases_map_to_first_six_variables() {
        let p = parse_polynomial("x^3+y^3+z^2", None).unwrap();
        assert_eq!(p.num_vars(), 3);
        assert_eq!(p.coefficient(&mono(&[3, 0, 0])), rat(1));
        assert_eq!(p.coefficient(&mono(&[0, 0, 2])), rat(1));
        let q = parse_polynomial("x^2+y^2+z^2+w^2+u^2+v^2", None).unwrap();
        assert_eq!(q.num_vars(), 6);
    }

    #[test]
    fn coefficients_signs_and_fractions() {
        let p = parse_polynomial("-3/2x1^2+x1*x2-5", None).unwrap();
        assert_eq!(p.coefficient(&mono(&[2, 0])), ratio(-3, 2));
        assert_eq!(p.coefficient(&mono(&[1, 1])), rat(1));
        assert_eq!(p.coefficient(&mono(&[0, 0])), rat(-5));
    }

    #[test]
    fn juxtaposition_and_explicit_star_agree() {
        let a = parse_polynomial("2x1x2^3", None).unwrap();
        let b = parse_polynomial("2*x1*x2^3", None).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn canonical_display_round_trips() {
        let inputs = [
            "x1^3+x2^3+x3^2",
            "-x1+2x2",
            "3/2x1^2*x2-1/3",
            "0",
            "x1^2*x2^2+x1*x2",
        ];
        for s in inputs {
            let p = parse_polynomial(s, None).unwrap();
            let printed = p.to_string();
            let reparsed = parse_polynomial(&printed, Some(p.num_vars())).unwrap();
            assert_eq!(reparsed, p, "round trip through `{printed}`");
            assert_eq!(reparsed.to_string(), printed);
        }
    }

    #[test]
    fn arity_check_rejects_unknown_variables() {
        let err = parse_polynomial("x1+x3", Some(2)).unwrap_err();
        assert!(err.message.contains("unknown variable x3"));
    }

    #[test]
    fn error_positions_are_columns() {
        let err = parse_polynomial("x1 + q", None).unwrap_err();
        assert_eq!(err.column, 6);
        let err = parse_polynomial("1/0", None).unwrap_err();
        assert_eq!(err.column, 3);
        assert!(err.message.contains("zero denominator"));
    }

    #[test]
    fn dual_element_components_split_on_commas() {
        let f = parse_dual_element("x1^2+x2^2, x1^3+x2^2", None).unwrap();
        assert_eq!(f.rank(), 2);
        assert_eq!(f.num_vars(), 2);
        assert_eq!(f.to_string(), "x1^2+x2^2, x1^3+x2^2");
    }

    #[test]
    fn zero_and_constant_terms() {
        assert!(parse_polynomial("0", None).unwrap().is_zero());
        let p = parse_polynomial("0*x1+7", None).unwrap();
        assert_eq!(p.to_string(), "7");
    }

    #[test]
    fn sequences_parse() {
        assert_eq!(parse_sequence("1,3,2,1").unwrap(), vec![1, 3, 2, 1]);
        assert!(parse_sequence("1,,2").is_err());
        assert!(parse_sequence("1,a").is_err());
    }
}
