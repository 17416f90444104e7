//! Small expression parser for polynomial literals in element files and CLI
//! arguments, e.g. `Q^2 - 3*Q + 1/2` or `-q^-1 + 2`.

use num_bigint::BigInt;
use num_traits::One;

use super::{Laurent, Rational, Var};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("column {col}: {msg}")]
pub struct ParseError {
    pub col: usize,
    pub msg: String,
}

fn err<T>(col: usize, msg: impl Into<String>) -> Result<T, ParseError> {
    Err(ParseError { col, msg: msg.into() })
}

pub fn parse_rational(s: &str) -> Result<Rational, ParseError> {
    let s = s.trim();
    let (num, den) = match s.split_once('/') {
        Some((n, d)) => (n.trim(), Some(d.trim())),
        None => (s, None),
    };
    let n: BigInt = num
        .parse()
        .map_err(|_| ParseError { col: 0, msg: format!("bad integer `{num}`") })?;
    let d: BigInt = match den {
        Some(d) => d
            .parse()
            .map_err(|_| ParseError { col: 0, msg: format!("bad integer `{d}`") })?,
        None => BigInt::one(),
    };
    if d == BigInt::from(0) {
        return err(0, "zero denominator");
    }
    Ok(Rational::new(n, d))
}

struct Cursor<'a> {
    bytes: &'a [u8],
    pos: usize,
}

impl<'a> Cursor<'a> {
    fn skip_ws(&mut self) {
        while self.pos < self.bytes.len() && self.bytes[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.bytes.get(self.pos).copied()
    }

    fn bump(&mut self) -> Option<u8> {
        let c = self.peek();
        if c.is_some() {
            self.pos += 1;
        }
        c
    }

    fn integer(&mut self) -> Result<BigInt, ParseError> {
        self.skip_ws();
        let start = self.pos;
        if self.bytes.get(self.pos) == Some(&b'-') {
            self.pos += 1;
        }
        while self.pos < self.bytes.len() && self.bytes[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if self.pos == start || (self.pos == start + 1 && self.bytes[start] == b'-') {
            return err(start + 1, "expected an integer");
        }
        let text = std::str::from_utf8(&self.bytes[start..self.pos]).unwrap();
        Ok(text.parse().unwrap())
    }
}

/// Parse a polynomial in the given variable. Terms look like `3/2*Q^-2`,
/// `Q^3`, `-Q`, or bare rationals, joined by `+`/`-`.
pub fn parse_laurent(input: &str, var: Var) -> Result<Laurent, ParseError> {
    let mut cur = Cursor { bytes: input.as_bytes(), pos: 0 };
    let mut acc = Laurent::zero(var);
    let mut first = true;
    loop {
        let sign = match cur.peek() {
            None if first => return err(1, "empty polynomial"),
            None => break,
            Some(b'+') => {
                cur.bump();
                Rational::one()
            }
            Some(b'-') => {
                cur.bump();
                -Rational::one()
            }
            Some(_) if first => Rational::one(),
            Some(c) => {
                return err(cur.pos + 1, format!("expected `+` or `-`, found `{}`", c as char))
            }
        };
        first = false;
        acc = acc
            .checked_add(&parse_term(&mut cur, var)?.scale(&sign))
            .expect("same variable");
        if cur.peek().is_none() {
            break;
        }
    }
    Ok(acc)
}

fn parse_term(cur: &mut Cursor, var: Var) -> Result<Laurent, ParseError> {
    let mut coeff = Rational::one();
    let mut have_coeff = false;
    if matches!(cur.peek(), Some(c) if c.is_ascii_digit()) {
        let n = cur.integer()?;
        let d = if cur.peek() == Some(b'/') {
            cur.bump();
            cur.integer()?
        } else {
            BigInt::one()
        };
        if d == BigInt::from(0) {
            return err(cur.pos, "zero denominator");
        }
        coeff = Rational::new(n, d);
        have_coeff = true;
        if cur.peek() == Some(b'*') {
            cur.bump();
        } else if !matches!(cur.peek(), Some(c) if (c as char).is_ascii_alphabetic()) {
            return Ok(Laurent::constant(var, coeff));
        }
    }
    match cur.peek() {
        Some(c) if (c as char).is_ascii_alphabetic() => {
            let col = cur.pos + 1;
            cur.bump();
            let sym = (c as char).to_string();
            let v = Var::from_symbol(&sym)
                .ok_or(ParseError { col, msg: format!("unknown variable `{sym}`") })?;
            if v != var {
                return err(col, format!("expected variable `{}`, found `{sym}`", var.symbol()));
            }
            let exp = if cur.peek() == Some(b'^') {
                cur.bump();
                let e = cur.integer()?;
                i64::try_from(e).map_err(|_| ParseError { col: cur.pos, msg: "exponent out of range".into() })?
            } else {
                1
            };
            Ok(Laurent::monomial(var, exp, coeff))
        }
        _ if have_coeff => Ok(Laurent::constant(var, coeff)),
        other => err(
            cur.pos + 1,
            format!(
                "expected a term, found `{}`",
                other.map(|c| (c as char).to_string()).unwrap_or_else(|| "end of input".into())
            ),
        ),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::{rat, ratio};

    #[test]
    fn parses_typical_inputs() {
        let p = parse_laurent("Q^2 - 3*Q + 1/2", Var::BigQ).unwrap();
        let expected = Laurent::from_terms(
            Var::BigQ,
            [(2, rat(1)), (1, rat(-3)), (0, ratio(1, 2))],
        );
        assert_eq!(p, expected);
        let p = parse_laurent("q^1 + 1 + q^-1", Var::SmallQ).unwrap();
        assert_eq!(p.to_string(), "q^1 + 1 + q^-1");
        assert_eq!(parse_laurent("-d", Var::D).unwrap(), Laurent::monomial(Var::D, 1, rat(-1)));
        assert_eq!(parse_laurent("7", Var::X).unwrap(), Laurent::int(Var::X, 7));
    }

    #[test]
    fn roundtrips_display() {
        for s in ["Q^3 - 2*Q^2 + 5", "q^2 + 1/3*q^-2", "0 + 0"] {
            let p = parse_laurent(s, Var::from_symbol(&s.chars().find(|c| c.is_alphabetic()).map(|c| c.to_string()).unwrap_or("Q".into())).unwrap_or(Var::BigQ)).unwrap();
            let again = parse_laurent(&p.to_string(), p.var()).unwrap();
            assert_eq!(p, again);
        }
    }

    #[test]
    fn reports_column() {
        let e = parse_laurent("Q^2 + * 3", Var::BigQ).unwrap_err();
        assert!(e.col > 0);
        let e = parse_laurent("d^2", Var::BigQ).unwrap_err();
        assert!(e.msg.contains("expected variable"));
    }
}
