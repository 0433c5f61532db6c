//! Canonical text form for scalars.
//!
//! Laurent elements print with terms in descending exponent order, e.g.
//! `(-1)*q^(3/4) + 2*q^(-1/4)`; a genuine ratio prints as `(num) / (den)`.
//! Coefficients that are not plain nonnegative integers (or a bare `i`) are
//! parenthesized, so the only unparenthesized `/` in a canonical string is
//! the ratio separator. The parser accepts exactly this grammar, plus
//! unparenthesized integer exponents (`q^2`) and arbitrary whitespace.

use num::rational::Ratio;
use num::{BigInt, BigRational, One, Zero};

use super::gauss::GaussRat;
use super::laurent::{QExp, QLaurent};
use super::qscalar::QScalar;
use crate::error::{Error, Result};

fn render_exp(e: &QExp) -> String {
    if e.denom() == &1 {
        format!("{}", e.numer())
    } else {
        format!("{}/{}", e.numer(), e.denom())
    }
}

fn coeff_factor(c: &GaussRat) -> String {
    if c.is_plain() {
        c.render()
    } else if c.is_i() {
        "i".to_string()
    } else {
        format!("({})", c.render())
    }
}

pub fn render_laurent(p: &QLaurent) -> String {
    if p.is_zero() {
        return "0".to_string();
    }
    let mut terms: Vec<(QExp, GaussRat)> = p.terms().map(|(e, c)| (*e, c.clone())).collect();
    terms.reverse();
    let parts: Vec<String> = terms
        .iter()
        .map(|(e, c)| {
            if e.is_zero() {
                coeff_factor(c)
            } else if c.is_one() {
                format!("q^({})", render_exp(e))
            } else {
                format!("{}*q^({})", coeff_factor(c), render_exp(e))
            }
        })
        .collect();
    parts.join(" + ")
}

pub fn render_scalar(x: &QScalar) -> String {
    if x.is_laurent() {
        render_laurent(x.num())
    } else {
        format!("({}) / ({})", render_laurent(x.num()), render_laurent(x.den()))
    }
}

#[derive(Clone, PartialEq, Eq, Debug)]
enum Tok {
    Int(BigInt),
    Q,
    I,
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    LParen,
    RParen,
}

fn tokenize(s: &str) -> Result<Vec<Tok>> {
    let mut out = Vec::new();
    let bytes: Vec<char> = s.chars().collect();
    let mut k = 0;
    while k < bytes.len() {
        let c = bytes[k];
        match c {
            ' ' | '\t' | '\n' | '\r' => k += 1,
            '+' => {
                out.push(Tok::Plus);
                k += 1;
            }
            '-' => {
                out.push(Tok::Minus);
                k += 1;
            }
            '*' => {
                out.push(Tok::Star);
                k += 1;
            }
            '/' => {
                out.push(Tok::Slash);
                k += 1;
            }
            '^' => {
                out.push(Tok::Caret);
                k += 1;
            }
            '(' => {
                out.push(Tok::LParen);
                k += 1;
            }
            ')' => {
                out.push(Tok::RParen);
                k += 1;
            }
            'q' => {
                out.push(Tok::Q);
                k += 1;
            }
            'i' => {
                out.push(Tok::I);
                k += 1;
            }
            '0'..='9' => {
                let start = k;
                while k < bytes.len() && bytes[k].is_ascii_digit() {
                    k += 1;
                }
                let text: String = bytes[start..k].iter().collect();
                let n = text
                    .parse::<BigInt>()
                    .map_err(|e| Error::Parse(format!("bad integer {text}: {e}")))?;
                out.push(Tok::Int(n));
            }
            other => return Err(Error::Parse(format!("unexpected character '{other}'"))),
        }
    }
    Ok(out)
}

struct Parser {
    toks: Vec<Tok>,
    pos: usize,
}

impl Parser {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos)
    }

    fn next(&mut self) -> Option<Tok> {
        let t = self.toks.get(self.pos).cloned();
        if t.is_some() {
            self.pos += 1;
        }
        t
    }

    fn expect(&mut self, t: Tok) -> Result<()> {
        match self.next() {
            Some(got) if got == t => Ok(()),
            got => Err(Error::Parse(format!("expected {t:?}, found {got:?}"))),
        }
    }

    fn parse_uint(&mut self) -> Result<BigInt> {
        match self.next() {
            Some(Tok::Int(n)) => Ok(n),
            got => Err(Error::Parse(format!("expected integer, found {got:?}"))),
        }
    }

    /// `int [ '/' int ]`, with optional leading minus.
    fn parse_rational(&mut self) -> Result<BigRational> {
        let neg = matches!(self.peek(), Some(Tok::Minus));
        if neg {
            self.next();
        }
        let num = self.parse_uint()?;
        let den = if matches!(self.peek(), Some(Tok::Slash)) {
            self.next();
            self.parse_uint()?
        } else {
            BigInt::one()
        };
        if den.is_zero() {
            return Err(Error::Parse("zero denominator in rational".into()));
        }
        let r = BigRational::new(num, den);
        Ok(if neg { -r } else { r })
    }

    /// Gaussian rational sum; called just after consuming '('.
    fn parse_gauss_group(&mut self) -> Result<GaussRat> {
        let mut acc = GaussRat::zero();
        let mut sign = 1i64;
        if matches!(self.peek(), Some(Tok::Minus)) {
            self.next();
            sign = -1;
        }
        loop {
            let part = self.parse_gauss_part()?;
            let signed = if sign < 0 { -&part } else { part };
            acc = &acc + &signed;
            match self.peek() {
                Some(Tok::Plus) => {
                    self.next();
                    sign = 1;
                }
                Some(Tok::Minus) => {
                    self.next();
                    sign = -1;
                }
                Some(Tok::RParen) => {
                    self.next();
                    return Ok(acc);
                }
                got => return Err(Error::Parse(format!("unexpected token {got:?} in coefficient"))),
            }
        }
    }

    /// `i` | rational | rational '*' 'i'
    fn parse_gauss_part(&mut self) -> Result<GaussRat> {
        if matches!(self.peek(), Some(Tok::I)) {
            self.next();
            return Ok(GaussRat::i());
        }
        let r = self.parse_rational()?;
        if matches!(self.peek(), Some(Tok::Star)) {
            // only '* i' is allowed here
            self.next();
            self.expect(Tok::I)?;
            return Ok(GaussRat::new(BigRational::zero(), r));
        }
        Ok(GaussRat::from_rational(r))
    }

    fn parse_exponent(&mut self) -> Result<QExp> {
        let parenthesized = matches!(self.peek(), Some(Tok::LParen));
        if parenthesized {
            self.next();
        }
        let neg = matches!(self.peek(), Some(Tok::Minus));
        if neg {
            self.next();
        }
        let num = self.parse_uint()?;
        let mut den = BigInt::one();
        if parenthesized && matches!(self.peek(), Some(Tok::Slash)) {
            self.next();
            den = self.parse_uint()?;
        }
        if parenthesized {
            self.expect(Tok::RParen)?;
        }
        let to_i64 = |n: &BigInt| -> Result<i64> {
            i64::try_from(n.clone()).map_err(|_| Error::Parse(format!("exponent too large: {n}")))
        };
        let mut e = Ratio::new(to_i64(&num)?, to_i64(&den)?);
        if neg {
            e = -e;
        }
        Ok(e)
    }

    fn parse_term(&mut self) -> Result<QLaurent> {
        let mut coeff = GaussRat::one();
        let mut exp = QExp::zero();
        loop {
            match self.peek() {
                Some(Tok::Int(_)) => {
                    let n = self.parse_uint()?;
                    coeff = &coeff * &GaussRat::from_rational(BigRational::from(n));
                }
                Some(Tok::I) => {
                    self.next();
                    coeff = coeff.mul_i();
                }
                Some(Tok::LParen) => {
                    self.next();
                    let g = self.parse_gauss_group()?;
                    coeff = &coeff * &g;
                }
                Some(Tok::Q) => {
                    self.next();
                    if matches!(self.peek(), Some(Tok::Caret)) {
                        self.next();
                        exp += self.parse_exponent()?;
                    } else {
                        exp += QExp::one();
                    }
                }
                got => return Err(Error::Parse(format!("unexpected token {got:?} in term"))),
            }
            if matches!(self.peek(), Some(Tok::Star)) {
                self.next();
            } else {
                break;
            }
        }
        Ok(QLaurent::monomial(coeff, exp))
    }

    fn parse_laurent(&mut self) -> Result<QLaurent> {
        let mut acc = QLaurent::zero();
        let mut sign = 1i64;
        if matches!(self.peek(), Some(Tok::Minus)) {
            self.next();
            sign = -1;
        }
        loop {
            let term = self.parse_term()?;
            acc = if sign < 0 { acc.sub(&term) } else { acc.add(&term) };
            match self.peek() {
                Some(Tok::Plus) => {
                    self.next();
                    sign = 1;
                }
                Some(Tok::Minus) => {
                    self.next();
                    sign = -1;
                }
                _ => return Ok(acc),
            }
        }
    }
}

fn parse_laurent_str(s: &str) -> Result<QLaurent> {
    let toks = tokenize(s)?;
    let mut p = Parser { toks, pos: 0 };
    let out = p.parse_laurent()?;
    if p.pos != p.toks.len() {
        return Err(Error::Parse(format!(
            "trailing tokens after position {} in '{s}'",
            p.pos
        )));
    }
    Ok(out)
}

/// Split at a `/` that sits at paren depth zero, if any.
fn top_level_slash(s: &str) -> Result<Option<(String, String)>> {
    let mut depth = 0i32;
    let mut found: Option<usize> = None;
    for (k, c) in s.char_indices() {
        match c {
            '(' => depth += 1,
            ')' => depth -= 1,
            '/' if depth == 0 => {
                if found.is_some() {
                    return Err(Error::Parse("more than one top-level '/'".into()));
                }
                found = Some(k);
            }
            _ => {}
        }
        if depth < 0 {
            return Err(Error::Parse("unbalanced parentheses".into()));
        }
    }
    if depth != 0 {
        return Err(Error::Parse("unbalanced parentheses".into()));
    }
    Ok(found.map(|k| (s[..k].to_string(), s[k + 1..].to_string())))
}

/// Strip one pair of outer parens when they wrap the whole string.
fn strip_outer(s: &str) -> &str {
    let t = s.trim();
    if !t.starts_with('(') || !t.ends_with(')') {
        return t;
    }
    let mut depth = 0i32;
    for (k, c) in t.char_indices() {
        match c {
            '(' => depth += 1,
            ')' => {
                depth -= 1;
                if depth == 0 && k + 1 != t.len() {
                    return t; // closes before the end: not an outer wrapper
                }
            }
            _ => {}
        }
    }
    &t[1..t.len() - 1]
}

pub fn parse_scalar(s: &str) -> Result<QScalar> {
    match top_level_slash(s)? {
        Some((lhs, rhs)) => {
            let num = parse_laurent_str(strip_outer(&lhs))?;
            let den = parse_laurent_str(strip_outer(&rhs))?;
            QScalar::ratio(num, den)
        }
        None => Ok(QScalar::from_laurent(parse_laurent_str(strip_outer(s))?)),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalars::laurent::qexp;

    #[test]
    fn canonical_rendering() {
        let p = QLaurent::monomial(GaussRat::from_int(-1), qexp(3, 4))
            .add(&QLaurent::monomial(GaussRat::from_int(2), qexp(-1, 4)));
        assert_eq!(render_laurent(&p), "(-1)*q^(3/4) + 2*q^(-1/4)");

        let num = QLaurent::monomial(GaussRat::from_int(2), qexp(1, 1));
        let den = QLaurent::q_pow(qexp(2, 1)).add(&QLaurent::one());
        let x = QScalar::ratio(num, den).unwrap();
        assert_eq!(render_scalar(&x), "(2*q^(1)) / (q^(2) + 1)");
    }

    #[test]
    fn parse_canonical_strings() {
        for text in [
            "0",
            "1",
            "(-1)",
            "i",
            "(-i)",
            "q^(2) + 1",
            "(-1)*q^(3/4) + 2*q^(-1/4)",
            "(2*q^(1)) / (q^(2) + 1)",
            "(1+i)*q^(-1/2)",
            "(1/2)*q^(3)",
            "((-1)*q^(2) + 1) / (q^(2) + 1)",
        ] {
            let x = parse_scalar(text).unwrap();
            assert_eq!(render_scalar(&x), text, "round trip of {text}");
        }
    }

    #[test]
    fn parse_liberal_inputs() {
        assert_eq!(parse_scalar("q").unwrap(), QScalar::q_pow(qexp(1, 1)));
        assert_eq!(parse_scalar("q^2").unwrap(), QScalar::q_pow(qexp(2, 1)));
        assert_eq!(parse_scalar("q^-2").unwrap(), QScalar::q_pow(qexp(-2, 1)));
        assert_eq!(
            parse_scalar("q^2 - 1").unwrap(),
            QScalar::q_pow(qexp(2, 1)).sub(&QScalar::one())
        );
        assert_eq!(
            parse_scalar("-q + 1").unwrap(),
            QScalar::one().sub(&QScalar::q_pow(qexp(1, 1)))
        );
        assert_eq!(
            parse_scalar("2*i*q^(1/2)").unwrap(),
            QScalar::q_pow(qexp(1, 2)).scale(&GaussRat::new(
                num::BigRational::zero(),
                num::BigRational::from(num::BigInt::from(2)),
            ))
        );
    }

    #[test]
    fn parse_rejects_garbage() {
        assert!(parse_scalar("q +").is_err());
        assert!(parse_scalar("(q").is_err());
        assert!(parse_scalar("1 / 2 / 3").is_err());
        assert!(parse_scalar("x").is_err());
        assert!(parse_scalar("(1)/(0)").is_err());
    }
}
