use num_bigint::BigInt;
use num_rational::BigRational;

use super::{var_index, var_name, GaussRat, Poly, Scalar};
use crate::error::{QgwError, Result};

fn print_poly(p: &Poly) -> String {
    if p.is_zero() {
        return "0".into();
    }
    let mut parts = Vec::new();
    for (m, c) in p.terms() {
        let mut factors = Vec::new();
        for (v, &e) in m.0.iter().enumerate() {
            match e {
                0 => {}
                1 => factors.push(var_name(v)),
                _ => factors.push(format!("{}^{}", var_name(v), e)),
            }
        }
        let coef = c.to_string();
        let term = if factors.is_empty() {
            coef
        } else if c.is_one() {
            factors.join("*")
        } else {
            format!("{}*{}", coef, factors.join("*"))
        };
        parts.push(term);
    }
    parts.join(" + ")
}

pub(super) fn print(s: &Scalar) -> String {
    if s.den.is_one() {
        print_poly(&s.num)
    } else {
        format!("({})/({})", print_poly(&s.num), print_poly(&s.den))
    }
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
}

impl<'a> Parser<'a> {
    fn err<T>(&self, msg: &str) -> Result<T> {
        Err(QgwError::Parse { pos: self.pos, msg: msg.to_string() })
    }

    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn eat(&mut self, c: u8) -> bool {
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expr(&mut self) -> Result<Scalar> {
        let mut acc = self.term()?;
        loop {
            if self.eat(b'+') {
                acc = &acc + &self.term()?;
            } else if self.eat(b'-') {
                acc = &acc - &self.term()?;
            } else {
                return Ok(acc);
            }
        }
    }

    fn term(&mut self) -> Result<Scalar> {
        let mut acc = self.unary()?;
        loop {
            if self.eat(b'*') {
                acc = &acc * &self.unary()?;
            } else if self.eat(b'/') {
                let d = self.unary()?;
                acc = acc.try_div(&d)?;
            } else {
                return Ok(acc);
            }
        }
    }

    fn unary(&mut self) -> Result<Scalar> {
        if self.eat(b'-') {
            return Ok(-&self.unary()?);
        }
        self.power()
    }

    fn power(&mut self) -> Result<Scalar> {
        let base = self.atom()?;
        if self.eat(b'^') {
            let neg = self.eat(b'-');
            let paren = !neg && self.eat(b'(');
            let neg = neg || (paren && self.eat(b'-'));
            let n = self.integer()?;
            if paren && !self.eat(b')') {
                return self.err("expected `)`");
            }
            let e: i32 = match i32::try_from(&n) {
                Ok(e) => e,
                Err(_) => return self.err("exponent out of range"),
            };
            return base.pow(if neg { -e } else { e });
        }
        Ok(base)
    }

    fn integer(&mut self) -> Result<BigInt> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return self.err("expected integer");
        }
        let s = std::str::from_utf8(&self.src[start..self.pos]).expect("ascii");
        Ok(s.parse().expect("digits"))
    }

    fn atom(&mut self) -> Result<Scalar> {
        match self.peek() {
            Some(b'(') => {
                self.pos += 1;
                let e = self.expr()?;
                if !self.eat(b')') {
                    return self.err("expected `)`");
                }
                Ok(e)
            }
            Some(c) if c.is_ascii_digit() => {
                let n = self.integer()?;
                Ok(Scalar::from_gauss(GaussRat::from_rational(BigRational::from_integer(n))))
            }
            Some(c) if c.is_ascii_alphabetic() || c == b'_' => {
                let start = self.pos;
                while self.pos < self.src.len()
                    && (self.src[self.pos].is_ascii_alphanumeric() || self.src[self.pos] == b'_')
                {
                    self.pos += 1;
                }
                let name = std::str::from_utf8(&self.src[start..self.pos]).expect("ascii");
                if name == "i" {
                    Ok(Scalar::i())
                } else {
                    Ok(Scalar::var(var_index(name)?))
                }
            }
            _ => self.err("unexpected token"),
        }
    }
}

pub(super) fn parse(s: &str) -> Result<Scalar> {
    let mut p = Parser { src: s.as_bytes(), pos: 0 };
    let v = p.expr()?;
    if p.peek().is_some() {
        return p.err("trailing input");
    }
    Ok(v)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn round_trip() {
        for src in ["0", "1", "-3/2", "q^-1", "(q^2-1)/(q-q^-1)", "i*la1 + (1/2-3*i)*q", "(la1*la2 - 1/(la1*la2))/(q - 1/q)"] {
            let a = parse(src).unwrap();
            let printed = print(&a);
            assert_eq!(parse(&printed).unwrap(), a, "{src} -> {printed}");
        }
    }

    #[test]
    fn errors() {
        assert!(matches!(parse("q +"), Err(QgwError::Parse { .. })));
        assert!(matches!(parse("1/(q-q)"), Err(QgwError::DivisionByZero)));
    }
}
