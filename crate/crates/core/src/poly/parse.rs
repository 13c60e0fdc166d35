//! Text syntax for polynomials: `3*x0^2*x1 - 1/2*x2^3`.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::{ExponentVector, Polynomial};
use crate::error::{ElimError, Result};
use crate::Rational;

struct Cursor<'a> {
    src: &'a [u8],
    pos: usize,
}

impl<'a> Cursor<'a> {
    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn err<T>(&self, expected: &str) -> Result<T> {
        Err(ElimError::Parse {
            offset: self.pos,
            expected: expected.to_string(),
        })
    }

    fn digits(&mut self) -> Option<&'a str> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        (self.pos > start).then(|| std::str::from_utf8(&self.src[start..self.pos]).unwrap())
    }
}

/// Parses a polynomial in the variables `x0 .. x{nvars-1}`.
///
/// A term is an optional coefficient (`7` or `p/q`) followed by factors
/// `x<i>` or `x<i>^<e>` joined by `*`. The `*` between a coefficient and the
/// first variable may be omitted.
pub fn parse_polynomial(input: &str, nvars: usize) -> Result<Polynomial> {
    let mut cur = Cursor {
        src: input.as_bytes(),
        pos: 0,
    };
    let mut poly = Polynomial::zero(nvars);
    let mut first = true;
    loop {
        let negative = match cur.peek() {
            Some(b'+') if !first => {
                cur.pos += 1;
                false
            }
            Some(b'-') => {
                cur.pos += 1;
                true
            }
            None if first => return cur.err("a term"),
            None => break,
            Some(_) if first => false,
            Some(_) => return cur.err("'+' or '-'"),
        };
        first = false;
        let (coeff, exps) = parse_term(&mut cur, nvars)?;
        poly.add_term(exps, if negative { -coeff } else { coeff });
    }
    Ok(poly)
}

fn parse_term(cur: &mut Cursor<'_>, nvars: usize) -> Result<(Rational, ExponentVector)> {
    let mut coeff = Rational::one();
    let mut exps = vec![0u32; nvars];
    let mut have_factor = false;
    if let Some(c) = cur.peek() {
        if c.is_ascii_digit() {
            let num: BigInt = cur.digits().unwrap().parse().unwrap();
            let mut den = BigInt::one();
            if cur.peek() == Some(b'/') {
                cur.pos += 1;
                match cur.digits() {
                    Some(d) => den = d.parse().unwrap(),
                    None => return cur.err("denominator digits"),
                }
                if den.is_zero() {
                    return cur.err("nonzero denominator");
                }
            }
            coeff = Rational::new(num, den);
            have_factor = true;
            match cur.peek() {
                Some(b'*') => {
                    cur.pos += 1;
                    parse_variable(cur, nvars, &mut exps)?;
                }
                Some(b'x') => parse_variable(cur, nvars, &mut exps)?,
                _ => return Ok((coeff, ExponentVector::new(exps))),
            }
        }
    }
    if !have_factor {
        parse_variable(cur, nvars, &mut exps)?;
    }
    while cur.peek() == Some(b'*') {
        cur.pos += 1;
        parse_variable(cur, nvars, &mut exps)?;
    }
    Ok((coeff, ExponentVector::new(exps)))
}

fn parse_variable(cur: &mut Cursor<'_>, nvars: usize, exps: &mut [u32]) -> Result<()> {
    if cur.peek() != Some(b'x') {
        return cur.err("variable 'x<i>' or coefficient");
    }
    cur.pos += 1;
    let start = cur.pos;
    let idx_str = match cur.digits() {
        Some(d) => d,
        None => return cur.err("variable index"),
    };
    let idx: usize = match idx_str.parse() {
        Ok(i) if i < nvars => i,
        _ => {
            cur.pos = start;
            return cur.err(&format!("variable index below {nvars}"));
        }
    };
    let mut e = 1u32;
    if cur.peek() == Some(b'^') {
        cur.pos += 1;
        match cur.digits().and_then(|d| d.parse::<u32>().ok()) {
            Some(v) => e = v,
            None => return cur.err("exponent"),
        }
    }
    exps[idx] += e;
    Ok(())
}
