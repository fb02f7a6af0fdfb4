//! Text form of polynomials.
//!
//! Canonical output follows
//! `term := coeff | coeff "*" "x" ["^" uint] | "x" ["^" uint]`,
//! `coeff := rational | "(" rational [("+"|"-") rational "i"] ")"`, terms in
//! descending degree joined by `+`/`-`. The parser accepts a superset: any
//! sum/product/power expression in `x` with integer literals, `/` by nonzero
//! constants, imaginary literals `3i` and `3/4i` (read as `(3/4)·i`), and
//! parentheses, so inputs such as `(x-2)*(x-3)` are also valid. Whitespace is ignored; U+2212 is read as `-`.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::Poly;
use crate::error::{Error, Result};
use crate::number::{GaussianRational, Rational};

pub fn parse(text: &str) -> Result<Poly> {
    let chars: Vec<(usize, char)> = text
        .chars()
        .enumerate()
        .filter(|(_, c)| !c.is_whitespace())
        .map(|(i, c)| (i, if c == '\u{2212}' { '-' } else { c }))
        .collect();
    let mut p = Parser {
        chars,
        pos: 0,
        end: text.chars().count(),
    };
    if p.chars.is_empty() {
        return Err(Error::Syntax {
            pos: 0,
            msg: "empty input".into(),
        });
    }
    let e = p.expr()?;
    if let Some(&(at, c)) = p.chars.get(p.pos) {
        return Err(Error::Syntax {
            pos: at,
            msg: format!("unexpected {c:?}"),
        });
    }
    Ok(e)
}

struct Parser {
    chars: Vec<(usize, char)>,
    pos: usize,
    end: usize,
}

impl Parser {
    fn peek(&self) -> Option<char> {
        self.chars.get(self.pos).map(|&(_, c)| c)
    }

    fn at(&self) -> usize {
        self.chars.get(self.pos).map_or(self.end, |&(i, _)| i)
    }

    fn err<T>(&self, msg: impl Into<String>) -> Result<T> {
        Err(Error::Syntax {
            pos: self.at(),
            msg: msg.into(),
        })
    }

    fn expr(&mut self) -> Result<Poly> {
        let mut acc = match self.peek() {
            Some('-') => {
                self.pos += 1;
                -self.term()?
            }
            Some('+') => {
                self.pos += 1;
                self.term()?
            }
            _ => self.term()?,
        };
        while let Some(op @ ('+' | '-')) = self.peek() {
            self.pos += 1;
            let t = self.term()?;
            acc = if op == '+' { &acc + &t } else { &acc - &t };
        }
        Ok(acc)
    }

    fn term(&mut self) -> Result<Poly> {
        let mut acc = self.power()?;
        while let Some(op @ ('*' | '/')) = self.peek() {
            self.pos += 1;
            let at = self.at();
            let rhs = self.power()?;
            if op == '*' {
                acc = &acc * &rhs;
            } else {
                if rhs.is_zero() {
                    return Err(Error::ZeroDenominator { pos: at });
                }
                if !rhs.is_constant() {
                    return Err(Error::Syntax {
                        pos: at,
                        msg: "division by a non-constant".into(),
                    });
                }
                let inv = rhs.coeff(0).inv().expect("nonzero constant");
                acc = acc.scale(&inv);
            }
        }
        Ok(acc)
    }

    fn power(&mut self) -> Result<Poly> {
        let base = self.atom()?;
        if self.peek() == Some('^') {
            self.pos += 1;
            let e = self.uint()?;
            let e: u32 = e
                .try_into()
                .or_else(|_| self.err("exponent too large"))?;
            return Ok(base.pow(e));
        }
        Ok(base)
    }

    fn atom(&mut self) -> Result<Poly> {
        match self.peek() {
            Some(c) if c.is_ascii_digit() => {
                let n = self.uint()?;
                if let Some(im) = self.imaginary_fraction(&n)? {
                    return Ok(Poly::constant(GaussianRational::new(Rational::zero(), im)));
                }
                let q = Rational::from_integer(n);
                if self.peek() == Some('i') {
                    self.pos += 1;
                    return Ok(Poly::constant(GaussianRational::new(Rational::zero(), q)));
                }
                Ok(Poly::constant(GaussianRational::real(q)))
            }
            Some('x') => {
                self.pos += 1;
                Ok(Poly::x())
            }
            Some('i') => {
                self.pos += 1;
                Ok(Poly::constant(GaussianRational::i()))
            }
            Some('(') => {
                self.pos += 1;
                let e = self.expr()?;
                if self.peek() != Some(')') {
                    return self.err("expected ')'");
                }
                self.pos += 1;
                Ok(e)
            }
            Some(c) => self.err(format!("unexpected {c:?}")),
            None => self.err("unexpected end of input"),
        }
    }

    /// After a numerator, consumes `/q i` when the denominator digits are
    /// immediately followed by `i`; otherwise leaves the input untouched.
    fn imaginary_fraction(&mut self, num: &BigInt) -> Result<Option<Rational>> {
        if self.peek() != Some('/') {
            return Ok(None);
        }
        let mut k = self.pos + 1;
        while self.chars.get(k).is_some_and(|&(_, c)| c.is_ascii_digit()) {
            k += 1;
        }
        if k == self.pos + 1 || self.chars.get(k).map(|&(_, c)| c) != Some('i') {
            return Ok(None);
        }
        let den_at = self.chars[self.pos + 1].0;
        self.pos += 1;
        let den = self.uint()?;
        self.pos += 1;
        if den.is_zero() {
            return Err(Error::ZeroDenominator { pos: den_at });
        }
        Ok(Some(Rational::new(num.clone(), den)))
    }

    fn uint(&mut self) -> Result<BigInt> {
        let start = self.pos;
        while self.peek().is_some_and(|c| c.is_ascii_digit()) {
            self.pos += 1;
        }
        if start == self.pos {
            return self.err("expected an unsigned integer");
        }
        let s: String = self.chars[start..self.pos].iter().map(|&(_, c)| c).collect();
        Ok(s.parse().expect("digits"))
    }
}

fn write_rational(f: &mut fmt::Formatter<'_>, q: &Rational) -> fmt::Result {
    if q.denom().is_one() {
        write!(f, "{}", q.numer())
    } else {
        write!(f, "{}/{}", q.numer(), q.denom())
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.coeffs().iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let xpart = match k {
                0 => String::new(),
                1 => "x".to_string(),
                _ => format!("x^{k}"),
            };
            if c.is_real() {
                let neg = c.re.is_negative();
                if neg {
                    write!(f, "-")?;
                } else if !first {
                    write!(f, "+")?;
                }
                let mag = c.re.abs();
                if k == 0 {
                    write_rational(f, &mag)?;
                } else if mag.is_one() {
                    write!(f, "{xpart}")?;
                } else {
                    write_rational(f, &mag)?;
                    write!(f, "*{xpart}")?;
                }
            } else {
                if !first {
                    write!(f, "+")?;
                }
                write!(f, "{c}")?;
                if k > 0 {
                    write!(f, "*{xpart}")?;
                }
            }
            first = false;
        }
        Ok(())
    }
}
