//! Text form of Laurent polynomials.
//!
//! Grammar: `poly := term (('+'|'-') term)*`, `term := [integer] ['*']
//! factor*` with optional `*` between factors, `factor := var ['^'
//! integer]`, `var := 't' index | 't'` (the bare `t` only in one
//! variable). Whitespace is insignificant. Serialization emits terms in
//! descending lexicographic order of exponent vectors, e.g.
//! `-3*t1^2*t2^-1 + t3 - 1`.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed};

use super::LaurentPoly;
use crate::error::{Error, Result};

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (i, (exps, coeff)) in self.terms.iter().rev().enumerate() {
            let mag = coeff.abs();
            if i == 0 {
                if coeff.is_negative() {
                    write!(f, "-")?;
                }
            } else if coeff.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let has_factor = exps.iter().any(|&e| e != 0);
            if !mag.is_one() || !has_factor {
                write!(f, "{mag}")?;
            }
            let mut first_factor = !mag.is_one() || !has_factor;
            for (k, &e) in exps.iter().enumerate() {
                if e == 0 {
                    continue;
                }
                if first_factor {
                    write!(f, "*")?;
                }
                first_factor = true;
                if self.num_vars == 1 {
                    write!(f, "t")?;
                } else {
                    write!(f, "t{}", k + 1)?;
                }
                if e != 1 {
                    write!(f, "^{e}")?;
                }
            }
        }
        Ok(())
    }
}

/// Parses the polynomial grammar into a polynomial in `num_vars`
/// variables. Variable indices must lie in `1..=num_vars`; the bare `t`
/// is accepted only when `num_vars == 1`.
pub fn parse_poly(input: &str, num_vars: usize) -> Result<LaurentPoly> {
    Parser {
        chars: input.chars().collect(),
        pos: 0,
        num_vars,
    }
    .parse()
}

struct Parser {
    chars: Vec<char>,
    pos: usize,
    num_vars: usize,
}

impl Parser {
    fn parse(mut self) -> Result<LaurentPoly> {
        let mut terms: Vec<(Vec<i64>, BigInt)> = Vec::new();
        self.skip_ws();
        if self.pos == self.chars.len() {
            return Err(self.fail("empty polynomial"));
        }
        let mut sign = 1i64;
        if self.eat('+') {
        } else if self.eat('-') {
            sign = -1;
        }
        loop {
            let (exps, coeff) = self.term()?;
            terms.push((exps, coeff * sign));
            self.skip_ws();
            if self.pos == self.chars.len() {
                break;
            }
            if self.eat('+') {
                sign = 1;
            } else if self.eat('-') {
                sign = -1;
            } else {
                return Err(self.fail("expected '+' or '-' between terms"));
            }
        }
        Ok(LaurentPoly::from_terms(self.num_vars, terms))
    }

    fn term(&mut self) -> Result<(Vec<i64>, BigInt)> {
        let mut coeff = BigInt::one();
        let mut exps = vec![0i64; self.num_vars];
        let mut saw_atom = false;
        loop {
            self.skip_ws();
            match self.peek() {
                Some(c) if c.is_ascii_digit() => {
                    let n = self.integer()?;
                    coeff *= n;
                    saw_atom = true;
                }
                Some('t') => {
                    let (var, exp) = self.factor()?;
                    exps[var] += exp;
                    saw_atom = true;
                }
                Some('*') => {
                    self.pos += 1;
                    if !saw_atom {
                        return Err(self.fail("unexpected '*'"));
                    }
                }
                _ => break,
            }
        }
        if !saw_atom {
            return Err(self.fail("expected a term"));
        }
        Ok((exps, coeff))
    }

    fn factor(&mut self) -> Result<(usize, i64)> {
        debug_assert_eq!(self.peek(), Some('t'));
        self.pos += 1;
        let var = if self.peek().is_some_and(|c| c.is_ascii_digit()) {
            let idx = self.integer()? as usize;
            if idx == 0 || idx > self.num_vars {
                return Err(self.fail(&format!(
                    "variable index t{idx} out of range 1..={}",
                    self.num_vars
                )));
            }
            idx - 1
        } else {
            if self.num_vars != 1 {
                return Err(self.fail("bare 't' is only valid in one variable"));
            }
            0
        };
        self.skip_ws();
        let exp = if self.eat('^') {
            self.skip_ws();
            let neg = self.eat('-');
            let mag = self.integer()?;
            if neg {
                -mag
            } else {
                mag
            }
        } else {
            1
        };
        Ok((var, exp))
    }

    fn integer(&mut self) -> Result<i64> {
        self.skip_ws();
        let start = self.pos;
        while self.peek().is_some_and(|c| c.is_ascii_digit()) {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.fail("expected an integer"));
        }
        let s: String = self.chars[start..self.pos].iter().collect();
        s.parse::<i64>()
            .map_err(|_| self.fail("integer out of range"))
    }

    fn peek(&self) -> Option<char> {
        self.chars.get(self.pos).copied()
    }

    fn eat(&mut self, c: char) -> bool {
        self.skip_ws();
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn skip_ws(&mut self) {
        while self.peek().is_some_and(|c| c.is_whitespace()) {
            self.pos += 1;
        }
    }

    fn fail(&self, msg: &str) -> Error {
        Error::Parse(format!("{msg} at offset {}", self.pos))
    }
}
