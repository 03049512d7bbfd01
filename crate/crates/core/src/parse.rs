//! Text syntax for monomials and ideals, shared with the CLI.
//!
//! Variables are `x1..xN`, `*` separates factors, `^` introduces an
//! exponent and `,` separates generators. `0` denotes the zero ideal
//! and `1` the unit ideal (or the monomial 1). Whitespace is free.
//! Every malformed input yields an error carrying the byte position of
//! the offending token.

use crate::error::{Error, Result};
use crate::ideal::Ideal;
use crate::monomial::{Monomial, MAX_VARS};

struct Cursor<'a> {
    input: &'a str,
    pos: usize,
}

impl<'a> Cursor<'a> {
    fn new(input: &'a str) -> Self {
        Self { input, pos: 0 }
    }

    fn skip_ws(&mut self) {
        while self
            .input
            .as_bytes()
            .get(self.pos)
            .is_some_and(u8::is_ascii_whitespace)
        {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.input.as_bytes().get(self.pos).copied()
    }

    fn bump(&mut self) {
        self.pos += 1;
    }

    fn err(&self, msg: impl Into<String>) -> Error {
        Error::Parse {
            pos: self.pos,
            msg: msg.into(),
        }
    }

    fn number(&mut self) -> Result<usize> {
        self.skip_ws();
        let start = self.pos;
        while self
            .input
            .as_bytes()
            .get(self.pos)
            .is_some_and(u8::is_ascii_digit)
        {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.err("expected a number"));
        }
        self.input[start..self.pos]
            .parse()
            .map_err(|_| self.err("number out of range"))
    }
}

/// Parses one monomial in a ring with `n` variables.
pub fn parse_monomial(input: &str, n: usize) -> Result<Monomial> {
    let mut cur = Cursor::new(input);
    let m = monomial(&mut cur, n)?;
    if cur.peek().is_some() {
        return Err(cur.err("unexpected trailing input"));
    }
    Ok(m)
}

/// Parses an ideal given by a generator list, `0`, or `1`.
pub fn parse_ideal(input: &str, n: usize) -> Result<Ideal> {
    if n > MAX_VARS {
        return Err(Error::RingTooLarge { n, max: MAX_VARS });
    }
    let mut cur = Cursor::new(input);
    match cur.peek() {
        None => return Err(cur.err("empty input; write 0 for the zero ideal")),
        Some(b'0') => {
            cur.bump();
            if cur.peek().is_some() {
                return Err(cur.err("unexpected input after 0"));
            }
            return Ok(Ideal::zero(n));
        }
        _ => {}
    }
    let mut gens = vec![monomial(&mut cur, n)?];
    while let Some(c) = cur.peek() {
        if c != b',' {
            return Err(cur.err(format!("expected `,` between generators, found `{}`", c as char)));
        }
        cur.bump();
        gens.push(monomial(&mut cur, n)?);
    }
    Ideal::normalize(n, &gens)
}

fn monomial(cur: &mut Cursor, n: usize) -> Result<Monomial> {
    let mut exps = vec![0u16; n];
    match cur.peek() {
        Some(b'1') => {
            cur.bump();
            // plain 1; factors may still follow via `*`
        }
        Some(b'x') => factor(cur, &mut exps, n)?,
        Some(c) => return Err(cur.err(format!("expected a monomial, found `{}`", c as char))),
        None => return Err(cur.err("expected a monomial")),
    }
    while cur.peek() == Some(b'*') {
        cur.bump();
        match cur.peek() {
            Some(b'1') => cur.bump(),
            Some(b'x') => factor(cur, &mut exps, n)?,
            _ => return Err(cur.err("expected a factor after `*`")),
        }
    }
    Ok(Monomial::new(&exps))
}

fn factor(cur: &mut Cursor, exps: &mut [u16], n: usize) -> Result<()> {
    let var_pos = cur.pos;
    cur.bump(); // consume `x`
    let var = cur.number().map_err(|_| Error::Parse {
        pos: var_pos,
        msg: "expected a variable index after `x`".into(),
    })?;
    if var < 1 || var > n {
        return Err(Error::Parse {
            pos: var_pos,
            msg: format!("variable x{var} out of range for n = {n}"),
        });
    }
    let mut e = 1u16;
    if cur.peek() == Some(b'^') {
        cur.bump();
        let raw = cur.number()?;
        e = u16::try_from(raw).map_err(|_| cur.err("exponent too large"))?;
        if e == 0 {
            return Err(cur.err("exponent must be positive"));
        }
    }
    exps[var - 1] += e;
    Ok(())
}
