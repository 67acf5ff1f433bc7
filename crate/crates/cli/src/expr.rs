//! Expression grammar for the `nf` and `pair` subcommands.
//!
//! ```text
//! expr   := term ('+' term)*
//! term   := factor+                      juxtaposition is the product
//! factor := t[i,j] | det | dinv | xi[I;J]
//!         | S(expr) | star(expr) | dagger(expr)
//!         | ml(rat) | mr(rat) | (expr)
//! rat    := rational arithmetic over q, L1..Ln, M1..Mn with + - * / ^
//! ```
//! `Li` stands for `q^(-2 lambda_i)` and `Mi` for `q^(-2 mu_i)`.

use anyhow::{anyhow, bail, Result};
use dqg_core::hopf::{antipode, dagger, star};
use dqg_core::minors::xi;
use dqg_core::nfcore::{mul, normal_form, Atom, Element, Session};
use dqg_core::CoeffFn;

struct Lexer<'a> {
    src: &'a str,
    pos: usize,
}

impl<'a> Lexer<'a> {
    fn new(src: &'a str) -> Self {
        Lexer { src, pos: 0 }
    }

    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src.as_bytes()[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<char> {
        self.skip_ws();
        self.src[self.pos..].chars().next()
    }

    fn bump(&mut self) -> Option<char> {
        let c = self.peek()?;
        self.pos += c.len_utf8();
        Some(c)
    }

    fn expect(&mut self, c: char) -> Result<()> {
        match self.bump() {
            Some(got) if got == c => Ok(()),
            _ => bail!("expected '{}' at position {}", c, self.pos),
        }
    }

    fn integer(&mut self) -> Result<i64> {
        self.skip_ws();
        let start = self.pos;
        if self.peek() == Some('-') {
            self.bump();
        }
        while self.pos < self.src.len() && self.src.as_bytes()[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        self.src[start..self.pos]
            .trim()
            .parse()
            .map_err(|_| anyhow!("expected an integer at position {}", start))
    }

    /// Consume an identifier if the input starts with one.
    fn ident(&mut self) -> Option<String> {
        self.skip_ws();
        let rest = &self.src[self.pos..];
        let end = rest
            .char_indices()
            .find(|(_, c)| !c.is_ascii_alphanumeric())
            .map(|(i, _)| i)
            .unwrap_or(rest.len());
        if end == 0 || rest.as_bytes()[0].is_ascii_digit() {
            return None;
        }
        self.pos += end;
        Some(rest[..end].to_string())
    }
}

pub struct Parser<'a> {
    lex: Lexer<'a>,
    sess: &'a Session,
}

impl<'a> Parser<'a> {
    pub fn new(src: &'a str, sess: &'a Session) -> Self {
        Parser {
            lex: Lexer::new(src),
            sess,
        }
    }

    pub fn parse(mut self) -> Result<Element> {
        let e = self.expr()?;
        self.lex.skip_ws();
        if self.lex.pos != self.lex.src.len() {
            bail!("unexpected input at position {}", self.lex.pos);
        }
        Ok(e)
    }

    fn expr(&mut self) -> Result<Element> {
        let mut acc = self.term()?;
        while self.lex.peek() == Some('+') {
            self.lex.bump();
            acc = acc.add(&self.term()?);
        }
        Ok(acc)
    }

    fn term(&mut self) -> Result<Element> {
        let mut acc = self.factor()?;
        loop {
            match self.lex.peek() {
                Some(c) if c == '+' || c == ')' => break,
                None => break,
                _ => {
                    let f = self.factor()?;
                    acc = mul(self.sess, &acc, &f);
                }
            }
        }
        Ok(acc)
    }

    fn index(&mut self, v: i64) -> Result<usize> {
        let n = self.sess.n as i64;
        if v < 1 || v > n {
            bail!("index {} out of range for n = {}", v, n);
        }
        Ok(v as usize)
    }

    fn index_list(&mut self, stop: char) -> Result<Vec<usize>> {
        let mut out = Vec::new();
        loop {
            let v = self.lex.integer()?;
            out.push(self.index(v)?);
            match self.lex.peek() {
                Some(',') => {
                    self.lex.bump();
                }
                Some(c) if c == stop => break,
                _ => bail!("expected ',' or '{}' at position {}", stop, self.lex.pos),
            }
        }
        Ok(out)
    }

    fn factor(&mut self) -> Result<Element> {
        let pos = self.lex.pos;
        if self.lex.peek() == Some('(') {
            self.lex.bump();
            let e = self.expr()?;
            self.lex.expect(')')?;
            return Ok(e);
        }
        let name = self
            .lex
            .ident()
            .ok_or_else(|| anyhow!("expected an atom at position {}", pos))?;
        match name.as_str() {
            "t" => {
                self.lex.expect('[')?;
                let vi = self.lex.integer()?;
                let i = self.index(vi)?;
                self.lex.expect(',')?;
                let vj = self.lex.integer()?;
                let j = self.index(vj)?;
                self.lex.expect(']')?;
                Ok(Element::gen(self.sess.n, i, j))
            }
            "det" => Ok(dqg_core::nfcore::element_det(self.sess)),
            "dinv" => Ok(Element::det_inv(self.sess.n)),
            "xi" => {
                self.lex.expect('[')?;
                let i_set = self.index_list(';')?;
                self.lex.expect(';')?;
                let j_set = self.index_list(']')?;
                self.lex.expect(']')?;
                if i_set.len() != j_set.len() {
                    bail!("minor index sets must have equal size at position {}", pos);
                }
                Ok(xi(self.sess, &i_set, &j_set, None))
            }
            "S" => {
                self.lex.expect('(')?;
                let e = self.expr()?;
                self.lex.expect(')')?;
                Ok(antipode(self.sess, &e))
            }
            "star" => {
                self.lex.expect('(')?;
                let e = self.expr()?;
                self.lex.expect(')')?;
                Ok(star(self.sess, &e))
            }
            "dagger" => {
                self.lex.expect('(')?;
                let e = self.expr()?;
                self.lex.expect(')')?;
                Ok(dagger(self.sess, &e))
            }
            "ml" | "mr" => {
                self.lex.expect('(')?;
                let f = self.rational()?;
                self.lex.expect(')')?;
                let bank = if name == "ml" { 1 } else { 0 };
                if !f.independent_of_bank(bank) {
                    bail!(
                        "{}(...) may only use {} variables (position {})",
                        name,
                        if name == "ml" { "L" } else { "M" },
                        pos
                    );
                }
                Ok(normal_form(self.sess, &[Atom::Func(f)]))
            }
            other => bail!("unknown atom '{}' at position {}", other, pos),
        }
    }

    // rational arithmetic over q, L1..Ln, M1..Mn

    fn rational(&mut self) -> Result<CoeffFn> {
        let mut acc = self.rat_term()?;
        loop {
            match self.lex.peek() {
                Some('+') => {
                    self.lex.bump();
                    acc = acc.add(&self.rat_term()?);
                }
                Some('-') => {
                    self.lex.bump();
                    acc = acc.sub(&self.rat_term()?);
                }
                _ => return Ok(acc),
            }
        }
    }

    fn rat_term(&mut self) -> Result<CoeffFn> {
        let mut acc = self.rat_pow()?;
        loop {
            match self.lex.peek() {
                Some('*') => {
                    self.lex.bump();
                    acc = acc.mul(&self.rat_pow()?);
                }
                Some('/') => {
                    self.lex.bump();
                    let d = self.rat_pow()?;
                    if d.is_zero() {
                        bail!("division by zero at position {}", self.lex.pos);
                    }
                    acc = acc.div(&d);
                }
                _ => return Ok(acc),
            }
        }
    }

    fn rat_pow(&mut self) -> Result<CoeffFn> {
        let base = self.rat_atom()?;
        if self.lex.peek() == Some('^') {
            self.lex.bump();
            let e = self.lex.integer()?;
            if base.is_zero() && e < 0 {
                bail!("zero to a negative power at position {}", self.lex.pos);
            }
            let b = if e < 0 { base.inv() } else { base };
            let mut acc = CoeffFn::one(self.sess.n, 2);
            for _ in 0..e.unsigned_abs() {
                acc = acc.mul(&b);
            }
            return Ok(acc);
        }
        Ok(base)
    }

    fn rat_atom(&mut self) -> Result<CoeffFn> {
        let n = self.sess.n;
        let pos = self.lex.pos;
        match self.lex.peek() {
            Some('(') => {
                self.lex.bump();
                let f = self.rational()?;
                self.lex.expect(')')?;
                Ok(f)
            }
            Some('-') => {
                self.lex.bump();
                Ok(self.rat_atom()?.neg())
            }
            Some(c) if c.is_ascii_digit() => {
                let v = self.lex.integer()?;
                Ok(CoeffFn::from_int(n, 2, v))
            }
            _ => {
                let name = self
                    .lex
                    .ident()
                    .ok_or_else(|| anyhow!("expected a value at position {}", pos))?;
                if name == "q" {
                    return Ok(CoeffFn::q_pow(n, 2, 1));
                }
                let (bank, rest) = match name.as_bytes().first() {
                    Some(b'L') => (0usize, &name[1..]),
                    Some(b'M') => (1usize, &name[1..]),
                    _ => bail!("unknown symbol '{}' at position {}", name, pos),
                };
                let i: usize = rest
                    .parse()
                    .map_err(|_| anyhow!("unknown symbol '{}' at position {}", name, pos))?;
                if i < 1 || i > n {
                    bail!("index {} out of range for n = {} at position {}", i, n, pos);
                }
                Ok(CoeffFn::x_var(n, 2, bank, i))
            }
        }
    }
}

pub fn parse_expr(src: &str, sess: &Session) -> Result<Element> {
    Parser::new(src, sess).parse()
}
