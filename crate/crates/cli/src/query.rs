//! Element queries for `uqsl2 show`.
//!
//! ```text
//! expr    := term (('+' | '-') term)*
//! term    := unary (('*' | '/')? unary)*      juxtaposition multiplies
//! unary   := '-' unary | power
//! power   := atom ('^' '-'? integer)?
//! atom    := integer | 'q' | E | F | K | Kinv | Cas | casimir
//!          | '(' expr ')' | name '(' expr (',' expr)* ')'
//! ```
//!
//! Functions: `coproduct`, `antipode`, `counit`, `adjoint`/`ad`,
//! `braided_coproduct`, `braided_antipode`, `braided_adjoint`,
//! `braided_antipode_product`, `braiding`, `r_act`, `tail`, `efn`. The
//! braided ones are truncated at the order given to [`evaluate`].

use thiserror::Error;

use uqsl2_core::braided::{
    braided_adjoint, braided_antipode, braided_antipode_product, braided_coproduct, braiding, r_act, tail_filter,
    tail_filter_tensor,
};
use uqsl2_core::hopf::{adjoint, antipode, coproduct, counit};
use uqsl2_core::pbw::efn_commutator;
use uqsl2_core::render::Element;
use uqsl2_core::{casimir, AlgElem, Generator, QRat, TruncationOrder};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("parse error at position {pos}: {message}")]
pub struct ParseError {
    /// Character offset into the query, starting at 0.
    pub pos: usize,
    pub message: String,
}

#[derive(Debug, Clone, PartialEq, Eq)]
enum Tok {
    Int(u64),
    Ident(String),
    Sym(char),
    End,
}

fn lex(src: &str) -> Result<Vec<(usize, Tok)>, ParseError> {
    let chars: Vec<char> = src.chars().collect();
    let mut out = Vec::new();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        if c.is_whitespace() {
            i += 1;
        } else if c.is_ascii_digit() {
            let start = i;
            while i < chars.len() && chars[i].is_ascii_digit() {
                i += 1;
            }
            let text: String = chars[start..i].iter().collect();
            let n =
                text.parse().map_err(|_| ParseError { pos: start, message: format!("integer `{text}` too large") })?;
            out.push((start, Tok::Int(n)));
        } else if c.is_ascii_alphabetic() || c == '_' {
            let start = i;
            while i < chars.len() && (chars[i].is_ascii_alphanumeric() || chars[i] == '_') {
                i += 1;
            }
            out.push((start, Tok::Ident(chars[start..i].iter().collect())));
        } else if "+-*/^(),".contains(c) {
            out.push((i, Tok::Sym(c)));
            i += 1;
        } else {
            return Err(ParseError { pos: i, message: format!("unexpected character `{c}`") });
        }
    }
    out.push((chars.len(), Tok::End));
    Ok(out)
}

#[derive(Debug, Clone)]
enum Value {
    Alg(AlgElem),
    Tensor(uqsl2_core::TensorElem),
}

impl Value {
    fn kind(&self) -> &'static str {
        match self {
            Value::Alg(_) => "an algebra element",
            Value::Tensor(_) => "a tensor",
        }
    }
}

struct Parser {
    toks: Vec<(usize, Tok)>,
    at: usize,
    order: TruncationOrder,
}

fn err<T>(pos: usize, message: impl Into<String>) -> Result<T, ParseError> {
    Err(ParseError { pos, message: message.into() })
}

impl Parser {
    fn peek(&self) -> &Tok {
        &self.toks[self.at].1
    }

    fn pos(&self) -> usize {
        self.toks[self.at].0
    }

    fn bump(&mut self) -> (usize, Tok) {
        let t = self.toks[self.at].clone();
        if self.at + 1 < self.toks.len() {
            self.at += 1;
        }
        t
    }

    fn eat(&mut self, c: char) -> bool {
        if *self.peek() == Tok::Sym(c) {
            self.bump();
            true
        } else {
            false
        }
    }

    fn expect(&mut self, c: char) -> Result<(), ParseError> {
        if self.eat(c) {
            Ok(())
        } else {
            err(self.pos(), format!("expected `{c}`"))
        }
    }

    fn expr(&mut self) -> Result<Value, ParseError> {
        let mut acc = self.term()?;
        loop {
            let pos = self.pos();
            let negate = if self.eat('+') {
                false
            } else if self.eat('-') {
                true
            } else {
                return Ok(acc);
            };
            let rhs = self.term()?;
            acc = match (acc, rhs) {
                (Value::Alg(a), Value::Alg(b)) => Value::Alg(if negate { &a - &b } else { &a + &b }),
                (Value::Tensor(a), Value::Tensor(b)) => Value::Tensor(if negate { &a - &b } else { &a + &b }),
                (a, b) => return err(pos, format!("cannot add {} and {}", a.kind(), b.kind())),
            };
        }
    }

    fn starts_unary(&self) -> bool {
        matches!(self.peek(), Tok::Int(_) | Tok::Ident(_) | Tok::Sym('('))
    }

    fn term(&mut self) -> Result<Value, ParseError> {
        let mut acc = self.unary()?;
        loop {
            let pos = self.pos();
            if self.eat('/') {
                let rhs = self.unary()?;
                let Value::Alg(d) = rhs else { return err(pos, "can only divide by a scalar") };
                let Some(c) = d.as_scalar().filter(|c| !c.is_zero()) else {
                    return err(pos, "can only divide by a nonzero scalar");
                };
                let inv = c.inv().expect("nonzero");
                acc = match acc {
                    Value::Alg(a) => Value::Alg(a.scale(&inv)),
                    Value::Tensor(t) => Value::Tensor(t.scale(&inv)),
                };
            } else if self.eat('*') || self.starts_unary() {
                let rhs = self.unary()?;
                acc = multiply(acc, rhs, pos)?;
            } else {
                return Ok(acc);
            }
        }
    }

    fn unary(&mut self) -> Result<Value, ParseError> {
        if self.eat('-') {
            return Ok(match self.unary()? {
                Value::Alg(a) => Value::Alg(-&a),
                Value::Tensor(t) => Value::Tensor(-&t),
            });
        }
        self.power()
    }

    fn power(&mut self) -> Result<Value, ParseError> {
        let base = self.atom()?;
        let pos = self.pos();
        if !self.eat('^') {
            return Ok(base);
        }
        let negative = self.eat('-');
        let (epos, tok) = self.bump();
        let Tok::Int(n) = tok else { return err(epos, "expected an integer exponent") };
        let n = u32::try_from(n).or_else(|_| err(epos, "exponent too large"))?;
        let Value::Alg(x) = base else { return err(pos, "cannot raise a tensor to a power") };
        if !negative {
            return Ok(Value::Alg(x.pow(n)));
        }
        if let Some(c) = x.as_scalar().filter(|c| !c.is_zero()) {
            return Ok(Value::Alg(AlgElem::scalar(c.inv().expect("nonzero").pow(n as i32))));
        }
        if x == AlgElem::generator(Generator::K) {
            return Ok(Value::Alg(AlgElem::generator(Generator::Kinv).pow(n)));
        }
        if x == AlgElem::generator(Generator::Kinv) {
            return Ok(Value::Alg(AlgElem::generator(Generator::K).pow(n)));
        }
        err(pos, "negative powers are only defined for K, K^-1 and nonzero scalars")
    }

    fn atom(&mut self) -> Result<Value, ParseError> {
        let (pos, tok) = self.bump();
        match tok {
            Tok::Int(n) => {
                let n = i64::try_from(n).or_else(|_| err(pos, "integer too large"))?;
                Ok(Value::Alg(AlgElem::scalar(QRat::from(n))))
            }
            Tok::Sym('(') => {
                let v = self.expr()?;
                self.expect(')')?;
                Ok(v)
            }
            Tok::Ident(name) if *self.peek() == Tok::Sym('(') => self.call(&name, pos),
            Tok::Ident(name) => match name.as_str() {
                "q" => Ok(Value::Alg(AlgElem::scalar(QRat::q_pow(1)))),
                "E" => Ok(Value::Alg(AlgElem::generator(Generator::E))),
                "F" => Ok(Value::Alg(AlgElem::generator(Generator::F))),
                "K" => Ok(Value::Alg(AlgElem::generator(Generator::K))),
                "Kinv" => Ok(Value::Alg(AlgElem::generator(Generator::Kinv))),
                "Cas" | "casimir" => Ok(Value::Alg(casimir())),
                _ => err(pos, format!("unknown name `{name}`")),
            },
            Tok::End => err(pos, "unexpected end of query"),
            Tok::Sym(c) => err(pos, format!("unexpected `{c}`")),
        }
    }

    fn call(&mut self, name: &str, pos: usize) -> Result<Value, ParseError> {
        self.expect('(')?;
        if name == "efn" {
            let (npos, tok) = self.bump();
            self.expect(')')?;
            return match tok {
                Tok::Int(n @ 1..=64) => Ok(Value::Alg(efn_commutator(n as u32))),
                _ => err(npos, "efn takes an integer between 1 and 64"),
            };
        }
        let mut args = Vec::new();
        if !self.eat(')') {
            loop {
                let apos = self.pos();
                args.push((apos, self.expr()?));
                if self.eat(')') {
                    break;
                }
                self.expect(',')?;
            }
        }
        let n = self.order;
        let alg = |i: usize, args: &[(usize, Value)]| -> Result<AlgElem, ParseError> {
            match &args[i].1 {
                Value::Alg(a) => Ok(a.clone()),
                v => err(args[i].0, format!("`{name}` expects an algebra element here, got {}", v.kind())),
            }
        };
        let arity = |k: usize| -> Result<(), ParseError> {
            if args.len() == k {
                Ok(())
            } else {
                err(pos, format!("`{name}` takes {k} argument(s), got {}", args.len()))
            }
        };
        Ok(match name {
            "coproduct" => {
                arity(1)?;
                Value::Tensor(coproduct(&alg(0, &args)?))
            }
            "antipode" => {
                arity(1)?;
                Value::Alg(antipode(&alg(0, &args)?))
            }
            "counit" => {
                arity(1)?;
                Value::Alg(AlgElem::scalar(counit(&alg(0, &args)?)))
            }
            "adjoint" | "ad" => {
                arity(2)?;
                Value::Alg(adjoint(&alg(0, &args)?, &alg(1, &args)?))
            }
            "braided_coproduct" => {
                arity(1)?;
                Value::Tensor(braided_coproduct(&alg(0, &args)?, n).value)
            }
            "braided_antipode" => {
                arity(1)?;
                Value::Alg(braided_antipode(&alg(0, &args)?, n).value)
            }
            "braided_adjoint" => {
                arity(2)?;
                Value::Alg(braided_adjoint(&alg(0, &args)?, &alg(1, &args)?, n).value)
            }
            "braided_antipode_product" => {
                arity(2)?;
                Value::Alg(braided_antipode_product(&alg(0, &args)?, &alg(1, &args)?, n).value)
            }
            "braiding" => {
                arity(2)?;
                Value::Tensor(braiding(&alg(0, &args)?, &alg(1, &args)?, n))
            }
            "r_act" => {
                arity(2)?;
                Value::Tensor(r_act(&alg(0, &args)?, &alg(1, &args)?, n))
            }
            "tail" => {
                arity(1)?;
                match &args[0].1 {
                    Value::Alg(a) => Value::Alg(tail_filter(a, n)),
                    Value::Tensor(t) => Value::Tensor(tail_filter_tensor(t, n)),
                }
            }
            _ => return err(pos, format!("unknown function `{name}`")),
        })
    }
}

/// Algebra elements multiply in U_q(sl_2), tensors leg-wise, and scalars
/// scale tensors.
fn multiply(a: Value, b: Value, pos: usize) -> Result<Value, ParseError> {
    match (a, b) {
        (Value::Alg(x), Value::Alg(y)) => Ok(Value::Alg(x.mul(&y))),
        (Value::Tensor(x), Value::Tensor(y)) => Ok(Value::Tensor(x.tensor_mul(&y))),
        (Value::Alg(s), Value::Tensor(t)) | (Value::Tensor(t), Value::Alg(s)) => match s.as_scalar() {
            Some(c) => Ok(Value::Tensor(t.scale(&c))),
            None => err(pos, "an algebra element can only multiply a tensor if it is a scalar"),
        },
    }
}

/// Parses and evaluates a query, with braided operations truncated at
/// `order`.
pub fn evaluate(src: &str, order: TruncationOrder) -> Result<Element, ParseError> {
    let mut p = Parser { toks: lex(src)?, at: 0, order };
    let v = p.expr()?;
    if *p.peek() != Tok::End {
        return err(p.pos(), "unexpected trailing input");
    }
    Ok(match v {
        Value::Alg(a) => Element::Alg(a),
        Value::Tensor(t) => Element::Tensor(t),
    })
}
