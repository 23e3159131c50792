//! The expression language of `eval`.
//!
//! ```text
//! expr     ::= term (("+" | "-") term)*
//! term     ::= "-" term | RATIONAL "*" term | chain
//! chain    ::= primary (op)*
//! op       ::= "<|" (primary | "(" expr ("," expr)* ")")   pre-Lie product or insertion
//!            | "|>" primary                                NAP product
//!            | "o_" INT primary                            partial composition
//! primary  ::= "(" expr ")" | LITERAL
//! LITERAL  ::= (NAME | INT) ["(" ... ")"]                  no space before "("
//! ```
//!
//! Literals are basis elements of the chosen instance, e.g. `id`, `g`,
//! `g(g(1,2),3)`, `1(2,3)`, `m3`, or `tree(()())` for the free pre-Lie
//! algebra.

use crate::error::{Error, ParseError, Result};
use crate::formalsum::{parse_rational, FormalSum, Rational};
use crate::instances::Instance;
use crate::operad::{insertion_element, partial_compose, prelie_product, Operad, PreLieFlavor};
use crate::prelie::{graft_product, insertion_recursive, nap_graft, PreLieElement};
use crate::trees::parse_unlabeled;

#[derive(Clone, Debug, PartialEq)]
pub enum Expr {
    Literal { text: String, position: usize },
    Scale(Rational, Box<Expr>),
    Neg(Box<Expr>),
    Add(Box<Expr>, Box<Expr>),
    Sub(Box<Expr>, Box<Expr>),
    Product(Box<Expr>, Box<Expr>),
    Insert(Box<Expr>, Vec<Expr>),
    Nap(Box<Expr>, Box<Expr>),
    Compose(Box<Expr>, usize, Box<Expr>),
}

struct Parser<'a> {
    text: &'a str,
    pos: usize,
}

impl<'a> Parser<'a> {
    fn rest(&self) -> &'a str {
        &self.text[self.pos..]
    }

    fn skip_ws(&mut self) {
        let trimmed = self.rest().trim_start();
        self.pos = self.text.len() - trimmed.len();
    }

    fn peek(&mut self) -> Option<char> {
        self.skip_ws();
        self.rest().chars().next()
    }

    fn eat(&mut self, token: &str) -> bool {
        self.skip_ws();
        if self.rest().starts_with(token) {
            self.pos += token.len();
            true
        } else {
            false
        }
    }

    fn error(&self, message: impl Into<String>) -> ParseError {
        ParseError::new(self.pos, message)
    }

    fn expect(&mut self, token: &str) -> Result<(), ParseError> {
        if self.eat(token) {
            Ok(())
        } else {
            Err(self.error(format!("expected `{token}`")))
        }
    }

    fn expr(&mut self) -> Result<Expr, ParseError> {
        let mut left = self.term()?;
        loop {
            if self.eat("+") {
                left = Expr::Add(Box::new(left), Box::new(self.term()?));
            } else if self.peek() == Some('-') {
                self.pos += 1;
                left = Expr::Sub(Box::new(left), Box::new(self.term()?));
            } else {
                return Ok(left);
            }
        }
    }

    fn term(&mut self) -> Result<Expr, ParseError> {
        if self.peek() == Some('-') {
            self.pos += 1;
            return Ok(Expr::Neg(Box::new(self.term()?)));
        }
        if let Some(coeff) = self.coefficient()? {
            return Ok(Expr::Scale(coeff, Box::new(self.term()?)));
        }
        self.chain()
    }

    /// A rational followed by `*`; leaves the position untouched otherwise.
    fn coefficient(&mut self) -> Result<Option<Rational>, ParseError> {
        self.skip_ws();
        let start = self.pos;
        let digits = |s: &str| s.bytes().take_while(u8::is_ascii_digit).count();
        let mut len = digits(self.rest());
        if len == 0 {
            return Ok(None);
        }
        let after = &self.rest()[len..];
        if let Some(denom) = after.strip_prefix('/') {
            let d = digits(denom);
            if d > 0 {
                len += 1 + d;
            }
        }
        let number = &self.rest()[..len];
        self.pos += len;
        if self.eat("*") {
            let value = parse_rational(number).map_err(|e| ParseError::new(start, e.message))?;
            Ok(Some(value))
        } else {
            self.pos = start;
            Ok(None)
        }
    }

    fn chain(&mut self) -> Result<Expr, ParseError> {
        let mut left = self.primary()?;
        loop {
            if self.eat("<|") {
                if self.peek() == Some('(') {
                    self.pos += 1;
                    let mut args = vec![self.expr()?];
                    while self.eat(",") {
                        args.push(self.expr()?);
                    }
                    self.expect(")")?;
                    left = if args.len() == 1 {
                        Expr::Product(Box::new(left), Box::new(args.pop().unwrap()))
                    } else {
                        Expr::Insert(Box::new(left), args)
                    };
                } else {
                    left = Expr::Product(Box::new(left), Box::new(self.primary()?));
                }
            } else if self.eat("|>") {
                left = Expr::Nap(Box::new(left), Box::new(self.primary()?));
            } else if self.at_compose() {
                self.pos += 2;
                let start = self.pos;
                let digits = self.rest().bytes().take_while(u8::is_ascii_digit).count();
                let slot = self.rest()[..digits]
                    .parse()
                    .map_err(|_| ParseError::new(start, "expected a slot number after `o_`"))?;
                self.pos += digits;
                left = Expr::Compose(Box::new(left), slot, Box::new(self.primary()?));
            } else {
                return Ok(left);
            }
        }
    }

    fn at_compose(&mut self) -> bool {
        self.skip_ws();
        self.rest().starts_with("o_")
    }

    fn primary(&mut self) -> Result<Expr, ParseError> {
        match self.peek() {
            Some('(') => {
                self.pos += 1;
                let inner = self.expr()?;
                self.expect(")")?;
                Ok(inner)
            }
            Some(c) if c.is_alphanumeric() || c == '_' => self.literal(),
            Some(c) => Err(self.error(format!("unexpected `{c}`"))),
            None => Err(self.error("unexpected end of input")),
        }
    }

    fn literal(&mut self) -> Result<Expr, ParseError> {
        let start = self.pos;
        let head = self
            .rest()
            .char_indices()
            .take_while(|&(_, c)| c.is_alphanumeric() || c == '_')
            .map(|(_, c)| c.len_utf8())
            .sum::<usize>();
        self.pos += head;
        if self.rest().starts_with('(') {
            let mut depth = 0usize;
            let mut end = None;
            for (i, c) in self.rest().char_indices() {
                match c {
                    '(' => depth += 1,
                    ')' => {
                        depth -= 1;
                        if depth == 0 {
                            end = Some(i + 1);
                            break;
                        }
                    }
                    _ => {}
                }
            }
            match end {
                Some(e) => self.pos += e,
                None => return Err(ParseError::new(start, "unbalanced parentheses in literal")),
            }
        }
        Ok(Expr::Literal {
            text: self.text[start..self.pos].to_string(),
            position: start,
        })
    }
}

pub fn parse_expr(text: &str) -> Result<Expr, ParseError> {
    let mut p = Parser { text, pos: 0 };
    let e = p.expr()?;
    p.skip_ws();
    if p.pos < text.len() {
        return Err(p.error(format!("unexpected `{}`", p.rest())));
    }
    Ok(e)
}

/// What an expression can be evaluated in.
pub trait Algebra {
    type Key: Ord + Clone;

    fn literal(&self, text: &str) -> Result<FormalSum<Self::Key>>;
    fn product(
        &self,
        x: &FormalSum<Self::Key>,
        y: &FormalSum<Self::Key>,
    ) -> Result<FormalSum<Self::Key>>;
    fn insertion(
        &self,
        t: &FormalSum<Self::Key>,
        args: &[FormalSum<Self::Key>],
    ) -> Result<FormalSum<Self::Key>>;
    fn compose(
        &self,
        x: &FormalSum<Self::Key>,
        slot: usize,
        y: &FormalSum<Self::Key>,
    ) -> Result<FormalSum<Self::Key>>;
    fn nap(
        &self,
        x: &FormalSum<Self::Key>,
        y: &FormalSum<Self::Key>,
    ) -> Result<FormalSum<Self::Key>>;
    fn format(&self, x: &FormalSum<Self::Key>) -> String;
}

/// An operad with its pre-Lie product.
pub struct OperadAlgebra<'a, O>(pub &'a O);

impl<O: Operad> Algebra for OperadAlgebra<'_, O> {
    type Key = O::Basis;

    fn literal(&self, text: &str) -> Result<FormalSum<O::Basis>> {
        Ok(FormalSum::basis(self.0.parse_basis(text)?))
    }

    fn product(
        &self,
        x: &FormalSum<O::Basis>,
        y: &FormalSum<O::Basis>,
    ) -> Result<FormalSum<O::Basis>> {
        prelie_product(self.0, x, y)
    }

    fn insertion(
        &self,
        t: &FormalSum<O::Basis>,
        args: &[FormalSum<O::Basis>],
    ) -> Result<FormalSum<O::Basis>> {
        insertion_element(self.0, t, args, PreLieFlavor::Full)
    }

    fn compose(
        &self,
        x: &FormalSum<O::Basis>,
        slot: usize,
        y: &FormalSum<O::Basis>,
    ) -> Result<FormalSum<O::Basis>> {
        partial_compose(self.0, x, slot, y)
    }

    fn nap(&self, _: &FormalSum<O::Basis>, _: &FormalSum<O::Basis>) -> Result<FormalSum<O::Basis>> {
        Err(Error::UnsupportedOperation("|>".into()))
    }

    fn format(&self, x: &FormalSum<O::Basis>) -> String {
        self.0.format(x)
    }
}

/// The free pre-Lie algebra on one generator; literals are `tree(...)`,
/// e.g. `tree()` for the single root and `tree(()())` for the cherry.
pub struct FreePreLieAlgebra;

impl Algebra for FreePreLieAlgebra {
    type Key = crate::trees::UnlabeledTree;

    fn literal(&self, text: &str) -> Result<PreLieElement> {
        match text.strip_prefix("tree") {
            Some(code) if code.starts_with('(') => {
                let tree = parse_unlabeled(code)
                    .map_err(|e| ParseError::new(e.position + 4, e.message))?;
                Ok(FormalSum::basis(tree))
            }
            _ => Err(ParseError::new(0, format!("expected `tree(...)`, found `{text}`")).into()),
        }
    }

    fn product(&self, x: &PreLieElement, y: &PreLieElement) -> Result<PreLieElement> {
        Ok(graft_product(x, y))
    }

    fn insertion(&self, t: &PreLieElement, args: &[PreLieElement]) -> Result<PreLieElement> {
        insertion_recursive(t, args)
    }

    fn compose(&self, _: &PreLieElement, _: usize, _: &PreLieElement) -> Result<PreLieElement> {
        Err(Error::UnsupportedOperation("o_i".into()))
    }

    fn nap(&self, x: &PreLieElement, y: &PreLieElement) -> Result<PreLieElement> {
        Ok(nap_graft(x, y))
    }

    fn format(&self, x: &PreLieElement) -> String {
        x.to_string()
    }
}

pub fn evaluate<A: Algebra>(algebra: &A, expr: &Expr) -> Result<FormalSum<A::Key>> {
    Ok(match expr {
        Expr::Literal { text, position } => algebra.literal(text).map_err(|e| match e {
            Error::Parse(p) => Error::Parse(ParseError::new(position + p.position, p.message)),
            other => other,
        })?,
        Expr::Scale(c, e) => evaluate(algebra, e)?.scale(c),
        Expr::Neg(e) => -evaluate(algebra, e)?,
        Expr::Add(a, b) => evaluate(algebra, a)? + evaluate(algebra, b)?,
        Expr::Sub(a, b) => evaluate(algebra, a)? - evaluate(algebra, b)?,
        Expr::Product(a, b) => algebra.product(&evaluate(algebra, a)?, &evaluate(algebra, b)?)?,
        Expr::Insert(t, args) => {
            let t = evaluate(algebra, t)?;
            let args = args
                .iter()
                .map(|a| evaluate(algebra, a))
                .collect::<Result<Vec<_>>>()?;
            algebra.insertion(&t, &args)?
        }
        Expr::Nap(a, b) => algebra.nap(&evaluate(algebra, a)?, &evaluate(algebra, b)?)?,
        Expr::Compose(a, slot, b) => {
            algebra.compose(&evaluate(algebra, a)?, *slot, &evaluate(algebra, b)?)?
        }
    })
}

fn eval_in<A: Algebra>(algebra: &A, expr: &Expr) -> Result<String> {
    Ok(algebra.format(&evaluate(algebra, expr)?))
}

/// Parses and evaluates `text` in `instance`, returning the canonical print
/// of the normalized result.
pub fn eval_text(instance: &Instance, text: &str) -> Result<String> {
    let expr = parse_expr(text)?;
    match instance {
        Instance::NsAssoc(op) => eval_in(&OperadAlgebra(op), &expr),
        Instance::Free(op) => eval_in(&OperadAlgebra(op), &expr),
        Instance::Rooted(op) => eval_in(&OperadAlgebra(op), &expr),
        Instance::FreePreLie => eval_in(&FreePreLieAlgebra, &expr),
    }
}
