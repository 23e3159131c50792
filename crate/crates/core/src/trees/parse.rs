//! Text grammars for the three tree families.
//!
//! ```text
//! unlabeled  T ::= "(" T* ")"
//! labeled    T ::= INT | INT "(" T ("," T)* ")"
//! planar     T ::= INT | NAME "(" T ("," T)* ")"
//! ```
//!
//! Whitespace between tokens is ignored.

use crate::error::ParseError;

use super::{Generator, LabeledTree, PlanarTerm, UnlabeledTree};

struct Cursor<'a> {
    text: &'a str,
    pos: usize,
}

impl<'a> Cursor<'a> {
    pub(crate) fn new(text: &'a str) -> Self {
        Cursor { text, pos: 0 }
    }

    pub(crate) fn skip_ws(&mut self) {
        while let Some(c) = self.peek_raw() {
            if c.is_whitespace() {
                self.pos += c.len_utf8();
            } else {
                break;
            }
        }
    }

    fn peek_raw(&self) -> Option<char> {
        self.text[self.pos..].chars().next()
    }

    pub(crate) fn peek(&mut self) -> Option<char> {
        self.skip_ws();
        self.peek_raw()
    }

    pub(crate) fn pos(&self) -> usize {
        self.pos
    }

    pub(crate) fn error(&self, message: impl Into<String>) -> ParseError {
        ParseError::new(self.pos, message)
    }

    pub(crate) fn expect(&mut self, want: char) -> Result<(), ParseError> {
        match self.peek() {
            Some(c) if c == want => {
                self.pos += c.len_utf8();
                Ok(())
            }
            Some(c) => Err(self.error(format!("expected `{want}`, found `{c}`"))),
            None => Err(self.error(format!("expected `{want}`, found end of input"))),
        }
    }

    pub(crate) fn eat(&mut self, want: char) -> bool {
        if self.peek() == Some(want) {
            self.pos += want.len_utf8();
            true
        } else {
            false
        }
    }

    pub(crate) fn integer(&mut self) -> Result<usize, ParseError> {
        self.skip_ws();
        let start = self.pos;
        let digits = self.text[start..]
            .bytes()
            .take_while(u8::is_ascii_digit)
            .count();
        if digits == 0 {
            return Err(self.error("expected an integer"));
        }
        self.pos += digits;
        self.text[start..self.pos]
            .parse()
            .map_err(|_| ParseError::new(start, "integer too large"))
    }

    pub(crate) fn name(&mut self) -> Result<String, ParseError> {
        self.skip_ws();
        let start = self.pos;
        let rest = &self.text[start..];
        let len: usize = rest
            .char_indices()
            .take_while(|&(i, c)| c == '_' || c.is_alphabetic() || (i > 0 && c.is_ascii_digit()))
            .map(|(_, c)| c.len_utf8())
            .sum();
        if len == 0 {
            return Err(self.error("expected a generator name"));
        }
        self.pos += len;
        Ok(rest[..len].to_string())
    }

    pub(crate) fn finish(&mut self) -> Result<(), ParseError> {
        match self.peek() {
            None => Ok(()),
            Some(c) => Err(self.error(format!("unexpected trailing `{c}`"))),
        }
    }
}

pub fn parse_unlabeled(text: &str) -> Result<UnlabeledTree, ParseError> {
    let mut cur = Cursor::new(text);
    let tree = unlabeled(&mut cur)?;
    cur.finish()?;
    Ok(tree)
}

fn unlabeled(cur: &mut Cursor<'_>) -> Result<UnlabeledTree, ParseError> {
    cur.expect('(')?;
    let mut children = Vec::new();
    while cur.peek() == Some('(') {
        children.push(unlabeled(cur)?);
    }
    cur.expect(')')?;
    Ok(UnlabeledTree::new(children))
}

pub fn parse_labeled(text: &str) -> Result<LabeledTree, ParseError> {
    let mut cur = Cursor::new(text);
    // (label, parent label, position)
    let mut entries = Vec::new();
    labeled(&mut cur, 0, &mut entries)?;
    cur.finish()?;

    let n = entries.len();
    let mut parent = vec![None; n];
    let mut seen = vec![false; n];
    for &(label, up, at) in &entries {
        if label == 0 || label > n {
            return Err(ParseError::new(at, format!("label {label} outside 1..{n}")));
        }
        if std::mem::replace(&mut seen[label - 1], true) {
            return Err(ParseError::new(at, format!("label {label} repeated")));
        }
        parent[label - 1] = (up != 0).then_some(up);
    }
    LabeledTree::from_parents(parent).map_err(|e| ParseError::new(0, e.to_string()))
}

fn labeled(
    cur: &mut Cursor<'_>,
    up: usize,
    entries: &mut Vec<(usize, usize, usize)>,
) -> Result<(), ParseError> {
    cur.skip_ws();
    let at = cur.pos();
    let label = cur.integer()?;
    entries.push((label, up, at));
    if cur.eat('(') {
        loop {
            labeled(cur, label, entries)?;
            if !cur.eat(',') {
                break;
            }
        }
        cur.expect(')')?;
    }
    Ok(())
}

/// Parses a planar term. Generator arities are read off the child count;
/// leaves must read `1..k` from left to right.
pub fn parse_planar(text: &str) -> Result<PlanarTerm, ParseError> {
    let mut cur = Cursor::new(text);
    let mut next_leaf = 1;
    let term = planar(&mut cur, &mut next_leaf)?;
    cur.finish()?;
    Ok(term)
}

fn planar(cur: &mut Cursor<'_>, next_leaf: &mut usize) -> Result<PlanarTerm, ParseError> {
    match cur.peek() {
        Some(c) if c.is_ascii_digit() => {
            let at = cur.pos();
            let leaf = cur.integer()?;
            if leaf != *next_leaf {
                return Err(ParseError::new(
                    at,
                    format!("expected leaf {}, found {leaf}", *next_leaf),
                ));
            }
            *next_leaf += 1;
            Ok(PlanarTerm::Leaf(leaf))
        }
        _ => {
            let name = cur.name()?;
            cur.expect('(')?;
            let mut children = Vec::new();
            loop {
                children.push(planar(cur, next_leaf)?);
                if !cur.eat(',') {
                    break;
                }
            }
            cur.expect(')')?;
            let generator = Generator::new(name, children.len());
            Ok(PlanarTerm::Node(generator, children))
        }
    }
}
