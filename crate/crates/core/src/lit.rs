use crate::error::{Error, Result};
use crate::forest::{Forest, OrderedTree};
use crate::perm::Permutation;
use crate::subset::Subset;
use crate::tree::Tree;

fn parse_err(pos: usize, expected: &str) -> Error {
    Error::Parse { pos, expected: expected.to_string() }
}

struct Cursor<'a> {
    bytes: &'a [u8],
    pos: usize,
}

impl<'a> Cursor<'a> {
    fn new(s: &'a str) -> Self {
        Cursor { bytes: s.as_bytes(), pos: 0 }
    }

    fn peek(&self) -> Option<u8> {
        self.bytes.get(self.pos).copied()
    }

    fn expect(&mut self, b: u8) -> Result<()> {
        if self.peek() == Some(b) {
            self.pos += 1;
            Ok(())
        } else {
            Err(parse_err(self.pos, &format!("'{}'", b as char)))
        }
    }

    fn number(&mut self) -> Result<usize> {
        let start = self.pos;
        while matches!(self.peek(), Some(b'0'..=b'9')) {
            self.pos += 1;
        }
        if self.pos == start {
            return Err(parse_err(start, "digit"));
        }
        std::str::from_utf8(&self.bytes[start..self.pos])
            .unwrap()
            .parse()
            .map_err(|_| parse_err(start, "number"))
    }

    fn done(&self) -> Result<()> {
        if self.pos == self.bytes.len() {
            Ok(())
        } else {
            Err(parse_err(self.pos, "end of input"))
        }
    }
}

/// Binary tree literal: "." for a leaf, "(LR)" for a node.
pub fn parse_tree(s: &str) -> Result<Tree> {
    let mut c = Cursor::new(s);
    let t = tree_inner(&mut c)?;
    c.done()?;
    Ok(t)
}

fn tree_inner(c: &mut Cursor) -> Result<Tree> {
    match c.peek() {
        Some(b'.') => {
            c.pos += 1;
            Ok(Tree::Leaf)
        }
        Some(b'(') => {
            c.pos += 1;
            let l = tree_inner(c)?;
            let r = tree_inner(c)?;
            c.expect(b')')?;
            Ok(Tree::node(l, r))
        }
        _ => Err(parse_err(c.pos, "'.' or '('")),
    }
}

/// Permutation literal: "p:41253" for degree <= 9, "p:10,3,..." otherwise,
/// "p:" for the empty permutation.
pub fn parse_perm(s: &str) -> Result<Permutation> {
    let Some(body) = s.strip_prefix("p:") else {
        return Err(parse_err(0, "\"p:\""));
    };
    let word: Vec<usize> = if body.is_empty() {
        vec![]
    } else if body.contains(',') {
        let mut c = Cursor::new(body);
        let mut w = vec![c.number()?];
        while c.peek() == Some(b',') {
            c.pos += 1;
            w.push(c.number()?);
        }
        c.done()?;
        w
    } else {
        let mut w = Vec::new();
        for (i, ch) in body.bytes().enumerate() {
            if !ch.is_ascii_digit() || ch == b'0' {
                return Err(parse_err(2 + i, "digit 1-9"));
            }
            w.push((ch - b'0') as usize);
        }
        w
    };
    Permutation::from_word(word)
}

pub fn perm_literal(p: &Permutation) -> String {
    if p.degree() <= 9 {
        let digits: String = p.word().iter().map(|v| v.to_string()).collect();
        format!("p:{digits}")
    } else {
        let parts: Vec<String> = p.word().iter().map(|v| v.to_string()).collect();
        format!("p:{}", parts.join(","))
    }
}

/// Subset literal "{2,5,7}"; the ambient bound is supplied by the caller.
pub fn parse_subset(s: &str, ambient: usize) -> Result<Subset> {
    let mut c = Cursor::new(s);
    c.expect(b'{')?;
    let mut members = Vec::new();
    if c.peek() != Some(b'}') {
        members.push(c.number()?);
        while c.peek() == Some(b',') {
            c.pos += 1;
            members.push(c.number()?);
        }
    }
    c.expect(b'}')?;
    c.done()?;
    Subset::from_members(members, ambient)
}

pub fn subset_literal(s: &Subset) -> String {
    let parts: Vec<String> = s.members().iter().map(|m| m.to_string()).collect();
    format!("{{{}}}", parts.join(","))
}

/// Composition literal "c:2,1"; "c:" is the empty composition.
pub fn parse_composition(s: &str) -> Result<Vec<usize>> {
    parse_parts(s, "c:")
}

/// Partition literal "h:2,1"; parts must be weakly decreasing.
pub fn parse_partition(s: &str) -> Result<Vec<usize>> {
    let parts = parse_parts(s, "h:")?;
    if parts.windows(2).any(|w| w[0] < w[1]) {
        return Err(parse_err(2, "weakly decreasing parts"));
    }
    Ok(parts)
}

fn parse_parts(s: &str, prefix: &str) -> Result<Vec<usize>> {
    let Some(body) = s.strip_prefix(prefix) else {
        return Err(parse_err(0, &format!("\"{prefix}\"")));
    };
    if body.is_empty() {
        return Ok(vec![]);
    }
    let mut c = Cursor::new(body);
    let mut parts = vec![c.number()?];
    while c.peek() == Some(b',') {
        c.pos += 1;
        parts.push(c.number()?);
    }
    c.done()?;
    if parts.contains(&0) {
        return Err(parse_err(0, "positive parts"));
    }
    Ok(parts)
}

pub fn composition_literal(alpha: &[usize]) -> String {
    let parts: Vec<String> = alpha.iter().map(|a| a.to_string()).collect();
    format!("c:{}", parts.join(","))
}

pub fn partition_literal(lambda: &[usize]) -> String {
    let parts: Vec<String> = lambda.iter().map(|a| a.to_string()).collect();
    format!("h:{}", parts.join(","))
}

/// Forest literal: space-separated ordered trees "(...)", "∅" when empty.
pub fn parse_forest(s: &str) -> Result<Forest> {
    if s == "∅" {
        return Ok(Forest::empty());
    }
    let mut trees = Vec::new();
    let mut c = Cursor::new(s);
    loop {
        trees.push(ordered_tree_inner(&mut c)?);
        match c.peek() {
            None => break,
            Some(b' ') => c.pos += 1,
            _ => return Err(parse_err(c.pos, "' ' or end of input")),
        }
    }
    Ok(Forest(trees))
}

fn ordered_tree_inner(c: &mut Cursor) -> Result<OrderedTree> {
    c.expect(b'(')?;
    let mut children = Vec::new();
    while c.peek() == Some(b'(') {
        children.push(ordered_tree_inner(c)?);
    }
    c.expect(b')')?;
    Ok(OrderedTree { children })
}
