//! Text formats for groups, elements and subsets.
//!
//! - Group: invariant or prime-power factors separated by `,`, `x` or
//!   whitespace, e.g. `4,2`. `1`, `trivial` and the empty string give the
//!   trivial group.
//! - Element: coordinates in parentheses, `(3,1)`, or a bare integer read as the
//!   element index (the value itself in a cyclic group).
//! - Subset: elements in braces, `{1,3}` or `{(1,0),(0,1)}`, optionally
//!   prefixed by `complement:` to take the complement in `G`.

use std::fmt;

use sumgraph_core::{Element, GSubset, GroupSpec};

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
#[error("parse error at position {position}: {message}")]
pub struct ParseError {
    /// Byte offset into the input.
    pub position: usize,
    pub message: String,
}

impl ParseError {
    fn new(position: usize, message: impl Into<String>) -> Self {
        ParseError {
            position,
            message: message.into(),
        }
    }
}

pub fn parse_group(text: &str) -> Result<GroupSpec, ParseError> {
    let trimmed = text.trim();
    if trimmed.is_empty() || trimmed == "1" || trimmed.eq_ignore_ascii_case("trivial") {
        return Ok(GroupSpec::trivial());
    }
    let mut factors = Vec::new();
    let mut cur = Cursor::new(text);
    loop {
        cur.skip_ws();
        let start = cur.pos;
        let n = cur.number()?;
        if n < 2 {
            return Err(ParseError::new(start, format!("cyclic factor {n} must be at least 2")));
        }
        factors.push(n);
        cur.skip_ws();
        match cur.peek() {
            None => break,
            Some(',') | Some('x') | Some('X') => cur.bump(),
            Some(_) => {}
        }
    }
    GroupSpec::new(&factors).map_err(|e| ParseError::new(0, e.to_string()))
}

pub fn parse_element(group: &GroupSpec, text: &str) -> Result<Element, ParseError> {
    let mut cur = Cursor::new(text);
    let e = cur.element(group)?;
    cur.end()?;
    Ok(e)
}

pub fn parse_subset(group: &GroupSpec, text: &str) -> Result<GSubset, ParseError> {
    let mut cur = Cursor::new(text);
    cur.skip_ws();
    let complement = cur.keyword("complement:");
    cur.skip_ws();
    cur.expect('{')?;
    let mut set = group.empty_set();
    cur.skip_ws();
    if cur.peek() == Some('}') {
        cur.bump();
    } else {
        loop {
            let e = cur.element(group)?;
            set.insert(e);
            cur.skip_ws();
            match cur.peek() {
                Some(',') => cur.bump(),
                Some('}') => {
                    cur.bump();
                    break;
                }
                _ => return Err(cur.error("expected ',' or '}'")),
            }
        }
    }
    cur.end()?;
    Ok(if complement { set.complement() } else { set })
}

fn is_cyclic(group: &GroupSpec) -> bool {
    group.factors().len() <= 1
}

/// `(3,1)` in a product, a bare index in a cyclic group.
pub fn format_element(group: &GroupSpec, e: Element) -> String {
    if is_cyclic(group) {
        return e.index().to_string();
    }
    let coords: Vec<String> = group.coords(e).iter().map(|c| c.to_string()).collect();
    format!("({})", coords.join(","))
}

pub fn format_subset(group: &GroupSpec, s: &GSubset) -> String {
    let items: Vec<String> = s.iter().map(|e| format_element(group, e)).collect();
    format!("{{{}}}", items.join(","))
}

/// `Z4 ⊕ Z2`, `{0}` for the trivial group.
pub fn format_group(group: &GroupSpec) -> String {
    if group.factors().is_empty() {
        return "{0}".to_string();
    }
    let parts: Vec<String> = group.factors().iter().map(|f| format!("Z{f}")).collect();
    parts.join(" ⊕ ")
}

/// Group spec in the form [`parse_group`] reads.
pub struct GroupArg<'a>(pub &'a GroupSpec);

impl fmt::Display for GroupArg<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.factors().is_empty() {
            return f.write_str("1");
        }
        let parts: Vec<String> = self.0.factors().iter().map(|x| x.to_string()).collect();
        f.write_str(&parts.join(","))
    }
}

struct Cursor<'a> {
    text: &'a str,
    pos: usize,
}

impl<'a> Cursor<'a> {
    fn new(text: &'a str) -> Self {
        Cursor { text, pos: 0 }
    }

    fn peek(&self) -> Option<char> {
        self.text[self.pos..].chars().next()
    }

    fn bump(&mut self) {
        if let Some(c) = self.peek() {
            self.pos += c.len_utf8();
        }
    }

    fn skip_ws(&mut self) {
        while self.peek().is_some_and(char::is_whitespace) {
            self.bump();
        }
    }

    fn error(&self, message: &str) -> ParseError {
        match self.peek() {
            Some(c) => ParseError::new(self.pos, format!("{message}, found '{c}'")),
            None => ParseError::new(self.pos, format!("{message}, found end of input")),
        }
    }

    fn keyword(&mut self, word: &str) -> bool {
        if self.text[self.pos..].starts_with(word) {
            self.pos += word.len();
            true
        } else {
            false
        }
    }

    fn expect(&mut self, c: char) -> Result<(), ParseError> {
        if self.peek() == Some(c) {
            self.bump();
            Ok(())
        } else {
            Err(self.error(&format!("expected '{c}'")))
        }
    }

    fn end(&mut self) -> Result<(), ParseError> {
        self.skip_ws();
        if self.peek().is_none() {
            Ok(())
        } else {
            Err(self.error("unexpected trailing input"))
        }
    }

    fn number(&mut self) -> Result<usize, ParseError> {
        let start = self.pos;
        while self.peek().is_some_and(|c| c.is_ascii_digit()) {
            self.bump();
        }
        if start == self.pos {
            return Err(self.error("expected a number"));
        }
        self.text[start..self.pos]
            .parse()
            .map_err(|_| ParseError::new(start, "number out of range"))
    }

    fn element(&mut self, group: &GroupSpec) -> Result<Element, ParseError> {
        self.skip_ws();
        let start = self.pos;
        if self.peek() == Some('(') {
            self.bump();
            let mut coords = Vec::new();
            loop {
                self.skip_ws();
                coords.push(self.number()?);
                self.skip_ws();
                match self.peek() {
                    Some(',') => self.bump(),
                    Some(')') => {
                        self.bump();
                        break;
                    }
                    _ => return Err(self.error("expected ',' or ')'")),
                }
            }
            group
                .element(&coords)
                .map_err(|e| ParseError::new(start, e.to_string()))
        } else {
            let i = self.number()?;
            group
                .element_at(i)
                .map_err(|e| ParseError::new(start, e.to_string()))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn groups() {
        assert_eq!(parse_group("4,2").unwrap().factors(), [4, 2]);
        assert_eq!(parse_group(" 4 x 2 ").unwrap().factors(), [4, 2]);
        assert_eq!(parse_group("").unwrap().order(), 1);
        assert_eq!(parse_group("trivial").unwrap().order(), 1);
        assert_eq!(parse_group("1").unwrap().order(), 1);
        assert_eq!(parse_group("4,a").unwrap_err().position, 2);
        assert_eq!(parse_group("4,1").unwrap_err().position, 2);
    }

    #[test]
    fn subsets() {
        let z4 = parse_group("4").unwrap();
        let s = parse_subset(&z4, "{1,3}").unwrap();
        assert_eq!(s.indices().collect::<Vec<_>>(), [1, 3]);
        let c = parse_subset(&z4, "complement:{1,3}").unwrap();
        assert_eq!(c.indices().collect::<Vec<_>>(), [0, 2]);
        assert!(parse_subset(&z4, "{}").unwrap().is_empty());
        let g = parse_group("4,2").unwrap();
        let s = parse_subset(&g, "{(1,0), (0,1)}").unwrap();
        assert_eq!(format_subset(&g, &s), "{(0,1),(1,0)}");
    }

    #[test]
    fn errors_carry_positions() {
        let z4 = parse_group("4").unwrap();
        assert_eq!(parse_subset(&z4, "{1,7}").unwrap_err().position, 3);
        assert_eq!(parse_subset(&z4, "{1;3}").unwrap_err().position, 2);
        assert_eq!(parse_subset(&z4, "1,3").unwrap_err().position, 0);
        assert_eq!(parse_subset(&z4, "{1,3} x").unwrap_err().position, 6);
        let g = parse_group("4,2").unwrap();
        assert_eq!(parse_subset(&g, "{(1,2)}").unwrap_err().position, 1);
    }

    #[test]
    fn formatting_round_trips() {
        for spec in ["8", "4,2", "2,2,2", "1"] {
            let g = parse_group(spec).unwrap();
            assert_eq!(parse_group(&GroupArg(&g).to_string()).unwrap(), g);
            let s = GSubset::from_indices(g.order(), (0..g.order()).step_by(3));
            assert_eq!(parse_subset(&g, &format_subset(&g, &s)).unwrap(), s);
        }
    }
}
