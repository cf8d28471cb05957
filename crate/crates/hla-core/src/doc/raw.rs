//! Line-oriented reader for the document syntax: `[dotted.section]` headers,
//! `key = value` entries, `#` comments, and three single-line value forms
//! (quoted string, array of strings, inline table of key/string pairs).
//! Quoted strings have no escape sequences. Positions are 1-based.

use super::ParseError;

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct Pos {
    pub line: usize,
    pub col: usize,
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub enum RawValue {
    Str(String),
    Arr(Vec<(String, Pos)>),
    Table(Vec<(String, String, Pos)>),
}

#[derive(Clone, Debug)]
pub struct RawEntry {
    pub key: String,
    pub pos: Pos,
    pub value: RawValue,
}

#[derive(Clone, Debug)]
pub struct RawSection {
    pub path: Vec<String>,
    pub pos: Pos,
    pub entries: Vec<RawEntry>,
}

#[derive(Clone, Debug, Default)]
pub struct RawDoc {
    pub root: Vec<RawEntry>,
    pub sections: Vec<RawSection>,
}

pub fn parse_raw(text: &str) -> Result<RawDoc, ParseError> {
    let mut doc = RawDoc::default();
    let mut current: Option<usize> = None;
    for (i, line) in text.lines().enumerate() {
        let mut cur = Cursor::new(line, i + 1);
        cur.skip_ws();
        match cur.peek() {
            None | Some('#') => continue,
            Some('[') => {
                let pos = cur.pos();
                cur.bump();
                let mut path = Vec::new();
                loop {
                    cur.skip_ws();
                    let (name, _) = cur.component()?;
                    path.push(name);
                    cur.skip_ws();
                    match cur.peek() {
                        Some('.') => {
                            cur.bump();
                        }
                        Some(']') => {
                            cur.bump();
                            break;
                        }
                        _ => return Err(cur.err("expected '.' or ']' in section header")),
                    }
                }
                cur.end_of_line()?;
                if doc.sections.iter().any(|s| s.path == path) {
                    return Err(ParseError::at(
                        pos,
                        format!("duplicate section [{}]", path.join(".")),
                    ));
                }
                doc.sections.push(RawSection { path, pos, entries: Vec::new() });
                current = Some(doc.sections.len() - 1);
            }
            _ => {
                let (key, pos) = cur.component()?;
                cur.skip_ws();
                cur.expect('=')?;
                cur.skip_ws();
                let value = cur.value()?;
                cur.end_of_line()?;
                let entries = match current {
                    Some(s) => &mut doc.sections[s].entries,
                    None => &mut doc.root,
                };
                if entries.iter().any(|e| e.key == key) {
                    return Err(ParseError::at(pos, format!("duplicate key {key:?}")));
                }
                entries.push(RawEntry { key, pos, value });
            }
        }
    }
    Ok(doc)
}

struct Cursor {
    chars: Vec<char>,
    i: usize,
    line: usize,
}

fn is_bare(c: char) -> bool {
    c.is_ascii_alphanumeric() || c == '_' || c == '-'
}

impl Cursor {
    fn new(s: &str, line: usize) -> Self {
        Cursor { chars: s.chars().collect(), i: 0, line }
    }

    fn pos(&self) -> Pos {
        Pos { line: self.line, col: self.i + 1 }
    }

    fn peek(&self) -> Option<char> {
        self.chars.get(self.i).copied()
    }

    fn bump(&mut self) -> Option<char> {
        let c = self.peek();
        if c.is_some() {
            self.i += 1;
        }
        c
    }

    fn skip_ws(&mut self) {
        while matches!(self.peek(), Some(' ' | '\t')) {
            self.i += 1;
        }
    }

    fn err(&self, message: impl Into<String>) -> ParseError {
        ParseError::at(self.pos(), message)
    }

    fn expect(&mut self, ch: char) -> Result<(), ParseError> {
        if self.peek() == Some(ch) {
            self.i += 1;
            Ok(())
        } else {
            Err(self.err(format!("expected {ch:?}")))
        }
    }

    /// A bare word or a quoted string, with its start position.
    fn component(&mut self) -> Result<(String, Pos), ParseError> {
        let pos = self.pos();
        match self.peek() {
            Some('"') => Ok((self.quoted()?, pos)),
            Some(c) if is_bare(c) => {
                let mut s = String::new();
                while let Some(c) = self.peek() {
                    if !is_bare(c) {
                        break;
                    }
                    s.push(c);
                    self.i += 1;
                }
                Ok((s, pos))
            }
            _ => Err(self.err("expected a name (bare or quoted)")),
        }
    }

    fn quoted(&mut self) -> Result<String, ParseError> {
        let start = self.pos();
        self.expect('"')?;
        let mut s = String::new();
        loop {
            match self.bump() {
                None => return Err(ParseError::at(start, "unterminated string")),
                Some('"') => return Ok(s),
                Some('\\') => {
                    return Err(ParseError::at(start, "escape sequences are not supported"))
                }
                Some(c) => s.push(c),
            }
        }
    }

    fn value(&mut self) -> Result<RawValue, ParseError> {
        match self.peek() {
            Some('"') => Ok(RawValue::Str(self.quoted()?)),
            Some('[') => {
                self.bump();
                let mut items = Vec::new();
                loop {
                    self.skip_ws();
                    match self.peek() {
                        Some(']') => {
                            self.bump();
                            break;
                        }
                        Some('"') => {
                            let pos = self.pos();
                            items.push((self.quoted()?, pos));
                            self.skip_ws();
                            match self.peek() {
                                Some(',') => {
                                    self.bump();
                                }
                                Some(']') => {
                                    self.bump();
                                    break;
                                }
                                _ => return Err(self.err("expected ',' or ']' in array")),
                            }
                        }
                        _ => return Err(self.err("expected a string or ']' in array")),
                    }
                }
                Ok(RawValue::Arr(items))
            }
            Some('{') => {
                self.bump();
                let mut pairs: Vec<(String, String, Pos)> = Vec::new();
                self.skip_ws();
                if self.peek() == Some('}') {
                    self.bump();
                    return Ok(RawValue::Table(pairs));
                }
                loop {
                    self.skip_ws();
                    let (key, pos) = self.component()?;
                    if pairs.iter().any(|(k, _, _)| k == &key) {
                        return Err(ParseError::at(
                            pos,
                            format!("duplicate key {key:?} in inline table"),
                        ));
                    }
                    self.skip_ws();
                    self.expect('=')?;
                    self.skip_ws();
                    let value = self.quoted()?;
                    pairs.push((key, value, pos));
                    self.skip_ws();
                    match self.peek() {
                        Some(',') => {
                            self.bump();
                        }
                        Some('}') => {
                            self.bump();
                            break;
                        }
                        _ => return Err(self.err("expected ',' or '}' in inline table")),
                    }
                }
                Ok(RawValue::Table(pairs))
            }
            _ => Err(self.err("expected a string, array, or inline table")),
        }
    }

    fn end_of_line(&mut self) -> Result<(), ParseError> {
        self.skip_ws();
        match self.peek() {
            None | Some('#') => Ok(()),
            _ => Err(self.err("unexpected trailing characters")),
        }
    }
}
