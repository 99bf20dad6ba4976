//! The line-oriented lattice file format.
//!
//! ```text
//! # comment
//! name: K
//! elements: 0 a b c d 1
//! order:
//!   0 < a < b < d
//!   0 < c < d < 1
//! multiplication: trivial
//! sets:
//!   X = {0, a, b, c, d}
//!   Z = zdiv
//! ```
//!
//! Top-level lines are `key: value`; indented lines belong to the section
//! opened by the last top-level line. `multiplication` is `trivial`, `meet`
//! or `table`, the latter followed by one indented row `x: x·e1 x·e2 ...` per
//! element in `elements` order. Set definitions are explicit member lists or
//! one of `zdiv`, `nil-downset`, `jrad-downset`, `downset <label>`.

use std::collections::HashMap;
use std::fmt::{self, Write as _};

use xlattice::{MClosedSet, MultiplicativeLattice};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("line {line}, column {column}: {message}")]
pub struct ParseError {
    pub line: usize,
    pub column: usize,
    pub message: String,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Multiplication {
    Trivial,
    Meet,
    /// Rows in `elements` order, entries as labels.
    Table(Vec<Vec<String>>),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SetDef {
    Explicit(Vec<String>),
    ZeroDivisors,
    NilDownset,
    JradDownset,
    Downset(String),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SetDecl {
    pub name: String,
    pub def: SetDef,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LatticeSpecFile {
    pub name: String,
    pub elements: Vec<String>,
    /// `(lower, upper)` pairs by label.
    pub order: Vec<(String, String)>,
    pub multiplication: Multiplication,
    pub sets: Vec<SetDecl>,
}

const PUNCT: &[char] = &['{', '}', ',', '=', '<', ':'];

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Tok<'a> {
    Word(&'a str),
    Punct(char),
}

#[derive(Debug, Clone, Copy)]
struct Token<'a> {
    col: usize,
    tok: Tok<'a>,
}

impl fmt::Display for Tok<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Tok::Word(w) => write!(f, "`{w}`"),
            Tok::Punct(c) => write!(f, "`{c}`"),
        }
    }
}

fn tokenize(line: &str) -> Vec<Token<'_>> {
    let mut out = Vec::new();
    let mut start: Option<(usize, usize)> = None;
    let mut col = 0;
    for (byte, ch) in line.char_indices() {
        col += 1;
        if ch == '#' {
            break;
        }
        if ch.is_whitespace() || PUNCT.contains(&ch) {
            if let Some((b, c)) = start.take() {
                out.push(Token { col: c, tok: Tok::Word(&line[b..byte]) });
            }
            if !ch.is_whitespace() {
                out.push(Token { col, tok: Tok::Punct(ch) });
            }
        } else if start.is_none() {
            start = Some((byte, col));
        }
    }
    if let Some((b, c)) = start {
        let end = line.find('#').unwrap_or(line.len());
        out.push(Token { col: c, tok: Tok::Word(&line[b..end]) });
    }
    out
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Section {
    None,
    Order,
    Table,
    Sets,
}

struct Parser<'a> {
    line: usize,
    /// Column just past the end of the current line, for "expected more" errors.
    eol: usize,
    tokens: Vec<Token<'a>>,
    pos: usize,
}

impl<'a> Parser<'a> {
    fn err<T>(&self, column: usize, message: impl Into<String>) -> Result<T, ParseError> {
        Err(ParseError { line: self.line, column, message: message.into() })
    }

    fn next(&mut self) -> Option<Token<'a>> {
        let t = self.tokens.get(self.pos).copied();
        self.pos += 1;
        t
    }

    fn peek(&self) -> Option<Token<'a>> {
        self.tokens.get(self.pos).copied()
    }

    fn word(&mut self, what: &str) -> Result<(usize, &'a str), ParseError> {
        match self.next() {
            Some(Token { col, tok: Tok::Word(w) }) => Ok((col, w)),
            Some(t) => self.err(t.col, format!("expected {what}, found {}", t.tok)),
            None => self.err(self.eol, format!("expected {what}")),
        }
    }

    fn punct(&mut self, c: char) -> Result<(), ParseError> {
        match self.next() {
            Some(Token { tok: Tok::Punct(p), .. }) if p == c => Ok(()),
            Some(t) => self.err(t.col, format!("expected `{c}`, found {}", t.tok)),
            None => self.err(self.eol, format!("expected `{c}`")),
        }
    }

    fn end(&mut self) -> Result<(), ParseError> {
        match self.peek() {
            None => Ok(()),
            Some(t) => self.err(t.col, format!("unexpected {}", t.tok)),
        }
    }
}

struct Labels {
    index: HashMap<String, usize>,
}

impl Labels {
    fn resolve(&self, p: &Parser<'_>, col: usize, label: &str) -> Result<(), ParseError> {
        if self.index.contains_key(label) {
            Ok(())
        } else {
            p.err(col, format!("unknown element `{label}`"))
        }
    }
}

/// Parses a lattice file. Label references are checked here; axioms are
/// checked by [`crate::load::load`].
pub fn parse_spec(text: &str) -> Result<LatticeSpecFile, ParseError> {
    let mut name: Option<String> = None;
    let mut elements: Option<(Vec<String>, Labels)> = None;
    let mut order = Vec::new();
    let mut mult: Option<(usize, Multiplication)> = None;
    let mut rows: Vec<Option<Vec<String>>> = Vec::new();
    let mut sets: Vec<SetDecl> = Vec::new();
    let mut section = Section::None;
    let mut seen: Vec<&str> = Vec::new();
    let mut last_line = 0;

    for (n, raw) in text.lines().enumerate() {
        last_line = n + 1;
        let tokens = tokenize(raw);
        if tokens.is_empty() {
            continue;
        }
        let mut p = Parser { line: n + 1, eol: raw.chars().count() + 1, tokens, pos: 0 };
        let indented = raw.starts_with(char::is_whitespace);

        if indented {
            let labels = elements.as_ref().map(|(_, l)| l);
            match section {
                Section::None => return p.err(p.tokens[0].col, "indented line outside a section"),
                Section::Order => {
                    let labels = labels.expect("order section requires elements");
                    let (col, mut lower) = p.word("element")?;
                    labels.resolve(&p, col, lower)?;
                    let mut any = false;
                    while p.peek().is_some() {
                        p.punct('<')?;
                        let (col, upper) = p.word("element")?;
                        labels.resolve(&p, col, upper)?;
                        order.push((lower.to_string(), upper.to_string()));
                        lower = upper;
                        any = true;
                    }
                    if !any {
                        return p.err(p.eol, "expected `<`");
                    }
                }
                Section::Table => {
                    let labels = labels.expect("table section requires elements");
                    let (col, row) = p.word("element")?;
                    labels.resolve(&p, col, row)?;
                    let k = labels.index[row];
                    if rows[k].is_some() {
                        return p.err(col, format!("duplicate row for `{row}`"));
                    }
                    p.punct(':')?;
                    let mut entries = Vec::new();
                    while p.peek().is_some() {
                        let (col, e) = p.word("element")?;
                        labels.resolve(&p, col, e)?;
                        entries.push(e.to_string());
                    }
                    if entries.len() != labels.index.len() {
                        return p.err(
                            p.eol,
                            format!("row has {} entries, expected {}", entries.len(), labels.index.len()),
                        );
                    }
                    rows[k] = Some(entries);
                }
                Section::Sets => {
                    let (col, set_name) = p.word("set name")?;
                    if sets.iter().any(|s| s.name == set_name) {
                        return p.err(col, format!("duplicate set `{set_name}`"));
                    }
                    p.punct('=')?;
                    let labels = labels.expect("sets section requires elements");
                    let def = match p.peek() {
                        Some(Token { tok: Tok::Punct('{'), .. }) => {
                            p.next();
                            let mut members = Vec::new();
                            if !matches!(p.peek(), Some(Token { tok: Tok::Punct('}'), .. })) {
                                loop {
                                    let (col, e) = p.word("element")?;
                                    labels.resolve(&p, col, e)?;
                                    members.push(e.to_string());
                                    match p.next() {
                                        Some(Token { tok: Tok::Punct(','), .. }) => continue,
                                        Some(Token { tok: Tok::Punct('}'), .. }) => break,
                                        Some(t) => return p.err(t.col, format!("expected `,` or `}}`, found {}", t.tok)),
                                        None => return p.err(p.eol, "expected `}`"),
                                    }
                                }
                            } else {
                                p.next();
                            }
                            SetDef::Explicit(members)
                        }
                        _ => {
                            let (col, kw) = p.word("`{`, zdiv, nil-downset, jrad-downset or downset")?;
                            match kw {
                                "zdiv" => SetDef::ZeroDivisors,
                                "nil-downset" => SetDef::NilDownset,
                                "jrad-downset" => SetDef::JradDownset,
                                "downset" => {
                                    let (col, e) = p.word("element")?;
                                    labels.resolve(&p, col, e)?;
                                    SetDef::Downset(e.to_string())
                                }
                                other => return p.err(col, format!("unknown set form `{other}`")),
                            }
                        }
                    };
                    p.end()?;
                    sets.push(SetDecl { name: set_name.to_string(), def });
                }
            }
            continue;
        }

        let (col, key) = p.word("section name")?;
        p.punct(':')?;
        let key = match key {
            "name" | "elements" | "order" | "multiplication" | "sets" => key,
            other => return p.err(col, format!("unknown section `{other}`")),
        };
        if seen.contains(&key) {
            return p.err(col, format!("duplicate section `{key}`"));
        }
        seen.push(key);
        if key != "name" && key != "elements" && elements.is_none() {
            return p.err(col, format!("`elements` must come before `{key}`"));
        }
        section = Section::None;
        match key {
            "name" => {
                // Everything after the colon, verbatim.
                let rest = raw.split_once(':').map(|(_, r)| r).unwrap_or("");
                let rest = rest.split('#').next().unwrap_or("").trim();
                if rest.is_empty() {
                    return p.err(p.eol, "expected a name");
                }
                name = Some(rest.to_string());
            }
            "elements" => {
                let mut labels = Vec::new();
                let mut index = HashMap::new();
                while p.peek().is_some() {
                    let (col, l) = p.word("element label")?;
                    if index.insert(l.to_string(), labels.len()).is_some() {
                        return p.err(col, format!("duplicate element `{l}`"));
                    }
                    labels.push(l.to_string());
                }
                if labels.is_empty() {
                    return p.err(p.eol, "expected at least one element");
                }
                rows = vec![None; labels.len()];
                elements = Some((labels, Labels { index }));
            }
            "order" => {
                p.end()?;
                section = Section::Order;
            }
            "multiplication" => {
                let (kcol, kind) = p.word("trivial, meet or table")?;
                p.end()?;
                let m = match kind {
                    "trivial" => Multiplication::Trivial,
                    "meet" => Multiplication::Meet,
                    "table" => {
                        section = Section::Table;
                        Multiplication::Table(Vec::new())
                    }
                    other => return p.err(kcol, format!("unknown multiplication `{other}`")),
                };
                mult = Some((p.line, m));
            }
            "sets" => {
                p.end()?;
                section = Section::Sets;
            }
            _ => unreachable!(),
        }
    }

    let missing = |what: &str| ParseError {
        line: last_line + 1,
        column: 1,
        message: format!("missing `{what}` section"),
    };
    let name = name.ok_or_else(|| missing("name"))?;
    let (elements, _) = elements.ok_or_else(|| missing("elements"))?;
    let (mult_line, mut multiplication) = mult.ok_or_else(|| missing("multiplication"))?;
    if let Multiplication::Table(table) = &mut multiplication {
        for (k, row) in rows.into_iter().enumerate() {
            match row {
                Some(r) => table.push(r),
                None => {
                    return Err(ParseError {
                        line: mult_line,
                        column: 1,
                        message: format!("table has no row for `{}`", elements[k]),
                    })
                }
            }
        }
    }
    Ok(LatticeSpecFile { name, elements, order, multiplication, sets })
}

fn valid_label(l: &str) -> bool {
    !l.is_empty() && !l.chars().any(|c| c.is_whitespace() || c == '#' || PUNCT.contains(&c))
}

/// Writes `m` as a lattice file with an explicit table and explicit set
/// members. Labels must be free of whitespace and `{},=<:#`.
pub fn render(name: &str, m: &MultiplicativeLattice, sets: &[(String, MClosedSet)]) -> String {
    for l in m.labels() {
        assert!(valid_label(l), "label `{l}` cannot be written to a lattice file");
    }
    let mut out = String::new();
    writeln!(out, "name: {name}").unwrap();
    writeln!(out, "elements: {}", m.labels().join(" ")).unwrap();
    let covers = m.covers();
    if !covers.is_empty() {
        writeln!(out, "order:").unwrap();
        for (lo, hi) in covers {
            writeln!(out, "  {} < {}", m.label(lo), m.label(hi)).unwrap();
        }
    }
    writeln!(out, "multiplication: table").unwrap();
    for a in m.elements() {
        let row: Vec<&str> = m.elements().map(|b| m.label(m.mul(a, b))).collect();
        writeln!(out, "  {}: {}", m.label(a), row.join(" ")).unwrap();
    }
    if !sets.is_empty() {
        writeln!(out, "sets:").unwrap();
        for (set_name, x) in sets {
            let members: Vec<&str> = x.members().iter().map(|e| m.label(e)).collect();
            writeln!(out, "  {set_name} = {{{}}}", members.join(", ")).unwrap();
        }
    }
    out
}
