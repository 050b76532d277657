//! Inflection paradigms: a small cursor-editing language applied to a lemma.
//!
//! A production is a list of commands run on a buffer holding the lemma,
//! with the cursor starting at the end:
//!
//! * a literal inserts text right after the cursor; the cursor stays put,
//! * `<L>`/`<L2>` and `<R>`/`<R2>` move the cursor one or two units,
//! * `<B>`/`<B2>` delete one or two units left of the cursor,
//! * `<E>` is the empty production.
//!
//! A unit is a character in `char` mode and a letter (digraphs included) in
//! `grapheme` mode. `motër` with `a<L><B>` becomes `motra`.
//!
//! Paradigm files hold one or more blocks:
//!
//! ```text
//! PARADIGM NS2_t N grapheme +m+s
//! i	+emer+shquar
//! "të "it	+gjin+shquar
//! @OTHER_PARADIGM	+extra
//! ```
//!
//! The optional trailing features on the header are the inherent features
//! suggested for entries using the paradigm. A quoted prefix is a particle
//! written before the finished form. `@Name` includes another paradigm's
//! productions, adding the features given on the line. Commands and
//! features are separated by a tab.

// the tab in the example above is part of the format
#![allow(clippy::tabs_in_doc_comments)]

use std::collections::BTreeMap;
use std::fmt;
use std::path::Path;

use thiserror::Error;

use crate::alphabet::{segment, Grapheme};
use crate::features::FeatureSet;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Mode {
    Char,
    Grapheme,
}

impl Mode {
    pub fn as_str(self) -> &'static str {
        match self {
            Mode::Char => "char",
            Mode::Grapheme => "grapheme",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Command {
    Insert(String),
    /// `<B>` / `<B2>`
    Delete(u8),
    /// `<L>` / `<L2>`
    Left(u8),
    /// `<R>` / `<R2>`
    Right(u8),
}

impl fmt::Display for Command {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let (tag, k) = match self {
            Command::Insert(t) => return f.write_str(t),
            Command::Delete(k) => ("B", *k),
            Command::Left(k) => ("L", *k),
            Command::Right(k) => ("R", *k),
        };
        if k == 1 {
            write!(f, "<{tag}>")
        } else {
            write!(f, "<{tag}{k}>")
        }
    }
}

/// Writes a command list in the textual notation (`<E>` when empty).
pub fn format_commands(commands: &[Command]) -> String {
    if commands.is_empty() {
        return "<E>".to_string();
    }
    commands.iter().map(ToString::to_string).collect()
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Production {
    pub commands: Vec<Command>,
    pub features: FeatureSet,
    pub particle: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Paradigm {
    pub name: String,
    pub category: String,
    pub mode: Mode,
    /// Inherent features suggested for entries that use this paradigm.
    pub defaults: FeatureSet,
    pub productions: Vec<Production>,
}

/// One generated form.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Flexion {
    pub surface: String,
    pub features: FeatureSet,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParadigmError {
    #[error("line {line}: unknown command `{token}`")]
    UnknownCommand { line: usize, token: String },
    #[error("line {line}: malformed feature suffix `{text}`")]
    MalformedFeatures { line: usize, text: String },
    #[error("line {line}: {message}")]
    Syntax { line: usize, message: String },
    #[error("paradigm `{name}` has no productions")]
    Empty { name: String },
    #[error("paradigm `{name}` defined twice")]
    Duplicate { name: String },
    #[error("paradigm `{name}` includes unknown or incompatible paradigm `{target}`")]
    BadInclude { name: String, target: String },
    #[error("cannot read {path}: {message}")]
    Io { path: String, message: String },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ApplyFault {
    CursorUnderflow,
    CursorOverflow,
    DeleteUnderflow,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("applying command {index} (`{command}`) to `{lemma}`: {fault:?}")]
pub struct ApplyError {
    pub lemma: String,
    pub index: usize,
    pub command: Command,
    pub fault: ApplyFault,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("inflecting `{lemma}` with paradigm `{paradigm}`: {source}")]
pub struct InflectError {
    pub lemma: String,
    pub paradigm: String,
    pub source: ApplyError,
}

fn units(text: &str, mode: Mode) -> Vec<String> {
    match mode {
        Mode::Char => text.chars().map(String::from).collect(),
        Mode::Grapheme => segment(text).unit_strs().map(str::to_string).collect(),
    }
}

/// Runs a command list on `lemma`.
pub fn apply(commands: &[Command], lemma: &str, mode: Mode) -> Result<String, ApplyError> {
    let mut buf = units(lemma, mode);
    let mut cursor = buf.len();
    for (index, command) in commands.iter().enumerate() {
        let fail = |fault| ApplyError {
            lemma: lemma.to_string(),
            index,
            command: command.clone(),
            fault,
        };
        match command {
            Command::Insert(text) => {
                let ins = units(text, mode);
                buf.splice(cursor..cursor, ins);
            }
            Command::Left(k) => {
                cursor = cursor
                    .checked_sub(*k as usize)
                    .ok_or_else(|| fail(ApplyFault::CursorUnderflow))?;
            }
            Command::Right(k) => {
                let to = cursor + *k as usize;
                if to > buf.len() {
                    return Err(fail(ApplyFault::CursorOverflow));
                }
                cursor = to;
            }
            Command::Delete(k) => {
                let from = cursor
                    .checked_sub(*k as usize)
                    .ok_or_else(|| fail(ApplyFault::DeleteUnderflow))?;
                buf.drain(from..cursor);
                cursor = from;
            }
        }
    }
    Ok(buf.concat())
}

/// Parses a command string such as `a<L2><B>o`.
pub fn parse_commands(text: &str, line: usize) -> Result<Vec<Command>, ParadigmError> {
    let mut out = Vec::new();
    let mut literal = String::new();
    let mut rest = text;
    while let Some(c) = rest.chars().next() {
        if c == '<' {
            let close = rest.find('>').ok_or_else(|| ParadigmError::UnknownCommand {
                line,
                token: rest.to_string(),
            })?;
            let token = &rest[..=close];
            let command = match token {
                "<E>" => None,
                "<B>" => Some(Command::Delete(1)),
                "<B2>" => Some(Command::Delete(2)),
                "<L>" => Some(Command::Left(1)),
                "<L2>" => Some(Command::Left(2)),
                "<R>" => Some(Command::Right(1)),
                "<R2>" => Some(Command::Right(2)),
                _ => {
                    return Err(ParadigmError::UnknownCommand {
                        line,
                        token: token.to_string(),
                    })
                }
            };
            if !literal.is_empty() {
                out.push(Command::Insert(std::mem::take(&mut literal)));
            }
            out.extend(command);
            rest = &rest[close + 1..];
        } else if c == '>' {
            return Err(ParadigmError::UnknownCommand {
                line,
                token: ">".to_string(),
            });
        } else {
            literal.push(c);
            rest = &rest[c.len_utf8()..];
        }
    }
    if !literal.is_empty() {
        out.push(Command::Insert(literal));
    }
    Ok(out)
}

fn parse_feature_suffix(text: &str, line: usize) -> Result<FeatureSet, ParadigmError> {
    let text = text.trim();
    if text.is_empty() {
        return Ok(FeatureSet::new());
    }
    let malformed = || ParadigmError::MalformedFeatures {
        line,
        text: text.to_string(),
    };
    let body = text.strip_prefix('+').ok_or_else(malformed)?;
    if body.split('+').any(|v| v.is_empty() || v.contains(char::is_whitespace)) {
        return Err(malformed());
    }
    Ok(FeatureSet::parse(body))
}

enum Item {
    Production(Production),
    Include { target: String, features: FeatureSet },
}

/// Parses one production line; `None` for blank lines and comments.
pub fn parse_production(line: &str, line_no: usize) -> Result<Option<Production>, ParadigmError> {
    match parse_item(line, line_no)? {
        None => Ok(None),
        Some(Item::Production(p)) => Ok(Some(p)),
        Some(Item::Include { .. }) => Err(ParadigmError::Syntax {
            line: line_no,
            message: "include outside a paradigm library".into(),
        }),
    }
}

fn parse_item(line: &str, line_no: usize) -> Result<Option<Item>, ParadigmError> {
    let line = line.trim_end_matches(['\r', '\n']);
    if line.trim().is_empty() || line.trim_start().starts_with('#') {
        return Ok(None);
    }
    let (cmd_part, feat_part) = line.split_once('\t').unwrap_or((line, ""));
    let features = parse_feature_suffix(feat_part, line_no)?;
    if let Some(target) = cmd_part.strip_prefix('@') {
        return Ok(Some(Item::Include {
            target: target.trim().to_string(),
            features,
        }));
    }
    let (particle, cmd_text) = match cmd_part.strip_prefix('"') {
        Some(rest) => {
            let end = rest.find('"').ok_or_else(|| ParadigmError::Syntax {
                line: line_no,
                message: "unterminated particle quote".into(),
            })?;
            if end == 0 {
                return Err(ParadigmError::Syntax {
                    line: line_no,
                    message: "empty particle".into(),
                });
            }
            (Some(rest[..end].to_string()), &rest[end + 1..])
        }
        None => (None, cmd_part),
    };
    let commands = parse_commands(cmd_text, line_no)?;
    Ok(Some(Item::Production(Production {
        commands,
        features,
        particle,
    })))
}

struct RawParadigm {
    paradigm: Paradigm,
    items: Vec<Item>,
}

fn parse_header(line: &str, line_no: usize) -> Result<Paradigm, ParadigmError> {
    let fields: Vec<&str> = line.split_whitespace().collect();
    let bad = |message: String| ParadigmError::Syntax { line: line_no, message };
    if fields.len() < 4 || fields.len() > 5 || fields[0] != "PARADIGM" {
        return Err(bad(format!(
            "expected `PARADIGM name CATEGORY mode [+features]`, got `{line}`"
        )));
    }
    let mode = match fields[3] {
        "char" => Mode::Char,
        "grapheme" => Mode::Grapheme,
        other => return Err(bad(format!("unknown mode `{other}`"))),
    };
    let defaults = match fields.get(4) {
        Some(f) => parse_feature_suffix(f, line_no)?,
        None => FeatureSet::new(),
    };
    Ok(Paradigm {
        name: fields[1].to_string(),
        category: fields[2].to_string(),
        mode,
        defaults,
        productions: Vec::new(),
    })
}

fn parse_blocks(text: &str) -> Result<Vec<RawParadigm>, ParadigmError> {
    let mut blocks: Vec<RawParadigm> = Vec::new();
    for (i, line) in text.lines().enumerate() {
        let line_no = i + 1;
        if line.starts_with("PARADIGM") {
            blocks.push(RawParadigm {
                paradigm: parse_header(line, line_no)?,
                items: Vec::new(),
            });
            continue;
        }
        let Some(item) = parse_item(line, line_no)? else {
            continue;
        };
        match blocks.last_mut() {
            Some(b) => b.items.push(item),
            None => {
                return Err(ParadigmError::Syntax {
                    line: line_no,
                    message: "production before any PARADIGM header".into(),
                })
            }
        }
    }
    Ok(blocks)
}

impl Paradigm {
    /// Parses a single self-contained paradigm block (no includes).
    pub fn parse(text: &str) -> Result<Paradigm, ParadigmError> {
        let mut lib = ParadigmLibrary::new();
        lib.add_text(text)?;
        let mut all: Vec<Paradigm> = lib.paradigms.into_values().collect();
        match all.len() {
            1 => Ok(all.remove(0)),
            n => Err(ParadigmError::Syntax {
                line: 1,
                message: format!("expected one paradigm, found {n}"),
            }),
        }
    }

    /// Generates every form of `lemma`, in production order.
    pub fn inflect(&self, lemma: &str, inherent: &FeatureSet) -> Result<Vec<Flexion>, InflectError> {
        self.productions
            .iter()
            .map(|p| {
                let body = apply(&p.commands, lemma, self.mode).map_err(|source| InflectError {
                    lemma: lemma.to_string(),
                    paradigm: self.name.clone(),
                    source,
                })?;
                let surface = match &p.particle {
                    Some(part) => format!("{part}{body}"),
                    None => body,
                };
                Ok(Flexion {
                    surface,
                    features: inherent.union(&p.features),
                })
            })
            .collect()
    }
}

impl fmt::Display for Paradigm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "PARADIGM {} {} {}", self.name, self.category, self.mode.as_str())?;
        if !self.defaults.is_empty() {
            write!(f, " {}", self.defaults)?;
        }
        writeln!(f)?;
        for p in &self.productions {
            if let Some(part) = &p.particle {
                write!(f, "\"{part}\"")?;
            }
            write!(f, "{}", format_commands(&p.commands))?;
            if !p.features.is_empty() {
                write!(f, "\t{}", p.features)?;
            }
            writeln!(f)?;
        }
        Ok(())
    }
}

/// Named paradigms, unique by name.
#[derive(Debug, Clone, Default)]
pub struct ParadigmLibrary {
    paradigms: BTreeMap<String, Paradigm>,
}

impl ParadigmLibrary {
    pub fn new() -> Self {
        Self::default()
    }

    /// Adds every block of a `.par` text. Includes may refer to paradigms
    /// defined earlier in the library or in the same text.
    pub fn add_text(&mut self, text: &str) -> Result<(), ParadigmError> {
        let blocks = parse_blocks(text)?;
        let mut pending: Vec<RawParadigm> = Vec::new();
        for b in blocks {
            let name = &b.paradigm.name;
            if self.paradigms.contains_key(name) || pending.iter().any(|p| &p.paradigm.name == name) {
                return Err(ParadigmError::Duplicate { name: name.clone() });
            }
            pending.push(b);
        }
        // resolve includes in dependency order
        while !pending.is_empty() {
            let before = pending.len();
            let mut i = 0;
            while i < pending.len() {
                let ready = pending[i].items.iter().all(|it| match it {
                    Item::Include { target, .. } => self.paradigms.contains_key(target),
                    Item::Production(_) => true,
                });
                if ready {
                    let raw = pending.remove(i);
                    let p = self.resolve(raw)?;
                    self.paradigms.insert(p.name.clone(), p);
                } else {
                    i += 1;
                }
            }
            if pending.len() == before {
                let raw = &pending[0];
                let target = raw
                    .items
                    .iter()
                    .find_map(|it| match it {
                        Item::Include { target, .. } if !self.paradigms.contains_key(target) => Some(target.clone()),
                        _ => None,
                    })
                    .unwrap_or_default();
                return Err(ParadigmError::BadInclude {
                    name: raw.paradigm.name.clone(),
                    target,
                });
            }
        }
        Ok(())
    }

    fn resolve(&self, raw: RawParadigm) -> Result<Paradigm, ParadigmError> {
        let mut p = raw.paradigm;
        for item in raw.items {
            match item {
                Item::Production(prod) => p.productions.push(prod),
                Item::Include { target, features } => {
                    let inc = &self.paradigms[&target];
                    if inc.mode != p.mode {
                        return Err(ParadigmError::BadInclude {
                            name: p.name.clone(),
                            target,
                        });
                    }
                    p.productions.extend(inc.productions.iter().map(|q| Production {
                        features: q.features.union(&features),
                        ..q.clone()
                    }));
                }
            }
        }
        if p.productions.is_empty() {
            return Err(ParadigmError::Empty { name: p.name });
        }
        Ok(p)
    }

    /// Loads every `*.par` file of a directory, in file-name order.
    pub fn load_dir(dir: &Path) -> Result<ParadigmLibrary, ParadigmError> {
        let io = |e: std::io::Error| ParadigmError::Io {
            path: dir.display().to_string(),
            message: e.to_string(),
        };
        let mut files: Vec<_> = std::fs::read_dir(dir)
            .map_err(io)?
            .filter_map(Result::ok)
            .map(|e| e.path())
            .filter(|p| p.extension().is_some_and(|x| x == "par"))
            .collect();
        files.sort();
        let mut lib = ParadigmLibrary::new();
        for f in files {
            let text = std::fs::read_to_string(&f).map_err(|e| ParadigmError::Io {
                path: f.display().to_string(),
                message: e.to_string(),
            })?;
            lib.add_text(&text)?;
        }
        Ok(lib)
    }

    pub fn get(&self, name: &str) -> Option<&Paradigm> {
        self.paradigms.get(name)
    }

    /// Paradigms in name order.
    pub fn iter(&self) -> impl Iterator<Item = &Paradigm> {
        self.paradigms.values()
    }

    pub fn len(&self) -> usize {
        self.paradigms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.paradigms.is_empty()
    }

    /// Twin paradigms `X_1` and `X_2` that collapse into one grapheme
    /// paradigm.
    pub fn char_pairs(&self) -> Vec<(&Paradigm, &Paradigm)> {
        self.paradigms
            .iter()
            .filter_map(|(name, single)| {
                let stem = name.strip_suffix("_1")?;
                let double = self.paradigms.get(&format!("{stem}_2"))?;
                collapse_char_pairs(single, double).map(|_| (single, double))
            })
            .collect()
    }

    pub fn insert(&mut self, p: Paradigm) -> Result<(), ParadigmError> {
        if self.paradigms.contains_key(&p.name) {
            return Err(ParadigmError::Duplicate { name: p.name });
        }
        self.paradigms.insert(p.name.clone(), p);
        Ok(())
    }
}

fn differs_only_by_width(a: &Command, b: &Command) -> Option<bool> {
    match (a, b) {
        (x, y) if x == y => Some(false),
        (Command::Left(1), Command::Left(2)) | (Command::Delete(1), Command::Delete(2)) => Some(true),
        _ => None,
    }
}

/// Merges a one-character paradigm and its two-character twin into a single
/// grapheme-mode paradigm. The pair must be char-mode and differ only by
/// `<L>`/`<B>` in the first where the second has `<L2>`/`<B2>`. The result
/// takes the single's name without its `_1` suffix.
pub fn collapse_char_pairs(single: &Paradigm, double: &Paradigm) -> Option<Paradigm> {
    if single.mode != Mode::Char
        || double.mode != Mode::Char
        || single.category != double.category
        || single.productions.len() != double.productions.len()
    {
        return None;
    }
    let mut any_difference = false;
    for (p, q) in single.productions.iter().zip(&double.productions) {
        if p.features != q.features || p.particle != q.particle || p.commands.len() != q.commands.len() {
            return None;
        }
        for (a, b) in p.commands.iter().zip(&q.commands) {
            any_difference |= differs_only_by_width(a, b)?;
        }
    }
    let name = single.name.strip_suffix("_1").unwrap_or(&single.name).to_string();
    any_difference.then(|| Paradigm {
        name,
        mode: Mode::Grapheme,
        ..single.clone()
    })
}

/// Picks the twin a word belongs to: the two-character paradigm when the
/// word ends in a digraph.
pub fn char_variant<'a>(word: &str, single: &'a Paradigm, double: &'a Paradigm) -> &'a Paradigm {
    match segment(word).last() {
        Some(Grapheme::Letter(l)) if l.is_digraph() => double,
        _ => single,
    }
}
