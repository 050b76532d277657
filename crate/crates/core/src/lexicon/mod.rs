//! Dictionary entries, their expansion through paradigms, and the compiled
//! lexicon used for lookup.
//!
//! Entry files (`.dic`) hold one entry per line in the form
//! `lemma,CATEGORY+FLX=Paradigm+feature+...`, e.g. `agim,N+FLX=NS2_t+m+s`
//! or `afër,PREP+rrjedh`. Lines starting with `#` are comments.
//!
//! The compiled lexicon serializes to a little-endian container:
//!
//! ```text
//! "SQMF1"
//! u32 payload count,  per payload: str lemma, str category, str paradigm, u32 n, n × str feature
//! u32 set count,      per set: u32 n, n × u32 payload id
//! u32 state count,    per state: u32 set id (0xFFFFFFFF = not accepting), u32 first transition, u32 transition count
//! u32 transition count, per transition: u32 character, u32 target state
//! u32 root state, u32 form count, u32 trie state count
//! ```
//!
//! where `str` is a u32 byte length followed by UTF-8 bytes.

mod automaton;
mod printed;

pub use automaton::{Automaton, Trie, NO_SET};
pub use printed::{assign_paradigm, parse_printed, Parsed, PrintedEntry, Status};

use std::collections::HashMap;
use std::fmt;

use thiserror::Error;

use crate::features::FeatureSet;
use crate::paradigm::{InflectError, ParadigmLibrary};

const MAGIC: &[u8; 5] = b"SQMF1";

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct LexEntry {
    pub lemma: String,
    pub category: String,
    pub paradigm: Option<String>,
    pub inherent: FeatureSet,
}

#[derive(Debug, Error)]
pub enum LexiconError {
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error("entry `{lemma}` uses unknown paradigm `{paradigm}`")]
    UnknownParadigm { lemma: String, paradigm: String },
    #[error("entry `{lemma}` is {category} but paradigm `{paradigm}` is {paradigm_category}")]
    CategoryMismatch {
        lemma: String,
        category: String,
        paradigm: String,
        paradigm_category: String,
    },
    #[error(transparent)]
    Inflect(#[from] InflectError),
    #[error("bad lexicon container: {0}")]
    Format(String),
}

/// Splits `CAT+FLX=Name+f+f` into its parts.
fn parse_tag(tag: &str) -> Option<(String, Option<String>, FeatureSet)> {
    let mut parts = tag.split('+').map(str::trim);
    let category = parts.next().filter(|c| !c.is_empty())?.to_string();
    let mut paradigm = None;
    let mut features = FeatureSet::new();
    for p in parts {
        if p.is_empty() {
            return None;
        }
        match p.strip_prefix("FLX=") {
            Some(name) if !name.is_empty() => paradigm = Some(name.to_string()),
            Some(_) => return None,
            None => {
                features.insert(p);
            }
        }
    }
    Some((category, paradigm, features))
}

fn format_tag(category: &str, paradigm: Option<&str>, features: &FeatureSet) -> String {
    match paradigm {
        Some(p) => format!("{category}+FLX={p}{features}"),
        None => format!("{category}{features}"),
    }
}

impl LexEntry {
    pub fn new(lemma: &str, category: &str, paradigm: Option<&str>, inherent: FeatureSet) -> Self {
        LexEntry {
            lemma: lemma.to_string(),
            category: category.to_string(),
            paradigm: paradigm.map(str::to_string),
            inherent,
        }
    }

    pub fn parse(line: &str) -> Option<LexEntry> {
        let (lemma, tag) = line.rsplit_once(',')?;
        let lemma = lemma.trim();
        if lemma.is_empty() {
            return None;
        }
        let (category, paradigm, inherent) = parse_tag(tag)?;
        Some(LexEntry {
            lemma: lemma.to_string(),
            category,
            paradigm,
            inherent,
        })
    }

    /// Every (surface, payload) this entry contributes to a lexicon.
    pub fn expand(&self, lib: &ParadigmLibrary) -> Result<Vec<(String, Payload)>, LexiconError> {
        let Some(name) = &self.paradigm else {
            return Ok(vec![(
                self.lemma.clone(),
                Payload {
                    lemma: self.lemma.clone(),
                    category: self.category.clone(),
                    paradigm: None,
                    features: self.inherent.clone(),
                },
            )]);
        };
        let p = lib.get(name).ok_or_else(|| LexiconError::UnknownParadigm {
            lemma: self.lemma.clone(),
            paradigm: name.clone(),
        })?;
        if p.category != self.category {
            return Err(LexiconError::CategoryMismatch {
                lemma: self.lemma.clone(),
                category: self.category.clone(),
                paradigm: name.clone(),
                paradigm_category: p.category.clone(),
            });
        }
        Ok(p.inflect(&self.lemma, &self.inherent)?
            .into_iter()
            .map(|f| {
                (
                    f.surface,
                    Payload {
                        lemma: self.lemma.clone(),
                        category: self.category.clone(),
                        paradigm: Some(name.clone()),
                        features: f.features,
                    },
                )
            })
            .collect())
    }
}

impl fmt::Display for LexEntry {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{},{}",
            self.lemma,
            format_tag(&self.category, self.paradigm.as_deref(), &self.inherent)
        )
    }
}

/// Parses a `.dic` text.
pub fn parse_dic(text: &str) -> Result<Vec<LexEntry>, LexiconError> {
    let mut out = Vec::new();
    for (i, line) in text.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        out.push(LexEntry::parse(line).ok_or_else(|| LexiconError::Parse {
            line: i + 1,
            message: format!("expected `lemma,CAT+FLX=Name+features`, got `{line}`"),
        })?);
    }
    Ok(out)
}

/// What a surface maps to: one reading of it.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Payload {
    pub lemma: String,
    pub category: String,
    pub paradigm: Option<String>,
    pub features: FeatureSet,
}

impl Payload {
    /// `CAT+FLX=Name+features`
    pub fn tag(&self) -> String {
        format_tag(&self.category, self.paradigm.as_deref(), &self.features)
    }
}

/// One `.flx` listing line: `surface,lemma,CAT+FLX=Name+features`.
pub fn flx_line(surface: &str, p: &Payload) -> String {
    format!("{},{},{}", surface, p.lemma, p.tag())
}

/// Parses a `.flx` listing back into (surface, payload) pairs.
pub fn parse_flx(text: &str) -> Result<Vec<(String, Payload)>, LexiconError> {
    let mut out = Vec::new();
    for (i, line) in text.lines().enumerate() {
        let line = line.trim_end_matches('\r');
        if line.trim().is_empty() || line.starts_with('#') {
            continue;
        }
        let err = || LexiconError::Parse {
            line: i + 1,
            message: format!("expected `surface,lemma,CAT+features`, got `{line}`"),
        };
        let mut parts = line.rsplitn(3, ',');
        let tag = parts.next().ok_or_else(err)?;
        let lemma = parts.next().ok_or_else(err)?;
        let surface = parts.next().ok_or_else(err)?;
        let (category, paradigm, features) = parse_tag(tag).ok_or_else(err)?;
        out.push((
            surface.to_string(),
            Payload {
                lemma: lemma.to_string(),
                category,
                paradigm,
                features,
            },
        ));
    }
    Ok(out)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct LexiconStats {
    pub states: usize,
    pub transitions: usize,
    /// Distinct (surface, payload) pairs.
    pub forms: usize,
    pub surfaces: usize,
    /// States of the trie before minimization.
    pub trie_states: usize,
}

/// Minimized automaton over surfaces with deduplicated payload sets.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CompiledLexicon {
    automaton: Automaton,
    payloads: Vec<Payload>,
    sets: Vec<Vec<u32>>,
    forms: usize,
    trie_states: usize,
    max_words: usize,
}

/// Collects forms into a trie and a deduplicated payload table.
#[derive(Debug, Default)]
pub struct FormCollector {
    trie: Trie,
    payloads: Vec<Payload>,
    payload_ids: HashMap<Payload, u32>,
    forms: usize,
}

impl FormCollector {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn add(&mut self, surface: &str, payload: Payload) {
        let id = match self.payload_ids.get(&payload) {
            Some(&id) => id,
            None => {
                let id = self.payloads.len() as u32;
                self.payload_ids.insert(payload.clone(), id);
                self.payloads.push(payload);
                id
            }
        };
        let before = self.trie.get(surface).map_or(0, <[u32]>::len);
        self.trie.insert(surface, id);
        if self.trie.get(surface).map_or(0, <[u32]>::len) > before {
            self.forms += 1;
        }
    }

    pub fn trie(&self) -> &Trie {
        &self.trie
    }

    pub fn payload(&self, id: u32) -> &Payload {
        &self.payloads[id as usize]
    }

    /// Lookup on the unminimized trie.
    pub fn lookup(&self, surface: &str) -> Vec<&Payload> {
        self.trie
            .get(surface)
            .map(|ids| ids.iter().map(|&i| self.payload(i)).collect())
            .unwrap_or_default()
    }

    pub fn finish(self) -> CompiledLexicon {
        let mut sets: Vec<Vec<u32>> = Vec::new();
        let mut set_ids: HashMap<Vec<u32>, u32> = HashMap::new();
        let automaton = Automaton::minimize(&self.trie, |s| {
            *set_ids.entry(s.to_vec()).or_insert_with(|| {
                sets.push(s.to_vec());
                (sets.len() - 1) as u32
            })
        });
        let max_words = automaton.max_words();
        CompiledLexicon {
            automaton,
            payloads: self.payloads,
            sets,
            forms: self.forms,
            trie_states: self.trie.state_count(),
            max_words,
        }
    }
}

/// Expands every entry and compiles the result. Invariant entries (no
/// paradigm) contribute their lemma.
pub fn compile(entries: &[LexEntry], lib: &ParadigmLibrary) -> Result<CompiledLexicon, LexiconError> {
    Ok(collect(entries, lib)?.finish())
}

/// Like [`compile`] but stops before minimization.
pub fn collect(entries: &[LexEntry], lib: &ParadigmLibrary) -> Result<FormCollector, LexiconError> {
    let mut c = FormCollector::new();
    for e in entries {
        for (surface, payload) in e.expand(lib)? {
            c.add(&surface, payload);
        }
    }
    Ok(c)
}

impl CompiledLexicon {
    pub fn empty() -> CompiledLexicon {
        FormCollector::new().finish()
    }

    pub fn from_forms<I: IntoIterator<Item = (String, Payload)>>(forms: I) -> CompiledLexicon {
        let mut c = FormCollector::new();
        for (s, p) in forms {
            c.add(&s, p);
        }
        c.finish()
    }

    /// Exact lookup only.
    pub fn lookup_exact(&self, surface: &str) -> Vec<&Payload> {
        match self.automaton.get(surface) {
            Some(set) => self.sets[set as usize]
                .iter()
                .map(|&i| &self.payloads[i as usize])
                .collect(),
            None => Vec::new(),
        }
    }

    /// Exact lookup, retried in lowercase and then capitalized when empty.
    pub fn lookup(&self, surface: &str) -> Vec<&Payload> {
        let exact = self.lookup_exact(surface);
        if !exact.is_empty() {
            return exact;
        }
        let lower = surface.to_lowercase();
        if lower != surface {
            let found = self.lookup_exact(&lower);
            if !found.is_empty() {
                return found;
            }
        }
        let mut chars = lower.chars();
        let capital: String = match chars.next() {
            Some(c) => c.to_uppercase().chain(chars).collect(),
            None => return Vec::new(),
        };
        if capital != surface {
            return self.lookup_exact(&capital);
        }
        Vec::new()
    }

    pub fn contains(&self, surface: &str) -> bool {
        self.automaton.get(surface).is_some()
    }

    pub fn stats(&self) -> LexiconStats {
        LexiconStats {
            states: self.automaton.state_count(),
            transitions: self.automaton.transition_count(),
            forms: self.forms,
            surfaces: self.automaton.entries().len(),
            trie_states: self.trie_states,
        }
    }

    /// Largest number of space-separated words in one surface.
    pub fn max_words(&self) -> usize {
        self.max_words
    }

    pub fn automaton(&self) -> &Automaton {
        &self.automaton
    }

    /// Every (surface, payload) pair in code point order of the surfaces.
    pub fn forms(&self) -> Vec<(String, &Payload)> {
        self.automaton
            .entries()
            .into_iter()
            .flat_map(|(s, set)| {
                self.sets[set as usize]
                    .iter()
                    .map(move |&i| (s.clone(), &self.payloads[i as usize]))
            })
            .collect()
    }

    /// `.flx` listing of every form.
    pub fn dump_flx(&self) -> String {
        let mut out = String::new();
        for (s, p) in self.forms() {
            out.push_str(&flx_line(&s, p));
            out.push('\n');
        }
        out
    }

    pub fn to_bytes(&self) -> Vec<u8> {
        let mut w = Writer(Vec::new());
        w.0.extend_from_slice(MAGIC);
        w.len(self.payloads.len());
        for p in &self.payloads {
            w.str(&p.lemma);
            w.str(&p.category);
            w.str(p.paradigm.as_deref().unwrap_or(""));
            w.len(p.features.len());
            for f in p.features.iter() {
                w.str(f);
            }
        }
        w.len(self.sets.len());
        for s in &self.sets {
            w.len(s.len());
            for &id in s {
                w.u32(id);
            }
        }
        let a = &self.automaton;
        w.len(a.states.len());
        for s in &a.states {
            w.u32(s.set);
            w.u32(s.first);
            w.u32(s.len);
        }
        w.len(a.transitions.len());
        for &(c, t) in &a.transitions {
            w.u32(c as u32);
            w.u32(t);
        }
        w.u32(a.root);
        w.len(self.forms);
        w.len(self.trie_states);
        w.0
    }

    pub fn from_bytes(bytes: &[u8]) -> Result<CompiledLexicon, LexiconError> {
        let rest = bytes
            .strip_prefix(MAGIC.as_slice())
            .ok_or_else(|| LexiconError::Format("missing SQMF1 magic".into()))?;
        let mut r = Reader { buf: rest, pos: 0 };
        let n = r.u32()? as usize;
        let mut payloads = Vec::with_capacity(n.min(1 << 20));
        for _ in 0..n {
            let lemma = r.str()?;
            let category = r.str()?;
            let paradigm = Some(r.str()?).filter(|s| !s.is_empty());
            let nf = r.u32()?;
            let mut features = FeatureSet::new();
            for _ in 0..nf {
                features.insert(&r.str()?);
            }
            payloads.push(Payload {
                lemma,
                category,
                paradigm,
                features,
            });
        }
        let n = r.u32()? as usize;
        let mut sets = Vec::with_capacity(n.min(1 << 20));
        for _ in 0..n {
            let len = r.u32()?;
            let mut s = Vec::new();
            for _ in 0..len {
                let id = r.u32()?;
                if id as usize >= payloads.len() {
                    return Err(LexiconError::Format(format!("payload id {id} out of range")));
                }
                s.push(id);
            }
            sets.push(s);
        }
        let n = r.u32()? as usize;
        let mut states = Vec::with_capacity(n.min(1 << 20));
        for _ in 0..n {
            let set = r.u32()?;
            if set != NO_SET && set as usize >= sets.len() {
                return Err(LexiconError::Format(format!("set id {set} out of range")));
            }
            states.push(automaton::State {
                set,
                first: r.u32()?,
                len: r.u32()?,
            });
        }
        let n = r.u32()? as usize;
        let mut transitions = Vec::with_capacity(n.min(1 << 20));
        for _ in 0..n {
            let c = char::from_u32(r.u32()?).ok_or_else(|| LexiconError::Format("bad character".into()))?;
            let t = r.u32()?;
            if t as usize >= states.len() {
                return Err(LexiconError::Format(format!("target {t} out of range")));
            }
            transitions.push((c, t));
        }
        for s in &states {
            if (s.first as usize).saturating_add(s.len as usize) > transitions.len() {
                return Err(LexiconError::Format("transition slice out of range".into()));
            }
        }
        let root = r.u32()?;
        if root as usize >= states.len() {
            return Err(LexiconError::Format("root out of range".into()));
        }
        let forms = r.u32()? as usize;
        let trie_states = r.u32()? as usize;
        if r.pos != r.buf.len() {
            return Err(LexiconError::Format("trailing bytes".into()));
        }
        let automaton = Automaton {
            states,
            transitions,
            root,
        };
        if !automaton.is_acyclic() {
            return Err(LexiconError::Format("automaton has a cycle".into()));
        }
        let max_words = automaton.max_words();
        Ok(CompiledLexicon {
            automaton,
            payloads,
            sets,
            forms,
            trie_states,
            max_words,
        })
    }
}

struct Writer(Vec<u8>);

impl Writer {
    fn u32(&mut self, v: u32) {
        self.0.extend_from_slice(&v.to_le_bytes());
    }
    fn len(&mut self, n: usize) {
        self.u32(u32::try_from(n).expect("lexicon too large for the container"));
    }
    fn str(&mut self, s: &str) {
        self.len(s.len());
        self.0.extend_from_slice(s.as_bytes());
    }
}

struct Reader<'a> {
    buf: &'a [u8],
    pos: usize,
}

impl Reader<'_> {
    fn take(&mut self, n: usize) -> Result<&[u8], LexiconError> {
        let end = self
            .pos
            .checked_add(n)
            .filter(|&e| e <= self.buf.len())
            .ok_or_else(|| LexiconError::Format("truncated".into()))?;
        let s = &self.buf[self.pos..end];
        self.pos = end;
        Ok(s)
    }
    fn u32(&mut self) -> Result<u32, LexiconError> {
        let b = self.take(4)?;
        Ok(u32::from_le_bytes([b[0], b[1], b[2], b[3]]))
    }
    fn str(&mut self) -> Result<String, LexiconError> {
        let n = self.u32()? as usize;
        let b = self.take(n)?;
        String::from_utf8(b.to_vec()).map_err(|_| LexiconError::Format("invalid UTF-8".into()))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn lib() -> ParadigmLibrary {
        let mut l = ParadigmLibrary::new();
        l.add_text("PARADIGM T N grapheme\ni\t+emer\nit\t+dhan\nit\t+rrjedh\n\"të \"it\t+gjin\n")
            .unwrap();
        l
    }

    #[test]
    fn entry_lines() {
        let e = LexEntry::parse("agim,N+FLX=NS2_t+m+s").unwrap();
        assert_eq!(e.paradigm.as_deref(), Some("NS2_t"));
        assert_eq!(e.inherent.to_string(), "+m+s");
        assert_eq!(e.to_string(), "agim,N+FLX=NS2_t+m+s");
        let e = LexEntry::parse("possa që, CONJ + UNAMB").unwrap();
        assert_eq!(e.lemma, "possa që");
        assert_eq!(e.to_string(), "possa që,CONJ+UNAMB");
        assert!(LexEntry::parse("nocomma").is_none());
        assert!(LexEntry::parse(",ADV").is_none());
        assert!(LexEntry::parse("x,N+FLX=").is_none());
        assert!(matches!(
            parse_dic("# c\nok,ADV\nbad\n"),
            Err(LexiconError::Parse { line: 3, .. })
        ));
    }

    #[test]
    fn invariant_entry() {
        let lex = compile(&[LexEntry::parse("afro,ADV").unwrap()], &lib()).unwrap();
        let got = lex.lookup("afro");
        assert_eq!(got.len(), 1);
        assert_eq!((got[0].lemma.as_str(), got[0].category.as_str()), ("afro", "ADV"));
        assert!(got[0].features.is_empty());
        assert_eq!(lex.stats().surfaces, 1);
        assert!(lex.lookup("afr").is_empty());
    }

    #[test]
    fn empty_lexicon() {
        let lex = compile(&[], &lib()).unwrap();
        assert_eq!(lex.stats().states, 1);
        assert_eq!(lex.stats().forms, 0);
    }

    #[test]
    fn syncretic_forms_share_a_surface() {
        let lex = compile(&[LexEntry::parse("agim,N+FLX=T+m+s").unwrap()], &lib()).unwrap();
        let got = lex.lookup("agimit");
        assert_eq!(got.len(), 2);
        assert_eq!(got[0].features.to_string(), "+m+s+dhan");
        assert_eq!(got[1].features.to_string(), "+m+s+rrjedh");
        assert_eq!(lex.lookup("të agimit").len(), 1);
        assert_eq!(lex.max_words(), 2);
    }

    #[test]
    fn entry_errors() {
        let unknown = compile(&[LexEntry::parse("x,N+FLX=NOPE").unwrap()], &lib());
        assert!(matches!(unknown, Err(LexiconError::UnknownParadigm { .. })));
        let mismatch = compile(&[LexEntry::parse("x,V+FLX=T").unwrap()], &lib());
        assert!(matches!(mismatch, Err(LexiconError::CategoryMismatch { .. })));
    }

    #[test]
    fn case_folded_retry() {
        let lex = CompiledLexicon::from_forms(parse_flx("Meksika,Meksika,N+f\nlibri,libër,N\n").unwrap());
        assert_eq!(lex.lookup("LIBRI").len(), 1);
        assert_eq!(lex.lookup("meksika").len(), 1);
        assert_eq!(lex.lookup("MEKSIKA").len(), 1);
        assert!(lex.lookup_exact("meksika").is_empty());
    }

    #[test]
    fn flx_round_trip() {
        let text = "së agimit,agim,N+FLX=NS2_t+m+s+gjin+shquar\nafër,afër,PREP+rrjedh\n";
        let forms = parse_flx(text).unwrap();
        assert_eq!(forms[0].0, "së agimit");
        let lines: Vec<String> = forms.iter().map(|(s, p)| flx_line(s, p)).collect();
        assert_eq!(lines.join("\n") + "\n", text);
        assert!(parse_flx("a,b\n").is_err());
    }

    #[test]
    fn container_round_trip_and_corruption() {
        let lex = compile(&[LexEntry::parse("agim,N+FLX=T+m+s").unwrap()], &lib()).unwrap();
        let bytes = lex.to_bytes();
        assert_eq!(&bytes[..5], b"SQMF1");
        let back = CompiledLexicon::from_bytes(&bytes).unwrap();
        assert_eq!(back, lex);
        assert!(CompiledLexicon::from_bytes(b"XXXX1").is_err());
        assert!(CompiledLexicon::from_bytes(&bytes[..bytes.len() - 1]).is_err());
        let mut extra = bytes.clone();
        extra.push(0);
        assert!(CompiledLexicon::from_bytes(&extra).is_err());
    }
}
