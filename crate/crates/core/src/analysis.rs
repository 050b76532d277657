//! Analyses, tokenization and the single-token analyzer.

use std::fmt;

use crate::features::FeatureSet;
use crate::lexicon::{CompiledLexicon, Payload};
use crate::morphogrammar::Morphogrammar;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Provenance {
    Lexicon,
    Morphogrammar,
    Syntax,
    Unknown,
}

impl Provenance {
    pub fn as_str(self) -> &'static str {
        match self {
            Provenance::Lexicon => "lexicon",
            Provenance::Morphogrammar => "morphogrammar",
            Provenance::Syntax => "syntax",
            Provenance::Unknown => "unknown",
        }
    }
}

pub const UNKNOWN: &str = "UNKNOWN";

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Analysis {
    pub surface: String,
    pub lemma: String,
    pub category: String,
    pub features: FeatureSet,
    pub provenance: Provenance,
}

impl Analysis {
    pub fn new(surface: &str, lemma: &str, category: &str, features: FeatureSet, provenance: Provenance) -> Self {
        Analysis {
            surface: surface.to_string(),
            lemma: lemma.to_string(),
            category: category.to_string(),
            features,
            provenance,
        }
    }

    pub fn from_payload(surface: &str, p: &Payload) -> Self {
        Analysis::new(surface, &p.lemma, &p.category, p.features.clone(), Provenance::Lexicon)
    }

    pub fn unknown(surface: &str) -> Self {
        Analysis::new(surface, surface, UNKNOWN, FeatureSet::new(), Provenance::Unknown)
    }

    /// Numeric value carried as `val=N`.
    pub fn value(&self) -> Option<u64> {
        self.features.get("val")?.parse().ok()
    }
}

/// `lemma,CAT+features`
impl fmt::Display for Analysis {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{},{}{}", self.lemma, self.category, self.features)
    }
}

/// One way to read a token: a whole word, or a word split into parts (a
/// clitic and its verb).
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Reading {
    Word(Analysis),
    Segmented(Vec<Analysis>),
}

impl Reading {
    pub fn analyses(&self) -> &[Analysis] {
        match self {
            Reading::Word(a) => std::slice::from_ref(a),
            Reading::Segmented(parts) => parts,
        }
    }

    pub fn as_word(&self) -> Option<&Analysis> {
        match self {
            Reading::Word(a) => Some(a),
            Reading::Segmented(_) => None,
        }
    }

    pub fn provenance(&self) -> Provenance {
        self.analyses().first().map_or(Provenance::Unknown, |a| a.provenance)
    }
}

impl fmt::Display for Reading {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Reading::Word(a) => a.fmt(f),
            Reading::Segmented(parts) => {
                for (i, a) in parts.iter().enumerate() {
                    if i > 0 {
                        f.write_str(" | ")?;
                    }
                    a.fmt(f)?;
                }
                Ok(())
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Token {
    pub surface: String,
    /// Offset in characters from the start of the text.
    pub offset: usize,
    pub sentence: usize,
    /// Text between the previous token (or the start) and this one.
    pub gap: String,
    pub readings: Vec<Reading>,
}

impl Token {
    pub fn words(&self) -> impl Iterator<Item = &Analysis> {
        self.readings.iter().filter_map(Reading::as_word)
    }

    pub fn is(&self, surface: &str) -> bool {
        self.surface.to_lowercase() == surface
    }
}

fn is_sentence_end(c: char) -> bool {
    matches!(c, '.' | '?' | '!')
}

fn is_joiner(c: char) -> bool {
    matches!(c, '\'' | '’' | '-')
}

/// Splits text into tokens: maximal runs of letters, with apostrophes and
/// hyphens kept when a letter follows on both sides.
pub fn tokenize(text: &str) -> Vec<Token> {
    let chars: Vec<char> = text.chars().collect();
    let mut out = Vec::new();
    let mut sentence = 0;
    let mut gap = String::new();
    let mut i = 0;
    while i < chars.len() {
        if !chars[i].is_alphabetic() {
            if is_sentence_end(chars[i]) && !out.is_empty() && !gap.chars().any(is_sentence_end) {
                sentence += 1;
            }
            gap.push(chars[i]);
            i += 1;
            continue;
        }
        let start = i;
        while i < chars.len() {
            if chars[i].is_alphabetic() {
                i += 1;
            } else if is_joiner(chars[i]) && i + 1 < chars.len() && chars[i + 1].is_alphabetic() {
                i += 2;
            } else {
                break;
            }
        }
        out.push(Token {
            surface: chars[start..i].iter().collect(),
            offset: start,
            sentence,
            gap: std::mem::take(&mut gap),
            readings: Vec::new(),
        });
    }
    out
}

/// Just the token surfaces.
pub fn token_surfaces(text: &str) -> Vec<String> {
    tokenize(text).into_iter().map(|t| t.surface).collect()
}

pub struct Analyzer<'a> {
    pub lexicon: &'a CompiledLexicon,
    pub grammar: &'a Morphogrammar,
}

impl<'a> Analyzer<'a> {
    pub fn new(lexicon: &'a CompiledLexicon, grammar: &'a Morphogrammar) -> Self {
        Analyzer { lexicon, grammar }
    }

    /// Readings of one token, ranked lexicon, numeric compound, numerals,
    /// affixed words, clitic splits. Never empty.
    pub fn analyze_word(&self, surface: &str) -> Vec<Reading> {
        let mut out: Vec<Reading> = self
            .lexicon
            .lookup(surface)
            .into_iter()
            .map(|p| Reading::Word(Analysis::from_payload(surface, p)))
            .collect();
        let found = !out.is_empty();
        out.extend(
            self.grammar
                .recognize_numeric_compound(surface, self.lexicon)
                .into_iter()
                .map(Reading::Word),
        );
        if !found {
            let g = self.grammar;
            out.extend(g.recognize_cardinal(surface).map(Reading::Word));
            out.extend(g.recognize_ordinal_body(surface).map(Reading::Word));
            out.extend(g.recognize_roman(surface).map(Reading::Word));
            out.extend(
                g.recognize_affixed(surface, self.lexicon)
                    .into_iter()
                    .map(Reading::Word),
            );
            out.extend(
                g.split_clitic_imperative(surface, self.lexicon)
                    .into_iter()
                    .map(|(c, v)| Reading::Segmented(vec![c, v])),
            );
        }
        let mut seen = std::collections::HashSet::new();
        out.retain(|r| seen.insert(r.clone()));
        if out.is_empty() {
            out.push(Reading::Word(Analysis::unknown(surface)));
        }
        out
    }

    pub fn analyze_text(&self, text: &str) -> Vec<Token> {
        let mut tokens = tokenize(text);
        for t in &mut tokens {
            t.readings = self.analyze_word(&t.surface);
        }
        tokens
    }
}
