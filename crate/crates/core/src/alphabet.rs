//! The 36-letter Albanian alphabet, digraph-aware segmentation and collation.
//!
//! Nine consonants are written with two characters (`dh gj ll nj rr sh th xh zh`)
//! but count as a single letter everywhere: segmentation, collation and the
//! letter-level editing primitives used by the paradigm engine.

use std::cmp::Ordering;
use std::collections::HashMap;
use std::fmt;

use thiserror::Error;

/// Letters in alphabet order. Index in this table is the collation key.
const LETTERS: [&str; 36] = [
    "a", "b", "c", "ç", "d", "dh", "e", "ë", "f", "g", "gj", "h", "i", "j", "k", "l", "ll", "m", "n", "nj", "o", "p",
    "q", "r", "rr", "s", "sh", "t", "th", "u", "v", "x", "xh", "y", "z", "zh",
];

const VOWELS: [&str; 7] = ["a", "e", "ë", "i", "o", "u", "y"];

/// One letter of the alphabet.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Letter {
    index: u8,
}

impl Letter {
    pub fn from_index(index: usize) -> Option<Letter> {
        (index < LETTERS.len()).then_some(Letter { index: index as u8 })
    }

    /// Looks up a lowercase letter by its surface form.
    pub fn from_str_lower(s: &str) -> Option<Letter> {
        LETTERS.iter().position(|&l| l == s).map(|i| Letter { index: i as u8 })
    }

    pub fn index(self) -> usize {
        self.index as usize
    }

    pub fn chars(self) -> &'static str {
        LETTERS[self.index as usize]
    }

    pub fn is_digraph(self) -> bool {
        self.chars().chars().count() == 2
    }

    pub fn is_vowel(self) -> bool {
        VOWELS.contains(&self.chars())
    }
}

impl fmt::Display for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.chars())
    }
}

/// Every letter in alphabet order.
pub fn letters() -> impl Iterator<Item = Letter> {
    (0..LETTERS.len()).map(|i| Letter { index: i as u8 })
}

/// A segmentation unit: an alphabet letter, or any other character kept opaque.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Grapheme {
    Letter(Letter),
    Opaque(char),
}

impl Grapheme {
    fn collation_key(self) -> (u8, u32) {
        match self {
            Grapheme::Letter(l) => (0, l.index as u32),
            Grapheme::Opaque(c) => (1, c as u32),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
struct Unit {
    start: usize,
    end: usize,
    grapheme: Grapheme,
}

/// A word segmented into letters, with its original characters preserved.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GraphemeString {
    raw: String,
    units: Vec<Unit>,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AlphabetError {
    #[error("cannot drop {requested} letters from `{word}`: it has only {available}")]
    Underflow {
        word: String,
        requested: usize,
        available: usize,
    },
}

impl GraphemeString {
    pub fn raw(&self) -> &str {
        &self.raw
    }

    /// Number of letters (a digraph counts once).
    pub fn len(&self) -> usize {
        self.units.len()
    }

    pub fn is_empty(&self) -> bool {
        self.units.is_empty()
    }

    pub fn graphemes(&self) -> impl Iterator<Item = Grapheme> + '_ {
        self.units.iter().map(|u| u.grapheme)
    }

    /// Surface text of each unit, in order, with original casing.
    pub fn unit_strs(&self) -> impl Iterator<Item = &str> + '_ {
        self.units.iter().map(|u| &self.raw[u.start..u.end])
    }

    pub fn last(&self) -> Option<Grapheme> {
        self.units.last().map(|u| u.grapheme)
    }

    /// Removes the last `n` letters.
    pub fn drop_last(&self, n: usize) -> Result<GraphemeString, AlphabetError> {
        if n > self.units.len() {
            return Err(AlphabetError::Underflow {
                word: self.raw.clone(),
                requested: n,
                available: self.units.len(),
            });
        }
        let keep = self.units.len() - n;
        let cut = self.units.get(keep).map_or(self.raw.len(), |u| u.start);
        Ok(GraphemeString {
            raw: self.raw[..cut].to_string(),
            units: self.units[..keep].to_vec(),
        })
    }
}

impl fmt::Display for GraphemeString {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.raw)
    }
}

fn lower(c: char) -> char {
    // Albanian has no multi-character lowercase mappings.
    c.to_lowercase().next().unwrap_or(c)
}

fn match_letter(first: char, second: Option<char>) -> Option<(Letter, usize)> {
    let first = lower(first);
    if let Some(second) = second {
        let mut pair = String::with_capacity(4);
        pair.push(first);
        pair.push(lower(second));
        if let Some(l) = Letter::from_str_lower(&pair) {
            return Some((l, 2));
        }
    }
    let mut single = [0u8; 4];
    Letter::from_str_lower(first.encode_utf8(&mut single)).map(|l| (l, 1))
}

/// Splits text into letters by greedy longest match, case-insensitively.
pub fn segment(text: &str) -> GraphemeString {
    let chars: Vec<(usize, char)> = text.char_indices().collect();
    let mut units = Vec::with_capacity(chars.len());
    let mut i = 0;
    while i < chars.len() {
        let (start, c) = chars[i];
        let next = chars.get(i + 1).map(|&(_, c)| c);
        let (grapheme, width) = match match_letter(c, next) {
            Some((l, w)) => (Grapheme::Letter(l), w),
            None => (Grapheme::Opaque(c), 1),
        };
        let end = chars.get(i + width).map_or(text.len(), |&(b, _)| b);
        units.push(Unit { start, end, grapheme });
        i += width;
    }
    GraphemeString {
        raw: text.to_string(),
        units,
    }
}

/// Segmentation with a table of per-word overrides.
///
/// An override maps a lowercased word to its explicit letter split, for
/// morpheme boundaries that happen to spell a digraph.
#[derive(Debug, Clone, Default)]
pub struct Segmenter {
    overrides: HashMap<String, Vec<String>>,
}

impl Segmenter {
    pub fn new() -> Self {
        Self::default()
    }

    /// Registers an override; returns false when the parts do not spell the word.
    pub fn add_override(&mut self, word: &str, parts: &[&str]) -> bool {
        if parts.concat().to_lowercase() != word.to_lowercase() {
            return false;
        }
        self.overrides
            .insert(word.to_lowercase(), parts.iter().map(|p| p.to_lowercase()).collect());
        true
    }

    pub fn segment(&self, text: &str) -> GraphemeString {
        let Some(parts) = self.overrides.get(&text.to_lowercase()) else {
            return segment(text);
        };
        let mut units = Vec::with_capacity(parts.len());
        let mut offset = 0;
        let mut raw_chars = text.char_indices().peekable();
        for part in parts {
            let n = part.chars().count();
            let start = offset;
            for _ in 0..n {
                raw_chars.next();
            }
            let end = raw_chars.peek().map_or(text.len(), |&(b, _)| b);
            let grapheme = match Letter::from_str_lower(part) {
                Some(l) => Grapheme::Letter(l),
                None => Grapheme::Opaque(part.chars().next().unwrap_or(' ')),
            };
            units.push(Unit { start, end, grapheme });
            offset = end;
        }
        GraphemeString {
            raw: text.to_string(),
            units,
        }
    }
}

/// Dictionary order: letter by letter on alphabet indices, opaque characters
/// after every letter. Ties on letters are broken by the raw text, which makes
/// the order total on strings (case variants do not compare equal).
pub fn collate(a: &GraphemeString, b: &GraphemeString) -> Ordering {
    let ka = a.graphemes().map(Grapheme::collation_key);
    let kb = b.graphemes().map(Grapheme::collation_key);
    ka.cmp(kb).then_with(|| a.raw.cmp(&b.raw))
}

pub fn collate_str(a: &str, b: &str) -> Ordering {
    collate(&segment(a), &segment(b))
}

/// Sorts words in dictionary order.
pub fn sort_words<S: AsRef<str>>(words: &mut [S]) {
    words.sort_by(|a, b| collate_str(a.as_ref(), b.as_ref()));
}

#[cfg(test)]
mod tests {
    use super::*;

    fn split(s: &str) -> Vec<String> {
        segment(s).unit_strs().map(str::to_string).collect()
    }

    #[test]
    fn inventory() {
        assert_eq!(letters().count(), 36);
        assert_eq!(letters().filter(|l| l.is_vowel()).count(), 7);
        let digraphs: Vec<_> = letters().filter(|l| l.is_digraph()).map(|l| l.chars()).collect();
        assert_eq!(digraphs, ["dh", "gj", "ll", "nj", "rr", "sh", "th", "xh", "zh"]);
    }

    #[test]
    fn segments_digraphs() {
        assert_eq!(split("shqip"), ["sh", "q", "i", "p"]);
        assert_eq!(split("vjehërr"), ["v", "j", "e", "h", "ë", "rr"]);
        assert_eq!(segment("vjehërr").len(), 6);
        assert!(split("").is_empty());
    }

    #[test]
    fn segments_case_insensitively() {
        let w = segment("Dhjetë");
        assert_eq!(w.unit_strs().collect::<Vec<_>>(), ["Dh", "j", "e", "t", "ë"]);
        assert_eq!(
            w.graphemes().next(),
            Some(Grapheme::Letter(Letter::from_str_lower("dh").unwrap()))
        );
        assert_eq!(
            segment("ÇAJ").graphemes().next(),
            Some(Grapheme::Letter(Letter::from_str_lower("ç").unwrap()))
        );
    }

    #[test]
    fn opaque_characters() {
        let w = segment("Mit'hat");
        assert_eq!(w.raw(), "Mit'hat");
        assert!(w.graphemes().any(|g| g == Grapheme::Opaque('\'')));
        assert_eq!(w.len(), 7);
    }

    #[test]
    fn index_checks() {
        let idx = |s| Letter::from_str_lower(s).unwrap().index();
        assert_eq!(idx("ë"), idx("e") + 1);
        assert!(idx("c") < idx("ç") && idx("ç") < idx("d"));
    }

    #[test]
    fn collation_d_before_dh() {
        assert_eq!(collate_str("duar", "dhamb"), Ordering::Less);
        assert_eq!(collate_str("x", "x"), Ordering::Equal);
        let mut words = vec!["dita", "dhamb", "duar"];
        sort_words(&mut words);
        assert_eq!(words, ["dita", "duar", "dhamb"]);
    }

    #[test]
    fn opaque_sorts_last() {
        assert_eq!(collate_str("zh", "w"), Ordering::Less);
        assert_eq!(collate_str("a", "a-"), Ordering::Less);
    }

    #[test]
    fn drop_last_is_letter_level() {
        assert_eq!(segment("djall").drop_last(1).unwrap().raw(), "dja");
        assert_eq!(segment("bir").drop_last(1).unwrap().raw(), "bi");
        assert_eq!(segment("x").drop_last(0).unwrap().raw(), "x");
        let err = segment("bir").drop_last(4).unwrap_err();
        assert_eq!(
            err,
            AlphabetError::Underflow {
                word: "bir".into(),
                requested: 4,
                available: 3
            }
        );
    }

    #[test]
    fn overrides() {
        let mut s = Segmenter::new();
        assert!(s.add_override("lodhje", &["l", "o", "d", "h", "j", "e"]));
        assert!(!s.add_override("lodhje", &["x"]));
        assert_eq!(s.segment("lodhje").len(), 6);
        assert_eq!(segment("lodhje").len(), 5);
        assert_eq!(s.segment("dhe").len(), 2);
    }

    #[test]
    fn sorts_mixed_letters() {
        let mut words = vec!["zh", "a", "dh", "d", "ë", "e", "ç", "c"];
        sort_words(&mut words);
        assert_eq!(words, ["a", "c", "ç", "d", "dh", "e", "ë", "zh"]);
    }
}
