//! Recognizers for words no dictionary can list: numerals written as one
//! word, ordinals, Roman numerals, number-prefixed compounds, prefixed
//! compounds and imperatives carrying a clitic pronoun.

use std::collections::BTreeMap;

use thiserror::Error;

use crate::analysis::{Analysis, Provenance};
use crate::features::FeatureSet;
use crate::lexicon::CompiledLexicon;

#[derive(Debug, Error, PartialEq, Eq)]
#[error("{table} line {line}: {message}")]
pub struct TableError {
    pub table: &'static str,
    pub line: usize,
    pub message: String,
}

/// Non-comment, non-blank lines with their 1-based numbers.
fn table_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim_end_matches('\r')))
        .filter(|(_, l)| !l.trim().is_empty() && !l.trim_start().starts_with('#'))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum AtomKind {
    Unit,
    Teen,
    Tens,
    Hundred,
    Thousand,
    Link,
    Zero,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Atom {
    pub form: String,
    pub value: u64,
    pub kind: AtomKind,
    pub ordinal: Option<String>,
}

/// Largest value the numeral words cover.
pub const MAX_CARDINAL: u64 = 999_999;

#[derive(Debug, Clone, Default)]
pub struct NumeralTable {
    atoms: Vec<Atom>,
}

fn is_vowel_char(c: char) -> bool {
    matches!(c, 'a' | 'e' | 'ë' | 'i' | 'o' | 'u' | 'y')
}

impl NumeralTable {
    pub fn load(text: &str) -> Result<NumeralTable, TableError> {
        let mut atoms: Vec<Atom> = Vec::new();
        for (line, l) in table_lines(text) {
            let err = |message: String| TableError {
                table: "numerals",
                line,
                message,
            };
            let f: Vec<&str> = l.split('\t').map(str::trim).collect();
            if f.len() < 3 || f.len() > 4 {
                return Err(err(format!(
                    "expected `form TAB value TAB kind [TAB ordinal]`, got `{l}`"
                )));
            }
            let value = f[1].parse().map_err(|_| err(format!("bad value `{}`", f[1])))?;
            let kind = match f[2] {
                "unit" => AtomKind::Unit,
                "teen" => AtomKind::Teen,
                "tens" => AtomKind::Tens,
                "hundred" => AtomKind::Hundred,
                "thousand" => AtomKind::Thousand,
                "link" => AtomKind::Link,
                "zero" => AtomKind::Zero,
                other => return Err(err(format!("unknown kind `{other}`"))),
            };
            if atoms.iter().any(|a| a.form == f[0]) {
                return Err(err(format!("duplicate atom `{}`", f[0])));
            }
            atoms.push(Atom {
                form: f[0].to_lowercase(),
                value,
                kind,
                ordinal: f.get(3).filter(|o| **o != "-").map(|o| o.to_lowercase()),
            });
        }
        Ok(NumeralTable { atoms })
    }

    pub fn atoms(&self) -> &[Atom] {
        &self.atoms
    }

    fn first(&self, kind: AtomKind, value: u64) -> Option<&Atom> {
        self.atoms.iter().find(|a| a.kind == kind && a.value == value)
    }

    fn segmentations<'a>(&'a self, rest: &str, acc: &mut Vec<&'a Atom>, out: &mut Vec<Vec<&'a Atom>>) {
        if rest.is_empty() {
            out.push(acc.clone());
            return;
        }
        for a in &self.atoms {
            if let Some(r) = rest.strip_prefix(a.form.as_str()) {
                acc.push(a);
                self.segmentations(r, acc, out);
                acc.pop();
            }
        }
    }

    /// Value of a numeral written as one word (`pesëdhjetë`, `dyqindedy`).
    pub fn parse_cardinal_word(&self, token: &str) -> Option<u64> {
        let token = token.to_lowercase();
        if token.is_empty() {
            return None;
        }
        let mut out = Vec::new();
        self.segmentations(&token, &mut Vec::new(), &mut out);
        out.iter().find_map(|seq| evaluate(seq))
    }

    fn components(&self, n: u64) -> Option<Vec<(String, AtomKind)>> {
        let mut out = Vec::new();
        if n == 0 {
            let z = self.atoms.iter().find(|a| a.kind == AtomKind::Zero)?;
            return Some(vec![(z.form.clone(), AtomKind::Zero)]);
        }
        if n > MAX_CARDINAL {
            return None;
        }
        if n >= 1000 {
            let th = self.atoms.iter().find(|a| a.kind == AtomKind::Thousand)?;
            let mult = self.render_cardinal_word(n / 1000)?;
            out.push((format!("{mult}{}", th.form), AtomKind::Thousand));
        }
        let n = n % 1000;
        if n >= 100 {
            let h = self.atoms.iter().find(|a| a.kind == AtomKind::Hundred)?;
            let u = self.first(AtomKind::Unit, n / 100)?;
            out.push((format!("{}{}", u.form, h.form), AtomKind::Hundred));
        }
        let r = n % 100;
        match r {
            0 => {}
            1..=9 => out.push((self.first(AtomKind::Unit, r)?.form.clone(), AtomKind::Unit)),
            11..=19 => {
                let u = self.first(AtomKind::Unit, r - 10)?;
                let t = self.atoms.iter().find(|a| a.kind == AtomKind::Teen)?;
                out.push((format!("{}{}", u.form, t.form), AtomKind::Teen));
            }
            _ => {
                out.push((self.first(AtomKind::Tens, r - r % 10)?.form.clone(), AtomKind::Tens));
                if !r.is_multiple_of(10) {
                    out.push((self.first(AtomKind::Unit, r % 10)?.form.clone(), AtomKind::Unit));
                }
            }
        }
        Some(out)
    }

    /// One-word numeral. The link `e` comes before a final unit or teen
    /// when the preceding component ends in a consonant: `dyzetenjë`,
    /// `dyqindedy`, `pesëdhjetëpesë`.
    pub fn render_cardinal_word(&self, n: u64) -> Option<String> {
        let comps = self.components(n)?;
        let link = self.atoms.iter().find(|a| a.kind == AtomKind::Link);
        let mut out = String::new();
        let last = comps.len() - 1;
        for (i, (text, kind)) in comps.iter().enumerate() {
            let small = matches!(kind, AtomKind::Unit | AtomKind::Teen);
            if i == last && i > 0 && small && !out.ends_with(is_vowel_char) {
                out.push_str(&link?.form);
            }
            out.push_str(text);
        }
        Some(out)
    }

    /// Numeral written as separate components: `pesëqind e pesëdhjetë e pesë`.
    pub fn render_cardinal_phrase(&self, n: u64) -> Option<String> {
        let link = &self.atoms.iter().find(|a| a.kind == AtomKind::Link)?.form;
        let comps = self.components(n)?;
        Some(
            comps
                .into_iter()
                .map(|(t, _)| t)
                .collect::<Vec<_>>()
                .join(&format!(" {link} ")),
        )
    }

    /// Parses a numeral phrase: one-word numerals joined by the link word.
    pub fn parse_cardinal_phrase(&self, text: &str) -> Option<u64> {
        let link = &self.atoms.iter().find(|a| a.kind == AtomKind::Link)?.form;
        let words: Vec<String> = text.split_whitespace().map(str::to_lowercase).collect();
        if words.is_empty() || words.len().is_multiple_of(2) {
            return None;
        }
        let mut sum = self.parse_cardinal_word(&words[0])?;
        for pair in words[1..].chunks(2) {
            if &pair[0] != link {
                return None;
            }
            let next = self.parse_cardinal_word(&pair[1])?;
            if !accepts_next(sum, next) {
                return None;
            }
            sum += next;
        }
        Some(sum)
    }

    /// Value of an ordinal body: a numeral whose last atom takes its ordinal
    /// form (`pestë`, `dyzetenjëhtë`, `pesëqindpesëdhjetëpestë`).
    pub fn ordinal_value(&self, token: &str) -> Option<u64> {
        let token = token.to_lowercase();
        let mut candidates: Vec<&Atom> = self
            .atoms
            .iter()
            .filter(|a| a.ordinal.as_deref().is_some_and(|o| token.ends_with(o)))
            .collect();
        candidates.sort_by_key(|a| std::cmp::Reverse(a.ordinal.as_ref().map_or(0, String::len)));
        candidates.into_iter().find_map(|a| {
            let o = a.ordinal.as_deref()?;
            let body = format!("{}{}", &token[..token.len() - o.len()], a.form);
            self.parse_cardinal_word(&body)
        })
    }

    pub fn render_ordinal_word(&self, n: u64) -> Option<String> {
        let word = self.render_cardinal_word(n)?;
        let last = self
            .atoms
            .iter()
            .filter(|a| a.ordinal.is_some() && word.ends_with(a.form.as_str()))
            .max_by_key(|a| a.form.len())?;
        Some(format!(
            "{}{}",
            &word[..word.len() - last.form.len()],
            last.ordinal.as_deref()?
        ))
    }
}

/// Whether `next` may follow a running total in a numeral phrase: it must be
/// smaller than the lowest nonzero place of the total (`dyzet e një`, not
/// `pesë e pesëqind`).
pub fn accepts_next(sum: u64, next: u64) -> bool {
    if sum == 0 || next == 0 {
        return false;
    }
    let mut place = 1;
    let mut s = sum;
    while s.is_multiple_of(10) {
        s /= 10;
        place *= 10;
    }
    next < place
}

fn strip_link<'a, 'b>(seq: &'a [&'b Atom]) -> &'a [&'b Atom] {
    match seq.first() {
        Some(a) if a.kind == AtomKind::Link => &seq[1..],
        _ => seq,
    }
}

fn evaluate(seq: &[&Atom]) -> Option<u64> {
    if seq.len() == 1 && seq[0].kind == AtomKind::Zero {
        return Some(0);
    }
    if seq.iter().any(|a| a.kind == AtomKind::Zero) {
        return None;
    }
    let is_link = |a: &&Atom| a.kind == AtomKind::Link;
    if seq.first().is_some_and(is_link)
        || seq.last().is_some_and(is_link)
        || seq.windows(2).any(|w| is_link(&w[0]) && is_link(&w[1]))
    {
        return None;
    }
    match seq.iter().position(|a| a.kind == AtomKind::Thousand) {
        Some(k) => {
            let mult = if k == 0 { 1 } else { below_thousand(&seq[..k])? };
            let rest = strip_link(&seq[k + 1..]);
            if rest.is_empty() {
                Some(mult * 1000)
            } else {
                Some(mult * 1000 + below_thousand(rest)?)
            }
        }
        None => below_thousand(seq),
    }
}

fn below_thousand(seq: &[&Atom]) -> Option<u64> {
    if seq.is_empty() || seq.iter().any(|a| a.kind == AtomKind::Thousand) {
        return None;
    }
    match seq.iter().position(|a| a.kind == AtomKind::Hundred) {
        Some(h) => {
            let mult = match &seq[..h] {
                [] => 1,
                [u] if u.kind == AtomKind::Unit => u.value,
                _ => return None,
            };
            let rest = strip_link(&seq[h + 1..]);
            if rest.is_empty() {
                Some(mult * 100)
            } else {
                Some(mult * 100 + tens_part(rest)?)
            }
        }
        None => tens_part(seq),
    }
}

fn tens_part(seq: &[&Atom]) -> Option<u64> {
    use AtomKind::*;
    match seq {
        [u] if u.kind == Unit => Some(u.value),
        [t] if t.kind == Tens => Some(t.value),
        [u, t] if u.kind == Unit && t.kind == Teen => Some(u.value + t.value),
        [t, u] if t.kind == Tens && t.value > 10 && u.kind == Unit => Some(t.value + u.value),
        [t, l, u] if t.kind == Tens && t.value > 10 && l.kind == Link && u.kind == Unit => Some(t.value + u.value),
        _ => None,
    }
}

const ROMAN_GROUPS: [(char, char, char, u32); 3] = [('C', 'D', 'M', 100), ('X', 'L', 'C', 10), ('I', 'V', 'X', 1)];

fn roman_digit(d: u32, one: char, five: char, ten: char) -> String {
    let ones = |n: u32| std::iter::repeat_n(one, n as usize);
    match d {
        0..=3 => ones(d).collect(),
        4 => [one, five].iter().collect(),
        5..=8 => std::iter::once(five).chain(ones(d - 5)).collect(),
        _ => [one, ten].iter().collect(),
    }
}

/// Standard subtractive Roman numeral, upper case only, 1 to 3999.
pub fn parse_roman(token: &str) -> Option<u32> {
    if token.is_empty() {
        return None;
    }
    let mut rest = token;
    let thousands = rest.chars().take_while(|&c| c == 'M').count().min(3);
    rest = &rest[thousands..];
    let mut value = thousands as u32 * 1000;
    for (one, five, ten, place) in ROMAN_GROUPS {
        let best = (1..=9)
            .map(|d| (d, roman_digit(d, one, five, ten)))
            .filter(|(_, s)| rest.starts_with(s.as_str()))
            .max_by_key(|(_, s)| s.len());
        if let Some((d, s)) = best {
            value += d * place;
            rest = &rest[s.len()..];
        }
    }
    (rest.is_empty() && value > 0).then_some(value)
}

pub fn render_roman(n: u32) -> Option<String> {
    if !(1..=3999).contains(&n) {
        return None;
    }
    let mut out: String = "M".repeat((n / 1000) as usize);
    for (one, five, ten, place) in ROMAN_GROUPS {
        out.push_str(&roman_digit(n / place % 10, one, five, ten));
    }
    Some(out)
}

/// Components following a number inside one word (`vjeçar` in
/// `pesëdhjetëpesëvjeçar`).
#[derive(Debug, Clone, Default)]
pub struct SuffixTable {
    entries: BTreeMap<String, Vec<(String, FeatureSet)>>,
}

impl SuffixTable {
    pub fn load(text: &str) -> Result<SuffixTable, TableError> {
        let mut entries: BTreeMap<String, Vec<(String, FeatureSet)>> = BTreeMap::new();
        for (line, l) in table_lines(text) {
            let f: Vec<&str> = l.split('\t').map(str::trim).collect();
            if f.len() < 2 || f.len() > 3 || f[0].is_empty() || f[1].is_empty() {
                return Err(TableError {
                    table: "numsuffix",
                    line,
                    message: format!("expected `suffix TAB categories [TAB features]`, got `{l}`"),
                });
            }
            let features = FeatureSet::parse(f.get(2).copied().unwrap_or(""));
            let slot = entries.entry(f[0].to_lowercase()).or_default();
            for cat in f[1].split(',').map(str::trim).filter(|c| !c.is_empty()) {
                slot.push((cat.to_string(), features.clone()));
            }
        }
        Ok(SuffixTable { entries })
    }

    pub fn get(&self, suffix: &str) -> Option<&[(String, FeatureSet)]> {
        self.entries.get(suffix).map(Vec::as_slice)
    }

    pub fn contains(&self, suffix: &str) -> bool {
        self.entries.contains_key(suffix)
    }

    pub fn suffixes(&self) -> impl Iterator<Item = &str> {
        self.entries.keys().map(String::as_str)
    }
}

#[derive(Debug, Clone, Default)]
pub struct AffixTable {
    /// Longest first.
    prefixes: Vec<String>,
    /// Suffix form and the category it gives (`fob`, A).
    suffixes: Vec<(String, String)>,
}

impl AffixTable {
    pub fn load(text: &str) -> Result<AffixTable, TableError> {
        let mut t = AffixTable::default();
        for (line, l) in table_lines(text) {
            let f: Vec<&str> = l.split('\t').map(str::trim).collect();
            match (f[0].strip_prefix('-'), f.len()) {
                (Some(form), 2) if !form.is_empty() && !f[1].is_empty() => {
                    t.suffixes.push((form.to_lowercase(), f[1].to_string()))
                }
                (None, 1) if !f[0].is_empty() => t.prefixes.push(f[0].to_lowercase()),
                _ => {
                    return Err(TableError {
                        table: "affixes",
                        line,
                        message: format!("expected `prefix` or `-suffix TAB category`, got `{l}`"),
                    })
                }
            }
        }
        t.prefixes
            .sort_by(|a, b| b.chars().count().cmp(&a.chars().count()).then(a.cmp(b)));
        t.prefixes.dedup();
        Ok(t)
    }

    pub fn prefixes(&self) -> &[String] {
        &self.prefixes
    }

    pub fn suffixes(&self) -> &[(String, String)] {
        &self.suffixes
    }
}

pub fn load_clitics(text: &str) -> Vec<String> {
    table_lines(text).map(|(_, l)| l.trim().to_lowercase()).collect()
}

#[derive(Debug, Clone, Default)]
pub struct Morphogrammar {
    pub numerals: NumeralTable,
    pub suffixes: SuffixTable,
    pub affixes: AffixTable,
    pub clitics: Vec<String>,
}

fn value_features(n: u64) -> FeatureSet {
    let mut fs = FeatureSet::new();
    fs.insert(&format!("val={n}"));
    fs
}

const DERIVABLE: [&str; 3] = ["N", "V", "A"];

impl Morphogrammar {
    pub fn recognize_cardinal(&self, token: &str) -> Option<Analysis> {
        let v = self.numerals.parse_cardinal_word(token)?;
        Some(Analysis::new(
            token,
            &token.to_lowercase(),
            "NUM",
            value_features(v),
            Provenance::Morphogrammar,
        ))
    }

    /// An ordinal body is an adjective carrying its value.
    pub fn recognize_ordinal_body(&self, token: &str) -> Option<Analysis> {
        let v = self.numerals.ordinal_value(token)?;
        Some(Analysis::new(
            token,
            &token.to_lowercase(),
            "A",
            value_features(v),
            Provenance::Morphogrammar,
        ))
    }

    pub fn recognize_roman(&self, token: &str) -> Option<Analysis> {
        let v = parse_roman(token)?;
        Some(Analysis::new(
            token,
            token,
            "NUM",
            value_features(u64::from(v)),
            Provenance::Morphogrammar,
        ))
    }

    /// Number followed by a registered component: `dyfish` is `2fish`.
    /// Inflected components are resolved through the lexicon.
    pub fn recognize_numeric_compound(&self, token: &str, lex: &CompiledLexicon) -> Vec<Analysis> {
        let lower = token.to_lowercase();
        let mut out = Vec::new();
        for (k, _) in lower.char_indices().skip(1) {
            let (x, y) = lower.split_at(k);
            let Some(v) = self.numerals.parse_cardinal_word(x) else {
                continue;
            };
            if let Some(regs) = self.suffixes.get(y) {
                for (cat, fs) in regs {
                    out.push(Analysis::new(
                        token,
                        &format!("{v}{y}"),
                        cat,
                        fs.clone(),
                        Provenance::Morphogrammar,
                    ));
                }
                continue;
            }
            for p in lex.lookup(y) {
                if self.suffixes.contains(&p.lemma) {
                    out.push(Analysis::new(
                        token,
                        &format!("{v}{}", p.lemma),
                        &p.category,
                        p.features.clone(),
                        Provenance::Morphogrammar,
                    ));
                }
            }
        }
        out
    }

    /// Prefix plus a known noun, verb or adjective form; the result keeps the
    /// form's category and features. Also tags `-fob`/`-fobi` compounds.
    pub fn recognize_affixed(&self, token: &str, lex: &CompiledLexicon) -> Vec<Analysis> {
        let lower = token.to_lowercase();
        let mut out = Vec::new();
        for p in self.affixes.prefixes() {
            let Some(rest) = lower.strip_prefix(p.as_str()) else {
                continue;
            };
            if rest.is_empty() {
                continue;
            }
            for payload in lex.lookup(rest) {
                if DERIVABLE.contains(&payload.category.as_str()) {
                    out.push(Analysis::new(
                        token,
                        &format!("{p}{}", payload.lemma),
                        &payload.category,
                        payload.features.clone(),
                        Provenance::Morphogrammar,
                    ));
                }
            }
        }
        for (form, cat) in self.affixes.suffixes() {
            if let Some(x) = lower.strip_suffix(form.as_str()) {
                if x.ends_with('o') && x.chars().count() >= 2 {
                    out.push(Analysis::new(
                        token,
                        &lower,
                        cat,
                        FeatureSet::new(),
                        Provenance::Morphogrammar,
                    ));
                }
            }
        }
        out
    }

    /// Splits an imperative carrying a clitic: infixed before the plural
    /// `-ni` (`tregojeni` is `e` + `tregoni`, with an epenthetic `j` after a
    /// vowel) or appended to the singular (`merri` is `merr` + `i`).
    pub fn split_clitic_imperative(&self, token: &str, lex: &CompiledLexicon) -> Vec<(Analysis, Analysis)> {
        let lower = token.to_lowercase();
        let mut out = Vec::new();
        for c in &self.clitics {
            let clitic = Analysis::new(c, c, "PRO", FeatureSet::new(), Provenance::Morphogrammar);
            if let Some(stem) = lower.strip_suffix(&format!("{c}ni")) {
                let mut stems = vec![stem];
                if let Some(s) = stem.strip_suffix('j') {
                    if s.ends_with(is_vowel_char) {
                        stems.insert(0, s);
                    }
                }
                for s in stems.into_iter().filter(|s| !s.is_empty()) {
                    let verb = format!("{s}ni");
                    for a in imperatives(lex, &verb, "p") {
                        out.push((clitic.clone(), a));
                    }
                }
            }
            if let Some(verb) = lower.strip_suffix(c.as_str()).filter(|v| !v.is_empty()) {
                for a in imperatives(lex, verb, "s") {
                    out.push((clitic.clone(), a));
                }
            }
        }
        out
    }
}

fn imperatives(lex: &CompiledLexicon, surface: &str, number: &str) -> Vec<Analysis> {
    let want = FeatureSet::parse(&format!("+IP+2+{number}"));
    lex.lookup(surface)
        .into_iter()
        .filter(|p| p.category == "V" && p.features.is_superset(&want))
        .map(|p| {
            let mut a = Analysis::from_payload(surface, p);
            a.provenance = Provenance::Morphogrammar;
            a
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn table() -> NumeralTable {
        NumeralTable::load(include_str!("../data/tables/numerals.tab")).unwrap()
    }

    #[test]
    fn attested_cardinals() {
        let t = table();
        for (w, v) in [
            ("pesë", 5),
            ("dhjetë", 10),
            ("pesëdhjetë", 50),
            ("dyzet", 40),
            ("pesëqind", 500),
            ("dymbëdhjetë", 12),
            ("dyqindedy", 202),
            ("qind", 100),
        ] {
            assert_eq!(t.parse_cardinal_word(w), Some(v), "{w}");
        }
        for w in ["libër", "", "e", "dhjetëdy", "pesëepesëqind", "dyedy"] {
            assert_eq!(t.parse_cardinal_word(w), None, "{w}");
        }
    }

    #[test]
    fn renders_words_and_phrases() {
        let t = table();
        assert_eq!(t.render_cardinal_word(41).unwrap(), "dyzetenjë");
        assert_eq!(t.render_cardinal_word(55).unwrap(), "pesëdhjetëpesë");
        assert_eq!(t.render_cardinal_word(202).unwrap(), "dyqindedy");
        assert_eq!(t.render_cardinal_word(555).unwrap(), "pesëqindpesëdhjetëpesë");
        assert_eq!(t.render_cardinal_phrase(555).unwrap(), "pesëqind e pesëdhjetë e pesë");
        assert_eq!(t.render_cardinal_phrase(41).unwrap(), "dyzet e një");
        assert_eq!(t.parse_cardinal_phrase("pesëdhjetë e pesë"), Some(55));
        assert_eq!(t.parse_cardinal_phrase("pesë e pesëqind"), None);
        assert_eq!(t.parse_cardinal_phrase("pesë e"), None);
    }

    #[test]
    fn ordinals() {
        let t = table();
        assert_eq!(t.ordinal_value("pestë"), Some(5));
        assert_eq!(t.ordinal_value("dyzetenjëhtë"), Some(41));
        assert_eq!(t.ordinal_value("pesëdhjetë"), Some(50));
        assert_eq!(t.ordinal_value("pesëqindpesëdhjetëpestë"), Some(555));
        assert_eq!(t.ordinal_value("pesë"), None);
        assert_eq!(t.render_ordinal_word(41).unwrap(), "dyzetenjëhtë");
    }

    #[test]
    fn next_component_rule() {
        assert!(accepts_next(40, 1));
        assert!(accepts_next(500, 50));
        assert!(!accepts_next(5, 500));
        assert!(!accepts_next(41, 1));
        assert!(!accepts_next(500, 100));
    }

    #[test]
    fn roman() {
        assert_eq!(parse_roman("XIV"), Some(14));
        assert_eq!(parse_roman("I"), Some(1));
        assert_eq!(parse_roman("MMMCMXCIX"), Some(3999));
        for bad in ["VX", "IIII", "", "MMMM", "IC", "xiv", "VV"] {
            assert_eq!(parse_roman(bad), None, "{bad}");
        }
        assert_eq!(render_roman(1994).unwrap(), "MCMXCIV");
    }

    #[test]
    fn tables_reject_bad_lines() {
        assert!(NumeralTable::load("një\tx\tunit").is_err());
        assert!(NumeralTable::load("një\t1\tfoo").is_err());
        assert!(NumeralTable::load("një\t1\tunit\nnjë\t1\tunit").is_err());
        assert!(SuffixTable::load("fish").is_err());
        assert!(AffixTable::load("-fob").is_err());
        let s = SuffixTable::load("fish\tN,ADV\n").unwrap();
        assert_eq!(s.get("fish").unwrap().len(), 2);
        let a = AffixTable::load("pa\npara\n").unwrap();
        assert_eq!(a.prefixes(), ["para", "pa"]);
        assert_eq!(load_clitics("# c\ne\n i \n"), ["e", "i"]);
    }
}
