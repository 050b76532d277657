//! Multi-token grammars over analyzed tokens: particle joins, particle
//! tenses, full ordinals, compound cardinals and repeated X-X words.
//!
//! The grammars run in a fixed order. Each scans left to right, takes the
//! longest match at a position, never overlaps an earlier span and never
//! crosses a sentence boundary.

use std::fmt;

use crate::analysis::{Analysis, Provenance, Token};
use crate::features::FeatureSet;
use crate::lexicon::CompiledLexicon;
use crate::morphogrammar::{accepts_next, Morphogrammar};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Rule {
    Join,
    Tense,
    Ordinal,
    Cardinal,
    Xx,
}

impl Rule {
    pub const CASCADE: [Rule; 5] = [Rule::Join, Rule::Tense, Rule::Ordinal, Rule::Cardinal, Rule::Xx];

    pub fn as_str(self) -> &'static str {
        match self {
            Rule::Join => "join",
            Rule::Tense => "tense",
            Rule::Ordinal => "ordinal",
            Rule::Cardinal => "cardinal",
            Rule::Xx => "xx",
        }
    }
}

impl fmt::Display for Rule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Tokens `start..end` read together.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Span {
    pub start: usize,
    pub end: usize,
    pub rule: Rule,
    pub analyses: Vec<Analysis>,
}

impl Span {
    pub fn len(&self) -> usize {
        self.end - self.start
    }

    pub fn is_empty(&self) -> bool {
        self.end == self.start
    }

    /// Numeric value of the first analysis carrying one.
    pub fn value(&self) -> Option<u64> {
        self.analyses.iter().find_map(Analysis::value)
    }
}

const PARTICLES: [&str; 4] = ["i", "e", "të", "së"];

pub struct Grammars<'a> {
    pub lexicon: &'a CompiledLexicon,
    pub grammar: &'a Morphogrammar,
}

fn span_text(tokens: &[Token]) -> String {
    tokens.iter().map(|t| t.surface.as_str()).collect::<Vec<_>>().join(" ")
}

fn spaced(tokens: &[Token]) -> bool {
    tokens
        .iter()
        .skip(1)
        .all(|t| !t.gap.is_empty() && t.gap.chars().all(char::is_whitespace))
}

fn syntax_analysis(surface: &str, lemma: &str, category: &str, features: FeatureSet) -> Analysis {
    Analysis::new(surface, lemma, category, features, Provenance::Syntax)
}

impl<'a> Grammars<'a> {
    pub fn new(lexicon: &'a CompiledLexicon, grammar: &'a Morphogrammar) -> Self {
        Grammars { lexicon, grammar }
    }

    /// Runs every grammar in cascade order, keeping `existing` spans and
    /// adding new ones around them. Running it again on its own output adds
    /// nothing.
    pub fn cascade(&self, tokens: &[Token], existing: &[Span]) -> Vec<Span> {
        let mut covered = vec![false; tokens.len()];
        let mut spans: Vec<Span> = existing.to_vec();
        for s in existing {
            covered[s.start..s.end].iter_mut().for_each(|c| *c = true);
        }
        for rule in Rule::CASCADE {
            let mut i = 0;
            while i < tokens.len() {
                if covered[i] {
                    i += 1;
                    continue;
                }
                match self.match_at(rule, tokens, i, &covered) {
                    Some(span) => {
                        covered[span.start..span.end].iter_mut().for_each(|c| *c = true);
                        i = span.end;
                        spans.push(span);
                    }
                    None => i += 1,
                }
            }
        }
        spans.sort_by_key(|s| (s.start, s.end));
        spans
    }

    pub fn match_at(&self, rule: Rule, tokens: &[Token], i: usize, covered: &[bool]) -> Option<Span> {
        match rule {
            Rule::Join => self.join_particle_noun(tokens, i, covered),
            Rule::Tense => self.match_particle_tense(tokens, i, covered),
            Rule::Ordinal => self.match_full_ordinal(tokens, i, covered),
            Rule::Cardinal => self.match_compound_cardinal(tokens, i, covered),
            Rule::Xx => self.match_xx_word(tokens, i, covered),
        }
    }

    /// Tokens `i..i+n` exist, are free and lie in one sentence.
    fn window<'t>(&self, tokens: &'t [Token], i: usize, n: usize, covered: &[bool]) -> Option<&'t [Token]> {
        let w = tokens.get(i..i + n)?;
        let sentence = w.first()?.sentence;
        (w.iter().all(|t| t.sentence == sentence) && !covered[i..i + n].iter().any(|&c| c)).then_some(w)
    }

    /// Multiword lexicon surfaces other than verb forms: `të agimit`,
    /// `së afërmi`, `me anë`.
    pub fn join_particle_noun(&self, tokens: &[Token], i: usize, covered: &[bool]) -> Option<Span> {
        for n in (2..=self.lexicon.max_words().max(2)).rev() {
            let Some(w) = self.window(tokens, i, n, covered) else {
                continue;
            };
            if !spaced(w) {
                continue;
            }
            let text = span_text(w);
            let analyses: Vec<Analysis> = self
                .lexicon
                .lookup(&text)
                .into_iter()
                .filter(|p| p.category != "V")
                .map(|p| syntax_analysis(&text, &p.lemma, &p.category, p.features.clone()))
                .collect();
            if !analyses.is_empty() {
                return Some(Span {
                    start: i,
                    end: i + n,
                    rule: Rule::Join,
                    analyses,
                });
            }
        }
        None
    }

    /// `do të [clitic] V`, `të [clitic] V` and `u V`.
    pub fn match_particle_tense(&self, tokens: &[Token], i: usize, covered: &[bool]) -> Option<Span> {
        let first = tokens.get(i)?;
        let particle: &[&str] = if first.is("do") {
            &["do", "të"]
        } else if first.is("të") {
            &["të"]
        } else if first.is("u") {
            &["u"]
        } else {
            return None;
        };
        let clitic_options: &[bool] = if particle == ["u"] { &[false] } else { &[true, false] };
        for &clitic in clitic_options {
            let n = particle.len() + usize::from(clitic) + 1;
            let Some(w) = self.window(tokens, i, n, covered) else {
                continue;
            };
            if !spaced(w) || !w.iter().zip(particle).all(|(t, p)| t.is(p)) {
                continue;
            }
            if clitic && !self.grammar.clitics.iter().any(|c| w[particle.len()].is(c)) {
                continue;
            }
            let analyses = self.tense_readings(particle, &w[n - 1], &span_text(w));
            if !analyses.is_empty() {
                return Some(Span {
                    start: i,
                    end: i + n,
                    rule: Rule::Tense,
                    analyses,
                });
            }
        }
        None
    }

    fn tense_readings(&self, particle: &[&str], verb: &Token, text: &str) -> Vec<Analysis> {
        let key = format!("{} {}", particle.join(" "), verb.surface.to_lowercase());
        let listed: Vec<Analysis> = self
            .lexicon
            .lookup(&key)
            .into_iter()
            .filter(|p| p.category == "V")
            .map(|p| syntax_analysis(text, &p.lemma, "V", p.features.clone()))
            .collect();
        if !listed.is_empty() || particle == ["u"] {
            return listed;
        }
        // verbs built by the morphogrammar have no listed particle forms
        let future = particle.len() == 2;
        let mut out = Vec::new();
        for a in verb.words() {
            if a.category != "V" || a.provenance == Provenance::Lexicon {
                continue;
            }
            let (Some(p), Some(n)) = (
                ["1", "2", "3"].into_iter().find(|v| a.features.contains(v)),
                ["s", "p"].into_iter().find(|v| a.features.contains(v)),
            ) else {
                continue;
            };
            let head = if a.features.contains("PR") && a.features.contains("Ind") {
                if future {
                    "+F+Ind"
                } else {
                    "+Subj+PR"
                }
            } else if a.features.contains("I") {
                if future {
                    "+Kusht"
                } else {
                    "+Subj+I"
                }
            } else {
                continue;
            };
            let mut fs = FeatureSet::parse(&format!("{head}+{p}+{n}"));
            if a.features.contains("joveprore") {
                fs = FeatureSet::parse("+joveprore").union(&fs);
            }
            out.push(syntax_analysis(text, &a.lemma, "V", fs));
        }
        out
    }

    /// Particle followed by an ordinal body: `i pestë`.
    pub fn match_full_ordinal(&self, tokens: &[Token], i: usize, covered: &[bool]) -> Option<Span> {
        let w = self.window(tokens, i, 2, covered)?;
        let particle = PARTICLES.into_iter().find(|p| w[0].is(p))?;
        if !spaced(w) {
            return None;
        }
        // `e` inside a compound cardinal is the link, not a particle
        if particle == "e" && i > 0 {
            let prev = &tokens[i - 1];
            if prev.sentence == w[0].sentence && self.grammar.numerals.parse_cardinal_word(&prev.surface).is_some() {
                return None;
            }
        }
        let value = self.grammar.numerals.ordinal_value(&w[1].surface)?;
        let mut fs = FeatureSet::new();
        fs.insert(&format!("val={value}"));
        match particle {
            "i" => fs.insert("m"),
            "e" | "së" => fs.insert("f"),
            _ => false,
        };
        let text = span_text(w);
        Some(Span {
            start: i,
            end: i + 2,
            rule: Rule::Ordinal,
            analyses: vec![syntax_analysis(&text, &w[1].surface.to_lowercase(), "A", fs)],
        })
    }

    /// `NUM (e NUM)*` with each part below the lowest place of the total so
    /// far: `pesëqind e pesëdhjetë e pesë`.
    pub fn match_compound_cardinal(&self, tokens: &[Token], i: usize, covered: &[bool]) -> Option<Span> {
        let numerals = &self.grammar.numerals;
        let w = self.window(tokens, i, 1, covered)?;
        let mut sum = numerals.parse_cardinal_word(&w[0].surface)?;
        let mut end = i + 1;
        while let Some(pair) = self.window(tokens, end, 2, covered) {
            if pair[0].sentence != w[0].sentence || !pair[0].is("e") || !spaced(&tokens[end - 1..end + 2]) {
                break;
            }
            match numerals.parse_cardinal_word(&pair[1].surface) {
                Some(next) if accepts_next(sum, next) => {
                    sum += next;
                    end += 2;
                }
                _ => break,
            }
        }
        let text = span_text(&tokens[i..end]);
        let mut fs = FeatureSet::new();
        fs.insert(&format!("val={sum}"));
        Some(Span {
            start: i,
            end,
            rule: Rule::Cardinal,
            analyses: vec![syntax_analysis(&text, &text.to_lowercase(), "NUM", fs)],
        })
    }

    /// A component repeated around a hyphen: `tang-tang`. Proposed as
    /// onomatopoeia, adverb or adjective, tagged for validation.
    pub fn match_xx_word(&self, tokens: &[Token], i: usize, covered: &[bool]) -> Option<Span> {
        let one = self.window(tokens, i, 1, covered)?;
        let lower = one[0].surface.to_lowercase();
        let (span, lemma) = match lower.split_once('-') {
            Some((a, b)) if !a.is_empty() && a == b => ((i, i + 1), lower.clone()),
            _ => {
                let w = self.window(tokens, i, 2, covered)?;
                let b = w[1].surface.to_lowercase();
                if w[1].gap.trim() != "-" || b != lower || lower.contains('-') {
                    return None;
                }
                ((i, i + 2), format!("{lower}-{b}"))
            }
        };
        let text = span_text(&tokens[span.0..span.1]);
        let analyses = ["ONOM", "ADV", "A"]
            .into_iter()
            .map(|c| syntax_analysis(&text, &lemma, c, FeatureSet::parse("+hypo_n")))
            .collect();
        Some(Span {
            start: span.0,
            end: span.1,
            rule: Rule::Xx,
            analyses,
        })
    }
}
