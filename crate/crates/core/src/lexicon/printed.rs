//! Printed-dictionary lines and their conversion to entries.
//!
//! Recognized shapes:
//!
//! ```text
//! aeroplan,-i m. pl. (-ë, -ët) plane m.     noun
//! an/ë, -a f. pl. (-ë, -ët) side            noun with radical
//! laj (lava, larë) to wash                  active verb
//! lahem (u lava, larë) to wash oneself      non-active verb
//! mirë (i,e) good                           articulated adjective
//! absurd(e) absurd                          plain adjective
//! afër adv. and prep. + abl. near           invariants
//! adio! excl. adieu!
//! ```

use std::fmt;
use std::sync::OnceLock;

use regex::Regex;

use super::LexEntry;
use crate::features::FeatureSet;
use crate::paradigm::{Paradigm, ParadigmLibrary};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Parsed {
    Noun {
        lemma: String,
        radical: String,
        t1: String,
        t2: String,
        gender: Option<String>,
        plural: Option<(String, String)>,
    },
    Verb {
        lemma: String,
        aorist: String,
        participle: String,
        active: bool,
    },
    Adjective {
        lemma: String,
        articulated: bool,
    },
    Invariant {
        lemma: String,
        tags: Vec<(String, FeatureSet)>,
    },
}

impl Parsed {
    pub fn lemma(&self) -> &str {
        match self {
            Parsed::Noun { lemma, .. }
            | Parsed::Verb { lemma, .. }
            | Parsed::Adjective { lemma, .. }
            | Parsed::Invariant { lemma, .. } => lemma,
        }
    }

    pub fn kind(&self) -> &'static str {
        match self {
            Parsed::Noun { .. } => "noun",
            Parsed::Verb { active: true, .. } => "active verb",
            Parsed::Verb { active: false, .. } => "non-active verb",
            Parsed::Adjective { .. } => "adjective",
            Parsed::Invariant { .. } => "invariant",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Status {
    Ok,
    Problem(String),
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Status::Ok => f.write_str("ok"),
            Status::Problem(r) => write!(f, "problem({r})"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PrintedEntry {
    pub raw: String,
    pub parsed: Option<Parsed>,
    pub gloss: String,
    pub status: Status,
}

impl PrintedEntry {
    fn problem(raw: &str, reason: &str) -> PrintedEntry {
        PrintedEntry {
            raw: raw.to_string(),
            parsed: None,
            gloss: String::new(),
            status: Status::Problem(reason.to_string()),
        }
    }

    fn ok(raw: &str, parsed: Parsed, gloss: &str) -> PrintedEntry {
        PrintedEntry {
            raw: raw.to_string(),
            parsed: Some(parsed),
            gloss: gloss.trim().to_string(),
            status: Status::Ok,
        }
    }
}

fn adjective_re() -> &'static Regex {
    static RE: OnceLock<Regex> = OnceLock::new();
    RE.get_or_init(|| Regex::new(r"^(?P<w>[^\s(),]+)\s*\(\s*(?P<p>i\s*,\s*e|e)\s*\)\s*(?P<gloss>.*)$").unwrap())
}

fn verb_re() -> &'static Regex {
    static RE: OnceLock<Regex> = OnceLock::new();
    RE.get_or_init(|| {
        Regex::new(r"^(?P<v>[^\s(),]+)\s+\(\s*(?P<f2>[^,()]+?)\s*,\s*(?P<pp>[^,()]+?)\s*\)\s*(?P<gloss>.*)$").unwrap()
    })
}

fn noun_re() -> &'static Regex {
    static RE: OnceLock<Regex> = OnceLock::new();
    RE.get_or_init(|| {
        Regex::new(
            r"^(?P<head>[^\s,()]+)\s*,\s*-(?P<t2>[^\s,()]+)\s*(?:(?P<g>[mf])\.)?\s*(?:pl\.)?\s*(?:\(\s*-(?P<t3>[^\s,()]*)\s*,\s*-(?P<t4>[^\s,()]*)\s*\))?\s*(?P<gloss>.*)$",
        )
        .unwrap()
    })
}

fn category_marker(token: &str) -> Option<&'static str> {
    match token {
        "adv." => Some("ADV"),
        "prep." => Some("PREP"),
        "conj." => Some("CONJ"),
        "excl." | "excl!" => Some("INTERJ"),
        _ => None,
    }
}

fn case_marker(token: &str) -> Option<&'static str> {
    match token {
        "abl." => Some("rrjedh"),
        "gen." => Some("gjin"),
        "acc." => Some("kallez"),
        "nom." => Some("emer"),
        "dat." => Some("dhan"),
        _ => None,
    }
}

fn parse_invariant(line: &str) -> Option<(Parsed, String)> {
    let tokens: Vec<&str> = line.split_whitespace().collect();
    let first = tokens.iter().position(|t| category_marker(t).is_some())?;
    let lemma = tokens[..first].join(" ");
    let lemma = lemma.trim_end_matches('!').trim();
    if lemma.is_empty() {
        return None;
    }
    let mut tags: Vec<(String, FeatureSet)> = Vec::new();
    let mut i = first;
    while i < tokens.len() {
        let t = tokens[i];
        if let Some(cat) = category_marker(t) {
            tags.push((cat.to_string(), FeatureSet::new()));
        } else if t == "+" {
            let case = tokens.get(i + 1).and_then(|c| case_marker(c))?;
            tags.last_mut()?.1.insert(case);
            i += 1;
        } else if t != "and" {
            break;
        }
        i += 1;
    }
    Some((
        Parsed::Invariant {
            lemma: lemma.to_string(),
            tags,
        },
        tokens[i..].join(" "),
    ))
}

/// Classifies one printed-dictionary line. Never fails: unrecognized lines
/// carry a problem status.
pub fn parse_printed(line: &str) -> PrintedEntry {
    let raw = line.trim_end_matches(['\r', '\n']);
    let line = raw.trim();
    if line.is_empty() {
        return PrintedEntry::problem(raw, "empty");
    }
    if let Some(c) = adjective_re().captures(line) {
        let parsed = Parsed::Adjective {
            lemma: c["w"].to_string(),
            articulated: c["p"].starts_with('i'),
        };
        return PrintedEntry::ok(raw, parsed, &c["gloss"]);
    }
    if let Some(c) = verb_re().captures(line) {
        let aorist = c["f2"].split_whitespace().collect::<Vec<_>>().join(" ");
        let parsed = Parsed::Verb {
            lemma: c["v"].to_string(),
            active: !aorist.starts_with("u "),
            aorist,
            participle: c["pp"].to_string(),
        };
        return PrintedEntry::ok(raw, parsed, &c["gloss"]);
    }
    if let Some(c) = noun_re().captures(line) {
        let head = &c["head"];
        let (radical, t1) = match head.split_once('/') {
            Some((r, t)) => (r.to_string(), t.to_string()),
            None => (head.to_string(), String::new()),
        };
        if radical.is_empty() {
            return PrintedEntry::problem(raw, "empty radical");
        }
        let plural = match (c.name("t3"), c.name("t4")) {
            (Some(a), Some(b)) => Some((a.as_str().to_string(), b.as_str().to_string())),
            _ => None,
        };
        let parsed = Parsed::Noun {
            lemma: format!("{radical}{t1}"),
            radical,
            t1,
            t2: c["t2"].to_string(),
            gender: c.name("g").map(|g| g.as_str().to_string()),
            plural,
        };
        return PrintedEntry::ok(raw, parsed, &c["gloss"]);
    }
    if let Some((parsed, gloss)) = parse_invariant(line) {
        return PrintedEntry::ok(raw, parsed, &gloss);
    }
    PrintedEntry::problem(raw, "unrecognized format")
}

#[derive(Clone)]
struct Citation {
    surface: String,
    signature: FeatureSet,
}

fn cite(surface: String, signature: &str) -> Citation {
    Citation {
        surface,
        signature: FeatureSet::parse(signature),
    }
}

/// Number of citations a paradigm reproduces, or `None` when it contradicts
/// one (produces a different surface for the same features) or cannot be
/// applied to the lemma.
fn coverage(p: &Paradigm, lemma: &str, cites: &[Citation]) -> Option<usize> {
    let forms = p.inflect(lemma, &p.defaults).ok()?;
    let mut covered = 0;
    for c in cites {
        let matching: Vec<&str> = forms
            .iter()
            .filter(|f| f.features.is_superset(&c.signature))
            .map(|f| f.surface.as_str())
            .collect();
        if matching.contains(&c.surface.as_str()) {
            covered += 1;
        } else if !matching.is_empty() {
            return None;
        }
    }
    Some(covered)
}

fn generates(p: &Paradigm, value: &str) -> bool {
    p.productions
        .iter()
        .any(|pr| p.defaults.union(&pr.features).contains(value))
}

fn gender_of(p: &Paradigm) -> Option<&'static str> {
    ["m", "f"].into_iter().find(|g| p.defaults.contains(g))
}

/// Best candidate by coverage, ties to the lowest name.
fn pick<'a>(
    lemma: &str,
    candidates: impl Iterator<Item = &'a Paradigm>,
    cites: &[Citation],
    accept: impl Fn(usize) -> bool,
) -> Option<&'a Paradigm> {
    let mut best: Vec<(usize, &Paradigm)> = Vec::new();
    for p in candidates {
        let Some(n) = coverage(p, lemma, cites) else { continue };
        if !accept(n) {
            continue;
        }
        match best.first() {
            Some(&(m, _)) if n < m => {}
            Some(&(m, _)) if n == m => best.push((n, p)),
            _ => best = vec![(n, p)],
        }
    }
    // the library iterates in name order
    let chosen = best.first()?.1;
    if best.len() > 1 {
        let others: Vec<&str> = best[1..].iter().map(|(_, p)| p.name.as_str()).collect();
        log::warn!(
            "`{lemma}`: ambiguous paradigms, chose {} over {}",
            chosen.name,
            others.join(", ")
        );
    }
    Some(chosen)
}

fn noun_entries(
    lemma: &str,
    radical: &str,
    t2: &str,
    gender: Option<&str>,
    plural: Option<&(String, String)>,
    lib: &ParadigmLibrary,
) -> Result<Vec<LexEntry>, String> {
    let singular = [
        cite(lemma.to_string(), "+s+emer+pashquar"),
        cite(format!("{radical}{t2}"), "+s+emer+shquar"),
    ];
    let plural_cites: Vec<Citation> = plural
        .map(|(t3, t4)| {
            vec![
                cite(format!("{radical}{t3}"), "+p+emer+pashquar"),
                cite(format!("{radical}{t4}"), "+p+emer+shquar"),
            ]
        })
        .unwrap_or_default();
    let gender_ok = |p: &Paradigm| match (gender, gender_of(p)) {
        (Some(g), Some(pg)) => g == pg,
        _ => true,
    };
    let nouns = || lib.iter().filter(|p| p.category == "N");
    let entry = |p: &Paradigm, extra: &[Option<&str>]| {
        let mut inherent = p.defaults.clone();
        for v in extra.iter().flatten() {
            inherent.insert(v);
        }
        LexEntry::new(lemma, "N", Some(&p.name), inherent)
    };

    // one paradigm for both numbers
    let all: Vec<Citation> = singular.iter().chain(&plural_cites).cloned().collect();
    let whole = pick(
        lemma,
        nouns().filter(|p| gender_ok(p) && (plural.is_none() || generates(p, "p"))),
        &all,
        |n| n > 0,
    )
    .filter(|p| {
        let s = coverage(p, lemma, &singular).unwrap_or(0);
        let pl = coverage(p, lemma, &plural_cites).unwrap_or(0);
        s > 0 && (plural.is_none() || pl > 0)
    });
    if let Some(p) = whole {
        let g = if gender_of(p).is_none() { gender } else { None };
        return Ok(vec![entry(p, &[g])]);
    }

    let s = pick(
        lemma,
        nouns().filter(|p| gender_ok(p) && !generates(p, "p")),
        &singular,
        |n| n > 0,
    )
    .ok_or("no_paradigm")?;
    let mut out = vec![entry(s, &[gender.filter(|_| gender_of(s).is_none()), Some("s")])];
    if plural.is_some() {
        let p = pick(lemma, nouns().filter(|p| !generates(p, "s")), &plural_cites, |n| n > 0).ok_or("no_paradigm")?;
        let g = if gender_of(p).is_none() { gender } else { None };
        out.push(entry(p, &[g, Some("p")]));
    }
    Ok(out)
}

/// Chooses paradigms that reproduce the printed citation forms.
pub fn assign_paradigm(pe: &PrintedEntry, lib: &ParadigmLibrary) -> Result<Vec<LexEntry>, String> {
    let parsed = match (&pe.status, &pe.parsed) {
        (Status::Ok, Some(p)) => p,
        (Status::Problem(r), _) => return Err(r.clone()),
        _ => return Err("unparsed".into()),
    };
    let of = |cat: &'static str| lib.iter().filter(move |p| p.category == cat);
    match parsed {
        Parsed::Invariant { lemma, tags } => Ok(tags
            .iter()
            .map(|(cat, fs)| LexEntry::new(lemma, cat, None, fs.clone()))
            .collect()),
        Parsed::Noun {
            lemma,
            radical,
            t2,
            gender,
            plural,
            ..
        } => noun_entries(lemma, radical, t2, gender.as_deref(), plural.as_ref(), lib),
        Parsed::Verb {
            lemma,
            aorist,
            participle,
            active,
        } => {
            let cites = [
                cite(lemma.clone(), "+PR+Ind+1+s"),
                cite(aorist.clone(), "+PS+Ind+1+s"),
                cite(participle.clone(), "+PP"),
            ];
            let voice_ok = |p: &&Paradigm| p.defaults.contains("joveprore") != *active;
            let p = pick(lemma, of("V").filter(voice_ok), &cites, |n| n == cites.len()).ok_or("no_paradigm")?;
            Ok(vec![LexEntry::new(lemma, "V", Some(&p.name), p.defaults.clone())])
        }
        Parsed::Adjective { lemma, articulated } => {
            let cites = if *articulated {
                [
                    cite(format!("i {lemma}"), "+m+s+emer"),
                    cite(format!("e {lemma}"), "+f+s+emer"),
                ]
            } else {
                [cite(lemma.clone(), "+m+s"), cite(format!("{lemma}e"), "+f+s")]
            };
            let p = pick(lemma, of("A"), &cites, |n| n == cites.len()).ok_or("no_paradigm")?;
            Ok(vec![LexEntry::new(lemma, "A", Some(&p.name), p.defaults.clone())])
        }
    }
}
