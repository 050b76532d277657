//! Worked examples with known answers.

use shqip_core::analysis::{Analysis, Reading};
use shqip_core::features::FeatureSet;
use shqip_core::lexicon::{assign_paradigm, flx_line, parse_printed, LexEntry, Status};
use shqip_core::paradigm::{apply, collapse_char_pairs, parse_commands, Mode, Paradigm};
use shqip_core::resources::Resources;
use shqip_core::syntax::Rule;

fn res() -> Resources {
    Resources::embedded().unwrap()
}

const AGIM: &str = "\
agimi,agim,N+FLX=NS2_t+m+s+emer+shquar
agimin,agim,N+FLX=NS2_t+m+s+kallez+shquar
së agimit,agim,N+FLX=NS2_t+m+s+gjin+shquar
të agimit,agim,N+FLX=NS2_t+m+s+gjin+shquar
i agimit,agim,N+FLX=NS2_t+m+s+gjin+shquar
e agimit,agim,N+FLX=NS2_t+m+s+gjin+shquar
agimit,agim,N+FLX=NS2_t+m+s+dhan+shquar
agimit,agim,N+FLX=NS2_t+m+s+rrjedh+shquar
agime,agim,N+FLX=NPL7+f+p+kallez+pashquar
agime,agim,N+FLX=NPL7+f+p+emer+pashquar
e agimeve,agim,N+FLX=NPL7+f+p+gjin+pashquar
i agimeve,agim,N+FLX=NPL7+f+p+gjin+pashquar
të agimeve,agim,N+FLX=NPL7+f+p+gjin+pashquar
së agimeve,agim,N+FLX=NPL7+f+p+gjin+pashquar
agimeve,agim,N+FLX=NPL7+f+p+dhan+pashquar
agimeve,agim,N+FLX=NPL7+f+p+rrjedh+pashquar
agimesh,agim,N+FLX=NPL7+f+p+rrjedh+geg+pashquar
";

#[test]
fn agim_listing() {
    let r = res();
    let mut out = String::new();
    for entry in ["agim,N+FLX=NS2_t+m+s", "agim,N+FLX=NPL7+f+p"] {
        let e = LexEntry::parse(entry).unwrap();
        for (s, p) in e.expand(&r.paradigms).unwrap() {
            out.push_str(&flx_line(&s, &p));
            out.push('\n');
        }
    }
    assert_eq!(out, AGIM);
}

/// (single-width commands, double-width commands, word, expected)
const DIGRAPH_RULES: [(&str, &str, &str, &str); 8] = [
    ("a<L><B>", "a<L2><B>", "motër", "motra"),
    ("a<L><B>", "a<L2><B>", "vjehërr", "vjehrra"),
    ("i<L><B>", "i<L2><B>", "gjarpër", "gjarpri"),
    ("i<L><B>", "i<L2><B>", "vjehërr", "vjehrri"),
    ("<B>j", "<B2>j", "bir", "bij"),
    ("<B>j", "<B2>j", "djall", "djaj"),
    ("a<L><B>o", "a<L2><B>o", "heq", "hoqa"),
    ("a<L><B>o", "a<L2><B>o", "hedh", "hodha"),
];

#[test]
fn digraph_rules_in_char_mode() {
    for (one, two, word, want) in DIGRAPH_RULES {
        let ends_in_digraph = ["rr", "ll", "dh"].iter().any(|d| word.ends_with(d));
        let cmds = parse_commands(if ends_in_digraph { two } else { one }, 1).unwrap();
        assert_eq!(apply(&cmds, word, Mode::Char).unwrap(), want, "{word}");
    }
}

#[test]
fn digraph_rules_collapsed() {
    for (one, two, word, want) in DIGRAPH_RULES {
        let single = Paradigm::parse(&format!("PARADIGM R_1 X char\n{one}\t+x\n")).unwrap();
        let double = Paradigm::parse(&format!("PARADIGM R_2 X char\n{two}\t+x\n")).unwrap();
        let g = collapse_char_pairs(&single, &double).unwrap();
        assert_eq!(g.mode, Mode::Grapheme);
        let forms = g.inflect(word, &FeatureSet::new()).unwrap();
        assert_eq!(forms[0].surface, want, "{word}");
    }
}

#[test]
fn shipped_pairs_give_the_digraph_forms() {
    let r = res();
    let form = |paradigm: &str, word: &str, features: &str| -> String {
        let p = r.paradigms.get(paradigm).unwrap();
        let fs = FeatureSet::parse(features);
        p.inflect(word, &FeatureSet::new())
            .unwrap()
            .into_iter()
            .find(|f| f.features.is_superset(&fs))
            .unwrap()
            .surface
    };
    assert_eq!(form("NF1_1", "motër", "+s+emer+shquar"), "motra");
    assert_eq!(form("NF1_2", "vjehërr", "+s+emer+shquar"), "vjehrra");
    assert_eq!(form("NM2_1", "gjarpër", "+emer+shquar"), "gjarpri");
    assert_eq!(form("NM2_2", "vjehërr", "+emer+shquar"), "vjehrri");
    assert_eq!(form("NPL3_1", "bir", "+emer+pashquar"), "bij");
    assert_eq!(form("NPL3_2", "djall", "+emer+pashquar"), "djaj");
    assert_eq!(form("V4_1", "heq", "+PS+Ind+1+s"), "hoqa");
    assert_eq!(form("V4_2", "hedh", "+PS+Ind+1+s"), "hodha");
}

const PRINTED: [&str; 12] = [
    "aeroplan,-i m. pl. (-ë, -ët) plane m.",
    "laj (lava, larë) to wash",
    "lahem (u lava, larë) to wash oneself",
    "mirë (i,e) good",
    "absurd(e) absurd",
    "afër adv. and prep. + abl. near",
    "pjesërisht adv. partly",
    "adio! excl. adieu!",
    "an/ë, -a f. pl. (-ë, -ët) side",
    "agim,-i (-e, -et) dawn",
    "aftë (i,e) able",
    "mot/ër, -ra f. pl. (-ra, -rat) sister",
];

#[test]
fn printed_lines_import_cleanly() {
    let r = res();
    for line in PRINTED {
        let pe = parse_printed(line);
        assert_eq!(pe.status, Status::Ok, "{line}");
        let entries = assign_paradigm(&pe, &r.paradigms).unwrap_or_else(|e| panic!("{line}: {e}"));
        assert!(!entries.is_empty());
        for e in &entries {
            e.expand(&r.paradigms).unwrap();
        }
    }
}

fn entry_lines(line: &str) -> Vec<String> {
    let r = res();
    let pe = parse_printed(line);
    assign_paradigm(&pe, &r.paradigms)
        .unwrap()
        .iter()
        .map(ToString::to_string)
        .collect()
}

#[test]
fn paradigm_choice() {
    assert_eq!(
        entry_lines("agim,-i (-e, -et) dawn"),
        ["agim,N+FLX=NS2_t+m+s", "agim,N+FLX=NPL7+f+p"]
    );
    assert_eq!(
        entry_lines("mot/ër, -ra f. pl. (-ra, -rat) sister"),
        ["motër,N+FLX=NF1_1+f"]
    );
    assert_eq!(entry_lines("laj (lava, larë) to wash"), ["laj,V+FLX=V_laj"]);
    assert_eq!(
        entry_lines("lahem (u lava, larë) to wash oneself"),
        ["lahem,V+FLX=VNA_lahem+joveprore"]
    );
    assert_eq!(
        entry_lines("afër adv. and prep. + abl. near"),
        ["afër,ADV", "afër,PREP+rrjedh"]
    );
}

#[test]
fn malformed_printed_line() {
    assert!(matches!(parse_printed("(-e, -et)").status, Status::Problem(_)));
    assert_eq!(parse_printed("").status, Status::Problem("empty".into()));
}

#[test]
fn cardinals_and_ordinals() {
    let r = res();
    let n = &r.grammar.numerals;
    for (word, v) in [
        ("pesë", 5),
        ("dhjetë", 10),
        ("pesëdhjetë", 50),
        ("dyzet", 40),
        ("pesëqind", 500),
        ("dymbëdhjetë", 12),
        ("dyqindedy", 202),
    ] {
        assert_eq!(n.parse_cardinal_word(word), Some(v), "{word}");
    }
    for (phrase, v) in [
        ("dyzet e një", 41),
        ("pesëdhjetë e pesë", 55),
        ("pesëqind e pesëdhjetë e pesë", 555),
    ] {
        assert_eq!(n.parse_cardinal_phrase(phrase), Some(v), "{phrase}");
    }
    for (word, v) in [
        ("pestë", 5),
        ("dyzetenjëhtë", 41),
        ("pesëdhjetë", 50),
        ("pesëqindpesëdhjetëpestë", 555),
    ] {
        assert_eq!(n.ordinal_value(word), Some(v), "{word}");
    }
}

fn analysis(a: &Analysis) -> String {
    format!("{},{}{}", a.lemma, a.category, a.features)
}

#[test]
fn numeric_compounds() {
    let r = res();
    let got = |w: &str| -> Vec<String> {
        r.grammar
            .recognize_numeric_compound(w, &r.lexicon)
            .iter()
            .map(analysis)
            .collect()
    };
    assert_eq!(got("dyfish"), ["2fish,N", "2fish,ADV"]);
    assert_eq!(got("katërfish"), ["4fish,N", "4fish,ADV"]);
    assert_eq!(got("dyfishoj"), ["2fishoj,V"]);
    assert_eq!(got("katërfishoj"), ["4fishoj,V"]);
    assert_eq!(got("dymbëdhjetëmujor"), ["12mujor,A+m"]);
    assert_eq!(got("Dymbëdhjetëmujor"), ["12mujor,A+m"]);
    assert_eq!(got("dyqindedyvjeçar"), ["202vjeçar,A+m"]);
    assert_eq!(got("pesëdhjetëpesëvjeçar"), ["55vjeçar,A+m"]);
    assert_eq!(got("pesëdhjetëkatësh"), ["50katësh,A"]);
    assert_eq!(got("tredhëmbësh"), ["3dhëmbësh,A"]);
    assert_eq!(got("katërmotorësh"), ["4motorësh,A"]);
    assert!(got("dyzet").is_empty());
    assert!(got("agim").is_empty());
}

#[test]
fn affixed_words() {
    let r = res();
    let got = |w: &str| -> Vec<String> {
        r.grammar
            .recognize_affixed(w, &r.lexicon)
            .iter()
            .map(analysis)
            .collect()
    };
    assert_eq!(got("bashkëbisedimin"), ["bashkëbisedim,N+m+s+kallez+shquar"]);
    assert_eq!(got("mbijetonte"), ["mbijetoj,V+Ind+3+s+I"]);
    assert_eq!(got("parashikoj"), ["parashikoj,V+PR+Ind+1+s"]);
    assert_eq!(got("nënkuptoj"), ["nënkuptoj,V+PR+Ind+1+s"]);
    assert!(got("paaftë").iter().all(|a| a.starts_with("paaftë,A")));
    assert!(!got("paaftë").is_empty());
    assert_eq!(got("anglofob"), ["anglofob,A"]);
    assert_eq!(got("bakterofobi"), ["bakterofobi,N"]);
    assert!(got("bashkë").is_empty());
}

#[test]
fn clitic_imperatives() {
    let r = res();
    let pairs = |w: &str| -> Vec<(String, String)> {
        r.grammar
            .split_clitic_imperative(w, &r.lexicon)
            .iter()
            .map(|(c, v)| (analysis(c), analysis(v)))
            .collect()
    };
    let pair = |c: &str, v: &str| vec![(c.to_string(), v.to_string())];
    assert_eq!(pairs("tregojeni"), pair("e,PRO", "tregoj,V+IP+2+p"));
    assert_eq!(pairs("merri"), pair("i,PRO", "marr,V+IP+2+s"));
    assert_eq!(pairs("hapini"), pair("i,PRO", "hap,V+IP+2+p"));
}

#[test]
fn analyzer_falls_back_in_order() {
    let r = res();
    let a = r.analyzer();
    let shown = |w: &str| -> Vec<String> { a.analyze_word(w).iter().map(ToString::to_string).collect() };
    assert_eq!(shown("merri"), ["i,PRO | marr,V+IP+2+s"]);
    assert_eq!(shown("XLI"), ["XLI,NUM+val=41"]);
    assert_eq!(shown("zzz"), ["zzz,UNKNOWN"]);
    let readings = a.analyze_word("agimin");
    assert!(matches!(&readings[0], Reading::Word(w) if w.lemma == "agim"));
}

fn spans(text: &str) -> Vec<(Rule, String, Vec<String>)> {
    let r = res();
    let (tokens, spans) = r.annotate(text);
    spans
        .iter()
        .map(|s| {
            let words: Vec<&str> = tokens[s.start..s.end].iter().map(|t| t.surface.as_str()).collect();
            (s.rule, words.join(" "), s.analyses.iter().map(analysis).collect())
        })
        .collect()
}

fn one(rule: Rule, text: &str, analyses: &[&str]) -> Vec<(Rule, String, Vec<String>)> {
    vec![(
        rule,
        text.to_string(),
        analyses.iter().map(ToString::to_string).collect(),
    )]
}

#[test]
fn multi_token_constructions() {
    assert_eq!(
        spans("dyzet e një"),
        one(Rule::Cardinal, "dyzet e një", &["dyzet e një,NUM+val=41"])
    );
    assert_eq!(
        spans("pesëqind e pesëdhjetë e pesë"),
        one(
            Rule::Cardinal,
            "pesëqind e pesëdhjetë e pesë",
            &["pesëqind e pesëdhjetë e pesë,NUM+val=555"]
        )
    );
    assert_eq!(spans("i pestë"), one(Rule::Ordinal, "i pestë", &["pestë,A+val=5+m"]));
    assert_eq!(
        spans("e dyzetenjëhtë"),
        one(Rule::Ordinal, "e dyzetenjëhtë", &["dyzetenjëhtë,A+val=41+f"])
    );
    assert_eq!(
        spans("u lava"),
        one(Rule::Tense, "u lava", &["lahem,V+joveprore+PS+Ind+1+s"])
    );
    assert_eq!(spans("do të laj"), one(Rule::Tense, "do të laj", &["laj,V+F+Ind+1+s"]));
    assert_eq!(spans("të laj"), one(Rule::Tense, "të laj", &["laj,V+Subj+PR+1+s"]));
    assert_eq!(
        spans("të agimit"),
        one(Rule::Join, "të agimit", &["agim,N+m+s+gjin+shquar"])
    );
    assert_eq!(
        spans("tang-tang"),
        one(
            Rule::Xx,
            "tang-tang",
            &["tang-tang,ONOM+hypo_n", "tang-tang,ADV+hypo_n", "tang-tang,A+hypo_n"]
        )
    );
    assert!(spans("tik-tak").is_empty());
}

#[test]
fn spans_stay_inside_sentences() {
    assert!(spans("dyzet. e një").iter().all(|(_, t, _)| !t.contains('.')));
    let got = spans("Ai erdhi i. Pestë");
    assert!(got.iter().all(|(r, _, _)| *r != Rule::Ordinal));
    let got = spans("do. të laj");
    assert_eq!(got, one(Rule::Tense, "të laj", &["laj,V+Subj+PR+1+s"]));
}

#[test]
fn link_e_is_not_an_ordinal_particle() {
    let got = spans("dyzet e pestë");
    assert!(got.iter().all(|(r, _, _)| *r != Rule::Ordinal), "{got:?}");
}
