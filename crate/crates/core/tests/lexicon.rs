use std::collections::BTreeSet;

use shqip_core::analysis::Provenance;
use shqip_core::lexicon::{self, flx_line, parse_flx, CompiledLexicon, Payload};
use shqip_core::resources::{embedded, Resources};

fn res() -> Resources {
    Resources::embedded().unwrap()
}

fn key(p: &Payload) -> String {
    flx_line("", p)
}

fn set(ps: Vec<&Payload>) -> BTreeSet<String> {
    ps.into_iter().map(key).collect()
}

#[test]
fn seed_lexicon_is_large_enough() {
    let r = res();
    let inflected: BTreeSet<&str> = r
        .entries
        .iter()
        .filter(|e| e.paradigm.is_some())
        .map(|e| e.lemma.as_str())
        .collect();
    assert!(inflected.len() >= 25, "{} inflected lemmas", inflected.len());
}

#[test]
fn minimized_lookup_equals_trie_lookup() {
    let r = res();
    let trie = lexicon::collect(&r.entries, &r.paradigms).unwrap();
    let surfaces: Vec<String> = trie.trie().entries().into_iter().map(|(s, _)| s).collect();
    assert!(!surfaces.is_empty() && surfaces.len() < 10_000);
    for s in &surfaces {
        assert_eq!(set(trie.lookup(s)), set(r.lexicon.lookup_exact(s)), "{s}");
        // near misses must agree too
        let longer = format!("{s}x");
        assert_eq!(set(trie.lookup(&longer)), set(r.lexicon.lookup_exact(&longer)));
        let mut shorter = s.clone();
        shorter.pop();
        assert_eq!(set(trie.lookup(&shorter)), set(r.lexicon.lookup_exact(&shorter)));
    }
    let listed: Vec<String> = r.lexicon.automaton().entries().into_iter().map(|(s, _)| s).collect();
    assert_eq!(listed, surfaces);
}

#[test]
fn minimization_shrinks() {
    let s = res().lexicon.stats();
    assert!(s.states < s.trie_states, "{s:?}");
    assert!(s.surfaces <= s.forms);
}

#[test]
fn container_round_trip() {
    let r = res();
    let bytes = r.lexicon.to_bytes();
    let back = CompiledLexicon::from_bytes(&bytes).unwrap();
    assert_eq!(back.dump_flx(), r.lexicon.dump_flx());
    assert_eq!(back.stats().states, r.lexicon.stats().states);
    assert_eq!(back.max_words(), r.lexicon.max_words());
    assert_eq!(back.to_bytes(), bytes);
}

#[test]
fn damaged_container_is_rejected() {
    let bytes = res().lexicon.to_bytes();
    assert!(CompiledLexicon::from_bytes(&bytes[..bytes.len() - 1]).is_err());
    assert!(CompiledLexicon::from_bytes(&bytes[..3]).is_err());
    let mut bad = bytes.clone();
    bad[0] = b'X';
    assert!(CompiledLexicon::from_bytes(&bad).is_err());
    let mut long = bytes;
    long.push(0);
    assert!(CompiledLexicon::from_bytes(&long).is_err());
}

#[test]
fn listing_round_trip() {
    let r = res();
    let text = r.lexicon.dump_flx();
    let again = CompiledLexicon::from_forms(parse_flx(&text).unwrap());
    assert_eq!(again.dump_flx(), text);
}

#[test]
fn every_listed_form_fits_the_schema() {
    let r = res();
    for (surface, p) in r.lexicon.forms() {
        let v = r.schema.validate(&p.features, &p.category);
        assert!(v.is_empty(), "{surface}: {v:?}");
    }
}

#[test]
fn every_analysis_fits_the_schema() {
    let r = res();
    let text = "Do të laj. U lava dyzet e një herë, tregojeni! I pestë tang-tang \
                dyfish katërfishoj bashkëbisedimin mbijetonte parashikoj merri hapini \
                të agimit e agimeve së afërmi OKB-ja Meksika projekt-ligj XLI anglofob";
    let (tokens, spans) = r.annotate(text);
    let mut checked = 0;
    for t in &tokens {
        for reading in &t.readings {
            for a in reading.analyses() {
                if a.provenance == Provenance::Unknown {
                    continue;
                }
                let v = r.schema.validate(&a.features, &a.category);
                assert!(v.is_empty(), "{}: {a} {v:?}", t.surface);
                checked += 1;
            }
        }
    }
    for s in &spans {
        for a in &s.analyses {
            assert!(r.schema.validate(&a.features, &a.category).is_empty(), "{a}");
        }
    }
    assert!(checked > 30);
    assert!(spans.len() >= 6);
}

#[test]
fn case_retry() {
    let r = res();
    assert!(!r.lexicon.lookup("Agimi").is_empty());
    assert!(!r.lexicon.lookup("AGIMI").is_empty());
    assert!(!r.lexicon.lookup("meksika").is_empty());
    assert!(r.lexicon.lookup_exact("meksika").is_empty());
    assert!(!r.lexicon.lookup("OKB-ja").is_empty());
}

#[test]
fn seed_text_parses() {
    let entries = lexicon::parse_dic(embedded::SEED_DIC).unwrap();
    for e in &entries {
        assert_eq!(lexicon::LexEntry::parse(&e.to_string()).as_ref(), Some(e));
    }
}
