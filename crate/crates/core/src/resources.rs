//! Loading the data everything runs on: feature schema, paradigms, lexicon
//! and morphogrammar tables. Built-in copies of the shipped data are used
//! for anything not given on disk.

use std::fs;
use std::path::{Path, PathBuf};

use thiserror::Error;

use crate::analysis::{Analyzer, Token};
use crate::features::{FeatureSchema, SchemaError};
use crate::lexicon::{self, CompiledLexicon, LexEntry, LexiconError};
use crate::morphogrammar::{load_clitics, AffixTable, Morphogrammar, NumeralTable, SuffixTable, TableError};
use crate::paradigm::{ParadigmError, ParadigmLibrary};
use crate::syntax::{Grammars, Span};

pub mod embedded {
    pub const FEATURES: &str = include_str!("../data/tables/features.def");
    pub const NUMERALS: &str = include_str!("../data/tables/numerals.tab");
    pub const NUMSUFFIX: &str = include_str!("../data/tables/numsuffix.tab");
    pub const AFFIXES: &str = include_str!("../data/tables/affixes.tab");
    pub const CLITICS: &str = include_str!("../data/tables/clitics.tab");
    pub const SEED_DIC: &str = include_str!("../data/lexicon/seed.dic");
    pub const PARADIGMS: [(&str, &str); 6] = [
        ("adjectives.par", include_str!("../data/paradigms/adjectives.par")),
        ("digraph_pairs.par", include_str!("../data/paradigms/digraph_pairs.par")),
        ("nouns.par", include_str!("../data/paradigms/nouns.par")),
        ("verbs.par", include_str!("../data/paradigms/verbs.par")),
        (
            "verbs_nonactive.par",
            include_str!("../data/paradigms/verbs_nonactive.par"),
        ),
        ("verbs_pairs.par", include_str!("../data/paradigms/verbs_pairs.par")),
    ];
}

#[derive(Debug, Error)]
pub enum ResourceError {
    #[error("{path}: {message}")]
    Io { path: String, message: String },
    #[error("{path}: {source}")]
    Schema { path: String, source: SchemaError },
    #[error(transparent)]
    Paradigm(#[from] ParadigmError),
    #[error("{path}: {source}")]
    Lexicon { path: String, source: Box<LexiconError> },
    #[error("{path}: {source}")]
    Table { path: String, source: TableError },
}

impl ResourceError {
    pub fn is_io(&self) -> bool {
        matches!(self, ResourceError::Io { .. }) || matches!(self, ResourceError::Paradigm(ParadigmError::Io { .. }))
    }
}

pub fn read_file(path: &Path) -> Result<String, ResourceError> {
    fs::read_to_string(path).map_err(|e| ResourceError::Io {
        path: path.display().to_string(),
        message: e.to_string(),
    })
}

/// Where to find data on disk; `None` means built-in.
#[derive(Debug, Clone, Default)]
pub struct DataPaths {
    pub paradigms: Option<PathBuf>,
    pub tables: Option<PathBuf>,
    /// A `.dic` entry file, a `.flx` listing or a compiled lexicon.
    pub lexicon: Option<PathBuf>,
}

impl DataPaths {
    /// Paths under a data directory laid out as `paradigms/`, `tables/` and
    /// `lexicon/seed.dic`; missing parts stay built-in.
    pub fn under(dir: &Path) -> DataPaths {
        let some = |p: PathBuf| p.exists().then_some(p);
        DataPaths {
            paradigms: some(dir.join("paradigms")),
            tables: some(dir.join("tables")),
            lexicon: some(dir.join("lexicon").join("seed.dic")),
        }
    }
}

pub fn embedded_paradigms() -> ParadigmLibrary {
    let mut lib = ParadigmLibrary::new();
    for (_, text) in embedded::PARADIGMS {
        lib.add_text(text).expect("built-in paradigms parse");
    }
    lib
}

pub struct Resources {
    pub schema: FeatureSchema,
    pub paradigms: ParadigmLibrary,
    /// Entries the lexicon was compiled from; empty when it was loaded
    /// ready-made.
    pub entries: Vec<LexEntry>,
    pub lexicon: CompiledLexicon,
    pub grammar: Morphogrammar,
}

fn table_text(dir: Option<&Path>, name: &str, fallback: &'static str) -> Result<(String, String), ResourceError> {
    match dir.map(|d| d.join(name)).filter(|p| p.exists()) {
        Some(p) => Ok((read_file(&p)?, p.display().to_string())),
        None => Ok((fallback.to_string(), format!("<built-in {name}>"))),
    }
}

fn table<T>(
    dir: Option<&Path>,
    name: &str,
    fallback: &'static str,
    load: impl Fn(&str) -> Result<T, TableError>,
) -> Result<T, ResourceError> {
    let (text, path) = table_text(dir, name, fallback)?;
    load(&text).map_err(|source| ResourceError::Table { path, source })
}

impl Resources {
    pub fn embedded() -> Result<Resources, ResourceError> {
        Resources::load(&DataPaths::default())
    }

    pub fn load(paths: &DataPaths) -> Result<Resources, ResourceError> {
        let tables = paths.tables.as_deref();
        let (text, path) = table_text(tables, "features.def", embedded::FEATURES)?;
        let schema = FeatureSchema::load(&text).map_err(|source| ResourceError::Schema { path, source })?;
        for w in schema.warnings() {
            log::debug!("features: {w}");
        }
        let paradigms = match &paths.paradigms {
            Some(dir) => ParadigmLibrary::load_dir(dir)?,
            None => embedded_paradigms(),
        };
        let grammar = Morphogrammar {
            numerals: table(tables, "numerals.tab", embedded::NUMERALS, NumeralTable::load)?,
            suffixes: table(tables, "numsuffix.tab", embedded::NUMSUFFIX, SuffixTable::load)?,
            affixes: table(tables, "affixes.tab", embedded::AFFIXES, AffixTable::load)?,
            clitics: table(tables, "clitics.tab", embedded::CLITICS, |t| Ok(load_clitics(t)))?,
        };
        let (entries, lexicon) = match &paths.lexicon {
            Some(p) => load_lexicon(p, &paradigms)?,
            None => {
                let entries = lexicon::parse_dic(embedded::SEED_DIC).expect("built-in lexicon parses");
                let lex = lexicon::compile(&entries, &paradigms).map_err(|e| ResourceError::Lexicon {
                    path: "<built-in seed.dic>".into(),
                    source: Box::new(e),
                })?;
                (entries, lex)
            }
        };
        Ok(Resources {
            schema,
            paradigms,
            entries,
            lexicon,
            grammar,
        })
    }

    pub fn analyzer(&self) -> Analyzer<'_> {
        Analyzer::new(&self.lexicon, &self.grammar)
    }

    pub fn grammars(&self) -> Grammars<'_> {
        Grammars::new(&self.lexicon, &self.grammar)
    }

    /// Tokens with their readings, and the spans found over them.
    pub fn annotate(&self, text: &str) -> (Vec<Token>, Vec<Span>) {
        let tokens = self.analyzer().analyze_text(text);
        let spans = self.grammars().cascade(&tokens, &[]);
        (tokens, spans)
    }
}

/// Reads a lexicon given as `.dic`, `.flx` or compiled container.
pub fn load_lexicon(path: &Path, lib: &ParadigmLibrary) -> Result<(Vec<LexEntry>, CompiledLexicon), ResourceError> {
    let wrap = |e| ResourceError::Lexicon {
        path: path.display().to_string(),
        source: Box::new(e),
    };
    let bytes = fs::read(path).map_err(|e| ResourceError::Io {
        path: path.display().to_string(),
        message: e.to_string(),
    })?;
    if bytes.starts_with(b"SQMF1") {
        return Ok((Vec::new(), CompiledLexicon::from_bytes(&bytes).map_err(wrap)?));
    }
    let text = String::from_utf8(bytes).map_err(|_| ResourceError::Io {
        path: path.display().to_string(),
        message: "not UTF-8".into(),
    })?;
    if path.extension().is_some_and(|e| e == "flx") {
        let forms = lexicon::parse_flx(&text).map_err(wrap)?;
        return Ok((Vec::new(), CompiledLexicon::from_forms(forms)));
    }
    let entries = lexicon::parse_dic(&text).map_err(wrap)?;
    let lex = lexicon::compile(&entries, lib).map_err(wrap)?;
    Ok((entries, lex))
}
