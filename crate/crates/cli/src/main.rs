use std::fs;
use std::io::{self, Read, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{anyhow, Context};
use clap::{Parser, Subcommand, ValueEnum};

use shqip_core::analysis::{tokenize, Reading, Token};
use shqip_core::lexicon::{self, assign_paradigm, flx_line, parse_printed, FormCollector, LexEntry, Status};
use shqip_core::morphogrammar::parse_roman;
use shqip_core::resources::{load_lexicon, DataPaths, ResourceError, Resources};
use shqip_core::syntax::Span;

mod stats;

#[derive(Parser)]
#[command(name = "shqip", version, about = "Albanian morphological analysis toolkit")]
struct Cli {
    /// Lexicon to use: a `.dic` entry file, a `.flx` listing or a compiled lexicon.
    #[arg(long, global = true)]
    lexicon: Option<PathBuf>,
    /// Directory of `.par` paradigm files.
    #[arg(long, global = true)]
    paradigms: Option<PathBuf>,
    /// Directory of morphogrammar tables and `features.def`.
    #[arg(long, global = true)]
    tables: Option<PathBuf>,
    /// Data directory holding `paradigms/`, `tables/` and `lexicon/seed.dic`.
    #[arg(long, global = true, env = "SHQIP_DATA")]
    data: Option<PathBuf>,
    #[arg(long, global = true, value_enum, default_value_t = Format::Plain)]
    format: Format,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Plain,
    Tsv,
}

#[derive(Subcommand)]
enum Command {
    /// Turn printed dictionary lines into entry lines.
    Import {
        input: PathBuf,
        /// Entry file to write; standard output when absent.
        #[arg(long)]
        out: Option<PathBuf>,
        /// Problem list to write; standard error when absent.
        #[arg(long)]
        problems: Option<PathBuf>,
    },
    /// Compile `.dic` and `.flx` files into a lexicon.
    Compile {
        #[arg(required = true)]
        inputs: Vec<PathBuf>,
        #[arg(long)]
        out: PathBuf,
        /// Also write the full listing of forms.
        #[arg(long)]
        listing: Option<PathBuf>,
    },
    /// List the forms of a lemma, or of an entry given as `lemma,CAT+FLX=Name+features`.
    Inflect { word: String },
    /// Annotate text given as arguments, read from a file, or from standard input.
    Analyze {
        text: Vec<String>,
        #[arg(long, conflicts_with = "text")]
        file: Option<PathBuf>,
    },
    /// Sort words, one per line, in alphabet order.
    Sort { file: Option<PathBuf> },
    /// Convert between numerals and values.
    Number {
        #[arg(required = true)]
        words: Vec<String>,
    },
    /// Token frequencies of a text.
    Stats { file: Option<PathBuf> },
}

/// A failure and the exit code it maps to.
struct Failure {
    code: u8,
    error: anyhow::Error,
}

fn domain(error: anyhow::Error) -> Failure {
    Failure { code: 1, error }
}

fn io(error: anyhow::Error) -> Failure {
    Failure { code: 2, error }
}

impl From<ResourceError> for Failure {
    fn from(e: ResourceError) -> Self {
        let code = if e.is_io() { 2 } else { 1 };
        Failure { code, error: e.into() }
    }
}

type Outcome = Result<(), Failure>;

fn read_input(path: Option<&Path>) -> Result<String, Failure> {
    match path {
        Some(p) => fs::read_to_string(p)
            .with_context(|| format!("cannot read {}", p.display()))
            .map_err(io),
        None => {
            let mut s = String::new();
            io::stdin()
                .read_to_string(&mut s)
                .context("cannot read standard input")
                .map_err(io)?;
            Ok(s)
        }
    }
}

fn write_output(path: Option<&Path>, text: &str) -> Outcome {
    let result = match path {
        Some(p) => fs::write(p, text).with_context(|| format!("cannot write {}", p.display())),
        None => io::stdout().write_all(text.as_bytes()).context("cannot write output"),
    };
    result.map_err(io)
}

impl Cli {
    fn data_paths(&self) -> DataPaths {
        let mut paths = self.data.as_deref().map(DataPaths::under).unwrap_or_default();
        if let Some(p) = &self.paradigms {
            paths.paradigms = Some(p.clone());
        }
        if let Some(p) = &self.tables {
            paths.tables = Some(p.clone());
        }
        if let Some(p) = &self.lexicon {
            paths.lexicon = Some(p.clone());
        }
        paths
    }

    fn resources(&self) -> Result<Resources, Failure> {
        Ok(Resources::load(&self.data_paths())?)
    }
}

fn main() -> ExitCode {
    env_logger::Builder::from_env(env_logger::Env::default().default_filter_or("warn")).init();
    let cli = Cli::parse();
    match run(&cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            eprintln!("shqip: {:#}", f.error);
            ExitCode::from(f.code)
        }
    }
}

fn run(cli: &Cli) -> Outcome {
    match &cli.command {
        Command::Import { input, out, problems } => import(cli, input, out.as_deref(), problems.as_deref()),
        Command::Compile { inputs, out, listing } => compile(cli, inputs, out, listing.as_deref()),
        Command::Inflect { word } => inflect(cli, word),
        Command::Analyze { text, file } => {
            let text = if text.is_empty() {
                read_input(file.as_deref())?
            } else {
                text.join(" ")
            };
            analyze(cli, &text)
        }
        Command::Sort { file } => {
            let text = read_input(file.as_deref())?;
            let mut words: Vec<&str> = text.lines().map(str::trim).filter(|w| !w.is_empty()).collect();
            shqip_core::alphabet::sort_words(&mut words);
            let mut out = String::new();
            for w in words {
                out.push_str(w);
                out.push('\n');
            }
            write_output(None, &out)
        }
        Command::Number { words } => number(cli, &words.join(" ")),
        Command::Stats { file } => {
            let text = read_input(file.as_deref())?;
            write_output(None, &stats::render(&stats::count(&text), cli.format == Format::Tsv))
        }
    }
}

fn import(cli: &Cli, input: &Path, out: Option<&Path>, problems: Option<&Path>) -> Outcome {
    let text = read_input(Some(input))?;
    let res = cli.resources()?;
    let mut dic = String::new();
    let mut trouble = String::new();
    let (mut imported, mut lines, mut problem_count) = (0, 0, 0);
    for (i, raw) in text.lines().enumerate() {
        if raw.trim().is_empty() {
            continue;
        }
        let pe = parse_printed(raw);
        let result = match &pe.status {
            Status::Ok => assign_paradigm(&pe, &res.paradigms),
            Status::Problem(reason) => Err(reason.clone()),
        };
        match result {
            Ok(entries) => {
                imported += 1;
                for e in entries {
                    dic.push_str(&e.to_string());
                    dic.push('\n');
                    lines += 1;
                }
            }
            Err(reason) => {
                problem_count += 1;
                trouble.push_str(&format!("{}\t{}\t{}\n", i + 1, reason, raw.trim()));
            }
        }
    }
    write_output(out, &dic)?;
    match problems {
        Some(p) => write_output(Some(p), &trouble)?,
        None => eprint!("{trouble}"),
    }
    eprintln!("imported {imported} entries as {lines} lines, {problem_count} problems");
    Ok(())
}

fn compile(cli: &Cli, inputs: &[PathBuf], out: &Path, listing: Option<&Path>) -> Outcome {
    let res = cli.resources()?;
    let mut collector = FormCollector::new();
    for path in inputs {
        if path.extension().is_some_and(|e| e == "flx") {
            let text = read_input(Some(path))?;
            let forms = lexicon::parse_flx(&text)
                .with_context(|| path.display().to_string())
                .map_err(domain)?;
            for (surface, payload) in forms {
                collector.add(&surface, payload);
            }
        } else {
            let (entries, _) = load_lexicon(path, &res.paradigms)?;
            for e in &entries {
                let forms = e
                    .expand(&res.paradigms)
                    .with_context(|| path.display().to_string())
                    .map_err(domain)?;
                for (surface, payload) in forms {
                    collector.add(&surface, payload);
                }
            }
        }
    }
    let lex = collector.finish();
    fs::write(out, lex.to_bytes())
        .with_context(|| format!("cannot write {}", out.display()))
        .map_err(io)?;
    if let Some(p) = listing {
        write_output(Some(p), &lex.dump_flx())?;
    }
    let s = lex.stats();
    let text = if cli.format == Format::Tsv {
        format!(
            "states\ttransitions\tforms\tsurfaces\n{}\t{}\t{}\t{}\n",
            s.states, s.transitions, s.forms, s.surfaces
        )
    } else {
        format!(
            "states\t{}\ntransitions\t{}\nforms\t{}\nsurfaces\t{}\n",
            s.states, s.transitions, s.forms, s.surfaces
        )
    };
    write_output(None, &text)
}

fn inflect(cli: &Cli, word: &str) -> Outcome {
    let res = cli.resources()?;
    let mut out = String::new();
    if word.contains(',') {
        let entry = LexEntry::parse(word).ok_or_else(|| domain(anyhow!("malformed entry `{word}`")))?;
        for (surface, payload) in entry.expand(&res.paradigms).map_err(|e| domain(e.into()))? {
            out.push_str(&flx_line(&surface, &payload));
            out.push('\n');
        }
    } else if !res.entries.is_empty() {
        for entry in res.entries.iter().filter(|e| e.lemma == word) {
            for (surface, payload) in entry.expand(&res.paradigms).map_err(|e| domain(e.into()))? {
                out.push_str(&flx_line(&surface, &payload));
                out.push('\n');
            }
        }
    } else {
        for (surface, payload) in res.lexicon.forms() {
            if payload.lemma == word {
                out.push_str(&flx_line(&surface, payload));
                out.push('\n');
            }
        }
    }
    if out.is_empty() {
        return Err(domain(anyhow!("no entry for `{word}`")));
    }
    write_output(None, &out)
}

fn join_readings(readings: &[Reading]) -> String {
    readings.iter().map(Reading::to_string).collect::<Vec<_>>().join(" || ")
}

fn span_surface(tokens: &[Token], span: &Span) -> String {
    tokens[span.start..span.end]
        .iter()
        .map(|t| t.surface.as_str())
        .collect::<Vec<_>>()
        .join(" ")
}

fn analyze(cli: &Cli, text: &str) -> Outcome {
    let res = cli.resources()?;
    let (tokens, spans) = res.annotate(text);
    let tsv = cli.format == Format::Tsv;
    let mut out = String::new();
    if tsv {
        out.push_str("kind\tindex\toffset\tsurface\treading\tlemma\tcategory\tfeatures\tsource\n");
    }
    let mut next_span = 0;
    let mut i = 0;
    while i < tokens.len() {
        let sentence = tokens[i].sentence;
        let mut j = i;
        while j < tokens.len() && tokens[j].sentence == sentence {
            let t = &tokens[j];
            if tsv {
                for (r, reading) in t.readings.iter().enumerate() {
                    for a in reading.analyses() {
                        out.push_str(&format!(
                            "token\t{j}\t{}\t{}\t{r}\t{}\t{}\t{}\t{}\n",
                            t.offset,
                            t.surface,
                            a.lemma,
                            a.category,
                            a.features,
                            a.provenance.as_str()
                        ));
                    }
                }
            } else {
                out.push_str(&format!(
                    "{}\t{}\t{}\n",
                    t.surface,
                    t.offset,
                    join_readings(&t.readings)
                ));
            }
            j += 1;
        }
        while next_span < spans.len() && spans[next_span].start < j {
            let s = &spans[next_span];
            let surface = span_surface(&tokens, s);
            let offset = tokens[s.start].offset;
            if tsv {
                for (r, a) in s.analyses.iter().enumerate() {
                    out.push_str(&format!(
                        "span\t{}-{}\t{offset}\t{surface}\t{r}\t{}\t{}\t{}\t{}\n",
                        s.start, s.end, a.lemma, a.category, a.features, s.rule
                    ));
                }
            } else {
                let readings: Vec<String> = s.analyses.iter().map(ToString::to_string).collect();
                out.push_str(&format!(
                    "#span\t{}\t{}-{}\t{surface}\t{offset}\t{}\n",
                    s.rule,
                    s.start,
                    s.end,
                    readings.join(" || ")
                ));
            }
            next_span += 1;
        }
        i = j;
    }
    write_output(None, &out)
}

fn number(cli: &Cli, input: &str) -> Outcome {
    let res = cli.resources()?;
    let numerals = &res.grammar.numerals;
    let input = input.trim();
    if !input.is_empty() && input.chars().all(|c| c.is_ascii_digit()) {
        let n: u64 = input
            .parse()
            .map_err(|_| domain(anyhow!("`{input}` is out of range")))?;
        let word = numerals
            .render_cardinal_word(n)
            .ok_or_else(|| domain(anyhow!("no numeral for {n}")))?;
        return write_output(None, &format!("{word}\n"));
    }
    let words: Vec<String> = tokenize(input).into_iter().map(|t| t.surface).collect();
    let text = words.join(" ");
    let value = numerals
        .parse_cardinal_phrase(&text)
        .or_else(|| match words.as_slice() {
            [one] => numerals.ordinal_value(one).or_else(|| parse_roman(one).map(u64::from)),
            [particle, body] if ["i", "e", "të", "së"].contains(&particle.to_lowercase().as_str()) => {
                numerals.ordinal_value(body)
            }
            _ => None,
        })
        .ok_or_else(|| domain(anyhow!("`{input}` is not a numeral")))?;
    write_output(None, &format!("{value}\n"))
}
