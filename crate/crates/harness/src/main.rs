use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{bail, Context};
use clap::{Args, Parser, Subcommand, ValueEnum};
use lmsg_core::generators::fixture;
use lmsg_core::io;
use lmsg_harness::corpus::{all_fixtures, CorpusSpec, Family, Filter, Source};
use lmsg_harness::report::{analyze, Mode};
use lmsg_harness::verify::{self, Theorem, VerifyConfig};

#[derive(Parser)]
#[command(name = "lmsg", version, about = "Local maximum stable sets and greedoids of small graphs")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Classify one graph from an edge-list file or a built-in fixture.
    Analyze {
        /// Edge-list file; `-` reads standard input.
        input: Option<PathBuf>,
        #[arg(long, conflicts_with = "input")]
        fixture: Option<String>,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
        #[arg(long, value_enum, default_value_t = Mode::Auto)]
        mode: Mode,
    },
    /// Check theorems over generated corpora; exits non-zero on any violation.
    Verify {
        /// Theorems to check; all of them when omitted.
        #[arg(long, value_enum)]
        theorem: Vec<Theorem>,
        #[arg(long, default_value_t = 8)]
        max_n: usize,
        #[arg(long, default_value_t = 42)]
        seed: u64,
        /// Random very well-covered graphs per size.
        #[arg(long, default_value_t = 500)]
        random_count: usize,
        /// Sizes of the random very well-covered graphs.
        #[arg(long, value_delimiter = ',', default_value = "10,12")]
        random_sizes: Vec<usize>,
        /// Use these fixtures as the corpus (`all` for every fixture).
        #[arg(long)]
        fixture: Vec<String>,
        /// Use the graphs of a multi-graph edge-list file as the corpus.
        #[arg(long, conflicts_with = "fixture")]
        input: Option<PathBuf>,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
        /// Run on one thread.
        #[arg(long)]
        sequential: bool,
    },
    /// Write a corpus as edge lists.
    Generate {
        #[command(flatten)]
        corpus: CorpusArgs,
        /// Multi-graph output file; standard output when omitted.
        #[arg(long, conflicts_with = "dir")]
        output: Option<PathBuf>,
        /// Write one file per graph into this directory.
        #[arg(long)]
        dir: Option<PathBuf>,
    },
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Text,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum SourceKind {
    Connected,
    All,
    Trees,
    Random,
    RandomVwc,
    Coronas,
    CoronaK1,
    Fixtures,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum FamilyArg {
    Path,
    Cycle,
    Complete,
}

#[derive(Args)]
struct CorpusArgs {
    #[arg(long, value_enum, default_value_t = SourceKind::Connected)]
    source: SourceKind,
    #[arg(long, default_value_t = 1)]
    min_n: usize,
    #[arg(long, default_value_t = 5)]
    max_n: usize,
    /// Vertex count for random sources.
    #[arg(long, default_value_t = 8)]
    n: usize,
    #[arg(long, default_value_t = 10)]
    count: usize,
    /// Edge probability for `random`.
    #[arg(long, default_value_t = 0.3)]
    p: f64,
    #[arg(long, default_value_t = 42)]
    seed: u64,
    #[arg(long, value_enum, default_value_t = FamilyArg::Path)]
    family: FamilyArg,
    #[arg(long)]
    fixture: Vec<String>,
    /// Keep only very well-covered graphs.
    #[arg(long)]
    vwc: bool,
    /// Keep only bipartite graphs.
    #[arg(long)]
    bipartite: bool,
}

impl CorpusArgs {
    fn spec(&self) -> CorpusSpec {
        let source = match self.source {
            SourceKind::Connected => Source::Connected {
                min_n: self.min_n,
                max_n: self.max_n,
            },
            SourceKind::All => Source::AllGraphs {
                min_n: self.min_n,
                max_n: self.max_n,
            },
            SourceKind::Trees => Source::Trees {
                min_n: self.min_n,
                max_n: self.max_n,
            },
            SourceKind::Random => Source::Random {
                count: self.count,
                n: self.n,
                p: self.p,
                seed: self.seed,
            },
            SourceKind::RandomVwc => Source::RandomVwc {
                count: self.count,
                n: self.n,
                seed: self.seed,
            },
            SourceKind::Coronas => Source::Coronas {
                max_base: 3,
                max_part: 3,
            },
            SourceKind::CoronaK1 => Source::CoronaK1 {
                family: match self.family {
                    FamilyArg::Path => Family::Path,
                    FamilyArg::Cycle => Family::Cycle,
                    FamilyArg::Complete => Family::Complete,
                },
                max_k: self.max_n,
            },
            SourceKind::Fixtures => Source::Fixtures(fixture_list(&self.fixture)),
        };
        let mut spec = CorpusSpec::new(source);
        if self.vwc {
            spec = spec.filter(Filter::VeryWellCovered);
        }
        if self.bipartite {
            spec = spec.filter(Filter::Bipartite);
        }
        spec
    }
}

fn fixture_list(names: &[String]) -> Vec<String> {
    if names.is_empty() || names.iter().any(|n| n == "all") {
        all_fixtures()
    } else {
        names.to_vec()
    }
}

fn read_input(path: &PathBuf) -> anyhow::Result<String> {
    if path.as_os_str() == "-" {
        return std::io::read_to_string(std::io::stdin()).context("reading standard input");
    }
    fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))
}

fn run(cli: Cli) -> anyhow::Result<ExitCode> {
    match cli.command {
        Command::Analyze {
            input,
            fixture: name,
            format,
            mode,
        } => {
            let (g, name) = match (input, name) {
                (_, Some(name)) => (fixture(&name)?, Some(name)),
                (Some(path), None) => {
                    let text = read_input(&path)?;
                    let g = io::parse_edge_list(&text)
                        .with_context(|| format!("parsing {}", path.display()))?;
                    (g, None)
                }
                (None, None) => bail!("give an edge-list file or --fixture"),
            };
            let report = analyze(&g, name.as_deref(), mode)?;
            match format {
                Format::Json => println!("{}", report.to_json()),
                Format::Text => print!("{}", report.to_text()),
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Verify {
            theorem,
            max_n,
            seed,
            random_count,
            random_sizes,
            fixture,
            input,
            format,
            sequential,
        } => {
            let corpus = if !fixture.is_empty() {
                Some(CorpusSpec::new(Source::Fixtures(fixture_list(&fixture))))
            } else {
                input.map(|p| CorpusSpec::new(Source::File(p)))
            };
            let cfg = VerifyConfig {
                max_n,
                seed,
                random_count,
                random_sizes,
                corpus,
                parallel: !sequential,
                ..VerifyConfig::default()
            };
            let theorems = if theorem.is_empty() {
                Theorem::ALL.to_vec()
            } else {
                theorem
            };
            let summary = verify::run(&theorems, &cfg)?;
            match format {
                Format::Json => println!("{}", summary.to_json()),
                Format::Text => print!("{}", summary.to_text()),
            }
            Ok(if summary.total_violations == 0 {
                ExitCode::SUCCESS
            } else {
                ExitCode::FAILURE
            })
        }
        Command::Generate {
            corpus,
            output,
            dir,
        } => {
            let items = corpus.spec().build()?;
            let graphs: Vec<_> = items.iter().map(|i| i.graph.clone()).collect();
            if let Some(dir) = dir {
                fs::create_dir_all(&dir).with_context(|| format!("creating {}", dir.display()))?;
                let width = graphs.len().max(1).to_string().len();
                for (i, g) in graphs.iter().enumerate() {
                    let path = dir.join(format!("graph-{i:0width$}.txt"));
                    fs::write(&path, io::serialize(g))
                        .with_context(|| format!("writing {}", path.display()))?;
                }
            } else {
                let text = io::serialize_many(&graphs);
                match output {
                    Some(path) => fs::write(&path, text)
                        .with_context(|| format!("writing {}", path.display()))?,
                    None => print!("{text}"),
                }
            }
            eprintln!("{} graphs written", graphs.len());
            Ok(ExitCode::SUCCESS)
        }
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
