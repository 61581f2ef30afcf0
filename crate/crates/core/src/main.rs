use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use orthomodal::contexts::DEFAULT_BUDGET;
use orthomodal::io::{self, corpus, emit_oml, parse_greechie, GreechieDocument};
use orthomodal::lattice::DEFAULT_MAX_SIZE;
use orthomodal::report::{
    AxiomsReport, CenterReport, ConsequencesReport, ModalReport, Report, SquareEntry, SquareSummary, ValidateReport,
};
use orthomodal::square::{square_report, ContextPolicy};
use orthomodal::{Elem, ModalLattice, OrthoLattice};

/// Modal analysis of finite orthomodular lattices.
#[derive(Debug, Parser)]
#[command(name = "orthomodal", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Debug, clap::Args)]
struct Common {
    /// A `.oml` file, a `.gd` Greechie diagram or `corpus:<name>`.
    input: String,
    #[arg(long, value_enum, default_value = "text")]
    format: Format,
    /// Largest lattice accepted.
    #[arg(long, default_value_t = DEFAULT_MAX_SIZE)]
    max_size: usize,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Parse a lattice and check the orthomodular law.
    Validate(Common),
    /// Print the center.
    Center(Common),
    /// Tabulate ◇ and □.
    Modal {
        #[command(flatten)]
        common: Common,
        #[arg(long)]
        element: Option<String>,
    },
    /// Check the orthomodular law and the saturation axioms S1 to S7.
    Axioms(Common),
    /// Compare the three consequence sets of each element.
    Consequences {
        #[command(flatten)]
        common: Common,
        #[arg(long)]
        element: Option<String>,
        /// Cap on the number of Boolean subalgebras enumerated.
        #[arg(long, default_value_t = DEFAULT_BUDGET)]
        budget: usize,
    },
    /// Check the square of opposition for a non-central element.
    Square {
        #[command(flatten)]
        common: Common,
        #[arg(long)]
        element: String,
        /// Contexts to range over: all, blocks or minimal.
        #[arg(long, default_value = "all")]
        context: ContextPolicy,
        #[arg(long, default_value_t = DEFAULT_BUDGET)]
        budget: usize,
    },
    /// Generate the lattice of a Greechie diagram and print it as `.oml`.
    Greechie {
        /// A `.gd` Greechie diagram file.
        input: Option<String>,
        /// Inline diagram such as "a b c ; c d e".
        #[arg(long, conflicts_with = "input")]
        blocks: Option<String>,
        #[arg(long, default_value = "greechie")]
        name: String,
        #[arg(long, default_value_t = DEFAULT_MAX_SIZE)]
        max_size: usize,
    },
    /// Inspect the bundled corpus.
    Corpus {
        #[command(subcommand)]
        action: CorpusAction,
    },
}

#[derive(Debug, Subcommand)]
enum CorpusAction {
    List,
    Show { name: String },
}

/// Failure modes that map to exit status 2.
struct UsageError(String);

impl<E: std::fmt::Display> From<E> for UsageError {
    fn from(e: E) -> Self {
        UsageError(e.to_string())
    }
}

fn emit<R: Report>(report: &R, format: Format) -> Result<bool, UsageError> {
    match format {
        Format::Text => print!("{report}"),
        Format::Json => println!("{}", serde_json::to_string_pretty(report)?),
    }
    Ok(report.passed())
}

fn load(common: &Common) -> Result<(String, OrthoLattice), UsageError> {
    let (doc, ol) = io::load(&common.input, common.max_size)?;
    Ok((doc.name, ol))
}

fn load_modal(common: &Common) -> Result<(String, ModalLattice), UsageError> {
    let (name, ol) = load(common)?;
    Ok((name, ModalLattice::new(ol)?))
}

fn element(ol: &OrthoLattice, name: Option<&str>) -> Result<Option<Elem>, UsageError> {
    name.map(|n| ol.elem(n).map_err(UsageError::from)).transpose()
}

fn run(cli: Cli) -> Result<bool, UsageError> {
    match cli.command {
        Command::Validate(c) => {
            let (name, ol) = load(&c)?;
            emit(&ValidateReport::new(&name, &ol), c.format)
        }
        Command::Center(c) => {
            let (name, ml) = load_modal(&c)?;
            emit(&CenterReport::new(&name, &ml), c.format)
        }
        Command::Modal { common, element: el } => {
            let (name, ml) = load_modal(&common)?;
            let only = element(&ml, el.as_deref())?;
            emit(&ModalReport::new(&name, &ml, only), common.format)
        }
        Command::Axioms(c) => {
            let (name, ol) = load(&c)?;
            emit(&AxiomsReport::new(&name, &ol), c.format)
        }
        Command::Consequences {
            common,
            element: el,
            budget,
        } => {
            let (name, ml) = load_modal(&common)?;
            let only = element(&ml, el.as_deref())?;
            emit(&ConsequencesReport::new(&name, &ml, only, budget)?, common.format)
        }
        Command::Square {
            common,
            element: el,
            context,
            budget,
        } => {
            let (name, ml) = load_modal(&common)?;
            let p = ml.elem(&el)?;
            let reports = square_report(&ml, p, context, budget)?;
            let summary = SquareSummary {
                lattice: name,
                policy: context.to_string(),
                reports: reports.iter().map(|r| SquareEntry::new(&ml, r)).collect(),
            };
            emit(&summary, common.format)
        }
        Command::Greechie {
            input,
            blocks,
            name,
            max_size,
        } => {
            let doc = match (input, blocks) {
                (_, Some(b)) => parse_greechie(&format!("greechie {name}\nblocks: {b}\n"))?,
                (Some(path), None) => {
                    let text =
                        std::fs::read_to_string(&path).map_err(|e| UsageError(format!("cannot read `{path}`: {e}")))?;
                    parse_greechie(&text)?
                }
                (None, None) => return Err(UsageError("give a diagram file or --blocks".into())),
            };
            let lattice = generate(&doc, max_size)?;
            print!("{lattice}");
            Ok(true)
        }
        Command::Corpus { action } => {
            match action {
                CorpusAction::List => {
                    for n in corpus::names() {
                        println!("{n}");
                    }
                }
                CorpusAction::Show { name } => print!("{}", corpus::source(&name)?),
            }
            Ok(true)
        }
    }
}

fn generate(doc: &GreechieDocument, max_size: usize) -> Result<String, UsageError> {
    Ok(emit_oml(&io::generate_from_greechie(doc, max_size)?))
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(UsageError(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
