//! Command-line front end.
//!
//! Exit codes: 0 success, 1 usage error, 2 input (I/O, parse or validation)
//! error, 3 computation error such as total conflict.

use std::ffi::OsString;
use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand};

use crate::combination::combine_all;
use crate::distance::DistanceMeasure;
use crate::document::{parse_document_with, EvidenceDocument, ParseOptions};
use crate::pignistic::ppt;
use crate::ranking::rank_by_distance;
use crate::repro;
use crate::table::{Cell, Format, Table};

#[derive(Debug, Parser)]
#[command(name = "evrank", version, about = "Evidence distances and BBA ranking")]
struct Cli {
    /// Output format.
    #[arg(long, global = true, default_value = "csv")]
    format: Format,

    /// Rescale mass functions whose masses do not sum to 1.
    #[arg(long, global = true)]
    renormalize: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Check a document and summarize its mass functions.
    Validate { file: PathBuf },
    /// Combine mass functions with Dempster's rule, left to right.
    Combine {
        file: PathBuf,
        #[arg(long, value_delimiter = ',', num_args = 1.., required = true)]
        bbas: Vec<String>,
    },
    /// Pignistic probabilities of one mass function.
    Ppt {
        file: PathBuf,
        #[arg(long)]
        bba: String,
    },
    /// Distance between two mass functions.
    Dist {
        file: PathBuf,
        #[arg(long, value_delimiter = ',', required = true)]
        pair: Vec<String>,
        /// red, jousselme, betp, betp:all, betp:singleton or betp:focal
        #[arg(long, default_value = "red")]
        measure: String,
    },
    /// Rank every mass function of the document by distance to a reference.
    Rank {
        file: PathBuf,
        #[arg(long)]
        reference: String,
        #[arg(long, default_value = "red")]
        measure: String,
    },
    /// Recompute the bundled benchmarks.
    Repro {
        #[command(subcommand)]
        which: Repro,
    },
}

#[derive(Debug, Subcommand)]
enum Repro {
    /// Graded examples against their published values.
    Examples,
    /// Growing-subset sweep on a 20-element frame.
    Sweep,
}

#[derive(Debug)]
enum Failure {
    Usage(String),
    Input(String),
    Compute(String),
}

impl Failure {
    fn code(&self) -> i32 {
        match self {
            Failure::Usage(_) => 1,
            Failure::Input(_) => 2,
            Failure::Compute(_) => 3,
        }
    }

    fn message(&self) -> &str {
        match self {
            Failure::Usage(m) | Failure::Input(m) | Failure::Compute(m) => m,
        }
    }
}

impl From<crate::Error> for Failure {
    fn from(e: crate::Error) -> Self {
        Failure::Compute(e.to_string())
    }
}

/// Runs the command line `args` (program name first) and returns the exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            return if e.use_stderr() {
                let _ = write!(err, "{text}");
                1
            } else {
                let _ = write!(out, "{text}");
                0
            };
        }
    };
    match execute(&cli) {
        Ok(table) => match out.write_all(table.render(cli.format).as_bytes()) {
            Ok(()) => 0,
            Err(e) => {
                let _ = writeln!(err, "evrank: cannot write output: {e}");
                2
            }
        },
        Err(f) => {
            let _ = writeln!(err, "evrank: {}", f.message());
            f.code()
        }
    }
}

fn load(path: &Path, options: ParseOptions) -> Result<EvidenceDocument, Failure> {
    let text =
        fs::read_to_string(path).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))?;
    parse_document_with(&text, options)
        .map_err(|e| Failure::Input(format!("{}: {e}", path.display())))
}

fn lookup<'a>(doc: &'a EvidenceDocument, name: &str) -> Result<&'a crate::Bba, Failure> {
    doc.get(name)
        .ok_or_else(|| Failure::Usage(format!("no bba named {name:?} in document")))
}

fn measure(text: &str) -> Result<DistanceMeasure, Failure> {
    text.parse()
        .map_err(|e: crate::Error| Failure::Usage(e.to_string()))
}

fn execute(cli: &Cli) -> Result<Table, Failure> {
    let options = ParseOptions {
        renormalize: cli.renormalize,
    };
    match &cli.command {
        Command::Validate { file } => {
            let doc = load(file, options)?;
            let mut t = Table::new(vec!["bba", "focal_elements", "mass_sum"]);
            for (name, bba) in &doc.bbas {
                t.push(vec![
                    name.as_str().into(),
                    bba.focal_count().into(),
                    bba.total_mass().into(),
                ]);
            }
            Ok(t)
        }
        Command::Combine { file, bbas } => {
            let doc = load(file, options)?;
            let operands = bbas
                .iter()
                .map(|n| lookup(&doc, n))
                .collect::<Result<Vec<_>, _>>()?;
            let (combined, conflicts) = combine_all(operands)?;
            let mut t = Table::new(vec!["quantity", "set", "value"]);
            for k in conflicts {
                t.push(vec!["conflict".into(), Cell::Empty, k.value().into()]);
            }
            for (set, mass) in combined.focal_elements() {
                t.push(vec![
                    "mass".into(),
                    doc.frame.display_set(set).into(),
                    mass.into(),
                ]);
            }
            Ok(t)
        }
        Command::Ppt { file, bba } => {
            let doc = load(file, options)?;
            let p = ppt(lookup(&doc, bba)?);
            let mut t = Table::new(vec!["element", "index", "probability"]);
            for (i, (label, prob)) in doc.frame.labels().iter().zip(p.probabilities()).enumerate() {
                t.push(vec![label.as_str().into(), (i + 1).into(), (*prob).into()]);
            }
            Ok(t)
        }
        Command::Dist {
            file,
            pair,
            measure: m,
        } => {
            let measure = measure(m)?;
            let [a, b] = pair.as_slice() else {
                return Err(Failure::Usage(format!(
                    "--pair takes exactly two names, got {}",
                    pair.len()
                )));
            };
            let doc = load(file, options)?;
            let d = measure.distance(lookup(&doc, a)?, lookup(&doc, b)?)?;
            let mut t = Table::new(vec!["reference", "candidate", "measure", "distance"]);
            t.push(vec![
                a.as_str().into(),
                b.as_str().into(),
                measure.to_string().into(),
                d.into(),
            ]);
            Ok(t)
        }
        Command::Rank {
            file,
            reference,
            measure: m,
        } => {
            let measure = measure(m)?;
            let doc = load(file, options)?;
            let reference_bba = lookup(&doc, reference)?;
            let candidates: Vec<(&str, crate::Bba)> = doc
                .bbas
                .iter()
                .map(|(n, b)| (n.as_str(), b.clone()))
                .collect();
            let ranking = rank_by_distance(reference, reference_bba, &candidates, measure)?;
            let mut t = Table::new(vec!["candidate", "distance", "rank", "tied"]);
            for e in ranking.entries {
                t.push(vec![
                    e.name.into(),
                    e.distance.into(),
                    e.rank.into(),
                    e.tied.into(),
                ]);
            }
            Ok(t)
        }
        Command::Repro { which } => Ok(match which {
            Repro::Examples => repro::examples_table()?,
            Repro::Sweep => repro::sweep_table()?,
        }),
    }
}
