use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use hoalg::equations::StructureKind;
use hoalg::io::{
    generate_random, run_check, run_coderive, run_derive, AlgebraDocument, CheckFlavor, CheckOptions, DocConvention,
    Functor, GenerateParams, GeneratedStructure, Report,
};
use hoalg::selftest::run_selftest;
use hoalg::{Error, SymmetrizationMode};

#[derive(Parser)]
#[command(name = "hoalg", version, about = "Exact checks for A∞, PL∞ and L∞ algebras and their n-ary cousins")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Clone, Copy, ValueEnum)]
enum Symmetrize {
    None,
    Partial,
    Full,
}

#[derive(Subcommand)]
enum Command {
    /// Check the structure equations of a document.
    Check {
        file: PathBuf,
        /// assoc, prelie, lie, assoc_n, prelie_n or lie_n. Defaults to the declared type.
        #[arg(long)]
        flavor: Option<CheckFlavor>,
        /// Require the document to use this convention.
        #[arg(long)]
        convention: Option<DocConvention>,
        #[arg(long)]
        max_arity: Option<usize>,
        #[arg(long)]
        no_precondition_check: bool,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Apply a functor and print the derived document.
    Derive {
        file: PathBuf,
        /// suspend, desuspend, commutator-alpha|beta|gamma, nary-embed, nary-commutator-prelie|lie
        functor: Functor,
        #[arg(long)]
        max_arity: Option<usize>,
        #[arg(long)]
        no_precondition_check: bool,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Build the coderivation of a family and report on D².
    Coderive {
        file: PathBuf,
        /// assoc (tensor), prelie (Perm) or lie (symmetric coalgebra).
        #[arg(long)]
        flavor: Option<StructureKind>,
        #[arg(long, default_value_t = 4)]
        weight_cap: usize,
        #[arg(long)]
        no_precondition_check: bool,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Run the full invariant suite.
    Selftest {
        #[arg(long, default_value_t = 1)]
        seed: u64,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Print a random document.
    Generate {
        #[arg(long)]
        seed: u64,
        #[arg(long, default_value_t = 2)]
        dim: usize,
        #[arg(long, default_value_t = 0, allow_hyphen_values = true)]
        min_degree: i64,
        #[arg(long, default_value_t = 1, allow_hyphen_values = true)]
        max_degree: i64,
        #[arg(long, value_delimiter = ',', default_value = "1,2")]
        arities: Vec<usize>,
        #[arg(long, default_value_t = 0.5)]
        sparsity: f64,
        #[arg(long, default_value = "unhat")]
        convention: DocConvention,
        #[arg(long, value_enum, default_value = "none")]
        symmetrize: Symmetrize,
        #[arg(long, default_value = "free")]
        structure: GeneratedStructure,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
}

fn read(path: &Path) -> Result<AlgebraDocument, Error> {
    let bytes = fs::read(path).map_err(|e| Error::document(path.display().to_string(), e.to_string()))?;
    AlgebraDocument::parse_bytes(&bytes).map_err(|e| match e {
        Error::Document { path: json, message } => Error::Document { path: format!("{}: {json}", path.display()), message },
        other => other,
    })
}

fn emit(text: &str, output: Option<&Path>) -> Result<(), Error> {
    match output {
        Some(p) => Ok(fs::write(p, text)?),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn print_report(report: &Report, format: Format) -> ExitCode {
    match format {
        Format::Text => print!("{}", report.render_text()),
        Format::Json => print!("{}", report.to_json()),
    }
    ExitCode::from(report.exit_code() as u8)
}

fn run(cli: Cli) -> Result<ExitCode, Error> {
    match cli.command {
        Command::Check { file, flavor, convention, max_arity, no_precondition_check, format } => {
            let doc = read(&file)?;
            if let Some(c) = convention {
                if c != doc.convention {
                    return Err(Error::Kind { expected: format!("a {c} document"), found: format!("a {} document", doc.convention) });
                }
            }
            let options = CheckOptions { max_arity, precondition_check: !no_precondition_check };
            Ok(print_report(&run_check(&doc, flavor, options)?, format))
        }
        Command::Derive { file, functor, max_arity, no_precondition_check, output } => {
            let doc = read(&file)?;
            let options = CheckOptions { max_arity, precondition_check: !no_precondition_check };
            let derived = run_derive(&doc, functor, options)?;
            match derived.document {
                Some(out) => {
                    emit(&out.to_json(), output.as_deref())?;
                    Ok(ExitCode::SUCCESS)
                }
                None => {
                    eprint!("{}", derived.report.render_text());
                    Ok(ExitCode::from(1))
                }
            }
        }
        Command::Coderive { file, flavor, weight_cap, no_precondition_check, format } => {
            let doc = read(&file)?;
            Ok(print_report(&run_coderive(&doc, flavor, weight_cap, !no_precondition_check)?, format))
        }
        Command::Selftest { seed, format } => Ok(print_report(&run_selftest(seed), format)),
        Command::Generate {
            seed,
            dim,
            min_degree,
            max_degree,
            arities,
            sparsity,
            convention,
            symmetrize,
            structure,
            output,
        } => {
            let symmetrize = match symmetrize {
                Symmetrize::None => None,
                Symmetrize::Partial => Some(SymmetrizationMode::Partial),
                Symmetrize::Full => Some(SymmetrizationMode::Full),
            };
            let params =
                GenerateParams { seed, dim, min_degree, max_degree, arities, sparsity, convention, symmetrize, structure };
            emit(&generate_random(&params)?.to_json(), output.as_deref())?;
            Ok(ExitCode::SUCCESS)
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { ExitCode::from(2) } else { ExitCode::SUCCESS };
        }
    };
    match run(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
