//! The JSON document format, reports, random instances and the commands
//! behind the `hoalg` binary.

mod commands;
mod document;
mod generate;
mod report;

pub use commands::{run_check, run_coderive, run_derive, CheckFlavor, CheckOptions, Derivation, Functor};
pub use document::{AlgebraDocument, DeclaredType, DocConvention, FORMAT_VERSION};
pub use generate::{generate_random, GenerateParams, GeneratedStructure};
pub use report::{CheckOutcome, Report, ReportWitness, Verdict};
