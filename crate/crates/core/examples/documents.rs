//! Reading an algebra document, checking it, and deriving new documents, the
//! same path the command-line tool takes.
//!
//! ```bash
//! cargo run -p hoalg --example documents
//! ```

use hoalg::io::{generate_random, run_check, run_derive, CheckOptions, Functor, GenerateParams, GeneratedStructure};
use hoalg::AlgebraDocument;

const DUAL_NUMBERS: &str = r#"{
  "version": 1,
  "space": [{"label": "1", "degree": 0}, {"label": "t", "degree": 0}],
  "convention": "unhat",
  "declared_type": {"kind": "a_infinity"},
  "operations": [{
    "arity": 2,
    "entries": [
      {"inputs": ["1", "1"], "output": [{"label": "1", "coeff": "1"}]},
      {"inputs": ["1", "t"], "output": [{"label": "t", "coeff": "1"}]},
      {"inputs": ["t", "1"], "output": [{"label": "t", "coeff": "2"}]}
    ]
  }]
}"#;

fn main() -> hoalg::Result<()> {
    let doc = AlgebraDocument::parse(DUAL_NUMBERS)?;
    let report = run_check(&doc, None, CheckOptions::default())?;
    print!("{}", report.render_text());
    println!("exit code {}", report.exit_code());

    if let Err(e) = AlgebraDocument::parse(r#"{"version": 1, "space": [], "convention": "unhat", "operations": []}"#) {
        println!("rejected: {e}");
    }

    let params = GenerateParams { seed: 3, dim: 3, structure: GeneratedStructure::Associative, ..Default::default() };
    let generated = generate_random(&params)?;
    let derived = run_derive(&generated, Functor::Commutator(hoalg::CommutatorKind::Beta), CheckOptions::default())?;
    let lie = derived.document.expect("associative input");
    print!("{}", run_check(&lie, None, CheckOptions::default())?.render_text());
    print!("{}", lie.to_json());
    Ok(())
}
