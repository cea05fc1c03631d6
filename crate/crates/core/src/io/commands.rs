use std::fmt;
use std::str::FromStr;
use std::time::Instant;

use super::document::{AlgebraDocument, DeclaredType};
use super::report::{CheckOutcome, Report, ReportWitness};
use crate::coalgebra::{extend_coderivation, extend_coderivation_unchecked, CoalgebraKind};
use crate::equations::{
    check_nary, check_nary_unchecked, residual, residual_unchecked, EquationFlavor, NaryKind, Residual, StructureKind,
};
use crate::error::{Error, Result};
use crate::functors::{
    commutator, desuspend_family, nary_commutator_lie, nary_commutator_prelie, nary_embed, suspend_family,
    CommutatorKind,
};
use crate::operation::{Convention, OperationFamily};

/// What `check` verifies: a homotopy structure in the document's
/// convention, or a strict n-ary structure.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum CheckFlavor {
    Homotopy(StructureKind),
    Nary(NaryKind),
}

impl fmt::Display for CheckFlavor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CheckFlavor::Homotopy(k) => write!(f, "{k}"),
            CheckFlavor::Nary(k) => write!(f, "{k}"),
        }
    }
}

impl FromStr for CheckFlavor {
    type Err = String;
    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s {
            "assoc_n" => Ok(CheckFlavor::Nary(NaryKind::PartiallyAssociative)),
            "prelie_n" => Ok(CheckFlavor::Nary(NaryKind::PreLie)),
            "lie_n" => Ok(CheckFlavor::Nary(NaryKind::Lie)),
            other => other.parse().map(CheckFlavor::Homotopy).map_err(|_| {
                format!("unknown flavor `{other}` (expected assoc, prelie, lie, assoc_n, prelie_n or lie_n)")
            }),
        }
    }
}

impl From<DeclaredType> for CheckFlavor {
    fn from(d: DeclaredType) -> Self {
        match d {
            DeclaredType::Homotopy(k) => CheckFlavor::Homotopy(k),
            DeclaredType::Nary(k, _) => CheckFlavor::Nary(k),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CheckOptions {
    /// Largest residual arity to check. Defaults to `2k − 1` for a family
    /// whose largest operation has arity `k ≥ 2`, and to 3 otherwise.
    pub max_arity: Option<usize>,
    pub precondition_check: bool,
}

impl Default for CheckOptions {
    fn default() -> Self {
        CheckOptions { max_arity: None, precondition_check: true }
    }
}

fn default_max_arity(family: &OperationFamily) -> usize {
    let k = family.ops().map(|op| op.arity()).max().unwrap_or(2).max(2);
    2 * k - 1
}

fn residual_outcome(name: &str, r: &Residual, family: &OperationFamily) -> CheckOutcome {
    match r.witness() {
        None => CheckOutcome::pass(name, Some(r.n)),
        Some(w) => {
            let witness = ReportWitness::new(family.space(), &w.input, w.output, &w.coefficient);
            CheckOutcome::fail(name, Some(r.n), Some(witness), None)
        }
    }
}

fn homotopy_outcomes(family: &OperationFamily, kind: StructureKind, options: CheckOptions) -> Result<Vec<CheckOutcome>> {
    let flavor = EquationFlavor::new(kind, family.convention());
    let max = options.max_arity.unwrap_or_else(|| default_max_arity(family));
    let name = flavor.to_string();
    (1..=max)
        .map(|n| {
            let start = Instant::now();
            let r = if options.precondition_check {
                residual(family, flavor, n)?
            } else {
                residual_unchecked(family, flavor, n)?
            };
            Ok(residual_outcome(&name, &r, family).timed(start))
        })
        .collect()
}

fn resolve_flavor(doc: &AlgebraDocument, flavor: Option<CheckFlavor>) -> Result<CheckFlavor> {
    flavor.or(doc.declared_type.map(CheckFlavor::from)).ok_or_else(|| {
        Error::document("$.declared_type", "no flavor given and the document declares no type")
    })
}

/// Residual verdicts for every arity up to the cap, with witnesses.
pub fn run_check(doc: &AlgebraDocument, flavor: Option<CheckFlavor>, options: CheckOptions) -> Result<Report> {
    let start = Instant::now();
    let flavor = resolve_flavor(doc, flavor)?;
    let mut report = Report::new("check", flavor.to_string());
    match flavor {
        CheckFlavor::Homotopy(kind) => {
            let family = doc.family(None)?;
            for outcome in homotopy_outcomes(&family, kind, options)? {
                report.push(outcome);
            }
        }
        CheckFlavor::Nary(kind) => {
            let t = Instant::now();
            let mu = doc.nary_operation()?;
            let check = if options.precondition_check { check_nary(&mu, kind)? } else { check_nary_unchecked(&mu, kind)? };
            let outcome = match check.residual.witness() {
                None => CheckOutcome::pass(kind.name(), Some(mu.arity())),
                Some(w) => CheckOutcome::fail(
                    kind.name(),
                    Some(mu.arity()),
                    Some(ReportWitness::new(&doc.space, &w.input, w.output, &w.coefficient)),
                    None,
                ),
            };
            report.push(outcome.timed(t));
        }
    }
    report.elapsed_ms = start.elapsed().as_secs_f64() * 1e3;
    Ok(report)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Functor {
    Suspend,
    Desuspend,
    Commutator(CommutatorKind),
    NaryEmbed,
    NaryCommutatorPreLie,
    NaryCommutatorLie,
}

impl Functor {
    pub const ALL: [Functor; 8] = [
        Functor::Suspend,
        Functor::Desuspend,
        Functor::Commutator(CommutatorKind::Alpha),
        Functor::Commutator(CommutatorKind::Beta),
        Functor::Commutator(CommutatorKind::Gamma),
        Functor::NaryEmbed,
        Functor::NaryCommutatorPreLie,
        Functor::NaryCommutatorLie,
    ];
}

impl fmt::Display for Functor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Functor::Suspend => f.write_str("suspend"),
            Functor::Desuspend => f.write_str("desuspend"),
            Functor::Commutator(k) => write!(f, "commutator-{k}"),
            Functor::NaryEmbed => f.write_str("nary-embed"),
            Functor::NaryCommutatorPreLie => f.write_str("nary-commutator-prelie"),
            Functor::NaryCommutatorLie => f.write_str("nary-commutator-lie"),
        }
    }
}

impl FromStr for Functor {
    type Err = String;
    fn from_str(s: &str) -> std::result::Result<Self, String> {
        Functor::ALL.into_iter().find(|f| f.to_string() == s).ok_or_else(|| {
            let names: Vec<String> = Functor::ALL.iter().map(ToString::to_string).collect();
            format!("unknown functor `{s}` (expected one of {})", names.join(", "))
        })
    }
}

/// The result of `derive`: a new document, or the failed precondition
/// checks that prevented it.
#[derive(Debug, Clone)]
pub struct Derivation {
    pub document: Option<AlgebraDocument>,
    pub report: Report,
}

pub fn run_derive(doc: &AlgebraDocument, functor: Functor, options: CheckOptions) -> Result<Derivation> {
    let start = Instant::now();
    let mut report = Report::new("derive", functor.to_string());
    let precondition = |report: &mut Report, family: &OperationFamily, kind: StructureKind| -> Result<()> {
        if options.precondition_check {
            for outcome in homotopy_outcomes(family, kind, options)? {
                report.push(CheckOutcome { name: format!("precondition {}", outcome.name), ..outcome });
            }
        }
        Ok(())
    };
    let document = match functor {
        Functor::Suspend => {
            let family = doc.family(None)?;
            Some(AlgebraDocument::from_family(&suspend_family(&family)?, doc.declared_type))
        }
        Functor::Desuspend => {
            let family = doc.family(None)?;
            Some(AlgebraDocument::from_family(&desuspend_family(&family)?, doc.declared_type))
        }
        Functor::Commutator(kind) => {
            let family = doc.family(None)?;
            let (source, target) = match kind {
                CommutatorKind::Alpha => (StructureKind::Assoc, StructureKind::Lie),
                CommutatorKind::Beta => (StructureKind::PreLie, StructureKind::Lie),
                CommutatorKind::Gamma => (StructureKind::Assoc, StructureKind::PreLie),
            };
            precondition(&mut report, &family, source)?;
            Some(AlgebraDocument::from_family(&commutator(&family, kind)?, Some(DeclaredType::Homotopy(target))))
        }
        Functor::NaryEmbed => {
            let mu = doc.nary_operation()?;
            let kind = match doc.declared_type {
                Some(DeclaredType::Nary(k, _)) => Some(DeclaredType::Homotopy(k.structure())),
                _ => None,
            };
            let (_, family) = nary_embed(&mu)?;
            Some(AlgebraDocument::from_family(&family, kind))
        }
        Functor::NaryCommutatorPreLie | Functor::NaryCommutatorLie => {
            let mu = doc.nary_operation()?;
            let (source, target) = match functor {
                Functor::NaryCommutatorPreLie => (NaryKind::PartiallyAssociative, NaryKind::PreLie),
                _ => (NaryKind::PreLie, NaryKind::Lie),
            };
            if options.precondition_check {
                let t = Instant::now();
                let check = check_nary(&mu, source)?;
                let name = format!("precondition {}", source.name());
                let outcome = match check.residual.witness() {
                    None => CheckOutcome::pass(name, Some(mu.arity())),
                    Some(w) => CheckOutcome::fail(
                        name,
                        Some(mu.arity()),
                        Some(ReportWitness::new(&doc.space, &w.input, w.output, &w.coefficient)),
                        None,
                    ),
                };
                report.push(outcome.timed(t));
            }
            let out = match target {
                NaryKind::PreLie => nary_commutator_prelie(&mu)?,
                _ => nary_commutator_lie(&mu)?,
            };
            Some(AlgebraDocument::from_nary(&out, Some(DeclaredType::Nary(target, mu.arity())))?)
        }
    };
    report.elapsed_ms = start.elapsed().as_secs_f64() * 1e3;
    let document = if report.passed() { document } else { None };
    Ok(Derivation { document, report })
}

fn coalgebra_for(kind: StructureKind) -> CoalgebraKind {
    match kind {
        StructureKind::Assoc => CoalgebraKind::Tensor,
        StructureKind::PreLie => CoalgebraKind::Perm,
        StructureKind::Lie => CoalgebraKind::Wedge,
    }
}

/// Extends the family (suspended first if it is unhat) to a coderivation
/// of the matching cofree coalgebra truncated at `weight_cap`, and reports
/// the coderivation law and every weight-1 component of `D²`.
pub fn run_coderive(doc: &AlgebraDocument, flavor: Option<StructureKind>, weight_cap: usize, precondition_check: bool) -> Result<Report> {
    let start = Instant::now();
    let kind = match flavor {
        Some(k) => k,
        None => match resolve_flavor(doc, None)? {
            CheckFlavor::Homotopy(k) => k,
            CheckFlavor::Nary(_) => {
                return Err(Error::Kind { expected: "a homotopy flavor".into(), found: "an n-ary flavor".into() })
            }
        },
    };
    let family = doc.family(None)?;
    let hat = match family.convention() {
        Convention::Hat => family,
        Convention::Unhat => suspend_family(&family)?,
    };
    let coalgebra = coalgebra_for(kind);
    let d = if precondition_check {
        extend_coderivation(&hat, coalgebra, weight_cap)?
    } else {
        extend_coderivation_unchecked(&hat, coalgebra, weight_cap)?
    };
    let mut report = Report::new("coderive", format!("{coalgebra} W={weight_cap}"));
    let t = Instant::now();
    let law = match d.coderivation_defect(weight_cap) {
        None => CheckOutcome::pass("coderivation law", None),
        Some(w) => CheckOutcome::fail("coderivation law", None, None, Some(format!("fails on {}", hat.space().render_word(&w)))),
    };
    report.push(law.timed(t));
    let square = d.square();
    for n in 1..=weight_cap {
        let t = Instant::now();
        let component = square.cogenerator_component(n);
        let outcome = match crate::equations::witness_of(&component) {
            None => CheckOutcome::pass("D^2 weight-1 component", Some(n)),
            Some(w) => CheckOutcome::fail(
                "D^2 weight-1 component",
                Some(n),
                Some(ReportWitness::new(hat.space(), &w.input, w.output, &w.coefficient)),
                None,
            ),
        };
        report.push(outcome.timed(t));
    }
    report.elapsed_ms = start.elapsed().as_secs_f64() * 1e3;
    Ok(report)
}
