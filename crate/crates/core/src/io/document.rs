use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::combination::Vector;
use crate::equations::{NaryKind, StructureKind};
use crate::error::{Error, Result};
use crate::operation::{Convention, Operation, OperationFamily};
use crate::scalar::Scalar;
use crate::space::{GradedSpace, TensorWord};

pub const FORMAT_VERSION: u32 = 1;

/// How the operations of a document are graded.
///
/// `hat` and `unhat` documents hold homotopy families. `nary` documents
/// hold a single operation of degree 0 on a space concentrated in degree 0.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum DocConvention {
    Hat,
    Unhat,
    Nary,
}

impl DocConvention {
    pub fn family_convention(self) -> Option<Convention> {
        match self {
            DocConvention::Hat => Some(Convention::Hat),
            DocConvention::Unhat => Some(Convention::Unhat),
            DocConvention::Nary => None,
        }
    }

    fn name(self) -> &'static str {
        match self {
            DocConvention::Hat => "hat",
            DocConvention::Unhat => "unhat",
            DocConvention::Nary => "nary",
        }
    }
}

impl From<Convention> for DocConvention {
    fn from(c: Convention) -> Self {
        match c {
            Convention::Hat => DocConvention::Hat,
            Convention::Unhat => DocConvention::Unhat,
        }
    }
}

impl fmt::Display for DocConvention {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for DocConvention {
    type Err = String;
    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s {
            "hat" => Ok(DocConvention::Hat),
            "unhat" => Ok(DocConvention::Unhat),
            "nary" => Ok(DocConvention::Nary),
            other => Err(format!("unknown convention `{other}` (expected hat, unhat or nary)")),
        }
    }
}

/// The structure a document claims to carry.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum DeclaredType {
    Homotopy(StructureKind),
    Nary(NaryKind, usize),
}

impl DeclaredType {
    fn tag(self) -> &'static str {
        match self {
            DeclaredType::Homotopy(StructureKind::Assoc) => "a_infinity",
            DeclaredType::Homotopy(StructureKind::PreLie) => "pl_infinity",
            DeclaredType::Homotopy(StructureKind::Lie) => "l_infinity",
            DeclaredType::Nary(kind, _) => kind.name(),
        }
    }

    fn to_raw(self) -> RawDeclared {
        let n = match self {
            DeclaredType::Nary(_, n) => Some(n),
            DeclaredType::Homotopy(_) => None,
        };
        RawDeclared { kind: self.tag().to_string(), n }
    }

    fn from_raw(raw: &RawDeclared) -> std::result::Result<Self, String> {
        let homotopy = |k| match raw.n {
            None => Ok(DeclaredType::Homotopy(k)),
            Some(_) => Err(format!("`{}` takes no arity", raw.kind)),
        };
        let nary = |k| match raw.n {
            Some(n) if n >= 2 => Ok(DeclaredType::Nary(k, n)),
            _ => Err(format!("`{}` needs an arity n >= 2", raw.kind)),
        };
        match raw.kind.as_str() {
            "a_infinity" => homotopy(StructureKind::Assoc),
            "pl_infinity" => homotopy(StructureKind::PreLie),
            "l_infinity" => homotopy(StructureKind::Lie),
            "assoc_n" => nary(NaryKind::PartiallyAssociative),
            "prelie_n" => nary(NaryKind::PreLie),
            "lie_n" => nary(NaryKind::Lie),
            other => Err(format!("unknown declared type `{other}`")),
        }
    }
}

impl fmt::Display for DeclaredType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            DeclaredType::Homotopy(_) => f.write_str(self.tag()),
            DeclaredType::Nary(_, n) => write!(f, "{}[n={n}]", self.tag()),
        }
    }
}

#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawDocument {
    version: u32,
    space: Vec<RawBasis>,
    convention: DocConvention,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    declared_type: Option<RawDeclared>,
    #[serde(default)]
    operations: Vec<RawOperation>,
}

#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawBasis {
    label: String,
    degree: i64,
}

#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawDeclared {
    kind: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    n: Option<usize>,
}

#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawOperation {
    arity: usize,
    entries: Vec<RawEntry>,
}

#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawEntry {
    inputs: Vec<String>,
    output: Vec<RawTerm>,
}

#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawTerm {
    label: String,
    coeff: String,
}

/// A validated algebra description.
#[derive(Debug, Clone, PartialEq)]
pub struct AlgebraDocument {
    pub space: Arc<GradedSpace>,
    pub convention: DocConvention,
    pub declared_type: Option<DeclaredType>,
    pub operations: BTreeMap<usize, Operation>,
}

fn operation_degree(convention: DocConvention, arity: usize) -> i64 {
    match convention.family_convention() {
        Some(c) => c.degree(arity),
        None => 0,
    }
}

impl AlgebraDocument {
    pub fn parse(text: &str) -> Result<Self> {
        let de = &mut serde_json::Deserializer::from_str(text);
        let raw: RawDocument = serde_path_to_error::deserialize(de).map_err(|e| {
            let path = e.path().to_string();
            Error::document(format!("$.{path}").trim_end_matches('.'), e.inner().to_string())
        })?;
        Self::from_raw(raw)
    }

    pub fn parse_bytes(bytes: &[u8]) -> Result<Self> {
        let text = std::str::from_utf8(bytes).map_err(|e| Error::document("$", format!("not UTF-8: {e}")))?;
        Self::parse(text)
    }

    fn from_raw(raw: RawDocument) -> Result<Self> {
        if raw.version != FORMAT_VERSION {
            return Err(Error::document(
                "$.version",
                format!("unsupported version {} (expected {FORMAT_VERSION})", raw.version),
            ));
        }
        if raw.space.is_empty() {
            return Err(Error::document("$.space", "the space needs at least one basis element"));
        }
        let space = GradedSpace::new(raw.space.iter().map(|b| (b.label.clone(), b.degree)))
            .map_err(|e| Error::document("$.space", e.to_string()))?;
        let space = Arc::new(space);
        let convention = raw.convention;
        if convention == DocConvention::Nary && !space.is_concentrated_in_degree_zero() {
            return Err(Error::document("$.space", "an nary document needs every degree to be 0"));
        }
        let declared_type = raw
            .declared_type
            .as_ref()
            .map(DeclaredType::from_raw)
            .transpose()
            .map_err(|m| Error::document("$.declared_type", m))?;
        let resolve = |label: &str, path: String| {
            space.index_of(label).ok_or_else(|| Error::document(path, format!("unknown label `{label}`")))
        };
        let mut operations = BTreeMap::new();
        for (oi, rop) in raw.operations.iter().enumerate() {
            let opath = format!("$.operations[{oi}]");
            if rop.arity == 0 {
                return Err(Error::document(format!("{opath}.arity"), "arity must be at least 1"));
            }
            if operations.contains_key(&rop.arity) {
                return Err(Error::document(format!("{opath}.arity"), format!("duplicate operation of arity {}", rop.arity)));
            }
            let degree = operation_degree(convention, rop.arity);
            let mut entries: BTreeMap<TensorWord, Vector> = BTreeMap::new();
            for (ei, entry) in rop.entries.iter().enumerate() {
                let epath = format!("{opath}.entries[{ei}]");
                if entry.inputs.len() != rop.arity {
                    return Err(Error::document(
                        format!("{epath}.inputs"),
                        format!("expected {} inputs, found {}", rop.arity, entry.inputs.len()),
                    ));
                }
                let word: Vec<usize> = entry
                    .inputs
                    .iter()
                    .enumerate()
                    .map(|(k, l)| resolve(l, format!("{epath}.inputs[{k}]")))
                    .collect::<Result<_>>()?;
                let target = space.degree_unchecked(&word) + degree;
                let mut value = Vector::zero();
                for (ti, term) in entry.output.iter().enumerate() {
                    let tpath = format!("{epath}.output[{ti}]");
                    let z = resolve(&term.label, format!("{tpath}.label"))?;
                    let c: Scalar = term.coeff.parse().map_err(|e: Error| Error::document(format!("{tpath}.coeff"), e.to_string()))?;
                    if !c.is_zero() && space.degree(z) != target {
                        return Err(Error::document(
                            format!("{tpath}.label"),
                            format!("`{}` has degree {}, the entry must land in degree {target}", term.label, space.degree(z)),
                        ));
                    }
                    value.add_term(z, c);
                }
                let key = TensorWord::from(word);
                if entries.contains_key(&key) {
                    return Err(Error::document(format!("{epath}.inputs"), format!("duplicate entry {}", space.render_word(&key))));
                }
                entries.insert(key, value);
            }
            let op = Operation::from_entries(space.clone(), rop.arity, degree, entries)
                .map_err(|e| Error::document(opath.clone(), e.to_string()))?;
            operations.insert(rop.arity, op);
        }
        Ok(AlgebraDocument { space, convention, declared_type, operations })
    }

    fn to_raw(&self) -> RawDocument {
        let label = |i: usize| self.space.label(i).to_string();
        RawDocument {
            version: FORMAT_VERSION,
            space: self.space.basis().iter().map(|b| RawBasis { label: b.label.clone(), degree: b.degree }).collect(),
            convention: self.convention,
            declared_type: self.declared_type.map(DeclaredType::to_raw),
            operations: self
                .operations
                .values()
                .filter(|op| !op.is_zero())
                .map(|op| RawOperation {
                    arity: op.arity(),
                    entries: op
                        .entries()
                        .iter()
                        .map(|(w, v)| RawEntry {
                            inputs: w.iter().map(|&x| label(x)).collect(),
                            output: v.iter().map(|(&z, c)| RawTerm { label: label(z), coeff: c.to_string() }).collect(),
                        })
                        .collect(),
                })
                .collect(),
        }
    }

    /// Canonical pretty JSON: operations by arity, entries by input word in
    /// basis order, output terms by basis index, zeros dropped.
    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(&self.to_raw()).expect("document serializes");
        s.push('\n');
        s
    }

    pub fn from_family(family: &OperationFamily, declared_type: Option<DeclaredType>) -> Self {
        AlgebraDocument {
            space: family.space().clone(),
            convention: family.convention().into(),
            declared_type,
            operations: family.ops().map(|op| (op.arity(), op.clone())).collect(),
        }
    }

    pub fn from_nary(op: &Operation, declared_type: Option<DeclaredType>) -> Result<Self> {
        op.space().require_degree_zero()?;
        if op.degree() != 0 {
            return Err(Error::Grading);
        }
        Ok(AlgebraDocument {
            space: op.space().clone(),
            convention: DocConvention::Nary,
            declared_type,
            operations: [(op.arity(), op.clone())].into_iter().collect(),
        })
    }

    pub fn max_arity(&self) -> usize {
        self.operations.keys().next_back().copied().unwrap_or(0)
    }

    /// The operations as a homotopy family, with the given arity cap or the
    /// largest arity present.
    pub fn family(&self, arity_cap: Option<usize>) -> Result<OperationFamily> {
        let convention = self.convention.family_convention().ok_or_else(|| Error::Kind {
            expected: "a hat or unhat document".into(),
            found: "an nary document".into(),
        })?;
        let cap = arity_cap.unwrap_or(self.max_arity()).max(self.max_arity()).max(1);
        OperationFamily::with_ops(self.space.clone(), convention, cap, self.operations.values().cloned())
    }

    /// The single n-ary operation. An unhat document holding only a binary
    /// operation on a degree-0 space also qualifies.
    pub fn nary_operation(&self) -> Result<Operation> {
        let n = match self.declared_type {
            Some(DeclaredType::Nary(_, n)) => Some(n),
            _ => None,
        };
        let binary_unhat = self.convention == DocConvention::Unhat
            && self.space.is_concentrated_in_degree_zero()
            && self.operations.keys().all(|&a| a == 2);
        if self.convention != DocConvention::Nary && !binary_unhat {
            return Err(Error::Kind { expected: "an nary document".into(), found: format!("a {} document", self.convention) });
        }
        let arity = match (self.operations.len(), n) {
            (0, Some(n)) => n,
            (0, None) if binary_unhat => 2,
            (1, _) => self.max_arity(),
            (0, None) => return Err(Error::document("$.operations", "an empty nary document needs a declared arity")),
            _ => return Err(Error::document("$.operations", "an nary document holds exactly one operation")),
        };
        if let Some(n) = n {
            if n != arity {
                return Err(Error::document("$.declared_type.n", format!("declared arity {n}, operation has arity {arity}")));
            }
        }
        Ok(self.operations.get(&arity).cloned().unwrap_or_else(|| Operation::zero(self.space.clone(), arity, 0)))
    }
}
