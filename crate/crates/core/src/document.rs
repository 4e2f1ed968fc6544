//! The JSON structure-constant document.
//!
//! A document names its field and basis, then lists the structure maps
//! sparsely with basis labels as keys:
//!
//! ```json
//! {
//!   "schema": "azumaya-structure-constants/v1",
//!   "field": "rational",
//!   "basis": ["1", "g"],
//!   "unit": {"1": 1},
//!   "mult": {"g": {"g": {"1": 1}}, "1": {"1": {"1": 1}, "g": {"g": 1}}, ...},
//!   "comult": {"1": [[1, "1", "1"]], "g": [[1, "g", "g"]]},
//!   "counit": {"1": 1, "g": 1},
//!   "antipode": {"1": {"1": 1}, "g": {"g": 1}}
//! }
//! ```
//!
//! Scalars are JSON integers or strings `"a"` / `"a/b"`. Missing products
//! are zero; `comult` and `antipode` must cover the whole basis. Optional
//! `functionals` carry cocycles and r-forms as `{row: {col: scalar}}`, and
//! an optional `comodule_algebra` block describes an algebra in the comodule
//! category. The matching JSON Schema ships as
//! `schemas/structure-constants.v1.schema.json`.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::comodule::ComoduleAlgebra;
use crate::convolution::Functional2;
use crate::error::{Error, Result};
use crate::field::Field;
use crate::hopf::{Algebra, Coalgebra, HopfAlgebra, Term};
use crate::linalg::Matrix;

pub const SCHEMA_ID: &str = "azumaya-structure-constants/v1";

/// `rational` or `prime:p` for an odd prime `p`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum FieldSpec {
    Rational,
    Prime(u64),
}

impl FromStr for FieldSpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s == "rational" {
            return Ok(FieldSpec::Rational);
        }
        let bad = || Error::Parse(format!("`{s}` is not a field (expected `rational` or `prime:p`)"));
        let p: u64 = s.strip_prefix("prime:").ok_or_else(bad)?.parse().map_err(|_| bad())?;
        if p == 2 {
            return Err(Error::InvalidParameter("characteristic 2 is not supported".into()));
        }
        if p < 3 || (2..).take_while(|k| k * k <= p).any(|k| p % k == 0) {
            return Err(Error::InvalidParameter(format!("{p} is not an odd prime")));
        }
        Ok(FieldSpec::Prime(p))
    }
}

impl fmt::Display for FieldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldSpec::Rational => write!(f, "rational"),
            FieldSpec::Prime(p) => write!(f, "prime:{p}"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum Scalar {
    Integer(i64),
    Text(String),
}

impl Scalar {
    pub fn from_field<F: Field>(x: &F) -> Self {
        let text = x.to_string();
        match text.parse::<i64>() {
            Ok(v) => Scalar::Integer(v),
            Err(_) => Scalar::Text(text),
        }
    }

    pub fn parse<F: Field>(&self, pointer: &str) -> Result<F> {
        match self {
            Scalar::Integer(v) => Ok(F::from_i64(*v)),
            Scalar::Text(t) => F::parse_scalar(t).map_err(|e| schema(pointer, e.to_string())),
        }
    }
}

pub type SparseVector = BTreeMap<String, Scalar>;

/// `[coefficient, left label, right label]`.
pub type TermTriple = (Scalar, String, String);

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum FunctionalRole {
    Cocycle,
    Rform,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FunctionalBlock {
    pub name: String,
    pub role: FunctionalRole,
    /// `values[a][b]` is the value on `a ⊗ b`; omitted pairs are zero.
    pub values: BTreeMap<String, SparseVector>,
}

/// Which Hopf algebra the block's coaction is multiplicative over when the
/// second tensor factor is multiplied in the opposite order.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Ambient {
    #[serde(rename = "H")]
    Hopf,
    #[serde(rename = "H^op")]
    Opposite,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ComoduleAlgebraBlock {
    pub basis: Vec<String>,
    pub ambient: Ambient,
    pub unit: SparseVector,
    pub mult: BTreeMap<String, BTreeMap<String, SparseVector>>,
    /// `coaction[a]` lists `[coef, a', h]` for `ρ(a) = Σ coef · a' ⊗ h`.
    pub coaction: BTreeMap<String, Vec<TermTriple>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct StructureConstantDocument {
    pub schema: String,
    pub field: String,
    pub basis: Vec<String>,
    pub unit: SparseVector,
    pub mult: BTreeMap<String, BTreeMap<String, SparseVector>>,
    pub comult: BTreeMap<String, Vec<TermTriple>>,
    pub counit: SparseVector,
    /// `antipode[j]` is `S(e_j)`.
    pub antipode: BTreeMap<String, SparseVector>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub functionals: Vec<FunctionalBlock>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub comodule_algebra: Option<ComoduleAlgebraBlock>,
}

fn schema(pointer: &str, message: impl Into<String>) -> Error {
    Error::Schema {
        pointer: pointer.to_string(),
        message: message.into(),
    }
}

/// Escapes one reference token (`~` → `~0`, `/` → `~1`).
pub fn pointer_token(token: &str) -> String {
    token.replace('~', "~0").replace('/', "~1")
}

fn join(pointer: &str, token: &str) -> String {
    format!("{pointer}/{}", pointer_token(token))
}

fn path_to_pointer(path: &serde_path_to_error::Path) -> String {
    use serde_path_to_error::Segment;
    let mut out = String::new();
    for seg in path.iter() {
        match seg {
            Segment::Seq { index } => out = join(&out, &index.to_string()),
            Segment::Map { key } => out = join(&out, key),
            Segment::Enum { variant } => out = join(&out, variant),
            Segment::Unknown => {}
        }
    }
    out
}

struct Basis<'a> {
    labels: &'a [String],
    index: HashMap<&'a str, usize>,
}

impl<'a> Basis<'a> {
    fn new(labels: &'a [String], pointer: &str) -> Result<Self> {
        if labels.is_empty() {
            return Err(schema(pointer, "basis must not be empty"));
        }
        let mut index = HashMap::new();
        for (i, l) in labels.iter().enumerate() {
            if l.is_empty() {
                return Err(schema(&join(pointer, &i.to_string()), "basis label must not be empty"));
            }
            if index.insert(l.as_str(), i).is_some() {
                return Err(schema(&join(pointer, &i.to_string()), format!("duplicate basis label `{l}`")));
            }
        }
        Ok(Basis { labels, index })
    }

    fn dim(&self) -> usize {
        self.labels.len()
    }

    fn lookup(&self, label: &str, pointer: &str) -> Result<usize> {
        self.index
            .get(label)
            .copied()
            .ok_or_else(|| schema(pointer, format!("unknown basis label `{label}`")))
    }

    fn vector<F: Field>(&self, v: &SparseVector, pointer: &str) -> Result<Vec<F>> {
        let mut out = vec![F::zero(); self.dim()];
        for (label, s) in v {
            let p = join(pointer, label);
            let i = self.lookup(label, &p)?;
            out[i] = s.parse(&p)?;
        }
        Ok(out)
    }

    fn sparse<F: Field>(&self, v: &[F]) -> SparseVector {
        v.iter()
            .enumerate()
            .filter(|(_, x)| !x.is_zero())
            .map(|(i, x)| (self.labels[i].clone(), Scalar::from_field(x)))
            .collect()
    }
}

fn algebra<F: Field>(
    basis: &Basis<'_>,
    unit: &SparseVector,
    mult: &BTreeMap<String, BTreeMap<String, SparseVector>>,
    pointer: &str,
    unit_pointer: &str,
) -> Result<Algebra<F>> {
    let d = basis.dim();
    let mut table = vec![vec![vec![F::zero(); d]; d]; d];
    for (a, row) in mult {
        let pa = join(pointer, a);
        let i = basis.lookup(a, &pa)?;
        for (b, v) in row {
            let pb = join(&pa, b);
            let j = basis.lookup(b, &pb)?;
            table[i][j] = basis.vector(v, &pb)?;
        }
    }
    Algebra::new(d, table, basis.vector(unit, unit_pointer)?)
}

fn mult_block<F: Field>(basis: &Basis<'_>, a: &Algebra<F>) -> BTreeMap<String, BTreeMap<String, SparseVector>> {
    let d = basis.dim();
    let mut out = BTreeMap::new();
    for i in 0..d {
        let mut row = BTreeMap::new();
        for j in 0..d {
            let v = basis.sparse(a.product(i, j));
            if !v.is_empty() {
                row.insert(basis.labels[j].clone(), v);
            }
        }
        if !row.is_empty() {
            out.insert(basis.labels[i].clone(), row);
        }
    }
    out
}

fn terms<F: Field>(
    left: &Basis<'_>,
    right: &Basis<'_>,
    triples: &[TermTriple],
    pointer: &str,
) -> Result<Vec<Term<F>>> {
    triples
        .iter()
        .enumerate()
        .map(|(k, (coef, l, r))| {
            let p = join(pointer, &k.to_string());
            Ok(Term::new(
                coef.parse(&join(&p, "0"))?,
                left.lookup(l, &join(&p, "1"))?,
                right.lookup(r, &join(&p, "2"))?,
            ))
        })
        .collect()
}

fn term_block<F: Field>(left: &Basis<'_>, right: &Basis<'_>, terms: &[Term<F>]) -> Vec<TermTriple> {
    terms
        .iter()
        .map(|t| {
            (
                Scalar::from_field(&t.coef),
                left.labels[t.left].clone(),
                right.labels[t.right].clone(),
            )
        })
        .collect()
}

fn total<'m, V>(basis: &Basis<'_>, map: &'m BTreeMap<String, V>, pointer: &str) -> Result<Vec<&'m V>> {
    for key in map.keys() {
        basis.lookup(key, &join(pointer, key))?;
    }
    basis
        .labels
        .iter()
        .map(|l| {
            map.get(l)
                .ok_or_else(|| schema(pointer, format!("missing entry for basis element `{l}`")))
        })
        .collect()
}

impl StructureConstantDocument {
    /// Parses and shape-checks a document. Errors carry JSON pointers.
    pub fn from_json_str(text: &str) -> Result<Self> {
        let de = &mut serde_json::Deserializer::from_str(text);
        let doc: Self = serde_path_to_error::deserialize(de).map_err(|e| {
            let pointer = path_to_pointer(e.path());
            schema(&pointer, e.into_inner().to_string())
        })?;
        doc.validate()?;
        Ok(doc)
    }

    pub fn to_json_string(&self) -> String {
        serde_json::to_string_pretty(self).expect("documents serialize")
    }

    /// Header, basis and label checks that do not depend on the field.
    pub fn validate(&self) -> Result<()> {
        if self.schema != SCHEMA_ID {
            return Err(schema(
                "/schema",
                format!("unsupported schema `{}` (expected `{SCHEMA_ID}`)", self.schema),
            ));
        }
        self.field_spec()?;
        let basis = Basis::new(&self.basis, "/basis")?;
        total(&basis, &self.comult, "/comult")?;
        total(&basis, &self.antipode, "/antipode")?;
        for (k, f) in self.functionals.iter().enumerate() {
            if self.functionals[..k].iter().any(|g| g.name == f.name) {
                return Err(schema(
                    &format!("/functionals/{k}/name"),
                    format!("duplicate functional name `{}`", f.name),
                ));
            }
        }
        if let Some(block) = &self.comodule_algebra {
            let b = Basis::new(&block.basis, "/comodule_algebra/basis")?;
            total(&b, &block.coaction, "/comodule_algebra/coaction")?;
        }
        Ok(())
    }

    pub fn field_spec(&self) -> Result<FieldSpec> {
        self.field.parse().map_err(|e: Error| schema("/field", e.to_string()))
    }

    fn check_field<F: Field>(&self) -> Result<()> {
        if self.field_spec()?.to_string() != F::field_name() {
            return Err(schema(
                "/field",
                format!("document is over `{}`, requested `{}`", self.field, F::field_name()),
            ));
        }
        Ok(())
    }

    /// The Hopf algebra described by the document; axioms are not checked.
    pub fn hopf<F: Field>(&self) -> Result<HopfAlgebra<F>> {
        self.check_field::<F>()?;
        let basis = Basis::new(&self.basis, "/basis")?;
        let d = basis.dim();
        let algebra = algebra(&basis, &self.unit, &self.mult, "/mult", "/unit")?;
        let comult = total(&basis, &self.comult, "/comult")?
            .into_iter()
            .zip(&self.basis)
            .map(|(ts, l)| terms(&basis, &basis, ts, &join("/comult", l)))
            .collect::<Result<Vec<_>>>()?;
        let counit = basis.vector(&self.counit, "/counit")?;
        let coalgebra = Coalgebra::new(d, comult, counit)?;
        let columns = total(&basis, &self.antipode, "/antipode")?
            .into_iter()
            .zip(&self.basis)
            .map(|(v, l)| basis.vector(v, &join("/antipode", l)))
            .collect::<Result<Vec<_>>>()?;
        let antipode = Matrix::from_columns(d, &columns)?;
        HopfAlgebra::new(algebra, coalgebra, antipode, self.basis.clone())
    }

    /// Functionals in document order with their names and roles.
    pub fn functionals<F: Field>(&self) -> Result<Vec<(String, FunctionalRole, Functional2<F>)>> {
        self.check_field::<F>()?;
        let basis = Basis::new(&self.basis, "/basis")?;
        let d = basis.dim();
        self.functionals
            .iter()
            .enumerate()
            .map(|(k, block)| {
                let pointer = format!("/functionals/{k}/values");
                let mut m = Matrix::<F>::zeros(d, d);
                for (a, row) in &block.values {
                    let pa = join(&pointer, a);
                    let i = basis.lookup(a, &pa)?;
                    let v = basis.vector::<F>(row, &pa)?;
                    for (j, x) in v.into_iter().enumerate() {
                        m[(i, j)] = x;
                    }
                }
                Ok((block.name.clone(), block.role, Functional2::new(m)?))
            })
            .collect()
    }

    /// The comodule algebra block over `h` (or `h^op`, as declared).
    pub fn comodule_algebra<F: Field>(&self, h: &HopfAlgebra<F>) -> Result<Option<ComoduleAlgebra<F>>> {
        let Some(block) = &self.comodule_algebra else {
            return Ok(None);
        };
        self.check_field::<F>()?;
        let hb = Basis::new(&self.basis, "/basis")?;
        let basis = Basis::new(&block.basis, "/comodule_algebra/basis")?;
        let algebra = algebra(
            &basis,
            &block.unit,
            &block.mult,
            "/comodule_algebra/mult",
            "/comodule_algebra/unit",
        )?;
        let coaction = total(&basis, &block.coaction, "/comodule_algebra/coaction")?
            .into_iter()
            .zip(&block.basis)
            .map(|(ts, l)| terms(&basis, &hb, ts, &join("/comodule_algebra/coaction", l)))
            .collect::<Result<Vec<_>>>()?;
        let ambient = match block.ambient {
            Ambient::Hopf => h.clone(),
            Ambient::Opposite => h.op()?,
        };
        ComoduleAlgebra::new(algebra, coaction, ambient, block.basis.clone()).map(Some)
    }

    pub fn from_hopf<F: Field>(h: &HopfAlgebra<F>) -> Self {
        let basis = Basis {
            labels: h.labels(),
            index: HashMap::new(),
        };
        let d = h.dim();
        StructureConstantDocument {
            schema: SCHEMA_ID.to_string(),
            field: F::field_name(),
            basis: h.labels().to_vec(),
            unit: basis.sparse(h.unit()),
            mult: mult_block(&basis, h.algebra()),
            comult: (0..d)
                .map(|i| (h.label(i).to_string(), term_block(&basis, &basis, h.coproduct(i))))
                .collect(),
            counit: basis.sparse(h.counit()),
            antipode: (0..d)
                .map(|i| (h.label(i).to_string(), basis.sparse(&h.antipode_of(i))))
                .collect(),
            functionals: Vec::new(),
            comodule_algebra: None,
        }
    }

    pub fn push_functional<F: Field>(&mut self, name: &str, role: FunctionalRole, f: &Functional2<F>) {
        let basis = Basis {
            labels: &self.basis,
            index: HashMap::new(),
        };
        let d = self.basis.len();
        let values = (0..d)
            .filter_map(|i| {
                let row: Vec<F> = (0..d).map(|j| f.at(i, j).clone()).collect();
                let v = basis.sparse(&row);
                (!v.is_empty()).then(|| (self.basis[i].clone(), v))
            })
            .collect();
        self.functionals.push(FunctionalBlock {
            name: name.to_string(),
            role,
            values,
        });
    }

    pub fn set_comodule_algebra<F: Field>(&mut self, a: &ComoduleAlgebra<F>, ambient: Ambient) {
        let hb = Basis {
            labels: &self.basis,
            index: HashMap::new(),
        };
        let basis = Basis {
            labels: a.labels(),
            index: HashMap::new(),
        };
        self.comodule_algebra = Some(ComoduleAlgebraBlock {
            basis: a.labels().to_vec(),
            ambient,
            unit: basis.sparse(a.unit()),
            mult: mult_block(&basis, a.algebra()),
            coaction: (0..a.dim())
                .map(|i| (a.labels()[i].clone(), term_block(&basis, &hb, a.coaction(i))))
                .collect(),
        });
    }
}
