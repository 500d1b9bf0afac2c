//! JSON wire formats. Every rational is a string `"p/q"` (or `"p"`).
//!
//! Each payload has a plain serde struct and a pair of conversions to and
//! from the in-memory type; the conversions validate shapes.

use serde::{Deserialize, Serialize};

use crate::algebra::{Algebra, Augmentation, BilinearForm, Bimodule, StructureConstants};
use crate::catalog::{CatalogEntry, GridExpectation};
use crate::constructions::Construction;
use crate::dendriform::Dendriform;
use crate::error::{dim_mismatch, Error, Result};
use crate::linalg::{Domain, LinearMap, Matrix, Vector};
use crate::scalar::{self, Rational};
use crate::tensor::Tensor2;

pub type RatRows = Vec<Vec<String>>;

fn rats(v: &[Rational]) -> Vec<String> {
    v.iter().map(scalar::format).collect()
}

fn parse_vec(v: &[String]) -> Result<Vector> {
    v.iter().map(|s| scalar::parse(s)).collect()
}

pub fn matrix_rows(m: &Matrix) -> RatRows {
    m.to_rows().iter().map(|r| rats(r)).collect()
}

pub fn parse_matrix(rows: &[Vec<String>]) -> Result<Matrix> {
    let parsed = rows.iter().map(|r| parse_vec(r)).collect::<Result<Vec<_>>>()?;
    if parsed.is_empty() {
        return Ok(Matrix::zeros(0, 0));
    }
    Matrix::from_rows(parsed)
}

fn sc_to_json(sc: &StructureConstants) -> Vec<RatRows> {
    sc.to_nested()
        .iter()
        .map(|plane| plane.iter().map(|r| rats(r)).collect())
        .collect()
}

fn sc_from_json(table: &[RatRows]) -> Result<StructureConstants> {
    let nested = table
        .iter()
        .map(|plane| plane.iter().map(|r| parse_vec(r)).collect::<Result<Vec<_>>>())
        .collect::<Result<Vec<_>>>()?;
    StructureConstants::from_nested(nested)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AlgebraJson {
    pub dim: usize,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub basis: Vec<String>,
    pub unit: Vec<String>,
    pub sc: Vec<RatRows>,
}

impl AlgebraJson {
    pub fn from_algebra(a: &Algebra) -> Self {
        AlgebraJson {
            dim: a.dim(),
            basis: a.basis.clone(),
            unit: rats(&a.unit),
            sc: sc_to_json(&a.sc),
        }
    }

    pub fn to_algebra(&self) -> Result<Algebra> {
        let sc = sc_from_json(&self.sc)?;
        if sc.dim() != self.dim {
            return Err(dim_mismatch(format!("dim {} but sc has {} planes", self.dim, sc.dim())));
        }
        let unit = parse_vec(&self.unit)?;
        if self.basis.is_empty() {
            Algebra::with_default_names(sc, unit)
        } else {
            Algebra::new(self.basis.clone(), sc, unit)
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AugmentationJson {
    pub eps: Vec<String>,
}

impl AugmentationJson {
    pub fn from_augmentation(e: &Augmentation) -> Self {
        AugmentationJson { eps: rats(&e.eps) }
    }

    pub fn to_augmentation(&self) -> Result<Augmentation> {
        Ok(Augmentation::new(parse_vec(&self.eps)?))
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BimoduleJson {
    pub left: Vec<RatRows>,
    pub right: Vec<RatRows>,
}

impl BimoduleJson {
    pub fn from_bimodule(v: &Bimodule) -> Self {
        BimoduleJson {
            left: v.left.iter().map(matrix_rows).collect(),
            right: v.right.iter().map(matrix_rows).collect(),
        }
    }

    pub fn to_bimodule(&self, algebra: &Algebra) -> Result<Bimodule> {
        let left = self.left.iter().map(|m| parse_matrix(m)).collect::<Result<Vec<_>>>()?;
        let right = self.right.iter().map(|m| parse_matrix(m)).collect::<Result<Vec<_>>>()?;
        Bimodule::new(algebra.clone(), left, right)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Tensor2Json {
    pub dim: usize,
    pub coeff: RatRows,
}

impl Tensor2Json {
    pub fn from_tensor(r: &Tensor2) -> Self {
        Tensor2Json { dim: r.dim(), coeff: matrix_rows(&r.coeff) }
    }

    pub fn to_tensor(&self) -> Result<Tensor2> {
        let m = parse_matrix(&self.coeff)?;
        if m.rows() != self.dim || m.cols() != self.dim {
            return Err(dim_mismatch(format!(
                "dim {} but coeff is {}×{}",
                self.dim,
                m.rows(),
                m.cols()
            )));
        }
        Ok(Tensor2::from_matrix(m))
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LinearMapJson {
    pub rows: usize,
    pub cols: usize,
    pub matrix: RatRows,
    #[serde(default = "primal")]
    pub domain: Domain,
}

fn primal() -> Domain {
    Domain::Primal
}

impl LinearMapJson {
    pub fn from_map(m: &LinearMap) -> Self {
        LinearMapJson {
            rows: m.matrix.rows(),
            cols: m.matrix.cols(),
            matrix: matrix_rows(&m.matrix),
            domain: m.domain,
        }
    }

    pub fn to_map(&self) -> Result<LinearMap> {
        let m = if self.rows == 0 || self.cols == 0 {
            Matrix::zeros(self.rows, self.cols)
        } else {
            parse_matrix(&self.matrix)?
        };
        if m.rows() != self.rows || m.cols() != self.cols {
            return Err(dim_mismatch(format!(
                "declared {}×{} but matrix is {}×{}",
                self.rows,
                self.cols,
                m.rows(),
                m.cols()
            )));
        }
        Ok(LinearMap::new(m, self.domain))
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BilinearFormJson {
    pub gram: RatRows,
}

impl BilinearFormJson {
    pub fn from_form(b: &BilinearForm) -> Self {
        BilinearFormJson { gram: matrix_rows(&b.gram) }
    }

    pub fn to_form(&self) -> Result<BilinearForm> {
        BilinearForm::new(parse_matrix(&self.gram)?)
    }
}

/// A bilinear product on a space, e.g. the weight term of an O-operator.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ProductJson {
    pub sc: Vec<RatRows>,
}

impl ProductJson {
    pub fn from_sc(sc: &StructureConstants) -> Self {
        ProductJson { sc: sc_to_json(sc) }
    }

    pub fn to_sc(&self) -> Result<StructureConstants> {
        sc_from_json(&self.sc)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DendriformJson {
    pub dim: usize,
    pub prec: Vec<RatRows>,
    pub succ: Vec<RatRows>,
}

impl DendriformJson {
    pub fn from_dendriform(d: &Dendriform) -> Self {
        DendriformJson { dim: d.dim(), prec: sc_to_json(&d.prec), succ: sc_to_json(&d.succ) }
    }

    pub fn to_dendriform(&self) -> Result<Dendriform> {
        let d = Dendriform::new(sc_from_json(&self.prec)?, sc_from_json(&self.succ)?)?;
        if d.dim() != self.dim {
            return Err(dim_mismatch(format!("dim {} but tables have {} planes", self.dim, d.dim())));
        }
        Ok(d)
    }
}

/// Which construction produced a result, and from what.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Provenance {
    pub construction: String,
    pub inputs: serde_json::Map<String, serde_json::Value>,
}

impl Provenance {
    pub fn new(construction: &str) -> Self {
        Provenance { construction: construction.into(), inputs: serde_json::Map::new() }
    }

    pub fn input(mut self, key: &str, value: impl Serialize) -> Self {
        let v = serde_json::to_value(value).unwrap_or(serde_json::Value::Null);
        self.inputs.insert(key.into(), v);
        self
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConstructionJson {
    pub algebra: AlgebraJson,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub s: Option<Tensor2Json>,
    pub r1: Tensor2Json,
    pub r2: Tensor2Json,
    pub provenance: Provenance,
}

impl ConstructionJson {
    pub fn from_construction(c: &Construction, provenance: Provenance) -> Self {
        ConstructionJson {
            algebra: AlgebraJson::from_algebra(&c.algebra),
            s: Some(Tensor2Json::from_tensor(&c.s)),
            r1: Tensor2Json::from_tensor(&c.r1),
            r2: Tensor2Json::from_tensor(&c.r2),
            provenance,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FormExport {
    pub name: String,
    pub gram: RatRows,
    pub phi: Tensor2Json,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SolutionExport {
    pub name: String,
    pub r: Tensor2Json,
    pub form: String,
    pub sbar: String,
    pub weight: String,
    pub rb_operator: LinearMapJson,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CatalogExport {
    pub name: String,
    pub mu: String,
    pub algebra: AlgebraJson,
    pub augmentations: Vec<AugmentationJson>,
    pub invariant_basis: Vec<Tensor2Json>,
    pub frobenius_forms: Vec<FormExport>,
    pub solutions: Vec<SolutionExport>,
    pub grid: GridExpectation,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub classified_nonzero: Option<usize>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub notes: Vec<String>,
}

fn signed(sign: i8, what: &str) -> String {
    if sign < 0 {
        format!("-{what}")
    } else {
        what.to_string()
    }
}

impl CatalogExport {
    /// Every datum of an entry with the solutions and operators at `mu`.
    pub fn new(entry: &CatalogEntry, mu: &Rational) -> Result<Self> {
        if num_traits::Zero::is_zero(mu) {
            return Err(Error::ZeroMu);
        }
        let forms = entry
            .frobenius_forms
            .iter()
            .map(|f| FormExport {
                name: f.name.clone(),
                gram: matrix_rows(&f.form.gram),
                phi: Tensor2Json::from_tensor(&f.phi),
            })
            .collect();
        let solutions = entry
            .solutions
            .iter()
            .map(|s| SolutionExport {
                name: s.name.clone(),
                r: Tensor2Json::from_tensor(&s.at(mu)),
                form: entry.frobenius_forms[s.form].name.clone(),
                sbar: signed(s.sbar_sign, &format!("μ{}", entry.frobenius_forms[s.form].name)),
                weight: signed(s.weight_sign, "μ"),
                rb_operator: LinearMapJson::from_map(&LinearMap::primal(s.q.scale(mu))),
            })
            .collect();
        Ok(CatalogExport {
            name: entry.name.clone(),
            mu: scalar::format(mu),
            algebra: AlgebraJson::from_algebra(&entry.algebra),
            augmentations: entry.augmentations.iter().map(AugmentationJson::from_augmentation).collect(),
            invariant_basis: entry.inv_basis_expected.iter().map(Tensor2Json::from_tensor).collect(),
            frobenius_forms: forms,
            solutions,
            grid: entry.grid,
            classified_nonzero: entry.classified_nonzero,
            notes: entry.notes.clone(),
        })
    }
}

pub fn parse_json<T: serde::de::DeserializeOwned>(text: &str) -> Result<T> {
    serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))
}

pub fn to_json_string<T: Serialize>(value: &T) -> String {
    serde_json::to_string_pretty(value).expect("payloads are always serializable")
}
