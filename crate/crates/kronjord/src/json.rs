//! Serialized forms of representations, tree representations, witnesses and
//! verification reports.
//!
//! Scalars travel as strings (`"3"`, `"-2/5"`, or a residue for prime
//! fields), matrices as row-major arrays of rows.

use std::collections::BTreeMap;

use kronjord_core::cover::{Addr, Arrow, TreeRep};
use kronjord_core::exactmat::{Field, Matrix};
use kronjord_core::verify::{CertifiedWitness, EkpCertificate, IndecEvidence, Mode};
use kronjord_core::{DimVector, Error, JordanType, KroneckerRep, Result};
use serde::de::DeserializeOwned;
use serde::{Deserialize, Serialize};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "type")]
pub enum FieldJson {
    Q,
    GF { p: u64 },
}

impl FieldJson {
    pub fn to_field(self) -> Result<Field> {
        match self {
            FieldJson::Q => Ok(Field::Rational),
            FieldJson::GF { p } => Field::prime(p),
        }
    }
}

impl From<Field> for FieldJson {
    fn from(f: Field) -> FieldJson {
        match f {
            Field::Rational => FieldJson::Q,
            Field::Prime(p) => FieldJson::GF { p },
        }
    }
}

pub type MatrixJson = Vec<Vec<String>>;

pub fn matrix_to_json(m: &Matrix) -> MatrixJson {
    (0..m.rows()).map(|i| m.row(i).iter().map(|x| x.to_string()).collect()).collect()
}

pub fn matrix_from_json(field: Field, rows: usize, cols: usize, m: &MatrixJson) -> Result<Matrix> {
    if m.len() != rows {
        return Err(Error::DimensionMismatch(format!("matrix has {} rows, expected {rows}", m.len())));
    }
    let parsed = m
        .iter()
        .map(|row| {
            if row.len() != cols {
                return Err(Error::DimensionMismatch(format!("row has {} entries, expected {cols}", row.len())));
            }
            row.iter().map(|s| field.parse(s)).collect::<Result<Vec<_>>>()
        })
        .collect::<Result<Vec<_>>>()?;
    Matrix::from_rows(field, cols, parsed)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RepJson {
    pub r: usize,
    pub dim: [usize; 2],
    pub field: FieldJson,
    pub mats: Vec<MatrixJson>,
}

impl From<&KroneckerRep> for RepJson {
    fn from(m: &KroneckerRep) -> RepJson {
        RepJson {
            r: m.r(),
            dim: [m.dim().a, m.dim().b],
            field: m.field().into(),
            mats: m.mats().iter().map(matrix_to_json).collect(),
        }
    }
}

impl RepJson {
    pub fn to_rep(&self) -> Result<KroneckerRep> {
        let field = self.field.to_field()?;
        let [a, b] = self.dim;
        let mats = self.mats.iter().map(|m| matrix_from_json(field, b, a, m)).collect::<Result<Vec<_>>>()?;
        KroneckerRep::new(self.r, DimVector::new(a, b), field, mats)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VertexJson {
    pub addr: Vec<usize>,
    pub dim: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct EdgeJson {
    pub src: Vec<usize>,
    pub dst: Vec<usize>,
    pub color: usize,
    pub mat: MatrixJson,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TreeJson {
    pub r: usize,
    #[serde(default = "rational")]
    pub field: FieldJson,
    pub vertices: Vec<VertexJson>,
    pub edges: Vec<EdgeJson>,
}

fn rational() -> FieldJson {
    FieldJson::Q
}

impl From<&TreeRep> for TreeJson {
    fn from(t: &TreeRep) -> TreeJson {
        TreeJson {
            r: t.r(),
            field: t.field().into(),
            vertices: t
                .dims()
                .iter()
                .map(|(v, &dim)| VertexJson {
                    addr: v.colors().collect(),
                    dim,
                })
                .collect(),
            edges: t
                .arrows()
                .iter()
                .map(|(a, m)| EdgeJson {
                    src: a.tail.colors().collect(),
                    dst: a.head.colors().collect(),
                    color: a.tail.edge_color(&a.head).expect("arrows join neighbors"),
                    mat: matrix_to_json(m),
                })
                .collect(),
        }
    }
}

impl TreeJson {
    pub fn to_tree(&self) -> Result<TreeRep> {
        let field = self.field.to_field()?;
        let mut dims = BTreeMap::new();
        for v in &self.vertices {
            if dims.insert(Addr::from_colors(self.r, &v.addr)?, v.dim).is_some() {
                return Err(Error::Parse(format!("vertex {:?} listed twice", v.addr)));
            }
        }
        let mut arrows = BTreeMap::new();
        for e in &self.edges {
            let (src, dst) = (Addr::from_colors(self.r, &e.src)?, Addr::from_colors(self.r, &e.dst)?);
            if src.edge_color(&dst) != Some(e.color) {
                return Err(Error::Parse(format!("edge {:?} -> {:?} does not have color {}", e.src, e.dst, e.color)));
            }
            let rows = dims.get(&dst).copied().unwrap_or(0);
            let cols = dims.get(&src).copied().unwrap_or(0);
            let m = matrix_from_json(field, rows, cols, &e.mat)?;
            if arrows.insert(Arrow::new(src, dst), m).is_some() {
                return Err(Error::Parse(format!("edge {:?} -> {:?} listed twice", e.src, e.dst)));
            }
        }
        TreeRep::new(self.r, field, dims, arrows)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum CertificateJson {
    Vacuous,
    Echelon { shifts: Vec<usize> },
    InjCover { tree: TreeJson },
    Sampled { samples: usize, seed: u64 },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct JordanJson {
    pub c: usize,
    pub d: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct WitnessJson {
    pub mode: String,
    pub jordan: JordanJson,
    pub rep: RepJson,
    pub certificate: CertificateJson,
    pub evidence: String,
    pub trace: Vec<String>,
}

impl From<&CertifiedWitness> for WitnessJson {
    fn from(w: &CertifiedWitness) -> WitnessJson {
        WitnessJson {
            mode: w.mode.to_string(),
            jordan: JordanJson {
                c: w.jordan.c,
                d: w.jordan.d,
            },
            rep: (&w.rep).into(),
            certificate: match &w.certificate {
                EkpCertificate::Vacuous => CertificateJson::Vacuous,
                EkpCertificate::Echelon { shifts } => CertificateJson::Echelon { shifts: shifts.clone() },
                EkpCertificate::InjCover { tree } => CertificateJson::InjCover { tree: tree.into() },
                EkpCertificate::Sampled { samples, seed } => CertificateJson::Sampled {
                    samples: *samples,
                    seed: *seed,
                },
            },
            evidence: w.evidence.to_string(),
            trace: w.trace.clone(),
        }
    }
}

impl WitnessJson {
    pub fn to_witness(&self) -> Result<CertifiedWitness> {
        let mode = match self.mode.as_str() {
            "ekp" => Mode::Ekp,
            "eip" => Mode::Eip,
            other => return Err(Error::Parse(format!("unknown mode {other:?}"))),
        };
        let evidence = match self.evidence.as_str() {
            "brick" => IndecEvidence::Brick,
            "local-endo" => IndecEvidence::LocalEndo,
            "cover-indec" => IndecEvidence::CoverIndec,
            other => return Err(Error::Parse(format!("unknown evidence {other:?}"))),
        };
        let certificate = match &self.certificate {
            CertificateJson::Vacuous => EkpCertificate::Vacuous,
            CertificateJson::Echelon { shifts } => EkpCertificate::Echelon { shifts: shifts.clone() },
            CertificateJson::InjCover { tree } => EkpCertificate::InjCover { tree: tree.to_tree()? },
            CertificateJson::Sampled { samples, seed } => EkpCertificate::Sampled {
                samples: *samples,
                seed: *seed,
            },
        };
        Ok(CertifiedWitness {
            rep: self.rep.to_rep()?,
            mode,
            jordan: JordanType::new(self.jordan.c, self.jordan.d),
            certificate,
            evidence,
            trace: self.trace.clone(),
        })
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CheckJson {
    pub name: String,
    pub verdict: bool,
    pub detail: serde_json::Value,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ReportJson {
    pub checks: Vec<CheckJson>,
    pub seed: u64,
    pub samples: usize,
}

impl ReportJson {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.verdict)
    }
}

pub fn from_str<T: DeserializeOwned>(s: &str) -> Result<T> {
    serde_json::from_str(s).map_err(|e| Error::Parse(e.to_string()))
}

pub fn to_string<T: Serialize>(value: &T) -> String {
    serde_json::to_string_pretty(value).expect("plain data serializes")
}
