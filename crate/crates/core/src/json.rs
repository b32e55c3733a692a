//! Serde schemas for every object that crosses the CLI boundary, plus file
//! loaders for them.
//!
//! One convention rules all payloads: scalars are the strings `"p/q"` (or
//! `"p"` when the denominator is 1), indices are 0-based, omitted sparse
//! entries are zero, and flat indices put the leftmost tensor leg most
//! significant. Sparse entries serialize as arrays, so a multiplication
//! triple appears as `[i, j, k, "c"]`.

use std::fs;
use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::algebra::AlgebraData;
use crate::comodule::ComoduleAlgebraData;
use crate::error::Error;
use crate::group::GroupTable;
use crate::hopf::HopfData;
use crate::rmatrix::RMatrix;
use crate::scalar::Scalar;
use crate::solver::SolutionReport;
use crate::tensor::TensorElement;

/// Structure constants of an algebra. `mult` entries `[i, j, k, "c"]` mean
/// `e_i · e_j ∋ c·e_k`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AlgebraJson {
    pub dim: usize,
    pub basis: Vec<String>,
    pub unit: Vec<Scalar>,
    pub mult: Vec<(usize, usize, usize, Scalar)>,
}

impl AlgebraJson {
    pub fn from_data(a: &AlgebraData) -> Self {
        AlgebraJson {
            dim: a.dim(),
            basis: a.labels().to_vec(),
            unit: a.unit().to_vec(),
            mult: a.mult_triples(),
        }
    }

    pub fn into_data(self) -> Result<AlgebraData, Error> {
        if self.dim != self.basis.len() {
            return Err(Error::dim(format!(
                "dim field is {} but {} basis labels are given",
                self.dim,
                self.basis.len()
            )));
        }
        AlgebraData::new(self.basis, self.unit, &self.mult)
    }
}

/// Structure constants of a Hopf algebra, extending [`AlgebraJson`] with
/// `comult` entries `[i, j, k, "c"]` meaning `Δ(e_i) ∋ c·e_j⊗e_k` and
/// `antipode` entries `[i, j, "c"]` meaning `S(e_j) ∋ c·e_i`. The optional
/// `rmatrix` field carries a quasitriangular structure as a sparse `H⊗H`
/// coefficient list; it is certified on load.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct HopfJson {
    pub dim: usize,
    pub basis: Vec<String>,
    pub unit: Vec<Scalar>,
    pub mult: Vec<(usize, usize, usize, Scalar)>,
    pub comult: Vec<(usize, usize, usize, Scalar)>,
    pub counit: Vec<Scalar>,
    pub antipode: Vec<(usize, usize, Scalar)>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub rmatrix: Option<Vec<(usize, usize, Scalar)>>,
}

impl HopfJson {
    pub fn from_data(h: &HopfData, r: Option<&RMatrix>) -> Self {
        let mut antipode: Vec<(usize, usize, Scalar)> = h
            .antipode_matrix()
            .iter()
            .map(|(i, j, c)| (i, j, c.clone()))
            .collect();
        antipode.sort_by(|a, b| (a.0, a.1).cmp(&(b.0, b.1)));
        HopfJson {
            dim: h.dim(),
            basis: h.labels().to_vec(),
            unit: h.algebra().unit().to_vec(),
            mult: h.algebra().mult_triples(),
            comult: h.comult_triples(),
            counit: h.counit().to_vec(),
            antipode,
            rmatrix: r.map(|r| tensor_to_pairs(r.element())),
        }
    }

    pub fn hopf(&self) -> Result<HopfData, Error> {
        let algebra = AlgebraJson {
            dim: self.dim,
            basis: self.basis.clone(),
            unit: self.unit.clone(),
            mult: self.mult.clone(),
        }
        .into_data()?;
        HopfData::new(algebra, &self.comult, self.counit.clone(), &self.antipode)
    }

    /// The embedded R-matrix, certified against `h`, when present.
    pub fn rmatrix(&self, h: &HopfData) -> Result<Option<RMatrix>, Error> {
        match &self.rmatrix {
            None => Ok(None),
            Some(pairs) => {
                let element = tensor_from_pairs(h.dim(), h.dim(), pairs)?;
                RMatrix::new(h, element).map(Some)
            }
        }
    }
}

/// The host of a comodule algebra: either a path to a Hopf algebra file
/// (resolved relative to the referencing file) or the inline data.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum HostRef {
    Path(String),
    Inline(HopfJson),
}

/// A comodule algebra: the host, the coefficient algebra, and `coaction`
/// entries `[j, i, k, "c"]` meaning `δ(f_j) ∋ c·e_i⊗f_k`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ComoduleJson {
    pub host: HostRef,
    pub algebra: AlgebraJson,
    pub coaction: Vec<(usize, usize, usize, Scalar)>,
}

impl ComoduleJson {
    pub fn inline(c: &ComoduleAlgebraData) -> Self {
        ComoduleJson {
            host: HostRef::Inline(HopfJson::from_data(c.host(), None)),
            algebra: AlgebraJson::from_data(c.algebra()),
            coaction: c.coaction_triples(),
        }
    }

    pub fn with_host_path(c: &ComoduleAlgebraData, path: impl Into<String>) -> Self {
        ComoduleJson {
            host: HostRef::Path(path.into()),
            algebra: AlgebraJson::from_data(c.algebra()),
            coaction: c.coaction_triples(),
        }
    }

    /// Materialize, resolving a host path relative to `base_dir`.
    pub fn resolve(&self, base_dir: &Path) -> Result<ComoduleAlgebraData, Error> {
        let host = match &self.host {
            HostRef::Inline(j) => j.hopf()?,
            HostRef::Path(p) => read_hopf_file(&base_dir.join(p))?.0,
        };
        let algebra = self.algebra.clone().into_data()?;
        ComoduleAlgebraData::new(host, algebra, &self.coaction)
    }
}

/// A finite group presented by its multiplication table: `table[i][j]` is
/// the index of the product of elements `i` and `j`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GroupJson {
    pub order: usize,
    pub table: Vec<Vec<usize>>,
    pub labels: Vec<String>,
}

impl GroupJson {
    pub fn from_table(g: &GroupTable) -> Self {
        GroupJson {
            order: g.order(),
            table: (0..g.order())
                .map(|i| (0..g.order()).map(|j| g.mul(i, j)).collect())
                .collect(),
            labels: g.labels().to_vec(),
        }
    }

    pub fn into_table(self) -> Result<GroupTable, Error> {
        if self.order != self.labels.len() {
            return Err(Error::dim(format!(
                "order field is {} but {} labels are given",
                self.order,
                self.labels.len()
            )));
        }
        GroupTable::new(self.labels, self.table)
    }
}

/// Sparse coefficient list of a two-leg tensor (an element of `H⊗H` or
/// `H⊗B`): entries `(i, j, c)`.
pub fn tensor_to_pairs(t: &TensorElement) -> Vec<(usize, usize, Scalar)> {
    assert_eq!(t.dims().len(), 2, "sparse pair form needs two legs");
    t.support()
        .into_iter()
        .map(|(idx, c)| (idx[0], idx[1], c.clone()))
        .collect()
}

pub fn tensor_from_pairs(
    d0: usize,
    d1: usize,
    pairs: &[(usize, usize, Scalar)],
) -> Result<TensorElement, Error> {
    let mut t = TensorElement::zero(vec![d0, d1]);
    for (i, j, c) in pairs {
        if *i >= d0 || *j >= d1 {
            return Err(Error::bad(format!(
                "sparse entry ({i}, {j}) out of range for dimensions {d0}×{d1}"
            )));
        }
        let sum = t.get(&[*i, *j]) + c;
        t.set(&[*i, *j], sum);
    }
    Ok(t)
}

/// One trace in a signature payload.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SignatureEntryJson {
    pub word: String,
    pub trace: Scalar,
}

pub fn signature_json(sig: &[(String, Scalar)]) -> Vec<SignatureEntryJson> {
    sig.iter()
        .map(|(word, trace)| SignatureEntryJson {
            word: word.clone(),
            trace: trace.clone(),
        })
        .collect()
}

/// A parametric solution family: nonzero coordinate polynomials keyed by
/// `(i, j)` in `H⊗B`, rendered with parameters `t1, …, tp`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FamilyJson {
    pub parameters: usize,
    pub coefficients: Vec<(usize, usize, String)>,
    pub sample: Option<Vec<(usize, usize, Scalar)>>,
    pub determinant: Option<String>,
}

/// The full classifier output, including the audit trace.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SolutionReportJson {
    pub status: String,
    pub solutions: Vec<Vec<(usize, usize, Scalar)>>,
    pub solutions_display: Vec<String>,
    pub families: Vec<FamilyJson>,
    pub residual: Vec<String>,
    pub trace: Vec<String>,
}

pub fn solution_report_json(
    report: &SolutionReport,
    h: &HopfData,
    b: &AlgebraData,
) -> SolutionReportJson {
    let db = b.dim();
    SolutionReportJson {
        status: report.status.to_string(),
        solutions: report.solutions.iter().map(tensor_to_pairs).collect(),
        solutions_display: report
            .solutions
            .iter()
            .map(|k| k.display(&[h.algebra(), b]))
            .collect(),
        families: report
            .families
            .iter()
            .map(|f| FamilyJson {
                parameters: f.parameters,
                coefficients: f
                    .coefficients
                    .iter()
                    .enumerate()
                    .filter(|(_, p)| !p.is_zero())
                    .map(|(q, p)| (q / db, q % db, p.to_string()))
                    .collect(),
                sample: f.sample.as_ref().map(tensor_to_pairs),
                determinant: f.determinant.as_ref().map(|p| p.to_string()),
            })
            .collect(),
        residual: report
            .residual
            .as_ref()
            .map(|sys| sys.equations().iter().map(|p| p.to_string()).collect())
            .unwrap_or_default(),
        trace: report.trace.clone(),
    }
}

fn read_to_string(path: &Path) -> Result<String, Error> {
    fs::read_to_string(path)
        .map_err(|e| Error::bad(format!("cannot read {}: {e}", path.display())))
}

fn parse_file<T: for<'de> Deserialize<'de>>(path: &Path) -> Result<T, Error> {
    serde_json::from_str(&read_to_string(path)?)
        .map_err(|e| Error::Parse(format!("{}: {e}", path.display())))
}

pub fn read_algebra_file(path: &Path) -> Result<AlgebraData, Error> {
    let json: AlgebraJson = parse_file(path)?;
    json.into_data()
}

/// Load a Hopf algebra file without building anything: the raw schema, for
/// callers that need the uncertified R-matrix coefficients.
pub fn read_hopf_json(path: &Path) -> Result<HopfJson, Error> {
    parse_file(path)
}

/// Load a Hopf algebra file, together with its embedded R-matrix if one is
/// present. Both are certified structurally (shape checks) but not
/// axiomatically, except the R-matrix which can only be constructed
/// certified.
pub fn read_hopf_file(path: &Path) -> Result<(HopfData, Option<RMatrix>), Error> {
    let json: HopfJson = parse_file(path)?;
    let h = json.hopf()?;
    let r = json.rmatrix(&h)?;
    Ok((h, r))
}

/// Load a comodule algebra file, resolving a host path relative to the
/// file's own directory.
pub fn read_comodule_file(path: &Path) -> Result<ComoduleAlgebraData, Error> {
    let json: ComoduleJson = parse_file(path)?;
    let base = path.parent().unwrap_or_else(|| Path::new("."));
    json.resolve(base)
}

pub fn read_group_file(path: &Path) -> Result<GroupTable, Error> {
    let json: GroupJson = parse_file(path)?;
    json.into_table()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;
    use crate::group::symmetric3;
    use crate::solver::solve_k;
    use crate::tensor::parse_tensor_expression;

    #[test]
    fn hopf_schema_round_trips_with_rmatrix() {
        let entry = catalog::sweedler(Scalar::zero());
        let json = HopfJson::from_data(&entry.hopf, Some(&entry.rmatrix));
        let text = serde_json::to_string_pretty(&json).unwrap();
        let back: HopfJson = serde_json::from_str(&text).unwrap();
        let h = back.hopf().unwrap();
        assert_eq!(h, entry.hopf);
        let r = back.rmatrix(&h).unwrap().unwrap();
        assert_eq!(r.element(), entry.rmatrix.element());
    }

    #[test]
    fn hopf_schema_shape_is_the_documented_one() {
        let entry = catalog::sweedler(Scalar::one());
        let json = HopfJson::from_data(&entry.hopf, None);
        let value = serde_json::to_value(&json).unwrap();
        let obj = value.as_object().unwrap();
        for key in ["dim", "basis", "unit", "mult", "comult", "counit", "antipode"] {
            assert!(obj.contains_key(key), "missing key {key}");
        }
        assert!(!obj.contains_key("rmatrix"), "absent rmatrix must be omitted");
        // Sparse entries are arrays with string scalars.
        let first = &value["mult"][0];
        assert!(first[0].is_u64() && first[3].is_string());
        assert_eq!(value["counit"][0], serde_json::json!("1"));
    }

    #[test]
    fn comodule_schema_round_trips_inline_and_by_path() {
        let entry = catalog::sweedler(Scalar::zero());
        let carrier = entry.carrier("k[1,gx]").unwrap();
        let json = ComoduleJson::inline(&carrier.comodule);
        let text = serde_json::to_string(&json).unwrap();
        let back: ComoduleJson = serde_json::from_str(&text).unwrap();
        let resolved = back.resolve(Path::new(".")).unwrap();
        assert_eq!(resolved, carrier.comodule);

        let dir = std::env::temp_dir().join(format!("braidmorita-json-{}", std::process::id()));
        fs::create_dir_all(&dir).unwrap();
        let hopf_path = dir.join("host.json");
        let hopf_json = HopfJson::from_data(&entry.hopf, Some(&entry.rmatrix));
        fs::write(&hopf_path, serde_json::to_string(&hopf_json).unwrap()).unwrap();
        let by_path = ComoduleJson::with_host_path(&carrier.comodule, "host.json");
        let comodule_path = dir.join("carrier.json");
        fs::write(&comodule_path, serde_json::to_string(&by_path).unwrap()).unwrap();
        let loaded = read_comodule_file(&comodule_path).unwrap();
        assert_eq!(loaded, carrier.comodule);
        let (h, r) = read_hopf_file(&hopf_path).unwrap();
        assert_eq!(h, entry.hopf);
        assert_eq!(r.unwrap().element(), entry.rmatrix.element());
        let _ = fs::remove_dir_all(&dir);
    }

    #[test]
    fn group_schema_round_trips_and_validates() {
        let s3 = symmetric3();
        let json = GroupJson::from_table(&s3);
        let text = serde_json::to_string(&json).unwrap();
        let back: GroupJson = serde_json::from_str(&text).unwrap();
        let g = back.into_table().unwrap();
        assert_eq!(g.labels(), s3.labels());
        assert_eq!(g.mul(1, 2), s3.mul(1, 2));

        let broken = GroupJson {
            order: 2,
            table: vec![vec![0, 1], vec![1, 1]],
            labels: vec!["1".into(), "u".into()],
        };
        assert!(broken.into_table().is_err());
    }

    #[test]
    fn sparse_pairs_round_trip_and_accumulate() {
        let mut t = TensorElement::zero(vec![2, 3]);
        t.set(&[0, 2], Scalar::ratio(1, 2));
        t.set(&[1, 0], Scalar::from_int(-3));
        let pairs = tensor_to_pairs(&t);
        assert_eq!(tensor_from_pairs(2, 3, &pairs).unwrap(), t);
        let doubled = tensor_from_pairs(
            2,
            3,
            &[
                (0, 2, Scalar::ratio(1, 2)),
                (0, 2, Scalar::ratio(1, 2)),
            ],
        )
        .unwrap();
        assert_eq!(*doubled.get(&[0, 2]), Scalar::one());
        assert!(tensor_from_pairs(2, 3, &[(2, 0, Scalar::one())]).is_err());
    }

    #[test]
    fn signature_entries_serialize_with_string_traces() {
        let entries = signature_json(&[
            ("ε".into(), Scalar::from_int(16)),
            ("s1 t".into(), Scalar::ratio(-1, 2)),
        ]);
        let value = serde_json::to_value(&entries).unwrap();
        assert_eq!(
            value,
            serde_json::json!([
                { "word": "ε", "trace": "16" },
                { "word": "s1 t", "trace": "-1/2" },
            ])
        );
    }

    #[test]
    fn solution_report_serializes_solutions_and_trace() {
        let entry = catalog::sweedler(Scalar::one());
        let carrier = entry.carrier("k[1]").unwrap();
        let report = solve_k(&entry.rmatrix, &carrier.comodule);
        let json = solution_report_json(&report, &entry.hopf, carrier.comodule.algebra());
        assert_eq!(json.status, "FINITE");
        assert_eq!(json.solutions_display, vec!["1⊗1".to_string()]);
        assert_eq!(json.solutions, vec![vec![(0, 0, Scalar::one())]]);
        assert!(json.families.is_empty() && json.residual.is_empty());
        assert!(!json.trace.is_empty());
        // The display strings parse back against the factor labels.
        let parsed = parse_tensor_expression(
            &json.solutions_display[0],
            &[entry.hopf.algebra(), carrier.comodule.algebra()],
        )
        .unwrap();
        assert_eq!(parsed, report.solutions[0]);
    }
}
