use serde::{Deserialize, Serialize};

use crate::algebra::{check_algebra, check_augmentation, AlgebraData};
use crate::error::Error;
use crate::matrix::Matrix;
use crate::report::CheckReport;
use crate::scalar::Scalar;
use crate::tensor::{tensor_mul, TensorElement};

/// A finite dimensional Hopf algebra presented by structure constants: an
/// [`AlgebraData`] together with comultiplication, counit, and antipode.
///
/// The comultiplication is stored as a `dim² × dim` matrix whose column `i`
/// is `Δ(e_i)` flattened over `H ⊗ H`; the antipode as a `dim × dim` matrix
/// whose column `i` is `S(e_i)`. Nothing is trusted: [`check_hopf`] verifies
/// every axiom and reports witnesses.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct HopfData {
    algebra: AlgebraData,
    comult: Matrix,
    counit: Vec<Scalar>,
    antipode: Matrix,
}

impl HopfData {
    /// Build from sparse data. Comultiplication triples `(i, j, k, c)` mean
    /// `Δ(e_i) ∋ c·e_j ⊗ e_k`; antipode triples `(i, j, c)` mean the matrix
    /// entry `S[i][j] = c`, i.e. `S(e_j) ∋ c·e_i`.
    pub fn new(
        algebra: AlgebraData,
        comult: &[(usize, usize, usize, Scalar)],
        counit: Vec<Scalar>,
        antipode: &[(usize, usize, Scalar)],
    ) -> Result<Self, Error> {
        let d = algebra.dim();
        if counit.len() != d {
            return Err(Error::dim(format!(
                "counit has length {} but dimension is {d}",
                counit.len()
            )));
        }
        let mut cm = Matrix::zero(d * d, d);
        for &(i, j, k, ref c) in comult {
            if i >= d || j >= d || k >= d {
                return Err(Error::bad(format!(
                    "comultiplication triple ({i}, {j}, {k}) out of range for dimension {d}"
                )));
            }
            cm.add_to(j * d + k, i, c);
        }
        let mut s = Matrix::zero(d, d);
        for &(i, j, ref c) in antipode {
            if i >= d || j >= d {
                return Err(Error::bad(format!(
                    "antipode entry ({i}, {j}) out of range for dimension {d}"
                )));
            }
            s.add_to(i, j, c);
        }
        Ok(HopfData {
            algebra,
            comult: cm,
            counit,
            antipode: s,
        })
    }

    pub fn from_parts(
        algebra: AlgebraData,
        comult: Matrix,
        counit: Vec<Scalar>,
        antipode: Matrix,
    ) -> Result<Self, Error> {
        let d = algebra.dim();
        if comult.nrows() != d * d || comult.ncols() != d {
            return Err(Error::dim("comultiplication matrix must be dim² × dim"));
        }
        if counit.len() != d || antipode.nrows() != d || antipode.ncols() != d {
            return Err(Error::dim("counit or antipode has wrong shape"));
        }
        Ok(HopfData {
            algebra,
            comult,
            counit,
            antipode,
        })
    }

    pub fn dim(&self) -> usize {
        self.algebra.dim()
    }

    pub fn algebra(&self) -> &AlgebraData {
        &self.algebra
    }

    pub fn labels(&self) -> &[String] {
        self.algebra.labels()
    }

    /// `Δ` as a `dim² × dim` matrix.
    pub fn comult_matrix(&self) -> &Matrix {
        &self.comult
    }

    /// `Δ(v)` as an element of `H ⊗ H`.
    pub fn comult_element(&self, v: &[Scalar]) -> TensorElement {
        TensorElement::from_coeffs(vec![self.dim(), self.dim()], self.comult.apply(v))
    }

    pub fn counit(&self) -> &[Scalar] {
        &self.counit
    }

    /// `ε` as a `1 × dim` matrix.
    pub fn counit_row(&self) -> Matrix {
        let mut m = Matrix::zero(1, self.dim());
        for (j, v) in self.counit.iter().enumerate() {
            if !v.is_zero() {
                m.set(0, j, v.clone());
            }
        }
        m
    }

    /// The unit as a `dim × 1` matrix.
    pub fn unit_col(&self) -> Matrix {
        let mut m = Matrix::zero(self.dim(), 1);
        for (i, v) in self.algebra.unit().iter().enumerate() {
            if !v.is_zero() {
                m.set(i, 0, v.clone());
            }
        }
        m
    }

    /// `S` as a `dim × dim` matrix.
    pub fn antipode_matrix(&self) -> &Matrix {
        &self.antipode
    }

    pub fn apply_antipode(&self, v: &[Scalar]) -> Vec<Scalar> {
        self.antipode.apply(v)
    }

    /// Sparse comultiplication triples `(i, j, k, c)`, deterministic order.
    pub fn comult_triples(&self) -> Vec<(usize, usize, usize, Scalar)> {
        let d = self.dim();
        let mut out: Vec<(usize, usize, usize, Scalar)> = self
            .comult
            .iter()
            .map(|(row, i, c)| (i, row / d, row % d, c.clone()))
            .collect();
        out.sort_by(|a, b| (a.0, a.1, a.2).cmp(&(b.0, b.1, b.2)));
        out
    }
}

/// Verify every Hopf algebra axiom: the underlying algebra, coassociativity,
/// the counit law, that `Δ` and `ε` are algebra maps, and the antipode law
/// `m ∘ (S ⊗ id) ∘ Δ = η ∘ ε = m ∘ (id ⊗ S) ∘ Δ`.
pub fn check_hopf(h: &HopfData) -> CheckReport {
    let d = h.dim();
    let alg = h.algebra();
    let mut report = check_algebra(alg);

    let id = Matrix::identity(d);
    let delta = h.comult_matrix();

    // Coassociativity: (Δ ⊗ id) ∘ Δ = (id ⊗ Δ) ∘ Δ as dim³ × dim matrices.
    let left = delta.kron(&id).mul(delta);
    let right = id.kron(delta).mul(delta);
    let coassoc_witness = first_column_difference(&left, &right);
    report.record("coassociativity", coassoc_witness.is_none(), || {
        format!(
            "(Δ⊗id)Δ and (id⊗Δ)Δ differ on basis vector {}",
            alg.label(coassoc_witness.unwrap())
        )
    });

    // Counit law: (ε ⊗ id) ∘ Δ = id = (id ⊗ ε) ∘ Δ.
    let eps = h.counit_row();
    let left = eps.kron(&id).mul(delta);
    let right = id.kron(&eps).mul(delta);
    let mut counit_witness = first_column_difference(&left, &id);
    let mut side = "left";
    if counit_witness.is_none() {
        counit_witness = first_column_difference(&right, &id);
        side = "right";
    }
    report.record("counit law", counit_witness.is_none(), || {
        format!(
            "{side} counit law fails on basis vector {}",
            alg.label(counit_witness.unwrap())
        )
    });

    // Δ is an algebra map: Δ(e_i · e_j) = Δ(e_i) · Δ(e_j) and Δ(1) = 1 ⊗ 1.
    let factors = [alg, alg];
    let mut delta_mult_witness: Option<(usize, usize)> = None;
    'outer: for i in 0..d {
        let di = h.comult_element(&basis_vec(d, i));
        for j in 0..d {
            let dj = h.comult_element(&basis_vec(d, j));
            let lhs = h.comult_element(&alg.product_basis(i, j));
            let rhs = tensor_mul(&factors, &di, &dj);
            if lhs != rhs {
                delta_mult_witness = Some((i, j));
                break 'outer;
            }
        }
    }
    let delta_unit_ok = h.comult_element(alg.unit()) == TensorElement::unit(&factors);
    report.record(
        "comultiplication is an algebra map",
        delta_mult_witness.is_none() && delta_unit_ok,
        || match delta_mult_witness {
            Some((i, j)) => format!(
                "Δ(e_i·e_j) ≠ Δ(e_i)Δ(e_j) at ({}, {})",
                alg.label(i),
                alg.label(j)
            ),
            None => "Δ(1) ≠ 1⊗1".to_string(),
        },
    );

    // ε is an algebra map.
    let eps_report = check_augmentation(alg, h.counit());
    report.record("counit is an algebra map", eps_report.passed(), || {
        eps_report
            .first_failure()
            .and_then(|c| c.witness.clone())
            .unwrap_or_default()
    });

    // Antipode law, both sides, as dim × dim matrix identities.
    let s = h.antipode_matrix();
    let mult = alg.mult_matrix();
    let target = h.unit_col().mul(&eps);
    let left = mult.mul(&s.kron(&id)).mul(delta);
    let right = mult.mul(&id.kron(s)).mul(delta);
    let left_witness = first_column_difference(&left, &target);
    report.record("antipode law (S ⊗ id)", left_witness.is_none(), || {
        format!(
            "m(S⊗id)Δ ≠ unit·ε on basis vector {}",
            alg.label(left_witness.unwrap())
        )
    });
    let right_witness = first_column_difference(&right, &target);
    report.record("antipode law (id ⊗ S)", right_witness.is_none(), || {
        format!(
            "m(id⊗S)Δ ≠ unit·ε on basis vector {}",
            alg.label(right_witness.unwrap())
        )
    });

    report
}

fn basis_vec(d: usize, i: usize) -> Vec<Scalar> {
    let mut v = vec![Scalar::zero(); d];
    v[i] = Scalar::one();
    v
}

fn first_column_difference(a: &Matrix, b: &Matrix) -> Option<usize> {
    debug_assert_eq!(a.ncols(), b.ncols());
    let diff = a.sub(b);
    diff.iter().map(|(_, j, _)| j).min()
}

/// The dual Hopf algebra on the dual basis: multiplication and
/// comultiplication trade places (as transposed structure tensors), unit and
/// counit trade places, and the antipode transposes. Applying this twice
/// returns the original data exactly.
pub fn dual_hopf(h: &HopfData) -> HopfData {
    let d = h.dim();
    let labels = h
        .labels()
        .iter()
        .map(|l| match l.strip_suffix('*') {
            Some(base) => base.to_string(),
            None => format!("{l}*"),
        })
        .collect();

    // Dual multiplication: (ξ_i · ξ_j)(e_k) = (ξ_i ⊗ ξ_j)(Δ e_k).
    let mut mult_triples = Vec::new();
    for (row, k, c) in h.comult_matrix().iter() {
        let (i, j) = (row / d, row % d);
        mult_triples.push((i, j, k, c.clone()));
    }
    let dual_algebra = AlgebraData::new(labels, h.counit().to_vec(), &mult_triples)
        .expect("dual algebra data is well-formed");

    // Dual comultiplication: Δ*(ξ_k) = Σ ξ_i ⊗ ξ_j with coefficient the
    // e_k-coordinate of e_i · e_j.
    let mut comult = Matrix::zero(d * d, d);
    for i in 0..d {
        for j in 0..d {
            for (k, c) in h.algebra().product_basis(i, j).iter().enumerate() {
                if !c.is_zero() {
                    comult.add_to(i * d + j, k, c);
                }
            }
        }
    }

    let counit = h.algebra().unit().to_vec();
    let antipode = h.antipode_matrix().transpose();
    HopfData::from_parts(dual_algebra, comult, counit, antipode)
        .expect("dual Hopf data is well-formed")
}

/// The inverse antipode as a matrix, or [`Error::SingularMatrix`] when the
/// antipode is not invertible (it always is for the inputs this crate
/// constructs, but user-supplied data gets checked honestly).
pub fn antipode_inverse(h: &HopfData) -> Result<Matrix, Error> {
    h.antipode_matrix().invert()
}
