use serde::{Deserialize, Serialize};

use crate::error::Error;
use crate::matrix::Matrix;
use crate::report::CheckReport;
use crate::scalar::Scalar;

/// A finite dimensional unital associative algebra presented by structure
/// constants over a labelled basis. Nothing is assumed: [`check_algebra`]
/// verifies associativity and the unit law and reports the first witness when
/// either fails.
///
/// Internally the multiplication is stored as the family of left
/// multiplication matrices `L_i` (column `j` of `L_i` holds the coordinates
/// of `e_i · e_j`), which is also exactly the left regular action.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AlgebraData {
    basis: Vec<String>,
    unit: Vec<Scalar>,
    left_mult: Vec<Matrix>,
}

impl AlgebraData {
    /// Build from sparse multiplication triples `(i, j, k, c)` meaning
    /// `e_i · e_j = Σ_k c·e_k`; omitted coefficients are zero.
    pub fn new(
        basis: Vec<String>,
        unit: Vec<Scalar>,
        mult: &[(usize, usize, usize, Scalar)],
    ) -> Result<Self, Error> {
        let dim = basis.len();
        if dim == 0 {
            return Err(Error::bad("algebra must have positive dimension"));
        }
        for label in &basis {
            if label.is_empty()
                || label.chars().any(|c| c.is_whitespace() || "⊗+-".contains(c))
            {
                return Err(Error::bad(format!(
                    "basis label {label:?} is empty or contains whitespace, '⊗', '+', or '-'"
                )));
            }
        }
        {
            let mut seen = std::collections::BTreeSet::new();
            for label in &basis {
                if !seen.insert(label) {
                    return Err(Error::bad(format!("duplicate basis label {label:?}")));
                }
            }
        }
        if unit.len() != dim {
            return Err(Error::dim(format!(
                "unit vector has length {} but dimension is {dim}",
                unit.len()
            )));
        }
        let mut left_mult = vec![Matrix::zero(dim, dim); dim];
        for &(i, j, k, ref c) in mult {
            if i >= dim || j >= dim || k >= dim {
                return Err(Error::bad(format!(
                    "multiplication triple ({i}, {j}, {k}) out of range for dimension {dim}"
                )));
            }
            left_mult[i].add_to(k, j, c);
        }
        Ok(AlgebraData {
            basis,
            unit,
            left_mult,
        })
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn labels(&self) -> &[String] {
        &self.basis
    }

    pub fn label(&self, i: usize) -> &str {
        &self.basis[i]
    }

    pub fn unit(&self) -> &[Scalar] {
        &self.unit
    }

    /// Coordinates of `e_i · e_j`.
    pub fn product_basis(&self, i: usize, j: usize) -> Vec<Scalar> {
        (0..self.dim()).map(|k| self.left_mult[i].get(k, j)).collect()
    }

    /// Product of two coordinate vectors.
    pub fn mult(&self, u: &[Scalar], v: &[Scalar]) -> Vec<Scalar> {
        assert_eq!(u.len(), self.dim(), "left factor dimension");
        assert_eq!(v.len(), self.dim(), "right factor dimension");
        let mut out = vec![Scalar::zero(); self.dim()];
        for (i, ui) in u.iter().enumerate() {
            if ui.is_zero() {
                continue;
            }
            let lv = self.left_mult[i].apply(v);
            for (o, x) in out.iter_mut().zip(lv) {
                *o += &x * ui;
            }
        }
        out
    }

    /// Left multiplication by the element with coordinates `u`.
    pub fn left_mult_matrix(&self, u: &[Scalar]) -> Matrix {
        assert_eq!(u.len(), self.dim(), "element dimension");
        let mut m = Matrix::zero(self.dim(), self.dim());
        for (i, ui) in u.iter().enumerate() {
            if !ui.is_zero() {
                m = m.add(&self.left_mult[i].scale(ui));
            }
        }
        m
    }

    /// Right multiplication by the element with coordinates `u`.
    pub fn right_mult_matrix(&self, u: &[Scalar]) -> Matrix {
        assert_eq!(u.len(), self.dim(), "element dimension");
        let mut m = Matrix::zero(self.dim(), self.dim());
        for j in 0..self.dim() {
            let mut ej = vec![Scalar::zero(); self.dim()];
            ej[j] = Scalar::one();
            let col = self.mult(&ej, u);
            for (k, v) in col.into_iter().enumerate() {
                if !v.is_zero() {
                    m.set(k, j, v);
                }
            }
        }
        m
    }

    /// Left multiplication matrix of the `i`-th basis vector (the left
    /// regular action of the basis).
    pub fn basis_left_mult(&self, i: usize) -> &Matrix {
        &self.left_mult[i]
    }

    /// The multiplication as a linear map `A ⊗ A → A`: column `i·dim + j`
    /// holds `e_i · e_j` under the global flat-index convention.
    pub fn mult_matrix(&self) -> Matrix {
        let d = self.dim();
        let mut m = Matrix::zero(d, d * d);
        for i in 0..d {
            for (k, j, v) in self.left_mult[i].iter() {
                m.set(k, i * d + j, v.clone());
            }
        }
        m
    }

    /// Sparse multiplication triples `(i, j, k, c)`, deterministic order.
    pub fn mult_triples(&self) -> Vec<(usize, usize, usize, Scalar)> {
        let mut out = Vec::new();
        for i in 0..self.dim() {
            for (k, j, v) in self.left_mult[i].iter() {
                out.push((i, j, k, v.clone()));
            }
            out[..].sort_by_key(|&(a, b, c, _)| (a, b, c));
        }
        out.sort_by(|a, b| (a.0, a.1, a.2).cmp(&(b.0, b.1, b.2)));
        out
    }

    pub fn is_commutative(&self) -> bool {
        let d = self.dim();
        for i in 0..d {
            for j in (i + 1)..d {
                if self.product_basis(i, j) != self.product_basis(j, i) {
                    return false;
                }
            }
        }
        true
    }
}

/// Verify associativity on all basis triples and the two-sided unit law,
/// with the first violating basis labels as witness.
pub fn check_algebra(a: &AlgebraData) -> CheckReport {
    let d = a.dim();
    let mut report = CheckReport::new();

    let mut assoc_witness: Option<(usize, usize, usize)> = None;
    'outer: for i in 0..d {
        for j in 0..d {
            let ij = a.product_basis(i, j);
            for k in 0..d {
                let mut ek = vec![Scalar::zero(); d];
                ek[k] = Scalar::one();
                let left = a.mult(&ij, &ek);
                let mut ej = vec![Scalar::zero(); d];
                ej[j] = Scalar::one();
                let jk = a.mult(&ej, &ek);
                let mut ei = vec![Scalar::zero(); d];
                ei[i] = Scalar::one();
                let right = a.mult(&ei, &jk);
                if left != right {
                    assoc_witness = Some((i, j, k));
                    break 'outer;
                }
            }
        }
    }
    report.record("associativity", assoc_witness.is_none(), || {
        let (i, j, k) = assoc_witness.unwrap();
        format!(
            "(e_i·e_j)·e_k differs from e_i·(e_j·e_k) at ({}, {}, {})",
            a.label(i),
            a.label(j),
            a.label(k)
        )
    });

    let mut unit_witness: Option<(&str, usize)> = None;
    for j in 0..d {
        let mut ej = vec![Scalar::zero(); d];
        ej[j] = Scalar::one();
        if a.mult(a.unit(), &ej) != ej {
            unit_witness = Some(("left", j));
            break;
        }
        if a.mult(&ej, a.unit()) != ej {
            unit_witness = Some(("right", j));
            break;
        }
    }
    report.record("unit", unit_witness.is_none(), || {
        let (side, j) = unit_witness.unwrap();
        format!("{side} unit law fails on basis vector {}", a.label(j))
    });

    report
}

/// Outcome of the trace-form semisimplicity test.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TraceFormReport {
    pub semisimple: bool,
    pub gram_rank: usize,
    pub dim: usize,
}

/// Semisimplicity over the rationals via the trace form of the left regular
/// representation: the Gram matrix `G[i][j] = tr(L_i · L_j)` is nondegenerate
/// exactly when the algebra is semisimple (characteristic zero).
pub fn semisimple_via_trace_form(a: &AlgebraData) -> TraceFormReport {
    let d = a.dim();
    let mut gram = Matrix::zero(d, d);
    for i in 0..d {
        for j in 0..d {
            let prod = a.basis_left_mult(i).mul(a.basis_left_mult(j));
            gram.set(i, j, prod.trace());
        }
    }
    let rank = gram.rank();
    TraceFormReport {
        semisimple: rank == d,
        gram_rank: rank,
        dim: d,
    }
}

/// Check that the covector `eps` is an augmentation: an algebra map to the
/// ground field, i.e. multiplicative on basis pairs and sending the unit
/// to 1.
pub fn check_augmentation(a: &AlgebraData, eps: &[Scalar]) -> CheckReport {
    assert_eq!(eps.len(), a.dim(), "covector dimension");
    let d = a.dim();
    let mut report = CheckReport::new();

    let apply = |v: &[Scalar]| -> Scalar {
        v.iter()
            .zip(eps.iter())
            .map(|(vi, ei)| vi * ei)
            .sum()
    };

    let unit_ok = apply(a.unit()).is_one();
    report.record("sends unit to 1", unit_ok, || {
        format!("value on the unit is {}", apply(a.unit()))
    });

    let mut witness: Option<(usize, usize)> = None;
    'outer: for i in 0..d {
        for j in 0..d {
            let prod = a.product_basis(i, j);
            if apply(&prod) != &eps[i] * &eps[j] {
                witness = Some((i, j));
                break 'outer;
            }
        }
    }
    report.record("multiplicative on basis pairs", witness.is_none(), || {
        let (i, j) = witness.unwrap();
        format!("fails on ({}, {})", a.label(i), a.label(j))
    });

    report
}
