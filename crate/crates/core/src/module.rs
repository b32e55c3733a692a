use crate::algebra::AlgebraData;
use crate::hopf::HopfData;
use crate::matrix::Matrix;
use crate::report::CheckReport;
use crate::scalar::Scalar;
use crate::tensor::TensorElement;

/// A finite dimensional left module over an algebra, stored as one action
/// matrix per basis element of the acting algebra.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ModuleAction {
    dim: usize,
    mats: Vec<Matrix>,
}

impl ModuleAction {
    pub fn new(dim: usize, mats: Vec<Matrix>) -> Self {
        for m in &mats {
            assert_eq!((m.nrows(), m.ncols()), (dim, dim), "action matrix shape");
        }
        ModuleAction { dim, mats }
    }

    /// The left regular module: the algebra acting on itself by left
    /// multiplication.
    pub fn regular(a: &AlgebraData) -> Self {
        ModuleAction {
            dim: a.dim(),
            mats: (0..a.dim()).map(|i| a.basis_left_mult(i).clone()).collect(),
        }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    /// Action matrix of the `i`-th basis element of the acting algebra.
    pub fn mat(&self, i: usize) -> &Matrix {
        &self.mats[i]
    }

    pub fn arity(&self) -> usize {
        self.mats.len()
    }

    /// Action of an arbitrary element of the acting algebra.
    pub fn act_element(&self, u: &[Scalar]) -> Matrix {
        assert_eq!(u.len(), self.mats.len(), "acting element dimension");
        let mut out = Matrix::zero(self.dim, self.dim);
        for (ui, m) in u.iter().zip(&self.mats) {
            if !ui.is_zero() {
                out = out.add(&m.scale(ui));
            }
        }
        out
    }
}

/// Verify that an action respects multiplication and the unit.
pub fn check_module_action(a: &AlgebraData, action: &ModuleAction) -> CheckReport {
    assert_eq!(action.arity(), a.dim(), "action arity");
    let mut report = CheckReport::new();
    let mut witness: Option<(usize, usize)> = None;
    'outer: for i in 0..a.dim() {
        for j in 0..a.dim() {
            let composed = action.mat(i).mul(action.mat(j));
            let product = action.act_element(&a.product_basis(i, j));
            if composed != product {
                witness = Some((i, j));
                break 'outer;
            }
        }
    }
    report.record("action respects multiplication", witness.is_none(), || {
        let (i, j) = witness.unwrap();
        format!("ρ(e_i)ρ(e_j) ≠ ρ(e_i·e_j) at ({}, {})", a.label(i), a.label(j))
    });
    let unit_ok = action.act_element(a.unit()).is_identity();
    report.record("unit acts as identity", unit_ok, || String::new());
    report
}

/// The operator `Σ t[(i,j)] · ρ_X(e_i) ⊗ ρ_M(e_j)` on `X ⊗ M`, for an
/// element `t` of the two-factor tensor product of the acting algebras.
pub fn act_two(t: &TensorElement, x: &ModuleAction, m: &ModuleAction) -> Matrix {
    assert_eq!(t.dims().len(), 2, "two-leg element expected");
    assert_eq!(t.dims()[0], x.arity(), "first leg arity");
    assert_eq!(t.dims()[1], m.arity(), "second leg arity");
    let total = x.dim() * m.dim();
    let mut out = Matrix::zero(total, total);
    for (idx, c) in t.support() {
        let term = x.mat(idx[0]).kron(m.mat(idx[1]));
        out = out.add(&term.scale(c));
    }
    out
}

/// The tensor product of two modules over a Hopf algebra, with `H` acting
/// through the comultiplication.
pub fn tensor_action(h: &HopfData, x: &ModuleAction, y: &ModuleAction) -> ModuleAction {
    assert_eq!(x.arity(), h.dim(), "first module lives over H");
    assert_eq!(y.arity(), h.dim(), "second module lives over H");
    let d = h.dim();
    let mut mats = Vec::with_capacity(d);
    for i in 0..d {
        let mut e = vec![Scalar::zero(); d];
        e[i] = Scalar::one();
        let delta_i = h.comult_element(&e);
        mats.push(act_two(&delta_i, x, y));
    }
    ModuleAction::new(x.dim() * y.dim(), mats)
}
