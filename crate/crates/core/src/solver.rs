//! Exact solver for the K-matrix equations of a comodule algebra over a
//! quasitriangular host.
//!
//! The three axioms split by degree in the unknown K. The coaction splitting
//! and the intertwining law are linear, so they are imposed first as one
//! exact system whose null space parametrizes every candidate. Substituting
//! that parametrization into the coproduct splitting leaves polynomial
//! equations of total degree at most two, which are triaged by shape:
//! affine equations are eliminated exactly, idempotent-type equations
//! `x·(x − c) = 0` branch on their two roots, and annihilation-type
//! equations `x·y = 0` branch on the two factors. A branch whose equations
//! fall outside those shapes is reported as residual with its untouched
//! system rather than guessed at.

use crate::algebra::AlgebraData;
use crate::comodule::{ComoduleAlgebraData, KMatrix};
use crate::error::Error;
use crate::matrix::Matrix;
use crate::poly::{Poly, PolySystem};
use crate::rmatrix::RMatrix;
use crate::scalar::Scalar;
use crate::tensor::{embed, tensor_left_mult, tensor_mul, TensorElement};

/// How far the branching got.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SolveStatus {
    /// Every branch closed on rational points; `solutions` is complete.
    Finite,
    /// Some branch kept free parameters with all equations satisfied
    /// identically; those branches are reported as families.
    Parametric,
    /// Some branch produced an equation outside the supported shapes; its
    /// untriaged system is reported for audit.
    Residual,
}

impl std::fmt::Display for SolveStatus {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            SolveStatus::Finite => "FINITE",
            SolveStatus::Parametric => "PARAMETRIC",
            SolveStatus::Residual => "RESIDUAL",
        })
    }
}

/// A positive-dimensional solution branch: every point of the affine family
/// satisfies the K-matrix axioms, and invertibility cuts out the complement
/// of the determinant locus.
#[derive(Debug, Clone)]
pub struct ParametricFamily {
    /// Number of free parameters `t1..tp`.
    pub parameters: usize,
    /// Coordinates of K in the tensor basis of H⊗B, affine in the
    /// parameters.
    pub coefficients: Vec<Poly>,
    /// A rational point of the family certified by the full axiom check,
    /// when the search grid contained one.
    pub sample: Option<TensorElement>,
    /// Determinant of left multiplication by K as a polynomial in the
    /// parameters; the family's invertible points are its complement.
    /// Omitted above two parameters.
    pub determinant: Option<Poly>,
}

/// Outcome of [`solve_k`]: the status, every certified isolated solution,
/// any parametric families or residual system, and the branching trace.
#[derive(Debug, Clone)]
pub struct SolutionReport {
    pub status: SolveStatus,
    /// Isolated solutions, each certified against the full axiom check,
    /// deduplicated and canonically ordered.
    pub solutions: Vec<TensorElement>,
    pub families: Vec<ParametricFamily>,
    /// First unresolved system when the status is residual.
    pub residual: Option<PolySystem>,
    /// Audit log: linear reduction summary, every elimination and branch,
    /// and the fate of every leaf.
    pub trace: Vec<String>,
}

#[derive(Clone)]
enum VarState {
    Free,
    /// Affine expression in the variables that were still free at the time
    /// of elimination.
    Bound(Poly),
}

#[derive(Clone)]
struct Branch {
    states: Vec<VarState>,
    /// Elimination order, so leaves can back-substitute.
    order: Vec<usize>,
    system: PolySystem,
}

enum Leaf {
    /// Contradictory equations; nothing here.
    Dead,
    /// Every parameter determined; coordinates in the null-space basis.
    Point(Vec<Scalar>),
    /// Free parameters remain with no equations left. `values[m]` expresses
    /// the m-th null-space coordinate as an affine polynomial in the free
    /// variables.
    Family { values: Vec<Poly>, free: Vec<usize> },
    /// Equations outside the supported shapes.
    Stuck(PolySystem),
}

/// Solve the K-matrix equations for `(r, c)` by exact linear reduction and
/// quadratic branching. Never fails: branches the solver cannot finish are
/// reported as residual.
pub fn solve_k(r: &RMatrix, c: &ComoduleAlgebraData) -> SolutionReport {
    let h = c.host();
    let b = c.algebra();
    let dh = h.dim();
    let db = b.dim();
    assert_eq!(
        r.element().dims(),
        &[dh, dh][..],
        "R-matrix legs must match the comodule host"
    );
    let two: [&AlgebraData; 2] = [h.algebra(), b];
    let three: [&AlgebraData; 3] = [h.algebra(), h.algebra(), b];
    let n = dh * db;
    let mut trace = vec![format!(
        "unknowns: {n} coordinates of K in H⊗B (dim H = {dh}, dim B = {db})"
    )];

    let r21 = embed(&r.flipped(), &three, &[0, 1]).expect("embed R21");
    let r21_inv = embed(&r.inverse().swap(), &three, &[0, 1]).expect("embed R21 inverse");
    let r12 = embed(r.element(), &three, &[0, 1]).expect("embed R12");

    // Linear axioms, one column per coordinate of K: the coaction splitting
    // (id⊗δ)K = R21·K13·R12 stacked over the intertwining law with every
    // coaction image δ(b_j).
    let split_rows = dh * dh * db;
    let inter_rows = db * n;
    let mut lin = Matrix::zero(split_rows + inter_rows, n);
    let deltas: Vec<TensorElement> = (0..db).map(|j| c.coaction_basis(j)).collect();
    let split_map = Matrix::identity(dh).kron(c.coaction_matrix());
    for q in 0..n {
        let e_q = basis_element(dh, db, q);
        let lhs = split_map.apply(e_q.coeffs());
        let e13 = embed(&e_q, &three, &[0, 2]).expect("embed K13");
        let rhs = tensor_mul(&three, &tensor_mul(&three, &r21, &e13), &r12);
        for (row, (l, v)) in lhs.iter().zip(rhs.coeffs()).enumerate() {
            let d = l - v;
            if !d.is_zero() {
                lin.set(row, q, d);
            }
        }
        for (j, dj) in deltas.iter().enumerate() {
            let left = tensor_mul(&two, &e_q, dj);
            let right = tensor_mul(&two, dj, &e_q);
            for (i, (l, v)) in left.coeffs().iter().zip(right.coeffs()).enumerate() {
                let d = l - v;
                if !d.is_zero() {
                    lin.set(split_rows + j * n + i, q, d);
                }
            }
        }
    }
    let basis = lin.null_space();
    let p = basis.len();
    trace.push(format!(
        "coaction splitting and intertwining: {} linear equations, solution space of dimension {p}",
        split_rows + inter_rows
    ));
    if p == 0 {
        trace.push("only K = 0 satisfies the linear axioms; no invertible K exists".into());
        trace.push("status: FINITE, 0 solutions".into());
        return SolutionReport {
            status: SolveStatus::Finite,
            solutions: Vec::new(),
            families: Vec::new(),
            residual: None,
            trace,
        };
    }

    // Quadratic axiom on K(t) = Σ t_m·K_m: the coproduct splitting
    // (Δ⊗id)K = K23·R21·K13·R21⁻¹ is linear on the left and bilinear on
    // the right.
    let comult_map = h.comult_matrix().kron(&Matrix::identity(db));
    let lin_parts: Vec<Vec<Scalar>> = basis.iter().map(|v| comult_map.apply(v)).collect();
    let k13: Vec<TensorElement> = basis
        .iter()
        .map(|v| {
            let e = TensorElement::from_coeffs(vec![dh, db], v.clone());
            embed(&e, &three, &[0, 2]).expect("embed K13")
        })
        .collect();
    let k23: Vec<TensorElement> = basis
        .iter()
        .map(|v| {
            let e = TensorElement::from_coeffs(vec![dh, db], v.clone());
            embed(&e, &three, &[1, 2]).expect("embed K23")
        })
        .collect();
    let bilin: Vec<Vec<TensorElement>> = (0..p)
        .map(|m| {
            let front = tensor_mul(&three, &k23[m], &r21);
            (0..p)
                .map(|m2| tensor_mul(&three, &tensor_mul(&three, &front, &k13[m2]), &r21_inv))
                .collect()
        })
        .collect();
    let mut system = PolySystem::new(p);
    for l in 0..split_rows {
        let mut terms: Vec<(Vec<usize>, Scalar)> = Vec::new();
        for m in 0..p {
            terms.push((vec![m], lin_parts[m][l].clone()));
            for m2 in 0..p {
                terms.push((vec![m, m2], -&bilin[m][m2].coeffs()[l]));
            }
        }
        system.push(Poly::from_terms(terms));
    }
    let system = system.dedupe();
    trace.push(format!(
        "coproduct splitting: {} quadratic equations in {p} parameters after deduplication",
        system.equations().len()
    ));

    let root = Branch {
        states: vec![VarState::Free; p],
        order: Vec::new(),
        system,
    };
    let (leaves, branch_trace) = explore(root);
    trace.extend(branch_trace);

    let mut solutions: Vec<TensorElement> = Vec::new();
    let mut families: Vec<ParametricFamily> = Vec::new();
    let mut residual: Option<PolySystem> = None;
    let mut stuck = 0usize;
    for leaf in leaves {
        match leaf {
            Leaf::Dead => {}
            Leaf::Point(coords) => {
                let mut coeffs = vec![Scalar::zero(); n];
                for (m, t) in coords.iter().enumerate() {
                    if t.is_zero() {
                        continue;
                    }
                    for (i, bi) in basis[m].iter().enumerate() {
                        coeffs[i] += &(t * bi);
                    }
                }
                let elem = TensorElement::from_coeffs(vec![dh, db], coeffs);
                match KMatrix::new(r, c, elem.clone()) {
                    Ok(_) => {
                        trace.push(format!("certified {}", elem.display(&two)));
                        solutions.push(elem);
                    }
                    Err(Error::SingularMatrix) => trace.push(format!(
                        "rejected {}: not invertible in H⊗B",
                        elem.display(&two)
                    )),
                    Err(e) => trace.push(format!("rejected {}: {e}", elem.display(&two))),
                }
            }
            Leaf::Family { values, free } => {
                families.push(build_family(r, c, &basis, &values, &free, &mut trace));
            }
            Leaf::Stuck(sys) => {
                stuck += 1;
                if residual.is_none() {
                    residual = Some(sys);
                }
            }
        }
    }
    solutions.sort_by(|a, b| a.coeffs().cmp(b.coeffs()));
    solutions.dedup();

    let status = if stuck > 0 {
        SolveStatus::Residual
    } else if !families.is_empty() {
        SolveStatus::Parametric
    } else {
        SolveStatus::Finite
    };
    trace.push(match status {
        SolveStatus::Finite => format!("status: FINITE, {} solutions", solutions.len()),
        SolveStatus::Parametric => format!(
            "status: PARAMETRIC, {} families and {} isolated solutions",
            families.len(),
            solutions.len()
        ),
        SolveStatus::Residual => format!("status: RESIDUAL, {stuck} branches unresolved"),
    });
    SolutionReport {
        status,
        solutions,
        families,
        residual,
        trace,
    }
}

fn basis_element(dh: usize, db: usize, q: usize) -> TensorElement {
    let mut v = vec![Scalar::zero(); dh * db];
    v[q] = Scalar::one();
    TensorElement::from_coeffs(vec![dh, db], v)
}

/// Depth-first triage of one branch. Returns its leaves and trace lines in
/// a deterministic order: two-way branches are explored concurrently but
/// merged left before right.
fn explore(mut branch: Branch) -> (Vec<Leaf>, Vec<String>) {
    let mut trace = Vec::new();
    loop {
        if let Some(eq) = branch
            .system
            .equations()
            .iter()
            .find(|e| e.as_constant().is_some_and(|c| !c.is_zero()))
        {
            trace.push(format!("dead end: {eq} = 0 has no solution"));
            return (vec![Leaf::Dead], trace);
        }

        if branch.system.is_empty() {
            let (values, free) = resolve(&branch.states, &branch.order);
            if free.is_empty() {
                let point = values
                    .iter()
                    .map(|v| v.as_constant().expect("no free variables remain"))
                    .collect();
                return (vec![Leaf::Point(point)], trace);
            }
            trace.push(format!(
                "leaf: all equations satisfied with {} free parameter{}",
                free.len(),
                if free.len() == 1 { "" } else { "s" }
            ));
            return (vec![Leaf::Family { values, free }], trace);
        }

        // Affine equations never branch: eliminate the smallest variable.
        if let Some((var, expr, display)) = find_affine(&branch.system) {
            trace.push(format!("eliminate t{} = {expr} (from {display} = 0)", var + 1));
            branch.states[var] = VarState::Bound(expr.clone());
            branch.order.push(var);
            branch.system = branch.system.substitute_poly(var, &expr).dedupe();
            continue;
        }

        match find_branch_shape(&branch.system) {
            Some(Shape::Roots { var, roots, display }) => {
                if roots.len() == 1 {
                    let v = &roots[0];
                    trace.push(format!("forced t{} = {v} (from {display} = 0)", var + 1));
                    branch.states[var] = VarState::Bound(Poly::constant(v.clone()));
                    branch.order.push(var);
                    branch.system = branch.system.substitute(var, v).dedupe();
                    continue;
                }
                trace.push(format!(
                    "branch on {display} = 0: t{} ∈ {{{}, {}}}",
                    var + 1,
                    roots[0],
                    roots[1]
                ));
                let assign = |value: &Scalar| {
                    let mut next = branch.clone();
                    next.states[var] = VarState::Bound(Poly::constant(value.clone()));
                    next.order.push(var);
                    next.system = next.system.substitute(var, value).dedupe();
                    next
                };
                let left = assign(&roots[0]);
                let right = assign(&roots[1]);
                let ((mut lv, lt), (rv, rt)) =
                    rayon::join(|| explore(left), || explore(right));
                trace.extend(lt);
                trace.extend(rt);
                lv.extend(rv);
                return (lv, trace);
            }
            Some(Shape::Product { x, y, display }) => {
                trace.push(format!(
                    "branch on {display} = 0: t{} = 0 or t{} = 0",
                    x + 1,
                    y + 1
                ));
                let assign = |var: usize| {
                    let mut next = branch.clone();
                    next.states[var] = VarState::Bound(Poly::zero());
                    next.order.push(var);
                    next.system = next.system.substitute(var, &Scalar::zero()).dedupe();
                    next
                };
                let left = assign(x);
                let right = assign(y);
                let ((mut lv, lt), (rv, rt)) =
                    rayon::join(|| explore(left), || explore(right));
                trace.extend(lt);
                trace.extend(rt);
                lv.extend(rv);
                return (lv, trace);
            }
            None => {
                trace.push(format!(
                    "leaf: {} equation{} outside the supported shapes kept for audit",
                    branch.system.equations().len(),
                    if branch.system.equations().len() == 1 { "" } else { "s" }
                ));
                return (vec![Leaf::Stuck(branch.system)], trace);
            }
        }
    }
}

/// First affine equation, solved for its smallest variable.
fn find_affine(system: &PolySystem) -> Option<(usize, Poly, String)> {
    for eq in system.equations() {
        if eq.degree() != 1 {
            continue;
        }
        let var = *eq.variables().iter().next().expect("degree-one equation");
        let c = eq.coeff(&[var]);
        let rest = eq.sub(&Poly::from_terms([(vec![var], c.clone())]));
        let scale = -&c.inv().expect("linear coefficient is nonzero");
        return Some((var, rest.scale(&scale), eq.to_string()));
    }
    None
}

enum Shape {
    /// A single-variable quadratic with zero constant term: roots 0 and
    /// −c1/c2, deduplicated.
    Roots {
        var: usize,
        roots: Vec<Scalar>,
        display: String,
    },
    /// A pure two-variable product `a·x·y`.
    Product { x: usize, y: usize, display: String },
}

/// First equation matching a supported branching shape.
fn find_branch_shape(system: &PolySystem) -> Option<Shape> {
    for eq in system.equations() {
        let vars: Vec<usize> = eq.variables().into_iter().collect();
        if vars.len() == 1 && eq.degree() == 2 && eq.coeff(&[]).is_zero() {
            let x = vars[0];
            let c2 = eq.coeff(&[x, x]);
            let c1 = eq.coeff(&[x]);
            let mut roots = vec![Scalar::zero()];
            if !c1.is_zero() {
                roots.push(-&(&c1 * &c2.inv().expect("quadratic coefficient is nonzero")));
            }
            return Some(Shape::Roots {
                var: x,
                roots,
                display: eq.to_string(),
            });
        }
        if vars.len() == 2 && eq.terms().count() == 1 {
            return Some(Shape::Product {
                x: vars[0],
                y: vars[1],
                display: eq.to_string(),
            });
        }
    }
    None
}

/// Express every null-space coordinate as an affine polynomial in the
/// variables still free, by back-substituting eliminations in reverse
/// order. An elimination's expression only mentions variables free at its
/// time, so later-bound ones are already resolved when it is processed.
fn resolve(states: &[VarState], order: &[usize]) -> (Vec<Poly>, Vec<usize>) {
    let mut values: Vec<Poly> = states
        .iter()
        .enumerate()
        .map(|(m, s)| match s {
            VarState::Free => Poly::var(m),
            VarState::Bound(_) => Poly::zero(),
        })
        .collect();
    for &v in order.iter().rev() {
        let VarState::Bound(expr) = &states[v] else {
            unreachable!("ordered variables are bound");
        };
        let mut e = expr.clone();
        for w in e.variables() {
            if matches!(states[w], VarState::Bound(_)) {
                e = e.substitute_poly(w, &values[w]);
            }
        }
        values[v] = e;
    }
    let free = states
        .iter()
        .enumerate()
        .filter(|(_, s)| matches!(s, VarState::Free))
        .map(|(m, _)| m)
        .collect();
    (values, free)
}

/// Assemble a parametric leaf: coordinates of K(t) as affine polynomials in
/// the re-indexed free parameters, a certified rational sample point when
/// the search grid holds one, and the invertibility determinant for at most
/// two parameters.
fn build_family(
    r: &RMatrix,
    c: &ComoduleAlgebraData,
    basis: &[Vec<Scalar>],
    values: &[Poly],
    free: &[usize],
    trace: &mut Vec<String>,
) -> ParametricFamily {
    let dh = c.host().dim();
    let db = c.dim();
    let n = dh * db;
    let two: [&AlgebraData; 2] = [c.host().algebra(), c.algebra()];
    let f = free.len();

    let mut coefficients = vec![Poly::zero(); n];
    for (m, value) in values.iter().enumerate() {
        let remapped = reindex(value, free);
        for (i, bi) in basis[m].iter().enumerate() {
            if !bi.is_zero() {
                coefficients[i] = coefficients[i].add(&remapped.scale(bi));
            }
        }
    }

    let mut candidates: Vec<Vec<Scalar>> = [1i64, 2, 3, 5, 7]
        .iter()
        .map(|&v| vec![Scalar::from_int(v); f])
        .collect();
    candidates.push((0..f).map(|i| Scalar::from_int(i as i64 + 2)).collect());
    let point = |cand: &[Scalar]| {
        let coeffs: Vec<Scalar> = coefficients.iter().map(|p| p.evaluate(cand)).collect();
        TensorElement::from_coeffs(vec![dh, db], coeffs)
    };
    let mut sample = None;
    for cand in &candidates {
        let elem = point(cand);
        if KMatrix::new(r, c, elem.clone()).is_ok() {
            trace.push(format!("family sample {} certified", elem.display(&two)));
            sample = Some(elem);
            break;
        }
    }
    if sample.is_none() {
        trace.push("no certified sample point found on the search grid".into());
    }

    let determinant = if f <= 2 {
        let det = interpolate(f, n, &|cand| tensor_left_mult(&two, &point(cand)).determinant());
        trace.push(format!("invertibility locus: det = {det}"));
        Some(det)
    } else {
        trace.push(format!(
            "determinant omitted: {f} parameters exceed the interpolation bound of 2"
        ));
        None
    };

    ParametricFamily {
        parameters: f,
        coefficients,
        sample,
        determinant,
    }
}

/// Rename the free variables `free[i] ↦ t_i`. Processing in increasing
/// order is safe because `i ≤ free[i]` and the originals are strictly
/// increasing.
fn reindex(value: &Poly, free: &[usize]) -> Poly {
    let mut out = value.clone();
    for (i, &old) in free.iter().enumerate() {
        if i != old {
            out = out.substitute_poly(old, &Poly::var(i));
        }
    }
    out
}

/// Reconstruct a polynomial of per-variable degree at most `degree` in
/// `nvars` variables from evaluations, by recursive Lagrange interpolation
/// on the integer grid `{0, …, degree}^nvars`.
fn interpolate(nvars: usize, degree: usize, eval: &dyn Fn(&[Scalar]) -> Scalar) -> Poly {
    fn rec(
        point: &mut Vec<Scalar>,
        var: usize,
        nvars: usize,
        degree: usize,
        eval: &dyn Fn(&[Scalar]) -> Scalar,
    ) -> Poly {
        if var == nvars {
            return Poly::constant(eval(point));
        }
        let mut acc = Poly::zero();
        for a in 0..=degree {
            let av = Scalar::from_int(a as i64);
            point.push(av.clone());
            let slice = rec(point, var + 1, nvars, degree, eval);
            point.pop();
            let mut lagrange = Poly::constant(Scalar::one());
            for bnode in 0..=degree {
                if bnode == a {
                    continue;
                }
                let bv = Scalar::from_int(bnode as i64);
                let denom = (&av - &bv).inv().expect("grid nodes are distinct");
                lagrange =
                    lagrange.mul(&Poly::var(var).sub(&Poly::constant(bv)).scale(&denom));
            }
            acc = acc.add(&slice.mul(&lagrange));
        }
        acc
    }
    rec(&mut Vec::new(), 0, nvars, degree, eval)
}
