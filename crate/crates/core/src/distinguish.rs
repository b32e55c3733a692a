//! Invariant-based comparison of two K-matrix carriers over one host.
//!
//! The invariants are necessary conditions for braided Morita equivalence:
//! coefficient dimension, semisimplicity of the coefficient algebra, and the
//! braid-word trace signature of the induced type BC representation. A
//! difference in any of them separates the carriers for good; agreement is
//! reported as such, bounded by the search depth. Group-algebra inputs admit
//! one genuine sufficiency test: carriers built from conjugate
//! (subgroup, centralizer element) pairs are equivalent, and the conjugating
//! element is returned as a witness.

use crate::algebra::semisimple_via_trace_form;
use crate::braid::signature;
use crate::comodule::{ComoduleAlgebraData, KMatrix};
use crate::error::Error;
use crate::group::GroupTable;
use crate::hopf::HopfData;
use crate::rmatrix::RMatrix;
use crate::scalar::Scalar;

/// Search depth for the trace comparison: the braid index `n` of the type BC
/// representation and the maximum positive word length `max_len`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SearchParams {
    pub n: usize,
    pub max_len: usize,
}

impl Default for SearchParams {
    fn default() -> Self {
        SearchParams { n: 2, max_len: 3 }
    }
}

/// The invariant that separated two carriers.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Reason {
    Dimension { left: usize, right: usize },
    Semisimplicity { left: bool, right: bool },
    Trace { word: String, left: Scalar, right: Scalar },
}

impl std::fmt::Display for Reason {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Reason::Dimension { left, right } => write!(f, "dimension: {left} vs {right}"),
            Reason::Semisimplicity { left, right } => {
                let s = |b: bool| if b { "semisimple" } else { "not semisimple" };
                write!(f, "semisimplicity: {} vs {}", s(*left), s(*right))
            }
            Reason::Trace { word, left, right } => {
                write!(f, "trace({word}): {left} vs {right}")
            }
        }
    }
}

/// Outcome of [`distinguish`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Verdict {
    /// An invariant separates the carriers: not braided Morita equivalent.
    Distinguished(Reason),
    /// Conjugate group-algebra data: genuinely equivalent, witnessed by the
    /// labelled group element.
    Equivalent { conjugator: String },
    /// Every invariant agreed up to the given depth.
    NotDistinguished { n: usize, max_len: usize },
}

impl std::fmt::Display for Verdict {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Verdict::Distinguished(reason) => write!(f, "DISTINGUISHED({reason})"),
            Verdict::Equivalent { conjugator } => write!(f, "EQUIVALENT({conjugator})"),
            Verdict::NotDistinguished { n, max_len } => {
                write!(f, "NOT_DISTINGUISHED(n = {n}, L = {max_len})")
            }
        }
    }
}

/// Compare two K-matrix carriers over the same host by necessary-condition
/// invariants, in order of cost: dimension, then semisimplicity of the
/// coefficient algebra, then braid-word traces up to the search depth. For
/// group-algebra data the conjugacy oracle runs first and can certify
/// genuine equivalence. Symmetric in the two carriers up to swapping the
/// reported values.
pub fn distinguish(
    r: &RMatrix,
    left: (&ComoduleAlgebraData, &KMatrix),
    right: (&ComoduleAlgebraData, &KMatrix),
    params: SearchParams,
) -> Result<Verdict, Error> {
    let (cl, kl) = left;
    let (cr, kr) = right;
    if cl.host() != cr.host() {
        return Err(Error::HostMismatch);
    }
    let h = cl.host();

    if let Some(g) = group_structure(h) {
        if let (Some(pl), Some(pr)) = (group_pair(&g, cl, kl), group_pair(&g, cr, kr)) {
            if let Some(w) = conjugating_element(&g, &pl, &pr) {
                return Ok(Verdict::Equivalent {
                    conjugator: g.label(w).to_string(),
                });
            }
        }
    }

    if cl.dim() != cr.dim() {
        return Ok(Verdict::Distinguished(Reason::Dimension {
            left: cl.dim(),
            right: cr.dim(),
        }));
    }

    let sl = semisimple_via_trace_form(cl.algebra()).semisimple;
    let sr = semisimple_via_trace_form(cr.algebra()).semisimple;
    if sl != sr {
        return Ok(Verdict::Distinguished(Reason::Semisimplicity {
            left: sl,
            right: sr,
        }));
    }

    let sig_l = signature(h, r, cl, kl, params.n, params.max_len)?;
    let sig_r = signature(h, r, cr, kr, params.n, params.max_len)?;
    // Scan shortest words first so the reported witness is the simplest one.
    let mut order: Vec<usize> = (0..sig_l.len()).collect();
    order.sort_by_key(|&i| sig_l[i].0.split(' ').count());
    for i in order {
        let (word, tl) = &sig_l[i];
        let (_, tr) = &sig_r[i];
        if tl != tr {
            return Ok(Verdict::Distinguished(Reason::Trace {
                word: word.clone(),
                left: tl.clone(),
                right: tr.clone(),
            }));
        }
    }
    Ok(Verdict::NotDistinguished {
        n: params.n,
        max_len: params.max_len,
    })
}

/// Partition carriers into classes by running [`distinguish`] over all
/// pairs: two carriers share a class when no invariant separates them
/// (equivalent or not distinguished). Classes are sorted index lists,
/// ordered by their smallest member.
pub fn classify_carriers(
    r: &RMatrix,
    pairs: &[(&ComoduleAlgebraData, &KMatrix)],
    params: SearchParams,
) -> Result<Vec<Vec<usize>>, Error> {
    let n = pairs.len();
    let mut parent: Vec<usize> = (0..n).collect();
    fn root(parent: &mut Vec<usize>, mut i: usize) -> usize {
        while parent[i] != i {
            parent[i] = parent[parent[i]];
            i = parent[i];
        }
        i
    }
    for i in 0..n {
        for j in i + 1..n {
            let verdict = distinguish(r, pairs[i], pairs[j], params)?;
            if !matches!(verdict, Verdict::Distinguished(_)) {
                let (ri, rj) = (root(&mut parent, i), root(&mut parent, j));
                parent[ri.max(rj)] = ri.min(rj);
            }
        }
    }
    let mut classes: Vec<Vec<usize>> = Vec::new();
    let mut index_of: Vec<Option<usize>> = vec![None; n];
    for i in 0..n {
        let r = root(&mut parent, i);
        match index_of[r] {
            Some(c) => classes[c].push(i),
            None => {
                index_of[r] = Some(classes.len());
                classes.push(vec![i]);
            }
        }
    }
    Ok(classes)
}

/// Recognize a host whose basis is a group: every basis vector group-like,
/// products permutation-shaped with unit coefficients, and the table a
/// group. Returns the table with the host's labels.
fn group_structure(h: &HopfData) -> Option<GroupTable> {
    let d = h.dim();
    let a = h.algebra();
    let triples = h.comult_triples();
    if triples.len() != d {
        return None;
    }
    for (i, (src, l, r, c)) in triples.iter().enumerate() {
        if *src != i || *l != i || *r != i || *c != Scalar::one() {
            return None;
        }
    }
    if h.counit().iter().any(|c| *c != Scalar::one()) {
        return None;
    }
    let mut table = vec![vec![0usize; d]; d];
    for i in 0..d {
        for j in 0..d {
            table[i][j] = single_basis_product(&a.product_basis(i, j))?;
        }
    }
    let g = GroupTable::new(a.labels().to_vec(), table).ok()?;
    let mut unit = vec![Scalar::zero(); d];
    unit[g.identity()] = Scalar::one();
    (a.unit() == &unit[..]).then_some(g)
}

fn single_basis_product(col: &[Scalar]) -> Option<usize> {
    let mut hits = col.iter().enumerate().filter(|(_, v)| !v.is_zero());
    let (k, v) = hits.next()?;
    (hits.next().is_none() && *v == Scalar::one()).then_some(k)
}

/// Recognize a carrier of group shape over the recognized group: the
/// coefficient algebra is a subgroup algebra coacting diagonally, and K is
/// `a⊗1` for a single group element. Returns `(sorted subgroup, a)`.
fn group_pair(
    g: &GroupTable,
    c: &ComoduleAlgebraData,
    k: &KMatrix,
) -> Option<(Vec<usize>, usize)> {
    let db = c.dim();
    let mut elems = Vec::with_capacity(db);
    for j in 0..db {
        let delta = c.coaction_basis(j);
        let support = delta.support();
        if support.len() != 1 {
            return None;
        }
        let (idx, coeff) = &support[0];
        if idx[1] != j || **coeff != Scalar::one() {
            return None;
        }
        elems.push(idx[0]);
    }
    for i in 0..db {
        for j in 0..db {
            let k2 = single_basis_product(&c.algebra().product_basis(i, j))?;
            if g.mul(elems[i], elems[j]) != elems[k2] {
                return None;
            }
        }
    }
    let mut l = elems.clone();
    l.sort_unstable();
    l.dedup();
    if l.len() != db {
        return None;
    }

    let support = k.element().support();
    if support.len() != 1 {
        return None;
    }
    let (idx, coeff) = &support[0];
    if **coeff != Scalar::one() || elems[idx[1]] != g.identity() {
        return None;
    }
    let mut unit = vec![Scalar::zero(); db];
    unit[idx[1]] = Scalar::one();
    (c.algebra().unit() == &unit[..]).then_some((l, idx[0]))
}

/// Smallest group element conjugating one pair onto the other, if any.
fn conjugating_element(
    g: &GroupTable,
    left: &(Vec<usize>, usize),
    right: &(Vec<usize>, usize),
) -> Option<usize> {
    (0..g.order()).find(|&w| {
        let mut image: Vec<usize> = left.0.iter().map(|&x| g.conjugate(w, x)).collect();
        image.sort_unstable();
        image == right.0 && g.conjugate(w, left.1) == right.1
    })
}
