//! Finite groups presented by multiplication tables, their group algebras as
//! Hopf algebra hosts, the triangular structure attached to a central
//! involution, subgroup and centralizer enumeration, the K-matrices carried
//! by a subgroup coideal, and conjugacy classification of (subgroup,
//! centralizer element) pairs.

use std::collections::BTreeSet;

use crate::comodule::{coideal_subalgebra, ComoduleAlgebraData, KMatrix};
use crate::error::Error;
use crate::hopf::HopfData;
use crate::matrix::Matrix;
use crate::rmatrix::RMatrix;
use crate::scalar::Scalar;
use crate::tensor::TensorElement;
use crate::algebra::AlgebraData;

/// A finite group given by a full multiplication table over element indices.
/// Construction verifies closure shape, identity, associativity, and
/// inverses, so a value of this type is always an actual group.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GroupTable {
    name: String,
    labels: Vec<String>,
    table: Vec<Vec<usize>>,
    identity: usize,
    inverse: Vec<usize>,
}

impl GroupTable {
    pub fn new(labels: Vec<String>, table: Vec<Vec<usize>>) -> Result<Self, Error> {
        let n = labels.len();
        if n == 0 {
            return Err(Error::bad("group must have positive order"));
        }
        if table.len() != n || table.iter().any(|row| row.len() != n) {
            return Err(Error::bad(format!(
                "multiplication table must be {n}×{n}"
            )));
        }
        if table.iter().flatten().any(|&x| x >= n) {
            return Err(Error::NotAGroup {
                why: format!("table entry out of range for order {n}"),
            });
        }
        {
            let mut seen = BTreeSet::new();
            for label in &labels {
                if !seen.insert(label.clone()) {
                    return Err(Error::bad(format!("duplicate element label {label:?}")));
                }
            }
        }
        let identity = (0..n)
            .find(|&e| (0..n).all(|x| table[e][x] == x && table[x][e] == x))
            .ok_or_else(|| Error::NotAGroup {
                why: "no identity element".to_string(),
            })?;
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    if table[table[i][j]][k] != table[i][table[j][k]] {
                        return Err(Error::NotAGroup {
                            why: format!(
                                "associativity fails at ({}, {}, {})",
                                labels[i], labels[j], labels[k]
                            ),
                        });
                    }
                }
            }
        }
        let mut inverse = vec![0; n];
        for i in 0..n {
            inverse[i] = (0..n)
                .find(|&j| table[i][j] == identity && table[j][i] == identity)
                .ok_or_else(|| Error::NotAGroup {
                    why: format!("no inverse for {}", labels[i]),
                })?;
        }
        Ok(GroupTable {
            name: format!("G{n}"),
            labels,
            table,
            identity,
            inverse,
        })
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Self {
        self.name = name.into();
        self
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn order(&self) -> usize {
        self.labels.len()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, i: usize) -> &str {
        &self.labels[i]
    }

    pub fn identity(&self) -> usize {
        self.identity
    }

    pub fn mul(&self, i: usize, j: usize) -> usize {
        self.table[i][j]
    }

    pub fn inv(&self, i: usize) -> usize {
        self.inverse[i]
    }

    /// `g a g⁻¹`.
    pub fn conjugate(&self, g: usize, a: usize) -> usize {
        self.mul(self.mul(g, a), self.inv(g))
    }

    pub fn is_abelian(&self) -> bool {
        let n = self.order();
        (0..n).all(|i| (i..n).all(|j| self.mul(i, j) == self.mul(j, i)))
    }

    pub fn center(&self) -> Vec<usize> {
        let n = self.order();
        (0..n)
            .filter(|&a| (0..n).all(|x| self.mul(a, x) == self.mul(x, a)))
            .collect()
    }

    pub fn is_central(&self, a: usize) -> bool {
        (0..self.order()).all(|x| self.mul(a, x) == self.mul(x, a))
    }

    pub fn is_involution(&self, a: usize) -> bool {
        self.mul(a, a) == self.identity
    }
}

/// The group algebra as a Hopf algebra: group-like comultiplication,
/// counit 1 everywhere, antipode by inversion.
pub fn group_algebra(g: &GroupTable) -> HopfData {
    let n = g.order();
    let one = Scalar::one;
    let mut mult = Vec::with_capacity(n * n);
    for i in 0..n {
        for j in 0..n {
            mult.push((i, j, g.mul(i, j), one()));
        }
    }
    let mut unit = vec![Scalar::zero(); n];
    unit[g.identity()] = one();
    let algebra =
        AlgebraData::new(g.labels().to_vec(), unit, &mult).expect("group table is valid data");
    let comult: Vec<_> = (0..n).map(|i| (i, i, i, one())).collect();
    let antipode: Vec<_> = (0..n).map(|i| (g.inv(i), i, one())).collect();
    HopfData::new(algebra, &comult, vec![one(); n], &antipode)
        .expect("group Hopf data is well shaped")
}

/// The triangular structure `½(1⊗1 + 1⊗u + u⊗1 − u⊗u)` attached to a
/// central involution `u`. For `u = 1` the sum telescopes to `1⊗1`.
pub fn r_u(g: &GroupTable, u: usize) -> Result<RMatrix, Error> {
    if u >= g.order() {
        return Err(Error::bad(format!(
            "element index {u} out of range for order {}",
            g.order()
        )));
    }
    if !g.is_central(u) {
        return Err(Error::NotCentral {
            label: g.label(u).to_string(),
        });
    }
    if !g.is_involution(u) {
        return Err(Error::NotInvolution {
            label: g.label(u).to_string(),
        });
    }
    let n = g.order();
    let e = g.identity();
    let half = Scalar::ratio(1, 2);
    let mut elt = TensorElement::zero(vec![n, n]);
    let add = |t: &mut TensorElement, i: usize, j: usize, v: Scalar| {
        let cur = t.get(&[i, j]).clone();
        t.set(&[i, j], cur + v);
    };
    add(&mut elt, e, e, half.clone());
    add(&mut elt, e, u, half.clone());
    add(&mut elt, u, e, half.clone());
    add(&mut elt, u, u, -half);
    let h = group_algebra(g);
    RMatrix::new(&h, elt)
}

/// The subgroup generated by a set of elements: multiplicative closure
/// together with the identity (inverses follow by finiteness).
pub fn subgroup_closure(g: &GroupTable, seed: &[usize]) -> Vec<usize> {
    let mut set: BTreeSet<usize> = seed.iter().copied().collect();
    set.insert(g.identity());
    loop {
        let elems: Vec<usize> = set.iter().copied().collect();
        let before = set.len();
        for &a in &elems {
            for &b in &elems {
                set.insert(g.mul(a, b));
            }
        }
        if set.len() == before {
            break;
        }
    }
    set.into_iter().collect()
}

/// All subgroups as sorted element lists, ordered by size then
/// lexicographically. Every generating subset of size ≤ 2 is closed first,
/// then found subgroups are extended by single elements to a fixed point,
/// which reaches every subgroup through a chain of one-generator extensions.
pub fn enumerate_subgroups(g: &GroupTable) -> Vec<Vec<usize>> {
    let n = g.order();
    let mut found: BTreeSet<Vec<usize>> = BTreeSet::new();
    found.insert(subgroup_closure(g, &[]));
    for a in 0..n {
        found.insert(subgroup_closure(g, &[a]));
        for b in a + 1..n {
            found.insert(subgroup_closure(g, &[a, b]));
        }
    }
    loop {
        let snapshot: Vec<Vec<usize>> = found.iter().cloned().collect();
        let before = found.len();
        for s in &snapshot {
            for x in 0..n {
                if s.binary_search(&x).is_ok() {
                    continue;
                }
                let mut seed = s.clone();
                seed.push(x);
                found.insert(subgroup_closure(g, &seed));
            }
        }
        if found.len() == before {
            break;
        }
    }
    let mut out: Vec<Vec<usize>> = found.into_iter().collect();
    out.sort_by_key(|s| (s.len(), s.clone()));
    out
}

/// The centralizer of a set of elements.
pub fn centralizer(g: &GroupTable, set: &[usize]) -> Vec<usize> {
    (0..g.order())
        .filter(|&a| set.iter().all(|&x| g.mul(a, x) == g.mul(x, a)))
        .collect()
}

/// The inclusion matrix of the span of a set of group elements.
pub fn subgroup_inclusion(g: &GroupTable, l: &[usize]) -> Matrix {
    let mut m = Matrix::zero(g.order(), l.len());
    for (j, &i) in l.iter().enumerate() {
        m.set(i, j, Scalar::one());
    }
    m
}

/// The coideal subalgebra spanned by a subgroup, with the restricted
/// coaction.
pub fn subgroup_comodule(g: &GroupTable, l: &[usize]) -> Result<ComoduleAlgebraData, Error> {
    let h = group_algebra(g);
    coideal_subalgebra(&h, &subgroup_inclusion(g, l))
}

/// The K-matrices carried by the subgroup coideal `kL`: exactly
/// `{a⊗1 : a ∈ C_G(L)}`, each certified against `R_u` before being returned.
pub fn group_k_matrices(
    g: &GroupTable,
    u: usize,
    l: &[usize],
) -> Result<Vec<TensorElement>, Error> {
    let r = r_u(g, u)?;
    let c = subgroup_comodule(g, l)?;
    let pos = l
        .iter()
        .position(|&x| x == g.identity())
        .ok_or_else(|| Error::bad("subgroup does not contain the identity"))?;
    let mut out = Vec::new();
    for a in centralizer(g, l) {
        let mut k = TensorElement::zero(vec![g.order(), l.len()]);
        k.set(&[a, pos], Scalar::one());
        KMatrix::new(&r, &c, k.clone())?;
        out.push(k);
    }
    Ok(out)
}

/// A (subgroup, centralizer element) pair: the data of one group-algebra
/// K-matrix carrier.
pub type GroupPair = (Vec<usize>, usize);

/// Orbits of all pairs `(L, a ∈ C_G(L))` under simultaneous conjugation
/// `(L, a) ↦ (gLg⁻¹, gag⁻¹)`. Each orbit is sorted and orbits are ordered
/// by their minimal (canonical) representative.
pub fn pair_conjugacy_classes(g: &GroupTable, u: usize) -> Result<Vec<Vec<GroupPair>>, Error> {
    if !g.is_central(u) {
        return Err(Error::NotCentral {
            label: g.label(u).to_string(),
        });
    }
    if !g.is_involution(u) {
        return Err(Error::NotInvolution {
            label: g.label(u).to_string(),
        });
    }
    let mut all: BTreeSet<GroupPair> = BTreeSet::new();
    for l in enumerate_subgroups(g) {
        for a in centralizer(g, &l) {
            all.insert((l.clone(), a));
        }
    }
    let mut classes: Vec<Vec<GroupPair>> = Vec::new();
    let mut seen: BTreeSet<GroupPair> = BTreeSet::new();
    for pair in &all {
        if seen.contains(pair) {
            continue;
        }
        let mut orbit: BTreeSet<GroupPair> = BTreeSet::new();
        for w in 0..g.order() {
            let mut lw: Vec<usize> = pair.0.iter().map(|&x| g.conjugate(w, x)).collect();
            lw.sort_unstable();
            orbit.insert((lw, g.conjugate(w, pair.1)));
        }
        seen.extend(orbit.iter().cloned());
        classes.push(orbit.into_iter().collect());
    }
    Ok(classes)
}

/// The cyclic group of order `n`, labelled `1, a, a2, …` (order 2 uses
/// `1, u` to match the involution notation).
pub fn cyclic_group(n: usize) -> GroupTable {
    assert!(n > 0, "cyclic group needs positive order");
    let labels: Vec<String> = match n {
        1 => vec!["1".to_string()],
        2 => vec!["1".to_string(), "u".to_string()],
        _ => (0..n)
            .map(|i| match i {
                0 => "1".to_string(),
                1 => "a".to_string(),
                _ => format!("a{i}"),
            })
            .collect(),
    };
    let table: Vec<Vec<usize>> = (0..n).map(|i| (0..n).map(|j| (i + j) % n).collect()).collect();
    GroupTable::new(labels, table)
        .expect("cyclic table is a group")
        .with_name(format!("C{n}"))
}

/// The Klein four-group `C2×C2`, labelled `1, a, b, ab`.
pub fn klein_group() -> GroupTable {
    let labels = vec!["1".to_string(), "a".to_string(), "b".to_string(), "ab".to_string()];
    let table: Vec<Vec<usize>> = (0..4).map(|i| (0..4).map(|j| i ^ j).collect()).collect();
    GroupTable::new(labels, table)
        .expect("klein table is a group")
        .with_name("C2xC2")
}

/// The symmetric group on three letters, labelled
/// `e, (12), (13), (23), (123), (132)`, composing right factor first.
pub fn symmetric3() -> GroupTable {
    let perms: [[usize; 3]; 6] = [
        [0, 1, 2], // e
        [1, 0, 2], // (12)
        [2, 1, 0], // (13)
        [0, 2, 1], // (23)
        [1, 2, 0], // (123): 1→2, 2→3, 3→1
        [2, 0, 1], // (132): 1→3, 3→2, 2→1
    ];
    let labels: Vec<String> = ["e", "(12)", "(13)", "(23)", "(123)", "(132)"]
        .iter()
        .map(|s| s.to_string())
        .collect();
    let compose = |a: &[usize; 3], b: &[usize; 3]| -> [usize; 3] {
        [a[b[0]], a[b[1]], a[b[2]]]
    };
    let index = |p: &[usize; 3]| perms.iter().position(|q| q == p).expect("closed");
    let table: Vec<Vec<usize>> = (0..6)
        .map(|i| (0..6).map(|j| index(&compose(&perms[i], &perms[j]))).collect())
        .collect();
    GroupTable::new(labels, table)
        .expect("symmetric table is a group")
        .with_name("S3")
}
