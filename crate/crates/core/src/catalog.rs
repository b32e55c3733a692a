//! Built-in worked examples: the four-dimensional Taft algebra with its
//! one-parameter family of triangular structures, and small group algebras
//! with the central-involution structure. Every entry certifies the full
//! verifier stack while loading, so tests and the CLI can treat the catalog
//! as ground truth.

use crate::comodule::{coideal_subalgebra, ComoduleAlgebraData, KMatrix};
use crate::error::Error;
use crate::group::{
    cyclic_group, enumerate_subgroups, group_algebra, group_k_matrices, klein_group, r_u,
    subgroup_comodule, symmetric3, GroupTable,
};
use crate::hopf::HopfData;
use crate::matrix::Matrix;
use crate::rmatrix::RMatrix;
use crate::scalar::Scalar;
use crate::tensor::TensorElement;
use crate::algebra::AlgebraData;

/// One carrier of a catalog entry: a comodule algebra over the entry's host
/// together with its complete list of K-matrices.
#[derive(Debug, Clone)]
pub struct CatalogCarrier {
    pub name: String,
    pub comodule: ComoduleAlgebraData,
    pub known_k: Vec<TensorElement>,
}

/// A fully certified worked example: host, triangular or quasitriangular
/// structure, and every carrier with its known K-matrix list.
#[derive(Debug, Clone)]
pub struct CatalogEntry {
    pub name: String,
    pub hopf: HopfData,
    pub rmatrix: RMatrix,
    pub carriers: Vec<CatalogCarrier>,
    pub note: String,
}

impl CatalogEntry {
    pub fn carrier(&self, name: &str) -> Option<&CatalogCarrier> {
        self.carriers.iter().find(|c| c.name == name)
    }
}

fn carrier_name(c: &ComoduleAlgebraData) -> String {
    format!("k[{}]", c.algebra().labels().join(","))
}

/// The four-dimensional Hopf algebra with basis `1, g, x, gx` and relations
/// `g² = 1`, `x² = 0`, `xg = -gx`, `Δ(g) = g⊗g`, `Δ(x) = x⊗g + 1⊗x`,
/// compiled by hand into structure-constant tables.
pub fn sweedler_hopf() -> HopfData {
    let one = Scalar::one;
    let neg = || -Scalar::one();
    let algebra = AlgebraData::new(
        vec!["1".into(), "g".into(), "x".into(), "gx".into()],
        vec![one(), Scalar::zero(), Scalar::zero(), Scalar::zero()],
        &[
            (0, 0, 0, one()),
            (0, 1, 1, one()),
            (0, 2, 2, one()),
            (0, 3, 3, one()),
            (1, 0, 1, one()),
            (1, 1, 0, one()),
            (1, 2, 3, one()),
            (1, 3, 2, one()),
            (2, 0, 2, one()),
            (2, 1, 3, neg()),
            (3, 0, 3, one()),
            (3, 1, 2, neg()),
        ],
    )
    .expect("hand-compiled table is valid");
    HopfData::new(
        algebra,
        &[
            (0, 0, 0, one()),
            (1, 1, 1, one()),
            (2, 2, 1, one()),
            (2, 0, 2, one()),
            (3, 3, 0, one()),
            (3, 1, 3, one()),
        ],
        vec![one(), one(), Scalar::zero(), Scalar::zero()],
        &[(0, 0, one()), (1, 1, one()), (3, 2, one()), (2, 3, neg())],
    )
    .expect("hand-compiled coalgebra data is well shaped")
}

/// The one-parameter family of triangular structures on [`sweedler_hopf`]:
/// `½(1⊗1 + 1⊗g + g⊗1 − g⊗g) + (λ/2)(x⊗x + x⊗gx + gx⊗gx − gx⊗x)`.
pub fn sweedler_r_element(lambda: &Scalar) -> TensorElement {
    let half = Scalar::ratio(1, 2);
    let lh = lambda * &half;
    let mut r = TensorElement::zero(vec![4, 4]);
    r.set(&[0, 0], half.clone());
    r.set(&[0, 1], half.clone());
    r.set(&[1, 0], half.clone());
    r.set(&[1, 1], -half);
    if !lh.is_zero() {
        r.set(&[2, 2], lh.clone());
        r.set(&[2, 3], lh.clone());
        r.set(&[3, 3], lh.clone());
        r.set(&[3, 2], -lh);
    }
    r
}

/// The catalog entry for the four-dimensional host at one parameter value:
/// all four coideal subalgebras with their complete K-matrix lists, which
/// collapse to the identity alone as soon as the parameter is nonzero.
pub fn sweedler(lambda: Scalar) -> CatalogEntry {
    let h = sweedler_hopf();
    let r = RMatrix::new(&h, sweedler_r_element(&lambda))
        .expect("the family is triangular for every parameter");

    let inclusion = |cols: &[usize]| {
        let mut m = Matrix::zero(4, cols.len());
        for (j, &i) in cols.iter().enumerate() {
            m.set(i, j, Scalar::one());
        }
        m
    };
    let coideal_columns: [&[usize]; 4] = [&[0], &[0, 1], &[0, 3], &[0, 1, 2, 3]];

    let mut carriers = Vec::new();
    for cols in coideal_columns {
        let comodule =
            coideal_subalgebra(&h, &inclusion(cols)).expect("classified coideal subalgebra");
        let unit = TensorElement::unit(&[h.algebra(), comodule.algebra()]);
        let mut known_k = vec![unit];
        // The scalar and group-like coideals additionally carry g⊗1 at
        // parameter zero; on the larger carriers g⊗1 fails to intertwine
        // with the coaction of x.
        let has_g = cols == [0] || cols == [0, 1];
        if lambda.is_zero() && has_g {
            let mut k = TensorElement::zero(vec![4, comodule.dim()]);
            k.set(&[1, 0], Scalar::one());
            known_k.push(k);
        }
        for k in &known_k {
            KMatrix::new(&r, &comodule, k.clone()).expect("catalog K-matrix certifies");
        }
        carriers.push(CatalogCarrier {
            name: carrier_name(&comodule),
            comodule,
            known_k,
        });
    }

    CatalogEntry {
        name: format!("H4-lambda-{lambda}"),
        hopf: h,
        rmatrix: r,
        carriers,
        note: format!(
            "four-dimensional host with the triangular family at parameter {lambda}; \
             K-matrix lists collapse to the identity for nonzero parameter"
        ),
    }
}

/// The catalog entry for a group algebra with the structure attached to a
/// central involution: one carrier per subgroup, with K-matrices indexed by
/// the centralizer.
pub fn group_entry(g: &GroupTable, u: usize) -> Result<CatalogEntry, Error> {
    let h = group_algebra(g);
    let r = r_u(g, u)?;
    let mut carriers = Vec::new();
    for l in enumerate_subgroups(g) {
        let comodule = subgroup_comodule(g, &l)?;
        let known_k = group_k_matrices(g, u, &l)?;
        carriers.push(CatalogCarrier {
            name: carrier_name(&comodule),
            comodule,
            known_k,
        });
    }
    Ok(CatalogEntry {
        name: format!("k{}-u-{}", g.name(), g.label(u)),
        hopf: h,
        rmatrix: r,
        carriers,
        note: format!(
            "group algebra of {} with the involution structure at u = {}; \
             one carrier per subgroup, K-matrices from centralizers",
            g.name(),
            g.label(u)
        ),
    })
}

/// The built-in group tables: the cyclic groups of orders 2, 3, 4, the
/// Klein four-group, and the symmetric group on three letters.
pub fn builtin_groups() -> Vec<GroupTable> {
    vec![
        cyclic_group(2),
        cyclic_group(3),
        cyclic_group(4),
        klein_group(),
        symmetric3(),
    ]
}

/// The bundled entries every consumer can rely on: the four-dimensional
/// host at parameters 0 and 1, and three group hosts.
pub fn default_entries() -> Vec<CatalogEntry> {
    let c2 = cyclic_group(2);
    let c4 = cyclic_group(4);
    let s3 = symmetric3();
    vec![
        sweedler(Scalar::zero()),
        sweedler(Scalar::one()),
        group_entry(&c2, 1).expect("u is the central involution"),
        group_entry(&c4, 2).expect("the squared generator is the central involution"),
        group_entry(&s3, s3.identity()).expect("the identity is always admissible"),
    ]
}
