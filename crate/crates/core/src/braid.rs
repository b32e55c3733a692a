//! Braid groups of Coxeter types A, BC, and D: finite presentations, matrix
//! representations on tensor powers of the regular module, relation
//! verification, and trace invariants.
//!
//! The three representation builders package the braidings from
//! [`crate::rmatrix`] and [`crate::comodule`] into generator images:
//!
//! * type A acts on `H^⊗n` with `σ_i ↦ Id ⊗ c_{X,X} ⊗ Id`,
//! * type BC acts on `H^⊗n ⊗ B` with the extra generator
//!   `t ↦ Id_{X^⊗(n-1)} ⊗ e_{X,M}`,
//! * type D replaces `t` by `(Id_X⊗e)(c_{X,X}⊗Id_M)(Id_X⊗e)` and is only
//!   available when the K-matrix is triangular (the derivation of the
//!   `σ_{n-2} t σ_{n-2} = t σ_{n-2} t` relation uses `e² = Id`).
//!
//! Traces of generator words are invariants of braided Morita equivalence, so
//! [`signature`] tabulates them over all short positive words.

use std::fmt;

use rayon::prelude::*;

use crate::comodule::{braiding_e, braiding_e_inverse, is_triangular_k, ComoduleAlgebraData, KMatrix};
use crate::error::Error;
use crate::hopf::HopfData;
use crate::matrix::Matrix;
use crate::module::ModuleAction;
use crate::report::CheckReport;
use crate::rmatrix::{braiding, braiding_inverse, RMatrix};
use crate::scalar::Scalar;

/// Coxeter type of a braid group.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum BraidType {
    A,
    BC,
    D,
}

impl fmt::Display for BraidType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            BraidType::A => "A",
            BraidType::BC => "BC",
            BraidType::D => "D",
        })
    }
}

/// A word in braid group generators: a sequence of letters, each a generator
/// name with exponent `+1` or `-1`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct BraidWord {
    letters: Vec<(String, i32)>,
}

impl BraidWord {
    /// The empty word (group identity). Displays as `ε`.
    pub fn empty() -> Self {
        BraidWord::default()
    }

    /// Word made of the given generators, all with exponent `+1`.
    pub fn positive(names: &[&str]) -> Self {
        BraidWord {
            letters: names.iter().map(|n| (n.to_string(), 1)).collect(),
        }
    }

    /// Append one letter. Exponent must be `+1` or `-1`.
    pub fn push(&mut self, name: &str, exponent: i32) {
        assert!(
            exponent == 1 || exponent == -1,
            "letter exponent must be +1 or -1"
        );
        self.letters.push((name.to_string(), exponent));
    }

    pub fn letters(&self) -> &[(String, i32)] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    /// Formal inverse: reverse the letters and negate every exponent.
    pub fn inverse(&self) -> BraidWord {
        BraidWord {
            letters: self
                .letters
                .iter()
                .rev()
                .map(|(n, e)| (n.clone(), -e))
                .collect(),
        }
    }

    /// Concatenation `self · other`.
    pub fn concat(&self, other: &BraidWord) -> BraidWord {
        let mut letters = self.letters.clone();
        letters.extend(other.letters.iter().cloned());
        BraidWord { letters }
    }

    /// Parse a whitespace-separated word such as `"s1 t s2^-1"`. Each token
    /// is a generator name, optionally suffixed `^-1` (or `^1`). The empty
    /// string and the single token `ε` both denote the empty word. Whether
    /// the names exist in a given presentation is checked at application
    /// time, not here.
    pub fn parse(text: &str) -> Result<Self, Error> {
        let tokens: Vec<&str> = text.split_whitespace().collect();
        if tokens == ["ε"] {
            return Ok(BraidWord::empty());
        }
        let mut letters = Vec::with_capacity(tokens.len());
        for token in tokens {
            let (name, exponent) = match token.split_once('^') {
                None => (token, 1),
                Some((base, "1")) => (base, 1),
                Some((base, "-1")) => (base, -1),
                Some((_, exp)) => {
                    return Err(Error::Parse(format!(
                        "letter exponent must be 1 or -1, got `^{exp}` in `{token}`"
                    )))
                }
            };
            if name.is_empty() {
                return Err(Error::Parse(format!("empty generator name in `{token}`")));
            }
            letters.push((name.to_string(), exponent));
        }
        Ok(BraidWord { letters })
    }
}

impl fmt::Display for BraidWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.letters.is_empty() {
            return f.write_str("ε");
        }
        let rendered: Vec<String> = self
            .letters
            .iter()
            .map(|(n, e)| if *e == 1 { n.clone() } else { format!("{n}^-1") })
            .collect();
        f.write_str(&rendered.join(" "))
    }
}

/// A finite presentation of a braid group of Coxeter type A, BC, or D.
///
/// Generators are named `s1, s2, …` for the `σ_i` and `t` for the extra
/// reflection generator of types BC and D. All three types carry `n - 1`
/// sigma generators, matching the representations on `H^⊗n`: relations from
/// the source presentations that would reference a generator index outside
/// `1..=n-1` are omitted. In particular the type D presentation at `n = 2`
/// is free abelian on `{s1, t}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Presentation {
    btype: BraidType,
    rank: usize,
    generators: Vec<String>,
    relations: Vec<(BraidWord, BraidWord)>,
}

impl Presentation {
    pub fn btype(&self) -> BraidType {
        self.btype
    }

    /// The rank parameter `n` (number of tensor factors, not of generators).
    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn generators(&self) -> &[String] {
        &self.generators
    }

    pub fn relations(&self) -> &[(BraidWord, BraidWord)] {
        &self.relations
    }

    pub fn has_generator(&self, name: &str) -> bool {
        self.generators.iter().any(|g| g == name)
    }

    /// Err(UnknownGenerator) if some letter of `w` is not a generator here.
    pub fn validate_word(&self, w: &BraidWord) -> Result<(), Error> {
        for (name, _) in w.letters() {
            if !self.has_generator(name) {
                return Err(Error::UnknownGenerator { name: name.clone() });
            }
        }
        Ok(())
    }
}

impl fmt::Display for Presentation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(
            f,
            "Br_{}^{}: generators {}",
            self.rank,
            self.btype,
            self.generators.join(", ")
        )?;
        for (lhs, rhs) in &self.relations {
            writeln!(f, "  {lhs} = {rhs}")?;
        }
        Ok(())
    }
}

fn sigma(i: usize) -> String {
    format!("s{i}")
}

/// The presentation of the braid group of the given Coxeter type and rank.
///
/// Relations, in order: the braid relations `s_i s_{i+1} s_i = s_{i+1} s_i
/// s_{i+1}`, the distant commutations `s_i s_j = s_j s_i` for `|i-j| ≥ 2`,
/// and for types BC and D the relations involving `t` (commutations first,
/// then the quartic `s_{n-1} t s_{n-1} t = t s_{n-1} t s_{n-1}` for BC or the
/// triple `s_{n-2} t s_{n-2} = t s_{n-2} t` for D).
pub fn presentation(btype: BraidType, n: usize) -> Result<Presentation, Error> {
    if n < 2 {
        return Err(Error::UnsupportedRank {
            n,
            why: "braid presentations and representations need n >= 2".into(),
        });
    }
    let sigmas = n - 1;
    let mut generators: Vec<String> = (1..=sigmas).map(sigma).collect();
    if btype != BraidType::A {
        generators.push("t".to_string());
    }
    let mut relations = Vec::new();
    // Braid relations. The type A source ranges i up to n-1 but the relation
    // for i = n-1 would reference s_n, so it drops out; all three types end
    // up with i = 1..=n-2.
    for i in 1..=n.saturating_sub(2) {
        let (a, b) = (sigma(i), sigma(i + 1));
        relations.push((
            BraidWord::positive(&[&a, &b, &a]),
            BraidWord::positive(&[&b, &a, &b]),
        ));
    }
    // Distant generators commute.
    for i in 1..=sigmas {
        for j in (i + 2)..=sigmas {
            let (a, b) = (sigma(i), sigma(j));
            relations.push((
                BraidWord::positive(&[&a, &b]),
                BraidWord::positive(&[&b, &a]),
            ));
        }
    }
    match btype {
        BraidType::A => {}
        BraidType::BC => {
            for i in 1..=n.saturating_sub(2) {
                let a = sigma(i);
                relations.push((
                    BraidWord::positive(&[&a, "t"]),
                    BraidWord::positive(&["t", &a]),
                ));
            }
            let a = sigma(n - 1);
            relations.push((
                BraidWord::positive(&[&a, "t", &a, "t"]),
                BraidWord::positive(&["t", &a, "t", &a]),
            ));
        }
        BraidType::D => {
            // t commutes with s_1..s_{n-3} and with s_{n-1}.
            let mut commuting: Vec<usize> = (1..=n.saturating_sub(3)).collect();
            commuting.push(n - 1);
            for i in commuting {
                let a = sigma(i);
                relations.push((
                    BraidWord::positive(&[&a, "t"]),
                    BraidWord::positive(&["t", &a]),
                ));
            }
            if n >= 3 {
                let a = sigma(n - 2);
                relations.push((
                    BraidWord::positive(&[&a, "t", &a]),
                    BraidWord::positive(&["t", &a, "t"]),
                ));
            }
        }
    }
    Ok(Presentation {
        btype,
        rank: n,
        generators,
        relations,
    })
}

/// Where a representation's generator images came from: the dimensions of the
/// Hopf algebra and comodule algebra it was built over, and the tensor power.
/// Both dimensions are `None` for representations assembled from explicit
/// matrices.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct RepProvenance {
    pub hopf_dim: Option<usize>,
    pub module_dim: Option<usize>,
    pub n: usize,
}

/// A braid group representation: one invertible matrix per generator of a
/// presentation, all of the same size.
///
/// The builders [`rep_type_a`], [`rep_type_bc`], and [`rep_type_d`] always
/// produce representations whose relations hold exactly;
/// [`BraidRep::from_images`] accepts any invertible assignment so that
/// [`verify_relations`] has something to refute.
#[derive(Debug, Clone)]
pub struct BraidRep {
    presentation: Presentation,
    dim: usize,
    images: Vec<Matrix>,
    inverses: Vec<Matrix>,
    provenance: RepProvenance,
}

impl BraidRep {
    /// Assemble a representation from explicit generator images. Every
    /// generator of the presentation must be assigned exactly once; images
    /// must be square, of one common size, and invertible. Relations are not
    /// checked here; use [`verify_relations`].
    pub fn from_images(
        presentation: Presentation,
        assignment: Vec<(String, Matrix)>,
    ) -> Result<Self, Error> {
        let gens = presentation.generators.len();
        let mut slots: Vec<Option<Matrix>> = vec![None; gens];
        for (name, image) in assignment {
            let idx = presentation
                .generators
                .iter()
                .position(|g| *g == name)
                .ok_or(Error::UnknownGenerator { name: name.clone() })?;
            if slots[idx].is_some() {
                return Err(Error::bad(format!("generator {name} assigned twice")));
            }
            slots[idx] = Some(image);
        }
        let mut images = Vec::with_capacity(gens);
        for (slot, name) in slots.into_iter().zip(&presentation.generators) {
            images.push(slot.ok_or_else(|| Error::bad(format!("generator {name} unassigned")))?);
        }
        let dim = images.first().map_or(0, |m| m.nrows());
        for (m, name) in images.iter().zip(&presentation.generators) {
            if m.nrows() != dim || m.ncols() != dim {
                return Err(Error::dim(format!(
                    "image of {name} is {}x{}, expected {dim}x{dim}",
                    m.nrows(),
                    m.ncols()
                )));
            }
        }
        let inverses = images
            .iter()
            .map(|m| m.invert())
            .collect::<Result<Vec<_>, _>>()?;
        let n = presentation.rank;
        Ok(BraidRep {
            presentation,
            dim,
            images,
            inverses,
            provenance: RepProvenance {
                hopf_dim: None,
                module_dim: None,
                n,
            },
        })
    }

    pub fn presentation(&self) -> &Presentation {
        &self.presentation
    }

    /// Dimension of the carrier space.
    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn provenance(&self) -> RepProvenance {
        self.provenance
    }

    fn index_of(&self, name: &str) -> Option<usize> {
        self.presentation.generators.iter().position(|g| g == name)
    }

    /// Image of one generator.
    pub fn image(&self, name: &str) -> Option<&Matrix> {
        self.index_of(name).map(|i| &self.images[i])
    }

    /// Cached inverse of one generator image.
    pub fn image_inverse(&self, name: &str) -> Option<&Matrix> {
        self.index_of(name).map(|i| &self.inverses[i])
    }
}

/// Evaluate a word to the product of generator images (inverse images for
/// exponent `-1` letters). The empty word evaluates to the identity.
pub fn word_matrix(rep: &BraidRep, w: &BraidWord) -> Result<Matrix, Error> {
    let mut acc = Matrix::identity(rep.dim);
    for (name, exponent) in w.letters() {
        let idx = rep
            .index_of(name)
            .ok_or_else(|| Error::UnknownGenerator { name: name.clone() })?;
        let factor = if *exponent == 1 {
            &rep.images[idx]
        } else {
            &rep.inverses[idx]
        };
        acc = acc.mul(factor);
    }
    Ok(acc)
}

/// Exact trace of the matrix a word evaluates to. Traces of words are the
/// invariants this crate compares across carriers: equivalent carriers give
/// equal traces on every word.
pub fn trace_word(rep: &BraidRep, w: &BraidWord) -> Result<Scalar, Error> {
    Ok(word_matrix(rep, w)?.trace())
}

/// Check every relation of the representation's presentation as an exact
/// matrix equation. One [`crate::report::AxiomCheck`] per relation, named by
/// the relation itself; the witness of a failure is the first differing
/// matrix entry.
pub fn verify_relations(rep: &BraidRep) -> CheckReport {
    let mut report = CheckReport::new();
    for (lhs, rhs) in rep.presentation.relations() {
        let left = word_matrix(rep, lhs).expect("relation words use presentation generators");
        let right = word_matrix(rep, rhs).expect("relation words use presentation generators");
        report.record(&format!("{lhs} = {rhs}"), left == right, || {
            first_difference(&left, &right)
        });
    }
    report
}

fn first_difference(a: &Matrix, b: &Matrix) -> String {
    for row in 0..a.nrows() {
        for col in 0..a.ncols() {
            if a.get(row, col) != b.get(row, col) {
                return format!(
                    "entry ({row},{col}): {} vs {}",
                    a.get(row, col),
                    b.get(row, col)
                );
            }
        }
    }
    "matrices agree".to_string()
}

/// Identity matrix on an iterated tensor factor `H^⊗k` (times an optional
/// trailing factor).
fn id_power(dim: usize, power: usize) -> Matrix {
    Matrix::identity(dim.pow(power as u32))
}

/// The type A representation of `Br_n` on `H^⊗n`:
/// `σ_i ↦ Id_{X^⊗(i-1)} ⊗ c_{X,X} ⊗ Id_{X^⊗(n-i-1)}` with `X = H_reg`.
pub fn rep_type_a(h: &HopfData, r: &RMatrix, n: usize) -> Result<BraidRep, Error> {
    let pres = presentation(BraidType::A, n)?;
    let dh = h.dim();
    if r.element().dims() != [dh, dh] {
        return Err(Error::dim("R-matrix does not live on H ⊗ H"));
    }
    let x = ModuleAction::regular(h.algebra());
    let c = braiding(r, &x, &x);
    let c_inv = braiding_inverse(r, &x, &x);
    let mut images = Vec::with_capacity(n - 1);
    let mut inverses = Vec::with_capacity(n - 1);
    for i in 1..=n - 1 {
        let left = id_power(dh, i - 1);
        let right = id_power(dh, n - i - 1);
        images.push(left.kron(&c).kron(&right));
        inverses.push(left.kron(&c_inv).kron(&right));
    }
    Ok(BraidRep {
        presentation: pres,
        dim: dh.pow(n as u32),
        images,
        inverses,
        provenance: RepProvenance {
            hopf_dim: Some(dh),
            module_dim: None,
            n,
        },
    })
}

/// Shared sigma-generator assembly for the BC and D carriers `H^⊗n ⊗ B`.
fn sigma_images(
    h: &HopfData,
    r: &RMatrix,
    db: usize,
    n: usize,
) -> (Vec<Matrix>, Vec<Matrix>, Matrix, Matrix) {
    let dh = h.dim();
    let x = ModuleAction::regular(h.algebra());
    let c = braiding(r, &x, &x);
    let c_inv = braiding_inverse(r, &x, &x);
    let mut images = Vec::with_capacity(n - 1);
    let mut inverses = Vec::with_capacity(n - 1);
    for i in 1..=n - 1 {
        let left = id_power(dh, i - 1);
        let right = Matrix::identity(dh.pow((n - i - 1) as u32) * db);
        images.push(left.kron(&c).kron(&right));
        inverses.push(left.kron(&c_inv).kron(&right));
    }
    (images, inverses, c, c_inv)
}

fn check_carrier_dims(
    h: &HopfData,
    r: &RMatrix,
    c: &ComoduleAlgebraData,
    k: &KMatrix,
) -> Result<(), Error> {
    let dh = h.dim();
    if c.host().dim() != dh {
        return Err(Error::dim(
            "comodule algebra lives over a different host Hopf algebra",
        ));
    }
    if r.element().dims() != [dh, dh] {
        return Err(Error::dim("R-matrix does not live on H ⊗ H"));
    }
    if k.element().dims() != [dh, c.dim()] {
        return Err(Error::dim("K-matrix does not live on H ⊗ B"));
    }
    Ok(())
}

/// The type BC representation of `Br_n` on `H^⊗n ⊗ B`: sigma generators act
/// as in type A (extended by the identity on `B`), and
/// `t ↦ Id_{X^⊗(n-1)} ⊗ e_{X,M}` with `X = H_reg`, `M = B_reg`.
pub fn rep_type_bc(
    h: &HopfData,
    r: &RMatrix,
    c: &ComoduleAlgebraData,
    k: &KMatrix,
    n: usize,
) -> Result<BraidRep, Error> {
    let pres = presentation(BraidType::BC, n)?;
    check_carrier_dims(h, r, c, k)?;
    let (dh, db) = (h.dim(), c.dim());
    let x = ModuleAction::regular(h.algebra());
    let m = ModuleAction::regular(c.algebra());
    let (mut images, mut inverses, _, _) = sigma_images(h, r, db, n);
    let left = id_power(dh, n - 1);
    images.push(left.kron(&braiding_e(k, &x, &m)));
    inverses.push(left.kron(&braiding_e_inverse(k, &x, &m)));
    Ok(BraidRep {
        presentation: pres,
        dim: dh.pow(n as u32) * db,
        images,
        inverses,
        provenance: RepProvenance {
            hopf_dim: Some(dh),
            module_dim: Some(db),
            n,
        },
    })
}

/// The type D representation of `Br_n` on `H^⊗n ⊗ B`: sigma generators as in
/// type BC, and `t ↦ Id_{X^⊗(n-2)} ⊗ (Id_X⊗e)(c_{X,X}⊗Id_M)(Id_X⊗e)`.
///
/// Requires a triangular K-matrix: the relation `s_{n-2} t s_{n-2} =
/// t s_{n-2} t` holds because `e² = Id`, so a non-involutive `e` is rejected
/// with [`Error::NotTriangularK`] rather than silently producing a
/// non-representation.
pub fn rep_type_d(
    h: &HopfData,
    r: &RMatrix,
    c: &ComoduleAlgebraData,
    k: &KMatrix,
    n: usize,
) -> Result<BraidRep, Error> {
    let pres = presentation(BraidType::D, n)?;
    check_carrier_dims(h, r, c, k)?;
    if !is_triangular_k(k) {
        return Err(Error::NotTriangularK);
    }
    let (dh, db) = (h.dim(), c.dim());
    let x = ModuleAction::regular(h.algebra());
    let m = ModuleAction::regular(c.algebra());
    let (mut images, mut inverses, cxx, cxx_inv) = sigma_images(h, r, db, n);
    let e = braiding_e(k, &x, &m);
    let e_inv = braiding_e_inverse(k, &x, &m);
    let id_h = Matrix::identity(dh);
    let id_b = Matrix::identity(db);
    // (Id_X ⊗ e)(c_{X,X} ⊗ Id_M)(Id_X ⊗ e) on X ⊗ X ⊗ M.
    let block = id_h
        .kron(&e)
        .mul(&cxx.kron(&id_b))
        .mul(&id_h.kron(&e));
    let block_inv = id_h
        .kron(&e_inv)
        .mul(&cxx_inv.kron(&id_b))
        .mul(&id_h.kron(&e_inv));
    let left = id_power(dh, n - 2);
    images.push(left.kron(&block));
    inverses.push(left.kron(&block_inv));
    Ok(BraidRep {
        presentation: pres,
        dim: dh.pow(n as u32) * db,
        images,
        inverses,
        provenance: RepProvenance {
            hopf_dim: Some(dh),
            module_dim: Some(db),
            n,
        },
    })
}

/// Traces of all positive words of length at most `max_len`, in lexicographic
/// order with the alphabet ordered as in the presentation (`s1 < s2 < … < t`).
/// The empty word comes first and contributes the carrier dimension.
///
/// Branches of the word tree are evaluated in parallel; the merge order is
/// fixed by the alphabet, so the output is deterministic.
pub fn trace_signature(rep: &BraidRep, max_len: usize) -> Vec<(String, Scalar)> {
    let mut out = vec![("ε".to_string(), Scalar::from_int(rep.dim as i64))];
    if max_len == 0 {
        return out;
    }
    let names = rep.presentation.generators();
    let branches: Vec<Vec<(String, Scalar)>> = rep
        .images
        .par_iter()
        .enumerate()
        .map(|(i, image)| {
            let mut buf = Vec::new();
            collect_traces(rep, names[i].clone(), image.clone(), max_len, &mut buf);
            buf
        })
        .collect();
    for branch in branches {
        out.extend(branch);
    }
    out
}

fn collect_traces(
    rep: &BraidRep,
    word: String,
    product: Matrix,
    max_len: usize,
    out: &mut Vec<(String, Scalar)>,
) {
    out.push((word.clone(), product.trace()));
    if word.split(' ').count() >= max_len {
        return;
    }
    for (i, image) in rep.images.iter().enumerate() {
        let name = &rep.presentation.generators()[i];
        collect_traces(
            rep,
            format!("{word} {name}"),
            product.mul(image),
            max_len,
            out,
        );
    }
}

/// The full invariant of a carrier `(C, K)` at depth `(n, L)`: build the type
/// BC representation on `H^⊗n ⊗ B` and tabulate [`trace_signature`] over all
/// positive words of length at most `L`.
pub fn signature(
    h: &HopfData,
    r: &RMatrix,
    c: &ComoduleAlgebraData,
    k: &KMatrix,
    n: usize,
    max_len: usize,
) -> Result<Vec<(String, Scalar)>, Error> {
    let rep = rep_type_bc(h, r, c, k, n)?;
    Ok(trace_signature(&rep, max_len))
}
