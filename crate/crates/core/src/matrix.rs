use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::Error;
use crate::scalar::Scalar;

/// Exact rational matrix. Storage is sparse (nonzero entries only) but the
/// semantics are dense: every index inside the declared shape reads as an
/// exact value, and any access outside the shape panics rather than silently
/// zero-extending.
///
/// Throughout the crate a matrix acts on column vectors, so column `j` is the
/// image of the `j`-th basis vector. Tensor factors use one global flat-index
/// convention: the basis vector `e_{i_1} ⊗ … ⊗ e_{i_m}` of a product with
/// factor dimensions `d_1, …, d_m` sits at flat index
/// `i_1·(d_2⋯d_m) + i_2·(d_3⋯d_m) + … + i_m` (leftmost factor most
/// significant). All indices are 0-based.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Matrix {
    nrows: usize,
    ncols: usize,
    /// rows[i] maps column index to a nonzero entry.
    rows: Vec<BTreeMap<usize, Scalar>>,
}

impl Matrix {
    pub fn zero(nrows: usize, ncols: usize) -> Self {
        Matrix {
            nrows,
            ncols,
            rows: vec![BTreeMap::new(); nrows],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Matrix::zero(n, n);
        for i in 0..n {
            m.rows[i].insert(i, Scalar::one());
        }
        m
    }

    /// Build from dense rows of string-parsable rationals; test convenience.
    pub fn from_rows(rows: &[Vec<i64>]) -> Self {
        let nrows = rows.len();
        let ncols = rows.first().map_or(0, |r| r.len());
        let mut m = Matrix::zero(nrows, ncols);
        for (i, row) in rows.iter().enumerate() {
            assert_eq!(row.len(), ncols, "ragged rows");
            for (j, &v) in row.iter().enumerate() {
                if v != 0 {
                    m.rows[i].insert(j, Scalar::from_int(v));
                }
            }
        }
        m
    }

    pub fn nrows(&self) -> usize {
        self.nrows
    }

    pub fn ncols(&self) -> usize {
        self.ncols
    }

    pub fn is_square(&self) -> bool {
        self.nrows == self.ncols
    }

    fn check_index(&self, i: usize, j: usize) {
        assert!(
            i < self.nrows && j < self.ncols,
            "index ({i}, {j}) out of bounds for {}x{} matrix",
            self.nrows,
            self.ncols
        );
    }

    pub fn get(&self, i: usize, j: usize) -> Scalar {
        self.check_index(i, j);
        self.rows[i].get(&j).cloned().unwrap_or_default()
    }

    pub fn set(&mut self, i: usize, j: usize, value: Scalar) {
        self.check_index(i, j);
        if value.is_zero() {
            self.rows[i].remove(&j);
        } else {
            self.rows[i].insert(j, value);
        }
    }

    pub fn add_to(&mut self, i: usize, j: usize, value: &Scalar) {
        self.check_index(i, j);
        if value.is_zero() {
            return;
        }
        let entry = self.rows[i].entry(j).or_default();
        *entry += value;
        if entry.is_zero() {
            self.rows[i].remove(&j);
        }
    }

    /// Iterate nonzero entries in row-major order.
    pub fn iter(&self) -> impl Iterator<Item = (usize, usize, &Scalar)> {
        self.rows
            .iter()
            .enumerate()
            .flat_map(|(i, row)| row.iter().map(move |(&j, v)| (i, j, v)))
    }

    pub fn nnz(&self) -> usize {
        self.rows.iter().map(|r| r.len()).sum()
    }

    pub fn is_zero(&self) -> bool {
        self.rows.iter().all(|r| r.is_empty())
    }

    pub fn is_identity(&self) -> bool {
        self.is_square() && *self == Matrix::identity(self.nrows)
    }

    pub fn transpose(&self) -> Matrix {
        let mut t = Matrix::zero(self.ncols, self.nrows);
        for (i, j, v) in self.iter() {
            t.rows[j].insert(i, v.clone());
        }
        t
    }

    pub fn scale(&self, s: &Scalar) -> Matrix {
        if s.is_zero() {
            return Matrix::zero(self.nrows, self.ncols);
        }
        let mut out = self.clone();
        for row in &mut out.rows {
            for v in row.values_mut() {
                *v *= s;
            }
        }
        out
    }

    pub fn add(&self, other: &Matrix) -> Matrix {
        assert_eq!(
            (self.nrows, self.ncols),
            (other.nrows, other.ncols),
            "shape mismatch in add"
        );
        let mut out = self.clone();
        for (i, j, v) in other.iter() {
            out.add_to(i, j, v);
        }
        out
    }

    pub fn sub(&self, other: &Matrix) -> Matrix {
        self.add(&other.scale(&Scalar::from_int(-1)))
    }

    pub fn mul(&self, other: &Matrix) -> Matrix {
        assert_eq!(
            self.ncols, other.nrows,
            "shape mismatch in mul: {}x{} times {}x{}",
            self.nrows, self.ncols, other.nrows, other.ncols
        );
        let mut out = Matrix::zero(self.nrows, other.ncols);
        for i in 0..self.nrows {
            let mut acc: BTreeMap<usize, Scalar> = BTreeMap::new();
            for (&k, a) in &self.rows[i] {
                for (&j, b) in &other.rows[k] {
                    let entry = acc.entry(j).or_default();
                    *entry += a * b;
                }
            }
            acc.retain(|_, v| !v.is_zero());
            out.rows[i] = acc;
        }
        out
    }

    pub fn apply(&self, v: &[Scalar]) -> Vec<Scalar> {
        assert_eq!(self.ncols, v.len(), "shape mismatch in apply");
        let mut out = vec![Scalar::zero(); self.nrows];
        for (i, row) in self.rows.iter().enumerate() {
            for (&j, a) in row {
                if !v[j].is_zero() {
                    out[i] += a * &v[j];
                }
            }
        }
        out
    }

    pub fn trace(&self) -> Scalar {
        assert!(self.is_square(), "trace of non-square matrix");
        let mut t = Scalar::zero();
        for (i, row) in self.rows.iter().enumerate() {
            if let Some(v) = row.get(&i) {
                t += v;
            }
        }
        t
    }

    /// Kronecker product under the global flat-index convention:
    /// `(A ⊗ B)[(i·p + k, j·q + l)] = A[i,j]·B[k,l]` for `B` of shape `p×q`.
    pub fn kron(&self, other: &Matrix) -> Matrix {
        let (p, q) = (other.nrows, other.ncols);
        let mut out = Matrix::zero(self.nrows * p, self.ncols * q);
        for (i, j, a) in self.iter() {
            for (k, l, b) in other.iter() {
                out.rows[i * p + k].insert(j * q + l, a * b);
            }
        }
        out
    }

    /// Matrix of the linear map `X ⊗ Y → Y ⊗ X`, `e_i ⊗ e_j ↦ e_j ⊗ e_i`,
    /// where `dim X = dx` and `dim Y = dy`.
    pub fn flip(dx: usize, dy: usize) -> Matrix {
        let mut out = Matrix::zero(dx * dy, dx * dy);
        for i in 0..dx {
            for j in 0..dy {
                out.rows[j * dx + i].insert(i * dy + j, Scalar::one());
            }
        }
        out
    }

    /// Gauss-Jordan inverse. Exact; returns `SingularMatrix` when the rank is
    /// deficient.
    pub fn invert(&self) -> Result<Matrix, Error> {
        if !self.is_square() {
            return Err(Error::dim(format!(
                "cannot invert {}x{} matrix",
                self.nrows, self.ncols
            )));
        }
        let n = self.nrows;
        let mut a = self.to_dense();
        let mut inv: Vec<Vec<Scalar>> = (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| if i == j { Scalar::one() } else { Scalar::zero() })
                    .collect()
            })
            .collect();
        for col in 0..n {
            let pivot_row = (col..n).find(|&r| !a[r][col].is_zero());
            let Some(p) = pivot_row else {
                return Err(Error::SingularMatrix);
            };
            a.swap(col, p);
            inv.swap(col, p);
            let pivot = a[col][col].clone();
            let pinv = pivot.inv().expect("pivot nonzero");
            for j in 0..n {
                a[col][j] *= &pinv;
                inv[col][j] *= &pinv;
            }
            for r in 0..n {
                if r != col && !a[r][col].is_zero() {
                    let factor = a[r][col].clone();
                    for j in 0..n {
                        let t = &factor * &a[col][j];
                        a[r][j] -= &t;
                        let t = &factor * &inv[col][j];
                        inv[r][j] -= &t;
                    }
                }
            }
        }
        Ok(Matrix::from_dense(&inv))
    }

    /// Exact determinant by Gaussian elimination; zero for singular input.
    pub fn determinant(&self) -> Scalar {
        assert!(self.is_square(), "determinant of a non-square matrix");
        let n = self.nrows;
        let mut a = self.to_dense();
        let mut det = Scalar::one();
        for col in 0..n {
            let Some(p) = (col..n).find(|&r| !a[r][col].is_zero()) else {
                return Scalar::zero();
            };
            if p != col {
                a.swap(col, p);
                det = -&det;
            }
            let pivot = a[col][col].clone();
            det *= &pivot;
            let pinv = pivot.inv().expect("pivot nonzero");
            for r in col + 1..n {
                if a[r][col].is_zero() {
                    continue;
                }
                let factor = &a[r][col] * &pinv;
                for j in col..n {
                    let t = &factor * &a[col][j];
                    a[r][j] -= &t;
                }
            }
        }
        det
    }

    fn to_dense(&self) -> Vec<Vec<Scalar>> {
        let mut d = vec![vec![Scalar::zero(); self.ncols]; self.nrows];
        for (i, j, v) in self.iter() {
            d[i][j] = v.clone();
        }
        d
    }

    fn from_dense(d: &[Vec<Scalar>]) -> Matrix {
        let nrows = d.len();
        let ncols = d.first().map_or(0, |r| r.len());
        let mut m = Matrix::zero(nrows, ncols);
        for (i, row) in d.iter().enumerate() {
            for (j, v) in row.iter().enumerate() {
                if !v.is_zero() {
                    m.rows[i].insert(j, v.clone());
                }
            }
        }
        m
    }

    /// Reduced row echelon form together with the pivot columns.
    pub fn rref(&self) -> (Matrix, Vec<usize>) {
        let mut a = self.to_dense();
        let (nrows, ncols) = (self.nrows, self.ncols);
        let mut pivots = Vec::new();
        let mut r = 0;
        for col in 0..ncols {
            if r == nrows {
                break;
            }
            let Some(p) = (r..nrows).find(|&i| !a[i][col].is_zero()) else {
                continue;
            };
            a.swap(r, p);
            let pinv = a[r][col].inv().expect("pivot nonzero");
            for j in col..ncols {
                a[r][j] *= &pinv;
            }
            for i in 0..nrows {
                if i != r && !a[i][col].is_zero() {
                    let factor = a[i][col].clone();
                    for j in col..ncols {
                        let t = &factor * &a[r][j];
                        a[i][j] -= &t;
                    }
                }
            }
            pivots.push(col);
            r += 1;
        }
        (Matrix::from_dense(&a), pivots)
    }

    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    /// Canonical basis of the null space `{x : Ax = 0}`, one vector per free
    /// column of the RREF, in ascending free-column order. Each vector has a
    /// `1` in its free column, so the basis is deterministic.
    pub fn null_space(&self) -> Vec<Vec<Scalar>> {
        let (rref, pivots) = self.rref();
        let pivot_set: std::collections::BTreeSet<usize> = pivots.iter().copied().collect();
        let mut basis = Vec::new();
        for free in 0..self.ncols {
            if pivot_set.contains(&free) {
                continue;
            }
            let mut v = vec![Scalar::zero(); self.ncols];
            v[free] = Scalar::one();
            for (r, &pc) in pivots.iter().enumerate() {
                let coeff = rref.get(r, free);
                if !coeff.is_zero() {
                    v[pc] = -coeff;
                }
            }
            basis.push(v);
        }
        basis
    }

    /// Solve `Ax = b` exactly. Returns `None` when inconsistent; when the
    /// system is underdetermined the solution with all free variables zero is
    /// returned.
    pub fn solve(&self, b: &[Scalar]) -> Option<Vec<Scalar>> {
        assert_eq!(self.nrows, b.len(), "shape mismatch in solve");
        let mut aug = Matrix::zero(self.nrows, self.ncols + 1);
        for (i, j, v) in self.iter() {
            aug.rows[i].insert(j, v.clone());
        }
        for (i, v) in b.iter().enumerate() {
            if !v.is_zero() {
                aug.rows[i].insert(self.ncols, v.clone());
            }
        }
        let (rref, pivots) = aug.rref();
        if pivots.contains(&self.ncols) {
            return None; // a row reads 0 = 1
        }
        let mut x = vec![Scalar::zero(); self.ncols];
        for (r, &pc) in pivots.iter().enumerate() {
            x[pc] = rref.get(r, self.ncols);
        }
        Some(x)
    }
}

impl fmt::Display for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.nrows {
            let row: Vec<String> = (0..self.ncols).map(|j| self.get(i, j).to_string()).collect();
            writeln!(f, "[{}]", row.join(", "))?;
        }
        Ok(())
    }
}

/// A subspace of `Q^n` maintained as a row-echelon basis. The workhorse for
/// every spanning computation: operator-algebra closure, invariant-subspace
/// spinning, and membership tests.
#[derive(Debug, Clone)]
pub struct Span {
    ambient: usize,
    /// Echelon rows sorted by pivot column; each row is normalized to a unit
    /// leading coefficient.
    rows: Vec<Vec<Scalar>>,
}

impl Span {
    pub fn new(ambient: usize) -> Self {
        Span {
            ambient,
            rows: Vec::new(),
        }
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    fn reduce(&self, v: &[Scalar]) -> Vec<Scalar> {
        let mut v = v.to_vec();
        for row in &self.rows {
            let pivot = row.iter().position(|x| !x.is_zero()).expect("nonzero row");
            if !v[pivot].is_zero() {
                let factor = v[pivot].clone();
                for (x, r) in v.iter_mut().zip(row.iter()) {
                    let t = &factor * r;
                    *x -= &t;
                }
            }
        }
        v
    }

    /// Add a vector to the span. Returns `true` if it enlarged the subspace.
    pub fn insert(&mut self, v: &[Scalar]) -> bool {
        assert_eq!(v.len(), self.ambient, "ambient dimension mismatch");
        let mut v = self.reduce(v);
        let Some(pivot) = v.iter().position(|x| !x.is_zero()) else {
            return false;
        };
        let pinv = v[pivot].inv().expect("nonzero pivot");
        for x in v.iter_mut() {
            *x *= &pinv;
        }
        // Back-substitute into existing rows so the basis stays fully reduced.
        for row in &mut self.rows {
            if !row[pivot].is_zero() {
                let factor = row[pivot].clone();
                for (r, x) in row.iter_mut().zip(v.iter()) {
                    let t = &factor * x;
                    *r -= &t;
                }
            }
        }
        let pos = self
            .rows
            .partition_point(|row| row.iter().position(|x| !x.is_zero()).unwrap() < pivot);
        self.rows.insert(pos, v);
        true
    }

    pub fn contains(&self, v: &[Scalar]) -> bool {
        assert_eq!(v.len(), self.ambient, "ambient dimension mismatch");
        self.reduce(v).iter().all(|x| x.is_zero())
    }

    pub fn basis(&self) -> &[Vec<Scalar>] {
        &self.rows
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Independent Kronecker oracle: the textbook double loop over all four
    /// indices, written directly against the flat-index definition.
    fn kron_oracle(a: &Matrix, b: &Matrix) -> Matrix {
        let mut out = Matrix::zero(a.nrows() * b.nrows(), a.ncols() * b.ncols());
        for i in 0..a.nrows() {
            for j in 0..a.ncols() {
                for k in 0..b.nrows() {
                    for l in 0..b.ncols() {
                        let v = a.get(i, j) * b.get(k, l);
                        out.set(i * b.nrows() + k, j * b.ncols() + l, v);
                    }
                }
            }
        }
        out
    }

    #[test]
    fn kron_matches_double_loop_oracle() {
        let a = Matrix::from_rows(&[vec![1, 2], vec![3, -4]]);
        let b = Matrix::from_rows(&[vec![0, 5], vec![-1, 7]]);
        assert_eq!(a.kron(&b), kron_oracle(&a, &b));
        let c = Matrix::from_rows(&[vec![2, 0, 1]]);
        assert_eq!(a.kron(&c), kron_oracle(&a, &c));
        assert_eq!(c.kron(&a), kron_oracle(&c, &a));
    }

    #[test]
    fn kron_identity_blocks() {
        let a = Matrix::from_rows(&[vec![1, 2], vec![3, 4]]);
        let i2 = Matrix::identity(2);
        let left = i2.kron(&a);
        // I ⊗ A is block diagonal with copies of A.
        assert_eq!(left.get(0, 0), Scalar::from_int(1));
        assert_eq!(left.get(1, 0), Scalar::from_int(3));
        assert_eq!(left.get(2, 2), Scalar::from_int(1));
        assert_eq!(left.get(3, 2), Scalar::from_int(3));
        assert_eq!(left.get(2, 0), Scalar::zero());
    }

    #[test]
    fn kron_mixed_product() {
        let a = Matrix::from_rows(&[vec![1, 2], vec![0, 1]]);
        let b = Matrix::from_rows(&[vec![2, 1], vec![1, 1]]);
        let c = Matrix::from_rows(&[vec![1, -1], vec![2, 0]]);
        let d = Matrix::from_rows(&[vec![0, 1], vec![1, 3]]);
        let lhs = a.kron(&b).mul(&c.kron(&d));
        let rhs = a.mul(&c).kron(&b.mul(&d));
        assert_eq!(lhs, rhs, "(A⊗B)(C⊗D) must equal AC⊗BD");
    }

    #[test]
    fn kron_associates() {
        let a = Matrix::from_rows(&[vec![1, 2], vec![3, 4]]);
        let b = Matrix::from_rows(&[vec![0, 1], vec![1, 0]]);
        let c = Matrix::from_rows(&[vec![5]]);
        assert_eq!(a.kron(&b).kron(&c), a.kron(&b.kron(&c)));
    }

    #[test]
    fn flip_sends_basis_tensors_across() {
        // flip(2,3): e_1 ⊗ e_2 (flat 1·3+2 = 5) ↦ e_2 ⊗ e_1 (flat 2·2+1 = 5).
        let f = Matrix::flip(2, 3);
        let mut v = vec![Scalar::zero(); 6];
        v[1 * 3 + 2] = Scalar::one();
        let w = f.apply(&v);
        let mut expected = vec![Scalar::zero(); 6];
        expected[2 * 2 + 1] = Scalar::one();
        assert_eq!(w, expected);
        // e_0 ⊗ e_1 (flat 1) ↦ e_1 ⊗ e_0 (flat 2).
        let mut v = vec![Scalar::zero(); 6];
        v[1] = Scalar::one();
        let w = f.apply(&v);
        assert!(w[2].is_one() && w.iter().filter(|x| !x.is_zero()).count() == 1);
    }

    #[test]
    fn flip_round_trip_is_identity() {
        for (dx, dy) in [(2, 3), (3, 2), (1, 4), (4, 4)] {
            let there = Matrix::flip(dx, dy);
            let back = Matrix::flip(dy, dx);
            assert!(back.mul(&there).is_identity(), "flip({dx},{dy}) not undone");
        }
    }

    #[test]
    fn invert_small_matrices() {
        assert_eq!(Matrix::identity(4).invert().unwrap(), Matrix::identity(4));
        let f = Matrix::flip(2, 2);
        assert_eq!(f.invert().unwrap(), f);
        let a = Matrix::from_rows(&[vec![2, 1], vec![1, 1]]);
        let inv = a.invert().unwrap();
        assert!(a.mul(&inv).is_identity());
        assert!(inv.mul(&a).is_identity());
    }

    #[test]
    fn invert_singular_is_an_error() {
        let s = Matrix::from_rows(&[vec![1, 2], vec![2, 4]]);
        assert_eq!(s.invert(), Err(Error::SingularMatrix));
    }

    #[test]
    fn determinant_matches_cofactor_values() {
        assert_eq!(Matrix::identity(3).determinant(), Scalar::one());
        // flip(2,2) is the 4x4 permutation swapping the two middle basis
        // vectors, an odd permutation.
        assert_eq!(Matrix::flip(2, 2).determinant(), -Scalar::one());
        let a = Matrix::from_rows(&[vec![2, 1], vec![1, 1]]);
        assert_eq!(a.determinant(), Scalar::one());
        let b = Matrix::from_rows(&[vec![1, 2, 3], vec![0, 4, 5], vec![0, 0, 6]]);
        assert_eq!(b.determinant(), Scalar::from_int(24));
        let s = Matrix::from_rows(&[vec![1, 2], vec![2, 4]]);
        assert_eq!(s.determinant(), Scalar::zero());
    }

    #[test]
    #[should_panic(expected = "out of bounds")]
    fn out_of_bounds_access_panics() {
        let m = Matrix::identity(2);
        let _ = m.get(2, 0);
    }

    #[test]
    fn null_space_is_canonical() {
        // x + y + z = 0 has the canonical basis {(-1,1,0), (-1,0,1)}.
        let a = Matrix::from_rows(&[vec![1, 1, 1]]);
        let ns = a.null_space();
        assert_eq!(ns.len(), 2);
        assert_eq!(
            ns[0],
            vec![Scalar::from_int(-1), Scalar::one(), Scalar::zero()]
        );
        assert_eq!(
            ns[1],
            vec![Scalar::from_int(-1), Scalar::zero(), Scalar::one()]
        );
    }

    #[test]
    fn solve_consistent_and_inconsistent() {
        let a = Matrix::from_rows(&[vec![1, 1], vec![1, -1]]);
        let b = vec![Scalar::from_int(3), Scalar::from_int(1)];
        let x = a.solve(&b).unwrap();
        assert_eq!(x, vec![Scalar::from_int(2), Scalar::from_int(1)]);
        let s = Matrix::from_rows(&[vec![1, 1], vec![1, 1]]);
        let bad = vec![Scalar::from_int(0), Scalar::from_int(1)];
        assert_eq!(s.solve(&bad), None);
    }

    #[test]
    fn span_insert_and_membership() {
        let mut s = Span::new(3);
        assert!(s.insert(&[Scalar::one(), Scalar::one(), Scalar::zero()]));
        assert!(!s.insert(&[Scalar::from_int(2), Scalar::from_int(2), Scalar::zero()]));
        assert!(s.insert(&[Scalar::zero(), Scalar::one(), Scalar::one()]));
        assert_eq!(s.dim(), 2);
        assert!(s.contains(&[Scalar::one(), Scalar::zero(), -Scalar::one()]));
        assert!(!s.contains(&[Scalar::one(), Scalar::zero(), Scalar::zero()]));
    }
}
