use itertools::Itertools;

use crate::algebra::AlgebraData;
use crate::error::Error;
use crate::matrix::Matrix;
use crate::scalar::Scalar;

/// Flat index of a multi-index under the global convention: leftmost factor
/// most significant, so `(i_1, …, i_m) ↦ i_1·(d_2⋯d_m) + … + i_m`.
pub fn flat_index(dims: &[usize], multi: &[usize]) -> usize {
    assert_eq!(dims.len(), multi.len(), "index arity mismatch");
    let mut flat = 0;
    for (d, i) in dims.iter().zip(multi) {
        assert!(i < d, "index {i} out of range for factor of dimension {d}");
        flat = flat * d + i;
    }
    flat
}

/// Inverse of [`flat_index`].
pub fn unflatten(dims: &[usize], mut flat: usize) -> Vec<usize> {
    let mut multi = vec![0; dims.len()];
    for (slot, d) in multi.iter_mut().zip(dims).rev() {
        *slot = flat % d;
        flat /= d;
    }
    assert_eq!(flat, 0, "flat index out of range");
    multi
}

/// An element of a tensor product of algebras `A_1 ⊗ … ⊗ A_m`, stored as a
/// dense coefficient vector over the flat basis. The factor algebras are not
/// owned; every operation that needs multiplication takes the factor list
/// explicitly so the same element can be reinterpreted over equal hosts.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TensorElement {
    dims: Vec<usize>,
    coeffs: Vec<Scalar>,
}

impl TensorElement {
    pub fn zero(dims: Vec<usize>) -> Self {
        let len = dims.iter().product();
        TensorElement {
            dims,
            coeffs: vec![Scalar::zero(); len],
        }
    }

    pub fn from_coeffs(dims: Vec<usize>, coeffs: Vec<Scalar>) -> Self {
        assert_eq!(
            coeffs.len(),
            dims.iter().product::<usize>(),
            "coefficient vector length must match the product of dimensions"
        );
        TensorElement { dims, coeffs }
    }

    /// The unit `1 ⊗ … ⊗ 1` of the given factors.
    pub fn unit(factors: &[&AlgebraData]) -> Self {
        let dims: Vec<usize> = factors.iter().map(|a| a.dim()).collect();
        let mut out = TensorElement::zero(dims.clone());
        let supports: Vec<Vec<(usize, &Scalar)>> = factors
            .iter()
            .map(|a| {
                a.unit()
                    .iter()
                    .enumerate()
                    .filter(|(_, v)| !v.is_zero())
                    .collect()
            })
            .collect();
        for combo in supports.iter().multi_cartesian_product() {
            let multi: Vec<usize> = combo.iter().map(|(i, _)| *i).collect();
            let coeff: Scalar = combo
                .iter()
                .fold(Scalar::one(), |acc, (_, v)| acc * *v);
            out.coeffs[flat_index(&dims, &multi)] = coeff;
        }
        out
    }

    /// Pure tensor of basis vectors.
    pub fn basis(dims: Vec<usize>, multi: &[usize]) -> Self {
        let mut out = TensorElement::zero(dims);
        let idx = flat_index(&out.dims, multi);
        out.coeffs[idx] = Scalar::one();
        out
    }

    pub fn dims(&self) -> &[usize] {
        &self.dims
    }

    pub fn len(&self) -> usize {
        self.coeffs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn coeffs(&self) -> &[Scalar] {
        &self.coeffs
    }

    pub fn get(&self, multi: &[usize]) -> &Scalar {
        &self.coeffs[flat_index(&self.dims, multi)]
    }

    pub fn set(&mut self, multi: &[usize], value: Scalar) {
        let idx = flat_index(&self.dims, multi);
        self.coeffs[idx] = value;
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }

    pub fn add(&self, other: &TensorElement) -> TensorElement {
        assert_eq!(self.dims, other.dims, "dimension mismatch in add");
        TensorElement {
            dims: self.dims.clone(),
            coeffs: self
                .coeffs
                .iter()
                .zip(&other.coeffs)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }

    pub fn sub(&self, other: &TensorElement) -> TensorElement {
        assert_eq!(self.dims, other.dims, "dimension mismatch in sub");
        TensorElement {
            dims: self.dims.clone(),
            coeffs: self
                .coeffs
                .iter()
                .zip(&other.coeffs)
                .map(|(a, b)| a - b)
                .collect(),
        }
    }

    pub fn scale(&self, s: &Scalar) -> TensorElement {
        TensorElement {
            dims: self.dims.clone(),
            coeffs: self.coeffs.iter().map(|c| c * s).collect(),
        }
    }

    /// Nonzero coefficients as `(multi-index, value)` pairs in flat order.
    pub fn support(&self) -> Vec<(Vec<usize>, &Scalar)> {
        self.coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(flat, c)| (unflatten(&self.dims, flat), c))
            .collect()
    }

    /// Swap the two legs of a 2-factor element.
    pub fn swap(&self) -> TensorElement {
        assert_eq!(self.dims.len(), 2, "swap is defined for two legs");
        let (d0, d1) = (self.dims[0], self.dims[1]);
        let mut out = TensorElement::zero(vec![d1, d0]);
        for i in 0..d0 {
            for j in 0..d1 {
                out.coeffs[j * d0 + i] = self.coeffs[i * d1 + j].clone();
            }
        }
        out
    }

    /// Human-readable form over the factor basis labels, round-trippable
    /// through [`parse_tensor_expression`]. The zero element prints as `0`.
    pub fn display(&self, factors: &[&AlgebraData]) -> String {
        let labels: Vec<&[String]> = factors.iter().map(|a| a.labels()).collect();
        assert_eq!(
            self.dims,
            factors.iter().map(|a| a.dim()).collect::<Vec<_>>(),
            "factor dimensions mismatch"
        );
        let mut out = String::new();
        for (multi, coeff) in self.support() {
            let term = multi
                .iter()
                .zip(&labels)
                .map(|(&i, l)| l[i].as_str())
                .join("⊗");
            let abs = if coeff.is_negative() {
                -coeff.clone()
            } else {
                coeff.clone()
            };
            if out.is_empty() {
                if coeff.is_negative() {
                    out.push_str("- ");
                }
            } else if coeff.is_negative() {
                out.push_str(" - ");
            } else {
                out.push_str(" + ");
            }
            if !abs.is_one() {
                out.push_str(&abs.to_string());
                out.push(' ');
            }
            out.push_str(&term);
        }
        if out.is_empty() {
            out.push('0');
        }
        out
    }
}

/// Parse expressions like `g⊗1`, `1/2 1⊗1 + 1/2 1⊗u + 1/2 u⊗1 - 1/2 u⊗u`
/// against the factor basis labels. Terms are an optional rational
/// coefficient followed by `label⊗label⊗…`, joined by `+` or `-`.
pub fn parse_tensor_expression(
    input: &str,
    factors: &[&AlgebraData],
) -> Result<TensorElement, Error> {
    let dims: Vec<usize> = factors.iter().map(|a| a.dim()).collect();
    let mut out = TensorElement::zero(dims.clone());
    let input = input.trim();
    if input.is_empty() || input == "0" {
        return Ok(out);
    }

    // Split into signed terms.
    let mut terms: Vec<(bool, String)> = Vec::new();
    let mut current = String::new();
    let mut negative = false;
    let mut chars = input.chars().peekable();
    while let Some(c) = chars.next() {
        match c {
            '+' | '-' => {
                if current.trim().is_empty() && terms.is_empty() && c == '-' {
                    negative = true;
                } else if current.trim().is_empty() {
                    return Err(Error::Parse(format!("dangling sign in {input:?}")));
                } else {
                    terms.push((negative, std::mem::take(&mut current)));
                    negative = c == '-';
                }
            }
            _ => current.push(c),
        }
    }
    if current.trim().is_empty() {
        return Err(Error::Parse(format!("trailing sign in {input:?}")));
    }
    terms.push((negative, current));

    for (neg, term) in terms {
        let term = term.trim();
        let (coeff_str, tensor_str) = match term.rsplit_once(char::is_whitespace) {
            Some((c, t)) => (Some(c.trim()), t.trim()),
            None => (None, term),
        };
        let mut coeff = match coeff_str {
            Some(c) => c
                .parse::<Scalar>()
                .map_err(|_| Error::Parse(format!("bad coefficient {c:?} in term {term:?}")))?,
            None => Scalar::one(),
        };
        if neg {
            coeff = -coeff;
        }
        let labels: Vec<&str> = tensor_str.split('⊗').map(str::trim).collect();
        if labels.len() != factors.len() {
            return Err(Error::Parse(format!(
                "term {tensor_str:?} has {} legs but {} factors are expected",
                labels.len(),
                factors.len()
            )));
        }
        let mut multi = Vec::with_capacity(labels.len());
        for (label, factor) in labels.iter().zip(factors) {
            let idx = factor
                .labels()
                .iter()
                .position(|l| l == label)
                .ok_or_else(|| {
                    Error::Parse(format!(
                        "unknown basis label {label:?}; expected one of [{}]",
                        factor.labels().join(", ")
                    ))
                })?;
            multi.push(idx);
        }
        let idx = flat_index(&dims, &multi);
        out.coeffs[idx] += coeff;
    }
    Ok(out)
}

/// Product in the tensor product algebra `A_1 ⊗ … ⊗ A_m` (componentwise
/// multiplication with coefficients multiplied through).
pub fn tensor_mul(
    factors: &[&AlgebraData],
    a: &TensorElement,
    b: &TensorElement,
) -> TensorElement {
    let dims: Vec<usize> = factors.iter().map(|f| f.dim()).collect();
    assert_eq!(a.dims(), &dims[..], "left factor dimensions");
    assert_eq!(b.dims(), &dims[..], "right factor dimensions");
    let mut out = TensorElement::zero(dims.clone());
    for (ia, ca) in a.support() {
        for (ib, cb) in b.support() {
            let coeff = ca * cb;
            // Componentwise products of basis vectors, then the outer product.
            let factor_products: Vec<Vec<(usize, Scalar)>> = factors
                .iter()
                .enumerate()
                .map(|(leg, f)| {
                    f.product_basis(ia[leg], ib[leg])
                        .into_iter()
                        .enumerate()
                        .filter(|(_, v)| !v.is_zero())
                        .collect()
                })
                .collect();
            for combo in factor_products.iter().multi_cartesian_product() {
                let multi: Vec<usize> = combo.iter().map(|(k, _)| *k).collect();
                let v = combo
                    .iter()
                    .fold(coeff.clone(), |acc, (_, value)| acc * value);
                let idx = flat_index(&dims, &multi);
                out.coeffs[idx] += v;
            }
        }
    }
    out
}

/// Left multiplication by `a` as a matrix on the tensor product algebra.
pub fn tensor_left_mult(factors: &[&AlgebraData], a: &TensorElement) -> Matrix {
    let dims: Vec<usize> = factors.iter().map(|f| f.dim()).collect();
    assert_eq!(a.dims(), &dims[..], "element dimensions");
    let total: usize = dims.iter().product();
    let mut m = Matrix::zero(total, total);
    for j in 0..total {
        let ej = TensorElement::from_coeffs(dims.clone(), {
            let mut v = vec![Scalar::zero(); total];
            v[j] = Scalar::one();
            v
        });
        let col = tensor_mul(factors, a, &ej);
        for (k, v) in col.coeffs().iter().enumerate() {
            if !v.is_zero() {
                m.set(k, j, v.clone());
            }
        }
    }
    m
}

/// Two-sided inverse of `a` in the tensor product algebra, or
/// [`Error::NotInvertible`].
pub fn tensor_invert(
    factors: &[&AlgebraData],
    a: &TensorElement,
) -> Result<TensorElement, Error> {
    let unit = TensorElement::unit(factors);
    let l = tensor_left_mult(factors, a);
    let x = l
        .solve(unit.coeffs())
        .ok_or(Error::NotInvertible)?;
    let x = TensorElement::from_coeffs(a.dims().to_vec(), x);
    // For an associative unital algebra a right inverse of an element with
    // invertible left multiplication is two-sided; verify both ways anyway so
    // corrupt inputs fail loudly instead of producing a one-sided "inverse".
    if tensor_mul(factors, a, &x) != unit || tensor_mul(factors, &x, &a) != unit {
        return Err(Error::NotInvertible);
    }
    Ok(x)
}

/// Embed an element of `A_{p_1} ⊗ … ⊗ A_{p_k}` into `A_1 ⊗ … ⊗ A_m` with
/// units in every other leg. `positions` are 0-based, strictly increasing,
/// and must address factors whose dimensions match the element's legs.
pub fn embed(
    u: &TensorElement,
    factors: &[&AlgebraData],
    positions: &[usize],
) -> Result<TensorElement, Error> {
    let m = factors.len();
    if positions.len() != u.dims().len() {
        return Err(Error::dim(format!(
            "{} positions for an element with {} legs",
            positions.len(),
            u.dims().len()
        )));
    }
    for w in positions.windows(2) {
        if w[0] >= w[1] {
            return Err(Error::bad("positions must be strictly increasing"));
        }
    }
    for (&p, &d) in positions.iter().zip(u.dims()) {
        if p >= m {
            return Err(Error::PositionOutOfRange {
                position: p + 1,
                legs: m,
            });
        }
        if factors[p].dim() != d {
            return Err(Error::dim(format!(
                "leg of dimension {d} placed at position {} of dimension {}",
                p + 1,
                factors[p].dim()
            )));
        }
    }
    let dims: Vec<usize> = factors.iter().map(|f| f.dim()).collect();
    let mut out = TensorElement::zero(dims.clone());
    let unit_supports: Vec<Option<Vec<(usize, &Scalar)>>> = factors
        .iter()
        .enumerate()
        .map(|(leg, f)| {
            if positions.contains(&leg) {
                None
            } else {
                Some(
                    f.unit()
                        .iter()
                        .enumerate()
                        .filter(|(_, v)| !v.is_zero())
                        .collect(),
                )
            }
        })
        .collect();
    for (iu, cu) in u.support() {
        // Start from the element's legs, distribute units over the rest.
        let mut slots: Vec<Vec<(usize, Scalar)>> = Vec::with_capacity(m);
        for (leg, support) in unit_supports.iter().enumerate() {
            match support {
                None => {
                    let which = positions.iter().position(|&p| p == leg).unwrap();
                    slots.push(vec![(iu[which], Scalar::one())]);
                }
                Some(us) => slots.push(us.iter().map(|(i, v)| (*i, (*v).clone())).collect()),
            }
        }
        for combo in slots.iter().multi_cartesian_product() {
            let multi: Vec<usize> = combo.iter().map(|(i, _)| *i).collect();
            let v = combo.iter().fold(cu.clone(), |acc, (_, val)| acc * val);
            let idx = flat_index(&dims, &multi);
            out.coeffs[idx] += v;
        }
    }
    Ok(out)
}
