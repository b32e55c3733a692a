//! Multivariate polynomials with exact rational coefficients.
//!
//! This is deliberately small: the K-matrix solver only ever produces
//! equations of total degree at most two (the unknown appears twice in one
//! axiom and once in the others), so there is no need for a general
//! computer-algebra polynomial type. Variables are indexed from zero and
//! display as `t1, t2, …`.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use crate::scalar::Scalar;

/// A polynomial as a map from monomials to nonzero coefficients. A monomial
/// is a sorted list of variable indices with multiplicity: `[0, 0, 2]` is
/// `t1²·t3`, `[]` is the constant monomial.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Poly {
    terms: BTreeMap<Vec<usize>, Scalar>,
}

impl Poly {
    pub fn zero() -> Self {
        Poly::default()
    }

    pub fn constant(c: Scalar) -> Self {
        let mut p = Poly::zero();
        if !c.is_zero() {
            p.terms.insert(Vec::new(), c);
        }
        p
    }

    /// Build from `(monomial, coefficient)` pairs, accumulating repeats.
    /// Monomials are variable-index multisets and need not arrive sorted.
    pub fn from_terms(terms: impl IntoIterator<Item = (Vec<usize>, Scalar)>) -> Self {
        let mut out = Poly::zero();
        for (mut m, c) in terms {
            m.sort_unstable();
            out.insert_term(m, c);
        }
        out
    }

    pub fn var(index: usize) -> Self {
        let mut p = Poly::zero();
        p.terms.insert(vec![index], Scalar::one());
        p
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Some(c) iff the polynomial is the constant c (including zero).
    pub fn as_constant(&self) -> Option<Scalar> {
        match self.terms.len() {
            0 => Some(Scalar::zero()),
            1 => self.terms.get(&Vec::new()).cloned(),
            _ => None,
        }
    }

    /// Total degree; zero for the zero polynomial.
    pub fn degree(&self) -> usize {
        self.terms.keys().map(|m| m.len()).max().unwrap_or(0)
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<usize>, &Scalar)> {
        self.terms.iter()
    }

    pub fn coeff(&self, monomial: &[usize]) -> Scalar {
        self.terms.get(monomial).cloned().unwrap_or_else(Scalar::zero)
    }

    pub fn variables(&self) -> BTreeSet<usize> {
        self.terms.keys().flatten().copied().collect()
    }

    fn insert_term(&mut self, monomial: Vec<usize>, coefficient: Scalar) {
        if coefficient.is_zero() {
            return;
        }
        let entry = self.terms.entry(monomial);
        match entry {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(coefficient);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                let sum = o.get() + &coefficient;
                if sum.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = sum;
                }
            }
        }
    }

    pub fn add(&self, other: &Poly) -> Poly {
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.insert_term(m.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, other: &Poly) -> Poly {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Poly {
        Poly {
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (m.clone(), -c))
                .collect(),
        }
    }

    pub fn scale(&self, factor: &Scalar) -> Poly {
        if factor.is_zero() {
            return Poly::zero();
        }
        Poly {
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (m.clone(), c * factor))
                .collect(),
        }
    }

    pub fn mul(&self, other: &Poly) -> Poly {
        let mut out = Poly::zero();
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                let mut m = ma.clone();
                m.extend(mb.iter().copied());
                m.sort_unstable();
                out.insert_term(m, ca * cb);
            }
        }
        out
    }

    /// Replace one variable by a rational value.
    pub fn substitute(&self, var: usize, value: &Scalar) -> Poly {
        let mut out = Poly::zero();
        for (m, c) in &self.terms {
            let count = m.iter().filter(|&&v| v == var).count();
            let rest: Vec<usize> = m.iter().copied().filter(|&v| v != var).collect();
            let mut coefficient = c.clone();
            for _ in 0..count {
                coefficient = &coefficient * value;
            }
            out.insert_term(rest, coefficient);
        }
        out
    }

    /// Replace one variable by a polynomial.
    pub fn substitute_poly(&self, var: usize, value: &Poly) -> Poly {
        let mut out = Poly::zero();
        for (m, c) in &self.terms {
            let count = m.iter().filter(|&&v| v == var).count();
            let rest: Vec<usize> = m.iter().copied().filter(|&v| v != var).collect();
            let mut piece = Poly::from_terms([(rest, c.clone())]);
            for _ in 0..count {
                piece = piece.mul(value);
            }
            out = out.add(&piece);
        }
        out
    }

    /// Evaluate at a full assignment (indexed by variable).
    pub fn evaluate(&self, values: &[Scalar]) -> Scalar {
        let mut total = Scalar::zero();
        for (m, c) in &self.terms {
            let mut term = c.clone();
            for &v in m {
                term = &term * &values[v];
            }
            total = &total + &term;
        }
        total
    }

    /// Scale so that the coefficient of the smallest monomial is one; used to
    /// recognize proportional equations. Zero stays zero.
    pub fn normalized(&self) -> Poly {
        match self.terms.values().next() {
            None => Poly::zero(),
            Some(first) => {
                let inv = Scalar::one() / first.clone();
                self.scale(&inv)
            }
        }
    }
}

fn render_monomial(m: &[usize]) -> String {
    let mut parts: Vec<String> = Vec::new();
    let mut i = 0;
    while i < m.len() {
        let var = m[i];
        let mut power = 0;
        while i < m.len() && m[i] == var {
            power += 1;
            i += 1;
        }
        if power == 1 {
            parts.push(format!("t{}", var + 1));
        } else {
            parts.push(format!("t{}^{power}", var + 1));
        }
    }
    parts.join("*")
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        // Highest-degree terms first, ties in monomial order.
        let mut entries: Vec<(&Vec<usize>, &Scalar)> = self.terms.iter().collect();
        entries.sort_by(|a, b| b.0.len().cmp(&a.0.len()).then(a.0.cmp(b.0)));
        let mut out = String::new();
        for (idx, (m, c)) in entries.iter().enumerate() {
            let c_str = c.to_string();
            let (sign, magnitude) = match c_str.strip_prefix('-') {
                Some(rest) => ("-", rest.to_string()),
                None => ("+", c_str),
            };
            if idx == 0 {
                if sign == "-" {
                    out.push('-');
                }
            } else {
                out.push_str(if sign == "-" { " - " } else { " + " });
            }
            if m.is_empty() {
                out.push_str(&magnitude);
            } else if magnitude == "1" {
                out.push_str(&render_monomial(m));
            } else {
                out.push_str(&format!("{magnitude}*{}", render_monomial(m)));
            }
        }
        f.write_str(&out)
    }
}

/// A finite list of polynomial equations `p = 0` in a shared variable pool.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PolySystem {
    num_vars: usize,
    equations: Vec<Poly>,
}

impl PolySystem {
    pub fn new(num_vars: usize) -> Self {
        PolySystem {
            num_vars,
            equations: Vec::new(),
        }
    }

    /// Add one equation; identically-zero polynomials are dropped.
    pub fn push(&mut self, p: Poly) {
        if !p.is_zero() {
            self.equations.push(p);
        }
    }

    pub fn num_vars(&self) -> usize {
        self.num_vars
    }

    pub fn equations(&self) -> &[Poly] {
        &self.equations
    }

    pub fn is_empty(&self) -> bool {
        self.equations.is_empty()
    }

    /// Substitute a value for one variable in every equation, dropping any
    /// that become identically zero.
    pub fn substitute(&self, var: usize, value: &Scalar) -> PolySystem {
        let mut out = PolySystem::new(self.num_vars);
        for eq in &self.equations {
            out.push(eq.substitute(var, value));
        }
        out
    }

    /// Substitute a polynomial for one variable in every equation, dropping
    /// any that become identically zero.
    pub fn substitute_poly(&self, var: usize, value: &Poly) -> PolySystem {
        let mut out = PolySystem::new(self.num_vars);
        for eq in &self.equations {
            out.push(eq.substitute_poly(var, value));
        }
        out
    }

    /// Remove equations that are scalar multiples of earlier ones.
    pub fn dedupe(&self) -> PolySystem {
        let mut seen: Vec<Poly> = Vec::new();
        let mut out = PolySystem::new(self.num_vars);
        for eq in &self.equations {
            let norm = eq.normalized();
            if !seen.contains(&norm) {
                seen.push(norm);
                out.push(eq.clone());
            }
        }
        out
    }

    pub fn variables(&self) -> BTreeSet<usize> {
        self.equations.iter().flat_map(|e| e.variables()).collect()
    }
}

impl fmt::Display for PolySystem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.equations.is_empty() {
            return writeln!(f, "(no equations)");
        }
        for eq in &self.equations {
            writeln!(f, "{eq} = 0")?;
        }
        Ok(())
    }
}
