//! Finite-dimensional Hopf algebras by structure constants.
//!
//! Elements are coefficient vectors over the fixed basis `e_0 .. e_{d-1}`.
//! Products are stored densely (`e_i e_j` is a length-`d` vector), coproducts
//! sparsely as lists of [`Term`]s, and the antipode as a matrix whose `j`-th
//! column is `S(e_j)`.

use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::field::Field;
use crate::linalg::{axpy, unit_vector, Matrix};

/// One summand `coef · e_left ⊗ e_right` of a coproduct or coaction.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Term<F> {
    pub coef: F,
    pub left: usize,
    pub right: usize,
}

impl<F> Term<F> {
    pub fn new(coef: F, left: usize, right: usize) -> Self {
        Term { coef, left, right }
    }
}

/// Outcome of one exhaustive identity check.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, serde::Deserialize)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    /// First failing basis tuple, rendered with basis labels.
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub witness: Option<String>,
}

impl Check {
    pub fn pass(name: impl Into<String>) -> Self {
        Check {
            name: name.into(),
            passed: true,
            witness: None,
        }
    }

    pub fn fail(name: impl Into<String>, witness: impl Into<String>) -> Self {
        Check {
            name: name.into(),
            passed: false,
            witness: Some(witness.into()),
        }
    }

    pub(crate) fn from_witness(name: &str, witness: Option<String>) -> Self {
        match witness {
            None => Check::pass(name),
            Some(w) => Check::fail(name, w),
        }
    }
}

/// A list of named checks; failures are entries, not errors.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, serde::Deserialize)]
pub struct Report {
    pub checks: Vec<Check>,
}

impl Report {
    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn get(&self, name: &str) -> Option<&Check> {
        self.checks.iter().find(|c| c.name == name)
    }

    pub fn first_failure(&self) -> Option<&Check> {
        self.checks.iter().find(|c| !c.passed)
    }

    pub fn push(&mut self, check: Check) {
        self.checks.push(check);
    }

    pub fn extend(&mut self, other: Report) {
        self.checks.extend(other.checks);
    }
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for c in &self.checks {
            match &c.witness {
                None => writeln!(f, "  [pass] {}", c.name)?,
                Some(w) => writeln!(f, "  [FAIL] {} (at {})", c.name, w)?,
            }
        }
        Ok(())
    }
}

/// Associative unital algebra given by structure constants.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Algebra<F> {
    dim: usize,
    mult: Vec<F>,
    unit: Vec<F>,
}

impl<F: Field> Algebra<F> {
    /// `products[i][j]` is the coefficient vector of `e_i e_j`.
    pub fn new(dim: usize, products: Vec<Vec<Vec<F>>>, unit: Vec<F>) -> Result<Self> {
        let ctx = "Algebra::new";
        check_len(ctx, dim, products.len())?;
        check_len(ctx, dim, unit.len())?;
        let mut mult = Vec::with_capacity(dim * dim * dim);
        for row in products {
            check_len(ctx, dim, row.len())?;
            for v in row {
                check_len(ctx, dim, v.len())?;
                mult.extend(v);
            }
        }
        Ok(Algebra { dim, mult, unit })
    }

    pub fn from_fn(dim: usize, unit: Vec<F>, mut product: impl FnMut(usize, usize) -> Vec<F>) -> Self {
        let mut mult = Vec::with_capacity(dim * dim * dim);
        for i in 0..dim {
            for j in 0..dim {
                let v = product(i, j);
                debug_assert_eq!(v.len(), dim);
                mult.extend(v);
            }
        }
        Algebra { dim, mult, unit }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn unit(&self) -> &[F] {
        &self.unit
    }

    /// `e_i e_j`.
    pub fn product(&self, i: usize, j: usize) -> &[F] {
        let start = (i * self.dim + j) * self.dim;
        &self.mult[start..start + self.dim]
    }

    pub fn mul(&self, x: &[F], y: &[F]) -> Vec<F> {
        let mut out = vec![F::zero(); self.dim];
        for (i, a) in x.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in y.iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                axpy(&mut out, &(a.clone() * b), self.product(i, j));
            }
        }
        out
    }

    /// Product of an element with a basis element on the right.
    pub fn mul_basis_right(&self, x: &[F], j: usize) -> Vec<F> {
        let mut out = vec![F::zero(); self.dim];
        for (i, a) in x.iter().enumerate() {
            axpy(&mut out, a, self.product(i, j));
        }
        out
    }

    pub fn mul_basis_left(&self, i: usize, y: &[F]) -> Vec<F> {
        let mut out = vec![F::zero(); self.dim];
        for (j, b) in y.iter().enumerate() {
            axpy(&mut out, b, self.product(i, j));
        }
        out
    }

    pub fn opposite(&self) -> Self {
        Algebra::from_fn(self.dim, self.unit.clone(), |i, j| self.product(j, i).to_vec())
    }

    /// `A ⊗ B` with componentwise product, basis `(a, b) ↦ a * dim_B + b`.
    pub fn tensor(&self, other: &Algebra<F>) -> Algebra<F> {
        let (m, n) = (self.dim, other.dim);
        let mut unit = vec![F::zero(); m * n];
        for (a, x) in self.unit.iter().enumerate() {
            for (b, y) in other.unit.iter().enumerate() {
                unit[a * n + b] = x.clone() * y;
            }
        }
        Algebra::from_fn(m * n, unit, |i, j| {
            let (a, b) = (i / n, i % n);
            let (c, d) = (j / n, j % n);
            let left = self.product(a, c);
            let right = other.product(b, d);
            let mut v = vec![F::zero(); m * n];
            for (p, x) in left.iter().enumerate() {
                if x.is_zero() {
                    continue;
                }
                for (q, y) in right.iter().enumerate() {
                    if !y.is_zero() {
                        v[p * n + q] = x.clone() * y;
                    }
                }
            }
            v
        })
    }

    /// Matrix of `y ↦ x y`.
    pub fn left_multiplication(&self, x: &[F]) -> Matrix<F> {
        let cols: Vec<Vec<F>> = (0..self.dim).map(|j| self.mul_basis_right(x, j)).collect();
        Matrix::from_columns(self.dim, &cols).expect("square")
    }

    /// Two-sided inverse of `x`, if any.
    pub fn inverse_of(&self, x: &[F]) -> Result<Vec<F>> {
        let l = self.left_multiplication(x);
        let y = crate::linalg::solve(&l, &self.unit)?
            .ok_or_else(|| Error::Singular("element is not invertible".into()))?;
        if self.mul(&y, x) != self.unit {
            return Err(Error::Singular("left inverse is not a right inverse".into()));
        }
        Ok(y)
    }

    pub fn associativity_witness(&self) -> Option<(usize, usize, usize)> {
        let d = self.dim;
        for i in 0..d {
            for j in 0..d {
                let ij = self.product(i, j);
                for k in 0..d {
                    let left = self.mul_basis_right(ij, k);
                    let right = self.mul_basis_left(i, self.product(j, k));
                    if left != right {
                        return Some((i, j, k));
                    }
                }
            }
        }
        None
    }

    pub fn unitality_witness(&self) -> Option<usize> {
        (0..self.dim).find(|&i| {
            let e = unit_vector::<F>(self.dim, i);
            self.mul(&self.unit, &e) != e || self.mul(&e, &self.unit) != e
        })
    }
}

/// Coalgebra with sparse coproduct.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Coalgebra<F> {
    dim: usize,
    comult: Vec<Vec<Term<F>>>,
    counit: Vec<F>,
}

impl<F: Field> Coalgebra<F> {
    pub fn new(dim: usize, comult: Vec<Vec<Term<F>>>, counit: Vec<F>) -> Result<Self> {
        let ctx = "Coalgebra::new";
        check_len(ctx, dim, comult.len())?;
        check_len(ctx, dim, counit.len())?;
        for terms in &comult {
            for t in terms {
                if t.left >= dim || t.right >= dim {
                    return Err(Error::Dimension {
                        context: ctx,
                        expected: dim,
                        found: t.left.max(t.right) + 1,
                    });
                }
            }
        }
        let comult = comult.into_iter().map(compress_terms).collect();
        Ok(Coalgebra { dim, comult, counit })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn counit(&self) -> &[F] {
        &self.counit
    }

    pub fn coproduct(&self, h: usize) -> &[Term<F>] {
        &self.comult[h]
    }

    /// Iterated coproduct of `e_h` into `legs` tensor factors, expanding the
    /// last factor each time.
    pub fn sweedler(&self, h: usize, legs: usize) -> Vec<(F, Vec<usize>)> {
        assert!(legs >= 1);
        let mut acc = vec![(F::one(), vec![h])];
        for _ in 1..legs {
            let mut next = Vec::new();
            for (c, idx) in &acc {
                let last = *idx.last().expect("nonempty");
                for t in self.coproduct(last) {
                    let mut v = idx[..idx.len() - 1].to_vec();
                    v.push(t.left);
                    v.push(t.right);
                    next.push((c.clone() * &t.coef, v));
                }
            }
            acc = next;
        }
        acc
    }

    /// Coproduct of an arbitrary element as a `d × d` coefficient matrix.
    pub fn comultiply(&self, x: &[F]) -> Matrix<F> {
        let mut m = Matrix::zeros(self.dim, self.dim);
        for (h, a) in x.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for t in self.coproduct(h) {
                m[(t.left, t.right)] += a.clone() * &t.coef;
            }
        }
        m
    }

    pub fn opposite(&self) -> Self {
        Coalgebra {
            dim: self.dim,
            comult: self
                .comult
                .iter()
                .map(|ts| ts.iter().map(|t| Term::new(t.coef.clone(), t.right, t.left)).collect())
                .collect(),
            counit: self.counit.clone(),
        }
    }

    /// Coalgebra on `C ⊗ C`: `Δ(h⊗k) = Σ (h1⊗k1) ⊗ (h2⊗k2)`.
    pub fn tensor_square(&self) -> Coalgebra<F> {
        let d = self.dim;
        let mut comult = Vec::with_capacity(d * d);
        let mut counit = Vec::with_capacity(d * d);
        for h in 0..d {
            for k in 0..d {
                let mut terms = Vec::new();
                for s in self.coproduct(h) {
                    for t in self.coproduct(k) {
                        terms.push(Term::new(
                            s.coef.clone() * &t.coef,
                            s.left * d + t.left,
                            s.right * d + t.right,
                        ));
                    }
                }
                comult.push(compress_terms(terms));
                counit.push(self.counit[h].clone() * &self.counit[k]);
            }
        }
        Coalgebra {
            dim: d * d,
            comult,
            counit,
        }
    }

    pub fn coassociativity_witness(&self) -> Option<usize> {
        let d = self.dim;
        (0..d).find(|&h| {
            let mut left = vec![F::zero(); d * d * d];
            let mut right = vec![F::zero(); d * d * d];
            for t in self.coproduct(h) {
                for s in self.coproduct(t.left) {
                    left[(s.left * d + s.right) * d + t.right] += t.coef.clone() * &s.coef;
                }
                for s in self.coproduct(t.right) {
                    right[(t.left * d + s.left) * d + s.right] += t.coef.clone() * &s.coef;
                }
            }
            left != right
        })
    }

    pub fn counitality_witness(&self) -> Option<usize> {
        let d = self.dim;
        (0..d).find(|&h| {
            let mut left = vec![F::zero(); d];
            let mut right = vec![F::zero(); d];
            for t in self.coproduct(h) {
                left[t.right] += self.counit[t.left].clone() * &t.coef;
                right[t.left] += self.counit[t.right].clone() * &t.coef;
            }
            let e = unit_vector::<F>(d, h);
            left != e || right != e
        })
    }
}

/// Merges repeated index pairs and drops zero coefficients.
pub(crate) fn compress_terms<F: Field>(terms: Vec<Term<F>>) -> Vec<Term<F>> {
    let mut out: Vec<Term<F>> = Vec::with_capacity(terms.len());
    for t in terms {
        if let Some(existing) = out.iter_mut().find(|e| e.left == t.left && e.right == t.right) {
            existing.coef += t.coef;
        } else {
            out.push(t);
        }
    }
    out.retain(|t| !t.coef.is_zero());
    out
}

fn check_len(context: &'static str, expected: usize, found: usize) -> Result<()> {
    if expected != found {
        return Err(Error::Dimension {
            context,
            expected,
            found,
        });
    }
    Ok(())
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum OppositeKind {
    Op,
    Cop,
    OpCop,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HopfAlgebra<F> {
    algebra: Algebra<F>,
    coalgebra: Coalgebra<F>,
    antipode: Matrix<F>,
    labels: Vec<String>,
}

impl<F: Field> HopfAlgebra<F> {
    pub fn new(
        algebra: Algebra<F>,
        coalgebra: Coalgebra<F>,
        antipode: Matrix<F>,
        labels: Vec<String>,
    ) -> Result<Self> {
        let d = algebra.dim();
        check_len("HopfAlgebra::new", d, coalgebra.dim())?;
        check_len("HopfAlgebra::new", d, labels.len())?;
        if antipode.rows() != d || antipode.cols() != d {
            return Err(Error::Dimension {
                context: "HopfAlgebra::new (antipode)",
                expected: d,
                found: antipode.rows().max(antipode.cols()),
            });
        }
        Ok(HopfAlgebra {
            algebra,
            coalgebra,
            antipode,
            labels,
        })
    }

    pub fn dim(&self) -> usize {
        self.algebra.dim()
    }

    pub fn algebra(&self) -> &Algebra<F> {
        &self.algebra
    }

    pub fn coalgebra(&self) -> &Coalgebra<F> {
        &self.coalgebra
    }

    pub fn antipode(&self) -> &Matrix<F> {
        &self.antipode
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, i: usize) -> &str {
        &self.labels[i]
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }

    pub fn unit(&self) -> &[F] {
        self.algebra.unit()
    }

    pub fn counit(&self) -> &[F] {
        self.coalgebra.counit()
    }

    pub fn basis(&self, i: usize) -> Vec<F> {
        unit_vector(self.dim(), i)
    }

    pub fn product(&self, i: usize, j: usize) -> &[F] {
        self.algebra.product(i, j)
    }

    pub fn mul(&self, x: &[F], y: &[F]) -> Vec<F> {
        self.algebra.mul(x, y)
    }

    pub fn coproduct(&self, h: usize) -> &[Term<F>] {
        self.coalgebra.coproduct(h)
    }

    pub fn sweedler(&self, h: usize, legs: usize) -> Vec<(F, Vec<usize>)> {
        self.coalgebra.sweedler(h, legs)
    }

    /// `S(e_j)`.
    pub fn antipode_of(&self, j: usize) -> Vec<F> {
        self.antipode.column(j)
    }

    pub fn apply_antipode(&self, x: &[F]) -> Vec<F> {
        self.antipode.mul_vec(x).expect("antipode dimension")
    }

    pub fn counit_of(&self, x: &[F]) -> F {
        crate::linalg::dot(self.counit(), x)
    }

    /// Renders a vector with basis labels, e.g. `2*c - x1`.
    pub fn render(&self, x: &[F]) -> String {
        render_vector(x, &self.labels)
    }

    pub fn with_labels(mut self, labels: Vec<String>) -> Result<Self> {
        check_len("HopfAlgebra::with_labels", self.dim(), labels.len())?;
        self.labels = labels;
        Ok(self)
    }

    /// Exhaustive axiom verification over basis tuples.
    pub fn verify_axioms(&self) -> Report {
        let d = self.dim();
        let lab = |i: usize| self.labels[i].clone();
        let mut report = Report::default();

        report.push(Check::from_witness(
            "associativity",
            self.algebra
                .associativity_witness()
                .map(|(i, j, k)| format!("({}, {}, {})", lab(i), lab(j), lab(k))),
        ));
        report.push(Check::from_witness(
            "unitality",
            self.algebra.unitality_witness().map(lab),
        ));
        report.push(Check::from_witness(
            "coassociativity",
            self.coalgebra.coassociativity_witness().map(lab),
        ));
        report.push(Check::from_witness(
            "counitality",
            self.coalgebra.counitality_witness().map(lab),
        ));

        let mut delta_mult = None;
        let mut eps_mult = None;
        'outer: for i in 0..d {
            for j in 0..d {
                let prod = self.product(i, j);
                if eps_mult.is_none() && self.counit_of(prod) != self.counit()[i].clone() * &self.counit()[j] {
                    eps_mult = Some(format!("({}, {})", lab(i), lab(j)));
                }
                let lhs = self.coalgebra.comultiply(prod);
                let mut rhs = Matrix::zeros(d, d);
                for s in self.coproduct(i) {
                    for t in self.coproduct(j) {
                        let c = s.coef.clone() * &t.coef;
                        let left = self.product(s.left, t.left);
                        let right = self.product(s.right, t.right);
                        for (p, x) in left.iter().enumerate() {
                            if x.is_zero() {
                                continue;
                            }
                            for (q, y) in right.iter().enumerate() {
                                if !y.is_zero() {
                                    rhs[(p, q)] += c.clone() * x * y;
                                }
                            }
                        }
                    }
                }
                if lhs != rhs {
                    delta_mult = Some(format!("({}, {})", lab(i), lab(j)));
                    break 'outer;
                }
            }
        }
        report.push(Check::from_witness("coproduct multiplicative", delta_mult));
        report.push(Check::from_witness("counit multiplicative", eps_mult));

        let unit_ok = {
            let du = self.coalgebra.comultiply(self.unit());
            let mut expected = Matrix::zeros(d, d);
            for (p, x) in self.unit().iter().enumerate() {
                for (q, y) in self.unit().iter().enumerate() {
                    expected[(p, q)] = x.clone() * y;
                }
            }
            du == expected && self.counit_of(self.unit()) == F::one()
        };
        report.push(if unit_ok {
            Check::pass("unit is grouplike")
        } else {
            Check::fail("unit is grouplike", "1")
        });

        let antipode_witness = (0..d).find(|&h| {
            let target: Vec<F> = self.unit().iter().map(|u| u.clone() * &self.counit()[h]).collect();
            let mut left = vec![F::zero(); d];
            let mut right = vec![F::zero(); d];
            for t in self.coproduct(h) {
                let l = self.mul(&self.antipode_of(t.left), &self.basis(t.right));
                axpy(&mut left, &t.coef, &l);
                let r = self.mul(&self.basis(t.left), &self.antipode_of(t.right));
                axpy(&mut right, &t.coef, &r);
            }
            left != target || right != target
        });
        report.push(Check::from_witness("antipode", antipode_witness.map(lab)));

        report.push(match self.antipode.det() {
            Ok(det) if !det.is_zero() => Check::pass("antipode invertible"),
            _ => Check::fail("antipode invertible", "det S = 0"),
        });
        report
    }

    pub fn antipode_inverse(&self) -> Result<Matrix<F>> {
        self.antipode
            .inverse()
            .map_err(|_| Error::Structural("antipode is singular; not a finite-dimensional Hopf algebra".into()))
    }

    /// `H*` on the dual basis: product dual to `Δ`, coproduct dual to the
    /// product, antipode the transpose of `S`.
    pub fn dualize(&self) -> HopfAlgebra<F> {
        let d = self.dim();
        let mut products = vec![vec![vec![F::zero(); d]; d]; d];
        for k in 0..d {
            for t in self.coproduct(k) {
                products[t.left][t.right][k] += t.coef.clone();
            }
        }
        let algebra = Algebra::new(d, products, self.counit().to_vec()).expect("dual algebra shape");
        let comult = (0..d)
            .map(|k| {
                let mut terms = Vec::new();
                for i in 0..d {
                    for j in 0..d {
                        let c = &self.product(i, j)[k];
                        if !c.is_zero() {
                            terms.push(Term::new(c.clone(), i, j));
                        }
                    }
                }
                terms
            })
            .collect();
        let coalgebra = Coalgebra::new(d, comult, self.unit().to_vec()).expect("dual coalgebra shape");
        let labels = self
            .labels
            .iter()
            .map(|l| match l.strip_suffix('*') {
                Some(base) => base.to_string(),
                None => format!("{l}*"),
            })
            .collect();
        HopfAlgebra {
            algebra,
            coalgebra,
            antipode: self.antipode.transpose(),
            labels,
        }
    }

    pub fn opposite_variant(&self, which: OppositeKind) -> Result<HopfAlgebra<F>> {
        let (algebra, coalgebra, antipode) = match which {
            OppositeKind::Op => (self.algebra.opposite(), self.coalgebra.clone(), self.antipode_inverse()?),
            OppositeKind::Cop => (self.algebra.clone(), self.coalgebra.opposite(), self.antipode_inverse()?),
            OppositeKind::OpCop => (self.algebra.opposite(), self.coalgebra.opposite(), self.antipode.clone()),
        };
        Ok(HopfAlgebra {
            algebra,
            coalgebra,
            antipode,
            labels: self.labels.clone(),
        })
    }

    pub fn op(&self) -> Result<HopfAlgebra<F>> {
        self.opposite_variant(OppositeKind::Op)
    }

    pub fn tensor_square_coalgebra(&self) -> Coalgebra<F> {
        self.coalgebra.tensor_square()
    }

    pub fn tensor_square_algebra(&self) -> Algebra<F> {
        self.algebra.tensor(&self.algebra)
    }

    /// Replaces the product, keeping the coalgebra; the antipode is solved
    /// from the antipode axiom.
    pub(crate) fn with_product(&self, algebra: Algebra<F>) -> Result<HopfAlgebra<F>> {
        let id = Matrix::identity(self.dim());
        let antipode = crate::convolution::hom_conv_inverse(&id, &self.coalgebra, &algebra)
            .map_err(|_| Error::Structural("twisted bialgebra has no antipode".into()))?;
        Ok(HopfAlgebra {
            algebra,
            coalgebra: self.coalgebra.clone(),
            antipode,
            labels: self.labels.clone(),
        })
    }
}

pub fn render_vector<F: Field>(x: &[F], labels: &[String]) -> String {
    let parts: Vec<String> = x
        .iter()
        .enumerate()
        .filter(|(_, c)| !c.is_zero())
        .map(|(i, c)| {
            if c.is_one() {
                labels[i].clone()
            } else {
                format!("({c})*{}", labels[i])
            }
        })
        .collect();
    if parts.is_empty() {
        "0".into()
    } else {
        parts.join(" + ")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::Rational;

    fn q(n: i64) -> Rational {
        Rational::from_integer(n.into())
    }

    /// Group algebra of Z/2 = {1, g}.
    pub(crate) fn kz2() -> HopfAlgebra<Rational> {
        let e = |i| unit_vector::<Rational>(2, i);
        let algebra = Algebra::from_fn(2, e(0), |i, j| e((i + j) % 2));
        let coalgebra = Coalgebra::new(
            2,
            vec![vec![Term::new(q(1), 0, 0)], vec![Term::new(q(1), 1, 1)]],
            vec![q(1), q(1)],
        )
        .unwrap();
        HopfAlgebra::new(algebra, coalgebra, Matrix::identity(2), vec!["1".into(), "g".into()]).unwrap()
    }

    #[test]
    fn group_algebra_passes() {
        let h = kz2();
        let report = h.verify_axioms();
        assert!(report.all_passed(), "{report}");
        assert_eq!(h.antipode_inverse().unwrap(), Matrix::identity(2));
    }

    #[test]
    fn group_algebra_self_dual_in_odd_characteristic() {
        let h = kz2();
        let dual = h.dualize();
        assert!(dual.verify_axioms().all_passed());
        // The characters 1* + g* and 1* - g* form a grouplike basis of the dual.
        let a = vec![q(1), q(1)];
        let b = vec![q(1), q(-1)];
        assert_eq!(dual.mul(&a, &a), a);
        assert_eq!(dual.mul(&b, &b), a);
        assert_eq!(dual.mul(&a, &b), b);
        let db = dual.coalgebra().comultiply(&b);
        for i in 0..2 {
            for j in 0..2 {
                assert_eq!(db[(i, j)], b[i].clone() * &b[j]);
            }
        }
        assert_eq!(dual.dualize(), h);
    }

    #[test]
    fn opposite_of_commutative_is_itself() {
        let h = kz2();
        let op = h.op().unwrap();
        assert_eq!(op.algebra(), h.algebra());
        assert_eq!(op.op().unwrap(), h);
    }

    #[test]
    fn tensor_square_shape() {
        let h = kz2();
        let t = h.tensor_square_coalgebra();
        assert_eq!(t.dim(), 4);
        assert_eq!(t.counit()[0], q(1));
        assert!(t.coassociativity_witness().is_none());
        assert!(t.counitality_witness().is_none());
    }

    #[test]
    fn broken_unit_is_reported() {
        let h = kz2();
        let bad = HopfAlgebra::new(
            Algebra::from_fn(2, vec![q(0), q(1)], |i, j| unit_vector(2, (i + j) % 2)),
            h.coalgebra().clone(),
            Matrix::identity(2),
            h.labels().to_vec(),
        )
        .unwrap();
        let report = bad.verify_axioms();
        assert!(!report.get("unitality").unwrap().passed);
    }
}
