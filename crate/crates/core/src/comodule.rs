//! Algebras in the category of right comodules over `H`, and the braided
//! constructions on them.
//!
//! A [`ComoduleAlgebra`] stores its ambient Hopf algebra `H` and satisfies
//! `ρ(ab) = Σ a0 b0 ⊗ b1 a1`, i.e. it is an `H^op`-comodule algebra. Ordinary
//! right `K`-comodule algebras are therefore stored with ambient `K^op`.

use crate::convolution::Functional2;
use crate::error::{Error, Result};
use crate::field::Field;
use crate::hopf::{compress_terms, Algebra, Check, HopfAlgebra, Report, Term};
use crate::linalg::{axpy, unit_vector, Matrix};

/// A finite-dimensional right `H`-comodule.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Comodule<F> {
    dim: usize,
    coaction: Vec<Vec<Term<F>>>,
    hopf: HopfAlgebra<F>,
    labels: Vec<String>,
}

impl<F: Field> Comodule<F> {
    pub fn new(coaction: Vec<Vec<Term<F>>>, hopf: HopfAlgebra<F>, labels: Vec<String>) -> Result<Self> {
        let dim = coaction.len();
        validate_coaction("Comodule::new", dim, &coaction, &hopf, &labels)?;
        let coaction = coaction.into_iter().map(compress_terms).collect();
        Ok(Comodule {
            dim,
            coaction,
            hopf,
            labels,
        })
    }

    /// The regular comodule `H` with coaction `Δ`.
    pub fn regular(hopf: &HopfAlgebra<F>) -> Self {
        Comodule {
            dim: hopf.dim(),
            coaction: (0..hopf.dim()).map(|i| hopf.coproduct(i).to_vec()).collect(),
            hopf: hopf.clone(),
            labels: hopf.labels().to_vec(),
        }
    }

    /// The one-dimensional comodule `k` with `ρ(1) = 1 ⊗ 1`.
    pub fn trivial(hopf: &HopfAlgebra<F>) -> Self {
        Comodule {
            dim: 1,
            coaction: vec![unit_terms(hopf)],
            hopf: hopf.clone(),
            labels: vec!["1".into()],
        }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn coaction(&self, a: usize) -> &[Term<F>] {
        &self.coaction[a]
    }

    pub fn hopf(&self) -> &HopfAlgebra<F> {
        &self.hopf
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn comodule_report(&self) -> Report {
        comodule_axioms(self.dim, &self.coaction, &self.hopf, &self.labels)
    }
}

fn unit_terms<F: Field>(hopf: &HopfAlgebra<F>) -> Vec<Term<F>> {
    hopf.unit()
        .iter()
        .enumerate()
        .filter(|(_, c)| !c.is_zero())
        .map(|(h, c)| Term::new(c.clone(), 0, h))
        .collect()
}

fn validate_coaction<F: Field>(
    context: &'static str,
    dim: usize,
    coaction: &[Vec<Term<F>>],
    hopf: &HopfAlgebra<F>,
    labels: &[String],
) -> Result<()> {
    if labels.len() != dim {
        return Err(Error::Dimension {
            context,
            expected: dim,
            found: labels.len(),
        });
    }
    for terms in coaction {
        for t in terms {
            if t.left >= dim || t.right >= hopf.dim() {
                return Err(Error::InvalidParameter(format!(
                    "{context}: coaction term ({}, {}) out of range",
                    t.left, t.right
                )));
            }
        }
    }
    Ok(())
}

fn comodule_axioms<F: Field>(
    dim: usize,
    coaction: &[Vec<Term<F>>],
    hopf: &HopfAlgebra<F>,
    labels: &[String],
) -> Report {
    let d = hopf.dim();
    let mut report = Report::default();
    let coassoc = (0..dim).find(|&a| {
        let mut left = vec![F::zero(); dim * d * d];
        let mut right = vec![F::zero(); dim * d * d];
        for t in &coaction[a] {
            for s in &coaction[t.left] {
                left[(s.left * d + s.right) * d + t.right] += t.coef.clone() * &s.coef;
            }
            for s in hopf.coproduct(t.right) {
                right[(t.left * d + s.left) * d + s.right] += t.coef.clone() * &s.coef;
            }
        }
        left != right
    });
    report.push(Check::from_witness("coaction coassociative", coassoc.map(|a| labels[a].clone())));
    let counital = (0..dim).find(|&a| {
        let mut v = vec![F::zero(); dim];
        for t in &coaction[a] {
            v[t.left] += t.coef.clone() * &hopf.counit()[t.right];
        }
        v != unit_vector::<F>(dim, a)
    });
    report.push(Check::from_witness("coaction counital", counital.map(|a| labels[a].clone())));
    report
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ComoduleAlgebra<F> {
    algebra: Algebra<F>,
    coaction: Vec<Vec<Term<F>>>,
    hopf: HopfAlgebra<F>,
    labels: Vec<String>,
}

impl<F: Field> ComoduleAlgebra<F> {
    pub fn new(
        algebra: Algebra<F>,
        coaction: Vec<Vec<Term<F>>>,
        hopf: HopfAlgebra<F>,
        labels: Vec<String>,
    ) -> Result<Self> {
        let dim = algebra.dim();
        if coaction.len() != dim {
            return Err(Error::Dimension {
                context: "ComoduleAlgebra::new",
                expected: dim,
                found: coaction.len(),
            });
        }
        validate_coaction("ComoduleAlgebra::new", dim, &coaction, &hopf, &labels)?;
        let coaction = coaction.into_iter().map(compress_terms).collect();
        Ok(ComoduleAlgebra {
            algebra,
            coaction,
            hopf,
            labels,
        })
    }

    /// The base field as a comodule algebra.
    pub fn trivial(hopf: &HopfAlgebra<F>) -> Self {
        ComoduleAlgebra {
            algebra: Algebra::from_fn(1, vec![F::one()], |_, _| vec![F::one()]),
            coaction: vec![unit_terms(hopf)],
            hopf: hopf.clone(),
            labels: vec!["1".into()],
        }
    }

    /// `H^op` with coaction `Δ`.
    pub fn regular_op(hopf: &HopfAlgebra<F>) -> Self {
        ComoduleAlgebra {
            algebra: hopf.algebra().opposite(),
            coaction: (0..hopf.dim()).map(|i| hopf.coproduct(i).to_vec()).collect(),
            hopf: hopf.clone(),
            labels: hopf.labels().to_vec(),
        }
    }

    pub fn dim(&self) -> usize {
        self.algebra.dim()
    }

    pub fn algebra(&self) -> &Algebra<F> {
        &self.algebra
    }

    pub fn hopf(&self) -> &HopfAlgebra<F> {
        &self.hopf
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn coaction(&self, a: usize) -> &[Term<F>] {
        &self.coaction[a]
    }

    pub fn coactions(&self) -> &[Vec<Term<F>>] {
        &self.coaction
    }

    pub fn mul(&self, x: &[F], y: &[F]) -> Vec<F> {
        self.algebra.mul(x, y)
    }

    pub fn product(&self, a: usize, b: usize) -> &[F] {
        self.algebra.product(a, b)
    }

    pub fn unit(&self) -> &[F] {
        self.algebra.unit()
    }

    /// `ρ(x)` as a `dim A × dim H` coefficient matrix.
    pub fn coact(&self, x: &[F]) -> Matrix<F> {
        let mut m = Matrix::zeros(self.dim(), self.hopf.dim());
        for (a, c) in x.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            for t in &self.coaction[a] {
                m[(t.left, t.right)] += c.clone() * &t.coef;
            }
        }
        m
    }

    pub fn as_comodule(&self) -> Comodule<F> {
        Comodule {
            dim: self.dim(),
            coaction: self.coaction.clone(),
            hopf: self.hopf.clone(),
            labels: self.labels.clone(),
        }
    }

    pub fn with_labels(mut self, labels: Vec<String>) -> Result<Self> {
        if labels.len() != self.dim() {
            return Err(Error::Dimension {
                context: "ComoduleAlgebra::with_labels",
                expected: self.dim(),
                found: labels.len(),
            });
        }
        self.labels = labels;
        Ok(self)
    }

    /// Algebra axioms, comodule axioms, `ρ(ab) = Σ a0 b0 ⊗ b1 a1` and
    /// `ρ(1) = 1 ⊗ 1`, exhaustively on basis pairs.
    pub fn check(&self) -> Report {
        let m = self.dim();
        let lab = |i: usize| self.labels[i].clone();
        let mut report = Report::default();
        report.push(Check::from_witness(
            "associativity",
            self.algebra
                .associativity_witness()
                .map(|(i, j, k)| format!("({}, {}, {})", lab(i), lab(j), lab(k))),
        ));
        report.push(Check::from_witness("unitality", self.algebra.unitality_witness().map(lab)));
        report.extend(comodule_axioms(m, &self.coaction, &self.hopf, &self.labels));

        let mut witness = None;
        'outer: for a in 0..m {
            for b in 0..m {
                let lhs = self.coact(self.product(a, b));
                let mut rhs = Matrix::zeros(m, self.hopf.dim());
                for s in &self.coaction[a] {
                    for t in &self.coaction[b] {
                        let c = s.coef.clone() * &t.coef;
                        let left = self.product(s.left, t.left);
                        let right = self.hopf.product(t.right, s.right);
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
                    witness = Some(format!("({}, {})", lab(a), lab(b)));
                    break 'outer;
                }
            }
        }
        report.push(Check::from_witness("coaction multiplicative", witness));

        let unit = self.coact(self.unit());
        let mut expected = Matrix::zeros(m, self.hopf.dim());
        for (p, x) in self.unit().iter().enumerate() {
            for (q, y) in self.hopf.unit().iter().enumerate() {
                expected[(p, q)] = x.clone() * y;
            }
        }
        report.push(if unit == expected {
            Check::pass("unit coinvariant")
        } else {
            Check::fail("unit coinvariant", "1")
        });
        report
    }
}

fn same_ambient<F: Field>(a: &HopfAlgebra<F>, b: &HopfAlgebra<F>) -> Result<()> {
    if a.algebra() != b.algebra() || a.coalgebra() != b.coalgebra() {
        return Err(Error::InvalidParameter(
            "comodule algebras live over different Hopf algebras".into(),
        ));
    }
    Ok(())
}

fn check_rform_dim<F: Field>(r: &Functional2<F>, h: &HopfAlgebra<F>) -> Result<()> {
    if r.dim() != h.dim() {
        return Err(Error::Dimension {
            context: "r-form",
            expected: h.dim(),
            found: r.dim(),
        });
    }
    Ok(())
}

/// Braided tensor product `A # B`:
/// `(a#b)(c#d) = Σ a c0 # b0 d r(c1⊗b1)`, coaction `Σ a0⊗b0⊗b1a1`.
pub fn smash_product<F: Field>(
    a: &ComoduleAlgebra<F>,
    b: &ComoduleAlgebra<F>,
    r: &Functional2<F>,
) -> Result<ComoduleAlgebra<F>> {
    same_ambient(&a.hopf, &b.hopf)?;
    check_rform_dim(r, &a.hopf)?;
    let h = &a.hopf;
    let (ma, mb) = (a.dim(), b.dim());
    let n = ma * mb;
    let mut unit = vec![F::zero(); n];
    for (i, x) in a.unit().iter().enumerate() {
        for (j, y) in b.unit().iter().enumerate() {
            unit[i * mb + j] = x.clone() * y;
        }
    }
    let algebra = Algebra::from_fn(n, unit, |x, y| {
        let (ia, ib) = (x / mb, x % mb);
        let (ic, id) = (y / mb, y % mb);
        let mut v = vec![F::zero(); n];
        for s in a.coaction(ic) {
            for t in b.coaction(ib) {
                let rv = r.at(s.right, t.right);
                if rv.is_zero() {
                    continue;
                }
                let c = rv.clone() * &s.coef * &t.coef;
                let left = a.product(ia, s.left);
                let right = b.product(t.left, id);
                for (p, u) in left.iter().enumerate() {
                    if u.is_zero() {
                        continue;
                    }
                    for (q, w) in right.iter().enumerate() {
                        if !w.is_zero() {
                            v[p * mb + q] += c.clone() * u * w;
                        }
                    }
                }
            }
        }
        v
    });
    let coaction = (0..n)
        .map(|x| {
            let (ia, ib) = (x / mb, x % mb);
            let mut terms = Vec::new();
            for s in a.coaction(ia) {
                for t in b.coaction(ib) {
                    let c = s.coef.clone() * &t.coef;
                    for (k, w) in h.product(t.right, s.right).iter().enumerate() {
                        if !w.is_zero() {
                            terms.push(Term::new(c.clone() * w, s.left * mb + t.left, k));
                        }
                    }
                }
            }
            terms
        })
        .collect();
    let labels = a
        .labels
        .iter()
        .flat_map(|x| b.labels.iter().map(move |y| format!("{x}#{y}")))
        .collect();
    ComoduleAlgebra::new(algebra, coaction, h.clone(), labels)
}

/// `Ā`: same comodule, product `a∘b = Σ b0 a0 r(b1⊗a1)`.
pub fn braided_opposite<F: Field>(a: &ComoduleAlgebra<F>, r: &Functional2<F>) -> Result<ComoduleAlgebra<F>> {
    check_rform_dim(r, &a.hopf)?;
    let m = a.dim();
    let algebra = Algebra::from_fn(m, a.unit().to_vec(), |x, y| {
        let mut v = vec![F::zero(); m];
        for s in a.coaction(y) {
            for t in a.coaction(x) {
                let rv = r.at(s.right, t.right);
                if !rv.is_zero() {
                    axpy(&mut v, &(rv.clone() * &s.coef * &t.coef), a.product(s.left, t.left));
                }
            }
        }
        v
    });
    Ok(ComoduleAlgebra {
        algebra,
        coaction: a.coaction.clone(),
        hopf: a.hopf.clone(),
        labels: a.labels.clone(),
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum EndVariant {
    Plain,
    Op,
}

/// `End(P)` or `End(P)^op` on matrix units `E_pq` (`e_q ↦ e_p`) at `p·m + q`.
///
/// Plain: `ρ(f)(a) = Σ f(a0)_(0) ⊗ S⁻¹(a1) f(a0)_(1)`.
/// Op: `ρ(f)(a) = Σ f(a0)_(0) ⊗ f(a0)_(1) S(a1)`.
pub fn end_algebra<F: Field>(p: &Comodule<F>, variant: EndVariant) -> Result<ComoduleAlgebra<F>> {
    let h = &p.hopf;
    let d = h.dim();
    let m = p.dim;
    let n = m * m;
    let mut unit = vec![F::zero(); n];
    for i in 0..m {
        unit[i * m + i] = F::one();
    }
    let algebra = Algebra::from_fn(n, unit, |x, y| {
        let (a, b) = (x / m, x % m);
        let (c, e) = (y / m, y % m);
        let mut v = vec![F::zero(); n];
        match variant {
            EndVariant::Plain if b == c => v[a * m + e] = F::one(),
            EndVariant::Op if e == a => v[c * m + b] = F::one(),
            _ => {}
        }
        v
    });
    let twist = match variant {
        EndVariant::Plain => h.antipode_inverse()?,
        EndVariant::Op => h.antipode().clone(),
    };
    let twisted: Vec<Vec<F>> = (0..d).map(|k| twist.column(k)).collect();
    let coaction = (0..n)
        .map(|x| {
            let (row, col) = (x / m, x % m);
            let mut acc = vec![vec![F::zero(); d]; n];
            for a in 0..m {
                for s in p.coaction(a) {
                    if s.left != col {
                        continue;
                    }
                    for t in p.coaction(row) {
                        let c = s.coef.clone() * &t.coef;
                        let hv = match variant {
                            EndVariant::Plain => h.algebra().mul_basis_right(&twisted[s.right], t.right),
                            EndVariant::Op => h.algebra().mul_basis_left(t.right, &twisted[s.right]),
                        };
                        axpy(&mut acc[t.left * m + a], &c, &hv);
                    }
                }
            }
            let mut terms = Vec::new();
            for (idx, hv) in acc.into_iter().enumerate() {
                for (k, c) in hv.into_iter().enumerate() {
                    if !c.is_zero() {
                        terms.push(Term::new(c, idx, k));
                    }
                }
            }
            terms
        })
        .collect();
    let labels = (0..n)
        .map(|x| format!("E[{},{}]", p.labels[x / m], p.labels[x % m]))
        .collect();
    ComoduleAlgebra::new(algebra, coaction, h.clone(), labels)
}
