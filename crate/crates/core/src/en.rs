//! The Hopf algebras `E(n)`, their r-forms `r_A`, and the generalized
//! Clifford algebras `Cl(α, γ, Λ)` that realize their cleft extensions.
//!
//! Basis of `E(n)`: `c^a x_P` at index `a + 2·mask(P)`, where bit `i - 1` of
//! the mask stands for `x_i`. `Cl(α, γ, Λ)` uses the same indexing for
//! `u^a v_P`.

use serde::Serialize;

use crate::comodule::ComoduleAlgebra;
use crate::convolution::{hom_conv_inverse, twisted_rform, Functional2};
use crate::error::{Error, Result};
use crate::field::Field;
use crate::hopf::{Algebra, Coalgebra, HopfAlgebra, Term};
use crate::linalg::{unit_vector, Matrix};
use crate::rewrite::QuadraticAlgebra;

/// Index bookkeeping for `c^a x_P`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct MonomialBasis {
    n: usize,
}

impl MonomialBasis {
    pub fn new(n: usize) -> Self {
        MonomialBasis { n }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn dim(&self) -> usize {
        1 << (self.n + 1)
    }

    /// `c^a x_P` for `P ⊆ {1..n}` given as 1-based indices.
    pub fn index(&self, a: usize, p: &[usize]) -> usize {
        debug_assert!(a < 2);
        a + 2 * p.iter().fold(0, |m, &i| m | 1 << (i - 1))
    }

    /// `(a, P)` with `P` increasing and 1-based.
    pub fn decompose(&self, index: usize) -> (usize, Vec<usize>) {
        let mask = index >> 1;
        (index & 1, (1..=self.n).filter(|i| mask >> (i - 1) & 1 == 1).collect())
    }

    pub fn one(&self) -> usize {
        0
    }

    pub fn c(&self) -> usize {
        1
    }

    pub fn x(&self, i: usize) -> usize {
        self.index(0, &[i])
    }

    pub fn cx(&self, i: usize) -> usize {
        self.index(1, &[i])
    }

    pub fn label(&self, index: usize, group: &str, nilpotent: &str) -> String {
        let (a, p) = self.decompose(index);
        let mut s = String::new();
        if a == 1 {
            s.push_str(group);
        }
        for i in p {
            s.push_str(&format!("{nilpotent}{i}"));
        }
        if s.is_empty() {
            s.push('1');
        }
        s
    }
}

fn en_rewriter<F: Field>(n: usize) -> QuadraticAlgebra<F> {
    let mut names = vec!["c".to_string()];
    names.extend((1..=n).map(|i| format!("x{i}")));
    let mut squares = vec![F::zero(); n + 1];
    squares[0] = F::one();
    QuadraticAlgebra::new(names, squares, Matrix::zeros(n + 1, n + 1))
}

fn vector_to_terms<F: Field>(v: &[F], right_dim: usize) -> Vec<Term<F>> {
    v.iter()
        .enumerate()
        .filter(|(_, c)| !c.is_zero())
        .map(|(idx, c)| Term::new(c.clone(), idx / right_dim, idx % right_dim))
        .collect()
}

/// `E(n)`: `c² = 1`, `x_i² = 0`, all generators pairwise anticommuting,
/// `Δ(c) = c⊗c`, `Δ(x_i) = 1⊗x_i + x_i⊗c`, `S(c) = c`, `S(x_i) = c x_i`.
pub fn build_en<F: Field>(n: usize) -> Result<HopfAlgebra<F>> {
    if n < 1 {
        return Err(Error::InvalidParameter("E(n) needs n >= 1".into()));
    }
    if n > 12 {
        return Err(Error::InvalidParameter("E(n) is limited to n <= 12".into()));
    }
    let basis = MonomialBasis::new(n);
    let rw = en_rewriter::<F>(n);
    let d = rw.dim();
    let algebra = rw.to_algebra();
    let square = algebra.tensor(&algebra);

    let mut gen_delta = Vec::with_capacity(n + 1);
    let mut c_c = vec![F::zero(); d * d];
    c_c[basis.c() * d + basis.c()] = F::one();
    gen_delta.push(c_c);
    for i in 1..=n {
        let mut v = vec![F::zero(); d * d];
        v[basis.x(i)] = F::one();
        v[basis.x(i) * d + basis.c()] = F::one();
        gen_delta.push(v);
    }
    let mut gen_antipode = vec![unit_vector::<F>(d, basis.c())];
    for i in 1..=n {
        gen_antipode.push(unit_vector(d, basis.cx(i)));
    }

    let mut comult = Vec::with_capacity(d);
    let mut antipode_cols = Vec::with_capacity(d);
    for mask in 0..d {
        let mut delta = vec![F::zero(); d * d];
        delta[0] = F::one();
        let mut s = unit_vector::<F>(d, 0);
        for g in 0..=n {
            if mask >> g & 1 == 1 {
                delta = square.mul(&delta, &gen_delta[g]);
                s = algebra.mul(&gen_antipode[g], &s);
            }
        }
        comult.push(vector_to_terms(&delta, d));
        antipode_cols.push(s);
    }
    let counit = (0..d).map(|i| if i >> 1 == 0 { F::one() } else { F::zero() }).collect();
    let coalgebra = Coalgebra::new(d, comult, counit)?;
    let antipode = Matrix::from_columns(d, &antipode_cols)?;
    let labels = (0..d).map(|i| basis.label(i, "c", "x")).collect();
    HopfAlgebra::new(algebra, coalgebra, antipode, labels)
}

/// The r-form `r_A` on `E(n) ⊗ E(n)`.
///
/// Summing `sign(η) a_{P,η(F)}` over permutations gives the minor
/// `det A[P, F]`, so with `s = |P| = |F|` and `m = (-1)^{s(s-1)/2} det A[P,F]`:
/// `r(x_P⊗x_F) = r(cx_P⊗x_F) = m`, `r(x_P⊗cx_F) = (-1)^s m`,
/// `r(cx_P⊗cx_F) = -(-1)^s m`.
pub fn rform_en<F: Field>(n: usize, a: &Matrix<F>) -> Result<Functional2<F>> {
    if a.rows() != n || a.cols() != n {
        return Err(Error::Dimension {
            context: "rform_en",
            expected: n,
            found: a.rows().max(a.cols()),
        });
    }
    let basis = MonomialBasis::new(n);
    let d = basis.dim();
    let subsets = 1usize << n;
    let members = |mask: usize| -> Vec<usize> { (0..n).filter(|i| mask >> i & 1 == 1).collect() };
    let mut r = Functional2::zeros(d);
    for p in 0..subsets {
        let pm = members(p);
        let s = pm.len();
        for f in 0..subsets {
            let fm = members(f);
            if fm.len() != s {
                continue;
            }
            let minor = Matrix::from_fn(s, s, |i, j| a[(pm[i], fm[j])].clone()).det()?;
            if minor.is_zero() {
                continue;
            }
            let m = if (s * s.saturating_sub(1) / 2) % 2 == 1 { -minor } else { minor };
            let odd = s % 2 == 1;
            let (xp, cxp) = (2 * p, 2 * p + 1);
            let (xf, cxf) = (2 * f, 2 * f + 1);
            r.set(xp, xf, m.clone());
            r.set(cxp, xf, m.clone());
            r.set(xp, cxf, if odd { -m.clone() } else { m.clone() });
            r.set(cxp, cxf, if odd { m } else { -m });
        }
    }
    Ok(r)
}

/// Parameters `(A, α, γ, Λ)` of the pair `(r_A, σ(α, γ, Λ))` on `E(n)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ENParams<F> {
    pub n: usize,
    pub a: Matrix<F>,
    pub alpha: F,
    pub gamma: Vec<F>,
    pub lambda: Matrix<F>,
}

impl<F: Field> ENParams<F> {
    pub fn new(n: usize, a: Matrix<F>, alpha: F, gamma: Vec<F>, lambda: Matrix<F>) -> Result<Self> {
        let p = ENParams {
            n,
            a,
            alpha,
            gamma,
            lambda,
        };
        p.validate()?;
        Ok(p)
    }

    /// `n = 1` parameters `(t, α, γ, λ)`.
    pub fn h4(t: F, alpha: F, gamma: F, lambda: F) -> Result<Self> {
        Self::new(
            1,
            Matrix::from_vec(1, 1, vec![t])?,
            alpha,
            vec![gamma],
            Matrix::from_vec(1, 1, vec![lambda])?,
        )
    }

    pub fn validate(&self) -> Result<()> {
        let n = self.n;
        if n < 1 {
            return Err(Error::InvalidParameter("n must be at least 1".into()));
        }
        if self.a.rows() != n || self.a.cols() != n {
            return Err(Error::InvalidParameter(format!(
                "A must be {n}x{n}, got {}x{}",
                self.a.rows(),
                self.a.cols()
            )));
        }
        if self.lambda.rows() != n || self.lambda.cols() != n {
            return Err(Error::InvalidParameter(format!(
                "Lambda must be {n}x{n}, got {}x{}",
                self.lambda.rows(),
                self.lambda.cols()
            )));
        }
        if self.gamma.len() != n {
            return Err(Error::InvalidParameter(format!(
                "gamma must have length {n}, got {}",
                self.gamma.len()
            )));
        }
        if self.alpha.is_zero() {
            return Err(Error::InvalidParameter("alpha must be nonzero".into()));
        }
        for i in 0..n {
            for j in i + 1..n {
                if !self.lambda[(i, j)].is_zero() {
                    return Err(Error::InvalidParameter(format!(
                        "Lambda must be lower triangular (entry ({}, {}) is nonzero)",
                        i + 1,
                        j + 1
                    )));
                }
            }
        }
        Ok(())
    }

    /// `b_ij = a_ij - λ_ij - λ_ji`.
    pub fn b(&self) -> Matrix<F> {
        Matrix::from_fn(self.n, self.n, |i, j| {
            self.a[(i, j)].clone() - &self.lambda[(i, j)] - &self.lambda[(j, i)]
        })
    }

    /// `Γ_ij = γ_i γ_j`.
    pub fn gamma_matrix(&self) -> Matrix<F> {
        Matrix::from_fn(self.n, self.n, |i, j| self.gamma[i].clone() * &self.gamma[j])
    }
}

fn clifford_rewriter<F: Field>(p: &ENParams<F>) -> QuadraticAlgebra<F> {
    let n = p.n;
    let mut names = vec!["u".to_string()];
    names.extend((1..=n).map(|i| format!("v{i}")));
    let mut squares = vec![p.alpha.clone()];
    squares.extend((0..n).map(|i| p.lambda[(i, i)].clone()));
    let mut q = Matrix::zeros(n + 1, n + 1);
    for i in 0..n {
        q[(0, i + 1)] = p.gamma[i].clone();
        q[(i + 1, 0)] = p.gamma[i].clone();
        for j in 0..n {
            if i != j {
                q[(i + 1, j + 1)] = p.lambda[(i, j)].clone() + &p.lambda[(j, i)];
            }
        }
    }
    QuadraticAlgebra::new(names, squares, q)
}

/// The algebra `Cl(α, γ, Λ)` and its coaction, `ρ(u) = u⊗c`,
/// `ρ(v_j) = 1⊗x_j + v_j⊗c`, as terms of an ordinary comodule algebra.
fn clifford_parts<F: Field>(p: &ENParams<F>, h: &HopfAlgebra<F>) -> (Algebra<F>, Vec<Vec<Term<F>>>, Vec<String>) {
    let n = p.n;
    let basis = MonomialBasis::new(n);
    let rw = clifford_rewriter(p);
    let d = rw.dim();
    let algebra = rw.to_algebra();
    let square = algebra.tensor(h.algebra());
    let mut gens = Vec::with_capacity(n + 1);
    let mut u = vec![F::zero(); d * d];
    u[basis.c() * d + basis.c()] = F::one();
    gens.push(u);
    for i in 1..=n {
        let mut v = vec![F::zero(); d * d];
        v[basis.x(i)] = F::one();
        v[basis.x(i) * d + basis.c()] = F::one();
        gens.push(v);
    }
    let coaction = (0..d)
        .map(|mask| {
            let mut rho = vec![F::zero(); d * d];
            rho[0] = F::one();
            for (g, gv) in gens.iter().enumerate() {
                if mask >> g & 1 == 1 {
                    rho = square.mul(&rho, gv);
                }
            }
            vector_to_terms(&rho, d)
        })
        .collect();
    let labels = (0..d).map(|i| basis.label(i, "u", "v")).collect();
    (algebra, coaction, labels)
}

/// `Cl(α, γ, Λ)` with `u² = α`, `u v_i + v_i u = γ_i`, `v_i² = λ_ii`,
/// `v_i v_j + v_j v_i = λ_ij + λ_ji`.
///
/// It is a right `E(n)`-comodule algebra, hence stored over `E(n)^op`.
pub fn build_clifford<F: Field>(p: &ENParams<F>) -> Result<ComoduleAlgebra<F>> {
    p.validate()?;
    let h = build_en::<F>(p.n)?;
    let (algebra, coaction, labels) = clifford_parts(p, &h);
    ComoduleAlgebra::new(algebra, coaction, h.op()?, labels)
}

/// `Cl(α, γ, Λ)^op`, an algebra in the comodules over `E(n)`.
pub fn build_clifford_op<F: Field>(p: &ENParams<F>) -> Result<ComoduleAlgebra<F>> {
    p.validate()?;
    let h = build_en::<F>(p.n)?;
    let (algebra, coaction, labels) = clifford_parts(p, &h);
    ComoduleAlgebra::new(algebra.opposite(), coaction, h, labels)
}

/// The section `c^a x_P ↦ u^a v_P`.
pub fn clifford_section<F: Field>(n: usize) -> Matrix<F> {
    Matrix::identity(MonomialBasis::new(n).dim())
}

/// Reads the cocycle of a cleft extension `B` of the base field:
/// `σ(h⊗k)1_B = Σ φ(h1) φ(k1) φ⁻¹(h2k2)`.
///
/// `B` is an ordinary right `H`-comodule algebra (ambient `H^op`), and
/// `section` is the `dim B × dim H` matrix of `φ`.
pub fn derive_cocycle_from_cleft<F: Field>(
    b: &ComoduleAlgebra<F>,
    h: &HopfAlgebra<F>,
    section: &Matrix<F>,
) -> Result<Functional2<F>> {
    let d = h.dim();
    let m = b.dim();
    if b.hopf().coalgebra() != h.coalgebra() || b.hopf().dim() != d {
        return Err(Error::InvalidParameter("B is not a comodule over H".into()));
    }
    if section.rows() != m || section.cols() != d {
        return Err(Error::Dimension {
            context: "derive_cocycle_from_cleft",
            expected: m * d,
            found: section.rows() * section.cols(),
        });
    }

    // Coinvariants: ρ(x) = x ⊗ 1.
    let mut rows = Matrix::<F>::zeros(m * d, m);
    for a in 0..m {
        for t in b.coaction(a) {
            rows[(t.left * d + t.right, a)] += t.coef.clone();
        }
        for (k, u) in h.unit().iter().enumerate() {
            if !u.is_zero() {
                rows[(a * d + k, a)] -= u.clone();
            }
        }
    }
    let coinvariants = rows.kernel_basis().len();
    if coinvariants != 1 {
        return Err(Error::Structural(format!(
            "coinvariants have dimension {coinvariants}, expected 1"
        )));
    }

    // φ must be a comodule map: ρ(φ(h)) = Σ φ(h1) ⊗ h2.
    for k in 0..d {
        let lhs = b.coact(&section.column(k));
        let mut rhs = Matrix::zeros(m, d);
        for t in h.coproduct(k) {
            for (a, v) in section.column(t.left).iter().enumerate() {
                if !v.is_zero() {
                    rhs[(a, t.right)] += t.coef.clone() * v;
                }
            }
        }
        if lhs != rhs {
            return Err(Error::Structural(format!(
                "section is not a comodule map at {}",
                h.label(k)
            )));
        }
    }

    let inverse = hom_conv_inverse(section, h.coalgebra(), b.algebra())?;
    let unit = b.unit();
    let pivot = unit
        .iter()
        .position(|c| !c.is_zero())
        .ok_or_else(|| Error::Structural("B has zero unit".into()))?;
    let mut sigma = Functional2::zeros(d);
    for i in 0..d {
        for j in 0..d {
            let mut v = vec![F::zero(); m];
            for s in h.coproduct(i) {
                for t in h.coproduct(j) {
                    let left = b.mul(&section.column(s.left), &section.column(t.left));
                    let hk = h.product(s.right, t.right);
                    let right = inverse.mul_vec(hk)?;
                    crate::linalg::axpy(&mut v, &(s.coef.clone() * &t.coef), &b.mul(&left, &right));
                }
            }
            let scalar = v[pivot].clone() * &unit[pivot].inverse().expect("nonzero pivot");
            let expected: Vec<F> = unit.iter().map(|u| u.clone() * &scalar).collect();
            if v != expected {
                return Err(Error::Structural(format!(
                    "section is not cleft-compatible: value at ({}, {}) is not a scalar",
                    h.label(i),
                    h.label(j)
                )));
            }
            sigma.set(i, j, scalar);
        }
    }
    Ok(sigma)
}

/// `σ(α, γ, Λ)` on all of `E(n) ⊗ E(n)`, read from `Cl(α, γ, Λ)`.
pub fn en_cocycle<F: Field>(p: &ENParams<F>) -> Result<Functional2<F>> {
    let h = build_en::<F>(p.n)?;
    let cl = build_clifford(p)?;
    derive_cocycle_from_cleft(&cl, &h, &clifford_section(p.n))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CriterionValue<F> {
    pub azumaya: bool,
    pub determinant: F,
    pub matrix: Matrix<F>,
}

/// `det(2α(A - Λ - Λᵗ) + Γ) ≠ 0`.
pub fn en_azumaya_criterion<F: Field>(p: &ENParams<F>) -> Result<CriterionValue<F>> {
    p.validate()?;
    let two_alpha = p.alpha.clone() + &p.alpha;
    let matrix = p.b().scale(&two_alpha).add(&p.gamma_matrix())?;
    let determinant = matrix.det()?;
    Ok(CriterionValue {
        azumaya: !determinant.is_zero(),
        determinant,
        matrix,
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TableEntry<F> {
    pub family: &'static str,
    /// 1-based generator indices `(i, j)`; 0 where the family has no index.
    pub i: usize,
    pub j: usize,
    pub computed: F,
    pub expected: F,
}

impl<F: Field> TableEntry<F> {
    pub fn matches(&self) -> bool {
        self.computed == self.expected
    }

    pub fn argument(&self) -> String {
        self.family
            .replace("_i", &self.i.to_string())
            .replace("_j", &self.j.to_string())
    }
}

pub const TABLE_FAMILIES: [&str; 9] = [
    "x_j⊗c", "c⊗x_j", "c⊗cx_j", "cx_i⊗cx_j", "x_i⊗x_j", "cx_j⊗c", "cx_i⊗x_j", "x_i⊗cx_j", "c⊗c",
];

/// Values of `r_σ = twisted_rform(r_A, σ)` on generators, beside their
/// closed forms in terms of `B`, `α` and `γ`.
pub fn rsigma_generator_table<F: Field>(p: &ENParams<F>) -> Result<Vec<TableEntry<F>>> {
    p.validate()?;
    let h = build_en::<F>(p.n)?;
    let sigma = en_cocycle(p)?;
    let r = rform_en(p.n, &p.a)?;
    let rs = twisted_rform(&r, &sigma, &h)?;
    Ok(generator_table(p, &rs))
}

pub(crate) fn generator_table<F: Field>(p: &ENParams<F>, rs: &Functional2<F>) -> Vec<TableEntry<F>> {
    let basis = MonomialBasis::new(p.n);
    let b = p.b();
    let alpha_inv = p.alpha.inverse().expect("alpha nonzero");
    let g = |i: usize| p.gamma[i - 1].clone();
    let bij = |i: usize, j: usize| b[(i - 1, j - 1)].clone();
    let mut out = Vec::new();
    let mut push = |family, i, j, at: (usize, usize), expected: F| {
        out.push(TableEntry {
            family,
            i,
            j,
            computed: rs.at(at.0, at.1).clone(),
            expected,
        });
    };
    let n = p.n;
    for j in 1..=n {
        push("x_j⊗c", 0, j, (basis.x(j), basis.c()), -(alpha_inv.clone() * &g(j)));
        push("c⊗x_j", 0, j, (basis.c(), basis.x(j)), -(alpha_inv.clone() * &g(j)));
        push("c⊗cx_j", 0, j, (basis.c(), basis.cx(j)), g(j));
        push("cx_j⊗c", 0, j, (basis.cx(j), basis.c()), g(j));
    }
    for i in 1..=n {
        for j in 1..=n {
            push("cx_i⊗cx_j", i, j, (basis.cx(i), basis.cx(j)), p.alpha.clone() * &bij(i, j));
            push("x_i⊗x_j", i, j, (basis.x(i), basis.x(j)), alpha_inv.clone() * &bij(i, j));
            push(
                "cx_i⊗x_j",
                i,
                j,
                (basis.cx(i), basis.x(j)),
                bij(i, j) + &(alpha_inv.clone() * &g(i) * &g(j)),
            );
            push("x_i⊗cx_j", i, j, (basis.x(i), basis.cx(j)), -bij(i, j));
        }
    }
    push("c⊗c", 0, 0, (basis.c(), basis.c()), -F::one());
    out
}

/// `φ: E(n) → E(n)*`, `c ↦ 1* - c*`, `x_i ↦ x_i* + (cx_i)*`, extended
/// multiplicatively into the dual algebra. Columns are images of basis
/// elements.
pub fn self_duality_map<F: Field>(n: usize) -> Result<Matrix<F>> {
    let h = build_en::<F>(n)?;
    let dual = h.dualize();
    let basis = MonomialBasis::new(n);
    let d = basis.dim();
    let mut images = Vec::with_capacity(n + 1);
    let mut c = vec![F::zero(); d];
    c[basis.one()] = F::one();
    c[basis.c()] = -F::one();
    images.push(c);
    for i in 1..=n {
        let mut v = vec![F::zero(); d];
        v[basis.x(i)] = F::one();
        v[basis.cx(i)] = F::one();
        images.push(v);
    }
    let cols: Vec<Vec<F>> = (0..d)
        .map(|mask| {
            let mut acc = dual.unit().to_vec();
            for (g, img) in images.iter().enumerate() {
                if mask >> g & 1 == 1 {
                    acc = dual.mul(&acc, img);
                }
            }
            acc
        })
        .collect();
    Matrix::from_columns(d, &cols)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::convolution::{check_dqt_rform, check_left_2cocycle};
    use crate::field::Rational;
    use num_traits::Zero;

    fn q(n: i64) -> Rational {
        Rational::from_integer(n.into())
    }

    fn qq(n: i64, d: i64) -> Rational {
        Rational::new(n.into(), d.into())
    }

    #[test]
    fn sweedler_h4() {
        let h = build_en::<Rational>(1).unwrap();
        assert_eq!(h.dim(), 4);
        assert_eq!(h.labels(), ["1", "c", "x1", "cx1"]);
        let b = MonomialBasis::new(1);
        let x = h.basis(b.x(1));
        let c = h.basis(b.c());
        assert!(h.mul(&x, &x).iter().all(|v| v.is_zero()));
        let cx = h.mul(&c, &x);
        let xc = h.mul(&x, &c);
        assert_eq!(cx, xc.iter().map(|v| -v.clone()).collect::<Vec<_>>());
        assert!(h.verify_axioms().all_passed());
    }

    #[test]
    fn coproduct_of_x1x2_has_four_terms() {
        let h = build_en::<Rational>(2).unwrap();
        let b = MonomialBasis::new(2);
        assert_eq!(h.coproduct(b.index(0, &[1, 2])).len(), 4);
        for i in 0..h.dim() {
            let (_, p) = b.decompose(i);
            assert_eq!(h.counit()[i].is_zero(), !p.is_empty());
        }
    }

    #[test]
    fn antipode_square_is_grading_sign() {
        for n in 1..=2 {
            let h = build_en::<Rational>(n).unwrap();
            let s = h.antipode();
            let s2 = s.matmul(s).unwrap();
            // S² is conjugation by c: c^a x_P ↦ (-1)^{|P|} c^a x_P.
            let b = MonomialBasis::new(n);
            let expected = Matrix::from_fn(h.dim(), h.dim(), |i, j| {
                if i != j {
                    q(0)
                } else if b.decompose(i).1.len() % 2 == 1 {
                    q(-1)
                } else {
                    q(1)
                }
            });
            assert_eq!(s2, expected);
            let inv = h.antipode_inverse().unwrap();
            assert_eq!(s.matmul(&inv).unwrap(), Matrix::identity(h.dim()));
            assert_eq!(inv, s.matmul(&s2.inverse().unwrap()).unwrap());
        }
    }

    #[test]
    fn rform_values() {
        let a = Matrix::from_rows(vec![vec![q(2), q(-1)], vec![qq(1, 3), q(5)]]).unwrap();
        let r = rform_en(2, &a).unwrap();
        let b = MonomialBasis::new(2);
        for i in 1..=2 {
            for j in 1..=2 {
                assert_eq!(r.at(b.x(i), b.x(j)), &a[(i - 1, j - 1)]);
            }
        }
        assert_eq!(r.at(b.c(), b.c()), &q(-1));
        assert_eq!(r.at(b.one(), b.c()), &q(1));
        assert_eq!(r.at(b.c(), b.one()), &q(1));
        let h = build_en::<Rational>(2).unwrap();
        assert!(check_dqt_rform(&r, &h).all_passed());
    }

    #[test]
    fn r0_lives_on_grouplikes() {
        let r = rform_en(2, &Matrix::<Rational>::zeros(2, 2)).unwrap();
        for i in 0..8 {
            for j in 0..8 {
                if i > 1 || j > 1 {
                    assert!(r.at(i, j).is_zero());
                }
            }
        }
    }

    #[test]
    fn clifford_is_comodule_algebra() {
        let lambda = Matrix::from_rows(vec![vec![q(1), q(0)], vec![q(-2), qq(1, 2)]]).unwrap();
        let p = ENParams::new(2, Matrix::zeros(2, 2), q(3), vec![q(1), q(-1)], lambda).unwrap();
        let cl = build_clifford(&p).unwrap();
        assert_eq!(cl.dim(), 8);
        let report = cl.check();
        assert!(report.all_passed(), "{report}");
        let op = build_clifford_op(&p).unwrap();
        assert!(op.check().all_passed());
        let b = MonomialBasis::new(2);
        let u = cl.mul(&unit_vector(8, b.c()), &unit_vector(8, b.c()));
        assert_eq!(u, vec![q(3), q(0), q(0), q(0), q(0), q(0), q(0), q(0)]);
    }

    #[test]
    fn alpha_zero_rejected() {
        assert!(matches!(
            ENParams::h4(q(1), q(0), q(0), q(0)),
            Err(Error::InvalidParameter(_))
        ));
    }

    #[test]
    fn trivial_section_gives_trivial_cocycle() {
        let h = build_en::<Rational>(1).unwrap();
        let b = crate::convolution::crossed_product(&h, &Functional2::counit(&h)).unwrap();
        let sigma = derive_cocycle_from_cleft(&b, &h, &Matrix::identity(4)).unwrap();
        assert_eq!(sigma, Functional2::counit(&h));
    }

    #[test]
    fn cocycle_generator_values() {
        let p = ENParams::h4(q(0), q(2), q(3), q(5)).unwrap();
        let s = en_cocycle(&p).unwrap();
        let b = MonomialBasis::new(1);
        assert_eq!(s.at(b.c(), b.c()), &q(2));
        assert_eq!(s.at(b.x(1), b.c()), &q(3));
        assert_eq!(s.at(b.c(), b.x(1)), &q(0));
        assert_eq!(s.at(b.x(1), b.x(1)), &q(5));
        let h = build_en::<Rational>(1).unwrap();
        assert!(check_left_2cocycle(&s, &h).all_passed());
    }

    #[test]
    fn criterion_h4_closed_form() {
        for (t, al, g, l) in [(1, 1, 0, 0), (0, 1, 0, 0), (3, 2, 1, -1), (2, -1, 2, 1)] {
            let p = ENParams::h4(q(t), q(al), q(g), q(l)).unwrap();
            let v = en_azumaya_criterion(&p).unwrap();
            assert_eq!(v.determinant, q(2 * al * (t - 2 * l) + g * g));
        }
    }

    #[test]
    fn self_duality_is_hopf_isomorphism() {
        for n in 1..=2 {
            let h = build_en::<Rational>(n).unwrap();
            let dual = h.dualize();
            let phi = self_duality_map::<Rational>(n).unwrap();
            assert!(!phi.det().unwrap().is_zero());
            let d = h.dim();
            for i in 0..d {
                for j in 0..d {
                    let lhs = phi.mul_vec(h.product(i, j)).unwrap();
                    let rhs = dual.mul(&phi.column(i), &phi.column(j));
                    assert_eq!(lhs, rhs);
                }
                // comultiplicative: (φ⊗φ)Δ(e_i) = Δ*(φ(e_i))
                let lhs = {
                    let mut m = Matrix::zeros(d, d);
                    for t in h.coproduct(i) {
                        let a = phi.column(t.left);
                        let b = phi.column(t.right);
                        for p in 0..d {
                            for r in 0..d {
                                m[(p, r)] += t.coef.clone() * &a[p] * &b[r];
                            }
                        }
                    }
                    m
                };
                assert_eq!(lhs, dual.coalgebra().comultiply(&phi.column(i)));
            }
        }
    }
}
