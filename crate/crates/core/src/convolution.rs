//! Convolution algebras of functionals on `H` and `H ⊗ H`, cocycles,
//! r-forms, and the constructions built from them.

use crate::comodule::ComoduleAlgebra;
use crate::error::{Error, Result};
use crate::field::Field;
use crate::hopf::{Algebra, Check, Coalgebra, HopfAlgebra, Report};
use crate::linalg::{axpy, dot, solve, Matrix};

/// A functional on `H`, one value per basis element.
pub type Functional1<F> = Vec<F>;

/// A bilinear functional on `H ⊗ H`; entry `(i, j)` is the value on `e_i ⊗ e_j`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Functional2<F> {
    values: Matrix<F>,
}

impl<F: Field> Functional2<F> {
    pub fn new(values: Matrix<F>) -> Result<Self> {
        if !values.is_square() {
            return Err(Error::NotSquare {
                rows: values.rows(),
                cols: values.cols(),
            });
        }
        Ok(Functional2 { values })
    }

    pub fn zeros(d: usize) -> Self {
        Functional2 {
            values: Matrix::zeros(d, d),
        }
    }

    pub fn from_fn(d: usize, f: impl FnMut(usize, usize) -> F) -> Self {
        Functional2 {
            values: Matrix::from_fn(d, d, f),
        }
    }

    /// `ε ⊗ ε`.
    pub fn counit(h: &HopfAlgebra<F>) -> Self {
        let e = h.counit();
        Self::from_fn(h.dim(), |i, j| e[i].clone() * &e[j])
    }

    pub fn dim(&self) -> usize {
        self.values.rows()
    }

    pub fn at(&self, i: usize, j: usize) -> &F {
        &self.values[(i, j)]
    }

    pub fn set(&mut self, i: usize, j: usize, value: F) {
        self.values[(i, j)] = value;
    }

    pub fn matrix(&self) -> &Matrix<F> {
        &self.values
    }

    pub fn into_matrix(self) -> Matrix<F> {
        self.values
    }

    /// Values flattened with `(i, j) ↦ i·d + j`.
    pub fn flat(&self) -> &[F] {
        self.values.entries()
    }

    pub fn from_flat(d: usize, values: Vec<F>) -> Result<Self> {
        Ok(Functional2 {
            values: Matrix::from_vec(d, d, values)?,
        })
    }

    /// `f ∘ τ`, i.e. `(h ⊗ k) ↦ f(k ⊗ h)`.
    pub fn tau(&self) -> Self {
        Functional2 {
            values: self.values.transpose(),
        }
    }

    pub fn eval(&self, x: &[F], y: &[F]) -> F {
        let mut acc = F::zero();
        for (i, a) in x.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            acc += a.clone() * &dot(self.values.row(i), y);
        }
        acc
    }

    /// `f(e_i ⊗ y)`.
    pub fn eval_left_basis(&self, i: usize, y: &[F]) -> F {
        dot(self.values.row(i), y)
    }

    /// `f(x ⊗ e_j)`.
    pub fn eval_right_basis(&self, x: &[F], j: usize) -> F {
        let mut acc = F::zero();
        for (i, a) in x.iter().enumerate() {
            if !a.is_zero() {
                acc += a.clone() * &self.values[(i, j)];
            }
        }
        acc
    }

    /// Convolution over the tensor-square coalgebra of `h`.
    pub fn convolve(&self, other: &Functional2<F>, h: &HopfAlgebra<F>) -> Result<Functional2<F>> {
        let d = h.dim();
        dim_check("Functional2::convolve", d, self.dim())?;
        dim_check("Functional2::convolve", d, other.dim())?;
        Ok(Self::from_fn(d, |a, b| {
            let mut acc = F::zero();
            for s in h.coproduct(a) {
                for t in h.coproduct(b) {
                    let v = self.at(s.left, t.left).clone() * other.at(s.right, t.right);
                    if !v.is_zero() {
                        acc += v * &s.coef * &t.coef;
                    }
                }
            }
            acc
        }))
    }

    pub fn conv_inverse(&self, h: &HopfAlgebra<F>) -> Result<Functional2<F>> {
        dim_check("Functional2::conv_inverse", h.dim(), self.dim())?;
        let inv = conv_inverse(self.flat(), &h.tensor_square_coalgebra())?;
        Functional2::from_flat(h.dim(), inv)
    }
}

fn dim_check(context: &'static str, expected: usize, found: usize) -> Result<()> {
    if expected != found {
        return Err(Error::Dimension {
            context,
            expected,
            found,
        });
    }
    Ok(())
}

/// `(f * g)(c) = Σ f(c1) g(c2)`.
pub fn convolve<F: Field>(f: &[F], g: &[F], c: &Coalgebra<F>) -> Result<Vec<F>> {
    dim_check("convolve", c.dim(), f.len())?;
    dim_check("convolve", c.dim(), g.len())?;
    Ok((0..c.dim())
        .map(|h| {
            let mut acc = F::zero();
            for t in c.coproduct(h) {
                acc += t.coef.clone() * &f[t.left] * &g[t.right];
            }
            acc
        })
        .collect())
}

/// Two-sided convolution inverse, solved from `f * x = ε` and verified on
/// the other side.
pub fn conv_inverse<F: Field>(f: &[F], c: &Coalgebra<F>) -> Result<Vec<F>> {
    let d = c.dim();
    dim_check("conv_inverse", d, f.len())?;
    // Column j of L_f is f * e^j.
    let mut l = Matrix::zeros(d, d);
    for h in 0..d {
        for t in c.coproduct(h) {
            l[(h, t.right)] += t.coef.clone() * &f[t.left];
        }
    }
    let x = solve(&l, c.counit())?
        .ok_or_else(|| Error::NotConvolutionInvertible("f * x = ε has no solution".into()))?;
    if convolve(&x, f, c)? != c.counit() {
        return Err(Error::NotConvolutionInvertible("right inverse is not a left inverse".into()));
    }
    Ok(x)
}

/// Convolution in `Hom(C, A)`: maps are `dim A × dim C` matrices.
pub fn hom_convolve<F: Field>(f: &Matrix<F>, g: &Matrix<F>, c: &Coalgebra<F>, a: &Algebra<F>) -> Matrix<F> {
    let cols: Vec<Vec<F>> = (0..c.dim())
        .map(|h| {
            let mut v = vec![F::zero(); a.dim()];
            for t in c.coproduct(h) {
                let p = a.mul(&f.column(t.left), &g.column(t.right));
                axpy(&mut v, &t.coef, &p);
            }
            v
        })
        .collect();
    Matrix::from_columns(a.dim(), &cols).expect("hom shape")
}

/// `Hom(C, A)` convolution unit `h ↦ ε(h) 1_A`.
pub fn hom_unit<F: Field>(c: &Coalgebra<F>, a: &Algebra<F>) -> Matrix<F> {
    Matrix::from_fn(a.dim(), c.dim(), |i, h| a.unit()[i].clone() * &c.counit()[h])
}

pub fn hom_conv_inverse<F: Field>(f: &Matrix<F>, c: &Coalgebra<F>, a: &Algebra<F>) -> Result<Matrix<F>> {
    let (dc, da) = (c.dim(), a.dim());
    if f.rows() != da || f.cols() != dc {
        return Err(Error::Dimension {
            context: "hom_conv_inverse",
            expected: da * dc,
            found: f.rows() * f.cols(),
        });
    }
    // Unknown g(e_k)_b at k·da + b; the condition on (f * g)(e_h)_p at h·da + p.
    let n = dc * da;
    let mut l = Matrix::zeros(n, n);
    for h in 0..dc {
        for t in c.coproduct(h) {
            let fl = f.column(t.left);
            for b in 0..da {
                let col = a.mul_basis_right(&fl, b);
                for (p, v) in col.iter().enumerate() {
                    if !v.is_zero() {
                        l[(h * da + p, t.right * da + b)] += t.coef.clone() * v;
                    }
                }
            }
        }
    }
    let unit = hom_unit(c, a);
    let rhs: Vec<F> = (0..dc).flat_map(|h| unit.column(h)).collect();
    let x = solve(&l, &rhs)?
        .ok_or_else(|| Error::NotConvolutionInvertible("no convolution inverse in Hom(C, A)".into()))?;
    let g = Matrix::from_fn(da, dc, |b, k| x[k * da + b].clone());
    if hom_convolve(&g, f, c, a) != unit {
        return Err(Error::NotConvolutionInvertible("right inverse is not a left inverse".into()));
    }
    Ok(g)
}

/// Normalization, the left cocycle identity, and the two expansions of
/// `σ(k⊗lm)` and `σ(kl⊗m)` through `σ⁻¹`, on all basis triples.
pub fn check_left_2cocycle<F: Field>(sigma: &Functional2<F>, h: &HopfAlgebra<F>) -> Report {
    let mut report = Report::default();
    let d = h.dim();
    if sigma.dim() != d {
        report.push(Check::fail("dimension", format!("expected {d}, found {}", sigma.dim())));
        return report;
    }
    let lab = |i: usize| h.label(i).to_string();
    let inverse = sigma.conv_inverse(h);
    report.push(match &inverse {
        Ok(_) => Check::pass("convolution invertible"),
        Err(_) => Check::fail("convolution invertible", "not convolution invertible"),
    });

    let unit = h.unit();
    let norm = (0..d).find(|&i| {
        let e = h.basis(i);
        sigma.eval(&e, unit) != h.counit()[i] || sigma.eval(unit, &e) != h.counit()[i]
    });
    report.push(Check::from_witness("normalization", norm.map(lab)));

    let triple = |i: usize, j: usize, k: usize| format!("({}, {}, {})", lab(i), lab(j), lab(k));
    let mut witness = None;
    'cocycle: for a in 0..d {
        for b in 0..d {
            for c in 0..d {
                let mut lhs = F::zero();
                for s in h.coproduct(b) {
                    for t in h.coproduct(c) {
                        let v = sigma.at(s.left, t.left);
                        if v.is_zero() {
                            continue;
                        }
                        let w = sigma.eval_left_basis(a, h.product(s.right, t.right));
                        lhs += v.clone() * &w * &s.coef * &t.coef;
                    }
                }
                let mut rhs = F::zero();
                for s in h.coproduct(a) {
                    for t in h.coproduct(b) {
                        let v = sigma.at(s.left, t.left);
                        if v.is_zero() {
                            continue;
                        }
                        let w = sigma.eval_right_basis(h.product(s.right, t.right), c);
                        rhs += v.clone() * &w * &s.coef * &t.coef;
                    }
                }
                if lhs != rhs {
                    witness = Some(triple(a, b, c));
                    break 'cocycle;
                }
            }
        }
    }
    report.push(Check::from_witness("left cocycle identity", witness));

    let Ok(inv) = inverse else {
        return report;
    };
    let mut w25 = None;
    let mut w26 = None;
    for k in 0..d {
        let k2 = h.sweedler(k, 2);
        for l in 0..d {
            let l3 = h.sweedler(l, 3);
            for m in 0..d {
                let m2 = h.sweedler(m, 2);
                if w25.is_none() {
                    // σ(k⊗lm) = Σ σ⁻¹(l1⊗m1) σ(k1⊗l2) σ(k2 l3⊗m2)
                    let lhs = sigma.eval_left_basis(k, h.product(l, m));
                    let mut rhs = F::zero();
                    for (cl, li) in &l3 {
                        for (cm, mi) in &m2 {
                            let a = inv.at(li[0], mi[0]);
                            if a.is_zero() {
                                continue;
                            }
                            for (ck, ki) in &k2 {
                                let b = sigma.at(ki[0], li[1]);
                                if b.is_zero() {
                                    continue;
                                }
                                let c = sigma.eval_right_basis(h.product(ki[1], li[2]), mi[1]);
                                rhs += a.clone() * b * &c * cl * cm * ck;
                            }
                        }
                    }
                    if lhs != rhs {
                        w25 = Some(triple(k, l, m));
                    }
                }
                if w26.is_none() {
                    // σ(kl⊗m) = Σ σ⁻¹(k1⊗l1) σ(l2⊗m1) σ(k2⊗l3 m2)
                    let lhs = sigma.eval_right_basis(h.product(k, l), m);
                    let mut rhs = F::zero();
                    for (cl, li) in &l3 {
                        for (ck, ki) in &k2 {
                            let a = inv.at(ki[0], li[0]);
                            if a.is_zero() {
                                continue;
                            }
                            for (cm, mi) in &m2 {
                                let b = sigma.at(li[1], mi[0]);
                                if b.is_zero() {
                                    continue;
                                }
                                let c = sigma.eval_left_basis(ki[1], h.product(li[2], mi[1]));
                                rhs += a.clone() * b * &c * cl * cm * ck;
                            }
                        }
                    }
                    if lhs != rhs {
                        w26 = Some(triple(k, l, m));
                    }
                }
            }
        }
    }
    report.push(Check::from_witness("expansion of sigma(k, lm)", w25));
    report.push(Check::from_witness("expansion of sigma(kl, m)", w26));
    report
}

/// Invertibility, the two multiplicativity identities, and
/// quasi-commutativity `Σ b1 a1 r(a2⊗b2) = Σ r(a1⊗b1) a2 b2`.
pub fn check_dqt_rform<F: Field>(r: &Functional2<F>, h: &HopfAlgebra<F>) -> Report {
    let mut report = Report::default();
    let d = h.dim();
    if r.dim() != d {
        report.push(Check::fail("dimension", format!("expected {d}, found {}", r.dim())));
        return report;
    }
    let lab = |i: usize| h.label(i).to_string();
    report.push(match r.conv_inverse(h) {
        Ok(_) => Check::pass("convolution invertible"),
        Err(_) => Check::fail("convolution invertible", "not convolution invertible"),
    });

    let triple = |i: usize, j: usize, k: usize| format!("({}, {}, {})", lab(i), lab(j), lab(k));
    let mut first = None;
    let mut second = None;
    for a in 0..d {
        for b in 0..d {
            for c in 0..d {
                if first.is_none() {
                    // r(ab⊗c) = Σ r(a⊗c1) r(b⊗c2)
                    let lhs = r.eval_right_basis(h.product(a, b), c);
                    let mut rhs = F::zero();
                    for t in h.coproduct(c) {
                        rhs += t.coef.clone() * r.at(a, t.left) * r.at(b, t.right);
                    }
                    if lhs != rhs {
                        first = Some(triple(a, b, c));
                    }
                }
                if second.is_none() {
                    // r(a⊗bc) = Σ r(a1⊗c) r(a2⊗b)
                    let lhs = r.eval_left_basis(a, h.product(b, c));
                    let mut rhs = F::zero();
                    for t in h.coproduct(a) {
                        rhs += t.coef.clone() * r.at(t.left, c) * r.at(t.right, b);
                    }
                    if lhs != rhs {
                        second = Some(triple(a, b, c));
                    }
                }
            }
        }
    }
    report.push(Check::from_witness("multiplicative in first argument", first));
    report.push(Check::from_witness("multiplicative in second argument", second));

    let mut qc = None;
    'qc: for a in 0..d {
        for b in 0..d {
            let mut lhs = vec![F::zero(); d];
            let mut rhs = vec![F::zero(); d];
            for s in h.coproduct(a) {
                for t in h.coproduct(b) {
                    let c = s.coef.clone() * &t.coef;
                    let v = r.at(s.right, t.right);
                    if !v.is_zero() {
                        axpy(&mut lhs, &(c.clone() * v), h.product(t.left, s.left));
                    }
                    let v = r.at(s.left, t.left);
                    if !v.is_zero() {
                        axpy(&mut rhs, &(c * v), h.product(s.right, t.right));
                    }
                }
            }
            if lhs != rhs {
                qc = Some(format!("({}, {})", lab(a), lab(b)));
                break 'qc;
            }
        }
    }
    report.push(Check::from_witness("quasi-commutativity", qc));
    report
}

/// Doi's twisted Hopf algebra: product `Σ σ(h1⊗k1) h2k2 σ⁻¹(h3⊗k3)`.
pub fn doi_twist<F: Field>(h: &HopfAlgebra<F>, sigma: &Functional2<F>) -> Result<HopfAlgebra<F>> {
    let inv = sigma.conv_inverse(h)?;
    let d = h.dim();
    let sw: Vec<_> = (0..d).map(|i| h.sweedler(i, 3)).collect();
    let algebra = Algebra::from_fn(d, h.unit().to_vec(), |a, b| {
        let mut v = vec![F::zero(); d];
        for (ca, ai) in &sw[a] {
            for (cb, bi) in &sw[b] {
                let s = sigma.at(ai[0], bi[0]);
                if s.is_zero() {
                    continue;
                }
                let t = inv.at(ai[2], bi[2]);
                if t.is_zero() {
                    continue;
                }
                axpy(&mut v, &(s.clone() * t * ca * cb), h.product(ai[1], bi[1]));
            }
        }
        v
    });
    h.with_product(algebra)
}

/// `r_σ = (σ∘τ) * r * σ⁻¹`.
pub fn twisted_rform<F: Field>(
    r: &Functional2<F>,
    sigma: &Functional2<F>,
    h: &HopfAlgebra<F>,
) -> Result<Functional2<F>> {
    let inv = sigma.conv_inverse(h)?;
    sigma.tau().convolve(r, h)?.convolve(&inv, h)
}

/// The crossed product `_σH`: product `Σ σ(h1⊗k1) h2k2`, coaction `Δ`.
///
/// As an ordinary right `H`-comodule algebra it is an algebra in the
/// comodules over `H^op`, which is the ambient Hopf algebra of the result.
pub fn crossed_product<F: Field>(h: &HopfAlgebra<F>, sigma: &Functional2<F>) -> Result<ComoduleAlgebra<F>> {
    require_cocycle(sigma, h)?;
    let algebra = crossed_product_algebra(h, sigma);
    let ambient = h.op()?;
    ComoduleAlgebra::new(
        algebra,
        (0..h.dim()).map(|i| h.coproduct(i).to_vec()).collect(),
        ambient,
        h.labels().to_vec(),
    )
}

pub(crate) fn crossed_product_algebra<F: Field>(h: &HopfAlgebra<F>, sigma: &Functional2<F>) -> Algebra<F> {
    let d = h.dim();
    Algebra::from_fn(d, h.unit().to_vec(), |a, b| {
        let mut v = vec![F::zero(); d];
        for s in h.coproduct(a) {
            for t in h.coproduct(b) {
                let c = sigma.at(s.left, t.left);
                if !c.is_zero() {
                    axpy(&mut v, &(c.clone() * &s.coef * &t.coef), h.product(s.right, t.right));
                }
            }
        }
        v
    })
}

fn require_cocycle<F: Field>(sigma: &Functional2<F>, h: &HopfAlgebra<F>) -> Result<()> {
    let report = check_left_2cocycle(sigma, h);
    match report.first_failure() {
        None => Ok(()),
        Some(c) => Err(Error::Cocycle(format!(
            "{} fails at {}",
            c.name,
            c.witness.as_deref().unwrap_or("?")
        ))),
    }
}

/// Product of `A_σ`: `h·k = Σ σ(k1⊗h1) k2h2`.
pub(crate) fn a_sigma_algebra<F: Field>(h: &HopfAlgebra<F>, sigma: &Functional2<F>) -> Algebra<F> {
    let d = h.dim();
    Algebra::from_fn(d, h.unit().to_vec(), |a, b| {
        let mut v = vec![F::zero(); d];
        for s in h.coproduct(a) {
            for t in h.coproduct(b) {
                let c = sigma.at(t.left, s.left);
                if !c.is_zero() {
                    axpy(&mut v, &(c.clone() * &s.coef * &t.coef), h.product(t.right, s.right));
                }
            }
        }
        v
    })
}

/// `A_σ = _{στ}H^op` with coaction `Δ`, an algebra in the comodules over `H`.
///
/// Both that `σ` is a left 2-cocycle for `H` and that `στ` is one for `H^op`
/// are checked.
pub fn build_a_sigma<F: Field>(h: &HopfAlgebra<F>, sigma: &Functional2<F>) -> Result<ComoduleAlgebra<F>> {
    require_cocycle(sigma, h)?;
    require_cocycle(&sigma.tau(), &h.op()?)?;
    a_sigma_unchecked(h, sigma)
}

pub(crate) fn a_sigma_unchecked<F: Field>(h: &HopfAlgebra<F>, sigma: &Functional2<F>) -> Result<ComoduleAlgebra<F>> {
    ComoduleAlgebra::new(
        a_sigma_algebra(h, sigma),
        (0..h.dim()).map(|i| h.coproduct(i).to_vec()).collect(),
        h.clone(),
        h.labels().to_vec(),
    )
}

/// `ω^θ(h⊗k) = Σ θ(h1) θ(k1) ω(h2⊗k2) θ⁻¹(h3k3)`.
pub fn cohomologous_twist<F: Field>(
    omega: &Functional2<F>,
    theta: &[F],
    h: &HopfAlgebra<F>,
) -> Result<Functional2<F>> {
    let d = h.dim();
    dim_check("cohomologous_twist", d, omega.dim())?;
    let inv = conv_inverse(theta, h.coalgebra())?;
    let sw: Vec<_> = (0..d).map(|i| h.sweedler(i, 3)).collect();
    Ok(Functional2::from_fn(d, |a, b| {
        let mut acc = F::zero();
        for (ca, ai) in &sw[a] {
            let ta = &theta[ai[0]];
            if ta.is_zero() {
                continue;
            }
            for (cb, bi) in &sw[b] {
                let tb = &theta[bi[0]];
                let w = omega.at(ai[1], bi[1]);
                if tb.is_zero() || w.is_zero() {
                    continue;
                }
                let ti = dot(&inv, h.product(ai[2], bi[2]));
                acc += ta.clone() * tb * w * &ti * ca * cb;
            }
        }
        acc
    }))
}

/// `h ↦ Σ θ(h1) h2 θ⁻¹(h3)`, an isomorphism between the Doi twists by `ω`
/// and by `ω^θ`.
pub fn cohomology_isomorphism<F: Field>(theta: &[F], h: &HopfAlgebra<F>) -> Result<Matrix<F>> {
    let d = h.dim();
    let inv = conv_inverse(theta, h.coalgebra())?;
    let cols: Vec<Vec<F>> = (0..d)
        .map(|a| {
            let mut v = vec![F::zero(); d];
            for (c, idx) in h.sweedler(a, 3) {
                let s = c * &theta[idx[0]] * &inv[idx[2]];
                v[idx[1]] += s;
            }
            v
        })
        .collect();
    Matrix::from_columns(d, &cols)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::Rational;
    use crate::hopf::Term;
    use crate::linalg::unit_vector;

    fn q(n: i64) -> Rational {
        Rational::from_integer(n.into())
    }

    fn kz2() -> HopfAlgebra<Rational> {
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
    fn counit_is_convolution_unit() {
        let h = kz2();
        let f = vec![q(3), q(-5)];
        assert_eq!(convolve(&f, h.counit(), h.coalgebra()).unwrap(), f);
        let s = Functional2::from_fn(2, |i, j| q((i * 2 + j) as i64 + 1));
        assert_eq!(Functional2::counit(&h).convolve(&s, &h).unwrap(), s);
    }

    #[test]
    fn sign_character_is_its_own_inverse() {
        let h = kz2();
        let f = vec![q(1), q(-1)];
        assert_eq!(convolve(&f, &f, h.coalgebra()).unwrap(), h.counit());
        assert_eq!(conv_inverse(&f, h.coalgebra()).unwrap(), f);
        assert_eq!(conv_inverse(h.counit(), h.coalgebra()).unwrap(), h.counit());
    }

    #[test]
    fn zero_functional_is_not_invertible() {
        let h = kz2();
        let err = conv_inverse(&[q(0), q(0)], h.coalgebra()).unwrap_err();
        assert!(matches!(err, Error::NotConvolutionInvertible(_)));
    }

    #[test]
    fn trivial_cocycle_passes_and_broken_normalization_fails() {
        let h = kz2();
        let eps = Functional2::counit(&h);
        assert!(check_left_2cocycle(&eps, &h).all_passed());
        let mut bad = eps.clone();
        bad.set(0, 0, q(2));
        let report = check_left_2cocycle(&bad, &h);
        assert!(!report.get("normalization").unwrap().passed);
    }

    #[test]
    fn hom_inverse_of_identity_is_antipode() {
        let h = kz2();
        let s = hom_conv_inverse(&Matrix::identity(2), h.coalgebra(), h.algebra()).unwrap();
        assert_eq!(&s, h.antipode());
    }

    #[test]
    fn trivial_twist_is_identity() {
        let h = kz2();
        let eps = Functional2::counit(&h);
        assert_eq!(doi_twist(&h, &eps).unwrap(), h);
        let r = Functional2::from_fn(2, |i, j| if i * j == 1 { q(-1) } else { q(1) });
        assert!(check_dqt_rform(&r, &h).all_passed());
        assert_eq!(twisted_rform(&r, &eps, &h).unwrap(), r);
    }
}
