//! The maps `F: A#Ā → End(A)` and `G: Ā#A → End(A)^op`, the map `θ_r`, and
//! the Azumaya decisions built on them.

use serde::Serialize;

use crate::comodule::{braided_opposite, end_algebra, smash_product, ComoduleAlgebra, EndVariant};
use crate::convolution::{a_sigma_algebra, check_dqt_rform, doi_twist, twisted_rform, Functional2};
use crate::error::{Error, Result};
use crate::field::Field;
use crate::hopf::{Check, HopfAlgebra, Report};
use crate::linalg::Matrix;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum MapKind {
    F,
    G,
    ThetaR,
    ThetaSigma,
}

/// Matrix of one of the structure maps, columns indexed by the source basis.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BraidedMapMatrix<F> {
    pub kind: MapKind,
    pub matrix: Matrix<F>,
}

impl<F: Field> BraidedMapMatrix<F> {
    pub fn source_dim(&self) -> usize {
        self.matrix.cols()
    }

    pub fn target_dim(&self) -> usize {
        self.matrix.rows()
    }

    pub fn det(&self) -> F {
        self.matrix.det().expect("structure maps are square")
    }

    pub fn is_bijective(&self) -> bool {
        !self.det().is_zero()
    }
}

fn rform_dim<F: Field>(a: &ComoduleAlgebra<F>, r: &Functional2<F>) -> Result<()> {
    if r.dim() != a.hopf().dim() {
        return Err(Error::Dimension {
            context: "r-form",
            expected: a.hopf().dim(),
            found: r.dim(),
        });
    }
    Ok(())
}

/// `F(a#b̄)(c) = Σ a c0 b0 r(c1⊗b1)`; the source basis `a#b` sits at
/// `a·m + b`, the target matrix unit `E_pc` at `p·m + c`.
pub fn build_f<F: Field>(a: &ComoduleAlgebra<F>, r: &Functional2<F>) -> Result<BraidedMapMatrix<F>> {
    rform_dim(a, r)?;
    let m = a.dim();
    let mut matrix = Matrix::zeros(m * m, m * m);
    for x in 0..m {
        for b in 0..m {
            let col = x * m + b;
            for c in 0..m {
                for s in a.coaction(c) {
                    for t in a.coaction(b) {
                        let rv = r.at(s.right, t.right);
                        if rv.is_zero() {
                            continue;
                        }
                        let coef = rv.clone() * &s.coef * &t.coef;
                        let xc = a.product(x, s.left);
                        let v = a.algebra().mul_basis_right(xc, t.left);
                        for (p, val) in v.iter().enumerate() {
                            if !val.is_zero() {
                                matrix[(p * m + c, col)] += coef.clone() * val;
                            }
                        }
                    }
                }
            }
        }
    }
    Ok(BraidedMapMatrix { kind: MapKind::F, matrix })
}

/// `G(ā#b)(c) = Σ r(a1⊗c1) a0 c0 b`.
pub fn build_g<F: Field>(a: &ComoduleAlgebra<F>, r: &Functional2<F>) -> Result<BraidedMapMatrix<F>> {
    rform_dim(a, r)?;
    let m = a.dim();
    let mut matrix = Matrix::zeros(m * m, m * m);
    for x in 0..m {
        for b in 0..m {
            let col = x * m + b;
            for c in 0..m {
                for s in a.coaction(x) {
                    for t in a.coaction(c) {
                        let rv = r.at(s.right, t.right);
                        if rv.is_zero() {
                            continue;
                        }
                        let coef = rv.clone() * &s.coef * &t.coef;
                        let xc = a.product(s.left, t.left);
                        let v = a.algebra().mul_basis_right(xc, b);
                        for (p, val) in v.iter().enumerate() {
                            if !val.is_zero() {
                                matrix[(p * m + c, col)] += coef.clone() * val;
                            }
                        }
                    }
                }
            }
        }
    }
    Ok(BraidedMapMatrix { kind: MapKind::G, matrix })
}

/// Checks that `F` (or `G`) is an algebra map into `End(A)` (or
/// `End(A)^op`) and a comodule map, on all basis pairs.
pub fn verify_braided_map<F: Field>(
    a: &ComoduleAlgebra<F>,
    r: &Functional2<F>,
    map: &BraidedMapMatrix<F>,
) -> Result<Report> {
    let bar = braided_opposite(a, r)?;
    let (source, variant) = match map.kind {
        MapKind::F => (smash_product(a, &bar, r)?, EndVariant::Plain),
        MapKind::G => (smash_product(&bar, a, r)?, EndVariant::Op),
        _ => {
            return Err(Error::InvalidParameter(
                "only F and G are maps out of a smash product".into(),
            ))
        }
    };
    let target = end_algebra(&a.as_comodule(), variant)?;
    let n = source.dim();
    if map.matrix.cols() != n || map.matrix.rows() != target.dim() {
        return Err(Error::Dimension {
            context: "verify_braided_map",
            expected: n,
            found: map.matrix.cols(),
        });
    }
    let lab = |i: usize| source.labels()[i].clone();
    let images: Vec<Vec<F>> = (0..n).map(|x| map.matrix.column(x)).collect();
    let mut report = Report::default();

    let mut mult = None;
    'outer: for x in 0..n {
        for y in 0..n {
            let lhs = map.matrix.mul_vec(source.product(x, y))?;
            let rhs = target.mul(&images[x], &images[y]);
            if lhs != rhs {
                mult = Some(format!("({}, {})", lab(x), lab(y)));
                break 'outer;
            }
        }
    }
    report.push(Check::from_witness("algebra map", mult));
    let unit_ok = map.matrix.mul_vec(source.unit())? == target.unit();
    report.push(if unit_ok {
        Check::pass("unit preserved")
    } else {
        Check::fail("unit preserved", "1")
    });

    let comod = (0..n).find(|&x| {
        let rho = source.coact(&images_basis(n, x));
        let pushed = map.matrix.matmul(&rho).expect("shape");
        pushed != target.coact(&images[x])
    });
    report.push(Check::from_witness("comodule map", comod.map(lab)));
    Ok(report)
}

fn images_basis<F: Field>(n: usize, x: usize) -> Vec<F> {
    crate::linalg::unit_vector(n, x)
}

/// `F` on `A_σ` from `F(h#k)(l) = Σ r_σ(l1⊗k1) h·k2·l2`.
pub fn f_computed_form<F: Field>(
    h: &HopfAlgebra<F>,
    sigma: &Functional2<F>,
    r: &Functional2<F>,
) -> Result<Matrix<F>> {
    let rs = twisted_rform(r, sigma, h)?;
    let alg = a_sigma_algebra(h, sigma);
    let d = h.dim();
    let mut matrix = Matrix::zeros(d * d, d * d);
    for x in 0..d {
        for k in 0..d {
            for l in 0..d {
                for s in h.coproduct(l) {
                    for t in h.coproduct(k) {
                        let rv = rs.at(s.left, t.left);
                        if rv.is_zero() {
                            continue;
                        }
                        let coef = rv.clone() * &s.coef * &t.coef;
                        let v = alg.mul_basis_right(alg.product(x, t.right), s.right);
                        for (p, val) in v.iter().enumerate() {
                            if !val.is_zero() {
                                matrix[(p * d + l, x * d + k)] += coef.clone() * val;
                            }
                        }
                    }
                }
            }
        }
    }
    Ok(matrix)
}

/// `G` on `A_σ` from `G(h#k)(l) = Σ r_σ(h1⊗l1) l2·h2·k`.
pub fn g_computed_form<F: Field>(
    h: &HopfAlgebra<F>,
    sigma: &Functional2<F>,
    r: &Functional2<F>,
) -> Result<Matrix<F>> {
    let rs = twisted_rform(r, sigma, h)?;
    let alg = a_sigma_algebra(h, sigma);
    let d = h.dim();
    let mut matrix = Matrix::zeros(d * d, d * d);
    for x in 0..d {
        for k in 0..d {
            for l in 0..d {
                for s in h.coproduct(x) {
                    for t in h.coproduct(l) {
                        let rv = rs.at(s.left, t.left);
                        if rv.is_zero() {
                            continue;
                        }
                        let coef = rv.clone() * &s.coef * &t.coef;
                        let v = alg.mul_basis_right(alg.product(t.right, s.right), k);
                        for (p, val) in v.iter().enumerate() {
                            if !val.is_zero() {
                                matrix[(p * d + l, x * d + k)] += coef.clone() * val;
                            }
                        }
                    }
                }
            }
        }
    }
    Ok(matrix)
}

/// `θ_r: H^op → H*`, `h ↦ r(-⊗h)`; entry `(i, j)` is `r(e_i⊗e_j)`.
///
/// Fails unless `r` passes the r-form check; the Hopf map property is then
/// verified on basis pairs.
pub fn theta_of_rform<F: Field>(r: &Functional2<F>, h: &HopfAlgebra<F>) -> Result<BraidedMapMatrix<F>> {
    let report = check_dqt_rform(r, h);
    if let Some(c) = report.first_failure() {
        return Err(Error::Structural(format!(
            "not an r-form: {} fails at {}",
            c.name,
            c.witness.as_deref().unwrap_or("?")
        )));
    }
    let d = h.dim();
    let theta = r.matrix().clone();
    let dual = h.dualize();
    for a in 0..d {
        for b in 0..d {
            // θ(e_b e_a) = θ(e_a) θ(e_b) in H*
            let lhs = theta.mul_vec(h.product(b, a))?;
            let rhs = dual.mul(&theta.column(a), &theta.column(b));
            if lhs != rhs {
                return Err(Error::Structural(format!(
                    "theta is not multiplicative at ({}, {})",
                    h.label(a),
                    h.label(b)
                )));
            }
        }
        let lhs = dual.coalgebra().comultiply(&theta.column(a));
        let mut rhs = Matrix::zeros(d, d);
        for t in h.coproduct(a) {
            let (u, v) = (theta.column(t.left), theta.column(t.right));
            for p in 0..d {
                if u[p].is_zero() {
                    continue;
                }
                for q in 0..d {
                    rhs[(p, q)] += t.coef.clone() * &u[p] * &v[q];
                }
            }
        }
        if lhs != rhs {
            return Err(Error::Structural(format!(
                "theta is not comultiplicative at {}",
                h.label(a)
            )));
        }
    }
    Ok(BraidedMapMatrix {
        kind: MapKind::ThetaR,
        matrix: theta,
    })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AzumayaEvidence<F> {
    pub azumaya: bool,
    pub det_f: F,
    pub det_g: F,
}

/// Azumaya iff both `F` and `G` are bijective.
pub fn is_azumaya<F: Field>(a: &ComoduleAlgebra<F>, r: &Functional2<F>) -> Result<AzumayaEvidence<F>> {
    let det_f = build_f(a, r)?.det();
    let det_g = build_g(a, r)?.det();
    Ok(AzumayaEvidence {
        azumaya: !det_f.is_zero() && !det_g.is_zero(),
        det_f,
        det_g,
    })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CleftEvidence<F> {
    pub azumaya: bool,
    pub det_theta: F,
    pub r_sigma: Functional2<F>,
}

/// Invertibility of `θ_σ = θ_{r_σ}` on the Doi twist `_σH_{σ⁻¹}`.
pub fn is_azumaya_cleft<F: Field>(
    h: &HopfAlgebra<F>,
    sigma: &Functional2<F>,
    r: &Functional2<F>,
) -> Result<CleftEvidence<F>> {
    let twisted = doi_twist(h, sigma)?;
    let r_sigma = twisted_rform(r, sigma, h)?;
    let mut theta = theta_of_rform(&r_sigma, &twisted)?;
    theta.kind = MapKind::ThetaSigma;
    let det_theta = theta.det();
    Ok(CleftEvidence {
        azumaya: !det_theta.is_zero(),
        det_theta,
        r_sigma,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::comodule::Comodule;
    use crate::convolution::build_a_sigma;
    use crate::en::{build_en, en_cocycle, rform_en, ENParams};
    use crate::field::Rational;

    fn q(n: i64) -> Rational {
        Rational::from_integer(n.into())
    }

    #[test]
    fn trivial_algebra_is_azumaya() {
        let h = build_en::<Rational>(1).unwrap();
        let k = ComoduleAlgebra::trivial(&h);
        let r = rform_en(1, &Matrix::from_vec(1, 1, vec![q(0)]).unwrap()).unwrap();
        let f = build_f(&k, &r).unwrap();
        assert_eq!(f.matrix, Matrix::identity(1));
        assert_eq!(build_g(&k, &r).unwrap().matrix, Matrix::identity(1));
        assert!(is_azumaya(&k, &r).unwrap().azumaya);
    }

    #[test]
    fn unit_maps_to_identity() {
        let p = ENParams::h4(q(1), q(2), q(1), q(1)).unwrap();
        let h = build_en::<Rational>(1).unwrap();
        let a = build_a_sigma(&h, &en_cocycle(&p).unwrap()).unwrap();
        let r = rform_en(1, &p.a).unwrap();
        let id: Vec<Rational> = (0..16).map(|i| if i % 5 == 0 { q(1) } else { q(0) }).collect();
        assert_eq!(build_f(&a, &r).unwrap().matrix.column(0), id);
        assert_eq!(build_g(&a, &r).unwrap().matrix.column(0), id);
    }

    #[test]
    fn f_and_g_are_morphisms() {
        let p = ENParams::h4(q(0), q(-1), q(2), q(1)).unwrap();
        let h = build_en::<Rational>(1).unwrap();
        let a = build_a_sigma(&h, &en_cocycle(&p).unwrap()).unwrap();
        let r = rform_en(1, &p.a).unwrap();
        for map in [build_f(&a, &r).unwrap(), build_g(&a, &r).unwrap()] {
            let report = verify_braided_map(&a, &r, &map).unwrap();
            assert!(report.all_passed(), "{:?}\n{report}", map.kind);
        }
    }

    #[test]
    fn computed_forms_match() {
        let p = ENParams::h4(q(1), q(1), q(1), q(0)).unwrap();
        let h = build_en::<Rational>(1).unwrap();
        let sigma = en_cocycle(&p).unwrap();
        let a = build_a_sigma(&h, &sigma).unwrap();
        let r = rform_en(1, &p.a).unwrap();
        assert_eq!(build_f(&a, &r).unwrap().matrix, f_computed_form(&h, &sigma, &r).unwrap());
        assert_eq!(build_g(&a, &r).unwrap().matrix, g_computed_form(&h, &sigma, &r).unwrap());
    }

    #[test]
    fn theta_values() {
        let h = build_en::<Rational>(1).unwrap();
        let r = rform_en(1, &Matrix::from_vec(1, 1, vec![q(7)]).unwrap()).unwrap();
        let theta = theta_of_rform(&r, &h).unwrap();
        assert_eq!(theta.matrix.column(0), h.counit());
        assert_eq!(theta.matrix[(2, 2)], q(7));
        assert!(theta.is_bijective());
        let r0 = rform_en(1, &Matrix::from_vec(1, 1, vec![q(0)]).unwrap()).unwrap();
        assert!(!theta_of_rform(&r0, &h).unwrap().is_bijective());
        assert!(theta_of_rform(&Functional2::counit(&h), &h).is_err());
    }

    #[test]
    fn matrix_algebra_is_azumaya() {
        let h = build_en::<Rational>(1).unwrap();
        let r = rform_en(1, &Matrix::from_vec(1, 1, vec![q(0)]).unwrap()).unwrap();
        let e = end_algebra(&Comodule::regular(&h), EndVariant::Plain).unwrap();
        let v = is_azumaya(&e, &r).unwrap();
        assert!(v.azumaya, "{v:?}");
    }
}
