//! Left integrals for `H*`, the functionals `v(h)` and `w(h)`, the maps
//! `S₁`, `S₂` on `A_σ`, and explicit preimages of rank-one endomorphisms
//! under `F` and `G`.

use crate::convolution::{a_sigma_algebra, doi_twist, twisted_rform, Functional2};
use crate::error::{Error, Result};
use crate::field::Field;
use crate::hopf::{Algebra, Check, HopfAlgebra, Report};
use crate::linalg::{axpy, dot, unit_vector, Matrix};

/// A spanning vector of the left integrals for `H*`:
/// `Σ ζ(h2) h1 = ζ(h) 1` for every basis `h`, normalized so that its first
/// nonzero value is 1.
pub fn left_integral_dual<F: Field>(h: &HopfAlgebra<F>) -> Result<Vec<F>> {
    let d = h.dim();
    let mut system = Matrix::<F>::zeros(d * d, d);
    for k in 0..d {
        for t in h.coproduct(k) {
            system[(k * d + t.left, t.right)] += t.coef.clone();
        }
        for (p, u) in h.unit().iter().enumerate() {
            if !u.is_zero() {
                system[(k * d + p, k)] -= u.clone();
            }
        }
    }
    let kernel = system.kernel_basis();
    if kernel.len() != 1 {
        return Err(Error::Structural(format!(
            "space of left integrals has dimension {}, expected 1",
            kernel.len()
        )));
    }
    let mut zeta = kernel.into_iter().next().expect("one vector");
    let lead = zeta.iter().find(|c| !c.is_zero()).cloned().expect("nonzero");
    let inv = lead.inverse().expect("nonzero");
    for z in zeta.iter_mut() {
        *z *= inv.clone();
    }
    Ok(zeta)
}

/// `v(h)(k) = ζ(k S(h))` and `w(h)(k) = v(h)(S⁻¹(k))`.
pub fn v_w_functionals<F: Field>(h: &HopfAlgebra<F>, zeta: &[F], index: usize) -> Result<(Vec<F>, Vec<F>)> {
    let s_inv = h.antipode_inverse()?;
    Ok(v_w_with(h, zeta, &s_inv, index))
}

fn v_w_with<F: Field>(h: &HopfAlgebra<F>, zeta: &[F], s_inv: &Matrix<F>, index: usize) -> (Vec<F>, Vec<F>) {
    let d = h.dim();
    let sh = h.antipode_of(index);
    let v: Vec<F> = (0..d)
        .map(|k| dot(zeta, &h.algebra().mul_basis_left(k, &sh)))
        .collect();
    let w = (0..d).map(|k| dot(&v, &s_inv.column(k))).collect();
    (v, w)
}

/// Columns `v(e_h)` and `w(e_h)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntegralData<F> {
    pub zeta: Vec<F>,
    pub v: Matrix<F>,
    pub w: Matrix<F>,
}

impl<F: Field> IntegralData<F> {
    pub fn new(h: &HopfAlgebra<F>) -> Result<Self> {
        let zeta = left_integral_dual(h)?;
        let s_inv = h.antipode_inverse()?;
        let d = h.dim();
        let (vs, ws): (Vec<_>, Vec<_>) = (0..d).map(|i| v_w_with(h, &zeta, &s_inv, i)).unzip();
        Ok(IntegralData {
            zeta,
            v: Matrix::from_columns(d, &vs)?,
            w: Matrix::from_columns(d, &ws)?,
        })
    }
}

/// Bijectivity of `h ↦ v(h)` and the three coproduct identities for `v`
/// and `w`, over all basis pairs.
pub fn check_integral_identities<F: Field>(h: &HopfAlgebra<F>) -> Result<Report> {
    let data = IntegralData::new(h)?;
    let d = h.dim();
    let s_inv = h.antipode_inverse()?;
    let lab = |a: usize, b: usize| format!("({}, {})", h.label(a), h.label(b));
    let mut report = Report::default();
    report.push(if data.v.det()?.is_zero() {
        Check::fail("h -> v(h) bijective", "singular")
    } else {
        Check::pass("h -> v(h) bijective")
    });

    let (mut w1, mut w2, mut w3) = (None, None, None);
    for a in 0..d {
        for k in 0..d {
            // Σ v(h)(k2) k1 = Σ v(h1)(k) h2
            let mut lhs1 = vec![F::zero(); d];
            let mut lhs2 = vec![F::zero(); d];
            let mut lhs3 = vec![F::zero(); d];
            for t in h.coproduct(k) {
                lhs1[t.left] += t.coef.clone() * &data.v[(t.right, a)];
                let wv = t.coef.clone() * &data.w[(t.left, a)];
                axpy(&mut lhs2, &wv, &s_inv.column(t.right));
                lhs3[t.right] += wv;
            }
            let mut rhs1 = vec![F::zero(); d];
            let mut rhs2 = vec![F::zero(); d];
            let mut rhs3 = vec![F::zero(); d];
            for t in h.coproduct(a) {
                rhs1[t.right] += t.coef.clone() * &data.v[(k, t.left)];
                let wv = t.coef.clone() * &data.w[(k, t.left)];
                rhs2[t.right] += wv.clone();
                axpy(&mut rhs3, &wv, &h.antipode_of(t.right));
            }
            if w1.is_none() && lhs1 != rhs1 {
                w1 = Some(lab(a, k));
            }
            if w2.is_none() && lhs2 != rhs2 {
                w2 = Some(lab(a, k));
            }
            if w3.is_none() && lhs3 != rhs3 {
                w3 = Some(lab(a, k));
            }
        }
    }
    report.push(Check::from_witness("v coproduct identity", w1));
    report.push(Check::from_witness("w coproduct identity", w2));
    report.push(Check::from_witness("w coproduct identity under S", w3));
    Ok(report)
}

/// Matrices of `S₁` and `S₂`:
/// `S₁(h) = Σ σ⁻¹(S(h2)⊗h3) S(h1)`, `S₂(h) = Σ σ⁻¹(h3⊗S⁻¹(h2)) S⁻¹(h1)`.
pub fn s_maps<F: Field>(h: &HopfAlgebra<F>, sigma: &Functional2<F>) -> Result<(Matrix<F>, Matrix<F>)> {
    let inv = sigma.conv_inverse(h)?;
    let s = h.antipode();
    let s_inv = h.antipode_inverse()?;
    let d = h.dim();
    let mut s1 = Vec::with_capacity(d);
    let mut s2 = Vec::with_capacity(d);
    for a in 0..d {
        let mut v1 = vec![F::zero(); d];
        let mut v2 = vec![F::zero(); d];
        for (c, idx) in h.sweedler(a, 3) {
            let k1 = inv.eval_right_basis(&s.column(idx[1]), idx[2]);
            if !k1.is_zero() {
                axpy(&mut v1, &(c.clone() * &k1), &s.column(idx[0]));
            }
            let k2 = inv.eval_left_basis(idx[2], &s_inv.column(idx[1]));
            if !k2.is_zero() {
                axpy(&mut v2, &(c * &k2), &s_inv.column(idx[0]));
            }
        }
        s1.push(v1);
        s2.push(v2);
    }
    Ok((Matrix::from_columns(d, &s1)?, Matrix::from_columns(d, &s2)?))
}

/// `(S₁(e_h), S₂(e_h))`.
pub fn s1_s2<F: Field>(h: &HopfAlgebra<F>, sigma: &Functional2<F>, index: usize) -> Result<(Vec<F>, Vec<F>)> {
    let (s1, s2) = s_maps(h, sigma)?;
    Ok((s1.column(index), s2.column(index)))
}

/// The four one-sided inverse identities of `S₁` and `S₂` in `A_σ`.
pub fn check_s_identities<F: Field>(h: &HopfAlgebra<F>, sigma: &Functional2<F>) -> Result<Report> {
    let (s1, s2) = s_maps(h, sigma)?;
    let alg = a_sigma_algebra(h, sigma);
    let d = h.dim();
    let mut found: [Option<String>; 4] = Default::default();
    for a in 0..d {
        let target: Vec<F> = h.unit().iter().map(|u| u.clone() * &h.counit()[a]).collect();
        let mut sums = vec![vec![F::zero(); d]; 4];
        for t in h.coproduct(a) {
            let e1 = unit_vector::<F>(d, t.left);
            let e2 = unit_vector::<F>(d, t.right);
            axpy(&mut sums[0], &t.coef, &alg.mul(&e2, &s1.column(t.left)));
            axpy(&mut sums[1], &t.coef, &alg.mul(&s2.column(t.left), &e2));
            axpy(&mut sums[2], &t.coef, &alg.mul(&s1.column(t.right), &e1));
            axpy(&mut sums[3], &t.coef, &alg.mul(&e1, &s2.column(t.right)));
        }
        for (slot, sum) in found.iter_mut().zip(&sums) {
            if slot.is_none() && *sum != target {
                *slot = Some(h.label(a).to_string());
            }
        }
    }
    let names = [
        "h2 S1(h1) = eps(h)",
        "S2(h1) h2 = eps(h)",
        "S1(h2) h1 = eps(h)",
        "h1 S2(h2) = eps(h)",
    ];
    let mut report = Report::default();
    for (name, w) in names.iter().zip(found) {
        report.push(Check::from_witness(name, w));
    }
    Ok(report)
}

/// Elements `Γ ∈ A_σ#Ā_σ` and `Γ′ ∈ Ā_σ#A_σ` with `F(Γ) = G(Γ′) = (l ↦ η(l) m)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RankOnePreimage<F> {
    pub gamma: Vec<F>,
    pub gamma_prime: Vec<F>,
}

/// The endomorphism `l ↦ η(l) m` in matrix-unit coordinates.
pub fn rank_one_endomorphism<F: Field>(eta: &[F], m: &[F]) -> Vec<F> {
    let d = eta.len();
    let mut out = vec![F::zero(); d * d];
    for (p, mp) in m.iter().enumerate() {
        if mp.is_zero() {
            continue;
        }
        for (l, el) in eta.iter().enumerate() {
            out[p * d + l] = mp.clone() * el;
        }
    }
    out
}

fn tensor_into<F: Field>(acc: &mut [F], coef: &F, left: &[F], right: &[F]) {
    let d = right.len();
    for (p, x) in left.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        let cx = coef.clone() * x;
        for (q, y) in right.iter().enumerate() {
            if !y.is_zero() {
                acc[p * d + q] += cx.clone() * y;
            }
        }
    }
}

/// Explicit preimages of the rank-one map `l ↦ η(l) m` on `A_σ`:
///
/// `Γ = Σ m·S₂(S(h2))·S₁(θ⁻¹(w(h1)_(2))) # θ⁻¹(w(h1)_(1))` and
/// `Γ′ = Σ (θ⁻¹)*(w(h1)_(2)) # S₂((θ⁻¹)*(w(h1)_(1)))·S₁(S(h2))·m`,
/// where `h` solves `w(h) = η` and `w(h1)_(1) ⊗ w(h1)_(2)` is the coproduct
/// of `w(h1)` in the dual of the Doi twist.
pub fn rank_one_preimage<F: Field>(
    h: &HopfAlgebra<F>,
    sigma: &Functional2<F>,
    r: &Functional2<F>,
    eta: &[F],
    m: &[F],
) -> Result<RankOnePreimage<F>> {
    let d = h.dim();
    if eta.len() != d || m.len() != d {
        return Err(Error::Dimension {
            context: "rank_one_preimage",
            expected: d,
            found: eta.len().min(m.len()),
        });
    }
    let twisted = doi_twist(h, sigma)?;
    let rs = twisted_rform(r, sigma, h)?;
    let theta_inv = rs
        .matrix()
        .inverse()
        .map_err(|_| Error::Singular("theta_sigma is singular".into()))?;
    let theta_inv_dual = theta_inv.transpose();
    let data = IntegralData::new(h)?;
    let w_inv = data
        .w
        .inverse()
        .map_err(|_| Error::Structural("h -> w(h) is not bijective".into()))?;
    let hv = w_inv.mul_vec(eta)?;
    let (s1, s2) = s_maps(h, sigma)?;
    let alg: Algebra<F> = a_sigma_algebra(h, sigma);
    let s = h.antipode();

    let mut gamma = vec![F::zero(); d * d];
    let mut gamma_prime = vec![F::zero(); d * d];
    for (a, ca) in hv.iter().enumerate() {
        if ca.is_zero() {
            continue;
        }
        for t in h.coproduct(a) {
            let w1 = data.w.column(t.left);
            let s_h2 = s.column(t.right);
            let left_f = alg.mul(m, &s2.mul_vec(&s_h2)?);
            let right_g = alg.mul(&s1.mul_vec(&s_h2)?, m);
            for i in 0..d {
                for j in 0..d {
                    let cij = dot(&w1, twisted.product(i, j));
                    if cij.is_zero() {
                        continue;
                    }
                    let coef = ca.clone() * &t.coef * &cij;
                    let ti = theta_inv.column(i);
                    let tj = theta_inv.column(j);
                    let lf = alg.mul(&left_f, &s1.mul_vec(&tj)?);
                    tensor_into(&mut gamma, &coef, &lf, &ti);
                    let di = theta_inv_dual.column(i);
                    let dj = theta_inv_dual.column(j);
                    let rg = alg.mul(&s2.mul_vec(&di)?, &right_g);
                    tensor_into(&mut gamma_prime, &coef, &dj, &rg);
                }
            }
        }
    }
    Ok(RankOnePreimage { gamma, gamma_prime })
}
