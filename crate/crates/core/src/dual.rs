//! The module-side picture: a quasitriangular `(H, R)` and a cocycle
//! `C ∈ H⊗H` for `H*`.

use crate::azumaya::is_azumaya_cleft;
use crate::convolution::{check_dqt_rform, check_left_2cocycle, Functional2};
use crate::error::{Error, Result};
use crate::field::Field;
use crate::hopf::HopfAlgebra;
use crate::linalg::Matrix;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DualPictureVerdict<F> {
    pub azumaya: bool,
    /// `det θ` with `θ(f) = Σ R_C^(1) ⟨f, R_C^(2)⟩`.
    pub det_theta: F,
    /// `det θ_σ` from the comodule side on `H*`.
    pub cleft_det: F,
    pub agrees: bool,
    pub r_c: Matrix<F>,
}

/// Decides invertibility of `θ(f) = Σ R_C^(1)⟨f, R_C^(2)⟩` with
/// `R_C = (τC) R C⁻¹` computed in the algebra `H⊗H`. `R` and `C` are
/// coefficient matrices (`(i, j)` is the coefficient of `e_i⊗e_j`).
pub fn dual_picture_test<F: Field>(
    h: &HopfAlgebra<F>,
    r: &Matrix<F>,
    c: &Matrix<F>,
) -> Result<DualPictureVerdict<F>> {
    let d = h.dim();
    for (name, m) in [("R", r), ("C", c)] {
        if m.rows() != d || m.cols() != d {
            return Err(Error::Dimension {
                context: if name == "R" { "dual_picture_test (R)" } else { "dual_picture_test (C)" },
                expected: d,
                found: m.rows().max(m.cols()),
            });
        }
    }
    let dual = h.dualize();
    let r_form = Functional2::new(r.clone())?;
    let c_form = Functional2::new(c.clone())?;
    if let Some(fail) = check_dqt_rform(&r_form, &dual).first_failure() {
        return Err(Error::InvalidParameter(format!(
            "R is not a quasitriangular structure: {} fails",
            fail.name
        )));
    }
    if let Some(fail) = check_left_2cocycle(&c_form, &dual).first_failure() {
        return Err(Error::InvalidParameter(format!(
            "C is not a cocycle for the dual: {} fails",
            fail.name
        )));
    }

    let square = h.tensor_square_algebra();
    let c_inv = square.inverse_of(c.entries())?;
    let tau_c = c.transpose();
    let rc = square.mul(&square.mul(tau_c.entries(), r.entries()), &c_inv);
    let r_c = Matrix::from_vec(d, d, rc)?;
    let det_theta = r_c.det()?;

    let cleft = is_azumaya_cleft(&dual, &c_form, &r_form)?;
    let azumaya = !det_theta.is_zero();
    Ok(DualPictureVerdict {
        azumaya,
        agrees: azumaya == cleft.azumaya,
        det_theta,
        cleft_det: cleft.det_theta,
        r_c,
    })
}
