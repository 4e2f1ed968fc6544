//! Dense exact linear algebra.
//!
//! Index convention used throughout the crate: a pair `(i, j)` drawn from
//! spaces of dimensions `m` and `n` is flattened to `i * n + j`. This is the
//! row-major order of [`Matrix`], the basis order of [`kron`], the basis of
//! `H ⊗ H`, and the matrix-unit basis of `End(A)` (`E_{pq}` sends `e_q` to
//! `e_p` and sits at `p * m + q`).

use std::fmt;
use std::ops::{Index, IndexMut, Mul};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::field::{Field, Rational};

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Matrix<F> {
    rows: usize,
    cols: usize,
    data: Vec<F>,
}

impl<F: Field> Matrix<F> {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix {
            rows,
            cols,
            data: vec![F::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = F::one();
        }
        m
    }

    pub fn from_vec(rows: usize, cols: usize, data: Vec<F>) -> Result<Self> {
        if data.len() != rows * cols {
            return Err(Error::Dimension {
                context: "Matrix::from_vec",
                expected: rows * cols,
                found: data.len(),
            });
        }
        Ok(Matrix { rows, cols, data })
    }

    pub fn from_rows(rows: Vec<Vec<F>>) -> Result<Self> {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        let mut data = Vec::with_capacity(r * c);
        for row in rows {
            if row.len() != c {
                return Err(Error::Dimension {
                    context: "Matrix::from_rows",
                    expected: c,
                    found: row.len(),
                });
            }
            data.extend(row);
        }
        Ok(Matrix { rows: r, cols: c, data })
    }

    /// Builds a matrix whose `j`-th column is `columns[j]`.
    pub fn from_columns(height: usize, columns: &[Vec<F>]) -> Result<Self> {
        let mut m = Self::zeros(height, columns.len());
        for (j, col) in columns.iter().enumerate() {
            if col.len() != height {
                return Err(Error::Dimension {
                    context: "Matrix::from_columns",
                    expected: height,
                    found: col.len(),
                });
            }
            for (i, v) in col.iter().enumerate() {
                m[(i, j)] = v.clone();
            }
        }
        Ok(m)
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> F) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        Matrix { rows, cols, data }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn entries(&self) -> &[F] {
        &self.data
    }

    pub fn into_entries(self) -> Vec<F> {
        self.data
    }

    pub fn row(&self, i: usize) -> &[F] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn column(&self, j: usize) -> Vec<F> {
        (0..self.rows).map(|i| self[(i, j)].clone()).collect()
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.cols, self.rows, |i, j| self[(j, i)].clone())
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Zero::is_zero)
    }

    pub fn scale(&self, s: &F) -> Self {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|x| x.clone() * s).collect(),
        }
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.same_shape(other, "Matrix::add")?;
        Ok(Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self
                .data
                .iter()
                .zip(&other.data)
                .map(|(a, b)| a.clone() + b)
                .collect(),
        })
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.same_shape(other, "Matrix::sub")?;
        Ok(Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self
                .data
                .iter()
                .zip(&other.data)
                .map(|(a, b)| a.clone() - b)
                .collect(),
        })
    }

    fn same_shape(&self, other: &Self, context: &'static str) -> Result<()> {
        if self.rows != other.rows || self.cols != other.cols {
            return Err(Error::Dimension {
                context,
                expected: self.rows * self.cols,
                found: other.rows * other.cols,
            });
        }
        Ok(())
    }

    pub fn matmul(&self, other: &Self) -> Result<Self> {
        if self.cols != other.rows {
            return Err(Error::Dimension {
                context: "Matrix::matmul",
                expected: self.cols,
                found: other.rows,
            });
        }
        let mut out = Self::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = &other[(k, j)];
                    if !b.is_zero() {
                        out[(i, j)] += a.clone() * b;
                    }
                }
            }
        }
        Ok(out)
    }

    pub fn mul_vec(&self, v: &[F]) -> Result<Vec<F>> {
        if v.len() != self.cols {
            return Err(Error::Dimension {
                context: "Matrix::mul_vec",
                expected: self.cols,
                found: v.len(),
            });
        }
        let mut out = vec![F::zero(); self.rows];
        for (i, o) in out.iter_mut().enumerate() {
            for (a, b) in self.row(i).iter().zip(v) {
                if !a.is_zero() && !b.is_zero() {
                    *o += a.clone() * b;
                }
            }
        }
        Ok(out)
    }

    pub fn det(&self) -> Result<F> {
        det(self)
    }

    pub fn rank(&self) -> usize {
        F::row_echelon(self).pivots.len()
    }

    pub fn kernel_basis(&self) -> Vec<Vec<F>> {
        kernel_basis(self)
    }

    pub fn inverse(&self) -> Result<Self> {
        inverse(self)
    }
}

impl<F> Index<(usize, usize)> for Matrix<F> {
    type Output = F;
    fn index(&self, (i, j): (usize, usize)) -> &F {
        debug_assert!(i < self.rows && j < self.cols);
        &self.data[i * self.cols + j]
    }
}

impl<F> IndexMut<(usize, usize)> for Matrix<F> {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut F {
        debug_assert!(i < self.rows && j < self.cols);
        &mut self.data[i * self.cols + j]
    }
}

impl<F: Field> Mul for &Matrix<F> {
    type Output = Matrix<F>;
    fn mul(self, rhs: &Matrix<F>) -> Matrix<F> {
        self.matmul(rhs).expect("matrix product dimensions")
    }
}

impl<F: fmt::Display> fmt::Display for Matrix<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.rows {
            let row: Vec<String> = self.data[i * self.cols..(i + 1) * self.cols]
                .iter()
                .map(ToString::to_string)
                .collect();
            writeln!(f, "[{}]", row.join(", "))?;
        }
        Ok(())
    }
}

impl<F: fmt::Debug> fmt::Debug for Matrix<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Matrix")
            .field("rows", &self.rows)
            .field("cols", &self.cols)
            .field("data", &self.data)
            .finish()
    }
}

/// Row echelon form: `matrix` is upper echelon, `pivots[k]` is the pivot
/// column of row `k`, `swaps` counts row transpositions.
#[derive(Clone, Debug)]
pub struct Echelon<F> {
    pub matrix: Matrix<F>,
    pub pivots: Vec<usize>,
    pub swaps: usize,
}

pub(crate) fn gauss_echelon<F: Field>(m: &Matrix<F>) -> Echelon<F> {
    let mut a = m.clone();
    let (rows, cols) = (a.rows, a.cols);
    let mut pivots = Vec::new();
    let mut swaps = 0;
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| !a[(i, c)].is_zero()) else {
            continue;
        };
        if p != r {
            swap_rows(&mut a, p, r);
            swaps += 1;
        }
        let inv = a[(r, c)].inverse().expect("nonzero pivot");
        for i in r + 1..rows {
            if a[(i, c)].is_zero() {
                continue;
            }
            let factor = a[(i, c)].clone() * &inv;
            for j in c..cols {
                let t = factor.clone() * &a[(r, j)];
                a[(i, j)] -= t;
            }
        }
        pivots.push(c);
        r += 1;
    }
    Echelon {
        matrix: a,
        pivots,
        swaps,
    }
}

pub(crate) fn gauss_determinant<F: Field>(m: &Matrix<F>) -> F {
    let n = m.rows;
    let ech = gauss_echelon(m);
    if ech.pivots.len() < n {
        return F::zero();
    }
    let mut d = F::one();
    for i in 0..n {
        d *= ech.matrix[(i, i)].clone();
    }
    if ech.swaps % 2 == 1 {
        -d
    } else {
        d
    }
}

fn swap_rows<T>(a: &mut Matrix<T>, p: usize, q: usize) {
    for j in 0..a.cols {
        a.data.swap(p * a.cols + j, q * a.cols + j);
    }
}

/// Clears denominators row by row. Returns the integer matrix and the
/// product of the row multipliers.
fn integer_rows(m: &Matrix<Rational>) -> (Matrix<BigInt>, BigInt) {
    let mut scale_total = BigInt::one();
    let mut data = Vec::with_capacity(m.data.len());
    for i in 0..m.rows {
        let row = m.row(i);
        let lcm = row
            .iter()
            .fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
        for x in row {
            data.push(x.numer() * (&lcm / x.denom()));
        }
        scale_total *= lcm;
    }
    (
        Matrix {
            rows: m.rows,
            cols: m.cols,
            data,
        },
        scale_total,
    )
}

/// Fraction-free (Bareiss) forward elimination on an integer matrix.
/// Entries after step k are k+1 minors, so each division is exact.
fn bareiss_in_place(a: &mut Matrix<BigInt>) -> (Vec<usize>, usize) {
    let (rows, cols) = (a.rows, a.cols);
    let mut prev = BigInt::one();
    let mut pivots = Vec::new();
    let mut swaps = 0;
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| !a[(i, c)].is_zero()) else {
            continue;
        };
        if p != r {
            swap_rows(a, p, r);
            swaps += 1;
        }
        let pivot = a[(r, c)].clone();
        for i in r + 1..rows {
            let lead = a[(i, c)].clone();
            for j in c + 1..cols {
                let num = &pivot * &a[(i, j)] - &lead * &a[(r, j)];
                debug_assert!((&num % &prev).is_zero());
                a[(i, j)] = num / &prev;
            }
            a[(i, c)] = BigInt::zero();
        }
        // Rows with no pivot yet (skipped columns) keep their scale; the
        // remaining rows have all been rescaled by `pivot / prev`.
        prev = pivot;
        pivots.push(c);
        r += 1;
    }
    (pivots, swaps)
}

pub(crate) fn bareiss_echelon_rational(m: &Matrix<Rational>) -> Echelon<Rational> {
    let (mut a, _) = integer_rows(m);
    let (pivots, swaps) = bareiss_in_place(&mut a);
    Echelon {
        matrix: Matrix {
            rows: a.rows,
            cols: a.cols,
            data: a.data.into_iter().map(Rational::from_integer).collect(),
        },
        pivots,
        swaps,
    }
}

pub(crate) fn bareiss_determinant_rational(m: &Matrix<Rational>) -> Rational {
    let n = m.rows;
    if n == 0 {
        return Rational::one();
    }
    let (mut a, scale) = integer_rows(m);
    let (pivots, swaps) = bareiss_in_place(&mut a);
    if pivots.len() < n {
        return Rational::zero();
    }
    let mut d = a[(n - 1, n - 1)].clone();
    if swaps % 2 == 1 {
        d = -d;
    }
    Rational::new(d, scale)
}

/// Exact determinant. Fraction-free over the rationals, plain elimination
/// over prime fields.
pub fn det<F: Field>(m: &Matrix<F>) -> Result<F> {
    if !m.is_square() {
        return Err(Error::NotSquare {
            rows: m.rows,
            cols: m.cols,
        });
    }
    if m.rows == 0 {
        return Ok(F::one());
    }
    Ok(F::determinant(m))
}

/// Back-substitution on an echelon form for the solution with the given
/// free-variable values (`free` indexed by column, pivots ignored).
fn back_substitute<F: Field>(ech: &Echelon<F>, rhs: Option<&[F]>, mut x: Vec<F>) -> Vec<F> {
    let a = &ech.matrix;
    for (k, &p) in ech.pivots.iter().enumerate().rev() {
        let mut s = match rhs {
            Some(b) => b[k].clone(),
            None => F::zero(),
        };
        for j in p + 1..a.cols {
            if !a[(k, j)].is_zero() && !x[j].is_zero() {
                s -= a[(k, j)].clone() * &x[j];
            }
        }
        x[p] = s * a[(k, p)].inverse().expect("nonzero pivot");
    }
    x
}

/// Basis of the right null space `{v : M v = 0}`; empty iff `M` has full
/// column rank.
pub fn kernel_basis<F: Field>(m: &Matrix<F>) -> Vec<Vec<F>> {
    let ech = F::row_echelon(m);
    let mut is_pivot = vec![false; m.cols];
    for &p in &ech.pivots {
        is_pivot[p] = true;
    }
    (0..m.cols)
        .filter(|&c| !is_pivot[c])
        .map(|free| {
            let mut x = vec![F::zero(); m.cols];
            x[free] = F::one();
            back_substitute(&ech, None, x)
        })
        .collect()
}

/// One solution of `M x = b`, or `None` when the system is inconsistent.
pub fn solve<F: Field>(m: &Matrix<F>, b: &[F]) -> Result<Option<Vec<F>>> {
    if b.len() != m.rows {
        return Err(Error::Dimension {
            context: "solve",
            expected: m.rows,
            found: b.len(),
        });
    }
    let aug = Matrix::from_fn(m.rows, m.cols + 1, |i, j| {
        if j < m.cols {
            m[(i, j)].clone()
        } else {
            b[i].clone()
        }
    });
    let ech = F::row_echelon(&aug);
    if ech.pivots.last() == Some(&m.cols) {
        return Ok(None);
    }
    let rhs: Vec<F> = (0..ech.pivots.len())
        .map(|k| ech.matrix[(k, m.cols)].clone())
        .collect();
    let coeffs = Echelon {
        matrix: Matrix::from_fn(m.rows, m.cols, |i, j| ech.matrix[(i, j)].clone()),
        pivots: ech.pivots,
        swaps: ech.swaps,
    };
    Ok(Some(back_substitute(&coeffs, Some(&rhs), vec![F::zero(); m.cols])))
}

pub fn inverse<F: Field>(m: &Matrix<F>) -> Result<Matrix<F>> {
    if !m.is_square() {
        return Err(Error::NotSquare {
            rows: m.rows,
            cols: m.cols,
        });
    }
    let n = m.rows;
    let aug = Matrix::from_fn(n, 2 * n, |i, j| {
        if j < n {
            m[(i, j)].clone()
        } else if j - n == i {
            F::one()
        } else {
            F::zero()
        }
    });
    let ech = F::row_echelon(&aug);
    if ech.pivots.len() < n || ech.pivots[n - 1] != n - 1 {
        return Err(Error::Singular(format!("{n}x{n} matrix has no inverse")));
    }
    let coeffs = Echelon {
        matrix: Matrix::from_fn(n, n, |i, j| ech.matrix[(i, j)].clone()),
        pivots: (0..n).collect(),
        swaps: ech.swaps,
    };
    let mut out = Matrix::zeros(n, n);
    for col in 0..n {
        let rhs: Vec<F> = (0..n).map(|k| ech.matrix[(k, n + col)].clone()).collect();
        let x = back_substitute(&coeffs, Some(&rhs), vec![F::zero(); n]);
        for (i, v) in x.into_iter().enumerate() {
            out[(i, col)] = v;
        }
    }
    Ok(out)
}

/// Kronecker product; `(i ⊗ j)` lands at `i * b.cols + j` (rows likewise).
pub fn kron<F: Field>(a: &Matrix<F>, b: &Matrix<F>) -> Matrix<F> {
    Matrix::from_fn(a.rows * b.rows, a.cols * b.cols, |r, c| {
        let (i, k) = (r / b.rows, r % b.rows);
        let (j, l) = (c / b.cols, c % b.cols);
        a[(i, j)].clone() * &b[(k, l)]
    })
}

pub fn dot<F: Field>(a: &[F], b: &[F]) -> F {
    a.iter()
        .zip(b)
        .filter(|(x, y)| !x.is_zero() && !y.is_zero())
        .fold(F::zero(), |acc, (x, y)| acc + x.clone() * y)
}

/// `acc += s * v`, skipping zero work.
pub fn axpy<F: Field>(acc: &mut [F], s: &F, v: &[F]) {
    if s.is_zero() {
        return;
    }
    for (a, x) in acc.iter_mut().zip(v) {
        if !x.is_zero() {
            *a += s.clone() * x;
        }
    }
}

pub fn unit_vector<F: Field>(dim: usize, i: usize) -> Vec<F> {
    let mut v = vec![F::zero(); dim];
    v[i] = F::one();
    v
}
