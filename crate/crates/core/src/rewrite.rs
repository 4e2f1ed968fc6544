//! Normal forms for algebras generated by `g_0 < g_1 < ... < g_{k-1}` with
//! relations `g_i^2 = s_i` and `g_i g_j + g_j g_i = q_ij` (`i ≠ j`).
//!
//! These are Clifford algebras of a possibly degenerate quadratic form, so the
//! increasing monomials `g_P` form a basis of dimension `2^k`. A monomial is
//! stored as the bitmask of its generators.

use crate::field::Field;
use crate::hopf::Algebra;
use crate::linalg::{axpy, Matrix};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuadraticAlgebra<F> {
    names: Vec<String>,
    squares: Vec<F>,
    anticommutators: Matrix<F>,
}

impl<F: Field> QuadraticAlgebra<F> {
    /// `anticommutators` must be symmetric; its diagonal is ignored.
    pub fn new(names: Vec<String>, squares: Vec<F>, anticommutators: Matrix<F>) -> Self {
        let k = names.len();
        assert_eq!(squares.len(), k);
        assert!(anticommutators.rows() == k && anticommutators.cols() == k);
        debug_assert_eq!(anticommutators, anticommutators.transpose());
        QuadraticAlgebra {
            names,
            squares,
            anticommutators,
        }
    }

    pub fn generators(&self) -> usize {
        self.names.len()
    }

    pub fn dim(&self) -> usize {
        1 << self.generators()
    }

    pub fn label(&self, mask: usize) -> String {
        if mask == 0 {
            return "1".into();
        }
        (0..self.generators())
            .filter(|g| mask >> g & 1 == 1)
            .map(|g| self.names[g].as_str())
            .collect()
    }

    pub fn labels(&self) -> Vec<String> {
        (0..self.dim()).map(|m| self.label(m)).collect()
    }

    /// `x · g` for a vector `x` in the monomial basis.
    pub fn mul_generator(&self, x: &[F], g: usize) -> Vec<F> {
        let mut out = vec![F::zero(); self.dim()];
        for (mask, c) in x.iter().enumerate() {
            if !c.is_zero() {
                self.monomial_times_generator(mask, g, c, &mut out);
            }
        }
        out
    }

    fn monomial_times_generator(&self, mask: usize, g: usize, coef: &F, out: &mut [F]) {
        if mask == 0 {
            out[1 << g] += coef.clone();
            return;
        }
        let last = usize::BITS as usize - 1 - mask.leading_zeros() as usize;
        if g > last {
            out[mask | 1 << g] += coef.clone();
            return;
        }
        let rest = mask & !(1 << last);
        if g == last {
            let s = &self.squares[g];
            if !s.is_zero() {
                out[rest] += coef.clone() * s;
            }
            return;
        }
        // m' g_last g = q m' - m' g g_last
        let q = &self.anticommutators[(g, last)];
        if !q.is_zero() {
            out[rest] += coef.clone() * q;
        }
        let mut tmp = vec![F::zero(); self.dim()];
        self.monomial_times_generator(rest, g, coef, &mut tmp);
        let mut tmp2 = vec![F::zero(); self.dim()];
        for (m, c) in tmp.iter().enumerate() {
            if !c.is_zero() {
                self.monomial_times_generator(m, last, c, &mut tmp2);
            }
        }
        for (o, t) in out.iter_mut().zip(tmp2) {
            *o -= t;
        }
    }

    /// Product of two basis monomials.
    pub fn mul_monomials(&self, a: usize, b: usize) -> Vec<F> {
        let mut x = vec![F::zero(); self.dim()];
        x[a] = F::one();
        for g in 0..self.generators() {
            if b >> g & 1 == 1 {
                x = self.mul_generator(&x, g);
            }
        }
        x
    }

    /// Normal form of a word in the generators.
    pub fn reduce_word(&self, word: &[usize]) -> Vec<F> {
        let mut x = vec![F::zero(); self.dim()];
        x[0] = F::one();
        for &g in word {
            x = self.mul_generator(&x, g);
        }
        x
    }

    pub fn to_algebra(&self) -> Algebra<F> {
        let d = self.dim();
        let mut unit = vec![F::zero(); d];
        unit[0] = F::one();
        Algebra::from_fn(d, unit, |a, b| self.mul_monomials(a, b))
    }

    pub fn mul(&self, x: &[F], y: &[F]) -> Vec<F> {
        let mut out = vec![F::zero(); self.dim()];
        for (b, cb) in y.iter().enumerate() {
            if cb.is_zero() {
                continue;
            }
            let mut t = x.to_vec();
            for g in 0..self.generators() {
                if b >> g & 1 == 1 {
                    t = self.mul_generator(&t, g);
                }
            }
            axpy(&mut out, cb, &t);
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::Rational;
    use proptest::prelude::*;
    use num_traits::Zero;

    fn q(n: i64) -> Rational {
        Rational::from_integer(n.into())
    }

    fn sample(k: usize, seed: &[i64]) -> QuadraticAlgebra<Rational> {
        let names = (0..k).map(|i| format!("g{i}")).collect();
        let squares = (0..k).map(|i| q(seed[i % seed.len()])).collect();
        let mut a = Matrix::zeros(k, k);
        for i in 0..k {
            for j in 0..i {
                let v = q(seed[(i * 3 + j) % seed.len()] - 1);
                a[(i, j)] = v.clone();
                a[(j, i)] = v;
            }
        }
        QuadraticAlgebra::new(names, squares, a)
    }

    #[test]
    fn relations_hold() {
        let alg = sample(3, &[2, -1, 3, 0, 1]);
        for i in 0..3 {
            let sq = alg.reduce_word(&[i, i]);
            assert_eq!(sq[0], alg.squares[i]);
            assert!(sq[1..].iter().all(|c| c.is_zero()));
            for j in 0..3 {
                if i == j {
                    continue;
                }
                let mut s = alg.reduce_word(&[i, j]);
                axpy(&mut s, &q(1), &alg.reduce_word(&[j, i]));
                assert_eq!(s[0], alg.anticommutators[(i, j)]);
                assert!(s[1..].iter().all(|c| c.is_zero()));
            }
        }
    }

    #[test]
    fn exterior_signs() {
        let names = vec!["a".into(), "b".into()];
        let alg = QuadraticAlgebra::new(names, vec![q(0), q(0)], Matrix::zeros(2, 2));
        assert_eq!(alg.reduce_word(&[1, 0]), vec![q(0), q(0), q(0), q(-1)]);
        assert_eq!(alg.label(3), "ab");
        assert_eq!(alg.label(0), "1");
    }

    #[test]
    fn structure_constants_associative() {
        let alg = sample(3, &[1, 2, -1, 0, 3]).to_algebra();
        assert_eq!(alg.associativity_witness(), None);
        assert_eq!(alg.unitality_witness(), None);
    }

    proptest! {
        #[test]
        fn words_reduce_consistently(
            left in proptest::collection::vec(0usize..3, 0..6),
            right in proptest::collection::vec(0usize..3, 0..6),
            seed in proptest::collection::vec(-2i64..3, 5),
        ) {
            let alg = sample(3, &seed);
            let mut word = left.clone();
            word.extend(&right);
            let whole = alg.reduce_word(&word);
            let split = alg.mul(&alg.reduce_word(&left), &alg.reduce_word(&right));
            prop_assert_eq!(whole, split);
        }
    }
}
