//! Exact scalar fields.
//!
//! Everything in this crate is generic over [`Field`]. Two implementations
//! ship: arbitrary-precision rationals ([`Rational`]) and prime fields
//! [`Fp<P>`] for an odd prime `P` fixed at compile time.

use std::fmt;
use std::hash::Hash;
use std::ops::{Add, AddAssign, Div, Mul, MulAssign, Neg, Sub, SubAssign};
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::linalg::{self, Echelon, Matrix};

/// Arbitrary-precision rational numbers, always kept in lowest terms.
pub type Rational = BigRational;

/// An exact commutative field of characteristic zero or an odd prime.
pub trait Field:
    Clone
    + fmt::Debug
    + fmt::Display
    + PartialEq
    + Eq
    + Hash
    + Send
    + Sync
    + 'static
    + Zero
    + One
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Div<Output = Self>
    + Neg<Output = Self>
    + for<'a> Add<&'a Self, Output = Self>
    + for<'a> Sub<&'a Self, Output = Self>
    + for<'a> Mul<&'a Self, Output = Self>
    + AddAssign
    + SubAssign
    + MulAssign
    + for<'a> AddAssign<&'a Self>
    + for<'a> SubAssign<&'a Self>
{
    /// 0 for the rationals, `p` for `F_p`.
    const CHARACTERISTIC: u64;

    /// Multiplicative inverse, `None` for zero.
    fn inverse(&self) -> Option<Self>;

    fn from_i64(value: i64) -> Self;

    /// The image of `num / den`, or `None` when `den` vanishes in the field.
    fn from_fraction(num: &BigInt, den: &BigInt) -> Option<Self>;

    /// Name used in documents and on the command line (`rational`, `prime:7`).
    fn field_name() -> String;

    /// Parses `"a"`, `"-a"` or `"a/b"` exactly. Decimal notation is rejected.
    fn parse_scalar(text: &str) -> Result<Self> {
        let text = text.trim();
        let bad = || Error::Parse(format!("`{text}` is not an exact scalar (expected `a` or `a/b`)"));
        let (num, den) = match text.split_once('/') {
            Some((n, d)) => (
                BigInt::from_str(n.trim()).map_err(|_| bad())?,
                BigInt::from_str(d.trim()).map_err(|_| bad())?,
            ),
            None => (BigInt::from_str(text).map_err(|_| bad())?, BigInt::one()),
        };
        Self::from_fraction(&num, &den).ok_or_else(|| {
            Error::Parse(format!("`{text}` has a denominator that vanishes in {}", Self::field_name()))
        })
    }

    /// Row echelon form (not reduced) with pivot columns and swap count.
    fn row_echelon(m: &Matrix<Self>) -> Echelon<Self> {
        linalg::gauss_echelon(m)
    }

    /// Determinant of a square matrix; callers check squareness.
    fn determinant(m: &Matrix<Self>) -> Self {
        linalg::gauss_determinant(m)
    }
}

impl Field for BigRational {
    const CHARACTERISTIC: u64 = 0;

    fn inverse(&self) -> Option<Self> {
        if self.is_zero() {
            None
        } else {
            Some(self.recip())
        }
    }

    fn from_i64(value: i64) -> Self {
        BigRational::from_integer(BigInt::from(value))
    }

    fn from_fraction(num: &BigInt, den: &BigInt) -> Option<Self> {
        if den.is_zero() {
            None
        } else {
            Some(BigRational::new(num.clone(), den.clone()))
        }
    }

    fn field_name() -> String {
        "rational".to_string()
    }

    fn row_echelon(m: &Matrix<Self>) -> Echelon<Self> {
        linalg::bareiss_echelon_rational(m)
    }

    fn determinant(m: &Matrix<Self>) -> Self {
        linalg::bareiss_determinant_rational(m)
    }
}

const fn is_odd_prime(p: u64) -> bool {
    if p < 3 || p % 2 == 0 {
        return false;
    }
    let mut d = 3;
    while d * d <= p {
        if p % d == 0 {
            return false;
        }
        d += 2;
    }
    true
}

/// Residue class modulo the odd prime `P`.
///
/// `P` must be an odd prime below 2^63; instantiating anything else is a
/// compile-time error.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Default, PartialOrd, Ord)]
pub struct Fp<const P: u64>(u64);

impl<const P: u64> Fp<P> {
    const MODULUS_OK: () = assert!(
        is_odd_prime(P) && P < (1u64 << 63),
        "Fp<P> requires an odd prime modulus"
    );

    pub fn new(value: i64) -> Self {
        let () = Self::MODULUS_OK;
        Fp(value.rem_euclid(P as i64) as u64)
    }

    pub fn residue(self) -> u64 {
        self.0
    }

    fn from_u128(v: u128) -> Self {
        let () = Self::MODULUS_OK;
        Fp((v % P as u128) as u64)
    }

    fn pow(self, mut e: u64) -> Self {
        let mut base = self;
        let mut acc = Fp::<P>::one();
        while e > 0 {
            if e & 1 == 1 {
                acc *= base;
            }
            base *= base;
            e >>= 1;
        }
        acc
    }
}

impl<const P: u64> fmt::Display for Fp<P> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl<const P: u64> fmt::Debug for Fp<P> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} (mod {})", self.0, P)
    }
}

impl<const P: u64> Zero for Fp<P> {
    fn zero() -> Self {
        let () = Self::MODULUS_OK;
        Fp(0)
    }
    fn is_zero(&self) -> bool {
        self.0 == 0
    }
}

impl<const P: u64> One for Fp<P> {
    fn one() -> Self {
        let () = Self::MODULUS_OK;
        Fp(1)
    }
}

impl<const P: u64> Add for Fp<P> {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        Self::from_u128(self.0 as u128 + rhs.0 as u128)
    }
}

impl<const P: u64> Sub for Fp<P> {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        Self::from_u128(self.0 as u128 + P as u128 - rhs.0 as u128)
    }
}

impl<const P: u64> Mul for Fp<P> {
    type Output = Self;
    fn mul(self, rhs: Self) -> Self {
        Self::from_u128(self.0 as u128 * rhs.0 as u128)
    }
}

impl<const P: u64> Div for Fp<P> {
    type Output = Self;
    #[allow(clippy::suspicious_arithmetic_impl)]
    fn div(self, rhs: Self) -> Self {
        self * rhs.inverse().expect("division by zero in F_p")
    }
}

impl<const P: u64> Neg for Fp<P> {
    type Output = Self;
    fn neg(self) -> Self {
        Self::from_u128(P as u128 - self.0 as u128)
    }
}

macro_rules! fp_ref_ops {
    ($($tr:ident $m:ident),*) => {$(
        impl<'a, const P: u64> $tr<&'a Fp<P>> for Fp<P> {
            type Output = Self;
            fn $m(self, rhs: &'a Fp<P>) -> Self {
                $tr::$m(self, *rhs)
            }
        }
    )*};
}
fp_ref_ops!(Add add, Sub sub, Mul mul);

macro_rules! fp_assign_ops {
    ($($tr:ident $m:ident $op:ident),*) => {$(
        impl<const P: u64> $tr for Fp<P> {
            fn $m(&mut self, rhs: Self) {
                *self = $op(*self, rhs);
            }
        }
        impl<'a, const P: u64> $tr<&'a Fp<P>> for Fp<P> {
            fn $m(&mut self, rhs: &'a Fp<P>) {
                *self = $op(*self, *rhs);
            }
        }
    )*};
}

fn fp_add<const P: u64>(a: Fp<P>, b: Fp<P>) -> Fp<P> {
    a + b
}
fn fp_sub<const P: u64>(a: Fp<P>, b: Fp<P>) -> Fp<P> {
    a - b
}
fn fp_mul<const P: u64>(a: Fp<P>, b: Fp<P>) -> Fp<P> {
    a * b
}
fp_assign_ops!(AddAssign add_assign fp_add, SubAssign sub_assign fp_sub, MulAssign mul_assign fp_mul);

impl<const P: u64> Field for Fp<P> {
    const CHARACTERISTIC: u64 = P;

    fn inverse(&self) -> Option<Self> {
        if self.0 == 0 {
            None
        } else {
            Some(self.pow(P - 2))
        }
    }

    fn from_i64(value: i64) -> Self {
        Fp::new(value)
    }

    fn from_fraction(num: &BigInt, den: &BigInt) -> Option<Self> {
        let reduce = |x: &BigInt| -> Fp<P> {
            let r = x.mod_floor(&BigInt::from(P));
            Fp::from_u128(r.to_u128().expect("residue fits"))
        };
        let d = reduce(den);
        d.inverse().map(|inv| reduce(num) * inv)
    }

    fn field_name() -> String {
        format!("prime:{P}")
    }
}

/// Reduces a rational into `F`, `None` when the denominator vanishes there.
pub fn embed_rational<F: Field>(q: &Rational) -> Option<F> {
    F::from_fraction(q.numer(), q.denom())
}

/// `true` when `q` is an integer of absolute value at most `bound`.
pub fn is_small_integer(q: &Rational, bound: i64) -> bool {
    q.is_integer() && q.numer().abs() <= BigInt::from(bound)
}

#[cfg(test)]
mod tests {
    use super::*;

    type F7 = Fp<7>;

    fn q(n: i64, d: i64) -> Rational {
        Rational::new(n.into(), d.into())
    }

    #[test]
    fn rational_parse_is_exact_and_canonical() {
        assert_eq!(Rational::parse_scalar("6/-4").unwrap(), q(-3, 2));
        assert_eq!(Rational::parse_scalar(" 7 ").unwrap(), q(7, 1));
        assert!(Rational::parse_scalar("0.5").is_err());
        assert!(Rational::parse_scalar("1/0").is_err());
    }

    #[test]
    fn prime_field_arithmetic() {
        let a = F7::new(3);
        assert_eq!(a * a.inverse().unwrap(), F7::one());
        assert_eq!(F7::new(-1), F7::new(6));
        assert_eq!(F7::parse_scalar("-1/2").unwrap(), F7::new(3));
        assert!(F7::parse_scalar("1/7").is_err());
        assert_eq!(F7::zero().inverse(), None);
        assert_eq!(F7::field_name(), "prime:7");
    }

    #[test]
    fn embedding_respects_denominators() {
        assert_eq!(embed_rational::<F7>(&q(-1, 2)), Some(F7::new(3)));
        assert_eq!(embed_rational::<F7>(&q(1, 14)), None);
    }

    proptest::proptest! {
        #[test]
        fn fp_field_axioms(a in -500i64..500, b in -500i64..500, c in -500i64..500) {
            let (a, b, c) = (Fp::<101>::new(a), Fp::<101>::new(b), Fp::<101>::new(c));
            proptest::prop_assert_eq!((a + b) + c, a + (b + c));
            proptest::prop_assert_eq!(a * (b + c), a * b + a * c);
            if !a.is_zero() {
                proptest::prop_assert_eq!(a * a.inverse().unwrap(), Fp::<101>::one());
            }
        }

        #[test]
        fn rational_lowest_terms(n in -1000i64..1000, d in 1i64..1000) {
            let r = q(n, d);
            proptest::prop_assert!(r.denom() > &BigInt::zero());
            proptest::prop_assert_eq!(r.numer().gcd(r.denom()) <= BigInt::one() || r.numer().is_zero(), true);
        }
    }
}
