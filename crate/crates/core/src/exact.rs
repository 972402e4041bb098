//! Exact rationals and lexicographically ordered rational vectors.
//!
//! Everything in the value-group universe is built on these two types. There
//! is no floating point anywhere in the kernel.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// An arbitrary-precision rational, always in lowest terms with a positive
/// denominator.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Rational(BigRational);

impl Rational {
    pub fn new(numer: i64, denom: i64) -> Self {
        assert!(denom != 0, "zero denominator");
        Rational(BigRational::new(BigInt::from(numer), BigInt::from(denom)))
    }

    pub fn from_big(numer: BigInt, denom: BigInt) -> Result<Self> {
        if denom.is_zero() {
            return Err(Error::InvalidCut("zero denominator".into()));
        }
        Ok(Rational(BigRational::new(numer, denom)))
    }

    pub fn integer(n: i64) -> Self {
        Rational(BigRational::from_integer(BigInt::from(n)))
    }

    pub fn zero() -> Self {
        Rational(BigRational::zero())
    }

    pub fn one() -> Self {
        Rational(BigRational::one())
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn is_integer(&self) -> bool {
        self.0.is_integer()
    }

    pub fn is_negative(&self) -> bool {
        self.0.is_negative()
    }

    pub fn is_positive(&self) -> bool {
        self.0.is_positive()
    }

    pub fn numer(&self) -> &BigInt {
        self.0.numer()
    }

    pub fn denom(&self) -> &BigInt {
        self.0.denom()
    }

    /// Smallest integer not below `self`.
    pub fn ceil(&self) -> Self {
        Rational(self.0.ceil())
    }

    pub fn floor(&self) -> Self {
        Rational(self.0.floor())
    }

    pub fn to_i64(&self) -> Option<i64> {
        if self.is_integer() {
            self.0.numer().to_i64()
        } else {
            None
        }
    }

    pub fn scale(&self, n: i64) -> Self {
        Rational(&self.0 * BigInt::from(n))
    }

    pub fn halve(&self) -> Self {
        Rational(&self.0 / BigInt::from(2))
    }
}

impl fmt::Display for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_integer() {
            write!(f, "{}", self.0.numer())
        } else {
            write!(f, "{}/{}", self.0.numer(), self.0.denom())
        }
    }
}

/// Serialized as its display string, `"3/2"`.
impl serde::Serialize for Rational {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl FromStr for Rational {
    type Err = Error;

    /// Accepts `n` or `n/d` with optional sign on the numerator.
    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::InvalidCut(format!("malformed rational `{s}`"));
        let s = s.trim();
        match s.split_once('/') {
            None => {
                let n: BigInt = s.parse().map_err(|_| bad())?;
                Ok(Rational(BigRational::from_integer(n)))
            }
            Some((n, d)) => {
                let n: BigInt = n.trim().parse().map_err(|_| bad())?;
                let d: BigInt = d.trim().parse().map_err(|_| bad())?;
                if d.is_negative() {
                    return Err(bad());
                }
                Rational::from_big(n, d)
            }
        }
    }
}

impl From<i64> for Rational {
    fn from(n: i64) -> Self {
        Rational::integer(n)
    }
}

impl Add for &Rational {
    type Output = Rational;
    fn add(self, rhs: &Rational) -> Rational {
        Rational(&self.0 + &rhs.0)
    }
}

impl Sub for &Rational {
    type Output = Rational;
    fn sub(self, rhs: &Rational) -> Rational {
        Rational(&self.0 - &rhs.0)
    }
}

impl Mul for &Rational {
    type Output = Rational;
    fn mul(self, rhs: &Rational) -> Rational {
        Rational(&self.0 * &rhs.0)
    }
}

impl Neg for &Rational {
    type Output = Rational;
    fn neg(self) -> Rational {
        Rational(-&self.0)
    }
}

/// Least common multiple of the denominators, useful when clearing fractions.
pub fn common_denominator<'a>(values: impl IntoIterator<Item = &'a Rational>) -> BigInt {
    values
        .into_iter()
        .fold(BigInt::one(), |acc, r| acc.lcm(r.denom()))
}

/// A fixed-length vector of rationals ordered lexicographically from the
/// first coordinate.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct LexVector(Vec<Rational>);

impl LexVector {
    pub fn new(entries: Vec<Rational>) -> Self {
        LexVector(entries)
    }

    pub fn from_ints(entries: &[i64]) -> Self {
        LexVector(entries.iter().map(|&n| Rational::integer(n)).collect())
    }

    pub fn zero(len: usize) -> Self {
        LexVector(vec![Rational::zero(); len])
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn entries(&self) -> &[Rational] {
        &self.0
    }

    pub fn into_entries(self) -> Vec<Rational> {
        self.0
    }

    pub fn prefix(&self, m: usize) -> &[Rational] {
        &self.0[..m]
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(Rational::is_zero)
    }

    fn check_len(&self, other: &LexVector) -> Result<()> {
        if self.len() != other.len() {
            return Err(Error::LengthMismatch {
                left: self.len(),
                right: other.len(),
            });
        }
        Ok(())
    }
}

impl fmt::Display for LexVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, r) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{r}")?;
        }
        write!(f, ")")
    }
}

/// Lexicographic comparison of two equal-length slices.
pub fn lex_cmp_slices(a: &[Rational], b: &[Rational]) -> Ordering {
    debug_assert_eq!(a.len(), b.len());
    for (x, y) in a.iter().zip(b) {
        match x.cmp(y) {
            Ordering::Equal => continue,
            other => return other,
        }
    }
    Ordering::Equal
}

pub fn lex_compare(a: &LexVector, b: &LexVector) -> Result<Ordering> {
    a.check_len(b)?;
    Ok(lex_cmp_slices(&a.0, &b.0))
}

pub fn vec_add(a: &LexVector, b: &LexVector) -> Result<LexVector> {
    a.check_len(b)?;
    Ok(LexVector(a.0.iter().zip(&b.0).map(|(x, y)| x + y).collect()))
}

pub fn vec_sub(a: &LexVector, b: &LexVector) -> Result<LexVector> {
    a.check_len(b)?;
    Ok(LexVector(a.0.iter().zip(&b.0).map(|(x, y)| x - y).collect()))
}

pub fn vec_scale(a: &LexVector, n: i64) -> LexVector {
    LexVector(a.0.iter().map(|x| x.scale(n)).collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn q(n: i64, d: i64) -> Rational {
        Rational::new(n, d)
    }

    #[test]
    fn compare_examples() {
        let a = LexVector::from_ints(&[1, -5]);
        let b = LexVector::from_ints(&[0, 100]);
        assert_eq!(lex_compare(&a, &b).unwrap(), Ordering::Greater);
        let z = LexVector::zero(2);
        assert_eq!(lex_compare(&z, &z).unwrap(), Ordering::Equal);
        let c = LexVector::new(vec![q(1, 2), q(0, 1)]);
        let d = LexVector::new(vec![q(1, 2), q(-3, 1)]);
        assert_eq!(lex_compare(&c, &d).unwrap(), Ordering::Greater);
    }

    #[test]
    fn arithmetic_examples() {
        let s = vec_add(&LexVector::from_ints(&[1, 0]), &LexVector::from_ints(&[0, 1])).unwrap();
        assert_eq!(s, LexVector::from_ints(&[1, 1]));
        let a = LexVector::from_ints(&[1, -5]);
        assert_eq!(vec_sub(&a, &a).unwrap(), LexVector::zero(2));
        let h = LexVector::new(vec![q(1, 2), q(3, 1)]);
        assert_eq!(vec_scale(&h, 4), LexVector::from_ints(&[2, 12]));
    }

    #[test]
    fn length_mismatch_is_an_error() {
        let a = LexVector::zero(2);
        let b = LexVector::zero(3);
        assert!(matches!(
            lex_compare(&a, &b),
            Err(Error::LengthMismatch { left: 2, right: 3 })
        ));
        assert!(vec_add(&a, &b).is_err());
        assert!(vec_sub(&a, &b).is_err());
    }

    #[test]
    fn normalizes_eagerly() {
        assert_eq!(q(2, 4), q(1, 2));
        assert_eq!(q(3, -6), q(-1, 2));
        assert_eq!("4/8".parse::<Rational>().unwrap(), q(1, 2));
        assert_eq!(q(-3, 2).ceil(), q(-1, 1));
        assert_eq!(q(3, 2).ceil(), q(2, 1));
        assert!("1/0".parse::<Rational>().is_err());
        assert!("x".parse::<Rational>().is_err());
        assert_eq!(q(-1, 2).to_string(), "-1/2");
    }

    fn small_vec() -> impl Strategy<Value = LexVector> {
        prop::collection::vec((-6i64..6, 1i64..4), 3)
            .prop_map(|v| LexVector::new(v.into_iter().map(|(n, d)| q(n, d)).collect()))
    }

    proptest! {
        #[test]
        fn lex_is_total_order(a in small_vec(), b in small_vec(), c in small_vec()) {
            let ab = lex_compare(&a, &b).unwrap();
            prop_assert_eq!(ab.reverse(), lex_compare(&b, &a).unwrap());
            if ab == Ordering::Equal {
                prop_assert_eq!(&a, &b);
            }
            let bc = lex_compare(&b, &c).unwrap();
            if ab != Ordering::Greater && bc != Ordering::Greater {
                prop_assert_ne!(lex_compare(&a, &c).unwrap(), Ordering::Greater);
            }
        }

        #[test]
        fn addition_laws(a in small_vec(), b in small_vec(), c in small_vec()) {
            prop_assert_eq!(vec_add(&a, &b).unwrap(), vec_add(&b, &a).unwrap());
            let left = vec_add(&vec_add(&a, &b).unwrap(), &c).unwrap();
            let right = vec_add(&a, &vec_add(&b, &c).unwrap()).unwrap();
            prop_assert_eq!(left, right);
            prop_assert!(vec_sub(&a, &a).unwrap().is_zero());
        }

        #[test]
        fn addition_respects_order(a in small_vec(), b in small_vec(), c in small_vec()) {
            let lhs = lex_compare(&vec_add(&a, &c).unwrap(), &vec_add(&b, &c).unwrap()).unwrap();
            prop_assert_eq!(lhs, lex_compare(&a, &b).unwrap());
        }
    }
}
