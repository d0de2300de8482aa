//! Field elements: rationals and elements of a number field.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use super::field::{Field, NumberField};
use super::poly::Poly;
use super::Rational;

/// Element of Q[x]/(f), stored as its reduced coefficient vector.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Algebraic {
    coeffs: Vec<Rational>,
    field: Arc<NumberField>,
}

impl Algebraic {
    pub(crate) fn from_reduced(coeffs: Vec<Rational>, field: Arc<NumberField>) -> Self {
        debug_assert_eq!(coeffs.len(), field.degree());
        Algebraic { coeffs, field }
    }

    pub(crate) fn from_poly(p: &Poly, field: Arc<NumberField>) -> Self {
        let coeffs = field.reduce(p);
        Algebraic { coeffs, field }
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn field(&self) -> &Arc<NumberField> {
        &self.field
    }

    fn poly(&self) -> Poly {
        Poly::new(self.coeffs.clone())
    }

    fn check(&self, other: &Algebraic) {
        assert!(
            Arc::ptr_eq(&self.field, &other.field) || self.field == other.field,
            "arithmetic across different number fields"
        );
    }

    fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Rational::is_zero)
    }

    /// Rational value if the element lies in Q.
    pub fn as_rational(&self) -> Option<&Rational> {
        if self.coeffs[1..].iter().all(Rational::is_zero) {
            Some(&self.coeffs[0])
        } else {
            None
        }
    }

    fn inverse(&self) -> Option<Algebraic> {
        if self.is_zero() {
            return None;
        }
        let (g, s) = self.poly().half_ext_gcd(self.field.modulus());
        // A non-trivial gcd means a zero divisor in a non-field quotient.
        if g.degree() != Some(0) {
            return None;
        }
        Some(Algebraic::from_poly(&s, self.field.clone()))
    }
}

/// A scalar over Q or over a number field.
///
/// Arithmetic between a rational and an algebraic value embeds the
/// rational; arithmetic between elements of two different number fields
/// panics. Matrices guard against the latter by checking their descriptor.
#[derive(Clone, PartialEq, Eq, Hash)]
pub enum Scalar {
    Rational(Rational),
    Algebraic(Algebraic),
}

impl Scalar {
    pub fn field(&self) -> Field {
        match self {
            Scalar::Rational(_) => Field::Rational,
            Scalar::Algebraic(a) => Field::Number(a.field.clone()),
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            Scalar::Rational(r) => r.is_zero(),
            Scalar::Algebraic(a) => a.is_zero(),
        }
    }

    pub fn is_one(&self) -> bool {
        match self {
            Scalar::Rational(r) => r.is_one(),
            Scalar::Algebraic(a) => a.as_rational().is_some_and(Rational::is_one),
        }
    }

    /// Rational value if the scalar lies in Q.
    pub fn as_rational(&self) -> Option<&Rational> {
        match self {
            Scalar::Rational(r) => Some(r),
            Scalar::Algebraic(a) => a.as_rational(),
        }
    }

    pub fn inv(&self) -> Option<Scalar> {
        match self {
            Scalar::Rational(r) => r.recip().map(Scalar::Rational),
            Scalar::Algebraic(a) => a.inverse().map(Scalar::Algebraic),
        }
    }

    pub fn pow(&self, exp: u32) -> Scalar {
        let mut acc = self.field().one();
        for _ in 0..exp {
            acc = &acc * self;
        }
        acc
    }

    fn lift(r: &Rational, like: &Algebraic) -> Algebraic {
        let mut c = vec![Rational::zero(); like.coeffs.len()];
        c[0] = r.clone();
        Algebraic::from_reduced(c, like.field.clone())
    }
}

impl From<Rational> for Scalar {
    fn from(r: Rational) -> Self {
        Scalar::Rational(r)
    }
}

impl<'a> Add<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn add(self, rhs: &Scalar) -> Scalar {
        match (self, rhs) {
            (Scalar::Rational(a), Scalar::Rational(b)) => Scalar::Rational(a + b),
            (Scalar::Algebraic(a), Scalar::Algebraic(b)) => {
                a.check(b);
                let coeffs = a.coeffs.iter().zip(&b.coeffs).map(|(x, y)| x + y).collect();
                Scalar::Algebraic(Algebraic::from_reduced(coeffs, a.field.clone()))
            }
            (Scalar::Rational(r), Scalar::Algebraic(a)) | (Scalar::Algebraic(a), Scalar::Rational(r)) => {
                &Scalar::Algebraic(Scalar::lift(r, a)) + &Scalar::Algebraic(a.clone())
            }
        }
    }
}

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        match self {
            Scalar::Rational(r) => Scalar::Rational(-r),
            Scalar::Algebraic(a) => Scalar::Algebraic(Algebraic::from_reduced(
                a.coeffs.iter().map(|c| -c).collect(),
                a.field.clone(),
            )),
        }
    }
}

impl<'a> Sub<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn sub(self, rhs: &Scalar) -> Scalar {
        self + &(-rhs)
    }
}

impl<'a> Mul<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn mul(self, rhs: &Scalar) -> Scalar {
        match (self, rhs) {
            (Scalar::Rational(a), Scalar::Rational(b)) => Scalar::Rational(a * b),
            (Scalar::Algebraic(a), Scalar::Algebraic(b)) => {
                a.check(b);
                Scalar::Algebraic(Algebraic::from_poly(&a.poly().mul(&b.poly()), a.field.clone()))
            }
            (Scalar::Rational(r), Scalar::Algebraic(a)) | (Scalar::Algebraic(a), Scalar::Rational(r)) => {
                Scalar::Algebraic(Algebraic::from_reduced(
                    a.coeffs.iter().map(|c| c * r).collect(),
                    a.field.clone(),
                ))
            }
        }
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Rational(r) => write!(f, "{r}"),
            Scalar::Algebraic(a) => match a.as_rational() {
                Some(r) => write!(f, "{r}"),
                None => write!(f, "{}", Poly::new(a.coeffs.clone())),
            },
        }
    }
}

impl fmt::Debug for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactla::cyclotomic_field;
    use proptest::prelude::*;

    proptest! {
        #[test]
        fn nonzero_elements_are_invertible(
            d in prop::sample::select(vec![3u64, 4, 5, 7, 8, 12]),
            coeffs in prop::collection::vec(-20i64..20, 1..8),
        ) {
            let f = cyclotomic_field(d).unwrap();
            let a = f.element(coeffs.iter().map(|&c| Rational::from_integer(c)).collect());
            if a.is_zero() {
                prop_assert!(a.inv().is_none());
            } else {
                let inv = a.inv().unwrap();
                prop_assert!((&a * &inv).is_one());
            }
        }
    }

    #[test]
    fn rational_inverse() {
        let a = Scalar::Rational(Rational::new(-3, 7));
        assert!((&a * &a.inv().unwrap()).is_one());
        assert!(Scalar::Rational(Rational::zero()).inv().is_none());
    }

    #[test]
    fn zero_divisor_has_no_inverse() {
        // Q[x]/(x^2 - 1) is not a field; x - 1 is a zero divisor.
        let f = Field::number_field(Poly::from_ints(&[-1, 0, 1])).unwrap();
        let a = f.element(vec![Rational::from_integer(-1), Rational::one()]);
        assert!(a.inv().is_none());
    }
}
