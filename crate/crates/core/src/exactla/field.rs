//! Coefficient fields: Q and number fields Q[x]/(f).

use std::fmt;
use std::sync::Arc;

use super::poly::Poly;
use super::scalar::{Algebraic, Scalar};
use super::Rational;
use crate::{Error, Result};

/// A number field descriptor Q[x]/(f) with `f` monic and squarefree.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct NumberField {
    modulus: Poly,
    cyclotomic_order: Option<u64>,
}

impl NumberField {
    pub fn modulus(&self) -> &Poly {
        &self.modulus
    }

    pub fn degree(&self) -> usize {
        self.modulus.degree().unwrap()
    }

    /// `Some(d)` when this is the built-in descriptor Q(ζ_d).
    pub fn cyclotomic_order(&self) -> Option<u64> {
        self.cyclotomic_order
    }

    pub(crate) fn reduce(&self, p: &Poly) -> Vec<Rational> {
        let (_, r) = p.div_rem(&self.modulus);
        let mut c = r.0;
        c.resize(self.degree(), Rational::zero());
        c
    }
}

/// Ground or coefficient field of a computation.
#[derive(Clone)]
pub enum Field {
    Rational,
    Number(Arc<NumberField>),
}

impl PartialEq for Field {
    fn eq(&self, other: &Self) -> bool {
        match (self, other) {
            (Field::Rational, Field::Rational) => true,
            (Field::Number(a), Field::Number(b)) => Arc::ptr_eq(a, b) || a == b,
            _ => false,
        }
    }
}

impl Eq for Field {}

impl fmt::Debug for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Field::Rational => write!(f, "Q"),
            Field::Number(nf) => match nf.cyclotomic_order {
                Some(d) => write!(f, "Q(zeta_{d})"),
                None => write!(f, "Q[x]/({})", nf.modulus),
            },
        }
    }
}

impl Field {
    /// Q[x]/(f) for a user-supplied modulus. Squarefreeness is checked;
    /// irreducibility is not. A degree-one quotient is Q itself.
    pub fn number_field(modulus: Poly) -> Result<Field> {
        Self::build(modulus, None)
    }

    fn build(modulus: Poly, cyclotomic_order: Option<u64>) -> Result<Field> {
        let deg = modulus
            .degree()
            .ok_or_else(|| Error::Domain("zero modulus".into()))?;
        if deg == 0 {
            return Err(Error::Domain("constant modulus".into()));
        }
        if !modulus.is_monic() {
            return Err(Error::Validation(format!("modulus {modulus} is not monic")));
        }
        if deg == 1 {
            return Ok(Field::Rational);
        }
        let g = modulus.gcd(&modulus.derivative());
        if g.degree() != Some(0) {
            return Err(Error::Validation(format!("modulus {modulus} is not squarefree")));
        }
        Ok(Field::Number(Arc::new(NumberField { modulus, cyclotomic_order })))
    }

    /// Dimension as a Q-vector space.
    pub fn degree(&self) -> usize {
        match self {
            Field::Rational => 1,
            Field::Number(nf) => nf.degree(),
        }
    }

    /// `Some(d)` if the field is Q(ζ_d); Q reports `Some(1)`.
    pub fn cyclotomic_order(&self) -> Option<u64> {
        match self {
            Field::Rational => Some(1),
            Field::Number(nf) => nf.cyclotomic_order,
        }
    }

    pub fn zero(&self) -> Scalar {
        self.from_rational(Rational::zero())
    }

    pub fn one(&self) -> Scalar {
        self.from_rational(Rational::one())
    }

    pub fn from_rational(&self, r: Rational) -> Scalar {
        match self {
            Field::Rational => Scalar::Rational(r),
            Field::Number(nf) => {
                let mut c = vec![Rational::zero(); nf.degree()];
                c[0] = r;
                Scalar::Algebraic(Algebraic::from_reduced(c, nf.clone()))
            }
        }
    }

    pub fn from_int(&self, n: i64) -> Scalar {
        self.from_rational(Rational::from_integer(n))
    }

    /// The class of `x` in Q[x]/(f); for Q, the root 1 of `x - 1`.
    pub fn generator(&self) -> Scalar {
        match self {
            Field::Rational => Scalar::Rational(Rational::one()),
            Field::Number(nf) => Scalar::Algebraic(Algebraic::from_poly(
                &Poly::from_ints(&[0, 1]),
                nf.clone(),
            )),
        }
    }

    /// Element with the given power-basis coordinates (reduced mod f).
    pub fn element(&self, coeffs: Vec<Rational>) -> Scalar {
        match self {
            Field::Rational => {
                Scalar::Rational(Poly::new(coeffs).eval(&Rational::one()))
            }
            Field::Number(nf) => Scalar::Algebraic(Algebraic::from_poly(&Poly::new(coeffs), nf.clone())),
        }
    }
}

/// The d-th cyclotomic polynomial, by dividing `x^d - 1` by `Φ_e` for
/// every proper divisor `e` of `d`.
pub fn cyclotomic_polynomial(d: u64) -> Result<Poly> {
    if d == 0 {
        return Err(Error::Domain("cyclotomic order must be positive".into()));
    }
    let mut p = Poly::x_pow_minus_one(d as usize);
    for e in 1..d {
        if d.is_multiple_of(e) {
            let (q, r) = p.div_rem(&cyclotomic_polynomial(e)?);
            debug_assert!(r.is_zero());
            p = q;
        }
    }
    Ok(p)
}

/// Q(ζ_d) = Q[x]/(Φ_d). For d = 1, 2 this is Q.
pub fn cyclotomic_field(d: u64) -> Result<Field> {
    Field::build(cyclotomic_polynomial(d)?, Some(d))
}

/// Q(ζ_d) together with the primitive root ζ_d (which is ±1 when the
/// field collapses to Q).
pub fn cyclotomic_root(d: u64) -> Result<(Field, Scalar)> {
    let field = cyclotomic_field(d)?;
    let root = match d {
        1 => field.one(),
        2 => field.from_int(-1),
        _ => field.generator(),
    };
    Ok((field, root))
}
