//! Dense univariate polynomials over Q, little-endian coefficient order.

use super::Rational;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Poly(pub Vec<Rational>);

impl Poly {
    pub fn new(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().is_some_and(Rational::is_zero) {
            coeffs.pop();
        }
        Poly(coeffs)
    }

    pub fn from_ints(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| Rational::from_integer(c)).collect())
    }

    pub fn zero() -> Self {
        Poly(Vec::new())
    }

    pub fn one() -> Self {
        Poly(vec![Rational::one()])
    }

    /// `x^n - 1`
    pub fn x_pow_minus_one(n: usize) -> Self {
        let mut c = vec![Rational::zero(); n + 1];
        c[0] = Rational::from_integer(-1);
        c[n] = Rational::one();
        Poly(c)
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    /// Degree; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.0.len().checked_sub(1)
    }

    pub fn lead(&self) -> Option<&Rational> {
        self.0.last()
    }

    pub fn is_monic(&self) -> bool {
        self.lead().is_some_and(Rational::is_one)
    }

    pub fn add(&self, other: &Poly) -> Poly {
        let n = self.0.len().max(other.0.len());
        let zero = Rational::zero();
        Poly::new(
            (0..n)
                .map(|i| self.0.get(i).unwrap_or(&zero) + other.0.get(i).unwrap_or(&zero))
                .collect(),
        )
    }

    pub fn sub(&self, other: &Poly) -> Poly {
        self.add(&other.scale(&Rational::from_integer(-1)))
    }

    pub fn scale(&self, c: &Rational) -> Poly {
        Poly::new(self.0.iter().map(|a| a * c).collect())
    }

    pub fn mul(&self, other: &Poly) -> Poly {
        if self.is_zero() || other.is_zero() {
            return Poly::zero();
        }
        let mut out = vec![Rational::zero(); self.0.len() + other.0.len() - 1];
        for (i, a) in self.0.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.0.iter().enumerate() {
                out[i + j] += &(a * b);
            }
        }
        Poly::new(out)
    }

    /// Euclidean division; panics on a zero divisor.
    pub fn div_rem(&self, divisor: &Poly) -> (Poly, Poly) {
        let dd = divisor.degree().expect("division by zero polynomial");
        let lead_inv = divisor.lead().unwrap().recip().unwrap();
        let mut rem = self.0.clone();
        let mut quot = vec![Rational::zero(); self.0.len().saturating_sub(dd)];
        while rem.len() > dd {
            let top = rem.len() - 1;
            let c = &rem[top] * &lead_inv;
            if !c.is_zero() {
                let shift = top - dd;
                for (k, b) in divisor.0.iter().enumerate() {
                    let t = &c * b;
                    rem[shift + k] -= &t;
                }
                quot[shift] = c;
            }
            rem.pop();
        }
        (Poly::new(quot), Poly::new(rem))
    }

    pub fn derivative(&self) -> Poly {
        Poly::new(
            self.0
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c * &Rational::from(i))
                .collect(),
        )
    }

    pub fn monic(&self) -> Poly {
        match self.lead() {
            Some(l) => self.scale(&l.recip().unwrap()),
            None => Poly::zero(),
        }
    }

    /// Monic gcd.
    pub fn gcd(&self, other: &Poly) -> Poly {
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let (_, r) = a.div_rem(&b);
            a = b;
            b = r;
        }
        a.monic()
    }

    /// Returns `(g, s)` with `s * self ≡ g (mod m)`, `g` the monic gcd.
    pub fn half_ext_gcd(&self, m: &Poly) -> (Poly, Poly) {
        let (mut r0, mut r1) = (m.clone(), self.div_rem(m).1);
        let (mut s0, mut s1) = (Poly::zero(), Poly::one());
        while !r1.is_zero() {
            let (q, r) = r0.div_rem(&r1);
            let s = s0.sub(&q.mul(&s1));
            r0 = r1;
            r1 = r;
            s0 = s1;
            s1 = s;
        }
        let inv = r0.lead().map(|l| l.recip().unwrap()).unwrap_or_else(Rational::one);
        (r0.scale(&inv), s0.scale(&inv))
    }

    pub fn eval(&self, x: &Rational) -> Rational {
        self.0.iter().rev().fold(Rational::zero(), |acc, c| &(&acc * x) + c)
    }
}

impl std::fmt::Display for Poly {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.0.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let neg = c.signum() < 0;
            let a = c.abs();
            if first {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { '-' } else { '+' })?;
            }
            first = false;
            let coeff = if a.is_one() && i > 0 { String::new() } else { a.to_string() };
            match i {
                0 => write!(f, "{a}")?,
                1 => write!(f, "{coeff}x")?,
                _ => write!(f, "{coeff}x^{i}")?,
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn division_and_gcd() {
        // (x^2 - 1) = (x - 1)(x + 1)
        let p = Poly::from_ints(&[-1, 0, 1]);
        let (q, r) = p.div_rem(&Poly::from_ints(&[-1, 1]));
        assert_eq!(q, Poly::from_ints(&[1, 1]));
        assert!(r.is_zero());
        let g = Poly::from_ints(&[-1, 0, 1]).gcd(&Poly::from_ints(&[1, 2, 1]));
        assert_eq!(g, Poly::from_ints(&[1, 1]));
        assert_eq!(Poly::from_ints(&[1, 0, 1]).to_string(), "x^2 + 1");
    }

    #[test]
    fn inverse_mod() {
        // x * (-x) = -x^2 = 1 mod x^2 + 1
        let m = Poly::from_ints(&[1, 0, 1]);
        let (g, s) = Poly::from_ints(&[0, 1]).half_ext_gcd(&m);
        assert_eq!(g, Poly::one());
        assert_eq!(s, Poly::from_ints(&[0, -1]));
    }
}
