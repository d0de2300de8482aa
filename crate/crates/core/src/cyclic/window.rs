//! Truncated cyclic modules of an algebra.
//!
//! Sign conventions, with `τ(a_0, …, a_q) = (a_q, a_0, …, a_{q-1})`:
//!
//! | operator | definition |
//! |----------|------------|
//! | `d_i`, `i < q` | `(a_0, …, a_i a_{i+1}, …, a_q)` |
//! | `d_q` | `(a_q a_0, a_1, …, a_{q-1})` |
//! | `s_i` | `(a_0, …, a_i, 1, a_{i+1}, …, a_q)` |
//! | `t` | `(-1)^q τ` |
//! | `b` | `Σ_{i=0}^{q} (-1)^i d_i` |
//! | `b'` | `Σ_{i=0}^{q-1} (-1)^i d_i` |
//! | `B` | `Σ_{i=0}^{q} (-1)^{qi} (1, a_i, …, a_q, a_0, …, a_{i-1})` |
//!
//! The normalized module is `A ⊗ Ā^{⊗q}` with `Ā = A / k·1`; the unit is
//! always basis vector 0, so `Ā` has basis `1..dim A`.

use std::sync::Arc;

use super::algebra::AlgebraPresentation;
use crate::exactla::{Field, Matrix, Scalar};
use crate::{Error, Result};

/// Maximum number of basis tuples allowed in one degree.
#[derive(Clone, Copy, Debug, PartialEq, Eq, serde::Serialize, serde::Deserialize)]
pub struct Budget(pub usize);

impl Default for Budget {
    fn default() -> Self {
        Budget(300_000)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Normalization {
    Normalized,
    Unnormalized,
}

/// Chain modules `C_0..C_N` of the cyclic module of an algebra, optionally
/// restricted to the tuples `(g_0, …, g_q)` of a group algebra whose product
/// lies in one conjugacy class.
#[derive(Clone, Debug)]
pub struct CyclicWindow {
    algebra: Arc<AlgebraPresentation>,
    degree: usize,
    normalization: Normalization,
    class: Option<usize>,
    bases: Vec<Vec<u32>>,
    local: Vec<Option<Vec<u32>>>,
}

type Term = (Vec<usize>, Scalar);

impl CyclicWindow {
    pub fn new(algebra: Arc<AlgebraPresentation>, degree: usize, normalization: Normalization, budget: Budget) -> Result<Self> {
        Self::build(algebra, degree, normalization, None, budget)
    }

    /// The summand of a group algebra's window graded by conjugacy class
    /// `class` of the product of a tuple.
    pub fn block(
        algebra: Arc<AlgebraPresentation>,
        degree: usize,
        normalization: Normalization,
        class: usize,
        budget: Budget,
    ) -> Result<Self> {
        if algebra.group().is_none() {
            return Err(Error::Capability("conjugacy grading needs a group algebra".into()));
        }
        Self::build(algebra, degree, normalization, Some(class), budget)
    }

    fn build(
        algebra: Arc<AlgebraPresentation>,
        degree: usize,
        normalization: Normalization,
        class: Option<usize>,
        budget: Budget,
    ) -> Result<Self> {
        if !algebra.unit_is_first() {
            return Err(Error::Validation("the unit must be basis vector 0; use with_unit_first".into()));
        }
        let d = algebra.dim();
        for q in 0..=degree {
            let size = full_dim(d, q, normalization);
            if size.is_none_or(|s| s > budget.0) {
                return Err(Error::Capability(format!(
                    "degree {q} has {} basis tuples, above the budget of {}",
                    size.map_or("too many".to_string(), |s| s.to_string()),
                    budget.0
                )));
            }
        }
        let mut bases = Vec::with_capacity(degree + 1);
        let mut local = Vec::with_capacity(degree + 1);
        for q in 0..=degree {
            let size = full_dim(d, q, normalization).unwrap();
            match class {
                None => {
                    bases.push((0..size as u32).collect());
                    local.push(None);
                }
                Some(c) => {
                    let g = algebra.group().unwrap();
                    let lo = if normalization == Normalization::Normalized { 1 } else { 0 };
                    let mut idx = Vec::new();
                    let mut tail = vec![lo; q];
                    // a0 is forced by the class of a0·a1⋯aq
                    let mut more = size > 0;
                    while more {
                        let p = tail.iter().fold(0, |acc, &x| g.mul(acc, x));
                        let pinv = g.inv(p);
                        for &x in &g.classes()[c] {
                            let mut t = Vec::with_capacity(q + 1);
                            t.push(g.mul(x, pinv));
                            t.extend_from_slice(&tail);
                            idx.push(encode(&t, d, normalization) as u32);
                        }
                        more = advance(&mut tail, lo, d);
                    }
                    idx.sort_unstable();
                    let mut map = vec![u32::MAX; size];
                    for (i, &x) in idx.iter().enumerate() {
                        map[x as usize] = i as u32;
                    }
                    bases.push(idx);
                    local.push(Some(map));
                }
            }
        }
        Ok(CyclicWindow { algebra, degree, normalization, class, bases, local })
    }

    pub fn algebra(&self) -> &Arc<AlgebraPresentation> {
        &self.algebra
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn normalization(&self) -> Normalization {
        self.normalization
    }

    pub fn class(&self) -> Option<usize> {
        self.class
    }

    pub fn field(&self) -> &Field {
        self.algebra.field()
    }

    pub fn dim(&self, q: usize) -> usize {
        self.bases[q].len()
    }

    /// The basis tuple with local index `i` in degree `q`.
    pub fn tuple(&self, q: usize, i: usize) -> Vec<usize> {
        decode(self.bases[q][i] as usize, q, self.algebra.dim(), self.normalization)
    }

    /// Conjugacy class of the product of a basis tuple (group algebras).
    pub fn grade(&self, q: usize, i: usize) -> Option<usize> {
        let g = self.algebra.group()?;
        Some(g.class_of(g.product(&self.tuple(q, i))))
    }

    fn locate(&self, q: usize, t: &[usize]) -> usize {
        let global = encode(t, self.algebra.dim(), self.normalization);
        match &self.local[q] {
            None => global,
            Some(map) => {
                let l = map[global];
                assert!(l != u32::MAX, "operator left the conjugacy class block");
                l as usize
            }
        }
    }

    fn check_degree(&self, q: usize) -> Result<()> {
        if q > self.degree {
            return Err(Error::Domain(format!("degree {q} outside the window 0..={}", self.degree)));
        }
        Ok(())
    }

    fn need(&self, n: Normalization, what: &str) -> Result<()> {
        if self.normalization != n {
            return Err(Error::Capability(format!("{what} is only built on the {n:?} window")));
        }
        Ok(())
    }

    fn assemble(&self, src: usize, dst: usize, op: impl Fn(&[usize], &mut Vec<Term>)) -> Result<Matrix> {
        self.check_degree(src)?;
        self.check_degree(dst)?;
        let mut triplets = Vec::new();
        let mut terms = Vec::new();
        for col in 0..self.dim(src) {
            let t = self.tuple(src, col);
            terms.clear();
            op(&t, &mut terms);
            for (u, c) in terms.drain(..) {
                triplets.push((self.locate(dst, &u), col, c));
            }
        }
        Matrix::from_triplets(self.field().clone(), self.dim(dst), self.dim(src), triplets)
    }

    /// Appends `coef` times the face merging `t[i]` and `t[j]`, where
    /// `j = i + 1` or `(i, j) = (q, 0)`.
    fn merge(&self, t: &[usize], i: usize, j: usize, coef: &Scalar, out: &mut Vec<Term>) {
        let q = t.len() - 1;
        for (k, c) in self.algebra.mul_basis(t[i], t[j]) {
            let mut u = Vec::with_capacity(q);
            if j == 0 {
                // d_q: (a_q a_0, a_1, …, a_{q-1})
                u.push(*k);
                u.extend_from_slice(&t[1..q]);
            } else {
                if *k == 0 && i >= 1 && self.normalization == Normalization::Normalized {
                    continue;
                }
                u.extend_from_slice(&t[..i]);
                u.push(*k);
                u.extend_from_slice(&t[j + 1..]);
            }
            out.push((u, coef * c));
        }
    }

    fn face_terms(&self, t: &[usize], i: usize, coef: &Scalar, out: &mut Vec<Term>) {
        let q = t.len() - 1;
        if i < q {
            self.merge(t, i, i + 1, coef, out);
        } else {
            self.merge(t, q, 0, coef, out);
        }
    }

    fn sign(&self, odd: bool) -> Scalar {
        if odd {
            self.field().from_int(-1)
        } else {
            self.field().one()
        }
    }

    /// Hochschild boundary `b: C_q -> C_{q-1}`.
    pub fn b(&self, q: usize) -> Result<Matrix> {
        if q == 0 {
            return Ok(Matrix::zeros(self.field().clone(), 0, self.dim(0)));
        }
        self.assemble(q, q - 1, |t, out| {
            for i in 0..=q {
                self.face_terms(t, i, &self.sign(i % 2 == 1), out);
            }
        })
    }

    /// `b' = Σ_{i<q} (-1)^i d_i`.
    pub fn b_prime(&self, q: usize) -> Result<Matrix> {
        if q == 0 {
            return Ok(Matrix::zeros(self.field().clone(), 0, self.dim(0)));
        }
        self.assemble(q, q - 1, |t, out| {
            for i in 0..q {
                self.face_terms(t, i, &self.sign(i % 2 == 1), out);
            }
        })
    }

    /// Connes' operator `B: C_q -> C_{q+1}` on the normalized window.
    pub fn connes_b(&self, q: usize) -> Result<Matrix> {
        self.need(Normalization::Normalized, "B")?;
        self.assemble(q, q + 1, |t, out| {
            if t[0] == 0 {
                return;
            }
            for i in 0..=q {
                let mut u = Vec::with_capacity(q + 2);
                u.push(0);
                u.extend_from_slice(&t[i..]);
                u.extend_from_slice(&t[..i]);
                out.push((u, self.sign((q * i) % 2 == 1)));
            }
        })
    }

    /// Face `d_i: C_q -> C_{q-1}`.
    pub fn face(&self, q: usize, i: usize) -> Result<Matrix> {
        self.need(Normalization::Unnormalized, "faces")?;
        if q == 0 || i > q {
            return Err(Error::Domain(format!("no face d_{i} in degree {q}")));
        }
        let one = self.field().one();
        self.assemble(q, q - 1, |t, out| self.face_terms(t, i, &one, out))
    }

    /// Degeneracy `s_i: C_q -> C_{q+1}`.
    pub fn degeneracy(&self, q: usize, i: usize) -> Result<Matrix> {
        self.need(Normalization::Unnormalized, "degeneracies")?;
        if i > q {
            return Err(Error::Domain(format!("no degeneracy s_{i} in degree {q}")));
        }
        let one = self.field().one();
        self.assemble(q, q + 1, |t, out| {
            let mut u = t.to_vec();
            u.insert(i + 1, 0);
            out.push((u, one.clone()));
        })
    }

    /// Cyclic operator `t = (-1)^q τ` on `C_q`.
    pub fn cyclic_t(&self, q: usize) -> Result<Matrix> {
        self.need(Normalization::Unnormalized, "the cyclic operator")?;
        let s = self.sign(q % 2 == 1);
        self.assemble(q, q, |t, out| {
            let mut u = Vec::with_capacity(q + 1);
            u.push(t[q]);
            u.extend_from_slice(&t[..q]);
            out.push((u, s.clone()));
        })
    }
}

impl CyclicWindow {
    /// Checks the structural identities of the window and returns the
    /// names of the failing ones. Normalized windows: `b² = B² = bB + Bb = 0`.
    /// Unnormalized windows: simplicial identities, their cyclic
    /// counterparts for `τ = (-1)^q t`, and `τ^{q+1} = 1`.
    pub fn identity_failures(&self) -> Result<Vec<String>> {
        let mut bad = Vec::new();
        let n = self.degree;
        let field = self.field().clone();
        let zero = |m: &Matrix| m.is_zero();
        match self.normalization {
            Normalization::Normalized => {
                for q in 2..=n {
                    if !zero(&self.b(q - 1)?.mul(&self.b(q)?)?) {
                        bad.push(format!("b b on C_{q}"));
                    }
                }
                for q in 0..n.saturating_sub(1) {
                    if !zero(&self.connes_b(q + 1)?.mul(&self.connes_b(q)?)?) {
                        bad.push(format!("B B on C_{q}"));
                    }
                }
                for q in 0..n {
                    let bb = self.b(q + 1)?.mul(&self.connes_b(q)?)?;
                    let anti = if q == 0 { bb } else { bb.add(&self.connes_b(q - 1)?.mul(&self.b(q)?)?)? };
                    if !zero(&anti) {
                        bad.push(format!("bB + Bb on C_{q}"));
                    }
                }
            }
            Normalization::Unnormalized => {
                let tau = |q: usize| -> Result<Matrix> { Ok(self.cyclic_t(q)?.scale(&self.sign(q % 2 == 1))) };
                let mut check = |ok: bool, what: String| {
                    if !ok {
                        bad.push(what);
                    }
                };
                for q in 0..=n {
                    let t = tau(q)?;
                    let mut p = Matrix::identity(field.clone(), self.dim(q));
                    for _ in 0..=q {
                        p = t.mul(&p)?;
                    }
                    check(p == Matrix::identity(field.clone(), self.dim(q)), format!("tau^{} on C_{q}", q + 1));
                }
                for q in 2..=n {
                    for j in 1..=q {
                        for i in 0..j {
                            let l = self.face(q - 1, i)?.mul(&self.face(q, j)?)?;
                            let r = self.face(q - 1, j - 1)?.mul(&self.face(q, i)?)?;
                            check(l == r, format!("d_{i} d_{j} on C_{q}"));
                        }
                    }
                }
                for q in 0..n.saturating_sub(1) {
                    for j in 0..=q {
                        for i in 0..=j {
                            let l = self.degeneracy(q + 1, i)?.mul(&self.degeneracy(q, j)?)?;
                            let r = self.degeneracy(q + 1, j + 1)?.mul(&self.degeneracy(q, i)?)?;
                            check(l == r, format!("s_{i} s_{j} on C_{q}"));
                        }
                    }
                }
                let id = |q: usize| Matrix::identity(field.clone(), self.dim(q));
                for q in 1..n {
                    for i in 0..=q + 1 {
                        for j in 0..=q {
                            // d_i s_j on C_q
                            let l = self.face(q + 1, i)?.mul(&self.degeneracy(q, j)?)?;
                            let r = if i < j {
                                self.degeneracy(q - 1, j - 1)?.mul(&self.face(q, i)?)?
                            } else if i == j || i == j + 1 {
                                id(q)
                            } else {
                                self.degeneracy(q - 1, j)?.mul(&self.face(q, i - 1)?)?
                            };
                            check(l == r, format!("d_{i} s_{j} on C_{q}"));
                        }
                    }
                }
                for q in 1..=n {
                    let t = tau(q)?;
                    let tl = tau(q - 1)?;
                    check(self.face(q, 0)?.mul(&t)? == self.face(q, q)?, format!("d_0 tau on C_{q}"));
                    for i in 1..=q {
                        let l = self.face(q, i)?.mul(&t)?;
                        let r = tl.mul(&self.face(q, i - 1)?)?;
                        check(l == r, format!("d_{i} tau on C_{q}"));
                    }
                }
                for q in 0..n {
                    let t = tau(q)?;
                    let tu = tau(q + 1)?;
                    let l = self.degeneracy(q, 0)?.mul(&t)?;
                    let r = tu.mul(&tu)?.mul(&self.degeneracy(q, q)?)?;
                    check(l == r, format!("s_0 tau on C_{q}"));
                    for i in 1..=q {
                        let l = self.degeneracy(q, i)?.mul(&t)?;
                        let r = tu.mul(&self.degeneracy(q, i - 1)?)?;
                        check(l == r, format!("s_{i} tau on C_{q}"));
                    }
                }
            }
        }
        Ok(bad)
    }

    /// For an ungraded window of a group algebra, checks that every operator
    /// of the window maps a tuple only to tuples of the same class.
    pub fn grading_preserved(&self) -> Result<bool> {
        if self.algebra.group().is_none() {
            return Err(Error::Capability("grading needs a group algebra".into()));
        }
        let grades: Vec<Vec<usize>> =
            (0..=self.degree).map(|q| (0..self.dim(q)).map(|i| self.grade(q, i).unwrap()).collect()).collect();
        let preserved = |m: &Matrix, src: usize, dst: usize| m.entries().all(|(r, c, _)| grades[dst][r] == grades[src][c]);
        let mut ok = true;
        for q in 0..=self.degree {
            if q > 0 {
                ok &= preserved(&self.b(q)?, q, q - 1);
            }
            match self.normalization {
                Normalization::Normalized if q < self.degree => ok &= preserved(&self.connes_b(q)?, q, q + 1),
                Normalization::Unnormalized => ok &= preserved(&self.cyclic_t(q)?, q, q),
                _ => {}
            }
        }
        Ok(ok)
    }
}

fn full_dim(d: usize, q: usize, n: Normalization) -> Option<usize> {
    match n {
        Normalization::Normalized => d.checked_mul((d - 1).checked_pow(q as u32)?),
        Normalization::Unnormalized => d.checked_pow(q as u32 + 1),
    }
}

fn encode(t: &[usize], d: usize, n: Normalization) -> usize {
    let (lo, radix) = match n {
        Normalization::Normalized => (1, d - 1),
        Normalization::Unnormalized => (0, d),
    };
    let mut idx = 0;
    for &x in t[1..].iter().rev() {
        idx = idx * radix + (x - lo);
    }
    idx * d + t[0]
}

fn decode(mut idx: usize, q: usize, d: usize, n: Normalization) -> Vec<usize> {
    let (lo, radix) = match n {
        Normalization::Normalized => (1, d - 1),
        Normalization::Unnormalized => (0, d),
    };
    let mut t = Vec::with_capacity(q + 1);
    t.push(idx % d);
    idx /= d;
    for _ in 0..q {
        t.push(idx % radix + lo);
        idx /= radix;
    }
    t
}

/// Next tuple in `lo..d` counting order; false after the last one.
fn advance(t: &mut [usize], lo: usize, d: usize) -> bool {
    for x in t.iter_mut() {
        *x += 1;
        if *x < d {
            return true;
        }
        *x = lo;
    }
    false
}
