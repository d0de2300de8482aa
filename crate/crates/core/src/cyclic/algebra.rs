use serde::{Deserialize, Serialize};

use crate::exactla::{cyclotomic_field, solve, to_dense, Field, Matrix, Poly, Rational, Scalar, SparseVec};
use crate::grp::FiniteGroup;
use crate::{Error, Result};

/// A finite-dimensional associative unital algebra over a field, given by
/// structure constants `e_i e_j = Σ_k c[i][j][k] e_k`.
#[derive(Clone, Debug)]
pub struct AlgebraPresentation {
    field: Field,
    labels: Vec<String>,
    mul: Vec<Vec<SparseVec>>,
    unit: SparseVec,
    group: Option<FiniteGroup>,
}

impl AlgebraPresentation {
    /// Validates associativity and the unit axioms.
    pub fn new(field: Field, labels: Vec<String>, mul: Vec<Vec<SparseVec>>, unit: SparseVec) -> Result<Self> {
        let a = AlgebraPresentation { field, labels, mul, unit, group: None };
        a.validate()?;
        Ok(a)
    }

    /// The group algebra `kG`, basis the group elements.
    pub fn group_algebra(group: &FiniteGroup, field: Field) -> Result<Self> {
        let one = field.one();
        let n = group.order();
        let mul = (0..n)
            .map(|a| (0..n).map(|b| vec![(group.mul(a, b), one.clone())]).collect())
            .collect();
        let labels = (0..n).map(|g| format!("g{g}")).collect();
        let a = AlgebraPresentation { field, labels, mul, unit: vec![(0, one)], group: Some(group.clone()) };
        a.validate()?;
        Ok(a)
    }

    /// A number field `F` as an algebra over `Q`, basis `1, x, …, x^{deg-1}`.
    pub fn number_field(f: &Field) -> Result<Self> {
        let deg = f.degree();
        let reduce = |p: &Poly| -> Vec<Rational> {
            match f {
                Field::Rational => vec![p.eval(&Rational::one())],
                Field::Number(nf) => nf.reduce(p),
            }
        };
        let mul = (0..deg)
            .map(|i| {
                (0..deg)
                    .map(|j| {
                        let mut c = vec![Rational::zero(); i + j + 1];
                        c[i + j] = Rational::one();
                        reduce(&Poly::new(c))
                            .into_iter()
                            .enumerate()
                            .filter(|(_, r)| !r.is_zero())
                            .map(|(k, r)| (k, Scalar::Rational(r)))
                            .collect()
                    })
                    .collect()
            })
            .collect();
        let labels = (0..deg).map(|i| if i == 0 { "1".to_string() } else { format!("x^{i}") }).collect();
        Self::new(Field::Rational, labels, mul, vec![(0, Scalar::Rational(Rational::one()))])
    }

    /// The ground field as a one-dimensional algebra over itself.
    pub fn ground(field: Field) -> Self {
        let one = field.one();
        AlgebraPresentation {
            labels: vec!["1".into()],
            mul: vec![vec![vec![(0, one.clone())]]],
            unit: vec![(0, one)],
            field,
            group: None,
        }
    }

    /// `A × B`.
    pub fn product(&self, other: &Self) -> Result<Self> {
        if self.field != other.field {
            return Err(Error::DescriptorMismatch { left: self.field.to_string(), right: other.field.to_string() });
        }
        let (da, db) = (self.dim(), other.dim());
        let shift = |v: &SparseVec| v.iter().map(|(k, x)| (k + da, x.clone())).collect::<SparseVec>();
        let mut mul = vec![vec![Vec::new(); da + db]; da + db];
        for (dst, src) in mul.iter_mut().zip(&self.mul) {
            dst[..da].clone_from_slice(src);
        }
        for (dst, src) in mul[da..].iter_mut().zip(&other.mul) {
            for (d, s) in dst[da..].iter_mut().zip(src) {
                *d = shift(s);
            }
        }
        let mut unit = self.unit.clone();
        unit.extend(shift(&other.unit));
        let labels = self
            .labels
            .iter()
            .map(|l| format!("({l},0)"))
            .chain(other.labels.iter().map(|l| format!("(0,{l})")))
            .collect();
        Self::new(self.field.clone(), labels, mul, unit)
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn dim(&self) -> usize {
        self.labels.len()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    /// Short human-readable description used in reports.
    pub fn describe(&self) -> String {
        match &self.group {
            Some(g) => format!("{}[G], |G| = {}", self.field, g.order()),
            None => format!("{}-algebra of dimension {}", self.field, self.dim()),
        }
    }

    /// `e_i e_j`.
    pub fn mul_basis(&self, i: usize, j: usize) -> &SparseVec {
        &self.mul[i][j]
    }

    pub fn unit(&self) -> &SparseVec {
        &self.unit
    }

    /// The group when this is a group algebra with its standard basis.
    pub fn group(&self) -> Option<&FiniteGroup> {
        self.group.as_ref()
    }

    /// Is the unit the first basis vector?
    pub fn unit_is_first(&self) -> bool {
        self.unit.len() == 1 && self.unit[0].0 == 0 && self.unit[0].1.is_one()
    }

    pub fn mul_vec(&self, x: &SparseVec, y: &SparseVec) -> SparseVec {
        let mut acc: Vec<Scalar> = vec![self.field.zero(); self.dim()];
        for (i, a) in x {
            for (j, b) in y {
                let ab = a * b;
                for (k, c) in &self.mul[*i][*j] {
                    acc[*k] = &acc[*k] + &(&ab * c);
                }
            }
        }
        crate::exactla::to_sparse(&acc)
    }

    fn basis_vec(&self, i: usize) -> SparseVec {
        vec![(i, self.field.one())]
    }

    pub fn validate(&self) -> Result<()> {
        let d = self.dim();
        if self.mul.len() != d || self.mul.iter().any(|r| r.len() != d) {
            return Err(Error::Validation("structure constants have the wrong shape".into()));
        }
        for row in &self.mul {
            for v in row {
                for (k, x) in v {
                    if *k >= d {
                        return Err(Error::Validation("structure constant index out of range".into()));
                    }
                    if x.field() != self.field {
                        return Err(Error::DescriptorMismatch { left: self.field.to_string(), right: x.field().to_string() });
                    }
                }
            }
        }
        for i in 0..d {
            let e = self.basis_vec(i);
            if norm(&self.mul_vec(&self.unit, &e)) != norm(&e) || norm(&self.mul_vec(&e, &self.unit)) != norm(&e) {
                return Err(Error::Validation(format!("unit axiom fails on basis element {i}")));
            }
            for j in 0..d {
                let ij = &self.mul[i][j];
                for k in 0..d {
                    let left = self.mul_vec(ij, &self.basis_vec(k));
                    let right = self.mul_vec(&self.basis_vec(i), &self.mul[j][k]);
                    if norm(&left) != norm(&right) {
                        return Err(Error::Validation(format!("not associative on ({i}, {j}, {k})")));
                    }
                }
            }
        }
        Ok(())
    }

    /// Same algebra in a basis whose first vector is the unit.
    pub fn with_unit_first(&self) -> Result<Self> {
        if self.unit_is_first() {
            return Ok(self.clone());
        }
        let d = self.dim();
        let p = self
            .unit
            .iter()
            .find(|(_, x)| !x.is_zero())
            .map(|(i, _)| *i)
            .ok_or_else(|| Error::Validation("zero unit".into()))?;
        // new basis: unit, then e_i for i != p
        let mut old: Vec<SparseVec> = vec![self.unit.clone()];
        old.extend((0..d).filter(|&i| i != p).map(|i| self.basis_vec(i)));
        let change = Matrix::from_columns(self.field.clone(), d, &old)?;
        let coords = |v: &SparseVec| -> Result<SparseVec> {
            let sol = solve(&change, v)?.ok_or_else(|| Error::Validation("basis change failed".into()))?;
            Ok(crate::exactla::to_sparse(&sol))
        };
        let mut mul = vec![vec![Vec::new(); d]; d];
        for i in 0..d {
            for j in 0..d {
                mul[i][j] = coords(&self.mul_vec(&old[i], &old[j]))?;
            }
        }
        let mut labels = vec!["1".to_string()];
        labels.extend((0..d).filter(|&i| i != p).map(|i| self.labels[i].clone()));
        Self::new(self.field.clone(), labels, mul, vec![(0, self.field.one())])
    }

    pub fn to_json(&self) -> Result<AlgebraJson> {
        let field = FieldJson::from_field(&self.field)?;
        let sv = |v: &SparseVec| v.iter().map(|(k, x)| (*k, ScalarJson::from_scalar(x))).collect::<Vec<_>>();
        Ok(AlgebraJson {
            field,
            dim: self.dim(),
            labels: Some(self.labels.clone()),
            unit: to_dense(&self.unit, self.dim(), &self.field).iter().map(ScalarJson::from_scalar).collect(),
            mul: self.mul.iter().map(|row| row.iter().map(sv).collect()).collect(),
        })
    }

    pub fn from_json(j: &AlgebraJson) -> Result<Self> {
        let field = j.field.to_field()?;
        if j.unit.len() != j.dim || j.mul.len() != j.dim || j.mul.iter().any(|r| r.len() != j.dim) {
            return Err(Error::Parse(format!("algebra of dimension {} has inconsistent arrays", j.dim)));
        }
        let sv = |v: &Vec<(usize, ScalarJson)>| -> SparseVec {
            v.iter().map(|(k, x)| (*k, x.to_scalar(&field))).filter(|(_, x)| !x.is_zero()).collect()
        };
        let unit = j
            .unit
            .iter()
            .enumerate()
            .map(|(k, x)| (k, x.to_scalar(&field)))
            .filter(|(_, x)| !x.is_zero())
            .collect();
        let mul = j.mul.iter().map(|row| row.iter().map(&sv).collect()).collect();
        let labels = j.labels.clone().unwrap_or_else(|| (0..j.dim).map(|i| format!("e{i}")).collect());
        if labels.len() != j.dim {
            return Err(Error::Parse("label count differs from dimension".into()));
        }
        Self::new(field, labels, mul, unit)
    }
}

fn norm(v: &SparseVec) -> SparseVec {
    let mut v: SparseVec = v.iter().filter(|(_, x)| !x.is_zero()).cloned().collect();
    v.sort_by_key(|(i, _)| *i);
    v
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct AlgebraJson {
    pub field: FieldJson,
    pub dim: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub labels: Option<Vec<String>>,
    pub unit: Vec<ScalarJson>,
    /// `mul[i][j]` is `e_i e_j` as `[index, value]` pairs.
    pub mul: Vec<Vec<Vec<(usize, ScalarJson)>>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind")]
pub enum FieldJson {
    #[serde(rename = "Q")]
    Rational,
    #[serde(rename = "cyclotomic")]
    Cyclotomic { d: u64 },
}

impl FieldJson {
    pub fn to_field(&self) -> Result<Field> {
        match self {
            FieldJson::Rational => Ok(Field::Rational),
            FieldJson::Cyclotomic { d } => cyclotomic_field(*d),
        }
    }

    pub fn from_field(f: &Field) -> Result<Self> {
        match (f, f.cyclotomic_order()) {
            (Field::Rational, _) => Ok(FieldJson::Rational),
            (_, Some(d)) => Ok(FieldJson::Cyclotomic { d }),
            _ => Err(Error::Capability(format!("{f} has no JSON descriptor"))),
        }
    }
}

/// A rational number, or power-basis coordinates in a number field.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum ScalarJson {
    Rational(Rational),
    Coords(Vec<Rational>),
}

impl ScalarJson {
    pub fn from_scalar(s: &Scalar) -> Self {
        match s {
            Scalar::Rational(r) => ScalarJson::Rational(r.clone()),
            Scalar::Algebraic(a) => ScalarJson::Coords(a.coeffs().to_vec()),
        }
    }

    pub fn to_scalar(&self, field: &Field) -> Scalar {
        match self {
            ScalarJson::Rational(r) => field.from_rational(r.clone()),
            ScalarJson::Coords(c) => field.element(c.clone()),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::grp::GroupDescriptor;

    #[test]
    fn small_group_algebras() {
        let q1 = AlgebraPresentation::group_algebra(&FiniteGroup::cyclic(1).unwrap(), Field::Rational).unwrap();
        assert_eq!(q1.dim(), 1);
        let c2 = AlgebraPresentation::group_algebra(&FiniteGroup::cyclic(2).unwrap(), Field::Rational).unwrap();
        assert_eq!(c2.mul_basis(1, 1), &vec![(0, Scalar::from(Rational::one()))]);
        let s3 = FiniteGroup::build(&GroupDescriptor::Perm { degree: 3, gens: vec![vec![1, 0, 2], vec![1, 2, 0]] })
            .unwrap();
        let a = AlgebraPresentation::group_algebra(&s3, Field::Rational).unwrap();
        assert_eq!(a.dim(), 6);
        a.validate().unwrap();
    }

    #[test]
    fn cyclotomic_as_q_algebra() {
        let a = AlgebraPresentation::number_field(&cyclotomic_field(3).unwrap()).unwrap();
        assert_eq!(a.dim(), 2);
        // x * x = -1 - x
        let xx = a.mul_basis(1, 1);
        assert_eq!(xx, &vec![(0, Scalar::from(Rational::from(-1))), (1, Scalar::from(Rational::from(-1)))]);
        assert_eq!(AlgebraPresentation::number_field(&Field::Rational).unwrap().dim(), 1);
    }

    #[test]
    fn non_associative_rejected() {
        let one = Scalar::from(Rational::one());
        let e = |k: usize| vec![(k, one.clone())];
        // basis 1, x, y with xx = y, xy = 0, yx = 1, yy = 0: (xx)x = 1 but x(xx) = 0
        let mul = vec![
            vec![e(0), e(1), e(2)],
            vec![e(1), e(2), vec![]],
            vec![e(2), e(0), vec![]],
        ];
        let labels = vec!["1".into(), "x".into(), "y".into()];
        let err = AlgebraPresentation::new(Field::Rational, labels, mul, e(0)).unwrap_err();
        assert!(err.to_string().contains("associative"));
    }

    #[test]
    fn unit_moved_first() {
        let q = AlgebraPresentation::ground(Field::Rational);
        let p = q.product(&q).unwrap();
        assert!(!p.unit_is_first());
        let r = p.with_unit_first().unwrap();
        assert!(r.unit_is_first());
        r.validate().unwrap();
    }

    #[test]
    fn json_round_trip() {
        let a = AlgebraPresentation::number_field(&cyclotomic_field(4).unwrap()).unwrap();
        let j = a.to_json().unwrap();
        let text = serde_json::to_string(&j).unwrap();
        let b = AlgebraPresentation::from_json(&serde_json::from_str(&text).unwrap()).unwrap();
        assert_eq!(b.to_json().unwrap(), j);
        let bad = r#"{"field":{"kind":"Q"},"dim":1,"unit":[1],"mul":[[[[0,2]]]]}"#;
        let parsed: AlgebraJson = serde_json::from_str(bad).unwrap();
        assert!(AlgebraPresentation::from_json(&parsed).is_err());
    }
}
