//! The rational group algebra QG and matrices over it.

use super::FiniteGroup;
use crate::exactla::Rational;
use crate::{Error, Result};

/// Element of QG as a coefficient vector indexed by group elements.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct GroupRingElem(pub Vec<Rational>);

impl GroupRingElem {
    pub fn zero(n: usize) -> Self {
        GroupRingElem(vec![Rational::zero(); n])
    }

    pub fn one(n: usize) -> Self {
        Self::basis(n, 0)
    }

    pub fn basis(n: usize, g: usize) -> Self {
        let mut v = vec![Rational::zero(); n];
        v[g] = Rational::one();
        GroupRingElem(v)
    }

    pub fn coeff(&self, g: usize) -> &Rational {
        &self.0[g]
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(Rational::is_zero)
    }

    pub fn add(&self, other: &Self) -> Self {
        GroupRingElem(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    pub fn sub(&self, other: &Self) -> Self {
        GroupRingElem(self.0.iter().zip(&other.0).map(|(a, b)| a - b).collect())
    }

    pub fn scale(&self, c: &Rational) -> Self {
        GroupRingElem(self.0.iter().map(|a| a * c).collect())
    }

    pub fn mul(&self, other: &Self, group: &FiniteGroup) -> Self {
        let mut out = vec![Rational::zero(); group.order()];
        for (a, x) in self.0.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (b, y) in other.0.iter().enumerate() {
                if !y.is_zero() {
                    out[group.mul(a, b)] += &(x * y);
                }
            }
        }
        GroupRingElem(out)
    }

    /// Pushes the element along an injective group homomorphism given by
    /// the images of the source elements.
    pub fn push_forward(&self, embed: &[usize], target_order: usize) -> Self {
        let mut out = vec![Rational::zero(); target_order];
        for (a, x) in self.0.iter().enumerate() {
            out[embed[a]] += x;
        }
        GroupRingElem(out)
    }
}

/// A square matrix with entries in QG.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroupRingMatrix {
    size: usize,
    group_order: usize,
    entries: Vec<GroupRingElem>,
}

impl GroupRingMatrix {
    pub fn new(size: usize, group_order: usize, entries: Vec<GroupRingElem>) -> Result<Self> {
        if entries.len() != size * size {
            return Err(Error::DimensionMismatch { expected: size * size, found: entries.len() });
        }
        if let Some(e) = entries.iter().find(|e| e.0.len() != group_order) {
            return Err(Error::DimensionMismatch { expected: group_order, found: e.0.len() });
        }
        Ok(GroupRingMatrix { size, group_order, entries })
    }

    pub fn scalar(e: GroupRingElem) -> Self {
        GroupRingMatrix { size: 1, group_order: e.0.len(), entries: vec![e] }
    }

    pub fn identity(size: usize, group_order: usize) -> Self {
        let entries = (0..size * size)
            .map(|k| {
                if k / size == k % size {
                    GroupRingElem::one(group_order)
                } else {
                    GroupRingElem::zero(group_order)
                }
            })
            .collect();
        GroupRingMatrix { size, group_order, entries }
    }

    /// Block diagonal sum.
    pub fn direct_sum(&self, other: &Self) -> Result<Self> {
        if self.group_order != other.group_order {
            return Err(Error::DimensionMismatch { expected: self.group_order, found: other.group_order });
        }
        let n = self.size + other.size;
        let mut entries = vec![GroupRingElem::zero(self.group_order); n * n];
        for i in 0..self.size {
            for j in 0..self.size {
                entries[i * n + j] = self.get(i, j).clone();
            }
        }
        for i in 0..other.size {
            for j in 0..other.size {
                entries[(i + self.size) * n + j + self.size] = other.get(i, j).clone();
            }
        }
        Ok(GroupRingMatrix { size: n, group_order: self.group_order, entries })
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn group_order(&self) -> usize {
        self.group_order
    }

    pub fn get(&self, i: usize, j: usize) -> &GroupRingElem {
        &self.entries[i * self.size + j]
    }

    pub fn mul(&self, other: &Self, group: &FiniteGroup) -> Result<Self> {
        if self.size != other.size || self.group_order != group.order() || other.group_order != group.order() {
            return Err(Error::DimensionMismatch { expected: self.size, found: other.size });
        }
        let n = self.size;
        let mut entries = Vec::with_capacity(n * n);
        for i in 0..n {
            for j in 0..n {
                let mut acc = GroupRingElem::zero(group.order());
                for k in 0..n {
                    acc = acc.add(&self.get(i, k).mul(other.get(k, j), group));
                }
                entries.push(acc);
            }
        }
        Ok(GroupRingMatrix { size: n, group_order: self.group_order, entries })
    }

    pub fn is_idempotent(&self, group: &FiniteGroup) -> bool {
        self.mul(self, group).is_ok_and(|sq| &sq == self)
    }

    /// Sum of the diagonal entries in QG.
    pub fn diagonal_sum(&self) -> GroupRingElem {
        (0..self.size).fold(GroupRingElem::zero(self.group_order), |acc, i| acc.add(self.get(i, i)))
    }
}
