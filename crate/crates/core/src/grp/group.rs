use std::collections::{BTreeMap, HashMap, VecDeque};

use serde::{Deserialize, Serialize};

use crate::{Error, Result};

/// Default bound on the order of a group produced by generator closure.
pub const DEFAULT_CLOSURE_BOUND: usize = 48;

/// How a group is given: JSON-compatible descriptor with 0-indexed data.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum GroupDescriptor {
    Cyclic { n: usize },
    Perm { degree: usize, gens: Vec<Vec<usize>> },
    Table { table: Vec<Vec<usize>> },
}

/// A finite group given by its multiplication table. Element 0 is the
/// identity; conjugacy classes are ordered by their smallest element.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiniteGroup {
    order: usize,
    table: Vec<usize>,
    inverse: Vec<usize>,
    element_order: Vec<usize>,
    classes: Vec<Vec<usize>>,
    class_of: Vec<usize>,
}

impl FiniteGroup {
    pub fn build(desc: &GroupDescriptor) -> Result<Self> {
        Self::build_with_bound(desc, DEFAULT_CLOSURE_BOUND)
    }

    pub fn build_with_bound(desc: &GroupDescriptor, bound: usize) -> Result<Self> {
        match desc {
            GroupDescriptor::Cyclic { n } => Self::cyclic(*n),
            GroupDescriptor::Perm { degree, gens } => Self::from_permutations(*degree, gens, bound),
            GroupDescriptor::Table { table } => Self::from_table(table.clone()),
        }
    }

    pub fn cyclic(n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::Validation("cyclic group of order 0".into()));
        }
        let table = (0..n * n).map(|k| (k / n + k % n) % n).collect();
        Ok(Self::from_valid_table(n, table))
    }

    /// Closure of permutation generators. Permutations are composed right
    /// to left: `(p * q)(x) = p(q(x))`.
    pub fn from_permutations(degree: usize, gens: &[Vec<usize>], bound: usize) -> Result<Self> {
        for g in gens {
            let mut seen = vec![false; degree];
            if g.len() != degree || g.iter().any(|&x| x >= degree || std::mem::replace(&mut seen[x], true)) {
                return Err(Error::Validation(format!("{g:?} is not a permutation of {degree} points")));
            }
        }
        let compose = |p: &[usize], q: &[usize]| -> Vec<usize> { q.iter().map(|&x| p[x]).collect() };
        let id: Vec<usize> = (0..degree).collect();
        let mut elems = vec![id.clone()];
        let mut index: HashMap<Vec<usize>, usize> = HashMap::from([(id, 0)]);
        let mut queue = VecDeque::from([0usize]);
        while let Some(i) = queue.pop_front() {
            for g in gens {
                let p = compose(&elems[i], g);
                if !index.contains_key(&p) {
                    if elems.len() >= bound {
                        return Err(Error::Validation(format!(
                            "generator closure exceeds the bound of {bound} elements"
                        )));
                    }
                    index.insert(p.clone(), elems.len());
                    queue.push_back(elems.len());
                    elems.push(p);
                }
            }
        }
        let n = elems.len();
        let mut table = vec![0; n * n];
        for a in 0..n {
            for b in 0..n {
                table[a * n + b] = index[&compose(&elems[a], &elems[b])];
            }
        }
        Ok(Self::from_valid_table(n, table))
    }

    /// Validates an explicit table. If the identity is not element 0 it is
    /// swapped into position 0.
    pub fn from_table(rows: Vec<Vec<usize>>) -> Result<Self> {
        let n = rows.len();
        if n == 0 {
            return Err(Error::Validation("empty multiplication table".into()));
        }
        for r in &rows {
            if r.len() != n {
                return Err(Error::Validation("multiplication table is not square".into()));
            }
            if r.iter().any(|&x| x >= n) {
                return Err(Error::Validation("table entry out of range".into()));
            }
        }
        let is_perm = |it: &mut dyn Iterator<Item = usize>| {
            let mut seen = vec![false; n];
            for x in it {
                if std::mem::replace(&mut seen[x], true) {
                    return false;
                }
            }
            true
        };
        for (i, row) in rows.iter().enumerate() {
            if !is_perm(&mut row.iter().copied()) || !is_perm(&mut (0..n).map(|j| rows[j][i])) {
                return Err(Error::Validation(format!("row or column {i} is not a permutation")));
            }
        }
        let e = (0..n)
            .find(|&e| (0..n).all(|x| rows[e][x] == x && rows[x][e] == x))
            .ok_or_else(|| Error::Validation("no two-sided identity".into()))?;
        for a in 0..n {
            for b in 0..n {
                let ab = rows[a][b];
                for c in 0..n {
                    if rows[ab][c] != rows[a][rows[b][c]] {
                        return Err(Error::Validation(format!(
                            "table is not associative at ({a}, {b}, {c})"
                        )));
                    }
                }
            }
        }
        let relabel = |x: usize| if x == e { 0 } else if x == 0 { e } else { x };
        let mut table = vec![0; n * n];
        for a in 0..n {
            for b in 0..n {
                table[relabel(a) * n + relabel(b)] = relabel(rows[a][b]);
            }
        }
        Ok(Self::from_valid_table(n, table))
    }

    fn from_valid_table(n: usize, table: Vec<usize>) -> Self {
        let mut inverse = vec![0; n];
        for a in 0..n {
            inverse[a] = (0..n).find(|&b| table[a * n + b] == 0).expect("group table");
        }
        let element_order = (0..n)
            .map(|a| {
                let (mut x, mut k) = (a, 1);
                while x != 0 {
                    x = table[x * n + a];
                    k += 1;
                }
                k
            })
            .collect();
        let mut class_of = vec![usize::MAX; n];
        let mut classes = Vec::new();
        for a in 0..n {
            if class_of[a] != usize::MAX {
                continue;
            }
            let mut cls: Vec<usize> = (0..n).map(|g| table[table[g * n + a] * n + inverse[g]]).collect();
            cls.sort_unstable();
            cls.dedup();
            for &x in &cls {
                class_of[x] = classes.len();
            }
            classes.push(cls);
        }
        FiniteGroup { order: n, table, inverse, element_order, classes, class_of }
    }

    pub fn order(&self) -> usize {
        self.order
    }

    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.table[a * self.order + b]
    }

    pub fn inv(&self, a: usize) -> usize {
        self.inverse[a]
    }

    pub fn element_order(&self, a: usize) -> usize {
        self.element_order[a]
    }

    pub fn pow(&self, a: usize, k: usize) -> usize {
        (0..k).fold(0, |x, _| self.mul(x, a))
    }

    /// `g a g^-1`
    pub fn conjugate(&self, g: usize, a: usize) -> usize {
        self.mul(self.mul(g, a), self.inverse[g])
    }

    pub fn product(&self, elems: &[usize]) -> usize {
        elems.iter().fold(0, |x, &y| self.mul(x, y))
    }

    pub fn table_rows(&self) -> Vec<Vec<usize>> {
        self.table.chunks(self.order).map(<[usize]>::to_vec).collect()
    }

    pub fn classes(&self) -> &[Vec<usize>] {
        &self.classes
    }

    pub fn class_of(&self, a: usize) -> usize {
        self.class_of[a]
    }

    pub fn num_classes(&self) -> usize {
        self.classes.len()
    }

    pub fn is_abelian(&self) -> bool {
        (0..self.order).all(|a| (0..a).all(|b| self.mul(a, b) == self.mul(b, a)))
    }

    pub fn is_cyclic(&self) -> bool {
        self.element_order.contains(&self.order)
    }

    /// Some generator when the group is cyclic (the smallest one).
    pub fn cyclic_generator(&self) -> Option<usize> {
        (0..self.order).find(|&a| self.element_order[a] == self.order)
    }

    pub fn centralizer_of_element(&self, a: usize) -> Vec<usize> {
        (0..self.order).filter(|&g| self.mul(g, a) == self.mul(a, g)).collect()
    }

    /// Subgroup generated by a set of elements, as a sorted element list.
    pub fn closure(&self, gens: &[usize]) -> Vec<usize> {
        let mut inside = vec![false; self.order];
        inside[0] = true;
        let mut elems = vec![0];
        let mut k = 0;
        while k < elems.len() {
            let x = elems[k];
            for &g in gens {
                let y = self.mul(x, g);
                if !inside[y] {
                    inside[y] = true;
                    elems.push(y);
                }
            }
            k += 1;
        }
        elems.sort_unstable();
        elems
    }

    /// The subgroup on `elements` (sorted, containing 0) as a group in its
    /// own right, together with the embedding of its elements.
    pub fn subgroup_as_group(&self, elements: &[usize]) -> Result<(FiniteGroup, Vec<usize>)> {
        let pos: HashMap<usize, usize> = elements.iter().enumerate().map(|(i, &x)| (x, i)).collect();
        if elements.first() != Some(&0) {
            return Err(Error::Validation("subgroup must list the identity first".into()));
        }
        let m = elements.len();
        let mut table = vec![0; m * m];
        for (i, &a) in elements.iter().enumerate() {
            for (j, &b) in elements.iter().enumerate() {
                table[i * m + j] = *pos
                    .get(&self.mul(a, b))
                    .ok_or_else(|| Error::Validation("element set is not closed".into()))?;
            }
        }
        Ok((Self::from_valid_table(m, table), elements.to_vec()))
    }

    /// Rational classes: elements up to conjugacy and `g ~ g^t` for `t`
    /// prime to the order of `g`.
    pub fn rational_classes(&self) -> Vec<Vec<usize>> {
        let mut label = vec![usize::MAX; self.order];
        let mut out = Vec::new();
        for a in 0..self.order {
            if label[a] != usize::MAX {
                continue;
            }
            let ord = self.element_order[a];
            let mut cls: Vec<usize> = (1..=ord)
                .filter(|t| num_integer::gcd(*t, ord) == 1)
                .flat_map(|t| self.classes[self.class_of[self.pow(a, t)]].iter().copied())
                .collect();
            cls.sort_unstable();
            cls.dedup();
            for &x in &cls {
                label[x] = out.len();
            }
            out.push(cls);
        }
        out
    }

    /// Checks associativity and the identity/inverse laws by brute force.
    pub fn validate(&self) -> Result<()> {
        let n = self.order;
        for a in 0..n {
            if self.mul(0, a) != a || self.mul(a, 0) != a {
                return Err(Error::Validation("0 is not the identity".into()));
            }
            if self.mul(a, self.inverse[a]) != 0 {
                return Err(Error::Validation("inverse table is wrong".into()));
            }
            for b in 0..n {
                for c in 0..n {
                    if self.mul(self.mul(a, b), c) != self.mul(a, self.mul(b, c)) {
                        return Err(Error::Validation("not associative".into()));
                    }
                }
            }
        }
        Ok(())
    }

    /// Histogram of element orders, handy for identifying groups.
    pub fn order_statistics(&self) -> BTreeMap<usize, usize> {
        let mut m = BTreeMap::new();
        for &o in &self.element_order {
            *m.entry(o).or_insert(0) += 1;
        }
        m
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn perm(degree: usize, gens: &[&[usize]]) -> FiniteGroup {
        FiniteGroup::build(&GroupDescriptor::Perm {
            degree,
            gens: gens.iter().map(|g| g.to_vec()).collect(),
        })
        .unwrap()
    }

    #[test]
    fn cyclic_six() {
        let g = FiniteGroup::build(&GroupDescriptor::Cyclic { n: 6 }).unwrap();
        assert_eq!(g.order(), 6);
        assert_eq!(g.num_classes(), 6);
        assert!(g.is_cyclic() && g.is_abelian());
        g.validate().unwrap();
    }

    #[test]
    fn symmetric_three() {
        let g = perm(3, &[&[1, 0, 2], &[1, 2, 0]]);
        assert_eq!(g.order(), 6);
        assert_eq!(g.num_classes(), 3);
        assert!(!g.is_abelian());
        g.validate().unwrap();
    }

    #[test]
    fn quaternion_in_s8() {
        // Left regular representation of Q8 on {1,i,j,k,-1,-i,-j,-k} = 0..8.
        let i = [1, 4, 3, 6, 5, 0, 7, 2];
        let j = [2, 7, 4, 1, 6, 3, 0, 5];
        let g = perm(8, &[&i, &j]);
        assert_eq!(g.order(), 8);
        assert_eq!(g.num_classes(), 5);
        assert_eq!(g.order_statistics(), BTreeMap::from([(1, 1), (2, 1), (4, 6)]));
    }

    #[test]
    fn closure_bound_is_enforced() {
        // S_5 has 120 elements.
        let desc = GroupDescriptor::Perm { degree: 5, gens: vec![vec![1, 0, 2, 3, 4], vec![1, 2, 3, 4, 0]] };
        assert!(matches!(FiniteGroup::build(&desc), Err(Error::Validation(_))));
    }

    #[test]
    fn table_input_is_validated() {
        let bad = GroupDescriptor::Table { table: vec![vec![0, 1], vec![1, 1]] };
        assert!(FiniteGroup::build(&bad).is_err());
        // identity at index 1 gets relabelled to 0
        let c2 = GroupDescriptor::Table { table: vec![vec![1, 0], vec![0, 1]] };
        let g = FiniteGroup::build(&c2).unwrap();
        assert_eq!(g.mul(0, 1), 1);
        g.validate().unwrap();
        // Loop that is not associative: rows/cols are permutations, identity 0.
        let table = vec![
            vec![0, 1, 2, 3, 4],
            vec![1, 0, 3, 4, 2],
            vec![2, 4, 0, 1, 3],
            vec![3, 2, 4, 0, 1],
            vec![4, 3, 1, 2, 0],
        ];
        let err = FiniteGroup::build(&GroupDescriptor::Table { table }).unwrap_err();
        assert!(err.to_string().contains("associative"), "{err}");
    }

    #[test]
    fn class_equation() {
        let g = perm(4, &[&[1, 2, 3, 0], &[3, 2, 1, 0]]);
        assert_eq!(g.order(), 8);
        assert_eq!(g.classes().iter().map(Vec::len).sum::<usize>(), 8);
        for a in 0..g.order() {
            assert_eq!(g.classes()[g.class_of(a)].len() * g.centralizer_of_element(a).len(), 8);
        }
    }

    #[test]
    fn descriptor_json() {
        let d: GroupDescriptor = serde_json::from_str(r#"{"kind":"perm","degree":3,"gens":[[1,0,2],[1,2,0]]}"#).unwrap();
        assert_eq!(FiniteGroup::build(&d).unwrap().order(), 6);
        let d: GroupDescriptor = serde_json::from_str(r#"{"kind":"cyclic","n":6}"#).unwrap();
        assert_eq!(d, GroupDescriptor::Cyclic { n: 6 });
        assert!(serde_json::from_str::<GroupDescriptor>(r#"{"kind":"free"}"#).is_err());
    }
}
