use std::collections::HashMap;

use super::FiniteGroup;
use crate::{Error, Result};

/// Largest group order for which all subgroups are enumerated.
pub const SUBGROUP_ORDER_BOUND: usize = 24;

/// A subgroup as a sorted element-index set.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SubgroupRec {
    elements: Vec<usize>,
    cyclic: bool,
    generator: Option<usize>,
}

impl SubgroupRec {
    /// Validates closure and builds the record.
    pub fn new(group: &FiniteGroup, mut elements: Vec<usize>) -> Result<Self> {
        elements.sort_unstable();
        elements.dedup();
        if elements.first() != Some(&0) {
            return Err(Error::Validation("subgroup does not contain the identity".into()));
        }
        if elements.iter().any(|&x| x >= group.order()) {
            return Err(Error::Validation("subgroup element out of range".into()));
        }
        let mut inside = vec![false; group.order()];
        for &x in &elements {
            inside[x] = true;
        }
        for &a in &elements {
            if !inside[group.inv(a)] || elements.iter().any(|&b| !inside[group.mul(a, b)]) {
                return Err(Error::Validation("element set is not closed".into()));
            }
        }
        let generator = elements.iter().copied().find(|&a| group.element_order(a) == elements.len());
        Ok(SubgroupRec { cyclic: generator.is_some(), generator, elements })
    }

    pub(crate) fn from_closed(group: &FiniteGroup, elements: Vec<usize>) -> Self {
        let generator = elements.iter().copied().find(|&a| group.element_order(a) == elements.len());
        SubgroupRec { cyclic: generator.is_some(), generator, elements }
    }

    pub fn elements(&self) -> &[usize] {
        &self.elements
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn is_cyclic(&self) -> bool {
        self.cyclic
    }

    pub fn generator(&self) -> Option<usize> {
        self.generator
    }

    pub fn contains(&self, a: usize) -> bool {
        self.elements.binary_search(&a).is_ok()
    }

    pub fn is_subgroup_of(&self, other: &SubgroupRec) -> bool {
        self.elements.iter().all(|&a| other.contains(a))
    }

    /// `g H g^-1`
    pub fn conjugate(&self, group: &FiniteGroup, g: usize) -> SubgroupRec {
        let mut e: Vec<usize> = self.elements.iter().map(|&a| group.conjugate(g, a)).collect();
        e.sort_unstable();
        let generator = self.generator.map(|x| group.conjugate(g, x));
        SubgroupRec { elements: e, cyclic: self.cyclic, generator }
    }

    /// Generators of the subgroup as a cyclic group.
    pub fn generators_of_cyclic(&self, group: &FiniteGroup) -> Vec<usize> {
        if !self.cyclic {
            return Vec::new();
        }
        self.elements
            .iter()
            .copied()
            .filter(|&a| group.element_order(a) == self.order())
            .collect()
    }
}

/// All subgroups of a group, with their conjugacy classes.
#[derive(Clone, Debug)]
pub struct SubgroupLattice {
    subgroups: Vec<SubgroupRec>,
    index: HashMap<Vec<usize>, usize>,
    classes: Vec<Vec<usize>>,
    class_of: Vec<usize>,
}

impl SubgroupLattice {
    /// Enumerates every subgroup by closing joins of cyclic subgroups.
    /// Subgroups are sorted by order, then lexicographically; classes are
    /// sorted the same way by their canonical (lexicographically least)
    /// member, which is listed first.
    pub fn new(group: &FiniteGroup) -> Result<Self> {
        if group.order() > SUBGROUP_ORDER_BOUND {
            return Err(Error::Capability(format!(
                "subgroup enumeration is limited to order {SUBGROUP_ORDER_BOUND}, got {}",
                group.order()
            )));
        }
        let mut cyclics: Vec<Vec<usize>> = (0..group.order()).map(|a| group.closure(&[a])).collect();
        cyclics.sort();
        cyclics.dedup();
        let mut found: Vec<Vec<usize>> = cyclics.clone();
        let mut seen: std::collections::HashSet<Vec<usize>> = found.iter().cloned().collect();
        let mut k = 0;
        while k < found.len() {
            let h = found[k].clone();
            for c in &cyclics {
                if c.iter().all(|x| h.binary_search(x).is_ok()) {
                    continue;
                }
                let mut gens = h.clone();
                gens.extend(c.iter().copied());
                let j = group.closure(&gens);
                if seen.insert(j.clone()) {
                    found.push(j);
                }
            }
            k += 1;
        }
        found.sort_by(|a, b| (a.len(), a).cmp(&(b.len(), b)));
        let subgroups: Vec<SubgroupRec> = found.into_iter().map(|e| SubgroupRec::from_closed(group, e)).collect();
        let index: HashMap<Vec<usize>, usize> =
            subgroups.iter().enumerate().map(|(i, s)| (s.elements.clone(), i)).collect();
        let mut class_of = vec![usize::MAX; subgroups.len()];
        let mut classes = Vec::new();
        // Sorted order means the first unvisited subgroup of a class is its
        // lexicographically least member among subgroups of that order.
        for i in 0..subgroups.len() {
            if class_of[i] != usize::MAX {
                continue;
            }
            let mut members: Vec<usize> = (0..group.order())
                .map(|g| index[&subgroups[i].conjugate(group, g).elements])
                .collect();
            members.sort_unstable();
            members.dedup();
            for &m in &members {
                class_of[m] = classes.len();
            }
            classes.push(members);
        }
        Ok(SubgroupLattice { subgroups, index, classes, class_of })
    }

    pub fn subgroups(&self) -> &[SubgroupRec] {
        &self.subgroups
    }

    pub fn len(&self) -> usize {
        self.subgroups.len()
    }

    pub fn is_empty(&self) -> bool {
        self.subgroups.is_empty()
    }

    pub fn get(&self, i: usize) -> &SubgroupRec {
        &self.subgroups[i]
    }

    /// Index of the subgroup with the given (sorted) elements.
    pub fn index_of(&self, elements: &[usize]) -> Option<usize> {
        self.index.get(elements).copied()
    }

    /// Conjugacy classes as lists of subgroup indices; the first entry is
    /// the canonical representative.
    pub fn classes(&self) -> &[Vec<usize>] {
        &self.classes
    }

    pub fn class_of(&self, i: usize) -> usize {
        self.class_of[i]
    }

    pub fn representative(&self, class: usize) -> &SubgroupRec {
        &self.subgroups[self.classes[class][0]]
    }

    /// Class indices whose members are cyclic.
    pub fn cyclic_classes(&self) -> Vec<usize> {
        (0..self.classes.len())
            .filter(|&c| self.representative(c).is_cyclic())
            .collect()
    }

    /// Indices of the subgroups contained in subgroup `i`.
    pub fn subgroups_of(&self, i: usize) -> Vec<usize> {
        let h = &self.subgroups[i];
        (0..self.subgroups.len()).filter(|&k| self.subgroups[k].is_subgroup_of(h)).collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::grp::GroupDescriptor;

    fn lattice(desc: GroupDescriptor) -> (FiniteGroup, SubgroupLattice) {
        let g = FiniteGroup::build(&desc).unwrap();
        let l = SubgroupLattice::new(&g).unwrap();
        (g, l)
    }

    /// Brute force: every subset closed under multiplication.
    fn brute_force_count(g: &FiniteGroup) -> usize {
        let n = g.order();
        (0u32..(1 << n))
            .filter(|mask| mask & 1 == 1)
            .filter(|mask| {
                let has = |x: usize| mask >> x & 1 == 1;
                (0..n).all(|a| !has(a) || (0..n).all(|b| !has(b) || has(g.mul(a, b))))
            })
            .count()
    }

    #[test]
    fn cyclic_six_divisor_lattice() {
        let (_, l) = lattice(GroupDescriptor::Cyclic { n: 6 });
        assert_eq!(l.len(), 4);
        assert_eq!(l.classes().len(), 4);
        assert!(l.subgroups().iter().all(SubgroupRec::is_cyclic));
    }

    #[test]
    fn symmetric_three() {
        let (g, l) = lattice(GroupDescriptor::Perm { degree: 3, gens: vec![vec![1, 0, 2], vec![1, 2, 0]] });
        assert_eq!(l.len(), 6);
        assert_eq!(l.len(), brute_force_count(&g));
        assert_eq!(l.classes().len(), 4);
        let cyc = l.cyclic_classes();
        assert_eq!(cyc.iter().map(|&c| l.representative(c).order()).collect::<Vec<_>>(), vec![1, 2, 3]);
    }

    #[test]
    fn klein_four() {
        let (g, l) = lattice(GroupDescriptor::Perm {
            degree: 4,
            gens: vec![vec![1, 0, 3, 2], vec![2, 3, 0, 1]],
        });
        assert_eq!(g.order(), 4);
        assert_eq!(l.len(), 5);
        assert_eq!(brute_force_count(&g), 5);
    }

    #[test]
    fn dihedral_eight_brute_force() {
        let (g, l) = lattice(GroupDescriptor::Perm { degree: 4, gens: vec![vec![1, 2, 3, 0], vec![3, 2, 1, 0]] });
        assert_eq!(l.len(), brute_force_count(&g));
        assert_eq!(l.len(), 10);
        assert_eq!(l.classes().len(), 8);
        for s in l.subgroups() {
            assert_eq!(g.order() % s.order(), 0);
        }
        // canonical representative is lexicographically least in its class
        for cls in l.classes() {
            let rep = l.get(cls[0]).elements();
            assert!(cls.iter().all(|&m| l.get(m).elements() >= rep));
        }
    }

    #[test]
    fn cyclic_classes_match_rational_classes() {
        for desc in [
            GroupDescriptor::Cyclic { n: 12 },
            GroupDescriptor::Perm { degree: 4, gens: vec![vec![1, 2, 3, 0], vec![3, 2, 1, 0]] },
            GroupDescriptor::Perm { degree: 4, gens: vec![vec![1, 2, 0, 3], vec![0, 2, 3, 1]] },
        ] {
            let (g, l) = lattice(desc);
            assert_eq!(l.cyclic_classes().len(), g.rational_classes().len());
        }
    }

    #[test]
    fn bound_is_a_capability_error() {
        let g = FiniteGroup::cyclic(25).unwrap();
        assert!(matches!(SubgroupLattice::new(&g), Err(Error::Capability(_))));
    }

    #[test]
    fn record_validation() {
        let g = FiniteGroup::cyclic(4).unwrap();
        assert!(SubgroupRec::new(&g, vec![0, 1]).is_err());
        let h = SubgroupRec::new(&g, vec![2, 0]).unwrap();
        assert_eq!(h.elements(), &[0, 2]);
        assert_eq!(h.generator(), Some(2));
    }
}
