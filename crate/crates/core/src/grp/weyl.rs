use super::{FiniteGroup, SubgroupRec};
use crate::{Error, Result};

/// Automorphism of a subgroup `H`, as the images of `H`'s elements listed
/// in the order of `H.elements()`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SubgroupAutomorphism {
    pub images: Vec<usize>,
}

impl SubgroupAutomorphism {
    pub fn apply(&self, h: &SubgroupRec, a: usize) -> usize {
        let i = h.elements().binary_search(&a).expect("element of the subgroup");
        self.images[i]
    }

    pub fn is_identity(&self, h: &SubgroupRec) -> bool {
        self.images == h.elements()
    }
}

/// Centralizer, normalizer and Weyl group `N_G H / (H · Z_G H)`.
#[derive(Clone, Debug)]
pub struct WeylData {
    pub centralizer: SubgroupRec,
    pub normalizer: SubgroupRec,
    /// `H · Z_G H`
    pub h_times_centralizer: SubgroupRec,
    pub weyl: FiniteGroup,
    /// One element of `N_G H` per Weyl element, in Weyl index order.
    pub coset_representatives: Vec<usize>,
    /// Conjugation action of each Weyl element on `H`.
    pub action: Vec<SubgroupAutomorphism>,
}

pub fn weyl(group: &FiniteGroup, h: &SubgroupRec) -> Result<WeylData> {
    let h = SubgroupRec::new(group, h.elements().to_vec())?;
    let n = group.order();
    let centralizer: Vec<usize> = (0..n)
        .filter(|&g| h.elements().iter().all(|&x| group.mul(g, x) == group.mul(x, g)))
        .collect();
    let normalizer: Vec<usize> = (0..n)
        .filter(|&g| h.elements().iter().all(|&x| h.contains(group.conjugate(g, x))))
        .collect();
    let mut hz: Vec<usize> = h
        .elements()
        .iter()
        .flat_map(|&a| centralizer.iter().map(move |&z| (a, z)))
        .map(|(a, z)| group.mul(a, z))
        .collect();
    hz.sort_unstable();
    hz.dedup();
    let centralizer = SubgroupRec::new(group, centralizer)?;
    let normalizer = SubgroupRec::new(group, normalizer)?;
    let hz = SubgroupRec::new(group, hz)?;
    if normalizer.order() % hz.order() != 0 {
        return Err(Error::Validation("|N_G H| is not divisible by |H Z_G H|".into()));
    }

    // Left cosets n·K, each represented by its smallest element.
    let mut reps: Vec<usize> = Vec::new();
    let mut coset_of = vec![usize::MAX; n];
    for &x in normalizer.elements() {
        if coset_of[x] != usize::MAX {
            continue;
        }
        for &k in hz.elements() {
            coset_of[group.mul(x, k)] = reps.len();
        }
        reps.push(x);
    }
    let m = reps.len();
    let table: Vec<Vec<usize>> = reps
        .iter()
        .map(|&a| reps.iter().map(|&b| coset_of[group.mul(a, b)]).collect())
        .collect();
    let weyl = FiniteGroup::from_table(table)?;

    let action = reps
        .iter()
        .map(|&g| SubgroupAutomorphism {
            images: h.elements().iter().map(|&x| group.conjugate(g, x)).collect(),
        })
        .collect::<Vec<_>>();
    debug_assert_eq!(action.len(), m);
    for aut in &action {
        for (i, &a) in h.elements().iter().enumerate() {
            for (j, &b) in h.elements().iter().enumerate() {
                let ab = group.mul(a, b);
                if aut.apply(&h, ab) != group.mul(aut.images[i], aut.images[j]) {
                    return Err(Error::Validation("conjugation is not an automorphism".into()));
                }
            }
        }
    }
    Ok(WeylData {
        centralizer,
        normalizer,
        h_times_centralizer: hz,
        weyl,
        coset_representatives: reps,
        action,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::grp::{GroupDescriptor, SubgroupLattice};

    #[test]
    fn abelian_weyl_is_trivial() {
        let g = FiniteGroup::cyclic(6).unwrap();
        let lat = SubgroupLattice::new(&g).unwrap();
        for h in lat.subgroups() {
            let w = weyl(&g, h).unwrap();
            assert_eq!(w.weyl.order(), 1);
            assert_eq!(w.centralizer.order(), 6);
        }
    }

    #[test]
    fn s3_c3_weyl_inverts() {
        let g = FiniteGroup::build(&GroupDescriptor::Perm { degree: 3, gens: vec![vec![1, 0, 2], vec![1, 2, 0]] })
            .unwrap();
        let lat = SubgroupLattice::new(&g).unwrap();
        let c3 = lat.subgroups().iter().find(|s| s.order() == 3).unwrap();
        let w = weyl(&g, c3).unwrap();
        assert_eq!(w.weyl.order(), 2);
        let x = c3.generator().unwrap();
        let nontrivial = w.action.iter().find(|a| !a.is_identity(c3)).unwrap();
        assert_eq!(nontrivial.apply(c3, x), g.inv(x));
    }

    #[test]
    fn d4_center_weyl_is_trivial() {
        let g = FiniteGroup::build(&GroupDescriptor::Perm { degree: 4, gens: vec![vec![1, 2, 3, 0], vec![3, 2, 1, 0]] })
            .unwrap();
        let lat = SubgroupLattice::new(&g).unwrap();
        let center = lat
            .subgroups()
            .iter()
            .find(|s| s.order() == 2 && (0..8).all(|x| g.mul(x, s.elements()[1]) == g.mul(s.elements()[1], x)))
            .unwrap();
        let w = weyl(&g, center).unwrap();
        assert_eq!(w.centralizer.order(), 8);
        assert_eq!(w.weyl.order(), 1);
    }

    #[test]
    fn abelian_subgroup_weyl_is_n_mod_z() {
        let g = FiniteGroup::build(&GroupDescriptor::Perm { degree: 4, gens: vec![vec![1, 2, 0, 3], vec![0, 2, 3, 1]] })
            .unwrap();
        let lat = SubgroupLattice::new(&g).unwrap();
        for h in lat.subgroups().iter().filter(|s| s.is_cyclic() || s.order() == 4) {
            let w = weyl(&g, h).unwrap();
            // For abelian H, H ⊆ Z_G H so H·Z_G H = Z_G H.
            assert_eq!(w.h_times_centralizer, w.centralizer);
            assert_eq!(w.weyl.order(), w.normalizer.order() / w.centralizer.order());
        }
    }

    #[test]
    fn non_subgroup_rejected() {
        let g = FiniteGroup::cyclic(4).unwrap();
        let bogus = SubgroupRec::new(&g, vec![0, 2]).unwrap();
        assert!(weyl(&g, &bogus).is_ok());
        assert!(SubgroupRec::new(&g, vec![0, 3]).is_err());
    }
}
