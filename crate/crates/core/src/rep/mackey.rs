use std::sync::Arc;

use num_integer::Integer;

use super::characters::{induce, k0_cyclic, k0_group, restrict, scalars, ClassFunction, ClassFunctionSpace};
use crate::burnside::{theta_image, BurnsideRing, MackeyDomain, MackeyModule, MackeyParts};
use crate::exactla::{to_sparse, Field, Matrix, Rational, Subspace};
use crate::grp::FiniteGroup;
use crate::Result;

/// `x ↦ |(D/F)^{⟨x⟩}|` for the subgroup class `k` of `ring`'s group.
pub fn permutation_character(ring: &BurnsideRing, k: usize) -> ClassFunction {
    let g = ring.group();
    g.classes()
        .iter()
        .map(|cls| {
            let cyc = g.closure(&[cls[0]]);
            let h = ring.class_of_subgroup(&cyc).expect("cyclic subgroup");
            Rational::from(ring.marks().entry(h, k) as i64)
        })
        .collect()
}

fn value_space(group: &FiniteGroup) -> Result<ClassFunctionSpace> {
    if group.is_cyclic() {
        k0_cyclic(group)
    } else {
        k0_group(group)
    }
}

fn coordinate_matrix(space: &ClassFunctionSpace, images: &[ClassFunction]) -> Result<Matrix> {
    let cols = images
        .iter()
        .map(|f| Ok(to_sparse(&scalars(&space.coordinates(f)?))))
        .collect::<Result<Vec<_>>>()?;
    Matrix::from_columns(Field::Rational, space.dim(), &cols)
}

/// The Mackey functor `D ↦ K_0(QD) ⊗ Q` in character bases: irreducible
/// rational characters on cyclic subgroups, the canonical basis of the
/// induced-from-cyclic span otherwise. `[D/F]` acts by multiplication with
/// the permutation character of `D/F`.
pub fn rep_mackey(domain: Arc<MackeyDomain>) -> Result<MackeyModule> {
    let dom = domain.clone();
    let spaces = (0..dom.len())
        .map(|d| value_space(dom.ring(d).group()))
        .collect::<Result<Vec<_>>>()?;
    let basis = |d: usize| Ok(spaces[d].labels().to_vec());
    let ind = |d: usize, e: usize| {
        let inc = dom.inclusion(d, e)?;
        let (sub, sup) = (inc.sub().group(), inc.sup().group());
        let imgs = spaces[d]
            .basis()
            .iter()
            .map(|f| induce(sub, sup, inc.embed(), f))
            .collect::<Result<Vec<_>>>()?;
        coordinate_matrix(&spaces[e], &imgs)
    };
    let res = |d: usize, e: usize| {
        let inc = dom.inclusion(d, e)?;
        let (sub, sup) = (inc.sub().group(), inc.sup().group());
        let imgs = spaces[e]
            .basis()
            .iter()
            .map(|f| restrict(sub, sup, inc.embed(), f))
            .collect::<Result<Vec<_>>>()?;
        coordinate_matrix(&spaces[d], &imgs)
    };
    let conj = |g: usize, d: usize| {
        let t = dom.conjugate(g, d);
        let grp = dom.group();
        let (src, dst) = (dom.subgroup(d).elements(), dom.subgroup(t).elements());
        let (gd, gt) = (dom.ring(d).group(), dom.ring(t).group());
        // (c_g f)(y) = f(g^-1 y g)
        let pullback: Vec<usize> = gt
            .classes()
            .iter()
            .map(|cls| {
                let y = grp.conjugate(grp.inv(g), dst[cls[0]]);
                gd.class_of(src.binary_search(&y).expect("conjugate lies in D"))
            })
            .collect();
        let imgs: Vec<ClassFunction> = spaces[d]
            .basis()
            .iter()
            .map(|f| pullback.iter().map(|&c| f[c].clone()).collect())
            .collect();
        coordinate_matrix(&spaces[t], &imgs)
    };
    let action = |d: usize, k: usize| {
        let pi = permutation_character(dom.ring(d), k);
        let imgs: Vec<ClassFunction> = spaces[d]
            .basis()
            .iter()
            .map(|f| f.iter().zip(&pi).map(|(a, b)| a * b).collect())
            .collect();
        coordinate_matrix(&spaces[d], &imgs)
    };
    MackeyModule::assemble(
        "K_0(Q(-))⊗Q",
        domain.clone(),
        MackeyParts { basis: &basis, ind: &ind, res: &res, conj: &conj, action: &action },
    )
}

/// θ-part of `K_0(QC) ⊗ Q` and the action of `Aut(C)` on it.
#[derive(Clone, Debug)]
pub struct ThetaK0Report {
    pub order: usize,
    pub theta_image: Subspace,
    /// Units `t` for which `x ↦ x^t` was checked.
    pub automorphisms: Vec<usize>,
    /// Every automorphism fixes the θ-image pointwise.
    pub aut_trivial: bool,
}

impl ThetaK0Report {
    pub fn dim(&self) -> usize {
        self.theta_image.dim()
    }
}

/// Computes `θ_C(K_0(QC) ⊗ Q)` for `C` of order `n` and checks that every
/// automorphism of `C` acts trivially on it.
pub fn theta_k0_check(n: usize) -> Result<ThetaK0Report> {
    let c = FiniteGroup::cyclic(n)?;
    let domain = MackeyDomain::new(c.clone())?;
    let m = rep_mackey(domain.clone())?;
    let top = domain.top();
    let image = theta_image(&m, top)?;
    let space = k0_cyclic(&c)?;
    let units: Vec<usize> = (1..=n).filter(|t| t.gcd(&n) == 1).map(|t| t % n).collect();
    let mut trivial = true;
    for &t in &units {
        // abelian and generated by 1, so classes are elements in order
        let imgs: Vec<ClassFunction> =
            space.basis().iter().map(|f| (0..n).map(|j| f[(j * t) % n].clone()).collect()).collect();
        let aut = coordinate_matrix(&space, &imgs)?;
        for v in image.basis() {
            if aut.apply(v) != *v {
                trivial = false;
            }
        }
    }
    Ok(ThetaK0Report { order: n, theta_image: image, automorphisms: units, aut_trivial: trivial })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::burnside::artin_defect;
    use crate::grp::GroupDescriptor;

    fn q(n: i64, d: i64) -> Rational {
        Rational::new(n, d)
    }

    #[test]
    fn c2_action_matrices() {
        let dom = MackeyDomain::new(FiniteGroup::cyclic(2).unwrap()).unwrap();
        let m = rep_mackey(dom.clone()).unwrap();
        let top = dom.top();
        assert_eq!(m.action_basis(top, 0).unwrap(), &Matrix::from_ints(&[vec![1, 1], vec![1, 1]]));
        let t = crate::burnside::theta(dom.ring(top)).unwrap();
        let th = m.act(top, &t).unwrap();
        assert_eq!(th.to_rationals().unwrap(), vec![vec![q(1, 2), q(-1, 2)], vec![q(-1, 2), q(1, 2)]]);
        let r = artin_defect(&m, top).unwrap();
        assert_eq!((r.theta_dim(), r.defect_dim()), (1, 1));
        assert!(r.verdict);
    }

    #[test]
    fn trivial_group_defect_is_everything() {
        let dom = MackeyDomain::new(FiniteGroup::cyclic(1).unwrap()).unwrap();
        let r = artin_defect(&rep_mackey(dom).unwrap(), 0).unwrap();
        assert_eq!((r.theta_dim(), r.defect_dim()), (1, 1));
    }

    #[test]
    fn rep_functor_axioms() {
        for desc in [
            GroupDescriptor::Cyclic { n: 6 },
            GroupDescriptor::Perm { degree: 3, gens: vec![vec![1, 0, 2], vec![1, 2, 0]] },
            GroupDescriptor::Perm { degree: 4, gens: vec![vec![1, 0, 3, 2], vec![2, 3, 0, 1]] },
        ] {
            let m = rep_mackey(MackeyDomain::new(FiniteGroup::build(&desc).unwrap()).unwrap()).unwrap();
            m.validate().unwrap();
        }
    }

    #[test]
    fn theta_part_is_a_line() {
        for n in 1..=12 {
            let r = theta_k0_check(n).unwrap();
            assert_eq!(r.dim(), 1, "n={n}");
            assert!(r.aut_trivial);
        }
    }

    #[test]
    fn s3_noncyclic_defect_vanishes() {
        let g = FiniteGroup::build(&GroupDescriptor::Perm { degree: 3, gens: vec![vec![1, 0, 2], vec![1, 2, 0]] })
            .unwrap();
        let dom = MackeyDomain::new(g).unwrap();
        let m = rep_mackey(dom.clone()).unwrap();
        let r = artin_defect(&m, dom.top()).unwrap();
        assert_eq!(r.defect_dim(), 0);
        assert!(r.verdict);
    }
}
