use serde::{Deserialize, Serialize};

use super::dennis::hh0_burnside_action;
use super::projective::{hs_trace, induced_projectives, subgroup_label};
use crate::burnside::{theta, theta_image, MackeyDomain};
use crate::exactla::{rank, to_dense, to_sparse, Field, Matrix, Rational, Scalar, SparseVec, Subspace};
use crate::grp::{weyl, FiniteGroup, GroupRingMatrix, SubgroupLattice};
use crate::rep::{induce, k0_cyclic, k0_group, ClassFunction};
use crate::Result;

/// Contribution of one conjugacy class of cyclic subgroups `C`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ChernRow {
    pub subgroup: String,
    pub order: usize,
    pub weyl_order: usize,
    pub k0_theta: usize,
    pub k0_coinvariants: usize,
    pub hh_theta: usize,
    pub hh_coinvariants: usize,
    /// `W_G C`-orbits on the generators of `C`, counted directly.
    pub generator_orbits: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ChernReport {
    pub group_order: usize,
    pub rows: Vec<ChernRow>,
    pub k0_total: usize,
    pub k0_dim: usize,
    pub k0_assembly_rank: usize,
    pub hh_total: usize,
    pub orbit_total: usize,
    pub num_classes: usize,
    pub hh_assembly_rank: usize,
    /// Induction then trace equals trace then induction on every θ-part.
    pub square_commutes: bool,
}

impl ChernReport {
    pub fn part_a(&self) -> bool {
        self.k0_total == self.k0_dim && self.k0_assembly_rank == self.k0_dim
    }

    pub fn part_b(&self) -> bool {
        self.hh_total == self.num_classes
            && self.orbit_total == self.num_classes
            && self.hh_assembly_rank == self.num_classes
    }

    pub fn verdict(&self) -> bool {
        self.part_a() && self.part_b() && self.square_commutes
    }
}

fn rational(s: &Scalar) -> Rational {
    s.as_rational().expect("rational coefficients").clone()
}

fn coinvariant_dim(v: &Subspace, actions: &[Matrix]) -> usize {
    let moved: Vec<SparseVec> = actions
        .iter()
        .flat_map(|a| v.basis().iter().map(move |x| a.apply(x)).zip(v.basis()))
        .map(|(ax, x)| {
            let diff: Vec<Scalar> = to_dense(&ax, v.ambient(), v.field())
                .iter()
                .zip(to_dense(x, v.ambient(), v.field()))
                .map(|(a, b)| a - &b)
                .collect();
            to_sparse(&diff)
        })
        .collect();
    v.dim() - Subspace::span(v.field().clone(), v.ambient(), &moved).dim()
}

/// Dimension bookkeeping and the commuting square of the equivariant
/// Chern character for a finite group, where only degree zero contributes.
pub fn chern_finite_check(g: &FiniteGroup) -> Result<ChernReport> {
    let lattice = SubgroupLattice::new(g)?;
    let n_cls = g.num_classes();
    let mut rows = Vec::new();
    let mut k0_images: Vec<SparseVec> = Vec::new();
    let mut hh_images: Vec<SparseVec> = Vec::new();
    let mut square = true;
    for c in lattice.cyclic_classes() {
        let rec = lattice.representative(c);
        let elems = rec.elements().to_vec();
        let (sub, _) = g.subgroup_as_group(&elems)?;
        let domain = MackeyDomain::new(sub)?;
        let top = domain.top();
        let ring = domain.ring(top);
        let cc = ring.group();
        let k0 = k0_cyclic(cc)?;
        let wd = weyl(g, rec)?;
        // local permutations of C from the Weyl action
        let perms: Vec<Vec<usize>> = wd
            .action
            .iter()
            .map(|a| a.images.iter().map(|y| elems.binary_search(y).expect("image in C")).collect())
            .collect();

        let th = theta(ring)?;
        let m = crate::rep::rep_mackey(domain.clone())?;
        let v = theta_image(&m, top)?;
        let k0_actions = perms
            .iter()
            .map(|p| {
                let cols: Vec<SparseVec> = k0
                    .basis()
                    .iter()
                    .map(|f| {
                        let pulled: ClassFunction =
                            cc.classes().iter().map(|cls| f[cc.class_of(p[cls[0]])].clone()).collect();
                        let coords = k0.coordinates(&pulled)?;
                        Ok(to_sparse(&coords.into_iter().map(Scalar::from).collect::<Vec<_>>()))
                    })
                    .collect::<Result<_>>()?;
                Matrix::from_columns(Field::Rational, k0.dim(), &cols)
            })
            .collect::<Result<Vec<_>>>()?;
        let u = Subspace::column_space(&hh0_burnside_action(&th)?);
        let hh_actions = perms
            .iter()
            .map(|p| {
                let t = cc.classes().iter().enumerate().map(|(k, cls)| (cc.class_of(p[cls[0]]), k, Field::Rational.one()));
                Matrix::from_triplets(Field::Rational, cc.num_classes(), cc.num_classes(), t.collect::<Vec<_>>())
            })
            .collect::<Result<Vec<_>>>()?;

        let gens: Vec<usize> = (0..cc.order()).filter(|&x| cc.element_order(x) == cc.order()).collect();
        let mut seen = vec![false; cc.order()];
        let mut orbits = 0;
        for &x in &gens {
            if !seen[x] {
                orbits += 1;
                for p in &perms {
                    seen[p[x]] = true;
                }
            }
        }

        // assembly maps and the square
        let idems = induced_projectives(cc)?;
        for x in v.basis() {
            let coeffs: Vec<Rational> = to_dense(x, k0.dim(), &Field::Rational).iter().map(rational).collect();
            let f: ClassFunction = (0..cc.num_classes())
                .map(|k| k0.basis().iter().zip(&coeffs).map(|(chi, a)| &chi[k] * a).sum())
                .collect();
            let induced = induce(cc, g, &elems, &f)?;
            k0_images.push(to_sparse(&induced.iter().cloned().map(Scalar::from).collect::<Vec<_>>()));

            let mut local = vec![Rational::zero(); cc.num_classes()];
            let mut global = vec![Rational::zero(); n_cls];
            for (e, a) in idems.iter().zip(&coeffs) {
                for (k, t) in hs_trace(e).iter().enumerate() {
                    local[k] += &(t * a);
                }
                let pushed = e.matrix().get(0, 0).push_forward(&elems, g.order());
                let pe = super::ProjectiveIdem::new(g, GroupRingMatrix::scalar(pushed), e.label())?;
                for (k, t) in hs_trace(&pe).iter().enumerate() {
                    global[k] += &(t * a);
                }
            }
            let mut via_c = vec![Rational::zero(); n_cls];
            for (k, t) in local.iter().enumerate() {
                via_c[g.class_of(elems[cc.classes()[k][0]])] += t;
            }
            let local_vec = to_sparse(&local.iter().cloned().map(Scalar::from).collect::<Vec<_>>());
            square &= via_c == global && u.contains(&local_vec);
        }
        for y in u.basis() {
            let mut pushed = vec![Scalar::from(Rational::zero()); n_cls];
            for (k, a) in y {
                let t = g.class_of(elems[cc.classes()[*k][0]]);
                pushed[t] = &pushed[t] + a;
            }
            hh_images.push(to_sparse(&pushed));
        }

        rows.push(ChernRow {
            subgroup: subgroup_label(g, &elems),
            order: elems.len(),
            weyl_order: wd.weyl.order(),
            k0_theta: v.dim(),
            k0_coinvariants: coinvariant_dim(&v, &k0_actions),
            hh_theta: u.dim(),
            hh_coinvariants: coinvariant_dim(&u, &hh_actions),
            generator_orbits: orbits,
        });
    }
    let span_rank = |vs: &[SparseVec]| rank(&Matrix::from_columns(Field::Rational, n_cls, vs).expect("rational"));
    Ok(ChernReport {
        group_order: g.order(),
        k0_total: rows.iter().map(|r| r.k0_coinvariants).sum(),
        k0_dim: k0_group(g)?.dim(),
        k0_assembly_rank: span_rank(&k0_images),
        hh_total: rows.iter().map(|r| r.hh_coinvariants).sum(),
        orbit_total: rows.iter().map(|r| r.generator_orbits).sum(),
        num_classes: n_cls,
        hh_assembly_rank: span_rank(&hh_images),
        square_commutes: square,
        rows,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::grp::GroupDescriptor;

    #[test]
    fn cyclic_groups() {
        for n in [1, 4, 6, 12] {
            let r = chern_finite_check(&FiniteGroup::cyclic(n).unwrap()).unwrap();
            let divisors = (1..=n).filter(|d| n % d == 0).count();
            assert_eq!(r.k0_total, divisors);
            assert_eq!(r.hh_total, n);
            assert!(r.verdict(), "{r:?}");
        }
    }

    #[test]
    fn s3_orbits() {
        let g = FiniteGroup::build(&GroupDescriptor::Perm { degree: 3, gens: vec![vec![1, 0, 2], vec![1, 2, 0]] })
            .unwrap();
        let r = chern_finite_check(&g).unwrap();
        assert_eq!((r.k0_total, r.k0_dim), (3, 3));
        let orbits: Vec<usize> = r.rows.iter().map(|x| x.generator_orbits).collect();
        assert_eq!(orbits, vec![1, 1, 1]);
        assert!(r.verdict());
    }

    #[test]
    fn d4_totals() {
        let g = FiniteGroup::build(&GroupDescriptor::Perm { degree: 4, gens: vec![vec![1, 2, 3, 0], vec![3, 2, 1, 0]] })
            .unwrap();
        let r = chern_finite_check(&g).unwrap();
        assert_eq!(r.hh_total, 5);
        assert!(r.verdict());
    }
}
