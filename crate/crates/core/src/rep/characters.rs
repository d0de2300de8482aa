use num_integer::Integer;
use serde::{Deserialize, Serialize};

use crate::exactla::{solve, to_sparse, Field, Matrix, Rational, Scalar, Subspace};
use crate::grp::{FiniteGroup, SubgroupLattice};
use crate::{Error, Result};

/// A class function as its values on the conjugacy classes of a group, in
/// the group's class order.
pub type ClassFunction = Vec<Rational>;

pub(crate) fn euler_phi(n: u64) -> u64 {
    let (mut n, mut out, mut p) = (n, n, 2);
    while p * p <= n {
        if n % p == 0 {
            while n % p == 0 {
                n /= p;
            }
            out -= out / p;
        }
        p += 1;
    }
    if n > 1 {
        out -= out / n;
    }
    out
}

pub(crate) fn moebius(n: u64) -> i64 {
    let (mut n, mut out, mut p) = (n, 1, 2);
    while p * p <= n {
        if n % p == 0 {
            n /= p;
            if n % p == 0 {
                return 0;
            }
            out = -out;
        }
        p += 1;
    }
    if n > 1 {
        out = -out;
    }
    out
}

/// Ramanujan sum `c_d(j) = Σ_{t ∈ (Z/d)^×} ζ_d^{tj}`, the value at `x^j` of
/// the rational irreducible character of a cyclic group that factors
/// faithfully through a quotient of order `d`.
pub fn ramanujan_sum(d: u64, j: u64) -> i64 {
    let g = d.gcd(&j);
    let q = d / g;
    moebius(q) * (euler_phi(d) / euler_phi(q)) as i64
}

/// `j` such that `x = generator^j`, for every element of a cyclic group.
pub(crate) fn discrete_logs(group: &FiniteGroup) -> Result<(usize, Vec<usize>)> {
    let x = group
        .cyclic_generator()
        .ok_or_else(|| Error::Domain(format!("group of order {} is not cyclic", group.order())))?;
    let mut log = vec![0; group.order()];
    let mut y = 0;
    for j in 0..group.order() {
        log[y] = j;
        y = group.mul(y, x);
    }
    Ok((x, log))
}

pub fn class_sizes(group: &FiniteGroup) -> Vec<usize> {
    group.classes().iter().map(Vec::len).collect()
}

/// `⟨f, g⟩ = |G|^-1 Σ_x f(x) g(x^-1)`.
pub fn inner_product(group: &FiniteGroup, f: &[Rational], g: &[Rational]) -> Rational {
    let total: Rational = group
        .classes()
        .iter()
        .enumerate()
        .map(|(c, cls)| {
            let inv = group.class_of(group.inv(cls[0]));
            &(&f[c] * &g[inv]) * &Rational::from(cls.len())
        })
        .sum();
    &total / &Rational::from(group.order())
}

/// Values of a class function on every element.
pub fn on_elements(group: &FiniteGroup, f: &[Rational]) -> Vec<Rational> {
    (0..group.order()).map(|x| f[group.class_of(x)].clone()).collect()
}

fn check_len(group: &FiniteGroup, f: &[Rational]) -> Result<()> {
    if f.len() != group.num_classes() {
        return Err(Error::DimensionMismatch { expected: group.num_classes(), found: f.len() });
    }
    Ok(())
}

/// `Ind_H^G f (x) = |H|^-1 Σ_{y ∈ G, yxy^-1 ∈ H} f(yxy^-1)`, with `H` given
/// as a group and its embedding into `G`.
pub fn induce(sub: &FiniteGroup, sup: &FiniteGroup, embed: &[usize], f: &[Rational]) -> Result<ClassFunction> {
    check_len(sub, f)?;
    let mut local = vec![usize::MAX; sup.order()];
    for (i, &y) in embed.iter().enumerate() {
        local[y] = i;
    }
    Ok(sup
        .classes()
        .iter()
        .map(|cls| {
            let x = cls[0];
            let s: Rational = (0..sup.order())
                .map(|y| local[sup.conjugate(y, x)])
                .filter(|&z| z != usize::MAX)
                .map(|z| f[sub.class_of(z)].clone())
                .sum();
            &s / &Rational::from(sub.order())
        })
        .collect())
}

pub fn restrict(sub: &FiniteGroup, sup: &FiniteGroup, embed: &[usize], f: &[Rational]) -> Result<ClassFunction> {
    check_len(sup, f)?;
    Ok(sub.classes().iter().map(|cls| f[sup.class_of(embed[cls[0]])].clone()).collect())
}

/// Where a distinguished basis of class functions came from.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Provenance {
    CyclicCharacters,
    InducedSpan,
}

/// `K_0(QG) ⊗ Q` inside the class functions of `G`.
#[derive(Clone, Debug)]
pub struct ClassFunctionSpace {
    group: FiniteGroup,
    basis: Vec<ClassFunction>,
    labels: Vec<String>,
    span: Subspace,
    provenance: Provenance,
}

impl ClassFunctionSpace {
    fn new(group: FiniteGroup, basis: Vec<ClassFunction>, labels: Vec<String>, provenance: Provenance) -> Self {
        let vecs: Vec<Vec<Scalar>> = basis.iter().map(|f| f.iter().cloned().map(Scalar::from).collect()).collect();
        let span = Subspace::span_dense(Field::Rational, group.num_classes(), &vecs);
        ClassFunctionSpace { group, basis, labels, span, provenance }
    }

    pub fn group(&self) -> &FiniteGroup {
        &self.group
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[ClassFunction] {
        &self.basis
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn span(&self) -> &Subspace {
        &self.span
    }

    pub fn provenance(&self) -> Provenance {
        self.provenance
    }

    pub fn basis_matrix(&self) -> Matrix {
        let cols: Vec<_> = self.basis.iter().map(|f| to_sparse(&scalars(f))).collect();
        Matrix::from_columns(Field::Rational, self.group.num_classes(), &cols).expect("rational columns")
    }

    /// Coordinates of `f` in the distinguished basis.
    pub fn coordinates(&self, f: &[Rational]) -> Result<Vec<Rational>> {
        check_len(&self.group, f)?;
        let sol = solve(&self.basis_matrix(), &to_sparse(&scalars(f)))?
            .ok_or_else(|| Error::Validation("class function outside the span".into()))?;
        Ok(sol.iter().map(|s| s.as_rational().expect("rational").clone()).collect())
    }

    pub fn contains(&self, f: &[Rational]) -> bool {
        self.span.contains(&to_sparse(&scalars(f)))
    }
}

pub(crate) fn scalars(f: &[Rational]) -> Vec<Scalar> {
    f.iter().cloned().map(Scalar::from).collect()
}

/// Characters of the rational irreducibles of a cyclic group, one for each
/// subgroup `D` (in lattice order): the irreducible with kernel `D`.
pub fn k0_cyclic(group: &FiniteGroup) -> Result<ClassFunctionSpace> {
    let (_, log) = discrete_logs(group)?;
    let lattice = SubgroupLattice::new(group)?;
    let m = group.order();
    let mut basis = Vec::new();
    let mut labels = Vec::new();
    for d in lattice.subgroups() {
        let q = (m / d.order()) as u64;
        // abelian: classes are singletons in element order
        let chi: ClassFunction = group
            .classes()
            .iter()
            .map(|cls| Rational::from(ramanujan_sum(q, log[cls[0]] as u64)))
            .collect();
        basis.push(chi);
        labels.push(format!("chi[ker {}]", d.order()));
    }
    Ok(ClassFunctionSpace::new(group.clone(), basis, labels, Provenance::CyclicCharacters))
}

/// `K_0(QG) ⊗ Q` as the span of characters induced from cyclic subgroups.
/// Cyclic groups get their irreducible characters instead.
pub fn k0_group(group: &FiniteGroup) -> Result<ClassFunctionSpace> {
    if group.is_cyclic() {
        return k0_cyclic(group);
    }
    let lattice = SubgroupLattice::new(group)?;
    let mut induced = Vec::new();
    for c in lattice.cyclic_classes() {
        let (sub, embed) = group.subgroup_as_group(lattice.representative(c).elements())?;
        for chi in k0_cyclic(&sub)?.basis() {
            induced.push(scalars(&induce(&sub, group, &embed, chi)?));
        }
    }
    let span = Subspace::span_dense(Field::Rational, group.num_classes(), &induced);
    let basis: Vec<ClassFunction> = span
        .basis()
        .iter()
        .map(|v| {
            crate::exactla::to_dense(v, group.num_classes(), &Field::Rational)
                .iter()
                .map(|s| s.as_rational().expect("rational").clone())
                .collect()
        })
        .collect();
    let labels = (0..basis.len()).map(|i| format!("v{i}")).collect();
    Ok(ClassFunctionSpace { group: group.clone(), basis, labels, span, provenance: Provenance::InducedSpan })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactla::cyclotomic_root;
    use crate::grp::GroupDescriptor;

    fn perm(degree: usize, gens: Vec<Vec<usize>>) -> FiniteGroup {
        FiniteGroup::build(&GroupDescriptor::Perm { degree, gens }).unwrap()
    }

    fn s3() -> FiniteGroup {
        perm(3, vec![vec![1, 0, 2], vec![1, 2, 0]])
    }

    fn d4() -> FiniteGroup {
        perm(4, vec![vec![1, 2, 3, 0], vec![3, 2, 1, 0]])
    }

    /// Sum of primitive d-th roots of unity raised to the j, in Q(ζ_d).
    fn root_sum_oracle(d: u64, j: u64) -> Rational {
        let (field, z) = cyclotomic_root(d).unwrap();
        let mut acc = field.zero();
        for t in (1..=d).filter(|t| t.gcd(&d) == 1) {
            acc = &acc + &z.pow(((t * j) % d) as u32);
        }
        acc.as_rational().expect("rational sum").clone()
    }

    /// `Ind f(x) = Σ_{r ∈ G/H, r^-1 x r ∈ H} f(r^-1 x r)`.
    fn coset_sum_oracle(sub: &FiniteGroup, sup: &FiniteGroup, embed: &[usize], f: &[Rational]) -> ClassFunction {
        let mut reps = Vec::new();
        let mut seen = vec![false; sup.order()];
        for r in 0..sup.order() {
            if !seen[r] {
                embed.iter().for_each(|&h| seen[sup.mul(r, h)] = true);
                reps.push(r);
            }
        }
        sup.classes()
            .iter()
            .map(|cls| {
                reps.iter()
                    .filter_map(|&r| {
                        let y = sup.conjugate(sup.inv(r), cls[0]);
                        embed.iter().position(|&e| e == y)
                    })
                    .map(|z| f[sub.class_of(z)].clone())
                    .sum()
            })
            .collect()
    }

    #[test]
    fn ramanujan_matches_root_sums() {
        for d in 1..=12 {
            for j in 0..d {
                assert_eq!(Rational::from(ramanujan_sum(d, j)), root_sum_oracle(d, j), "d={d} j={j}");
            }
        }
    }

    #[test]
    fn small_cyclic_k0() {
        let k1 = k0_cyclic(&FiniteGroup::cyclic(1).unwrap()).unwrap();
        assert_eq!(k1.basis(), &[vec![Rational::one()]]);
        let k2 = k0_cyclic(&FiniteGroup::cyclic(2).unwrap()).unwrap();
        let as_ints: Vec<Vec<i64>> = k2.basis().iter().map(|f| f.iter().map(|x| x.to_i64().unwrap()).collect()).collect();
        assert_eq!(as_ints, vec![vec![1, -1], vec![1, 1]]);
        assert_eq!(k0_cyclic(&FiniteGroup::cyclic(6).unwrap()).unwrap().dim(), 4);
        assert!(k0_cyclic(&s3()).is_err());
    }

    #[test]
    fn cyclic_characters_are_orthogonal() {
        let g = FiniteGroup::cyclic(12).unwrap();
        let k = k0_cyclic(&g).unwrap();
        for (i, f) in k.basis().iter().enumerate() {
            for (j, h) in k.basis().iter().enumerate() {
                let ip = inner_product(&g, f, h);
                if i == j {
                    // a rational irreducible of C_m splits into phi(d) complex ones
                    assert_eq!(ip, f[0]);
                } else {
                    assert!(ip.is_zero());
                }
            }
        }
    }

    #[test]
    fn induction_from_trivial_subgroup_of_c2() {
        let g = FiniteGroup::cyclic(2).unwrap();
        let (e, embed) = g.subgroup_as_group(&[0]).unwrap();
        let reg = induce(&e, &g, &embed, &[Rational::one()]).unwrap();
        assert_eq!(reg, vec![Rational::from(2), Rational::zero()]);
        let f = vec![Rational::from(5), Rational::from(-3)];
        assert_eq!(restrict(&e, &g, &embed, &f).unwrap(), vec![Rational::from(5)]);
    }

    #[test]
    fn induction_matches_coset_sums_and_frobenius() {
        for g in [s3(), d4(), FiniteGroup::cyclic(6).unwrap()] {
            let lat = SubgroupLattice::new(&g).unwrap();
            let kg = k0_group(&g).unwrap();
            for h in lat.subgroups() {
                let (sub, embed) = g.subgroup_as_group(h.elements()).unwrap();
                let fs: Vec<ClassFunction> = if sub.is_cyclic() {
                    k0_cyclic(&sub).unwrap().basis().to_vec()
                } else {
                    k0_group(&sub).unwrap().basis().to_vec()
                };
                for f in &fs {
                    let ind = induce(&sub, &g, &embed, f).unwrap();
                    assert_eq!(ind, coset_sum_oracle(&sub, &g, &embed, f));
                    for chi in kg.basis() {
                        let res = restrict(&sub, &g, &embed, chi).unwrap();
                        assert_eq!(inner_product(&g, &ind, chi), inner_product(&sub, f, &res));
                    }
                }
            }
        }
    }

    #[test]
    fn k0_group_dimensions() {
        assert_eq!(k0_group(&s3()).unwrap().dim(), 3);
        assert_eq!(k0_group(&d4()).unwrap().dim(), 5);
        assert_eq!(k0_group(&FiniteGroup::cyclic(8).unwrap()).unwrap().dim(), 4);
        let q8 = perm(8, vec![vec![1, 4, 3, 6, 5, 0, 7, 2], vec![2, 7, 4, 1, 6, 3, 0, 5]]);
        let k = k0_group(&q8).unwrap();
        assert_eq!(k.dim(), SubgroupLattice::new(&q8).unwrap().cyclic_classes().len());
        assert_eq!(k.provenance(), Provenance::InducedSpan);
    }

    #[test]
    fn coordinates_round_trip() {
        let k = k0_cyclic(&FiniteGroup::cyclic(6).unwrap()).unwrap();
        let f: ClassFunction = (0..6).map(|i| Rational::from(i as i64 % 2)).collect();
        assert!(!k.contains(&f) || k.coordinates(&f).is_ok());
        let sum: ClassFunction = (0..6).map(|c| &k.basis()[0][c] + &k.basis()[3][c]).collect();
        let coords = k.coordinates(&sum).unwrap();
        assert_eq!(coords, vec![Rational::one(), Rational::zero(), Rational::zero(), Rational::one()]);
    }

    #[test]
    fn arithmetic_helpers() {
        assert_eq!((1..=12).map(euler_phi).collect::<Vec<_>>(), vec![1, 1, 2, 2, 4, 2, 6, 4, 6, 4, 10, 4]);
        assert_eq!((1..=12).map(moebius).collect::<Vec<_>>(), vec![1, -1, -1, 0, -1, 1, -1, 0, 0, 1, -1, 0]);
    }
}
