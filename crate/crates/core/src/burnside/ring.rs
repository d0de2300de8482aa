use std::fmt;
use std::sync::Arc;

use crate::exactla::{Matrix, Rational};
use crate::grp::{FiniteGroup, SubgroupLattice, SubgroupRec};
use crate::{Error, Result};

/// Marks `m[H][K] = |(G/K)^H|` indexed by subgroup classes in lattice order
/// (increasing order). Rows are `H`, columns are `K`; the matrix is upper
/// triangular and column `K` is the mark vector of `[G/K]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TableOfMarks {
    orders: Vec<usize>,
    representatives: Vec<Vec<usize>>,
    marks: Vec<Vec<u64>>,
}

impl TableOfMarks {
    pub fn new(group: &FiniteGroup, lattice: &SubgroupLattice) -> Self {
        let reps: Vec<&SubgroupRec> = (0..lattice.classes().len()).map(|c| lattice.representative(c)).collect();
        let n = reps.len();
        let mut marks = vec![vec![0u64; n]; n];
        for (i, h) in reps.iter().enumerate() {
            for (j, k) in reps.iter().enumerate().skip(i) {
                if k.order() % h.order() != 0 {
                    continue;
                }
                // gK is fixed by H iff g^-1 H g <= K
                let hits = (0..group.order())
                    .filter(|&g| h.elements().iter().all(|&x| k.contains(group.conjugate(group.inv(g), x))))
                    .count();
                marks[i][j] = (hits / k.order()) as u64;
            }
        }
        TableOfMarks {
            orders: reps.iter().map(|r| r.order()).collect(),
            representatives: reps.iter().map(|r| r.elements().to_vec()).collect(),
            marks,
        }
    }

    pub fn len(&self) -> usize {
        self.orders.len()
    }

    pub fn is_empty(&self) -> bool {
        self.orders.is_empty()
    }

    pub fn orders(&self) -> &[usize] {
        &self.orders
    }

    pub fn representatives(&self) -> &[Vec<usize>] {
        &self.representatives
    }

    pub fn entry(&self, h: usize, k: usize) -> u64 {
        self.marks[h][k]
    }

    pub fn rows(&self) -> &[Vec<u64>] {
        &self.marks
    }

    pub fn to_matrix(&self) -> Matrix {
        let rows: Vec<Vec<i64>> = self.marks.iter().map(|r| r.iter().map(|&x| x as i64).collect()).collect();
        Matrix::from_ints(&rows)
    }

    /// Mark vector of a coefficient vector in the `[G/K]` basis.
    pub fn apply(&self, coeffs: &[Rational]) -> Vec<Rational> {
        (0..self.len())
            .map(|h| {
                (h..self.len())
                    .filter(|&k| self.marks[h][k] != 0 && !coeffs[k].is_zero())
                    .map(|k| &coeffs[k] * &Rational::from(self.marks[h][k] as i64))
                    .sum()
            })
            .collect()
    }

    /// Inverse of [`apply`](Self::apply) by back substitution.
    pub fn solve(&self, marks: &[Rational]) -> Vec<Rational> {
        let n = self.len();
        let mut x = vec![Rational::zero(); n];
        for k in (0..n).rev() {
            let mut acc = marks[k].clone();
            for (xj, &m) in x.iter().zip(&self.marks[k]).skip(k + 1) {
                if m != 0 {
                    acc -= &(xj * &Rational::from(m as i64));
                }
            }
            x[k] = &acc / &Rational::from(self.marks[k][k] as i64);
        }
        x
    }
}

/// `A(G) ⊗ Q` for one group, with basis the transitive sets `[G/K]`.
#[derive(Debug)]
pub struct BurnsideRing {
    group: FiniteGroup,
    lattice: SubgroupLattice,
    marks: TableOfMarks,
    labels: Vec<String>,
}

impl BurnsideRing {
    pub fn new(group: FiniteGroup) -> Result<Arc<Self>> {
        let lattice = SubgroupLattice::new(&group)?;
        let marks = TableOfMarks::new(&group, &lattice);
        let labels = class_labels(&group, &lattice);
        Ok(Arc::new(BurnsideRing { group, lattice, marks, labels }))
    }

    pub fn cyclic(n: usize) -> Result<Arc<Self>> {
        Self::new(FiniteGroup::cyclic(n)?)
    }

    pub fn group(&self) -> &FiniteGroup {
        &self.group
    }

    pub fn lattice(&self) -> &SubgroupLattice {
        &self.lattice
    }

    pub fn marks(&self) -> &TableOfMarks {
        &self.marks
    }

    pub fn rank(&self) -> usize {
        self.marks.len()
    }

    /// Class index of a subgroup given by its sorted elements.
    pub fn class_of_subgroup(&self, elements: &[usize]) -> Option<usize> {
        self.lattice.index_of(elements).map(|i| self.lattice.class_of(i))
    }

    /// Readable name of the basis element `[G/K]`, e.g. `C/e` or `G/C2`.
    pub fn label(&self, k: usize) -> &str {
        &self.labels[k]
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }
}

fn class_labels(group: &FiniteGroup, lattice: &SubgroupLattice) -> Vec<String> {
    let ambient = if group.is_cyclic() { "C" } else { "G" };
    let n = lattice.classes().len();
    let names: Vec<String> = (0..n)
        .map(|c| {
            let r = lattice.representative(c);
            if r.order() == group.order() {
                ambient.to_string()
            } else if r.order() == 1 {
                "e".to_string()
            } else if r.is_cyclic() {
                format!("C{}", r.order())
            } else {
                format!("H{}", r.order())
            }
        })
        .collect();
    names
        .iter()
        .enumerate()
        .map(|(c, name)| {
            let same: Vec<usize> = (0..n).filter(|&d| names[d] == *name).collect();
            let suffix = if same.len() > 1 {
                let pos = same.iter().position(|&d| d == c).unwrap();
                char::from(b'a' + pos as u8).to_string()
            } else {
                String::new()
            };
            format!("{ambient}/{name}{suffix}")
        })
        .collect()
}

/// An element of `A(G) ⊗ Q` in the basis `[G/K]`.
#[derive(Clone, Debug)]
pub struct BurnsideElem {
    ring: Arc<BurnsideRing>,
    coeffs: Vec<Rational>,
}

impl PartialEq for BurnsideElem {
    fn eq(&self, other: &Self) -> bool {
        same_ring(&self.ring, &other.ring) && self.coeffs == other.coeffs
    }
}

fn same_ring(a: &Arc<BurnsideRing>, b: &Arc<BurnsideRing>) -> bool {
    Arc::ptr_eq(a, b) || a.group == b.group
}

impl BurnsideElem {
    pub fn new(ring: &Arc<BurnsideRing>, coeffs: Vec<Rational>) -> Result<Self> {
        if coeffs.len() != ring.rank() {
            return Err(Error::DimensionMismatch { expected: ring.rank(), found: coeffs.len() });
        }
        Ok(BurnsideElem { ring: ring.clone(), coeffs })
    }

    pub fn zero(ring: &Arc<BurnsideRing>) -> Self {
        BurnsideElem { ring: ring.clone(), coeffs: vec![Rational::zero(); ring.rank()] }
    }

    /// `[G/K]` for the subgroup class `k`.
    pub fn basis(ring: &Arc<BurnsideRing>, k: usize) -> Self {
        let mut x = Self::zero(ring);
        x.coeffs[k] = Rational::one();
        x
    }

    /// `[G/G]`, the one-point set.
    pub fn one(ring: &Arc<BurnsideRing>) -> Self {
        Self::basis(ring, ring.rank() - 1)
    }

    pub fn from_marks(ring: &Arc<BurnsideRing>, marks: &[Rational]) -> Result<Self> {
        if marks.len() != ring.rank() {
            return Err(Error::DimensionMismatch { expected: ring.rank(), found: marks.len() });
        }
        Ok(BurnsideElem { ring: ring.clone(), coeffs: ring.marks.solve(marks) })
    }

    pub fn ring(&self) -> &Arc<BurnsideRing> {
        &self.ring
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn marks(&self) -> Vec<Rational> {
        self.ring.marks.apply(&self.coeffs)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Rational::is_zero)
    }

    fn check(&self, other: &Self) -> Result<()> {
        if same_ring(&self.ring, &other.ring) {
            Ok(())
        } else {
            Err(Error::DescriptorMismatch {
                left: format!("A(G) of order {}", self.ring.group.order()),
                right: format!("A(G) of order {}", other.ring.group.order()),
            })
        }
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        let coeffs = self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a + b).collect();
        Ok(BurnsideElem { ring: self.ring.clone(), coeffs })
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        let coeffs = self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a - b).collect();
        Ok(BurnsideElem { ring: self.ring.clone(), coeffs })
    }

    pub fn scale(&self, c: &Rational) -> Self {
        BurnsideElem { ring: self.ring.clone(), coeffs: self.coeffs.iter().map(|a| a * c).collect() }
    }

    /// Product through the marks isomorphism.
    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        let m: Vec<Rational> = self.marks().iter().zip(other.marks()).map(|(a, b)| a * &b).collect();
        Self::from_marks(&self.ring, &m)
    }
}

impl fmt::Display for BurnsideElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for k in (0..self.coeffs.len()).rev() {
            let c = &self.coeffs[k];
            if c.is_zero() {
                continue;
            }
            let sign = if c.signum() < 0 { "-" } else { "+" };
            if first {
                if sign == "-" {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            first = false;
            let a = c.abs();
            if !a.is_one() {
                write!(f, "{a}")?;
            }
            write!(f, "[{}]", self.ring.label(k))?;
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

/// `θ_C`: the idempotent of `A(C) ⊗ Q` whose marks are `δ_(C)`.
pub fn theta(ring: &Arc<BurnsideRing>) -> Result<BurnsideElem> {
    if !ring.group.is_cyclic() {
        return Err(Error::Domain(format!("theta needs a cyclic group, got order {} non-cyclic", ring.group.order())));
    }
    let n = ring.rank();
    let mut delta = vec![Rational::zero(); n];
    delta[n - 1] = Rational::one();
    BurnsideElem::from_marks(ring, &delta)
}

/// An inclusion `D <= C` of groups together with the induced maps between
/// their Burnside rings.
#[derive(Clone, Debug)]
pub struct Inclusion {
    sub: Arc<BurnsideRing>,
    sup: Arc<BurnsideRing>,
    embed: Vec<usize>,
    class_map: Vec<usize>,
}

impl Inclusion {
    /// `embed[x]` is the image in `sup` of the element `x` of `sub`.
    pub fn new(sub: Arc<BurnsideRing>, sup: Arc<BurnsideRing>, embed: Vec<usize>) -> Result<Self> {
        let (d, c) = (&sub.group, &sup.group);
        if embed.len() != d.order() || embed.iter().any(|&x| x >= c.order()) {
            return Err(Error::Validation("embedding has the wrong shape".into()));
        }
        let mut seen = vec![false; c.order()];
        for a in 0..d.order() {
            if std::mem::replace(&mut seen[embed[a]], true) {
                return Err(Error::Validation("embedding is not injective".into()));
            }
            for b in 0..d.order() {
                if embed[d.mul(a, b)] != c.mul(embed[a], embed[b]) {
                    return Err(Error::Validation("embedding is not a homomorphism".into()));
                }
            }
        }
        let class_map = sub
            .marks
            .representatives()
            .iter()
            .map(|rep| {
                let mut img: Vec<usize> = rep.iter().map(|&x| embed[x]).collect();
                img.sort_unstable();
                sup.class_of_subgroup(&img).expect("image of a subgroup is a subgroup")
            })
            .collect();
        Ok(Inclusion { sub, sup, embed, class_map })
    }

    /// The inclusion of a subgroup of `ring`'s group, with its own ring.
    pub fn of_subgroup(ring: &Arc<BurnsideRing>, h: &SubgroupRec) -> Result<Self> {
        let (g, embed) = ring.group.subgroup_as_group(h.elements())?;
        Self::new(BurnsideRing::new(g)?, ring.clone(), embed)
    }

    pub fn sub(&self) -> &Arc<BurnsideRing> {
        &self.sub
    }

    pub fn sup(&self) -> &Arc<BurnsideRing> {
        &self.sup
    }

    pub fn embed(&self) -> &[usize] {
        &self.embed
    }

    /// Class in `sup` of the image of each subgroup class of `sub`.
    pub fn class_map(&self) -> &[usize] {
        &self.class_map
    }

    pub fn index(&self) -> usize {
        self.sup.group.order() / self.sub.group.order()
    }

    fn check_sub(&self, x: &BurnsideElem) -> Result<()> {
        BurnsideElem::zero(&self.sub).check(x)
    }

    fn check_sup(&self, x: &BurnsideElem) -> Result<()> {
        BurnsideElem::zero(&self.sup).check(x)
    }

    /// `[D/E] ↦ [C/E]`.
    pub fn ind(&self, x: &BurnsideElem) -> Result<BurnsideElem> {
        self.check_sub(x)?;
        let mut out = BurnsideElem::zero(&self.sup);
        for (k, c) in x.coeffs.iter().enumerate() {
            out.coeffs[self.class_map[k]] += c;
        }
        Ok(out)
    }

    /// Restriction as restriction of the mark function.
    pub fn res(&self, x: &BurnsideElem) -> Result<BurnsideElem> {
        self.check_sup(x)?;
        let m = x.marks();
        let local: Vec<Rational> = self.class_map.iter().map(|&k| m[k].clone()).collect();
        BurnsideElem::from_marks(&self.sub, &local)
    }

    /// Restriction through the double coset decomposition
    /// `res [C/K] = Σ_{DgK} [D / D ∩ gKg^-1]`.
    pub fn res_double_coset(&self, x: &BurnsideElem) -> Result<BurnsideElem> {
        self.check_sup(x)?;
        let c = &self.sup.group;
        let mut local_of = vec![usize::MAX; c.order()];
        for (i, &y) in self.embed.iter().enumerate() {
            local_of[y] = i;
        }
        let mut out = BurnsideElem::zero(&self.sub);
        for (k, coef) in x.coeffs.iter().enumerate() {
            if coef.is_zero() {
                continue;
            }
            let kset = &self.sup.marks.representatives()[k];
            let mut covered = vec![false; c.order()];
            for g in 0..c.order() {
                if covered[g] {
                    continue;
                }
                for &d in &self.embed {
                    for &y in kset {
                        covered[c.mul(c.mul(d, g), y)] = true;
                    }
                }
                let mut meet: Vec<usize> = kset
                    .iter()
                    .map(|&y| c.conjugate(g, y))
                    .filter(|&z| local_of[z] != usize::MAX)
                    .map(|z| local_of[z])
                    .collect();
                meet.sort_unstable();
                let cls = self.sub.class_of_subgroup(&meet).expect("intersection is a subgroup");
                out.coeffs[cls] += coef;
            }
        }
        Ok(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::grp::GroupDescriptor;
    use proptest::prelude::*;

    fn q(n: i64, d: i64) -> Rational {
        Rational::new(n, d)
    }

    /// Counts cosets gK fixed by every element of H by listing the cosets.
    fn fixed_point_oracle(g: &FiniteGroup, h: &[usize], k: &[usize]) -> u64 {
        let mut cosets: Vec<Vec<usize>> = (0..g.order())
            .map(|x| {
                let mut c: Vec<usize> = k.iter().map(|&y| g.mul(x, y)).collect();
                c.sort_unstable();
                c
            })
            .collect();
        cosets.sort();
        cosets.dedup();
        cosets
            .iter()
            .filter(|c| {
                h.iter().all(|&a| {
                    let mut moved: Vec<usize> = c.iter().map(|&x| g.mul(a, x)).collect();
                    moved.sort_unstable();
                    &moved == *c
                })
            })
            .count() as u64
    }

    fn s3() -> FiniteGroup {
        FiniteGroup::build(&GroupDescriptor::Perm { degree: 3, gens: vec![vec![1, 0, 2], vec![1, 2, 0]] }).unwrap()
    }

    #[test]
    fn c2_marks() {
        let r = BurnsideRing::cyclic(2).unwrap();
        assert_eq!(r.marks().rows(), &[vec![2, 1], vec![0, 1]]);
        assert_eq!(BurnsideRing::cyclic(1).unwrap().marks().rows(), &[vec![1]]);
    }

    #[test]
    fn marks_match_fixed_points() {
        for g in [FiniteGroup::cyclic(6).unwrap(), s3()] {
            let r = BurnsideRing::new(g.clone()).unwrap();
            let t = r.marks();
            for i in 0..t.len() {
                for j in 0..t.len() {
                    let want = fixed_point_oracle(&g, &t.representatives()[i], &t.representatives()[j]);
                    assert_eq!(t.entry(i, j), want);
                }
            }
        }
    }

    #[test]
    fn s3_marks_of_c3_quotient() {
        let r = BurnsideRing::new(s3()).unwrap();
        assert_eq!(r.marks().orders(), &[1, 2, 3, 6]);
        let col: Vec<u64> = (0..4).map(|h| r.marks().entry(h, 2)).collect();
        assert_eq!(col, vec![2, 0, 2, 0]);
        // diagonal |N_G H| / |H|
        let diag: Vec<u64> = (0..4).map(|h| r.marks().entry(h, h)).collect();
        assert_eq!(diag, vec![6, 1, 2, 1]);
    }

    #[test]
    fn theta_c2() {
        let r = BurnsideRing::cyclic(2).unwrap();
        let t = theta(&r).unwrap();
        assert_eq!(t.coeffs(), &[q(-1, 2), q(1, 1)]);
        assert_eq!(t.to_string(), "[C/C] - 1/2[C/e]");
        assert_eq!(theta(&BurnsideRing::cyclic(1).unwrap()).unwrap().to_string(), "[C/C]");
    }

    #[test]
    fn theta_c6() {
        let r = BurnsideRing::cyclic(6).unwrap();
        let t = theta(&r).unwrap();
        assert_eq!(t.marks(), vec![q(0, 1), q(0, 1), q(0, 1), q(1, 1)]);
        assert_eq!(t.coeffs().iter().filter(|c| !c.is_zero()).count(), 4);
        assert_eq!(t.mul(&t).unwrap(), t);
    }

    #[test]
    fn theta_rejects_non_cyclic() {
        let r = BurnsideRing::new(s3()).unwrap();
        assert!(matches!(theta(&r), Err(Error::Domain(_))));
    }

    #[test]
    fn free_orbit_squared() {
        let r = BurnsideRing::cyclic(2).unwrap();
        let x = BurnsideElem::basis(&r, 0);
        let sq = x.mul(&x).unwrap();
        assert_eq!(sq.marks(), vec![q(4, 1), q(0, 1)]);
        assert_eq!(sq, x.scale(&q(2, 1)));
    }

    #[test]
    fn theta_identities() {
        for n in [1, 2, 3, 4, 5, 6, 7, 8, 12] {
            let c = BurnsideRing::cyclic(n).unwrap();
            let tc = theta(&c).unwrap();
            let mut total = BurnsideElem::zero(&c);
            for d in c.lattice().subgroups() {
                let inc = Inclusion::of_subgroup(&c, d).unwrap();
                let td = theta(inc.sub()).unwrap();
                if d.order() < n {
                    assert!(inc.res(&tc).unwrap().is_zero(), "n={n} d={}", d.order());
                }
                let term = inc.ind(&td).unwrap().scale(&q(1, inc.index() as i64));
                total = total.add(&term).unwrap();
            }
            assert_eq!(total, BurnsideElem::one(&c), "n={n}");
        }
    }

    #[test]
    fn restriction_two_ways() {
        for g in [FiniteGroup::cyclic(12).unwrap(), s3()] {
            let r = BurnsideRing::new(g).unwrap();
            for h in r.lattice().subgroups() {
                let inc = Inclusion::of_subgroup(&r, h).unwrap();
                for k in 0..r.rank() {
                    let x = BurnsideElem::basis(&r, k);
                    assert_eq!(inc.res(&x).unwrap(), inc.res_double_coset(&x).unwrap());
                }
            }
        }
    }

    #[test]
    fn mismatched_rings() {
        let a = BurnsideElem::one(&BurnsideRing::cyclic(2).unwrap());
        let b = BurnsideElem::one(&BurnsideRing::cyclic(3).unwrap());
        assert!(matches!(a.mul(&b), Err(Error::DescriptorMismatch { .. })));
    }

    proptest! {
        #[test]
        fn marks_is_multiplicative(
            xs in proptest::collection::vec(-5i64..5, 4),
            ys in proptest::collection::vec(-5i64..5, 4),
        ) {
            let r = BurnsideRing::new(s3()).unwrap();
            let x = BurnsideElem::new(&r, xs.iter().map(|&v| Rational::from(v)).collect()).unwrap();
            let y = BurnsideElem::new(&r, ys.iter().map(|&v| Rational::from(v)).collect()).unwrap();
            let prod = x.mul(&y).unwrap().marks();
            let pointwise: Vec<Rational> = x.marks().iter().zip(y.marks()).map(|(a, b)| a * &b).collect();
            prop_assert_eq!(prod, pointwise);
        }
    }
}
