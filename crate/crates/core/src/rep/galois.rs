use num_integer::Integer;

use super::characters::discrete_logs;
use crate::exactla::{cyclotomic_root, Field, Rational, Scalar};
use crate::grp::{FiniteGroup, GroupRingElem, SubgroupLattice};
use crate::{Error, Result};

/// Largest cyclic group for which central idempotents are produced.
pub const IDEMPOTENT_ORDER_BOUND: usize = 12;

/// `Γ_{F,C} <= (Z/m)^×` and its orbits on the elements of `C`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GaloisAction {
    pub field: String,
    pub modulus: usize,
    /// Units `t` with `σ_t` trivial on `F ∩ Q(ζ_m)`, sorted.
    pub gamma: Vec<usize>,
    /// Orbits of `g ↦ g^t` on element indices; classes of an abelian group
    /// are singletons.
    pub orbits: Vec<Vec<usize>>,
}

impl GaloisAction {
    pub fn num_orbits(&self) -> usize {
        self.orbits.len()
    }
}

pub fn galois_orbits(field: &Field, group: &FiniteGroup) -> Result<GaloisAction> {
    let d = field
        .cyclotomic_order()
        .ok_or_else(|| Error::Capability(format!("Galois action over {field} is not supported")))?;
    let (x, log) = discrete_logs(group)?;
    let m = group.order();
    let g = (d as usize).gcd(&m);
    // σ_t fixes F ∩ Q(ζ_m) = Q(ζ_g) iff it fixes a primitive g-th root.
    let (_, zeta) = cyclotomic_root(m as u64)?;
    let w = zeta.pow((m / g) as u32);
    let gamma: Vec<usize> = (1..=m)
        .filter(|t| t.gcd(&m) == 1)
        .map(|t| t % m)
        .filter(|&t| w.pow(t as u32) == w)
        .collect::<std::collections::BTreeSet<_>>()
        .into_iter()
        .collect();
    let mut label = vec![usize::MAX; m];
    let mut orbits = Vec::new();
    for a in 0..m {
        if label[a] != usize::MAX {
            continue;
        }
        let mut orb: Vec<usize> = gamma.iter().map(|&t| group.pow(x, (log[a] * t) % m)).collect();
        orb.sort_unstable();
        orb.dedup();
        for &b in &orb {
            label[b] = orbits.len();
        }
        orbits.push(orb);
    }
    Ok(GaloisAction { field: field.to_string(), modulus: m, gamma, orbits })
}

/// Central idempotents of `QC`, one per rational irreducible, in the order
/// of the `k0_cyclic` basis. Each is the sum over a Galois orbit of the
/// complex idempotents `m^-1 Σ_j ζ^{-sj} x^j`.
pub fn central_idempotents(group: &FiniteGroup) -> Result<Vec<GroupRingElem>> {
    let m = group.order();
    if m > IDEMPOTENT_ORDER_BOUND {
        return Err(Error::Capability(format!(
            "central idempotents are limited to order {IDEMPOTENT_ORDER_BOUND}, got {m}"
        )));
    }
    let (x, _) = discrete_logs(group)?;
    let (field, zeta) = cyclotomic_root(m as u64)?;
    let powers: Vec<Scalar> = (0..m).map(|k| zeta.pow(k as u32)).collect();
    let inv_m = Rational::new(1, m as i64);
    let lattice = SubgroupLattice::new(group)?;
    let mut out = Vec::new();
    for d in lattice.subgroups() {
        // complex characters with kernel D: s with gcd(s, m) = |D|
        let mut coeffs = vec![field.zero(); m];
        for s in (0..m).filter(|&s| s.gcd(&m) == d.order()) {
            for (j, c) in coeffs.iter_mut().enumerate() {
                *c = &*c + &powers[(m - (s * j) % m) % m];
            }
        }
        let mut e = GroupRingElem::zero(m);
        for (j, c) in coeffs.iter().enumerate() {
            let r = c
                .as_rational()
                .ok_or_else(|| Error::Validation("Galois orbit sum is not rational".into()))?;
            e.0[group.pow(x, j)] = r * &inv_m;
        }
        out.push(e);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactla::cyclotomic_field;
    use crate::rep::characters::ramanujan_sum;

    fn c(n: usize) -> FiniteGroup {
        FiniteGroup::cyclic(n).unwrap()
    }

    #[test]
    fn rational_orbits_are_subgroups() {
        let a = galois_orbits(&Field::Rational, &c(6)).unwrap();
        assert_eq!(a.gamma, vec![1, 5]);
        assert_eq!(a.num_orbits(), 4);
        assert_eq!(galois_orbits(&Field::Rational, &c(1)).unwrap().num_orbits(), 1);
    }

    #[test]
    fn adjoined_root_kills_the_action() {
        let f = cyclotomic_field(3).unwrap();
        let a = galois_orbits(&f, &c(3)).unwrap();
        assert_eq!(a.gamma, vec![1]);
        assert_eq!(a.num_orbits(), 3);
        // Q(i) and C_3 are disjoint
        let a = galois_orbits(&cyclotomic_field(4).unwrap(), &c(3)).unwrap();
        assert_eq!(a.num_orbits(), 2);
    }

    #[test]
    fn non_cyclotomic_field_refused() {
        let f = Field::number_field(crate::exactla::Poly::from_ints(&[-2, 0, 1])).unwrap();
        assert!(matches!(galois_orbits(&f, &c(3)), Err(Error::Capability(_))));
    }

    #[test]
    fn idempotents_small() {
        let h = Rational::new(1, 2);
        assert_eq!(central_idempotents(&c(1)).unwrap(), vec![GroupRingElem::one(1)]);
        let e2 = central_idempotents(&c(2)).unwrap();
        assert_eq!(e2[1].0, vec![h.clone(), h.clone()]);
        assert_eq!(e2[0].0, vec![h.clone(), -h]);
        let e3 = central_idempotents(&c(3)).unwrap();
        let t = Rational::new(1, 3);
        assert_eq!(e3[1].0, vec![t.clone(), t.clone(), t.clone()]);
        assert_eq!(e3[0].0, vec![Rational::new(2, 3), -t.clone(), -t]);
    }

    #[test]
    fn idempotents_form_a_partition_of_unity() {
        for n in 1..=12 {
            let g = c(n);
            let es = central_idempotents(&g).unwrap();
            let mut total = GroupRingElem::zero(n);
            for (i, e) in es.iter().enumerate() {
                assert_eq!(e.mul(e, &g), *e);
                for f in &es[i + 1..] {
                    assert!(e.mul(f, &g).is_zero());
                }
                total = total.add(e);
            }
            assert_eq!(total, GroupRingElem::one(n));
            // coefficient of x^j is c_d(-j)/m
            let lat = SubgroupLattice::new(&g).unwrap();
            for (e, d) in es.iter().zip(lat.subgroups()) {
                let q = (n / d.order()) as u64;
                for j in 0..n {
                    let want = Rational::new(ramanujan_sum(q, ((n - j) % n) as u64), n as i64);
                    assert_eq!(e.0[j], want);
                }
            }
        }
    }

    #[test]
    fn idempotent_bound() {
        assert!(matches!(central_idempotents(&c(13)), Err(Error::Capability(_))));
    }
}
