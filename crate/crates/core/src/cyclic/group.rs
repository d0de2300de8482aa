use std::sync::Arc;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::algebra::AlgebraPresentation;
use super::homology::{hochschild, Certificate, HomologyReport, Theory};
use super::window::Budget;
use crate::exactla::{rank_bounded, Field, Matrix, Scalar};
use crate::grp::FiniteGroup;
use crate::{Error, Result};

/// Boundary `C_n -> C_{n-1}` of the normalized bar complex, basis the
/// tuples of non-identity elements in base `|G| - 1`.
fn bar_boundary(g: &FiniteGroup, field: &Field, n: usize) -> Result<Matrix> {
    let r = g.order() - 1;
    let dim = |k: usize| r.pow(k as u32);
    let encode = |t: &[usize]| t.iter().rev().fold(0, |acc, &x| acc * r + (x - 1));
    let (one, minus) = (field.one(), field.from_int(-1));
    let sign = |i: usize| if i % 2 == 1 { minus.clone() } else { one.clone() };
    let mut triplets: Vec<(usize, usize, Scalar)> = Vec::new();
    let mut t = vec![1; n];
    for col in 0..dim(n) {
        if n > 0 {
            triplets.push((encode(&t[1..]), col, one.clone()));
            for i in 1..n {
                let p = g.mul(t[i - 1], t[i]);
                if p != 0 {
                    let mut u = Vec::with_capacity(n - 1);
                    u.extend_from_slice(&t[..i - 1]);
                    u.push(p);
                    u.extend_from_slice(&t[i + 1..]);
                    triplets.push((encode(&u), col, sign(i)));
                }
            }
            triplets.push((encode(&t[..n - 1]), col, sign(n)));
        }
        for x in t.iter_mut() {
            *x += 1;
            if *x <= r {
                break;
            }
            *x = 1;
        }
    }
    let rows = if n == 0 { 0 } else { dim(n - 1) };
    Matrix::from_triplets(field.clone(), rows, dim(n), triplets)
}

/// `H_n(BG; k)` for `0 ≤ n ≤ N - 1` from the normalized bar complex.
pub fn group_homology(g: &FiniteGroup, field: &Field, degree: usize, budget: Budget) -> Result<HomologyReport> {
    if degree == 0 {
        return Err(Error::Domain("truncation degree must be at least 1".into()));
    }
    let r = g.order() - 1;
    for n in 0..=degree {
        match r.checked_pow(n as u32) {
            Some(s) if s <= budget.0 => {}
            _ => {
                return Err(Error::Capability(format!(
                    "bar complex in degree {n} exceeds the budget of {}",
                    budget.0
                )))
            }
        }
    }
    let mut ranks = vec![0];
    for n in 1..=degree {
        let bound = r.pow(n as u32 - 1) - ranks[n - 1];
        ranks.push(rank_bounded(&bar_boundary(g, field, n)?, Some(bound)));
    }
    let dims = (0..degree).map(|n| r.pow(n as u32) - ranks[n] - ranks[n + 1]).collect();
    Ok(HomologyReport {
        theory: Theory::GroupHomology,
        subject: format!("BG over {field}, |G| = {}", g.order()),
        dims,
        per_class: None,
        hh0_basis: None,
        certificate: Certificate { window: degree, valid: (0, degree - 1), cutoff: None, stabilized: None },
    })
}

/// `HH_*(kG)` split by the conjugacy class of `g_0 ⋯ g_q`.
pub fn conjugacy_split_hh(g: &FiniteGroup, field: &Field, degree: usize, budget: Budget) -> Result<HomologyReport> {
    let a = Arc::new(AlgebraPresentation::group_algebra(g, field.clone())?);
    hochschild(&a, degree, budget)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DecompositionRow {
    pub class: usize,
    pub representative: usize,
    pub centralizer_order: usize,
    pub hochschild: Vec<usize>,
    pub centralizer_homology: Vec<usize>,
}

impl DecompositionRow {
    pub fn agrees(&self) -> bool {
        self.hochschild == self.centralizer_homology
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DecompositionReport {
    pub degree: usize,
    pub rows: Vec<DecompositionRow>,
    pub verdict: bool,
}

/// Compares `HH_{n,[c]}(kG)` with `H_n(B Z_G(c); k)` for every class.
pub fn decomposition_check(g: &FiniteGroup, field: &Field, degree: usize, budget: Budget) -> Result<DecompositionReport> {
    let split = conjugacy_split_hh(g, field, degree, budget)?;
    let per_class = split.per_class.expect("group algebras are graded");
    let rows = per_class
        .into_par_iter()
        .map(|c| {
            let z = g.centralizer_of_element(c.representative);
            let (zg, _) = g.subgroup_as_group(&z)?;
            let h = group_homology(&zg, field, degree, budget)?;
            Ok(DecompositionRow {
                class: c.class,
                representative: c.representative,
                centralizer_order: z.len(),
                hochschild: c.dims,
                centralizer_homology: h.dims,
            })
        })
        .collect::<Result<Vec<_>>>()?;
    let verdict = rows.iter().all(DecompositionRow::agrees);
    Ok(DecompositionReport { degree, rows, verdict })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::grp::GroupDescriptor;

    const B: Budget = Budget(300_000);

    fn build(d: GroupDescriptor) -> FiniteGroup {
        FiniteGroup::build(&d).unwrap()
    }

    fn s3() -> FiniteGroup {
        build(GroupDescriptor::Perm { degree: 3, gens: vec![vec![1, 0, 2], vec![1, 2, 0]] })
    }

    #[test]
    fn rational_group_homology_is_trivial() {
        let q = Field::Rational;
        assert_eq!(group_homology(&FiniteGroup::cyclic(2).unwrap(), &q, 4, B).unwrap().dims, vec![1, 0, 0, 0]);
        assert_eq!(group_homology(&s3(), &q, 3, B).unwrap().dims, vec![1, 0, 0]);
        assert_eq!(group_homology(&FiniteGroup::cyclic(1).unwrap(), &q, 4, B).unwrap().dims, vec![1, 0, 0, 0]);
    }

    #[test]
    fn bar_complex_squares_to_zero() {
        let g = s3();
        for n in 2..=3 {
            let dd = bar_boundary(&g, &Field::Rational, n - 1).unwrap().mul(&bar_boundary(&g, &Field::Rational, n).unwrap());
            assert!(dd.unwrap().is_zero());
        }
    }

    #[test]
    fn split_examples() {
        let q = Field::Rational;
        let r = conjugacy_split_hh(&FiniteGroup::cyclic(1).unwrap(), &q, 3, B).unwrap();
        assert_eq!(r.per_class.unwrap().iter().map(|c| c.dims.clone()).collect::<Vec<_>>(), vec![vec![1, 0, 0]]);
        let r = conjugacy_split_hh(&FiniteGroup::cyclic(2).unwrap(), &q, 3, B).unwrap();
        assert!(r.per_class.unwrap().iter().all(|c| c.dims == vec![1, 0, 0]));
        let r = conjugacy_split_hh(&s3(), &q, 3, B).unwrap();
        assert_eq!(r.dims[0], 3);
        assert!(r.per_class.unwrap().iter().all(|c| c.dims == vec![1, 0, 0]));
    }

    #[test]
    fn decomposition_examples() {
        let q = Field::Rational;
        let r = decomposition_check(&FiniteGroup::cyclic(6).unwrap(), &q, 3, B).unwrap();
        assert_eq!(r.rows.len(), 6);
        assert!(r.verdict);
        assert!(decomposition_check(&s3(), &q, 3, B).unwrap().verdict);
        let d4 = build(GroupDescriptor::Perm { degree: 4, gens: vec![vec![1, 2, 3, 0], vec![3, 2, 1, 0]] });
        let r = decomposition_check(&d4, &q, 3, B).unwrap();
        assert_eq!(r.rows.len(), 5);
        assert!(r.verdict);
    }

    #[test]
    fn budget_refusal() {
        let err = group_homology(&s3(), &Field::Rational, 6, Budget(100)).unwrap_err();
        assert!(matches!(err, Error::Capability(_)));
    }
}
