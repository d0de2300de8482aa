//! Brute-force computations that produce the expected values of the
//! derived checks. They use nothing but the multiplication table and the
//! unnormalized complexes, so they share no code paths with the lattice,
//! the table of marks or the normalized mixed complex.

use std::collections::BTreeSet;
use std::sync::Arc;

use crate::cyclic::{tsygan_hc, AlgebraPresentation, Budget, CyclicWindow, Normalization};
use crate::exactla::rank;
use crate::grp::FiniteGroup;
use crate::Result;

fn generated(g: &FiniteGroup, gens: &BTreeSet<usize>) -> BTreeSet<usize> {
    let mut set: BTreeSet<usize> = BTreeSet::from([0]);
    let mut frontier = vec![0];
    while let Some(x) = frontier.pop() {
        for &s in gens {
            let y = g.mul(x, s);
            if set.insert(y) {
                frontier.push(y);
            }
        }
    }
    set
}

/// Every subgroup, found by joining cyclic subgroups until nothing new
/// appears.
pub fn all_subgroups(g: &FiniteGroup) -> Vec<Vec<usize>> {
    let mut found: BTreeSet<Vec<usize>> =
        (0..g.order()).map(|x| generated(g, &BTreeSet::from([x])).into_iter().collect()).collect();
    loop {
        let current: Vec<Vec<usize>> = found.iter().cloned().collect();
        let mut grew = false;
        for (i, a) in current.iter().enumerate() {
            for b in &current[i + 1..] {
                let gens: BTreeSet<usize> = a.iter().chain(b).copied().collect();
                grew |= found.insert(generated(g, &gens).into_iter().collect());
            }
        }
        if !grew {
            return found.into_iter().collect();
        }
    }
}

/// Lexicographically least conjugate of a sorted subgroup.
pub fn canonical_conjugate(g: &FiniteGroup, h: &[usize]) -> Vec<usize> {
    (0..g.order())
        .map(|x| {
            let mut c: Vec<usize> = h.iter().map(|&y| g.mul(g.mul(x, y), g.inv(x))).collect();
            c.sort_unstable();
            c
        })
        .min()
        .expect("nonempty group")
}

/// Canonical representatives of the conjugacy classes of subgroups,
/// sorted by order and then lexicographically.
pub fn subgroup_classes(g: &FiniteGroup) -> Vec<Vec<usize>> {
    let reps: BTreeSet<Vec<usize>> = all_subgroups(g).iter().map(|h| canonical_conjugate(g, h)).collect();
    let mut reps: Vec<Vec<usize>> = reps.into_iter().collect();
    reps.sort_by(|a, b| a.len().cmp(&b.len()).then(a.cmp(b)));
    reps
}

/// `|(G/K)^H|` by listing the cosets `xK` and testing `h·xK = xK` as sets.
pub fn fixed_point_marks(g: &FiniteGroup, reps: &[Vec<usize>]) -> Vec<Vec<u64>> {
    reps.iter()
        .map(|h| {
            reps.iter()
                .map(|k| {
                    let cosets: BTreeSet<Vec<usize>> = (0..g.order())
                        .map(|x| {
                            let mut c: Vec<usize> = k.iter().map(|&y| g.mul(x, y)).collect();
                            c.sort_unstable();
                            c
                        })
                        .collect();
                    cosets
                        .iter()
                        .filter(|c| {
                            h.iter().all(|&s| {
                                let mut moved: Vec<usize> = c.iter().map(|&y| g.mul(s, y)).collect();
                                moved.sort_unstable();
                                &moved == *c
                            })
                        })
                        .count() as u64
                })
                .collect()
        })
        .collect()
}

/// Number of conjugation orbits on elements.
pub fn conjugacy_class_count(g: &FiniteGroup) -> usize {
    let orbits: BTreeSet<BTreeSet<usize>> =
        (0..g.order()).map(|a| (0..g.order()).map(|x| g.mul(g.mul(x, a), g.inv(x))).collect()).collect();
    orbits.len()
}

pub fn cyclic_subgroup_class_count(g: &FiniteGroup) -> usize {
    let reps: BTreeSet<Vec<usize>> = (0..g.order())
        .map(|x| canonical_conjugate(g, &generated(g, &BTreeSet::from([x])).into_iter().collect::<Vec<_>>()))
        .collect();
    reps.len()
}

/// `HH_n(A)` for `n < degree` from the full unnormalized Hochschild
/// complex.
pub fn unnormalized_hh(a: &Arc<AlgebraPresentation>, degree: usize, budget: Budget) -> Result<Vec<usize>> {
    let w = CyclicWindow::new(a.clone(), degree, Normalization::Unnormalized, budget)?;
    let ranks: Vec<usize> = (0..=degree).map(|q| Ok(if q == 0 { 0 } else { rank(&w.b(q)?) })).collect::<Result<_>>()?;
    Ok((0..degree).map(|n| w.dim(n) - ranks[n] - ranks[n + 1]).collect())
}

/// `HC_n(A)` for `n ≤ degree - 2` from the `b`/`b'` bicomplex.
pub fn bicomplex_hc(a: &Arc<AlgebraPresentation>, degree: usize) -> Result<Vec<usize>> {
    tsygan_hc(a, degree)
}
