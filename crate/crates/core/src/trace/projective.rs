use crate::exactla::Rational;
use crate::grp::{FiniteGroup, GroupRingElem, GroupRingMatrix, SubgroupLattice};
use crate::rep::central_idempotents;
use crate::{Error, Result};

/// A finitely generated projective `QG`-module, the image of right
/// multiplication by an idempotent matrix `e` on row vectors `(QG)^n`.
#[derive(Clone, Debug)]
pub struct ProjectiveIdem {
    group: FiniteGroup,
    matrix: GroupRingMatrix,
    label: String,
}

impl ProjectiveIdem {
    pub fn new(group: &FiniteGroup, matrix: GroupRingMatrix, label: impl Into<String>) -> Result<Self> {
        if matrix.group_order() != group.order() {
            return Err(Error::DimensionMismatch { expected: group.order(), found: matrix.group_order() });
        }
        if !matrix.is_idempotent(group) {
            return Err(Error::Validation("matrix is not idempotent".into()));
        }
        Ok(ProjectiveIdem { group: group.clone(), matrix, label: label.into() })
    }

    /// The free module of rank one.
    pub fn free(group: &FiniteGroup) -> Self {
        ProjectiveIdem {
            group: group.clone(),
            matrix: GroupRingMatrix::identity(1, group.order()),
            label: "QG".into(),
        }
    }

    pub fn group(&self) -> &FiniteGroup {
        &self.group
    }

    pub fn matrix(&self) -> &GroupRingMatrix {
        &self.matrix
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn size(&self) -> usize {
        self.matrix.size()
    }

    pub fn direct_sum(&self, other: &Self) -> Result<Self> {
        if self.group != other.group {
            return Err(Error::Validation("projectives over different groups".into()));
        }
        let m = self.matrix.direct_sum(&other.matrix)?;
        Ok(ProjectiveIdem { group: self.group.clone(), matrix: m, label: format!("{} + {}", self.label, other.label) })
    }

    /// Character `g ↦ tr(x ↦ g x e)` on `(QG)^n`, read off the diagonal of
    /// the operator in the basis `h·ε_i`. Indexed by conjugacy class.
    pub fn character(&self) -> Vec<Rational> {
        let g = &self.group;
        let n = g.order();
        g.classes()
            .iter()
            .map(|cls| {
                let x = cls[0];
                let mut tr = Rational::zero();
                for i in 0..self.size() {
                    let eii = self.matrix.get(i, i);
                    for h in 0..n {
                        // coefficient of h in x·h·e_ii
                        let xh = GroupRingElem::basis(n, g.mul(x, h));
                        tr += xh.mul(eii, g).coeff(h);
                    }
                }
                tr
            })
            .collect()
    }
}

/// Hattori-Stallings trace: the class of `Σ_i e_ii` in `QG / [QG, QG]`,
/// in the basis of conjugacy classes.
pub fn hs_trace(e: &ProjectiveIdem) -> Vec<Rational> {
    let g = e.group();
    let mut out = vec![Rational::zero(); g.num_classes()];
    for (h, c) in e.matrix().diagonal_sum().0.iter().enumerate() {
        out[g.class_of(h)] += c;
    }
    out
}

pub(crate) fn subgroup_label(group: &FiniteGroup, elements: &[usize]) -> String {
    let gen = elements.iter().copied().find(|&x| group.element_order(x) == elements.len()).unwrap_or(0);
    format!("C{}<g{gen}>", elements.len())
}

/// Projectives `QG·e` for `e` a central idempotent of `QC`, pushed into
/// `QG`, for `C` running over representatives of the cyclic subgroup
/// classes. For cyclic `G` only `C = G` is used.
pub fn induced_projectives(group: &FiniteGroup) -> Result<Vec<ProjectiveIdem>> {
    let lattice = SubgroupLattice::new(group)?;
    let reps: Vec<Vec<usize>> = if group.is_cyclic() {
        vec![(0..group.order()).collect()]
    } else {
        lattice.cyclic_classes().iter().map(|&c| lattice.representative(c).elements().to_vec()).collect()
    };
    let mut out = Vec::new();
    for elems in reps {
        let (sub, embed) = group.subgroup_as_group(&elems)?;
        let sub_lattice = SubgroupLattice::new(&sub)?;
        let name = subgroup_label(group, &elems);
        for (e, d) in central_idempotents(&sub)?.iter().zip(sub_lattice.subgroups()) {
            let pushed = e.push_forward(&embed, group.order());
            let label = if group.is_cyclic() {
                format!("e[ker {}]", d.order())
            } else {
                format!("Ind {name} e[ker {}]", d.order())
            };
            out.push(ProjectiveIdem::new(group, GroupRingMatrix::scalar(pushed), label)?);
        }
    }
    Ok(out)
}
