use super::mackey::MackeyModule;
use super::ring::theta;
use crate::exactla::{cokernel, rank, Field, Matrix, Quotient, Subspace};
use crate::Result;

/// Comparison of the θ-image with the Artin defect at one subgroup.
#[derive(Clone, Debug)]
pub struct DefectReport {
    pub subgroup: String,
    pub cyclic: bool,
    /// `θ_C(M(C))`; zero for a non-cyclic subgroup, where no `θ` is defined.
    pub theta_image: Subspace,
    /// Canonical complement of the image of all inductions from proper
    /// subgroups.
    pub defect: Subspace,
    /// Rank of the θ-image projected to the defect.
    pub map_rank: usize,
    pub verdict: bool,
}

impl DefectReport {
    pub fn theta_dim(&self) -> usize {
        self.theta_image.dim()
    }

    pub fn defect_dim(&self) -> usize {
        self.defect.dim()
    }
}

/// Stacked inductions `⊕_{D < C} M(D) -> M(C)`.
pub fn induction_from_proper(m: &MackeyModule, c: usize) -> Result<Matrix> {
    let dom = m.domain();
    let mut stacked = Matrix::zeros(Field::Rational, m.dim(c), 0);
    for d in dom.lattice().subgroups_of(c) {
        if d != c {
            stacked = stacked.hstack(m.ind(d, c)?)?;
        }
    }
    Ok(stacked)
}

/// Column space of the action of `θ_C` on `M(C)`.
pub fn theta_image(m: &MackeyModule, c: usize) -> Result<Subspace> {
    let t = theta(m.domain().ring(c))?;
    Ok(Subspace::column_space(&m.act(c, &t)?))
}

pub fn artin_defect(m: &MackeyModule, c: usize) -> Result<DefectReport> {
    let dom = m.domain();
    let stacked = induction_from_proper(m, c)?;
    let defect = cokernel(&stacked);
    let cyclic = dom.subgroup(c).is_cyclic();
    let theta_image = if cyclic { theta_image(m, c)? } else { Subspace::zero(Field::Rational, m.dim(c)) };
    let quotient = Quotient::of_image(Subspace::column_space(&stacked));
    let projected: Vec<_> = theta_image.basis().iter().map(|v| quotient.project(v)).collect();
    let map_rank = if projected.is_empty() {
        0
    } else {
        rank(&Matrix::from_dense(Field::Rational, projected)?)
    };
    let verdict = theta_image.dim() == defect.dim() && map_rank == defect.dim();
    Ok(DefectReport { subgroup: dom.label(c), cyclic, theta_image, defect, map_rank, verdict })
}
