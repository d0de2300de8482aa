use std::sync::Arc;

use serde::{Deserialize, Serialize};

use super::projective::{hs_trace, induced_projectives, ProjectiveIdem};
use crate::burnside::{theta, theta_image, BurnsideElem, MackeyDomain};
use crate::cyclic::{hn0_image, AlgebraPresentation, Budget};
use crate::exactla::{rank, to_sparse, Field, Matrix, Rational, Scalar, SparseVec, Subspace};
use crate::grp::FiniteGroup;
use crate::rep::{k0_cyclic, k0_group, rep_mackey, IDEMPOTENT_ORDER_BOUND};
use crate::{Error, Result};

fn rational_column(v: &[Rational]) -> SparseVec {
    to_sparse(&v.iter().cloned().map(Scalar::from).collect::<Vec<_>>())
}

/// The Dennis trace `K_0(QG) ⊗ Q -> HH_0(QG)` in a basis of realized
/// projectives and the basis of conjugacy classes.
#[derive(Clone, Debug)]
pub struct TraceMatrix {
    pub source: Vec<String>,
    pub target: Vec<String>,
    pub matrix: Matrix,
    pub rank: usize,
    /// `dim K_0(QG) ⊗ Q`.
    pub k0_dim: usize,
    pub projectives: Vec<ProjectiveIdem>,
}

impl TraceMatrix {
    pub fn injective(&self) -> bool {
        self.rank == self.k0_dim && self.source.len() == self.k0_dim
    }
}

pub(crate) fn class_labels(g: &FiniteGroup) -> Vec<String> {
    g.classes().iter().map(|c| format!("[g{}]", c[0])).collect()
}

/// Selects realized projectives whose characters form a basis of
/// `K_0(QG) ⊗ Q` and records their traces.
pub fn dennis_trace_matrix(g: &FiniteGroup) -> Result<TraceMatrix> {
    let k0 = k0_group(g)?;
    let mut span = Subspace::zero(Field::Rational, g.num_classes());
    let mut chosen = Vec::new();
    for p in induced_projectives(g)? {
        let chi = p.character();
        if !k0.contains(&chi) {
            return Err(Error::Validation(format!("character of {} is outside K_0", p.label())));
        }
        let v = rational_column(&chi);
        if !span.contains(&v) {
            span = span.sum(&Subspace::span(Field::Rational, g.num_classes(), &[v]));
            chosen.push(p);
        }
        if chosen.len() == k0.dim() {
            break;
        }
    }
    if chosen.len() < k0.dim() {
        return Err(Error::Capability(format!(
            "only {} of {} generators of K_0 could be realized",
            chosen.len(),
            k0.dim()
        )));
    }
    let cols: Vec<SparseVec> = chosen.iter().map(|p| rational_column(&hs_trace(p))).collect();
    let matrix = Matrix::from_columns(Field::Rational, g.num_classes(), &cols)?;
    Ok(TraceMatrix {
        source: chosen.iter().map(|p| p.label().to_string()).collect(),
        target: class_labels(g),
        rank: rank(&matrix),
        k0_dim: k0.dim(),
        matrix,
        projectives: chosen,
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CrosscheckRow {
    pub projective: String,
    pub trace: Vec<Rational>,
    pub from_character: Vec<Rational>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CrosscheckReport {
    pub rows: Vec<CrosscheckRow>,
    pub verdict: bool,
}

/// Compares `hs_trace(e)[g]` with `χ_P(g^-1) |[g]| / |G|` for the free
/// module and every induced projective.
pub fn character_crosscheck(g: &FiniteGroup) -> Result<CrosscheckReport> {
    let mut ps = vec![ProjectiveIdem::free(g)];
    ps.extend(induced_projectives(g)?);
    let order = Rational::from(g.order());
    let rows: Vec<CrosscheckRow> = ps
        .iter()
        .map(|p| {
            let chi = p.character();
            let from_character = g
                .classes()
                .iter()
                .map(|cls| {
                    let inv = g.class_of(g.inv(cls[0]));
                    &(&chi[inv] * &Rational::from(cls.len())) / &order
                })
                .collect();
            CrosscheckRow { projective: p.label().to_string(), trace: hs_trace(p), from_character }
        })
        .collect();
    let verdict = rows.iter().all(|r| r.trace == r.from_character);
    Ok(CrosscheckReport { rows, verdict })
}

/// Action of `A(C)` on `HH_0(QC) = QC` for abelian `C`:
/// `[C/D]·c = [C:D] c` if `c ∈ D` and `0` otherwise, in the class basis.
pub fn hh0_burnside_action(x: &BurnsideElem) -> Result<Matrix> {
    let ring = x.ring();
    let g = ring.group();
    if !g.is_abelian() {
        return Err(Error::Domain("the HH_0 action is defined for abelian groups".into()));
    }
    let reps = ring.marks().representatives();
    let diag = g.classes().iter().enumerate().map(|(k, cls)| {
        let c = cls[0];
        let v: Rational = reps
            .iter()
            .zip(x.coeffs())
            .filter(|(d, _)| d.contains(&c))
            .map(|(d, a)| a * &Rational::from(g.order() / d.len()))
            .sum();
        (k, k, Scalar::from(v))
    });
    Matrix::from_triplets(Field::Rational, g.num_classes(), g.num_classes(), diag.collect::<Vec<_>>())
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ThetaTraceReport {
    pub order: usize,
    /// `dtr ∘ θ_C = θ_C ∘ dtr`.
    pub commutes: bool,
    pub theta_dim: usize,
    /// Rank of `dtr` on `θ_C(K_0(QC) ⊗ Q)`.
    pub theta_rank: usize,
    pub verdict: bool,
}

/// `A(C)`-equivariance of the trace under `θ_C` and its injectivity on the
/// `θ_C`-part of `K_0(QC) ⊗ Q`.
pub fn theta_trace_check(n: usize) -> Result<ThetaTraceReport> {
    if n > IDEMPOTENT_ORDER_BOUND {
        return Err(Error::Capability(format!("theta trace check is limited to order {IDEMPOTENT_ORDER_BOUND}")));
    }
    let domain = MackeyDomain::new(FiniteGroup::cyclic(n)?)?;
    let top = domain.top();
    let ring = domain.ring(top);
    let c = ring.group();
    let ps = induced_projectives(c)?;
    let k0 = k0_cyclic(c)?;
    for ((p, chi), name) in ps.iter().zip(k0.basis()).zip(k0.labels()) {
        if &p.character() != chi {
            return Err(Error::Validation(format!("{} does not realize {name}", p.label())));
        }
    }
    let cols: Vec<SparseVec> = ps.iter().map(|p| rational_column(&hs_trace(p))).collect();
    let t = Matrix::from_columns(Field::Rational, c.num_classes(), &cols)?;
    let th = theta(ring)?;
    let m = rep_mackey(domain.clone())?;
    let on_k0 = m.act(top, &th)?;
    let on_hh = hh0_burnside_action(&th)?;
    let commutes = t.mul(&on_k0)? == on_hh.mul(&t)?;
    let image = theta_image(&m, top)?;
    let theta_rank = rank(&t.mul(&image.basis_matrix())?);
    let theta_dim = image.dim();
    Ok(ThetaTraceReport { order: n, commutes, theta_dim, theta_rank, verdict: commutes && theta_rank == theta_dim })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ContainmentReport {
    pub cutoff: usize,
    pub stabilized: bool,
    /// Projective label and whether its trace lies in the image of `HN_0`.
    pub rows: Vec<(String, bool)>,
    pub verdict: bool,
}

/// Checks that the trace of every realized projective lies in the image of
/// `HN_0(QG) -> HH_0(QG)`.
pub fn image_containment(g: &FiniteGroup, budget: Budget) -> Result<ContainmentReport> {
    let a = Arc::new(AlgebraPresentation::group_algebra(g, Field::Rational)?);
    let img = hn0_image(&a, 1, budget)?;
    let mut ps = vec![ProjectiveIdem::free(g)];
    ps.extend(induced_projectives(g)?);
    let rows: Vec<(String, bool)> = ps
        .iter()
        .map(|p| (p.label().to_string(), img.image.contains(&rational_column(&p.matrix().diagonal_sum().0))))
        .collect();
    let verdict = img.stabilized && rows.iter().all(|r| r.1);
    Ok(ContainmentReport { cutoff: img.cutoff, stabilized: img.stabilized, rows, verdict })
}
