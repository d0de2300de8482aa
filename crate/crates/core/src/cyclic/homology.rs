use std::fmt;
use std::sync::Arc;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::algebra::AlgebraPresentation;
use super::window::{Budget, CyclicWindow, Normalization};
use crate::exactla::{rank_bounded, rank_kernel, to_sparse, Field, Matrix, Quotient, Scalar, SparseVec, Subspace};
use crate::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Theory {
    HH,
    HC,
    HP,
    HN,
    #[serde(rename = "group-homology")]
    GroupHomology,
}

impl fmt::Display for Theory {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Theory::HH => "HH",
            Theory::HC => "HC",
            Theory::HP => "HP",
            Theory::HN => "HN",
            Theory::GroupHomology => "group-homology",
        };
        f.write_str(s)
    }
}

/// Dimensions contributed by one conjugacy class of a group algebra.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassDims {
    pub class: usize,
    pub representative: usize,
    pub size: usize,
    pub dims: Vec<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Certificate {
    /// Truncation degree of the window the values were computed from.
    pub window: usize,
    /// First and last degree whose value is guaranteed.
    pub valid: (usize, usize),
    /// Column cutoff `P` for periodic and negative theories.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub cutoff: Option<usize>,
    /// Whether the dimensions at `P + 1` agree with those at `P`.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub stabilized: Option<bool>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HomologyReport {
    pub theory: Theory,
    pub subject: String,
    /// Dimensions over the ground field in degrees `0, 1, …`.
    pub dims: Vec<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub per_class: Option<Vec<ClassDims>>,
    /// For group algebras, `HH_0` in the basis of conjugacy class sums.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub hh0_basis: Option<Vec<String>>,
    pub certificate: Certificate,
}

/// Normalized mixed complex `(C, b, B)` of one piece of an algebra.
pub(crate) struct Mixed {
    window: CyclicWindow,
    b: Vec<Matrix>,
    big_b: Vec<Matrix>,
}

impl Mixed {
    pub(crate) fn new(window: CyclicWindow, with_connes: bool) -> Result<Self> {
        let n = window.degree();
        let b = (0..=n).map(|q| window.b(q)).collect::<Result<Vec<_>>>()?;
        let big_b = if with_connes { (0..n).map(|q| window.connes_b(q)).collect::<Result<Vec<_>>>()? } else { Vec::new() };
        Ok(Mixed { window, b, big_b })
    }

    pub(crate) fn window(&self) -> &CyclicWindow {
        &self.window
    }

    fn field(&self) -> &Field {
        self.window.field()
    }

    fn dim(&self, q: usize) -> usize {
        self.window.dim(q)
    }

    /// Ranks of `b_0..=b_top`, each bounded by the cycles of the previous one.
    fn b_ranks(&self, top: usize) -> Vec<usize> {
        let mut ranks = vec![0];
        for q in 1..=top {
            let bound = self.dim(q - 1) - ranks[q - 1];
            ranks.push(rank_bounded(&self.b[q], Some(bound)));
        }
        ranks
    }

    /// `HH_0..HH_{count-1}`.
    fn hh_dims(&self, count: usize) -> Vec<usize> {
        let r = self.b_ranks(count);
        (0..count).map(|n| self.dim(n) - r[n] - r[n + 1]).collect()
    }
}

/// Total complex of the columns `pmin ≤ p ≤ pmax` of the `(b, B)` bicomplex,
/// column `p` of total degree `n` holding `C_{n-2p}`. `B` lowers `p` by
/// one; components landing left of `pmin` are dropped.
struct Tot<'a> {
    m: &'a Mixed,
    pmin: i64,
    pmax: Option<i64>,
}

impl Tot<'_> {
    fn layout(&self, n: i64) -> Result<Vec<(i64, usize, usize)>> {
        let top = n.div_euclid(2);
        let top = self.pmax.map_or(top, |p| p.min(top));
        let mut off = 0;
        let mut out = Vec::new();
        for p in self.pmin..=top {
            let q = (n - 2 * p) as usize;
            if q > self.m.window.degree() {
                return Err(Error::Domain(format!("total degree {n} needs chains of degree {q} beyond the window")));
            }
            out.push((p, q, off));
            off += self.m.dim(q);
        }
        Ok(out)
    }

    fn dim(&self, n: i64) -> Result<usize> {
        Ok(self.layout(n)?.iter().map(|&(_, q, _)| self.m.dim(q)).sum())
    }

    /// `D_n = b + B: Tot_n -> Tot_{n-1}`.
    fn d(&self, n: i64) -> Result<Matrix> {
        let src = self.layout(n)?;
        let dst = self.layout(n - 1)?;
        let find = |p: i64| dst.iter().find(|e| e.0 == p).map(|e| e.2);
        let mut triplets = Vec::new();
        for &(p, q, off) in &src {
            if q >= 1 {
                let t = find(p).expect("b stays in its column");
                triplets.extend(self.m.b[q].entries().map(|(r, c, v)| (t + r, off + c, v.clone())));
            }
            if p > self.pmin {
                let bq = self.m.big_b.get(q).ok_or_else(|| Error::Domain(format!("B out of C_{q} is beyond the window")))?;
                let t = find(p - 1).expect("B lands in the next column");
                triplets.extend(bq.entries().map(|(r, c, v)| (t + r, off + c, v.clone())));
            }
        }
        Matrix::from_triplets(self.m.field().clone(), self.dim(n - 1)?, self.dim(n)?, triplets)
    }

    fn homology_dims(&self, degrees: std::ops::RangeInclusive<i64>) -> Result<Vec<usize>> {
        let lo = *degrees.start();
        let hi = *degrees.end();
        let ranks = (lo..=hi + 1).map(|n| Ok(rank_bounded(&self.d(n)?, None))).collect::<Result<Vec<_>>>()?;
        (lo..=hi)
            .map(|n| {
                let i = (n - lo) as usize;
                Ok(self.dim(n)? - ranks[i] - ranks[i + 1])
            })
            .collect()
    }
}

/// `H = Z / B` with representatives supported off the pivots of `B`.
struct HomologySpace {
    field: Field,
    quotient: Quotient,
    classes: Subspace,
}

impl HomologySpace {
    /// Homology at the source of `d_out`, with `d_in` landing there.
    fn new(d_out: &Matrix, d_in: &Matrix) -> Self {
        let field = d_out.field().clone();
        let (_, z) = rank_kernel(d_out);
        let quotient = Quotient::of_image(Subspace::column_space(d_in));
        let projected: Vec<SparseVec> = z.basis().iter().map(|v| to_sparse(&quotient.project(v))).collect();
        let classes = Subspace::span(field.clone(), quotient.dim(), &projected);
        HomologySpace { field, quotient, classes }
    }

    fn dim(&self) -> usize {
        self.classes.dim()
    }

    fn rep(&self, j: usize) -> SparseVec {
        self.quotient.lift(&self.classes.basis()[j])
    }

    fn coords(&self, v: &SparseVec) -> Vec<Scalar> {
        self.classes.coordinates(&to_sparse(&self.quotient.project(v))).expect("image of a cycle is a cycle")
    }

    /// Matrix on homology of a chain map given on representatives.
    fn induced(&self, dst: &HomologySpace, f: impl Fn(&SparseVec) -> SparseVec) -> Result<Matrix> {
        let cols: Vec<SparseVec> = (0..self.dim()).map(|j| to_sparse(&dst.coords(&f(&self.rep(j))))).collect();
        Matrix::from_columns(self.field.clone(), dst.dim(), &cols)
    }
}

/// Ranks in the periodicity sequence
/// `HC_{n-1} -∂-> HH_n -I-> HC_n -S-> HC_{n-2} -∂-> HH_{n-1}`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConnesRow {
    pub n: usize,
    pub hh: usize,
    pub hc: usize,
    pub hc_minus_two: usize,
    pub rank_boundary_in: usize,
    pub rank_i: usize,
    pub rank_s: usize,
    pub rank_boundary_out: usize,
}

impl ConnesRow {
    /// Exactness at `HH_n`, `HC_n` and `HC_{n-2}`.
    pub fn exact(&self) -> bool {
        self.hh == self.rank_boundary_in + self.rank_i
            && self.hc == self.rank_i + self.rank_s
            && self.hc_minus_two == self.rank_s + self.rank_boundary_out
    }

    fn add(&mut self, o: &ConnesRow) {
        self.hh += o.hh;
        self.hc += o.hc;
        self.hc_minus_two += o.hc_minus_two;
        self.rank_boundary_in += o.rank_boundary_in;
        self.rank_i += o.rank_i;
        self.rank_s += o.rank_s;
        self.rank_boundary_out += o.rank_boundary_out;
    }
}

#[derive(Clone, Debug)]
pub struct CyclicReport {
    pub hh: HomologyReport,
    pub hc: HomologyReport,
    /// `S: HC_n -> HC_{n-2}` in homology bases, for `2 ≤ n ≤ N - 2`
    /// (entry `n - 2`).
    pub s: Vec<Matrix>,
    pub connes: Vec<ConnesRow>,
}

impl CyclicReport {
    pub fn connes_exact(&self) -> bool {
        self.connes.iter().all(ConnesRow::exact)
    }
}

/// The algebra as a list of windows: one per conjugacy class for group
/// algebras, otherwise the whole algebra.
pub(crate) fn pieces(a: &Arc<AlgebraPresentation>, degree: usize, budget: Budget) -> Result<Vec<CyclicWindow>> {
    let a = if a.unit_is_first() { a.clone() } else { Arc::new(a.with_unit_first()?) };
    match a.group() {
        Some(g) => (0..g.num_classes())
            .map(|c| CyclicWindow::block(a.clone(), degree, Normalization::Normalized, c, budget))
            .collect(),
        None => Ok(vec![CyclicWindow::new(a, degree, Normalization::Normalized, budget)?]),
    }
}

fn sum_dims(parts: &[Vec<usize>]) -> Vec<usize> {
    let len = parts.first().map_or(0, Vec::len);
    (0..len).map(|i| parts.iter().map(|p| p[i]).sum()).collect()
}

fn class_breakdown(a: &AlgebraPresentation, parts: &[Vec<usize>]) -> Option<Vec<ClassDims>> {
    let g = a.group()?;
    Some(
        parts
            .iter()
            .enumerate()
            .map(|(c, dims)| ClassDims {
                class: c,
                representative: g.classes()[c][0],
                size: g.classes()[c].len(),
                dims: dims.clone(),
            })
            .collect(),
    )
}

fn class_sums(a: &AlgebraPresentation) -> Option<Vec<String>> {
    let g = a.group()?;
    Some(g.classes().iter().map(|c| c.iter().map(|&x| a.labels()[x].as_str()).collect::<Vec<_>>().join("+")).collect())
}

fn check_degree(n: usize, least: usize) -> Result<()> {
    if n < least {
        return Err(Error::Domain(format!("truncation degree must be at least {least}, got {n}")));
    }
    Ok(())
}

/// `HH_n(A)` for `0 ≤ n ≤ N - 1`.
pub fn hochschild(a: &Arc<AlgebraPresentation>, degree: usize, budget: Budget) -> Result<HomologyReport> {
    check_degree(degree, 1)?;
    let parts: Vec<Vec<usize>> = pieces(a, degree, budget)?
        .into_par_iter()
        .map(|w| Ok(Mixed::new(w, false)?.hh_dims(degree)))
        .collect::<Result<_>>()?;
    Ok(HomologyReport {
        theory: Theory::HH,
        subject: a.describe(),
        dims: sum_dims(&parts),
        per_class: class_breakdown(a, &parts),
        hh0_basis: class_sums(a),
        certificate: Certificate { window: degree, valid: (0, degree - 1), cutoff: None, stabilized: None },
    })
}

struct PieceCyclic {
    hh: Vec<usize>,
    hc: Vec<usize>,
    s: Vec<Matrix>,
    connes: Vec<ConnesRow>,
}

fn cyclic_piece(m: &Mixed, degree: usize) -> Result<PieceCyclic> {
    let top = degree - 2;
    let tot = Tot { m, pmin: 0, pmax: None };
    let hh_sp: Vec<HomologySpace> = (0..=top).map(|n| HomologySpace::new(&m.b[n], &m.b[n + 1])).collect();
    let hc_sp: Vec<HomologySpace> = (0..=top as i64)
        .map(|n| Ok(HomologySpace::new(&tot.d(n)?, &tot.d(n + 1)?)))
        .collect::<Result<_>>()?;
    let rank = |x: Matrix| rank_bounded(&x, None);
    let mut s = Vec::new();
    let mut connes = Vec::new();
    for n in 0..=top {
        let c0 = m.dim(n);
        // column 0 of Tot_n comes first
        let i_n = hh_sp[n].induced(&hc_sp[n], |v| v.clone())?;
        let mut row = ConnesRow { n, hh: hh_sp[n].dim(), hc: hc_sp[n].dim(), rank_i: rank(i_n), ..Default::default() };
        if n >= 1 {
            let c = m.dim(n - 1);
            let bd = hc_sp[n - 1].induced(&hh_sp[n], |v| {
                let z0: SparseVec = v.iter().filter(|(i, _)| *i < c).cloned().collect();
                m.big_b[n - 1].apply(&z0)
            })?;
            row.rank_boundary_in = rank(bd);
        }
        if n >= 2 {
            let sn = hc_sp[n].induced(&hc_sp[n - 2], |v| {
                v.iter().filter(|(i, _)| *i >= c0).map(|(i, x)| (i - c0, x.clone())).collect()
            })?;
            row.rank_s = rank(sn.clone());
            s.push(sn);
            let c = m.dim(n - 2);
            let bd = hc_sp[n - 2].induced(&hh_sp[n - 1], |v| {
                let z0: SparseVec = v.iter().filter(|(i, _)| *i < c).cloned().collect();
                m.big_b[n - 2].apply(&z0)
            })?;
            row.rank_boundary_out = rank(bd);
            row.hc_minus_two = hc_sp[n - 2].dim();
        }
        connes.push(row);
    }
    Ok(PieceCyclic { hh: m.hh_dims(degree), hc: hc_sp.iter().map(HomologySpace::dim).collect(), s, connes })
}

fn block_diag(field: &Field, mats: &[&Matrix]) -> Result<Matrix> {
    let (mut r0, mut c0) = (0, 0);
    let mut triplets = Vec::new();
    for m in mats {
        triplets.extend(m.entries().map(|(r, c, v)| (r0 + r, c0 + c, v.clone())));
        r0 += m.nrows();
        c0 += m.ncols();
    }
    Matrix::from_triplets(field.clone(), r0, c0, triplets)
}

/// `HC_n(A)` for `0 ≤ n ≤ N - 2` together with `HH`, the periodicity
/// operator `S` and the rank bookkeeping of Connes' exact sequence.
pub fn cyclic_homology(a: &Arc<AlgebraPresentation>, degree: usize, budget: Budget) -> Result<CyclicReport> {
    check_degree(degree, 2)?;
    let parts: Vec<PieceCyclic> = pieces(a, degree, budget)?
        .into_par_iter()
        .map(|w| cyclic_piece(&Mixed::new(w, true)?, degree))
        .collect::<Result<_>>()?;
    let hh: Vec<Vec<usize>> = parts.iter().map(|p| p.hh.clone()).collect();
    let hc: Vec<Vec<usize>> = parts.iter().map(|p| p.hc.clone()).collect();
    let s = (0..parts[0].s.len())
        .map(|i| block_diag(a.field(), &parts.iter().map(|p| &p.s[i]).collect::<Vec<_>>()))
        .collect::<Result<Vec<_>>>()?;
    let mut connes = parts[0].connes.clone();
    for p in &parts[1..] {
        for (row, o) in connes.iter_mut().zip(&p.connes) {
            row.add(o);
        }
    }
    let report = |theory, parts: &[Vec<usize>], valid| HomologyReport {
        theory,
        subject: a.describe(),
        dims: sum_dims(parts),
        per_class: class_breakdown(a, parts),
        hh0_basis: None,
        certificate: Certificate { window: degree, valid: (0, valid), cutoff: None, stabilized: None },
    };
    let mut hh_report = report(Theory::HH, &hh, degree - 1);
    hh_report.hh0_basis = class_sums(a);
    Ok(CyclicReport { hh: hh_report, hc: report(Theory::HC, &hc, degree - 2), s, connes })
}

fn truncated_dims(m: &Mixed, theory: Theory, cutoff: usize, n_max: usize) -> Result<Vec<usize>> {
    let pmax = if theory == Theory::HN { Some(0) } else { None };
    Tot { m, pmin: -(cutoff as i64), pmax }.homology_dims(0..=n_max as i64)
}

/// `HP_n` and `HN_n` for `0 ≤ n ≤ n_max` from the columns `-P ≤ p` of the
/// bicomplex, connectively truncated. Values are reported only when the
/// dimensions at `P` and `P + 1` agree.
pub fn hp_hn(
    a: &Arc<AlgebraPresentation>,
    n_max: usize,
    cutoff: usize,
    budget: Budget,
) -> Result<(HomologyReport, HomologyReport)> {
    if cutoff == 0 {
        return Err(Error::Domain("column cutoff must be at least 1".into()));
    }
    let window = n_max + 2 * (cutoff + 1) + 1;
    let mixed: Vec<Mixed> =
        pieces(a, window, budget)?.into_par_iter().map(|w| Mixed::new(w, true)).collect::<Result<_>>()?;
    let mut out = Vec::new();
    for theory in [Theory::HP, Theory::HN] {
        let mut at = Vec::new();
        for p in [cutoff, cutoff + 1] {
            let parts: Vec<Vec<usize>> =
                mixed.par_iter().map(|m| truncated_dims(m, theory, p, n_max)).collect::<Result<_>>()?;
            at.push(parts);
        }
        let (now, next) = (sum_dims(&at[0]), sum_dims(&at[1]));
        if now != next {
            return Err(Error::NotStabilized { theory: theory.to_string(), cutoff, at_cutoff: now, at_next: next });
        }
        out.push(HomologyReport {
            theory,
            subject: a.describe(),
            dims: now,
            per_class: class_breakdown(a, &at[0]),
            hh0_basis: None,
            certificate: Certificate { window, valid: (0, n_max), cutoff: Some(cutoff), stabilized: Some(true) },
        });
    }
    let hn = out.pop().unwrap();
    let hp = out.pop().unwrap();
    Ok((hp, hn))
}

/// Preimage in `A` of the image of `h_0: HN_0(A) -> HH_0(A)`.
#[derive(Clone, Debug)]
pub struct Hn0Image {
    /// Subspace of `A` (standard basis) containing `[A, A]`.
    pub image: Subspace,
    pub cutoff: usize,
    /// The subspace is the same at cutoff `P + 1`.
    pub stabilized: bool,
}

fn hn0_piece(m: &Mixed, cutoff: usize) -> Result<Vec<SparseVec>> {
    let tot = Tot { m, pmin: -(cutoff as i64), pmax: Some(0) };
    let d0 = tot.d(0)?;
    let c0 = m.dim(0);
    let off = d0.ncols() - c0;
    let cols = d0.columns();
    let rest = Subspace::span(m.field().clone(), d0.nrows(), &cols[..off]);
    let residues: Vec<SparseVec> = cols[off..].iter().map(|v| rest.reduce(v)).collect();
    let (_, ker) = rank_kernel(&Matrix::from_columns(m.field().clone(), d0.nrows(), &residues)?);
    let global = |v: &SparseVec| -> SparseVec {
        let mut g: SparseVec = v.iter().map(|(i, x)| (m.window().tuple(0, *i)[0], x.clone())).collect();
        g.sort_by_key(|e| e.0);
        g
    };
    let mut out: Vec<SparseVec> = ker.basis().iter().map(global).collect();
    out.extend(m.b[1].columns().iter().map(global));
    Ok(out)
}

/// Image of `HN_0 -> HH_0`, lifted to `A`, with a stabilization check.
pub fn hn0_image(a: &Arc<AlgebraPresentation>, cutoff: usize, budget: Budget) -> Result<Hn0Image> {
    if cutoff == 0 {
        return Err(Error::Domain("column cutoff must be at least 1".into()));
    }
    let mixed: Vec<Mixed> = pieces(a, 2 * (cutoff + 1), budget)?
        .into_par_iter()
        .map(|w| Mixed::new(w, true))
        .collect::<Result<_>>()?;
    let mut spans = Vec::new();
    for p in [cutoff, cutoff + 1] {
        let vs: Vec<Vec<SparseVec>> = mixed.par_iter().map(|m| hn0_piece(m, p)).collect::<Result<_>>()?;
        spans.push(Subspace::span(a.field().clone(), a.dim(), &vs.concat()));
    }
    let stabilized = spans[0] == spans[1];
    Ok(Hn0Image { image: spans.swap_remove(0), cutoff, stabilized })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactla::cyclotomic_field;
    use crate::grp::{FiniteGroup, GroupDescriptor};

    fn alg(a: AlgebraPresentation) -> Arc<AlgebraPresentation> {
        Arc::new(a)
    }

    fn q() -> Arc<AlgebraPresentation> {
        alg(AlgebraPresentation::ground(Field::Rational))
    }

    fn qg(desc: GroupDescriptor) -> Arc<AlgebraPresentation> {
        alg(AlgebraPresentation::group_algebra(&FiniteGroup::build(&desc).unwrap(), Field::Rational).unwrap())
    }

    fn nf(d: u64) -> Arc<AlgebraPresentation> {
        alg(AlgebraPresentation::number_field(&cyclotomic_field(d).unwrap()).unwrap())
    }

    fn s3() -> GroupDescriptor {
        GroupDescriptor::Perm { degree: 3, gens: vec![vec![1, 0, 2], vec![1, 2, 0]] }
    }

    const BUDGET: Budget = Budget(300_000);

    #[test]
    fn hochschild_examples() {
        assert_eq!(hochschild(&q(), 4, BUDGET).unwrap().dims, vec![1, 0, 0, 0]);
        assert_eq!(hochschild(&qg(GroupDescriptor::Cyclic { n: 2 }), 4, BUDGET).unwrap().dims, vec![2, 0, 0, 0]);
        assert_eq!(hochschild(&nf(3), 3, BUDGET).unwrap().dims, vec![2, 0, 0]);
        let r = hochschild(&qg(s3()), 3, BUDGET).unwrap();
        assert_eq!(r.dims, vec![3, 0, 0]);
        assert_eq!(r.per_class.unwrap().len(), 3);
        assert_eq!(r.hh0_basis.unwrap().len(), 3);
    }

    #[test]
    fn non_separable_algebra_has_higher_hh() {
        // Q[x]/(x^2): HH_n is 1-dimensional in every positive degree
        let z = Scalar::from(crate::exactla::Rational::one());
        let dual = AlgebraPresentation::new(
            Field::Rational,
            vec!["1".into(), "x".into()],
            vec![vec![vec![(0, z.clone())], vec![(1, z.clone())]], vec![vec![(1, z.clone())], vec![]]],
            vec![(0, z)],
        )
        .unwrap();
        let r = hochschild(&alg(dual), 4, BUDGET).unwrap();
        assert_eq!(r.dims, vec![2, 1, 1, 1]);
    }

    #[test]
    fn cyclic_examples() {
        let r = cyclic_homology(&q(), 6, BUDGET).unwrap();
        assert_eq!(r.hc.dims, vec![1, 0, 1, 0, 1]);
        assert_eq!(r.s[0], Matrix::identity(Field::Rational, 1));
        assert!(r.connes_exact());
        let r = cyclic_homology(&qg(GroupDescriptor::Cyclic { n: 2 }), 4, BUDGET).unwrap();
        assert_eq!(r.hc.dims, vec![2, 0, 2]);
        let r = cyclic_homology(&nf(4), 4, BUDGET).unwrap();
        assert_eq!(r.hc.dims, vec![2, 0, 2]);
        assert!(r.connes_exact());
    }

    #[test]
    fn periodic_and_negative() {
        let (hp, hn) = hp_hn(&q(), 3, 3, BUDGET).unwrap();
        assert_eq!(hp.dims, vec![1, 0, 1, 0]);
        assert_eq!(hn.dims, vec![1, 0, 0, 0]);
        assert_eq!(hp.certificate.stabilized, Some(true));
        let (hp, hn) = hp_hn(&qg(GroupDescriptor::Cyclic { n: 2 }), 2, 3, BUDGET).unwrap();
        assert_eq!((hp.dims, hn.dims), (vec![2, 0, 2], vec![2, 0, 0]));
        let (hp, hn) = hp_hn(&nf(3), 2, 3, BUDGET).unwrap();
        assert_eq!((hp.dims, hn.dims), (vec![2, 0, 2], vec![2, 0, 0]));
    }

    #[test]
    fn dual_numbers_hn_is_refused_or_certified() {
        // over a non-smooth algebra the truncations need not agree; either
        // outcome must be explicit
        let z = Scalar::from(crate::exactla::Rational::one());
        let dual = AlgebraPresentation::new(
            Field::Rational,
            vec!["1".into(), "x".into()],
            vec![vec![vec![(0, z.clone())], vec![(1, z.clone())]], vec![vec![(1, z.clone())], vec![]]],
            vec![(0, z)],
        )
        .unwrap();
        match hp_hn(&alg(dual), 2, 2, BUDGET) {
            Ok((hp, _)) => assert_eq!(hp.certificate.stabilized, Some(true)),
            Err(e) => assert!(matches!(e, Error::NotStabilized { .. })),
        }
    }

    #[test]
    fn connes_sequence_for_group_algebra() {
        let r = cyclic_homology(&qg(s3()), 4, BUDGET).unwrap();
        assert_eq!(r.hh.dims, vec![3, 0, 0, 0]);
        assert_eq!(r.hc.dims, vec![3, 0, 3]);
        assert!(r.connes_exact());
    }

    #[test]
    fn hn0_image_is_everything_for_separable() {
        let a = qg(GroupDescriptor::Cyclic { n: 3 });
        let img = hn0_image(&a, 1, BUDGET).unwrap();
        assert!(img.stabilized);
        assert_eq!(img.image.dim(), 3);
    }

    #[test]
    fn window_is_respected() {
        assert!(hochschild(&q(), 0, BUDGET).is_err());
        assert!(cyclic_homology(&q(), 1, BUDGET).is_err());
    }
}
