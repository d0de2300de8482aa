//! Cyclic homology from the unnormalized `b`/`b'` bicomplex, used as an
//! independent check of the mixed-complex computation on small algebras.

use std::sync::Arc;

use super::algebra::AlgebraPresentation;
use super::window::{Budget, CyclicWindow, Normalization};
use crate::exactla::{rank, Matrix};
use crate::{Error, Result};

/// Largest algebra dimension accepted by [`tsygan_hc`].
pub const TSYGAN_DIM_BOUND: usize = 3;

/// `HC_n(A)` for `0 ≤ n ≤ N - 2`. Column `p` holds `C_q` with vertical
/// differential `b` (p even) or `-b'` (p odd); the horizontal map into
/// column `p - 1` is `1 - t` from odd columns and the norm
/// `1 + t + … + t^q` from even ones.
pub fn tsygan_hc(a: &Arc<AlgebraPresentation>, degree: usize) -> Result<Vec<usize>> {
    if a.dim() > TSYGAN_DIM_BOUND {
        return Err(Error::Capability(format!(
            "the b/b' bicomplex is limited to dimension {TSYGAN_DIM_BOUND}, got {}",
            a.dim()
        )));
    }
    if degree < 2 {
        return Err(Error::Domain("truncation degree must be at least 2".into()));
    }
    let a = if a.unit_is_first() { a.clone() } else { Arc::new(a.with_unit_first()?) };
    let w = CyclicWindow::new(a, degree, Normalization::Unnormalized, Budget::default())?;
    let field = w.field().clone();
    let minus = field.from_int(-1);
    let mut b = Vec::new();
    let mut bp = Vec::new();
    let mut one_minus_t = Vec::new();
    let mut norm = Vec::new();
    for q in 0..degree {
        b.push(w.b(q)?);
        bp.push(w.b_prime(q)?.scale(&minus));
        let t = w.cyclic_t(q)?;
        let id = Matrix::identity(field.clone(), w.dim(q));
        one_minus_t.push(id.sub(&t)?);
        let mut acc = id.clone();
        let mut power = id;
        for _ in 0..q {
            power = t.mul(&power)?;
            acc = acc.add(&power)?;
        }
        norm.push(acc);
    }
    let offsets = |n: usize| {
        let mut off = vec![0];
        for p in 0..=n {
            off.push(off[p] + w.dim(n - p));
        }
        off
    };
    let d = |n: usize| -> Result<Matrix> {
        let (src, dst) = (offsets(n), if n == 0 { vec![0] } else { offsets(n - 1) });
        let mut triplets = Vec::new();
        for p in 0..=n {
            let q = n - p;
            if q >= 1 {
                let v = if p % 2 == 0 { &b[q] } else { &bp[q] };
                triplets.extend(v.entries().map(|(r, c, x)| (dst[p] + r, src[p] + c, x.clone())));
            }
            if p >= 1 {
                let h = if p % 2 == 1 { &one_minus_t[q] } else { &norm[q] };
                triplets.extend(h.entries().map(|(r, c, x)| (dst[p - 1] + r, src[p] + c, x.clone())));
            }
        }
        Matrix::from_triplets(field.clone(), *dst.last().unwrap(), src[n + 1], triplets)
    };
    let ranks: Vec<usize> = (0..degree).map(|n| d(n).map(|m| rank(&m))).collect::<Result<_>>()?;
    Ok((0..=degree - 2).map(|n| offsets(n)[n + 1] - ranks[n] - ranks[n + 1]).collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cyclic::homology::cyclic_homology;
    use crate::exactla::{cyclotomic_field, Field};
    use crate::grp::FiniteGroup;

    #[test]
    fn agrees_with_mixed_complex() {
        let algebras = vec![
            AlgebraPresentation::ground(Field::Rational),
            AlgebraPresentation::group_algebra(&FiniteGroup::cyclic(2).unwrap(), Field::Rational).unwrap(),
            AlgebraPresentation::group_algebra(&FiniteGroup::cyclic(3).unwrap(), Field::Rational).unwrap(),
            AlgebraPresentation::number_field(&cyclotomic_field(3).unwrap()).unwrap(),
            AlgebraPresentation::number_field(&cyclotomic_field(4).unwrap()).unwrap(),
            AlgebraPresentation::ground(cyclotomic_field(3).unwrap()),
        ];
        for a in algebras {
            let a = Arc::new(a);
            let oracle = tsygan_hc(&a, 4).unwrap();
            let mixed = cyclic_homology(&a, 4, Budget::default()).unwrap();
            assert_eq!(oracle, mixed.hc.dims, "{}", a.describe());
        }
    }

    #[test]
    fn dual_numbers_agree() {
        let z = crate::exactla::Scalar::from(crate::exactla::Rational::one());
        let dual = AlgebraPresentation::new(
            Field::Rational,
            vec!["1".into(), "x".into()],
            vec![vec![vec![(0, z.clone())], vec![(1, z.clone())]], vec![vec![(1, z.clone())], vec![]]],
            vec![(0, z)],
        )
        .unwrap();
        let a = Arc::new(dual);
        assert_eq!(tsygan_hc(&a, 5).unwrap(), cyclic_homology(&a, 5, Budget::default()).unwrap().hc.dims);
    }

    #[test]
    fn refuses_large_algebras() {
        let a = Arc::new(
            AlgebraPresentation::group_algebra(&FiniteGroup::cyclic(4).unwrap(), Field::Rational).unwrap(),
        );
        assert!(matches!(tsygan_hc(&a, 3), Err(Error::Capability(_))));
    }
}
