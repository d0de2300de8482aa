use std::collections::BTreeMap;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use super::ring::{BurnsideElem, BurnsideRing, Inclusion};
use crate::exactla::{Field, Matrix, RationalMatrix, Scalar};
use crate::grp::{FiniteGroup, GroupDescriptor, SubgroupLattice, SubgroupRec};
use crate::{Error, Result};

/// All subgroups of an ambient group, each with its own Burnside ring.
/// The ring of subgroup `i` is built on the group whose element `j` is the
/// `j`-th smallest ambient element of the subgroup.
#[derive(Debug)]
pub struct MackeyDomain {
    group: FiniteGroup,
    lattice: SubgroupLattice,
    rings: Vec<Arc<BurnsideRing>>,
}

impl MackeyDomain {
    pub fn new(group: FiniteGroup) -> Result<Arc<Self>> {
        let lattice = SubgroupLattice::new(&group)?;
        let rings = lattice
            .subgroups()
            .iter()
            .map(|h| BurnsideRing::new(group.subgroup_as_group(h.elements())?.0))
            .collect::<Result<Vec<_>>>()?;
        Ok(Arc::new(MackeyDomain { group, lattice, rings }))
    }

    pub fn group(&self) -> &FiniteGroup {
        &self.group
    }

    pub fn lattice(&self) -> &SubgroupLattice {
        &self.lattice
    }

    pub fn len(&self) -> usize {
        self.rings.len()
    }

    pub fn is_empty(&self) -> bool {
        self.rings.is_empty()
    }

    pub fn subgroup(&self, i: usize) -> &SubgroupRec {
        self.lattice.get(i)
    }

    pub fn ring(&self, i: usize) -> &Arc<BurnsideRing> {
        &self.rings[i]
    }

    /// Index of the whole group.
    pub fn top(&self) -> usize {
        self.rings.len() - 1
    }

    pub fn index_of(&self, elements: &[usize]) -> Result<usize> {
        self.lattice
            .index_of(elements)
            .ok_or_else(|| Error::Validation(format!("{elements:?} is not a subgroup")))
    }

    /// Pairs `(d, e)` with `D <= E`.
    pub fn pairs(&self) -> Vec<(usize, usize)> {
        (0..self.len())
            .flat_map(|e| self.lattice.subgroups_of(e).into_iter().map(move |d| (d, e)))
            .collect()
    }

    /// Ambient elements of the representative of subgroup class `k` of the
    /// ring of subgroup `i`.
    pub fn ambient_class_rep(&self, i: usize, k: usize) -> Vec<usize> {
        let elems = self.subgroup(i).elements();
        let mut v: Vec<usize> = self.rings[i].marks().representatives()[k].iter().map(|&x| elems[x]).collect();
        v.sort_unstable();
        v
    }

    /// Class in the ring of subgroup `i` of a subgroup of it given by
    /// ambient elements.
    pub fn local_class(&self, i: usize, ambient: &[usize]) -> Result<usize> {
        let elems = self.subgroup(i).elements();
        let mut local = ambient
            .iter()
            .map(|x| elems.binary_search(x).map_err(|_| Error::Validation("not contained in the subgroup".into())))
            .collect::<Result<Vec<_>>>()?;
        local.sort_unstable();
        self.rings[i]
            .class_of_subgroup(&local)
            .ok_or_else(|| Error::Validation("not a subgroup".into()))
    }

    /// Inclusion of subgroup `d` into subgroup `e`.
    pub fn inclusion(&self, d: usize, e: usize) -> Result<Inclusion> {
        let big = self.subgroup(e).elements();
        let embed = self
            .subgroup(d)
            .elements()
            .iter()
            .map(|x| big.binary_search(x).map_err(|_| Error::Validation(format!("subgroup {d} is not inside {e}"))))
            .collect::<Result<Vec<_>>>()?;
        Inclusion::new(self.rings[d].clone(), self.rings[e].clone(), embed)
    }

    /// Index of `g D g^-1`.
    pub fn conjugate(&self, g: usize, d: usize) -> usize {
        let c = self.subgroup(d).conjugate(&self.group, g);
        self.lattice.index_of(c.elements()).expect("conjugate of a subgroup")
    }

    /// Short human-readable name such as `C3{0,4,8}`.
    pub fn label(&self, i: usize) -> String {
        let h = self.subgroup(i);
        let kind = if h.order() == 1 {
            "e".to_string()
        } else if h.is_cyclic() {
            format!("C{}", h.order())
        } else {
            format!("H{}", h.order())
        };
        let elems: Vec<String> = h.elements().iter().map(usize::to_string).collect();
        format!("{kind}{{{}}}", elems.join(","))
    }

    fn intersect(&self, a: &[usize], b: &[usize]) -> usize {
        let v: Vec<usize> = a.iter().copied().filter(|x| b.binary_search(x).is_ok()).collect();
        self.lattice.index_of(&v).expect("intersection of subgroups")
    }
}

/// A rational Mackey functor on the subgroups of a finite group, stored as
/// explicit matrices acting on column vectors.
#[derive(Clone, Debug)]
pub struct MackeyModule {
    name: String,
    domain: Arc<MackeyDomain>,
    bases: Vec<Vec<String>>,
    ind: BTreeMap<(usize, usize), Matrix>,
    res: BTreeMap<(usize, usize), Matrix>,
    conj: BTreeMap<(usize, usize), Matrix>,
    action: Vec<Vec<Option<Matrix>>>,
}

/// Closures producing the structure maps of a Mackey functor.
pub struct MackeyParts<'a> {
    pub basis: &'a dyn Fn(usize) -> Result<Vec<String>>,
    /// `ind_D^E` for `D <= E`.
    pub ind: &'a dyn Fn(usize, usize) -> Result<Matrix>,
    /// `res^E_D` for `D <= E`, called with `(d, e)`.
    pub res: &'a dyn Fn(usize, usize) -> Result<Matrix>,
    /// `c_g: M(D) -> M(gDg^-1)`, called with `(g, d)`.
    pub conj: &'a dyn Fn(usize, usize) -> Result<Matrix>,
    /// Action of the basis element `k` of `A(D)` on `M(D)`, called with `(d, k)`.
    pub action: &'a dyn Fn(usize, usize) -> Result<Matrix>,
}

impl MackeyModule {
    pub fn assemble(name: impl Into<String>, domain: Arc<MackeyDomain>, parts: MackeyParts<'_>) -> Result<Self> {
        let bases = (0..domain.len()).map(|i| (parts.basis)(i)).collect::<Result<Vec<_>>>()?;
        let mut ind = BTreeMap::new();
        let mut res = BTreeMap::new();
        for (d, e) in domain.pairs() {
            ind.insert((d, e), (parts.ind)(d, e)?);
            res.insert((d, e), (parts.res)(d, e)?);
        }
        let mut conj = BTreeMap::new();
        for g in 0..domain.group().order() {
            for d in 0..domain.len() {
                conj.insert((g, d), (parts.conj)(g, d)?);
            }
        }
        let action = (0..domain.len())
            .map(|d| (0..domain.ring(d).rank()).map(|k| (parts.action)(d, k).map(Some)).collect())
            .collect::<Result<Vec<_>>>()?;
        let m = MackeyModule { name: name.into(), domain, bases, ind, res, conj, action };
        m.check_shapes()?;
        Ok(m)
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn domain(&self) -> &Arc<MackeyDomain> {
        &self.domain
    }

    pub fn dim(&self, d: usize) -> usize {
        self.bases[d].len()
    }

    pub fn basis_labels(&self, d: usize) -> &[String] {
        &self.bases[d]
    }

    pub fn ind(&self, d: usize, e: usize) -> Result<&Matrix> {
        self.ind
            .get(&(d, e))
            .ok_or_else(|| Error::IncompleteMackey(format!("no induction {} -> {}", self.domain.label(d), self.domain.label(e))))
    }

    pub fn res(&self, e: usize, d: usize) -> Result<&Matrix> {
        self.res
            .get(&(d, e))
            .ok_or_else(|| Error::IncompleteMackey(format!("no restriction {} -> {}", self.domain.label(e), self.domain.label(d))))
    }

    pub fn conj(&self, g: usize, d: usize) -> Result<&Matrix> {
        self.conj
            .get(&(g, d))
            .ok_or_else(|| Error::IncompleteMackey(format!("no conjugation by {g} on {}", self.domain.label(d))))
    }

    /// Matrix of the basis element `k` of `A(D)` acting on `M(D)`.
    pub fn action_basis(&self, d: usize, k: usize) -> Result<&Matrix> {
        self.action
            .get(d)
            .and_then(|v| v.get(k))
            .and_then(Option::as_ref)
            .ok_or_else(|| Error::IncompleteMackey(format!("no action of basis {k} on {}", self.domain.label(d))))
    }

    /// Matrix by which `x ∈ A(D) ⊗ Q` acts on `M(D)`.
    pub fn act(&self, d: usize, x: &BurnsideElem) -> Result<Matrix> {
        BurnsideElem::zero(self.domain.ring(d)).add(x)?;
        let mut out = Matrix::zeros(Field::Rational, self.dim(d), self.dim(d));
        for (k, c) in x.coeffs().iter().enumerate() {
            if !c.is_zero() {
                let s = Scalar::from(c.clone());
                out = out.lin_comb(&Scalar::from(crate::exactla::Rational::one()), self.action_basis(d, k)?, &s)?;
            }
        }
        Ok(out)
    }

    fn check_shapes(&self) -> Result<()> {
        let shape = |m: &Matrix, r: usize, c: usize| {
            if m.nrows() != r || m.ncols() != c {
                Err(Error::DimensionMismatch { expected: r * c, found: m.nrows() * m.ncols() })
            } else {
                Ok(())
            }
        };
        for (&(d, e), m) in &self.ind {
            shape(m, self.dim(e), self.dim(d))?;
        }
        for (&(d, e), m) in &self.res {
            shape(m, self.dim(d), self.dim(e))?;
        }
        for (&(g, d), m) in &self.conj {
            shape(m, self.dim(self.domain.conjugate(g, d)), self.dim(d))?;
        }
        for (d, acts) in self.action.iter().enumerate() {
            for m in acts.iter().flatten() {
                shape(m, self.dim(d), self.dim(d))?;
            }
        }
        Ok(())
    }

    /// `ind_E^F ∘ ind_D^E = ind_D^F`, the same for restriction, and
    /// `ind_D^D = res^D_D = id`.
    pub fn check_functoriality(&self) -> Result<bool> {
        let dom = &self.domain;
        for (d, e) in dom.pairs() {
            if d == e {
                let id = Matrix::identity(Field::Rational, self.dim(d));
                if self.ind(d, d)? != &id || self.res(d, d)? != &id {
                    return Ok(false);
                }
                continue;
            }
            for f in 0..dom.len() {
                if !dom.subgroup(e).is_subgroup_of(dom.subgroup(f)) {
                    continue;
                }
                if &self.ind(e, f)?.mul(self.ind(d, e)?)? != self.ind(d, f)? {
                    return Ok(false);
                }
                if &self.res(e, d)?.mul(self.res(f, e)?)? != self.res(f, d)? {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }

    /// Conjugation by an element of `D` is the identity on `M(D)`, and
    /// `c_g c_h = c_{gh}`.
    pub fn check_conjugation(&self) -> Result<bool> {
        let dom = &self.domain;
        let g = dom.group();
        for d in 0..dom.len() {
            for &h in dom.subgroup(d).elements() {
                if self.conj(h, d)? != &Matrix::identity(Field::Rational, self.dim(d)) {
                    return Ok(false);
                }
            }
            for a in 0..g.order() {
                for b in 0..g.order() {
                    let lhs = self.conj(a, dom.conjugate(b, d))?.mul(self.conj(b, d)?)?;
                    if &lhs != self.conj(g.mul(a, b), d)? {
                        return Ok(false);
                    }
                }
            }
        }
        Ok(true)
    }

    /// `[D/D]` acts as the identity on every `M(D)`.
    pub fn check_unit_action(&self) -> Result<bool> {
        for d in 0..self.domain.len() {
            let top = self.domain.ring(d).rank() - 1;
            if self.action_basis(d, top)? != &Matrix::identity(Field::Rational, self.dim(d)) {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Double coset formula for `H, K <= L`:
    /// `res^L_K ind_H^L = Σ_{KgH} ind^K_{K∩gHg^-1} c_g res^H_{H∩g^-1Kg}`.
    pub fn check_double_coset(&self, l: usize, h: usize, k: usize) -> Result<bool> {
        let dom = &self.domain;
        let g = dom.group();
        let lhs = self.res(l, k)?.mul(self.ind(h, l)?)?;
        let (hs, ks) = (dom.subgroup(h).elements(), dom.subgroup(k).elements());
        let mut rhs = Matrix::zeros(Field::Rational, self.dim(k), self.dim(h));
        let mut covered = vec![false; g.order()];
        for &x in dom.subgroup(l).elements() {
            if covered[x] {
                continue;
            }
            for &a in ks {
                for &b in hs {
                    covered[g.mul(g.mul(a, x), b)] = true;
                }
            }
            let ghg: Vec<usize> = {
                let mut v: Vec<usize> = hs.iter().map(|&y| g.conjugate(x, y)).collect();
                v.sort_unstable();
                v
            };
            let top = dom.intersect(ks, &ghg);
            let gkg: Vec<usize> = {
                let mut v: Vec<usize> = ks.iter().map(|&y| g.conjugate(g.inv(x), y)).collect();
                v.sort_unstable();
                v
            };
            let bottom = dom.intersect(hs, &gkg);
            let term = self.ind(top, k)?.mul(self.conj(x, bottom)?)?.mul(self.res(h, bottom)?)?;
            rhs = rhs.add(&term)?;
        }
        Ok(lhs == rhs)
    }

    /// Double coset formula for every `L` and all `H, K <= L`.
    pub fn check_double_coset_all(&self) -> Result<bool> {
        let dom = &self.domain;
        for l in 0..dom.len() {
            let subs = dom.lattice().subgroups_of(l);
            for &h in &subs {
                for &k in &subs {
                    if !self.check_double_coset(l, h, k)? {
                        return Ok(false);
                    }
                }
            }
        }
        Ok(true)
    }

    /// Runs every axiom check, failing with a validation error.
    pub fn validate(&self) -> Result<()> {
        let checks = [
            ("functoriality", self.check_functoriality()?),
            ("conjugation", self.check_conjugation()?),
            ("unit action", self.check_unit_action()?),
            ("double coset formula", self.check_double_coset_all()?),
        ];
        match checks.iter().find(|(_, ok)| !ok) {
            Some((what, _)) => Err(Error::Validation(format!("{}: {what} fails", self.name))),
            None => Ok(()),
        }
    }

    pub fn to_json(&self) -> Result<MackeyJson> {
        let dom = &self.domain;
        let mat = |m: &Matrix| RationalMatrix::from_matrix(m);
        let map = |src: &BTreeMap<(usize, usize), Matrix>, flip: bool| {
            src.iter()
                .map(|(&(d, e), m)| {
                    let (from, to) = if flip { (e, d) } else { (d, e) };
                    Ok(MapJson {
                        from: dom.subgroup(from).elements().to_vec(),
                        to: dom.subgroup(to).elements().to_vec(),
                        matrix: mat(m)?,
                    })
                })
                .collect::<Result<Vec<_>>>()
        };
        let conj = self
            .conj
            .iter()
            .map(|(&(g, d), m)| Ok(ConjJson { g, subgroup: dom.subgroup(d).elements().to_vec(), matrix: mat(m)? }))
            .collect::<Result<Vec<_>>>()?;
        let mut action = Vec::new();
        for (d, acts) in self.action.iter().enumerate() {
            for (k, m) in acts.iter().enumerate() {
                if let Some(m) = m {
                    action.push(ActionJson {
                        subgroup: dom.subgroup(d).elements().to_vec(),
                        orbit_stabilizer: dom.ambient_class_rep(d, k),
                        matrix: mat(m)?,
                    });
                }
            }
        }
        Ok(MackeyJson {
            name: self.name.clone(),
            group: GroupDescriptor::Table { table: dom.group().table_rows() },
            values: (0..dom.len())
                .map(|d| ValueJson { subgroup: dom.subgroup(d).elements().to_vec(), basis: self.bases[d].clone() })
                .collect(),
            ind: map(&self.ind, false)?,
            res: map(&self.res, true)?,
            conj,
            action,
        })
    }

    /// Rebuilds a module from JSON. Missing maps are allowed and surface as
    /// incomplete-Mackey errors when used.
    pub fn from_json(j: &MackeyJson) -> Result<Self> {
        let dom = MackeyDomain::new(FiniteGroup::build(&j.group)?)?;
        let mut bases = vec![None; dom.len()];
        for v in &j.values {
            bases[dom.index_of(&v.subgroup)?] = Some(v.basis.clone());
        }
        let bases = bases
            .into_iter()
            .enumerate()
            .map(|(i, b)| b.ok_or_else(|| Error::IncompleteMackey(format!("no value at {}", dom.label(i)))))
            .collect::<Result<Vec<_>>>()?;
        let mut ind = BTreeMap::new();
        for m in &j.ind {
            ind.insert((dom.index_of(&m.from)?, dom.index_of(&m.to)?), m.matrix.to_matrix()?);
        }
        let mut res = BTreeMap::new();
        for m in &j.res {
            res.insert((dom.index_of(&m.to)?, dom.index_of(&m.from)?), m.matrix.to_matrix()?);
        }
        let mut conj = BTreeMap::new();
        for c in &j.conj {
            if c.g >= dom.group().order() {
                return Err(Error::Validation(format!("conjugating element {} out of range", c.g)));
            }
            conj.insert((c.g, dom.index_of(&c.subgroup)?), c.matrix.to_matrix()?);
        }
        let mut action: Vec<Vec<Option<Matrix>>> = (0..dom.len()).map(|d| vec![None; dom.ring(d).rank()]).collect();
        for a in &j.action {
            let d = dom.index_of(&a.subgroup)?;
            let k = dom.local_class(d, &a.orbit_stabilizer)?;
            action[d][k] = Some(a.matrix.to_matrix()?);
        }
        for (&(d, e), _) in ind.iter().chain(res.iter()) {
            if !dom.subgroup(d).is_subgroup_of(dom.subgroup(e)) {
                return Err(Error::Validation(format!("{} is not inside {}", dom.label(d), dom.label(e))));
            }
        }
        let m = MackeyModule { name: j.name.clone(), domain: dom, bases, ind, res, conj, action };
        m.check_shapes()?;
        Ok(m)
    }
}

/// JSON form of a [`MackeyModule`]. Subgroups are sorted ambient element
/// lists; an action entry names the basis element `[D/E]` by `E`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct MackeyJson {
    pub name: String,
    pub group: GroupDescriptor,
    pub values: Vec<ValueJson>,
    pub ind: Vec<MapJson>,
    pub res: Vec<MapJson>,
    pub conj: Vec<ConjJson>,
    pub action: Vec<ActionJson>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ValueJson {
    pub subgroup: Vec<usize>,
    pub basis: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct MapJson {
    pub from: Vec<usize>,
    pub to: Vec<usize>,
    pub matrix: RationalMatrix,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ConjJson {
    pub g: usize,
    pub subgroup: Vec<usize>,
    pub matrix: RationalMatrix,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ActionJson {
    pub subgroup: Vec<usize>,
    pub orbit_stabilizer: Vec<usize>,
    pub matrix: RationalMatrix,
}

fn coeff_column(x: &BurnsideElem) -> Vec<Scalar> {
    x.coeffs().iter().cloned().map(Scalar::from).collect()
}

fn columns_matrix(nrows: usize, cols: Vec<Vec<Scalar>>) -> Result<Matrix> {
    let sparse: Vec<_> = cols.iter().map(|c| crate::exactla::to_sparse(c)).collect();
    Matrix::from_columns(Field::Rational, nrows, &sparse)
}

/// The Burnside Mackey functor `D ↦ A(D) ⊗ Q`.
pub fn burnside_mackey(domain: Arc<MackeyDomain>) -> Result<MackeyModule> {
    let dom = domain.clone();
    let basis = |d: usize| Ok(dom.ring(d).labels().to_vec());
    let ind = |d: usize, e: usize| {
        let inc = dom.inclusion(d, e)?;
        let cols = (0..dom.ring(d).rank())
            .map(|k| inc.ind(&BurnsideElem::basis(inc.sub(), k)).map(|x| coeff_column(&x)))
            .collect::<Result<Vec<_>>>()?;
        columns_matrix(dom.ring(e).rank(), cols)
    };
    let res = |d: usize, e: usize| {
        let inc = dom.inclusion(d, e)?;
        let cols = (0..dom.ring(e).rank())
            .map(|k| inc.res(&BurnsideElem::basis(inc.sup(), k)).map(|x| coeff_column(&x)))
            .collect::<Result<Vec<_>>>()?;
        columns_matrix(dom.ring(d).rank(), cols)
    };
    let conj = |g: usize, d: usize| {
        let target = dom.conjugate(g, d);
        let grp = dom.group();
        let triplets = (0..dom.ring(d).rank())
            .map(|k| {
                let mut img: Vec<usize> = dom.ambient_class_rep(d, k).iter().map(|&x| grp.conjugate(g, x)).collect();
                img.sort_unstable();
                Ok((dom.local_class(target, &img)?, k, 1))
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(Matrix::from_int_triplets(dom.ring(target).rank(), dom.ring(d).rank(), triplets))
    };
    let action = |d: usize, k: usize| {
        let ring = dom.ring(d);
        let x = BurnsideElem::basis(ring, k);
        let cols = (0..ring.rank())
            .map(|j| x.mul(&BurnsideElem::basis(ring, j)).map(|p| coeff_column(&p)))
            .collect::<Result<Vec<_>>>()?;
        columns_matrix(ring.rank(), cols)
    };
    MackeyModule::assemble(
        "A(-)⊗Q",
        domain.clone(),
        MackeyParts { basis: &basis, ind: &ind, res: &res, conj: &conj, action: &action },
    )
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s3() -> FiniteGroup {
        FiniteGroup::build(&GroupDescriptor::Perm { degree: 3, gens: vec![vec![1, 0, 2], vec![1, 2, 0]] }).unwrap()
    }

    #[test]
    fn burnside_functor_axioms() {
        for g in [FiniteGroup::cyclic(6).unwrap(), s3()] {
            let m = burnside_mackey(MackeyDomain::new(g).unwrap()).unwrap();
            m.validate().unwrap();
        }
    }

    #[test]
    fn json_round_trip() {
        let m = burnside_mackey(MackeyDomain::new(FiniteGroup::cyclic(4).unwrap()).unwrap()).unwrap();
        let j = m.to_json().unwrap();
        let text = serde_json::to_string(&j).unwrap();
        let back: MackeyJson = serde_json::from_str(&text).unwrap();
        let m2 = MackeyModule::from_json(&back).unwrap();
        m2.validate().unwrap();
        assert_eq!(m2.to_json().unwrap(), j);
    }

    #[test]
    fn missing_map_is_reported() {
        let m = burnside_mackey(MackeyDomain::new(FiniteGroup::cyclic(2).unwrap()).unwrap()).unwrap();
        let mut j = m.to_json().unwrap();
        j.ind.clear();
        let m2 = MackeyModule::from_json(&j).unwrap();
        assert!(matches!(m2.ind(0, 1), Err(Error::IncompleteMackey(_))));
    }

    #[test]
    fn broken_double_coset_detected() {
        let m = burnside_mackey(MackeyDomain::new(FiniteGroup::cyclic(2).unwrap()).unwrap()).unwrap();
        let mut j = m.to_json().unwrap();
        let e = j.ind.iter_mut().find(|x| x.from == vec![0] && x.to == vec![0, 1]).unwrap();
        e.matrix.data[0][0] = crate::exactla::Rational::from(3);
        let m2 = MackeyModule::from_json(&j).unwrap();
        assert!(!m2.check_double_coset(1, 0, 0).unwrap());
    }
}
