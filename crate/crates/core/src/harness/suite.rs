use std::collections::BTreeMap;
use std::sync::{Arc, Mutex};
use std::time::{Instant, SystemTime, UNIX_EPOCH};

use rayon::prelude::*;
use serde_json::{json, Value};

use super::catalog::GroupEntry;
use super::config::SuiteConfig;
use super::fixtures::{field_algebra, field_fixture, group_fixture, FieldFixture, Fixtures, GroupFixture, FIELD_DEGREE};
use super::oracles::canonical_conjugate;
use super::report::{CheckRecord, Provenance, SuiteReport, Verdict};
use crate::burnside::{artin_defect, burnside_mackey, theta, BurnsideElem, MackeyDomain};
use crate::cyclic::{
    cyclic_homology, decomposition_check, hochschild, hp_hn, AlgebraPresentation, ConnesRow, CyclicWindow,
    Normalization,
};
use crate::exactla::{cyclotomic_field, rank, rank_kernel, solve, to_sparse, Field, Matrix, Rational, Scalar};
use crate::grp::SubgroupLattice;
use crate::rep::{rep_mackey, theta_k0_check, IDEMPOTENT_ORDER_BOUND};
use crate::trace::{character_crosscheck, chern_finite_check, dennis_trace_matrix, theta_trace_check};
use crate::{Error, Result};

/// Computed and expected values of one check; it passes when they agree.
struct Outcome {
    got: Value,
    want: Value,
}

type Run<'a> = Box<dyn Fn() -> Result<Outcome> + Send + Sync + 'a>;

struct Task<'a> {
    id: String,
    anchor: &'static str,
    provenance: Provenance,
    inputs: Value,
    run: Run<'a>,
}

impl<'a> Task<'a> {
    fn new(
        id: String,
        anchor: &'static str,
        provenance: Provenance,
        inputs: Value,
        run: impl Fn() -> Result<Outcome> + Send + Sync + 'a,
    ) -> Self {
        Task { id, anchor, provenance, inputs, run: Box::new(run) }
    }

    fn execute(&self) -> CheckRecord {
        let start = Instant::now();
        let result = (self.run)();
        let ms = start.elapsed().as_millis() as u64;
        let (got, want, verdict) = match result {
            Ok(Outcome { got, want }) => {
                let v = if got == want { Verdict::Pass } else { Verdict::Fail };
                (got, want, v)
            }
            Err(Error::Capability(reason)) => (Value::Null, Value::Null, Verdict::Skipped { reason }),
            Err(e) => (json!({ "error": e.to_string() }), Value::Null, Verdict::Fail),
        };
        CheckRecord {
            id: self.id.clone(),
            anchor: self.anchor.to_string(),
            inputs: self.inputs.clone(),
            got,
            want,
            provenance: self.provenance,
            verdict,
            ms,
        }
    }
}

/// A group of the run with its oracle data.
struct Subject {
    entry: GroupEntry,
    fixture: GroupFixture,
    /// Whether `fixture` came from the fixtures file.
    stored: bool,
    degree: usize,
}

impl Subject {
    fn inputs(&self) -> Value {
        json!({ "group": self.entry.name, "order": self.entry.group.order() })
    }

    fn oracle(&self) -> &'static str {
        if self.stored {
            "fixture"
        } else {
            "live"
        }
    }

    fn algebra(&self) -> Result<Arc<AlgebraPresentation>> {
        Ok(Arc::new(AlgebraPresentation::group_algebra(&self.entry.group, Field::Rational)?))
    }
}

struct FieldSubject {
    d: u64,
    name: String,
    fixture: FieldFixture,
    stored: bool,
}

fn field_name(d: u64) -> String {
    if d <= 2 {
        "Q".into()
    } else {
        format!("Q(zeta_{d})")
    }
}

type ConnesCache = Mutex<BTreeMap<String, std::result::Result<Vec<ConnesRow>, Error>>>;

/// Runs every check applicable to the groups and fields of `config`, with
/// expected values of derived checks taken from the built-in fixtures.
pub fn verify_builtin(config: &SuiteConfig) -> Result<SuiteReport> {
    verify_with(config, &Fixtures::builtin())
}

/// As [`verify_builtin`] with explicit fixtures. Groups or fields missing
/// from `fixtures` have their oracles run on the spot.
pub fn verify_with(config: &SuiteConfig, fixtures: &Fixtures) -> Result<SuiteReport> {
    config.validate()?;
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(config.jobs)
        .build()
        .map_err(|e| Error::Capability(format!("thread pool: {e}")))?;
    pool.install(|| run_suite(config, fixtures))
}

fn run_suite(config: &SuiteConfig, fixtures: &Fixtures) -> Result<SuiteReport> {
    let subjects: Vec<Subject> = config
        .entries()?
        .into_par_iter()
        .map(|entry| {
            let degree = config.degree_for(entry.group.order());
            let (fixture, stored) = match fixtures.group(&entry) {
                Some(f) => (f.clone(), true),
                None => (group_fixture(&entry, config)?, false),
            };
            Ok(Subject { entry, fixture, stored, degree })
        })
        .collect::<Result<_>>()?;
    let fields: Vec<FieldSubject> = config
        .fields
        .par_iter()
        .map(|&d| {
            let (fixture, stored) = match fixtures.field(d) {
                Some(f) => (f.clone(), true),
                None => (field_fixture(d, config.budget)?, false),
            };
            Ok(FieldSubject { d, name: field_name(d), fixture, stored })
        })
        .collect::<Result<_>>()?;
    let connes: ConnesCache = Mutex::new(BTreeMap::new());

    let stages: Vec<Vec<Task>> = vec![
        vec![exactla_selftest()],
        subjects.iter().map(grp_invariants).collect(),
        subjects.iter().map(marks_check).collect(),
        subjects.iter().filter_map(theta_check).collect(),
        subjects.iter().map(module_check).collect(),
        subjects.iter().filter_map(theta_k0).collect(),
        subjects.iter().filter_map(noncyclic_defect).collect(),
        homology_tasks(&subjects, &fields, config, &connes),
        subjects.iter().map(|s| decomposition(s, config)).collect(),
        subjects.iter().map(|s| s.entry.name.clone()).chain(fields.iter().map(|f| f.name.clone())).map(|k| connes_check(k, &connes)).collect(),
        subjects.iter().map(dtr_check).collect(),
        subjects.iter().filter_map(theta_trace).collect(),
        subjects.iter().map(chern_check).collect(),
        identity_tasks(&subjects, &fields, config),
    ];
    let mut checks = Vec::new();
    for stage in &stages {
        checks.extend(stage.par_iter().map(Task::execute).collect::<Vec<_>>());
    }
    let verdict = checks.iter().all(|c| c.verdict.is_pass());
    let timestamp = SystemTime::now().duration_since(UNIX_EPOCH).map(|d| d.as_secs()).unwrap_or(0);
    Ok(SuiteReport { version: env!("CARGO_PKG_VERSION").into(), config: config.clone(), timestamp, checks, verdict })
}

fn exactla_selftest<'a>() -> Task<'a> {
    Task::new("exactla.selftest".into(), "plumbing", Provenance::Trivial, Value::Null, || {
        let m = Matrix::from_ints(&[vec![1, 2, 3], vec![2, 4, 6], vec![1, 0, 1]]);
        let (r, ker) = rank_kernel(&m);
        let in_kernel = ker.basis().iter().all(|v| m.apply(v).is_empty());
        let f = cyclotomic_field(5)?;
        let z = f.generator();
        let inverse = z.inv().map(|w| (&z * &w).is_one()).unwrap_or(false);
        let d = Matrix::from_ints(&[vec![2, 0], vec![0, 3]]);
        let rhs = to_sparse(&[Scalar::from(Rational::from(4)), Scalar::from(Rational::from(9))]);
        let x = solve(&d, &rhs)?.map(|x| x.iter().map(|s| s.to_string()).collect::<Vec<_>>());
        let got = json!({
            "rank": r,
            "rank_again": rank(&m),
            "kernel_dim": ker.dim(),
            "kernel_is_null": in_kernel,
            "zeta5_order_5": z.pow(5).is_one() && !z.is_one(),
            "inverse": inverse,
            "solve": x,
        });
        let want = json!({
            "rank": 2, "rank_again": 2, "kernel_dim": 1, "kernel_is_null": true,
            "zeta5_order_5": true, "inverse": true, "solve": ["2", "3"],
        });
        Ok(Outcome { got, want })
    })
}

fn grp_invariants<'a>(s: &'a Subject) -> Task<'a> {
    let inputs = json!({ "group": s.entry.name, "order": s.entry.group.order(), "oracle": s.oracle() });
    Task::new(format!("grp.invariants[{}]", s.entry.name), "plumbing", Provenance::Derived, inputs, move || {
        let g = &s.entry.group;
        g.validate()?;
        let lattice = SubgroupLattice::new(g)?;
        let class_equation = g.classes().iter().map(Vec::len).sum::<usize>() == g.order()
            && (0..g.order()).all(|x| g.classes()[g.class_of(x)].len() * g.centralizer_of_element(x).len() == g.order());
        let lagrange = lattice.subgroups().iter().all(|h| g.order().is_multiple_of(h.order()));
        let got = json!({
            "conjugacy_classes": g.num_classes(),
            "subgroup_classes": lattice.classes().len(),
            "cyclic_subgroup_classes": lattice.cyclic_classes().len(),
            "galois_orbit_classes": g.rational_classes().len(),
            "class_equation": class_equation,
            "lagrange": lagrange,
        });
        let want = json!({
            "conjugacy_classes": s.fixture.conjugacy_classes,
            "subgroup_classes": s.fixture.subgroup_classes.len(),
            "cyclic_subgroup_classes": s.fixture.cyclic_subgroup_classes,
            "galois_orbit_classes": s.fixture.cyclic_subgroup_classes,
            "class_equation": true,
            "lagrange": true,
        });
        Ok(Outcome { got, want })
    })
}

fn marks_check<'a>(s: &'a Subject) -> Task<'a> {
    let inputs = json!({ "group": s.entry.name, "oracle": s.oracle() });
    Task::new(format!("burnside.marks[{}]", s.entry.name), "table of marks", Provenance::Derived, inputs, move || {
        let g = &s.entry.group;
        let lattice = SubgroupLattice::new(g)?;
        let marks = crate::burnside::TableOfMarks::new(g, &lattice);
        let n = s.fixture.subgroup_classes.len();
        // place each library class at the row of its canonical representative
        let mut pos = Vec::new();
        for rep in marks.representatives() {
            let c = canonical_conjugate(g, rep);
            match s.fixture.subgroup_classes.iter().position(|r| *r == c) {
                Some(p) => pos.push(p),
                None => return Ok(Outcome { got: json!({ "unmatched_class": c }), want: json!(s.fixture.marks) }),
            }
        }
        if marks.len() != n {
            return Ok(Outcome { got: json!({ "classes": marks.len() }), want: json!({ "classes": n }) });
        }
        let mut table = vec![vec![0u64; n]; n];
        for (i, row) in marks.rows().iter().enumerate() {
            for (j, m) in row.iter().enumerate() {
                table[pos[i]][pos[j]] = *m;
            }
        }
        Ok(Outcome { got: json!(table), want: json!(s.fixture.marks) })
    })
}

fn cyclic_order(s: &Subject) -> Option<usize> {
    let g = &s.entry.group;
    (g.is_cyclic() && g.order() <= IDEMPOTENT_ORDER_BOUND).then_some(g.order())
}

fn theta_check<'a>(s: &'a Subject) -> Option<Task<'a>> {
    cyclic_order(s)?;
    Some(Task::new(
        format!("burnside.theta[{}]", s.entry.name),
        "θ_C is the idempotent at the top class; the θ_D partition unity",
        Provenance::Statement,
        s.inputs(),
        move || {
            let domain = MackeyDomain::new(s.entry.group.clone())?;
            let top = domain.top();
            let ring = domain.ring(top);
            let th = theta(ring)?;
            let mut restrictions_vanish = true;
            let mut sum = BurnsideElem::zero(ring);
            for d in 0..domain.len() {
                let inc = domain.inclusion(d, top)?;
                let td = theta(domain.ring(d))?;
                sum = sum.add(&inc.ind(&td)?.scale(&Rational::new(1, inc.index() as i64)))?;
                if d != top {
                    restrictions_vanish &= inc.res(&th)?.is_zero();
                }
            }
            let mut delta = vec![Rational::zero(); ring.rank()];
            delta[ring.rank() - 1] = Rational::one();
            let got = json!({
                "theta": th.to_string(),
                "idempotent": th.mul(&th)? == th,
                "marks": th.marks(),
                "restrictions_vanish": restrictions_vanish,
                "partition_of_unity": sum == BurnsideElem::one(ring),
            });
            let want = json!({
                "theta": th.to_string(),
                "idempotent": true,
                "marks": delta,
                "restrictions_vanish": true,
                "partition_of_unity": true,
            });
            Ok(Outcome { got, want })
        },
    ))
}

fn module_check<'a>(s: &'a Subject) -> Task<'a> {
    Task::new(
        format!("burnside.module[{}]", s.entry.name),
        "θ-image equals the Artin defect for modules over the Burnside ring",
        Provenance::Statement,
        s.inputs(),
        move || {
            let domain = MackeyDomain::new(s.entry.group.clone())?;
            let modules = [burnside_mackey(domain.clone())?, rep_mackey(domain.clone())?];
            let lattice = domain.lattice();
            let (mut got, mut want) = (Vec::new(), Vec::new());
            for m in &modules {
                for c in lattice.cyclic_classes() {
                    let idx = lattice.index_of(lattice.representative(c).elements()).expect("representative");
                    let r = artin_defect(m, idx)?;
                    let d = r.defect_dim();
                    let row = |t: usize, k: usize| {
                        json!({ "module": m.name(), "subgroup": r.subgroup, "theta_dim": t, "defect_dim": d, "map_rank": k })
                    };
                    got.push(row(r.theta_dim(), r.map_rank));
                    want.push(row(d, d));
                }
            }
            Ok(Outcome { got: json!(got), want: json!(want) })
        },
    )
}

fn theta_k0<'a>(s: &'a Subject) -> Option<Task<'a>> {
    let n = cyclic_order(s)?;
    Some(Task::new(
        format!("rep.theta_k0[{}]", s.entry.name),
        "θ_C(K_0(QC)⊗Q) is a line with trivial Aut(C)-action",
        Provenance::Statement,
        s.inputs(),
        move || {
            let r = theta_k0_check(n)?;
            Ok(Outcome {
                got: json!({ "dim": r.dim(), "aut_trivial": r.aut_trivial }),
                want: json!({ "dim": 1, "aut_trivial": true }),
            })
        },
    ))
}

fn noncyclic_defect<'a>(s: &'a Subject) -> Option<Task<'a>> {
    if s.entry.group.is_cyclic() {
        return None;
    }
    Some(Task::new(
        format!("rep.defect_noncyclic[{}]", s.entry.name),
        "Artin defect of K_0(Q(-))⊗Q vanishes on non-cyclic groups",
        Provenance::Statement,
        s.inputs(),
        move || {
            let domain = MackeyDomain::new(s.entry.group.clone())?;
            let r = artin_defect(&rep_mackey(domain.clone())?, domain.top())?;
            Ok(Outcome { got: json!({ "defect_dim": r.defect_dim() }), want: json!({ "defect_dim": 0 }) })
        },
    ))
}

fn alternating(top: usize, len: usize) -> Vec<usize> {
    (0..len).map(|n| if n % 2 == 0 { top } else { 0 }).collect()
}

fn concentrated(top: usize, len: usize) -> Vec<usize> {
    (0..len).map(|n| if n == 0 { top } else { 0 }).collect()
}

fn homology_tasks<'a>(
    subjects: &'a [Subject],
    fields: &'a [FieldSubject],
    config: &'a SuiteConfig,
    connes: &'a ConnesCache,
) -> Vec<Task<'a>> {
    let mut tasks = Vec::new();
    for s in subjects {
        let inputs = json!({ "algebra": format!("Q[{}]", s.entry.name), "degree": s.degree, "budget": config.budget.0 });
        tasks.push(Task::new(
            format!("cyclic.hh_hc[{}]", s.entry.name),
            "HH of a group algebra over Q is concentrated in degree 0, of dimension #con G",
            Provenance::Statement,
            inputs.clone(),
            move || {
                let r = cyclic_homology(&s.algebra()?, s.degree, config.budget);
                let rows = r.as_ref().map(|r| r.connes.clone()).map_err(Clone::clone);
                connes.lock().expect("cache").insert(s.entry.name.clone(), rows);
                let r = r?;
                let k = s.fixture.conjugacy_classes;
                Ok(Outcome {
                    got: json!({ "hh": r.hh.dims, "hc": r.hc.dims, "certificate": r.hc.certificate }),
                    want: json!({
                        "hh": concentrated(k, s.degree),
                        "hc": alternating(k, s.degree - 1),
                        "certificate": r.hc.certificate,
                    }),
                })
            },
        ));
        if let Some((n, dims)) = s.fixture.hh_unnormalized.clone().filter(|(n, _)| *n == s.degree) {
            let inputs = json!({ "algebra": format!("Q[{}]", s.entry.name), "degree": n, "oracle": s.oracle() });
            tasks.push(Task::new(
                format!("cyclic.hh_oracle[{}]", s.entry.name),
                "plumbing",
                Provenance::Derived,
                inputs,
                move || Ok(Outcome { got: json!(hochschild(&s.algebra()?, n, config.budget)?.dims), want: json!(dims) }),
            ));
        }
    }
    for f in fields {
        let inputs = json!({ "algebra": f.name, "degree": FIELD_DEGREE });
        tasks.push(Task::new(
            format!("cyclic.hh_hc[{}]", f.name),
            "HC of a number field is the field in every even degree",
            Provenance::Statement,
            inputs,
            move || {
                let a = field_algebra(f.d)?;
                let r = cyclic_homology(&a, FIELD_DEGREE, config.budget);
                let rows = r.as_ref().map(|r| r.connes.clone()).map_err(Clone::clone);
                connes.lock().expect("cache").insert(f.name.clone(), rows);
                let r = r?;
                Ok(Outcome {
                    got: json!({ "hh": r.hh.dims, "hc": r.hc.dims }),
                    want: json!({
                        "hh": concentrated(a.dim(), FIELD_DEGREE),
                        "hc": alternating(a.dim(), FIELD_DEGREE - 1),
                    }),
                })
            },
        ));
        let inputs = json!({ "algebra": f.name, "degree": f.fixture.degree, "oracle": if f.stored { "fixture" } else { "live" } });
        tasks.push(Task::new(
            format!("cyclic.hc_oracle[{}]", f.name),
            "plumbing",
            Provenance::Derived,
            inputs,
            move || {
                let r = cyclic_homology(&field_algebra(f.d)?, f.fixture.degree, config.budget)?;
                Ok(Outcome {
                    got: json!({ "hh": r.hh.dims, "hc": r.hc.dims }),
                    want: json!({ "hh": f.fixture.hh_unnormalized, "hc": f.fixture.hc_bicomplex }),
                })
            },
        ));
        let inputs = json!({ "algebra": f.name, "n_max": 3, "cutoff": config.cutoff });
        tasks.push(Task::new(
            format!("cyclic.hp_hn[{}]", f.name),
            "HN of a number field is the field in degree 0; HP is 2-periodic",
            Provenance::Statement,
            inputs,
            move || {
                let a = field_algebra(f.d)?;
                let (hp, hn) = hp_hn(&a, 3, config.cutoff, config.budget)?;
                let k = a.dim();
                Ok(Outcome {
                    got: json!({
                        "hp": hp.dims, "hn": hn.dims,
                        "stabilized": [hp.certificate.stabilized, hn.certificate.stabilized],
                    }),
                    want: json!({ "hp": alternating(k, 4), "hn": concentrated(k, 4), "stabilized": [true, true] }),
                })
            },
        ));
    }
    tasks
}

fn decomposition<'a>(s: &'a Subject, config: &'a SuiteConfig) -> Task<'a> {
    Task::new(
        format!("cyclic.decomposition[{}]", s.entry.name),
        "HH(QG) splits over conjugacy classes as homology of centralizers",
        Provenance::Derived,
        json!({ "group": s.entry.name, "degrees": "0..2" }),
        move || {
            let r = decomposition_check(&s.entry.group, &Field::Rational, 3, config.budget)?;
            let got: Vec<Value> = r.rows.iter().map(|x| json!([x.representative, x.hochschild])).collect();
            let want: Vec<Value> = r.rows.iter().map(|x| json!([x.representative, x.centralizer_homology])).collect();
            Ok(Outcome { got: json!(got), want: json!(want) })
        },
    )
}

fn connes_check(subject: String, connes: &ConnesCache) -> Task<'_> {
    Task::new(
        format!("cyclic.connes[{subject}]"),
        "Connes periodicity sequence is exact",
        Provenance::Statement,
        json!({ "algebra": subject }),
        move || {
            let rows = connes.lock().expect("cache").get(&subject).cloned();
            let rows = rows.ok_or_else(|| Error::Validation(format!("no cyclic homology computed for {subject}")))??;
            let got: Vec<bool> = rows.iter().map(ConnesRow::exact).collect();
            Ok(Outcome { want: json!(vec![true; got.len()]), got: json!(got) })
        },
    )
}

fn dtr_check<'a>(s: &'a Subject) -> Task<'a> {
    let inputs = json!({ "group": s.entry.name, "oracle": s.oracle() });
    Task::new(
        format!("trace.dtr[{}]", s.entry.name),
        "Dennis trace K_0(QG)⊗Q -> HH_0(QG) is injective",
        Provenance::Derived,
        inputs,
        move || {
            let t = dennis_trace_matrix(&s.entry.group)?;
            let cross = character_crosscheck(&s.entry.group)?;
            let k = s.fixture.cyclic_subgroup_classes;
            Ok(Outcome {
                got: json!({ "k0_dim": t.k0_dim, "rank": t.rank, "character_crosscheck": cross.verdict }),
                want: json!({ "k0_dim": k, "rank": k, "character_crosscheck": true }),
            })
        },
    )
}

fn theta_trace<'a>(s: &'a Subject) -> Option<Task<'a>> {
    let n = cyclic_order(s)?;
    Some(Task::new(
        format!("trace.theta_trace[{}]", s.entry.name),
        "the trace commutes with θ_C and is injective on the θ-part",
        Provenance::Statement,
        s.inputs(),
        move || {
            let r = theta_trace_check(n)?;
            Ok(Outcome {
                got: json!({ "commutes": r.commutes, "theta_dim": r.theta_dim, "theta_rank": r.theta_rank }),
                want: json!({ "commutes": true, "theta_dim": 1, "theta_rank": 1 }),
            })
        },
    ))
}

fn chern_check<'a>(s: &'a Subject) -> Task<'a> {
    Task::new(
        format!("trace.chern[{}]", s.entry.name),
        "equivariant Chern character for a finite group",
        Provenance::Statement,
        json!({ "group": s.entry.name, "oracle": s.oracle() }),
        move || {
            let r = chern_finite_check(&s.entry.group)?;
            let (k, c) = (s.fixture.cyclic_subgroup_classes, s.fixture.conjugacy_classes);
            Ok(Outcome {
                got: json!({
                    "k0_dim": r.k0_dim, "k0_total": r.k0_total, "k0_assembly_rank": r.k0_assembly_rank,
                    "hh_total": r.hh_total, "generator_orbits": r.orbit_total, "hh_assembly_rank": r.hh_assembly_rank,
                    "square_commutes": r.square_commutes,
                }),
                want: json!({
                    "k0_dim": k, "k0_total": k, "k0_assembly_rank": k,
                    "hh_total": c, "generator_orbits": c, "hh_assembly_rank": c,
                    "square_commutes": true,
                }),
            })
        },
    )
}

/// Degree of the windows on which structural identities are checked.
const IDENTITY_DEGREE: usize = 3;

/// Largest algebra dimension whose unnormalized window is checked.
const UNNORMALIZED_DIM_BOUND: usize = 4;

fn identities(a: &Arc<AlgebraPresentation>, config: &SuiteConfig) -> Result<Outcome> {
    let norm = CyclicWindow::new(a.clone(), IDENTITY_DEGREE, Normalization::Normalized, config.budget)?;
    let grouped = a.group().is_some();
    let mut got = json!({ "normalized": norm.identity_failures()? });
    let mut want = json!({ "normalized": Vec::<String>::new() });
    if grouped {
        got["normalized_grading"] = json!(norm.grading_preserved()?);
        want["normalized_grading"] = json!(true);
    }
    if a.dim() <= UNNORMALIZED_DIM_BOUND {
        let un = CyclicWindow::new(a.clone(), IDENTITY_DEGREE, Normalization::Unnormalized, config.budget)?;
        got["unnormalized"] = json!(un.identity_failures()?);
        want["unnormalized"] = json!(Vec::<String>::new());
        if grouped {
            got["unnormalized_grading"] = json!(un.grading_preserved()?);
            want["unnormalized_grading"] = json!(true);
        }
    }
    Ok(Outcome { got, want })
}

fn identity_tasks<'a>(subjects: &'a [Subject], fields: &'a [FieldSubject], config: &'a SuiteConfig) -> Vec<Task<'a>> {
    let anchor = "b² = B² = bB + Bb = 0, simplicial and cyclic identities, grading";
    let mut tasks: Vec<Task<'a>> = subjects
        .iter()
        .map(|s| {
            let inputs = json!({ "algebra": format!("Q[{}]", s.entry.name), "degree": IDENTITY_DEGREE });
            Task::new(format!("cyclic.identities[{}]", s.entry.name), anchor, Provenance::Trivial, inputs, move || {
                identities(&s.algebra()?, config)
            })
        })
        .collect();
    tasks.extend(fields.iter().map(|f| {
        let inputs = json!({ "algebra": f.name, "degree": IDENTITY_DEGREE });
        Task::new(format!("cyclic.identities[{}]", f.name), anchor, Provenance::Trivial, inputs, move || {
            identities(&field_algebra(f.d)?, config)
        })
    }));
    tasks
}
