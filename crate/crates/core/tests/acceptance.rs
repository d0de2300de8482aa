//! Acceptance suite: one line per criterion, nonzero exit if any fails.

use std::collections::BTreeSet;
use std::process::ExitCode;
use std::sync::Arc;
use std::time::{Duration, Instant};

use theta_trace::burnside::{artin_defect, burnside_mackey, theta, BurnsideElem, MackeyDomain, TableOfMarks};
use theta_trace::cyclic::{
    cyclic_homology, decomposition_check, hp_hn, AlgebraPresentation, Budget, CyclicReport, CyclicWindow,
    Normalization,
};
use theta_trace::exactla::{cyclotomic_field, Field, Rational};
use theta_trace::grp::{FiniteGroup, SubgroupLattice};
use theta_trace::harness::{catalog, parse_group, verify_builtin, GroupEntry, SuiteConfig};
use theta_trace::rep::{rep_mackey, theta_k0_check};
use theta_trace::trace::{character_crosscheck, chern_finite_check, dennis_trace_matrix};

type Check = std::result::Result<String, String>;

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> std::result::Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn within(t: Instant, limit: Duration) -> std::result::Result<String, String> {
    let e = t.elapsed();
    ensure(e <= limit, || format!("took {e:?}, limit {limit:?}"))?;
    Ok(format!("{:.2?}", e))
}

// ---- oracles -------------------------------------------------------------

fn conj(g: &FiniteGroup, x: usize, a: usize) -> usize {
    g.mul(g.mul(x, a), g.inv(x))
}

fn class_count(g: &FiniteGroup) -> usize {
    let mut seen = vec![false; g.order()];
    let mut n = 0;
    for a in 0..g.order() {
        if !seen[a] {
            n += 1;
            for x in 0..g.order() {
                seen[conj(g, x, a)] = true;
            }
        }
    }
    n
}

fn cyclic_of(g: &FiniteGroup, a: usize) -> BTreeSet<usize> {
    let mut s = BTreeSet::from([0]);
    let mut y = a;
    while y != 0 {
        s.insert(y);
        y = g.mul(y, a);
    }
    s
}

fn cyclic_class_count(g: &FiniteGroup) -> usize {
    let subs: BTreeSet<BTreeSet<usize>> = (0..g.order()).map(|a| cyclic_of(g, a)).collect();
    let mut seen = BTreeSet::new();
    let mut n = 0;
    for c in &subs {
        if seen.insert(c.clone()) {
            n += 1;
            for x in 0..g.order() {
                seen.insert(c.iter().map(|&y| conj(g, x, y)).collect());
            }
        }
    }
    n
}

/// `|(G/K)^H|` from the list of left cosets.
fn fixed_cosets(g: &FiniteGroup, h: &[usize], k: &[usize]) -> u64 {
    let cosets: BTreeSet<BTreeSet<usize>> = (0..g.order()).map(|x| k.iter().map(|&y| g.mul(x, y)).collect()).collect();
    cosets
        .iter()
        .filter(|c| h.iter().all(|&s| c.iter().map(|&y| g.mul(s, y)).collect::<BTreeSet<_>>() == **c))
        .count() as u64
}

fn group_algebra(g: &FiniteGroup) -> Arc<AlgebraPresentation> {
    Arc::new(AlgebraPresentation::group_algebra(g, Field::Rational).unwrap())
}

fn field_algebra(d: u64) -> Arc<AlgebraPresentation> {
    Arc::new(AlgebraPresentation::number_field(&cyclotomic_field(d).unwrap()).unwrap())
}

fn cyclic_orders() -> Vec<usize> {
    (1..=8).chain([12]).collect()
}

// ---- criteria ------------------------------------------------------------

fn marks_match_fixed_points(groups: &[GroupEntry]) -> Check {
    let t = Instant::now();
    for e in groups {
        let g = &e.group;
        let lattice = SubgroupLattice::new(g).map_err(|x| x.to_string())?;
        let marks = TableOfMarks::new(g, &lattice);
        let reps = marks.representatives();
        for (i, h) in reps.iter().enumerate() {
            for (j, k) in reps.iter().enumerate() {
                let want = fixed_cosets(g, h, k);
                ensure(marks.entry(i, j) == want, || format!("{}: mark({i},{j}) = {} vs {want}", e.name, marks.entry(i, j)))?;
            }
        }
    }
    within(t, Duration::from_secs(5))
}

fn theta_idempotents() -> Check {
    let t = Instant::now();
    for n in cyclic_orders() {
        let dom = MackeyDomain::new(FiniteGroup::cyclic(n).unwrap()).unwrap();
        let top = dom.top();
        let ring = dom.ring(top);
        let th = theta(ring).unwrap();
        ensure(th.mul(&th).unwrap() == th, || format!("θ² ≠ θ for C{n}"))?;
        let mut delta = vec![Rational::zero(); ring.rank()];
        delta[ring.rank() - 1] = Rational::one();
        ensure(th.marks() == delta, || format!("marks of θ for C{n}"))?;
        let mut sum = BurnsideElem::zero(ring);
        for d in 0..dom.len() {
            let inc = dom.inclusion(d, top).unwrap();
            if d != top {
                ensure(inc.res(&th).unwrap().is_zero(), || format!("res θ ≠ 0 for C{n}"))?;
            }
            let td = theta(dom.ring(d)).unwrap();
            sum = sum.add(&inc.ind(&td).unwrap().scale(&Rational::new(1, inc.index() as i64))).unwrap();
        }
        ensure(sum == BurnsideElem::one(ring), || format!("partition of unity fails for C{n}"))?;
    }
    within(t, Duration::from_secs(1))
}

fn module_over_burnside(groups: &[GroupEntry]) -> Check {
    let mut count = 0;
    for e in groups {
        let dom = MackeyDomain::new(e.group.clone()).unwrap();
        let lattice = dom.lattice();
        for m in [burnside_mackey(dom.clone()).unwrap(), rep_mackey(dom.clone()).unwrap()] {
            for c in lattice.cyclic_classes() {
                let idx = lattice.index_of(lattice.representative(c).elements()).unwrap();
                let r = artin_defect(&m, idx).unwrap();
                ensure(r.theta_dim() == r.defect_dim() && r.map_rank == r.defect_dim(), || {
                    format!("{} {} at {}: θ {} defect {} rank {}", e.name, m.name(), r.subgroup, r.theta_dim(), r.defect_dim(), r.map_rank)
                })?;
                count += 1;
            }
        }
    }
    Ok(format!("{count} (module, cyclic class) pairs"))
}

fn theta_part_of_k0() -> Check {
    for n in 1..=12 {
        let r = theta_k0_check(n).map_err(|e| e.to_string())?;
        ensure(r.dim() == 1 && r.aut_trivial, || format!("C{n}: dim {} trivial {}", r.dim(), r.aut_trivial))?;
    }
    Ok("C1..C12".into())
}

fn noncyclic_defect_vanishes() -> Check {
    for name in ["V4", "S3", "D4", "Q8", "A4"] {
        let g = parse_group(name).unwrap().group;
        let dom = MackeyDomain::new(g).unwrap();
        let r = artin_defect(&rep_mackey(dom.clone()).unwrap(), dom.top()).unwrap();
        ensure(r.defect_dim() == 0, || format!("{name}: defect {}", r.defect_dim()))?;
    }
    Ok("V4 S3 D4 Q8 A4".into())
}

struct Computed {
    name: String,
    report: CyclicReport,
}

fn homology_patterns(groups: &[GroupEntry], out: &mut Vec<Computed>) -> Check {
    let t = Instant::now();
    for e in groups {
        let n = if e.group.order() <= 8 { 4 } else { 3 };
        let r = cyclic_homology(&group_algebra(&e.group), n, Budget::default()).map_err(|x| x.to_string())?;
        let mut want = vec![0; n];
        want[0] = class_count(&e.group);
        ensure(r.hh.dims == want, || format!("HH(Q[{}]) = {:?}, want {want:?}", e.name, r.hh.dims))?;
        out.push(Computed { name: format!("Q[{}]", e.name), report: r });
    }
    for d in [1, 3, 4] {
        let a = field_algebra(d);
        let k = a.dim();
        let r = cyclic_homology(&a, 6, Budget::default()).map_err(|x| x.to_string())?;
        let want: Vec<usize> = (0..5).map(|i| if i % 2 == 0 { k } else { 0 }).collect();
        ensure(r.hc.dims == want, || format!("HC(Q(ζ{d})) = {:?}", r.hc.dims))?;
        out.push(Computed { name: format!("Q(zeta_{d})"), report: r });
        let (hp, hn) = hp_hn(&a, 3, 3, Budget::default()).map_err(|x| x.to_string())?;
        ensure(hn.dims == vec![k, 0, 0, 0], || format!("HN(Q(ζ{d})) = {:?}", hn.dims))?;
        ensure(hp.dims == vec![k, 0, k, 0], || format!("HP(Q(ζ{d})) = {:?}", hp.dims))?;
        for c in [&hp.certificate, &hn.certificate] {
            ensure(c.stabilized == Some(true) && c.cutoff == Some(3), || format!("certificate {c:?}"))?;
        }
    }
    within(t, Duration::from_secs(300))
}

fn conjugacy_decomposition() -> Check {
    for name in ["C6", "S3", "D4"] {
        let g = parse_group(name).unwrap().group;
        let r = decomposition_check(&g, &Field::Rational, 3, Budget::default()).map_err(|e| e.to_string())?;
        ensure(r.verdict && r.rows.len() == class_count(&g), || format!("{name}: {r:?}"))?;
        for row in &r.rows {
            // rational homology of a finite group is Q in degree 0
            ensure(row.hochschild == vec![1, 0, 0] && row.centralizer_homology == vec![1, 0, 0], || format!("{name}: {row:?}"))?;
        }
    }
    Ok("C6 S3 D4, degrees 0..2".into())
}

fn connes_exactness(computed: &[Computed]) -> Check {
    ensure(!computed.is_empty(), || "no algebras computed".into())?;
    for c in computed {
        ensure(c.report.connes_exact(), || format!("{}: {:?}", c.name, c.report.connes))?;
    }
    Ok(format!("{} algebras", computed.len()))
}

fn dennis_trace(groups: &[GroupEntry]) -> Check {
    for e in groups {
        let t = dennis_trace_matrix(&e.group).map_err(|x| x.to_string())?;
        let k = cyclic_class_count(&e.group);
        ensure(t.k0_dim == k && t.rank == k, || format!("{}: rank {} dim {} want {k}", e.name, t.rank, t.k0_dim))?;
        let cross = character_crosscheck(&e.group).map_err(|x| x.to_string())?;
        ensure(cross.verdict, || format!("{}: character cross-check", e.name))?;
    }
    Ok(format!("{} groups", groups.len()))
}

fn chern_character(groups: &[GroupEntry]) -> Check {
    for e in groups {
        let r = chern_finite_check(&e.group).map_err(|x| x.to_string())?;
        ensure(r.part_a() && r.part_b() && r.square_commutes, || format!("{}: {r:?}", e.name))?;
        ensure(r.k0_dim == cyclic_class_count(&e.group), || format!("{}: dim K_0 {}", e.name, r.k0_dim))?;
        ensure(r.orbit_total == class_count(&e.group), || format!("{}: orbits {}", e.name, r.orbit_total))?;
    }
    Ok(format!("{} groups", groups.len()))
}

fn structural_identities(groups: &[GroupEntry]) -> Check {
    let mut algebras: Vec<(String, Arc<AlgebraPresentation>)> =
        groups.iter().map(|e| (format!("Q[{}]", e.name), group_algebra(&e.group))).collect();
    algebras.extend([1, 3, 4].map(|d| (format!("Q(zeta_{d})"), field_algebra(d))));
    let mut windows = 0;
    for (name, a) in &algebras {
        let mut norms = vec![Normalization::Normalized];
        if a.dim() <= 4 {
            norms.push(Normalization::Unnormalized);
        }
        for norm in norms {
            let w = CyclicWindow::new(a.clone(), 3, norm, Budget::default()).map_err(|e| e.to_string())?;
            let bad = w.identity_failures().map_err(|e| e.to_string())?;
            ensure(bad.is_empty(), || format!("{name} {norm:?}: {bad:?}"))?;
            if a.group().is_some() {
                ensure(w.grading_preserved().unwrap(), || format!("{name} {norm:?}: grading"))?;
            }
            windows += 1;
        }
    }
    Ok(format!("{windows} windows"))
}

fn determinism() -> Check {
    let config = SuiteConfig::default();
    let a = verify_builtin(&config).map_err(|e| e.to_string())?;
    let b = verify_builtin(&config).map_err(|e| e.to_string())?;
    ensure(a.canonical_json() == b.canonical_json(), || "reports differ".into())?;
    ensure(a.verdict, || {
        let bad: Vec<&str> = a.checks.iter().filter(|c| !c.verdict.is_pass()).map(|c| c.id.as_str()).collect();
        format!("suite verdict false: {bad:?}")
    })?;
    Ok(format!("{} checks, identical", a.checks.len()))
}

type Criterion<'a> = (&'a str, Box<dyn FnOnce(&mut Vec<Computed>) -> Check + 'a>);

fn main() -> ExitCode {
    let groups = catalog();
    let mut computed = Vec::new();
    let criteria: Vec<Criterion<'_>> = vec![
        ("table of marks = fixed-point counts", Box::new(|_| marks_match_fixed_points(&groups))),
        ("θ_C idempotent, marks δ, restrictions vanish, partition of unity", Box::new(|_| theta_idempotents())),
        ("θ-image = Artin defect for A(-)⊗Q and K_0(Q(-))⊗Q", Box::new(|_| module_over_burnside(&groups))),
        ("θ_C(K_0(QC)⊗Q) is a line with trivial Aut(C)-action", Box::new(|_| theta_part_of_k0())),
        ("Artin defect of K_0 vanishes on non-cyclic groups", Box::new(|_| noncyclic_defect_vanishes())),
        ("HH/HC/HP/HN dimension patterns with certificates", Box::new(|c| homology_patterns(&groups, c))),
        ("HH(QG) class decomposition = centralizer homology", Box::new(|_| conjugacy_decomposition())),
        ("Connes periodicity sequence exact", Box::new(|c: &mut Vec<Computed>| connes_exactness(c))),
        ("Dennis trace injective, character cross-check", Box::new(|_| dennis_trace(&groups))),
        ("Chern character bookkeeping and commuting square", Box::new(|_| chern_character(&groups))),
        ("structural identities of the cyclic windows", Box::new(|_| structural_identities(&groups))),
        ("verify --all is deterministic", Box::new(|_| determinism())),
    ];
    let mut failures = 0;
    for (i, (name, f)) in criteria.into_iter().enumerate() {
        match f(&mut computed) {
            Ok(detail) => println!("criterion {:>2} PASS  {name} ({detail})", i + 1),
            Err(why) => {
                failures += 1;
                println!("criterion {:>2} FAIL  {name}: {why}", i + 1);
            }
        }
    }
    println!("{} of 12 acceptance criteria passed", 12 - failures);
    if failures == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
