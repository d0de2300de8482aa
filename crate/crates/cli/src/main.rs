//! `theta-trace`: command line front end of the `theta-trace` crate.

mod render;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use theta_trace::burnside::{artin_defect, burnside_mackey, theta, MackeyDomain};
use theta_trace::cyclic::{
    conjugacy_split_hh, cyclic_homology, group_homology, hochschild, hp_hn, Budget, HomologyReport,
};
use theta_trace::exactla::Field;
use theta_trace::harness::{
    parse_algebra, parse_group, verify_with, Fixtures, Format, SuiteConfig, SuiteReport, FIXTURES_PATH,
};
use theta_trace::rep::rep_mackey;
use theta_trace::trace::{character_crosscheck, chern_finite_check, dennis_trace_matrix};
use theta_trace::{Error, Result};

use render::Output;

#[derive(Parser)]
#[command(name = "theta-trace", version, about = "Burnside idempotents, Artin defects, cyclic homology and the Dennis trace for finite groups")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Clone, Copy)]
struct Common {
    /// Output format.
    #[arg(long, default_value = "md", value_parser = parse_format)]
    format: Format,
    /// Largest number of basis tuples per degree of a cyclic window.
    #[arg(long, default_value_t = Budget::default().0)]
    budget: usize,
}

fn parse_format(s: &str) -> std::result::Result<Format, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

#[derive(Subcommand)]
enum Command {
    /// Table of marks of a group.
    Marks {
        #[arg(long)]
        group: String,
        #[command(flatten)]
        common: Common,
    },
    /// The idempotent θ_C of the Burnside ring of a cyclic group.
    Theta {
        #[arg(long)]
        group: String,
        #[command(flatten)]
        common: Common,
    },
    /// Artin defects of A(-)⊗Q and K_0(Q(-))⊗Q at every cyclic subgroup and at the whole group.
    Defect {
        #[arg(long)]
        group: String,
        #[command(flatten)]
        common: Common,
    },
    /// Hochschild homology in degrees 0..N-1.
    Hh(HomologyArgs),
    /// Cyclic homology in degrees 0..N-2.
    Hc(HomologyArgs),
    /// Periodic cyclic homology in degrees 0..N.
    Hp(PeriodicArgs),
    /// Negative cyclic homology in degrees 0..N.
    Hn(PeriodicArgs),
    /// Hochschild homology of QG split by conjugacy class.
    SplitHh(GroupDegreeArgs),
    /// Rational group homology from the bar complex.
    GroupHomology(GroupDegreeArgs),
    /// The Dennis trace K_0(QG)⊗Q -> HH_0(QG).
    Dtr {
        #[arg(long)]
        group: String,
        #[command(flatten)]
        common: Common,
    },
    /// Dimension bookkeeping and the commuting square of the Chern character.
    Chern {
        #[arg(long)]
        group: String,
        #[command(flatten)]
        common: Common,
    },
    /// Runs the verification suite.
    Verify(VerifyArgs),
}

#[derive(Args)]
struct HomologyArgs {
    /// Algebra: Q, cyclotomic:d, Q[G], a JSON table or a path to one.
    #[arg(long)]
    algebra: String,
    /// Truncation degree N.
    #[arg(long, default_value_t = 4)]
    degree: usize,
    #[command(flatten)]
    common: Common,
}

#[derive(Args)]
struct PeriodicArgs {
    #[arg(long)]
    algebra: String,
    /// Highest degree reported.
    #[arg(long, default_value_t = 3)]
    degree: usize,
    /// Column cutoff P.
    #[arg(long, default_value_t = 3)]
    cutoff: usize,
    #[command(flatten)]
    common: Common,
}

#[derive(Args)]
struct GroupDegreeArgs {
    #[arg(long)]
    group: String,
    #[arg(long, default_value_t = 3)]
    degree: usize,
    #[command(flatten)]
    common: Common,
}

#[derive(Args)]
struct VerifyArgs {
    /// Check the whole catalog and the fields Q, Q(ζ_3), Q(ζ_4).
    #[arg(long, conflicts_with = "group")]
    all: bool,
    /// Groups to check; may be repeated.
    #[arg(long)]
    group: Vec<String>,
    /// Truncation degree N for HH/HC (default: 4 for |G| ≤ 8, else 3).
    #[arg(long)]
    degree: Option<usize>,
    /// Column cutoff P for HP/HN.
    #[arg(long, default_value_t = 3)]
    cutoff: usize,
    /// Worker threads.
    #[arg(long)]
    jobs: Option<usize>,
    /// Recompute the oracle fixtures and write them instead of verifying.
    #[arg(long)]
    regen_fixtures: bool,
    /// Fixtures file to read, or to write with --regen-fixtures.
    #[arg(long)]
    fixtures: Option<PathBuf>,
    #[command(flatten)]
    common: Common,
}

/// Exit status of a successful run: whether every check held.
enum Status {
    Pass,
    Fail,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(Status::Pass) => ExitCode::SUCCESS,
        Ok(Status::Fail) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}

fn status(ok: bool) -> Status {
    if ok {
        Status::Pass
    } else {
        Status::Fail
    }
}

fn homology(out: Output, r: HomologyReport) -> Result<Status> {
    out.homology(&r);
    Ok(Status::Pass)
}

fn run(cmd: Command) -> Result<Status> {
    match cmd {
        Command::Marks { group, common } => {
            let g = parse_group(&group)?;
            let domain = MackeyDomain::new(g.group.clone())?;
            Output::from(common).marks(&g.name, domain.ring(domain.top()));
            Ok(Status::Pass)
        }
        Command::Theta { group, common } => {
            let g = parse_group(&group)?;
            let domain = MackeyDomain::new(g.group.clone())?;
            let t = theta(domain.ring(domain.top()))?;
            Output::from(common).theta(&g.name, &t);
            Ok(Status::Pass)
        }
        Command::Defect { group, common } => {
            let g = parse_group(&group)?;
            let domain = MackeyDomain::new(g.group.clone())?;
            let lattice = domain.lattice();
            let mut targets: Vec<usize> = lattice
                .cyclic_classes()
                .iter()
                .map(|&c| lattice.index_of(lattice.representative(c).elements()).expect("representative"))
                .collect();
            if !g.group.is_cyclic() {
                targets.push(domain.top());
            }
            let mut rows = Vec::new();
            for m in [burnside_mackey(domain.clone())?, rep_mackey(domain.clone())?] {
                for &c in &targets {
                    rows.push((m.name().to_string(), artin_defect(&m, c)?));
                }
            }
            // on cyclic subgroups θ matches the defect; above them only
            // the representation defect is expected to vanish
            let ok = rows.iter().all(|(name, r)| if r.cyclic { r.verdict } else { !name.starts_with("K_0") || r.defect_dim() == 0 });
            Output::from(common).defects(&g.name, &rows, ok);
            Ok(status(ok))
        }
        Command::Hh(a) => {
            let alg = parse_algebra(&a.algebra)?;
            homology(a.common.into(), hochschild(&alg.algebra, a.degree, Budget(a.common.budget))?)
        }
        Command::Hc(a) => {
            let alg = parse_algebra(&a.algebra)?;
            homology(a.common.into(), cyclic_homology(&alg.algebra, a.degree, Budget(a.common.budget))?.hc)
        }
        Command::Hp(a) => {
            let alg = parse_algebra(&a.algebra)?;
            homology(a.common.into(), hp_hn(&alg.algebra, a.degree, a.cutoff, Budget(a.common.budget))?.0)
        }
        Command::Hn(a) => {
            let alg = parse_algebra(&a.algebra)?;
            homology(a.common.into(), hp_hn(&alg.algebra, a.degree, a.cutoff, Budget(a.common.budget))?.1)
        }
        Command::SplitHh(a) => {
            let g = parse_group(&a.group)?;
            homology(a.common.into(), conjugacy_split_hh(&g.group, &Field::Rational, a.degree, Budget(a.common.budget))?)
        }
        Command::GroupHomology(a) => {
            let g = parse_group(&a.group)?;
            homology(a.common.into(), group_homology(&g.group, &Field::Rational, a.degree, Budget(a.common.budget))?)
        }
        Command::Dtr { group, common } => {
            let g = parse_group(&group)?;
            let t = dennis_trace_matrix(&g.group)?;
            let cross = character_crosscheck(&g.group)?;
            let ok = t.injective() && cross.verdict;
            Output::from(common).dtr(&g.name, &t, &cross);
            Ok(status(ok))
        }
        Command::Chern { group, common } => {
            let g = parse_group(&group)?;
            let r = chern_finite_check(&g.group)?;
            Output::from(common).chern(&g.name, &r);
            Ok(status(r.verdict()))
        }
        Command::Verify(v) => verify(v),
    }
}

fn verify(v: VerifyArgs) -> Result<Status> {
    let mut config = if v.all {
        SuiteConfig::default()
    } else if !v.group.is_empty() {
        SuiteConfig::for_groups(&v.group.iter().map(|g| parse_group(g)).collect::<Result<Vec<_>>>()?)
    } else {
        return Err(Error::Parse("verify needs --all or at least one --group".into()));
    };
    config.degree = v.degree;
    config.cutoff = v.cutoff;
    config.budget = Budget(v.common.budget);
    config.format = v.common.format;
    if let Some(j) = v.jobs {
        config.jobs = j;
    }
    config.validate()?;
    let path = v.fixtures.unwrap_or_else(|| PathBuf::from(FIXTURES_PATH));
    if v.regen_fixtures {
        let f = Fixtures::regenerate(&config)?;
        f.save(&path)?;
        eprintln!("wrote {} group and {} field fixtures to {}", f.groups.len(), f.fields.len(), path.display());
        return Ok(Status::Pass);
    }
    let fixtures = if path.is_file() { Fixtures::load(&path)? } else { Fixtures::builtin() };
    let report: SuiteReport = verify_with(&config, &fixtures)?;
    Output::from(v.common).suite(&report);
    Ok(if report.failed() > 0 {
        Status::Fail
    } else if report.skipped() > 0 {
        return Err(Error::Capability(format!("{} checks skipped", report.skipped())));
    } else {
        Status::Pass
    })
}
