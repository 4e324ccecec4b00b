use std::path::Path;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use num_bigint::BigUint;

use gti_core::arithmetic::{
    cm_divisibility_check, cm_divisibility_sweep, cm_family_demo, cm_family_orders,
    common_quotient_census, cyclotomic_family, density_estimate, euler_phi, CmParameters,
};
use gti_core::independence::{
    certify_family, goingup_check, gtprop_check, is_gt_independent, is_independent,
    serre_reduction, FamilySpec, Method, ProductSubgroup,
};
use gti_core::io::{load_group_ref, read_family};
use gti_core::structure::{ell_core, ell_plus, fsq, jh};
use gti_core::taxonomy::{
    artin_collision_scan, identify_simple, in_class_b, in_class_jor, in_class_lie_ell, lie_order,
    CollisionStatus, LieFamily,
};
use gti_core::{Config, FiniteGroup, GroupError};

#[derive(Parser, Debug)]
#[command(
    name = "gti-lab",
    version,
    about = "Finite group structure and independence of prime-indexed families"
)]
struct Cli {
    #[command(flatten)]
    caps: Caps,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Args, Debug)]
struct Caps {
    /// Largest group order enumerated element by element
    #[arg(long, global = true)]
    enumeration_cap: Option<u128>,
    /// Largest permutation degree
    #[arg(long, global = true)]
    degree_cap: Option<usize>,
    /// Largest number of cosets for a quotient
    #[arg(long, global = true)]
    coset_cap: Option<usize>,
    /// Largest number of conjugacy classes for the normal lattice
    #[arg(long, global = true)]
    class_cap: Option<usize>,
    /// Largest product order for brute-force independence
    #[arg(long, global = true)]
    product_budget: Option<u128>,
    /// Do not count the Tits group as a characteristic 2 Lie-type group
    #[arg(long, global = true)]
    no_tits: bool,
    /// Seed for randomized searches
    #[arg(long, global = true)]
    seed: Option<u64>,
}

impl Caps {
    fn config(&self) -> Config {
        let mut cfg = Config::default();
        if let Some(v) = self.enumeration_cap {
            cfg.enumeration_cap = v;
        }
        if let Some(v) = self.degree_cap {
            cfg.degree_cap = v;
        }
        if let Some(v) = self.coset_cap {
            cfg.coset_cap = v;
        }
        if let Some(v) = self.class_cap {
            cfg.class_cap = v;
        }
        if let Some(v) = self.product_budget {
            cfg.product_budget = v;
        }
        if let Some(v) = self.seed {
            cfg.seed = v;
        }
        cfg.tits_group = !self.no_tits;
        cfg
    }
}

#[derive(Args, Debug)]
struct Cm {
    #[arg(long)]
    d: u32,
    #[arg(long = "C")]
    c: u64,
    #[arg(long)]
    q: u64,
    #[arg(long)]
    a: u32,
}

impl Cm {
    fn params(&self) -> Result<CmParameters, GroupError> {
        CmParameters::new(self.d, self.c, self.q, self.a)
    }
}

#[derive(Subcommand, Debug)]
enum Cmd {
    /// Group order and permutation degree
    Order { group: String },
    /// Finite simple quotients
    Fsq { group: String },
    /// Composition factors with multiplicity
    Jh { group: String },
    /// Subgroup generated by the ell-Sylow subgroups
    Splus {
        #[arg(long)]
        ell: u64,
        group: String,
    },
    /// Largest normal ell-subgroup
    Core {
        #[arg(long)]
        ell: u64,
        group: String,
    },
    /// Membership in the bounded-order, Jordan and Lie-extension classes
    Classes {
        #[arg(long)]
        d: u128,
        #[arg(long)]
        ell: Option<u64>,
        group: String,
    },
    /// Name a simple group
    Identify { group: String },
    /// Decide whether the tuples of a family file generate the whole product
    Indep { family: String },
    /// Group-theoretic independence of a family file
    Gti { family: String },
    /// Certify a family via containment in Lie-type classes
    Certify {
        #[arg(long)]
        ell0: u64,
        family: String,
    },
    /// Check one instance of the going-up implication
    Goingup {
        #[arg(long)]
        ell: u64,
        /// Normal subgroup of G+: a group reference, or `trivial`, `center`, `derived`
        #[arg(long)]
        n: String,
        #[arg(long, default_value_t = 3)]
        jprime: u64,
        group: String,
    },
    /// Check that G/G+ is abelian of order prime to ell
    Gtprop {
        #[arg(long)]
        ell: u64,
        group: String,
    },
    /// Order of a simple group of Lie type
    LieOrder {
        #[arg(long)]
        family: String,
        #[arg(long)]
        rank: u32,
        #[arg(long)]
        q: u64,
    },
    /// Coincidences of orders among Lie-type and alternating groups
    LieScan {
        #[arg(long)]
        bound: String,
    },
    /// Cyclotomic family over a list of primes
    Cyclo {
        #[arg(long, value_delimiter = ',')]
        primes: Vec<u64>,
        /// Also list the primes whose factor has Z/q as a quotient
        #[arg(long)]
        census_q: Option<u64>,
    },
    /// Exhaustive divisibility check of the CM factorizations
    CmCheck {
        #[command(flatten)]
        cm: Cm,
        /// A single prime
        #[arg(long, conflicts_with = "bound")]
        ell: Option<u64>,
        /// Every admissible prime up to this bound
        #[arg(long, default_value_t = 10_000)]
        bound: u64,
    },
    /// Worst-case cyclic family from CM parameters
    CmDemo {
        #[command(flatten)]
        cm: Cm,
        #[arg(long, value_delimiter = ',')]
        primes: Vec<u64>,
    },
    /// Fraction of primes up to X congruent to 1 mod q^a
    Density {
        #[arg(long)]
        q: u64,
        #[arg(long)]
        a: u32,
        #[arg(long)]
        x: u64,
    },
}

fn load(spec: &str, cfg: &Config) -> Result<FiniteGroup, GroupError> {
    load_group_ref(spec, None, cfg).map(|(_, g)| g)
}

fn load_family(
    path: &str,
    cfg: &Config,
) -> Result<(FamilySpec, Vec<Vec<gti_core::Perm>>), GroupError> {
    let file = read_family(Path::new(path), cfg)?;
    let family = FamilySpec::new(file.factors.into_iter().map(|(l, _, g)| (l, g)).collect())?;
    Ok((family, file.tuples))
}

fn run(cmd: Cmd, cfg: &Config) -> Result<Vec<String>, GroupError> {
    let mut out = Vec::new();
    match cmd {
        Cmd::Order { group } => {
            let g = load(&group, cfg)?;
            out.push(format!("order={} degree={}", g.order(), g.degree()));
        }
        Cmd::Fsq { group } => {
            let s = fsq(&load(&group, cfg)?, cfg)?;
            out.push(format!("fsq={s}"));
            if s.fast_path {
                out.push("fsq_mode=fast-path".into());
            }
        }
        Cmd::Jh { group } => out.push(format!("jh={}", jh(&load(&group, cfg)?, cfg)?)),
        Cmd::Splus { ell, group } => {
            let g = load(&group, cfg)?;
            let s = ell_plus(&g, ell, cfg)?;
            out.push(format!(
                "splus_order={} index={}",
                s.order(),
                g.order() / s.order()
            ));
        }
        Cmd::Core { ell, group } => {
            let g = load(&group, cfg)?;
            let c = ell_core(&g, ell, cfg)?;
            out.push(format!(
                "core_order={} index={}",
                c.order(),
                g.order() / c.order()
            ));
        }
        Cmd::Classes { d, ell, group } => {
            let g = load(&group, cfg)?;
            let mut line = format!(
                "in_b={} in_jor={}",
                in_class_b(&g, d),
                in_class_jor(&g, d, cfg)?
            );
            if let Some(ell) = ell {
                line.push_str(&format!(
                    " in_lie_ell={}",
                    in_class_lie_ell(&g, ell, d, cfg)?
                ));
            }
            out.push(line);
        }
        Cmd::Identify { group } => {
            let id = identify_simple(&load(&group, cfg)?, cfg)?;
            out.push(format!(
                "id={id} aliases={} order={}",
                id.alias_string(),
                id.order()
            ));
        }
        Cmd::Indep { family } => {
            let (family, tuples) = load_family(&family, cfg)?;
            let h = if tuples.is_empty() {
                ProductSubgroup::full_product(family)?
            } else {
                ProductSubgroup::new(family, tuples)?
            };
            let mut report = is_independent(&h, cfg)?;
            let serre = match serre_reduction(&h, cfg) {
                Ok(cert) => {
                    report.method = Method::BothAgree;
                    let mut lines = cert.steps;
                    lines.push("serre=certified".into());
                    lines
                }
                Err(GroupError::Precondition(why)) => {
                    vec![format!("serre=refused reason={}", why.replace(' ', "_"))]
                }
                Err(e) => return Err(e),
            };
            out.extend(report.lines());
            out.extend(serre);
        }
        Cmd::Gti { family } => {
            let (family, _) = load_family(&family, cfg)?;
            out.extend(is_gt_independent(&family, cfg)?.lines());
        }
        Cmd::Certify { ell0, family } => {
            let (family, _) = load_family(&family, cfg)?;
            out.extend(certify_family(&family, ell0, cfg)?.lines());
        }
        Cmd::Goingup {
            ell,
            n,
            jprime,
            group,
        } => {
            let g = load(&group, cfg)?;
            let n = match n.as_str() {
                "trivial" => g.subgroup_from_perms(Vec::new()),
                "center" => g.center(cfg)?,
                "derived" => g.derived_subgroup(),
                other => load(other, cfg)?,
            };
            out.extend(goingup_check(&g, ell, &n, jprime, cfg)?.lines());
        }
        Cmd::Gtprop { ell, group } => {
            out.extend(gtprop_check(&load(&group, cfg)?, ell, cfg)?.lines())
        }
        Cmd::LieOrder { family, rank, q } => {
            let f: LieFamily = family.parse()?;
            out.push(format!("order={}", lie_order(f, rank, q)?));
        }
        Cmd::LieScan { bound } => {
            let b = parse_bound(&bound)?;
            let records = artin_collision_scan(&b, cfg.tits_group);
            out.extend(records.iter().map(|r| r.to_string()));
            let violations = records
                .iter()
                .filter(|r| r.status == CollisionStatus::Violation)
                .count();
            out.push(format!("records={} violations={violations}", records.len()));
        }
        Cmd::Cyclo { primes, census_q } => {
            let family = cyclotomic_family(&primes)?;
            let orders: Vec<String> = family
                .factors()
                .iter()
                .map(|(l, g)| format!("{l}:{}", g.order()))
                .collect();
            out.push(format!("orders={}", orders.join(",")));
            out.extend(is_gt_independent(&family, cfg)?.lines());
            if let Some(q) = census_q {
                let hits: Vec<String> = common_quotient_census(&family.primes(), q, cfg)?
                    .iter()
                    .map(|l| l.to_string())
                    .collect();
                out.push(format!("census_q={q} primes={}", hits.join(",")));
            }
        }
        Cmd::CmCheck { cm, ell, bound } => {
            let p = cm.params()?;
            let checks = match ell {
                Some(l) => vec![cm_divisibility_check(&p, l)?],
                None => cm_divisibility_sweep(&p, bound)?,
            };
            let checked: u64 = checks.iter().map(|c| c.checked).sum();
            for c in checks.iter().filter(|c| !c.passed()) {
                let (u, m, k) = c.failure.expect("failed check has a witness");
                out.push(format!("failure ell={} u={u} m={m} c={k}", c.ell));
            }
            let failures = checks.iter().filter(|c| !c.passed()).count();
            out.push(format!(
                "passed={} primes={} checked={checked} failures={failures}",
                failures == 0,
                checks.len()
            ));
        }
        Cmd::CmDemo { cm, primes } => {
            let p = cm.params()?;
            let orders: Vec<String> = cm_family_orders(&p, &primes)?
                .iter()
                .map(|(l, n)| format!("{l}:{n}"))
                .collect();
            out.push(format!("orders={}", orders.join(",")));
            out.extend(cm_family_demo(&p, &primes, cfg)?.lines());
        }
        Cmd::Density { q, a, x } => {
            let r = density_estimate(q, a, x)?;
            let target = euler_phi(q.pow(a));
            out.push(format!(
                "density={}/{} approx={:.6} expected=1/{target}",
                r.numer(),
                r.denom(),
                *r.numer() as f64 / *r.denom() as f64
            ));
        }
    }
    Ok(out)
}

/// Accepts plain integers and powers of ten written `1e8`.
fn parse_bound(s: &str) -> Result<BigUint, GroupError> {
    let bad = || GroupError::Precondition(format!("bad bound `{s}`"));
    match s.split_once(['e', 'E']) {
        Some((m, e)) => {
            let m: BigUint = m.parse().map_err(|_| bad())?;
            let e: u32 = e.parse().map_err(|_| bad())?;
            Ok(m * BigUint::from(10u32).pow(e))
        }
        None => s.parse().map_err(|_| bad()),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() {
                ExitCode::from(1)
            } else {
                ExitCode::SUCCESS
            };
        }
    };
    let cfg = cli.caps.config();
    match run(cli.cmd, &cfg) {
        Ok(lines) => {
            for l in lines {
                println!("{l}");
            }
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("error={e}");
            ExitCode::from(if e.is_resource_cap() { 2 } else { 1 })
        }
    }
}
