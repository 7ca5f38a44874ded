//! Command-line surface over the dkplab library: instance generation,
//! lattice reformulation, exact branch-and-bound, certificate and
//! Frobenius-bound verification, and the desk-scale experiment tables.
//!
//! Exit codes: 0 success, 2 parse error, 3 generator constraint violation,
//! 4 limit exceeded (node limits, enumeration caps, size guards).

use clap::{Args, Parser, Subcommand, ValueEnum};
use dkplab::bnb::{self, BranchKind, BranchOrder, BranchStrategy, SolveStatus};
use dkplab::error::Error;
use dkplab::experiment::{ExperimentConfig, Table};
use dkplab::fileio::{
    parse_bundle, parse_instance, write_bundle, write_knapsack, write_matrix, write_trace,
    ReformBundle,
};
use dkplab::instance::{IpInstance, Knapsack, UBound};
use dkplab::instances::{self, BetaPolicy};
use dkplab::lattice::{ReductionMethod, ReductionProfile};
use dkplab::lp::IWidth;
use dkplab::mat::IntVec;
use dkplab::reformulate::{ahl, rangespace, rhs_reduce, AhlOutcome};
use num_bigint::BigInt;
use num_traits::One;
use std::path::PathBuf;
use std::process::ExitCode;

#[derive(Parser)]
#[command(
    name = "dkplab",
    version,
    about = "decomposable knapsack lab: lattice preconditioning for IP feasibility"
)]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Generate an instance file from a recipe or a named family
    Gen(GenArgs),
    /// Reformulate an instance file (rangespace or AHL), emitting a bundle
    Reformulate(ReformArgs),
    /// Run exact branch and bound on an instance (or bundle) file
    Solve(SolveArgs),
    /// Check certificates, Frobenius bounds, or node lower bounds
    Verify(VerifyArgs),
    /// Desk-scale experiment tables (CSV)
    Experiment(ExperimentArgs),
}

#[derive(Args)]
struct GenArgs {
    #[command(subcommand)]
    family: GenFamily,
}

#[derive(Clone, Copy, ValueEnum)]
enum PolicyArg {
    Widest,
    TightLow,
}

impl From<PolicyArg> for BetaPolicy {
    fn from(p: PolicyArg) -> Self {
        match p {
            PolicyArg::Widest => BetaPolicy::Widest,
            PolicyArg::TightLow => BetaPolicy::TightLow,
        }
    }
}

#[derive(Subcommand)]
enum GenFamily {
    /// Bounded DKP from p, r, u, k (and optionally M)
    Recipe1 {
        #[arg(long, allow_hyphen_values = true)]
        p: String,
        #[arg(long, allow_hyphen_values = true)]
        r: String,
        #[arg(long)]
        u: String,
        #[arg(long)]
        k: BigInt,
        #[arg(long, short = 'M')]
        m: Option<BigInt>,
        #[arg(long, value_enum, default_value = "widest")]
        beta_policy: PolicyArg,
        #[arg(short, long)]
        out: Option<PathBuf>,
    },
    /// Equality knapsack with unbounded variables from p, r, k
    Recipe2 {
        #[arg(long, allow_hyphen_values = true)]
        p: String,
        #[arg(long, allow_hyphen_values = true)]
        r: String,
        #[arg(long)]
        k: BigInt,
        #[arg(long, short = 'M')]
        m: Option<BigInt>,
        #[arg(long, value_enum, default_value = "widest")]
        beta_policy: PolicyArg,
        #[arg(short, long)]
        out: Option<PathBuf>,
    },
    /// 2 sum x_i + x_{n+1} = n over binary x (n odd)
    Jeroslow {
        #[arg(long)]
        n: usize,
        #[arg(short, long)]
        out: Option<PathBuf>,
    },
    /// The 21 x1 + 19 x2 two-variable instance
    Example1 {
        #[arg(short, long)]
        out: Option<PathBuf>,
    },
    /// 2 sum x_i = n over binary x; --slack appends the [-1/2, 1/2] slack
    Example2 {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        slack: bool,
        #[arg(short, long)]
        out: Option<PathBuf>,
    },
    /// Todd's hard equality knapsack (n odd)
    Todd {
        #[arg(long)]
        n: usize,
        #[arg(short, long)]
        out: Option<PathBuf>,
    },
    /// Avis' hard equality knapsack (n odd)
    Avis {
        #[arg(long)]
        n: usize,
        #[arg(short, long)]
        out: Option<PathBuf>,
    },
    /// p and r swapped relative to Avis (n divisible by 4)
    ReverseAvis {
        #[arg(long)]
        n: usize,
        #[arg(short, long)]
        out: Option<PathBuf>,
    },
    /// The superexponential family a_i = n^(t+1) + i
    Nt {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        t: usize,
        #[arg(short, long)]
        out: Option<PathBuf>,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum MethodArg {
    Rangespace,
    Ahl,
}

#[derive(Clone, Copy, ValueEnum)]
enum ReductionArg {
    Lll,
    Kz,
}

#[derive(Args)]
struct ReformArgs {
    file: PathBuf,
    #[arg(long, value_enum)]
    method: MethodArg,
    #[arg(long, value_enum, default_value = "lll")]
    reduction: ReductionArg,
    /// also translate the right-hand side by a Babai-rounded lattice point
    #[arg(long)]
    rhs_reduce: bool,
    /// keep the raw particular solution instead of Babai-reducing x_b (AHL)
    #[arg(long)]
    raw_xb: bool,
    #[arg(short, long)]
    out: Option<PathBuf>,
    /// dump the transform matrix (U, or V for AHL) in matrix text format
    #[arg(long)]
    dump_matrix: Option<PathBuf>,
}

#[derive(Clone, Copy, ValueEnum)]
enum BranchArg {
    Variable,
    Constraint,
}

#[derive(Args)]
struct SolveArgs {
    file: PathBuf,
    #[arg(long, value_enum, default_value = "variable")]
    branch: BranchArg,
    /// ascending | descending | most-fractional | fixed:2,0,1 | random:SEED
    #[arg(long, default_value = "ascending")]
    order: String,
    #[arg(long, allow_hyphen_values = true)]
    direction: Option<String>,
    /// maximize this objective over the instance
    #[arg(long, allow_hyphen_values = true)]
    objective: Option<String>,
    #[arg(long)]
    node_limit: Option<u64>,
    #[arg(long)]
    depth_limit: Option<u64>,
    /// when the file is a reform bundle, which side to solve
    #[arg(long, default_value = "reformulated")]
    use_part: String,
    /// write a tab-separated per-node trace
    #[arg(long)]
    trace: Option<PathBuf>,
    /// machine-readable one-line output
    #[arg(long)]
    csv: bool,
}

#[derive(Args)]
struct VerifyArgs {
    file: PathBuf,
    /// split certificate as p:k, e.g. 1,1:5
    #[arg(long)]
    cert: Option<String>,
    /// bounds on the p-branching Frobenius number (needs provenance)
    #[arg(long)]
    frob_bounds: bool,
    /// node-count lower bound for ordinary branch and bound
    #[arg(long)]
    node_lb: bool,
}

#[derive(Args)]
struct ExperimentArgs {
    /// t1 (u = e), t2 (u = 10e), or t3 (equality, unbounded)
    table: String,
    #[arg(long, default_value_t = 10)]
    n: usize,
    #[arg(long, default_value_t = 5)]
    count: usize,
    #[arg(long, default_value_t = 1)]
    seed: u64,
    #[arg(long)]
    node_limit: Option<u64>,
    #[arg(long, short = 'M')]
    m: Option<BigInt>,
    /// lift the n <= 24 guard on original-formulation runs
    #[arg(long)]
    allow_large: bool,
    #[arg(long, value_enum, default_value = "lll")]
    reduction: ReductionArg,
    #[arg(short, long)]
    out: Option<PathBuf>,
}

fn parse_vec(s: &str) -> Result<IntVec, String> {
    s.split(',')
        .map(|t| {
            t.trim()
                .parse::<BigInt>()
                .map_err(|e| format!("bad integer `{t}`: {e}"))
        })
        .collect()
}

fn parse_ubounds(s: &str) -> Result<Vec<UBound>, String> {
    s.split(',')
        .map(|t| {
            let t = t.trim();
            if t == "inf" {
                Ok(UBound::Inf)
            } else {
                t.parse::<BigInt>()
                    .map(UBound::Finite)
                    .map_err(|e| format!("bad bound `{t}`: {e}"))
            }
        })
        .collect()
}

fn profile_from(reduction: ReductionArg) -> ReductionProfile {
    let mut p = match reduction {
        ReductionArg::Lll => ReductionProfile::lll(),
        ReductionArg::Kz => ReductionProfile::kz(),
    };
    if let Ok(cap) = std::env::var("DKPLAB_ENUM_CAP") {
        if let Ok(cap) = cap.parse::<usize>() {
            p = p.with_enum_cap(cap);
        }
    }
    p
}

fn emit(out: &Option<PathBuf>, content: &str) -> std::io::Result<()> {
    match out {
        Some(path) => std::fs::write(path, content),
        None => {
            print!("{content}");
            Ok(())
        }
    }
}

/// 0 success, 2 parse, 3 generator constraint, 4 limit.
fn error_code(e: &Error) -> u8 {
    match e {
        Error::DimensionCap { .. } | Error::TooLarge(_) => 4,
        _ => 3,
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(msg) => {
            eprintln!("error: {}", msg.text);
            ExitCode::from(msg.code)
        }
    }
}

struct Failure {
    text: String,
    code: u8,
}

impl Failure {
    fn new(text: impl Into<String>, code: u8) -> Self {
        Failure {
            text: text.into(),
            code,
        }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::new(e.to_string(), error_code(&e))
    }
}

impl From<dkplab::fileio::ParseError> for Failure {
    fn from(e: dkplab::fileio::ParseError) -> Self {
        Failure::new(e.to_string(), 2)
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        Failure::new(e.to_string(), 1)
    }
}

fn run(cli: Cli) -> Result<ExitCode, Failure> {
    match cli.cmd {
        Cmd::Gen(args) => run_gen(args),
        Cmd::Reformulate(args) => run_reformulate(args),
        Cmd::Solve(args) => run_solve(args),
        Cmd::Verify(args) => run_verify(args),
        Cmd::Experiment(args) => run_experiment(args),
    }
}

fn dkp_file(d: &instances::DkpParams) -> String {
    write_knapsack(
        &d.knapsack(),
        Some(&d.name),
        Some(&dkplab::instance::Provenance {
            p: d.p.clone(),
            r: d.r.clone(),
            m_big: d.m_big.clone(),
            k: d.k.clone(),
        }),
    )
}

fn run_gen(args: GenArgs) -> Result<ExitCode, Failure> {
    let (content, out) = match args.family {
        GenFamily::Recipe1 {
            p,
            r,
            u,
            k,
            m,
            beta_policy,
            out,
        } => {
            let p = parse_vec(&p).map_err(|e| Failure::new(e, 2))?;
            let r = parse_vec(&r).map_err(|e| Failure::new(e, 2))?;
            let u = parse_ubounds(&u).map_err(|e| Failure::new(e, 2))?;
            let d = instances::recipe1(&p, &r, &u, &k, m, beta_policy.into())?;
            (dkp_file(&d), out)
        }
        GenFamily::Recipe2 {
            p,
            r,
            k,
            m,
            beta_policy,
            out,
        } => {
            let p = parse_vec(&p).map_err(|e| Failure::new(e, 2))?;
            let r = parse_vec(&r).map_err(|e| Failure::new(e, 2))?;
            let d = instances::recipe2(&p, &r, &k, m, beta_policy.into())?;
            (dkp_file(&d), out)
        }
        GenFamily::Jeroslow { n, out } => {
            let inst = instances::jeroslow(n)?;
            (dkplab::fileio::write_general(&inst), out)
        }
        GenFamily::Example1 { out } => (dkp_file(&instances::example1()), out),
        GenFamily::Example2 { n, slack, out } => {
            if slack {
                let inst = instances::example3(n)?;
                (dkplab::fileio::write_general(&inst), out)
            } else {
                (dkp_file(&instances::example2(n)?), out)
            }
        }
        GenFamily::Todd { n, out } => (dkp_file(&instances::todd(n)?), out),
        GenFamily::Avis { n, out } => (dkp_file(&instances::avis(n)?), out),
        GenFamily::ReverseAvis { n, out } => (dkp_file(&instances::reverse_avis(n)?), out),
        GenFamily::Nt { n, t, out } => (dkp_file(&instances::nt_family(n, t)?), out),
    };
    emit(&out, &content)?;
    Ok(ExitCode::SUCCESS)
}

fn run_reformulate(args: ReformArgs) -> Result<ExitCode, Failure> {
    let text = std::fs::read_to_string(&args.file)?;
    let loaded = parse_instance(&text)?;
    let inst = loaded.instance();
    let profile = profile_from(args.reduction);
    let reduction = match args.reduction {
        ReductionArg::Lll => ReductionMethod::Lll,
        ReductionArg::Kz => ReductionMethod::Kz,
    };
    let bundle = match args.method {
        MethodArg::Rangespace => {
            let reform = rangespace(&inst, &profile)?;
            let mut reformulated = reform.inst_new.clone();
            let mut x_r = None;
            if args.rhs_reduce {
                let red = rhs_reduce(&reformulated, &profile)?;
                reformulated = red.inst_new;
                x_r = Some(red.x_r);
            }
            ReformBundle {
                method: "rangespace".into(),
                reduction,
                original: loaded,
                reformulated,
                u_mat: Some(reform.u_mat),
                v_mat: None,
                v_star: None,
                x_b: None,
                eq_rows: None,
                x_r,
            }
        }
        MethodArg::Ahl => {
            let eq_rows = inst.equality_rows();
            if eq_rows.is_empty() {
                return Err(Failure::new("instance has no equality rows for AHL", 3));
            }
            match ahl(&inst, &eq_rows, &profile, !args.raw_xb)? {
                AhlOutcome::ProvenInfeasible { reason } => {
                    println!("infeasible: {reason}");
                    return Ok(ExitCode::SUCCESS);
                }
                AhlOutcome::Reform(reform) => {
                    let mut reformulated = reform.inst_new.clone();
                    let mut x_r = None;
                    if args.rhs_reduce {
                        let red = rhs_reduce(&reformulated, &profile)?;
                        reformulated = red.inst_new;
                        x_r = Some(red.x_r);
                    }
                    ReformBundle {
                        method: "ahl".into(),
                        reduction,
                        original: loaded,
                        reformulated,
                        u_mat: None,
                        v_mat: Some(reform.v_mat),
                        v_star: Some(reform.v_star),
                        x_b: Some(reform.x_b),
                        eq_rows: Some(reform.eq_rows),
                        x_r,
                    }
                }
            }
        }
    };
    if let Some(path) = &args.dump_matrix {
        let m = bundle
            .u_mat
            .as_ref()
            .or(bundle.v_mat.as_ref())
            .expect("bundle carries a transform");
        std::fs::write(path, write_matrix(m))?;
    }
    emit(&args.out, &write_bundle(&bundle))?;
    Ok(ExitCode::SUCCESS)
}

fn load_instance_or_bundle(path: &PathBuf, use_part: &str) -> Result<IpInstance, Failure> {
    let text = std::fs::read_to_string(path)?;
    if text.starts_with("reform-bundle") {
        let bundle = parse_bundle(&text)?;
        match use_part {
            "original" => Ok(bundle.original.instance()),
            "reformulated" => Ok(bundle.reformulated),
            other => Err(Failure::new(
                format!("unknown --use-part `{other}` (original|reformulated)"),
                2,
            )),
        }
    } else {
        Ok(parse_instance(&text)?.instance())
    }
}

fn parse_order(s: &str, n: usize) -> Result<BranchOrder, Failure> {
    if s == "ascending" {
        Ok(BranchOrder::Fixed((0..n).collect()))
    } else if s == "descending" {
        Ok(BranchOrder::Fixed((0..n).rev().collect()))
    } else if s == "most-fractional" {
        Ok(BranchOrder::MostFractional)
    } else if let Some(rest) = s.strip_prefix("fixed:") {
        let list: Result<Vec<usize>, _> = rest.split(',').map(|t| t.trim().parse()).collect();
        Ok(BranchOrder::Fixed(list.map_err(|_| {
            Failure::new(format!("bad fixed order `{rest}`"), 2)
        })?))
    } else if let Some(rest) = s.strip_prefix("random:") {
        Ok(BranchOrder::Random(rest.parse().map_err(|_| {
            Failure::new(format!("bad random seed `{rest}`"), 2)
        })?))
    } else {
        Err(Failure::new(format!("unknown order `{s}`"), 2))
    }
}

fn run_solve(args: SolveArgs) -> Result<ExitCode, Failure> {
    let inst = load_instance_or_bundle(&args.file, &args.use_part)?;
    let order = parse_order(&args.order, inst.num_vars())?;
    let direction = args
        .direction
        .as_deref()
        .map(|s| parse_vec(s).map_err(|e| Failure::new(e, 2)))
        .transpose()?;
    let objective = args
        .objective
        .as_deref()
        .map(|s| parse_vec(s).map_err(|e| Failure::new(e, 2)))
        .transpose()?;
    let strategy = BranchStrategy {
        kind: match args.branch {
            BranchArg::Variable => BranchKind::Variable,
            BranchArg::Constraint => BranchKind::Constraint,
        },
        order,
        direction,
        node_limit: args.node_limit,
        depth_limit: args.depth_limit,
    };
    let rep = bnb::solve_traced(&inst, &strategy, objective.as_deref(), args.trace.is_some())?;
    if let (Some(path), Some(trace)) = (&args.trace, &rep.trace) {
        std::fs::write(path, write_trace(trace))?;
    }
    let status_str = match &rep.status {
        SolveStatus::Infeasible => "infeasible".to_string(),
        SolveStatus::Feasible(x) => format!("feasible {}", join(x)),
        SolveStatus::Optimal(x, v) => format!("optimal value={v} point={}", join(x)),
        SolveStatus::NodeLimit => "node-limit".to_string(),
    };
    if args.csv {
        println!("status,nodes_total,nodes_lp_feasible,max_depth");
        println!(
            "{},{},{},{}",
            status_str.split(' ').next().unwrap(),
            rep.nodes_total,
            rep.nodes_lp_feasible,
            rep.max_depth
        );
    } else {
        println!("status: {status_str}");
        println!("nodes_total: {}", rep.nodes_total);
        println!("nodes_lp_feasible: {}", rep.nodes_lp_feasible);
        println!("max_depth: {}", rep.max_depth);
    }
    if matches!(rep.status, SolveStatus::NodeLimit) {
        return Ok(ExitCode::from(4));
    }
    Ok(ExitCode::SUCCESS)
}

fn join(x: &[BigInt]) -> String {
    x.iter()
        .map(|v| v.to_string())
        .collect::<Vec<_>>()
        .join(",")
}

fn run_verify(args: VerifyArgs) -> Result<ExitCode, Failure> {
    let text = std::fs::read_to_string(&args.file)?;
    let loaded = parse_instance(&text)?;
    let mut did_something = false;
    let mut all_pass = true;

    if let Some(cert) = &args.cert {
        did_something = true;
        let (p_str, k_str) = cert
            .split_once(':')
            .ok_or_else(|| Failure::new("cert must look like p1,p2,...:k", 2))?;
        let p = parse_vec(p_str).map_err(|e| Failure::new(e, 2))?;
        let k: BigInt = k_str
            .parse()
            .map_err(|_| Failure::new(format!("bad k `{k_str}`"), 2))?;
        let kp = loaded
            .knapsack()
            .cloned()
            .or_else(|| Knapsack::from_instance(&loaded.instance()))
            .ok_or_else(|| Failure::new("certificate checks need a knapsack-shaped instance", 3))?;
        let ok = bnb::check_split_certificate(&kp, &p, &k)?;
        println!(
            "certificate p=({}) k={k}: {}",
            join(&p),
            if ok { "PASS" } else { "FAIL" }
        );
        all_pass &= ok;
    }

    if args.frob_bounds {
        did_something = true;
        let prov = loaded
            .provenance()
            .ok_or_else(|| Failure::new("frobenius bounds need the p r M k provenance block", 3))?;
        let (lo, hi) = instances::frob_p_bounds(&prov.p, &prov.r, &prov.m_big)?;
        println!("p-branching Frobenius number in ({lo}, {hi})");
        let first: BigInt = lo.floor().to_integer() + 1;
        let last: BigInt = hi.ceil().to_integer() - BigInt::one();
        if first == last {
            println!("hence Frob_p(a) = {first}");
        }
    }

    if args.node_lb {
        did_something = true;
        let prov = loaded
            .provenance()
            .ok_or_else(|| Failure::new("node bounds need the p r M k provenance block", 3))?;
        let kp = loaded
            .knapsack()
            .cloned()
            .or_else(|| Knapsack::from_instance(&loaded.instance()))
            .ok_or_else(|| Failure::new("node bounds need a knapsack-shaped instance", 3))?;
        let params = instances::DkpParams {
            p: prov.p.clone(),
            r: prov.r.clone(),
            m_big: prov.m_big.clone(),
            k: prov.k.clone(),
            u: kp.u.clone(),
            beta1: kp.beta1.clone(),
            beta2: kp.beta2.clone(),
            name: "file".into(),
        };
        let lb = instances::node_lower_bound(&params)?;
        println!("ordinary branch-and-bound needs at least {lb} LP-feasible nodes");
    }

    if !did_something {
        // default: report the p-direction integer width when provenance exists
        match loaded.provenance() {
            Some(prov) => {
                let rep = dkplab::lp::width(&loaded.instance(), &prov.p);
                let iw = match rep.iwidth() {
                    IWidth::Finite(v) => v.to_string(),
                    IWidth::Infinite => "inf".into(),
                };
                println!("iwidth(p) = {iw}");
            }
            None => {
                return Err(Failure::new(
                    "nothing to verify: pass --cert, --frob-bounds, or --node-lb",
                    2,
                ))
            }
        }
    }
    if all_pass {
        Ok(ExitCode::SUCCESS)
    } else {
        Ok(ExitCode::FAILURE)
    }
}

fn run_experiment(args: ExperimentArgs) -> Result<ExitCode, Failure> {
    let table: Table = args.table.parse().map_err(|e: String| Failure::new(e, 2))?;
    let mut cfg = ExperimentConfig::new(table, args.n, args.count, args.seed);
    if let Some(limit) = args.node_limit {
        cfg.node_limit = limit;
    }
    if let Some(m) = args.m {
        cfg.m_big = m;
    }
    cfg.allow_large = args.allow_large;
    cfg.profile = profile_from(args.reduction);
    let csv = dkplab::experiment::run(&cfg)?;
    emit(&args.out, &csv)?;
    Ok(ExitCode::SUCCESS)
}
