//! Command-line front end for the stability toolkit.
//!
//! Every subcommand reads a quiver description, runs one computation, and
//! prints either a short text summary or, with `--json`, a machine-readable
//! envelope with a stable schema. Identical inputs and seeds produce
//! byte-identical JSON; wall-clock timing is opt-in via `--timing` so that
//! it never breaks reproducibility. Exit codes: 0 on success, 1 when a
//! checked property is violated, 2 on usage or resource errors.

use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use clap::{Args, Parser, Subcommand};
use serde::Serialize;
use serde_json::{json, Value};

use quiver_stability::domains::{
    dbeta_cone_decomposition, dbeta_contains, dbeta_contains_via_split, dbeta_inequalities,
    decompose_weight_vector,
};
use quiver_stability::fan::{
    check_domains_vs_clusters, compatibility_degree, enumerate_compatible_sets,
    in_finite_stability_cone, refine_exceptional_cone, AlmostPositiveRoot,
};
use quiver_stability::homext::HomExt;
use quiver_stability::oracle::{self, BruteOptions, Rep};
use quiver_stability::quiver::Quiver;
use quiver_stability::rng::Lcg;
use quiver_stability::stability::{
    ext_quiver, sigma_stable_decomposition, stability_status, stable_dims,
    verify_embedding_isometry,
};
use quiver_stability::vector::IntVector;
use quiver_stability::verify;
use quiver_stability::Error;

const SCHEMA_VERSION: u32 = 1;

#[derive(Parser)]
#[command(
    name = "qstab",
    version,
    about = "Exact stability computations for quiver representations"
)]
struct Cli {
    /// Quiver file: {"vertices": ["a", ...], "arrows": [["a", "b"], ...]}.
    #[arg(long, global = true)]
    quiver: Option<PathBuf>,
    /// Emit a machine-readable JSON envelope instead of text.
    #[arg(long, global = true)]
    json: bool,
    /// Include wall-clock timing in the report.
    #[arg(long, global = true)]
    timing: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct PairArgs {
    /// Comma-separated integers in declared vertex order.
    #[arg(long)]
    alpha: String,
    #[arg(long)]
    beta: String,
}

#[derive(Args)]
struct VecArgs {
    /// Comma-separated integers in declared vertex order.
    #[arg(long)]
    alpha: String,
}

#[derive(Args)]
struct WeightPairArgs {
    /// Weight vector, comma-separated.
    #[arg(long)]
    sigma: String,
    #[arg(long)]
    beta: String,
}

#[derive(Args)]
struct RootsArgs {
    /// Semicolon-separated dimension vectors, e.g. "0,0,1;0,1,0".
    #[arg(long)]
    roots: String,
}

#[derive(Args)]
struct OracleOpts {
    /// Comma-separated primes to enumerate over.
    #[arg(long, value_delimiter = ',', default_values_t = [2u64, 3, 5])]
    fields: Vec<u64>,
    #[arg(long, default_value_t = 1)]
    seed: u64,
}

#[derive(Subcommand)]
enum Command {
    /// Euler pairing of two lattice vectors.
    Euler(PairArgs),
    /// Generic hom and ext dimensions of a pair.
    Homext(PairArgs),
    /// Whether alpha embeds into the generic representation of beta.
    Embeds(PairArgs),
    /// Canonical decomposition of a dimension vector.
    Canon(VecArgs),
    /// Root class of a dimension vector.
    Rootclass(VecArgs),
    /// King stability of beta at the weight sigma.
    Stability(WeightPairArgs),
    /// All stable dimension vectors with entries up to a bound.
    StableDims {
        #[arg(long)]
        sigma: String,
        #[arg(long, default_value_t = 6)]
        bound: i64,
    },
    /// Decomposition of a semistable vector into stable ones.
    StableDecomp(WeightPairArgs),
    /// The quiver induced by an exceptional sequence.
    ExtQuiver(RootsArgs),
    /// Check the embedding of an exceptional sequence is an exact isometry.
    Isometry {
        #[command(flatten)]
        roots: RootsArgs,
        #[arg(long, default_value_t = 100)]
        samples: u64,
        #[arg(long, default_value_t = 1)]
        seed: u64,
    },
    /// Split a weight into a nonnegative part minus projective multiples.
    SplitWeight(VecArgs),
    /// Halfspace domain queries.
    #[command(subcommand)]
    Dbeta(DbetaCommand),
    /// Compatibility degree of two almost positive roots (r:1,0 or n:NAME).
    Compat {
        #[arg(long)]
        first: String,
        #[arg(long)]
        second: String,
    },
    /// Enumerate compatible sets over the bounded ground set.
    Clusters {
        #[arg(long, default_value_t = 2)]
        bound: i64,
        /// Largest set size to enumerate; defaults to the vertex count.
        #[arg(long)]
        size_bound: Option<usize>,
    },
    /// Membership of a weight in the finite stability cone.
    Finstab(VecArgs),
    /// Refine an exceptional cone along a weight on its ext quiver.
    Refine {
        #[command(flatten)]
        roots: RootsArgs,
        /// Vertices contributing negative projectives, comma-separated.
        #[arg(long, value_delimiter = ',', num_args = 0.., default_value = "")]
        negatives: Vec<String>,
        #[arg(long)]
        eta: String,
    },
    /// Compare halfspace domains against compatible-set cones on a box.
    Dichotomy {
        /// Entry bound for the scanned roots.
        #[arg(long, default_value_t = 4)]
        bound: i64,
        /// Half-width of the weight box.
        #[arg(long = "box", default_value_t = 4)]
        box_bound: i64,
    },
    /// Finite-field brute-force replays.
    #[command(subcommand)]
    Oracle(OracleCommand),
    /// Run the full acceptance battery.
    VerifyAll,
}

#[derive(Subcommand)]
enum DbetaCommand {
    /// The equality and inequalities cutting out the domain.
    Halfspaces {
        #[arg(long)]
        beta: String,
    },
    /// Whether alpha lies in the domain (both routes, cross-checked).
    Contains {
        #[arg(long)]
        beta: String,
        #[arg(long)]
        alpha: String,
    },
    /// Simplicial cones covering the domain.
    Cones {
        #[arg(long)]
        beta: String,
        /// Entry bound for the scanned stable roots.
        #[arg(long, default_value_t = 6)]
        bound: i64,
        /// Also list non-maximal exceptional sets.
        #[arg(long)]
        all: bool,
    },
}

#[derive(Subcommand)]
enum OracleCommand {
    /// Minimum hom dimension over enumerated or sampled pairs per field.
    Homext {
        #[command(flatten)]
        pair: PairArgs,
        #[command(flatten)]
        opts: OracleOpts,
    },
    /// Verdict counts over enumerated or sampled representations per field.
    Stability {
        #[arg(long)]
        sigma: String,
        #[arg(long)]
        beta: String,
        #[command(flatten)]
        opts: OracleOpts,
    },
    /// Defect-map determinant of one seeded pair per field.
    Det {
        #[command(flatten)]
        pair: PairArgs,
        #[command(flatten)]
        opts: OracleOpts,
    },
}

struct Outcome {
    command: &'static str,
    inputs: Value,
    results: Value,
    caveats: Vec<String>,
    human: String,
    violation: bool,
    seed: Option<u64>,
}

impl Outcome {
    fn new(command: &'static str, inputs: Value, results: Value, human: String) -> Self {
        Outcome {
            command,
            inputs,
            results,
            caveats: Vec::new(),
            human,
            violation: false,
            seed: None,
        }
    }
}

#[derive(Serialize)]
struct Envelope<'a> {
    schema_version: u32,
    command: &'a str,
    inputs: &'a Value,
    results: &'a Value,
    caveats: &'a [String],
    seed: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    timing_ms: Option<u128>,
}

enum CliError {
    Core(Error),
    Usage(String),
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        CliError::Core(e)
    }
}

impl std::fmt::Display for CliError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            CliError::Core(e) => write!(f, "{e}"),
            CliError::Usage(m) => write!(f, "{m}"),
        }
    }
}

fn exit_code_for(e: &CliError) -> u8 {
    match e {
        CliError::Core(Error::Consistency(_)) => 1,
        _ => 2,
    }
}

fn load_quiver(path: &Option<PathBuf>) -> Result<Quiver, CliError> {
    let Some(path) = path else {
        return Err(CliError::Usage(
            "this subcommand needs --quiver FILE".into(),
        ));
    };
    let text = std::fs::read_to_string(path)
        .map_err(|e| CliError::Usage(format!("cannot read {}: {e}", path.display())))?;
    Ok(Quiver::parse_json(&text)?)
}

fn parse_vec(text: &str) -> Result<IntVector, CliError> {
    Ok(IntVector::parse_csv(text)?)
}

/// Parse a vector that must live on the quiver's vertex lattice.
fn parse_sized(q: &Quiver, text: &str) -> Result<IntVector, CliError> {
    let v = parse_vec(text)?;
    if v.len() != q.len() {
        return Err(Error::LengthMismatch {
            got: v.len(),
            want: q.len(),
        }
        .into());
    }
    Ok(v)
}

fn parse_roots(q: &Quiver, text: &str) -> Result<Vec<IntVector>, CliError> {
    text.split(';')
        .map(|part| parse_sized(q, part.trim()))
        .collect()
}

/// An almost positive root on the command line: `r:` plus a vector, or
/// `n:` plus a vertex name for a negative projective.
fn parse_almost_positive(q: &Quiver, text: &str) -> Result<AlmostPositiveRoot, CliError> {
    if let Some(rest) = text.strip_prefix("r:") {
        return Ok(AlmostPositiveRoot::Root(parse_sized(q, rest)?));
    }
    if let Some(rest) = text.strip_prefix("n:") {
        return Ok(AlmostPositiveRoot::NegativeProjective(
            q.vertex_index(rest)?,
        ));
    }
    Err(CliError::Usage(format!(
        "cannot parse `{text}`: use r:VECTOR or n:VERTEX"
    )))
}

fn quiver_value(q: &Quiver) -> Value {
    serde_json::from_str(&q.to_json_string()).expect("quiver serialization")
}

fn describe_members(q: &Quiver, members: &[AlmostPositiveRoot]) -> String {
    members
        .iter()
        .map(|m| match m {
            AlmostPositiveRoot::Root(v) => format!("({v})"),
            _ => m.describe(q),
        })
        .collect::<Vec<_>>()
        .join(", ")
}

fn run(cli: &Cli) -> Result<Outcome, CliError> {
    match &cli.command {
        Command::Euler(args) => {
            let q = load_quiver(&cli.quiver)?;
            let alpha = parse_sized(&q, &args.alpha)?;
            let beta = parse_sized(&q, &args.beta)?;
            let value = q.euler_form(&alpha, &beta);
            Ok(Outcome::new(
                "euler",
                json!({"alpha": alpha, "beta": beta}),
                json!({"euler": value.to_string()}),
                format!("<({alpha}), ({beta})> = {value}\n"),
            ))
        }
        Command::Homext(args) => {
            let q = load_quiver(&cli.quiver)?;
            let alpha = parse_sized(&q, &args.alpha)?;
            let beta = parse_sized(&q, &args.beta)?;
            let e = HomExt::new(&q);
            let (hom, ext) = e.homext(&alpha, &beta)?;
            Ok(Outcome::new(
                "homext",
                json!({"alpha": alpha, "beta": beta}),
                json!({"hom": hom, "ext": ext}),
                format!("hom = {hom}, ext = {ext}\n"),
            ))
        }
        Command::Embeds(args) => {
            let q = load_quiver(&cli.quiver)?;
            let alpha = parse_sized(&q, &args.alpha)?;
            let beta = parse_sized(&q, &args.beta)?;
            let e = HomExt::new(&q);
            let embeds = e.embeds(&alpha, &beta)?;
            Ok(Outcome::new(
                "embeds",
                json!({"alpha": alpha, "beta": beta}),
                json!({"embeds": embeds}),
                format!(
                    "({alpha}) {} the generic representation of ({beta})\n",
                    if embeds { "embeds into" } else { "does not embed into" }
                ),
            ))
        }
        Command::Canon(args) => {
            let q = load_quiver(&cli.quiver)?;
            let alpha = parse_sized(&q, &args.alpha)?;
            let e = HomExt::new(&q);
            let canon = e.canonical_decomposition(&alpha)?;
            let mut lines = String::new();
            let mut parts = Vec::new();
            for (c, m) in &canon {
                let class = e.root_class(c)?;
                lines.push_str(&format!("{m} x ({c})  [{}]\n", class_name(class)));
                parts.push(json!({"summand": c, "multiplicity": m, "class": class}));
            }
            Ok(Outcome::new(
                "canon",
                json!({"alpha": alpha}),
                json!({"summands": parts}),
                lines,
            ))
        }
        Command::Rootclass(args) => {
            let q = load_quiver(&cli.quiver)?;
            let alpha = parse_sized(&q, &args.alpha)?;
            let e = HomExt::new(&q);
            let class = e.root_class(&alpha)?;
            Ok(Outcome::new(
                "rootclass",
                json!({"alpha": alpha}),
                json!({"class": class}),
                format!("{}\n", class_name(class)),
            ))
        }
        Command::Stability(args) => {
            let q = load_quiver(&cli.quiver)?;
            let sigma = parse_sized(&q, &args.sigma)?;
            let beta = parse_sized(&q, &args.beta)?;
            let e = HomExt::new(&q);
            let status = stability_status(&e, &sigma, &beta)?;
            Ok(Outcome::new(
                "stability",
                json!({"sigma": sigma, "beta": beta}),
                json!({"status": status}),
                format!("{status:?}\n"),
            ))
        }
        Command::StableDims { sigma, bound } => {
            let q = load_quiver(&cli.quiver)?;
            let sigma = parse_sized(&q, sigma)?;
            let e = HomExt::new(&q);
            let report = stable_dims(&e, &sigma, *bound)?;
            let mut human = format!(
                "{} stable dimension vector(s) with entries <= {bound}\n",
                report.vectors.len()
            );
            for v in &report.vectors {
                human.push_str(&format!("({v})\n"));
            }
            let mut out = Outcome::new(
                "stable-dims",
                json!({"sigma": sigma, "bound": bound}),
                json!({"vectors": report.vectors, "complete": report.complete}),
                human,
            );
            if !report.complete {
                out.caveats
                    .push(format!("entry bound {bound} is not provably complete"));
            }
            Ok(out)
        }
        Command::StableDecomp(args) => {
            let q = load_quiver(&cli.quiver)?;
            let sigma = parse_sized(&q, &args.sigma)?;
            let beta = parse_sized(&q, &args.beta)?;
            let e = HomExt::new(&q);
            let dec = sigma_stable_decomposition(&e, &sigma, &beta)?;
            let mut human = String::new();
            for (part, m) in &dec.parts {
                human.push_str(&format!("{m} x ({part})\n"));
            }
            Ok(Outcome::new(
                "stable-decomp",
                json!({"sigma": sigma, "beta": beta}),
                json!({"parts": dec.parts}),
                human,
            ))
        }
        Command::ExtQuiver(args) => {
            let q = load_quiver(&cli.quiver)?;
            let roots = parse_roots(&q, &args.roots)?;
            let e = HomExt::new(&q);
            let eq = ext_quiver(&e, &roots)?;
            let mut human = format!(
                "{} vertices, {} arrows\n",
                eq.len(),
                eq.arrow_list().len()
            );
            for &(t, h) in eq.arrow_list() {
                human.push_str(&format!("{} -> {}\n", eq.name(t), eq.name(h)));
            }
            Ok(Outcome::new(
                "ext-quiver",
                json!({"roots": roots}),
                json!({"quiver": quiver_value(&eq)}),
                human,
            ))
        }
        Command::Isometry {
            roots,
            samples,
            seed,
        } => {
            let q = load_quiver(&cli.quiver)?;
            let roots = parse_roots(&q, &roots.roots)?;
            let e = HomExt::new(&q);
            let report = verify_embedding_isometry(&e, &roots, *samples, *seed)?;
            let human = if report.ok {
                format!("exact on {} sample pairs\n", report.samples)
            } else {
                format!("counterexample: {:?}\n", report.counterexample)
            };
            let mut out = Outcome::new(
                "isometry",
                json!({"roots": roots, "samples": samples}),
                json!({
                    "ok": report.ok,
                    "samples": report.samples,
                    "counterexample": report.counterexample,
                }),
                human,
            );
            out.seed = Some(*seed);
            out.violation = !report.ok;
            Ok(out)
        }
        Command::SplitWeight(args) => {
            let q = load_quiver(&cli.quiver)?;
            let alpha = parse_sized(&q, &args.alpha)?;
            let split = decompose_weight_vector(&q, &alpha)?;
            Ok(Outcome::new(
                "split-weight",
                json!({"alpha": alpha}),
                json!({"alpha_plus": split.alpha_plus, "delta": split.delta}),
                format!(
                    "alpha_plus = ({}), projective multiplicities = ({})\n",
                    split.alpha_plus, split.delta
                ),
            ))
        }
        Command::Dbeta(sub) => run_dbeta(cli, sub),
        Command::Compat { first, second } => {
            let q = load_quiver(&cli.quiver)?;
            let e = HomExt::new(&q);
            let a = parse_almost_positive(&q, first)?;
            let b = parse_almost_positive(&q, second)?;
            let degree = compatibility_degree(&e, &a, &b)?;
            Ok(Outcome::new(
                "compat",
                json!({"first": a, "second": b}),
                json!({"degree": degree}),
                format!("degree = {degree}\n"),
            ))
        }
        Command::Clusters { bound, size_bound } => {
            let q = load_quiver(&cli.quiver)?;
            let e = HomExt::new(&q);
            let size = size_bound.unwrap_or(q.len());
            let report = enumerate_compatible_sets(&e, *bound, size)?;
            let maximal: Vec<_> = report.maximal().collect();
            let mut human = format!(
                "{} ground elements, {} compatible sets, {} maximal\n",
                report.ground.len(),
                report.sets.len(),
                maximal.len()
            );
            for set in &maximal {
                human.push_str(&format!("{{{}}}\n", describe_members(&q, &set.members)));
            }
            let mut out = Outcome::new(
                "clusters",
                json!({"bound": bound, "size_bound": size}),
                json!({
                    "ground": report.ground,
                    "ground_complete": report.ground_complete,
                    "sets": report.sets,
                }),
                human,
            );
            if !report.ground_complete {
                out.caveats.push(format!(
                    "root entry bound {bound} is not provably complete"
                ));
            }
            Ok(out)
        }
        Command::Finstab(args) => {
            let q = load_quiver(&cli.quiver)?;
            let alpha = parse_sized(&q, &args.alpha)?;
            let e = HomExt::new(&q);
            let report = in_finite_stability_cone(&e, &alpha)?;
            let human = match &report.witness {
                Some(w) => format!(
                    "member: yes, effective: {}\nwitness: {{{}}}\n",
                    report.effective,
                    describe_members(&q, w)
                ),
                None => "member: no\n".to_string(),
            };
            Ok(Outcome::new(
                "finstab",
                json!({"alpha": alpha}),
                json!({
                    "member": report.member,
                    "effective": report.effective,
                    "split": report.split,
                    "witness": report.witness,
                }),
                human,
            ))
        }
        Command::Refine {
            roots,
            negatives,
            eta,
        } => {
            let q = load_quiver(&cli.quiver)?;
            let roots = parse_roots(&q, &roots.roots)?;
            let negatives = negatives
                .iter()
                .filter(|s| !s.is_empty())
                .map(|s| q.vertex_index(s).map_err(CliError::from))
                .collect::<Result<Vec<_>, _>>()?;
            let eta = parse_vec(eta)?;
            let e = HomExt::new(&q);
            let refined = refine_exceptional_cone(&e, &roots, &negatives, &eta)?;
            let mut human = format!(
                "ext quiver: {} vertices, {} arrows\n",
                refined.ext_quiver.len(),
                refined.ext_quiver.arrow_list().len()
            );
            human.push_str(&format!(
                "members: {{{}}}\n",
                describe_members(&q, &refined.members)
            ));
            Ok(Outcome::new(
                "refine",
                json!({"roots": roots, "negatives": negatives, "eta": eta}),
                json!({
                    "ext_quiver": quiver_value(&refined.ext_quiver),
                    "local": refined.local,
                    "mapped": refined.mapped,
                    "members": refined.members,
                }),
                human,
            ))
        }
        Command::Dichotomy { bound, box_bound } => {
            let q = load_quiver(&cli.quiver)?;
            let e = HomExt::new(&q);
            let report = check_domains_vs_clusters(&e, *bound, *box_bound)?;
            let mut human = format!(
                "agree: {} (both {}, neither {}, domain-only {}, cone-only {})\n",
                report.agree,
                report.both,
                report.neither,
                report.halfspace_only,
                report.cone_only
            );
            if let Some(w) = &report.witness {
                human.push_str(&format!(
                    "witness: ({}) in D(({})) with Tits form {}\n",
                    w.alpha, w.beta, w.tits
                ));
            }
            let mut out = Outcome::new(
                "dichotomy",
                json!({"bound": bound, "box": box_bound}),
                serde_json::to_value(&report).expect("report serialization"),
                human,
            );
            out.caveats.push(
                "coverage is judged one-sided: cones may extend beyond the scanned domains"
                    .into(),
            );
            Ok(out)
        }
        Command::Oracle(sub) => run_oracle(cli, sub),
        Command::VerifyAll => {
            let reports = verify::run_all()?;
            let passed = reports.iter().all(|r| r.passed);
            let mut human = String::new();
            let mut caveats = Vec::new();
            for r in &reports {
                human.push_str(&format!(
                    "[{}] criterion {} ({}): {}\n",
                    if r.passed { "PASS" } else { "FAIL" },
                    r.id,
                    r.name,
                    r.details
                ));
                for c in &r.caveats {
                    caveats.push(format!("criterion {}: {c}", r.id));
                }
            }
            human.push_str(&format!(
                "{}\n",
                if passed { "all criteria passed" } else { "FAILURES PRESENT" }
            ));
            let mut out = Outcome::new(
                "verify-all",
                json!({}),
                json!({"passed": passed, "criteria": reports}),
                human,
            );
            out.caveats = caveats;
            out.violation = !passed;
            Ok(out)
        }
    }
}

fn run_dbeta(cli: &Cli, sub: &DbetaCommand) -> Result<Outcome, CliError> {
    let q = load_quiver(&cli.quiver)?;
    let e = HomExt::new(&q);
    match sub {
        DbetaCommand::Halfspaces { beta } => {
            let beta = parse_sized(&q, beta)?;
            let sys = dbeta_inequalities(&e, &beta)?;
            let mut human = format!("equality: <a, ({})> = 0\n", sys.equality);
            for s in &sys.inequalities {
                human.push_str(&format!("inequality: <a, ({s})> <= 0\n"));
            }
            Ok(Outcome::new(
                "dbeta-halfspaces",
                json!({"beta": beta}),
                serde_json::to_value(&sys).expect("report serialization"),
                human,
            ))
        }
        DbetaCommand::Contains { beta, alpha } => {
            let beta = parse_sized(&q, beta)?;
            let alpha = parse_sized(&q, alpha)?;
            let direct = dbeta_contains(&e, &beta, &alpha)?;
            let split = dbeta_contains_via_split(&e, &beta, &alpha)?;
            if direct != split {
                return Err(Error::Consistency(format!(
                    "membership routes disagree on ({alpha}): halfspaces {direct}, split {split}"
                ))
                .into());
            }
            Ok(Outcome::new(
                "dbeta-contains",
                json!({"beta": beta, "alpha": alpha}),
                json!({"contains": direct}),
                format!(
                    "({alpha}) is {}D(({beta}))\n",
                    if direct { "in " } else { "not in " }
                ),
            ))
        }
        DbetaCommand::Cones { beta, bound, all } => {
            let beta = parse_sized(&q, beta)?;
            let dec = dbeta_cone_decomposition(&e, &beta, *bound, *all)?;
            let mut human = format!("{} maximal exceptional set(s)\n", dec.members.len());
            for m in &dec.members {
                let mut parts: Vec<String> =
                    m.roots.iter().map(|r| format!("({r})")).collect();
                parts.extend(m.negatives.iter().map(|&i| format!("-P({})", q.name(i))));
                human.push_str(&format!("{{{}}}\n", parts.join(", ")));
            }
            let mut out = Outcome::new(
                "dbeta-cones",
                json!({"beta": beta, "bound": bound, "all": all}),
                serde_json::to_value(&dec).expect("report serialization"),
                human,
            );
            if !dec.stable_roots.complete {
                out.caveats.push(format!(
                    "stable root scan bound {bound} is not provably complete"
                ));
            }
            Ok(out)
        }
    }
}

fn run_oracle(cli: &Cli, sub: &OracleCommand) -> Result<Outcome, CliError> {
    let q = load_quiver(&cli.quiver)?;
    match sub {
        OracleCommand::Homext { pair, opts } => {
            let alpha = parse_sized(&q, &pair.alpha)?;
            let beta = parse_sized(&q, &pair.beta)?;
            let options = BruteOptions {
                fields: opts.fields.clone(),
                seed: opts.seed,
                ..BruteOptions::default()
            };
            let brute = oracle::brute_generic_homext(&q, &alpha, &beta, &options)?;
            let mut human = format!("hom = {}, ext = {}\n", brute.hom, brute.ext);
            for f in &brute.fields {
                human.push_str(&format!(
                    "F_{}: min hom {} over {} {} pair(s)\n",
                    f.p,
                    f.hom_min,
                    f.pairs_checked,
                    if f.exhaustive { "enumerated" } else { "sampled" }
                ));
            }
            let mut out = Outcome::new(
                "oracle-homext",
                json!({"alpha": alpha, "beta": beta, "fields": opts.fields}),
                serde_json::to_value(&brute).expect("report serialization"),
                human,
            );
            out.seed = Some(opts.seed);
            if brute.sampled {
                out.caveats
                    .push("no field could be enumerated exhaustively; minima are sampled".into());
            }
            Ok(out)
        }
        OracleCommand::Stability { sigma, beta, opts } => {
            let sigma = parse_sized(&q, sigma)?;
            let beta = parse_sized(&q, beta)?;
            let e = HomExt::new(&q);
            let verdict = stability_status(&e, &sigma, &beta)?;
            let dims: Vec<usize> = beta
                .to_i64()
                .ok_or_else(|| CliError::Usage("beta too large for the oracle".into()))?
                .into_iter()
                .map(|x| {
                    usize::try_from(x)
                        .map_err(|_| CliError::Usage("beta must be nonnegative".into()))
                })
                .collect::<Result<_, _>>()?;
            let mut fields = Vec::new();
            let mut human = format!("generic verdict: {verdict:?}\n");
            let mut sampled_any = false;
            for &p in &opts.fields {
                let entries = Rep::entry_count(&q, &dims);
                let total = u32::try_from(entries)
                    .ok()
                    .and_then(|e| u128::from(p).checked_pow(e))
                    .filter(|t| *t <= 20_000);
                let mut counts = [0u64; 3];
                let exhaustive = total.is_some();
                match total {
                    Some(total) => {
                        for idx in 0..total as u64 {
                            let rep = Rep::from_index(&q, &dims, p, idx);
                            let s = oracle::rep_stability(&q, &rep, &sigma, 1_000_000)?;
                            counts[verdict_index(s)] += 1;
                        }
                    }
                    None => {
                        sampled_any = true;
                        let mut rng = Lcg::new(opts.seed);
                        for _ in 0..2_000 {
                            let rep = Rep::sample(&q, &dims, p, &mut rng);
                            let s = oracle::rep_stability(&q, &rep, &sigma, 1_000_000)?;
                            counts[verdict_index(s)] += 1;
                        }
                    }
                }
                human.push_str(&format!(
                    "F_{p}: {} stable, {} strictly semistable, {} unstable ({})\n",
                    counts[0],
                    counts[1],
                    counts[2],
                    if exhaustive { "enumerated" } else { "sampled" }
                ));
                fields.push(json!({
                    "p": p,
                    "stable": counts[0],
                    "strictly_semistable": counts[1],
                    "unstable": counts[2],
                    "exhaustive": exhaustive,
                }));
            }
            let mut out = Outcome::new(
                "oracle-stability",
                json!({"sigma": sigma, "beta": beta, "fields": opts.fields}),
                json!({"generic": verdict, "fields": fields}),
                human,
            );
            out.seed = Some(opts.seed);
            if sampled_any {
                out.caveats
                    .push("some fields were sampled rather than enumerated".into());
            }
            Ok(out)
        }
        OracleCommand::Det { pair, opts } => {
            let alpha = parse_sized(&q, &pair.alpha)?;
            let beta = parse_sized(&q, &pair.beta)?;
            let adims = checked_usize_dims(&alpha)?;
            let bdims = checked_usize_dims(&beta)?;
            let mut rows = Vec::new();
            let mut human = String::new();
            for &p in &opts.fields {
                let mut rng = Lcg::new(opts.seed);
                let v = Rep::sample(&q, &adims, p, &mut rng);
                let w = Rep::sample(&q, &bdims, p, &mut rng);
                let det = oracle::schofield_det(&q, &v, &w)?;
                let hom = oracle::hom_dim(&q, &v, &w);
                human.push_str(&format!("F_{p}: det = {det}, hom = {hom}\n"));
                rows.push(json!({"p": p, "det": det, "hom": hom}));
            }
            let mut out = Outcome::new(
                "oracle-det",
                json!({"alpha": alpha, "beta": beta, "fields": opts.fields}),
                json!({"pairs": rows}),
                human,
            );
            out.seed = Some(opts.seed);
            Ok(out)
        }
    }
}

fn checked_usize_dims(v: &IntVector) -> Result<Vec<usize>, CliError> {
    v.to_i64()
        .ok_or_else(|| CliError::Usage("vector too large for the oracle".into()))?
        .into_iter()
        .map(|x| {
            usize::try_from(x).map_err(|_| CliError::Usage("vector must be nonnegative".into()))
        })
        .collect()
}

fn verdict_index(s: quiver_stability::stability::StabilityStatus) -> usize {
    use quiver_stability::stability::StabilityStatus::*;
    match s {
        Stable => 0,
        StrictlySemistable => 1,
        Unstable => 2,
    }
}

fn class_name(c: quiver_stability::homext::RootClass) -> &'static str {
    use quiver_stability::homext::RootClass::*;
    match c {
        RealSchur => "real Schur root",
        ImaginarySchur => "imaginary Schur root",
        NotSchur => "not a Schur root",
    }
}

/// Write to stdout, treating a closed pipe as a normal early exit.
fn emit(text: &str) {
    use std::io::Write;
    let mut out = std::io::stdout().lock();
    if let Err(e) = out.write_all(text.as_bytes()) {
        if e.kind() == std::io::ErrorKind::BrokenPipe {
            std::process::exit(0);
        }
        eprintln!("error: cannot write output: {e}");
        std::process::exit(2);
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let started = Instant::now();
    match run(&cli) {
        Ok(out) => {
            let timing = cli.timing.then(|| started.elapsed().as_millis());
            if cli.json {
                let envelope = Envelope {
                    schema_version: SCHEMA_VERSION,
                    command: out.command,
                    inputs: &out.inputs,
                    results: &out.results,
                    caveats: &out.caveats,
                    seed: out.seed,
                    timing_ms: timing,
                };
                let mut text =
                    serde_json::to_string_pretty(&envelope).expect("report serialization");
                text.push('\n');
                emit(&text);
            } else {
                let mut text = out.human.clone();
                for c in &out.caveats {
                    text.push_str(&format!("note: {c}\n"));
                }
                if let Some(ms) = timing {
                    text.push_str(&format!("elapsed: {ms} ms\n"));
                }
                emit(&text);
            }
            if out.violation {
                ExitCode::from(1)
            } else {
                ExitCode::SUCCESS
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(exit_code_for(&e))
        }
    }
}
