//! The `boole` command line.
//!
//! Every subcommand reads one input file and prints a report of `key = value`
//! lines in a fixed order, with rationals written as `p/q`. Exit codes: `0` on
//! success, `1` when the input is well formed but the answer is negative or
//! out of range (infeasible instance, failed cross-check, …), `2` on usage
//! errors, unreadable files and malformed documents.
//!
//! [`run`] does no I/O beyond reading the named files, so tests drive it
//! directly.

use std::fmt::Display;
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use num_traits::One;

use crate::classic::{bonferroni, boole_frechet, inclusion_exclusion, BonferroniReport};
use crate::hailperin::{build_hailperin_lp, is_feasible, union_bounds, Feasibility};
use crate::instance::{parse_family, parse_instance, AtomDistribution, BooleInstance, SetFamily};
use crate::mining::{apriori, empirical_b, load_matrix, row_distribution};
use crate::numerics::{parse_rat, Rat};
use crate::polytope::{
    affine_dim, correlation_vertices, hull_membership, union_vertices, venn_vertices,
    vertex_count_formula, VPolytope,
};
use crate::reductions::{
    clique_lp, color_gadget, fractional_chromatic, has_k_clique, max_union_via_dual, parse_graph,
    parse_weighted_graph,
};
use crate::{Error, Result};

/// Largest ground set for the polytope subcommands, which list `2^n` vectors.
pub const POLYTOPE_LIMIT: usize = 12;

/// Outcome of one invocation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CommandResult {
    pub exit_code: i32,
    pub stdout: String,
    pub stderr: String,
}

#[derive(Debug, Parser)]
#[command(
    name = "boole",
    version,
    about = "Exact best-possible bounds on the probability of a union of events"
)]
struct Cli {
    /// Re-verify every printed witness and certificate before exiting.
    #[arg(long, global = true)]
    check: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Tight union-probability interval with attaining realizations.
    Bounds { instance: PathBuf },
    /// Feasibility verdict with a realization or a Farkas certificate.
    Feasible { instance: PathBuf },
    /// Inclusion–exclusion, Boole–Fréchet and Bonferroni values.
    Classic {
        instance: PathBuf,
        /// Report only the Bonferroni sum of this depth.
        #[arg(long)]
        k: Option<usize>,
    },
    /// Vertex list, dimension and vertex count of a polytope of the family.
    Vertices {
        family: PathBuf,
        #[arg(long, value_enum)]
        which: Which,
    },
    /// Whether a point lies in the correlation or union polytope.
    Member {
        family: PathBuf,
        #[arg(long, value_enum)]
        which: Which,
        /// Comma-separated coordinates, in the order of the polytope's labels.
        #[arg(long, allow_hyphen_values = true)]
        point: String,
    },
    /// Colouring gadget of a graph, checked against χ_f / n.
    ReduceColor { graph: PathBuf },
    /// Maximum union of the dual-chain instance against 1 − clique LP.
    VerifyDual { graph: PathBuf },
    /// Clique decision by the constant-vector test, checked by brute force.
    Clique {
        graph: PathBuf,
        #[arg(long)]
        k: usize,
    },
    /// Frequent sets and their empirical instance from a 0/1 matrix.
    Mine {
        matrix: PathBuf,
        #[arg(long)]
        eps: String,
        #[arg(long)]
        max_size: usize,
        /// Also report the tight union interval of the empirical instance.
        #[arg(long)]
        bounds: bool,
        /// Skip the first nonblank line of the matrix file.
        #[arg(long)]
        header: bool,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Which {
    #[value(alias = "τ")]
    Tau,
    #[value(alias = "ρ")]
    Rho,
    #[value(alias = "σ")]
    Sigma,
}

impl Which {
    fn name(self) -> &'static str {
        match self {
            Which::Tau => "tau",
            Which::Rho => "rho",
            Which::Sigma => "sigma",
        }
    }
}

/// Ordered `key = value` lines.
#[derive(Debug, Default)]
struct Report {
    lines: Vec<(String, String)>,
}

impl Report {
    fn new(command: &str) -> Self {
        let mut r = Report::default();
        r.put("command", command);
        r
    }

    fn put(&mut self, key: impl Into<String>, value: impl Display) {
        self.lines.push((key.into(), value.to_string()));
    }

    fn render(&self) -> String {
        self.lines
            .iter()
            .map(|(k, v)| format!("{k} = {v}\n"))
            .collect()
    }
}

enum Failure {
    Usage(String),
    Domain(Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        if e.is_input_error() {
            Failure::Usage(e.to_string())
        } else {
            Failure::Domain(e)
        }
    }
}

/// A finished report and whether it counts as success.
struct Outcome {
    report: Report,
    ok: bool,
}

/// Runs one invocation; `argv[0]` is the program name.
pub fn run<I, T>(argv: I) -> CommandResult
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            return if e.use_stderr() {
                CommandResult {
                    exit_code: 2,
                    stdout: String::new(),
                    stderr: text,
                }
            } else {
                CommandResult {
                    exit_code: 0,
                    stdout: text,
                    stderr: String::new(),
                }
            };
        }
    };
    match dispatch(&cli) {
        Ok(outcome) => CommandResult {
            exit_code: if outcome.ok { 0 } else { 1 },
            stdout: outcome.report.render(),
            stderr: String::new(),
        },
        Err(Failure::Usage(msg)) => CommandResult {
            exit_code: 2,
            stdout: String::new(),
            stderr: format!("error: {msg}\n"),
        },
        Err(Failure::Domain(e)) => CommandResult {
            exit_code: 1,
            stdout: String::new(),
            stderr: format!("error: {e}\n"),
        },
    }
}

fn dispatch(cli: &Cli) -> std::result::Result<Outcome, Failure> {
    let check = cli.check;
    match &cli.command {
        Command::Bounds { instance } => bounds(&parse_instance(&read(instance)?)?, check),
        Command::Feasible { instance } => feasible(&parse_instance(&read(instance)?)?, check),
        Command::Classic { instance, k } => classic(&parse_instance(&read(instance)?)?, *k, check),
        Command::Vertices { family, which } => vertices(&parse_family(&read(family)?)?, *which),
        Command::Member {
            family,
            which,
            point,
        } => member(&parse_family(&read(family)?)?, *which, point, check),
        Command::ReduceColor { graph } => reduce_color(&read(graph)?, check),
        Command::VerifyDual { graph } => verify_dual(&read(graph)?),
        Command::Clique { graph, k } => clique(&read(graph)?, *k),
        Command::Mine {
            matrix,
            eps,
            max_size,
            bounds,
            header,
        } => mine(&read(matrix)?, eps, *max_size, *bounds, *header, check),
    }
}

fn read(path: &PathBuf) -> std::result::Result<String, Failure> {
    std::fs::read_to_string(path)
        .map_err(|e| Failure::Usage(format!("cannot read {}: {e}", path.display())))
}

fn format_atoms(x: &AtomDistribution) -> String {
    x.support()
        .map(|(t, w)| format!("{t}:{w}"))
        .collect::<Vec<_>>()
        .join(" ")
}

fn format_values(values: &[Rat]) -> String {
    values
        .iter()
        .map(ToString::to_string)
        .collect::<Vec<_>>()
        .join(" ")
}

fn describe(r: &mut Report, inst: &BooleInstance) {
    r.put("n", inst.n());
    r.put("constraints", inst.family().len());
    for (s, b) in inst.iter() {
        r.put(format!("b{s}"), b);
    }
}

fn verdict(flag: bool) -> &'static str {
    if flag {
        "ok"
    } else {
        "FAILED"
    }
}

fn bounds(inst: &BooleInstance, check: bool) -> std::result::Result<Outcome, Failure> {
    let result = union_bounds(inst)?;
    let mut r = Report::new("bounds");
    describe(&mut r, inst);
    r.put("lower", &result.interval.lo);
    r.put("upper", &result.interval.hi);
    r.put("interval", &result.interval);
    r.put("witness_lower", format_atoms(&result.min_witness));
    r.put("witness_upper", format_atoms(&result.max_witness));
    let mut ok = true;
    if check {
        ok = result.min_witness.realizes(inst)
            && result.max_witness.realizes(inst)
            && result.min_witness.union_probability() == result.interval.lo
            && result.max_witness.union_probability() == result.interval.hi;
        r.put("check", verdict(ok));
    }
    Ok(Outcome { report: r, ok })
}

fn feasible(inst: &BooleInstance, check: bool) -> std::result::Result<Outcome, Failure> {
    let mut r = Report::new("feasible");
    describe(&mut r, inst);
    let verdict_ok = match is_feasible(inst) {
        Feasibility::Feasible(x) => {
            r.put("feasible", true);
            r.put("witness", format_atoms(&x));
            if check {
                r.put("check", verdict(x.realizes(inst)));
            }
            !check || x.realizes(inst)
        }
        Feasibility::Infeasible(cert) => {
            r.put("feasible", false);
            r.put("certificate_rows", "normalization then family order");
            r.put("certificate", format_values(&cert));
            if check {
                let valid = build_hailperin_lp(inst).verify_farkas(&cert);
                r.put("check", verdict(valid));
            }
            false
        }
    };
    Ok(Outcome {
        report: r,
        ok: verdict_ok,
    })
}

fn classic(
    inst: &BooleInstance,
    k: Option<usize>,
    check: bool,
) -> std::result::Result<Outcome, Failure> {
    let mut r = Report::new("classic");
    describe(&mut r, inst);
    let tight = union_bounds(inst)?.interval;
    r.put("tight", &tight);
    let bf = boole_frechet(inst).ok();
    match &bf {
        Some(bf) => r.put("boole_frechet", bf),
        None => r.put("boole_frechet", "unavailable"),
    }
    match inclusion_exclusion(inst) {
        Ok(v) => r.put("inclusion_exclusion", v),
        Err(_) => r.put("inclusion_exclusion", "unavailable"),
    }
    let terms: Vec<(usize, Rat)> = match k {
        Some(k) => vec![(k, bonferroni(inst, k)?)],
        None => BonferroniReport::new(inst)
            .terms
            .into_iter()
            .map(|t| (t.k, t.value))
            .collect(),
    };
    let mut sound = true;
    for (k, value) in &terms {
        let direction = crate::classic::BoundDirection::for_depth(*k);
        r.put(format!("bonferroni_{k}"), format!("{value} ({direction})"));
        sound &= match direction {
            crate::classic::BoundDirection::Upper => *value >= tight.hi,
            crate::classic::BoundDirection::Lower => *value <= tight.lo,
        };
    }
    let mut ok = true;
    if check {
        ok = sound && bf.is_none_or(|bf| bf.contains_interval(&tight));
        r.put("check", verdict(ok));
    }
    Ok(Outcome { report: r, ok })
}

fn polytope_of(family: &SetFamily, which: Which) -> std::result::Result<VPolytope, Failure> {
    if family.n() > POLYTOPE_LIMIT {
        return Err(Error::GuardExceeded {
            what: "ground set for vertex listing",
            actual: family.n(),
            limit: POLYTOPE_LIMIT,
        }
        .into());
    }
    Ok(match which {
        Which::Tau => venn_vertices(family),
        Which::Rho => correlation_vertices(family),
        Which::Sigma => union_vertices(family),
    })
}

fn vertices(family: &SetFamily, which: Which) -> std::result::Result<Outcome, Failure> {
    let p = polytope_of(family, which)?;
    let counts = vertex_count_formula(family);
    let n = family.n();
    let (expected_count, expected_dim) = match which {
        Which::Tau => (1usize << n, (1usize << n) - 1),
        Which::Rho => (counts.rho, family.len()),
        Which::Sigma => (
            counts.sigma,
            family.len() + usize::from(!family.is_complete()),
        ),
    };
    let dim = affine_dim(&p)?;
    let mut r = Report::new("vertices");
    r.put("polytope", which.name());
    r.put("n", n);
    r.put("family_size", family.len());
    r.put("coordinates", p.coord_labels.join(" "));
    r.put("vertex_count", p.vertices.len());
    r.put("formula_count", expected_count);
    r.put("dimension", dim);
    r.put("formula_dimension", expected_dim);
    r.put("zero_one", p.is_zero_one());
    for (i, v) in p.vertices.iter().enumerate() {
        r.put(format!("vertex_{i}"), format_values(v));
    }
    let ok = p.vertices.len() == expected_count && dim == expected_dim && p.is_zero_one();
    r.put("consistent", verdict(ok));
    Ok(Outcome { report: r, ok })
}

fn member(
    family: &SetFamily,
    which: Which,
    point: &str,
    check: bool,
) -> std::result::Result<Outcome, Failure> {
    if which == Which::Tau {
        return Err(Failure::Usage(
            "membership is offered for rho and sigma only".to_string(),
        ));
    }
    let coords = point
        .split(',')
        .map(|t| parse_rat(t.trim()))
        .collect::<Result<Vec<_>>>()?;
    let p = polytope_of(family, which)?;
    let inside = hull_membership(&p, &coords)?;
    let mut r = Report::new("member");
    r.put("polytope", which.name());
    r.put("coordinates", p.coord_labels.join(" "));
    r.put("point", format_values(&coords));
    r.put("member", inside);
    let mut ok = true;
    if check {
        // The same question through the atom program.
        let probs = coords[..family.len()].to_vec();
        let agrees = match BooleInstance::new(family.clone(), probs) {
            Ok(inst) => match which {
                Which::Rho => is_feasible(&inst).is_feasible() == inside,
                _ => {
                    let u = Rat::one() - &coords[family.len()];
                    crate::hailperin::realize_at(&inst, &u).is_ok() == inside
                }
            },
            Err(_) => !inside,
        };
        ok = agrees;
        r.put("check", verdict(ok));
    }
    Ok(Outcome { report: r, ok })
}

fn reduce_color(text: &str, check: bool) -> std::result::Result<Outcome, Failure> {
    let graph = parse_graph(text)?;
    if graph.n() == 0 {
        return Err(Error::GraphTooSmall("one vertex").into());
    }
    let inst = color_gadget(&graph);
    let chi = fractional_chromatic(&graph)?;
    let result = union_bounds(&inst)?;
    let n = Rat::from_integer((graph.n() as i64).into());
    let scaled = &chi / &n;
    let equal = result.interval.lo == scaled;
    let mut r = Report::new("reduce-color");
    r.put("n", graph.n());
    r.put("edges", graph.edges().len());
    r.put("constraints", inst.family().len());
    r.put("min_union", &result.interval.lo);
    r.put("max_union", &result.interval.hi);
    r.put("chi_f", &chi);
    r.put("chi_f_over_n", &scaled);
    r.put("witness_lower", format_atoms(&result.min_witness));
    r.put("identity", if equal { "EQUAL" } else { "DIFFERENT" });
    let mut ok = equal;
    if check {
        let valid = result.min_witness.realizes(&inst)
            && result.min_witness.union_probability() == result.interval.lo;
        r.put("check", verdict(valid));
        ok &= valid;
    }
    Ok(Outcome { report: r, ok })
}

fn verify_dual(text: &str) -> std::result::Result<Outcome, Failure> {
    let weighted = parse_weighted_graph(text)?;
    let max_union = max_union_via_dual(&weighted)?;
    let clique = clique_lp(&weighted)?;
    let complement = Rat::one() - &clique;
    let equal = max_union == complement;
    let mut r = Report::new("verify-dual");
    r.put("n", weighted.graph().n());
    r.put("edges", weighted.graph().edges().len());
    r.put("max_union", &max_union);
    r.put("clique_lp", &clique);
    r.put("one_minus_clique_lp", &complement);
    r.put("identity", if equal { "EQUAL" } else { "DIFFERENT" });
    Ok(Outcome {
        report: r,
        ok: equal,
    })
}

fn clique(text: &str, k: usize) -> std::result::Result<Outcome, Failure> {
    let graph = parse_graph(text)?;
    let decided = has_k_clique(&graph, k)?;
    let omega = graph.clique_number_brute_force()?;
    let agree = decided == (omega >= k);
    let mut r = Report::new("clique");
    r.put("n", graph.n());
    r.put("edges", graph.edges().len());
    r.put("k", k);
    r.put("kappa", Rat::new(2.into(), ((k - 1) as i64).into()));
    r.put("has_clique", decided);
    r.put("clique_number", omega);
    r.put("brute_force", omega >= k);
    r.put("agreement", if agree { "AGREE" } else { "DISAGREE" });
    Ok(Outcome {
        report: r,
        ok: agree,
    })
}

fn mine(
    text: &str,
    eps: &str,
    max_size: usize,
    want_bounds: bool,
    header: bool,
    check: bool,
) -> std::result::Result<Outcome, Failure> {
    let eps = parse_rat(eps)?;
    let data = load_matrix(text, header)?;
    let sets = apriori(&data, &eps, max_size)?;
    let family = SetFamily::new(data.cols(), sets)?;
    let inst = empirical_b(&data, &family)?;
    let mut r = Report::new("mine");
    r.put("rows", data.num_rows());
    r.put("cols", data.cols());
    r.put("eps", &eps);
    r.put("max_size", max_size);
    r.put("frequent_sets", family.len());
    for (s, b) in inst.iter() {
        r.put(format!("b{s}"), b);
    }
    let mut ok = true;
    if want_bounds {
        let result = union_bounds(&inst)?;
        r.put("interval", &result.interval);
        r.put("witness_lower", format_atoms(&result.min_witness));
        r.put("witness_upper", format_atoms(&result.max_witness));
        if check {
            ok &= result.min_witness.realizes(&inst) && result.max_witness.realizes(&inst);
        }
    }
    if check {
        ok &= row_distribution(&data).realizes(&inst);
        r.put("check", verdict(ok));
    }
    Ok(Outcome { report: r, ok })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn write_temp(name: &str, body: &str) -> PathBuf {
        let dir = std::env::temp_dir().join(format!("boole-cli-{}", std::process::id()));
        std::fs::create_dir_all(&dir).unwrap();
        let path = dir.join(name);
        std::fs::write(&path, body).unwrap();
        path
    }

    fn run_on(args: &[&str]) -> CommandResult {
        run(std::iter::once("boole").chain(args.iter().copied()))
    }

    #[test]
    fn usage_errors_exit_two() {
        assert_eq!(run_on(&[]).exit_code, 2);
        assert_eq!(run_on(&["bounds"]).exit_code, 2);
        assert_eq!(run_on(&["bounds", "/nonexistent/file.json"]).exit_code, 2);
        let bad = write_temp("malformed.json", "{\"n\": 2");
        assert_eq!(run_on(&["bounds", bad.to_str().unwrap()]).exit_code, 2);
        assert_eq!(run_on(&["--help"]).exit_code, 0);
    }

    #[test]
    fn bounds_report() {
        let path = write_temp(
            "ex1.json",
            r#"{"n": 2, "constraints": [{"set": [1], "p": "1/2"}, {"set": [2], "p": "1/2"}, {"set": [1, 2], "p": "1/4"}]}"#,
        );
        let out = run_on(&["bounds", path.to_str().unwrap(), "--check"]);
        assert_eq!(out.exit_code, 0);
        assert!(out.stdout.contains("interval = [3/4, 3/4]\n"));
        assert!(out.stdout.contains("check = ok\n"));
    }

    #[test]
    fn infeasible_exits_one_with_certificate() {
        let path = write_temp(
            "bad.json",
            r#"{"n": 2, "constraints": [{"set": [1], "p": "1/10"}, {"set": [1, 2], "p": "1/2"}]}"#,
        );
        let out = run_on(&["feasible", path.to_str().unwrap(), "--check"]);
        assert_eq!(out.exit_code, 1);
        assert!(out.stdout.contains("feasible = false\n"));
        assert!(out.stdout.contains("certificate = "));
        assert!(out.stdout.contains("check = ok\n"));
        assert_eq!(run_on(&["bounds", path.to_str().unwrap()]).exit_code, 1);
    }

    #[test]
    fn greek_aliases() {
        let path = write_temp("fam.json", r#"{"n": 2, "sets": [[1, 2]]}"#);
        let a = run_on(&["vertices", path.to_str().unwrap(), "--which", "σ"]);
        let b = run_on(&["vertices", path.to_str().unwrap(), "--which", "sigma"]);
        assert_eq!(a, b);
        assert_eq!(a.exit_code, 0);
        assert!(a.stdout.contains("vertex_count = 3\n"));
    }
}
