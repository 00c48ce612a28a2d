//! Command-line surface. Every subcommand maps onto one library call,
//! reads ideals from files or stdin in the line-oriented text format, and
//! can emit canonical JSON (`--json`: sorted keys, sorted prime lists).
//! Exit codes: 0 ok, 1 a verification or comparison failed, 2 bad input.

use std::fmt::Write as _;
use std::io::Read;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand};
use serde_json::{json, Value};

use crate::budget::Budget;
use crate::check;
use crate::depth::{
    cycle_ideal, depth_cycle_formula, depth_oracle_over, depth_path_formula,
    depth_unicyclic_formula, path_ideal, unicyclic_ideal, HomologyField,
};
use crate::error::{Error, Result};
use crate::format;
use crate::groebner;
use crate::ideal::MonomialIdeal;
use crate::primes;
use crate::sequences::{self, Engine, SequencePlan};
use crate::transforms;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Status {
    Ok,
    VerificationFailed,
    InputError,
}

/// What a command run produced: a process status, a machine-readable
/// payload, and the human text.
#[derive(Debug)]
pub struct CommandResult {
    pub status: Status,
    pub payload: Value,
    pub text: String,
    pub emit_json: bool,
}

impl CommandResult {
    pub fn exit_code(&self) -> i32 {
        match self.status {
            Status::Ok => 0,
            Status::VerificationFailed => 1,
            Status::InputError => 2,
        }
    }

    /// The bytes to print on stdout.
    pub fn rendered(&self) -> String {
        if self.emit_json {
            let status = match self.status {
                Status::Ok => "ok",
                Status::VerificationFailed => "verification_failed",
                Status::InputError => "input_error",
            };
            json!({"status": status, "payload": self.payload}).to_string()
        } else {
            self.text.clone()
        }
    }
}

#[derive(Parser)]
#[command(
    name = "monoideal",
    version,
    about = "Exact computations with monomial ideals: associated primes, initial ideals of \
             linear sums, initially regular sequences, and depth of graph edge ideals",
    after_help = "Ideal files are line-oriented: `vars x1 x2 ...` then `gens x1*x2 ...`; \
                  `#` starts a comment; omit FILE to read stdin. Budgets come from \
                  MONOIDEAL_BUDGET (see README)."
)]
struct Cli {
    /// Emit canonical JSON (sorted keys, sorted prime lists)
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print the edge ideal of a graph family in the ideal text format
    #[command(subcommand)]
    Gen(Family),
    /// Associated primes of R/I, by polarization (default) or by the
    /// brute-force witness scan; --compare runs both routes
    Ass {
        file: Option<PathBuf>,
        /// Use the witness-scan route (monomials c with (I : c) prime)
        #[arg(long)]
        bruteforce: bool,
        /// Run both routes and fail on disagreement
        #[arg(long, conflicts_with = "bruteforce")]
        compare: bool,
    },
    /// Minimal primes of R/I: the minimal variable covers of the
    /// generator supports
    MinPrimes { file: Option<PathBuf> },
    /// Star neighbors N*(w): variables sharing a generator with w in which
    /// the degree of w stays below its maximum
    Star {
        file: Option<PathBuf>,
        /// Report a single variable instead of all of them
        #[arg(short = 'w', long)]
        var: Option<String>,
    },
    /// Polarization: the squarefree ideal obtained by splitting x^a into a
    /// copies of x, with the variable map
    Polarize { file: Option<PathBuf> },
    /// Initial ideal ini(I, f) for one linear sum f, by the closed-form
    /// transform (binomial substitution / trinomial formula), the exact
    /// Buchberger oracle, or both with a consistency check
    Ini {
        file: Option<PathBuf>,
        /// Linear sum, e.g. "x1+x5+x2"; the listed order fixes the
        /// transform roles (a, b, c)
        #[arg(short = 'f', long)]
        form: String,
        /// Lex order, highest first, e.g. "x1,x5,x2"; unlisted variables
        /// follow in descending index order (default: the form's variables
        /// first)
        #[arg(long)]
        order: Option<String>,
        #[arg(long, default_value = "both")]
        engine: String,
    },
    /// Initially regular sequences: construction and step-by-step
    /// verification certifying depth lower bounds
    #[command(subcommand)]
    Seq(SeqAction),
    /// Depth of R/I: closed formulas for cycles (ceil((n-1)/3)), paths
    /// (ceil(p/3)), and pendant-path unicyclic graphs (three-branch
    /// formula), or the homological oracle on any monomial ideal
    Depth(DepthArgs),
    /// Run the whole verification battery (eight criteria) and print one
    /// pass/fail line per criterion
    Check {
        /// Seed for the randomized suites
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
}

#[derive(Subcommand)]
enum Family {
    /// Cycle on n vertices: edges x1*x2, ..., x1*xn
    Cycle { n: usize },
    /// Path on p vertices (p = 1 gives the zero ideal)
    Path { p: usize },
    /// Cycle on n vertices with an m-vertex path hung off x2
    Gnm { n: usize, m: usize },
}

#[derive(Subcommand)]
enum SeqAction {
    /// The cycle sequence plan: trinomial steps, plus one long form when
    /// the length is 2 mod 3 (giving ceil((n-1)/3) forms in total)
    Cycle { n: usize },
    /// The pendant-path plan for the (3t+2)-cycle with a 2-vertex path:
    /// the cycle forms followed by y2+y1
    Gnm2 { t: usize },
    /// Verify a plan step by step: each form must avoid every associated
    /// prime of the current initial ideal
    Verify {
        file: Option<PathBuf>,
        /// Plan JSON as produced by `seq cycle` / `seq gnm2`
        #[arg(long)]
        plan: PathBuf,
        #[arg(long, default_value = "both")]
        engine: String,
        /// Lex completion override, e.g. "x1,x5,x2" (default: the plan's
        /// canonical completion)
        #[arg(long)]
        order: Option<String>,
    },
}

#[derive(Args)]
#[command(args_conflicts_with_subcommands = true)]
struct DepthArgs {
    #[command(subcommand)]
    family: Option<DepthFamily>,
    /// Ideal file (or stdin); file input always uses the oracle
    file: Option<PathBuf>,
    #[command(flatten)]
    flags: DepthFlags,
}

#[derive(Args, Clone, Copy)]
struct DepthFlags {
    /// Use the homological oracle (polarize, scan multigraded Betti
    /// numbers, take depth = n - pd)
    #[arg(long)]
    oracle: bool,
    /// Run formula and oracle; exit nonzero if they disagree
    #[arg(long)]
    compare: bool,
    /// Homology coefficients for the oracle: rational | gf2
    #[arg(long, default_value = "rational", value_parser = parse_field)]
    field: HomologyField,
}

fn parse_field(s: &str) -> std::result::Result<HomologyField, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

#[derive(Subcommand)]
enum DepthFamily {
    /// depth = ceil((n-1)/3)
    Cycle {
        n: usize,
        #[command(flatten)]
        flags: DepthFlags,
    },
    /// depth = ceil(p/3)
    Path {
        p: usize,
        #[command(flatten)]
        flags: DepthFlags,
    },
    /// depth by the three-branch formula split on m mod 3
    Gnm {
        n: usize,
        m: usize,
        #[command(flatten)]
        flags: DepthFlags,
    },
}

/// Entry point used by the binary and by tests.
pub fn run<I, S>(argv: I) -> CommandResult
where
    I: IntoIterator<Item = S>,
    S: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            let text = e.render().to_string();
            let status = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => Status::Ok,
                _ => Status::InputError,
            };
            return CommandResult {
                status,
                payload: json!({"message": text}),
                text,
                emit_json: false,
            };
        }
    };
    let emit_json = cli.json;
    match execute(cli.command) {
        Ok((status, payload, text)) => CommandResult {
            status,
            payload,
            text,
            emit_json,
        },
        Err(e) => {
            let status = match e {
                Error::OracleMismatch(_) | Error::NoDecomposition(_) => {
                    Status::VerificationFailed
                }
                _ => Status::InputError,
            };
            CommandResult {
                status,
                payload: json!({"error": e.to_string()}),
                text: format!("error: {e}\n"),
                emit_json,
            }
        }
    }
}

fn read_ideal(path: Option<&Path>) -> Result<MonomialIdeal> {
    let text = match path {
        Some(p) if p.as_os_str() != "-" => std::fs::read_to_string(p)
            .map_err(|e| Error::Parse(format!("{}: {e}", p.display())))?,
        _ => {
            let mut buf = String::new();
            std::io::stdin()
                .read_to_string(&mut buf)
                .map_err(|e| Error::Parse(format!("stdin: {e}")))?;
            buf
        }
    };
    format::parse_ideal(&text)
}

fn primes_payload(ideal: &MonomialIdeal, primes: &[primes::MonomialPrime]) -> Value {
    Value::Array(
        primes
            .iter()
            .map(|p| json!(p.names(ideal.ring())))
            .collect(),
    )
}

fn primes_text(ideal: &MonomialIdeal, primes: &[primes::MonomialPrime]) -> String {
    let mut out = String::new();
    for p in primes {
        let _ = writeln!(out, "{}", p.display(ideal.ring()));
    }
    out
}

fn execute(command: Command) -> Result<(Status, Value, String)> {
    let budget = Budget::from_env()?;
    match command {
        Command::Gen(family) => {
            let ideal = match family {
                Family::Cycle { n } => cycle_ideal(n)?,
                Family::Path { p } => path_ideal(p)?,
                Family::Gnm { n, m } => unicyclic_ideal(n, m)?,
            };
            Ok((
                Status::Ok,
                format::ideal_to_json(&ideal),
                format::write_ideal(&ideal),
            ))
        }
        Command::Ass {
            file,
            bruteforce,
            compare,
        } => {
            let ideal = read_ideal(file.as_deref())?;
            if compare {
                let polar = primes::associated_primes(&ideal)?;
                let brute = primes::associated_primes_bruteforce(&ideal, &budget)?;
                let agree = polar == brute;
                let payload = json!({
                    "primes": primes_payload(&ideal, &polar),
                    "bruteforce": primes_payload(&ideal, &brute),
                    "agree": agree,
                });
                let mut text = primes_text(&ideal, &polar);
                let status = if agree {
                    text.push_str("# both routes agree\n");
                    Status::Ok
                } else {
                    text.push_str("# ROUTES DISAGREE\n");
                    Status::VerificationFailed
                };
                Ok((status, payload, text))
            } else {
                let primes = if bruteforce {
                    primes::associated_primes_bruteforce(&ideal, &budget)?
                } else {
                    primes::associated_primes(&ideal)?
                };
                let minimal = primes::minimal_primes(&ideal)?;
                let mut decompositions = Vec::new();
                let mut text = primes_text(&ideal, &primes);
                for q in primes.iter().filter(|q| !minimal.contains(q)) {
                    let d = primes::embedded_decomposition(&ideal, q)?;
                    let ring = ideal.ring();
                    let _ = writeln!(
                        text,
                        "# embedded {} = {} + {{{}}}",
                        q.display(ring),
                        d.minimal_prime.display(ring),
                        d.extras
                            .iter()
                            .map(|e| ring.name(e.z))
                            .collect::<Vec<_>>()
                            .join(", ")
                    );
                    decompositions.push(json!({
                        "prime": q.names(ring),
                        "min_prime": d.minimal_prime.names(ring),
                        "extras": d.extras.iter().map(|e| json!({
                            "z": ring.name(e.z),
                            "witness": ring.name(e.witness),
                        })).collect::<Vec<_>>(),
                    }));
                }
                Ok((
                    Status::Ok,
                    json!({
                        "primes": primes_payload(&ideal, &primes),
                        "embedded": decompositions,
                    }),
                    text,
                ))
            }
        }
        Command::MinPrimes { file } => {
            let ideal = read_ideal(file.as_deref())?;
            let primes = primes::minimal_primes(&ideal)?;
            Ok((
                Status::Ok,
                json!({"primes": primes_payload(&ideal, &primes)}),
                primes_text(&ideal, &primes),
            ))
        }
        Command::Star { file, var } => {
            let ideal = read_ideal(file.as_deref())?;
            let vars: Vec<usize> = match var {
                Some(name) => vec![ideal.ring().index_or_err(&name)?],
                None => (0..ideal.nvars()).collect(),
            };
            let mut map = serde_json::Map::new();
            let mut text = String::new();
            for w in vars {
                let neighbors = primes::star_neighbors(&ideal, w);
                let names: Vec<&str> =
                    neighbors.iter().map(|&z| ideal.ring().name(z)).collect();
                if !names.is_empty() {
                    let _ = writeln!(text, "{}: {}", ideal.ring().name(w), names.join(" "));
                }
                map.insert(ideal.ring().name(w).to_string(), json!(names));
            }
            if text.is_empty() {
                text.push_str("# all star-neighbor sets are empty\n");
            }
            Ok((Status::Ok, json!({"star_neighbors": map}), text))
        }
        Command::Polarize { file } => {
            let ideal = read_ideal(file.as_deref())?;
            let (polarized, map) = primes::polarize(&ideal)?;
            let copies: Vec<Value> = (0..ideal.nvars())
                .map(|v| {
                    json!({
                        "source": ideal.ring().name(v),
                        "copies": map.copies(v)
                            .iter()
                            .map(|&t| map.target().name(t))
                            .collect::<Vec<_>>(),
                    })
                })
                .collect();
            Ok((
                Status::Ok,
                json!({"ideal": format::ideal_to_json(&polarized), "map": copies}),
                format::write_ideal(&polarized),
            ))
        }
        Command::Ini {
            file,
            form,
            order,
            engine,
        } => {
            let ideal = read_ideal(file.as_deref())?;
            let form = format::parse_linear_form(ideal.ring(), &form)?;
            let engine: Engine = engine.parse()?;
            let order = match order {
                Some(spec) => format::parse_term_order(ideal.ring(), &spec)?,
                None => {
                    let names: Vec<&str> =
                        form.vars().iter().map(|&v| ideal.ring().name(v)).collect();
                    format::parse_term_order(ideal.ring(), &names.join(","))?
                }
            };
            let closed_form = |i: &MonomialIdeal| -> Result<MonomialIdeal> {
                match *form.vars() {
                    [a, b] => transforms::ini_binomial(i, a, b),
                    [a, b, c] => transforms::ini_trinomial(i, a, b, c),
                    _ => Err(Error::PreconditionViolated(
                        "no closed form for linear sums with 4 or more variables; \
                         use --engine buchberger"
                            .into(),
                    )),
                }
            };
            let (result, note) = match engine {
                Engine::Buchberger => (
                    groebner::initial_ideal(&ideal, Some(&form), &order, &budget)?,
                    None,
                ),
                Engine::Transform => (closed_form(&ideal)?, None),
                Engine::Both => {
                    let oracle = groebner::initial_ideal(&ideal, Some(&form), &order, &budget)?;
                    match closed_form(&ideal) {
                        Ok(transformed) if transformed == oracle => {
                            (oracle, Some("engines agree".to_string()))
                        }
                        Ok(transformed) => {
                            let payload = json!({
                                "transform": format::ideal_to_json(&transformed),
                                "buchberger": format::ideal_to_json(&oracle),
                            });
                            return Ok((
                                Status::VerificationFailed,
                                payload,
                                format!(
                                    "# ENGINES DISAGREE\n# transform: {transformed}\n# buchberger: {oracle}\n"
                                ),
                            ));
                        }
                        Err(Error::PreconditionViolated(why)) => {
                            (oracle, Some(format!("buchberger only ({why})")))
                        }
                        Err(e) => return Err(e),
                    }
                }
            };
            let mut text = String::new();
            if let Some(note) = &note {
                let _ = writeln!(text, "# {note}");
            }
            text.push_str(&format::write_ideal(&result));
            Ok((
                Status::Ok,
                json!({"ideal": format::ideal_to_json(&result), "note": note}),
                text,
            ))
        }
        Command::Seq(action) => run_seq(action, &budget),
        Command::Depth(args) => run_depth(args, &budget),
        Command::Check { seed } => {
            let reports = check::run_all(seed, &budget);
            let all_passed = reports.iter().all(|r| r.passed);
            let mut text = String::new();
            for r in &reports {
                let _ = writeln!(text, "{r}");
            }
            let _ = writeln!(
                text,
                "{}: {}/{} criteria passed",
                if all_passed { "OK" } else { "FAILED" },
                reports.iter().filter(|r| r.passed).count(),
                reports.len()
            );
            let payload = json!({
                "reports": reports
                    .iter()
                    .map(|r| json!({"name": r.name, "passed": r.passed, "details": r.details}))
                    .collect::<Vec<_>>(),
            });
            let status = if all_passed {
                Status::Ok
            } else {
                Status::VerificationFailed
            };
            Ok((status, payload, text))
        }
    }
}

fn run_seq(action: SeqAction, budget: &Budget) -> Result<(Status, Value, String)> {
    match action {
        SeqAction::Cycle { n } => {
            let plan = sequences::cycle_sequence(n)?;
            let payload = plan.to_json();
            let text = serde_json::to_string_pretty(&payload).expect("serializable") + "\n";
            Ok((Status::Ok, payload, text))
        }
        SeqAction::Gnm2 { t } => {
            let plan = sequences::unicyclic_sequence(t)?;
            let payload = plan.to_json();
            let text = serde_json::to_string_pretty(&payload).expect("serializable") + "\n";
            Ok((Status::Ok, payload, text))
        }
        SeqAction::Verify {
            file,
            plan,
            engine,
            order,
        } => {
            let ideal = read_ideal(file.as_deref())?;
            let plan_text = std::fs::read_to_string(&plan)
                .map_err(|e| Error::Parse(format!("{}: {e}", plan.display())))?;
            let plan_value: Value = serde_json::from_str(&plan_text)
                .map_err(|e| Error::Parse(format!("plan JSON: {e}")))?;
            let plan = SequencePlan::from_json(&plan_value)?;
            let engine: Engine = engine.parse()?;
            let order = match order {
                Some(spec) => format::parse_term_order(plan.ring(), &spec)?,
                None => plan.default_order(),
            };
            let trace =
                sequences::verify_initially_regular(&ideal, &plan, engine, &order, budget)?;
            let mut text = String::new();
            let mut steps = Vec::new();
            for (i, step) in trace.steps.iter().enumerate() {
                let _ = writeln!(
                    text,
                    "step {}: f = {} is {} on R/I_{} ({} associated primes)",
                    i + 1,
                    step.form.display(plan.ring()),
                    if step.regular { "regular" } else { "NOT regular" },
                    i + 1,
                    step.ass_count
                );
                steps.push(json!({
                    "form": step.form.display(plan.ring()).to_string(),
                    "regular": step.regular,
                    "ass_count": step.ass_count,
                }));
            }
            let _ = writeln!(
                text,
                "verified length {} => depth >= {}",
                trace.verified_length, trace.verified_length
            );
            let payload = json!({
                "steps": steps,
                "verified_length": trace.verified_length,
            });
            Ok((Status::Ok, payload, text))
        }
    }
}

fn run_depth(args: DepthArgs, budget: &Budget) -> Result<(Status, Value, String)> {
    let (ideal, formula, flags) = match args.family {
        Some(DepthFamily::Cycle { n, flags }) => {
            (cycle_ideal(n)?, Some(depth_cycle_formula(n)?), flags)
        }
        Some(DepthFamily::Path { p, flags }) => {
            (path_ideal(p)?, Some(depth_path_formula(p)?), flags)
        }
        Some(DepthFamily::Gnm { n, m, flags }) => (
            unicyclic_ideal(n, m)?,
            Some(depth_unicyclic_formula(n, m)?),
            flags,
        ),
        None => (read_ideal(args.file.as_deref())?, None, args.flags),
    };

    let want_oracle = flags.oracle || flags.compare || formula.is_none();
    let oracle = if want_oracle {
        Some(depth_oracle_over(&ideal, flags.field, budget)?)
    } else {
        None
    };

    if flags.compare {
        let formula = formula.ok_or_else(|| {
            Error::InvalidArgument("--compare needs a graph family with a formula".into())
        })?;
        let oracle = oracle.expect("compare forces the oracle");
        let agree = formula == oracle.value;
        let payload = json!({
            "formula": formula,
            "oracle": oracle.value,
            "pd": oracle.pd,
            "agree": agree,
        });
        let text = format!(
            "formula = {formula}\noracle = {}\n{}\n",
            oracle.value,
            if agree { "equal" } else { "MISMATCH" }
        );
        let status = if agree {
            Status::Ok
        } else {
            Status::VerificationFailed
        };
        return Ok((status, payload, text));
    }

    let (value, method, pd, witness) = match (&oracle, formula) {
        (Some(o), _) => (o.value, "oracle", o.pd, o.witness.clone()),
        (None, Some(f)) => (f, "formula", None, None),
        (None, None) => unreachable!("oracle is forced when no formula exists"),
    };
    let payload = json!({
        "depth": value,
        "method": method,
        "pd": pd,
        "witness": witness,
    });
    Ok((Status::Ok, payload, format!("{value}\n")))
}
