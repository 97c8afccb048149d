mod input;
mod tables;

use clap::{Parser, Subcommand};
use distchrom::{
    chi2_closed_general, chi2_closed_regular, chi3_closed_regular, hypercube_t45_bound,
    lee_chi2_theorem_bound, lp_minor_bound, minor_polynomial, ngo_bounds, alpha_t_exact,
    chi_t_exact, code_min_distance, is_perfect_code, perfect_code_exists, w_prime_membership,
    walk_diagonal, BoundMethod, BoundReport, Error, GeneralRatioOutcome, LeeCode, RatioCertificate,
    Result, SearchBudget,
};
use serde_json::{json, Value};
use std::path::PathBuf;
use std::process::ExitCode;

/// Environment variable supplying the default oracle budget in seconds.
const BUDGET_ENV: &str = "DISTCHROM_BUDGET";

#[derive(Parser)]
#[command(
    name = "distchrom",
    about = "Spectral lower bounds on distance-t chromatic numbers of hypercube and Lee graphs",
    version
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Compute one bound on one graph and print a JSON report.
    Bound {
        /// Graph spec: qn:<n>, lee:<n>:<q>, cycle:<q> or file:<path>
        graph: String,
        /// Distance parameter t
        #[arg(long)]
        t: u32,
        /// One of: closed_t2_general, closed_t2_regular,
        /// closed_t3_regular, ngo_lower, ngo_upper, hypercube_t45,
        /// lp_general, lp_minor, lee_theorem
        #[arg(long)]
        method: String,
        /// Human-readable JSON
        #[arg(long)]
        pretty: bool,
        /// Write the solved LP in a plain rows/columns listing
        /// (lp_general and lp_minor only)
        #[arg(long, value_name = "PATH")]
        dump_lp: Option<PathBuf>,
    },
    /// Reproduce a published comparison table as CSV on stdout.
    Table {
        /// One of 1a, 1b, 1c, 1d, 2a, 2b, 2c, 2d
        id: String,
        /// Per-cell oracle budget in seconds
        #[arg(long)]
        budget: Option<f64>,
    },
    /// Lee-code predicates and validation.
    Lee {
        #[command(subcommand)]
        sub: LeeCmd,
    },
    /// Exact brute-force chromatic or independence numbers.
    Oracle {
        /// Graph spec: qn:<n>, lee:<n>:<q>, cycle:<q> or file:<path>
        graph: String,
        /// chi or alpha
        which: String,
        #[arg(long)]
        t: u32,
        /// Budget in seconds
        #[arg(long)]
        budget: Option<f64>,
        #[arg(long)]
        pretty: bool,
    },
}

#[derive(Subcommand)]
enum LeeCmd {
    /// Is -1 an eigenvalue of G(n,q)?
    Wprime {
        n: u32,
        q: u32,
        #[arg(long)]
        pretty: bool,
    },
    /// Does a perfect minimum-distance-3 Lee code of length n over A_q exist?
    Perfect {
        n: u32,
        q: u32,
        #[arg(long)]
        pretty: bool,
    },
    /// Validate a code file: min distance and perfection verdict.
    Validate {
        file: PathBuf,
        #[arg(long)]
        pretty: bool,
    },
}

fn default_budget(cli_flag: Option<f64>) -> f64 {
    cli_flag
        .or_else(|| std::env::var(BUDGET_ENV).ok().and_then(|s| s.parse().ok()))
        .unwrap_or(distchrom::DEFAULT_BUDGET_SECS)
}

fn print_json(value: &Value, pretty: bool) {
    if pretty {
        println!("{}", serde_json::to_string_pretty(value).unwrap());
    } else {
        println!("{}", value);
    }
}

fn exit_code_for(err: &Error) -> ExitCode {
    match err {
        Error::NumericFailure(_) | Error::SolverFailure(_) | Error::BoundUnavailable | Error::Io(_) => {
            ExitCode::from(3)
        }
        _ => ExitCode::from(2),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {}", e);
            exit_code_for(&e)
        }
    }
}

fn run(command: Command) -> Result<()> {
    match command {
        Command::Bound { graph, t, method, pretty, dump_lp } => {
            let arg = input::GraphArg::parse(&graph)?;
            let method = BoundMethod::parse(&method)
                .ok_or_else(|| Error::Parse(format!("unknown method '{}'", method)))?;
            let report = compute_bound(&arg, t, method, dump_lp.as_deref())?;
            print_json(&report, pretty);
            Ok(())
        }
        Command::Table { id, budget } => {
            let csv = tables::render(&id, default_budget(budget))?;
            print!("{}", csv);
            Ok(())
        }
        Command::Lee { sub } => run_lee(sub),
        Command::Oracle { graph, which, t, budget, pretty } => {
            let arg = input::GraphArg::parse(&graph)?;
            let value = run_oracle(&arg, &which, t, default_budget(budget))?;
            print_json(&value, pretty);
            Ok(())
        }
    }
}

fn require_t(method: BoundMethod, t: u32, expected: u32) -> Result<()> {
    if t != expected {
        return Err(Error::BoundInapplicable(format!(
            "method {} is defined for t = {}, got t = {}",
            method.name(),
            expected,
            t
        )));
    }
    Ok(())
}

/// Third-power diagonal maximum for the chi_3 bound: walk-regular
/// families read it off the spectrum, arbitrary graphs off A^3.
fn delta3_for(arg: &input::GraphArg) -> Result<f64> {
    if arg.is_walk_regular_family() {
        let s = arg.spectrum()?;
        Ok(s.power_sum(3) / arg.vertex_count()? as f64)
    } else {
        let g = arg.build()?;
        if g.regular_degree().is_none() {
            return Err(Error::NotRegular("chi_3 closed bound needs a regular graph".into()));
        }
        Ok(walk_diagonal(&g, 3)?.column_max(3) as f64)
    }
}

fn require_regular(arg: &input::GraphArg) -> Result<()> {
    if let input::GraphArg::File(_) = arg {
        if arg.build()?.regular_degree().is_none() {
            return Err(Error::NotRegular("this bound needs a regular graph".into()));
        }
    }
    Ok(())
}

fn compute_bound(
    arg: &input::GraphArg,
    t: u32,
    method: BoundMethod,
    dump_lp: Option<&std::path::Path>,
) -> Result<Value> {
    let graph_id = arg.id();
    let report = match method {
        BoundMethod::ClosedT2General => {
            require_t(method, t, 2)?;
            let cert = chi2_closed_general(&arg.spectrum()?, arg.max_degree()?)?;
            BoundReport::new(graph_id, t, method, cert.bound_ceiled, Some(cert))
        }
        BoundMethod::ClosedT2Regular => {
            require_t(method, t, 2)?;
            require_regular(arg)?;
            let cert = chi2_closed_regular(&arg.spectrum()?, arg.vertex_count()?)?;
            BoundReport::new(graph_id, t, method, cert.bound_ceiled, Some(cert))
        }
        BoundMethod::ClosedT3Regular => {
            require_t(method, t, 3)?;
            let delta3 = delta3_for(arg)?;
            let cert = chi3_closed_regular(&arg.spectrum()?, delta3, arg.vertex_count()?)?;
            BoundReport::new(graph_id, t, method, cert.bound_ceiled, Some(cert))
        }
        BoundMethod::NgoLower | BoundMethod::NgoUpper => {
            let input::GraphArg::Hypercube(n) = arg else {
                return Err(Error::BoundInapplicable(
                    "the Johnson-type bounds apply to hypercubes (qn:<n>)".into(),
                ));
            };
            let bounds = ngo_bounds(*n, t)?;
            let value = match method {
                BoundMethod::NgoLower => bounds.lower_enhanced,
                _ => bounds.upper,
            };
            let report = BoundReport::new(graph_id, t, method, value, None);
            let mut v = report.to_json();
            if method == BoundMethod::NgoLower {
                // closed expression vs the intermediate-integer variant
                v["plain"] = json!(bounds.lower);
                v["floor_enhanced"] = json!(bounds.lower_enhanced);
            }
            return Ok(v);
        }
        BoundMethod::HypercubeT45 => {
            let input::GraphArg::Hypercube(n) = arg else {
                return Err(Error::BoundInapplicable(
                    "the quartic/quintic family applies to hypercubes (qn:<n>)".into(),
                ));
            };
            let cert = hypercube_t45_bound(*n, t)?;
            BoundReport::new(graph_id, t, method, cert.bound_ceiled, Some(cert))
        }
        BoundMethod::LpGeneral => {
            let g = arg.build()?;
            let spectrum = arg.spectrum()?;
            let outcome = distchrom::lp_general_ratio_with_spectrum(&g, &spectrum, t)?;
            if let Some(path) = dump_lp {
                dump_general(&g, &spectrum, t, &outcome, path)?;
            }
            let GeneralRatioOutcome { certificate, .. } = outcome;
            BoundReport::new(graph_id, t, method, certificate.bound_ceiled, Some(certificate))
        }
        BoundMethod::LpMinor => {
            let spectrum = arg.spectrum()?;
            let n = arg.vertex_count()?;
            if let Some(path) = dump_lp {
                let lp = distchrom::lp::minor_polynomial_problem(&spectrum, t)?;
                std::fs::write(path, lp.to_text())?;
            }
            let minor = minor_polynomial(&spectrum, t)?;
            let value = lp_minor_bound(&spectrum, t, n)?;
            let fl = (minor.trace + 1e-9).floor().max(1.0);
            let cert = RatioCertificate {
                polynomial: minor.polynomial.clone(),
                p_lambda1: 1.0,
                w_p: minor.trace / n as f64,
                lambda_p: 0.0,
                bound_plain: n as f64 / minor.trace,
                bound_floor: Some(n as f64 / fl),
                bound_ceiled: value,
                degenerate: false,
            };
            BoundReport::new(graph_id, t, method, value, Some(cert))
        }
        BoundMethod::LeeTheorem => {
            require_t(method, t, 2)?;
            let input::GraphArg::Lee(params) = arg else {
                return Err(Error::BoundInapplicable(
                    "the chi_2 classification applies to Lee graphs (lee:<n>:<q>)".into(),
                ));
            };
            let value = lee_chi2_theorem_bound(*params)?;
            BoundReport::new(graph_id, t, method, value, None)
        }
    };
    Ok(report.to_json())
}

fn dump_general(
    g: &distchrom::Graph,
    spectrum: &distchrom::Spectrum,
    t: u32,
    outcome: &GeneralRatioOutcome,
    path: &std::path::Path,
) -> Result<()> {
    let wd = walk_diagonal(g, t)?;
    let lp = distchrom::lp::general_ratio_problem(
        spectrum,
        &wd,
        t,
        outcome.vertex,
        outcome.eigenvalue_index,
    );
    let mut text = format!(
        "best subproblem: vertex {} eigenvalue index {}\n",
        outcome.vertex, outcome.eigenvalue_index
    );
    text.push_str(&lp.to_text());
    std::fs::write(path, text)?;
    Ok(())
}

fn run_oracle(arg: &input::GraphArg, which: &str, t: u32, budget: f64) -> Result<Value> {
    let graph = arg.build()?;
    let budget = SearchBudget::seconds(budget);
    match which {
        "chi" => match chi_t_exact(&graph, t, budget) {
            Ok((chi, witness)) => Ok(json!({
                "graph": arg.id(), "t": t, "which": "chi",
                "value": chi, "colors": witness.colors,
            })),
            Err(Error::Timeout { lower, upper }) => Ok(json!({
                "graph": arg.id(), "t": t, "which": "chi",
                "timeout": true, "lower": lower, "upper": upper,
            })),
            Err(e) => Err(e),
        },
        "alpha" => match alpha_t_exact(&graph, t, budget) {
            Ok((alpha, set)) => Ok(json!({
                "graph": arg.id(), "t": t, "which": "alpha",
                "value": alpha, "set": set,
            })),
            Err(Error::Timeout { lower, upper }) => Ok(json!({
                "graph": arg.id(), "t": t, "which": "alpha",
                "timeout": true, "lower": lower, "upper": upper,
            })),
            Err(e) => Err(e),
        },
        other => Err(Error::Parse(format!("expected chi or alpha, got '{}'", other))),
    }
}

fn run_lee(sub: LeeCmd) -> Result<()> {
    match sub {
        LeeCmd::Wprime { n, q, pretty } => {
            let member = w_prime_membership(n, q)?;
            print_json(&json!({ "n": n, "q": q, "member": member }), pretty);
            Ok(())
        }
        LeeCmd::Perfect { n, q, pretty } => {
            let report = perfect_code_exists(n, q)?;
            print_json(
                &json!({
                    "n": n, "q": q,
                    "exists": report.exists,
                    "radical": report.radical,
                    "radical_divides_q": report.radical_divides_q,
                    "power_divides": report.power_divides,
                }),
                pretty,
            );
            Ok(())
        }
        LeeCmd::Validate { file, pretty } => {
            let code = LeeCode::from_text(&std::fs::read_to_string(&file)?)?;
            let min_distance = if code.size() >= 2 {
                Some(code_min_distance(&code)?)
            } else {
                None
            };
            let (perfect, packing, covering, note) = match is_perfect_code(&code) {
                Ok(r) => (json!(r.perfect), json!(r.packing_radius), json!(r.covering_radius), Value::Null),
                Err(Error::TooLarge(msg)) => (Value::Null, Value::Null, Value::Null, json!(msg)),
                Err(e) => return Err(e),
            };
            print_json(
                &json!({
                    "n": code.length(), "q": code.alphabet(), "size": code.size(),
                    "min_distance": min_distance,
                    "perfect": perfect,
                    "packing_radius": packing,
                    "covering_radius": covering,
                    "note": note,
                }),
                pretty,
            );
            Ok(())
        }
    }
}
