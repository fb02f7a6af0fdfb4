//! Command-line front end: parses arguments, dispatches to the library and
//! renders JSON. Exit codes are 0 on success, 1 for usage problems and 2
//! for domain errors.

pub mod config;

use std::path::PathBuf;

use clap::{Parser, Subcommand};
use serde_json::{json, Value};

use cycres::dynamics::{char_poly, is_ergodic, per_count, spectrum_determined_with, zeta_series, IntegerMatrix};
use cycres::equivalence::{equivalent_family, real_equivalent_family};
use cycres::genfun::{abs_genfun, exp_series, g_d, series_of};
use cycres::groupring::{match_factorizations, BinomialProductJson, FgAbelianGroup};
use cycres::json::parse_rational_text;
use cycres::poly::{has_root_of_unity, parse};
use cycres::reconstruct::{conjecture_harness, reconstruct, Method, ReconstructOptions, Shape};
use cycres::resultant::{abs_sequence, sequence, ResultantSequence};
use cycres::{Error, GaussianRational};

pub use config::Config;

pub const SEED_ENV: &str = "CYCRES_SEED";

#[derive(Parser, Debug)]
#[command(name = "cycres", version, about = "Cyclic resultants of univariate polynomials")]
pub struct Cli {
    /// File of key=value settings; flags override it.
    #[arg(long, global = true)]
    pub config: Option<PathBuf>,
    /// Indented output.
    #[arg(long, global = true)]
    pub pretty: bool,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Cyclic resultants r_1..r_N.
    Seq {
        #[arg(long)]
        poly: String,
        #[arg(long, default_value_t = 10)]
        n: usize,
        /// Absolute values |r_m| (real polynomials).
        #[arg(long)]
        abs: bool,
    },
    /// All polynomials sharing the cyclic resultants of a polynomial.
    Equiv {
        #[arg(long)]
        poly: String,
        /// Real family with equal |r_m|.
        #[arg(long)]
        real: bool,
        #[arg(long, default_value_t = 0)]
        l1: usize,
        /// Number of values verified exactly for every member.
        #[arg(long, default_value_t = 12)]
        check: usize,
    },
    /// Recover a polynomial from a prefix of its sequence.
    Reconstruct {
        #[arg(long)]
        degree: usize,
        #[arg(long, value_delimiter = ',', allow_hyphen_values = true, required = true)]
        values: Vec<String>,
        #[arg(long)]
        abs: bool,
        #[arg(long)]
        monic: bool,
        /// Monic reciprocal shape (degree 6).
        #[arg(long)]
        reciprocal: bool,
        #[arg(long, default_value = "auto", value_parser = ["closed", "groebner", "newton", "auto"])]
        method: String,
    },
    /// Periodic points and zeta series of a toral endomorphism.
    Zeta {
        /// JSON file {"n": .., "entries": [[..]]}.
        #[arg(long)]
        matrix: PathBuf,
        #[arg(long, default_value_t = 10)]
        order: usize,
    },
    /// Compare two binomial products in a group ring.
    Grcheck {
        /// "rank=N;torsion=m1,m2,..."
        #[arg(long)]
        group: String,
        /// Binomial product as inline JSON or a file path.
        #[arg(long)]
        left: String,
        #[arg(long)]
        right: String,
    },
    /// Generating function G_d and its series.
    Genfun {
        #[arg(long)]
        poly: String,
        #[arg(long, default_value_t = 12)]
        order: usize,
        #[arg(long)]
        abs: bool,
    },
    /// Empirical check that d+1 values determine a monic polynomial.
    Conjecture {
        #[arg(long)]
        degree: usize,
        #[arg(long, default_value_t = 50)]
        trials: usize,
        #[arg(long)]
        seed: Option<u64>,
    },
}

impl Command {
    fn name(&self) -> &'static str {
        match self {
            Command::Seq { .. } => "seq",
            Command::Equiv { .. } => "equiv",
            Command::Reconstruct { .. } => "reconstruct",
            Command::Zeta { .. } => "zeta",
            Command::Grcheck { .. } => "grcheck",
            Command::Genfun { .. } => "genfun",
            Command::Conjecture { .. } => "conjecture",
        }
    }
}

/// Result of one invocation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Output {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

enum Failure {
    Usage(Value),
    Domain(Error, Value),
}

fn usage(code: &str, message: String) -> Failure {
    Failure::Usage(json!({"code": code, "message": message, "context": {}}))
}

fn domain(e: Error) -> Failure {
    Failure::Domain(e, json!({}))
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        domain(e)
    }
}

fn render(v: &Value, pretty: bool) -> String {
    let mut s = if pretty {
        serde_json::to_string_pretty(v)
    } else {
        serde_json::to_string(v)
    }
    .expect("JSON values always serialize");
    s.push('\n');
    s
}

fn to_value<T: serde::Serialize>(x: &T) -> Value {
    serde_json::to_value(x).expect("library types serialize")
}

fn load_config(path: &Option<PathBuf>) -> Result<Config, Failure> {
    match path {
        None => Ok(Config::default()),
        Some(p) => {
            let text = std::fs::read_to_string(p).map_err(|e| usage("io", format!("{}: {e}", p.display())))?;
            text.parse().map_err(|e: config::ConfigError| usage("config", e.to_string()))
        }
    }
}

/// Seed precedence: flag, then the environment variable, then the config.
fn resolve_seed(flag: Option<u64>, env_seed: Option<&str>, cfg: &Config) -> Result<u64, Failure> {
    if let Some(s) = flag {
        return Ok(s);
    }
    match env_seed {
        Some(text) => text
            .trim()
            .parse()
            .map_err(|e| usage("config", format!("{SEED_ENV}={text:?}: {e}"))),
        None => Ok(cfg.seed),
    }
}

fn read_json_arg(arg: &str) -> Result<String, Failure> {
    if arg.trim_start().starts_with('{') {
        Ok(arg.to_string())
    } else {
        std::fs::read_to_string(arg).map_err(|e| usage("io", format!("{arg}: {e}")))
    }
}

fn execute(cmd: &Command, cfg: &Config, env_seed: Option<&str>) -> Result<Value, Failure> {
    match cmd {
        Command::Seq { poly, n, abs } => {
            let f = parse(poly)?;
            let s = if *abs { abs_sequence(&f, *n)? } else { sequence(&f, *n)? };
            Ok(to_value(&s))
        }
        Command::Equiv { poly, real, l1, check } => {
            let g = parse(poly)?;
            let fam = if *real {
                real_equivalent_family(&g, *check)?
            } else {
                equivalent_family(&g, *l1, *check)?
            };
            let texts: Vec<String> = fam.polys().iter().map(ToString::to_string).collect();
            let mut v = to_value(&fam);
            v["polynomials"] = json!(texts);
            v["size"] = json!(fam.members.len());
            Ok(v)
        }
        Command::Reconstruct {
            degree,
            values,
            abs,
            monic,
            reciprocal,
            method,
        } => {
            let mut parsed = Vec::with_capacity(values.len());
            for t in values {
                let q = parse_rational_text(t).map_err(|m| domain(Error::InvalidArgument(m)))?;
                parsed.push(GaussianRational::real(q));
            }
            let seq = ResultantSequence::new(parsed, *abs)?;
            let shape = if *reciprocal {
                Shape::MonicReciprocal
            } else if *monic {
                Shape::Monic
            } else {
                Shape::General
            };
            let method: Method = method.parse()?;
            let opts = ReconstructOptions {
                max_denominator: cfg.max_denominator,
                newton_restarts: cfg.newton_restarts,
                seed: resolve_seed(None, env_seed, cfg)?,
            };
            let r = reconstruct(&seq, *degree, shape, method, &opts)?;
            let texts: Vec<String> = r.polynomials.iter().map(ToString::to_string).collect();
            let single = (r.polynomials.len() == 1).then(|| r.polynomials[0].clone());
            let alternatives: Vec<Value> = r
                .alternatives
                .iter()
                .map(|((e, d), p)| json!({"eps": e, "delta": d, "polynomial": p.to_string()}))
                .collect();
            Ok(json!({
                "polynomial": single.as_ref().map(ToString::to_string),
                "coeffs": single.as_ref().map(to_value),
                "solutions": texts,
                "method": r.method,
                "verified": r.verified,
                "sign_pattern": r.sign_pattern.map(|(e, d)| json!({"eps": e, "delta": d})),
                "alternatives": alternatives,
                "approx": r.approx,
            }))
        }
        Command::Zeta { matrix, order } => {
            let text = std::fs::read_to_string(matrix).map_err(|e| usage("io", format!("{}: {e}", matrix.display())))?;
            let a: IntegerMatrix = serde_json::from_str(&text).map_err(|e| domain(Error::Json(e.to_string())))?;
            let cp = char_poly(&a);
            if !is_ergodic(&a) {
                return Err(Failure::Domain(Error::NonErgodic, json!({"char_poly": cp.to_string()})));
            }
            let counts: Vec<String> = (1..=*order)
                .map(|m| per_count(&a, m).map(|c| c.to_string()))
                .collect::<cycres::Result<_>>()?;
            let z = zeta_series(&a, *order)?;
            let spectrum = spectrum_determined_with(&a, cfg.subset_tol, cfg.root_tol)?;
            Ok(json!({
                "char_poly": cp.to_string(),
                "ergodic": true,
                "per_counts": counts,
                "zeta": z,
                "spectrum": spectrum,
            }))
        }
        Command::Grcheck { group, left, right } => {
            let g = FgAbelianGroup::parse_spec(group)?;
            let parse_side = |arg: &str| -> Result<_, Failure> {
                let text = read_json_arg(arg)?;
                let j: BinomialProductJson =
                    serde_json::from_str(&text).map_err(|e| domain(Error::Json(e.to_string())))?;
                Ok(j.resolve(&g)?)
            };
            let (l, r) = (parse_side(left)?, parse_side(right)?);
            let (el, er) = (l.expand(&g), r.expand(&g));
            let equal = el == er;
            let outcome = match match_factorizations(&g, &l, &r) {
                Ok(o) => o,
                Err(e) => return Err(Failure::Domain(e, json!({"expansions_equal": equal}))),
            };
            Ok(json!({
                "group": g.spec(),
                "left_expansion": el.to_string(),
                "right_expansion": er.to_string(),
                "expansions_equal": equal,
                "outcome": outcome,
            }))
        }
        Command::Genfun { poly, order, abs } => {
            let f = parse(poly)?;
            if has_root_of_unity(&f, cfg.n_max) {
                return Err(domain(Error::RootOfUnity));
            }
            let (rep, seq) = if *abs {
                (abs_genfun(&f)?, abs_sequence(&f, (*order).max(1))?)
            } else {
                (g_d(&f)?, sequence(&f, (*order).max(1))?)
            };
            let series = series_of(&rep, *order);
            let exp = exp_series(&seq, *order)?;
            let diff = series.max_diff(&exp);
            Ok(json!({
                "rep": rep,
                "series": series,
                "exp_series": exp,
                "max_diff": diff,
                "agrees": diff <= cfg.series_tol,
            }))
        }
        Command::Conjecture { degree, trials, seed } => {
            let seed = resolve_seed(*seed, env_seed, cfg)?;
            let mut v = to_value(&conjecture_harness(*degree, *trials, seed)?);
            v["seed"] = json!(seed);
            Ok(v)
        }
    }
}

/// Runs one invocation; `env_seed` is the value of `CYCRES_SEED`, if set.
pub fn run<I, T>(args: I, env_seed: Option<&str>) -> Output
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let text = e.render().to_string();
            return if code == 0 {
                Output {
                    code,
                    stdout: text,
                    stderr: String::new(),
                }
            } else {
                Output {
                    code,
                    stdout: String::new(),
                    stderr: text,
                }
            };
        }
    };
    let result = load_config(&cli.config).and_then(|cfg| execute(&cli.command, &cfg, env_seed));
    match result {
        Ok(v) => Output {
            code: 0,
            stdout: render(&v, cli.pretty),
            stderr: String::new(),
        },
        Err(Failure::Usage(v)) => Output {
            code: 1,
            stdout: render(&v, cli.pretty),
            stderr: String::new(),
        },
        Err(Failure::Domain(e, extra)) => {
            let mut context = e.context();
            if let (Value::Object(ctx), Value::Object(more)) = (&mut context, extra) {
                ctx.extend(more);
            }
            context["command"] = json!(cli.command.name());
            let v = json!({"code": e.code(), "message": e.to_string(), "context": context});
            Output {
                code: 2,
                stdout: render(&v, cli.pretty),
                stderr: String::new(),
            }
        }
    }
}
