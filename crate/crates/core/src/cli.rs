//! Command-line front end. [`dispatch`] parses arguments, runs one subcommand and returns the
//! process exit code: 0 on success, 1 when verification finds a counterexample, 2 on usage,
//! input or configuration errors.

use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::cantor::{cantor_decode, cantor_encode, phi_full, CantorValue};
use crate::emit::write_cantor_csv;
use crate::error::{Error, Result};
use crate::interleave::{deinterleave, interleave, InterleavedPadic};
use crate::padic::{PadicPoint, TruncatedPadicInt};
use crate::superposition::{
    build_g, build_h, superpose1, superpose2_with, superposition_argument, Codomain,
    CylinderFunction, WeightConvention,
};
use crate::verify::{
    resolve_function, run_verify, Coverage, FunctionSpec, RunConfig, Suite, DEFAULT_SAMPLES,
};

#[derive(Parser, Debug)]
#[command(
    name = "padic-kas",
    version,
    about = "Exact p-adic digit codecs and single-function superpositions"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Cantor digits of a p-adic integer (digit i becomes n·dᵢ).
    Encode {
        #[arg(long)]
        x: String,
        #[arg(long, default_value_t = 2)]
        n: usize,
    },
    /// p-adic integer from Cantor digits.
    Decode {
        #[arg(long)]
        cantor: String,
        #[arg(long, default_value_t = 2)]
        n: usize,
    },
    /// The Cantor image of x with its exact rational value; --spread gives the stride-n form.
    Phi {
        #[arg(long)]
        p: Option<u32>,
        #[arg(long, default_value_t = 2)]
        n: usize,
        #[arg(long)]
        x: String,
        #[arg(long)]
        spread: bool,
    },
    /// Inverse of phi.
    Psi {
        #[arg(long)]
        cantor: String,
        #[arg(long, default_value_t = 2)]
        n: usize,
        /// Read the input as the stride-n form produced by `phi --spread`.
        #[arg(long)]
        spread: bool,
    },
    /// Digit interleave of a point, given as `(x1;x2;...)` or repeated --x.
    Interleave {
        #[arg(long, required = true)]
        x: Vec<String>,
    },
    /// Splits an interleaved value into n coordinates.
    Deinterleave {
        #[arg(long)]
        z: String,
        #[arg(long)]
        n: usize,
    },
    /// Table of the real-valued representative g as JSON.
    BuildG(BuildArgs),
    /// Table of the p-adic-valued representative h as JSON.
    BuildH(BuildArgs),
    /// Evaluates f(x) through its single-variable representative.
    Superpose {
        #[arg(long, value_parser = ["1", "2"])]
        theorem: String,
        #[command(flatten)]
        function: FunctionArgs,
        #[arg(long, required = true)]
        x: Vec<String>,
        #[arg(long, value_enum, default_value_t = Weights::Proof)]
        weights: Weights,
    },
    /// Runs verification suites.
    Verify {
        #[arg(long)]
        p: u32,
        #[arg(long)]
        n: usize,
        #[arg(long = "K")]
        k: usize,
        /// `all` or a comma-separated list.
        #[arg(long, default_value = "all")]
        suite: String,
        #[arg(long, conflicts_with = "table")]
        function: Option<String>,
        #[arg(long)]
        table: Option<PathBuf>,
        #[arg(long, default_value_t = DEFAULT_SAMPLES)]
        samples: u64,
        /// Overridden by PADIC_KAS_SEED.
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, value_enum, default_value_t = Weights::Proof)]
        weights: Weights,
        /// Writes the JSON report here.
        #[arg(long)]
        out: Option<PathBuf>,
        /// Prints the JSON report instead of the summary lines.
        #[arg(long)]
        json: bool,
    },
    /// CSV of the level-L Cantor block left endpoints.
    EmitCantor {
        #[arg(long)]
        p: u32,
        #[arg(long, default_value_t = 2)]
        n: usize,
        #[arg(long = "L")]
        level: usize,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Args, Debug)]
struct FunctionArgs {
    #[arg(long)]
    p: Option<u32>,
    #[arg(long)]
    n: Option<usize>,
    #[arg(long = "K")]
    k: Option<usize>,
    /// Builtin name: zero, proj-k, padic-sum, norm-k, norm-product, digit0-k.
    #[arg(long, conflicts_with = "table", required_unless_present = "table")]
    function: Option<String>,
    /// JSON function table.
    #[arg(long)]
    table: Option<PathBuf>,
}

#[derive(Args, Debug)]
struct BuildArgs {
    #[command(flatten)]
    function: FunctionArgs,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Weights {
    /// Weights p⁰..p^(n−1); h lives on ℤₚ.
    Proof,
    /// Weights p¹..pⁿ; h lives on p·ℤₚ.
    Paper,
}

impl From<Weights> for WeightConvention {
    fn from(w: Weights) -> Self {
        match w {
            Weights::Proof => WeightConvention::Unshifted,
            Weights::Paper => WeightConvention::Shifted,
        }
    }
}

impl FunctionArgs {
    fn load(&self, codomain: Codomain) -> Result<CylinderFunction> {
        if let Some(path) = &self.table {
            let f = CylinderFunction::load(path)?;
            let given = [
                (self.p.map(|p| p as usize), f.p() as usize, "p"),
                (self.n, f.arity(), "n"),
                (self.k, f.level(), "K"),
            ];
            for (flag, actual, name) in given {
                if flag.is_some_and(|v| v != actual) {
                    return Err(Error::Config(format!(
                        "--{name} {} disagrees with the table's {name}={actual}",
                        flag.unwrap_or_default()
                    )));
                }
            }
            if f.codomain() != codomain {
                return Err(Error::CodomainMismatch {
                    expected: codomain.name(),
                    found: f.codomain().name(),
                });
            }
            return Ok(f);
        }
        let name = self.function.as_deref().unwrap_or("zero");
        let (Some(p), Some(n), Some(k)) = (self.p, self.n, self.k) else {
            return Err(Error::Config("--function needs --p, --n and --K".into()));
        };
        resolve_function(name, p, n, k, codomain)
    }
}

fn parse_point(values: &[String]) -> Result<PadicPoint> {
    match values {
        [one] if one.trim_start().starts_with('(') => one.parse(),
        _ => PadicPoint::new(
            values
                .iter()
                .map(|v| v.parse::<TruncatedPadicInt>())
                .collect::<Result<Vec<_>>>()?,
        ),
    }
}

fn write_text(text: &str, path: Option<&Path>, out: &mut dyn Write) -> Result<()> {
    match path {
        Some(path) => std::fs::write(path, text).map_err(|e| Error::io(path, e)),
        None => writeln!(out, "{text}").map_err(|e| Error::io("<stdout>", e)),
    }
}

/// `psi` on the stride-n form: keeps positions `0, n, 2n, …`, which must be the only
/// nonzero ones.
fn unspread(c: &CantorValue) -> Result<CantorValue> {
    let n = c.arity();
    for (i, &d) in c.digits().iter().enumerate() {
        if i % n != 0 && d != 0 {
            return Err(Error::DomainViolation(format!(
                "{c} has a nonzero digit at position {i}, not a multiple of {n}"
            )));
        }
    }
    let digits = c.digits().iter().step_by(n).copied().collect();
    CantorValue::new(c.p(), n, digits)
}

enum Outcome {
    Done,
    VerificationFailed,
}

fn run(command: Command, out: &mut dyn Write) -> Result<Outcome> {
    let io = |e: std::io::Error| Error::io("<stdout>", e);
    match command {
        Command::Encode { x, n } => {
            let c = cantor_encode(&x.parse()?, n)?;
            writeln!(out, "{c}").map_err(io)?;
            writeln!(out, "{}", c.to_rational()).map_err(io)?;
        }
        Command::Decode { cantor, n } => {
            let x = cantor_decode(&CantorValue::parse(&cantor, n)?);
            writeln!(out, "{x}").map_err(io)?;
        }
        Command::Phi { p, n, x, spread } => {
            let x: TruncatedPadicInt = x.parse()?;
            if p.is_some_and(|p| p != x.p()) {
                return Err(Error::Config(format!(
                    "--p {} disagrees with x in Z_{}",
                    p.unwrap_or_default(),
                    x.p()
                )));
            }
            let c = if spread { phi_full(&x, n)? } else { cantor_encode(&x, n)? };
            writeln!(out, "{c}").map_err(io)?;
            writeln!(out, "{}", c.to_rational()).map_err(io)?;
        }
        Command::Psi { cantor, n, spread } => {
            let mut c = CantorValue::parse(&cantor, n)?;
            if spread {
                c = unspread(&c)?;
            }
            writeln!(out, "{}", cantor_decode(&c)).map_err(io)?;
        }
        Command::Interleave { x } => {
            let z = interleave(&parse_point(&x)?);
            writeln!(out, "{}", z.value()).map_err(io)?;
        }
        Command::Deinterleave { z, n } => {
            let z = InterleavedPadic::new(z.parse()?, n)?;
            for coord in deinterleave(&z).coords() {
                writeln!(out, "{coord}").map_err(io)?;
            }
        }
        Command::BuildG(args) => {
            let g = build_g(&args.function.load(Codomain::Real)?)?;
            write_text(&g.to_json(), args.out.as_deref(), out)?;
        }
        Command::BuildH(args) => {
            let h = build_h(&args.function.load(Codomain::Padic)?)?;
            write_text(&h.to_json(), args.out.as_deref(), out)?;
        }
        Command::Superpose {
            theorem,
            function,
            x,
            weights,
        } => {
            let x = parse_point(&x)?;
            if theorem == "1" {
                let g = build_g(&function.load(Codomain::Real)?)?;
                writeln!(out, "argument {}", superposition_argument(&x)?.to_rational()).map_err(io)?;
                writeln!(out, "{}", superpose1(&g, &x)?).map_err(io)?;
            } else {
                let h = build_h(&function.load(Codomain::Padic)?)?;
                let weights = weights.into();
                writeln!(out, "argument {}", h.argument(&x, weights)?).map_err(io)?;
                writeln!(out, "{}", superpose2_with(&h, &x, weights)?).map_err(io)?;
            }
        }
        Command::Verify {
            p,
            n,
            k,
            suite,
            function,
            table,
            samples,
            seed,
            weights,
            out: path,
            json,
        } => {
            let mut config = RunConfig::new(p, n, k)
                .with_suites(Suite::parse_selection(&suite)?)
                .with_samples(samples)
                .with_seed(seed)
                .with_weights(weights.into())
                .seed_from_env()?;
            config.function = match (function, table) {
                (Some(name), _) => Some(FunctionSpec::Builtin(name.parse()?)),
                (None, Some(path)) => Some(FunctionSpec::Table(path)),
                (None, None) => None,
            };
            config.output = path.clone();
            let report = run_verify(&config)?;
            if let Some(path) = &path {
                std::fs::write(path, report.to_json()).map_err(|e| Error::io(path, e))?;
            }
            if json {
                writeln!(out, "{}", report.to_json()).map_err(io)?;
            } else {
                for check in &report.checks {
                    writeln!(out, "{check}").map_err(io)?;
                    if let Some(cx) = check.failures.first() {
                        writeln!(
                            out,
                            "    first counterexample (case {}): {} with {}: {} vs {}",
                            cx.case,
                            cx.relation,
                            cx.inputs.join(" "),
                            cx.lhs,
                            cx.rhs
                        )
                        .map_err(io)?;
                    }
                }
                let sampled = report.checks.iter().any(|c| c.coverage == Coverage::Sampled);
                writeln!(
                    out,
                    "{} suite={} p={p} n={n} K={k} seed={}{}: {} cases, {} failures, {:.2?}",
                    if report.passed() { "PASS" } else { "FAIL" },
                    report.suite,
                    config.seed,
                    if sampled { " (sampled)" } else { "" },
                    report.cases(),
                    report.failure_count(),
                    report.wall_time
                )
                .map_err(io)?;
            }
            if !report.passed() {
                return Ok(Outcome::VerificationFailed);
            }
        }
        Command::EmitCantor { p, n, level, out: path } => match path {
            Some(path) => crate::emit::emit_cantor_csv(p, n, level, &path)?,
            None => write_cantor_csv(p, n, level, out)?,
        },
    }
    Ok(Outcome::Done)
}

/// Runs the command line `args` (program name first) against the given streams.
pub fn dispatch<I, S>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = S>,
    S: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() {
                let _ = write!(err, "{}", e.render());
                2
            } else {
                let _ = write!(out, "{}", e.render());
                0
            };
            return code;
        }
    };
    match run(cli.command, out) {
        Ok(Outcome::Done) => 0,
        Ok(Outcome::VerificationFailed) => 1,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            2
        }
    }
}
