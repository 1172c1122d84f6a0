//! Verification suites: exhaustive below [`EXHAUSTIVE_LIMIT`] cases per check, seeded
//! sampling above it.
//!
//! ```
//! use padic_kas::verify::{run_verify, RunConfig, Suite};
//!
//! let config = RunConfig::new(2, 2, 3).with_suites(vec![Suite::Roundtrip]);
//! let report = run_verify(&config).unwrap();
//! assert!(report.passed());
//! assert_eq!(report.check("cantor-roundtrip").unwrap().cases, 64);
//! ```

mod checks;
mod report;

use std::fmt;
use std::path::PathBuf;
use std::str::FromStr;
use std::time::Instant;

pub use checks::{replay, resolve_function};
pub use report::{
    CheckReport, Counterexample, Coverage, RunParameters, VerificationReport,
    MAX_RECORDED_FAILURES,
};

use crate::error::{Error, Result};
use crate::padic::{checked_pow, is_prime};
use crate::superposition::{Builtin, WeightConvention};

pub const EXHAUSTIVE_LIMIT: u64 = 1_000_000;
pub const DEFAULT_SAMPLES: u64 = 10_000;
pub const SEED_ENV: &str = "PADIC_KAS_SEED";

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Suite {
    /// Decode after encode, deinterleave after interleave and the reverse.
    Roundtrip,
    /// The encode, combine, extract, decode chain and carry-free placement.
    Codec,
    /// Strong triangle inequality and additive laws.
    Ultrametric,
    /// `superpose1(build_g(f), x) = f(x)` bit for bit.
    RealSuperposition,
    /// `superpose2(build_h(f), x) = f(x)` digit for digit.
    PadicSuperposition,
    /// The squared-distance bound for the arity-2 pair map.
    PairDistance,
    /// `d(interleave A, interleave B) ≤ d(A,B)ⁿ` and the deinterleave prefix bound.
    InterleaveDistance,
    /// Shared-prefix bounds for encode and extract, and order preservation of encode.
    DigitPrefix,
    /// Gap endpoints and midpoints of every built `g`.
    Extension,
    /// `g` rebuilt from the lifted function agrees with `g` at level `K`.
    Refinement,
}

impl Suite {
    pub const ALL: [Suite; 10] = [
        Suite::Roundtrip,
        Suite::Codec,
        Suite::Ultrametric,
        Suite::RealSuperposition,
        Suite::PadicSuperposition,
        Suite::PairDistance,
        Suite::InterleaveDistance,
        Suite::DigitPrefix,
        Suite::Extension,
        Suite::Refinement,
    ];

    /// Command-line name.
    pub fn name(self) -> &'static str {
        match self {
            Suite::Roundtrip => "roundtrip",
            Suite::Codec => "codec",
            Suite::Ultrametric => "ultrametric",
            Suite::RealSuperposition => "theorem1",
            Suite::PadicSuperposition => "theorem2",
            Suite::PairDistance => "lemma1",
            Suite::InterleaveDistance => "lemma2",
            Suite::DigitPrefix => "holder",
            Suite::Extension => "extension",
            Suite::Refinement => "refinement",
        }
    }

    fn alias(self) -> &'static str {
        match self {
            Suite::RealSuperposition => "real-superposition",
            Suite::PadicSuperposition => "padic-superposition",
            Suite::PairDistance => "pair-distance",
            Suite::InterleaveDistance => "interleave-distance",
            Suite::DigitPrefix => "digit-prefix",
            other => other.name(),
        }
    }

    /// `all` or a comma-separated list of names.
    pub fn parse_selection(s: &str) -> Result<Vec<Suite>> {
        if s == "all" {
            return Ok(Suite::ALL.to_vec());
        }
        let mut out = Vec::new();
        for part in s.split(',') {
            let suite: Suite = part.trim().parse()?;
            if !out.contains(&suite) {
                out.push(suite);
            }
        }
        Ok(out)
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Suite::ALL
            .into_iter()
            .find(|suite| suite.name() == s || suite.alias() == s)
            .ok_or_else(|| {
                let names: Vec<_> = Suite::ALL.iter().map(|s| s.name()).collect();
                Error::Config(format!(
                    "unknown suite '{s}' (expected all or one of {})",
                    names.join(", ")
                ))
            })
    }
}

/// The function under test in the superposition suites.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum FunctionSpec {
    Builtin(Builtin),
    /// A JSON table on disk.
    Table(PathBuf),
}

impl fmt::Display for FunctionSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FunctionSpec::Builtin(b) => write!(f, "{b}"),
            FunctionSpec::Table(path) => write!(f, "table:{}", path.display()),
        }
    }
}

#[derive(Clone, Debug)]
pub struct RunConfig {
    pub p: u32,
    pub n: usize,
    pub k: usize,
    pub function: Option<FunctionSpec>,
    pub suites: Vec<Suite>,
    /// Cases drawn per check once its case space exceeds [`EXHAUSTIVE_LIMIT`].
    pub samples: u64,
    pub seed: u64,
    pub output: Option<PathBuf>,
    pub weights: WeightConvention,
}

impl RunConfig {
    /// All suites, default sample count, seed 0.
    pub fn new(p: u32, n: usize, k: usize) -> Self {
        RunConfig {
            p,
            n,
            k,
            function: None,
            suites: Suite::ALL.to_vec(),
            samples: DEFAULT_SAMPLES,
            seed: 0,
            output: None,
            weights: WeightConvention::default(),
        }
    }

    pub fn with_suites(mut self, suites: Vec<Suite>) -> Self {
        self.suites = suites;
        self
    }

    pub fn with_function(mut self, function: FunctionSpec) -> Self {
        self.function = Some(function);
        self
    }

    pub fn with_seed(mut self, seed: u64) -> Self {
        self.seed = seed;
        self
    }

    pub fn with_samples(mut self, samples: u64) -> Self {
        self.samples = samples;
        self
    }

    pub fn with_weights(mut self, weights: WeightConvention) -> Self {
        self.weights = weights;
        self
    }

    /// Replaces the seed with `PADIC_KAS_SEED` when it is set.
    pub fn seed_from_env(mut self) -> Result<Self> {
        if let Ok(raw) = std::env::var(SEED_ENV) {
            self.seed = raw
                .trim()
                .parse()
                .map_err(|_| Error::Config(format!("{SEED_ENV}={raw} is not an unsigned integer")))?;
        }
        Ok(self)
    }

    pub fn validate(&self) -> Result<()> {
        if !is_prime(self.p as u64) {
            return Err(Error::Config(format!("p={} is not prime", self.p)));
        }
        if self.n == 0 {
            return Err(Error::Config("n must be at least 1".into()));
        }
        if self.k == 0 {
            return Err(Error::Config("K must be at least 1".into()));
        }
        // Pair spaces of points at level K+1 must index into u64.
        let widest = (2 * self.n * (self.k + 1)).max(3 * self.k);
        if checked_pow(self.p, widest).is_none() {
            return Err(Error::Config(format!(
                "p={} n={} K={} is too large to index",
                self.p, self.n, self.k
            )));
        }
        if self.suites.is_empty() {
            return Err(Error::Config("no suites selected".into()));
        }
        Ok(())
    }

    fn suite_label(&self) -> String {
        if self.suites == Suite::ALL {
            return "all".into();
        }
        let names: Vec<_> = self.suites.iter().map(|s| s.name()).collect();
        names.join(",")
    }

    fn weight_label(&self) -> &'static str {
        match self.weights {
            WeightConvention::Unshifted => "unshifted",
            WeightConvention::Shifted => "shifted",
        }
    }
}

/// Runs the selected suites in order. All randomness (sample indices and random test tables)
/// comes from one generator seeded with `config.seed`.
pub fn run_verify(config: &RunConfig) -> Result<VerificationReport> {
    config.validate()?;
    let start = Instant::now();
    let mut runner = checks::Runner::new(config)?;
    let mut reports = Vec::new();
    for &suite in &config.suites {
        reports.extend(runner.run_suite(suite)?);
    }
    Ok(VerificationReport {
        suite: config.suite_label(),
        parameters: RunParameters {
            p: config.p,
            n: config.n,
            k: config.k,
            samples: config.samples,
            seed: config.seed,
            weights: config.weight_label().into(),
            function: config.function.as_ref().map(|f| f.to_string()),
        },
        checks: reports,
        wall_time: start.elapsed(),
    })
}
