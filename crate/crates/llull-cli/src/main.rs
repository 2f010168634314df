//! Command-line front end: tally ballot files under a chosen method,
//! dump Llull matrices and doctrine canonical forms, and run the
//! engine's oracle cross-checks.
//!
//! Exit codes: 0 success, 1 configuration or internal error, 2 ballot
//! parse error, 3 size-cap error.

mod report;
mod verify;

use std::fs;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use llull_core::ballots::{BallotError, Profile, TruncationMode};
use llull_core::belief::BeliefError;
use llull_core::blake::{blake_canonical_form_guarded, BlakeError};
use llull_core::doctrines::{
    build_doctrine_named, default_option_names, DoctrineError, DoctrineKind, UnaryInit,
};
use llull_core::methods::{conjecture_experiment, run_method, MethodError, MethodId};
use llull_core::rational::{parse_rat, Rat};

#[derive(Parser)]
#[command(
    name = "llull",
    about = "Tally preferential and approval-disapproval ballots by belief revision under logical doctrines",
    version
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum TruncationArg {
    /// Truncated ballots abstain on unlisted options.
    Abstain,
    /// Unlisted options count as tied below everything listed.
    Ties,
}

impl From<TruncationArg> for TruncationMode {
    fn from(t: TruncationArg) -> Self {
        match t {
            TruncationArg::Abstain => TruncationMode::Abstain,
            TruncationArg::Ties => TruncationMode::CompleteAsTies,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum InitArg {
    Zero,
    Plurality,
    PluralityLast,
    Approval,
}

impl From<InitArg> for UnaryInit {
    fn from(i: InitArg) -> Self {
        match i {
            InitArg::Zero => UnaryInit::Zero,
            InitArg::Plurality => UnaryInit::Plurality,
            InitArg::PluralityLast => UnaryInit::PluralityAndLast,
            InitArg::Approval => UnaryInit::Approval,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum FormatArg {
    Text,
    Json,
}

#[derive(Args)]
struct CommonOpts {
    /// Decision margin in [0, 1], e.g. `0`, `1/5`, `0.25`.
    #[arg(long, env = "LLULL_MARGIN", default_value = "0")]
    margin: String,
    /// Interpretation of options missing from a ballot.
    #[arg(long, env = "LLULL_TRUNCATION", value_enum, default_value_t = TruncationArg::Abstain)]
    truncation: TruncationArg,
    /// Output format.
    #[arg(long, env = "LLULL_FORMAT", value_enum, default_value_t = FormatArg::Text)]
    format: FormatArg,
    /// Option-count cap for the subset-indexed computations.
    #[arg(long, env = "LLULL_CAP", default_value_t = llull_core::doctrines::DEFAULT_COMPREHENSIVE_CAP)]
    cap: usize,
}

#[derive(Subcommand)]
enum Command {
    /// Tally a ballot file under a method and report the winners.
    Tally {
        /// Ballot file path.
        ballots: String,
        /// Method id, e.g. `transitivity`, `minimax`, `plurality`,
        /// `maximin`, `symmetric-prominence`,
        /// `comprehensive-prominence`,
        /// `refined-comprehensive-prominence`, `goodness`, `cav`,
        /// `approval`, `pav`.
        #[arg(long, env = "LLULL_METHOD")]
        method: String,
        /// Override the unary initialisation where the doctrine allows
        /// a variant (defaults to the method's own).
        #[arg(long, env = "LLULL_INIT", value_enum)]
        init: Option<InitArg>,
        #[command(flatten)]
        common: CommonOpts,
    },
    /// Print the Llull matrix and score vectors of a ballot file.
    Matrix {
        ballots: String,
        #[command(flatten)]
        common: CommonOpts,
    },
    /// Print the canonical form of a doctrine over n options.
    Blake {
        /// Doctrine id: `transitivity`, `supremacy`, `prominence`,
        /// `symmetric-prominence`, `comprehensive-prominence`,
        /// `goodness`.
        doctrine: String,
        /// Number of options.
        n: usize,
        /// Literal budget for saturation.
        #[arg(long, env = "LLULL_CAP", default_value_t = llull_core::blake::DEFAULT_LITERAL_GUARD)]
        cap: usize,
    },
    /// Cross-check closed forms, the generic engine and canonical
    /// forms against each other on a ballot file, or run the
    /// randomised winner-inclusion experiment.
    Verify {
        /// Ballot file path (not needed with --conjecture).
        ballots: Option<String>,
        /// Run the randomised experiment comparing transitivity
        /// winners with refined comprehensive prominence winners.
        #[arg(long)]
        conjecture: bool,
        /// Trials for the experiment.
        #[arg(long, env = "LLULL_TRIALS", default_value_t = 1000)]
        trials: usize,
        /// Options per random profile.
        #[arg(long, default_value_t = 4)]
        options: usize,
        /// Generate complete strict rankings only.
        #[arg(long)]
        complete: bool,
        /// Experiment seed.
        #[arg(long, env = "LLULL_SEED", default_value_t = 42)]
        seed: u64,
        #[command(flatten)]
        common: CommonOpts,
    },
}

/// Process failure with the exit code it maps to.
#[derive(Debug)]
enum CliError {
    Parse(BallotError),
    Cap(String),
    Other(String),
}

impl CliError {
    fn report(&self) -> (u8, String) {
        match self {
            CliError::Parse(e) => (2, format!("ballot parse error: {e}")),
            CliError::Cap(m) => (3, m.clone()),
            CliError::Other(m) => (1, m.clone()),
        }
    }
}

impl From<BallotError> for CliError {
    fn from(e: BallotError) -> Self {
        match e {
            BallotError::Parse { .. } => CliError::Parse(e),
            BallotError::Invalid { .. } => CliError::Other(e.to_string()),
        }
    }
}

impl From<MethodError> for CliError {
    fn from(e: MethodError) -> Self {
        match e {
            MethodError::Doctrine(DoctrineError::CapExceeded { .. }) => {
                CliError::Cap(e.to_string())
            }
            other => CliError::Other(other.to_string()),
        }
    }
}

impl From<DoctrineError> for CliError {
    fn from(e: DoctrineError) -> Self {
        match e {
            DoctrineError::CapExceeded { .. } => CliError::Cap(e.to_string()),
            other => CliError::Other(other.to_string()),
        }
    }
}

impl From<BlakeError> for CliError {
    fn from(e: BlakeError) -> Self {
        match e {
            BlakeError::SizeGuardExceeded { .. } => CliError::Cap(e.to_string()),
            other => CliError::Other(other.to_string()),
        }
    }
}

impl From<BeliefError> for CliError {
    fn from(e: BeliefError) -> Self {
        CliError::Other(e.to_string())
    }
}

fn read_profile(path: &str) -> Result<Profile, CliError> {
    let text = fs::read_to_string(path)
        .map_err(|e| CliError::Other(format!("cannot read {path}: {e}")))?;
    Ok(Profile::parse(&text)?)
}

fn parse_margin(text: &str) -> Result<Rat, CliError> {
    let margin =
        parse_rat(text).ok_or_else(|| CliError::Other(format!("malformed margin `{text}`")))?;
    if margin < Rat::from_integer(0.into()) || margin > Rat::from_integer(1.into()) {
        return Err(CliError::Other(format!("margin `{text}` outside [0, 1]")));
    }
    Ok(margin)
}

fn run(cli: Cli) -> Result<(), CliError> {
    match cli.command {
        Command::Tally {
            ballots,
            method,
            init,
            common,
        } => {
            let method = MethodId::from_id(&method)
                .ok_or_else(|| CliError::Other(format!("unknown method `{method}`")))?;
            let profile = read_profile(&ballots)?;
            let margin = parse_margin(&common.margin)?;
            let result = run_method(
                method,
                &profile,
                common.truncation.into(),
                init.map(UnaryInit::from),
                &margin,
                common.cap,
            )?;
            match common.format {
                FormatArg::Text => print!("{}", report::tally_text(&result)),
                FormatArg::Json => println!("{}", report::tally_json(&result)),
            }
            Ok(())
        }
        Command::Matrix { ballots, common } => {
            let profile = read_profile(&ballots)?;
            let matrix = llull_core::ballots::llull_matrix(&profile, common.truncation.into());
            let scores = llull_core::ballots::score_vectors(&profile);
            match common.format {
                FormatArg::Text => print!("{}", report::matrix_text(&matrix, &scores)),
                FormatArg::Json => println!("{}", report::matrix_json(&matrix, &scores)),
            }
            Ok(())
        }
        Command::Blake { doctrine, n, cap } => {
            let kind = DoctrineKind::from_id(&doctrine)
                .ok_or_else(|| CliError::Other(format!("unknown doctrine `{doctrine}`")))?;
            // Reject oversized universes before materialising anything;
            // the comprehensive clause family is exponential in n.
            let literals = n * n.saturating_sub(1)
                + if kind == DoctrineKind::Transitivity {
                    0
                } else {
                    2 * n
                };
            if literals > cap {
                return Err(BlakeError::SizeGuardExceeded {
                    literals,
                    guard: cap,
                }
                .into());
            }
            let (_, d) = build_doctrine_named(kind, &default_option_names(n), n.max(12))?;
            let canonical = blake_canonical_form_guarded(&d, cap)?;
            for line in canonical.dump_lines() {
                println!("{line}");
            }
            Ok(())
        }
        Command::Verify {
            ballots,
            conjecture,
            trials,
            options,
            complete,
            seed,
            common,
        } => {
            if conjecture {
                let outcome = conjecture_experiment(trials, options, seed, complete, common.cap)?;
                println!(
                    "conjecture experiment: {} counterexamples in {} trials \
                     (options {}, {}, seed {})",
                    outcome.counterexamples,
                    outcome.trials,
                    options,
                    if complete {
                        "complete rankings"
                    } else {
                        "truncated rankings"
                    },
                    seed
                );
                if let Some(example) = outcome.first_counterexample {
                    println!("first counterexample:\n{example}");
                }
                return Ok(());
            }
            let path = ballots.ok_or_else(|| {
                CliError::Other("verify needs a ballot file unless --conjecture is given".into())
            })?;
            let profile = read_profile(&path)?;
            let checks = verify::run_checks(&profile, common.truncation.into(), common.cap)?;
            let mut ok = true;
            for check in &checks {
                println!("{check}");
                ok &= check.ok;
            }
            if ok {
                println!("all oracles agree ({} checks)", checks.len());
                Ok(())
            } else {
                Err(CliError::Other("oracle disagreement detected".into()))
            }
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            let (code, message) = e.report();
            eprintln!("llull: {message}");
            ExitCode::from(code)
        }
    }
}
