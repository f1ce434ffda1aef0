mod commands;
mod input;
mod report;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use braidkit::garside::DEFAULT_CAP;

use report::Format;

/// Braid representations on free products, link fingerprints and Garside monoids.
#[derive(Parser, Debug)]
#[command(name = "braidkit", version)]
struct Cli {
    #[command(flatten)]
    config: RunConfig,

    #[command(subcommand)]
    command: Command,
}

/// Flags shared by every subcommand.
#[derive(Args, Debug, Clone)]
pub struct RunConfig {
    /// Step budget for each reversal.
    #[arg(long, global = true, default_value_t = DEFAULT_CAP, value_parser = clap::value_parser!(u64).range(1..))]
    pub cap: u64,

    /// Norm bound of the brute-force ball oracle.
    #[arg(long, global = true, default_value_t = 4)]
    pub oracle_norm: u64,

    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,

    /// Worker threads for independent cases; 0 picks a default.
    #[arg(long, global = true, default_value_t = 0)]
    pub jobs: usize,

    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    pub format: Format,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Complemented monoids from presentation files.
    #[command(subcommand)]
    Garside(GarsideCmd),
    /// The Artin-type representation and braid word problem.
    #[command(subcommand)]
    Braid(BraidCmd),
    /// Abelianized link-group fingerprints.
    #[command(subcommand)]
    Linkinv(LinkinvCmd),
    /// Garside structures on semidirect products with braid monoids.
    #[command(subcommand)]
    Semidirect(SemidirectCmd),
    /// Wada representations of the free group.
    #[command(subcommand)]
    Wada(WadaCmd),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum SideArg {
    Left,
    Right,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum SidesArg {
    Left,
    Right,
    Both,
}

#[derive(Args, Debug)]
pub struct FileArg {
    /// Presentation file.
    #[arg(long)]
    pub file: PathBuf,
}

#[derive(Subcommand, Debug)]
pub enum GarsideCmd {
    /// Reverse a signed word.
    Reverse {
        #[command(flatten)]
        file: FileArg,
        #[arg(long, allow_hyphen_values = true)]
        word: String,
        #[arg(long, value_enum, default_value_t = SideArg::Left)]
        side: SideArg,
    },
    /// Check the cube condition on every triple of generators.
    Coherence {
        #[command(flatten)]
        file: FileArg,
        #[arg(long, value_enum, default_value_t = SidesArg::Both)]
        side: SidesArg,
    },
    /// Certify a Garside element.
    Verify {
        #[command(flatten)]
        file: FileArg,
        /// Overrides the file's `delta`.
        #[arg(long)]
        delta: Option<String>,
    },
    /// Greedy normal form of a positive word, fraction form of a signed one.
    Nf {
        #[command(flatten)]
        file: FileArg,
        #[arg(long)]
        delta: Option<String>,
        #[arg(long, allow_hyphen_values = true)]
        word: String,
    },
    /// Decide equality of two words in the group of fractions.
    Wp {
        #[command(flatten)]
        file: FileArg,
        #[arg(long)]
        delta: Option<String>,
        #[arg(long, allow_hyphen_values = true)]
        word: String,
        #[arg(long, allow_hyphen_values = true)]
        other: String,
    },
    /// Compare the engine with a brute-force ball of norm `--oracle-norm`.
    Ball {
        #[command(flatten)]
        file: FileArg,
        /// Maximum number of words enumerated.
        #[arg(long, default_value_t = 1_000_000)]
        limit: usize,
    },
}

#[derive(Args, Debug)]
pub struct RepArgs {
    /// Base group: `Z`, `Z/k` or `B<n>`.
    #[arg(long, default_value = "Z")]
    pub base: String,
    /// Distinguished element over the base alphabet.
    #[arg(long, default_value = "a", allow_hyphen_values = true)]
    pub h: String,
    /// Strand count.
    #[arg(long)]
    pub n: usize,
    /// Braid word over `s1 … s{n-1}`.
    #[arg(long, allow_hyphen_values = true)]
    pub braid: String,
}

#[derive(Subcommand, Debug)]
pub enum BraidCmd {
    /// Images of the generators of the free product, or of one element.
    Apply {
        #[command(flatten)]
        rep: RepArgs,
        /// Element over the copies alphabet, e.g. `a_1 a_2^-1`.
        #[arg(long, allow_hyphen_values = true)]
        element: Option<String>,
    },
    /// Whether a braid word is trivial.
    Trivial {
        #[arg(long)]
        n: usize,
        #[arg(long, allow_hyphen_values = true)]
        braid: String,
    },
}

#[derive(Subcommand, Debug)]
pub enum LinkinvCmd {
    /// Abelianization of the group of the closed braid.
    Fingerprint {
        #[command(flatten)]
        rep: RepArgs,
        /// Also print the presentation.
        #[arg(long)]
        presentation: bool,
    },
    /// Fingerprints across random Markov moves.
    MarkovTest {
        #[arg(long, default_value_t = 100)]
        cases: usize,
    },
}

#[derive(Args, Debug)]
pub struct SemidirectArgs {
    /// Base group: `Z` or `B<n>`.
    #[arg(long, default_value = "Z")]
    pub base: String,
    /// Garside element `D` of the base.
    #[arg(long, default_value = "a")]
    pub d: String,
    #[arg(long)]
    pub n: usize,
}

#[derive(Subcommand, Debug)]
pub enum SemidirectCmd {
    /// Print the presentation, complements and Garside element.
    Build {
        #[command(flatten)]
        args: SemidirectArgs,
    },
    /// Certify the Garside element and its auxiliary identities.
    Verify {
        #[command(flatten)]
        args: SemidirectArgs,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum WadaType {
    #[value(name = "1")]
    One,
    #[value(name = "2")]
    Two,
    #[value(name = "3")]
    Three,
}

#[derive(Subcommand, Debug)]
pub enum WadaCmd {
    /// Run the equivalence and distinction certificates.
    Check {
        /// Every certificate for every rank from 2 to `--n`.
        #[arg(long)]
        all: bool,
        #[arg(long, default_value_t = 4)]
        n: usize,
        #[arg(long, default_value_t = 1, allow_hyphen_values = true)]
        h: i64,
        /// Samples for the fixed-subgroup converse.
        #[arg(long, default_value_t = 200)]
        samples: usize,
    },
    /// Apply a braid through a Wada representation.
    Act {
        #[arg(long = "type", value_enum)]
        kind: WadaType,
        #[arg(long, default_value_t = 1, allow_hyphen_values = true)]
        h: i64,
        #[arg(long)]
        n: Option<usize>,
        #[arg(long, allow_hyphen_values = true)]
        braid: String,
        /// Print the induced matrix on the abelianization.
        #[arg(long)]
        abelianized: bool,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match &cli.command {
        Command::Garside(c) => commands::garside(&cli.config, c),
        Command::Braid(c) => commands::braid(&cli.config, c),
        Command::Linkinv(c) => commands::linkinv(&cli.config, c),
        Command::Semidirect(c) => commands::semidirect(&cli.config, c),
        Command::Wada(c) => commands::wada(&cli.config, c),
    };
    match result {
        Ok(report) => {
            print!("{}", report.render(cli.config.format));
            ExitCode::from(report.status.code())
        }
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.status.code())
        }
    }
}
