use clap::{Parser, Subcommand};
use ncstone::commands::{self, Format, Outcome};
use ncstone_core::groupoid::DEFAULT_KB_CAP;

/// Finite non-commutative Stone duality: Boolean inverse semigroups and
/// their groupoids of prime filters.
///
/// INPUT arguments are paths to JSON files or catalog keys such as `I_3`,
/// `Rook(2,Z2)`, `I_2xI_2`, `Pair(3)` or `Comp(2,Z2,2)`.
#[derive(Parser, Debug)]
#[command(name = "ncstone", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Json, global = true)]
    format: Format,
    /// Seed for sampled output.
    #[arg(long, default_value_t = 0, global = true)]
    seed: u64,
    /// Largest number of local bisections to enumerate.
    #[arg(long, default_value_t = DEFAULT_KB_CAP, global = true)]
    cap: usize,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Build a catalog structure and print it.
    Make { key: String },
    /// The Stone groupoid G(S) of a semigroup.
    Dual { input: String },
    /// The semigroup KB(G) of local bisections of a groupoid.
    Kb { input: String },
    /// Check KB(G(S)) ≅ S for a semigroup or G(KB(G)) ≅ G for a groupoid.
    Roundtrip { input: String },
    /// Structural predicates and the semigroup/groupoid dictionary.
    Classify { input: String },
    /// Unitization of a finite semigroup, or a seeded sample from `Ifin`.
    Unitize { input: String },
    /// Quotient by the additive ideal generated by element names or indices.
    Quotient {
        input: String,
        #[arg(long, value_delimiter = ',', required = true)]
        ideal: Vec<String>,
    },
    /// Dual of a morphism file {"source": key, "target": key, "map": [...]}.
    Dualmor { file: String },
}

fn run(cli: &Cli) -> Outcome {
    let f = cli.format;
    match &cli.command {
        Command::Make { key } => commands::make(key, f),
        Command::Dual { input } => commands::dual(input, f),
        Command::Kb { input } => commands::kb_cmd(input, cli.cap, f),
        Command::Roundtrip { input } => commands::roundtrip(input),
        Command::Classify { input } => commands::classify(input, cli.cap),
        Command::Unitize { input } => commands::unitize(input, cli.seed, f),
        Command::Quotient { input, ideal } => commands::quotient_cmd(input, ideal, f),
        Command::Dualmor { file } => commands::dualmor(file, cli.cap, f),
    }
}

fn main() {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(text) => print!("{text}"),
        Err(failure) => {
            eprintln!("ncstone: {failure}");
            std::process::exit(failure.exit_code());
        }
    }
}
