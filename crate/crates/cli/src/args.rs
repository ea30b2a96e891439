use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Parser, Debug)]
#[command(name = "markoff-lab", version, about = "Markoff triples, Cohn matrices, and extremal numbers")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
    Text,
}

#[derive(Args, Debug, Clone)]
pub struct TripleArg {
    /// Node of the extended tree, as m,m1,m2.
    #[arg(long, default_value = "5,1,2")]
    pub triple: String,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Nodes below (5,1,2) down to the given depth.
    Tree {
        #[arg(long, default_value_t = 3)]
        depth: usize,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
    },
    /// The maximal zigzag from a node, with its matrices.
    Zigzag {
        #[command(flatten)]
        t: TripleArg,
        /// Number of zigzag nodes.
        #[arg(long, default_value_t = 6)]
        depth: usize,
    },
    /// Cohn matrix and node of a triple.
    Cohn {
        #[command(flatten)]
        t: TripleArg,
    },
    /// The form F_m.
    Form {
        #[command(flatten)]
        t: TripleArg,
    },
    /// The roots of F_m(1, T) and the expansion of α_m.
    Alpha {
        #[command(flatten)]
        t: TripleArg,
    },
    /// Digits and certified enclosure of ξ_m.
    Xi {
        #[command(flatten)]
        t: TripleArg,
        #[arg(long)]
        digits: Option<usize>,
        #[arg(long)]
        precision: Option<String>,
        #[arg(long, value_enum)]
        format: Option<Format>,
    },
    /// ξ' = ξ + 3 and ξ'' = ξ − 3, and min |G_m| over a box.
    Conjugates {
        #[command(flatten)]
        t: TripleArg,
        #[arg(long, default_value = "1/10^30")]
        precision: String,
        #[arg(long = "box")]
        box_size: Option<u64>,
    },
    /// L of the periodic word Π_m, and a windowed lower bound for the
    /// critical words built from the digits of ξ_m.
    #[command(name = "spectrum-L")]
    SpectrumL {
        #[command(flatten)]
        t: TripleArg,
        #[arg(long)]
        window: Option<usize>,
    },
    /// μ(F_m) from the reduction cycle, optionally against a brute-force box.
    Mu {
        #[command(flatten)]
        t: TripleArg,
        #[arg(long = "box")]
        box_size: Option<u64>,
    },
    /// Certified q‖qξ‖ along the convergents of ξ_m, and ν(α_m).
    Nu {
        #[command(flatten)]
        t: TripleArg,
        #[arg(long, default_value_t = 300)]
        digits: usize,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
    },
    /// Best-approximation exponent diagnostics for i = 4 ..= depth.
    Diagnostics {
        #[command(flatten)]
        t: TripleArg,
        #[arg(long, default_value_t = 12)]
        depth: usize,
    },
    /// The balanced representative of ξ_m.
    Balance {
        #[command(flatten)]
        t: TripleArg,
        #[arg(long, default_value = "1/10^60")]
        precision: String,
    },
    /// Run a verification suite.
    Verify {
        #[arg(long, default_value = "all")]
        suite: String,
        #[arg(long, default_value_t = 6)]
        depth: usize,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
        /// Corrupts one Cohn matrix before checking.
        #[arg(long, hide = true)]
        inject_fault: bool,
    },
}
