use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Parser, Debug)]
#[command(
    name = "acaa",
    version,
    about = "Exact computations with anticommutative antiassociative algebras"
)]
pub struct Cli {
    #[command(flatten)]
    pub global: Global,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Args, Debug, Clone)]
pub struct Global {
    /// Report format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    pub format: Format,
    /// Seed for every sampled object.
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,
    /// Number of sampled elements or cochains.
    #[arg(long, global = true, default_value_t = 20)]
    pub samples: usize,
    /// Worker threads for `enumerate` and `rep-check --h3-search`.
    #[arg(long, global = true)]
    pub jobs: Option<usize>,
    /// Write the result here instead of stdout (`free` writes the algebra file).
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
    /// Include elapsed time in the report (makes output run-dependent).
    #[arg(long, global = true)]
    pub timing: bool,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Check an identity on an algebra.
    Check {
        #[arg(long, value_enum, default_value_t = Identity::Acaa)]
        identity: Identity,
        /// Twelve comma-separated coefficients for `--identity custom`.
        #[arg(long, allow_hyphen_values = true)]
        coeffs: Option<String>,
        /// Algebra file or catalog name.
        algebra: String,
    },
    /// Build the free Acaa algebra, optionally reducing a bracket word.
    Free {
        #[arg(long)]
        generators: usize,
        /// Bracket word such as "((X1 X2) X3)" to put in normal form.
        #[arg(long)]
        word: Option<String>,
    },
    /// Isomorphism invariants (dim, derived dim, annihilator dim, cube dim).
    Fingerprint { algebra: String },
    /// Identify an Acaa algebra of dimension 2 to 5 over Q.
    Recognize { algebra: String },
    /// Count isomorphism classes of Acaa algebras over F_p by brute force.
    Enumerate {
        #[arg(long)]
        dim: usize,
        #[arg(long)]
        p: u64,
    },
    /// Adjoint matrices; without --element, checks the adjoint identities.
    Ad {
        algebra: String,
        /// Coordinates of x, comma separated.
        #[arg(long, allow_hyphen_values = true)]
        element: Option<String>,
    },
    /// Check a representation file, the adjoint representation, or search h3 representations.
    RepCheck {
        /// Representation file.
        file: Option<PathBuf>,
        /// Check the adjoint representation of this algebra instead.
        #[arg(long, conflicts_with_all = ["file", "h3_search"])]
        adjoint: Option<String>,
        /// Exhaustive search for faithful representations of h3 by matrices over F_p.
        #[arg(long, conflicts_with = "file")]
        h3_search: bool,
        #[arg(long, default_value_t = 3)]
        p: u64,
        #[arg(long, default_value_t = 3)]
        dim: usize,
    },
    /// Sampled checks of the low-degree cochain differentials.
    Cohomology {
        #[arg(long, value_enum)]
        check: CheckKind,
        /// Algebra file or catalog name.
        #[arg(long)]
        algebra: String,
        /// Check this cochain instead of sampling.
        #[arg(long)]
        cochain: Option<PathBuf>,
        /// Degrees of the basis vectors for `gmap` (free algebras are graded automatically).
        #[arg(long)]
        degrees: Option<String>,
    },
    /// Generating series of the Acaa operad.
    Series {
        #[command(subcommand)]
        action: SeriesAction,
    },
    /// Arity dimensions and the dual-operad nilpotency argument.
    Operad {
        #[command(subcommand)]
        action: OperadAction,
    },
    /// List the named algebras.
    Catalog {
        #[arg(long)]
        dim: Option<usize>,
    },
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum Identity {
    Anticommutative,
    Acaa,
    CyclicTriple,
    Jacobi,
    Antiassociative,
    LieAdmissible,
    AcaaAdmissible,
    RhoAssociative,
    Custom,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum CheckKind {
    D2d1,
    Cyclic,
    D3d2,
    Gmap,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum Convention {
    Direct,
    NegatedArgument,
}

#[derive(Subcommand, Debug)]
pub enum SeriesAction {
    /// Compositional inverse of -t + t^2/2 - t^3/6.
    Inverse {
        #[arg(long, default_value_t = 6)]
        order: usize,
        #[arg(long, value_enum, default_value_t = Convention::Direct)]
        convention: Convention,
    },
    /// g_dual(-g(-t)) - t for the Acaa operad and its dual.
    Koszul {
        #[arg(long, default_value_t = 6)]
        order: usize,
        /// Use g(-g_dual(-t)) - t instead.
        #[arg(long)]
        swap_roles: bool,
    },
}

#[derive(Subcommand, Debug)]
pub enum OperadAction {
    /// dim Acaa(n) and dim Acaa^!(n).
    Dims {
        #[arg(long, default_value_t = 6)]
        order: usize,
    },
    /// Rank of the cyclic dual relations in the skew arity-3 space.
    DualCheck {
        /// Prime to work over instead of Q.
        #[arg(long)]
        p: Option<u64>,
    },
}
