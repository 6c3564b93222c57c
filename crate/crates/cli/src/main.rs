//! `polyarc`: arc complexes of bicoloured polygons from the command line.
//!
//! Exit status is 0 on success, 1 when a verification fails (the witness is
//! printed) and 2 for unparseable or invalid input.

mod commands;
mod render;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use polyarc_core::shelling::DEFAULT_BUDGET;

#[derive(Parser, Debug)]
#[command(
    name = "polyarc",
    version,
    about = "Arc complexes of bicoloured convex and once-punctured polygons"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,

    #[command(flatten)]
    pub global: Global,
}

#[derive(Args, Debug, Clone)]
pub struct Global {
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    pub format: Format,

    /// Write the output here instead of stdout.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,

    /// Node budget for the greedy shelling search.
    #[arg(long, env = "POLYARC_BUDGET", default_value_t = DEFAULT_BUDGET, global = true)]
    pub budget: usize,

    /// Seed for tie-breaking in the greedy shelling search.
    #[arg(long, default_value_t = 0, global = true)]
    pub seed: u64,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Text,
    Json,
}

/// Which complex of the polygon to work with.
#[derive(Args, Debug, Clone, Copy)]
pub struct Which {
    /// Restrict to permitted arcs (at least one blue endpoint). The default.
    #[arg(long, conflicts_with = "full")]
    pub permitted: bool,

    /// Use every arc, ignoring the colouring.
    #[arg(long)]
    pub full: bool,
}

impl Which {
    pub fn permitted_only(self) -> bool {
        !self.full
    }
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// List the arcs of a polygon.
    Arcs {
        spec: String,
        #[command(flatten)]
        which: Which,
    },
    /// List all triangulations.
    Triangulations {
        spec: String,
        #[command(flatten)]
        which: Which,
    },
    /// Summarise the arc complex: f-vector, Euler characteristic, pseudo-manifold report.
    Complex {
        spec: String,
        #[command(flatten)]
        which: Which,
        /// Emit the complex file (one maximal face per line) instead of the summary.
        #[arg(long)]
        faces: bool,
    },
    /// Print the boundary subcomplex.
    Boundary {
        spec: String,
        #[command(flatten)]
        which: Which,
    },
    /// Print the flip graph in DOT.
    Flipgraph {
        spec: String,
        #[command(flatten)]
        which: Which,
    },
    /// Construct a shelling order and print it as an order file.
    Shell {
        spec: String,
        #[command(flatten)]
        which: Which,
        /// Search greedily instead of using the constructor.
        #[arg(long)]
        greedy: bool,
    },
    /// Check an order file with both shelling checkers.
    CheckShelling {
        spec: String,
        /// Order file; `-` reads stdin.
        order: PathBuf,
        #[command(flatten)]
        which: Which,
    },
    /// Certify the complex as a PL ball or sphere.
    Certify {
        spec: String,
        #[command(flatten)]
        which: Which,
    },
    /// Translate between a decorated polygon and its bicoloured model.
    Bridge {
        /// Decorated polygon, e.g. `H:n=3;punctured=0`.
        spec: String,
        /// Decorated arcs (`E(..)`, `V(..)`) or coloured arcs (`D(..)`, `A(..)`, `L(..)`) to translate.
        arcs: Vec<String>,
    },
    /// Draw a polygon with a triangulation as SVG.
    Render {
        spec: String,
        /// Arcs to draw, space separated; completed to a triangulation.
        #[arg(long, short = 't', default_value = "")]
        triangulation: String,
        #[command(flatten)]
        which: Which,
    },
    /// Certify every colouring over ranges of polygon sizes.
    Sweep {
        /// Convex sizes, e.g. `4..8` (inclusive).
        #[arg(long)]
        convex: Option<String>,
        /// Punctured sizes, e.g. `2..5` (inclusive).
        #[arg(long)]
        punctured: Option<String>,
        /// Keep every colouring instead of one per rotation/reflection class.
        #[arg(long)]
        all_colourings: bool,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let outcome = commands::run(&cli.command, &cli.global);
    let (text, status) = match outcome {
        Ok(o) => (o.output, o.status),
        Err(e) => {
            eprintln!("polyarc: {e}");
            return ExitCode::from(2);
        }
    };
    match &cli.global.out {
        Some(path) => {
            if let Err(e) = std::fs::write(path, &text) {
                eprintln!("polyarc: cannot write {}: {e}", path.display());
                return ExitCode::from(2);
            }
        }
        None => print!("{text}"),
    }
    ExitCode::from(status)
}
