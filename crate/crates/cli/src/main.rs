//! `fricke`: exact computations on the cubic family from the command line.

mod commands;

use std::process::ExitCode;

use clap::{ArgGroup, Args, Parser, Subcommand};

#[derive(Parser, Debug)]
#[command(name = "fricke", version, about = "Exact algebra for x² + y² + z² − xyz − Px − Qy − Rz − 2")]
pub struct Cli {
    /// Print JSON instead of aligned text.
    #[arg(long, global = true)]
    pub json: bool,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Evaluate the cubic.
    #[command(subcommand)]
    Kappa(KappaCmd),
    /// Critical points and critical values.
    Singular {
        #[arg(long, default_value = "0,0,0", allow_hyphen_values = true)]
        params: String,
    },
    /// Polynomial automorphisms.
    #[command(subcommand)]
    Aut(AutCmd),
    /// Second homology of a smooth fiber.
    #[command(subcommand)]
    Homology(HomologyCmd),
    /// The link at infinity.
    #[command(subcommand)]
    Link(LinkCmd),
    /// The 24 affine lines on a smooth fiber of the cubic at parameters zero.
    Lines {
        #[arg(long, allow_hyphen_values = true)]
        t: String,
        /// Also print the intersection matrix of the five line classes.
        #[arg(long)]
        gram: bool,
    },
    /// Parameters and fiber value from four boundary traces.
    Traces {
        #[arg(long, allow_hyphen_values = true)]
        boundary: String,
    },
    /// Trace coordinates of explicit SL(2) representations.
    #[command(subcommand)]
    Witness(WitnessCmd),
    /// Smith normal form of an integer matrix, rows separated by `;`.
    Snf {
        #[arg(long, allow_hyphen_values = true)]
        matrix: String,
    },
}

#[derive(Subcommand, Debug)]
pub enum KappaCmd {
    Eval {
        #[arg(long, default_value = "0,0,0", allow_hyphen_values = true)]
        params: String,
        #[arg(long, allow_hyphen_values = true)]
        point: String,
    },
}

#[derive(Args, Debug)]
#[command(group(ArgGroup::new("input").required(true).args(["map", "word"])))]
pub struct MapInput {
    /// Three `;`-separated polynomials in x, y, z.
    #[arg(long, allow_hyphen_values = true)]
    pub map: Option<String>,
    /// A word in a b g sx sy sz t1 t2 t3, optionally ending in perm(...)flip(...).
    #[arg(long, allow_hyphen_values = true)]
    pub word: Option<String>,
    #[arg(long, default_value = "0,0,0", allow_hyphen_values = true)]
    pub params: String,
}

#[derive(Subcommand, Debug)]
pub enum AutCmd {
    /// Does the map preserve the cubic?
    Check(MapInput),
    /// The map of a word, and the image of a point under it.
    Apply {
        #[command(flatten)]
        input: MapInput,
        #[arg(long, allow_hyphen_values = true)]
        point: Option<String>,
    },
    /// Reduce to a tau word followed by a signed permutation.
    Decompose(MapInput),
}

#[derive(Subcommand, Debug)]
pub enum HomologyCmd {
    /// Matrix of a word in the vanishing-cycle basis.
    Action {
        #[arg(long, allow_hyphen_values = true)]
        word: String,
    },
    /// Intersection form.
    Form {
        #[arg(long, default_value = "vc")]
        basis: String,
    },
    /// Vanishing cycles in the alpha basis.
    ChangeOfBasis,
}

#[derive(Subcommand, Debug)]
pub enum LinkCmd {
    /// Monodromy of the torus bundle for a cycle of self-intersections.
    Monodromy {
        #[arg(long, allow_hyphen_values = true)]
        euler: String,
    },
    /// First homology of the link.
    #[command(group(ArgGroup::new("source").args(["basis", "euler"])))]
    H1 {
        /// Cokernel of the intersection form in this basis (the default, `vc`).
        #[arg(long)]
        basis: Option<String>,
        /// Torus bundle with this cycle of self-intersections.
        #[arg(long, allow_hyphen_values = true)]
        euler: Option<String>,
    },
}

#[derive(Subcommand, Debug)]
pub enum WitnessCmd {
    /// One-holed torus: `κ(tr A, tr B, tr AB) = tr [A, B]`.
    Torus {
        #[arg(long = "A", allow_hyphen_values = true)]
        a: String,
        #[arg(long = "B", allow_hyphen_values = true)]
        b: String,
    },
    /// Four-holed sphere with boundary loops D1, D2, D3 and (D1 D2 D3)⁻¹.
    Sphere {
        #[arg(long = "D1", allow_hyphen_values = true)]
        d1: String,
        #[arg(long = "D2", allow_hyphen_values = true)]
        d2: String,
        #[arg(long = "D3", allow_hyphen_values = true)]
        d3: String,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match commands::run(&cli.command) {
        Ok(out) => {
            if cli.json {
                println!("{}", serde_json::to_string_pretty(&out.json).expect("json values serialize"));
            } else {
                print!("{}", out.text);
            }
            ExitCode::SUCCESS
        }
        Err(e) => {
            let code = if e.is_parse() { 2 } else { 1 };
            if cli.json {
                let kind = if e.is_parse() { "parse" } else { "domain" };
                println!("{}", serde_json::json!({ "error": e.to_string(), "kind": kind }));
            }
            eprintln!("error: {e}");
            ExitCode::from(code)
        }
    }
}
