//! Thin command-line front end. All work happens in the library; this file
//! only maps flags onto a job spec, prints the JSON report and sets the
//! exit code (0 = all identities hold, 1 = recorded violation, 2 = bad job).

use clap::{Args, Parser, Subcommand};
use polymac::cli;
use polymac::config::JobSpec;

#[derive(Parser)]
#[command(
    name = "polymac",
    about = "Exact weighted polytope decompositions and Euler-Maclaurin summation",
    version
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Default)]
struct CommonArgs {
    /// Builtin name (interval, square, cube, t2, simplex3), inline JSON, or
    /// a JSON file path
    #[arg(long)]
    polytope: Option<String>,
    /// Uniform literal ("1", "1/2", "root:1/4"), comma list, or "random"
    #[arg(long, allow_hyphen_values = true)]
    weights: Option<String>,
    /// "auto", "auto-vertex", or comma-separated rational coordinates
    #[arg(long, allow_hyphen_values = true)]
    epsilon: Option<String>,
    /// thm41 | thm42 | lv | bg
    #[arg(long)]
    variant: Option<String>,
    /// RNG seed for sample policies and random weights
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Also write the report (or SVG) to this path
    #[arg(long)]
    out: Option<String>,
}

#[derive(Subcommand)]
enum Command {
    /// Verify a weighted cone decomposition pointwise over the sample policy
    VerifyDecomposition {
        #[command(flatten)]
        common: CommonArgs,
    },
    /// Exact weighted polynomial sum vs. brute-force lattice enumeration
    EmPoly {
        #[command(flatten)]
        common: CommonArgs,
        /// Polynomial: shorthand like "x^2*y + 1/2", or JSON monomials
        #[arg(long, allow_hyphen_values = true)]
        poly: Option<String>,
        /// Operator truncation override (default: deg p + d + 1)
        #[arg(long)]
        k: Option<usize>,
    },
    /// One-dimensional identities with remainder
    #[command(name = "em-1d")]
    Em1d {
        #[command(flatten)]
        common: CommonArgs,
        /// interval | halfray | halfray-left | line | twisted
        #[arg(long, default_value = "interval")]
        identity: String,
        /// Spline literal: "bspline:order[:shift[:scale]]" or JSON
        #[arg(long)]
        spline: Option<String>,
        /// Twist: "-1", "1", or an exponent "j/K"
        #[arg(long, allow_hyphen_values = true)]
        lambda: Option<String>,
        /// Boundary weight (default 1/2)
        #[arg(long, allow_hyphen_values = true)]
        q: Option<String>,
        /// Right-endpoint weight for the interval identity (defaults to q)
        #[arg(long, allow_hyphen_values = true)]
        q_right: Option<String>,
        /// Left endpoint / ray base
        #[arg(long, allow_negative_numbers = true)]
        a: Option<i64>,
        /// Right endpoint for the interval identity
        #[arg(long, allow_negative_numbers = true)]
        b: Option<i64>,
        /// Remainder order for the untwisted identities
        #[arg(long)]
        m: Option<usize>,
        /// Truncation order for the twisted identity
        #[arg(long)]
        k: Option<usize>,
    },
    /// Static SVG sketch of a plane decomposition
    Sketch {
        #[command(flatten)]
        common: CommonArgs,
    },
}

type Runner = fn(&JobSpec) -> (i32, String);

fn base_spec(common: &CommonArgs) -> JobSpec {
    JobSpec {
        polytope: common.polytope.clone(),
        weights: common.weights.clone(),
        epsilon: common.epsilon.clone(),
        variant: common.variant.clone(),
        seed: common.seed,
        out: common.out.clone(),
        ..JobSpec::default()
    }
}

fn main() {
    let cli = Cli::parse();
    let (spec, runner): (JobSpec, Runner) = match &cli.command {
        Command::VerifyDecomposition { common } => {
            (base_spec(common), cli::cmd_verify_decomposition)
        }
        Command::EmPoly { common, poly, k } => {
            let mut s = base_spec(common);
            s.poly = poly.clone();
            s.k = *k;
            (s, cli::cmd_em_poly)
        }
        Command::Em1d { common, identity, spline, lambda, q, q_right, a, b, m, k } => {
            let mut s = base_spec(common);
            s.identity = Some(identity.clone());
            s.spline = spline.clone();
            s.lambda = lambda.clone();
            s.q = q.clone();
            s.q_right = q_right.clone();
            s.a = *a;
            s.b = *b;
            s.m = *m;
            s.k = *k;
            (s, cli::cmd_em_1d)
        }
        Command::Sketch { common } => (base_spec(common), cli::cmd_sketch),
    };
    let (code, report) = runner(&spec);
    println!("{report}");
    // sketch already wrote its SVG; for the other commands --out stores the
    // same JSON that went to stdout
    if !matches!(cli.command, Command::Sketch { .. }) {
        if let Some(path) = &spec.out {
            if let Err(e) = std::fs::write(path, &report) {
                eprintln!("failed to write {path}: {e}");
                std::process::exit(2);
            }
        }
    }
    std::process::exit(code);
}
