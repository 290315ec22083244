use std::process::ExitCode;

use bracket_width::{MonomialOrder, DEFAULT_MAX_STEPS};
use bracket_width_cli::{run, Command, Job};
use clap::{Parser, Subcommand, ValueEnum};

#[derive(Parser)]
#[command(
    name = "bracketwidth",
    version,
    about = "Bracket decompositions of vector fields on smooth affine curves"
)]
struct Cli {
    #[command(subcommand)]
    command: Cmd,
}

#[derive(Clone, Copy, ValueEnum)]
enum Order {
    Lex,
    Grlex,
}

#[derive(clap::Args)]
struct Common {
    /// `line`, `line minus <f>`, `plane <F>` or `space <g1>; <g2> tau <P>, <Q>, <R>`
    #[arg(long)]
    curve: String,
    #[arg(long, value_enum, default_value = "lex")]
    order: Order,
    /// Include intermediate polynomials in the output.
    #[arg(long)]
    trace: bool,
    /// Reduction-step budget for Gröbner basis work.
    #[arg(long, default_value_t = DEFAULT_MAX_STEPS)]
    max_steps: u64,
}

#[derive(Subcommand)]
enum Cmd {
    /// Validate a curve and print its certificate.
    Check {
        #[command(flatten)]
        common: Common,
    },
    /// Write target·τ as a sum of brackets.
    Decompose {
        #[command(flatten)]
        common: Common,
        #[arg(long, allow_hyphen_values = true)]
        target: String,
    },
    /// Decompose g·τ on the line and move it to `line minus f` as (g/f^2k)·τ.
    Localize {
        #[command(flatten)]
        common: Common,
        #[arg(long, allow_hyphen_values = true)]
        target: String,
        #[arg(long, default_value_t = 1)]
        k: u32,
    },
    /// Check that the given pairs sum to target·τ.
    Verify {
        #[command(flatten)]
        common: Common,
        #[arg(long, allow_hyphen_values = true)]
        target: String,
        /// One bracket `[aτ, bτ]`, written `<a>, <b>`; repeatable.
        #[arg(long = "pair", allow_hyphen_values = true)]
        pairs: Vec<String>,
    },
}

fn job(common: Common, command: Command) -> Job {
    let mut job = Job::new(command, &common.curve);
    job.order = match common.order {
        Order::Lex => MonomialOrder::Lex,
        Order::Grlex => MonomialOrder::GrLex,
    };
    job.trace = common.trace;
    job.max_steps = common.max_steps;
    job
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let job = match cli.command {
        Cmd::Check { common } => job(common, Command::Check),
        Cmd::Decompose { common, target } => {
            let mut j = job(common, Command::Decompose);
            j.target = Some(target);
            j
        }
        Cmd::Localize { common, target, k } => {
            let mut j = job(common, Command::Localize);
            j.target = Some(target);
            j.k = k;
            j
        }
        Cmd::Verify {
            common,
            target,
            pairs,
        } => {
            let mut j = job(common, Command::Verify);
            j.target = Some(target);
            j.pairs = pairs;
            j
        }
    };
    let (doc, code) = run(&job);
    for w in &doc.warnings {
        eprintln!("warning: {w}");
    }
    eprintln!("{}", doc.summary());
    println!(
        "{}",
        serde_json::to_string_pretty(&doc).expect("result document serializes")
    );
    ExitCode::from(code as u8)
}
